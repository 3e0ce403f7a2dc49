use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::space::FiniteSpace;
use crate::error::{Error, Result};

/// Exact distance in the commuting graph of `M_n(F_p)`, `None` when the
/// two lie in different components. Adjacency is tested on the fly.
pub fn bfs_distance(space: &FiniteSpace, a: u32, b: u32) -> Result<Option<u32>> {
    for v in [a, b] {
        if v as usize >= space.size() {
            return Err(Error::input(format!("index {v} out of range")));
        }
        if space.is_scalar(v) {
            return Err(Error::input(format!("vertex {v} is scalar")));
        }
    }
    if a == b {
        return Ok(Some(0));
    }
    let mut unvisited = FixedBitSet::with_capacity(space.size());
    for v in space.noncentral() {
        unvisited.insert(v as usize);
    }
    unvisited.set(a as usize, false);
    let mut frontier = vec![a];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let candidates: Vec<u32> = unvisited.ones().map(|v| v as u32).collect();
        let next: Vec<u32> = candidates
            .into_par_iter()
            .filter(|&u| frontier.iter().any(|&f| space.commutes(u, f)))
            .collect();
        if next.contains(&b) {
            return Ok(Some(depth));
        }
        for &v in &next {
            unvisited.set(v as usize, false);
        }
        frontier = next;
    }
    Ok(None)
}

/// Non-central vertices and their neighbors, by position in `vertices`.
pub(crate) struct Adjacency {
    pub vertices: Vec<u32>,
    pub neighbors: Vec<Vec<u32>>,
}

impl Adjacency {
    pub fn build(space: &FiniteSpace) -> Self {
        let vertices: Vec<u32> = space.noncentral().collect();
        let neighbors = (0..vertices.len())
            .into_par_iter()
            .map(|i| {
                (0..vertices.len() as u32)
                    .filter(|&j| {
                        j as usize != i && space.commutes(vertices[i], vertices[j as usize])
                    })
                    .collect()
            })
            .collect();
        Adjacency {
            vertices,
            neighbors,
        }
    }

    /// Distances from `source`; `u32::MAX` marks unreachable.
    pub fn distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertices.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Component structure and exact diameters of a commuting graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub p: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// Sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// Diameter of each component in the order of `component_sizes`;
    /// isolated vertices have diameter 0.
    pub component_diameters: Vec<u32>,
    /// Eccentricity (within its component) → number of vertices.
    pub eccentricity_histogram: BTreeMap<u32, usize>,
    pub elapsed_ms: u128,
}

impl GraphStats {
    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn diameter(&self) -> Option<u32> {
        if self.is_connected() {
            self.component_diameters.first().copied()
        } else {
            None
        }
    }

    pub fn summary(&self) -> String {
        let diam = match self.diameter() {
            Some(d) => d.to_string(),
            None => "infinite".into(),
        };
        format!(
            "M_{}(F_{}): {} vertices, {} edges, {} component(s), diameter {}",
            self.n, self.p, self.vertex_count, self.edge_count, self.component_count, diam
        )
    }
}

/// Builds the whole graph and runs a search from every vertex.
pub fn graph_stats(n: usize, p: u32) -> Result<GraphStats> {
    let start = Instant::now();
    let space = FiniteSpace::new(n, p)?;
    let adj = Adjacency::build(&space);
    let count = adj.vertices.len();
    let ecc: Vec<(usize, u32)> = (0..count)
        .into_par_iter()
        .map(|s| {
            let d = adj.distances(s);
            let root = d
                .iter()
                .position(|&x| x != u32::MAX)
                .expect("source reached");
            let e = d
                .iter()
                .filter(|&&x| x != u32::MAX)
                .max()
                .copied()
                .unwrap_or(0);
            (root, e)
        })
        .collect();
    let mut components: BTreeMap<usize, (usize, u32)> = BTreeMap::new();
    let mut histogram = BTreeMap::new();
    for &(root, e) in &ecc {
        let c = components.entry(root).or_insert((0, 0));
        c.0 += 1;
        c.1 = c.1.max(e);
        *histogram.entry(e).or_insert(0) += 1;
    }
    let mut comps: Vec<(usize, u32)> = components.into_values().collect();
    comps.sort_by(|x, y| y.cmp(x));
    Ok(GraphStats {
        n,
        p,
        vertex_count: count,
        edge_count: adj.neighbors.iter().map(Vec::len).sum::<usize>() / 2,
        component_count: comps.len(),
        component_sizes: comps.iter().map(|c| c.0).collect(),
        component_diameters: comps.iter().map(|c| c.1).collect(),
        eccentricity_histogram: histogram,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `N(v)` over all indices of the space, scalars excluded.
pub(crate) fn neighbor_set(space: &FiniteSpace, v: u32) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(space.size());
    for u in space.noncentral() {
        if u != v && space.commutes(u, v) {
            set.insert(u as usize);
        }
    }
    set
}
