//! Exhaustive commuting graphs over small prime fields.

use commuting_graph::lab::{
    cross_check_constructions, graph_stats, oracle_idempotents, oracle_square_zero,
};

fn main() -> commuting_graph::Result<()> {
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let s = graph_stats(n, p)?;
        println!("{}", s.summary());
        println!(
            "  sizes {:?} diameters {:?}",
            s.component_sizes, s.component_diameters
        );
    }
    let sq = oracle_square_zero(3, 2)?;
    let id = oracle_idempotents(3, 2)?;
    println!(
        "square-zero: {} matrices, {} violations; idempotent: {} matrices, {} violations",
        sq.subset_size,
        sq.violations.len(),
        id.subset_size,
        id.violations.len()
    );
    let cc = cross_check_constructions(3, 3, 40, 11)?;
    println!("route slack over F_3: {:?}", cc.slack_histogram);
    Ok(())
}
