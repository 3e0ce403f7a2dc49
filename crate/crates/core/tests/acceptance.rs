//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use commuting_graph::field::{GaussianRational, Rational, Tolerance};
use commuting_graph::lab::{graph_stats, oracle_idempotents, oracle_square_zero};
use commuting_graph::matrix::Matrix;
use commuting_graph::path::float::random_well_conditioned;
use commuting_graph::path::generate::{random_blocks, rng_from_seed, shape_blocks, SpectralClass};
use commuting_graph::path::{
    certify_lower_bound, connect, connect_float, generate_with_config, generate_with_spectrum,
    rank_one_neighbor, rank_two_neighbor, GeneratorConfig, Residual, Route,
};
use commuting_graph::spectral::{canonical_order, complex_embed, real_jordan_form, Shape4x4};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: commuting_graph::Error) -> String {
    e.to_string()
}

/// A non-scalar matrix with a random spectrum of the given class.
fn vertex(n: usize, class: SpectralClass, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    loop {
        let blocks = random_blocks(n, class, rng).expect("valid class");
        let a = generate_with_spectrum(n, &blocks, rng.random()).expect("valid blocks");
        if !a.is_scalar() {
            return a;
        }
    }
}

fn show_routes(routes: &BTreeMap<Route, usize>) -> String {
    routes
        .iter()
        .map(|(r, c)| format!("{r} {c}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn classes_for(n: usize) -> Vec<SpectralClass> {
    let mut c = vec![SpectralClass::Real, SpectralClass::Mixed];
    if n.is_multiple_of(2) {
        c.push(SpectralClass::Complex);
    }
    c
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut routes: BTreeMap<Route, usize> = BTreeMap::new();
    for n in [3, 5, 6] {
        let mut rng = rng_from_seed(1000 + n as u64);
        let classes = classes_for(n);
        for i in 0..200 {
            let a = vertex(n, classes[i % classes.len()], &mut rng);
            let b = vertex(n, classes[(i / classes.len()) % classes.len()], &mut rng);
            if a == b {
                continue;
            }
            let cert = connect(&a, &b).map_err(err)?;
            ensure(cert.length() <= 4, || {
                format!("n={n} pair {i}: length {}", cert.length())
            })?;
            ensure(cert.verify_endpoints(&a, &b).ok(), || {
                format!("n={n} pair {i} failed")
            })?;
            *routes.entry(cert.route()).or_insert(0) += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "600 pairs in {elapsed:.1?}; {}",
        show_routes(&routes)
    ))
}

fn criterion_2() -> Outcome {
    use Shape4x4::*;
    let shapes = [PairRepeated, PairDistinct, Nondiagonalizable];
    let combos: Vec<(Shape4x4, Shape4x4)> = (0..3)
        .flat_map(|i| (i..3).map(move |j| (shapes[i], shapes[j])))
        .collect();
    let mut rng = rng_from_seed(4444);
    let mut routes: BTreeMap<Route, usize> = BTreeMap::new();
    for i in 0..200 {
        let (a, b) = match i % 8 {
            k @ 0..=5 => {
                let (sa, sb) = combos[k];
                let mut draw = |s| loop {
                    let m = generate_with_spectrum(4, &shape_blocks(s, &mut rng), rng.random())
                        .expect("valid blocks");
                    if !m.is_scalar() {
                        return m;
                    }
                };
                let (a, b) = (draw(sa), draw(sb));
                // both orders of each shape pair
                if (i / 8) % 2 == 0 {
                    (a, b)
                } else {
                    (b, a)
                }
            }
            6 => (
                vertex(4, SpectralClass::Real, &mut rng),
                vertex(4, SpectralClass::Complex, &mut rng),
            ),
            _ => (
                vertex(4, SpectralClass::Mixed, &mut rng),
                vertex(4, SpectralClass::Mixed, &mut rng),
            ),
        };
        if a == b {
            continue;
        }
        let cert = connect(&a, &b).map_err(err)?;
        ensure(cert.verify_endpoints(&a, &b).ok(), || {
            format!("pair {i} failed")
        })?;
        let limit = if cert.route() == Route::Case5 { 5 } else { 4 };
        ensure(cert.length() <= limit, || {
            format!("pair {i}: {} length {}", cert.route(), cert.length())
        })?;
        *routes.entry(cert.route()).or_insert(0) += 1;
    }
    for case in [
        Route::Case1,
        Route::Case2,
        Route::Case3,
        Route::Case4,
        Route::Case5,
        Route::Case6,
    ] {
        ensure(routes.contains_key(&case), || {
            format!("{case} never exercised")
        })?;
    }
    let case5 = routes.get(&Route::Case5).copied().unwrap_or(0);
    Ok(format!(
        "{}; case5 paths {case5} of 200",
        show_routes(&routes)
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = oracle_square_zero(3, 2).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(r.passed(), || format!("{} violations", r.violations.len()))?;
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} matrices, {} ordered pairs, {elapsed:.1?}",
        r.subset_size, r.pairs_checked
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = oracle_idempotents(3, 2).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(r.passed(), || format!("{} violations", r.violations.len()))?;
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} matrices, {} ordered pairs, {elapsed:.1?}",
        r.subset_size, r.pairs_checked
    ))
}

fn criterion_5() -> Outcome {
    let mut out = Vec::new();
    for p in [2, 3] {
        let s = graph_stats(2, p).map_err(err)?;
        ensure(s.component_count >= 2, || {
            format!("M_2(F_{p}) has one component")
        })?;
        out.push(format!("M_2(F_{p}): {} components", s.component_count));
    }
    Ok(out.join(", "))
}

fn gaussian_matrix(k: usize, rng: &mut ChaCha8Rng) -> Matrix<GaussianRational> {
    Matrix::from_fn(k, (), |_, _| {
        GaussianRational::new(
            Rational::new(rng.random_range(-5..=5), rng.random_range(1..=3)),
            Rational::new(rng.random_range(-5..=5), rng.random_range(1..=3)),
        )
    })
}

fn low_rank_gaussian(k: usize, rng: &mut ChaCha8Rng) -> Matrix<GaussianRational> {
    let r = rng.random_range(1..=k);
    let mut m = Matrix::zeros(k, ());
    for _ in 0..r {
        let x: Vec<_> = (0..k)
            .map(|_| {
                GaussianRational::from_ints(rng.random_range(-3..=3), rng.random_range(-3..=3))
            })
            .collect();
        let y: Vec<_> = (0..k)
            .map(|_| {
                GaussianRational::from_ints(rng.random_range(-3..=3), rng.random_range(-3..=3))
            })
            .collect();
        m = &m + &Matrix::outer((), &x, &y).expect("same length");
    }
    m
}

fn criterion_6() -> Outcome {
    let mut rng = rng_from_seed(6);
    for k in [2, 3] {
        for i in 0..100 {
            let (e, f) = (gaussian_matrix(k, &mut rng), gaussian_matrix(k, &mut rng));
            let (pe, pf) = (complex_embed(&e), complex_embed(&f));
            ensure(complex_embed(&(&e * &f)) == &pe * &pf, || {
                format!("k={k} pair {i}: product")
            })?;
            ensure(complex_embed(&(&e + &f)) == &pe + &pf, || {
                format!("k={k} pair {i}: sum")
            })?;
        }
    }
    let mut ranks = BTreeMap::new();
    for i in 0..100 {
        let r = low_rank_gaussian(2 + i % 2, &mut rng);
        let (rr, rp) = (
            r.rank().map_err(err)?,
            complex_embed(&r).rank().map_err(err)?,
        );
        ensure(rp == 2 * rr, || {
            format!("sample {i}: rank {rr} but embedded rank {rp}")
        })?;
        *ranks.entry(rr).or_insert(0) += 1;
    }
    Ok(format!(
        "200 pairs homomorphic, rank doubling on 100 samples (ranks {ranks:?})"
    ))
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for n in [2, 4, 6] {
        let mut rng = rng_from_seed(700 + n as u64);
        let mut classes = vec![SpectralClass::Real, SpectralClass::Complex];
        if n >= 3 {
            classes.push(SpectralClass::Mixed);
        }
        let config = GeneratorConfig::for_order(n);
        for i in 0..100 {
            let mut blocks = random_blocks(n, classes[i % classes.len()], &mut rng).map_err(err)?;
            let (a, _) = generate_with_config(n, &blocks, rng.random(), &config).map_err(err)?;
            let form = real_jordan_form(&a).map_err(err)?;
            ensure(form.reconstruct().map_err(err)? == a, || {
                format!("n={n} sample {i}: reconstruction")
            })?;
            canonical_order(&mut blocks);
            ensure(form.blocks == blocks, || {
                format!("n={n} sample {i}: blocks {:?} vs {:?}", form.blocks, blocks)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} instances round trip"))
}

fn criterion_8() -> Outcome {
    let mut rng = rng_from_seed(8);
    for i in 0..200 {
        let n = rng.random_range(2..=6);
        let class = if n >= 3 && i % 2 == 1 {
            SpectralClass::Mixed
        } else {
            SpectralClass::Real
        };
        let a = vertex(n, class, &mut rng);
        let x = rank_one_neighbor(&a).map_err(err)?;
        ensure(x.rank().map_err(err)? == 1, || {
            format!("rank-one sample {i}")
        })?;
        ensure(&a * &x == &x * &a, || {
            format!("rank-one sample {i} does not commute")
        })?;
    }
    for i in 0..200 {
        let n = 2 * rng.random_range(1..=3);
        let a = vertex(n, SpectralClass::Complex, &mut rng);
        let x = rank_two_neighbor(&a).map_err(err)?;
        ensure(x.rank().map_err(err)? == 2, || {
            format!("rank-two sample {i}")
        })?;
        ensure(&a * &x == &x * &a, || {
            format!("rank-two sample {i} does not commute")
        })?;
    }
    Ok("200 rank-one and 200 rank-two witnesses".into())
}

fn criterion_9() -> Outcome {
    let a = Matrix::<Rational>::from_ints(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]])
        .map_err(err)?;
    let b = Matrix::<Rational>::from_ints(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])
        .map_err(err)?;
    let bound = certify_lower_bound(&a, &b).map_err(err)?;
    let cert = connect(&a, &b).map_err(err)?;
    ensure(bound.bound == 3, || format!("lower bound {}", bound.bound))?;
    ensure(
        cert.length() == 4 && cert.verify_endpoints(&a, &b).ok(),
        || format!("path length {}", cert.length()),
    )?;
    Ok("3 <= d <= 4".into())
}

fn criterion_10() -> Outcome {
    let tol = Tolerance::default();
    let mut worst: f64 = 0.0;
    for n in [4, 6] {
        let mut rng = rng_from_seed(10 + n as u64);
        for i in 0..100 {
            let a = random_well_conditioned(n, tol, &mut rng).map_err(err)?;
            let b = random_well_conditioned(n, tol, &mut rng).map_err(err)?;
            let cert = connect_float(&a, &b).map_err(err)?;
            ensure(cert.verify().ok(), || format!("n={n} pair {i} failed"))?;
            for r in cert.edge_residuals() {
                let Residual::Float(x) = *r else {
                    return Err("exact residual in float mode".into());
                };
                ensure(x <= 1e-9, || format!("n={n} pair {i}: residual {x:e}"))?;
                worst = worst.max(x);
            }
        }
    }
    Ok(format!("200 pairs, worst residual {worst:.2e}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("path length <= 4 for n = 3, 5, 6", criterion_1),
        ("path length <= 5 for n = 4", criterion_2),
        (
            "square-zero pairs in M_3(F_2) at distance <= 2",
            criterion_3,
        ),
        ("idempotent pairs in M_3(F_2) at distance <= 2", criterion_4),
        ("M_2(F_p) disconnected", criterion_5),
        ("complex embedding is a homomorphism", criterion_6),
        ("real Jordan form round trip", criterion_7),
        ("rank witnesses", criterion_8),
        ("distance bracketing", criterion_9),
        ("float-mode residuals", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{t:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{t:.1?}]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
