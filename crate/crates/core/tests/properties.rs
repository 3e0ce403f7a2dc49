use proptest::prelude::*;

use commuting_graph::field::{
    ApproxReal, Field, GaussianRational, PrimeField, Rational, Tolerance,
};
use commuting_graph::io::certificate_to_json;
use commuting_graph::lab::{bfs_distance, FiniteSpace};
use commuting_graph::matrix::{centralizer_basis, joint_centralizer_noncentral, Matrix};
use commuting_graph::path::generate::{random_blocks, rng_from_seed, SpectralClass};
use commuting_graph::path::{
    annihilator_witness, connect, generate_with_spectrum, midpoint_idempotents, rank_one_neighbor,
    rank_two_neighbor, Route,
};
use commuting_graph::spectral::{
    canonical_order, characteristic_polynomial, complex_embed, gaussian_spectrum, real_jordan_form,
    JordanBlock,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn int_matrix(n: usize, range: i64) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(-range..=range, n * n)
        .prop_map(move |v| Matrix::from_fn(n, (), |i, j| Rational::from_integer(v[i * n + j])))
}

fn gaussian_matrix(k: usize) -> impl Strategy<Value = Matrix<GaussianRational>> {
    proptest::collection::vec((-4i64..=4, -4i64..=4), k * k).prop_map(move |v| {
        Matrix::from_fn(k, (), |i, j| {
            let (a, b) = v[i * k + j];
            GaussianRational::from_ints(a, b)
        })
    })
}

fn class_for(n: usize, pick: u8) -> SpectralClass {
    match (pick % 3, n.is_multiple_of(2), n >= 3) {
        (1, true, _) => SpectralClass::Complex,
        (2, _, true) => SpectralClass::Mixed,
        _ => SpectralClass::Real,
    }
}

/// A seeded non-scalar matrix with a supported spectrum.
fn vertex(n: usize, class: SpectralClass, seed: u64) -> Matrix<Rational> {
    let mut rng = rng_from_seed(seed);
    loop {
        let blocks = random_blocks(n, class, &mut rng).unwrap();
        let a = generate_with_spectrum(n, &blocks, seed).unwrap();
        if !a.is_scalar() {
            return a;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if !a.is_zero() {
            prop_assert!((a.clone() * a.try_inv().unwrap()).is_one());
        }
        prop_assert!(*a.denom() >= 1.into());
    }

    #[test]
    fn gaussian_field_axioms(z in gaussian(), w in gaussian(), u in gaussian()) {
        prop_assert_eq!(z.clone() * (w.clone() + u.clone()), z.clone() * w.clone() + z.clone() * u);
        prop_assert_eq!(z.conj().conj(), z.clone());
        prop_assert_eq!((z.clone() * w.clone()).conj(), z.conj() * w.conj());
        if !z.is_zero() {
            prop_assert!((z.clone() * z.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u32, 3, 5, 7, 101, 65521]), a in any::<i64>(), b in any::<i64>()) {
        let f = PrimeField::new(p).unwrap();
        let (x, y) = (f.element(a), f.element(b));
        prop_assert!(x.value() < p);
        prop_assert_eq!(x * (y + f.element(1)), x * y + x);
        if !x.is_zero() {
            prop_assert!((x * x.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn approx_equality_reflexive_symmetric(x in -1e6f64..1e6, eps in -1e-3f64..1e-3) {
        let tol = Tolerance::default();
        let (a, b) = (ApproxReal::new(x, tol).unwrap(), ApproxReal::new(x + eps, tol).unwrap());
        prop_assert!(a == a);
        prop_assert_eq!(a == b, b == a);
    }

    #[test]
    fn rank_nullity(a in int_matrix(4, 3)) {
        prop_assert_eq!(a.rank().unwrap() + a.kernel_basis().unwrap().dim(), 4);
    }

    #[test]
    fn cayley_hamilton(a in int_matrix(4, 5)) {
        prop_assert!(characteristic_polynomial(&a).eval_matrix(&a).is_zero());
    }

    #[test]
    fn embedding_is_a_homomorphism(
        (e, f) in (2usize..=3).prop_flat_map(|k| (gaussian_matrix(k), gaussian_matrix(k)))
    ) {
        prop_assert_eq!(complex_embed(&(&e * &f)), &complex_embed(&e) * &complex_embed(&f));
        prop_assert_eq!(complex_embed(&(&e + &f)), &complex_embed(&e) + &complex_embed(&f));
        prop_assert_eq!(complex_embed(&e).rank().unwrap(), 2 * e.rank().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn centralizer_contains_identity(a in int_matrix(3, 3)) {
        let basis = centralizer_basis(&a).unwrap();
        prop_assert!(basis.len() >= 3);
        let stacked: Vec<Vec<Rational>> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let span = commuting_graph::matrix::SubspaceBasis::new(9, stacked).unwrap();
        prop_assert!(span.contains(Matrix::<Rational>::identity(3, ()).entries()));
    }

    #[test]
    fn rank_one_pairs_have_noncentral_joint_centralizer(
        n in 3usize..=5,
        xs in proptest::collection::vec(-2i64..=2, 20),
    ) {
        let v = |o: usize| (0..n).map(|i| Rational::from_integer(xs[(o + i) % 20])).collect::<Vec<_>>();
        let (x, y) = (Matrix::outer((), &v(0), &v(5)).unwrap(), Matrix::outer((), &v(10), &v(15)).unwrap());
        prop_assume!(!x.is_zero() && !y.is_zero());
        // rank one in n ≥ 3 always leaves both kernel intersections nontrivial
        let w = joint_centralizer_noncentral(&x, &y).unwrap();
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(!w.is_scalar() && &w * &x == &x * &w && &w * &y == &y * &w);
        let z = annihilator_witness(&x, &y).unwrap();
        prop_assert!(!z.is_scalar() && &z * &x == &x * &z && &z * &y == &y * &z);
    }

    #[test]
    fn jordan_round_trip(n in prop::sample::select(vec![2usize, 3, 4, 6]), pick in any::<u8>(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let mut blocks = random_blocks(n, class_for(n, pick), &mut rng).unwrap();
        let a = generate_with_spectrum(n, &blocks, seed).unwrap();
        let form = real_jordan_form(&a).unwrap();
        canonical_order(&mut blocks);
        prop_assert_eq!(&form.blocks, &blocks);
        prop_assert_eq!(form.reconstruct().unwrap(), a);
    }

    #[test]
    fn spectrum_is_closed_under_conjugation(n in 2usize..=6, pick in any::<u8>(), seed in any::<u64>()) {
        let a = vertex(n, class_for(n, pick), seed);
        let s = gaussian_spectrum(&a).unwrap();
        prop_assert_eq!(s.total_multiplicity(), n);
        for (z, m) in s.entries() {
            prop_assert_eq!(s.multiplicity_of(&z.conj()), *m);
        }
    }

    #[test]
    fn witnesses_have_exact_rank(n in 2usize..=6, seed in any::<u64>()) {
        let a = vertex(n, SpectralClass::Real, seed);
        let x = rank_one_neighbor(&a).unwrap();
        prop_assert_eq!(x.rank().unwrap(), 1);
        prop_assert!(&a * &x == &x * &a);
        let m = 2 * (1 + n % 3);
        let b = vertex(m, SpectralClass::Complex, seed);
        let y = rank_two_neighbor(&b).unwrap();
        prop_assert_eq!(y.rank().unwrap(), 2);
        prop_assert!(&b * &y == &y * &b);
    }

    #[test]
    fn idempotent_midpoints_commute(n in 3usize..=4, k in 1usize..=3, l in 1usize..=3, seed in any::<u64>()) {
        let proj = |rank: usize, seed| {
            let blocks: Vec<_> = (0..n).map(|i| JordanBlock::real((i < rank) as i64, 1)).collect();
            generate_with_spectrum(n, &blocks, seed).unwrap()
        };
        let (p, q) = (proj(k.min(n - 1), seed), proj(l.min(n - 1), seed ^ 1));
        prop_assert!(&p * &p == p && &q * &q == q);
        let w = midpoint_idempotents(&p, &q).unwrap();
        prop_assert!(!w.is_scalar() && &w * &p == &p * &w && &w * &q == &q * &w);
    }

    #[test]
    fn certificate_length_bounds(n in 3usize..=6, pa in any::<u8>(), pb in any::<u8>(), seed in any::<u64>()) {
        let a = vertex(n, class_for(n, pa), seed);
        let b = vertex(n, class_for(n, pb), seed.wrapping_add(1));
        prop_assume!(a != b);
        let cert = connect(&a, &b).unwrap();
        prop_assert!(cert.verify_endpoints(&a, &b).ok());
        let limit = if n == 4 && cert.route() == Route::Case5 { 5 } else { 4 };
        prop_assert!(cert.length() <= limit);
        prop_assert!(cert.vertices().iter().all(|v| !v.is_scalar()));
    }

    #[test]
    fn construction_is_deterministic(n in 3usize..=5, seed in any::<u64>()) {
        let a = vertex(n, class_for(n, 2), seed);
        let b = vertex(n, class_for(n, 0), seed.wrapping_mul(3));
        prop_assume!(a != b);
        let run = || serde_json::to_string(&certificate_to_json(&connect(&a, &b).unwrap())).unwrap();
        prop_assert_eq!(run(), run());
        prop_assert_eq!(vertex(n, SpectralClass::Real, seed), vertex(n, SpectralClass::Real, seed));
    }

    #[test]
    fn encoding_round_trips(idx in 0u32..512) {
        let s = FiniteSpace::new(3, 2).unwrap();
        prop_assert_eq!(s.index_of(&s.matrix(idx)).unwrap(), idx);
    }

    #[test]
    fn bfs_is_symmetric(a in 0u32..81, b in 0u32..81) {
        let s = FiniteSpace::new(2, 3).unwrap();
        prop_assume!(!s.is_scalar(a) && !s.is_scalar(b));
        prop_assert_eq!(bfs_distance(&s, a, b).unwrap(), bfs_distance(&s, b, a).unwrap());
    }
}

#[test]
fn adjacency_sound_at_order_two() {
    let s = FiniteSpace::new(2, 2).unwrap();
    let verts: Vec<u32> = s.noncentral().collect();
    for &u in &verts {
        for &v in &verts {
            if u == v {
                continue;
            }
            let d = bfs_distance(&s, u, v).unwrap();
            assert_eq!(d == Some(1), s.commutes(u, v), "{u} {v}");
        }
    }
}
