//! Property-based invariants across the layers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use reidemeister::catalog;
use reidemeister::finite::{all_automorphisms, builtins, twisted_classes, FiniteAutomorphism};
use reidemeister::lie::{format_algebra, parse_algebra, AutomorphismMatrix, LieAlgebra, Subspace};
use reidemeister::linalg::{
    format_matrix, parse_int_matrix, parse_matrix, rat, rational_roots, smith_normal_form, Matrix,
    RatPoly, Rational, UniPoly,
};
use reidemeister::reidemeister::{classify_solvable, torus_classify, VerdictKind};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn square(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn sized_square(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(square)
}

fn int_matrix(max: usize) -> impl Strategy<Value = Matrix<BigInt>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-8i64..=8, r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

/// Upper triangular with ±1 diagonal, hence unimodular.
fn unimodular(n: usize) -> impl Strategy<Value = Matrix<BigInt>> {
    (
        prop::collection::vec(-3i64..=3, n * n),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(move |(v, s)| {
            Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => BigInt::from(v[i * n + j]),
                std::cmp::Ordering::Equal => BigInt::from(if s[i] { 1 } else { -1 }),
                std::cmp::Ordering::Greater => BigInt::zero(),
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn char_poly_is_a_similarity_invariant((a, p) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        if let Some(p_inv) = p.inverse() {
            let conj = &(&p * &a) * &p_inv;
            prop_assert_eq!(conj.char_poly().unwrap(), a.char_poly().unwrap());
        }
    }

    #[test]
    fn rank_nullity(a in sized_square(5)) {
        prop_assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
        for v in a.kernel_basis() {
            prop_assert!(a.mul_vec(&v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip(a in sized_square(4)) {
        match a.inverse() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.det().unwrap().is_zero()),
        }
    }

    #[test]
    fn smith_form_recomposes(a in int_matrix(5)) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(&(&snf.u * &snf.d) * &snf.v, a.clone());
        if a.rows() == a.cols() {
            let product = snf.invariant_factors.iter().fold(BigInt::from(1), |acc, x| acc * x);
            prop_assert_eq!(product, a.det().unwrap().abs());
        }
    }

    #[test]
    fn matrix_text_round_trip(a in sized_square(4), b in int_matrix(4)) {
        prop_assert_eq!(parse_matrix::<Rational>(&format_matrix(&a)).unwrap(), a);
        prop_assert_eq!(parse_int_matrix(&format_matrix(&b)).unwrap(), b);
    }

    #[test]
    fn planted_rational_roots_are_found(roots in prop::collection::btree_set((-12i64..=12, 1i64..=3), 0..5)) {
        let planted: std::collections::BTreeSet<Rational> = roots.iter().map(|&(p, q)| rat(p, q)).collect();
        // Multiply in x² + 1 so the search also sees non-rational factors.
        let p = planted
            .iter()
            .fold(RatPoly::from_ints(&[1, 0, 1]), |acc, r| &acc * &UniPoly::linear(r.clone()));
        let found: std::collections::BTreeSet<Rational> = rational_roots(&p).unwrap().into_iter().collect();
        prop_assert_eq!(found, planted);
    }

    #[test]
    fn subspace_dimension_formula(
        (n, u, v) in (1usize..=5).prop_flat_map(|n| {
            let vecs = move || prop::collection::vec(prop::collection::vec(rational(), n), 0..=n);
            (Just(n), vecs(), vecs())
        })
    ) {
        let u: Subspace<Rational> = Subspace::span(n, &u);
        let v: Subspace<Rational> = Subspace::span(n, &v);
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.sum(&v).contains_subspace(&u));
        prop_assert!(u.contains_subspace(&u.intersect(&v)));
        prop_assert_eq!(u.annihilator().dim(), n - u.dim());
    }

    #[test]
    fn torus_verdict_is_conjugation_invariant((a, p) in (1usize..=4).prop_flat_map(|n| (unimodular(n), unimodular(n)))) {
        let p_inv = p.map(|x| Rational::from_integer(x.clone())).inverse().unwrap().map(|x| x.to_integer());
        let conj = &(&p * &a) * &p_inv;
        let (v1, f1) = torus_classify(&a).unwrap();
        let (v2, f2) = torus_classify(&conj).unwrap();
        prop_assert_eq!(v1.kind, v2.kind);
        prop_assert_eq!(f1, f2);
    }
}

fn catalog_entry() -> impl Strategy<Value = catalog::CatalogEntry> {
    prop::sample::select(vec![
        ("t", Some(2)),
        ("t", Some(3)),
        ("t/z", Some(3)),
        ("u", Some(4)),
        ("heisenberg", None),
        ("axb", None),
        ("H", Some(3)),
        ("so2_r2", None),
        ("walnut", None),
    ])
    .prop_map(|(name, n)| catalog::build(name, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Conjugating `φ` by another automorphism `ψ` preserves the verdict,
    /// and composites of automorphisms validate.
    #[test]
    fn verdict_is_invariant_under_conjugation(entry in catalog_entry(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = &entry.algebra;
        let phi = AutomorphismMatrix::new(g, catalog::random_automorphism(&entry, &mut rng).matrix).unwrap();
        let psi = AutomorphismMatrix::new(g, catalog::random_automorphism(&entry, &mut rng).matrix).unwrap();
        let conj = psi.compose(&phi).unwrap().compose(&psi.inverse()).unwrap();
        prop_assert_eq!(
            classify_solvable(g, &conj).unwrap().kind,
            classify_solvable(g, &phi).unwrap().kind
        );
    }

    #[test]
    fn algebra_text_round_trip(entry in catalog_entry()) {
        let text = format_algebra(&entry.algebra);
        let back: LieAlgebra<Rational> = parse_algebra(&text).unwrap();
        prop_assert_eq!(back.dim(), entry.algebra.dim());
        for i in 0..back.dim() {
            for j in 0..back.dim() {
                prop_assert_eq!(back.bracket_basis(i, j), entry.algebra.bracket_basis(i, j));
            }
        }
        prop_assert_eq!(back.basis_names(), entry.algebra.basis_names());
    }

    /// Classes partition the group, and `x` and `g x φ(g)⁻¹` share a class.
    #[test]
    fn twisted_classes_partition(which in 0usize..4, pick in any::<prop::sample::Index>(), g_pick in any::<prop::sample::Index>()) {
        let group = match which {
            0 => builtins::s3(),
            1 => builtins::dihedral(4).unwrap(),
            2 => builtins::heisenberg_mod(2).unwrap(),
            _ => builtins::upper_triangular_mod(3, 2).unwrap(),
        };
        let autos = all_automorphisms(&group);
        let phi = pick.get(&autos);
        let d = twisted_classes(&group, phi);
        prop_assert_eq!(d.class_sizes().iter().sum::<usize>(), group.order());
        let g = g_pick.index(group.order());
        for x in 0..group.order() {
            let y = group.mul(group.mul(g, x), group.inv(phi.apply(g)));
            prop_assert_eq!(d.class_of[x], d.class_of[y]);
        }
        // Twisting by an inner automorphism does not change R.
        let twisted = FiniteAutomorphism::inner(&group, g).compose(phi);
        prop_assert_eq!(twisted_classes(&group, &twisted).r, d.r);
    }
}

#[test]
fn unipotent_family_verdict_matches_diagonal_ratios() {
    // Conjugation by diag(1, 2, 4) on u(3) has eigenvalues 1/2, 1/2, 1/4:
    // no eigenvalue 1. With diag(1, 2, 1) the ratio d1/d3 = 1 appears.
    let u = catalog::strictly_upper_triangular(3).unwrap();
    let scale = |d: [i64; 3]| {
        // Basis (E12, E23, E13): E_ab ↦ (d_a / d_b) E_ab.
        Matrix::diagonal(&[rat(d[0], d[1]), rat(d[1], d[2]), rat(d[0], d[2])])
    };
    let one = AutomorphismMatrix::new(&u, scale([1, 2, 4])).unwrap();
    let inf = AutomorphismMatrix::new(&u, scale([1, 2, 1])).unwrap();
    assert_eq!(classify_solvable(&u, &one).unwrap().kind, VerdictKind::One);
    assert_eq!(
        classify_solvable(&u, &inf).unwrap().kind,
        VerdictKind::Infinite
    );
}
