use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cacti_core::algebra::catalog::{sweedler4, trunc_poly};
use cacti_core::cacti::{gbracket, CactiAlgebra};
use cacti_core::cobar::{Bidegree, Cobar, CobarElement};
use cacti_core::hochschild::{Hochschild, MultiCochain};
use cacti_core::homology::{differential_matrix, is_coboundary, CobarComplex, Degree, HochschildComplex};
use cacti_core::linalg::SparseMatrix;
use cacti_core::module_algebra::{sweedler_action, InducedMorphism};
use cacti_core::{Field, FieldSpec, Fp, Rational};

type Q = Rational;
type F7 = Fp<7>;

fn f7() -> impl Strategy<Value = F7> {
    (0u64..7).prop_map(F7::new)
}

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Q::from_i64(n) / Q::from_i64(d))
}

fn sweedler() -> Cobar<Q> {
    Cobar::new(sweedler4().unwrap()).unwrap()
}

fn random_combination(c: &Cobar<Q>, bideg: Bidegree, coeffs: &[i64]) -> CobarElement<Q> {
    let words = c.basis_words(bideg).unwrap();
    let mut out = CobarElement::new();
    for (w, k) in words.iter().zip(coeffs.iter().cycle()) {
        out.add_term(w.clone(), Q::from_i64(*k));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(a in f7(), b in f7(), c in f7()) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + (-a), F7::new(0));
        if a != F7::new(0) {
            prop_assert_eq!(a * a.inv().unwrap(), F7::new(1));
        }
    }

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if a != Q::from_i64(0) {
            prop_assert_eq!(&a * a.inv().unwrap(), Q::from_i64(1));
        }
    }

    #[test]
    fn scalars_print_and_parse(a in rational(), b in f7()) {
        prop_assert_eq!(Q::parse_scalar(&a.to_string()).unwrap(), a);
        prop_assert_eq!(F7::parse_scalar(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn rank_ignores_column_order(entries in prop::collection::vec((0usize..6, 0usize..8, 1u64..5), 0..30)) {
        let m = SparseMatrix::from_triplets(6, 8, entries.iter().map(|&(r, c, v)| (r, c, Fp::<5>::new(v))));
        let reversed = SparseMatrix::from_columns(6, m.columns().iter().rev().cloned().collect());
        prop_assert_eq!(m.rank(), reversed.rank());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_finds_preimages(entries in prop::collection::vec((0usize..5, 0usize..5, 1u64..7), 0..20),
                             x in prop::collection::vec(0u64..7, 5)) {
        let m = SparseMatrix::from_triplets(5, 5, entries.iter().map(|&(r, c, v)| (r, c, F7::new(v))));
        let x = x.iter().enumerate().map(|(i, &v)| (i, F7::new(v))).collect();
        let b = m.apply(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn cobar_d_squared_vanishes(seed in any::<u64>(), ext in 1usize..4) {
        let c = sweedler();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(x) = c.random_element(&mut rng, ext).unwrap() {
            prop_assert!(c.differential(&c.differential(&x)).is_zero());
        }
    }

    #[test]
    fn hochschild_d_squared_vanishes(seed in any::<u64>(), q in 0usize..3) {
        let h = Hochschild::new(trunc_poly::<Q>(3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(f) = h.random_element(&mut rng, q).unwrap() {
            prop_assert!(h.differential(&h.differential(&f).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn bracket_with_zero_vanishes(seed in any::<u64>(), ext in 1usize..3) {
        let c = sweedler();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(x) = c.random_element(&mut rng, ext).unwrap() {
            prop_assert!(gbracket(&c, &x, &c.zero()).unwrap().is_zero());
            prop_assert!(gbracket(&c, &c.zero(), &x).unwrap().is_zero());
        }
    }

    #[test]
    fn induced_map_is_a_chain_map(seed in any::<u64>(), ext in 1usize..4) {
        let phi = InducedMorphism::new(sweedler_action::<Q>().unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(w) = phi.cobar().random_element(&mut rng, ext).unwrap() {
            let h = phi.hochschild();
            let lhs = phi.apply(&phi.cobar().differential(&w)).unwrap();
            let rhs = h.differential(&phi.apply(&w).unwrap()).unwrap();
            prop_assert!(lhs.difference(&rhs).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn bracket_class_ignores_coboundaries(coeffs in prop::collection::vec(-3i64..4, 1..4)) {
        let c = sweedler();
        let cx = CobarComplex::new(&c, 4);
        let z = c.word(&["xg", "x"]).unwrap();
        let w = random_combination(&c, Bidegree::new(0, 1), &coeffs);
        let z2 = z.sum(&c.differential(&w));
        let diff = gbracket(&c, &z2, &z2).unwrap().difference(&gbracket(&c, &z, &z).unwrap());
        prop_assert!(is_coboundary(&cx, &diff).unwrap().is_some());
    }

    #[test]
    fn hochschild_bracket_class_ignores_coboundaries(seed in any::<u64>()) {
        let phi = InducedMorphism::new(sweedler_action::<Q>().unwrap()).unwrap();
        let h = phi.hochschild();
        let psi = phi.apply(&phi.cobar().word(&["xg", "x"]).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eta = h.random_element(&mut rng, 1).unwrap().unwrap_or_else(MultiCochain::zero);
        let shifted = psi.sum(&h.differential(&eta).unwrap());
        let diff = gbracket(h, &shifted, &shifted).unwrap().difference(&gbracket(h, &psi, &psi).unwrap());
        let hx = HochschildComplex::new(h, 3);
        prop_assert!(is_coboundary(&hx, &diff).unwrap().is_some());
    }
}

#[test]
fn consecutive_differentials_compose_to_zero() {
    let c = sweedler();
    let cx = CobarComplex::new(&c, 5);
    for n in 1..5 {
        let m_in = differential_matrix(&cx, Degree::Bi { internal: 0, external: n }).unwrap();
        let m_out = differential_matrix(&cx, Degree::Bi { internal: 0, external: n + 1 }).unwrap();
        assert!(m_out.mul(&m_in).is_zero(), "M{} M{} != 0", n + 1, n);
    }
    let h = Hochschild::new(trunc_poly::<Fp<3>>(3).unwrap()).unwrap();
    let hx = HochschildComplex::new(&h, 4);
    for key in hx.window(0).windows(2) {
        let m_in = differential_matrix(&hx, key[0]).unwrap();
        let m_out = differential_matrix(&hx, key[1]).unwrap();
        assert!(m_out.mul(&m_in).is_zero(), "{} -> {}", key[0], key[1]);
    }
}

#[test]
fn field_names_round_trip() {
    for s in ["Q", "F2", "F7", "F101"] {
        let spec: FieldSpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<FieldSpec>(&json).unwrap(), spec);
    }
}
