//! Cacti operations (cup `C_2`, braces `B_m`, `*`, bracket) on any well-graded model,
//! and the evaluated identity suite.

mod extract;
mod identities;
mod models;

use std::fmt::{self, Display};
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{Field, One};

pub use extract::{extract_bialgebra, extract_round_trip, lift_bialgebra_morphism, CactiData, CobarMorphism};
pub use identities::{boundary_terms, check_identity, run_suite, SuiteConfig};
pub(crate) use identities::sample_rng;
pub use models::{Mutated, Mutation};

/// A bigraded model with cup product, shifted braces and a differential.
///
/// `brace(x, ys)` is the shifted brace `x{y_1, …, y_k}`; `B_m` and `*` are derived
/// from it with fixed signs so that both models share one convention.
pub trait CactiAlgebra: Sync {
    type F: Field;
    type Elem: Clone + PartialEq + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Self::F);
    /// Total degree of a nonzero element homogeneous in total degree.
    fn total_degree(&self, a: &Self::Elem) -> Option<i64>;
    /// External degree (word length or arity) of a nonzero homogeneous element.
    fn external_degree(&self, a: &Self::Elem) -> Option<usize>;
    fn cup(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn brace(&self, x: &Self::Elem, ys: &[Self::Elem]) -> Result<Self::Elem>;
    fn differential(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Smallest external degree carried by the model.
    fn min_external(&self) -> usize;
    /// A random bihomogeneous element of the given external degree, if any exists.
    fn random_element(&self, rng: &mut ChaCha8Rng, ext: usize) -> Result<Option<Self::Elem>>;
    /// All basis elements of the given external degree.
    fn basis_elements(&self, ext: usize) -> Result<Vec<Self::Elem>>;
    /// One evaluated case of the diagonal-action identity, if the model has one.
    fn diagonal_action_case(&self, _rng: &mut ChaCha8Rng) -> Option<Result<(bool, String)>> {
        None
    }

    fn sum(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        self.add_scaled(&mut out, b, &Self::F::one());
        out
    }

    fn difference(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        self.add_scaled(&mut out, b, &-Self::F::one());
        out
    }

    fn scaled(&self, a: &Self::Elem, c: &Self::F) -> Self::Elem {
        let mut out = self.zero();
        self.add_scaled(&mut out, a, c);
        out
    }

    fn degree(&self, a: &Self::Elem) -> Result<i64> {
        if self.is_zero(a) {
            return Ok(0);
        }
        self.total_degree(a).ok_or_else(|| Error::NonHomogeneous(self.render(a)))
    }
}

fn parity_sign<F: Field>(p: i64) -> F {
    F::sign(p.rem_euclid(2) == 1)
}

/// `B_m(x, y_1, …, y_{m−1}) = (−1)^{(m−1)|x| + Σ_j (m−1−j)|y_j|} x{y_1, …, y_{m−1}}`.
pub fn bm<T: CactiAlgebra>(t: &T, x: &T::Elem, ys: &[T::Elem]) -> Result<T::Elem> {
    let k = ys.len() as i64;
    let mut parity = k * t.degree(x)?;
    for (j, y) in ys.iter().enumerate() {
        parity += (k - 1 - j as i64) * t.degree(y)?;
    }
    let b = t.brace(x, ys)?;
    Ok(t.scaled(&b, &parity_sign(parity)))
}

/// `a * b = (−1)^{|a|} B_2(a, b)`, which is the brace `a{b}`.
pub fn star<T: CactiAlgebra>(t: &T, a: &T::Elem, b: &T::Elem) -> Result<T::Elem> {
    let b2 = bm(t, a, std::slice::from_ref(b))?;
    Ok(t.scaled(&b2, &parity_sign(t.degree(a)?)))
}

/// `[a, b] = a*b − (−1)^{(|a|−1)(|b|−1)} b*a`.
pub fn gbracket<T: CactiAlgebra>(t: &T, a: &T::Elem, b: &T::Elem) -> Result<T::Elem> {
    let ab = star(t, a, b)?;
    let ba = star(t, b, a)?;
    let s = parity_sign::<T::F>((t.degree(a)? - 1) * (t.degree(b)? - 1));
    let mut out = ab;
    t.add_scaled(&mut out, &ba, &-s);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    BraceRelation,
    Distributivity,
    BoundaryOfBm,
    PreLie,
    Ext1Associativity,
    DiagonalAction,
    WellGradedVanishing,
    LeftDistributivityB2,
    DIsDerivation,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::BraceRelation,
        IdentityId::Distributivity,
        IdentityId::BoundaryOfBm,
        IdentityId::PreLie,
        IdentityId::Ext1Associativity,
        IdentityId::DiagonalAction,
        IdentityId::WellGradedVanishing,
        IdentityId::LeftDistributivityB2,
        IdentityId::DIsDerivation,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::BraceRelation => "brace_relation",
            IdentityId::Distributivity => "distributivity",
            IdentityId::BoundaryOfBm => "boundary_of_Bm",
            IdentityId::PreLie => "preLie",
            IdentityId::Ext1Associativity => "ext1_associativity",
            IdentityId::DiagonalAction => "diagonal_action",
            IdentityId::WellGradedVanishing => "well_graded_vanishing",
            IdentityId::LeftDistributivityB2 => "left_distributivity_B2",
            IdentityId::DIsDerivation => "d_is_derivation",
        }
    }
}

impl Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Format(format!("unknown identity {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{group_algebra, super_line, sweedler4, taft, trunc_poly};
    use crate::algebra::{Elem, Elem2, MorphismMatrix};
    use crate::cobar::Cobar;
    use crate::hochschild::Hochschild;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    fn cfg(samples: usize) -> SuiteConfig {
        SuiteConfig { samples, ..Default::default() }
    }

    #[test]
    fn star_and_bridge_on_ug() {
        let c = Cobar::new(sweedler4::<Q>().unwrap()).unwrap();
        let u = c.u_of_grouplike("g").unwrap();
        assert_eq!(c.render(&star(&c, &u, &u).unwrap()), "-2 * u_g");
        assert_eq!(c.render(&bm(&c, &u, std::slice::from_ref(&u)).unwrap()), "2 * u_g");
        // |u_g| = 1 is odd, so the bracket is the anticommutator-free difference
        assert!(gbracket(&c, &u, &u).unwrap().is_zero());
    }

    #[test]
    fn suite_passes_on_cobar_and_hochschild() {
        let c = Cobar::new(sweedler4::<Q>().unwrap()).unwrap();
        let r = run_suite(&c, &cfg(40)).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.check("diagonal_action").is_some());
        let h = Hochschild::new(super_line::<Q>().unwrap()).unwrap();
        let r = run_suite(&h, &cfg(40)).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.check("diagonal_action").is_none());
        let t = Cobar::new(taft::<Fp<7>>(3, 1).unwrap()).unwrap();
        let r = check_identity(&t, IdentityId::BoundaryOfBm, &cfg(20)).unwrap();
        assert!(r.iter().all(|c| c.passed));
    }

    #[test]
    fn mutations_are_caught() {
        let c = Cobar::new(group_algebra::<Q>(3).unwrap()).unwrap();
        let flipped = Mutated { inner: &c, mutation: Mutation::FlipBrace };
        let r = check_identity(&flipped, IdentityId::BoundaryOfBm, &cfg(20)).unwrap();
        assert!(!r[0].passed);
        let h = Hochschild::new(trunc_poly::<Q>(2).unwrap()).unwrap();
        let flipped = Mutated { inner: &h, mutation: Mutation::FlipCup };
        let r = check_identity(&flipped, IdentityId::DIsDerivation, &cfg(40)).unwrap();
        assert!(!r[0].passed);
    }

    #[test]
    fn extraction_round_trips() {
        for h in [sweedler4::<Q>().unwrap(), group_algebra(3).unwrap()] {
            assert!(extract_round_trip(&h).unwrap().same_structure(&h));
        }
        let t = taft::<Fp<7>>(3, 2).unwrap();
        assert!(extract_round_trip(&t).unwrap().same_structure(&t));
    }

    #[test]
    fn non_associative_letter_products_are_rejected() {
        let c = Cobar::new(sweedler4::<Q>().unwrap()).unwrap();
        let mut data = CactiData::from_cobar(&c).unwrap();
        // u_g * u_g := u_g + x breaks associativity but keeps d² = 0
        let ug = c.kernel().index_of("u_g").unwrap();
        let x = c.kernel().index_of("x").unwrap();
        let n = data.dim();
        data.b2[ug * n + ug].add_term(x, Q::from_i64(1));
        let err = extract_bialgebra(&data).unwrap_err();
        assert!(matches!(err, Error::ExtractionFailure(_)), "{err}");
    }

    #[test]
    fn non_coassociative_input_fails_d_squared() {
        let h = sweedler4::<Q>().unwrap();
        let x = h.index_of("x").unwrap();
        let g = h.index_of("g").unwrap();
        let one = h.unit_index();
        let bad = h.with_coproduct(x, Elem2::from_terms([((x, one), Q::from_i64(1)), ((g, x), Q::from_i64(1)), ((x, x), Q::from_i64(1))]));
        let c = Cobar::new(bad).unwrap();
        let err = extract_bialgebra(&CactiData::from_cobar(&c).unwrap()).unwrap_err();
        assert!(err.to_string().contains("d²"), "{err}");
    }

    #[test]
    fn lifts_preserve_operations() {
        let h = sweedler4::<Q>().unwrap();
        let id = lift_bialgebra_morphism(&MorphismMatrix::identity(h.clone())).unwrap();
        assert!(id.verify(&SuiteConfig { samples: 20, max_ext: 3, ..Default::default() }).unwrap().all_passed());
        let lam = Q::from_i64(5);
        let images = vec![Elem::basis(0), Elem::basis(1), Elem::term(2, lam.clone()), Elem::term(3, lam)];
        let f = MorphismMatrix::from_images(h.clone(), h.clone(), images).unwrap();
        let lift = lift_bialgebra_morphism(&f).unwrap();
        let r = lift.verify(&SuiteConfig { samples: 20, max_ext: 3, ..Default::default() }).unwrap();
        assert!(r.all_passed(), "{r}");
        let collapse = vec![Elem::basis(0), Elem::basis(0), Elem::basis(2), Elem::basis(2)];
        let f = MorphismMatrix::from_images(h.clone(), h, collapse).unwrap();
        assert!(matches!(lift_bialgebra_morphism(&f), Err(Error::NotABialgebraMorphism(_))));
    }
}
