//! Module-algebra structures `ρ: H ⊗ A → A` and the induced map on cobar elements.

mod induced;

use crate::algebra::catalog::{sweedler4, trunc_poly};
use crate::algebra::{render, Algebra, Bialgebra, Elem};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

pub use induced::{induced, verify_cacti_morphism, InducedMorphism};

/// `H4` acting on `k[y]/y²` by `g(y) = −y`, `x(y) = 1`: the grading involution and the
/// odd derivation `d/dy`.
pub fn sweedler_action<F: Field>() -> Result<ActionMap<F>> {
    let h = sweedler4::<F>()?;
    let a = trunc_poly::<F>(2)?;
    let idx = |l: &str| h.index_of(l).expect("sweedler4 label");
    let one = F::one();
    ActionMap::from_entries(
        h.clone(),
        a,
        [
            ((idx("g"), 0), Elem::basis(0)),
            ((idx("g"), 1), Elem::term(1, -one.clone())),
            ((idx("x"), 1), Elem::term(0, one.clone())),
            ((idx("xg"), 1), Elem::term(0, -one)),
        ],
    )
}

/// Structure constants of a candidate action `ρ: H ⊗ A → A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMap<F: Field> {
    bialgebra: Bialgebra<F>,
    algebra: Algebra<F>,
    /// `rho[h * dim A + a] = ρ(e_h, e_a)`.
    rho: Vec<Elem<F>>,
}

impl<F: Field> ActionMap<F> {
    pub fn new(bialgebra: Bialgebra<F>, algebra: Algebra<F>, rho: Vec<Elem<F>>) -> Result<Self> {
        let (nh, na) = (bialgebra.dim(), algebra.dim());
        if rho.len() != nh * na {
            return Err(Error::MalformedPresentation(format!("action has {} entries, expected {}", rho.len(), nh * na)));
        }
        if rho.iter().any(|v| v.keys().any(|&k| k >= na)) {
            return Err(Error::MalformedPresentation("action value index out of range".into()));
        }
        Ok(ActionMap { bialgebra, algebra, rho })
    }

    /// Builds an action from its values on basis pairs; missing pairs act by zero
    /// except on the unit of `H`, which defaults to the identity.
    pub fn from_entries(
        bialgebra: Bialgebra<F>,
        algebra: Algebra<F>,
        entries: impl IntoIterator<Item = ((usize, usize), Elem<F>)>,
    ) -> Result<Self> {
        let (nh, na) = (bialgebra.dim(), algebra.dim());
        let u = bialgebra.unit_index();
        let mut rho = vec![Elem::new(); nh * na];
        let mut unit_given = false;
        let mut filled = vec![false; nh * na];
        for ((h, a), v) in entries {
            if h >= nh || a >= na {
                return Err(Error::MalformedPresentation(format!("action entry ({h},{a}) out of range")));
            }
            unit_given |= h == u;
            filled[h * na + a] = true;
            rho[h * na + a] = v;
        }
        if !unit_given {
            for a in 0..na {
                rho[u * na + a] = Elem::basis(a);
            }
        } else {
            for a in 0..na {
                if !filled[u * na + a] {
                    rho[u * na + a] = Elem::new();
                }
            }
        }
        Self::new(bialgebra, algebra, rho)
    }

    /// `h ⇀ a = ε(h) a`.
    pub fn trivial(bialgebra: Bialgebra<F>, algebra: Algebra<F>) -> Self {
        let (nh, na) = (bialgebra.dim(), algebra.dim());
        let rho = (0..nh * na).map(|k| Elem::term(k % na, bialgebra.counit(k / na).clone())).collect();
        ActionMap { bialgebra, algebra, rho }
    }

    pub fn bialgebra(&self) -> &Bialgebra<F> {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn act_basis(&self, h: usize, a: usize) -> &Elem<F> {
        &self.rho[h * self.algebra.dim() + a]
    }

    /// Replaces one value (test mutations).
    pub fn with_value(&self, h: usize, a: usize, value: Elem<F>) -> Self {
        let mut out = self.clone();
        let na = self.algebra.dim();
        out.rho[h * na + a] = value;
        out
    }

    pub fn act(&self, h: &Elem<F>, a: &Elem<F>) -> Elem<F> {
        let mut out = Elem::new();
        for (&i, ci) in h.iter() {
            for (&j, cj) in a.iter() {
                out.add_scaled(self.act_basis(i, j), &(ci.clone() * cj.clone()));
            }
        }
        out
    }

    /// The action with `1_H` forced to act as the identity; every check except
    /// `unit` is evaluated against it so each axiom fails independently.
    fn normalized(&self) -> Self {
        let mut out = self.clone();
        let na = self.algebra.dim();
        let u = self.bialgebra.unit_index();
        for a in 0..na {
            out.rho[u * na + a] = Elem::basis(a);
        }
        out
    }

    /// Matrix of `ρ(h, −)` as columns.
    pub fn operator(&self, h: &Elem<F>) -> Vec<Elem<F>> {
        (0..self.algebra.dim()).map(|a| self.act(h, &Elem::basis(a))).collect()
    }
}

pub fn check_module_algebra<F: Field>(act: &ActionMap<F>) -> AxiomReport {
    let (h, a) = (act.bialgebra(), act.algebra());
    let mut report = AxiomReport::new(format!("action of {} on {}", h.name(), a.name()));
    let (nh, na) = (h.dim(), a.dim());
    let hl = |i: usize| h.label(i);
    let al = |i: usize| a.label(i);
    let u = h.unit_index();

    let mut unit = CheckBuilder::new("unit");
    for j in 0..na {
        unit.record(act.act_basis(u, j) == &Elem::basis(j), || format!("({}, {})", hl(u), al(j)));
    }
    report.push(unit.finish());

    let act = act.normalized();

    let mut homog = CheckBuilder::new("homogeneity");
    for i in 0..nh {
        for j in 0..na {
            let d = h.degree(i) + a.degree(j);
            let ok = act.act_basis(i, j).keys().all(|&k| a.degree(k) == d);
            homog.record(ok, || format!("({}, {})", hl(i), al(j)));
        }
    }
    report.push(homog.finish());

    let mut module = CheckBuilder::new("module");
    for i in 0..nh {
        for k in 0..nh {
            let hk = h.product(i, k);
            for j in 0..na {
                let lhs = act.act(hk, &Elem::basis(j));
                let rhs = act.act(&Elem::basis(i), act.act_basis(k, j));
                module.record(lhs == rhs, || format!("({}, {}, {})", hl(i), hl(k), al(j)));
            }
        }
    }
    report.push(module.finish());

    // h(ab) = Σ (−1)^{|h2||a|} h1(a) h2(b), together with h(1) = ε(h) 1.
    let mut malg = CheckBuilder::new("module_algebra");
    for i in 0..nh {
        let lhs = act.act(&Elem::basis(i), a.unit());
        let rhs = a.unit().scaled(h.counit(i));
        malg.record(lhs == rhs, || format!("({}, 1)", hl(i)));
    }
    for i in 0..nh {
        for j in 0..na {
            for k in 0..na {
                let lhs = act.act(&Elem::basis(i), a.product(j, k));
                let mut rhs = Elem::new();
                for (&(h1, h2), c) in h.coproduct(i).iter() {
                    let sign = F::sign(h.degree(h2) * a.degree(j) % 2 != 0);
                    let term = a.mul(act.act_basis(h1, j), act.act_basis(h2, k));
                    rhs.add_scaled(&term, &(sign * c.clone()));
                }
                malg.record(lhs == rhs, || format!("({}, {}, {})", hl(i), al(j), al(k)));
            }
        }
    }
    report.push(malg.finish());

    if h.has_differential() || a.has_differential() {
        // d(h(a)) = (d_H h)(a) + (−1)^{|h|} h(d_A a)
        let mut dg = CheckBuilder::new("dg");
        for i in 0..nh {
            for j in 0..na {
                let lhs = a.apply_d(act.act_basis(i, j));
                let mut rhs = act.act(&h.d_basis(i), &Elem::basis(j));
                let second = act.act(&Elem::basis(i), &a.d_basis(j));
                rhs.add_scaled(&second, &F::sign(h.degree(i) % 2 != 0));
                dg.record(lhs == rhs, || {
                    format!("({}, {}): {} vs {}", hl(i), al(j), render(a, &lhs), render(a, &rhs))
                });
            }
        }
        report.push(dg.finish());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dual_module_algebra;
    use crate::algebra::catalog::{group_algebra, super_line};
    use crate::cacti::SuiteConfig;
    use crate::cobar::Cobar;
    use crate::hochschild::Hochschild;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn cfg() -> SuiteConfig {
        SuiteConfig { samples: 30, max_ext: 3, ..Default::default() }
    }

    #[test]
    fn sweedler_action_is_a_module_algebra() {
        let act = sweedler_action::<Q>().unwrap();
        let r = check_module_algebra(&act);
        assert!(r.all_passed(), "{r}");
        let r = verify_cacti_morphism(&act, &cfg()).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn psi_value() {
        let act = sweedler_action::<Q>().unwrap();
        let c = Cobar::new(act.bialgebra().clone()).unwrap();
        let psi = induced(&act, &c.word(&["xg", "x"]).unwrap()).unwrap();
        let psi = psi.homogeneous().unwrap();
        assert_eq!((psi.p, psi.q), (0, 2));
        assert_eq!(psi.value_vec(&[1, 1]), Elem::term(0, q(-1)));
        assert_eq!(psi.nnz(), 1);
        let h = Hochschild::new(act.algebra().clone()).unwrap();
        assert!(h.differential_cochain(psi).unwrap().is_zero());
        // u_g acts by g − 1
        let ug = induced(&act, &c.u_of_grouplike("g").unwrap()).unwrap();
        assert_eq!(ug.homogeneous().unwrap().value_vec(&[1]), Elem::term(1, q(-2)));
        assert!(ug.homogeneous().unwrap().value_vec(&[0]).is_zero());
    }

    #[test]
    fn broken_leibniz_breaks_chain_map() {
        let act = sweedler_action::<Q>().unwrap();
        let g = act.bialgebra().index_of("g").unwrap();
        let broken = act.with_value(g, 1, Elem::term(1, q(1)));
        let r = verify_cacti_morphism(&broken, &cfg()).unwrap();
        assert!(!r.passed("module_algebra"));
        assert!(!r.passed("chain_map") || !r.passed("d_on_letters"), "{r}");
    }

    #[test]
    fn trivial_and_dual_actions_induce_cacti_morphisms() {
        let z3 = group_algebra::<Q>(3).unwrap();
        let act = ActionMap::trivial(z3, super_line().unwrap());
        assert!(verify_cacti_morphism(&act, &cfg()).unwrap().all_passed());
        // H acting on H* is faithful, so this also tests cobar braces against Hochschild braces
        let act = dual_module_algebra(&sweedler4::<Q>().unwrap()).unwrap();
        let r = verify_cacti_morphism(&act, &SuiteConfig { samples: 15, max_ext: 3, ..Default::default() }).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
