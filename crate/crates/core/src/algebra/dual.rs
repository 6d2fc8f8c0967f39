//! Linear duals of finite-dimensional bialgebras and the actions they induce.

use super::{Algebra, Bialgebra, Elem, Elem2, MorphismMatrix};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::module_algebra::ActionMap;
use crate::scalar::Field;

/// `H*` together with its pairing against `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual<F: Field> {
    pub bialgebra: Bialgebra<F>,
    /// `pairing.get(b, i) = ⟨n_i, e_b⟩` for the basis `n_i` of `H*`.
    pub pairing: SparseMatrix<F>,
}

impl<F: Field> Dual<F> {
    pub fn pair(&self, f: usize, b: usize) -> F {
        self.pairing.get(b, f)
    }

    /// Coordinates in `H*` of the functional with values `values[b] = φ(e_b)`.
    pub fn functional(&self, values: &Elem<F>) -> Result<Elem<F>> {
        self.pairing
            .solve(values)
            .ok_or_else(|| Error::MalformedPresentation("pairing is degenerate".into()))
    }
}

/// Transposes a coalgebra through a change of basis `p` (columns in old coordinates).
pub(crate) fn transform_coalgebra<F: Field>(
    comult: &[Elem2<F>],
    counit: &[F],
    p: &SparseMatrix<F>,
    q: &SparseMatrix<F>,
) -> (Vec<Elem2<F>>, Vec<F>) {
    let mut new_comult = Vec::new();
    let mut new_counit = Vec::new();
    for col in p.columns() {
        let mut old = Elem2::new();
        let mut eps = F::zero();
        for (&i, c) in col.iter() {
            old.add_scaled(&comult[i], c);
            eps = eps + c.clone() * counit[i].clone();
        }
        let mut new = Elem2::new();
        for (&(a, b), c) in old.iter() {
            for (&x, cx) in q.column(a).iter() {
                for (&y, cy) in q.column(b).iter() {
                    new.add_term((x, y), c.clone() * cx.clone() * cy.clone());
                }
            }
        }
        new_comult.push(new);
        new_counit.push(eps);
    }
    (new_comult, new_counit)
}

/// `H*` on the dual basis with product `Δ^T`, coproduct `m^T`, unit `ε` and counit
/// evaluation at `1_H`. When `ε` is not itself a dual basis vector it replaces the
/// first dual basis vector it involves.
pub fn dual_bialgebra<F: Field>(h: &Bialgebra<F>) -> Result<Dual<F>> {
    let report = h.check_axioms();
    if !report.all_passed() {
        return Err(Error::AxiomFailure(format!("{}: {}", h.name(), report.failed().join(", "))));
    }
    let n = h.dim();
    let deg = |i: usize| h.degree(i);
    let odd = |a: usize, b: usize| deg(a) * deg(b) % 2 != 0;

    let mut products = Vec::new();
    for k in 0..n {
        for (&(a, b), c) in h.coproduct(k).iter() {
            products.push(((a, b), Elem::term(k, F::sign(odd(a, b)) * c.clone())));
        }
    }
    let mut comult = vec![Elem2::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (&k, c) in h.product(i, j).iter() {
                comult[k].add_term((i, j), F::sign(odd(i, j)) * c.clone());
            }
        }
    }
    let u = h.unit_index();
    let counit: Vec<F> = (0..n).map(|i| if i == u { F::one() } else { F::zero() }).collect();
    let unit: Elem<F> = (0..n).map(|i| (i, h.counit(i).clone())).collect();
    let differential = h.differential().map(|d| {
        let mut out = vec![Elem::new(); n];
        for (k, dk) in d.iter().enumerate() {
            for (&i, c) in dk.iter() {
                out[i].add_term(k, -(F::sign(deg(i) % 2 != 0) * c.clone()));
            }
        }
        out
    });
    let mut labels: Vec<String> = h.basis().iter().map(|b| format!("{b}'")).collect();
    let degrees = (0..n).map(|i| -deg(i)).collect();
    let raw = Algebra::new(format!("dual({})", h.name()), labels.clone(), degrees, unit.clone(), products, differential)?;

    let mut columns: Vec<Elem<F>> = (0..n).map(Elem::basis).collect();
    let is_basis = unit.len() == 1 && unit.first().is_some_and(|(_, c)| c.is_one());
    if !is_basis {
        let (&k, _) = unit.first().ok_or_else(|| Error::AxiomFailure("counit vanishes".into()))?;
        columns[k] = unit;
        labels[k] = "eps".into();
    }
    let p = SparseMatrix::from_columns(n, columns);
    let q = p.inverse().expect("unit replacement keeps the basis");
    let algebra = raw.change_basis(&p, labels)?;
    let (comult, counit) = transform_coalgebra(&comult, &counit, &p, &q);
    let mut bialgebra = Bialgebra::new(algebra, comult, counit)?;
    bialgebra.set_name(format!("dual({})", h.name()));
    Ok(Dual { bialgebra, pairing: p })
}

/// The canonical map `H → H**`, `h ↦ ev_h`.
pub fn canonical_bidual<F: Field>(h: &Bialgebra<F>) -> Result<MorphismMatrix<F>> {
    let first = dual_bialgebra(h)?;
    let second = dual_bialgebra(&first.bialgebra)?;
    let n = h.dim();
    let q2 = second.pairing.inverse().expect("pairing matrices are invertible");
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        // ev_{e_j}(n_i) = (−1)^{|n_i||e_j|} ⟨n_i, e_j⟩
        let raw: Elem<F> = (0..n)
            .map(|i| {
                let s = F::sign(first.bialgebra.degree(i) * h.degree(j) % 2 != 0);
                (i, s * first.pair(i, j))
            })
            .collect();
        images.push(q2.apply(&raw));
    }
    MorphismMatrix::from_images(h.clone(), second.bialgebra, images)
}

/// `H*` acting on `H` by `h' ⇀ h = Σ (−1)^{|h'||h_(1)|} h_(1) ⟨h', h_(2)⟩`.
pub fn pairing_action<F: Field>(h: &Bialgebra<F>) -> Result<ActionMap<F>> {
    let dual = dual_bialgebra(h)?;
    let n = h.dim();
    let mut rho = Vec::with_capacity(n * n);
    for i in 0..n {
        let di = dual.bialgebra.degree(i);
        for j in 0..n {
            let mut out = Elem::new();
            for (&(a, b), c) in h.coproduct(j).iter() {
                let s = F::sign(di * h.degree(a) % 2 != 0);
                out.add_term(a, s * c.clone() * dual.pair(i, b));
            }
            rho.push(out);
        }
    }
    ActionMap::new(dual.bialgebra, h.algebra().clone(), rho)
}

/// `H` acting on the algebra `H*` by `(h ⇀ f)(k) = f(k h)`. Trivially graded only.
pub fn dual_module_algebra<F: Field>(h: &Bialgebra<F>) -> Result<ActionMap<F>> {
    if !h.trivially_graded() {
        return Err(Error::UnsupportedParams("dual_module_algebra needs a trivially graded bialgebra".into()));
    }
    let dual = dual_bialgebra(h)?;
    let n = h.dim();
    let q = dual.pairing.inverse().expect("pairing matrices are invertible");
    let mut rho = Vec::with_capacity(n * n);
    for e in 0..n {
        for i in 0..n {
            // values on e_k: n_i(e_k e_h) = Σ_a m^a_{k,h} ⟨n_i, e_a⟩
            let raw: Elem<F> = (0..n)
                .map(|k| {
                    let v = h.product(k, e).iter().fold(F::zero(), |acc, (&a, c)| acc + c.clone() * dual.pair(i, a));
                    (k, v)
                })
                .collect();
            rho.push(q.apply(&raw));
        }
    }
    ActionMap::new(h.clone(), dual.bialgebra.algebra().clone(), rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{dual_group_algebra, group_algebra, sweedler4, taft};
    use crate::algebra::check_bialgebra_morphism;
    use crate::module_algebra::check_module_algebra;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn dual_of_group_algebra_is_functions() {
        let d = dual_bialgebra(&group_algebra::<Q>(3).unwrap()).unwrap();
        assert!(d.bialgebra.check_axioms().all_passed());
        assert!(d.bialgebra.same_structure(&dual_group_algebra(3).unwrap()));
    }

    #[test]
    fn sweedler_is_self_dual() {
        let h = sweedler4::<Q>().unwrap();
        let d = dual_bialgebra(&h).unwrap();
        let hs = &d.bialgebra;
        assert!(hs.check_axioms().all_passed());
        let m1 = -Q::from_i64(1);
        let g_hat = d.functional(&Elem::from_terms([(0, Q::from_i64(1)), (1, m1)])).unwrap();
        let x_hat = d.functional(&Elem::from_terms([(2, Q::from_i64(1)), (3, Q::from_i64(1))])).unwrap();
        let eps = hs.unit().clone();
        assert_eq!(hs.mul(&g_hat, &g_hat), eps);
        assert_eq!(hs.mul(&g_hat, &x_hat), hs.mul(&x_hat, &g_hat).neg());
        assert!(hs.mul(&x_hat, &x_hat).is_zero());
        let images = vec![eps, g_hat.clone(), x_hat.clone(), hs.mul(&x_hat, &g_hat)];
        let f = MorphismMatrix::from_images(h, hs.clone(), images).unwrap();
        assert!(check_bialgebra_morphism(&f).all_passed());
        assert!(f.is_invertible());
    }

    #[test]
    fn bidual_is_canonical() {
        for h in [sweedler4::<Q>().unwrap(), group_algebra(3).unwrap()] {
            let f = canonical_bidual(&h).unwrap();
            assert!(check_bialgebra_morphism(&f).all_passed());
            let back = f.target().change_basis(f.matrix(), h.basis().to_vec()).unwrap();
            assert!(back.same_structure(&h));
        }
        let t = taft::<Fp<7>>(3, 1).unwrap();
        assert!(check_bialgebra_morphism(&canonical_bidual(&t).unwrap()).all_passed());
    }

    #[test]
    fn pairing_actions_are_module_algebras() {
        let h = sweedler4::<Q>().unwrap();
        let act = pairing_action(&h).unwrap();
        assert!(check_module_algebra(&act).all_passed(), "{}", check_module_algebra(&act));
        let act = dual_module_algebra(&h).unwrap();
        assert!(check_module_algebra(&act).all_passed(), "{}", check_module_algebra(&act));
        let z2 = group_algebra::<Q>(2).unwrap();
        let act = pairing_action(&z2).unwrap();
        // ε acts as the identity
        for j in 0..2 {
            assert_eq!(act.act(act.bialgebra().unit(), &Elem::basis(j)), Elem::basis(j));
        }
    }
}
