//! The augmentation ideal `V = Ker ε` with its reduced coproduct.

use super::{Bialgebra, Elem, Elem2};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// `V = Ker ε` with basis `v_b = b − ε(b)·1` over the non-unit basis elements `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounitKernel<F: Field> {
    parent: Bialgebra<F>,
    /// V index → H basis index.
    h_index: Vec<usize>,
    /// H basis index → V index (`None` for the unit).
    v_index: Vec<Option<usize>>,
    labels: Vec<String>,
    degrees: Vec<i64>,
    reduced: Vec<Elem2<F>>,
    internal: Vec<Elem<F>>,
}

impl<F: Field> CounitKernel<F> {
    pub fn new(parent: Bialgebra<F>) -> Result<Self> {
        let u = parent.unit_index();
        if !parent.counit(u).is_one() {
            return Err(Error::AxiomFailure("ε(1) must be 1".into()));
        }
        let h_index: Vec<usize> = (0..parent.dim()).filter(|&i| i != u).collect();
        let mut v_index = vec![None; parent.dim()];
        for (v, &h) in h_index.iter().enumerate() {
            v_index[h] = Some(v);
        }
        let labels = h_index
            .iter()
            .map(|&h| {
                if parent.counit(h).is_zero() {
                    parent.label(h).to_string()
                } else {
                    format!("u_{}", parent.label(h))
                }
            })
            .collect();
        let degrees = h_index.iter().map(|&h| parent.degree(h)).collect();
        let mut kernel = CounitKernel {
            parent,
            h_index,
            v_index,
            labels,
            degrees,
            reduced: Vec::new(),
            internal: Vec::new(),
        };
        for v in 0..kernel.dim() {
            let h = kernel.include(&Elem::basis(v));
            let delta = kernel.parent.comult(&h);
            kernel.reduced.push(kernel.project2(&delta));
            let dh = kernel.parent.apply_d(&h);
            kernel.internal.push(kernel.project(&dh));
        }
        Ok(kernel)
    }

    pub fn parent(&self) -> &Bialgebra<F> {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.h_index.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// H basis element underlying the V basis vector `v`.
    pub fn h_index(&self, v: usize) -> usize {
        self.h_index[v]
    }

    pub fn v_index(&self, h: usize) -> Option<usize> {
        self.v_index[h]
    }

    /// `ι: V → H`, `v_b ↦ b − ε(b)·1`.
    pub fn include(&self, v: &Elem<F>) -> Elem<F> {
        let u = self.parent.unit_index();
        let mut out = Elem::new();
        for (&i, c) in v.iter() {
            let h = self.h_index[i];
            out.add_term(h, c.clone());
            out.add_term(u, -(c.clone() * self.parent.counit(h).clone()));
        }
        out
    }

    /// `π: H → V`, dropping the unit coordinate. `π ∘ ι = id`.
    pub fn project(&self, h: &Elem<F>) -> Elem<F> {
        h.iter()
            .filter_map(|(&i, c)| self.v_index[i].map(|v| (v, c.clone())))
            .collect()
    }

    pub fn project2(&self, w: &Elem2<F>) -> Elem2<F> {
        w.iter()
            .filter_map(|(&(a, b), c)| Some(((self.v_index[a]?, self.v_index[b]?), c.clone())))
            .collect()
    }

    /// `Δ'(v) = (π⊗π) Δ(ι v)`.
    pub fn reduced_coproduct(&self, v: usize) -> &Elem2<F> {
        &self.reduced[v]
    }

    /// `π d_H ι v`.
    pub fn internal_differential(&self, v: usize) -> &Elem<F> {
        &self.internal[v]
    }

    pub fn has_internal_differential(&self) -> bool {
        self.internal.iter().any(|v| !v.is_zero())
    }

    /// Product of two letters pushed back to V: `π(ι a · ι b)`.
    pub fn letter_product(&self, a: usize, b: usize) -> Elem<F> {
        let prod = self.parent.mul(&self.include(&Elem::basis(a)), &self.include(&Elem::basis(b)));
        self.project(&prod)
    }

    /// `u_g = g − 1` as a vector in V, for group-like `g`; zero for the unit.
    pub fn u_of_grouplike(&self, h: usize) -> Result<Elem<F>> {
        if !self.parent.is_grouplike(h) {
            return Err(Error::NotGroupLike(self.parent.label(h).to_string()));
        }
        Ok(match self.v_index[h] {
            Some(v) => Elem::basis(v),
            None => Elem::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{group_algebra, sweedler4};
    use crate::scalar::{Rational, Zero};

    #[test]
    fn sweedler_kernel() {
        let k = CounitKernel::new(sweedler4::<Rational>().unwrap()).unwrap();
        assert_eq!(k.labels(), ["u_g", "x", "xg"]);
        let (ug, x, xg) = (0, 1, 2);
        assert_eq!(k.reduced_coproduct(ug), &Elem2::basis((ug, ug)));
        assert_eq!(k.reduced_coproduct(x), &Elem2::basis((ug, x)));
        assert_eq!(k.reduced_coproduct(xg), &Elem2::basis((xg, ug)));
        for v in 0..3 {
            let h = k.include(&Elem::basis(v));
            assert!(k.parent().counit_of(&h).is_zero());
            assert_eq!(k.project(&h), Elem::basis(v));
        }
        assert!(k.u_of_grouplike(0).unwrap().is_zero());
        assert!(matches!(k.u_of_grouplike(2), Err(Error::NotGroupLike(_))));
    }

    #[test]
    fn z2_kernel() {
        let k = CounitKernel::new(group_algebra::<Rational>(2).unwrap()).unwrap();
        assert_eq!(k.labels(), ["u_g"]);
        assert_eq!(k.reduced_coproduct(0), &Elem2::basis((0, 0)));
    }
}
