//! Linear maps between bialgebras and their compatibility checks.

use super::{render, Bialgebra, Elem, Elem2};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

/// A linear map `source → target` given by the images of the source basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismMatrix<F: Field> {
    source: Bialgebra<F>,
    target: Bialgebra<F>,
    matrix: SparseMatrix<F>,
}

impl<F: Field> MorphismMatrix<F> {
    pub fn new(source: Bialgebra<F>, target: Bialgebra<F>, matrix: SparseMatrix<F>) -> Result<Self> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(Error::MalformedPresentation(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(MorphismMatrix { source, target, matrix })
    }

    /// Builds the matrix from the images of the source basis elements.
    pub fn from_images(source: Bialgebra<F>, target: Bialgebra<F>, images: Vec<Elem<F>>) -> Result<Self> {
        let rows = target.dim();
        if images.iter().any(|v| v.keys().any(|&k| k >= rows)) {
            return Err(Error::MalformedPresentation("morphism image index out of range".into()));
        }
        let m = SparseMatrix::from_columns(rows, images);
        Self::new(source, target, m)
    }

    pub fn identity(h: Bialgebra<F>) -> Self {
        let n = h.dim();
        MorphismMatrix { source: h.clone(), target: h, matrix: SparseMatrix::identity(n) }
    }

    pub fn source(&self) -> &Bialgebra<F> {
        &self.source
    }

    pub fn target(&self) -> &Bialgebra<F> {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &Elem<F>) -> Elem<F> {
        self.matrix.apply(v)
    }

    pub fn image(&self, i: usize) -> &Elem<F> {
        self.matrix.column(i)
    }

    pub fn apply2(&self, w: &Elem2<F>) -> Elem2<F> {
        let mut out = Elem2::new();
        for (&(a, b), c) in w.iter() {
            for (&x, cx) in self.image(a).iter() {
                for (&y, cy) in self.image(b).iter() {
                    out.add_term((x, y), c.clone() * cx.clone() * cy.clone());
                }
            }
        }
        out
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.nrows() == self.matrix.ncols() && self.matrix.inverse().is_some()
    }
}

pub fn check_bialgebra_morphism<F: Field>(f: &MorphismMatrix<F>) -> AxiomReport {
    let (s, t) = (&f.source, &f.target);
    let mut report = AxiomReport::new(format!("morphism {} -> {}", s.name(), t.name()));
    let n = s.dim();
    let l = |i: usize| s.label(i);

    let mut degree = CheckBuilder::new("degree_zero");
    for i in 0..n {
        let ok = f.image(i).keys().all(|&k| t.degree(k) == s.degree(i));
        degree.record(ok, || format!("{} ↦ {}", l(i), render(t, f.image(i))));
    }
    report.push(degree.finish());

    let mut mult = CheckBuilder::new("multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(s.product(i, j));
            let rhs = t.mul(f.image(i), f.image(j));
            mult.record(lhs == rhs, || format!("({}, {})", l(i), l(j)));
        }
    }
    report.push(mult.finish());

    let mut unit = CheckBuilder::new("unit");
    unit.record(&f.apply(s.unit()) == t.unit(), || l(s.unit_index()).to_string());
    report.push(unit.finish());

    let mut comult = CheckBuilder::new("comultiplicative");
    for i in 0..n {
        let lhs = t.comult(f.image(i));
        let rhs = f.apply2(s.coproduct(i));
        comult.record(lhs == rhs, || l(i).to_string());
    }
    report.push(comult.finish());

    let mut counit = CheckBuilder::new("counit");
    for i in 0..n {
        counit.record(&t.counit_of(f.image(i)) == s.counit(i), || l(i).to_string());
    }
    report.push(counit.finish());

    let mut diff = CheckBuilder::new("commutes_with_d");
    for i in 0..n {
        let lhs = f.apply(&s.d_basis(i));
        let rhs = t.apply_d(f.image(i));
        diff.record(lhs == rhs, || l(i).to_string());
    }
    report.push(diff.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::sweedler4;
    use crate::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn sweedler_endomorphisms() {
        let h = sweedler4::<Rational>().unwrap();
        assert!(check_bialgebra_morphism(&MorphismMatrix::identity(h.clone())).all_passed());

        let lambda = q(5);
        let images = vec![
            Elem::basis(0),
            Elem::basis(1),
            Elem::term(2, lambda.clone()),
            Elem::term(3, lambda),
        ];
        let f = MorphismMatrix::from_images(h.clone(), h.clone(), images).unwrap();
        assert!(check_bialgebra_morphism(&f).all_passed());

        let images = vec![Elem::basis(0), Elem::basis(0), Elem::basis(2), Elem::basis(2)];
        let f = MorphismMatrix::from_images(h.clone(), h, images).unwrap();
        let report = check_bialgebra_morphism(&f);
        let c = report.check("comultiplicative").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("x"));
    }
}
