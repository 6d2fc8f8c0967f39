//! Finite-dimensional graded (bi)algebras given by structure constants.

pub mod catalog;
pub mod dual;
pub mod kernel;
pub mod morphism;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::{Field, FieldSpec};

pub use catalog::{make_example, CatalogId, Example};
pub use dual::{canonical_bidual, dual_bialgebra, dual_module_algebra, pairing_action, Dual};
pub use kernel::CounitKernel;
pub use morphism::{check_bialgebra_morphism, MorphismMatrix};

/// Element of `A` in basis coordinates.
pub type Elem<F> = Vector<usize, F>;
/// Element of `A ⊗ A`.
pub type Elem2<F> = Vector<(usize, usize), F>;

/// Characters that would make labels ambiguous in the file formats.
const RESERVED: &[char] = &['*', '|', ',', '.', '<', ' ', '\t', '\n', '"'];

fn validate_labels(basis: &[String]) -> Result<()> {
    let mut seen = BTreeMap::new();
    for (i, b) in basis.iter().enumerate() {
        if b.is_empty() || b.contains(RESERVED) {
            return Err(Error::MalformedPresentation(format!("invalid basis label {b:?}")));
        }
        if let Some(j) = seen.insert(b.as_str(), i) {
            return Err(Error::MalformedPresentation(format!("label {b:?} repeated at {j} and {i}")));
        }
    }
    Ok(())
}

fn check_indices<F: Field>(v: &Elem<F>, dim: usize, what: &str) -> Result<()> {
    match v.keys().last() {
        Some(&k) if k >= dim => Err(Error::MalformedPresentation(format!("{what}: index {k} out of range {dim}"))),
        _ => Ok(()),
    }
}

/// A unital associative graded algebra, optionally with a differential of degree +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra<F: Field> {
    name: String,
    basis: Vec<String>,
    degrees: Vec<i64>,
    unit: Elem<F>,
    /// `mult[i * dim + j] = e_i · e_j`.
    mult: Vec<Elem<F>>,
    differential: Option<Vec<Elem<F>>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        degrees: Vec<i64>,
        unit: Elem<F>,
        products: impl IntoIterator<Item = ((usize, usize), Elem<F>)>,
        differential: Option<Vec<Elem<F>>>,
    ) -> Result<Self> {
        let dim = basis.len();
        validate_labels(&basis)?;
        if degrees.len() != dim {
            return Err(Error::MalformedPresentation(format!("{} degrees for {dim} basis elements", degrees.len())));
        }
        check_indices(&unit, dim, "unit")?;
        let mut mult = vec![Elem::new(); dim * dim];
        for ((i, j), v) in products {
            if i >= dim || j >= dim {
                return Err(Error::MalformedPresentation(format!("product ({i},{j}) out of range {dim}")));
            }
            check_indices(&v, dim, "product")?;
            mult[i * dim + j].add_assign(&v);
        }
        if let Some(d) = &differential {
            if d.len() != dim {
                return Err(Error::MalformedPresentation("differential has wrong length".into()));
            }
            for v in d {
                check_indices(v, dim, "differential")?;
            }
        }
        let differential = differential.filter(|d| d.iter().any(|v| !v.is_zero()));
        Ok(Algebra { name: name.into(), basis, degrees, unit, mult, differential })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn field(&self) -> FieldSpec {
        F::field_spec()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// True when every basis element sits in degree 0.
    pub fn trivially_graded(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0)
    }

    pub fn unit(&self) -> &Elem<F> {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &Elem<F> {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &Elem<F>, b: &Elem<F>) -> Elem<F> {
        let mut out = Elem::new();
        for (&i, ca) in a.iter() {
            for (&j, cb) in b.iter() {
                out.add_scaled(self.product(i, j), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    pub fn has_differential(&self) -> bool {
        self.differential.is_some()
    }

    pub fn differential(&self) -> Option<&[Elem<F>]> {
        self.differential.as_deref()
    }

    pub fn d_basis(&self, i: usize) -> Elem<F> {
        self.differential.as_ref().map(|d| d[i].clone()).unwrap_or_default()
    }

    pub fn apply_d(&self, v: &Elem<F>) -> Elem<F> {
        match &self.differential {
            Some(d) => v.map_linear(|&i| d[i].clone()),
            None => Elem::new(),
        }
    }

    /// Degree of a nonzero homogeneous vector, `None` if zero or mixed.
    pub fn degree_of(&self, v: &Elem<F>) -> Option<i64> {
        let mut degs = v.keys().map(|&i| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Product in `A ⊗ A` with the Koszul sign `(a1⊗a2)(b1⊗b2) = (−1)^{|a2||b1|} a1b1 ⊗ a2b2`.
    pub fn tensor_mul(&self, a: &Elem2<F>, b: &Elem2<F>) -> Elem2<F> {
        let mut out = Elem2::new();
        for (&(a1, a2), ca) in a.iter() {
            for (&(b1, b2), cb) in b.iter() {
                let sign = F::sign(self.degrees[a2] * self.degrees[b1] % 2 != 0);
                let c = sign * ca.clone() * cb.clone();
                let left = self.product(a1, b1);
                let right = self.product(a2, b2);
                for (&l, cl) in left.iter() {
                    for (&r, cr) in right.iter() {
                        out.add_term((l, r), c.clone() * cl.clone() * cr.clone());
                    }
                }
            }
        }
        out
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::new(format!("algebra {}", self.name));
        self.algebra_checks(&mut report);
        report
    }

    fn algebra_checks(&self, report: &mut AxiomReport) {
        let n = self.dim();
        let l = |i: usize| self.basis[i].as_str();

        let mut assoc = CheckBuilder::new("associativity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let lhs = self.mul(ij, &Elem::basis(k));
                    let rhs = self.mul(&Elem::basis(i), self.product(j, k));
                    assoc.record(lhs == rhs, || format!("({}, {}, {})", l(i), l(j), l(k)));
                }
            }
        }
        report.push(assoc.finish());

        let mut unit = CheckBuilder::new("unit");
        for i in 0..n {
            let e = Elem::basis(i);
            let ok = self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e;
            unit.record(ok, || l(i).to_string());
        }
        report.push(unit.finish());

        let mut homog = CheckBuilder::new("homogeneity");
        homog.record(self.unit.keys().all(|&i| self.degrees[i] == 0), || "unit".into());
        for i in 0..n {
            for j in 0..n {
                let d = self.degrees[i] + self.degrees[j];
                let ok = self.product(i, j).keys().all(|&k| self.degrees[k] == d);
                homog.record(ok, || format!("({}, {})", l(i), l(j)));
            }
        }
        if let Some(dd) = &self.differential {
            for (i, v) in dd.iter().enumerate() {
                let ok = v.keys().all(|&k| self.degrees[k] == self.degrees[i] + 1);
                homog.record(ok, || format!("d({})", l(i)));
            }
        }
        report.push(homog.finish());

        if self.differential.is_some() {
            let mut dsq = CheckBuilder::new("d_squared");
            for i in 0..n {
                let ok = self.apply_d(&self.d_basis(i)).is_zero();
                dsq.record(ok, || l(i).to_string());
            }
            report.push(dsq.finish());

            let mut der = CheckBuilder::new("d_derivation");
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.apply_d(self.product(i, j));
                    let mut rhs = self.mul(&self.d_basis(i), &Elem::basis(j));
                    let second = self.mul(&Elem::basis(i), &self.d_basis(j));
                    rhs.add_scaled(&second, &F::sign(self.degrees[i] % 2 != 0));
                    der.record(lhs == rhs, || format!("({}, {})", l(i), l(j)));
                }
            }
            report.push(der.finish());
        }
    }
}

/// A graded bialgebra whose unit is a basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra<F: Field> {
    algebra: Algebra<F>,
    unit_index: usize,
    comult: Vec<Elem2<F>>,
    counit: Vec<F>,
}

impl<F: Field> std::ops::Deref for Bialgebra<F> {
    type Target = Algebra<F>;

    fn deref(&self) -> &Algebra<F> {
        &self.algebra
    }
}

impl<F: Field> Bialgebra<F> {
    pub fn new(algebra: Algebra<F>, comult: Vec<Elem2<F>>, counit: Vec<F>) -> Result<Self> {
        let dim = algebra.dim();
        let unit_index = match algebra.unit.first() {
            Some((&i, c)) if algebra.unit.len() == 1 && c.is_one() => i,
            _ => {
                return Err(Error::MalformedPresentation(
                    "the unit of a bialgebra must be a basis element".into(),
                ))
            }
        };
        if comult.len() != dim || counit.len() != dim {
            return Err(Error::MalformedPresentation("comultiplication or counit has wrong length".into()));
        }
        for v in &comult {
            if let Some(&(a, b)) = v.keys().find(|&&(a, b)| a >= dim || b >= dim) {
                return Err(Error::MalformedPresentation(format!("coproduct term ({a},{b}) out of range {dim}")));
            }
        }
        Ok(Bialgebra { algebra, unit_index, comult, counit })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn into_algebra(self) -> Algebra<F> {
        self.algebra
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.algebra.set_name(name);
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn coproduct(&self, i: usize) -> &Elem2<F> {
        &self.comult[i]
    }

    pub fn comult(&self, v: &Elem<F>) -> Elem2<F> {
        v.map_linear(|&i| self.comult[i].clone())
    }

    pub fn counit(&self, i: usize) -> &F {
        &self.counit[i]
    }

    pub fn counit_of(&self, v: &Elem<F>) -> F {
        v.iter().fold(F::zero(), |acc, (&i, c)| acc + c.clone() * self.counit[i].clone())
    }

    pub fn counits(&self) -> &[F] {
        &self.counit
    }

    /// `Δg = g⊗g` and `ε(g) = 1`.
    pub fn is_grouplike(&self, i: usize) -> bool {
        self.comult[i] == Elem2::basis((i, i)) && self.counit[i].is_one()
    }

    /// `(Δ ⊗ id)(w)` for `w ∈ H⊗H`, as triples.
    fn delta_left(&self, w: &Elem2<F>) -> Vector<(usize, usize, usize), F> {
        let mut out = Vector::new();
        for (&(a, b), c) in w.iter() {
            for (&(x, y), cx) in self.comult[a].iter() {
                out.add_term((x, y, b), c.clone() * cx.clone());
            }
        }
        out
    }

    fn delta_right(&self, w: &Elem2<F>) -> Vector<(usize, usize, usize), F> {
        let mut out = Vector::new();
        for (&(a, b), c) in w.iter() {
            for (&(x, y), cx) in self.comult[b].iter() {
                out.add_term((a, x, y), c.clone() * cx.clone());
            }
        }
        out
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::new(format!("bialgebra {}", self.name()));
        self.algebra.algebra_checks(&mut report);
        let n = self.dim();
        let l = |i: usize| self.label(i);
        let deg = |i: usize| self.degree(i);

        let mut homog = CheckBuilder::new("coalgebra_homogeneity");
        for i in 0..n {
            let ok = self.comult[i].keys().all(|&(a, b)| deg(a) + deg(b) == deg(i))
                && (self.counit[i].is_zero() || deg(i) == 0);
            homog.record(ok, || l(i).to_string());
        }
        report.push(homog.finish());

        let mut coassoc = CheckBuilder::new("coassociativity");
        for i in 0..n {
            let ok = self.delta_left(&self.comult[i]) == self.delta_right(&self.comult[i]);
            coassoc.record(ok, || l(i).to_string());
        }
        report.push(coassoc.finish());

        let mut counit = CheckBuilder::new("counit");
        for i in 0..n {
            let mut left = Elem::new();
            let mut right = Elem::new();
            for (&(a, b), c) in self.comult[i].iter() {
                left.add_term(b, c.clone() * self.counit[a].clone());
                right.add_term(a, c.clone() * self.counit[b].clone());
            }
            let e = Elem::basis(i);
            counit.record(left == e && right == e, || l(i).to_string());
        }
        report.push(counit.finish());

        let mut mult = CheckBuilder::new("comult_multiplicative");
        for i in 0..n {
            for j in 0..n {
                let lhs = self.comult(self.product(i, j));
                let rhs = self.tensor_mul(&self.comult[i], &self.comult[j]);
                mult.record(lhs == rhs, || format!("({}, {})", l(i), l(j)));
            }
        }
        let u = self.unit_index;
        mult.record(self.comult[u] == Elem2::basis((u, u)), || format!("Δ({})", l(u)));
        report.push(mult.finish());

        let mut cmult = CheckBuilder::new("counit_multiplicative");
        cmult.record(self.counit[u].is_one(), || format!("ε({})", l(u)));
        for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_of(self.product(i, j));
                let rhs = self.counit[i].clone() * self.counit[j].clone();
                cmult.record(lhs == rhs, || format!("({}, {})", l(i), l(j)));
            }
        }
        report.push(cmult.finish());

        if self.has_differential() {
            let mut coder = CheckBuilder::new("d_coderivation");
            for i in 0..n {
                let lhs = self.comult(&self.d_basis(i));
                let mut rhs = Elem2::new();
                for (&(a, b), c) in self.comult[i].iter() {
                    for (&x, cx) in self.d_basis(a).iter() {
                        rhs.add_term((x, b), c.clone() * cx.clone());
                    }
                    let s = F::sign(deg(a) % 2 != 0);
                    for (&y, cy) in self.d_basis(b).iter() {
                        rhs.add_term((a, y), s.clone() * c.clone() * cy.clone());
                    }
                }
                coder.record(lhs == rhs, || l(i).to_string());
            }
            report.push(coder.finish());

            let mut dcounit = CheckBuilder::new("d_counit");
            for i in 0..n {
                dcounit.record(self.counit_of(&self.d_basis(i)).is_zero(), || l(i).to_string());
            }
            report.push(dcounit.finish());
        }
        report
    }

    /// Checks axioms and fails with the names of the broken ones.
    pub fn validated(self) -> Result<Self> {
        let report = self.check_axioms();
        if report.all_passed() {
            Ok(self)
        } else {
            Err(Error::AxiomFailure(format!("{}: {}", self.name(), report.failed().join(", "))))
        }
    }

    /// Returns a copy with a replaced coproduct on one basis element (test mutations).
    pub fn with_coproduct(&self, i: usize, value: Elem2<F>) -> Self {
        let mut out = self.clone();
        out.comult[i] = value;
        out
    }

    /// Same structure constants on the same index positions, ignoring names and labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self.degrees == other.degrees
            && self.unit_index == other.unit_index
            && self.algebra.mult == other.algebra.mult
            && self.algebra.differential == other.algebra.differential
            && self.comult == other.comult
            && self.counit == other.counit
    }
}

impl<F: Field> Algebra<F> {
    /// Same structure constants on the same index positions, ignoring names and labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.degrees == other.degrees
            && self.unit == other.unit
            && self.mult == other.mult
            && self.differential == other.differential
    }

    /// Returns a copy with one product replaced (test mutations).
    pub fn with_product(&self, i: usize, j: usize, value: Elem<F>) -> Self {
        let mut out = self.clone();
        let n = self.dim();
        out.mult[i * n + j] = value;
        out
    }

    /// Rewrites the algebra in a new basis given by the columns of `p` (old coordinates).
    pub fn change_basis(&self, p: &crate::linalg::SparseMatrix<F>, labels: Vec<String>) -> Result<Self> {
        let q = p
            .inverse()
            .ok_or_else(|| Error::MalformedPresentation("change of basis is not invertible".into()))?;
        let n = self.dim();
        let mut degrees = Vec::with_capacity(n);
        for j in 0..n {
            degrees.push(self.degree_of(p.column(j)).ok_or_else(|| {
                Error::NonHomogeneous(format!("new basis vector {} is not homogeneous", labels[j]))
            })?);
        }
        let to_new = |v: &Elem<F>| q.apply(v);
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                products.push(((i, j), to_new(&self.mul(p.column(i), p.column(j)))));
            }
        }
        let differential =
            self.differential.as_ref().map(|_| (0..n).map(|j| to_new(&self.apply_d(p.column(j)))).collect());
        Algebra::new(self.name.clone(), labels, degrees, to_new(&self.unit), products, differential)
    }
}

impl<F: Field> Bialgebra<F> {
    /// Rewrites the bialgebra in a new basis given by the columns of `p` (old coordinates).
    pub fn change_basis(&self, p: &crate::linalg::SparseMatrix<F>, labels: Vec<String>) -> Result<Self> {
        let algebra = self.algebra.change_basis(p, labels)?;
        let q = p.inverse().expect("checked by the algebra change");
        let (comult, counit) = dual::transform_coalgebra(&self.comult, &self.counit, p, &q);
        Bialgebra::new(algebra, comult, counit)
    }
}

/// Renders a vector in `A` as `c1 * a + c2 * b`.
pub fn render<F: Field>(alg: &Algebra<F>, v: &Elem<F>) -> String {
    render_terms(v.iter().map(|(&i, c)| (alg.label(i).to_string(), c)))
}

pub(crate) fn render_terms<'a, F: Field>(terms: impl Iterator<Item = (String, &'a F)>) -> String {
    let parts: Vec<String> = terms.map(|(k, c)| format!("{c} * {k}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
