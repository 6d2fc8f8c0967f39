//! Exact sparse linear algebra.
//!
//! [`Vector`] is a finitely supported linear combination keyed by any ordered
//! type (basis indices, tensor index tuples, cobar words). [`Echelon`] is an
//! incremental row-echelon basis with optional tracking of how each pivot row
//! was built from the inserted vectors; it backs rank, kernel, membership and
//! preimage computations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::scalar::Field;

/// Finitely supported linear combination `Σ c_k · k`. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<K: Ord, F> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F> Default for Vector<K, F> {
    fn default() -> Self {
        Vector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> Vector<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, F::one())
    }

    pub fn term(key: K, coeff: F) -> Self {
        let mut v = Self::new();
        v.add_term(key, coeff);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, F)>>(terms: I) -> Self {
        let mut v = Self::new();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &F)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn first(&self) -> Option<(&K, &F)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &F::one());
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.add_scaled(other, &-F::one());
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-F::one())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Vector<K2, F>) -> Vector<K2, F> {
        let mut out = Vector::new();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, F> {
        self.terms
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for Vector<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Tensor product of two vectors, keyed by pairs.
pub fn tensor<A: Ord + Clone, B: Ord + Clone, F: Field>(a: &Vector<A, F>, b: &Vector<B, F>) -> Vector<(A, B), F> {
    let mut out = Vector::new();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_term((ka.clone(), kb.clone()), ca.clone() * cb.clone());
        }
    }
    out
}

/// A pivot row of an [`Echelon`]: normalized so that its first entry is 1.
#[derive(Clone, Debug)]
struct PivotRow<F: Field> {
    row: Vector<usize, F>,
    /// The row as a combination of inserted vectors (by insertion tag).
    combo: Vector<usize, F>,
}

/// Incremental echelon basis of a subspace of `F^n`.
///
/// Pivoting is deterministic: each new row pivots on its smallest nonzero
/// index after reduction.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pivots: BTreeMap<usize, PivotRow<F>>,
    track: bool,
}

/// Outcome of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction<F: Field> {
    pub residual: Vector<usize, F>,
    /// `original = residual + Σ combo[t] · inserted[t]`, when tracking is on.
    pub combo: Vector<usize, F>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new(), track: false }
    }

    /// An echelon that remembers how each row was assembled from inserted
    /// vectors, enabling kernel and preimage extraction.
    pub fn tracking() -> Self {
        Echelon { pivots: BTreeMap::new(), track: true }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    pub fn reduce(&self, v: &Vector<usize, F>) -> Reduction<F> {
        let mut residual = v.clone();
        let mut combo = Vector::new();
        let mut cursor = 0usize;
        loop {
            let next = residual
                .terms
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let pivot = &self.pivots[&k];
            residual.add_scaled(&pivot.row, &-c.clone());
            if self.track {
                combo.add_scaled(&pivot.combo, &c);
            }
            cursor = k + 1;
        }
        Reduction { residual, combo }
    }

    pub fn contains(&self, v: &Vector<usize, F>) -> bool {
        self.reduce(v).residual.is_zero()
    }

    /// Inserts `v` tagged `tag`. Returns the reduction; the vector was
    /// independent iff the residual is nonzero.
    pub fn insert(&mut self, v: &Vector<usize, F>, tag: usize) -> Reduction<F> {
        let red = self.reduce(v);
        if let Some((&k, c)) = red.residual.first() {
            let inv = c.inv().expect("pivot is nonzero");
            let row = red.residual.scaled(&inv);
            let combo = if self.track {
                // row = (v - Σ combo·inserted) / c
                let mut cmb = red.combo.neg();
                cmb.add_term(tag, F::one());
                cmb.scaled(&inv)
            } else {
                Vector::new()
            };
            self.pivots.insert(k, PivotRow { row, combo });
        }
        red
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Vector<usize, F>> {
        self.pivots.values().map(|p| &p.row)
    }
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// Sparse matrix stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F: Field> {
    rows: usize,
    cols: Vec<Vector<usize, F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vector::new(); cols] }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vector<usize, F>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < rows)));
        SparseMatrix { rows, cols }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range");
            m.cols[c].add_term(r, v);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, F::one())))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &Vector<usize, F> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector<usize, F>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.cols[c].coeff(&r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, v: &Vector<usize, F>) -> Vector<usize, F> {
        v.map_linear(|&j| self.cols[j].clone())
    }

    /// `self · rhs`
    pub fn mul(&self, rhs: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert_eq!(self.ncols(), rhs.nrows(), "dimension mismatch in product");
        SparseMatrix { rows: self.rows, cols: rhs.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn transpose(&self) -> SparseMatrix<F> {
        let mut t = SparseMatrix::zero(self.ncols(), self.rows);
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, v) in col.iter() {
                t.cols[i].add_term(j, v.clone());
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c, j);
        }
        e.rank()
    }

    /// Exact rank together with a basis of the right kernel.
    ///
    /// Kernel vectors come out in column order: one per non-pivot column,
    /// with coefficient 1 on that column.
    pub fn rank_kernel(&self) -> (usize, Vec<Vector<usize, F>>) {
        let mut e = Echelon::tracking();
        let mut kernel = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            let red = e.insert(c, j);
            if red.residual.is_zero() {
                let mut k = red.combo.neg();
                k.add_term(j, F::one());
                kernel.push(k);
            }
        }
        (e.rank(), kernel)
    }

    /// Some `x` with `self · x = b`, if one exists.
    pub fn solve(&self, b: &Vector<usize, F>) -> Option<Vector<usize, F>> {
        let mut e = Echelon::tracking();
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c, j);
        }
        let red = e.reduce(b);
        red.residual.is_zero().then_some(red.combo)
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<SparseMatrix<F>> {
        if self.rows != self.ncols() {
            return None;
        }
        let n = self.rows;
        let mut e = Echelon::tracking();
        for (j, c) in self.cols.iter().enumerate() {
            e.insert(c, j);
        }
        if e.rank() != n {
            return None;
        }
        let cols = (0..n)
            .map(|i| {
                let red = e.reduce(&Vector::basis(i));
                debug_assert!(red.residual.is_zero());
                red.combo
            })
            .collect();
        Some(SparseMatrix { rows: n, cols })
    }

    /// Coordinate triplet text: one `row col scalar` line per nonzero.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "% {} {} {}", self.rows, self.ncols(), self.nnz());
        let mut entries: Vec<(usize, usize, &F)> = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, v) in col.iter() {
                entries.push((i, j, v));
            }
        }
        entries.sort_by_key(|&(i, j, _)| (i, j));
        for (i, j, v) in entries {
            let _ = writeln!(out, "{i} {j} {v}");
        }
        out
    }
}

/// Dense helper: rank of a list of vectors.
pub fn rank_of<F: Field>(vectors: &[Vector<usize, F>]) -> usize {
    let mut e = Echelon::new();
    for (t, v) in vectors.iter().enumerate() {
        e.insert(v, t);
    }
    e.rank()
}
