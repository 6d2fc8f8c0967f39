//! The Hochschild complex `C^{p,q}(A) = Hom(A^{⊗q}, A)_p` with braces, cup and differential.
//!
//! Cochains are stored unshifted. Braces are the Koszul compositions of the
//! shifted maps `(sA)^{⊗q} → sA`, where `s a` has degree `|a| − 1`; the shift
//! multiplies a coefficient by `(−1)^{Σ_j (q−j)(|a_j|−1)}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

/// Dense cochains above this many coefficients are refused.
pub const DENSE_CAP: u128 = 10_000_000;

/// A homogeneous cochain of arity `q` and internal degree `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain<F: Field> {
    pub p: i64,
    pub q: usize,
    dim: usize,
    /// `coeffs[(args as base-dim number) * dim + out]`.
    coeffs: Vec<F>,
}

impl<F: Field> fmt::Debug for Cochain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(p={}, q={}, nnz={})", self.p, self.q, self.nnz())
    }
}

pub(crate) fn dense_size(dim: usize, q: usize) -> u128 {
    (dim as u128).checked_pow(q as u32 + 1).unwrap_or(u128::MAX)
}

impl<F: Field> Cochain<F> {
    pub fn zero(dim: usize, p: i64, q: usize) -> Result<Self> {
        let size = dense_size(dim, q);
        if size > DENSE_CAP {
            return Err(Error::TruncationExceeded { what: format!("cochains of arity {q}"), size, cap: DENSE_CAP });
        }
        Ok(Cochain { p, q, dim, coeffs: vec![F::zero(); size as usize] })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn total_degree(&self) -> i64 {
        self.p + self.q as i64
    }

    /// `p + q − 1`.
    pub fn shifted_degree(&self) -> i64 {
        self.total_degree() - 1
    }

    pub fn index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.dim + a)
    }

    pub fn value(&self, args: &[usize]) -> &[F] {
        let base = self.index(args) * self.dim;
        &self.coeffs[base..base + self.dim]
    }

    pub fn value_vec(&self, args: &[usize]) -> Elem<F> {
        self.value(args).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    }

    pub fn get(&self, out: usize, args: &[usize]) -> &F {
        &self.coeffs[self.index(args) * self.dim + out]
    }

    pub fn add_to(&mut self, out: usize, args: &[usize], c: F) {
        let i = self.index(args) * self.dim + out;
        let v = std::mem::replace(&mut self.coeffs[i], F::zero());
        self.coeffs[i] = v + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn num_args(&self) -> usize {
        self.coeffs.len() / self.dim.max(1)
    }

    /// Nonzero entries `(args, out, coeff)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize, &F)> + '_ {
        let d = self.dim;
        let q = self.q;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (decode(i / d, d, q), i % d, c))
    }

    fn combine(&mut self, other: &Cochain<F>, c: &F) {
        debug_assert_eq!((self.p, self.q, self.dim), (other.p, other.q, other.dim));
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                let v = std::mem::replace(a, F::zero());
                *a = v + c.clone() * b.clone();
            }
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = self.clone();
        for x in out.coeffs.iter_mut() {
            let v = std::mem::replace(x, F::zero());
            *x = c.clone() * v;
        }
        out
    }

    /// Builds the cochain `args ↦ Π_i maps[i](a_i)` multiplied in `A`.
    pub fn product_of_maps(alg: &Algebra<F>, maps: &[Vec<Elem<F>>], p: i64) -> Result<Self> {
        let n = alg.dim();
        let q = maps.len();
        let mut out = Cochain::zero(n, p, q)?;
        for idx in 0..out.num_args() {
            let args = decode(idx, n, q);
            let mut acc = alg.unit().clone();
            for (m, &a) in maps.iter().zip(&args) {
                acc = alg.mul(&acc, &m[a]);
                if acc.is_zero() {
                    break;
                }
            }
            for (&o, c) in acc.iter() {
                out.coeffs[idx * n + o] = c.clone();
            }
        }
        Ok(out)
    }
}

pub(crate) fn decode(mut idx: usize, dim: usize, q: usize) -> Vec<usize> {
    let mut out = vec![0; q];
    for slot in (0..q).rev() {
        out[slot] = idx % dim;
        idx /= dim;
    }
    out
}

/// A finite sum of homogeneous cochains keyed by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiCochain<F: Field> {
    comps: BTreeMap<(i64, usize), Cochain<F>>,
}

impl<F: Field> From<Cochain<F>> for MultiCochain<F> {
    fn from(c: Cochain<F>) -> Self {
        let mut m = MultiCochain::zero();
        m.add(c);
        m
    }
}

impl<F: Field> Default for MultiCochain<F> {
    fn default() -> Self {
        MultiCochain::zero()
    }
}

impl<F: Field> MultiCochain<F> {
    pub fn zero() -> Self {
        MultiCochain { comps: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = &Cochain<F>> {
        self.comps.values()
    }

    pub fn component(&self, p: i64, q: usize) -> Option<&Cochain<F>> {
        self.comps.get(&(p, q))
    }

    /// The single component of a nonzero bihomogeneous element.
    pub fn homogeneous(&self) -> Option<&Cochain<F>> {
        match self.comps.len() {
            1 => self.comps.values().next(),
            _ => None,
        }
    }

    pub fn add(&mut self, c: Cochain<F>) {
        self.add_scaled_cochain(&c, &F::one());
    }

    pub fn add_scaled_cochain(&mut self, c: &Cochain<F>, s: &F) {
        if c.is_zero() || s.is_zero() {
            return;
        }
        let key = (c.p, c.q);
        match self.comps.get_mut(&key) {
            Some(existing) => {
                existing.combine(c, s);
                if existing.is_zero() {
                    self.comps.remove(&key);
                }
            }
            None => {
                self.comps.insert(key, c.scaled(s));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MultiCochain<F>, s: &F) {
        for c in other.comps.values() {
            self.add_scaled_cochain(c, s);
        }
    }

    pub fn scaled(&self, s: &F) -> Self {
        let mut out = MultiCochain::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn total_degree(&self) -> Option<i64> {
        let mut it = self.comps.values().map(|c| c.total_degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

/// Strictly increasing position tuples of length `k` in `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pos: Vec<usize> = (0..k).collect();
    loop {
        out.push(pos.clone());
        if !crate::cobar::next_combination(&mut pos, n) {
            return out;
        }
    }
}

/// `C•(A)` for a finite-dimensional (d.g.) algebra.
#[derive(Debug, Clone)]
pub struct Hochschild<F: Field> {
    algebra: Algebra<F>,
    mu: MultiCochain<F>,
    mult: Cochain<F>,
}

impl<F: Field> Hochschild<F> {
    pub fn new(algebra: Algebra<F>) -> Result<Self> {
        let n = algebra.dim();
        let mut mult = Cochain::zero(n, 0, 2)?;
        for i in 0..n {
            for j in 0..n {
                for (&k, c) in algebra.product(i, j).iter() {
                    mult.add_to(k, &[i, j], c.clone());
                }
            }
        }
        let mut mu = MultiCochain::zero();
        mu.add_scaled_cochain(&mult, &-F::one());
        if let Some(d) = algebra.differential() {
            let mut dc = Cochain::zero(n, 1, 1)?;
            for (i, v) in d.iter().enumerate() {
                for (&k, c) in v.iter() {
                    dc.add_to(k, &[i], c.clone());
                }
            }
            mu.add(dc);
        }
        Ok(Hochschild { algebra, mu, mult })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The multiplication as a `(0, 2)` cochain.
    pub fn multiplication(&self) -> &Cochain<F> {
        &self.mult
    }

    pub fn zero(&self, p: i64, q: usize) -> Result<Cochain<F>> {
        Cochain::zero(self.dim(), p, q)
    }

    fn deg(&self, a: usize) -> i64 {
        self.algebra.degree(a)
    }

    /// Shift sign parity `Σ_j (q−j)(|a_j|−1)` for degrees listed in order.
    fn shift_parity(degs: impl ExactSizeIterator<Item = i64>) -> i64 {
        let q = degs.len() as i64;
        degs.enumerate().map(|(j, d)| (q - 1 - j as i64) * (d - 1)).sum()
    }

    /// A cochain from a linear map `A → A` given as columns.
    pub fn from_linear_map(&self, columns: &[Elem<F>], p: i64) -> Result<Cochain<F>> {
        let mut c = self.zero(p, 1)?;
        for (a, v) in columns.iter().enumerate() {
            for (&o, x) in v.iter() {
                c.add_to(o, &[a], x.clone());
            }
        }
        self.check_homogeneous(&c)?;
        Ok(c)
    }

    /// The arity-0 cochain with value `v`.
    pub fn constant(&self, v: &Elem<F>, p: i64) -> Result<Cochain<F>> {
        let mut c = self.zero(p, 0)?;
        for (&o, x) in v.iter() {
            c.add_to(o, &[], x.clone());
        }
        self.check_homogeneous(&c)?;
        Ok(c)
    }

    pub fn check_homogeneous(&self, c: &Cochain<F>) -> Result<()> {
        for (args, out, _) in c.entries() {
            let expected = c.p + args.iter().map(|&a| self.deg(a)).sum::<i64>();
            if self.deg(out) != expected {
                return Err(Error::NonHomogeneous(format!(
                    "coefficient {}<-{} in a cochain of internal degree {}",
                    self.algebra.label(out),
                    args.iter().map(|&a| self.algebra.label(a)).collect::<Vec<_>>().join(","),
                    c.p
                )));
            }
        }
        Ok(())
    }

    /// Shifted brace `f{g_1, …, g_k}` of homogeneous cochains.
    pub fn brace_cochains(&self, f: &Cochain<F>, gs: &[&Cochain<F>]) -> Result<Cochain<F>> {
        let k = gs.len();
        if k == 0 {
            return Ok(f.clone());
        }
        let dim = self.dim();
        let n_args = f.q + gs.iter().map(|g| g.q).sum::<usize>() - k;
        let p = f.p + gs.iter().map(|g| g.p).sum::<i64>();
        let mut out = self.zero(p, n_args)?;
        if k > f.q || gs.iter().any(|g| g.is_zero()) || f.is_zero() {
            return Ok(out);
        }
        let positions = combinations(f.q, k);
        let g_shift: Vec<i64> = gs.iter().map(|g| g.shifted_degree()).collect();
        let mut c_idx = vec![0usize; f.q];
        let mut c_deg = vec![0i64; f.q];
        let mut slots: Vec<Option<(usize, usize)>> = vec![None; f.q];
        for idx in 0..out.num_args() {
            let args = decode(idx, dim, n_args);
            let degs: Vec<i64> = args.iter().map(|&a| self.deg(a)).collect();
            let outer = Self::shift_parity(degs.iter().copied());
            let base = idx * dim;
            for pos in &positions {
                let mut t = 0;
                let mut before = 0i64;
                let mut parity = outer;
                let mut j = 0;
                for s in 0..f.q {
                    if j < k && pos[j] == s {
                        let g = gs[j];
                        let block = &args[t..t + g.q];
                        parity += g_shift[j] * before;
                        parity += Self::shift_parity(degs[t..t + g.q].iter().copied());
                        let bdeg: i64 = degs[t..t + g.q].iter().sum();
                        c_deg[s] = g.p + bdeg;
                        slots[s] = Some((j, g.index(block)));
                        before += bdeg - g.q as i64;
                        t += g.q;
                        j += 1;
                    } else {
                        c_idx[s] = args[t];
                        c_deg[s] = degs[t];
                        slots[s] = None;
                        before += degs[t] - 1;
                        t += 1;
                    }
                }
                parity += Self::shift_parity(c_deg.iter().copied());
                let sign = F::sign(parity.rem_euclid(2) == 1);
                self.accumulate(f, gs, &slots, &mut c_idx, 0, sign, &mut out.coeffs[base..base + dim]);
            }
        }
        Ok(out)
    }

    /// Sums `f(c)` over the nonzero outputs of the inserted cochains.
    #[allow(clippy::too_many_arguments)]
    fn accumulate(
        &self,
        f: &Cochain<F>,
        gs: &[&Cochain<F>],
        slots: &[Option<(usize, usize)>],
        c_idx: &mut [usize],
        s: usize,
        coeff: F,
        target: &mut [F],
    ) {
        let dim = self.dim();
        if s == slots.len() {
            for (o, v) in f.value(c_idx).iter().enumerate() {
                if !v.is_zero() {
                    let cur = std::mem::replace(&mut target[o], F::zero());
                    target[o] = cur + coeff.clone() * v.clone();
                }
            }
            return;
        }
        match slots[s] {
            None => self.accumulate(f, gs, slots, c_idx, s + 1, coeff, target),
            Some((j, gidx)) => {
                let vals = &gs[j].coeffs[gidx * dim..gidx * dim + dim];
                for (c, v) in vals.iter().enumerate() {
                    if !v.is_zero() {
                        c_idx[s] = c;
                        self.accumulate(f, gs, slots, c_idx, s + 1, coeff.clone() * v.clone(), target);
                    }
                }
            }
        }
    }

    /// Shifted brace extended multilinearly over components.
    pub fn brace(&self, f: &MultiCochain<F>, gs: &[MultiCochain<F>]) -> Result<MultiCochain<F>> {
        let mut out = MultiCochain::zero();
        let mut choice = Vec::with_capacity(gs.len());
        for fc in f.components() {
            self.brace_rec(fc, gs, &mut choice, &mut out)?;
        }
        Ok(out)
    }

    fn brace_rec<'a>(
        &self,
        f: &Cochain<F>,
        gs: &'a [MultiCochain<F>],
        choice: &mut Vec<&'a Cochain<F>>,
        out: &mut MultiCochain<F>,
    ) -> Result<()> {
        if choice.len() == gs.len() {
            if gs.len() <= f.q {
                out.add(self.brace_cochains(f, choice)?);
            }
            return Ok(());
        }
        for c in gs[choice.len()].components() {
            choice.push(c);
            self.brace_rec(f, gs, choice, out)?;
            choice.pop();
        }
        Ok(())
    }

    /// `(f∪g)(a_1..a_{q+q'}) = (−1)^{p_g Σ_{i≤q}(|a_i|+1)} f(a_1..a_q)·g(a_{q+1}..)`, which is `(−1)^{|f|+1} m{f, g}`.
    pub fn cup_cochains(&self, f: &Cochain<F>, g: &Cochain<F>) -> Result<Cochain<F>> {
        let dim = self.dim();
        let mut out = self.zero(f.p + g.p, f.q + g.q)?;
        if f.is_zero() || g.is_zero() {
            return Ok(out);
        }
        let nf = f.num_args();
        let ng = g.num_args();
        for i in 0..nf {
            let fv = f.value_vec(&decode(i, dim, f.q));
            if fv.is_zero() {
                continue;
            }
            let left = decode(i, dim, f.q);
            let parity = g.p * left.iter().map(|&a| self.deg(a) + 1).sum::<i64>();
            let sign = F::sign(parity.rem_euclid(2) == 1);
            for j in 0..ng {
                let gv = g.value_vec(&decode(j, dim, g.q));
                if gv.is_zero() {
                    continue;
                }
                let prod = self.algebra.mul(&fv, &gv);
                let base = (i * ng + j) * dim;
                for (&o, c) in prod.iter() {
                    out.coeffs[base + o] = out.coeffs[base + o].clone() + sign.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn cup(&self, a: &MultiCochain<F>, b: &MultiCochain<F>) -> Result<MultiCochain<F>> {
        let mut out = MultiCochain::zero();
        for f in a.components() {
            for g in b.components() {
                out.add(self.cup_cochains(f, g)?);
            }
        }
        Ok(out)
    }

    /// `d f = μ{f} − (−1)^{|f|'} f{μ}` with `μ = d_A − m`.
    pub fn differential(&self, f: &MultiCochain<F>) -> Result<MultiCochain<F>> {
        let mut out = self.brace(&self.mu, std::slice::from_ref(f))?;
        for c in f.components() {
            let fc = MultiCochain::from(c.clone());
            let term = self.brace(&fc, std::slice::from_ref(&self.mu))?;
            out.add_scaled(&term, &-F::sign(c.shifted_degree().rem_euclid(2) == 1));
        }
        Ok(out)
    }

    pub fn differential_cochain(&self, f: &Cochain<F>) -> Result<MultiCochain<F>> {
        self.differential(&MultiCochain::from(f.clone()))
    }

    /// Basis cochains of bidegree `(p, q)`, ordered by `(args, out)`.
    pub fn basis(&self, p: i64, q: usize) -> Result<Vec<Cochain<F>>> {
        let dim = self.dim();
        let template = self.zero(p, q)?;
        let mut out = Vec::new();
        for idx in 0..template.num_args() {
            let args = decode(idx, dim, q);
            let d = p + args.iter().map(|&a| self.deg(a)).sum::<i64>();
            for o in 0..dim {
                if self.deg(o) == d {
                    let mut c = template.clone();
                    c.add_to(o, &args, F::one());
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    /// Internal degrees carried by some basis cochain of arity `q`.
    pub fn internal_degrees(&self, q: usize) -> Vec<i64> {
        let degs: std::collections::BTreeSet<i64> = self.algebra.degrees().iter().copied().collect();
        let mut reach = std::collections::BTreeSet::from([0i64]);
        for _ in 0..q {
            reach = reach.iter().flat_map(|s| degs.iter().map(move |d| s + d)).collect();
        }
        let mut out: Vec<i64> =
            reach.iter().flat_map(|s| degs.iter().map(move |d| d - s)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        out.sort();
        out
    }

    /// Renders nonzero coefficients as `c * out<-a1,a2`.
    pub fn render(&self, f: &MultiCochain<F>) -> String {
        let mut parts = Vec::new();
        for c in f.components() {
            for (args, out, x) in c.entries() {
                let args: Vec<&str> = args.iter().map(|&a| self.algebra.label(a)).collect();
                parts.push(format!("{x} * {}<-{}", self.algebra.label(out), args.join(",")));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `∂f = 0`, evaluated on every tuple of basis arguments; the witness is the first
    /// nonzero value.
    pub fn cocycle_check(&self, f: &MultiCochain<F>) -> Result<crate::report::CheckResult> {
        let df = self.differential(f)?;
        let mut check = CheckBuilder::new("cocycle");
        let mut arities: Vec<usize> = f.components().flat_map(|c| [c.q, c.q + 1]).collect();
        arities.sort();
        arities.dedup();
        let n = self.dim();
        for q in arities {
            let count = (n as u128).pow(q as u32) as usize;
            for idx in 0..count {
                let args = decode(idx, n, q);
                let mut value = Elem::new();
                for c in df.components().filter(|c| c.q == q) {
                    value.add_assign(&c.value_vec(&args));
                }
                check.record(value.is_zero(), || {
                    let labels: Vec<&str> = args.iter().map(|&a| self.algebra.label(a)).collect();
                    format!("∂f({}) = {}", labels.join(", "), crate::algebra::render(&self.algebra, &value))
                });
            }
        }
        Ok(check.finish())
    }

    /// Checks `d² = 0` on every basis cochain of arity `≤ max_q`.
    pub fn check_d_squared(&self, max_q: usize) -> Result<AxiomReport> {
        let mut report = AxiomReport::new(format!("hochschild {}", self.algebra.name()));
        let mut check = CheckBuilder::new("d_squared");
        for q in 0..=max_q {
            for p in self.internal_degrees(q) {
                for b in self.basis(p, q)? {
                    let dd = self.differential(&self.differential_cochain(&b)?)?;
                    let m = MultiCochain::from(b);
                    check.record(dd.is_zero(), || self.render(&m));
                }
            }
        }
        report.push(check.finish());
        Ok(report)
    }
}

/// Linear maps `A → A` given as columns.
pub type LinearMap<F> = Vec<Elem<F>>;

/// `n` skew derivations `d_i(ab) = g_i(a) d_i(b) + d_i(a) h_i(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDerivationChain<F: Field> {
    pub ds: Vec<LinearMap<F>>,
    pub gs: Vec<LinearMap<F>>,
    pub hs: Vec<LinearMap<F>>,
}

#[derive(Debug, Clone)]
pub struct SkewCocycle<F: Field> {
    pub cochain: Cochain<F>,
    /// Chain invariants and compatibility `g_1 = id`, `h_i = g_{i+1}`, `h_n = id`.
    pub report: AxiomReport,
}

impl<F: Field> SkewCocycle<F> {
    pub fn compatible(&self) -> bool {
        self.report.all_passed()
    }
}

fn apply_map<F: Field>(m: &LinearMap<F>, v: &Elem<F>) -> Elem<F> {
    v.map_linear(|&i| m[i].clone())
}

fn identity_map<F: Field>(n: usize) -> LinearMap<F> {
    (0..n).map(Elem::basis).collect()
}

/// `f(a_1, …, a_n) = d_1(a_1) ⋯ d_n(a_n)`; always returned, with a report flagging
/// violated chain conditions.
pub fn skew_cocycle<F: Field>(alg: &Algebra<F>, chain: &SkewDerivationChain<F>) -> Result<SkewCocycle<F>> {
    let n = chain.ds.len();
    let dim = alg.dim();
    if chain.gs.len() != n || chain.hs.len() != n {
        return Err(Error::MalformedPresentation("chain needs one g and one h per derivation".into()));
    }
    for m in chain.ds.iter().chain(&chain.gs).chain(&chain.hs) {
        if m.len() != dim || m.iter().any(|v| v.keys().any(|&k| k >= dim)) {
            return Err(Error::MalformedPresentation("chain map has the wrong shape".into()));
        }
    }
    let l = |i: usize| alg.label(i);
    let mut report = AxiomReport::new(format!("skew-derivation chain on {}", alg.name()));

    let mut skew = CheckBuilder::new("skew_leibniz");
    for i in 0..n {
        for a in 0..dim {
            for b in 0..dim {
                let lhs = apply_map(&chain.ds[i], alg.product(a, b));
                let mut rhs = alg.mul(&chain.gs[i][a], &chain.ds[i][b]);
                rhs.add_assign(&alg.mul(&chain.ds[i][a], &chain.hs[i][b]));
                skew.record(lhs == rhs, || format!("d{} on ({}, {})", i + 1, l(a), l(b)));
            }
        }
    }
    report.push(skew.finish());

    let mut autos = CheckBuilder::new("automorphisms");
    for (name, maps) in [("g", &chain.gs), ("h", &chain.hs)] {
        for (i, m) in maps.iter().enumerate() {
            let mut ok = apply_map(m, alg.unit()) == *alg.unit();
            for a in 0..dim {
                for b in 0..dim {
                    ok &= apply_map(m, alg.product(a, b)) == alg.mul(&m[a], &m[b]);
                }
            }
            ok &= SparseMatrix::from_columns(dim, m.clone()).inverse().is_some();
            autos.record(ok, || format!("{name}{}", i + 1));
        }
    }
    report.push(autos.finish());

    let id = identity_map::<F>(dim);
    let mut compat = CheckBuilder::new("compatibility");
    if n > 0 {
        compat.record(chain.gs[0] == id, || "g1 != id".into());
        for i in 0..n - 1 {
            compat.record(chain.hs[i] == chain.gs[i + 1], || format!("h{} != g{}", i + 1, i + 2));
        }
        compat.record(chain.hs[n - 1] == id, || format!("h{n} != id"));
    }
    report.push(compat.finish());

    let p = chain
        .ds
        .iter()
        .map(|d| (0..dim).find_map(|a| alg.degree_of(&d[a]).map(|e| e - alg.degree(a))).unwrap_or(0))
        .sum();
    let cochain = Cochain::product_of_maps(alg, &chain.ds, p)?;
    Ok(SkewCocycle { cochain, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{matrix_algebra, super_line, trunc_poly};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn identity_map_coboundary() {
        let c = Hochschild::new(trunc_poly::<Q>(2).unwrap()).unwrap();
        let id = c.from_linear_map(&identity_map(2), 0).unwrap();
        let d = c.differential_cochain(&id).unwrap();
        let d2 = d.component(0, 2).unwrap();
        // (d id)(a,b) = ab − ab − ab = −ab
        assert_eq!(d2.get(0, &[0, 0]), &q(-1));
        assert_eq!(d2.get(1, &[0, 1]), &q(-1));
        assert!(c.differential_cochain(c.multiplication()).unwrap().is_zero());
    }

    #[test]
    fn derivations_are_cocycles() {
        let c = Hochschild::new(trunc_poly::<Q>(3).unwrap()).unwrap();
        // D = y d/dy
        let d = c.from_linear_map(&[Elem::new(), Elem::basis(1), Elem::term(2, q(2))], 0).unwrap();
        assert!(c.differential_cochain(&d).unwrap().is_zero());
        // D{E} = D ∘ E for arity one
        let e = c.from_linear_map(&[Elem::new(), Elem::basis(2), Elem::new()], 0).unwrap();
        let de = c.brace_cochains(&d, &[&e]).unwrap();
        assert_eq!(de.value_vec(&[1]), Elem::term(2, q(2)));
        // arity-one cochains take no two inserted arguments
        assert!(c.brace_cochains(&d, &[&e, &e]).unwrap().is_zero());
    }

    #[test]
    fn d_squared_on_bases() {
        for alg in [trunc_poly::<Q>(2).unwrap(), super_line().unwrap(), matrix_algebra(2).unwrap()] {
            let c = Hochschild::new(alg).unwrap();
            let max_q = if c.dim() > 2 { 2 } else { 3 };
            let r = c.check_d_squared(max_q).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
