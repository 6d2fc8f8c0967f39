//! The cobar construction `Ω(H) = (T̄V, d_i + d_e)` on `V = Ker ε`.

use std::collections::HashMap;
use std::fmt::{self, Display};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{Bialgebra, CounitKernel, Elem};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

pub type Letter = u16;
pub type Word = Vec<Letter>;
pub type CobarElement<F> = Vector<Word, F>;

/// Basis words above this count are refused.
pub const WORD_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bidegree {
    pub internal: i64,
    pub external: usize,
}

impl Bidegree {
    pub fn new(internal: i64, external: usize) -> Self {
        Bidegree { internal, external }
    }

    pub fn total(&self) -> i64 {
        self.internal + self.external as i64
    }
}

impl Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.internal, self.external)
    }
}

type Iterated<F> = Arc<Vec<(Vec<usize>, F)>>;

pub struct Cobar<F: Field> {
    kernel: CounitKernel<F>,
    iterated: Mutex<HashMap<(usize, usize), Iterated<F>>>,
}

impl<F: Field> Clone for Cobar<F> {
    fn clone(&self) -> Self {
        Cobar::from_kernel(self.kernel.clone())
    }
}

impl<F: Field> fmt::Debug for Cobar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cobar").field("parent", &self.kernel.parent().name()).finish()
    }
}

impl<F: Field> Cobar<F> {
    pub fn new(h: Bialgebra<F>) -> Result<Self> {
        if h.dim() > Letter::MAX as usize {
            return Err(Error::UnsupportedParams(format!("dimension {} is too large", h.dim())));
        }
        Ok(Self::from_kernel(CounitKernel::new(h)?))
    }

    pub fn from_kernel(kernel: CounitKernel<F>) -> Self {
        Cobar { kernel, iterated: Mutex::new(HashMap::new()) }
    }

    pub fn kernel(&self) -> &CounitKernel<F> {
        &self.kernel
    }

    pub fn parent(&self) -> &Bialgebra<F> {
        self.kernel.parent()
    }

    pub fn dim_v(&self) -> usize {
        self.kernel.dim()
    }

    pub fn letter_degree(&self, v: Letter) -> i64 {
        self.kernel.degree(v as usize)
    }

    pub fn word_bidegree(&self, w: &[Letter]) -> Bidegree {
        Bidegree::new(w.iter().map(|&v| self.letter_degree(v)).sum(), w.len())
    }

    pub fn word_total(&self, w: &[Letter]) -> i64 {
        self.word_bidegree(w).total()
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn bidegree(&self, x: &CobarElement<F>) -> Option<Bidegree> {
        let mut it = x.keys().map(|w| self.word_bidegree(w));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Total degree of a nonzero element homogeneous in total degree.
    pub fn total_degree(&self, x: &CobarElement<F>) -> Option<i64> {
        let mut it = x.keys().map(|w| self.word_total(w));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn require_homogeneous(&self, x: &CobarElement<F>) -> Result<Option<Bidegree>> {
        if x.is_zero() {
            return Ok(None);
        }
        self.bidegree(x).map(Some).ok_or_else(|| Error::NonHomogeneous(self.render(x)))
    }

    pub fn letter(&self, label: &str) -> Result<CobarElement<F>> {
        self.word(&[label])
    }

    pub fn word(&self, labels: &[&str]) -> Result<CobarElement<F>> {
        let mut w = Word::with_capacity(labels.len());
        for l in labels {
            let v = self
                .kernel
                .index_of(l)
                .ok_or_else(|| Error::Format(format!("unknown letter {l:?} in {}", self.parent().name())))?;
            w.push(v as Letter);
        }
        Ok(CobarElement::basis(w))
    }

    /// Parses `c1 * a|b + c2 * c`; a bare word means coefficient 1.
    pub fn parse(&self, text: &str) -> Result<CobarElement<F>> {
        let mut out = CobarElement::new();
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split(" + ") {
            let (coeff, word) = match term.split_once(" * ") {
                Some((c, w)) => (F::parse_scalar(c.trim())?, w.trim()),
                None => (F::one(), term.trim()),
            };
            let labels: Vec<&str> = word.split('|').map(str::trim).collect();
            out.add_scaled(&self.word(&labels)?, &coeff);
        }
        Ok(out)
    }

    pub fn render_word(&self, w: &[Letter]) -> String {
        w.iter().map(|&v| self.kernel.label(v as usize)).collect::<Vec<_>>().join("|")
    }

    /// `c1 * a|b|c + c2 * ...` in word order; `0` for the zero element.
    pub fn render(&self, x: &CobarElement<F>) -> String {
        crate::algebra::render_terms(x.iter().map(|(w, c)| (self.render_word(w), c)))
    }

    /// Letters as a vector in `V` to a cobar element of external degree one.
    pub fn from_v(&self, v: &Elem<F>) -> CobarElement<F> {
        v.iter().map(|(&i, c)| (vec![i as Letter], c.clone())).collect()
    }

    /// `u_g = g − 1` for a group-like basis element `g` of `H`.
    pub fn u_of_grouplike(&self, label: &str) -> Result<CobarElement<F>> {
        let h = self
            .parent()
            .index_of(label)
            .ok_or_else(|| Error::Format(format!("unknown basis element {label:?}")))?;
        Ok(self.from_v(&self.kernel.u_of_grouplike(h)?))
    }

    /// `Δ'(v)` as an element of external degree two.
    pub fn reduced_coproduct(&self, v: Letter) -> CobarElement<F> {
        self.kernel
            .reduced_coproduct(v as usize)
            .iter()
            .map(|(&(a, b), c)| (vec![a as Letter, b as Letter], c.clone()))
            .collect()
    }

    fn d_e_letter(&self, v: Letter) -> CobarElement<F> {
        self.kernel
            .reduced_coproduct(v as usize)
            .iter()
            .map(|(&(a, b), c)| {
                let s = F::sign(self.kernel.degree(a) % 2 != 0);
                (vec![a as Letter, b as Letter], s * c.clone())
            })
            .collect()
    }

    fn d_i_letter(&self, v: Letter) -> CobarElement<F> {
        self.from_v(self.kernel.internal_differential(v as usize))
    }

    /// Extends a letter map to words as a derivation of total degree +1.
    fn derivation_on_word(&self, w: &[Letter], on_letter: impl Fn(Letter) -> CobarElement<F>) -> CobarElement<F> {
        let mut out = CobarElement::new();
        let mut prefix_total = 0i64;
        for (i, &v) in w.iter().enumerate() {
            let image = on_letter(v);
            if !image.is_zero() {
                let s = F::sign(prefix_total % 2 != 0);
                for (mid, c) in image.iter() {
                    let mut word = Word::with_capacity(w.len() + mid.len());
                    word.extend_from_slice(&w[..i]);
                    word.extend_from_slice(mid);
                    word.extend_from_slice(&w[i + 1..]);
                    out.add_term(word, s.clone() * c.clone());
                }
            }
            prefix_total += self.letter_degree(v) + 1;
        }
        out
    }

    pub fn d_internal_word(&self, w: &[Letter]) -> CobarElement<F> {
        if !self.kernel.has_internal_differential() {
            return CobarElement::new();
        }
        self.derivation_on_word(w, |v| self.d_i_letter(v))
    }

    pub fn d_external_word(&self, w: &[Letter]) -> CobarElement<F> {
        self.derivation_on_word(w, |v| self.d_e_letter(v))
    }

    pub fn differential_word(&self, w: &[Letter]) -> CobarElement<F> {
        let mut out = self.d_external_word(w);
        out.add_assign(&self.d_internal_word(w));
        out
    }

    pub fn d_internal(&self, x: &CobarElement<F>) -> CobarElement<F> {
        x.map_linear(|w| self.d_internal_word(w))
    }

    pub fn d_external(&self, x: &CobarElement<F>) -> CobarElement<F> {
        x.map_linear(|w| self.d_external_word(w))
    }

    pub fn differential(&self, x: &CobarElement<F>) -> CobarElement<F> {
        x.map_linear(|w| self.differential_word(w))
    }

    /// `C_2`: concatenation of words.
    pub fn cup(&self, a: &CobarElement<F>, b: &CobarElement<F>) -> CobarElement<F> {
        let mut out = CobarElement::new();
        for (u, cu) in a.iter() {
            for (v, cv) in b.iter() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, cu.clone() * cv.clone());
            }
        }
        out
    }

    /// `Δ^{(r)}(ι v)` as tuples of `H` basis indices, unit terms included.
    pub fn iterated_coproduct(&self, v: Letter, r: usize) -> Iterated<F> {
        assert!(r >= 1);
        if let Some(hit) = self.iterated.lock().unwrap().get(&(v as usize, r)) {
            return hit.clone();
        }
        let value: Vec<(Vec<usize>, F)> = if r == 1 {
            let h = self.kernel.include(&Elem::basis(v as usize));
            h.iter().map(|(&i, c)| (vec![i], c.clone())).collect()
        } else {
            let prev = self.iterated_coproduct(v, r - 1);
            let mut acc: Vector<Vec<usize>, F> = Vector::new();
            for (tuple, c) in prev.iter() {
                for (&(a, b), cab) in self.parent().coproduct(tuple[0]).iter() {
                    let mut t = Vec::with_capacity(r);
                    t.push(a);
                    t.push(b);
                    t.extend_from_slice(&tuple[1..]);
                    acc.add_term(t, c.clone() * cab.clone());
                }
            }
            acc.into_terms().into_iter().collect()
        };
        let value = Arc::new(value);
        self.iterated.lock().unwrap().insert((v as usize, r), value.clone());
        value
    }

    /// Diagonal action of a letter on a word: `Σ ± π(h_1 ι y^1) ⊗ … ⊗ π(h_r ι y^r)`
    /// over `Δ^{(r)}(ι v) = Σ h_1 ⊗ … ⊗ h_r`.
    pub fn letter_action(&self, v: Letter, y: &[Letter]) -> CobarElement<F> {
        let r = y.len();
        let h = self.parent();
        let lifted: Vec<Elem<F>> = y.iter().map(|&l| self.kernel.include(&Elem::basis(l as usize))).collect();
        let ydeg: Vec<i64> = y.iter().map(|&l| self.letter_degree(l)).collect();
        let mut out = CobarElement::new();
        for (tuple, c) in self.iterated_coproduct(v, r).iter() {
            let mut parity = 0i64;
            let mut before = 0i64;
            let mut factors: Vec<Elem<F>> = Vec::with_capacity(r);
            for (i, &hi) in tuple.iter().enumerate() {
                parity += h.degree(hi) * before;
                before += ydeg[i];
                let prod = h.mul(&Elem::basis(hi), &lifted[i]);
                let f = self.kernel.project(&prod);
                if f.is_zero() {
                    break;
                }
                factors.push(f);
            }
            if factors.len() < r {
                continue;
            }
            let coeff = F::sign(parity % 2 != 0) * c.clone();
            tensor_product_words(&factors, &coeff, &mut out);
        }
        out
    }

    /// Shifted brace `x{y_1, …, y_k}` on words.
    pub fn brace_words(&self, x: &[Letter], ys: &[&Word]) -> CobarElement<F> {
        let n = x.len();
        let k = ys.len();
        if k == 0 {
            return CobarElement::basis(x.to_vec());
        }
        if k > n {
            return CobarElement::new();
        }
        let shifted: Vec<i64> = ys.iter().map(|y| self.word_total(y) - 1).collect();
        let totals: Vec<i64> = x.iter().map(|&v| self.letter_degree(v) + 1).collect();
        let mut suffix = vec![0i64; n + 1];
        for l in (0..n).rev() {
            suffix[l] = suffix[l + 1] + totals[l];
        }
        let actions: Vec<Vec<CobarElement<F>>> = (0..k)
            .map(|j| (0..n).map(|i| if i >= j && i + k - j <= n { self.letter_action(x[i], ys[j]) } else { CobarElement::new() }).collect())
            .collect();
        let mut out = CobarElement::new();
        let mut positions: Vec<usize> = (0..k).collect();
        loop {
            let parity: i64 = (0..k).map(|j| shifted[j] * suffix[positions[j] + 1]).sum();
            let mut blocks: Vec<CobarElement<F>> = Vec::with_capacity(n);
            let mut zero = false;
            let mut j = 0;
            for i in 0..n {
                if j < k && positions[j] == i {
                    let a = &actions[j][i];
                    if a.is_zero() {
                        zero = true;
                        break;
                    }
                    blocks.push(a.clone());
                    j += 1;
                } else {
                    blocks.push(CobarElement::basis(vec![x[i]]));
                }
            }
            if !zero {
                concat_blocks(&blocks, &F::sign(parity % 2 != 0), &mut out);
            }
            if !next_combination(&mut positions, n) {
                break;
            }
        }
        out
    }

    /// Shifted brace extended multilinearly.
    pub fn brace(&self, x: &CobarElement<F>, ys: &[CobarElement<F>]) -> CobarElement<F> {
        let mut out = CobarElement::new();
        let mut choice: Vec<(&Word, F)> = Vec::with_capacity(ys.len());
        for (xw, cx) in x.iter() {
            if ys.len() > xw.len() {
                continue;
            }
            self.brace_rec(xw, cx.clone(), ys, &mut choice, &mut out);
        }
        out
    }

    fn brace_rec<'a>(
        &self,
        xw: &Word,
        coeff: F,
        ys: &'a [CobarElement<F>],
        choice: &mut Vec<(&'a Word, F)>,
        out: &mut CobarElement<F>,
    ) {
        if choice.len() == ys.len() {
            let words: Vec<&Word> = choice.iter().map(|(w, _)| *w).collect();
            let c = choice.iter().fold(coeff, |acc, (_, c)| acc * c.clone());
            out.add_scaled(&self.brace_words(xw, &words), &c);
            return;
        }
        for (w, c) in ys[choice.len()].iter() {
            choice.push((w, c.clone()));
            self.brace_rec(xw, coeff.clone(), ys, choice, out);
            choice.pop();
        }
    }

    /// All words of length `n`, lexicographic.
    pub fn words(&self, n: usize) -> Result<Vec<Word>> {
        let d = self.dim_v();
        let count = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if count > WORD_CAP {
            return Err(Error::TruncationExceeded { what: format!("words of length {n}"), size: count, cap: WORD_CAP });
        }
        let mut out = Vec::with_capacity(count as usize);
        if d == 0 {
            return Ok(if n == 0 { vec![Word::new()] } else { out });
        }
        let mut w: Word = vec![0; n];
        loop {
            out.push(w.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                w[i] += 1;
                if (w[i] as usize) < d {
                    break;
                }
                w[i] = 0;
            }
        }
    }

    /// Words of the given bidegree, lexicographic.
    pub fn basis_words(&self, bideg: Bidegree) -> Result<Vec<Word>> {
        Ok(self.words(bideg.external)?.into_iter().filter(|w| self.word_bidegree(w) == bideg).collect())
    }

    /// Internal degrees occurring among words of length `n`.
    pub fn internal_degrees(&self, n: usize) -> Vec<i64> {
        let mut degs: Vec<i64> = (0..self.dim_v()).map(|v| self.kernel.degree(v)).collect();
        degs.sort();
        degs.dedup();
        let mut reach = std::collections::BTreeSet::from([0i64]);
        for _ in 0..n {
            reach = reach.iter().flat_map(|s| degs.iter().map(move |d| s + d)).collect();
        }
        reach.into_iter().collect()
    }

    /// Verifies `d² = 0` on every word of external degree `≤ max_ext`.
    pub fn check_d_squared(&self, max_ext: usize) -> Result<AxiomReport> {
        let mut report = AxiomReport::new(format!("cobar {}", self.parent().name()));
        let mut check = CheckBuilder::new("d_squared");
        for n in 1..=max_ext {
            for w in self.words(n)? {
                let dd = self.differential(&self.differential_word(&w));
                check.record(dd.is_zero(), || format!("{} (d² = {})", self.render_word(&w), self.render(&dd)));
            }
        }
        report.push(check.finish());
        Ok(report)
    }
}

fn tensor_product_words<F: Field>(factors: &[Elem<F>], coeff: &F, out: &mut CobarElement<F>) {
    let mut acc: Vec<(Word, F)> = vec![(Word::new(), coeff.clone())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (w, c) in &acc {
            for (&l, cl) in f.iter() {
                let mut w2 = w.clone();
                w2.push(l as Letter);
                next.push((w2, c.clone() * cl.clone()));
            }
        }
        acc = next;
    }
    for (w, c) in acc {
        out.add_term(w, c);
    }
}

fn concat_blocks<F: Field>(blocks: &[CobarElement<F>], coeff: &F, out: &mut CobarElement<F>) {
    let mut acc: Vec<(Word, F)> = vec![(Word::new(), coeff.clone())];
    for b in blocks {
        let mut next = Vec::with_capacity(acc.len() * b.len());
        for (w, c) in &acc {
            for (bw, cb) in b.iter() {
                let mut w2 = w.clone();
                w2.extend_from_slice(bw);
                next.push((w2, c.clone() * cb.clone()));
            }
        }
        acc = next;
    }
    for (w, c) in acc {
        out.add_term(w, c);
    }
}

/// Advances a strictly increasing tuple in `0..n`; false when exhausted.
pub(crate) fn next_combination(pos: &mut [usize], n: usize) -> bool {
    let k = pos.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pos[i] < n - (k - i) {
            pos[i] += 1;
            for j in i + 1..k {
                pos[j] = pos[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{group_algebra, sweedler4};
    use crate::scalar::Rational;

    fn h4() -> Cobar<Rational> {
        Cobar::new(sweedler4().unwrap()).unwrap()
    }

    #[test]
    fn sweedler_differentials() {
        let c = h4();
        let d = |s: &str| c.render(&c.differential(&c.parse(s).unwrap()));
        assert_eq!(d("u_g"), "1 * u_g|u_g");
        assert_eq!(d("x"), "1 * u_g|x");
        assert_eq!(d("xg"), "1 * xg|u_g");
        assert_eq!(d("u_g|x"), "0");
        assert_eq!(d("xg|x"), "0");
        assert_eq!(c.render(&c.reduced_coproduct(2)), "1 * xg|u_g");
        assert!(c.check_d_squared(4).unwrap().all_passed());
    }

    #[test]
    fn z2_doubling() {
        let c = Cobar::<Rational>::new(group_algebra(2).unwrap()).unwrap();
        // d(u^n) = Σ_i (−1)^i u^{n+1}: alternating sum of doublings
        for n in 1..6 {
            let dn = c.differential(&CobarElement::basis(vec![0; n]));
            let expected = if n % 2 == 1 { CobarElement::basis(vec![0; n + 1]) } else { CobarElement::new() };
            assert_eq!(dn, expected);
        }
        assert!(c.check_d_squared(5).unwrap().all_passed());
        let ug = c.u_of_grouplike("g").unwrap();
        assert_eq!(c.differential(&ug), c.cup(&ug, &ug));
        assert!(c.u_of_grouplike("1").unwrap().is_zero());
    }

    #[test]
    fn sweedler_braces() {
        let c = h4();
        let p = |s: &str| c.parse(s).unwrap();
        // x{x} = x² = 0
        assert!(c.brace(&p("x"), &[p("x")]).is_zero());
        // u_g{u_g} = π((g−1)²) = −2 u_g
        assert_eq!(c.render(&c.brace(&p("u_g"), &[p("u_g")])), "-2 * u_g");
        // u_g{x} = π((g−1)x) = −xg − x
        assert_eq!(c.render(&c.brace(&p("u_g"), &[p("x")])), "-1 * x + -1 * xg");
        assert!(c.brace(&p("x"), &[p("u_g"), p("x")]).is_zero());
    }

    #[test]
    fn combinations() {
        let mut p = vec![0, 1];
        let mut seen = vec![p.clone()];
        while next_combination(&mut p, 4) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
