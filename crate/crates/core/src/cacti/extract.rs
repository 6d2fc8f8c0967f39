//! Recovering a bialgebra from a well-graded Cacti structure on the tensor coalgebra,
//! and lifting bialgebra morphisms to cobar constructions.

use rand::Rng;

use super::identities::sample_rng;
use super::{bm, CactiAlgebra, SuiteConfig};
use crate::algebra::{check_bialgebra_morphism, Algebra, Bialgebra, Elem, Elem2, MorphismMatrix};
use crate::cobar::{Cobar, CobarElement, Letter, Word};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

/// Letter-level data of a well-graded Cacti structure on `T̄V` with cup = concatenation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactiData<F: Field> {
    pub name: String,
    pub labels: Vec<String>,
    /// Internal degrees of the letters.
    pub degrees: Vec<i64>,
    /// `B_2(v_i, v_j)` at `i * dim + j`, a letter vector.
    pub b2: Vec<Elem<F>>,
    /// Part of `d v` in external degree one.
    pub d_internal: Vec<Elem<F>>,
    /// Part of `d v` in external degree two.
    pub d_external: Vec<Elem2<F>>,
}

impl<F: Field> CactiData<F> {
    /// Reads the letter data off a cobar construction through its Cacti operations.
    pub fn from_cobar(c: &Cobar<F>) -> Result<Self> {
        let n = c.dim_v();
        let letter = |v: usize| CobarElement::basis(vec![v as Letter]);
        let mut b2 = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let w = bm(c, &letter(i), &[letter(j)])?;
                b2.push(w.iter().map(|(w, x)| (w[0] as usize, x.clone())).collect());
            }
        }
        let mut d_internal = Vec::with_capacity(n);
        let mut d_external = Vec::with_capacity(n);
        for v in 0..n {
            let dv = c.differential_word(&[v as Letter]);
            let mut di = Elem::new();
            let mut de = Elem2::new();
            for (w, x) in dv.iter() {
                match w.len() {
                    1 => di.add_term(w[0] as usize, x.clone()),
                    2 => de.add_term((w[0] as usize, w[1] as usize), x.clone()),
                    _ => unreachable!("letter differentials have external degree one or two"),
                }
            }
            d_internal.push(di);
            d_external.push(de);
        }
        Ok(CactiData {
            name: c.parent().name().to_string(),
            labels: c.kernel().labels().to_vec(),
            degrees: c.kernel().degrees().to_vec(),
            b2,
            d_internal,
            d_external,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn letter_total(&self, v: Letter) -> i64 {
        self.degrees[v as usize] + 1
    }

    fn d_letter(&self, v: Letter) -> CobarElement<F> {
        let mut out = CobarElement::new();
        for (&w, c) in self.d_internal[v as usize].iter() {
            out.add_term(vec![w as Letter], c.clone());
        }
        for (&(a, b), c) in self.d_external[v as usize].iter() {
            out.add_term(vec![a as Letter, b as Letter], c.clone());
        }
        out
    }

    /// `d` on a word by the Leibniz rule with the sign of the prefix total degree.
    pub fn d_word(&self, w: &[Letter]) -> CobarElement<F> {
        let mut out = CobarElement::new();
        let mut prefix = 0i64;
        for (i, &v) in w.iter().enumerate() {
            let s = F::sign(prefix % 2 != 0);
            for (mid, c) in self.d_letter(v).iter() {
                let mut word: Word = w[..i].to_vec();
                word.extend_from_slice(mid);
                word.extend_from_slice(&w[i + 1..]);
                out.add_term(word, s.clone() * c.clone());
            }
            prefix += self.letter_total(v);
        }
        out
    }

    /// First word of external degree `≤ max_ext` with `d² ≠ 0`.
    pub fn d_squared_witness(&self, max_ext: usize) -> Option<String> {
        let n = self.dim();
        let render = |w: &[Letter]| w.iter().map(|&v| self.labels[v as usize].as_str()).collect::<Vec<_>>().join("|");
        for len in 1..=max_ext {
            let count = n.checked_pow(len as u32)?;
            for mut idx in 0..count {
                let mut w: Word = vec![0; len];
                for slot in w.iter_mut().rev() {
                    *slot = (idx % n) as Letter;
                    idx /= n;
                }
                let mut dd = CobarElement::new();
                for (x, c) in self.d_word(&w).iter() {
                    dd.add_scaled(&self.d_word(x), c);
                }
                if !dd.is_zero() {
                    let terms = crate::algebra::render_terms(dd.iter().map(|(w, c)| (render(w), c)));
                    return Some(format!("d²({}) = {}", render(&w), terms));
                }
            }
        }
        None
    }
}

/// The bialgebra on `k·1 ⊕ V` with `v·w = v * w`, `Δv = v⊗1 + 1⊗v + Σ (−1)^{|v'|} v'⊗v''`
/// read off `d_e v = Σ v'|v''`, and `d_H` from `d_i`.
pub fn extract_bialgebra<F: Field>(data: &CactiData<F>) -> Result<Bialgebra<F>> {
    if let Some(w) = data.d_squared_witness(3) {
        return Err(Error::ExtractionFailure(format!("not a differential: {w}")));
    }
    let n = data.dim();
    let mut labels = vec!["1".to_string()];
    labels.extend(data.labels.iter().cloned());
    let mut degrees = vec![0];
    degrees.extend(data.degrees.iter().copied());
    let shift = |v: &Elem<F>| -> Elem<F> { v.iter().map(|(&i, c)| (i + 1, c.clone())).collect() };
    let mut products = Vec::new();
    for j in 0..=n {
        products.push(((0, j), Elem::basis(j)));
        if j > 0 {
            products.push(((j, 0), Elem::basis(j)));
        }
    }
    for i in 0..n {
        let star_sign = F::sign((data.degrees[i] + 1) % 2 != 0);
        for j in 0..n {
            products.push(((i + 1, j + 1), shift(&data.b2[i * n + j]).scaled(&star_sign)));
        }
    }
    let differential = Some(std::iter::once(Elem::new()).chain(data.d_internal.iter().map(shift)).collect());
    let algebra = Algebra::new(data.name.clone(), labels, degrees, Elem::basis(0), products, differential)?;

    let mut comult = vec![Elem2::term((0, 0), F::one())];
    for v in 0..n {
        let mut dv = Elem2::new();
        dv.add_term((v + 1, 0), F::one());
        dv.add_term((0, v + 1), F::one());
        for (&(a, b), c) in data.d_external[v].iter() {
            dv.add_term((a + 1, b + 1), F::sign(data.degrees[a] % 2 != 0) * c.clone());
        }
        comult.push(dv);
    }
    let counit = (0..=n).map(|i| if i == 0 { F::one() } else { F::zero() }).collect();
    let h = Bialgebra::new(algebra, comult, counit)?;
    let report = h.check_axioms();
    if !report.all_passed() {
        let first = report.checks.iter().find(|c| !c.passed).expect("a failing check");
        return Err(Error::ExtractionFailure(format!(
            "{} fails: {}",
            report.failed().join(", "),
            first.witness.clone().unwrap_or_default()
        )));
    }
    Ok(h)
}

/// Extracts from `Ω(H)` and rewrites the result on the basis of `H`.
pub fn extract_round_trip<F: Field>(h: &Bialgebra<F>) -> Result<Bialgebra<F>> {
    let c = Cobar::new(h.clone())?;
    let extracted = extract_bialgebra(&CactiData::from_cobar(&c)?)?;
    let k = c.kernel();
    let columns = (0..h.dim())
        .map(|b| {
            let mut col: Elem<F> = k.project(&Elem::basis(b)).iter().map(|(&v, x)| (v + 1, x.clone())).collect();
            col.add_term(0, h.counit(b).clone());
            col
        })
        .collect();
    let p = SparseMatrix::from_columns(h.dim(), columns);
    let mut out = extracted.change_basis(&p, h.basis().to_vec())?;
    out.set_name(h.name().to_string());
    Ok(out)
}

/// `Ω(f): Ω(H) → Ω(H')`, letter-wise `v ↦ π' f ι v`.
#[derive(Debug, Clone)]
pub struct CobarMorphism<F: Field> {
    pub source: Cobar<F>,
    pub target: Cobar<F>,
    letters: Vec<Elem<F>>,
}

impl<F: Field> CobarMorphism<F> {
    pub fn letter_image(&self, v: Letter) -> &Elem<F> {
        &self.letters[v as usize]
    }

    pub fn apply_word(&self, w: &[Letter]) -> CobarElement<F> {
        let mut acc: CobarElement<F> = CobarElement::basis(Vec::new());
        for &v in w {
            let mut next = CobarElement::new();
            for (prefix, c) in acc.iter() {
                for (&u, cu) in self.letters[v as usize].iter() {
                    let mut word = prefix.clone();
                    word.push(u as Letter);
                    next.add_term(word, c.clone() * cu.clone());
                }
            }
            acc = next;
        }
        acc
    }

    pub fn apply(&self, x: &CobarElement<F>) -> CobarElement<F> {
        let mut out = CobarElement::new();
        for (w, c) in x.iter() {
            out.add_scaled(&self.apply_word(w), c);
        }
        out
    }

    /// Commutation with `d` on every word of external degree `≤ max_ext`, and
    /// preservation of cup, `B_2` and `B_3` on sampled elements.
    pub fn verify(&self, cfg: &SuiteConfig) -> Result<AxiomReport> {
        let (s, t) = (&self.source, &self.target);
        let mut report = AxiomReport::new(format!("lift {} -> {}", s.parent().name(), t.parent().name()));
        let mut d = CheckBuilder::new("commutes_with_d");
        for len in 1..=cfg.max_ext {
            for w in s.words(len)? {
                let lhs = self.apply(&s.differential_word(&w));
                let rhs = t.differential(&self.apply_word(&w));
                d.record(lhs == rhs, || format!("{}: f(dw) − d(fw) = {}", s.render_word(&w), t.render(&lhs.difference(&rhs))));
            }
        }
        report.push(d.finish());

        let mut cup = CheckBuilder::new("preserves_cup");
        let mut b2 = CheckBuilder::new("preserves_B2");
        let mut b3 = CheckBuilder::new("preserves_B3");
        for i in 0..cfg.samples {
            let mut rng = sample_rng(cfg.seed, 0x11f7, i);
            let mut args = Vec::new();
            for _ in 0..3 {
                let e = rng.gen_range(1..=cfg.max_ext.clamp(1, 2));
                match s.random_element(&mut rng, e)? {
                    Some(x) => args.push(x),
                    None => break,
                }
            }
            if args.len() < 3 {
                continue;
            }
            let img: Vec<CobarElement<F>> = args.iter().map(|a| self.apply(a)).collect();
            let render = |xs: &[CobarElement<F>]| xs.iter().map(|x| format!("[{}]", s.render(x))).collect::<Vec<_>>().join(", ");
            let l = self.apply(&s.cup(&args[0], &args[1]));
            let r = t.cup(&img[0], &img[1]);
            cup.record(l == r, || render(&args[..2]));
            let l = self.apply(&bm(s, &args[0], &args[1..2])?);
            let r = bm(t, &img[0], &img[1..2])?;
            b2.record(l == r, || render(&args[..2]));
            let mut x = args[0].clone();
            if let Some(extra) = s.random_element(&mut rng, 2)? {
                x = s.cup(&x, &extra);
            }
            let l = self.apply(&bm(s, &x, &args[1..3])?);
            let r = bm(t, &self.apply(&x), &img[1..3])?;
            b3.record(l == r, || render(&[x.clone(), args[1].clone(), args[2].clone()]));
        }
        report.push(cup.finish());
        report.push(b2.finish());
        report.push(b3.finish());
        Ok(report)
    }
}

/// Lifts a bialgebra morphism `f: H → H'` to `Ω(f)`.
pub fn lift_bialgebra_morphism<F: Field>(f: &MorphismMatrix<F>) -> Result<CobarMorphism<F>> {
    let check = check_bialgebra_morphism(f);
    if !check.all_passed() {
        let first = check.checks.iter().find(|c| !c.passed).expect("a failing check");
        return Err(Error::NotABialgebraMorphism(format!(
            "{} fails: {}",
            check.failed().join(", "),
            first.witness.clone().unwrap_or_default()
        )));
    }
    let source = Cobar::new(f.source().clone())?;
    let target = Cobar::new(f.target().clone())?;
    let letters = (0..source.dim_v())
        .map(|v| target.kernel().project(&f.apply(&source.kernel().include(&Elem::basis(v)))))
        .collect();
    Ok(CobarMorphism { source, target, letters })
}
