//! The Cacti morphism `Ω(H) → C•(A)` induced by an `H`-module algebra structure.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::Rng;

use super::{check_module_algebra, ActionMap};
use crate::algebra::Elem;
use crate::cacti::{bm, sample_rng, CactiAlgebra, SuiteConfig};
use crate::cobar::{Cobar, CobarElement, Letter, Word};
use crate::error::Result;
use crate::hochschild::{decode, Cochain, Hochschild, MultiCochain};
use crate::report::{AxiomReport, CheckBuilder};
use crate::scalar::Field;

/// `x_1|…|x_n ↦ (a_1, …, a_n ↦ ± x_1(a_1) ⋯ x_n(a_n))`, the sign being
/// `(−1)^{Σ_{i<j} |x_j|(|a_i|+1)}` so that words go to cup products.
pub struct InducedMorphism<F: Field> {
    action: ActionMap<F>,
    cobar: Cobar<F>,
    hochschild: Hochschild<F>,
    /// Letter `v` acting on `A`, as columns.
    operators: Vec<Vec<Elem<F>>>,
    cache: Mutex<HashMap<Word, Arc<Cochain<F>>>>,
}

impl<F: Field> InducedMorphism<F> {
    pub fn new(action: ActionMap<F>) -> Result<Self> {
        let cobar = Cobar::new(action.bialgebra().clone())?;
        let hochschild = Hochschild::new(action.algebra().clone())?;
        let operators = (0..cobar.dim_v())
            .map(|v| action.operator(&cobar.kernel().include(&Elem::basis(v))))
            .collect();
        Ok(InducedMorphism { action, cobar, hochschild, operators, cache: Mutex::new(HashMap::new()) })
    }

    pub fn action(&self) -> &ActionMap<F> {
        &self.action
    }

    pub fn cobar(&self) -> &Cobar<F> {
        &self.cobar
    }

    pub fn hochschild(&self) -> &Hochschild<F> {
        &self.hochschild
    }

    pub fn word(&self, w: &[Letter]) -> Result<Arc<Cochain<F>>> {
        if let Some(hit) = self.cache.lock().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let alg = self.action.algebra();
        let n = alg.dim();
        let q = w.len();
        let xdeg: Vec<i64> = w.iter().map(|&v| self.cobar.letter_degree(v)).collect();
        let p: i64 = xdeg.iter().sum();
        let mut out = Cochain::zero(n, p, q)?;
        for idx in 0..out.num_args() {
            let args = decode(idx, n, q);
            let mut acc = alg.unit().clone();
            let mut parity = 0i64;
            let mut later: i64 = p;
            for (i, &a) in args.iter().enumerate() {
                later -= xdeg[i];
                parity += later * (alg.degree(a) + 1);
                acc = alg.mul(&acc, &self.operators[w[i] as usize][a]);
                if acc.is_zero() {
                    break;
                }
            }
            let s = F::sign(parity.rem_euclid(2) == 1);
            for (&o, c) in acc.iter() {
                out.add_to(o, &args, s.clone() * c.clone());
            }
        }
        let out = Arc::new(out);
        self.cache.lock().unwrap().insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// `φ̂(ω)`, extended linearly over words.
    pub fn apply(&self, x: &CobarElement<F>) -> Result<MultiCochain<F>> {
        let mut out = MultiCochain::zero();
        for (w, c) in x.iter() {
            out.add_scaled_cochain(&*self.word(w)?, c);
        }
        Ok(out)
    }

    /// (a) the conditions for extending a map on letters, checked on letters and letter pairs;
    /// (b) sampled commutation with `d`, cup, `B_2` and `B_3` up to `cfg.max_ext`.
    pub fn verify(&self, cfg: &SuiteConfig) -> Result<AxiomReport> {
        let (c, h) = (&self.cobar, &self.hochschild);
        let mut report = AxiomReport::new(format!("induced {} -> C({})", c.parent().name(), h.algebra().name()));
        let letters: Vec<CobarElement<F>> = (0..c.dim_v()).map(|v| CobarElement::basis(vec![v as Letter])).collect();
        let lbl = |v: usize| c.kernel().label(v).to_string();

        let mut arity = CheckBuilder::new("letters_to_arity_one");
        let mut mult = CheckBuilder::new("multiplicative");
        let mut dletter = CheckBuilder::new("d_on_letters");
        let mut starc = CheckBuilder::new("star_on_letters");
        for (v, x) in letters.iter().enumerate() {
            let fx = self.apply(x)?;
            arity.record(fx.components().all(|k| k.q == 1), || lbl(v));
            let lhs = self.apply(&c.differential(x))?;
            let rhs = h.differential(&fx)?;
            dletter.record(lhs == rhs, || format!("{}: φ(dx) − dφ(x) = {}", lbl(v), h.render(&lhs.difference(&rhs))));
            for (w, y) in letters.iter().enumerate() {
                let fy = self.apply(y)?;
                let lhs = self.apply(&c.cup(x, y))?;
                mult.record(lhs == h.cup(&fx, &fy)?, || format!("{}|{}", lbl(v), lbl(w)));
                let lhs = self.apply(&crate::cacti::star(c, x, y)?)?;
                let rhs = crate::cacti::star(h, &fx, &fy)?;
                starc.record(lhs == rhs, || format!("{} * {}", lbl(v), lbl(w)));
            }
        }
        report.push(arity.finish());
        report.push(mult.finish());
        report.push(dletter.finish());
        report.push(starc.finish());

        let mut dchk = CheckBuilder::new("chain_map");
        let mut cup = CheckBuilder::new("preserves_cup");
        let mut b2 = CheckBuilder::new("preserves_B2");
        let mut b3 = CheckBuilder::new("preserves_B3");
        let top = cfg.max_ext.max(1);
        for i in 0..cfg.samples {
            let mut rng = sample_rng(cfg.seed, 0x1d7c, i);
            let mut args = Vec::with_capacity(3);
            for k in 0..3 {
                let e = if k == 0 { rng.gen_range(1..=top) } else { rng.gen_range(1..=top.min(2)) };
                if let Some(x) = c.random_element(&mut rng, e)? {
                    args.push(x);
                }
            }
            if args.len() < 3 {
                continue;
            }
            let render = |xs: &[CobarElement<F>]| xs.iter().map(|x| format!("[{}]", c.render(x))).collect::<Vec<_>>().join(", ");
            let f: Vec<MultiCochain<F>> = args.iter().map(|a| self.apply(a)).collect::<Result<_>>()?;

            let lhs = self.apply(&c.differential(&args[0]))?;
            let rhs = h.differential(&f[0])?;
            dchk.record(lhs == rhs, || format!("{}: φ(dω) − ∂φ(ω) = {}", render(&args[..1]), h.render(&lhs.difference(&rhs))));

            let lhs = self.apply(&c.cup(&args[1], &args[2]))?;
            cup.record(lhs == h.cup(&f[1], &f[2])?, || render(&args[1..3]));

            let lhs = self.apply(&bm(c, &args[0], &args[1..2])?)?;
            let rhs = bm(h, &f[0], &f[1..2])?;
            b2.record(lhs == rhs, || render(&args[..2]));

            if args[0].keys().next().is_some_and(|w| w.len() >= 2) {
                let lhs = self.apply(&bm(c, &args[0], &args[1..3])?)?;
                let rhs = bm(h, &f[0], &f[1..3])?;
                b3.record(lhs == rhs, || render(&args));
            }
        }
        report.push(dchk.finish());
        report.push(cup.finish());
        report.push(b2.finish());
        report.push(b3.finish());
        Ok(report)
    }
}

/// `φ̂(ω)` for a single element.
pub fn induced<F: Field>(act: &ActionMap<F>, omega: &CobarElement<F>) -> Result<MultiCochain<F>> {
    InducedMorphism::new(act.clone())?.apply(omega)
}

/// Module-algebra axioms followed by both verification layers of the induced morphism.
pub fn verify_cacti_morphism<F: Field>(act: &ActionMap<F>, cfg: &SuiteConfig) -> Result<AxiomReport> {
    let mut report = check_module_algebra(act);
    let morphism = InducedMorphism::new(act.clone())?;
    let layers = morphism.verify(cfg)?;
    report.subject = layers.subject;
    for c in layers.checks {
        report.push(c);
    }
    Ok(report)
}
