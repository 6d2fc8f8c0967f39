use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::CactiAlgebra;
use crate::algebra::Elem;
use crate::cobar::{Cobar, CobarElement, Letter, Word};
use crate::error::Result;
use crate::hochschild::{Cochain, Hochschild, MultiCochain};
use crate::scalar::{Field, One};

const EXTRA_TERMS: usize = 3;
const TRIES: usize = 24;

fn random_coeff<F: Field>(rng: &mut ChaCha8Rng) -> F {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3i64..=3);
    }
    F::from_i64(c)
}

impl<F: Field> CactiAlgebra for Cobar<F> {
    type F = F;
    type Elem = CobarElement<F>;

    fn name(&self) -> String {
        format!("cobar({})", self.parent().name())
    }

    fn zero(&self) -> CobarElement<F> {
        CobarElement::new()
    }

    fn is_zero(&self, a: &CobarElement<F>) -> bool {
        a.is_zero()
    }

    fn add_scaled(&self, acc: &mut CobarElement<F>, x: &CobarElement<F>, c: &F) {
        acc.add_scaled(x, c);
    }

    fn total_degree(&self, a: &CobarElement<F>) -> Option<i64> {
        Cobar::total_degree(self, a)
    }

    fn external_degree(&self, a: &CobarElement<F>) -> Option<usize> {
        self.bidegree(a).map(|b| b.external)
    }

    fn cup(&self, a: &CobarElement<F>, b: &CobarElement<F>) -> Result<CobarElement<F>> {
        Ok(Cobar::cup(self, a, b))
    }

    fn brace(&self, x: &CobarElement<F>, ys: &[CobarElement<F>]) -> Result<CobarElement<F>> {
        Ok(Cobar::brace(self, x, ys))
    }

    fn differential(&self, a: &CobarElement<F>) -> Result<CobarElement<F>> {
        Ok(Cobar::differential(self, a))
    }

    fn render(&self, a: &CobarElement<F>) -> String {
        Cobar::render(self, a)
    }

    fn min_external(&self) -> usize {
        1
    }

    fn random_element(&self, rng: &mut ChaCha8Rng, ext: usize) -> Result<Option<CobarElement<F>>> {
        let d = self.dim_v();
        if d == 0 || ext == 0 {
            return Ok(None);
        }
        let draw = |rng: &mut ChaCha8Rng| -> Word { (0..ext).map(|_| rng.gen_range(0..d) as Letter).collect() };
        let first = draw(rng);
        let target = self.word_bidegree(&first);
        let mut out = CobarElement::term(first, random_coeff(rng));
        let extra = rng.gen_range(0..=EXTRA_TERMS);
        for _ in 0..extra {
            for _ in 0..TRIES {
                let w = draw(rng);
                if self.word_bidegree(&w) == target {
                    out.add_term(w, random_coeff(rng));
                    break;
                }
            }
        }
        Ok((!out.is_zero()).then_some(out))
    }

    fn basis_elements(&self, ext: usize) -> Result<Vec<CobarElement<F>>> {
        Ok(self.words(ext)?.into_iter().map(CobarElement::basis).collect())
    }

    /// `x * (y|z) = Σ (−1)^{|x_(2)||y|} π(x_(1) y) | π(x_(2) z)` with `Δ(ι x)` taken in `H`.
    fn diagonal_action_case(&self, rng: &mut ChaCha8Rng) -> Option<Result<(bool, String)>> {
        let d = self.dim_v();
        if d == 0 {
            return None;
        }
        let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
        let h = self.parent();
        let k = self.kernel();
        let yz = CobarElement::basis(vec![y as Letter, z as Letter]);
        let lhs = match super::star(self, &CobarElement::basis(vec![x as Letter]), &yz) {
            Ok(v) => v,
            Err(e) => return Some(Err(e)),
        };
        let iy = k.include(&Elem::basis(y));
        let iz = k.include(&Elem::basis(z));
        let mut rhs = CobarElement::new();
        for (&a, ca) in k.include(&Elem::basis(x)).iter() {
            for (&(b1, b2), cb) in h.coproduct(a).iter() {
                let sign = F::sign(h.degree(b2) * k.degree(y) % 2 != 0);
                let left = k.project(&h.mul(&Elem::basis(b1), &iy));
                let right = k.project(&h.mul(&Elem::basis(b2), &iz));
                let c = sign * ca.clone() * cb.clone();
                for (&l, cl) in left.iter() {
                    for (&r, cr) in right.iter() {
                        rhs.add_term(vec![l as Letter, r as Letter], c.clone() * cl.clone() * cr.clone());
                    }
                }
            }
        }
        let ok = lhs == rhs;
        let witness = format!(
            "x={} y={} z={}: lhs {} rhs {}",
            k.label(x),
            k.label(y),
            k.label(z),
            self.render(&lhs),
            self.render(&rhs)
        );
        Some(Ok((ok, witness)))
    }
}

impl<F: Field> CactiAlgebra for Hochschild<F> {
    type F = F;
    type Elem = MultiCochain<F>;

    fn name(&self) -> String {
        format!("hochschild({})", self.algebra().name())
    }

    fn zero(&self) -> MultiCochain<F> {
        MultiCochain::zero()
    }

    fn is_zero(&self, a: &MultiCochain<F>) -> bool {
        a.is_zero()
    }

    fn add_scaled(&self, acc: &mut MultiCochain<F>, x: &MultiCochain<F>, c: &F) {
        acc.add_scaled(x, c);
    }

    fn total_degree(&self, a: &MultiCochain<F>) -> Option<i64> {
        a.total_degree()
    }

    fn external_degree(&self, a: &MultiCochain<F>) -> Option<usize> {
        a.homogeneous().map(|c| c.q)
    }

    fn cup(&self, a: &MultiCochain<F>, b: &MultiCochain<F>) -> Result<MultiCochain<F>> {
        Hochschild::cup(self, a, b)
    }

    fn brace(&self, x: &MultiCochain<F>, ys: &[MultiCochain<F>]) -> Result<MultiCochain<F>> {
        Hochschild::brace(self, x, ys)
    }

    fn differential(&self, a: &MultiCochain<F>) -> Result<MultiCochain<F>> {
        Hochschild::differential(self, a)
    }

    fn render(&self, a: &MultiCochain<F>) -> String {
        Hochschild::render(self, a)
    }

    fn min_external(&self) -> usize {
        0
    }

    fn random_element(&self, rng: &mut ChaCha8Rng, ext: usize) -> Result<Option<MultiCochain<F>>> {
        let n = self.dim();
        if n == 0 {
            return Ok(None);
        }
        let alg = self.algebra();
        let draw = |rng: &mut ChaCha8Rng| -> (Vec<usize>, usize, i64) {
            let args: Vec<usize> = (0..ext).map(|_| rng.gen_range(0..n)).collect();
            let out = rng.gen_range(0..n);
            let p = alg.degree(out) - args.iter().map(|&a| alg.degree(a)).sum::<i64>();
            (args, out, p)
        };
        let (args, out, p) = draw(rng);
        let mut c: Cochain<F> = self.zero(p, ext)?;
        c.add_to(out, &args, random_coeff(rng));
        let extra = rng.gen_range(0..=EXTRA_TERMS);
        for _ in 0..extra {
            for _ in 0..TRIES {
                let (a, o, q) = draw(rng);
                if q == p {
                    c.add_to(o, &a, random_coeff(rng));
                    break;
                }
            }
        }
        let m = MultiCochain::from(c);
        Ok((!m.is_zero()).then_some(m))
    }

    fn basis_elements(&self, ext: usize) -> Result<Vec<MultiCochain<F>>> {
        let mut out = Vec::new();
        for p in self.internal_degrees(ext) {
            out.extend(self.basis(p, ext)?.into_iter().map(MultiCochain::from));
        }
        Ok(out)
    }
}

/// Deliberate sign errors used as negative controls for the identity suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// One-argument braces pick up a global minus sign.
    FlipBrace,
    /// `a ∪ b` is replaced by `(−1)^{|a|} a ∪ b`.
    FlipCup,
}

/// A model whose operations are perturbed by a [`Mutation`].
pub struct Mutated<'a, T> {
    pub inner: &'a T,
    pub mutation: Mutation,
}

impl<'a, T: CactiAlgebra> CactiAlgebra for Mutated<'a, T> {
    type F = T::F;
    type Elem = T::Elem;

    fn name(&self) -> String {
        format!("{} ({:?})", self.inner.name(), self.mutation)
    }

    fn zero(&self) -> T::Elem {
        self.inner.zero()
    }

    fn is_zero(&self, a: &T::Elem) -> bool {
        self.inner.is_zero(a)
    }

    fn add_scaled(&self, acc: &mut T::Elem, x: &T::Elem, c: &T::F) {
        self.inner.add_scaled(acc, x, c)
    }

    fn total_degree(&self, a: &T::Elem) -> Option<i64> {
        self.inner.total_degree(a)
    }

    fn external_degree(&self, a: &T::Elem) -> Option<usize> {
        self.inner.external_degree(a)
    }

    fn cup(&self, a: &T::Elem, b: &T::Elem) -> Result<T::Elem> {
        let c = self.inner.cup(a, b)?;
        if self.mutation == Mutation::FlipCup && self.inner.degree(a)? % 2 != 0 {
            return Ok(self.inner.scaled(&c, &-T::F::one()));
        }
        Ok(c)
    }

    fn brace(&self, x: &T::Elem, ys: &[T::Elem]) -> Result<T::Elem> {
        let b = self.inner.brace(x, ys)?;
        if self.mutation == Mutation::FlipBrace && ys.len() == 1 {
            return Ok(self.inner.scaled(&b, &-T::F::one()));
        }
        Ok(b)
    }

    fn differential(&self, a: &T::Elem) -> Result<T::Elem> {
        self.inner.differential(a)
    }

    fn render(&self, a: &T::Elem) -> String {
        self.inner.render(a)
    }

    fn min_external(&self) -> usize {
        self.inner.min_external()
    }

    fn random_element(&self, rng: &mut ChaCha8Rng, ext: usize) -> Result<Option<T::Elem>> {
        self.inner.random_element(rng, ext)
    }

    fn basis_elements(&self, ext: usize) -> Result<Vec<T::Elem>> {
        self.inner.basis_elements(ext)
    }
}
