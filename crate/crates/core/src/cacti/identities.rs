use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bm, parity_sign, star, CactiAlgebra, IdentityId};
use crate::error::Result;
use crate::report::{AxiomReport, CheckBuilder, CheckResult};

/// Sampling parameters shared by every identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    /// Largest external degree drawn for any argument.
    pub max_ext: usize,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { samples: 100, seed: 0, max_ext: 3, threads: default_threads() }
    }
}

fn default_threads() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn sample_rng(seed: u64, stream: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(seed ^ mix(stream)) ^ index as u64))
}

/// Outcome of one sample: `None` when the drawn arguments were unusable.
type Outcome = Option<(bool, String)>;

/// Draws that produce no case (an empty element, say) are retried this many times.
const RETRIES: u64 = 32;

fn attempt<T, G>(t: &T, cfg: &SuiteConfig, stream: u64, i: usize, f: &G) -> Result<Outcome>
where
    T: CactiAlgebra,
    G: Fn(&T, &mut ChaCha8Rng) -> Result<Outcome>,
{
    for k in 0..RETRIES {
        if let Some(o) = f(t, &mut sample_rng(cfg.seed, stream ^ (k << 40), i))? {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// Runs `f` on sample indices `0..samples` in parallel; results come back in index order.
fn run_samples<T, G>(t: &T, cfg: &SuiteConfig, stream: u64, f: G) -> Result<Vec<Outcome>>
where
    T: CactiAlgebra,
    G: Fn(&T, &mut ChaCha8Rng) -> Result<Outcome> + Sync,
{
    let threads = cfg.threads.max(1).min(cfg.samples.max(1));
    let mut slots: Vec<Option<Result<Outcome>>> = (0..cfg.samples).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                let f = &f;
                s.spawn(move || {
                    (w..cfg.samples)
                        .step_by(threads)
                        .map(|i| (i, attempt(t, cfg, stream, i, f)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("sample worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every sample runs")).collect()
}

fn summarize(name: &str, outcomes: Vec<Outcome>) -> CheckResult {
    let mut check = CheckBuilder::new(name);
    for (ok, witness) in outcomes.into_iter().flatten() {
        check.record(ok, || witness);
    }
    check.finish()
}

fn ext_in<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    let lo = lo.max(t.min_external());
    let hi = hi.max(lo);
    rng.gen_range(lo..=hi)
}

/// Draws one random element per requested external degree; `None` if any draw is empty.
fn draw<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, exts: &[usize]) -> Result<Option<Vec<T::Elem>>> {
    let mut out = Vec::with_capacity(exts.len());
    for &e in exts {
        match t.random_element(rng, e)? {
            Some(x) => out.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn compare<T: CactiAlgebra>(t: &T, args: &[T::Elem], lhs: &T::Elem, rhs: &T::Elem) -> Outcome {
    let ok = lhs == rhs;
    let witness = if ok {
        String::new()
    } else {
        let args: Vec<String> = args.iter().map(|a| format!("[{}]", t.render(a))).collect();
        format!("args {}: lhs − rhs = {}", args.join(", "), t.render(&t.difference(lhs, rhs)))
    };
    Some((ok, witness))
}

fn shifted<T: CactiAlgebra>(t: &T, a: &T::Elem) -> Result<i64> {
    Ok(t.degree(a)? - 1)
}

/// `x{y_1..y_m}{z_1..z_n} = Σ ± x{…, y_l{z…}, …, z, …}` over all placements of the `z`s.
fn brace_relation<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let (m, n) = *[(1, 1), (1, 2), (2, 1)].get(rng.gen_range(0..3)).unwrap();
    let mut exts = vec![ext_in(t, rng, 1, cfg.max_ext.min(3))];
    for _ in 0..m + n {
        exts.push(ext_in(t, rng, 0, cfg.max_ext.min(2)));
    }
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (x, rest) = args.split_first().unwrap();
    let (ys, zs) = rest.split_at(m);
    let lhs = t.brace(&t.brace(x, ys)?, zs)?;

    let yd: Vec<i64> = ys.iter().map(|y| shifted(t, y)).collect::<Result<_>>()?;
    let zd: Vec<i64> = zs.iter().map(|z| shifted(t, z)).collect::<Result<_>>()?;
    let mut rhs = t.zero();
    // loc 2g: gap g before y_{g+1}; loc 2l−1: inside y_l
    let mut loc = vec![0usize; n];
    loop {
        let mut parity = 0i64;
        for (p, &lp) in loc.iter().enumerate() {
            for (l, &d) in yd.iter().enumerate() {
                if 2 * l + 1 > lp {
                    parity += zd[p] * d;
                }
            }
        }
        let mut inner = Vec::new();
        let mut p = 0;
        for slot in 0..=2 * m {
            if slot % 2 == 0 {
                while p < n && loc[p] == slot {
                    inner.push(zs[p].clone());
                    p += 1;
                }
            } else {
                let mut group = Vec::new();
                while p < n && loc[p] == slot {
                    group.push(zs[p].clone());
                    p += 1;
                }
                inner.push(t.brace(&ys[slot / 2], &group)?);
            }
        }
        let term = t.brace(x, &inner)?;
        t.add_scaled(&mut rhs, &term, &parity_sign(parity));
        // next non-decreasing sequence
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(compare(t, &args, &lhs, &rhs));
            }
            i -= 1;
            if loc[i] < 2 * m {
                loc[i] += 1;
                for j in i + 1..n {
                    loc[j] = loc[i];
                }
                break;
            }
        }
    }
}

/// `(x_1 ∪ x_2){y_1..y_k} = Σ_p (−1)^{|x_2| Σ_{j≤p} |y_j|'} x_1{y_1..y_p} ∪ x_2{y_{p+1}..y_k}`.
fn distributivity<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let k = rng.gen_range(1..=2);
    let mut exts = vec![ext_in(t, rng, 0, cfg.max_ext.min(2)), ext_in(t, rng, 0, cfg.max_ext.min(2))];
    for _ in 0..k {
        exts.push(ext_in(t, rng, 0, cfg.max_ext.min(2)));
    }
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (x1, x2, ys) = (&args[0], &args[1], &args[2..]);
    let lhs = t.brace(&t.cup(x1, x2)?, ys)?;
    let d2 = t.degree(x2)?;
    let mut rhs = t.zero();
    let mut acc = 0i64;
    for p in 0..=k {
        if p > 0 {
            acc += shifted(t, &ys[p - 1])?;
        }
        let term = t.cup(&t.brace(x1, &ys[..p])?, &t.brace(x2, &ys[p..])?)?;
        t.add_scaled(&mut rhs, &term, &parity_sign(d2 * acc));
    }
    Ok(compare(t, &args, &lhs, &rhs))
}

/// Both sides of the evaluated boundary formula for `B_m`.
///
/// Returns `δB_m(t) = d B_m(t) − Σ_i (−1)^{(1−m) + Σ_{j<i}|t_j|} B_m(…, d t_i, …)` and the
/// unsigned cactus terms `t_2 ∪ B_{m−1}(t_1, t_3, …)`, `B_{m−1}(…, t_i ∪ t_{i+1}, …)` for
/// `2 ≤ i < m`, and `B_{m−1}(t_1, …, t_{m−1}) ∪ t_m`.
pub fn boundary_terms<T: CactiAlgebra>(t: &T, args: &[T::Elem]) -> Result<(T::Elem, Vec<T::Elem>)> {
    let m = args.len();
    assert!(m >= 2);
    let b = |xs: &[T::Elem]| -> Result<T::Elem> {
        if xs.len() == 1 {
            Ok(xs[0].clone())
        } else {
            bm(t, &xs[0], &xs[1..])
        }
    };
    let mut lhs = t.differential(&b(args)?)?;
    let mut before = 0i64;
    for i in 0..m {
        let di = t.differential(&args[i])?;
        if !t.is_zero(&di) {
            let mut xs = args.to_vec();
            xs[i] = di;
            let term = b(&xs)?;
            let s = parity_sign::<T::F>(1 - m as i64 + before);
            t.add_scaled(&mut lhs, &term, &-s);
        }
        before += t.degree(&args[i])?;
    }
    let mut terms = Vec::with_capacity(m);
    let mut xs = vec![args[0].clone()];
    xs.extend_from_slice(&args[2..]);
    terms.push(t.cup(&args[1], &b(&xs)?)?);
    for i in 1..m - 1 {
        let mut xs = args[..i].to_vec();
        xs.push(t.cup(&args[i], &args[i + 1])?);
        xs.extend_from_slice(&args[i + 2..]);
        terms.push(b(&xs)?);
    }
    terms.push(t.cup(&b(&args[..m - 1])?, &args[m - 1])?);
    Ok((lhs, terms))
}

/// Sign parity of the `i`-th cactus term in `δB_m`: `(|t_1| + m)|t_2|` for the first, `i` after.
pub(crate) fn boundary_sign(m: usize, i: usize, degs: &[i64]) -> i64 {
    if i == 0 {
        (degs[0] + m as i64) * degs[1]
    } else {
        i as i64
    }
}

fn boundary_of_bm<T: CactiAlgebra>(m: usize, t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let mut exts = vec![ext_in(t, rng, m - 1, (m - 1).max(cfg.max_ext.min(m)))];
    for _ in 1..m {
        exts.push(ext_in(t, rng, 0, cfg.max_ext.min(2)));
    }
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (lhs, terms) = boundary_terms(t, &args)?;
    let degs: Vec<i64> = args.iter().map(|a| t.degree(a)).collect::<Result<_>>()?;
    let mut rhs = t.zero();
    for (i, term) in terms.iter().enumerate() {
        t.add_scaled(&mut rhs, term, &parity_sign(boundary_sign(m, i, &degs)));
    }
    Ok(compare(t, &args, &lhs, &rhs))
}

/// `(a*b)*c − a*(b*c) = (−1)^{|b|'|c|'} ((a*c)*b − a*(c*b))`.
fn pre_lie<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let exts = [
        ext_in(t, rng, 1, cfg.max_ext.min(3)),
        ext_in(t, rng, 1, cfg.max_ext.min(2)),
        ext_in(t, rng, 0, cfg.max_ext.min(2)),
    ];
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (a, b, c) = (&args[0], &args[1], &args[2]);
    let assoc = |x: &T::Elem, y: &T::Elem| -> Result<T::Elem> {
        Ok(t.difference(&star(t, &star(t, a, x)?, y)?, &star(t, a, &star(t, x, y)?)?))
    };
    let lhs = assoc(b, c)?;
    let rhs = t.scaled(&assoc(c, b)?, &parity_sign(shifted(t, b)? * shifted(t, c)?));
    Ok(compare(t, &args, &lhs, &rhs))
}

/// `(x*y)*z = x*(y*z)` for `x`, `y` of external degree one.
fn ext1_associativity<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let exts = [1, 1, ext_in(t, rng, 0, cfg.max_ext.min(3))];
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (x, y, z) = (&args[0], &args[1], &args[2]);
    let lhs = star(t, &star(t, x, y)?, z)?;
    let rhs = star(t, x, &star(t, y, z)?)?;
    Ok(compare(t, &args, &lhs, &rhs))
}

/// `B_2(a ∪ b, c) = (−1)^{|a|} a ∪ B_2(b, c) + (−1)^{|b||c|} B_2(a, c) ∪ b`.
fn left_distributivity_b2<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let exts = [
        ext_in(t, rng, 0, cfg.max_ext.min(2)),
        ext_in(t, rng, 0, cfg.max_ext.min(2)),
        ext_in(t, rng, 0, cfg.max_ext.min(2)),
    ];
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (a, b, c) = (&args[0], &args[1], &args[2]);
    let b2 = |x: &T::Elem, y: &T::Elem| bm(t, x, std::slice::from_ref(y));
    let lhs = b2(&t.cup(a, b)?, c)?;
    let (da, db, dc) = (t.degree(a)?, t.degree(b)?, t.degree(c)?);
    let mut rhs = t.scaled(&t.cup(a, &b2(b, c)?)?, &parity_sign(da));
    t.add_scaled(&mut rhs, &t.cup(&b2(a, c)?, b)?, &parity_sign(db * dc));
    Ok(compare(t, &args, &lhs, &rhs))
}

/// `d(a ∪ b) = da ∪ b + (−1)^{|a|} a ∪ db`.
fn d_is_derivation<T: CactiAlgebra>(t: &T, rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Outcome> {
    let exts = [ext_in(t, rng, 0, cfg.max_ext.min(2)), ext_in(t, rng, 0, cfg.max_ext.min(2))];
    let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
    let (a, b) = (&args[0], &args[1]);
    let lhs = t.differential(&t.cup(a, b)?)?;
    let mut rhs = t.cup(&t.differential(a)?, b)?;
    t.add_scaled(&mut rhs, &t.cup(a, &t.differential(b)?)?, &parity_sign(t.degree(a)?));
    Ok(compare(t, &args, &lhs, &rhs))
}

/// `B_n(a, …) = 0` for every basis element `a` of external degree `p < n − 1`.
fn well_graded_vanishing<T: CactiAlgebra>(t: &T, cfg: &SuiteConfig) -> Result<CheckResult> {
    let mut check = CheckBuilder::new(IdentityId::WellGradedVanishing.as_str());
    let mut rng = sample_rng(cfg.seed, IdentityId::WellGradedVanishing as u64, 0);
    let filler_ext = t.min_external().max(1);
    for p in t.min_external()..=cfg.max_ext {
        for a in t.basis_elements(p)? {
            for n in [p + 2, p + 3] {
                let mut ys = Vec::with_capacity(n - 1);
                for _ in 0..n - 1 {
                    if let Some(y) = t.random_element(&mut rng, filler_ext)? {
                        ys.push(y);
                    }
                }
                if ys.len() < n - 1 {
                    continue;
                }
                let v = bm(t, &a, &ys)?;
                check.record(t.is_zero(&v), || format!("B_{n}({}, …) = {}", t.render(&a), t.render(&v)));
            }
        }
    }
    let sampled = run_samples(t, cfg, IdentityId::WellGradedVanishing as u64 + 0x100, |t, rng| {
        let p = ext_in(t, rng, t.min_external(), cfg.max_ext);
        let n = p + rng.gen_range(2..=3);
        let mut exts = vec![p];
        exts.extend(std::iter::repeat_n(filler_ext, n - 1));
        let Some(args) = draw(t, rng, &exts)? else { return Ok(None) };
        let v = bm(t, &args[0], &args[1..])?;
        Ok(Some((t.is_zero(&v), format!("B_{n}({}, …) = {}", t.render(&args[0]), t.render(&v)))))
    })?;
    for (ok, w) in sampled.into_iter().flatten() {
        check.record(ok, || w);
    }
    Ok(check.finish())
}

/// Evaluates one identity; `boundary_of_Bm` yields one check each for `m = 2, 3, 4`.
pub fn check_identity<T: CactiAlgebra>(t: &T, id: IdentityId, cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let stream = id as u64;
    let sampled = |name: &str, f: &(dyn Fn(&T, &mut ChaCha8Rng, &SuiteConfig) -> Result<Outcome> + Sync)| {
        run_samples(t, cfg, stream, |t, rng| f(t, rng, cfg)).map(|o| vec![summarize(name, o)])
    };
    match id {
        IdentityId::BraceRelation => sampled(id.as_str(), &brace_relation),
        IdentityId::Distributivity => sampled(id.as_str(), &distributivity),
        IdentityId::PreLie => sampled(id.as_str(), &pre_lie),
        IdentityId::Ext1Associativity => sampled(id.as_str(), &ext1_associativity),
        IdentityId::LeftDistributivityB2 => sampled(id.as_str(), &left_distributivity_b2),
        IdentityId::DIsDerivation => sampled(id.as_str(), &d_is_derivation),
        IdentityId::WellGradedVanishing => Ok(vec![well_graded_vanishing(t, cfg)?]),
        IdentityId::BoundaryOfBm => {
            let mut out = Vec::new();
            for m in 2..=4usize {
                let o = run_samples(t, cfg, stream * 16 + m as u64, |t, rng| boundary_of_bm(m, t, rng, cfg))?;
                out.push(summarize(&format!("boundary_of_B{m}"), o));
            }
            Ok(out)
        }
        IdentityId::DiagonalAction => {
            let o = run_samples(t, cfg, stream, |t, rng| t.diagonal_action_case(rng).transpose())?;
            if o.iter().all(Option::is_none) {
                return Ok(Vec::new());
            }
            Ok(vec![summarize(id.as_str(), o)])
        }
    }
}

/// Runs every applicable identity.
pub fn run_suite<T: CactiAlgebra>(t: &T, cfg: &SuiteConfig) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(t.name());
    for id in IdentityId::ALL {
        for c in check_identity(t, id, cfg)? {
            report.push(c);
        }
    }
    Ok(report)
}

