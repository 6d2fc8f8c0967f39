use std::fmt::Write as _;

use serde_json::{json, Value};

use cacti_core::algebra::{check_bialgebra_morphism, dual_bialgebra, pairing_action};
use cacti_core::cacti::{check_identity, extract_round_trip, lift_bialgebra_morphism, run_suite, CactiAlgebra, IdentityId, SuiteConfig};
use cacti_core::cobar::Cobar;
use cacti_core::hochschild::{skew_cocycle, Hochschild, MultiCochain};
use cacti_core::homology::{
    betti, class_bracket, class_rank, differential_matrix, representatives, BettiTable, CohomologyClass, Degree, GradedComplex,
    CobarComplex, HochschildComplex, COMPONENT_CAP,
};
use cacti_core::io::{self, Document, DocumentKind};
use cacti_core::module_algebra::{check_module_algebra, verify_cacti_morphism, InducedMorphism};
use cacti_core::report::CheckBuilder;
use cacti_core::{AxiomReport, CheckResult, Error, Field, Result};

use crate::output::Outcome;
use crate::{Command, Kind, Sampling, Side};

fn suite_config(s: &Sampling) -> SuiteConfig {
    SuiteConfig { samples: s.samples, seed: s.seed, max_ext: s.max_ext, ..SuiteConfig::default() }
}

/// Collects text, structured sections and a verdict.
struct Builder {
    passed: bool,
    text: String,
    json: serde_json::Map<String, Value>,
}

impl Builder {
    fn new() -> Self {
        Builder { passed: true, text: String::new(), json: serde_json::Map::new() }
    }

    fn report(&mut self, key: &str, r: &AxiomReport) {
        self.passed &= r.all_passed();
        self.text.push_str(&r.to_string());
        self.json.insert(key.into(), serde_json::to_value(r).expect("report"));
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn put(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }

    fn finish(self) -> Outcome {
        Outcome { passed: self.passed, text: self.text, json: Value::Object(self.json) }
    }
}

fn single(subject: impl Into<String>, checks: impl IntoIterator<Item = CheckResult>) -> AxiomReport {
    let mut r = AxiomReport::new(subject);
    for c in checks {
        r.push(c);
    }
    r
}

fn failed_check(name: &str, witness: String) -> CheckResult {
    let mut b = CheckBuilder::new(name);
    b.record(false, || witness);
    b.finish()
}

pub fn execute<F: Field>(cmd: &Command, doc: &Document) -> Result<Outcome> {
    match cmd {
        Command::Check { kind, .. } => check::<F>(doc, *kind),
        Command::CobarCohomology { max_ext, internal, .. } => cobar_cohomology::<F>(doc, *max_ext, *internal),
        Command::HochschildCohomology { max_q, internal, .. } => hochschild_cohomology::<F>(doc, *max_q, *internal),
        Command::Identities { side, identity, sampling, .. } => identities::<F>(doc, *side, identity.as_deref(), sampling),
        Command::Induced { verify, image, sampling, .. } => induced::<F>(doc, *verify, *image, sampling),
        Command::Dual { .. } => dual::<F>(doc),
        Command::Extract { .. } => extract::<F>(doc),
        Command::Lift { sampling, .. } => lift::<F>(doc, sampling),
        Command::SkewCocycle { .. } => skew::<F>(doc),
    }
}

fn check<F: Field>(doc: &Document, kind: Option<Kind>) -> Result<Outcome> {
    let kind = match kind {
        Some(k) => k,
        None => match doc.kind()? {
            DocumentKind::Algebra => Kind::Algebra,
            DocumentKind::Bialgebra => Kind::Bialgebra,
            DocumentKind::Action => Kind::Action,
            DocumentKind::Morphism => Kind::Morphism,
            DocumentKind::Chain => Kind::Chain,
            DocumentKind::Cochain => return Err(Error::Format("cochain files have no checker".into())),
        },
    };
    let mut b = Builder::new();
    match kind {
        Kind::Algebra => b.report("report", &io::parse_algebra::<F>(&doc.value, &doc.base)?.check_axioms()),
        Kind::Bialgebra => b.report("report", &io::parse_bialgebra::<F>(&doc.value, &doc.base)?.check_axioms()),
        Kind::Action => b.report("report", &check_module_algebra(&io::parse_action::<F>(&doc.value, &doc.base)?)),
        Kind::Morphism => b.report("report", &check_bialgebra_morphism(&io::parse_morphism::<F>(&doc.value, &doc.base)?)),
        Kind::Chain => return skew::<F>(doc),
    }
    Ok(b.finish())
}

fn render_classes<C: GradedComplex>(c: &C, classes: &[CohomologyClass<C::Elem>]) -> Vec<(String, String)> {
    classes.iter().map(|k| (k.degree.to_string(), c.render(&k.representative))).collect()
}

/// Betti table, representatives where the table is exact, and `d² = 0` on the matrices.
fn cohomology_report<C: GradedComplex>(c: &C, keys: &[Degree], b: &mut Builder) -> Result<()> {
    let table: BettiTable = betti(c, keys)?;
    b.text.push_str(&table.to_string());
    let mut reps = Vec::new();
    for e in table.entries.iter().filter(|e| e.betti > 0 && e.rank_out.is_some()) {
        reps.extend(render_classes(c, &representatives(c, e.degree)?));
    }
    if !reps.is_empty() {
        b.line("representatives:");
        for (d, r) in &reps {
            b.line(format!("  {d}: {r}"));
        }
    }
    let mut dsq = CheckBuilder::new("d_squared_matrix");
    for &key in keys {
        let Some(prev) = c.prev(key) else { continue };
        if c.size(c.next(key)) > COMPONENT_CAP {
            continue;
        }
        let m = differential_matrix(c, key)?.mul(&differential_matrix(c, prev)?);
        dsq.record(m.is_zero(), || format!("M_out·M_in ≠ 0 at {key}"));
    }
    b.put("betti", serde_json::to_value(&table).expect("table"));
    b.put(
        "representatives",
        Value::Array(reps.iter().map(|(d, r)| json!({"degree": d, "representative": r})).collect()),
    );
    b.report("report", &single(c.name(), [dsq.finish()]));
    Ok(())
}

fn bigraded_keys(degrees: impl Fn(usize) -> Vec<i64>, exts: std::ops::RangeInclusive<usize>, internal: Option<i64>) -> Vec<Degree> {
    let mut keys = Vec::new();
    for n in exts {
        for i in degrees(n) {
            if internal.is_none_or(|j| j == i) {
                keys.push(Degree::Bi { internal: i, external: n });
            }
        }
    }
    keys
}

fn cobar_cohomology<F: Field>(doc: &Document, max_ext: usize, internal: Option<i64>) -> Result<Outcome> {
    let c = Cobar::new(io::parse_bialgebra::<F>(&doc.value, &doc.base)?)?;
    let cx = CobarComplex::new(&c, max_ext);
    let keys = if cx.bigraded() {
        bigraded_keys(|n| c.internal_degrees(n), 1..=max_ext, internal)
    } else {
        cx.window(0)
    };
    let mut b = Builder::new();
    cohomology_report(&cx, &keys, &mut b)?;
    Ok(b.finish())
}

fn hochschild_cohomology<F: Field>(doc: &Document, max_q: usize, internal: Option<i64>) -> Result<Outcome> {
    let h = Hochschild::new(io::parse_algebra::<F>(&doc.value, &doc.base)?)?;
    let cx = HochschildComplex::new(&h, max_q);
    let keys = if cx.bigraded() {
        bigraded_keys(|q| h.internal_degrees(q), 0..=max_q, internal)
    } else {
        cx.window(0)
    };
    let mut b = Builder::new();
    cohomology_report(&cx, &keys, &mut b)?;
    Ok(b.finish())
}

fn suite<T: CactiAlgebra>(t: &T, identity: Option<&str>, cfg: &SuiteConfig) -> Result<AxiomReport> {
    match identity {
        None => run_suite(t, cfg),
        Some(id) => {
            let id: IdentityId = id.parse()?;
            Ok(single(t.name(), check_identity(t, id, cfg)?))
        }
    }
}

fn identities<F: Field>(doc: &Document, side: Option<Side>, identity: Option<&str>, s: &Sampling) -> Result<Outcome> {
    let side = match side {
        Some(s) => s,
        None if doc.kind()? == DocumentKind::Bialgebra => Side::Cobar,
        None => Side::Hochschild,
    };
    let cfg = suite_config(s);
    let report = match side {
        Side::Cobar => suite(&Cobar::new(io::parse_bialgebra::<F>(&doc.value, &doc.base)?)?, identity, &cfg)?,
        Side::Hochschild => suite(&Hochschild::new(io::parse_algebra::<F>(&doc.value, &doc.base)?)?, identity, &cfg)?,
    };
    let mut b = Builder::new();
    b.report("report", &report);
    Ok(b.finish())
}

fn induced<F: Field>(doc: &Document, verify: bool, image: Option<usize>, s: &Sampling) -> Result<Outcome> {
    let act = io::parse_action::<F>(&doc.value, &doc.base)?;
    let cfg = suite_config(s);
    let mut b = Builder::new();
    if verify {
        b.report("report", &verify_cacti_morphism(&act, &cfg)?);
    } else {
        b.report("report", &check_module_algebra(&act));
    }
    if !b.passed {
        return Ok(b.finish());
    }
    let phi = InducedMorphism::new(act)?;
    let (c, h) = (phi.cobar(), phi.hochschild());
    let cx = CobarComplex::new(c, 3);
    let hx = HochschildComplex::new(h, 3);
    if !(cx.bigraded() && hx.bigraded()) {
        b.line("images of H^2 classes skipped: a differential mixes bidegrees");
    } else {
        let mut cocycle = CheckBuilder::new("image_cocycle");
        let mut images = Vec::new();
        for i in c.internal_degrees(2) {
            for class in representatives(&cx, Degree::Bi { internal: i, external: 2 })? {
                let psi = phi.apply(&class.representative)?;
                let cc = h.cocycle_check(&psi)?;
                cocycle.record(cc.passed, || cc.witness.clone().unwrap_or_default());
                let br = class_bracket(&hx, h, &psi, &psi)?;
                let bracket = if h.is_zero(&br.value) {
                    "zero (literal)".to_string()
                } else if br.is_zero_class {
                    format!("zero class, witness {}", h.render(br.witness.as_ref().expect("witness")))
                } else {
                    format!("nonzero class {}", h.render(&br.value))
                };
                b.line(format!("H^2 class {}: image {}", c.render(&class.representative), h.render(&psi)));
                b.line(format!("  [image, image] = {bracket}"));
                images.push(json!({
                    "class": c.render(&class.representative),
                    "image": io::multi_cochain_json(h, &psi),
                    "bracket_zero_class": br.is_zero_class,
                }));
            }
        }
        b.put("h2_images", Value::Array(images));
        b.report("image_report", &single("images of H^2", [cocycle.finish()]));
    }
    if let Some(top) = image {
        let cx = CobarComplex::new(c, top);
        let hx = HochschildComplex::new(h, top);
        if cx.bigraded() && hx.bigraded() {
            b.line("induced map on cohomology:");
            b.line(format!("  {:<10} {:>6} {:>6}", "degree", "dim", "rank"));
            let mut rows = Vec::new();
            for n in 1..=top {
                for i in c.internal_degrees(n) {
                    let key = Degree::Bi { internal: i, external: n };
                    let classes = representatives(&cx, key)?;
                    if classes.is_empty() {
                        continue;
                    }
                    let imgs: Vec<MultiCochain<F>> = classes.iter().map(|k| phi.apply(&k.representative)).collect::<Result<_>>()?;
                    let rank = class_rank(&hx, key, &imgs)?;
                    b.line(format!("  {:<10} {:>6} {:>6}", key.to_string(), classes.len(), rank));
                    rows.push(json!({"degree": key.to_string(), "dim": classes.len(), "rank": rank}));
                }
            }
            b.put("image", Value::Array(rows));
        }
    }
    Ok(b.finish())
}

fn dual<F: Field>(doc: &Document) -> Result<Outcome> {
    let h = io::parse_bialgebra::<F>(&doc.value, &doc.base)?;
    let d = dual_bialgebra(&h)?;
    let mut b = Builder::new();
    b.report("dual_report", &d.bialgebra.check_axioms());
    b.report("pairing_action_report", &check_module_algebra(&pairing_action(&h)?));
    let pres = io::bialgebra_json(&d.bialgebra);
    b.line("dual presentation:");
    b.line(serde_json::to_string_pretty(&pres).expect("json"));
    b.put("dual", pres);
    Ok(b.finish())
}

fn extract<F: Field>(doc: &Document) -> Result<Outcome> {
    let h = io::parse_bialgebra::<F>(&doc.value, &doc.base)?;
    let mut b = Builder::new();
    match extract_round_trip(&h) {
        Ok(e) => {
            let mut same = CheckBuilder::new("round_trip");
            same.record(e.same_structure(&h), || "extracted structure constants differ".into());
            b.report("report", &single(format!("extract {}", h.name()), [same.finish()]));
            let pres = io::bialgebra_json(&e);
            b.line("extracted presentation:");
            b.line(serde_json::to_string_pretty(&pres).expect("json"));
            b.put("extracted", pres);
        }
        Err(Error::ExtractionFailure(m)) => {
            b.report("report", &single(format!("extract {}", h.name()), [failed_check("round_trip", m)]));
        }
        Err(e) => return Err(e),
    }
    Ok(b.finish())
}

fn lift<F: Field>(doc: &Document, s: &Sampling) -> Result<Outcome> {
    let f = io::parse_morphism::<F>(&doc.value, &doc.base)?;
    let mut b = Builder::new();
    match lift_bialgebra_morphism(&f) {
        Ok(m) => {
            b.report("report", &m.verify(&suite_config(s))?);
            let mut t = String::new();
            for v in 0..m.source.dim_v() {
                let x = cacti_core::cobar::CobarElement::basis(vec![v as cacti_core::cobar::Letter]);
                let _ = writeln!(t, "  {} ↦ {}", m.source.render(&x), m.target.render(&m.apply(&x)));
            }
            b.line("letters:");
            b.text.push_str(&t);
        }
        Err(Error::NotABialgebraMorphism(w)) => {
            b.report("report", &single("lift", [failed_check("bialgebra_morphism", w)]));
        }
        Err(e) => return Err(e),
    }
    Ok(b.finish())
}

fn skew<F: Field>(doc: &Document) -> Result<Outcome> {
    let (alg, chain) = io::parse_chain::<F>(&doc.value, &doc.base)?;
    let sc = skew_cocycle(&alg, &chain)?;
    let h = Hochschild::new(alg)?;
    let f = MultiCochain::from(sc.cochain.clone());
    let mut b = Builder::new();
    b.report("chain_report", &sc.report);
    b.report("cocycle_report", &single(format!("skew cochain on {}", h.algebra().name()), [h.cocycle_check(&f)?]));
    b.line(format!("f = {}", h.render(&f)));
    b.put("cochain", io::cochain_json(&h, &sc.cochain));
    Ok(b.finish())
}
