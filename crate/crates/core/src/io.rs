//! JSON file formats for presentations, actions, morphisms, skew-derivation chains and cochains.
//!
//! Elements are objects from basis labels to scalar strings (`"-2/3"`). Products are
//! keyed `"a*b"`, coproduct terms `"b|c"`, action values `"h.a"` and cochain entries
//! `"out<-a1,a2"`. Wherever a presentation is expected, the string `"catalog:<id>"` or
//! a path relative to the including file may stand in for an inline object.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::algebra::{make_example, Algebra, Bialgebra, CatalogId, Elem, Elem2, Example, MorphismMatrix};
use crate::error::{Error, Result};
use crate::hochschild::{Cochain, Hochschild, LinearMap, MultiCochain, SkewDerivationChain};
use crate::module_algebra::ActionMap;
use crate::scalar::{Field, FieldSpec};

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// What a JSON document describes, judged by its keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Algebra,
    Bialgebra,
    Action,
    Morphism,
    Chain,
    Cochain,
}

pub fn document_kind(v: &Value) -> Result<DocumentKind> {
    if let Some(s) = v.as_str() {
        let id: CatalogId = catalog_id(s).ok_or_else(|| fmt_err(format!("not a catalog reference: {s}")))??;
        return Ok(if id.is_bialgebra() { DocumentKind::Bialgebra } else { DocumentKind::Algebra });
    }
    let o = v.as_object().ok_or_else(|| fmt_err("expected a JSON object"))?;
    Ok(if o.contains_key("action") {
        DocumentKind::Action
    } else if o.contains_key("map") {
        DocumentKind::Morphism
    } else if o.contains_key("maps") {
        DocumentKind::Chain
    } else if o.contains_key("coeffs") {
        DocumentKind::Cochain
    } else if o.contains_key("comult") {
        DocumentKind::Bialgebra
    } else {
        DocumentKind::Algebra
    })
}

fn catalog_id(s: &str) -> Option<Result<CatalogId>> {
    s.strip_prefix("catalog:").map(str::parse)
}

/// A loaded document and the directory its relative references resolve against.
#[derive(Debug, Clone)]
pub struct Document {
    pub value: Value,
    pub base: PathBuf,
}

impl Document {
    /// Reads `catalog:<id>` literally or parses the file at `arg`.
    pub fn load(arg: &str) -> Result<Self> {
        if arg.starts_with("catalog:") {
            return Ok(Document { value: Value::String(arg.to_string()), base: PathBuf::from(".") });
        }
        let path = Path::new(arg);
        let text = std::fs::read_to_string(path)?;
        let value: Value = serde_json::from_str(&text)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Document { value, base })
    }

    pub fn from_value(value: Value) -> Self {
        Document { value, base: PathBuf::from(".") }
    }

    pub fn kind(&self) -> Result<DocumentKind> {
        document_kind(&self.value)
    }

    /// The field declared by the document or by the first presentation it refers to.
    pub fn declared_field(&self) -> Result<Option<FieldSpec>> {
        declared_field(&self.value, &self.base)
    }
}

fn declared_field(v: &Value, base: &Path) -> Result<Option<FieldSpec>> {
    match v {
        Value::String(s) if s.starts_with("catalog:") => Ok(None),
        Value::String(s) => {
            let d = Document::load(&base.join(s).to_string_lossy())?;
            declared_field(&d.value, &d.base)
        }
        Value::Object(o) => {
            if let Some(f) = o.get("field") {
                return Ok(Some(serde_json::from_value(f.clone())?));
            }
            for key in ["bialgebra", "source", "algebra", "target"] {
                if let Some(inner) = o.get(key) {
                    if let Some(f) = declared_field(inner, base)? {
                        return Ok(Some(f));
                    }
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

fn resolve(v: &Value, base: &Path) -> Result<(Value, PathBuf)> {
    match v {
        Value::String(s) if s.starts_with("catalog:") => Ok((v.clone(), base.to_path_buf())),
        Value::String(s) => {
            let d = Document::load(&base.join(s).to_string_lossy())?;
            Ok((d.value, d.base))
        }
        _ => Ok((v.clone(), base.to_path_buf())),
    }
}

fn scalar<F: Field>(v: &Value) -> Result<F> {
    match v {
        Value::String(s) => Ok(F::parse_scalar(s)?),
        Value::Number(n) => Ok(F::parse_scalar(&n.to_string())?),
        _ => Err(fmt_err(format!("expected a scalar, found {v}"))),
    }
}

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| fmt_err(format!("{what}: expected an object")))
}

fn index(labels: &[String], l: &str) -> Result<usize> {
    labels.iter().position(|b| b == l).ok_or_else(|| fmt_err(format!("unknown basis label {l:?}")))
}

fn split2(key: &str, sep: char) -> Result<(&str, &str)> {
    key.split_once(sep).ok_or_else(|| fmt_err(format!("key {key:?} lacks {sep:?}")))
}

/// `{"label": "scalar", …}` as basis coordinates.
pub fn parse_elem<F: Field>(labels: &[String], v: &Value) -> Result<Elem<F>> {
    let mut out = Elem::new();
    for (l, c) in obj(v, "element")? {
        out.add_term(index(labels, l)?, scalar(c)?);
    }
    Ok(out)
}

pub fn elem_json<F: Field>(labels: &[String], v: &Elem<F>) -> Value {
    Value::Object(v.iter().map(|(&i, c)| (labels[i].clone(), Value::String(c.to_string()))).collect())
}

fn parse_elem2<F: Field>(labels: &[String], v: &Value) -> Result<Elem2<F>> {
    let mut out = Elem2::new();
    for (k, c) in obj(v, "tensor")? {
        let (a, b) = split2(k, '|')?;
        out.add_term((index(labels, a)?, index(labels, b)?), scalar(c)?);
    }
    Ok(out)
}

fn elem2_json<F: Field>(labels: &[String], v: &Elem2<F>) -> Value {
    Value::Object(
        v.iter()
            .map(|(&(a, b), c)| (format!("{}|{}", labels[a], labels[b]), Value::String(c.to_string())))
            .collect(),
    )
}

/// Parses an algebra or bialgebra presentation (or catalog reference).
pub fn parse_example<F: Field>(v: &Value, base: &Path) -> Result<Example<F>> {
    let (v, base) = resolve(v, base)?;
    if let Some(id) = v.as_str().and_then(catalog_id) {
        return make_example(id?);
    }
    let _ = base;
    let o = obj(&v, "presentation")?;
    let name = o.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
    let basis: Vec<String> = serde_json::from_value(o.get("basis").cloned().ok_or_else(|| fmt_err("missing basis"))?)?;
    let degrees: Vec<i64> = match o.get("degrees") {
        Some(d) => serde_json::from_value(d.clone())?,
        None => vec![0; basis.len()],
    };
    let unit = parse_elem(&basis, o.get("unit").ok_or_else(|| fmt_err("missing unit"))?)?;
    let mut products = Vec::new();
    if let Some(m) = o.get("mult") {
        for (k, val) in obj(m, "mult")? {
            let (a, b) = split2(k, '*')?;
            products.push(((index(&basis, a)?, index(&basis, b)?), parse_elem(&basis, val)?));
        }
    }
    let differential = match o.get("differential") {
        Some(d) => {
            let mut cols = vec![Elem::new(); basis.len()];
            for (k, val) in obj(d, "differential")? {
                cols[index(&basis, k)?] = parse_elem(&basis, val)?;
            }
            Some(cols)
        }
        None => None,
    };
    let alg = Algebra::new(name, basis.clone(), degrees, unit, products, differential)?;
    let Some(comult) = o.get("comult") else {
        return Ok(Example::Algebra(alg));
    };
    let mut delta = vec![Elem2::new(); basis.len()];
    for (k, val) in obj(comult, "comult")? {
        delta[index(&basis, k)?] = parse_elem2(&basis, val)?;
    }
    let mut counit = vec![F::zero(); basis.len()];
    for (k, val) in obj(o.get("counit").ok_or_else(|| fmt_err("missing counit"))?, "counit")? {
        counit[index(&basis, k)?] = scalar(val)?;
    }
    Ok(Example::Bialgebra(Bialgebra::new(alg, delta, counit)?))
}

pub fn parse_algebra<F: Field>(v: &Value, base: &Path) -> Result<Algebra<F>> {
    Ok(parse_example(v, base)?.into_algebra())
}

pub fn parse_bialgebra<F: Field>(v: &Value, base: &Path) -> Result<Bialgebra<F>> {
    parse_example(v, base)?.into_bialgebra()
}

/// Presentation JSON of an algebra; zero products and terms are omitted.
pub fn algebra_json<F: Field>(a: &Algebra<F>) -> Value {
    let b = a.basis();
    let mut mult = Map::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let p = a.product(i, j);
            if !p.is_zero() {
                mult.insert(format!("{}*{}", b[i], b[j]), elem_json(b, p));
            }
        }
    }
    let mut out = json!({
        "name": a.name(),
        "field": F::field_spec(),
        "basis": b,
        "degrees": a.degrees(),
        "unit": elem_json(b, a.unit()),
        "mult": mult,
    });
    if let Some(d) = a.differential() {
        let map: Map<String, Value> = d
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (b[i].clone(), elem_json(b, v)))
            .collect();
        out["differential"] = Value::Object(map);
    }
    out
}

pub fn bialgebra_json<F: Field>(h: &Bialgebra<F>) -> Value {
    let mut out = algebra_json(h.algebra());
    let b = h.basis();
    let comult: Map<String, Value> = (0..h.dim()).map(|i| (b[i].clone(), elem2_json(b, h.coproduct(i)))).collect();
    let counit: Map<String, Value> = (0..h.dim())
        .filter(|&i| !h.counit(i).is_zero())
        .map(|i| (b[i].clone(), Value::String(h.counit(i).to_string())))
        .collect();
    out["comult"] = Value::Object(comult);
    out["counit"] = Value::Object(counit);
    out
}

/// `{"bialgebra": …, "algebra": …, "action": {"h.a": element}}`; unlisted pairs act by
/// zero, and `1_H` acts as the identity unless some `"1.a"` entry is listed.
pub fn parse_action<F: Field>(v: &Value, base: &Path) -> Result<ActionMap<F>> {
    let o = obj(v, "action file")?;
    let h = parse_bialgebra::<F>(o.get("bialgebra").ok_or_else(|| fmt_err("missing bialgebra"))?, base)?;
    let a = parse_algebra::<F>(o.get("algebra").ok_or_else(|| fmt_err("missing algebra"))?, base)?;
    let mut entries = Vec::new();
    for (k, val) in obj(o.get("action").ok_or_else(|| fmt_err("missing action"))?, "action")? {
        let (x, y) = split2(k, '.')?;
        entries.push(((index(h.basis(), x)?, index(a.basis(), y)?), parse_elem(a.basis(), val)?));
    }
    ActionMap::from_entries(h, a, entries)
}

pub fn action_json<F: Field>(act: &ActionMap<F>) -> Value {
    let (h, a) = (act.bialgebra(), act.algebra());
    let mut map = Map::new();
    for i in 0..h.dim() {
        for j in 0..a.dim() {
            let v = act.act_basis(i, j);
            if !v.is_zero() {
                map.insert(format!("{}.{}", h.label(i), a.label(j)), elem_json(a.basis(), v));
            }
        }
    }
    json!({ "bialgebra": bialgebra_json(h), "algebra": algebra_json(a), "action": map })
}

/// `{"source": …, "target": …, "map": {"b": element of target}}`; unlisted basis elements map to zero.
pub fn parse_morphism<F: Field>(v: &Value, base: &Path) -> Result<MorphismMatrix<F>> {
    let o = obj(v, "morphism file")?;
    let s = parse_bialgebra::<F>(o.get("source").ok_or_else(|| fmt_err("missing source"))?, base)?;
    let t = parse_bialgebra::<F>(o.get("target").ok_or_else(|| fmt_err("missing target"))?, base)?;
    let mut images = vec![Elem::new(); s.dim()];
    for (k, val) in obj(o.get("map").ok_or_else(|| fmt_err("missing map"))?, "map")? {
        images[index(s.basis(), k)?] = parse_elem(t.basis(), val)?;
    }
    MorphismMatrix::from_images(s, t, images)
}

pub fn morphism_json<F: Field>(f: &MorphismMatrix<F>) -> Value {
    let (s, t) = (f.source(), f.target());
    let map: Map<String, Value> = (0..s.dim()).map(|i| (s.label(i).to_string(), elem_json(t.basis(), f.image(i)))).collect();
    json!({ "source": bialgebra_json(s), "target": bialgebra_json(t), "map": map })
}

fn parse_linear<F: Field>(labels: &[String], v: Option<&Value>) -> Result<LinearMap<F>> {
    match v {
        None => Ok((0..labels.len()).map(Elem::basis).collect()),
        Some(v) => {
            let mut cols = vec![Elem::new(); labels.len()];
            for (k, val) in obj(v, "linear map")? {
                cols[index(labels, k)?] = parse_elem(labels, val)?;
            }
            Ok(cols)
        }
    }
}

/// `{"algebra": …, "maps": [{"d": map, "g": map, "h": map}, …]}`; a missing `g` or `h` is the identity.
pub fn parse_chain<F: Field>(v: &Value, base: &Path) -> Result<(Algebra<F>, SkewDerivationChain<F>)> {
    let o = obj(v, "chain file")?;
    let a = parse_algebra::<F>(o.get("algebra").ok_or_else(|| fmt_err("missing algebra"))?, base)?;
    let maps = o.get("maps").and_then(Value::as_array).ok_or_else(|| fmt_err("maps must be a list"))?;
    let mut chain = SkewDerivationChain { ds: Vec::new(), gs: Vec::new(), hs: Vec::new() };
    for m in maps {
        let m = obj(m, "chain entry")?;
        let d = m.get("d").ok_or_else(|| fmt_err("chain entry lacks d"))?;
        chain.ds.push(parse_linear(a.basis(), Some(d))?);
        chain.gs.push(parse_linear(a.basis(), m.get("g"))?);
        chain.hs.push(parse_linear(a.basis(), m.get("h"))?);
    }
    Ok((a, chain))
}

/// `{"parent": name, "p": p, "q": q, "coeffs": {"out<-a1,a2": scalar}}`.
pub fn cochain_json<F: Field>(h: &Hochschild<F>, c: &Cochain<F>) -> Value {
    let labels = h.algebra().basis();
    let coeffs: Map<String, Value> = c
        .entries()
        .map(|(args, o, x)| {
            let a: Vec<&str> = args.iter().map(|&i| labels[i].as_str()).collect();
            (format!("{}<-{}", labels[o], a.join(",")), Value::String(x.to_string()))
        })
        .collect();
    json!({ "parent": h.algebra().name(), "p": c.p, "q": c.q, "coeffs": coeffs })
}

/// Reads a cochain of `C•(A)`; the `parent` name must match `A`.
pub fn parse_cochain<F: Field>(h: &Hochschild<F>, v: &Value) -> Result<Cochain<F>> {
    let o = obj(v, "cochain")?;
    let alg = h.algebra();
    let parent = o.get("parent").and_then(Value::as_str).unwrap_or_default();
    if parent != alg.name() {
        return Err(Error::ParentMismatch(format!("cochain of {parent:?} read into C({})", alg.name())));
    }
    let p = o.get("p").and_then(Value::as_i64).ok_or_else(|| fmt_err("missing p"))?;
    let q = o.get("q").and_then(Value::as_u64).ok_or_else(|| fmt_err("missing q"))? as usize;
    let mut c = h.zero(p, q)?;
    for (k, val) in obj(o.get("coeffs").ok_or_else(|| fmt_err("missing coeffs"))?, "coeffs")? {
        let (out, args) = k.split_once("<-").ok_or_else(|| fmt_err(format!("key {k:?} lacks \"<-\"")))?;
        let args: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(|l| index(alg.basis(), l)).collect::<Result<_>>()?
        };
        if args.len() != q {
            return Err(fmt_err(format!("key {k:?} has {} arguments, expected {q}", args.len())));
        }
        let out = index(alg.basis(), out)?;
        let d = p + args.iter().map(|&a| alg.degree(a)).sum::<i64>();
        if alg.degree(out) != d {
            return Err(Error::NonHomogeneous(format!("entry {k:?} is not of internal degree {p}")));
        }
        c.add_to(out, &args, scalar(val)?);
    }
    Ok(c)
}

pub fn multi_cochain_json<F: Field>(h: &Hochschild<F>, m: &MultiCochain<F>) -> Value {
    Value::Array(m.components().map(|c| cochain_json(h, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{sweedler4, trunc_poly};
    use crate::module_algebra::sweedler_action;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn bialgebra_round_trip() {
        let h = sweedler4::<Q>().unwrap();
        let v = bialgebra_json(&h);
        assert_eq!(document_kind(&v).unwrap(), DocumentKind::Bialgebra);
        let back = parse_bialgebra::<Q>(&v, Path::new(".")).unwrap();
        assert_eq!(back, h);
        assert_eq!(bialgebra_json(&back), v);
    }

    #[test]
    fn catalog_references() {
        let v = Value::String("catalog:taft(3,1)".into());
        assert_eq!(document_kind(&v).unwrap(), DocumentKind::Bialgebra);
        let h = parse_bialgebra::<Fp<7>>(&v, Path::new(".")).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(parse_bialgebra::<Q>(&Value::String("catalog:trunc_poly(2)".into()), Path::new(".")).is_err());
    }

    #[test]
    fn action_round_trip() {
        let act = sweedler_action::<Q>().unwrap();
        let v = action_json(&act);
        assert_eq!(parse_action::<Q>(&v, Path::new(".")).unwrap(), act);
    }

    #[test]
    fn cochain_round_trip_and_parent_check() {
        let h = Hochschild::new(trunc_poly::<Q>(2).unwrap()).unwrap();
        let mut c = h.zero(0, 2).unwrap();
        c.add_to(0, &[1, 1], Q::from_i64(-1));
        let v = cochain_json(&h, &c);
        assert_eq!(v["coeffs"]["1<-y,y"], "-1");
        assert_eq!(parse_cochain(&h, &v).unwrap(), c);
        let other = Hochschild::new(crate::algebra::catalog::matrix_algebra::<Q>(2).unwrap()).unwrap();
        assert!(matches!(parse_cochain(&other, &v), Err(Error::ParentMismatch(_))));
    }

    #[test]
    fn scalars_reduce_into_prime_fields() {
        let v = json!({"name": "k", "basis": ["1"], "unit": {"1": "8/1"}, "mult": {"1*1": {"1": "1"}}});
        let a = parse_algebra::<Fp<7>>(&v, Path::new(".")).unwrap();
        assert_eq!(a.unit(), &Elem::basis(0));
        let bad = json!({"name": "k", "basis": ["1"], "unit": {"1": "1/7"}});
        assert!(parse_algebra::<Fp<7>>(&bad, Path::new(".")).is_err());
    }
}
