//! Named example (bi)algebras.

use std::fmt::{self, Display};
use std::str::FromStr;

use super::{Algebra, Bialgebra, Elem, Elem2};
use crate::error::{Error, Result};
use crate::linalg::tensor;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Sweedler4,
    /// Taft algebra of order `m` with `ξ` the primitive root selected by `index`.
    Taft { m: u64, index: u64 },
    GroupAlgebra { n: usize },
    DualGroupAlgebra { n: usize },
    TruncPoly { m: usize },
    MatrixAlgebra { n: usize },
    SuperLine,
}

impl CatalogId {
    pub const BIALGEBRAS: &'static [&'static str] =
        &["sweedler4", "taft(m,k)", "group_algebra(n)", "dual_group_algebra(n)"];

    pub fn is_bialgebra(&self) -> bool {
        matches!(
            self,
            CatalogId::Sweedler4 | CatalogId::Taft { .. } | CatalogId::GroupAlgebra { .. } | CatalogId::DualGroupAlgebra { .. }
        )
    }
}

impl Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Sweedler4 => write!(f, "sweedler4"),
            CatalogId::Taft { m, index } => write!(f, "taft({m},{index})"),
            CatalogId::GroupAlgebra { n } => write!(f, "group_algebra({n})"),
            CatalogId::DualGroupAlgebra { n } => write!(f, "dual_group_algebra({n})"),
            CatalogId::TruncPoly { m } => write!(f, "trunc_poly({m})"),
            CatalogId::MatrixAlgebra { n } => write!(f, "matrix_algebra({n})"),
            CatalogId::SuperLine => write!(f, "super_line"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    /// Accepts `taft(3,1)`, `taft:3:1`, `group_algebra(Z_3)` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedParams(format!("unknown catalog entry {s:?}"));
        let s = s.trim();
        let (name, args) = match s.find(['(', ':']) {
            Some(pos) => {
                let rest = &s[pos..];
                let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(&rest[1..]);
                (&s[..pos], inner.split([',', ':']).map(str::trim).collect::<Vec<_>>())
            }
            None => (s, Vec::new()),
        };
        let nums: Vec<u64> = args
            .iter()
            .map(|a| a.trim_start_matches("Z_").trim_start_matches('Z').parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let one = |default: Option<u64>| match nums.as_slice() {
            [n] => Ok(*n),
            [] => default.ok_or_else(bad),
            _ => Err(bad()),
        };
        Ok(match name {
            "sweedler4" | "sweedler" | "h4" if nums.is_empty() => CatalogId::Sweedler4,
            "taft" => match nums.as_slice() {
                [m] => CatalogId::Taft { m: *m, index: 1 },
                [m, k] => CatalogId::Taft { m: *m, index: *k },
                _ => return Err(bad()),
            },
            "group_algebra" => CatalogId::GroupAlgebra { n: one(None)? as usize },
            "dual_group_algebra" => CatalogId::DualGroupAlgebra { n: one(None)? as usize },
            "trunc_poly" => CatalogId::TruncPoly { m: one(Some(2))? as usize },
            "matrix_algebra" => CatalogId::MatrixAlgebra { n: one(Some(2))? as usize },
            "super_line" if nums.is_empty() => CatalogId::SuperLine,
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Example<F: Field> {
    Algebra(Algebra<F>),
    Bialgebra(Bialgebra<F>),
}

impl<F: Field> Example<F> {
    pub fn algebra(&self) -> &Algebra<F> {
        match self {
            Example::Algebra(a) => a,
            Example::Bialgebra(b) => b.algebra(),
        }
    }

    pub fn into_algebra(self) -> Algebra<F> {
        match self {
            Example::Algebra(a) => a,
            Example::Bialgebra(b) => b.into_algebra(),
        }
    }

    pub fn into_bialgebra(self) -> Result<Bialgebra<F>> {
        match self {
            Example::Bialgebra(b) => Ok(b),
            Example::Algebra(a) => Err(Error::UnsupportedParams(format!("{} is an algebra, not a bialgebra", a.name()))),
        }
    }
}

pub fn make_example<F: Field>(id: CatalogId) -> Result<Example<F>> {
    Ok(match id {
        CatalogId::Sweedler4 => Example::Bialgebra(sweedler4()?),
        CatalogId::Taft { m, index } => Example::Bialgebra(taft(m, index)?),
        CatalogId::GroupAlgebra { n } => Example::Bialgebra(group_algebra(n)?),
        CatalogId::DualGroupAlgebra { n } => Example::Bialgebra(dual_group_algebra(n)?),
        CatalogId::TruncPoly { m } => Example::Algebra(trunc_poly(m)?),
        CatalogId::MatrixAlgebra { n } => Example::Algebra(matrix_algebra(n)?),
        CatalogId::SuperLine => Example::Algebra(super_line()?),
    })
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn nonempty(s: String) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// `H4 = k⟨g, x⟩ / (g² = 1, x² = 0, gx = −xg)` on the basis `1, g, x, xg`.
pub fn sweedler4<F: Field>() -> Result<Bialgebra<F>> {
    if F::characteristic() == 2 {
        return Err(Error::UnsupportedParams("sweedler4 needs characteristic different from 2".into()));
    }
    let basis: Vec<String> = ["1", "g", "x", "xg"].iter().map(|s| s.to_string()).collect();
    let (one, g, x, xg) = (0, 1, 2, 3);
    let e = |i: usize| Elem::<F>::basis(i);
    let neg = |i: usize| Elem::<F>::term(i, -F::one());
    let mut products = Vec::new();
    for i in 0..4 {
        products.push(((one, i), e(i)));
        if i != one {
            products.push(((i, one), e(i)));
        }
    }
    products.extend([
        ((g, g), e(one)),
        ((g, x), neg(xg)),
        ((g, xg), neg(x)),
        ((x, g), e(xg)),
        ((xg, g), e(x)),
    ]);
    let algebra = Algebra::new("sweedler4", basis, vec![0; 4], e(one), products, None)?;
    let comult = vec![
        Elem2::basis((one, one)),
        Elem2::basis((g, g)),
        Elem2::from_terms([((x, one), F::one()), ((g, x), F::one())]),
        Elem2::from_terms([((xg, g), F::one()), ((one, xg), F::one())]),
    ];
    let counit = vec![F::one(), F::one(), F::zero(), F::zero()];
    Bialgebra::new(algebra, comult, counit)
}

/// Taft algebra `T_m`: `g^m = 1`, `x^m = 0`, `gx = ξ xg`, `Δg = g⊗g`, `Δx = x⊗g + 1⊗x`.
/// Basis `g^i x^j` at index `i + m j`.
pub fn taft<F: Field>(m: u64, index: u64) -> Result<Bialgebra<F>> {
    if m < 2 {
        return Err(Error::UnsupportedParams(format!("taft needs m >= 2, got {m}")));
    }
    let xi = F::root_of_unity(m, index).map_err(|e| Error::UnsupportedParams(format!("taft({m},{index}): {e}")))?;
    let m = m as usize;
    if m * m > 1024 {
        return Err(Error::UnsupportedParams(format!("taft({m}) is too large")));
    }
    let idx = |i: usize, j: usize| i + m * j;
    let xi_inv = xi.inv()?;
    let mut xi_pow = vec![F::one()];
    for _ in 1..m {
        let next = xi_pow.last().unwrap().clone() * xi_inv.clone();
        xi_pow.push(next);
    }
    let mut basis = vec![String::new(); m * m];
    for i in 0..m {
        for j in 0..m {
            basis[idx(i, j)] = nonempty(power_label("g", i) + &power_label("x", j));
        }
    }
    let mut products = Vec::new();
    for (i, j) in (0..m).flat_map(|i| (0..m).map(move |j| (i, j))) {
        for (k, l) in (0..m).flat_map(|k| (0..m).map(move |l| (k, l))) {
            if j + l < m {
                let c = xi_pow[(j * k) % m].clone();
                products.push(((idx(i, j), idx(k, l)), Elem::term(idx((i + k) % m, j + l), c)));
            }
        }
    }
    let name = format!("taft({m},{index})");
    let algebra = Algebra::new(name, basis, vec![0; m * m], Elem::basis(0), products, None)?;
    let (g, x) = (idx(1, 0), idx(0, 1));
    let dg = Elem2::basis((g, g));
    let dx = Elem2::from_terms([((x, g), F::one()), ((0, x), F::one())]);
    let mut comult = vec![Elem2::new(); m * m];
    let mut gpow = Elem2::basis((0, 0));
    for i in 0..m {
        let mut cur = gpow.clone();
        for j in 0..m {
            comult[idx(i, j)] = cur.clone();
            cur = algebra.tensor_mul(&cur, &dx);
        }
        gpow = algebra.tensor_mul(&gpow, &dg);
    }
    let counit = (0..m * m).map(|k| if k < m { F::one() } else { F::zero() }).collect();
    Bialgebra::new(algebra, comult, counit)
}

/// Group algebra of `Z_n` on the basis `1, g, …, g^{n−1}`.
pub fn group_algebra<F: Field>(n: usize) -> Result<Bialgebra<F>> {
    if n == 0 || n > 64 {
        return Err(Error::UnsupportedParams(format!("group_algebra needs 1 <= n <= 64, got {n}")));
    }
    let basis = (0..n).map(|i| nonempty(power_label("g", i))).collect();
    let products = (0..n).flat_map(|i| (0..n).map(move |j| ((i, j), Elem::basis((i + j) % n))));
    let algebra = Algebra::new(format!("group_algebra({n})"), basis, vec![0; n], Elem::basis(0), products, None)?;
    let comult = (0..n).map(|i| Elem2::basis((i, i))).collect();
    Bialgebra::new(algebra, comult, vec![F::one(); n])
}

/// Functions on `Z_n` on the basis `1, d1, …, d{n−1}` where `dk` is the indicator of `g^k`.
pub fn dual_group_algebra<F: Field>(n: usize) -> Result<Bialgebra<F>> {
    if n == 0 || n > 64 {
        return Err(Error::UnsupportedParams(format!("dual_group_algebra needs 1 <= n <= 64, got {n}")));
    }
    let basis = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("d{i}") }).collect();
    let mut products = Vec::new();
    for i in 0..n {
        products.push(((0, i), Elem::basis(i)));
        if i > 0 {
            products.push(((i, 0), Elem::basis(i)));
            products.push(((i, i), Elem::basis(i)));
        }
    }
    let algebra =
        Algebra::new(format!("dual_group_algebra({n})"), basis, vec![0; n], Elem::basis(0), products, None)?;
    // δ_0 = 1 − Σ_{k≥1} d_k
    let delta = |a: usize| -> Elem<F> {
        if a == 0 {
            let mut v = Elem::basis(0);
            for k in 1..n {
                v.add_term(k, -F::one());
            }
            v
        } else {
            Elem::basis(a)
        }
    };
    let mut comult = vec![Elem2::basis((0, 0))];
    for k in 1..n {
        let mut v = Elem2::new();
        for a in 0..n {
            v.add_assign(&tensor(&delta(a), &delta((k + n - a) % n)));
        }
        comult.push(v);
    }
    let counit = (0..n).map(|i| if i == 0 { F::one() } else { F::zero() }).collect();
    Bialgebra::new(algebra, comult, counit)
}

/// `k[y]/y^m` on the basis `1, y, …, y^{m−1}`.
pub fn trunc_poly<F: Field>(m: usize) -> Result<Algebra<F>> {
    if m == 0 || m > 64 {
        return Err(Error::UnsupportedParams(format!("trunc_poly needs 1 <= m <= 64, got {m}")));
    }
    let basis = (0..m).map(|i| nonempty(power_label("y", i))).collect();
    let products =
        (0..m).flat_map(|i| (0..m).filter(move |j| i + j < m).map(move |j| ((i, j), Elem::basis(i + j))));
    Algebra::new(format!("trunc_poly({m})"), basis, vec![0; m], Elem::basis(0), products, None)
}

/// `M_n(k)` on matrix units, row-major.
pub fn matrix_algebra<F: Field>(n: usize) -> Result<Algebra<F>> {
    if n == 0 || n > 6 {
        return Err(Error::UnsupportedParams(format!("matrix_algebra needs 1 <= n <= 6, got {n}")));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let basis = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let mut products = Vec::new();
    for (i, j, l) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |l| (i, j, l)))) {
        products.push(((idx(i, j), idx(j, l)), Elem::basis(idx(i, l))));
    }
    let unit = Elem::from_terms((0..n).map(|i| (idx(i, i), F::one())));
    Algebra::new(format!("matrix_algebra({n})"), basis, vec![0; n * n], unit, products, None)
}

/// `k[y]/y²` with `|y| = 1`.
pub fn super_line<F: Field>() -> Result<Algebra<F>> {
    let basis = vec!["1".to_string(), "y".to_string()];
    let products = [((0, 0), Elem::basis(0)), ((0, 1), Elem::basis(1)), ((1, 0), Elem::basis(1))];
    Algebra::new("super_line", basis, vec![0, 1], Elem::basis(0), products, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    #[test]
    fn catalog_ids_parse() {
        assert_eq!("taft(3,1)".parse::<CatalogId>().unwrap(), CatalogId::Taft { m: 3, index: 1 });
        assert_eq!("taft:3:2".parse::<CatalogId>().unwrap(), CatalogId::Taft { m: 3, index: 2 });
        assert_eq!("group_algebra(Z_3)".parse::<CatalogId>().unwrap(), CatalogId::GroupAlgebra { n: 3 });
        assert_eq!("super_line".parse::<CatalogId>().unwrap(), CatalogId::SuperLine);
        assert!("nonsense".parse::<CatalogId>().is_err());
        for id in ["sweedler4", "taft(3,1)", "dual_group_algebra(4)", "matrix_algebra(2)"] {
            assert_eq!(id.parse::<CatalogId>().unwrap().to_string(), id);
        }
    }

    #[test]
    fn sweedler_labels_and_grouplikes() {
        let h = sweedler4::<Rational>().unwrap();
        assert_eq!(h.basis(), ["1", "g", "x", "xg"]);
        let grouplikes: Vec<_> = (0..4).filter(|&i| h.is_grouplike(i)).map(|i| h.label(i)).collect();
        assert_eq!(grouplikes, ["1", "g"]);
        assert!(sweedler4::<Fp<2>>().is_err());
    }

    #[test]
    fn taft_needs_roots() {
        assert!(taft::<Rational>(3, 1).is_err());
        assert!(taft::<Fp<7>>(3, 1).is_ok());
        assert!(taft::<Fp<7>>(4, 1).is_err());
        assert!(taft::<Fp<7>>(3, 3).is_err());
    }
}
