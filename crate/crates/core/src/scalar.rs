//! Exact scalar fields.
//!
//! Every structure in this crate is generic over a [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Rational`]) and prime fields
//! [`Fp<P>`] with the modulus fixed at compile time. Runtime selection of a
//! field (from a file or a command-line flag) goes through [`with_field!`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
pub use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rationals, always stored in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    MixedFields { expected: FieldSpec, found: FieldSpec },
    #[error("unsupported field {0}")]
    UnsupportedField(String),
    #[error("no primitive {order}-th root of unity in {field}")]
    NoRootOfUnity { order: u64, field: FieldSpec },
}

/// Runtime description of a ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `Q`, `rational`, `F7`, `GF(7)`, `7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if lower == "q" || lower == "rational" || lower == "qq" {
            return Ok(FieldSpec::Rational);
        }
        let digits = lower
            .trim_start_matches("gf(")
            .trim_start_matches("f_")
            .trim_start_matches('f')
            .trim_end_matches(')');
        let p: u64 = digits
            .parse()
            .map_err(|_| ScalarError::UnsupportedField(t.to_string()))?;
        if !is_prime(p) {
            return Err(ScalarError::UnsupportedField(t.to_string()));
        }
        Ok(FieldSpec::Prime { p })
    }
}

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field usable as a coefficient ring.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn field_spec() -> FieldSpec;

    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Result<Self, ScalarError>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Parses the scalar text format `-?digits(/digits)?`.
    fn parse_scalar(text: &str) -> Result<Self, ScalarError>;

    /// The primitive `order`-th root of unity selected by `index`
    /// (`index` must be coprime to `order`).
    fn root_of_unity(order: u64, index: u64) -> Result<Self, ScalarError>;

    fn characteristic() -> u64 {
        Self::field_spec().characteristic()
    }

    /// `(-1)^odd` as a field element.
    fn sign(odd: bool) -> Self {
        if odd {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

/// Splits `-?digits(/digits)?` into integer numerator and denominator.
fn split_fraction(text: &str) -> Result<(BigInt, BigInt), ScalarError> {
    let t = text.trim();
    let err = || ScalarError::Parse(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let valid_int = |s: &str, allow_sign: bool| {
        let body = if allow_sign { s.strip_prefix('-').unwrap_or(s) } else { s };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = match den {
        Some(d) if valid_int(d, false) => d.parse().map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    Ok((n, d))
}

impl Field for Rational {
    fn field_spec() -> FieldSpec {
        FieldSpec::Rational
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarError> {
        let (n, d) = split_fraction(text)?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    }

    fn root_of_unity(order: u64, index: u64) -> Result<Self, ScalarError> {
        match order {
            1 => Ok(Self::one()),
            2 if index % 2 == 1 => Ok(-Self::one()),
            _ => Err(ScalarError::NoRootOfUnity { order, field: FieldSpec::Rational }),
        }
    }
}

/// Residues modulo the prime `P`, kept in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root() -> Self {
        let n = P - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (1..P)
            .map(Self::new)
            .find(|g| factors.iter().all(|q| g.pow(n / q).0 != 1))
            .expect("multiplicative group of a prime field is cyclic")
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn field_spec() -> FieldSpec {
        FieldSpec::Prime { p: P }
    }

    fn from_i64(n: i64) -> Self {
        Self::new(n.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0 == 0 {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.pow(P - 2))
        }
    }

    fn parse_scalar(text: &str) -> Result<Self, ScalarError> {
        let (n, d) = split_fraction(text)?;
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| Self::new(x.mod_floor(&p).to_u64().expect("residue fits in u64"));
        let den = reduce(&d);
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(reduce(&n) * den.inv()?)
    }

    fn root_of_unity(order: u64, index: u64) -> Result<Self, ScalarError> {
        if order == 0 || !(P - 1).is_multiple_of(order) || index.gcd(&order) != 1 {
            return Err(ScalarError::NoRootOfUnity { order, field: Self::field_spec() });
        }
        Ok(Self::primitive_root().pow((P - 1) / order).pow(index % order))
    }
}

/// Renders a rational in canonical text form (`n` or `n/d`).
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Primes for which [`with_field!`] instantiates a prime field.
pub const SUPPORTED_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 257, 32003, 65521,
];

/// Runs `$body` with the type alias `$F` bound to the field named by `$spec`.
///
/// Evaluates to `Result<T, ScalarError>`, failing with `UnsupportedField` for
/// primes outside [`SUPPORTED_PRIMES`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {{
        #[allow(unused_imports)]
        use $crate::scalar::{Fp, Rational};
        match $spec {
            $crate::scalar::FieldSpec::Rational => {
                type $F = Rational;
                Ok($body)
            }
            $crate::scalar::FieldSpec::Prime { p } => $crate::with_field!(@primes p, $F, $body;
                2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97
                101 103 107 109 113 127 257 32003 65521),
        }
    }};
    (@primes $p:ident, $F:ident, $body:expr; $($q:literal)*) => {
        match $p {
            $( $q => { type $F = Fp<$q>; Ok($body) } )*
            other => Err($crate::scalar::ScalarError::UnsupportedField(format!("F{}", other))),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn rational_examples() {
        let a = Rational::parse_scalar("1/3").unwrap();
        let b = Rational::parse_scalar("1/6").unwrap();
        assert_eq!(a + b, Rational::parse_scalar("1/2").unwrap());
        assert_eq!(-Rational::zero(), Rational::zero());
        assert_eq!(format_rational(&Rational::parse_scalar("-2/3").unwrap()), "-2/3");
        assert_eq!(format_rational(&Rational::parse_scalar("6/4").unwrap()), "3/2");
    }

    #[test]
    fn prime_examples() {
        assert_eq!(F7::from_i64(3).inv().unwrap(), F7::new(5));
        assert_eq!(F7::parse_scalar("9").unwrap(), F7::new(2));
        assert_eq!(F7::parse_scalar("-1").unwrap(), F7::new(6));
        assert_eq!(F7::parse_scalar("1/3").unwrap(), F7::new(5));
        assert_eq!(F7::parse_scalar("1/7"), Err(ScalarError::DivisionByZero));
        assert_eq!(F7::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(-F7::zero(), F7::zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "-", "1/", "/2", "1.5", "a", "1/-2", "--1"] {
            assert!(matches!(Rational::parse_scalar(bad), Err(ScalarError::Parse(_))), "{bad}");
        }
        assert_eq!(Rational::parse_scalar("3/0"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        let xi = F7::root_of_unity(3, 1).unwrap();
        assert_ne!(xi, F7::one());
        assert_eq!(xi.pow(3), F7::one());
        assert!(F7::root_of_unity(4, 1).is_err());
        assert!(F7::root_of_unity(3, 3).is_err());
        assert_eq!(Rational::root_of_unity(2, 1).unwrap(), -Rational::one());
        assert!(Rational::root_of_unity(3, 1).is_err());
        assert_eq!(Fp::<7>::primitive_root(), F7::new(3));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("F7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 7 });
        assert_eq!("GF(11)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 11 });
        assert!("F8".parse::<FieldSpec>().is_err());
        let json = serde_json::to_string(&FieldSpec::Prime { p: 5 }).unwrap();
        assert_eq!(json, r#"{"kind":"prime","p":5}"#);
    }

    #[test]
    fn dispatch() {
        let spec = FieldSpec::Prime { p: 11 };
        let r = with_field!(spec, F => F::from_i64(-1).to_string()).unwrap();
        assert_eq!(r, "10");
        let r = with_field!(FieldSpec::Prime { p: 1009 }, F => F::from_i64(1).to_string());
        assert!(r.is_err());
    }
}
