//! Exact field scalars: arbitrary-precision rationals and prime fields F_p.
//!
//! Every value carries its field so cross-field arithmetic is caught at the
//! point of use. Arithmetic is exact; there is no floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Field descriptor shared by all scalars of one algebra or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Rational,
    /// The prime field F_p.
    Fp(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: m, p: *p }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Fp(p) => *p,
        }
    }

    /// Parse a scalar in this field from its string form ("a/b" or "a").
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rational => {
                let rat = if let Some((num, den)) = s.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
                    BigRational::from(n)
                };
                Ok(Scalar::Rat(rat))
            }
            FieldSpec::Fp(p) => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime-field value {s:?}")))?;
                Ok(self.from_i64(n))
            }
        }
    }

    pub fn parse_field(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix("mod ") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus {rest:?}")))?;
            if p < 2 || p >= (1 << 31) || !is_prime(p) {
                return Err(Error::Parse(format!("modulus {p} is not a small prime")));
            }
            return Ok(FieldSpec::Fp(p));
        }
        Err(Error::Parse(format!(
            "unknown field {s:?} (expected \"rational\" or \"mod p\")"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Fp(p) => write!(f, "mod {p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element: a reduced rational or a canonical residue mod p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn check(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "mixed-field arithmetic: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; panics on zero (callers pivot on nonzero).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    v: mod_pow(*v, p - 2, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

/// Exact sign for rationals; prime-field scalars have no sign.
pub fn rat_is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rat(r) if r.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip_and_reduction() {
        let q = FieldSpec::Rational;
        let a = q.parse_scalar("6/4").unwrap();
        assert_eq!(a.to_string(), "3/2");
        let b = q.parse_scalar("-3").unwrap();
        assert_eq!(a.mul(&b).to_string(), "-9/2");
        assert_eq!(a.sub(&a), q.zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::Fp(7);
        let a = f7.from_i64(-3);
        assert_eq!(a.to_string(), "4");
        assert_eq!(a.mul(&a).to_string(), "2");
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn field_parsing() {
        assert_eq!(
            FieldSpec::parse_field("mod 7").unwrap(),
            FieldSpec::Fp(7)
        );
        assert!(FieldSpec::parse_field("mod 6").is_err());
        assert_eq!(
            FieldSpec::parse_field("rational").unwrap(),
            FieldSpec::Rational
        );
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_field_rejected() {
        let a = FieldSpec::Rational.one();
        let b = FieldSpec::Fp(5).one();
        let _ = a.add(&b);
    }
}
