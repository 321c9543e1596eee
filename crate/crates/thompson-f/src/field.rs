//! Coefficients: exact rationals (the default) or a prime field `F_p` with
//! `p < 2^31`, selected at runtime by a [`FieldTag`].

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl FieldTag {
    /// Validates a prime-field tag: p must be an odd-or-2 prime below 2^31.
    pub fn prime(p: u32) -> Result<FieldTag> {
        if p < 2 || p >= (1 << 31) {
            return Err(Error::InvalidConfig(format!(
                "prime field modulus must satisfy 2 <= p < 2^31, got {p}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidConfig(format!("{p} is not prime")));
        }
        Ok(FieldTag::Prime(p))
    }

    pub fn name(&self) -> String {
        match self {
            FieldTag::Rational => "Q".to_string(),
            FieldTag::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element tagged with the field it lives in. Arithmetic between
/// elements of different fields is a programming error and panics; callers
/// combining values of foreign origin must check tags first (the parser and
/// CLI do, surfacing `FieldMismatch`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Prime { value: u64, modulus: u32 },
}

impl FieldElem {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElem::Rational(_) => FieldTag::Rational,
            FieldElem::Prime { modulus, .. } => FieldTag::Prime(*modulus),
        }
    }

    pub fn zero(tag: FieldTag) -> FieldElem {
        FieldElem::integer(tag, 0)
    }

    pub fn one(tag: FieldTag) -> FieldElem {
        FieldElem::integer(tag, 1)
    }

    pub fn integer(tag: FieldTag, n: i64) -> FieldElem {
        match tag {
            FieldTag::Rational => FieldElem::Rational(BigRational::from(BigInt::from(n))),
            FieldTag::Prime(p) => {
                let m = p as i64;
                FieldElem::Prime {
                    value: n.rem_euclid(m) as u64,
                    modulus: p,
                }
            }
        }
    }

    /// num/den as a field element; den must be nonzero and invertible.
    pub fn fraction(tag: FieldTag, num: i64, den: i64) -> Result<FieldElem> {
        if den == 0 {
            return Err(Error::InvalidConfig("zero denominator".into()));
        }
        let n = FieldElem::integer(tag, num);
        let d = FieldElem::integer(tag, den);
        let inv = d.inverse()?;
        Ok(&n * &inv)
    }

    /// Maps an exact rational into the field; in `F_p` the denominator must
    /// be invertible mod p.
    pub fn from_rational(tag: FieldTag, r: &BigRational) -> Result<FieldElem> {
        match tag {
            FieldTag::Rational => Ok(FieldElem::Rational(r.clone())),
            FieldTag::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    u64::try_from(((x % &m) + &m) % &m).expect("residue fits in u64")
                };
                let num = FieldElem::Prime { value: reduce(r.numer()), modulus: p };
                let den = FieldElem::Prime { value: reduce(r.denom()), modulus: p };
                Ok(&num * &den.inverse()?)
            }
        }
    }

    /// Re-expresses this element in another field. Rationals reduce into
    /// `F_p` (the denominator must stay invertible mod p); prime-field values
    /// lift to rationals via their canonical representative `0 <= v < p`.
    /// Transport between two distinct prime fields is rejected.
    pub fn map_field(&self, tag: FieldTag) -> Result<FieldElem> {
        if self.tag() == tag {
            return Ok(self.clone());
        }
        match (self, tag) {
            (FieldElem::Rational(r), FieldTag::Prime(_)) => FieldElem::from_rational(tag, r),
            (FieldElem::Prime { value, .. }, FieldTag::Rational) => Ok(FieldElem::Rational(
                BigRational::from(BigInt::from(*value)),
            )),
            _ => Err(Error::FieldMismatch(
                "cannot transport between distinct prime fields".into(),
            )),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::InvalidConfig("division by zero".into()));
        }
        match self {
            FieldElem::Rational(r) => Ok(FieldElem::Rational(r.recip())),
            FieldElem::Prime { value, modulus } => {
                let p = *modulus as u64;
                Ok(FieldElem::Prime {
                    value: mod_pow(*value, p - 2, p),
                    modulus: *modulus,
                })
            }
        }
    }

    /// True for rationals with negative sign; prime-field elements have no sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_negative(),
            FieldElem::Prime { .. } => false,
        }
    }

    pub fn abs(&self) -> FieldElem {
        match self {
            FieldElem::Rational(r) => FieldElem::Rational(r.abs()),
            p @ FieldElem::Prime { .. } => p.clone(),
        }
    }

    fn check_same(&self, other: &FieldElem) {
        assert_eq!(
            self.tag(),
            other.tag(),
            "field elements from different fields combined; validate tags at the boundary"
        );
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (
                FieldElem::Prime { value: a, modulus },
                FieldElem::Prime { value: b, .. },
            ) => FieldElem::Prime {
                value: (a + b) % (*modulus as u64),
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (
                FieldElem::Prime { value: a, modulus },
                FieldElem::Prime { value: b, .. },
            ) => FieldElem::Prime {
                value: a * b % (*modulus as u64),
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Prime { value, modulus } => FieldElem::Prime {
                value: if *value == 0 {
                    0
                } else {
                    *modulus as u64 - value
                },
                modulus: *modulus,
            },
        }
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
