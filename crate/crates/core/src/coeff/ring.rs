use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground ring k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
    Rationals,
}

impl RingSpec {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("Z/{m} needs m >= 2")));
        }
        Ok(RingSpec::IntegersMod(m))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            RingSpec::Integers => Scalar::Integer(v.clone()),
            RingSpec::IntegersMod(m) => {
                let r = v.mod_floor(&BigInt::from(m));
                Scalar::Residue {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: m,
                }
            }
            RingSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
        }
    }

    /// Parses a decimal integer or a fraction `p/q`. Fractions are accepted in
    /// Z/m when q is invertible, and in Z only when q divides p.
    pub fn parse(&self, input: &str) -> Result<Scalar> {
        let err = || Error::ParseScalar {
            input: input.to_string(),
            ring: *self,
        };
        let s = input.trim();
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (
                BigInt::from_str(p.trim()).map_err(|_| err())?,
                BigInt::from_str(q.trim()).map_err(|_| err())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| err())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(err());
        }
        match self {
            RingSpec::Integers => {
                let (q, r) = num.div_rem(&den);
                if !r.is_zero() {
                    return Err(err());
                }
                Ok(Scalar::Integer(q))
            }
            RingSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            RingSpec::IntegersMod(_) => {
                let d = self.from_bigint(&den).invert().map_err(|_| err())?;
                Ok(&self.from_bigint(&num) * &d)
            }
        }
    }

    /// True for Q and for Z/p with p prime.
    pub fn is_field(&self) -> bool {
        match *self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::IntegersMod(m) => is_prime(m),
        }
    }

    /// The characteristic (0 for Z and Q).
    pub fn characteristic(&self) -> u64 {
        match *self {
            RingSpec::IntegersMod(m) => m,
            _ => 0,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{m}"),
            RingSpec::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `z`, `q`, `z<m>` and `z/<m>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "z" => Ok(RingSpec::Integers),
            "q" => Ok(RingSpec::Rationals),
            _ => {
                let digits = lower
                    .strip_prefix('z')
                    .map(|r| r.trim_start_matches('/'))
                    .ok_or_else(|| Error::InvalidRing(s.to_string()))?;
                let m: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidRing(s.to_string()))?;
                RingSpec::integers_mod(m)
            }
        }
    }
}

/// An exact element of Z, Z/m or Q.
///
/// Rationals are kept in lowest terms with positive denominator and residues
/// in `[0, m)`. Binary operations on scalars from different rings panic; every
/// public entry point that mixes scalars checks rings first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Integer(BigInt),
    Residue { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn ring(&self) -> RingSpec {
        match self {
            Scalar::Integer(_) => RingSpec::Integers,
            Scalar::Residue { modulus, .. } => RingSpec::IntegersMod(*modulus),
            Scalar::Rational(_) => RingSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Integer(v) => v.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
            Scalar::Rational(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Integer(v) => v.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
            Scalar::Rational(v) => v.is_one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.invert().is_ok()
    }

    pub fn invert(&self) -> Result<Scalar> {
        let not_inv = || Error::NotInvertible {
            value: self.to_string(),
            ring: self.ring(),
        };
        match self {
            Scalar::Integer(v) => {
                if v.abs().is_one() {
                    Ok(self.clone())
                } else {
                    Err(not_inv())
                }
            }
            Scalar::Residue { value, modulus } => {
                let e = BigInt::from(*value).extended_gcd(&BigInt::from(*modulus));
                if !e.gcd.is_one() {
                    return Err(not_inv());
                }
                Ok(RingSpec::IntegersMod(*modulus).from_bigint(&e.x))
            }
            Scalar::Rational(v) => {
                if v.is_zero() {
                    Err(not_inv())
                } else {
                    Ok(Scalar::Rational(v.recip()))
                }
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// An integer representative: the value in Z, the residue in `[0, m)`, or
    /// the numerator of a rational with denominator 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Integer(v) => Some(v.clone()),
            Scalar::Residue { value, .. } => Some(BigInt::from(*value)),
            Scalar::Rational(v) => v.is_integer().then(|| v.to_integer()),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.ring() != other.ring() {
            panic!("scalar ring mismatch: {} vs {}", self.ring(), other.ring());
        }
    }
}

/// Multiplicative inverse of `s` in `ring`.
pub fn scalar_invert(s: &Scalar, ring: RingSpec) -> Result<Scalar> {
    if s.ring() != ring {
        return Err(Error::RingMismatch(s.ring(), ring));
    }
    s.invert()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Integer(v) => write!(f, "{v}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Rational(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Rational(a) => Scalar::Rational(-a),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
