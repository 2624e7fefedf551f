//! Exact ground fields: prime fields `F_p` and the rationals.
//!
//! Elements are plain [`Scalar`] values; every arithmetic operation goes
//! through the owning [`Field`], which knows the modulus. Nothing in the
//! crate ever touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Prime { p: u64 },
    Rational,
}

/// A field element. Prime-field values are always kept reduced in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime { p })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Prime { p } if !is_prime(p) => {
                Err(Error::InvalidField(format!("{p} is not prime")))
            }
            _ => Ok(()),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match *self {
            Field::Prime { p } => Some(p),
            Field::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime { .. } => Scalar::Mod(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime { .. } => Scalar::Mod(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Prime { p } => Scalar::Mod(v.rem_euclid(p as i64) as u64),
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// The `i`-th element in a fixed enumeration of a prime field.
    pub fn element(&self, i: u64) -> Scalar {
        match *self {
            Field::Prime { p } => Scalar::Mod(i % p),
            Field::Rational => self.from_i64(i as i64),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime { p }, Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => mixed(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime { p }, Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => mixed(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime { p }, Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => mixed(),
        }
    }

    /// `a + b * c`, the inner step of every elimination loop.
    pub fn mul_add(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        match (self, a, b, c) {
            (Field::Prime { p }, Scalar::Mod(x), Scalar::Mod(y), Scalar::Mod(z)) => Scalar::Mod(
                ((*x as u128 + *y as u128 * *z as u128) % *p as u128) as u64,
            ),
            _ => self.add(a, &self.mul(b, c)),
        }
    }

    /// Multiplicative inverse. Panics on zero, which is always a logic error here.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Prime { p }, Scalar::Mod(x)) => Scalar::Mod(pow_mod(*x, p - 2, *p)),
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            _ => mixed(),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Parses a decimal integer or, over the rationals, a fraction `p/q`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid field element {s:?}"));
        match *self {
            Field::Prime { p } => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let n: BigInt = num.trim().parse().map_err(|_| bad())?;
                let modulus = BigInt::from(p);
                let reduce = |v: &BigInt| -> u64 {
                    let r = ((v % &modulus) + &modulus) % &modulus;
                    u64::try_from(r).expect("reduced value fits")
                };
                let a = Scalar::Mod(reduce(&n));
                match den {
                    None => Ok(a),
                    Some(d) => {
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        let d = Scalar::Mod(reduce(&d));
                        if self.is_zero(&d) {
                            return Err(bad());
                        }
                        Ok(self.div(&a, &d))
                    }
                }
            }
            Field::Rational => {
                let r = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
                };
                Ok(Scalar::Rat(r))
            }
        }
    }

    /// Canonical decimal rendering; inverse of [`Field::parse`].
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Mod(v) => v.to_string(),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// A small "random" element for sampling; over the rationals the
    /// numerators are bounded so that sampling stays cheap.
    pub fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match *self {
            Field::Prime { p } => Scalar::Mod(rng.gen_range(0..p)),
            Field::Rational => self.from_i64(rng.gen_range(-3..=3)),
        }
    }

    pub fn sample_nonzero<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.sample(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl Scalar {
    /// Sign used only for deterministic display of rationals.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Mod(_) => false,
            Scalar::Rat(r) => r.is_negative(),
        }
    }
}

fn mixed() -> ! {
    panic!("scalar from a different field")
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(561));
        assert!(Field::prime(4).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), Scalar::Mod(2));
        assert_eq!(f.mul(&a, &b), Scalar::Mod(2));
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        assert_eq!(f.parse("-1").unwrap(), Scalar::Mod(4));
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Mod(3));
    }

    #[test]
    fn rational_parse_format() {
        let q = Field::Rational;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }
}
