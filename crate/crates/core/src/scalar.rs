//! Exact scalars over ℚ or a prime field.
//!
//! Rationals are the default. Prime-field values carry their modulus; a
//! rational meeting a prime-field value is pushed through ℤ_(p) → F_p, so
//! integer constants such as `0`, `1`, `-1` work in either field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Field descriptor, as written in files: `Q` or `F<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn parse(s: &str) -> Result<Field, Error> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix('F')
            .and_then(|r| r.parse::<u64>().ok())
            .ok_or_else(|| Error::parse(0, "field", format!("unknown field `{s}`")))?;
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::parse(0, "field", format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::from(n),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Moves a scalar into this field.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar, Error> {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => Ok(s.clone()),
            (Field::Rational, Scalar::Prime { .. }) => {
                Err(Error::FieldMismatch("cannot lift a prime-field value to Q".into()))
            }
            (Field::Prime(p), Scalar::Rational(r)) => rational_mod(r, p),
            (Field::Prime(p), Scalar::Prime { modulus, .. }) if *modulus == p => Ok(s.clone()),
            (Field::Prime(_), Scalar::Prime { .. }) => {
                Err(Error::FieldMismatch("prime fields differ".into()))
            }
        }
    }

    pub fn parse_scalar(self, text: &str) -> Result<Scalar, Error> {
        let r = parse_rational(text)?;
        self.coerce(&Scalar::Rational(r))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::parse(0, "scalar", format!("bad scalar `{text}`"));
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn rational_mod(r: &BigRational, p: u64) -> Result<Scalar, Error> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64().unwrap();
    let d = r.denom().mod_floor(&pb).to_u64().unwrap();
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Scalar::Prime {
        value: mul_mod(n, inv_mod(d, p), p),
        modulus: p,
    })
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(BigRational::one())
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &other.inv()?)
    }

    fn binop(
        a: &Scalar,
        b: &Scalar,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        fp: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(rat(x, y)),
            (Scalar::Prime { value: x, modulus: p }, Scalar::Prime { value: y, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Prime { value: fp(*x, *y, *p), modulus: *p }
            }
            (Scalar::Prime { value: x, modulus: p }, Scalar::Rational(r)) => {
                let y = lift(r, *p);
                Scalar::Prime { value: fp(*x, y, *p), modulus: *p }
            }
            (Scalar::Rational(r), Scalar::Prime { value: y, modulus: p }) => {
                let x = lift(r, *p);
                Scalar::Prime { value: fp(x, *y, *p), modulus: *p }
            }
        }
    }
}

fn lift(r: &BigRational, p: u64) -> u64 {
    match rational_mod(r, p) {
        Ok(Scalar::Prime { value, .. }) => value,
        _ => panic!("rational {r} has no image in F_{p}"),
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
            _ => (self - other).is_zero(),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for canonical output; not a field order on F_p.
impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
            (Scalar::Prime { value: x, .. }, Scalar::Prime { value: y, .. }) => x.cmp(y),
            (Scalar::Rational(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, |x, y| x + y, |x, y, p| (x + y) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, |x, y| x - y, |x, y, p| (x + p - y) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Rational(x), Scalar::Rational(y)) = (self, rhs) {
            if x.is_zero() || y.is_zero() {
                return Scalar::zero();
            }
            if x.is_one() {
                return rhs.clone();
            }
            if y.is_one() {
                return self.clone();
            }
        }
        Scalar::binop(self, rhs, |x, y| x * y, mul_mod)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        match (&mut *self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => *x += y,
            _ => *self = &*self + rhs,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Absolute value of a rational; identity on prime-field values.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            other => other.clone(),
        }
    }
}
