//! Exact field elements: rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The field every value of one computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p); rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::zero()),
            Field::Prime(p) => Scalar::F(Residue { v: 0, p }),
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_i64(n)),
            Field::Prime(p) => Scalar::F(Residue::from_i64(n, p)),
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.int(den).inv()?;
        Some(self.int(num) * d)
    }

    /// Parses a coefficient: `p/q` or an integer over the rationals, an
    /// integer (possibly negative) or `p/q` over GF(p).
    pub fn parse(self, s: &str) -> Result<Scalar, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::BadScalar(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let parse_int = |t: &str| -> Result<BigInt, LinalgError> {
            if t.is_empty() || t.len() > 4096 {
                return Err(bad());
            }
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let n = parse_int(num)?;
        let d = match den {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        match self {
            Field::Rational => {
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(Rational::from_big(BigRational::new(n, d))))
            }
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&pm).to_u64().unwrap();
                let num = Residue { v: reduce(&n), p };
                let den = Residue { v: reduce(&d), p };
                let inv = den.inv().ok_or_else(bad)?;
                Ok(Scalar::F(num * inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arbitrary-precision rational in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// the representation is canonical so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(0, _), _) => o.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Rational::zero(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => Rational::from_big(-r.clone()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Rational::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Rational::from_big(r.recip())),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Residue class modulo a prime `p < 2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Residue {
    v: u64,
    p: u64,
}

impl Residue {
    fn from_i64(n: i64, p: u64) -> Self {
        Residue { v: (n as i128).rem_euclid(p as i128) as u64, p }
    }

    pub fn value(self) -> u64 {
        self.v
    }

    fn inv(self) -> Option<Residue> {
        if self.v == 0 {
            return None;
        }
        let (mut base, mut exp, mut acc) = (self.v, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(Residue { v: acc, p: self.p })
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, o: Residue) -> Residue {
        Residue { v: self.v * o.v % self.p, p: self.p }
    }
}

/// A field element tagged with its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    F(Residue),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::F(r) => Field::Prime(r.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::F(r) => r.v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.0 == Repr::Small(1, 1),
            Scalar::F(r) => r.v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) => q.inv().map(Scalar::Q),
            Scalar::F(r) => r.inv().map(Scalar::F),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * &base;
        }
        Some(acc)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::F(_) => None,
        }
    }

    pub fn abs_is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => matches!(q.0, Repr::Small(n, 1) if n.abs() == 1),
            Scalar::F(r) => r.v == 1 || r.v == r.p - 1,
        }
    }

    /// Sign used for display only; residues are always non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => match &q.0 {
                Repr::Small(n, _) => *n < 0,
                Repr::Big(r) => r.is_negative(),
            },
            Scalar::F(_) => false,
        }
    }
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::F(a), Scalar::F(b)) if a.p == b.p => {
                let s = a.v + b.v;
                Scalar::F(Residue { v: if s >= a.p { s - a.p } else { s }, p: a.p })
            }
            _ => field_mismatch(self, o),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::F(a), Scalar::F(b)) if a.p == b.p => Scalar::F(*a * *b),
            _ => field_mismatch(self, o),
        }
    }
}

impl Mul<&Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        &self * o
    }
}

impl Mul<Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Add<Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub<Scalar> for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::F(a) => Scalar::F(Residue { v: if a.v == 0 { 0 } else { a.p - a.v }, p: a.p }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        if let (Scalar::F(a), Scalar::F(b)) = (&mut *self, o) {
            if a.p == b.p {
                let s = a.v + b.v;
                a.v = if s >= a.p { s - a.p } else { s };
                return;
            }
        }
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        *self = &*self - o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::F(r) => write!(f, "{}", r.v),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let half = q.ratio(2, 4).unwrap();
        assert_eq!(half, q.ratio(-1, -2).unwrap());
        assert_eq!(format!("{half}"), "1/2");
        assert_eq!(&half + &half, q.one());
        assert_eq!(q.ratio(3, -6).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let q = Field::Rational;
        let big = q.int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        let diff = &sq - &sq;
        assert!(diff.is_zero());
    }

    #[test]
    fn residues() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.int(-1), f.int(6));
        assert_eq!(f.ratio(1, 2).unwrap(), f.int(4));
        assert_eq!(f.int(2).pow(3).unwrap(), f.one());
        assert!(f.int(7).inv().is_none());
        assert!(Field::prime(8).is_err());
    }

    #[test]
    fn parse_coefficients() {
        let q = Field::Rational;
        assert_eq!(q.parse("-3/6").unwrap(), q.ratio(-1, 2).unwrap());
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        assert!(q.parse("").is_err());
        let f = Field::prime(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.int(6));
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert!(f.parse("1/7").is_err());
    }
}
