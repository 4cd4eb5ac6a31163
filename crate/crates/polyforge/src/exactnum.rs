//! Exact arithmetic over ℚ and the quadratic extension ℚ(√5).
//!
//! Every coordinate, squared distance and group element in this crate lives
//! in ℚ(√5), represented canonically as `a + b·√5` with reduced rational
//! components. No floating point is ever consulted for a decision;
//! [`QuadExt::to_f64`] exists only as a display convenience.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a + b*sqrt5")]
    Parse(String),
}

/// Element `a + b·√5` of ℚ(√5).
///
/// The representation is unique because (1, √5) is a ℚ-basis, so derived
/// `PartialEq`/`Hash` agree with field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt::new(a, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        QuadExt::from_rational(rat_int(n))
    }

    /// `a/b + c/d·√5` from machine integers.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        QuadExt::new(rat(a, b), rat(c, d))
    }

    pub fn zero() -> Self {
        QuadExt::from_int(0)
    }

    pub fn one() -> Self {
        QuadExt::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadExt::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio φ = (1 + √5)/2, the coordinate of everything pentagonal.
    pub fn golden_ratio() -> Self {
        QuadExt::from_parts(1, 2, 1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b·√5`.
    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `x · x̄ = a² − 5b²`, a rational.
    pub fn galois_norm(&self) -> Rational {
        &self.a * &self.a - rat_int(5) * &self.b * &self.b
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse via the Galois conjugate: `x⁻¹ = x̄ / (x·x̄)`.
    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let norm = self.galois_norm();
        // norm = 0 with x ≠ 0 would need √5 rational
        debug_assert!(!norm.is_zero());
        Ok(QuadExt::new(&self.a / &norm, -(&self.b / &norm)))
    }

    /// Sign of the real embedding (√5 ≈ 2.236 > 0), decided exactly.
    pub fn sign(&self) -> Ordering {
        match (sign_of(&self.a), sign_of(&self.b)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Opposite signs: |a| vs |b|√5 resolves by comparing a² with 5b².
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2_5 = rat_int(5) * &self.b * &self.b;
                match a2.cmp(&b2_5) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal, // unreachable: √5 is irrational
                }
            }
        }
    }

    /// Display convenience only; never used in any decision.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5f64.sqrt()
    }
}

fn sign_of(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).sign()
    }
}

macro_rules! forward_ref_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}
forward_ref_binop!(Add, add);

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}
forward_ref_binop!(Sub, sub);

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        QuadExt::new(
            &self.a * &rhs.a + rat_int(5) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}
forward_ref_binop!(Mul, mul);

impl Div<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    #[allow(clippy::suspicious_arithmetic_impl)] // division via the Galois inverse
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * rhs.inverse().expect("division by zero in QuadExt")
    }
}
forward_ref_binop!(Div, div);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_int(n)
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::from_rational(r)
    }
}

/// Canonical text form, parsed back by [`FromStr`]:
/// `"0"`, `"-3/4"`, `"1/5*sqrt5"`, `"1/2+1/2*sqrt5"`, `"1-2*sqrt5"`.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt5", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt5", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

impl FromStr for QuadExt {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, NumError> {
        let err = || NumError::Parse(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        match t.find("sqrt5") {
            None => {
                let a = Rational::from_str(t).map_err(|_| err())?;
                Ok(QuadExt::from_rational(a))
            }
            Some(pos) => {
                if pos + 5 != t.len() {
                    return Err(err()); // sqrt5 term must come last
                }
                let prefix = &t[..pos];
                let (a_part, b_part) = split_terms(prefix).ok_or_else(err)?;
                let a = match a_part {
                    None => Rational::zero(),
                    Some(p) => Rational::from_str(p).map_err(|_| err())?,
                };
                let b = parse_coefficient(b_part).ok_or_else(err)?;
                Ok(QuadExt::new(a, b))
            }
        }
    }
}

/// Split `"1/2+1/2*"` into a-term and signed b-coefficient text.
/// The b text keeps its sign and trailing `*` stripped.
fn split_terms(prefix: &str) -> Option<(Option<&str>, &str)> {
    // A '+'/'-' after index 0 separates the rational term from the sqrt5 term;
    // rationals themselves contain signs only at the very front.
    let sep = prefix
        .char_indices()
        .skip(1)
        .find(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i);
    match sep {
        Some(i) => Some((Some(&prefix[..i]), &prefix[i..])),
        None => Some((None, prefix)),
    }
}

/// Parse the coefficient of the sqrt5 term: `""`, `"-"`, `"+"`, `"3/4*"`, `"-2*"`.
fn parse_coefficient(text: &str) -> Option<Rational> {
    match text {
        "" | "+" => Some(Rational::one()),
        "-" => Some(-Rational::one()),
        _ => {
            let stripped = text.strip_suffix('*')?;
            // reject things like "+-1*" slipping through
            Rational::from_str(stripped).ok()
        }
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        QuadExt::from_str(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadExt {
        QuadExt::from_parts(a, b, c, d)
    }

    #[test]
    fn add_examples() {
        let one = QuadExt::one();
        let root = QuadExt::sqrt5();
        assert_eq!(&one + &root, q(1, 1, 1, 1));
        let x = q(7, 3, -2, 5);
        assert_eq!(&x + &QuadExt::zero(), x);
        // φ + φ⁻¹ = √5, with φ⁻¹ = (−1+√5)/2
        let phi = QuadExt::golden_ratio();
        let phi_inv = q(-1, 2, 1, 2);
        assert_eq!(&phi + &phi_inv, root);
        assert_eq!(phi.inverse().unwrap(), phi_inv);
    }

    #[test]
    fn mul_examples() {
        let root = QuadExt::sqrt5();
        assert_eq!(&root * &root, QuadExt::from_int(5));
        let phi = QuadExt::golden_ratio();
        assert_eq!(&phi * &phi, &phi + &QuadExt::one()); // φ² = φ + 1
        let x = q(-3, 7, 22, 13);
        assert_eq!(&x * &QuadExt::one(), x);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            QuadExt::from_int(2).inverse().unwrap(),
            QuadExt::from_parts(1, 2, 0, 1)
        );
        let phi = QuadExt::golden_ratio();
        assert_eq!(phi.inverse().unwrap(), &phi - &QuadExt::one()); // φ⁻¹ = φ − 1
        assert_eq!(
            QuadExt::sqrt5().inverse().unwrap(),
            QuadExt::from_parts(0, 1, 1, 5)
        );
        assert_eq!(QuadExt::zero().inverse(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn compare_examples() {
        let root = QuadExt::sqrt5();
        assert!(root > QuadExt::from_int(2)); // 5 > 4
        assert!(root < QuadExt::from_int(3));
        // φ vs 8/5: difference is (−11 + 5√5)/10, and 125 > 121
        let phi = QuadExt::golden_ratio();
        assert!(phi > QuadExt::from_parts(8, 5, 0, 1));
        assert_eq!(phi.cmp(&phi), Ordering::Equal);
        // mixed-sign case the other way round
        assert!(q(11, 5, -1, 1) < QuadExt::zero());
    }

    #[test]
    fn display_round_trip_pinned() {
        for (value, text) in [
            (QuadExt::zero(), "0"),
            (QuadExt::from_int(-7), "-7"),
            (q(1, 2, 0, 1), "1/2"),
            (QuadExt::sqrt5(), "1*sqrt5"),
            (q(0, 1, -2, 5), "-2/5*sqrt5"),
            (QuadExt::golden_ratio(), "1/2+1/2*sqrt5"),
            (q(1, 1, -1, 1), "1-1*sqrt5"),
            (q(-3, 4, 7, 2), "-3/4+7/2*sqrt5"),
        ] {
            assert_eq!(value.to_string(), text);
            assert_eq!(QuadExt::from_str(text).unwrap(), value);
        }
    }

    #[test]
    fn parse_accepts_loose_forms() {
        assert_eq!(QuadExt::from_str("sqrt5").unwrap(), QuadExt::sqrt5());
        assert_eq!(QuadExt::from_str("-sqrt5").unwrap(), -QuadExt::sqrt5());
        assert_eq!(QuadExt::from_str(" 2/4 ").unwrap(), q(1, 2, 0, 1));
        assert_eq!(QuadExt::from_str("1+sqrt5").unwrap(), q(1, 1, 1, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "sqrt5*2", "1*sqrt5+2", "2**sqrt5", "1/0", "a+b", "1/2+", "sqrt55"] {
            assert!(QuadExt::from_str(bad).is_err(), "{bad:?} should not parse");
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_quadext() -> impl Strategy<Value = QuadExt> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| QuadExt::new(a, b))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_quadext(), y in arb_quadext(), z in arb_quadext()) {
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            if !x.is_zero() {
                prop_assert_eq!(&x * x.inverse().unwrap(), QuadExt::one());
            }
        }

        #[test]
        fn total_order_compatible_with_add(x in arb_quadext(), y in arb_quadext(), z in arb_quadext()) {
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
            if x < y && y < z {
                prop_assert!(x < z);
            }
            if x < y {
                prop_assert!(&x + &z < &y + &z);
            }
        }

        #[test]
        fn galois_conjugation_is_ring_hom(x in arb_quadext(), y in arb_quadext()) {
            prop_assert_eq!((&x + &y).conjugate(), x.conjugate() + y.conjugate());
            prop_assert_eq!((&x * &y).conjugate(), x.conjugate() * y.conjugate());
        }

        #[test]
        fn display_parse_round_trip(x in arb_quadext()) {
            prop_assert_eq!(QuadExt::from_str(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn sign_agrees_with_float(x in arb_quadext()) {
            let approx = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(x.sign() == Ordering::Greater, approx > 0.0);
            }
        }
    }
}
