//! Two-level numeric tower.
//!
//! A [`Scalar`] is either an exact rational (always in lowest terms with a
//! positive denominator) or a binary floating-point value carrying an explicit
//! decimal digit budget. Field operations on two exact values stay exact; any
//! operation that mixes the two levels promotes the exact operand and marks
//! the result as promoted.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default working precision, in decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

/// Digit budget attached to values that originate from `f64` computations.
pub const F64_DIGITS: u32 = 16;

const ROUNDING: RoundingMode = RoundingMode::ToEven;
const WORD_BYTES: usize = std::mem::size_of::<Word>();

/// Binary precision used for a given decimal digit budget, with guard bits.
pub(crate) fn precision_bits(digits: u32) -> usize {
    let bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as usize + 32;
    bits.div_ceil(WORD_BIT_SIZE) * WORD_BIT_SIZE
}

fn consts() -> Consts {
    Consts::new().expect("constant cache allocation")
}

fn int_to_float(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_word(0, WORD_BIT_SIZE);
    }
    let bytes = n.magnitude().to_bytes_le();
    let words: Vec<Word> = bytes
        .chunks(WORD_BYTES)
        .map(|chunk| {
            let mut buf = [0u8; WORD_BYTES];
            buf[..chunk.len()].copy_from_slice(chunk);
            Word::from_le_bytes(buf)
        })
        .collect();
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    let exponent = (words.len() * WORD_BIT_SIZE) as i32;
    BigFloat::from_words(&words, sign, exponent)
}

fn rational_to_float(r: &BigRational, bits: usize) -> BigFloat {
    let num = int_to_float(r.numer());
    if r.denom().is_one() {
        let mut out = num;
        if out.precision().unwrap_or(0) > bits {
            // rounding a finite value to a valid precision cannot fail
            let _ = out.set_precision(bits, ROUNDING);
        }
        return out;
    }
    let den = int_to_float(r.denom());
    num.div(&den, bits, ROUNDING)
}

/// Exact rational value of a finite binary float.
fn float_to_rational(f: &BigFloat) -> Option<BigRational> {
    if f.is_nan() || f.is_inf() {
        return None;
    }
    if f.is_zero() {
        return Some(BigRational::zero());
    }
    let (words, _, sign, exponent, _) = f.as_raw_parts()?;
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    let mantissa = BigInt::from(BigUint::from_bytes_le(&bytes));
    let shift = i64::from(exponent) - (words.len() * WORD_BIT_SIZE) as i64;
    let two = BigInt::from(2u8);
    let mut value = if shift >= 0 {
        BigRational::from_integer(mantissa * num_traits::pow(two, shift as usize))
    } else {
        BigRational::new(mantissa, num_traits::pow(two, (-shift) as usize))
    };
    if sign == Sign::Neg {
        value = -value;
    }
    Some(value)
}

/// Arbitrary-precision real with an explicit decimal digit budget.
#[derive(Clone, Debug)]
pub struct Real {
    value: BigFloat,
    digits: u32,
    promoted: bool,
}

impl Real {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// True when an exact operand was converted to reach this value.
    pub fn promoted(&self) -> bool {
        self.promoted
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.value
    }

    fn bits(&self) -> usize {
        precision_bits(self.digits)
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Real(Real),
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::Exact(BigRational::from_integer(n))
    }

    /// Exact `p/q`.
    ///
    /// Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Exact(r)
    }

    /// A real value taken from an `f64`. The digit budget reflects `f64`
    /// accuracy, not the exactness of the binary conversion.
    ///
    /// Panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        Self::try_from_f64(x).expect("Scalar::from_f64 requires a finite value")
    }

    pub fn try_from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        Some(Scalar::Real(Real {
            value: BigFloat::from_f64(x, WORD_BIT_SIZE * 2),
            digits: F64_DIGITS,
            promoted: false,
        }))
    }

    fn real(value: BigFloat, digits: u32, promoted: bool) -> Self {
        Scalar::Real(Real {
            value,
            digits,
            promoted,
        })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Real(_) => None,
        }
    }

    /// Exact rational value. For reals this is the binary value actually held.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Exact(r) => r.clone(),
            Scalar::Real(x) => float_to_rational(&x.value).expect("finite real"),
        }
    }

    /// Digit budget of a real value; `None` for exact values.
    pub fn digits(&self) -> Option<u32> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Real(x) => Some(x.digits),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Real(x) => float_to_rational(&x.value)
                .and_then(|r| r.to_f64())
                .unwrap_or(f64::NAN),
        }
    }

    /// Convert to the real level with the given digit budget.
    pub fn to_real(&self, digits: u32) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::real(rational_to_float(r, precision_bits(digits)), digits, true),
            Scalar::Real(x) => {
                let mut value = x.value.clone();
                let bits = precision_bits(digits);
                if value.precision().unwrap_or(0) > bits {
                    let _ = value.set_precision(bits, ROUNDING);
                }
                Scalar::real(value, digits.min(x.digits.max(digits)), x.promoted)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Real(x) => x.value.is_zero(),
        }
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(r) => {
                if r.is_zero() {
                    0
                } else if r.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Scalar::Real(x) => {
                if x.value.is_zero() {
                    0
                } else if x.value.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Real(x) => Scalar::real(x.value.abs(), x.digits, x.promoted),
        }
    }

    fn binop(&self, rhs: &Scalar, op: BinOp) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => {
                    assert!(!b.is_zero(), "exact division by zero");
                    a / b
                }
            }),
            _ => {
                let (digits, promoted) = match (self, rhs) {
                    (Scalar::Real(a), Scalar::Real(b)) => {
                        (a.digits.min(b.digits), a.promoted || b.promoted)
                    }
                    (Scalar::Real(a), Scalar::Exact(_)) | (Scalar::Exact(_), Scalar::Real(a)) => {
                        (a.digits, true)
                    }
                    _ => unreachable!(),
                };
                let bits = precision_bits(match (self, rhs) {
                    (Scalar::Real(a), Scalar::Real(b)) => a.digits.max(b.digits),
                    _ => digits,
                });
                let lhs = self.float_at(bits);
                let rhs = rhs.float_at(bits);
                let value = match op {
                    BinOp::Add => lhs.add(&rhs, bits, ROUNDING),
                    BinOp::Sub => lhs.sub(&rhs, bits, ROUNDING),
                    BinOp::Mul => lhs.mul(&rhs, bits, ROUNDING),
                    BinOp::Div => {
                        assert!(!rhs.is_zero(), "real division by zero");
                        lhs.div(&rhs, bits, ROUNDING)
                    }
                };
                Scalar::real(value, digits, promoted)
            }
        }
    }

    fn float_at(&self, bits: usize) -> BigFloat {
        match self {
            Scalar::Exact(r) => rational_to_float(r, bits),
            Scalar::Real(x) => x.value.clone(),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.binop(rhs, BinOp::Div))
        }
    }

    pub fn recip(&self) -> Scalar {
        Scalar::one() / self
    }

    /// Integer power; exact on exact input. Negative powers of zero panic.
    pub fn powi(&self, n: i32) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(num_traits::pow(r.clone(), n.unsigned_abs() as usize))
                .pipe(|v| if n < 0 { v.recip() } else { v }),
            Scalar::Real(x) => {
                let value = x.value.powi(n.unsigned_abs() as usize, x.bits(), ROUNDING);
                let v = Scalar::real(value, x.digits, x.promoted);
                if n < 0 {
                    v.recip()
                } else {
                    v
                }
            }
        }
    }

    fn pipe<F: FnOnce(Scalar) -> Scalar>(self, f: F) -> Scalar {
        f(self)
    }

    fn unary<F>(&self, digits: u32, f: F) -> Scalar
    where
        F: FnOnce(&BigFloat, usize, &mut Consts) -> BigFloat,
    {
        let (digits, promoted) = match self {
            Scalar::Exact(_) => (digits, false),
            Scalar::Real(x) => (x.digits.min(digits), x.promoted),
        };
        let bits = precision_bits(digits);
        let mut cc = consts();
        let value = f(&self.float_at(bits), bits, &mut cc);
        Scalar::real(value, digits, promoted)
    }

    /// Square root at the given digit budget. Requires a non-negative value.
    pub fn sqrt(&self, digits: u32) -> Result<Scalar> {
        if self.is_negative() {
            return Err(Error::DomainError("square root of a negative value".into()));
        }
        Ok(self.unary(digits, |x, p, _| x.sqrt(p, ROUNDING)))
    }

    pub fn exp(&self, digits: u32) -> Scalar {
        self.unary(digits, |x, p, cc| x.exp(p, ROUNDING, cc))
    }

    /// Natural logarithm. Requires a positive value.
    pub fn ln(&self, digits: u32) -> Result<Scalar> {
        if !self.is_positive() {
            return Err(Error::DomainError("logarithm of a non-positive value".into()));
        }
        Ok(self.unary(digits, |x, p, cc| x.ln(p, ROUNDING, cc)))
    }

    pub fn sin(&self, digits: u32) -> Scalar {
        self.unary(digits, |x, p, cc| x.sin(p, ROUNDING, cc))
    }

    pub fn cos(&self, digits: u32) -> Scalar {
        self.unary(digits, |x, p, cc| x.cos(p, ROUNDING, cc))
    }

    pub fn pi(digits: u32) -> Scalar {
        let mut cc = consts();
        Scalar::real(cc.pi(precision_bits(digits), ROUNDING), digits, false)
    }

    /// Parse `"p/q"`, an integer, or a plain decimal such as `"-0.125"` or
    /// `"1.5e-3"`. Every accepted form is an exact rational.
    pub fn parse(text: &str) -> Result<Scalar> {
        let s = text.trim();
        let bad = || Error::InvalidInput(format!("cannot parse '{text}' as a number"));
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in '{text}'")));
            }
            return Ok(Scalar::Exact(BigRational::new(p, q)));
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (negative, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let all: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
        let all = all / BigInt::from(10);
        let scale = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let mut value = if scale >= 0 {
            BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(all, num_traits::pow(ten, (-scale) as usize))
        };
        if negative {
            value = -value;
        }
        Ok(Scalar::Exact(value))
    }

    /// Fixed-point decimal rendering with `places` digits after the point,
    /// rounded half away from zero.
    pub fn to_fixed(&self, places: u32) -> String {
        let r = self.to_rational();
        let scale = num_traits::pow(BigInt::from(10), places as usize);
        let scaled = r.abs() * BigRational::from_integer(scale);
        let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
        let mut digits = rounded.to_string();
        if places > 0 {
            let places = places as usize;
            if digits.len() <= places {
                digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
            }
            digits.insert(digits.len() - places, '.');
        }
        if r.is_negative() && rounded_nonzero(&digits) {
            format!("-{digits}")
        } else {
            digits
        }
    }

    /// Exact values as `p/q`; reals as fixed-point with at most `digits`
    /// places (capped by the value's own digit budget).
    pub fn render(&self, digits: u32) -> String {
        match self {
            Scalar::Exact(r) => format_rational(r),
            Scalar::Real(x) => self.to_fixed(digits.min(x.digits)),
        }
    }
}

fn rounded_nonzero(digits: &str) -> bool {
    digits.chars().any(|c| c.is_ascii_digit() && c != '0')
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => f.write_str(&format_rational(r)),
            Scalar::Real(x) => f.write_str(&self.to_fixed(x.digits)),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Scalar {
    fn cmp_value(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binop(rhs, $op)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binop(&rhs, $op)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binop(rhs, $op)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binop(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);
forward_binop!(Div, div, BinOp::Div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Real(x) => Scalar::real(x.value.neg(), x.digits, x.promoted),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
