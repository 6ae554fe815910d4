//! Exact scalars: rationals and Gaussian rationals `a/b + (c/d)i`.
//!
//! Everything downstream is computed exactly over these types. Values are
//! always kept in canonical form (reduced fraction, positive denominator), so
//! derived `PartialEq`/`Hash` coincide with equality of field elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

/// An element of ℚ, stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// An element of ℚ(i). This is the ground field of every algebra in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from(n))
    }

    /// `n/d` with zero imaginary part; panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::real(Rational::new(n, d).expect("nonzero denominator"))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`, the field norm down to ℚ.
    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Ok(Self::new(&c.re * &n, &c.im * &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Parse the scalar text grammar
    /// `[-]a[/b][(+|-)c[/d]i]` or `[-][c[/d]]i` (decimal integers, no spaces).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        ScalarParser::new(text).parse()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if !self.re.is_zero() {
            write!(f, "{}{}", self.re, sign)?;
        } else if self.im.is_negative() {
            f.write_str("-")?;
        }
        if im_abs.is_one() {
            f.write_str("i")
        } else {
            write!(f, "{}i", im_abs)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // skip the four-product form when either side is real; this is the common case
        if self.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, &self.re * &rhs.im);
        }
        if rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, &self.im * &rhs.re);
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        GaussianRational::new(re, im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

struct ScalarParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ScalarParser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        // columns count characters; every accepted byte is ASCII, so the
        // char count of the consumed prefix is the column.
        let consumed = std::str::from_utf8(&self.bytes[..self.pos])
            .map(|s| s.chars().count())
            .unwrap_or(self.pos);
        ParseError::new(1, consumed + 1, message)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("decimal digits"))
    }

    /// `a[/b]`, unsigned.
    fn fraction(&mut self) -> Result<Rational, ParseError> {
        let numer = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                self.pos = at;
                return Err(self.err("zero denominator"));
            }
            return Ok(Rational(BigRational::new(numer, denom)));
        }
        Ok(Rational(BigRational::from_integer(numer)))
    }

    fn finish(&self, value: GaussianRational) -> Result<GaussianRational, ParseError> {
        if self.pos != self.bytes.len() {
            return Err(self.err("unexpected trailing characters"));
        }
        Ok(value)
    }

    fn parse(mut self) -> Result<GaussianRational, ParseError> {
        if self.bytes.is_empty() {
            return Err(self.err("empty scalar"));
        }
        let negative = self.eat(b'-');
        let apply = |r: Rational| if negative { -r } else { r };

        if self.eat(b'i') {
            let value = GaussianRational::new(Rational::zero(), apply(Rational::one()));
            return self.finish(value);
        }
        let first = apply(self.fraction()?);
        if self.eat(b'i') {
            return self.finish(GaussianRational::new(Rational::zero(), first));
        }
        let imag_negative = match self.peek() {
            None => return Ok(GaussianRational::real(first)),
            Some(b'+') => false,
            Some(b'-') => true,
            Some(_) => return Err(self.err("expected '+', '-', 'i' or end of scalar")),
        };
        self.pos += 1;
        let magnitude = if self.peek() == Some(b'i') {
            Rational::one()
        } else {
            self.fraction()?
        };
        if !self.eat(b'i') {
            return Err(self.err("expected 'i' after imaginary part"));
        }
        let im = if imag_negative { -magnitude } else { magnitude };
        self.finish(GaussianRational::new(first, im))
    }
}
