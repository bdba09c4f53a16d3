//! Arbitrary-precision complex values.
//!
//! Every character value, Gauss sum, and hypergeometric sum in this crate is
//! a cyclotomic algebraic number; we represent them as complex floats with a
//! caller-chosen precision (default 256 bits) and guard all integer-valued
//! results with an explicit rounding-gap check.

use crate::error::{Error, Result};
use rug::float::Constant;
use rug::ops::CompleteRound;
use rug::{Float, Integer};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct AlgValue {
    pub re: Float,
    pub im: Float,
}

impl AlgValue {
    pub fn new(re: Float, im: Float) -> Self {
        AlgValue { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn zero(prec: u32) -> Self {
        AlgValue::new(Float::with_val(prec, 0), Float::with_val(prec, 0))
    }

    pub fn one(prec: u32) -> Self {
        AlgValue::new(Float::with_val(prec, 1), Float::with_val(prec, 0))
    }

    pub fn from_int(prec: u32, v: i64) -> Self {
        AlgValue::new(Float::with_val(prec, v), Float::with_val(prec, 0))
    }

    pub fn from_integer(prec: u32, v: &Integer) -> Self {
        AlgValue::new(Float::with_val(prec, v), Float::with_val(prec, 0))
    }

    pub fn real(re: Float) -> Self {
        let prec = re.prec();
        AlgValue::new(re, Float::with_val(prec, 0))
    }

    /// e^{2πi·num/den}
    pub fn root_of_unity(prec: u32, num: i64, den: u64) -> Self {
        let tau = Float::with_val(prec, Constant::Pi) * 2u32;
        let angle = tau * num / Float::with_val(prec, den);
        let (sin, cos) = angle.sin_cos(Float::new(prec));
        AlgValue::new(cos, sin)
    }

    pub fn conj(&self) -> Self {
        AlgValue::new(self.re.clone(), (-&self.im).complete(self.prec()))
    }

    pub fn norm_sqr(&self) -> Float {
        let mut v = self.re.clone().square();
        v += self.im.clone().square();
        v
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        AlgValue::new(
            self.re.clone() / &n,
            -(self.im.clone() / &n),
        )
    }

    pub fn scale_int(&self, k: i64) -> Self {
        AlgValue::new(
            (&self.re * k).complete(self.prec()),
            (&self.im * k).complete(self.prec()),
        )
    }

    pub fn scale(&self, k: &Float) -> Self {
        AlgValue::new(
            (&self.re * k).complete(self.prec()),
            (&self.im * k).complete(self.prec()),
        )
    }

    /// Integer power by binary exponentiation.
    pub fn powi(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = AlgValue::one(self.prec());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn dist(&self, other: &AlgValue) -> Float {
        (self - other).abs()
    }

    /// Nearest integer together with the rounding gap max(|re − round(re)|, |im|).
    pub fn nearest_integer(&self) -> (Integer, Float) {
        let rounded = self.re.clone().round();
        let int = rounded.to_integer().expect("finite value");
        let mut gap = (self.re.clone() - &rounded).abs();
        let im_abs = self.im.clone().abs();
        if im_abs > gap {
            gap = im_abs;
        }
        (int, gap)
    }

    /// Round to an integer, failing if the gap exceeds `tol`.
    pub fn round_checked(&self, tol: f64) -> Result<Integer> {
        let (int, gap) = self.nearest_integer();
        if gap > tol {
            return Err(Error::RoundingGap(
                format!("{}+{}i", self.re.to_f64(), self.im.to_f64()),
                format!("{tol:e}"),
            ));
        }
        Ok(int)
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for AlgValue {
            type Output = AlgValue;
            fn $method(self, rhs: AlgValue) -> AlgValue {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&AlgValue> for AlgValue {
            type Output = AlgValue;
            fn $method(self, rhs: &AlgValue) -> AlgValue {
                (&self).$method(rhs)
            }
        }
        impl $trait<AlgValue> for &AlgValue {
            type Output = AlgValue;
            fn $method(self, rhs: AlgValue) -> AlgValue {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&AlgValue> for &AlgValue {
    type Output = AlgValue;
    fn add(self, rhs: &AlgValue) -> AlgValue {
        AlgValue::new(
            (&self.re + &rhs.re).complete(self.prec()),
            (&self.im + &rhs.im).complete(self.prec()),
        )
    }
}
forward_binop!(Add, add);

impl Sub<&AlgValue> for &AlgValue {
    type Output = AlgValue;
    fn sub(self, rhs: &AlgValue) -> AlgValue {
        AlgValue::new(
            (&self.re - &rhs.re).complete(self.prec()),
            (&self.im - &rhs.im).complete(self.prec()),
        )
    }
}
forward_binop!(Sub, sub);

impl Mul<&AlgValue> for &AlgValue {
    type Output = AlgValue;
    fn mul(self, rhs: &AlgValue) -> AlgValue {
        let re = (&self.re * &rhs.re).complete(self.prec())
            - (&self.im * &rhs.im).complete(self.prec());
        let im = (&self.re * &rhs.im).complete(self.prec())
            + (&self.im * &rhs.re).complete(self.prec());
        AlgValue::new(re, im)
    }
}
forward_binop!(Mul, mul);

impl Div<&AlgValue> for &AlgValue {
    type Output = AlgValue;
    fn div(self, rhs: &AlgValue) -> AlgValue {
        self * rhs.recip()
    }
}
forward_binop!(Div, div);

impl Neg for &AlgValue {
    type Output = AlgValue;
    fn neg(self) -> AlgValue {
        AlgValue::new(
            (-&self.re).complete(self.prec()),
            (-&self.im).complete(self.prec()),
        )
    }
}

impl Neg for AlgValue {
    type Output = AlgValue;
    fn neg(self) -> AlgValue {
        -&self
    }
}

/// Table of e^{2πi·t/order} for t = 0..order.
pub fn roots_of_unity(order: usize, prec: u32) -> Vec<AlgValue> {
    let tau = Float::with_val(prec, Constant::Pi) * 2u32;
    let step = tau / Float::with_val(prec, order as u64);
    (0..order)
        .map(|t| {
            let angle = (&step * t as u64).complete(prec);
            let (sin, cos) = angle.sin_cos(Float::new(prec));
            AlgValue::new(cos, sin)
        })
        .collect()
}
