//! Exact scalars: arbitrary-precision rationals and the real quadratic
//! extension ℚ(√15).
//!
//! `Scalar` is the coefficient type for the whole crate. A value `a + b√15`
//! is stored as the pair of reduced rationals `(a, b)`; the representation is
//! canonical, so equality is structural. 15 is not a rational square, hence
//! every nonzero scalar is invertible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Element `a + b√15` of ℚ(√15).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Rat,
    b: Rat,
}

impl Scalar {
    pub fn new(a: Rat, b: Rat) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            a: Rat::from_integer(BigInt::from(n)),
            b: Rat::zero(),
        }
    }

    /// The rational `n/d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar {
            a: Rat::new(BigInt::from(n), BigInt::from(d)),
            b: Rat::zero(),
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        Scalar { a, b: Rat::zero() }
    }

    /// √15 itself.
    pub fn sqrt15() -> Self {
        Scalar {
            a: Rat::zero(),
            b: Rat::one(),
        }
    }

    /// The scalar `(n/d)·√15`.
    pub fn sqrt15_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar {
            a: Rat::zero(),
            b: Rat::new(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the value lies in the rational subfield.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Returns the rational value, or `None` if a √15 component is present.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a - b√15`.
    pub fn conjugate(&self) -> Self {
        Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² - 15b²`; zero iff the element is zero.
    pub fn field_norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(BigInt::from(15)) * &self.b * &self.b
    }

    /// Multiplicative inverse; `Err` on zero.
    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field_norm();
        Ok(Scalar {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Sign of the real number `a + b√15` (-1, 0, or +1), decided exactly.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with 15b²; the larger magnitude wins.
        let diff = self.field_norm();
        match rat_sign(&diff) {
            0 => 0,
            s => s * sa,
        }
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        // (a + b√15)(c + d√15) = (ac + 15bd) + (ad + bc)√15
        let fifteen = Rat::from_integer(BigInt::from(15));
        Scalar {
            a: &self.a * &rhs.a + fifteen * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    fn div_ref(&self, rhs: &Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero in Q(\u{221a}15)"))
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    if &(&sn * &sn) != r.numer() {
        return None;
    }
    let sd = r.denom().sqrt();
    if &(&sd * &sd) != r.denom() {
        return None;
    }
    Some(Rat::new(sn, sd))
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $delegate:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$delegate(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$delegate(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$delegate(&rhs)
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$delegate(rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_ref);
impl_binop!(Sub, sub, sub_ref);
impl_binop!(Mul, mul, mul_ref);
impl_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            first = false;
        }
        if !self.b.is_zero() {
            if first {
                if self.b.is_one() {
                    write!(f, "\u{221a}15")?;
                } else if (-self.b.clone()).is_one() {
                    write!(f, "-\u{221a}15")?;
                } else {
                    write!(f, "{}\u{221a}15", self.b)?;
                }
            } else if self.b.is_positive() {
                if self.b.is_one() {
                    write!(f, " + \u{221a}15")?;
                } else {
                    write!(f, " + {}\u{221a}15", self.b)?;
                }
            } else {
                let nb = -self.b.clone();
                if nb.is_one() {
                    write!(f, " - \u{221a}15")?;
                } else {
                    write!(f, " - {}\u{221a}15", nb)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
