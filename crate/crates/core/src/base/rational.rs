use super::{BaseElement, BaseField, SignVector};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `(u + v*theta) / den` of `K`, with `den > 0` and content reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseRational {
    num: BaseElement,
    den: BigInt,
}

impl BaseRational {
    pub fn new(num: BaseElement, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = BaseRational { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_int(x: BaseElement) -> Self {
        BaseRational { num: x, den: BigInt::one() }
    }

    pub fn zero(field: BaseField) -> Self {
        Self::from_int(field.zero())
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.num = -self.num.clone();
            self.den = -self.den.clone();
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            self.num = BaseElement::from_coords(
                self.num.field(),
                &self.num.coords().iter().map(|c| c / &g).collect::<Vec<_>>(),
            );
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> BaseField {
        self.num.field()
    }

    pub fn numer(&self) -> &BaseElement {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an element of `O_K`, if integral.
    pub fn to_integral(&self) -> Result<BaseElement> {
        if self.is_integral() {
            Ok(self.num.clone())
        } else {
            Err(Error::NonIntegral(self.to_string()))
        }
    }

    pub fn sign_vector(&self) -> Result<SignVector> {
        self.num.sign_vector()
    }

    pub fn conj(&self) -> Self {
        BaseRational { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(a/d) = d * a* / N(a)
        BaseRational::new(self.num.adjugate().scale(&self.den), self.num.norm())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        BaseRational::new(self.num.scale(k), self.den.clone()).expect("denominator is nonzero")
    }

    /// Whether this is a unit of `O_K`.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.num.is_unit()
    }
}

impl From<BaseElement> for BaseRational {
    fn from(x: BaseElement) -> Self {
        BaseRational::from_int(x)
    }
}

impl fmt::Display for BaseRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.v().is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for BaseRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&BaseRational> for &BaseRational {
    type Output = BaseRational;
    fn add(self, rhs: &BaseRational) -> BaseRational {
        let num = self.num.scale(&rhs.den) + rhs.num.scale(&self.den);
        BaseRational::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub<&BaseRational> for &BaseRational {
    type Output = BaseRational;
    fn sub(self, rhs: &BaseRational) -> BaseRational {
        self + &(-rhs)
    }
}

impl Mul<&BaseRational> for &BaseRational {
    type Output = BaseRational;
    fn mul(self, rhs: &BaseRational) -> BaseRational {
        BaseRational::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &BaseRational {
    type Output = BaseRational;
    fn neg(self) -> BaseRational {
        BaseRational { num: -self.num.clone(), den: self.den.clone() }
    }
}

impl Neg for BaseRational {
    type Output = BaseRational;
    fn neg(self) -> BaseRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BaseRational> for BaseRational {
            type Output = BaseRational;
            fn $m(self, rhs: BaseRational) -> BaseRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BaseRational> for BaseRational {
            type Output = BaseRational;
            fn $m(self, rhs: &BaseRational) -> BaseRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
