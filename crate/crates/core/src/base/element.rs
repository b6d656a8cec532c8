use super::BaseField;
use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `u + v*theta` of `O_K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseElement {
    field: BaseField,
    u: BigInt,
    v: BigInt,
}

/// Signs of an element under the real embeddings `sigma_1, ..., sigma_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(eps: Vec<i8>) -> Self {
        assert!(eps.iter().all(|&e| e == 1 || e == -1), "sign entries must be +1 or -1");
        SignVector(eps)
    }

    pub fn positive(r: usize) -> Self {
        SignVector(vec![1; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn is_all_positive(&self) -> bool {
        self.0.iter().all(|&e| e == 1)
    }

    /// Componentwise product.
    pub fn mul(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len());
        SignVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *e > 0 { "+" } else { "-" })?;
        }
        write!(f, ")")
    }
}

/// Sign of `a + b*sqrt(m)` for a positive non-square `m`, by integer casework.
fn surd_sign(a: &BigInt, b: &BigInt, m: &BigInt) -> Sign {
    match (a.sign(), b.sign()) {
        (Sign::NoSign, s) | (s, Sign::NoSign) => s,
        (sa, sb) if sa == sb => sa,
        (sa, sb) => {
            if a * a > b * b * m {
                sa
            } else {
                sb
            }
        }
    }
}

impl BaseElement {
    pub(crate) fn new(field: BaseField, u: BigInt, v: BigInt) -> Self {
        assert!(
            field != BaseField::Rational || v.is_zero(),
            "elements of Z have no theta coordinate"
        );
        BaseElement { field, u, v }
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// Galois conjugate; the identity over `Q`.
    pub fn conj(&self) -> BaseElement {
        match self.field.theta_relation() {
            None => self.clone(),
            // conj(theta) = t - theta
            Some((t, _)) => BaseElement::new(self.field, &self.u + &self.v * t, -&self.v),
        }
    }

    /// Absolute norm `N_{K/Q}`.
    pub fn norm(&self) -> BigInt {
        match self.field.theta_relation() {
            None => self.u.clone(),
            Some((t, n)) => &self.u * &self.u + &self.u * &self.v * t - &self.v * &self.v * n,
        }
    }

    /// The cofactor `y*` with `self * y* = N(self)`: the conjugate, or 1 over `Q`.
    pub fn adjugate(&self) -> BaseElement {
        match self.field.theta_relation() {
            None => self.field.one(),
            Some(_) => self.conj(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Exact signs of the real embeddings.
    pub fn sign_vector(&self) -> Result<SignVector> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(match self.field.theta_relation() {
            None => SignVector(vec![if self.u.is_positive() { 1 } else { -1 }]),
            Some((t, n)) => {
                // 2x = (2u + t v) ± v sqrt(t^2 + 4n)
                let a = &self.u * 2 + &self.v * t;
                let disc = BigInt::from(t * t + 4 * n);
                let s1 = surd_sign(&a, &self.v, &disc);
                let s2 = surd_sign(&a, &-&self.v, &disc);
                let to_i8 = |s: Sign| if s == Sign::Plus { 1 } else { -1 };
                SignVector(vec![to_i8(s1), to_i8(s2)])
            }
        })
    }

    pub fn is_totally_positive(&self) -> bool {
        self.sign_vector().map(|s| s.is_all_positive()).unwrap_or(false)
    }

    pub fn scale(&self, k: &BigInt) -> BaseElement {
        BaseElement::new(self.field, &self.u * k, &self.v * k)
    }

    pub fn pow(&self, e: u32) -> BaseElement {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self / y` if it lies in `O_K`.
    pub fn div_exact(&self, y: &BaseElement) -> Option<BaseElement> {
        assert_eq!(self.field, y.field);
        if y.is_zero() {
            return None;
        }
        let n = y.norm();
        let num = self * &y.adjugate();
        let (qu, ru) = num.u.div_rem(&n);
        let (qv, rv) = num.v.div_rem(&n);
        (ru.is_zero() && rv.is_zero()).then(|| BaseElement::new(self.field, qu, qv))
    }

    pub fn divides(&self, x: &BaseElement) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Result<BaseElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(self.field.one().div_exact(self).expect("units are invertible"))
    }

    /// Integer content `gcd(u, v)`.
    pub fn content(&self) -> BigInt {
        self.u.gcd(&self.v)
    }

    /// Integral coordinates `[u, v]` (length `degree`).
    pub fn coords(&self) -> Vec<BigInt> {
        match self.field {
            BaseField::Rational => vec![self.u.clone()],
            BaseField::Sqrt2 => vec![self.u.clone(), self.v.clone()],
        }
    }

    pub fn from_coords(field: BaseField, c: &[BigInt]) -> BaseElement {
        match field {
            BaseField::Rational => BaseElement::new(field, c[0].clone(), BigInt::zero()),
            BaseField::Sqrt2 => BaseElement::new(field, c[0].clone(), c[1].clone()),
        }
    }

    /// Square root in `O_K`, if one exists.
    pub fn sqrt(&self) -> Option<BaseElement> {
        match self.field {
            BaseField::Rational => {
                if self.u.is_negative() {
                    return None;
                }
                let s = self.u.sqrt();
                (&s * &s == self.u).then(|| self.field.from_bigint(s))
            }
            BaseField::Sqrt2 => {
                // (a + b√2)^2 = a^2 + 2b^2 + 2ab√2 and a^2 - 2b^2 = ±sqrt(N)
                let n = self.norm();
                if n.is_negative() {
                    return None;
                }
                let m = n.sqrt();
                if &m * &m != n {
                    return None;
                }
                for mm in [m.clone(), -m] {
                    let a2 = &self.u + &mm;
                    let b2 = &self.u - &mm;
                    if a2.is_negative() || b2.is_negative() || a2.is_odd() || !(&b2 % BigInt::from(4)).is_zero() {
                        continue;
                    }
                    let a = (a2 / BigInt::from(2)).sqrt();
                    let b = (b2 / BigInt::from(4)).sqrt();
                    for (sa, sb) in [(1, 1), (1, -1)] {
                        let cand = BaseElement::new(self.field, &a * sa, &b * sb);
                        if &cand * &cand == *self {
                            return Some(cand);
                        }
                    }
                }
                None
            }
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        let theta = "√2";
        let vpart = if self.v.is_one() {
            theta.to_string()
        } else if self.v == -BigInt::one() {
            format!("-{theta}")
        } else {
            format!("{}{theta}", self.v)
        };
        if self.u.is_zero() {
            write!(f, "{vpart}")
        } else if self.v.is_negative() {
            write!(f, "{}{}", self.u, vpart)
        } else {
            write!(f, "{}+{}", self.u, vpart)
        }
    }
}

impl fmt::Debug for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&BaseElement> for &BaseElement {
    type Output = BaseElement;
    fn add(self, rhs: &BaseElement) -> BaseElement {
        assert_eq!(self.field, rhs.field, "base field mismatch");
        BaseElement::new(self.field, &self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl Sub<&BaseElement> for &BaseElement {
    type Output = BaseElement;
    fn sub(self, rhs: &BaseElement) -> BaseElement {
        assert_eq!(self.field, rhs.field, "base field mismatch");
        BaseElement::new(self.field, &self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl Mul<&BaseElement> for &BaseElement {
    type Output = BaseElement;
    fn mul(self, rhs: &BaseElement) -> BaseElement {
        assert_eq!(self.field, rhs.field, "base field mismatch");
        match self.field.theta_relation() {
            None => BaseElement::new(self.field, &self.u * &rhs.u, BigInt::zero()),
            Some((t, n)) => {
                let vv = &self.v * &rhs.v;
                let u = &self.u * &rhs.u + &vv * n;
                let v = &self.u * &rhs.v + &self.v * &rhs.u + vv * t;
                BaseElement::new(self.field, u, v)
            }
        }
    }
}

impl Neg for BaseElement {
    type Output = BaseElement;
    fn neg(self) -> BaseElement {
        BaseElement::new(self.field, -self.u, -self.v)
    }
}

impl Neg for &BaseElement {
    type Output = BaseElement;
    fn neg(self) -> BaseElement {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BaseElement> for BaseElement {
            type Output = BaseElement;
            fn $m(self, rhs: BaseElement) -> BaseElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BaseElement> for BaseElement {
            type Output = BaseElement;
            fn $m(self, rhs: &BaseElement) -> BaseElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<BaseElement> for &BaseElement {
            type Output = BaseElement;
            fn $m(self, rhs: BaseElement) -> BaseElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
