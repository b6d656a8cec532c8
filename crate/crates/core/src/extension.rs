//! Arithmetic in `L = K(sqrt D)` over the `O_K`-basis `[1, Omega]`, where
//! `Omega = (-w + sqrt D) / 2` has minimal polynomial `x^2 + w x + z`.

use crate::base::{is_qr_mod4, BaseElement, BaseField, BaseRational, DEFAULT_NORM_BOUND};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// `D`, together with the derived `w` and `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Extension {
    d: BaseElement,
    w: BaseElement,
    z: BaseElement,
}

/// `d` is fundamental: a square mod 4, squarefree away from 2, with the
/// 2-part controlled as in the usual definition of fundamental discriminants.
pub fn is_fundamental(d: &BaseElement) -> Result<bool> {
    crate::base::factor::is_fundamental_element(d, DEFAULT_NORM_BOUND)
}

impl Extension {
    /// Builds the extension for a fundamental, non-square `d`.
    ///
    /// `w` is the first square-mod-4 witness of `d` and `z = (w^2 - d) / 4`.
    pub fn new(d: BaseElement) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroInput);
        }
        if d.is_square() {
            return Err(Error::NotFundamental(format!("{d} is a square")));
        }
        if !is_fundamental(&d)? {
            return Err(Error::NotFundamental(d.to_string()));
        }
        let w = is_qr_mod4(&d).expect("fundamental elements are squares mod 4");
        let num = &(&w * &w) - &d;
        let z = BaseElement::from_coords(d.field(), &num.coords().iter().map(|c| c / 4).collect::<Vec<_>>());
        Ok(Extension { d, w, z })
    }

    pub fn field(&self) -> BaseField {
        self.d.field()
    }

    pub fn d(&self) -> &BaseElement {
        &self.d
    }

    pub fn w(&self) -> &BaseElement {
        &self.w
    }

    pub fn z(&self) -> &BaseElement {
        &self.z
    }

    pub fn is_imaginary_over_rationals(&self) -> bool {
        self.field() == BaseField::Rational && self.d.u().is_negative()
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement::from_base(&self.field().zero())
    }

    pub fn one(&self) -> ExtElement {
        ExtElement::from_base(&self.field().one())
    }

    pub fn omega(&self) -> ExtElement {
        let k = self.field();
        ExtElement::integral(k.zero(), k.one())
    }

    pub fn from_base(&self, x: &BaseElement) -> ExtElement {
        ExtElement::from_base(x)
    }

    /// Checked ring operation.
    pub fn arith(&self, op: ExtOp, a: &ExtElement, b: &ExtElement) -> Result<ExtElement> {
        if a.field() != self.field() || b.field() != self.field() {
            return Err(Error::DescriptorMismatch);
        }
        match op {
            ExtOp::Add => Ok(a + b),
            ExtOp::Sub => Ok(a - b),
            ExtOp::Mul => Ok(self.mul(a, b)),
            ExtOp::Div => self.div(a, b),
        }
    }

    /// Product, using `Omega^2 = -w Omega - z`.
    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let yy = &a.y * &b.y;
        let x = &(&a.x * &b.x) - &(&self.z * &yy);
        let y = &(&(&a.x * &b.y) + &(&a.y * &b.x)) - &(&self.w * &yy);
        ExtElement::new(x, y, &a.den * &b.den)
    }

    pub fn mul3(&self, a: &ExtElement, b: &ExtElement, c: &ExtElement) -> ExtElement {
        self.mul(&self.mul(a, b), c)
    }

    pub fn square(&self, a: &ExtElement) -> ExtElement {
        self.mul(a, a)
    }

    /// `conj(x + y Omega) = (x - w y) - y Omega`.
    pub fn conj(&self, a: &ExtElement) -> ExtElement {
        ExtElement::new(&a.x - &(&self.w * &a.y), -a.y.clone(), a.den.clone())
    }

    /// Relative norm `x^2 - w x y + z y^2`.
    pub fn rel_norm(&self, a: &ExtElement) -> BaseRational {
        let n = &(&(&a.x * &a.x) - &(&(&self.w * &a.x) * &a.y)) + &(&(&self.z * &a.y) * &a.y);
        BaseRational::new(n, &a.den * &a.den).expect("positive denominator")
    }

    /// Relative trace `2x - w y`.
    pub fn trace(&self, a: &ExtElement) -> BaseRational {
        let t = &a.x.scale(&BigInt::from(2)) - &(&self.w * &a.y);
        BaseRational::new(t, a.den.clone()).expect("positive denominator")
    }

    pub fn inv(&self, a: &ExtElement) -> Result<ExtElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.rel_norm(a);
        Ok(self.conj(a).div_base(&n).expect("nonzero norm"))
    }

    pub fn div(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `tau(x + y Omega) = y`.
    pub fn tau(&self, a: &ExtElement) -> BaseRational {
        a.y_coord()
    }

    /// `sqrt D = w + 2 Omega`.
    pub fn sqrt_d(&self) -> ExtElement {
        ExtElement::integral(self.w.clone(), self.field().int(2))
    }

    /// Whether `a` lies in `O_L = [1, Omega]`.
    pub fn is_integral(&self, a: &ExtElement) -> bool {
        a.den.is_one()
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(sqrt({})), Omega^2 + ({})Omega + ({}) = 0", self.field(), self.d, self.w, self.z)
    }
}

/// Operation selector for [`Extension::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element `(x + y Omega) / den` of `L` with a single shared positive
/// denominator, content reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElement {
    x: BaseElement,
    y: BaseElement,
    den: BigInt,
}

impl ExtElement {
    pub fn new(x: BaseElement, y: BaseElement, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(x.field(), y.field());
        let mut e = ExtElement { x, y, den };
        e.normalize();
        e
    }

    pub fn integral(x: BaseElement, y: BaseElement) -> Self {
        ExtElement::new(x, y, BigInt::one())
    }

    pub fn from_base(x: &BaseElement) -> Self {
        ExtElement::integral(x.clone(), x.field().zero())
    }

    /// `x + y Omega` from rational coordinates.
    pub fn from_rationals(x: &BaseRational, y: &BaseRational) -> Self {
        let den = x.denom().lcm(y.denom());
        let xn = x.numer().scale(&(&den / x.denom()));
        let yn = y.numer().scale(&(&den / y.denom()));
        ExtElement::new(xn, yn, den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.x = -self.x.clone();
            self.y = -self.y.clone();
            self.den = -self.den.clone();
        }
        let g = self.x.content().gcd(&self.y.content()).gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            let k = self.x.field();
            let div = |e: &BaseElement| BaseElement::from_coords(k, &e.coords().iter().map(|c| c / &g).collect::<Vec<_>>());
            self.x = div(&self.x);
            self.y = div(&self.y);
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> BaseField {
        self.x.field()
    }

    pub fn x_coord(&self) -> BaseRational {
        BaseRational::new(self.x.clone(), self.den.clone()).expect("positive denominator")
    }

    pub fn y_coord(&self) -> BaseRational {
        BaseRational::new(self.y.clone(), self.den.clone()).expect("positive denominator")
    }

    /// Numerators over the shared denominator.
    pub fn numerators(&self) -> (&BaseElement, &BaseElement) {
        (&self.x, &self.y)
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Whether this lies in `K`.
    pub fn is_base(&self) -> bool {
        self.y.is_zero()
    }

    pub fn scale_base(&self, k: &BaseElement) -> ExtElement {
        ExtElement::new(&self.x * k, &self.y * k, self.den.clone())
    }

    pub fn scale_rational(&self, k: &BaseRational) -> ExtElement {
        ExtElement::new(&self.x * k.numer(), &self.y * k.numer(), &self.den * k.denom())
    }

    pub fn div_base(&self, k: &BaseRational) -> Result<ExtElement> {
        Ok(self.scale_rational(&k.inv()?))
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => format!("{}", self.x),
            (true, false) => format!("({})Ω", self.y),
            (false, false) => format!("{} + ({})Ω", self.x, self.y),
        };
        if self.den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "[{body}]/{}", self.den)
        }
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: &ExtElement) -> ExtElement {
        let x = &self.x.scale(&rhs.den) + &rhs.x.scale(&self.den);
        let y = &self.y.scale(&rhs.den) + &rhs.y.scale(&self.den);
        ExtElement::new(x, y, &self.den * &rhs.den)
    }
}

impl Sub<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: &ExtElement) -> ExtElement {
        self + &(-rhs)
    }
}

impl Neg for &ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        ExtElement { x: -self.x.clone(), y: -self.y.clone(), den: self.den.clone() }
    }
}

impl Neg for ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        -&self
    }
}
