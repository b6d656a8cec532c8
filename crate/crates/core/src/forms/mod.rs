//! Binary quadratic forms `a x^2 + b xy + c y^2` over `O_K` and their
//! correspondence with oriented ideals.

mod reduce;

pub use reduce::{cycle_of, enumerate_reduced, equivalent_forms, positive_classes, reduce_form, Definiteness, Reduction};

use crate::base::{gcd, BaseElement, BaseField, BaseRational};
use crate::error::{Error, Result};
use crate::extension::{ExtElement, Extension};
use crate::ideal::OrientedIdeal;
use crate::matrix::Mat2;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    pub a: BaseElement,
    pub b: BaseElement,
    pub c: BaseElement,
}

impl QuadForm {
    pub fn new(a: BaseElement, b: BaseElement, c: BaseElement) -> Self {
        assert!(a.field() == b.field() && b.field() == c.field(), "coefficients from different fields");
        QuadForm { a, b, c }
    }

    pub fn from_ints(k: BaseField, a: i64, b: i64, c: i64) -> Self {
        QuadForm::new(k.int(a), k.int(b), k.int(c))
    }

    pub fn field(&self) -> BaseField {
        self.a.field()
    }

    /// `b^2 - 4ac`.
    pub fn disc(&self) -> BaseElement {
        &(&self.b * &self.b) - &(&self.a * &self.c).scale(&BigInt::from(4))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// `gcd(a, b, c)` is a unit.
    pub fn is_primitive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let g = [&self.a, &self.b, &self.c]
            .into_iter()
            .filter(|x| !x.is_zero())
            .fold(self.field().zero(), |g, x| gcd(&g, x).expect("nonzero argument"));
        g.is_unit()
    }

    pub fn eval(&self, x: &BaseElement, y: &BaseElement) -> BaseElement {
        &(&(&self.a * &(x * x)) + &(&self.b * &(x * y))) + &(&self.c * &(y * y))
    }

    /// `Q(px + qy, rx + sy)`, with no condition on the matrix.
    pub fn substitute(&self, t: &Mat2) -> QuadForm {
        let (p, q, r, s) = (&t.p, &t.q, &t.r, &t.s);
        let two = BigInt::from(2);
        let a = &(&(&self.a * &(p * p)) + &(&self.b * &(p * r))) + &(&self.c * &(r * r));
        let b = &(&(&self.a * &(p * q)).scale(&two) + &(&self.b * &(&(p * s) + &(q * r)))) + &(&self.c * &(r * s)).scale(&two);
        let c = &(&(&self.a * &(q * q)) + &(&self.b * &(q * s))) + &(&self.c * &(s * s));
        QuadForm { a, b, c }
    }

    pub fn scale(&self, u: &BaseElement) -> QuadForm {
        QuadForm { a: &self.a * u, b: &self.b * u, c: &self.c * u }
    }

    /// `u * Q(px + qy, rx + sy)` for `det T` and `u` totally positive units.
    pub fn act(&self, t: &Mat2, u: &BaseElement) -> Result<QuadForm> {
        t.check_proper()?;
        if !(u.is_unit() && u.is_totally_positive()) {
            return Err(Error::NotAUnit);
        }
        Ok(self.substitute(t).scale(u))
    }

    /// `(a, -b, c)`.
    pub fn inverse(&self) -> QuadForm {
        QuadForm { a: self.a.clone(), b: -self.b.clone(), c: self.c.clone() }
    }

    pub fn neg(&self) -> QuadForm {
        QuadForm { a: -self.a.clone(), b: -self.b.clone(), c: -self.c.clone() }
    }

    /// Coefficients as machine integers (`Q` tier only, small values).
    pub fn as_tuple(&self) -> (BigInt, BigInt, BigInt) {
        (self.a.u().clone(), self.b.u().clone(), self.c.u().clone())
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |x: &BaseElement| {
            if !x.u().is_zero() && !x.v().is_zero() {
                format!("({x})")
            } else {
                x.to_string()
            }
        };
        write!(f, "{} x^2 + {} xy + {} y^2", wrap(&self.a), wrap(&self.b), wrap(&self.c))
    }
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `x^2 + w xy + z y^2`.
pub fn identity_form(ext: &Extension) -> QuadForm {
    QuadForm::new(ext.field().one(), ext.w().clone(), ext.z().clone())
}

/// The totally positive unit `u` with `disc = u^2 D`.
pub fn orbit_unit(ext: &Extension, disc: &BaseElement) -> Result<BaseElement> {
    let outside = || Error::DiscriminantOutsideOrbit(disc.to_string());
    let q = disc.div_exact(ext.d()).ok_or_else(outside)?;
    let s = q.sqrt().ok_or_else(outside)?;
    if !s.is_unit() {
        return Err(outside());
    }
    if s.is_totally_positive() {
        Ok(s)
    } else if (-s.clone()).is_totally_positive() {
        Ok(-s)
    } else {
        Err(outside())
    }
}

/// `Q -> ([a, (-b + sqrt Disc Q)/2]; sgn a)`.
///
/// A form with `a = 0` is first moved to `Q(x, y + kx)` for the least `k >= 1`
/// giving a nonzero leading coefficient.
pub fn psi_map(ext: &Extension, q: &QuadForm) -> Result<OrientedIdeal> {
    if q.field() != ext.field() {
        return Err(Error::DescriptorMismatch);
    }
    if !q.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let u = orbit_unit(ext, &q.disc())?;
    let k = ext.field();
    let mut q = q.clone();
    if q.a.is_zero() {
        let shifted = (1..=2)
            .map(|j| q.substitute(&Mat2::from_ints(k, 1, 0, j, 1)))
            .find(|f| !f.a.is_zero())
            .expect("a primitive form with a = 0 has b or c nonzero");
        q = shifted;
    }
    let alpha = ExtElement::from_base(&q.a);
    let beta = ExtElement::new(&(&u * ext.w()) - &q.b, u.scale(&BigInt::from(2)), BigInt::from(2));
    if !beta.denom().is_one() {
        return Err(Error::NonIntegral(beta.to_string()));
    }
    OrientedIdeal::new(ext, alpha, beta, q.a.sign_vector()?)
}

/// `I -> (N(alpha), -Tr(conj(alpha) beta), N(beta)) / det M` for an aligned ideal.
pub fn phi_map(ext: &Extension, i: &OrientedIdeal) -> Result<QuadForm> {
    if !i.is_aligned(ext) {
        return Err(Error::AlignmentViolated);
    }
    let d = i.det_m(ext);
    let cross = ext.mul(&ext.conj(i.alpha()), i.beta());
    let coeff = |x: BaseRational| x.div(&d).and_then(|v| v.to_integral());
    Ok(QuadForm::new(
        coeff(ext.rel_norm(i.alpha()))?,
        coeff(-ext.trace(&cross))?,
        coeff(ext.rel_norm(i.beta()))?,
    ))
}

/// Composition through ideal multiplication.
pub fn compose_forms(ext: &Extension, q1: &QuadForm, q2: &QuadForm) -> Result<QuadForm> {
    let i = psi_map(ext, q1)?.mul(ext, &psi_map(ext, q2)?)?;
    phi_map(ext, &i.align_basis(ext))
}

/// Identity `Q(x, y) = Q'(x, y)` checked on the coefficients.
pub fn forms_equal_up_to_scalar(q1: &QuadForm, q2: &QuadForm) -> Option<BaseElement> {
    let pairs = [(&q1.a, &q2.a), (&q1.b, &q2.b), (&q1.c, &q2.c)];
    let (x, y) = pairs.iter().find(|(x, _)| !x.is_zero())?;
    let u = y.div_exact(x)?;
    pairs.iter().all(|(x, y)| &(*x * &u) == *y).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::SignVector;

    fn q() -> BaseField {
        BaseField::Rational
    }

    fn ext(d: i64) -> Extension {
        Extension::new(q().int(d)).unwrap()
    }

    fn f(a: i64, b: i64, c: i64) -> QuadForm {
        QuadForm::from_ints(q(), a, b, c)
    }

    #[test]
    fn disc_and_primitivity() {
        assert_eq!(f(1, 0, 1).disc(), q().int(-4));
        assert_eq!(f(-1, 1, 1).disc(), q().int(5));
        assert_eq!(identity_form(&ext(-4)).disc(), q().int(-4));
        assert!(!f(2, 2, 2).is_primitive());
        assert!(f(2, 1, 3).is_primitive());
        let k = BaseField::Sqrt2;
        let r2 = k.elem(0, 1);
        assert!(!QuadForm::new(r2.clone(), k.zero(), r2).is_primitive());
    }

    #[test]
    fn action_examples() {
        let k = q();
        assert_eq!(f(1, 0, 1).act(&Mat2::identity(k), &k.one()).unwrap(), f(1, 0, 1));
        assert_eq!(f(1, 0, 1).act(&Mat2::from_ints(k, 0, 1, -1, 0), &k.one()).unwrap(), f(1, 0, 1));
        let g = f(1, 0, 5).act(&Mat2::from_ints(k, 1, 1, 0, 1), &k.one()).unwrap();
        assert_eq!(g, f(1, 2, 6));
        assert_eq!(g.disc(), k.int(-20));
        assert_eq!(
            f(1, 0, 5).act(&Mat2::from_ints(k, 0, 1, 1, 0), &k.one()),
            Err(Error::DeterminantNotTotallyPositiveUnit)
        );
    }

    #[test]
    fn identity_forms() {
        assert_eq!(identity_form(&ext(-4)), f(1, 0, 1));
        assert_eq!(identity_form(&ext(5)), f(1, 1, -1));
        assert_eq!(identity_form(&ext(-20)), f(1, 0, 5));
        assert_eq!(f(2, 2, 3).inverse(), f(2, -2, 3));
    }

    #[test]
    fn psi_examples() {
        let l = ext(-4);
        let i = psi_map(&l, &f(1, 0, 1)).unwrap();
        assert_eq!((i.alpha(), i.beta()), (&l.one(), &l.omega()));
        assert_eq!(i.eps(), &SignVector::positive(1));
        let l5 = ext(-20);
        let p = psi_map(&l5, &f(2, 2, 3)).unwrap();
        assert_eq!(p.alpha(), &l5.from_base(&q().int(2)));
        assert_eq!(p.beta(), &ExtElement::integral(q().int(-1), q().one()));
        // reduced-cube form -d x^2 + h xy + fg y^2 with d = 1, h = 1, f = 1, g = 1: disc 5
        let l = ext(5);
        let j = psi_map(&l, &f(-1, 1, 1)).unwrap();
        assert_eq!(j.alpha(), &l.from_base(&q().int(-1)));
        assert_eq!(j.beta(), &ExtElement::integral(q().int(0), q().one()));
        assert_eq!(j.eps(), &SignVector::new(vec![-1]));
        assert_eq!(psi_map(&l5, &f(2, 2, 2)), Err(Error::NotPrimitive));
        assert!(matches!(psi_map(&l5, &f(1, 1, 1)), Err(Error::DiscriminantOutsideOrbit(_))));
        // a = 0 forces a square discriminant
        assert!(matches!(psi_map(&l, &f(0, 1, 1)), Err(Error::DiscriminantOutsideOrbit(_))));
    }

    #[test]
    fn phi_examples() {
        let l = ext(-4);
        assert_eq!(phi_map(&l, &OrientedIdeal::unit(&l)).unwrap(), f(1, 0, 1));
        let l5 = ext(-20);
        let p = OrientedIdeal::new(&l5, l5.from_base(&q().int(2)), ExtElement::integral(q().one(), q().one()), SignVector::positive(1))
            .unwrap();
        assert_eq!(phi_map(&l5, &p).unwrap(), f(2, -2, 3));
        let misaligned = OrientedIdeal::unit(&l).with_eps(SignVector::new(vec![-1]));
        assert_eq!(phi_map(&l, &misaligned), Err(Error::AlignmentViolated));
        assert_eq!(phi_map(&l, &misaligned.align_basis(&l)).unwrap(), f(-1, 0, -1));
    }

    #[test]
    fn orbit_over_sqrt2() {
        let k = BaseField::Sqrt2;
        let l = Extension::new(k.elem(-1, 2)).unwrap();
        let lam = k.elem(3, 2);
        assert_eq!(orbit_unit(&l, &(&(&lam * &lam) * l.d())).unwrap(), lam);
        assert!(orbit_unit(&l, &(&lam * l.d())).is_err());
        // psi of a twisted identity form validates
        assert!(psi_map(&l, &identity_form(&l).scale(&lam)).is_ok());
        let twisted = identity_form(&l).substitute(&Mat2::new(lam.clone(), k.zero(), k.zero(), k.one()));
        assert!(psi_map(&l, &twisted).is_ok());
    }
}
