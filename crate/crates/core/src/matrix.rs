//! 2x2 matrices over `O_K`.

use crate::base::{BaseElement, BaseField};
use crate::error::{Error, Result};
use std::fmt;

/// `(p q; r s)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub p: BaseElement,
    pub q: BaseElement,
    pub r: BaseElement,
    pub s: BaseElement,
}

impl Mat2 {
    pub fn new(p: BaseElement, q: BaseElement, r: BaseElement, s: BaseElement) -> Self {
        Mat2 { p, q, r, s }
    }

    pub fn from_ints(k: BaseField, p: i64, q: i64, r: i64, s: i64) -> Self {
        Mat2::new(k.int(p), k.int(q), k.int(r), k.int(s))
    }

    pub fn identity(k: BaseField) -> Self {
        Mat2::from_ints(k, 1, 0, 0, 1)
    }

    pub fn field(&self) -> BaseField {
        self.p.field()
    }

    pub fn det(&self) -> BaseElement {
        &(&self.p * &self.s) - &(&self.q * &self.r)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            p: &(&self.p * &o.p) + &(&self.q * &o.r),
            q: &(&self.p * &o.q) + &(&self.q * &o.s),
            r: &(&self.r * &o.p) + &(&self.s * &o.r),
            s: &(&self.r * &o.q) + &(&self.s * &o.s),
        }
    }

    /// Inverse, for unit determinant.
    pub fn inverse(&self) -> Result<Mat2> {
        let di = self.det().unit_inverse()?;
        Ok(Mat2 { p: &self.s * &di, q: -(&self.q * &di), r: -(&self.r * &di), s: &self.p * &di })
    }

    /// Determinant is a totally positive unit.
    pub fn is_proper(&self) -> bool {
        let d = self.det();
        d.is_unit() && d.is_totally_positive()
    }

    pub fn check_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::DeterminantNotTotallyPositiveUnit)
        }
    }

    pub fn entries(&self) -> [&BaseElement; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.p, self.q, self.r, self.s)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
