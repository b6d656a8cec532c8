//! Exact arithmetic in the ring of integers `O_K` of a base field of narrow
//! class number one.
//!
//! Two base fields are shipped: `Q` and `Q(sqrt 2)`. Elements are written
//! `u + v*theta` over the integral basis `[1, theta]`, where `theta` satisfies
//! `theta^2 = t*theta + n`. For `Q` the coordinate `v` is always zero.
//!
//! The real embeddings are ordered so that `sigma_1(theta)` is the larger real
//! root of `x^2 - t x - n`; for `Q(sqrt 2)` this means `sigma_1(sqrt 2) = +sqrt 2`.
//! Swapping the labels flips every orientation coherently.

mod element;
mod euclid;
pub(crate) mod factor;
mod hnf;
mod rational;

pub use element::{BaseElement, SignVector};
pub use euclid::{canonical_associate, divmod_euclid, extended_gcd, gcd, residue_mod};
pub use factor::{factor_element, is_qr_mod4, DEFAULT_NORM_BOUND};
pub use hnf::{hnf_rank2, HnfBasis, HnfCertificate};
pub use rational::BaseRational;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

/// The base field `K`; doubles as its descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseField {
    /// `K = Q`, `O_K = Z`.
    Rational,
    /// `K = Q(sqrt 2)`, `O_K = Z[sqrt 2]`.
    Sqrt2,
}

impl BaseField {
    /// `(t, n)` in `theta^2 = t*theta + n`, or `None` for `Q`.
    pub fn theta_relation(self) -> Option<(i64, i64)> {
        match self {
            BaseField::Rational => None,
            BaseField::Sqrt2 => Some((0, 2)),
        }
    }

    /// Number of real embeddings.
    pub fn r(self) -> usize {
        match self {
            BaseField::Rational => 1,
            BaseField::Sqrt2 => 2,
        }
    }

    pub fn degree(self) -> usize {
        self.r()
    }

    /// `-1` for `Q`, `1 + sqrt 2` for `Q(sqrt 2)`.
    pub fn fundamental_unit(self) -> BaseElement {
        match self {
            BaseField::Rational => self.int(-1),
            BaseField::Sqrt2 => self.elem(1, 1),
        }
    }

    /// Generator of the group of totally positive units (`None` when it is trivial).
    pub fn totally_positive_unit_generator(self) -> Option<BaseElement> {
        match self {
            BaseField::Rational => None,
            BaseField::Sqrt2 => {
                let eps = self.fundamental_unit();
                [eps.clone(), -eps.clone(), &eps * &eps]
                    .into_iter()
                    .find(|c| c.is_totally_positive())
            }
        }
    }

    pub fn zero(self) -> BaseElement {
        BaseElement::new(self, BigInt::from(0), BigInt::from(0))
    }

    pub fn one(self) -> BaseElement {
        self.int(1)
    }

    pub fn int(self, u: i64) -> BaseElement {
        BaseElement::new(self, BigInt::from(u), BigInt::from(0))
    }

    pub fn from_bigint(self, u: BigInt) -> BaseElement {
        BaseElement::new(self, u, BigInt::from(0))
    }

    /// `u + v*theta`. Panics if `v != 0` over `Q`.
    pub fn elem(self, u: i64, v: i64) -> BaseElement {
        BaseElement::new(self, BigInt::from(u), BigInt::from(v))
    }

    /// The generator `theta` of the integral basis (`None` for `Q`).
    pub fn theta(self) -> Option<BaseElement> {
        self.theta_relation().map(|_| self.elem(0, 1))
    }

    /// A complete residue system modulo `2 O_K`, in ascending coordinate order.
    pub fn residues_mod2(self) -> Vec<BaseElement> {
        match self {
            BaseField::Rational => vec![self.int(0), self.int(1)],
            BaseField::Sqrt2 => vec![
                self.elem(0, 0),
                self.elem(1, 0),
                self.elem(0, 1),
                self.elem(1, 1),
            ],
        }
    }

    /// Every sign vector of length `r`, in a fixed order starting with all `+`.
    pub fn all_sign_vectors(self) -> Vec<SignVector> {
        let r = self.r();
        (0..1usize << r)
            .map(|mask| SignVector::new((0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()))
            .collect()
    }

    /// A unit whose sign vector equals `target`.
    ///
    /// The search runs over `±eps^k` for `k = 0, 1` (in that order), which
    /// covers every sign pattern for the shipped fields.
    pub fn unit_with_signs(self, target: &SignVector) -> BaseElement {
        assert_eq!(target.len(), self.r(), "sign vector length must equal r");
        let eps = self.fundamental_unit();
        let mut power = self.one();
        for _ in 0..2 {
            for cand in [power.clone(), -power.clone()] {
                if cand.sign_vector().expect("units are nonzero") == *target {
                    return cand;
                }
            }
            power = &power * &eps;
        }
        unreachable!("shipped fields have narrow class number one")
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseField::Rational => "Q",
            BaseField::Sqrt2 => "Q-sqrt2",
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(BaseField::Rational),
            "Q-sqrt2" => Ok(BaseField::Sqrt2),
            other => Err(Error::OutOfRange(format!("unknown field {other}"))),
        }
    }
}

/// Ring operation selector for [`base_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Checked ring operation; `Neg` ignores `y` apart from the descriptor check.
pub fn base_arith(op: ArithOp, x: &BaseElement, y: &BaseElement) -> Result<BaseElement> {
    if x.field() != y.field() {
        return Err(Error::DescriptorMismatch);
    }
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Neg => -x.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_examples() {
        let k = BaseField::Sqrt2;
        let a = k.elem(1, 1);
        let b = k.elem(1, -1);
        assert_eq!(base_arith(ArithOp::Mul, &a, &b).unwrap(), k.int(-1));
        let s = k.elem(0, 1);
        assert_eq!(&s * &s, k.int(2));
        let q = BaseField::Rational;
        assert!(base_arith(ArithOp::Add, &q.int(3), &q.int(-3)).unwrap().is_zero());
        assert_eq!(base_arith(ArithOp::Add, &q.int(1), &k.int(1)), Err(Error::DescriptorMismatch));
    }

    #[test]
    fn unit_with_signs_examples() {
        let q = BaseField::Rational;
        assert_eq!(q.unit_with_signs(&SignVector::new(vec![-1])), q.int(-1));
        let k = BaseField::Sqrt2;
        assert_eq!(k.unit_with_signs(&SignVector::new(vec![1, 1])), k.one());
        assert_eq!(k.unit_with_signs(&SignVector::new(vec![-1, 1])), k.elem(-1, -1));
        for s in k.all_sign_vectors() {
            let u = k.unit_with_signs(&s);
            assert_eq!(u.sign_vector().unwrap(), s);
            assert!(u.is_unit());
        }
    }

    #[test]
    fn totally_positive_generator() {
        assert_eq!(BaseField::Sqrt2.totally_positive_unit_generator(), Some(BaseField::Sqrt2.elem(3, 2)));
        assert_eq!(BaseField::Rational.totally_positive_unit_generator(), None);
    }
}
