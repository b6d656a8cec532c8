//! Balanced triples of oriented ideals.

use crate::base::{BaseElement, BaseField, BaseRational};
use crate::error::{Error, Result};
use crate::extension::{ExtElement, Extension};
use crate::forms::{equivalent_forms, phi_map};
use crate::ideal::OrientedIdeal;
use std::fmt;

/// `(I1, I2, I3)` with `I1 I2 I3 = O_L` and `det M1 det M2 det M3` a totally
/// positive unit, stored as `witness_u`. Bases are kept aligned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTriple {
    ideals: [OrientedIdeal; 3],
    witness_u: BaseElement,
}

impl BalancedTriple {
    /// Aligns the three bases and validates the balance conditions.
    pub fn new(ext: &Extension, i1: OrientedIdeal, i2: OrientedIdeal, i3: OrientedIdeal) -> Result<Self> {
        let ideals = [i1.align_basis(ext), i2.align_basis(ext), i3.align_basis(ext)];
        let prod = ideals[0].mul(ext, &ideals[1])?.mul(ext, &ideals[2])?;
        if !prod.equal_modules(&OrientedIdeal::unit(ext)) {
            return Err(Error::ProductNotUnitIdeal);
        }
        let det = ideals.iter().fold(BaseRational::from_int(ext.field().one()), |acc, i| &acc * &i.det_m(ext));
        let u = det.to_integral().map_err(|_| Error::DetProductNotTotallyPositiveUnit)?;
        if !(u.is_unit() && u.is_totally_positive()) {
            return Err(Error::DetProductNotTotallyPositiveUnit);
        }
        Ok(BalancedTriple { ideals, witness_u: u })
    }

    /// `([1, Omega], [1, Omega], [1, Omega])`.
    pub fn identity(ext: &Extension) -> Self {
        let u = OrientedIdeal::unit(ext);
        BalancedTriple { ideals: [u.clone(), u.clone(), u], witness_u: ext.field().one() }
    }

    pub fn ideals(&self) -> &[OrientedIdeal; 3] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &OrientedIdeal {
        &self.ideals[i]
    }

    pub fn witness_u(&self) -> &BaseElement {
        &self.witness_u
    }

    pub fn field(&self) -> BaseField {
        self.witness_u.field()
    }

    /// Replaces the basis of ideal `axis` by `(p b1 + q b2, r b1 + s b2)`.
    ///
    /// `ps - qr` must be a totally positive unit, so alignment is kept and
    /// `witness_u` scales by it.
    pub fn rebase(&self, axis: usize, t: &crate::matrix::Mat2) -> Result<Self> {
        t.check_proper()?;
        let mut ideals = self.ideals.clone();
        ideals[axis] = ideals[axis].rebase(&t.p, &t.q, &t.r, &t.s);
        Ok(BalancedTriple { ideals, witness_u: &self.witness_u * &t.det() })
    }

    /// Componentwise product; the result is balanced again.
    pub fn mul(&self, ext: &Extension, other: &BalancedTriple) -> Result<Self> {
        let m = |i: usize| self.ideals[i].mul(ext, &other.ideals[i]);
        BalancedTriple::new(ext, m(0)?, m(1)?, m(2)?)
    }
}

impl fmt::Display for BalancedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}), u = {}", self.ideals[0], self.ideals[1], self.ideals[2], self.witness_u)
    }
}

pub fn make_balanced(ext: &Extension, i1: &OrientedIdeal, i2: &OrientedIdeal, i3: &OrientedIdeal) -> Result<BalancedTriple> {
    BalancedTriple::new(ext, i1.clone(), i2.clone(), i3.clone())
}

/// `(J1, J2, (J1 J2)^-1)`.
pub fn triple_from_pair(ext: &Extension, j1: &OrientedIdeal, j2: &OrientedIdeal) -> Result<BalancedTriple> {
    let j3 = j1.mul(ext, j2)?.inverse(ext);
    BalancedTriple::new(ext, j1.clone(), j2.clone(), j3)
}

/// `kappa * I`, oriented by the product with the signs of `N(kappa)`.
pub fn scale_ideal(ext: &Extension, i: &OrientedIdeal, kappa: &ExtElement) -> Result<OrientedIdeal> {
    if kappa.is_zero() {
        return Err(Error::ZeroInput);
    }
    let eps = i.eps().mul(&ext.rel_norm(kappa).sign_vector()?);
    OrientedIdeal::new(ext, ext.mul(kappa, i.alpha()), ext.mul(kappa, i.beta()), eps)
}

/// `((1/omega) J1, J2, J3)` for a triple whose product is `(omega)`.
pub fn rebalance_phi2(
    ext: &Extension,
    j1: &OrientedIdeal,
    j2: &OrientedIdeal,
    j3: &OrientedIdeal,
    omega: &ExtElement,
) -> Result<BalancedTriple> {
    let prod = j1.mul(ext, j2)?.mul(ext, j3)?;
    if !prod.same_oriented(&OrientedIdeal::principal(ext, omega)?) {
        return Err(Error::WitnessMismatch);
    }
    let j1 = scale_ideal(ext, j1, &ext.inv(omega)?)?;
    BalancedTriple::new(ext, j1, j2.clone(), j3.clone())
}

/// `(kappa1 I1, kappa2 I2, kappa3 I3)` for `kappa1 kappa2 kappa3` a unit of
/// `O_L` with totally positive norm.
pub fn scale_triple(ext: &Extension, t: &BalancedTriple, kappa: [&ExtElement; 3]) -> Result<BalancedTriple> {
    if kappa.iter().any(|k| k.is_zero()) {
        return Err(Error::ScaleNotAllowed);
    }
    let prod = ext.mul3(kappa[0], kappa[1], kappa[2]);
    let n = ext.rel_norm(&prod);
    if !ext.is_integral(&prod) || !n.is_unit() || !n.sign_vector()?.is_all_positive() {
        return Err(Error::ScaleNotAllowed);
    }
    let s = |i: usize| scale_ideal(ext, &t.ideals[i], kappa[i]);
    BalancedTriple::new(ext, s(0)?, s(1)?, s(2)?)
}

/// Componentwise equality of narrow form classes (`Q` only).
pub fn triples_equivalent(ext: &Extension, t1: &BalancedTriple, t2: &BalancedTriple) -> Result<bool> {
    if ext.field() != BaseField::Rational {
        return Err(Error::UnsupportedBaseField);
    }
    for (a, b) in t1.ideals.iter().zip(&t2.ideals) {
        if !equivalent_forms(&phi_map(ext, a)?, &phi_map(ext, b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
