use super::{reduce_cube, Cube};
use crate::base::{BaseElement, BaseRational};
use crate::error::{Error, Result};
use crate::extension::{ExtElement, Extension};
use crate::forms::orbit_unit;
use crate::ideal::OrientedIdeal;
use crate::triple::BalancedTriple;
use num_bigint::BigInt;

/// `(tau(alpha_i beta_j gamma_k))` for a balanced triple.
pub fn phi_prime(ext: &Extension, t: &BalancedTriple) -> Result<Cube> {
    let [i1, i2, i3] = t.ideals();
    if !(i1.is_aligned(ext) && i2.is_aligned(ext) && i3.is_aligned(ext)) {
        return Err(Error::AlignmentViolated);
    }
    let basis = |i: &OrientedIdeal| [i.alpha().clone(), i.beta().clone()];
    let (a, b, c) = (basis(i1), basis(i2), basis(i3));
    let k = ext.field();
    let mut entries: [BaseElement; 8] = std::array::from_fn(|_| k.zero());
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                let x = ext.tau(&ext.mul3(&a[i], &b[j], &c[l]));
                entries[super::index(i, j, l)] = x.to_integral().map_err(|_| Error::NonIntegralEntry(x.to_string()))?;
            }
        }
    }
    Ok(Cube::new(entries))
}

/// The balanced triple of a reduced cube `(1, 0, 0, d, 0, f, g, h)` with
/// `disc = u^2 D`:
/// `([-d, omega], [-g, omega], [conj(omega)/(dg), 1])`, `omega = (-h + u sqrt D)/2`.
///
/// The modules and orientations are those of `(Psi(Q1), Psi(Q2), (Psi(Q1)Psi(Q2))^-1)`
/// and the bases are chosen so that `phi_prime` returns exactly `-u A`.
fn reduced_triple(ext: &Extension, a: &Cube) -> Result<BalancedTriple> {
    let [d, _f, g, h] = super::reduced_parts(a).expect("reduced cube");
    let u = orbit_unit(ext, &a.disc())?;
    let omega = ExtElement::new(&(&u * ext.w()) - &h, u.scale(&BigInt::from(2)), BigInt::from(2));
    if !ext.is_integral(&omega) {
        return Err(Error::NonIntegral(omega.to_string()));
    }
    let dg = &d * &g;
    let j1 = OrientedIdeal::new(ext, ExtElement::from_base(&-d.clone()), omega.clone(), (-d.clone()).sign_vector()?)?;
    let j2 = OrientedIdeal::new(ext, ExtElement::from_base(&-g.clone()), omega.clone(), (-g.clone()).sign_vector()?)?;
    let third = ext.conj(&omega).div_base(&BaseRational::from_int(dg.clone()))?;
    let j3 = OrientedIdeal::new(ext, third, ext.one(), dg.sign_vector()?)?;
    let t = BalancedTriple::new(ext, j1, j2, j3)?;
    debug_assert_eq!(t.witness_u(), &u.pow(3));
    Ok(t)
}

/// Balanced triple of a projective cube with discriminant in the orbit of `D`.
///
/// The cube is reduced, the triple of the reduced cube is built, and the
/// inverse reduction steps are applied as basis changes, so that
/// `phi_prime(psi_prime(A)) = -u A` for `disc A = u^2 D`.
pub fn psi_prime(ext: &Extension, a: &Cube) -> Result<BalancedTriple> {
    if a.field() != ext.field() {
        return Err(Error::DescriptorMismatch);
    }
    if !a.is_projective() {
        return Err(Error::NotProjective);
    }
    orbit_unit(ext, &a.disc())?;
    let (r, transcript) = reduce_cube(a)?;
    let mut t = reduced_triple(ext, &r)?;
    for (axis, m) in transcript.steps.iter().rev() {
        t = t.rebase(axis - 1, &m.inverse()?)?;
    }
    Ok(t)
}

/// Product of two cubes: componentwise product of their balanced triples.
///
/// The product of two balanced triples is balanced, so no principal generator
/// has to be extracted and both base fields are supported.
pub fn compose_cubes(ext: &Extension, a: &Cube, b: &Cube) -> Result<Cube> {
    let t = psi_prime(ext, a)?.mul(ext, &psi_prime(ext, b)?)?;
    phi_prime(ext, &t)
}
