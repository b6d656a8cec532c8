//! Seeded sample streams and brute-force checkers that do not share code
//! paths with the main library.

mod lattice;
mod scan;

pub use lattice::{naive_module_product, ProductAudit, ZLattice};
pub use scan::{class_number_crosscheck, naive_class_number, scan_cube_law, ClassGroupReport, CubeLawReport};

use crate::base::{BaseElement, BaseField, SignVector};
use crate::cube::{phi_prime, Cube};
use crate::error::Result;
use crate::extension::{ExtElement, Extension};
use crate::forms::{psi_map, QuadForm};
use crate::ideal::OrientedIdeal;
use crate::matrix::Mat2;
use crate::triple::{scale_ideal, triple_from_pair};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Parameters of a reproducible sample stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub entry_bound: i64,
    pub count: usize,
    #[serde(serialize_with = "field_name")]
    pub tier: BaseField,
}

fn field_name<S: serde::Serializer>(k: &BaseField, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(k.name())
}

impl RandomSpec {
    pub fn new(seed: u64, entry_bound: i64, count: usize, tier: BaseField) -> Self {
        RandomSpec { seed, entry_bound, count, tier }
    }

    /// A spec with the same parameters and a seed derived from `label`, so that
    /// independent suites draw independent streams.
    pub fn derive(&self, label: &str) -> Self {
        let h = label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        RandomSpec { seed: self.seed ^ h, ..*self }
    }

    pub fn sampler(&self) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(self.seed), tier: self.tier, bound: self.entry_bound }
    }
}

/// Random algebraic objects over one base field.
pub struct Sampler {
    rng: ChaCha8Rng,
    tier: BaseField,
    bound: i64,
}

const ATTEMPTS: usize = 100_000;

impl Sampler {
    pub fn tier(&self) -> BaseField {
        self.tier
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.rng.gen_range(0..xs.len())]
    }

    /// Element with every coordinate in `[-b, b]`.
    pub fn elem(&mut self, b: i64) -> BaseElement {
        match self.tier {
            BaseField::Rational => self.tier.int(self.int(-b, b)),
            BaseField::Sqrt2 => {
                let (u, v) = (self.int(-b, b), self.int(-b, b));
                self.tier.elem(u, v)
            }
        }
    }

    pub fn nonzero_elem(&mut self, b: i64) -> BaseElement {
        loop {
            let x = self.elem(b);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// `+-eps^k` with `|k| <= 2`.
    pub fn unit(&mut self) -> BaseElement {
        let k = self.int(-2, 2);
        let eps = self.tier.fundamental_unit();
        let base = if k < 0 { eps.unit_inverse().expect("unit") } else { eps };
        let u = base.pow(k.unsigned_abs() as u32);
        if self.rng.gen() {
            u
        } else {
            -u
        }
    }

    /// `lambda^k` with `|k| <= 1`; always `1` over `Q`.
    pub fn totally_positive_unit(&mut self) -> BaseElement {
        match self.tier.totally_positive_unit_generator() {
            None => self.tier.one(),
            Some(l) => match self.int(-1, 1) {
                -1 => l.unit_inverse().expect("unit"),
                0 => self.tier.one(),
                _ => l,
            },
        }
    }

    pub fn sign_vector(&mut self) -> SignVector {
        let all = self.tier.all_sign_vectors();
        self.pick(&all).clone()
    }

    /// Matrix with entries in `[-b, b]` and nonzero determinant.
    pub fn matrix(&mut self) -> Mat2 {
        let b = self.bound;
        loop {
            let m = Mat2::new(self.elem(b), self.elem(b), self.elem(b), self.elem(b));
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    /// Product of elementary shears and a diagonal totally positive unit:
    /// determinant is a totally positive unit.
    pub fn proper_matrix(&mut self) -> Mat2 {
        let k = self.tier;
        Mat2::new(self.totally_positive_unit(), k.zero(), k.zero(), k.one()).mul(&self.sl2())
    }

    /// Product of three random elementary shears.
    pub fn sl2(&mut self) -> Mat2 {
        let k = self.tier;
        let mut m = Mat2::identity(k);
        for _ in 0..3 {
            let x = self.elem(2);
            let e = if self.rng.gen() {
                Mat2::new(k.one(), x, k.zero(), k.one())
            } else {
                Mat2::new(k.one(), k.zero(), x, k.one())
            };
            m = m.mul(&e);
        }
        m
    }

    /// Invertible matrix whose determinant is an arbitrary unit.
    pub fn unimodular(&mut self) -> Mat2 {
        let k = self.tier;
        Mat2::new(self.unit(), k.zero(), k.zero(), k.one()).mul(&self.proper_matrix())
    }

    /// A nonzero fundamental non-square element with coordinates in `[-b, b]`.
    pub fn extension(&mut self, b: i64) -> Extension {
        for _ in 0..ATTEMPTS {
            if let Ok(e) = Extension::new(self.nonzero_elem(b)) {
                return e;
            }
        }
        panic!("no fundamental discriminant found in range {b}")
    }

    /// Primitive form of discriminant exactly `D`, moved by a random shear product.
    pub fn primitive_form(&mut self, ext: &Extension) -> QuadForm {
        let b = self.bound.max(2);
        for _ in 0..ATTEMPTS {
            let a = self.nonzero_elem(b);
            let bb = self.elem(2 * b + 1);
            let num = &(&bb * &bb) - ext.d();
            let Some(c) = num.div_exact(&a.scale(&BigInt::from(4))) else { continue };
            let q = QuadForm::new(a, bb, c);
            if q.is_primitive() {
                return q.substitute(&self.sl2());
            }
        }
        panic!("no primitive form found for D = {}", ext.d())
    }

    /// Nonzero `(x + y Omega)/den` with small coordinates.
    pub fn ext_element(&mut self) -> ExtElement {
        loop {
            let (x, y) = (self.elem(3), self.elem(3));
            let den = BigInt::from(self.int(1, 4));
            let e = ExtElement::new(x, y, den);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// A valid oriented ideal: an image of `psi_map`, scaled, rebased and
    /// given an arbitrary orientation.
    pub fn ideal(&mut self, ext: &Extension) -> OrientedIdeal {
        let q = self.primitive_form(ext);
        let i = psi_map(ext, &q).expect("primitive forms of disc D are in the domain");
        let kappa = self.ext_element();
        let i = scale_ideal(ext, &i, &kappa).expect("kappa is nonzero");
        let m = self.unimodular();
        i.rebase(&m.p, &m.q, &m.r, &m.s).with_eps(self.sign_vector())
    }

    /// `(1, 0, 0, d, 0, f, g, h)` together with an extension `L` such that
    /// `disc = u^2 D` for the returned totally positive unit `u`.
    ///
    /// Over `Q(sqrt 2)` the extension is taken at `disc / u^2` for a random
    /// `u` in `{lambda^-1, 1, lambda}`.
    pub fn reduced_cube(&mut self) -> (Cube, Extension, BaseElement) {
        let k = self.tier;
        let b = self.bound;
        for _ in 0..ATTEMPTS {
            let (d, f, g, h) = (self.elem(b), self.elem(b), self.elem(b), self.elem(b));
            let a = Cube::new([k.one(), k.zero(), k.zero(), d, k.zero(), f, g, h]);
            let u = self.totally_positive_unit();
            let Some(dd) = a.disc().div_exact(&(&u * &u)) else { continue };
            if let Ok(ext) = Extension::new(dd) {
                return (a, ext, u);
            }
        }
        panic!("no reduced cube with fundamental discriminant in range {b}")
    }

    /// A projective cube of discriminant `D`: `phi_prime` of a random balanced
    /// triple, moved by random invertible matrices on every axis.
    pub fn projective_cube(&mut self, ext: &Extension) -> Result<Cube> {
        let (j1, j2) = (self.ideal(ext), self.ideal(ext));
        let t = triple_from_pair(ext, &j1, &j2)?;
        let mut c = phi_prime(ext, &t)?;
        for axis in 1..=3 {
            c = c.act_axis(axis, &self.proper_matrix());
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        for tier in [BaseField::Rational, BaseField::Sqrt2] {
            let spec = RandomSpec::new(7, 3, 10, tier);
            let (mut s1, mut s2) = (spec.sampler(), spec.sampler());
            for _ in 0..10 {
                assert_eq!(s1.reduced_cube().0, s2.reduced_cube().0);
                assert_eq!(s1.matrix(), s2.matrix());
            }
            assert_ne!(spec.derive("a").seed, spec.derive("b").seed);
        }
    }

    #[test]
    fn samplers_respect_contracts() {
        for tier in [BaseField::Rational, BaseField::Sqrt2] {
            let mut s = RandomSpec::new(11, 2, 0, tier).sampler();
            for _ in 0..20 {
                assert!(s.proper_matrix().is_proper());
                assert!(s.sl2().det().is_one());
                assert!(s.unimodular().det().is_unit());
                let ext = s.extension(3);
                let q = s.primitive_form(&ext);
                assert_eq!(&q.disc(), ext.d());
                assert!(q.is_primitive());
                let (c, ext, u) = s.reduced_cube();
                assert_eq!(c.disc(), ext.d() * &(&u * &u));
                assert!(s.projective_cube(&ext).unwrap().is_projective());
            }
        }
    }
}
