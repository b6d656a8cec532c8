//! 2x2x2 cubes over `O_K`.
//!
//! Entries are stored as `(a, b, c, d, e, f, g, h)` =
//! `(a111, a121, a112, a122, a211, a221, a212, a222)`, so the entry `a_{ijk}`
//! sits at index `4(i-1) + (j-1) + 2(k-1)`. Axis 1 runs over `i`, axis 2 over
//! `j`, axis 3 over `k`.

mod compose;
mod reduce;

pub use compose::{compose_cubes, phi_prime, psi_prime};
pub use reduce::{reduce_cube, reduced_parts, CubeTranscript};

use crate::base::{BaseElement, BaseField};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::forms::QuadForm;
use crate::matrix::Mat2;
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    entries: [BaseElement; 8],
}

/// Flat index of `a_{ijk}`, with `i, j, k` in `{0, 1}`.
pub fn index(i: usize, j: usize, k: usize) -> usize {
    4 * i + j + 2 * k
}

/// Pairs of flat positions `(layer 0, layer 1)` along `axis` (1, 2 or 3).
pub fn axis_pairs(axis: usize) -> [(usize, usize); 4] {
    let mut out = [(0, 0); 4];
    let mut n = 0;
    for x in 0..2 {
        for y in 0..2 {
            out[n] = match axis {
                1 => (index(0, x, y), index(1, x, y)),
                2 => (index(x, 0, y), index(x, 1, y)),
                3 => (index(x, y, 0), index(x, y, 1)),
                _ => panic!("axis must be 1, 2 or 3"),
            };
            n += 1;
        }
    }
    out
}

/// Unit scalar and matrices `T1, T2, T3` with totally positive unit
/// determinants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement {
    pub t: [Mat2; 3],
    pub u: BaseElement,
}

impl GammaElement {
    pub fn new(t1: Mat2, t2: Mat2, t3: Mat2, u: BaseElement) -> Result<Self> {
        for t in [&t1, &t2, &t3] {
            t.check_proper()?;
        }
        if !u.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(GammaElement { t: [t1, t2, t3], u })
    }

    pub fn identity(k: BaseField) -> Self {
        GammaElement { t: [Mat2::identity(k), Mat2::identity(k), Mat2::identity(k)], u: k.one() }
    }
}

impl Cube {
    pub fn new(entries: [BaseElement; 8]) -> Self {
        let k = entries[0].field();
        assert!(entries.iter().all(|e| e.field() == k), "entries from different fields");
        Cube { entries }
    }

    pub fn from_ints(k: BaseField, v: [i64; 8]) -> Self {
        Cube::new(v.map(|x| k.int(x)))
    }

    pub fn zero(k: BaseField) -> Self {
        Cube::from_ints(k, [0; 8])
    }

    pub fn entries(&self) -> &[BaseElement; 8] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &BaseElement {
        &self.entries[index(i, j, k)]
    }

    pub fn field(&self) -> BaseField {
        self.entries[0].field()
    }

    pub fn scale(&self, u: &BaseElement) -> Cube {
        Cube { entries: self.entries.clone().map(|e| &e * u) }
    }

    pub fn neg(&self) -> Cube {
        self.scale(&-self.field().one())
    }

    /// `(R_i, S_i)` for axis `i`.
    pub fn slices(&self, axis: usize) -> (Mat2, Mat2) {
        let e = &self.entries;
        let [a, b, c, d, ee, f, g, h] = e.clone();
        match axis {
            1 => (Mat2::new(a, b, c, d), Mat2::new(ee, f, g, h)),
            2 => (Mat2::new(a, ee, c, g), Mat2::new(b, f, d, h)),
            3 => (Mat2::new(a, ee, b, f), Mat2::new(c, g, d, h)),
            _ => panic!("axis must be 1, 2 or 3"),
        }
    }

    /// Acts on one axis: layer 0 becomes `p L0 + q L1`, layer 1 becomes `r L0 + s L1`.
    /// No condition on the matrix.
    pub fn act_axis(&self, axis: usize, t: &Mat2) -> Cube {
        let mut out = self.entries.clone();
        for (p0, p1) in axis_pairs(axis) {
            let (x0, x1) = (&self.entries[p0], &self.entries[p1]);
            out[p0] = &(&t.p * x0) + &(&t.q * x1);
            out[p1] = &(&t.r * x0) + &(&t.s * x1);
        }
        Cube { entries: out }
    }

    /// `u (T1 x T2 x T3)(A)`.
    pub fn act(&self, g: &GammaElement) -> Cube {
        self.act_axis(1, &g.t[0]).act_axis(2, &g.t[1]).act_axis(3, &g.t[2]).scale(&g.u)
    }

    /// The three attached forms `Q_i(x, y) = -det(R_i x - S_i y)`.
    pub fn attached_forms(&self) -> [QuadForm; 3] {
        let forms = [1, 2, 3].map(|axis| {
            let (r, s) = self.slices(axis);
            det_form(&r, &s)
        });
        debug_assert_eq!(forms[0], self.q1_expanded());
        forms
    }

    /// `(bc - ad, ah - bg - cf + de, fg - eh)`.
    fn q1_expanded(&self) -> QuadForm {
        let [a, b, c, d, e, f, g, h] = &self.entries;
        QuadForm::new(
            &(b * c) - &(a * d),
            &(&(&(a * h) - &(b * g)) - &(c * f)) + &(d * e),
            &(f * g) - &(e * h),
        )
    }

    /// Closed-form discriminant.
    pub fn disc(&self) -> BaseElement {
        let [a, b, c, d, e, f, g, h] = &self.entries;
        let sq = |x: &BaseElement, y: &BaseElement| {
            let p = x * y;
            &p * &p
        };
        let squares = &(&(&sq(a, h) + &sq(b, g)) + &sq(c, f)) + &sq(d, e);
        let mixed = [
            a * &(&(b * g) * h),
            c * &(&(d * e) * f),
            a * &(&(c * f) * h),
            b * &(&(d * e) * g),
            a * &(&(d * e) * h),
            b * &(&(c * f) * g),
        ]
        .into_iter()
        .fold(self.field().zero(), |acc, x| &acc + &x);
        let quart = &(a * &(&(d * f) * g)) + &(b * &(&(c * e) * h));
        &(&squares - &mixed.scale(&BigInt::from(2))) + &quart.scale(&BigInt::from(4))
    }

    pub fn is_projective(&self) -> bool {
        self.attached_forms().iter().all(QuadForm::is_primitive)
    }

    /// `(-1)^{i+j+k}` sign pattern `(-a, b, c, -d, e, -f, -g, h)`.
    pub fn inverse(&self) -> Cube {
        let mut out = self.entries.clone();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    if (i + j + k) % 2 == 0 {
                        let n = index(i, j, k);
                        out[n] = -out[n].clone();
                    }
                }
            }
        }
        Cube { entries: out }
    }

    /// Shape `(1, 0, 0, d, 0, f, g, h)`.
    pub fn is_reduced(&self) -> bool {
        let e = &self.entries;
        e[0].is_one() && e[1].is_zero() && e[2].is_zero() && e[4].is_zero()
    }
}

/// `-det(R x - S y)` as a form in `x, y`.
fn det_form(r: &Mat2, s: &Mat2) -> QuadForm {
    // det(R x - S y) = det(R) x^2 - (r11 s22 + s11 r22 - r12 s21 - s12 r21) xy + det(S) y^2
    let mid = &(&(&(&r.p * &s.s) + &(&s.p * &r.s)) - &(&r.q * &s.r)) - &(&s.q * &r.r);
    QuadForm::new(-r.det(), mid, -s.det())
}

/// `(0, 1, 1, -w, 1, -w, -w, w^2 - z)`, whose three forms all equal `Q_id`.
pub fn identity_cube(ext: &Extension) -> Cube {
    let k = ext.field();
    let (w, z) = (ext.w().clone(), ext.z().clone());
    let c = Cube::new([k.zero(), k.one(), k.one(), -w.clone(), k.one(), -w.clone(), -w.clone(), &(&w * &w) - &z]);
    debug_assert!(c.attached_forms().iter().all(|f| *f == crate::forms::identity_form(ext)));
    c
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[{}, {}, {}, {}, {}, {}, {}, {}]", e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7])
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Cube {
    /// Two 2x2 layers, `i = 1` then `i = 2`, each with rows indexed by `j`.
    pub fn pretty(&self) -> String {
        let e: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let w = e.iter().map(String::len).max().unwrap_or(1);
        let row = |x: usize, y: usize| format!("  {:>w$}  {:>w$}", e[x], e[y]);
        format!(
            "i=1:\n{}\n{}\ni=2:\n{}\n{}",
            row(index(0, 0, 0), index(0, 0, 1)),
            row(index(0, 1, 0), index(0, 1, 1)),
            row(index(1, 0, 0), index(1, 0, 1)),
            row(index(1, 1, 0), index(1, 1, 1)),
        )
    }
}
