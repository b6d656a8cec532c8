use super::Cube;
use crate::base::{extended_gcd, BaseElement};
use crate::error::{Error, Result};
use crate::matrix::Mat2;

/// Ordered single-axis actions and a unit scalar; replaying them on the source
/// cube gives the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeTranscript {
    pub steps: Vec<(usize, Mat2)>,
    pub scalar: BaseElement,
}

impl CubeTranscript {
    pub fn replay(&self, a: &Cube) -> Cube {
        self.steps.iter().fold(a.clone(), |c, (axis, t)| c.act_axis(*axis, t)).scale(&self.scalar)
    }
}

/// Position of the neighbour of the corner `a` along each axis: `e`, `b`, `c`.
const PARTNER: [(usize, usize); 3] = [(1, 4), (2, 1), (3, 2)];

struct Reducer {
    cube: Cube,
    steps: Vec<(usize, Mat2)>,
}

impl Reducer {
    fn apply(&mut self, axis: usize, t: Mat2) {
        self.cube = self.cube.act_axis(axis, &t);
        self.steps.push((axis, t));
    }

    fn at(&self, n: usize) -> &BaseElement {
        &self.cube.entries()[n]
    }

    /// Moves `gcd(a, x)` into the corner and zero into the partner `x`.
    fn gcd_step(&mut self, axis: usize, pos: usize) {
        let (a, x) = (self.at(0).clone(), self.at(pos).clone());
        let (g, s, t) = extended_gcd(&a, &x);
        let m = Mat2::new(s, t, -x.div_exact(&g).expect("gcd divides"), a.div_exact(&g).expect("gcd divides"));
        debug_assert!(m.det().is_one());
        self.apply(axis, m);
    }

    /// Clears the partner on `axis` using a corner that divides it.
    fn clear(&mut self, axis: usize, pos: usize) {
        let x = self.at(pos).clone();
        if x.is_zero() {
            return;
        }
        let k = x.field();
        let t = x.div_exact(self.at(0)).expect("corner divides partner");
        self.apply(axis, Mat2::new(k.one(), k.zero(), -t, k.one()));
    }

    /// Adds layer 1 to layer 0 on `axis`.
    fn shear(&mut self, axis: usize) {
        let k = self.cube.field();
        self.apply(axis, Mat2::new(k.one(), k.one(), k.zero(), k.one()));
    }
}

/// Brings a projective cube to the shape `(1, 0, 0, d, 0, f, g, h)` using
/// determinant-one axis actions only.
///
/// The corner is replaced by gcds with its neighbours until it is a unit; each
/// such step strictly lowers `|N(a)|`. When all neighbours are divisible by the
/// corner they are cleared and a shear brings a non-divisible entry next to it.
pub fn reduce_cube(a: &Cube) -> Result<(Cube, CubeTranscript)> {
    if !a.is_projective() {
        return Err(Error::NotProjective);
    }
    let k = a.field();
    let mut r = Reducer { cube: a.clone(), steps: Vec::new() };
    if !r.cube.is_reduced() {
        while !r.at(0).is_unit() {
            let corner = r.at(0).clone();
            if let Some(&(axis, pos)) = PARTNER.iter().find(|(_, p)| !corner.divides(r.at(*p))) {
                r.gcd_step(axis, pos);
                continue;
            }
            for (axis, pos) in PARTNER {
                r.clear(axis, pos);
            }
            let far = |n: usize, r: &Reducer| !corner.divides(r.at(n));
            // d = a122, g = a212 reach b and e by a shear on axis 3; f = a221
            // reaches e by a shear on axis 2; h reaches f by a shear on axis 3
            if far(3, &r) || far(6, &r) {
                r.shear(3);
            } else if far(5, &r) {
                r.shear(2);
            } else if far(7, &r) {
                r.shear(3);
            } else {
                unreachable!("projective cubes have unit content");
            }
        }
        let unit = r.at(0).clone();
        let inv = unit.unit_inverse()?;
        if !inv.is_one() {
            r.apply(1, Mat2::new(inv, k.zero(), k.zero(), unit));
        }
        for (axis, pos) in PARTNER {
            r.clear(axis, pos);
        }
    }
    debug_assert!(r.cube.is_reduced());
    let transcript = CubeTranscript { steps: r.steps, scalar: k.one() };
    debug_assert_eq!(transcript.replay(a), r.cube);
    Ok((r.cube, transcript))
}

/// `(d, f, g, h)` of a reduced cube.
pub fn reduced_parts(a: &Cube) -> Option<[BaseElement; 4]> {
    if !a.is_reduced() {
        return None;
    }
    let e = a.entries();
    Some([e[3].clone(), e[5].clone(), e[6].clone(), e[7].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseField;
    use proptest::prelude::*;

    fn q() -> BaseField {
        BaseField::Rational
    }

    fn check(a: &Cube) -> Cube {
        let (r, t) = reduce_cube(a).unwrap();
        assert!(r.is_reduced(), "{a} -> {r}");
        assert_eq!(t.replay(a), r);
        assert_eq!(r.disc(), a.disc());
        r
    }

    #[test]
    fn examples() {
        let a = Cube::from_ints(q(), [1, 0, 0, 2, 0, 3, 5, 7]);
        let (r, t) = reduce_cube(&a).unwrap();
        assert_eq!(r, a);
        assert!(t.steps.is_empty());
        check(&Cube::from_ints(q(), [0, 1, 1, 0, 1, 0, 0, -1]));
        check(&Cube::from_ints(q(), [2, 1, 1, 1, 1, 1, 1, 1]));
        check(&Cube::from_ints(q(), [0, 0, 0, 1, 0, 1, 1, 0]));
        check(&Cube::from_ints(q(), [6, 10, 15, 1, 4, 3, 9, 2]));
        assert_eq!(reduce_cube(&Cube::zero(q())), Err(Error::NotProjective));
        let k = BaseField::Sqrt2;
        let r = Cube::new([k.one(), k.zero(), k.zero(), k.elem(0, 1), k.zero(), k.int(3), k.elem(1, 1), k.int(5)]);
        let m = Mat2::new(k.elem(1, 1), k.elem(2, 1), k.int(1), k.elem(1, 1));
        let n = Mat2::new(k.int(3), k.elem(0, 1), k.elem(4, 1), k.elem(1, 1));
        check(&r.act_axis(1, &m).act_axis(2, &n).act_axis(3, &m));
    }

    proptest! {
        #[test]
        fn reduction_replays(v in proptest::collection::vec((-9i64..9, -3i64..3), 8), sqrt2 in any::<bool>()) {
            let k = if sqrt2 { BaseField::Sqrt2 } else { BaseField::Rational };
            let e: Vec<BaseElement> = v.iter().map(|&(u, w)| if sqrt2 { k.elem(u, w) } else { k.int(u) }).collect();
            let a = Cube::new(e.try_into().unwrap());
            prop_assume!(a.is_projective());
            check(&a);
        }
    }
}
