use super::{BaseElement, BaseField};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Nearest integer to `p / q` (`q > 0`), ties toward zero.
fn round_ties_to_zero(p: &BigInt, q: &BigInt) -> BigInt {
    debug_assert!(q.is_positive());
    let (fl, r) = p.div_mod_floor(q);
    let twice: BigInt = &r * 2;
    match twice.cmp(q) {
        Ordering::Less => fl,
        Ordering::Greater => fl + 1,
        Ordering::Equal => {
            if fl.is_negative() {
                fl + 1
            } else {
                fl
            }
        }
    }
}

/// Euclidean division `x = q*y + rem` with `|N(rem)| < |N(y)|`.
///
/// The quotient rounds each rational coordinate of `x / y` to the nearest
/// integer, ties toward zero.
pub fn divmod_euclid(x: &BaseElement, y: &BaseElement) -> Result<(BaseElement, BaseElement)> {
    if x.field() != y.field() {
        return Err(Error::DescriptorMismatch);
    }
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut n = y.norm();
    let mut num = x * &y.adjugate();
    if n.is_negative() {
        n = -n;
        num = -num;
    }
    let coords: Vec<BigInt> = num.coords().iter().map(|c| round_ties_to_zero(c, &n)).collect();
    let q = BaseElement::from_coords(x.field(), &coords);
    let rem = x - &(&q * y);
    Ok((q, rem))
}

/// Extended Euclid: `(g, s, t)` with `s*x + t*y = g`, `g` a (non-normalized) gcd.
pub fn extended_gcd(x: &BaseElement, y: &BaseElement) -> (BaseElement, BaseElement, BaseElement) {
    let k = x.field();
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut s0, mut s1) = (k.one(), k.zero());
    let (mut t0, mut t1) = (k.zero(), k.one());
    while !r1.is_zero() {
        let (q, rem) = divmod_euclid(&r0, &r1).expect("divisor is nonzero");
        r0 = std::mem::replace(&mut r1, rem);
        let s2 = &s0 - &(&q * &s1);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &(&q * &t1);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

fn associate_key(x: &BaseElement) -> (BigInt, BigInt, bool) {
    (x.u().abs(), x.v().abs(), x.v().is_negative())
}

/// The canonical associate of `x`: totally positive, with lexicographically
/// minimal `(|u|, |v|)` among totally positive associates (positive `v`
/// preferred on a tie). Zero maps to zero.
pub fn canonical_associate(x: &BaseElement) -> BaseElement {
    if x.is_zero() {
        return x.clone();
    }
    let k = x.field();
    let signs = x.sign_vector().expect("nonzero");
    let mut best = x * &k.unit_with_signs(&signs);
    let Some(lambda) = k.totally_positive_unit_generator() else {
        return best;
    };
    let lambda_inv = lambda.conj();
    for step in [&lambda, &lambda_inv] {
        loop {
            let cand = &best * step;
            if associate_key(&cand) < associate_key(&best) {
                best = cand;
            } else {
                break;
            }
        }
    }
    best
}

/// Canonical gcd of `x` and `y`.
pub fn gcd(x: &BaseElement, y: &BaseElement) -> Result<BaseElement> {
    if x.field() != y.field() {
        return Err(Error::DescriptorMismatch);
    }
    if x.is_zero() && y.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(canonical_associate(&extended_gcd(x, y).0))
}

/// Canonical representative of `b` modulo `a*O_K`.
///
/// Over `Q` this is `b mod |a|` in `[0, |a|)`. Over `Q(sqrt 2)` the residue is
/// reduced against the echelon basis `{(x1, y1), (0, y2)}` of the lattice
/// `a*O_K` so that `0 <= u < x1` and `0 <= v < y2`.
pub fn residue_mod(b: &BaseElement, a: &BaseElement) -> Result<BaseElement> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let k = b.field();
    match k {
        BaseField::Rational => Ok(k.from_bigint(b.u().mod_floor(&a.u().abs()))),
        BaseField::Sqrt2 => {
            let (rows_a, rows_b) = lattice_echelon(a);
            let (x1, y1) = rows_a;
            let y2 = rows_b;
            let kq = b.u().div_floor(&x1);
            let u = b.u() - &kq * &x1;
            let v = (b.v() - &kq * &y1).mod_floor(&y2);
            Ok(BaseElement::from_coords(k, &[u, v]))
        }
    }
}

/// Echelon ℤ-basis `((x1, y1), y2)` of the lattice `a*Z[sqrt 2]`, `x1, y2 > 0`.
fn lattice_echelon(a: &BaseElement) -> ((BigInt, BigInt), BigInt) {
    let r1 = (a.u().clone(), a.v().clone());
    // a*sqrt2 = 2v + u*sqrt2
    let r2 = (a.v() * 2, a.u().clone());
    let eg = r1.0.extended_gcd(&r2.0);
    let g = eg.gcd;
    let row_a = (&eg.x * &r1.0 + &eg.y * &r2.0, &eg.x * &r1.1 + &eg.y * &r2.1);
    let (row_a, row_b1) = if g.is_zero() {
        unreachable!("a is nonzero, so some first coordinate is nonzero")
    } else {
        let b1 = (&r2.0 / &g) * &r1.1 - (&r1.0 / &g) * &r2.1;
        (row_a, b1)
    };
    let y2 = row_b1.abs();
    debug_assert!(!y2.is_zero());
    let (x1, y1) = if row_a.0.is_negative() { (-row_a.0, -row_a.1) } else { row_a };
    let y1 = y1.mod_floor(&y2);
    ((x1, y1), y2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn divmod_examples() {
        let q = BaseField::Rational;
        assert_eq!(divmod_euclid(&q.int(7), &q.int(3)).unwrap(), (q.int(2), q.int(1)));
        let k = BaseField::Sqrt2;
        let (quot, rem) = divmod_euclid(&k.elem(5, 1), &k.int(2)).unwrap();
        assert_eq!(quot, k.int(2));
        assert_eq!(rem, k.elem(1, 1));
        assert!(rem.norm().abs() < k.int(2).norm().abs());
        let x = k.elem(-4, 7);
        assert_eq!(divmod_euclid(&x, &x).unwrap(), (k.one(), k.zero()));
        assert_eq!(divmod_euclid(&x, &k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn ties_round_toward_zero() {
        assert_eq!(round_ties_to_zero(&BigInt::from(5), &BigInt::from(2)), BigInt::from(2));
        assert_eq!(round_ties_to_zero(&BigInt::from(-5), &BigInt::from(2)), BigInt::from(-2));
        assert_eq!(round_ties_to_zero(&BigInt::from(7), &BigInt::from(4)), BigInt::from(2));
    }

    #[test]
    fn gcd_examples() {
        let q = BaseField::Rational;
        assert_eq!(gcd(&q.int(12), &q.int(18)).unwrap(), q.int(6));
        assert_eq!(gcd(&q.int(-5), &q.zero()).unwrap(), q.int(5));
        let k = BaseField::Sqrt2;
        let g = gcd(&k.elem(0, 1), &k.int(2)).unwrap();
        assert_eq!(g, k.elem(2, 1));
        assert!(g.divides(&k.elem(0, 1)) && g.divides(&k.int(2)));
        assert_eq!(g.norm().abs(), BigInt::from(2));
        assert_eq!(gcd(&k.zero(), &k.zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn canonical_associate_examples() {
        let k = BaseField::Sqrt2;
        assert_eq!(canonical_associate(&k.elem(1, 1)), k.one());
        assert_eq!(canonical_associate(&k.int(-2)), k.int(2));
        assert_eq!(canonical_associate(&k.elem(2, -1)), k.elem(2, 1));
        assert_eq!(canonical_associate(&k.elem(17, 12)), k.one());
    }

    #[test]
    fn residue_examples() {
        let q = BaseField::Rational;
        assert_eq!(residue_mod(&q.int(-7), &q.int(3)).unwrap(), q.int(2));
        let k = BaseField::Sqrt2;
        // O_K / (√2) has two classes: 0 and 1
        assert_eq!(residue_mod(&k.elem(5, 3), &k.elem(0, 1)).unwrap(), k.one());
        assert_eq!(residue_mod(&k.elem(4, 3), &k.elem(0, 1)).unwrap(), k.zero());
    }

    fn elem() -> impl Strategy<Value = BaseElement> {
        (-300i64..300, -300i64..300).prop_map(|(u, v)| BaseField::Sqrt2.elem(u, v))
    }

    proptest! {
        #[test]
        fn euclidean_inequality(x in elem(), y in elem()) {
            prop_assume!(!y.is_zero());
            let (q, r) = divmod_euclid(&x, &y).unwrap();
            prop_assert_eq!(&(&q * &y) + &r, x);
            prop_assert!(r.norm().abs() < y.norm().abs());
        }

        #[test]
        fn gcd_divides_and_is_combination(x in elem(), y in elem()) {
            prop_assume!(!(x.is_zero() && y.is_zero()));
            let (g, s, t) = extended_gcd(&x, &y);
            prop_assert_eq!(&(&s * &x) + &(&t * &y), g.clone());
            let c = gcd(&x, &y).unwrap();
            prop_assert!(c.divides(&x) && c.divides(&y));
            prop_assert!(c.is_totally_positive());
            prop_assert_eq!(c.norm().abs(), g.norm().abs());
        }

        #[test]
        fn canonical_associate_is_class_invariant(x in elem(), k in 0u32..4, neg in any::<bool>()) {
            prop_assume!(!x.is_zero());
            let mut unit = BaseField::Sqrt2.fundamental_unit().pow(k);
            if neg { unit = -unit; }
            prop_assert_eq!(canonical_associate(&(&x * &unit)), canonical_associate(&x));
        }

        #[test]
        fn residue_is_canonical(b in elem(), a in elem(), m in elem()) {
            prop_assume!(!a.is_zero());
            let r = residue_mod(&b, &a).unwrap();
            prop_assert!(a.divides(&(&b - &r)));
            prop_assert_eq!(residue_mod(&(&b + &(&m * &a)), &a).unwrap(), r);
        }
    }
}
