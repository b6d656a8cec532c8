//! Reduction theory over `Z`: Gauss reduction for definite forms and
//! reduction cycles for indefinite ones.

use super::QuadForm;
use crate::base::BaseField;
use crate::error::{Error, Result};
use crate::extension::is_fundamental;
use crate::matrix::Mat2;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
}

/// A reduced representative and the `SL_2(Z)` matrix carrying the input to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub form: QuadForm,
    pub transform: Mat2,
    pub kind: Definiteness,
}

type Abc = (BigInt, BigInt, BigInt);

const MAX_STEPS: usize = 1_000_000;

fn to_form(t: &Abc) -> QuadForm {
    let k = BaseField::Rational;
    QuadForm::new(k.from_bigint(t.0.clone()), k.from_bigint(t.1.clone()), k.from_bigint(t.2.clone()))
}

fn int_mat(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Mat2 {
    let k = BaseField::Rational;
    Mat2::new(k.from_bigint(p), k.from_bigint(q), k.from_bigint(r), k.from_bigint(s))
}

fn one() -> BigInt {
    BigInt::from(1)
}

/// `Q(x + ty, y)`.
fn translate(f: &Abc, t: &BigInt) -> Abc {
    let (a, b, c) = f;
    (a.clone(), b + a * t * 2, a * t * t + b * t + c)
}

/// `Q(-y, x)`.
fn swap(f: &Abc) -> Abc {
    (f.2.clone(), -f.1.clone(), f.0.clone())
}

fn reduce_positive(mut f: Abc) -> (Abc, Mat2) {
    let k = BaseField::Rational;
    let mut m = Mat2::identity(k);
    let swap_m = Mat2::from_ints(k, 0, -1, 1, 0);
    loop {
        let two_a = &f.0 * 2;
        let t = (&f.0 - &f.1).div_floor(&two_a);
        if !t.is_zero() {
            f = translate(&f, &t);
            m = m.mul(&int_mat(one(), t, BigInt::zero(), one()));
        }
        if f.0 > f.2 {
            f = swap(&f);
            m = m.mul(&swap_m);
        } else {
            break;
        }
    }
    if f.0 == f.2 && f.1.is_negative() {
        f = swap(&f);
        m = m.mul(&swap_m);
    }
    (f, m)
}

fn is_reduced_indefinite(f: &Abc, d: &BigInt) -> bool {
    let (a, b, _) = f;
    if !b.is_positive() || &(b * b) >= d {
        return false;
    }
    let two_a = a.abs() * 2;
    let lo = &two_a + b;
    let hi: BigInt = &two_a - b;
    &(&lo * &lo) > d && (!hi.is_positive() || &(&hi * &hi) < d)
}

/// One rho step `Q(-y, x + ty)`, returning the new form and the step matrix.
fn rho(f: &Abc, d: &BigInt, sqrt_d: &BigInt) -> (Abc, Mat2) {
    let (a, b, c) = f;
    let m = c.abs() * 2;
    let r = if &c.abs() <= sqrt_d {
        sqrt_d - (sqrt_d + b).mod_floor(&m)
    } else {
        let r0 = (-b).mod_floor(&m);
        if r0 > c.abs() {
            r0 - &m
        } else {
            r0
        }
    };
    let t = (&r + b) / (c * 2);
    let next = (c.clone(), -b + c * &t * 2, a - b * &t + c * &t * &t);
    debug_assert_eq!(&next.1 * &next.1 - &next.0 * &next.2 * 4, *d);
    (next, int_mat(BigInt::zero(), -one(), one(), t))
}

fn reduce_indefinite(mut f: Abc, d: &BigInt) -> Result<(Abc, Mat2)> {
    let sqrt_d = d.sqrt();
    let mut m = Mat2::identity(BaseField::Rational);
    let mut steps = 0;
    while !is_reduced_indefinite(&f, d) {
        let (g, step) = rho(&f, d, &sqrt_d);
        f = g;
        m = m.mul(&step);
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::OutOfRange("reduction did not converge".into()));
        }
    }
    // walk the cycle and pick its lexicographically least member
    let start = f.clone();
    let mut best = (f.clone(), m.clone());
    let mut cur = f;
    let mut cm = m;
    loop {
        let (g, step) = rho(&cur, d, &sqrt_d);
        cm = cm.mul(&step);
        cur = g;
        if cur == start {
            break;
        }
        if cur.clone() < best.0 {
            best = (cur.clone(), cm.clone());
        }
    }
    Ok(best)
}

/// The full reduction cycle through a reduced indefinite form.
pub fn cycle_of(f: &QuadForm) -> Vec<QuadForm> {
    let start = f.as_tuple();
    let d: BigInt = &start.1 * &start.1 - &start.0 * &start.2 * 4;
    let sqrt_d = d.sqrt();
    let mut out = vec![to_form(&start)];
    let mut cur = rho(&start, &d, &sqrt_d).0;
    while cur != start {
        out.push(to_form(&cur));
        cur = rho(&cur, &d, &sqrt_d).0;
    }
    out
}

/// Reduced representative of `q` over `Q`, with an `SL_2(Z)` transcript `T` such
/// that `q.substitute(T)` is the output.
pub fn reduce_form(q: &QuadForm) -> Result<Reduction> {
    if q.field() != BaseField::Rational {
        return Err(Error::UnsupportedBaseField);
    }
    let f = q.as_tuple();
    let d: BigInt = &f.1 * &f.1 - &f.0 * &f.2 * 4;
    if d.is_zero() || (!d.is_negative() && d.sqrt().pow(2) == d) {
        return Err(Error::OutOfRange(format!("square discriminant {d}")));
    }
    let (g, m, kind) = if d.is_negative() {
        if f.0.is_positive() {
            let (g, m) = reduce_positive(f);
            (g, m, Definiteness::Positive)
        } else {
            let (g, m) = reduce_positive((-f.0, -f.1, -f.2));
            ((-g.0, -g.1, -g.2), m, Definiteness::Negative)
        }
    } else {
        let (g, m) = reduce_indefinite(f, &d)?;
        (g, m, Definiteness::Indefinite)
    };
    let form = to_form(&g);
    debug_assert_eq!(q.substitute(&m), form);
    Ok(Reduction { form, transform: m, kind })
}

/// Proper (`SL_2(Z)`) equivalence over `Q`.
pub fn equivalent_forms(q1: &QuadForm, q2: &QuadForm) -> Result<bool> {
    if q1.field() != BaseField::Rational || q2.field() != BaseField::Rational {
        return Err(Error::UnsupportedBaseField);
    }
    if q1.disc() != q2.disc() {
        return Ok(false);
    }
    let (r1, r2) = (reduce_form(q1)?, reduce_form(q2)?);
    Ok(r1.kind == r2.kind && r1.form == r2.form)
}

fn primitive(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    a.gcd(b).gcd(c) == one()
}

/// All reduced primitive forms of discriminant `d`: for `d < 0` the
/// positive-definite representatives followed by their negatives, for `d > 0`
/// one canonical representative per cycle.
pub fn enumerate_reduced(d: i64) -> Result<Vec<QuadForm>> {
    if d.unsigned_abs() > 1_000_000 {
        return Err(Error::OutOfRange(format!("|D| = {} exceeds 10^6", d.unsigned_abs())));
    }
    let k = BaseField::Rational;
    if d == 0 || !is_fundamental(&k.int(d))? || (d > 0 && (d as u64).sqrt().pow(2) == d as u64) {
        return Err(Error::NotFundamental(d.to_string()));
    }
    let db = BigInt::from(d);
    let mut out = Vec::new();
    if d < 0 {
        let amax = (d.unsigned_abs() / 3).sqrt() as i64 + 1;
        for a in 1..=amax {
            for b in (-a + 1)..=a {
                let num = b * b - d;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c < a || (c == a && b < 0) {
                    continue;
                }
                if primitive(&a.into(), &b.into(), &c.into()) {
                    out.push(QuadForm::from_ints(k, a, b, c));
                }
            }
        }
        let neg: Vec<QuadForm> = out.iter().map(QuadForm::neg).collect();
        out.extend(neg);
    } else {
        let s = (d as u64).sqrt() as i64;
        let mut seen = BTreeSet::new();
        for b in 1..=s {
            if (b * b - d) % 4 != 0 {
                continue;
            }
            let ac = (b * b - d) / 4;
            for a_abs in 1..=ac.abs() {
                if ac % a_abs != 0 {
                    continue;
                }
                for a in [a_abs, -a_abs] {
                    let c = ac / a;
                    let f = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
                    if !is_reduced_indefinite(&f, &db) || !primitive(&f.0, &f.1, &f.2) {
                        continue;
                    }
                    let canon = reduce_form(&to_form(&f))?.form;
                    if seen.insert(canon.as_tuple()) {
                        out.push(canon);
                    }
                }
            }
        }
        out.sort_by_key(|f| f.as_tuple());
    }
    Ok(out)
}

/// Narrow classes counted without the orientation doubling: positive-definite
/// representatives for `d < 0`, all cycles for `d > 0`.
pub fn positive_classes(d: i64) -> Result<Vec<QuadForm>> {
    Ok(enumerate_reduced(d)?.into_iter().filter(|f| d > 0 || f.a.u().is_positive()).collect())
}
