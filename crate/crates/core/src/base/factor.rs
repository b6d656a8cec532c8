use super::{canonical_associate, BaseElement, BaseField};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Largest `|N(x)|` accepted by [`factor_element`].
pub const DEFAULT_NORM_BOUND: u64 = 1_000_000_000;

/// If `d` is a square modulo `4*O_K`, the witness `w` with `w^2 ≡ d` that comes
/// first in [`BaseField::residues_mod2`].
pub fn is_qr_mod4(d: &BaseElement) -> Option<BaseElement> {
    d.field().residues_mod2().into_iter().find(|w| {
        let diff = d - &(w * w);
        diff.coords().iter().all(|c| (c % BigInt::from(4)).is_zero())
    })
}

fn rational_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Canonical primes of `Z[sqrt 2]` lying over the rational prime `p`.
fn primes_over(p: u64) -> Vec<BaseElement> {
    let k = BaseField::Sqrt2;
    match p % 8 {
        0 | 2 | 4 | 6 => vec![canonical_associate(&k.elem(0, 1))],
        3 | 5 => vec![k.from_bigint(BigInt::from(p))],
        _ => {
            let pb = BigInt::from(p);
            let mut b = BigInt::one();
            loop {
                let a2: BigInt = &pb + &b * &b * 2;
                let a = a2.sqrt();
                if &a * &a == a2 {
                    let pi = BaseElement::from_coords(k, &[a, b]);
                    let first = canonical_associate(&pi);
                    let second = canonical_associate(&pi.conj());
                    return vec![first, second];
                }
                b += 1;
            }
        }
    }
}

/// Factorization of `x` into canonical primes, sorted by `(|N|, u, v)`.
///
/// Units factor as the empty list. Fails if `|N(x)|` exceeds `bound`.
pub fn factor_element(x: &BaseElement, bound: u64) -> Result<Vec<BaseElement>> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = x.norm().abs();
    let n_small = n
        .to_u64()
        .filter(|&v| v <= bound)
        .ok_or_else(|| Error::NormBoundExceeded(n.to_string()))?;
    let k = x.field();
    let mut rational = rational_prime_factors(n_small);
    rational.dedup();
    let mut out = Vec::new();
    let mut rest = x.clone();
    for p in rational {
        let candidates = match k {
            BaseField::Rational => vec![k.from_bigint(BigInt::from(p))],
            BaseField::Sqrt2 => primes_over(p),
        };
        for pi in candidates {
            while let Some(q) = rest.div_exact(&pi) {
                out.push(pi.clone());
                rest = q;
            }
        }
    }
    debug_assert!(rest.is_unit());
    out.sort_by(|a, b| {
        (a.norm().abs(), a.u().clone(), a.v().clone()).cmp(&(b.norm().abs(), b.u().clone(), b.v().clone()))
    });
    Ok(out)
}

/// Non-unit divisors of 2, up to associates.
fn divisors_of_two(k: BaseField) -> Vec<BaseElement> {
    match k {
        BaseField::Rational => vec![k.int(2)],
        BaseField::Sqrt2 => vec![k.elem(0, 1), k.int(2)],
    }
}

/// Fundamentality test: `d` is a square mod 4, and every non-unit `p` with
/// `p^2 | d` divides 2 with `d / p^2` not a square mod 4.
pub(crate) fn is_fundamental_element(d: &BaseElement, bound: u64) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroInput);
    }
    if is_qr_mod4(d).is_none() {
        return Ok(false);
    }
    let k = d.field();
    let primes = factor_element(d, bound)?;
    let two_primes = factor_element(&k.int(2), bound)?;
    // any prime not above 2 occurring twice is fatal
    for w in primes.windows(2) {
        if w[0] == w[1] && !two_primes.contains(&w[0]) {
            return Ok(false);
        }
    }
    for p in divisors_of_two(k) {
        let p2 = &p * &p;
        if let Some(q) = d.div_exact(&p2) {
            if is_qr_mod4(&q).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(k: BaseField, fs: &[BaseElement]) -> BaseElement {
        fs.iter().fold(k.one(), |acc, f| &acc * f)
    }

    #[test]
    fn qr_mod4_examples() {
        let q = BaseField::Rational;
        assert_eq!(is_qr_mod4(&q.int(-4)), Some(q.int(0)));
        assert_eq!(is_qr_mod4(&q.int(-3)), Some(q.int(1)));
        assert_eq!(is_qr_mod4(&q.int(-2)), None);
        let k = BaseField::Sqrt2;
        assert_eq!(is_qr_mod4(&k.elem(-1, 2)), Some(k.elem(1, 1)));
        assert_eq!(is_qr_mod4(&k.int(-1)), None);
    }

    #[test]
    fn factor_examples() {
        let q = BaseField::Rational;
        assert_eq!(factor_element(&q.int(12), DEFAULT_NORM_BOUND).unwrap(), vec![q.int(2), q.int(2), q.int(3)]);
        assert!(factor_element(&q.int(-1), DEFAULT_NORM_BOUND).unwrap().is_empty());
        let k = BaseField::Sqrt2;
        let fs = factor_element(&k.int(2), DEFAULT_NORM_BOUND).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(product(k, &fs).div_exact(&k.int(2)).unwrap().is_unit());
        assert!(factor_element(&k.elem(1, 1), DEFAULT_NORM_BOUND).unwrap().is_empty());
        assert!(matches!(
            factor_element(&q.int(2_000_000_011), DEFAULT_NORM_BOUND),
            Err(Error::NormBoundExceeded(_))
        ));
    }

    #[test]
    fn factorization_reconstructs_input() {
        let k = BaseField::Sqrt2;
        for u in -30..30 {
            for v in -30..30 {
                let x = k.elem(u, v);
                if x.is_zero() {
                    continue;
                }
                let fs = factor_element(&x, DEFAULT_NORM_BOUND).unwrap();
                let prod = product(k, &fs);
                assert!(prod.div_exact(&x).map(|q| q.is_unit()).unwrap_or(false), "{x}: {fs:?}");
                for f in &fs {
                    assert!(!f.is_unit());
                }
            }
        }
    }

    #[test]
    fn fundamental_rational() {
        let q = BaseField::Rational;
        let f = |d: i64| is_fundamental_element(&q.int(d), DEFAULT_NORM_BOUND).unwrap();
        assert!(f(-4) && f(-3) && f(5) && f(8) && f(-20) && f(-23) && f(40) && f(12));
        assert!(!f(-12) && !f(-2) && !f(45) && !f(-16) && !f(20));
        // classical list of fundamental discriminants in [-30, 30]
        let expected: Vec<i64> =
            vec![-24, -23, -20, -19, -15, -11, -8, -7, -4, -3, 1, 5, 8, 12, 13, 17, 21, 24, 28, 29];
        let got: Vec<i64> = (-30..=30).filter(|&d| d != 0 && f(d)).collect();
        assert_eq!(got, expected);
    }
}
