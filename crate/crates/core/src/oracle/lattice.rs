use crate::base::{BaseField, BaseRational};
use crate::error::Result;
use crate::extension::{ExtElement, Extension};
use crate::ideal::OrientedIdeal;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A full-rank `Z`-lattice in `L = K(Omega)`, written in the `Z`-basis
/// `1, theta, Omega, theta Omega` (without `theta` over `Q`), as
/// `rows / den` with `rows` in Hermite normal form and `den` minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLattice {
    pub rows: Vec<Vec<BigInt>>,
    pub den: BigInt,
}

impl ZLattice {
    fn from_generators(field: BaseField, gens: &[(BaseRational, BaseRational)]) -> Self {
        let mut vecs = Vec::new();
        for (x, y) in gens {
            vecs.push((x.clone(), y.clone()));
            if let Some(t) = field.theta() {
                let t = BaseRational::from_int(t);
                vecs.push((&t * x, &t * y));
            }
        }
        let den = vecs.iter().fold(BigInt::one(), |acc, (x, y)| acc.lcm(x.denom()).lcm(y.denom()));
        let rows: Vec<Vec<BigInt>> = vecs
            .iter()
            .map(|(x, y)| {
                let mut v: Vec<BigInt> = x.numer().coords().iter().map(|c| c * (&den / x.denom())).collect();
                v.extend(y.numer().coords().iter().map(|c| c * (&den / y.denom())));
                v
            })
            .collect();
        let mut rows = hermite(rows);
        let g = rows.iter().flatten().fold(den.clone(), |g, c| g.gcd(c));
        for r in rows.iter_mut() {
            for c in r.iter_mut() {
                *c = &*c / &g;
            }
        }
        ZLattice { rows, den: den / g }
    }
}

/// Row Hermite normal form over `Z`: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, zero rows dropped.
fn hermite(mut m: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut top = 0;
    for col in 0..ncols {
        // Euclid on the column below `top`
        loop {
            let nonzero: Vec<usize> = (top..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| m[i][col].abs()).expect("nonempty");
            m.swap(top, piv);
            let mut done = true;
            for i in top + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[top][col]);
                for j in 0..ncols {
                    let t = &q * &m[top][j];
                    m[i][j] -= t;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < m.len() && !m[top][col].is_zero() {
            if m[top][col].is_negative() {
                for c in m[top].iter_mut() {
                    *c = -&*c;
                }
            }
            for i in 0..top {
                let q = m[i][col].div_floor(&m[top][col]);
                for j in 0..ncols {
                    let t = &q * &m[top][j];
                    m[i][j] -= t;
                }
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

fn coords(e: &ExtElement) -> (BaseRational, BaseRational) {
    (e.x_coord(), e.y_coord())
}

/// `(x1 + y1 Omega)(x2 + y2 Omega)` from `Omega^2 = -w Omega - z`.
fn product(ext: &Extension, a: &(BaseRational, BaseRational), b: &(BaseRational, BaseRational)) -> (BaseRational, BaseRational) {
    let w = BaseRational::from_int(ext.w().clone());
    let z = BaseRational::from_int(ext.z().clone());
    let yy = &a.1 * &b.1;
    (&(&a.0 * &b.0) - &(&z * &yy), &(&(&a.0 * &b.1) + &(&a.1 * &b.0)) - &(&w * &yy))
}

/// The `Z`-lattice of `IJ`, generated by `theta^e alpha_i beta_j`.
pub fn naive_module_product(ext: &Extension, i: &OrientedIdeal, j: &OrientedIdeal) -> ZLattice {
    let mut gens = Vec::new();
    for a in [i.alpha(), i.beta()] {
        for b in [j.alpha(), j.beta()] {
            gens.push(product(ext, &coords(a), &coords(b)));
        }
    }
    ZLattice::from_generators(ext.field(), &gens)
}

/// The `Z`-lattice spanned over `O_K` by a basis.
pub fn module_lattice(ext: &Extension, i: &OrientedIdeal) -> ZLattice {
    ZLattice::from_generators(ext.field(), &[coords(i.alpha()), coords(i.beta())])
}

/// Runs every ideal product through the library and the oracle and records
/// disagreements as serialized reproducers.
#[derive(Debug, Default, Serialize)]
pub struct ProductAudit {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ProductAudit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn mul(&mut self, ext: &Extension, i: &OrientedIdeal, j: &OrientedIdeal) -> Result<OrientedIdeal> {
        let main = i.mul(ext, j)?;
        self.checked += 1;
        let oracle = naive_module_product(ext, i, j);
        let ok_module = module_lattice(ext, &main) == oracle;
        let ok_eps = *main.eps() == i.eps().mul(j.eps());
        if !(ok_module && ok_eps) {
            let dump = serde_json::json!({
                "D": ext.d().to_string(),
                "field": ext.field().name(),
                "I": i.to_string(),
                "J": j.to_string(),
                "main": main.to_string(),
                "oracle_rows": oracle.rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "oracle_den": oracle.den.to_string(),
            });
            self.failures.push(dump.to_string());
        }
        Ok(main)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::SignVector;
    use crate::oracle::RandomSpec;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermite_examples() {
        let h = hermite(vec![big(&[2, 4]), big(&[3, 1]), big(&[0, 0])]);
        assert_eq!(h, vec![big(&[1, 7]), big(&[0, 10])]);
        assert_eq!(hermite(vec![big(&[-3, 0])]), vec![big(&[3, 0])]);
    }

    #[test]
    fn square_of_the_prime_above_two() {
        let k = BaseField::Rational;
        let l = Extension::new(k.int(-20)).unwrap();
        let p = OrientedIdeal::new(&l, l.from_base(&k.int(2)), &l.one() + &l.omega(), SignVector::positive(1)).unwrap();
        let two = OrientedIdeal::principal(&l, &l.from_base(&k.int(2))).unwrap();
        assert_eq!(naive_module_product(&l, &p, &p), module_lattice(&l, &two));
        let u = OrientedIdeal::unit(&l);
        assert_eq!(naive_module_product(&l, &u, &u), module_lattice(&l, &u));
        let mut audit = ProductAudit::new();
        audit.mul(&l, &p, &p).unwrap();
        assert!(audit.passed());
    }

    #[test]
    fn oracle_detects_a_wrong_product() {
        let k = BaseField::Rational;
        let l = Extension::new(k.int(-4)).unwrap();
        let u = OrientedIdeal::unit(&l);
        let two = OrientedIdeal::principal(&l, &l.from_base(&k.int(2))).unwrap();
        assert_ne!(naive_module_product(&l, &u, &u), module_lattice(&l, &two));
    }

    #[test]
    fn agrees_on_random_products() {
        for tier in [BaseField::Rational, BaseField::Sqrt2] {
            let mut s = RandomSpec::new(3, 2, 0, tier).sampler();
            let mut audit = ProductAudit::new();
            for _ in 0..40 {
                let l = s.extension(5);
                let (i, j) = (s.ideal(&l), s.ideal(&l));
                audit.mul(&l, &i, &j).unwrap();
            }
            assert!(audit.passed(), "{:?}", audit.failures);
        }
    }
}
