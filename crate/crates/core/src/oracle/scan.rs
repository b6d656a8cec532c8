use super::{ProductAudit, RandomSpec};
use crate::base::BaseField;
use crate::cube::Cube;
use crate::error::Result;
use crate::extension::{ExtElement, Extension};
use crate::forms::{equivalent_forms, identity_form, phi_map, positive_classes, psi_map, QuadForm};
use crate::ideal::{is_oriented_principal, OrientedIdeal};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Default, Serialize)]
pub struct CubeLawReport {
    pub tier: String,
    pub reduced_checked: usize,
    pub general_checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl CubeLawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn psi_product(ext: &Extension, a: &Cube, audit: &mut ProductAudit) -> Result<OrientedIdeal> {
    let [q1, q2, q3] = a.attached_forms();
    let (i1, i2, i3) = (psi_map(ext, &q1)?, psi_map(ext, &q2)?, psi_map(ext, &q3)?);
    let p = audit.mul(ext, &i1, &i2)?;
    audit.mul(ext, &p, &i3)
}

/// For a reduced cube with `disc = u^2 D`: the product of the three
/// `psi_map` images is `[omega, omega Omega]` oriented by `sgn N(omega) = sgn(-dfg)`,
/// `omega = (-h + u sqrt D)/2`.
fn check_reduced(ext: &Extension, a: &Cube, u: &crate::BaseElement, audit: &mut ProductAudit) -> Result<Option<String>> {
    let e = a.entries();
    let (d, f, g, h) = (&e[3], &e[5], &e[6], &e[7]);
    let prod = psi_product(ext, a, audit)?;
    let omega = ExtElement::new(&(u * ext.w()) - h, u.scale(&BigInt::from(2)), BigInt::from(2));
    let expected = OrientedIdeal::new(ext, omega.clone(), ext.mul(&omega, &ext.omega()), (-(d * &(f * g))).sign_vector()?)?;
    if !prod.same_oriented(&expected) {
        return Ok(Some(format!("{a}: product {prod} differs from [omega, omega Omega] = {expected}")));
    }
    if ext.field() == BaseField::Rational {
        return check_principal(ext, a, &prod);
    }
    Ok(None)
}

fn check_principal(ext: &Extension, a: &Cube, prod: &OrientedIdeal) -> Result<Option<String>> {
    match is_oriented_principal(ext, prod)? {
        Some(gamma) if OrientedIdeal::principal(ext, &gamma)?.same_oriented(prod) => Ok(None),
        Some(gamma) => Ok(Some(format!("{a}: witness {gamma} does not generate {prod}"))),
        None => Ok(Some(format!("{a}: product {prod} is not oriented-principal"))),
    }
}

/// Cube Law scan.
///
/// Over `Q`: every reduced cube with `d, f, g, h` in `[-b, b]` and fundamental
/// discriminant, followed by `count` random general projective cubes; each
/// product of the three `psi_map` images must be oriented-principal, and for
/// reduced cubes equal to `[omega, omega Omega]` exactly.
/// Over `Q(sqrt 2)`: `count` random reduced cubes, checked against
/// `[omega, omega Omega]`.
pub fn scan_cube_law(spec: &RandomSpec, audit: &mut ProductAudit) -> Result<CubeLawReport> {
    let k = spec.tier;
    let mut report = CubeLawReport { tier: k.name().to_string(), ..Default::default() };
    let mut s = spec.sampler();
    let record = |r: &mut CubeLawReport, x: Option<String>| {
        if let Some(m) = x {
            r.failures.push(m);
        }
    };
    match k {
        BaseField::Rational => {
            let b = spec.entry_bound;
            for d in -b..=b {
                for f in -b..=b {
                    for g in -b..=b {
                        for h in -b..=b {
                            let a = Cube::from_ints(k, [1, 0, 0, d, 0, f, g, h]);
                            let Ok(ext) = Extension::new(a.disc()) else {
                                report.skipped += 1;
                                continue;
                            };
                            let x = check_reduced(&ext, &a, &k.one(), audit)?;
                            record(&mut report, x);
                            report.reduced_checked += 1;
                        }
                    }
                }
            }
            for _ in 0..spec.count {
                let ext = s.extension(60);
                let a = s.projective_cube(&ext)?;
                let prod = psi_product(&ext, &a, audit)?;
                let x = check_principal(&ext, &a, &prod)?;
                record(&mut report, x);
                report.general_checked += 1;
            }
        }
        BaseField::Sqrt2 => {
            for _ in 0..spec.count {
                let (a, ext, u) = s.reduced_cube();
                let x = check_reduced(&ext, &a, &u, audit)?;
                record(&mut report, x);
                report.reduced_checked += 1;
            }
        }
    }
    Ok(report)
}

/// Narrow class number of a fundamental `d` over `Z`, by direct enumeration:
/// reduced positive forms for `d < 0`, cycles of reduced forms for `d > 0`.
///
/// Uses machine integers and none of the library's reduction code.
pub fn naive_class_number(d: i64) -> usize {
    let d = d as i128;
    let prim = |a: i128, b: i128, c: i128| gcd(gcd(a.abs(), b.abs()), c.abs()) == 1;
    if d < 0 {
        let mut h = 0;
        let mut a = 1;
        while 3 * a * a <= -d {
            for b in -a + 1..=a {
                if (b * b - d) % (4 * a) != 0 {
                    continue;
                }
                let c = (b * b - d) / (4 * a);
                if c < a || (c == a && b < 0) || !prim(a, b, c) {
                    continue;
                }
                h += 1;
            }
            a += 1;
        }
        return h;
    }
    // x < sqrt d and x > sqrt d, exactly
    let below = |x: i128| x < 0 || x * x < d;
    let above = |x: i128| x > 0 && x * x > d;
    let reduced = |a: i128, b: i128| b > 0 && below(b) && above(b + 2 * a.abs()) && below(2 * a.abs() - b);
    let mut forms = Vec::new();
    let mut b = 1;
    while below(b) {
        if (b * b - d) % 4 == 0 {
            let ac = (b * b - d) / 4;
            for a0 in 1..=ac.abs() {
                if ac % a0 != 0 {
                    continue;
                }
                for a in [a0, -a0] {
                    let c = ac / a;
                    if reduced(a, b) && prim(a, b, c) {
                        forms.push((a, b, c));
                    }
                }
            }
        }
        b += 1;
    }
    // rho(a, b, c) = (c, b', (b'^2 - d)/4c), b' = -b mod 2c, sqrt d - 2|c| < b' < sqrt d
    let rho = |(_, b, c): (i128, i128, i128)| {
        let m = 2 * c.abs();
        let mut b2 = (-b).rem_euclid(m);
        if !below(b2) {
            b2 -= m;
        }
        while below(b2 + m) {
            b2 += m;
        }
        (c, b2, (b2 * b2 - d) / (4 * c))
    };
    let mut seen = std::collections::HashSet::new();
    let mut cycles = 0;
    for &f in &forms {
        if seen.contains(&f) {
            continue;
        }
        cycles += 1;
        let mut g = f;
        while seen.insert(g) {
            g = rho(g);
        }
    }
    cycles
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Serialize)]
pub struct ClassGroupReport {
    pub d: i64,
    pub classes: Vec<String>,
    /// `table[i][j]`: index of the class of `classes[i] * classes[j]`.
    pub table: Vec<Vec<Option<usize>>>,
    pub h_enumerated: usize,
    pub h_naive: usize,
    pub h_composition: usize,
    pub is_group: bool,
}

impl ClassGroupReport {
    pub fn passed(&self) -> bool {
        self.is_group && self.h_enumerated == self.h_naive && self.h_enumerated == self.h_composition
    }
}

fn class_index(classes: &[QuadForm], f: &QuadForm) -> Result<Option<usize>> {
    for (i, c) in classes.iter().enumerate() {
        if equivalent_forms(c, f)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Composition table of the reduced representatives of discriminant `d`,
/// with the group order generated under composition compared to the
/// enumerated and the independently counted class numbers.
pub fn class_number_crosscheck(d: i64, audit: &mut ProductAudit) -> Result<ClassGroupReport> {
    let k = BaseField::Rational;
    let ext = Extension::new(k.int(d))?;
    let classes = positive_classes(d)?;
    let n = classes.len();
    let mut table = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (psi_map(&ext, &classes[i])?, psi_map(&ext, &classes[j])?);
            let prod = audit.mul(&ext, &p, &q)?.align_basis(&ext);
            table[i][j] = class_index(&classes, &phi_map(&ext, &prod)?)?;
        }
    }
    let id = class_index(&classes, &identity_form(&ext))?;
    let closed = table.iter().flatten().all(Option::is_some);
    let is_group = closed && id.is_some() && {
        let e = id.expect("checked");
        let t = |i: usize, j: usize| table[i][j].expect("closed");
        let latin = (0..n).all(|i| {
            let mut row: Vec<usize> = (0..n).map(|j| t(i, j)).collect();
            row.sort_unstable();
            row == (0..n).collect::<Vec<_>>()
        });
        let neutral = (0..n).all(|i| t(e, i) == i && t(i, e) == i);
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t(t(a, b), c) == t(a, t(b, c)))));
        latin && neutral && assoc
    };
    let mut generated = std::collections::BTreeSet::new();
    if let Some(e) = id {
        let mut frontier = vec![e];
        generated.insert(e);
        while let Some(x) = frontier.pop() {
            for g in 0..n {
                if let Some(y) = table[x][g] {
                    if generated.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
    }
    Ok(ClassGroupReport {
        d,
        classes: classes.iter().map(ToString::to_string).collect(),
        table,
        h_enumerated: n,
        h_naive: naive_class_number(d),
        h_composition: generated.len(),
        is_group,
    })
}
