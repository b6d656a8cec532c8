//! The acceptance suites, run on seeded streams.
//!
//! Every suite returns a [`CriterionReport`]; failures carry a printable
//! reproducer. Suites 2, 5 and 6 route their ideal products through a shared
//! [`ProductAudit`], which is what suite 9 reports on.

use crate::base::{BaseElement, BaseField, SignVector};
use crate::cube::{compose_cubes, identity_cube, phi_prime, psi_prime, Cube, GammaElement};
use crate::error::Result;
use crate::extension::Extension;
use crate::forms::{equivalent_forms, identity_form, phi_map, psi_map};
use crate::ideal::OrientedIdeal;
use crate::matrix::Mat2;
use crate::oracle::{class_number_crosscheck, scan_cube_law, ProductAudit, RandomSpec};
use crate::triple::{triple_from_pair, BalancedTriple};
use serde::Serialize;

const TIERS: [BaseField; 2] = [BaseField::Rational, BaseField::Sqrt2];
const MAX_LISTED: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    pub detail: String,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(id: u8, title: &'static str) -> Self {
        CriterionReport { id, title, passed: true, checked: 0, failed: 0, detail: String::new(), failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.passed = false;
        self.failed += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        }
    }

    /// Records a library error as a failure of the current sample.
    fn guard<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {} ({})", ctx(), e.name(), e));
                None
            }
        }
    }

    /// One line: `[PASS] 3 title (checked, failed)`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{tag}] criterion {} {}: {} checks, {} failed{}", self.id, self.title, self.checked, self.failed, if self.detail.is_empty() { String::new() } else { format!("; {}", self.detail) })
    }
}

fn base_spec(seed: u64, tier: BaseField, bound: i64, count: usize, label: &str) -> RandomSpec {
    RandomSpec::new(seed, bound, count, tier).derive(label)
}

fn gaussian() -> Extension {
    Extension::new(BaseField::Rational.int(-4)).expect("-4 is fundamental")
}

/// Criterion 1: the worked example over `Q(i)`.
pub fn worked_example() -> CriterionReport {
    let mut r = CriterionReport::new(1, "worked example over Q(i)");
    let k = BaseField::Rational;
    let l = gaussian();
    let first = Cube::from_ints(k, [0, 1, 1, 0, 1, 0, 0, -1]);
    let second = Cube::from_ints(k, [1, 0, 0, -1, 0, -1, -1, 0]);
    let b = BalancedTriple::identity(&l);
    let i_gen = OrientedIdeal::new(&l, l.omega(), l.from_base(&k.int(-1)), SignVector::positive(1));
    let Some(i_gen) = r.guard(i_gen, || "[i, -1]".into()) else { return r };
    let u = OrientedIdeal::unit(&l);
    let Some(b2) = r.guard(BalancedTriple::new(&l, i_gen, u.clone(), u), || "balancing ([i,-1],[1,i],[1,i])".into()) else { return r };
    if let Some(c) = r.guard(phi_prime(&l, &b), || "phi_prime(B)".into()) {
        r.check(c == first, || format!("phi_prime(B) = {c}, expected {first}"));
    }
    if let Some(c) = r.guard(phi_prime(&l, &b2), || "phi_prime(B')".into()) {
        r.check(c == second, || format!("phi_prime(B') = {c}, expected {second}"));
    }
    let swap = Mat2::from_ints(k, 0, 1, -1, 0);
    if let Some(g) = r.guard(GammaElement::new(Mat2::identity(k), swap, Mat2::identity(k), k.one()), || "gamma".into()) {
        let moved = first.act(&g);
        r.check(moved == second, || format!("id x (0,1;-1,0) x id sends the first cube to {moved}"));
    }
    r
}

/// Criterion 2: Cube Law scan over `Q` (exhaustive reduced cubes plus general
/// cubes) and the exact product of the `psi` images on both tiers.
pub fn cube_law(seed: u64, audit: &mut ProductAudit) -> CriterionReport {
    let mut r = CriterionReport::new(2, "cube law");
    let specs = [base_spec(seed, BaseField::Rational, 3, 500, "cube-law-q"), base_spec(seed, BaseField::Sqrt2, 2, 200, "cube-law-sqrt2")];
    let mut details = Vec::new();
    for spec in specs {
        let Some(rep) = r.guard(scan_cube_law(&spec, audit), || format!("scan over {}", spec.tier)) else { continue };
        r.checked += rep.reduced_checked + rep.general_checked;
        for f in rep.failures {
            r.fail(f);
        }
        details.push(format!("{}: {} reduced, {} general", rep.tier, rep.reduced_checked, rep.general_checked));
    }
    r.detail = details.join(", ");
    r
}

/// Criterion 3: `phi_prime(psi_prime(A)) = -u A` entry by entry for reduced cubes.
pub fn round_trip(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(3, "phi'psi' round trip on reduced cubes");
    for tier in TIERS {
        let bound = if tier == BaseField::Rational { 6 } else { 2 };
        let mut s = base_spec(seed, tier, bound, 500, "round-trip").sampler();
        for _ in 0..500 {
            let (a, ext, u) = s.reduced_cube();
            let Some(t) = r.guard(psi_prime(&ext, &a), || format!("psi_prime({a})")) else { continue };
            let Some(b) = r.guard(phi_prime(&ext, &t), || format!("phi_prime(psi_prime({a}))")) else { continue };
            let e = a.entries();
            let k = tier;
            let neg_u = |x: &BaseElement| -(&u * x);
            // (position, name, expected)
            let expected: [(usize, &str, BaseElement); 8] = [
                (0, "b111", -u.clone()),
                (1, "b121", k.zero()),
                (2, "b112", k.zero()),
                (3, "b122", neg_u(&e[3])),
                (4, "b211", k.zero()),
                (5, "b221", neg_u(&e[5])),
                (6, "b212", neg_u(&e[6])),
                (7, "b222", neg_u(&e[7])),
            ];
            for (pos, name, want) in expected {
                let got = &b.entries()[pos];
                r.check(*got == want, || format!("{a} over D = {}: {name} = {got}, expected {want}", ext.d()));
            }
        }
    }
    r
}

/// Criterion 4: the discriminant law under `u (T1 x T2 x T3)` with arbitrary
/// nonsingular `T_i`, and agreement of the three form discriminants.
pub fn disc_law(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(4, "discriminant law");
    for tier in TIERS {
        let mut s = base_spec(seed, tier, 4, 1000, "disc-law").sampler();
        for _ in 0..1000 {
            let a = Cube::new(std::array::from_fn(|_| s.elem(4)));
            let u = s.unit();
            let t = [s.matrix(), s.matrix(), s.matrix()];
            let b = a.act_axis(1, &t[0]).act_axis(2, &t[1]).act_axis(3, &t[2]).scale(&u);
            let dets = &(&t[0].det() * &t[1].det()) * &t[2].det();
            let want = &(&u.pow(4) * &(&dets * &dets)) * &a.disc();
            r.check(b.disc() == want, || format!("{a} under u = {u}, T = {}, {}, {}: disc {} != {want}", t[0], t[1], t[2], b.disc()));
            for c in [&a, &b] {
                let fs = c.attached_forms();
                let ds = [fs[0].disc(), fs[1].disc(), fs[2].disc()];
                r.check(ds[0] == ds[1] && ds[1] == ds[2] && ds[0] == c.disc(), || format!("{c}: form discriminants {ds:?}"));
            }
        }
    }
    r
}

/// Criterion 5: `phi(psi(Q)) ~ Q` on random forms, and composition tables
/// with the expected class numbers.
pub fn form_bijection(seed: u64, audit: &mut ProductAudit) -> CriterionReport {
    let mut r = CriterionReport::new(5, "form/ideal bijection and class groups");
    let k = BaseField::Rational;
    let discs = [-4i64, -20, -23, 40];
    let exts: Vec<Extension> = discs.iter().map(|&d| Extension::new(k.int(d)).expect("fundamental")).collect();
    let mut s = base_spec(seed, k, 6, 300, "bijection").sampler();
    for n in 0..300 {
        let ext = &exts[n % exts.len()];
        let q = s.primitive_form(ext);
        let Some(i) = r.guard(psi_map(ext, &q), || format!("psi({q})")) else { continue };
        let Some(back) = r.guard(phi_map(ext, &i.align_basis(ext)), || format!("phi(psi({q}))")) else { continue };
        let Some(eq) = r.guard(equivalent_forms(&back, &q), || format!("{back} ~ {q}")) else { continue };
        r.check(eq, || format!("D = {}: phi(psi({q})) = {back} is not equivalent to it", ext.d()));
    }
    let mut orders = Vec::new();
    for (d, h) in discs.iter().zip([1usize, 2, 3, 2]) {
        let Some(rep) = r.guard(class_number_crosscheck(*d, audit), || format!("class group at {d}")) else { continue };
        r.check(rep.passed() && rep.h_composition == h, || format!("D = {d}: {rep:?}, expected order {h}"));
        orders.push(format!("h+({d}) = {}", rep.h_composition));
    }
    r.detail = orders.join(", ");
    r
}

/// Criterion 6: `I * I^-1 = ([1, Omega]; +)` and `N(IJ) = N(I) N(J)`.
pub fn inverse_identity(seed: u64, audit: &mut ProductAudit) -> CriterionReport {
    let mut r = CriterionReport::new(6, "ideal inverse and norm multiplicativity");
    for tier in TIERS {
        let mut s = base_spec(seed, tier, 3, 300, "inverse").sampler();
        let disc_bound = if tier == BaseField::Rational { 60 } else { 4 };
        for _ in 0..300 {
            let ext = s.extension(disc_bound);
            let (i, j) = (s.ideal(&ext), s.ideal(&ext));
            let unit = OrientedIdeal::unit(&ext);
            if let Some(p) = r.guard(audit.mul(&ext, &i, &i.inverse(&ext)), || format!("{i} * {i}^-1")) {
                r.check(p.same_oriented(&unit), || format!("D = {}: {i} times its inverse is {p}", ext.d()));
            }
            if let Some(p) = r.guard(audit.mul(&ext, &i, &j), || format!("{i} * {j}")) {
                let want = crate::ideal::canonical_rational(&(&i.norm(&ext) * &j.norm(&ext)));
                let got = p.norm(&ext);
                r.check(got == want, || format!("D = {}: N({i} * {j}) = {got}, expected {want}", ext.d()));
            }
        }
    }
    r
}

/// Criterion 7: `A * A^-1` lies in the identity class and the identity cube is
/// neutral.
pub fn cube_inverse(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(7, "cube inverse and identity");
    let k = BaseField::Rational;
    let exts: Vec<Extension> = [-4i64, -20, 40].iter().map(|&d| Extension::new(k.int(d)).expect("fundamental")).collect();
    let mut s = base_spec(seed, k, 3, 100, "cube-inverse").sampler();
    for n in 0..100 {
        let ext = &exts[n % exts.len()];
        let Some(a) = r.guard(s.projective_cube(ext), || "sampling".into()) else { continue };
        let id = identity_form(ext);
        if let Some(c) = r.guard(compose_cubes(ext, &a, &a.inverse()), || format!("{a} * inverse")) {
            for f in c.attached_forms() {
                let ok = equivalent_forms(&f, &id).unwrap_or(false);
                r.check(ok, || format!("D = {}: {a} * inverse = {c} has form {f}", ext.d()));
            }
        }
        if let Some(c) = r.guard(compose_cubes(ext, &a, &identity_cube(ext)), || format!("{a} * identity")) {
            for (f, g) in c.attached_forms().iter().zip(a.attached_forms().iter()) {
                let ok = equivalent_forms(f, g).unwrap_or(false);
                r.check(ok, || format!("D = {}: {a} * identity = {c}, form {f} vs {g}", ext.d()));
            }
        }
    }
    r
}

/// Criterion 8: naturality of `phi_prime` under basis changes, and the form
/// transformation laws under single-axis actions.
pub fn naturality(seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(8, "naturality and transformation laws");
    for tier in TIERS {
        let mut s = base_spec(seed, tier, 3, 500, "naturality").sampler();
        let disc_bound = if tier == BaseField::Rational { 60 } else { 4 };
        for n in 0..500 {
            let ext = s.extension(disc_bound);
            let (j1, j2) = (s.ideal(&ext), s.ideal(&ext));
            let axis = n % 3;
            let m = s.proper_matrix();
            let Some(t) = r.guard(triple_from_pair(&ext, &j1, &j2), || format!("triple from {j1}, {j2}")) else { continue };
            let Some(moved) = r.guard(t.rebase(axis, &m), || "rebase".into()) else { continue };
            let lhs = phi_prime(&ext, &moved);
            let rhs = phi_prime(&ext, &t).map(|c| c.act_axis(axis + 1, &m));
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => r.check(x == y, || format!("triple {t}, axis {}, {m}: {x} vs {y}", axis + 1)),
                (Err(e), _) | (_, Err(e)) => r.fail(format!("triple {t}: {}", e.name())),
            }

            let a = Cube::new(std::array::from_fn(|_| s.elem(4)));
            let t = s.matrix();
            let b = a.act_axis(axis + 1, &t);
            let (fa, fb) = (a.attached_forms(), b.attached_forms());
            let det = t.det();
            let sub = Mat2::new(t.p.clone(), -t.r.clone(), -t.q.clone(), t.s.clone());
            for i in 0..3 {
                let want = if i == axis { fa[i].substitute(&sub) } else { fa[i].scale(&det) };
                r.check(fb[i] == want, || format!("{a} under {t} on axis {}: Q{} = {}, expected {want}", axis + 1, i + 1, fb[i]));
            }
        }
    }
    r
}

/// Criterion 9: every audited product agreed with the lattice oracle.
pub fn oracle_independence(audit: &ProductAudit) -> CriterionReport {
    let mut r = CriterionReport::new(9, "oracle independence of ideal products");
    r.checked = audit.checked;
    for f in &audit.failures {
        r.fail(format!("reproducer {f}"));
    }
    r.failed = audit.failures.len();
    if audit.checked == 0 {
        r.fail("no products were audited".into());
    }
    r
}

/// Runs suites 2, 5 and 6 with a fresh audit and reports on the audit.
pub fn oracle_independence_standalone(seed: u64) -> CriterionReport {
    let mut audit = ProductAudit::new();
    cube_law(seed, &mut audit);
    form_bijection(seed, &mut audit);
    inverse_identity(seed, &mut audit);
    oracle_independence(&audit)
}

/// All nine suites in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    let mut audit = ProductAudit::new();
    let c2 = cube_law(seed, &mut audit);
    let c5 = form_bijection(seed, &mut audit);
    let c6 = inverse_identity(seed, &mut audit);
    vec![worked_example(), c2, round_trip(seed), disc_law(seed), c5, c6, cube_inverse(seed), naturality(seed), oracle_independence(&audit)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_passes() {
        let r = worked_example();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.checked, 3);
        assert!(r.line().starts_with("[PASS] criterion 1"));
    }

    #[test]
    fn failures_are_counted_and_truncated() {
        let mut r = CriterionReport::new(0, "t");
        for i in 0..10 {
            r.check(i % 2 == 0, || format!("{i}"));
        }
        assert!(!r.passed);
        assert_eq!((r.checked, r.failed, r.failures.len()), (10, 5, 5));
        assert!(r.line().starts_with("[FAIL]"));
    }

    #[test]
    fn empty_audit_fails() {
        assert!(!oracle_independence(&ProductAudit::new()).passed);
    }
}
