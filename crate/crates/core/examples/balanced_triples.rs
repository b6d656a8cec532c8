//! Cubes and balanced triples of oriented ideals: psi', phi' and the
//! triple product.
//!
//! cargo run --example balanced_triples

use cubecomp::cube::{phi_prime, psi_prime, Cube};
use cubecomp::forms::psi_map;
use cubecomp::triple::{triple_from_pair, triples_equivalent};
use cubecomp::{BaseField, Extension, QuadForm};

fn main() -> cubecomp::Result<()> {
    let q = BaseField::Rational;
    let ext = Extension::new(q.int(-20))?;
    let a = Cube::from_ints(q, [1, 0, 0, -2, 0, 1, 3, 2]);
    let t = psi_prime(&ext, &a)?;
    println!("psi'(A) = {t}");
    let back = phi_prime(&ext, &t)?;
    println!("phi'(psi'(A)):\n{}", back.pretty());
    println!("psi' of that is equivalent: {}", triples_equivalent(&ext, &t, &psi_prime(&ext, &back)?)?);

    // any two ideals determine a balanced triple
    let j1 = psi_map(&ext, &QuadForm::from_ints(q, 2, 2, 3))?;
    let j2 = psi_map(&ext, &QuadForm::from_ints(q, 3, 2, 2))?;
    let t2 = triple_from_pair(&ext, &j1, &j2)?;
    println!("\ntriple from pair = {t2}");
    println!("its cube:\n{}", phi_prime(&ext, &t2)?.pretty());
    let prod = t.mul(&ext, &t2)?;
    println!("product triple = {prod}");

    let k = BaseField::Sqrt2;
    let ext = Extension::new(k.elem(-1, 2))?;
    let i = psi_map(&ext, &cubecomp::forms::identity_form(&ext))?;
    let t = triple_from_pair(&ext, &i, &i)?;
    println!("\nQ(sqrt 2) triple = {t}");
    println!("{}", phi_prime(&ext, &t)?.pretty());
    Ok(())
}
