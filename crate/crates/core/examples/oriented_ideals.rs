//! Forms, oriented ideals and their products.
//!
//! cargo run --example oriented_ideals

use cubecomp::forms::{compose_forms, identity_form, phi_map, psi_map};
use cubecomp::ideal::is_oriented_principal;
use cubecomp::{BaseField, Extension, QuadForm};

fn main() -> cubecomp::Result<()> {
    let q = BaseField::Rational;
    for (d, f) in [(-20, (2, 2, 3)), (-23, (2, 1, 3)), (40, (3, 2, -3)), (60, (-1, 0, 15))] {
        let ext = Extension::new(q.int(d))?;
        let form = QuadForm::from_ints(q, f.0, f.1, f.2);
        let i = psi_map(&ext, &form)?;
        let sq = i.mul(&ext, &i)?;
        println!("D = {d}: Q = {form}");
        println!("  psi(Q)     = {i}");
        println!("  N(psi(Q))  = {}", i.norm(&ext));
        println!("  psi(Q)^2   = {sq}");
        println!("  phi(psi^2) = {}", phi_map(&ext, &sq.align_basis(&ext))?);
        println!("  Q o Q      = {}", compose_forms(&ext, &form, &form)?);
        match is_oriented_principal(&ext, &i)? {
            Some(g) => println!("  principal, generator {g}"),
            None => println!("  not principal"),
        }
        let inv = i.inverse(&ext);
        println!("  I * I^-1 principal: {}\n", is_oriented_principal(&ext, &i.mul(&ext, &inv)?)?.is_some());
    }

    let k = BaseField::Sqrt2;
    let ext = Extension::new(k.elem(-1, 2))?;
    let one = identity_form(&ext);
    let i = psi_map(&ext, &one)?;
    println!("Q(sqrt 2), D = {}: identity form {one}", ext.d());
    println!("  psi = {i}, squared = {}", i.mul(&ext, &i)?);
    Ok(())
}
