//! Cube composition at discriminant -20, where the class group has order 2.
//!
//! cargo run --example compose_cubes

use cubecomp::cube::{compose_cubes, identity_cube, Cube};
use cubecomp::forms::equivalent_forms;
use cubecomp::{BaseField, Extension};

fn main() -> cubecomp::Result<()> {
    let q = BaseField::Rational;
    let ext = Extension::new(q.int(-20))?;
    let a = Cube::from_ints(q, [1, 0, 0, -2, 0, 1, 3, 2]);
    let e = identity_cube(&ext);
    let show = |name: &str, c: &Cube| {
        let f = c.attached_forms();
        println!("{name}: Q1 = {}, Q2 = {}, Q3 = {}", f[0], f[1], f[2]);
    };
    show("A", &a);
    show("identity", &e);

    let aa = compose_cubes(&ext, &a, &a)?;
    show("A * A", &aa);
    let ae = compose_cubes(&ext, &a, &e)?;
    show("A * identity", &ae);
    let ai = compose_cubes(&ext, &a, &a.inverse())?;
    show("A * A^-1", &ai);

    for (x, y) in e.attached_forms().iter().zip(aa.attached_forms().iter()) {
        assert!(equivalent_forms(x, y)?);
    }

    // composition over Q(sqrt 2)
    let k = BaseField::Sqrt2;
    let ext = Extension::new(k.elem(-1, 2))?;
    let b = Cube::new([k.one(), k.zero(), k.zero(), k.int(-1), k.zero(), k.elem(1, 1), k.int(1), k.elem(1, 2)]);
    println!("\nB over Q(sqrt 2), disc {}", b.disc());
    if let Ok(ext_b) = Extension::new(b.disc()) {
        let bb = compose_cubes(&ext_b, &b, &b)?;
        println!("B * B:\n{}", bb.pretty());
    }
    println!("identity at D = {}:\n{}", ext.d(), identity_cube(&ext).pretty());
    Ok(())
}
