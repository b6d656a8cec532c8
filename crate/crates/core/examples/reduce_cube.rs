//! Reduce a projective cube to the shape (1, 0, 0, d, 0, f, g, h) and replay
//! the transcript.
//!
//! cargo run --example reduce_cube

use cubecomp::cube::{reduce_cube, Cube};
use cubecomp::{BaseField, Mat2};

fn main() -> cubecomp::Result<()> {
    let q = BaseField::Rational;
    let base = Cube::from_ints(q, [1, 0, 0, -2, 0, 1, 3, 2]);
    let moved = base
        .act_axis(1, &Mat2::from_ints(q, 2, 1, 1, 1))
        .act_axis(2, &Mat2::from_ints(q, 1, 3, 0, 1))
        .act_axis(3, &Mat2::from_ints(q, 0, -1, 1, 4));
    println!("input:\n{}", moved.pretty());

    let (r, t) = reduce_cube(&moved)?;
    println!("reduced:\n{}", r.pretty());
    for (axis, m) in &t.steps {
        println!("  axis {axis}: {m}");
    }
    assert_eq!(t.replay(&moved), r);
    assert_eq!(r.disc(), moved.disc());

    let k = BaseField::Sqrt2;
    let a = Cube::new([k.one(), k.zero(), k.zero(), k.elem(1, 1), k.zero(), k.elem(0, 1), k.int(1), k.elem(1, -1)])
        .act_axis(2, &Mat2::new(k.elem(1, 1), k.one(), k.int(1), k.zero()))
        .act_axis(3, &Mat2::new(k.one(), k.elem(0, 1), k.zero(), k.one()));
    let (r, t) = reduce_cube(&a)?;
    println!("\nover Q(sqrt 2), {} steps:\n{}", t.steps.len(), r.pretty());
    Ok(())
}
