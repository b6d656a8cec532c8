//! The three quadratic forms of a 2x2x2 cube and their common discriminant.
//!
//! cargo run --example cube_forms

use cubecomp::cube::Cube;
use cubecomp::BaseField;

fn main() {
    let q = BaseField::Rational;
    for entries in [[0, 1, 1, 0, 1, 0, 0, -1], [1, 0, 0, -2, 0, 1, 3, 2], [2, 1, 0, 3, -1, 1, 1, 5]] {
        let a = Cube::from_ints(q, entries);
        println!("{}", a.pretty());
        for (i, f) in a.attached_forms().iter().enumerate() {
            println!("  Q{} = {f}    disc {}", i + 1, f.disc());
        }
        println!("  disc(A) = {}, projective: {}\n", a.disc(), a.is_projective());
    }

    // over Q(sqrt 2) the entries carry a sqrt 2 part
    let k = BaseField::Sqrt2;
    let a = Cube::new([k.one(), k.zero(), k.zero(), k.elem(1, 1), k.zero(), k.elem(0, 1), k.int(1), k.elem(1, -1)]);
    println!("{}", a.pretty());
    for (i, f) in a.attached_forms().iter().enumerate() {
        println!("  Q{} = {f}", i + 1);
    }
    println!("  disc(A) = {}", a.disc());
}
