//! The independent lattice oracle: ideal products computed as Z-modules of
//! rank 4 and compared with the library product.
//!
//! cargo run --example oracle_products

use cubecomp::oracle::{naive_module_product, ProductAudit, RandomSpec};
use cubecomp::BaseField;

fn main() -> cubecomp::Result<()> {
    for tier in [BaseField::Rational, BaseField::Sqrt2] {
        let mut s = RandomSpec::new(42, 3, 0, tier).sampler();
        let mut audit = ProductAudit::new();
        for _ in 0..200 {
            let ext = s.extension(6);
            let (i, j) = (s.ideal(&ext), s.ideal(&ext));
            audit.mul(&ext, &i, &j)?;
        }
        println!("{}: {} products, agree: {}", tier.name(), audit.checked, audit.passed());
        for f in audit.failures.iter().take(3) {
            println!("  {f}");
        }
        let ext = s.extension(6);
        let (i, j) = (s.ideal(&ext), s.ideal(&ext));
        println!("  sample at D = {}:\n    I = {i}\n    J = {j}\n    IJ as a lattice: {:?}", ext.d(), naive_module_product(&ext, &i, &j));
    }
    Ok(())
}
