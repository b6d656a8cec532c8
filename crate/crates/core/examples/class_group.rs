//! Narrow class groups over Q from form composition, checked against a
//! brute-force count.
//!
//! cargo run --example class_group -- -23 -84 136

use cubecomp::oracle::{class_number_crosscheck, ProductAudit};

fn main() -> cubecomp::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer discriminant")).collect();
    let discs = if args.is_empty() { vec![-4, -20, -23, -47, -84, 5, 12, 40, 60, 136] } else { args };
    let mut audit = ProductAudit::new();
    for d in discs {
        let rep = class_number_crosscheck(d, &mut audit)?;
        println!("D = {d}: h+ = {} (naive {}), group: {}", rep.h_composition, rep.h_naive, rep.is_group);
        for (i, c) in rep.classes.iter().enumerate() {
            println!("  [{i}] {c}");
        }
        for row in &rep.table {
            let cells: Vec<String> = row.iter().map(|x| x.map_or("?".into(), |v| v.to_string())).collect();
            println!("    {}", cells.join(" "));
        }
    }
    println!("{} ideal products audited, all agree: {}", audit.checked, audit.passed());
    Ok(())
}
