//! Run the acceptance criteria with a chosen seed.
//!
//! cargo run --release --example verify_suite -- 7

fn main() {
    let seed = std::env::args().nth(1).map_or(42, |s| s.parse().expect("integer seed"));
    let reports = cubecomp::verify::run_all(seed);
    for r in &reports {
        println!("{}", r.line());
        for f in r.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("seed {seed}: {} of {} criteria passed", reports.len() - failed, reports.len());
    std::process::exit(i32::from(failed > 0));
}
