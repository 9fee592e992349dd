//! Runs the full reproduction suite and prints one line per check.
fn main() {
    let checks = wolfform::verify::run_all();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{} {status} {:<50} {:.1?}  {}", c.id, c.name, c.elapsed, c.detail);
    }
    std::process::exit(i32::from(!checks.iter().all(|c| c.passed)));
}
