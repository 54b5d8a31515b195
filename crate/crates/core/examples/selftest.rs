//! Runs the invariant suite and prints one line per check.

use psp4::oracle::max_enum_from_env;
use psp4::selftest::selftest;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = selftest(&[4, 8], max_enum_from_env())?;
    for c in &report.checks {
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
