//! Runs the recognition pipeline on |PSp4(q)| and nse(PSp4(q)) and prints the trace.
//!
//! Usage: cargo run --example characterize -- [q]

use psp4::characterize::{characterize, CheckStatus, Status};
use psp4::sympl::{group_order, nse_set};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let verdict = characterize(&group_order(q)?, &nse_set(q)?);
    println!("outcome: {:?}", verdict.outcome);
    let Some(trace) = verdict.trace else { return Ok(()) };
    for c in &trace.checks {
        let mark = match c.status {
            CheckStatus::Passed => "pass",
            CheckStatus::Failed => "FAIL",
            CheckStatus::Cited => "cite",
        };
        println!("[{mark}] {}: {}", c.name, c.witness);
    }
    for e in &trace.entries {
        let mark = match e.status {
            Status::Eliminated => "x",
            Status::Confirming => "=",
            Status::NeedsManualLemma => "?",
        };
        println!("{mark} {:<11} {:<48} {}", e.family.name(), e.case, e.witness);
    }
    println!(
        "eliminated {}, confirming {:?}, manual {}",
        trace.count(Status::Eliminated),
        trace.confirming_groups(),
        trace.count(Status::NeedsManualLemma)
    );
    Ok(())
}
