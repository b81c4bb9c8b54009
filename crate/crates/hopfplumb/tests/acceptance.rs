//! Runs every acceptance criterion and prints one line per criterion.
//! Built without the libtest harness so the lines are never captured.

use std::process::ExitCode;

use hopfplumb::acceptance;

fn main() -> ExitCode {
    println!();
    let outcomes = acceptance::run_with(None, |o| println!("{o}"));
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    if outcomes.len() == 8 && failed.is_empty() {
        println!("acceptance: all 8 criteria passed\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}\n");
        ExitCode::FAILURE
    }
}
