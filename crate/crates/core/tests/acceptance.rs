//! One line per criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;

use wittsat::acceptance::CRITERIA;

fn main() -> ExitCode {
    let mut failed = 0;
    for criterion in CRITERIA {
        let r = criterion();
        println!("{r}");
        failed += !r.passed as usize;
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
