//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Tolerances: every comparison is exact integer equality. Wall-clock bounds
//! are < 1 s for criteria 1–2, < 60 s for 7–8 and < 600 s for 3–5.

use std::process::ExitCode;
use std::time::Duration;

use igr::suites::{self, FAST_LIMIT, MINUTE_LIMIT, SWEEP_LIMIT};

fn pinned_limit(id: u8) -> Option<Duration> {
    match id {
        1 | 2 => Some(FAST_LIMIT),
        7 | 8 => Some(MINUTE_LIMIT),
        3..=5 => Some(SWEEP_LIMIT),
        _ => None,
    }
}

fn main() -> ExitCode {
    igr::init_threads().expect("thread pool");
    assert_eq!(FAST_LIMIT, Duration::from_secs(1));
    assert_eq!(MINUTE_LIMIT, Duration::from_secs(60));
    assert_eq!(SWEEP_LIMIT, Duration::from_secs(600));
    let mut failed = 0;
    for id in 1..=10u8 {
        let r = suites::criterion(id).expect("criterion exists");
        assert_eq!(r.limit, pinned_limit(id), "criterion {id} time bound");
        println!("{}", r.line());
        for n in &r.notes {
            println!("      {n}");
        }
        if !r.pass() {
            failed += 1;
            for f in &r.failures {
                println!("      failure: {f}");
            }
            if !r.within_limit() {
                println!("      over time bound {:?}", r.limit);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
