//! One line per acceptance criterion over the rationals; exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qthopf::suite::{run_suite, Fixtures};
use qthopf::Field;

fn main() -> ExitCode {
    let start = Instant::now();
    let run = run_suite(Field::Rational, &Fixtures::bundled());
    for c in &run.criteria {
        let s = c.summary();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}: {} - {}", c.id, c.title, s.detail.unwrap_or_default());
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if run.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
