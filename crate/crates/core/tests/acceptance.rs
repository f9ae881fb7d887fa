//! Acceptance criteria at full scale, one line per criterion.

use std::process::ExitCode;

use exop::verify::{run_suite, Suite, SuiteConfig};

const CRITERIA: [(u8, &str, Suite); 6] = [
    (1, "grand route equality", Suite::CrossRoute),
    (2, "confluent limit on random families", Suite::ConfluentLimit),
    (3, "Krein-Adler equivalence", Suite::KreinAdler),
    (4, "Schrödinger residuals", Suite::Residual),
    (5, "chain consistency", Suite::Chain),
    (6, "identity suite", Suite::Recursions),
];

fn main() -> ExitCode {
    let config = SuiteConfig::default();
    let mut all = true;
    for (number, title, suite) in CRITERIA {
        let report = run_suite(suite, &config);
        println!("criterion {number} ({title}): {report}");
        for failure in &report.failures {
            println!("    {failure}");
        }
        all &= report.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
