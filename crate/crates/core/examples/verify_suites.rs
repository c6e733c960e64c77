use cbck::verify::{run_all, SUITES};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    println!("suites: {}", SUITES.join(", "));
    for report in run_all(seed) {
        for check in &report.checks {
            let mark = if check.passed { "ok  " } else { "FAIL" };
            println!("{mark} {:<12} {}", report.suite, check.name);
        }
    }
}
