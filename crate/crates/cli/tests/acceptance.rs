//! One line per acceptance criterion. Criteria 1-11 run in process and are
//! timed against the limits below; criterion 12 launches the binary.

use std::process::Command;
use std::time::{Duration, Instant};

use abclosure::verify::{run_criterion, CRITERIA};

/// Wall-clock limits; criteria without one are unbounded.
const LIMITS: [(u8, Duration); 4] = [
    (1, Duration::from_secs(5)),
    (2, Duration::from_secs(10)),
    (5, Duration::from_secs(30)),
    (7, Duration::from_secs(60)),
];

fn verify_stdout(workers: Option<&str>) -> (Vec<u8>, Option<i32>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abclosure"));
    cmd.args(["verify", "--format", "json"]);
    match workers {
        Some(w) => cmd.env("ABCLOSURE_WORKERS", w),
        None => cmd.env_remove("ABCLOSURE_WORKERS"),
    };
    let out = cmd.output().expect("binary runs");
    (out.stdout, out.status.code())
}

fn determinism() -> (bool, String) {
    let (a, ca) = verify_stdout(None);
    let (b, cb) = verify_stdout(None);
    let (one, c1) = verify_stdout(Some("1"));
    let (eight, c8) = verify_stdout(Some("8"));
    let repeat = a == b && ca == cb;
    let workers = one == eight && c1 == c8 && one == a;
    let inproc = run_criterion(12);
    (
        repeat && workers && inproc.passed && !a.is_empty(),
        format!(
            "two runs identical: {repeat}; workers 1 vs 8 identical: {workers}; {} bytes, exit {ca:?}; {}",
            a.len(),
            inproc.details.join("; ")
        ),
    )
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, title) in CRITERIA {
        let t = Instant::now();
        let (passed, detail) = if id == 12 {
            determinism()
        } else {
            let o = run_criterion(id);
            (o.passed, o.details.join("; "))
        };
        let took = t.elapsed();
        let limit = LIMITS.iter().find(|l| l.0 == id).map(|l| l.1);
        let in_time = limit.is_none_or(|l| took <= l);
        let ok = passed && in_time;
        let budget = match limit {
            Some(l) => format!("{:.2}s of {}s", took.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", took.as_secs_f64()),
        };
        println!("criterion {id:>2} {} {title} [{budget}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
