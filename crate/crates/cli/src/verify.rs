//! Verification sweeps: fan out per-parameter work items across threads,
//! then print an ordered report with per-case status, the first failure
//! with both sides, and the wall-clock duration.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

/// Outcome of one verification case.
#[derive(Debug)]
pub struct CaseOutcome {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of a whole sweep.
pub struct SweepReport {
    pub check: String,
    pub range: String,
    pub threads: usize,
    pub cases: Vec<CaseOutcome>,
    pub duration: Duration,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    /// Prints the report and returns whether every case passed.
    pub fn print(&self) -> bool {
        println!(
            "check {}: {} ({} cases, {} threads)",
            self.check,
            self.range,
            self.cases.len(),
            self.threads
        );
        for case in &self.cases {
            println!(
                "{}: {} {}",
                case.label,
                if case.pass { "ok" } else { "FAIL" },
                case.detail
            );
        }
        match self.cases.iter().find(|c| !c.pass) {
            Some(first) => println!("first failure: {}: {}", first.label, first.detail),
            None => println!("first failure: none"),
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        println!(
            "result: {} ({passed}/{} cases) in {:.2?}",
            if self.all_pass() { "pass" } else { "FAIL" },
            self.cases.len(),
            self.duration
        );
        self.all_pass()
    }
}

/// Runs `case` over `params`, distributing work items across `threads`
/// workers. Results are reassembled in parameter order, so the report is
/// identical for every thread count.
pub fn run_sweep<F>(
    check: &str,
    range: String,
    params: Vec<usize>,
    threads: usize,
    case: F,
) -> SweepReport
where
    F: Fn(usize) -> CaseOutcome + Sync,
{
    let started = Instant::now();
    let threads = threads.max(1).min(params.len().max(1));
    let slots: Vec<OnceLock<CaseOutcome>> = params.iter().map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= params.len() {
                    break;
                }
                slots[i]
                    .set(case(params[i]))
                    .expect("each work item is claimed by exactly one worker");
            });
        }
    });
    SweepReport {
        check: check.to_string(),
        range,
        threads,
        cases: slots
            .into_iter()
            .map(|slot| slot.into_inner().expect("all work items completed"))
            .collect(),
        duration: started.elapsed(),
    }
}
