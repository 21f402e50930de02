//! Bookkeeping for the acceptance run: each criterion collects named checks
//! and ends as a single PASS/FAIL line.

use std::error::Error;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

pub type CheckResult = Result<(), Box<dyn Error>>;

/// Final state of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub details: Vec<String>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{:>2}] {} ({:.1}s)", self.id, self.title, self.elapsed.as_secs_f64())?;
        if !self.details.is_empty() {
            write!(f, ": {}", self.details.join("; "))?;
        }
        Ok(())
    }
}

/// A criterion in progress.
#[derive(Debug)]
pub struct Criterion {
    id: u8,
    title: &'static str,
    started: Instant,
    passed: bool,
    details: Vec<String>,
}

impl Criterion {
    pub fn new(id: u8, title: &'static str) -> Self {
        Self { id, title, started: Instant::now(), passed: true, details: Vec::new() }
    }

    /// Runs `body`, turning an error or a panic into a failed criterion.
    pub fn run(id: u8, title: &'static str, body: impl FnOnce(&mut Criterion) -> CheckResult) -> Outcome {
        let mut criterion = Self::new(id, title);
        match catch_unwind(AssertUnwindSafe(|| body(&mut criterion))) {
            Ok(Ok(())) => {}
            Ok(Err(e)) => criterion.fail(format!("error: {e}")),
            Err(panic) => {
                let message = panic
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| panic.downcast_ref::<String>().cloned())
                    .unwrap_or_default();
                criterion.fail(format!("panicked: {message}"));
            }
        }
        criterion.finish()
    }

    /// Records `detail`, marking the criterion failed unless `ok`.
    pub fn check(&mut self, ok: bool, detail: impl Into<String>) {
        if ok {
            self.details.push(detail.into());
        } else {
            self.fail(detail);
        }
    }

    /// Records an informational detail.
    pub fn note(&mut self, detail: impl Into<String>) {
        self.details.push(detail.into());
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.passed = false;
        self.details.push(format!("FAILED {}", detail.into()));
    }

    /// Checks that `elapsed` stays within `limit`.
    pub fn within(&mut self, what: &str, elapsed: Duration, limit: Duration) {
        self.check(elapsed <= limit, format!("{what} {:.1}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()));
    }

    pub fn finish(self) -> Outcome {
        Outcome {
            id: self.id,
            title: self.title,
            passed: self.passed,
            elapsed: self.started.elapsed(),
            details: self.details,
        }
    }
}

/// Prints one line per outcome and a summary; true when all passed.
pub fn summarize(outcomes: &[Outcome]) -> bool {
    for outcome in outcomes {
        println!("{outcome}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("acceptance: {passed} of {} criteria passed", outcomes.len());
    passed == outcomes.len()
}
