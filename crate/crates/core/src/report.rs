//! Check reports for the command-line runner: a named list of verdicts with
//! optional witness text. Rendering is deterministic (wall times are kept
//! out of the report body so identical inputs give byte-identical output).

use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub checks: Vec<CheckRecord>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            pass,
            detail,
            elapsed: Duration::ZERO,
        });
    }

    /// Run a check closure, capturing its verdict and wall time.
    pub fn run<F>(&mut self, name: impl Into<String>, f: F)
    where
        F: FnOnce() -> crate::error::Result<(bool, Option<String>)>,
    {
        let start = Instant::now();
        let (pass, detail) = match f() {
            Ok(x) => x,
            Err(e) => (false, Some(format!("error: {e}"))),
        };
        self.checks.push(CheckRecord {
            name: name.into(),
            pass,
            detail,
            elapsed: start.elapsed(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Deterministic text rendering: one line per check plus a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => out.push_str(&format!("{verdict} {}: {d}\n", c.name)),
                None => out.push_str(&format!("{verdict} {}\n", c.name)),
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            self.command,
            self.checks.len(),
            failed
        ));
        out
    }

    /// Wall times, for the optional timing channel (stderr).
    pub fn render_timings(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {:?}\n", c.name, c.elapsed));
        }
        out
    }
}
