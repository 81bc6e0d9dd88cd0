//! Report records and the emitter that renders them as human-readable
//! lines or JSON-lines.
//!
//! JSON output is deterministic: parameters live in an ordered map,
//! timings are excluded from serialization, and identical invocations
//! produce byte-identical lines.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ErratumConfirmed,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ErratumConfirmed => "erratum-confirmed",
            Status::Inconclusive => "inconclusive",
        };
        f.write_str(text)
    }
}

/// One verification record. `lhs`/`rhs` hold exact rational strings when
/// the check compares two rationals, and are omitted otherwise.
#[derive(Serialize)]
pub struct CheckReport {
    pub check_name: &'static str,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Wall time of the underlying computation. Shown in human summaries
    /// only; serializing it would break byte-identical reruns.
    #[serde(skip)]
    pub elapsed_ms: u64,
}

pub fn params_of<K: fmt::Display, V: fmt::Display>(pairs: &[(K, V)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Sink {
    Human,
    Jsonl,
}

/// Streams reports to the chosen sink and tracks the exit verdict.
pub struct Runner {
    sink: Sink,
    started: Instant,
    compute_ms: u64,
    total: usize,
    pass: usize,
    fail: usize,
    erratum: usize,
    inconclusive: usize,
}

impl Runner {
    pub fn new(sink: Sink) -> Self {
        Runner {
            sink,
            started: Instant::now(),
            compute_ms: 0,
            total: 0,
            pass: 0,
            fail: 0,
            erratum: 0,
            inconclusive: 0,
        }
    }

    /// Emits one report. In human mode, passing reports are printed only
    /// when `verbose` is set; anything else always prints.
    pub fn emit(&mut self, report: &CheckReport, verbose: bool) {
        self.total += 1;
        self.compute_ms += report.elapsed_ms;
        match report.status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::ErratumConfirmed => self.erratum += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
        match self.sink {
            Sink::Jsonl => {
                println!(
                    "{}",
                    serde_json::to_string(report).expect("reports serialize")
                );
            }
            Sink::Human => {
                if verbose || report.status != Status::Pass {
                    println!("{}", human_line(report));
                }
            }
        }
    }

    /// Prints the human summary and returns whether no report failed.
    pub fn finish(self) -> bool {
        if self.sink == Sink::Human {
            let mut parts = vec![format!("{} pass", self.pass)];
            if self.fail > 0 {
                parts.push(format!("{} fail", self.fail));
            }
            if self.erratum > 0 {
                parts.push(format!("{} erratum-confirmed", self.erratum));
            }
            if self.inconclusive > 0 {
                parts.push(format!("{} inconclusive", self.inconclusive));
            }
            println!(
                "{} check(s): {} (compute {} ms, wall {} ms)",
                self.total,
                parts.join(", "),
                self.compute_ms,
                self.started.elapsed().as_millis()
            );
        }
        self.fail == 0
    }
}

fn human_line(report: &CheckReport) -> String {
    let mut line = format!("[{}] {}", report.status, report.check_name);
    for (k, v) in &report.params {
        line.push_str(&format!(" {}={}", k, v));
    }
    if let (Some(lhs), Some(rhs)) = (&report.lhs, &report.rhs) {
        if report.status != Status::Pass {
            line.push_str(&format!(" lhs={} rhs={}", lhs, rhs));
        }
    }
    line
}
