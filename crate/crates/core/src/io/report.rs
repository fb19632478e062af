use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::algebra::{CheckReport, Verdict, Witness};
use crate::identities::render_residual;

/// One named check and its outcome.
#[derive(Clone, Debug)]
pub struct Record {
    pub check: String,
    pub strategy: String,
    pub report: CheckReport,
    pub elapsed: Option<Duration>,
}

/// Results of a command over one algebra, in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub subject: String,
    pub basis: Vec<String>,
    pub records: Vec<Record>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>, basis: &[String]) -> Report {
        Report {
            subject: subject.into(),
            basis: basis.to_vec(),
            records: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        check: impl Into<String>,
        strategy: impl Into<String>,
        report: CheckReport,
    ) {
        self.records.push(Record {
            check: check.into(),
            strategy: strategy.into(),
            report,
            elapsed: None,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.report.holds())
    }

    /// 0 when every check holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_hold() {
            0
        } else {
            1
        }
    }

    fn label(&self, i: usize) -> String {
        self.basis.get(i).cloned().unwrap_or_else(|| i.to_string())
    }

    fn witness_json(&self, w: &Witness) -> Value {
        let counterexample = w.counterexample.as_ref().map(|point| {
            Value::Object(
                point
                    .iter()
                    .map(|(k, q)| (k.clone(), Value::String(q.to_string())))
                    .collect::<Map<_, _>>(),
            )
        });
        json!({
            "tuple": w.tuple.iter().map(|&i| self.label(i)).collect::<Vec<_>>(),
            "coordinate": self.label(w.coordinate),
            "residual": render_residual(&w.residual),
            "vector": w.vector.coords().iter().map(render_residual).collect::<Vec<_>>(),
            "counterexample": counterexample,
        })
    }

    /// Machine-readable form. Keys are sorted; elapsed times are only
    /// included when `timings` is set, so output is reproducible.
    pub fn to_json(&self, timings: bool) -> String {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let mut obj = json!({
                    "identity": r.check,
                    "strategy": r.strategy,
                    "verdict": r.report.verdict.as_str(),
                    "assumptions": r.report.assumptions.to_strings(),
                    "witness": r.report.witness.as_ref().map(|w| self.witness_json(w)),
                    "notes": r.report.notes,
                });
                if timings {
                    let ms = r.elapsed.map(|d| d.as_secs_f64() * 1000.0);
                    obj["elapsed_ms"] = json!(ms);
                }
                obj
            })
            .collect();
        let doc = json!({
            "algebra": self.subject,
            "checks": records,
            "notes": self.notes,
            "all_hold": self.all_hold(),
        });
        serde_json::to_string_pretty(&doc).expect("json") + "\n"
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        writeln!(s, "algebra: {}", self.subject).unwrap();
        for note in &self.notes {
            writeln!(s, "note: {note}").unwrap();
        }
        for r in &self.records {
            write!(s, "{} [{}]: {}", r.check, r.strategy, r.report.verdict).unwrap();
            if timings {
                if let Some(d) = r.elapsed {
                    write!(s, " ({:.1} ms)", d.as_secs_f64() * 1000.0).unwrap();
                }
            }
            s.push('\n');
            if !r.report.assumptions.is_empty() {
                writeln!(
                    s,
                    "  assuming {}",
                    r.report.assumptions.to_strings().join(", ")
                )
                .unwrap();
            }
            if let Some(w) = &r.report.witness {
                if !w.tuple.is_empty() {
                    let t: Vec<String> = w.tuple.iter().map(|&i| self.label(i)).collect();
                    writeln!(s, "  at ({})", t.join(", ")).unwrap();
                }
                writeln!(
                    s,
                    "  coefficient of {}: {}",
                    self.label(w.coordinate),
                    render_residual(&w.residual)
                )
                .unwrap();
                if let Some(point) = &w.counterexample {
                    let p: Vec<String> = point.iter().map(|(k, q)| format!("{k} = {q}")).collect();
                    writeln!(s, "  nonzero at {}", p.join(", ")).unwrap();
                }
            }
            for note in &r.report.notes {
                writeln!(s, "  note: {note}").unwrap();
            }
        }
        let fails = self
            .records
            .iter()
            .filter(|r| r.report.verdict == Verdict::Fails)
            .count();
        writeln!(
            s,
            "{} checks, {} hold, {} fail",
            self.records.len(),
            self.records.len() - fails,
            fails
        )
        .unwrap();
        s
    }
}
