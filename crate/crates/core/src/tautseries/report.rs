use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, TruncatedSeries};

/// First disagreement found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one named check. `pass` is true exactly when `witness` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub pass: bool,
    pub order: usize,
    pub witness: Option<Witness>,
    pub notes: String,
}

impl VerificationReport {
    pub fn note_lines(&self) -> impl Iterator<Item = &str> {
        self.notes.split("; ").filter(|s| !s.is_empty())
    }

    /// Combines sub-reports under one name; the first failing part supplies
    /// the witness. Repeated note lines are kept once.
    pub fn merge(name: &str, order: usize, parts: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut out = ReportBuilder::new(name, order);
        for part in parts {
            for line in part.note_lines() {
                if !out.notes.iter().any(|n| n == line) {
                    out.note(line);
                }
            }
            if let Some(w) = part.witness {
                out.fail(w.index, w.lhs, w.rhs);
            }
        }
        out.finish()
    }
}

pub(crate) struct ReportBuilder {
    name: String,
    order: usize,
    witness: Option<Witness>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(name: &str, order: usize) -> Self {
        ReportBuilder {
            name: name.to_string(),
            order,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, index: i64, lhs: impl Into<String>, rhs: impl Into<String>) {
        if self.witness.is_none() {
            self.witness = Some(Witness {
                index,
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    pub fn compare<T: PartialEq + Display>(&mut self, index: i64, lhs: &T, rhs: &T) -> bool {
        let ok = lhs == rhs;
        if !ok {
            self.fail(index, lhs.to_string(), rhs.to_string());
        }
        ok
    }

    pub fn compare_series<R: Coeff + Display>(&mut self, lhs: &TruncatedSeries<R>, rhs: &TruncatedSeries<R>) -> bool {
        match lhs.first_mismatch(rhs) {
            None => true,
            Some(i) => {
                let show = |s: &TruncatedSeries<R>| s.coeff(i).map_or("-".to_string(), |c| c.to_string());
                self.fail(i as i64, show(lhs), show(rhs));
                false
            }
        }
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            name: self.name,
            pass: self.witness.is_none(),
            order: self.order,
            witness: self.witness,
            notes: self.notes.join("; "),
        }
    }
}

/// Which printed variants of a claim hold at every tested index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjudication {
    pub labels: Vec<String>,
    /// `holds[v]` is true when variant `v` matched everywhere.
    pub holds: Vec<bool>,
    /// Indices where every variant matched (no discrimination possible).
    pub degenerate: Vec<String>,
}

impl Adjudication {
    pub fn new(labels: &[&str]) -> Self {
        Adjudication {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            holds: vec![true; labels.len()],
            degenerate: Vec::new(),
        }
    }

    /// Record one data point: `matches[v]` says whether variant `v` agrees.
    pub fn record(&mut self, at: impl Into<String>, matches: &[bool]) {
        for (h, m) in self.holds.iter_mut().zip(matches) {
            *h &= *m;
        }
        if matches.iter().all(|m| *m) {
            self.degenerate.push(at.into());
        }
    }

    pub fn unique(&self) -> Option<&str> {
        let winners: Vec<_> = self.labels.iter().zip(&self.holds).filter(|(_, h)| **h).collect();
        (winners.len() == 1).then(|| winners[0].0.as_str())
    }

    pub fn summary(&self, claim: &str) -> String {
        let winners: Vec<&str> = self
            .labels
            .iter()
            .zip(&self.holds)
            .filter(|(_, h)| **h)
            .map(|(l, _)| l.as_str())
            .collect();
        let verdict = match winners.len() {
            0 => "no variant holds".to_string(),
            1 => format!("holds: {}", winners[0]),
            _ => format!("ambiguous, all of {} hold", winners.join(", ")),
        };
        if self.degenerate.is_empty() {
            format!("{claim}: {verdict}")
        } else {
            format!(
                "{claim}: {verdict} (undiscriminating at {})",
                self.degenerate.join(",")
            )
        }
    }

    pub(crate) fn apply(&self, report: &mut ReportBuilder, claim: &str) {
        report.note(self.summary(claim));
        if self.unique().is_none() {
            let holding = self.holds.iter().filter(|h| **h).count();
            report.fail(-1, claim, format!("{holding} of {} variants hold uniformly", self.labels.len()));
        }
    }
}
