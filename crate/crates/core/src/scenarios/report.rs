use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{FieldElem, SqMatrix};
use crate::error::{Error, Result};
use crate::freeness::{CertVerdict, FreenessCertificate, Strength, WordSampleReport};
use crate::places::PlaceSpec;

/// Overall outcome of a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// An exact-pair certificate holds and every check passed.
    Certified,
    /// A subgroup-witness certificate holds and the word sample passed.
    Partial,
    /// No construction is available for this case.
    Open,
    /// Something that should have held did not.
    Failed,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "CERTIFIED",
            Verdict::Partial => "PARTIAL",
            Verdict::Open => "OPEN",
            Verdict::Failed => "FAILED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A computed value set against the value stated for the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub name: String,
    pub stated: String,
    pub computed: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub id: String,
    pub title: String,
    pub involution: String,
    pub target_pair: Vec<String>,
    pub elements: Vec<NamedValue>,
    pub images: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub matrices: Vec<NamedMatrix>,
    pub place: Option<PlaceSpec>,
    pub certificate: Option<FreenessCertificate>,
    /// Disagreements found by the independent valuation checker.
    pub recheck_issues: Vec<String>,
    pub word_sample: Option<WordSampleReport>,
    pub residues: Vec<NamedValue>,
    pub comparisons: Vec<Comparison>,
    pub verdict: Verdict,
    pub expected_verdict: Verdict,
    pub notes: Vec<String>,
}

impl ScenarioReport {
    pub(crate) fn new(id: &str, title: &str, involution: String, expected: Verdict) -> Self {
        ScenarioReport {
            id: id.to_string(),
            title: title.to_string(),
            involution,
            target_pair: vec![],
            elements: vec![],
            images: vec![],
            checks: vec![],
            matrices: vec![],
            place: None,
            certificate: None,
            recheck_issues: vec![],
            word_sample: None,
            residues: vec![],
            comparisons: vec![],
            verdict: Verdict::Failed,
            expected_verdict: expected,
            notes: vec![],
        }
    }

    pub(crate) fn element(&mut self, name: &str, value: impl Display) {
        self.elements.push(NamedValue {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub(crate) fn image(&mut self, name: &str, value: impl Display) {
        self.images.push(NamedValue {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub(crate) fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub(crate) fn compare<T: PartialEq + Display>(&mut self, name: &str, stated: &T, computed: &T) {
        self.comparisons.push(Comparison {
            name: name.into(),
            stated: one_line(stated),
            computed: one_line(computed),
            equal: stated == computed,
        });
    }

    pub(crate) fn matrix<E: FieldElem + Display>(&mut self, name: &str, m: &SqMatrix<E>) {
        self.matrices.push(NamedMatrix {
            name: name.into(),
            rows: m.to_strings(),
        });
    }

    pub(crate) fn note(&mut self, s: &str) {
        self.notes.push(s.to_string());
    }

    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.recheck_issues.is_empty()
    }

    /// Sets the verdict from the certificate, word sample and checks.
    pub(crate) fn conclude(&mut self) {
        self.verdict = match &self.certificate {
            _ if self.expected_verdict == Verdict::Open => Verdict::Open,
            Some(c) if c.verdict == CertVerdict::Certified && self.checks_passed() => {
                let sampled = self.word_sample.as_ref().map(|w| w.passed());
                match (c.strength, sampled) {
                    (Strength::ExactPair, None | Some(true)) => Verdict::Certified,
                    (Strength::SubgroupWitness, Some(true)) => Verdict::Partial,
                    _ => Verdict::Failed,
                }
            }
            _ => Verdict::Failed,
        };
    }

    /// True when the outcome is the one the scenario table expects.
    pub fn as_expected(&self) -> bool {
        self.verdict == self.expected_verdict
    }
}

fn one_line(x: &impl Display) -> String {
    x.to_string().replace('\n', " ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::InvalidSpec(format!("unknown report format {s:?}"))),
        }
    }
}

/// Serializes a report. Both formats are deterministic.
pub fn emit_report(r: &ScenarioReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => text(r),
    }
}

fn push_matrix(out: &mut String, rows: &[Vec<String>]) {
    for row in rows {
        let _ = writeln!(out, "    [{}]", row.join(", "));
    }
}

fn vals(v: &[Option<i64>]) -> String {
    v.iter()
        .map(|x| x.map_or("inf".to_string(), |k| k.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn text(r: &ScenarioReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario {}: {}", r.id, r.title);
    let _ = writeln!(out, "involution: {}", r.involution);
    let _ = writeln!(out, "verdict: {} (expected {})", r.verdict, r.expected_verdict);
    if !r.target_pair.is_empty() {
        let _ = writeln!(out, "target pair: {{{}}}", r.target_pair.join(", "));
    }
    let section = |out: &mut String, title: &str, items: &[NamedValue]| {
        if !items.is_empty() {
            let _ = writeln!(out, "{title}:");
            for v in items {
                let _ = writeln!(out, "  {} = {}", v.name, v.value);
            }
        }
    };
    section(&mut out, "elements", &r.elements);
    section(&mut out, "images", &r.images);
    if !r.checks.is_empty() {
        let _ = writeln!(out, "checks:");
        for c in &r.checks {
            let _ = writeln!(out, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
        }
    }
    for m in &r.matrices {
        let _ = writeln!(out, "matrix {}:", m.name);
        push_matrix(&mut out, &m.rows);
    }
    if let Some(p) = &r.place {
        let _ = writeln!(
            out,
            "place {}: {} = 0 in {}, {} -> {}, uniformizer {}",
            p.name, p.base_prime, p.base_var, p.generator, p.gen_image, p.uniformizer
        );
    }
    if let Some(c) = &r.certificate {
        let strength = match c.strength {
            Strength::ExactPair => "EXACT_PAIR",
            Strength::SubgroupWitness => "SUBGROUP_WITNESS",
        };
        let verdict = match c.verdict {
            CertVerdict::Certified => "CERTIFIED",
            CertVerdict::Failed => "FAILED",
            CertVerdict::Inapplicable => "INAPPLICABLE",
        };
        let _ = writeln!(out, "certificate at {}: {verdict} ({strength})", c.place);
        let eig = c.eigen_valuations.iter().map(|v| v.to_string()).collect::<Vec<_>>();
        let _ = writeln!(out, "  eigen valuations: {}", eig.join(" "));
        for (name, m) in [("B", &c.b_valuations), ("B^-1", &c.binv_valuations)] {
            let rows = m.iter().map(|r| format!("[{}]", vals(r))).collect::<Vec<_>>();
            let _ = writeln!(out, "  {name} valuations: {}", rows.join(" "));
        }
        if r.recheck_issues.is_empty() {
            let _ = writeln!(out, "  independent recheck: agrees");
        } else {
            for i in &r.recheck_issues {
                let _ = writeln!(out, "  independent recheck: {i}");
            }
        }
    }
    if let Some(w) = &r.word_sample {
        let _ = writeln!(
            out,
            "word sample: {} words of length <= {}, seed {:#x}: {}",
            w.count,
            w.max_len,
            w.seed,
            if w.passed() { "no relations found" } else { "relations found" }
        );
        for f in &w.failures {
            let _ = writeln!(out, "  identity: {f}");
        }
    }
    section(&mut out, "residues", &r.residues);
    if !r.comparisons.is_empty() {
        let _ = writeln!(out, "stated values:");
        for c in &r.comparisons {
            if c.equal {
                let _ = writeln!(out, "  [ok] {} = {}", c.name, c.computed);
            } else {
                let _ = writeln!(
                    out,
                    "  [DIFFERS] {}: stated {}, computed {}",
                    c.name, c.stated, c.computed
                );
            }
        }
    }
    if !r.notes.is_empty() {
        let _ = writeln!(out, "notes:");
        for n in &r.notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    out
}
