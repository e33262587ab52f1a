//! End-to-end scenarios: build the elements, check them against the
//! involution, specialize, represent, certify and report.

mod heis;
mod report;
mod weyl;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use report::{emit_report, Check, Comparison, NamedMatrix, NamedValue, ReportFormat, ScenarioReport, Verdict};

use crate::error::{Error, Result};
use crate::heisenberg::InvolutionType;
use heis::HeisCase;

/// Default word-sampling seed.
pub const DEFAULT_SEED: u64 = 0xF4EE;
/// Longest sampled word.
pub const WORD_LEN: usize = 8;
/// Words per sample.
pub const WORD_COUNT: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Symmetric,
    Unitary,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symmetric => "symmetric",
            Mode::Unitary => "unitary",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symmetric" | "sym" => Ok(Mode::Symmetric),
            "unitary" | "uni" => Ok(Mode::Unitary),
            _ => Err(Error::InvalidSpec(format!("unknown mode {s:?}"))),
        }
    }
}

/// One row of the scenario table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Verdict,
}

/// Every scenario the engine knows, in a fixed order.
pub fn scenario_table() -> Vec<ScenarioEntry> {
    let mut t: Vec<_> = HeisCase::all()
        .into_iter()
        .map(|c| ScenarioEntry {
            id: c.id(),
            description: c.summary(),
            expected: c.expected(),
        })
        .collect();
    for case in [1, 2] {
        t.push(ScenarioEntry {
            id: weyl::id(case),
            description: weyl::summary(case),
            expected: weyl::expected(case),
        });
    }
    t
}

pub fn run_heisenberg(ty: InvolutionType, m: i64, n: i64, mode: Mode, seed: u64) -> Result<ScenarioReport> {
    let case = HeisCase::resolve(ty, m, n, mode)?;
    heis::run(case, ty, m, n, seed)
}

pub fn run_weyl(case: u8) -> Result<ScenarioReport> {
    weyl::run(case)
}

/// Runs a scenario by id, using the smallest parameters of each case.
pub fn run_scenario(id: &str, seed: u64) -> Result<ScenarioReport> {
    if let Some(case) = HeisCase::all().into_iter().find(|c| c.id() == id) {
        let (ty, m, n, mode) = case.representative();
        return run_heisenberg(ty, m, n, mode, seed);
    }
    match id {
        "weyl/1" => run_weyl(1),
        "weyl/2" => run_weyl(2),
        _ => Err(Error::UndefinedCase(format!("no scenario {id:?}"))),
    }
}
