//! Output documents: one JSON object per run, echoing the command, the
//! input digest and the results in the textual quaternion form. Field order
//! is fixed by declaration, so a rerun prints byte-identical output.

use serde::Serialize;

use ncdet_core::QMatrix;
use ncdet_verify::BatteryReport;

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct AlgebraEcho {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ResultBody {
    Det {
        value: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        index: Option<usize>,
        monomials: u64,
    },
    Scalar {
        value: String,
    },
    Matrix {
        matrix: Vec<Vec<String>>,
    },
    Solution {
        side: String,
        method: String,
        solution: Vec<String>,
    },
    Quasidet {
        defined: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        value: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<String>,
        p: usize,
        q: usize,
    },
    Rank {
        rank: usize,
    },
    Verify {
        scale: String,
        seed: u64,
        suites: Vec<SuiteEcho>,
        passed: usize,
        failed: usize,
    },
}

#[derive(Debug, Serialize)]
pub struct SuiteEcho {
    pub name: String,
    pub cases: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<String>,
}

/// The top-level document printed after every run.
#[derive(Debug, Serialize)]
pub struct OutputDoc {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    pub result: ResultBody,
}

impl OutputDoc {
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable output");
        text.push('\n');
        text
    }
}

pub fn algebra_echo(m: &QMatrix) -> AlgebraEcho {
    AlgebraEcho {
        a: m.params().a().to_string(),
        b: m.params().b().to_string(),
    }
}

pub fn matrix_rows(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
        .collect()
}

/// Flattens a column or row into the entry list of a solution document.
pub fn vector_entries(m: &QMatrix) -> Vec<String> {
    if m.cols() == 1 {
        (0..m.rows()).map(|r| m[(r, 0)].to_string()).collect()
    } else {
        (0..m.cols()).map(|c| m[(0, c)].to_string()).collect()
    }
}

pub fn battery_echo(report: &BatteryReport) -> ResultBody {
    ResultBody::Verify {
        scale: report.scale.as_str().to_string(),
        seed: report.seed,
        suites: report
            .suites
            .iter()
            .map(|s| SuiteEcho {
                name: s.name.to_string(),
                cases: s.cases,
                status: if s.passed { "pass" } else { "fail" }.to_string(),
                failure: s.failure.clone(),
                reproducer: s.reproducer.as_ref().map(|r| r.file_name.clone()),
            })
            .collect(),
        passed: report.suites.iter().filter(|s| s.passed).count(),
        failed: report.failed_count(),
    }
}
