//! Verdict-tree reports. Every subcommand produces one `Report`; the JSON
//! serialization and the human text render the same tree.

use serde::Serialize;

use crate::schema::StructureFile;

#[derive(Serialize)]
pub struct CaseJson {
    pub name: String,
    pub ok: bool,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct SuiteJson {
    pub name: String,
    pub ok: bool,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseJson>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub ok: bool,
    pub suites: Vec<SuiteJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<StructureFile>,
}

impl Report {
    pub fn new(command: impl Into<String>, suites: Vec<SuiteJson>) -> Self {
        let ok = suites.iter().all(|s| s.ok);
        Report { command: command.into(), seed: None, ok, suites, artifact: None }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_artifact(mut self, artifact: StructureFile) -> Self {
        self.artifact = Some(artifact);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ordual {}", self.command));
        if let Some(seed) = self.seed {
            out.push_str(&format!(" (seed {seed})"));
        }
        out.push('\n');
        for suite in &self.suites {
            out.push_str(&format!(
                "  {} {} ({} passed{})\n",
                status(suite.ok),
                suite.name,
                suite.passed,
                if suite.failed > 0 { format!(", {} failed", suite.failed) } else { String::new() }
            ));
            for case in &suite.cases {
                out.push_str(&format!(
                    "    {} {}: {}/{}\n",
                    status(case.ok),
                    case.name,
                    case.passed,
                    case.passed + case.failed
                ));
                if let Some(w) = &case.witness {
                    out.push_str(&format!("      witness: {w}\n"));
                }
            }
        }
        if let Some(a) = &self.artifact {
            out.push_str(&format!(
                "  artifact: {} with {} elements\n",
                a.kind.name(),
                a.elements.len()
            ));
        }
        out.push_str(&format!("verdict: {}\n", if self.ok { "PASS" } else { "FAIL" }));
        out
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok "
    } else {
        "FAIL"
    }
}

/// A one-off verdict case.
pub fn verdict(name: impl Into<String>, ok: bool, witness: Option<String>) -> CaseJson {
    CaseJson {
        name: name.into(),
        ok,
        passed: ok as usize,
        failed: !ok as usize,
        witness: if ok { witness } else { witness.or(Some("verdict false".into())) },
    }
}

/// An informational case that always passes, with a note.
pub fn info(name: impl Into<String>, note: impl Into<String>) -> CaseJson {
    CaseJson { name: name.into(), ok: true, passed: 1, failed: 0, witness: Some(note.into()) }
}

pub fn suite(name: impl Into<String>, cases: Vec<CaseJson>) -> SuiteJson {
    let ok = cases.iter().all(|c| c.ok);
    SuiteJson {
        name: name.into(),
        ok,
        passed: cases.iter().map(|c| c.passed).sum(),
        failed: cases.iter().map(|c| c.failed).sum(),
        cases,
    }
}

impl From<&ordual::CaseResult> for CaseJson {
    fn from(c: &ordual::CaseResult) -> Self {
        CaseJson {
            name: c.name.clone(),
            ok: c.ok(),
            passed: c.passed,
            failed: c.failed,
            witness: c.witness.clone(),
        }
    }
}

impl From<&ordual::SuiteResult> for SuiteJson {
    fn from(s: &ordual::SuiteResult) -> Self {
        SuiteJson {
            name: s.name.to_string(),
            ok: s.ok(),
            passed: s.passed(),
            failed: s.failed(),
            cases: s.cases.iter().map(CaseJson::from).collect(),
        }
    }
}
