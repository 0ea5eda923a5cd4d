//! Human-readable and JSON check reports.

use homtwist::homology::HomologyRow;
use serde::Serialize;

#[derive(Serialize)]
pub struct CheckVerdict {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub pass: bool,
    /// Present exactly when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckVerdict {
    pub fn passed(name: &str, group: Option<&str>) -> Self {
        CheckVerdict {
            name: name.to_string(),
            group: group.map(str::to_string),
            pass: true,
            counterexample: None,
        }
    }

    pub fn failed(name: &str, group: Option<&str>, counterexample: String) -> Self {
        CheckVerdict {
            name: name.to_string(),
            group: group.map(str::to_string),
            pass: false,
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<HomologyRow>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub info: Vec<String>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            checks: Vec::new(),
            homology: None,
            info: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            self.render_human()
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "{:<28} {:<6} {}\n",
            "check", "group", "result"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<28} {:<6} {}\n",
                c.name,
                c.group.as_deref().unwrap_or("-"),
                if c.pass { "PASS" } else { "FAIL" }
            ));
            if let Some(cx) = &c.counterexample {
                out.push_str(&format!("  counterexample: {cx}\n"));
            }
        }
        if let Some(rows) = &self.homology {
            out.push_str(&format!(
                "{:<8} {:<10} {:<8} {:<9} {:<6} {}\n",
                "degree", "chain dim", "rank d", "rank d+1", "H_p", "note"
            ));
            for r in rows {
                out.push_str(&format!(
                    "{:<8} {:<10} {:<8} {:<9} {:<6} {}\n",
                    r.degree,
                    r.chain_dim,
                    r.rank_d,
                    r.rank_d_next,
                    r.homology_dim,
                    if r.truncated { "truncated" } else { "" }
                ));
            }
        }
        for i in &self.info {
            out.push_str(&format!("note: {i}\n"));
        }
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}
