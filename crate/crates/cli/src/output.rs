//! Report envelopes and their json, csv and text renderings.

use crate::args::Format;
use crate::suites::SuiteReport;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Debug, Serialize)]
pub struct VerifyBody {
    pub passed: bool,
    pub config: crate::suites::RunConfig,
    pub suites: Vec<SuiteReport>,
}

/// Flat `(field, value)` rows for csv and text output of non-suite reports.
pub trait Rows {
    fn rows(&self) -> Vec<(String, String)>;
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn render_verify(env: &Envelope<VerifyBody>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(env).expect("serializable") + "\n",
        Format::Csv => csv_text(
            &["suite", "item", "check", "passed", "detail"],
            env.body.suites.iter().flat_map(|s| {
                s.items.iter().flat_map(move |it| {
                    it.checks.iter().map(move |c| {
                        vec![
                            format!("{:?}", s.suite).to_lowercase(),
                            it.key.clone(),
                            c.name.clone(),
                            c.passed.to_string(),
                            c.detail.clone(),
                        ]
                    })
                })
            }),
        ),
        Format::Text => {
            let mut out = format!(
                "{} seed={} schema_version={}\n",
                env.command, env.seed, env.schema_version
            );
            for s in &env.body.suites {
                let checks: usize = s.items.iter().map(|i| i.checks.len()).sum();
                out.push_str(&format!(
                    "[{}] {:?}: {} items, {checks} checks\n",
                    if s.passed { "PASS" } else { "FAIL" },
                    s.suite,
                    s.items.len()
                ));
                for it in s.items.iter() {
                    for c in &it.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        out.push_str(&format!("  {mark} {} :: {}", it.key, c.name));
                        if !c.detail.is_empty() {
                            out.push_str(&format!(" ({})", c.detail));
                        }
                        out.push('\n');
                    }
                }
            }
            out.push_str(if env.body.passed {
                "all checks passed\n"
            } else {
                "some checks FAILED\n"
            });
            out
        }
    }
}

pub fn render<T: Serialize + Rows>(env: &Envelope<T>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(env).expect("serializable") + "\n",
        Format::Csv => csv_text(
            &["field", "value"],
            std::iter::once(vec!["command".to_string(), env.command.clone()])
                .chain(env.body.rows().into_iter().map(|(k, v)| vec![k, v])),
        ),
        Format::Text => {
            let mut out = format!("{}\n", env.command);
            for (k, v) in env.body.rows() {
                out.push_str(&format!("{k}: {v}\n"));
            }
            out
        }
    }
}
