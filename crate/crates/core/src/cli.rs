//! Command implementations behind the `configforge` binary. Each command
//! returns its exit code and standard-output text instead of printing, so
//! it can be driven directly from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde_json::Value;

use crate::config::{enumerate_configurations, Configuration, Subset};
use crate::error::{Error, Result};
use crate::realize::{realize, verify_detailed, Mismatch, RealizationCertificate};
use crate::subgroup::{analyze, nonfg_witness, tuple_from_json, SubgroupSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

/// Caps the worker count of `enumerate`.
pub const THREADS_ENV: &str = "CONFIGFORGE_THREADS";

/// Largest `n` accepted by `enumerate`.
pub const ENUMERATE_MAX_N: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub report: String,
}

impl CommandOutcome {
    fn ok(report: String) -> Self {
        Self {
            exit_code: EXIT_OK,
            report,
        }
    }

    fn failed(report: String) -> Self {
        Self {
            exit_code: EXIT_FAILED,
            report,
        }
    }

    fn malformed(err: impl std::fmt::Display) -> Self {
        Self {
            exit_code: EXIT_MALFORMED,
            report: format!("error: {err}\n"),
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}

fn verdict(fg: bool) -> &'static str {
    if fg {
        "f.g."
    } else {
        "not f.g."
    }
}

fn verdict_table(cert: &RealizationCertificate) -> String {
    let mut out = String::new();
    for r in &cert.reports {
        let classes: Vec<String> = r
            .components
            .iter()
            .map(|c| format!("{}x{}", c.class, c.size))
            .collect();
        writeln!(
            out,
            "{}\t{}\t{}",
            r.subset,
            verdict(r.fg),
            classes.join(" ")
        )
        .unwrap();
    }
    out
}

pub fn cmd_realize(config_file: &Path, out_file: &Path) -> CommandOutcome {
    let cert = match read_json(config_file)
        .and_then(|v| Configuration::from_json(&v))
        .and_then(|c| realize(&c))
    {
        Ok(cert) => cert,
        Err(e) => return CommandOutcome::malformed(e),
    };
    if let Err(e) = fs::write(out_file, render_json(&cert.to_json())) {
        return CommandOutcome::malformed(e);
    }
    let mut report = format!(
        "realized {} in G^{} ({} subgroups)\n",
        cert.config,
        cert.ambient_m,
        cert.specs.len()
    );
    report.push_str(&verdict_table(&cert));
    CommandOutcome::ok(report)
}

pub fn cmd_verify(cert_file: &Path, samples: usize, seed: u64) -> CommandOutcome {
    let cert = match read_json(cert_file).and_then(|v| RealizationCertificate::from_json(&v)) {
        Ok(cert) => cert,
        Err(e) => return CommandOutcome::malformed(e),
    };
    let outcome = match verify_detailed(&cert, samples, seed) {
        Ok(o) => o,
        Err(e) => return CommandOutcome::malformed(e),
    };
    let total = cert.reports.len().max((1 << cert.config.n()) - 1);
    if outcome.is_ok() {
        return CommandOutcome::ok(format!("verified: {total} subsets match {}\n", cert.config));
    }
    let mut report = String::new();
    for (subset, mismatch) in &outcome.mismatches {
        let why = match mismatch {
            Mismatch::Verdict {
                expected_fg,
                actual_fg,
            } => {
                format!(
                    "expected {}, recomputed {}",
                    verdict(*expected_fg),
                    verdict(*actual_fg)
                )
            }
            Mismatch::Report => "stored report differs from recomputation".to_string(),
            Mismatch::MissingReport => "no stored report".to_string(),
            Mismatch::Sample { index } => {
                format!("sampled element of the intersection is not in H_{index}")
            }
        };
        writeln!(report, "mismatch {subset}: {why}").unwrap();
    }
    writeln!(
        report,
        "verification failed on {} subset(s)",
        outcome.subsets().len()
    )
    .unwrap();
    CommandOutcome::failed(report)
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
}

pub fn cmd_enumerate(
    n: usize,
    samples: usize,
    seed: u64,
    threads: Option<usize>,
) -> CommandOutcome {
    if !(1..=ENUMERATE_MAX_N).contains(&n) {
        return CommandOutcome::malformed(format!(
            "--n must lie in 1..={ENUMERATE_MAX_N}, got {n}"
        ));
    }
    let configs: Vec<Configuration> = match enumerate_configurations(n) {
        Ok(it) => it.collect(),
        Err(e) => return CommandOutcome::malformed(e),
    };
    let check = |c: &Configuration| -> Result<bool> {
        Ok(verify_detailed(&realize(c)?, samples, seed)?.is_ok())
    };
    let run = || configs.par_iter().map(check).collect::<Vec<_>>();
    let results = match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run),
            Err(e) => return CommandOutcome::malformed(e),
        },
        None => run(),
    };

    let mut report = String::new();
    let mut passed = 0;
    for (c, r) in configs.iter().zip(&results) {
        match r {
            Ok(true) => passed += 1,
            Ok(false) => writeln!(report, "FAILED {c}").unwrap(),
            Err(e) => writeln!(report, "ERROR {c}: {e}").unwrap(),
        }
    }
    writeln!(
        report,
        "n={n}: {passed}/{} configurations verified",
        configs.len()
    )
    .unwrap();
    if passed == configs.len() {
        CommandOutcome::ok(report)
    } else {
        CommandOutcome::failed(report)
    }
}

pub fn cmd_analyze(spec_file: &Path) -> CommandOutcome {
    let spec = match read_json(spec_file).and_then(|v| SubgroupSpec::from_json(&v)) {
        Ok(spec) => spec,
        Err(e) => return CommandOutcome::malformed(e),
    };
    let analysis = analyze(&spec);
    let mut report = String::new();
    for (i, c) in analysis.iter().enumerate() {
        let nodes: Vec<String> = c.nodes.iter().map(|v| v.to_string()).collect();
        let hol: Vec<String> = c.holonomy.iter().map(|h| h.to_string()).collect();
        writeln!(
            report,
            "component {}: nodes {{{}}} root {} holonomy [{}]{} -> {} ({})",
            i + 1,
            nodes.join(","),
            c.root,
            hol.join(", "),
            if c.pinned { " pinned" } else { "" },
            c.classification,
            verdict(c.is_finitely_generated()),
        )
        .unwrap();
    }
    let mut tags: Vec<&str> = Vec::new();
    for c in &analysis {
        if !tags.contains(&c.classification.tag()) {
            tags.push(c.classification.tag());
        }
    }
    writeln!(
        report,
        "{} component{}, {}, {}",
        analysis.len(),
        if analysis.len() == 1 { "" } else { "s" },
        tags.join("+"),
        verdict(analysis.is_finitely_generated())
    )
    .unwrap();
    CommandOutcome::ok(report)
}

pub fn cmd_witness(cert_file: &Path, subset: &str, gens_file: Option<&Path>) -> CommandOutcome {
    let cert = match read_json(cert_file).and_then(|v| RealizationCertificate::from_json(&v)) {
        Ok(cert) => cert,
        Err(e) => return CommandOutcome::malformed(e),
    };
    let subset: Subset = match subset.parse::<Subset>() {
        Ok(s) if s.max_element() <= cert.config.n() => s,
        Ok(s) => {
            return CommandOutcome::malformed(format!(
                "{s} is not a subset of [{}]",
                cert.config.n()
            ))
        }
        Err(e) => return CommandOutcome::malformed(e),
    };
    let candidates = match gens_file
        .map(read_json)
        .transpose()
        .and_then(|v| parse_candidates(v.as_ref()))
    {
        Ok(c) => c,
        Err(e) => return CommandOutcome::malformed(e),
    };
    match verify_detailed(&cert, 0, 0) {
        Ok(v) if v.is_ok() => {}
        Ok(_) => return CommandOutcome::failed("certificate does not verify\n".into()),
        Err(e) => return CommandOutcome::malformed(e),
    }
    if !cert.config.get(subset) {
        return CommandOutcome::failed(format!(
            "c({subset}) = 0: the intersection is finitely generated, no witness exists\n"
        ));
    }
    let spec = match cert.intersection(subset) {
        Ok(s) => s,
        Err(e) => return CommandOutcome::malformed(e),
    };
    match nonfg_witness(&spec, &candidates) {
        Ok(w) => CommandOutcome::ok(render_json(&w.to_json())),
        Err(e @ (Error::NotAMember(_) | Error::LengthMismatch { .. })) => {
            CommandOutcome::malformed(e)
        }
        Err(e) => CommandOutcome::failed(format!("error: {e}\n")),
    }
}

fn parse_candidates(value: Option<&Value>) -> Result<Vec<Vec<crate::wreath::WreathElement>>> {
    let Some(value) = value else {
        return Ok(Vec::new());
    };
    value
        .as_array()
        .ok_or_else(|| Error::Malformed("generator file must be an array of tuples".into()))?
        .iter()
        .map(tuple_from_json)
        .collect()
}
