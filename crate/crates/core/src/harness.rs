//! Sweep runner and report writer: selects identities by glob, executes
//! their sweeps, and serializes the outcome as a line-oriented structured
//! report whose record section is byte-reproducible under a fixed seed.

use core::fmt;
use std::time::{SystemTime, UNIX_EPOCH};

use crate::identities::{registry, sweep, IdentitySpec, VerificationRecord};

/// Options of one verification run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Identity-id glob (`*` and `?` wildcards).
    pub selection: String,
    /// Samples per continuous parameter.
    pub samples: usize,
    /// Overrides every tolerance class when set.
    pub tol_override: Option<f64>,
    /// Seed for the deterministic sampling plan.
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            selection: "*".to_string(),
            samples: 5,
            tol_override: None,
            seed: 42,
        }
    }
}

/// Errors from assembling a run.
#[derive(Debug)]
pub enum RunError {
    /// The selection glob matched nothing.
    NoMatch(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoMatch(glob) => write!(f, "selection `{glob}` matches no identity"),
        }
    }
}

impl std::error::Error for RunError {}

/// Per-identity tallies.
#[derive(Debug, Clone)]
pub struct IdentitySummary {
    pub id: String,
    pub records: usize,
    pub failed: usize,
    pub max_rel_diff: f64,
}

/// Whole-run tallies.
#[derive(Debug, Clone)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub per_identity: Vec<IdentitySummary>,
}

/// Result of one run: metadata, ordered records, summary.
#[derive(Debug)]
pub struct Report {
    pub selection: String,
    pub samples: usize,
    pub seed: u64,
    pub tol_override: Option<f64>,
    pub timestamp_unix: u64,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

/// Glob matching with `*` (any run) and `?` (any one character).
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0usize, 0usize);
    let (mut star, mut mark) = (usize::MAX, 0usize);
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = pi;
            mark = ti;
            pi += 1;
        } else if star != usize::MAX {
            pi = star + 1;
            mark += 1;
            ti = mark;
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == '*' {
        pi += 1;
    }
    pi == p.len()
}

/// Execute the sweeps selected by `opts`.
///
/// Records come out sorted by identity id, then in sampling order, so two
/// runs with the same flags and seed produce identical record sections.
pub fn run(opts: &RunOptions) -> Result<Report, RunError> {
    let mut selected: Vec<IdentitySpec> = registry()
        .into_iter()
        .filter(|s| glob_match(&opts.selection, s.id))
        .collect();
    if selected.is_empty() {
        return Err(RunError::NoMatch(opts.selection.clone()));
    }
    selected.sort_by(|a, b| a.id.cmp(b.id));

    let mut records = Vec::new();
    let mut per_identity = Vec::new();
    for spec in &selected {
        let recs: Vec<VerificationRecord> = if opts.tol_override.is_some() {
            spec.domain
                .sample(opts.samples, opts.seed)
                .iter()
                .map(|pt| crate::identities::verify(spec, pt, opts.tol_override))
                .collect()
        } else {
            sweep(spec, opts.samples, opts.seed)
        };
        let failed = recs.iter().filter(|r| !r.pass).count();
        let max_rel_diff = recs.iter().map(|r| r.rel_diff).fold(0.0f64, f64::max);
        per_identity.push(IdentitySummary {
            id: spec.id.to_string(),
            records: recs.len(),
            failed,
            max_rel_diff,
        });
        records.extend(recs);
    }
    let total = records.len();
    let failed = records.iter().filter(|r| !r.pass).count();
    let summary = Summary {
        total,
        passed: total - failed,
        failed,
        per_identity,
    };
    let timestamp_unix = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    Ok(Report {
        selection: opts.selection.clone(),
        samples: opts.samples,
        seed: opts.seed,
        tol_override: opts.tol_override,
        timestamp_unix,
        records,
        summary,
    })
}

/// Format a float for the report: integers plainly, the rest in scientific
/// notation (both render shortest-roundtrip, so output is deterministic).
fn fmt_num(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:e}")
    }
}

fn json_escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => "\\\"".chars().collect::<Vec<_>>(),
            '\\' => "\\\\".chars().collect(),
            c => vec![c],
        })
        .collect()
}

fn record_line(r: &VerificationRecord) -> String {
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(name, value)| format!("\"{name}\":{}", fmt_num(*value)))
        .collect();
    let note = match &r.note {
        Some(n) => format!("\"{}\"", json_escape(n)),
        None => "null".to_string(),
    };
    format!(
        "{{\"id\":\"{}\",\"params\":{{{}}},\"lhs\":{:e},\"rhs\":{:e},\"abs_diff\":{:e},\"rel_diff\":{:e},\"tol\":{:e},\"pass\":{},\"note\":{}}}",
        r.id,
        params.join(","),
        r.lhs,
        r.rhs,
        r.abs_diff,
        r.rel_diff,
        r.tol,
        r.pass,
        note
    )
}

impl Report {
    /// The deterministic part of the report: one object per record.
    pub fn records_section(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&record_line(r));
            out.push('\n');
        }
        out
    }

    /// Full report: header, records, summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# quadcheck verification report\n");
        out.push_str(&format!("# timestamp_unix: {}\n", self.timestamp_unix));
        out.push_str(&format!("# selection: {}\n", self.selection));
        out.push_str(&format!("# samples: {}\n", self.samples));
        out.push_str(&format!("# seed: {}\n", self.seed));
        match self.tol_override {
            Some(t) => out.push_str(&format!("# tolerance_override: {t:e}\n")),
            None => out.push_str("# tolerance_override: none\n"),
        }
        out.push_str(
            "# tolerance_classes: smooth=1e-9 near-singular=1e-7(|x|≥0.9)/1e-9 elliptic=1e-9 two-sided=1e-8\n",
        );
        out.push_str(&self.records_section());
        out.push_str(&format!(
            "# summary: total={} passed={} failed={}\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out.push_str("# max_rel_diff per identity:\n");
        for s in &self.summary.per_identity {
            out.push_str(&format!(
                "#   {} = {:e}  ({} records, {} failed)\n",
                s.id, s.max_rel_diff, s.records, s.failed
            ));
        }
        out
    }

    /// 0 when every record passed, 1 otherwise.
    pub fn exit_status(&self) -> i32 {
        if self.summary.failed == 0 {
            0
        } else {
            1
        }
    }
}

/// Human-readable registry listing for `--list`.
pub fn list_registry() -> String {
    let mut out = String::new();
    for spec in registry() {
        let params: Vec<String> = spec
            .domain
            .params
            .iter()
            .map(|p| match &p.kind {
                crate::identities::ParameterKind::Continuous { lo, hi, mandatory } => {
                    if mandatory.is_empty() {
                        format!("{} ∈ [{lo}, {hi}]", p.name)
                    } else {
                        let m: Vec<String> = mandatory.iter().map(|v| v.to_string()).collect();
                        format!("{} ∈ [{lo}, {hi}] ∪ {{{}}}", p.name, m.join(", "))
                    }
                }
                crate::identities::ParameterKind::Integers(set) => {
                    let m: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                    format!("{} ∈ {{{}}}", p.name, m.join(", "))
                }
            })
            .collect();
        let params = if params.is_empty() {
            "—".to_string()
        } else {
            params.join("; ")
        };
        out.push_str(&format!(
            "{:12} [{}] {}\n{:12}   {}\n",
            spec.id,
            spec.tolerance_class.label(),
            spec.statement,
            "",
            params
        ));
        if let Some(note) = spec.note {
            out.push_str(&format!("{:12}   note: {note}\n", ""));
        }
    }
    out
}
