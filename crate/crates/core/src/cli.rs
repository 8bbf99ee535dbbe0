//! Command-line front end. Every command returns an [`Output`] instead of
//! printing, so the binary stays a thin shell and tests can drive it directly.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal inconsistency.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::elliptic::{elliptic_report, EllipticReport};
use crate::error::{Error, Violation};
use crate::groupdata::{
    enumerate_inner_forms, enumerate_levis, Family, Form, GroupDatum, LeviDatum,
};
use crate::repdatum::{Scenario, ScenarioPair, SigmaDatum};
use crate::rgroup::{closed_form, endoscopic_side, knapp_stein, transfer_check, RGroupResult};
use crate::sweep::{run_sweep, SweepConfig};
use crate::weylgroup::generate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }

    fn from_error(e: &Error) -> Self {
        let stderr = match e {
            Error::Invalid(vs) => vs.iter().map(|v| format!("violation: {v}\n")).collect(),
            e => format!("error: {e}\n"),
        };
        Self {
            code: if e.is_user_error() {
                EXIT_INVALID
            } else {
                EXIT_INCONSISTENT
            },
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "inner-rgroups",
    version,
    about = "Knapp-Stein R-groups for classical p-adic groups and their inner forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the R-group report for a scenario file.
    Run {
        path: PathBuf,
        /// Machine-readable output (the default).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Human-readable output.
        #[arg(long)]
        text: bool,
        /// Require a `{"pair": ...}` file and run the transfer check.
        #[arg(long)]
        pair: bool,
    },
    /// Print inner forms or Levi subgroups in golden-file format.
    Enumerate {
        family: String,
        rank: u32,
        /// List inner forms (the default).
        #[arg(long)]
        forms: bool,
        /// List Levi subgroups.
        #[arg(long)]
        levis: bool,
        /// Restrict to one form; `inner` matches every non-quasi-split form.
        #[arg(long)]
        form: Option<String>,
        /// Only maximal Levi subgroups.
        #[arg(long)]
        maximal: bool,
        /// Largest accepted rank.
        #[arg(long, default_value_t = 12)]
        rank_cap: u32,
    },
    /// Check every invariant on all small scenarios.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
        /// Print the summary as JSON for recording as a golden summary.
        #[arg(long)]
        seed_report: bool,
    },
    /// Quick consistency check of the built-in examples and a small sweep.
    Selfcheck,
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_from<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output::invalid(rendered)
            } else {
                Output::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Run {
            path, text, pair, ..
        } => {
            let format = if text { Format::Text } else { Format::Json };
            cmd_run(&path, format, pair)
        }
        Command::Enumerate {
            family,
            rank,
            forms,
            levis,
            form,
            maximal,
            rank_cap,
        } => cmd_enumerate(&EnumerateArgs {
            family,
            rank,
            levis: levis && !forms,
            form,
            maximal,
            rank_cap,
        }),
        Command::Sweep {
            max_k,
            max_rank,
            seed_report,
        } => cmd_sweep(&SweepConfig { max_k, max_rank }, seed_report),
        Command::Selfcheck => cmd_selfcheck(),
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

enum Input {
    Single(Scenario),
    Pair(ScenarioPair),
}

fn parse_input(text: &str) -> Result<Input, Error> {
    let bad = |e: serde_json::Error| Error::Invalid(vec![Violation::new("input", e.to_string())]);
    let v: Value = serde_json::from_str(text).map_err(bad)?;
    if let Some(obj) = v.as_object() {
        if obj.contains_key("pair") {
            if obj.len() != 1 {
                let extra: Vec<_> = obj.keys().filter(|k| *k != "pair").cloned().collect();
                return Err(Error::Invalid(vec![Violation::new(
                    "input",
                    format!("unknown keys next to `pair`: {}", extra.join(", ")),
                )]));
            }
            return Ok(Input::Pair(
                serde_json::from_value(v["pair"].clone()).map_err(bad)?,
            ));
        }
    }
    Ok(Input::Single(serde_json::from_value(v).map_err(bad)?))
}

/// Parses and validates a scenario or pair document.
pub fn load_scenarios(text: &str) -> Result<Vec<Scenario>, Error> {
    let scenarios = match parse_input(text)? {
        Input::Single(s) => vec![s],
        Input::Pair(p) => vec![p.quasi_split, p.inner],
    };
    let mut violations = Vec::new();
    let prefixes: &[&str] = if scenarios.len() == 2 {
        &["quasi_split.", "inner."]
    } else {
        &[""]
    };
    for (prefix, sc) in prefixes.iter().zip(&scenarios) {
        if let Err(vs) = sc.validate() {
            violations.extend(
                vs.into_iter()
                    .map(|v| Violation::new(format!("{prefix}{}", v.field), v.message)),
            );
        }
    }
    if violations.is_empty() {
        Ok(scenarios)
    } else {
        Err(Error::Invalid(violations))
    }
}

/// Everything computed for one scenario.
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub result: RGroupResult,
    pub closed_form_agrees: bool,
    pub closed_form_json: Value,
    pub endoscopic_agrees: bool,
    pub elliptic: EllipticReport,
}

impl ScenarioReport {
    pub fn compute(sc: &Scenario) -> Result<Self, Error> {
        let (g, l, s) = (&sc.group, &sc.levi, &sc.sigma);
        let r = knapp_stein(g, l, s)?;
        let cf = closed_form(g, l, s)?;
        let closed_form_agrees =
            cf.iso_exponent == r.iso_exponent && generate(l.k(), &cf.generators) == r.r_group;
        let closed_form_json = json!({
            "iso_type": format!("Z2^{}", cf.iso_exponent),
            "generators": r.labels(&cf.generators),
            "d1": cf.d1,
            "d2": cf.d2,
            "verdict": if closed_form_agrees { "agree" } else { "disagree" },
        });
        let e = endoscopic_side(g, l, s)?;
        let endoscopic_agrees = e.r_group == r.r_group && e.w_sigma == r.w_sigma;
        let elliptic = elliptic_report(g, l, s, &r)?;
        Ok(Self {
            scenario: sc.clone(),
            result: r,
            closed_form_agrees,
            closed_form_json,
            endoscopic_agrees,
            elliptic,
        })
    }

    pub fn consistent(&self) -> bool {
        self.closed_form_agrees && self.endoscopic_agrees && self.elliptic.consistent()
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.result.to_json();
        let obj = v.as_object_mut().expect("report is an object");
        obj.insert(
            "input".into(),
            serde_json::to_value(&self.scenario).expect("serializes"),
        );
        obj.insert(
            "group_name".into(),
            json!(self.scenario.group.display_name()),
        );
        obj.insert("closed_form".into(), self.closed_form_json.clone());
        obj.insert(
            "endoscopic".into(),
            json!(if self.endoscopic_agrees {
                "agree"
            } else {
                "disagree"
            }),
        );
        obj.insert("elliptic".into(), self.elliptic.to_json(&self.result));
        v
    }

    pub fn to_text(&self) -> String {
        let r = &self.result;
        let sc = &self.scenario;
        let list = |xs: Vec<String>| {
            if xs.is_empty() {
                "-".to_string()
            } else {
                xs.join("  ")
            }
        };
        let e = &self.elliptic;
        let herb = match e.herb_elliptic {
            Some(b) => b.to_string(),
            None => "not-applicable".into(),
        };
        let mut out = String::new();
        out += &format!("group: {} ({})\n", sc.group, sc.group.display_name());
        out += &format!(
            "levi: blocks {} | m {} | ddeg {}\n",
            sc.levi.blocks_display(),
            sc.levi.m,
            sc.levi.ddeg
        );
        out += &format!("classes: {}\n", list(sc.sigma.classes.clone()));
        out += &format!("|W_M|: {}\n", r.weyl_order);
        out += &format!("W(sigma): {}\n", list(r.labels(&r.w_sigma)));
        out += &format!(
            "Delta': {}\n",
            list(r.delta_prime.iter().map(ToString::to_string).collect())
        );
        out += &format!("W': {}\n", list(r.labels(&r.w_prime)));
        out += &format!("R: {}\n", list(r.labels(&r.r_group)));
        out += &format!("generators: {}\n", list(r.labels(&r.generators)));
        out += &format!("iso: {}\n", r.iso_type());
        out += &format!(
            "closed form: {} ({})\n",
            self.closed_form_json["verdict"]
                .as_str()
                .unwrap_or_default(),
            self.closed_form_json["iso_type"]
                .as_str()
                .unwrap_or_default()
        );
        out += &format!(
            "endoscopic: {}\n",
            if self.endoscopic_agrees {
                "agree"
            } else {
                "disagree"
            }
        );
        out += &format!(
            "elliptic: {} (herb: {herb}, witness: {})\n",
            e.elliptic,
            e.witness
                .as_ref()
                .map_or("-".into(), |w| r.context.label(w))
        );
        out += &format!(
            "components: {} | commuting dim {} | multiplicity {}\n",
            e.component_count, e.commuting_dim, e.multiplicity
        );
        out
    }
}

fn inconsistent(stdout: String, what: &str) -> Output {
    Output {
        code: EXIT_INCONSISTENT,
        stdout,
        stderr: format!("error: internal inconsistency: {what}\n"),
    }
}

pub fn cmd_run(path: &Path, format: Format, require_pair: bool) -> Output {
    match std::fs::read_to_string(path) {
        Ok(text) => run_text(&text, format, require_pair),
        Err(e) => Output::invalid(format!("error: cannot read {}: {e}\n", path.display())),
    }
}

/// `run` on an in-memory document.
pub fn run_text(text: &str, format: Format, require_pair: bool) -> Output {
    let scenarios = match load_scenarios(text) {
        Ok(s) => s,
        Err(e) => return Output::from_error(&e),
    };
    if require_pair && scenarios.len() != 2 {
        return Output::invalid("error: --pair needs a document of the form {\"pair\": {...}}\n");
    }
    let reports: Vec<ScenarioReport> = match scenarios.iter().map(ScenarioReport::compute).collect()
    {
        Ok(r) => r,
        Err(e) => return Output::from_error(&e),
    };
    let consistent = reports.iter().all(ScenarioReport::consistent);

    let stdout = if let [q, i] = reports.as_slice() {
        let pair = ScenarioPair {
            quasi_split: q.scenario.clone(),
            inner: i.scenario.clone(),
        };
        let t = match transfer_check(&pair) {
            Ok(t) => t,
            Err(e) => return Output::from_error(&e),
        };
        let verdict = if t.matched { "match" } else { "mismatch" };
        match format {
            Format::Json => render(&json!({
                "quasi_split": q.to_json(),
                "inner": i.to_json(),
                "transfer": verdict,
                "transfer_details": t.details,
            })),
            Format::Text => {
                let mut s = format!("[quasi-split]\n{}\n[inner]\n{}\n", q.to_text(), i.to_text());
                s += &format!("transfer: {verdict}\n");
                for d in &t.details {
                    s += &format!("  {d}\n");
                }
                s
            }
        }
    } else {
        match format {
            Format::Json => render(&reports[0].to_json()),
            Format::Text => reports[0].to_text(),
        }
    };
    if consistent {
        Output::ok(stdout)
    } else {
        inconsistent(
            stdout,
            "closed form, endoscopic route or ellipticity criteria disagree",
        )
    }
}

pub struct EnumerateArgs {
    pub family: String,
    pub rank: u32,
    pub levis: bool,
    pub form: Option<String>,
    pub maximal: bool,
    pub rank_cap: u32,
}

fn form_matches(filter: Option<&str>, form: Form) -> Result<bool, String> {
    match filter {
        None => Ok(true),
        Some("inner") => Ok(!form.is_quasi_split()),
        Some(f) => Ok(f.parse::<Form>()? == form),
    }
}

/// Inner forms as `family rank form : name`.
pub fn forms_table(family: Family, rank: u32) -> Vec<String> {
    enumerate_inner_forms(family, rank)
        .iter()
        .map(|g| format!("{g} : {}", g.display_name()))
        .collect()
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> Output {
    let family: Family = match args.family.parse() {
        Ok(f) => f,
        Err(e) => return Output::invalid(format!("error: {e}\n")),
    };
    if args.rank < family.min_rank() || args.rank > args.rank_cap {
        return Output::invalid(format!(
            "error: rank {} outside the supported range {}..={} for {family}\n",
            args.rank,
            family.min_rank(),
            args.rank_cap
        ));
    }
    if let Some(f) = args.form.as_deref() {
        if let Err(e) = form_matches(Some(f), Form::QuasiSplit) {
            return Output::invalid(format!("error: {e}\n"));
        }
    }
    let groups: Vec<GroupDatum> = enumerate_inner_forms(family, args.rank)
        .into_iter()
        .filter(|g| form_matches(args.form.as_deref(), g.form).unwrap_or(false))
        .collect();
    let mut lines = Vec::new();
    for g in &groups {
        if args.levis {
            lines.extend(
                enumerate_levis(g)
                    .into_iter()
                    .filter(|d| !args.maximal || d.maximal)
                    .map(|d| d.golden_line()),
            );
        } else {
            lines.push(format!("{g} : {}", g.display_name()));
        }
    }
    let mut out = lines.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    Output::ok(out)
}

pub fn cmd_sweep(cfg: &SweepConfig, seed_report: bool) -> Output {
    match run_sweep(cfg) {
        Ok(summary) => {
            if seed_report {
                let mut v = summary.to_json();
                v["max_k"] = json!(cfg.max_k);
                v["max_rank"] = json!(cfg.max_rank);
                Output::ok(render(&v))
            } else {
                let mut s = format!(
                    "sweep max-k {} max-rank {}: {} scenarios, {} pairs\n",
                    cfg.max_k, cfg.max_rank, summary.scenarios, summary.pairs
                );
                for check in crate::sweep::CHECKS {
                    s += &format!("  {check}: {}\n", summary.count(check));
                }
                s += "all checks passed\n";
                Output::ok(s)
            }
        }
        Err(f) => Output {
            code: if f.internal {
                EXIT_INCONSISTENT
            } else {
                EXIT_INVALID
            },
            stdout: String::new(),
            stderr: format!(
                "error: check `{}` failed: {}\n{}",
                f.check,
                f.message,
                render(&f.to_json())
            ),
        },
    }
}

fn selfcheck_examples() -> Vec<(&'static str, Scenario, usize)> {
    let c = |n| GroupDatum::quasi_split(Family::C, n);
    vec![
        (
            "single reducible block",
            Scenario::new(
                c(2),
                LeviDatum::new(vec![1], 1, 1),
                SigmaDatum::new(&["a"]).self_dual("a", true),
            ),
            1,
        ),
        (
            "repeated reducible class",
            Scenario::new(
                c(3),
                LeviDatum::new(vec![1, 1], 1, 1),
                SigmaDatum::new(&["a", "a"]).self_dual("a", true),
            ),
            1,
        ),
        (
            "two reducible classes",
            Scenario::new(
                c(3),
                LeviDatum::new(vec![1, 1, 1], 0, 1),
                SigmaDatum::new(&["a", "b", "b"])
                    .self_dual("a", true)
                    .self_dual("b", true),
            ),
            2,
        ),
        (
            "group itself",
            Scenario::new(
                c(2),
                LeviDatum::new(vec![], 2, 1),
                SigmaDatum::new::<&str>(&[]),
            ),
            0,
        ),
    ]
}

pub fn cmd_selfcheck() -> Output {
    let mut out = String::new();
    let mut failed = false;
    for (name, sc, expect) in selfcheck_examples() {
        let line = match ScenarioReport::compute(&sc) {
            Ok(r) if r.result.iso_exponent == expect && r.consistent() => format!("ok    {name}"),
            Ok(r) => {
                failed = true;
                format!("FAIL  {name}: got {}", r.result.iso_type())
            }
            Err(e) => {
                failed = true;
                format!("FAIL  {name}: {e}")
            }
        };
        out += &line;
        out.push('\n');
    }
    let sweep = cmd_sweep(
        &SweepConfig {
            max_k: 2,
            max_rank: 3,
        },
        false,
    );
    if sweep.code == EXIT_OK {
        out += "ok    sweep max-k 2 max-rank 3\n";
    } else {
        failed = true;
        out += &format!("FAIL  sweep max-k 2 max-rank 3\n{}", sweep.stderr);
    }
    if failed {
        inconsistent(out, "selfcheck failed")
    } else {
        Output::ok(out)
    }
}
