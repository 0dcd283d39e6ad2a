//! The `fmodule` command line: verification runs that emit a JSON report.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extension::{
    enumerate_candidates, defect_walkthrough, square_defect, splitting_search, test_element, CandidateSplitting,
    ExtensionL,
};
use crate::frobenius::{theta_e, theta_e_inv, theta_r, theta_r_inv, theta_rx, theta_rx_inv, Twist};
use crate::hom::{phi, psi, theta_hom, theta_hom_inv};
use crate::modules::{EElt, GradedModule, Pair, RxElt};
use crate::ring::{parse_poly, Field, Poly};
use crate::sample;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fmodule", version, about = "Verify that H^2_(x,y)(k[x,y]) is not injective among graded F-modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search every candidate splitting of the twisted extension and replay the hand computation.
    Theorem {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        alpha_max: u32,
    },
    /// Random roundtrips of phi/psi and of every structure map.
    Roundtrip {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        random: Random,
        /// Fixed degree; random in [-10, 2] when omitted.
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
        #[arg(long, default_value_t = 64)]
        precision: usize,
    },
    /// Compare the normal-form zero test in E with the Cech membership test.
    ZeroFuzz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        random: Random,
    },
    /// Recompute theta_L(g(test)) and (id(x)g)(theta(test)) step by step.
    Walkthrough {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        alpha: u32,
        /// Homogeneous polynomial of degree alpha, e.g. "y + x".
        #[arg(long, default_value = "1")]
        t: String,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON report (default); `--json false` prints plain lines.
    #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    pub json: bool,
    /// Report `elapsed_ms` as 0 so identical runs give identical bytes.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct Random {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, witness: Option<String>) -> Check {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, witness }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub parameters: Value,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Keys come out sorted since `serde_json::Map` is ordered.
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "parameters": self.parameters,
            "checks": self.checks,
            "status": if self.passed() { Status::Pass } else { Status::Fail },
            "elapsed_ms": self.elapsed_ms,
            "warnings": self.warnings,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for c in &self.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => out.push_str(&format!("{tag} {}: {w}\n", c.name)),
                None => out.push_str(&format!("{tag} {}\n", c.name)),
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(&format!("status: {}\n", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let common = match &cli.command {
        Command::Theorem { common, .. }
        | Command::Roundtrip { common, .. }
        | Command::ZeroFuzz { common, .. }
        | Command::Walkthrough { common, .. } => common,
    };
    let field = match Field::new(common.p, common.e) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let report = match run(&cli.command, field) {
        Ok(r) => r,
        Err(e @ (Error::Parse(_) | Error::DegreeMismatch { .. } | Error::NotHomogeneous)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILED;
        }
    };
    let report = Report { elapsed_ms: if common.no_timing { 0 } else { start.elapsed().as_millis() as u64 }, ..report };
    let body = if common.json {
        serde_json::to_string_pretty(&report.to_json()).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    };
    let written = match &common.out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_FAILED;
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn run(command: &Command, field: Field) -> Result<Report> {
    match command {
        Command::Theorem { alpha_max, .. } => cmd_theorem(field, *alpha_max),
        Command::Roundtrip { random, degree, precision, .. } => {
            cmd_roundtrip(field, *degree, *precision, random.trials, random.seed)
        }
        Command::ZeroFuzz { random, .. } => cmd_zero_fuzz(field, random.trials, random.seed),
        Command::Walkthrough { alpha, t, .. } => cmd_walkthrough(field, *alpha, &parse_poly(field, t)?),
    }
}

fn field_params(field: Field) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("p".into(), json!(field.characteristic()));
    m.insert("e".into(), json!(field.extension_degree()));
    m
}

pub fn cmd_theorem(field: Field, alpha_max: u32) -> Result<Report> {
    let mut params = field_params(field);
    params.insert("alpha_max".into(), json!(alpha_max));
    let q = field.order() as u64;
    let expected = 1 + (0..=alpha_max).map(|a| (q - 1) * q.pow(a)).sum::<u64>();
    let report = splitting_search(field, alpha_max, &Twist::y_over_x(field))?;
    let total = report.results.len();
    let rejected = report.results.iter().filter(|r| r.rejected()).count();
    let mut checks = vec![Check::new(
        "candidate count",
        total as u64 == expected,
        Some(format!("{total} candidates, expected {expected}")),
    )];
    let witness = match report.split_witness() {
        Some(r) => format!("{} commutes with the structure maps", r.candidate),
        None => format!("{rejected} of {total} candidates rejected"),
    };
    checks.push(Check::new("every candidate rejected", report.certified(), Some(witness)));
    let bad = report.results.iter().find(|r| r.agrees != Some(true));
    checks.push(Check::new(
        "defect equals closed-form obstruction",
        bad.is_none(),
        bad.map(|r| format!("{}: defect {}", r.candidate, r.defect)),
    ));
    let bad = report.results.iter().find(|r| r.survives != Some(true));
    checks.push(Check::new(
        "uncancellable term present",
        bad.is_none(),
        bad.map(|r| format!("{}: defect {}", r.candidate, r.defect)),
    ));
    let split = ExtensionL::split(field);
    let control = square_defect(&split, &CandidateSplitting::identity(field), &test_element(field, 0))?;
    checks.push(Check::new("split control (u = 0, t = 0)", control.is_zero(), Some(format!("defect {control}"))));
    for alpha in 0..=1 {
        let w = defect_walkthrough(field, alpha, Poly::monomial(field.one(), 0, alpha))?;
        let bad = w.stages.iter().find(|s| !s.ok);
        checks.push(Check::new(
            format!("walkthrough alpha = {alpha}, t = y^{alpha}"),
            bad.is_none(),
            bad.map(|s| format!("{}: got {} expected {}", s.name, s.computed, s.expected)),
        ));
    }
    Ok(Report { command: "theorem", parameters: Value::Object(params), checks, warnings: Vec::new(), elapsed_ms: 0 })
}

/// First failure of a property over the trials.
struct Tally {
    name: &'static str,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally { name, witness: None }
    }

    fn record(&mut self, trial: usize, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.witness.is_none() {
            self.witness = Some(format!("trial {trial}: {}", what()));
        }
    }

    fn error(&mut self, trial: usize, e: &Error) {
        self.record(trial, false, || e.to_string());
    }

    fn into_check(self) -> Check {
        Check::new(self.name, self.witness.is_none(), self.witness)
    }
}

pub fn cmd_roundtrip(field: Field, degree: Option<i64>, precision: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut params = field_params(field);
    params.insert("degree".into(), degree.map_or(Value::Null, |d| json!(d)));
    params.insert("precision".into(), json!(precision));
    params.insert("trials".into(), json!(trials));
    params.insert("seed".into(), json!(seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let twist = Twist::y_over_x(field);
    let ext = ExtensionL::new(twist.clone());
    let mut tallies = [
        "psi . phi = id",
        "phi . psi = id",
        "degree preserved",
        "theta_R",
        "theta_Rx",
        "theta_E",
        "theta_N (u = y/x)",
        "theta_hom",
        "theta_L (u = y/x)",
    ]
    .map(Tally::new);
    for trial in 0..trials {
        let d = degree.unwrap_or_else(|| rng.gen_range(-10..=2));
        let outcome = roundtrip_trial(&mut rng, field, d, precision, &twist, &ext, trial, &mut tallies);
        if let Err(e) = outcome {
            tallies[0].error(trial, &e);
        }
    }
    let checks = tallies.into_iter().map(Tally::into_check).collect();
    let warnings = if trials == 0 { vec!["no trials run; every check passes vacuously".to_string()] } else { Vec::new() };
    Ok(Report { command: "roundtrip", parameters: Value::Object(params), checks, warnings, elapsed_ms: 0 })
}

#[allow(clippy::too_many_arguments)]
fn roundtrip_trial(
    rng: &mut ChaCha8Rng,
    field: Field,
    d: i64,
    n: usize,
    twist: &Twist,
    ext: &ExtensionL,
    trial: usize,
    t: &mut [Tally; 9],
) -> Result<()> {
    let h = sample::hom_frx(rng, field, d, n);
    let split = phi(&h)?;
    t[0].record(trial, psi(&split, d)? == h, || format!("h = {h}"));
    t[2].record(trial, split.is_zero() || split.degree() == Some(d), || format!("phi(h) = {split}"));

    let tensor = sample::hom_tensor(rng, field, d, n);
    let back = psi(&tensor, d)?;
    t[1].record(trial, phi(&back)? == tensor, || format!("t = {tensor}"));
    t[2].record(trial, back.is_zero() || back.d() == d, || format!("psi(t) = {back}"));

    let r_deg = d.unsigned_abs() as u32;
    let r = sample::homogeneous_poly(rng, field, r_deg);
    let tr = sample::r_tensor(rng, field, r_deg as i64);
    let image = theta_r(&r)?;
    t[3].record(trial, theta_r_inv(&image) == r && theta_r(&theta_r_inv(&tr))? == tr, || format!("r = {r}, t = {tr}"));
    t[2].record(trial, r.is_zero() || image.degree() == Some(r_deg as i64), || format!("theta_R({r})"));

    let m = sample::rx(rng, field, d);
    let tm = sample::rx_tensor(rng, field, d);
    let image = theta_rx(&m)?;
    t[4].record(trial, theta_rx_inv(&image) == m && theta_rx(&theta_rx_inv(&tm))? == tm, || format!("m = {m}, t = {tm}"));
    t[2].record(trial, m.is_zero() || image.degree() == Some(d), || format!("theta_Rx({m})"));

    let e_deg = -2 - d.abs();
    let e = sample::e(rng, field, e_deg);
    let te = sample::e_tensor(rng, field, e_deg);
    let image = theta_e(&e)?;
    t[5].record(trial, theta_e_inv(&image) == e && theta_e(&theta_e_inv(&te))? == te, || format!("e = {e}, t = {te}"));
    t[2].record(trial, e.is_zero() || image.degree() == Some(e_deg), || format!("theta_E({e})"));

    let r_n = if d >= 0 { sample::homogeneous_poly(rng, field, d as u32) } else { Poly::zero(field) };
    let m_n = sample::rx(rng, field, d);
    let tn = sample::n_tensor(rng, field, d);
    let image = twist.theta_n((&m_n, &r_n))?;
    let ok = twist.theta_n_inv(&image) == Pair(m_n.clone(), r_n.clone())
        && twist.theta_n(pair_ref(&twist.theta_n_inv(&tn)))? == tn;
    t[6].record(trial, ok, || format!("(m, r) = ({m_n}, {r_n}), t = {tn}"));

    let f = sample::hom_rx(rng, field, d, n);
    let tf = sample::hom_tensor(rng, field, d, n);
    let image = theta_hom(&f)?;
    let ok = theta_hom_inv(&image, d)? == f && theta_hom(&theta_hom_inv(&tf, d)?)? == tf;
    t[7].record(trial, ok, || format!("f = {f}, t = {tf}"));
    t[2].record(trial, image.is_zero() || image.degree() == Some(d), || format!("theta_hom({f})"));

    let x = sample::l_elt(rng, field, d, n);
    let tl = sample::l_tensor(rng, field, d, n);
    let image = ext.theta_l(&x)?;
    let ok = ext.theta_l_inv(&image)? == x && ext.theta_l(&ext.theta_l_inv(&tl)?)? == tl;
    t[8].record(trial, ok, || format!("x = {x}, t = {tl}"));
    t[2].record(trial, image.is_zero() || image.degree() == Some(d), || format!("theta_L({x})"));
    Ok(())
}

fn pair_ref(p: &Pair<RxElt, Poly>) -> (&RxElt, &Poly) {
    (&p.0, &p.1)
}

pub fn cmd_zero_fuzz(field: Field, trials: usize, seed: u64) -> Result<Report> {
    let mut params = field_params(field);
    params.insert("trials".into(), json!(trials));
    params.insert("seed".into(), json!(seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fuzz = Tally::new("normal form agrees with Cech membership");
    let mut zeros = 0usize;
    for trial in 0..trials {
        let terms = rng.gen_range(1..=5);
        let h = sample::poly(&mut rng, field, 6, terms);
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let (normal, cech) = zero_tests(&h, a, b);
        zeros += normal as usize;
        fuzz.record(trial, normal == cech, || format!("({h})/({}): normal form {normal}, Cech {cech}", denominator(a, b)));
    }
    let mut checks = vec![fuzz.into_check()];
    for (h, a, b, expect_zero) in [("x", 2, 1, false), ("x^2", 2, 1, true)] {
        let h = parse_poly(field, h)?;
        let (normal, cech) = zero_tests(&h, a, b);
        checks.push(Check::new(
            format!("({h})/({}) is {}", denominator(a, b), if expect_zero { "zero" } else { "nonzero" }),
            normal == expect_zero && cech == expect_zero,
            Some(format!("normal form {}", EElt::from_fraction(&h, a, b))),
        ));
    }
    let mut warnings = Vec::new();
    if trials == 0 {
        warnings.push("no trials run; the fuzz check passes vacuously".to_string());
    } else if zeros == 0 || zeros == trials {
        warnings.push(format!("only one outcome sampled ({zeros} of {trials} fractions were zero)"));
    }
    Ok(Report { command: "zero-fuzz", parameters: Value::Object(params), checks, warnings, elapsed_ms: 0 })
}

fn denominator(a: u32, b: u32) -> String {
    Poly::monomial(Field::prime(2).expect("2 is prime").one(), a, b).to_string()
}

fn zero_tests(h: &Poly, a: u32, b: u32) -> (bool, bool) {
    let normal = EElt::from_fraction(h, a, b).is_empty();
    let cech = EElt::is_zero_cech(h, a, b, EElt::default_cech_bound(h, a, b));
    (normal, cech)
}

pub fn cmd_walkthrough(field: Field, alpha: u32, t: &Poly) -> Result<Report> {
    let mut params = field_params(field);
    params.insert("alpha".into(), json!(alpha));
    params.insert("t".into(), json!(t.to_string()));
    let w = defect_walkthrough(field, alpha, t.clone())?;
    let checks = w
        .stages
        .iter()
        .map(|s| {
            let witness = if s.ok { s.computed.clone() } else { format!("got {} expected {}", s.computed, s.expected) };
            Check::new(s.name, s.ok, Some(witness))
        })
        .collect();
    Ok(Report { command: "walkthrough", parameters: Value::Object(params), checks, warnings: Vec::new(), elapsed_ms: 0 })
}

/// Number of candidates the search visits for `α ≤ alpha_max`.
pub fn candidate_count(field: Field, alpha_max: u32) -> usize {
    enumerate_candidates(field, alpha_max).len()
}
