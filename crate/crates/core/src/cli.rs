//! The `cherednik` command line: argument parsing, dispatch and reports.
//!
//! Exit status is 0 on success, 1 when a certification check fails (or an
//! internal consistency check trips) and 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cache::FrameCache;
use crate::coxeter::{GroupSpec, GroupType, RootSystem};
use crate::dunkl::{all_singular, is_singular};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Field, Scalar};
use crate::poly::MultiPoly;
use crate::residues::{
    complex_family_singular, complex_group_action_check, complex_singular_family, residue_degree, residue_parameter,
    residue_twisted_period, ComplexGroupSpec, ResidueKind,
};
use crate::saito::verify_saito;
use crate::selftest;
use crate::serial::{family_to_json, frame_to_json, poly_from_json, poly_to_json, root_system_to_json};
use crate::shift::{certify_family, homogeneous_twisted_periods, singular_family, twisted_period_pde_check_cleared};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "cherednik", version, about = "Exact singular polynomials of rational Cherednik algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn rational_arg(s: &str) -> std::result::Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positive roots, degrees and Coxeter number of a group.
    Roots {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Saito flat coordinates and the metric matrix U.
    Saito {
        #[arg(long)]
        group: GroupSpec,
        /// Write the frame JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The singular family for degree index beta and shift m.
    Singular {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        beta: usize,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Run every certification check.
        #[arg(long)]
        verify: bool,
        /// Write the family record here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Homogeneous invariant twisted periods of one degree.
    Periods {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, value_parser = rational_arg)]
        nu: BigRational,
        #[arg(long)]
        degree: u32,
    },
    /// Closed-form residue twisted period.
    Residue {
        /// a, b, d (at infinity) or d0 (at zero).
        #[arg(long)]
        kind: ResidueKind,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Check that the gradient is singular at c = nu.
        #[arg(long)]
        verify: bool,
    },
    /// Singular family of the complex reflection group G(ell, 1, n).
    Complex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Check whether polynomials read from a JSON file are singular at c.
    Verify {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, value_parser = rational_arg)]
        c: BigRational,
        /// A polynomial or an array of polynomials.
        #[arg(long)]
        poly: PathBuf,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residuals: Vec<Value>,
}

/// Everything a command produced; rendered as JSON or aligned text.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
    pub cache_hits: usize,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub format: Format,
    #[serde(skip)]
    text: Vec<(String, String)>,
    #[serde(skip)]
    help: Option<String>,
}

impl RunReport {
    fn param(&mut self, key: &str, v: impl Into<Value>) {
        self.parameters.insert(key.into(), v.into());
    }

    fn output(&mut self, key: &str, v: impl Into<Value>) {
        self.outputs.insert(key.into(), v.into());
    }

    fn line(&mut self, key: impl Into<String>, v: impl ToString) {
        self.text.push((key.into(), v.to_string()));
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            residuals: Vec::new(),
        });
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        if let Some(h) = &self.help {
            return h.clone();
        }
        match self.format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        for (k, v) in &self.parameters {
            rows.push((k.clone(), plain(v)));
        }
        rows.extend(self.text.iter().cloned());
        for c in &self.checks {
            rows.push((format!("check {}", c.name), if c.passed { "PASS" } else { "FAIL" }.into()));
        }
        rows.push(("cache hits".into(), self.cache_hits.to_string()));
        rows.push(("seconds".into(), format!("{:.3}", self.seconds)));
        if let Some(e) = &self.error {
            rows.push(("error".into(), e.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::InvalidParameter(_)
            | Error::UnsupportedGroup(_)
            | Error::Schema { .. }
            | Error::Io(_)
            | Error::Json(_)
            | Error::VarCountMismatch(..)
            | Error::FieldMismatch(_)
    )
}

/// Parse `argv` (program name first), execute, and return the report with
/// the exit status.
pub fn run<I, T>(argv: I) -> (RunReport, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let mut report = RunReport {
        command: argv.iter().map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" "),
        ..Default::default()
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            report.help = Some(e.render().to_string());
            if code != EXIT_OK {
                report.error = Some(e.kind().to_string());
            }
            return (report, code);
        }
    };
    report.format = cli.format;
    let result = dispatch(cli.command, &mut report);
    report.seconds = start.elapsed().as_secs_f64();
    let code = match result {
        Err(e) => {
            let code = if is_usage(&e) { EXIT_USAGE } else { EXIT_CHECK_FAILED };
            report.error = Some(e.to_string());
            code
        }
        Ok(()) if report.passed() => EXIT_OK,
        Ok(()) => EXIT_CHECK_FAILED,
    };
    (report, code)
}

fn dispatch(cmd: Command, r: &mut RunReport) -> Result<()> {
    match cmd {
        Command::Roots { group } => roots(group, r),
        Command::Saito { group, out } => saito(group, out, r),
        Command::Singular { group, beta, m, verify, json } => singular(group, beta, m, verify, json, r),
        Command::Periods { group, nu, degree } => periods(group, nu, degree, r),
        Command::Residue { kind, rank, s, m, verify } => residue(kind, rank, s, m, verify, r),
        Command::Complex { n, ell, q, s, m, verify } => complex(n, ell, q, s, m, verify, r),
        Command::Verify { group, c, poly } => verify(group, c, poly, r),
        Command::Selftest => selftest_cmd(r),
    }
}

fn roots(group: GroupSpec, r: &mut RunReport) -> Result<()> {
    let rs = RootSystem::from_spec(group)?;
    r.param("group", group.to_string());
    r.output("root_system", root_system_to_json(&rs));
    r.line("rank", rs.rank());
    r.line("positive roots", rs.roots().len());
    r.line("degrees", format!("{:?}", rs.degrees()));
    r.line("h", rs.coxeter_number());
    for (k, root) in rs.roots().iter().enumerate() {
        let v: Vec<String> = root.vector.iter().map(Scalar::to_string).collect();
        let simple = if rs.simple_indices().contains(&k) { "  simple" } else { "" };
        r.line(format!("root {}", k + 1), format!("({})  |r|^2 = {}{simple}", v.join(", "), root.norm2));
    }
    Ok(())
}

fn frame_lines(frame: &crate::saito::SaitoFrame, r: &mut RunReport) {
    for (a, t) in frame.t.iter().enumerate() {
        r.line(format!("t{}", a + 1), t);
    }
}

fn saito(group: GroupSpec, out: Option<PathBuf>, r: &mut RunReport) -> Result<()> {
    let rs = RootSystem::from_spec(group)?;
    r.param("group", group.to_string());
    let (frame, hit) = FrameCache::from_env().frame(&rs)?;
    r.cache_hits += hit as usize;
    let report = verify_saito(&rs, &frame);
    r.check("degrees", report.degrees_ok);
    r.check("invariant", report.invariant_ok);
    r.check("independent", report.independent);
    r.check("flat", report.flat);
    r.line("degrees", format!("{:?}", frame.degrees));
    r.line("h", frame.h);
    r.line("field", frame.t.iter().fold(Field::Rational, |f, t| f.join(t.field()).unwrap_or(f)));
    frame_lines(&frame, r);
    let json = frame_to_json(&frame);
    if let Some(path) = out {
        fs::write(&path, serde_json::to_string_pretty(&json)? + "\n")?;
        r.output("written", path.display().to_string());
        r.line("written", path.display());
    }
    r.output("frame", json);
    Ok(())
}

fn singular(group: GroupSpec, beta: usize, m: u32, verify: bool, out: Option<PathBuf>, r: &mut RunReport) -> Result<()> {
    let rs = RootSystem::from_spec(group)?;
    r.param("group", group.to_string());
    r.param("beta", beta);
    r.param("m", m);
    let (frame, hit) = FrameCache::from_env().frame(&rs)?;
    r.cache_hits += hit as usize;
    let mut fam = singular_family(&frame, beta, m)?.normalized();
    r.line("c", &fam.c);
    r.line("degree", fam.degree(&frame));
    for (i, q) in fam.q.iter().enumerate() {
        r.line(format!("q{}", i + 1), q);
    }
    r.line("Q", &fam.potential);
    r.output("c", format_rational(&fam.c));
    r.output("degree", fam.degree(&frame));
    if verify {
        let cert = certify_family(&rs, &frame, &fam)?;
        r.check("dunkl annihilated", cert.dunkl_annihilated);
        r.check("degree", cert.degree_ok);
        r.check("module dimension", cert.span_dim == rs.rank());
        r.check("reflection type", cert.reflection_type);
        r.check("cross derivatives", cert.cross_symmetric);
        r.check("euler identity", cert.euler_ok);
        r.check("gradient", cert.gradient_ok);
        r.output("singular", cert.dunkl_annihilated);
        r.line("singular", cert.dunkl_annihilated);
        fam.certificate = Some(cert);
    }
    let json = family_to_json(&fam);
    if let Some(path) = out {
        fs::write(&path, serde_json::to_string_pretty(&json)? + "\n")?;
        r.output("written", path.display().to_string());
        r.line("written", path.display());
    }
    r.output("family", json);
    Ok(())
}

fn periods(group: GroupSpec, nu: BigRational, degree: u32, r: &mut RunReport) -> Result<()> {
    let rs = RootSystem::from_spec(group)?;
    r.param("group", group.to_string());
    r.param("nu", format_rational(&nu));
    r.param("degree", degree);
    let nu = Scalar::from(nu);
    let ps = homogeneous_twisted_periods(&rs, &nu, degree)?;
    r.output("dimension", ps.len());
    r.line("dimension", ps.len());
    let mut all_ok = true;
    for (k, p) in ps.iter().enumerate() {
        r.line(format!("period {}", k + 1), p);
        all_ok &= twisted_period_pde_check_cleared(&rs, p, &nu)?;
    }
    r.check("twisted period equations", all_ok);
    r.output("periods", ps.iter().map(poly_to_json).collect::<Vec<_>>());
    Ok(())
}

fn residue(kind: ResidueKind, rank: usize, s: u32, m: u32, verify: bool, r: &mut RunReport) -> Result<()> {
    r.param("kind", kind.to_string());
    r.param("rank", rank);
    r.param("s", s);
    r.param("m", m);
    let p = residue_twisted_period(kind, rank, s, m)?;
    let nu = residue_parameter(kind, rank, s, m);
    r.line("nu", &nu);
    r.line("degree", residue_degree(kind, rank, s, m));
    r.line("polynomial", &p);
    r.output("nu", format_rational(&nu));
    r.output("degree", residue_degree(kind, rank, s, m));
    if verify {
        let ty = match kind {
            ResidueKind::A => GroupType::A,
            ResidueKind::B => GroupType::B,
            ResidueKind::DInfinity | ResidueKind::DZero => GroupType::D,
        };
        let rs = RootSystem::from_spec(GroupSpec::new(ty, rank))?;
        let grad: Vec<MultiPoly> = (0..p.nvars()).map(|i| p.diff(i)).collect();
        r.check("gradient singular", all_singular(&rs, &Scalar::from(nu), &grad)?);
        r.check("invariant", rs.is_invariant(&p));
    }
    r.output("polynomial", poly_to_json(&p));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn complex(n: usize, ell: u32, q: u32, s: u32, m: u32, verify: bool, r: &mut RunReport) -> Result<()> {
    r.param("n", n);
    r.param("ell", ell);
    r.param("q", q);
    r.param("s", s);
    r.param("m", m);
    let spec = ComplexGroupSpec::new(n, ell, q, s, m)?;
    let field = Field::Extension(spec.context().clone());
    let fs = complex_singular_family(&spec)
        .into_iter()
        .map(|f| f.with_field(field.clone()))
        .collect::<Result<Vec<_>>>()?;
    let params: Vec<String> = spec.parameters().iter().map(format_rational).collect();
    r.line("nu", spec.nu());
    let shown: Vec<String> = spec.parameters().iter().map(ToString::to_string).collect();
    r.line("parameters c_b", shown.join(", "));
    r.line("degree", spec.degree());
    for (j, f) in fs.iter().enumerate() {
        r.line(format!("f{}", j + 1), f);
    }
    r.output("nu", format_rational(&spec.nu()));
    r.output("parameters", params);
    r.output("degree", spec.degree());
    if verify {
        let singular = complex_family_singular(&spec, &fs)?;
        r.check("dunkl annihilated", singular);
        r.check("group action", complex_group_action_check(&spec, &fs));
        r.check("degree", fs.iter().all(|f| f.total_degree() == Some(spec.degree())));
        r.output("singular", singular);
    }
    r.output("polynomials", fs.iter().map(poly_to_json).collect::<Vec<_>>());
    Ok(())
}

fn verify(group: GroupSpec, c: BigRational, path: PathBuf, r: &mut RunReport) -> Result<()> {
    let rs = RootSystem::from_spec(group)?;
    r.param("group", group.to_string());
    r.param("c", format_rational(&c));
    r.param("poly", path.display().to_string());
    let value: Value = serde_json::from_str(&fs::read_to_string(&path)?)?;
    let polys = match &value {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(k, v)| crate::serial::poly_from_json_at(v, &format!("$[{k}]")))
            .collect::<Result<Vec<_>>>()?,
        v => vec![poly_from_json(v)?],
    };
    let c = Scalar::from(c);
    let mut certs = Vec::new();
    let mut singular = true;
    for (k, p) in polys.iter().enumerate() {
        let cert = is_singular(&rs, &c, p)?;
        singular &= cert.singular;
        r.line(format!("poly {}", k + 1), p);
        for (i, res) in cert.residuals.iter().enumerate() {
            r.line(format!("  nabla_{} poly {}", i + 1, k + 1), res);
        }
        certs.push(cert);
    }
    r.checks.push(Check {
        name: "singular".into(),
        passed: singular,
        residuals: certs
            .iter()
            .flat_map(|c| c.residuals.iter().map(poly_to_json))
            .collect(),
    });
    r.line("singular", singular);
    r.output(
        "certificates",
        certs
            .iter()
            .map(|c| {
                json!({
                    "residuals": c.residuals.iter().map(poly_to_json).collect::<Vec<_>>(),
                    "singular": c.singular,
                })
            })
            .collect::<Vec<_>>(),
    );
    r.output("singular", singular);
    Ok(())
}

fn selftest_cmd(r: &mut RunReport) -> Result<()> {
    let results = selftest::run_all();
    for c in &results {
        r.line(format!("criterion {:>2}", c.id), format!("{:<32} {}  {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail));
        r.check(&format!("criterion {}", c.id), c.passed);
    }
    r.output("criteria", serde_json::to_value(&results)?);
    Ok(())
}
