//! The `kronecker` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error (a point outside the domain of the requested formula).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::charts::{in_ellipse, invariant_chart, lift_point, Chart, ChartPoint};
use crate::error::{Error, Result};
use crate::frobenius::{periods, FrobeniusData};
use crate::json;
use crate::linalg::{JsonComplex, C64};
use crate::root_lattice::{QuiverParams, RootVector};
use crate::spectral_frame::SpectralFrame;
use crate::verification::fd::FdConfig;
use crate::verification::{run_suite, Suite, VerificationReport, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest height accepted with `--imaginary`, whose listing is quadratic
/// in the height.
pub const MAX_IMAGINARY_HEIGHT: u64 = 2000;

#[derive(Debug, Parser)]
#[command(name = "kronecker", version, about = "Frobenius manifold of the l-Kronecker quiver")]
pub struct Cli {
    /// Output format; JSON is the machine interface.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Tensors,
    Potential,
    Periods,
    Canonical,
    Discriminant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Axioms,
    Dubrovin,
    Monodromy,
    Connection,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Dubrovin => Suite::Dubrovin,
            SuiteArg::Monodromy => Suite::Monodromy,
            SuiteArg::Connection => Suite::Connection,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List positive real roots up to a height.
    Roots {
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        ell: i64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=i64::MAX as u64))]
        max_height: u64,
        /// Also list positive imaginary roots.
        #[arg(long)]
        imaginary: bool,
    },
    /// Print the spectral constants, P, R1, R2 and the Cartan matrix.
    Frame {
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        ell: i64,
    },
    /// Evaluate Frobenius data at a point.
    ///
    /// Points are "c1,c2" with complex literals such as 1.5, -2i, 0.3-1e-2i,
    /// or (a,b) for a+bi. Points closer than a relative 1e-9 to a wall are
    /// treated as on the wall.
    Eval {
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        ell: i64,
        #[arg(long, value_parser = parse_chart)]
        chart: Chart,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Run numerical verification suites and print a report.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        ell: i64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, env = "KRONECKER_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Base finite-difference step, in [1e-9, 1e-2].
        #[arg(long, default_value_t = 1e-5)]
        fd_step: f64,
        #[arg(long, default_value_t = 1)]
        richardson: u32,
        /// Samples with |discriminant| below this are skipped.
        #[arg(long, default_value_t = 1e-3)]
        min_discriminant: f64,
        /// Override a check tolerance, e.g. --tol dubrovin_identity=1e-4.
        #[arg(long = "tol", value_parser = parse_override)]
        tolerances: Vec<(String, f64)>,
    },
}

fn parse_chart(s: &str) -> std::result::Result<Chart, String> {
    Chart::parse(s).map_err(|e| e.to_string())
}

fn parse_override(s: &str) -> std::result::Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))?;
    let v: f64 = value.trim().parse().map_err(|_| format!("bad tolerance {value:?}"))?;
    if v.is_nan() || v < 0.0 {
        return Err(format!("tolerance must be non-negative, got {v}"));
    }
    Ok((name.trim().to_string(), v))
}

fn parse_real(s: &str, input: &str) -> Result<f64> {
    s.parse().map_err(|_| Error::Parse {
        what: "complex number",
        input: input.to_string(),
    })
}

/// Parse `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` or `(a,b)`.
pub fn parse_complex(input: &str) -> Result<C64> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse {
        what: "complex number",
        input: input.to_string(),
    };
    if s.is_empty() {
        return Err(bad());
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        return Ok(C64::new(parse_real(a, input)?, parse_real(b, input)?));
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(C64::new(parse_real(&s, input)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other, input)?,
    };
    let re = if re.is_empty() { 0.0 } else { parse_real(re, input)? };
    Ok(C64::new(re, im))
}

/// Split on commas outside parentheses and parse two complex numbers.
pub fn parse_point(input: &str) -> Result<[C64; 2]> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (k, ch) in input.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&input[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(&input[start..]);
    if parts.len() != 2 {
        return Err(Error::Parse {
            what: "point (expected \"c1,c2\")",
            input: input.to_string(),
        });
    }
    Ok([parse_complex(parts[0])?, parse_complex(parts[1])?])
}

fn jc(z: C64) -> JsonComplex {
    z.into()
}

fn root_json(v: &RootVector) -> Value {
    match v.to_i64_pair() {
        Some((a, b)) => json!([a, b]),
        None => json!([v.a1.to_string(), v.a2.to_string()]),
    }
}

/// JSON document produced by `kronecker roots`.
pub fn cmd_roots(ell: i64, max_height: u64, imaginary: bool) -> Result<Value> {
    let params = QuiverParams::new(ell)?;
    let real = params.enumerate_positive_real_roots(max_height)?;
    let mut out = json!({
        "schema_version": SCHEMA_VERSION,
        "ell": ell,
        "max_height": max_height,
        "real_roots": real.iter().map(root_json).collect::<Vec<_>>(),
    });
    if imaginary {
        if max_height > MAX_IMAGINARY_HEIGHT {
            return Err(Error::InvalidHeight);
        }
        let h = max_height as i64;
        let mut im = Vec::new();
        for height in 1..=h {
            for a1 in 0..=height {
                let v = RootVector::new(a1, height - a1);
                if params.is_positive_imaginary_root(&v) {
                    im.push(root_json(&v));
                }
            }
        }
        out["imaginary_roots"] = Value::Array(im);
    }
    Ok(out)
}

fn int_matrix(m: [[i64; 2]; 2]) -> Value {
    json!(m)
}

/// JSON document produced by `kronecker frame`.
pub fn cmd_frame(ell: i64) -> Result<Value> {
    let params = QuiverParams::new(ell)?;
    let frame = SpectralFrame::new(params);
    let (r1, r2) = frame.transformed_reflections();
    let (a, b) = frame.ellipse_axes();
    let cartan = params.cartan_matrix().to_i64().map(int_matrix).unwrap_or(Value::Null);
    let coxeter = params.coxeter_matrix().to_i64().map(int_matrix).unwrap_or(Value::Null);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "ell": ell,
        "nu": frame.nu,
        "rho": frame.rho,
        "log_rho": frame.log_rho,
        "log_nu": frame.log_nu,
        "h": json::to_value(&jc(frame.h)),
        "h_text": format!("{}i", json::round_significant(frame.h.im)),
        "p": frame.p,
        "p_inv": frame.p_inv,
        "r1": json::to_value(&r1),
        "r2": json::to_value(&r2),
        "cartan_matrix": cartan,
        "coxeter_matrix": coxeter,
        "ellipse_axes": {"real": a, "imaginary": b},
    }))
}

/// The point in s-coordinates.
fn to_quotient(data: &FrobeniusData, p: ChartPoint) -> Result<[C64; 2]> {
    let frame = &data.frame;
    let s = match p.chart {
        Chart::Quotient => {
            if !in_ellipse(frame, p.c1) {
                return Err(Error::OutsideEllipse(p.c1.to_string()));
            }
            p.coords()
        }
        Chart::Flat => data.quotient_coords(p.c1, p.c2)?,
        Chart::Cover => invariant_chart(frame, p.c1, p.c2)?.coords(),
        Chart::X => {
            let y = lift_point(p.c1, p.c2)?;
            invariant_chart(frame, y.c1, y.c2)?.coords()
        }
    };
    Ok(s)
}

fn complex_pair(z: [C64; 2]) -> Value {
    json::to_value(&[jc(z[0]), jc(z[1])])
}

fn cmd_eval(ell: i64, chart: Chart, point: &str, what: What) -> Result<Value> {
    let data = FrobeniusData::new(SpectralFrame::new(QuiverParams::new(ell)?));
    let [c1, c2] = parse_point(point)?;
    let p = ChartPoint::new(chart, c1, c2);
    let s = to_quotient(&data, p)?;
    let t = data.flat_coords(s[0], s[1]);
    let t_point = ChartPoint::new(Chart::Flat, t[0], t[1]);
    let result = match what {
        What::Tensors => {
            let cm = data.euler_multiplication(t[0], t[1])?;
            json!({
                "g": json::to_value(&data.g_cometric(p)?),
                "g_t": json::to_value(&data.g_cometric(t_point)?),
                "eta": json::to_value(&crate::frobenius::Tensor2::new(data.eta_co, Chart::Flat, crate::frobenius::Variance::Contravariant)),
                "euler_multiplication": json::to_value(&cm),
                "unit": json::to_value(&data.unit_field()),
                "euler": json::to_value(&data.euler_field(t[0], t[1])),
            })
        }
        What::Potential => json!({
            "value": json::to_value(&jc(data.potential(t[0], t[1])?)),
            "hessian": json::to_value(&data.potential.hessian(t)?),
        }),
        What::Periods => {
            let per = periods(&data.frame, s[0], s[1])?;
            json!({
                "x": complex_pair(per.as_array()),
                "flat_function": json::to_value(&jc(data.flat_function_from_periods(s[0], s[1])?)),
            })
        }
        What::Canonical => {
            let (u1, u2) = data.canonical_coords(s[0], s[1]);
            let eig = data.euler_multiplication(t[0], t[1])?.matrix.eigenvalues();
            json!({
                "u": complex_pair([u1, u2]),
                "euler_eigenvalues": complex_pair(eig),
            })
        }
        What::Discriminant => json!({
            "s": json::to_value(&jc(data.discriminant(ChartPoint::new(Chart::Quotient, s[0], s[1]))?)),
            "t": json::to_value(&jc(data.discriminant(t_point)?)),
        }),
    };
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "ell": ell,
        "point": json::to_value(&p),
        "s": complex_pair(s),
        "t": complex_pair(t),
        "what": format!("{what:?}").to_lowercase(),
        "result": result,
    }))
}

fn apply_overrides(report: &mut VerificationReport, overrides: &[(String, f64)]) -> Result<()> {
    for (name, tol) in overrides {
        let Some(rec) = report.checks.iter_mut().find(|c| &c.name == name) else {
            return Err(Error::Parse {
                what: "tolerance override (unknown check)",
                input: name.clone(),
            });
        };
        rec.tolerance = *tol;
        rec.pass = rec.samples > 0 && rec.max_residual <= *tol;
    }
    report.pass = report.checks.iter().all(|c| c.pass);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    ell: i64,
    samples: u64,
    seed: u64,
    suite: SuiteArg,
    fd_step: f64,
    richardson: u32,
    min_discriminant: f64,
    overrides: &[(String, f64)],
) -> Result<VerificationReport> {
    let frame = SpectralFrame::new(QuiverParams::new(ell)?);
    let cfg = FdConfig::new(fd_step, richardson, min_discriminant)?;
    let mut report = run_suite(&frame, suite.into(), samples as usize, seed, &cfg)?;
    apply_overrides(&mut report, overrides)?;
    Ok(report)
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            if let (Some(re), Some(im), 2) = (map.get("re"), map.get("im"), map.len()) {
                out.push((prefix.to_string(), format!("{re} {im:+}i").replace("+-", "-")));
                return;
            }
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
}

fn report_table(r: &VerificationReport) -> String {
    let mut s = format!("ell={} seed={} suite={} pass={}\n", r.ell, r.seed, r.suite, r.pass);
    for c in &r.checks {
        s += &format!(
            "{} {:<36} residual={:.3e} tol={:.1e} samples={} skipped={}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.max_residual,
            c.tolerance,
            c.samples,
            c.skipped
        );
    }
    s
}

fn render(value: &impl Serialize, format: Format) -> String {
    match format {
        Format::Json => json::to_string(value) + "\n",
        Format::Table => table(&json::to_value(value)),
    }
}

fn error_code(e: &Error) -> i32 {
    if e.is_domain_error() {
        EXIT_DOMAIN
    } else {
        EXIT_USAGE
    }
}

/// Run with explicit arguments and streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let format = cli.format;
    let result: Result<(String, i32)> = match cli.command {
        Command::Roots {
            ell,
            max_height,
            imaginary,
        } => cmd_roots(ell, max_height, imaginary).map(|v| (render(&v, format), EXIT_OK)),
        Command::Frame { ell } => cmd_frame(ell).map(|v| (render(&v, format), EXIT_OK)),
        Command::Eval {
            ell,
            chart,
            point,
            what,
        } => cmd_eval(ell, chart, &point, what).map(|v| (render(&v, format), EXIT_OK)),
        Command::Verify {
            ell,
            samples,
            seed,
            suite,
            fd_step,
            richardson,
            min_discriminant,
            tolerances,
        } => cmd_verify(
            ell,
            samples,
            seed,
            suite,
            fd_step,
            richardson,
            min_discriminant,
            &tolerances,
        )
        .map(|r| {
            let text = match format {
                Format::Json => render(&r, format),
                Format::Table => report_table(&r),
            };
            (text, if r.pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
