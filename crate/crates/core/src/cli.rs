//! The `devsurf` command line: construct, transform, check and export patches.
//!
//! Exit codes: 0 on success or a passing check, 2 on a failing check, 1 on
//! usage, schema or geometry errors (message on stderr).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bezier::BezierCurve;
use crate::developable::{
    aumann_construct, certify, classify, edge_curve, pointwise_certificate, singular_interval,
    Certificate, Certification, DevelopablePatch, PointwiseCertificate,
};
use crate::error::Error;
use crate::families;
use crate::geom::Vec3;
use crate::io::{parse_curve, parse_patch, to_json, Document, Polyline};
use crate::obj::{export_obj, fmt_sig};
use crate::patch_ops;
use crate::poly::Polynomial;
use crate::verify::{self, CheckReport, DEFAULT_TOL};

/// Environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "DEVSURF_TOL";

const CERTIFY_SAMPLES: usize = 33;

#[derive(Parser, Debug)]
#[command(
    name = "devsurf",
    version,
    about = "Bezier developable surface patches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a developable patch from a boundary curve (or edge of regression).
    Construct(ConstructArgs),
    /// Transform a patch, carrying its certificate along.
    Op(OpArgs),
    /// Run a numerical oracle and emit a check report.
    Check(CheckArgs),
    /// Emit the edge of regression: a curve for constant certificates,
    /// otherwise a sampled polyline.
    Edge(EdgeArgs),
    /// Print planar, cylinder, cone or tangent.
    Classify(InputArgs),
    /// Print the u-intervals where the edge of regression crosses the patch.
    Singular(SingularArgs),
    /// Tessellate to Wavefront OBJ.
    Mesh(MeshArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input JSON document; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output file; absent writes stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    Aumann,
    Cylinder,
    Cone,
    Tangent,
    FromEdge,
    Family4,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Free point of the second boundary, `x,y,z`.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    d0: Option<Vec3>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    vertex: Option<Vec3>,
    /// Polynomial, comma-separated ascending coefficients.
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    f: Option<Polynomial>,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
    w: Option<Vec3>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    big_a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b2: Option<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpKind {
    Elevate,
    RestrictU,
    RestrictV,
    ScaleRulings,
    Reparam,
}

#[derive(Args, Debug)]
struct OpArgs {
    #[arg(value_enum)]
    kind: OpKind,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Elevation count.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Polynomial, comma-separated ascending coefficients.
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    h: Option<Polynomial>,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Oracle {
    /// Coplanarity of the cell control points at sampled u.
    #[default]
    Developability,
    /// Coplanarity of the four penultimate de Casteljau points.
    Coplanarity,
    /// Blossom coupling with the attached certificate.
    Certificate,
    /// Differential form of the certificate.
    Ode,
    /// Constant unit normal along each ruling.
    Normals,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, value_enum, default_value_t = Oracle::Developability)]
    oracle: Oracle,
    #[arg(long, default_value_t = 101)]
    nu: usize,
    #[arg(long, default_value_t = 11)]
    nv: usize,
}

#[derive(Args, Debug)]
struct EdgeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Samples of the polyline for non-constant certificates.
    #[arg(long, default_value_t = 101)]
    nu: usize,
}

#[derive(Args, Debug)]
struct SingularArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    vmin: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    vmax: f64,
}

#[derive(Args, Debug)]
struct MeshArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, default_value_t = 33)]
    nu: usize,
    #[arg(long, default_value_t = 9)]
    nv: usize,
}

fn parse_floats(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let x: f64 = t.parse().map_err(|_| format!("`{t}` is not a number"))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(format!("`{t}` is not finite"))
            }
        })
        .collect()
}

fn parse_vec3(s: &str) -> Result<Vec3, String> {
    match parse_floats(s)?.as_slice() {
        [x, y, z] => Ok(Vec3::new(*x, *y, *z)),
        v => Err(format!("expected x,y,z, got {} values", v.len())),
    }
}

fn parse_poly(s: &str) -> Result<Polynomial, String> {
    Ok(Polynomial::new(parse_floats(s)?))
}

/// Failure of a command; `Usage` and `Failed` map to exit codes 1 and 2.
enum Failure {
    Usage(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<crate::io::DocumentError> for Failure {
    fn from(e: crate::io::DocumentError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

/// `DEVSURF_TOL` when set, else the default `1e-9`.
pub fn tolerance() -> Result<f64, String> {
    match std::env::var(TOL_ENV) {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(format!("{TOL_ENV}={s} is not a positive number")),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn tolerance_override() -> Result<Option<f64>, Failure> {
    if std::env::var_os(TOL_ENV).is_some() {
        tolerance().map(Some).map_err(Failure::Usage)
    } else {
        Ok(None)
    }
}

fn read_input(input: &InputArgs) -> Result<String, Failure> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_patch(input: &InputArgs) -> Result<DevelopablePatch, Failure> {
    Ok(parse_patch(&read_input(input)?)?)
}

fn write_output(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> CmdResult {
    match &output.output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write stdout: {e}"))),
    }
}

/// The attached certificate, or one inferred from samples.
fn certificate_of(patch: &DevelopablePatch, tol: f64) -> Option<Certificate> {
    if let Some(k) = patch.certificate() {
        return Some(k.clone());
    }
    match certify(patch, CERTIFY_SAMPLES, tol.max(1e-8))? {
        Certification::Fitted(k) => Some(k),
        Certification::Cylinder(Some(f)) => Some(Certificate::new(f.clone(), f)),
        _ => None,
    }
}

fn construct(args: ConstructArgs, stdout: &mut dyn Write) -> CmdResult {
    let curve: BezierCurve = parse_curve(&read_input(&args.input)?)?;
    let patch = match args.kind {
        ConstructKind::Aumann => aumann_construct(
            &curve,
            require(args.d0, "d0")?,
            require(args.lambda, "lambda")?,
            require(args.m, "m")?,
        )?,
        ConstructKind::Cylinder => {
            families::cylinder(&curve, require(args.w, "w")?, &require(args.f, "f")?)?
        }
        ConstructKind::Cone => families::cone(
            &curve,
            require(args.vertex, "vertex")?,
            &require(args.f, "f")?,
        )?,
        ConstructKind::Tangent => families::tangent_patch(&curve, &require(args.f, "f")?)?,
        ConstructKind::FromEdge => families::from_edge_of_regression(
            &curve,
            require(args.b1, "b1")?,
            require(args.b2, "b2")?,
        )?,
        ConstructKind::Family4 => families::family4(
            &curve,
            require(args.a, "a")?,
            require(args.b, "b")?,
            require(args.big_a, "A")?,
            require(args.w, "w")?,
        )?,
    };
    write_output(&args.output, &to_json(&Document::Patch(patch)), stdout)
}

fn op(args: OpArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args.input)?;
    let out = match args.kind {
        OpKind::Elevate => patch_ops::elevate_patch(&patch, require(args.m, "m")?)?,
        OpKind::RestrictU => {
            patch_ops::restrict_u(&patch, require(args.a, "a")?, require(args.b, "b")?)?
        }
        OpKind::RestrictV => {
            patch_ops::restrict_v(&patch, require(args.a, "a")?, require(args.b, "b")?)?
        }
        OpKind::ScaleRulings => patch_ops::scale_rulings(&patch, &require(args.h, "h")?)?,
        OpKind::Reparam => patch_ops::reparametrize(&patch, &require(args.h, "h")?)?,
    };
    write_output(&args.output, &to_json(&Document::Patch(out)), stdout)
}

fn check(args: CheckArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args.input)?;
    if args.nu == 0 || args.nv == 0 {
        return Err(Failure::Usage("--nu and --nv must be positive".into()));
    }
    let needs_cert = || {
        patch
            .certificate()
            .ok_or_else(|| Failure::Usage("this oracle needs a certificate".into()))
    };
    let report: CheckReport = match args.oracle {
        Oracle::Developability => verify::developability_residual(&patch, args.nu),
        Oracle::Coplanarity => verify::penultimate_coplanarity(&patch, args.nu),
        Oracle::Certificate => verify::blossom_coupling_residual(&patch, needs_cert()?, args.nu),
        Oracle::Ode => verify::ode_residual(&patch, needs_cert()?, args.nu),
        Oracle::Normals => verify::normal_constancy(&patch, args.nu, args.nv),
    };
    let report = match tolerance_override()? {
        Some(t) => report.with_tolerance(t),
        None => report,
    };
    let pass = report.pass;
    write_output(&args.output, &to_json(&Document::Report(report)), stdout)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

fn edge(args: EdgeArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args.input)?;
    let tol = tolerance().map_err(Failure::Usage)?;
    let cert = certificate_of(&patch, tol);
    if let Some(k) = &cert {
        if k.is_cylinder() {
            return Err(Error::CylinderCertificate.into());
        }
        if k.constants().is_some() {
            let with = patch.clone().with_certificate(cert.clone());
            return write_output(
                &args.output,
                &to_json(&Document::Curve(edge_curve(&with)?)),
                stdout,
            );
        }
    }
    if args.nu < 2 {
        return Err(Failure::Usage("--nu must be at least 2".into()));
    }
    let mut line = Polyline {
        params: Vec::new(),
        points: Vec::new(),
    };
    for u in verify::closed_grid(args.nu) {
        let v = match &cert {
            Some(k) => crate::developable::edge_parameter(k, u).ok(),
            None => match pointwise_certificate(&patch, u, tol.max(1e-8)) {
                PointwiseCertificate::Intersection { lambda, m } if lambda != m => {
                    Some((u - m) / (lambda - m))
                }
                _ => None,
            },
        };
        if let Some(v) = v.filter(|v| v.is_finite()) {
            line.params.push(u);
            line.points.push(patch.point(u, v).to_array());
        }
    }
    if line.params.is_empty() {
        return Err(Failure::Usage(
            "no edge of regression could be evaluated".into(),
        ));
    }
    write_output(&args.output, &to_json(&Document::Polyline(line)), stdout)
}

fn classify_cmd(args: InputArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args)?;
    let tol = tolerance().map_err(Failure::Usage)?;
    let class = classify(&patch, tol)?;
    writeln!(stdout, "{}", class.tag()).map_err(|e| Failure::Usage(e.to_string()))
}

fn singular(args: SingularArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args.input)?;
    let tol = tolerance().map_err(Failure::Usage)?;
    let cert = certificate_of(&patch, tol).ok_or(Error::MissingCertificate)?;
    for (a, b) in singular_interval(&cert, (0.0, 1.0), (args.vmin, args.vmax)) {
        writeln!(stdout, "[{}, {}]", fmt_sig(a, 9), fmt_sig(b, 9))
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn mesh(args: MeshArgs, stdout: &mut dyn Write) -> CmdResult {
    let patch = read_patch(&args.input)?;
    write_output(&args.output, &export_obj(&patch, args.nu, args.nv)?, stdout)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, stdout),
        Command::Op(a) => op(a, stdout),
        Command::Check(a) => check(a, stdout),
        Command::Edge(a) => edge(a, stdout),
        Command::Classify(a) => classify_cmd(a, stdout),
        Command::Singular(a) => singular(a, stdout),
        Command::Mesh(a) => mesh(a, stdout),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Failed) => 2,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "devsurf: {msg}");
            1
        }
    }
}
