// Copyright 2026 The lattice-energy authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the rendered output with its exit code; the binary only prints it.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{
    blanc_bound, certificate_threshold, g_cert, global_identity_check, optimal_triangular_area,
    ratio_function_detailed, ratio_infimum_scan, riemann_constant, riemann_decomposition, sufficient_condition,
    RATIO_EXCLUSION,
};
use crate::energy::{
    energy_under_scaling, lj_breakdown, lj_potential, pair_energy, tf_energy, tf_potential, PotentialKind,
    PotentialSpec,
};
use crate::error::Error;
use crate::lattice::{BravaisLattice, FixedAreaPoint, QuadraticForm};
use crate::optimize::{
    critical_point_check, crossover_area, levelset, minimize_fixed_area_with, minimize_global, scaling_minimize,
    ChartWindow, CriticalChart, FixedAreaOptions, LevelSetObjective, MinimizationReport, DEFAULT_GRID_STEP,
};
use crate::sums::{
    bessel_k0, bessel_k0_laplace, epstein_zeta, gaussian_sum, theta, theta_normalized, NormalizedForm, SumControl,
    ZetaMethod,
};
use crate::verify::{reference, run_all, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "lattice-energy",
    version,
    about = "Lattice sums and energies of 2-D Bravais lattices"
)]
pub struct Cli {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Relative tolerance of every lattice sum and quadrature.
    #[arg(long, global = true, value_name = "REL_TOL")]
    pub tol: Option<f64>,
    /// Cap on summation rows and quadrature panels.
    #[arg(long, global = true)]
    pub max_shell: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct, reduce and transform lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Theta, zeta, Gaussian and K0 sums.
    #[command(subcommand)]
    Sums(SumsCmd),
    /// Evaluate a pair potential at one distance.
    Potential {
        #[arg(long)]
        r: f64,
        #[command(flatten)]
        potential: PotentialArgs,
    },
    /// Lattice energy per particle.
    Energy {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Accelerated)]
        method: MethodArg,
    },
    /// Lennard-Jones energy along the dilation family and its optimal dilation.
    Scaling {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Dilation factor at which to evaluate the energy.
        #[arg(long)]
        r: Option<f64>,
    },
    /// Finite-difference gradient of the fixed-area Lennard-Jones energy.
    Critical {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Certificates and identities.
    #[command(subcommand)]
    Analysis(AnalysisCmd),
    /// Derived constants with their reference values.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Minimize at fixed area or over all lattices.
    Minimize(MinimizeArgs),
    /// Write objective values on a chart grid as CSV.
    Levelset(LevelsetArgs),
    /// Run the acceptance suite.
    Verify {
        /// Skip the 50-lattice zeta cross-validation sweep.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Reduced lattice from two lengths and the angle between them.
    Make(RawBasis),
    /// Lagrange-Gauss reduction of a basis, reporting what changed.
    Reduce(RawBasis),
    /// Quadratic form `(a, b, c)` and discriminant.
    Form {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Dilate by a factor.
    Scale {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        factor: f64,
    },
    /// Triangular lattice of a given area.
    Triangular {
        #[arg(long)]
        area: f64,
    },
    /// Lattice at a point of the fixed-area chart.
    Chart {
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long, default_value_t = 1.0)]
        area: f64,
    },
}

#[derive(Debug, Args)]
pub struct RawBasis {
    #[arg(long)]
    pub len_u: f64,
    #[arg(long)]
    pub len_v: f64,
    #[arg(long)]
    pub angle_deg: f64,
}

#[derive(Debug, Subcommand)]
pub enum SumsCmd {
    Theta {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        alpha: f64,
    },
    /// Theta function of a discriminant-1 form.
    ThetaNormalized {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        alpha: f64,
    },
    Zeta {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        s: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Accelerated)]
        method: MethodArg,
    },
    Gaussian {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        y: f64,
    },
    K0 {
        #[arg(long)]
        x: f64,
        /// Use the Laplace-type representation.
        #[arg(long)]
        laplace: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnalysisCmd {
    /// Certificate function `g_A(alpha)` and its derivatives.
    G {
        #[arg(long)]
        area: f64,
        #[arg(long)]
        alpha: f64,
    },
    /// Ratio function at a unit-area chart point.
    Ratio {
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long, default_value_t = RATIO_EXCLUSION)]
        exclusion: f64,
    },
    /// Grid minimum of the ratio function.
    RatioScan {
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        step: f64,
        #[arg(long, default_value_t = RATIO_EXCLUSION)]
        exclusion: f64,
    },
    /// Zeta identities expected at a global minimizer.
    Identity {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Constant `C_A` and the theta-integral decomposition of `E_LJ`.
    Riemann {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// Certificate threshold `(pi^3/120)^(1/3)`, and the verdict at an area.
    Threshold {
        #[arg(long)]
        area: Option<f64>,
    },
    /// Minimal-distance bound of a global minimizer.
    Blanc,
    /// Optimal triangular area, its length and energy.
    A0,
    /// Area where the square lattice overtakes the triangular one.
    Crossover {
        #[arg(long, default_value_t = 1.0)]
        lo: f64,
        #[arg(long, default_value_t = 1.2)]
        hi: f64,
    },
}

#[derive(Debug, Args)]
#[group(id = "lattice", required = true, multiple = true)]
pub struct LatticeArgs {
    #[arg(long, requires_all = ["len_v", "angle_deg"], conflicts_with_all = ["triangular", "square"])]
    pub len_u: Option<f64>,
    #[arg(long, requires_all = ["len_u", "angle_deg"])]
    pub len_v: Option<f64>,
    #[arg(long, requires_all = ["len_u", "len_v"])]
    pub angle_deg: Option<f64>,
    /// Triangular lattice of this area.
    #[arg(long, value_name = "AREA", conflicts_with = "square")]
    pub triangular: Option<f64>,
    /// Square lattice of this area.
    #[arg(long, value_name = "AREA")]
    pub square: Option<f64>,
}

impl LatticeArgs {
    pub fn build(&self) -> crate::Result<BravaisLattice> {
        match (self.triangular, self.square, self.len_u, self.len_v, self.angle_deg) {
            (Some(a), None, None, None, None) => BravaisLattice::triangular(a),
            (None, Some(a), None, None, None) => BravaisLattice::square(a),
            (None, None, Some(u), Some(v), Some(deg)) => BravaisLattice::new(u, v, deg.to_radians()),
            _ => Err(Error::Configuration(
                "give --len-u/--len-v/--angle-deg, --triangular AREA or --square AREA".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Lj,
    Tf,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Accelerated,
}

impl From<MethodArg> for ZetaMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Direct => ZetaMethod::Direct,
            MethodArg::Accelerated => ZetaMethod::Accelerated,
        }
    }
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum, default_value_t = PotentialArg::Lj)]
    pub potential: PotentialArg,
    /// Coefficient of `r^-n` for `--potential power`.
    #[arg(long, default_value_t = 1.0)]
    pub k1: f64,
    #[arg(long, default_value_t = 12.0)]
    pub n: f64,
    /// Coefficient of `-r^-p` for `--potential power`.
    #[arg(long, default_value_t = 2.0)]
    pub k2: f64,
    #[arg(long, default_value_t = 6.0)]
    pub p: f64,
}

impl PotentialArgs {
    pub fn spec(&self) -> crate::Result<PotentialSpec> {
        match self.potential {
            PotentialArg::Lj => Ok(PotentialSpec::lennard_jones()),
            PotentialArg::Tf => Ok(PotentialSpec::thomas_fermi()),
            PotentialArg::Power => PotentialSpec::inverse_power_pair(self.k1, self.n, self.k2, self.p),
        }
    }
}

#[derive(Debug, Args)]
pub struct MinimizeArgs {
    /// Fixed area of the search.
    #[arg(long, conflicts_with = "global", required_unless_present = "global")]
    pub area: Option<f64>,
    /// Minimize over all lattices (Lennard-Jones only).
    #[arg(long)]
    pub global: bool,
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    pub step: f64,
    /// Restrict the fixed-area search to a chart rectangle.
    #[arg(long, num_args = 4, value_names = ["U_MIN", "U_MAX", "V_MIN", "V_MAX"])]
    pub window: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelsetObjectiveArg {
    Lj,
    Tf,
    Ratio,
}

#[derive(Debug, Args)]
pub struct LevelsetArgs {
    #[arg(long, default_value_t = 1.0)]
    pub area: f64,
    #[arg(long)]
    pub u_min: f64,
    #[arg(long)]
    pub u_max: f64,
    #[arg(long)]
    pub v_min: f64,
    #[arg(long)]
    pub v_max: f64,
    #[arg(long)]
    pub step: f64,
    #[arg(long, value_enum, default_value_t = LevelsetObjectiveArg::Lj)]
    pub objective: LevelsetObjectiveArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

/// Structured result of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    #[serde(flatten)]
    pub payload: serde_json::Map<String, Value>,
    pub diagnostics: Vec<String>,
}

/// Rendered output of [`run`].
#[derive(Debug, Clone, PartialEq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Which subcommand reaches each library operation.
pub const OPERATION_COVERAGE: &[(&str, &str)] = &[
    ("make_lattice", "lattice make"),
    ("reduce_basis", "lattice reduce"),
    ("quadratic_form", "lattice form"),
    ("scale", "lattice scale"),
    ("triangular", "lattice triangular"),
    ("from_fixed_area_chart", "lattice chart"),
    ("theta", "sums theta"),
    ("theta_normalized", "sums theta-normalized"),
    ("epstein_zeta_direct", "sums zeta"),
    ("epstein_zeta_accelerated", "sums zeta"),
    ("gaussian_sum", "sums gaussian"),
    ("bessel_k0", "sums k0"),
    ("bessel_k0_laplace", "sums k0"),
    ("lj_potential", "potential"),
    ("lj_energy", "energy"),
    ("pair_energy", "energy"),
    ("tf_energy", "energy"),
    ("energy_under_scaling", "scaling"),
    ("scaling_minimize", "scaling"),
    ("critical_point_check", "critical"),
    ("g_cert", "analysis g"),
    ("ratio_function", "analysis ratio"),
    ("ratio_infimum_scan", "analysis ratio-scan"),
    ("global_identity_check", "analysis identity"),
    ("riemann_constant", "analysis riemann"),
    ("sufficient_condition", "bounds threshold"),
    ("blanc_bound", "bounds blanc"),
    ("optimal_triangular_area", "bounds a0"),
    ("crossover_area", "bounds crossover"),
    ("minimize_fixed_area", "minimize"),
    ("minimize_global", "minimize"),
    ("levelset", "levelset"),
];

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Convergence { .. } => EXIT_CONVERGENCE,
        _ => EXIT_USAGE,
    }
}

/// Text lines plus a JSON payload.
struct Report {
    lines: Vec<String>,
    payload: serde_json::Map<String, Value>,
    diagnostics: Vec<String>,
    code: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            payload: serde_json::Map::new(),
            diagnostics: Vec::new(),
            code: EXIT_OK,
        }
    }

    /// Record a field in both outputs.
    fn field(&mut self, key: &str, value: impl Serialize + std::fmt::Display) -> &mut Self {
        self.lines.push(format!("{key}: {value}"));
        self.payload.insert(key.into(), json!(value));
        self
    }

    /// Record a field with a reference value printed alongside.
    fn field_ref(&mut self, key: &str, value: f64, reference_key: &str) -> &mut Self {
        let r = reference(reference_key);
        self.lines.push(format!("{key}: {value} (reference {})", r.value));
        self.payload.insert(key.into(), json!(value));
        self
    }

    fn data(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.payload.insert(key.into(), json!(value));
        self
    }

    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }
}

fn lattice_json(lat: &BravaisLattice) -> Value {
    json!({
        "len_u": lat.len_u(),
        "len_v": lat.len_v(),
        "angle": lat.angle(),
        "angle_deg": lat.angle().to_degrees(),
        "area": lat.area(),
    })
}

fn lattice_text(lat: &BravaisLattice) -> String {
    format!(
        "len_u = {}, len_v = {}, angle = {} deg, area = {}",
        lat.len_u(),
        lat.len_v(),
        lat.angle().to_degrees(),
        lat.area()
    )
}

fn put_lattice(r: &mut Report, key: &str, lat: &BravaisLattice) {
    r.line(format!("{key}: {}", lattice_text(lat)));
    r.data(key, lattice_json(lat));
}

fn form_json(q: &QuadraticForm) -> Value {
    json!({"a": q.a, "b": q.b, "c": q.c, "disc": q.disc})
}

/// Parse `args` (program name first) and execute the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let json_mode = cli.json;
    let mut ctl = SumControl::default();
    if let Some(t) = cli.tol {
        ctl = SumControl::with_rel_tol(t);
    }
    if let Some(m) = cli.max_shell {
        ctl.max_shell = m;
    }
    let outcome = match &cli.command {
        // verify reports a bad tolerance as failing rows
        Command::Verify { .. } => execute(&cli.command, &ctl),
        _ => ctl
            .validate()
            .map_err(Failure::from)
            .and_then(|_| execute(&cli.command, &ctl)),
    };
    match outcome {
        Ok(report) => {
            let status = if report.code == EXIT_OK {
                Status::Ok
            } else {
                Status::Error
            };
            let stdout = if json_mode {
                let result = CommandResult {
                    status,
                    payload: report.payload,
                    diagnostics: report.diagnostics,
                };
                serde_json::to_string_pretty(&result).expect("serializable result") + "\n"
            } else {
                let mut s = report.lines.join("\n");
                s.push('\n');
                for d in &report.diagnostics {
                    s.push_str(&format!("warning: {d}\n"));
                }
                s
            };
            CliOutput {
                code: report.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure { err, code }) => {
            let message = err;
            let stdout = if json_mode {
                let mut payload = serde_json::Map::new();
                payload.insert("error".into(), json!(message));
                let result = CommandResult {
                    status: Status::Error,
                    payload,
                    diagnostics: vec![],
                };
                serde_json::to_string_pretty(&result).expect("serializable result") + "\n"
            } else {
                String::new()
            };
            CliOutput {
                code,
                stdout,
                stderr: format!("error: {message}\n"),
            }
        }
    }
}

struct Failure {
    err: String,
    code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            err: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn execute(cmd: &Command, ctl: &SumControl) -> Outcome {
    let mut r = Report::new();
    match cmd {
        Command::Lattice(c) => lattice_cmd(c, &mut r)?,
        Command::Sums(c) => sums_cmd(c, ctl, &mut r)?,
        Command::Potential { r: dist, potential } => {
            let spec = potential.spec()?;
            let value = match spec.kind {
                PotentialKind::LennardJones => lj_potential(*dist)?,
                PotentialKind::ThomasFermi => tf_potential(*dist, ctl)?,
                PotentialKind::InversePowerPair => spec.eval(*dist, ctl)?,
            };
            r.field("r", *dist).field("potential", value);
        }
        Command::Energy {
            lattice,
            potential,
            method,
        } => energy_cmd(&lattice.build()?, &potential.spec()?, (*method).into(), ctl, &mut r)?,
        Command::Scaling { lattice, r: dilation } => {
            let lat = lattice.build()?;
            if let Some(f) = dilation {
                r.field("r", *f).field("energy", energy_under_scaling(&lat, *f, ctl)?);
            }
            let best = scaling_minimize(&lat, ctl)?;
            r.field("optimal_r", best.r)
                .field("optimal_area", lat.area() * best.r * best.r)
                .field("optimal_energy", best.energy);
        }
        Command::Critical { lattice } => {
            let lat = lattice.build()?;
            let c = critical_point_check(&lat, lat.area(), ctl)?;
            r.field("grad_norm", c.grad_norm)
                .field(
                    "chart",
                    match c.chart {
                        CriticalChart::Lengths => "lengths",
                        CriticalChart::LengthAngle => "length_angle",
                    },
                )
                .data("gradient", c.gradient)
                .line(format!("gradient: ({}, {})", c.gradient[0], c.gradient[1]))
                .field("one_sided", c.one_sided)
                .data("hessian_eigenvalues", c.hessian_eigenvalues)
                .line(format!(
                    "hessian eigenvalues: ({}, {}), signature (+{}, -{})",
                    c.hessian_eigenvalues[0], c.hessian_eigenvalues[1], c.signature.0, c.signature.1
                ))
                .data("signature", c.signature);
            if c.one_sided {
                r.diagnostics.push("one-sided stencil at the chart boundary".into());
            }
        }
        Command::Analysis(c) => analysis_cmd(c, ctl, &mut r)?,
        Command::Bounds(c) => bounds_cmd(c, ctl, &mut r)?,
        Command::Minimize(args) => minimize_cmd(args, ctl, &mut r)?,
        Command::Levelset(args) => levelset_cmd(args, ctl, &mut r)?,
        Command::Verify { fast } => {
            let opts = VerifyOptions {
                fast: *fast,
                ctl: *ctl,
                ..Default::default()
            };
            let start = Instant::now();
            let rows = run_all(&opts);
            let failed: Vec<usize> = rows.iter().filter(|x| !x.passed).map(|x| x.id).collect();
            for row in &rows {
                r.line(row.line());
            }
            let elapsed = start.elapsed().as_secs_f64();
            r.line(format!(
                "{} of {} criteria passed in {elapsed:.1}s",
                rows.len() - failed.len(),
                rows.len()
            ));
            if !failed.is_empty() {
                r.line(format!("failed criteria: {failed:?}"));
                r.code = EXIT_VERIFY_FAILED;
            }
            r.data("rows", &rows)
                .data("failed", &failed)
                .data("elapsed_seconds", elapsed);
        }
    }
    Ok(r)
}

fn lattice_cmd(c: &LatticeCmd, r: &mut Report) -> crate::Result<()> {
    match c {
        LatticeCmd::Make(b) => {
            let lat = BravaisLattice::new(b.len_u, b.len_v, b.angle_deg.to_radians())?;
            put_lattice(r, "lattice", &lat);
        }
        LatticeCmd::Reduce(b) => {
            let lat = BravaisLattice::reduce(b.len_u, b.len_v, b.angle_deg.to_radians())?;
            let unchanged = (lat.len_u() - b.len_u).abs() <= 1e-12 * b.len_u
                && (lat.len_v() - b.len_v).abs() <= 1e-12 * b.len_v
                && (lat.angle() - b.angle_deg.to_radians()).abs() <= 1e-12;
            put_lattice(r, "reduced", &lat);
            r.field("already_reduced", unchanged);
        }
        LatticeCmd::Form { lattice } => {
            let q = lattice.build()?.quadratic_form();
            r.line(format!("a = {}, b = {}, c = {}, disc = {}", q.a, q.b, q.c, q.disc));
            r.data("form", form_json(&q));
        }
        LatticeCmd::Scale { lattice, factor } => {
            let lat = lattice.build()?.scale(*factor)?;
            put_lattice(r, "lattice", &lat);
        }
        LatticeCmd::Triangular { area } => {
            let lat = BravaisLattice::triangular(*area)?;
            put_lattice(r, "lattice", &lat);
        }
        LatticeCmd::Chart { u, v, area } => {
            let lat = BravaisLattice::from_chart(&FixedAreaPoint::new(*u, *v, *area)?)?;
            put_lattice(r, "lattice", &lat);
        }
    }
    Ok(())
}

fn sums_cmd(c: &SumsCmd, ctl: &SumControl, r: &mut Report) -> crate::Result<()> {
    match c {
        SumsCmd::Theta { lattice, alpha } => {
            r.field("theta", theta(&lattice.build()?, *alpha, ctl)?);
        }
        SumsCmd::ThetaNormalized { a, b, c, alpha } => {
            let form = NormalizedForm::new(*a, *b, *c)?;
            let direct = theta_normalized(&form, *alpha, ctl)?;
            let dual = theta_normalized(&form, 1.0 / alpha, ctl)?;
            r.field("theta", direct)
                .field("theta_inverse", dual)
                .field("modular_residual", (dual - alpha * direct).abs() / (alpha * direct));
        }
        SumsCmd::Zeta { lattice, s, method } => {
            r.field("zeta", epstein_zeta(&lattice.build()?, *s, (*method).into(), ctl)?)
                .field("method", format!("{method:?}").to_lowercase());
        }
        SumsCmd::Gaussian { lattice, y } => {
            r.field("gaussian_sum", gaussian_sum(&lattice.build()?, *y, ctl)?)
                .field("theta_parameter", 1.0 / (8.0 * PI * y));
        }
        SumsCmd::K0 { x, laplace } => {
            let value = if *laplace {
                bessel_k0_laplace(*x, ctl)?
            } else {
                bessel_k0(*x, ctl)?
            };
            r.field("k0", value)
                .field("representation", if *laplace { "laplace" } else { "cosh" });
        }
    }
    Ok(())
}

fn energy_cmd(
    lat: &BravaisLattice,
    spec: &PotentialSpec,
    method: ZetaMethod,
    ctl: &SumControl,
    r: &mut Report,
) -> crate::Result<()> {
    put_lattice(r, "lattice", lat);
    match spec.kind {
        PotentialKind::LennardJones => {
            let b = lj_breakdown(lat, method, ctl)?;
            r.field("energy", b.energy)
                .field("zeta6", b.zeta6)
                .field("zeta12", b.zeta12);
        }
        PotentialKind::InversePowerPair => {
            let zn = epstein_zeta(lat, spec.n_exp, method, ctl)?;
            let zp = epstein_zeta(lat, spec.p_exp, method, ctl)?;
            r.field("energy", pair_energy(lat, spec, ctl)?)
                .field("zeta_n", zn)
                .field("zeta_p", zp);
        }
        PotentialKind::ThomasFermi => {
            r.field("energy", tf_energy(lat, ctl)?);
        }
    }
    Ok(())
}

fn analysis_cmd(c: &AnalysisCmd, ctl: &SumControl, r: &mut Report) -> crate::Result<()> {
    match c {
        AnalysisCmd::G { area, alpha } => {
            r.field("g", g_cert(*area, *alpha)?)
                .field("g_prime", crate::analysis::g_cert_derivative(*area, *alpha)?)
                .field("g_second", crate::analysis::g_cert_second_derivative(*area, *alpha)?);
        }
        AnalysisCmd::Ratio { u, v, exclusion } => {
            let e = ratio_function_detailed(&FixedAreaPoint::new(*u, *v, 1.0)?, *exclusion, ctl)?;
            r.field("ratio", e.value)
                .field("numerator", e.numerator)
                .field("denominator", e.denominator)
                .field("corner_distance", e.corner_distance);
            if e.near_singular {
                r.diagnostics.push(format!(
                    "point is within {} of the triangular corner; the value may lose accuracy",
                    100.0 * exclusion
                ));
            }
        }
        AnalysisCmd::RatioScan { step, exclusion } => {
            let s = ratio_infimum_scan(*step, *exclusion, ctl)?;
            r.field("u", s.point.len_u)
                .field("v", s.point.len_v)
                .field_ref("ratio", s.value, "ratio_minimum")
                .field("grid_u", s.grid_point.len_u)
                .field("grid_v", s.grid_point.len_v)
                .field("grid_ratio", s.grid_value)
                .field("grid_cells", s.grid_cells);
        }
        AnalysisCmd::Identity { lattice } => {
            let lat = lattice.build()?;
            let id = global_identity_check(&lat, ctl)?;
            r.field("zeta6", id.zeta6)
                .field("zeta12", id.zeta12)
                .field("relative_gap", id.relative_gap)
                .field("len_u_below_one", id.len_u_below_one)
                .field("len_v_at_most_one", id.len_v_at_most_one)
                .field("energy_residual", id.energy_residual);
        }
        AnalysisCmd::Riemann { lattice } => {
            let lat = lattice.build()?;
            let d = riemann_decomposition(&lat, ctl)?;
            debug_assert_eq!(d.constant, riemann_constant(lat.area())?);
            r.field("area", lat.area())
                .field("constant", d.constant)
                .field("integral", d.integral)
                .field("energy", d.energy)
                .field("residual", d.residual);
        }
    }
    Ok(())
}

fn bounds_cmd(c: &BoundsCmd, ctl: &SumControl, r: &mut Report) -> crate::Result<()> {
    match c {
        BoundsCmd::Threshold { area } => {
            r.field_ref("threshold", certificate_threshold(), "certificate_threshold");
            if let Some(a) = area {
                let rep = sufficient_condition(*a)?;
                r.field("area", *a)
                    .field("sufficient_ok", rep.sufficient_ok)
                    .field("g_min_sampled", rep.g_min_sampled)
                    .field("g_at_one", rep.g_at_one)
                    .field("g_prime_at_one", rep.g_prime_at_one)
                    .field("g_second_min_sampled", rep.g_second_min_sampled)
                    .field("samples", rep.details);
            }
        }
        BoundsCmd::Blanc => {
            let b = blanc_bound(ctl)?;
            r.field_ref("p", b.p_const, "blanc_p")
                .field_ref("q", b.q_const, "blanc_q")
                .field("zeta_ref", b.zeta_ref)
                .field("c", b.c_bound)
                .field("c_exceeds_0.74035", b.exceeds_reference);
            if !b.exceeds_reference {
                r.diagnostics.push(format!(
                    "c = {:.9} does not exceed the reference lower estimate 0.74035",
                    b.c_bound
                ));
            }
        }
        BoundsCmd::A0 => {
            let t = optimal_triangular_area(ctl)?;
            r.field_ref("area", t.area, "a0")
                .field_ref("length", t.length, "triangular_length")
                .field_ref("energy", t.energy, "energy_at_a0")
                .field("zeta6", t.zeta6)
                .field("zeta12", t.zeta12);
        }
        BoundsCmd::Crossover { lo, hi } => {
            let a = crossover_area(*lo, *hi, ctl)?;
            r.line(format!("crossover: {a} (reference interval 1.13 to 1.14)"));
            r.data("crossover", a);
        }
    }
    Ok(())
}

fn report_minimization(rep: &MinimizationReport, r: &mut Report) {
    put_lattice(r, "argmin", &rep.argmin);
    r.field("classification", rep.classification)
        .field("energy", rep.energy)
        .line(format!("chart: ({}, {})", rep.chart.len_u, rep.chart.len_v))
        .data("chart", [rep.chart.len_u, rep.chart.len_v])
        .line(format!(
            "grid best: ({}, {}) with energy {}",
            rep.grid_best.len_u, rep.grid_best.len_v, rep.grid_energy
        ))
        .data("grid_best", [rep.grid_best.len_u, rep.grid_best.len_v])
        .data("grid_energy", rep.grid_energy)
        .field("refine_iterations", rep.refine_iterations)
        .line(format!("search box: {:?}", rep.search_box))
        .data("search_box", rep.search_box);
    if let Some(c) = &rep.certificate {
        r.line(format!(
            "certificate: area^3 <= pi^3/120 is {} (threshold {}), sampled min g = {}",
            c.sufficient_ok, c.threshold, c.g_min_sampled
        ));
        r.data("certificate", c);
    }
    if let Some(id) = &rep.identity {
        r.line(format!(
            "zeta identity: |zeta12 - zeta6| / zeta6 = {:e}, E + zeta6 = {:e}, len_u < 1: {}, len_v <= 1: {}",
            id.relative_gap, id.energy_residual, id.len_u_below_one, id.len_v_at_most_one
        ));
        r.data("identity", id);
    }
}

fn minimize_cmd(args: &MinimizeArgs, ctl: &SumControl, r: &mut Report) -> crate::Result<()> {
    let spec = args.potential.spec()?;
    if args.global {
        if spec.kind != PotentialKind::LennardJones {
            return Err(Error::Configuration(
                "--global is only available for --potential lj".into(),
            ));
        }
        let rep = minimize_global(ctl)?;
        report_minimization(&rep, r);
        let a0 = optimal_triangular_area(ctl)?;
        r.diagnostics.push(format!(
            "observation: energy {:.8} vs optimal triangular lattice {:.8} (area {:.6}); its global optimality is conjectured, not proven",
            rep.energy, a0.energy, a0.area
        ));
        return Ok(());
    }
    let area = args.area.expect("clap enforces --area without --global");
    let window = args.window.as_ref().map(|w| ChartWindow {
        u_min: w[0],
        u_max: w[1],
        v_min: w[2],
        v_max: w[3],
    });
    let opts = FixedAreaOptions {
        grid_step: args.step,
        window,
        ..Default::default()
    };
    let rep = minimize_fixed_area_with(area, &spec, &opts, ctl)?;
    report_minimization(&rep, r);
    Ok(())
}

fn levelset_cmd(args: &LevelsetArgs, ctl: &SumControl, r: &mut Report) -> std::result::Result<(), Failure> {
    let objective = match args.objective {
        LevelsetObjectiveArg::Lj => LevelSetObjective::Energy(PotentialSpec::lennard_jones()),
        LevelsetObjectiveArg::Tf => LevelSetObjective::Energy(PotentialSpec::thomas_fermi()),
        LevelsetObjectiveArg::Ratio => LevelSetObjective::Ratio,
    };
    let grid = levelset(
        args.area,
        &objective,
        (args.u_min, args.u_max),
        (args.v_min, args.v_max),
        args.step,
        ctl,
    )?;
    grid.write_csv(&args.out).map_err(|e| Failure {
        err: format!("cannot write {}: {e}", args.out.display()),
        code: EXIT_IO,
    })?;
    let valid = grid.cells.iter().filter(|c| c.value.is_some()).count();
    r.field("out", args.out.display().to_string())
        .field("cells", grid.cells.len())
        .field("valid_cells", valid)
        .data("n_u", grid.n_u)
        .data("n_v", grid.n_v);
    if let Some(m) = grid.min_cell() {
        let value = m.value.expect("min cell is valid");
        r.line(format!("min: {value} at ({}, {})", m.u, m.v));
        r.data("min", json!({"u": m.u, "v": m.v, "value": value}));
    }
    if args.objective == LevelsetObjectiveArg::Ratio && (args.area - 1.0).abs() > 0.0 {
        r.diagnostics
            .push("the ratio objective is always evaluated on the unit-area chart; --area is ignored".into());
    }
    Ok(())
}
