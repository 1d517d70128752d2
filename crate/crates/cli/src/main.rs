use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weyl_discrete::grids::{count_report, enumerate_grid, enumerate_labels};
use weyl_discrete::weylgroup::DEFAULT_GROUP_CEILING;
use weyl_discrete::{io, verify, Complex64, Discretization, Error, LieType, RootSystemData, SignHom, WeylGroup};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  command-line usage error
  3  unknown or inadmissible algebra
  4  sign homomorphism not defined for the algebra
  5  Weyl group larger than the group ceiling
  6  invalid input (malformed or incomplete sample/coefficient files, bad M)
  7  file system error
  8  a numerical check failed or counting methods disagree
  9  point outside the fundamental domain";

#[derive(Parser)]
#[command(name = "weyl-discrete", version, about = "Discrete Weyl-orbit function transforms on weight-lattice grids", after_help = EXIT_CODES)]
struct Cli {
    /// Refuse to enumerate Weyl groups with more elements than this
    #[arg(long, global = true, env = "ORBIT_GROUP_CEILING", default_value_t = DEFAULT_GROUP_CEILING)]
    group_ceiling: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Args)]
struct Algebra {
    /// Simple Lie algebra, e.g. C2, G2, F4
    #[arg(long)]
    algebra: String,
}

impl Algebra {
    fn lie_type(&self) -> Result<LieType, Error> {
        self.algebra.parse()
    }
}

#[derive(Args)]
struct Config {
    #[command(flatten)]
    algebra: Algebra,

    /// Sign homomorphism: id, e, s or l
    #[arg(long, default_value = "id")]
    sigma: SignHom,

    /// Grid density M
    #[arg(long = "M", visible_alias = "m")]
    m: u64,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data: Cartan matrix, marks, comarks, d, Coxeter numbers
    Info(Algebra),
    /// Grid points F^sigma_{P,M} with their epsilon weights
    Grid {
        #[command(flatten)]
        config: Config,
        #[command(flatten)]
        output: Output,
    },
    /// Labels Lambda^sigma_{P,M} with their stabilizer orders
    Labels {
        #[command(flatten)]
        config: Config,
        #[command(flatten)]
        output: Output,
    },
    /// Forward transform (samples CSV to coefficients JSON) or inverse
    /// (coefficients JSON to samples CSV)
    Transform {
        #[command(flatten)]
        config: Config,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "forward")]
        direction: Direction,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// S-matrix at level k, M = k + q^sigma
    Smatrix {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(long, default_value = "e")]
        sigma: SignHom,
        #[arg(long)]
        level: u64,
        /// Largest accepted unitarity and symmetry defect
        #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Orthogonality, exponential-sum, symmetry and round-trip checks
    Verify {
        #[command(flatten)]
        config: Config,
        #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e {
                Error::Classification(_) => 3,
                Error::UnsupportedHomomorphism { .. } => 4,
                Error::GroupTooLarge { .. } => 5,
                Error::Dimension { .. }
                | Error::GridMismatch(_)
                | Error::Input(_)
                | Error::Json(_)
                | Error::Csv(_) => 6,
                Error::Io(_) => 7,
                Error::Domain(_) => 9,
            },
            Failure::Check(_) => 8,
        }
    }
}

fn group(algebra: &Algebra, ceiling: u64) -> Result<WeylGroup, Error> {
    WeylGroup::with_ceiling(RootSystemData::build(algebra.lie_type()?), ceiling)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data") + "\n"
}

fn run(cli: Cli) -> Result<(), Failure> {
    let ceiling = cli.group_ceiling;
    match cli.command {
        Command::Info(algebra) => {
            let rs = RootSystemData::build(algebra.lie_type()?);
            emit(None, &json_text(&serde_json::to_value(&rs).map_err(Error::from)?))?;
        }
        Command::Grid { config, output } => listing(&config, &output, ceiling, false)?,
        Command::Labels { config, output } => listing(&config, &output, ceiling, true)?,
        Command::Transform {
            config,
            input,
            direction,
            out,
        } => {
            let g = group(&config.algebra, ceiling)?;
            let disc = Discretization::new(&g, config.sigma, config.m)?;
            let text = fs::read_to_string(&input).map_err(Error::from)?;
            let residual = match direction {
                Direction::Forward => {
                    let f = io::read_samples_csv(&disc, text.as_bytes())?;
                    let c = disc.forward(&f)?;
                    emit(out.as_deref(), &json_text(&io::coefficients_json(&disc, &c)))?;
                    let back = disc.synthesize(&c)?;
                    max_relative(&f.values, &back.values)
                }
                Direction::Inverse => {
                    let c = io::read_coefficients_json(&disc, &text)?;
                    let f = disc.synthesize(&c)?;
                    emit(out.as_deref(), &io::write_samples_csv(&disc, &f)?)?;
                    let again = disc.forward(&f)?;
                    max_relative(&c.coeffs, &again.coeffs)
                }
            };
            eprintln!("round-trip residual: {residual:e}");
        }
        Command::Smatrix {
            algebra,
            sigma,
            level,
            tol,
            output,
        } => {
            let g = group(&algebra, ceiling)?;
            let s = weyl_discrete::build_s_matrix(&g, sigma, level)?;
            let text = match output.format {
                Format::Json => json_text(&s.to_json()),
                Format::Csv => s.to_csv(),
            };
            emit(output.out.as_deref(), &text)?;
            eprintln!(
                "unitarity defect: {:e}\nsymmetry defect: {:e}",
                s.unitarity_defect, s.symmetry_defect
            );
            if s.unitarity_defect > tol || s.symmetry_defect > tol {
                return Err(Failure::Check(format!("S-matrix defects exceed tolerance {tol:e}")));
            }
        }
        Command::Verify { config, tol, out } => {
            let g = group(&config.algebra, ceiling)?;
            let report = verify::run(&g, config.sigma, config.m, tol)?;
            let v = serde_json::to_value(&report).map_err(Error::from)?;
            emit(out.as_deref(), &json_text(&v))?;
            if !report.passed {
                let names: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name)
                    .collect();
                return Err(Failure::Check(format!("failed checks: {}", names.join(", "))));
            }
        }
    }
    Ok(())
}

fn listing(config: &Config, output: &Output, ceiling: u64, labels: bool) -> Result<(), Failure> {
    let g = group(&config.algebra, ceiling)?;
    let rank = g.root_system().rank();
    let counts = count_report(&g, config.sigma, config.m)?;
    let text = if labels {
        let ls = enumerate_labels(&g, config.sigma, config.m)?;
        match output.format {
            Format::Json => json_text(&io::labels_json(&ls, &counts)),
            Format::Csv => io::labels_csv(&ls, rank),
        }
    } else {
        let ps = enumerate_grid(&g, config.sigma, config.m)?;
        match output.format {
            Format::Json => json_text(&io::grid_json(&ps, &counts)),
            Format::Csv => io::grid_csv(&ps, rank),
        }
    };
    emit(output.out.as_deref(), &text)?;
    if !counts.consistent() {
        return Err(Failure::Check(format!(
            "counting methods disagree: enumerated {}, dynamic programming {}, closed form {:?}",
            counts.enumerated, counts.dp_count, counts.closed_form
        )));
    }
    Ok(())
}

fn max_relative(a: &[Complex64], b: &[Complex64]) -> f64 {
    let scale = a.iter().map(|v| v.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm() / scale)
        .fold(0.0, f64::max)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Lib(e) => e.to_string(),
                Failure::Check(m) => m.clone(),
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
