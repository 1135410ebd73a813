//! Command implementations for `rchi`. Each command renders its full output
//! to a string so it can be tested without spawning a process.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riordan_chi::fps::{format_coefficient, parse_coefficient};
use riordan_chi::simplicial::random_complex;
use riordan_chi::subdivision::{self, StirlingKind, StirlingTable};
use riordan_chi::verify::{self, check_eigenspace, normalize};
use riordan_chi::{expr, Complex, Error, ExactMatrix, Result, RiordanPair, Series};

pub const DEFAULT_PRECISION: usize = 32;

#[derive(Debug, Parser)]
#[command(
    name = "rchi",
    version,
    about = "Exact Riordan-group and barycentric-subdivision computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate and manipulate power series.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Riordan matrices T(beta|alpha): action, product, inverse, entries.
    #[command(subcommand)]
    Riordan(RiordanCommand),
    /// Table of Stirling numbers.
    Stirling {
        #[arg(long, value_enum, default_value = "second")]
        kind: Kind,
        /// Largest n in the table.
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Leading window of the subdivision matrix B or its factors, or its
    /// action on a column series with --apply.
    Bmatrix {
        /// Window index m; the output is (m+1)x(m+1).
        #[arg(long, required_unless_present = "apply")]
        size: Option<usize>,
        #[arg(long, value_enum, default_value = "b")]
        which: Which,
        #[arg(long, conflicts_with = "size", allow_hyphen_values = true)]
        apply: Option<String>,
        #[command(flatten)]
        prec: Precision,
        #[arg(long)]
        json: bool,
    },
    /// Simplicial complexes read from {"maximal": [[...], ...]}.
    #[command(subcommand)]
    Complex(ComplexCommand),
    /// Uniqueness and invariance checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Which {
    B,
    S,
    D,
    SInverse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Named {
    Pascal,
    F,
    Identity,
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Number of series coefficients to compute.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub prec: usize,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Print the coefficients of an expression such as "1/(1+x)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        prec: Precision,
        /// Print {"coeffs": [...], "precision": N} instead of a list.
        #[arg(long, conflicts_with = "poly")]
        json: bool,
        /// Print as a polynomial expression.
        #[arg(long)]
        poly: bool,
    },
    /// Compose OUTER(INNER(x)); INNER needs a zero constant term.
    Compose {
        #[arg(allow_hyphen_values = true)]
        outer: String,
        #[arg(allow_hyphen_values = true)]
        inner: String,
        #[command(flatten)]
        prec: Precision,
    },
    /// Compositional inverse of a series of valuation one.
    Revert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        prec: Precision,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// A named matrix instead of --beta/--alpha.
    #[arg(long, value_enum, conflicts_with_all = ["beta", "alpha"])]
    pub named: Option<Named>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
}

impl PairArgs {
    fn build(&self, precision: usize) -> Result<RiordanPair> {
        match self.named {
            Some(Named::Pascal) => Ok(RiordanPair::pascal(precision)),
            Some(Named::F) => Ok(RiordanPair::f_matrix(precision)),
            Some(Named::Identity) => Ok(RiordanPair::identity(precision)),
            None => RiordanPair::new(
                read_series(&self.beta, precision)?,
                read_series(&self.alpha, precision)?,
            ),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum RiordanCommand {
    /// Apply T(beta|alpha) to a series: (beta/alpha) * g(x/alpha).
    Apply {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        #[command(flatten)]
        prec: Precision,
    },
    /// Group product T(beta|alpha) T(beta2|alpha2).
    Mul {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        beta2: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha2: String,
        #[command(flatten)]
        prec: Precision,
        /// Print the product's (m+1)x(m+1) window instead of its pair.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Group inverse.
    Inv {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        prec: Precision,
        #[arg(long)]
        json: bool,
    },
    /// A single matrix entry.
    Entry {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
        #[command(flatten)]
        prec: Precision,
    },
    /// Leading (m+1)x(m+1) window of the matrix.
    Matrix {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct ComplexSource {
    /// JSON file with {"maximal": [[...], ...]}.
    #[arg(long, conflicts_with = "maximal")]
    pub file: Option<PathBuf>,
    /// Inline maximal faces as a JSON array, e.g. '[[0,1,2],[2,3]]'.
    #[arg(long)]
    pub maximal: Option<String>,
}

impl ComplexSource {
    fn load(&self) -> Result<Complex> {
        match (&self.file, &self.maximal) {
            (Some(path), _) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
                Complex::from_json(&text)
            }
            (None, Some(inline)) => Complex::from_json(&format!("{{\"maximal\":{inline}}}")),
            (None, None) => Err(Error::Format("give --file or --maximal".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ComplexCommand {
    /// Print the f-vector.
    Fvec {
        #[command(flatten)]
        source: ComplexSource,
    },
    /// Print the Euler characteristic, or sum_k g_k f_k with --weights.
    Chi {
        #[command(flatten)]
        source: ComplexSource,
        /// Weight series expression g.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Barycentric subdivision, written in the same JSON format.
    Sd {
        #[command(flatten)]
        source: ComplexSource,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// A seeded random complex.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        vertices: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Eigenspace of B_m for eigenvalue 1, for every window m.
    Eigen {
        #[arg(long, default_value_t = 20)]
        max_window: usize,
    },
    /// Weights constant on all simplices: F^-1 applied to k/(1-x).
    Uniqueness {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[command(flatten)]
        prec: Precision,
        /// Also solve for all simplex-constant weights on this window.
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// Whether a weight series is unchanged by B.
    Sdinv {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        prec: Precision,
    },
    /// Euler characteristic of iterated subdivisions, counted and via f B^k.
    Report {
        #[command(flatten)]
        source: ComplexSource,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
    },
}

/// What a command printed and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            success: true,
        }
    }
}

/// Reads a series given either as an expression or as a coefficient list
/// such as "[1, -1/2, 3]"; a list keeps its own precision.
pub fn read_series(text: &str, precision: usize) -> Result<Series> {
    let trimmed = text.trim();
    match trimmed.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        Some(inner) => {
            let coeffs = inner
                .split(',')
                .map(|c| parse_coefficient(c.trim()))
                .collect::<Result<Vec<_>>>()?;
            Series::from_coeffs(coeffs)
        }
        None => expr::eval_str(trimmed, precision),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn matrix_text(m: &ExactMatrix, as_json: bool) -> String {
    if as_json {
        json(m)
    } else {
        m.to_string().trim_end().to_string()
    }
}

fn pair_text(t: &RiordanPair, as_json: bool) -> String {
    if as_json {
        json(t)
    } else {
        format!("beta={}\nalpha={}", t.beta(), t.alpha())
    }
}

fn ints<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn run(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Series(cmd) => series(cmd),
        Command::Riordan(cmd) => riordan(cmd),
        Command::Stirling { kind, max } => {
            let kind = match kind {
                Kind::First => StirlingKind::First,
                Kind::Second => StirlingKind::Second,
            };
            let table = StirlingTable::new(kind, max);
            let lines: Vec<String> = (0..=max)
                .map(|n| {
                    table
                        .row(n)
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            Ok(Output::ok(lines.join("\n")))
        }
        Command::Bmatrix {
            size,
            which,
            apply,
            prec,
            json: as_json,
        } => {
            let window = |m: usize| match which {
                Which::B => subdivision::matrix_b(m),
                Which::S => subdivision::matrix_s(m),
                Which::D => subdivision::matrix_d(m),
                Which::SInverse => subdivision::matrix_s_inverse(m),
            };
            match (size, apply) {
                (_, Some(g)) => {
                    let g = read_series(&g, prec.prec)?;
                    let image = window(g.precision() - 1).apply_to_series(&g)?;
                    Ok(Output::ok(if as_json {
                        json(&image)
                    } else {
                        image.to_string()
                    }))
                }
                (Some(m), None) => Ok(Output::ok(matrix_text(&window(m), as_json))),
                (None, None) => Err(Error::Format("give --size or --apply".into())),
            }
        }
        Command::Complex(cmd) => complex(cmd),
        Command::Verify(cmd) => verify(cmd),
    }
}

fn series(cmd: SeriesCommand) -> Result<Output> {
    match cmd {
        SeriesCommand::Eval {
            expr,
            prec,
            json: as_json,
            poly,
        } => {
            let s = read_series(&expr, prec.prec)?;
            let text = if as_json {
                json(&s)
            } else if poly {
                s.to_polynomial_string()
            } else {
                s.to_string()
            };
            Ok(Output::ok(text))
        }
        SeriesCommand::Compose { outer, inner, prec } => {
            let f = read_series(&outer, prec.prec)?;
            let g = read_series(&inner, prec.prec)?;
            Ok(Output::ok(f.compose(&g)?.to_string()))
        }
        SeriesCommand::Revert { expr, prec } => Ok(Output::ok(
            read_series(&expr, prec.prec)?.comp_inverse()?.to_string(),
        )),
    }
}

fn riordan(cmd: RiordanCommand) -> Result<Output> {
    match cmd {
        RiordanCommand::Apply { pair, series, prec } => {
            let t = pair.build(prec.prec)?;
            let g = read_series(&series, prec.prec)?;
            Ok(Output::ok(t.apply(&g).to_string()))
        }
        RiordanCommand::Mul {
            pair,
            beta2,
            alpha2,
            prec,
            size,
            json: as_json,
        } => {
            let n = size.map_or(prec.prec, |m| prec.prec.max(m + 1));
            let t1 = pair.build(n)?;
            let t2 = RiordanPair::new(read_series(&beta2, n)?, read_series(&alpha2, n)?)?;
            let product = t1.multiply(&t2);
            match size {
                Some(m) => Ok(Output::ok(matrix_text(&product.to_matrix(m)?, as_json))),
                None => Ok(Output::ok(pair_text(&product, as_json))),
            }
        }
        RiordanCommand::Inv {
            pair,
            prec,
            json: as_json,
        } => Ok(Output::ok(pair_text(
            &pair.build(prec.prec)?.inverse(),
            as_json,
        ))),
        RiordanCommand::Entry {
            pair,
            row,
            col,
            prec,
        } => {
            let t = pair.build(prec.prec.max(row + 1).max(col + 1))?;
            Ok(Output::ok(format_coefficient(&t.entry(row, col)?)))
        }
        RiordanCommand::Matrix {
            pair,
            size,
            json: as_json,
        } => {
            let t = pair.build(size + 1)?;
            Ok(Output::ok(matrix_text(&t.to_matrix(size)?, as_json)))
        }
    }
}

fn complex(cmd: ComplexCommand) -> Result<Output> {
    match cmd {
        ComplexCommand::Fvec { source } => Ok(Output::ok(ints(&source.load()?.f_vector()))),
        ComplexCommand::Chi { source, weights } => {
            let c = source.load()?;
            match weights {
                None => Ok(Output::ok(c.chi().to_string())),
                Some(w) => {
                    let g = read_series(&w, c.dimension() + 1)?;
                    Ok(Output::ok(format_coefficient(&c.chi_weighted(&g)?)))
                }
            }
        }
        ComplexCommand::Sd { source, times } => {
            Ok(Output::ok(source.load()?.iterate_sd(times)?.to_json()))
        }
        ComplexCommand::Random { seed, vertices } => {
            if !(1..=16).contains(&vertices) {
                return Err(Error::Format("--vertices must be between 1 and 16".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Output::ok(random_complex(&mut rng, vertices).to_json()))
        }
    }
}

fn verify(cmd: VerifyCommand) -> Result<Output> {
    match cmd {
        VerifyCommand::Eigen { max_window } => {
            let checks: Vec<_> = (0..=max_window).map(check_eigenspace).collect();
            let success = checks.iter().all(|c| c.pass);
            let lines: Vec<String> = checks.iter().map(ToString::to_string).collect();
            Ok(Output {
                text: lines.join("\n"),
                success,
            })
        }
        VerifyCommand::Uniqueness { k, prec, window } => {
            let k = parse_coefficient(&k)?;
            let n = prec.prec;
            let got = verify::homotopy_unique(&k, n);
            let expected = Series::geometric(&riordan_chi::fps::int(-1), n).scale(&k);
            let series_ok = got == expected && got.precision() == n;

            let weights = verify::simplex_constant_weights(window);
            let alternating =
                Series::geometric(&riordan_chi::fps::int(-1), window + 1).into_coeffs();
            let window_ok = weights.dimension() == 1 && normalize(&weights.basis[0]) == alternating;
            let text = format!(
                "k={} prec={} weights={} {}\nwindow m={} dim={} {}",
                format_coefficient(&k),
                n,
                got,
                if series_ok { "pass" } else { "FAIL" },
                window,
                weights.dimension(),
                if window_ok { "pass" } else { "FAIL" },
            );
            Ok(Output {
                text,
                success: series_ok && window_ok,
            })
        }
        VerifyCommand::Sdinv { expr, prec } => {
            let g = read_series(&expr, prec.prec)?;
            let outcome = verify::check_sd_invariant(&g);
            let text = match outcome.first_difference {
                None => "invariant=true".to_string(),
                Some(i) => format!("invariant=false first_difference={i}"),
            };
            Ok(Output::ok(text))
        }
        VerifyCommand::Report { source, kmax } => {
            let report = verify::chi_sd_report(&source.load()?, kmax)?;
            Ok(Output {
                text: report.to_string(),
                success: report.consistent(),
            })
        }
    }
}
