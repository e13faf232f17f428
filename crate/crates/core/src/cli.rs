//! Command-line front end.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
//! 3 capacity exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{find_sink, wtt_witness};
use crate::assign::{assign_wtt, first_uncovered};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::form::GameForm;
use crate::generate::{random_form, random_single_player_form, random_wtt, DEFAULT_WTT_TRIES};
use crate::hardness::{
    decode, gen_min_outcome_nonassignable, rebuild, reduce_full4, reduce_partial3, ThreeCnf,
};
use crate::io::{
    read_assignment, read_form, read_layout, write_assignment, write_form, write_layout,
};
use crate::satenc::{emit_dimacs, encode, solve_with_budget, Method, DEFAULT_BRUTE_BUDGET_BITS};

pub const EXIT_POSITIVE: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gameform",
    version,
    about = "Separability of n-person game forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CellFormat {
    Dense,
    Sparse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Nonassignable,
    Random,
    RandomWtt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReduceMode {
    Partial3,
    Full4,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test weak total tightness; prints a violating 2×2 restriction if any.
    CheckWtt { file: PathBuf },
    /// Construct a feasible assignment for a WTT form.
    Assign {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Print the steps of the construction.
        #[arg(long)]
        trace: bool,
    },
    /// Decide assignability of any form.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "dpll")]
        method: String,
        /// Size limit for the brute method, in bits of assignment space.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET_BITS)]
        budget_bits: f64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check an assignment against a form.
    Verify { form: PathBuf, assignment: PathBuf },
    /// Two-person projection: the coalition becomes the row player.
    Project {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        coalition: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Emit the assignability CNF in DIMACS format.
    Encode {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a game form from a DIMACS 3-CNF.
    Reduce {
        cnf: PathBuf,
        #[arg(long, value_enum, default_value = "partial3")]
        mode: ReduceMode,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        layout: PathBuf,
        #[arg(long, value_enum)]
        format: Option<CellFormat>,
    },
    /// Read a satisfying valuation off an assignment of a reduced form.
    Decode {
        layout: PathBuf,
        assignment: PathBuf,
    },
    /// Generate a form.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        players: Option<usize>,
        /// Strategies per player, when --dims is not given.
        #[arg(long)]
        strategies: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long, default_value_t = 3)]
        outcomes: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_WTT_TRIES)]
        tries: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<CellFormat>,
    },
    /// Write a bundled example form.
    Fixture {
        /// Omit to list the available names.
        name: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Time the WTT test on growing forms and fit the growth exponent.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        players: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn load_form(path: &Path) -> Result<GameForm> {
    read_form(&read_text(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::Validation(m) => Error::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn emit(io: &mut Io, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", p.display()),
            ))
        }),
        None => io.out.write_all(text.as_bytes()).map_err(Error::Io),
    }
}

fn sparse_for(g: &GameForm, format: Option<CellFormat>) -> bool {
    match format {
        Some(CellFormat::Dense) => false,
        Some(CellFormat::Sparse) => true,
        None => !g.is_fully_defined(),
    }
}

macro_rules! say {
    ($io:expr, $($arg:tt)*) => {
        writeln!($io.out, $($arg)*).map_err(Error::Io)?
    };
}

macro_rules! warn {
    ($io:expr, $($arg:tt)*) => {
        writeln!($io.err, $($arg)*).map_err(Error::Io)?
    };
}

fn check_wtt(io: &mut Io, file: &Path) -> Result<u8> {
    let g = load_form(file)?;
    match wtt_witness(&g) {
        None => {
            say!(io, "WTT: yes");
            if let Some(h) = find_sink(&g)? {
                say!(io, "sink: player {} strategy {}", h.direction, h.index);
            } else {
                say!(io, "sink: none");
            }
            Ok(EXIT_POSITIVE)
        }
        Some(w) => {
            say!(io, "WTT: no");
            say!(io, "witness: {w}");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn assign(io: &mut Io, file: &Path, out: Option<&Path>, trace: bool) -> Result<u8> {
    let g = load_form(file)?;
    let cert = match assign_wtt(&g) {
        Ok(c) => c,
        Err(Error::NotWtt(w)) => {
            say!(io, "WTT: no");
            say!(io, "witness: {w}");
            warn!(
                io,
                "the form is not WTT; `gameform solve` decides assignability in general"
            );
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(e),
    };
    if let Some(x) = first_uncovered(&g, &cert.assignment)? {
        return Err(Error::Invariant(format!(
            "constructed assignment leaves {x:?} uncovered"
        )));
    }
    if trace {
        for step in &cert.trace {
            warn!(io, "{step}");
        }
    }
    emit(io, out, &write_assignment(&cert.assignment, g.alphabet()))?;
    Ok(EXIT_POSITIVE)
}

fn solve(io: &mut Io, file: &Path, method: &str, budget: f64, out: Option<&Path>) -> Result<u8> {
    let method: Method = method.parse()?;
    let g = load_form(file)?;
    match solve_with_budget(&g, method, budget)? {
        Some(a) => {
            warn!(io, "assignable ({method})");
            emit(io, out, &write_assignment(&a, g.alphabet()))?;
            Ok(EXIT_POSITIVE)
        }
        None => {
            say!(io, "not assignable ({method})");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn verify_cmd(io: &mut Io, form: &Path, assignment: &Path) -> Result<u8> {
    let g = load_form(form)?;
    let a = read_assignment(&read_text(assignment)?, &g)?;
    match first_uncovered(&g, &a)? {
        None => {
            say!(io, "feasible");
            Ok(EXIT_POSITIVE)
        }
        Some(x) => {
            say!(
                io,
                "infeasible: profile {x:?} with outcome {} is not covered",
                {
                    let idx = g.flat_index(&x)?;
                    g.label(idx).unwrap_or("?").to_string()
                }
            );
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn reduce(
    io: &mut Io,
    cnf: &Path,
    mode: ReduceMode,
    out: &Path,
    layout: &Path,
    format: Option<CellFormat>,
) -> Result<u8> {
    let phi = ThreeCnf::parse_dimacs(&read_text(cnf)?)?;
    let r = match mode {
        ReduceMode::Partial3 => reduce_partial3(&phi)?,
        ReduceMode::Full4 => reduce_full4(&phi)?,
    };
    emit(
        io,
        Some(out),
        &write_form(&r.form, sparse_for(&r.form, format)),
    )?;
    emit(io, Some(layout), &write_layout(&r.layout))?;
    say!(
        io,
        "{}: {} clause(s), {} gadget(s), dims {:?}, {} outcomes",
        r.layout.mode,
        phi.num_clauses(),
        r.layout.gadgets.len(),
        r.form.dims(),
        r.form.alphabet().len()
    );
    Ok(EXIT_POSITIVE)
}

fn decode_cmd(io: &mut Io, layout: &Path, assignment: &Path) -> Result<u8> {
    let layout = read_layout(&read_text(layout)?)?;
    let artifact = rebuild(&layout)?;
    let a = read_assignment(&read_text(assignment)?, &artifact.form)?;
    if first_uncovered(&artifact.form, &a)?.is_some() {
        say!(io, "assignment is not feasible for the reduced form");
        return Ok(EXIT_NEGATIVE);
    }
    let values = decode(&artifact, &a)?;
    let text: Vec<String> = values
        .iter()
        .enumerate()
        .map(|(v, &b)| format!("x{}={}", v + 1, u8::from(b)))
        .collect();
    say!(io, "{}", text.join(" "));
    let ok = layout.formula.evaluate(&values);
    say!(io, "formula satisfied: {}", if ok { "yes" } else { "no" });
    Ok(if ok { EXIT_POSITIVE } else { EXIT_NEGATIVE })
}

#[allow(clippy::too_many_arguments)]
fn gen(
    io: &mut Io,
    family: Family,
    players: Option<usize>,
    strategies: Option<usize>,
    dims: Option<Vec<usize>>,
    outcomes: usize,
    seed: Option<u64>,
    tries: usize,
    out: Option<&Path>,
    format: Option<CellFormat>,
) -> Result<u8> {
    let dims_for = |dims: Option<Vec<usize>>| -> Result<Vec<usize>> {
        let dims = match (dims, players, strategies) {
            (Some(d), _, _) => d,
            (None, Some(n), Some(m)) => vec![m; n],
            _ => {
                return Err(Error::argument(
                    "random families need --dims or --players with --strategies",
                ))
            }
        };
        if let Some(n) = players {
            if n != dims.len() {
                return Err(Error::argument(format!(
                    "--players {n} but --dims has {} entries",
                    dims.len()
                )));
            }
        }
        Ok(dims)
    };
    let seed_for = || seed.ok_or_else(|| Error::argument("--seed is required for random families"));
    let g = match family {
        Family::Nonassignable => {
            let n = players.ok_or_else(|| Error::argument("--players is required"))?;
            let m = strategies.ok_or_else(|| Error::argument("--strategies is required"))?;
            gen_min_outcome_nonassignable(n, m)?
        }
        Family::Random => random_form(seed_for()?, &dims_for(dims)?, outcomes)?,
        Family::RandomWtt => random_wtt(seed_for()?, &dims_for(dims)?, outcomes, tries)?,
    };
    emit(io, out, &write_form(&g, sparse_for(&g, format)))?;
    Ok(EXIT_POSITIVE)
}

/// Timings of the WTT test against the number of profiles.
#[derive(Clone, Debug)]
pub struct Scaling {
    /// `(profiles, seconds)` per measured size.
    pub points: Vec<(usize, f64)>,
    /// Least-squares slope of `log(seconds)` against `log(profiles)`.
    pub slope: f64,
}

/// Near-square `players`-person dims with about `p` profiles.
fn dims_near(p: usize, players: usize) -> Vec<usize> {
    let side = (p as f64).powf(1.0 / players as f64);
    let mut dims = vec![side.round().max(1.0) as usize; players];
    // nudge the last extent towards p
    let rest: usize = dims[..players - 1].iter().product();
    dims[players - 1] = ((p as f64 / rest as f64).round() as usize).max(1);
    dims
}

/// Times the full 2×2 scan on WTT forms whose outcome depends on player 0
/// only, so no early exit happens.
pub fn wtt_scaling(sizes: &[usize], players: usize, seed: u64) -> Result<Scaling> {
    if players == 0 || sizes.len() < 2 {
        return Err(Error::argument("need at least one player and two sizes"));
    }
    let mut points = Vec::new();
    for (i, &p) in sizes.iter().enumerate() {
        let dims = dims_near(p, players);
        let g = random_single_player_form(seed + i as u64, &dims, 4, 0)?;
        let mut best = f64::INFINITY;
        let start = Instant::now();
        let mut reps = 0;
        while reps < 3 || (start.elapsed().as_secs_f64() < 0.2 && reps < 10_000) {
            let t = Instant::now();
            let w = wtt_witness(&g);
            best = best.min(t.elapsed().as_secs_f64());
            if w.is_some() {
                return Err(Error::Invariant(
                    "single-player form reported non-WTT".into(),
                ));
            }
            reps += 1;
        }
        points.push((g.len(), best.max(1e-9)));
    }
    let xs: Vec<f64> = points.iter().map(|&(p, _)| (p as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(Scaling {
        points,
        slope: sxy / sxx,
    })
}

fn bench(io: &mut Io, sizes: &[usize], players: usize, seed: u64) -> Result<u8> {
    let s = wtt_scaling(sizes, players, seed)?;
    say!(io, "{:>10} {:>14}", "profiles", "seconds");
    for (p, t) in &s.points {
        say!(io, "{p:>10} {t:>14.6e}");
    }
    say!(io, "log-log slope: {:.3}", s.slope);
    Ok(EXIT_POSITIVE)
}

fn fixture(io: &mut Io, name: Option<&str>, out: Option<&Path>) -> Result<u8> {
    match name {
        None => {
            for n in fixtures::NAMES {
                say!(io, "{n}");
            }
        }
        Some(n) => {
            let g = fixtures::by_name(n)?;
            emit(io, out, &write_form(&g, sparse_for(&g, None)))?;
        }
    }
    Ok(EXIT_POSITIVE)
}

fn dispatch(io: &mut Io, cli: Cli) -> Result<u8> {
    match cli.command {
        Command::CheckWtt { file } => check_wtt(io, &file),
        Command::Assign { file, out, trace } => assign(io, &file, out.as_deref(), trace),
        Command::Solve {
            file,
            method,
            budget_bits,
            out,
        } => solve(io, &file, &method, budget_bits, out.as_deref()),
        Command::Verify { form, assignment } => verify_cmd(io, &form, &assignment),
        Command::Project {
            file,
            coalition,
            out,
        } => {
            let g = load_form(&file)?.project(&coalition)?;
            emit(io, out.as_deref(), &write_form(&g, sparse_for(&g, None)))?;
            Ok(EXIT_POSITIVE)
        }
        Command::Encode { file, out } => {
            let g = load_form(&file)?;
            emit(io, out.as_deref(), &emit_dimacs(&encode(&g)))?;
            Ok(EXIT_POSITIVE)
        }
        Command::Reduce {
            cnf,
            mode,
            out,
            layout,
            format,
        } => reduce(io, &cnf, mode, &out, &layout, format),
        Command::Decode { layout, assignment } => decode_cmd(io, &layout, &assignment),
        Command::Gen {
            family,
            players,
            strategies,
            dims,
            outcomes,
            seed,
            tries,
            out,
            format,
        } => gen(
            io,
            family,
            players,
            strategies,
            dims,
            outcomes,
            seed,
            tries,
            out.as_deref(),
            format,
        ),
        Command::Fixture { name, out } => fixture(io, name.as_deref(), out.as_deref()),
        Command::Bench {
            sizes,
            players,
            seed,
        } => bench(io, &sizes, players, seed),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) => EXIT_CAPACITY,
        _ => EXIT_INPUT,
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_POSITIVE
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&mut io, cli) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("gameform").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(call(&["check-wtt", "/nonexistent.json"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_POSITIVE);
    }

    #[test]
    fn fixture_listing() {
        let (code, out, _) = call(&["fixture"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "nosink-3d-1"));
    }

    #[test]
    fn dims_are_near_target() {
        assert_eq!(dims_near(100, 2), vec![10, 10]);
        assert_eq!(dims_near(10_000, 2), vec![100, 100]);
        let d = dims_near(1000, 3);
        assert_eq!(d.iter().product::<usize>(), 1000);
    }
}
