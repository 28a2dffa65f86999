use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use outerbound::{component, merge, merge_invariants_check, outermost_boundary, plus_outermost};
use outerbound::{Adjacency, Cell, Component, Grid};
use outerbound_cli::check::{run_check, CheckOptions};
use outerbound_cli::json::{merge_json, parse_cycle, CycleJson, DecompositionJson};
use outerbound_cli::render::{ascii, svg, SvgOptions};
use outerbound_cli::simulate::{self, SimulationConfig};
use outerbound_cli::{config_grid, gridfile, CliError, CONFIG_WINDOW};

/// Outermost boundaries of star- and plus-connected cell clusters.
#[derive(Debug, Parser)]
#[command(name = "outerbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Outer boundary decomposition of the seed's star component.
    Boundary(BoundaryArgs),
    /// Outer cycle of the seed's plus component.
    PlusBoundary(BoundaryArgs),
    /// Merge two cycles given as JSON files and print the result with its trace.
    Merge {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
    },
    /// Compare the computed boundary against the oracles.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Also enumerate every cycle of the corner graph.
        #[arg(long)]
        exhaustive_oracle: bool,
        /// Give up enumerating after this many cycles.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Percolation statistics of the centre cell's star component, as CSV.
    Simulate {
        #[arg(long)]
        p: f64,
        /// Side of the square window.
        #[arg(long)]
        window: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        rng_seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Grid text file.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Occupancy bitmask of a square window, bit i for the i-th cell in row-major order from the bottom row.
    #[arg(long)]
    config_index: Option<u64>,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    /// Window side for --config-index.
    #[arg(long, default_value_t = CONFIG_WINDOW)]
    window: u32,
    /// Seed cell as `x,y`, overriding the grid file's origin.
    #[arg(long, value_parser = parse_seed, allow_hyphen_values = true)]
    seed: Option<Cell>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Ascii,
}

#[derive(Debug, Args)]
struct BoundaryArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Pixels per unit square in SVG output.
    #[arg(long, default_value_t = 20.0)]
    scale: f64,
    /// Draw the outer circuit in SVG output.
    #[arg(long)]
    circuit: bool,
}

fn parse_seed(s: &str) -> Result<Cell, String> {
    let (x, y) = s.split_once(',').ok_or("expected `x,y`")?;
    let parse = |v: &str| v.trim().parse::<i32>().map_err(|e| format!("`{v}`: {e}"));
    Ok(Cell::new(parse(x)?, parse(y)?))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load(input: &InputArgs) -> Result<(Grid, Cell), CliError> {
    let (grid, origin) = match (&input.source.grid, input.source.config_index) {
        (Some(path), _) => {
            let f = gridfile::parse(&read(path)?)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            (f.grid, f.seed)
        }
        (None, Some(i)) => config_grid(i, input.window)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let seed = input.seed.unwrap_or(origin);
    if !grid.window().contains(seed) {
        return Err(CliError::Usage(format!(
            "seed {seed} lies outside the grid"
        )));
    }
    Ok((grid, seed))
}

fn seed_component(grid: &Grid, seed: Cell, kind: Adjacency) -> Component {
    component(grid, seed, kind)
        .expect("seed checked against window")
        .unwrap_or_else(|| Component::from_cells(Default::default(), kind, seed))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

fn boundary(args: &BoundaryArgs, plus: bool) -> Result<String, CliError> {
    let (grid, seed) = load(&args.input)?;
    let kind = if plus {
        Adjacency::Plus
    } else {
        Adjacency::Star
    };
    let comp = seed_component(&grid, seed, kind);
    let mismatch = |e: outerbound::BoundaryError| CliError::Mismatch(e.to_string());
    let (cycles, circuit, json) = if plus {
        let cycles = if comp.is_empty() {
            Vec::new()
        } else {
            vec![plus_outermost(&comp).map_err(mismatch)?]
        };
        let json = match cycles.first() {
            Some(c) => to_json(&CycleJson::from(c)),
            None => to_json(&serde_json::Value::Null),
        };
        (cycles, None, json)
    } else {
        let d = outermost_boundary(&comp).map_err(mismatch)?;
        let json = to_json(&DecompositionJson::from(&d));
        (d.cycles, Some(d.circuit), json)
    };
    Ok(match args.format {
        Format::Json => json,
        Format::Ascii => ascii(&grid, &comp, &cycles),
        Format::Svg => {
            if !(args.scale.is_finite() && args.scale > 0.0) {
                return Err(CliError::Usage(format!(
                    "scale {} must be positive",
                    args.scale
                )));
            }
            let circuit = circuit.as_ref().filter(|_| args.circuit);
            svg(
                &grid,
                &comp,
                &cycles,
                circuit,
                SvgOptions { scale: args.scale },
            )
        }
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Boundary(args) => boundary(&args, false),
        Command::PlusBoundary(args) => boundary(&args, true),
        Command::Merge { c1, c2 } => {
            let load_cycle = |p: &Path| {
                parse_cycle(&read(p)?).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))
            };
            let (c1, c2) = (load_cycle(&c1)?, load_cycle(&c2)?);
            let (result, trace) = merge(&c1, &c2).map_err(|e| CliError::Usage(e.to_string()))?;
            let report = merge_invariants_check(&c1, &c2, &result, &trace);
            let text = to_json(&merge_json(&result, &trace, &report));
            if !report.all_passed() {
                print!("{text}");
                let failed: Vec<_> = report.failures().collect();
                return Err(CliError::Mismatch(format!(
                    "merge invariants failed: {failed:?}"
                )));
            }
            Ok(text)
        }
        Command::Check {
            input,
            exhaustive_oracle,
            cap,
        } => {
            let (grid, seed) = load(&input)?;
            let outcome = run_check(
                &grid,
                seed,
                CheckOptions {
                    exhaustive_oracle,
                    cap,
                },
            )?;
            if outcome.failed() {
                print!("{outcome}");
                return Err(CliError::Mismatch("some checks failed".into()));
            }
            Ok(outcome.to_string())
        }
        Command::Simulate {
            p,
            window,
            trials,
            rng_seed,
            out,
            workers,
        } => {
            let cfg = SimulationConfig {
                p,
                window,
                trials,
                rng_seed,
                workers,
            };
            let rows = simulate::run(&cfg)?;
            fs::write(&out, simulate::to_csv(&rows))?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
