//! Monte Carlo site percolation on a square window.
//!
//! Trial `i` draws its occupancy from a ChaCha8 stream keyed by
//! `(rng_seed, i)`, so rows do not depend on how trials are spread over
//! workers.

use std::fmt::Write as _;
use std::thread;

use outerbound::{component, outermost_boundary, Adjacency, Cell, Grid, Window};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

pub const CSV_HEADER: &str =
    "trial,component_size,n_cycles,boundary_length,circuit_length,tree_depth";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub p: f64,
    pub window: u32,
    pub trials: u64,
    pub rng_seed: u64,
    pub workers: usize,
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(CliError::Usage(format!("p = {} is not in [0, 1]", self.p)));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        if self.window == 0 {
            return Err(CliError::Usage("window must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(CliError::Usage("workers must be at least 1".into()));
        }
        Ok(())
    }

    pub fn lattice_window(&self) -> Window {
        Window::sized(self.window, self.window).expect("validated window")
    }

    /// The centre cell `(N/2, N/2)`.
    pub fn seed(&self) -> Cell {
        let c = (self.window / 2) as i32;
        Cell::new(c, c)
    }
}

/// Statistics of the seed's star component in one trial. All zero when the
/// seed cell is vacant.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TrialStats {
    pub component_size: usize,
    pub n_cycles: usize,
    pub boundary_length: usize,
    pub circuit_length: usize,
    pub tree_depth: usize,
}

/// Occupancy of trial `trial`, sampled cell by cell in `(y, x)` order.
pub fn sample_grid(cfg: &SimulationConfig, trial: u64) -> Grid {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(trial);
    let window = cfg.lattice_window();
    let occupied = window.cells().map(|_| rng.gen_bool(cfg.p)).collect();
    Grid::from_occupancy(window, occupied).expect("one value per cell")
}

pub fn run_trial(cfg: &SimulationConfig, trial: u64) -> Result<TrialStats, CliError> {
    let grid = sample_grid(cfg, trial);
    let seed = cfg.seed();
    let comp = component(&grid, seed, Adjacency::Star).expect("seed inside window");
    let Some(comp) = comp else {
        return Ok(TrialStats::default());
    };
    let d =
        outermost_boundary(&comp).map_err(|e| CliError::Mismatch(format!("trial {trial}: {e}")))?;
    Ok(TrialStats {
        component_size: comp.len(),
        n_cycles: d.cycles.len(),
        boundary_length: d.edge_count(),
        circuit_length: d.circuit.len(),
        tree_depth: d.tree.depth_from(d.cell_to_cycle[&seed]),
    })
}

/// Runs every trial, spreading them round-robin over `cfg.workers` threads,
/// and returns the rows in trial order.
pub fn run(cfg: &SimulationConfig) -> Result<Vec<TrialStats>, CliError> {
    cfg.validate()?;
    let workers = cfg.workers.min(cfg.trials.try_into().unwrap_or(usize::MAX));
    let per_worker: Vec<Result<Vec<(u64, TrialStats)>, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    (w as u64..cfg.trials)
                        .step_by(workers)
                        .map(|t| run_trial(cfg, t).map(|stats| (t, stats)))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut rows = vec![TrialStats::default(); cfg.trials as usize];
    for batch in per_worker {
        for (t, stats) in batch? {
            rows[t as usize] = stats;
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[TrialStats]) -> String {
    let mut out = String::with_capacity(32 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        let _ = writeln!(
            out,
            "{i},{},{},{},{},{}",
            r.component_size, r.n_cycles, r.boundary_length, r.circuit_length, r.tree_depth
        );
    }
    out
}
