//! Command-line plumbing for the `outerbound` library: grid files, JSON and
//! picture output, oracle checks and percolation runs.

pub mod check;
pub mod gridfile;
pub mod json;
pub mod render;
pub mod simulate;

use outerbound::{Cell, Grid, Window};

/// Failure of a subcommand, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

/// Side of the window that `--config-index` decodes into.
pub const CONFIG_WINDOW: u32 = 4;

/// Decodes a configuration index as an occupancy bitmask over a `side`×`side`
/// window, bit `i` standing for [`Window::cell_at`]`(i)` (row-major, bottom
/// row first). The seed is the corner cell `(0, 0)`.
pub fn config_grid(index: u64, side: u32) -> Result<(Grid, Cell), CliError> {
    let window = Window::sized(side, side).map_err(|e| CliError::Usage(e.to_string()))?;
    if window.len() < 64 && index >> window.len() != 0 {
        return Err(CliError::Usage(format!(
            "config index {index} does not fit a {side}x{side} window"
        )));
    }
    let grid = Grid::from_bitmask(window, index).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((grid, Cell::new(0, 0)))
}
