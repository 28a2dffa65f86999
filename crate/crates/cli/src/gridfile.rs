//! Text grid files.
//!
//! ```text
//! origin: 1 0
//! .#.
//! ##.
//! ```
//!
//! The header gives the text column and row (both from 0, row 0 on top) of
//! the seed cell, which becomes cell `(0, 0)`. Each following line is one row
//! of `#` (occupied) and `.` (vacant), the top line holding the highest `y`.

use std::fmt::Write as _;

use outerbound::{Cell, Grid, Window};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFile {
    pub grid: Grid,
    pub seed: Cell,
}

pub fn parse(text: &str) -> Result<GridFile, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let rest = header
        .strip_prefix("origin:")
        .ok_or_else(|| err(1, 1, "expected header `origin: <column> <row>`"))?;
    let fields: Vec<&str> = rest.split_whitespace().collect();
    let [col, row] = fields[..] else {
        return Err(err(1, 8, "header needs exactly two integers"));
    };
    let parse_index = |s: &str| {
        s.parse::<usize>().map_err(|_| {
            err(
                1,
                header.find(s).map_or(1, |i| i + 1),
                format!("`{s}` is not a non-negative integer"),
            )
        })
    };
    let (origin_col, origin_row) = (parse_index(col)?, parse_index(row)?);

    let mut rows: Vec<Vec<bool>> = Vec::new();
    for (i, line) in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let mut cells = Vec::with_capacity(line.len());
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(true),
                '.' => cells.push(false),
                other => return Err(err(i + 1, j + 1, format!("unexpected character `{other}`"))),
            }
        }
        if let Some(first) = rows.first() {
            if first.len() != cells.len() {
                return Err(err(
                    i + 1,
                    cells.len().min(first.len()) + 1,
                    format!("row has {} cells, expected {}", cells.len(), first.len()),
                ));
            }
        }
        rows.push(cells);
    }
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    if height == 0 || width == 0 {
        return Err(err(2, 1, "grid has no cells"));
    }
    if origin_col >= width || origin_row >= height {
        return Err(err(
            1,
            1,
            format!("origin ({origin_col}, {origin_row}) lies outside the {width}x{height} grid"),
        ));
    }
    let (oc, or) = (origin_col as i32, origin_row as i32);
    let window = Window::new(-oc, width as i32 - 1 - oc, or - (height as i32 - 1), or)
        .expect("nonempty window");
    let mut grid = Grid::vacant(window);
    for (r, row) in rows.iter().enumerate() {
        for (c, &occupied) in row.iter().enumerate() {
            let cell = Cell::new(c as i32 - oc, or - r as i32);
            grid.set(cell, occupied).expect("cell inside window");
        }
    }
    Ok(GridFile {
        grid,
        seed: Cell::new(0, 0),
    })
}

/// Writes a grid with `seed` as the origin cell.
pub fn format(grid: &Grid, seed: Cell) -> String {
    let w = grid.window();
    let mut out = String::new();
    let _ = writeln!(out, "origin: {} {}", seed.x - w.x_min, w.y_max - seed.y);
    for y in (w.y_min..=w.y_max).rev() {
        for x in w.x_min..=w.x_max {
            out.push(if grid.is_occupied(Cell::new(x, y)) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}

/// Re-centres a grid so that `seed` becomes the origin cell.
pub fn recentre(grid: &Grid, seed: Cell) -> GridFile {
    parse(&format(grid, seed)).expect("formatted grids parse")
}
