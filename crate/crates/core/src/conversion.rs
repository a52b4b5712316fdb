//! Jeu-de-taquin conversion between the small-bar order and the natural
//! order.
//!
//! Going to the natural order, barred letters are handled one at a time in
//! decreasing value (the lower copy first among equal letters). The chosen
//! letter slides south/east past every unbarred neighbour that is smaller
//! in the natural order, always trading places with the smaller of the two
//! candidates and preferring south on a tie. The reverse direction handles
//! barred letters in increasing value (upper copy first) and slides them
//! north/west past unbarred neighbours, trading with the larger candidate
//! and preferring north on a tie.

use crate::error::{Error, Result};
use crate::tableaux::{ColoredLetter, ColoredTableau, Order};

/// Snapshots of a conversion: the input, then one tableau after each slide
/// that actually moved its letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionTrace {
    pub steps: Vec<ColoredTableau>,
    pub moved_letters: Vec<ColoredLetter>,
}

impl ConversionTrace {
    /// Number of slides that moved a letter.
    pub fn len(&self) -> usize {
        self.moved_letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moved_letters.is_empty()
    }

    /// Text blocks separated by `-- step k: moved <letter>` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, step) in self.steps.iter().enumerate() {
            if k == 0 {
                out.push_str("-- step 0: input\n");
            } else {
                out.push_str(&format!("-- step {k}: moved {}\n", self.moved_letters[k - 1]));
            }
            out.push_str(&step.to_text());
        }
        out
    }
}

type Grid = Vec<Vec<ColoredLetter>>;

fn check_input(t: &ColoredTableau, order: Order) -> Result<()> {
    if !t.is_straight() {
        return Err(Error::Structure("conversion needs a straight shape".into()));
    }
    match t.first_violation_in(order) {
        None => Ok(()),
        Some(detail) => Err(Error::InvalidOrder { expected: order.name(), detail }),
    }
}

fn snapshot(grid: &Grid, order: Order) -> ColoredTableau {
    ColoredTableau::straight(grid.clone(), order).expect("slides preserve the shape")
}

fn failure(reason: String, trace: &ConversionTrace, grid: &Grid, order: Order) -> Error {
    let mut steps = trace.steps.clone();
    steps.push(snapshot(grid, order));
    Error::Conversion { reason, trace: Box::new(steps) }
}

fn barred_cells(grid: &Grid) -> Vec<(u8, usize, usize)> {
    let mut cells = Vec::new();
    for (r, row) in grid.iter().enumerate() {
        for (c, l) in row.iter().enumerate() {
            if l.barred {
                cells.push((l.value, r, c));
            }
        }
    }
    cells
}

/// One forward slide; returns whether the letter moved.
fn slide_forward(grid: &mut Grid, mut r: usize, mut c: usize) -> std::result::Result<bool, String> {
    let mut moved = false;
    loop {
        let here = grid[r][c];
        let east = grid[r].get(c + 1).copied().filter(|l| l.natural_key() < here.natural_key());
        let south = grid
            .get(r + 1)
            .and_then(|row| row.get(c))
            .copied()
            .filter(|l| l.natural_key() < here.natural_key());
        let (nr, nc) = match (east, south) {
            (None, None) => return Ok(moved),
            (Some(e), Some(s)) => {
                if s.natural_key() <= e.natural_key() {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
        };
        let other = grid[nr][nc];
        if other.barred {
            return Err(format!(
                "{here} at ({}, {}) would pass the barred letter {other}",
                r + 1,
                c + 1
            ));
        }
        grid[r][c] = other;
        grid[nr][nc] = here;
        r = nr;
        c = nc;
        moved = true;
    }
}

/// One backward slide; returns whether the letter moved.
fn slide_backward(grid: &mut Grid, mut r: usize, mut c: usize) -> std::result::Result<bool, String> {
    let mut moved = false;
    loop {
        let here = grid[r][c];
        let north = if r > 0 { grid[r - 1].get(c).copied() } else { None };
        let west = if c > 0 { Some(grid[r][c - 1]) } else { None };
        let north = north.filter(|l| !l.barred);
        let west = west.filter(|l| !l.barred);
        for l in north.iter().chain(west.iter()) {
            if l.natural_key() > here.natural_key() {
                return Err(format!(
                    "{here} at ({}, {}) sits below or right of the larger letter {l}",
                    r + 1,
                    c + 1
                ));
            }
        }
        let (nr, nc) = match (north, west) {
            (None, None) => return Ok(moved),
            (Some(n), Some(w)) => {
                if n.natural_key() >= w.natural_key() {
                    (r - 1, c)
                } else {
                    (r, c - 1)
                }
            }
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
        };
        grid[r][c] = grid[nr][nc];
        grid[nr][nc] = here;
        r = nr;
        c = nc;
        moved = true;
    }
}

fn convert(
    t: &ColoredTableau,
    from: Order,
    to: Order,
) -> Result<(ColoredTableau, ConversionTrace)> {
    check_input(t, from)?;
    let mut grid: Grid = t.rows().to_vec();
    let mut trace = ConversionTrace {
        steps: vec![t.clone()],
        moved_letters: Vec::new(),
    };

    let mut cells = barred_cells(&grid);
    match to {
        // decreasing value, lower copy first
        Order::Natural => cells.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1))),
        // increasing value, upper copy first
        Order::SmallBar => cells.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1))),
    }

    for (value, r, c) in cells {
        let moved = match to {
            Order::Natural => slide_forward(&mut grid, r, c),
            Order::SmallBar => slide_backward(&mut grid, r, c),
        }
        .map_err(|reason| failure(reason, &trace, &grid, to))?;
        if moved {
            trace.steps.push(snapshot(&grid, to));
            trace.moved_letters.push(ColoredLetter::barred(value));
        }
    }

    let result = snapshot(&grid, to);
    if let Some(v) = result.first_violation() {
        return Err(failure(
            format!("result is not {}-order semistandard: {v}", to.name()),
            &trace,
            &grid,
            to,
        ));
    }
    Ok((result, trace))
}

/// Small-bar order to natural order.
pub fn to_natural(t_small: &ColoredTableau) -> Result<(ColoredTableau, ConversionTrace)> {
    convert(t_small, Order::SmallBar, Order::Natural)
}

/// Natural order to small-bar order; undoes [`to_natural`] step by step.
pub fn to_small_bar(t_natural: &ColoredTableau) -> Result<(ColoredTableau, ConversionTrace)> {
    convert(t_natural, Order::Natural, Order::SmallBar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tableaux::content_profile;

    #[test]
    fn fig5_forward_chain() {
        let (right, trace) = to_natural(&fixtures::fig5_left()).unwrap();
        let texts: Vec<String> = trace.steps.iter().map(ColoredTableau::to_text).collect();
        assert_eq!(texts, fixtures::FIG5_CHAIN.to_vec());
        assert_eq!(right.to_text(), fixtures::FIG5_CHAIN[5]);
        let moved: Vec<String> = trace.moved_letters.iter().map(ToString::to_string).collect();
        assert_eq!(moved, ["4~", "3~", "3~", "2~", "2~"]);
    }

    #[test]
    fn fig5_backward_chain() {
        let (left, trace) = to_small_bar(&fixtures::fig5_right()).unwrap();
        assert_eq!(left.to_text(), fixtures::FIG5_CHAIN[0]);
        let texts: Vec<String> = trace.steps.iter().map(ColoredTableau::to_text).collect();
        let mut expected = fixtures::FIG5_CHAIN.to_vec();
        expected.reverse();
        assert_eq!(texts, expected);
    }

    #[test]
    fn fig6_natural_to_small_bar() {
        let (small, _) = to_small_bar(&fixtures::fig6_natural()).unwrap();
        assert_eq!(small.to_text(), fixtures::FIG6_SMALL_BAR);
        assert_eq!(content_profile(&small), content_profile(&fixtures::fig6_natural()));
    }

    #[test]
    fn degenerate_inputs_are_fixed_points() {
        let plain = ColoredTableau::parse("1 1 2\n2 3", Order::SmallBar).unwrap();
        let (out, trace) = to_natural(&plain).unwrap();
        assert_eq!(out.rows(), plain.rows());
        assert!(trace.is_empty());

        let barred = ColoredTableau::parse("1~ 2~\n1~ 3~\n2~", Order::SmallBar).unwrap();
        let (out, trace) = to_natural(&barred).unwrap();
        assert_eq!(out.rows(), barred.rows());
        assert!(trace.is_empty());

        let (out, trace) = to_small_bar(&ColoredTableau::empty(Order::Natural)).unwrap();
        assert_eq!(out.cell_count(), 0);
        assert!(trace.is_empty());
    }

    #[test]
    fn rejects_wrong_order() {
        let err = to_natural(&fixtures::fig5_right().with_order(Order::SmallBar)).unwrap_err();
        assert!(matches!(err, Error::InvalidOrder { .. }));
        let err = to_small_bar(&fixtures::fig5_left().with_order(Order::Natural)).unwrap_err();
        assert!(matches!(err, Error::InvalidOrder { .. }));
    }

    #[test]
    fn trace_text_has_step_headers() {
        let (_, trace) = to_natural(&fixtures::fig5_left()).unwrap();
        let text = trace.to_text();
        assert!(text.starts_with("-- step 0: input\n1~ 2~ 3~ 1\n"));
        assert!(text.contains("-- step 1: moved 4~\n"));
        assert!(text.contains("-- step 5: moved 2~\n"));
    }
}
