use std::collections::HashSet;
use std::fmt;

use crate::bbw::{GrassmannSpace, HomogeneousBundle};
use crate::error::{Error, Result};
use crate::ulrich::FactorizationPair;
use crate::weights::GlWeight;

/// A filling of the `(n-k) × (k+1)` grid by the integers `1..=(k+1)(n-k)`.
///
/// Columns are numbered `1..=n-k` from the left and rows `1..=k+1` from the
/// bottom. Row `r` carries the weight entry `b_{k+2-r}`, so
/// [`BlockGrid::t`] addresses cells by `(i, j)` with `j` the index into `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGrid {
    space: GrassmannSpace,
    /// row-major, bottom row first
    cells: Vec<usize>,
}

impl BlockGrid {
    /// Builds a grid from explicit rows, bottom row first.
    pub fn from_rows(space: GrassmannSpace, rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = space.sub_rank();
        if rows.len() != space.quotient_rank() || rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidPair(format!(
                "grid for {space} must have {} rows of {width} cells",
                space.quotient_rank()
            )));
        }
        Ok(BlockGrid {
            space,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn space(&self) -> GrassmannSpace {
        self.space
    }

    pub fn width(&self) -> usize {
        self.space.sub_rank()
    }

    pub fn height(&self) -> usize {
        self.space.quotient_rank()
    }

    /// Value at `column` (1-based, from the left) and `row` (1-based, from the bottom).
    pub fn cell(&self, column: usize, row: usize) -> usize {
        assert!((1..=self.width()).contains(&column) && (1..=self.height()).contains(&row));
        self.cells[(row - 1) * self.width() + column - 1]
    }

    /// `t_{i,j}`: the value at column `i`, row `k+2-j`.
    pub fn t(&self, i: usize, j: usize) -> usize {
        self.cell(i, self.height() + 1 - j)
    }

    /// Rows from the bottom up.
    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.width())
    }

    /// Every value in `1..=(k+1)(n-k)` occurs exactly once.
    pub fn is_bijection(&self) -> bool {
        let d = self.cells.len();
        let seen: HashSet<usize> = self.cells.iter().copied().collect();
        seen.len() == d && self.cells.iter().all(|&v| (1..=d).contains(&v))
    }

    /// Horizontal differences do not depend on the row and vertical
    /// differences do not depend on the column.
    pub fn is_separable(&self) -> bool {
        let (w, h) = (self.width(), self.height());
        let v = |c: usize, r: usize| self.cell(c, r) as i64;
        let horizontal =
            (1..w).all(|c| (2..=h).all(|r| v(c + 1, r) - v(c, r) == v(c + 1, 1) - v(c, 1)));
        let vertical =
            (1..h).all(|r| (2..=w).all(|c| v(c, r + 1) - v(c, r) == v(1, r + 1) - v(1, r)));
        horizontal && vertical
    }
}

impl fmt::Display for BlockGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell_width = self.cells.len().to_string().len();
        let rows: Vec<&[usize]> = self.rows().collect();
        for row in rows.iter().rev() {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>cell_width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fills the nested block structure: `B_1` has `n_1` columns and `k_1` rows
/// numbered row by row from the bottom; `B_l` stacks `k_l` rows of `n_l`
/// copies of `B_{l-1}`, numbering block by block in the same order.
pub fn build_grid(space: GrassmannSpace, pair: &FactorizationPair) -> Result<BlockGrid> {
    pair.validate(space)?;
    let width = space.sub_rank();
    let mut cells = vec![0; space.dimension()];

    // (width, height) of B_l for each level
    let mut sizes = Vec::with_capacity(pair.len());
    let (mut w, mut h) = (1, 1);
    for (&kl, &nl) in pair.ks().iter().zip(pair.ns()) {
        w *= nl;
        h *= kl;
        sizes.push((w, h));
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        level: usize,
        col0: usize,
        row0: usize,
        offset: usize,
        pair: &FactorizationPair,
        sizes: &[(usize, usize)],
        width: usize,
        cells: &mut [usize],
    ) {
        let (kl, nl) = (pair.ks()[level], pair.ns()[level]);
        if level == 0 {
            for r in 0..kl {
                for c in 0..nl {
                    cells[(row0 + r) * width + col0 + c] = offset + r * nl + c + 1;
                }
            }
            return;
        }
        let (sw, sh) = sizes[level - 1];
        let block = sw * sh;
        for r in 0..kl {
            for c in 0..nl {
                let start = offset + (r * nl + c) * block;
                fill(
                    level - 1,
                    col0 + c * sw,
                    row0 + r * sh,
                    start,
                    pair,
                    sizes,
                    width,
                    cells,
                );
            }
        }
    }

    fill(pair.len() - 1, 0, 0, 0, pair, &sizes, width, &mut cells);
    Ok(BlockGrid { space, cells })
}

/// Solves `b_j + n - j + 2 - t_{i,j} = a_i + (n-k) - (i-1)` with `a_{n-k} = 0`
/// and re-checks the relation on every cell.
pub fn bundle_from_grid(grid: &BlockGrid) -> Result<HomogeneousBundle> {
    let space = grid.space();
    let (n, w, h) = (space.n() as i64, grid.width(), grid.height());
    let t = |i: usize, j: usize| grid.t(i, j) as i64;

    let beta: Vec<i64> = (1..=h).map(|j| t(w, j) - n + j as i64 - 1).collect();
    let gamma: Vec<i64> = (1..=w)
        .map(|i| t(w, h) - t(i, h) + i as i64 - w as i64)
        .collect();

    for j in 1..=h {
        for i in 1..=w {
            let lhs = beta[j - 1] + n - j as i64 + 2 - t(i, j);
            let rhs = gamma[i - 1] + w as i64 - (i as i64 - 1);
            if lhs != rhs {
                return Err(Error::InconsistentGrid {
                    column: i,
                    row: h + 1 - j,
                });
            }
        }
    }
    HomogeneousBundle::new(space, GlWeight::new(beta)?, GlWeight::new(gamma)?)
}
