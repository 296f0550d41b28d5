//! Semistandard skew tableaux, the rectangular tableau of a standard
//! monomial, and its splitting into one skew tableau per Levi block.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::GrassmannWord;
use crate::levi::{HeadSequence, LeviContext};
use crate::partition::{shape_from_cells, Cell, SkewShape};

/// A filling of a skew shape. `rows[i]` holds the entries of row `i` from
/// left to right, starting at column `inner[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens_ok = rows.len() == shape.outer.len()
            && rows.iter().enumerate().all(|(i, r)| r.len() == shape.outer.part(i) - shape.inner.part(i));
        if !lens_ok {
            return Err(Error::ShapeMismatch(format!("row lengths do not fit {shape}")));
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry in box `(i, j)`, `None` outside the shape.
    pub fn get(&self, (i, j): Cell) -> Option<usize> {
        let start = self.shape.inner.part(i);
        if i >= self.rows.len() || j < start {
            return None;
        }
        self.rows[i].get(j - start).copied()
    }

    /// Weak increase along rows, strict increase down columns.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self.shape.cells().into_iter().all(|(i, j)| match (i.checked_sub(1), self.get((i, j))) {
            (Some(up), Some(v)) => self.get((up, j)).is_none_or(|u| u < v),
            _ => true,
        });
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&v| v >= 1)
    }

    /// Number of entries equal to `v`, for `v = 1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        c
    }
}

/// Fixed-width grid, `·` for boxes of the inner shape.
impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = vec![format!("{:>width$}", "\u{b7}"); self.shape.inner.part(i)];
            cells.extend(row.iter().map(|v| format!("{v:>width$}")));
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.shape, self.rows)
    }
}

/// Backtracking over boxes in row-reading order. Each box takes values from
/// its row/column lower bound up to `max_entry` minus the boxes still
/// needed below it in its column.
struct Filler<'a> {
    shape: &'a SkewShape,
    cells: Vec<Cell>,
    /// for each cell: index of the cell to its left and above, if in shape
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    below_count: Vec<usize>,
    max_entry: usize,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, max_entry: usize) -> Self {
        let cells = shape.cells();
        let pos = |c: Cell| cells.iter().position(|&x| x == c);
        let left = cells.iter().map(|&(i, j)| j.checked_sub(1).and_then(|l| pos((i, l)))).collect();
        let above = cells.iter().map(|&(i, j)| i.checked_sub(1).and_then(|u| pos((u, j)))).collect();
        let below_count = cells
            .iter()
            .map(|&(i, j)| (i + 1..shape.outer.len()).take_while(|&k| shape.contains_cell((k, j))).count())
            .collect();
        Filler { shape, cells, left, above, below_count, max_entry }
    }

    fn bounds(&self, k: usize, vals: &[usize]) -> (usize, usize) {
        let mut lo = 1;
        if let Some(l) = self.left[k] {
            lo = lo.max(vals[l]);
        }
        if let Some(a) = self.above[k] {
            lo = lo.max(vals[a] + 1);
        }
        (lo, self.max_entry.saturating_sub(self.below_count[k]))
    }

    fn for_each(&self, mut visit: impl FnMut(&[usize])) {
        let mut vals = vec![0; self.cells.len()];
        self.walk(0, &mut vals, &mut visit);
    }

    fn walk(&self, k: usize, vals: &mut [usize], visit: &mut impl FnMut(&[usize])) {
        if k == self.cells.len() {
            visit(vals);
            return;
        }
        let (lo, hi) = self.bounds(k, vals);
        for v in lo..=hi {
            vals[k] = v;
            self.walk(k + 1, vals, visit);
        }
    }

    fn count(&self) -> BigUint {
        // memo-free count; shapes at this scale are small
        let mut total = BigUint::zero();
        self.for_each(|_| total += BigUint::one());
        total
    }

    fn tableau(&self, vals: &[usize]) -> SkewTableau {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.shape.outer.len()];
        for (&(i, _), &v) in self.cells.iter().zip(vals) {
            rows[i].push(v);
        }
        SkewTableau { shape: self.shape.clone(), rows }
    }
}

/// All semistandard tableaux of shape `sh` with entries in `1..=max_entry`,
/// ordered lexicographically by row-reading word.
pub fn enumerate_ssyt(sh: &SkewShape, max_entry: usize) -> Vec<SkewTableau> {
    let filler = Filler::new(sh, max_entry);
    let mut out = Vec::new();
    filler.for_each(|vals| out.push(filler.tableau(vals)));
    out
}

/// Number of semistandard tableaux, counted by the same backtracking.
pub fn count_ssyt(sh: &SkewShape, max_entry: usize) -> BigUint {
    Filler::new(sh, max_entry).count()
}

/// Calls `visit` with the content vector (length `max_entry`) of every
/// semistandard tableau of shape `sh`.
pub fn for_each_ssyt_content(sh: &SkewShape, max_entry: usize, mut visit: impl FnMut(&[usize])) {
    let mut content = vec![0; max_entry];
    Filler::new(sh, max_entry).for_each(|vals| {
        content.iter_mut().for_each(|c| *c = 0);
        for &v in vals {
            content[v - 1] += 1;
        }
        visit(&content);
    });
}

/// The `d x r` rectangle whose column `j` is factor `r + 1 - j`, as a grid
/// of rows.
pub fn rectangle_of_monomial(factors: &[GrassmannWord]) -> Result<Vec<Vec<usize>>> {
    if factors.is_empty() {
        return Err(Error::InvalidInput("empty monomial".into()));
    }
    if !factors.windows(2).all(|p| p[0].geq(&p[1])) {
        return Err(Error::Precondition(format!("{factors:?} is not standard")));
    }
    let d = factors[0].len();
    Ok((0..d).map(|i| factors.iter().rev().map(|f| f.entries()[i]).collect()).collect())
}

/// The rectangular semistandard tableau of a standard monomial.
pub fn tableau_of_monomial(factors: &[GrassmannWord]) -> Result<SkewTableau> {
    let grid = rectangle_of_monomial(factors)?;
    let shape = SkewShape::straight(crate::partition::Partition::rectangle(grid.len(), factors.len()));
    SkewTableau::new(shape, grid)
}

/// Boxes of the rectangle with values in block `k`, their normalized shape,
/// and the kept row and column indices.
fn block_cells(grid: &[Vec<usize>], levi: &LeviContext, k: usize) -> (Vec<Cell>, SkewShape, Vec<usize>, Vec<usize>) {
    let block = levi.block(k);
    let cells: Vec<Cell> = grid
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, v)| block.contains(v)).map(move |(j, _)| (i, j)))
        .collect();
    let (shape, rows, cols) = shape_from_cells(&cells)
        .unwrap_or_else(|| panic!("block {k} of a semistandard rectangle is not a skew diagram"));
    (cells, shape, rows, cols)
}

/// Keeps the boxes of `t` (a rectangular tableau) valued in block `k`,
/// shifts them down by `a_{k-1}`, and drops empty rows and columns.
pub fn block_restriction(t: &SkewTableau, levi: &LeviContext, k: usize) -> Result<SkewTableau> {
    if k == 0 || k > levi.block_count() {
        return Err(Error::InvalidInput(format!("block {k} out of range 1..={}", levi.block_count())));
    }
    if !t.shape.is_straight() || t.rows.windows(2).any(|p| p[0].len() != p[1].len()) {
        return Err(Error::ShapeMismatch("block restriction expects a rectangle".into()));
    }
    Ok(restrict_grid(&t.rows, levi, k))
}

fn restrict_grid(grid: &[Vec<usize>], levi: &LeviContext, k: usize) -> SkewTableau {
    let (cells, shape, rows, _) = block_cells(grid, levi, k);
    let offset = levi.offset(k);
    let mut filled: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
    for (i, j) in cells {
        let r = rows.binary_search(&i).unwrap();
        filled[r].push(grid[i][j] - offset);
    }
    SkewTableau { shape, rows: filled }
}

/// `Psi`: the per-block skew tableaux of a standard monomial.
pub fn psi(factors: &[GrassmannWord], levi: &LeviContext) -> Result<Vec<SkewTableau>> {
    let grid = rectangle_of_monomial(factors)?;
    Ok((1..=levi.block_count()).map(|k| restrict_grid(&grid, levi, k)).collect())
}

/// Shapes `lambda^(k) / mu^(k)` of a standard head sequence.
pub fn shapes_of_head(theta: &HeadSequence, levi: &LeviContext) -> Result<Vec<SkewShape>> {
    let grid = rectangle_of_monomial(theta.heads())?;
    Ok((1..=levi.block_count()).map(|k| block_cells(&grid, levi, k).1).collect())
}

/// `Phi`, the inverse of [`psi`]: rebuilds the standard monomial with head
/// sequence `theta` from one tableau per block.
pub fn reconstruct_monomial(
    fillings: &[SkewTableau],
    theta: &HeadSequence,
    levi: &LeviContext,
) -> Result<Vec<GrassmannWord>> {
    if fillings.len() != levi.block_count() {
        return Err(Error::ShapeMismatch(format!("{} fillings for {} blocks", fillings.len(), levi.block_count())));
    }
    let head_grid = rectangle_of_monomial(theta.heads())?;
    let mut grid = head_grid.clone();
    for (idx, filling) in fillings.iter().enumerate() {
        let k = idx + 1;
        let (cells, shape, rows, cols) = block_cells(&head_grid, levi, k);
        if filling.shape != shape {
            return Err(Error::ShapeMismatch(format!("block {k}: expected {shape}, got {}", filling.shape)));
        }
        let size = levi.block_sizes()[idx];
        for (i, j) in cells {
            let r = rows.binary_search(&i).unwrap();
            let c = cols.binary_search(&j).unwrap();
            let v = filling.get((r, c)).expect("cell of the shape");
            if v == 0 || v > size {
                return Err(Error::InvalidInput(format!("block {k}: entry {v} outside 1..={size}")));
            }
            grid[i][j] = v + levi.offset(k);
        }
    }
    let r = theta.len();
    let factors: Vec<GrassmannWord> = (0..r)
        .map(|f| {
            let column: Vec<usize> = grid.iter().map(|row| row[r - 1 - f]).collect();
            GrassmannWord::from_unsorted(column.clone())
                .filter(|w| w.entries() == column.as_slice())
                .ok_or_else(|| Error::InvalidInput(format!("column {column:?} is not strictly increasing")))
        })
        .collect::<Result<_>>()?;
    if !factors.windows(2).all(|p| p[0].geq(&p[1])) {
        return Err(Error::InvalidInput("fillings do not assemble into a semistandard rectangle".into()));
    }
    Ok(factors)
}
