//! Partitions and skew shapes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are dropped on
/// construction.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|p| p[0] >= p[1]) {
            return invalid(format!("parts must be weakly decreasing: {parts:?}"));
        }
        if parts.contains(&0) {
            return invalid(format!("zero part inside {parts:?}"));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("\u{2205}");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A box `(row, col)`, both 0-based.
pub type Cell = (usize, usize);

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return invalid(format!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn empty() -> Self {
        Self::straight(Partition::empty())
    }

    /// Number of boxes, `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Boxes in row-reading order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len()).flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j))).collect()
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        j >= self.inner.part(i) && j < self.outer.part(i)
    }

    /// True when no row and no column is empty.
    pub fn is_normalized(&self) -> bool {
        let rows_ok = (0..self.outer.len()).all(|i| self.outer.part(i) > self.inner.part(i));
        let outer_c = self.outer.conjugate();
        let inner_c = self.inner.conjugate();
        let cols_ok = (0..outer_c.len()).all(|j| outer_c.part(j) > inner_c.part(j));
        rows_ok && cols_ok
    }

    /// Drops empty rows and columns.
    pub fn normalized(&self) -> SkewShape {
        let (shape, _, _) = shape_from_cells(&self.cells()).expect("cells of a skew shape");
        shape
    }

    /// The shape rotated by 180 degrees, normalized.
    pub fn pi_rotation(&self) -> SkewShape {
        let rows = self.outer.len();
        let width = self.outer.part(0);
        let rotated: Vec<Cell> = self.cells().into_iter().map(|(i, j)| (rows - 1 - i, width - 1 - j)).collect();
        shape_from_cells(&rotated).expect("rotation of a skew shape is skew").0
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compresses a set of boxes to consecutive rows and columns and reads off
/// the normalized skew shape. Returns the shape together with the original
/// row and column indices kept, or `None` if the boxes do not form a skew
/// diagram.
pub(crate) fn shape_from_cells(cells: &[Cell]) -> Option<(SkewShape, Vec<usize>, Vec<usize>)> {
    let rows: Vec<usize> = cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().into_iter().collect();
    let cols: Vec<usize> = cells.iter().map(|c| c.1).collect::<BTreeSet<_>>().into_iter().collect();
    let mut spans: Vec<(usize, usize, usize)> = vec![(usize::MAX, 0, 0); rows.len()];
    for &(i, j) in cells {
        let r = rows.binary_search(&i).unwrap();
        let c = cols.binary_search(&j).unwrap();
        let s = &mut spans[r];
        s.0 = s.0.min(c);
        s.1 = s.1.max(c);
        s.2 += 1;
    }
    let mut outer = Vec::with_capacity(rows.len());
    let mut inner = Vec::with_capacity(rows.len());
    for &(lo, hi, count) in &spans {
        if hi + 1 - lo != count {
            return None;
        }
        outer.push(hi + 1);
        inner.push(lo);
    }
    let outer = Partition::new(outer).ok()?;
    let inner = Partition::new(inner).ok()?;
    if !outer.contains(&inner) {
        return None;
    }
    Some((SkewShape { outer, inner }, rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::all_of_size(4).len(), 5);
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(skew(&[4, 2, 2, 1], &[2, 1]).pi_rotation(), skew(&[4, 4, 3, 2], &[3, 2, 2]));
        let lam = SkewShape::straight(p(&[3, 1]));
        assert_eq!(lam.pi_rotation().pi_rotation(), lam);
        // rotating (m^n)/lambda gives a straight shape
        assert_eq!(skew(&[3, 3], &[2]).pi_rotation(), SkewShape::straight(p(&[3, 1])));
        assert_eq!(skew(&[2, 2], &[1]).pi_rotation(), SkewShape::straight(p(&[2, 1])));
        assert_eq!(SkewShape::empty().pi_rotation(), SkewShape::empty());
    }

    #[test]
    fn normalization() {
        let s = skew(&[3, 2, 2], &[2, 2]);
        assert!(!s.is_normalized());
        // boxes (0,2), (2,0), (2,1)
        assert_eq!(s.normalized(), skew(&[3, 2], &[2]));
        assert!(skew(&[2, 1], &[1]).is_normalized());
        assert!(shape_from_cells(&[(0, 0), (1, 1)]).is_none());
    }
}
