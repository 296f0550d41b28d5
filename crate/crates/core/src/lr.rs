//! Littlewood-Richardson coefficients and the dimensions and characters of
//! skew Weyl modules.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::determinant;
use crate::partition::{Partition, SkewShape};
use crate::tableau::{count_ssyt, for_each_ssyt_content};

/// Exponents of `eps_1, ..., eps_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

/// A character as a multiset of weights.
pub type Character = BTreeMap<WeightVector, u64>;

/// Backtracking over LR fillings of `sh`: boxes are visited in reverse
/// reading order (rows top to bottom, each right to left), so the reading
/// word is built left to right and the lattice condition is checked on each
/// prefix.
struct LrSearch<'a> {
    cells: Vec<(usize, usize)>,
    shape: &'a SkewShape,
    /// per-value cap on the content; `None` leaves only the lattice condition
    content: Option<&'a [usize]>,
    max_value: usize,
}

impl LrSearch<'_> {
    fn run(&self, visit: &mut impl FnMut(&[usize])) {
        let rows = self.shape.outer.len();
        let width = self.shape.outer.part(0);
        let mut grid = vec![vec![0usize; width]; rows];
        let mut counts = vec![0usize; self.max_value + 1];
        self.walk(0, &mut grid, &mut counts, visit);
    }

    fn walk(&self, k: usize, grid: &mut [Vec<usize>], counts: &mut [usize], visit: &mut impl FnMut(&[usize])) {
        if k == self.cells.len() {
            visit(&counts[1..]);
            return;
        }
        let (i, j) = self.cells[k];
        // weakly increasing rows: bounded by the box to the right
        let mut hi = self.max_value;
        if j + 1 < self.shape.outer.part(i) {
            hi = hi.min(grid[i][j + 1]);
        }
        // strictly increasing columns: above the box
        let lo = if i > 0 && j >= self.shape.inner.part(i - 1) && j < self.shape.outer.part(i - 1) {
            grid[i - 1][j] + 1
        } else {
            1
        };
        for v in lo..=hi {
            if v > 1 && counts[v] >= counts[v - 1] {
                continue;
            }
            if let Some(c) = self.content {
                if counts[v] >= c.get(v - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            grid[i][j] = v;
            counts[v] += 1;
            self.walk(k + 1, grid, counts, visit);
            counts[v] -= 1;
        }
    }
}

fn lr_search<'a>(sh: &'a SkewShape, content: Option<&'a [usize]>, max_value: usize) -> LrSearch<'a> {
    let cells =
        (0..sh.outer.len()).flat_map(|i| (sh.inner.part(i)..sh.outer.part(i)).rev().map(move |j| (i, j))).collect();
    LrSearch { cells, shape: sh, content, max_value }
}

/// `c^lambda_{mu, nu}`, zero whenever `mu` is not inside `lambda` or the
/// sizes do not add up.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let sh = SkewShape { outer: lambda.clone(), inner: mu.clone() };
    let mut count = 0;
    lr_search(&sh, Some(nu.parts()), nu.len()).run(&mut |_| count += 1);
    count
}

/// The straight shapes `nu` in `W^{lambda/mu}`, with multiplicity
/// `c^lambda_{mu, nu}`, restricted to `nu` with at most `max_rows` rows.
pub fn skew_decomposition_bounded(sh: &SkewShape, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    lr_search(sh, None, max_rows.min(sh.size())).run(&mut |content| {
        let nu = Partition::new(content.to_vec()).expect("lattice word content is a partition");
        *out.entry(nu).or_insert(0) += 1;
    });
    out
}

/// The full LR decomposition of `W^{lambda/mu}` into straight shapes.
pub fn skew_weyl_decomposition(sh: &SkewShape) -> BTreeMap<Partition, u64> {
    skew_decomposition_bounded(sh, sh.size())
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of semistandard tableaux on `sh` with entries at most `n`, by the
/// Jacobi-Trudi determinant `det[h_{lambda_i - mu_j - i + j}(1^n)]`.
pub fn weyl_dimension(sh: &SkewShape, n: usize) -> BigUint {
    let l = sh.outer.len();
    if l == 0 {
        return BigUint::one();
    }
    let matrix: Vec<Vec<BigInt>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = sh.outer.part(i) as i64 - sh.inner.part(j) as i64 - i as i64 + j as i64;
                    match k {
                        k if k < 0 => BigInt::zero(),
                        0 => BigInt::one(),
                        // h_k(1^n) = C(n + k - 1, k), which vanishes for n = 0
                        _ if n == 0 => BigInt::zero(),
                        k => BigInt::from(binomial(n as u64 + k as u64 - 1, k as u64)),
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix).to_biguint().expect("skew Schur specialization is nonnegative")
}

/// The same count by direct enumeration.
pub fn weyl_dimension_by_enumeration(sh: &SkewShape, n: usize) -> BigUint {
    count_ssyt(sh, n)
}

/// Multiset of contents of the semistandard tableaux on `sh` with entries at
/// most `n`.
pub fn weyl_character(sh: &SkewShape, n: usize) -> Character {
    let mut out = Character::new();
    for_each_ssyt_content(sh, n, |c| {
        let w = WeightVector(c.iter().map(|&x| x as i64).collect());
        *out.entry(w).or_insert(0) += 1;
    });
    out
}

/// Multiset union of characters, each counted with a multiplicity.
pub fn character_sum<'a>(parts: impl IntoIterator<Item = (&'a Character, u64)>) -> Character {
    let mut out = Character::new();
    for (ch, mult) in parts {
        for (w, c) in ch {
            *out.entry(w.clone()).or_insert(0) += c * mult;
        }
    }
    out
}

/// Character of a tensor product: weights concatenated, counts multiplied.
pub fn character_product(factors: &[Character]) -> Character {
    let mut acc = Character::from([(WeightVector(Vec::new()), 1)]);
    for f in factors {
        let mut next = Character::new();
        for (w, c) in &acc {
            for (v, e) in f {
                let mut joined = w.0.clone();
                joined.extend_from_slice(&v.0);
                *next.entry(WeightVector(joined)).or_insert(0) += c * e;
            }
        }
        acc = next;
    }
    acc
}
