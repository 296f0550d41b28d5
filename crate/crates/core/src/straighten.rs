//! Plücker monomials and their straightening into standard monomials.
//!
//! Signs of the quadratic shuffle relation are computed explicitly and
//! checked against products of exact minors of random integer matrices
//! (see [`evaluate_plucker`] and [`random_matrix`]).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::grassmann::{GrassmannWord, SchubertContext};

/// A product `p_{tau_1} ... p_{tau_r}`, factors kept in the given order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PluckerMonomial(pub Vec<GrassmannWord>);

impl PluckerMonomial {
    pub fn new(factors: Vec<GrassmannWord>) -> Result<Self> {
        if factors.is_empty() {
            return invalid("a monomial needs at least one factor");
        }
        let d = factors[0].len();
        if factors.iter().any(|f| f.len() != d) {
            return invalid("all factors of a monomial must have the same length");
        }
        Ok(PluckerMonomial(factors))
    }

    pub fn factors(&self) -> &[GrassmannWord] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `tau_1 >= ... >= tau_r` in Bruhat order.
    pub fn is_standard(&self) -> bool {
        self.first_descent_violation().is_none()
    }

    fn first_descent_violation(&self) -> Option<usize> {
        self.0.windows(2).position(|p| !p[0].geq(&p[1]))
    }

    fn last_descent_violation(&self) -> Option<usize> {
        self.0.windows(2).rposition(|p| !p[0].geq(&p[1]))
    }
}

impl fmt::Display for PluckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.0 {
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PluckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses juxtaposed tuples such as `"(1,4)(2,3)"`.
impl FromStr for PluckerMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed factor in {s:?}")))?;
            factors.push(body[..close].parse::<GrassmannWord>()?);
            rest = body[close + 1..].trim_start();
        }
        PluckerMonomial::new(factors)
    }
}

/// A linear combination of standard monomials with nonzero integer
/// coefficients.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardExpansion {
    terms: BTreeMap<PluckerMonomial, BigInt>,
}

impl StandardExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(m: PluckerMonomial) -> Self {
        let mut e = Self::new();
        e.add(m, BigInt::one());
        e
    }

    /// Adds `coeff * m`; `m` must be standard.
    pub fn add(&mut self, m: PluckerMonomial, coeff: BigInt) {
        debug_assert!(m.is_standard());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<PluckerMonomial, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, m: &PluckerMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PluckerMonomial, &BigInt)> {
        self.terms.iter()
    }
}

/// Terms print as `±c·(a,b)(c,d)` separated by spaces, in ascending
/// lexicographic order of the factor lists.
impl fmt::Display for StandardExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c.sign() == num_bigint::Sign::Minus {
                write!(f, "\u{2212}{}\u{b7}{m}", -c)?;
            } else {
                write!(f, "+{c}\u{b7}{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StandardExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One term `sign * p_alpha p_beta` of a shuffle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleTerm {
    pub sign: i32,
    pub alpha: GrassmannWord,
    pub beta: GrassmannWord,
}

/// Sign of the permutation sorting `v` (entries distinct), with the sorted
/// vector; `None` if `v` has a repeated entry.
fn sort_with_sign(mut v: Vec<usize>) -> Option<(i32, GrassmannWord)> {
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((sign, GrassmannWord::from_sorted(v)))
}

/// Rewrites `p_tau p_phi` (with `tau` not `>= phi`) through one quadratic
/// Plücker relation. Terms with a repeated entry vanish and are dropped.
///
/// With `t` the first position where `tau_t < phi_t`, the pool
/// `tau_1..tau_t, phi_t..phi_d` is redistributed in every non-identity way
/// that keeps both parts increasing.
pub fn shuffle(tau: &GrassmannWord, phi: &GrassmannWord) -> Result<Vec<ShuffleTerm>> {
    if tau.len() != phi.len() {
        return invalid(format!("{tau} and {phi} have different lengths"));
    }
    let Some(t) = tau.entries().iter().zip(phi.entries()).position(|(a, b)| a < b) else {
        return Err(Error::Precondition(format!("{tau} >= {phi}; nothing to shuffle")));
    };
    let d = tau.len();
    let pool: Vec<usize> = tau.entries()[..=t].iter().chain(&phi.entries()[t..]).copied().collect();
    // pool is strictly increasing since tau_1 < .. < tau_t < phi_t < .. < phi_d
    debug_assert!(pool.windows(2).all(|p| p[0] < p[1]));
    let take = t + 1;
    let identity_parity: usize = (0..take).sum();
    let mut out = Vec::new();
    for chosen in combinations(d + 1, take) {
        if chosen.iter().copied().eq(0..take) {
            continue;
        }
        let parity = chosen.iter().sum::<usize>() + identity_parity;
        let shuffle_sign = if parity.is_multiple_of(2) { 1 } else { -1 };
        let mut alpha: Vec<usize> = chosen.iter().map(|&i| pool[i]).collect();
        alpha.extend_from_slice(&tau.entries()[t + 1..]);
        let mut beta: Vec<usize> = phi.entries()[..t].to_vec();
        beta.extend((0..=d).filter(|i| !chosen.contains(i)).map(|i| pool[i]));
        let (Some((sa, alpha)), Some((sb, beta))) = (sort_with_sign(alpha), sort_with_sign(beta)) else {
            continue;
        };
        // the alternating sum over all redistributions vanishes, so the
        // identity term equals minus the rest
        out.push(ShuffleTerm { sign: -shuffle_sign * sa * sb, alpha, beta });
    }
    Ok(out)
}

/// Increasing `k`-subsets of `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Which nonstandard adjacent pair is shuffled at each step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairSelection {
    #[default]
    Leftmost,
    Rightmost,
}

/// Writes `m` as a combination of standard monomials.
pub fn straighten(m: &PluckerMonomial) -> StandardExpansion {
    straighten_with(m, PairSelection::Leftmost)
}

pub fn straighten_with(m: &PluckerMonomial, selection: PairSelection) -> StandardExpansion {
    let mut result = StandardExpansion::new();
    // A shuffle at position k keeps the prefix and replaces factor k by a
    // Bruhat-larger word, so every new monomial is lexicographically larger
    // than the one it came from: popping the smallest key never revisits.
    let mut pending: BTreeMap<PluckerMonomial, BigInt> = BTreeMap::new();
    pending.insert(m.clone(), BigInt::one());
    while let Some((mono, coeff)) = pending.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let k = match selection {
            PairSelection::Leftmost => mono.first_descent_violation(),
            PairSelection::Rightmost => mono.last_descent_violation(),
        };
        let Some(k) = k else {
            result.add(mono, coeff);
            continue;
        };
        let terms = shuffle(&mono.0[k], &mono.0[k + 1]).expect("violating pair is shuffleable");
        for term in terms {
            let mut factors = mono.0.clone();
            factors[k] = term.alpha;
            factors[k + 1] = term.beta;
            let c = &coeff * term.sign;
            *pending.entry(PluckerMonomial(factors)).or_insert_with(BigInt::zero) += c;
        }
    }
    result
}

/// Drops every term whose leading factor is not below `w`; these vanish on
/// `X(w)`.
pub fn restrict_to_schubert(e: &StandardExpansion, w: &GrassmannWord) -> StandardExpansion {
    StandardExpansion {
        terms: e.terms.iter().filter(|(m, _)| m.0[0].leq(w)).map(|(m, c)| (m.clone(), c.clone())).collect(),
    }
}

/// Whether a Chevalley generator raises (`X_i`) or lowers (`X_{-i}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Raise,
    Lower,
}

/// Leibniz action of `X_{±i}` on a monomial: one output monomial per factor
/// admitting the substitution `i -> i+1` (raise) or `i+1 -> i` (lower).
/// Every output carries coefficient `+1`.
pub fn chevalley_action(i: usize, m: &PluckerMonomial, direction: Direction) -> Vec<PluckerMonomial> {
    let (from, to) = match direction {
        Direction::Raise => (i, i + 1),
        Direction::Lower => (i + 1, i),
    };
    let mut out = Vec::new();
    for (j, factor) in m.0.iter().enumerate() {
        if factor.contains(from) && !factor.contains(to) {
            let mut factors = m.0.clone();
            factors[j] = factor.reflect(i);
            out.push(PluckerMonomial(factors));
        }
    }
    out
}

/// Dense `N x d` integer matrix; rows and columns are 1-based in the API.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[(row - 1) * self.cols + (col - 1)]
    }
}

/// The minor of `m` on rows `tau` (all columns); `m` must be `N x d`.
pub fn evaluate_plucker(tau: &GrassmannWord, m: &IntMatrix) -> Result<BigInt> {
    if m.cols != tau.len() {
        return Err(Error::ShapeMismatch(format!("matrix has {} columns, word has length {}", m.cols, tau.len())));
    }
    if tau.entries().last().is_some_and(|&x| x > m.rows) {
        return Err(Error::ShapeMismatch(format!("{tau} exceeds the {} rows of the matrix", m.rows)));
    }
    let minor: Vec<Vec<BigInt>> =
        tau.entries().iter().map(|&r| (1..=m.cols).map(|c| BigInt::from(m.get(r, c))).collect()).collect();
    Ok(crate::linalg::determinant(&minor))
}

/// Caches every Plücker coordinate of one matrix.
pub struct PluckerEvaluator {
    values: BTreeMap<GrassmannWord, BigInt>,
}

impl PluckerEvaluator {
    pub fn new(m: &IntMatrix) -> Self {
        let values = SchubertContext::all_words(m.rows, m.cols)
            .into_iter()
            .map(|t| {
                let v = evaluate_plucker(&t, m).expect("shape checked by construction");
                (t, v)
            })
            .collect();
        PluckerEvaluator { values }
    }

    pub fn coordinate(&self, tau: &GrassmannWord) -> &BigInt {
        &self.values[tau]
    }

    pub fn monomial(&self, m: &PluckerMonomial) -> BigInt {
        m.0.iter().fold(BigInt::one(), |acc, t| acc * &self.values[t])
    }

    pub fn expansion(&self, e: &StandardExpansion) -> BigInt {
        e.iter().fold(BigInt::zero(), |acc, (m, c)| acc + c * self.monomial(m))
    }
}

/// `N x d` matrix with entries uniform in `[-9, 9]`, from a seeded ChaCha8.
pub fn random_matrix(n: usize, d: usize, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n * d).map(|_| rng.gen_range(-9..=9)).collect();
    IntMatrix { rows: n, cols: d, data }
}

/// A point of the open cell `B [e_w]`: the columns indexed by `w` of a
/// seeded random upper unitriangular `N x N` matrix.
pub fn sample_point_on_schubert(ctx: &SchubertContext, seed: u64) -> IntMatrix {
    let n = ctx.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = vec![vec![0i64; n]; n];
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = 1;
        for x in row.iter_mut().skip(i + 1) {
            *x = rng.gen_range(-9..=9);
        }
    }
    let rows = b.iter().map(|row| ctx.w().entries().iter().map(|&c| row[c - 1]).collect()).collect();
    IntMatrix::from_rows(rows).expect("rectangular by construction")
}

/// Evaluates `m` and `e` on `trials` seeded random matrices, returning how
/// many agree exactly.
pub fn oracle_agreements(m: &PluckerMonomial, e: &StandardExpansion, n: usize, seed: u64, trials: usize) -> usize {
    let d = m.0[0].len();
    (0..trials as u64)
        .filter(|k| {
            let ev = PluckerEvaluator::new(&random_matrix(n, d, seed.wrapping_mul(1_000_003).wrapping_add(*k)));
            ev.monomial(m) == ev.expansion(e)
        })
        .count()
}
