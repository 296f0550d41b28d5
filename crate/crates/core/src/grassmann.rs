//! Words of the Grassmannian quotient `I_{d,N}`, their Bruhat order, and the
//! lower intervals that index standard monomials on a Schubert variety.
//!
//! All enumerations return words in lexicographic order of their entries, so
//! every listing derived from them is reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A strictly increasing tuple `1 <= i_1 < ... < i_d <= N`.
///
/// The ambient `N` is not stored; it is checked when a word is built with
/// [`GrassmannWord::new`] or admitted into a [`SchubertContext`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GrassmannWord(Vec<usize>);

impl GrassmannWord {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() {
            return invalid("a word needs at least one entry");
        }
        if entries[0] == 0 {
            return invalid(format!("entries are 1-based, got 0 in {entries:?}"));
        }
        if !entries.windows(2).all(|p| p[0] < p[1]) {
            return invalid(format!("entries must be strictly increasing: {entries:?}"));
        }
        if *entries.last().unwrap() > n {
            return invalid(format!("entry exceeds N={n} in {entries:?}"));
        }
        Ok(GrassmannWord(entries))
    }

    /// Builds a word without validation. Callers guarantee strict increase.
    pub(crate) fn from_sorted(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|p| p[0] < p[1]));
        GrassmannWord(entries)
    }

    /// Sorts `entries` ascending; `None` if an entry repeats.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Option<Self> {
        entries.sort_unstable();
        if entries.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some(GrassmannWord(entries))
    }

    /// The top element `(N-d+1, ..., N)`.
    pub fn top(d: usize, n: usize) -> Self {
        GrassmannWord(((n - d + 1)..=n).collect())
    }

    /// The bottom element `(1, ..., d)`.
    pub fn bottom(d: usize) -> Self {
        GrassmannWord((1..=d).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Componentwise comparison. Both words must have the same length.
    pub fn leq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn geq(&self, other: &Self) -> bool {
        other.leq(self)
    }

    /// Strictly greater in Bruhat order.
    pub fn gt(&self, other: &Self) -> bool {
        self != other && other.leq(self)
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.leq(other) || other.leq(self)
    }

    /// `s_{alpha_m}` applied to the word: swaps the values `m` and `m+1`.
    pub fn reflect(&self, m: usize) -> Self {
        let has_m = self.contains(m);
        let has_next = self.contains(m + 1);
        if has_m == has_next {
            return self.clone();
        }
        let entries = self
            .0
            .iter()
            .map(|&x| {
                if x == m {
                    m + 1
                } else if x == m + 1 {
                    m
                } else {
                    x
                }
            })
            .collect();
        GrassmannWord(entries)
    }
}

impl fmt::Display for GrassmannWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GrassmannWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"(1,2,4)"` or `"1,2,4"`. Only strict increase is checked.
impl FromStr for GrassmannWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body);
        let entries = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        GrassmannWord::new(entries, usize::MAX)
    }
}

/// Bruhat comparison `a <= b`, which on `I_{d,N}` is componentwise.
pub fn bruhat_leq(a: &GrassmannWord, b: &GrassmannWord) -> Result<bool> {
    if a.len() != b.len() {
        return invalid(format!("cannot compare {a} and {b}: lengths differ"));
    }
    Ok(a.leq(b))
}

/// The Grassmannian `Gr(d,N)` together with a Schubert variety `X(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertContext {
    n: usize,
    d: usize,
    w: GrassmannWord,
}

impl SchubertContext {
    pub fn new(n: usize, d: usize, w: GrassmannWord) -> Result<Self> {
        if n < 2 {
            return invalid(format!("N must be at least 2, got {n}"));
        }
        if d == 0 || d >= n {
            return invalid(format!("d must satisfy 1 <= d <= N-1, got d={d}, N={n}"));
        }
        if w.len() != d {
            return invalid(format!("w={w} has length {} but d={d}", w.len()));
        }
        let w = GrassmannWord::new(w.0, n)?;
        Ok(SchubertContext { n, d, w })
    }

    /// The whole Grassmannian, `w = (N-d+1, ..., N)`.
    pub fn full(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return invalid(format!("d must satisfy 1 <= d <= N-1, got d={d}, N={n}"));
        }
        Self::new(n, d, GrassmannWord::top(d, n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn w(&self) -> &GrassmannWord {
        &self.w
    }

    pub fn is_full(&self) -> bool {
        self.w == GrassmannWord::top(self.d, self.n)
    }

    /// True when `tau` has the right length and lies below `w`.
    pub fn contains(&self, tau: &GrassmannWord) -> bool {
        tau.len() == self.d && tau.leq(&self.w)
    }

    pub fn check(&self, tau: &GrassmannWord) -> Result<()> {
        if tau.len() != self.d {
            return invalid(format!("{tau} does not have length d={}", self.d));
        }
        if !tau.leq(&self.w) {
            return Err(Error::OutOfRange { word: tau.to_string(), top: self.w.to_string() });
        }
        Ok(())
    }

    /// Every word of `I_{d,N}`, in lexicographic order.
    pub fn all_words(n: usize, d: usize) -> Vec<GrassmannWord> {
        interval_below(&GrassmannWord::top(d, n))
    }

    /// `H_w = { tau : tau <= w }` in lexicographic order.
    pub fn lower_interval(&self) -> Vec<GrassmannWord> {
        interval_below(&self.w)
    }

    pub fn hasse_diagram(&self) -> HasseDiagram {
        let nodes = self.lower_interval();
        let mut edges = Vec::new();
        for upper in &nodes {
            let e = upper.entries();
            for j in 0..e.len() {
                let floor = if j == 0 { 0 } else { e[j - 1] };
                if e[j] - 1 > floor {
                    let mut lower = e.to_vec();
                    lower[j] -= 1;
                    edges.push(HasseEdge { lower: GrassmannWord(lower), upper: upper.clone(), label: e[j] - 1 });
                }
            }
        }
        edges.sort();
        HasseDiagram { nodes, edges }
    }

    /// `R_{Q_w}`: the simple reflections stabilizing `X(w)`.
    pub fn stabilizer_set(&self) -> BTreeSet<usize> {
        let excluded = self.stabilizer_complement();
        (1..self.n).filter(|m| !excluded.contains(m)).collect()
    }

    /// The complement of [`Self::stabilizer_set`] in `{1..N-1}`: entries
    /// `l_m <= N-1` whose successor `l_m + 1` is not the next entry of `w`.
    pub fn stabilizer_complement(&self) -> BTreeSet<usize> {
        let e = self.w.entries();
        (0..e.len())
            .filter(|&m| e[m] < self.n && e.get(m + 1).is_none_or(|&next| next != e[m] + 1))
            .map(|m| e[m])
            .collect()
    }

    /// Number of standard monomials of degree `r` on `X(w)`: weakly
    /// decreasing chains `tau_1 >= ... >= tau_r` with `tau_1 <= w`.
    pub fn count_std_monomials(&self, r: usize) -> BigUint {
        if r == 0 {
            return BigUint::one();
        }
        let nodes = self.lower_interval();
        let below: Vec<Vec<usize>> =
            nodes.iter().map(|t| (0..nodes.len()).filter(|&j| nodes[j].leq(t)).collect()).collect();
        // chains[i] = number of chains of the current length whose top is nodes[i]
        let mut chains = vec![BigUint::one(); nodes.len()];
        for _ in 1..r {
            chains = below.iter().map(|down| down.iter().fold(BigUint::zero(), |acc, &j| acc + &chains[j])).collect();
        }
        chains.into_iter().sum()
    }

    /// All standard monomials of degree `r` on `X(w)`, each listed as its
    /// factors `tau_1 >= ... >= tau_r`. Lexicographic in the factor list.
    pub fn std_monomials(&self, r: usize) -> Vec<Vec<GrassmannWord>> {
        let nodes = self.lower_interval();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(r);
        fn go(nodes: &[GrassmannWord], r: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<GrassmannWord>>) {
            if stack.len() == r {
                out.push(stack.iter().map(|&i| nodes[i].clone()).collect());
                return;
            }
            for i in 0..nodes.len() {
                if let Some(&prev) = stack.last() {
                    if !nodes[i].leq(&nodes[prev]) {
                        continue;
                    }
                }
                stack.push(i);
                go(nodes, r, stack, out);
                stack.pop();
            }
        }
        if r > 0 {
            go(&nodes, r, &mut stack, &mut out);
        }
        out
    }
}

fn interval_below(w: &GrassmannWord) -> Vec<GrassmannWord> {
    fn go(w: &[usize], cur: &mut Vec<usize>, out: &mut Vec<GrassmannWord>) {
        let j = cur.len();
        if j == w.len() {
            out.push(GrassmannWord(cur.clone()));
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        for x in lo..=w[j] {
            cur.push(x);
            go(w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w.entries(), &mut Vec::with_capacity(w.len()), &mut out);
    out
}

/// One covering relation `lower < upper`, labeled by the simple reflection
/// index `m` with `lower = s_{alpha_m} upper`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HasseEdge {
    pub lower: GrassmannWord,
    pub upper: GrassmannWord,
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub nodes: Vec<GrassmannWord>,
    pub edges: Vec<HasseEdge>,
}

impl HasseDiagram {
    pub fn lower_neighbors<'a>(&'a self, upper: &'a GrassmannWord) -> impl Iterator<Item = &'a GrassmannWord> + 'a {
        self.edges.iter().filter(move |e| &e.upper == upper).map(|e| &e.lower)
    }
}
