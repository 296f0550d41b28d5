//! Block-diagonal Levi subgroups `GL_{N_1} x ... x GL_{N_s}` acting on a
//! Schubert variety, their heads, and the order `>=_str` on head sequences.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::grassmann::{GrassmannWord, SchubertContext};

/// A Levi subgroup given by the simple reflections `R_Q` it contains.
///
/// Invariant: `R_Q` is a subset of the stabilizer set of `X(w)`, so the
/// Levi acts on the Schubert variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviContext {
    ctx: SchubertContext,
    r_q: BTreeSet<usize>,
    /// `a_0 = 0 < a_1 < ... < a_s = N`
    cuts: Vec<usize>,
}

impl LeviContext {
    pub fn new(ctx: SchubertContext, r_q: BTreeSet<usize>) -> Result<Self> {
        let stabilizer = ctx.stabilizer_set();
        if let Some(&bad) = r_q.iter().find(|m| !stabilizer.contains(m)) {
            return Err(Error::NotInStabilizer { index: bad, stabilizer: stabilizer.into_iter().collect() });
        }
        let n = ctx.n();
        let mut cuts = vec![0];
        cuts.extend((1..n).filter(|m| !r_q.contains(m)));
        cuts.push(n);
        Ok(LeviContext { ctx, r_q, cuts })
    }

    /// The Levi part `L_w` of the full stabilizer `Q_w`.
    pub fn of_stabilizer(ctx: SchubertContext) -> Self {
        let r_q = ctx.stabilizer_set();
        Self::new(ctx, r_q).expect("the stabilizer set is always admissible")
    }

    /// Levi with the given block sizes; they must sum to `N`.
    pub fn from_block_sizes(ctx: SchubertContext, sizes: &[usize]) -> Result<Self> {
        if sizes.contains(&0) || sizes.iter().sum::<usize>() != ctx.n() {
            return invalid(format!("block sizes {sizes:?} must be positive and sum to N={}", ctx.n()));
        }
        let mut cuts = BTreeSet::new();
        let mut acc = 0;
        for s in &sizes[..sizes.len() - 1] {
            acc += s;
            cuts.insert(acc);
        }
        let r_q = (1..ctx.n()).filter(|m| !cuts.contains(m)).collect();
        Self::new(ctx, r_q)
    }

    pub fn ctx(&self) -> &SchubertContext {
        &self.ctx
    }

    pub fn r_q(&self) -> &BTreeSet<usize> {
        &self.r_q
    }

    /// `a_0, ..., a_s`.
    pub fn cut_points(&self) -> &[usize] {
        &self.cuts
    }

    /// `dprl(L)`, the number of blocks.
    pub fn block_count(&self) -> usize {
        self.cuts.len() - 1
    }

    /// Block `k` (1-based) as the interval `a_{k-1}+1 ..= a_k`.
    pub fn block(&self, k: usize) -> RangeInclusive<usize> {
        (self.cuts[k - 1] + 1)..=self.cuts[k]
    }

    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        (1..=self.block_count()).map(|k| self.block(k)).collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.cuts.windows(2).map(|p| p[1] - p[0]).collect()
    }

    /// `a_{k-1}` for 1-based `k`.
    pub fn offset(&self, k: usize) -> usize {
        self.cuts[k - 1]
    }

    /// 1-based index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        debug_assert!(x >= 1 && x <= self.ctx.n());
        self.cuts.partition_point(|&a| a < x)
    }

    pub fn class_of(&self, tau: &GrassmannWord) -> Result<Vec<usize>> {
        self.ctx.check(tau)?;
        Ok(self.class_unchecked(tau))
    }

    pub(crate) fn class_unchecked(&self, tau: &GrassmannWord) -> Vec<usize> {
        tau.entries().iter().map(|&x| self.block_of(x)).collect()
    }

    /// Whether every block meets `tau` in an empty or top-packed set.
    pub fn is_head(&self, tau: &GrassmannWord) -> bool {
        let e = tau.entries();
        // a run of entries inside one block must be consecutive and end at the block top
        for (j, &x) in e.iter().enumerate() {
            let k = self.block_of(x);
            match e.get(j + 1) {
                Some(&next) if self.block_of(next) == k => {
                    if next != x + 1 {
                        return false;
                    }
                }
                _ => {
                    if x != self.cuts[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `He_L`, in lexicographic order.
    pub fn heads(&self) -> Vec<GrassmannWord> {
        self.ctx.lower_interval().into_iter().filter(|t| self.is_head(t)).collect()
    }

    /// The head of `tau`: in each block the entries of `tau` are replaced by
    /// the same number of top elements of that block.
    pub fn head_of(&self, tau: &GrassmannWord) -> GrassmannWord {
        let mut counts = vec![0usize; self.block_count() + 1];
        for &x in tau.entries() {
            counts[self.block_of(x)] += 1;
        }
        let mut entries = Vec::with_capacity(tau.len());
        for (k, &m) in counts.iter().enumerate().skip(1) {
            let top = self.cuts[k];
            entries.extend((top + 1 - m)..=top);
        }
        GrassmannWord::from_sorted(entries)
    }

    pub fn head_sequence_of(&self, factors: &[GrassmannWord]) -> HeadSequence {
        HeadSequence(factors.iter().map(|t| self.head_of(t)).collect())
    }

    /// Components of the Hasse diagram after deleting edges labeled outside
    /// `R_Q`, keyed by their maximal element.
    pub fn hasse_partition(&self) -> BTreeMap<GrassmannWord, Vec<GrassmannWord>> {
        let diagram = self.ctx.hasse_diagram();
        let index: BTreeMap<&GrassmannWord, usize> = diagram.nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut parent: Vec<usize> = (0..diagram.nodes.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for e in diagram.edges.iter().filter(|e| self.r_q.contains(&e.label)) {
            let a = find(&mut parent, index[&e.lower]);
            let b = find(&mut parent, index[&e.upper]);
            parent[a] = b;
        }
        let mut groups: BTreeMap<usize, Vec<GrassmannWord>> = BTreeMap::new();
        for (i, t) in diagram.nodes.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(t.clone());
        }
        groups
            .into_values()
            .map(|members| {
                let top = members
                    .iter()
                    .find(|m| members.iter().all(|o| o.leq(m)))
                    .expect("every component has a unique maximum")
                    .clone();
                (top, members)
            })
            .collect()
    }

    /// `He^std_{L,r}`: weakly decreasing `r`-tuples of heads, listed so that
    /// a sequence never follows one it is `>_str` of.
    pub fn standard_head_sequences(&self, r: usize) -> Vec<HeadSequence> {
        let mut heads = self.heads();
        heads.sort_by(descending_linear_extension);
        // down[i] = heads (by position) that are <= heads[i], in the same order
        let down: Vec<Vec<usize>> =
            heads.iter().map(|h| (0..heads.len()).filter(|&j| heads[j].leq(h)).collect()).collect();
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::with_capacity(r);
        fn go(
            heads: &[GrassmannWord],
            down: &[Vec<usize>],
            r: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<HeadSequence>,
        ) {
            if stack.len() == r {
                out.push(HeadSequence(stack.iter().map(|&i| heads[i].clone()).collect()));
                return;
            }
            let choices: Vec<usize> = match stack.last() {
                None => (0..heads.len()).collect(),
                Some(&prev) => down[prev].clone(),
            };
            for i in choices {
                stack.push(i);
                go(heads, down, r, stack, out);
                stack.pop();
            }
        }
        if r > 0 {
            go(&heads, &down, r, &mut stack, &mut out);
        }
        out
    }
}

/// Larger entry sum first, then lexicographically larger. Refines the
/// Bruhat order, since `a > b` forces a strictly larger entry sum.
pub(crate) fn descending_linear_extension(a: &GrassmannWord, b: &GrassmannWord) -> Ordering {
    let sa: usize = a.entries().iter().sum();
    let sb: usize = b.entries().iter().sum();
    sb.cmp(&sa).then_with(|| b.cmp(a))
}

/// A sequence of heads `(theta_1, ..., theta_r)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeadSequence(pub Vec<GrassmannWord>);

impl HeadSequence {
    pub fn heads(&self) -> &[GrassmannWord] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `theta_1 >= ... >= theta_r`.
    pub fn is_standard(&self) -> bool {
        self.0.windows(2).all(|p| p[0].geq(&p[1]))
    }
}

impl fmt::Display for HeadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.0 {
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of comparing two sequences under `>=_str`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StrOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl StrOrder {
    pub fn is_geq(self) -> bool {
        matches!(self, StrOrder::Greater | StrOrder::Equal)
    }
}

/// Lexicographic comparison with Bruhat order at each position. The first
/// differing position decides; if its entries are incomparable so are the
/// sequences.
pub fn str_compare(a: &HeadSequence, b: &HeadSequence) -> Result<StrOrder> {
    if a.len() != b.len() {
        return invalid(format!("sequences of length {} and {} cannot be compared", a.len(), b.len()));
    }
    Ok(str_compare_words(&a.0, &b.0))
}

pub(crate) fn str_compare_words(a: &[GrassmannWord], b: &[GrassmannWord]) -> StrOrder {
    match a.iter().zip(b).find(|(x, y)| x != y) {
        None => StrOrder::Equal,
        Some((x, y)) if y.leq(x) => StrOrder::Greater,
        Some((x, y)) if x.leq(y) => StrOrder::Less,
        Some(_) => StrOrder::Incomparable,
    }
}
