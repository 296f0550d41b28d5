//! Degree-by-degree decomposition of `C[X(w)]_r` into irreducible modules of
//! a Levi subgroup, one summand per standard head sequence.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grassmann::{GrassmannWord, SchubertContext};
use crate::levi::{HeadSequence, LeviContext};
use crate::lr::{
    character_product, skew_decomposition_bounded, weyl_character, weyl_dimension, Character, WeightVector,
};
use crate::partition::{Partition, SkewShape};
use crate::tableau::{count_ssyt, psi, reconstruct_monomial, shapes_of_head};

/// One irreducible constituent `(W^{nu(1)} x ... x W^{nu(s)})^*` of degree
/// `r`, labelled by its pre-dual partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrreducibleLabel {
    pub parts: Vec<Partition>,
    pub degree: usize,
}

/// The module attached to one head sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadModule {
    pub shapes: Vec<SkewShape>,
    pub tensor_dim: BigUint,
    /// pre-dual partition tuples with their multiplicities
    pub constituents: BTreeMap<Vec<Partition>, u64>,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub parts: Vec<Partition>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub heads: HeadSequence,
    pub shapes: Vec<SkewShape>,
    #[serde(with = "decimal")]
    pub tensor_dim: BigUint,
    pub constituents: Vec<Constituent>,
}

/// The summands of `C[X(w)]_r`. Constituent labels are the partitions of
/// the Weyl modules whose duals occur.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: usize,
    pub w: GrassmannWord,
    pub r_q: Vec<usize>,
    pub degree: usize,
    pub entries: Vec<ReportEntry>,
    #[serde(with = "decimal")]
    pub total_dim: BigUint,
}

impl DecompositionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    /// Every constituent with its multiplicity summed over head sequences.
    pub fn multiplicities(&self) -> BTreeMap<IrreducibleLabel, u64> {
        let mut out = BTreeMap::new();
        for c in self.entries.iter().flat_map(|e| &e.constituents) {
            let label = IrreducibleLabel { parts: c.parts.clone(), degree: self.degree };
            *out.entry(label).or_insert(0) += c.multiplicity;
        }
        out
    }

    /// Checks the dimension identities: the total equals the number of
    /// standard monomials, each entry is the product of its skew dimensions,
    /// and the constituents account for each entry's dimension.
    pub fn verify(&self, levi: &LeviContext) -> std::result::Result<(), String> {
        let expected = levi.ctx().count_std_monomials(self.degree);
        if self.total_dim != expected {
            return Err(format!("total_dim {} but {} standard monomials", self.total_dim, expected));
        }
        let sizes = levi.block_sizes();
        let mut sum = BigUint::ZERO;
        for e in &self.entries {
            let product: BigUint = e.shapes.iter().zip(&sizes).map(|(sh, &n)| weyl_dimension(sh, n)).product();
            if product != e.tensor_dim {
                return Err(format!("{}: tensor_dim {} but shapes give {}", e.heads, e.tensor_dim, product));
            }
            let from_constituents: BigUint =
                e.constituents.iter().map(|c| straight_dims(&c.parts, &sizes) * c.multiplicity).sum();
            if from_constituents != e.tensor_dim {
                return Err(format!("{}: constituents give {} not {}", e.heads, from_constituents, e.tensor_dim));
            }
            sum += &e.tensor_dim;
        }
        if sum != self.total_dim {
            return Err(format!("entries sum to {sum}, total_dim is {}", self.total_dim));
        }
        Ok(())
    }
}

fn straight_dims(parts: &[Partition], sizes: &[usize]) -> BigUint {
    parts.iter().zip(sizes).map(|(nu, &n)| weyl_dimension(&SkewShape::straight(nu.clone()), n)).product()
}

/// Shapes, dimension, and irreducible constituents of the summand for `theta`.
pub fn module_of_head(theta: &HeadSequence, levi: &LeviContext) -> Result<HeadModule> {
    let shapes = shapes_of_head(theta, levi)?;
    let sizes = levi.block_sizes();
    let tensor_dim = shapes.iter().zip(&sizes).map(|(sh, &n)| weyl_dimension(sh, n)).product();
    let mut constituents = BTreeMap::from([(Vec::new(), 1u64)]);
    for (sh, &n) in shapes.iter().zip(&sizes) {
        let block = skew_decomposition_bounded(sh, n);
        let mut next = BTreeMap::new();
        for (prefix, m) in &constituents {
            for (nu, c) in &block {
                let mut parts: Vec<Partition> = prefix.clone();
                parts.push(nu.clone());
                *next.entry(parts).or_insert(0) += m * c;
            }
        }
        constituents = next;
    }
    Ok(HeadModule { shapes, tensor_dim, constituents })
}

/// The report for degree `r`, one entry per standard head sequence in the
/// order of [`LeviContext::standard_head_sequences`].
pub fn decompose_degree(levi: &LeviContext, r: usize) -> DecompositionReport {
    let entries: Vec<ReportEntry> = levi
        .standard_head_sequences(r)
        .into_par_iter()
        .map(|theta| {
            let m = module_of_head(&theta, levi).expect("standard head sequences have valid shapes");
            ReportEntry {
                heads: theta,
                shapes: m.shapes,
                tensor_dim: m.tensor_dim,
                constituents: m
                    .constituents
                    .into_iter()
                    .map(|(parts, multiplicity)| Constituent { parts, multiplicity })
                    .collect(),
            }
        })
        .collect();
    let total_dim = entries.iter().map(|e| &e.tensor_dim).sum();
    let ctx = levi.ctx();
    DecompositionReport {
        n: ctx.n(),
        d: ctx.d(),
        w: ctx.w().clone(),
        r_q: levi.r_q().iter().copied().collect(),
        degree: r,
        entries,
        total_dim,
    }
}

/// Branching of `(W^{(r^d)})^*` from `GL_N` to the Levi with the given
/// block sizes.
pub fn branching_of_rectangle(block_sizes: &[usize], d: usize, r: usize) -> Result<DecompositionReport> {
    let n = block_sizes.iter().sum();
    let levi = LeviContext::from_block_sizes(SchubertContext::full(n, d)?, block_sizes)?;
    Ok(decompose_degree(&levi, r))
}

/// Outcome of checking the standard monomials of one degree against the
/// per-head tableau data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCheck {
    /// `Psi` lands in the expected shapes, is inverted by `Phi`, and each
    /// head's monomial count equals its tableau count.
    pub psi_bijective: bool,
    /// Monomial weights match the block characters of every head.
    pub character_matches: bool,
    pub failures: Vec<String>,
}

/// Weight of a monomial: minus the number of occurrences of each value.
fn monomial_weight(factors: &[GrassmannWord], n: usize) -> WeightVector {
    let mut w = vec![0i64; n];
    for x in factors.iter().flat_map(|f| f.entries()) {
        w[x - 1] -= 1;
    }
    WeightVector(w)
}

fn negate(ch: Character) -> Character {
    ch.into_iter().map(|(w, c)| (WeightVector(w.0.into_iter().map(|x| -x).collect()), c)).collect()
}

/// Enumerates `Std_r` and checks `Psi` and the character identity for
/// every head sequence.
pub fn check_monomials(levi: &LeviContext, r: usize) -> MonomialCheck {
    let n = levi.ctx().n();
    let sizes = levi.block_sizes();
    let mut by_head: BTreeMap<HeadSequence, Vec<Vec<GrassmannWord>>> = BTreeMap::new();
    for m in levi.ctx().std_monomials(r) {
        by_head.entry(levi.head_sequence_of(&m)).or_default().push(m);
    }
    let thetas = levi.standard_head_sequences(r);
    let mut check = MonomialCheck { psi_bijective: true, character_matches: true, failures: Vec::new() };
    if by_head.len() != thetas.len() || thetas.iter().any(|t| !by_head.contains_key(t)) {
        check.psi_bijective = false;
        check.failures.push("head sequences of Std_r differ from the standard head sequences".into());
    }
    let results: Vec<(bool, bool, Option<String>)> = thetas
        .par_iter()
        .map(|theta| {
            let Some(monomials) = by_head.get(theta) else {
                return (false, false, Some(format!("{theta}: no monomials")));
            };
            let shapes = shapes_of_head(theta, levi).expect("standard head sequence");
            let mut bijective = true;
            let mut note = None;
            for m in monomials {
                let fillings = psi(m, levi).expect("standard monomial");
                let ok = fillings.iter().zip(&shapes).zip(&sizes).all(|((t, sh), &nk)| {
                    t.shape() == sh && t.is_semistandard() && t.rows().iter().flatten().all(|&v| v <= nk)
                }) && reconstruct_monomial(&fillings, theta, levi).ok().as_ref() == Some(m);
                if !ok {
                    bijective = false;
                    note = Some(format!("{theta}: Psi fails on {m:?}"));
                    break;
                }
            }
            let expected: BigUint = shapes.iter().zip(&sizes).map(|(sh, &nk)| count_ssyt(sh, nk)).product();
            if BigUint::from(monomials.len()) != expected {
                bijective = false;
                note.get_or_insert(format!("{theta}: {} monomials, {expected} tableaux", monomials.len()));
            }
            let mut weights = Character::new();
            for m in monomials {
                *weights.entry(monomial_weight(m, n)).or_insert(0) += 1;
            }
            let blocks: Vec<Character> = shapes.iter().zip(&sizes).map(|(sh, &nk)| weyl_character(sh, nk)).collect();
            let character = weights == negate(character_product(&blocks));
            if !character {
                note.get_or_insert(format!("{theta}: character mismatch"));
            }
            (bijective, character, note)
        })
        .collect();
    for (b, c, note) in results {
        check.psi_bijective &= b;
        check.character_matches &= c;
        check.failures.extend(note);
    }
    check
}

/// True when monomial weights match the negated block characters for every
/// head sequence of degree `r`.
pub fn character_check(levi: &LeviContext, r: usize) -> bool {
    check_monomials(levi, r).character_matches
}

/// Dimension of `(W^{(r^d)})^*` for `GL_N`.
pub fn rectangle_dimension(n: usize, d: usize, r: usize) -> BigUint {
    if r == 0 {
        return BigUint::one();
    }
    weyl_dimension(&SkewShape::straight(Partition::rectangle(d, r)), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> GrassmannWord {
        s.parse().unwrap()
    }

    fn running_levi() -> LeviContext {
        LeviContext::of_stabilizer(SchubertContext::new(9, 3, word("3,6,9")).unwrap())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn running_example_degree_one() {
        let levi = running_levi();
        let report = decompose_degree(&levi, 1);
        let dims: Vec<u32> = report.entries.iter().map(|e| e.tensor_dim.clone().try_into().unwrap()).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 9, 9, 9, 27]);
        assert_eq!(report.total_dim, BigUint::from(55u32));
        report.verify(&levi).unwrap();

        let top = &report.entries[0];
        assert_eq!(top.heads, HeadSequence(vec![word("3,6,9")]));
        assert_eq!(top.shapes, vec![SkewShape::straight(p(&[1])); 3]);
        let bottom = report.entries.last().unwrap();
        assert_eq!(bottom.heads, HeadSequence(vec![word("1,2,3")]));
        assert_eq!(bottom.shapes[0], SkewShape::straight(p(&[1, 1, 1])));
        assert_eq!(bottom.tensor_dim, BigUint::one());
    }

    #[test]
    fn single_block_is_the_rectangle() {
        for (n, d) in [(4, 2), (5, 2), (5, 3)] {
            let levi = LeviContext::of_stabilizer(SchubertContext::full(n, d).unwrap());
            for r in 1..=3 {
                let report = decompose_degree(&levi, r);
                assert_eq!(report.entries.len(), 1);
                let c = &report.entries[0].constituents;
                assert_eq!(c, &vec![Constituent { parts: vec![Partition::rectangle(d, r)], multiplicity: 1 }]);
                assert_eq!(report.total_dim, rectangle_dimension(n, d, r));
            }
        }
    }

    #[test]
    fn projective_space() {
        let levi = LeviContext::new(SchubertContext::full(4, 1).unwrap(), [1, 3].into()).unwrap();
        let report = decompose_degree(&levi, 1);
        let heads: Vec<&HeadSequence> = report.entries.iter().map(|e| &e.heads).collect();
        assert_eq!(heads, [&HeadSequence(vec![word("4")]), &HeadSequence(vec![word("2")])]);
        assert_eq!(report.total_dim, BigUint::from(4u32));
    }

    #[test]
    fn branching_examples() {
        let report = branching_of_rectangle(&[2, 2], 2, 1).unwrap();
        assert_eq!(report.total_dim, BigUint::from(6u32));
        let sizes = [2, 2];
        let dim_sum: BigUint = report.multiplicities().iter().map(|(l, m)| straight_dims(&l.parts, &sizes) * *m).sum();
        assert_eq!(dim_sum, BigUint::from(6u32));

        let torus = branching_of_rectangle(&[1, 1, 1, 1], 2, 2).unwrap();
        let count: u64 = torus.multiplicities().values().sum();
        assert_eq!(BigUint::from(count), rectangle_dimension(4, 2, 2));
    }

    #[test]
    fn running_example_monomials() {
        let levi = running_levi();
        for r in 1..=2 {
            let check = check_monomials(&levi, r);
            assert!(check.psi_bijective && check.character_matches, "{:?}", check.failures);
        }
    }

    #[test]
    fn json_round_trip() {
        let report = decompose_degree(&running_levi(), 2);
        let json = report.to_json();
        assert!(json.contains("\"N\": 9") && json.contains("\"total_dim\": \""));
        assert_eq!(DecompositionReport::from_json(&json).unwrap(), report);
    }
}
