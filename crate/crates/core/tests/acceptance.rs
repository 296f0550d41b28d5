//! Acceptance suite: one PASS/FAIL line per criterion, then a non-zero exit
//! if any criterion failed. All comparisons are exact; the only tolerances
//! are the wall-clock budgets below.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use schubert_core::decompose::{check_monomials, decompose_degree};
use schubert_core::lr::{
    character_sum, lr_coefficient, skew_weyl_decomposition, weyl_character, weyl_dimension,
    weyl_dimension_by_enumeration, Character,
};
use schubert_core::partition::{Partition, SkewShape};
use schubert_core::sphericity::{classify, empirical_multiplicity_check, TheoremVerdict};
use schubert_core::straighten::{chevalley_action, oracle_agreements, restrict_to_schubert};
use schubert_core::tableau::{block_restriction, tableau_of_monomial};
use schubert_core::{
    str_compare, straighten, Direction, GrassmannWord, LeviContext, PluckerMonomial, SchubertContext, StandardExpansion,
};

const BUDGET_EXAMPLE: Duration = Duration::from_secs(1);
const BUDGET_SWEEP: Duration = Duration::from_secs(600);
const BUDGET_ORACLE: Duration = Duration::from_secs(30);
const BUDGET_HEAD_ORDER: Duration = Duration::from_secs(120);
const BUDGET_LR: Duration = Duration::from_secs(30);
const BUDGET_SPHERICAL: Duration = Duration::from_secs(300);

const ORACLE_TRIALS: usize = 100;
const ORACLE_SEED: u64 = 20_241_018;

type Outcome = Result<String, String>;

fn word(s: &str) -> GrassmannWord {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn running_levi() -> LeviContext {
    LeviContext::of_stabilizer(SchubertContext::new(9, 3, word("3,6,9")).unwrap())
}

fn subsets(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    (0..1u32 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

/// Every `(w, R_Q)` with `N <= max_n`, `d <= max_d`, `R_Q` inside the
/// stabilizer of `w`.
fn levi_grid(max_n: usize, max_d: usize) -> Vec<LeviContext> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 1..=max_d.min(n - 1) {
            for w in SchubertContext::all_words(n, d) {
                let ctx = SchubertContext::new(n, d, w).unwrap();
                for r_q in subsets(&ctx.stabilizer_set()) {
                    out.push(LeviContext::new(ctx.clone(), r_q).unwrap());
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let levi = running_levi();
    let r_q: Vec<usize> = levi.r_q().iter().copied().collect();
    ensure(r_q == [1, 2, 4, 5, 7, 8], || format!("R_Q = {r_q:?}"))?;
    ensure(levi.blocks() == [1..=3, 4..=6, 7..=9], || format!("blocks {:?}", levi.blocks()))?;
    let heads: Vec<String> = levi.heads().iter().map(ToString::to_string).collect();
    let expected = ["(1,2,3)", "(2,3,6)", "(2,3,9)", "(3,5,6)", "(3,6,9)"];
    ensure(heads == expected, || format!("heads {heads:?}"))?;
    let class = levi.class_of(&word("2,3,6")).map_err(|e| e.to_string())?;
    ensure(class == [1, 1, 2], || format!("class of (2,3,6) = {class:?}"))?;
    Ok("R_Q, blocks, 5 heads, Cl_(2,3,6) = (1,1,2)".into())
}

fn criterion_2() -> Outcome {
    let levi = running_levi();
    let parts = levi.hasse_partition();
    ensure(parts.len() == 5, || format!("{} components", parts.len()))?;
    let tops: Vec<&GrassmannWord> = parts.keys().collect();
    ensure(tops.iter().map(|t| t.to_string()).eq(levi.heads().iter().map(|h| h.to_string())), || {
        format!("component maxima {tops:?}")
    })?;
    for (tau, head) in [("2,5,9", "3,6,9"), ("1,2,4", "2,3,6")] {
        let members = &parts[&word(head)];
        ensure(members.contains(&word(tau)), || format!("({tau}) not in component of ({head})"))?;
    }
    let covered: usize = parts.values().map(Vec::len).sum();
    ensure(covered == levi.ctx().lower_interval().len(), || "components do not cover H_w".into())?;
    Ok("5 components with the heads as maxima; spot checks hold".into())
}

fn criterion_3() -> Outcome {
    let levi = running_levi();
    let t = tableau_of_monomial(&[word("3,5,9"), word("2,3,8"), word("1,2,4")]).map_err(|e| e.to_string())?;
    let expected = [("(3,2)/\u{2205}", "1 2 3\n2 3"), ("(2,1)/(1)", "\u{b7} 2\n1"), ("(2)/\u{2205}", "2 3")];
    for (k, (shape, grid)) in expected.iter().enumerate() {
        let block = block_restriction(&t, &levi, k + 1).map_err(|e| e.to_string())?;
        ensure(block.shape().to_string() == *shape, || format!("block {}: shape {}", k + 1, block.shape()))?;
        ensure(block.to_string() == *grid, || format!("block {}: filling\n{block}", k + 1))?;
    }
    Ok("shapes (3,2)/∅, (2,1)/(1), (2)/∅ with the expected fillings".into())
}

struct SweepStats {
    contexts: usize,
    reports: usize,
    dimension_failures: Vec<String>,
    psi_failures: Vec<String>,
    character_failures: Vec<String>,
}

fn run_sweep() -> SweepStats {
    let grid = levi_grid(7, 3);
    let results: Vec<(Vec<String>, Vec<String>, Vec<String>)> = grid
        .par_iter()
        .map(|levi| {
            let (mut dims, mut psi, mut chars) = (Vec::new(), Vec::new(), Vec::new());
            for r in 1..=3 {
                let tag = || format!("N={} w={} R_Q={:?} r={r}", levi.ctx().n(), levi.ctx().w(), levi.r_q());
                let report = decompose_degree(levi, r);
                if let Err(e) = report.verify(levi) {
                    dims.push(format!("{}: {e}", tag()));
                }
                let check = check_monomials(levi, r);
                if !check.psi_bijective {
                    psi.push(format!("{}: {:?}", tag(), check.failures));
                }
                if !check.character_matches {
                    chars.push(format!("{}: {:?}", tag(), check.failures));
                }
            }
            (dims, psi, chars)
        })
        .collect();
    let mut stats = SweepStats {
        contexts: grid.len(),
        reports: grid.len() * 3,
        dimension_failures: Vec::new(),
        psi_failures: Vec::new(),
        character_failures: Vec::new(),
    };
    for (a, b, c) in results {
        stats.dimension_failures.extend(a);
        stats.psi_failures.extend(b);
        stats.character_failures.extend(c);
    }
    stats
}

fn criterion_4(stats: &SweepStats) -> Outcome {
    ensure(stats.dimension_failures.is_empty(), || {
        format!("{} failures, first: {}", stats.dimension_failures.len(), stats.dimension_failures[0])
    })?;
    Ok(format!(
        "{} (w, R_Q) contexts x r <= 3: {} reports match the standard monomial count",
        stats.contexts, stats.reports
    ))
}

fn criterion_5() -> Outcome {
    let levi = running_levi();
    let report = decompose_degree(&levi, 1);
    let dims: Vec<String> = report.entries.iter().map(|e| e.tensor_dim.to_string()).collect();
    let mut sorted: Vec<u64> = dims.iter().map(|s| s.parse().unwrap()).collect();
    sorted.sort();
    ensure(sorted == [1, 9, 9, 9, 27], || format!("dims {dims:?}"))?;
    ensure(report.total_dim == BigUint::from(55u32), || format!("total {}", report.total_dim))?;
    let h_w = levi.ctx().lower_interval().len();
    ensure(h_w == 55, || format!("|H_w| = {h_w}"))?;
    Ok(format!("tensor dims ({}) total 55 = |H_w|", dims.join(", ")))
}

fn criterion_6() -> Outcome {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 2..=6 {
        for d in 1..n {
            let words = SchubertContext::all_words(n, d);
            let pairs: Vec<PluckerMonomial> = words
                .iter()
                .flat_map(|a| words.iter().map(move |b| (a, b)))
                .filter(|(a, b)| !a.geq(b))
                .map(|(a, b)| PluckerMonomial::new(vec![a.clone(), b.clone()]).unwrap())
                .collect();
            let bad: Vec<String> = pairs
                .par_iter()
                .filter_map(|m| {
                    let e = straighten(m);
                    let ok = oracle_agreements(m, &e, n, ORACLE_SEED, ORACLE_TRIALS);
                    (ok != ORACLE_TRIALS).then(|| format!("{m}: {ok}/{ORACLE_TRIALS}"))
                })
                .collect();
            checked += pairs.len();
            failures.extend(bad);
        }
    }
    ensure(failures.is_empty(), || format!("{} mismatches, first {}", failures.len(), failures[0]))?;
    Ok(format!("{checked} nonstandard degree-2 monomials x {ORACLE_TRIALS} matrices, all exact"))
}

/// Straightening is independent of `w` and the Levi, so one cache serves the
/// whole `(N, d)` slice.
struct StraightenCache(HashMap<PluckerMonomial, StandardExpansion>);

impl StraightenCache {
    fn get(&mut self, m: &PluckerMonomial) -> &StandardExpansion {
        self.0.entry(m.clone()).or_insert_with(|| straighten(m))
    }
}

fn all_sequences(words: &[GrassmannWord], r: usize) -> Vec<Vec<GrassmannWord>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                words.iter().map(move |w| {
                    let mut next = prefix.clone();
                    next.push(w.clone());
                    next
                })
            })
            .collect();
    }
    out
}

fn criterion_7() -> Outcome {
    let slices: Vec<(usize, usize)> = (2..=6).flat_map(|n| (1..n).map(move |d| (n, d))).collect();
    let results: Vec<(usize, usize, Vec<String>)> = slices
        .par_iter()
        .map(|&(n, d)| {
            let mut cache = StraightenCache(HashMap::new());
            let mut failures = Vec::new();
            let (mut order_checks, mut stability_checks) = (0, 0);
            let full = SchubertContext::full(n, d).unwrap();
            let words = SchubertContext::all_words(n, d);
            let levis: Vec<LeviContext> = subsets(&full.stabilizer_set())
                .into_iter()
                .map(|r_q| LeviContext::new(full.clone(), r_q).unwrap())
                .collect();
            // head order: every factor sequence of degree <= 3, every Levi
            for r in 1..=3 {
                for seq in all_sequences(&words, r) {
                    let m = PluckerMonomial::new(seq).unwrap();
                    let e = cache.get(&m).clone();
                    for levi in &levis {
                        let input = levi.head_sequence_of(m.factors());
                        for (term, _) in e.iter() {
                            order_checks += 1;
                            let out = levi.head_sequence_of(term.factors());
                            if !str_compare(&out, &input).unwrap().is_geq() {
                                failures.push(format!("{m} -> {term} under R_Q={:?}", levi.r_q()));
                            }
                        }
                    }
                }
            }
            // L-stability: standard monomials of every X(w), every R_Q, i in R_Q
            for w in &words {
                let ctx = SchubertContext::new(n, d, w.clone()).unwrap();
                let stab = ctx.stabilizer_set();
                for r in 1..=3 {
                    for std in ctx.std_monomials(r) {
                        let m = PluckerMonomial::new(std).unwrap();
                        for i in &stab {
                            for dir in [Direction::Raise, Direction::Lower] {
                                for image in chevalley_action(*i, &m, dir) {
                                    let e = restrict_to_schubert(cache.get(&image), w);
                                    for r_q in subsets(&stab).into_iter().filter(|s| s.contains(i)) {
                                        let levi = LeviContext::new(ctx.clone(), r_q).unwrap();
                                        let theta = levi.head_sequence_of(m.factors());
                                        for (term, _) in e.iter() {
                                            stability_checks += 1;
                                            let out = levi.head_sequence_of(term.factors());
                                            if !str_compare(&out, &theta).unwrap().is_geq() {
                                                failures.push(format!("X_{i} {m} -> {term} in X({w})"));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            (order_checks, stability_checks, failures)
        })
        .collect();
    let order: usize = results.iter().map(|r| r.0).sum();
    let stability: usize = results.iter().map(|r| r.1).sum();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.2).collect();
    ensure(failures.is_empty(), || format!("{} violations, first {}", failures.len(), failures[0]))?;
    Ok(format!("{order} head-order and {stability} L-stability term checks"))
}

fn criterion_8(stats: &SweepStats) -> Outcome {
    ensure(stats.psi_failures.is_empty(), || {
        format!("Psi: {} failures, first {}", stats.psi_failures.len(), stats.psi_failures[0])
    })?;
    ensure(stats.character_failures.is_empty(), || {
        format!("character: {} failures, first {}", stats.character_failures.len(), stats.character_failures[0])
    })?;
    Ok(format!("Psi bijective and characters equal on all {} reports", stats.reports))
}

fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(Partition::all_of_size).collect()
}

fn criterion_9() -> Outcome {
    let all = partitions_up_to(8);
    let pairs: Vec<SkewShape> = all
        .iter()
        .flat_map(|lam| {
            all.iter().filter(|mu| lam.contains(mu)).map(|mu| SkewShape::new(lam.clone(), mu.clone()).unwrap())
        })
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|sh| {
            let mut bad = Vec::new();
            let decomposition = skew_weyl_decomposition(sh);
            let rotated = sh.pi_rotation();
            for n in 1..=5 {
                let dim = weyl_dimension(sh, n);
                let by_lr: BigUint =
                    decomposition.iter().map(|(nu, c)| weyl_dimension(&SkewShape::straight(nu.clone()), n) * *c).sum();
                if by_lr != dim {
                    bad.push(format!("{sh} n={n}: LR sum {by_lr} vs {dim}"));
                }
                if weyl_dimension_by_enumeration(sh, n) != dim {
                    bad.push(format!("{sh} n={n}: determinant disagrees with enumeration"));
                }
                if weyl_dimension(&rotated, n) != dim {
                    bad.push(format!("{sh} n={n}: rotation changes the dimension"));
                }
                if weyl_character(&rotated, n) != weyl_character(sh, n) {
                    bad.push(format!("{sh} n={n}: rotation changes the character"));
                }
                if n <= 4 {
                    let parts: Vec<(Character, u64)> = decomposition
                        .iter()
                        .map(|(nu, c)| (weyl_character(&SkewShape::straight(nu.clone()), n), *c))
                        .collect();
                    if character_sum(parts.iter().map(|(ch, c)| (ch, *c))) != weyl_character(sh, n) {
                        bad.push(format!("{sh} n={n}: character is not the LR sum"));
                    }
                }
            }
            for nu in Partition::all_of_size(sh.size()) {
                if lr_coefficient(&sh.outer, &sh.inner, &nu) != lr_coefficient(&sh.outer, &nu, &sh.inner) {
                    bad.push(format!("{sh}: c^lambda_(mu,nu) != c^lambda_(nu,mu) for nu={nu}"));
                }
            }
            bad
        })
        .collect();
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let small = skew_weyl_decomposition(&SkewShape::new(p(&[2, 1]), p(&[1])).unwrap());
    let expected = BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]);
    ensure(small == expected, || format!("s_(2,1)/(1) = {small:?}"))?;
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    Ok(format!("{} skew shapes with |lambda| <= 8, n <= 5; s_(2,1)/(1) = s_(2) + s_(1,1)", pairs.len()))
}

fn single_constituent_per_degree(levi: &LeviContext, max_degree: usize) -> Result<(), String> {
    for r in 1..=max_degree {
        let report = decompose_degree(levi, r);
        let labels = report.multiplicities();
        if report.entries.len() != 1 || labels.len() != 1 || labels.values().any(|&m| m != 1) {
            return Err(format!("w={} r={r}: {} heads, constituents {labels:?}", levi.ctx().w(), report.entries.len()));
        }
    }
    Ok(())
}

#[derive(Default)]
struct Tally {
    smooth: usize,
    determinantal: usize,
    gr2: usize,
    certified: usize,
    uncovered: usize,
    uncovered_free: usize,
    failures: Vec<String>,
}

fn criterion_10() -> Outcome {
    let contexts: Vec<SchubertContext> = (2..=8)
        .flat_map(|n| (1..n).flat_map(move |d| SchubertContext::all_words(n, d).into_iter().map(move |w| (n, d, w))))
        .map(|(n, d, w)| SchubertContext::new(n, d, w).unwrap())
        .collect();
    let tallies: Vec<Tally> = contexts
        .par_iter()
        .map(|ctx| {
            let v = classify(ctx);
            let levi = LeviContext::of_stabilizer(ctx.clone());
            let mut t = Tally::default();
            if v.smooth_form.is_some() {
                t.smooth += 1;
                if let Err(e) = single_constituent_per_degree(&levi, 4) {
                    t.failures.push(format!("smooth {e}"));
                }
            }
            if v.determinantal_form.is_some() {
                t.determinantal += 1;
                if v.block_count != 2 {
                    t.failures.push(format!("determinantal {} has {} blocks", ctx.w(), v.block_count));
                }
            }
            if ctx.d() == 2 {
                t.gr2 += 1;
            }
            let certified = v.theorem_verdict == TheoremVerdict::MultiplicityFreeCertified;
            if (v.determinantal_form.is_some() || ctx.d() == 2) && !certified {
                t.failures.push(format!("{} in Gr({},{}) not certified", ctx.w(), ctx.d(), ctx.n()));
            }
            let e = empirical_multiplicity_check(&levi, 3);
            if certified {
                t.certified += 1;
                if !e.multiplicity_free_up_to_bound {
                    t.failures.push(format!("{} certified but {:?}", ctx.w(), e.first_violation));
                }
            } else {
                t.uncovered += 1;
                t.uncovered_free += usize::from(e.multiplicity_free_up_to_bound);
            }
            t
        })
        .collect();
    let sum = |f: fn(&Tally) -> usize| tallies.iter().map(f).sum::<usize>();
    let failures: Vec<&String> = tallies.iter().flat_map(|t| &t.failures).collect();
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    Ok(format!(
        "{} smooth (r <= 4), {} determinantal, {} Gr(2,N); {} certified words multiplicity-free to r = 3 \
         ({} of {} uncovered words also are)",
        sum(|t| t.smooth),
        sum(|t| t.determinantal),
        sum(|t| t.gr2),
        sum(|t| t.certified),
        sum(|t| t.uncovered_free),
        sum(|t| t.uncovered)
    ))
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut report = |id: usize, title: &str, budget: Duration, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        all_pass &= pass;
        println!(
            "[{}] criterion {id:>2} {title}: {detail} ({:.2}s, budget {}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    };

    report(1, "heads of the running example", BUDGET_EXAMPLE, &mut criterion_1);
    report(2, "Hasse partition of the running example", BUDGET_EXAMPLE, &mut criterion_2);
    report(3, "skew tableau extraction", BUDGET_EXAMPLE, &mut criterion_3);
    let mut sweep = None;
    report(4, "dimension identity sweep", BUDGET_SWEEP, &mut || {
        let stats = run_sweep();
        let outcome = criterion_4(&stats);
        sweep = Some(stats);
        outcome
    });
    report(5, "running example degree-1 total", BUDGET_EXAMPLE, &mut criterion_5);
    report(6, "straightening oracle", BUDGET_ORACLE, &mut criterion_6);
    report(7, "head order and L-stability", BUDGET_HEAD_ORDER, &mut criterion_7);
    report(8, "Psi bijection and characters", BUDGET_SWEEP, &mut || criterion_8(sweep.as_ref().unwrap()));
    report(9, "Littlewood-Richardson consistency", BUDGET_LR, &mut criterion_9);
    report(10, "multiplicity-freeness certifications", BUDGET_SPHERICAL, &mut criterion_10);

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
