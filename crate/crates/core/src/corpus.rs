//! Seeded instance generators and batch verification.
//!
//! Instances are drawn sequentially from one ChaCha stream, then evaluated in
//! parallel; results come back in instance order, so a run is a function of
//! its parameters alone.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    verify_eg_inequality_from, verify_main_bound_from, verify_prop_3_1, verify_prop_3_3,
    verify_prop_3_4, BoundName, BoundReport, QuotientInvariants, Status, VerifyOptions,
};
use crate::error::Result;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialInstance {
    pub id: String,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupInstance {
    pub id: String,
    pub ideal: SemigroupIdeal,
}

/// A plane ideal with a monomial parameter reduction `(x^a, y^b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneInstance {
    pub id: String,
    pub ideal: MonomialIdeal,
    pub reduction: MonomialIdeal,
}

/// Shape of a monomial corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub min_vars: usize,
    pub max_vars: usize,
    pub max_exponent: u32,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize, min_vars: usize, max_vars: usize, max_exponent: u32) -> Self {
        CorpusSpec {
            seed,
            count,
            min_vars,
            max_vars: max_vars.max(min_vars),
            max_exponent: max_exponent.max(1),
        }
    }
}

fn random_monomial_below(rng: &mut ChaCha8Rng, caps: &[u32]) -> Monomial {
    Monomial::new(caps.iter().map(|&c| rng.gen_range(0..c)).collect())
}

/// m-primary ideals: a pure power of each variable plus up to three random
/// mixed monomials (at least two variables present) under that staircase.
pub fn primary_corpus(spec: &CorpusSpec) -> Vec<MonomialInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            let k = rng.gen_range(spec.min_vars..=spec.max_vars);
            let caps: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=spec.max_exponent)).collect();
            let mut gens: Vec<Monomial> = caps
                .iter()
                .enumerate()
                .map(|(j, &a)| Monomial::pure_power(k, j, a))
                .collect();
            for _ in 0..rng.gen_range(0..=3) {
                let g = random_monomial_below(&mut rng, &caps);
                if g.exponents().iter().filter(|&&e| e > 0).count() >= 2 {
                    gens.push(g);
                }
            }
            MonomialInstance {
                id: format!("p{}-{i}", spec.seed),
                ideal: MonomialIdeal::new(k, gens).expect("generators share a ring"),
            }
        })
        .collect()
}

/// Arbitrary proper monomial ideals with one to four generators, so that
/// quotients of every dimension appear.
pub fn quotient_corpus(spec: &CorpusSpec) -> Vec<MonomialInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x5175_6f74);
    (0..spec.count)
        .map(|i| {
            let k = rng.gen_range(spec.min_vars..=spec.max_vars);
            let caps = vec![spec.max_exponent + 1; k];
            let ngens = rng.gen_range(1..=4);
            let mut gens = Vec::with_capacity(ngens);
            while gens.len() < ngens {
                let g = random_monomial_below(&mut rng, &caps);
                if !g.is_one() {
                    gens.push(g);
                }
            }
            MonomialInstance {
                id: format!("q{}-{i}", spec.seed),
                ideal: MonomialIdeal::new(k, gens).expect("generators share a ring"),
            }
        })
        .collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    num_integer::Integer::gcd(&a, &b)
}

/// Numerical semigroups with two to four generators in `[3, 15]` and an
/// m-primary ideal given by one to three nonzero elements.
pub fn semigroup_corpus(seed: u64, count: usize) -> Vec<SemigroupInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7365_6d69);
    (0..count)
        .map(|i| {
            let s = loop {
                let g = rng.gen_range(2..=4);
                let gens: Vec<u32> = (0..g).map(|_| rng.gen_range(3..=15)).collect();
                if gens.iter().copied().fold(0, gcd) == 1 {
                    break NumericalSemigroup::new(&gens).expect("gcd one");
                }
            };
            let limit = s.conductor() + 2 * s.multiplicity();
            let members: Vec<u32> = (1..=limit).filter(|&x| s.contains(x)).collect();
            let n = rng.gen_range(1..=3).min(members.len());
            let picks: Vec<u32> = members.choose_multiple(&mut rng, n).copied().collect();
            SemigroupInstance {
                id: format!("s{seed}-{i}"),
                ideal: SemigroupIdeal::new(&s, &picks).expect("nonzero elements of S"),
            }
        })
        .collect()
}

/// Ideals `(x^a, y^b) + (monomials on or above the segment)`, for which
/// `(x^a, y^b)` is a reduction.
pub fn plane_corpus(seed: u64, count: usize, max_exponent: u32) -> Vec<PlaneInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x706c_616e);
    let top = max_exponent.max(2);
    (0..count)
        .map(|i| {
            let a = rng.gen_range(1..=top);
            let b = rng.gen_range(1..=top);
            let reduction = MonomialIdeal::new(2, [Monomial::new(vec![a, 0]), Monomial::new(vec![0, b])])
                .expect("plane");
            let mut gens = reduction.gens().to_vec();
            for _ in 0..rng.gen_range(0..=3) {
                let u = rng.gen_range(0..a);
                let v = rng.gen_range(0..b);
                // integral over (x^a, y^b) iff u/a + v/b ≥ 1
                if u * b + v * a >= a * b {
                    gens.push(Monomial::new(vec![u, v]));
                }
            }
            PlaneInstance {
                id: format!("l{seed}-{i}"),
                ideal: MonomialIdeal::new(2, gens).expect("plane"),
                reduction,
            }
        })
        .collect()
}

/// Counts and gap extremes over a batch of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
    pub violations: usize,
    pub max_gap: Option<i64>,
    pub min_gap: Option<i64>,
}

impl Aggregate {
    pub fn of(reports: &[BoundReport]) -> Self {
        let mut agg = Aggregate {
            total: reports.len(),
            ..Default::default()
        };
        for s in [
            Status::Holds,
            Status::Sharp,
            Status::HypothesisUnverified,
            Status::Skipped,
            Status::Violated,
        ] {
            agg.counts.insert(s.as_str().to_string(), 0);
        }
        for r in reports {
            *agg.counts.get_mut(r.status.as_str()).expect("all statuses present") += 1;
            if r.is_verified() {
                let g = r.gap.expect("verified reports carry a gap");
                agg.max_gap = Some(agg.max_gap.map_or(g, |m| m.max(g)));
                agg.min_gap = Some(agg.min_gap.map_or(g, |m| m.min(g)));
            }
        }
        agg.violations = agg.counts["violated"];
        agg
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub bound: BoundName,
    pub reports: Vec<BoundReport>,
    pub aggregate: Aggregate,
}

impl CorpusReport {
    fn new(bound: BoundName, reports: Vec<BoundReport>) -> Self {
        CorpusReport {
            bound,
            aggregate: Aggregate::of(&reports),
            reports,
        }
    }
}

/// The main bound and the Eisenbud-Goto inequality on one quotient corpus,
/// sharing the cohomology computation.
pub fn run_quotient_bounds(spec: &CorpusSpec) -> Result<(CorpusReport, CorpusReport)> {
    let instances = quotient_corpus(spec);
    let pairs: Vec<(BoundReport, BoundReport)> = instances
        .par_iter()
        .map(|inst| {
            let inv = QuotientInvariants::compute(&inst.ideal)?;
            Ok((
                verify_main_bound_from(&inst.id, &inv)?,
                verify_eg_inequality_from(&inst.id, &inv)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let (main, eg): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    Ok((
        CorpusReport::new(BoundName::MainBound, main),
        CorpusReport::new(BoundName::EgLower, eg),
    ))
}

/// Runs one bound over its natural corpus.
///
/// `thm2.1` and `eg-lower` use [`quotient_corpus`]; `prop3.1` uses
/// [`semigroup_corpus`]; `prop3.3` and `prop3.4` use [`primary_corpus`] in
/// two and three variables.
pub fn run_corpus(bound: BoundName, spec: &CorpusSpec, opts: &VerifyOptions) -> Result<CorpusReport> {
    match bound {
        BoundName::MainBound => Ok(run_quotient_bounds(spec)?.0),
        BoundName::EgLower => Ok(run_quotient_bounds(spec)?.1),
        BoundName::DimOne => {
            let reports = semigroup_corpus(spec.seed, spec.count)
                .par_iter()
                .map(|inst| verify_prop_3_1(&inst.id, &inst.ideal))
                .collect::<Result<Vec<_>>>()?;
            Ok(CorpusReport::new(bound, reports))
        }
        BoundName::DimTwo | BoundName::HighDim => {
            let k = if bound == BoundName::DimTwo { 2 } else { 3 };
            let shaped = CorpusSpec::new(spec.seed, spec.count, k, k, spec.max_exponent);
            let reports = primary_corpus(&shaped)
                .par_iter()
                .map(|inst| match bound {
                    BoundName::DimTwo => verify_prop_3_3(&inst.id, &inst.ideal, opts),
                    _ => verify_prop_3_4(&inst.id, &inst.ideal, opts),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CorpusReport::new(bound, reports))
        }
    }
}
