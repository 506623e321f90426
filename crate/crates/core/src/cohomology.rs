//! Graded local cohomology `H^i_M(R/I)` of monomial quotients.
//!
//! In multidegree `a ∈ ℤ^k` the Čech complex of `R/I` has one basis vector
//! for each `F ⊆ {1..k}` with `a_j ≥ 0` for `j ∉ F` and no generator `g` of
//! `I` satisfying `g_j ≤ a_j` for all `j ∉ F`. That complex depends only on
//! the negative support `T = {j : a_j < 0}` and the values `min(a_j, ρ_j)`
//! for `j ∉ T`, where `ρ_j` is the largest exponent of `x_j` in a generator.
//! A coordinate at `ρ_j` or beyond makes the complex a cone, so only
//! finitely many orthant classes carry cohomology, and the multidegrees in a
//! class with a given total degree are counted in closed form.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert;
use crate::linalg;
use crate::monomial::{binomial_u64, MonomialIdeal};

/// Negative support plus clamped nonnegative coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthantClass {
    /// Bitmask of variables with negative exponent.
    pub negative: u32,
    /// `values[j]` for `j ∉ T`; ignored (kept 0) for `j ∈ T`.
    pub values: Vec<u32>,
}

impl OrthantClass {
    pub fn new(negative: u32, values: Vec<u32>) -> Self {
        OrthantClass { negative, values }
    }

    pub fn negative_count(&self) -> u32 {
        self.negative.count_ones()
    }

    fn in_t(&self, j: usize) -> bool {
        self.negative >> j & 1 == 1
    }

    /// `Σ_{j∉T} v_j`.
    pub fn fixed_degree(&self) -> i64 {
        (0..self.values.len())
            .filter(|&j| !self.in_t(j))
            .map(|j| self.values[j] as i64)
            .sum()
    }

    /// Largest total degree reached by the class: `Σ v_j − |T|`.
    pub fn top_degree(&self) -> i64 {
        self.fixed_degree() - self.negative_count() as i64
    }

    /// Number of multidegrees of total degree `n` in the class.
    pub fn count_in_degree(&self, n: i64) -> u64 {
        let t = self.negative_count() as i64;
        let m = n - self.fixed_degree();
        if t == 0 {
            return u64::from(m == 0);
        }
        // a_j ≤ −1 on T summing to m: compositions of −m − t into t parts ≥ 0.
        let s = -m - t;
        if s < 0 {
            return 0;
        }
        binomial_u64((s + t - 1) as u64, (t - 1) as u64)
    }
}

/// Čech cohomology dimensions `h^0..h^k` of one orthant class.
pub fn cech_class_cohomology(ideal: &MonomialIdeal, class: &OrthantClass) -> Vec<usize> {
    let k = ideal.nvars();
    assert!(k < 32, "at most 31 variables");
    let allowed = |f: u32| -> bool {
        if f & class.negative != class.negative {
            return false;
        }
        !ideal.gens().iter().any(|g| {
            (0..k).all(|j| f >> j & 1 == 1 || g.exponents()[j] <= class.values[j])
        })
    };
    // Basis of C^i: allowed subsets of size i.
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for f in 0u32..(1u32 << k) {
        if allowed(f) {
            layers[f.count_ones() as usize].push(f);
        }
    }
    // rank of d^i : C^i → C^{i+1}
    let mut ranks = vec![0usize; k + 1];
    for i in 0..k {
        if layers[i].is_empty() || layers[i + 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<i64>> = layers[i]
            .iter()
            .map(|&f| {
                layers[i + 1]
                    .iter()
                    .map(|&h| {
                        let diff = h & !f;
                        if h & f != f || diff.count_ones() != 1 {
                            return 0;
                        }
                        let j = diff.trailing_zeros();
                        let below = (f & ((1u32 << j) - 1)).count_ones();
                        if below.is_multiple_of(2) { 1 } else { -1 }
                    })
                    .collect()
            })
            .collect();
        ranks[i] = linalg::rank(&rows);
    }
    (0..=k)
        .map(|i| {
            let prev = if i == 0 { 0 } else { ranks[i - 1] };
            layers[i].len() - ranks[i] - prev
        })
        .collect()
}

/// Enumerates every orthant class that can carry cohomology.
pub fn orthant_classes(ideal: &MonomialIdeal) -> Vec<OrthantClass> {
    let k = ideal.nvars();
    let rho = ideal.max_exponents();
    let mut out = Vec::new();
    for t in 0u32..(1u32 << k) {
        // Free coordinates range over [0, ρ_j − 1]; ρ_j = 0 leaves no room.
        let ranges: Vec<u32> = (0..k)
            .map(|j| if t >> j & 1 == 1 { 1 } else { rho[j] })
            .collect();
        if ranges.contains(&0) {
            continue;
        }
        let mut v = vec![0u32; k];
        loop {
            out.push(OrthantClass::new(t, v.clone()));
            let mut j = 0;
            loop {
                if j == k {
                    break;
                }
                if t >> j & 1 == 0 && v[j] + 1 < ranges[j] {
                    v[j] += 1;
                    break;
                }
                v[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
        }
    }
    out
}

/// Local cohomology of `R/I` aggregated over orthant classes.
#[derive(Clone, Debug)]
pub struct CohomologyTable {
    nvars: usize,
    dim: usize,
    /// Classes with some nonzero cohomology, with their `h^0..h^k`.
    classes: Vec<(OrthantClass, Vec<usize>)>,
    depth: usize,
    a_invariant: i64,
    eg: u64,
    rho: Vec<u32>,
}

impl CohomologyTable {
    pub fn compute(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::ZeroRing("local cohomology"));
        }
        let dim = hilbert::krull_dim(ideal)?;
        let classes: Vec<(OrthantClass, Vec<usize>)> = orthant_classes(ideal)
            .into_par_iter()
            .filter_map(|c| {
                let h = cech_class_cohomology(ideal, &c);
                h.iter().any(|&x| x > 0).then_some((c, h))
            })
            .collect();
        let top = classes
            .iter()
            .filter_map(|(_, h)| h.iter().rposition(|&x| x > 0))
            .max()
            .ok_or_else(|| Error::Inconsistent("no cohomology for a nonzero ring".into()))?;
        if top != dim {
            return Err(Error::Inconsistent(format!(
                "top local cohomology in degree {top} but dimension is {dim}"
            )));
        }
        let depth = classes
            .iter()
            .filter_map(|(_, h)| h.iter().position(|&x| x > 0))
            .min()
            .expect("nonempty");
        let a_invariant = classes
            .iter()
            .filter(|(_, h)| h[dim] > 0)
            .map(|(c, _)| c.top_degree())
            .max()
            .expect("top cohomology is nonzero");
        let mut table = CohomologyTable {
            nvars: ideal.nvars(),
            dim,
            classes,
            depth,
            a_invariant,
            eg: 0,
            rho: ideal.max_exponents(),
        };
        table.eg = (0..dim)
            .map(|q| {
                binomial_u64((dim - 1) as u64, q as u64) * table.h(q, 1 - q as i64)
            })
            .sum();
        Ok(table)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `max{n : H^d_M(R)_n ≠ 0}`.
    pub fn a_invariant(&self) -> i64 {
        self.a_invariant
    }

    /// `Σ_{q<d} C(d−1, q)·h^q(R)_{1−q}`.
    pub fn eg(&self) -> u64 {
        self.eg
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth == self.dim
    }

    pub fn classes(&self) -> &[(OrthantClass, Vec<usize>)] {
        &self.classes
    }

    /// `Σ_j (ρ_j − 1)`: no cohomology above this degree.
    pub fn vanishing_degree(&self) -> i64 {
        self.rho.iter().map(|&r| r as i64 - 1).sum()
    }

    /// `h^i(R)_n`.
    pub fn h(&self, i: usize, n: i64) -> u64 {
        if i > self.nvars {
            return 0;
        }
        self.classes
            .iter()
            .filter(|(_, h)| h[i] > 0)
            .map(|(c, h)| h[i] as u64 * c.count_in_degree(n))
            .sum()
    }

    /// `Σ_i (−1)^i h^i(R)_n`.
    pub fn euler_characteristic(&self, n: i64) -> i64 {
        (0..=self.nvars)
            .map(|i| {
                let v = self.h(i, n) as i64;
                if i % 2 == 0 { v } else { -v }
            })
            .sum()
    }
}

pub fn h(ideal: &MonomialIdeal, i: usize, n: i64) -> Result<u64> {
    Ok(CohomologyTable::compute(ideal)?.h(i, n))
}

pub fn a_invariant(ideal: &MonomialIdeal) -> Result<i64> {
    Ok(CohomologyTable::compute(ideal)?.a_invariant())
}

pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(CohomologyTable::compute(ideal)?.depth())
}

pub fn eg_invariant(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(CohomologyTable::compute(ideal)?.eg())
}
