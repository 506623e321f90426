//! The `I`-adic filtration of an m-primary monomial ideal in `k[x_1..x_k]`
//! localized at the origin: Samuel multiplicity, Ratliff-Rush closures,
//! associated graded and fiber cone data, minimal reductions and reduction
//! numbers.
//!
//! Reductions are generic combinations of the generators, so they are not
//! monomial; their products with powers of `I` are handled in Artinian
//! truncations (see [`crate::artinian`]).

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::artinian::{
    monomial_generators, product_generators, semigroup_generators, Ambient, PolyElement,
    TruncatedAlgebra,
};
use crate::error::{Error, Result};
use crate::hilbert::{reconstruct_series, HilbertData, HilbertSeries};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::semigroup::SemigroupIdeal;

const STABILITY_BOUND: u32 = 64;
const SERIES_MARGIN: usize = 3;
const MAX_SERIES_TERMS: u32 = 48;

pub const DEFAULT_COEFF_BOUND: u32 = 100;

/// Knobs for reduction-number searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Largest `n` tried; `None` means `e(I) + 2`.
    pub n_bound: Option<u32>,
    /// Largest truncation level allowed; `None` means
    /// `k · (max generator degree) · (n + 2)`.
    pub max_truncation: Option<u32>,
    /// Coefficients of generic combinations are drawn from `[1, coeff_bound]`.
    pub coeff_bound: u32,
    /// Extra truncation levels on top of the certified one.
    pub level_slack: u32,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            n_bound: None,
            max_truncation: None,
            coeff_bound: DEFAULT_COEFF_BOUND,
            level_slack: 0,
        }
    }
}

fn require_primary(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_m_primary() {
        Ok(())
    } else {
        Err(Error::NotPrimary)
    }
}

/// Ratliff-Rush closure of `I^power`: the stable value of `I^{power+n} : I^n`.
///
/// Stops once three consecutive colons agree.
pub fn ratliff_rush(ideal: &MonomialIdeal, power: u32) -> Result<MonomialIdeal> {
    require_primary(ideal)?;
    let mut low = ideal.clone();
    let mut high = ideal.power(power + 1)?;
    let mut prev: Option<MonomialIdeal> = None;
    let mut streak = 0;
    for _ in 1..=STABILITY_BOUND {
        let cur = high.colon(&low)?;
        if prev.as_ref() == Some(&cur) {
            streak += 1;
            if streak == 2 {
                return Ok(cur);
            }
        } else {
            streak = 0;
        }
        prev = Some(cur);
        low = low.product(ideal)?;
        high = high.product(ideal)?;
    }
    Err(Error::NotStabilized {
        what: "Ratliff-Rush colon sequence",
        bound: STABILITY_BOUND,
    })
}

/// `h^0(G)_n = ℓ((I^n ∩ rr(I^{n+1}))/I^{n+1})`.
pub fn h0_g(ideal: &MonomialIdeal, n: u32) -> Result<u64> {
    require_primary(ideal)?;
    let rr = ratliff_rush(ideal, n + 1)?;
    let lower = ideal.power(n)?.intersection(&rr)?;
    Ok(ideal.power(n + 1)?.quotient_length()? - lower.quotient_length()?)
}

/// `μ(I^n)`.
pub fn mu(ideal: &MonomialIdeal, n: u32) -> Result<usize> {
    Ok(ideal.power(n)?.gens().len())
}

/// `ℓ(R/I^n)` for `n = 0..=count-1`.
pub fn power_colengths(ideal: &MonomialIdeal, count: u32) -> Result<Vec<u64>> {
    require_primary(ideal)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut pow = MonomialIdeal::unit(ideal.nvars());
    for _ in 0..count {
        out.push(pow.quotient_length()?);
        pow = pow.product(ideal)?;
    }
    Ok(out)
}

/// `ℓ(R/I^n)` for `n = 0, 1, ...`, computed on demand.
struct PowerLengths<'a> {
    ideal: &'a MonomialIdeal,
    power: MonomialIdeal,
    values: Vec<u64>,
}

impl<'a> PowerLengths<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        PowerLengths {
            ideal,
            power: MonomialIdeal::unit(ideal.nvars()),
            values: Vec::new(),
        }
    }

    fn extend_to(&mut self, count: usize) -> Result<()> {
        while self.values.len() < count {
            self.values.push(self.power.quotient_length()?);
            self.power = self.power.product(self.ideal)?;
        }
        Ok(())
    }
}

/// Samuel multiplicity `e(I)`: the eventually constant `d`-th difference of
/// `ℓ(R/I^n)`, accepted after `d + 2` equal values plus 2 confirming ones.
pub fn multiplicity_samuel(ideal: &MonomialIdeal) -> Result<u64> {
    require_primary(ideal)?;
    let d = ideal.nvars();
    let need = d + 4;
    let mut lengths = PowerLengths::new(ideal);
    for count in d + need..=MAX_SERIES_TERMS as usize {
        lengths.extend_to(count)?;
        let mut diffs: Vec<i128> = lengths.values.iter().map(|&x| x as i128).collect();
        for _ in 0..d {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let window = &diffs[diffs.len() - need..];
        if window.iter().all(|&x| x == window[0]) && window[0] > 0 {
            return Ok(window[0] as u64);
        }
    }
    Err(Error::NotStabilized {
        what: "Samuel function differences",
        bound: MAX_SERIES_TERMS,
    })
}

/// Hilbert data of `G(I) = ⊕ I^n/I^{n+1}`, reconstructed from `ℓ(I^n/I^{n+1})`.
pub fn g_hilbert_data(ideal: &MonomialIdeal) -> Result<HilbertData> {
    require_primary(ideal)?;
    let k = ideal.nvars();
    let mut lengths = PowerLengths::new(ideal);
    for count in 2 * k + 6..=MAX_SERIES_TERMS as usize {
        lengths.extend_to(count + 1)?;
        let values: Vec<BigInt> = lengths
            .values
            .windows(2)
            .map(|w| BigInt::from(w[1] - w[0]))
            .collect();
        if let Some(s) = reconstruct_series(&values, SERIES_MARGIN) {
            if s.dim() == k {
                return HilbertData::from_series(s);
            }
        }
    }
    Err(Error::NotStabilized {
        what: "associated graded series",
        bound: MAX_SERIES_TERMS,
    })
}

/// Hilbert series of the fiber cone `F(I)`, reconstructed from `μ(I^n)`.
pub fn fiber_cone_series(ideal: &MonomialIdeal, terms: u32) -> Result<HilbertSeries> {
    let mut values = Vec::with_capacity(terms as usize);
    let mut pow = MonomialIdeal::unit(ideal.nvars());
    for _ in 0..terms {
        values.push(BigInt::from(pow.gens().len()));
        pow = pow.product(ideal)?;
    }
    reconstruct_series(&values, SERIES_MARGIN).ok_or(Error::NotStabilized {
        what: "fiber cone series",
        bound: terms,
    })
}

/// A candidate minimal reduction: `d` combinations of the generators of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub generators: Vec<PolyElement>,
    pub seed: u64,
    pub coeff_bound: u32,
}

fn generic_combination(rng: &mut ChaCha8Rng, gens: &[Monomial], bound: u32) -> PolyElement {
    PolyElement::from_terms(gens.iter().map(|g| {
        let c: u32 = rng.gen_range(1..=bound.max(1));
        (g.clone(), BigRational::from_integer(c.into()))
    }))
}

/// `d = k` seeded generic combinations of the minimal generators.
///
/// In one variable the ideal is principal and is its own reduction.
pub fn minimal_reduction(ideal: &MonomialIdeal, seed: u64, coeff_bound: u32) -> Result<Reduction> {
    require_primary(ideal)?;
    let k = ideal.nvars();
    if k == 1 {
        let g = ideal.gens()[0].clone();
        return Ok(Reduction {
            generators: vec![PolyElement::monomial(g)],
            seed,
            coeff_bound,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generators = (0..k)
        .map(|_| generic_combination(&mut rng, ideal.gens(), coeff_bound))
        .collect();
    Ok(Reduction {
        generators,
        seed,
        coeff_bound,
    })
}

/// A monomial reduction candidate such as `(x^a, y^b)`.
pub fn monomial_reduction(j: &MonomialIdeal) -> Reduction {
    Reduction {
        generators: monomial_generators(j),
        seed: 0,
        coeff_bound: 0,
    }
}

fn max_gen_degree(ideal: &MonomialIdeal) -> u32 {
    ideal.gens().iter().map(|g| g.degree() as u32).max().unwrap_or(0)
}

fn default_truncation_cap(ideal: &MonomialIdeal, n: u32) -> u32 {
    ideal.nvars() as u32 * max_gen_degree(ideal) * (n + 2)
}

fn images_equal(alg: &TruncatedAlgebra, a: &[PolyElement], b: &[PolyElement]) -> Result<bool> {
    let sa = alg.ideal_image(a)?;
    let sb = alg.ideal_image(b)?;
    Ok(sa.dim() == sb.dim() && sb.contains(&sa))
}

/// Least `n ≤ n_bound` with `J·I^n = I^{n+1}`.
///
/// The test runs in `R/m^{N+1}` with `m^N ⊆ I^{n+1}` (read off the
/// monomial ideal), so `m^{N+1} ⊆ m·I^{n+1}`: equal images give
/// `I^{n+1} ⊆ J·I^n + m·I^{n+1}` and Nakayama closes the gap, while unequal
/// images are conclusive because `J·I^n ⊆ I^{n+1}`.
pub fn reduction_number_wrt(j: &Reduction, ideal: &MonomialIdeal, opts: &ReductionOptions) -> Result<u32> {
    require_primary(ideal)?;
    let ambient = Ambient::polynomial(ideal.nvars());
    let n_bound = match opts.n_bound {
        Some(b) => b,
        None => multiplicity_samuel(ideal)? as u32 + 2,
    };
    let mut pow = MonomialIdeal::unit(ideal.nvars());
    for n in 0..=n_bound {
        let next = pow.product(ideal)?;
        let level = next.containing_power().ok_or(Error::NotPrimary)? + opts.level_slack;
        let cap = opts.max_truncation.unwrap_or_else(|| default_truncation_cap(ideal, n) + opts.level_slack);
        if level > cap {
            return Err(Error::NotCertified(cap));
        }
        let alg = TruncatedAlgebra::new(ambient.clone(), level);
        let jin = product_generators(&j.generators, &monomial_generators(&pow))?;
        if images_equal(&alg, &jin, &monomial_generators(&next))? {
            return Ok(n);
        }
        pow = next;
    }
    Err(Error::NotAReduction(n_bound))
}

/// Outcome of one seeded reduction trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub seed: u64,
    pub reduction_number: Option<u32>,
}

/// `r(I)` estimated as the minimum of `r_J(I)` over seeded generic `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionSummary {
    pub reduction_number: u32,
    pub best: Reduction,
    pub trials: Vec<TrialOutcome>,
}

pub fn reduction_number(
    ideal: &MonomialIdeal,
    trials: u32,
    seed: u64,
    opts: &ReductionOptions,
) -> Result<ReductionSummary> {
    let mut outcomes = Vec::new();
    let mut best: Option<(u32, Reduction)> = None;
    let mut last_err = None;
    for t in 0..trials.max(1) {
        let s = seed.wrapping_add(t as u64);
        let j = minimal_reduction(ideal, s, opts.coeff_bound)?;
        match reduction_number_wrt(&j, ideal, opts) {
            Ok(r) => {
                outcomes.push(TrialOutcome { seed: s, reduction_number: Some(r) });
                if best.as_ref().is_none_or(|(b, _)| r < *b) {
                    best = Some((r, j));
                }
            }
            Err(e @ Error::NotAReduction(_)) => {
                outcomes.push(TrialOutcome { seed: s, reduction_number: None });
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    match best {
        Some((r, j)) => Ok(ReductionSummary {
            reduction_number: r,
            best: j,
            trials: outcomes,
        }),
        None => Err(last_err.unwrap_or(Error::NotAReduction(0))),
    }
}

/// Valabrega-Valla test: `I^n ∩ J = J·I^{n−1}` for `1 ≤ n ≤ r_J + 1`.
///
/// `J·I^{n−1} ⊇ I^{max(n−1, r_J)+1}` bounds the truncation from below, so
/// subspace intersections in that truncation are intersections of ideals.
pub fn vv_cm_certificate(ideal: &MonomialIdeal, j: &Reduction, r_j: u32) -> Result<bool> {
    require_primary(ideal)?;
    let ambient = Ambient::polynomial(ideal.nvars());
    for n in 1..=r_j + 1 {
        let floor = ideal.power((n - 1).max(r_j) + 1)?;
        let level = floor.containing_power().ok_or(Error::NotPrimary)?;
        let alg = TruncatedAlgebra::new(ambient.clone(), level);
        let i_n = alg.ideal_image(&monomial_generators(&ideal.power(n)?))?;
        let jj = alg.ideal_image(&j.generators)?;
        let j_in1 = alg.ideal_image(&product_generators(
            &j.generators,
            &monomial_generators(&ideal.power(n - 1)?),
        )?)?;
        if i_n.intersection_dim(&jj) != j_in1.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a(G(I)) = deg Q − d`, only when the Valabrega-Valla certificate holds.
pub fn a_g_if_cm(ideal: &MonomialIdeal, j: &Reduction, opts: &ReductionOptions) -> Result<i64> {
    let r = reduction_number_wrt(j, ideal, opts)?;
    if !vv_cm_certificate(ideal, j, r)? {
        return Err(Error::NotCohenMacaulay);
    }
    let g = g_hilbert_data(ideal)?;
    Ok(g.series.reduced_numerator().len() as i64 - 1 - g.dim as i64)
}

/// `ℓ(R/J)`, read from a certified truncation.
pub fn reduction_colength(j: &Reduction, ideal: &MonomialIdeal) -> Result<u64> {
    let ambient = Ambient::polynomial(ideal.nvars());
    let cap = default_truncation_cap(ideal, 2);
    crate::artinian::colength(&ambient, &j.generators, cap)
}

/// `ℓ(I^2/J·I)` via truncation.
pub fn length_i2_over_ji(j: &Reduction, ideal: &MonomialIdeal, r_j: u32) -> Result<u64> {
    let ambient = Ambient::polynomial(ideal.nvars());
    // J·I ⊇ I^{max(1, r_j) + 1}
    let floor = ideal.power(r_j.max(1) + 1)?;
    let level = floor.containing_power().ok_or(Error::NotPrimary)?;
    let i_gens = monomial_generators(ideal);
    let i2 = monomial_generators(&ideal.power(2)?);
    let ji = product_generators(&j.generators, &i_gens)?;
    crate::artinian::subspace_length_between(&ambient, &i2, &ji, level)
}

/// One-dimensional reduction candidate `(Σ c_i t^{g_i})` over a semigroup ideal.
pub fn minimal_reduction_sg(ideal: &SemigroupIdeal, seed: u64, coeff_bound: u32) -> Reduction {
    let gens: Vec<Monomial> = ideal.generators().iter().map(|&g| Monomial::new(vec![g])).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Reduction {
        generators: vec![generic_combination(&mut rng, &gens, coeff_bound)],
        seed,
        coeff_bound,
    }
}

/// Least `n` with `J·E^n = E^{n+1}` in `k[[t^S]]`, decided in truncations.
///
/// `m·E^{n+1}` contains every value from `threshold(E^{n+1}) + e(S)` on, so
/// truncating below that value is conclusive by the same Nakayama argument
/// as in [`reduction_number_wrt`].
pub fn reduction_number_wrt_sg(j: &Reduction, ideal: &SemigroupIdeal, n_bound: u32) -> Result<u32> {
    let s = ideal.semigroup();
    let ambient = Ambient::Semigroup(s.clone());
    let mut pow = s.whole();
    for n in 0..=n_bound {
        let next = pow.product(ideal)?;
        let level = next.threshold() + s.multiplicity() - 1;
        let alg = TruncatedAlgebra::new(ambient.clone(), level);
        let jin = product_generators(&j.generators, &semigroup_generators(&pow))?;
        if images_equal(&alg, &jin, &semigroup_generators(&next))? {
            return Ok(n);
        }
        pow = next;
    }
    Err(Error::NotAReduction(n_bound))
}

/// Filtration invariants of an m-primary monomial ideal up to `I^{n_max}`.
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub ideal: MonomialIdeal,
    pub multiplicity: u64,
    /// `ℓ(R/I^n)`, `n = 0..=n_max`.
    pub colengths: Vec<u64>,
    /// Ratliff-Rush closure of `I^n`, `n = 1..=n_max`.
    pub ratliff_rush: Vec<MonomialIdeal>,
    /// `μ(I^n)`, `n = 0..=n_max`.
    pub mu: Vec<usize>,
    /// `h^0(G)_n`, `n = 0..n_max`.
    pub h0_g: Vec<u64>,
    pub g_data: HilbertData,
}

impl FiltrationReport {
    pub fn compute(ideal: &MonomialIdeal, n_max: u32) -> Result<Self> {
        require_primary(ideal)?;
        let colengths = power_colengths(ideal, n_max + 1)?;
        let ratliff_rush = (1..=n_max)
            .map(|n| ratliff_rush(ideal, n))
            .collect::<Result<Vec<_>>>()?;
        let mu = (0..=n_max).map(|n| mu(ideal, n)).collect::<Result<Vec<_>>>()?;
        let h0 = (0..n_max).map(|n| h0_g(ideal, n)).collect::<Result<Vec<_>>>()?;
        Ok(FiltrationReport {
            ideal: ideal.clone(),
            multiplicity: multiplicity_samuel(ideal)?,
            colengths,
            ratliff_rush,
            mu,
            h0_g: h0,
            g_data: g_hilbert_data(ideal)?,
        })
    }
}
