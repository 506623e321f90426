//! Both sides of each bound on a concrete instance, with a status and the
//! intermediate invariants as witness data.
//!
//! A report says `holds` or `sharp` only when every hypothesis of the bound
//! was checked by machine; otherwise it says `hypothesis-unverified` or
//! `skipped` and gives a reason.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cohomology::CohomologyTable;
use crate::error::{Error, Result};
use crate::filtration::{
    g_hilbert_data, h0_g, length_i2_over_ji, multiplicity_samuel, reduction_number,
    vv_cm_certificate, ReductionOptions,
};
use crate::hilbert::hilbert_data;
use crate::monomial::MonomialIdeal;
use crate::semigroup::{multiplicity_sg, reduction_number_sg, rr_power_sg, NumericalSemigroup, SemigroupIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundName {
    /// `a(R) ≤ e(R) − ℓ(R_1) + (d−1)(ℓ(R_0)−1) + EG(R)`.
    #[serde(rename = "thm2.1")]
    MainBound,
    /// `e(R) ≥ 1 + codim(R) − EG(R)`.
    #[serde(rename = "eg-lower")]
    EgLower,
    /// `r(I) ≤ e(I) − (ℓ(I/(I ∩ rr(I²))) − 1) ≤ e(I)` in dimension one.
    #[serde(rename = "prop3.1")]
    DimOne,
    /// `r(I) ≤ 1 + e(I) − ℓ(I/I²) + ℓ(R/I) + h¹(G)_0` in dimension two.
    #[serde(rename = "prop3.3")]
    DimTwo,
    /// `r_J(I) ≤ 1 + ℓ(I²/JI) + h^{d−1}(G)_{2−d}` in dimension at least three.
    #[serde(rename = "prop3.4")]
    HighDim,
}

impl BoundName {
    pub const ALL: [BoundName; 5] = [
        BoundName::MainBound,
        BoundName::EgLower,
        BoundName::DimOne,
        BoundName::DimTwo,
        BoundName::HighDim,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::MainBound => "thm2.1",
            BoundName::EgLower => "eg-lower",
            BoundName::DimOne => "prop3.1",
            BoundName::DimTwo => "prop3.3",
            BoundName::HighDim => "prop3.4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        BoundName::ALL.into_iter().find(|b| b.as_str() == s)
    }

    pub fn relation(self) -> Relation {
        match self {
            BoundName::EgLower => Relation::Ge,
            _ => Relation::Le,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Sharp,
    HypothesisUnverified,
    Skipped,
    Violated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Sharp => "sharp",
            Status::HypothesisUnverified => "hypothesis-unverified",
            Status::Skipped => "skipped",
            Status::Violated => "violated",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub bound: BoundName,
    pub relation: Relation,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub status: Status,
    /// Slack of the inequality (`rhs − lhs` for `≤`, `lhs − rhs` for `≥`).
    pub gap: Option<i64>,
    pub reason: Option<String>,
    pub witness: BTreeMap<String, i64>,
}

impl BoundReport {
    fn new(instance: &str, bound: BoundName) -> Self {
        BoundReport {
            instance: instance.to_string(),
            bound,
            relation: bound.relation(),
            lhs: None,
            rhs: None,
            status: Status::Skipped,
            gap: None,
            reason: None,
            witness: BTreeMap::new(),
        }
    }

    fn witness(mut self, key: &str, value: i64) -> Self {
        self.witness.insert(key.to_string(), value);
        self
    }

    fn compare(mut self, lhs: i64, rhs: i64) -> Self {
        let gap = match self.relation {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
        };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.gap = Some(gap);
        self.status = match gap {
            0 => Status::Sharp,
            g if g > 0 => Status::Holds,
            _ => Status::Violated,
        };
        self
    }

    fn with_status(mut self, status: Status, reason: impl Into<String>) -> Self {
        self.status = status;
        self.reason = Some(reason.into());
        self
    }

    /// `holds` or `sharp`.
    pub fn is_verified(&self) -> bool {
        matches!(self.status, Status::Holds | Status::Sharp)
    }
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Invariants of `R = k[x]/I` shared by the main bound and the
/// Eisenbud-Goto inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub dim: usize,
    pub depth: usize,
    pub multiplicity: u64,
    pub a_invariant: i64,
    pub eg: u64,
    /// `ℓ(R_1)`, the embedding dimension.
    pub degree_one: u64,
}

impl QuotientInvariants {
    pub fn compute(ideal: &MonomialIdeal) -> Result<Self> {
        let data = hilbert_data(ideal)?;
        let table = CohomologyTable::compute(ideal)?;
        Ok(QuotientInvariants {
            dim: data.dim,
            depth: table.depth(),
            multiplicity: data.multiplicity,
            a_invariant: table.a_invariant(),
            eg: table.eg(),
            degree_one: ideal.graded_length(1),
        })
    }

    fn witness(&self, mut report: BoundReport) -> Result<BoundReport> {
        report = report
            .witness("d", self.dim as i64)
            .witness("depth", self.depth as i64)
            .witness("e", to_i64(self.multiplicity)?)
            .witness("a", self.a_invariant)
            .witness("eg", to_i64(self.eg)?)
            .witness("l_r1", to_i64(self.degree_one)?);
        Ok(report)
    }
}

/// `a(R) ≤ e(R) − ℓ(R_1) + EG(R)` for `R = k[x]/I` (so `ℓ(R_0) = 1`).
pub fn verify_main_bound(instance: &str, ideal: &MonomialIdeal) -> Result<BoundReport> {
    let report = BoundReport::new(instance, BoundName::MainBound);
    if ideal.is_unit() {
        return Ok(report.with_status(Status::Skipped, "unit ideal: zero ring"));
    }
    let inv = QuotientInvariants::compute(ideal)?;
    verify_main_bound_from(instance, &inv)
}

pub fn verify_main_bound_from(instance: &str, inv: &QuotientInvariants) -> Result<BoundReport> {
    let report = inv.witness(BoundReport::new(instance, BoundName::MainBound))?;
    let rhs = to_i64(inv.multiplicity)? - to_i64(inv.degree_one)? + to_i64(inv.eg)?;
    Ok(report.compare(inv.a_invariant, rhs))
}

/// `e(R) ≥ 1 + codim(R) − EG(R)` with `codim(R) = ℓ(R_1) − d`.
pub fn verify_eg_inequality(instance: &str, ideal: &MonomialIdeal) -> Result<BoundReport> {
    let report = BoundReport::new(instance, BoundName::EgLower);
    if ideal.is_unit() {
        return Ok(report.with_status(Status::Skipped, "unit ideal: zero ring"));
    }
    let inv = QuotientInvariants::compute(ideal)?;
    verify_eg_inequality_from(instance, &inv)
}

pub fn verify_eg_inequality_from(instance: &str, inv: &QuotientInvariants) -> Result<BoundReport> {
    let codim = to_i64(inv.degree_one)? - inv.dim as i64;
    let report = inv
        .witness(BoundReport::new(instance, BoundName::EgLower))?
        .witness("codim", codim);
    let rhs = 1 + codim - to_i64(inv.eg)?;
    Ok(report.compare(to_i64(inv.multiplicity)?, rhs))
}

/// Both inequalities of the dimension-one bound, over a numerical semigroup
/// ring. `lhs = r`, `rhs` is the middle term; a middle term above `e(I)` is
/// reported as a violation.
pub fn verify_prop_3_1(instance: &str, ideal: &SemigroupIdeal) -> Result<BoundReport> {
    let (r, j) = reduction_number_sg(ideal)?;
    let e = multiplicity_sg(ideal);
    let rr2 = rr_power_sg(ideal, 2)?;
    let meet = ideal.intersection(&rr2)?;
    let quotient = ideal.length_over(&meet)?;
    let l_i_i2 = ideal.length_over(&ideal.power(2))?;
    let middle = to_i64(e)? - (to_i64(quotient)? - 1);
    let mut report = BoundReport::new(instance, BoundName::DimOne)
        .witness("r", r as i64)
        .witness("j", j as i64)
        .witness("e", to_i64(e)?)
        .witness("l_i_over_i_cap_rr_i2", to_i64(quotient)?)
        .witness("l_i_over_i2", to_i64(l_i_i2)?)
        .witness("rr_i2_equals_i2", (rr2 == ideal.power(2)) as i64)
        .compare(r as i64, middle);
    if quotient == 0 || middle > to_i64(e)? {
        report.status = Status::Violated;
        report.reason = Some("middle term exceeds e(I)".into());
    }
    Ok(report)
}

/// The dimension-one bound for `(x^a)` in `k[x]`, run through the sumset
/// engine with `S = ℕ`.
pub fn verify_prop_3_1_monomial(instance: &str, ideal: &MonomialIdeal) -> Result<BoundReport> {
    if ideal.nvars() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: ideal.nvars(),
        });
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotPrimary);
    }
    let a = ideal.gens()[0].exponents()[0];
    let e = SemigroupIdeal::new(&NumericalSemigroup::naturals(), &[a])?;
    verify_prop_3_1(instance, &e)
}

/// Shared knobs for the reduction-based bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: u32,
    pub seed: u64,
    pub reduction: ReductionOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 3,
            seed: 0,
            reduction: ReductionOptions::default(),
        }
    }
}

/// The dimension-two bound for an m-primary ideal of `k[x,y]`.
///
/// `depth G(I) ≥ 1` is checked as `h^0(G)_n = 0` for `0 ≤ n ≤ r + 1`.
/// Then either the Valabrega-Valla certificate gives `h¹(G)_0 = 0`, or
/// `r ≤ 1` forces `h²(G)_0 = 0` and `h¹(G)_0 = P_G(0) − H_G(0)`.
pub fn verify_prop_3_3(instance: &str, ideal: &MonomialIdeal, opts: &VerifyOptions) -> Result<BoundReport> {
    let report = BoundReport::new(instance, BoundName::DimTwo);
    if ideal.nvars() != 2 || !ideal.is_m_primary() {
        return Ok(report.with_status(Status::Skipped, "needs an m-primary ideal of k[x,y]"));
    }
    let summary = reduction_number(ideal, opts.trials, opts.seed, &opts.reduction)?;
    let r = summary.reduction_number;
    let e = multiplicity_samuel(ideal)?;
    let l_r_i = ideal.quotient_length()?;
    let l_r_i2 = ideal.power(2)?.quotient_length()?;
    let report = report
        .witness("r", r as i64)
        .witness("seed", summary.best.seed as i64)
        .witness("e", to_i64(e)?)
        .witness("l_r_i", to_i64(l_r_i)?)
        .witness("l_i_i2", to_i64(l_r_i2 - l_r_i)?);
    for n in 0..=r + 1 {
        let h0 = h0_g(ideal, n)?;
        if h0 > 0 {
            return Ok(report
                .witness("h0_g_degree", n as i64)
                .witness("h0_g", to_i64(h0)?)
                .with_status(Status::Skipped, format!("depth G(I) = 0: h0(G)_{n} = {h0}")));
        }
    }
    let base = 1 + to_i64(e)? - to_i64(l_r_i2 - l_r_i)? + to_i64(l_r_i)?;
    if vv_cm_certificate(ideal, &summary.best, r)? {
        return Ok(report
            .witness("cm", 1)
            .witness("h1_g_0", 0)
            .compare(r as i64, base));
    }
    if r <= 1 {
        let g = g_hilbert_data(ideal)?;
        let p0 = g.hilbert_polynomial.eval_int(0)?;
        let h1 = p0 - to_i64(l_r_i)?;
        return Ok(report
            .witness("cm", 0)
            .witness("h1_g_0", h1)
            .compare(r as i64, base + h1));
    }
    Ok(report.witness("cm", 0).with_status(
        Status::HypothesisUnverified,
        "no certificate for h1(G)_0: G(I) not certified Cohen-Macaulay and r > 1",
    ))
}

/// The bound `r_J(I) ≤ 1 + ℓ(I²/JI)` for m-primary ideals in at least three
/// variables whose associated graded ring is certified Cohen-Macaulay
/// (so `h^{d−1}(G)_{2−d} = 0`).
pub fn verify_prop_3_4(instance: &str, ideal: &MonomialIdeal, opts: &VerifyOptions) -> Result<BoundReport> {
    let report = BoundReport::new(instance, BoundName::HighDim);
    if ideal.nvars() < 3 || !ideal.is_m_primary() {
        return Ok(report.with_status(Status::Skipped, "needs an m-primary ideal in at least three variables"));
    }
    let summary = reduction_number(ideal, opts.trials, opts.seed, &opts.reduction)?;
    let r = summary.reduction_number;
    let report = report.witness("r", r as i64).witness("seed", summary.best.seed as i64);
    if !vv_cm_certificate(ideal, &summary.best, r)? {
        return Ok(report.witness("cm", 0).with_status(
            Status::HypothesisUnverified,
            "G(I) not certified Cohen-Macaulay; h^{d-1}(G)_{2-d} unknown",
        ));
    }
    let l = length_i2_over_ji(&summary.best, ideal, r)?;
    Ok(report
        .witness("cm", 1)
        .witness("l_i2_ji", to_i64(l)?)
        .witness("h_top_minus_one", 0)
        .compare(r as i64, 1 + to_i64(l)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(k: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(k, gens).unwrap()
    }

    fn example_n() -> MonomialIdeal {
        // b*d, b*c, b^2, c^3 in k[a,b,c,d]
        ideal(4, &[&[0, 1, 0, 1], &[0, 1, 1, 0], &[0, 2, 0, 0], &[0, 0, 3, 0]])
    }

    #[test]
    fn main_bound_examples() {
        let r = verify_main_bound("n", &example_n()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(0), Some(0), Status::Sharp));
        let r = verify_main_bound("zero", &MonomialIdeal::zero(2)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(-2), Some(-1), Status::Holds));
        assert_eq!(r.gap, Some(1));
        let r = verify_main_bound("unit", &MonomialIdeal::unit(2)).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn eg_examples() {
        let r = verify_eg_inequality("n", &example_n()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(3), Some(2), Status::Holds));
        let r = verify_eg_inequality("poly", &MonomialIdeal::zero(3)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(1), Some(1), Status::Sharp));
        let r = verify_eg_inequality("hyp", &ideal(2, &[&[2, 0]])).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(2), Some(2), Status::Sharp));
        let r = verify_eg_inequality("x", &ideal(1, &[&[1]])).unwrap();
        assert_eq!(r.status, Status::Sharp);
    }

    #[test]
    fn dim_one_examples() {
        let s = NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap();
        let e = SemigroupIdeal::new(&s, &[4, 5, 6]).unwrap();
        let r = verify_prop_3_1("ex", &e).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(2), Some(2), Status::Sharp));
        assert_eq!(r.witness["e"], 4);
        assert_eq!(r.witness["l_i_over_i2"], 3);

        let n = NumericalSemigroup::naturals();
        let r = verify_prop_3_1("nat", &SemigroupIdeal::new(&n, &[1]).unwrap()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(0), Some(1), Status::Holds));
        let r = verify_prop_3_1_monomial("x3", &ideal(1, &[&[3]])).unwrap();
        assert_eq!((r.lhs, r.rhs), (Some(0), Some(1)));
    }

    #[test]
    fn dim_two_examples() {
        let opts = VerifyOptions::default();
        let r = verify_prop_3_3("m2", &ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), &opts).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(1), Some(1), Status::Sharp));
        assert_eq!(r.witness["l_i_i2"], 7);
        assert_eq!(r.witness["cm"], 1);
        let r = verify_prop_3_3("m", &MonomialIdeal::maximal(2), &opts).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(0), Some(1), Status::Holds));
        let gap = ideal(2, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let r = verify_prop_3_3("gap", &gap, &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().contains("h0(G)_0"));
        let r = verify_prop_3_3("3d", &MonomialIdeal::maximal(3), &opts).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn high_dim_examples() {
        let opts = VerifyOptions::default();
        let r = verify_prop_3_4("m", &MonomialIdeal::maximal(3), &opts).unwrap();
        assert_eq!((r.lhs, r.rhs, r.status), (Some(0), Some(1), Status::Holds));
        let m2 = MonomialIdeal::maximal(3).power(2).unwrap();
        let r = verify_prop_3_4("m2", &m2, &opts).unwrap();
        assert_eq!((r.lhs, r.status), (Some(1), Status::Sharp));
        assert_eq!(r.witness["l_i2_ji"], 0);
    }

    #[test]
    fn names_round_trip() {
        for b in BoundName::ALL {
            assert_eq!(BoundName::parse(b.as_str()), Some(b));
        }
        assert_eq!(BoundName::parse("nope"), None);
    }
}
