//! Hilbert series of monomial quotients by pivot divide and conquer.
//!
//! For a pivot monomial `p ∉ I` the sequence
//! `0 → R/(I:p)(−deg p) → R/I → R/(I+(p)) → 0` gives
//! `N(R/I) = N(R/(I+(p))) + λ^{deg p}·N(R/(I:p))` on numerators over `(1−λ)^k`.
//! Every recursive call strictly enlarges the ideal, so the recursion ends at
//! ideals whose generators are pairwise coprime, where
//! `N = Π (1 − λ^{deg g})`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Integer polynomial in `λ`, index = power, no trailing zeros.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn add_shifted(acc: &mut IntPoly, p: &IntPoly, shift: usize) {
    if p.is_empty() {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
    trim(acc);
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn eval_at_one(p: &IntPoly) -> BigInt {
    p.iter().sum()
}

/// Exact division by `(1 − λ)`; requires `p(1) = 0`.
fn div_one_minus_lambda(p: &IntPoly) -> IntPoly {
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc.clone());
    }
    trim(&mut q);
    q
}

/// `(1 − λ)^d` expanded.
fn one_minus_lambda_pow(d: usize) -> IntPoly {
    let mut p: IntPoly = vec![BigInt::one()];
    for _ in 0..d {
        p = mul(&p, &vec![BigInt::one(), -BigInt::one()]);
    }
    p
}

pub(crate) fn binomial_big(n: &BigInt, r: usize) -> BigInt {
    // Generalized binomial n(n-1)...(n-r+1)/r!, exact for integer n ≥ 0 and
    // used only there.
    if n.is_negative() {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Hilbert series `N(λ)/(1−λ)^k`, with its reduced form `Q(λ)/(1−λ)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: IntPoly,
    reduced_numerator: IntPoly,
    dim: usize,
}

impl HilbertSeries {
    /// Builds the series `numerator/(1−λ)^nvars` and reduces it.
    pub fn from_numerator(nvars: usize, mut numerator: IntPoly) -> Self {
        trim(&mut numerator);
        let mut reduced = numerator.clone();
        let mut dim = nvars;
        if !reduced.is_empty() {
            while dim > 0 && eval_at_one(&reduced).is_zero() {
                reduced = div_one_minus_lambda(&reduced);
                dim -= 1;
            }
        } else {
            dim = 0;
        }
        HilbertSeries {
            nvars,
            numerator,
            reduced_numerator: reduced,
            dim,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn reduced_numerator(&self) -> &[BigInt] {
        &self.reduced_numerator
    }

    /// Quotient by the unit ideal.
    pub fn is_zero_ring(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Q(1)`.
    pub fn multiplicity(&self) -> Result<u64> {
        if self.is_zero_ring() {
            return Err(Error::ZeroRing("multiplicity"));
        }
        eval_at_one(&self.reduced_numerator)
            .to_u64()
            .ok_or(Error::Overflow)
    }

    /// Coefficient of `λ^n` in the expansion.
    pub fn coefficient(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let k = self.nvars;
        let mut acc = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            let m = n - i as i64;
            if m < 0 {
                break;
            }
            if k == 0 {
                if m == 0 {
                    acc += c;
                }
            } else {
                acc += c * binomial_big(&BigInt::from(m + k as i64 - 1), k - 1);
            }
        }
        acc
    }

    /// `P(n) = Σ q_i·C(n − i + d − 1, d − 1)`; zero when `d = 0`.
    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        let d = self.dim;
        if d == 0 || self.is_zero_ring() {
            return HilbertPolynomial { coeffs: Vec::new() };
        }
        let mut total: Vec<BigRational> = Vec::new();
        let fact: BigInt = (1..d).map(BigInt::from).product();
        for (i, q) in self.reduced_numerator.iter().enumerate() {
            // Π_{j=0}^{d-2} (n + (d − 1 − i − j))
            let mut p: Vec<BigRational> = vec![BigRational::one()];
            for j in 0..d - 1 {
                let c = BigRational::from_integer(BigInt::from(d as i64 - 1 - i as i64 - j as i64));
                let mut next = vec![BigRational::zero(); p.len() + 1];
                for (k, a) in p.iter().enumerate() {
                    next[k] += a * &c;
                    next[k + 1] += a.clone();
                }
                p = next;
            }
            let scale = BigRational::new(q.clone(), fact.clone());
            if total.len() < p.len() {
                total.resize(p.len(), BigRational::zero());
            }
            for (k, a) in p.into_iter().enumerate() {
                total[k] += a * &scale;
            }
        }
        while total.last().is_some_and(Zero::is_zero) {
            total.pop();
        }
        HilbertPolynomial { coeffs: total }
    }

    /// Degrees `n > deg Q − d` where `H(n) = P(n)` is guaranteed.
    pub fn postulation_bound(&self) -> i64 {
        self.reduced_numerator.len() as i64 - 1 - self.dim as i64
    }
}

/// A rational-coefficient polynomial in `n`, index = power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Values at integers are integers.
    pub fn eval_int(&self, n: i64) -> Result<i64> {
        let v = self.eval(n);
        if !v.is_integer() {
            return Err(Error::Inconsistent(format!(
                "Hilbert polynomial not integral at {n}"
            )));
        }
        v.to_integer().to_i64().ok_or(Error::Overflow)
    }

    /// Renders as `a*n^2 + b*n + c` with rational coefficients.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.push(if mono.is_empty() {
                c.to_string()
            } else {
                format!("{c}*{mono}")
            });
        }
        parts.join(" + ")
    }
}

/// Everything the Hilbert series determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub series: HilbertSeries,
    pub dim: usize,
    pub multiplicity: u64,
    pub hilbert_polynomial: HilbertPolynomial,
}

impl HilbertData {
    pub fn from_series(series: HilbertSeries) -> Result<Self> {
        let multiplicity = series.multiplicity()?;
        Ok(HilbertData {
            dim: series.dim(),
            multiplicity,
            hilbert_polynomial: series.hilbert_polynomial(),
            series,
        })
    }
}

/// How the recursion picks its pivot monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// Variable occurring in most non-pure-power generators, at the least
    /// positive exponent occurring there.
    #[default]
    MostFrequent,
    /// First variable of the first non-pure-power generator, exponent 1.
    FirstVariable,
}

fn pairwise_coprime(gens: &[Monomial], k: usize) -> bool {
    let mut used = vec![false; k];
    for g in gens {
        for (j, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                if used[j] {
                    return false;
                }
                used[j] = true;
            }
        }
    }
    true
}

fn pick_pivot(gens: &[Monomial], k: usize, strategy: PivotStrategy) -> Monomial {
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.as_pure_power().is_none()).collect();
    match strategy {
        PivotStrategy::MostFrequent => {
            let mut best = (0usize, 0usize);
            for j in 0..k {
                let count = mixed.iter().filter(|g| g.exponents()[j] > 0).count();
                if count > best.0 {
                    best = (count, j);
                }
            }
            let j = best.1;
            let e = mixed
                .iter()
                .map(|g| g.exponents()[j])
                .filter(|&e| e > 0)
                .min()
                .expect("pivot variable occurs");
            Monomial::pure_power(k, j, e)
        }
        PivotStrategy::FirstVariable => {
            let g = mixed.first().expect("non-coprime ideal has a mixed generator");
            let j = g.exponents().iter().position(|&e| e > 0).expect("nonconstant");
            Monomial::var(k, j)
        }
    }
}

struct Engine {
    k: usize,
    strategy: PivotStrategy,
    memo: HashMap<Vec<Monomial>, IntPoly>,
}

impl Engine {
    fn numerator(&mut self, ideal: &MonomialIdeal) -> IntPoly {
        let gens = ideal.gens();
        if gens.is_empty() {
            return vec![BigInt::one()];
        }
        if ideal.is_unit() {
            return Vec::new();
        }
        if let Some(hit) = self.memo.get(gens) {
            return hit.clone();
        }
        let out = if pairwise_coprime(gens, self.k) {
            let mut acc: IntPoly = vec![BigInt::one()];
            for g in gens {
                let mut f = vec![BigInt::zero(); g.degree() as usize + 1];
                f[0] = BigInt::one();
                f[g.degree() as usize] -= BigInt::one();
                acc = mul(&acc, &f);
            }
            acc
        } else {
            let p = pick_pivot(gens, self.k, self.strategy);
            let sum = MonomialIdeal::from_checked(
                self.k,
                gens.iter().cloned().chain(std::iter::once(p.clone())).collect(),
            );
            let colon = ideal.colon_monomial(&p).expect("same ring");
            let mut acc = self.numerator(&sum);
            let tail = self.numerator(&colon);
            add_shifted(&mut acc, &tail, p.degree() as usize);
            acc
        };
        self.memo.insert(gens.to_vec(), out.clone());
        out
    }
}

pub fn hilbert_series_with(ideal: &MonomialIdeal, strategy: PivotStrategy) -> HilbertSeries {
    let mut engine = Engine {
        k: ideal.nvars(),
        strategy,
        memo: HashMap::new(),
    };
    let numerator = engine.numerator(ideal);
    HilbertSeries::from_numerator(ideal.nvars(), numerator)
}

/// Hilbert series of `R/I`. The unit ideal yields the zero series, flagged by
/// [`HilbertSeries::is_zero_ring`].
pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    hilbert_series_with(ideal, PivotStrategy::default())
}

pub fn hilbert_data(ideal: &MonomialIdeal) -> Result<HilbertData> {
    HilbertData::from_series(hilbert_series(ideal))
}

/// `H(n) = ℓ((R/I)_n)`, counted from standard monomials.
pub fn hilbert_function(ideal: &MonomialIdeal, n: i64) -> u64 {
    ideal.graded_length(n)
}

pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> HilbertPolynomial {
    hilbert_series(ideal).hilbert_polynomial()
}

/// `H(n) − P(n)`.
pub fn serre_difference(ideal: &MonomialIdeal, n: i64) -> Result<i64> {
    let p = hilbert_polynomial(ideal).eval_int(n)?;
    let h = i64::try_from(hilbert_function(ideal, n)).map_err(|_| Error::Overflow)?;
    Ok(h - p)
}

pub fn multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    hilbert_series(ideal).multiplicity()
}

pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    let s = hilbert_series(ideal);
    if s.is_zero_ring() {
        return Err(Error::ZeroRing("dimension"));
    }
    Ok(s.dim())
}

/// `k − d`.
pub fn codim(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.nvars() - krull_dim(ideal)?)
}

/// Recovers `Q(λ)/(1−λ)^d` from the first values of a Hilbert function.
///
/// Picks the least `d` for which `(1−λ)^d · Σ h_n λ^n` vanishes on its last
/// `margin` coefficients inside the known window. Returns `None` when no
/// such `d` exists, meaning more values are needed.
pub fn reconstruct_series(values: &[BigInt], margin: usize) -> Option<HilbertSeries> {
    let len = values.len();
    if len <= margin {
        return None;
    }
    let series: IntPoly = values.to_vec();
    for d in 0..len.saturating_sub(margin) {
        let mut prod = mul(&series, &one_minus_lambda_pow(d));
        prod.resize(prod.len().max(len), BigInt::zero());
        prod.truncate(len);
        if prod[len - margin..].iter().all(Zero::is_zero) {
            let s = HilbertSeries::from_numerator(d, prod);
            if s.dim() == d {
                return Some(s);
            }
        }
    }
    None
}
