//! Monomials and monomial ideals of `k[x_1, ..., x_k]`.
//!
//! Ideals are always stored by their minimal generating set, sorted by
//! degree and then lexicographically, so structural equality is ideal
//! equality. The zero ideal has no generators; the unit ideal has the single
//! generator `1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        Self::pure_power(nvars, j, 1)
    }

    pub fn pure_power(nvars: usize, j: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[j] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `Some((j, e))` when the monomial is `x_j^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (j, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((j, e));
            }
        }
        found
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(())
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.dvd(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.lcm_raw(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect(),
        ))
    }

    pub fn product(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        self.mul_raw(other)
    }

    /// `self / gcd(self, other)`, i.e. the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.colon_raw(other))
    }

    pub(crate) fn dvd(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_raw(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect(),
        )
    }

    pub(crate) fn mul_raw(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub(crate) fn colon_raw(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Drops the last coordinate.
    fn truncate_last(&self) -> Monomial {
        Monomial(self.0[..self.0.len() - 1].to_vec())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Free-function forms of the monomial lattice operations.
pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    a.divides(b)
}

pub fn lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    a.lcm(b)
}

pub fn product(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    a.product(b)
}

/// A monomial ideal, stored minimalized.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({:?})", self.gens)
    }
}

/// Reduces a set of monomials to its unique minimal generating set.
pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    for g in &all {
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: g.nvars(),
            });
        }
    }
    Ok(MonomialIdeal::from_checked(nvars, std::mem::take(&mut all)))
}

impl MonomialIdeal {
    pub(crate) fn from_checked(nvars: usize, mut all: Vec<Monomial>) -> Self {
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|h| h.dvd(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(nvars, gens)
    }

    /// Builds an ideal from raw exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        minimalize(nvars, gens.iter().map(|g| Monomial::new(g.to_vec())))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_k)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_checked(nvars, (0..nvars).map(|j| Monomial::var(nvars, j)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.nvars() == self.nvars && self.gens.iter().any(|g| g.dvd(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut rho = vec![0; self.nvars];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(g.exponents()) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    /// Every variable has a pure power among the generators.
    pub fn is_m_primary(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let mut seen = vec![false; self.nvars];
        for g in &self.gens {
            if let Some((j, _)) = g.as_pure_power() {
                seen[j] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        Ok(Self::from_checked(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.mul_raw(b)?);
            }
        }
        Ok(Self::from_checked(self.nvars, all))
    }

    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.lcm_raw(b));
            }
        }
        Ok(Self::from_checked(self.nvars, all))
    }

    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        Ok(Self::from_checked(
            self.nvars,
            self.gens.iter().map(|g| g.colon_raw(m)).collect(),
        ))
    }

    /// `self : other`; the colon by the zero ideal is rejected.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let (first, rest) = other.gens.split_first().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for g in rest {
            acc = acc.intersection(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `self : m^∞`. Stops at the first `t` with `I : m^t = I : m^{t+1}`.
    pub fn saturation(&self) -> MonomialIdeal {
        let m = Self::maximal(self.nvars);
        let mut cur = self.clone();
        loop {
            let next = cur.colon(&m).expect("maximal ideal is nonzero");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `ℓ(R/I)`: the number of standard monomials.
    pub fn quotient_length(&self) -> Result<u64> {
        count_standard(&self.gens, self.nvars).ok_or(Error::InfiniteLength)
    }

    /// `ℓ((R/I)_n)`: standard monomials of degree `n`.
    pub fn graded_length(&self, n: i64) -> u64 {
        if n < 0 {
            return 0;
        }
        count_standard_in_degree(&self.gens, self.nvars, n as u64)
    }

    /// Smallest `t` with `m^t ⊆ I`, or `None` when `I` is not m-primary.
    pub fn containing_power(&self) -> Option<u32> {
        if self.is_unit() {
            return Some(0);
        }
        if !self.is_m_primary() {
            return None;
        }
        // m^t ⊆ I once (R/I)_t = 0; this happens by degree Σ(ρ_j - 1) + 1.
        let bound: u64 = self.max_exponents().iter().map(|&r| r as u64).sum();
        (0..=bound as u32).find(|&t| self.graded_length(t as i64) == 0)
    }

    /// All standard monomials of degree `n`.
    pub fn standard_monomials(&self, n: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, n)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }
}

fn project_below(gens: &[Monomial], k: usize, e: u32) -> Vec<Monomial> {
    let sub: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[k - 1] <= e)
        .map(Monomial::truncate_last)
        .collect();
    MonomialIdeal::from_checked(k - 1, sub).gens
}

fn count_standard(gens: &[Monomial], k: usize) -> Option<u64> {
    if gens.iter().any(Monomial::is_one) {
        return Some(0);
    }
    if k == 0 {
        return Some(1);
    }
    let rho = gens.iter().map(|g| g.exponents()[k - 1]).max().unwrap_or(0);
    let mut total = 0u64;
    for e in 0..=rho {
        let c = count_standard(&project_below(gens, k, e), k - 1)?;
        if e == rho {
            // The slice is constant from here on.
            if c > 0 {
                return None;
            }
        } else {
            total = total.checked_add(c)?;
        }
    }
    Some(total)
}

fn count_standard_in_degree(gens: &[Monomial], k: usize, n: u64) -> u64 {
    if gens.iter().any(Monomial::is_one) {
        return 0;
    }
    if k == 0 {
        return u64::from(n == 0);
    }
    if gens.is_empty() {
        return binomial_u64(n + k as u64 - 1, k as u64 - 1);
    }
    (0..=n)
        .map(|e| {
            let e32 = u32::try_from(e).unwrap_or(u32::MAX);
            count_standard_in_degree(&project_below(gens, k, e32), k - 1, n - e)
        })
        .sum()
}

pub(crate) fn binomial_u64(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All monomials of total degree `n` in `nvars` variables, lexicographically descending.
pub fn monomials_of_degree(nvars: usize, n: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if n == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), n, nvars, &mut out);
    out
}

/// Free-function forms of the ideal operations.
pub fn ideal_sum(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.sum(j)
}

pub fn ideal_product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.product(j)
}

pub fn ideal_power(i: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    i.power(n)
}

pub fn ideal_intersection(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.intersection(j)
}

pub fn ideal_colon(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.colon(j)
}

pub fn saturation(i: &MonomialIdeal) -> MonomialIdeal {
    i.saturation()
}

pub fn membership(m: &Monomial, i: &MonomialIdeal) -> bool {
    i.contains(m)
}

pub fn is_m_primary(i: &MonomialIdeal) -> bool {
    i.is_m_primary()
}

pub fn quotient_length(i: &MonomialIdeal) -> Result<u64> {
    i.quotient_length()
}

pub fn graded_length(i: &MonomialIdeal, n: i64) -> u64 {
    i.graded_length(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(k: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(k, gens).unwrap()
    }

    fn example_i() -> MonomialIdeal {
        ideal(2, &[&[3, 0], &[2, 4], &[1, 5], &[0, 7]])
    }

    /// Brute-force minimalization used as an oracle.
    fn oracle_minimal(gens: &[Monomial]) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.dvd(g)))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn lattice_ops() {
        // k[a,b,c,d]
        assert_eq!(lcm(&m(&[0, 1, 0, 0]), &m(&[0, 0, 3, 0])).unwrap(), m(&[0, 1, 3, 0]));
        assert!(divides(&m(&[1]), &m(&[3])).unwrap());
        assert_eq!(product(&m(&[2, 4]), &m(&[1, 5])).unwrap(), m(&[3, 9]));
        assert!(matches!(
            divides(&m(&[1]), &m(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(product(&m(&[u32::MAX]), &m(&[1])), Err(Error::Overflow));
    }

    #[test]
    fn minimalize_examples() {
        // {bc, bd, b², c³, c³d, b²c³} in k[a,b,c,d]
        let raw = vec![
            m(&[0, 1, 1, 0]),
            m(&[0, 1, 0, 1]),
            m(&[0, 2, 0, 0]),
            m(&[0, 0, 3, 0]),
            m(&[0, 0, 3, 1]),
            m(&[0, 2, 3, 0]),
        ];
        let got = minimalize(4, raw.clone()).unwrap();
        let mut gens = got.gens().to_vec();
        gens.sort();
        assert_eq!(gens, oracle_minimal(&raw));
        assert_eq!(gens.len(), 4);
        assert_eq!(minimalize(1, vec![m(&[1]), m(&[2])]).unwrap().gens(), &[m(&[1])]);
        assert!(minimalize(3, vec![]).unwrap().is_zero());
    }

    #[test]
    fn powers_and_products() {
        let q = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(q.product(&q).unwrap(), ideal(2, &[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]]));
        assert_eq!(example_i().power(0).unwrap(), MonomialIdeal::unit(2));
        // pairwise products, then minimalize
        let i = example_i();
        let mut raw = Vec::new();
        for a in i.gens() {
            for b in i.gens() {
                raw.push(a.product(b).unwrap());
            }
        }
        assert_eq!(oracle_minimal(&raw).len(), 7);
        assert_eq!(i.power(2).unwrap().gens().len(), 7);
    }

    #[test]
    fn intersection_examples() {
        let j = ideal(4, &[&[0, 1, 0, 0], &[0, 0, 3, 0]]);
        let k = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 2, 0, 0]]);
        let n = ideal(4, &[&[0, 1, 0, 1], &[0, 1, 1, 0], &[0, 2, 0, 0], &[0, 0, 3, 0]]);
        assert_eq!(j.intersection(&k).unwrap(), n);
        let i = example_i();
        assert_eq!(i.intersection(&MonomialIdeal::unit(2)).unwrap(), i);
        assert_eq!(
            ideal(2, &[&[1, 0]]).intersection(&ideal(2, &[&[0, 1]])).unwrap(),
            ideal(2, &[&[1, 1]])
        );
    }

    #[test]
    fn colon_examples() {
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(example_i().colon(&x).unwrap(), ideal(2, &[&[2, 0], &[1, 4], &[0, 5]]));
        let y = ideal(2, &[&[0, 1]]);
        let i = ideal(2, &[&[2, 1], &[0, 3]]);
        let got = i.colon(&y).unwrap();
        assert_eq!(got, ideal(2, &[&[2, 0], &[0, 2]]));
        // brute force over small degrees: z ∈ I:y iff zy ∈ I
        for d in 0..8 {
            for z in monomials_of_degree(2, d) {
                let zy = z.product(&m(&[0, 1])).unwrap();
                assert_eq!(got.contains(&z), i.contains(&zy));
            }
        }
        assert_eq!(i.colon(&MonomialIdeal::zero(2)), Err(Error::ColonByZero));
    }

    #[test]
    fn saturation_examples() {
        assert!(example_i().saturation().is_unit());
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.saturation(), ideal(2, &[&[1, 0]]));
        let i3 = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
        assert_eq!(i3.saturation(), i3);
    }

    #[test]
    fn membership_and_primary() {
        assert!(example_i().contains(&m(&[3, 1])));
        assert!(example_i().is_m_primary());
        assert!(!ideal(2, &[&[1, 1]]).is_m_primary());
        assert!(!MonomialIdeal::unit(2).is_m_primary());
    }

    #[test]
    fn lengths() {
        let q = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(q.quotient_length().unwrap(), 3);
        let n = ideal(4, &[&[0, 1, 0, 1], &[0, 1, 1, 0], &[0, 2, 0, 0], &[0, 0, 3, 0]]);
        assert_eq!(n.graded_length(1), 4);
        assert_eq!(n.quotient_length(), Err(Error::InfiniteLength));
        let i = example_i();
        let i2 = i.power(2).unwrap();
        let li = i.quotient_length().unwrap();
        let li2 = i2.quotient_length().unwrap();
        // ℓ(I/I²) counted directly: monomials in I not in I², inside the box of I².
        let rho = i2.max_exponents();
        let mut direct = 0;
        for a in 0..rho[0] {
            for b in 0..rho[1] {
                let z = m(&[a, b]);
                if i.contains(&z) && !i2.contains(&z) {
                    direct += 1;
                }
            }
        }
        assert_eq!(li2 - li, direct);
        assert_eq!(ideal(2, &[&[3, 0], &[0, 7]]).quotient_length().unwrap(), 21);
    }

    #[test]
    fn containing_power() {
        let q = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(q.containing_power(), Some(2));
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).containing_power(), Some(3));
        assert_eq!(ideal(2, &[&[1, 0]]).containing_power(), None);
    }
}
