//! Numerical semigroup rings `k[[t^{a_1}, ..., t^{a_g}]]` and their monomial ideals.
//!
//! A monomial ideal is its set of values `E ⊆ S`, closed under `+S` and
//! cofinite in `S`. It is stored as membership below a threshold `c` with
//! `[c, ∞) ⊆ E`, `c` minimal. Every ideal operation is sumset arithmetic.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u32>,
    conductor: u32,
    /// Membership for `0..conductor`.
    member: Vec<bool>,
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.gens)
    }
}

impl NumericalSemigroup {
    pub fn new(generators: &[u32]) -> Result<Self> {
        let mut gens: Vec<u32> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        let g = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("generators have gcd {g}")));
        }
        // Frobenius number is below (a_1 − 1)(a_g − 1) for any two coprime-ish
        // generators; a_1·a_g bounds it in every case.
        let bound = (gens[0] as usize) * (*gens.last().unwrap() as usize) + 1;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for x in 1..=bound {
            member[x] = gens.iter().any(|&a| a as usize <= x && member[x - a as usize]);
        }
        let conductor = (0..=bound)
            .rev()
            .find(|&x| !member[x])
            .map_or(0, |f| f + 1) as u32;
        member.truncate(conductor as usize);
        // Minimal generators: not a sum of two nonzero elements.
        let minimal: Vec<u32> = gens
            .iter()
            .copied()
            .filter(|&a| {
                !(1..a).any(|b| {
                    let (b, c) = (b, a - b);
                    Self::raw_contains(&member, conductor, b) && Self::raw_contains(&member, conductor, c)
                })
            })
            .collect();
        Ok(NumericalSemigroup {
            gens: minimal,
            conductor,
            member,
        })
    }

    /// The semigroup ℕ, i.e. the ring `k[[t]]`.
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("valid")
    }

    fn raw_contains(member: &[bool], conductor: u32, x: u32) -> bool {
        x >= conductor || member[x as usize]
    }

    pub fn contains(&self, x: u32) -> bool {
        Self::raw_contains(&self.member, self.conductor, x)
    }

    /// Minimal generators.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.gens[0]
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Largest gap, `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// The maximal ideal `S \ {0}`.
    pub fn maximal_ideal(&self) -> SemigroupIdeal {
        SemigroupIdeal::new(self, &self.gens).expect("nonempty")
    }

    /// The unit ideal.
    pub fn whole(&self) -> SemigroupIdeal {
        SemigroupIdeal::new(self, &[0]).expect("nonempty")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SemigroupIdeal {
    semigroup: NumericalSemigroup,
    /// Membership for `0..threshold`.
    prefix: Vec<bool>,
    threshold: u32,
    gens: Vec<u32>,
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) over {:?}", self.gens, self.semigroup)
    }
}

impl SemigroupIdeal {
    /// The ideal generated by `t^g`, `g ∈ gens`.
    pub fn new(semigroup: &NumericalSemigroup, gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        if let Some(&g) = gens.iter().find(|&&g| !semigroup.contains(g)) {
            return Err(Error::InvalidSemigroup(format!("{g} is not in the semigroup")));
        }
        let min = *gens.iter().min().unwrap();
        let bound = min + semigroup.conductor;
        let member = |x: u32| gens.iter().any(|&g| g <= x && semigroup.contains(x - g));
        Ok(Self::from_membership(semigroup, bound, member))
    }

    /// Builds the ideal with membership `member` below `bound` and everything
    /// from `bound` on.
    fn from_membership(
        semigroup: &NumericalSemigroup,
        bound: u32,
        member: impl Fn(u32) -> bool,
    ) -> Self {
        let mut prefix: Vec<bool> = (0..bound).map(&member).collect();
        let mut threshold = bound;
        while threshold > 0 && prefix[threshold as usize - 1] {
            threshold -= 1;
        }
        prefix.truncate(threshold as usize);
        let mut ideal = SemigroupIdeal {
            semigroup: semigroup.clone(),
            prefix,
            threshold,
            gens: Vec::new(),
        };
        // x is a minimal generator iff x − a ∉ E for every semigroup generator a.
        let top = ideal.threshold + semigroup.multiplicity();
        ideal.gens = (0..top)
            .filter(|&x| {
                ideal.contains(x)
                    && !semigroup
                        .generators()
                        .iter()
                        .any(|&a| a <= x && ideal.contains(x - a))
            })
            .collect();
        ideal
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= self.threshold || self.prefix[x as usize]
    }

    /// Minimal generators.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    /// Smallest `c` with `[c, ∞) ⊆ E`.
    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    /// Smallest element.
    pub fn min_element(&self) -> u32 {
        self.gens[0]
    }

    /// Elements below the threshold.
    pub fn finite_part(&self) -> Vec<u32> {
        (0..self.threshold).filter(|&x| self.contains(x)).collect()
    }

    fn check(&self, other: &SemigroupIdeal) -> Result<()> {
        if self.semigroup != other.semigroup {
            return Err(Error::InvalidSemigroup("ideals over different semigroups".into()));
        }
        Ok(())
    }

    pub fn product(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        self.check(other)?;
        let sums: Vec<u32> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a + b))
            .collect();
        SemigroupIdeal::new(&self.semigroup, &sums)
    }

    pub fn power(&self, n: u32) -> SemigroupIdeal {
        let mut acc = self.semigroup.whole();
        for _ in 0..n {
            acc = acc.product(self).expect("same semigroup");
        }
        acc
    }

    /// `t^a · E`.
    pub fn translate(&self, a: u32) -> Result<SemigroupIdeal> {
        let shifted: Vec<u32> = self.gens.iter().map(|g| g + a).collect();
        SemigroupIdeal::new(&self.semigroup, &shifted)
    }

    /// `E : F = {z ∈ S : z + F ⊆ E}`.
    pub fn colon(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        self.check(other)?;
        let s = &self.semigroup;
        let bound = self.threshold.max(s.conductor);
        Ok(Self::from_membership(s, bound, |z| {
            s.contains(z) && other.gens.iter().all(|&f| self.contains(z + f))
        }))
    }

    pub fn intersection(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        self.check(other)?;
        let bound = self.threshold.max(other.threshold);
        Ok(Self::from_membership(&self.semigroup, bound, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    pub fn is_subset_of(&self, other: &SemigroupIdeal) -> bool {
        (0..self.threshold.max(other.threshold)).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `ℓ(R/E) = #(S \ E)`.
    pub fn colength(&self) -> u64 {
        (0..self.threshold)
            .filter(|&x| self.semigroup.contains(x) && !self.contains(x))
            .count() as u64
    }

    /// `ℓ(E/F)` for `F ⊆ E`.
    pub fn length_over(&self, smaller: &SemigroupIdeal) -> Result<u64> {
        if !smaller.is_subset_of(self) {
            return Err(Error::Containment("length_over needs F ⊆ E"));
        }
        Ok(smaller.colength() - self.colength())
    }
}

const STABILITY_BOUND: u32 = 64;

/// Ratliff-Rush closure of `E^power`: the stable value of `E^{power+n} : E^n`.
pub fn rr_power_sg(ideal: &SemigroupIdeal, power: u32) -> Result<SemigroupIdeal> {
    let mut prev: Option<SemigroupIdeal> = None;
    let mut streak = 0;
    for n in 1..=STABILITY_BOUND {
        let cur = ideal.power(power + n).colon(&ideal.power(n))?;
        if prev.as_ref() == Some(&cur) {
            streak += 1;
            if streak == 2 {
                return Ok(cur);
            }
        } else {
            streak = 0;
        }
        prev = Some(cur);
    }
    Err(Error::NotStabilized {
        what: "Ratliff-Rush colon sequence",
        bound: STABILITY_BOUND,
    })
}

/// Ratliff-Rush closure of `E` itself.
pub fn rr_sg(ideal: &SemigroupIdeal) -> Result<SemigroupIdeal> {
    rr_power_sg(ideal, 1)
}

pub fn ideal_product_sg(e: &SemigroupIdeal, f: &SemigroupIdeal) -> Result<SemigroupIdeal> {
    e.product(f)
}

pub fn ideal_power_sg(e: &SemigroupIdeal, n: u32) -> SemigroupIdeal {
    e.power(n)
}

pub fn colon_sg(e: &SemigroupIdeal, f: &SemigroupIdeal) -> Result<SemigroupIdeal> {
    e.colon(f)
}

pub fn length_sg(e: &SemigroupIdeal) -> u64 {
    e.colength()
}

/// `e(E) = min E`.
pub fn multiplicity_sg(e: &SemigroupIdeal) -> u64 {
    e.min_element() as u64
}

/// Reduction number with respect to `J = (t^{min E})`: the least `n` with
/// `E^{n+1} = min E + E^n`.
pub fn reduction_number_sg(e: &SemigroupIdeal) -> Result<(u32, u32)> {
    let m = e.min_element();
    let bound = m + 2;
    let mut pow = e.semigroup.whole();
    for n in 0..=bound {
        let next = pow.product(e)?;
        if next == pow.translate(m)? {
            return Ok((n, m));
        }
        pow = next;
    }
    Err(Error::NotAReduction(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (NumericalSemigroup, SemigroupIdeal) {
        let s = NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap();
        let i = SemigroupIdeal::new(&s, &[4, 5, 6]).unwrap();
        (s, i)
    }

    #[test]
    fn semigroup_basics() {
        let s = NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3]);
        assert_eq!(s.frobenius(), 3);
        let s = NumericalSemigroup::new(&[3, 5, 6, 9]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(NumericalSemigroup::naturals().frobenius(), -1);
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
    }

    #[test]
    fn example_powers() {
        let (s, i) = example();
        assert_eq!(i.finite_part(), vec![4, 5, 6]);
        assert_eq!(i.threshold(), 8);
        let i2 = i.power(2);
        let m = s.maximal_ideal();
        assert_eq!(i2, m.power(2));
        assert_eq!(i2.threshold(), 8);
        assert_eq!(rr_power_sg(&i, 2).unwrap(), i2);
        assert_eq!(rr_sg(&i2).unwrap(), i2);
        assert_eq!(length_sg(&i), 2);
        assert_eq!(length_sg(&i2), 5);
        assert_eq!(i.length_over(&i2).unwrap(), 3);
    }

    #[test]
    fn reduction_numbers() {
        let (_, i) = example();
        assert_eq!(reduction_number_sg(&i).unwrap(), (2, 4));
        let n = NumericalSemigroup::naturals();
        assert_eq!(reduction_number_sg(&n.maximal_ideal()).unwrap().0, 0);
        let s23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(reduction_number_sg(&s23.maximal_ideal()).unwrap().0, 1);
    }

    /// Apéry set size of `e` in `S`: `#(S \ (e + S))`.
    fn apery_count(s: &NumericalSemigroup, e: u32) -> u64 {
        (0..s.conductor() + e)
            .filter(|&x| s.contains(x) && !(x >= e && s.contains(x - e)))
            .count() as u64
    }

    #[test]
    fn multiplicities() {
        let (s, i) = example();
        assert_eq!(multiplicity_sg(&i), 4);
        assert_eq!(apery_count(&s, 4), 4);
        assert_eq!(multiplicity_sg(&s.maximal_ideal()), 4);
        let n = NumericalSemigroup::naturals();
        assert_eq!(multiplicity_sg(&n.maximal_ideal()), 1);
    }

    #[test]
    fn colon_is_an_ideal() {
        let (s, i) = example();
        let c = i.power(3).colon(&i).unwrap();
        for x in 0..40 {
            if c.contains(x) {
                for &a in s.generators() {
                    assert!(c.contains(x + a));
                }
                for &g in i.generators() {
                    assert!(i.power(3).contains(x + g));
                }
            }
        }
    }

    #[test]
    fn empty_ideal_rejected() {
        let (s, _) = example();
        assert_eq!(SemigroupIdeal::new(&s, &[]), Err(Error::EmptyIdeal));
        assert!(SemigroupIdeal::new(&s, &[3]).is_err());
    }
}
