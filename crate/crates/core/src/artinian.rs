//! Finite-dimensional linear algebra in truncations `R/T_{N+1}`.
//!
//! `R` is either a polynomial ring localized at the origin or a numerical
//! semigroup ring `k[[t^S]]`; `T_c` is the span of monomials of valuation at
//! least `c` (so `T_c = m^c` in the polynomial case). The image of an ideal in
//! the truncation is the span of `u·g` for monomials `u` and generators `g`,
//! computed as the smallest subspace containing the generators and closed
//! under multiplication by the generators of `m`. Once `T_{N+1}` is known to
//! lie inside the ideals being compared, the truncated images decide
//! equality, containment and lengths exactly.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupIdeal};

/// The local ring whose truncations are taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    Polynomial { nvars: usize },
    Semigroup(NumericalSemigroup),
}

impl Ambient {
    pub fn polynomial(nvars: usize) -> Self {
        Ambient::Polynomial { nvars }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Ambient::Polynomial { nvars } => *nvars,
            Ambient::Semigroup(_) => 1,
        }
    }

    pub fn valuation(&self, m: &Monomial) -> u64 {
        m.degree()
    }

    /// Monomials of valuation `≤ level`, by valuation then lex descending.
    pub fn basis(&self, level: u32) -> Vec<Monomial> {
        match self {
            Ambient::Polynomial { nvars } => {
                (0..=level).flat_map(|d| monomials_of_degree(*nvars, d)).collect()
            }
            Ambient::Semigroup(s) => (0..=level)
                .filter(|&x| s.contains(x))
                .map(|x| Monomial::new(vec![x]))
                .collect(),
        }
    }

    /// Generators of the maximal ideal.
    pub fn multipliers(&self) -> Vec<Monomial> {
        match self {
            Ambient::Polynomial { nvars } => (0..*nvars).map(|j| Monomial::var(*nvars, j)).collect(),
            Ambient::Semigroup(s) => s
                .generators()
                .iter()
                .map(|&a| Monomial::new(vec![a]))
                .collect(),
        }
    }

    /// `T_{c+step} ⊆ m·T_c` for every `c ≥ min_certifiable`.
    fn step(&self) -> u32 {
        match self {
            Ambient::Polynomial { .. } => 1,
            Ambient::Semigroup(s) => s.multiplicity(),
        }
    }

    fn min_certifiable(&self) -> u32 {
        match self {
            Ambient::Polynomial { .. } => 0,
            Ambient::Semigroup(s) => s.conductor(),
        }
    }

    fn check(&self, e: &PolyElement) -> Result<()> {
        for m in e.terms.keys() {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
            if let Ambient::Semigroup(s) = self {
                if !s.contains(m.exponents()[0]) {
                    return Err(Error::InvalidSemigroup(format!(
                        "t^{} is not in the ring",
                        m.exponents()[0]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A polynomial (or semigroup-ring element) with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

impl PolyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = PolyElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &PolyElement) -> Result<PolyElement> {
        let mut out = PolyElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.product(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Renders `c*m + ...` with a caller-supplied monomial format.
    pub fn display_with(&self, fmt: impl Fn(&Monomial) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = fmt(m);
                match (mono.as_str(), c.is_one()) {
                    ("1", _) => c.to_string(),
                    (_, true) => mono,
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Lowest valuation of a term.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).min()
    }
}

/// Generators of a monomial ideal as ring elements.
pub fn monomial_generators(ideal: &MonomialIdeal) -> Vec<PolyElement> {
    ideal.gens().iter().cloned().map(PolyElement::monomial).collect()
}

/// Generators of a semigroup ideal as ring elements.
pub fn semigroup_generators(ideal: &SemigroupIdeal) -> Vec<PolyElement> {
    ideal
        .generators()
        .iter()
        .map(|&g| PolyElement::monomial(Monomial::new(vec![g])))
        .collect()
}

/// All pairwise products of two generator lists.
pub fn product_generators(a: &[PolyElement], b: &[PolyElement]) -> Result<Vec<PolyElement>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let p = x.mul(y)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// The vector space `R/T_{level+1}` with its monomial basis.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    ambient: Ambient,
    level: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `mult[i][c]`: column of `multiplier_i · basis[c]`, if still in range.
    mult: Vec<Vec<Option<usize>>>,
}

impl TruncatedAlgebra {
    pub fn new(ambient: Ambient, level: u32) -> Self {
        let basis = ambient.basis(level);
        let index: HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mult = ambient
            .multipliers()
            .iter()
            .map(|u| {
                basis
                    .iter()
                    .map(|b| b.mul_raw(u).ok().and_then(|p| index.get(&p).copied()))
                    .collect()
            })
            .collect();
        TruncatedAlgebra {
            ambient,
            level,
            basis,
            index,
            mult,
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Integer coordinate vector of `e` modulo `T_{level+1}`, scaled to clear denominators.
    pub fn vector(&self, e: &PolyElement) -> SparseRow {
        let denom = e
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let pairs = e.terms.iter().filter_map(|(m, c)| {
            self.index
                .get(m)
                .map(|&i| (i, (c * BigRational::from_integer(denom.clone())).to_integer()))
        });
        crate::linalg::sparse_from_pairs(pairs)
    }

    fn shift(&self, row: &SparseRow, which: usize) -> SparseRow {
        let table = &self.mult[which];
        let mut out: SparseRow = row
            .iter()
            .filter_map(|(c, v)| table[*c].map(|t| (t, v.clone())))
            .collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }

    /// Image of the ideal generated by `gens`.
    pub fn ideal_image(&self, gens: &[PolyElement]) -> Result<IdealSubspace> {
        for g in gens {
            self.ambient.check(g)?;
        }
        let mut echelon = Echelon::new(self.dim());
        let mut queue: VecDeque<SparseRow> = gens.iter().map(|g| self.vector(g)).collect();
        while let Some(row) = queue.pop_front() {
            if let Some(new_row) = echelon.insert(row) {
                for i in 0..self.mult.len() {
                    let shifted = self.shift(&new_row, i);
                    if !shifted.is_empty() {
                        queue.push_back(shifted);
                    }
                }
            }
        }
        Ok(IdealSubspace {
            level: self.level,
            echelon,
            certificate: None,
        })
    }
}

/// Row-reduced image of an ideal in a truncation.
#[derive(Clone, Debug)]
pub struct IdealSubspace {
    level: u32,
    echelon: Echelon,
    /// `t` with `T_t ⊆ ideal`, when known.
    certificate: Option<u32>,
}

impl IdealSubspace {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn certificate(&self) -> Option<u32> {
        self.certificate
    }

    pub fn with_certificate(mut self, t: u32) -> Self {
        self.certificate = Some(t);
        self
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn contains_vector(&self, v: SparseRow) -> bool {
        self.echelon.contains(v)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IdealSubspace) -> bool {
        self.echelon.contains_space(&other.echelon)
    }

    pub fn sum_dim(&self, other: &IdealSubspace) -> usize {
        self.echelon.join(&other.echelon).rank()
    }

    pub fn intersection_dim(&self, other: &IdealSubspace) -> usize {
        self.dim() + other.dim() - self.sum_dim(other)
    }
}

/// A proof that `T_t ⊆ (gens)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub t: u32,
}

/// Smallest certifiable `t ≤ max_t` with `T_t ⊆ (gens)`.
///
/// Certifies `t` when `ℓ(R/(A + T_t)) = ℓ(R/(A + T_{t+step}))`: then
/// `T_t ⊆ A + T_{t+step} ⊆ A + m·T_t`, and Nakayama gives `T_t ⊆ A`.
pub fn certified_truncation(ambient: &Ambient, gens: &[PolyElement], max_t: u32) -> Result<Certificate> {
    let step = ambient.step();
    let mut cache: HashMap<u32, usize> = HashMap::new();
    let mut colength = |t: u32| -> Result<usize> {
        if t == 0 {
            return Ok(0);
        }
        if let Some(&v) = cache.get(&t) {
            return Ok(v);
        }
        let alg = TruncatedAlgebra::new(ambient.clone(), t - 1);
        let v = alg.dim() - alg.ideal_image(gens)?.dim();
        cache.insert(t, v);
        Ok(v)
    };
    for t in ambient.min_certifiable()..=max_t {
        if colength(t)? == colength(t + step)? {
            return Ok(Certificate { t });
        }
    }
    Err(Error::NotCertified(max_t))
}

/// `ℓ(R/(gens))` for an m-primary ideal, read off at its certified truncation.
pub fn colength(ambient: &Ambient, gens: &[PolyElement], max_t: u32) -> Result<u64> {
    let cert = certified_truncation(ambient, gens, max_t)?;
    if cert.t == 0 {
        return Ok(0);
    }
    let alg = TruncatedAlgebra::new(ambient.clone(), cert.t - 1);
    Ok((alg.dim() - alg.ideal_image(gens)?.dim()) as u64)
}

/// Whether `(a)` and `(b)` have the same image in `R/T_{level+1}`.
pub fn ideal_equal_mod(ambient: &Ambient, a: &[PolyElement], b: &[PolyElement], level: u32) -> Result<bool> {
    let alg = TruncatedAlgebra::new(ambient.clone(), level);
    let sa = alg.ideal_image(a)?;
    let sb = alg.ideal_image(b)?;
    Ok(sa.dim() == sb.dim() && sa.contains(&sb))
}

/// Whether the image of `(small)` lies in the image of `(big)`.
pub fn contains_mod(ambient: &Ambient, big: &[PolyElement], small: &[PolyElement], level: u32) -> Result<bool> {
    let alg = TruncatedAlgebra::new(ambient.clone(), level);
    Ok(alg.ideal_image(big)?.contains(&alg.ideal_image(small)?))
}

/// `ℓ(A/B)` for `B ⊆ A`, both containing `T_{level+1}`.
pub fn subspace_length_between(ambient: &Ambient, a: &[PolyElement], b: &[PolyElement], level: u32) -> Result<u64> {
    let alg = TruncatedAlgebra::new(ambient.clone(), level);
    let sa = alg.ideal_image(a)?;
    let sb = alg.ideal_image(b)?;
    if !sa.contains(&sb) {
        return Err(Error::Containment("subspace_length_between needs B ⊆ A"));
    }
    Ok((sa.dim() - sb.dim()) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> PolyElement {
        PolyElement::monomial(Monomial::new(e.to_vec()))
    }

    fn plane() -> Ambient {
        Ambient::polynomial(2)
    }

    #[test]
    fn truncation_certificates() {
        let m2 = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        assert_eq!(certified_truncation(&plane(), &m2, 10).unwrap().t, 2);
        let xy = [mono(&[2, 0]), mono(&[0, 2])];
        assert_eq!(certified_truncation(&plane(), &xy, 10).unwrap().t, 3);
        let ideal = MonomialIdeal::from_exponents(2, &[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(ideal.containing_power(), Some(3));
        assert_eq!(
            certified_truncation(&plane(), &[mono(&[1, 0])], 8),
            Err(Error::NotCertified(8))
        );
    }

    #[test]
    fn equality_and_containment() {
        let i = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        let j = [mono(&[2, 0]), mono(&[0, 2])];
        let ji = product_generators(&j, &i).unwrap();
        let i2 = product_generators(&i, &i).unwrap();
        // m^4 ⊆ both; level 4 covers m^5 ⊆ m·I².
        assert!(ideal_equal_mod(&plane(), &ji, &i2, 4).unwrap());
        let x_i = product_generators(&[mono(&[1, 0])], &i).unwrap();
        assert!(contains_mod(&plane(), &x_i, &[mono(&[3, 0])], 5).unwrap());
        let single = product_generators(&[mono(&[4, 0])], &i).unwrap();
        assert!(!ideal_equal_mod(&plane(), &single, &i2, 6).unwrap());
    }

    #[test]
    fn lengths_between() {
        let i = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        let j = [mono(&[2, 0]), mono(&[0, 2])];
        let ji = product_generators(&j, &i).unwrap();
        let i2 = product_generators(&i, &i).unwrap();
        assert_eq!(subspace_length_between(&plane(), &i2, &ji, 4).unwrap(), 0);
        let m = [mono(&[1, 0]), mono(&[0, 1])];
        let m2 = product_generators(&m, &m).unwrap();
        assert_eq!(subspace_length_between(&plane(), &m, &m2, 3).unwrap(), 2);
        assert_eq!(subspace_length_between(&plane(), &m2, &m2, 3).unwrap(), 0);
        assert!(matches!(
            subspace_length_between(&plane(), &m2, &m, 3),
            Err(Error::Containment(_))
        ));
    }

    #[test]
    fn generic_combination_in_the_plane() {
        // J = (x² + 3y², 2x² + xy + 5y²) reduces m² with r_J = 1.
        let q = |a: i64, b: i64, c: i64| {
            PolyElement::from_terms([
                (Monomial::new(vec![2, 0]), BigRational::from_integer(a.into())),
                (Monomial::new(vec![1, 1]), BigRational::from_integer(b.into())),
                (Monomial::new(vec![0, 2]), BigRational::from_integer(c.into())),
            ])
        };
        let j = [q(1, 0, 3), q(2, 1, 5)];
        let i = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        let ji = product_generators(&j, &i).unwrap();
        let i2 = product_generators(&i, &i).unwrap();
        assert!(ideal_equal_mod(&plane(), &ji, &i2, 4).unwrap());
        assert!(!ideal_equal_mod(&plane(), &j, &i, 2).unwrap());
    }

    #[test]
    fn semigroup_truncation() {
        let s = NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap();
        let amb = Ambient::Semigroup(s.clone());
        let t = |e: u32| PolyElement::monomial(Monomial::new(vec![e]));
        let cert = certified_truncation(&amb, &[t(4), t(5), t(6)], 30).unwrap();
        let i = SemigroupIdeal::new(&s, &[4, 5, 6]).unwrap();
        assert!(cert.t >= i.threshold());
        assert!(amb.check(&t(3)).is_err());
        let gens = semigroup_generators(&i);
        assert_eq!(colength(&amb, &gens, 30).unwrap(), i.colength());
    }

    #[test]
    fn colength_matches_standard_monomials() {
        let ideal = MonomialIdeal::from_exponents(2, &[&[3, 0], &[2, 4], &[1, 5], &[0, 7]]).unwrap();
        assert_eq!(
            colength(&plane(), &monomial_generators(&ideal), 20).unwrap(),
            ideal.quotient_length().unwrap()
        );
    }

    #[test]
    fn rows_reproduce_inputs() {
        let alg = TruncatedAlgebra::new(plane(), 6);
        let gens = [mono(&[3, 0]), mono(&[1, 2]), mono(&[0, 4])];
        let img = alg.ideal_image(&gens).unwrap();
        for g in &gens {
            assert!(img.contains_vector(alg.vector(g)));
        }
    }
}
