use std::fmt;

use super::membership::{PowerSearch, DEFAULT_NODE_BUDGET};
use super::transversal::{bits, mask_of, minimal_transversals, Mask};
use super::{Monomial, VariableSet};
use crate::error::{Error, Result};

/// A monomial ideal given by its minimal generating set.
///
/// Generators are pairwise incomparable under divisibility and stored in
/// lexicographic order with `x1 > x2 > …` (largest first). The unit ideal is a flag with no
/// generator list; the zero ideal has no generators.
#[derive(Clone)]
pub struct MonomialIdeal {
    ambient: VariableSet,
    gens: Vec<Monomial>,
    unit: bool,
}

impl MonomialIdeal {
    /// Divisibility-minimal subset of `gens`.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, ambient: &VariableSet) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ambient.len()) {
            return Err(Error::LengthMismatch { expected: ambient.len(), found: bad.nvars() });
        }
        Ok(Self::from_unchecked(gens, ambient))
    }

    /// Caller guarantees every monomial lives over `ambient`.
    pub(crate) fn from_unchecked(gens: Vec<Monomial>, ambient: &VariableSet) -> Self {
        if gens.iter().any(Monomial::is_one) {
            return Self::unit(ambient);
        }
        MonomialIdeal { ambient: ambient.clone(), gens: minimal_antichain(gens), unit: false }
    }

    /// Caller guarantees `gens` is already a sorted antichain without the unit monomial.
    pub(crate) fn from_antichain(gens: Vec<Monomial>, ambient: &VariableSet) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] > w[1]));
        MonomialIdeal { ambient: ambient.clone(), gens, unit: false }
    }

    pub fn zero(ambient: &VariableSet) -> Self {
        MonomialIdeal { ambient: ambient.clone(), gens: Vec::new(), unit: false }
    }

    pub fn unit(ambient: &VariableSet) -> Self {
        MonomialIdeal { ambient: ambient.clone(), gens: Vec::new(), unit: true }
    }

    /// Monomial prime `P_S = (x_i : i ∈ S)`.
    pub fn prime(ambient: &VariableSet, support: &[usize]) -> Self {
        let n = ambient.len();
        Self::from_unchecked(support.iter().map(|&i| Monomial::var(i, n)).collect(), ambient)
    }

    /// The homogeneous maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(ambient: &VariableSet) -> Self {
        Self::prime(ambient, &(0..ambient.len()).collect::<Vec<_>>())
    }

    /// Generators given as variable-name lists, each a squarefree monomial.
    pub fn squarefree_from_names<S: AsRef<str>>(ambient: &VariableSet, gens: &[Vec<S>]) -> Result<Self> {
        let n = ambient.len();
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let idx = g
                .iter()
                .map(|s| ambient.index_of(s.as_ref()).ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string())))
                .collect::<Result<Vec<_>>>()?;
            out.push(Monomial::from_support(n, idx));
        }
        Ok(Self::from_unchecked(out, ambient))
    }

    pub fn ambient(&self) -> &VariableSet {
        &self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.unit && !self.gens.is_empty()
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.ambient.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.ambient.len(), found: m.nvars() })
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        if self.unit || other.unit {
            return Ok(Self::unit(&self.ambient));
        }
        Ok(Self::from_unchecked(self.gens.iter().chain(other.gens.iter()).cloned().collect(), &self.ambient))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        let prods = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))).collect();
        Ok(Self::from_unchecked(prods, &self.ambient))
    }

    /// `I^t`, multiplied out one factor at a time with minimalization in between.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Re-index into `into`; `mapping[i]` is the target index of variable `i`.
    pub fn embed(&self, into: &VariableSet, mapping: &[usize]) -> Result<MonomialIdeal> {
        if mapping.len() != self.ambient.len() || mapping.iter().any(|&j| j >= into.len()) {
            return Err(Error::NonInjectiveMapping);
        }
        let mut seen = vec![false; into.len()];
        for &j in mapping {
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::NonInjectiveMapping);
            }
        }
        if self.unit {
            return Ok(Self::unit(into));
        }
        let gens = self.gens.iter().map(|g| g.reindex(mapping, into.len())).collect();
        Ok(Self::from_unchecked(gens, into))
    }

    /// Embed by matching variable names.
    pub fn embed_by_name(&self, into: &VariableSet) -> Result<MonomialIdeal> {
        let mapping = self.ambient.mapping_into(into)?;
        self.embed(into, &mapping)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ambient));
        }
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            if other.contains_monomial_unchecked(a) {
                cands.push(a.clone());
                continue;
            }
            for b in &other.gens {
                cands.push(a.lcm(b));
            }
        }
        Ok(Self::from_unchecked(cands, &self.ambient))
    }

    /// `I : m`, generated by `u / gcd(u, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        if self.unit || self.gens.is_empty() {
            return Ok(self.clone());
        }
        Ok(Self::from_unchecked(self.gens.iter().map(|u| u.colon(m)).collect(), &self.ambient))
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_monomial_unchecked(m))
    }

    pub(crate) fn contains_monomial_unchecked(&self, m: &Monomial) -> bool {
        self.unit || self.gens.iter().any(|g| g.divides(m))
    }

    /// Is `m ∈ I^t`? Uses the default search budget.
    pub fn member_of_power(&self, m: &Monomial, t: u32) -> Result<bool> {
        Ok(self.power_certificate(m, t, DEFAULT_NODE_BUDGET)?.is_some())
    }

    /// A multiset of `t` generators whose product divides `m`, if one exists.
    pub fn power_certificate(&self, m: &Monomial, t: u32, budget: u64) -> Result<Option<Vec<Monomial>>> {
        self.check_monomial(m)?;
        if t == 0 {
            return Err(Error::ZeroPower);
        }
        if self.unit {
            return Ok(Some(vec![Monomial::one(self.ambient.len()); t as usize]));
        }
        if self.gens.is_empty() {
            return Ok(None);
        }
        PowerSearch::new(&self.gens, budget).certificate(m, t)
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ambient(other)?;
        if other.unit {
            return Ok(self.unit);
        }
        Ok(other.gens.iter().all(|g| self.contains_monomial_unchecked(g)))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.unit == other.unit && self.gens == other.gens)
    }

    /// Least generator degree.
    pub fn alpha(&self) -> Result<u32> {
        if self.unit {
            return Ok(0);
        }
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn lcm_of_generators(&self) -> Result<Monomial> {
        if self.unit {
            return Ok(Monomial::one(self.ambient.len()));
        }
        let mut it = self.gens.iter();
        let first = it.next().ok_or(Error::ZeroIdeal)?.clone();
        Ok(it.fold(first, |acc, g| acc.lcm(g)))
    }

    pub(crate) fn require_squarefree_proper(&self) -> Result<()> {
        if !self.is_proper_nonzero() {
            return Err(Error::NotProper);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.ambient.len() > 128 {
            return Err(Error::TooManyVariables(self.ambient.len()));
        }
        Ok(())
    }

    pub(crate) fn support_masks(&self) -> Vec<Mask> {
        self.gens.iter().map(|g| mask_of(g.support())).collect()
    }

    /// Supports `S` of the minimal primes, so that `I = ∩ P_S`; sorted by
    /// size, then lexicographically.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        self.require_squarefree_proper()?;
        Ok(minimal_transversals(&self.support_masks()).into_iter().map(|m| bits(m).collect()).collect())
    }

    /// Largest size of a minimal prime.
    pub fn big_height(&self) -> Result<usize> {
        Ok(self.minimal_primes()?.iter().map(Vec::len).max().unwrap_or(0))
    }

    /// Generators whose support lies inside `vars`, re-indexed into that
    /// sub-ring (`I ∩ k[vars]` for monomial ideals).
    pub fn restrict_to(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let sub = self.ambient.subset(vars)?;
        if self.unit {
            return Ok(Self::unit(&sub));
        }
        let inside = mask_of(vars.iter().copied());
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support().iter().all(|&i| inside & (1 << i) != 0))
            .map(|g| Monomial::new(vars.iter().map(|&i| g.exponent(i)).collect::<Vec<_>>()))
            .collect();
        Ok(Self::from_unchecked(gens, &sub))
    }

    /// One generator per line, each rendered with [`Monomial::display`].
    pub fn display_generators(&self) -> Vec<String> {
        if self.unit {
            return vec!["1".into()];
        }
        self.gens.iter().map(|g| g.display(&self.ambient).to_string()).collect()
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.unit == other.unit && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_generators().join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.display_generators().join(", "))
    }
}

/// Sorted, deduplicated divisibility antichain of `gens`.
pub(crate) fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> VariableSet {
        VariableSet::numbered("x", n)
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| m(g)), &vars(n)).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]).generators(), &[m(&[1, 0])]);
        assert!(ideal(2, &[]).is_zero());
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(i.generators(), &[m(&[1, 1, 0]), m(&[0, 1, 1])]);
    }

    #[test]
    fn minimalize_rejects_length_mismatch() {
        let err = MonomialIdeal::minimalize([m(&[1, 0, 0])], &vars(2)).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn unit_monomial_gives_unit_flag() {
        let i = ideal(2, &[&[0, 0], &[1, 0]]);
        assert!(i.is_unit());
        assert!(i.generators().is_empty());
    }

    #[test]
    fn sum_product_power() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.sum(&x2).unwrap(), ideal(2, &[&[1, 0], &[0, 1]]));
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.power(2).unwrap(), ideal(3, &[&[2, 2, 0], &[1, 2, 1], &[0, 2, 2]]));
        assert_eq!(i.power(1).unwrap(), i);
        assert!(i.product(&MonomialIdeal::zero(&vars(3))).unwrap().is_zero());
        assert!(matches!(i.power(0), Err(Error::ZeroPower)));
    }

    #[test]
    fn embed_examples() {
        let xy = VariableSet::new(["x1", "y1"]).unwrap();
        let i = MonomialIdeal::minimalize([m(&[1])], &VariableSet::new(["x1"]).unwrap()).unwrap();
        let e = i.embed(&xy, &[0]).unwrap();
        assert_eq!(e.generators(), &[m(&[1, 0])]);

        let y = VariableSet::new(["y1", "y2"]).unwrap();
        let xyy = VariableSet::new(["x1", "y1", "y2"]).unwrap();
        let j = MonomialIdeal::minimalize([m(&[1, 1])], &y).unwrap();
        assert_eq!(j.embed_by_name(&xyy).unwrap().generators(), &[m(&[0, 1, 1])]);
        assert!(matches!(j.embed(&xyy, &[1, 1]), Err(Error::NonInjectiveMapping)));
    }

    #[test]
    fn intersect_examples() {
        let x1 = ideal(3, &[&[1, 0, 0]]);
        let x2 = ideal(3, &[&[0, 1, 0]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(3, &[&[1, 1, 0]]));
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, &[&[0, 1, 0], &[1, 0, 1]]));
        assert_eq!(a.intersect(&MonomialIdeal::unit(&vars(3))).unwrap(), a);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.colon(&m(&[0, 1, 0])).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
    }

    #[test]
    fn membership_examples() {
        let i = ideal(3, &[&[1, 1, 0]]);
        assert!(i.contains_monomial(&m(&[1, 1, 1])).unwrap());
        assert!(!i.contains_monomial(&m(&[1, 0, 0])).unwrap());
        assert!(!MonomialIdeal::zero(&vars(3)).contains_monomial(&m(&[1, 1, 1])).unwrap());

        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let cert = j.power_certificate(&m(&[1, 2, 1]), 2, DEFAULT_NODE_BUDGET).unwrap().unwrap();
        let mut cert = cert;
        cert.sort();
        assert_eq!(cert, vec![m(&[0, 1, 1]), m(&[1, 1, 0])]);
    }

    #[test]
    fn containment_and_equality() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(i.contains_ideal(&i.power(2).unwrap()).unwrap());
        let redundant = MonomialIdeal::minimalize(
            i.generators().iter().cloned().chain([m(&[1, 1, 1])]),
            i.ambient(),
        )
        .unwrap();
        assert!(i.equals(&redundant).unwrap());
        assert!(!ideal(2, &[&[1, 0]]).contains_ideal(&ideal(2, &[&[0, 1]])).unwrap());
    }

    #[test]
    fn alpha_lcm_squarefree() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.alpha().unwrap(), 2);
        assert_eq!(i.power(3).unwrap().alpha().unwrap(), 6);
        assert!(matches!(MonomialIdeal::zero(&vars(2)).alpha(), Err(Error::ZeroIdeal)));
        assert_eq!(i.lcm_of_generators().unwrap(), m(&[1, 1, 1]));
        assert!(i.is_squarefree());
        assert!(!i.power(2).unwrap().is_squarefree());
    }

    #[test]
    fn minimal_primes_examples() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.minimal_primes().unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(ideal(1, &[&[1]]).minimal_primes().unwrap(), vec![vec![0]]);
        assert_eq!(ideal(1, &[&[1]]).big_height().unwrap(), 1);
        assert!(matches!(ideal(2, &[&[2, 0]]).minimal_primes(), Err(Error::NotSquarefree)));
    }

    #[test]
    fn restriction_keeps_inside_generators() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = i.restrict_to(&[0, 1]).unwrap();
        assert_eq!(r.generators(), &[m(&[1, 1])]);
    }
}
