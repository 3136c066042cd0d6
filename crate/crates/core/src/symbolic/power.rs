//! `I^(s) = ∩_P P^s` over the minimal primes of a squarefree monomial ideal.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// A squarefree base ideal with its minimal primes cached, at power `s`.
#[derive(Clone, Debug)]
pub struct SymbolicPowerSpec {
    base: MonomialIdeal,
    primes: Vec<Vec<usize>>,
    s: u32,
}

impl SymbolicPowerSpec {
    pub fn new(base: &MonomialIdeal, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        let primes = base.minimal_primes()?;
        Ok(SymbolicPowerSpec { base: base.clone(), primes, s })
    }

    pub fn with_power(&self, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        Ok(SymbolicPowerSpec { s, ..self.clone() })
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn primes(&self) -> &[Vec<usize>] {
        &self.primes
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `m ∈ I^(s)` iff every minimal prime `P` has `Σ_{x_i ∈ P} m_i ≥ s`.
    pub fn member(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.base.ambient().len() {
            return Err(Error::LengthMismatch { expected: self.base.ambient().len(), found: m.nvars() });
        }
        Ok(self.member_unchecked(m))
    }

    pub(crate) fn member_unchecked(&self, m: &Monomial) -> bool {
        let e = m.exponents();
        self.primes.iter().all(|p| p.iter().map(|&i| e[i]).sum::<u32>() >= self.s)
    }
}

/// Which procedure computes the generators of `I^(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolicEngine {
    /// Bounded lattice enumeration with in-search minimality pruning.
    Enumeration,
    /// Fold of pairwise intersections of the `P^s`.
    Intersection,
}

/// `I^(s)` by the enumeration engine.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    symbolic_power_with(ideal, s, SymbolicEngine::Enumeration)
}

pub fn symbolic_power_with(ideal: &MonomialIdeal, s: u32, engine: SymbolicEngine) -> Result<MonomialIdeal> {
    let spec = SymbolicPowerSpec::new(ideal, s)?;
    Ok(match engine {
        SymbolicEngine::Enumeration => enumerate(&spec),
        SymbolicEngine::Intersection => intersect_primes(&spec),
    })
}

/// Run both engines and fail on any disagreement.
pub fn symbolic_power_cross_checked(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    let a = symbolic_power_with(ideal, s, SymbolicEngine::Enumeration)?;
    let b = symbolic_power_with(ideal, s, SymbolicEngine::Intersection)?;
    if a != b {
        return Err(Error::Inconsistent(format!("symbolic power engines disagree at s = {s}")));
    }
    Ok(a)
}

pub fn alpha_symbolic(ideal: &MonomialIdeal, s: u32) -> Result<u32> {
    symbolic_power(ideal, s)?.alpha()
}

pub(crate) fn intersect_primes(spec: &SymbolicPowerSpec) -> MonomialIdeal {
    let ambient = spec.base.ambient();
    let mut acc = MonomialIdeal::unit(ambient);
    for p in &spec.primes {
        let ps = MonomialIdeal::prime(ambient, p).power(spec.s).expect("s is positive");
        acc = acc.intersect(&ps).expect("same ambient");
    }
    acc
}

/// Enumeration engine.
///
/// A minimal generator never has an exponent above `s`: lowering an entry
/// to `s` keeps every prime sum containing it at least `s`. More sharply,
/// `m_i` never exceeds the largest deficit `s − Σ_{P∖i} m` over primes `P ∋ i`,
/// which bounds each coordinate while the search assigns variables in order.
/// A feasible point is minimal iff every positive coordinate lies in a prime
/// whose sum is exactly `s`; this is tested as soon as all primes through
/// that variable are complete, so the leaves are exactly the minimal
/// generators.
pub(crate) fn enumerate(spec: &SymbolicPowerSpec) -> MonomialIdeal {
    let n = spec.base.ambient().len();
    let s = spec.s;
    let primes = &spec.primes;
    let mut primes_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, p) in primes.iter().enumerate() {
        for &i in p {
            primes_of[i].push(k);
        }
    }
    let last_of_prime: Vec<usize> = primes.iter().map(|p| *p.iter().max().unwrap()).collect();
    // primes completed exactly when variable i is assigned
    let mut completes_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, &l) in last_of_prime.iter().enumerate() {
        completes_at[l].push(k);
    }
    // variables whose minimality becomes checkable once variable i is assigned
    let mut check_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if let Some(l) = primes_of[v].iter().map(|&k| last_of_prime[k]).max() {
            check_at[l].push(v);
        }
    }
    let ctx = EnumCtx { s, primes_of, completes_at, check_at, n };

    let first_bound = if ctx.primes_of.first().is_some_and(|p| !p.is_empty()) { s } else { 0 };
    let mut gens: Vec<Monomial> = (0..=first_bound)
        .into_par_iter()
        .flat_map_iter(|a0| {
            let mut exps = vec![0u32; n];
            let mut sums = vec![0u32; primes.len()];
            let mut out = Vec::new();
            if ctx.assign(0, a0, &mut exps, &mut sums) {
                ctx.search(1, &mut exps, &mut sums, &mut out);
            }
            out
        })
        .collect();
    gens.sort_by(|a, b| b.cmp(a));
    if gens.iter().any(Monomial::is_one) {
        return MonomialIdeal::unit(spec.base.ambient());
    }
    MonomialIdeal::from_antichain(gens, spec.base.ambient())
}

struct EnumCtx {
    s: u32,
    n: usize,
    primes_of: Vec<Vec<usize>>,
    completes_at: Vec<Vec<usize>>,
    check_at: Vec<Vec<usize>>,
}

impl EnumCtx {
    /// Set variable `i` to `a`; false if a constraint that just became
    /// final fails.
    fn assign(&self, i: usize, a: u32, exps: &mut [u32], sums: &mut [u32]) -> bool {
        exps[i] = a;
        for &k in &self.primes_of[i] {
            sums[k] += a;
        }
        if self.completes_at[i].iter().any(|&k| sums[k] < self.s) {
            return false;
        }
        self.check_at[i].iter().all(|&v| exps[v] == 0 || self.primes_of[v].iter().any(|&k| sums[k] == self.s))
    }

    fn unassign(&self, i: usize, exps: &mut [u32], sums: &mut [u32]) {
        for &k in &self.primes_of[i] {
            sums[k] -= exps[i];
        }
        exps[i] = 0;
    }

    fn search(&self, i: usize, exps: &mut [u32], sums: &mut [u32], out: &mut Vec<Monomial>) {
        if i == self.n {
            out.push(Monomial::new(exps.to_vec()));
            return;
        }
        let bound = self.primes_of[i].iter().map(|&k| self.s.saturating_sub(sums[k])).max().unwrap_or(0);
        for a in 0..=bound {
            if self.assign(i, a, exps, sums) {
                self.search(i + 1, exps, sums, out);
            }
            self.unassign(i, exps, sums);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn membership_examples() {
        let i5 = Graph::cycle(5).unwrap().edge_ideal().unwrap();
        let spec = SymbolicPowerSpec::new(&i5, 3).unwrap();
        let all = Monomial::new(vec![1; 5]);
        assert!(spec.member(&all).unwrap());
        let j5 = Graph::cycle(5).unwrap().cover_ideal().unwrap();
        assert!(SymbolicPowerSpec::new(&j5, 2).unwrap().member(&all).unwrap());
        assert!(!SymbolicPowerSpec::new(&j5, 1).unwrap().member(&Monomial::var(0, 5)).unwrap());
    }

    #[test]
    fn first_power_is_base() {
        for g in [Graph::cycle(5).unwrap(), Graph::complete(4).unwrap(), Graph::path(4).unwrap()] {
            let i = g.edge_ideal().unwrap();
            assert_eq!(symbolic_power(&i, 1).unwrap(), i);
            let j = g.cover_ideal().unwrap();
            assert_eq!(symbolic_power(&j, 1).unwrap(), j);
        }
    }

    #[test]
    fn odd_cycle_formulas() {
        let i5 = Graph::cycle(5).unwrap().edge_ideal().unwrap();
        let top = MonomialIdeal::minimalize([Monomial::new(vec![1; 5])], i5.ambient()).unwrap();
        assert_eq!(symbolic_power(&i5, 3).unwrap(), i5.power(3).unwrap().sum(&top).unwrap());
        let j5 = Graph::cycle(5).unwrap().cover_ideal().unwrap();
        assert_eq!(symbolic_power(&j5, 2).unwrap(), j5.power(2).unwrap().sum(&top).unwrap());
        assert_eq!(alpha_symbolic(&i5, 3).unwrap(), 5);
        assert_eq!(alpha_symbolic(&i5, 6).unwrap(), 10);
        assert_eq!(alpha_symbolic(&j5, 2).unwrap(), 5);
    }

    #[test]
    fn engines_agree() {
        let g = Graph::numbered(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]).unwrap();
        for i in [g.edge_ideal().unwrap(), g.cover_ideal().unwrap()] {
            for s in 1..=4 {
                symbolic_power_cross_checked(&i, s).unwrap();
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let i = Graph::cycle(3).unwrap().edge_ideal().unwrap();
        assert!(matches!(symbolic_power(&i.power(2).unwrap(), 2), Err(Error::NotSquarefree)));
        assert!(matches!(symbolic_power(&i, 0), Err(Error::ZeroPower)));
    }
}
