//! Decision procedure for `m ∈ I^t`: find `t` generators (with repetition)
//! whose product divides `m`.

use std::collections::HashSet;

use super::Monomial;
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

pub(crate) struct PowerSearch<'a> {
    gens: Vec<&'a Monomial>,
    // suffix minimum of generator degrees
    min_deg_from: Vec<u32>,
    cap: Vec<u32>,
    budget: u64,
    nodes: u64,
    failed: HashSet<(Box<[u32]>, u32, usize)>,
}

impl<'a> PowerSearch<'a> {
    pub(crate) fn new(gens: &'a [Monomial], budget: u64) -> Self {
        let mut gens: Vec<&Monomial> = gens.iter().collect();
        gens.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        let mut min_deg_from = vec![u32::MAX; gens.len() + 1];
        for i in (0..gens.len()).rev() {
            min_deg_from[i] = min_deg_from[i + 1].min(gens[i].degree());
        }
        let n = gens.first().map_or(0, |g| g.nvars());
        let cap = (0..n).map(|v| gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0)).collect();
        PowerSearch { gens, min_deg_from, cap, budget, nodes: 0, failed: HashSet::new() }
    }

    pub(crate) fn certificate(mut self, m: &Monomial, t: u32) -> Result<Option<Vec<Monomial>>> {
        let mut residual: Vec<u32> = m.exponents().to_vec();
        let mut path = Vec::with_capacity(t as usize);
        if self.search(&mut residual, t, 0, &mut path)? {
            Ok(Some(path.into_iter().map(|i| self.gens[i].clone()).collect()))
        } else {
            Ok(None)
        }
    }

    fn search(&mut self, residual: &mut [u32], t: u32, start: usize, path: &mut Vec<usize>) -> Result<bool> {
        if t == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        // Exponent beyond what t more generators can use is irrelevant.
        for (r, &c) in residual.iter_mut().zip(&self.cap) {
            *r = (*r).min(c * t);
        }
        let total: u64 = residual.iter().map(|&r| r as u64).sum();
        if total < t as u64 * self.min_deg_from[start] as u64 {
            return Ok(false);
        }
        let key = (Box::<[u32]>::from(&*residual), t, start);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        for i in start..self.gens.len() {
            let g = self.gens[i];
            if !g.exponents().iter().zip(residual.iter()).all(|(a, b)| a <= b) {
                continue;
            }
            let mut next: Vec<u32> = residual.iter().zip(g.exponents()).map(|(r, e)| r - e).collect();
            path.push(i);
            if self.search(&mut next, t - 1, i, path)? {
                return Ok(true);
            }
            path.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn c5_edges() -> Vec<Monomial> {
        (0..5).map(|i| Monomial::from_support(5, [i, (i + 1) % 5])).collect()
    }

    #[test]
    fn squarefree_product_of_c5_not_in_cube() {
        let gens = c5_edges();
        let r = PowerSearch::new(&gens, DEFAULT_NODE_BUDGET).certificate(&m(&[1, 1, 1, 1, 1]), 3).unwrap();
        assert!(r.is_none());
        let r = PowerSearch::new(&gens, DEFAULT_NODE_BUDGET).certificate(&m(&[1, 1, 1, 1, 1]), 2).unwrap();
        let cert = r.unwrap();
        assert_eq!(cert.len(), 2);
        let prod = cert.iter().fold(Monomial::one(5), |a, g| a.mul(g));
        assert!(prod.divides(&m(&[1, 1, 1, 1, 1])));
    }

    #[test]
    fn budget_is_enforced() {
        let gens = c5_edges();
        let err = PowerSearch::new(&gens, 1).certificate(&m(&[3, 3, 3, 3, 3]), 7).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1 }));
    }
}
