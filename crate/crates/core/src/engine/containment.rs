use serde::Serialize;

use super::node_budget;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};
use crate::symbolic::{symbolic_power, SymbolicPowerSpec};

/// One line of a containment certificate: `t` generators of `I` whose
/// product divides a minimal generator of `I^(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub generator: Monomial,
    pub factors: Vec<Monomial>,
}

/// Outcome of deciding `I^(s) ⊆ I^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentResult {
    pub s: u32,
    pub t: u32,
    pub holds: bool,
    /// First generator of `I^(s)` (canonical order) outside `I^t`.
    pub witness: Option<Monomial>,
    pub certificate: Option<Vec<CertificateEntry>>,
}

impl ContainmentResult {
    /// Re-check the witness or certificate against `ideal` from scratch.
    ///
    /// A witness must satisfy the prime-sum test for `I^(s)` and fail the
    /// power search for `I^t`. A certificate must cover every minimal
    /// generator of `I^(s)` with exactly `t` generators of `I` whose product
    /// divides it.
    pub fn verify(&self, ideal: &MonomialIdeal) -> Result<bool> {
        let spec = SymbolicPowerSpec::new(ideal, self.s)?;
        if let Some(w) = &self.witness {
            if self.holds || !spec.member(w)? || ideal.member_of_power(w, self.t)? {
                return Ok(false);
            }
        }
        if let Some(cert) = &self.certificate {
            if !self.holds {
                return Ok(false);
            }
            let sym = symbolic_power(ideal, self.s)?;
            if cert.len() != sym.num_generators() {
                return Ok(false);
            }
            for (entry, g) in cert.iter().zip(sym.generators()) {
                if &entry.generator != g || entry.factors.len() != self.t as usize {
                    return Ok(false);
                }
                let n = ideal.ambient().len();
                let product = entry.factors.iter().fold(Monomial::one(n), |acc, f| acc.mul(f));
                if !product.divides(g) || !entry.factors.iter().all(|f| ideal.generators().contains(f)) {
                    return Ok(false);
                }
            }
        }
        Ok(self.holds != self.witness.is_some())
    }

    /// Serializable form with monomials rendered over `vars`.
    pub fn view(&self, vars: &VariableSet) -> ContainmentView {
        let show = |m: &Monomial| m.display(vars).to_string();
        ContainmentView {
            s: self.s,
            t: self.t,
            holds: self.holds,
            witness: self.witness.as_ref().map(show),
            certificate: self.certificate.as_ref().map(|c| {
                c.iter().map(|e| (show(&e.generator), e.factors.iter().map(show).collect())).collect()
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentView {
    pub s: u32,
    pub t: u32,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<(String, Vec<String>)>>,
}

/// Decide `I^(s) ⊆ I^t` by testing every minimal generator of `I^(s)`.
/// The search budget comes from [`node_budget`].
pub fn check_containment(ideal: &MonomialIdeal, s: u32, t: u32, certify: bool) -> Result<ContainmentResult> {
    ideal.require_squarefree_proper()?;
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    let sym = symbolic_power(ideal, s)?;
    check_containment_with(ideal, &sym, s, t, certify, node_budget())
}

/// As [`check_containment`] with `I^(s)` precomputed.
pub fn check_containment_with(
    ideal: &MonomialIdeal,
    symbolic: &MonomialIdeal,
    s: u32,
    t: u32,
    certify: bool,
    budget: u64,
) -> Result<ContainmentResult> {
    if t == 0 || s == 0 {
        return Err(Error::ZeroPower);
    }
    let min_degree = t * ideal.alpha()?;
    let mut cert = certify.then(Vec::new);
    for g in symbolic.generators() {
        let found = if g.degree() < min_degree { None } else { ideal.power_certificate(g, t, budget)? };
        match found {
            None => {
                return Ok(ContainmentResult { s, t, holds: false, witness: Some(g.clone()), certificate: None });
            }
            Some(factors) => {
                if let Some(c) = cert.as_mut() {
                    c.push(CertificateEntry { generator: g.clone(), factors });
                }
            }
        }
    }
    Ok(ContainmentResult { s, t, holds: true, witness: None, certificate: cert })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin_graph, Graph};

    #[test]
    fn cover_c5_examples() {
        let j = Graph::cycle(5).unwrap().cover_ideal().unwrap();
        let r = check_containment(&j, 2, 2, false).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Monomial::new(vec![1; 5])));
        assert!(r.verify(&j).unwrap());
        let r = check_containment(&j, 6, 5, true).unwrap();
        assert!(r.holds);
        assert!(r.verify(&j).unwrap());
        assert_eq!(r.certificate.as_ref().unwrap().len(), symbolic_power(&j, 6).unwrap().num_generators());
    }

    #[test]
    fn two_triangles_witness() {
        let g = builtin_graph("two-triangles-d2").unwrap();
        let i = g.edge_ideal().unwrap();
        let r = check_containment(&i, 4, 3, false).unwrap();
        assert!(!r.holds);
        let w = r.witness.clone().unwrap();
        // some failing generator must be the product of the two triangles
        let u = Monomial::new(vec![1, 1, 1, 0, 1, 1, 1]);
        assert!(SymbolicPowerSpec::new(&i, 4).unwrap().member(&u).unwrap());
        assert!(!i.member_of_power(&u, 3).unwrap());
        assert!(r.verify(&i).unwrap());
        assert!(w.degree() <= 7);
    }

    #[test]
    fn tampered_results_fail_verification() {
        let j = Graph::cycle(3).unwrap().cover_ideal().unwrap();
        let mut r = check_containment(&j, 2, 2, false).unwrap();
        r.witness = Some(Monomial::new(vec![2, 2, 0]));
        assert!(!r.verify(&j).unwrap());
        let mut r = check_containment(&j, 4, 3, true).unwrap();
        assert!(r.verify(&j).unwrap());
        r.certificate.as_mut().unwrap()[0].factors.pop();
        assert!(!r.verify(&j).unwrap());
    }

    #[test]
    fn tiny_budget_is_reported() {
        let j = Graph::cycle(7).unwrap().cover_ideal().unwrap();
        let sym = symbolic_power(&j, 6).unwrap();
        let err = check_containment_with(&j, &sym, 6, 5, false, 1).unwrap_err();
        assert!(err.is_resource_guard());
    }
}
