use std::fmt;

use super::VariableSet;

/// Exponent vector over a fixed ordered variable set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    /// Squarefree monomial `x_U` on the given variable indices.
    pub fn from_support(nvars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; nvars];
        for i in support {
            e[i] = 1;
        }
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    /// `self / gcd(self, other)`: the colon of a principal monomial ideal.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.zip_with(other, |a, b| a - b))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(self.exps.iter().map(|e| e * k).collect::<Vec<_>>())
    }

    /// Re-index into a ring with `nvars` variables; `mapping[i]` is the new index of variable `i`.
    pub fn reindex(&self, mapping: &[usize], nvars: usize) -> Monomial {
        let mut e = vec![0; nvars];
        for (i, &x) in self.exps.iter().enumerate() {
            e[mapping[i]] = x;
        }
        Monomial::new(e)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| f(a, b)).collect::<Vec<_>>())
    }

    /// Renders as `x1^2 x3`, or `1` for the unit monomial.
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, vars }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps)
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(self.vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        assert_eq!(a.mul(&b), m(&[1, 3, 3]));
        assert_eq!(a.lcm(&b), m(&[1, 2, 3]));
        assert_eq!(a.gcd(&b), m(&[0, 1, 0]));
        assert_eq!(a.colon(&b), m(&[1, 1, 0]));
        assert_eq!(a.checked_div(&m(&[1, 1, 0])), Some(m(&[0, 1, 0])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.degree(), 3);
        assert!(m(&[0, 1, 0]).divides(&a));
        assert!(!a.divides(&b));
    }

    #[test]
    fn display() {
        let v = VariableSet::numbered("x", 3);
        assert_eq!(m(&[2, 0, 1]).display(&v).to_string(), "x1^2 x3");
        assert_eq!(Monomial::one(3).display(&v).to_string(), "1");
    }
}
