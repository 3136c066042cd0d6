use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of variable names. Cheap to clone.
#[derive(Clone)]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidVariables("no variables".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() || n.chars().any(char::is_whitespace) || n.contains('^') {
                return Err(Error::InvalidVariables(format!("bad name {n:?}")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidVariables(format!("duplicate name {n}")));
            }
        }
        Ok(VariableSet { names: names.into() })
    }

    /// `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, count: usize) -> Self {
        VariableSet::new((1..=count).map(|i| format!("{prefix}{i}"))).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Sub-ring on the given indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        VariableSet::new(indices.iter().map(|&i| self.names[i].clone()))
    }

    /// Index map sending each variable of `self` to the variable of `into`
    /// with the same name.
    pub fn mapping_into(&self, into: &VariableSet) -> Result<Vec<usize>> {
        self.names
            .iter()
            .map(|n| into.index_of(n).ok_or_else(|| Error::UnknownVertex(n.clone())))
            .collect()
    }

    /// Concatenation; fails on a name clash.
    pub fn disjoint_union(&self, other: &VariableSet) -> Result<Self> {
        VariableSet::new(self.names.iter().chain(other.names.iter()).cloned())
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VariableSet {}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(VariableSet::new(["x", "x"]).is_err());
        assert!(VariableSet::new(Vec::<String>::new()).is_err());
        assert!(VariableSet::new(["a b"]).is_err());
    }

    #[test]
    fn numbered_and_lookup() {
        let v = VariableSet::numbered("x", 3);
        assert_eq!(v.len(), 3);
        assert_eq!(v.index_of("x2"), Some(1));
        assert_eq!(v.to_string(), "x1 x2 x3");
    }
}
