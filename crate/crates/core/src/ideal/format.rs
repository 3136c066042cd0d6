//! Plain-text ideal format.
//!
//! ```text
//! x1 x2 x3
//! x1 x2
//! x2^2 x3
//! ```
//! The first line names the variables; every further line is one generator.
//! `1` denotes the unit monomial, `#` starts a comment, blank lines are skipped.

use super::{Monomial, MonomialIdeal, VariableSet};
use crate::error::{Error, Result};

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing variable line"))?;
    let vars = VariableSet::new(header.split_whitespace()).map_err(|e| Error::parse(1, e.to_string()))?;
    let mut gens = Vec::new();
    for (line, l) in lines {
        gens.push(parse_monomial(l, &vars).map_err(|msg| Error::parse(line, msg))?);
    }
    MonomialIdeal::minimalize(gens, &vars)
}

pub fn parse_monomial(text: &str, vars: &VariableSet) -> std::result::Result<Monomial, String> {
    let mut exps = vec![0u32; vars.len()];
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, e) = match tok.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| format!("bad exponent in {tok:?}"))?),
            None => (tok, 1),
        };
        let i = vars.index_of(name).ok_or_else(|| format!("unknown variable {name:?}"))?;
        exps[i] += e;
    }
    Ok(Monomial::new(exps))
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = ideal.ambient().to_string();
    out.push('\n');
    for g in ideal.display_generators() {
        out.push_str(&g);
        out.push('\n');
    }
    out
}
