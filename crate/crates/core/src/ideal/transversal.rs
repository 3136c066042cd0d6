//! Minimal transversals (minimal hitting sets) of a set family, on `u128` bitmasks.
//!
//! Shared by minimal primes of squarefree ideals, minimal vertex covers and
//! hypergraph cover ideals.

pub(crate) type Mask = u128;

pub(crate) fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) fn mask_of(indices: impl IntoIterator<Item = usize>) -> Mask {
    indices.into_iter().fold(0, |m, i| m | (1 << i))
}

/// All inclusion-minimal sets meeting every member of `family`, sorted by
/// (size, then lexicographically on sorted indices). An empty member makes the result empty.
pub(crate) fn minimal_transversals(family: &[Mask]) -> Vec<Mask> {
    if family.iter().any(|&e| e == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    branch(family, 0, 0, &mut out);
    out.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    out.dedup();
    out
}

// Branch on the first unhit set; in branch j the first j-1 elements of that set
// are forbidden, so every transversal is produced at most once.
fn branch(family: &[Mask], chosen: Mask, forbidden: Mask, out: &mut Vec<Mask>) {
    let Some(&e) = family.iter().find(|&&e| e & chosen == 0) else {
        if is_minimal(family, chosen) {
            out.push(chosen);
        }
        return;
    };
    let mut forb = forbidden;
    for v in bits(e) {
        let bit = 1 << v;
        if forb & bit != 0 {
            continue;
        }
        let next = chosen | bit;
        // a set fully inside the forbidden region and unhit can never be hit
        if !family.iter().any(|&f| f & next == 0 && f & !forb & !bit == 0) {
            branch(family, next, forb, out);
        }
        forb |= bit;
    }
}

fn is_minimal(family: &[Mask], chosen: Mask) -> bool {
    bits(chosen).all(|v| {
        let bit = 1 << v;
        family.iter().any(|&f| f & chosen == bit)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(family: &[Mask], n: usize) -> Vec<Mask> {
        let hits = |s: Mask| family.iter().all(|&f| f & s != 0);
        let mut all: Vec<Mask> = (0..(1u128 << n)).filter(|&s| hits(s)).collect();
        all.retain(|&s| bits(s).all(|v| !hits(s & !(1 << v))));
        all.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
        all
    }

    #[test]
    fn five_cycle_covers() {
        let fam: Vec<Mask> = (0..5).map(|i| mask_of([i, (i + 1) % 5])).collect();
        let t = minimal_transversals(&fam);
        assert_eq!(t, brute(&fam, 5));
        assert_eq!(t.len(), 5);
        assert!(t.iter().all(|m| m.count_ones() == 3));
    }

    #[test]
    fn agrees_with_brute_force_on_mixed_family() {
        let fam = vec![mask_of([0, 1, 2]), mask_of([2, 3]), mask_of([3, 4, 5]), mask_of([0, 5]), mask_of([1, 4])];
        assert_eq!(minimal_transversals(&fam), brute(&fam, 6));
    }

    #[test]
    fn empty_member_has_no_transversal() {
        assert!(minimal_transversals(&[0, 1]).is_empty());
        assert_eq!(minimal_transversals(&[]), vec![0]);
    }
}
