//! Independent sets of a cycle: enumeration, and the greedy extension of an
//! independent set of `C_{2k+1}` to one whose consecutive members sit at
//! cyclic distance 2 or 3, every 3-gap keeping one of its endpoints in the
//! starting set. Several valid extensions can exist; this module fixes the
//! greedy one (fill forward by steps of 2 between consecutive members).

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OddCycleError {
    #[error("k must be at least 2 (cycle length 2k+1 >= 5)")]
    KTooSmall,
    #[error("the starting set must be nonempty")]
    EmptySet,
    #[error("vertex {0} out of range for a cycle on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("starting set is not independent: {0} and {1} are adjacent on the cycle")]
    NotIndependent(usize, usize),
}

/// True iff `members` is an independent set of the cycle `0..m`.
pub fn is_cycle_independent(m: usize, members: &[usize]) -> bool {
    let mut on = vec![false; m];
    for &v in members {
        if v >= m {
            return false;
        }
        on[v] = true;
    }
    (0..m).all(|v| !(on[v] && on[(v + 1) % m]))
}

/// All nonempty independent sets of the cycle `0..m` as bitmasks.
pub fn cycle_independent_sets(m: usize) -> Vec<u64> {
    assert!(m <= 25, "independent-set enumeration capped at m = 25");
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let mut ok = true;
        for v in 0..m {
            if (mask >> v) & 1 == 1 && (mask >> ((v + 1) % m)) & 1 == 1 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(mask);
        }
    }
    out
}

/// Extends a nonempty independent set `j` of `C_{2k+1}` (vertices `0..2k+1`)
/// to an independent set `I ⊇ j` with all cyclic gaps in `{2, 3}` and every
/// 3-gap having an endpoint in `j`. Between consecutive members of `j` the
/// fill proceeds by steps of two.
pub fn extend_independent_set(k: usize, j: &[usize]) -> Result<Vec<usize>, OddCycleError> {
    if k < 2 {
        return Err(OddCycleError::KTooSmall);
    }
    let m = 2 * k + 1;
    if j.is_empty() {
        return Err(OddCycleError::EmptySet);
    }
    for &v in j {
        if v >= m {
            return Err(OddCycleError::OutOfRange(v, m));
        }
    }
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for w in sorted.windows(2) {
        if w[1] - w[0] == 1 {
            return Err(OddCycleError::NotIndependent(w[0], w[1]));
        }
    }
    if sorted.len() >= 2 && sorted[0] == 0 && *sorted.last().unwrap() == m - 1 {
        return Err(OddCycleError::NotIndependent(m - 1, 0));
    }

    let mut result = sorted.clone();
    let r = sorted.len();
    for i in 0..r {
        let a = sorted[i];
        // cyclic successor; for a singleton the walk wraps the whole cycle
        let b = sorted[(i + 1) % r];
        let gap = (b + m - a) % m;
        let gap = if gap == 0 { m } else { gap };
        // a+2, a+4, ... stopping before b and before b-1
        let mut step = 2;
        while step + 2 <= gap {
            result.push((a + step) % m);
            step += 2;
        }
    }
    result.sort_unstable();
    Ok(result)
}

/// The three contract predicates on an extension, used by tests and callers
/// that want to re-verify an output.
pub fn extension_is_valid(k: usize, j: &[usize], i: &[usize]) -> bool {
    let m = 2 * k + 1;
    if !is_cycle_independent(m, i) {
        return false;
    }
    let jset: std::collections::BTreeSet<usize> = j.iter().copied().collect();
    if !jset.iter().all(|v| i.contains(v)) {
        return false;
    }
    let mut sorted = i.to_vec();
    sorted.sort_unstable();
    let r = sorted.len();
    for idx in 0..r {
        let a = sorted[idx];
        let b = sorted[(idx + 1) % r];
        let gap = (b + m - a) % m;
        let gap = if gap == 0 { m } else { gap };
        match gap {
            2 => {}
            3 => {
                if !jset.contains(&a) && !jset.contains(&b) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_gives_the_alternating_set() {
        // k = 3, start {0}: every other vertex, k members
        let i = extend_independent_set(3, &[0]).unwrap();
        assert_eq!(i, vec![0, 2, 4]);
        assert!(extension_is_valid(3, &[0], &i));
    }

    #[test]
    fn two_member_start_on_c7() {
        let i = extend_independent_set(3, &[0, 3]).unwrap();
        assert!(extension_is_valid(3, &[0, 3], &i));
        assert!(i.contains(&0) && i.contains(&3));
    }

    #[test]
    fn start_already_satisfying_is_kept() {
        // k = 2 (C5), gaps 2 and 3, the 3-gap endpoint is in the start set
        let i = extend_independent_set(2, &[0, 2]).unwrap();
        assert_eq!(i, vec![0, 2]);
        assert!(extension_is_valid(2, &[0, 2], &i));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(extend_independent_set(1, &[0]).unwrap_err(), OddCycleError::KTooSmall);
        assert_eq!(extend_independent_set(2, &[]).unwrap_err(), OddCycleError::EmptySet);
        assert_eq!(
            extend_independent_set(2, &[1, 2]).unwrap_err(),
            OddCycleError::NotIndependent(1, 2)
        );
        assert_eq!(
            extend_independent_set(2, &[0, 4]).unwrap_err(),
            OddCycleError::NotIndependent(4, 0)
        );
        assert!(matches!(
            extend_independent_set(2, &[7]).unwrap_err(),
            OddCycleError::OutOfRange(7, 5)
        ));
    }

    #[test]
    fn exhaustive_over_all_starts_for_small_k() {
        for k in 2..=6usize {
            let m = 2 * k + 1;
            for mask in cycle_independent_sets(m) {
                let j: Vec<usize> = (0..m).filter(|v| (mask >> v) & 1 == 1).collect();
                let i = extend_independent_set(k, &j).unwrap();
                assert!(
                    extension_is_valid(k, &j, &i),
                    "invalid extension for k={k}, start {j:?}: got {i:?}"
                );
            }
        }
    }

    #[test]
    fn independent_set_counts_match_lucas_numbers() {
        // nonempty independent sets of C_m are L(m) - 1
        let lucas = [4u64, 7, 11, 18, 29, 47, 76, 123];
        for (i, &l) in lucas.iter().enumerate() {
            let m = i + 3;
            assert_eq!(cycle_independent_sets(m).len() as u64, l - 1, "m = {m}");
        }
    }
}
