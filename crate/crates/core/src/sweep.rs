//! Budgeted, deterministic exhaustive sweeps.
//!
//! The classification sweeps enumerate every coefficient tuple up to a
//! degree bound, so pair counts grow as `n^(2(D+1))`. A [`SweepBudget`]
//! keeps runaway requests from hanging the CLI, and [`find_first`] yields
//! the *lexicographically first* witness whether the scan runs on one
//! thread or many — parallel runs must be byte-identical to sequential
//! ones, since reports are compared verbatim in tests and CI.

use rayon::prelude::*;

use crate::error::Error;

/// Limits for an exhaustive sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBudget {
    /// Maximum number of (f, g) pairs a single sweep may enumerate.
    pub max_pairs: u64,
    /// Fan the scan out over rayon's thread pool.
    pub parallel: bool,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget { max_pairs: 50_000_000, parallel: false }
    }
}

impl SweepBudget {
    pub fn sequential() -> Self {
        SweepBudget::default()
    }

    pub fn admit(&self, pairs: u64) -> Result<(), Error> {
        if pairs > self.max_pairs {
            Err(Error::BudgetExceeded { pairs, budget: self.max_pairs })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` without overflow, for sizing enumerations.
pub fn checked_power(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Little-endian base-`base` digits of `index`, `len` of them. The digit
/// order defines the canonical enumeration of coefficient tuples: position
/// 0 (the constant term) varies fastest.
pub(crate) fn decode_base(mut index: u64, base: u64, len: usize) -> Vec<usize> {
    let mut digits = vec![0usize; len];
    for d in digits.iter_mut() {
        *d = (index % base) as usize;
        index /= base;
    }
    digits
}

/// First index in `0..total` (in numeric order) for which `test` yields a
/// value, together with that value. Parallel mode uses `find_map_first`,
/// which preserves sequential semantics while pruning work past a match.
pub fn find_first<T, F>(total: u64, parallel: bool, test: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    if parallel {
        (0..total).into_par_iter().find_map_first(|i| test(i).map(|w| (i, w)))
    } else {
        (0..total).find_map(|i| test(i).map(|w| (i, w)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_rejects_oversized_sweeps() {
        let b = SweepBudget { max_pairs: 100, parallel: false };
        assert!(b.admit(100).is_ok());
        assert!(matches!(
            b.admit(101),
            Err(Error::BudgetExceeded { pairs: 101, budget: 100 })
        ));
    }

    #[test]
    fn parallel_and_sequential_agree_on_first_witness() {
        // Many matches; both modes must report index 3_001.
        let test = |i: u64| if i > 3_000 && i % 7 == 0 { Some(i * 2) } else { None };
        let seq = find_first(100_000, false, test);
        let par = find_first(100_000, true, test);
        assert_eq!(seq, par);
        assert_eq!(seq, Some((3_003, 6_006)));
    }

    #[test]
    fn no_witness_returns_none() {
        assert_eq!(find_first::<(), _>(1_000, true, |_| None), None);
    }

    #[test]
    fn power_sizing() {
        assert_eq!(checked_power(5, 8), Some(390_625));
        assert_eq!(checked_power(2, 64), None);
    }
}
