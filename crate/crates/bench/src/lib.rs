//! Benchmark workloads shared by the criterion targets.

use hurwitz_core::profiles::partitions;
use hurwitz_core::{HurwitzIndex, MemoTable};

/// Fills a fresh table with every `H^r_{g,n}(mu)` for `2g - 2 + n <= chi_max`
/// and `|mu| <= degree_max`, returning the number of values requested.
pub fn fill_table(r: u64, chi_max: i64, degree_max: u64) -> (usize, MemoTable) {
    let mut memo = MemoTable::new();
    let mut count = 0;
    for g in 0..=((chi_max + 1) / 2) as u64 {
        for n in 1..=(chi_max + 2 - 2 * g as i64).max(0) as usize {
            for d in (1..=degree_max).filter(|d| d % r == 0) {
                for mu in partitions(d, n).into_iter().filter(|p| p.len() == n) {
                    memo.arrowed(&HurwitzIndex::new(r, g, mu).expect("partition is a valid profile"));
                    count += 1;
                }
            }
        }
    }
    (count, memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workload_sizes() {
        let (count, memo) = fill_table(1, 4, 8);
        assert!(count > 0);
        assert!(memo.len() >= count / 2);
        let (count2, _) = fill_table(2, 1, 6);
        assert!(count2 > 0 && count2 < count);
    }
}
