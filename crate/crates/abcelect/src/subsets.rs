//! Lexicographic enumeration of fixed-size candidate subsets, with an
//! overflow guard that keeps exhaustive rules at desk scale.

use crate::Error;
use num::bigint::BigUint;
use num::ToPrimitive;

/// Exhaustive rules refuse to enumerate more committees than this.
pub const ENUMERATION_CAP: u64 = 100_000_000;

/// `m choose k` as a big integer.
pub fn binomial(m: usize, k: usize) -> BigUint {
    if k > m {
        return BigUint::from(0u32);
    }
    let k = k.min(m - k);
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(m - i) / BigUint::from(i + 1);
    }
    result
}

/// Checks `1 <= k <= m` and that `m choose k` does not exceed `cap`;
/// returns the exact count.
pub fn ensure_enumerable(m: usize, k: usize, cap: u64) -> Result<u64, Error> {
    if k < 1 || k > m {
        return Err(Error::Invalid(format!(
            "subset size {k} out of range 1..={m}"
        )));
    }
    let count = binomial(m, k);
    match count.to_u64() {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::CapExceeded {
            candidates: m,
            seats: k,
            cap,
        }),
    }
}

/// Checked enumeration: verifies the cap first, then streams all
/// committees in lexicographic order.
pub fn enumerate_committees(m: usize, k: usize) -> Result<KSubsets, Error> {
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    Ok(KSubsets::new(m, k))
}

/// Iterator over all sorted `k`-subsets of `0..m` in lexicographic order.
pub struct KSubsets {
    m: usize,
    k: usize,
    next: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(m: usize, k: usize) -> Self {
        let next = if k <= m {
            Some((0..k).collect())
        } else {
            None
        };
        KSubsets { m, k, next }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Advance the rightmost element that can still move.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if succ[i] < self.m - (self.k - i) {
                succ[i] += 1;
                for j in i + 1..self.k {
                    succ[j] = succ[j - 1] + 1;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).to_u64().unwrap(), 6);
        assert_eq!(binomial(3, 3).to_u64().unwrap(), 1);
        assert_eq!(binomial(7, 4).to_u64().unwrap(), 35);
        assert_eq!(binomial(3, 5).to_u64().unwrap(), 0);
    }

    #[test]
    fn lexicographic_order() {
        let all: Vec<_> = KSubsets::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let full: Vec<_> = KSubsets::new(3, 3).collect();
        assert_eq!(full, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn cap_guard() {
        assert_eq!(ensure_enumerable(7, 4, ENUMERATION_CAP).unwrap(), 35);
        assert!(matches!(
            ensure_enumerable(64, 32, ENUMERATION_CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert!(ensure_enumerable(3, 0, ENUMERATION_CAP).is_err());
    }
}
