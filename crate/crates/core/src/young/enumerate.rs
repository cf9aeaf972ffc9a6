use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::YoungDiagram;
use crate::error::{Error, Result};

/// Default largest `n` for which full partition enumeration is offered.
/// p(66) is roughly 2.3 million.
pub const DEFAULT_ENUMERATION_CAP: u32 = 66;

/// Streams the partitions of `n` in reverse-lexicographic order, `[n]` first
/// and `[1^n]` last.
#[derive(Clone, Debug)]
pub struct Partitions {
    n: u32,
    next: Option<Vec<u32>>,
}

impl Partitions {
    fn new(n: u32) -> Self {
        Partitions {
            n,
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for Partitions {
    type Item = YoungDiagram;

    fn next(&mut self) -> Option<YoungDiagram> {
        let current = self.next.take()?;
        // Successor: decrement the last part exceeding 1 and refill the tail
        // greedily with parts of that new size.
        let mut succ = current.clone();
        let mut ones = 0u32;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            succ.push(part);
            while rest > 0 {
                let take = rest.min(part);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(YoungDiagram::from_rows_unchecked(current, self.n))
    }
}

/// Enumerates every partition of `n` under the default cap.
pub fn enumerate_partitions(n: u32) -> Result<Partitions> {
    enumerate_partitions_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_partitions_with_cap(n: u32, cap: u32) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::domain("cannot enumerate partitions of 0; n must be >= 1"));
    }
    check_cap(n, cap)?;
    Ok(Partitions::new(n))
}

pub(crate) fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        Err(Error::Capacity {
            what: "partition enumeration (use a Monte Carlo estimator above the cap)",
            requested: n as u64,
            cap: cap as u64,
        })
    } else {
        Ok(())
    }
}

/// p(n), the number of partitions of `n`.
pub fn partition_count(n: u32) -> BigUint {
    partition_counts_through(n).pop().unwrap_or_else(BigUint::one)
}

/// `[p(0), p(1), ..., p(n)]` via Euler's pentagonal-number recurrence.
pub fn partition_counts_through(n: u32) -> Vec<BigUint> {
    let n = n as usize;
    let mut p: Vec<BigUint> = Vec::with_capacity(n + 1);
    p.push(BigUint::one());
    for m in 1..=n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let add = k % 2 == 1;
            let g2 = k * (3 * k + 1) / 2;
            for g in [g1, g2] {
                if g <= m {
                    if add {
                        plus += &p[m - g];
                    } else {
                        minus += &p[m - g];
                    }
                }
            }
        }
        p.push(plus - minus);
    }
    p
}
