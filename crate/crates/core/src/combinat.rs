//! Classical counting sequences over arbitrary-precision integers.
//!
//! Tables are built from the usual triangle recurrences and memoized behind a
//! mutex so that concurrent callers share one copy.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn stirling_table() -> &'static Mutex<Vec<Vec<BigUint>>> {
    static TABLE: OnceLock<Mutex<Vec<Vec<BigUint>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![vec![BigUint::one()]]))
}

/// Stirling number of the second kind `S(n, p)`: set partitions of an
/// `n`-set into exactly `p` blocks.
pub fn stirling2(n: usize, p: usize) -> BigUint {
    if p > n {
        return BigUint::zero();
    }
    let mut table = stirling_table().lock().expect("stirling table poisoned");
    while table.len() <= n {
        let m = table.len();
        let prev = &table[m - 1];
        let mut row = vec![BigUint::zero(); m + 1];
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            let stay = if j < m { &prev[j] * BigUint::from(j) } else { BigUint::zero() };
            *slot = stay + &prev[j - 1];
        }
        table.push(row);
    }
    table[n][p].clone()
}

/// Bell number: all set partitions of an `n`-set.
pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|p| stirling2(n, p)).sum()
}

fn partition_count_table() -> &'static Mutex<Vec<BigUint>> {
    static TABLE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigUint::one()]))
}

/// The partition function `p(n)`, by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut table = partition_count_table().lock().expect("partition table poisoned");
    while table.len() <= n {
        let m = table.len() as i64;
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let sign_positive = j % 2 == 1;
            let mut any = false;
            for g in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
                if g <= m {
                    any = true;
                    let term = &table[(m - g) as usize];
                    if sign_positive {
                        plus += term;
                    } else {
                        minus += term;
                    }
                }
            }
            if !any {
                break;
            }
        }
        table.push(plus - minus);
    }
    table[n].clone()
}
