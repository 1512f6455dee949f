//! Integer partitions, compositions and the statistics built on them.

mod permutation;
mod tableau;

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combinat::factorial;
use crate::error::{Error, Result};

pub use permutation::Permutation;
pub use tableau::{kostka, std_count};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let positive = parts.iter().all(|&p| p > 0);
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if positive && decreasing {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the nonzero entries into a partition (the `ord` map).
    pub fn from_unordered(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length `i` (0-indexed), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Distinct part sizes with their multiplicities, largest size first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().all(|&p| p > 0) {
            Ok(Composition(parts))
        } else {
            Err(Error::InvalidComposition(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn ord(&self) -> Partition {
        Partition::from_unordered(self.0.iter().copied())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

/// All partitions of `k`, optionally with at most `max_parts` parts, in
/// decreasing lexicographic order.
pub fn enumerate_partitions(k: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn go(remaining: usize, cap: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            // the remaining slots cannot absorb more than `part * slots`
            if part * slots < remaining {
                break;
            }
            current.push(part);
            go(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, max_parts.unwrap_or(k), &mut Vec::new(), &mut out);
    out
}

/// Dominance order on partitions of a common order.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.order() != mu.order() {
        return Err(Error::OrderMismatch { left: lambda.order(), right: mu.order() });
    }
    let rows = lambda.len().max(mu.len());
    let mut partial_lambda = 0;
    let mut partial_mu = 0;
    for i in 0..rows {
        partial_lambda += lambda.part(i);
        partial_mu += mu.part(i);
        if partial_lambda > partial_mu {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// Hook lengths of all nodes, sorted descending.
    pub hooks: Vec<usize>,
    /// `Σ (i-1) λ_i`
    pub b: usize,
    /// `Σ i λ_i`
    pub bbar: usize,
}

pub fn partition_stats(lambda: &Partition) -> PartitionStats {
    let mut hooks = Vec::with_capacity(lambda.order());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda.parts()[i + 1..].iter().take_while(|&&r| r > j).count();
            hooks.push(arm + leg + 1);
        }
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    PartitionStats { hooks, b: b_stat(lambda), bbar: bbar_stat(lambda) }
}

pub fn b_stat(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

pub fn bbar_stat(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| (i + 1) * p).sum()
}

/// Multiplicity partition of `nu` padded to order `n`: the sorted
/// multiplicities of the distinct parts of `nu`, together with
/// `n - ℓ(nu)` when that is nonzero.
pub fn phi(nu: &Partition, n: usize) -> Result<Partition> {
    if nu.len() > n {
        return Err(Error::TooManyParts { partition: nu.parts().to_vec(), bound: n });
    }
    let counts = nu.multiplicities().into_iter().map(|(_, a)| a);
    Ok(Partition::from_unordered(counts.chain(std::iter::once(n - nu.len()))))
}

/// Sorted multiplicities of the distinct parts of `nu`.
pub fn psi(nu: &Partition) -> Partition {
    Partition::from_unordered(nu.multiplicities().into_iter().map(|(_, a)| a))
}

/// `λ̄`: drop the first row.
pub fn restrict_first_row(lambda: &Partition) -> Result<Partition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(Partition(lambda.parts()[1..].to_vec()))
}

/// `n! / ∏ parts_i!`; zero parts are allowed.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::SumMismatch { expected: n, actual: sum });
    }
    let denom: BigUint = parts.iter().map(|&p| factorial(p)).product();
    Ok(factorial(n) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3, None), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5, None).len(), 7);
        assert_eq!(enumerate_partitions(6, Some(2)), vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[3, 3])]);
        assert!(enumerate_partitions(3, Some(0)).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // weakly decreasing sequences over 1..=k, filtered by sum
        fn brute(k: usize) -> usize {
            fn go(rem: usize, cap: usize) -> usize {
                if rem == 0 {
                    return 1;
                }
                (1..=cap.min(rem)).map(|part| go(rem - part, part)).sum()
            }
            go(k, k)
        }
        for k in 0..=12 {
            let all = enumerate_partitions(k, None);
            assert_eq!(all.len(), brute(k));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "decreasing lexicographic order");
        }
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p(&[2, 1]), &p(&[3])).unwrap());
        assert!(dominance_leq(&p(&[4, 2]), &p(&[4, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn stats() {
        assert_eq!(partition_stats(&p(&[5, 3, 2])).b, 7);
        let empty = partition_stats(&Partition::empty());
        assert_eq!(empty, PartitionStats { hooks: vec![], b: 0, bbar: 0 });
        for n in 1..10 {
            assert_eq!(b_stat(&p(&vec![1; n])), n * (n - 1) / 2);
        }
        assert_eq!(partition_stats(&p(&[2, 1])).hooks, vec![3, 1, 1]);
    }

    #[test]
    fn phi_and_psi() {
        let nu = p(&[3, 3, 2, 2, 2, 2, 1, 1, 1]);
        assert_eq!(phi(&nu, 15).unwrap(), p(&[6, 4, 3, 2]));
        assert_eq!(phi(&p(&[1, 1, 1]), 3).unwrap(), p(&[3]));
        assert_eq!(phi(&p(&[3]), 6).unwrap(), p(&[5, 1]));
        assert_eq!(phi(&p(&[2, 1]), 6).unwrap(), p(&[4, 1, 1]));
        assert_eq!(phi(&p(&[1, 1, 1]), 6).unwrap(), p(&[3, 3]));
        assert!(phi(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(psi(&p(&[2, 2, 2, 1, 1])), p(&[3, 2]));
        assert_eq!(psi(&p(&[3, 3, 2, 2, 1])), p(&[2, 2, 1]));
        assert_eq!(psi(&p(&[7])), p(&[1]));
        assert_eq!(psi(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn first_row() {
        assert_eq!(restrict_first_row(&p(&[2, 1])).unwrap(), p(&[1]));
        assert_eq!(restrict_first_row(&p(&[4])).unwrap(), Partition::empty());
        assert_eq!(restrict_first_row(&p(&[9, 5, 5, 5, 3, 3])).unwrap(), p(&[5, 5, 5, 3, 3]));
        assert_eq!(restrict_first_row(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(15, &[2, 4, 3, 6]).unwrap(), BigUint::from(6_306_300u64));
        assert_eq!(multinomial(7, &[7]).unwrap(), BigUint::from(1u32));
        assert_eq!(multinomial(6, &[5, 1]).unwrap(), BigUint::from(6u32));
        assert_eq!(multinomial(4, &[2, 0, 2]).unwrap(), BigUint::from(6u32));
        assert!(multinomial(5, &[2, 2]).is_err());
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
        let c = Composition::new(vec![1, 3]).unwrap().concat(&Composition::new(vec![2]).unwrap());
        assert_eq!(c.parts(), &[1, 3, 2]);
        assert_eq!(c.ord(), p(&[3, 2, 1]));
    }
}
