//! The symmetric power `S^k V_n` as a permutation module and the dimension
//! of its centralizer.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bipartite::{enumerate_bipartitions_bounded, normalize, BiPartition};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, multinomial, phi, Partition};

/// A monomial `v_{i_1}^{m_1} ⋯ v_{i_p}^{m_p}`: strictly increasing indices
/// with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialKey {
    pub exponents: Vec<(usize, usize)>,
}

impl MonomialKey {
    /// Groups a weakly increasing index sequence.
    pub fn from_sequence(seq: &[usize]) -> Self {
        let mut exponents: Vec<(usize, usize)> = Vec::new();
        for &i in seq {
            match exponents.last_mut() {
                Some((last, m)) if *last == i => *m += 1,
                _ => exponents.push((i, 1)),
            }
        }
        MonomialKey { exponents }
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|e| e.1).sum()
    }
}

/// All weakly increasing sequences of length `k` over `1..=n`, in
/// lexicographic order.
pub fn weakly_increasing_sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, low: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in low..=n {
            cur.push(i);
            go(k, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, 1, &mut Vec::new(), &mut out);
    out
}

/// The monomial basis of `S^k V_n`.
pub fn monomial_basis(k: usize, n: usize) -> Vec<MonomialKey> {
    weakly_increasing_sequences(k, n).iter().map(|s| MonomialKey::from_sequence(s)).collect()
}

/// One permutation module `M(Φ(ν))` per `ν ∈ Par_k^{≤n}` with its
/// dimension `n! / ∏ Φ(ν)_i!`.
pub fn perm_decomposition(k: usize, n: usize) -> Result<Vec<(Partition, BigUint)>> {
    enumerate_partitions(k, Some(n))
        .iter()
        .map(|nu| {
            let alpha = phi(nu, n)?;
            let dim = multinomial(n, alpha.parts())?;
            Ok((alpha, dim))
        })
        .collect()
}

/// Dimension of `End_{𝔖_n}(S^k V_n)`: the number of `𝔖_n`-orbits on pairs
/// of monomials, i.e. bipartite partitions of `k` with at most `n` parts.
pub fn centralizer_dim(k: usize, n: usize) -> BigUint {
    BigUint::from(enumerate_bipartitions_bounded(k, Some(n)).len())
}

/// Canonical label of the `𝔖_n`-orbit of a pair of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitKey(pub BiPartition);

/// Counts, for each symbol, its occurrences in `top` and in `bot`; symbols
/// absent from both are skipped.
pub fn orbit_key(top: &[usize], bot: &[usize], n: usize) -> Result<OrbitKey> {
    if top.len() != bot.len() {
        return Err(Error::LengthMismatch { left: top.len(), right: bot.len() });
    }
    for seq in [top, bot] {
        if seq.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(seq.to_vec()));
        }
        if let Some(&symbol) = seq.iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::SymbolOutOfRange { symbol, n });
        }
    }
    let mut counts = vec![(0, 0); n];
    for &s in top {
        counts[s - 1].0 += 1;
    }
    for &s in bot {
        counts[s - 1].1 += 1;
    }
    counts.retain(|&c| c != (0, 0));
    Ok(OrbitKey(normalize(counts)?))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::combinat::binomial;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(0, 4).len(), 1);
        assert_eq!(monomial_basis(1, 5).len(), 5);
        assert_eq!(monomial_basis(3, 6).len(), 56);
        for k in 0..=6 {
            for n in 1..=6 {
                let basis = monomial_basis(k, n);
                assert_eq!(BigUint::from(basis.len()), binomial(k + n - 1, k));
                assert!(basis.iter().all(|m| m.degree() == k));
            }
        }
    }

    #[test]
    fn permutation_modules() {
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        let three_six = perm_decomposition(3, 6).unwrap();
        assert_eq!(
            three_six,
            vec![
                (p(&[5, 1]), BigUint::from(6u32)),
                (p(&[4, 1, 1]), BigUint::from(30u32)),
                (p(&[3, 3]), BigUint::from(20u32))
            ]
        );
        assert_eq!(perm_decomposition(1, 4).unwrap(), vec![(p(&[3, 1]), BigUint::from(4u32))]);
        assert_eq!(perm_decomposition(1, 1).unwrap(), vec![(p(&[1]), BigUint::from(1u32))]);
        for k in 0..=10 {
            for n in 1..=10 {
                let total: BigUint = perm_decomposition(k, n).unwrap().into_iter().map(|(_, d)| d).sum();
                assert_eq!(total, binomial(k + n - 1, k), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn orbit_keys() {
        let top = [1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5];
        let bot = [1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 5, 5, 5, 5];
        let key = orbit_key(&top, &bot, 5).unwrap();
        assert_eq!(key.0.parts(), &[(4, 4), (4, 2), (3, 0), (2, 6), (2, 3)]);
        let diag = orbit_key(&[1, 1, 2, 3, 3, 3], &[1, 1, 2, 3, 3, 3], 3).unwrap();
        assert_eq!(diag.0.parts(), &[(3, 3), (2, 2), (1, 1)]);
        assert!(orbit_key(&[2, 1], &[1, 1], 2).is_err());
        assert!(orbit_key(&[1, 3], &[1, 1], 2).is_err());
        assert!(orbit_key(&[1], &[1, 1], 2).is_err());
    }

    /// Orbit keys of every pair of monomials, collected into a set.
    fn brute_orbits(k: usize, n: usize) -> BTreeSet<OrbitKey> {
        let seqs = weakly_increasing_sequences(k, n);
        let mut keys = BTreeSet::new();
        for a in &seqs {
            for b in &seqs {
                keys.insert(orbit_key(a, b, n).unwrap());
            }
        }
        keys
    }

    #[test]
    fn centralizer_matches_orbit_enumeration() {
        for k in 0..=5 {
            for n in 1..=2 * k + 1 {
                assert_eq!(centralizer_dim(k, n), BigUint::from(brute_orbits(k, n).len()), "k={k} n={n}");
            }
        }
        assert_eq!(centralizer_dim(3, 6), BigUint::from(31u32));
    }

    #[test]
    fn keys_are_orbit_invariants() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..6);
            let k = rng.gen_range(0..7);
            let mut a: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
            let mut b: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
            a.sort();
            b.sort();
            let mut relabel: Vec<usize> = (1..=n).collect();
            relabel.shuffle(&mut rng);
            let mut a2: Vec<usize> = a.iter().map(|&s| relabel[s - 1]).collect();
            let mut b2: Vec<usize> = b.iter().map(|&s| relabel[s - 1]).collect();
            a2.sort();
            b2.sort();
            assert_eq!(orbit_key(&a, &b, n).unwrap(), orbit_key(&a2, &b2, n).unwrap());
        }
    }
}
