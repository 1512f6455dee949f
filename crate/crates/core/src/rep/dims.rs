use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinat::{binomial, partition_count, stirling2};
use crate::error::{Error, Result};
use crate::partition::{b_stat, enumerate_partitions, kostka, partition_stats, phi, psi, std_count, Partition};

fn require_in_full(k: usize, lambda: &Partition) -> Result<()> {
    if lambda.order() > k {
        return Err(Error::NotInPoset { label: lambda.parts().to_vec(), poset: format!("Λ^{k}") });
    }
    Ok(())
}

/// `{λ ⊢ n : b(λ) ≤ k}`
pub fn par_sph(k: usize, n: usize) -> Vec<Partition> {
    enumerate_partitions(n, None).into_iter().filter(|l| b_stat(l) <= k).collect()
}

/// Dimension of the cell module of `P_k` labelled by `λ`:
/// `Std(λ) · Σ_{p=l}^{k} S(k,p) C(p,l)`.
pub fn cell_dim(k: usize, lambda: &Partition) -> Result<BigUint> {
    require_in_full(k, lambda)?;
    let l = lambda.order();
    let tops: BigUint = (l..=k).map(|p| stirling2(k, p) * binomial(p, l)).sum();
    Ok(std_count(lambda) * tops)
}

/// Dimension of `e_k Δ_k(λ)`:
/// `Σ_{i=l}^{k} Σ_{ν ⊢ i, ℓ(ν) = l} K_{λ,Ψ(ν)} · p_{k-i}`.
pub fn sph_cell_dim(k: usize, lambda: &Partition) -> Result<BigUint> {
    require_in_full(k, lambda)?;
    let l = lambda.order();
    let mut total = BigUint::zero();
    for i in l..=k {
        let tail = partition_count(k - i);
        for nu in enumerate_partitions(i, Some(l)) {
            if nu.len() == l {
                total += kostka(lambda, &psi(&nu).to_composition())? * &tail;
            }
        }
    }
    Ok(total)
}

/// Coefficient of `t^k` in `t^{b(λ)} ∏_{u ∈ λ} (1 - t^{h(u)})^{-1}`.
pub fn aitken_coefficient(lambda: &Partition, k: usize) -> BigUint {
    let stats = partition_stats(lambda);
    let Some(depth) = k.checked_sub(stats.b) else {
        return BigUint::zero();
    };
    let mut series = vec![BigUint::zero(); depth + 1];
    series[0] = BigUint::one();
    for &h in &stats.hooks {
        // multiplying by 1/(1 - t^h) is a running sum with stride h
        for d in h..=depth {
            let prev = series[d - h].clone();
            series[d] += prev;
        }
    }
    series.swap_remove(depth)
}

/// `Σ_{ν ∈ Par_k^{≤n}} K_{λ,Φ(ν)}` for `λ ⊢ n` with `b(λ) ≤ k`.
pub fn g_dim(k: usize, n: usize, lambda: &Partition) -> Result<BigUint> {
    if lambda.order() != n {
        return Err(Error::OrderMismatch { left: lambda.order(), right: n });
    }
    let b = b_stat(lambda);
    if b > k {
        return Err(Error::NotSpherical { partition: lambda.parts().to_vec(), b, k });
    }
    let mut total = BigUint::zero();
    for nu in enumerate_partitions(k, Some(n)) {
        total += kostka(lambda, &phi(&nu, n)?.to_composition())?;
    }
    Ok(total)
}
