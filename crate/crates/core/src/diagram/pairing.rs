use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{compose_diagrams, permutation_diagram, symmetrizer, AlgebraElement, RationalPolynomial, SetPartition2k};
use crate::bipartite::BiPartition;
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::partition::{bbar_stat, Partition, Permutation};

/// Block sizes `ν = (p^{λ_p}, …, 1^{λ_1})`: `λ_i` blocks of size `i`,
/// largest sizes first.
fn nu_blocks(lambda: &Partition) -> Vec<usize> {
    let mut nu = Vec::new();
    for (i, &count) in lambda.parts().iter().enumerate().rev() {
        nu.extend(std::iter::repeat_n(i + 1, count));
    }
    nu
}

fn check_spherical(k: usize, lambda: &Partition) -> Result<()> {
    if bbar_stat(lambda) > k {
        return Err(Error::NotInPoset { label: lambda.parts().to_vec(), poset: format!("Λ^{k}_sph") });
    }
    Ok(())
}

/// Lays out the blocks `ν · μ` on both rows, `μ = (k - |ν|)`. Top `ν`-block
/// `j` is joined to bottom `ν`-block `w[j]`; the `μ` blocks stay
/// non-propagating.
fn layout(k: usize, nu: &[usize], w: &[usize]) -> SetPartition2k {
    let mut raw = vec![0; 2 * k];
    let mut starts = Vec::with_capacity(nu.len());
    let mut pos = 0;
    for &size in nu {
        starts.push(pos);
        pos += size;
    }
    for (j, &size) in nu.iter().enumerate() {
        raw[starts[j]..starts[j] + size].fill(j);
        let target = w[j];
        raw[k + starts[target]..k + starts[target] + nu[target]].fill(j);
    }
    raw[pos..k].fill(nu.len());
    raw[k + pos..2 * k].fill(nu.len() + 1);
    let blocks = group(&raw);
    SetPartition2k::new(k, blocks).expect("layout covers every point")
}

fn group(raw: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut ids: Vec<usize> = Vec::new();
    for (p, &r) in raw.iter().enumerate() {
        match ids.iter().position(|&id| id == r) {
            Some(b) => blocks[b].push(p + 1),
            None => {
                ids.push(r);
                blocks.push(vec![p + 1]);
            }
        }
    }
    blocks
}

/// The diagram `D_0` underlying `C_{𝔱₀𝔱₀}`: propagating `ν`-blocks joined
/// straight down, then the `μ` block alone on each row.
pub fn pairing_diagram(k: usize, lambda: &Partition) -> Result<SetPartition2k> {
    check_spherical(k, lambda)?;
    let nu = nu_blocks(lambda);
    let w: Vec<usize> = (0..nu.len()).collect();
    Ok(layout(k, &nu, &w))
}

/// Permutations of the `ν`-blocks that only exchange blocks of equal size,
/// that is the row group of the row reading tableau of `λ`.
fn row_group(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut offset = 0;
    for &count in lambda.parts().iter().rev() {
        let perms = Permutation::all(count);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |p| {
                    let mut w = prefix.clone();
                    w.extend(p.images().iter().map(|&i| offset + i - 1));
                    w
                })
            })
            .collect();
        offset += count;
    }
    out
}

/// The coefficient of `C = C_{𝔱₀𝔱₀}` in `C · C`, expanded in the spherical
/// diagram basis.
///
/// `C = e_k (Σ_w D_w) e_k` with `w` running over the row group of `λ`. Basis
/// elements of the spherical algebra have disjoint supports and constant
/// coefficients on them, so the coefficient of `C` in any spherical element
/// is its `D_0`-coefficient divided by the `D_0`-coefficient of `C`.
pub fn pairing_coefficient(k: usize, lambda: &Partition) -> Result<RationalPolynomial> {
    check_spherical(k, lambda)?;
    let e = symmetrizer(k)?;
    let nu = nu_blocks(lambda);
    let d0 = layout(k, &nu, &(0..nu.len()).collect::<Vec<_>>());
    let mut x = AlgebraElement::zero(k);
    for w in row_group(lambda) {
        x.add_term(layout(k, &nu, &w), &RationalPolynomial::one())?;
    }
    let c = e.product(&x)?.product(&e)?;
    let square = c.product(&c)?;
    let base = c.coefficient(&d0);
    debug_assert_eq!(base.degree(), Some(0));
    let inv = base.coefficients()[0].recip();
    Ok(square.coefficient(&d0).scale(&inv))
}

/// How `σ ∈ 𝔖_k` behaves in `D_0 σ D_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCounts {
    /// Results in the orbit of `D_0` with one closed loop.
    pub a1: BigUint,
    /// Results in the orbit of `D_0` without a loop.
    pub a2: BigUint,
    /// Everything else.
    pub a3: BigUint,
    /// `∏ λ_i!`
    pub row_factor: BigUint,
}

impl PairingCounts {
    /// `(∏ λ_i!) (1/k!) (A_1 x + A_2)`
    pub fn polynomial(&self, k: usize) -> RationalPolynomial {
        let scale = BigRational::new(BigInt::from(self.row_factor.clone()), BigInt::from(factorial(k)));
        RationalPolynomial::new(vec![
            BigRational::from_integer(BigInt::from(self.a2.clone())) * &scale,
            BigRational::from_integer(BigInt::from(self.a1.clone())) * &scale,
        ])
    }
}

/// Classifies every `σ ∈ 𝔖_k` by the diagram `D_0 σ D_0`.
pub fn pairing_counts(k: usize, lambda: &Partition) -> Result<PairingCounts> {
    let d0 = pairing_diagram(k, lambda)?;
    let target: BiPartition = d0.orbit_type();
    let mut counts = PairingCounts {
        a1: BigUint::zero(),
        a2: BigUint::zero(),
        a3: BigUint::zero(),
        row_factor: lambda.parts().iter().map(|&p| factorial(p)).product(),
    };
    for sigma in Permutation::all(k) {
        let (upper, l1) = compose_diagrams(&d0, &permutation_diagram(&sigma))?;
        let (result, l2) = compose_diagrams(&upper, &d0)?;
        let slot = match (result.orbit_type() == target, l1 + l2) {
            (true, 1) => &mut counts.a1,
            (true, 0) => &mut counts.a2,
            _ => &mut counts.a3,
        };
        *slot += BigUint::one();
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spherical(k: usize) -> Vec<Partition> {
        (0..=k).flat_map(|l| enumerate_partitions(l, None)).filter(|l| bbar_stat(l) <= k).collect()
    }

    #[test]
    fn diagram_layout() {
        // ν = (2,2,1,1), μ = (3) at k = 9
        let d0 = pairing_diagram(9, &p(&[2, 2])).unwrap();
        assert_eq!(
            d0.blocks(),
            vec![vec![1, 2, 10, 11], vec![3, 4, 12, 13], vec![5, 14], vec![6, 15], vec![7, 8, 9], vec![16, 17, 18]]
        );
        assert_eq!(pairing_diagram(2, &Partition::empty()).unwrap().blocks(), vec![vec![1, 2], vec![3, 4]]);
        assert!(pairing_diagram(3, &p(&[1, 1])).is_ok());
        assert!(pairing_diagram(2, &p(&[1, 1])).is_err());
        assert_eq!(row_group(&p(&[2, 2])).len(), 4);
    }

    #[test]
    fn direct_small_values() {
        let t = RationalPolynomial::x();
        assert_eq!(pairing_coefficient(1, &Partition::empty()).unwrap(), t);
        assert_eq!(pairing_coefficient(1, &p(&[1])).unwrap(), RationalPolynomial::one());
        assert_eq!(pairing_coefficient(2, &Partition::empty()).unwrap(), t);
        // λ = (1) at k = 2: ν = (1), μ = (1); the transposition cuts the only line
        let counts = pairing_counts(2, &p(&[1])).unwrap();
        assert_eq!((counts.a1.clone(), counts.a2.clone(), counts.a3.clone()), (1u32.into(), 0u32.into(), 1u32.into()));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(pairing_coefficient(2, &p(&[1])).unwrap(), RationalPolynomial::x().scale(&half));
        assert_eq!(pairing_coefficient(2, &p(&[2])).unwrap(), RationalPolynomial::from(2));
    }

    #[test]
    fn both_routes_agree() {
        for k in 1..=4 {
            for lambda in spherical(k) {
                let direct = pairing_coefficient(k, &lambda).unwrap();
                let counted = pairing_counts(k, &lambda).unwrap();
                assert_eq!(direct, counted.polynomial(k), "k={k} λ={lambda}");
                let total = &counted.a1 + &counted.a2 + &counted.a3;
                assert_eq!(total, factorial(k));
            }
        }
    }

    #[test]
    fn loop_term_tracks_the_free_block() {
        // a loop needs the non-propagating block, present exactly when b̄(λ) < k
        for k in 1..=6 {
            for lambda in spherical(k) {
                let counts = pairing_counts(k, &lambda).unwrap();
                assert_eq!(counts.a1 > BigUint::zero(), bbar_stat(&lambda) < k, "k={k} λ={lambda}");
                // a free block of width one can only be absorbed by a line of width two
                let free = k - bbar_stat(&lambda);
                let absorbable = free != 1 || lambda.len() >= 2;
                assert_eq!(counts.a2 > BigUint::zero(), !lambda.is_empty() && absorbable, "k={k} λ={lambda}");
            }
        }
    }
}
