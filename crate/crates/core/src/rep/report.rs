use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{build_poset, cell_dim, g_dim, n_pair_successor, par_sph, sph_cell_dim, NPairChain, PosetKind};
use crate::error::{Error, Result};
use crate::json::{big, big_seq};
use crate::partition::{restrict_first_row, Partition};

/// Radical layers, top first; each layer lists simple labels.
pub type LoewyLayers = Vec<Vec<Partition>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "module", rename_all = "lowercase")]
pub enum ModuleDescriptor {
    Projective { label: Partition, layers: LoewyLayers },
    Standard { label: Partition, layers: LoewyLayers },
}

/// Decomposition data of the cell modules over one poset at `t = n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub k: usize,
    pub n: i64,
    pub poset: PosetKind,
    pub labels: Vec<Partition>,
    /// Blocks, as index lists into `labels` in chain order.
    pub chains: Vec<Vec<usize>>,
    /// `matrix[i][j] = [Δ(labels[i]) : L(labels[j])]`
    pub matrix: Vec<Vec<u8>>,
    #[serde(serialize_with = "big_seq")]
    pub cell_dims: Vec<BigUint>,
    #[serde(serialize_with = "big_seq")]
    pub simple_dims: Vec<BigInt>,
    pub projectives: Vec<LoewyLayers>,
    pub tiltings: Vec<ModuleDescriptor>,
}

impl DecompositionReport {
    /// Compact JSON with keys in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == u8::from(i == j)))
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == lambda)
    }

    /// The block containing `labels[i]` as a chain.
    pub fn chain_of(&self, i: usize) -> NPairChain {
        let chain = self.chains.iter().find(|c| c.contains(&i)).expect("every label lies in a block");
        NPairChain {
            k: self.k,
            n: self.n,
            partitions: chain.iter().map(|&j| self.labels[j].clone()).collect(),
            maximal: true,
            escaped_successor: None,
        }
    }
}

fn in_nonsemisimple_range(k: usize, n: i64) -> bool {
    n >= 1 && n <= 2 * k as i64 - 2
}

/// Decomposition matrix, blocks, simple dimensions and Loewy descriptors
/// for `P_k(n)` (full poset) or `e_k P_k(n) e_k` (spherical poset).
pub fn decomposition_report(k: usize, n: i64, kind: PosetKind) -> Result<DecompositionReport> {
    if n == 0 {
        return Err(Error::ZeroParameter);
    }
    let poset = build_poset(k, kind);
    let labels = poset.elements().to_vec();
    let size = labels.len();
    let linked = in_nonsemisimple_range(k, n);

    let successor: Vec<Option<usize>> = labels
        .iter()
        .map(|l| {
            if !linked {
                return None;
            }
            let next = n_pair_successor(l, n)?;
            let idx = poset.index_of(&next);
            if idx.is_none() {
                log::debug!("n-pair successor {next} of {l} at n = {n} lies outside {}", poset.name());
            }
            idx
        })
        .collect();
    let mut has_predecessor = vec![false; size];
    for s in successor.iter().flatten() {
        debug_assert!(!has_predecessor[*s], "two n-pair predecessors of {}", labels[*s]);
        has_predecessor[*s] = true;
    }

    let chains: Vec<Vec<usize>> = (0..size)
        .filter(|&i| !has_predecessor[i])
        .map(|head| std::iter::successors(Some(head), |&i| successor[i]).collect())
        .collect();

    let mut matrix = vec![vec![0u8; size]; size];
    for i in 0..size {
        matrix[i][i] = 1;
        if let Some(j) = successor[i] {
            matrix[i][j] = 1;
        }
    }

    let cell_dims = labels
        .iter()
        .map(|l| match kind {
            PosetKind::Full => cell_dim(k, l),
            PosetKind::Spherical => sph_cell_dim(k, l),
        })
        .collect::<Result<Vec<_>>>()?;

    let simple_dims = (0..size)
        .map(|i| {
            let mut sign = BigInt::from(1);
            let mut total = BigInt::zero();
            for j in std::iter::successors(Some(i), |&j| successor[j]) {
                total += &sign * BigInt::from(cell_dims[j].clone());
                sign = -sign;
            }
            total
        })
        .collect();

    let mut projectives = vec![Vec::new(); size];
    let mut tiltings = vec![None; size];
    for chain in &chains {
        let parts: Vec<Partition> = chain.iter().map(|&i| labels[i].clone()).collect();
        for (pos, &i) in chain.iter().enumerate() {
            projectives[i] = projective_layers(&parts, pos + 1);
            tiltings[i] = Some(tilting(&parts, pos + 1));
        }
    }

    Ok(DecompositionReport {
        k,
        n,
        poset: kind,
        labels,
        chains,
        matrix,
        cell_dims,
        simple_dims,
        projectives,
        tiltings: tiltings.into_iter().map(|t| t.expect("every label lies in a chain")).collect(),
    })
}

/// Loewy layers of `P(λ^j)` in a block `λ¹, …, λ^p` (`j` is 1-indexed).
fn projective_layers(chain: &[Partition], j: usize) -> LoewyLayers {
    let p = chain.len();
    let at = |i: usize| chain[i - 1].clone();
    match j {
        1 if p == 1 => vec![vec![at(1)]],
        1 => vec![vec![at(1)], vec![at(2)]],
        _ if j < p => vec![vec![at(j)], vec![at(j - 1), at(j + 1)], vec![at(j)]],
        _ => vec![vec![at(p)], vec![at(p - 1)], vec![at(p)]],
    }
}

fn tilting(chain: &[Partition], j: usize) -> ModuleDescriptor {
    if j < chain.len() {
        ModuleDescriptor::Projective { label: chain[j].clone(), layers: projective_layers(chain, j + 1) }
    } else {
        let last = chain[j - 1].clone();
        ModuleDescriptor::Standard { label: last.clone(), layers: vec![vec![last]] }
    }
}

fn check_descriptor_args(chain: &NPairChain, j: usize) -> Result<()> {
    if !in_nonsemisimple_range(chain.k, chain.n) {
        return Err(Error::SemisimpleParameter { n: chain.n, max: 2 * chain.k as i64 - 2 });
    }
    if j == 0 || j > chain.len() {
        return Err(Error::ChainIndex { index: j, len: chain.len() });
    }
    Ok(())
}

/// Loewy layers of the projective cover of `λ^j`.
pub fn projective_descriptor(chain: &NPairChain, j: usize) -> Result<LoewyLayers> {
    check_descriptor_args(chain, j)?;
    Ok(projective_layers(&chain.partitions, j))
}

/// The module the tilting module `T(λ^j)` coincides with.
pub fn tilting_descriptor(chain: &NPairChain, j: usize) -> Result<ModuleDescriptor> {
    check_descriptor_args(chain, j)?;
    Ok(tilting(&chain.partitions, j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub lambda: Partition,
    #[serde(serialize_with = "big")]
    pub g_dim: BigUint,
    pub lambda_bar: Partition,
    #[serde(serialize_with = "big")]
    pub simple_dim: BigInt,
    pub equal: bool,
}

/// Compares `dim G_k(λ)` with `dim e_k L_k(λ̄)` for every `λ ∈ Par_sph^{k,n}`.
pub fn conjecture_check(k: usize, n: usize) -> Result<Vec<ConjectureRow>> {
    if n == 0 {
        return Err(Error::ZeroParameter);
    }
    let report = decomposition_report(k, n as i64, PosetKind::Spherical)?;
    par_sph(k, n)
        .into_iter()
        .map(|lambda| {
            let g = g_dim(k, n, &lambda)?;
            let lambda_bar = restrict_first_row(&lambda)?;
            let idx = report
                .index_of(&lambda_bar)
                .ok_or_else(|| Error::NotInPoset {
                    label: lambda_bar.parts().to_vec(), poset: format!("Λ^{k}_sph")
                })?;
            let simple = report.simple_dims[idx].clone();
            let equal = BigInt::from(g.clone()) == simple;
            Ok(ConjectureRow { lambda, g_dim: g, lambda_bar, simple_dim: simple, equal })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semisimplicity {
    Semisimple,
    NotSemisimple,
    Unknown,
}

/// Semisimplicity of `P_k(t)`, or of its spherical subalgebra, where
/// `t = 0` is left undecided.
pub fn is_semisimple(k: usize, t: &BigRational, spherical: bool) -> Semisimplicity {
    if spherical && t.is_zero() {
        return Semisimplicity::Unknown;
    }
    let bad = t.is_integer() && t.to_integer().to_i64().is_some_and(|v| v >= 0 && v <= 2 * k as i64 - 2);
    if bad {
        Semisimplicity::NotSemisimple
    } else {
        Semisimplicity::Semisimple
    }
}
