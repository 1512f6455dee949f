use serde::Serialize;

use super::LabeledPoset;
use crate::error::Result;
use crate::partition::Partition;

/// Every `μ` obtained from `λ` by lengthening one row so that the rightmost
/// new node has `|λ|`-content `n`.
///
/// Only the addable rows need scanning: the first row, each row shorter than
/// the row above it, and a new row below the last. Row `i` must grow to
/// `μ_i = n - |λ| + i`.
pub fn n_pair_candidates(lambda: &Partition, n: i64) -> Vec<Partition> {
    let parts = lambda.parts();
    let l = parts.len();
    let size = lambda.order() as i64;
    let mut rows = vec![1];
    rows.extend((2..=l).filter(|&i| parts[i - 2] > parts[i - 1]));
    if l > 0 {
        rows.push(l + 1);
    }
    rows.into_iter()
        .filter_map(|i| {
            let m = n - size + i as i64;
            let current = lambda.part(i - 1) as i64;
            let ceiling = if i == 1 { i64::MAX } else { lambda.part(i - 2) as i64 };
            (m > current && m <= ceiling).then(|| {
                let mut grown = parts.to_vec();
                if i > l {
                    grown.push(m as usize);
                } else {
                    grown[i - 1] = m as usize;
                }
                Partition::new(grown).expect("row growth keeps the shape valid")
            })
        })
        .collect()
}

/// The unique `μ` forming an `n`-pair `(λ, μ)`, if any.
pub fn n_pair_successor(lambda: &Partition, n: i64) -> Option<Partition> {
    let mut candidates = n_pair_candidates(lambda, n);
    debug_assert!(candidates.len() <= 1, "several n-pair successors of {lambda} at n = {n}");
    candidates.pop()
}

/// A chain `λ¹, λ², …` of successive `n`-pairs inside a poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NPairChain {
    pub k: usize,
    pub n: i64,
    pub partitions: Vec<Partition>,
    pub maximal: bool,
    /// A successor of the last element that exists but lies outside the
    /// poset.
    pub escaped_successor: Option<Partition>,
}

impl NPairChain {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

/// Follows successors from `λ` while they stay in `poset`.
pub fn maximal_chain(lambda: &Partition, n: i64, poset: &LabeledPoset) -> Result<NPairChain> {
    poset.require(lambda)?;
    let mut partitions = vec![lambda.clone()];
    let mut escaped_successor = None;
    while let Some(next) = n_pair_successor(partitions.last().unwrap(), n) {
        if !poset.contains(&next) {
            log::debug!(
                "chain from {lambda} at n = {n} stops: successor {next} of {} is outside {}",
                partitions.last().unwrap(),
                poset.name()
            );
            escaped_successor = Some(next);
            break;
        }
        partitions.push(next);
    }
    Ok(NPairChain { k: poset.k, n, partitions, maximal: true, escaped_successor })
}
