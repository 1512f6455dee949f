//! The partition algebra over `ℚ[x]`: set partitions of `2k` points, their
//! product with loop counting, and the spherical subalgebra.

mod element;
mod pairing;
mod poly;
mod rank;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bipartite::{normalize, BiPartition};
use crate::error::{Error, Result};
use crate::partition::Permutation;

pub use element::{
    specialize, spherical_basis, symmetrizer, symmetrizer_with_bound, AlgebraElement, SpecializedElement,
    DEFAULT_SYMMETRIZER_BOUND,
};
pub use pairing::{pairing_coefficient, pairing_counts, pairing_diagram, PairingCounts};
pub use poly::RationalPolynomial;
pub use rank::{rank_at, rational_rank};

/// A set partition of the points `1..=2k`. Points `1..=k` form the top row
/// and `k+1..=2k` the bottom row.
///
/// Stored as a restricted growth string: `labels[p]` is the index of the
/// block containing point `p + 1`, blocks numbered in order of their
/// smallest point. Equal diagrams therefore have equal encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition2k {
    k: usize,
    labels: Vec<u16>,
}

impl SetPartition2k {
    pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let points = 2 * k;
        let invalid = |reason: &str| Error::InvalidSetPartition { points, reason: reason.to_string() };
        let mut raw = vec![usize::MAX; points];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(invalid("empty block"));
            }
            for &p in block {
                if p == 0 || p > points {
                    return Err(invalid(&format!("point {p} out of range")));
                }
                if raw[p - 1] != usize::MAX {
                    return Err(invalid(&format!("point {p} repeated")));
                }
                raw[p - 1] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(invalid("blocks do not cover every point"));
        }
        Ok(Self::from_raw_labels(k, &raw))
    }

    /// Canonicalizes arbitrary block labels, one per point.
    fn from_raw_labels(k: usize, raw: &[usize]) -> Self {
        let mut relabel: Vec<(usize, u16)> = Vec::new();
        let labels = raw
            .iter()
            .map(|&r| match relabel.iter().find(|(old, _)| *old == r) {
                Some(&(_, new)) => new,
                None => {
                    let new = relabel.len() as u16;
                    relabel.push((r, new));
                    new
                }
            })
            .collect();
        SetPartition2k { k, labels }
    }

    pub fn identity(k: usize) -> Self {
        let raw: Vec<usize> = (0..2 * k).map(|p| p % k.max(1)).collect();
        Self::from_raw_labels(k, &raw)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks in canonical form: ascending points, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (p, &b) in self.labels.iter().enumerate() {
            blocks[b as usize].push(p + 1);
        }
        blocks
    }

    /// `(|B ∩ top|, |B ∩ bottom|)` for each block, in block order.
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        let mut profile = vec![(0, 0); self.block_count()];
        for (p, &b) in self.labels.iter().enumerate() {
            if p < self.k {
                profile[b as usize].0 += 1;
            } else {
                profile[b as usize].1 += 1;
            }
        }
        profile
    }

    /// The `𝔖_k × 𝔖_k` orbit of the diagram, as a bipartite partition.
    pub fn orbit_type(&self) -> BiPartition {
        normalize(self.block_profile()).expect("block profile of a diagram is balanced")
    }
}

impl fmt::Display for SetPartition2k {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl Serialize for SetPartition2k {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition2k {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let points: usize = blocks.iter().map(Vec::len).sum();
        if !points.is_multiple_of(2) {
            return Err(serde::de::Error::custom("odd number of points"));
        }
        SetPartition2k::new(points / 2, blocks).map_err(serde::de::Error::custom)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Stacks `d` on top of `d1`, returning the resulting diagram and the
/// number of components living entirely in the middle row.
pub fn compose_diagrams(d: &SetPartition2k, d1: &SetPartition2k) -> Result<(SetPartition2k, usize)> {
    if d.k != d1.k {
        return Err(Error::DiagramMismatch { left: d.k, right: d1.k });
    }
    let k = d.k;
    // 0..k top of d, k..2k the identified middle row, 2k..3k bottom of d1
    let mut parent: Vec<usize> = (0..3 * k).collect();
    for (labels, offset) in [(&d.labels, 0), (&d1.labels, k)] {
        let mut first = vec![usize::MAX; 2 * k];
        for (p, &b) in labels.iter().enumerate() {
            let slot = &mut first[b as usize];
            if *slot == usize::MAX {
                *slot = p + offset;
            } else {
                union(&mut parent, *slot, p + offset);
            }
        }
    }
    let mut outer = vec![false; 3 * k];
    let mut raw = Vec::with_capacity(2 * k);
    for p in (0..k).chain(2 * k..3 * k) {
        let r = find(&mut parent, p);
        outer[r] = true;
        raw.push(r);
    }
    let loops = (k..2 * k).filter(|&p| find(&mut parent, p) == p && !outer[p]).count();
    Ok((SetPartition2k::from_raw_labels(k, &raw), loops))
}

/// The diagram of `σ`: top point `σ(j)` joined to bottom point `j'`, so that
/// diagram composition agrees with composition of permutations.
pub fn permutation_diagram(sigma: &Permutation) -> SetPartition2k {
    let k = sigma.len();
    let mut raw = vec![0; 2 * k];
    for (j, &i) in sigma.images().iter().enumerate() {
        raw[i - 1] = j;
        raw[k + j] = j;
    }
    SetPartition2k::from_raw_labels(k, &raw)
}

/// Lays out the parts of `b` left to right, `x` consecutive top points and
/// `y` consecutive bottom points per block.
pub fn bipartition_diagram(b: &BiPartition) -> SetPartition2k {
    let k = b.order();
    let mut raw = vec![0; 2 * k];
    let (mut top, mut bottom) = (0, k);
    for (i, &(x, y)) in b.parts().iter().enumerate() {
        raw[top..top + x].fill(i);
        raw[bottom..bottom + y].fill(i);
        top += x;
        bottom += y;
    }
    SetPartition2k::from_raw_labels(k, &raw)
}

/// Number of blocks meeting both rows.
pub fn propagating_number(d: &SetPartition2k) -> usize {
    d.block_profile().iter().filter(|&&(t, b)| t > 0 && b > 0).count()
}
