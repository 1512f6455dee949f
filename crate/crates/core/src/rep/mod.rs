//! Index posets, dimension formulas, `n`-pair chains and the decomposition
//! data they determine.

mod chains;
mod dims;
mod report;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{bbar_stat, dominance_leq, enumerate_partitions, Partition};

pub use chains::{maximal_chain, n_pair_candidates, n_pair_successor, NPairChain};
pub use dims::{aitken_coefficient, cell_dim, g_dim, par_sph, sph_cell_dim};
pub use report::{
    conjecture_check, decomposition_report, is_semisimple, projective_descriptor, tilting_descriptor, ConjectureRow,
    DecompositionReport, LoewyLayers, ModuleDescriptor, Semisimplicity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetKind {
    Full,
    Spherical,
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PosetKind::Full => "full",
            PosetKind::Spherical => "spherical",
        })
    }
}

/// `Λ^k = ⋃_{l ≤ k} Par_l`, or its spherical part `{λ : b̄(λ) ≤ k}`.
///
/// Elements are listed by increasing order `|λ|`, decreasing lexicographic
/// within each order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    pub k: usize,
    pub kind: PosetKind,
    elements: Vec<Partition>,
}

impl LabeledPoset {
    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.elements.iter().position(|e| e == lambda)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        match self.kind {
            PosetKind::Full => lambda.order() <= self.k,
            PosetKind::Spherical => bbar_stat(lambda) <= self.k,
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            PosetKind::Full => format!("Λ^{}", self.k),
            PosetKind::Spherical => format!("Λ^{}_sph", self.k),
        }
    }

    pub(crate) fn require(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::NotInPoset { label: lambda.parts().to_vec(), poset: self.name() })
        }
    }

    /// `λ ⊴ μ`: larger order is lower; equal orders compare by dominance.
    pub fn leq(&self, lambda: &Partition, mu: &Partition) -> bool {
        match lambda.order().cmp(&mu.order()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => dominance_leq(lambda, mu).expect("equal orders"),
        }
    }
}

pub fn build_poset(k: usize, kind: PosetKind) -> LabeledPoset {
    let full = (0..=k).flat_map(|l| enumerate_partitions(l, None));
    let elements = match kind {
        PosetKind::Full => full.collect(),
        PosetKind::Spherical => full.filter(|l| bbar_stat(l) <= k).collect(),
    };
    LabeledPoset { k, kind, elements }
}
