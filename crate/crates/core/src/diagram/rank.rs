use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{specialize, AlgebraElement, SetPartition2k};
use crate::error::{Error, Result};

/// Rank over `ℚ` of the coefficient matrix of `elements` evaluated at
/// `x = t`, one row per element and one column per diagram in the union of
/// their supports.
pub fn rank_at(elements: &[AlgebraElement], t: &BigRational) -> Result<usize> {
    if let Some(first) = elements.first() {
        if let Some(bad) = elements.iter().find(|a| a.k() != first.k()) {
            return Err(Error::DiagramMismatch { left: first.k(), right: bad.k() });
        }
    }
    let mut columns: BTreeMap<SetPartition2k, usize> = BTreeMap::new();
    let rows = elements
        .iter()
        .map(|a| {
            specialize(a, t)
                .terms
                .into_iter()
                .map(|(d, v)| {
                    let next = columns.len();
                    (*columns.entry(d).or_insert(next), v)
                })
                .collect()
        })
        .collect();
    Ok(rational_rank(rows))
}

/// Rank of a sparse rational matrix by row reduction against pivot rows
/// keyed by their leading column.
pub fn rational_rank(rows: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, lead_value)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    let factor = lead_value.clone();
                    for (&c, v) in pivot {
                        let entry = row.entry(c).or_insert_with(BigRational::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = lead_value.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
