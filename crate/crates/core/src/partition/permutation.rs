use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A bijection of `{1, …, l}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i == 0 || i > images.len() || seen[i - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(l: usize) -> Self {
        Permutation((1..=l).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i - 1] = j + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    /// All permutations of `{1, …, l}` in lexicographic order.
    pub fn all(l: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=l).collect();
        let mut out = vec![Permutation(current.clone())];
        // next-permutation step
        loop {
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Permutation(current.clone()));
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}
