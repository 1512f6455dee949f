use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{bipartition_diagram, compose_diagrams, permutation_diagram, RationalPolynomial, SetPartition2k};
use crate::bipartite::enumerate_bipartitions;
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::partition::Permutation;

/// Largest `k` for which `e_k` is materialized by default.
pub const DEFAULT_SYMMETRIZER_BOUND: usize = 8;

/// A finite `ℚ[x]`-linear combination of diagrams in `P_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    k: usize,
    terms: BTreeMap<SetPartition2k, RationalPolynomial>,
}

impl AlgebraElement {
    pub fn zero(k: usize) -> Self {
        AlgebraElement { k, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: SetPartition2k) -> Self {
        let mut a = Self::zero(d.k());
        a.terms.insert(d, RationalPolynomial::one());
        a
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(SetPartition2k::identity(k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition2k, RationalPolynomial> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &SetPartition2k) -> RationalPolynomial {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: SetPartition2k, c: &RationalPolynomial) -> Result<()> {
        if d.k() != self.k {
            return Err(Error::DiagramMismatch { left: self.k, right: d.k() });
        }
        accumulate(&mut self.terms, d, c.clone());
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_k(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalPolynomial) -> AlgebraElement {
        let terms = self.terms.iter().map(|(d, a)| (d.clone(), a * c)).filter(|(_, a)| !a.is_zero()).collect();
        AlgebraElement { k: self.k, terms }
    }

    /// The product in `P_k`: each pair of diagrams contributes
    /// `x^N · (d ∘ d1)` with `N` the number of closed middle components.
    pub fn product(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_k(other)?;
        let mut terms = BTreeMap::new();
        for (d, a) in &self.terms {
            for (d1, b) in &other.terms {
                let (prod, loops) = compose_diagrams(d, d1)?;
                let c = if b.degree() == Some(0) {
                    a.scale_shift(&b.coefficients()[0], loops)
                } else {
                    (a * b).scale_shift(&BigRational::one(), loops)
                };
                accumulate(&mut terms, prod, c);
            }
        }
        Ok(AlgebraElement { k: self.k, terms })
    }

    fn check_k(&self, other: &AlgebraElement) -> Result<()> {
        if self.k != other.k {
            return Err(Error::DiagramMismatch { left: self.k, right: other.k });
        }
        Ok(())
    }
}

fn accumulate(terms: &mut BTreeMap<SetPartition2k, RationalPolynomial>, d: SetPartition2k, c: RationalPolynomial) {
    if c.is_zero() {
        return;
    }
    match terms.entry(d) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += &c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// `e_k = (1/k!) Σ_σ σ` with the default bound on `k`.
pub fn symmetrizer(k: usize) -> Result<AlgebraElement> {
    symmetrizer_with_bound(k, DEFAULT_SYMMETRIZER_BOUND)
}

pub fn symmetrizer_with_bound(k: usize, bound: usize) -> Result<AlgebraElement> {
    if k > bound {
        return Err(Error::SymmetrizerBound { k, bound });
    }
    let weight = RationalPolynomial::constant(BigRational::new(BigInt::one(), BigInt::from(factorial(k))));
    let mut e = AlgebraElement::zero(k);
    for sigma in Permutation::all(k) {
        e.terms.insert(permutation_diagram(&sigma), weight.clone());
    }
    Ok(e)
}

/// `e_k · N(b) · e_k` for every bipartite partition `b` of `k`, in the
/// enumeration order of bipartite partitions.
pub fn spherical_basis(k: usize) -> Result<Vec<AlgebraElement>> {
    let e = symmetrizer(k)?;
    enumerate_bipartitions(k)
        .iter()
        .map(|b| e.product(&AlgebraElement::from_diagram(bipartition_diagram(b)))?.product(&e))
        .collect()
}

/// An element with coefficients evaluated at a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedElement {
    pub k: usize,
    pub terms: BTreeMap<SetPartition2k, BigRational>,
}

/// Evaluates every coefficient at `x = t`; terms that vanish are dropped.
pub fn specialize(a: &AlgebraElement, t: &BigRational) -> SpecializedElement {
    let terms = a.terms.iter().map(|(d, c)| (d.clone(), c.eval(t))).filter(|(_, v)| !v.is_zero()).collect();
    SpecializedElement { k: a.k, terms }
}
