use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{partition_stats, Composition, Partition};
use crate::combinat::factorial;
use crate::error::{Error, Result};

type KostkaKey = (Vec<usize>, Vec<usize>);

fn kostka_memo() -> &'static Mutex<HashMap<KostkaKey, BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<KostkaKey, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Number of semistandard `λ`-tableaux of content `μ`.
///
/// The entries equal to `j` in a semistandard tableau occupy a horizontal
/// strip, so the tableau is filled one value at a time, each value extending
/// the current shape row by row. A row may grow only up to the old length of
/// the row above it, which is exactly column strictness.
pub fn kostka(lambda: &Partition, mu: &Composition) -> Result<BigUint> {
    if lambda.order() != mu.order() {
        return Err(Error::OrderMismatch { left: lambda.order(), right: mu.order() });
    }
    let mut content = mu.parts().to_vec();
    content.sort_unstable_by(|a, b| b.cmp(a));
    let key = (lambda.parts().to_vec(), content);
    if let Some(hit) = kostka_memo().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut local = HashMap::new();
    let shape = vec![0; lambda.len()];
    let value = fill(lambda.parts(), &key.1, shape, &mut local);
    kostka_memo().lock().unwrap().insert(key, value.clone());
    Ok(value)
}

fn fill(
    target: &[usize],
    content: &[usize],
    shape: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
) -> BigUint {
    let Some((&size, rest)) = content.split_first() else {
        return BigUint::one();
    };
    let key = (content.len(), shape);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let shape = key.1.clone();
    let mut total = BigUint::zero();
    let mut next = shape.clone();
    strips(target, &shape, 0, size, &mut next, &mut |grown| {
        total += fill(target, rest, grown.to_vec(), memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Visits every way to add a horizontal strip of `remaining` cells to
/// `shape` from row `row` downwards while staying inside `target`.
fn strips(
    target: &[usize],
    shape: &[usize],
    row: usize,
    remaining: usize,
    next: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(next);
        return;
    }
    if row == target.len() {
        return;
    }
    let cap = if row == 0 { target[0] } else { target[row].min(shape[row - 1]) };
    let room = cap.saturating_sub(shape[row]);
    for add in (0..=room.min(remaining)).rev() {
        next[row] = shape[row] + add;
        strips(target, shape, row + 1, remaining - add, next, visit);
    }
    next[row] = shape[row];
}

/// Number of standard tableaux of shape `λ`, by the hook-length formula.
pub fn std_count(lambda: &Partition) -> BigUint {
    let hooks: BigUint = partition_stats(lambda).hooks.iter().map(|&h| BigUint::from(h)).product();
    factorial(lambda.order()) / hooks
}
