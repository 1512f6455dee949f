//! Bipartite partitions of `k`: multisets of pairs `[x, y]` with both
//! coordinate sums equal to `k`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, Permutation};

/// A bipartite partition stored in its normal form: parts in
/// lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct BiPartition {
    parts: Vec<(usize, usize)>,
}

impl BiPartition {
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts with both coordinates nonzero.
    pub fn propagating_parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().copied().filter(|&(x, y)| x > 0 && y > 0)
    }
}

impl TryFrom<Vec<(usize, usize)>> for BiPartition {
    type Error = Error;

    fn try_from(parts: Vec<(usize, usize)>) -> Result<Self> {
        normalize(parts)
    }
}

impl From<BiPartition> for Vec<(usize, usize)> {
    fn from(b: BiPartition) -> Self {
        b.parts
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{x},{y}]")?;
        }
        write!(f, "}}")
    }
}

/// Puts a multiset of pairs into normal form.
pub fn normalize(mut parts: Vec<(usize, usize)>) -> Result<BiPartition> {
    if parts.contains(&(0, 0)) {
        return Err(Error::ZeroPart);
    }
    let top: usize = parts.iter().map(|p| p.0).sum();
    let bottom: usize = parts.iter().map(|p| p.1).sum();
    if top != bottom {
        return Err(Error::Unbalanced { top, bottom });
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BiPartition { parts })
}

/// All bipartite partitions of `k`, in decreasing lexicographic order of
/// their part sequences.
pub fn enumerate_bipartitions(k: usize) -> Vec<BiPartition> {
    enumerate_bipartitions_bounded(k, None)
}

/// `bp_k` without enumeration: the `x^k y^k` coefficient of
/// `∏_{[i,j] ≠ [0,0]} 1 / (1 - x^i y^j)`.
pub fn bipartition_count(k: usize) -> BigUint {
    let mut grid = vec![vec![BigUint::zero(); k + 1]; k + 1];
    grid[0][0] = BigUint::one();
    for i in 0..=k {
        for j in (0..=k).filter(|&j| i + j > 0) {
            for a in i..=k {
                for b in j..=k {
                    let prev = grid[a - i][b - j].clone();
                    grid[a][b] += prev;
                }
            }
        }
    }
    grid[k][k].clone()
}

/// Bipartite partitions of `k` with at most `max_parts` parts.
pub fn enumerate_bipartitions_bounded(k: usize, max_parts: Option<usize>) -> Vec<BiPartition> {
    fn go(
        rx: usize,
        ry: usize,
        prev: (usize, usize),
        slots: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<BiPartition>,
    ) {
        if rx == 0 && ry == 0 {
            out.push(BiPartition { parts: current.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (0..=rx.min(prev.0)).rev() {
            let ycap = if x == prev.0 { prev.1.min(ry) } else { ry };
            for y in (0..=ycap).rev() {
                if x == 0 && y == 0 {
                    continue;
                }
                current.push((x, y));
                go(rx - x, ry - y, (x, y), slots - 1, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, k, (k, k), max_parts.unwrap_or(2 * k), &mut Vec::new(), &mut out);
    out
}

/// The Garsia–Gessel view of a bipartite partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GGForm {
    pub lambda_top: Partition,
    pub lambda_bot: Partition,
    pub lambda_top_pro: Partition,
    pub lambda_bot_pro: Partition,
    pub sigma: Permutation,
    pub nonprop_top: Partition,
    pub nonprop_bot: Partition,
}

impl GGForm {
    /// Recovers the bipartite partition: bottom part `i` is joined to top
    /// part `σ_i`.
    pub fn to_bipartition(&self) -> Result<BiPartition> {
        let top = self.lambda_top_pro.parts();
        let mut parts: Vec<(usize, usize)> =
            self.lambda_bot_pro.parts().iter().zip(self.sigma.images()).map(|(&y, &s)| (top[s - 1], y)).collect();
        parts.extend(self.nonprop_top.parts().iter().map(|&x| (x, 0)));
        parts.extend(self.nonprop_bot.parts().iter().map(|&y| (0, y)));
        normalize(parts)
    }
}

/// Garsia–Gessel form of `b`.
///
/// Propagating parts are listed in bottom order (`y` descending, then `x`
/// descending). Top parts of equal length form contiguous index blocks; each
/// bottom part takes the leftmost unused index in the block of its `x`, so no
/// two lines between parts of equal lengths cross.
pub fn gg_form(b: &BiPartition) -> GGForm {
    let mut pro: Vec<(usize, usize)> = b.propagating_parts().collect();
    pro.sort_unstable_by_key(|&(x, y)| std::cmp::Reverse((y, x)));
    let top_pro = Partition::from_unordered(pro.iter().map(|p| p.0));
    let bot_pro = Partition::from_unordered(pro.iter().map(|p| p.1));

    let mut next_free: HashMap<usize, usize> = HashMap::new();
    for (idx, &x) in top_pro.parts().iter().enumerate().rev() {
        next_free.insert(x, idx + 1);
    }
    let sigma: Vec<usize> = pro
        .iter()
        .map(|&(x, _)| {
            let slot = next_free.get_mut(&x).expect("x occurs among top parts");
            *slot += 1;
            *slot - 1
        })
        .collect();

    GGForm {
        lambda_top: Partition::from_unordered(b.parts().iter().map(|p| p.0)),
        lambda_bot: Partition::from_unordered(b.parts().iter().map(|p| p.1)),
        lambda_top_pro: top_pro,
        lambda_bot_pro: bot_pro,
        sigma: Permutation::new(sigma).expect("block assignment is a bijection"),
        nonprop_top: Partition::from_unordered(b.parts().iter().filter(|p| p.1 == 0).map(|p| p.0)),
        nonprop_bot: Partition::from_unordered(b.parts().iter().filter(|p| p.0 == 0).map(|p| p.1)),
    }
}

/// `λ_i = λ_{i+1}` implies `σ_i < σ_{i+1}`.
pub fn is_sigma_compatible(lambda: &Partition, sigma: &Permutation) -> Result<bool> {
    if lambda.len() != sigma.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: sigma.len() });
    }
    let parts = lambda.parts();
    let images = sigma.images();
    Ok((1..parts.len()).all(|i| parts[i - 1] != parts[i] || images[i - 1] < images[i]))
}

/// Number of nonnegative integer matrices with row sums `alpha` and column
/// sums `beta`.
pub fn count_matrices(alpha: &Partition, beta: &Partition) -> Result<BigUint> {
    if alpha.order() != beta.order() {
        return Err(Error::OrderMismatch { left: alpha.order(), right: beta.order() });
    }
    let mut memo = HashMap::new();
    Ok(rows(alpha.parts(), beta.parts().to_vec(), &mut memo))
}

fn rows(alpha: &[usize], cols: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigUint>) -> BigUint {
    let Some((&sum, rest)) = alpha.split_first() else {
        return if cols.iter().all(|&c| c == 0) { BigUint::one() } else { BigUint::zero() };
    };
    let key = (alpha.len(), cols);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let cols = key.1.clone();
    let mut total = BigUint::zero();
    let mut row = vec![0; cols.len()];
    fill_row(&cols, 0, sum, &mut row, &mut |r| {
        let left: Vec<usize> = cols.iter().zip(r).map(|(c, x)| c - x).collect();
        total += rows(rest, left, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Visits every row with entry `j` at most the remaining column sum `j`
/// and total `remaining`.
fn fill_row(cols: &[usize], j: usize, remaining: usize, row: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if j == cols.len() {
        if remaining == 0 {
            visit(row);
        }
        return;
    }
    let tail: usize = cols[j + 1..].iter().sum();
    let lo = remaining.saturating_sub(tail);
    for v in lo..=cols[j].min(remaining) {
        row[j] = v;
        fill_row(cols, j + 1, remaining - v, row, visit);
    }
    row[j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, kostka};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|k| enumerate_bipartitions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 9, 31, 109, 339]);
        assert_eq!(enumerate_bipartitions(0), vec![BiPartition { parts: vec![] }]);
        for k in 0..=7 {
            assert_eq!(bipartition_count(k), BigUint::from(enumerate_bipartitions(k).len()));
        }
    }

    #[test]
    fn small_listings() {
        let one: Vec<Vec<(usize, usize)>> = enumerate_bipartitions(1).into_iter().map(Into::into).collect();
        assert_eq!(one, vec![vec![(1, 1)], vec![(1, 0), (0, 1)]]);
        let two: Vec<Vec<(usize, usize)>> = enumerate_bipartitions(2).into_iter().map(Into::into).collect();
        let expected = vec![
            vec![(2, 2)],
            vec![(2, 1), (0, 1)],
            vec![(2, 0), (0, 2)],
            vec![(2, 0), (0, 1), (0, 1)],
            vec![(1, 2), (1, 0)],
            vec![(1, 1), (1, 1)],
            vec![(1, 1), (1, 0), (0, 1)],
            vec![(1, 0), (1, 0), (0, 2)],
            vec![(1, 0), (1, 0), (0, 1), (0, 1)],
        ];
        assert_eq!(two, expected);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // all multisets of pairs, built as sorted lists of the nonzero pairs
        fn brute(k: usize) -> std::collections::BTreeSet<Vec<(usize, usize)>> {
            let mut out = std::collections::BTreeSet::new();
            let pairs: Vec<(usize, usize)> =
                (0..=k).flat_map(|x| (0..=k).map(move |y| (x, y))).filter(|&p| p != (0, 0)).collect();
            fn go(
                pairs: &[(usize, usize)],
                rx: usize,
                ry: usize,
                cur: &mut Vec<(usize, usize)>,
                out: &mut std::collections::BTreeSet<Vec<(usize, usize)>>,
            ) {
                if rx == 0 && ry == 0 {
                    let mut sorted = cur.clone();
                    sorted.sort();
                    out.insert(sorted);
                    return;
                }
                for &(x, y) in pairs {
                    if x <= rx && y <= ry {
                        cur.push((x, y));
                        go(pairs, rx - x, ry - y, cur, out);
                        cur.pop();
                    }
                }
            }
            go(&pairs, k, k, &mut Vec::new(), &mut out);
            out
        }
        for k in 0..=4 {
            let fast: std::collections::BTreeSet<Vec<(usize, usize)>> = enumerate_bipartitions(k)
                .into_iter()
                .map(|b| {
                    let mut v: Vec<(usize, usize)> = b.into();
                    v.sort();
                    v
                })
                .collect();
            assert_eq!(fast, brute(k));
        }
    }

    #[test]
    fn bounded_enumeration() {
        for k in 0..=5 {
            let all = enumerate_bipartitions(k);
            for m in 0..=2 * k + 1 {
                let bounded = enumerate_bipartitions_bounded(k, Some(m));
                let filtered: Vec<_> = all.iter().filter(|b| b.len() <= m).cloned().collect();
                assert_eq!(bounded, filtered);
            }
        }
    }

    #[test]
    fn normal_form() {
        let b = normalize(vec![(1, 2), (2, 1), (4, 1), (0, 2), (0, 1), (1, 2), (1, 1), (3, 2)]).unwrap();
        assert_eq!(b.parts(), &[(4, 1), (3, 2), (2, 1), (1, 2), (1, 2), (1, 1), (0, 2), (0, 1)]);
        assert_eq!(normalize(b.parts().to_vec()).unwrap(), b);
        assert_eq!(normalize(vec![(3, 3)]).unwrap().parts(), &[(3, 3)]);
        assert_eq!(normalize(vec![(0, 0), (1, 1)]), Err(Error::ZeroPart));
        assert_eq!(normalize(vec![(2, 1)]), Err(Error::Unbalanced { top: 2, bottom: 1 }));
    }

    #[test]
    fn json_shape() {
        let b = normalize(vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), "[[1,0],[0,1]]");
        let back: BiPartition = serde_json::from_str("[[0,1],[1,0]]").unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BiPartition>("[[2,1]]").is_err());
    }

    #[test]
    fn gg_example() {
        let b = normalize(vec![(3, 1), (2, 2), (3, 2), (0, 4), (2, 1)]).unwrap();
        let gg = gg_form(&b);
        assert_eq!(gg.lambda_top_pro, p(&[3, 3, 2, 2]));
        assert_eq!(gg.lambda_bot_pro, p(&[2, 2, 1, 1]));
        assert_eq!(gg.sigma.images(), &[1, 3, 2, 4]);
        assert_eq!(gg.nonprop_bot, p(&[4]));
        assert!(gg.nonprop_top.is_empty());
        assert_eq!(gg.lambda_bot, p(&[4, 2, 2, 1, 1]));
        assert_eq!(gg.to_bipartition().unwrap(), b);

        let single = gg_form(&normalize(vec![(4, 4)]).unwrap());
        assert_eq!(single.sigma.images(), &[1]);
        assert!(single.nonprop_top.is_empty() && single.nonprop_bot.is_empty());

        let split = gg_form(&normalize(vec![(1, 0), (0, 1)]).unwrap());
        assert!(split.sigma.is_empty() && split.lambda_top_pro.is_empty());
    }

    #[test]
    fn gg_roundtrip_and_compatibility() {
        for k in 0..=6 {
            for b in enumerate_bipartitions(k) {
                let gg = gg_form(&b);
                assert_eq!(gg.to_bipartition().unwrap(), b);
                assert!(is_sigma_compatible(&gg.lambda_bot_pro, &gg.sigma).unwrap());
                assert!(is_sigma_compatible(&gg.lambda_top_pro, &gg.sigma.inverse()).unwrap());
            }
        }
    }

    #[test]
    fn compatibility() {
        let s = Permutation::new(vec![1, 3, 2, 4]).unwrap();
        assert!(is_sigma_compatible(&p(&[2, 2, 1, 1]), &s).unwrap());
        assert!(is_sigma_compatible(&p(&[3, 3, 3]), &Permutation::identity(3)).unwrap());
        assert!(!is_sigma_compatible(&p(&[2, 2]), &Permutation::new(vec![2, 1]).unwrap()).unwrap());
        assert!(is_sigma_compatible(&p(&[2]), &Permutation::identity(2)).is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(count_matrices(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap(), BigUint::from(5u32));
        assert_eq!(count_matrices(&p(&[4]), &p(&[4])).unwrap(), BigUint::one());
        assert!(count_matrices(&p(&[4]), &p(&[3])).is_err());
        for n in 0..=7 {
            for a in enumerate_partitions(n, None) {
                for b in enumerate_partitions(n, None) {
                    let rsk: BigUint = enumerate_partitions(n, None)
                        .iter()
                        .map(|l| kostka(l, &a.to_composition()).unwrap() * kostka(l, &b.to_composition()).unwrap())
                        .sum();
                    assert_eq!(count_matrices(&a, &b).unwrap(), rsk, "{a} {b}");
                }
            }
        }
    }
}
