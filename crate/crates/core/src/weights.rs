//! The type A_n root lattice: sum-zero integer vectors of length n+1 with the
//! symmetric group permuting coordinates.
//!
//! Coordinates and simple roots are indexed from 1 in the public API
//! (`alpha_i = e_i - e_{i+1}`, `1 <= i <= n`), matching the usual conventions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{self, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::RankTooSmall(coords.len()));
        }
        let sum: i64 = coords.iter().sum();
        if sum != 0 {
            return Err(Error::NotSumZero(sum));
        }
        Ok(Self { coords })
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![0; rank + 1],
        }
    }

    /// The highest root `e_1 - e_{n+1}`.
    pub fn theta(rank: usize) -> Self {
        Self::positive_root(rank, 1, rank + 1)
    }

    /// `e_i - e_j` (1-based, `i < j`).
    pub fn positive_root(rank: usize, i: usize, j: usize) -> Self {
        assert!(
            1 <= i && i < j && j <= rank + 1,
            "bad root indices ({i}, {j})"
        );
        let mut coords = vec![0; rank + 1];
        coords[i - 1] = 1;
        coords[j - 1] = -1;
        Self { coords }
    }

    /// `lambda = p - 1` where `p` is padded with zeros to length n+1.
    pub fn from_partition(partition: &Partition, rank: usize) -> Result<Self> {
        let size = partition.size();
        if size != rank + 1 {
            return Err(Error::RankMismatch {
                expected: rank + 1,
                actual: size,
            });
        }
        let mut coords: Vec<i64> = partition.parts().iter().map(|&p| p as i64 - 1).collect();
        coords.resize(rank + 1, -1);
        Self::new(coords)
    }

    pub fn rank(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    /// 1-based coordinate.
    pub fn coord(&self, k: usize) -> i64 {
        self.coords[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Smallest coordinate is at least -1 (the zero weight is included).
    pub fn is_first_layer(&self) -> bool {
        self.coords.iter().all(|&c| c >= -1)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(lambda, rho)`. With rho proportional to `(n, n-2, ..., -n)` and the
    /// coordinates summing to zero this is `-sum_k (k-1) lambda_k`.
    pub fn height(&self) -> i64 {
        -self
            .coords
            .iter()
            .enumerate()
            .map(|(k, &c)| k as i64 * c)
            .sum::<i64>()
    }

    pub fn norm_squared(&self) -> i64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// `(lambda, alpha_i^vee) = lambda_i - lambda_{i+1}`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.coords[i - 1] - self.coords[i]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `s_i`: swaps coordinates `i` and `i+1`.
    pub fn simple_reflect(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut coords = self.coords.clone();
        coords.swap(i - 1, i);
        Ok(Self { coords })
    }

    /// `s_theta`: swaps the first and last coordinates.
    pub fn theta_reflect(&self) -> Self {
        let mut coords = self.coords.clone();
        let last = coords.len() - 1;
        coords.swap(0, last);
        Self { coords }
    }

    /// `lambda - alpha_i`.
    pub fn minus_simple_root(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut coords = self.coords.clone();
        coords[i - 1] -= 1;
        coords[i] += 1;
        Ok(Self { coords })
    }

    /// `lambda + alpha_i`.
    pub fn plus_simple_root(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut coords = self.coords.clone();
        coords[i - 1] += 1;
        coords[i] -= 1;
        Ok(Self { coords })
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            coords: perm.iter().map(|&p| self.coords[p]).collect(),
        }
    }

    pub fn dominant_representative(&self) -> Self {
        let mut coords = self.coords.clone();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Self { coords }
    }

    fn require_first_layer(&self) -> Result<()> {
        if self.is_first_layer() {
            Ok(())
        } else {
            Err(Error::NotFirstLayer(self.clone()))
        }
    }

    /// Number of non-negative coordinates.
    pub fn length(&self) -> Result<usize> {
        self.require_first_layer()?;
        Ok(self.coords.iter().filter(|&&c| c >= 0).count())
    }

    /// Number of `-1` coordinates.
    pub fn co_length(&self) -> Result<usize> {
        self.require_first_layer()?;
        Ok(self.coords.iter().filter(|&&c| c < 0).count())
    }

    /// Suffix sums starting at each `-1` coordinate, left to right.
    pub fn aggregate_vector(&self) -> Result<AggregateVector> {
        self.require_first_layer()?;
        let mut suffix = 0;
        let mut entries = Vec::new();
        for &c in self.coords.iter().rev() {
            suffix += c;
            if c < 0 {
                entries.push(suffix);
            }
        }
        entries.reverse();
        Ok(AggregateVector(entries))
    }

    /// For a first-layer dominant weight, the partition `lambda + 1` with
    /// trailing zeros dropped.
    pub fn to_partition(&self) -> Result<Partition> {
        self.require_first_layer()?;
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.clone()));
        }
        Partition::new(
            self.coords
                .iter()
                .map(|&c| (c + 1) as usize)
                .filter(|&p| p > 0)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses `"0,2,0,1,0,0,-1,-1,-1"`; surrounding parentheses and spaces are
/// tolerated.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = body
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
        Self::new(coords)
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;
    fn try_from(coords: Vec<i64>) -> Result<Self> {
        Self::new(coords)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.coords
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AggregateVector(Vec<i64>);

impl AggregateVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every entry is negative; vacuously true when empty.
    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&a| a < 0)
    }

    /// `a(1) <= 0`, `a(i) >= a(i+1) - 1`, `a(N) >= -1`.
    pub fn satisfies_inequalities(&self) -> bool {
        let Some((&first, &last)) = self.0.first().zip(self.0.last()) else {
            return true;
        };
        first <= 0 && last >= -1 && self.0.windows(2).all(|w| w[0] >= w[1] - 1)
    }

    pub fn without(&self, j: usize) -> Self {
        let mut entries = self.0.clone();
        entries.remove(j - 1);
        Self(entries)
    }
}

/// All vectors of `parts` non-negative integers summing to `total`, in
/// descending lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Every first-layer weight of rank `n`.
pub fn first_layer_weights(rank: usize) -> Vec<Weight> {
    weak_compositions(rank + 1, rank + 1)
        .into_iter()
        .map(|c| Weight {
            coords: c.into_iter().map(|x| x as i64 - 1).collect(),
        })
        .collect()
}

/// Every first-layer dominant weight of rank `n`, one per partition of n+1.
pub fn first_layer_dominant_weights(rank: usize) -> Vec<Weight> {
    tableaux::partitions(rank + 1)
        .iter()
        .map(|p| Weight::from_partition(p, rank).expect("partition of n+1"))
        .collect()
}

fn require_first_layer_dominant(lambda: &Weight) -> Result<()> {
    if !lambda.is_first_layer() {
        return Err(Error::NotFirstLayer(lambda.clone()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

pub(crate) fn check_first_layer_dominant(lambda: &Weight) -> Result<()> {
    require_first_layer_dominant(lambda)
}

/// Weights of the irreducible representation with highest weight `lambda`,
/// with multiplicities (Kostka numbers `K_{lambda+1, mu+1}`), in ascending
/// lexicographic order of the weights.
pub fn weights_of_irrep(lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
    require_first_layer_dominant(lambda)?;
    let shape = lambda.to_partition()?;
    let rank = lambda.rank();
    let mut cache: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut out = BTreeMap::new();
    for content in weak_compositions(rank + 1, rank + 1) {
        let mut sorted = content.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if !tableaux::dominates(shape.parts(), &sorted) {
            continue;
        }
        let mult = *cache
            .entry(sorted)
            .or_insert_with_key(|key| tableaux::kostka_number(&shape, key).expect("sizes agree"));
        if mult > 0 {
            let mu = Weight {
                coords: content.iter().map(|&c| c as i64 - 1).collect(),
            };
            out.insert(mu, mult);
        }
    }
    Ok(out.into_iter().collect())
}
