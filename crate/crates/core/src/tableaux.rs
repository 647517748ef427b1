//! Partitions, compositions, standard and semistandard Young tableaux.
//!
//! Tableaux are stored in English notation: row 1 is the top row and is the
//! longest.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasisym::QuasiDominantWeight;
use crate::weights::Weight;

/// A subset of `[n]`, kept sorted.
pub type IndexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Self {
            parts: (1..=width)
                .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
                .collect(),
        }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                hooks *= (row - c - 1 + conj.parts[c] - r - 1 + 1) as u128;
            }
        }
        (1..=self.size() as u128).product::<u128>() / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Partitions of `m` in descending lexicographic order.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every partial sum of `upper` is at least the matching
/// partial sum of `lower`. Both are weakly decreasing; zeros are allowed.
pub fn dominates(upper: &[usize], lower: &[usize]) -> bool {
    let len = upper.len().max(lower.len());
    let (mut su, mut sl) = (0, 0);
    for k in 0..len {
        su += upper.get(k).copied().unwrap_or(0);
        sl += lower.get(k).copied().unwrap_or(0);
        if su < sl {
            return false;
        }
    }
    su == sl
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sums `{a_1, a_1 + a_2, ..., a_1 + ... + a_{k-1}}`, a subset of
    /// `[K]` where `K + 1` is the size.
    pub fn to_set(&self) -> IndexSet {
        self.parts[..self.parts.len() - 1]
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

fn check_subset(set: &IndexSet, bound: usize) -> Result<()> {
    match set.iter().find(|&&s| s == 0 || s > bound) {
        Some(&element) => Err(Error::SetElementOutOfRange { element, bound }),
        None => Ok(()),
    }
}

/// `co(S) = (s_1, s_2 - s_1, ..., K + 1 - s_l)` for `S` a subset of `[K]`.
pub fn co(set: &IndexSet, k: usize) -> Result<Composition> {
    check_subset(set, k)?;
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        parts.push(s - prev);
        prev = s;
    }
    parts.push(k + 1 - prev);
    Composition::new(parts)
}

/// `phi(A) = (n+1) - complement(A)`; an order-reversing involution of the
/// subsets of `[n]`.
pub fn phi_set(set: &IndexSet, n: usize) -> Result<IndexSet> {
    check_subset(set, n)?;
    Ok((1..=n)
        .filter(|a| !set.contains(a))
        .map(|a| n + 1 - a)
        .collect())
}

/// `lambda + 1` truncated to its first `length(lambda)` coordinates.
pub fn phi_weight(lambda: &QuasiDominantWeight) -> Composition {
    let w = lambda.weight();
    let length = w.length().expect("quasi-dominant weights are first layer");
    Composition::new(
        w.coords()[..length]
            .iter()
            .map(|&c| (c + 1) as usize)
            .collect(),
    )
    .expect("non-negative coordinates shift to positive parts")
}

/// Inverse of [`phi_weight`]: pad with zeros to length n+1 and subtract 1.
pub fn phi_weight_inverse(composition: &Composition) -> QuasiDominantWeight {
    let rank = composition.size() - 1;
    let mut coords: Vec<i64> = composition.parts().iter().map(|&p| p as i64 - 1).collect();
    coords.resize(rank + 1, -1);
    QuasiDominantWeight::new(Weight::new(coords).expect("sums to zero"))
        .expect("-1 entries are trailing")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates shape, row/column strictness and that entries are exactly
    /// `1..=size`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        let invalid = || Error::Parse {
            input: format!("{rows:?}"),
            reason: "not a standard Young tableau".to_string(),
        };
        Partition::new(shape.clone()).map_err(|_| invalid())?;
        let size: usize = shape.iter().sum();
        let mut seen = vec![false; size + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > size || seen[v] {
                    return Err(invalid());
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(invalid());
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(invalid());
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row index (0-based) of every entry; `rows_of()[v]` for `v` in `1..=size`.
    fn rows_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v] = r;
            }
        }
        out
    }

    /// `i` is a descent when `i + 1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> IndexSet {
        let row = self.rows_of();
        (1..self.size()).filter(|&i| row[i + 1] > row[i]).collect()
    }

    pub fn non_descent_set(&self) -> IndexSet {
        let des = self.descent_set();
        (1..self.size()).filter(|i| !des.contains(i)).collect()
    }

    /// Sum of `n + 1 - a` over the non-descents `a`.
    pub fn height(&self) -> i64 {
        let m = self.size() as i64;
        self.non_descent_set().iter().map(|&a| m - a as i64).sum()
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    pub fn charge(&self) -> i64 {
        charge_of_word(&self.reading_word())
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Charge of a permutation of `1..=m`: each `i >= 2` standing to the left of
/// `i - 1` contributes `m - (i - 1)`.
pub fn charge_of_word(word: &[usize]) -> i64 {
    let m = word.len();
    let mut pos = vec![0; m + 1];
    for (k, &v) in word.iter().enumerate() {
        pos[v] = k;
    }
    (2..=m)
        .filter(|&i| pos[i] < pos[i - 1])
        .map(|i| (m - (i - 1)) as i64)
        .sum()
}

/// All standard tableaux of the given shape. Entries are placed in
/// increasing order; the choice of row for each entry is tried top to
/// bottom, which fixes the output order.
pub fn syt_enumerate(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        next: usize,
        total: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > total {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(shape, next + 1, total, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(shape.parts(), 1, shape.size(), &mut rows, &mut out);
    out
}

/// All semistandard tableaux of the given shape with entries in
/// `1..=max_entry`, filled row by row, cell by cell.
pub fn ssyt_enumerate(shape: &Partition, max_entry: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fill_cells(
        shape.parts(),
        0,
        &mut rows,
        &mut |_| true,
        &mut |_| {},
        max_entry,
        &mut |t| out.push(t.to_vec()),
    );
    out
}

fn fill_cells(
    shape: &[usize],
    row: usize,
    rows: &mut Vec<Vec<usize>>,
    take: &mut dyn FnMut(usize) -> bool,
    give_back: &mut dyn FnMut(usize),
    max_entry: usize,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if row == shape.len() {
        emit(rows);
        return;
    }
    let col = rows[row].len();
    if col == shape[row] {
        fill_cells(shape, row + 1, rows, take, give_back, max_entry, emit);
        return;
    }
    let left = if col > 0 { rows[row][col - 1] } else { 1 };
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    for v in left.max(above)..=max_entry {
        if !take(v) {
            continue;
        }
        rows[row].push(v);
        fill_cells(shape, row, rows, take, give_back, max_entry, emit);
        rows[row].pop();
        give_back(v);
    }
}

/// Number of semistandard tableaux of `shape` with content `content`
/// (`content[k]` copies of `k + 1`), by direct enumeration.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> Result<u64> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: total,
        });
    }
    let remaining = std::cell::RefCell::new(content.to_vec());
    let mut count = 0u64;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fill_cells(
        shape.parts(),
        0,
        &mut rows,
        &mut |v| {
            let mut rem = remaining.borrow_mut();
            if rem[v - 1] > 0 {
                rem[v - 1] -= 1;
                true
            } else {
                false
            }
        },
        &mut |v| remaining.borrow_mut()[v - 1] += 1,
        content.len(),
        &mut |_| count += 1,
    );
    Ok(count)
}

/// Kostka number by peeling off horizontal strips (one per content entry,
/// from the largest label down), memoized on the remaining shape.
pub fn kostka_number_by_strips(shape: &Partition, content: &[usize]) -> Result<u64> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: total,
        });
    }
    fn strips(
        outer: &[usize],
        size: usize,
        k: usize,
        inner: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == outer.len() {
            if size == 0 {
                out.push(inner.iter().copied().filter(|&p| p > 0).collect());
            }
            return;
        }
        // inner[k] ranges over [outer[k+1], outer[k]] for a horizontal strip
        let low = outer.get(k + 1).copied().unwrap_or(0);
        for keep in low..=outer[k] {
            let removed = outer[k] - keep;
            if removed > size {
                continue;
            }
            inner.push(keep);
            strips(outer, size - removed, k + 1, inner, out);
            inner.pop();
        }
    }
    fn rec(
        shape: Vec<usize>,
        content: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.is_empty());
        };
        if let Some(&v) = memo.get(&(shape.clone(), content.len())) {
            return v;
        }
        let mut inners = Vec::new();
        strips(&shape, last, 0, &mut Vec::new(), &mut inners);
        let value = inners.into_iter().map(|inner| rec(inner, rest, memo)).sum();
        memo.insert((shape, content.len()), value);
        value
    }
    Ok(rec(shape.parts().to_vec(), content, &mut HashMap::new()))
}

/// `{co(Des(T)) : T in SYT(shape)}` in tableau order, compositions of the
/// shape's size.
pub fn schur_fundamental_expansion(shape: &Partition) -> Vec<Composition> {
    let k = shape.size().saturating_sub(1);
    syt_enumerate(shape)
        .iter()
        .map(|t| co(&t.descent_set(), k).expect("descents lie in [K]"))
        .collect()
}

/// A polynomial in `nvars` commuting variables as exponent vector ->
/// coefficient.
pub type ExponentPolynomial = BTreeMap<Vec<usize>, u64>;

/// Quasisymmetric monomial `m_a` in `nvars` variables.
pub fn monomial_quasisym_polynomial(composition: &Composition, nvars: usize) -> ExponentPolynomial {
    let parts = composition.parts();
    let mut out = ExponentPolynomial::new();
    for positions in combinations(nvars, parts.len()) {
        let mut exps = vec![0; nvars];
        for (&p, &a) in positions.iter().zip(parts) {
            exps[p] = a;
        }
        *out.entry(exps).or_default() += 1;
    }
    out
}

/// Fundamental quasisymmetric polynomial: the sum of `m_b` over all
/// compositions `b` refining `a` (`co^{-1}(a) ⊆ co^{-1}(b)`).
pub fn fundamental_quasisym_polynomial(
    composition: &Composition,
    nvars: usize,
) -> ExponentPolynomial {
    let k = composition.size() - 1;
    let base = composition.to_set();
    let free: Vec<usize> = (1..=k).filter(|s| !base.contains(s)).collect();
    let mut out = ExponentPolynomial::new();
    for mask in 0u64..(1 << free.len()) {
        let mut set = base.clone();
        set.extend(
            free.iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &s)| s),
        );
        let refined = co(&set, k).expect("subset of [K]");
        for (exps, c) in monomial_quasisym_polynomial(&refined, nvars) {
            *out.entry(exps).or_default() += c;
        }
    }
    out
}

/// Schur polynomial in `nvars` variables as a sum over semistandard tableaux.
pub fn schur_polynomial(shape: &Partition, nvars: usize) -> ExponentPolynomial {
    let mut out = ExponentPolynomial::new();
    for t in ssyt_enumerate(shape, nvars) {
        let mut exps = vec![0; nvars];
        for v in t.iter().flatten() {
            exps[v - 1] += 1;
        }
        *out.entry(exps).or_default() += 1;
    }
    out
}

/// `k`-element subsets of `0..n` as increasing index vectors, in
/// lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            if n - i < k - prefix.len() {
                break;
            }
            prefix.push(i);
            rec(i + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All subsets of `[n]`.
pub fn subsets(n: usize) -> impl Iterator<Item = IndexSet> {
    (0u64..1 << n).map(move |mask| (1..=n).filter(|&s| mask >> (s - 1) & 1 == 1).collect())
}
