//! Generalized exponents `E(V_lambda)` of first-layer representations.
//!
//! Six routes are implemented and cross-checked against each other:
//!
//! | method         | formula                                                         |
//! |----------------|-----------------------------------------------------------------|
//! | `weights`      | `sum_mu m_{lambda mu} t^{ht(mu)} (1 - t^{a_mu})`                |
//! | `signed`       | `sum_{i=1}^{ht(lambda)} (h_even(i) - h_odd(i)) t^i`             |
//! | `quasiweights` | `sum_mu q_{lambda mu} t^{ht(mu)}`                               |
//! | `tableaux`     | `sum_{T in SYT(lambda+1)} t^{ht(T)}`                            |
//! | `charge`       | `sum_{T in SYT(lambda+1)} t^{ch(T)}`                            |
//! | `hp`           | `sum_w sign(w) P_t(w(lambda + rho) - rho)` (t-Kostant function) |

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::c_closed_form;
use crate::laurent::LaurentPolynomial;
use crate::quasisym::quasi_weight_expansion;
use crate::tableaux::{kostka_number, syt_enumerate};
use crate::weights::{check_first_layer_dominant, weights_of_irrep, Weight};

/// Default largest rank for the alternating-sum oracle; `(n+1)!` terms.
pub const DEFAULT_HP_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Weights,
    Signed,
    Quasiweights,
    Tableaux,
    Charge,
    Hp,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Weights,
        Method::Signed,
        Method::Quasiweights,
        Method::Tableaux,
        Method::Charge,
        Method::Hp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Weights => "weights",
            Method::Signed => "signed",
            Method::Quasiweights => "quasiweights",
            Method::Tableaux => "tableaux",
            Method::Charge => "charge",
            Method::Hp => "hp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown method".to_string(),
            })
    }
}

pub fn exponents_by_weights(lambda: &Weight) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for (mu, mult) in weights_of_irrep(lambda)? {
        out += &c_closed_form(&mu)?.scale(&BigInt::from(mult));
    }
    Ok(out)
}

/// `(h_even(i), h_odd(i))` for every `i` reached, over pairs `(mu, A)` with
/// `mu` a weight of `V_lambda` (with multiplicity), `a_mu < 0` entrywise (the
/// zero weight qualifies vacuously) and `A ⊆ [co-length(mu)]`, where
/// `i = ht(mu) + sum_{a in A} a_mu(a)`.
pub fn signed_count_table(lambda: &Weight) -> Result<BTreeMap<i64, (u64, u64)>> {
    let mut table: BTreeMap<i64, (u64, u64)> = BTreeMap::new();
    for (mu, mult) in weights_of_irrep(lambda)? {
        let aggregate = mu.aggregate_vector()?;
        if !aggregate.is_negative() {
            continue;
        }
        let entries = aggregate.entries();
        for mask in 0u64..1 << entries.len() {
            let i = mu.height()
                + entries
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, a)| a)
                    .sum::<i64>();
            let slot = table.entry(i).or_default();
            if mask.count_ones() % 2 == 0 {
                slot.0 += mult;
            } else {
                slot.1 += mult;
            }
        }
    }
    Ok(table)
}

/// Signed count restricted to `1 <= i <= ht(lambda)`. The zero weight has no
/// terms in that range, so `lambda = 0` returns 1 by convention.
pub fn exponents_by_signed_count(lambda: &Weight) -> Result<LaurentPolynomial> {
    check_first_layer_dominant(lambda)?;
    if lambda.is_zero() {
        return Ok(LaurentPolynomial::one());
    }
    let top = lambda.height();
    let table = signed_count_table(lambda)?;
    Ok(LaurentPolynomial::from_terms(table.range(1..=top).map(
        |(&i, &(even, odd))| (i, BigInt::from(even) - BigInt::from(odd)),
    )))
}

pub fn exponents_by_quasiweights(lambda: &Weight) -> Result<LaurentPolynomial> {
    Ok(LaurentPolynomial::from_terms(
        quasi_weight_expansion(lambda)?
            .into_iter()
            .map(|(mu, q)| (mu.height(), BigInt::from(q))),
    ))
}

pub fn exponents_by_tableaux(lambda: &Weight) -> Result<LaurentPolynomial> {
    check_first_layer_dominant(lambda)?;
    let shape = lambda.to_partition()?;
    Ok(LaurentPolynomial::from_terms(
        syt_enumerate(&shape).iter().map(|t| (t.height(), 1)),
    ))
}

pub fn exponents_by_charge(lambda: &Weight) -> Result<LaurentPolynomial> {
    check_first_layer_dominant(lambda)?;
    let shape = lambda.to_partition()?;
    Ok(LaurentPolynomial::from_terms(
        syt_enumerate(&shape).iter().map(|t| (t.charge(), 1)),
    ))
}

/// The t-analogue of Kostant's partition function,
/// `prod_{alpha > 0} (1 - t e^alpha)^{-1} = sum_gamma P_t(gamma) e^gamma`,
/// memoized across queries of one rank.
///
/// A vector `gamma` is peeled from the left: its first coordinate is the
/// number of roots `e_1 - e_j` used, distributed over `j = 2..=n+1` in every
/// possible way, and the remainder is a query one rank lower.
#[derive(Debug, Default)]
pub struct KostantPartitionFunction {
    memo: HashMap<Vec<i64>, LaurentPolynomial>,
}

impl KostantPartitionFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, gamma: &[i64]) -> LaurentPolynomial {
        if gamma.iter().all(|&g| g == 0) {
            return LaurentPolynomial::one();
        }
        let mut partial = 0;
        for &g in gamma {
            partial += g;
            if partial < 0 {
                return LaurentPolynomial::zero();
            }
        }
        if partial != 0 {
            return LaurentPolynomial::zero();
        }
        if let Some(v) = self.memo.get(gamma) {
            return v.clone();
        }
        let first = gamma[0] as usize;
        let rest = &gamma[1..];
        let mut total = LaurentPolynomial::zero();
        for split in crate::weights::weak_compositions(first, rest.len()) {
            let reduced: Vec<i64> = rest
                .iter()
                .zip(&split)
                .map(|(&g, &s)| g + s as i64)
                .collect();
            total += &self.get(&reduced);
        }
        let value = total.shift(first as i64);
        self.memo.insert(gamma.to_vec(), value.clone());
        value
    }
}

/// Permutations of `0..len` with their signs.
fn signed_permutations(len: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(
        avail: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        sign: i64,
        out: &mut Vec<(Vec<usize>, i64)>,
    ) {
        if avail.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..avail.len() {
            let v = avail.remove(k);
            prefix.push(v);
            // picking the k-th smallest remaining element adds k inversions
            rec(avail, prefix, if k % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            avail.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..len).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// Alternating sum of the t-Kostant partition function over `S_{n+1}`, with
/// `rho = (n, n-1, ..., 0)`.
pub fn exponents_hp_oracle(lambda: &Weight, cap: usize) -> Result<LaurentPolynomial> {
    check_first_layer_dominant(lambda)?;
    let n = lambda.rank();
    if n > cap {
        return Err(Error::RankAboveCap { rank: n, cap });
    }
    let shifted: Vec<i64> = lambda
        .coords()
        .iter()
        .enumerate()
        .map(|(k, &c)| c + (n - k) as i64)
        .collect();
    let mut kpf = KostantPartitionFunction::new();
    let mut out = LaurentPolynomial::zero();
    for (perm, sign) in signed_permutations(n + 1) {
        let gamma: Vec<i64> = perm
            .iter()
            .enumerate()
            .map(|(k, &p)| shifted[p] - (n - k) as i64)
            .collect();
        let p = kpf.get(&gamma);
        if !p.is_zero() {
            out += &p.scale(&BigInt::from(sign));
        }
    }
    Ok(out)
}

pub fn exponents(lambda: &Weight, method: Method, hp_cap: usize) -> Result<LaurentPolynomial> {
    match method {
        Method::Weights => exponents_by_weights(lambda),
        Method::Signed => exponents_by_signed_count(lambda),
        Method::Quasiweights => exponents_by_quasiweights(lambda),
        Method::Tableaux => exponents_by_tableaux(lambda),
        Method::Charge => exponents_by_charge(lambda),
        Method::Hp => exponents_hp_oracle(lambda, hp_cap),
    }
}

/// First coefficient where two methods differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub first: Method,
    pub second: Method,
    pub exponent: i64,
    pub first_coefficient: String,
    pub second_coefficient: String,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} differ at t^{}: {} vs {}",
            self.first, self.second, self.exponent, self.first_coefficient, self.second_coefficient
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentReport {
    pub lambda: Weight,
    pub polynomials: BTreeMap<Method, LaurentPolynomial>,
    pub agreement: bool,
    pub disagreement: Option<Disagreement>,
    /// `e_1 <= ... <= e_v`; empty when the methods disagree.
    pub exponents: Vec<i64>,
    /// `dim V_lambda(0)`, the number of standard tableaux of shape `lambda + 1`.
    pub zero_weight_dimension: u64,
}

impl ExponentReport {
    /// The common polynomial, when every method agreed.
    pub fn polynomial(&self) -> Option<&LaurentPolynomial> {
        if self.agreement {
            self.polynomials.values().next()
        } else {
            None
        }
    }
}

fn first_difference(a: &LaurentPolynomial, b: &LaurentPolynomial) -> Option<(i64, BigInt, BigInt)> {
    let diff = a - b;
    let (_, exp) = diff.terms().next().map(|(e, c)| (c.clone(), e))?;
    Some((exp, a.coeff(exp), b.coeff(exp)))
}

/// Runs each requested method, compares them and extracts the exponent
/// multiset. On agreement the common polynomial must have non-negative
/// coefficients summing to `K_{lambda+1, 1^{n+1}}`; a violation is an
/// [`Error::IdentityFailed`].
pub fn full_report(lambda: &Weight, methods: &[Method], hp_cap: usize) -> Result<ExponentReport> {
    check_first_layer_dominant(lambda)?;
    let mut polynomials = BTreeMap::new();
    for &m in methods {
        polynomials.insert(m, exponents(lambda, m, hp_cap)?);
    }
    let mut disagreement = None;
    let mut iter = polynomials.iter();
    if let Some((&base_method, base)) = iter.next() {
        for (&m, p) in iter {
            if let Some((exponent, a, b)) = first_difference(base, p) {
                disagreement = Some(Disagreement {
                    first: base_method,
                    second: m,
                    exponent,
                    first_coefficient: a.to_string(),
                    second_coefficient: b.to_string(),
                });
                break;
            }
        }
    }
    let n = lambda.rank();
    let zero_weight_dimension = kostka_number(&lambda.to_partition()?, &vec![1; n + 1])?;
    let mut exponents = Vec::new();
    if disagreement.is_none() {
        if let Some(p) = polynomials.values().next() {
            if !p.has_nonnegative_coefficients()
                || p.evaluate_at_one() != BigInt::from(zero_weight_dimension)
            {
                return Err(Error::IdentityFailed {
                    subject: format!("E(V_{lambda})"),
                    expected: format!(
                        "non-negative coefficients summing to {zero_weight_dimension}"
                    ),
                    actual: p.to_string(),
                });
            }
            for (e, c) in p.terms() {
                let count = c.abs().to_usize().unwrap_or(0);
                exponents.extend(std::iter::repeat_n(e, count));
            }
        }
    }
    Ok(ExponentReport {
        lambda: lambda.clone(),
        polynomials,
        agreement: disagreement.is_none(),
        disagreement,
        exponents,
        zero_weight_dimension,
    })
}
