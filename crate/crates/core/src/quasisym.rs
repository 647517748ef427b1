//! First-layer quasisymmetric functions.
//!
//! The local action lets `s_i` fix a weight whose `i`-th and `(i+1)`-th
//! coordinates are both non-negative and swap them otherwise. A local orbit
//! therefore keeps the non-negative coordinates in their relative order and
//! only moves the `-1` entries around. Its highest element, with every `-1`
//! pushed to the right, is called quasi-dominant. Quasi-dominant weights of
//! rank `n` are in bijection with the subsets of `[n]` through their height
//! sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{c_closed_form, WeightFunction};
use crate::laurent::LaurentPolynomial;
use crate::tableaux::{self, combinations, IndexSet};
use crate::weights::{self, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Weight", into = "Weight")]
pub struct QuasiDominantWeight(Weight);

impl QuasiDominantWeight {
    /// Accepts first-layer weights whose `-1` coordinates are all trailing.
    pub fn new(weight: Weight) -> Result<Self> {
        if !weight.is_first_layer() {
            return Err(Error::NotFirstLayer(weight));
        }
        let first_negative = weight.coords().iter().position(|&c| c < 0);
        if let Some(pos) = first_negative {
            if weight.coords()[pos..].iter().any(|&c| c >= 0) {
                return Err(Error::NotQuasiDominant(weight));
            }
        }
        Ok(Self(weight))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn height(&self) -> i64 {
        self.0.height()
    }

    pub fn co_length(&self) -> usize {
        self.0.co_length().expect("first layer")
    }
}

impl TryFrom<Weight> for QuasiDominantWeight {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Self> {
        Self::new(w)
    }
}

impl From<QuasiDominantWeight> for Weight {
    fn from(q: QuasiDominantWeight) -> Self {
        q.0
    }
}

impl fmt::Display for QuasiDominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The positive root `e_i - e_j`, `i < j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn to_weight(&self, rank: usize) -> Weight {
        Weight::positive_root(rank, self.i, self.j)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// A subset of `[n]` carrying its rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HeightSet {
    rank: usize,
    elements: IndexSet,
}

impl HeightSet {
    pub fn new(elements: IndexSet, rank: usize) -> Result<Self> {
        if let Some(&element) = elements.iter().find(|&&s| s == 0 || s > rank) {
            return Err(Error::SetElementOutOfRange {
                element,
                bound: rank,
            });
        }
        Ok(Self { rank, elements })
    }

    pub fn elements(&self) -> &IndexSet {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in decreasing order.
    pub fn height_vector(&self) -> Vec<usize> {
        self.elements.iter().rev().copied().collect()
    }

    pub fn sum(&self) -> i64 {
        self.elements.iter().map(|&s| s as i64).sum()
    }
}

/// `s_i . lambda`: identity when both coordinates are non-negative,
/// otherwise the ordinary reflection.
pub fn local_act(i: usize, lambda: &Weight) -> Result<Weight> {
    if i == 0 || i > lambda.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: lambda.rank(),
        });
    }
    if lambda.coord(i) >= 0 && lambda.coord(i + 1) >= 0 {
        Ok(lambda.clone())
    } else {
        lambda.simple_reflect(i)
    }
}

/// Local orbit: every interleaving of the non-negative coordinates (kept in
/// order) with the `-1` entries. Enumerated by choosing the `-1` positions.
pub fn local_orbit(lambda: &Weight) -> Result<BTreeSet<Weight>> {
    let co_length = lambda.co_length()?;
    let size = lambda.rank() + 1;
    let frozen: Vec<i64> = lambda
        .coords()
        .iter()
        .copied()
        .filter(|&c| c >= 0)
        .collect();
    let mut out = BTreeSet::new();
    for positions in combinations(size, co_length) {
        let mut coords = Vec::with_capacity(size);
        let mut rest = frozen.iter();
        let mut neg = positions.iter().peekable();
        for k in 0..size {
            if neg.peek() == Some(&&k) {
                neg.next();
                coords.push(-1);
            } else {
                coords.push(*rest.next().expect("enough frozen entries"));
            }
        }
        out.insert(Weight::new(coords)?);
    }
    Ok(out)
}

/// Local orbit by closure under [`local_act`]; slow, kept as a reference.
pub fn local_orbit_by_closure(lambda: &Weight) -> Result<BTreeSet<Weight>> {
    lambda.co_length()?;
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for i in 1..=mu.rank() {
            let next = local_act(i, &mu)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Deletes the `-1` entries and appends them at the end.
pub fn quasi_dominant_representative(lambda: &Weight) -> Result<QuasiDominantWeight> {
    let co_length = lambda.co_length()?;
    let mut coords: Vec<i64> = lambda
        .coords()
        .iter()
        .copied()
        .filter(|&c| c >= 0)
        .collect();
    coords.extend(std::iter::repeat_n(-1, co_length));
    QuasiDominantWeight::new(Weight::new(coords)?)
}

/// `lambda = beta_1 + ... + beta_N` with `beta_N = e_i - e_j`, `i` the
/// rightmost positive coordinate and `j` the leftmost `-1`, recursing on
/// `lambda - beta_N`. Heights strictly decrease along the result.
pub fn canonical_expression(lambda: &QuasiDominantWeight) -> Vec<PositiveRoot> {
    let mut coords = lambda.weight().coords().to_vec();
    let mut reversed = Vec::new();
    while let Some(j) = coords.iter().position(|&c| c < 0) {
        let i = coords
            .iter()
            .rposition(|&c| c > 0)
            .expect("sum zero with a -1 entry");
        coords[i] -= 1;
        coords[j] += 1;
        reversed.push(PositiveRoot { i: i + 1, j: j + 1 });
    }
    reversed.reverse();
    reversed
}

pub fn height_set(lambda: &QuasiDominantWeight) -> HeightSet {
    let elements = canonical_expression(lambda)
        .iter()
        .map(PositiveRoot::height)
        .collect();
    HeightSet::new(elements, lambda.rank()).expect("root heights lie in [n]")
}

/// The quasi-dominant weight with the given height set: with
/// `s_1 > ... > s_N`, coordinate `k <= n+1-N` counts the `i` with
/// `n + 2 - i - s_i = k`, and the last `N` coordinates are `-1`.
pub fn height_set_inverse(set: &HeightSet) -> QuasiDominantWeight {
    let n = set.rank();
    let heights = set.height_vector();
    let big_n = heights.len();
    let mut coords = vec![0i64; n + 1];
    for (idx, &s) in heights.iter().enumerate() {
        let i = idx + 1;
        coords[n + 2 - i - s - 1] += 1;
    }
    for c in coords.iter_mut().skip(n + 1 - big_n) {
        *c = -1;
    }
    QuasiDominantWeight::new(Weight::new(coords).expect("sums to zero")).expect("trailing -1")
}

/// Every quasi-dominant weight of rank `n`, ordered by height set bitmask.
pub fn quasi_dominant_weights(rank: usize) -> Vec<QuasiDominantWeight> {
    tableaux::subsets(rank)
        .map(|s| height_set_inverse(&HeightSet::new(s, rank).expect("subset of [n]")))
        .collect()
}

/// `M_lambda`: indicator of the local orbit.
pub fn monomial_quasisym(lambda: &QuasiDominantWeight) -> WeightFunction {
    local_orbit(lambda.weight())
        .expect("first layer")
        .into_iter()
        .map(|mu| (mu, LaurentPolynomial::one()))
        .collect()
}

/// Height sets of all `mu` contained in `lambda`, i.e. subsets of `Ht(lambda)`.
fn sub_height_sets(lambda: &QuasiDominantWeight) -> impl Iterator<Item = HeightSet> {
    let hs = height_set(lambda);
    let elems: Vec<usize> = hs.elements().iter().copied().collect();
    let rank = hs.rank();
    (0u64..1 << elems.len()).map(move |mask| {
        let subset = elems
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        HeightSet::new(subset, rank).expect("subset of a height set")
    })
}

/// `Q_lambda = sum of M_mu over mu with Ht(mu) ⊆ Ht(lambda)`.
pub fn fundamental_quasisym(lambda: &QuasiDominantWeight) -> WeightFunction {
    let mut out = WeightFunction::new();
    for s in sub_height_sets(lambda) {
        out.add_scaled(
            &monomial_quasisym(&height_set_inverse(&s)),
            &LaurentPolynomial::one(),
        );
    }
    out
}

/// `<1, M_lambda>_t` summed from closed-form Fourier coefficients over the
/// local orbit, checked against `t^{ht(lambda)} (1 - t^{-ht_lambda})`.
pub fn pair_monomial(lambda: &QuasiDominantWeight) -> Result<LaurentPolynomial> {
    let mut orbit_sum = LaurentPolynomial::zero();
    for mu in local_orbit(lambda.weight())? {
        orbit_sum += &c_closed_form(&mu)?;
    }
    let negated: Vec<i64> = height_set(lambda)
        .height_vector()
        .iter()
        .map(|&s| -(s as i64))
        .collect();
    let expected = LaurentPolynomial::one_minus_t_set(&negated).shift(lambda.height());
    if orbit_sum != expected {
        return Err(Error::IdentityFailed {
            subject: format!("<1, M_{lambda}>"),
            expected: expected.to_string(),
            actual: orbit_sum.to_string(),
        });
    }
    Ok(orbit_sum)
}

/// `<1, Q_lambda>_t` as the sum of [`pair_monomial`] over all `mu ⊆ lambda`,
/// checked to be the single monomial `t^{ht(lambda)}`.
pub fn pair_fundamental(lambda: &QuasiDominantWeight) -> Result<LaurentPolynomial> {
    let mut total = LaurentPolynomial::zero();
    for s in sub_height_sets(lambda) {
        total += &pair_monomial(&height_set_inverse(&s))?;
    }
    let expected = LaurentPolynomial::monomial(lambda.height());
    if total != expected {
        return Err(Error::IdentityFailed {
            subject: format!("<1, Q_{lambda}>"),
            expected: expected.to_string(),
            actual: total.to_string(),
        });
    }
    Ok(total)
}

/// Quasi-weight multiplicities of the character of `V_lambda`: each standard
/// tableau `T` of shape `lambda + 1` contributes one to the quasi-dominant
/// weight with height set `phi(Des(T))`.
pub fn quasi_weight_expansion(lambda: &Weight) -> Result<BTreeMap<QuasiDominantWeight, u64>> {
    weights::check_first_layer_dominant(lambda)?;
    let n = lambda.rank();
    let shape = lambda.to_partition()?;
    let mut out = BTreeMap::new();
    for t in tableaux::syt_enumerate(&shape) {
        let image = tableaux::phi_set(&t.descent_set(), n)?;
        let mu = height_set_inverse(&HeightSet::new(image, n)?);
        *out.entry(mu).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{co, phi_set, phi_weight, subsets};
    use crate::weights::{first_layer_dominant_weights, first_layer_weights, weights_of_irrep};

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec()).unwrap()
    }

    fn qd(coords: &[i64]) -> QuasiDominantWeight {
        QuasiDominantWeight::new(w(coords)).unwrap()
    }

    fn hs(items: &[usize], rank: usize) -> HeightSet {
        HeightSet::new(items.iter().copied().collect(), rank).unwrap()
    }

    fn worked_example() -> QuasiDominantWeight {
        qd(&[0, 2, 0, 1, 0, 0, -1, -1, -1])
    }

    #[test]
    fn quasi_dominance_validation() {
        assert!(QuasiDominantWeight::new(w(&[-1, 1])).is_err());
        assert!(QuasiDominantWeight::new(w(&[2, -2])).is_err());
        assert!(QuasiDominantWeight::new(w(&[0, 1, -1])).is_ok());
    }

    #[test]
    fn local_action_examples() {
        assert_eq!(local_act(1, &w(&[0, 1, -1])).unwrap(), w(&[0, 1, -1]));
        assert_eq!(local_act(2, &w(&[0, 1, -1])).unwrap(), w(&[0, -1, 1]));
        assert_eq!(local_act(1, &w(&[-1, 1])).unwrap(), w(&[1, -1]));
        assert!(local_act(3, &w(&[0, 1, -1])).is_err());
    }

    #[test]
    fn local_orbit_examples() {
        assert_eq!(
            local_orbit(&w(&[0, 0])).unwrap(),
            BTreeSet::from([w(&[0, 0])])
        );
        assert_eq!(
            local_orbit(&w(&[1, -1])).unwrap(),
            BTreeSet::from([w(&[1, -1]), w(&[-1, 1])])
        );
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn local_orbits_match_closure_and_binomial() {
        for n in 1..=5 {
            for lam in quasi_dominant_weights(n) {
                let fast = local_orbit(lam.weight()).unwrap();
                assert_eq!(fast, local_orbit_by_closure(lam.weight()).unwrap());
                assert_eq!(fast.len(), binomial(n + 1, lam.co_length()));
                let top = fast.iter().map(Weight::height).max().unwrap();
                assert_eq!(top, lam.height());
                assert_eq!(fast.iter().filter(|m| m.height() == top).count(), 1);
            }
        }
    }

    #[test]
    fn local_action_is_a_group_action() {
        for n in 1..=5 {
            for mu in first_layer_weights(n) {
                for i in 1..=n {
                    let once = local_act(i, &mu).unwrap();
                    assert_eq!(local_act(i, &once).unwrap(), mu);
                    for j in 1..=n {
                        let ij = local_act(i, &local_act(j, &mu).unwrap()).unwrap();
                        let ji = local_act(j, &local_act(i, &mu).unwrap()).unwrap();
                        if i.abs_diff(j) > 1 {
                            assert_eq!(ij, ji);
                        } else if j == i + 1 {
                            let iji =
                                local_act(i, &local_act(j, &local_act(i, &mu).unwrap()).unwrap())
                                    .unwrap();
                            let jij =
                                local_act(j, &local_act(i, &local_act(j, &mu).unwrap()).unwrap())
                                    .unwrap();
                            assert_eq!(iji, jij, "braid at {mu}, i = {i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn representative_examples() {
        assert_eq!(
            quasi_dominant_representative(&w(&[-1, 1])).unwrap(),
            qd(&[1, -1])
        );
        let member = w(&[0, -1, 2, 0, 1, -1, 0, 0, -1]);
        assert!(local_orbit(worked_example().weight())
            .unwrap()
            .contains(&member));
        assert_eq!(
            quasi_dominant_representative(&member).unwrap(),
            worked_example()
        );
        assert_eq!(
            quasi_dominant_representative(worked_example().weight()).unwrap(),
            worked_example()
        );
    }

    #[test]
    fn canonical_expression_of_worked_example() {
        let expr = canonical_expression(&worked_example());
        assert_eq!(
            expr,
            vec![
                PositiveRoot { i: 2, j: 9 },
                PositiveRoot { i: 2, j: 8 },
                PositiveRoot { i: 4, j: 7 }
            ]
        );
        let sum = expr
            .iter()
            .fold(Weight::zero(8).into_coords(), |mut acc, b| {
                for (a, c) in acc.iter_mut().zip(b.to_weight(8).coords()) {
                    *a += c;
                }
                acc
            });
        assert_eq!(sum, worked_example().weight().coords());
        assert!(canonical_expression(&qd(&[0, 0, 0])).is_empty());
        assert_eq!(
            canonical_expression(&qd(&[1, -1])),
            vec![PositiveRoot { i: 1, j: 2 }]
        );
    }

    #[test]
    fn height_set_examples() {
        assert_eq!(height_set(&worked_example()), hs(&[3, 6, 7], 8));
        assert!(height_set(&qd(&[0, 0, 0, 0])).is_empty());
        assert_eq!(
            height_set(&qd(&[1, 1, 1, 1, -1, -1, -1, -1])),
            hs(&[1, 3, 5, 7], 7)
        );
    }

    #[test]
    fn height_set_inverse_examples() {
        assert_eq!(height_set_inverse(&hs(&[3, 6, 7], 8)), worked_example());
        assert_eq!(height_set_inverse(&hs(&[], 4)), qd(&[0, 0, 0, 0, 0]));
        assert_eq!(
            height_set_inverse(&hs(&[1, 3, 5, 7], 7)),
            qd(&[1, 1, 1, 1, -1, -1, -1, -1])
        );
    }

    #[test]
    fn height_set_bijection() {
        for n in 1..=8 {
            let all = quasi_dominant_weights(n);
            assert_eq!(all.len(), 1 << n);
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for s in subsets(n) {
                let set = HeightSet::new(s, n).unwrap();
                let lam = height_set_inverse(&set);
                assert_eq!(height_set(&lam), set);
                assert_eq!(height_set_inverse(&height_set(&lam)), lam);
                assert_eq!(lam.height(), set.sum());
                let heights: Vec<usize> = canonical_expression(&lam)
                    .iter()
                    .map(|b| b.height())
                    .collect();
                assert!(heights.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn quasi_dominant_weights_are_exactly_the_local_maxima() {
        for n in 1..=5 {
            let from_sets: BTreeSet<_> = quasi_dominant_weights(n)
                .into_iter()
                .map(Weight::from)
                .collect();
            let from_orbits: BTreeSet<_> = first_layer_weights(n)
                .into_iter()
                .filter(|mu| {
                    local_orbit_by_closure(mu)
                        .unwrap()
                        .iter()
                        .all(|nu| nu.height() <= mu.height())
                })
                .collect();
            assert_eq!(from_sets, from_orbits);
        }
    }

    #[test]
    fn commutation_with_compositions() {
        for n in 1..=8 {
            for a in subsets(n) {
                let lhs = phi_weight(&height_set_inverse(
                    &HeightSet::new(phi_set(&a, n).unwrap(), n).unwrap(),
                ));
                assert_eq!(lhs, co(&a, n).unwrap(), "A = {a:?}");
            }
        }
    }

    #[test]
    fn quasisym_functions_small() {
        let zero = qd(&[0, 0]);
        assert_eq!(monomial_quasisym(&zero), WeightFunction::basis(w(&[0, 0])));
        assert_eq!(
            fundamental_quasisym(&zero),
            WeightFunction::basis(w(&[0, 0]))
        );
        let m = monomial_quasisym(&qd(&[1, -1]));
        assert_eq!(m.support_size(), 2);
        let q = fundamental_quasisym(&qd(&[1, -1]));
        let expected: WeightFunction = [w(&[0, 0]), w(&[1, -1]), w(&[-1, 1])]
            .into_iter()
            .map(|mu| (mu, LaurentPolynomial::one()))
            .collect();
        assert_eq!(q, expected);
        for lam in quasi_dominant_weights(4) {
            assert_eq!(
                monomial_quasisym(&lam).support_size(),
                binomial(5, lam.co_length())
            );
            assert_eq!(sub_height_sets(&lam).count(), 1 << lam.co_length());
        }
    }

    #[test]
    fn pairings_examples() {
        let t = |e| LaurentPolynomial::monomial(e);
        assert!(pair_monomial(&qd(&[0, 0, 0])).unwrap().is_one());
        assert_eq!(pair_monomial(&qd(&[1, -1])).unwrap(), &t(1) - &t(0));
        let expected = LaurentPolynomial::one_minus_t_set(&[-7, -6, -3]).shift(16);
        assert_eq!(pair_monomial(&worked_example()).unwrap(), expected);
        assert!(pair_fundamental(&qd(&[0, 0])).unwrap().is_one());
        assert_eq!(pair_fundamental(&qd(&[1, -1])).unwrap(), t(1));
        assert_eq!(pair_fundamental(&worked_example()).unwrap(), t(16));
    }

    #[test]
    fn pairings_exhaustive_small_rank() {
        for n in 1..=5 {
            for lam in quasi_dominant_weights(n) {
                let m = pair_monomial(&lam).unwrap();
                let via_inner = crate::fourier::inner_with_one(&monomial_quasisym(&lam)).unwrap();
                assert_eq!(m, via_inner);
                let q = pair_fundamental(&lam).unwrap();
                assert_eq!(q.as_monomial().map(|(_, e)| e), Some(lam.height()));
                // telescoping form: sum over subsets S of (t^S - 1)
                let telescoped: LaurentPolynomial = sub_height_sets(&lam)
                    .map(|s| {
                        let exps: Vec<i64> = s.elements().iter().map(|&x| x as i64).collect();
                        LaurentPolynomial::t_set_minus_one(&exps)
                    })
                    .sum();
                assert_eq!(telescoped, q);
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let exp = quasi_weight_expansion(&Weight::theta(2)).unwrap();
        assert_eq!(
            exp,
            BTreeMap::from([(qd(&[1, 0, -1]), 1), (qd(&[0, 1, -1]), 1)])
        );
        let zero = quasi_weight_expansion(&Weight::zero(3)).unwrap();
        assert_eq!(zero, BTreeMap::from([(qd(&[0, 0, 0, 0]), 1)]));
        let collide = quasi_weight_expansion(&w(&[3, 2, 0, -1, -1, -1, -1, -1])).unwrap();
        assert!(collide.values().any(|&m| m >= 2));
        assert!(quasi_weight_expansion(&w(&[-1, 1])).is_err());
    }

    #[test]
    fn expansion_reconstructs_character() {
        for n in 1..=5 {
            for lam in first_layer_dominant_weights(n) {
                let expansion = quasi_weight_expansion(&lam).unwrap();
                let total: u64 = expansion.values().sum();
                assert_eq!(
                    total as u128,
                    lam.to_partition().unwrap().hook_length_count()
                );
                let mut rebuilt = WeightFunction::new();
                for (mu, &q) in &expansion {
                    rebuilt.add_scaled(
                        &fundamental_quasisym(mu),
                        &LaurentPolynomial::from(q as i64),
                    );
                }
                let chi: WeightFunction = weights_of_irrep(&lam)
                    .unwrap()
                    .into_iter()
                    .map(|(mu, m)| (mu, LaurentPolynomial::from(m as i64)))
                    .collect();
                assert_eq!(rebuilt, chi, "lambda = {lam}");
            }
        }
    }

    #[test]
    fn maximal_quasi_dominant_weights_are_quasi_weights() {
        for n in 1..=5 {
            for lam in first_layer_dominant_weights(n) {
                let qwt = quasi_weight_expansion(&lam).unwrap();
                let candidates: Vec<QuasiDominantWeight> = weights_of_irrep(&lam)
                    .unwrap()
                    .into_iter()
                    .filter_map(|(mu, _)| QuasiDominantWeight::new(mu).ok())
                    .collect();
                let sets: Vec<IndexSet> = candidates
                    .iter()
                    .map(|c| height_set(c).elements().clone())
                    .collect();
                for (c, s) in candidates.iter().zip(&sets) {
                    let maximal = !sets.iter().any(|other| other != s && s.is_subset(other));
                    if maximal {
                        assert!(qwt.contains_key(c), "{c} missing from qwt({lam})");
                    }
                }
            }
        }
    }
}
