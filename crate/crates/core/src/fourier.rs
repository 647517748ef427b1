//! Fourier coefficients `c_mu(t) = <1, e^mu>_t` of the degenerate Cherednik
//! kernel on first-layer weights.
//!
//! Two independent routes are provided: the closed form
//! `t^{ht(mu)} (1 - t^{a_mu})` and [`solve_system`], which reconstructs every
//! coefficient from the defining linear system alone.

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::weights::{first_layer_weights, Weight};

/// Default largest rank accepted by [`solve_system`].
pub const DEFAULT_SOLVER_RANK_CAP: usize = 7;

/// A finitely supported function on the root lattice with Laurent
/// polynomial values, i.e. an element `sum f(mu) e^mu` of the group algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightFunction {
    support: BTreeMap<Weight, LaurentPolynomial>,
}

impl WeightFunction {
    pub fn new() -> Self {
        Self::default()
    }

    /// `e^mu`
    pub fn basis(mu: Weight) -> Self {
        let mut f = Self::new();
        f.add_term(mu, LaurentPolynomial::one());
        f
    }

    pub fn add_term(&mut self, mu: Weight, coeff: LaurentPolynomial) {
        if let Some(rank) = self.rank() {
            assert_eq!(rank, mu.rank(), "mixed ranks in a weight function");
        }
        let entry = self.support.entry(mu).or_default();
        *entry += &coeff;
        if entry.is_zero() {
            self.support.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &WeightFunction, factor: &LaurentPolynomial) {
        for (mu, c) in &other.support {
            self.add_term(mu.clone(), c * factor);
        }
    }

    pub fn get(&self, mu: &Weight) -> LaurentPolynomial {
        self.support.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &LaurentPolynomial)> {
        self.support.iter()
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn rank(&self) -> Option<usize> {
        self.support.keys().next().map(Weight::rank)
    }
}

impl Add<&WeightFunction> for &WeightFunction {
    type Output = WeightFunction;
    fn add(self, rhs: &WeightFunction) -> WeightFunction {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPolynomial::one());
        out
    }
}

impl FromIterator<(Weight, LaurentPolynomial)> for WeightFunction {
    fn from_iter<I: IntoIterator<Item = (Weight, LaurentPolynomial)>>(iter: I) -> Self {
        let mut f = Self::new();
        for (mu, c) in iter {
            f.add_term(mu, c);
        }
        f
    }
}

/// `c_lambda(t) = t^{ht(lambda)} (1 - t^{a_lambda})`.
pub fn c_closed_form(lambda: &Weight) -> Result<LaurentPolynomial> {
    let aggregate = lambda.aggregate_vector()?;
    Ok(LaurentPolynomial::one_minus_t_set(aggregate.entries()).shift(lambda.height()))
}

/// `<1, f>_t = sum_mu f(mu) c_mu(t)` for `f` supported on first-layer weights.
pub fn inner_with_one(f: &WeightFunction) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for (mu, coeff) in f.iter() {
        out += &(coeff * &c_closed_form(mu)?);
    }
    Ok(out)
}

/// `a X + b` in one unknown `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Affine {
    slope: LaurentPolynomial,
    offset: LaurentPolynomial,
}

impl Affine {
    fn unknown() -> Self {
        Self {
            slope: LaurentPolynomial::one(),
            offset: LaurentPolynomial::zero(),
        }
    }

    fn constant(offset: LaurentPolynomial) -> Self {
        Self {
            slope: LaurentPolynomial::zero(),
            offset,
        }
    }

    fn substitute(&self, x: &LaurentPolynomial) -> LaurentPolynomial {
        &(&self.slope * x) + &self.offset
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(self, rhs: Affine) -> Affine {
        Affine {
            slope: self.slope + rhs.slope,
            offset: self.offset + rhs.offset,
        }
    }
}

impl Mul<&LaurentPolynomial> for &Affine {
    type Output = Affine;
    fn mul(self, rhs: &LaurentPolynomial) -> Affine {
        Affine {
            slope: &self.slope * rhs,
            offset: &self.offset * rhs,
        }
    }
}

/// Solves the defining system for `c_mu` on all first-layer weights of the
/// given rank without using the closed form:
///
/// - `y_0 = 1`;
/// - for `(mu, alpha_i^vee) > 0`:
///   `y_{s_i mu} - t^{-1} y_mu = -y_{mu - alpha_i} + t^{-1} y_{s_i mu + alpha_i}`;
/// - `y_{s_theta mu} = 0` for dominant `mu != 0`.
///
/// Orbits are processed in increasing norm. Inside an orbit the dominant
/// value is an unknown `X`, pushed breadth-first through the first equation
/// (every right-hand side weight is strictly shorter, hence already solved,
/// except when the pairing is 1 and the equation collapses to
/// `y_{s_i mu} = t^{-1} y_mu`), and `X` is then fixed by the `s_theta`
/// equation. Slopes are always `t^{-l}`, so fixing `X` is exact monomial
/// division. Any equation met twice is re-checked; a mismatch is reported as
/// [`Error::Inconsistent`].
pub fn solve_system(rank: usize) -> Result<BTreeMap<Weight, LaurentPolynomial>> {
    solve_system_capped(rank, DEFAULT_SOLVER_RANK_CAP)
}

pub fn solve_system_capped(rank: usize, cap: usize) -> Result<BTreeMap<Weight, LaurentPolynomial>> {
    if rank == 0 {
        return Err(Error::RankTooSmall(1));
    }
    if rank > cap {
        return Err(Error::RankAboveCap { rank, cap });
    }
    let mut dominant: Vec<Weight> = first_layer_weights(rank)
        .into_iter()
        .filter(Weight::is_dominant)
        .collect();
    dominant.sort_by_key(|w| (w.norm_squared(), w.clone()));

    let t_inv = LaurentPolynomial::monomial(-1);
    let mut solved: BTreeMap<Weight, LaurentPolynomial> = BTreeMap::new();

    for top in dominant {
        if top.is_zero() {
            solved.insert(top, LaurentPolynomial::one());
            continue;
        }
        let mut orbit: BTreeMap<Weight, Affine> = BTreeMap::new();
        orbit.insert(top.clone(), Affine::unknown());
        let mut queue = VecDeque::from([top.clone()]);
        while let Some(mu) = queue.pop_front() {
            let y_mu = orbit[&mu].clone();
            for i in 1..=rank {
                let k = mu.pairing(i);
                if k <= 0 {
                    continue;
                }
                let reflected = mu.simple_reflect(i)?;
                let value = if k == 1 {
                    &y_mu * &t_inv
                } else {
                    let lower = lookup(&solved, &mu.minus_simple_root(i)?)?;
                    let upper = lookup(&solved, &reflected.plus_simple_root(i)?)?;
                    let known = &(&upper * &t_inv) - &lower;
                    &y_mu * &t_inv + Affine::constant(known)
                };
                match orbit.get(&reflected) {
                    Some(existing) if *existing != value => {
                        return Err(Error::Inconsistent {
                            weight: reflected,
                            detail: format!(
                                "paths disagree: ({}) X + ({}) vs ({}) X + ({})",
                                existing.slope, existing.offset, value.slope, value.offset
                            ),
                        });
                    }
                    Some(_) => {}
                    None => {
                        orbit.insert(reflected.clone(), value);
                        queue.push_back(reflected);
                    }
                }
            }
        }

        let pin = &orbit[&top.theta_reflect()];
        let x = (-&pin.offset)
            .div_unit_monomial(&pin.slope)
            .ok_or_else(|| Error::Inconsistent {
                weight: top.theta_reflect(),
                detail: format!("coefficient of X is not a unit monomial: {}", pin.slope),
            })?;
        for (mu, affine) in orbit {
            solved.insert(mu, affine.substitute(&x));
        }
    }
    Ok(solved)
}

fn lookup(solved: &BTreeMap<Weight, LaurentPolynomial>, mu: &Weight) -> Result<LaurentPolynomial> {
    solved.get(mu).cloned().ok_or_else(|| Error::Inconsistent {
        weight: mu.clone(),
        detail: "needed before it was solved".to_string(),
    })
}

/// Checks that `coeff` satisfies every equation of the defining system on
/// the first-layer weights of `rank`. Returns the first violated equation.
pub fn check_system<F>(rank: usize, mut coeff: F) -> Result<()>
where
    F: FnMut(&Weight) -> LaurentPolynomial,
{
    let t_inv = LaurentPolynomial::monomial(-1);
    let zero = Weight::zero(rank);
    if !coeff(&zero).is_one() {
        return Err(Error::IdentityFailed {
            subject: format!("y at {zero}"),
            expected: "1".into(),
            actual: coeff(&zero).to_string(),
        });
    }
    for mu in first_layer_weights(rank) {
        if mu.is_dominant() && !mu.is_zero() {
            let v = coeff(&mu.theta_reflect());
            if !v.is_zero() {
                return Err(Error::IdentityFailed {
                    subject: format!("y at s_theta {mu}"),
                    expected: "0".into(),
                    actual: v.to_string(),
                });
            }
        }
        for i in 1..=rank {
            if mu.pairing(i) <= 0 {
                continue;
            }
            let s = mu.simple_reflect(i)?;
            let lhs = &coeff(&s) - &(&coeff(&mu) * &t_inv);
            let rhs =
                &(&coeff(&s.plus_simple_root(i)?) * &t_inv) - &coeff(&mu.minus_simple_root(i)?);
            if lhs != rhs {
                return Err(Error::IdentityFailed {
                    subject: format!("reflection equation for {mu}, i = {i}"),
                    expected: rhs.to_string(),
                    actual: lhs.to_string(),
                });
            }
        }
    }
    Ok(())
}
