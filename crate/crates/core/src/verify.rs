//! The invariant suite run by `genexp verify`: every identity checked
//! exhaustively at one rank, reporting the first counterexample per check.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{full_report, Method};
use crate::fourier::{c_closed_form, solve_system_capped};
use crate::quasisym::{
    height_set, height_set_inverse, pair_fundamental, pair_monomial, quasi_dominant_weights,
    HeightSet,
};
use crate::tableaux::{co, partitions, phi_set, phi_weight, subsets, syt_enumerate};
use crate::weights::first_layer_dominant_weights;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    FourierSolver,
    HeightSetBijection,
    Commutation,
    Pairings,
    HeightCharge,
    Agreement,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::FourierSolver,
        Check::HeightSetBijection,
        Check::Commutation,
        Check::Pairings,
        Check::HeightCharge,
        Check::Agreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::FourierSolver => "fourier-solver",
            Check::HeightSetBijection => "height-set-bijection",
            Check::Commutation => "commutation",
            Check::Pairings => "pairings",
            Check::HeightCharge => "height-charge",
            Check::Agreement => "agreement",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown check".to_string(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub rank: usize,
    pub skip_checks: Vec<Check>,
    /// Methods left out of the agreement check.
    pub skip_methods: Vec<Method>,
    pub hp_cap: usize,
    pub solver_cap: usize,
}

impl VerifyOptions {
    pub fn new(rank: usize) -> Self {
        VerifyOptions {
            rank,
            skip_checks: Vec::new(),
            skip_methods: Vec::new(),
            hp_cap: crate::exponents::DEFAULT_HP_CAP,
            solver_cap: crate::fourier::DEFAULT_SOLVER_RANK_CAP,
        }
    }
}

struct Tally {
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; returns false once a counterexample is known.
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
        self.counterexample.is_none()
    }

    fn fail(&mut self, msg: String) {
        self.counterexample.get_or_insert(msg);
    }
}

fn fourier_solver(n: usize, cap: usize, tally: &mut Tally) {
    match solve_system_capped(n, cap) {
        Err(e) => tally.fail(e.to_string()),
        Ok(table) => {
            for (mu, value) in &table {
                let closed = c_closed_form(mu).expect("solver returns first-layer weights");
                if !tally.record(*value == closed, || {
                    format!("c_{mu}: solver {value}, closed form {closed}")
                }) {
                    return;
                }
            }
        }
    }
}

fn height_set_bijection(n: usize, tally: &mut Tally) {
    for a in subsets(n) {
        let set = HeightSet::new(a.clone(), n).expect("subset of [n]");
        let back = height_set(&height_set_inverse(&set));
        if !tally.record(back == set, || {
            format!("Ht(Ht^-1({a:?})) = {:?}", back.elements())
        }) {
            return;
        }
    }
}

fn commutation(n: usize, tally: &mut Tally) {
    for a in subsets(n) {
        let lhs = phi_set(&a, n)
            .and_then(|b| HeightSet::new(b, n))
            .map(|s| phi_weight(&height_set_inverse(&s)));
        let rhs = co(&a, n);
        let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
        if !tally.record(ok, || format!("A = {a:?}: {lhs:?} vs {rhs:?}")) {
            return;
        }
    }
}

fn pairings(n: usize, tally: &mut Tally) {
    for lam in quasi_dominant_weights(n) {
        let result = pair_monomial(&lam).and_then(|_| pair_fundamental(&lam));
        if !tally.record(result.is_ok(), || result.unwrap_err().to_string()) {
            return;
        }
    }
}

fn height_charge(n: usize, tally: &mut Tally) {
    for shape in partitions(n + 1) {
        for t in syt_enumerate(&shape) {
            let (h, c) = (t.height(), t.charge());
            if !tally.record(h == c, || format!("T = {t}: ht {h}, ch {c}")) {
                return;
            }
        }
    }
}

fn agreement(n: usize, methods: &[Method], hp_cap: usize, tally: &mut Tally) {
    for lam in first_layer_dominant_weights(n) {
        match full_report(&lam, methods, hp_cap) {
            Err(e) => {
                tally.record(false, || format!("lambda = {lam}: {e}"));
                return;
            }
            Ok(report) => {
                let describe = || match &report.disagreement {
                    Some(d) => format!("lambda = {lam}: {d}"),
                    None => format!("lambda = {lam}"),
                };
                if !tally.record(report.agreement, describe) {
                    return;
                }
            }
        }
    }
}

/// Runs every check not skipped. The `hp` method joins the agreement check
/// only when the rank is within `hp_cap`.
pub fn run(options: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let n = options.rank;
    if n == 0 {
        return Err(Error::RankTooSmall(1));
    }
    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| !options.skip_methods.contains(m))
        .filter(|m| *m != Method::Hp || n <= options.hp_cap)
        .collect();
    let mut out = Vec::new();
    for check in Check::ALL {
        if options.skip_checks.contains(&check) {
            continue;
        }
        let start = Instant::now();
        let mut tally = Tally::new();
        match check {
            Check::FourierSolver => fourier_solver(n, options.solver_cap, &mut tally),
            Check::HeightSetBijection => height_set_bijection(n, &mut tally),
            Check::Commutation => commutation(n, &mut tally),
            Check::Pairings => pairings(n, &mut tally),
            Check::HeightCharge => height_charge(n, &mut tally),
            Check::Agreement => agreement(n, &methods, options.hp_cap, &mut tally),
        }
        out.push(CheckOutcome {
            check,
            passed: tally.counterexample.is_none(),
            cases: tally.cases,
            counterexample: tally.counterexample,
            millis: start.elapsed().as_millis() as u64,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_pass() {
        for n in 1..=3 {
            let outcomes = run(&VerifyOptions::new(n)).unwrap();
            assert_eq!(outcomes.len(), Check::ALL.len());
            for o in outcomes {
                assert!(o.passed, "n = {n}: {o:?}");
                assert!(o.cases > 0);
            }
        }
    }

    #[test]
    fn skips_are_honoured() {
        let mut opts = VerifyOptions::new(2);
        opts.skip_checks = vec![Check::FourierSolver, Check::Pairings];
        let names: Vec<Check> = run(&opts).unwrap().into_iter().map(|o| o.check).collect();
        assert!(!names.contains(&Check::FourierSolver));
        assert!(!names.contains(&Check::Pairings));
        assert!(run(&VerifyOptions::new(0)).is_err());
    }

    #[test]
    fn solver_cap_is_reported_as_failure() {
        let mut opts = VerifyOptions::new(3);
        opts.solver_cap = 2;
        let outcomes = run(&opts).unwrap();
        assert!(!outcomes[0].passed);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }
}
