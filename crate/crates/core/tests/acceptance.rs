//! Acceptance criteria, one test per criterion. Each prints a PASS/FAIL line
//! (visible with `--nocapture`) and panics on failure.

use std::time::Instant;

use genexp::exponents::{
    exponents_by_signed_count, exponents_by_tableaux, full_report, Method, DEFAULT_HP_CAP,
};
use genexp::fourier::{c_closed_form, solve_system};
use genexp::quasisym::{
    canonical_expression, height_set, height_set_inverse, pair_fundamental, pair_monomial,
    quasi_dominant_weights, HeightSet, QuasiDominantWeight,
};
use genexp::tableaux::{
    co, kostka_number, partitions, phi_set, phi_weight, subsets, syt_enumerate, StandardTableau,
};
use genexp::weights::first_layer_dominant_weights;
use genexp::{LaurentPolynomial, Weight};
use num_bigint::BigInt;

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        let table = solve_system(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(
            table.len() == genexp::weights::first_layer_weights(n).len(),
            || format!("n = {n}: table size"),
        )?;
        for (mu, value) in &table {
            let closed = c_closed_form(mu).map_err(|e| e.to_string())?;
            ensure(*value == closed, || format!("c_{mu}: {value} vs {closed}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} weights, n = 1..6"))
}

fn criterion_2() -> Outcome {
    for n in 1..=8 {
        let expected = LaurentPolynomial::from_terms((1..=n as i64).map(|e| (e, 1)));
        let got = exponents_by_tableaux(&Weight::theta(n)).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("n = {n}: {got}"))?;
    }
    Ok("n = 1..8".into())
}

fn criterion_3() -> Outcome {
    let combinatorial_methods = [
        Method::Weights,
        Method::Signed,
        Method::Quasiweights,
        Method::Tableaux,
        Method::Charge,
    ];
    let mut count = 0;
    for n in 1..=6 {
        for lam in first_layer_dominant_weights(n) {
            let methods: Vec<Method> = if n <= DEFAULT_HP_CAP {
                Method::ALL.to_vec()
            } else {
                combinatorial_methods.to_vec()
            };
            let report =
                full_report(&lam, &methods, DEFAULT_HP_CAP).map_err(|e| format!("{lam}: {e}"))?;
            ensure(report.agreement, || {
                format!("{lam}: {}", report.disagreement.unwrap())
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} weights, n <= 6, hp at n <= {DEFAULT_HP_CAP}"
    ))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        let qdw = quasi_dominant_weights(n);
        ensure(qdw.len() == 1 << n, || {
            format!("n = {n}: {} quasi-dominant weights", qdw.len())
        })?;
        for lam in qdw {
            pair_monomial(&lam).map_err(|e| e.to_string())?;
            pair_fundamental(&lam).map_err(|e| e.to_string())?;
            count += 1;
        }
    }
    Ok(format!("{count} quasi-dominant weights, n <= 7"))
}

fn criterion_5() -> Outcome {
    for n in 1..=8 {
        for a in subsets(n) {
            let set = HeightSet::new(a.clone(), n).map_err(|e| e.to_string())?;
            ensure(height_set(&height_set_inverse(&set)) == set, || {
                format!("round trip fails at {a:?}")
            })?;
            let image = HeightSet::new(phi_set(&a, n).map_err(|e| e.to_string())?, n)
                .map_err(|e| e.to_string())?;
            let lhs = phi_weight(&height_set_inverse(&image));
            let rhs = co(&a, n).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("A = {a:?}: {lhs} vs {rhs}"))?;
        }
    }
    Ok("all subsets of [n], n <= 8".into())
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for m in 1..=8 {
        for shape in partitions(m) {
            for t in syt_enumerate(&shape) {
                ensure(t.height() == t.charge(), || {
                    format!("{t}: {} vs {}", t.height(), t.charge())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tableaux, m <= 8"))
}

fn criterion_7() -> Outcome {
    let lam = QuasiDominantWeight::new(Weight::new(vec![0, 2, 0, 1, 0, 0, -1, -1, -1]).unwrap())
        .map_err(|e| e.to_string())?;
    let roots: Vec<String> = canonical_expression(&lam)
        .iter()
        .map(|r| r.to_string())
        .collect();
    ensure(roots == ["e2-e9", "e2-e8", "e4-e7"], || {
        format!("canonical expression {roots:?}")
    })?;
    let ht: Vec<usize> = height_set(&lam).elements().iter().copied().collect();
    ensure(ht == [3, 6, 7], || format!("Ht = {ht:?}"))?;
    let t1 = StandardTableau::new(vec![vec![1, 2, 6, 8], vec![3, 4, 7], vec![5]])
        .map_err(|e| e.to_string())?;
    let t2 = StandardTableau::new(vec![vec![1, 2, 4, 6], vec![3, 7, 8], vec![5]])
        .map_err(|e| e.to_string())?;
    for t in [&t1, &t2] {
        let des: Vec<usize> = t.descent_set().into_iter().collect();
        ensure(des == [2, 4, 6], || format!("Des({t}) = {des:?}"))?;
        ensure(t.height() == 16 && t.charge() == 16, || {
            format!("{t}: ht {}, ch {}", t.height(), t.charge())
        })?;
    }
    Ok("canonical expression, Ht = {3,6,7}, Des = {2,4,6}, ht = ch = 16".into())
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for lam in first_layer_dominant_weights(n) {
            let shape = lam.to_partition().map_err(|e| e.to_string())?;
            let kostka = kostka_number(&shape, &vec![1; n + 1]).map_err(|e| e.to_string())?;
            ensure(kostka as usize == syt_enumerate(&shape).len(), || {
                format!("{lam}: Kostka {kostka}")
            })?;
            let signed = exponents_by_signed_count(&lam).map_err(|e| e.to_string())?;
            ensure(signed.has_nonnegative_coefficients(), || {
                format!("{lam}: signed {signed}")
            })?;
            ensure(signed.evaluate_at_one() == BigInt::from(kostka), || {
                format!("{lam}: E(1) = {}", signed.evaluate_at_one())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} weights, n <= 6"))
}

fn report(name: &str, run: fn() -> Outcome) {
    let start = Instant::now();
    let outcome = run();
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("PASS criterion {name} ({detail}) [{secs:.2}s]"),
        Err(why) => {
            println!("FAIL criterion {name}: {why} [{secs:.2}s]");
            panic!("criterion {name} failed: {why}");
        }
    }
}

#[test]
fn criterion_1_fourier_closed_form_equals_solver() {
    report("1 fourier closed form equals solver", criterion_1);
}

#[test]
fn criterion_2_adjoint_gives_classical_exponents() {
    report("2 adjoint gives classical exponents", criterion_2);
}

#[test]
fn criterion_3_all_methods_agree() {
    report("3 all methods agree", criterion_3);
}

#[test]
fn criterion_4_monomial_and_fundamental_pairings() {
    report("4 monomial and fundamental pairings", criterion_4);
}

#[test]
fn criterion_5_height_set_bijection_and_commutation() {
    report("5 height-set bijection and commutation", criterion_5);
}

#[test]
fn criterion_6_tableau_height_equals_charge() {
    report("6 tableau height equals charge", criterion_6);
}

#[test]
fn criterion_7_worked_examples() {
    report("7 worked examples", criterion_7);
}

#[test]
fn criterion_8_normalization_and_nonnegativity() {
    report("8 normalization and non-negativity", criterion_8);
}
