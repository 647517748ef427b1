use std::collections::BTreeMap;

use genexp::verify::CheckOutcome;
use genexp::{LaurentPolynomial, StandardTableau, Weight};
use serde::{Deserialize, Serialize};

/// The single JSON envelope shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: Params,
    pub methods: Vec<String>,
    pub result: Payload,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verify: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub skip: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hp_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Exponents {
        lambda: Weight,
        polynomial: Option<LaurentPolynomial>,
        per_method: BTreeMap<String, LaurentPolynomial>,
        agreement: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        disagreement: Option<String>,
        exponents: Vec<i64>,
        zero_weight_dimension: u64,
        #[serde(skip_serializing_if = "Vec::is_empty", default)]
        skipped: Vec<String>,
    },
    Fourier {
        weight: Weight,
        polynomial: LaurentPolynomial,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        solver: Option<LaurentPolynomial>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        solver_agrees: Option<bool>,
    },
    Tableaux {
        shape: Vec<usize>,
        rows: Vec<TableauRow>,
    },
    Verify {
        passed: bool,
        checks: Vec<CheckOutcome>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRow {
    pub tableau: StandardTableau,
    pub descents: Vec<usize>,
    pub non_descents: Vec<usize>,
    pub height: i64,
    pub reading_word: Vec<usize>,
    pub charge: i64,
}

impl TableauRow {
    pub fn new(tableau: StandardTableau) -> Self {
        TableauRow {
            descents: tableau.descent_set().into_iter().collect(),
            non_descents: tableau.non_descent_set().into_iter().collect(),
            height: tableau.height(),
            reading_word: tableau.reading_word(),
            charge: tableau.charge(),
            tableau,
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl OutputRecord {
    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        match &self.result {
            Payload::Exponents {
                polynomial,
                per_method,
                agreement,
                disagreement,
                exponents,
                skipped,
                ..
            } => {
                if let Some(p) = polynomial {
                    out.push(p.to_string());
                }
                if per_method.len() > 1 || polynomial.is_none() {
                    for (m, p) in per_method {
                        out.push(format!("{m}: {p}"));
                    }
                    for m in skipped {
                        out.push(format!("{m}: skipped"));
                    }
                    match disagreement {
                        None => out.push("agreement: ok".into()),
                        Some(d) => out.push(format!("agreement: FAILED ({d})")),
                    }
                }
                if *agreement {
                    out.push(format!("exponents: {}", join(exponents, " ")));
                }
            }
            Payload::Fourier {
                polynomial,
                solver,
                solver_agrees,
                ..
            } => {
                out.push(polynomial.to_string());
                if let (Some(s), Some(ok)) = (solver, solver_agrees) {
                    out.push(format!(
                        "solver: {s} ({})",
                        if *ok { "agrees" } else { "DIFFERS" }
                    ));
                }
            }
            Payload::Tableaux { rows, .. } => {
                for r in rows {
                    out.push(format!(
                        "{}  Des {{{}}}  coDes {{{}}}  ht {}  word {}  ch {}",
                        r.tableau,
                        join(&r.descents, ","),
                        join(&r.non_descents, ","),
                        r.height,
                        join(&r.reading_word, ","),
                        r.charge
                    ));
                }
            }
            Payload::Verify { checks, passed } => {
                for c in checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let mut line = format!(
                        "{status} {:<22} {:>7} cases {:>7} ms",
                        c.check.name(),
                        c.cases,
                        c.millis
                    );
                    if let Some(ce) = &c.counterexample {
                        line.push_str(&format!("  first counterexample: {ce}"));
                    }
                    out.push(line);
                }
                out.push(if *passed {
                    "all checks passed".into()
                } else {
                    "verification FAILED".into()
                });
            }
        }
        out.join("\n")
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.result {
            Payload::Exponents { polynomial, .. } => {
                w.write_record(["exponent", "coefficient"])?;
                if let Some(p) = polynomial {
                    write_polynomial(&mut w, p)?;
                }
            }
            Payload::Fourier { polynomial, .. } => {
                w.write_record(["exponent", "coefficient"])?;
                write_polynomial(&mut w, polynomial)?;
            }
            Payload::Tableaux { rows, .. } => {
                w.write_record([
                    "tableau",
                    "descents",
                    "non_descents",
                    "height",
                    "reading_word",
                    "charge",
                ])?;
                for r in rows {
                    w.write_record([
                        r.tableau.to_string(),
                        join(&r.descents, " "),
                        join(&r.non_descents, " "),
                        r.height.to_string(),
                        join(&r.reading_word, " "),
                        r.charge.to_string(),
                    ])?;
                }
            }
            Payload::Verify { checks, .. } => {
                w.write_record(["check", "passed", "cases", "millis", "counterexample"])?;
                for c in checks {
                    w.write_record([
                        c.check.name().to_string(),
                        c.passed.to_string(),
                        c.cases.to_string(),
                        c.millis.to_string(),
                        c.counterexample.clone().unwrap_or_default(),
                    ])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn write_polynomial(w: &mut csv::Writer<Vec<u8>>, p: &LaurentPolynomial) -> Result<(), csv::Error> {
    for (e, c) in p.terms() {
        w.write_record([e.to_string(), c.to_string()])?;
    }
    Ok(())
}
