//! `genexp`: compute, list and cross-check generalized exponents.
//!
//! Exit codes: 0 success, 1 mathematical disagreement or failed
//! verification, 2 usage error.

mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use genexp::exponents::{full_report, Method, DEFAULT_HP_CAP};
use genexp::fourier::{c_closed_form, solve_system};
use genexp::tableaux::syt_enumerate;
use genexp::verify::{self, Check, VerifyOptions};
use genexp::{Error, Partition, Weight};

use output::{OutputRecord, Params, Payload, TableauRow};

#[derive(Parser, Debug)]
#[command(
    name = "genexp",
    version,
    about = "Generalized exponents of first-layer type A representations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest rank for the `hp` alternating-sum oracle.
    #[arg(long, env = "GENEXP_HP_CAP", default_value_t = DEFAULT_HP_CAP, global = true)]
    hp_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Weights,
    Signed,
    Quasiweights,
    Tableaux,
    Charge,
    Hp,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// E(V_lambda) from a partition of n+1 ("4,3,1") or a first-layer dominant weight ("1,0,-1").
    Exponents {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Tableaux)]
        method: MethodArg,
        /// Rank; must match the input when given.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Fourier coefficient c_lambda(t) of the kernel at a first-layer weight.
    Fourier {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// Also solve the defining system at this rank and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Standard tableaux of a shape with their descent data, height and charge.
    Syt { partition: String },
    /// Run the full invariant suite at rank n.
    Verify {
        #[arg(long)]
        n: usize,
        /// A method (e.g. `hp`) or a check name to leave out; repeatable.
        #[arg(long)]
        skip: Vec<String>,
    },
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent { .. } | Error::IdentityFailed { .. } => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_list(input: &str) -> Result<Vec<i64>, Failure> {
    let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')');
    trimmed
        .split(',')
        .map(|s| {
            s.trim().parse::<i64>().map_err(|_| {
                Failure::Usage(format!("cannot parse {input:?} as a list of integers"))
            })
        })
        .collect()
}

/// All-positive input is a partition of n+1, anything else a weight.
fn parse_lambda(input: &str, n: Option<usize>) -> Result<Weight, Failure> {
    let values = parse_list(input)?;
    let lambda = if values.iter().all(|&v| v > 0) {
        let parts: Vec<usize> = values.iter().map(|&v| v as usize).collect();
        let partition = Partition::new(parts)?;
        let rank = partition.size() - 1;
        if let Some(n) = n.filter(|&n| n != rank) {
            return Err(Failure::Usage(format!(
                "partition of {} has rank {rank}, not {n}",
                partition.size()
            )));
        }
        if rank == 0 {
            return Err(Error::RankTooSmall(1).into());
        }
        Weight::from_partition(&partition, rank)?
    } else {
        let w = Weight::new(values)?;
        if let Some(n) = n.filter(|&n| n != w.rank()) {
            return Err(Failure::Usage(format!(
                "weight {w} has rank {}, not {n}",
                w.rank()
            )));
        }
        w
    };
    if !lambda.is_first_layer() {
        return Err(Error::NotFirstLayer(lambda).into());
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda).into());
    }
    Ok(lambda)
}

fn cmd_exponents(
    input: &str,
    method: MethodArg,
    n: Option<usize>,
    hp_cap: usize,
) -> Result<(OutputRecord, bool), Failure> {
    let lambda = parse_lambda(input, n)?;
    let rank = lambda.rank();
    let (methods, skipped): (Vec<Method>, Vec<String>) = match method {
        MethodArg::All if rank > hp_cap => (
            Method::ALL
                .into_iter()
                .filter(|&m| m != Method::Hp)
                .collect(),
            vec![Method::Hp.name().to_string()],
        ),
        MethodArg::All => (Method::ALL.to_vec(), vec![]),
        single => {
            let name = single
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            (vec![name.parse::<Method>()?], vec![])
        }
    };
    let report = full_report(&lambda, &methods, hp_cap)?;
    let ok = report.agreement;
    let record = OutputRecord {
        command: "exponents".into(),
        params: Params {
            input: Some(input.to_string()),
            rank: Some(rank),
            method: Some(format!("{method:?}").to_lowercase()),
            hp_cap: Some(hp_cap),
            ..Params::default()
        },
        methods: methods.iter().map(|m| m.name().to_string()).collect(),
        result: Payload::Exponents {
            polynomial: report.polynomial().cloned(),
            per_method: report
                .polynomials
                .iter()
                .map(|(m, p)| (m.name().to_string(), p.clone()))
                .collect::<BTreeMap<_, _>>(),
            agreement: report.agreement,
            disagreement: report.disagreement.map(|d| d.to_string()),
            exponents: report.exponents,
            zero_weight_dimension: report.zero_weight_dimension,
            lambda,
            skipped,
        },
        elapsed_ms: 0,
    };
    Ok((record, ok))
}

fn cmd_fourier(input: &str, check: bool) -> Result<(OutputRecord, bool), Failure> {
    let weight = Weight::new(parse_list(input)?)?;
    let polynomial = c_closed_form(&weight)?;
    let (solver, solver_agrees) = if check {
        let table = solve_system(weight.rank())?;
        let value = table.get(&weight).cloned().unwrap_or_default();
        let agrees = value == polynomial;
        (Some(value), Some(agrees))
    } else {
        (None, None)
    };
    let mut methods = vec!["closed-form".to_string()];
    if check {
        methods.push("solver".into());
    }
    let record = OutputRecord {
        command: "fourier".into(),
        params: Params {
            input: Some(input.to_string()),
            rank: Some(weight.rank()),
            verify: Some(check),
            ..Params::default()
        },
        methods,
        result: Payload::Fourier {
            weight,
            polynomial,
            solver,
            solver_agrees,
        },
        elapsed_ms: 0,
    };
    Ok((record, solver_agrees.unwrap_or(true)))
}

fn cmd_syt(input: &str) -> Result<(OutputRecord, bool), Failure> {
    let partition: Partition = input.parse()?;
    let rows: Vec<TableauRow> = syt_enumerate(&partition)
        .into_iter()
        .map(TableauRow::new)
        .collect();
    let ok = rows.iter().all(|r| r.height == r.charge);
    let record = OutputRecord {
        command: "syt".into(),
        params: Params {
            input: Some(input.to_string()),
            ..Params::default()
        },
        methods: vec![],
        result: Payload::Tableaux {
            shape: partition.parts().to_vec(),
            rows,
        },
        elapsed_ms: 0,
    };
    Ok((record, ok))
}

fn cmd_verify(n: usize, skip: &[String], hp_cap: usize) -> Result<(OutputRecord, bool), Failure> {
    let mut options = VerifyOptions::new(n);
    options.hp_cap = hp_cap;
    if n < 1 || n > options.solver_cap {
        return Err(Failure::Usage(format!(
            "verify needs 1 <= n <= {}",
            options.solver_cap
        )));
    }
    for s in skip {
        if let Ok(m) = s.parse::<Method>() {
            options.skip_methods.push(m);
        } else if let Ok(c) = s.parse::<Check>() {
            options.skip_checks.push(c);
        } else {
            return Err(Failure::Usage(format!(
                "--skip {s:?} is neither a method nor a check"
            )));
        }
    }
    let checks = verify::run(&options)?;
    let passed = checks.iter().all(|c| c.passed);
    let methods = Method::ALL
        .into_iter()
        .filter(|m| !options.skip_methods.contains(m) && (*m != Method::Hp || n <= hp_cap))
        .map(|m| m.name().to_string())
        .collect();
    let record = OutputRecord {
        command: "verify".into(),
        params: Params {
            rank: Some(n),
            skip: skip.to_vec(),
            hp_cap: Some(hp_cap),
            ..Params::default()
        },
        methods,
        result: Payload::Verify { passed, checks },
        elapsed_ms: 0,
    };
    Ok((record, passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Exponents { input, method, n } => cmd_exponents(input, *method, *n, cli.hp_cap),
        Command::Fourier { weight, verify } => cmd_fourier(weight, *verify),
        Command::Syt { partition } => cmd_syt(partition),
        Command::Verify { n, skip } => cmd_verify(*n, skip, cli.hp_cap),
    };
    match outcome {
        Ok((mut record, ok)) => {
            record.elapsed_ms = start.elapsed().as_millis() as u64;
            let rendered = match cli.format {
                Format::Text => record.to_text(),
                Format::Json => serde_json::to_string_pretty(&record).expect("record serializes"),
                Format::Csv => match record.to_csv() {
                    Ok(s) => s.trim_end().to_string(),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                },
            };
            println!("{rendered}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
