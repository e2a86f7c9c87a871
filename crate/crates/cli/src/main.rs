//! Command-line front end: root tables, predicate checks, witness and
//! certificate emission, extremal search, table verification.
//!
//! Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error,
//! 3 budget exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rootbalance::balance::{
    find_zero_signing, is_well_balanced, lattice_membership_obstruction, strongly_orthogonal_set,
    SolverBudget, SubsetSelection,
};
use rootbalance::extremal::{
    c5_remark_check, max_wellbalanced_cocardinality, min_balanced_cocardinality, thm32_value,
    thm41_value, verify_tables,
};
use rootbalance::witnesses::{
    thm32_witness, thm41_witness, verify_well_balanced, WellBalancedCertificate,
};
use rootbalance::{DynkinLabel, Error, Family, RootSystem};

#[derive(Parser)]
#[command(
    name = "rootbalance",
    about = "Balanced, strongly orthogonal, and well-balanced subsets of positive roots",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV where the command supports it.
    #[arg(long, global = true)]
    csv: bool,

    /// Largest subset the signing search accepts.
    #[arg(long, global = true, value_name = "N")]
    budget_size: Option<usize>,

    /// Meet-in-the-middle table entry cap.
    #[arg(long, global = true, value_name = "N")]
    budget_table: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the index-to-vector table of positive roots.
    Roots { family: String, rank: usize },
    /// Decide balanced / strongly orthogonal / well-balanced for a subset.
    Check {
        family: String,
        rank: usize,
        /// `full`, `indices:i,j,...`, or `complement:i,j,...`
        #[arg(long)]
        subset: String,
    },
    /// Emit the constructed extremal witness certificate.
    Witness {
        which: WitnessKind,
        family: String,
        rank: usize,
    },
    /// Compute an extremal cocardinality with certificates for both bounds.
    Extremal {
        which: ExtremalKind,
        family: String,
        rank: usize,
    },
    /// Recompute both extremal tables and compare against the closed forms.
    VerifyTables {
        /// Largest classical rank to test.
        #[arg(long, default_value_t = 6, value_name = "N")]
        max_rank: usize,
        /// Additionally run the witness-only sweep up to rank forty.
        #[arg(long)]
        slow: bool,
    },
    /// Machine-check the maximal-but-not-maximum example on C5.
    RemarkC5,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Thm32,
    Thm41,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalKind {
    MinBalanced,
    MaxWellbalanced,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.json && cli.csv {
        eprintln!("error: --json and --csv are mutually exclusive");
        return ExitCode::from(2);
    }
    let mut budget = SolverBudget::default();
    if let Some(size) = cli.budget_size {
        budget.max_subset_size = size;
    }
    if let Some(entries) = cli.budget_table {
        budget.max_table_entries = entries;
    }
    match run(&cli, &budget) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::InadmissibleRank { .. }
        | Error::SpecParse { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::LabelMismatch { .. } => 2,
        _ => 1,
    }
}

fn parse_label(family: &str, rank: usize) -> Result<DynkinLabel, Error> {
    let family: Family = family.parse()?;
    DynkinLabel::new(family, rank)
}

fn run(cli: &Cli, budget: &SolverBudget) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Roots { family, rank } => {
            let label = parse_label(family, *rank)?;
            let rs = RootSystem::build(label)?;
            if cli.json {
                println!("{}", rs.to_canonical_json());
            } else {
                println!(
                    "{} : {} positive roots in dimension {} (coordinates are exact; halves shown as k/2)",
                    label,
                    rs.count(),
                    rs.ambient_dim()
                );
                for (i, root) in rs.positive_roots().iter().enumerate() {
                    println!("{i:4}  {root}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            family,
            rank,
            subset,
        } => {
            let label = parse_label(family, *rank)?;
            let rs = RootSystem::build(label)?;
            let sel = SubsetSelection::parse_spec(&rs, subset)?;
            let witness = find_zero_signing(&rs, &sel, budget)?;
            let balanced = witness.is_some();
            let so = strongly_orthogonal_set(&rs, &sel)?;
            let well = is_well_balanced(&rs, &sel, budget)?;
            let obstruction = if balanced {
                None
            } else {
                lattice_membership_obstruction(&rs, &sel)?
            };
            if cli.json {
                let doc = serde_json::json!({
                    "system": label,
                    "subset": sel,
                    "balanced": balanced,
                    "strongly_orthogonal": so,
                    "well_balanced": well,
                    "witness": witness,
                    "obstruction": obstruction,
                });
                println!("{doc}");
            } else {
                println!("system: {label}, subset size {}", sel.len());
                println!("balanced: {balanced}");
                println!("strongly orthogonal: {so}");
                println!("well-balanced: {well}");
                if let Some(w) = &witness {
                    let rendered: Vec<String> = w
                        .terms()
                        .iter()
                        .map(|&(i, s)| format!("{s}{}", rs.positive_roots()[i]))
                        .collect();
                    println!("witness: {}", rendered.join(" "));
                }
                if let Some(cert) = &obstruction {
                    println!(
                        "obstruction: {} (subset sum escapes twice the subset lattice)",
                        cert.kind()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness {
            which,
            family,
            rank,
        } => {
            let label = parse_label(family, *rank)?;
            let rs = RootSystem::build(label)?;
            let cert = match which {
                WitnessKind::Thm32 => thm32_witness(label)?,
                WitnessKind::Thm41 => thm41_witness(label)?,
            };
            verify_well_balanced(&rs, &cert)?;
            if cli.json {
                println!("{}", serde_json::to_string(&cert).expect("serializable"));
            } else {
                print_well_balanced(&rs, &cert);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal {
            which,
            family,
            rank,
        } => {
            let label = parse_label(family, *rank)?;
            let rs = RootSystem::build(label)?;
            let report = match which {
                ExtremalKind::MinBalanced => min_balanced_cocardinality(&rs, budget)?,
                ExtremalKind::MaxWellbalanced => max_wellbalanced_cocardinality(&rs, budget)?,
            };
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!(
                    "{} {} = {} ({}; lower: {}, upper: {})",
                    report.label,
                    report.quantity,
                    report.value,
                    report.method,
                    report.lower_certificate.kind(),
                    report.upper_certificate.kind()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTables { max_rank, slow } => {
            let report = verify_tables(*max_rank, budget);
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                print!("{}", report.to_csv());
            }
            let mut ok = report.all_pass();
            if *slow {
                ok &= slow_witness_sweep();
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::RemarkC5 => {
            let report = c5_remark_check(budget)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("punctured pair balanced: {}", report.punctured_pair_balanced);
                println!(
                    "single removals unbalanced: {} ({} roots pair oddly with e5)",
                    report.single_removals_unbalanced, report.odd_roots_with_e5
                );
                println!("full system unbalanced: {}", report.full_system_unbalanced);
                println!(
                    "maximal under inclusion, not of maximum cardinality: {}",
                    report.maximal_but_not_maximum
                );
                println!("witness terms: {}", report.witness_term_count);
            }
            Ok(if report.all_clauses_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_well_balanced(rs: &RootSystem, cert: &WellBalancedCertificate) {
    println!(
        "{}: balanced subset of cocardinality {} (complement strongly orthogonal: {})",
        cert.system, cert.cocardinality, cert.complement_strongly_orthogonal
    );
    let rendered: Vec<String> = cert
        .witness
        .terms()
        .iter()
        .map(|&(i, s)| format!("{s}{}", rs.positive_roots()[i]))
        .collect();
    println!("witness: {}", rendered.join(" "));
    let complement: Vec<String> = cert
        .complement
        .iter()
        .map(|&i| rs.positive_roots()[i].to_string())
        .collect();
    println!("complement: {{{}}}", complement.join(", "));
}

/// The witness-only sweep to rank forty; diagnostics go to stderr so CSV
/// output stays clean.
fn slow_witness_sweep() -> bool {
    let mut labels = DynkinLabel::classical_up_to(40);
    labels.extend(DynkinLabel::exceptional());
    let mut ok = true;
    for label in labels {
        let outcome = RootSystem::build(label).and_then(|rs| {
            let min_cert = thm32_witness(label)?;
            verify_well_balanced(&rs, &min_cert)?;
            let max_cert = thm41_witness(label)?;
            verify_well_balanced(&rs, &max_cert)?;
            if min_cert.cocardinality != thm32_value(label)
                || max_cert.cocardinality != thm41_value(label)
            {
                return Err(Error::CertificateInvalid {
                    reason: format!("{label}: witness cocardinality off the table"),
                });
            }
            Ok(())
        });
        if let Err(e) = outcome {
            eprintln!("slow sweep {label}: {e}");
            ok = false;
        }
    }
    eprintln!(
        "slow sweep: witness suite to rank 40 {}",
        if ok { "passed" } else { "FAILED" }
    );
    ok
}
