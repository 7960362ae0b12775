use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use poset_residuation::enumerate::FailureKind;
use poset_residuation::fixtures::{fixture, verify_fixture, FIXTURES};
use poset_residuation::properties::render_set;
use poset_residuation::{
    build_tables, full_report, parse_poset_file, render_table, sweep, verify_left_adjointness,
    Error, Poset, PosetDocument, Premise, TableFormat, UnaryOp, Variant,
};

/// Operator residuation on finite posets.
#[derive(Parser)]
#[command(name = "opres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every structural property and premise bundle of a poset.
    Check {
        /// Poset file, or a built-in fixture such as `fixtures/fig3`.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the ⊙ and → tables of a construction.
    Tables {
        file: String,
        #[arg(long)]
        variant: Variant,
        #[arg(long, default_value = "tsv")]
        format: TableFormat,
        /// Build the tables even if the variant's premises fail.
        #[arg(long)]
        no_enforce: bool,
    },
    /// Verify left adjointness of a construction over all triples.
    Adjoint {
        file: String,
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        no_enforce: bool,
    },
    /// Sweep every small poset satisfying a premise bundle.
    Search {
        #[arg(long)]
        premise: Premise,
        #[arg(long)]
        max_size: usize,
        /// Enumerate labelled posets instead of isomorphism classes.
        #[arg(long)]
        labeled: bool,
    },
    /// List the built-in examples, or regenerate and diff their tables.
    Fixtures {
        #[arg(long)]
        verify: bool,
    },
}

const VERIFICATION_FAILED: u8 = 1;
const USAGE_ERROR: u8 = 2;

fn load(file: &str) -> Result<(PosetDocument, Poset, Option<UnaryOp>), Error> {
    let text = if Path::new(file).is_file() {
        std::fs::read_to_string(file).map_err(|e| Error::Syntax {
            line: 0,
            message: format!("cannot read {file}: {e}"),
        })?
    } else if let Some(entry) = fixture(file) {
        entry.source.to_owned()
    } else {
        return Err(Error::Syntax {
            line: 0,
            message: format!("no such file or fixture: {file}"),
        });
    };
    let doc = parse_poset_file(&text)?;
    let p = doc.to_poset()?;
    let u = doc.unary_op(&p)?;
    Ok((doc, p, u))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Check { file, json } => {
            let (doc, p, u) = load(&file)?;
            let report = full_report(&p, u.as_ref());
            if json {
                let out = json!({
                    "poset": doc.name,
                    "elements": p.names(),
                    "has_unary": u.is_some(),
                    "verdicts": report.to_json(&p),
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                println!("poset {} ({} elements)", doc.name, p.len());
                print!("{}", report.render(&p));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables {
            file,
            variant,
            format,
            no_enforce,
        } => {
            let (_, p, u) = load(&file)?;
            let (t_odot, t_arrow) = match tables(&p, u.as_ref(), variant, !no_enforce)? {
                Some(t) => t,
                None => return Ok(ExitCode::from(VERIFICATION_FAILED)),
            };
            print!("{}", render_table(&p, &t_odot, format));
            println!();
            print!("{}", render_table(&p, &t_arrow, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Adjoint {
            file,
            variant,
            no_enforce,
        } => {
            let (_, p, u) = load(&file)?;
            let (t_odot, t_arrow) = match tables(&p, u.as_ref(), variant, !no_enforce)? {
                Some(t) => t,
                None => return Ok(ExitCode::from(VERIFICATION_FAILED)),
            };
            let verdict = verify_left_adjointness(&p, &t_odot, &t_arrow)?;
            match verdict.counterexample {
                None => {
                    let n = p.len();
                    println!("left adjointness holds over all {} triples", n * n * n);
                    Ok(ExitCode::SUCCESS)
                }
                Some(cx) => {
                    let (a, b, c) = (p.name(cx.a), p.name(cx.b), p.name(cx.c));
                    println!("left adjointness fails at (a, b, c) = ({a}, {b}, {c})");
                    println!(
                        "  {a} ⊙ {b} = {} <= {c}: {}",
                        render_set(&p, t_odot.get(cx.a, cx.b)),
                        cx.odot_below
                    );
                    println!(
                        "  {a} <= {b} → {c} = {}: {}",
                        render_set(&p, t_arrow.get(cx.b, cx.c)),
                        cx.below_arrow
                    );
                    Ok(ExitCode::from(VERIFICATION_FAILED))
                }
            }
        }
        Command::Search {
            premise,
            max_size,
            labeled,
        } => {
            let report = sweep(premise, max_size, !labeled)?;
            println!("models examined:          {}", report.models_examined);
            println!("models passing premises:  {}", report.models_passing_premises);
            println!("adjointness failures:     {}", report.adjointness_failure_count);
            println!("identity-suite failures:  {}", report.identity_failure_count);
            println!("elapsed:                  {:.2?}", report.elapsed);
            for failure in &report.failures {
                let doc = PosetDocument::from_poset("counterexample", &failure.poset, failure.unary.as_ref());
                println!();
                print!("{}", doc.render());
                let p = &failure.poset;
                match &failure.kind {
                    FailureKind::Adjointness(cx) => println!(
                        "# adjointness fails at ({}, {}, {})",
                        p.name(cx.a),
                        p.name(cx.b),
                        p.name(cx.c)
                    ),
                    FailureKind::Identity(r) => {
                        for line in r.render(p).lines().filter(|l| !l.ends_with(": pass")) {
                            println!("# {line}");
                        }
                    }
                    FailureKind::Construction(e) => println!("# construction failed: {e}"),
                }
            }
            Ok(if report.clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFICATION_FAILED)
            })
        }
        Command::Fixtures { verify } => {
            let mut ok = true;
            for entry in FIXTURES {
                let fx = entry.load()?;
                if !verify {
                    let golden = if entry.golden_odot.is_some() { "tables" } else { "verdicts only" };
                    println!(
                        "{}\t{} elements\t{}\t{}\t{}",
                        entry.id,
                        fx.poset.len(),
                        entry.variant,
                        golden,
                        entry.description
                    );
                    continue;
                }
                let check = verify_fixture(entry)?;
                if check.ok() {
                    match check.errata.len() {
                        0 => println!("{}: ok", entry.id),
                        k => println!("{}: ok ({k} known errata in the printed tables)", entry.id),
                    }
                    continue;
                }
                ok = false;
                println!("{}: FAIL", entry.id);
                for (name, want, got) in &check.verdict_mismatches {
                    println!("  verdict {name}: expected {want}, got {got:?}");
                }
                for (kind, d) in check.unexplained_diffs() {
                    println!(
                        "  {} ({}, {}): expected {}, got {}",
                        kind.symbol(),
                        d.row,
                        d.column,
                        d.expected,
                        d.actual
                    );
                }
                for e in check.unconfirmed_errata() {
                    println!(
                        "  listed erratum {} ({}, {}) printed {} computed {} not observed",
                        e.table.symbol(),
                        e.row,
                        e.column,
                        e.printed,
                        e.computed
                    );
                }
                if let Some(cx) = check.adjointness.counterexample {
                    let p = &fx.poset;
                    println!(
                        "  adjointness fails at ({}, {}, {})",
                        p.name(cx.a),
                        p.name(cx.b),
                        p.name(cx.c)
                    );
                }
                for (name, _) in check.identities.failures() {
                    println!("  identity {name} fails");
                }
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFICATION_FAILED)
            })
        }
    }
}

type Tables = (
    poset_residuation::SetValuedTable,
    poset_residuation::SetValuedTable,
);

/// Builds the tables, printing the premise report and returning `None` when
/// the premises fail.
fn tables(p: &Poset, u: Option<&UnaryOp>, variant: Variant, enforce: bool) -> Result<Option<Tables>, Error> {
    match build_tables(p, u, variant, enforce) {
        Ok(t) => Ok(Some(t)),
        Err(Error::PremisesViolated { report, .. }) => {
            eprintln!("premises of the {variant} construction are violated:");
            for line in report.render(p).lines().filter(|l| !l.ends_with(": pass")) {
                eprintln!("  {line}");
            }
            Ok(None)
        }
        Err(e) => Err(e),
    }
}
