//! Batch verification surface: runs the suites and writes machine-readable
//! and rendered reports. Exit code 0 when all selected checks pass, 1 on
//! failure, 2 on usage errors, 3 when a budget made a check inconclusive.

mod suites;

use clap::{Args, Parser, Subcommand};
use report::ReportSet;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "chowbench", version, about = "exact verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// largest binary-form degree for the sweeps
    #[arg(long = "max-N", default_value_t = 8)]
    max_n: u32,
    /// restrict binary-form sweeps to one multiplicity k
    #[arg(long)]
    k: Option<u32>,
    /// reduction-step budget for basis computations
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// output directory for report files
    #[arg(long)]
    out: Option<PathBuf>,
    /// variant handling: `search` or `fixed:<id>` (reported, search always runs)
    #[arg(long, default_value = "search")]
    variants: String,
    /// degree bound for graded statistics
    #[arg(long = "degree-bound", default_value_t = 6)]
    degree_bound: u32,
}

#[derive(Subcommand)]
enum Command {
    /// run a verification suite
    Verify {
        /// which suite: `appendix` or `presentation`
        suite: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// run the rational simplification
    Simplify {
        /// what to simplify: `rational`
        what: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// compare with the divisor/kappa presentation
    Compare {
        /// comparison target: `faber`
        target: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// emit the computed classes
    Emit {
        /// what to emit: `classes`
        what: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// run every suite and write the combined report
    Report {
        /// scope: `all`
        scope: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn write_reports(out_dir: &Option<PathBuf>, set: &ReportSet, extra: &[(&str, &str)]) -> std::io::Result<()> {
    let Some(dir) = out_dir else {
        return Ok(());
    };
    std::fs::create_dir_all(dir)?;
    std::fs::write(Path::new(dir).join("report.jsonl"), set.to_structured())?;
    std::fs::write(Path::new(dir).join("summary.txt"), set.to_summary())?;
    for (name, content) in extra {
        std::fs::write(Path::new(dir).join(name), content)?;
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let (set, opts, extra): (ReportSet, CommonOpts, Vec<(&str, String)>) = match cli.command {
        Command::Verify { suite, opts } => match suite.as_str() {
            "appendix" => (
                suites::verify_appendix(opts.max_n, opts.budget, opts.k),
                opts,
                vec![],
            ),
            "presentation" => {
                let mode = match suites::VariantMode::parse(&opts.variants) {
                    Ok(m) => m,
                    Err(e) => {
                        eprintln!("bad --variants: {e}");
                        std::process::exit(2);
                    }
                };
                (suites::verify_presentation(&mode), opts, vec![])
            }
            other => {
                eprintln!("unknown verify suite `{other}` (expected `appendix` or `presentation`)");
                std::process::exit(2);
            }
        },
        Command::Simplify { what, opts } => match what.as_str() {
            "rational" => {
                let (set, simplified) = suites::simplify_rational(opts.budget, opts.degree_bound);
                let mut extra = Vec::new();
                if let Some(s) = simplified {
                    let mut text = String::new();
                    for (name, g) in &s.generators {
                        text.push_str(&format!("{name} {g}\n"));
                    }
                    extra.push(("simplified_ideal.txt", text));
                }
                (set, opts, extra)
            }
            other => {
                eprintln!("unknown simplify target `{other}` (expected `rational`)");
                std::process::exit(2);
            }
        },
        Command::Compare { target, opts } => match target.as_str() {
            "faber" => {
                let (set, transported) = suites::compare_faber(opts.budget, opts.degree_bound);
                let mut extra = Vec::new();
                if let Some(f) = transported {
                    let mut text = String::new();
                    for (name, g) in &f.generators {
                        text.push_str(&format!("{name} {g}\n"));
                    }
                    extra.push(("faber_ideal.txt", text));
                }
                (set, opts, extra)
            }
            other => {
                eprintln!("unknown compare target `{other}` (expected `faber`)");
                std::process::exit(2);
            }
        },
        Command::Emit { what, opts } => match what.as_str() {
            "classes" => {
                let (set, text) = suites::emit_classes(opts.max_n);
                (set, opts, vec![("classes.txt", text)])
            }
            other => {
                eprintln!("unknown emit target `{other}` (expected `classes`)");
                std::process::exit(2);
            }
        },
        Command::Report { scope, opts } => match scope.as_str() {
            "all" => {
                let mut set = suites::verify_appendix(opts.max_n, opts.budget, opts.k);
                set.extend(suites::verify_presentation(&suites::VariantMode::Search).reports);
                let (s2, simplified) = suites::simplify_rational(opts.budget, opts.degree_bound);
                set.extend(s2.reports);
                let (s3, transported) = suites::compare_faber(opts.budget, opts.degree_bound);
                // drop the duplicate simplification reports from compare
                set.extend(
                    s3.reports
                        .into_iter()
                        .filter(|r| r.module == "faber"),
                );
                let (s4, classes) = suites::emit_classes(opts.max_n);
                set.extend(s4.reports);
                set.extend(suites::engine_soundness(1000).reports);
                let mut extra = vec![("classes.txt", classes)];
                if let Some(s) = simplified {
                    let mut text = String::new();
                    for (name, g) in &s.generators {
                        text.push_str(&format!("{name} {g}\n"));
                    }
                    extra.push(("simplified_ideal.txt", text));
                }
                if let Some(f) = transported {
                    let mut text = String::new();
                    for (name, g) in &f.generators {
                        text.push_str(&format!("{name} {g}\n"));
                    }
                    extra.push(("faber_ideal.txt", text));
                }
                (set, opts, extra)
            }
            other => {
                eprintln!("unknown report scope `{other}` (expected `all`)");
                std::process::exit(2);
            }
        },
    };

    let extra_refs: Vec<(&str, &str)> = extra.iter().map(|(n, c)| (*n, c.as_str())).collect();
    if let Err(e) = write_reports(&opts.out, &set, &extra_refs) {
        eprintln!("failed to write reports: {e}");
        std::process::exit(2);
    }
    print!("{}", set.to_summary());
    std::process::exit(set.exit_code());
}
