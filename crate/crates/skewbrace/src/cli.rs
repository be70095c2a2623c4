//! The `skb` command-line surface.
//!
//! Exit codes: 0 when everything passed, 1 on a check or validation
//! failure, 2 on usage or parse errors. Output is deterministic for fixed
//! inputs regardless of `--jobs`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::Catalog;
use crate::checks::{check_ids, check_theorems, CheckError};
use crate::enumerate::{brute_force_oracle, enumerate_braces};
use crate::report::analyze;
use crate::ybe::{export_solution, solution_from_brace, verify_solution, SolutionFormat};

#[derive(Parser)]
#[command(name = "skb", version, about = "finite skew brace computations", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every entry of a catalog file against the brace axioms.
    Validate { file: PathBuf },
    /// Print the full classification report of catalog entries.
    Analyze {
        file: PathBuf,
        /// restrict to a single entry
        #[arg(long)]
        brace: Option<String>,
        /// machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all skew braces of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// also run the brute-force oracle and compare canonical keys
        #[arg(long)]
        oracle: bool,
        /// write the catalog to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the theorem harness over a catalog.
    CheckTheorems {
        file: PathBuf,
        /// run only the named checks (repeatable)
        #[arg(long = "check")]
        checks: Vec<String>,
        /// worker threads
        #[arg(long)]
        jobs: Option<usize>,
        /// list available check ids and exit
        #[arg(long)]
        list: bool,
    },
    /// Derive the Yang–Baxter solution of one catalog entry.
    Ybe {
        file: PathBuf,
        #[arg(long)]
        brace: String,
        /// verify bijectivity, non-degeneracy and the braid relation
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value = "pairs-text")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test two catalog entries for brace isomorphism.
    Iso { file: PathBuf, id_a: String, id_b: String },
}

/// Runs the CLI against explicit argument and output streams; returns the
/// process exit code.
pub fn run_cli(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version on stdout with status 0
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)?;
            match Catalog::from_skb_str(&text) {
                Ok(catalog) => {
                    writeln!(out, "{} entries valid", catalog.len())?;
                    Ok(0)
                }
                Err(e @ crate::catalog::CatalogError::Validation { .. })
                | Err(e @ crate::catalog::CatalogError::GroupValidation { .. }) => {
                    writeln!(err, "validation failed: {e}")?;
                    Ok(1)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(2)
                }
            }
        }
        Command::Analyze { file, brace, json } => {
            let catalog = Catalog::read_from(&file)?;
            let mut reports = Vec::new();
            for entry in &catalog.entries {
                if brace.as_deref().map(|id| id != entry.id).unwrap_or(false) {
                    continue;
                }
                reports.push(analyze(&entry.id, &entry.brace));
            }
            if let Some(id) = &brace {
                if reports.is_empty() {
                    writeln!(err, "error: no entry named {id}")?;
                    return Ok(2);
                }
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
            } else {
                for report in &reports {
                    write!(out, "{}", report.render_text())?;
                }
            }
            Ok(0)
        }
        Command::Enumerate { order, oracle, output } => {
            let catalog = enumerate_braces(order)?;
            if oracle {
                let reference = brute_force_oracle(order)?;
                if catalog.keys() != reference.keys() {
                    writeln!(err, "oracle mismatch: {} vs {} canonical keys", catalog.len(), reference.len())?;
                    return Ok(1);
                }
                writeln!(out, "# oracle agreement: {} braces", catalog.len())?;
            }
            match output {
                Some(path) => {
                    catalog.write_to(&path)?;
                    writeln!(out, "wrote {} braces of order {} to {}", catalog.len(), order, path.display())?;
                }
                None => {
                    write!(out, "{}", catalog.to_skb_string())?;
                }
            }
            Ok(0)
        }
        Command::CheckTheorems { file, checks, jobs, list } => {
            if list {
                for id in check_ids() {
                    writeln!(out, "{id}")?;
                }
                return Ok(0);
            }
            let catalog = Catalog::read_from(&file)?;
            let selection = if checks.is_empty() { None } else { Some(checks.as_slice()) };
            let run = || check_theorems(&catalog, selection);
            let summary = match jobs {
                Some(k) => {
                    let pool = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build()?;
                    pool.install(run)
                }
                None => run(),
            };
            match summary {
                Ok(summary) => {
                    write!(out, "{}", summary.render_text())?;
                    Ok(if summary.overall_pass() { 0 } else { 1 })
                }
                Err(e @ CheckError::UnknownCheckId(_)) => {
                    writeln!(err, "error: {e}")?;
                    Ok(2)
                }
            }
        }
        Command::Ybe { file, brace, verify, format, output } => {
            let catalog = Catalog::read_from(&file)?;
            let entry = match catalog.get(&brace) {
                Some(e) => e,
                None => {
                    writeln!(err, "error: no entry named {brace}")?;
                    return Ok(2);
                }
            };
            let format = match format.as_str() {
                "pairs-text" => SolutionFormat::PairsText,
                "matrix-text" => SolutionFormat::MatrixText,
                other => {
                    writeln!(err, "error: unknown format {other:?} (pairs-text or matrix-text)")?;
                    return Ok(2);
                }
            };
            let solution = solution_from_brace(&entry.brace);
            let mut code = 0;
            if verify {
                let report = verify_solution(&solution);
                writeln!(
                    out,
                    "# verify: bijective={} braid={} left_nondegenerate={} right_nondegenerate={}",
                    report.bijective, report.braid, report.left_nondegenerate, report.right_nondegenerate
                )?;
                if !report.all_ok() {
                    code = 1;
                }
            }
            let text = export_solution(&solution, format);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(code)
        }
        Command::Iso { file, id_a, id_b } => {
            let catalog = Catalog::read_from(&file)?;
            let (a, b) = match (catalog.get(&id_a), catalog.get(&id_b)) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    writeln!(err, "error: both ids must name catalog entries")?;
                    return Ok(2);
                }
            };
            match a.brace.isomorphism(&b.brace) {
                Some(map) => {
                    let word: Vec<String> = map.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "isomorphic: {}", word.join(" "))?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(1)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("skb".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run_cli(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run(&["no-such-command"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
        let (code, _, _) = run(&["enumerate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn enumerate_with_oracle_agrees() {
        let (code, out, _) = run(&["enumerate", "--order", "4", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# oracle agreement: 4 braces\n"));
        assert!(out.contains("SKB1\n"));
    }

    #[test]
    fn check_list() {
        let (code, out, _) = run(&["check-theorems", "/nonexistent", "--list"]);
        assert_eq!(code, 0);
        assert!(out.lines().count() >= 25);
    }
}
