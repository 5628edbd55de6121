//! Command-line front end.
//!
//! Subcommands: `signatures`, `genvec`, `classify`, `search`, `verify`.
//! Exit codes: 0 success (including empty results), 1 validation failure,
//! 2 usage or I/O error, 3 resource budget exceeded.  Diagnostics go to
//! stderr; data goes to stdout or the `--out` file.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{build_group, resolve_group, sweep};
use crate::datafmt::{
    write_bracket_rows, write_group_signature_line, write_vector_block, write_vector_blocks,
    GroupSignatureLine,
};
use crate::error::{Error, Result};
use crate::genvec::{is_generating_vector, representatives_epimorphisms, Budgets, EpimorphismRecord};
use crate::scan::{self, DataEntry};
use crate::signature::{admissible_signatures, is_large_group, Signature};

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Group actions on compact Riemann surfaces: signatures, generating vectors, data files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the vector search (0 keeps the library default).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Write data output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest group order for which element lists are materialized.
    #[arg(long, global = true, default_value_t = 50_000, value_parser = clap::value_parser!(u64).range(1..))]
    element_budget: u64,

    /// Largest number of search leaves per conjugacy-class tuple.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    search_leaves: u64,

    /// Largest number of raw tuples the brute-force oracle may visit.
    #[arg(long, global = true, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    oracle_tuples: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible signatures for a genus, optionally for one group order.
    Signatures {
        /// Genus of the covered surface (at least 2).
        #[arg(long)]
        genus: u32,
        /// Group order; omit to sweep every order up to the 84(g-1) bound.
        #[arg(long)]
        order: Option<u128>,
    },
    /// Search generating vectors for one group and signature.
    Genvec {
        /// Group spec: family:params, file:path, or fixture:name.
        #[arg(long)]
        group: String,
        /// Signature, e.g. "(0; 2, 3, 7)" or "[0,2,3,7]".
        #[arg(long)]
        signature: String,
        #[arg(long, value_enum, default_value_t = Format::Block)]
        format: Format,
    },
    /// Sweep the built-in catalog for all group actions in a genus.
    Classify {
        /// Genus of the covered surface (at least 2).
        #[arg(long)]
        genus: u32,
        /// Cap on group order (default: the 84(g-1) bound).
        #[arg(long)]
        max_order: Option<u128>,
        /// Comma-separated family filter: cyclic, abelian, dihedral,
        /// symmetric, alternating, psl2.  Default: all families.
        #[arg(long)]
        families: Option<String>,
        /// Keep only large groups, of order above 4(g-1).
        #[arg(long)]
        large_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Block)]
        format: Format,
    },
    /// Filter a data file by legacy group id and/or signature.
    Search {
        #[arg(long)]
        file: PathBuf,
        /// Legacy group order (pairs with --id).
        #[arg(long)]
        order: Option<u128>,
        /// Legacy group identification number (pairs with --order).
        #[arg(long)]
        id: Option<u64>,
        /// Signature filter in either text form.
        #[arg(long)]
        signature: Option<String>,
    },
    /// Check every vector in a data file against a group built from its rows.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Star-separated blocks of image rows.
    Block,
    /// One bracket row per record with cycle notation.
    BracketRow,
    /// One group-signature summary line per group and signature.
    Line,
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.workers > 0 {
        let outcome = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
        if let Err(e) = outcome {
            eprintln!("error: worker pool: {e}");
            return 2;
        }
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let budgets = Budgets {
        element_budget: cli.element_budget,
        search_leaves: cli.search_leaves,
        oracle_tuples: cli.oracle_tuples,
    };
    match &cli.command {
        Command::Signatures { genus, order } => cmd_signatures(cli, *genus, *order),
        Command::Genvec {
            group,
            signature,
            format,
        } => cmd_genvec(cli, &budgets, group, signature, *format),
        Command::Classify {
            genus,
            max_order,
            families,
            large_only,
            format,
        } => cmd_classify(
            cli,
            &budgets,
            *genus,
            *max_order,
            families.as_deref(),
            *large_only,
            *format,
        ),
        Command::Search {
            file,
            order,
            id,
            signature,
        } => cmd_search(cli, file, *order, *id, signature.as_deref()),
        Command::Verify { file } => cmd_verify(file),
    }
}

fn emit(cli: &Cli, data: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, data).map_err(|e| Error::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(data.as_bytes())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn cmd_signatures(cli: &Cli, genus: u32, order: Option<u128>) -> Result<i32> {
    let mut data = String::new();
    match order {
        Some(n) => {
            for sig in admissible_signatures(genus, n)? {
                data.push_str(&format!("{}\t{}\n", sig.canonical_text(), sig.flat_text()));
            }
        }
        None => {
            if genus < 2 {
                return Err(Error::Domain(format!("genus {genus} is below 2")));
            }
            let bound = 84 * (genus as u128 - 1);
            for n in 1..=bound {
                for sig in admissible_signatures(genus, n)? {
                    data.push_str(&format!(
                        "{}\t{}\t{}\n",
                        n,
                        sig.canonical_text(),
                        sig.flat_text()
                    ));
                }
            }
        }
    }
    emit(cli, &data)?;
    Ok(0)
}

fn render(records: &[EpimorphismRecord], format: Format) -> Result<String> {
    match format {
        Format::Block => Ok(write_vector_blocks(records)),
        Format::BracketRow => Ok(write_bracket_rows(records)),
        Format::Line => {
            let mut seen: BTreeSet<(String, Signature)> = BTreeSet::new();
            let mut out = String::new();
            for rec in records {
                let key = (rec.group.label.text.clone(), rec.signature.clone());
                if !seen.insert(key) {
                    continue;
                }
                let order = rec.group.group.order();
                let genus = rec.signature.rh_genus(order);
                if !genus.is_integer() || *genus.numer() < 2 {
                    return Err(Error::Domain(format!(
                        "record for {} with {} has no genus-2+ surface (computed genus {})",
                        rec.group.label, rec.signature, genus
                    )));
                }
                let line = GroupSignatureLine::new(
                    *genus.numer() as u32,
                    order,
                    rec.signature.clone(),
                    rec.group.label.clone(),
                );
                out.push_str(&write_group_signature_line(&line));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_genvec(
    cli: &Cli,
    budgets: &Budgets,
    group: &str,
    signature: &str,
    format: Format,
) -> Result<i32> {
    let lg = resolve_group(group)?;
    let sig = Signature::parse(signature)?;
    let records = representatives_epimorphisms(&lg, &sig, budgets)?;
    if records.is_empty() {
        eprintln!("no epimorphisms for {} with {}", lg.label, sig);
    } else {
        eprintln!("{} records", records.len());
    }
    emit(cli, &render(&records, format)?)?;
    Ok(0)
}

fn cmd_classify(
    cli: &Cli,
    budgets: &Budgets,
    genus: u32,
    max_order: Option<u128>,
    families: Option<&str>,
    large_only: bool,
    format: Format,
) -> Result<i32> {
    if genus < 2 {
        return Err(Error::Domain(format!("genus {genus} is below 2")));
    }
    let bound = 84 * (genus as u128 - 1);
    let cap = max_order.unwrap_or(bound).min(bound);
    let families: Vec<String> = families
        .map(|f| f.split(',').map(|s| s.trim().to_string()).collect())
        .unwrap_or_default();
    eprintln!(
        "classify: sweeping the built-in catalog (cyclic, abelian, dihedral, symmetric, \
         alternating, psl2) up to order {cap}; groups outside these families are not \
         considered"
    );

    let mut all: Vec<EpimorphismRecord> = Vec::new();
    for spec in sweep(cap, &families)? {
        let lg = build_group(&spec)?;
        let n = lg.group.order();
        if large_only && !is_large_group(genus, n) {
            continue;
        }
        for sig in admissible_signatures(genus, n)? {
            match representatives_epimorphisms(&lg, &sig, budgets) {
                Ok(records) => all.extend(records),
                Err(Error::Resource(msg)) => {
                    eprintln!("skipped {} with {}: {}", lg.label, sig, msg);
                }
                Err(e) => return Err(e),
            }
        }
    }
    eprintln!("{} records", all.len());
    emit(cli, &render(&all, format)?)?;
    Ok(0)
}

fn cmd_search(
    cli: &Cli,
    file: &PathBuf,
    order: Option<u128>,
    id: Option<u64>,
    signature: Option<&str>,
) -> Result<i32> {
    let pair = match (order, id) {
        (Some(order), Some(id)) => Some((order, id)),
        (None, None) => None,
        _ => {
            return Err(Error::Domain(
                "--order and --id must be given together".to_string(),
            ))
        }
    };
    let sig = signature.map(Signature::parse).transpose()?;
    if pair.is_none() && sig.is_none() {
        return Err(Error::Domain(
            "give --order/--id, --signature, or both".to_string(),
        ));
    }
    let entries = scan::read_data(file, |entry| {
        pair.is_none_or(|p| entry.label().legacy_id == Some(p))
            && sig.as_ref().is_none_or(|s| entry.signature() == s)
    })?;
    let mut data = String::new();
    for entry in &entries {
        match entry {
            DataEntry::Line(line) => {
                data.push_str(&write_group_signature_line(line));
                data.push('\n');
            }
            DataEntry::Block(block) => data.push_str(&write_vector_block(block)),
        }
    }
    eprintln!("{} entries", entries.len());
    emit(cli, &data)?;
    Ok(0)
}

fn cmd_verify(file: &PathBuf) -> Result<i32> {
    let mut total = 0usize;
    let mut valid = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for (index, item) in scan::scan(file)? {
        total += 1;
        match item {
            Err(e) => failures.push(format!("entry {index}: {e}")),
            Ok(DataEntry::Line(_)) => valid += 1,
            Ok(entry) => match entry.build_group() {
                Err(e) => failures.push(format!("entry {index}: {e}")),
                Ok(group) => {
                    let vector = entry
                        .generating_vector()
                        .expect("block entries carry a vector");
                    if is_generating_vector(&group, entry.signature(), &vector) {
                        valid += 1;
                    } else {
                        failures.push(format!(
                            "entry {index}: vector fails validation against the group built \
                             from its own rows"
                        ));
                    }
                }
            },
        }
    }
    for failure in &failures {
        eprintln!("{failure}");
    }
    println!("{valid}/{total} valid");
    Ok(if valid == total { 0 } else { 1 })
}
