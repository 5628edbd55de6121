//! Validate every entry of a branching-data file: rebuild each block's
//! group from its image rows and check the generating-vector axioms
//! (orders, long relation, generation).
//!
//!     cargo run --example verify_archive -- [path]

use std::path::PathBuf;

use hurwitz::genvec::is_generating_vector;
use hurwitz::scan::{scan, DataEntry};

fn main() -> hurwitz::Result<()> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join("genus7_blocks.txt")
    });
    println!("verifying {}", path.display());

    let mut valid = 0usize;
    let mut total = 0usize;
    for (index, outcome) in scan(&path)? {
        total += 1;
        match outcome {
            Err(e) => println!("  entry {index}: unreadable: {e}"),
            Ok(DataEntry::Line(line)) => {
                println!("  entry {index}: summary line for {}", line.group_id);
                valid += 1;
            }
            Ok(entry) => {
                let group = entry.build_group()?;
                let vector = entry.generating_vector().expect("vector entry");
                if is_generating_vector(&group, entry.signature(), &vector) {
                    println!(
                        "  entry {index}: {} with {} ok (group order {})",
                        entry.label(),
                        entry.signature(),
                        group.order()
                    );
                    valid += 1;
                } else {
                    println!("  entry {index}: INVALID vector for {}", entry.label());
                }
            }
        }
    }
    println!("{valid}/{total} entries valid");
    std::process::exit(if valid == total { 0 } else { 1 });
}
