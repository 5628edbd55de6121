//! Work with branching-data archives: autodetected scanning of all three
//! text formats, filtered lookups, and a structural round-trip check
//! between the block and bracket-row encodings of the same records.
//!
//!     cargo run --example data_archive

use std::path::PathBuf;

use hurwitz::datafmt::{parse_vector_blocks, write_vector_blocks};
use hurwitz::genvec::EpimorphismRecord;
use hurwitz::scan::{find_group, find_signature, load_all, scan};
use hurwitz::LabeledGroup;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn main() -> hurwitz::Result<()> {
    for name in ["genus7_blocks.txt", "genus7_rows.txt", "groupsignaturedata_g7.txt"] {
        let path = fixture(name);
        println!("{name}:");
        for (index, entry) in scan(&path)? {
            let entry = entry?;
            println!(
                "  entry {index}: group {} with signature {}",
                entry.label(),
                entry.signature()
            );
        }
    }

    let blocks_path = fixture("genus7_blocks.txt");
    let by_group = find_group(&blocks_path, 504, 156)?;
    println!("\nfind_group(504, 156) matched {} entries", by_group.len());
    let by_sig = find_signature(&blocks_path, "[0,2,3,7]")?;
    println!("find_signature([0,2,3,7]) matched {} entries", by_sig.len());

    // The block and bracket-row fixtures encode the same three actions.
    let rows_path = fixture("genus7_rows.txt");
    let blocks = load_all(&blocks_path)?;
    let rows = load_all(&rows_path)?;
    assert_eq!(blocks.len(), rows.len());
    for (a, b) in blocks.iter().zip(&rows) {
        let ga = a.build_group()?;
        let gb = b.build_group()?;
        assert_eq!(ga.order(), gb.order());
        for p in b.rows().expect("vector entry") {
            assert!(ga.contains(p));
        }
    }
    println!("both encodings build the same order-{} group", blocks[0].build_group()?.order());

    // Round-trip: re-emit the blocks and parse them back.
    let records: Vec<EpimorphismRecord> = blocks
        .iter()
        .map(|entry| {
            let vector = entry.generating_vector().expect("vector entry");
            Ok(EpimorphismRecord {
                signature: entry.signature().clone(),
                con: vector.class_tuple.clone(),
                group: LabeledGroup {
                    label: entry.label().clone(),
                    group: std::sync::Arc::new(entry.build_group()?),
                },
                genimages: vector,
            })
        })
        .collect::<hurwitz::Result<_>>()?;
    let emitted = write_vector_blocks(&records);
    let reparsed = parse_vector_blocks(&emitted)?;
    assert_eq!(reparsed.len(), records.len());
    for (block, rec) in reparsed.iter().zip(&records) {
        assert_eq!(block.signature, rec.signature);
        assert_eq!(block.rows, rec.genimages.entries());
    }
    println!("write -> parse round-trip preserved all {} blocks", reparsed.len());
    Ok(())
}
