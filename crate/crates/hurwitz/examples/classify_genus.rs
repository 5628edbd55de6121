//! Classify group actions for one genus over the whole built-in catalog:
//! every catalog group whose order fits under 84(g-1) is paired with every
//! admissible signature, and each cell is searched for generating vectors.
//!
//!     cargo run --release --example classify_genus -- [genus]

use hurwitz::catalog::{build_group, sweep};
use hurwitz::genvec::{representatives_epimorphisms, Budgets};
use hurwitz::signature::admissible_signatures;
use hurwitz::Error;

fn main() -> hurwitz::Result<()> {
    let genus: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("genus must be an integer"))
        .unwrap_or(2);
    let cap = 84 * (genus as u128 - 1);
    let budgets = Budgets::default();

    let mut total = 0usize;
    println!("{:>6} {:<12} {:<22} {:>8}", "order", "group", "signature", "vectors");
    for spec in sweep(cap, &[])? {
        let lg = build_group(&spec)?;
        let order = lg.group.order();
        for sig in admissible_signatures(genus, order)? {
            match representatives_epimorphisms(&lg, &sig, &budgets) {
                Ok(records) if records.is_empty() => {}
                Ok(records) => {
                    println!(
                        "{order:>6} {:<12} {:<22} {:>8}",
                        lg.label.to_string(),
                        sig.to_string(),
                        records.len()
                    );
                    total += records.len();
                }
                Err(Error::Resource(msg)) => {
                    eprintln!("skipped {} with {sig}: {msg}", lg.label);
                }
                Err(other) => return Err(other),
            }
        }
    }
    println!("{total} generating vectors for genus {genus}");
    Ok(())
}
