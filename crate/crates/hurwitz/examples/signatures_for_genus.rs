//! Enumerate every admissible branching signature for a quotient genus,
//! walking all group orders up to the 84(g-1) bound.
//!
//!     cargo run --example signatures_for_genus -- [genus]

use hurwitz::signature::{admissible_signatures, is_large_group};

fn main() -> hurwitz::Result<()> {
    let genus: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("genus must be an integer"))
        .unwrap_or(2);
    let bound = 84 * (genus as u128 - 1);
    println!("genus {genus}: checking group orders 1..={bound}");

    let mut total = 0usize;
    for n in 1..=bound {
        let sigs = admissible_signatures(genus, n)?;
        if sigs.is_empty() {
            continue;
        }
        let marker = if is_large_group(genus, n) { "  [large]" } else { "" };
        let joined = sigs
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("  ");
        println!("n = {n:>4}{marker}  {joined}");
        total += sigs.len();
    }
    println!("{total} admissible signatures");
    Ok(())
}
