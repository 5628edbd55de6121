//! Search the (0; 2, 3, 7) signature across a family of projective linear
//! groups.  Each group attaining this signature is an automorphism group of
//! maximal order 84(g-1) for its genus.
//!
//!     cargo run --release --example hurwitz_family

use hurwitz::catalog::{build_group, fixture, GroupSpec};
use hurwitz::genvec::{representatives_epimorphisms, Budgets};
use hurwitz::signature::Signature;

fn main() -> hurwitz::Result<()> {
    let sig = Signature::new(0, vec![2, 3, 7])?;
    let budgets = Budgets::default();

    let groups = vec![
        build_group(&GroupSpec::Psl2(7))?,
        fixture("psl(2,8)-paper")?,
        build_group(&GroupSpec::Psl2(13))?,
    ];

    println!("{:<16} {:>8} {:>7} {:>8}", "group", "order", "genus", "vectors");
    for lg in groups {
        let order = lg.group.order();
        let records = representatives_epimorphisms(&lg, &sig, &budgets)?;
        println!(
            "{:<16} {:>8} {:>7} {:>8}",
            lg.label.to_string(),
            order,
            sig.rh_genus(order).to_string(),
            records.len()
        );
    }
    Ok(())
}
