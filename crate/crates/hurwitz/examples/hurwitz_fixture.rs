//! Reproduce the genus-7 extremal action: the simple group of order 504
//! acting with signature (0; 2, 3, 7), found as three inequivalent
//! generating vectors and printed in the block archive format.
//!
//!     cargo run --example hurwitz_fixture

use hurwitz::catalog::fixture;
use hurwitz::datafmt::write_vector_blocks;
use hurwitz::genvec::{representatives_epimorphisms, Budgets};
use hurwitz::signature::Signature;

fn main() -> hurwitz::Result<()> {
    let lg = fixture("psl(2,8)-paper")?;
    println!(
        "group {} of order {} acting on {} points",
        lg.label,
        lg.group.order(),
        lg.group.degree()
    );

    let sig = Signature::new(0, vec![2, 3, 7])?;
    println!(
        "signature {sig} gives genus {}; Hurwitz bound 84(g-1) = {}",
        sig.rh_genus(lg.group.order()),
        84 * (7 - 1)
    );

    let records = representatives_epimorphisms(&lg, &sig, &Budgets::default())?;
    println!(
        "{} generating vectors up to simultaneous conjugation:\n",
        records.len()
    );
    print!("{}", write_vector_blocks(&records));
    Ok(())
}
