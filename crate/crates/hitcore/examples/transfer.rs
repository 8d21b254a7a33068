//! Chain-level transfer in rank five, degree 21: checks the bundled witness
//! `Z` and then one assembled from the computed `GL₅`-invariant.

use hitcore::dual::{verify_transfer_witness, TransferWitness};
use hitcore::fixtures;
use hitcore::hit::Engine;

fn report(label: &str, w: &TransferWitness) -> hitcore::Result<()> {
    println!("{label}: Z has {} terms, target {}", w.z.len(), w.target);
    for c in verify_transfer_witness(w)?.checks {
        println!("  {:<9} {}  {}", c.name, if c.passed { "ok  " } else { "FAIL" }, c.detail);
    }
    Ok(())
}

fn main() -> hitcore::Result<()> {
    report("bundled", &fixtures::transfer_witness_printed()?)?;
    let w = fixtures::transfer_witness_computed(&Engine::default())?;
    report("computed", &w)?;
    println!("  u = {}", w.z);
    println!("  bounding = {}", w.bounding);
    Ok(())
}
