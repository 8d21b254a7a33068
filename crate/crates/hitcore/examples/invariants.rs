//! `GL₅`- and `S₅`-invariants of `(Q P_5)_n`.

use hitcore::fixtures;
use hitcore::gl::{invariants_on_subspace, invariants_q, Group};
use hitcore::hit::Engine;
use hitcore::kameko::kernel_kameko_basis;
use hitcore::poly::WeightVector;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    for n in [8, 21] {
        let sym = invariants_q(&engine, 5, n, Group::Sym)?;
        let gl = invariants_q(&engine, 5, n, Group::GL)?;
        println!("degree {n}: {} S5-invariants, {} GL5-invariants", sym.len(), gl.len());
    }

    let kernel = kernel_kameko_basis(&engine, 5, 8)?.kernel;
    let inside = invariants_on_subspace(&engine, 5, 21, Group::Sym, &kernel)?;
    println!("S5-invariants supported in the Kameko kernel: {}", inside.len());

    let q = invariants_q(&engine, 5, 21, Group::GL)?.remove(0);
    println!("GL5-invariant ({} terms): {q}", q.len());
    let h = engine.hit_space(5, 21)?;
    let q2 = fixtures::q2()?;
    let omega = WeightVector::new(vec![3, 3, 3]);
    println!("congruent to q2 modulo hit and lower weights: {}", h.congruent_below(&q, &q2, &omega)?);
    println!("congruent to q2 modulo hit alone: {}", h.hit_test(&q.add(&q2)?)?);
    Ok(())
}
