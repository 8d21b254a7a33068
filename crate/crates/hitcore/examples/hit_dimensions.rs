//! Dimensions of `(Q P_d)_n` for small `d` and `n`, and the admissible basis
//! of `(Q P_5)_8`.

use hitcore::hit::Engine;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    println!("dim (Q P_d)_n");
    print!("{:>4}", "d\\n");
    for n in 0..=12 {
        print!("{n:>5}");
    }
    println!();
    for d in 1..=4 {
        print!("{d:>4}");
        for n in 0..=12 {
            print!("{:>5}", engine.dim(d, n)?);
        }
        println!();
    }

    let h = engine.hit_space(5, 8)?;
    println!("\n(Q P_5)_8: {} monomials, hit rank {}, dim {}", h.monomials().len(), h.rank(), h.dim());
    for (i, m) in h.admissible_monomials().iter().enumerate().take(12) {
        println!("  {:>3}  {m}", i + 1);
    }
    println!("  ...");

    let h21 = engine.hit_space(5, 21)?;
    println!("(Q P_5)_21: dim {}", h21.dim());
    Ok(())
}
