//! Primitives of the divided power algebra as the dual of `Q P_5`.

use hitcore::dual::{dual_kameko, is_primitive, pairing, primitives, psi};
use hitcore::hit::{Engine, Policy};
use hitcore::lambda::is_cycle;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    for n in [8, 21] {
        let prims = primitives(5, n, Policy::Pow2)?;
        println!("degree {n}: {} primitives, dim (Q P_5)_{n} = {}", prims.len(), engine.dim(5, n)?);
        let cycles = prims.iter().filter(|u| is_cycle(&psi(u))).count();
        println!("  psi maps {cycles} of them to cycles");
    }
    let u = primitives(5, 8, Policy::Pow2)?.remove(0);
    println!("u = {u}");
    let v = dual_kameko(&u);
    println!("dual Kameko image is primitive: {}", is_primitive(&v));
    // Primitives annihilate hit elements.
    let h = engine.hit_space(5, 8)?;
    let p = hitcore::poly::sq(1, &hitcore::poly::Polynomial::from_exponents(&[vec![1, 1, 1, 2, 2]])?);
    println!("<u, Sq^1(x1 x2 x3 x4^2 x5^2)> = {}, hit: {}", pairing(&u, &p)? as u8, h.hit_test(&p)?);
    Ok(())
}
