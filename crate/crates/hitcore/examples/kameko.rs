//! The Kameko map `(Q P_5)_{2n+5} → (Q P_5)_n` and its kernel.

use hitcore::hit::Engine;
use hitcore::kameko::{kameko_down, kernel_kameko_basis, mu};
use hitcore::poly::Monomial;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    for n in [3u32, 8] {
        let k = kernel_kameko_basis(&engine, 5, n)?;
        let zero = k.kernel.iter().filter(|m| !m.is_positive()).count();
        println!(
            "degree {} -> {}: dim {} -> {}, onto = {}, kernel {} ({} + {})",
            k.high,
            k.low,
            k.high_dim,
            k.low_dim,
            k.onto,
            k.kernel.len(),
            zero,
            k.kernel.len() - zero
        );
    }
    let m = Monomial::new(vec![3, 3, 1, 5, 9])?;
    println!("{m} -> {}", kameko_down(&m).map(|x| x.to_string()).unwrap_or_else(|| "0".into()));
    println!("mu(8) = {}, mu(21) = {}, mu(47) = {}", mu(8), mu(21), mu(47));
    Ok(())
}
