//! Splits `(Q P_5)_n` by weight vector and by whether a variable is missing.

use hitcore::hit::Engine;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    for n in [8, 21, 22] {
        let h = engine.hit_space(5, n)?;
        println!("degree {n}: dim {}", h.dim());
        for w in h.weights() {
            let q = h.q_omega(&w)?;
            if q.dim == 0 {
                continue;
            }
            let (zero, plus) = q.split();
            println!("  {:<12} {:>4} = {zero:>3} + {plus:>3}", w.to_string(), q.dim);
        }
    }
    // One variable fewer: the stratum Q P_4(2,2,2,1) in degree 22.
    let h = engine.hit_space(4, 22)?;
    let (zero, plus) = h.q_omega(&hitcore::poly::WeightVector::new(vec![2, 2, 2, 1]))?.split();
    println!("Q P_4(2,2,2,1): {zero} + {plus}");
    Ok(())
}
