//! The inclusion `Φ̄(B_{d−1}(ω)) ⊆ B_d(ω)` for every weight of a few degrees.

use hitcore::hit::Engine;
use hitcore::sum::check_sum_conjecture_degree;

fn main() -> hitcore::Result<()> {
    let engine = Engine::default();
    for (d, n) in [(3, 10), (4, 11), (5, 8), (5, 21)] {
        for r in check_sum_conjecture_degree(&engine, d, n)? {
            if r.target_size == 0 && r.image.is_empty() {
                continue;
            }
            println!(
                "d={d} n={n:<2} ω={:<10} |Φ̄(B_{}(ω))| = {:>3}  |B_{d}(ω)| = {:>3}  {}",
                r.omega.to_string(),
                d - 1,
                r.image.len(),
                r.target_size,
                if r.holds { "ok" } else { "FAILS" }
            );
        }
    }
    Ok(())
}
