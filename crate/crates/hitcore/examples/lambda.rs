//! Admissible forms, differentials and a small Ext chart from the lambda
//! algebra.

use hitcore::fixtures;
use hitcore::lambda::{adem_normalize, differential, homology_dim, is_cycle, LambdaElement};

fn main() -> hitcore::Result<()> {
    let x = LambdaElement::parse("L1 L3 + L2 L2")?;
    let y = LambdaElement::parse("L1 L5 L3")?;
    println!("{y}  ~>  {}", adem_normalize(&y));
    println!("{x}  ~>  {}", adem_normalize(&x));
    for n in [3, 5, 7, 11] {
        println!("d(L{n}) = {}", differential(&LambdaElement::monomial(vec![n])));
    }

    let f = fixtures::f0bar()?;
    println!("f0 = {f}\n  cycle: {}", is_cycle(&f));

    // Rows s, columns t − s (the stem).
    println!("\ndim Ext^(s, s+t)");
    print!("{:>3}", "s");
    for t in 0..=14 {
        print!("{t:>3}");
    }
    println!();
    for s in 1..=5 {
        print!("{s:>3}");
        for t in 0..=14 {
            print!("{:>3}", homology_dim(s, t)?);
        }
        println!();
    }
    println!("dim H^(5,21) = {}", homology_dim(5, 21)?);
    Ok(())
}
