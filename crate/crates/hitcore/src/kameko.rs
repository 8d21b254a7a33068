//! `α`, `μ`, generic degrees and the Kameko squaring maps.

use crate::error::{Error, Result};
use crate::gf2::{Gf2Vector, ReducedBasis};
use crate::hit::Engine;
use crate::poly::{Monomial, Polynomial};

pub use crate::poly::{alpha, mu};

/// `n = r(2^t − 1) + 2^t s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericDegree {
    pub r: u64,
    pub s: u64,
    pub t: u32,
}

impl GenericDegree {
    pub fn degree(&self) -> u64 {
        generic_degree(self.r, self.s, self.t)
    }
}

pub fn generic_degree(r: u64, s: u64, t: u32) -> u64 {
    r * ((1u64 << t) - 1) + (1u64 << t) * s
}

/// `μ(r(2^t − 1) + 2^t s)`.
pub fn mu_of_generic(r: u64, s: u64, t: u32) -> u32 {
    mu(generic_degree(r, s, t))
}

/// `x ↦ Π x_i^{(t_i − 1)/2}` if every exponent is odd, zero otherwise.
pub fn kameko_down(m: &Monomial) -> Option<Monomial> {
    if m.exponents().iter().all(|&t| t & 1 == 1) {
        Some(Monomial::new(m.exponents().iter().map(|t| (t - 1) / 2).collect()).expect("non-empty"))
    } else {
        None
    }
}

/// Linear extension of [`kameko_down`] from degree `2n + d` to degree `n`.
pub fn kameko_down_poly(p: &Polynomial) -> Result<Polynomial> {
    let d = p.nvars() as u32;
    if p.degree() < d || !(p.degree() - d).is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("degree {} is not of the form 2n + {d}", p.degree())));
    }
    let n = (p.degree() - d) / 2;
    Polynomial::from_terms(p.nvars(), n, p.terms().filter_map(kameko_down))
}

/// `x ↦ x_1 ⋯ x_d · x²`.
pub fn kameko_up(m: &Monomial) -> Monomial {
    Monomial::new(m.exponents().iter().map(|t| 2 * t + 1).collect()).expect("non-empty")
}

/// The admissible monomials of degree `2n + d` killed by the induced map,
/// plus whether the induced map onto `(Q P_d)_n` is surjective.
#[derive(Clone, Debug)]
pub struct KamekoKernel {
    pub d: usize,
    pub low: u32,
    pub high: u32,
    pub kernel: Vec<Monomial>,
    pub low_dim: usize,
    pub high_dim: usize,
    pub onto: bool,
}

pub fn kernel_kameko_basis(engine: &Engine, d: usize, n: u32) -> Result<KamekoKernel> {
    let high = 2 * n + d as u32;
    let top = engine.hit_space(d, high)?;
    let low = engine.hit_space(d, n)?;
    let mut kernel = Vec::new();
    let mut image = ReducedBasis::new(low.dim());
    for b in top.admissible_monomials() {
        let v = match kameko_down(&b) {
            Some(x) => low.q_coordinates(&Polynomial::from_monomial(x))?,
            None => Gf2Vector::zeros(low.dim()),
        };
        if v.is_zero() {
            kernel.push(b);
        } else {
            image.insert_reduce(&v)?;
        }
    }
    Ok(KamekoKernel { d, low: n, high, kernel, low_dim: low.dim(), high_dim: top.dim(), onto: image.rank() == low.dim() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn down_and_up() {
        assert_eq!(kameko_down(&mono(&[1, 1, 1, 1, 1])), Some(mono(&[0, 0, 0, 0, 0])));
        assert_eq!(kameko_down(&mono(&[3, 3, 1, 1, 1])), Some(mono(&[1, 1, 0, 0, 0])));
        assert_eq!(kameko_down(&mono(&[2, 1, 1, 1, 1])), None);
        assert_eq!(kameko_up(&Monomial::one(5)), mono(&[1, 1, 1, 1, 1]));
        assert_eq!(kameko_up(&mono(&[1, 1, 0, 0, 0])), mono(&[3, 3, 1, 1, 1]));
    }

    #[test]
    fn generic_degrees() {
        assert_eq!(generic_degree(5, 8, 1), 21);
        assert_eq!(generic_degree(5, 8, 2), 47);
        assert_eq!(generic_degree(5, 8, 3), 99);
        assert_eq!(mu_of_generic(5, 8, 3), 5);
        assert_eq!(generic_degree(3, 0, 0), 0);
        assert_eq!(GenericDegree { r: 5, s: 8, t: 1 }.degree(), 21);
    }

    #[test]
    fn parity_is_checked() {
        let p = Polynomial::from_monomial(mono(&[2, 1, 1]));
        assert!(kameko_down_poly(&p).is_err());
    }

    #[test]
    fn one_variable_kernel_is_empty() {
        let e = Engine::default();
        for n in [0u32, 1, 3, 7] {
            let k = kernel_kameko_basis(&e, 1, n).unwrap();
            assert!(k.kernel.is_empty(), "n={n}");
            assert!(k.onto);
        }
    }
}
