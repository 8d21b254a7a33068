//! The maps `ρ_{(k,d)}`, `π_{(k;K)}` and `φ_{(k;K)}` between `P_{d−1}` and
//! `P_d`, and a checker for the inclusion `Φ̄(B_{d−1}(ω)) ⊆ B_d(ω)`.
//!
//! Variable indices in this module are one-based, matching `x₁, …, x_d`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hit::Engine;
use crate::poly::{substitute, Monomial, Polynomial, WeightVector};

/// A pair `(k; K)` with `K = (k₁ < ⋯ < k_r)`, `k < k₁`, `k_r ≤ d`, `r < d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KPair {
    pub k: usize,
    pub big_k: Vec<usize>,
}

impl KPair {
    pub fn new(k: usize, big_k: Vec<usize>) -> Self {
        KPair { k, big_k }
    }

    /// Whether the pair belongs to `N_d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        let ok = self.k >= 1
            && self.k <= d
            && self.big_k.len() < d
            && self.big_k.windows(2).all(|w| w[0] < w[1])
            && self.big_k.first().is_none_or(|&k1| k1 > self.k)
            && self.big_k.last().is_none_or(|&kr| kr <= d);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("({};{:?}) is not in N_{d}", self.k, self.big_k)))
        }
    }
}

/// Every element of `N_d`.
pub fn n_d(d: usize) -> Vec<KPair> {
    let mut out = Vec::new();
    for k in 1..=d {
        let rest: Vec<usize> = (k + 1..=d).collect();
        for mask in 0u32..(1 << rest.len()) {
            let big_k: Vec<usize> = rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            if big_k.len() < d {
                out.push(KPair { k, big_k });
            }
        }
    }
    out
}

fn rho_images(k: usize, d: usize) -> Vec<Vec<usize>> {
    (1..d).map(|j| if j < k { vec![j - 1] } else { vec![j] }).collect()
}

/// `ρ_{(k,d)}`: `x_j ↦ x_j` for `j < k`, `x_j ↦ x_{j+1}` for `j ≥ k`.
pub fn rho(k: usize, d: usize, p: &Polynomial) -> Result<Polynomial> {
    if d < 2 || k == 0 || k > d {
        return Err(Error::InvalidArgument(format!("rho needs 1 <= k <= d, got k={k}, d={d}")));
    }
    if p.nvars() != d - 1 {
        return Err(Error::ArityMismatch { expected: d - 1, found: p.nvars() });
    }
    substitute(p, &rho_images(k, d), d)
}

fn rho_exps(k: usize, e: &[u32]) -> Vec<u32> {
    let mut out = e.to_vec();
    out.insert(k - 1, 0);
    out
}

/// `π_{(k;K)}`: `x_j ↦ x_j` for `j < k`, `x_k ↦ Σ_{p ∈ K} x_{p−1}`,
/// `x_j ↦ x_{j−1}` for `j > k`.
pub fn pi(pair: &KPair, p: &Polynomial) -> Result<Polynomial> {
    let d = p.nvars();
    if d < 2 {
        return Err(Error::InvalidArgument("pi needs at least two variables".into()));
    }
    pair.validate(d)?;
    let images: Vec<Vec<usize>> = (1..=d)
        .map(|j| match j.cmp(&pair.k) {
            std::cmp::Ordering::Less => vec![j - 1],
            std::cmp::Ordering::Equal => pair.big_k.iter().map(|&q| q - 2).collect(),
            std::cmp::Ordering::Greater => vec![j - 2],
        })
        .collect();
    substitute(p, &images, d - 1)
}

#[inline]
fn bit(x: u32, j: i64) -> bool {
    j >= 0 && (x >> j) & 1 == 1
}

/// `φ_{(k;K)}` on a monomial of `P_{d−1}`; `None` stands for zero.
///
/// For `K ≠ ∅` of length `r`, let `t_m` be the exponent of `x_{k_m − 1}`.
/// With `u` the first index where `t_u ≠ 2^r − 1`, the value is
/// `x_k^{2^r−1} ρ(x) / x_{(K,u)}` provided `t_u > 2^r − 1`, bits
/// `r−1, …, r−u` of `t_u` are set and bit `r−m` of `t_m` is set for `m > u`.
/// When every `t_m` equals `2^r − 1`, `u = r` is used; the result then has a
/// zero exponent at `x_{k_r}`.
pub fn phi(pair: &KPair, m: &Monomial) -> Result<Option<Monomial>> {
    let d = m.nvars() + 1;
    pair.validate(d)?;
    let mut y = rho_exps(pair.k, m.exponents());
    let r = pair.big_k.len();
    if r == 0 {
        return Ok(Some(Monomial::new(y)?));
    }
    let full = (1u32 << r) - 1;
    // t_m is the exponent of x_{k_m} after ρ.
    let t: Vec<u32> = pair.big_k.iter().map(|&q| y[q - 1]).collect();
    let u = match t.iter().position(|&x| x != full) {
        None => r,
        Some(i) => {
            let u = i + 1;
            let tu = t[i];
            if tu <= full {
                return Ok(None);
            }
            if !(1..=u).all(|mm| bit(tu, (r - mm) as i64)) {
                return Ok(None);
            }
            if !(u + 1..=r).all(|mm| bit(t[mm - 1], (r - mm) as i64)) {
                return Ok(None);
            }
            u
        }
    };
    // x_{(K,u)} = x_{k_u}^{2^{r−1}+⋯+2^{r−u}} · Π_{u<m≤r} x_{k_m}^{2^{r−m}}.
    let head: u32 = (1..=u).map(|mm| 1u32 << (r - mm)).sum();
    let ku = pair.big_k[u - 1];
    y[ku - 1] -= head;
    for mm in u + 1..=r {
        y[pair.big_k[mm - 1] - 1] -= 1u32 << (r - mm);
    }
    y[pair.k - 1] += full;
    Ok(Some(Monomial::new(y)?))
}

/// Result of checking `Φ̄(B_{d−1}(ω)) ⊆ B_d(ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumReport {
    pub d: usize,
    pub omega: WeightVector,
    pub holds: bool,
    /// `Φ̄(B_{d−1}(ω))`, ascending.
    pub image: Vec<Monomial>,
    /// Elements of the image that are not admissible.
    pub witnesses: Vec<Monomial>,
    /// `|B_d(ω)|`.
    pub target_size: usize,
}

/// `Φ̄⁰(U) ∪ Φ̄⁺(U)` for a set `U` of monomials in `d − 1` variables.
pub fn phi_bar(d: usize, u: &[Monomial]) -> Result<BTreeSet<Monomial>> {
    let mut out = BTreeSet::new();
    for pair in n_d(d) {
        for m in u {
            if let Some(x) = phi(&pair, m)? {
                if pair.big_k.is_empty() || x.is_positive() {
                    out.insert(x);
                }
            }
        }
    }
    Ok(out)
}

fn of_weight(engine: &Engine, d: usize, omega: &WeightVector) -> Result<Vec<Monomial>> {
    let n = u32::try_from(omega.degree()).map_err(|_| Error::InvalidArgument("weight degree too large".into()))?;
    Ok(engine.admissible_basis(d, n)?.monomials.into_iter().filter(|m| m.weight() == *omega).collect())
}

pub fn check_sum_conjecture(engine: &Engine, d: usize, omega: &WeightVector) -> Result<SumReport> {
    if d < 2 {
        return Err(Error::InvalidArgument("the inclusion needs d >= 2".into()));
    }
    let source = of_weight(engine, d - 1, omega)?;
    let target: BTreeSet<Monomial> = of_weight(engine, d, omega)?.into_iter().collect();
    let image = phi_bar(d, &source)?;
    let witnesses: Vec<Monomial> = image.iter().filter(|m| !target.contains(*m)).cloned().collect();
    Ok(SumReport {
        d,
        omega: omega.clone(),
        holds: witnesses.is_empty(),
        image: image.into_iter().collect(),
        witnesses,
        target_size: target.len(),
    })
}

/// Checks every weight vector occurring in degree `n`.
pub fn check_sum_conjecture_degree(engine: &Engine, d: usize, n: u32) -> Result<Vec<SumReport>> {
    let weights = engine.hit_space(d, n)?.weights();
    weights.iter().map(|w| check_sum_conjecture(engine, d, w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::from_monomial(mono(e))
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1, 5, &p(&[1, 1, 1, 1])).unwrap(), p(&[0, 1, 1, 1, 1]));
        assert_eq!(rho(5, 5, &p(&[2, 1, 0, 3])).unwrap(), p(&[2, 1, 0, 3, 0]));
        assert!(rho(0, 5, &p(&[1, 1, 1, 1])).is_err());
        assert!(rho(6, 5, &p(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn pi_examples() {
        assert!(pi(&KPair::new(1, vec![]), &p(&[1, 0])).unwrap().is_zero());
        assert_eq!(pi(&KPair::new(1, vec![2]), &p(&[1, 0])).unwrap(), p(&[1]));
        assert!(pi(&KPair::new(2, vec![1]), &p(&[1, 0])).is_err());
    }

    #[test]
    fn phi_examples() {
        let pair = KPair::new(1, vec![2]);
        assert_eq!(phi(&pair, &mono(&[1, 1, 1, 1])).unwrap(), Some(mono(&[1, 0, 1, 1, 1])));
        let empty = KPair::new(3, vec![]);
        assert_eq!(phi(&empty, &mono(&[2, 1, 4, 1])).unwrap(), Some(mono(&[2, 1, 0, 4, 1])));
        // t = 2 is even, so bit 0 fails.
        assert_eq!(phi(&pair, &mono(&[2, 1, 1, 1])).unwrap(), None);
        // r = 2, K = (2,3): t₁ = 3 = 2²−1, t₂ = 6 > 3 with bits 1 and 0? bit 0 of 6 is clear.
        assert_eq!(phi(&KPair::new(1, vec![2, 3]), &mono(&[3, 6, 0, 0])).unwrap(), None);
        // t₁ = 3, t₂ = 7: u = 2, x_{(K,2)} = x₃^{2+1}.
        assert_eq!(phi(&KPair::new(1, vec![2, 3]), &mono(&[3, 7, 0, 0])).unwrap(), Some(mono(&[3, 3, 4, 0, 0])));
    }

    #[test]
    fn n_d_sizes() {
        // Σ_k 2^{d−k}, minus the one K of length d (impossible since k < k₁).
        assert_eq!(n_d(2).len(), 3);
        assert_eq!(n_d(5).len(), 31);
        assert!(n_d(4).iter().all(|p| p.validate(4).is_ok()));
    }
}
