//! The divided power algebra `Γ(a₁, …, a_d)` dual to `P_d`, its right
//! Steenrod action, primitives, the dual Kameko map and the chain-level
//! transfer `ψ_d` into the lambda algebra.
//!
//! `ψ_d(a^J) = Σ_{t ≥ j_d} ψ_{d−1}((a^{J'})Sq^{t−j_d}) λ_t` with `J'` the
//! first `d − 1` orders, in the lambda algebra of [`crate::lambda`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{kernel_vectors, Gf2Vector};
use crate::hit::Policy;
use crate::lambda::{self, LambdaElement, Normalizer};
use crate::poly::{binom_mod2, enumerate_monomials, Polynomial};

/// A sum of divided monomials `a₁^{(j₁)} ⋯ a_d^{(j_d)}` of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DividedElement {
    d: usize,
    degree: u32,
    terms: BTreeSet<Vec<u32>>,
}

impl DividedElement {
    pub fn zero(d: usize, degree: u32) -> Self {
        DividedElement { d, degree, terms: BTreeSet::new() }
    }

    pub fn monomial(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidArgument("a divided monomial needs at least one variable".into()));
        }
        let degree = orders.iter().sum();
        Ok(DividedElement { d: orders.len(), degree, terms: BTreeSet::from([orders]) })
    }

    /// Sums the order vectors; a repeated vector cancels.
    pub fn from_orders(orders: &[Vec<u32>]) -> Result<Self> {
        let first = orders.first().ok_or_else(|| Error::InvalidArgument("no terms given".into()))?;
        let mut out = Self::zero(first.len(), first.iter().sum());
        for o in orders {
            out.toggle(o.clone())?;
        }
        Ok(out)
    }

    pub fn toggle(&mut self, orders: Vec<u32>) -> Result<()> {
        if orders.len() != self.d {
            return Err(Error::ArityMismatch { expected: self.d, found: orders.len() });
        }
        let deg: u32 = orders.iter().sum();
        if deg != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: deg });
        }
        if !self.terms.remove(&orders) {
            self.terms.insert(orders);
        }
        Ok(())
    }

    pub fn add(&self, other: &DividedElement) -> Result<DividedElement> {
        let mut out = self.clone();
        for t in &other.terms {
            out.toggle(t.clone())?;
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    pub fn contains(&self, orders: &[u32]) -> bool {
        self.terms.contains(orders)
    }
}

fn render(orders: &[u32]) -> String {
    let parts: Vec<String> = orders.iter().enumerate().filter(|(_, &j)| j > 0).map(|(i, j)| format!("a{}^({j})", i + 1)).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for DividedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| render(t)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DividedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DividedElement({self})")
    }
}

/// `C(j − k, k)` mod 2: the coefficient of `(a^{(j)})Sq^k`.
#[inline]
fn coeff(j: u32, k: u32) -> bool {
    binom_mod2(j as i64 - k as i64, k as i64) == 1
}

/// Calls `f` on every `J − K` with `Σ K = k` and nonzero coefficient.
fn for_each_dual_term(k: u32, orders: &[u32], f: &mut impl FnMut(&[u32])) {
    fn rec(i: usize, left: u32, src: &[u32], cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i == src.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        // (a^{(j)})Sq^{k_i} needs 2k_i ≤ j.
        let cap: u32 = src[i..].iter().map(|j| j / 2).sum();
        if cap < left {
            return;
        }
        for ki in 0..=left.min(src[i] / 2) {
            if coeff(src[i], ki) {
                cur[i] = src[i] - ki;
                rec(i + 1, left - ki, src, cur, f);
            }
        }
        cur[i] = src[i];
    }
    let mut cur = orders.to_vec();
    rec(0, k, orders, &mut cur, f);
}

/// `(u)Sq^k`, by the Cartan formula.
pub fn dual_sq(k: u32, u: &DividedElement) -> DividedElement {
    let mut out = DividedElement::zero(u.d, u.degree.saturating_sub(k));
    if k > u.degree {
        return out;
    }
    for t in &u.terms {
        for_each_dual_term(k, t, &mut |j| {
            out.toggle(j.to_vec()).expect("degree is preserved");
        });
    }
    out
}

/// The Kronecker pairing `⟨a^J, x^K⟩ = [J = K]`.
pub fn pairing(u: &DividedElement, p: &Polynomial) -> Result<bool> {
    if u.d != p.nvars() {
        return Err(Error::ArityMismatch { expected: u.d, found: p.nvars() });
    }
    if u.degree != p.degree() {
        return Err(Error::DegreeMismatch { expected: u.degree, found: p.degree() });
    }
    Ok(p.terms().filter(|m| u.terms.contains(m.exponents())).count() % 2 == 1)
}

pub fn is_primitive(u: &DividedElement) -> bool {
    (1..=u.degree).all(|k| dual_sq(k, u).is_zero())
}

/// A basis of the elements of degree `n` killed by every `Sq^k`, `k > 0`
/// (or by every `Sq^{2^i}` under [`Policy::Pow2`]), in reduced echelon form.
pub fn primitives(d: usize, n: u32, policy: Policy) -> Result<Vec<DividedElement>> {
    let source = enumerate_monomials(d, n)?;
    let mut rows: Vec<Gf2Vector> = Vec::new();
    for k in policy.squares(n) {
        let target = enumerate_monomials(d, n - k)?;
        let tindex: HashMap<&[u32], usize> = target.iter().enumerate().map(|(i, m)| (m.exponents(), i)).collect();
        let mut block = vec![Gf2Vector::zeros(source.len()); target.len()];
        for (c, m) in source.iter().enumerate() {
            for_each_dual_term(k, m.exponents(), &mut |j| {
                block[tindex[j]].flip(c).expect("in range");
            });
        }
        rows.extend(block.into_iter().filter(|r| !r.is_zero()));
    }
    kernel_vectors(source.len(), &rows)?
        .into_iter()
        .map(|v| {
            let orders: Vec<Vec<u32>> = v.ones().into_iter().map(|i| source[i].exponents().to_vec()).collect();
            DividedElement::from_orders(&orders)
        })
        .collect()
}

/// `a^{(j)} ↦ a^{(2j+1)}` in every variable: degree `n ↦ 2n + d`.
pub fn dual_kameko(u: &DividedElement) -> DividedElement {
    let mut out = DividedElement::zero(u.d, 2 * u.degree + u.d as u32);
    for t in &u.terms {
        out.toggle(t.iter().map(|j| 2 * j + 1).collect()).expect("degree is consistent");
    }
    out
}

/// `ψ_d` without Adem normalization, memoized on monomials.
#[derive(Default)]
pub struct Psi {
    memo: HashMap<Vec<u32>, LambdaElement>,
}

impl Psi {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(&mut self, orders: &[u32]) -> LambdaElement {
        if orders.len() == 1 {
            return LambdaElement::monomial(vec![orders[0]]);
        }
        if let Some(x) = self.memo.get(orders) {
            return x.clone();
        }
        let (last, prefix) = orders.split_last().expect("non-empty");
        let prefix_deg: u32 = prefix.iter().sum();
        let mut out = LambdaElement::zero();
        for k in 0..=prefix_deg {
            let mut images = Vec::new();
            for_each_dual_term(k, prefix, &mut |j| images.push(j.to_vec()));
            let tail = LambdaElement::monomial(vec![last + k]);
            for j in images {
                out.add_assign(&self.monomial(&j).mul(&tail));
            }
        }
        self.memo.insert(orders.to_vec(), out.clone());
        out
    }

    pub fn element(&mut self, u: &DividedElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for t in u.terms() {
            out.add_assign(&self.monomial(t));
        }
        out
    }
}

pub fn psi_raw(u: &DividedElement) -> LambdaElement {
    Psi::new().element(u)
}

/// `ψ_d(u)` in admissible form.
pub fn psi(u: &DividedElement) -> LambdaElement {
    lambda::adem_normalize(&psi_raw(u))
}

/// The inputs of the rank-five transfer witness, lambda elements in the
/// convention of [`crate::lambda`].
#[derive(Clone, Debug)]
pub struct TransferWitness {
    pub z: DividedElement,
    pub q: Polynomial,
    /// The expected class, e.g. `f̄₀ λ₃`.
    pub target: LambdaElement,
    /// `w` with `ψ(Z) + target = ∂w`.
    pub bounding: LambdaElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub checks: Vec<WitnessCheck>,
}

impl TransferReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &WitnessCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the five checks in order: primitivity of `Z`, `⟨Z, q⟩ = 1`, `ψ(Z)`
/// a cycle, `ψ(Z) + target = ∂(bounding)` with both sides cycles, and a
/// one-dimensional homology group in that bidegree.
pub fn verify_transfer_witness(w: &TransferWitness) -> Result<TransferReport> {
    let mut checks = Vec::new();

    let bad: Vec<u32> = (1..=w.z.degree()).filter(|&k| !dual_sq(k, &w.z).is_zero()).collect();
    checks.push(WitnessCheck {
        name: "primitive",
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("(Z)Sq^k = 0 for 1 <= k <= {}", w.z.degree())
        } else {
            format!("(Z)Sq^k != 0 for k in {bad:?}")
        },
    });

    let common = w.q.terms().filter(|m| w.z.contains(m.exponents())).count();
    let pair = pairing(&w.z, &w.q)?;
    checks.push(WitnessCheck { name: "pairing", passed: pair, detail: format!("<Z, q> = {} ({common} common terms)", pair as u8) });

    let mut nz = Normalizer::default();
    let image = nz.normalize(&psi_raw(&w.z));
    let boundary = nz.differential(&image);
    checks.push(WitnessCheck {
        name: "cycle",
        passed: boundary.is_zero(),
        detail: format!("psi(Z) has {} admissible terms, its differential {}", image.len(), boundary.len()),
    });

    let bounded = lambda::bounded_by(&image, &w.target, &w.bounding);
    let class = match lambda::same_class(&image, &w.target) {
        Ok(b) => b,
        Err(Error::NotCycle) => false,
        Err(e) => return Err(e),
    };
    checks.push(WitnessCheck {
        name: "class",
        passed: bounded && class,
        detail: format!("psi(Z) + target = d({}): {bounded}; same class: {class}", w.bounding),
    });

    let bideg = w.target.bidegree()?.or(image.bidegree()?);
    let (passed, detail) = match bideg {
        Some((s, t)) => {
            let h = lambda::homology_dim(s, t)?;
            (h == 1, format!("dim H^({s},{t}) = {h}"))
        }
        None => (false, "target and psi(Z) are both zero".into()),
    };
    checks.push(WitnessCheck { name: "homology", passed, detail });

    Ok(TransferReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{sq, Monomial};

    fn div(o: &[u32]) -> DividedElement {
        DividedElement::monomial(o.to_vec()).unwrap()
    }

    #[test]
    fn dual_sq_examples() {
        assert_eq!(dual_sq(1, &div(&[2])), div(&[1]));
        assert!(dual_sq(1, &div(&[3])).is_zero());
        assert_eq!(dual_sq(0, &div(&[5, 2])), div(&[5, 2]));
        assert!(dual_sq(4, &div(&[1, 2])).is_zero());
    }

    #[test]
    fn pairing_examples() {
        let x = Polynomial::from_monomial(Monomial::new(vec![2, 1]).unwrap());
        let y = Polynomial::from_monomial(Monomial::new(vec![1, 2]).unwrap());
        assert!(pairing(&div(&[2, 1]), &x).unwrap());
        assert!(!pairing(&div(&[2, 1]), &y).unwrap());
        assert!(pairing(&div(&[2, 2]), &x).is_err());
    }

    #[test]
    fn adjoint_on_small_cases() {
        for n in 0..7u32 {
            let src = enumerate_monomials(2, n).unwrap();
            for k in 0..=n {
                let tgt = enumerate_monomials(2, n - k).unwrap();
                for a in &tgt {
                    let f = sq(k, &Polynomial::from_monomial(a.clone()));
                    for b in &src {
                        let u = dual_sq(k, &div(b.exponents()));
                        let lhs = pairing(&u, &Polynomial::from_monomial(a.clone())).unwrap();
                        let rhs = pairing(&div(b.exponents()), &f).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn small_primitives() {
        assert!(primitives(1, 2, Policy::Pow2).unwrap().is_empty());
        assert_eq!(primitives(3, 0, Policy::Pow2).unwrap(), vec![div(&[0, 0, 0])]);
        assert_eq!(primitives(1, 3, Policy::Pow2).unwrap(), vec![div(&[3])]);
        assert_eq!(primitives(2, 3, Policy::Pow2).unwrap().len(), 3);
        for p in primitives(3, 7, Policy::Pow2).unwrap() {
            assert!(is_primitive(&p));
        }
    }

    #[test]
    fn kameko_and_psi_basics() {
        assert_eq!(dual_kameko(&div(&[0, 0, 0, 0, 0])), div(&[1, 1, 1, 1, 1]));
        assert_eq!(dual_kameko(&div(&[1, 1, 0, 0, 0])), div(&[3, 3, 1, 1, 1]));
        assert_eq!(psi_raw(&div(&[7])), LambdaElement::monomial(vec![7]));
        assert_eq!(psi_raw(&div(&[0, 4])), LambdaElement::monomial(vec![0, 4]));
        // (a^{(1)})Sq¹ = 0, so only t = 1 contributes.
        assert_eq!(psi_raw(&div(&[1, 1])), LambdaElement::parse("L1 L1").unwrap());
        assert_eq!(psi_raw(&div(&[2, 1])), LambdaElement::parse("L1 L2 + L2 L1").unwrap());
    }
}
