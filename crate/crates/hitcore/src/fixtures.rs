//! Version-controlled reference data for five variables: the admissible
//! basis in degree 8 and the Kameko-kernel part in degree 21, the rank-five transfer witness `Z`, the
//! invariant representative `q₂` and the cycle `f̄₀`.
//!
//! Every file is checked against a pinned SHA-256 digest before it is parsed.
//! Lambda words are stored exactly as displayed, that is in the mirrored word
//! order (`λ_{j_1}⋯λ_{j_s}` admissible iff `j_k ≤ 2 j_{k+1}`); the loaders
//! below convert them by word reversal into the convention of
//! [`crate::lambda`].

use sha2::{Digest, Sha256};

use crate::dual::{self, DividedElement, TransferWitness};
use crate::error::{Error, Result};
use crate::gl::{self, Group};
use crate::hit::{Engine, Policy};
use crate::lambda::{self, LambdaElement};
use crate::poly::{Monomial, Polynomial};

struct Fixture {
    name: &'static str,
    body: &'static str,
    sha256: &'static str,
}

const B5_8: Fixture = Fixture {
    name: "b5_8.json",
    body: include_str!("../fixtures/b5_8.json"),
    sha256: "3f1c678c38b32db93f6128635b017e1712d94c66e116f01475d88ccd9e213ed9",
};
const B5_21: Fixture = Fixture {
    name: "b5_21.json",
    body: include_str!("../fixtures/b5_21.json"),
    sha256: "64dd6771168ed5c96a548ecf3dd8f41922cb959cc7cee69c79cc6948ae2ee7df",
};
const Z: Fixture = Fixture {
    name: "z.json",
    body: include_str!("../fixtures/z.json"),
    sha256: "2b33afc2c8f6e32405ed27220eb1c208109a4bfb14826bff054e79eac984b0c4",
};
const Q2: Fixture = Fixture {
    name: "q2.json",
    body: include_str!("../fixtures/q2.json"),
    sha256: "b8f327daee14920b70ad18f43bee4186a8a9a167256dcb0fc0bfa639c2b5376a",
};
const F0BAR: Fixture = Fixture {
    name: "f0bar.json",
    body: include_str!("../fixtures/f0bar.json"),
    sha256: "391deb298a4d0f1eee1b27d21c6ff2e57e67441f52b4f7043c35ab7a8006de2d",
};

const ALL: [&Fixture; 5] = [&B5_8, &B5_21, &Z, &Q2, &F0BAR];

impl Fixture {
    fn load(&self) -> Result<Vec<Vec<u32>>> {
        let digest = hex::encode(Sha256::digest(self.body.as_bytes()));
        if digest != self.sha256 {
            return Err(Error::CacheCorrupt(format!("{}: sha256 {digest}, expected {}", self.name, self.sha256)));
        }
        serde_json::from_str(self.body).map_err(|e| Error::Parse(format!("{}: {e}", self.name)))
    }
}

/// Names and digests of all bundled fixtures, each verified.
pub fn verify_all() -> Result<Vec<(&'static str, &'static str)>> {
    ALL.iter().map(|f| f.load().map(|_| (f.name, f.sha256))).collect()
}

fn monomials(f: &Fixture) -> Result<Vec<Monomial>> {
    f.load()?.into_iter().map(Monomial::new).collect()
}

/// The 174 admissible monomials of degree 8 in five variables.
pub fn b5_8() -> Result<Vec<Monomial>> {
    monomials(&B5_8)
}

/// The 666 admissible monomials of degree 21 in five variables that span
/// the kernel of the Kameko map: the 400 with a zero exponent first, then
/// the 266 positive ones.
pub fn b5_21_kernel() -> Result<Vec<Monomial>> {
    monomials(&B5_21)
}

/// The displayed terms of `Z`, in order and with repetitions.
pub fn z_terms() -> Result<Vec<Vec<u32>>> {
    Z.load()
}

/// `Z` as an element of `Γ₅`: repeated terms cancel in pairs.
pub fn z() -> Result<DividedElement> {
    DividedElement::from_orders(&z_terms()?)
}

/// The representative `q₂ ∈ P₅` of degree 21.
pub fn q2() -> Result<Polynomial> {
    Polynomial::from_exponents(&Q2.load()?)
}

/// The words of `f̄₀` exactly as stored (mirrored order, one malformed word).
pub fn f0bar_printed() -> Result<Vec<Vec<u32>>> {
    F0BAR.load()
}

/// Replacements for a malformed word of `f̄₀`: words of the right length
/// and degree that keep the leading letters, make the whole element a cycle,
/// and are admissible in the mirrored order like the remaining words.
pub fn f0bar_repairs() -> Result<Vec<Vec<u32>>> {
    let words = f0bar_printed()?;
    let (s, t) = reference_bidegree(&words)?;
    let (bad, good): (Vec<_>, Vec<_>) = words.into_iter().partition(|w| w.len() != s || w.iter().sum::<u32>() != t);
    let [bad] = bad.as_slice() else {
        return Err(Error::InvalidArgument(format!("expected one malformed word, found {}", bad.len())));
    };
    let keep = &bad[..s - 2];
    let rest = t - keep.iter().sum::<u32>();
    let rest_of = LambdaElement::from_terms(good.iter().map(|w| mirror(w)))?;
    let mut out = Vec::new();
    for a in 0..=rest {
        let mut w = keep.to_vec();
        w.extend([a, rest - a]);
        let std = mirror(&w);
        if !lambda::is_admissible(&std) {
            continue;
        }
        let mut cand = rest_of.clone();
        cand.toggle(std);
        if lambda::is_cycle(&cand) {
            out.push(w);
        }
    }
    Ok(out)
}

/// `f̄₀ ∈ Λ^{4,18}` in the convention of [`crate::lambda`], with the
/// malformed word replaced by its unique repair.
pub fn f0bar() -> Result<LambdaElement> {
    let words = f0bar_printed()?;
    let (s, t) = reference_bidegree(&words)?;
    let repairs = f0bar_repairs()?;
    let [fix] = repairs.as_slice() else {
        return Err(Error::InvalidArgument(format!("f0bar repair is not unique: {repairs:?}")));
    };
    let words = words.into_iter().map(|w| if w.len() == s && w.iter().sum::<u32>() == t { w } else { fix.clone() });
    LambdaElement::from_terms(words.map(|w| mirror(&w)))
}

/// Bidegree shared by the majority of the words.
fn reference_bidegree(words: &[Vec<u32>]) -> Result<(usize, u32)> {
    let mut counts = std::collections::BTreeMap::new();
    for w in words {
        *counts.entry((w.len(), w.iter().sum::<u32>())).or_insert(0usize) += 1;
    }
    counts.into_iter().max_by_key(|&(_, c)| c).map(|(k, _)| k).ok_or_else(|| Error::InvalidArgument("no words".into()))
}

fn mirror(w: &[u32]) -> Vec<u32> {
    w.iter().rev().copied().collect()
}

/// `λ₃ f̄₀` and `λ₃²λ₅λ₁₁` as displayed, converted by word reversal.
pub fn transfer_target_and_bounding() -> Result<(LambdaElement, LambdaElement)> {
    let target = LambdaElement::monomial(vec![3]).reversed().mul(&f0bar()?.reversed()).reversed();
    let bounding = LambdaElement::monomial(vec![3, 3, 5, 11]).reversed();
    Ok((target, bounding))
}

/// The displayed value of `ψ₅(Z)`: `λ₃ f̄₀ + λ₃²λ₅λ₃λ₇`, converted.
pub fn psi_z_printed() -> Result<LambdaElement> {
    let (target, _) = transfer_target_and_bounding()?;
    Ok(target.add(&LambdaElement::monomial(vec![3, 3, 5, 3, 7]).reversed()))
}

/// The displayed witness: `Z`, `q₂`, target `λ₃ f̄₀`, bounding `λ₃²λ₅λ₁₁`.
pub fn transfer_witness_printed() -> Result<TransferWitness> {
    let (target, bounding) = transfer_target_and_bounding()?;
    Ok(TransferWitness { z: z()?, q: q2()?, target, bounding })
}

/// A witness assembled from scratch: the unique `GL₅`-invariant `q*` of
/// `(Q P₅)₂₁`, the first primitive of degree 21 pairing to one with it, and
/// a bounding element for `ψ(u) + λ₃ f̄₀` found by linear algebra.
pub fn transfer_witness_computed(engine: &Engine) -> Result<TransferWitness> {
    let inv = gl::invariants_q(engine, 5, 21, Group::GL)?;
    let [q] = inv.as_slice() else {
        return Err(Error::InvalidArgument(format!("expected one GL5-invariant in degree 21, found {}", inv.len())));
    };
    let mut u = None;
    for p in dual::primitives(5, 21, Policy::Pow2)? {
        if dual::pairing(&p, q)? {
            u = Some(p);
            break;
        }
    }
    let u = u.ok_or_else(|| Error::InvalidArgument("no primitive pairs with the invariant".into()))?;
    let (target, _) = transfer_target_and_bounding()?;
    let image = dual::psi(&u);
    let bounding = lambda::bounding_element(&image.add(&target))?
        .ok_or_else(|| Error::InvalidArgument("psi(u) is not homologous to the target".into()))?;
    Ok(TransferWitness { z: u, q: q.clone(), target, bounding })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_match() {
        assert_eq!(verify_all().unwrap().len(), 5);
        let tampered = Fixture { name: "t", body: "[[1]]", sha256: B5_8.sha256 };
        assert!(matches!(tampered.load(), Err(Error::CacheCorrupt(_))));
    }

    #[test]
    fn sizes() {
        assert_eq!(b5_8().unwrap().len(), 174);
        let k = b5_21_kernel().unwrap();
        assert_eq!(k.len(), 666);
        assert!(k[..400].iter().all(|m| !m.is_positive()) && k[400..].iter().all(Monomial::is_positive));
        assert_eq!(z_terms().unwrap().len(), 66);
        assert_eq!(z().unwrap().len(), 58);
        assert_eq!(q2().unwrap().len(), 12);
    }

    #[test]
    fn f0bar_repair_is_unique() {
        assert_eq!(f0bar_repairs().unwrap(), vec![vec![7, 5, 3, 3]]);
        let f = f0bar().unwrap();
        assert_eq!(f.bidegree().unwrap(), Some((4, 18)));
        assert!(f.is_admissible());
        assert!(lambda::is_cycle(&f));
        assert_eq!(lambda::adem_normalize(&f), f);
    }

    #[test]
    fn printed_target_is_a_cycle_of_the_right_bidegree() {
        let (target, bounding) = transfer_target_and_bounding().unwrap();
        assert_eq!(target.bidegree().unwrap(), Some((5, 21)));
        assert_eq!(bounding.bidegree().unwrap(), Some((4, 22)));
        assert!(lambda::is_cycle(&target));
        // Multiplying by λ₃ on either side gives the same class.
        let other = LambdaElement::monomial(vec![3]).mul(&f0bar().unwrap());
        assert!(lambda::same_class(&target, &other).unwrap());
    }

    #[test]
    fn printed_psi_value_is_consistent() {
        let (target, bounding) = transfer_target_and_bounding().unwrap();
        let psi = psi_z_printed().unwrap();
        assert!(lambda::is_cycle(&psi));
        assert!(lambda::bounded_by(&psi, &target, &bounding));
    }
}
