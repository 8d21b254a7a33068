//! The mod-2 lambda algebra.
//!
//! A monomial `λ_{j₁}⋯λ_{j_s}` has bidegree `(s, Σ j_k)` and is admissible
//! when `2j_k ≥ j_{k+1}` throughout. The differential maps `(s, t)` to
//! `(s + 1, t − 1)`; the homology at `(s, t)` is `Ext^{s, s+t}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Vector, ReducedBasis};
use crate::poly::binom_mod2;

/// A finite F₂-linear combination of lambda monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LambdaElement {
    terms: BTreeSet<Vec<u32>>,
}

impl LambdaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(j: Vec<u32>) -> Self {
        LambdaElement { terms: BTreeSet::from([j]) }
    }

    /// Sums the given monomials (repeated terms cancel in pairs).
    pub fn from_terms(terms: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut out = Self::zero();
        for t in terms {
            out.toggle(t);
        }
        out.bidegree()?;
        Ok(out)
    }

    pub fn toggle(&mut self, j: Vec<u32>) {
        if !self.terms.remove(&j) {
            self.terms.insert(j);
        }
    }

    pub fn add(&self, other: &LambdaElement) -> LambdaElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &LambdaElement) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &LambdaElement) -> LambdaElement {
        let mut out = Self::zero();
        for a in &self.terms {
            for b in &other.terms {
                let mut j = a.clone();
                j.extend_from_slice(b);
                out.toggle(j);
            }
        }
        out
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

    pub fn contains(&self, j: &[u32]) -> bool {
        self.terms.contains(j)
    }

    /// `(s, t)` of the terms; `None` for zero, an error if inhomogeneous.
    pub fn bidegree(&self) -> Result<Option<(usize, u32)>> {
        let mut it = self.terms.iter().map(|j| (j.len(), j.iter().sum::<u32>()));
        let Some(first) = it.next() else { return Ok(None) };
        if it.all(|b| b == first) {
            Ok(Some(first))
        } else {
            Err(Error::InvalidArgument("inhomogeneous lambda element".into()))
        }
    }

    /// Reverses every word. This identifies the algebra with its mirror image,
    /// in which admissibility reads `j_k ≤ 2j_{k+1}`; `∂` commutes with it.
    pub fn reversed(&self) -> LambdaElement {
        LambdaElement { terms: self.terms.iter().map(|j| j.iter().rev().copied().collect()).collect() }
    }

    pub fn is_admissible(&self) -> bool {
        self.terms.iter().all(|j| is_admissible(j))
    }

    /// Parses `L3 L5 L6 L4 + L3^2 L7 L5`; `λ` is accepted for `L`, `1` is the
    /// empty monomial and `0` the zero element.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term == "1" {
                terms.push(Vec::new());
                continue;
            }
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut j = Vec::new();
            for tok in term.split_whitespace() {
                let body = tok
                    .strip_prefix('L')
                    .or_else(|| tok.strip_prefix('λ'))
                    .ok_or_else(|| Error::Parse(format!("bad lambda factor {tok:?}")))?;
                let (idx, pow) = match body.split_once('^') {
                    Some((a, b)) => (a, b),
                    None => (body, "1"),
                };
                let idx: u32 = idx.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
                let pow: usize = pow.parse().map_err(|_| Error::Parse(format!("bad power in {tok:?}")))?;
                j.extend(std::iter::repeat_n(idx, pow));
            }
            terms.push(j);
        }
        Self::from_terms(terms)
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|j| render_monomial(j)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaElement({self})")
    }
}

pub fn render_monomial(j: &[u32]) -> String {
    if j.is_empty() {
        return "1".into();
    }
    j.iter().map(|i| format!("L{i}")).collect::<Vec<_>>().join(" ")
}

pub fn is_admissible(j: &[u32]) -> bool {
    j.windows(2).all(|w| 2 * w[0] >= w[1])
}

/// `j_{k+1} − 2j_k` for the pair `λ_{j_k} λ_{j_{k+1}}`; positive exactly when
/// the pair is inadmissible.
pub fn pair_excess(i: u32, m: u32) -> i64 {
    m as i64 - 2 * i as i64
}

/// The Adem relation: for `m = 2i + d + 1` with `d ≥ 0`,
/// `λ_i λ_m = Σ_j C(d−j−1, j) λ_{i+d−j} λ_{2i+1+j}`. Every pair returned is
/// admissible. Panics if the pair is already admissible.
pub fn rewrite_pair(i: u32, m: u32) -> Vec<(u32, u32)> {
    assert!(m > 2 * i, "λ{i} λ{m} is admissible");
    let d = m - 2 * i - 1;
    (0..=d).filter(|&j| binom_mod2(d as i64 - j as i64 - 1, j as i64) == 1).map(|j| (i + d - j, 2 * i + 1 + j)).collect()
}

/// Which inadmissible pair gets rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Adem normalization with a memo of monomial normal forms.
#[derive(Debug)]
pub struct Normalizer {
    strategy: Strategy,
    memo: HashMap<Vec<u32>, LambdaElement>,
}

impl Default for Normalizer {
    fn default() -> Self {
        Self::new(Strategy::Leftmost)
    }
}

impl Normalizer {
    pub fn new(strategy: Strategy) -> Self {
        Normalizer { strategy, memo: HashMap::new() }
    }

    fn bad_pair(&self, j: &[u32]) -> Option<usize> {
        let mut it = (0..j.len().saturating_sub(1)).filter(|&k| 2 * j[k] < j[k + 1]);
        match self.strategy {
            Strategy::Leftmost => it.next(),
            Strategy::Rightmost => it.next_back(),
        }
    }

    pub fn normalize_monomial(&mut self, j: &[u32]) -> LambdaElement {
        let Some(k) = self.bad_pair(j) else {
            return LambdaElement::monomial(j.to_vec());
        };
        if let Some(hit) = self.memo.get(j) {
            return hit.clone();
        }
        let mut out = LambdaElement::zero();
        for (a, b) in rewrite_pair(j[k], j[k + 1]) {
            let mut next = j.to_vec();
            next[k] = a;
            next[k + 1] = b;
            out.add_assign(&self.normalize_monomial(&next));
        }
        self.memo.insert(j.to_vec(), out.clone());
        out
    }

    pub fn normalize(&mut self, el: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for j in el.terms() {
            out.add_assign(&self.normalize_monomial(j));
        }
        out
    }

    /// `∂` as a derivation, normalized.
    pub fn differential(&mut self, el: &LambdaElement) -> LambdaElement {
        self.normalize(&differential_raw(el))
    }
}

pub fn adem_normalize(el: &LambdaElement) -> LambdaElement {
    Normalizer::default().normalize(el)
}

/// `∂λ_n = Σ_{j≥1} C(n−j, j) λ_{n−j} λ_{j−1}`; every term is admissible.
pub fn differential_generator(n: u32) -> LambdaElement {
    let mut out = LambdaElement::zero();
    for j in 1..=n / 2 {
        if binom_mod2((n - j) as i64, j as i64) == 1 {
            out.toggle(vec![n - j, j - 1]);
        }
    }
    out
}

/// The Leibniz expansion of `∂`, without normalization.
pub fn differential_raw(el: &LambdaElement) -> LambdaElement {
    let mut out = LambdaElement::zero();
    for j in el.terms() {
        for k in 0..j.len() {
            for g in differential_generator(j[k]).terms() {
                let mut t = Vec::with_capacity(j.len() + 1);
                t.extend_from_slice(&j[..k]);
                t.extend_from_slice(g);
                t.extend_from_slice(&j[k + 1..]);
                out.toggle(t);
            }
        }
    }
    out
}

pub fn differential(el: &LambdaElement) -> LambdaElement {
    Normalizer::default().differential(el)
}

/// `λ_j ↦ λ_{2j+1}` factorwise.
pub fn sq0_lambda(el: &LambdaElement) -> LambdaElement {
    let mut out = LambdaElement::zero();
    for j in el.terms() {
        out.toggle(j.iter().map(|i| 2 * i + 1).collect());
    }
    out
}

/// Admissible `J` with `ℓ(J) = s` and `Σ J = t`, lexicographically ascending.
pub fn admissible_monomials(s: usize, t: u32) -> Vec<Vec<u32>> {
    fn rec(prev: Option<u32>, left: usize, t: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            if t == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = prev.map_or(t, |p| t.min(2 * p));
        for j in 0..=hi {
            // The remaining left − 1 indices are at most 2j, 4j, …
            let mut cap: u64 = 0;
            let mut x = j as u64;
            for _ in 1..left {
                x *= 2;
                cap += x;
                if cap >= t as u64 {
                    break;
                }
            }
            if (j as u64) + cap < t as u64 {
                continue;
            }
            cur.push(j);
            rec(Some(j), left - 1, t - j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(None, s, t, &mut Vec::with_capacity(s), &mut out);
    out
}

fn coordinates(el: &LambdaElement, index: &HashMap<Vec<u32>, usize>, len: usize) -> Result<Gf2Vector> {
    let mut v = Gf2Vector::zeros(len);
    for j in el.terms() {
        let c = *index.get(j).ok_or_else(|| Error::InvalidArgument(format!("{} is outside the expected bidegree", render_monomial(j))))?;
        v.flip(c)?;
    }
    Ok(v)
}

fn index_of(basis: &[Vec<u32>]) -> HashMap<Vec<u32>, usize> {
    basis.iter().enumerate().map(|(i, j)| (j.clone(), i)).collect()
}

/// Span of `∂(Λ^{s−1, t+1})` inside `Λ^{s,t}` in admissible coordinates.
fn boundaries(nz: &mut Normalizer, s: usize, t: u32, index: &HashMap<Vec<u32>, usize>) -> Result<ReducedBasis> {
    let mut b = ReducedBasis::new(index.len());
    if s == 0 {
        return Ok(b);
    }
    for j in admissible_monomials(s - 1, t + 1) {
        let v = coordinates(&nz.differential(&LambdaElement::monomial(j)), index, index.len())?;
        b.insert_reduce(&v)?;
    }
    Ok(b)
}

/// Rank of `∂: Λ^{s,t} → Λ^{s+1,t−1}`.
fn outgoing_rank(nz: &mut Normalizer, s: usize, t: u32) -> Result<usize> {
    if t == 0 {
        return Ok(0);
    }
    let target = admissible_monomials(s + 1, t - 1);
    let index = index_of(&target);
    let mut b = ReducedBasis::new(target.len());
    for j in admissible_monomials(s, t) {
        let v = coordinates(&nz.differential(&LambdaElement::monomial(j)), &index, target.len())?;
        b.insert_reduce(&v)?;
    }
    Ok(b.rank())
}

/// `dim H^{s,t}(Λ) = dim Ext^{s, s+t}`.
pub fn homology_dim(s: usize, t: u32) -> Result<usize> {
    let mut nz = Normalizer::default();
    let here = admissible_monomials(s, t);
    let index = index_of(&here);
    let incoming = boundaries(&mut nz, s, t, &index)?.rank();
    let outgoing = outgoing_rank(&mut nz, s, t)?;
    Ok(here.len() - incoming - outgoing)
}

pub fn is_cycle(el: &LambdaElement) -> bool {
    differential(el).is_zero()
}

/// Whether two cycles of the same bidegree differ by a boundary.
pub fn same_class(a: &LambdaElement, b: &LambdaElement) -> Result<bool> {
    let mut nz = Normalizer::default();
    let sum = nz.normalize(&a.add(b));
    for x in [a, b] {
        if !nz.differential(x).is_zero() {
            return Err(Error::NotCycle);
        }
    }
    let (s, t) = match (a.bidegree()?, b.bidegree()?) {
        (Some(x), Some(y)) if x != y => {
            return Err(Error::DegreeMismatch { expected: x.1, found: y.1 });
        }
        (Some(x), _) | (None, Some(x)) => x,
        (None, None) => return Ok(true),
    };
    if sum.is_zero() {
        return Ok(true);
    }
    let basis = admissible_monomials(s, t);
    let index = index_of(&basis);
    let bd = boundaries(&mut nz, s, t, &index)?;
    bd.member(&coordinates(&sum, &index, basis.len())?)
}

/// Some `w` with `∂w = x` (after normalization), or `None` if `x` is not a
/// boundary.
pub fn bounding_element(x: &LambdaElement) -> Result<Option<LambdaElement>> {
    let mut nz = Normalizer::default();
    let x = nz.normalize(x);
    let Some((s, t)) = x.bidegree()? else { return Ok(Some(LambdaElement::zero())) };
    if s == 0 {
        return Ok(None);
    }
    let here = admissible_monomials(s, t);
    let index = index_of(&here);
    let source = admissible_monomials(s - 1, t + 1);
    // Coordinates 0..m record the combination, m.. the boundary; the latter
    // rank higher, so they are eliminated first.
    let m = source.len();
    let mut b = ReducedBasis::new(m + here.len());
    for (i, j) in source.iter().enumerate() {
        let dv = coordinates(&nz.differential(&LambdaElement::monomial(j.clone())), &index, here.len())?;
        let mut bits: Vec<usize> = dv.ones().into_iter().map(|c| c + m).collect();
        bits.push(i);
        b.insert_reduce(&Gf2Vector::from_indices(m + here.len(), &bits)?)?;
    }
    let xv = coordinates(&x, &index, here.len())?;
    let target = Gf2Vector::from_indices(m + here.len(), &xv.ones().into_iter().map(|c| c + m).collect::<Vec<_>>())?;
    let rest = b.reduce_to_normal_form(&target)?;
    if rest.ones().iter().any(|&c| c >= m) {
        return Ok(None);
    }
    Ok(Some(LambdaElement::from_terms(rest.ones().into_iter().map(|i| source[i].clone()))?))
}

/// Whether `a + b = ∂w` after normalization.
pub fn bounded_by(a: &LambdaElement, b: &LambdaElement, w: &LambdaElement) -> bool {
    let mut nz = Normalizer::default();
    let lhs = nz.normalize(&a.add(b));
    lhs == nz.differential(w)
}
