//! Monomials and homogeneous polynomials in `F₂[x₁, …, x_d]` with the
//! unstable action of the Steenrod squares.
//!
//! Monomials are ordered first by weight vector and then by exponent
//! vector, both left-lexicographically. This is the order in which
//! admissibility is defined, so it is the [`Ord`] of [`Monomial`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// `C(a, b) mod 2`, and `0` whenever `b < 0`, `a < 0` or `b > a`.
pub fn binom_mod2(a: i64, b: i64) -> u8 {
    if a < 0 || b < 0 || b > a {
        0
    } else {
        ((a - b) & b == 0) as u8
    }
}

/// Number of ones in the binary expansion.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// The weight vector: entry `t` counts the variables whose exponent has
/// bit `t − 1` set. Trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeightVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `Σ 2^{t−1} ω_t`.
    pub fn degree(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &w)| (w as u64) << i).sum()
    }

    /// Parses `"3,3,1,1"` or `"(3,3,1,1)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(WeightVector::default());
        }
        let entries = t
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Parse(format!("weight {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(entries))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// `x₁^{e₁} ⋯ x_d^{e_d}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidArgument("a monomial needs at least one variable".into()));
        }
        if exps.iter().map(|&e| e as u64).sum::<u64>() >= 1 << 31 {
            return Err(Error::InvalidArgument("degree exceeds 2^31".into()));
        }
        Ok(Monomial { exps })
    }

    /// The constant monomial `1` in `d` variables.
    pub fn one(d: usize) -> Self {
        Monomial { exps: vec![0; d.max(1)] }
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn weight(&self) -> WeightVector {
        weight_of(&self.exps)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: other.nvars() });
        }
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn square(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| 2 * e).collect() }
    }

    /// Every exponent positive.
    pub fn is_positive(&self) -> bool {
        self.exps.iter().all(|&e| e > 0)
    }

    /// Every exponent of the form `2^a − 1`.
    pub fn is_spike(&self) -> bool {
        self.exps.iter().all(|&e| (e & (e + 1)) == 0)
    }

    /// Parses `"x1^3 x2 x5^2"`; `"1"` is the constant.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let mut exps = vec![0u32; d];
        let t = s.trim();
        if t == "1" {
            return Monomial::new(exps);
        }
        for tok in t.split(|c: char| c.is_whitespace() || c == '*').filter(|x| !x.is_empty()) {
            let tok = tok.strip_prefix('x').ok_or_else(|| Error::Parse(format!("bad factor {tok:?}")))?;
            let (var, e) = match tok.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?),
                None => (tok, 1),
            };
            let v: usize = var.parse().map_err(|_| Error::Parse(format!("bad variable in {s:?}")))?;
            if v == 0 || v > d {
                return Err(Error::Parse(format!("variable x{v} out of range for d={d}")));
            }
            exps[v - 1] += e;
        }
        Monomial::new(exps)
    }
}

pub(crate) fn weight_of(exps: &[u32]) -> WeightVector {
    let max = exps.iter().copied().max().unwrap_or(0);
    let bits = 32 - max.leading_zeros() as usize;
    let mut w = vec![0u32; bits];
    for &e in exps {
        let mut e = e;
        while e != 0 {
            let b = e.trailing_zeros() as usize;
            w[b] += 1;
            e &= e - 1;
        }
    }
    WeightVector::new(w)
}

/// Order key: weight vector first, then exponent vector.
pub(crate) fn order_cmp(a: &[u32], b: &[u32]) -> Ordering {
    weight_of(a).cmp(&weight_of(b)).then_with(|| a.cmp(b))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        order_cmp(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compares two monomials of the same arity and degree.
pub fn monomial_order(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch { expected: a.nvars(), found: b.nvars() });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { expected: a.degree(), found: b.degree() });
    }
    Ok(a.cmp(b))
}

/// A homogeneous polynomial over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    d: usize,
    degree: u32,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(d: usize, degree: u32) -> Self {
        Polynomial { d, degree, terms: BTreeSet::new() }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.nvars(), m.degree());
        p.terms.insert(m);
        p
    }

    /// Sums the given monomials; repeated terms cancel in pairs.
    pub fn from_terms(d: usize, degree: u32, terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = Polynomial::zero(d, degree);
        for m in terms {
            p.toggle(m)?;
        }
        Ok(p)
    }

    /// Polynomial from exponent vectors, all in one degree.
    pub fn from_exponents(exps: &[Vec<u32>]) -> Result<Self> {
        let first = exps.first().ok_or_else(|| Error::InvalidArgument("empty term list".into()))?;
        let d = first.len();
        let n = first.iter().sum();
        Self::from_terms(d, n, exps.iter().map(|e| Monomial::new(e.clone())).collect::<Result<Vec<_>>>()?)
    }

    /// Adds a single monomial.
    pub fn toggle(&mut self, m: Monomial) -> Result<()> {
        if m.nvars() != self.d {
            return Err(Error::ArityMismatch { expected: self.d, found: m.nvars() });
        }
        if m.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: m.degree() });
        }
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
        Ok(())
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Polynomial) -> Result<()> {
        if other.d != self.d {
            return Err(Error::ArityMismatch { expected: self.d, found: other.d });
        }
        if other.degree != self.degree && !other.is_zero() {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        for m in &other.terms {
            if !self.terms.remove(m) {
                self.terms.insert(m.clone());
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if other.d != self.d {
            return Err(Error::ArityMismatch { expected: self.d, found: other.d });
        }
        let mut out = Polynomial::zero(self.d, self.degree + other.degree);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Frobenius: `p ↦ p²`.
    pub fn square(&self) -> Polynomial {
        Polynomial { d: self.d, degree: 2 * self.degree, terms: self.terms.iter().map(Monomial::square).collect() }
    }

    /// Largest term under the monomial order.
    pub fn leading_term(&self) -> Option<&Monomial> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Calls `emit` with every exponent vector of `Sq^k(x^exps)`. Only the
/// compositions `k = Σ kᵢ` with every `C(aᵢ, kᵢ)` odd are visited; distinct
/// compositions give distinct monomials, so nothing cancels.
pub(crate) fn for_each_sq_term(k: u32, exps: &[u32], emit: &mut dyn FnMut(&[u32])) {
    let d = exps.len();
    // suffix capacity: the largest total the remaining variables can absorb.
    let mut cap = vec![0u32; d + 1];
    for i in (0..d).rev() {
        cap[i] = cap[i + 1] + exps[i];
    }
    if k > cap[0] {
        return;
    }
    let mut out = exps.to_vec();
    fn rec(i: usize, left: u32, exps: &[u32], cap: &[u32], out: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
        if i == exps.len() {
            if left == 0 {
                emit(out);
            }
            return;
        }
        if left > cap[i] {
            return;
        }
        let a = exps[i];
        // kᵢ ranges over submasks of aᵢ not exceeding `left`.
        let mut sub = a;
        loop {
            if sub <= left && left - sub <= cap[i + 1] {
                out[i] = a + sub;
                rec(i + 1, left - sub, exps, cap, out, emit);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & a;
        }
        out[i] = a;
    }
    rec(0, k, exps, &cap, &mut out, emit);
}

/// `Sq^k` of a monomial.
pub fn sq_monomial(k: u32, m: &Monomial) -> Polynomial {
    let mut p = Polynomial::zero(m.nvars(), m.degree() + k);
    for_each_sq_term(k, &m.exps, &mut |e| {
        p.terms.insert(Monomial::from_vec_unchecked(e.to_vec()));
    });
    p
}

/// `Sq^k` of a polynomial.
pub fn sq(k: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(p.d, p.degree + k);
    for m in &p.terms {
        for_each_sq_term(k, &m.exps, &mut |e| {
            let t = Monomial::from_vec_unchecked(e.to_vec());
            if !out.terms.remove(&t) {
                out.terms.insert(t);
            }
        });
    }
    out
}

/// Exponent vectors of `(Σ_{j ∈ S} y_j)^a` over F₂: each binary digit of `a`
/// goes to one variable of `S`, so the terms never cancel.
fn power_of_sum(a: u32, s: &[usize], target_d: usize) -> Vec<Vec<u32>> {
    let bits: Vec<u32> = (0..32).filter(|b| (a >> b) & 1 == 1).map(|b| 1u32 << b).collect();
    let mut out = vec![vec![0u32; target_d]];
    for bit in bits {
        let mut next = Vec::with_capacity(out.len() * s.len());
        for t in &out {
            for &j in s {
                let mut u = t.clone();
                u[j] += bit;
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Image of a monomial under the algebra map `x_i ↦ Σ_{j ∈ images[i]} y_j`
/// into `target_d` variables (indices are zero-based).
pub fn substitute_monomial(m: &Monomial, images: &[Vec<usize>], target_d: usize) -> Result<Polynomial> {
    if images.len() != m.nvars() {
        return Err(Error::ArityMismatch { expected: images.len(), found: m.nvars() });
    }
    if images.iter().flatten().any(|&j| j >= target_d) {
        return Err(Error::InvalidArgument("substitution image out of range".into()));
    }
    let mut acc: BTreeSet<Vec<u32>> = BTreeSet::new();
    acc.insert(vec![0u32; target_d]);
    for (i, &a) in m.exps.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let factor = power_of_sum(a, &images[i], target_d);
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for t in &acc {
            for f in &factor {
                let u: Vec<u32> = t.iter().zip(f).map(|(x, y)| x + y).collect();
                if !next.remove(&u) {
                    next.insert(u);
                }
            }
        }
        acc = next;
    }
    Ok(Polynomial { d: target_d, degree: m.degree(), terms: acc.into_iter().map(Monomial::from_vec_unchecked).collect() })
}

/// Linear extension of [`substitute_monomial`].
pub fn substitute(p: &Polynomial, images: &[Vec<usize>], target_d: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero(target_d, p.degree);
    for m in &p.terms {
        out.add_assign(&substitute_monomial(m, images, target_d)?)?;
    }
    Ok(out)
}

pub fn weight_vector(m: &Monomial) -> WeightVector {
    m.weight()
}

/// `C(n + d − 1, d − 1)`, or `None` on overflow.
pub fn monomial_count(d: usize, n: u32) -> Option<usize> {
    if d == 0 {
        return None;
    }
    let mut c: u128 = 1;
    let k = (d - 1) as u128;
    let top = n as u128 + k;
    for i in 0..k {
        c = c * (top - i) / (i + 1);
        if c > usize::MAX as u128 {
            return None;
        }
    }
    Some(c as usize)
}

/// All exponent vectors of degree `n` in `d` variables, unsorted.
pub(crate) fn compositions(d: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// All monomials of degree `n` in `d` variables, ascending in the monomial order.
pub fn enumerate_monomials(d: usize, n: u32) -> Result<Vec<Monomial>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    monomial_count(d, n).ok_or(Error::CountOverflow { d, n })?;
    let mut keyed: Vec<(WeightVector, Vec<u32>)> = compositions(d, n).into_iter().map(|e| (weight_of(&e), e)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, e)| Monomial::from_vec_unchecked(e)).collect())
}

/// Monomials of degree `deg ω` with weight `≤ ω` (or `< ω` when `strict`),
/// ascending. These span `P_d(ω)` and `P_d⁻(ω)` respectively.
pub fn enumerate_weight_restricted(d: usize, omega: &WeightVector, strict: bool) -> Result<Vec<Monomial>> {
    let n = u32::try_from(omega.degree()).map_err(|_| Error::InvalidArgument("weight degree too large".into()))?;
    Ok(enumerate_monomials(d, n)?
        .into_iter()
        .filter(|m| {
            let w = m.weight();
            if strict {
                w < *omega
            } else {
                w <= *omega
            }
        })
        .collect())
}

pub fn is_spike(m: &Monomial) -> bool {
    m.is_spike()
}

/// Least `u` with `α(n + u) ≤ u`.
pub fn mu(n: u64) -> u32 {
    let mut u = 0u64;
    loop {
        if alpha(n + u) as u64 <= u {
            return u as u32;
        }
        u += 1;
    }
}

/// The spike `x₁^{2^{a₁}−1} ⋯ x_r^{2^{a_r}−1}` of degree `n` with
/// `a₁ > ⋯ > a_{r−1} ≥ a_r > 0`.
pub fn minimal_spike(d: usize, n: u32) -> Result<Monomial> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if mu(n as u64) as usize > d {
        return Err(Error::NoMinimalSpike { d, n });
    }
    let mut found: Vec<Vec<u32>> = Vec::new();
    // Depth-first over strictly decreasing heights, allowing the last two to tie.
    fn rec(left: u64, prev: u32, tie_used: bool, acc: &mut Vec<u32>, d: usize, found: &mut Vec<Vec<u32>>) {
        if left == 0 {
            found.push(acc.clone());
            return;
        }
        if tie_used || acc.len() == d {
            return;
        }
        for a in (1..=prev).rev() {
            let v = (1u64 << a) - 1;
            if v > left {
                continue;
            }
            let tie = !acc.is_empty() && a == prev;
            acc.push(a);
            rec(left - v, a, tie, acc, d, found);
            acc.pop();
        }
    }
    let top = 32 - n.leading_zeros() + 1;
    let mut acc = Vec::new();
    if n == 0 {
        found.push(Vec::new());
    } else {
        // The first height is unconstrained from above; heights after it must
        // strictly decrease, except that the final two may coincide.
        for a in (1..=top).rev() {
            let v = (1u64 << a) - 1;
            if v > n as u64 {
                continue;
            }
            acc.push(a);
            rec(n as u64 - v, a, false, &mut acc, d, &mut found);
            acc.pop();
        }
    }
    found.retain(|hs| {
        // strictly decreasing except possibly the last pair
        hs.windows(2).enumerate().all(|(i, w)| w[0] > w[1] || (i + 2 == hs.len() && w[0] == w[1]))
    });
    found.sort();
    found.dedup();
    match found.len() {
        1 => {
            let mut exps = vec![0u32; d];
            for (i, &a) in found[0].iter().enumerate() {
                exps[i] = (1u32 << a) - 1;
            }
            Monomial::new(exps)
        }
        _ => Err(Error::NoMinimalSpike { d, n }),
    }
}

/// Outcome of the weight test against the minimal spike.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefilter {
    Hit,
    Unknown,
}

/// `Hit` when `ω(m)` is below the weight of the minimal spike of its degree.
pub fn singer_prefilter(m: &Monomial) -> Result<Prefilter> {
    let spike = minimal_spike(m.nvars(), m.degree())?;
    Ok(if m.weight() < spike.weight() { Prefilter::Hit } else { Prefilter::Unknown })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn poly(ts: &[&[u32]]) -> Polynomial {
        Polynomial::from_exponents(&ts.iter().map(|t| t.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_mod2(3, 2), 1);
        assert_eq!(binom_mod2(2, 3), 0);
        assert_eq!(binom_mod2(4, 2), 0);
        assert_eq!(binom_mod2(-1, 0), 0);
        assert_eq!(binom_mod2(5, -1), 0);
        assert_eq!(binom_mod2(0, 0), 1);
    }

    #[test]
    fn sq_examples() {
        assert_eq!(sq_monomial(1, &mono(&[1, 1])), poly(&[&[2, 1], &[1, 2]]));
        assert_eq!(sq_monomial(2, &mono(&[3])), poly(&[&[5]]));
        assert!(sq_monomial(3, &mono(&[2])).is_zero());
        assert!(sq(4, &Polynomial::zero(2, 3)).is_zero());
        assert!(sq(1, &poly(&[&[2, 0], &[0, 2]])).is_zero());
        assert_eq!(sq_monomial(0, &mono(&[2, 1])), poly(&[&[2, 1]]));
        // Sq²(x₁²x₂): Sq²(x₁²)x₂ + Sq¹(x₁²)Sq¹(x₂) = x₁⁴x₂ + 0.
        assert_eq!(sq_monomial(2, &mono(&[2, 1])), poly(&[&[4, 1]]));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(mono(&[15, 3, 3, 0, 0]).weight().entries(), &[3, 3, 1, 1]);
        assert_eq!(mono(&[1, 1, 1, 1, 1]).weight().entries(), &[5]);
        let w = mono(&[31, 15, 1, 0, 0]).weight();
        assert_eq!(w.entries(), &[3, 2, 2, 2, 1]);
        assert_eq!(w.degree(), 47);
    }

    #[test]
    fn order_examples() {
        assert_eq!(monomial_order(&mono(&[1, 2]), &mono(&[2, 1])).unwrap(), Ordering::Less);
        assert_eq!(monomial_order(&mono(&[2, 1]), &mono(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(monomial_order(&mono(&[1, 2]), &mono(&[3, 0])).unwrap(), Ordering::Less);
        assert!(monomial_order(&mono(&[1, 2]), &mono(&[3, 1])).is_err());
        assert!(monomial_order(&mono(&[1, 2]), &mono(&[3, 0, 0])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_monomials(1, 5).unwrap(), vec![mono(&[5])]);
        assert_eq!(enumerate_monomials(2, 2).unwrap().len(), 3);
        let all = enumerate_monomials(5, 8).unwrap();
        assert_eq!(all.len(), 495);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weight_restricted_examples() {
        let five = WeightVector::new(vec![5]);
        let le = enumerate_weight_restricted(5, &five, false).unwrap();
        assert!(le.contains(&mono(&[1, 1, 1, 1, 1])));
        assert!(le.iter().all(|m| m.weight() <= five));
        let expected: Vec<_> = enumerate_monomials(5, 5).unwrap().into_iter().filter(|m| m.weight() <= five).collect();
        assert_eq!(le, expected);
        let bottom = enumerate_monomials(3, 4).unwrap()[0].weight();
        assert!(enumerate_weight_restricted(3, &bottom, true).unwrap().is_empty());
        let w = WeightVector::new(vec![3, 3, 1, 1]);
        let l = enumerate_weight_restricted(5, &w, false).unwrap();
        assert!(l.contains(&mono(&[15, 3, 3, 0, 0])));
        assert!(l.iter().all(|m| m.weight().entries() != [3, 3, 3]));
    }

    #[test]
    fn spikes() {
        assert_eq!(minimal_spike(5, 47).unwrap(), mono(&[31, 15, 1, 0, 0]));
        assert_eq!(minimal_spike(5, 21).unwrap(), mono(&[15, 3, 3, 0, 0]));
        assert_eq!(minimal_spike(5, 22).unwrap(), mono(&[15, 7, 0, 0, 0]));
        assert_eq!(minimal_spike(5, 8).unwrap(), mono(&[7, 1, 0, 0, 0]));
        assert!(minimal_spike(2, 5).is_err());
        assert!(mono(&[7, 3, 0]).is_spike());
        assert!(!mono(&[2, 1]).is_spike());
    }

    #[test]
    fn prefilter_examples() {
        assert_eq!(singer_prefilter(&mono(&[1, 2, 2, 8, 8])).unwrap(), Prefilter::Hit);
        assert_eq!(singer_prefilter(&mono(&[15, 3, 3, 0, 0])).unwrap(), Prefilter::Unknown);
        assert_eq!(singer_prefilter(&mono(&[7, 7, 7, 0, 0])).unwrap(), Prefilter::Unknown);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(47), 3);
        assert_eq!(mu(0), 0);
        assert_eq!(mu(5), 3);
        assert_eq!(mu(99), 5);
        assert_eq!(alpha(46), 4);
        assert_eq!(mu(42), 4);
    }

    #[test]
    fn substitution_expands_binomially() {
        // x1 -> y1 + y2 on x1^3: every C(3, i) is odd.
        let p = substitute_monomial(&mono(&[3, 0]), &[vec![0, 1], vec![1]], 2).unwrap();
        assert_eq!(p, poly(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        let p = substitute_monomial(&mono(&[2]), &[vec![0, 1]], 2).unwrap();
        assert_eq!(p, poly(&[&[2, 0], &[0, 2]]));
        assert!(substitute_monomial(&mono(&[1, 1]), &[vec![], vec![0]], 1).unwrap().is_zero());
    }

    #[test]
    fn rendering_round_trip() {
        let m = mono(&[15, 1, 0, 3]);
        assert_eq!(m.to_string(), "x1^15 x2 x4^3");
        assert_eq!(Monomial::parse("x1^15 x2 x4^3", 4).unwrap(), m);
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(WeightVector::parse("(3,3,1,1)").unwrap().to_string(), "(3,3,1,1)");
    }
}
