//! Hit subspaces `A⁺P_d` in a fixed degree and the admissible monomials
//! that complement them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Vector, Insert, ReducedBasis};
use crate::poly::{compositions, enumerate_monomials, for_each_sq_term, Monomial, Polynomial, WeightVector};

/// Which Steenrod squares generate the hit space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Policy {
    /// `Sq^{2^i}` only; these generate the Steenrod algebra.
    Pow2,
    /// Every `Sq^k`, `k ≥ 1`.
    All,
}

impl Policy {
    pub fn as_str(self) -> &'static str {
        match self {
            Policy::Pow2 => "pow2",
            Policy::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Policy> {
        match s {
            "pow2" => Ok(Policy::Pow2),
            "all" => Ok(Policy::All),
            _ => Err(Error::Parse(format!("unknown policy {s:?}"))),
        }
    }

    /// The operation degrees used in degree `n`.
    pub fn squares(self, n: u32) -> Vec<u32> {
        match self {
            Policy::Pow2 => (0..32).map(|i| 1u32 << i).take_while(|&k| k <= n).collect(),
            Policy::All => (1..=n).collect(),
        }
    }
}

/// Resource limits for a hit-space build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_rows: usize,
    pub max_bytes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_rows: 200_000, max_bytes: 3 << 30 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_rows: usize::MAX, max_bytes: usize::MAX }
    }
}

/// The hit subspace of `(P_d)_n` together with its coordinate system.
#[derive(Debug)]
pub struct HitSpace {
    d: usize,
    n: u32,
    policy: Policy,
    monomials: Vec<Monomial>,
    index: HashMap<Vec<u32>, usize>,
    basis: ReducedBasis,
    admissible: Vec<usize>,
    adm_pos: Vec<u32>,
    /// Whether the elimination order is the index order of `monomials`.
    natural_order: bool,
}

/// Admissible monomials of one degree, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleBasis {
    pub d: usize,
    pub n: u32,
    pub monomials: Vec<Monomial>,
    pub weights: Vec<WeightVector>,
}

impl AdmissibleBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

impl HitSpace {
    /// Builds the hit space with the default policy and budget.
    pub fn new(d: usize, n: u32) -> Result<HitSpace> {
        Self::build(d, n, Policy::Pow2, &Budget::default())
    }

    pub fn build(d: usize, n: u32, policy: Policy, budget: &Budget) -> Result<HitSpace> {
        Self::build_ordered(d, n, policy, budget, None)
    }

    /// Builds the hit space; `order`, if given, replaces the monomial order
    /// on coordinates (a permutation of `0..len`, smallest first).
    pub fn build_ordered(d: usize, n: u32, policy: Policy, budget: &Budget, order: Option<Vec<usize>>) -> Result<HitSpace> {
        if d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        let monomials = enumerate_monomials(d, n)?;
        let len = monomials.len();
        let index: HashMap<Vec<u32>, usize> = monomials.iter().enumerate().map(|(i, m)| (m.exponents().to_vec(), i)).collect();
        let natural_order = order.is_none();
        let mut basis = match order {
            Some(o) => ReducedBasis::with_order(o)?,
            None => ReducedBasis::new(len),
        };
        let mut coords: Vec<usize> = Vec::new();
        for k in policy.squares(n) {
            for g in compositions(d, n - k) {
                coords.clear();
                for_each_sq_term(k, &g, &mut |e| coords.push(index[e]));
                if coords.is_empty() {
                    continue;
                }
                let w = basis.words_from_coords(&coords);
                if let Insert::NewPivot(_) = basis.insert_rank_words(w) {
                    if basis.rank() > budget.max_rows {
                        return Err(Error::BudgetExceeded { what: "hit basis rows", needed: basis.rank(), limit: budget.max_rows });
                    }
                    if basis.heap_bytes() > budget.max_bytes {
                        return Err(Error::BudgetExceeded { what: "hit basis bytes", needed: basis.heap_bytes(), limit: budget.max_bytes });
                    }
                }
            }
        }
        let admissible = basis.non_pivots();
        let mut adm_pos = vec![u32::MAX; len];
        for (i, &c) in admissible.iter().enumerate() {
            adm_pos[c] = i as u32;
        }
        Ok(HitSpace { d, n, policy, monomials, index, basis, admissible, adm_pos, natural_order })
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn policy(&self) -> Policy {
        self.policy
    }

    pub fn reduced_basis(&self) -> &ReducedBasis {
        &self.basis
    }

    /// Rank of the hit space.
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// `dim (Q P_d)_n`.
    pub fn dim(&self) -> usize {
        self.admissible.len()
    }

    /// All monomials of the degree, in coordinate order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m.exponents()).copied()
    }

    /// Coordinate indices of the admissible monomials.
    pub fn admissible_indices(&self) -> &[usize] {
        &self.admissible
    }

    /// Position of coordinate `c` among the admissible monomials.
    pub fn admissible_position(&self, c: usize) -> Option<usize> {
        match self.adm_pos.get(c) {
            Some(&p) if p != u32::MAX => Some(p as usize),
            _ => None,
        }
    }

    pub fn admissible_monomials(&self) -> Vec<Monomial> {
        self.admissible.iter().map(|&c| self.monomials[c].clone()).collect()
    }

    pub fn admissible_basis(&self) -> AdmissibleBasis {
        let monomials = self.admissible_monomials();
        let weights = monomials.iter().map(Monomial::weight).collect();
        AdmissibleBasis { d: self.d, n: self.n, monomials, weights }
    }

    pub fn is_admissible(&self, m: &Monomial) -> bool {
        self.index_of(m).is_some_and(|c| self.adm_pos[c] != u32::MAX)
    }

    fn coords(&self, p: &Polynomial) -> Result<Vec<usize>> {
        if p.nvars() != self.d {
            return Err(Error::ArityMismatch { expected: self.d, found: p.nvars() });
        }
        if !p.is_zero() && p.degree() != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: p.degree() });
        }
        Ok(p.terms().map(|m| self.index[m.exponents()]).collect())
    }

    pub fn vector_of(&self, p: &Polynomial) -> Result<Gf2Vector> {
        Gf2Vector::from_indices(self.monomials.len(), &self.coords(p)?)
    }

    pub fn polynomial_of(&self, v: &Gf2Vector) -> Result<Polynomial> {
        Polynomial::from_terms(self.d, self.n, v.ones().into_iter().map(|c| self.monomials[c].clone()))
    }

    /// Whether `p` is hit.
    pub fn hit_test(&self, p: &Polynomial) -> Result<bool> {
        self.basis.member(&self.vector_of(p)?)
    }

    /// Representative of `p` mod hit supported on admissible monomials.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let nf = self.basis.normal_form_coords(&self.coords(p)?);
        Polynomial::from_terms(self.d, self.n, nf.into_iter().map(|c| self.monomials[c].clone()))
    }

    /// Whether `p ≡ q` modulo hit elements and `P_d⁻(ω)`, i.e. whether the
    /// two agree as classes of `Q P_d(ω)`. Reduction never raises the weight,
    /// so it suffices to look at the normal form of the difference.
    pub fn congruent_below(&self, p: &Polynomial, q: &Polynomial, omega: &WeightVector) -> Result<bool> {
        Ok(self.normal_form(&p.add(q)?)?.terms().all(|m| m.weight() < *omega))
    }

    /// Coordinates of `[p]` with respect to the admissible basis.
    pub fn q_coordinates(&self, p: &Polynomial) -> Result<Gf2Vector> {
        let nf = self.basis.normal_form_coords(&self.coords(p)?);
        let pos: Vec<usize> = nf.into_iter().map(|c| self.adm_pos[c] as usize).collect();
        Gf2Vector::from_indices(self.dim(), &pos)
    }

    /// Polynomial with the given admissible coordinates.
    pub fn from_q_coordinates(&self, v: &Gf2Vector) -> Result<Polynomial> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), found: v.len() });
        }
        Polynomial::from_terms(self.d, self.n, v.ones().into_iter().map(|i| self.monomials[self.admissible[i]].clone()))
    }

    /// Distinct weight vectors of the degree, ascending.
    pub fn weights(&self) -> Vec<WeightVector> {
        let mut w: Vec<WeightVector> = self.monomials.iter().map(Monomial::weight).collect();
        w.dedup();
        w
    }

    /// `dim Q P_d(ω) = dim P_d(ω) − dim((H ∩ P_d(ω)) + P_d⁻(ω))`, with the
    /// admissible monomials of weight exactly `ω` as a basis.
    pub fn q_omega(&self, omega: &WeightVector) -> Result<QOmega> {
        if omega.degree() != self.n as u64 {
            return Err(Error::DegreeMismatch { expected: self.n, found: omega.degree() as u32 });
        }
        // Monomials are sorted by weight first, so P(ω) and P⁻(ω) are
        // initial segments of the coordinates.
        let hi = self.monomials.partition_point(|m| m.weight() <= *omega);
        let lo = self.monomials.partition_point(|m| m.weight() < *omega);
        if !self.natural_order {
            return self.q_omega_by_elimination(omega, lo, hi);
        }
        // Pivots are order-maximal, so a row with pivot below `lo` lies in
        // P⁻(ω) and rows with pivots in lo..hi are independent modulo it.
        let dim = hi - lo - self.basis.pivots_in_rank_range(lo, hi);
        let start = self.admissible.partition_point(|&c| c < lo);
        let end = self.admissible.partition_point(|&c| c < hi);
        let basis: Vec<Monomial> = self.admissible[start..end].iter().map(|&c| self.monomials[c].clone()).collect();
        debug_assert_eq!(basis.len(), dim);
        Ok(QOmega { omega: omega.clone(), dim, basis })
    }

    /// `Q P_d(ω)` by explicit elimination of `P⁻(ω) + H` on `P(ω) ⊕ P⁻(ω)`.
    fn q_omega_by_elimination(&self, omega: &WeightVector, lo: usize, hi: usize) -> Result<QOmega> {
        let mut sum = ReducedBasis::new(hi);
        for c in 0..lo {
            sum.insert_reduce(&Gf2Vector::unit(hi, c)?)?;
        }
        for v in self.basis.rows_below_rank(hi) {
            sum.insert_reduce(&v)?;
        }
        let basis: Vec<Monomial> = sum.non_pivots().into_iter().map(|c| self.monomials[c].clone()).collect();
        Ok(QOmega { omega: omega.clone(), dim: hi - sum.rank(), basis })
    }
}

/// One weight stratum of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QOmega {
    pub omega: WeightVector,
    pub dim: usize,
    pub basis: Vec<Monomial>,
}

impl QOmega {
    /// Dimensions of the parts with and without a zero exponent.
    pub fn split(&self) -> (usize, usize) {
        let plus = self.basis.iter().filter(|m| m.is_positive()).count();
        (self.basis.len() - plus, plus)
    }
}

/// Splits into monomials with some zero exponent and those with none.
pub fn split_q0_qplus(b: &AdmissibleBasis) -> (Vec<Monomial>, Vec<Monomial>) {
    b.monomials.iter().cloned().partition(|m| !m.is_positive())
}

/// Memoizing front end for hit-space computations.
#[derive(Debug, Default)]
pub struct Engine {
    budget: Budget,
    spaces: Mutex<HashMap<(usize, u32, Policy), Arc<HitSpace>>>,
}

impl Engine {
    pub fn new(budget: Budget) -> Self {
        Engine { budget, spaces: Mutex::new(HashMap::new()) }
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn hit_space_with(&self, d: usize, n: u32, policy: Policy) -> Result<Arc<HitSpace>> {
        let key = (d, n, policy);
        if let Some(h) = self.spaces.lock().expect("engine lock").get(&key) {
            return Ok(Arc::clone(h));
        }
        let h = Arc::new(HitSpace::build(d, n, policy, &self.budget)?);
        self.spaces.lock().expect("engine lock").insert(key, Arc::clone(&h));
        Ok(h)
    }

    pub fn hit_space(&self, d: usize, n: u32) -> Result<Arc<HitSpace>> {
        self.hit_space_with(d, n, Policy::Pow2)
    }

    pub fn admissible_basis(&self, d: usize, n: u32) -> Result<AdmissibleBasis> {
        Ok(self.hit_space(d, n)?.admissible_basis())
    }

    pub fn dim(&self, d: usize, n: u32) -> Result<usize> {
        Ok(self.hit_space(d, n)?.dim())
    }

    /// `|B_d⁺(n)|`, the admissible monomials with every exponent positive.
    pub fn dim_plus(&self, d: usize, n: u32) -> Result<usize> {
        if (n as usize) < d {
            return Ok(0);
        }
        Ok(self.hit_space(d, n)?.admissible_monomials().iter().filter(|m| m.is_positive()).count())
    }

    /// `Σ_{1 ≤ r < d} C(d, r) · dim (Q P_r⁺)_n`.
    pub fn dim_q0_formula(&self, d: usize, n: u32) -> Result<usize> {
        let mut total = 0usize;
        for r in 1..d {
            total += binomial(d, r) * self.dim_plus(r, n)?;
        }
        Ok(total)
    }

    /// Drops memoized spaces.
    pub fn clear(&self) {
        self.spaces.lock().expect("engine lock").clear();
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut c = 1usize;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// The hit space with the default policy and budget.
pub fn hit_subspace(d: usize, n: u32) -> Result<HitSpace> {
    HitSpace::new(d, n)
}

pub fn admissible_basis(d: usize, n: u32) -> Result<AdmissibleBasis> {
    Ok(HitSpace::new(d, n)?.admissible_basis())
}

/// Whether a homogeneous polynomial is hit.
pub fn hit_test(p: &Polynomial) -> Result<bool> {
    HitSpace::new(p.nvars(), p.degree())?.hit_test(p)
}

pub fn normal_form_q(p: &Polynomial) -> Result<Polynomial> {
    HitSpace::new(p.nvars(), p.degree())?.normal_form(p)
}
