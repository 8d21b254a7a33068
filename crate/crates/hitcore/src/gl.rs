//! Linear substitutions, the induced action on `Q P_d`, and invariants.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{common_kernel, Gf2Matrix, Gf2Vector};
use crate::hit::{Engine, HitSpace};
use crate::poly::{substitute, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Sym,
    GL,
}

impl Group {
    pub fn parse(s: &str) -> Result<Group> {
        match s.to_ascii_lowercase().as_str() {
            "sym" | "s" => Ok(Group::Sym),
            "gl" => Ok(Group::GL),
            _ => Err(Error::Parse(format!("unknown group {s:?}"))),
        }
    }
}

/// `x_i ↦ Σ_{j ∈ images[i]} x_j` (zero-based indices).
#[derive(Clone, PartialEq, Eq)]
pub struct Substitution {
    images: Vec<Vec<usize>>,
}

impl Substitution {
    pub fn new(images: Vec<Vec<usize>>) -> Result<Self> {
        let d = images.len();
        if images.iter().flatten().any(|&j| j >= d) {
            return Err(Error::InvalidArgument("substitution image out of range".into()));
        }
        let images = images
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                // x + x = 0 over F₂.
                let mut out: Vec<usize> = Vec::new();
                for j in s {
                    if out.last() == Some(&j) {
                        out.pop();
                    } else {
                        out.push(j);
                    }
                }
                out
            })
            .collect();
        Ok(Substitution { images })
    }

    pub fn identity(d: usize) -> Self {
        Substitution { images: (0..d).map(|i| vec![i]).collect() }
    }

    /// The substitution exchanging `x_a` and `x_b` (zero-based).
    pub fn swap(d: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<Vec<usize>> = (0..d).map(|i| vec![i]).collect();
        if a >= d || b >= d {
            return Err(Error::InvalidArgument("swap index out of range".into()));
        }
        images.swap(a, b);
        Ok(Substitution { images })
    }

    /// The substitution given by a permutation `x_i ↦ x_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        Self::new(perm.iter().map(|&j| vec![j]).collect())
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    /// Column `i` holds the image of `x_i`.
    pub fn matrix(&self) -> Gf2Matrix {
        let d = self.nvars();
        let cols: Vec<Gf2Vector> = self.images.iter().map(|s| Gf2Vector::from_indices(d, s).expect("in range")).collect();
        Gf2Matrix::from_columns(d, &cols).expect("square")
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix().is_invertible()
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.nvars()];
        self.images.iter().all(|s| s.len() == 1 && !std::mem::replace(&mut seen[s[0]], true))
    }
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let rhs: Vec<String> = s.iter().map(|j| format!("x{}", j + 1)).collect();
                format!("x{} -> {}", i + 1, if rhs.is_empty() { "0".into() } else { rhs.join("+") })
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Adjacent transpositions `τ₁, …, τ_{d−1}`, plus `τ_d: x₁ ↦ x₁ + x₂` for GL.
pub fn standard_generators(d: usize, group: Group) -> Result<Vec<Substitution>> {
    if d < 2 {
        return Err(Error::InvalidArgument("standard generators need d >= 2".into()));
    }
    let mut out: Vec<Substitution> = (0..d - 1).map(|t| Substitution::swap(d, t, t + 1)).collect::<Result<_>>()?;
    if group == Group::GL {
        let mut images: Vec<Vec<usize>> = (0..d).map(|i| vec![i]).collect();
        images[0] = vec![0, 1];
        out.push(Substitution { images });
    }
    Ok(out)
}

/// `(s f)(x₁, …, x_d) = f(s(x₁), …, s(x_d))`.
pub fn apply_substitution(s: &Substitution, p: &Polynomial) -> Result<Polynomial> {
    if p.nvars() != s.nvars() {
        return Err(Error::ArityMismatch { expected: s.nvars(), found: p.nvars() });
    }
    substitute(p, &s.images, s.nvars())
}

/// Matrix of the induced map on `(Q P_d)_n` in the admissible basis.
pub fn action_matrix_on_q(h: &HitSpace, s: &Substitution) -> Result<Gf2Matrix> {
    let cols: Vec<Gf2Vector> = h
        .admissible_monomials()
        .into_iter()
        .map(|m| h.q_coordinates(&apply_substitution(s, &Polynomial::from_monomial(m))?))
        .collect::<Result<_>>()?;
    Gf2Matrix::from_columns(h.dim(), &cols)
}

fn fixed_space(h: &HitSpace, mats: &[Gf2Matrix]) -> Result<Vec<Polynomial>> {
    if mats.is_empty() || mats[0].nrows() == 0 {
        return Ok(Vec::new());
    }
    let shifted: Vec<Gf2Matrix> = mats.iter().map(Gf2Matrix::plus_identity).collect::<Result<_>>()?;
    let mut k = common_kernel(&shifted)?;
    k.finalize();
    let mut rows = k.row_vectors();
    rows.sort_by_key(|v| v.highest_one());
    rows.iter().map(|v| h.from_q_coordinates(v)).collect()
}

/// Normal forms of a basis of `(Q P_d)_n^G`.
pub fn invariants_q(engine: &Engine, d: usize, n: u32, group: Group) -> Result<Vec<Polynomial>> {
    let h = engine.hit_space(d, n)?;
    let mats: Vec<Gf2Matrix> = standard_generators(d, group)?.iter().map(|s| action_matrix_on_q(&h, s)).collect::<Result<_>>()?;
    fixed_space(&h, &mats)
}

/// Invariants of the span of a set of admissible monomials; the span must
/// be mapped into itself by every generator.
pub fn invariants_on_subspace(engine: &Engine, d: usize, n: u32, group: Group, subspace: &[Monomial]) -> Result<Vec<Polynomial>> {
    if subspace.is_empty() {
        return Ok(Vec::new());
    }
    let h = engine.hit_space(d, n)?;
    let mut pos: Vec<usize> = subspace
        .iter()
        .map(|m| {
            h.index_of(m)
                .and_then(|c| h.admissible_position(c))
                .ok_or_else(|| Error::InvalidArgument(format!("{m} is not an admissible monomial of degree {n}")))
        })
        .collect::<Result<_>>()?;
    pos.sort_unstable();
    pos.dedup();
    let mut inside = vec![false; h.dim()];
    for &p in &pos {
        inside[p] = true;
    }
    let mut restricted = Vec::new();
    for s in standard_generators(d, group)? {
        let m = action_matrix_on_q(&h, &s)?;
        for &j in &pos {
            if m.column(j).ones().into_iter().any(|i| !inside[i]) {
                return Err(Error::NotActionClosed);
            }
        }
        restricted.push(m.submatrix(&pos, &pos));
    }
    let shifted: Vec<Gf2Matrix> = restricted.iter().map(Gf2Matrix::plus_identity).collect::<Result<_>>()?;
    let mut k = common_kernel(&shifted)?;
    k.finalize();
    let mut rows = k.row_vectors();
    rows.sort_by_key(|v| v.highest_one());
    rows.iter()
        .map(|v| {
            let full: Vec<usize> = v.ones().into_iter().map(|i| pos[i]).collect();
            h.from_q_coordinates(&Gf2Vector::from_indices(h.dim(), &full)?)
        })
        .collect()
}
