//! Monodromy logarithms of the mirror family built from intersection numbers.
//!
//! Basis order is `(X; J_0..J_{r-2}; C_0..C_{r-2}; p)`. Entry `[row][col]`
//! is the coefficient of the row vector in the image of the column vector,
//! so every `N_j` is strictly lower triangular.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::json;

use crate::budget::Budget;
use crate::diamonds::{rank_profile, HodgeNumbers};
use crate::error::{Error, Result};
use crate::polarized::named_classes;
use crate::rational::{
    det, fmt_q, is_zero_matrix, mat_add, mat_mul, mat_sub, nullspace, parse_q, q, qf, rank, transpose, zeros, Matrix, Q,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData {
    pub r: usize,
    /// Keys sorted ascending; symmetric by construction.
    triple: BTreeMap<[usize; 3], Q>,
}

impl IntersectionData {
    pub fn new(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Config("r must be at least 2".into()));
        }
        Ok(IntersectionData { r, triple: BTreeMap::new() })
    }

    fn key(a: usize, b: usize, c: usize) -> [usize; 3] {
        let mut k = [a, b, c];
        k.sort_unstable();
        k
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Q) -> Result<()> {
        let n = self.r - 1;
        if a >= n || b >= n || c >= n {
            return Err(Error::Config(format!("index out of range 0..{n} in ({a},{b},{c})")));
        }
        self.triple.insert(Self::key(a, b, c), v);
        Ok(())
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Q {
        self.triple.get(&Self::key(a, b, c)).cloned().unwrap_or_else(Q::zero)
    }

    /// Lines `a b c value`; `#` starts a comment.
    pub fn parse(r: usize, text: &str) -> Result<Self> {
        let mut d = IntersectionData::new(r)?;
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(Error::Config(format!("line {}: expected `a b c value`", ln + 1)));
            }
            let idx =
                |s: &str| s.parse::<usize>().map_err(|_| Error::Config(format!("line {}: bad index {s:?}", ln + 1)));
            d.set(idx(f[0])?, idx(f[1])?, idx(f[2])?, parse_q(f[3])?)?;
        }
        Ok(d)
    }

    /// The example with `J0^3 = 9, J0^2 J1 = 3, J0 J1^2 = 1, J1^3 = 0`.
    pub fn mirror_cy() -> Self {
        let mut d = IntersectionData::new(3).expect("r = 3 is valid");
        for (k, v) in [[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]].iter().zip(crate::fixtures::CY_TRIPLE) {
            d.set(k[0], k[1], k[2], q(v)).expect("indices in range");
        }
        d
    }

    pub fn dim(&self) -> usize {
        2 * self.r
    }
}

pub fn build_nj(data: &IntersectionData, j: usize) -> Result<Matrix> {
    let n = data.r - 1;
    if j >= n {
        return Err(Error::Config(format!("j = {j} out of range 0..{n}")));
    }
    let dim = data.dim();
    let (x, jb, cb, p) = (0, 1, 1 + n, dim - 1);
    let half = qf(1, 2);
    let third = qf(1, 3);
    let mut m = zeros(dim, dim);
    m[jb + j][x] = q(-1);
    for k in 0..n {
        m[cb + k][x] = -(&half * data.get(j, j, k));
        for l in 0..n {
            m[cb + k][jb + l] = -data.get(j, k, l);
        }
    }
    m[p][x] = -(&third * data.get(j, j, j));
    for l in 0..n {
        m[p][jb + l] = -(&half * data.get(j, j, l));
    }
    m[p][cb + j] = q(-1);
    Ok(m)
}

/// `(rk M, rk M^2, rk M^3)` for a nilpotent `M`.
pub fn rank_profile_matrix(m: &Matrix) -> Result<[u64; 3]> {
    let mut pow = m.clone();
    for _ in 1..m.len() {
        pow = mat_mul(&pow, m);
    }
    if !is_zero_matrix(&pow) {
        return Err(Error::Config("matrix is not nilpotent".into()));
    }
    let m2 = mat_mul(m, m);
    let m3 = mat_mul(&m2, m);
    Ok([rank(m) as u64, rank(&m2) as u64, rank(&m3) as u64])
}

/// The unique class of `h` with this rank profile.
pub fn classify_type(profile: &[u64], h: &HodgeNumbers, budget: &Budget) -> Result<String> {
    let mut hits = Vec::new();
    for (name, d) in named_classes(h, budget)? {
        let mut rp = rank_profile(&d)?;
        rp.resize(profile.len().max(rp.len()), 0);
        let mut want = profile.to_vec();
        want.resize(rp.len(), 0);
        if rp == want {
            hits.push(name);
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        0 => Err(Error::Invariant(format!("no class of {:?} has rank profile {profile:?}", h.h))),
        _ => Err(Error::Ambiguous(hits)),
    }
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

/// `N^T Q + Q N`.
pub fn invariance_defect(n: &Matrix, qm: &Matrix) -> Matrix {
    mat_add(&mat_mul(&transpose(n), qm), &mat_mul(qm, n))
}

/// Basis of the skew (or symmetric) `Q` with `N^T Q + Q N = 0` for every `N`.
pub fn invariant_pairings(mats: &[Matrix], skew: bool) -> Vec<Matrix> {
    let dim = mats.first().map_or(0, |m| m.len());
    let mut unknowns = Vec::new();
    for i in 0..dim {
        for j in if skew { i + 1 } else { i }..dim {
            unknowns.push((i, j));
        }
    }
    let basis_elem = |&(i, j): &(usize, usize)| {
        let mut e = zeros(dim, dim);
        e[i][j] = q(1);
        if i != j {
            e[j][i] = if skew { q(-1) } else { q(1) };
        }
        e
    };
    // one column per unknown, one row per matrix entry
    let cols: Vec<Vec<Q>> = unknowns
        .iter()
        .map(|u| {
            let e = basis_elem(u);
            mats.iter().flat_map(|n| invariance_defect(n, &e).into_iter().flatten()).collect()
        })
        .collect();
    let system = transpose(&cols);
    nullspace(&system, unknowns.len())
        .into_iter()
        .map(|coef| {
            let mut m = zeros(dim, dim);
            for (c, u) in coef.iter().zip(&unknowns) {
                if !c.is_zero() {
                    let e = basis_elem(u);
                    for a in 0..dim {
                        for b in 0..dim {
                            m[a][b] += c * &e[a][b];
                        }
                    }
                }
            }
            m
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct PairingReport {
    pub solution_dim: usize,
    /// An exactly nondegenerate invariant pairing, when one was found.
    pub witness: Option<Matrix>,
    /// A vector killed by every invariant pairing: proof that none is nondegenerate.
    pub common_kernel: Option<Vec<Q>>,
}

impl PairingReport {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn analyze_pairings(mats: &[Matrix], skew: bool) -> PairingReport {
    let basis = invariant_pairings(mats, skew);
    let dim = mats.first().map_or(0, |m| m.len());
    let mut witness = None;
    // generic combinations with distinct small weights; det is a nonzero
    // polynomial in the weights iff some member is nondegenerate
    'trial: for t in 1..=8i64 {
        let mut m = zeros(dim, dim);
        for (k, b) in basis.iter().enumerate() {
            let w = q((t + 3 * k as i64).pow(2) + t);
            for a in 0..dim {
                for c in 0..dim {
                    m[a][c] += &w * &b[a][c];
                }
            }
        }
        if !det(&m).is_zero() {
            witness = Some(m);
            break 'trial;
        }
    }
    let common_kernel = if witness.is_some() {
        None
    } else {
        let stacked: Matrix = basis.iter().flat_map(|b| b.iter().cloned()).collect();
        if stacked.is_empty() {
            Some((0..dim).map(|i| if i == 0 { q(1) } else { q(0) }).collect())
        } else {
            nullspace(&stacked, dim).into_iter().next()
        }
    };
    PairingReport { solution_dim: basis.len(), witness, common_kernel }
}

/// Entries where two matrices differ, as `(row, col, left, right)`.
pub fn matrix_diff(a: &Matrix, b: &Matrix) -> Vec<(usize, usize, Q, Q)> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in 0..a[i].len() {
            if a[i][j] != b[i][j] {
                out.push((i, j, a[i][j].clone(), b[i][j].clone()));
            }
        }
    }
    out
}

pub fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!(m.iter().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn matrix_text(m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(crate::rational::fmt_q_short).collect()).collect();
    let w = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| r.iter().map(|s| format!("{s:>w$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}
