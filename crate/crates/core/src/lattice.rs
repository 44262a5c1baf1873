//! Integral lattices and embeddings into the standard lattices `(ℤᴺ, ±I)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use thiserror::Error;

use crate::algebra::Matrix;
use crate::{IntMatrix, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("ambient rank {ambient} is below lattice rank {rank}")]
    AmbientTooSmall { rank: usize, ambient: usize },
    #[error("lattice is not {0} definite")]
    NotDefinite(FormSign),
}

/// Which standard form `±I` is the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormSign {
    Positive,
    Negative,
}

impl FormSign {
    pub fn value(self) -> i64 {
        match self {
            FormSign::Positive => 1,
            FormSign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            FormSign::Positive => FormSign::Negative,
            FormSign::Negative => FormSign::Positive,
        }
    }
}

impl fmt::Display for FormSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormSign::Positive => "positive",
            FormSign::Negative => "negative",
        })
    }
}

impl FromStr for FormSign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "+" | "+1" | "1" | "pos" | "positive" => Ok(FormSign::Positive),
            "-" | "-1" | "neg" | "negative" => Ok(FormSign::Negative),
            other => Err(format!("unknown sign `{other}` (use + or -)")),
        }
    }
}

/// `(ℤʳ, Q)` with `Q` given by a symmetric integer Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralLattice {
    gram: IntMatrix,
}

impl IntegralLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_square() {
            return Err(LatticeError::NotSquare { rows: gram.rows(), cols: gram.cols() });
        }
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(IntegralLattice { gram })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(LatticeError::NotSquare { rows: n, cols: r.len() });
        }
        Self::new(Matrix::from_rows(rows))
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        IntegralLattice { gram: Matrix::from_fn(n, n, |i, j| if i == j { entries[i] } else { 0 }) }
    }

    /// `(ℤⁿ, ±I)`.
    pub fn standard(n: usize, sign: FormSign) -> Self {
        Self::diagonal(&vec![sign.value(); n])
    }

    pub fn empty() -> Self {
        Self::diagonal(&[])
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn negate(&self) -> Self {
        IntegralLattice { gram: self.gram.map(|&x| -x) }
    }

    pub fn determinant(&self) -> Integer {
        self.gram.map(|&x| Integer::from(x)).determinant()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs() == Integer::from(1)
    }

    /// Sylvester's criterion on `sign·Q`: every leading principal minor is
    /// positive. A zero minor already rules out definiteness.
    pub fn is_definite(&self, sign: FormSign) -> bool {
        let scaled = self.gram.map(|&x| Integer::from(sign.value() * x));
        let minors = scaled.leading_minors();
        minors.len() == self.rank() && minors.iter().all(Signed::is_positive)
    }

    /// The sign for which the lattice is definite, if any. The rank-0
    /// lattice counts as positive.
    pub fn definite_sign(&self) -> Option<FormSign> {
        [FormSign::Positive, FormSign::Negative].into_iter().find(|&s| self.is_definite(s))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        IntegralLattice { gram: self.gram.block_diag(&other.gram) }
    }

    /// True iff the lattice is isomorphic to `(ℤⁿ, ±I)`: unimodular,
    /// definite, and embeddable in the standard lattice of its own rank.
    pub fn is_standard(&self) -> bool {
        if !self.is_unimodular() {
            return false;
        }
        let Some(sign) = self.definite_sign() else { return false };
        matches!(embed(self, self.rank(), sign), Ok(Some(_)))
    }
}

impl fmt::Display for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.gram.to_rows())
    }
}

/// Images `vᵢ ∈ ℤᴺ` of the basis with `sign·(vᵢ·vⱼ) = Q(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddingWitness {
    pub vectors: Vec<Vec<i64>>,
    pub ambient: usize,
    pub sign: FormSign,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl EmbeddingWitness {
    /// Checks the form values and that the vectors are linearly independent.
    pub fn verify(&self, lattice: &IntegralLattice) -> bool {
        let r = lattice.rank();
        if self.vectors.len() != r || self.vectors.iter().any(|v| v.len() != self.ambient) {
            return false;
        }
        for i in 0..r {
            for j in 0..r {
                if self.sign.value() * dot(&self.vectors[i], &self.vectors[j]) != lattice.gram()[(i, j)] {
                    return false;
                }
            }
        }
        let m: Matrix<Rational> = Matrix::from_fn(r, self.ambient, |i, j| Rational::from_integer(self.vectors[i][j].into()));
        m.rank() == r
    }

    /// Places two witnesses in disjoint coordinates.
    pub fn direct_sum(&self, other: &Self) -> Option<Self> {
        if self.sign != other.sign {
            return None;
        }
        let ambient = self.ambient + other.ambient;
        let left = self.vectors.iter().map(|v| {
            let mut w = v.clone();
            w.resize(ambient, 0);
            w
        });
        let right = other.vectors.iter().map(|v| {
            let mut w = vec![0; self.ambient];
            w.extend_from_slice(v);
            w
        });
        Some(EmbeddingWitness { vectors: left.chain(right).collect(), ambient, sign: self.sign })
    }
}

struct Search<'a> {
    /// Required dot products, in search order.
    target: &'a [Vec<i64>],
    ambient: usize,
    placed: Vec<Vec<i64>>,
    /// `tails[j][k]` is the squared norm of `placed[j][k..]`.
    tails: Vec<Vec<i64>>,
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl Search<'_> {
    /// First coordinate from which every placed vector vanishes. Signed
    /// permutations of those coordinates fix everything placed so far, so
    /// the next vector may be taken non-negative and non-increasing there.
    fn fresh_from(&self) -> usize {
        self.placed
            .iter()
            .filter_map(|v| v.iter().rposition(|&x| x != 0))
            .map(|p| p + 1)
            .max()
            .unwrap_or(0)
    }

    fn place_all(&mut self) -> bool {
        let i = self.placed.len();
        if i == self.target.len() {
            return true;
        }
        let fresh = self.fresh_from();
        let mut v = vec![0; self.ambient];
        let mut dots = vec![0; i];
        self.extend(i, 0, self.target[i][i], fresh, &mut v, &mut dots)
    }

    fn extend(&mut self, i: usize, k: usize, rem: i64, fresh: usize, v: &mut Vec<i64>, dots: &mut Vec<i64>) -> bool {
        for j in 0..i {
            let need = self.target[i][j] - dots[j];
            // Cauchy–Schwarz on the coordinates still to be chosen
            if need * need > rem * self.tails[j][k] {
                return false;
            }
        }
        if k == self.ambient {
            if rem != 0 {
                return false;
            }
            let tails = (0..=self.ambient).map(|t| v[t..].iter().map(|x| x * x).sum()).collect();
            self.placed.push(v.clone());
            self.tails.push(tails);
            if self.place_all() {
                return true;
            }
            self.placed.pop();
            self.tails.pop();
            return false;
        }
        let bound = isqrt(rem);
        let (lo, hi) = if k >= fresh {
            let cap = if k > fresh { v[k - 1] } else { bound };
            (0, bound.min(cap))
        } else {
            (-bound, bound)
        };
        for x in lo..=hi {
            v[k] = x;
            for j in 0..i {
                dots[j] += x * self.placed[j][k];
            }
            let found = self.extend(i, k + 1, rem - x * x, fresh, v, dots);
            for j in 0..i {
                dots[j] -= x * self.placed[j][k];
            }
            if found {
                return true;
            }
        }
        v[k] = 0;
        false
    }
}

/// Complete search for an embedding `(ℤʳ, Q) ↪ (ℤᴺ, sign·I)`.
///
/// `Ok(None)` means the search was exhausted. Basis elements are placed in
/// order of decreasing norm; each new vector is canonical up to the signed
/// permutations fixing the vectors already placed, and candidates run in
/// lexicographic order, so the witness is deterministic.
pub fn embed(lattice: &IntegralLattice, ambient: usize, sign: FormSign) -> Result<Option<EmbeddingWitness>, LatticeError> {
    let r = lattice.rank();
    if ambient < r {
        return Err(LatticeError::AmbientTooSmall { rank: r, ambient });
    }
    if !lattice.is_definite(sign) {
        return Err(LatticeError::NotDefinite(sign));
    }
    let g = lattice.gram();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g[(i, i)].abs()));
    let target: Vec<Vec<i64>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| sign.value() * g[(i, j)]).collect())
        .collect();
    let mut search = Search { target: &target, ambient, placed: Vec::new(), tails: Vec::new() };
    if !search.place_all() {
        return Ok(None);
    }
    let mut vectors = vec![Vec::new(); r];
    for (pos, &i) in order.iter().enumerate() {
        vectors[i] = search.placed[pos].clone();
    }
    Ok(Some(EmbeddingWitness { vectors, ambient, sign }))
}

/// Integer basis of `{x ∈ ℤᴺ : x·vᵢ = 0}` by unimodular column reduction.
fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i128>> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    // columns of u track the unimodular transform
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut pivot_col = 0;
    for row in 0..a.len() {
        // Euclid across the row until a single pivot column remains
        while let Some(best) = (pivot_col..n).filter(|&c| a[row][c] != 0).min_by_key(|&c| a[row][c].abs()) {
            swap_cols(&mut a, &mut u, pivot_col, best);
            let p = a[row][pivot_col];
            let mut done = true;
            for c in pivot_col + 1..n {
                let q = a[row][c].div_euclid(p);
                if q != 0 {
                    for r in a.iter_mut().chain(u.iter_mut()) {
                        r[c] -= q * r[pivot_col];
                    }
                }
                done &= a[row][c] == 0;
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (pivot_col..n).map(|c| u.iter().map(|r| r[c]).collect()).collect()
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    for r in a.iter_mut().chain(u.iter_mut()) {
        r.swap(i, j);
    }
}

/// The sublattice of `(ℤᴺ, sign·I)` orthogonal to the witness image, on an
/// integral basis.
pub fn orthogonal_complement(w: &EmbeddingWitness) -> IntegralLattice {
    let basis = integer_kernel(&w.vectors, w.ambient);
    let k = basis.len();
    let gram = Matrix::from_fn(k, k, |i, j| {
        let d: i128 = basis[i].iter().zip(&basis[j]).map(|(x, y)| x * y).sum();
        i64::try_from(d * i128::from(w.sign.value())).expect("complement gram fits in i64")
    });
    IntegralLattice { gram }
}
