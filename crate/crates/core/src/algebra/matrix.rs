use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::scalar::{Field, HermitianScalar, OrderedField, Ring};

/// Dense row-major matrix over an arbitrary ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.iter_rows().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Square submatrix on the given index set.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(r0 + i, c0 + j)].clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Block diagonal `self ⊕ other`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Matrix::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                T::zero()
            }
        })
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Every division is exact, so this is valid over integral domains
    /// (integers, polynomials) as well as fields.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * pivot.clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let d = a[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Leading principal minors `det A[..k, ..k]` for `k = 1..=n`, stopping
    /// after the first zero (later minors would need pivoting).
    pub fn leading_minors(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = T::one();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let pivot = a[(k, k)].clone();
            out.push(pivot.clone());
            if pivot.is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * pivot.clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = pivot;
        }
        out
    }

    /// Rank by Gaussian elimination. `T` must be a genuine field.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let pivot = a[(rank, c)].clone();
            for i in rank + 1..self.rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone() / pivot.clone();
                for j in c..self.cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(rank, j)].clone();
                    a[(i, j)] = v;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

impl<T: HermitianScalar> Matrix<T> {
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == self[(j, i)].conj()))
    }

    /// Inertia of a Hermitian matrix by exact congruence diagonalization.
    ///
    /// Pivots on the diagonal entry of largest absolute value. When every
    /// remaining diagonal entry vanishes but some off-diagonal `h_ij` does
    /// not, the basis change `e_i ← e_i + conj(h_ij)·e_j` produces the
    /// diagonal entry `2|h_ij|² > 0` and elimination continues.
    ///
    /// The caller is responsible for passing a Hermitian matrix.
    pub fn inertia(&self) -> Inertia {
        debug_assert!(self.is_hermitian());
        let mut a = self.clone();
        let mut rem: Vec<usize> = (0..self.rows).collect();
        let mut out = Inertia::default();
        while !rem.is_empty() {
            let pivot = rem
                .iter()
                .copied()
                .filter(|&i| !a[(i, i)].is_zero())
                .max_by(|&i, &j| {
                    let (x, y) = (a[(i, i)].real_part().abs_val(), a[(j, j)].real_part().abs_val());
                    // prefer the lower index on ties so the run is deterministic
                    x.partial_cmp(&y).unwrap_or(std::cmp::Ordering::Equal).then(j.cmp(&i))
                });
            let Some(p) = pivot else {
                let off = rem
                    .iter()
                    .flat_map(|&i| rem.iter().map(move |&j| (i, j)))
                    .filter(|&(i, j)| i < j && !a[(i, j)].is_zero())
                    .max_by(|&(i, j), &(k, l)| {
                        let (x, y) = (a[(i, j)].norm_sqr(), a[(k, l)].norm_sqr());
                        x.partial_cmp(&y).unwrap_or(std::cmp::Ordering::Equal).then((k, l).cmp(&(i, j)))
                    });
                let Some((i, j)) = off else {
                    out.zero += rem.len();
                    break;
                };
                let lambda = a[(i, j)].conj();
                let lambda_bar = lambda.conj();
                for &k in &rem {
                    let v = a[(k, i)].clone() + lambda.clone() * a[(k, j)].clone();
                    a[(k, i)] = v;
                }
                for &k in &rem {
                    let v = a[(i, k)].clone() + lambda_bar.clone() * a[(j, k)].clone();
                    a[(i, k)] = v;
                }
                continue;
            };
            let d = a[(p, p)].clone();
            match d.real_part().sign() {
                1 => out.positive += 1,
                _ => out.negative += 1,
            }
            rem.retain(|&i| i != p);
            for &i in &rem {
                if a[(i, p)].is_zero() {
                    continue;
                }
                let f = a[(i, p)].clone() / d.clone();
                for &j in &rem {
                    if a[(p, j)].is_zero() {
                        continue;
                    }
                    let v = a[(i, j)].clone() - f.clone() * a[(p, j)].clone();
                    a[(i, j)] = v;
                }
            }
        }
        out
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + o[(i, j)].clone())
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - o[(i, j)].clone())
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * o[(k, j)].clone())
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.rows {
            l.entry(&&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        l.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::algebra::scalar::rat;
    use crate::{GaussianRational, Rational};
    use num_bigint::BigInt;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = int(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(7));
        assert_eq!(Matrix::<BigInt>::zeros(0, 0).determinant(), BigInt::from(1));
    }

    #[test]
    fn singular_determinant() {
        let m = int(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.determinant(), BigInt::from(0));
        assert_eq!(m.map(|x| Rational::from_integer(x.clone())).rank(), 1);
    }

    #[test]
    fn minors_of_chain() {
        let m = int(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        let minors: Vec<i64> = m.leading_minors().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(minors, vec![-2, 3, -4]);
    }

    #[test]
    fn inertia_examples() {
        let id = Matrix::<Rational>::identity(4);
        assert_eq!(id.inertia(), Inertia { positive: 4, negative: 0, zero: 0 });
        let d = Matrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(-1), rat(0)],
            vec![rat(0), rat(0), rat(0)],
        ]);
        let i = d.inertia();
        assert_eq!((i.signature(), i.zero), (0, 1));
    }

    #[test]
    fn inertia_zero_diagonal() {
        // hyperbolic plane over the Gaussian rationals
        let z = GaussianRational::zero();
        let h = Matrix::from_rows(vec![
            vec![z.clone(), GaussianRational::new(rat(1), rat(1))],
            vec![GaussianRational::new(rat(1), rat(-1)), z],
        ]);
        assert!(h.is_hermitian());
        assert_eq!(h.inertia(), Inertia { positive: 1, negative: 1, zero: 0 });
    }
}
