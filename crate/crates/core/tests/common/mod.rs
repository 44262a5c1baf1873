//! Test-side generators and independent oracles. Nothing here calls the
//! library's determinant, root isolation, signature or embedding code.
#![allow(dead_code)]

use knotlat::algebra::{rat, Gaussian};
use knotlat::seifert::SeifertMatrix;
use knotlat::{GaussianRational, Integer, Rational};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Printed Alexander polynomials as (exponent, coefficient) pairs.
pub const DELTA_K0: [(i32, i64); 9] =
    [(12, 1), (10, -1), (6, 1), (4, -1), (0, 1), (-4, -1), (-6, 1), (-10, -1), (-12, 1)];
pub const DELTA_K1: [(i32, i64); 13] = [
    (12, 2),
    (10, -3),
    (8, 1),
    (6, 2),
    (4, -3),
    (2, 1),
    (0, 1),
    (-2, 1),
    (-4, -3),
    (-6, 2),
    (-8, 1),
    (-10, -3),
    (-12, 2),
];

/// Printed trigonometric g(t): coefficients of cos(kt), k = 0..=6.
pub const G_PRINTED_NUM: [i64; 7] = [1, 2, -6, 4, 2, -6, 4];
pub const G_PRINTED_DEN: [i64; 7] = [1, 0, -2, 2, 0, -2, 2];

/// `S = J + Sym` with `J = ⊕ [[0,1],[0,0]]` has `S − Sᵀ = ⊕ [[0,1],[−1,0]]`,
/// so any symmetric `Sym` gives a valid Seifert matrix; a random unimodular
/// congruence then hides the block structure.
pub fn random_seifert(rng: &mut impl Rng, genus: usize, bound: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            s[i][j] = v;
            s[j][i] = v;
        }
    }
    for k in 0..genus {
        s[2 * k][2 * k + 1] += 1;
    }
    let p = random_unimodular(rng, n, 2 * n);
    SeifertMatrix::from_rows(congruence(&s, &p)).expect("constructed to be valid")
}

/// Product of elementary integer matrices with multipliers in {−1, 1}.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        for row in p.iter_mut() {
            row[j] += k * row[i];
        }
    }
    p
}

/// `Pᵀ A P`.
pub fn congruence(a: &[Vec<i64>], p: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let ap: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * p[k][j]).sum()).collect()).collect();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| p[k][i] * ap[k][j]).sum()).collect()).collect()
}

/// Textbook Gaussian elimination with nonzero pivot search, over any field
/// built from the library's scalar types.
pub fn naive_det<T>(mut a: Vec<Vec<T>>) -> T
where
    T: Clone + Zero + One + PartialEq + std::ops::Neg<Output = T> + std::ops::Sub<Output = T> + std::ops::Div<Output = T>,
{
    let n = a.len();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return T::zero() };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            let f = a[i][k].clone() / pivot.clone();
            for j in k..n {
                let v = a[i][j].clone() - f.clone() * a[k][j].clone();
                a[i][j] = v;
            }
        }
    }
    det
}

pub fn gaussian_rows(s: &SeifertMatrix) -> Vec<Vec<GaussianRational>> {
    s.matrix().to_rows().into_iter().map(|r| r.into_iter().map(|x| Gaussian::from_real(rat(x))).collect()).collect()
}

/// Characteristic polynomial `det(xI − A)` (ascending coefficients) of an
/// integer matrix by the Faddeev–LeVerrier recurrence.
pub fn charpoly(a: &[Vec<i64>]) -> Vec<Integer> {
    let n = a.len();
    let am: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mul = |x: &Vec<Vec<Rational>>, y: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    // c_n = 1; M_0 = 0; M_k = A M_{k−1} + c_{n−k+1} I; c_{n−k} = −tr(A M_k)/k
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am_k = mul(&am, &m);
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &am_k[i][i]);
        coeffs[n - k] = -tr / rat(k as i64);
    }
    coeffs.into_iter().map(|c| {
        assert!(c.is_integer());
        c.to_integer()
    }).collect()
}

/// Sign changes in a coefficient sequence (zeros skipped).
pub fn descartes(coeffs: &[Integer]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Eigenvalue sign count of a real symmetric integer matrix: every root of
/// its characteristic polynomial is real, so Descartes' bound is exact.
pub fn inertia_by_descartes(a: &[Vec<i64>]) -> (usize, usize, usize) {
    let p = charpoly(a);
    let zero = p.iter().take_while(|c| c.is_zero()).count();
    let trimmed = &p[zero..];
    let pos = descartes(trimmed);
    let flipped: Vec<Integer> = trimmed.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    let neg = descartes(&flipped);
    (pos, neg, zero)
}

/// All of `ℤᴺ`'s vectors of squared norm exactly `norm`.
pub fn vectors_of_norm(ambient: usize, norm: i64) -> Vec<Vec<i64>> {
    fn go(k: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut x = 0;
        while x * x <= rem {
            for v in if x == 0 { vec![0] } else { vec![x, -x] } {
                cur.push(v);
                go(k - 1, rem - x * x, cur, out);
                cur.pop();
            }
            x += 1;
        }
    }
    let mut out = Vec::new();
    if norm >= 0 {
        go(ambient, norm, &mut Vec::new(), &mut out);
    }
    out
}

/// Tries every tuple of vectors with the right norms against the full Gram
/// matrix, then requires the Gram matrix to be nonsingular (injectivity).
pub fn brute_force_embeds(gram: &[Vec<i64>], ambient: usize, sign: i64) -> bool {
    let r = gram.len();
    let by_basis: Vec<Vec<Vec<i64>>> = (0..r).map(|i| vectors_of_norm(ambient, sign * gram[i][i])).collect();
    fn go(i: usize, chosen: &mut Vec<Vec<i64>>, by_basis: &[Vec<Vec<i64>>], gram: &[Vec<i64>], sign: i64) -> bool {
        if i == by_basis.len() {
            return true;
        }
        for v in &by_basis[i] {
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(j, w)| sign * w.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == gram[i][j]);
            if fits {
                chosen.push(v.clone());
                if go(i + 1, chosen, by_basis, gram, sign) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let rows: Vec<Vec<Rational>> = gram.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    !naive_det(rows).is_zero() && go(0, &mut Vec::new(), &by_basis, gram, sign)
}
