//! Exact and modular linear algebra.
//!
//! Topological invariants here must be *exact*, so this module provides:
//!
//! * sparse integer matrices with rank computation over `GF(p)`
//!   (persistence-style column reduction) and over `ℚ` (same reduction with
//!   exact rationals), combined into [`SparseIntMatrix::rank_exact`]: two
//!   independent 31-bit primes must agree, otherwise the exact rational
//!   elimination arbitrates;
//! * exact determinants of dense integer matrices by Chinese remaindering
//!   over enough 31-bit primes to exceed the Hadamard bound (rigorous, no
//!   probabilistic shortcut), plus a fraction-free Bareiss elimination used
//!   as an independent cross-check on small matrices;
//! * exact characteristic polynomials via the Faddeev–LeVerrier recursion
//!   (all divisions are exact over the integers);
//! * exact rational kernels (reduced row echelon form over `ℚ`, primitive
//!   integer basis vectors);
//! * floating-point symmetric eigenvalue wrappers for spectra.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// First prime of the two-prime modular rank fast path.
pub const RANK_PRIME_A: u64 = 2_147_483_629;
/// Second prime of the two-prime modular rank fast path.
pub const RANK_PRIME_B: u64 = 2_147_483_587;

#[inline]
fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31 keeps the product below 2^62.
    a * b % p
}

fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, a, p);
        }
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// A sparse integer matrix stored by columns; each column lists
/// `(row, value)` pairs sorted by row index.
#[derive(Clone, Debug)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    /// An all-zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> SparseIntMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                cols[i as usize].push((j as u32, v));
            }
        }
        // Row-major traversal already yields sorted row indices per new column.
        SparseIntMatrix { rows: self.ncols(), cols }
    }

    /// Rank over `GF(p)` by column reduction: each column is reduced against
    /// previously stored pivot columns sharing its lowest (largest-index)
    /// nonzero row until it either empties or claims a new pivot row.
    pub fn rank_mod(&self, p: u64) -> usize {
        let mut pivot_of_row: Vec<u32> = vec![u32::MAX; self.rows];
        let mut reduced: Vec<Vec<(u32, u64)>> = Vec::new();
        let mut rank = 0usize;
        let mut scratch: Vec<(u32, u64)> = Vec::new();
        for col in &self.cols {
            let mut c: Vec<(u32, u64)> = col
                .iter()
                .filter_map(|&(r, v)| {
                    let vm = v.rem_euclid(p as i64) as u64;
                    (vm != 0).then_some((r, vm))
                })
                .collect();
            while let Some(&(low, val)) = c.last() {
                let k = pivot_of_row[low as usize];
                if k == u32::MAX {
                    let inv = mod_inv(val, p);
                    for e in &mut c {
                        e.1 = mod_mul(e.1, inv, p);
                    }
                    pivot_of_row[low as usize] = reduced.len() as u32;
                    reduced.push(std::mem::take(&mut c));
                    rank += 1;
                    break;
                }
                sub_scaled_mod(&c, &reduced[k as usize], val, p, &mut scratch);
                std::mem::swap(&mut c, &mut scratch);
            }
        }
        rank
    }

    /// Exact rank over `ℚ` by the same column reduction with rational
    /// arithmetic. Slow; used as the arbiter of last resort.
    pub fn rank_rational(&self) -> usize {
        let mut pivot_of_row: Vec<u32> = vec![u32::MAX; self.rows];
        let mut reduced: Vec<Vec<(u32, BigRational)>> = Vec::new();
        let mut rank = 0usize;
        for col in &self.cols {
            let mut c: Vec<(u32, BigRational)> = col
                .iter()
                .map(|&(r, v)| (r, BigRational::from(BigInt::from(v))))
                .collect();
            while let Some((low, val)) = c.last().cloned() {
                let k = pivot_of_row[low as usize];
                if k == u32::MAX {
                    for e in &mut c {
                        let scaled = &e.1 / &val;
                        e.1 = scaled;
                    }
                    pivot_of_row[low as usize] = reduced.len() as u32;
                    reduced.push(c);
                    rank += 1;
                    break;
                }
                c = sub_scaled_rational(&c, &reduced[k as usize], &val);
            }
        }
        rank
    }

    /// Exact rank: two independent primes must agree; on the (practically
    /// impossible) event of disagreement, exact rational elimination decides.
    pub fn rank_exact(&self) -> usize {
        let (a, b) = rayon::join(|| self.rank_mod(RANK_PRIME_A), || self.rank_mod(RANK_PRIME_B));
        if a == b {
            a
        } else {
            self.rank_rational()
        }
    }
}

/// `out = c - val * pivot` over `GF(p)`, merging sorted columns.
fn sub_scaled_mod(
    c: &[(u32, u64)],
    pivot: &[(u32, u64)],
    val: u64,
    p: u64,
    out: &mut Vec<(u32, u64)>,
) {
    out.clear();
    let (mut i, mut j) = (0usize, 0usize);
    while i < c.len() || j < pivot.len() {
        let take_c = j >= pivot.len() || (i < c.len() && c[i].0 < pivot[j].0);
        let take_p = i >= c.len() || (j < pivot.len() && pivot[j].0 < c[i].0);
        if take_c {
            out.push(c[i]);
            i += 1;
        } else if take_p {
            let v = p - mod_mul(val, pivot[j].1, p);
            if v != p {
                out.push((pivot[j].0, v % p));
            }
            j += 1;
        } else {
            let v = (c[i].1 + p - mod_mul(val, pivot[j].1, p)) % p;
            if v != 0 {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
}

fn sub_scaled_rational(
    c: &[(u32, BigRational)],
    pivot: &[(u32, BigRational)],
    val: &BigRational,
) -> Vec<(u32, BigRational)> {
    let mut out = Vec::with_capacity(c.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < c.len() || j < pivot.len() {
        if j >= pivot.len() || (i < c.len() && c[i].0 < pivot[j].0) {
            out.push(c[i].clone());
            i += 1;
        } else if i >= c.len() || pivot[j].0 < c[i].0 {
            out.push((pivot[j].0, -(val * &pivot[j].1)));
            j += 1;
        } else {
            let v = &c[i].1 - val * &pivot[j].1;
            if !v.is_zero() {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// The first `count` primes below `2^31`, largest first.
pub fn primes_31bit(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = (1 << 31) - 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7] {
        if n % d == 0 {
            return n == d;
        }
    }
    let mut d = 11u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Determinant over `GF(p)` of a dense matrix given as row-major `u64`
/// residues (consumed). Returns the residue of the determinant.
fn det_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] % p != 0);
        let Some(pr) = pivot else {
            return 0;
        };
        if pr != col {
            m.swap(pr, col);
            det = p - det;
        }
        let pv = m[col][col] % p;
        det = mod_mul(det, pv, p);
        let inv = mod_inv(pv, p);
        for r in (col + 1)..n {
            let factor = mod_mul(m[r][col] % p, inv, p);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = mod_mul(factor, m[col][c] % p, p);
                m[r][c] = (m[r][c] % p + p - sub) % p;
            }
        }
    }
    det % p
}

/// Exact determinant of a dense integer matrix by Chinese remaindering over
/// enough 31-bit primes to exceed the Hadamard bound.
pub fn det_exact_crt(mat: &[Vec<i64>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    // Hadamard bound in log2: |det| ≤ Π_i ‖row_i‖₂.
    let mut log2_bound = 0.0f64;
    for row in mat {
        let s: f64 = row.iter().map(|&v| (v as f64) * (v as f64)).sum();
        log2_bound += 0.5 * s.max(1.0).log2();
    }
    let mut primes = Vec::new();
    let mut log2_prod = 0.0f64;
    for p in primes_31bit(((log2_bound / 30.0) as usize + 4).max(4)) {
        primes.push(p);
        log2_prod += (p as f64).log2();
        if log2_prod > log2_bound + 2.0 {
            break;
        }
    }
    let residues: Vec<(u64, u64)> = primes
        .par_iter()
        .map(|&p| {
            let m: Vec<Vec<u64>> = mat
                .iter()
                .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
                .collect();
            (det_mod_p(m, p), p)
        })
        .collect();
    crt_combine_balanced(&residues)
}

/// Combines residues `(r_i, p_i)` into the unique integer of smallest
/// absolute value congruent to every `r_i` modulo `p_i`.
pub fn crt_combine_balanced(residues: &[(u64, u64)]) -> BigInt {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for &(r, p) in residues {
        let pb = BigInt::from(p);
        // t ≡ (r − x) / modulus (mod p)
        let x_mod = ((&x % &pb) + &pb) % &pb;
        let x_mod_u = u64::try_from(&x_mod).expect("residue fits");
        let m_mod = ((&modulus % &pb) + &pb) % &pb;
        let m_mod_u = u64::try_from(&m_mod).expect("residue fits");
        let diff = (r + p - x_mod_u) % p;
        let t = mod_mul(diff, mod_inv(m_mod_u, p), p);
        x += &modulus * BigInt::from(t);
        modulus *= pb;
    }
    let half = &modulus / 2;
    if x > half {
        x -= &modulus;
    }
    x
}

/// Fraction-free Bareiss elimination: returns `(rank, det)` exactly.
/// The determinant is meaningful only for square matrices (0 if singular).
pub fn bareiss_rank_det(mat: &[Vec<BigInt>]) -> (usize, BigInt) {
    let rows = mat.len();
    if rows == 0 {
        return (0, BigInt::one());
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(pr) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pr != pivot_row {
            m.swap(pr, pivot_row);
            sign = -sign;
        }
        for r in (pivot_row + 1)..rows {
            for c in (col + 1)..cols {
                let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        let d = m[rows - 1][cols - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Coefficients of the characteristic polynomial `det(xI − A)` of an integer
/// matrix, highest power first (monic: leading coefficient 1), via the
/// Faddeev–LeVerrier recursion. All divisions are exact.
pub fn charpoly_exact(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    if n == 0 {
        return coeffs;
    }
    // M_1 = A, c_1 = −tr(M_1); M_{k+1} = A(M_k + c_k I), c_{k+1} = −tr/(k+1).
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut c = -trace(&m);
    coeffs.push(c.clone());
    for k in 2..=n {
        // m ← a · (m + c·I)
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
        m = mat_mul(a, &m);
        c = -trace(&m) / BigInt::from(k as i64);
        coeffs.push(c.clone());
    }
    coeffs
}

fn trace(m: &[Vec<BigInt>]) -> BigInt {
    m.iter().enumerate().map(|(i, row)| row[i].clone()).sum()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Exact kernel basis of a dense rational matrix (row-major). Returns
/// primitive integer basis vectors (gcd 1, first nonzero entry positive),
/// one per free column of the reduced row echelon form, in column order.
pub fn rational_kernel(mat: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = mat.to_vec();
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, row);
        let inv = m[row][col].clone();
        for c in col..ncols {
            let scaled = &m[row][c] / &inv;
            m[row][c] = scaled;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let updated = &m[r][c] - &f * &m[row][c];
                    m[r][c] = updated;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if free < ncols {
                v[pc] = -m[r][free].clone();
            }
        }
        basis.push(primitive_integer_vector(v));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading nonzero entry.
pub fn primitive_integer_vector(v: Vec<BigRational>) -> Vec<BigRational> {
    let mut denom_lcm = BigInt::one();
    for x in &v {
        if !x.is_zero() {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from(denom_lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    for x in &mut ints {
        *x = &*x / &g;
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -&*x;
            }
        }
    }
    ints.into_iter().map(BigRational::from).collect()
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// One-norm (max column sum of absolute values) of a dense matrix.
pub fn one_norm(m: &DMatrix<f64>) -> f64 {
    let mut best = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = (0..m.nrows()).map(|i| m[(i, j)].abs()).sum();
        best = best.max(s);
    }
    best
}

/// Exact solution of `a·x = b` by rational Gaussian elimination with
/// partial pivoting; `None` when `a` is singular.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pr, col);
        let pivot = m[col][col].clone();
        for c in col..=n {
            let scaled = &m[col][c] / &pivot;
            m[col][c] = scaled;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let updated = &m[r][c] - &f * &m[col][c];
                    m[r][c] = updated;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inertia (positive, negative, zero eigenvalue counts) of a
/// symmetric rational matrix by congruence elimination: each step reads a
/// pivot sign and eliminates its row/column, which preserves inertia
/// (Sylvester's law); a zero diagonal is repaired by the congruence
/// `x_i ← x_i + x_j` against a nonzero off-diagonal entry.
pub fn exact_inertia(a: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut alive: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    while !alive.is_empty() {
        // pick an alive index with nonzero diagonal, repairing if needed
        let pivot = alive.iter().copied().find(|&i| !m[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // all alive diagonals vanish: find any nonzero off-diagonal
                let mut found = None;
                'search: for (ai, &i) in alive.iter().enumerate() {
                    for &j in &alive[ai + 1..] {
                        if !m[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    zero += alive.len();
                    break;
                };
                // congruence x_i ← x_i + x_j makes m[i][i] = 2·m[i][j] ≠ 0
                for &k in &alive {
                    let updated = &m[i][k] + &m[j][k];
                    m[i][k] = updated;
                }
                for &k in &alive {
                    let updated = &m[k][i] + &m[k][j];
                    m[k][i] = updated;
                }
                i
            }
        };
        let d = m[pivot][pivot].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&i| i != pivot);
        // eliminate the pivot row/column congruently
        let factors: Vec<(usize, BigRational)> = alive
            .iter()
            .map(|&r| (r, &m[r][pivot] / &d))
            .collect();
        for &(r, ref f) in &factors {
            if f.is_zero() {
                continue;
            }
            for &c in &alive {
                let updated = &m[r][c] - f * &m[pivot][c];
                m[r][c] = updated;
            }
        }
    }
    (pos, neg, zero)
}

/// Checks that a 31-bit modulus pair is sane for tests.
pub fn rank_primes_are_prime() -> bool {
    is_prime_u64(RANK_PRIME_A) && is_prime_u64(RANK_PRIME_B)
}
