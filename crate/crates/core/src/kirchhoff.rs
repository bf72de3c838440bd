//! Kirchhoff Laplacian, exact characteristic polynomials, rooted tree and
//! forest counts, and the spectral zeta function.
//!
//! For a graph with Kirchhoff matrix $K$ (degree diagonal minus adjacency),
//! the *pseudo-determinant* $\mathrm{Det}(K)$ — the product of the nonzero
//! eigenvalues — counts rooted spanning trees of a connected graph, while
//! the Fredholm determinant $\det(1+K)$ counts rooted spanning forests.
//! Both are integers and are computed exactly: the pseudo-determinant from
//! the lowest nonzero coefficient of the exact characteristic polynomial
//! (or, for large connected graphs, from the matrix-tree cofactor), the
//! forest count from a CRT determinant.
//!
//! The ratio $\det(1+K)/\mathrm{Det}(K)$ tends to $e$ for cycle-complement
//! graphs: with eigenvalues $\lambda_{k} = n - 4\sin^2(\pi k/n)$ pinned to
//! $[n-4, n]$, the log of the ratio is $\sum_{s\ge1} (-1)^{s+1}\zeta(s)/s$
//! where $\zeta(s) = \sum_{\lambda\neq 0} \lambda^{-s}$ is the spectral
//! zeta function, and $\zeta(1)\to 1$, $\zeta(s)\to 0$ for $s>1$.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, SparseIntMatrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Above this size, connected-graph pseudo-determinants switch from the
/// characteristic polynomial to the exact matrix-tree cofactor.
const CHARPOLY_BOUND: usize = 32;

/// Monic integer characteristic polynomial `det(xI − M)`, stored with
/// ascending powers (`coeffs[k]` multiplies `x^k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Degree (= matrix size).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All coefficients, ascending powers.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the lowest-order nonzero coefficient.
    pub fn lowest_nonzero_index(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("monic polynomial has a nonzero coefficient")
    }
}

/// Kirchhoff matrix (degree diagonal minus adjacency) as a dense integer
/// matrix; every row sums to zero.
pub fn kirchhoff_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut m = vec![vec![0i64; n]; n];
    for u in 0..n {
        m[u][u] = g.degree(u) as i64;
        for v in 0..n {
            if u != v && g.has_edge(u, v) {
                m[u][v] = -1;
            }
        }
    }
    m
}

/// Exact characteristic polynomial `det(xI − m)` of a square integer
/// matrix (fraction-free Faddeev–LeVerrier).
pub fn char_poly_exact(m: &[Vec<i64>]) -> CharPoly {
    let big: Vec<Vec<BigInt>> =
        m.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut highest_first = linalg::charpoly_exact(&big);
    highest_first.reverse();
    CharPoly { coeffs: highest_first }
}

/// Pseudo-determinant `Det(K)` of the Kirchhoff matrix: the product of the
/// nonzero eigenvalues, `(−1)^{size−j}·c_j` for the lowest nonzero
/// coefficient `c_j` of the characteristic polynomial. Equals the number of
/// rooted spanning trees when the graph is connected.
pub fn rooted_tree_count(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::one();
    }
    if n > CHARPOLY_BOUND && g.is_connected() {
        // Matrix-tree: Det(K) = n · det(principal minor), still exact.
        let k = kirchhoff_matrix(g);
        let minor: Vec<Vec<i64>> =
            (1..n).map(|i| (1..n).map(|j| k[i][j]).collect()).collect();
        return BigInt::from(n as u64) * linalg::det_exact_crt(&minor);
    }
    let p = char_poly_exact(&kirchhoff_matrix(g));
    let j = p.lowest_nonzero_index();
    let c = p.coeff(j);
    if (n - j) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Fredholm determinant `det(I + K)`: the number of rooted spanning
/// forests.
pub fn rooted_forest_count(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = kirchhoff_matrix(g);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1;
    }
    linalg::det_exact_crt(&m)
}

/// Exact rooted-forest to rooted-tree ratio `det(1+K)/Det(K)`; requires a
/// connected graph.
pub fn tree_forest_ratio(g: &Graph) -> Result<BigRational> {
    if !g.is_connected() {
        return Err(Error::InvalidArgument(
            "forest-tree ratio requires a connected graph".into(),
        ));
    }
    Ok(BigRational::new(rooted_forest_count(g), rooted_tree_count(g)))
}

/// Closed-form nonzero Kirchhoff spectrum of the cycle-complement graph on
/// `n ≥ 5` vertices: `{n − 4 sin²(πk/n) : k = 1..n−1}`, ascending. All
/// values lie in `[n−4, n]`.
pub fn dual_cycle_kirchhoff_spectrum(n: usize) -> Result<Vec<f64>> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "closed-form spectrum requires n >= 5, got {n}"
        )));
    }
    let mut evs: Vec<f64> = (1..n)
        .map(|k| n as f64 - 4.0 * (std::f64::consts::PI * k as f64 / n as f64).sin().powi(2))
        .collect();
    evs.sort_by(f64::total_cmp);
    Ok(evs)
}

/// Float forest–tree ratio of the cycle complement from the closed-form
/// spectrum, `Π_k (1 + 1/λ_k)`; avoids an eigensolve for large `n`.
pub fn dual_cycle_forest_tree_ratio_closed_form(n: usize) -> Result<f64> {
    Ok(dual_cycle_kirchhoff_spectrum(n)?.iter().map(|l| 1.0 + 1.0 / l).product())
}

/// Float Kirchhoff eigenvalues (ascending) together with the exact number
/// of zero eigenvalues (`n − rank`, computed exactly).
pub fn kirchhoff_eigenvalues(g: &Graph) -> (Vec<f64>, usize) {
    let n = g.n();
    let k = kirchhoff_matrix(g);
    let mut sparse = SparseIntMatrix::zero(n, n);
    for (i, row) in k.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                sparse.cols[j].push((i as u32, v));
            }
        }
    }
    let rank = sparse.rank_exact();
    let dense = DMatrix::from_fn(n, n, |i, j| k[i][j] as f64);
    (linalg::symmetric_eigenvalues(&dense), n - rank)
}

/// Spectral zeta function `ζ(s) = Σ_{λ≠0} λ^{−s}` of the Kirchhoff
/// Laplacian; the zero eigenvalues are filtered by exact rank, and `s ≥ 1`
/// is required.
pub fn spectral_zeta(g: &Graph, s: f64) -> Result<f64> {
    if !(s >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "spectral zeta requires s >= 1, got {s}"
        )));
    }
    let (evs, zeros) = kirchhoff_eigenvalues(g);
    Ok(evs[zeros..].iter().map(|l| l.powf(-s)).sum())
}
