//! Levitt curvature, functional Gauss–Bonnet, Poincaré–Hopf indices, the
//! closed-form curvature of path complements, and renormalization sampling.
//!
//! The curvature of a vertex $v$ is the integral of the simplex generating
//! function of its unit sphere, $K(v) = \int_{-1}^0 f_{S(v)}(t)\,dt = 1 +
//! \sum_k (-1)^{k+1} f_k(S(v))/(k+2)$. Gauss–Bonnet holds exactly:
//! $\sum_v K(v) = \chi$. The functional refinement assigns each vertex the
//! polynomial $K_v(t) = \int_0^t f_{S(v)}(s)\,ds$ with $f_G(t) - 1 =
//! \sum_v K_v(t)$, and the Poincaré–Hopf index of an injective vertex
//! valuation $f$ is $i_f(v) = 1 - \chi(S^-_f(v))$ with $\sum_v i_f(v) =
//! \chi$; averaging the index over all vertex orders recovers curvature.
//!
//! For path complements the unit spheres split into two smaller path
//! complements, giving the closed form $K_n(k) = \int_{-1}^0
//! f^+_{k-2}(t)\, f^+_{n-k-1}(t)\,dt$ (vertices numbered $1..n$). Scaled
//! samples $(k/n,\; n\,K_n(k))$, grouped by the residue of $k$ mod 6,
//! converge to six limiting curvature profiles.

use crate::complex::{
    clique_complex, induced_complex, unit_sphere_complex, DEFAULT_SIMPLEX_CAP,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{
    euler_characteristic_from_generating_function, generating_function, rat_int,
    rational_to_f64, RationalPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Levitt curvature of one vertex: `∫_{−1}^0 f_{S(v)}(t) dt`, exact.
pub fn levitt_curvature(g: &Graph, v: usize) -> Result<BigRational> {
    let sphere = unit_sphere_complex(g, v, DEFAULT_SIMPLEX_CAP)?;
    Ok(generating_function(&sphere).definite_integral(&rat_int(-1), &rat_int(0)))
}

/// Curvature function of one vertex: `K_v(t) = ∫_0^t f_{S(v)}(s) ds`, the
/// antiderivative of the unit-sphere generating function. Note
/// `−K_v(−1) = ∫_{−1}^0 f_{S(v)}` is the Levitt curvature.
pub fn curvature_function(g: &Graph, v: usize) -> Result<RationalPoly> {
    let sphere = unit_sphere_complex(g, v, DEFAULT_SIMPLEX_CAP)?;
    Ok(generating_function(&sphere).antiderivative())
}

/// Exact per-vertex curvature data of a graph.
#[derive(Clone, Debug)]
pub struct CurvatureProfile {
    /// Levitt curvature per vertex.
    pub values: Vec<BigRational>,
    /// Curvature polynomial `K_v(t)` per vertex.
    pub functions: Vec<RationalPoly>,
}

impl CurvatureProfile {
    /// Exact curvature total; equals the Euler characteristic.
    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }
}

/// Curvatures and curvature functions of every vertex. The values sum to
/// `χ(cliqueComplex(g))` exactly, and `f_G(t) − 1 = Σ_v K_v(t)`
/// coefficientwise.
pub fn curvature_profile(g: &Graph) -> Result<CurvatureProfile> {
    let n = g.n();
    let functions: Vec<RationalPoly> = (0..n)
        .into_par_iter()
        .map(|v| curvature_function(g, v))
        .collect::<Result<_>>()?;
    let values = functions
        .iter()
        .map(|k| -k.evaluate(&rat_int(-1)))
        .collect();
    Ok(CurvatureProfile { values, functions })
}

/// Integer-coefficient simplex generating polynomials of path complements,
/// `f⁺_{−1} = f⁺_0 = 1`, `f⁺_m = f⁺_{m−1} + t·f⁺_{m−2}`; index shifted by
/// one so slot `m` holds `f⁺_{m−1}`.
fn jacobsthal_path_table(max_index: i64) -> Vec<Vec<BigInt>> {
    let len = (max_index + 2) as usize;
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(len);
    table.push(vec![BigInt::one()]); // f⁺_{−1}
    if len > 1 {
        table.push(vec![BigInt::one()]); // f⁺_0
    }
    for m in 2..len {
        let (head, tail) = table.split_at(m);
        debug_assert!(tail.is_empty());
        let prev = &head[m - 1];
        let prev2 = &head[m - 2];
        let mut next = prev.clone();
        next.resize(next.len().max(prev2.len() + 1), BigInt::zero());
        for (i, c) in prev2.iter().enumerate() {
            next[i + 1] += c;
        }
        table.push(next);
    }
    table
}

/// `∫_{−1}^0 Σ c_m t^m dt = Σ c_m (−1)^m / (m+1)`.
fn integrate_unit_interval(coeffs: &[BigInt]) -> BigRational {
    let mut acc = BigRational::zero();
    for (m, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if m % 2 == 0 { c.clone() } else { -c };
        acc += BigRational::new(sign, BigInt::from(m as u64 + 1));
    }
    acc
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Closed-form curvature of the path complement on `n` vertices at vertex
/// `k` (1-based): `K_n(k) = ∫_{−1}^0 f⁺_{k−2}(t) f⁺_{n−k−1}(t) dt`.
pub fn fast_path_curvature(n: usize, k: usize) -> Result<BigRational> {
    if n < 4 || k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "closed-form path curvature needs n >= 4 and 1 <= k <= n, got n={n} k={k}"
        )));
    }
    let table = jacobsthal_path_table(n as i64 - 2);
    Ok(integrate_unit_interval(&poly_mul_int(
        &table[k - 1],
        &table[n - k],
    )))
}

/// All closed-form curvatures of the path complement on `n` vertices,
/// ordered by vertex `k = 1..n`. Shares one polynomial table across the
/// row, so it is much faster than `n` separate calls.
pub fn fast_path_curvature_row(n: usize) -> Result<Vec<BigRational>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "closed-form path curvature needs n >= 4, got {n}"
        )));
    }
    let table = jacobsthal_path_table(n as i64 - 2);
    Ok((1..=n)
        .into_par_iter()
        .map(|k| integrate_unit_interval(&poly_mul_int(&table[k - 1], &table[n - k])))
        .collect())
}

/// Poincaré–Hopf index `i_f(v) = 1 − χ(S⁻_f(v))` of an injective vertex
/// valuation, where `S⁻_f(v)` spans the neighbors with smaller value.
pub fn poincare_hopf_index(g: &Graph, f: &[i64], v: usize) -> Result<i64> {
    check_injective(g, f)?;
    let below: Vec<usize> = g.neighbors(v).into_iter().filter(|&w| f[w] < f[v]).collect();
    let sphere = induced_complex(g, &below, DEFAULT_SIMPLEX_CAP)?;
    Ok(1 - sphere.euler_characteristic())
}

fn check_injective(g: &Graph, f: &[i64]) -> Result<()> {
    if f.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "valuation has {} entries for {} vertices",
            f.len(),
            g.n()
        )));
    }
    let mut seen = f.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(
            "vertex valuation must be injective".into(),
        ));
    }
    Ok(())
}

/// Both sides of the functional Poincaré–Hopf identity
/// `f_G(t) = 1 + t·Σ_v f_{S⁻_f(v)}(t)`.
#[derive(Clone, Debug)]
pub struct PoincareHopfReport {
    /// Generating function of the whole complex.
    pub lhs: RationalPoly,
    /// `1 + t·Σ_v f_{S⁻(v)}(t)`.
    pub rhs: RationalPoly,
    /// Exact coefficientwise equality.
    pub holds: bool,
}

/// Verifies the functional Poincaré–Hopf identity exactly and returns both
/// sides.
pub fn functional_poincare_hopf(g: &Graph, f: &[i64]) -> Result<PoincareHopfReport> {
    check_injective(g, f)?;
    let lhs = generating_function(&clique_complex(g, DEFAULT_SIMPLEX_CAP)?);
    let mut sum = RationalPoly::zero();
    for v in 0..g.n() {
        let below: Vec<usize> =
            g.neighbors(v).into_iter().filter(|&w| f[w] < f[v]).collect();
        let sphere = induced_complex(g, &below, DEFAULT_SIMPLEX_CAP)?;
        sum = sum.add(&generating_function(&sphere));
    }
    let rhs = RationalPoly::one().add(&sum.shift(1));
    let holds = lhs == rhs;
    Ok(PoincareHopfReport { lhs, rhs, holds })
}

/// Poincaré–Hopf indices of the path-complement build-up: adding vertex
/// `k` to the complement of the path on `k−1` vertices creates a minus
/// sphere equal to the whole previous-but-one graph, so the index of step
/// `k` is `1 − χ(G⁺_{k−2})`. Partial sums walk the 6-periodic Euler
/// characteristic sequence.
pub fn morse_filtration_indices(n: usize) -> Result<Vec<i64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "build-up needs n >= 2, got {n}"
        )));
    }
    let mut indices = vec![1i64, 1];
    for k in 3..=n {
        indices.push(1 - path_complement_euler(k - 2));
    }
    Ok(indices)
}

/// `χ(G⁺_m)` from the generating polynomial (no complex is built).
fn path_complement_euler(m: usize) -> i64 {
    let chi = euler_characteristic_from_generating_function(&crate::poly::jacobsthal_path(
        m as i64,
    ));
    debug_assert!(chi.is_integer());
    rational_to_f64(&chi).round() as i64
}

/// Scaled curvature samples `(k/n, n·K_n(k))` of the path complement for
/// the residue class `k ≡ l (mod 6)`, computed exactly then floated.
pub fn renormalization_sample(n: usize, l: usize) -> Result<Vec<(f64, f64)>> {
    if n < 24 {
        return Err(Error::InvalidArgument(format!(
            "renormalization sampling needs n >= 24, got {n}"
        )));
    }
    if l > 5 {
        return Err(Error::InvalidArgument(format!(
            "residue must be in 0..=5, got {l}"
        )));
    }
    let row = fast_path_curvature_row(n)?;
    let scale = rat_int(n as i64);
    Ok((1..=n)
        .filter(|k| k % 6 == l)
        .map(|k| {
            let x = k as f64 / n as f64;
            let y = rational_to_f64(&(&row[k - 1] * &scale));
            (x, y)
        })
        .collect())
}
