//! Graph automorphisms, fixed simplices, and Lefschetz fixed-point theory.
//!
//! An automorphism $T$ of a graph acts on the simplices of its clique
//! complex. The Lefschetz number is the fixed-point index sum
//! $\chi(G,T) = \sum_{T(x)=x} (-1)^{\dim x}\,\mathrm{sign}(T|x)$, where
//! $\mathrm{sign}(T|x)$ is the parity of the permutation $T$ induces on the
//! vertex set $x$. The discrete Brouwer–Lefschetz theorem identifies this
//! sum with the cohomological supertrace $\sum_k (-1)^k\,
//! \mathrm{tr}(T^*|H^k)$, which this module cross-checks numerically via
//! harmonic projectors.
//!
//! Cycle complements carry the dihedral symmetry (rotations $x \mapsto
//! x+j$, reflections $x \mapsto j-x$); path complements only the order-two
//! reversal. Averaging the Lefschetz number over the whole group is $1$
//! for cycle complements except at $n = 12k \pm 1$, where every
//! automorphism has Lefschetz number $0$ — these complexes are
//! odd-dimensional spheres on which the group acts freely up to homotopy.

use crate::complex::{Complex, DEFAULT_SIMPLEX_CAP};
use crate::error::{Error, Result};
use crate::graph::{cycle_complement, path_complement, Graph};
use crate::hodge::{hodge_blocks, DEFAULT_DENSE_CAP};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

/// A vertex permutation verified to preserve adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    perm: Vec<usize>,
    label: String,
}

impl Automorphism {
    /// The underlying permutation (image by vertex index).
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Human-readable name (`rot j`, `refl j`, …).
    pub fn label(&self) -> &str {
        &self.label
    }

    /// True if this is the identity permutation.
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Image of a simplex (vertex-set mask).
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut rest = mask;
        let mut out = 0u64;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1u64 << self.perm[v];
        }
        out
    }

    /// Parity (±1) of the permutation induced on a fixed simplex: the sign
    /// of the permutation sorting the image list of the ascending vertex
    /// list.
    pub fn sign_on(&self, mask: u64) -> i64 {
        let mut images: Vec<usize> = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            images.push(self.perm[v]);
        }
        let mut inversions = 0usize;
        for i in 0..images.len() {
            for j in (i + 1)..images.len() {
                if images[i] > images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Wraps a permutation as an [`Automorphism`] after verifying it is a
/// bijection that maps edges to edges.
pub fn automorphism(g: &Graph, perm: Vec<usize>, label: &str) -> Result<Automorphism> {
    let n = g.n();
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has {} entries for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in &perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument(
                "vertex map is not a permutation".into(),
            ));
        }
        seen[p] = true;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) != g.has_edge(perm[u], perm[v]) {
                return Err(Error::InvalidArgument(format!(
                    "map does not preserve adjacency on ({u},{v})"
                )));
            }
        }
    }
    Ok(Automorphism { perm, label: label.to_string() })
}

/// The 2n dihedral automorphisms of the cycle complement on `n ≥ 4`
/// vertices: rotations `x ↦ x+j` then reflections `x ↦ j−x`, `j = 0..n−1`
/// (index 0 of each block is the identity / the axis-through-0
/// reflection).
pub fn dihedral_automorphisms(n: usize) -> Result<Vec<Automorphism>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "dihedral symmetry needs n >= 4, got {n}"
        )));
    }
    let g = cycle_complement(n)?;
    let mut out = Vec::with_capacity(2 * n);
    for j in 0..n {
        let perm: Vec<usize> = (0..n).map(|x| (x + j) % n).collect();
        out.push(
            automorphism(&g, perm, &format!("rot {j}"))
                .map_err(|e| Error::Internal(format!("rotation {j} rejected: {e}")))?,
        );
    }
    for j in 0..n {
        let perm: Vec<usize> = (0..n).map(|x| (j + n - x) % n).collect();
        out.push(
            automorphism(&g, perm, &format!("refl {j}"))
                .map_err(|e| Error::Internal(format!("reflection {j} rejected: {e}")))?,
        );
    }
    Ok(out)
}

/// The two automorphisms of the path complement: identity and reversal.
pub fn path_complement_automorphisms(n: usize) -> Result<Vec<Automorphism>> {
    if n < 1 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    let g = path_complement(n)?;
    let identity = automorphism(&g, (0..n).collect(), "id")
        .map_err(|e| Error::Internal(format!("identity rejected: {e}")))?;
    let reversal = automorphism(&g, (0..n).rev().collect(), "rev")
        .map_err(|e| Error::Internal(format!("reversal rejected: {e}")))?;
    Ok(vec![identity, reversal])
}

/// All simplices fixed as sets by the automorphism.
pub fn fixed_simplices(c: &Complex, t: &Automorphism) -> Vec<u64> {
    c.simplices().iter().copied().filter(|&m| t.apply_mask(m) == m).collect()
}

/// Lefschetz number by the fixed-point index sum
/// `Σ_{T(x)=x} (−1)^{dim x} sign(T|x)`.
pub fn lefschetz_number(c: &Complex, t: &Automorphism) -> i64 {
    c.simplices()
        .iter()
        .filter(|&&m| t.apply_mask(m) == m)
        .map(|&m| {
            let dim_sign = if (m.count_ones() - 1) % 2 == 0 { 1 } else { -1 };
            dim_sign * t.sign_on(m)
        })
        .sum()
}

/// Lefschetz number as the cohomological supertrace
/// `Σ_k (−1)^k tr(P_k U_k)` with `P_k` the harmonic projector and `U_k`
/// the signed permutation action on `k`-forms; rounded to the nearest
/// integer with residual below `10⁻⁶`.
pub fn lefschetz_via_cohomology(c: &Complex, t: &Automorphism) -> Result<i64> {
    if c.len() > DEFAULT_DENSE_CAP {
        return Err(Error::BoundExceeded(format!(
            "cohomological Lefschetz needs a dense eigensolve; {} simplices exceed {}",
            c.len(),
            DEFAULT_DENSE_CAP
        )));
    }
    let blocks = hodge_blocks(c);
    let mut one_norm = 0.0f64;
    let dense: Vec<DMatrix<f64>> = blocks
        .iter()
        .map(|b| {
            let size = b.len();
            let m = DMatrix::from_fn(size, size, |i, j| b[i][j] as f64);
            one_norm = one_norm.max(crate::linalg::one_norm(&m));
            m
        })
        .collect();
    let tol = 1e-8 * (1.0 + one_norm);
    let mut total = 0.0f64;
    for (k, m) in dense.into_iter().enumerate() {
        if m.nrows() == 0 {
            continue;
        }
        let eig = nalgebra::linalg::SymmetricEigen::new(m);
        let harmonic: Vec<usize> = (0..eig.eigenvalues.len())
            .filter(|&i| eig.eigenvalues[i].abs() < tol)
            .collect();
        if harmonic.is_empty() {
            continue;
        }
        let range = c.dim_range(k);
        let start = range.start;
        let sims = &c.simplices()[range];
        // tr(P U) = Σ_i sign_i · P[i, image(i)] with P = Σ_q q qᵀ.
        let mut trace = 0.0f64;
        for (i, &mask) in sims.iter().enumerate() {
            let img = c
                .index_of(t.apply_mask(mask))
                .expect("automorphism permutes simplices")
                - start;
            let s = t.sign_on(mask) as f64;
            let mut p_entry = 0.0;
            for &q in &harmonic {
                p_entry += eig.eigenvectors[(i, q)] * eig.eigenvectors[(img, q)];
            }
            trace += s * p_entry;
        }
        if k % 2 == 0 {
            total += trace;
        } else {
            total -= trace;
        }
    }
    let rounded = total.round();
    if (total - rounded).abs() >= 1e-6 {
        return Err(Error::Internal(format!(
            "cohomological Lefschetz residual too large: {total}"
        )));
    }
    Ok(rounded as i64)
}

/// Lefschetz numbers of all dihedral automorphisms of one cycle
/// complement, in internal order (identity first in each block).
#[derive(Clone, Debug)]
pub struct LefschetzTable {
    /// Number of vertices.
    pub n: usize,
    /// Values for rotations `x ↦ x+j`, `j = 0..n−1`.
    pub rotations: Vec<i64>,
    /// Values for reflections `x ↦ j−x`, `j = 0..n−1`.
    pub reflections: Vec<i64>,
}

impl LefschetzTable {
    /// Group average `(Σ rotations + Σ reflections) / 2n`, exact.
    pub fn average(&self) -> BigRational {
        let total: i64 =
            self.rotations.iter().sum::<i64>() + self.reflections.iter().sum::<i64>();
        BigRational::new(BigInt::from(total), BigInt::from(2 * self.n as u64))
    }

    /// Rotation values reordered as printed in the reference table:
    /// `x ↦ x+k` for `k = 1..n`, so the identity comes last.
    pub fn paper_rotations(&self) -> Vec<i64> {
        (1..=self.n).map(|k| self.rotations[k % self.n]).collect()
    }

    /// Reflection values in the reference-table order (which coincides
    /// with the internal order `j = 0..n−1`).
    pub fn paper_reflections(&self) -> Vec<i64> {
        self.reflections.clone()
    }
}

/// Computes the full dihedral Lefschetz table of the cycle complement on
/// `n` vertices.
pub fn lefschetz_table(n: usize) -> Result<LefschetzTable> {
    let c = crate::complex::dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP)?;
    let autos = dihedral_automorphisms(n)?;
    let values: Vec<i64> =
        autos.par_iter().map(|t| lefschetz_number(&c, t)).collect();
    Ok(LefschetzTable {
        n,
        rotations: values[..n].to_vec(),
        reflections: values[n..].to_vec(),
    })
}

/// Lefschetz numbers `(identity, reversal)` of the path complement on `n`
/// vertices; the identity value is the Euler characteristic.
pub fn path_lefschetz_pair(n: usize) -> Result<(i64, i64)> {
    let c = crate::complex::dual_path_complex(n, DEFAULT_SIMPLEX_CAP)?;
    let autos = path_complement_automorphisms(n)?;
    Ok((lefschetz_number(&c, &autos[0]), lefschetz_number(&c, &autos[1])))
}

/// Average Lefschetz number over the dihedral group of the cycle
/// complement, exact: `1` except `0` at `n = 12k ± 1`.
pub fn average_lefschetz(n: usize) -> Result<BigRational> {
    Ok(lefschetz_table(n)?.average())
}
