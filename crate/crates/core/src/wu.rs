//! Intersection calculus: f-matrix, Wu characteristics, quadratic (Wu)
//! cohomology, Wu Lefschetz numbers, connection and counting matrices, and
//! the hydrogen identity.
//!
//! Writing $\omega(x) = (-1)^{\dim x}$, the *Wu characteristic* is the
//! pair sum $\omega_2 = \sum_{x \cap y \neq \emptyset}
//! \omega(x)\omega(y)$, with higher orders $\omega_3, \omega_4$ summing
//! over intersecting triples and quadruples. Quadratic cohomology refines
//! $\omega_2$: the pair space of intersecting ordered simplex pairs
//! carries a differential $d = d_1 + d_2$ (the second factor weighted by
//! $(-1)^{|x|}$) with $d^2 = 0$, graded by total cardinality
//! $|x| + |y|$, and the alternating sum of its Betti numbers recovers
//! $\omega_2$. The *connection matrix* $L(x,y) = 1_{x \cap y \neq
//! \emptyset}$ is unimodular with signature $\chi$ and
//! $\sum_{x,y} L^{-1}(x,y) = \chi$; the positive definite *counting
//! matrix* $2^{|x \cap y|} - 1$ is isospectral to its inverse; and
//! one-dimensional complexes satisfy the hydrogen identity
//! $(|d| + |d|^T)^2 = L - L^{-1}$.

use crate::complex::{vertices_of_mask, Complex};
use crate::error::{Error, Result};
use crate::fixedpoint::Automorphism;
use crate::hodge::exterior_derivative;
use crate::linalg::{self, SparseIntMatrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Default cap on the number of intersecting ordered pairs.
pub const DEFAULT_PAIR_CAP: usize = 200_000;

/// Largest complex (simplex count) accepted by the tuple summations.
const TUPLE_SIMPLEX_CAP: usize = 20_000;

fn omega(mask: u64) -> i64 {
    if (mask.count_ones() - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Symmetric matrix counting intersecting ordered pairs by dimension:
/// entry `(j,k)` is the number of pairs `(x,y)` with `dim x = j`,
/// `dim y = k`, `x ∩ y ≠ ∅`.
pub fn f_matrix(c: &Complex) -> Result<Vec<Vec<i64>>> {
    check_tuple_cap(c)?;
    let dims = c.f_vector().len();
    let sims = c.simplices();
    let mut m = vec![vec![0i64; dims]; dims];
    for &x in sims {
        let dx = (x.count_ones() - 1) as usize;
        for &y in sims {
            if x & y != 0 {
                m[dx][(y.count_ones() - 1) as usize] += 1;
            }
        }
    }
    Ok(m)
}

fn check_tuple_cap(c: &Complex) -> Result<()> {
    if c.len() > TUPLE_SIMPLEX_CAP {
        return Err(Error::BoundExceeded(format!(
            "intersection sums allowed up to {TUPLE_SIMPLEX_CAP} simplices, got {}",
            c.len()
        )));
    }
    Ok(())
}

/// Wu characteristic of order 2, 3 or 4: the sum of `Π ω(x_i)` over
/// ordered tuples with a common nonempty total intersection.
///
/// Orders 3 and 4 group ordered pairs by their intersection `w` (a face,
/// hence a simplex of the complex): with `W(w) = Σ_{x∩y=w} ω(x)ω(y)` and
/// `g(w) = Σ_z ω(z)·1_{z∩w≠∅}`, order 3 is `Σ_w W(w) g(w)` and order 4 is
/// `Σ_{w₁∩w₂≠∅} W(w₁) W(w₂)`.
pub fn wu_characteristic(c: &Complex, order: usize) -> Result<i64> {
    check_tuple_cap(c)?;
    let sims = c.simplices();
    let n = sims.len();
    match order {
        2 => {
            let total = (0..n)
                .into_par_iter()
                .map(|i| {
                    let x = sims[i];
                    let wx = omega(x);
                    let mut acc = 0i64;
                    for &y in sims {
                        if x & y != 0 {
                            acc += wx * omega(y);
                        }
                    }
                    acc
                })
                .sum();
            Ok(total)
        }
        3 => {
            let (w_sum, g) = pair_group_tables(c);
            Ok((0..n).map(|i| w_sum[i] * g[i]).sum())
        }
        4 => {
            let (w_sum, _) = pair_group_tables(c);
            let support: Vec<(u64, i64)> = sims
                .iter()
                .zip(&w_sum)
                .filter(|(_, &w)| w != 0)
                .map(|(&m, &w)| (m, w))
                .collect();
            let total = support
                .par_iter()
                .map(|&(m1, w1)| {
                    let mut acc = 0i64;
                    for &(m2, w2) in &support {
                        if m1 & m2 != 0 {
                            acc += w1 * w2;
                        }
                    }
                    acc
                })
                .sum();
            Ok(total)
        }
        _ => Err(Error::InvalidArgument(format!(
            "Wu characteristic order must be 2, 3 or 4, got {order}"
        ))),
    }
}

/// Per-simplex tables `W(w) = Σ_{x∩y=w} ω(x)ω(y)` and
/// `g(w) = Σ_z ω(z)·1_{z∩w≠∅}`, indexed like the complex.
fn pair_group_tables(c: &Complex) -> (Vec<i64>, Vec<i64>) {
    let sims = c.simplices();
    let n = sims.len();
    let w_sum: Vec<i64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = sims[i];
            let wx = omega(x);
            let mut local = vec![0i64; n];
            for &y in sims {
                let inter = x & y;
                if inter != 0 {
                    let idx = c.index_of(inter).expect("face of a simplex");
                    local[idx] += wx * omega(y);
                }
            }
            local
        })
        .reduce(
            || vec![0i64; n],
            |mut a, b| {
                for (ai, bi) in a.iter_mut().zip(b) {
                    *ai += bi;
                }
                a
            },
        );
    let g: Vec<i64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let w = sims[i];
            sims.iter().filter(|&&z| z & w != 0).map(|&z| omega(z)).sum()
        })
        .collect();
    (w_sum, g)
}

/// The space of intersecting ordered simplex pairs, graded by total
/// cardinality `|x| + |y|` (blocks `2 ..= 2·maxdim + 2`).
#[derive(Clone, Debug)]
pub struct PairComplex {
    /// Pairs as indices into the complex, sorted by (total cardinality,
    /// first index, second index).
    pub pairs: Vec<(u32, u32)>,
    /// `offsets[t]..offsets[t+1]` bounds the block of total cardinality
    /// `t + 2`.
    pub offsets: Vec<usize>,
}

impl PairComplex {
    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True when no pairs exist.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of cardinality blocks (`2·maxdim + 1` for a full complex).
    pub fn block_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// The pair index range of total cardinality `t`.
    pub fn block(&self, t: usize) -> std::ops::Range<usize> {
        if t < 2 || t + 1 - 2 >= self.offsets.len() {
            return 0..0;
        }
        self.offsets[t - 2]..self.offsets[t - 1]
    }

    fn position(&self, pair: (u32, u32), total: usize) -> Option<usize> {
        let range = self.block(total);
        let slice = &self.pairs[range.clone()];
        slice.binary_search(&pair).ok().map(|p| p + range.start)
    }
}

/// Builds the pair complex of all intersecting ordered pairs; errors above
/// `pair_cap` pairs.
pub fn wu_complex(c: &Complex, pair_cap: usize) -> Result<PairComplex> {
    let sims = c.simplices();
    let mut pairs: Vec<(u32, u32, u32)> = Vec::new(); // (total, i, j)
    for (i, &x) in sims.iter().enumerate() {
        for (j, &y) in sims.iter().enumerate() {
            if x & y != 0 {
                if pairs.len() == pair_cap {
                    return Err(Error::BoundExceeded(format!(
                        "pair complex exceeds cap of {pair_cap} pairs"
                    )));
                }
                pairs.push((x.count_ones() + y.count_ones(), i as u32, j as u32));
            }
        }
    }
    pairs.sort_unstable();
    let max_total = pairs.last().map_or(2, |p| p.0 as usize);
    let mut offsets = vec![0usize; max_total.max(2) - 2 + 2];
    for &(t, _, _) in &pairs {
        offsets[t as usize - 2 + 1] += 1;
    }
    for i in 1..offsets.len() {
        offsets[i] += offsets[i - 1];
    }
    Ok(PairComplex {
        pairs: pairs.into_iter().map(|(_, i, j)| (i, j)).collect(),
        offsets,
    })
}

/// The Wu differential block mapping total cardinality `t` to `t − 1`:
/// `d(x,y) = Σ_k (−1)^k (x−x_k, y) + Σ_k (−1)^{|x|+k} (x, y−y_k)`
/// (1-based positions, images with an empty factor or empty intersection
/// dropped).
pub fn wu_differential(c: &Complex, pc: &PairComplex, t: usize) -> SparseIntMatrix {
    let rows_range = pc.block(t - 1);
    let cols_range = pc.block(t);
    let mut m = SparseIntMatrix::zero(rows_range.len(), cols_range.len());
    let sims = c.simplices();
    for (local, &(ix, iy)) in pc.pairs[cols_range].iter().enumerate() {
        let x = sims[ix as usize];
        let y = sims[iy as usize];
        let mut entries: Vec<(u32, i64)> = Vec::new();
        // first factor
        if x.count_ones() > 1 {
            let mut rest = x;
            let mut k = 1i64; // 1-based position
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let x2 = x & !bit;
                if x2 & y != 0 {
                    let target = (
                        c.index_of(x2).expect("face") as u32,
                        iy,
                    );
                    let row = pc.position(target, t - 1).expect("pair closed") - rows_range.start;
                    entries.push((row as u32, if k % 2 == 0 { 1 } else { -1 }));
                }
                k += 1;
            }
        }
        // second factor, weighted by (−1)^{|x|}
        if y.count_ones() > 1 {
            let x_parity = if x.count_ones() % 2 == 0 { 1i64 } else { -1 };
            let mut rest = y;
            let mut k = 1i64;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let y2 = y & !bit;
                if x & y2 != 0 {
                    let target = (ix, c.index_of(y2).expect("face") as u32);
                    let row = pc.position(target, t - 1).expect("pair closed") - rows_range.start;
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    entries.push((row as u32, x_parity * sign));
                }
                k += 1;
            }
        }
        entries.sort_unstable_by_key(|e| e.0);
        // merge duplicate rows (cannot occur: targets differ in x or y)
        m.cols[local] = entries;
    }
    m
}

/// Wu Betti numbers: nullities of the pair-space Hodge operator per total
/// cardinality, listed for `t = 2 ..= 2·maxdim + 2`. Their alternating sum
/// `Σ (−1)^t b_t` equals the Wu characteristic.
pub fn wu_betti(c: &Complex, pair_cap: usize) -> Result<Vec<i64>> {
    let pc = wu_complex(c, pair_cap)?;
    let blocks = 2 * c.f_vector().len(); // t = 2 ..= 2·maxdim + 2
    let min_t = 2usize;
    let max_t = blocks;
    let ranks: Vec<usize> = (min_t..=max_t + 1)
        .into_par_iter()
        .map(|t| {
            if t <= min_t || t > max_t {
                0
            } else {
                wu_differential(c, &pc, t).rank_exact()
            }
        })
        .collect();
    let mut betti = Vec::with_capacity(max_t - min_t + 1);
    for t in min_t..=max_t {
        let size = pc.block(t).len() as i64;
        let r_down = ranks[t - min_t] as i64; // rank d: block t → t−1
        let r_up = ranks[t + 1 - min_t] as i64; // rank d: block t+1 → t
        betti.push(size - r_down - r_up);
    }
    Ok(betti)
}

/// Wu Lefschetz number of an automorphism: the index sum
/// `Σ i_T(x)·i_T(y)` over fixed intersecting ordered pairs, where
/// `i_T(x) = (−1)^{dim x}·sign(T|x)`.
pub fn wu_lefschetz(c: &Complex, pc: &PairComplex, t: &Automorphism) -> i64 {
    let sims = c.simplices();
    pc.pairs
        .par_iter()
        .map(|&(ix, iy)| {
            let x = sims[ix as usize];
            let y = sims[iy as usize];
            if t.apply_mask(x) == x && t.apply_mask(y) == y {
                (omega(x) * t.sign_on(x)) * (omega(y) * t.sign_on(y))
            } else {
                0
            }
        })
        .sum()
}

/// Per-vertex Wu curvature `K(v) = Σ_{x∩y≠∅, v∈x} ω(x)ω(y)/|x|`; sums to
/// the Wu characteristic (quadratic Gauss–Bonnet).
pub fn wu_curvature(c: &Complex) -> Result<Vec<BigRational>> {
    check_tuple_cap(c)?;
    let sims = c.simplices();
    let vmax = 64 - c.vertex_mask().leading_zeros() as usize;
    let mut k = vec![BigRational::zero(); vmax];
    for &x in sims {
        let wx = omega(x);
        let card = x.count_ones();
        let mut pair_total = 0i64;
        for &y in sims {
            if x & y != 0 {
                pair_total += wx * omega(y);
            }
        }
        let share = BigRational::new(BigInt::from(pair_total), BigInt::from(card as i64));
        for v in vertices_of_mask(x) {
            k[v] += share.clone();
        }
    }
    Ok(k)
}

/// Connection matrix `L(x,y) = 1` when the simplices intersect, in
/// canonical simplex order.
pub fn connection_matrix(c: &Complex) -> Vec<Vec<i64>> {
    let sims = c.simplices();
    sims.iter()
        .map(|&x| sims.iter().map(|&y| i64::from(x & y != 0)).collect())
        .collect()
}

/// Exactly computed facts about the connection matrix.
#[derive(Clone, Debug)]
pub struct ConnectionReport {
    /// `det L`, exact; always ±1.
    pub det: BigInt,
    /// Positive minus negative eigenvalue count; equals χ.
    pub signature: i64,
    /// Number of negative eigenvalues; equals the number of
    /// odd-dimensional simplices.
    pub negative_count: usize,
    /// `Σ_{x,y} L⁻¹(x,y)`, exact; equals χ.
    pub energy_sum: BigRational,
}

/// Computes determinant (exact CRT), inertia (float eigensolve with exact
/// fallback when any eigenvalue sits near zero), and the total energy
/// `Σ entries of L⁻¹` (exact rational solve).
pub fn connection_report(c: &Complex, dense_cap: usize) -> Result<ConnectionReport> {
    let n = c.len();
    if n > dense_cap {
        return Err(Error::BoundExceeded(format!(
            "connection report allowed up to {dense_cap} simplices, got {n}"
        )));
    }
    let l = connection_matrix(c);
    let det = linalg::det_exact_crt(&l);
    let dense = DMatrix::from_fn(n, n, |i, j| l[i][j] as f64);
    let evs = linalg::symmetric_eigenvalues(&dense);
    let tol = 1e-8 * (1.0 + linalg::one_norm(&dense));
    let (pos, neg) = if evs.iter().any(|e| e.abs() < tol) {
        // near-zero float eigenvalue: fall back to exact inertia
        let rational: Vec<Vec<BigRational>> = l
            .iter()
            .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
            .collect();
        let (p, q, z) = linalg::exact_inertia(&rational);
        debug_assert_eq!(z, 0, "unimodular matrix cannot be singular");
        (p, q)
    } else {
        (
            evs.iter().filter(|&&e| e > 0.0).count(),
            evs.iter().filter(|&&e| e < 0.0).count(),
        )
    };
    let rational: Vec<Vec<BigRational>> = l
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();
    let ones = vec![BigRational::one(); n];
    let solved = linalg::solve_rational(&rational, &ones)
        .ok_or_else(|| Error::Internal("connection matrix must be invertible".into()))?;
    let energy_sum: BigRational = solved.iter().sum();
    Ok(ConnectionReport {
        det,
        signature: pos as i64 - neg as i64,
        negative_count: neg,
        energy_sum,
    })
}

/// Counting matrix: entry `2^{|x∩y|} − 1`, the number of nonempty
/// sub-simplices of the intersection.
pub fn counting_matrix(c: &Complex) -> Vec<Vec<i64>> {
    let sims = c.simplices();
    sims.iter()
        .map(|&x| {
            sims.iter()
                .map(|&y| (1i64 << (x & y).count_ones()) - 1)
                .collect()
        })
        .collect()
}

/// Spectral facts about the counting matrix.
#[derive(Clone, Debug)]
pub struct CountingReport {
    /// All eigenvalues strictly positive.
    pub positive_definite: bool,
    /// Sorted spectrum matches the sorted spectrum of the inverse.
    pub isospectral_to_inverse: bool,
    /// Largest deviation over the matched spectra.
    pub max_deviation: f64,
}

/// Checks positive definiteness and isospectrality to the inverse
/// (multisets within `10⁻⁷`).
pub fn counting_report(c: &Complex, dense_cap: usize) -> Result<CountingReport> {
    let n = c.len();
    if n > dense_cap {
        return Err(Error::BoundExceeded(format!(
            "counting report allowed up to {dense_cap} simplices, got {n}"
        )));
    }
    let m = counting_matrix(c);
    let dense = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let evs = linalg::symmetric_eigenvalues(&dense);
    let positive_definite = evs.iter().all(|&e| e > 0.0);
    let mut inverse_spectrum: Vec<f64> = evs.iter().map(|&e| 1.0 / e).collect();
    inverse_spectrum.sort_by(f64::total_cmp);
    let max_deviation = evs
        .iter()
        .zip(&inverse_spectrum)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(CountingReport {
        positive_definite,
        isospectral_to_inverse: positive_definite && max_deviation < 1e-7,
        max_deviation,
    })
}

/// Exact check of the hydrogen identity `(|d| + |d|ᵀ)² = L − L⁻¹` for a
/// complex of dimension ≤ 1.
pub fn hydrogen_check(c: &Complex) -> Result<bool> {
    if c.f_vector().len() > 2 {
        return Err(Error::InvalidArgument(format!(
            "hydrogen identity needs dimension <= 1, got {}",
            c.f_vector().len() - 1
        )));
    }
    let n = c.len();
    let f0 = c.dim_range(0).len();
    // signless full incidence operator |d| + |d|ᵀ on all forms
    let d0 = exterior_derivative(c, 0);
    let mut dd = vec![vec![BigRational::zero(); n]; n];
    for (col, entries) in d0.cols.iter().enumerate() {
        for &(row, val) in entries {
            let r = f0 + row as usize;
            let v = BigRational::from(BigInt::from(val.abs()));
            dd[r][col] = v.clone();
            dd[col][r] = v;
        }
    }
    // square it
    let mut h = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if dd[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !dd[k][j].is_zero() {
                    let add = &dd[i][k] * &dd[k][j];
                    h[i][j] += add;
                }
            }
        }
    }
    // L − L⁻¹ column by column
    let l = connection_matrix(c);
    let rational: Vec<Vec<BigRational>> = l
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let col = linalg::solve_rational(&rational, &e)
            .ok_or_else(|| Error::Internal("connection matrix must be invertible".into()))?;
        for i in 0..n {
            let expect = BigRational::from(BigInt::from(l[i][j])) - &col[i];
            if h[i][j] != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, dual_cycle_complex, DEFAULT_SIMPLEX_CAP};
    use crate::fixedpoint::dihedral_automorphisms;
    use crate::graph::{cycle_graph, path_graph, Graph};

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn dual_cycle(n: usize) -> Complex {
        dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP).unwrap()
    }

    #[test]
    fn f_matrix_fixtures() {
        assert_eq!(f_matrix(&dual_cycle(4)).unwrap(), vec![vec![4, 4], vec![4, 2]]);
        let f8 = f_matrix(&dual_cycle(8)).unwrap();
        assert_eq!(f8[0], vec![8, 40, 48, 8]);
        assert_eq!(
            f8,
            vec![
                vec![8, 40, 48, 8],
                vec![40, 180, 192, 28],
                vec![48, 192, 184, 24],
                vec![8, 28, 24, 2]
            ]
        );
        let single = clique_complex(&Graph::new(1), DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(f_matrix(&single).unwrap(), vec![vec![1]]);
        // symmetry + ω₂ from the f-matrix
        for n in 4..=10 {
            let c = dual_cycle(n);
            let f = f_matrix(&c).unwrap();
            let dims = f.len();
            let mut alt = 0i64;
            for j in 0..dims {
                for k in 0..dims {
                    assert_eq!(f[j][k], f[k][j]);
                    alt += if (j + k) % 2 == 0 { f[j][k] } else { -f[j][k] };
                }
            }
            assert_eq!(alt, wu_characteristic(&c, 2).unwrap(), "n={n}");
        }
    }

    #[test]
    fn wu_characteristic_table_rows() {
        assert_eq!(wu_characteristic(&dual_cycle(6), 2).unwrap(), 5);
        let c8 = dual_cycle(8);
        assert_eq!(wu_characteristic(&c8, 2).unwrap(), -2);
        assert_eq!(wu_characteristic(&c8, 3).unwrap(), 2);
        assert_eq!(wu_characteristic(&c8, 4).unwrap(), -2);
        // ω₂(K_{n+1}) = (−1)^n
        for n in 1..=4usize {
            let c = clique_complex(&complete_graph(n + 1), DEFAULT_SIMPLEX_CAP).unwrap();
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(wu_characteristic(&c, 2).unwrap(), expected, "n={n}");
        }
        assert!(wu_characteristic(&dual_cycle(6), 5).is_err());
        // 12-periodicity of ω₂
        for n in 4..=6 {
            assert_eq!(
                wu_characteristic(&dual_cycle(n), 2).unwrap(),
                wu_characteristic(&dual_cycle(n + 12), 2).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn wu_orders_match_euler_and_wu() {
        for n in 4..=12 {
            let c = dual_cycle(n);
            let chi = c.euler_characteristic();
            let w2 = wu_characteristic(&c, 2).unwrap();
            assert_eq!(wu_characteristic(&c, 3).unwrap(), chi, "ω₃ n={n}");
            assert_eq!(wu_characteristic(&c, 4).unwrap(), w2, "ω₄ n={n}");
        }
    }

    #[test]
    fn pair_complex_structure_and_differential() {
        let c = dual_cycle(6);
        let pc = wu_complex(&c, DEFAULT_PAIR_CAP).unwrap();
        // pairs sorted by block with offsets consistent
        assert_eq!(*pc.offsets.last().unwrap(), pc.len());
        for t in 2..=(2 * c.f_vector().len()) {
            let range = pc.block(t);
            for &(i, j) in &pc.pairs[range] {
                let total = c.simplices()[i as usize].count_ones()
                    + c.simplices()[j as usize].count_ones();
                assert_eq!(total as usize, t);
            }
        }
        // d∘d = 0 exactly on every block
        for n in 4..=9 {
            let c = dual_cycle(n);
            let pc = wu_complex(&c, DEFAULT_PAIR_CAP).unwrap();
            let max_t = 2 * c.f_vector().len();
            for t in 4..=max_t {
                let d_t = wu_differential(&c, &pc, t);
                let d_t1 = wu_differential(&c, &pc, t - 1);
                // dense product must vanish
                let mut prod_nonzero = false;
                for (col, entries) in d_t.cols.iter().enumerate() {
                    let mut acc = vec![0i64; d_t1.rows];
                    for &(mid, v1) in entries {
                        for &(row, v2) in &d_t1.cols[mid as usize] {
                            acc[row as usize] += v1 * v2;
                        }
                    }
                    if acc.iter().any(|&v| v != 0) {
                        prod_nonzero = true;
                        let _ = col;
                    }
                }
                assert!(!prod_nonzero, "n={n} t={t}");
            }
        }
        // cap error
        assert!(matches!(wu_complex(&dual_cycle(6), 10), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn wu_betti_fixtures_and_supersum() {
        assert_eq!(wu_betti(&dual_cycle(5), DEFAULT_PAIR_CAP).unwrap(), vec![0, 1, 1]);
        assert_eq!(
            wu_betti(&dual_cycle(6), DEFAULT_PAIR_CAP).unwrap(),
            vec![0, 0, 5, 0, 0]
        );
        assert_eq!(
            wu_betti(&dual_cycle(7), DEFAULT_PAIR_CAP).unwrap(),
            vec![0, 0, 0, 0, 0]
        );
        for n in 4..=10 {
            let c = dual_cycle(n);
            let betti = wu_betti(&c, DEFAULT_PAIR_CAP).unwrap();
            let supersum: i64 = betti
                .iter()
                .enumerate()
                .map(|(i, &b)| if (i + 2) % 2 == 0 { b } else { -b })
                .sum();
            assert_eq!(supersum, wu_characteristic(&c, 2).unwrap(), "n={n}");
        }
    }

    #[test]
    fn wu_lefschetz_table() {
        let c6 = dual_cycle(6);
        let pc6 = wu_complex(&c6, DEFAULT_PAIR_CAP).unwrap();
        // frozen ordering: lexicographic on the permutation image lists
        let mut autos = dihedral_automorphisms(6).unwrap();
        autos.sort_by(|a, b| a.perm().cmp(b.perm()));
        let values: Vec<i64> = autos.iter().map(|t| wu_lefschetz(&c6, &pc6, t)).collect();
        assert_eq!(values, vec![5, -1, 1, 0, -1, 2, 1, 3, -1, 2, 0, 1]);
        // identity is ω₂; G₇ vanishes entirely
        let c7 = dual_cycle(7);
        let pc7 = wu_complex(&c7, DEFAULT_PAIR_CAP).unwrap();
        for t in dihedral_automorphisms(7).unwrap() {
            assert_eq!(wu_lefschetz(&c7, &pc7, &t), 0, "{}", t.label());
        }
    }

    #[test]
    fn wu_gauss_bonnet() {
        for n in 4..=10 {
            let c = dual_cycle(n);
            let curv = wu_curvature(&c).unwrap();
            let total: BigRational = curv.iter().sum();
            assert_eq!(
                total,
                BigRational::from(BigInt::from(wu_characteristic(&c, 2).unwrap())),
                "n={n}"
            );
        }
    }

    #[test]
    fn connection_matrix_facts() {
        // det = (−1)^{number of odd-dimensional simplices}, so the sign
        // pattern over the cycle family is −1 exactly at n ≡ 0, 5 (mod 6)
        for (n, expected) in [(5, -1), (6, -1), (7, 1), (8, 1), (9, 1), (10, 1), (11, -1)] {
            let c = dual_cycle(n);
            let report = connection_report(&c, 4000).unwrap();
            assert_eq!(report.det, BigInt::from(expected), "n={n}");
            let odd = c
                .simplices()
                .iter()
                .filter(|&&m| m.count_ones() % 2 == 0)
                .count();
            let parity = if odd % 2 == 0 { 1 } else { -1 };
            assert_eq!(report.det, BigInt::from(parity), "parity n={n}");
        }
        // path-complement family: −1 exactly at n ≡ 3, 4 (mod 6)
        for n in 3..=10usize {
            let c = crate::complex::dual_path_complex(n, DEFAULT_SIMPLEX_CAP).unwrap();
            let report = connection_report(&c, 4000).unwrap();
            let expected = if n % 6 == 3 || n % 6 == 4 { -1 } else { 1 };
            assert_eq!(report.det, BigInt::from(expected), "path n={n}");
        }
        for n in 5..=10 {
            let c = dual_cycle(n);
            let report = connection_report(&c, 4000).unwrap();
            let chi = c.euler_characteristic();
            assert_eq!(report.signature, chi, "signature n={n}");
            assert_eq!(
                report.energy_sum,
                BigRational::from(BigInt::from(chi)),
                "energy n={n}"
            );
            let odd = c
                .simplices()
                .iter()
                .filter(|&&m| (m.count_ones() - 1) % 2 == 1)
                .count();
            assert_eq!(report.negative_count, odd, "negatives n={n}");
        }
        let c10 = dual_cycle(10);
        assert_eq!(
            connection_report(&c10, 4000).unwrap().energy_sum,
            BigRational::from(BigInt::from(2))
        );
        assert!(matches!(connection_report(&c10, 10), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn counting_matrix_facts() {
        let c10 = dual_cycle(10);
        let report = counting_report(&c10, 4000).unwrap();
        assert!(report.positive_definite);
        assert!(report.isospectral_to_inverse, "dev {}", report.max_deviation);
        let c8 = dual_cycle(8);
        assert!(counting_report(&c8, 4000).unwrap().isospectral_to_inverse);
        // diagonal = 2^{k+1} − 1
        let m = counting_matrix(&c8);
        for (i, &s) in c8.simplices().iter().enumerate() {
            assert_eq!(m[i][i], (1 << s.count_ones()) - 1);
        }
    }

    #[test]
    fn hydrogen_identity_for_one_dimensional_complexes() {
        for n in 4..=8 {
            let c = clique_complex(&cycle_graph(n).unwrap(), DEFAULT_SIMPLEX_CAP).unwrap();
            assert!(hydrogen_check(&c).unwrap(), "cycle n={n}");
        }
        let p6 = clique_complex(&path_graph(6).unwrap(), DEFAULT_SIMPLEX_CAP).unwrap();
        assert!(hydrogen_check(&p6).unwrap());
        assert!(matches!(
            hydrogen_check(&dual_cycle(6)),
            Err(Error::InvalidArgument(_))
        ));
    }
}
