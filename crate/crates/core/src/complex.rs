//! Finite abstract simplicial complexes with simplices stored as bitmasks.
//!
//! A [`Complex`] is a set of nonempty vertex subsets closed under taking
//! nonempty subsets, stored in a *canonical order*: primary key cardinality
//! ascending, secondary key lexicographic on the sorted vertex sequence.
//! All matrix modules (exterior derivatives, connection matrices, …) index
//! simplices by their position in this order, so the order is frozen.
//!
//! Simplices are `u64` bitmasks, which caps complex-level operations at 64
//! vertices — far more than any computation here needs — and makes subset
//! and intersection tests single instructions.
//!
//! The main constructors are [`clique_complex`] (the Whitney complex of a
//! graph: all vertex sets of complete subgraphs) and the recursion-based
//! [`dual_cycle_complex`] / [`dual_path_complex`], which build the clique
//! complexes of cycle and path complements *without any clique search*:
//! cliques in the complement of a cycle are exactly the independent sets of
//! the cycle (configurations of non-attacking kings on a circular board),
//! and those satisfy a two-term recursion.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::cmp::Ordering;

/// Default cap on the number of simplices a constructor may produce.
pub const DEFAULT_SIMPLEX_CAP: usize = 5_000_000;

/// Canonical simplex order: cardinality ascending, then lexicographic on the
/// sorted vertex sequence.
///
/// For equal cardinalities the lexicographically smaller simplex is the one
/// containing the lowest vertex on which the two masks differ.
pub fn simplex_cmp(a: u64, b: u64) -> Ordering {
    let (ca, cb) = (a.count_ones(), b.count_ones());
    ca.cmp(&cb).then_with(|| {
        if a == b {
            return Ordering::Equal;
        }
        let low = (a ^ b) & (a ^ b).wrapping_neg();
        if a & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

/// Converts a sorted vertex list into a bitmask.
pub fn mask_from_vertices(vertices: &[usize]) -> u64 {
    let mut m = 0u64;
    for &v in vertices {
        assert!(v < 64, "simplex vertex {v} out of range");
        m |= 1 << v;
    }
    m
}

/// Converts a bitmask into the increasing vertex list.
pub fn vertices_of_mask(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// A finite abstract simplicial complex in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Complex {
    simplices: Vec<u64>,
    /// `offsets[k]..offsets[k+1]` indexes the simplices of dimension `k`.
    offsets: Vec<usize>,
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex(f = {:?})", self.f_vector())
    }
}

impl Complex {
    /// Builds a complex from arbitrary simplex masks: sorts canonically and
    /// removes duplicates. Does **not** add missing subsets; see
    /// [`Complex::is_downward_closed`].
    pub fn from_masks(mut masks: Vec<u64>) -> Complex {
        masks.retain(|&m| m != 0);
        masks.sort_unstable_by(|&a, &b| simplex_cmp(a, b));
        masks.dedup();
        Complex::from_sorted_masks(masks)
    }

    /// Builds a complex from masks already in canonical order without
    /// duplicates (checked in debug builds only).
    pub fn from_sorted_masks(masks: Vec<u64>) -> Complex {
        debug_assert!(masks.windows(2).all(|w| simplex_cmp(w[0], w[1]) == Ordering::Less));
        let max_card = masks.last().map_or(0, |m| m.count_ones() as usize);
        let mut offsets = vec![0usize; max_card + 2];
        for &m in &masks {
            offsets[m.count_ones() as usize] += 1;
        }
        let mut acc = 0;
        for k in 1..offsets.len() {
            let c = offsets[k];
            offsets[k] = acc;
            acc += c;
        }
        // offsets currently holds starts indexed by cardinality; shift to
        // dimension indexing (cardinality k+1 ↔ dimension k) with sentinel.
        let mut dim_offsets = Vec::with_capacity(max_card + 1);
        for k in 1..=max_card {
            dim_offsets.push(offsets[k]);
        }
        dim_offsets.push(masks.len());
        Complex { simplices: masks, offsets: dim_offsets }
    }

    /// The empty complex.
    pub fn empty() -> Complex {
        Complex { simplices: Vec::new(), offsets: vec![0] }
    }

    /// All simplices in canonical order.
    pub fn simplices(&self) -> &[u64] {
        &self.simplices
    }

    /// Number of simplices.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    /// Whether the complex has no simplices.
    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Largest simplex dimension, or `None` for the empty complex.
    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.last().map(|m| m.count_ones() as usize - 1)
    }

    /// Index range of the simplices of dimension `k`.
    pub fn dim_range(&self, k: usize) -> std::ops::Range<usize> {
        if k + 1 >= self.offsets.len() {
            return self.simplices.len()..self.simplices.len();
        }
        self.offsets[k]..self.offsets[k + 1]
    }

    /// The simplices of dimension `k` (canonical order).
    pub fn simplices_of_dim(&self, k: usize) -> &[u64] {
        &self.simplices[self.dim_range(k)]
    }

    /// Canonical index of a simplex mask, if present.
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.simplices.binary_search_by(|&m| simplex_cmp(m, mask)).ok()
    }

    /// Membership test.
    pub fn contains(&self, mask: u64) -> bool {
        self.index_of(mask).is_some()
    }

    /// `f[k]` = number of simplices of dimension `k`; empty for the empty
    /// complex.
    pub fn f_vector(&self) -> Vec<u64> {
        (0..self.offsets.len() - 1).map(|k| self.dim_range(k).len() as u64).collect()
    }

    /// Alternating sum `Σ (−1)^k f_k`; 0 for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Union of all simplex masks (the vertex set actually used).
    pub fn vertex_mask(&self) -> u64 {
        self.simplices.iter().fold(0, |acc, &m| acc | m)
    }

    /// Checks closure under nonempty subsets by testing every facet of every
    /// simplex.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices.iter().all(|&m| {
            if m.count_ones() == 1 {
                return true;
            }
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !self.contains(m & !bit) {
                    return false;
                }
            }
            true
        })
    }

    /// The subcomplex of all simplices contained in `mask`.
    pub fn induced_subcomplex(&self, mask: u64) -> Complex {
        Complex::from_sorted_masks(
            self.simplices.iter().copied().filter(|&m| m & !mask == 0).collect(),
        )
    }

    /// Maximal simplices (not strictly contained in any other simplex), in
    /// canonical order.
    pub fn facets(&self) -> Vec<u64> {
        let vertex_mask = self.vertex_mask();
        self.simplices
            .iter()
            .copied()
            .filter(|&m| {
                let mut outside = vertex_mask & !m;
                while outside != 0 {
                    let bit = outside & outside.wrapping_neg();
                    outside &= outside - 1;
                    if self.contains(m | bit) {
                        return false;
                    }
                }
                true
            })
            .collect()
    }

    /// Serializes the complex as a JSON array of vertex arrays in canonical
    /// order.
    pub fn to_json(&self) -> String {
        let arr: Vec<Vec<usize>> = self.simplices.iter().map(|&m| vertices_of_mask(m)).collect();
        serde_json::to_string(&arr).expect("complex serialization cannot fail")
    }
}

/// Whitney (clique) complex of a graph: all vertex sets of complete
/// subgraphs, canonically ordered. Errors if the graph has more than 64
/// vertices or more than `simplex_cap` cliques.
pub fn clique_complex(g: &Graph, simplex_cap: usize) -> Result<Complex> {
    if g.n() > 64 {
        return Err(Error::BoundExceeded(format!(
            "complex operations support at most 64 vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(Complex::empty());
    }
    let rows = g.mask_rows();
    let mut out: Vec<u64> = Vec::new();
    let full: u64 = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    expand_cliques(&rows, 0, full, simplex_cap, &mut out)?;
    Ok(Complex::from_masks(out))
}

/// Depth-first enumeration of all cliques: each clique is emitted exactly
/// once, extending by vertices larger than the current maximum.
fn expand_cliques(
    rows: &[u64],
    current: u64,
    candidates: u64,
    cap: usize,
    out: &mut Vec<u64>,
) -> Result<()> {
    let mut cand = candidates;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let s = current | (1 << v);
        if out.len() >= cap {
            return Err(Error::BoundExceeded(format!(
                "clique enumeration exceeded the simplex cap {cap}"
            )));
        }
        out.push(s);
        expand_cliques(rows, s, cand & rows[v], cap, out)?;
    }
    Ok(())
}

/// Clique complex of the cycle complement `G_n`, built by the two-term
/// extension recursion (no clique search).
///
/// Writing `L(m)` for the simplex set of `G_m`, the recursion is
/// `L(m) = L(m−1) ∪ { extend(x) : x ∈ L(m−2) ∪ {∅} }` where `extend(x)`
/// adds vertex `m−2` when `0 ∈ x` and vertex `m−1` otherwise. The anchors
/// `L(4)`, `L(5)` are built by brute force.
pub fn dual_cycle_complex(n: usize, simplex_cap: usize) -> Result<Complex> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "dual cycle complex needs n >= 4, got {n}"
        )));
    }
    if n > 64 {
        return Err(Error::BoundExceeded(format!(
            "complex operations support at most 64 vertices, got {n}"
        )));
    }
    let mut prev = clique_complex(&crate::graph::cycle_complement(4)?, simplex_cap)?
        .simplices()
        .to_vec();
    let mut cur = clique_complex(&crate::graph::cycle_complement(5)?, simplex_cap)?
        .simplices()
        .to_vec();
    if n == 4 {
        return Ok(Complex::from_sorted_masks(prev));
    }
    for m in 6..=n {
        if cur.len() + prev.len() + 1 > simplex_cap {
            return Err(Error::BoundExceeded(format!(
                "recursion exceeded the simplex cap {simplex_cap}"
            )));
        }
        let mut next = Vec::with_capacity(cur.len() + prev.len() + 1);
        next.extend_from_slice(&cur);
        next.push(1 << (m - 1)); // extend(∅)
        for &x in &prev {
            next.push(if x & 1 != 0 { x | (1 << (m - 2)) } else { x | (1 << (m - 1)) });
        }
        next.sort_unstable_by(|&a, &b| simplex_cmp(a, b));
        prev = cur;
        cur = next;
    }
    Ok(Complex::from_sorted_masks(cur))
}

/// Clique complex of the path complement `G_n⁺`, built by the recursion
/// `L⁺(m) = L⁺(m−1) ∪ { x ∪ {m−1} : x ∈ L⁺(m−2) ∪ {∅} }`
/// (independent sets of the path either avoid the last vertex or contain it
/// and avoid its predecessor).
pub fn dual_path_complex(n: usize, simplex_cap: usize) -> Result<Complex> {
    if n == 0 {
        return Err(Error::InvalidArgument("dual path complex needs n >= 1".into()));
    }
    if n > 64 {
        return Err(Error::BoundExceeded(format!(
            "complex operations support at most 64 vertices, got {n}"
        )));
    }
    let mut prev: Vec<u64> = Vec::new(); // L⁺(0)
    let mut cur: Vec<u64> = vec![1]; // L⁺(1) = {{0}}
    for m in 2..=n {
        if cur.len() + prev.len() + 1 > simplex_cap {
            return Err(Error::BoundExceeded(format!(
                "recursion exceeded the simplex cap {simplex_cap}"
            )));
        }
        let mut next = Vec::with_capacity(cur.len() + prev.len() + 1);
        next.extend_from_slice(&cur);
        next.push(1 << (m - 1));
        for &x in &prev {
            next.push(x | (1 << (m - 1)));
        }
        next.sort_unstable_by(|&a, &b| simplex_cmp(a, b));
        prev = cur;
        cur = next;
    }
    Ok(Complex::from_sorted_masks(cur))
}

/// Hyper-Fibonacci numbers: `F_0 = 1`, `F_1 = 0`,
/// `F_n = F_{n−1} + F_{n−2} + 1`. For `n ≥ 4` this is the total simplex
/// count of [`dual_cycle_complex`].
pub fn hyper_fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 0u64); // F_0, F_1
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = a + b + 1;
        a = b;
        b = c;
    }
    b
}

/// Clique complex of the subgraph induced on the neighbors of `v` (the unit
/// sphere of `v`).
pub fn unit_sphere_complex(g: &Graph, v: usize, simplex_cap: usize) -> Result<Complex> {
    if v >= g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} out of range for n = {}",
            g.n()
        )));
    }
    induced_complex(g, &g.neighbors(v), simplex_cap)
}

/// Clique complex of the subgraph induced on `vertices`.
pub fn induced_complex(g: &Graph, vertices: &[usize], simplex_cap: usize) -> Result<Complex> {
    clique_complex(&g.induced(vertices), simplex_cap)
}

/// Zykov join: disjoint union of the two graphs plus all cross edges. The
/// simplex generating polynomials multiply under this operation.
pub fn zykov_join(a: &Graph, b: &Graph) -> Graph {
    let (na, nb) = (a.n(), b.n());
    let mut g = Graph::new(na + nb);
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v);
    }
    for u in 0..na {
        for v in 0..nb {
            g.add_edge(u, na + v);
        }
    }
    g
}

/// Disjoint union of two graphs (second block shifted by `a.n()`).
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let na = a.n();
    let mut g = Graph::new(na + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v);
    }
    g
}
