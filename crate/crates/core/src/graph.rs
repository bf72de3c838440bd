//! Finite simple graphs with bitset adjacency.
//!
//! Provides the graph families studied throughout the library — cycles $C_n$
//! and their complements $G_n = \overline{C_n}$, paths $L_n$ and their
//! complements $G_n^+ = \overline{L_n}$, circulants $Ci_n(S)$, complements of
//! dihedral Cayley graphs $H_n$, Paley graphs $QR(q)$, prime divisibility
//! graphs $P(n)$ and barycentric refinements — together with elementary
//! metric and combinatorial invariants (diameter, Wiener and Harary indices,
//! degree sequence, claw-freeness, independence/clique/chromatic numbers).
//!
//! Adjacency is stored as one bitset row per vertex, so neighborhood
//! operations are word-parallel and graphs with a few hundred vertices are
//! cheap. NP-hard invariants (independence, clique, chromatic number,
//! Hamiltonicity) use exact search and are guarded by an explicit size
//! bound.

use crate::complex;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Default vertex-count bound for exact NP-hard searches.
pub const DEFAULT_EXACT_SEARCH_BOUND: usize = 20;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are bitsets (`ceil(n/64)` words per vertex). The structure
/// is immutable after construction by the family constructors; all
/// invariants (symmetry, no self-loops) are maintained by [`Graph::add_edge`].
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    label: String,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, n={}, m={})", self.label, self.n, self.edge_count())
    }
}

impl Graph {
    /// Creates an edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, adj: vec![0; words * n.max(1)], label: String::new() }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Human-readable construction label (e.g. `"cycle-complement(12)"`).
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Attaches a construction label; used by the family constructors.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Inserts the undirected edge `{u, v}`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range n={}", self.n);
        if u == v {
            return;
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Tests whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (wi, &w) in self.row(v).iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    /// All edges `{u, v}` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement graph: `{u,v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.label = if self.label.is_empty() {
            String::new()
        } else {
            format!("complement({})", self.label)
        };
        g
    }

    /// Induced subgraph on the given vertices (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut frontier = vec![src];
        let mut d = 0u32;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.neighbors(u) {
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Whether the graph is connected (vacuously true for `n ≤ 1`).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the graph contains a triangle.
    pub fn has_triangle(&self) -> bool {
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                for wi in 0..self.words {
                    if self.row(u)[wi] & self.row(v)[wi] != 0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// No induced `K_{1,3}`: every vertex neighborhood has independence
    /// number at most 2.
    pub fn is_claw_free(&self) -> bool {
        for v in 0..self.n {
            let nb = self.neighbors(v);
            for i in 0..nb.len() {
                for j in (i + 1)..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for k in (j + 1)..nb.len() {
                        if !self.has_edge(nb[i], nb[k]) && !self.has_edge(nb[j], nb[k]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Largest clique size, by exact branch-and-bound. Errors when the graph
    /// exceeds `bound` vertices.
    pub fn clique_number(&self, bound: usize) -> Result<usize> {
        self.check_bound(bound, "clique number")?;
        let rows = self.mask_rows();
        let mut best = 0usize;
        let full: u64 = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        max_clique(&rows, full, 0, &mut best);
        Ok(best)
    }

    /// Largest independent set size (clique number of the complement).
    pub fn independence_number(&self, bound: usize) -> Result<usize> {
        self.complement().clique_number(bound)
    }

    /// Exact chromatic number via iterative-deepening backtracking, starting
    /// from the clique-number lower bound.
    pub fn chromatic_number(&self, bound: usize) -> Result<usize> {
        self.check_bound(bound, "chromatic number")?;
        if self.n == 0 {
            return Ok(0);
        }
        let lower = self.clique_number(bound)?.max(1);
        // Order vertices by decreasing degree for faster pruning.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        for k in lower..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.try_color(&order, 0, k, 0, &mut colors) {
                return Ok(k);
            }
        }
        Ok(self.n)
    }

    fn try_color(
        &self,
        order: &[usize],
        idx: usize,
        k: usize,
        used: usize,
        colors: &mut [usize],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // Symmetry breaking: a vertex may open at most one new color.
        let limit = k.min(used + 1);
        'col: for c in 0..limit {
            for u in self.neighbors(v) {
                if colors[u] == c {
                    continue 'col;
                }
            }
            colors[v] = c;
            if self.try_color(order, idx + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }

    /// Exact Hamiltonian cycle search by backtracking; returns a witness
    /// cycle starting at vertex 0 if one exists.
    pub fn hamiltonian_cycle(&self, bound: usize) -> Result<Option<Vec<usize>>> {
        self.check_bound(bound, "Hamiltonian cycle search")?;
        if self.n < 3 {
            return Ok(None);
        }
        let rows = self.mask_rows();
        let mut path = vec![0usize];
        let mut visited: u64 = 1;
        if hamilton_extend(&rows, self.n, &mut path, &mut visited) {
            Ok(Some(path))
        } else {
            Ok(None)
        }
    }

    fn check_bound(&self, bound: usize, what: &str) -> Result<()> {
        if self.n > bound {
            return Err(Error::BoundExceeded(format!(
                "exact {what} permitted only for n <= {bound}, got n = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Adjacency rows as single 64-bit masks; requires `n ≤ 64`.
    pub(crate) fn mask_rows(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask rows require n <= 64");
        (0..self.n).map(|v| self.row(v)[0]).collect()
    }

    /// Strong-regularity parameters `(n, k, lambda, mu)` if the graph is
    /// strongly regular, else `None`. Brute force; intended for small `n`.
    pub fn strong_regularity(&self) -> Option<(usize, usize, usize, usize)> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        if (1..self.n).any(|v| self.degree(v) != k) {
            return None;
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let common = (0..self.words)
                    .map(|wi| (self.row(u)[wi] & self.row(v)[wi]).count_ones() as usize)
                    .sum::<usize>();
                let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                match slot {
                    None => *slot = Some(common),
                    Some(x) if *x == common => {}
                    Some(_) => return None,
                }
            }
        }
        Some((self.n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    /// Computes the metric and combinatorial invariant record. Exact NP-hard
    /// searches are refused above `exact_bound` vertices.
    pub fn metric_invariants(&self, exact_bound: usize) -> Result<MetricInvariants> {
        self.check_bound(exact_bound, "invariant search")?;
        let connected = self.is_connected() && self.n > 0;
        let (diameter, wiener, harary) = if connected {
            let mut diam = 0u32;
            let mut wiener2 = 0u64;
            let mut harary = BigRational::from(BigInt::from(0));
            for u in 0..self.n {
                for (v, d) in self.bfs_distances(u).into_iter().enumerate() {
                    let d = d.expect("connected");
                    if v == u {
                        continue;
                    }
                    diam = diam.max(d);
                    wiener2 += d as u64;
                    harary += BigRational::new(BigInt::from(1), BigInt::from(d));
                }
            }
            (
                MetricValue::Finite(diam),
                MetricValue::Finite(wiener2 / 2),
                MetricValue::Finite(harary),
            )
        } else {
            (MetricValue::Infinite, MetricValue::Infinite, MetricValue::Infinite)
        };
        let mut degree_sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        let is_eulerian_degree_parity = degree_sequence.iter().all(|d| d % 2 == 0);
        Ok(MetricInvariants {
            diameter,
            wiener,
            harary,
            degree_sequence,
            is_eulerian_degree_parity,
            is_claw_free: self.is_claw_free(),
            independence_number: self.independence_number(exact_bound)?,
            clique_number: self.clique_number(exact_bound)?,
            chromatic_number: self.chromatic_number(exact_bound)?,
        })
    }

    /// Inductive dimension: the empty graph has dimension $-1$ and
    /// $\dim(G) = 1 + \frac{1}{|V|} \sum_{v} \dim(S(v))$, averaging over the
    /// unit spheres $S(v)$ (induced subgraphs on the neighbors of $v$).
    ///
    /// Computed exactly as a rational number, memoizing on vertex subsets, so
    /// the graph must have at most 64 vertices.
    pub fn inductive_dimension(&self) -> Result<BigRational> {
        if self.n > 64 {
            return Err(Error::InvalidArgument(format!(
                "inductive dimension is limited to 64 vertices, got {}",
                self.n
            )));
        }
        let rows: Vec<u64> = (0..self.n).map(|v| self.row(v)[0]).collect();
        let full: u64 = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut memo: std::collections::HashMap<u64, BigRational> =
            std::collections::HashMap::new();
        fn dim_of(
            mask: u64,
            rows: &[u64],
            memo: &mut std::collections::HashMap<u64, BigRational>,
        ) -> BigRational {
            if mask == 0 {
                return BigRational::from(BigInt::from(-1));
            }
            if let Some(d) = memo.get(&mask) {
                return d.clone();
            }
            let mut sum = BigRational::from(BigInt::from(0));
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                sum += dim_of(rows[v] & mask, rows, memo);
            }
            let count = BigInt::from(mask.count_ones());
            let result = BigRational::from(BigInt::from(1)) + sum / BigRational::from(count);
            memo.insert(mask, result.clone());
            result
        }
        Ok(dim_of(full, &rows, &mut memo))
    }

    /// Serializes as compact JSON `{"n": ..., "edges": [[u,v], ...]}` with
    /// `u < v` and edges sorted lexicographically.
    pub fn to_json(&self) -> String {
        let doc = GraphJson { n: self.n, edges: self.edges().iter().map(|&(u, v)| [u, v]).collect() };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    /// Parses the JSON produced by [`Graph::to_json`].
    pub fn from_json(s: &str) -> Result<Graph> {
        let doc: GraphJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("bad graph JSON: {e}")))?;
        let mut g = Graph::new(doc.n);
        for [u, v] in doc.edges {
            if u >= doc.n || v >= doc.n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n = {}",
                    doc.n
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// A distance-derived quantity that is infinite on disconnected graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricValue<T> {
    Finite(T),
    Infinite,
}

impl<T: std::fmt::Display> std::fmt::Display for MetricValue<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MetricValue::Finite(x) => write!(f, "{x}"),
            MetricValue::Infinite => write!(f, "infinite"),
        }
    }
}

/// Elementary invariants of a graph; see [`Graph::metric_invariants`].
#[derive(Clone, Debug)]
pub struct MetricInvariants {
    /// Largest pairwise distance; infinite when disconnected.
    pub diameter: MetricValue<u32>,
    /// Sum of distances over unordered pairs.
    pub wiener: MetricValue<u64>,
    /// Sum of reciprocal distances over **ordered** pairs, exact.
    pub harary: MetricValue<BigRational>,
    /// Vertex degrees in decreasing order.
    pub degree_sequence: Vec<usize>,
    /// All degrees even (Eulerian circuit parity condition).
    pub is_eulerian_degree_parity: bool,
    /// No induced star `K_{1,3}`.
    pub is_claw_free: bool,
    /// Maximum independent set size (exact).
    pub independence_number: usize,
    /// Maximum clique size (exact).
    pub clique_number: usize,
    /// Chromatic number (exact).
    pub chromatic_number: usize,
}

fn max_clique(rows: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut cand = candidates;
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        max_clique(rows, cand & rows[v], size + 1, best);
    }
    *best = (*best).max(size);
}

fn hamilton_extend(rows: &[u64], n: usize, path: &mut Vec<usize>, visited: &mut u64) -> bool {
    if path.len() == n {
        return rows[*path.last().unwrap()] & 1 == 1; // closes back to vertex 0
    }
    let last = *path.last().unwrap();
    let mut cand = rows[last] & !*visited;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        *visited |= 1 << v;
        if hamilton_extend(rows, n, path, visited) {
            return true;
        }
        path.pop();
        *visited &= !(1 << v);
    }
    false
}

/// Cycle graph `C_n` on vertices `0..n` with edges `{i, i+1 mod n}`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle graph needs n >= 3, got {n}")));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g.with_label(format!("cycle({n})")))
}

/// Path graph `L_n` on vertices `0..n` with edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1);
    }
    Ok(g.with_label(format!("path({n})")))
}

/// Complement of the cycle: `G_n`.
pub fn cycle_complement(n: usize) -> Result<Graph> {
    Ok(cycle_graph(n)?.complement().with_label(format!("cycle-complement({n})")))
}

/// Complement of the path: `G_n⁺`.
pub fn path_complement(n: usize) -> Result<Graph> {
    Ok(path_graph(n)?.complement().with_label(format!("path-complement({n})")))
}

/// Circulant graph `Ci_n(gens)`: edges `{i, i+s mod n}` for each generator.
/// The generator set is closed under negation automatically; a generator
/// congruent to 0 is invalid.
pub fn circulant_graph(n: usize, gens: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("circulant graph needs n >= 1".into()));
    }
    let mut symmetric = std::collections::BTreeSet::new();
    for &s in gens {
        let s = s % n;
        if s == 0 {
            return Err(Error::InvalidArgument("circulant generator 0 (mod n) is invalid".into()));
        }
        symmetric.insert(s);
        symmetric.insert(n - s);
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for &s in &symmetric {
            g.add_edge(i, (i + s) % n);
        }
    }
    let gen_list: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
    Ok(g.with_label(format!("circulant({n};{})", gen_list.join(","))))
}

/// Complement of the Cayley graph of the dihedral group `D_n` (2n elements)
/// with generators rotation `±1` and a reflection.
///
/// Rotations `r^i` are vertices `i`, reflected elements `s·r^i` are vertices
/// `n+i`. Right multiplication by the generators yields two n-cycles joined
/// by the matching `r^i ↔ s·r^{-i}`, i.e. a prism (circular ladder); the
/// result is its complement `H_n`. For `n = 4` this is the complement of the
/// cube graph.
pub fn dihedral_cayley_complement(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "dihedral Cayley complement needs n >= 3, got {n}"
        )));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n); // r^i ~ r^{i+1}
        g.add_edge(n + i, n + (i + 1) % n); // s r^i ~ s r^{i+1}
        g.add_edge(i, n + (n - i) % n); // r^i · s = s r^{-i}
    }
    Ok(g.complement().with_label(format!("dihedral-complement({n})")))
}

/// Paley graph `QR(q)` for prime `q ≡ 1 (mod 4)`: edge `(a,b)` iff `a−b` is
/// a nonzero square mod `q`.
pub fn paley_graph(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("Paley parameter {q} is not prime")));
    }
    if q % 4 != 1 {
        return Err(Error::InvalidArgument(format!("Paley parameter {q} is not 1 mod 4")));
    }
    let mut squares = vec![false; q];
    for k in 1..q {
        squares[k * k % q] = true;
    }
    let mut g = Graph::new(q);
    for a in 0..q {
        for b in (a + 1)..q {
            if squares[b - a] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g.with_label(format!("paley({q})")))
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Square-free integers in `[2, n]`, the vertex values of [`prime_graph`].
pub fn prime_graph_values(n: usize) -> Vec<u64> {
    (2..=n as u64).filter(|&k| is_square_free(k)).collect()
}

fn is_square_free(mut k: u64) -> bool {
    let mut d = 2u64;
    while d * d <= k {
        if k % d == 0 {
            k /= d;
            if k % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// Prime graph `P(n)`: vertices are the square-free integers in `[2, n]`
/// (vertex `i` stands for [`prime_graph_values`]`(n)[i]`), with an edge
/// between `a` and `b` iff one divides the other.
pub fn prime_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("prime graph needs n >= 2, got {n}")));
    }
    let values = prime_graph_values(n);
    let mut g = Graph::new(values.len());
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            let (a, b) = (values[i], values[j]);
            if b % a == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g.with_label(format!("prime({n})")))
}

/// Barycentric refinement: one vertex per simplex of the clique complex,
/// with an edge when one simplex strictly contains the other.
///
/// Vertex `i` corresponds to the `i`-th simplex in the canonical order of
/// [`complex::clique_complex`].
pub fn barycentric_refinement(g: &Graph, simplex_cap: usize) -> Result<Graph> {
    let complex = complex::clique_complex(g, simplex_cap)?;
    let sims = complex.simplices();
    let mut out = Graph::new(sims.len());
    for i in 0..sims.len() {
        for j in (i + 1)..sims.len() {
            // Canonical order sorts by cardinality, so any strict
            // containment across i < j is sims[i] ⊂ sims[j].
            if sims[i] & sims[j] == sims[i] && sims[i] != sims[j] {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out.with_label(format!("barycentric({})", g.label())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn cycle_graph_basics() {
        let g = cycle_graph(3).unwrap();
        assert_eq!(g.edge_count(), 3); // triangle
        let g7 = cycle_graph(7).unwrap();
        assert!((0..7).all(|v| g7.degree(v) == 2));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn path_graph_basics() {
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
        assert_eq!(path_graph(2).unwrap().edge_count(), 1);
        assert_eq!(path_graph(3).unwrap().complement().edge_count(), 1);
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn complement_is_involution() {
        let g = cycle_graph(8).unwrap();
        let gcc = g.complement().complement();
        assert_eq!(g.edges(), gcc.edges());
        // complement of a complete graph has no edges
        let mut k5 = Graph::new(5);
        for u in 0..5 {
            for v in (u + 1)..5 {
                k5.add_edge(u, v);
            }
        }
        assert_eq!(k5.complement().edge_count(), 0);
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let g = cycle_graph(5).unwrap();
        let c = g.complement();
        // C_5 complement is again a 5-cycle: 2-regular and connected.
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert!(c.is_connected());
    }

    #[test]
    fn circulant_matches_cycle_and_counts_edges() {
        let a = circulant_graph(9, &[1]).unwrap();
        let b = cycle_graph(9).unwrap();
        assert_eq!(a.edges(), b.edges());
        // Symmetrized generators {2,3,4,7,13} mod 20: 13 = −7, so the
        // symmetric residue set is {2,3,4,7,13,16,17,18} (8 residues) and the
        // graph is 8-regular with 20·8/2 = 80 edges.
        let c = circulant_graph(20, &[2, 3, 4, 7, 13]).unwrap();
        assert!((0..20).all(|v| c.degree(v) == 8));
        assert_eq!(c.edge_count(), 80);
        assert!(circulant_graph(6, &[6]).is_err());
    }

    #[test]
    fn circulant_full_generators_is_cycle_complement() {
        // Generators 2..n-2 produce the complement of the cycle.
        let gens: Vec<usize> = (2..=9).collect();
        let a = circulant_graph(11, &gens).unwrap();
        let b = cycle_complement(11).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn dihedral_cayley_complement_of_4_is_cube_complement() {
        let h4 = dihedral_cayley_complement(4).unwrap();
        assert_eq!(h4.n(), 8);
        // Cube is 3-regular on 8 vertices, so complement is 4-regular.
        assert!((0..8).all(|v| h4.degree(v) == 4));
        // The underlying Cayley graph is bipartite & vertex transitive with
        // girth 4 (the cube): its complement contains triangles.
        assert!(h4.has_triangle());
    }

    #[test]
    fn paley_graphs() {
        let p5 = paley_graph(5).unwrap();
        assert_eq!(p5.edges(), cycle_graph(5).unwrap().edges());
        let p13 = paley_graph(13).unwrap();
        assert_eq!(p13.edge_count(), 13 * 6 / 2);
        // Self-complementary: check degree sequence and edge count agree.
        assert_eq!(p13.complement().edge_count(), p13.edge_count());
        assert!(paley_graph(7).is_err()); // 7 ≡ 3 mod 4
        assert!(paley_graph(9).is_err()); // prime power, out of scope
    }

    #[test]
    fn prime_graph_vertices_and_edges() {
        assert_eq!(prime_graph_values(10), vec![2, 3, 5, 6, 7, 10]);
        let p3 = prime_graph(3).unwrap();
        assert_eq!(p3.n(), 2);
        assert_eq!(p3.edge_count(), 0);
        let p10 = prime_graph(10).unwrap();
        // edges: (2,6), (2,10), (3,6), (5,10)
        assert_eq!(p10.edge_count(), 4);
    }

    #[test]
    fn barycentric_refinement_of_small_complete_graphs() {
        let mut k2 = Graph::new(2);
        k2.add_edge(0, 1);
        let b = barycentric_refinement(&k2, 1000).unwrap();
        // Path on three vertices: 2 vertices + 1 edge-vertex.
        assert_eq!(b.n(), 3);
        assert_eq!(b.edge_count(), 2);

        let mut k3 = Graph::new(3);
        for u in 0..3 {
            for v in (u + 1)..3 {
                k3.add_edge(u, v);
            }
        }
        let b3 = barycentric_refinement(&k3, 1000).unwrap();
        assert_eq!(b3.n(), 7);
    }

    #[test]
    fn metric_invariants_on_cycle_complement_10() {
        let g = cycle_complement(10).unwrap();
        let inv = g.metric_invariants(DEFAULT_EXACT_SEARCH_BOUND).unwrap();
        assert_eq!(inv.diameter, MetricValue::Finite(2));
        assert_eq!(inv.wiener, MetricValue::Finite(55)); // n(n+1)/2
        match &inv.harary {
            MetricValue::Finite(h) => assert_eq!(h.to_integer().to_i64(), Some(80)), // (n−1)²−1
            MetricValue::Infinite => panic!("connected graph"),
        }
        assert_eq!(inv.degree_sequence, vec![7; 10]);
        assert!(!inv.is_eulerian_degree_parity); // n even → odd degrees
        assert!(inv.is_claw_free);
        assert_eq!(inv.independence_number, 2);
    }

    #[test]
    fn independence_number_of_cycle_complement_is_two() {
        for n in 5..=12 {
            let g = cycle_complement(n).unwrap();
            assert_eq!(g.independence_number(20).unwrap(), 2, "n={n}");
        }
    }

    #[test]
    fn disconnected_metrics_are_infinite() {
        let g = Graph::new(3);
        let inv = g.metric_invariants(20).unwrap();
        assert_eq!(inv.diameter, MetricValue::Infinite);
        assert_eq!(inv.wiener, MetricValue::Infinite);
        assert_eq!(format!("{}", inv.harary), "infinite");
    }

    #[test]
    fn bound_exceeded_reported() {
        let g = cycle_complement(25).unwrap();
        assert!(matches!(g.clique_number(20), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn inductive_dimension_fixtures() {
        let rat = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
        // Edgeless graphs have dimension 0; complete graphs K_n have n − 1.
        assert_eq!(Graph::new(4).inductive_dimension().unwrap(), rat(0, 1));
        for n in 1..=6usize {
            let mut k = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    k.add_edge(u, v);
                }
            }
            assert_eq!(k.inductive_dimension().unwrap(), rat(n as i64 - 1, 1));
        }
        // Cycles are 1-dimensional; every unit sphere is a pair of points.
        assert_eq!(cycle_graph(4).unwrap().inductive_dimension().unwrap(), rat(1, 1));
        // Mean over mixed spheres: the cycle complement on 6 vertices gives 5/3.
        assert_eq!(cycle_complement(6).unwrap().inductive_dimension().unwrap(), rat(5, 3));
        let big = Graph::new(65);
        assert!(matches!(big.inductive_dimension(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn chromatic_number_small_cases() {
        // Odd cycle complements: C_5 complement is C_5, chromatic number 3.
        let g5 = cycle_complement(5).unwrap();
        assert_eq!(g5.chromatic_number(20).unwrap(), 3);
        // Complete graph K_4.
        let mut k4 = Graph::new(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                k4.add_edge(u, v);
            }
        }
        assert_eq!(k4.chromatic_number(20).unwrap(), 4);
        // Bipartite path.
        assert_eq!(path_graph(5).unwrap().chromatic_number(20).unwrap(), 2);
    }

    #[test]
    fn hamiltonian_cycle_backtracking_and_witness() {
        // G_n is Hamiltonian for n ≥ 5; the arithmetic witness x_k = k·a mod n
        // works whenever gcd(a,n)=1 with 1 < a < n−1, but no such a exists for
        // n = 6 — backtracking still finds a cycle there.
        for n in 5..=10 {
            let g = cycle_complement(n).unwrap();
            let cyc = g.hamiltonian_cycle(20).unwrap().expect("Hamiltonian");
            assert_eq!(cyc.len(), n);
            for i in 0..n {
                assert!(g.has_edge(cyc[i], cyc[(i + 1) % n]));
            }
        }
        // Explicit witness for n = 7, a = 2: 0,2,4,6,1,3,5.
        let g = cycle_complement(7).unwrap();
        let witness: Vec<usize> = (0..7).map(|k| (2 * k) % 7).collect();
        for i in 0..7 {
            assert!(g.has_edge(witness[i], witness[(i + 1) % 7]));
        }
        // C_4 itself has a Hamiltonian cycle; its complement (perfect
        // matching) does not.
        assert!(cycle_graph(4).unwrap().hamiltonian_cycle(20).unwrap().is_some());
        assert!(cycle_complement(4).unwrap().hamiltonian_cycle(20).unwrap().is_none());
    }

    #[test]
    fn strong_regularity_recorded_not_asserted() {
        // C_5 = its own complement is strongly regular (5,2,0,1).
        let g5 = cycle_complement(5).unwrap();
        assert_eq!(g5.strong_regularity(), Some((5, 2, 0, 1)));
        // For n ≥ 6 the cycle complements are NOT strongly regular.
        for n in 6..=10 {
            assert_eq!(cycle_complement(n).unwrap().strong_regularity(), None, "n={n}");
        }
    }

    #[test]
    fn json_round_trip() {
        let g = cycle_complement(7).unwrap();
        let s = g.to_json();
        let h = Graph::from_json(&s).unwrap();
        assert_eq!(g.edges(), h.edges());
        assert!(s.starts_with("{\"n\":7,\"edges\":[[0,2],"));
        assert!(Graph::from_json("{\"n\":2,\"edges\":[[0,5]]}").is_err());
    }

    #[test]
    fn eulerian_parity_matches_cycle_complement_rule() {
        for n in 5..=15 {
            let g = cycle_complement(n).unwrap();
            let inv = g.metric_invariants(20).unwrap();
            assert_eq!(inv.is_eulerian_degree_parity, n % 2 == 1, "n={n}");
        }
    }
}
