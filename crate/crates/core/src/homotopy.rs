//! Homotopy probes: contractibility certificates, homotopy-type
//! classification, forest-complement prediction, homotopy-manifold checks,
//! and sphere-intersection genus.
//!
//! A vertex $v$ with contractible unit sphere $S(v)$ can be removed from a
//! graph without changing the homotopy type of its clique complex;
//! iterating yields an explicit reduction of a contractible graph to a
//! point. The classifier combines such certificates with Betti vectors:
//! *Point* carries a full reduction sequence, *Sphere(d)* has Betti
//! $(1,0,\dots,0,1)$ with the second unit in degree $d$, *Wedge(d,m)* has
//! $m \geq 2$ in degree $d$, and everything else is reported as *Other*
//! with the Betti vector as evidence. The complement of a disjoint union
//! is the Zykov join of the complements, and
//! $\dim(A \oplus B) = \dim A + \dim B + 1$ on spheres, which turns
//! forest complements into a small calculus over their components.

use crate::complex::clique_complex;
use crate::complex::DEFAULT_SIMPLEX_CAP;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hodge::betti_vector;
use std::collections::{HashMap, HashSet};

/// Alternatives tried per level before the reduction search gives up.
pub const DEFAULT_BACKTRACK_ALTERNATIVES: usize = 3;

/// Outcome of the bounded contractibility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contractibility {
    /// Certified: removing the listed vertices in order (each with a
    /// recursively certified contractible unit sphere) leaves one vertex.
    Yes(Vec<usize>),
    /// The bounded search found no certificate; not a proof of
    /// non-contractibility.
    Unknown,
}

impl Contractibility {
    /// True for a certified reduction.
    pub fn is_yes(&self) -> bool {
        matches!(self, Contractibility::Yes(_))
    }
}

struct Reducer {
    adj: Vec<u64>,
    memo: HashMap<u64, bool>,
    alternatives: usize,
}

impl Reducer {
    fn new(g: &Graph, alternatives: usize) -> Self {
        let adj = (0..g.n())
            .map(|v| {
                let mut m = 0u64;
                for u in g.neighbors(v) {
                    m |= 1 << u;
                }
                m
            })
            .collect();
        Reducer { adj, memo: HashMap::new(), alternatives }
    }

    /// Bounded search: can the induced subgraph on `mask` be reduced to a
    /// point? `true` is a certificate; `false` only means the search failed.
    fn reducible(&mut self, mask: u64) -> bool {
        if mask.count_ones() <= 1 {
            return mask != 0;
        }
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        // a vertex adjacent to everything else makes the graph a cone
        let mut bits = mask;
        let mut dominated = false;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.adj[v] & mask == mask & !(1 << v) {
                dominated = true;
                break;
            }
        }
        if dominated {
            self.memo.insert(mask, true);
            return true;
        }
        let mut tried = 0;
        let mut result = false;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sphere = self.adj[v] & mask;
            if sphere == 0 || !self.reducible(sphere) {
                continue;
            }
            tried += 1;
            if self.reducible(mask & !(1 << v)) {
                result = true;
                break;
            }
            if tried >= self.alternatives {
                break;
            }
        }
        self.memo.insert(mask, result);
        result
    }

    /// Replays a certified reduction into an explicit removal order.
    fn sequence(&mut self, mut mask: u64) -> Vec<usize> {
        let mut seq = Vec::new();
        while mask.count_ones() > 1 {
            let mut bits = mask;
            let mut picked = None;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let sphere = self.adj[v] & mask;
                if sphere != 0 && self.reducible(sphere) && self.reducible(mask & !(1 << v)) {
                    picked = Some(v);
                    break;
                }
            }
            let v = picked.expect("certified mask must admit a removal");
            seq.push(v);
            mask &= !(1 << v);
        }
        seq
    }
}

/// Bounded contractibility search with the default backtracking width.
pub fn is_contractible(g: &Graph) -> Contractibility {
    is_contractible_with(g, DEFAULT_BACKTRACK_ALTERNATIVES)
}

/// Bounded contractibility search trying up to `alternatives` candidate
/// removals per level. Graphs with more than 64 vertices (or none) report
/// `Unknown` — the search needs a bitmask universe.
pub fn is_contractible_with(g: &Graph, alternatives: usize) -> Contractibility {
    if g.n() == 0 || g.n() > 64 {
        return Contractibility::Unknown;
    }
    let full: u64 = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    let mut reducer = Reducer::new(g, alternatives.max(1));
    if reducer.reducible(full) {
        Contractibility::Yes(reducer.sequence(full))
    } else {
        Contractibility::Unknown
    }
}

/// Homotopy-type tags distinguished by the classifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyClass {
    /// Contractible, with a reduction certificate.
    Point,
    /// Homology d-sphere that is certified non-contractible.
    Sphere(usize),
    /// Wedge of `count` d-spheres (count ≥ 2).
    Wedge(usize, usize),
    /// No recognized pattern; see the Betti evidence.
    Other,
}

/// Classification result: tag plus the evidence it rests on.
#[derive(Clone, Debug)]
pub struct HomotopyClassification {
    /// Recognized homotopy type.
    pub class: HomotopyClass,
    /// Betti vector of the clique complex, trailing zeros removed.
    pub betti: Vec<i64>,
    /// Vertex-removal order for `Point`.
    pub certificate: Option<Vec<usize>>,
}

fn trim_betti(mut betti: Vec<i64>) -> Vec<i64> {
    while betti.len() > 1 && *betti.last().unwrap() == 0 {
        betti.pop();
    }
    betti
}

/// Classifies the clique complex of `g` as Point, Sphere(d), Wedge(d, m) or
/// Other, from its Betti vector plus (for Point) a reduction certificate.
///
/// Sphere and Wedge are homology-level statements backed by
/// non-contractibility evidence, not full homotopy-equivalence proofs.
pub fn classify_homotopy_type(g: &Graph) -> Result<HomotopyClassification> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument(
            "cannot classify the empty graph".into(),
        ));
    }
    let complex = clique_complex(g, DEFAULT_SIMPLEX_CAP)?;
    let betti = trim_betti(betti_vector(&complex));
    if betti == [1] {
        return Ok(match is_contractible(g) {
            Contractibility::Yes(seq) => HomotopyClassification {
                class: HomotopyClass::Point,
                betti,
                certificate: Some(seq),
            },
            Contractibility::Unknown => HomotopyClassification {
                class: HomotopyClass::Other,
                betti,
                certificate: None,
            },
        });
    }
    let class = if betti.len() == 1 {
        // b₀ = m + 1 points: a wedge of m 0-spheres, a single 0-sphere at m = 1
        match betti[0] {
            2 => HomotopyClass::Sphere(0),
            m if m >= 3 => HomotopyClass::Wedge(0, (m - 1) as usize),
            _ => HomotopyClass::Other,
        }
    } else {
        let d = betti.len() - 1;
        let middle_clear = betti[1..d].iter().all(|&b| b == 0);
        if betti[0] == 1 && middle_clear && betti[d] == 1 {
            HomotopyClass::Sphere(d)
        } else if betti[0] == 1 && middle_clear && betti[d] >= 2 {
            HomotopyClass::Wedge(d, betti[d] as usize)
        } else {
            HomotopyClass::Other
        }
    };
    Ok(HomotopyClassification { class, betti, certificate: None })
}

/// Checks that every component of `g` is a tree.
fn verify_forest(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let components = g.components();
    for comp in &components {
        let sub = g.induced(comp);
        if sub.edge_count() != comp.len() - 1 {
            return Err(Error::InvalidArgument(format!(
                "not a forest: component of size {} has {} edges",
                comp.len(),
                sub.edge_count()
            )));
        }
    }
    Ok(components)
}

/// Predicts the homotopy type of the complement of a forest from its
/// components: the complement of a disjoint union is the join of the
/// component complements, a path on `3d+1` vertices contributes a
/// contractible factor (making everything contractible), a path on `3d+2`
/// or `3d+3` vertices contributes a d-sphere, a star contributes a
/// 0-sphere, and sphere dimensions add as `d + d' + 1` under joins.
/// Components that are neither paths nor stars are classified directly.
pub fn forest_complement_prediction(forest: &Graph) -> Result<HomotopyClass> {
    let components = verify_forest(forest)?;
    let mut sphere_dim_accum: Option<usize> = None;
    for comp in &components {
        let sub = forest.induced(comp);
        let n = comp.len();
        let factor = if n == 1 {
            HomotopyClass::Point
        } else if (0..n).all(|v| sub.degree(v) <= 2) {
            // a path on n vertices
            match n % 3 {
                1 => HomotopyClass::Point,
                2 => HomotopyClass::Sphere((n - 2) / 3),
                _ => HomotopyClass::Sphere(n / 3 - 1),
            }
        } else if (0..n).any(|v| sub.degree(v) == n - 1) {
            // a star: complement is a clique plus an isolated vertex
            HomotopyClass::Sphere(0)
        } else {
            classify_homotopy_type(&sub.complement())?.class
        };
        match factor {
            HomotopyClass::Point => return Ok(HomotopyClass::Point),
            HomotopyClass::Sphere(d) => {
                sphere_dim_accum = Some(match sphere_dim_accum {
                    None => d,
                    Some(acc) => acc + d + 1,
                });
            }
            _ => return Ok(HomotopyClass::Other),
        }
    }
    Ok(match sphere_dim_accum {
        Some(d) => HomotopyClass::Sphere(d),
        None => HomotopyClass::Other,
    })
}

/// Verdict for one unit sphere inside a homotopy-manifold check.
#[derive(Clone, Debug)]
pub struct SphereVerdict {
    /// The vertex whose unit sphere was classified.
    pub vertex: usize,
    /// Classification of the induced graph on the vertex's neighbors.
    pub classification: HomotopyClassification,
    /// `Some(true)` if Point or Sphere(d−1), `Some(false)` if provably
    /// neither, `None` if contractibility stayed unknown.
    pub ok: Option<bool>,
}

/// Result of checking all unit spheres against dimension `d`.
#[derive(Clone, Debug)]
pub struct ManifoldReport {
    /// The candidate manifold dimension.
    pub dimension: usize,
    /// Conjunction over vertices; `None` when some sphere stayed unknown
    /// and no sphere failed outright.
    pub verdict: Option<bool>,
    /// Per-vertex evidence.
    pub spheres: Vec<SphereVerdict>,
}

/// Checks whether `g` is a homotopy d-manifold: every unit sphere must
/// classify as contractible or as a (d−1)-sphere.
pub fn homotopy_manifold_report(g: &Graph, d: usize) -> Result<ManifoldReport> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "manifold dimension must be at least 1".into(),
        ));
    }
    let mut spheres = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let verdict = if nbrs.is_empty() {
            SphereVerdict {
                vertex: v,
                classification: HomotopyClassification {
                    class: HomotopyClass::Other,
                    betti: Vec::new(),
                    certificate: None,
                },
                ok: Some(false),
            }
        } else {
            let classification = classify_homotopy_type(&g.induced(&nbrs))?;
            let ok = match classification.class {
                HomotopyClass::Point => Some(true),
                HomotopyClass::Sphere(k) if k + 1 == d => Some(true),
                HomotopyClass::Other if classification.betti == [1] => None,
                _ => Some(false),
            };
            SphereVerdict { vertex: v, classification, ok }
        };
        spheres.push(verdict);
    }
    let verdict = if spheres.iter().any(|s| s.ok == Some(false)) {
        Some(false)
    } else if spheres.iter().any(|s| s.ok.is_none()) {
        None
    } else {
        Some(true)
    };
    Ok(ManifoldReport { dimension: d, verdict, spheres })
}

/// Genus `1 − χ` of the induced complex on the intersection of the unit
/// spheres of the given vertices; `None` when the intersection is empty.
pub fn sphere_intersection_genus(g: &Graph, vertices: &[usize]) -> Result<Option<i64>> {
    if vertices.is_empty() {
        return Err(Error::InvalidArgument("need at least one vertex".into()));
    }
    let mut seen = HashSet::new();
    for &v in vertices {
        if v >= g.n() {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} out of range n={}",
                g.n()
            )));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidArgument(format!("vertex {v} repeated")));
        }
    }
    let mut inter: Vec<usize> = g.neighbors(vertices[0]);
    for &v in &vertices[1..] {
        let nb: HashSet<usize> = g.neighbors(v).into_iter().collect();
        inter.retain(|u| nb.contains(u));
    }
    if inter.is_empty() {
        return Ok(None);
    }
    let complex = clique_complex(&g.induced(&inter), DEFAULT_SIMPLEX_CAP)?;
    Ok(Some(1 - complex.euler_characteristic()))
}

/// Rooted-subtree encoding used to canonicalize free trees.
fn ahu_encoding(adj: &[Vec<usize>], root: usize) -> String {
    fn enc(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| enc(adj, u, v))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    enc(adj, root, usize::MAX)
}

/// Canonical signature of a free tree: the minimal AHU encoding over its
/// one or two center vertices.
fn tree_signature(g: &Graph) -> String {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    // peel leaves to find the center(s)
    let mut degree: Vec<usize> = (0..n).map(|v| adj[v].len()).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n)
        .filter(|&v| !removed[v])
        .map(|c| ahu_encoding(&adj, c))
        .min()
        .unwrap_or_default()
}

/// All free trees on `n` vertices up to isomorphism, built by extending
/// smaller trees with one leaf and deduplicating canonical signatures.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut current = vec![Graph::new(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for attach in 0..tree.n() {
                let mut bigger = Graph::new(size);
                for (u, v) in tree.edges() {
                    bigger.add_edge(u, v);
                }
                bigger.add_edge(attach, size - 1);
                if seen.insert(tree_signature(&bigger)) {
                    next.push(bigger);
                }
            }
        }
        current = next;
    }
    current
}
