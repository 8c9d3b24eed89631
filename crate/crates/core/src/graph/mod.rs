//! Simple undirected graphs and the structural queries built on them.

mod iso;
pub(crate) mod kuratowski;
pub(crate) mod planarity;

pub use iso::{automorphisms, is_isomorphic, AutomorphismGroup, IsoMapping};
pub use kuratowski::{find_k33_subdivision, kuratowski_witness, KuratowskiKind, KuratowskiWitness};
pub use planarity::{is_planar, planar_embedding, Embedding, Planarity};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// A labeled undirected simple graph on vertices `0..n`.
///
/// Edges are stored as sorted `(u, v)` pairs with `u < v`; the position of a
/// pair in [`Graph::edges`] is the edge index used throughout the crate.
/// Optional bit-string labels are metadata and never take part in equality
/// of vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ParallelEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    /// Attaches bit-string labels. Labels must be distinct, of equal length
    /// and made of `0`/`1` only.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        if let Some(first) = labels.first() {
            let len = first.len();
            for l in &labels {
                if l.len() != len || !l.bytes().all(|b| b == b'0' || b == b'1') {
                    return Err(Error::InvalidLabels(format!("bad label {l:?}")));
                }
            }
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::InvalidLabels("duplicate labels".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// True when the two edges share an endpoint.
    pub fn edges_adjacent(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Vertex carrying the given label, if labels are present.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Image of the graph under `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length".into()));
        }
        let g = Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))?;
        match &self.labels {
            Some(l) => {
                let mut nl = vec![String::new(); self.n];
                for v in 0..self.n {
                    nl[perm[v]] = l[v].clone();
                }
                g.with_labels(nl)
            }
            None => Ok(g),
        }
    }

    /// Graph without the listed edges (indices into [`Graph::edges`]).
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.m()];
        for &e in removed {
            keep[e] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e);
        let mut g = Graph::new(self.n, edges).expect("subset of a simple graph");
        g.labels = self.labels.clone();
        g
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::new(a + b, edges).expect("complete bipartite graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen")
    }
}

/// A set of vertices of some host graph, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSubset(vertices)
    }

    pub fn all(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    /// Subset from the bits of `mask` (bit `i` set means vertex `i`).
    pub fn from_mask(mask: u64) -> Self {
        VertexSubset((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        VertexSubset((0..n).filter(|v| !self.contains(*v)).collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSubset::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSubset(
            self.0
                .iter()
                .copied()
                .filter(|v| other.contains(*v))
                .collect(),
        )
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSubset::new(iter.into_iter().collect())
    }
}

/// Subgraph induced by `s`, together with the map from new indices back to
/// vertices of `g`. Labels are carried over.
pub fn induced_subgraph(g: &Graph, s: &VertexSubset) -> Result<(Graph, Vec<usize>)> {
    s.validate(g)?;
    let back: Vec<usize> = s.vertices().to_vec();
    let mut fwd = vec![usize::MAX; g.n()];
    for (i, &v) in back.iter().enumerate() {
        fwd[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| fwd[u] != usize::MAX && fwd[v] != usize::MAX)
        .map(|&(u, v)| (fwd[u], fwd[v]));
    let mut h = Graph::new(back.len(), edges)?;
    if let Some(l) = g.labels() {
        h = h.with_labels(back.iter().map(|&v| l[v].clone()).collect())?;
    }
    Ok((h, back))
}

/// Edges with one end in `x` and the other in `y`, and their count.
///
/// `x` and `y` may overlap; with `y = x` this is `E(X)`, with `y` the
/// complement of `x` it is the cut `∂(X)`.
pub fn boundary_and_counts(
    g: &Graph,
    x: &VertexSubset,
    y: &VertexSubset,
) -> Result<(Vec<(usize, usize)>, usize)> {
    x.validate(g)?;
    y.validate(g)?;
    let edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
        .collect();
    let count = edges.len();
    Ok((edges, count))
}

/// Number of edges between two vertex bitmasks (both `< 64` vertices).
/// An edge inside `x ∩ y` is counted once.
pub fn edge_count_between(g: &Graph, x: u64, y: u64) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| {
            let (bu, bv) = (1u64 << u, 1u64 << v);
            (x & bu != 0 && y & bv != 0) || (x & bv != 0 && y & bu != 0)
        })
        .count()
}

/// Shape of an induced subgraph: a path or cycle on `k` vertices, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedShape {
    Path(usize),
    Cycle(usize),
    Other,
}

pub fn classify_induced(g: &Graph, s: &VertexSubset) -> Result<InducedShape> {
    if s.is_empty() {
        return Err(Error::Precondition("empty vertex subset".into()));
    }
    let (h, _) = induced_subgraph(g, s)?;
    Ok(classify_graph(&h))
}

/// Classifies a whole graph as `P_k`, `C_k` or other.
pub fn classify_graph(h: &Graph) -> InducedShape {
    let k = h.n();
    if k == 0 || !h.is_connected() || (0..k).any(|v| h.degree(v) > 2) {
        return InducedShape::Other;
    }
    if h.m() + 1 == k {
        InducedShape::Path(k)
    } else if h.m() == k && k >= 3 {
        InducedShape::Cycle(k)
    } else {
        InducedShape::Other
    }
}

/// Same as [`classify_induced`] for a vertex bitmask, without allocation of
/// a subset (used by the exhaustive checkers).
pub fn classify_mask(g: &Graph, mask: u64) -> InducedShape {
    let k = mask.count_ones() as usize;
    if k == 0 {
        return InducedShape::Other;
    }
    let mut edges = 0;
    let mut deg_ok = true;
    for v in 0..g.n() {
        if mask >> v & 1 == 0 {
            continue;
        }
        let d = g
            .neighbors(v)
            .iter()
            .filter(|&&w| mask >> w & 1 == 1)
            .count();
        deg_ok &= d <= 2;
        edges += d;
    }
    edges /= 2;
    if !deg_ok || !mask_connected(g, mask) {
        return InducedShape::Other;
    }
    if edges + 1 == k {
        InducedShape::Path(k)
    } else if edges == k && k >= 3 {
        InducedShape::Cycle(k)
    } else {
        InducedShape::Other
    }
}

fn mask_connected(g: &Graph, mask: u64) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// An unordered partition `{V1, V2}` of the vertex set, stored as bitmasks
/// with the part containing vertex 0 first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition(pub u64, pub u64);

/// All partitions of an 8-vertex graph into two sets that both induce `C_4`.
pub fn find_c4_partitions(g: &Graph) -> Result<Vec<Bipartition>> {
    if g.n() != 8 {
        return Err(Error::Precondition(format!(
            "C4 partitions need 8 vertices, got {}",
            g.n()
        )));
    }
    let full = 0xffu64;
    let mut out = Vec::new();
    for mask in 0u64..256 {
        if mask.count_ones() != 4 || mask & 1 == 0 {
            continue;
        }
        let rest = full & !mask;
        if classify_mask(g, mask) == InducedShape::Cycle(4)
            && classify_mask(g, rest) == InducedShape::Cycle(4)
        {
            out.push(Bipartition(mask, rest));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::ParallelEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn labels_must_be_distinct_and_equal_length() {
        let g = Graph::path(2);
        assert!(g.clone().with_labels(vec!["0".into(), "0".into()]).is_err());
        assert!(g
            .clone()
            .with_labels(vec!["0".into(), "10".into()])
            .is_err());
        assert!(g.with_labels(vec!["0".into(), "1".into()]).is_ok());
    }

    #[test]
    fn induced_path_in_square() {
        let (h, back) = induced_subgraph(&square(), &VertexSubset::new(vec![0, 1, 2])).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2);
        assert_eq!(back, vec![0, 1, 2]);
        assert_eq!(classify_graph(&h), InducedShape::Path(3));
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = Graph::petersen();
        let (h, back) = induced_subgraph(&g, &VertexSubset::all(10)).unwrap();
        assert_eq!(h, g);
        assert_eq!(back, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn invalid_subset_is_an_error() {
        assert!(induced_subgraph(&square(), &VertexSubset::new(vec![7])).is_err());
    }

    #[test]
    fn boundary_of_everything_is_empty() {
        let g = Graph::petersen();
        let (e, c) =
            boundary_and_counts(&g, &VertexSubset::all(10), &VertexSubset::default()).unwrap();
        assert!(e.is_empty());
        assert_eq!(c, 0);
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_induced(&Graph::cycle(5), &VertexSubset::all(5)).unwrap(),
            InducedShape::Cycle(5)
        );
        let k4 = Graph::complete(4);
        let tri = VertexSubset::new(vec![0, 1, 2]);
        assert_eq!(classify_induced(&k4, &tri).unwrap(), InducedShape::Cycle(3));
        assert_eq!(classify_mask(&k4, 0b0111), InducedShape::Cycle(3));
        assert_eq!(
            classify_induced(&k4, &VertexSubset::all(4)).unwrap(),
            InducedShape::Other
        );
        assert_eq!(classify_mask(&Graph::path(3), 0b101), InducedShape::Other);
        assert!(classify_induced(&k4, &VertexSubset::default()).is_err());
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
    }

    #[test]
    fn c4_partitions_of_cycle_are_empty() {
        assert!(find_c4_partitions(&Graph::cycle(8)).unwrap().is_empty());
        assert!(find_c4_partitions(&Graph::cycle(7)).is_err());
    }
}
