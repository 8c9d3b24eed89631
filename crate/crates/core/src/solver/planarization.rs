use crate::error::{Error, Result};
use crate::graph::planarity::edges_planar;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// A set of crossings between edges of a graph, with their order along each
/// edge.
///
/// `seq[e]` lists the edges crossing `e` in the order met when walking from
/// the smaller endpoint of `e` to the larger. Because a good drawing crosses
/// each pair of edges at most once, the partner edge identifies the
/// crossing, so these sequences are also a canonical key for the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    graph: Graph,
    seq: Vec<Vec<usize>>,
}

/// One crossing: the two edges (`edges.0 < edges.1`) and the index of the
/// crossing in each edge's sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub edges: (usize, usize),
    pub positions: (usize, usize),
}

/// Host graph of a planarization. Vertices `0..n` are the original ones,
/// vertex `n + c` is the dummy for crossing `c`.
#[derive(Clone, Debug)]
pub struct Host {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// For every host edge: the original edge and the segment index along it.
    pub origin: Vec<(usize, usize)>,
    /// Crossing pairs, indexed by dummy number.
    pub pairs: Vec<(usize, usize)>,
    /// Host vertex chain of every original edge, endpoints included.
    pub chains: Vec<Vec<usize>>,
}

impl Planarization {
    /// No crossings.
    pub fn empty(graph: Graph) -> Self {
        let m = graph.m();
        Planarization {
            graph,
            seq: vec![Vec::new(); m],
        }
    }

    /// Builds a planarization from per-edge partner sequences. Only shape is
    /// checked here; goodness is reported by [`Planarization::check_good`]
    /// and [`verify_certificate`].
    pub fn from_sequences(graph: Graph, seq: Vec<Vec<usize>>) -> Result<Self> {
        if seq.len() != graph.m() {
            return Err(Error::InvalidSpec(format!(
                "{} crossing sequences for {} edges",
                seq.len(),
                graph.m()
            )));
        }
        if let Some(&f) = seq.iter().flatten().find(|&&f| f >= graph.m()) {
            return Err(Error::InvalidSpec(format!("edge index {f} out of range")));
        }
        Ok(Planarization { graph, seq })
    }

    /// Builds a planarization from a crossing list. Positions must form,
    /// for every edge, a permutation of `0..k`.
    pub fn from_crossings(graph: Graph, crossings: &[Crossing]) -> Result<Self> {
        let m = graph.m();
        let mut slots: Vec<Vec<Option<usize>>> = vec![Vec::new(); m];
        let mut place = |e: usize, i: usize, f: usize| -> Result<()> {
            if e >= m || f >= m {
                return Err(Error::InvalidSpec(format!(
                    "edge index out of range in crossing ({e}, {f})"
                )));
            }
            let s = &mut slots[e];
            if s.len() <= i {
                s.resize(i + 1, None);
            }
            if s[i].replace(f).is_some() {
                return Err(Error::InvalidSpec(format!(
                    "two crossings at position {i} of edge {e}"
                )));
            }
            Ok(())
        };
        for c in crossings {
            place(c.edges.0, c.positions.0, c.edges.1)?;
            place(c.edges.1, c.positions.1, c.edges.0)?;
        }
        let mut seq = Vec::with_capacity(m);
        for (e, s) in slots.into_iter().enumerate() {
            let v: Option<Vec<usize>> = s.into_iter().collect();
            seq.push(v.ok_or_else(|| {
                Error::InvalidSpec(format!("gap in crossing positions of edge {e}"))
            })?);
        }
        Planarization::from_sequences(graph, seq)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Partners of `e` in order from its smaller endpoint.
    pub fn sequence(&self, e: usize) -> &[usize] {
        &self.seq[e]
    }

    pub fn sequences(&self) -> &[Vec<usize>] {
        &self.seq
    }

    pub fn crossing_count(&self) -> usize {
        self.seq.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn crosses(&self, e: usize, f: usize) -> bool {
        self.seq[e].contains(&f)
    }

    /// Crossing list sorted by edge pair.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut out = Vec::new();
        for (e, s) in self.seq.iter().enumerate() {
            for (i, &f) in s.iter().enumerate() {
                if e < f {
                    if let Some(j) = self.seq[f].iter().position(|&x| x == e) {
                        out.push(Crossing {
                            edges: (e, f),
                            positions: (i, j),
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Good-drawing constraints: sequences are mutually consistent, no edge
    /// crosses itself or an adjacent edge, no pair crosses twice.
    pub fn check_good(&self) -> Result<()> {
        for (e, s) in self.seq.iter().enumerate() {
            for (i, &f) in s.iter().enumerate() {
                if f == e {
                    return Err(Error::NotGood(format!("edge {e} crosses itself")));
                }
                if self.graph.edges_adjacent(e, f) {
                    return Err(Error::NotGood(format!("adjacent edges {e} and {f} cross")));
                }
                if s[..i].contains(&f) {
                    return Err(Error::NotGood(format!("edges {e} and {f} cross twice")));
                }
                let back = self.seq[f].iter().filter(|&&x| x == e).count();
                if back != 1 {
                    return Err(Error::NotGood(format!(
                        "crossing of {e} and {f} not recorded on {f}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Host graph data. Assumes [`Planarization::check_good`] holds.
    pub fn host(&self) -> Host {
        build_host(&self.graph, &self.seq, None)
    }

    /// Host graph as a [`Graph`].
    pub fn host_graph(&self) -> Result<Graph> {
        self.check_good()?;
        let h = self.host();
        Graph::new(h.n + h.pairs.len(), h.edges)
    }

    pub fn host_is_planar(&self) -> bool {
        let h = self.host();
        edges_planar(h.n + h.pairs.len(), &h.edges)
    }

    /// Adds the crossing of `e` and `f`, landing on segment `i` of `e` and
    /// segment `j` of `f`.
    pub(crate) fn insert(&mut self, e: usize, i: usize, f: usize, j: usize) {
        self.seq[e].insert(i, f);
        self.seq[f].insert(j, e);
    }

    /// Drops the crossing of `e` and `f`.
    pub(crate) fn remove(&mut self, e: usize, f: usize) {
        self.seq[e].retain(|&x| x != f);
        self.seq[f].retain(|&x| x != e);
    }

    /// Drops every crossing on `e`.
    pub(crate) fn clear_edge(&mut self, e: usize) {
        for f in std::mem::take(&mut self.seq[e]) {
            self.seq[f].retain(|&x| x != e);
        }
    }

    pub(crate) fn seq_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.seq
    }
}

/// Host of the sub-planarization on edges with `present[e]` (all edges when
/// `None`).
pub(crate) fn build_host(g: &Graph, seq: &[Vec<usize>], present: Option<&[bool]>) -> Host {
    let n = g.n();
    let m = g.m();
    let mut id = vec![usize::MAX; m * m];
    let mut pairs = Vec::new();
    for (e, s) in seq.iter().enumerate() {
        for &f in s {
            if e < f {
                id[e * m + f] = pairs.len();
                id[f * m + e] = pairs.len();
                pairs.push((e, f));
            }
        }
    }
    let mut edges = Vec::with_capacity(m + 2 * pairs.len());
    let mut origin = Vec::with_capacity(edges.capacity());
    let mut chains = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if present.is_some_and(|p| !p[e]) {
            chains.push(Vec::new());
            continue;
        }
        let mut chain = Vec::with_capacity(seq[e].len() + 2);
        chain.push(u);
        chain.extend(seq[e].iter().map(|&f| n + id[e * m + f]));
        chain.push(v);
        for (s, w) in chain.windows(2).enumerate() {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
            origin.push((e, s));
        }
        chains.push(chain);
    }
    Host {
        n,
        edges,
        origin,
        pairs,
        chains,
    }
}

/// Independent certificate check: goodness, consistency with `g`, and
/// planarity of a host rebuilt from the crossing list alone.
pub fn verify_certificate(g: &Graph, p: &Planarization) -> bool {
    if p.graph.n() != g.n() || p.graph.edges() != g.edges() {
        return false;
    }
    if p.check_good().is_err() {
        return false;
    }
    // Rebuild from the crossing list rather than the stored sequences.
    let list = p.crossings();
    let n = g.n();
    let mut along: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.m()];
    for (c, x) in list.iter().enumerate() {
        along[x.edges.0].push((x.positions.0, n + c));
        along[x.edges.1].push((x.positions.1, n + c));
    }
    let mut edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut a = std::mem::take(&mut along[e]);
        a.sort();
        if a.iter().enumerate().any(|(i, &(pos, _))| pos != i) {
            return false;
        }
        let mut prev = u;
        for &(_, d) in &a {
            edges.push((prev, d));
            prev = d;
        }
        edges.push((prev, v));
    }
    let Ok(host) = Graph::new(n + list.len(), edges) else {
        return false;
    };
    if (n..host.n()).any(|d| host.degree(d) != 4) {
        return false;
    }
    match crate::graph::planar_embedding(&host) {
        Some(emb) => emb.verify(&host),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_one() -> Planarization {
        let g = Graph::complete(5);
        let e = g.edge_index(0, 2).unwrap();
        let f = g.edge_index(1, 3).unwrap();
        let mut p = Planarization::empty(g);
        p.insert(e, 0, f, 0);
        p
    }

    #[test]
    fn k5_with_one_crossing_is_certified() {
        let p = k5_one();
        assert_eq!(p.crossing_count(), 1);
        assert!(p.host_is_planar());
        assert!(verify_certificate(p.graph(), &p));
        let h = p.host_graph().unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.degree(5), 4);
    }

    #[test]
    fn empty_k5_fails() {
        let g = Graph::complete(5);
        assert!(!verify_certificate(&g, &Planarization::empty(g.clone())));
    }

    #[test]
    fn adjacent_crossing_rejected() {
        let g = Graph::complete(5);
        let e = g.edge_index(0, 1).unwrap();
        let f = g.edge_index(0, 2).unwrap();
        let mut p = Planarization::empty(g.clone());
        p.insert(e, 0, f, 0);
        assert!(p.check_good().is_err());
        assert!(!verify_certificate(&g, &p));
    }

    #[test]
    fn crossing_list_round_trip() {
        let p = k5_one();
        let list = p.crossings();
        let q = Planarization::from_crossings(p.graph().clone(), &list).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn gap_in_positions_rejected() {
        let g = Graph::complete(5);
        let c = Crossing {
            edges: (1, 7),
            positions: (1, 0),
        };
        assert!(Planarization::from_crossings(g, &[c]).is_err());
    }

    #[test]
    fn clear_edge_removes_both_sides() {
        let mut p = k5_one();
        let e = p.graph().edge_index(0, 2).unwrap();
        p.clear_edge(e);
        assert_eq!(p.crossing_count(), 0);
        assert!(p.sequences().iter().all(Vec::is_empty));
    }
}
