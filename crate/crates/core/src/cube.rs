//! Generators for the hypercube and its crossed, locally twisted and Möbius
//! variants.
//!
//! Vertex `i` always carries the `n`-bit binary expansion of `i` as its
//! label, most significant bit first. The families index label bits in
//! different directions: the crossed cube names them `x_n .. x_1` from left to
//! right (so `x_1` is the least significant bit), the locally twisted and
//! Möbius cubes name them `x_1 .. x_n` (so `x_1` is the most significant bit).

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSubset};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Q,
    CQ,
    LTQ,
    MQ,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Q => "Q",
            Family::CQ => "CQ",
            Family::LTQ => "LTQ",
            Family::MQ => "MQ",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "Q" => Ok(Family::Q),
            "CQ" => Ok(Family::CQ),
            "LTQ" => Ok(Family::LTQ),
            "MQ" => Ok(Family::MQ),
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

/// Family, order and (for Möbius cubes) the assumed value of `x_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeSpec {
    pub family: Family,
    pub order: usize,
    pub variant: u8,
}

/// Largest order the generators accept.
pub const MAX_ORDER: usize = 16;

impl CubeSpec {
    pub fn new(family: Family, order: usize, variant: u8) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidSpec(format!(
                "order {order} outside 1..={MAX_ORDER}"
            )));
        }
        if family == Family::LTQ && order < 2 {
            return Err(Error::InvalidSpec("LTQ needs order at least 2".into()));
        }
        if variant > 1 {
            return Err(Error::InvalidSpec(format!(
                "variant {variant} is not 0 or 1"
            )));
        }
        if family != Family::MQ && variant != 0 {
            return Err(Error::InvalidSpec(format!(
                "{} has no variant",
                family.name()
            )));
        }
        Ok(CubeSpec {
            family,
            order,
            variant,
        })
    }

    pub fn q(n: usize) -> Result<Self> {
        Self::new(Family::Q, n, 0)
    }

    pub fn cq(n: usize) -> Result<Self> {
        Self::new(Family::CQ, n, 0)
    }

    pub fn ltq(n: usize) -> Result<Self> {
        Self::new(Family::LTQ, n, 0)
    }

    pub fn mq(n: usize, variant: u8) -> Result<Self> {
        Self::new(Family::MQ, n, variant)
    }
}

impl fmt::Display for CubeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::MQ {
            write!(f, "{}-", self.variant)?;
        }
        write!(f, "{}{}", self.family.name(), self.order)
    }
}

/// Parses names such as `Q3`, `CQ4`, `LTQ4`, `0-MQ3`, `1-MQ4`.
impl FromStr for CubeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (variant, rest) = match s.split_once('-') {
            Some((v, r)) => (
                v.parse::<u8>()
                    .map_err(|_| Error::InvalidSpec(format!("bad variant in {s:?}")))?,
                r,
            ),
            None => (0, s),
        };
        let split = rest
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::InvalidSpec(format!("missing order in {s:?}")))?;
        let family: Family = rest[..split].parse()?;
        let order = rest[split..]
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad order in {s:?}")))?;
        CubeSpec::new(family, order, variant)
    }
}

/// The 2-bit relation underlying crossed-cube adjacency.
pub fn pair_related(x: &str, y: &str) -> Result<bool> {
    let bits = |s: &str| -> Result<u8> {
        if s.len() != 2 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::Precondition(format!("{s:?} is not a 2-bit string")));
        }
        Ok(u8::from_str_radix(s, 2).expect("binary"))
    };
    let (a, b) = (bits(x)?, bits(y)?);
    Ok(pair_image(a) == b)
}

/// The unique partner of a 2-bit value `x_2 x_1`: unchanged when `x_1 = 0`,
/// high bit flipped when `x_1 = 1`.
fn pair_image(p: u8) -> u8 {
    if p & 1 == 0 {
        p
    } else {
        p ^ 0b10
    }
}

fn labels(n: usize) -> Vec<String> {
    (0..1usize << n).map(|i| format!("{i:0n$b}")).collect()
}

fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Graph {
    Graph::new(1 << n, edges)
        .and_then(|g| g.with_labels(labels(n)))
        .expect("generated cube is simple")
}

fn insert(set: &mut BTreeSet<(usize, usize)>, a: usize, b: usize) {
    set.insert((a.min(b), a.max(b)));
}

fn hypercube(n: usize) -> Graph {
    let mut e = BTreeSet::new();
    for x in 0..1usize << n {
        for b in 0..n {
            insert(&mut e, x, x ^ 1 << b);
        }
    }
    from_edge_set(n, e)
}

/// Neighbour of `x` in dimension `j` (1-based, bit `j - 1`) of the crossed
/// cube. Bits above `j` agree, bit `j` differs, for even `j` bit `j - 1`
/// agrees, and the lower 2-bit pairs `i = 1 .. ceil(j/2) - 1` are
/// pair-related.
fn crossed_neighbor(x: usize, j: usize) -> usize {
    let mut y = x ^ 1 << (j - 1);
    for i in 1..j.div_ceil(2) {
        let shift = 2 * (i - 1);
        let p = (x >> shift & 0b11) as u8;
        y = (y & !(0b11 << shift)) | (pair_image(p) as usize) << shift;
    }
    y
}

fn crossed_cube(n: usize) -> Graph {
    let mut e = BTreeSet::new();
    for x in 0..1usize << n {
        for j in 1..=n {
            insert(&mut e, x, crossed_neighbor(x, j));
        }
    }
    from_edge_set(n, e)
}

fn locally_twisted_edges(n: usize) -> BTreeSet<(usize, usize)> {
    if n == 2 {
        return [(0, 1), (0, 2), (1, 3), (2, 3)].into_iter().collect();
    }
    let half = 1usize << (n - 1);
    let mut e = BTreeSet::new();
    for &(u, v) in &locally_twisted_edges(n - 1) {
        e.insert((u, v));
        e.insert((u + half, v + half));
    }
    // 0 x2 .. xn  ~  1 (x2 + xn) x3 .. xn
    for x in 0..half {
        let y = half | (x ^ (x & 1) << (n - 2));
        insert(&mut e, x, y);
    }
    e
}

fn mobius_cube(n: usize, x0: u8) -> Graph {
    let mut e = BTreeSet::new();
    for x in 0..1usize << n {
        for i in 1..=n {
            let prev = if i == 1 {
                x0 as usize
            } else {
                x >> (n - i + 1) & 1
            };
            let y = if prev == 0 {
                x ^ 1 << (n - i)
            } else {
                x ^ ((1 << (n - i + 1)) - 1)
            };
            insert(&mut e, x, y);
        }
    }
    from_edge_set(n, e)
}

/// Builds the cube described by `spec`, labels attached.
pub fn generate(spec: CubeSpec) -> Result<Graph> {
    let spec = CubeSpec::new(spec.family, spec.order, spec.variant)?;
    let n = spec.order;
    Ok(match spec.family {
        Family::Q => hypercube(n),
        Family::CQ => crossed_cube(n),
        Family::LTQ => from_edge_set(n, locally_twisted_edges(n)),
        Family::MQ => mobius_cube(n, spec.variant),
    })
}

/// The two halves of a cube by leading label bit and the edges between them.
#[derive(Clone, Debug)]
pub struct SplitView {
    /// Host vertices whose label starts with `0`, ascending.
    pub left: Vec<usize>,
    /// Host vertices whose label starts with `1`, ascending.
    pub right: Vec<usize>,
    /// Halves as graphs; vertex `i` of `left_graph` is host vertex `left[i]`.
    pub left_graph: Graph,
    pub right_graph: Graph,
    /// Cross edges as `(left vertex, right vertex)` in host indices, sorted.
    pub cross: Vec<(usize, usize)>,
    host_n: usize,
}

impl SplitView {
    /// Reassembles the host graph from the halves and the cross edges.
    pub fn glue(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.cross.clone();
        for (g, back) in [
            (&self.left_graph, &self.left),
            (&self.right_graph, &self.right),
        ] {
            edges.extend(g.edges().iter().map(|&(u, v)| (back[u], back[v])));
        }
        Graph::new(self.host_n, edges).expect("halves and cross edges are disjoint")
    }

    pub fn is_left(&self, v: usize) -> bool {
        self.left.binary_search(&v).is_ok()
    }
}

pub fn split(g: &Graph) -> Result<SplitView> {
    let labels = g
        .labels()
        .ok_or_else(|| Error::Precondition("split needs vertex labels".into()))?;
    if labels.first().is_none_or(|l| l.len() < 2) {
        return Err(Error::Precondition(
            "split needs labels of length at least 2".into(),
        ));
    }
    let (left, right): (Vec<usize>, Vec<usize>) =
        (0..g.n()).partition(|&v| labels[v].starts_with('0'));
    let (left_graph, _) = induced_subgraph(g, &VertexSubset::new(left.clone()))?;
    let (right_graph, _) = induced_subgraph(g, &VertexSubset::new(right.clone()))?;
    let is_left = |v: usize| labels[v].starts_with('0');
    let mut cross: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| is_left(u) != is_left(v))
        .map(|&(u, v)| if is_left(u) { (u, v) } else { (v, u) })
        .collect();
    cross.sort_unstable();
    Ok(SplitView {
        left,
        right,
        left_graph,
        right_graph,
        cross,
        host_n: g.n(),
    })
}

/// The bijection from the left half to the right half given by the cross
/// edges, as `(u, pi(u))` pairs sorted by `u`.
pub fn pi_map(sv: &SplitView) -> Result<Vec<(usize, usize)>> {
    let mut seen_left = BTreeSet::new();
    let mut seen_right = BTreeSet::new();
    for &(u, w) in &sv.cross {
        if !seen_left.insert(u) || !seen_right.insert(w) {
            return Err(Error::Precondition("cross edges are not a matching".into()));
        }
    }
    if seen_left.len() != sv.left.len() || seen_right.len() != sv.right.len() {
        return Err(Error::Precondition(
            "cross edges are not a perfect matching".into(),
        ));
    }
    Ok(sv.cross.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(g: &Graph, label: &str) -> usize {
        g.vertex_by_label(label).unwrap()
    }

    #[test]
    fn pair_relation_table() {
        let ok = [("00", "00"), ("10", "10"), ("01", "11"), ("11", "01")];
        for a in ["00", "01", "10", "11"] {
            for b in ["00", "01", "10", "11"] {
                assert_eq!(pair_related(a, b).unwrap(), ok.contains(&(a, b)), "{a} {b}");
            }
        }
        assert!(pair_related("0", "00").is_err());
    }

    #[test]
    fn crossed_square() {
        let g = generate(CubeSpec::cq(2).unwrap()).unwrap();
        let mut e: Vec<(&str, &str)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (g.label(a).unwrap(), g.label(b).unwrap()))
            .collect();
        e.sort();
        assert_eq!(
            e,
            vec![("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")]
        );
    }

    #[test]
    fn hand_derived_adjacencies() {
        let ltq = generate(CubeSpec::ltq(4).unwrap()).unwrap();
        assert!(ltq.has_edge(v(&ltq, "0101"), v(&ltq, "1001")));
        assert!(!ltq.has_edge(v(&ltq, "0101"), v(&ltq, "1101")));
        let mq = generate(CubeSpec::mq(4, 0).unwrap()).unwrap();
        assert!(mq.has_edge(v(&mq, "0110"), v(&mq, "0101")));
    }

    #[test]
    fn crossed_cube_dimension_three_neighbors() {
        // j = 3 on 001: bit 3 flips, pair x2x1 = 01 maps to 11
        let g = generate(CubeSpec::cq(3).unwrap()).unwrap();
        assert!(g.has_edge(v(&g, "001"), v(&g, "111")));
        assert!(!g.has_edge(v(&g, "001"), v(&g, "101")));
    }

    #[test]
    fn mobius_first_dimension_depends_on_variant() {
        let g0 = generate(CubeSpec::mq(3, 0).unwrap()).unwrap();
        let g1 = generate(CubeSpec::mq(3, 1).unwrap()).unwrap();
        assert!(g0.has_edge(v(&g0, "000"), v(&g0, "100")));
        assert!(g1.has_edge(v(&g1, "000"), v(&g1, "111")));
        for g in [
            generate(CubeSpec::mq(1, 0).unwrap()).unwrap(),
            generate(CubeSpec::mq(1, 1).unwrap()).unwrap(),
        ] {
            assert_eq!(g.edges(), &[(0, 1)]);
        }
    }

    #[test]
    fn spec_validation_and_names() {
        assert!(CubeSpec::ltq(1).is_err());
        assert!(CubeSpec::new(Family::CQ, 3, 1).is_err());
        assert!(CubeSpec::q(0).is_err());
        for s in ["Q3", "CQ4", "LTQ4", "0-MQ3", "1-MQ4"] {
            assert_eq!(s.parse::<CubeSpec>().unwrap().to_string(), s);
        }
        assert!("XQ3".parse::<CubeSpec>().is_err());
    }

    #[test]
    fn split_of_square() {
        let g = generate(CubeSpec::q(2).unwrap()).unwrap();
        let sv = split(&g).unwrap();
        assert_eq!(sv.left_graph.m(), 1);
        assert_eq!(sv.right_graph.m(), 1);
        assert_eq!(sv.cross.len(), 2);
        assert_eq!(sv.glue(), Graph::new(4, g.edges().iter().copied()).unwrap());
    }

    #[test]
    fn pi_of_ltq4() {
        let g = generate(CubeSpec::ltq(4).unwrap()).unwrap();
        let pi = pi_map(&split(&g).unwrap()).unwrap();
        assert_eq!(pi.len(), 8);
        assert!(pi.contains(&(v(&g, "0000"), v(&g, "1000"))));
        assert!(pi.contains(&(v(&g, "0101"), v(&g, "1001"))));
    }

    #[test]
    fn split_needs_labels() {
        assert!(split(&Graph::cycle(4)).is_err());
    }
}
