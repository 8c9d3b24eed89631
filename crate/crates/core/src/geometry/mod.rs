//! Exact-coordinate polyline drawings.
//!
//! All predicates are signs of rational determinants, so crossing counts are
//! certified rather than estimated.

mod arrangement;
mod svg;

pub use arrangement::{
    arrangement, cycle_parity_check, locate, Arrangement, CycleParityReport, Face,
};
pub use svg::{export_svg, svg_string};

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Rational = BigRational;

/// Exact point in the plane. Orders lexicographically by `(x, y)`, so the
/// minimum of a set is its leftmost-lowest point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        )
    }

    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point::new(
            Rational::new(BigInt::from(xn), BigInt::from(xd)),
            Rational::new(BigInt::from(yn), BigInt::from(yd)),
        )
    }

    pub fn sub(&self, o: &Point) -> (Rational, Rational) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    /// `self + t * (to - self)`.
    pub fn lerp(&self, to: &Point, t: &Rational) -> Point {
        Point::new(
            &self.x + t * (&to.x - &self.x),
            &self.y + t * (&to.y - &self.y),
        )
    }
}

fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Sign of the turn `a -> b -> c`: positive for counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Rational::zero())
}

/// Closed-segment membership of `p` on `ab`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hit {
    Disjoint,
    /// Interiors cross at a single point; parameters along each segment.
    Proper {
        point: Point,
        s: Rational,
        t: Rational,
    },
    /// They share exactly one point that is an endpoint of at least one.
    Touch(Point),
    /// Collinear with a common piece of positive length.
    Overlap,
}

pub fn intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> Hit {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    use Ordering::*;
    if o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        if o1 != o2 && o3 != o4 {
            let r = b.sub(a);
            let q = d.sub(c);
            let denom = cross(&r, &q);
            let s = cross(&c.sub(a), &q) / &denom;
            let t = cross(&c.sub(a), &r) / &denom;
            return Hit::Proper {
                point: a.lerp(b, &s),
                s,
                t,
            };
        }
        return Hit::Disjoint;
    }
    if o1 == Equal && o2 == Equal {
        // collinear: compare along the dominant axis
        let key = |p: &Point| if a.x != b.x { p.x.clone() } else { p.y.clone() };
        let (mut ab, mut cd) = ((key(a), a), (key(b), b));
        if ab.0 > cd.0 {
            std::mem::swap(&mut ab, &mut cd);
        }
        let (mut lo2, mut hi2) = ((key(c), c), (key(d), d));
        if lo2.0 > hi2.0 {
            std::mem::swap(&mut lo2, &mut hi2);
        }
        let lo = if ab.0 >= lo2.0 {
            ab.clone()
        } else {
            lo2.clone()
        };
        let hi = if cd.0 <= hi2.0 {
            cd.clone()
        } else {
            hi2.clone()
        };
        return match lo.0.cmp(&hi.0) {
            Less => Hit::Overlap,
            Equal => Hit::Touch(lo.1.clone()),
            Greater => Hit::Disjoint,
        };
    }
    for (p, s0, s1) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if on_segment(s0, s1, p) {
            return Hit::Touch(p.clone());
        }
    }
    Hit::Disjoint
}

/// A drawing of a graph with exact vertex positions and polyline edges.
/// Edge `i` runs from `pos[u]` through `bends[i]` to `pos[v]` where
/// `(u, v) = graph.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineDrawing {
    graph: Graph,
    pos: Vec<Point>,
    bends: Vec<Vec<Point>>,
}

impl PolylineDrawing {
    /// Checks counts, distinct vertex positions and non-degenerate segments.
    /// Edges passing through vertices are allowed here and reported by
    /// [`validate_good`].
    pub fn new(graph: Graph, pos: Vec<Point>, bends: Vec<Vec<Point>>) -> Result<Self> {
        if pos.len() != graph.n() {
            return Err(Error::Degenerate(format!(
                "{} positions for {} vertices",
                pos.len(),
                graph.n()
            )));
        }
        if bends.len() != graph.m() {
            return Err(Error::Degenerate(format!(
                "{} bend lists for {} edges",
                bends.len(),
                graph.m()
            )));
        }
        let mut sorted: Vec<&Point> = pos.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("two vertices at {:?}", w[0])));
        }
        let d = PolylineDrawing { graph, pos, bends };
        for e in 0..d.graph.m() {
            let r = d.route(e);
            if r.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Degenerate(format!(
                    "zero-length segment on edge {e}"
                )));
            }
        }
        Ok(d)
    }

    /// Straight-line drawing.
    pub fn straight(graph: Graph, pos: Vec<Point>) -> Result<Self> {
        let m = graph.m();
        Self::new(graph, pos, vec![Vec::new(); m])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point] {
        &self.pos
    }

    pub fn bends(&self, e: usize) -> &[Point] {
        &self.bends[e]
    }

    /// Full point sequence of edge `e`, endpoints included.
    pub fn route(&self, e: usize) -> Vec<Point> {
        let (u, v) = self.graph.edges()[e];
        let mut r = Vec::with_capacity(self.bends[e].len() + 2);
        r.push(self.pos[u].clone());
        r.extend(self.bends[e].iter().cloned());
        r.push(self.pos[v].clone());
        r
    }

    /// Same drawing under `p -> (a x + b y + c, d x + e y + f)`; the matrix
    /// must be invertible.
    pub fn transform(&self, m: [&Rational; 6]) -> Result<Self> {
        let det = m[0] * m[4] - m[1] * m[3];
        if det.is_zero() {
            return Err(Error::Precondition("singular transform".into()));
        }
        let f = |p: &Point| {
            Point::new(
                m[0] * &p.x + m[1] * &p.y + m[2],
                m[3] * &p.x + m[4] * &p.y + m[5],
            )
        };
        PolylineDrawing::new(
            self.graph.clone(),
            self.pos.iter().map(f).collect(),
            self.bends
                .iter()
                .map(|b| b.iter().map(f).collect())
                .collect(),
        )
    }
}

/// One crossing between two distinct edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub edges: (usize, usize),
    pub point: Point,
    /// Segment index along each edge.
    pub segments: (usize, usize),
    /// Position inside each segment, strictly between 0 and 1.
    pub params: (Rational, Rational),
}

#[derive(Default)]
struct Analysis {
    crossings: Vec<CrossingRecord>,
    self_crossings: Vec<(usize, Point)>,
    touches: Vec<(usize, usize, Point)>,
    overlaps: Vec<(usize, usize)>,
    through_vertex: Vec<(usize, usize)>,
}

fn analyze(d: &PolylineDrawing) -> Analysis {
    let g = &d.graph;
    let routes: Vec<Vec<Point>> = (0..g.m()).map(|e| d.route(e)).collect();
    let mut out = Analysis::default();
    for (e, r) in routes.iter().enumerate() {
        let (u, v) = g.edges()[e];
        for (w, p) in d.pos.iter().enumerate() {
            if w != u && w != v && r.windows(2).any(|s| on_segment(&s[0], &s[1], p)) {
                out.through_vertex.push((e, w));
            }
        }
        // the same edge against itself
        for i in 0..r.len() - 1 {
            for j in i + 1..r.len() - 1 {
                let hit = intersect(&r[i], &r[i + 1], &r[j], &r[j + 1]);
                match hit {
                    Hit::Disjoint => {}
                    Hit::Touch(_) if j == i + 1 => {}
                    Hit::Proper { point, .. } => out.self_crossings.push((e, point)),
                    Hit::Touch(p) => out.touches.push((e, e, p)),
                    Hit::Overlap => out.overlaps.push((e, e)),
                }
            }
        }
    }
    for e in 0..g.m() {
        for f in e + 1..g.m() {
            let shared: Vec<usize> = {
                let (a, b) = g.edges()[e];
                let (c, dd) = g.edges()[f];
                [a, b].into_iter().filter(|&x| x == c || x == dd).collect()
            };
            let (re, rf) = (&routes[e], &routes[f]);
            for i in 0..re.len() - 1 {
                for j in 0..rf.len() - 1 {
                    match intersect(&re[i], &re[i + 1], &rf[j], &rf[j + 1]) {
                        Hit::Disjoint => {}
                        Hit::Proper { point, s, t } => out.crossings.push(CrossingRecord {
                            edges: (e, f),
                            point,
                            segments: (i, j),
                            params: (s, t),
                        }),
                        Hit::Touch(p) => {
                            if !shared.iter().any(|&w| d.pos[w] == p) {
                                out.touches.push((e, f, p));
                            }
                        }
                        Hit::Overlap => out.overlaps.push((e, f)),
                    }
                }
            }
        }
    }
    out
}

/// All crossings between distinct edges and their number `ν(D)`.
///
/// Touching or overlapping segments and edges through vertices are
/// degenerate and rejected; a crossing must lie strictly inside both
/// segments.
pub fn crossings(d: &PolylineDrawing) -> Result<(Vec<CrossingRecord>, usize)> {
    let a = analyze(d);
    if let Some((e, w)) = a.through_vertex.first() {
        return Err(Error::Degenerate(format!(
            "edge {e} passes through vertex {w}"
        )));
    }
    if let Some((e, f)) = a.overlaps.first() {
        return Err(Error::Degenerate(format!("edges {e} and {f} overlap")));
    }
    if let Some((e, f, p)) = a.touches.first() {
        return Err(Error::Degenerate(format!(
            "edges {e} and {f} touch at {p:?}"
        )));
    }
    let n = a.crossings.len();
    Ok((a.crossings, n))
}

/// Crossing counts inside and between the parts of an edge partition:
/// `within[i] = ν(A_i)`, `between[i][j] = ν(A_i, A_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuMatrix {
    pub within: Vec<usize>,
    pub between: Vec<Vec<usize>>,
    pub total: usize,
}

impl NuMatrix {
    /// `Σ within + Σ_{i<j} between`, which must equal `total`.
    pub fn sum(&self) -> usize {
        let k = self.within.len();
        self.within.iter().sum::<usize>()
            + (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|(i, j)| self.between[i][j])
                .sum::<usize>()
    }
}

pub fn nu_partition(d: &PolylineDrawing, parts: &[Vec<usize>]) -> Result<NuMatrix> {
    let m = d.graph.m();
    let mut part = vec![usize::MAX; m];
    for (i, p) in parts.iter().enumerate() {
        for &e in p {
            if e >= m || part[e] != usize::MAX {
                return Err(Error::Precondition(format!(
                    "edge {e} missing from graph or repeated"
                )));
            }
            part[e] = i;
        }
    }
    if part.contains(&usize::MAX) {
        return Err(Error::Precondition("parts do not cover every edge".into()));
    }
    let (recs, total) = crossings(d)?;
    let k = parts.len();
    let mut within = vec![0; k];
    let mut between = vec![vec![0; k]; k];
    for r in &recs {
        let (a, b) = (part[r.edges.0], part[r.edges.1]);
        if a == b {
            within[a] += 1;
        } else {
            between[a][b] += 1;
            between[b][a] += 1;
        }
    }
    Ok(NuMatrix {
        within,
        between,
        total,
    })
}

/// Witness lists for every way a drawing can fail to be good.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoodnessReport {
    /// Edge and the point where it crosses itself.
    pub self_crossings: Vec<(usize, Point)>,
    /// Crossing pairs of edges sharing an endpoint.
    pub adjacent_crossings: Vec<(usize, usize)>,
    /// Edge pairs crossing more than once, with the count.
    pub multiple_crossings: Vec<(usize, usize, usize)>,
    /// Points where three or more edges cross, with the edges.
    pub triple_points: Vec<(Point, Vec<usize>)>,
    /// Edge and the vertex it passes through.
    pub edge_through_vertex: Vec<(usize, usize)>,
    /// Segments touching without crossing, or overlapping.
    pub touches: Vec<(usize, usize)>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.self_crossings.is_empty()
            && self.adjacent_crossings.is_empty()
            && self.multiple_crossings.is_empty()
            && self.triple_points.is_empty()
            && self.edge_through_vertex.is_empty()
            && self.touches.is_empty()
    }
}

pub fn validate_good(d: &PolylineDrawing) -> GoodnessReport {
    let a = analyze(d);
    let g = &d.graph;
    let mut rep = GoodnessReport {
        self_crossings: a.self_crossings,
        edge_through_vertex: a.through_vertex,
        ..Default::default()
    };
    let mut touches: Vec<(usize, usize)> = a
        .touches
        .iter()
        .map(|t| (t.0, t.1))
        .chain(a.overlaps)
        .collect();
    touches.sort_unstable();
    touches.dedup();
    rep.touches = touches;
    let mut per_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut per_point: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for c in &a.crossings {
        *per_pair.entry(c.edges).or_default() += 1;
        let list = per_point.entry(c.point.clone()).or_default();
        list.extend([c.edges.0, c.edges.1]);
    }
    for (&(e, f), &k) in &per_pair {
        if g.edges_adjacent(e, f) {
            rep.adjacent_crossings.push((e, f));
        }
        if k > 1 {
            rep.multiple_crossings.push((e, f, k));
        }
    }
    // a self-crossing at the same point as another crossing also counts
    for (e, p) in &rep.self_crossings {
        if let Some(list) = per_point.get_mut(p) {
            list.push(*e);
        }
    }
    for (p, mut list) in per_point {
        list.sort_unstable();
        list.dedup();
        if list.len() >= 3 {
            rep.triple_points.push((p, list));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_diagonals() -> PolylineDrawing {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        PolylineDrawing::straight(
            g,
            vec![
                Point::int(0, 0),
                Point::int(2, 2),
                Point::int(0, 2),
                Point::int(2, 0),
            ],
        )
        .unwrap()
    }

    fn square() -> PolylineDrawing {
        PolylineDrawing::straight(
            Graph::cycle(4),
            vec![
                Point::int(0, 0),
                Point::int(1, 0),
                Point::int(1, 1),
                Point::int(0, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn diagonal_cross() {
        let (recs, n) = crossings(&two_diagonals()).unwrap();
        assert_eq!(n, 1);
        assert_eq!(recs[0].point, Point::int(1, 1));
        assert_eq!(recs[0].params.0, Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn square_is_clean() {
        assert_eq!(crossings(&square()).unwrap().1, 0);
        assert!(validate_good(&square()).is_good());
    }

    #[test]
    fn adjacent_edges_forced_to_cross() {
        // 0-1 and 0-2 share vertex 0; the bend on 0-2 makes them cross
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let d = PolylineDrawing::new(
            g,
            vec![Point::int(0, 0), Point::int(4, 0), Point::int(1, -2)],
            vec![vec![], vec![Point::int(2, 1), Point::int(3, -1)]],
        )
        .unwrap();
        let rep = validate_good(&d);
        assert_eq!(rep.adjacent_crossings, vec![(0, 1)]);
        assert!(!rep.is_good());
    }

    #[test]
    fn touches_are_degenerate() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        // vertex 2 sits on the interior of edge 0-1
        let d = PolylineDrawing::straight(
            g,
            vec![
                Point::int(0, 0),
                Point::int(2, 0),
                Point::int(1, 0),
                Point::int(1, 1),
            ],
        )
        .unwrap();
        assert!(crossings(&d).is_err());
        assert_eq!(validate_good(&d).edge_through_vertex, vec![(0, 2)]);
    }

    #[test]
    fn double_crossing_is_reported() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = PolylineDrawing::new(
            g,
            vec![
                Point::int(0, 0),
                Point::int(4, 0),
                Point::int(1, 1),
                Point::int(3, 1),
            ],
            vec![vec![], vec![Point::int(2, -1)]],
        )
        .unwrap();
        assert_eq!(crossings(&d).unwrap().1, 2);
        assert_eq!(validate_good(&d).multiple_crossings, vec![(0, 1, 2)]);
    }

    #[test]
    fn triple_point() {
        let g = Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let d = PolylineDrawing::straight(
            g,
            vec![
                Point::int(-1, 0),
                Point::int(1, 0),
                Point::int(0, -1),
                Point::int(0, 1),
                Point::int(-1, -1),
                Point::int(1, 1),
            ],
        )
        .unwrap();
        let rep = validate_good(&d);
        assert_eq!(rep.triple_points.len(), 1);
        assert_eq!(rep.triple_points[0].1, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_coincident_vertices_and_zero_segments() {
        let g = Graph::path(2);
        assert!(
            PolylineDrawing::straight(g.clone(), vec![Point::int(0, 0), Point::int(0, 0)]).is_err()
        );
        assert!(PolylineDrawing::new(
            g,
            vec![Point::int(0, 0), Point::int(1, 0)],
            vec![vec![Point::int(0, 0)]]
        )
        .is_err());
    }

    #[test]
    fn nu_partition_single_part() {
        let d = two_diagonals();
        let m = nu_partition(&d, &[vec![0, 1]]).unwrap();
        assert_eq!(m.within, vec![1]);
        assert_eq!(m.sum(), m.total);
        assert!(nu_partition(&d, &[vec![0]]).is_err());
        assert!(nu_partition(&d, &[vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn collinear_cases() {
        let p = |x, y| Point::int(x, y);
        assert_eq!(
            intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            Hit::Overlap
        );
        assert_eq!(
            intersect(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 0)),
            Hit::Touch(p(2, 0))
        );
        assert_eq!(
            intersect(&p(0, 0), &p(2, 0), &p(3, 0), &p(4, 0)),
            Hit::Disjoint
        );
        assert_eq!(
            intersect(&p(0, 0), &p(0, 2), &p(0, 1), &p(0, 5)),
            Hit::Overlap
        );
    }
}
