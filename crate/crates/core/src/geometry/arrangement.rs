//! Planar subdivision induced by a good drawing: crossings become nodes,
//! faces are traced from the exact angular order of segments around nodes.

use super::{crossings, on_segment, orient, validate_good, Point, PolylineDrawing, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    pub bounded: bool,
    /// Closed boundary walks as node ids (graph vertices and crossings).
    /// A bounded face lists its outer walk first.
    pub boundary: Vec<Vec<usize>>,
    /// Graph vertices incident with the face.
    pub v_on: Vec<usize>,
    /// Twice the area enclosed by the outer walk; zero for the unbounded face.
    pub area2: Rational,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    /// Node positions: graph vertices first, then crossings.
    pub nodes: Vec<Point>,
    pub vertex_count: usize,
    /// Pieces of edges between consecutive nodes: `(a, b, edge)`.
    pub segments: Vec<(usize, usize, usize)>,
    /// Face 0 is the unbounded face.
    pub faces: Vec<Face>,
    pub components: usize,
    adjacent: BTreeSet<(usize, usize)>,
    /// Outer polygon (bends included) of every bounded face.
    polygons: Vec<Vec<Point>>,
    pieces: Vec<(Point, Point)>,
}

impl Arrangement {
    /// `nodes - segments + faces = 1 + components`.
    pub fn euler_holds(&self) -> bool {
        self.nodes.len() as i64 - self.segments.len() as i64 + self.faces.len() as i64
            == 1 + self.components as i64
    }

    /// Whether two distinct faces share a piece of boundary.
    pub fn adjacent(&self, f: usize, h: usize) -> bool {
        self.adjacent.contains(&(f.min(h), f.max(h)))
    }

    pub fn v_on(&self, f: usize) -> &[usize] {
        &self.faces[f].v_on
    }
}

fn half(v: &(Rational, Rational)) -> u8 {
    if v.1 > Rational::zero() || (v.1.is_zero() && v.0 > Rational::zero()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of direction vectors starting at the
/// positive x-axis.
fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = &a.0 * &b.1 - &a.1 * &b.0;
        Rational::zero().cmp(&c)
    })
}

fn area2(poly: &[Point]) -> Rational {
    let k = poly.len();
    (0..k).fold(Rational::zero(), |acc, i| {
        let (p, q) = (&poly[i], &poly[(i + 1) % k]);
        acc + (&p.x * &q.y - &q.x * &p.y)
    })
}

fn winding(poly: &[Point], q: &Point) -> i64 {
    let k = poly.len();
    let mut wn = 0;
    for i in 0..k {
        let (a, b) = (&poly[i], &poly[(i + 1) % k]);
        if a.y <= q.y {
            if b.y > q.y && orient(a, b, q) == Ordering::Greater {
                wn += 1;
            }
        } else if b.y <= q.y && orient(a, b, q) == Ordering::Less {
            wn -= 1;
        }
    }
    wn
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let n = self.0[c];
            self.0[c] = r;
            c = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Builds the arrangement of a good drawing.
pub fn arrangement(d: &PolylineDrawing) -> Result<Arrangement> {
    if !validate_good(d).is_good() {
        return Err(Error::NotGood("arrangement needs a good drawing".into()));
    }
    let (recs, _) = crossings(d)?;
    let g = d.graph();
    let n = g.n();
    let mut points: Vec<Point> = d.positions().to_vec();
    let mut index: HashMap<Point, usize> = points.iter().cloned().zip(0..).collect();
    for r in &recs {
        index.entry(r.point.clone()).or_insert_with(|| {
            points.push(r.point.clone());
            points.len() - 1
        });
    }
    let real = points.len();
    // per edge and segment, crossings sorted by position
    let mut on_seg: HashMap<(usize, usize), Vec<(Rational, usize)>> = HashMap::new();
    for r in &recs {
        let id = index[&r.point];
        on_seg
            .entry((r.edges.0, r.segments.0))
            .or_default()
            .push((r.params.0.clone(), id));
        on_seg
            .entry((r.edges.1, r.segments.1))
            .or_default()
            .push((r.params.1.clone(), id));
    }
    let mut darts: Vec<(usize, usize)> = Vec::new();
    let mut segments = Vec::new();
    let mut pieces = Vec::new();
    for e in 0..g.m() {
        let route = d.route(e);
        let mut chain = vec![index[&route[0]]];
        for i in 0..route.len() - 1 {
            if let Some(list) = on_seg.get_mut(&(e, i)) {
                list.sort();
                chain.extend(list.iter().map(|&(_, id)| id));
            }
            if i + 1 < route.len() - 1 {
                // bend: an internal node of degree two
                points.push(route[i + 1].clone());
                chain.push(points.len() - 1);
            } else {
                chain.push(index[&route[i + 1]]);
            }
        }
        let mut last_real = chain[0];
        for w in chain.windows(2) {
            darts.push((w[0], w[1]));
            darts.push((w[1], w[0]));
            pieces.push((points[w[0]].clone(), points[w[1]].clone()));
            if w[1] < real {
                segments.push((last_real, w[1], e));
                last_real = w[1];
            }
        }
    }
    let total = points.len();
    // rotation at every node
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (i, &(a, _)) in darts.iter().enumerate() {
        out[a].push(i);
    }
    let dir = |i: usize| points[darts[i].1].sub(&points[darts[i].0]);
    let mut pos_in_rot = vec![0; darts.len()];
    for list in &mut out {
        list.sort_by(|&x, &y| angle_cmp(&dir(x), &dir(y)));
        for (k, &dd) in list.iter().enumerate() {
            pos_in_rot[dd] = k;
        }
    }
    let twin = |i: usize| i ^ 1;
    // next of a -> b: the dart out of b immediately clockwise from b -> a
    let next = |i: usize| {
        let t = twin(i);
        let b = darts[t].0;
        let k = pos_in_rot[t];
        let l = out[b].len();
        out[b][(k + l - 1) % l]
    };
    let mut walk_of = vec![usize::MAX; darts.len()];
    let mut walks: Vec<Vec<usize>> = Vec::new();
    for s in 0..darts.len() {
        if walk_of[s] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut w = Vec::new();
        let mut c = s;
        while walk_of[c] == usize::MAX {
            walk_of[c] = id;
            w.push(c);
            c = next(c);
        }
        walks.push(w);
    }
    let polys: Vec<Vec<Point>> = walks
        .iter()
        .map(|w| w.iter().map(|&i| points[darts[i].0].clone()).collect())
        .collect();
    let areas: Vec<Rational> = polys.iter().map(|p| area2(p)).collect();
    // components over all nodes
    let mut dsu = Dsu((0..total).collect());
    for &(a, b) in &darts {
        dsu.union(a, b);
    }
    let mut roots = BTreeSet::new();
    for v in 0..total {
        roots.insert(dsu.find(v));
    }
    let components = roots.len();
    let comp_of_walk: Vec<usize> = walks.iter().map(|w| dsu.find(darts[w[0]].0)).collect();
    let positive: Vec<usize> = (0..walks.len())
        .filter(|&w| areas[w] > Rational::zero())
        .collect();
    // smallest positive walk of another component strictly containing q
    let enclosing = |q: &Point, comp: usize| -> Option<usize> {
        positive
            .iter()
            .copied()
            .filter(|&w| comp_of_walk[w] != comp && winding(&polys[w], q) != 0)
            .min_by(|&a, &b| areas[a].cmp(&areas[b]))
    };
    // bounded faces in deterministic order
    let mut order: Vec<(Vec<Point>, usize)> = positive
        .iter()
        .map(|&w| {
            let mut key: Vec<Point> = walks[w]
                .iter()
                .map(|&i| darts[i].0)
                .filter(|&v| v < real)
                .map(|v| points[v].clone())
                .collect();
            key.sort();
            key.dedup();
            (key, w)
        })
        .collect();
    order.sort();
    let mut face_of_walk = vec![0usize; walks.len()];
    for (k, (_, w)) in order.iter().enumerate() {
        face_of_walk[*w] = k + 1;
    }
    let mut extra_vertices: Vec<Vec<usize>> = vec![Vec::new(); order.len() + 1];
    for w in 0..walks.len() {
        if areas[w] > Rational::zero() {
            continue;
        }
        let q = points[darts[walks[w][0]].0].clone();
        face_of_walk[w] = enclosing(&q, comp_of_walk[w]).map_or(0, |h| face_of_walk[h]);
    }
    for v in 0..n {
        if out[v].is_empty() {
            let f = enclosing(&points[v], dsu.find(v)).map_or(0, |h| face_of_walk[h]);
            extra_vertices[f].push(v);
        }
    }
    let mut faces: Vec<Face> = (0..=order.len())
        .map(|id| Face {
            id,
            bounded: id > 0,
            boundary: Vec::new(),
            v_on: Vec::new(),
            area2: Rational::zero(),
        })
        .collect();
    let mut polygons = vec![Vec::new(); order.len() + 1];
    // outer walks first
    for (k, (_, w)) in order.iter().enumerate() {
        faces[k + 1].area2 = areas[*w].clone();
        polygons[k + 1] = polys[*w].clone();
    }
    let mut walk_ids: Vec<usize> = (0..walks.len()).collect();
    walk_ids.sort_by_key(|&w| (areas[w] <= Rational::zero(), w));
    for w in walk_ids {
        let f = face_of_walk[w];
        let nodes: Vec<usize> = walks[w]
            .iter()
            .map(|&i| darts[i].0)
            .filter(|&v| v < real)
            .collect();
        faces[f]
            .v_on
            .extend(nodes.iter().copied().filter(|&v| v < n));
        faces[f].boundary.push(nodes);
    }
    for (f, extra) in extra_vertices.into_iter().enumerate() {
        faces[f].v_on.extend(extra);
    }
    for f in &mut faces {
        f.v_on.sort_unstable();
        f.v_on.dedup();
    }
    let mut adjacent = BTreeSet::new();
    for i in 0..darts.len() {
        let (a, b) = (face_of_walk[walk_of[i]], face_of_walk[walk_of[twin(i)]]);
        if a != b {
            adjacent.insert((a.min(b), a.max(b)));
        }
    }
    points.truncate(real);
    Ok(Arrangement {
        nodes: points,
        vertex_count: n,
        segments,
        faces,
        components,
        adjacent,
        polygons,
        pieces,
    })
}

/// Face containing each point. Points on the drawing are rejected.
pub fn locate(d: &PolylineDrawing, a: &Arrangement, pts: &[Point]) -> Result<Vec<usize>> {
    let _ = d;
    pts.iter()
        .map(|q| {
            if a.pieces.iter().any(|(s, t)| on_segment(s, t, q)) || a.nodes.contains(q) {
                return Err(Error::Precondition(format!(
                    "point {q:?} lies on the drawing"
                )));
            }
            Ok((1..a.faces.len())
                .filter(|&f| winding(&a.polygons[f], q) != 0)
                .min_by(|&x, &y| a.faces[x].area2.cmp(&a.faces[y].area2))
                .unwrap_or(0))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CycleParityReport {
    pub cycles: usize,
    /// Vertex-disjoint cycle pairs examined.
    pub pairs: u64,
    /// Up to ten pairs with an odd number of crossings between them.
    pub odd_pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub odd_count: u64,
}

impl CycleParityReport {
    pub fn pass(&self) -> bool {
        self.odd_count == 0
    }
}

struct Cycle {
    vmask: u64,
    emask: u64,
    verts: Vec<usize>,
}

fn simple_cycles(g: &crate::graph::Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        dfs_cycles(g, s, &mut path, 1u64 << s, &mut out);
    }
    out
}

fn dfs_cycles(
    g: &crate::graph::Graph,
    s: usize,
    path: &mut Vec<usize>,
    seen: u64,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().expect("non-empty");
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            let mut emask = 0u64;
            for k in 0..path.len() {
                let (a, b) = (path[k], path[(k + 1) % path.len()]);
                emask |= 1 << g.edge_index(a, b).expect("cycle edge");
            }
            out.push(Cycle {
                vmask: seen,
                emask,
                verts: path.clone(),
            });
        } else if w > s && seen >> w & 1 == 0 {
            path.push(w);
            dfs_cycles(g, s, path, seen | 1 << w, out);
            path.pop();
        }
    }
}

/// For every pair of vertex-disjoint cycles, the parity of the number of
/// crossings between their edge sets. In a good drawing every such pair
/// crosses an even number of times.
pub fn cycle_parity_check(d: &PolylineDrawing) -> Result<CycleParityReport> {
    let g = d.graph();
    if g.n() > 16 || g.m() > 64 {
        return Err(Error::Precondition(
            "cycle enumeration limited to 16 vertices and 64 edges".into(),
        ));
    }
    if !validate_good(d).is_good() {
        return Err(Error::NotGood("parity check needs a good drawing".into()));
    }
    let (recs, _) = crossings(d)?;
    let mut cross = vec![0u64; g.m()];
    for r in &recs {
        cross[r.edges.0] ^= 1 << r.edges.1;
        cross[r.edges.1] ^= 1 << r.edges.0;
    }
    let cycles = simple_cycles(g);
    let parity: Vec<u64> = cycles
        .iter()
        .map(|c| {
            (0..g.m())
                .filter(|&e| c.emask >> e & 1 == 1)
                .fold(0, |acc, e| acc ^ cross[e])
        })
        .collect();
    let mut rep = CycleParityReport {
        cycles: cycles.len(),
        pairs: 0,
        odd_pairs: Vec::new(),
        odd_count: 0,
    };
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].vmask & cycles[j].vmask != 0 {
                continue;
            }
            rep.pairs += 1;
            if (parity[i] & cycles[j].emask).count_ones() % 2 == 1 {
                rep.odd_count += 1;
                if rep.odd_pairs.len() < 10 {
                    rep.odd_pairs
                        .push((cycles[i].verts.clone(), cycles[j].verts.clone()));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn square() -> PolylineDrawing {
        PolylineDrawing::straight(
            Graph::cycle(4),
            vec![
                Point::int(0, 0),
                Point::int(2, 0),
                Point::int(2, 2),
                Point::int(0, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_has_two_faces() {
        let a = arrangement(&square()).unwrap();
        assert_eq!(a.faces.len(), 2);
        assert!(a.euler_holds());
        assert_eq!(a.v_on(0), &[0, 1, 2, 3]);
        assert_eq!(a.v_on(1), &[0, 1, 2, 3]);
        assert!(a.adjacent(0, 1));
    }

    #[test]
    fn crossing_segments_have_one_face() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = PolylineDrawing::straight(
            g,
            vec![
                Point::int(0, 0),
                Point::int(2, 2),
                Point::int(0, 2),
                Point::int(2, 0),
            ],
        )
        .unwrap();
        let a = arrangement(&d).unwrap();
        assert_eq!(a.nodes.len(), 5);
        assert_eq!(a.segments.len(), 4);
        assert_eq!(a.faces.len(), 1);
        assert!(a.euler_holds());
    }

    #[test]
    fn locate_inside_and_outside() {
        let d = square();
        let a = arrangement(&d).unwrap();
        assert_eq!(
            locate(&d, &a, &[Point::int(1, 1), Point::int(9, 9)]).unwrap(),
            vec![1, 0]
        );
        assert!(locate(&d, &a, &[Point::int(1, 0)]).is_err());
    }

    #[test]
    fn nested_components() {
        // a small square inside a big one, plus an isolated vertex inside both
        let g = Graph::new(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
            ],
        )
        .unwrap();
        let pos = vec![
            Point::int(0, 0),
            Point::int(10, 0),
            Point::int(10, 10),
            Point::int(0, 10),
            Point::int(2, 2),
            Point::int(4, 2),
            Point::int(4, 4),
            Point::int(2, 4),
            Point::int(3, 3),
        ];
        let d = PolylineDrawing::straight(g, pos).unwrap();
        let a = arrangement(&d).unwrap();
        assert_eq!(a.faces.len(), 3);
        assert_eq!(a.components, 3);
        assert!(a.euler_holds());
        let big = locate(&d, &a, &[Point::int(1, 1)]).unwrap()[0];
        assert_eq!(a.faces[big].boundary.len(), 2);
        assert_eq!(a.v_on(big), &[0, 1, 2, 3, 4, 5, 6, 7]);
        let inner = (1..3).find(|&f| f != big).unwrap();
        assert_eq!(a.v_on(inner), &[4, 5, 6, 7, 8]);
        assert!(!a.adjacent(0, inner));
    }

    #[test]
    fn planar_cube_drawing_has_six_faces() {
        let g = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let pos = vec![
            Point::int(0, 0),
            Point::int(6, 0),
            Point::int(6, 6),
            Point::int(0, 6),
            Point::int(2, 2),
            Point::int(4, 2),
            Point::int(4, 4),
            Point::int(2, 4),
        ];
        let d = PolylineDrawing::straight(g, pos).unwrap();
        let a = arrangement(&d).unwrap();
        assert_eq!(a.faces.len(), 6);
        assert!(a.euler_holds());
        let rep = cycle_parity_check(&d).unwrap();
        assert!(rep.pass());
        assert!(rep.pairs > 0);
    }
}
