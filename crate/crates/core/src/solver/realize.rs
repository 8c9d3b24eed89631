use super::planarization::Planarization;
use crate::error::{Error, Result};
use crate::geometry::{Point, PolylineDrawing, Rational};
use crate::graph::planarity::{edges_embedding, Embedding};
use num_bigint::BigInt;

/// Turns a planarization with planar host into a good polyline drawing.
///
/// The host is laid out on an integer grid with straight edges. At each
/// dummy vertex one edge passes through and the other is rerouted along a
/// short chord that crosses it.
/// A dummy where the two edges only touch (non-alternating rotation) is
/// dropped first, so the drawing can have fewer crossings than `p`.
pub fn realize_drawing(p: &Planarization) -> Result<PolylineDrawing> {
    realize_reduced(p).map(|(_, d)| d)
}

/// Same as [`realize_drawing`], also returning the planarization the drawing
/// realizes.
pub(crate) fn realize_reduced(p: &Planarization) -> Result<(Planarization, PolylineDrawing)> {
    p.check_good()?;
    let p = reduce_touching(p.clone())?;
    let host = p.host();
    let nh = host.n + host.pairs.len();
    let coords = grid_layout(nh, &host.edges)?;
    let pos = |v: usize| Point::int(coords[v].0, coords[v].1);
    let maxlen = host
        .edges
        .iter()
        .map(|&(a, b)| (coords[a].0 - coords[b].0).abs() + (coords[a].1 - coords[b].1).abs())
        .max()
        .unwrap_or(0);
    let r = Rational::new(BigInt::from(1), BigInt::from(4 * (1 + maxlen)));
    let opposite = |c: usize, e: usize| -> bool {
        let chain = &host.chains[e];
        let k = chain
            .iter()
            .position(|&x| x == host.n + c)
            .expect("dummy on its edge");
        let (d, a, b) = (coords[chain[k]], coords[chain[k - 1]], coords[chain[k + 1]]);
        let (u, w) = ((a.0 - d.0, a.1 - d.1), (b.0 - d.0, b.1 - d.1));
        u.0 * w.1 - u.1 * w.0 == 0 && u.0 * w.0 + u.1 * w.1 < 0
    };
    // At each crossing one edge keeps running through the dummy point and
    // the other is cut short into a chord around it. The chord must not pass
    // through the dummy point, so it goes to an edge that bends there.
    let chord: Vec<Option<usize>> = host
        .pairs
        .iter()
        .enumerate()
        .map(|(c, &(e, f))| {
            if !opposite(c, f) {
                Some(f)
            } else if !opposite(c, e) {
                Some(e)
            } else {
                None
            }
        })
        .collect();
    let mut bends = Vec::with_capacity(p.graph().m());
    for (e, chain) in host.chains.iter().enumerate() {
        let mut b = Vec::new();
        for i in 1..chain.len().saturating_sub(1) {
            let c = chain[i] - host.n;
            let d = pos(chain[i]);
            if chord[c] == Some(e) {
                for nb in [chain[i - 1], chain[i + 1]] {
                    let l1 = (coords[nb].0 - coords[chain[i]].0).abs()
                        + (coords[nb].1 - coords[chain[i]].1).abs();
                    let t = &r / Rational::from_integer(BigInt::from(l1));
                    b.push(d.lerp(&pos(nb), &t));
                }
            } else if !opposite(c, e) {
                b.push(d);
            }
        }
        bends.push(b);
    }
    let positions = (0..host.n).map(pos).collect();
    let d = PolylineDrawing::new(p.graph().clone(), positions, bends)?;
    Ok((p, d))
}

/// Drops crossings whose dummy has the two edges on the same side in the
/// host embedding, until every dummy alternates.
pub(crate) fn reduce_touching(mut p: Planarization) -> Result<Planarization> {
    loop {
        let host = p.host();
        let nh = host.n + host.pairs.len();
        let emb = edges_embedding(nh, &host.edges).ok_or(Error::NotPlanar)?;
        let touching = host.pairs.iter().enumerate().find(|&(c, &(e, _))| {
            let d = host.n + c;
            let chain = &host.chains[e];
            let k = chain
                .iter()
                .position(|&x| x == d)
                .expect("dummy on its edge");
            let rot = emb.rotation(d);
            let i = rot
                .iter()
                .position(|&x| x == chain[k - 1])
                .expect("neighbour");
            rot[(i + 2) % 4] != chain[k + 1]
        });
        match touching {
            Some((_, &(e, f))) => p.remove(e, f),
            None => return Ok(p),
        }
    }
}

/// Straight-line planar grid coordinates for a planar graph given as an
/// edge list.
pub fn grid_layout(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(i64, i64)>> {
    if n <= 2 {
        return Ok((0..n as i64).map(|i| (i, 0)).collect());
    }
    // Join components in a chain.
    let mut all = edges.to_vec();
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(d: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while d[r] != r {
            r = d[r];
        }
        d[x] = r;
        r
    }
    for &(a, b) in edges {
        let (x, y) = (find(&mut dsu, a), find(&mut dsu, b));
        dsu[x] = y;
    }
    let mut roots: Vec<usize> = (0..n).filter(|&v| find(&mut dsu, v) == v).collect();
    roots.sort_unstable();
    for w in roots.windows(2) {
        all.push((w[0].min(w[1]), w[0].max(w[1])));
    }
    let emb = edges_embedding(n, &all).ok_or(Error::NotPlanar)?;
    let (tn, tri) = triangulate(n, &emb);
    let temb = edges_embedding(tn, &tri).ok_or(Error::NotPlanar)?;
    let order = canonical_order(&temb)?;
    let coords = shift_layout(tn, &order);
    Ok(coords[..n].to_vec())
}

/// Adds a star of new vertices inside every face so that all faces become
/// triangles while the original graph keeps its embedding.
fn triangulate(n: usize, emb: &Embedding) -> (usize, Vec<(usize, usize)>) {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for &w in emb.rotation(v) {
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let mut next = n;
    for face in emb.faces() {
        let k = face.len();
        let ring: Vec<usize> = (next..next + k).collect();
        let centre = next + k;
        next += k + 1;
        for i in 0..k {
            let (a, b) = face[i];
            let p = ring[i];
            edges.push((a, p));
            edges.push((b, p));
            edges.push((p, ring[(i + 1) % k]));
            edges.push((p, centre));
        }
    }
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    edges.dedup();
    (next, edges)
}

/// Canonical ordering of a triangulation, found by peeling vertices off the
/// outer face. Entry `k >= 3` is `(v, left, right)`: `v` and its leftmost
/// and rightmost neighbours on the contour of the first `k` vertices.
fn canonical_order(emb: &Embedding) -> Result<Vec<(usize, usize, usize)>> {
    let n = emb.n();
    let outer = emb
        .faces()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Degenerate("no faces".into()))?;
    if outer.len() != 3 {
        return Err(Error::Degenerate("outer face is not a triangle".into()));
    }
    let (a, b, c) = (outer[0].0, outer[1].0, outer[2].0);
    let mut removed = vec![false; n];
    let mut on_path = vec![false; n];
    let mut path = vec![a, c, b];
    for &x in &path {
        on_path[x] = true;
    }
    let mut peeled = Vec::with_capacity(n);
    while peeled.len() + 3 < n {
        let pick = (1..path.len() - 1).find(|&i| {
            let v = path[i];
            emb.rotation(v)
                .iter()
                .filter(|&&w| on_path[w] && !removed[w])
                .count()
                == 2
        });
        let Some(i) = pick else {
            return Err(Error::Degenerate("no removable contour vertex".into()));
        };
        let (x, v, y) = (path[i - 1], path[i], path[i + 1]);
        let rot = emb.rotation(v);
        let d = rot.len();
        let px = rot.iter().position(|&w| w == x).expect("contour neighbour");
        let py = rot.iter().position(|&w| w == y).expect("contour neighbour");
        let arc = |step: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut j = (px + step) % d;
            while j != py {
                out.push(rot[j]);
                j = (j + step) % d;
            }
            out
        };
        let (cw, ccw) = (arc(1), arc(d - 1));
        let inner_ok = |s: &[usize]| s.iter().all(|&w| !removed[w]);
        let inner = match (inner_ok(&cw), inner_ok(&ccw)) {
            (true, true) => {
                if cw.is_empty() {
                    ccw
                } else {
                    cw
                }
            }
            (true, false) => cw,
            (false, true) => ccw,
            (false, false) => {
                return Err(Error::Degenerate(
                    "contour arc crosses removed vertices".into(),
                ))
            }
        };
        removed[v] = true;
        on_path[v] = false;
        for &w in &inner {
            on_path[w] = true;
        }
        path.splice(i..=i, inner);
        peeled.push((v, x, y));
    }
    let mut order = vec![(a, a, a), (b, b, b), (path[1], a, b)];
    order.extend(peeled.into_iter().rev());
    Ok(order)
}

/// Shift method: vertices land on a `(2n-4) x (n-2)` grid.
fn shift_layout(n: usize, order: &[(usize, usize, usize)]) -> Vec<(i64, i64)> {
    let mut xy = vec![(0i64, 0i64); n];
    let mut under: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0].0, order[1].0, order[2].0);
    xy[v1] = (0, 0);
    xy[v2] = (2, 0);
    xy[v3] = (1, 1);
    let mut contour = vec![v1, v3, v2];
    for &(v, l, r) in &order[3..] {
        let p = contour
            .iter()
            .position(|&w| w == l)
            .expect("left contact on contour");
        let q = contour
            .iter()
            .position(|&w| w == r)
            .expect("right contact on contour");
        for &w in &contour[p + 1..q] {
            for &u in &under[w] {
                xy[u].0 += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &under[w] {
                xy[u].0 += 2;
            }
        }
        let ((xp, yp), (xq, yq)) = (xy[l], xy[r]);
        xy[v] = ((xp + xq + yq - yp) / 2, (xq - xp + yp + yq) / 2);
        let mut mine = vec![v];
        for &w in &contour[p + 1..q] {
            mine.extend(std::mem::take(&mut under[w]));
        }
        under[v] = mine;
        contour.splice(p + 1..q, [v]);
    }
    xy
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{generate, CubeSpec};
    use crate::geometry::{crossings, validate_good};
    use crate::graph::Graph;

    fn straight_is_planar(g: &Graph) {
        let c = grid_layout(g.n(), g.edges()).unwrap();
        let pos = c.iter().map(|&(x, y)| Point::int(x, y)).collect();
        let d = PolylineDrawing::straight(g.clone(), pos).unwrap();
        assert!(validate_good(&d).is_good());
        assert_eq!(crossings(&d).unwrap().1, 0);
    }

    #[test]
    fn planar_layouts() {
        straight_is_planar(&generate(CubeSpec::q(3).unwrap()).unwrap());
        straight_is_planar(&Graph::complete(4));
        straight_is_planar(&Graph::path(5));
        straight_is_planar(&Graph::cycle(7));
        straight_is_planar(&Graph::new(6, [(0, 1), (2, 3)]).unwrap());
        straight_is_planar(&Graph::new(1, []).unwrap());
    }

    #[test]
    fn k5_crossing_is_realized() {
        let g = Graph::complete(5);
        let e = g.edge_index(0, 2).unwrap();
        let f = g.edge_index(1, 3).unwrap();
        let p = Planarization::from_sequences(g.clone(), {
            let mut s = vec![Vec::new(); 10];
            s[e].push(f);
            s[f].push(e);
            s
        })
        .unwrap();
        let (q, d) = realize_reduced(&p).unwrap();
        assert!(validate_good(&d).is_good());
        assert_eq!(crossings(&d).unwrap().1, q.crossing_count());
        assert_eq!(q.crossing_count(), 1);
    }

    #[test]
    fn nonplanar_host_is_error() {
        let g = Graph::complete(5);
        assert!(realize_drawing(&Planarization::empty(g)).is_err());
    }
}
