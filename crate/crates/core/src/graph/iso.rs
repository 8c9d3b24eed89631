//! Isomorphism and automorphism search for small graphs.
//!
//! Vertices are first split by colour refinement (degree, then iterated
//! multisets of neighbour colours); the backtracking search only tries
//! images of the same colour and checks adjacency against every vertex that
//! is already mapped. Every mapping handed out is re-verified edge by edge.

use super::Graph;
use std::collections::HashMap;

/// A bijection `v -> map[v]` between the vertex sets of two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMapping(pub Vec<usize>);

impl IsoMapping {
    pub fn identity(n: usize) -> Self {
        IsoMapping((0..n).collect())
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// True when the map is a bijection sending edges of `g` exactly onto
    /// edges of `h`.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() || g.m() != h.m() || self.0.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; h.n()];
        for &w in &self.0 {
            if w >= h.n() || seen[w] {
                return false;
            }
            seen[w] = true;
        }
        // equal edge counts plus injectivity make edge preservation sufficient
        g.edges()
            .iter()
            .all(|&(u, v)| h.has_edge(self.0[u], self.0[v]))
    }

    pub fn compose(&self, other: &IsoMapping) -> IsoMapping {
        IsoMapping(self.0.iter().map(|&v| other.0[v]).collect())
    }

    pub fn inverse(&self) -> IsoMapping {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        IsoMapping(inv)
    }
}

/// Colour refinement run jointly on a list of graphs so colours are
/// comparable between them.
fn refine(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.n()).map(|v| g.degree(v)).collect())
        .collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut table: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| col[w]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut all: Vec<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        for (i, s) in all.into_iter().enumerate() {
            table.insert(s.clone(), i);
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| table[s]).collect())
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, cg: &'a [usize], ch: &'a [usize], prefix: &[usize]) -> Self {
        Matcher {
            g,
            h,
            cg,
            ch,
            order: search_order(g, cg, prefix),
            map: vec![usize::MAX; g.n()],
            used: vec![false; h.n()],
        }
    }

    fn consistent(&self, v: usize, w: usize, depth: usize) -> bool {
        if self.cg[v] != self.ch[w] || self.used[w] {
            return false;
        }
        self.order[..depth].iter().all(|&u| {
            let mu = self.map[u];
            self.g.has_edge(u, v) == self.h.has_edge(mu, w)
        })
    }

    fn assign(&mut self, v: usize, w: usize) {
        self.map[v] = w;
        self.used[w] = true;
    }

    fn unassign(&mut self, v: usize) {
        self.used[self.map[v]] = false;
        self.map[v] = usize::MAX;
    }

    /// Extends the current partial map (positions `..depth` of `order`).
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        if self.map[v] != usize::MAX {
            let w = self.map[v];
            // pre-assigned prefix vertex: check against earlier ones
            self.used[w] = false;
            let ok = self.consistent(v, w, depth);
            self.used[w] = true;
            return ok && self.extend(depth + 1);
        }
        for w in 0..self.h.n() {
            if self.consistent(v, w, depth) {
                self.assign(v, w);
                if self.extend(depth + 1) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }
}

/// Prefix first, then greedily the vertex with most neighbours already
/// ordered (ties: smaller colour class, then lowest index).
fn search_order(g: &Graph, colors: &[usize], prefix: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let place =
        |v: usize, placed: &mut Vec<bool>, links: &mut Vec<usize>, order: &mut Vec<usize>| {
            placed[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                links[w] += 1;
            }
        };
    for &v in prefix {
        place(v, &mut placed, &mut links, &mut order);
    }
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .expect("vertex left");
        place(v, &mut placed, &mut links, &mut order);
    }
    order
}

/// A verified isomorphism from `g` to `h`, if one exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<IsoMapping> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let colors = refine(&[g, h]);
    let (mut cg, mut ch) = (colors[0].clone(), colors[1].clone());
    cg.sort_unstable();
    ch.sort_unstable();
    if cg != ch {
        return None;
    }
    let mut m = Matcher::new(g, h, &colors[0], &colors[1], &[]);
    if !m.extend(0) {
        return None;
    }
    let map = IsoMapping(m.map);
    assert!(
        map.verify(g, h),
        "isomorphism search produced an invalid map"
    );
    Some(map)
}

/// Automorphism group described by a strong generating set along a base.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    /// Group order as a product of basic orbit lengths.
    pub order: u128,
    /// Verified automorphisms generating the group.
    pub generators: Vec<IsoMapping>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

impl AutomorphismGroup {
    /// Orbits of the group on a set of items, given how a permutation acts on
    /// an item. Returned as a representative per item (the smallest item of
    /// its orbit).
    pub fn orbit_representatives<T, F>(&self, items: &[T], act: F) -> Vec<usize>
    where
        T: Eq + std::hash::Hash + Clone,
        F: Fn(&IsoMapping, &T) -> T,
    {
        let index: HashMap<T, usize> = items
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut rep: Vec<usize> = (0..items.len()).collect();
        fn find(rep: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while rep[r] != r {
                r = rep[r];
            }
            let mut y = x;
            while rep[y] != r {
                let nx = rep[y];
                rep[y] = r;
                y = nx;
            }
            r
        }
        for gen in &self.generators {
            for (i, t) in items.iter().enumerate() {
                let j = index[&act(gen, t)];
                let (a, b) = (find(&mut rep, i), find(&mut rep, j));
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    rep[hi] = lo;
                }
            }
        }
        (0..items.len()).map(|i| find(&mut rep, i)).collect()
    }
}

/// Automorphism group of `g` via a pointwise-stabiliser chain: for each base
/// point, every candidate image is tested for an automorphism fixing the
/// earlier base points, so the order is exact.
pub fn automorphisms(g: &Graph) -> AutomorphismGroup {
    let n = g.n();
    let colors = refine(&[g]).pop().unwrap_or_default();
    let mut base = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut generators: Vec<IsoMapping> = Vec::new();
    let mut order: u128 = 1;
    let mut fixed: Vec<usize> = Vec::new();
    // Choose base points in the search order; stop once the stabiliser is
    // trivial (all remaining orbits are singletons).
    for b in search_order(g, &colors, &[]) {
        if fixed.len() == n {
            break;
        }
        let mut level_gens: Vec<IsoMapping> = Vec::new();
        let mut orbit = vec![b];
        let mut in_orbit = vec![false; n];
        in_orbit[b] = true;
        for w in 0..n {
            if in_orbit[w] || colors[w] != colors[b] || fixed.contains(&w) {
                continue;
            }
            let mut m = Matcher::new(g, g, &colors, &colors, &fixed);
            for &f in &fixed {
                m.assign(f, f);
            }
            // place b -> w as part of the prefix
            let mut prefix = fixed.clone();
            prefix.push(b);
            m.order = search_order(g, &colors, &prefix);
            m.assign(b, w);
            if m.extend(0) {
                let sigma = IsoMapping(m.map);
                assert!(
                    sigma.verify(g, g),
                    "automorphism search produced an invalid map"
                );
                level_gens.push(sigma);
                // close the orbit under generators found at this level
                let mut stack: Vec<usize> = orbit.clone();
                while let Some(x) = stack.pop() {
                    for s in &level_gens {
                        let y = s.image(x);
                        if !in_orbit[y] {
                            in_orbit[y] = true;
                            orbit.push(y);
                            stack.push(y);
                        }
                    }
                }
            }
        }
        base.push(b);
        orbit_sizes.push(orbit.len());
        order *= orbit.len() as u128;
        generators.extend(level_gens);
        fixed.push(b);
    }
    // trailing singleton orbits carry no information
    while orbit_sizes.last() == Some(&1) && base.len() > 1 {
        orbit_sizes.pop();
        base.pop();
    }
    AutomorphismGroup {
        order,
        generators,
        base,
        orbit_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_found() {
        let g = Graph::petersen();
        let m = is_isomorphic(&g, &g).unwrap();
        assert!(m.verify(&g, &g));
    }

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let g = Graph::petersen();
        let perm = vec![3, 7, 1, 0, 9, 2, 8, 5, 6, 4];
        let h = g.relabel(&perm).unwrap();
        let m = is_isomorphic(&g, &h).unwrap();
        assert!(m.verify(&g, &h));
        let back = is_isomorphic(&h, &g).unwrap();
        assert!(back.verify(&h, &g));
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C6 versus two disjoint triangles
        let c6 = Graph::cycle(6);
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(is_isomorphic(&c6, &two).is_none());
        // K33 versus the triangular prism: both 3-regular on 6 vertices
        let prism = Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&Graph::complete_bipartite(3, 3), &prism).is_none());
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(automorphisms(&Graph::cycle(4)).order, 8);
        assert_eq!(automorphisms(&Graph::cycle(7)).order, 14);
        assert_eq!(automorphisms(&Graph::complete(5)).order, 120);
        assert_eq!(automorphisms(&Graph::complete_bipartite(3, 3)).order, 72);
        assert_eq!(automorphisms(&Graph::petersen()).order, 120);
        assert_eq!(automorphisms(&Graph::path(4)).order, 2);
        assert_eq!(
            automorphisms(&Graph::complete(16)).order,
            (1..=16u128).product()
        );
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = Graph::petersen();
        let grp = automorphisms(&g);
        for s in &grp.generators {
            assert!(s.verify(&g, &g));
            assert!(s.compose(s).verify(&g, &g));
        }
    }

    #[test]
    fn edge_orbits_of_cycle() {
        let g = Graph::cycle(6);
        let grp = automorphisms(&g);
        let edges = g.edges().to_vec();
        let reps = grp.orbit_representatives(&edges, |s, &(u, v)| {
            let (a, b) = (s.image(u), s.image(v));
            (a.min(b), a.max(b))
        });
        assert!(reps.iter().all(|&r| r == 0));
    }
}
