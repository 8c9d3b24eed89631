//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl's criterion) producing a combinatorial embedding.
//!
//! The test works on a plain edge list so the crossing solver can call it on
//! planarization hosts without building a [`Graph`] first.

use super::{Graph, KuratowskiWitness};

const NONE: usize = usize::MAX;

/// Rotation system: for every vertex its neighbours in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rot: Vec<Vec<usize>>,
}

/// Outcome of a planarity test.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

impl Embedding {
    pub fn from_rotations(rot: Vec<Vec<usize>>) -> Self {
        Embedding { rot }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    /// Neighbour following `u` in the clockwise rotation at `v`.
    pub fn cw(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let i = r.iter().position(|&x| x == u).expect("not a neighbour");
        r[(i + 1) % r.len()]
    }

    /// Neighbour preceding `u` in the clockwise rotation at `v`.
    pub fn ccw(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let i = r.iter().position(|&x| x == u).expect("not a neighbour");
        r[(i + r.len() - 1) % r.len()]
    }

    /// Faces as closed dart sequences. From dart `u -> v` the walk continues
    /// with `v -> w` where `w` precedes `u` clockwise around `v`.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.rot.len();
        // dart index: position of the target within the source's rotation
        let offsets: Vec<usize> = self
            .rot
            .iter()
            .scan(0, |acc, r| {
                let o = *acc;
                *acc += r.len();
                Some(o)
            })
            .collect();
        let total: usize = self.rot.iter().map(Vec::len).sum();
        let mut used = vec![false; total];
        let pos = |v: usize, w: usize| self.rot[v].iter().position(|&x| x == w).expect("dart");
        let mut faces = Vec::new();
        for u in 0..n {
            for (k, &v) in self.rot[u].iter().enumerate() {
                if used[offsets[u] + k] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    let idx = offsets[a] + pos(a, b);
                    if used[idx] {
                        break;
                    }
                    used[idx] = true;
                    face.push((a, b));
                    let c = self.ccw(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotation system is one of `g` (each rotation is a
    /// permutation of the neighbourhood) and has genus zero: every connected
    /// component satisfies `V - E + F = 2`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.rot.len() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut r = self.rot[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return false;
            }
        }
        let comps = g.components();
        let mut comp_of = vec![0; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut faces = vec![0i64; comps.len()];
        for f in self.faces() {
            faces[comp_of[f[0].0]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let vcount = c.len() as i64;
            let ecount: i64 = c.iter().map(|&v| g.degree(v) as i64).sum::<i64>() / 2;
            let f = if ecount == 0 { 1 } else { faces[i] };
            vcount - ecount + f == 2
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn new() -> Self {
        ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        }
    }

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    edges: &'a [(usize, usize)],
    inc: Vec<Vec<usize>>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    ordered_out: Vec<Vec<usize>>,
    refs: Vec<usize>,
    side: Vec<i8>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

impl<'a> LrState<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)]) -> Self {
        let m = edges.len();
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        LrState {
            edges,
            inc,
            oriented: vec![false; m],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ordered_out: vec![Vec::new(); n],
            refs: vec![NONE; m],
            side: vec![1; m],
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn other(&self, i: usize, v: usize) -> usize {
        let (a, b) = self.edges[i];
        if a == v {
            b
        } else {
            a
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for k in 0..self.inc[v].len() {
            let i = self.inc[v][k];
            if self.oriented[i] {
                continue;
            }
            self.oriented[i] = true;
            let w = self.other(i, v);
            self.src[i] = v;
            self.dst[i] = w;
            self.lowpt[i] = self.height[v];
            self.lowpt2[i] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = i;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[i] = self.height[w];
            }
            self.nesting[i] = 2 * self.lowpt[i] as i64;
            if self.lowpt2[i] < self.height[v] {
                self.nesting[i] += 1;
            }
            if e != NONE {
                if self.lowpt[i] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[i]);
                    self.lowpt[e] = self.lowpt[i];
                } else if self.lowpt[i] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[i]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[i]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.is_empty() && iv.high != NONE && self.lowpt[iv.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> Option<usize> {
        match (p.left.low, p.right.low) {
            (NONE, NONE) => None,
            (NONE, r) => Some(self.lowpt[r]),
            (l, NONE) => Some(self.lowpt[l]),
            (l, r) => Some(self.lowpt[l].min(self.lowpt[r])),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.ordered_out[v].clone();
        for (k, &i) in out.iter().enumerate() {
            self.stack_bottom[i] = self.stack.len();
            let w = self.dst[i];
            if i == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[i] = i;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: i, high: i },
                });
            }
            if self.lowpt[i] < self.height[v] {
                if k == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[i];
                } else if !self.add_constraints(i, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            let u = self.src[e];
            self.trim_back_edges(u);
            if self.lowpt[e] < self.height[u] {
                let top = *self.stack.last().expect("return edge pending");
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::new();
        loop {
            let mut q = self.stack.pop().expect("constraint stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if p.left.low != NONE {
                self.refs[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn trim_back_edges(&mut self, u: usize) {
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != Some(self.height[u]) {
                break;
            }
            let p = self.stack.pop().expect("non-empty");
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
    }

    fn sign(&mut self, i: usize) -> i8 {
        // iterative resolution of the ref chain
        let mut chain = Vec::new();
        let mut cur = i;
        while self.refs[cur] != NONE {
            chain.push(cur);
            cur = self.refs[cur];
        }
        let mut s = self.side[cur];
        while let Some(x) = chain.pop() {
            self.side[x] *= s;
            self.refs[x] = NONE;
            s = self.side[x];
        }
        self.side[i]
    }

    fn run(&mut self, n: usize) -> bool {
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.sort_out_edges();
        for r in self.roots.clone() {
            if !self.test(r) {
                return false;
            }
        }
        true
    }

    fn sort_out_edges(&mut self) {
        for v in 0..self.ordered_out.len() {
            self.ordered_out[v].clear();
        }
        for i in 0..self.edges.len() {
            self.ordered_out[self.src[i]].push(i);
        }
        for v in 0..self.ordered_out.len() {
            let nest = &self.nesting;
            self.ordered_out[v].sort_by_key(|&i| (nest[i], i));
        }
    }

    fn embed(&mut self, n: usize) -> Embedding {
        for i in 0..self.edges.len() {
            let s = self.sign(i) as i64;
            self.nesting[i] *= s;
        }
        self.sort_out_edges();
        let mut rot = RotationBuilder::new(n, self.edges);
        for v in 0..n {
            let mut prev = NONE;
            for &i in &self.ordered_out[v] {
                let w = self.dst[i];
                rot.add_cw(v, w, prev);
                prev = w;
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for r in self.roots.clone() {
            self.embed_dfs(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        rot.finish()
    }

    fn embed_dfs(
        &self,
        v: usize,
        rot: &mut RotationBuilder,
        left_ref: &mut [usize],
        right_ref: &mut [usize],
    ) {
        for &i in &self.ordered_out[v] {
            let w = self.dst[i];
            if i == self.parent_edge[w] {
                rot.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed_dfs(w, rot, left_ref, right_ref);
            } else if self.side[i] == 1 {
                rot.add_cw(w, v, right_ref[w]);
            } else {
                rot.add_ccw(w, v, left_ref[w]);
                left_ref[w] = v;
            }
        }
    }
}

/// Doubly linked cyclic rotation lists addressed by half-edges.
struct RotationBuilder {
    inc: Vec<Vec<(usize, usize)>>,
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<usize>,
}

impl RotationBuilder {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            inc[u].push((v, 2 * i));
            inc[v].push((u, 2 * i + 1));
        }
        RotationBuilder {
            inc,
            cw: vec![NONE; 2 * edges.len()],
            ccw: vec![NONE; 2 * edges.len()],
            first: vec![NONE; n],
        }
    }

    fn half(&self, v: usize, w: usize) -> usize {
        self.inc[v]
            .iter()
            .find(|&&(x, _)| x == w)
            .expect("half-edge")
            .1
    }

    fn add_cw(&mut self, v: usize, w: usize, reference: usize) {
        let h = self.half(v, w);
        if reference == NONE {
            self.cw[h] = w;
            self.ccw[h] = w;
            self.first[v] = w;
            return;
        }
        let hr = self.half(v, reference);
        let cw_ref = self.cw[hr];
        self.cw[hr] = w;
        self.cw[h] = cw_ref;
        self.ccw[h] = reference;
        let hc = self.half(v, cw_ref);
        self.ccw[hc] = w;
    }

    fn add_ccw(&mut self, v: usize, w: usize, reference: usize) {
        if reference == NONE {
            self.add_cw(v, w, NONE);
            return;
        }
        let ccw_ref = self.ccw[self.half(v, reference)];
        self.add_cw(v, w, ccw_ref);
        if reference == self.first[v] {
            self.first[v] = w;
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = self.first[v];
        self.add_ccw(v, w, reference);
    }

    fn finish(self) -> Embedding {
        let n = self.first.len();
        let mut rot = vec![Vec::new(); n];
        for (v, r) in rot.iter_mut().enumerate() {
            let start = self.first[v];
            if start == NONE {
                continue;
            }
            let mut cur = start;
            loop {
                r.push(cur);
                cur = self.cw[self.half(v, cur)];
                if cur == start {
                    break;
                }
            }
        }
        Embedding { rot }
    }
}

/// Planarity of a simple graph given as an edge list on `0..n`.
pub(crate) fn edges_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    if n > 2 && edges.len() > 3 * n - 6 {
        return false;
    }
    LrState::new(n, edges).run(n)
}

/// Planar embedding of a simple graph given as an edge list, if planar.
pub(crate) fn edges_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Embedding> {
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(n, edges);
    if !st.run(n) {
        return None;
    }
    Some(st.embed(n))
}

/// A planar rotation system of `g`, or `None` when `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    let emb = edges_embedding(g.n(), g.edges())?;
    debug_assert!(emb.verify(g));
    Some(emb)
}

/// Planarity with certificate: an embedding, or a verified Kuratowski
/// subdivision.
pub fn is_planar(g: &Graph) -> Planarity {
    match planar_embedding(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar(
            super::kuratowski_witness(g).expect("non-planar graph has a Kuratowski subdivision"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_planar_graphs_embed() {
        for g in [
            Graph::complete(4),
            Graph::cycle(6),
            Graph::path(5),
            Graph::new(3, []).unwrap(),
            Graph::complete_bipartite(2, 5),
        ] {
            let e = planar_embedding(&g).expect("planar");
            assert!(e.verify(&g));
        }
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(planar_embedding(&Graph::complete(5)).is_none());
        assert!(planar_embedding(&Graph::complete_bipartite(3, 3)).is_none());
        assert!(planar_embedding(&Graph::petersen()).is_none());
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let g = Graph::complete(5).without_edges(&[0]);
        assert!(planar_embedding(&g).unwrap().verify(&g));
    }

    #[test]
    fn faces_of_square() {
        let g = Graph::cycle(4);
        let e = planar_embedding(&g).unwrap();
        assert_eq!(e.faces().len(), 2);
    }

    #[test]
    fn bad_rotation_system_fails_verification() {
        // K4 with a twisted rotation at one vertex has genus one
        let g = Graph::complete(4);
        let mut rot: Vec<Vec<usize>> = planar_embedding(&g).unwrap().rot;
        rot[0].swap(0, 1);
        assert!(!Embedding::from_rotations(rot).verify(&g));
    }
}
