//! Kuratowski subdivisions certifying non-planarity.

use super::planarity::edges_planar;
use super::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside a host graph.
///
/// For `K5` the branch vertices are `b0..b4` and `paths` lists the ten
/// branch-to-branch paths in lexicographic pair order. For `K3,3` the branch
/// vertices are `a0 a1 a2 b0 b1 b2` and `paths[3 * i + j]` joins `ai` to `bj`.
/// Every path is a vertex sequence starting and ending at branch vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Branch vertex pairs each path must join, in path order.
    fn expected_ends(&self) -> Vec<(usize, usize)> {
        let b = &self.branch;
        match self.kind {
            KuratowskiKind::K5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (b[i], b[j])))
                .collect(),
            KuratowskiKind::K33 => (0..3)
                .flat_map(|i| (0..3).map(move |j| (b[i], b[3 + j])))
                .collect(),
        }
    }

    /// Structural re-check against `g`: correct branch count, every path is
    /// a walk in `g` joining the right branch pair, and the paths are
    /// internally vertex-disjoint from each other and from the branch set.
    pub fn verify(&self, g: &Graph) -> bool {
        let want = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if self.branch.len() != want.0 || self.paths.len() != want.1 {
            return false;
        }
        let mut used = vec![false; g.n()];
        for &b in &self.branch {
            if b >= g.n() || used[b] {
                return false;
            }
            used[b] = true;
        }
        for (path, (s, t)) in self.paths.iter().zip(self.expected_ends()) {
            if path.len() < 2 {
                return false;
            }
            let ends = (path[0], path[path.len() - 1]);
            if ends != (s, t) && ends != (t, s) {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if v >= g.n() || used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        true
    }

    /// All edges used by the subdivision, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Indices of a minimal non-planar edge subset of a simple graph given as an
/// edge list, scanning edges in `order`. `None` when the graph is planar.
pub(crate) fn minimal_nonplanar(
    n: usize,
    edges: &[(usize, usize)],
    order: &[usize],
) -> Option<Vec<usize>> {
    if edges_planar(n, edges) {
        return None;
    }
    let mut active = vec![true; edges.len()];
    let collect = |active: &[bool]| -> Vec<(usize, usize)> {
        edges
            .iter()
            .zip(active)
            .filter(|(_, &a)| a)
            .map(|(&e, _)| e)
            .collect()
    };
    // Greedy deletion in shrinking chunks: whole runs of inessential edges
    // go at once, essential ones are isolated by halving.
    let mut i = 0;
    let mut step = (order.len() / 8).max(1);
    while i < order.len() {
        let end = (i + step).min(order.len());
        for &e in &order[i..end] {
            active[e] = false;
        }
        if !edges_planar(n, &collect(&active)) {
            i = end;
            step *= 2;
        } else {
            for &e in &order[i..end] {
                active[e] = true;
            }
            if step == 1 {
                i += 1;
            } else {
                step /= 2;
            }
        }
    }
    Some((0..edges.len()).filter(|&e| active[e]).collect())
}

/// Reads off a witness from a minimal non-planar edge set.
fn witness_from_minimal(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiWitness> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match branch.len() {
        5 if branch.iter().all(|&v| adj[v].len() == 4) => KuratowskiKind::K5,
        6 if branch.iter().all(|&v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| adj[v].len() >= 3;
    // trace every branch-to-branch path once
    let mut traced: Vec<Vec<usize>> = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch(cur) {
                let next = *adj[cur].iter().find(|&&x| x != prev)?;
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                traced.push(path);
            }
        }
    }
    let find = |s: usize, t: usize| -> Option<Vec<usize>> {
        traced.iter().find_map(|p| {
            let (a, z) = (p[0], p[p.len() - 1]);
            if (a, z) == (s, t) {
                Some(p.clone())
            } else if (a, z) == (t, s) {
                Some(p.iter().rev().copied().collect())
            } else {
                None
            }
        })
    };
    let ordered_branch = match kind {
        KuratowskiKind::K5 => branch.clone(),
        KuratowskiKind::K33 => {
            let a0 = branch[0];
            let mut side_b: Vec<usize> = traced
                .iter()
                .filter_map(|p| {
                    let (s, t) = (p[0], p[p.len() - 1]);
                    if s == a0 {
                        Some(t)
                    } else if t == a0 {
                        Some(s)
                    } else {
                        None
                    }
                })
                .collect();
            side_b.sort_unstable();
            let side_a: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|v| !side_b.contains(v))
                .collect();
            side_a.into_iter().chain(side_b).collect()
        }
    };
    let mut w = KuratowskiWitness {
        kind,
        branch: ordered_branch,
        paths: Vec::new(),
    };
    for (s, t) in w.expected_ends() {
        w.paths.push(find(s, t)?);
    }
    Some(w)
}

/// A verified Kuratowski subdivision of `g`, or `None` when `g` is planar.
pub fn kuratowski_witness(g: &Graph) -> Option<KuratowskiWitness> {
    let order: Vec<usize> = (0..g.m()).collect();
    let keep = minimal_nonplanar(g.n(), g.edges(), &order)?;
    let sub: Vec<_> = keep.iter().map(|&e| g.edges()[e]).collect();
    let w = witness_from_minimal(g.n(), &sub).expect("minimal non-planar graph is a subdivision");
    debug_assert!(w.verify(g));
    Some(w)
}

/// A `K3,3` subdivision of `g` if one exists.
///
/// Edge-deletion minimization is retried under several seeded edge orders
/// since a single run may land on a `K5` subdivision. Graphs with at most
/// twelve vertices fall back to an exhaustive search over branch sets, so
/// the answer is exact there.
pub fn find_k33_subdivision(g: &Graph) -> Option<KuratowskiWitness> {
    if g.n() < 6 || edges_planar(g.n(), g.edges()) {
        return None;
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b33);
    for attempt in 0..48 {
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        let keep = minimal_nonplanar(g.n(), g.edges(), &order).expect("non-planar");
        let sub: Vec<_> = keep.iter().map(|&e| g.edges()[e]).collect();
        if let Some(w) = witness_from_minimal(g.n(), &sub) {
            if w.kind == KuratowskiKind::K33 {
                return Some(w);
            }
        }
    }
    if g.n() <= 12 {
        exhaustive_k33(g)
    } else {
        None
    }
}

fn exhaustive_k33(g: &Graph) -> Option<KuratowskiWitness> {
    let cand: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let k = cand.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let a = [cand[i], cand[j], cand[l]];
                let rest: Vec<usize> = cand.iter().copied().filter(|v| !a.contains(v)).collect();
                for x in 0..rest.len() {
                    for y in x + 1..rest.len() {
                        for z in y + 1..rest.len() {
                            let b = [rest[x], rest[y], rest[z]];
                            // each unordered {A, B} once: A holds the smallest vertex
                            if b[0] < a[0] {
                                continue;
                            }
                            if let Some(w) = k33_with_branches(g, a, b) {
                                return Some(w);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn k33_with_branches(g: &Graph, a: [usize; 3], b: [usize; 3]) -> Option<KuratowskiWitness> {
    let mut used = vec![false; g.n()];
    for &v in a.iter().chain(&b) {
        used[v] = true;
    }
    let pairs: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (a[i], b[j])))
        .collect();
    let mut paths = Vec::new();
    if route_all(g, &pairs, &mut used, &mut paths) {
        Some(KuratowskiWitness {
            kind: KuratowskiKind::K33,
            branch: a.iter().chain(&b).copied().collect(),
            paths,
        })
    } else {
        None
    }
}

fn route_all(
    g: &Graph,
    pairs: &[(usize, usize)],
    used: &mut [bool],
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(&(s, t)) = pairs.get(paths.len()) else {
        return true;
    };
    let mut path = vec![s];
    extend_path(g, t, pairs, used, &mut path, paths)
}

fn extend_path(
    g: &Graph,
    t: usize,
    pairs: &[(usize, usize)],
    used: &mut [bool],
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let cur = *path.last().expect("non-empty");
    for &w in g.neighbors(cur) {
        if w == t {
            // a direct branch edge can serve only one pair
            if path.len() == 1
                && paths
                    .iter()
                    .any(|p| p.len() == 2 && p[0] == cur && p[1] == t)
            {
                continue;
            }
            path.push(t);
            paths.push(path.clone());
            if route_all(g, pairs, used, paths) {
                return true;
            }
            paths.pop();
            path.pop();
        } else if !used[w] {
            used[w] = true;
            path.push(w);
            if extend_path(g, t, pairs, used, path, paths) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_witness() {
        let g = Graph::complete(5);
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(w.verify(&g));
    }

    #[test]
    fn k33_witness_in_petersen() {
        let g = Graph::petersen();
        let w = kuratowski_witness(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&g));
        assert!(find_k33_subdivision(&g).unwrap().verify(&g));
    }

    #[test]
    fn planar_graph_has_no_witness() {
        assert!(kuratowski_witness(&Graph::complete(4)).is_none());
        assert!(find_k33_subdivision(&Graph::cycle(8)).is_none());
    }

    #[test]
    fn k5_has_no_k33() {
        assert!(find_k33_subdivision(&Graph::complete(5)).is_none());
    }

    #[test]
    fn k6_has_a_k33() {
        let g = Graph::complete(6);
        let w = find_k33_subdivision(&g).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.verify(&g));
    }

    #[test]
    fn tampered_witness_fails() {
        let g = Graph::complete_bipartite(3, 3);
        let mut w = kuratowski_witness(&g).unwrap();
        assert!(w.verify(&g));
        w.paths.swap(0, 1);
        assert!(!w.verify(&g));
    }
}
