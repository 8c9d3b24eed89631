use super::planarization::{Host, Planarization};
use super::{euler_girth_bound, Budget};
use crate::graph::kuratowski::minimal_nonplanar;
use crate::graph::planarity::edges_planar;
use crate::graph::{automorphisms, Graph};
use rayon::prelude::*;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Answer to "does `g` have a good drawing with at most `k` crossings".
#[derive(Clone, Debug)]
pub enum Decision {
    Yes(Planarization),
    No(SearchStats),
    Timeout(SearchStats),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// First-crossing choices left after symmetry reduction.
    pub root_branches: usize,
}

enum Step {
    Found(Planarization),
    Exhausted,
    Stopped,
}

const SHARDS: usize = 64;

/// Failed states with the largest crossing allowance they were refuted for.
struct Visited {
    shards: Vec<Mutex<HashMap<Vec<Vec<usize>>, usize>>>,
    cap: usize,
}

impl Visited {
    fn new(cap: usize) -> Self {
        Visited {
            shards: (0..SHARDS).map(|_| Mutex::new(HashMap::new())).collect(),
            cap: (cap / SHARDS).max(1),
        }
    }

    fn shard(&self, key: &[Vec<usize>]) -> &Mutex<HashMap<Vec<Vec<usize>>, usize>> {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        &self.shards[(h.finish() as usize) % SHARDS]
    }

    fn refuted(&self, key: &[Vec<usize>], left: usize) -> bool {
        let s = self.shard(key).lock().unwrap();
        s.get(key).is_some_and(|&l| l >= left)
    }

    fn record(&self, key: &[Vec<usize>], left: usize) {
        let mut s = self.shard(key).lock().unwrap();
        if s.len() >= self.cap {
            s.clear();
        }
        let slot = s.entry(key.to_vec()).or_insert(left);
        *slot = (*slot).max(left);
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
    timed_out: AtomicBool,
    visited: Visited,
    found: Mutex<Option<Planarization>>,
}

impl Search<'_> {
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.budget.nodes.is_some_and(|l| n > l);
        let over_time =
            n.is_multiple_of(64) && self.budget.time.is_some_and(|t| self.start.elapsed() > t);
        if over_nodes || over_time {
            self.timed_out.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn compatible(&self, p: &Planarization, e: usize, f: usize) -> bool {
        e != f && !self.g.edges_adjacent(e, f) && !p.crosses(e, f)
    }

    /// Host edge ids of a Kuratowski subdivision within `keep`, lowest
    /// indices preferred.
    fn witness(host: &Host, keep: &[bool]) -> Option<Vec<usize>> {
        let ids: Vec<usize> = (0..host.edges.len()).filter(|&h| keep[h]).collect();
        let sub: Vec<(usize, usize)> = ids.iter().map(|&h| host.edges[h]).collect();
        let order: Vec<usize> = (0..sub.len()).collect();
        let w = minimal_nonplanar(host.n + host.pairs.len(), &sub, &order)?;
        Some(w.into_iter().map(|i| ids[i]).collect())
    }

    fn dfs(&self, p: &mut Planarization, left: usize) -> Step {
        if !self.tick() {
            return Step::Stopped;
        }
        let host = p.host();
        let nh = host.n + host.pairs.len();
        if edges_planar(nh, &host.edges) {
            return Step::Found(p.clone());
        }
        if left == 0 {
            return Step::Exhausted;
        }
        // Every further crossing adds a vertex and two edges.
        if host.edges.len() as i64 - 3 * nh as i64 + 6 > left as i64 {
            return Step::Exhausted;
        }
        if self.visited.refuted(p.sequences(), left) {
            return Step::Exhausted;
        }
        let mut keep = vec![true; host.edges.len()];
        let w1 = Self::witness(&host, &keep).expect("host is non-planar");
        // Edge-disjoint subdivisions each need a crossed edge; one crossing
        // serves at most two of them.
        let mut disjoint = 1;
        let mut w = w1.clone();
        while disjoint <= 2 * left {
            for &h in &w {
                keep[h] = false;
            }
            match Self::witness(&host, &keep) {
                Some(next) => {
                    disjoint += 1;
                    w = next;
                }
                None => break,
            }
        }
        if disjoint > 2 * left {
            self.visited.record(p.sequences(), left);
            return Step::Exhausted;
        }
        let step = if left == 1 {
            self.last_crossing(p, &host, &w1)
        } else {
            self.branch(p, &host, &w1, left)
        };
        if matches!(step, Step::Exhausted) {
            self.visited.record(p.sequences(), left);
        }
        step
    }

    fn branch(&self, p: &mut Planarization, host: &Host, w: &[usize], left: usize) -> Step {
        let m = self.g.m();
        for &h in w {
            let (e, i) = host.origin[h];
            for f in 0..m {
                if !self.compatible(p, e, f) {
                    continue;
                }
                for j in 0..=p.sequence(f).len() {
                    p.insert(e, i, f, j);
                    let step = self.dfs(p, left - 1);
                    p.remove(e, f);
                    match step {
                        Step::Exhausted => {}
                        other => return other,
                    }
                }
            }
        }
        Step::Exhausted
    }

    /// With one crossing left it must hit the witness `w` and every
    /// subdivision that survives removing the crossed witness edge.
    fn last_crossing(&self, p: &mut Planarization, host: &Host, w: &[usize]) -> Step {
        let mut keep = vec![true; host.edges.len()];
        for &h1 in w {
            let (e, i) = host.origin[h1];
            keep[h1] = false;
            let partners =
                Self::witness(host, &keep).unwrap_or_else(|| (0..host.edges.len()).collect());
            keep[h1] = true;
            for h2 in partners {
                let (f, j) = host.origin[h2];
                if !self.compatible(p, e, f) {
                    continue;
                }
                if !self.tick() {
                    return Step::Stopped;
                }
                p.insert(e, i, f, j);
                let h = p.host();
                let planar = edges_planar(h.n + h.pairs.len(), &h.edges);
                if planar {
                    return Step::Found(p.clone());
                }
                p.remove(e, f);
            }
        }
        Step::Exhausted
    }

    /// First crossing: one representative per automorphism orbit of
    /// non-adjacent edge pairs.
    fn root_choices(&self) -> Vec<(usize, usize)> {
        let g = self.g;
        let mut pairs = Vec::new();
        for e in 0..g.m() {
            for f in e + 1..g.m() {
                if !g.edges_adjacent(e, f) {
                    pairs.push((e, f));
                }
            }
        }
        let aut = automorphisms(g);
        let rep = aut.orbit_representatives(&pairs, |s, &(e, f)| {
            let map = |x: usize| {
                let (u, v) = g.edges()[x];
                g.edge_index(s.image(u), s.image(v))
                    .expect("automorphism maps edges to edges")
            };
            let (a, b) = (map(e), map(f));
            (a.min(b), a.max(b))
        });
        pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| rep[i] == i)
            .map(|(_, &p)| p)
            .collect()
    }

    fn stats(&self, root_branches: usize) -> SearchStats {
        SearchStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            elapsed: self.start.elapsed(),
            root_branches,
        }
    }
}

/// Decides `cr(g) <= k` by branch and bound over planarizations.
///
/// A `Yes` carries a planarization with at most `k` crossings whose host is
/// planar. `No` is returned only after the whole branch space is refuted.
pub fn cr_decide(g: &Graph, k: usize, budget: &Budget) -> Decision {
    let s = Search {
        g,
        budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        visited: Visited::new(budget.visited_cap),
        found: Mutex::new(None),
    };
    let mut root = Planarization::empty(g.clone());
    if !s.tick() {
        return Decision::Timeout(s.stats(0));
    }
    if edges_planar(g.n(), g.edges()) {
        return Decision::Yes(root);
    }
    if k == 0 || euler_girth_bound(g).is_ok_and(|b| b > k) {
        return Decision::No(s.stats(0));
    }
    let choices = s.root_choices();
    let run = |&(e, f): &(usize, usize)| -> bool {
        let mut p = root.clone();
        p.insert(e, 0, f, 0);
        match s.dfs(&mut p, k - 1) {
            Step::Found(q) => {
                s.stop.store(true, Ordering::Relaxed);
                s.found.lock().unwrap().get_or_insert(q);
                true
            }
            Step::Stopped => true,
            Step::Exhausted => false,
        }
    };
    if budget.threads > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(budget.threads)
            .build()
        {
            Ok(pool) => {
                pool.install(|| choices.par_iter().any(run));
            }
            Err(_) => {
                choices.iter().any(run);
            }
        }
    } else {
        choices.iter().any(run);
    }
    if let Some(p) = s.found.lock().unwrap().take() {
        root = p;
        return Decision::Yes(root);
    }
    let stats = s.stats(choices.len());
    if s.timed_out.load(Ordering::Relaxed) {
        Decision::Timeout(stats)
    } else {
        Decision::No(stats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{generate, CubeSpec};
    use crate::solver::verify_certificate;

    fn decide(g: &Graph, k: usize) -> Decision {
        cr_decide(g, k, &Budget::default())
    }

    #[test]
    fn q3_is_planar() {
        let g = generate(CubeSpec::q(3).unwrap()).unwrap();
        assert!(decide(&g, 0).is_yes());
    }

    #[test]
    fn cq3_needs_one_crossing() {
        let g = generate(CubeSpec::cq(3).unwrap()).unwrap();
        assert!(matches!(decide(&g, 0), Decision::No(_)));
        match decide(&g, 1) {
            Decision::Yes(p) => {
                assert_eq!(p.crossing_count(), 1);
                assert!(verify_certificate(&g, &p));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k6_needs_three() {
        let g = Graph::complete(6);
        assert!(matches!(decide(&g, 2), Decision::No(_)));
        let Decision::Yes(p) = decide(&g, 3) else {
            panic!()
        };
        assert!(verify_certificate(&g, &p));
    }

    #[test]
    fn petersen_needs_two() {
        let g = Graph::petersen();
        assert!(matches!(decide(&g, 1), Decision::No(_)));
        assert!(decide(&g, 2).is_yes());
    }

    #[test]
    fn node_limit_times_out() {
        let g = Graph::complete(6);
        let b = Budget {
            nodes: Some(1),
            ..Budget::default()
        };
        assert!(matches!(cr_decide(&g, 3, &b), Decision::Timeout(_)));
    }

    #[test]
    fn parallel_agrees() {
        let g = Graph::complete_bipartite(4, 4);
        let b = Budget {
            threads: 4,
            ..Budget::default()
        };
        assert!(matches!(cr_decide(&g, 3, &b), Decision::No(_)));
        assert!(cr_decide(&g, 4, &b).is_yes());
    }
}
