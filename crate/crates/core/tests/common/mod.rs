//! Shared fixtures and the brute-force crossing oracle.
#![allow(dead_code)]

use cubecross::cube::generate;
use cubecross::graph::{is_planar, Planarity};
use cubecross::Graph;

pub fn cube(spec: &str) -> Graph {
    generate(spec.parse().expect("spec")).expect("generate")
}

pub fn petersen_minus_vertex() -> Graph {
    let p = Graph::petersen();
    let keep: Vec<usize> = (1..p.n()).collect();
    cubecross::graph::induced_subgraph(&p, &cubecross::VertexSubset::new(keep))
        .unwrap()
        .0
}

/// The oracle fixture set, by name.
pub fn oracle_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("Q3", cube("Q3")),
        ("CQ3", cube("CQ3")),
        ("LTQ3", cube("LTQ3")),
        ("0-MQ3", cube("0-MQ3")),
        ("1-MQ3", cube("1-MQ3")),
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("Petersen-v", petersen_minus_vertex()),
    ]
}

/// Graphs whose crossing number is 2 or more, so the oracle also has to
/// refute at positive `k`.
pub fn harder_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("K6", Graph::complete(6)),
        ("K3,4", Graph::complete_bipartite(3, 4)),
        ("Petersen", Graph::petersen()),
    ]
}

/// Planarity with the certificate checked on the spot.
fn planar_checked(h: &Graph) -> bool {
    match is_planar(h) {
        Planarity::Planar(emb) => {
            assert!(emb.verify(h), "embedding fails verification");
            true
        }
        Planarity::NonPlanar(w) => {
            assert!(w.verify(h), "Kuratowski witness fails verification");
            false
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Host graph for the chosen crossing pairs with the given orders along
/// each edge (orders are pair indices, walking from the smaller endpoint).
fn host(g: &Graph, orders: &[Vec<usize>]) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut prev = u;
        for &c in &orders[e] {
            edges.push((prev, n + c));
            prev = n + c;
        }
        edges.push((prev, v));
    }
    let dummies = orders.iter().map(Vec::len).sum::<usize>() / 2;
    Graph::new(n + dummies, edges).expect("host is simple")
}

fn some_order_planar(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); g.m()];
    for (c, &(e, f)) in pairs.iter().enumerate() {
        on_edge[e].push(c);
        on_edge[f].push(c);
    }
    let choices: Vec<Vec<Vec<usize>>> = on_edge.iter().map(|s| permutations(s)).collect();
    let mut pick = vec![0usize; g.m()];
    loop {
        let orders: Vec<Vec<usize>> = (0..g.m()).map(|e| choices[e][pick[e]].clone()).collect();
        if planar_checked(&host(g, &orders)) {
            return true;
        }
        // odometer over the per-edge choices
        let mut e = 0;
        loop {
            if e == g.m() {
                return false;
            }
            pick[e] += 1;
            if pick[e] < choices[e].len() {
                break;
            }
            pick[e] = 0;
            e += 1;
        }
    }
}

fn subsets(
    pool: &[(usize, usize)],
    t: usize,
    start: usize,
    cur: &mut Vec<(usize, usize)>,
    g: &Graph,
) -> bool {
    if cur.len() == t {
        return some_order_planar(g, cur);
    }
    for i in start..pool.len() {
        cur.push(pool[i]);
        let found = subsets(pool, t, i + 1, cur, g);
        cur.pop();
        if found {
            return true;
        }
    }
    false
}

/// Smallest `t <= cap` such that some set of `t` crossings between
/// non-adjacent edge pairs, in some order along every edge, planarizes `g`;
/// `None` if there is none. Pure enumeration, no pruning.
pub fn oracle_cr(g: &Graph, cap: usize) -> Option<usize> {
    let m = g.m();
    let pool: Vec<(usize, usize)> = (0..m)
        .flat_map(|e| (e + 1..m).map(move |f| (e, f)))
        .filter(|&(e, f)| !g.edges_adjacent(e, f))
        .collect();
    (0..=cap).find(|&t| subsets(&pool, t, 0, &mut Vec::new(), g))
}
