//! Exhaustive checkers for cut and partition inequalities of small cubic
//! graphs and for structural facts about the locally twisted cubes.
//!
//! Every checker is total over its precondition: it enumerates the whole
//! quantified space, counts the cases it looked at, and on failure keeps the
//! first violating configuration as a witness.

use crate::cube::{pi_map, split};
use crate::error::{Error, Result};
use crate::graph::{
    classify_mask, edge_count_between, find_c4_partitions, find_k33_subdivision, Graph,
    InducedShape,
};
use std::fmt;

/// Identifies one checked claim. The short tag is what the command line
/// filter accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    CutBounds,
    ThreePartMinimum,
    ThreePartSix,
    ThreePartEmptyPair,
    FourPartMinimum,
    ManyPartMinimum,
    K33Subdivision,
    C4Partitions,
    C4Extension,
    PiAvoidsC4,
    PiPathSquare,
    DisjointFourPaths,
}

impl LemmaId {
    pub const ALL: [LemmaId; 12] = [
        LemmaId::CutBounds,
        LemmaId::ThreePartMinimum,
        LemmaId::ThreePartSix,
        LemmaId::ThreePartEmptyPair,
        LemmaId::FourPartMinimum,
        LemmaId::ManyPartMinimum,
        LemmaId::K33Subdivision,
        LemmaId::C4Partitions,
        LemmaId::C4Extension,
        LemmaId::PiAvoidsC4,
        LemmaId::PiPathSquare,
        LemmaId::DisjointFourPaths,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LemmaId::CutBounds => "2.4",
            LemmaId::ThreePartMinimum => "2.5",
            LemmaId::ThreePartSix => "2.6",
            LemmaId::ThreePartEmptyPair => "2.7",
            LemmaId::FourPartMinimum => "2.8",
            LemmaId::ManyPartMinimum => "2.9",
            LemmaId::K33Subdivision => "obs2.1",
            LemmaId::C4Partitions => "obs3.1",
            LemmaId::C4Extension => "obs4.1",
            LemmaId::PiAvoidsC4 => "obs4.2",
            LemmaId::PiPathSquare => "obs4.3",
            LemmaId::DisjointFourPaths => "obs4.4",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            LemmaId::CutBounds => "cut sizes of sets with at most four vertices",
            LemmaId::ThreePartMinimum => "three-part partitions cut at least 5 edges",
            LemmaId::ThreePartSix => {
                "three-part partitions cutting 6 edges with a single-edge pair"
            }
            LemmaId::ThreePartEmptyPair => "three-part partitions with an edgeless pair",
            LemmaId::FourPartMinimum => "four-part partitions cut at least 7 edges",
            LemmaId::ManyPartMinimum => "partitions into five or more parts cut at least 8 edges",
            LemmaId::K33Subdivision => "contains a K3,3 subdivision",
            LemmaId::C4Partitions => "exactly two splits into induced 4-cycles",
            LemmaId::C4Extension => {
                "edges extend to induced 4-cycles; 4-cycles have 4-cycle complements"
            }
            LemmaId::PiAvoidsC4 => "matching images of 5-cycles and 4-cycles avoid 4-cycles",
            LemmaId::PiPathSquare => "paths preserved by the matching lie on a 4-cycle",
            LemmaId::DisjointFourPaths => "two vertex-disjoint 4-vertex paths between edge pairs",
        }
    }

    /// Lookup by tag, case-insensitive.
    pub fn from_tag(tag: &str) -> Option<LemmaId> {
        let t = tag.to_ascii_lowercase();
        LemmaId::ALL.into_iter().find(|id| id.tag() == t)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A violating configuration: vertex sets plus a short reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub reason: String,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub id: LemmaId,
    pub target: String,
    pub pass: bool,
    pub cases: u64,
    pub witness: Option<Witness>,
    /// Smallest value of the bounded quantity, for the inequality checks.
    pub minimum: Option<usize>,
    /// Extra findings (alternatives seen, constructed paths).
    pub notes: Vec<String>,
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<7} {} on {}: {} ({} cases)",
            self.id.tag(),
            self.id.description(),
            self.target,
            if self.pass { "PASS" } else { "FAIL" },
            self.cases
        )?;
        if let Some(m) = self.minimum {
            write!(f, ", minimum {m}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {} {:?}", w.reason, w.sets)?;
        }
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        Ok(())
    }
}

struct Recorder {
    report: LemmaReport,
}

impl Recorder {
    fn new(id: LemmaId, g: &Graph) -> Self {
        Recorder {
            report: LemmaReport {
                id,
                target: target_name(g),
                pass: true,
                cases: 0,
                witness: None,
                minimum: None,
                notes: Vec::new(),
            },
        }
    }

    fn case(&mut self) {
        self.report.cases += 1;
    }

    fn fail(&mut self, reason: impl Into<String>, sets: Vec<Vec<usize>>) {
        if self.report.pass {
            self.report.pass = false;
            self.report.witness = Some(Witness {
                reason: reason.into(),
                sets,
            });
        }
    }

    fn observe_min(&mut self, v: usize) {
        self.report.minimum = Some(self.report.minimum.map_or(v, |m| m.min(v)));
    }

    fn finish(self) -> LemmaReport {
        self.report
    }
}

fn target_name(g: &Graph) -> String {
    format!("graph(n={}, m={})", g.n(), g.m())
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.regular_degree() != Some(3) {
        return Err(Error::Precondition("graph must be 3-regular".into()));
    }
    if g.n() > 20 {
        return Err(Error::Precondition(
            "too many vertices for subset enumeration".into(),
        ));
    }
    Ok(())
}

fn require_cubic_on_eight(g: &Graph) -> Result<()> {
    require_cubic(g)?;
    if g.n() != 8 {
        return Err(Error::Precondition(format!(
            "need 8 vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Lower bound on `|∂(X)|` for `1 <= |X| <= 4`, by size and induced shape.
fn cut_lower_bound(g: &Graph, mask: u64) -> usize {
    match mask.count_ones() {
        1 => 3,
        2 if classify_mask(g, mask) != InducedShape::Path(2) => 6,
        3 => 5,
        4 if classify_mask(g, mask) != InducedShape::Cycle(4) => 6,
        _ => 4,
    }
}

/// Cut sizes of small vertex sets: the bound table by size and shape, and
/// for 3-sets with exactly 5 cut edges, the complement induces `C5` or loses
/// one vertex to an induced `C4`.
pub fn check_cut_bounds(g: &Graph) -> Result<LemmaReport> {
    require_cubic(g)?;
    let mut r = Recorder::new(LemmaId::CutBounds, g);
    let full = (1u64 << g.n()) - 1;
    for size in 1..=4u32 {
        for mask in 1..=full {
            if mask.count_ones() != size {
                continue;
            }
            r.case();
            let rest = full & !mask;
            let cut = edge_count_between(g, mask, rest);
            let bound = cut_lower_bound(g, mask);
            if cut < bound {
                r.fail(
                    format!("cut {cut} below {bound}"),
                    vec![mask_vertices(mask)],
                );
            }
            if size == 3 && cut == 5 {
                let c5 = classify_mask(g, rest) == InducedShape::Cycle(5);
                let c4 = mask_vertices(rest)
                    .into_iter()
                    .any(|v| classify_mask(g, rest & !(1 << v)) == InducedShape::Cycle(4));
                if !c5 && !c4 {
                    r.fail(
                        "cut 5 but complement is neither C5 nor C4 plus a vertex",
                        vec![mask_vertices(mask)],
                    );
                }
            }
        }
    }
    Ok(r.finish())
}

/// Set partitions of `0..n` into exactly `t` non-empty blocks, as block
/// assignments in restricted growth form.
pub struct SetPartitions {
    n: usize,
    t: usize,
    a: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize, t: usize) -> Self {
        let mut s = SetPartitions {
            n,
            t,
            a: vec![0; n],
            done: t == 0 || t > n,
        };
        if n == 0 && t == 0 {
            s.done = false;
        }
        if !s.done && n > 0 {
            // lexicographically first: 0 .. 0 1 2 .. t-1
            for i in 0..t {
                s.a[n - t + i] = i;
            }
        }
        s
    }

    fn valid_blocks(&self) -> bool {
        self.a.iter().max().map_or(0, |m| m + 1) == self.t
    }

    fn advance(&mut self) -> bool {
        // next restricted growth string with max block < t
        let n = self.n;
        loop {
            let mut i = n;
            loop {
                if i <= 1 {
                    return false;
                }
                i -= 1;
                let prefix_max = self.a[..i].iter().copied().max().unwrap_or(0);
                if self.a[i] <= prefix_max && self.a[i] + 1 < self.t {
                    self.a[i] += 1;
                    for x in &mut self.a[i + 1..] {
                        *x = 0;
                    }
                    break;
                }
            }
            if self.valid_blocks() {
                return true;
            }
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.a.clone();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// A partition with parts ordered by size (descending, ties by smallest
/// vertex) and its cross-edge matrix.
struct Parts {
    masks: Vec<u64>,
    sizes: Vec<usize>,
    e: Vec<Vec<usize>>,
}

impl Parts {
    fn new(g: &Graph, assign: &[usize], t: usize) -> Self {
        let mut masks = vec![0u64; t];
        for (v, &b) in assign.iter().enumerate() {
            masks[b] |= 1 << v;
        }
        masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), m.trailing_zeros()));
        let mut part = vec![0; g.n()];
        for (i, m) in masks.iter().enumerate() {
            for v in mask_vertices(*m) {
                part[v] = i;
            }
        }
        let mut e = vec![vec![0; t]; t];
        for &(u, v) in g.edges() {
            let (a, b) = (part[u], part[v]);
            if a != b {
                e[a][b] += 1;
                e[b][a] += 1;
            }
        }
        Parts {
            sizes: masks.iter().map(|m| m.count_ones() as usize).collect(),
            masks,
            e,
        }
    }

    fn total(&self) -> usize {
        let t = self.masks.len();
        (0..t)
            .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
            .map(|(i, j)| self.e[i][j])
            .sum()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let t = self.masks.len();
        (0..t).flat_map(move |i| (i + 1..t).map(move |j| (i, j)))
    }

    fn sets(&self) -> Vec<Vec<usize>> {
        self.masks.iter().map(|&m| mask_vertices(m)).collect()
    }
}

fn for_partitions(g: &Graph, ts: std::ops::RangeInclusive<usize>, mut f: impl FnMut(&Parts)) {
    for t in ts {
        for assign in SetPartitions::new(g.n(), t) {
            f(&Parts::new(g, &assign, t));
        }
    }
}

/// Every partition into three parts cuts at least 5 edges; equality forces
/// sizes `(6, 1, 1)` and edges between every pair of parts.
pub fn check_three_part_minimum(g: &Graph) -> Result<LemmaReport> {
    require_cubic_on_eight(g)?;
    let mut r = Recorder::new(LemmaId::ThreePartMinimum, g);
    for_partitions(g, 3..=3, |p| {
        r.case();
        let s = p.total();
        r.observe_min(s);
        if s < 5 {
            r.fail(format!("total {s} below 5"), p.sets());
        } else if s == 5 && (p.sizes != [6, 1, 1] || p.pairs().any(|(i, j)| p.e[i][j] == 0)) {
            r.fail(
                "total 5 without sizes (6,1,1) and all pairs joined",
                p.sets(),
            );
        }
    });
    Ok(r.finish())
}

/// Three-part partitions cutting exactly 6 edges, with every pair joined and
/// some pair joined by a single edge, have sizes `(5, 2, 1)` with the middle
/// part an edge joined to the last by one edge, or sizes `(4, 3, 1)` with the
/// first part an induced 4-cycle joined to the last by one edge.
///
/// Which of the two alternatives actually occur is recorded in the notes.
pub fn check_three_part_six(g: &Graph) -> Result<LemmaReport> {
    require_cubic_on_eight(g)?;
    let mut r = Recorder::new(LemmaId::ThreePartSix, g);
    let (mut first, mut second, mut hyp) = (0u64, 0u64, 0u64);
    for_partitions(g, 3..=3, |p| {
        r.case();
        let all_joined = p.pairs().all(|(i, j)| p.e[i][j] > 0);
        let single = p.pairs().any(|(i, j)| p.e[i][j] == 1);
        if p.total() != 6 || !all_joined || !single {
            return;
        }
        hyp += 1;
        let alt1 = p.sizes == [5, 2, 1]
            && p.e[1][2] == 1
            && classify_mask(g, p.masks[1]) == InducedShape::Path(2);
        let alt2 = p.sizes == [4, 3, 1]
            && p.e[0][2] == 1
            && classify_mask(g, p.masks[0]) == InducedShape::Cycle(4);
        first += alt1 as u64;
        second += alt2 as u64;
        if !alt1 && !alt2 {
            r.fail("neither (5,2,1) nor (4,3,1) alternative holds", p.sets());
        }
    });
    r.report.notes.push(format!(
        "{hyp} partitions meet the hypothesis; (5,2,1) alternative holds for {first}, (4,3,1) for {second}"
    ));
    Ok(r.finish())
}

/// A three-part partition with an edgeless pair `s < t` has `|X_t| = 1` or
/// cuts at least 8 edges.
pub fn check_three_part_empty_pair(g: &Graph) -> Result<LemmaReport> {
    require_cubic_on_eight(g)?;
    let mut r = Recorder::new(LemmaId::ThreePartEmptyPair, g);
    for_partitions(g, 3..=3, |p| {
        r.case();
        for (s, t) in p.pairs() {
            if p.e[s][t] == 0 && p.sizes[t] != 1 && p.total() < 8 {
                r.fail(
                    format!("parts {s},{t} edgeless, |X_t| > 1, total {}", p.total()),
                    p.sets(),
                );
            }
        }
    });
    Ok(r.finish())
}

/// Four-part partitions cut at least 7 edges; at equality either every pair
/// is joined, or the largest part has 5 vertices and exactly one pair among
/// the three small parts is edgeless.
pub fn check_four_part_minimum(g: &Graph) -> Result<LemmaReport> {
    require_cubic_on_eight(g)?;
    let mut r = Recorder::new(LemmaId::FourPartMinimum, g);
    for_partitions(g, 4..=4, |p| {
        r.case();
        let s = p.total();
        r.observe_min(s);
        if s < 7 {
            r.fail(format!("total {s} below 7"), p.sets());
            return;
        }
        if s > 7 {
            return;
        }
        let empty: Vec<(usize, usize)> = p.pairs().filter(|&(i, j)| p.e[i][j] == 0).collect();
        let alt1 = empty.is_empty();
        let alt2 = p.sizes[0] == 5 && empty.len() == 1 && empty[0].0 >= 1;
        if !alt1 && !alt2 {
            r.fail("total 7 but neither alternative holds", p.sets());
        }
    });
    Ok(r.finish())
}

/// Partitions into five or more parts cut at least 8 edges.
pub fn check_many_part_minimum(g: &Graph) -> Result<LemmaReport> {
    require_cubic_on_eight(g)?;
    let mut r = Recorder::new(LemmaId::ManyPartMinimum, g);
    for_partitions(g, 5..=g.n(), |p| {
        r.case();
        let s = p.total();
        r.observe_min(s);
        if s < 8 {
            r.fail(format!("total {s} below 8"), p.sets());
        }
    });
    Ok(r.finish())
}

/// Passes when a verified `K3,3` subdivision exists.
pub fn check_k33_subdivision(g: &Graph) -> Result<LemmaReport> {
    let mut r = Recorder::new(LemmaId::K33Subdivision, g);
    r.case();
    match find_k33_subdivision(g) {
        Some(w) if w.verify(g) => r
            .report
            .notes
            .push(format!("branch vertices {:?}", w.branch)),
        _ => r.fail("no K3,3 subdivision", Vec::new()),
    }
    Ok(r.finish())
}

/// Exactly two splits into two induced 4-cycles, and the four cross
/// intersections each induce a single edge.
pub fn check_c4_partitions(g: &Graph) -> Result<LemmaReport> {
    let parts = find_c4_partitions(g)?;
    let mut r = Recorder::new(LemmaId::C4Partitions, g);
    r.report.cases = 35;
    if parts.len() != 2 {
        let sets = parts
            .iter()
            .flat_map(|p| [mask_vertices(p.0), mask_vertices(p.1)])
            .collect();
        r.fail(format!("{} partitions instead of 2", parts.len()), sets);
        return Ok(r.finish());
    }
    for a in [parts[0].0, parts[0].1] {
        for b in [parts[1].0, parts[1].1] {
            if classify_mask(g, a & b) != InducedShape::Path(2) {
                r.fail(
                    "intersection is not a single edge",
                    vec![mask_vertices(a), mask_vertices(b)],
                );
            }
        }
    }
    Ok(r.finish())
}

fn four_sets(n: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(|m| m.count_ones() == 4)
}

/// Every edge lies on an induced 4-cycle; every induced 4-cycle has an
/// induced 4-cycle as complement and a perfect matching to it.
pub fn check_c4_extension(g: &Graph) -> Result<LemmaReport> {
    if g.n() != 8 {
        return Err(Error::Precondition(format!(
            "needs an 8-vertex graph, got {}",
            g.n()
        )));
    }
    let mut r = Recorder::new(LemmaId::C4Extension, g);
    let full = (1u64 << g.n()) - 1;
    let squares: Vec<u64> = four_sets(g.n())
        .filter(|&m| classify_mask(g, m) == InducedShape::Cycle(4))
        .collect();
    for &(u, v) in g.edges() {
        r.case();
        let x = 1u64 << u | 1 << v;
        if !squares.iter().any(|&s| s & x == x) {
            r.fail("edge on no induced 4-cycle", vec![vec![u, v]]);
        }
    }
    for &s in &squares {
        r.case();
        let rest = full & !s;
        if classify_mask(g, rest) != InducedShape::Cycle(4) {
            r.fail(
                "complement of a 4-cycle is not a 4-cycle",
                vec![mask_vertices(s)],
            );
        } else if !has_perfect_matching(g, &mask_vertices(s), &mask_vertices(rest)) {
            r.fail(
                "no perfect matching to the complement",
                vec![mask_vertices(s)],
            );
        }
    }
    Ok(r.finish())
}

fn has_perfect_matching(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    fn go(g: &Graph, a: &[usize], b: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&u, rest)) = a.split_first() else {
            return true;
        };
        for (j, &w) in b.iter().enumerate() {
            if !used[j] && g.has_edge(u, w) {
                used[j] = true;
                if go(g, rest, b, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    a.len() == b.len() && go(g, a, b, &mut vec![false; b.len()])
}

/// Halves of a split cube with the cross matching as a full map.
struct Halves {
    left: Vec<usize>,
    pi: Vec<usize>,
    left_graph_mask: Vec<(usize, usize)>,
}

/// The matching statements concern 16-vertex cubes; on smaller halves they
/// hold vacuously.
fn order_four(g: &Graph) -> Result<()> {
    if g.n() != 16 {
        return Err(Error::Precondition(format!(
            "needs a 16-vertex graph, got {}",
            g.n()
        )));
    }
    Ok(())
}

fn halves(g: &Graph) -> Result<Halves> {
    if g.n() > 64 {
        return Err(Error::Precondition("too many vertices".into()));
    }
    let sv = split(g)?;
    let matching = pi_map(&sv)?;
    let mut pi = vec![usize::MAX; g.n()];
    for (u, w) in matching {
        pi[u] = w;
    }
    let left_graph_mask = sv
        .left_graph
        .edges()
        .iter()
        .map(|&(a, b)| (sv.left[a], sv.left[b]))
        .collect();
    Ok(Halves {
        left: sv.left,
        pi,
        left_graph_mask,
    })
}

fn left_subsets(h: &Halves, size: usize) -> Vec<u64> {
    let k = h.left.len();
    (0u64..1 << k)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| {
            (0..k)
                .filter(|i| m >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << h.left[i])
        })
        .collect()
}

fn image(h: &Halves, mask: u64) -> u64 {
    mask_vertices(mask)
        .into_iter()
        .fold(0, |acc, v| acc | 1 << h.pi[v])
}

/// Under the cross matching `pi`: the image of an induced 5-cycle of the
/// left half minus any one vertex is not an induced 4-cycle, and the image
/// of an induced 4-cycle plus any fifth left vertex, minus any one of the
/// cycle's vertices, is not an induced 4-cycle.
pub fn check_pi_avoids_c4(g: &Graph) -> Result<LemmaReport> {
    order_four(g)?;
    let h = halves(g)?;
    let mut r = Recorder::new(LemmaId::PiAvoidsC4, g);
    for c5 in left_subsets(&h, 5) {
        if classify_mask(g, c5) != InducedShape::Cycle(5) {
            continue;
        }
        for v in mask_vertices(c5) {
            r.case();
            let img = image(&h, c5 & !(1 << v));
            if classify_mask(g, img) == InducedShape::Cycle(4) {
                r.fail(
                    "image of 5-cycle minus a vertex is a 4-cycle",
                    vec![mask_vertices(c5), vec![v]],
                );
            }
        }
    }
    for c4 in left_subsets(&h, 4) {
        if classify_mask(g, c4) != InducedShape::Cycle(4) {
            continue;
        }
        for &u5 in &h.left {
            if c4 >> u5 & 1 == 1 {
                continue;
            }
            for v in mask_vertices(c4) {
                r.case();
                let img = image(&h, (c4 | 1 << u5) & !(1 << v));
                if classify_mask(g, img) == InducedShape::Cycle(4) {
                    r.fail(
                        "image of 4-cycle with a swapped vertex is a 4-cycle",
                        vec![mask_vertices(c4), vec![u5, v]],
                    );
                }
            }
        }
    }
    Ok(r.finish())
}

/// A left path `u1 u2 u3` whose image under `pi` is again a path lies on an
/// induced 4-cycle `{u1, u2, u3, u}` of the left half.
pub fn check_pi_path_square(g: &Graph) -> Result<LemmaReport> {
    order_four(g)?;
    let h = halves(g)?;
    let mut r = Recorder::new(LemmaId::PiPathSquare, g);
    for &u2 in &h.left {
        for &u1 in &h.left {
            for &u3 in &h.left {
                if u1 >= u3 || u1 == u2 || u3 == u2 || !g.has_edge(u1, u2) || !g.has_edge(u2, u3) {
                    continue;
                }
                if !g.has_edge(h.pi[u1], h.pi[u2]) || !g.has_edge(h.pi[u2], h.pi[u3]) {
                    continue;
                }
                r.case();
                let base = 1u64 << u1 | 1 << u2 | 1 << u3;
                let ok = h.left.iter().any(|&u| {
                    base >> u & 1 == 0 && classify_mask(g, base | 1 << u) == InducedShape::Cycle(4)
                });
                if !ok {
                    r.fail(
                        "preserved path on no induced 4-cycle",
                        vec![vec![u1, u2, u3]],
                    );
                }
            }
        }
    }
    Ok(r.finish())
}

/// Edges `u1u2` and `u3u4` of the left half such that every induced 4-cycle
/// of the left half meets `{u1..u4}` in exactly one of the two edges admit
/// two vertex-disjoint 4-vertex paths joining `{u1, u2}` to `{u3, u4}`
/// crosswise. One pair of paths per configuration is kept in the notes.
pub fn check_disjoint_four_paths(g: &Graph) -> Result<LemmaReport> {
    order_four(g)?;
    let h = halves(g)?;
    let mut r = Recorder::new(LemmaId::DisjointFourPaths, g);
    let squares: Vec<u64> = left_subsets(&h, 4)
        .into_iter()
        .filter(|&m| classify_mask(g, m) == InducedShape::Cycle(4))
        .collect();
    let edges = &h.left_graph_mask;
    let mut shown = 0;
    for &(a1, a2) in edges {
        for &(b1, b2) in edges {
            let quad = [a1, a2, b1, b2];
            let qmask = quad.iter().fold(0u64, |m, &v| m | 1 << v);
            if qmask.count_ones() != 4 || (a1, a2) >= (b1, b2) {
                continue;
            }
            let e1 = 1u64 << a1 | 1 << a2;
            let e2 = 1u64 << b1 | 1 << b2;
            if !squares.iter().all(|&s| s & qmask == e1 || s & qmask == e2) {
                continue;
            }
            r.case();
            match crosswise_paths(g, [a1, a2], [b1, b2]) {
                Some(paths) => {
                    if shown < 4 {
                        r.report
                            .notes
                            .push(format!("edges {a1}-{a2}, {b1}-{b2}: paths {paths:?}"));
                        shown += 1;
                    }
                }
                None => r.fail("no disjoint crosswise 4-vertex paths", vec![quad.to_vec()]),
            }
        }
    }
    Ok(r.finish())
}

/// Simple paths on exactly 4 vertices from `s` to `t`.
fn four_vertex_paths(g: &Graph, s: usize, t: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for &x in g.neighbors(s) {
        if x == t {
            continue;
        }
        for &y in g.neighbors(x) {
            if y == s || y == t || !g.has_edge(y, t) {
                continue;
            }
            out.push([s, x, y, t]);
        }
    }
    out
}

fn crosswise_paths(g: &Graph, a: [usize; 2], b: [usize; 2]) -> Option<Vec<[usize; 4]>> {
    for (t0, t1) in [(b[0], b[1]), (b[1], b[0])] {
        for p in four_vertex_paths(g, a[0], t0) {
            for q in four_vertex_paths(g, a[1], t1) {
                if p.iter().all(|v| !q.contains(v)) {
                    return Some(vec![p, q]);
                }
            }
        }
    }
    None
}

/// Runs one checker by id.
pub fn check(id: LemmaId, g: &Graph) -> Result<LemmaReport> {
    match id {
        LemmaId::CutBounds => check_cut_bounds(g),
        LemmaId::ThreePartMinimum => check_three_part_minimum(g),
        LemmaId::ThreePartSix => check_three_part_six(g),
        LemmaId::ThreePartEmptyPair => check_three_part_empty_pair(g),
        LemmaId::FourPartMinimum => check_four_part_minimum(g),
        LemmaId::ManyPartMinimum => check_many_part_minimum(g),
        LemmaId::K33Subdivision => check_k33_subdivision(g),
        LemmaId::C4Partitions => check_c4_partitions(g),
        LemmaId::C4Extension => check_c4_extension(g),
        LemmaId::PiAvoidsC4 => check_pi_avoids_c4(g),
        LemmaId::PiPathSquare => check_pi_path_square(g),
        LemmaId::DisjointFourPaths => check_disjoint_four_paths(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{generate, CubeSpec};

    fn stirling2(n: usize, k: usize) -> usize {
        if n == 0 && k == 0 {
            return 1;
        }
        if n == 0 || k == 0 {
            return 0;
        }
        k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    }

    #[test]
    fn partition_counts_match_stirling_numbers() {
        for n in 1..=8 {
            for t in 1..=n {
                assert_eq!(
                    SetPartitions::new(n, t).count(),
                    stirling2(n, t),
                    "S({n},{t})"
                );
            }
        }
        let bell8: usize = (1..=8).map(|t| SetPartitions::new(8, t).count()).sum();
        assert_eq!(bell8, 4140);
    }

    #[test]
    fn partitions_are_distinct_and_complete() {
        let mut seen = std::collections::HashSet::new();
        for a in SetPartitions::new(6, 3) {
            assert_eq!(a[0], 0);
            assert_eq!(*a.iter().max().unwrap(), 2);
            assert!(seen.insert(a));
        }
    }

    #[test]
    fn cut_bounds_on_crossed_cube() {
        let g = generate(CubeSpec::cq(3).unwrap()).unwrap();
        let r = check_cut_bounds(&g).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.cases, 8 + 28 + 56 + 70);
    }

    #[test]
    fn k4_fails_on_a_triangle() {
        let r = check_cut_bounds(&Graph::complete(4)).unwrap();
        assert!(!r.pass);
        let w = r.witness.unwrap();
        assert_eq!(w.sets[0].len(), 3);
        let mask = w.sets[0].iter().fold(0u64, |m, &v| m | 1 << v);
        assert_eq!(
            edge_count_between(&Graph::complete(4), mask, 0b1111 & !mask),
            3
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        assert!(check_cut_bounds(&Graph::cycle(5)).is_err());
        assert!(check_three_part_minimum(&Graph::complete(4)).is_err());
        assert!(check_pi_avoids_c4(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(LemmaId::from_tag(id.tag()), Some(id));
        }
        assert_eq!(
            LemmaId::from_tag("OBS4.4"),
            Some(LemmaId::DisjointFourPaths)
        );
        assert_eq!(LemmaId::from_tag("9.9"), None);
    }
}
