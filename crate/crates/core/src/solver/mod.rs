//! Crossing numbers: lower bounds, exact decision by branch and bound over
//! planarizations, an edge-insertion heuristic, and realization of
//! certificates as good drawings.

mod exact;
mod heuristic;
mod planarization;
mod realize;

pub use exact::{cr_decide, Decision, SearchStats};
pub use heuristic::{cr_upper_bound, cr_upper_bound_seeded, UpperBound};
pub use planarization::{verify_certificate, Crossing, Host, Planarization};
#[doc(hidden)]
pub use realize::grid_layout;
pub use realize::realize_drawing;

use crate::error::{Error, Result};
use crate::geometry::PolylineDrawing;
use crate::graph::{girth, Graph};
use std::fmt;
use std::time::{Duration, Instant};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x6372_6f73_7321;

/// Resource limits for the exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
    /// Worker threads for first-crossing subtrees.
    pub threads: usize,
    /// Entries kept in the refuted-state table before shards are flushed.
    pub visited_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            time: None,
            nodes: None,
            threads: 1,
            visited_cap: 1 << 21,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_time(time: Duration) -> Self {
        Budget {
            time: Some(time),
            ..Budget::default()
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    /// Same limits minus what has been spent since `start`.
    fn remaining(&self, start: Instant, nodes_used: u64) -> Budget {
        Budget {
            time: self.time.map(|t| t.saturating_sub(start.elapsed())),
            nodes: self.nodes.map(|n| n.saturating_sub(nodes_used)),
            ..self.clone()
        }
    }

    fn exhausted(&self, start: Instant, nodes_used: u64) -> bool {
        self.time.is_some_and(|t| start.elapsed() >= t)
            || self.nodes.is_some_and(|n| nodes_used >= n)
    }
}

/// `max(0, ceil(m - g/(g-2) * (n-2)))` with `g` the girth.
///
/// Requires a connected graph on at least three vertices. Forests give 0.
pub fn euler_girth_bound(g: &Graph) -> Result<usize> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Degenerate(
            "girth bound needs a connected graph with n >= 3".into(),
        ));
    }
    let Some(gi) = girth(g) else { return Ok(0) };
    let (m, n, gi) = (g.m() as i64, g.n() as i64, gi as i64);
    let num = m * (gi - 2) - gi * (n - 2);
    Ok(if num <= 0 {
        0
    } else {
        ((num + gi - 3) / (gi - 2)) as usize
    })
}

fn girth_lower(g: &Graph) -> (usize, LowerProvenance) {
    match (euler_girth_bound(g), girth(g)) {
        (Ok(b), Some(gi)) if b > 0 => (b, LowerProvenance::Euler { girth: gi }),
        _ => (0, LowerProvenance::Zero),
    }
}

/// Where a lower bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerProvenance {
    /// Trivial bound for any graph.
    Zero,
    /// Edge count against the girth.
    Euler { girth: usize },
    /// Non-planar, so at least one crossing.
    NonPlanar,
    /// Exact search refuted every drawing with `k` crossings.
    Exhausted { k: usize },
}

impl fmt::Display for LowerProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerProvenance::Zero => write!(f, "trivial"),
            LowerProvenance::Euler { girth } => write!(f, "euler(girth={girth})"),
            LowerProvenance::NonPlanar => write!(f, "nonplanar"),
            LowerProvenance::Exhausted { k } => write!(f, "exhausted(k={k})"),
        }
    }
}

/// Outcome of [`crossing_number`]: a certified bracket `lower..=upper`.
#[derive(Clone, Debug)]
pub struct CrResult {
    pub graph_id: String,
    pub lower: usize,
    pub lower_provenance: LowerProvenance,
    pub upper: usize,
    pub certificate: Planarization,
    pub drawing: Option<PolylineDrawing>,
    pub exact: bool,
    pub elapsed: Duration,
    pub nodes: u64,
    pub seed: u64,
}

impl CrResult {
    /// Result carrying only a heuristic upper bound.
    pub fn upper_only(g: &Graph, u: UpperBound) -> Self {
        let (lower, lower_provenance) = girth_lower(g);
        CrResult {
            graph_id: format!("n{}m{}", g.n(), g.m()),
            lower,
            lower_provenance,
            upper: u.crossings,
            certificate: u.planarization,
            drawing: Some(u.drawing),
            exact: u.crossings == lower,
            elapsed: Duration::ZERO,
            nodes: 0,
            seed: u.seed,
        }
    }
}

/// Heuristic settings for [`crossing_number_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrOptions {
    /// Restarts of the upper-bound heuristic.
    pub effort: usize,
    pub seed: u64,
}

impl Default for CrOptions {
    fn default() -> Self {
        CrOptions {
            effort: 32,
            seed: DEFAULT_SEED,
        }
    }
}

/// Crossing number with default heuristic settings.
pub fn crossing_number(g: &Graph, budget: &Budget) -> CrResult {
    crossing_number_with(g, budget, CrOptions::default())
}

/// Brackets `cr(g)`: the heuristic gives the upper end, then `cr_decide`
/// runs upward from the girth bound until it answers yes or the budget runs
/// out.
pub fn crossing_number_with(g: &Graph, budget: &Budget, opts: CrOptions) -> CrResult {
    let start = Instant::now();
    let graph_id = format!("n{}m{}", g.n(), g.m());
    let ub = cr_upper_bound_seeded(g, opts.effort.max(1), opts.seed);
    let (mut upper, mut certificate, mut drawing) = match ub {
        Ok(u) => (u.crossings, u.planarization, Some(u.drawing)),
        Err(_) => (usize::MAX, Planarization::empty(g.clone()), None),
    };
    let (mut lower, mut lower_provenance) = girth_lower(g);
    let mut nodes = 0;
    let mut k = lower;
    while k < upper && !budget.exhausted(start, nodes) {
        match cr_decide(g, k, &budget.remaining(start, nodes)) {
            Decision::Yes(p) => {
                upper = p.crossing_count();
                drawing = realize_drawing(&p).ok();
                certificate = p;
            }
            Decision::No(s) => {
                nodes += s.nodes;
                lower = k + 1;
                lower_provenance = if k == 0 {
                    LowerProvenance::NonPlanar
                } else {
                    LowerProvenance::Exhausted { k }
                };
            }
            Decision::Timeout(s) => {
                nodes += s.nodes;
                break;
            }
        }
        k += 1;
    }
    CrResult {
        graph_id,
        exact: lower == upper,
        lower,
        lower_provenance,
        upper,
        certificate,
        drawing,
        elapsed: start.elapsed(),
        nodes,
        seed: opts.seed,
    }
}
