//! File formats: a line-based graph format, JSON drawings with exact
//! rational coordinates, and JSON result records carrying crossing
//! certificates.
//!
//! Graph files look like
//!
//! ```text
//! # comment
//! p 4 3
//! l 0 00
//! e 0 1
//! ```
//!
//! with `p <n> <m>` first, optional `l <v> <bits>` label lines and exactly
//! `m` edge lines `e <u> <v>` (0-based). Serialization is canonical: labels
//! in vertex order, then edges sorted.

use crate::error::{Error, Result};
use crate::geometry::{crossings, validate_good, Point, PolylineDrawing, Rational};
use crate::graph::Graph;
use crate::solver::{verify_certificate, CrResult, Crossing, Planarization};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

/// Version string written into result records.
pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Environment variable holding the default time budget of `cr`.
pub const BUDGET_ENV: &str = "CUBECROSS_BUDGET";

/// Durations such as `90`, `90s`, `15m`, `2h` (bare numbers are seconds).
pub fn parse_duration(s: &str) -> Result<Duration> {
    let s = s.trim();
    let (num, unit) = match s.find(|c: char| !c.is_ascii_digit()) {
        Some(i) => s.split_at(i),
        None => (s, "s"),
    };
    let v: u64 = num
        .parse()
        .map_err(|_| perr(0, format!("bad duration {s:?}")))?;
    let secs = match unit {
        "s" => v,
        "m" => v * 60,
        "h" => v * 3600,
        _ => return Err(perr(0, format!("bad duration unit in {s:?}"))),
    };
    Ok(Duration::from_secs(secs))
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the line-based graph format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| perr(line_no, format!("bad number {s:?}")))
        };
        match (tok[0], header) {
            ("p", None) if tok.len() == 3 => {
                let n = num(tok[1])?;
                header = Some((n, num(tok[2])?));
                labels = vec![None; n];
            }
            ("p", _) => return Err(perr(line_no, "misplaced or malformed header")),
            (_, None) => return Err(perr(line_no, "expected header `p <n> <m>`")),
            ("l", Some((n, _))) if tok.len() == 3 => {
                let v = num(tok[1])?;
                if v >= n {
                    return Err(perr(line_no, format!("label for vertex {v} out of range")));
                }
                if labels[v].replace(tok[2].to_string()).is_some() {
                    return Err(perr(line_no, format!("second label for vertex {v}")));
                }
            }
            ("e", Some(_)) if tok.len() == 3 => edges.push((num(tok[1])?, num(tok[2])?)),
            _ => return Err(perr(line_no, format!("unrecognised line {line:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing header"))?;
    if edges.len() != m {
        return Err(perr(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::new(n, edges)?;
    if labels.iter().all(Option::is_none) {
        return Ok(g);
    }
    let labels: Option<Vec<String>> = labels.into_iter().collect();
    let labels = labels.ok_or_else(|| perr(0, "labels given for only some vertices"))?;
    g.with_labels(labels)
}

/// Canonical text form of `g`.
pub fn graph_to_string(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p {} {}", g.n(), g.m());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(s, "l {v} {l}");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, graph_to_string(g))?;
    Ok(())
}

/// Graph embedded in JSON files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().to_vec(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::new(self.n, self.edges.iter().copied())?;
        if g.edges() != self.edges.as_slice() {
            return Err(Error::Precondition(
                "edge list is not in canonical order".into(),
            ));
        }
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }
}

/// `"num/den"`, always with a denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"num/den"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad rational {s:?}"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

type PointJson = (String, String);

fn point_json(p: &Point) -> PointJson {
    (rational_to_string(&p.x), rational_to_string(&p.y))
}

fn parse_point(p: &PointJson) -> Result<Point> {
    Ok(Point::new(parse_rational(&p.0)?, parse_rational(&p.1)?))
}

/// JSON form of a polyline drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFile {
    pub graph: GraphJson,
    pub positions: Vec<PointJson>,
    pub bends: Vec<Vec<PointJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_crossings: Option<usize>,
}

impl DrawingFile {
    pub fn from_drawing(d: &PolylineDrawing, claimed_crossings: Option<usize>) -> Self {
        DrawingFile {
            graph: GraphJson::from_graph(d.graph()),
            positions: d.positions().iter().map(point_json).collect(),
            bends: (0..d.graph().m())
                .map(|e| d.bends(e).iter().map(point_json).collect())
                .collect(),
            claimed_crossings,
        }
    }

    pub fn to_drawing(&self) -> Result<PolylineDrawing> {
        let pos = self
            .positions
            .iter()
            .map(parse_point)
            .collect::<Result<Vec<_>>>()?;
        let bends = self
            .bends
            .iter()
            .map(|b| b.iter().map(parse_point).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolylineDrawing::new(self.graph.to_graph()?, pos, bends)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("drawing serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| perr(e.line(), e.to_string()))
    }

    /// Good, consistent with `g` when given, and with the claimed crossing
    /// count when present. Returns the counted crossings.
    pub fn verify(&self, g: Option<&Graph>) -> Result<usize> {
        let d = self.to_drawing()?;
        if let Some(g) = g {
            if g.n() != d.graph().n() || g.edges() != d.graph().edges() {
                return Err(Error::Precondition(
                    "drawing is of a different graph".into(),
                ));
            }
        }
        let report = validate_good(&d);
        if !report.is_good() {
            return Err(Error::NotGood(format!("{report:?}")));
        }
        let (_, count) = crossings(&d)?;
        if let Some(c) = self.claimed_crossings {
            if c != count {
                return Err(Error::Precondition(format!(
                    "claimed {c} crossings, counted {count}"
                )));
            }
        }
        Ok(count)
    }
}

/// JSON record of a crossing number computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub spec: String,
    pub graph: GraphJson,
    pub lower: usize,
    pub lower_provenance: String,
    pub upper: usize,
    pub exact: bool,
    pub certificate: Vec<Crossing>,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub nodes: u64,
    pub tool_version: String,
}

impl ResultRecord {
    pub fn from_result(spec: &str, g: &Graph, r: &CrResult) -> Self {
        ResultRecord {
            spec: spec.to_string(),
            graph: GraphJson::from_graph(g),
            lower: r.lower,
            lower_provenance: r.lower_provenance.to_string(),
            upper: r.upper,
            exact: r.exact,
            certificate: r.certificate.crossings(),
            seed: r.seed,
            elapsed_ms: r.elapsed.as_millis(),
            nodes: r.nodes,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn certificate(&self) -> Result<Planarization> {
        Planarization::from_crossings(self.graph.to_graph()?, &self.certificate)
    }

    /// Certificate is valid for `g` (or the embedded graph) and realizes
    /// the recorded upper bound.
    pub fn verify(&self, g: Option<&Graph>) -> Result<()> {
        let own = self.graph.to_graph()?;
        let g = g.unwrap_or(&own);
        if g.n() != own.n() || g.edges() != own.edges() {
            return Err(Error::Precondition("record is of a different graph".into()));
        }
        let p = self.certificate()?;
        if !verify_certificate(g, &p) {
            return Err(Error::Precondition("certificate does not verify".into()));
        }
        if p.crossing_count() != self.upper {
            return Err(Error::Precondition(format!(
                "certificate has {} crossings, record claims {}",
                p.crossing_count(),
                self.upper
            )));
        }
        if self.lower > self.upper || (self.exact && self.lower != self.upper) {
            return Err(Error::Precondition("inconsistent bounds".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| perr(e.line(), e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{generate, CubeSpec};
    use crate::solver::{crossing_number, realize_drawing, Budget};

    #[test]
    fn graph_round_trip() {
        let g = generate(CubeSpec::cq(3).unwrap()).unwrap();
        let text = graph_to_string(&g);
        let h = parse_graph(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(graph_to_string(&h), text);
    }

    #[test]
    fn graph_parse_is_canonicalising() {
        let g = parse_graph("# triangle\np 3 3\ne 2 1\ne 0 2 # last\n\ne 1 0\n").unwrap();
        assert_eq!(graph_to_string(&g), "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn graph_parse_errors() {
        assert!(matches!(
            parse_graph("e 0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_graph("p 3 2\ne 0 1\n").is_err());
        assert!(matches!(
            parse_graph("p 2 1\ne 0 2\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(parse_graph("p 2 1\nl 0 0\ne 0 1\n").is_err());
        assert!(parse_graph("p 2 1\nx 0 1\n").is_err());
    }

    #[test]
    fn durations() {
        assert_eq!(parse_duration("90").unwrap(), Duration::from_secs(90));
        assert_eq!(parse_duration("15m").unwrap(), Duration::from_secs(900));
        assert_eq!(parse_duration("2h").unwrap(), Duration::from_secs(7200));
        assert!(parse_duration("5d").is_err());
        assert!(parse_duration("s").is_err());
    }

    #[test]
    fn rationals() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_to_string(&parse_rational("5").unwrap()), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }

    #[test]
    fn drawing_round_trip_and_verify() {
        let g = Graph::complete(5);
        let r = crossing_number(&g, &Budget::default());
        let d = realize_drawing(&r.certificate).unwrap();
        let file = DrawingFile::from_drawing(&d, Some(1));
        let back = DrawingFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_drawing().unwrap(), d);
        assert_eq!(back.verify(Some(&g)).unwrap(), 1);
        let wrong = DrawingFile {
            claimed_crossings: Some(2),
            ..back
        };
        assert!(wrong.verify(Some(&g)).is_err());
    }

    #[test]
    fn record_round_trip() {
        let g = generate(CubeSpec::ltq(3).unwrap()).unwrap();
        let r = crossing_number(&g, &Budget::default());
        let rec = ResultRecord::from_result("LTQ3", &g, &r);
        let back = ResultRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        back.verify(Some(&g)).unwrap();
        let mut bad = back.clone();
        bad.upper = 0;
        assert!(bad.verify(None).is_err());
    }
}
