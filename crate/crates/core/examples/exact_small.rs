//! Exact crossing numbers of the order-3 cubes and a few classic graphs,
//! each with a checked certificate.
use cubecross::cube::generate;
use cubecross::solver::{crossing_number, verify_certificate, Budget};
use cubecross::Graph;
use std::time::Duration;

fn main() -> cubecross::Result<()> {
    let mut graphs = Vec::new();
    for s in ["Q3", "CQ3", "LTQ3", "0-MQ3", "1-MQ3"] {
        graphs.push((s.to_string(), generate(s.parse()?)?));
    }
    graphs.push(("K5".into(), Graph::complete(5)));
    graphs.push(("K6".into(), Graph::complete(6)));
    graphs.push(("K3,4".into(), Graph::complete_bipartite(3, 4)));
    graphs.push(("Petersen".into(), Graph::petersen()));
    let budget = Budget::with_time(Duration::from_secs(60));
    for (name, g) in graphs {
        let r = crossing_number(&g, &budget);
        println!(
            "{name:>8}: cr {}{} (lower bound {}, certificate ok {}, {} nodes, {:?})",
            r.upper,
            if r.exact { "" } else { "?" },
            r.lower_provenance,
            verify_certificate(&g, &r.certificate),
            r.nodes,
            r.elapsed
        );
    }
    Ok(())
}
