//! Certified bracket for one order-4 cube within a time budget.
//!
//! `cargo run --release --example order_four_bracket -- CQ4 10m`
use cubecross::cube::generate;
use cubecross::io::parse_duration;
use cubecross::solver::{crossing_number_with, Budget, CrOptions};

fn main() -> cubecross::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "CQ4".into());
    let time = parse_duration(&args.next().unwrap_or_else(|| "30s".into()))?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let g = generate(spec.parse()?)?;
    let r = crossing_number_with(
        &g,
        &Budget::with_time(time).threads(threads),
        CrOptions {
            effort: 256,
            ..CrOptions::default()
        },
    );
    println!(
        "{spec}: {} <= cr <= {} ({}), lower bound from {}, {} nodes in {:?}",
        r.lower,
        r.upper,
        if r.exact { "exact" } else { "open" },
        r.lower_provenance,
        r.nodes,
        r.elapsed
    );
    Ok(())
}
