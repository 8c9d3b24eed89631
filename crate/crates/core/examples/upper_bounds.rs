//! Heuristic drawings of the order-4 cubes. Pass a directory to also get
//! one SVG per graph.
use cubecross::cube::generate;
use cubecross::geometry::{crossings, export_svg, validate_good};
use cubecross::solver::{cr_upper_bound, euler_girth_bound};
use std::time::Instant;

fn main() -> cubecross::Result<()> {
    let out = std::env::args().nth(1).map(std::path::PathBuf::from);
    for s in ["Q4", "CQ4", "LTQ4", "0-MQ4", "1-MQ4"] {
        let g = generate(s.parse()?)?;
        let t = Instant::now();
        let u = cr_upper_bound(&g, 256)?;
        println!(
            "{s:>6}: {} crossings (girth bound {}), drawing good {} with {} crossings, {:?}",
            u.crossings,
            euler_girth_bound(&g)?,
            validate_good(&u.drawing).is_good(),
            crossings(&u.drawing)?.1,
            t.elapsed()
        );
        if let Some(dir) = &out {
            export_svg(&u.drawing, dir.join(format!("{s}.svg")), true)?;
        }
    }
    Ok(())
}
