//! Exact-coordinate drawing of K5 with a bend: crossings, goodness, faces,
//! crossing counts per edge class, and an SVG written to the temp dir.
use cubecross::geometry::PolylineDrawing;
use cubecross::geometry::{
    arrangement, crossings, cycle_parity_check, nu_partition, svg_string, validate_good, Point,
};
use cubecross::Graph;

fn main() -> cubecross::Result<()> {
    let g = Graph::complete(5);
    let pos = vec![
        Point::int(0, 10),
        Point::int(10, 3),
        Point::int(6, -8),
        Point::int(-6, -8),
        Point::int(-10, 3),
    ];
    let mut bends = vec![Vec::new(); g.m()];
    // route 0-2 around the outside instead of through the pentagon
    let e02 = g.edge_index(0, 2).expect("edge");
    bends[e02] = vec![Point::int(20, 12), Point::frac(25, 2, -10, 1)];
    let d = PolylineDrawing::new(g.clone(), pos, bends)?;

    let (recs, nu) = crossings(&d)?;
    println!("crossings: {nu}");
    for r in &recs {
        println!("  edges {:?} at {:?}", r.edges, r.point);
    }
    println!("good: {}", validate_good(&d).is_good());

    let a = arrangement(&d)?;
    println!("faces: {}, euler holds: {}", a.faces.len(), a.euler_holds());
    for f in &a.faces {
        println!("  face {} bounded {} on {:?}", f.id, f.bounded, f.v_on);
    }

    let (spokes, rim): (Vec<usize>, Vec<usize>) = (0..g.m()).partition(|&e| g.edges()[e].0 == 0);
    let m = nu_partition(&d, &[spokes, rim])?;
    println!(
        "nu(spokes) {} nu(rim) {} nu(spokes, rim) {}",
        m.within[0], m.within[1], m.between[0][1]
    );
    println!("cycle parity: {}", cycle_parity_check(&d)?.pass());

    let path = std::env::temp_dir().join("k5.svg");
    std::fs::write(&path, svg_string(&d, true))?;
    println!("svg: {}", path.display());
    Ok(())
}
