//! Generates every cube family up to order 5 and groups the order-3 and
//! order-4 graphs into isomorphism classes.
use cubecross::cube::{generate, CubeSpec, Family};
use cubecross::graph::is_isomorphic;

const FAMILIES: [(Family, u8); 5] = [
    (Family::Q, 0),
    (Family::CQ, 0),
    (Family::LTQ, 0),
    (Family::MQ, 0),
    (Family::MQ, 1),
];

fn main() -> cubecross::Result<()> {
    for n in 1..=5 {
        for (fam, variant) in FAMILIES {
            let Ok(spec) = CubeSpec::new(fam, n, variant) else {
                continue;
            };
            let g = generate(spec)?;
            println!(
                "{spec:>6}: {:>2} vertices, {:>2} edges, connected {}",
                g.n(),
                g.m(),
                g.is_connected()
            );
        }
    }
    for n in [3, 4] {
        let graphs: Vec<_> = FAMILIES
            .iter()
            .map(|&(f, v)| CubeSpec::new(f, n, v).and_then(|s| Ok((s, generate(s)?))))
            .collect::<cubecross::Result<_>>()?;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..graphs.len() {
            match classes
                .iter_mut()
                .find(|c| is_isomorphic(&graphs[c[0]].1, &graphs[i].1).is_some())
            {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        let names: Vec<String> = classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| graphs[i].0.to_string())
                    .collect::<Vec<_>>()
                    .join(" ~ ")
            })
            .collect();
        println!("order {n} classes: {}", names.join(" | "));
    }
    Ok(())
}
