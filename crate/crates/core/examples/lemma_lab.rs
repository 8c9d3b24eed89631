//! Runs every applicable lemma checker on CQ3 and LTQ4, then a negative
//! control on K4.
use cubecross::cube::generate;
use cubecross::lemmas::{check, LemmaId};
use cubecross::Graph;

fn main() -> cubecross::Result<()> {
    for spec in ["CQ3", "LTQ4"] {
        let g = generate(spec.parse()?)?;
        for id in LemmaId::ALL {
            match check(id, &g) {
                Ok(mut r) => {
                    r.target = spec.into();
                    println!("{r}");
                }
                Err(e) => println!("{:<7} not applicable to {spec}: {e}", id.tag()),
            }
        }
    }
    let r = check(LemmaId::CutBounds, &Graph::complete(4))?;
    println!("K4 control: {r}");
    Ok(())
}
