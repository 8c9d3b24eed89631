//! Writes a graph file, a result record and a drawing file for CQ3 into
//! the temp dir, then reads them back and verifies them.
use cubecross::cube::generate;
use cubecross::io::{read_graph_file, write_graph_file, DrawingFile, ResultRecord};
use cubecross::solver::{crossing_number, Budget};

fn main() -> cubecross::Result<()> {
    let dir = std::env::temp_dir().join("cubecross-formats");
    std::fs::create_dir_all(&dir)?;
    let g = generate("CQ3".parse()?)?;
    write_graph_file(dir.join("CQ3.txt"), &g)?;
    let g = read_graph_file(dir.join("CQ3.txt"))?;

    let r = crossing_number(&g, &Budget::default());
    let rec = ResultRecord::from_result("CQ3", &g, &r);
    std::fs::write(dir.join("CQ3.json"), rec.to_json())?;
    let back = ResultRecord::from_json(&std::fs::read_to_string(dir.join("CQ3.json"))?)?;
    back.verify(Some(&g))?;
    println!(
        "record: cr {} exact {}, certificate verified",
        back.upper, back.exact
    );

    if let Some(d) = &r.drawing {
        let f = DrawingFile::from_drawing(d, Some(r.upper));
        std::fs::write(dir.join("CQ3.drawing.json"), f.to_json())?;
        let back = DrawingFile::from_json(&std::fs::read_to_string(dir.join("CQ3.drawing.json"))?)?;
        println!("drawing: good with {} crossings", back.verify(Some(&g))?);
    }
    println!("files in {}", dir.display());
    Ok(())
}
