// The width-two census from the structured search, and the atlas.

use latpoly::classify::atlas::{atlas_json, build_atlas};
use latpoly::classify::census::{enumerate_size5_width_ge2, structured_census, DEFAULT_Q_MAX};


pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let classes = structured_census(DEFAULT_Q_MAX)?;
    println!("structured search up to q = {DEFAULT_Q_MAX}: {} classes", classes.len());
    for r in enumerate_size5_width_ge2()? {
        println!("{} {:?}", r.family, r.representative.to_arrays());
    }
    let atlas = build_atlas(5)?;
    println!("atlas: {} records, max width {}, {} bytes of JSON", atlas.records.len(), atlas.max_width, atlas_json(&atlas).len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
