// Reading and writing point lists.

use latpoly::document::{Format, PolytopeDocument};
use latpoly::width::lattice_width;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = "# label: W1-(3,1)\n0 0 0\n1 0 0\n0 1 0\n-1 -1 0   # opposite corner\n0 0 1\n";
    let doc = PolytopeDocument::parse(text)?;
    let json = doc.render(Format::Json);
    println!("{json}");
    assert_eq!(PolytopeDocument::parse(&json)?, doc);
    print!("{}", doc.render(Format::Text));
    println!("width {}", lattice_width(&doc.configuration()?)?.width);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
