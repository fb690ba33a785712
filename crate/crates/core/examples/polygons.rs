// Lattice polygons with few points, and the minimal ones among them.

use latpoly::minimality::minimal_polygons;
use latpoly::plane::enumerate_polygons;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let classes = enumerate_polygons(6)?;
    for n in 3..=6 {
        println!("{n} points: {} classes", classes.iter().filter(|c| c.size == n).count());
    }
    for (c, v) in minimal_polygons(6)? {
        println!("{v:<14} {:?}", c.points);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
