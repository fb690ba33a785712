// Lattice width with a witness functional, and width-one splits.

use latpoly::config::PointConfiguration;
use latpoly::width::{lattice_width, width_one_split};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: [(&str, &[[i64; 3]]); 3] = [
        ("unit tetrahedron", &[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        ("(-4,1,1,1,1) class", &[[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 1, 1], [-2, -1, -2]]),
        ("cube [0,2]^3", &[[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2], [2, 2, 0], [2, 0, 2], [0, 2, 2], [2, 2, 2]]),
    ];
    for (name, pts) in inputs {
        let cfg = PointConfiguration::from_arrays(pts)?;
        let w = lattice_width(&cfg)?;
        println!("{name}: width {} via {}", w.width, w.witness);
    }
    let t = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1]])?;
    if let Some((f, lo, hi)) = width_one_split(&t)? {
        println!("T(2,5) splits along {f}: {} + {} points", lo.len(), hi.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
