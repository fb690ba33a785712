// Deciding unimodular equivalence and reading off the map.

use latpoly::affine::{apply_map, Matrix3, UnimodularAffineMap};
use latpoly::config::PointConfiguration;
use latpoly::equivalence::z_equivalent;
use latpoly::point::pt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 3, 1], [-1, -2, -1]])?;
    let m = UnimodularAffineMap::new(Matrix3([[2, 1, 0], [1, 1, 3], [0, 0, -1]]), pt(4, -7, 2))?;
    let q = apply_map(&m, &p)?;
    let found = z_equivalent(&p, &q)?.expect("images are equivalent");
    println!("found {found}");
    assert!(apply_map(&found, &p)?.same_set(&q));

    let t25 = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1]])?;
    let t35 = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [3, 5, 1]])?;
    let t15 = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 5, 1]])?;
    println!("T(2,5) ~ T(3,5): {}", z_equivalent(&t25, &t35)?.is_some());
    println!("T(2,5) ~ T(1,5): {}", z_equivalent(&t25, &t15)?.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
