// Classifying size-5 polytopes, including disguised copies of table rows.

use latpoly::affine::{apply_map, Matrix3, UnimodularAffineMap};
use latpoly::classify::table::width_two_rows;
use latpoly::classify::{classify_size5, Classification};
use latpoly::config::PointConfiguration;
use latpoly::point::pt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let disguise = UnimodularAffineMap::new(Matrix3([[1, 2, 0], [0, 1, -3], [1, 2, 1]]), pt(-5, 2, 9))?;
    for row in width_two_rows() {
        let hidden = apply_map(&disguise, &row.representative)?;
        let r = classify_size5(&hidden)?.into_record().expect("size five");
        assert_eq!(r.family, row.family);
        assert!(apply_map(&r.witness, &hidden)?.same_set(&row.representative));
        println!("{:<22} width {} vector {}", r.family.to_string(), r.width, r.vector);
    }
    let w21 = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [-1, 0, 0], [7, 3, 1]])?;
    println!("(7,3,1) apex: {}", classify_size5(&w21)?.record().map(|r| r.family.to_string()).unwrap_or_default());
    let big = PointConfiguration::from_arrays(&[[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]])?;
    if let Classification::Unsized5 { size } = classify_size5(&big)? {
        println!("2·unit tetrahedron has {size} lattice points");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
