// Volume vectors, the five-point vector and signature, dps, Pick.

use latpoly::config::PointConfiguration;
use latpoly::invariants::{five_point_vector, is_dps, pick_check, volume_vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pyramid = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])?;
    let v = five_point_vector(&pyramid)?;
    println!("square pyramid: vector {v}, signature {:?}, dps {}", v.signature(), is_dps(&pyramid)?);
    println!("all 4-point volumes: {:?}", volume_vector(&pyramid)?.entries);

    let wide = PointConfiguration::from_arrays(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [1, 2, 3]])?;
    let v = five_point_vector(&wide)?;
    assert_eq!(v.entries(), [-9, 3, 3, 3, 0]);
    println!("(3,1) of width two: {v}, dps {}", is_dps(&wide)?);

    let square = PointConfiguration::from_arrays(&[[0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0]])?;
    let pick = pick_check(&square)?;
    println!("2x2 square: volume {} = {} + 2*{} - 2 ({})", pick.volume, pick.boundary, pick.interior, pick.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
