// White's normal form, the congruence test, and the lattice Λ(p,q).

use latpoly::empty_tetra::{classify_empty, fundamental_rectangle_check, is_empty_standard, verify_change_of_coordinates};
use latpoly::point::pt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = [pt(3, 1, 0), pt(4, 1, 0), pt(3, 1, 1), pt(10, 12, 1)];
    let (class, m) = classify_empty(&v)?;
    println!("{class} via {m}");

    let q = 7;
    for a in 0..q {
        let row: String = (0..q).map(|b| if is_empty_standard(a, b, q) { '#' } else { '.' }).collect();
        println!("a={a} {row}");
    }
    for p in [1, 2, 3] {
        let (t2, t1) = fundamental_rectangle_check(p, q)?;
        println!("T({p},{q}): Λ basis ok {}, in t2 {t2}, in t1 {t1}", verify_change_of_coordinates(p, q)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
