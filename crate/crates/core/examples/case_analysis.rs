// The finite searches behind the (4,1) classes.

use latpoly::classify::proofs::{enumerate_nonsymmetric41_candidates, enumerate_symmetric41, q5_linear_image, symmetric_configuration};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for c in enumerate_nonsymmetric41_candidates() {
        let v = c.vector.map(|v| format!("{v:?}")).unwrap_or_else(|| "-".into());
        println!("(c,d)={:?} (a,b)={:?} (p,q)={:?} {v}", c.cd, c.ab, c.pq);
    }
    let s = enumerate_symmetric41(20)?;
    println!("symmetric: admissible (p,q) {:?}", s.admissible);
    for r in &s.classes {
        println!("  {} width {}", r.vector, r.width);
    }
    println!("listed map sends p=2 onto p=3: {}", q5_linear_image()?.same_set(&symmetric_configuration(3, 5)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
