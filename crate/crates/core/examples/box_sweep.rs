// Brute force over 5-point subsets of a box. `cargo run --release
// --example box_sweep -- 4` reproduces the full cross-check.

use latpoly::classify::sweep::box_sweep;

fn report(side: i64) -> Result<(), Box<dyn std::error::Error>> {
    let r = box_sweep(side)?;
    println!("[0,{side}]^3: {} configurations", r.configurations);
    for (s, n) in &r.signature_histogram {
        println!("  signature ({},{}): {n}", s.pos, s.neg);
    }
    println!("  widths {:?}", r.width_histogram);
    for w in &r.wide {
        println!("  {} seen {} times, h {:?}", w.vector, w.occurrences, w.h_values);
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    report(2)
}

#[allow(dead_code)]
fn main() {
    let side = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    report(side).unwrap();
}
