// Vertex deletion, Vert*, and the projection of a large minimal polytope.

use latpoly::minimality::{lemma_tetrahedron, minimality_report, projection_dichotomy_check, ProjectionReport};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for k in [2, 5] {
        for apex in [false, true] {
            let r = minimality_report(&lemma_tetrahedron(k, apex)?)?;
            println!("k={k} apex={apex}: {} ({} of {} vertices in Vert*)", r.verdict, r.vert_star.len(), r.vertices.len());
        }
    }
    match projection_dichotomy_check(&lemma_tetrahedron(12, false)?)? {
        ProjectionReport::Projected(p) => {
            println!("k=12 projects along {} onto {:?}, unique lifts {}", p.direction, p.polygon, p.unique_lifts)
        }
        other => println!("{other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
