// Distance layers around a vertex and the two neighborhood laws that hold in
// distance-hereditary graphs.

use dh_cct::dh::check_neighborhood_laws;
use dh_cct::patterns::{cycle, domino};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = cycle(4).add_pendant(2)?;
    let d = c4.distance_decomposition(0)?;
    println!(
        "layers of {c4:?} around 0: N={{{}}} N2={{{}}} far={{{}}}",
        d.level1, d.level2, d.remainder
    );
    assert!(check_neighborhood_laws(&c4, 0)?.is_empty());

    for v in check_neighborhood_laws(&domino(), 1)? {
        println!("domino rooted at b: {v}");
    }
    Ok(())
}

fn main() {
    run_example().expect("neighborhood_laws example");
}
