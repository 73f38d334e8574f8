// Canonical forms identify isomorphic graphs regardless of labelling.

use dh_cct::census::all_graphs;
use dh_cct::patterns::cycle;
use dh_cct::{canonical_form, graph6};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = cycle(5).add_pendant(0)?;
    let shuffled = g.permute(&[3, 5, 0, 1, 4, 2]);
    println!(
        "{} and {}",
        graph6::emit_string(&g),
        graph6::emit_string(&shuffled)
    );
    assert_eq!(canonical_form(&g), canonical_form(&shuffled));
    println!("canonical {}", canonical_form(&g));
    let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
    println!("graphs up to isomorphism on 0..=6 vertices: {counts:?}");
    Ok(())
}

fn main() {
    run_example().expect("canonical_forms example");
}
