// Enumerate distance-hereditary graphs up to isomorphism.

use dh_cct::dh::enumerate_dh;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = enumerate_dh(8)?;
    for n in 1..=8 {
        let connected = catalog
            .order(n)
            .iter()
            .filter(|c| c.graph.components(c.graph.vertices()).len() == 1)
            .count();
        println!(
            "n={n}: {} classes, {connected} connected",
            catalog.order(n).len()
        );
    }
    let sample = &catalog.order(4)[0];
    println!(
        "first class on 4 vertices {} built by\n{}",
        sample.canonical, sample.sequence
    );
    assert_eq!(sample.sequence.replay(), sample.graph);
    Ok(())
}

fn main() {
    run_example().expect("enumerate example");
}
