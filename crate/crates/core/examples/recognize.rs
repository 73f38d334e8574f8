// Recognize distance-hereditary graphs: a pruning sequence for members, an
// induced house, gem, domino or hole for everything else.

use dh_cct::dh::{hhdg_witness, pruning_sequence};
use dh_cct::patterns::{cycle, gem, house};
use dh_cct::{graph6, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // a diamond with a pendant at one of its degree-3 vertices
    let g = graph6::parse_str("D~?")?;
    let g = g.delete_vertex(4).add_pendant(0)?;
    let sequence = pruning_sequence(&g)?.ok_or("expected a distance-hereditary graph")?;
    println!(
        "{} is distance-hereditary:\n{sequence}",
        graph6::emit_string(&g)
    );
    assert_eq!(sequence.reconstruct(), g);

    let others: [(&str, Graph); 3] = [("house", house()), ("gem", gem()), ("C5", cycle(5))];
    for (name, h) in others {
        assert!(pruning_sequence(&h)?.is_none());
        let witness = hhdg_witness(&h).ok_or("expected a forbidden subgraph")?;
        println!("{name}: {witness}");
    }
    Ok(())
}

fn main() {
    run_example().expect("recognize example");
}
