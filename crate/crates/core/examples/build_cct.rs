// Construct a clique cycle-transversal by replaying a pruning sequence and
// compare the result with the maximal-clique oracle.

use dh_cct::cct::{build_cct, find_cct_oracle, is_cct, minimize_witness};
use dh_cct::graph6;
use dh_cct::patterns::{complete, copies};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // two triangles joined by the edge 0-3, and a third triangle on that edge
    let g = dh_cct::Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (3, 4),
            (3, 5),
            (4, 5),
            (6, 0),
            (6, 3),
        ],
    )?;
    let report = build_cct(&g)?;
    if let Some(replay) = &report.replay {
        println!("pruning sequence:\n{}", replay.sequence);
    }
    for entry in report.trace() {
        println!("  {entry}");
    }
    let witness = report.witness.ok_or("expected a cct")?;
    assert!(is_cct(&g, witness));
    println!(
        "builder {{{witness}}}, minimized {{{}}}",
        minimize_witness(&g, witness)
    );
    println!("oracle {:?}", find_cct_oracle(&g));

    let two_triangles = copies(&complete(3), 2);
    let report = build_cct(&two_triangles)?;
    assert_eq!(report.witness, None);
    println!(
        "{}: no cct, {} cyclic components",
        graph6::emit_string(&two_triangles),
        report.cyclic_components.len()
    );
    Ok(())
}

fn main() {
    run_example().expect("build_cct example");
}
