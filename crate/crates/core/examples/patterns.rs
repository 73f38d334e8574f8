// Named patterns, induced-subgraph search and the split, threshold and
// cograph tests.

use dh_cct::patterns::{
    contains_induced, gem, is_cograph, is_split, is_threshold, split_partition, NamedPattern,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["house", "gem", "domino", "C5", "P4", "2K3"] {
        let p: NamedPattern = name.parse()?;
        let g = p.graph();
        println!(
            "{p}: {} split={} threshold={} cograph={}",
            dh_cct::graph6::emit_string(&g),
            is_split(&g),
            is_threshold(&g),
            is_cograph(&g)
        );
    }
    let p4: NamedPattern = "P4".parse()?;
    let embedding = contains_induced(&gem(), &p4.graph()).ok_or("the gem contains a P4")?;
    println!("P4 in the gem at {embedding:?}");
    if let Some(part) = split_partition(&gem()) {
        println!(
            "gem split partition: clique {{{}}} stable {{{}}}",
            part.clique, part.stable
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("patterns example");
}
