// Cliques meeting every odd cycle, the weaker property that a cct implies.

use dh_cct::cct::{find_cct_oracle, is_two_one};
use dh_cct::patterns::{complete, copies, cycle};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("2K3", copies(&complete(3), 2)),
    ] {
        let odd = is_two_one(&g);
        let all = find_cct_oracle(&g);
        println!("{name}: odd-cycle clique {odd:?}, cct {all:?}");
        assert!(all.is_none() || odd.is_some());
    }
    Ok(())
}

fn main() {
    run_example().expect("two_one example");
}
