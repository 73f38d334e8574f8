// Mine the minimal distance-hereditary graphs without a cct and classify
// them.

use dh_cct::dh::enumerate_dh;
use dh_cct::miner::{classify_family, mine_catalog, verify_catalog, DEFAULT_SEARCH_BOUND};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = enumerate_dh(DEFAULT_SEARCH_BOUND)?;
    let family = mine_catalog(&catalog, DEFAULT_SEARCH_BOUND, |_| true);
    print!("{}", family.to_graph6_file());
    let report = classify_family(&family, &catalog)?;
    println!("{}", report.summary());
    let summary = verify_catalog(&catalog, 8, &family)?;
    println!("{summary}");
    assert_eq!(summary.mismatches(), 0);
    Ok(())
}

fn main() {
    run_example().expect("mine_obstructions example");
}
