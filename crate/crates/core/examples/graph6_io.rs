// Read and write graph6, including files with `#` comment lines.

use dh_cct::graph6::{self, Line};
use dh_cct::patterns::{complete, path};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    assert_eq!(graph6::emit_string(&complete(2)), "A_");
    assert_eq!(graph6::emit_string(&complete(3)), "Bw");

    let p4 = path(4);
    let text = format!(
        "# a path and a triangle\n{}\nBw\n",
        graph6::emit_string(&p4)
    );
    for (line, item) in graph6::parse_lines(&text).map_err(|(l, e)| format!("line {l}: {e}"))? {
        match item {
            Line::Comment(c) => println!("{line}: comment {c:?}"),
            Line::Graph(g) => println!("{line}: {g:?}"),
        }
    }

    match graph6::parse_str("Bx") {
        Err(e) => println!("Bx rejected: {e}"),
        Ok(_) => return Err("Bx has nonzero padding".into()),
    }
    Ok(())
}

fn main() {
    run_example().expect("graph6 example");
}
