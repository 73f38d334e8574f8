macro_rules! example_test {
    ($name:ident, $file:literal) => {
        #[test]
        fn $name() {
            #[allow(dead_code)]
            mod example {
                include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
            }
            example::run_example().expect($file);
        }
    };
}

example_test!(recognize_runs, "recognize.rs");
example_test!(graph6_io_runs, "graph6_io.rs");
example_test!(build_cct_runs, "build_cct.rs");
example_test!(two_one_runs, "two_one.rs");
example_test!(enumerate_runs, "enumerate.rs");
example_test!(mine_obstructions_runs, "mine_obstructions.rs");
example_test!(patterns_runs, "patterns.rs");
example_test!(neighborhood_laws_runs, "neighborhood_laws.rs");
example_test!(canonical_forms_runs, "canonical_forms.rs");
