mod factorization_basics {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/factorization_basics.rs"
    ));
}

mod main_theorem {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/main_theorem.rs"
    ));
}

mod nonfaithful {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/nonfaithful.rs"
    ));
}

mod alpha_scan {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/alpha_scan.rs"
    ));
}

mod resolutions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/resolutions.rs"
    ));
}

mod schulz_complex {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/schulz_complex.rs"
    ));
}

mod triangles {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/triangles.rs"
    ));
}

#[test]
fn factorization_basics_example_runs() {
    factorization_basics::run_example().expect("factorization basics example should run");
}

#[test]
fn main_theorem_example_runs() {
    main_theorem::run_example().expect("main theorem example should run");
}

#[test]
fn nonfaithful_example_runs() {
    nonfaithful::run_example().expect("nonfaithful example should run");
}

#[test]
fn alpha_scan_example_runs() {
    alpha_scan::run_example().expect("alpha scan example should run");
}

#[test]
fn resolutions_example_runs() {
    resolutions::run_example().expect("resolutions example should run");
}

#[test]
fn schulz_complex_example_runs() {
    schulz_complex::run_example().expect("schulz complex example should run");
}

#[test]
fn triangles_example_runs() {
    triangles::run_example().expect("triangles example should run");
}
