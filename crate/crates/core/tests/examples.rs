//! Runs every example as a test.

#[path = "../examples/cli_documents.rs"]
mod cli_documents;
#[path = "../examples/dual_cone.rs"]
mod dual_cone;
#[path = "../examples/escape_and_domain.rs"]
mod escape_and_domain;
#[path = "../examples/extremal_function.rs"]
mod extremal_function;
#[path = "../examples/hull_membership.rs"]
mod hull_membership;
#[path = "../examples/lattice_distance.rs"]
mod lattice_distance;
#[path = "../examples/lattice_maps.rs"]
mod lattice_maps;
#[path = "../examples/polytope_basics.rs"]
mod polytope_basics;
#[path = "../examples/runge_truncation.rs"]
mod runge_truncation;

#[test]
fn cli_documents_runs() {
    cli_documents::run().unwrap();
}

#[test]
fn dual_cone_runs() {
    dual_cone::run().unwrap();
}

#[test]
fn escape_and_domain_runs() {
    escape_and_domain::run().unwrap();
}

#[test]
fn extremal_function_runs() {
    extremal_function::run().unwrap();
}

#[test]
fn hull_membership_runs() {
    hull_membership::run().unwrap();
}

#[test]
fn lattice_distance_runs() {
    lattice_distance::run().unwrap();
}

#[test]
fn lattice_maps_runs() {
    lattice_maps::run().unwrap();
}

#[test]
fn polytope_basics_runs() {
    polytope_basics::run().unwrap();
}

#[test]
fn runge_truncation_runs() {
    runge_truncation::run().unwrap();
}
