//! Driving the command layer from code: the same documents the `cone-hull`
//! binary reads, rendered as JSON or CSV.

use clap::Parser;
use cone_hull::cli::{run as run_cli, ExperimentConfig};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/demos");
    let cases = [
        vec!["polytope", "dual", "--csv"],
        vec!["vsk", "grid", "--grid", "-1:1:3", "--csv"],
        vec!["approx", "run", "--csv"],
    ];
    let inputs = ["triangle.json", "torus_simplex.json", "geometric.json"];
    for (args, file) in cases.iter().zip(inputs) {
        let path = format!("{dir}/{file}");
        let argv = ["cone-hull"]
            .into_iter()
            .chain(args.iter().copied())
            .chain(["--input", &path]);
        let config = ExperimentConfig::try_parse_from(argv)?;
        println!("$ cone-hull {} --input demos/{file}", args.join(" "));
        print!("{}", run_cli(&config)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
