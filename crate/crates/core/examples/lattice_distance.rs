//! Distance from an integral polytope to the lattice points outside it, and
//! the growth of that distance under refinement.

use cone_hull::polytope::{distance_growth, lattice_distance, EnumerationBudget};
use cone_hull::{RationalPolytope, Result};

pub fn run() -> Result<()> {
    let p = RationalPolytope::from_i64(2, &[&[0, 0], &[3, 1], &[1, 2]])?;
    let d = lattice_distance(&p)?;
    println!(
        "distance {:.6} to {:?}, bound {:.6} (holds: {})",
        d.distance, d.nearest, d.bound, d.bound_holds
    );

    let s = RationalPolytope::from_strs(2, &[&["0", "0"], &["1", "0"], &["1", "1/2"]])?;
    for row in distance_growth(&s, 20, EnumerationBudget::from_env())?
        .iter()
        .filter(|r| r.m % 5 == 0 || r.m == 1)
    {
        println!(
            "m = {:2}  d_m = {:.6}  d_m^(1/m) = {:.6}  bound = {:.6}",
            row.m, row.distance, row.root, row.bound_root
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
