//! The cone `R_+ S`, its dual, and minimal scalings of exponents.

use cone_hull::polytope::dual_cone;
use cone_hull::rational::{format_rational, vec_from_i64};
use cone_hull::{RationalPolytope, Result};

fn show(v: &[cone_hull::Rat]) -> String {
    let parts: Vec<_> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn run() -> Result<()> {
    let triangle = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 0], &[1, 1]])?;
    let cone = dual_cone(&triangle);
    for h in &cone.halfspaces {
        println!("cone facet  <{}, x> >= 0", show(h));
    }
    let rays = cone.dual_rays()?;
    for r in &rays.rays {
        println!("dual ray    {}", show(r));
    }

    for alpha in [[3, 1], [2, 2], [0, 1]] {
        let a = vec_from_i64(&alpha);
        match triangle.ray_scaling_lp(&a) {
            Some(t) => println!("{alpha:?} lies in {} S", format_rational(&t)),
            None => println!("{alpha:?} is outside the cone"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
