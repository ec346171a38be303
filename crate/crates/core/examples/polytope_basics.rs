//! Supporting function, exact membership, lattice points and the refined
//! hull of a rational polytope.

use cone_hull::polytope::{enumerate_exponents, refine, EnumerationBudget, Membership};
use cone_hull::rational::{format_rational, parse_rational};
use cone_hull::{RationalPolytope, Result};

pub fn run() -> Result<()> {
    let s = RationalPolytope::from_strs(2, &[&["0", "0"], &["1", "0"], &["1", "1/2"]])?;
    println!("S has {} vertices, affine dim {}", s.vertices().len(), s.affine_dim());

    let xi = vec![parse_rational("-1")?, parse_rational("3")?];
    println!("phi_S(-1, 3) = {}", format_rational(&s.support(&xi)?));

    for text in [["1/2", "1/8"], ["1", "1"]] {
        let x = vec![parse_rational(text[0])?, parse_rational(text[1])?];
        match s.contains(&x)? {
            Membership::Inside { weights } => {
                let w: Vec<_> = weights.iter().map(format_rational).collect();
                println!("{text:?} inside, weights {w:?}");
            }
            Membership::Outside { separator } => {
                let h: Vec<_> = separator.iter().map(format_rational).collect();
                println!("{text:?} outside, separated by {h:?}");
            }
        }
    }

    let budget = EnumerationBudget::from_env();
    for m in [1, 2, 4] {
        let pts = enumerate_exponents(&s, m, budget)?;
        let r = refine(&s, m, budget)?;
        println!("m = {m}: {} lattice points, refined hull has {} vertices", pts.len(), r.vertices().len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
