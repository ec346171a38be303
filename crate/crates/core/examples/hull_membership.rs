//! Membership in the S-hull `ch A - Γ°`, with certificates both ways, and
//! seeded samples of the hull.

use cone_hull::extremal::{hull_membership, hull_sampler, HullCertificate, ReinhardtBody};
use cone_hull::{RationalPolytope, Result};

pub fn run() -> Result<()> {
    let s = RationalPolytope::standard_simplex(2);
    let k = ReinhardtBody::torus(2);

    for x in [[-1.0, -2.0], [0.1, -5.0]] {
        match hull_membership(&s, &k, &x)? {
            HullCertificate::Inside { a, t } => println!("{x:?} = {a:?} - {t:?}"),
            HullCertificate::Outside { separator, margin } => {
                println!("{x:?} outside: separator {separator:?}, margin {margin}")
            }
        }
    }

    let diag = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]])?;
    let samples = hull_sampler(&diag, &k, 5.0, 6, 7)?;
    for x in &samples {
        let inside = hull_membership(&diag, &k, x)?.is_inside();
        println!("sample ({:+.3}, {:+.3}) inside: {inside}", x[0], x[1]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
