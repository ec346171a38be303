//! Monomials outside the cone blow up along hull rays; the domain of
//! convergence of a cone series is stable under subtracting `Γ°`.

use cone_hull::approx::{convergence_hull, escape_witness};
use cone_hull::rational::format_rational;
use cone_hull::{Error, RationalPolytope, Result};

pub fn run() -> Result<()> {
    let s = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]])?;

    let w = escape_witness(&s, &[1, 0], &[0.0, 0.0])?;
    let xi: Vec<_> = w.xi.iter().map(format_rational).collect();
    println!("escape direction {xi:?}");
    for (t, m) in &w.growth {
        println!("  t = {t:4}  |z^beta| = {m:.4e}");
    }
    match escape_witness(&s, &[2, 2], &[0.0, 0.0]) {
        Err(Error::BetaInCone(b)) => println!("{b:?} lies in the cone"),
        other => println!("unexpected: {other:?}"),
    }

    let hull = convergence_hull(&s, vec![vec![0.0, 0.0], vec![1.0, -1.0]])?;
    for (a, b) in hull.halfspaces.iter().flatten() {
        let a: Vec<_> = a.iter().map(format_rational).collect();
        println!("<{a:?}, x> <= {}", format_rational(b));
    }
    println!("(3, -4) in domain hull: {}", hull.contains(&[3.0, -4.0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
