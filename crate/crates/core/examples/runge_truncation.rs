//! Truncating a cone-supported geometric series and measuring the uniform
//! error on K and on its hull.

use cone_hull::approx::{error_curve, geometric_tail_bound, truncate, ConeSeries};
use cone_hull::extremal::ReinhardtBody;
use cone_hull::{RationalPolytope, Result};
use num::complex::Complex64;

pub fn run() -> Result<()> {
    let s = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]])?;
    let f = ConeSeries::geometric(&s, vec![1, 1], Complex64::new(0.25, 0.0))?;
    let k = ReinhardtBody::torus(2);

    let t = truncate(&f, 10)?;
    println!("f_10 has {} terms and lies in P_m for m = {}", t.terms.len(), t.m_n);

    let degrees: Vec<u64> = (4..=24).step_by(4).collect();
    for r in error_curve(&f, &degrees, &k, 5.0, 200, 0)? {
        let bound = geometric_tail_bound(&f, &k, r.n)?.unwrap_or(f64::NAN);
        println!(
            "N = {:2}  sup_K err = {:.3e}  sup_hull err = {:.3e}  tail bound = {:.3e}",
            r.n, r.sup_err_k, r.sup_err_hull, bound
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
