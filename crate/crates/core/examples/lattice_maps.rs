//! Independent exponents, monomial separation of points, the lattice map
//! of a lower-dimensional `S`, and the log box of a polyannulus preimage.

use cone_hull::lattice::{
    fiber_structure, independent_exponents, proper_box_pullback, separate_points,
};
use cone_hull::{RationalPolytope, Result};
use num::complex::Complex64;

pub fn run() -> Result<()> {
    let triangle = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 0], &[1, 1]])?;
    println!("independent exponents: {:?}", independent_exponents(&triangle)?);

    let z = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
    let w = [Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)];
    let cert = separate_points(&triangle, &z, &w)?;
    println!(
        "z^{:?} and w^{:?} differ by {:.6} ({})",
        cert.alpha,
        cert.alpha,
        cert.difference,
        cert.kind.as_str()
    );

    let plane = RationalPolytope::from_i64(3, &[&[0, 0, 0], &[1, 1, 0], &[0, 1, 1]])?;
    let map = fiber_structure(&plane)?;
    println!("L columns {:?}, kernel {:?}", map.columns, map.kernel);
    let z = [Complex64::new(2.0, 1.0), Complex64::new(0.5, 0.0), Complex64::new(1.0, -1.0)];
    let t = [Complex64::from_polar(3.0, 0.7)];
    let p = map.fiber_point(&z, &t)?;
    let (a, b) = (map.apply(&z), map.apply(&p));
    println!("F_L(z) = {a:?}\nF_L(fiber point) = {b:?}");

    let boxed = proper_box_pullback(&[vec![1, 0], vec![1, 1]], (-1f64).exp(), 1f64.exp())?;
    println!("log box: lower {:?}, upper {:?}", boxed.lower, boxed.upper);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
