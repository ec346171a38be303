//! The extremal function of a Reinhardt body, its monomial lower bounds,
//! and its restriction to coordinate subspaces.

use cone_hull::extremal::{eval_vsk, siciak_monomial, vsk_on_axes, ReinhardtBody};
use cone_hull::polytope::EnumerationBudget;
use cone_hull::{RationalPolytope, Result};

pub fn run() -> Result<()> {
    let s = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 0], &[1, 1]])?;
    let k = ReinhardtBody::from_points(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]])?;
    let x = [1.5, -0.5];

    let v = eval_vsk(&s, &k, &x)?;
    println!("V(x) = {:.6}, maximizer s = {:?}, active a = {:?}", v.value, v.maximizer_s, v.active_a);

    let budget = EnumerationBudget::from_env();
    for m in [5, 20, 80] {
        println!("monomial bound m = {m:3}: {:.6}", siciak_monomial(&s, &k, m, &x, budget)?);
    }

    let torus = ReinhardtBody::torus(2);
    println!("on the first axis at 2: {}", vsk_on_axes(&s, &torus, &[0], &[2.0])?);
    println!("on the second axis at 7: {}", vsk_on_axes(&s, &torus, &[1], &[7.0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
