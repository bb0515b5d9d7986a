//! Solve the coefficient system for a choice of factor triples and
//! re-check that every solution is planar.

use pln::families::{cyclic_params, quadrinomial_triples, solve_system, system_params, trinomial_triples};
use pln::{is_planar, FieldTower, Method};

fn main() -> pln::Result<()> {
    let tower = FieldTower::new(5, 1)?;
    let mid = tower.mid();

    for (name, triples) in [("trinomial", trinomial_triples(mid)), ("quadrinomial", quadrinomial_triples(mid))] {
        let params = system_params(mid, &triples)?;
        let sols = solve_system(&tower, &params)?;
        println!("{name}: params {:?}, {} solutions", params.as_array().map(|x| x.index()), sols.len());
        for f in sols.iter().take(5) {
            println!("  {} planar={}", f.to_json(mid), is_planar(&tower, f, Method::Definition)?);
        }
    }

    // a single triple and its rotations
    let (a, b, c) = (mid.from_int(1), mid.from_int(1), mid.from_int(0));
    let params = cyclic_params(mid, a, b, c)?;
    let sols = solve_system(&tower, &params)?;
    println!("cyclic (1,1,0): params {:?}, {} solutions", params.as_array().map(|x| x.index()), sols.len());

    // inadmissible triples are rejected
    match cyclic_params(mid, a, a, a) {
        Err(e) => println!("cyclic (1,1,1): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
