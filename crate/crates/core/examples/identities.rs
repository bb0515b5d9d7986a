//! The determinant identities behind the fixed families, checked over all of
//! F_{q^3}^*, and the product factorization of the closed form.

use pln::families::{
    quadrinomial_triples, solve_system, system_params, trinomial_triples, verify_product_factorization,
    verify_product_factorization_unmirrored, FACTORIZATION_CONSTANT,
};
use pln::planarity::{verify_matrix_identity_a, verify_matrix_identity_b};
use pln::FieldTower;

fn main() -> pln::Result<()> {
    for (p, n) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let tower = FieldTower::new(p, n)?;
        let a = verify_matrix_identity_a(&tower)?;
        let b = verify_matrix_identity_b(&tower)?;
        println!("q = {:>2}: A holds {} ({} ε), B holds {}", tower.q(), a.holds, a.checked, b.holds);
    }

    let tower = FieldTower::new(3, 1)?;
    let mid = tower.mid();
    println!("Δ = {FACTORIZATION_CONSTANT} · ∏ factors at q = 3:");
    for triples in [trinomial_triples(mid), quadrinomial_triples(mid)] {
        let sols = solve_system(&tower, &system_params(mid, &triples)?)?;
        let mirrored = sols.iter().all(|f| verify_product_factorization(&tower, &triples, f).unwrap().holds);
        let plain = sols.iter().all(|f| verify_product_factorization_unmirrored(&tower, &triples, f).unwrap().holds);
        println!("  {} solutions: mirrored {mirrored}, unmirrored {plain}", sols.len());
    }
    Ok(())
}
