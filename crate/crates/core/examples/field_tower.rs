//! Build F_p ⊂ F_q ⊂ F_{q^3}, do some arithmetic and watch Frobenius act.

use pln::FieldTower;

fn main() -> pln::Result<()> {
    for (p, n) in [(3, 1), (3, 2), (5, 1)] {
        let tower = FieldTower::new(p, n)?;
        println!("{tower}");
        let top = tower.top();

        // y, the class of the generator of the cubic extension
        let y = top.from_index(tower.q() as u64)?;
        let y_inv = top.inv(y)?;
        println!("  y^-1          = {}", top.to_json(y_inv));
        println!("  y^q, y^(q^2)  = {}, {}", top.to_json(top.frobenius(y, 1)), top.to_json(top.frobenius(y, 2)));

        // elements fixed by x -> x^q are exactly the embedded copy of F_q
        let fixed = top.elements().filter(|&x| top.frobenius(x, 1) == x).count();
        println!("  fixed by Frobenius: {fixed} of {}", top.order());
    }

    // explicit moduli, coefficients ascending
    let tower = FieldTower::build(
        3,
        2,
        &pln::Moduli { q: Some(vec![2, 2, 1]), q3: None },
    )?;
    println!("{tower}");
    Ok(())
}
