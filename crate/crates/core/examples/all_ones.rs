//! X^2 + X^{q+1} + X^{q^2+1} + X^{2q} + X^{2q^2} next to the planar
//! pentanomial with the last two coefficients halved.

use pln::families::{all_ones_pentanomial, family_pentanomials};
use pln::{check_planarity, FieldTower, Method};

fn main() -> pln::Result<()> {
    println!("q   (1,1,1,1,1)          (1,1,1,1/2,1/2)");
    for p in [3, 5, 7, 11] {
        let tower = FieldTower::new(p, 1)?;
        let ones = check_planarity(&tower, &all_ones_pentanomial(tower.mid()), Method::Definition)?;
        let half = check_planarity(&tower, &family_pentanomials(tower.mid()).1, Method::Definition)?;
        let show = |v: &pln::Verdict| match v.witness {
            None => "planar".to_string(),
            Some(e) => format!("not planar at ε={}", tower.top().to_json(e)),
        };
        println!("{p:<3} {:<20} {}", show(&ones), show(&half));
    }
    Ok(())
}
