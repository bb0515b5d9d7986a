//! Every known family, checked by brute force at a few fields.

use pln::families::{family_trinomial, family_two_param};
use pln::{is_planar, FieldTower, Family, Method};

fn main() -> pln::Result<()> {
    for (p, n) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let tower = FieldTower::new(p, n)?;
        let mid = tower.mid();
        print!("q = {:>2}:", tower.q());

        for family in [Family::QuadTeo1, Family::PentNeg, Family::PentHalf] {
            let (f, _) = family.construct(mid, &[])?;
            print!("  {family} {}", is_planar(&tower, &f, Method::Dickson)?);
        }

        // trinomials: the predicate is sufficient, not necessary
        let (mut pred, mut planar) = (0, 0);
        for c in mid.elements() {
            for d in mid.elements() {
                for e in mid.elements() {
                    let (f, ok) = family_trinomial(mid, c, d, e);
                    let is = is_planar(&tower, &f, Method::Dickson)?;
                    assert!(!ok || is);
                    pred += ok as u32;
                    planar += is as u32;
                }
            }
        }
        print!("  trinomial {pred}/{planar}");

        // two-param: predicate and planarity coincide
        let mut members = 0;
        for d in mid.elements() {
            for e in mid.elements() {
                let (f, ok) = family_two_param(mid, d, e);
                assert_eq!(ok, is_planar(&tower, &f, Method::Dickson)?);
                members += ok as u32;
            }
        }
        println!("  two-param {members} planar");
    }
    Ok(())
}
