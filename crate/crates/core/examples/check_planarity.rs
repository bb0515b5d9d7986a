//! Decide planarity of one pentanomial with all three methods.
//!
//!     cargo run --example check_planarity -- 7 1,1,1,4,4

use pln::cli::parse_coeffs;
use pln::{check_planarity, FieldTower, Method};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(Ok(5), |s| s.parse())?;
    let coeffs = args.next().unwrap_or_else(|| "1,-1,-1,1,1".into());

    let tower = FieldTower::new(p, 1)?;
    let f = parse_coeffs(tower.mid(), &coeffs)?;
    println!("f = (E,A,B,C,D) = {} over {tower}", f.to_json(tower.mid()));
    for method in Method::ALL {
        let v = check_planarity(&tower, &f, method)?;
        match v.witness {
            None => println!("  {method:<10} planar"),
            Some(eps) => println!("  {method:<10} not planar, first bad ε = {}", tower.top().to_json(eps)),
        }
    }
    Ok(())
}
