//! When does L(X) = aX^{q^2} + bX^q + cX permute F_{q^3}?
//! Compare the Dickson determinant, the norm form and a direct kernel search.

use pln::linearized::norm_form;
use pln::{FieldTower, QPolynomial};

fn main() -> pln::Result<()> {
    let tower = FieldTower::new(5, 1)?;
    let (mid, top) = (tower.mid(), tower.top());

    let mut permutations = 0;
    let mut total = 0;
    for a in mid.elements() {
        for b in mid.elements() {
            for c in mid.elements() {
                let l = QPolynomial::from_mid(top, a, b, c);
                let by_det = l.is_permutation_dickson(top);
                let by_kernel = l.is_permutation_kernel(&tower)?;
                let by_norm = !norm_form(mid, a, b, c).is_zero();
                assert!(by_det == by_kernel && by_kernel == by_norm);
                permutations += by_det as u32;
                total += 1;
            }
        }
    }
    println!("q = 5: {permutations} of {total} coefficient triples give permutations");

    // a coefficient from the big field: L(X) = X^q - y X
    let y = top.from_index(5)?;
    let l = QPolynomial::new(top.neg(y), pln::Fq3::ONE, pln::Fq3::ZERO);
    println!("X^q - yX: det = {}, permutes: {}", top.to_json(l.dickson_matrix(top).det(top)), l.is_permutation_dickson(top));
    Ok(())
}
