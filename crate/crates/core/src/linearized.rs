//! Linearized polynomials `c_0 X + c_1 X^q + c_2 X^{q^2}` over `F_{q^3}`.

use rayon::prelude::*;
use serde_json::Value;

use crate::error::Result;
use crate::field::{FieldTower, Fq, Fq3, MidField, TopField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    pub coeffs: [Fq3; 3],
}

/// Row `i`, column `j` holds `c_{(j - i) mod 3}^{q^i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DicksonMatrix {
    pub entries: [[Fq3; 3]; 3],
}

impl QPolynomial {
    pub fn new(c0: Fq3, c1: Fq3, c2: Fq3) -> Self {
        QPolynomial { coeffs: [c0, c1, c2] }
    }

    /// The polynomial `a X^{q^2} + b X^q + c X` with coefficients from `F_q`.
    pub fn from_mid(top: &TopField, a: Fq, b: Fq, c: Fq) -> Self {
        QPolynomial::new(top.embed(c), top.embed(b), top.embed(a))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn evaluate(&self, top: &TopField, x: Fq3) -> Fq3 {
        let [c0, c1, c2] = self.coeffs;
        let x1 = top.frobenius(x, 1);
        let x2 = top.frobenius(x, 2);
        top.add(top.mul(c0, x), top.add(top.mul(c1, x1), top.mul(c2, x2)))
    }

    pub fn dickson_matrix(&self, top: &TopField) -> DicksonMatrix {
        let mut entries = [[Fq3::ZERO; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = top.frobenius(self.coeffs[(j + 3 - i) % 3], i as u32);
            }
        }
        DicksonMatrix { entries }
    }

    /// Permutation test through the Dickson determinant.
    pub fn is_permutation_dickson(&self, top: &TopField) -> bool {
        !self.dickson_matrix(top).det(top).is_zero()
    }

    /// Permutation test by sweeping `F_{q^3}` for a nonzero root.
    pub fn is_permutation_kernel(&self, tower: &FieldTower) -> Result<bool> {
        let top = tower.top();
        tower.check_sweep(top.order())?;
        let has_root = (1..top.order())
            .into_par_iter()
            .any(|i| self.evaluate(top, top.at(i)).is_zero());
        Ok(!has_root)
    }

    /// Coefficient-wise `q^k`-th power.
    pub fn conjugate(&self, top: &TopField, k: u32) -> Self {
        QPolynomial { coeffs: self.coeffs.map(|c| top.frobenius(c, k)) }
    }

    pub fn to_json(&self, top: &TopField) -> Value {
        Value::Array(self.coeffs.iter().map(|&c| top.to_json(c)).collect())
    }
}

impl DicksonMatrix {
    pub fn det(&self, top: &TopField) -> Fq3 {
        det3(top, &self.entries)
    }
}

/// Cofactor expansion of a 3×3 determinant.
pub fn det3(top: &TopField, m: &[[Fq3; 3]; 3]) -> Fq3 {
    let minor = |a: Fq3, b: Fq3, c: Fq3, d: Fq3| top.sub(top.mul(a, d), top.mul(b, c));
    let t0 = top.mul(m[0][0], minor(m[1][1], m[1][2], m[2][1], m[2][2]));
    let t1 = top.mul(m[0][1], minor(m[1][0], m[1][2], m[2][0], m[2][2]));
    let t2 = top.mul(m[0][2], minor(m[1][0], m[1][1], m[2][0], m[2][1]));
    top.add(top.sub(t0, t1), t2)
}

/// `a^3 + b^3 + c^3 - 3abc`, the determinant of the circulant of `(a, b, c)`.
///
/// Nonzero exactly when `a X^{q^2} + b X^q + c X` has no root in `F_{q^3}^*`.
pub fn norm_form(mid: &MidField, a: Fq, b: Fq, c: Fq) -> Fq {
    let cube = |x: Fq| mid.mul(mid.mul(x, x), x);
    let sum = mid.add(mid.add(cube(a), cube(b)), cube(c));
    let abc = mid.mul(mid.mul(a, b), c);
    mid.sub(sum, mid.scale_int(3, abc))
}
