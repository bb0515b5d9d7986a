//! Planarity of `f(X) = E X^2 + A X^{q+1} + B X^{q^2+1} + C X^{2q} + D X^{2q^2}`
//! over `F_{q^3}` with `E, A, B, C, D ∈ F_q`.
//!
//! `f` is planar when `x ↦ f(x + ε) - f(x)` permutes `F_{q^3}` for every
//! `ε ≠ 0`. Three deciders are provided:
//!
//! * [`Method::Definition`] counts the image of every difference map;
//! * [`Method::Dickson`] tests the Dickson determinant of the difference
//!   q-polynomial `F_ε(X) = f(X + ε) - f(X) - f(ε)`;
//! * [`Method::Expression`] evaluates the closed form of that determinant in
//!   `E, A, B, C, D` and `ε`.
//!
//! Every ε-sweep runs in enumeration order and reports the first ε that
//! breaks planarity, independent of how the sweep is split across threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Element, FieldTower, Fq, Fq3, MidField, TopField};
use crate::linearized::{det3, QPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pentanomial {
    pub e: Fq,
    pub a: Fq,
    pub b: Fq,
    pub c: Fq,
    pub d: Fq,
}

impl Pentanomial {
    pub fn new(e: Fq, a: Fq, b: Fq, c: Fq, d: Fq) -> Self {
        Pentanomial { e, a, b, c, d }
    }

    /// `(E, A, B, C, D)` from integer literals, reduced mod `p`.
    pub fn from_ints(mid: &MidField, coeffs: [i64; 5]) -> Self {
        Self::from_coeffs(coeffs.map(|k| mid.from_int(k)))
    }

    pub fn from_coeffs([e, a, b, c, d]: [Fq; 5]) -> Self {
        Pentanomial { e, a, b, c, d }
    }

    /// Accepts only `F_q` elements; anything else is a level mismatch.
    pub fn from_elements(coeffs: &[Element; 5]) -> Result<Self> {
        let mut out = [Fq::ZERO; 5];
        for (slot, el) in out.iter_mut().zip(coeffs) {
            *slot = el.as_mid()?;
        }
        Ok(Self::from_coeffs(out))
    }

    /// `[E, A, B, C, D]`.
    pub fn coeffs(&self) -> [Fq; 5] {
        [self.e, self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, mid: &MidField, k: Fq) -> Self {
        Self::from_coeffs(self.coeffs().map(|c| mid.mul(k, c)))
    }

    /// Position in the enumeration of `F_q^5`, with `E` varying fastest.
    pub fn index(&self, q: u32) -> u64 {
        self.coeffs().iter().rev().fold(0u64, |acc, c| acc * q as u64 + c.index() as u64)
    }

    pub fn from_index(mid: &MidField, mut idx: u64) -> Result<Self> {
        let q = mid.order() as u64;
        let mut out = [Fq::ZERO; 5];
        for slot in out.iter_mut() {
            *slot = mid.from_index(idx % q)?;
            idx /= q;
        }
        if idx != 0 {
            return Err(Error::OutOfRange("pentanomial index beyond q^5".into()));
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn evaluate(&self, top: &TopField, x: Fq3) -> Fq3 {
        let x1 = top.frobenius(x, 1);
        let x2 = top.frobenius(x, 2);
        let terms = [
            (self.e, top.mul(x, x)),
            (self.a, top.mul(x1, x)),
            (self.b, top.mul(x2, x)),
            (self.c, top.mul(x1, x1)),
            (self.d, top.mul(x2, x2)),
        ];
        terms.iter().fold(Fq3::ZERO, |acc, &(k, v)| top.add(acc, top.scale(k, v)))
    }

    /// `F_ε(X) = (2Eε + Aε^q + Bε^{q^2}) X + (Aε + 2Cε^q) X^q + (Bε + 2Dε^{q^2}) X^{q^2}`.
    pub fn difference_qpoly(&self, top: &TopField, eps: Fq3) -> QPolynomial {
        let mid = top.mid();
        let two = |k: Fq| mid.add(k, k);
        let e1 = top.frobenius(eps, 1);
        let e2 = top.frobenius(eps, 2);
        let c0 = top.add(
            top.scale(two(self.e), eps),
            top.add(top.scale(self.a, e1), top.scale(self.b, e2)),
        );
        let c1 = top.add(top.scale(self.a, eps), top.scale(two(self.c), e1));
        let c2 = top.add(top.scale(self.b, eps), top.scale(two(self.d), e2));
        QPolynomial::new(c0, c1, c2)
    }

    /// `Δ_{F_ε}` through the Dickson matrix of [`Self::difference_qpoly`].
    pub fn dickson_determinant(&self, top: &TopField, eps: Fq3) -> Fq3 {
        self.difference_qpoly(top, eps).dickson_matrix(top).det(top)
    }

    pub fn delta_form(&self, mid: &MidField) -> DeltaForm {
        DeltaForm::new(mid, self)
    }

    /// `Δ_{F_ε}` by the closed form in the coefficients.
    pub fn delta_expression(&self, top: &TopField, eps: Fq3) -> Fq3 {
        self.delta_form(top.mid()).eval(top, eps)
    }

    pub fn to_json(&self, mid: &MidField) -> Value {
        Value::Array(self.coeffs().iter().map(|&c| mid.to_json(c)).collect())
    }

    pub fn from_json(mid: &MidField, v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .filter(|a| a.len() == 5)
            .ok_or_else(|| Error::OutOfRange(format!("expected five coefficients, found {v}")))?;
        let mut out = [Fq::ZERO; 5];
        for (slot, item) in out.iter_mut().zip(items) {
            *slot = mid.from_json(item)?;
        }
        Ok(Self::from_coeffs(out))
    }
}

/// The four coefficient polynomials `T_1..T_4` of the closed-form determinant:
///
/// `Δ = T_1 S_1 + T_2 S_2 + T_3 S_3 + T_4 ε^{1+q+q^2}` with
/// `S_1 = ε^3 + ε^{3q} + ε^{3q^2}`, `S_2 = ε^{2+q} + ε^{1+2q^2} + ε^{2q+q^2}`,
/// `S_3 = ε^{2+q^2} + ε^{1+2q} + ε^{q+2q^2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaForm {
    pub t: [Fq; 4],
}

impl DeltaForm {
    pub fn new(mid: &MidField, f: &Pentanomial) -> Self {
        let Pentanomial { e, a, b, c, d } = *f;
        let m = |x: Fq, y: Fq| mid.mul(x, y);
        let m3 = |x: Fq, y: Fq, z: Fq| mid.mul(mid.mul(x, y), z);
        let k = |n: i64, x: Fq| mid.scale_int(n, x);
        let sum = |terms: &[Fq]| terms.iter().fold(Fq::ZERO, |acc, &t| mid.add(acc, t));

        let t1 = sum(&[k(-2, m3(a, a, d)), k(2, m3(a, b, e)), k(-2, m3(b, b, c))]);
        let t2 = sum(&[
            k(2, m3(a, a, c)),
            k(-2, m3(a, b, d)),
            k(-4, m3(a, c, d)),
            k(4, m3(a, e, e)),
            k(2, m3(b, b, e)),
            k(-4, m3(b, c, e)),
            k(4, m3(b, d, d)),
        ]);
        let t3 = sum(&[
            k(2, m3(a, a, e)),
            k(-2, m3(a, b, c)),
            k(4, m3(a, c, c)),
            k(-4, m3(a, d, e)),
            k(2, m3(b, b, d)),
            k(-4, m3(b, c, d)),
            k(4, m3(b, e, e)),
        ]);
        let cube = |x: Fq| m(m(x, x), x);
        let t4 = sum(&[
            k(2, cube(a)),
            k(2, cube(b)),
            k(8, cube(c)),
            k(-24, m3(c, d, e)),
            k(8, cube(d)),
            k(8, cube(e)),
        ]);
        DeltaForm { t: [t1, t2, t3, t4] }
    }

    pub fn eval(&self, top: &TopField, eps: Fq3) -> Fq3 {
        let [s1, s2, s3, n] = symmetric_sums(top, eps);
        let [t1, t2, t3, t4] = self.t;
        top.add(
            top.add(top.scale(t1, s1), top.scale(t2, s2)),
            top.add(top.scale(t3, s3), top.scale(t4, n)),
        )
    }
}

/// `[S_1, S_2, S_3, ε^{1+q+q^2}]` as used by [`DeltaForm`].
pub fn symmetric_sums(top: &TopField, eps: Fq3) -> [Fq3; 4] {
    let e0 = eps;
    let e1 = top.frobenius(eps, 1);
    let e2 = top.frobenius(eps, 2);
    let m = |x: Fq3, y: Fq3| top.mul(x, y);
    let (sq0, sq1, sq2) = (m(e0, e0), m(e1, e1), m(e2, e2));
    let s1 = top.add(top.add(m(sq0, e0), m(sq1, e1)), m(sq2, e2));
    let s2 = top.add(top.add(m(sq0, e1), m(e0, sq2)), m(sq1, e2));
    let s3 = top.add(top.add(m(sq0, e2), m(e0, sq1)), m(e1, sq2));
    let n = m(m(e0, e1), e2);
    [s1, s2, s3, n]
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Method {
    Definition,
    #[default]
    Dickson,
    Expression,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Definition, Method::Dickson, Method::Expression];

    pub fn name(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::Dickson => "dickson",
            Method::Expression => "expression",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected definition, dickson or expression)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub planar: bool,
    /// First ε in enumeration order at which planarity fails.
    pub witness: Option<Fq3>,
    pub method: Method,
}

pub fn is_planar(tower: &FieldTower, f: &Pentanomial, method: Method) -> Result<bool> {
    Ok(check_planarity(tower, f, method)?.planar)
}

pub fn check_planarity(tower: &FieldTower, f: &Pentanomial, method: Method) -> Result<Verdict> {
    let top = tower.top();
    tower.check_sweep(top.order())?;
    let failing = match method {
        Method::Definition => definition_sweep(top, f),
        Method::Dickson => first_nonzero_eps(top, |eps| f.dickson_determinant(top, eps).is_zero()),
        Method::Expression => {
            let form = f.delta_form(top.mid());
            first_nonzero_eps(top, |eps| form.eval(top, eps).is_zero())
        }
    };
    Ok(Verdict { planar: failing.is_none(), witness: failing, method })
}

/// Planarity verdicts of a whole batch, sequential per item and parallel
/// across items; intended for sweeps over many small pentanomials.
pub fn classify_batch(
    tower: &FieldTower,
    fs: &[Pentanomial],
    method: Method,
) -> Result<Vec<Verdict>> {
    let top = tower.top();
    tower.check_sweep(top.order())?;
    Ok(fs
        .par_iter()
        .map(|f| {
            let failing = match method {
                Method::Definition => definition_sweep_serial(top, &f.evaluation_table(top)),
                Method::Dickson => {
                    (1..top.order()).map(|i| top.at(i)).find(|&e| f.dickson_determinant(top, e).is_zero())
                }
                Method::Expression => {
                    let form = f.delta_form(top.mid());
                    (1..top.order()).map(|i| top.at(i)).find(|&e| form.eval(top, e).is_zero())
                }
            };
            Verdict { planar: failing.is_none(), witness: failing, method }
        })
        .collect())
}

fn first_nonzero_eps(top: &TopField, breaks: impl Fn(Fq3) -> bool + Sync) -> Option<Fq3> {
    (1..top.order())
        .into_par_iter()
        .map(|i| top.at(i))
        .find_first(|&eps| breaks(eps))
}

impl Pentanomial {
    fn evaluation_table(&self, top: &TopField) -> Vec<Fq3> {
        top.elements().map(|x| self.evaluate(top, x)).collect()
    }
}

/// Values of `f` in enumeration order plus per-digit subtraction tables, so
/// the inner loop of the definitional check is table lookups only.
struct ValueTable {
    q: usize,
    values: Vec<[u16; 3]>,
    /// `sub[k][a * q + b] = ((a - b) mod q) * q^k`, digits as enumeration indices
    sub: [Vec<u32>; 3],
}

/// Above this `q` the subtraction tables are not worth their memory.
const TABLE_Q_LIMIT: u32 = 256;

impl ValueTable {
    fn new(top: &TopField, values: &[Fq3]) -> Option<Self> {
        let mid = top.mid();
        if mid.order() > TABLE_Q_LIMIT {
            return None;
        }
        let q = mid.order() as usize;
        let els: Vec<Fq> = mid.elements().collect();
        let sub = [1, q, q * q].map(|w| {
            let mut t = Vec::with_capacity(q * q);
            for &a in &els {
                for &b in &els {
                    t.push(mid.sub(a, b).index() * w as u32);
                }
            }
            t
        });
        let values = values.iter().map(|v| v.coeffs().map(|c| c.index() as u16)).collect();
        Some(ValueTable { q, values, sub })
    }
}

fn definition_sweep(top: &TopField, f: &Pentanomial) -> Option<Fq3> {
    let table: Vec<Fq3> =
        (0..top.order()).into_par_iter().map(|i| f.evaluate(top, top.at(i))).collect();
    let fast = ValueTable::new(top, &table);
    (1..top.order())
        .into_par_iter()
        .find_first(|&i| !shift_is_bijective(top, &table, fast.as_ref(), top.at(i)))
        .map(|i| top.at(i))
}

fn definition_sweep_serial(top: &TopField, table: &[Fq3]) -> Option<Fq3> {
    let fast = ValueTable::new(top, table);
    (1..top.order()).map(|i| top.at(i)).find(|&eps| !shift_is_bijective(top, table, fast.as_ref(), eps))
}

/// Whether `x ↦ f(x + ε) - f(x)` hits every element of `F_{q^3}` exactly once,
/// with `table[i] = f(x_i)` in enumeration order.
fn shift_is_bijective(top: &TopField, table: &[Fq3], fast: Option<&ValueTable>, eps: Fq3) -> bool {
    let mid = top.mid();
    let q = mid.order() as usize;
    let shift: Vec<Vec<usize>> = eps
        .coeffs()
        .iter()
        .map(|&e| mid.elements().map(|c| mid.add(c, e).index() as usize).collect())
        .collect();
    let mut seen = vec![0u64; table.len().div_ceil(64)];
    let mut x = 0usize;
    let diff_index = |y: usize, x: usize| match fast {
        Some(t) => {
            let (fy, fx) = (t.values[y], t.values[x]);
            (t.sub[0][fy[0] as usize * t.q + fx[0] as usize]
                + t.sub[1][fy[1] as usize * t.q + fx[1] as usize]
                + t.sub[2][fy[2] as usize * t.q + fx[2] as usize]) as usize
        }
        None => top.index(top.sub(table[y], table[x])) as usize,
    };
    for i2 in 0..q {
        let y2 = shift[2][i2] * q * q;
        for i1 in 0..q {
            let y21 = y2 + shift[1][i1] * q;
            for &s0 in &shift[0] {
                let k = diff_index(y21 + s0, x);
                let (word, bit) = (k / 64, 1u64 << (k % 64));
                if seen[word] & bit != 0 {
                    return false;
                }
                seen[word] |= bit;
                x += 1;
            }
        }
    }
    true
}

/// Outcome of an exhaustive identity check over `F_{q^3}^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub checked: u64,
    /// First ε in enumeration order where the identity or nonvanishing fails.
    pub first_failure: Option<Fq3>,
}

impl IdentityCheck {
    pub(crate) fn sweep(tower: &FieldTower, fails: impl Fn(Fq3) -> bool + Sync) -> Result<Self> {
        let top = tower.top();
        tower.check_sweep(top.order())?;
        let first_failure = first_nonzero_eps(top, fails);
        Ok(IdentityCheck {
            holds: first_failure.is_none(),
            checked: top.order() - 1,
            first_failure,
        })
    }
}

/// Builds a matrix whose columns are Frobenius twists of `(u, v, w)`:
/// rows `(u, w^q, v^{q^2})`, `(v, u^q, w^{q^2})`, `(w, v^q, u^{q^2})`.
fn twisted_matrix(top: &TopField, u: Fq3, v: Fq3, w: Fq3) -> [[Fq3; 3]; 3] {
    let f1 = |x| top.frobenius(x, 1);
    let f2 = |x| top.frobenius(x, 2);
    [[u, f1(w), f2(v)], [v, f1(u), f2(w)], [w, f1(v), f2(u)]]
}

/// `A_ε` with `u = 2ε + ε^q + ε^{q^2}`, `v = ε + ε^q`, `w = ε + ε^{q^2}`.
pub fn matrix_a(top: &TopField, eps: Fq3) -> [[Fq3; 3]; 3] {
    let e1 = top.frobenius(eps, 1);
    let e2 = top.frobenius(eps, 2);
    let u = top.add(top.add(top.add(eps, eps), e1), e2);
    twisted_matrix(top, u, top.add(eps, e1), top.add(eps, e2))
}

/// `B_ε` with `u = 2ε - ε^q - ε^{q^2}`, `v = 2ε^q - ε`, `w = 2ε^{q^2} - ε`.
pub fn matrix_b(top: &TopField, eps: Fq3) -> [[Fq3; 3]; 3] {
    let e1 = top.frobenius(eps, 1);
    let e2 = top.frobenius(eps, 2);
    let u = top.sub(top.sub(top.add(eps, eps), e1), e2);
    twisted_matrix(top, u, top.sub(top.add(e1, e1), eps), top.sub(top.add(e2, e2), eps))
}

/// Monomials `ε^{i + j q + k q^2}` for `i + j + k = 3`, keyed by `(i, j, k)`.
fn cubic_monomial(top: &TopField, eps: Fq3, (i, j, k): (u32, u32, u32)) -> Fq3 {
    let e1 = top.frobenius(eps, 1);
    let e2 = top.frobenius(eps, 2);
    top.mul(top.mul(top.pow(eps, i as u64), top.pow(e1, j as u64)), top.pow(e2, k as u64))
}

fn monomial_sum(top: &TopField, eps: Fq3, terms: &[(i64, (u32, u32, u32))]) -> Fq3 {
    terms.iter().fold(Fq3::ZERO, |acc, &(c, mono)| {
        top.add(acc, top.scale_int(c, cubic_monomial(top, eps, mono)))
    })
}

/// `det(A_ε) = 4(ε^{q^2} + ε^q)(ε^{q^2} + ε)(ε^q + ε)`, also against its
/// expanded form, and `det(A_ε) ≠ 0`, for every `ε ≠ 0`.
pub fn verify_matrix_identity_a(tower: &FieldTower) -> Result<IdentityCheck> {
    let top = tower.top();
    IdentityCheck::sweep(tower, |eps| {
        let det = det3(top, &matrix_a(top, eps));
        let e1 = top.frobenius(eps, 1);
        let e2 = top.frobenius(eps, 2);
        let factored = top.scale_int(
            4,
            top.mul(top.mul(top.add(e2, e1), top.add(e2, eps)), top.add(e1, eps)),
        );
        let expanded = monomial_sum(
            top,
            eps,
            &[
                (4, (0, 1, 2)),
                (4, (1, 0, 2)),
                (4, (0, 2, 1)),
                (8, (1, 1, 1)),
                (4, (2, 0, 1)),
                (4, (1, 2, 0)),
                (4, (2, 1, 0)),
            ],
        );
        det.is_zero() || det != factored || det != expanded
    })
}

/// `det(B_ε) = 2(ε^{q^2} - ε^q + ε)(ε^{q^2} + ε^q - ε)(-ε^{q^2} + ε^q + ε)`,
/// also against its expanded form, and `det(B_ε) ≠ 0`, for every `ε ≠ 0`.
pub fn verify_matrix_identity_b(tower: &FieldTower) -> Result<IdentityCheck> {
    let top = tower.top();
    IdentityCheck::sweep(tower, |eps| {
        let det = det3(top, &matrix_b(top, eps));
        let e1 = top.frobenius(eps, 1);
        let e2 = top.frobenius(eps, 2);
        let f1 = top.add(top.sub(e2, e1), eps);
        let f2 = top.sub(top.add(e2, e1), eps);
        let f3 = top.add(top.sub(e1, e2), eps);
        let factored = top.scale_int(2, top.mul(top.mul(f1, f2), f3));
        let expanded = monomial_sum(
            top,
            eps,
            &[
                (-2, (0, 0, 3)),
                (2, (0, 1, 2)),
                (2, (1, 0, 2)),
                (2, (0, 2, 1)),
                (-4, (1, 1, 1)),
                (2, (2, 0, 1)),
                (-2, (0, 3, 0)),
                (2, (1, 2, 0)),
                (2, (2, 1, 0)),
                (-2, (3, 0, 0)),
            ],
        );
        det.is_zero() || det != factored || det != expanded
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(p: u32) -> FieldTower {
        FieldTower::new(p, 1).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let tw = t(3);
        let top = tw.top();
        let sq = Pentanomial::from_ints(tw.mid(), [1, 0, 0, 0, 0]);
        for x in top.elements() {
            assert_eq!(sq.evaluate(top, x), top.mul(x, x));
        }
        let any = Pentanomial::from_ints(tw.mid(), [2, 1, 0, 2, 1]);
        assert_eq!(any.evaluate(top, Fq3::ZERO), Fq3::ZERO);
        let two = top.embed(tw.mid().from_int(2));
        assert_eq!(sq.evaluate(top, two), Fq3::ONE);
    }

    #[test]
    fn difference_qpoly_examples() {
        let tw = t(5);
        let top = tw.top();
        let sq = Pentanomial::from_ints(tw.mid(), [1, 0, 0, 0, 0]);
        for eps in top.elements().step_by(9) {
            let l = sq.difference_qpoly(top, eps);
            assert_eq!(l, QPolynomial::new(top.add(eps, eps), Fq3::ZERO, Fq3::ZERO));
        }
        let f = Pentanomial::from_ints(tw.mid(), [1, 2, 3, 4, 1]);
        assert!(f.difference_qpoly(top, Fq3::ZERO).is_zero());
    }

    #[test]
    fn difference_qpoly_matches_direct_difference_q3() {
        // oracle: f(x + ε) - f(x) - f(ε) by direct evaluation
        let tw = t(3);
        let top = tw.top();
        for idx in (0..243).step_by(7) {
            let f = Pentanomial::from_index(tw.mid(), idx).unwrap();
            for eps in top.elements() {
                let l = f.difference_qpoly(top, eps);
                for x in top.elements() {
                    let direct = top.sub(
                        top.sub(f.evaluate(top, top.add(x, eps)), f.evaluate(top, x)),
                        f.evaluate(top, eps),
                    );
                    assert_eq!(l.evaluate(top, x), direct);
                }
            }
        }
    }

    #[test]
    fn delta_expression_examples() {
        let tw = t(5);
        let top = tw.top();
        let sq = Pentanomial::from_ints(tw.mid(), [1, 0, 0, 0, 0]);
        assert_eq!(sq.delta_form(tw.mid()).t, [0, 0, 0, 8].map(|k| tw.mid().from_int(k)));
        for eps in top.elements().skip(1) {
            let n = symmetric_sums(top, eps)[3];
            let got = sq.delta_expression(top, eps);
            assert_eq!(got, top.scale_int(8, n));
            assert!(!got.is_zero());
        }
        let f = Pentanomial::from_ints(tw.mid(), [1, 4, 4, 1, 1]);
        assert_eq!(f.delta_expression(top, Fq3::ZERO), Fq3::ZERO);
    }

    #[test]
    fn delta_expression_is_dickson_determinant_q3_q5() {
        for p in [3, 5] {
            let tw = t(p);
            let top = tw.top();
            let q5 = (p as u64).pow(5);
            let stride = if p == 3 { 1 } else { 13 };
            for idx in (0..q5).step_by(stride) {
                let f = Pentanomial::from_index(tw.mid(), idx).unwrap();
                let form = f.delta_form(tw.mid());
                for eps in top.elements().step_by(stride) {
                    assert_eq!(form.eval(top, eps), f.dickson_determinant(top, eps));
                }
            }
        }
    }

    #[test]
    fn small_examples_all_methods() {
        for p in [3, 5, 7] {
            let tw = t(p);
            let sq = Pentanomial::from_ints(tw.mid(), [1, 0, 0, 0, 0]);
            let zero = Pentanomial::from_ints(tw.mid(), [0; 5]);
            let neg = Pentanomial::from_ints(tw.mid(), [1, -1, -1, 1, 1]);
            for m in Method::ALL {
                assert!(is_planar(&tw, &sq, m).unwrap());
                let v = check_planarity(&tw, &zero, m).unwrap();
                assert!(!v.planar);
                assert_eq!(v.witness, Some(tw.top().from_index(1).unwrap()));
                assert!(is_planar(&tw, &neg, m).unwrap());
            }
        }
    }

    #[test]
    fn three_methods_agree_exhaustively_q3() {
        let tw = t(3);
        let fs: Vec<Pentanomial> =
            (0..243).map(|i| Pentanomial::from_index(tw.mid(), i).unwrap()).collect();
        let per_method: Vec<Vec<Verdict>> =
            Method::ALL.iter().map(|&m| classify_batch(&tw, &fs, m).unwrap()).collect();
        for i in 0..fs.len() {
            let d = &per_method[1][i];
            for other in [&per_method[0][i], &per_method[2][i]] {
                assert_eq!(other.planar, d.planar, "{:?}", fs[i]);
                assert_eq!(other.witness, d.witness, "{:?}", fs[i]);
            }
            let single = check_planarity(&tw, &fs[i], Method::Dickson).unwrap();
            assert_eq!(&single, d);
        }
    }

    #[test]
    fn scalar_multiples_share_planarity_q3() {
        let tw = t(3);
        let mid = tw.mid();
        let top = tw.top();
        for idx in 0..243 {
            let f = Pentanomial::from_index(mid, idx).unwrap();
            let base = is_planar(&tw, &f, Method::Dickson).unwrap();
            for c in mid.elements().skip(1) {
                let g = f.scale(mid, c);
                let eps = top.from_index(idx % 27).unwrap();
                let scaled = f.difference_qpoly(top, eps);
                let expected = QPolynomial { coeffs: scaled.coeffs.map(|x| top.scale(c, x)) };
                assert_eq!(g.difference_qpoly(top, eps), expected);
                assert_eq!(is_planar(&tw, &g, Method::Dickson).unwrap(), base);
            }
        }
    }

    #[test]
    fn vanishing_set_is_frobenius_closed() {
        let tw = t(3);
        let top = tw.top();
        for idx in 0..243 {
            let f = Pentanomial::from_index(tw.mid(), idx).unwrap();
            for eps in top.elements() {
                if f.dickson_determinant(top, eps).is_zero() {
                    assert!(f.dickson_determinant(top, top.frobenius(eps, 1)).is_zero());
                }
            }
        }
    }

    #[test]
    fn matrix_identities_small() {
        for (p, n) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let tw = FieldTower::new(p, n).unwrap();
            let a = verify_matrix_identity_a(&tw).unwrap();
            assert!(a.holds, "A at q = {}: {a:?}", tw.q());
            assert_eq!(a.checked, tw.top().order() - 1);
            assert!(verify_matrix_identity_b(&tw).unwrap().holds, "B at q = {}", tw.q());
        }
    }

    #[test]
    fn matrix_determinants_on_subfield() {
        let tw = t(7);
        let top = tw.top();
        for c in tw.mid().elements().skip(1) {
            let eps = top.embed(c);
            let cube = top.mul(top.mul(eps, eps), eps);
            assert_eq!(det3(top, &matrix_a(top, eps)), top.scale_int(32, cube));
            assert_eq!(det3(top, &matrix_b(top, eps)), top.scale_int(2, cube));
        }
    }

    #[test]
    fn matrices_are_transposed_dickson_matrices() {
        // A_ε and B_ε are the transposed Dickson matrices of the two pentanomials
        // (1,1,1,1/2,1/2) and (1,-1,-1,1,1), so their determinants are Δ itself.
        let tw = t(5);
        let top = tw.top();
        let mid = tw.mid();
        let half = mid.inv(mid.from_int(2)).unwrap();
        let half_pent = Pentanomial::from_coeffs([Fq::ONE, Fq::ONE, Fq::ONE, half, half]);
        let neg_pent = Pentanomial::from_ints(mid, [1, -1, -1, 1, 1]);
        for eps in top.elements() {
            let da = half_pent.difference_qpoly(top, eps).dickson_matrix(top).entries;
            let db = neg_pent.difference_qpoly(top, eps).dickson_matrix(top).entries;
            let (a, b) = (matrix_a(top, eps), matrix_b(top, eps));
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(a[i][j], da[j][i]);
                    assert_eq!(b[i][j], db[j][i]);
                }
            }
        }
    }

    #[test]
    fn rejects_top_level_coefficients() {
        let tw = t(3);
        let mut els = [Element::Mid(Fq::ONE); 5];
        assert!(Pentanomial::from_elements(&els).is_ok());
        els[2] = Element::Top(Fq3::ONE);
        assert!(matches!(Pentanomial::from_elements(&els), Err(Error::LevelMismatch { .. })));
        let capped = tw.with_sweep_limit(26);
        let f = Pentanomial::from_ints(capped.mid(), [1, 0, 0, 0, 0]);
        assert!(matches!(is_planar(&capped, &f, Method::Dickson), Err(Error::ScaleExceeded { .. })));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("gauss".parse::<Method>().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn index_round_trip(idx in 0u64..3125) {
            let tw = t(5);
            let f = Pentanomial::from_index(tw.mid(), idx).unwrap();
            prop_assert_eq!(f.index(5), idx);
            prop_assert_eq!(Pentanomial::from_json(tw.mid(), &f.to_json(tw.mid())).unwrap(), f);
        }
    }
}
