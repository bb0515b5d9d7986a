//! Planar families built from factor triples.
//!
//! Three root-free linearized polynomials `P_i(X) = a_i X^{q^2} + b_i X^q + c_i X`
//! whose coefficients satisfy three symmetry conditions define parameters
//! `(α, β, γ, δ)`. Every `(E, A, B, C, D) ∈ F_q^5` solving
//!
//! ```text
//! -A²D + ABE - B²C                                  = 2α
//! A²C - ABD - 2ACD + 2AE² + B²E - 2BCE + 2BD²       = 2β
//! A²E - ABC + 2AC² - 2ADE + B²D - 2BCD + 2BE²       = 2γ
//! A³ + B³ + 4C³ - 12CDE + 4D³ + 4E³                 = 2δ
//! ```
//!
//! gives a planar pentanomial, because its determinant `Δ_{F_ε}` is then
//! `4 · ∏ (a_i ε^q + b_i ε^{q^2} + c_i ε)`, a product of root-free factors.
//! When `β = γ` the same product can be written with `a_i` and `b_i` on
//! `ε^{q^2}` and `ε^q` respectively; see [`verify_product_factorization`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldTower, Fq, Fq3, MidField, TopField};
use crate::linearized::{norm_form, QPolynomial};
use crate::planarity::{is_planar, IdentityCheck, Method, Pentanomial};

/// The constant relating `Δ_{F_ε}` to the product of the three factors.
pub const FACTORIZATION_CONSTANT: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorTriple {
    pub a: Fq,
    pub b: Fq,
    pub c: Fq,
}

impl FactorTriple {
    pub fn new(a: Fq, b: Fq, c: Fq) -> Self {
        FactorTriple { a, b, c }
    }

    pub fn from_ints(mid: &MidField, [a, b, c]: [i64; 3]) -> Self {
        FactorTriple::new(mid.from_int(a), mid.from_int(b), mid.from_int(c))
    }

    pub fn norm(&self, mid: &MidField) -> Fq {
        norm_form(mid, self.a, self.b, self.c)
    }

    pub fn is_admissible(&self, mid: &MidField) -> bool {
        !self.norm(mid).is_zero()
    }

    /// `a X^{q^2} + b X^q + c X`.
    pub fn qpoly(&self, top: &TopField) -> QPolynomial {
        QPolynomial::from_mid(top, self.a, self.b, self.c)
    }

    /// `a ε^q + b ε^{q^2} + c ε`: the same triple with the two Frobenius slots exchanged.
    pub fn mirrored_qpoly(&self, top: &TopField) -> QPolynomial {
        QPolynomial::from_mid(top, self.b, self.a, self.c)
    }

    pub fn rotate(&self) -> Self {
        FactorTriple::new(self.b, self.c, self.a)
    }

    fn describe(&self, mid: &MidField) -> String {
        format!("{}, {}, {}", mid.to_json(self.a), mid.to_json(self.b), mid.to_json(self.c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemParams {
    pub alpha: Fq,
    pub beta: Fq,
    pub gamma: Fq,
    pub delta: Fq,
}

impl SystemParams {
    pub fn new(alpha: Fq, beta: Fq, gamma: Fq, delta: Fq) -> Self {
        SystemParams { alpha, beta, gamma, delta }
    }

    pub fn from_ints(mid: &MidField, [a, b, g, d]: [i64; 4]) -> Self {
        SystemParams::new(mid.from_int(a), mid.from_int(b), mid.from_int(g), mid.from_int(d))
    }

    pub fn as_array(&self) -> [Fq; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryCondition {
    /// `a₁a₂a₃ = b₁b₂b₃ = c₁c₂c₃`
    Products,
    /// `Σ aab = Σ bbc = Σ acc`
    Beta,
    /// `Σ aac = Σ bcc = Σ abb`
    Gamma,
}

impl fmt::Display for SymmetryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryCondition::Products => "products: a1a2a3 = b1b2b3 = c1c2c3",
            SymmetryCondition::Beta => {
                "beta sums: a1a2b3 + a1b2a3 + b1a2a3 = b1b2c3 + b1c2b3 + c1b2b3 = a1c2c3 + c1c2a3 + c1a2c3"
            }
            SymmetryCondition::Gamma => {
                "gamma sums: a1a2c3 + a1c2a3 + c1a2a3 = b1c2c3 + c1c2b3 + c1b2c3 = a1b2b3 + b1a2b3 + b1b2a3"
            }
        })
    }
}

/// `Σ x₁x₂y₃ + x₁y₂x₃ + y₁x₂x₃` over the three positions of `y`.
fn two_one(mid: &MidField, x: [Fq; 3], y: [Fq; 3]) -> Fq {
    let m = |u: Fq, v: Fq, w: Fq| mid.mul(mid.mul(u, v), w);
    mid.add(mid.add(m(x[0], x[1], y[2]), m(x[0], y[1], x[2])), m(y[0], x[1], x[2]))
}

/// `(α, β, γ, δ)` of three admissible, symmetric factor triples.
pub fn system_params(mid: &MidField, triples: &[FactorTriple; 3]) -> Result<SystemParams> {
    for (i, t) in triples.iter().enumerate() {
        if !t.is_admissible(mid) {
            return Err(Error::InadmissibleTriple { index: i + 1, triple: t.describe(mid) });
        }
    }
    let a = triples.map(|t| t.a);
    let b = triples.map(|t| t.b);
    let c = triples.map(|t| t.c);
    let prod = |v: [Fq; 3]| mid.mul(mid.mul(v[0], v[1]), v[2]);
    let all_equal = |x: Fq, y: Fq, z: Fq| x == y && y == z;

    let alpha = prod(a);
    if !all_equal(alpha, prod(b), prod(c)) {
        return Err(Error::SymmetryViolated(SymmetryCondition::Products));
    }
    let beta = two_one(mid, a, b);
    if !all_equal(beta, two_one(mid, b, c), two_one(mid, c, a)) {
        return Err(Error::SymmetryViolated(SymmetryCondition::Beta));
    }
    let gamma = two_one(mid, a, c);
    if !all_equal(gamma, two_one(mid, c, b), two_one(mid, b, a)) {
        return Err(Error::SymmetryViolated(SymmetryCondition::Gamma));
    }
    let m = |u: Fq, v: Fq, w: Fq| mid.mul(mid.mul(u, v), w);
    let delta = [
        m(a[0], b[1], c[2]),
        m(a[0], c[1], b[2]),
        m(b[0], a[1], c[2]),
        m(b[0], c[1], a[2]),
        m(c[0], a[1], b[2]),
        m(c[0], b[1], a[2]),
    ]
    .iter()
    .fold(Fq::ZERO, |acc, &t| mid.add(acc, t));
    Ok(SystemParams { alpha, beta, gamma, delta })
}

/// `(a, b, c), (b, c, a), (c, a, b)`.
pub fn cyclic_triples(a: Fq, b: Fq, c: Fq) -> [FactorTriple; 3] {
    let t = FactorTriple::new(a, b, c);
    [t, t.rotate(), t.rotate().rotate()]
}

/// Closed-form parameters of the cyclic triples of `(a, b, c)`.
pub fn cyclic_params(mid: &MidField, a: Fq, b: Fq, c: Fq) -> Result<SystemParams> {
    let t = FactorTriple::new(a, b, c);
    if !t.is_admissible(mid) {
        return Err(Error::InadmissibleTriple { index: 1, triple: t.describe(mid) });
    }
    let m = |u: Fq, v: Fq, w: Fq| mid.mul(mid.mul(u, v), w);
    let sum = |xs: &[Fq]| xs.iter().fold(Fq::ZERO, |acc, &x| mid.add(acc, x));
    let abc = m(a, b, c);
    Ok(SystemParams {
        alpha: abc,
        beta: sum(&[m(a, a, b), m(a, c, c), m(b, b, c)]),
        gamma: sum(&[m(a, a, c), m(a, b, b), m(b, c, c)]),
        delta: sum(&[m(a, a, a), m(b, b, b), m(c, c, c), mid.scale_int(3, abc)]),
    })
}

/// Left-hand sides of the four equations at `f`.
pub fn system_lhs(mid: &MidField, f: &Pentanomial) -> [Fq; 4] {
    let Pentanomial { e, a, b, c, d } = *f;
    let m = |u: Fq, v: Fq, w: Fq| mid.mul(mid.mul(u, v), w);
    let k = |n: i64, x: Fq| mid.scale_int(n, x);
    let sum = |xs: &[Fq]| xs.iter().fold(Fq::ZERO, |acc, &x| mid.add(acc, x));
    [
        sum(&[k(-1, m(a, a, d)), m(a, b, e), k(-1, m(b, b, c))]),
        sum(&[
            m(a, a, c),
            k(-1, m(a, b, d)),
            k(-2, m(a, c, d)),
            k(2, m(a, e, e)),
            m(b, b, e),
            k(-2, m(b, c, e)),
            k(2, m(b, d, d)),
        ]),
        sum(&[
            m(a, a, e),
            k(-1, m(a, b, c)),
            k(2, m(a, c, c)),
            k(-2, m(a, d, e)),
            m(b, b, d),
            k(-2, m(b, c, d)),
            k(2, m(b, e, e)),
        ]),
        sum(&[
            m(a, a, a),
            m(b, b, b),
            k(4, m(c, c, c)),
            k(-12, m(c, d, e)),
            k(4, m(d, d, d)),
            k(4, m(e, e, e)),
        ]),
    ]
}

pub fn satisfies_system(mid: &MidField, f: &Pentanomial, params: &SystemParams) -> bool {
    system_lhs(mid, f) == params.as_array().map(|x| mid.add(x, x))
}

/// All solutions in `F_q^5`, ordered by [`Pentanomial::index`].
///
/// The first equation is linear in `C` with coefficient `-B²`: for `B ≠ 0` it
/// fixes `C`, and for `B = 0` it reduces to `-A²D = 2α` and leaves `C` free.
pub fn solve_system(tower: &FieldTower, params: &SystemParams) -> Result<Vec<Pentanomial>> {
    let mid = tower.mid();
    let q = mid.order() as u64;
    tower.check_sweep(q.pow(5))?;
    let target = mid.add(params.alpha, params.alpha);
    let mut solutions: Vec<Pentanomial> = (0..q.pow(4))
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let digit = |k: u32| mid.from_index(prefix / q.pow(k) % q).expect("digit below q");
            let (e, a, b, d) = (digit(0), digit(1), digit(2), digit(3));
            candidate_c(mid, e, a, b, d, target)
                .into_iter()
                .map(move |c| Pentanomial::new(e, a, b, c, d))
                .filter(|f| satisfies_system(mid, f, params))
        })
        .collect();
    solutions.sort_by_key(|f| f.index(mid.order()));
    debug_assert!(
        solutions.iter().all(|f| is_planar(tower, f, Method::Dickson).unwrap_or(true)),
        "a solution of the system is not planar"
    );
    Ok(solutions)
}

/// Values of `C` compatible with `-A²D + ABE - B²C = target`.
fn candidate_c(mid: &MidField, e: Fq, a: Fq, b: Fq, d: Fq, target: Fq) -> Vec<Fq> {
    let rest = mid.sub(mid.mul(mid.mul(a, b), e), mid.mul(mid.mul(a, a), d));
    let bb = mid.mul(b, b);
    match mid.inv(bb) {
        Ok(inv) => vec![mid.mul(mid.sub(rest, target), inv)],
        Err(_) if rest == target => mid.elements().collect(),
        Err(_) => Vec::new(),
    }
}

/// Per-ε check of `Δ_{F_ε} = 4 · ∏ (a_i ε^q + b_i ε^{q^2} + c_i ε)` over `F_{q^3}^*`.
pub fn verify_product_factorization(
    tower: &FieldTower,
    triples: &[FactorTriple; 3],
    f: &Pentanomial,
) -> Result<IdentityCheck> {
    let top = tower.top();
    let polys = triples.map(|t| t.mirrored_qpoly(top));
    check_factorization(tower, f, &polys)
}

/// The same check with each factor written as `a_i ε^{q^2} + b_i ε^q + c_i ε`.
/// This agrees with [`verify_product_factorization`] whenever `β = γ`.
pub fn verify_product_factorization_unmirrored(
    tower: &FieldTower,
    triples: &[FactorTriple; 3],
    f: &Pentanomial,
) -> Result<IdentityCheck> {
    let top = tower.top();
    let polys = triples.map(|t| t.qpoly(top));
    check_factorization(tower, f, &polys)
}

fn check_factorization(
    tower: &FieldTower,
    f: &Pentanomial,
    factors: &[QPolynomial; 3],
) -> Result<IdentityCheck> {
    let top = tower.top();
    let form = f.delta_form(tower.mid());
    IdentityCheck::sweep(tower, |eps| {
        let product = factors.iter().fold(Fq3::ONE, |acc, l| top.mul(acc, l.evaluate(top, eps)));
        form.eval(top, eps) != top.scale_int(FACTORIZATION_CONSTANT, product)
    })
}

/// Triples `(1,0,0), (0,1,0), (0,0,1)`: `α = β = γ = 0`, `δ = 1`.
pub fn trinomial_triples(mid: &MidField) -> [FactorTriple; 3] {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|t| FactorTriple::from_ints(mid, t))
}

/// Triples `(1,-1,1), (1,1,-1), (-1,1,1)`: `α = -1`, `β = γ = 1`, `δ = -2`.
pub fn quadrinomial_triples(mid: &MidField) -> [FactorTriple; 3] {
    [[1, -1, 1], [1, 1, -1], [-1, 1, 1]].map(|t| FactorTriple::from_ints(mid, t))
}

/// `ω = 3D² - 3DE + E²`.
pub fn omega(mid: &MidField, d: Fq, e: Fq) -> Fq {
    let dd = mid.scale_int(3, mid.mul(d, d));
    let de = mid.scale_int(3, mid.mul(d, e));
    mid.add(mid.sub(dd, de), mid.mul(e, e))
}

/// Triples `(4,4,0), (E,0,E), (0,ω,ω)`: `α = 0`, `β = γ = 4Eω`, `δ = 8Eω`.
pub fn two_param_triples(mid: &MidField, d: Fq, e: Fq) -> [FactorTriple; 3] {
    let w = omega(mid, d, e);
    let four = mid.from_int(4);
    [
        FactorTriple::new(four, four, Fq::ZERO),
        FactorTriple::new(e, Fq::ZERO, e),
        FactorTriple::new(Fq::ZERO, w, w),
    ]
}

/// `E X^2 + C X^{2q} + D X^{2q^2}` and whether `C³ + D³ + E³ - 3CDE = 1/2`.
/// The condition is sufficient for planarity, not necessary.
pub fn family_trinomial(mid: &MidField, c: Fq, d: Fq, e: Fq) -> (Pentanomial, bool) {
    let half = mid.inv(mid.from_int(2)).expect("odd characteristic");
    let f = Pentanomial::new(e, Fq::ZERO, Fq::ZERO, c, d);
    (f, norm_form(mid, c, d, e) == half)
}

/// `-X^2 + 2X^{q^2+1} + X^{2q} - X^{2q^2}`, planar for every odd `q`.
pub fn family_quadrinomial(mid: &MidField) -> Pentanomial {
    Pentanomial::from_ints(mid, [-1, 0, 2, 1, -1])
}

/// The solution `(-B/2, 0, B, 2/B², -B/2)` for the first `B ∈ F_q^*` with
/// `B³ = 4`, when such a cube root exists.
pub fn quadrinomial_witness(mid: &MidField) -> Option<(Fq, Pentanomial)> {
    let four = mid.from_int(4);
    let b = mid.elements().skip(1).find(|&b| mid.mul(mid.mul(b, b), b) == four)?;
    let two = mid.from_int(2);
    let minus_half_b = mid.neg(mid.div(b, two).ok()?);
    let c = mid.div(two, mid.mul(b, b)).ok()?;
    Some((b, Pentanomial::new(minus_half_b, Fq::ZERO, b, c, minus_half_b)))
}

/// `E X^2 + 2(E-D) X^{q+1} + 2D X^{q^2+1} + (E-D) X^{2q} + D X^{2q^2}` and
/// whether `E·ω ≠ 0`, which is equivalent to planarity.
pub fn family_two_param(mid: &MidField, d: Fq, e: Fq) -> (Pentanomial, bool) {
    let e_minus_d = mid.sub(e, d);
    let f = Pentanomial::new(e, mid.add(e_minus_d, e_minus_d), mid.add(d, d), e_minus_d, d);
    (f, !mid.mul(e, omega(mid, d, e)).is_zero())
}

/// `(f_{1,-1,-1,1,1}, f_{1,1,1,1/2,1/2})`, both planar for every odd `q`.
pub fn family_pentanomials(mid: &MidField) -> (Pentanomial, Pentanomial) {
    let half = mid.inv(mid.from_int(2)).expect("odd characteristic");
    (
        Pentanomial::from_ints(mid, [1, -1, -1, 1, 1]),
        Pentanomial::new(Fq::ONE, Fq::ONE, Fq::ONE, half, half),
    )
}

/// `X^2 + X^{q+1} + X^{q^2+1} + X^{2q} + X^{2q^2}`, the all-ones pentanomial.
/// It is not planar; `f_{1,1,1,1/2,1/2}` is the planar member of this shape.
pub fn all_ones_pentanomial(mid: &MidField) -> Pentanomial {
    Pentanomial::from_ints(mid, [1; 5])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Trinomial,
    QuadTeo1,
    TwoParam,
    PentNeg,
    PentHalf,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Trinomial, Family::QuadTeo1, Family::TwoParam, Family::PentNeg, Family::PentHalf];

    pub fn name(self) -> &'static str {
        match self {
            Family::Trinomial => "trinomial",
            Family::QuadTeo1 => "quad-teo1",
            Family::TwoParam => "two-param",
            Family::PentNeg => "pent-neg",
            Family::PentHalf => "pent-half",
        }
    }

    /// Parameter names in the order [`Family::construct`] expects them.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::Trinomial => &["C", "D", "E"],
            Family::TwoParam => &["D", "E"],
            _ => &[],
        }
    }

    /// Whether the predicate is equivalent to planarity rather than sufficient.
    pub fn is_characterization(self) -> bool {
        matches!(self, Family::TwoParam)
    }

    /// The member for `params` and its predicate (always true for the fixed families).
    pub fn construct(self, mid: &MidField, params: &[Fq]) -> Result<(Pentanomial, bool)> {
        if params.len() != self.parameters().len() {
            return Err(Error::OutOfRange(format!(
                "family {} takes {} parameter(s), got {}",
                self.name(),
                self.parameters().len(),
                params.len()
            )));
        }
        Ok(match self {
            Family::Trinomial => family_trinomial(mid, params[0], params[1], params[2]),
            Family::TwoParam => family_two_param(mid, params[0], params[1]),
            Family::QuadTeo1 => (family_quadrinomial(mid), true),
            Family::PentNeg => (family_pentanomials(mid).0, true),
            Family::PentHalf => (family_pentanomials(mid).1, true),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            format!("unknown family {s:?} (expected trinomial, quad-teo1, two-param, pent-neg or pent-half)")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u32) -> FieldTower {
        FieldTower::new(p, 1).unwrap()
    }

    #[test]
    fn params_of_known_triples() {
        for p in [3, 5, 7, 11] {
            let tw = t(p);
            let mid = tw.mid();
            assert_eq!(
                system_params(mid, &trinomial_triples(mid)).unwrap(),
                SystemParams::from_ints(mid, [0, 0, 0, 1])
            );
            for tr in quadrinomial_triples(mid) {
                assert_eq!(tr.norm(mid), mid.from_int(4));
            }
            assert_eq!(
                system_params(mid, &quadrinomial_triples(mid)).unwrap(),
                SystemParams::from_ints(mid, [-1, 1, 1, -2])
            );
            for d in mid.elements() {
                for e in mid.elements() {
                    let w = omega(mid, d, e);
                    let ew = mid.mul(e, w);
                    match system_params(mid, &two_param_triples(mid, d, e)) {
                        Ok(sp) => {
                            assert!(!ew.is_zero());
                            assert_eq!(sp.alpha, Fq::ZERO);
                            assert_eq!(sp.beta, mid.scale_int(4, ew));
                            assert_eq!(sp.gamma, mid.scale_int(4, ew));
                            assert_eq!(sp.delta, mid.scale_int(8, ew));
                        }
                        Err(Error::InadmissibleTriple { .. }) => assert!(ew.is_zero()),
                        Err(other) => panic!("unexpected {other}"),
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_violation_is_reported() {
        let tw = t(5);
        let mid = tw.mid();
        let ts = [[1, 0, 1], [1, 1, 0], [1, 0, 1]].map(|x| FactorTriple::from_ints(mid, x));
        assert_eq!(
            system_params(mid, &ts),
            Err(Error::SymmetryViolated(SymmetryCondition::Products))
        );
        let ts = [[1, 1, 1], [1, 0, 0], [0, 0, 1]].map(|x| FactorTriple::from_ints(mid, x));
        assert!(matches!(system_params(mid, &ts), Err(Error::InadmissibleTriple { index: 1, .. })));
    }

    #[test]
    fn cyclic_examples() {
        let tw = t(3);
        let mid = tw.mid();
        assert_eq!(
            cyclic_params(mid, Fq::ONE, Fq::ZERO, Fq::ZERO).unwrap(),
            SystemParams::from_ints(mid, [0, 0, 0, 1])
        );
        assert!(matches!(
            cyclic_params(mid, Fq::ONE, Fq::ONE, Fq::ONE),
            Err(Error::InadmissibleTriple { .. })
        ));
    }

    #[test]
    fn cyclic_matches_general_params_exhaustively() {
        for p in [3, 5] {
            let tw = t(p);
            let mid = tw.mid();
            for a in mid.elements() {
                for b in mid.elements() {
                    for c in mid.elements() {
                        let cyc = cyclic_params(mid, a, b, c);
                        let gen = system_params(mid, &cyclic_triples(a, b, c));
                        if FactorTriple::new(a, b, c).is_admissible(mid) {
                            assert_eq!(cyc.unwrap(), gen.unwrap());
                        } else {
                            assert!(cyc.is_err() && gen.is_err());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn solve_trinomial_params_q3() {
        let tw = t(3);
        let mid = tw.mid();
        let sols = solve_system(&tw, &SystemParams::from_ints(mid, [0, 0, 0, 1])).unwrap();
        assert!(!sols.is_empty());
        for c in mid.elements() {
            for d in mid.elements() {
                for e in mid.elements() {
                    let (f, pred) = family_trinomial(mid, c, d, e);
                    // in F_3 the predicate is C + D + E = 2
                    let linear = mid.add(mid.add(c, d), e) == mid.from_int(2);
                    assert_eq!(pred, linear);
                    if pred {
                        assert!(sols.contains(&f));
                    }
                }
            }
        }
        let idx: Vec<u64> = sols.iter().map(|f| f.index(3)).collect();
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn solve_quadrinomial_params_q5() {
        let tw = t(5);
        let mid = tw.mid();
        let (b, witness) = quadrinomial_witness(mid).unwrap();
        assert_eq!(b, mid.from_int(4));
        assert_eq!(witness, Pentanomial::from_ints(mid, [-2, 0, 4, 2, -2]));
        let sols = solve_system(&tw, &SystemParams::from_ints(mid, [-1, 1, 1, -2])).unwrap();
        assert!(sols.contains(&witness));
        // B²/2 times the witness is the fixed quadrinomial
        let k = mid.div(mid.mul(b, b), mid.from_int(2)).unwrap();
        assert_eq!(witness.scale(mid, k), family_quadrinomial(mid));
    }

    #[test]
    fn empty_solution_set_is_not_an_error() {
        let tw = t(3);
        let mid = tw.mid();
        // nothing satisfies the quartic equation A³+B³+4C³-12CDE+4D³+4E³ = 2δ together
        // with the others for these parameters; the solver must just return empty
        let params = SystemParams::from_ints(mid, [0, 2, 1, 0]);
        assert_eq!(solve_system(&tw, &params).unwrap(), vec![]);
    }

    #[test]
    fn factorization_constant_is_four() {
        for p in [3, 5, 7] {
            let tw = t(p);
            let mid = tw.mid();
            for ts in [trinomial_triples(mid), quadrinomial_triples(mid)] {
                let params = system_params(mid, &ts).unwrap();
                for f in solve_system(&tw, &params).unwrap() {
                    assert!(verify_product_factorization(&tw, &ts, &f).unwrap().holds);
                    assert!(verify_product_factorization_unmirrored(&tw, &ts, &f).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn printed_factor_order_needs_beta_equal_gamma() {
        let tw = t(5);
        let mid = tw.mid();
        let two = mid.from_int(2);
        let ts = cyclic_triples(Fq::ONE, two, Fq::ZERO);
        let params = system_params(mid, &ts).unwrap();
        assert_ne!(params.beta, params.gamma);
        let sols = solve_system(&tw, &params).unwrap();
        assert!(!sols.is_empty());
        let mut printed_failures = 0;
        for f in &sols {
            assert!(verify_product_factorization(&tw, &ts, f).unwrap().holds);
            if !verify_product_factorization_unmirrored(&tw, &ts, f).unwrap().holds {
                printed_failures += 1;
            }
            assert!(is_planar(&tw, f, Method::Dickson).unwrap());
        }
        assert_eq!(printed_failures, sols.len());
    }

    #[test]
    fn family_examples() {
        let t3 = t(3);
        let m3 = t3.mid();
        let v = |k| m3.from_int(k);
        let (f, pred) = family_trinomial(m3, v(0), v(0), v(2));
        assert!(pred);
        assert!(is_planar(&t3, &f, Method::Definition).unwrap());

        let t5 = t(5);
        let m5 = t5.mid();
        let (f, pred) = family_trinomial(m5, Fq::ZERO, Fq::ZERO, Fq::ONE);
        assert!(!pred);
        assert!(is_planar(&t5, &f, Method::Dickson).unwrap());
        for c in m5.elements() {
            assert!(!family_trinomial(m5, c, c, c).1);
        }

        let (f, pred) = family_two_param(m5, Fq::ZERO, Fq::ONE);
        assert!(pred);
        assert_eq!(f, Pentanomial::from_ints(m5, [1, 2, 0, 1, 0]));
        let (f, pred) = family_two_param(m5, Fq::ONE, Fq::ZERO);
        assert!(!pred);
        assert!(!is_planar(&t5, &f, Method::Dickson).unwrap());
        let (f, pred) = family_two_param(m5, Fq::ZERO, Fq::ZERO);
        assert!(!pred && f.is_zero());

        let (neg, half) = family_pentanomials(m3);
        assert_eq!(neg, Pentanomial::from_ints(m3, [1, 2, 2, 1, 1]));
        assert_eq!(half, Pentanomial::from_ints(m3, [1, 1, 1, 2, 2]));
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("quad".parse::<Family>().is_err());
        let tw = t(3);
        assert!(Family::TwoParam.construct(tw.mid(), &[Fq::ONE]).is_err());
        assert_eq!(
            Family::QuadTeo1.construct(tw.mid(), &[]).unwrap(),
            (family_quadrinomial(tw.mid()), true)
        );
    }
}
