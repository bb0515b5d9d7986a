//! The field tower `F_p ⊂ F_q ⊂ F_{q^3}`.
//!
//! `F_q` is built as `F_p[x]/(m)` and `F_{q^3}` as `F_q[y]/(g)` with `g` a monic
//! cubic. Elements of `F_q` are stored as their index in enumeration order,
//! `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`, so the least significant coefficient
//! varies fastest. Elements of `F_{q^3}` are three `F_q` coefficients in the
//! basis `1, y, y^2`.
//!
//! Moduli that are not supplied are chosen as the first monic irreducible
//! polynomial of the required degree in that same enumeration order.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// Largest supported `q`; keeps `q^3` and all indices well inside `u64`.
pub const MAX_Q: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Prime,
    Mid,
    Top,
}

/// An element of `F_q`, stored as its enumeration index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An element of `F_{q^3}` as coefficients `(c_0, c_1, c_2)` of `c_0 + c_1 y + c_2 y^2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Fq3([Fq; 3]);

impl Fq3 {
    pub const ZERO: Fq3 = Fq3([Fq::ZERO; 3]);
    pub const ONE: Fq3 = Fq3([Fq::ONE, Fq::ZERO, Fq::ZERO]);

    pub fn new(coeffs: [Fq; 3]) -> Self {
        Fq3(coeffs)
    }

    pub fn coeffs(self) -> [Fq; 3] {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self == Fq3::ZERO
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// A field element tagged with the level of the tower it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    Prime(u32),
    Mid(Fq),
    Top(Fq3),
}

impl Element {
    pub fn level(&self) -> Level {
        match self {
            Element::Prime(_) => Level::Prime,
            Element::Mid(_) => Level::Mid,
            Element::Top(_) => Level::Top,
        }
    }

    pub fn as_mid(&self) -> Result<Fq> {
        match *self {
            Element::Mid(a) => Ok(a),
            other => Err(Error::LevelMismatch { expected: Level::Mid, found: other.level() }),
        }
    }

    pub fn as_top(&self) -> Result<Fq3> {
        match *self {
            Element::Top(a) => Ok(a),
            other => Err(Error::LevelMismatch { expected: Level::Top, found: other.level() }),
        }
    }
}

fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not an odd prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// Reduces a signed integer literal into `0..p`.
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

/// Dense polynomials over `F_p`, ascending coefficients, used for modulus search.
mod poly {
    use super::PrimeField;

    pub(super) fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub(super) fn rem(fp: &PrimeField, a: &[u32], m: &[u32]) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = fp.inv(m[dm]).expect("nonzero leading coefficient");
        while r.len() > dm {
            let top = r.len() - 1;
            let c = fp.mul(r[top], lead_inv);
            let shift = top - dm;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = fp.sub(r[shift + i], fp.mul(c, mi));
            }
            r = trim(r);
        }
        r
    }

    pub(super) fn mulmod(fp: &PrimeField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = fp.add(out[i + j], fp.mul(ai, bj));
            }
        }
        rem(fp, &out, m)
    }

    pub(super) fn powmod(fp: &PrimeField, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut r = rem(fp, &[1], m);
        let mut b = rem(fp, base, m);
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(fp, &r, &b, m);
            }
            b = mulmod(fp, &b, &b, m);
            e >>= 1;
        }
        r
    }

    pub(super) fn gcd(fp: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(fp, &a, &b);
            a = b;
            b = r;
        }
        a
    }

    /// A polynomial of degree `n` is irreducible iff it shares no factor with
    /// `x^{p^k} - x` for `k <= n/2`.
    pub(super) fn is_irreducible(fp: &PrimeField, m: &[u32]) -> bool {
        let n = m.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let p = fp.characteristic() as u64;
        let mut xpk = vec![0, 1];
        for _ in 1..=n / 2 {
            xpk = powmod(fp, &xpk, p, m);
            let mut diff = xpk.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = fp.sub(diff[1], 1);
            if gcd(fp, m, &diff).len() > 1 {
                return false;
            }
        }
        true
    }
}

/// `F_q = F_p[x]/(m)`.
#[derive(Debug, Clone)]
pub struct MidField {
    prime: PrimeField,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl MidField {
    /// Builds `F_{p^n}`, validating `modulus` or searching for the first monic
    /// irreducible of degree `n`.
    pub fn new(p: u32, n: u32, modulus: Option<&[i64]>) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if n == 0 {
            return Err(Error::InvalidField("extension degree n must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(n).filter(|&q| q < MAX_Q).ok_or_else(|| {
            Error::InvalidField(format!("q = {p}^{n} exceeds the supported maximum {MAX_Q}"))
        })? as u32;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 {
                    return Err(Error::MalformedModulus(format!(
                        "modulus for F_q must have {} coefficients, got {}",
                        n + 1,
                        m.len()
                    )));
                }
                let m: Vec<u32> = m.iter().map(|&c| prime.reduce(c)).collect();
                if m[n as usize] != 1 {
                    return Err(Error::MalformedModulus("modulus for F_q must be monic".into()));
                }
                if !poly::is_irreducible(&prime, &m) {
                    return Err(Error::ReducibleModulus { modulus: format!("{m:?}"), over: "F_p" });
                }
                m
            }
            None => Self::first_irreducible(&prime, n),
        };

        let mut field = MidField { prime, n, q, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    fn first_irreducible(prime: &PrimeField, n: u32) -> Vec<u32> {
        let p = prime.characteristic();
        let count = (p as u64).pow(n);
        (0..count)
            .map(|idx| {
                let mut m = digits_of(idx, p, n as usize);
                m.push(1);
                m
            })
            .find(|m| poly::is_irreducible(prime, m))
            .expect("an irreducible polynomial of every degree exists")
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let da = self.digits_raw(a);
        let db = self.digits_raw(b);
        let r = poly::mulmod(&self.prime, &da, &db, &self.modulus);
        self.index_of(&r)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul_slow(x, g);
                    k += 1;
                }
                k == order
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..order {
            exp[k as usize] = x;
            exp[(k + order) as usize] = x;
            log[x as usize] = k;
            x = self.mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    fn digits_raw(&self, mut a: u32) -> Vec<u32> {
        let p = self.prime.characteristic();
        let mut out = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            out.push(a % p);
            a /= p;
        }
        out
    }

    fn index_of(&self, digits: &[u32]) -> u32 {
        let p = self.prime.characteristic();
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    pub fn prime(&self) -> &PrimeField {
        &self.prime
    }

    pub fn characteristic(&self) -> u32 {
        self.prime.characteristic()
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Ascending coefficients of `m`, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficients over `F_p` in the basis `1, x, ..., x^{n-1}`.
    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        self.digits_raw(a.0)
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Fq> {
        if coeffs.len() > self.n as usize {
            return Err(Error::OutOfRange(format!(
                "{} coefficients given for an element of F_q with n = {}",
                coeffs.len(),
                self.n
            )));
        }
        let mut d: Vec<u32> = coeffs.iter().map(|&c| self.prime.reduce(c)).collect();
        d.resize(self.n as usize, 0);
        Ok(Fq(self.index_of(&d)))
    }

    pub fn from_index(&self, idx: u64) -> Result<Fq> {
        if idx >= self.q as u64 {
            return Err(Error::OutOfRange(format!("index {idx} not below q = {}", self.q)));
        }
        Ok(Fq(idx as u32))
    }

    /// The image of an integer under `Z -> F_p ⊂ F_q`.
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(self.prime.reduce(v))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(Fq)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.n == 1 {
            return Fq(self.prime.add(a.0, b.0));
        }
        let p = self.prime.characteristic();
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.n {
            out += self.prime.add(x % p, y % p) * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Fq(out)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.n == 1 {
            return Fq(self.prime.neg(a.0));
        }
        let p = self.prime.characteristic();
        let mut x = a.0;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.n {
            out += self.prime.neg(x % p) * place;
            place *= p;
            x /= p;
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        if self.n == 1 {
            return Fq(self.prime.sub(a.0, b.0));
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        Fq(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(Fq(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let order = (self.q - 1) as u64;
        let k = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        Fq(self.exp[k as usize])
    }

    /// Multiplies `a` by the integer `k`.
    pub fn scale_int(&self, k: i64, a: Fq) -> Fq {
        self.mul(self.from_int(k), a)
    }

    /// JSON form: a plain integer when `n = 1`, otherwise the coefficient list.
    pub fn to_json(&self, a: Fq) -> Value {
        if self.n == 1 {
            Value::from(a.0)
        } else {
            Value::from(self.coeffs(a))
        }
    }

    pub fn from_json(&self, v: &Value) -> Result<Fq> {
        match v {
            Value::Number(num) => {
                let k = num
                    .as_i64()
                    .ok_or_else(|| Error::OutOfRange(format!("not an integer: {num}")))?;
                Ok(self.from_int(k))
            }
            Value::Array(items) => {
                let ints = items
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| Error::OutOfRange(format!("not an integer: {x}"))))
                    .collect::<Result<Vec<_>>>()?;
                self.from_coeffs(&ints)
            }
            other => Err(Error::OutOfRange(format!("expected an F_q element, found {other}"))),
        }
    }
}

fn digits_of(mut idx: u64, base: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % base as u64) as u32);
        idx /= base as u64;
    }
    out
}

/// `F_{q^3} = F_q[y]/(g)`.
#[derive(Debug, Clone)]
pub struct TopField {
    mid: MidField,
    /// `(g_0, g_1, g_2)` of `g = y^3 + g_2 y^2 + g_1 y + g_0`.
    modulus: [Fq; 3],
    /// `frob[k - 1] = (y^{q^k}, y^{2 q^k})`.
    frob: [[Fq3; 2]; 2],
}

impl TopField {
    pub fn new(mid: MidField, modulus: Option<&[Fq]>) -> Result<Self> {
        let modulus = match modulus {
            Some(g) => {
                if g.len() != 4 {
                    return Err(Error::MalformedModulus(format!(
                        "modulus for F_q^3 must have 4 coefficients, got {}",
                        g.len()
                    )));
                }
                if g[3] != Fq::ONE {
                    return Err(Error::MalformedModulus("modulus for F_q^3 must be monic".into()));
                }
                let g = [g[0], g[1], g[2]];
                if !cubic_is_irreducible(&mid, g) {
                    return Err(Error::ReducibleModulus {
                        modulus: format!("{:?}", g.map(|c| mid.coeffs(c))),
                        over: "F_q",
                    });
                }
                g
            }
            None => {
                let q = mid.order() as u64;
                (0..q * q * q)
                    .map(|idx| {
                        [Fq((idx % q) as u32), Fq(((idx / q) % q) as u32), Fq((idx / (q * q)) as u32)]
                    })
                    .find(|&g| cubic_is_irreducible(&mid, g))
                    .expect("an irreducible cubic exists over every finite field")
            }
        };
        let mut top = TopField { mid, modulus, frob: [[Fq3::ZERO; 2]; 2] };
        let y = Fq3([Fq::ZERO, Fq::ONE, Fq::ZERO]);
        let q = top.mid.order() as u64;
        for k in 0..2 {
            let yk = top.pow(y, q.pow(k as u32 + 1));
            top.frob[k] = [yk, top.mul(yk, yk)];
        }
        Ok(top)
    }

    pub fn mid(&self) -> &MidField {
        &self.mid
    }

    /// `(g_0, g_1, g_2, 1)`.
    pub fn modulus(&self) -> [Fq; 4] {
        [self.modulus[0], self.modulus[1], self.modulus[2], Fq::ONE]
    }

    pub fn order(&self) -> u64 {
        let q = self.mid.order() as u64;
        q * q * q
    }

    pub fn index(&self, x: Fq3) -> u64 {
        let q = self.mid.order() as u64;
        x.0[0].0 as u64 + q * (x.0[1].0 as u64 + q * x.0[2].0 as u64)
    }

    pub fn from_index(&self, idx: u64) -> Result<Fq3> {
        if idx >= self.order() {
            return Err(Error::OutOfRange(format!("index {idx} not below q^3 = {}", self.order())));
        }
        Ok(self.at(idx))
    }

    #[inline]
    pub(crate) fn at(&self, idx: u64) -> Fq3 {
        let q = self.mid.order() as u64;
        Fq3([Fq((idx % q) as u32), Fq(((idx / q) % q) as u32), Fq((idx / (q * q)) as u32)])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq3> + '_ {
        (0..self.order()).map(move |i| self.at(i))
    }

    pub fn embed(&self, c: Fq) -> Fq3 {
        Fq3([c, Fq::ZERO, Fq::ZERO])
    }

    /// Returns `c` if `x` lies in the embedded copy of `F_q`.
    pub fn as_mid(&self, x: Fq3) -> Option<Fq> {
        (x.0[1].is_zero() && x.0[2].is_zero()).then_some(x.0[0])
    }

    #[inline]
    pub fn add(&self, a: Fq3, b: Fq3) -> Fq3 {
        let m = &self.mid;
        Fq3([m.add(a.0[0], b.0[0]), m.add(a.0[1], b.0[1]), m.add(a.0[2], b.0[2])])
    }

    #[inline]
    pub fn sub(&self, a: Fq3, b: Fq3) -> Fq3 {
        let m = &self.mid;
        Fq3([m.sub(a.0[0], b.0[0]), m.sub(a.0[1], b.0[1]), m.sub(a.0[2], b.0[2])])
    }

    #[inline]
    pub fn neg(&self, a: Fq3) -> Fq3 {
        let m = &self.mid;
        Fq3([m.neg(a.0[0]), m.neg(a.0[1]), m.neg(a.0[2])])
    }

    #[inline]
    pub fn scale(&self, c: Fq, a: Fq3) -> Fq3 {
        let m = &self.mid;
        Fq3([m.mul(c, a.0[0]), m.mul(c, a.0[1]), m.mul(c, a.0[2])])
    }

    pub fn scale_int(&self, k: i64, a: Fq3) -> Fq3 {
        self.scale(self.mid.from_int(k), a)
    }

    #[inline]
    pub fn mul(&self, a: Fq3, b: Fq3) -> Fq3 {
        let m = &self.mid;
        let mut r = [Fq::ZERO; 5];
        for i in 0..3 {
            if a.0[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                r[i + j] = m.add(r[i + j], m.mul(a.0[i], b.0[j]));
            }
        }
        // y^3 = -(g_2 y^2 + g_1 y + g_0)
        for k in [4, 3] {
            let c = r[k];
            if c.is_zero() {
                continue;
            }
            for t in 0..3 {
                r[k - 3 + t] = m.sub(r[k - 3 + t], m.mul(c, self.modulus[t]));
            }
        }
        Fq3([r[0], r[1], r[2]])
    }

    pub fn square(&self, a: Fq3) -> Fq3 {
        self.mul(a, a)
    }

    pub fn pow(&self, mut a: Fq3, mut e: u64) -> Fq3 {
        let mut r = Fq3::ONE;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: Fq3) -> Result<Fq3> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// `x^{q^k}` through the precomputed images of `y` and `y^2`.
    #[inline]
    pub fn frobenius(&self, x: Fq3, k: u32) -> Fq3 {
        match k % 3 {
            0 => x,
            k => {
                let [y1, y2] = self.frob[k as usize - 1];
                let base = self.embed(x.0[0]);
                self.add(base, self.add(self.scale(x.0[1], y1), self.scale(x.0[2], y2)))
            }
        }
    }

    /// `x^{q^k}` by square-and-multiply; an independent route to [`Self::frobenius`].
    pub fn frobenius_by_pow(&self, x: Fq3, k: u32) -> Fq3 {
        self.pow(x, (self.mid.order() as u64).pow(k % 3))
    }

    pub fn to_json(&self, x: Fq3) -> Value {
        Value::Array(x.0.iter().map(|&c| self.mid.to_json(c)).collect())
    }

    pub fn from_json(&self, v: &Value) -> Result<Fq3> {
        let items = v
            .as_array()
            .filter(|a| a.len() <= 3)
            .ok_or_else(|| Error::OutOfRange(format!("expected up to 3 F_q coefficients, found {v}")))?;
        let mut out = [Fq::ZERO; 3];
        for (slot, item) in out.iter_mut().zip(items) {
            *slot = self.mid.from_json(item)?;
        }
        Ok(Fq3(out))
    }
}

fn cubic_is_irreducible(mid: &MidField, g: [Fq; 3]) -> bool {
    // a cubic is reducible iff it has a root
    mid.elements().all(|x| {
        let x2 = mid.mul(x, x);
        let x3 = mid.mul(x2, x);
        let v = mid.add(
            mid.add(x3, mid.mul(g[2], x2)),
            mid.add(mid.mul(g[1], x), g[0]),
        );
        !v.is_zero()
    })
}

/// The tower `F_p ⊂ F_q ⊂ F_{q^3}`; immutable once built.
#[derive(Debug, Clone)]
pub struct FieldTower {
    top: TopField,
    sweep_limit: u64,
}

/// Optional user-supplied moduli for [`FieldTower::build`].
///
/// `q` is the ascending coefficient list of `m` over `F_p`; `q3` lists the four
/// coefficients of `g` over `F_q`, each given as coefficients over `F_p`.
#[derive(Debug, Clone, Default)]
pub struct Moduli {
    pub q: Option<Vec<i64>>,
    pub q3: Option<Vec<Vec<i64>>>,
}

impl FieldTower {
    /// The tower over `F_p` with `q = p^n` and default moduli.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::build(p, n, &Moduli::default())
    }

    pub fn build(p: u32, n: u32, moduli: &Moduli) -> Result<Self> {
        let mid = MidField::new(p, n, moduli.q.as_deref())?;
        let g = match &moduli.q3 {
            Some(coeffs) => Some(
                coeffs.iter().map(|c| mid.from_coeffs(c)).collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let top = TopField::new(mid, g.as_deref())?;
        Ok(FieldTower { top, sweep_limit: u64::MAX })
    }

    /// Bounds every exhaustive sweep by `limit` elements.
    pub fn with_sweep_limit(mut self, limit: u64) -> Self {
        self.sweep_limit = limit;
        self
    }

    pub fn sweep_limit(&self) -> u64 {
        self.sweep_limit
    }

    pub fn check_sweep(&self, size: u64) -> Result<()> {
        if size > self.sweep_limit {
            return Err(Error::ScaleExceeded { size, limit: self.sweep_limit });
        }
        Ok(())
    }

    pub fn p(&self) -> u32 {
        self.top.mid.characteristic()
    }

    pub fn n(&self) -> u32 {
        self.top.mid.degree()
    }

    pub fn q(&self) -> u32 {
        self.top.mid.order()
    }

    pub fn prime(&self) -> &PrimeField {
        self.top.mid.prime()
    }

    pub fn mid(&self) -> &MidField {
        &self.top.mid
    }

    pub fn top(&self) -> &TopField {
        &self.top
    }

    pub fn modulus_q_json(&self) -> Value {
        Value::from(self.mid().modulus().to_vec())
    }

    pub fn modulus_q3_json(&self) -> Value {
        Value::Array(self.top.modulus().iter().map(|&c| self.mid().to_json(c)).collect())
    }

    pub fn arith(&self, op: ArithOp, x: &Element, y: &Element) -> Result<Element> {
        if x.level() != y.level() {
            return Err(Error::LevelMismatch { expected: x.level(), found: y.level() });
        }
        let fp = self.prime();
        let mid = self.mid();
        let top = self.top();
        Ok(match (*x, *y) {
            (Element::Prime(a), Element::Prime(b)) => Element::Prime(match op {
                ArithOp::Add => fp.add(a, b),
                ArithOp::Sub => fp.sub(a, b),
                ArithOp::Mul => fp.mul(a, b),
                ArithOp::Neg => fp.neg(a),
            }),
            (Element::Mid(a), Element::Mid(b)) => Element::Mid(match op {
                ArithOp::Add => mid.add(a, b),
                ArithOp::Sub => mid.sub(a, b),
                ArithOp::Mul => mid.mul(a, b),
                ArithOp::Neg => mid.neg(a),
            }),
            (Element::Top(a), Element::Top(b)) => Element::Top(match op {
                ArithOp::Add => top.add(a, b),
                ArithOp::Sub => top.sub(a, b),
                ArithOp::Mul => top.mul(a, b),
                ArithOp::Neg => top.neg(a),
            }),
            _ => unreachable!("levels checked above"),
        })
    }

    pub fn inv(&self, x: &Element) -> Result<Element> {
        Ok(match *x {
            Element::Prime(a) => Element::Prime(self.prime().inv(a)?),
            Element::Mid(a) => Element::Mid(self.mid().inv(a)?),
            Element::Top(a) => Element::Top(self.top().inv(a)?),
        })
    }

    pub fn frobenius(&self, x: &Element, k: u32) -> Result<Element> {
        Ok(Element::Top(self.top.frobenius(x.as_top()?, k)))
    }

    pub fn embed(&self, c: &Element) -> Result<Element> {
        Ok(Element::Top(self.top.embed(c.as_mid()?)))
    }

    /// All elements of a level, in enumeration order.
    pub fn enumerate(&self, level: Level) -> Box<dyn Iterator<Item = Element> + '_> {
        match level {
            Level::Prime => Box::new((0..self.p()).map(Element::Prime)),
            Level::Mid => Box::new(self.mid().elements().map(Element::Mid)),
            Level::Top => Box::new(self.top().elements().map(Element::Top)),
        }
    }

    /// Coefficients over the level below, flattened to `F_p` integers.
    pub fn element_coeffs(&self, x: &Element) -> Vec<Vec<u32>> {
        match *x {
            Element::Prime(a) => vec![vec![a]],
            Element::Mid(a) => vec![self.mid().coeffs(a)],
            Element::Top(a) => a.coeffs().iter().map(|&c| self.mid().coeffs(c)).collect(),
        }
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{} ⊂ F_{} ⊂ F_{} (m = {}, g = {})",
            self.p(),
            self.q(),
            self.top.order(),
            self.modulus_q_json(),
            self.modulus_q3_json()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f27() -> FieldTower {
        FieldTower::new(3, 1).unwrap()
    }

    #[test]
    fn log_tables_match_polynomial_product() {
        for (p, n) in [(3, 2), (5, 2), (3, 3), (7, 1)] {
            let mid = MidField::new(p, n, None).unwrap();
            for a in mid.elements() {
                for b in mid.elements() {
                    assert_eq!(mid.mul(a, b).index(), mid.mul_slow(a.index(), b.index()));
                }
            }
        }
    }

    #[test]
    fn default_cubic_over_f3() {
        // brute force: the first monic cubic with no root in F_3
        let mut expected = None;
        'outer: for idx in 0..27u32 {
            let g = [idx % 3, (idx / 3) % 3, idx / 9];
            for x in 0..3u32 {
                if (x * x * x + g[2] * x * x + g[1] * x + g[0]) % 3 == 0 {
                    continue 'outer;
                }
            }
            expected = Some(g);
            break;
        }
        assert_eq!(expected, Some([1, 2, 0]));
        let t = f27();
        assert_eq!(t.modulus_q3_json(), serde_json::json!([1, 2, 0, 1]));
    }

    #[test]
    fn rejects_even_and_composite() {
        assert!(matches!(FieldTower::new(2, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldTower::new(9, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldTower::new(1, 1), Err(Error::InvalidField(_))));
    }

    #[test]
    fn supplied_moduli() {
        let m = Moduli { q: Some(vec![1, 0, 1]), q3: None };
        assert!(FieldTower::build(3, 2, &m).is_ok());
        let bad = Moduli { q: Some(vec![2, 0, 1]), q3: None }; // x^2 - 1
        assert!(matches!(FieldTower::build(3, 2, &bad), Err(Error::ReducibleModulus { .. })));
        let bad_g = Moduli { q: None, q3: Some(vec![vec![0], vec![0], vec![0], vec![1]]) };
        assert!(matches!(FieldTower::build(3, 1, &bad_g), Err(Error::ReducibleModulus { .. })));
        let non_monic = Moduli { q: Some(vec![1, 0, 2]), q3: None };
        assert!(matches!(FieldTower::build(3, 2, &non_monic), Err(Error::MalformedModulus(_))));
    }

    #[test]
    fn default_quadratic_over_f3() {
        // x^2 + 1 is the first: x^2 and x^2 + 2 = (x-1)(x+1) have roots
        let t = FieldTower::new(3, 2).unwrap();
        assert_eq!(t.mid().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn mid_arith_examples() {
        let f3 = FieldTower::new(3, 1).unwrap();
        let m = f3.mid();
        assert_eq!(m.add(m.from_int(2), m.from_int(2)), m.from_int(1));
        assert_eq!(m.inv(m.from_int(2)).unwrap(), m.from_int(2));
        let f7 = FieldTower::new(7, 1).unwrap();
        assert_eq!(f7.mid().inv(f7.mid().from_int(2)).unwrap(), f7.mid().from_int(4));
        let f5 = FieldTower::new(5, 1).unwrap();
        assert_eq!(f5.mid().inv(Fq::ZERO), Err(Error::DivisionByZero));

        let f9 = FieldTower::build(3, 2, &Moduli { q: Some(vec![1, 0, 1]), q3: None }).unwrap();
        let m = f9.mid();
        let x = m.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(m.mul(x, x), m.from_int(2));
    }

    #[test]
    fn dynamic_elements() {
        let t = f27();
        let two = Element::Prime(2);
        assert_eq!(t.arith(ArithOp::Add, &two, &two).unwrap(), Element::Prime(1));
        let err = t.arith(ArithOp::Add, &two, &Element::Mid(Fq::ONE)).unwrap_err();
        assert!(matches!(err, Error::LevelMismatch { .. }));
        assert!(t.frobenius(&Element::Mid(Fq::ONE), 1).is_err());
        assert_eq!(t.embed(&Element::Mid(Fq::ZERO)).unwrap(), Element::Top(Fq3::ZERO));
        assert_eq!(t.embed(&Element::Mid(Fq::ONE)).unwrap(), Element::Top(Fq3::ONE));
        assert_eq!(t.inv(&Element::Prime(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn enumeration_order() {
        let f3 = f27();
        let prime: Vec<_> = f3.enumerate(Level::Prime).collect();
        assert_eq!(prime, vec![Element::Prime(0), Element::Prime(1), Element::Prime(2)]);
        assert_eq!(f3.enumerate(Level::Top).count(), 27);

        let f9 = FieldTower::new(3, 2).unwrap();
        let listed: Vec<Vec<u32>> = f9.mid().elements().map(|a| f9.mid().coeffs(a)).collect();
        let expected: Vec<Vec<u32>> = vec![
            vec![0, 0], vec![1, 0], vec![2, 0],
            vec![0, 1], vec![1, 1], vec![2, 1],
            vec![0, 2], vec![1, 2], vec![2, 2],
        ];
        assert_eq!(listed, expected);
        assert_eq!(f9.enumerate(Level::Top).count(), 729);
        let first = f9.enumerate(Level::Top).next().unwrap();
        assert_eq!(first, Element::Top(Fq3::ZERO));
    }

    #[test]
    fn frobenius_routes_agree_and_fix_subfield() {
        for (p, n) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)] {
            let t = FieldTower::new(p, n).unwrap();
            let top = t.top();
            let mut fixed = 0;
            for x in top.elements() {
                let f1 = top.frobenius(x, 1);
                assert_eq!(f1, top.frobenius_by_pow(x, 1));
                assert_eq!(top.frobenius(x, 2), top.frobenius_by_pow(x, 2));
                assert_eq!(top.frobenius(top.frobenius(f1, 1), 1), x);
                if f1 == x {
                    fixed += 1;
                    assert!(top.as_mid(x).is_some());
                }
            }
            assert_eq!(fixed, t.q());
        }
    }

    #[test]
    fn frobenius_of_y_in_f27() {
        let t = f27();
        let top = t.top();
        let y = Fq3::new([Fq::ZERO, Fq::ONE, Fq::ZERO]);
        let y3 = top.mul(top.mul(y, y), y);
        // y^3 = -2y - 1 = y + 2
        assert_eq!(y3, Fq3::new([t.mid().from_int(2), Fq::ONE, Fq::ZERO]));
        assert_eq!(top.frobenius(y, 1), y3);
    }

    #[test]
    fn frobenius_is_a_ring_homomorphism() {
        let t = FieldTower::new(5, 1).unwrap();
        let top = t.top();
        let xs: Vec<Fq3> = top.elements().step_by(7).collect();
        for &a in &xs {
            for &b in xs.iter().step_by(3) {
                let fa = top.frobenius(a, 1);
                let fb = top.frobenius(b, 1);
                assert_eq!(top.frobenius(top.add(a, b), 1), top.add(fa, fb));
                assert_eq!(top.frobenius(top.mul(a, b), 1), top.mul(fa, fb));
            }
        }
    }

    #[test]
    fn lagrange_exhaustive() {
        for (p, n) in [(3, 1), (5, 1), (3, 2), (13, 1)] {
            let t = FieldTower::new(p, n).unwrap();
            let top = t.top();
            for x in top.elements().skip(1) {
                assert_eq!(top.pow(x, top.order() - 1), Fq3::ONE);
            }
        }
    }

    #[test]
    fn embed_is_a_homomorphism() {
        let t = FieldTower::new(3, 2).unwrap();
        let (mid, top) = (t.mid(), t.top());
        for a in mid.elements() {
            for b in mid.elements() {
                assert_eq!(top.embed(mid.add(a, b)), top.add(top.embed(a), top.embed(b)));
                assert_eq!(top.embed(mid.mul(a, b)), top.mul(top.embed(a), top.embed(b)));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = FieldTower::new(3, 2).unwrap();
        let top = t.top();
        for x in top.elements().step_by(11) {
            assert_eq!(top.from_json(&top.to_json(x)).unwrap(), x);
        }
        assert_eq!(t.mid().from_json(&serde_json::json!(-1)).unwrap(), t.mid().from_int(2));
    }

    fn tower_strategy() -> impl Strategy<Value = (u32, u32)> {
        prop_oneof![Just((3, 1)), Just((5, 1)), Just((7, 1)), Just((3, 2)), Just((5, 2)), Just((3, 3))]
    }

    proptest! {
        #[test]
        fn field_axioms(tower in tower_strategy(), seeds in proptest::array::uniform3(any::<u64>())) {
            let t = FieldTower::new(tower.0, tower.1).unwrap();
            let top = t.top();
            let [a, b, c] = seeds.map(|s| top.at(s % top.order()));
            prop_assert_eq!(top.mul(top.mul(a, b), c), top.mul(a, top.mul(b, c)));
            prop_assert_eq!(top.add(top.add(a, b), c), top.add(a, top.add(b, c)));
            prop_assert_eq!(top.mul(a, b), top.mul(b, a));
            prop_assert_eq!(top.mul(a, top.add(b, c)), top.add(top.mul(a, b), top.mul(a, c)));
            prop_assert_eq!(top.add(a, top.neg(a)), Fq3::ZERO);
            if !a.is_zero() {
                prop_assert_eq!(top.mul(a, top.inv(a).unwrap()), Fq3::ONE);
            }
            let mid = t.mid();
            let [x, y, z] = [a, b, c].map(|e| e.coeffs()[0]);
            prop_assert_eq!(mid.mul(x, mid.add(y, z)), mid.add(mid.mul(x, y), mid.mul(x, z)));
            if !x.is_zero() {
                prop_assert_eq!(mid.mul(x, mid.inv(x).unwrap()), Fq::ONE);
            }
        }
    }
}
