//! Finite fields `GF(p^e)`.
//!
//! A [`Field`] is a cheap `Copy` handle to interned arithmetic tables, so
//! elements can carry their field around and use operator syntax. Elements of
//! `GF(p^e)` are encoded as integers `0..q` whose base-`p` digits are the
//! coordinates in the power basis `1, g, g^2, ...` of a primitive element `g`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported `q = p^e` for proper extensions (log/exp tables).
const MAX_EXTENSION_ORDER: u64 = 1 << 16;

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    /// Low coefficients of the monic primitive modulus (empty when `e = 1`).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone, Copy)]
pub struct Field(&'static Tables);

fn registry() -> &'static Mutex<HashMap<(u32, u32), &'static Tables>> {
    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), &'static Tables>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The field with `p^e` elements.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::UnsupportedField { p, e, reason: "extension degree must be at least 1" });
        }
        if p >= 1 << 31 {
            return Err(Error::UnsupportedField { p, e, reason: "characteristic must be below 2^31" });
        }
        if e > 1 {
            let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
            if q > MAX_EXTENSION_ORDER as u128 {
                return Err(Error::UnsupportedField { p, e, reason: "extension fields are limited to 2^16 elements" });
            }
        }
        let key = (p as u32, e);
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(t) = reg.get(&key) {
            return Ok(Field(t));
        }
        let tables: &'static Tables = Box::leak(Box::new(build_tables(p as u32, e)));
        reg.insert(key, tables);
        Ok(Field(tables))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients `f_0, ..., f_{e-1}` of the monic defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq { field: *self, code: 0 }
    }

    pub fn one(&self) -> Fq {
        Fq { field: *self, code: 1 }
    }

    /// Image of an integer under `Z -> GF(p^e)`.
    pub fn from_int(&self, n: i64) -> Fq {
        let p = self.0.p as i64;
        Fq { field: *self, code: n.rem_euclid(p) as u32 }
    }

    /// Element with the given integer encoding.
    pub fn element(&self, code: u64) -> Result<Fq> {
        if code >= self.0.q as u64 {
            return Err(Error::Parse(format!("{code} is not an element of GF({})", self.0.q)));
        }
        Ok(Fq { field: *self, code: code as u32 })
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> Fq {
        if self.0.e == 1 {
            let p = self.0.p as u64;
            (1..p)
                .map(|g| self.from_int(g as i64))
                .find(|x| (1..p - 1).all(|k| x.pow(k) != self.one()))
                .expect("prime fields are cyclic")
        } else {
            Fq { field: *self, code: self.0.exp[1] }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        let f = *self;
        (0..self.0.q).map(move |code| Fq { field: f, code })
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> + '_ {
        self.elements().skip(1)
    }

    fn add_codes(&self, a: u32, b: u32) -> u32 {
        let t = self.0;
        if t.e == 1 {
            return ((a as u64 + b as u64) % t.p as u64) as u32;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
        for _ in 0..t.e {
            let digit = (a % t.p + b % t.p) % t.p;
            out += digit * place;
            place *= t.p;
            a /= t.p;
            b /= t.p;
        }
        out
    }

    fn neg_code(&self, a: u32) -> u32 {
        let t = self.0;
        if t.e == 1 {
            return (t.p - a % t.p) % t.p;
        }
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        for _ in 0..t.e {
            out += ((t.p - a % t.p) % t.p) * place;
            place *= t.p;
            a /= t.p;
        }
        out
    }

    fn mul_codes(&self, a: u32, b: u32) -> u32 {
        let t = self.0;
        if t.e == 1 {
            return ((a as u64 * b as u64) % t.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let order = t.q - 1;
        t.exp[((t.log[a as usize] as u64 + t.log[b as usize] as u64) % order as u64) as usize]
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.e)
    }
}

fn build_tables(p: u32, e: u32) -> Tables {
    let q = p.pow(e);
    if e == 1 {
        return Tables { p, e, q, modulus: Vec::new(), exp: Vec::new(), log: Vec::new() };
    }
    // Search monic polynomials of degree e (ordered by the encoding of their
    // low coefficients) for one whose root x has multiplicative order q - 1.
    // Such a polynomial is automatically irreducible.
    for low in 0..q {
        let modulus: Vec<u32> = (0..e).map(|i| (low / p.pow(i)) % p).collect();
        if modulus[0] == 0 {
            continue;
        }
        if let Some((exp, log)) = power_tables(p, e, q, &modulus) {
            return Tables { p, e, q, modulus, exp, log };
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn power_tables(p: u32, e: u32, q: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let encode = |digits: &[u32]| digits.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    let mut state = vec![0u32; e as usize];
    state[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![u32::MAX; q as usize];
    for k in 0..q - 1 {
        let code = encode(&state);
        if code == 0 || log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = k;
        exp.push(code);
        // multiply by x modulo the monic modulus
        let top = state[e as usize - 1];
        for i in (1..e as usize).rev() {
            state[i] = state[i - 1];
        }
        state[0] = 0;
        for i in 0..e as usize {
            state[i] = (state[i] + (p - top) * modulus[i] % p) % p;
        }
    }
    if encode(&state) != 1 {
        return None;
    }
    Some((exp, log))
}

/// An element of `GF(p^e)`.
#[derive(Clone, Copy)]
pub struct Fq {
    field: Field,
    code: u32,
}

impl Fq {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Integer encoding of the element (its base-`p` digits are its
    /// coordinates over `GF(p)`).
    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn pow(&self, mut k: u64) -> Fq {
        let mut base = *self;
        let mut acc = self.field.one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Fq> {
        if self.is_zero() {
            return None;
        }
        let q = self.field.order() as u64;
        Some(self.pow(q - 2))
    }

    /// `c ↦ c^p`.
    pub fn frobenius(&self) -> Fq {
        self.pow(self.field.characteristic() as u64)
    }

    /// The unique `r` with `r^p = c`, namely `c^(p^(e-1))`.
    pub fn pth_root(&self) -> Fq {
        let p = self.field.characteristic() as u64;
        let e = self.field.extension_degree();
        let mut r = *self;
        for _ in 1..e {
            r = r.pow(p);
        }
        r
    }

    fn check(&self, other: &Fq) {
        assert!(self.field == other.field, "arithmetic between {:?} and {:?}", self.field, other.field);
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl Eq for Fq {}

impl Hash for Fq {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl Add for Fq {
    type Output = Fq;
    fn add(self, rhs: Fq) -> Fq {
        self.check(&rhs);
        Fq { field: self.field, code: self.field.add_codes(self.code, rhs.code) }
    }
}

impl Sub for Fq {
    type Output = Fq;
    fn sub(self, rhs: Fq) -> Fq {
        self + (-rhs)
    }
}

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        Fq { field: self.field, code: self.field.neg_code(self.code) }
    }
}

impl Mul for Fq {
    type Output = Fq;
    fn mul(self, rhs: Fq) -> Fq {
        self.check(&rhs);
        Fq { field: self.field, code: self.field.mul_codes(self.code, rhs.code) }
    }
}

impl AddAssign for Fq {
    fn add_assign(&mut self, rhs: Fq) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fq {
    fn sub_assign(&mut self, rhs: Fq) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fq {
    fn mul_assign(&mut self, rhs: Fq) {
        *self = *self * rhs;
    }
}
