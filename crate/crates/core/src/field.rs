//! Finite fields GF(q^d).
//!
//! Elements are packed integers: the polynomial `c_0 + c_1 x + ... + c_{d-1} x^{d-1}`
//! is stored as `c_0 + c_1 q + ... + c_{d-1} q^{d-1}`. Prime-field elements are
//! therefore the integers `0..q`, and the embedding of GF(q) into GF(q^d) is the
//! identity on packed values.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, mult_order_mod};
use crate::error::{Error, Result};

pub type Elem = u32;

/// Largest field size supported by the log tables.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

struct FieldData {
    q: u32,
    d: u32,
    size: u32,
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    generator: Elem,
}

/// A finite field with a fixed monic irreducible modulus. Cheap to clone.
#[derive(Clone)]
pub struct Gf(Arc<FieldData>);

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {:?})",
            self.q(),
            self.degree(),
            self.modulus()
        )
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.q == other.0.q && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Gf {}

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub q: u32,
    pub d: u32,
    pub modulus: Vec<u32>,
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], q: u32) -> Vec<u32> {
    let d = modulus.len() - 1;
    let q64 = q as u64;
    let mut prod = vec![0u64; 2 * d.max(1)];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % q64;
        }
    }
    // reduce by the monic modulus from the top down
    for deg in (d..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for k in 0..d {
            let sub = c * modulus[k] as u64 % q64;
            let idx = deg - d + k;
            prod[idx] = (prod[idx] + q64 - sub) % q64;
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod.into_iter().map(|v| v as u32).collect()
}

fn unpack(mut x: u32, q: u32, d: usize) -> Vec<u32> {
    let mut out = vec![0; d];
    for c in out.iter_mut() {
        *c = x % q;
        x /= q;
    }
    out
}

fn pack(coeffs: &[u32], q: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
}

/// Remainder of `a` modulo a monic `b` (coefficient vectors, low to high).
fn poly_rem(a: &[u32], b: &[u32], q: u32) -> Vec<u32> {
    let q64 = q as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (k, &bk) in b.iter().enumerate() {
                let idx = shift + k;
                r[idx] = (r[idx] + q64 * q64 - lead * bk as u64) % q64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial-division irreducibility test for a monic polynomial over GF(q).
pub fn is_irreducible(modulus: &[u32], q: u32) -> bool {
    let d = modulus.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for deg in 1..=d / 2 {
        let count = (q as u64).pow(deg as u32);
        for low in 0..count {
            let mut divisor = unpack(low as u32, q, deg);
            divisor.push(1);
            if poly_rem(modulus, &divisor, q).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Gf {
    /// GF(q^d) with the lexicographically smallest monic irreducible modulus.
    pub fn new(q: u32, d: u32) -> Result<Self> {
        Self::check_params(q, d)?;
        let count = (q as u64).pow(d);
        for low in 0..count {
            let mut modulus = unpack(low as u32, q, d as usize);
            modulus.push(1);
            if is_irreducible(&modulus, q) {
                return Self::build(q, modulus);
            }
        }
        Err(Error::Internal(format!(
            "no irreducible polynomial of degree {d} over GF({q})"
        )))
    }

    pub fn prime(q: u32) -> Result<Self> {
        Self::new(q, 1)
    }

    /// Field with an explicitly given monic modulus (low to high coefficients).
    pub fn with_modulus(q: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidSpec(
                "modulus must be monic of degree >= 1".into(),
            ));
        }
        Self::check_params(q, (modulus.len() - 1) as u32)?;
        if modulus.iter().any(|&c| c >= q) {
            return Err(Error::InvalidSpec(
                "modulus coefficient out of range".into(),
            ));
        }
        if !is_irreducible(&modulus, q) {
            return Err(Error::InvalidSpec(format!(
                "modulus {modulus:?} is reducible over GF({q})"
            )));
        }
        Self::build(q, modulus)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        let f = Self::with_modulus(spec.q, spec.modulus.clone())?;
        if f.degree() != spec.d {
            return Err(Error::InvalidSpec("degree does not match modulus".into()));
        }
        Ok(f)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            q: self.q(),
            d: self.degree(),
            modulus: self.modulus().to_vec(),
        }
    }

    fn check_params(q: u32, d: u32) -> Result<()> {
        if !is_prime(q as u64) {
            return Err(Error::InvalidSpec(format!(
                "characteristic {q} is not prime"
            )));
        }
        if d == 0 {
            return Err(Error::InvalidSpec("field degree must be positive".into()));
        }
        let size = (q as u64).checked_pow(d).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::TooLarge {
                size: size as usize,
                cap: MAX_FIELD_SIZE as usize,
            });
        }
        Ok(())
    }

    fn build(q: u32, modulus: Vec<u32>) -> Result<Self> {
        let d = modulus.len() - 1;
        let size = q.pow(d as u32);
        let order = size - 1;
        // smallest packed element generating the multiplicative group
        let mut generator = None;
        'cand: for g in 1..size {
            let gv = unpack(g, q, d);
            let mut x = gv.clone();
            let mut exp = 1u32;
            while exp < order {
                if pack(&x, q) == 1 {
                    continue 'cand;
                }
                x = poly_mulmod(&x, &gv, &modulus, q);
                exp += 1;
            }
            generator = Some(g);
            break;
        }
        let generator = generator.ok_or_else(|| Error::Internal("no primitive element".into()))?;
        let gv = unpack(generator, q, d);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; size as usize];
        let mut x = unpack(1, q, d);
        for k in 0..order {
            let packed = pack(&x, q);
            exp.push(packed);
            log[packed as usize] = k;
            x = poly_mulmod(&x, &gv, &modulus, q);
        }
        Ok(Gf(Arc::new(FieldData {
            q,
            d: d as u32,
            size,
            modulus,
            exp,
            log,
            generator,
        })))
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn degree(&self) -> u32 {
        self.0.d
    }
    pub fn size(&self) -> u32 {
        self.0.size
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }
    pub fn generator(&self) -> Elem {
        self.0.generator
    }
    pub fn is_prime_field(&self) -> bool {
        self.0.d == 1
    }

    pub fn zero(&self) -> Elem {
        0
    }
    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer under Z -> GF(q) -> GF(q^d).
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.q as i64) as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let q = self.0.q;
        if self.0.d == 1 {
            return (a + b) % q;
        }
        if q == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.0.d {
            out += ((a % q + b % q) % q) * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let q = self.0.q;
        if self.0.d == 1 {
            return (q - a) % q;
        }
        if q == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.0.d {
            out += ((q - a % q) % q) * place;
            a /= q;
            place *= q;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let data = &self.0;
        let order = data.size - 1;
        let k = (data.log[a as usize] + data.log[b as usize]) % order;
        data.exp[k as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let data = &self.0;
        let order = data.size - 1;
        Some(data.exp[((order - data.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.0.size - 1) as u64;
        let k = (self.0.log[a as usize] as u64 * (e % order)) % order;
        self.0.exp[k as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let n = (self.0.size - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        Some(n / gcd(n, l))
    }

    /// The smallest packed element of multiplicative order exactly `p`.
    pub fn root_of_unity(&self, p: u64) -> Option<Elem> {
        if p == 0 || (self.0.size as u64 - 1) % p != 0 {
            return None;
        }
        (1..self.0.size).find(|&x| self.order(x) == Some(p))
    }

    /// Coefficient vector over the prime field, low degree first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        unpack(a, self.0.q, self.0.d as usize)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.0.size
    }
}

/// Degree of the smallest extension of GF(q) containing a primitive p-th root of unity.
pub fn splitting_degree(q: u64, p: u64) -> Option<u64> {
    mult_order_mod(q, p)
}
