//! Arithmetic in GF(p^r) built from an explicit irreducible polynomial.
//!
//! Elements are residue classes of GF(p)[x] modulo the defining polynomial,
//! stored as their polynomial-basis coefficients packed into one integer:
//! the coefficient of x^i is the i-th base-p digit. For p = 2 this is the
//! usual bit-packed form, so `0x13` is x^4 + x + 1. That integer is also the
//! total order used whenever the crate needs "the smallest" element.
//!
//! ```
//! use nearmds::gf::{Field, Notation};
//!
//! let f = Field::binary(4, 0x13).unwrap();
//! let a = f.alpha();
//! assert_eq!(f.format(f.mul(f.pow(a, 3).unwrap(), a), Notation::Power), "a^4");
//! assert_eq!(f.alpha_pow(4), f.add(a, f.one()));
//! ```

mod poly;
mod text;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use text::Notation;

/// Exp/log tables are built for fields up to this order.
const TABLE_LIMIT: u64 = 1 << 16;

/// One element of a [`Field`], identified by its packed polynomial-basis
/// representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The packed representation.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({:#x})", self.0)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    r: u32,
    q: u64,
    /// Defining polynomial, constant term first, monic, length r + 1.
    poly: Vec<u32>,
    /// Bit-packed defining polynomial (p = 2 only).
    packed: u64,
    /// Prime factors of q - 1.
    factors: Vec<u64>,
    alpha: u32,
    tables: Option<Tables>,
    giant_steps: OnceLock<HashMap<u32, u64>>,
}

/// A finite field GF(p^r) with a fixed defining polynomial.
///
/// Cloning is cheap; clones compare equal and share tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.poly == other.0.poly)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn is_prime(n: u64) -> bool {
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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Builds GF(p^r) from a monic degree-r polynomial given constant term
    /// first. Fails if p is composite or the polynomial factors over GF(p).
    pub fn new(p: u32, r: u32, poly: &[u32]) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p >= 1 << 16 {
            return Err(Error::FieldTooLarge(p as u128));
        }
        if r == 0 {
            return Err(Error::InvalidPolynomial("degree must be positive".into()));
        }
        if poly.len() != r as usize + 1 {
            return Err(Error::InvalidPolynomial(format!(
                "expected {} coefficients for degree {r}, got {}",
                r + 1,
                poly.len()
            )));
        }
        if poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidPolynomial(format!("coefficients must lie in [0, {p})")));
        }
        if poly[r as usize] != 1 {
            return Err(Error::InvalidPolynomial("polynomial must be monic".into()));
        }
        let q = (p as u128).pow(r);
        if q > u32::MAX as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as u64;
        let wide: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
        if !poly::is_irreducible(&wide, p as u64) {
            return Err(Error::NotIrreducible(p));
        }
        let packed =
            if p == 2 { poly.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i)) } else { 0 };
        let mut inner = Inner {
            p,
            r,
            q,
            poly: poly.to_vec(),
            packed,
            factors: prime_factors(q - 1),
            alpha: 1,
            tables: None,
            giant_steps: OnceLock::new(),
        };
        inner.alpha =
            (1..q as u32).find(|&a| inner.is_primitive_raw(a)).expect("every finite field has a primitive element");
        if q <= TABLE_LIMIT {
            let n = (q - 1) as usize;
            let mut exp = Vec::with_capacity(n);
            let mut log = vec![0u32; q as usize];
            let mut x = 1u32;
            for k in 0..n {
                exp.push(x);
                log[x as usize] = k as u32;
                x = inner.mul_raw(x, inner.alpha);
            }
            inner.tables = Some(Tables { exp, log });
        }
        Ok(Field(Arc::new(inner)))
    }

    /// GF(2^r) from a bit-packed defining polynomial, e.g. `0x13` for
    /// x^4 + x + 1.
    pub fn binary(r: u32, packed_poly: u64) -> Result<Field> {
        if r == 0 || r >= 64 {
            return Err(Error::InvalidPolynomial(format!("unsupported degree {r}")));
        }
        if packed_poly >> (r + 1) != 0 {
            return Err(Error::InvalidPolynomial(format!("{packed_poly:#x} has degree above {r}")));
        }
        let coeffs: Vec<u32> = (0..=r).map(|i| ((packed_poly >> i) & 1) as u32).collect();
        Field::new(2, r, &coeffs)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.r
    }

    /// Number of elements q = p^r.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Defining polynomial, constant term first.
    pub fn defining_poly(&self) -> &[u32] {
        &self.0.poly
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The primitive element used for power notation: the smallest element
    /// (by packed value) of multiplicative order q - 1. When the class of x
    /// is primitive this is x itself.
    pub fn alpha(&self) -> Elem {
        Elem(self.0.alpha)
    }

    /// alpha^k for any integer k (alpha is a unit).
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let n = (self.0.q - 1) as i64;
        let k = k.rem_euclid(n) as u64;
        match &self.0.tables {
            Some(t) => Elem(t.exp[k as usize]),
            None => Elem(self.0.pow_raw(self.0.alpha, k)),
        }
    }

    /// Element with the given packed representation.
    pub fn element(&self, value: u64) -> Result<Elem> {
        if value >= self.0.q {
            return Err(Error::Parse(format!("{value:#x} is not below the field order {}", self.0.q)));
        }
        Ok(Elem(value as u32))
    }

    /// Element from polynomial-basis coefficients, constant term first.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.r as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::Parse(format!("coefficient vector {coeffs:?} is not a reduced element")));
        }
        let p = self.0.p as u64;
        let v = coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64);
        Ok(Elem(v as u32))
    }

    /// Polynomial-basis coefficients, constant term first, length r.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        self.0.digits(a.0)
    }

    /// Iterates over all q elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q as u32).map(Elem)
    }

    pub fn contains(&self, a: Elem) -> bool {
        (a.0 as u64) < self.0.q
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.add_raw(a.0, b.0))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.0.p == 2 {
            return a;
        }
        let p = self.0.p;
        let d: Vec<u32> = self.0.digits(a.0).iter().map(|&c| (p - c) % p).collect();
        Elem(self.0.undigits(&d))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let n = t.exp.len();
                let k = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[if k >= n { k - n } else { k }])
            }
            None => Elem(self.0.mul_raw(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.0.tables {
            Some(t) => {
                let n = t.exp.len();
                Ok(Elem(t.exp[(n - t.log[a.0 as usize] as usize) % n]))
            }
            None => Ok(Elem(self.0.pow_raw(a.0, self.0.q - 2))),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e; negative exponents invert first. 0^0 = 1.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a.0 == 0 {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.0.q - 1) as i64;
        let e = e.rem_euclid(n) as u64;
        match &self.0.tables {
            Some(t) => {
                let k = (t.log[a.0 as usize] as u64 * e) % n as u64;
                Ok(Elem(t.exp[k as usize]))
            }
            None => Ok(Elem(self.0.pow_raw(a.0, e))),
        }
    }

    /// Sum of a slice of elements.
    pub fn sum(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::ZERO, |acc, &x| self.add(acc, x))
    }

    /// Product of a slice of elements.
    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::ONE, |acc, &x| self.mul(acc, x))
    }

    /// The element n·1 for an integer n.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Discrete logarithm base alpha, None for zero.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.0 == 0 || !self.contains(a) {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(t.log[a.0 as usize] as u64);
        }
        Some(self.0.bsgs(a.0))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.0.q - 1;
        for &l in &self.0.factors {
            while ord.is_multiple_of(l) && self.0.pow_raw(a.0, ord / l) == 1 {
                ord /= l;
            }
        }
        Ok(ord)
    }

    pub fn is_primitive(&self, a: Elem) -> bool {
        a.0 != 0 && self.contains(a) && self.0.is_primitive_raw(a.0)
    }

    /// Whether two elements share the same field; used by containers that
    /// mix elements from several sources.
    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

impl Inner {
    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.r as usize);
        for _ in 0..self.r {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        let p = self.p as u64;
        d.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64) as u32
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.r {
            out += ((a % p + b % p) % p) as u64 * place;
            a /= p;
            b /= p;
            place *= p as u64;
        }
        out as u32
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            let (a, b) = (a as u64, b as u64);
            let mut prod = 0u64;
            for i in 0..self.r {
                if (b >> i) & 1 == 1 {
                    prod ^= a << i;
                }
            }
            let r = self.r as i32;
            for bit in (r..=2 * r - 2).rev() {
                if (prod >> bit) & 1 == 1 {
                    prod ^= self.packed << (bit - r);
                }
            }
            return prod as u32;
        }
        let p = self.p as u64;
        let da: Vec<u64> = self.digits(a).iter().map(|&c| c as u64).collect();
        let db: Vec<u64> = self.digits(b).iter().map(|&c| c as u64).collect();
        let f: Vec<u64> = self.poly.iter().map(|&c| c as u64).collect();
        let r = poly::mul_mod(&da, &db, &f, p);
        let d: Vec<u32> = r.iter().map(|&c| c as u32).collect();
        self.undigits(&d)
    }

    fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_raw(result, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        result
    }

    fn is_primitive_raw(&self, a: u32) -> bool {
        let n = self.q - 1;
        self.factors.iter().all(|&l| self.pow_raw(a, n / l) != 1)
    }

    /// Baby-step giant-step discrete log for fields without tables.
    fn bsgs(&self, a: u32) -> u64 {
        let n = self.q - 1;
        let m = (n as f64).sqrt().ceil() as u64;
        let table = self.giant_steps.get_or_init(|| {
            let mut t = HashMap::with_capacity(m as usize);
            let mut x = 1u32;
            for j in 0..m {
                t.entry(x).or_insert(j);
                x = self.mul_raw(x, self.alpha);
            }
            t
        });
        // alpha^(-m)
        let step = self.pow_raw(self.pow_raw(self.alpha, m), n - 1);
        let mut y = a;
        for i in 0..=m {
            if let Some(&j) = table.get(&y) {
                return (i * m + j) % n;
            }
            y = self.mul_raw(y, step);
        }
        unreachable!("alpha generates the multiplicative group")
    }
}
