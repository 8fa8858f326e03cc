//! Text forms for fields and elements.
//!
//! Elements: `0`, `1`, `a^k` with 0 <= k <= q-2 (powers of [`Field::alpha`]),
//! or `0x<hex>` holding the packed coefficient bits (p = 2 only).
//!
//! Fields: `GF(p^r;poly)` where `poly` is either a hex bit-packed polynomial
//! (p = 2) or comma-separated coefficients, constant term first.

use std::fmt;
use std::str::FromStr;

use super::{Elem, Field};
use crate::error::{Error, Result};

/// How elements are rendered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Notation {
    /// `0`, `1` or `a^k`.
    #[default]
    Power,
    /// `0x..` packed coefficients; fields of odd characteristic fall back to
    /// power notation.
    Packed,
}

impl Field {
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let t = text.trim();
        match t {
            "0" => return Ok(Elem::ZERO),
            "1" => return Ok(Elem::ONE),
            _ => {}
        }
        if let Some(k) = t.strip_prefix("a^") {
            let k: u64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?;
            if k > self.order() - 2 {
                return Err(Error::Parse(format!("exponent {k} outside 0..={}", self.order() - 2)));
            }
            return Ok(self.alpha_pow(k as i64));
        }
        if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            if self.characteristic() != 2 {
                return Err(Error::Parse("hex notation is only defined for characteristic 2".into()));
            }
            let v = u64::from_str_radix(hex, 16).map_err(|_| Error::Parse(format!("bad hex literal {t:?}")))?;
            return self.element(v);
        }
        Err(Error::Parse(format!("unrecognized element {t:?}")))
    }

    pub fn format(&self, a: Elem, notation: Notation) -> String {
        if a.is_zero() {
            return "0".into();
        }
        match notation {
            Notation::Packed if self.characteristic() == 2 => format!("{:#x}", a.0),
            _ => match self.log(a) {
                Some(0) => "1".into(),
                Some(k) => format!("a^{k}"),
                None => unreachable!("nonzero elements have a logarithm"),
            },
        }
    }

    /// Parses a comma-separated list of elements; surrounding brackets are
    /// optional.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<Elem>> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        if t.trim().is_empty() {
            return Ok(Vec::new());
        }
        t.split(',').map(|s| self.parse_element(s)).collect()
    }

    pub fn format_elements(&self, xs: &[Elem], notation: Notation) -> String {
        let parts: Vec<String> = xs.iter().map(|&x| self.format(x, notation)).collect();
        parts.join(",")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{};", self.characteristic(), self.degree())?;
        if self.characteristic() == 2 {
            write!(f, "{:#x})", self.0.packed)
        } else {
            let cs: Vec<String> = self.defining_poly().iter().map(|c| c.to_string()).collect();
            write!(f, "{})", cs.join(","))
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let bad = || Error::Parse(format!("expected GF(p^r;poly), got {s:?}"));
        let body = s.trim().strip_prefix("GF(").and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let (pr, poly) = body.split_once(';').ok_or_else(bad)?;
        let (p, r) = pr.split_once('^').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let r: u32 = r.trim().parse().map_err(|_| bad())?;
        let poly = poly.trim();
        if let Some(hex) = poly.strip_prefix("0x").or_else(|| poly.strip_prefix("0X")) {
            if p != 2 {
                return Err(Error::Parse("hex polynomials are only defined for characteristic 2".into()));
            }
            let v = u64::from_str_radix(hex, 16).map_err(|_| bad())?;
            return Field::binary(r, v);
        }
        let coeffs = poly
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        Field::new(p, r, &coeffs)
    }
}
