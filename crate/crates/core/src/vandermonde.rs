//! Vandermonde and generalized Vandermonde matrices.
//!
//! A generalized Vandermonde matrix V(x; T) has row j equal to
//! (x_1^{t_j}, ..., x_n^{t_j}) for an increasing exponent set
//! T = {t_1 < ... < t_n}. It is equally described by its set of
//! discontinuities I = {0, ..., t_n} \ T; both views live in [`GVandSpec`].
//!
//! Its determinant factors as det(vand(x)) · det(S(x)), where S is the s×s
//! matrix (σ_{n - l_i + j - 1}(x)) built from elementary symmetric
//! polynomials and I = {l_1 < ... < l_s}. [`det_gvand_formula`] evaluates
//! that product (with closed forms for I = {n-1}, {1}, {1,n}) and never
//! falls back to elimination, so it can be checked against [`FieldMatrix::det`].

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Notation};
use crate::matrix::FieldMatrix;

/// Points x and exponent set T of a generalized Vandermonde matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVandSpec {
    x: Vec<Elem>,
    exponents: Vec<usize>,
}

/// Which determinant route a spec takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscShape {
    /// I = ∅: an ordinary Vandermonde matrix.
    Plain,
    /// I = {n-1}.
    LastButOne,
    /// I = {1}.
    One,
    /// I = {1, n}.
    OneAndN,
    General,
}

impl GVandSpec {
    /// Spec from points and a discontinuity set I; T is {0..=n+|I|-1} \ I.
    pub fn from_discontinuities(x: Vec<Elem>, disc: &[usize]) -> Result<Self> {
        let n = x.len();
        if n == 0 {
            return Err(Error::InvalidSpec("need at least one point".into()));
        }
        if disc.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec(format!("I = {disc:?} is not strictly increasing")));
        }
        let top = n + disc.len() - 1;
        if let Some(&l) = disc.iter().find(|&&l| l >= top) {
            return Err(Error::InvalidSpec(format!("discontinuity {l} must be below the largest exponent {top}")));
        }
        let exponents = (0..=top).filter(|e| !disc.contains(e)).collect();
        Ok(GVandSpec { x, exponents })
    }

    /// Spec from points and a strictly increasing exponent set of size n.
    pub fn from_exponents(x: Vec<Elem>, exponents: Vec<usize>) -> Result<Self> {
        if x.is_empty() || exponents.len() != x.len() {
            return Err(Error::InvalidSpec(format!("{} exponents for {} points", exponents.len(), x.len())));
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec(format!("T = {exponents:?} is not strictly increasing")));
        }
        Ok(GVandSpec { x, exponents })
    }

    /// Parses `x=[e1,e2,...]; I={l1,l2}`. Entries of I are exponents; the
    /// tokens `n` and `n-1` stand for those values. `I={}` or a missing
    /// `I` clause gives a plain Vandermonde spec.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let mut x = None;
        let mut disc_text = None;
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value in {part:?}")))?;
            match key.trim() {
                "x" => x = Some(field.parse_elements(value)?),
                "I" => disc_text = Some(value.trim().to_string()),
                k => return Err(Error::Parse(format!("unknown key {k:?}"))),
            }
        }
        let x = x.ok_or_else(|| Error::Parse("missing x=[...]".into()))?;
        let n = x.len();
        let disc = match disc_text {
            None => Vec::new(),
            Some(t) => {
                let inner = t
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("I must be written {{...}}, got {t:?}")))?;
                inner
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| match s {
                        "n" => Ok(n),
                        "n-1" => Ok(n.saturating_sub(1)),
                        _ => s.parse().map_err(|_| Error::Parse(format!("bad discontinuity {s:?}"))),
                    })
                    .collect::<Result<Vec<usize>>>()?
            }
        };
        Self::from_discontinuities(x, &disc)
    }

    /// Inverse of [`GVandSpec::parse`].
    pub fn format(&self, field: &Field, notation: Notation) -> String {
        let disc: Vec<String> = self.discontinuities().iter().map(|l| l.to_string()).collect();
        format!("x=[{}]; I={{{}}}", field.format_elements(&self.x, notation), disc.join(","))
    }

    pub fn points(&self) -> &[Elem] {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// The exponent set T.
    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// The discontinuity set I.
    pub fn discontinuities(&self) -> Vec<usize> {
        let top = *self.exponents.last().expect("nonempty");
        (0..top).filter(|e| !self.exponents.contains(e)).collect()
    }

    pub fn shape(&self) -> DiscShape {
        let n = self.n();
        match self.discontinuities().as_slice() {
            [] => DiscShape::Plain,
            [l] if *l == n - 1 => DiscShape::LastButOne,
            [1] => DiscShape::One,
            [1, l] if *l == n => DiscShape::OneAndN,
            _ => DiscShape::General,
        }
    }
}

/// vand(x): row i holds the i-th powers, i = 0..n-1.
pub fn vand(field: &Field, x: &[Elem]) -> FieldMatrix {
    gvand_rows(field, x, &(0..x.len()).collect::<Vec<_>>())
}

pub fn gvand(field: &Field, spec: &GVandSpec) -> FieldMatrix {
    gvand_rows(field, &spec.x, &spec.exponents)
}

fn gvand_rows(field: &Field, x: &[Elem], exps: &[usize]) -> FieldMatrix {
    FieldMatrix::from_fn(field, exps.len(), x.len(), |i, j| {
        field.pow(x[j], exps[i] as i64).expect("nonnegative exponent")
    })
}

/// ∏_{i<j} (x_j - x_i).
pub fn vandermonde_product(field: &Field, x: &[Elem]) -> Elem {
    let mut acc = Elem::ONE;
    for j in 0..x.len() {
        for i in 0..j {
            acc = field.mul(acc, field.sub(x[j], x[i]));
        }
    }
    acc
}

/// σ_0, ..., σ_n of x via σ_d(x ∪ {y}) = σ_d(x) + y·σ_{d-1}(x).
pub fn elementary_symmetric(field: &Field, x: &[Elem]) -> Vec<Elem> {
    let n = x.len();
    let mut e = vec![Elem::ZERO; n + 1];
    e[0] = Elem::ONE;
    for (i, &xi) in x.iter().enumerate() {
        for d in (1..=i + 1).rev() {
            e[d] = field.add(e[d], field.mul(xi, e[d - 1]));
        }
    }
    e
}

/// σ_d(x) in O(n·d).
pub fn sigma(field: &Field, d: usize, x: &[Elem]) -> Result<Elem> {
    let n = x.len();
    if d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    let mut e = vec![Elem::ZERO; d + 1];
    e[0] = Elem::ONE;
    for (i, &xi) in x.iter().enumerate() {
        for k in (1..=(i + 1).min(d)).rev() {
            e[k] = field.add(e[k], field.mul(xi, e[k - 1]));
        }
    }
    Ok(e[d])
}

fn has_repeat(x: &[Elem]) -> bool {
    (0..x.len()).any(|j| (0..j).any(|i| x[i] == x[j]))
}

/// The s×s matrix S(x) = (σ_{n - l_i + j - 1}(x)), σ_d = 0 outside 0..=n.
pub fn symmetric_correction_matrix(field: &Field, spec: &GVandSpec) -> Option<FieldMatrix> {
    let disc = spec.discontinuities();
    if disc.is_empty() {
        return None;
    }
    let n = spec.n() as i64;
    let sig = elementary_symmetric(field, &spec.x);
    let s = disc.len();
    Some(FieldMatrix::from_fn(field, s, s, |i, j| {
        let d = n - disc[i] as i64 + j as i64;
        if (0..=n).contains(&d) {
            sig[d as usize]
        } else {
            Elem::ZERO
        }
    }))
}

/// det(V(x; T)) via the symmetric-polynomial factorization, always through
/// the general S matrix.
pub fn det_gvand_general(field: &Field, spec: &GVandSpec) -> Elem {
    if has_repeat(&spec.x) {
        return Elem::ZERO;
    }
    let v = vandermonde_product(field, &spec.x);
    match symmetric_correction_matrix(field, spec) {
        None => v,
        Some(s) => field.mul(v, s.det().expect("S is square")),
    }
}

/// det(V(x; T)) via the closed forms for I = ∅, {n-1}, {1}, {1,n}, and the
/// general S-matrix product otherwise. Repeated points give 0 without
/// evaluating S. The {1} and {1,n} forms need every x_i nonzero.
pub fn det_gvand_formula(field: &Field, spec: &GVandSpec) -> Result<Elem> {
    let x = &spec.x;
    if has_repeat(x) {
        return Ok(Elem::ZERO);
    }
    let v = vandermonde_product(field, x);
    let inverse_sum =
        || -> Result<Elem> { x.iter().try_fold(Elem::ZERO, |acc, &xi| Ok(field.add(acc, field.inv(xi)?))) };
    Ok(match spec.shape() {
        DiscShape::Plain => v,
        DiscShape::LastButOne => field.mul(v, field.sum(x)),
        DiscShape::One => {
            let s = inverse_sum()?;
            field.mul(field.mul(field.product(x), v), s)
        }
        DiscShape::OneAndN => {
            let s = inverse_sum()?;
            let bracket = field.sub(field.mul(field.sum(x), s), Elem::ONE);
            field.mul(field.mul(v, field.product(x)), bracket)
        }
        DiscShape::General => det_gvand_general(field, spec),
    })
}
