//! Recursive constructions: a companion matrix C_g whose power C_g^m is MDS
//! or NMDS.
//!
//! For g = ∏(x - λ_i) with distinct nonzero roots, C_g = V D V⁻¹ where
//! V = vand(λ) and D = diag(λ). The code of [I | (C_gᵀ)^m] is then also
//! generated by the n×2n matrix G′ whose row i is λ_i^e for
//! e ∈ E = {0, ..., n-1, m, ..., m+n-1}. Choosing the roots as powers of a
//! single θ turns every n columns of G′ into a generalized Vandermonde matrix
//! in the points θ^e, so eligibility reduces to a subset-sum scan over E.
//!
//! ```
//! use nearmds::recursive::{construct_theta_ib, Eligibility};
//! use nearmds::Field;
//!
//! let f = Field::binary(4, 0x13).unwrap();
//! let c = construct_theta_ib(&f, f.alpha(), 4, 4, true).unwrap();
//! assert_eq!(c.eligibility, Eligibility::NmdsEligible);
//! ```

use std::fmt;
use std::ops::RangeInclusive;

use itertools::Itertools;
use serde::Serialize;

use crate::codes::{is_mds_matrix, is_nmds_matrix, matrix_verdict, nmds_clauses, Caps, ClauseReport, MatrixVerdict};
use crate::construct::{check_subset_sums, ConditionReport, SumMode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Notation};
use crate::matrix::FieldMatrix;
use crate::vandermonde::vand;

/// Longest m range [`scan_exponents`] accepts.
pub const SCAN_CAP: u64 = 1024;

/// g(x) = a_1 + a_2 x + ... + a_n x^{n-1} + x^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl MonicPoly {
    /// From a_1..a_n, constant term first; the leading 1 is implicit.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(MonicPoly { field: field.clone(), coeffs })
    }

    /// ∏ (x - λ_i).
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidPolynomial("need at least one root".into()));
        }
        // full coefficient vector, constant first, leading term included
        let mut c = vec![Elem::ONE];
        for &r in roots {
            let mut next = vec![Elem::ZERO; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], ci);
                next[i] = field.sub(next[i], field.mul(r, ci));
            }
            c = next;
        }
        c.pop();
        MonicPoly::new(field, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// a_1..a_n.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ONE, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn format(&self, notation: Notation) -> String {
        let f = &self.field;
        let mut terms = vec![format!("x^{}", self.degree())];
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let coef = f.format(c, notation);
            terms.push(match (coef.as_str(), mono.is_empty()) {
                (_, true) => coef,
                ("1", false) => mono,
                (_, false) => format!("{coef}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(&self.format(Notation::Power))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Explicit,
    ThetaIb,
    ThetaIc,
    ThetaNewMds,
}

/// Distinct nonzero roots λ_1..λ_n and where they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFamily {
    lambdas: Vec<Elem>,
    pub provenance: Provenance,
    pub theta: Option<Elem>,
    pub scale: Option<Elem>,
}

fn check_roots(lambdas: &[Elem]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(Error::InvalidSpec("need at least one root".into()));
    }
    for j in 0..lambdas.len() {
        for i in 0..j {
            if lambdas[i] == lambdas[j] {
                return Err(Error::RepeatedRoot(i, j));
            }
        }
    }
    if lambdas.iter().any(|l| l.is_zero()) {
        return Err(Error::InvalidSpec("roots must be nonzero".into()));
    }
    Ok(())
}

/// Exponents k with λ_i = θ^{k_i} for each θ-family.
fn theta_exponents(provenance: Provenance, n: usize) -> Vec<i64> {
    let n = n as i64;
    match provenance {
        Provenance::ThetaIb => (0..n - 1).chain([n]).collect(),
        Provenance::ThetaIc => [0].into_iter().chain(2..=n).collect(),
        Provenance::ThetaNewMds => {
            if n == 1 {
                vec![0]
            } else {
                [0].into_iter().chain(2..n).chain([n + 1]).collect()
            }
        }
        Provenance::Explicit => unreachable!("explicit families have no exponents"),
    }
}

impl RootFamily {
    pub fn explicit(field: &Field, lambdas: Vec<Elem>) -> Result<Self> {
        for &l in &lambdas {
            field.check(l)?;
        }
        check_roots(&lambdas)?;
        Ok(RootFamily { lambdas, provenance: Provenance::Explicit, theta: None, scale: None })
    }

    /// The θ-power family of the given provenance. Roots must come out
    /// distinct and θ nonzero.
    pub fn theta(field: &Field, provenance: Provenance, theta: Elem, n: usize) -> Result<Self> {
        field.check(theta)?;
        if theta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        let lambdas: Vec<Elem> = theta_exponents(provenance, n)
            .into_iter()
            .map(|k| field.pow(theta, k).expect("theta is nonzero"))
            .collect();
        check_roots(&lambdas)?;
        Ok(RootFamily { lambdas, provenance, theta: Some(theta), scale: None })
    }

    /// Roots c·λ_i.
    pub fn scaled(&self, field: &Field, c: Elem) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lambdas = self.lambdas.iter().map(|&l| field.mul(c, l)).collect();
        let scale = Some(self.scale.map_or(c, |s| field.mul(s, c)));
        Ok(RootFamily { lambdas, scale, ..self.clone() })
    }

    pub fn lambdas(&self) -> &[Elem] {
        &self.lambdas
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    pub fn poly(&self, field: &Field) -> MonicPoly {
        MonicPoly::from_roots(field, &self.lambdas).expect("family is nonempty")
    }
}

/// E = {0, ..., n-1, m, ..., m+n-1} with m >= n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentSet {
    n: usize,
    m: u64,
}

impl ExponentSet {
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if m < n as u64 {
            return Err(Error::ExponentTooSmall { m, n });
        }
        Ok(ExponentSet { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn exponents(&self) -> Vec<u64> {
        (0..self.n as u64).chain(self.m..self.m + self.n as u64).collect()
    }
}

/// Superdiagonal ones, last row (-a_1, ..., -a_n).
pub fn companion(g: &MonicPoly) -> FieldMatrix {
    let f = g.field();
    let n = g.degree();
    FieldMatrix::from_fn(f, n, n, |i, j| {
        if i + 1 == n {
            f.neg(g.coeffs[j])
        } else if j == i + 1 {
            Elem::ONE
        } else {
            Elem::ZERO
        }
    })
}

pub fn poly_from_roots(field: &Field, fam: &RootFamily) -> MonicPoly {
    fam.poly(field)
}

fn check_family_roots(g: &MonicPoly, fam: &RootFamily) -> Result<()> {
    if fam.n() != g.degree() {
        return Err(Error::RootMismatch(format!("{} roots for degree {}", fam.n(), g.degree())));
    }
    check_roots(&fam.lambdas)?;
    if let Some(i) = fam.lambdas.iter().position(|&l| !g.eval(l).is_zero()) {
        return Err(Error::RootMismatch(format!("lambda_{} is not a root of g", i + 1)));
    }
    Ok(())
}

/// (V, D) with C_g = V D V⁻¹, V = vand(λ), D = diag(λ). Both C_g = V D V⁻¹
/// and C_gᵀ = (Vᵀ)⁻¹ D Vᵀ are checked before returning.
pub fn diagonalize_companion(g: &MonicPoly, fam: &RootFamily) -> Result<(FieldMatrix, FieldMatrix)> {
    check_family_roots(g, fam)?;
    let f = g.field();
    let v = vand(f, &fam.lambdas);
    let d = FieldMatrix::diagonal(f, &fam.lambdas);
    let c = companion(g);
    let vinv = v.inverse()?;
    if v.mul(&d)?.mul(&vinv)? != c {
        return Err(Error::SelfCheckFailed("C_g != V D V^-1".into()));
    }
    let vt = v.transpose();
    if vt.inverse()?.mul(&d)?.mul(&vt)? != c.transpose() {
        return Err(Error::SelfCheckFailed("C_g^T != (V^T)^-1 D V^T".into()));
    }
    Ok((v, d))
}

/// The n×2n matrix with row i = (λ_i^e) for e ∈ E.
pub fn gprime(field: &Field, fam: &RootFamily, m: u64) -> Result<FieldMatrix> {
    let e = ExponentSet::new(fam.n(), m)?.exponents();
    Ok(FieldMatrix::from_fn(field, fam.n(), e.len(), |i, j| pow_u(field, fam.lambdas[i], e[j])))
}

fn pow_u(field: &Field, a: Elem, e: u64) -> Elem {
    field.pow(a, e as i64).expect("nonnegative exponent")
}

/// Which route decides a recursive verdict.
#[derive(Clone, Copy, Debug)]
pub enum Method<'a> {
    /// Power the companion matrix and run the matrix classifiers.
    Direct,
    /// Rank tests on the columns of G′ built from these roots of g.
    GPrime(&'a RootFamily),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursiveCheck {
    pub holds: bool,
    /// Dependent column set (MDS failure), zero-based; serialized one-based.
    #[serde(serialize_with = "crate::codes::one_based_opt")]
    pub witness: Option<Vec<usize>>,
    /// Clause evidence for NMDS checks.
    pub clauses: Option<ClauseReport>,
}

fn powered(g: &MonicPoly, m: u64, caps: &Caps) -> Result<FieldMatrix> {
    if g.degree() > caps.matrix_order {
        return Err(Error::TooLarge(format!("order {} exceeds the cap {}", g.degree(), caps.matrix_order)));
    }
    companion(g).pow(m)
}

/// Whether C_g^m is MDS. The direct method answers false for m < n; the G′
/// method needs m >= n.
pub fn is_recursive_mds(g: &MonicPoly, m: u64, method: Method<'_>, caps: &Caps) -> Result<RecursiveCheck> {
    let n = g.degree();
    match method {
        Method::Direct => {
            let c = is_mds_matrix(&powered(g, m, caps)?, caps)?;
            Ok(RecursiveCheck { holds: c.holds, witness: c.dependent_columns, clauses: None })
        }
        Method::GPrime(fam) => {
            check_family_roots(g, fam)?;
            if n > caps.matrix_order {
                return Err(Error::TooLarge(format!("order {n} exceeds the cap {}", caps.matrix_order)));
            }
            let gp = gprime(g.field(), fam, m)?;
            let witness = (0..2 * n).combinations(n).find(|c| gp.column_rank(c) < n);
            Ok(RecursiveCheck { holds: witness.is_none(), witness, clauses: None })
        }
    }
}

/// Whether C_g^m is NMDS, with the three-clause evidence.
pub fn is_recursive_nmds(g: &MonicPoly, m: u64, method: Method<'_>, caps: &Caps) -> Result<RecursiveCheck> {
    let clauses = match method {
        Method::Direct => is_nmds_matrix(&powered(g, m, caps)?, caps)?,
        Method::GPrime(fam) => {
            check_family_roots(g, fam)?;
            if g.degree() > caps.matrix_order {
                return Err(Error::TooLarge(format!("order {} exceeds the cap {}", g.degree(), caps.matrix_order)));
            }
            nmds_clauses(&gprime(g.field(), fam, m)?)
        }
    };
    Ok(RecursiveCheck { holds: clauses.holds, witness: None, clauses: Some(clauses) })
}

/// g*(x) = c^n g(x/c) = ∏ (x - c λ_i); coefficient a_k becomes c^{n-k+1} a_k.
pub fn scale_poly(g: &MonicPoly, c: Elem) -> Result<MonicPoly> {
    let f = g.field();
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = g.degree();
    let coeffs = g.coeffs.iter().enumerate().map(|(k, &a)| f.mul(a, pow_u(f, c, (n - k) as u64))).collect();
    MonicPoly::new(f, coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Eligibility {
    #[serde(rename = "MDS-eligible")]
    MdsEligible,
    #[serde(rename = "NMDS-eligible")]
    NmdsEligible,
    #[serde(rename = "ineligible")]
    Ineligible,
}

/// A θ-family polynomial together with its subset-scan verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaConstruction {
    pub family: RootFamily,
    pub poly: MonicPoly,
    pub m: u64,
    pub eligibility: Eligibility,
    pub scan: ConditionReport,
    /// First R ⊂ E (exponent values) with a zero condition value.
    pub zero_exponents: Option<Vec<u64>>,
    /// Verdict of C_g^m from the matrix classifiers, when verification ran.
    pub verified: Option<MatrixVerdict>,
}

/// Rejects θ when two exponents of E agree modulo ord(θ).
fn check_collisions(field: &Field, theta: Elem, e: &[u64]) -> Result<()> {
    let ord = field.multiplicative_order(theta)?;
    for j in 0..e.len() {
        for i in 0..j {
            if e[i] % ord == e[j] % ord {
                return Err(Error::ExponentCollision(e[i] as usize, e[j] as usize, ord));
            }
        }
    }
    Ok(())
}

fn construct_theta(
    field: &Field,
    provenance: Provenance,
    theta: Elem,
    n: usize,
    m: u64,
    verify: bool,
) -> Result<ThetaConstruction> {
    field.check(theta)?;
    if theta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let e = ExponentSet::new(n, m)?.exponents();
    check_collisions(field, theta, &e)?;
    let family = RootFamily::theta(field, provenance, theta, n)?;
    let poly = family.poly(field);
    let pool: Vec<Elem> = e.iter().map(|&k| pow_u(field, theta, k)).collect();
    let mode = match provenance {
        Provenance::ThetaIb => SumMode::Sum,
        Provenance::ThetaIc => SumMode::InvSum,
        _ => SumMode::ProductForm,
    };
    let scan = check_subset_sums(field, &pool, mode)?;
    let eligibility = match (provenance, scan.zero) {
        (_, 0) => Eligibility::MdsEligible,
        (Provenance::ThetaNewMds, _) => Eligibility::Ineligible,
        _ => Eligibility::NmdsEligible,
    };
    let zero_exponents = scan.first_zero.as_ref().map(|r| r.iter().map(|&i| e[i]).collect());
    let verified = if verify {
        let v = matrix_verdict(&companion(&poly).pow(m)?, &Caps::default())?;
        let agrees = match eligibility {
            Eligibility::MdsEligible => v == MatrixVerdict::Mds,
            // the I(b)/I(c) scans also decide NMDS; the new family only MDS
            Eligibility::NmdsEligible => v == MatrixVerdict::Nmds,
            Eligibility::Ineligible => v != MatrixVerdict::Mds,
        };
        if !agrees {
            return Err(Error::SelfCheckFailed(format!("subset scan says {eligibility:?} but C_g^{m} is {v:?}")));
        }
        Some(v)
    } else {
        None
    };
    Ok(ThetaConstruction { family, poly, m, eligibility, scan, zero_exponents, verified })
}

/// λ_i = θ^{i-1} for i < n, λ_n = θ^n. NMDS-eligible iff some Σ_{r∈R} θ^r = 0.
pub fn construct_theta_ib(field: &Field, theta: Elem, n: usize, m: u64, verify: bool) -> Result<ThetaConstruction> {
    construct_theta(field, Provenance::ThetaIb, theta, n, m, verify)
}

/// λ_1 = 1, λ_i = θ^i for 2 <= i <= n. NMDS-eligible iff some
/// Σ_{r∈R} θ^{-r} = 0.
pub fn construct_theta_ic(field: &Field, theta: Elem, n: usize, m: u64, verify: bool) -> Result<ThetaConstruction> {
    construct_theta(field, Provenance::ThetaIc, theta, n, m, verify)
}

/// λ_1 = 1, λ_i = θ^i for 2 <= i <= n-1, λ_n = θ^{n+1}. MDS-eligible iff
/// (Σ θ^r)(Σ θ^{-r}) - 1 ≠ 0 for every R.
pub fn construct_theta_new_mds(
    field: &Field,
    theta: Elem,
    n: usize,
    m: u64,
    verify: bool,
) -> Result<ThetaConstruction> {
    if n < 2 {
        return Err(Error::InvalidSpec("the new MDS family needs n >= 2".into()));
    }
    construct_theta(field, Provenance::ThetaNewMds, theta, n, m, verify)
}

/// Verdict of C_g^m for each m in the range, by incremental powering.
pub fn scan_exponents(g: &MonicPoly, m_range: RangeInclusive<u64>, caps: &Caps) -> Result<Vec<(u64, MatrixVerdict)>> {
    let (lo, hi) = (*m_range.start(), *m_range.end());
    if hi >= lo && hi - lo >= SCAN_CAP {
        return Err(Error::TooLarge(format!("{} exponents exceed the cap {SCAN_CAP}", hi - lo + 1)));
    }
    if m_range.is_empty() {
        return Ok(Vec::new());
    }
    let c = companion(g);
    let mut p = powered(g, lo, caps)?;
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    for m in lo..=hi {
        if m > lo {
            p = p.mul(&c)?;
        }
        out.push((m, matrix_verdict(&p, caps)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> Field {
        Field::binary(4, 0x13).unwrap()
    }

    fn pts(f: &Field, ks: &[i64]) -> Vec<Elem> {
        ks.iter().map(|&k| f.alpha_pow(k)).collect()
    }

    #[test]
    fn companion_shape() {
        let f = gf16();
        let a = f.alpha();
        let g = MonicPoly::new(&f, vec![Elem::ONE, a, Elem::ZERO, Elem::ZERO]).unwrap();
        let c = companion(&g);
        assert_eq!(c.row(3), &[Elem::ONE, a, Elem::ZERO, Elem::ZERO]);
        assert_eq!(c.row(0), &[Elem::ZERO, Elem::ONE, Elem::ZERO, Elem::ZERO]);
        let lin = MonicPoly::from_roots(&f, &[a]).unwrap();
        assert_eq!(companion(&lin), FieldMatrix::from_rows(&f, vec![vec![a]]).unwrap());
    }

    #[test]
    fn companion_in_odd_characteristic() {
        let f = Field::new(3, 2, &[2, 1, 1]).unwrap();
        let g = MonicPoly::from_roots(&f, &pts(&f, &[0, 3])).unwrap();
        let c = companion(&g);
        assert_eq!(c.get(1, 0), f.neg(g.coeffs()[0]));
        let fam = RootFamily::explicit(&f, pts(&f, &[0, 3])).unwrap();
        diagonalize_companion(&g, &fam).unwrap();
    }

    #[test]
    fn poly_from_roots_examples() {
        let f = gf16();
        let roots = pts(&f, &[0, 1, 2, 4]);
        let g = MonicPoly::from_roots(&f, &roots).unwrap();
        assert_eq!(g.coeffs()[3], f.sum(&roots));
        assert_eq!(g.coeffs()[0], f.product(&roots));
        for &r in &roots {
            assert!(g.eval(r).is_zero());
        }
        let c = f.alpha_pow(9);
        assert_eq!(MonicPoly::from_roots(&f, &[c]).unwrap().coeffs(), &[c]);
    }

    #[test]
    fn diagonalization_and_errors() {
        let f = gf16();
        let fam = RootFamily::explicit(&f, pts(&f, &[0, 1, 2, 4])).unwrap();
        let g = fam.poly(&f);
        let (v, d) = diagonalize_companion(&g, &fam).unwrap();
        assert_eq!(v, vand(&f, fam.lambdas()));
        assert_eq!(d, FieldMatrix::diagonal(&f, fam.lambdas()));
        let wrong = RootFamily::explicit(&f, pts(&f, &[0, 1, 2, 5])).unwrap();
        assert!(matches!(diagonalize_companion(&g, &wrong), Err(Error::RootMismatch(_))));
        assert_eq!(RootFamily::explicit(&f, pts(&f, &[0, 1, 1])), Err(Error::RepeatedRoot(1, 2)));
        let one = RootFamily::explicit(&f, pts(&f, &[6])).unwrap();
        let (v1, d1) = diagonalize_companion(&one.poly(&f), &one).unwrap();
        assert!(v1.is_identity());
        assert_eq!(d1.get(0, 0), f.alpha_pow(6));
    }

    #[test]
    fn gprime_unrolled() {
        let f = gf16();
        let fam = RootFamily::explicit(&f, pts(&f, &[0, 1, 2, 3])).unwrap();
        let gp = gprime(&f, &fam, 4).unwrap();
        assert_eq!(gp.cols(), 8);
        for i in 0..4 {
            for e in 0..8 {
                assert_eq!(gp.get(i, e), f.pow(fam.lambdas()[i], e as i64).unwrap());
            }
        }
        assert_eq!(gprime(&f, &fam, 3), Err(Error::ExponentTooSmall { m: 3, n: 4 }));
    }

    #[test]
    fn scale_identity_and_constant_term() {
        let f = gf16();
        let g = RootFamily::explicit(&f, pts(&f, &[0, 1, 2, 4])).unwrap().poly(&f);
        assert_eq!(scale_poly(&g, Elem::ONE).unwrap(), g);
        let c = f.alpha_pow(3);
        let s = scale_poly(&g, c).unwrap();
        assert_eq!(s.coeffs()[0], f.mul(f.pow(c, 4).unwrap(), g.coeffs()[0]));
        assert_eq!(scale_poly(&g, Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn theta_collisions() {
        let f = gf16();
        assert_eq!(construct_theta_ic(&f, Elem::ONE, 4, 4, false).unwrap_err(), Error::ExponentCollision(0, 1, 1));
        // ord(a^5) = 3
        assert!(matches!(construct_theta_ib(&f, f.alpha_pow(5), 2, 2, false), Err(Error::ExponentCollision(_, _, 3))));
        // ord(a) = 15 <= m + n - 1
        assert!(matches!(construct_theta_ib(&f, f.alpha(), 4, 12, false), Err(Error::ExponentCollision(_, _, 15))));
        assert!(matches!(construct_theta_ib(&f, f.alpha(), 4, 3, false), Err(Error::ExponentTooSmall { .. })));
    }

    #[test]
    fn polynomial_text() {
        let f = gf16();
        let g = MonicPoly::new(&f, vec![Elem::ONE, f.alpha(), Elem::ZERO, Elem::ZERO]).unwrap();
        assert_eq!(g.to_string(), "x^4 + a^1*x + 1");
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn scan_bounds() {
        let f = gf16();
        let g = MonicPoly::new(&f, vec![Elem::ONE, f.alpha()]).unwrap();
        assert!(matches!(scan_exponents(&g, 0..=SCAN_CAP, &Caps::default()), Err(Error::TooLarge(_))));
        assert!(scan_exponents(&g, 5..=4, &Caps::default()).unwrap().is_empty());
    }
}
