//! Nonrecursive constructions A = V₁⁻¹V₂ from two generalized Vandermonde
//! matrices sharing one discontinuity set I ∈ {{n-1}, {1}, {1,n}}.
//!
//! The 2n points x_1..x_n, x_{n+1}..x_{2n} form the pool. Every n columns of
//! [V₁ | V₂] form a generalized Vandermonde matrix of the same shape, so the
//! code of [I | A] is decided by one scalar per n-subset R of the pool:
//!
//! | I       | condition value                  |
//! |---------|----------------------------------|
//! | {n-1}   | Σ x_r                            |
//! | {1}     | Σ x_r⁻¹                          |
//! | {1,n}   | (Σ x_r)(Σ x_r⁻¹) - 1             |
//!
//! All values nonzero gives MDS. The two designated subsets (x and y
//! themselves) nonzero plus some other subset zero gives NMDS.
//!
//! Every builder re-checks its output against the [`crate::codes`] oracle
//! unless told not to.

use serde::Serialize;

use crate::codes::{is_mds_matrix, is_nmds_matrix, Caps};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::FieldMatrix;
use crate::vandermonde::{gvand, GVandSpec};

/// Largest number of n-subsets a scan visits.
pub const SUBSET_CAP: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Disc {
    /// I = {n-1}.
    #[serde(rename = "n-1")]
    LastButOne,
    /// I = {1}.
    #[serde(rename = "1")]
    One,
    /// I = {1, n}.
    #[serde(rename = "1,n")]
    OneAndN,
}

impl Disc {
    /// The discontinuity set for order n.
    pub fn set(self, n: usize) -> Vec<usize> {
        match self {
            Disc::LastButOne => vec![n - 1],
            Disc::One => vec![1],
            Disc::OneAndN => vec![1, n],
        }
    }

    pub fn mode(self) -> SumMode {
        match self {
            Disc::LastButOne => SumMode::Sum,
            Disc::One => SumMode::InvSum,
            Disc::OneAndN => SumMode::ProductForm,
        }
    }
}

impl std::str::FromStr for Disc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Disc> {
        match s.replace(' ', "").trim_matches(|c| c == '{' || c == '}') {
            "n-1" => Ok(Disc::LastButOne),
            "1" => Ok(Disc::One),
            "1,n" => Ok(Disc::OneAndN),
            other => Err(Error::Parse(format!("unknown discontinuity set {other:?}; expected n-1, 1 or 1,n"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumMode {
    Sum,
    InvSum,
    ProductForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Mds,
    Nmds,
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Target> {
        match s.to_ascii_lowercase().as_str() {
            "mds" => Ok(Target::Mds),
            "nmds" => Ok(Target::Nmds),
            _ => Err(Error::Parse(format!("unknown target {s:?}; expected mds or nmds"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// V₁⁻¹V₂
    Forward,
    /// V₂⁻¹V₁
    Backward,
}

/// Validated points x, y and discontinuity set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XYSpec {
    x: Vec<Elem>,
    y: Vec<Elem>,
    disc: Disc,
}

impl XYSpec {
    /// Rejects unequal lengths, repeated pool elements ([`Error::NotDistinct`]
    /// with pool indices) and, when I ≠ {n-1}, zero elements.
    pub fn new(field: &Field, x: Vec<Elem>, y: Vec<Elem>, disc: Disc) -> Result<Self> {
        if x.is_empty() || x.len() != y.len() {
            return Err(Error::InvalidSpec(format!("x has {} points, y has {}", x.len(), y.len())));
        }
        if disc == Disc::OneAndN && x.len() < 2 {
            return Err(Error::InvalidSpec("I = {1,n} needs n >= 2".into()));
        }
        let spec = XYSpec { x, y, disc };
        let pool = spec.pool();
        for &e in &pool {
            field.check(e)?;
        }
        check_pool(&pool, disc.mode())?;
        Ok(spec)
    }

    pub fn x(&self) -> &[Elem] {
        &self.x
    }

    pub fn y(&self) -> &[Elem] {
        &self.y
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// x followed by y.
    pub fn pool(&self) -> Vec<Elem> {
        self.x.iter().chain(&self.y).copied().collect()
    }

    /// The same spec with x and y exchanged.
    pub fn swapped(&self) -> XYSpec {
        XYSpec { x: self.y.clone(), y: self.x.clone(), disc: self.disc }
    }
}

fn check_pool(pool: &[Elem], mode: SumMode) -> Result<()> {
    for j in 0..pool.len() {
        for i in 0..j {
            if pool[i] == pool[j] {
                return Err(Error::NotDistinct(i, j));
            }
        }
    }
    if mode != SumMode::Sum && pool.iter().any(|e| e.is_zero()) {
        return Err(Error::DivisionByZero);
    }
    Ok(())
}

/// Outcome of scanning every n-subset R of a 2n-element pool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub mode: SumMode,
    pub subsets: u64,
    pub zero: u64,
    pub nonzero: u64,
    /// Lexicographically first R (pool indices) with a zero value. When the
    /// designated subsets are nonzero this is an "other" subset.
    #[serde(serialize_with = "crate::codes::one_based_opt")]
    pub first_zero: Option<Vec<usize>>,
    /// First and last n pool elements both give nonzero values.
    pub designated_nonzero: bool,
    pub mds_eligible: bool,
    pub nmds_eligible: bool,
}

/// The condition value of one subset R under `mode`.
pub fn condition_value(field: &Field, elems: &[Elem], mode: SumMode) -> Result<Elem> {
    let sum = || field.sum(elems);
    let inv_sum = || -> Result<Elem> { elems.iter().try_fold(Elem::ZERO, |acc, &e| Ok(field.add(acc, field.inv(e)?))) };
    Ok(match mode {
        SumMode::Sum => sum(),
        SumMode::InvSum => inv_sum()?,
        SumMode::ProductForm => field.sub(field.mul(sum(), inv_sum()?), Elem::ONE),
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Visits every k-subset of 0..values.len() in lexicographic order, handing
/// the callback the subset and the running sums of both value columns.
/// Stops early when the callback returns false.
pub(crate) fn for_each_subset_sum(
    field: &Field,
    values: &[Elem],
    inverses: &[Elem],
    k: usize,
    mut visit: impl FnMut(&[usize], Elem, Elem) -> bool,
) {
    let n = values.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = Vec::with_capacity(k);
    let mut sums = vec![(Elem::ZERO, Elem::ZERO)];
    let mut next = 0usize;
    loop {
        if idx.len() == k {
            let (s, t) = sums[k];
            if !visit(&idx, s, t) {
                return;
            }
        }
        // extend when possible, otherwise backtrack and advance
        if idx.len() < k && next + (k - idx.len()) <= n {
            let (s, t) = sums[idx.len()];
            idx.push(next);
            sums.push((field.add(s, values[next]), field.add(t, inverses[next])));
            next += 1;
            continue;
        }
        loop {
            let Some(last) = idx.pop() else { return };
            sums.pop();
            if last + 1 + (k - idx.len() - 1) < n {
                next = last + 1;
                break;
            }
        }
    }
}

/// Scans all C(2n, n) subsets of `pool` (|pool| = 2n) under `mode`.
pub fn check_subset_sums(field: &Field, pool: &[Elem], mode: SumMode) -> Result<ConditionReport> {
    if pool.is_empty() || !pool.len().is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("pool size {} is not a positive even number", pool.len())));
    }
    check_pool(pool, mode)?;
    let n = pool.len() / 2;
    let total = binomial(2 * n as u64, n as u64);
    if total > SUBSET_CAP as u128 {
        return Err(Error::TooLarge(format!("{total} subsets exceed the cap {SUBSET_CAP}")));
    }
    let inverses: Vec<Elem> = match mode {
        SumMode::Sum => vec![Elem::ZERO; pool.len()],
        _ => pool.iter().map(|&e| field.inv(e)).collect::<Result<_>>()?,
    };
    let last_designated: Vec<usize> = (n..2 * n).collect();
    let mut zero = 0u64;
    let mut first_zero = None;
    let mut designated_nonzero = true;
    let mut subsets = 0u64;
    for_each_subset_sum(field, pool, &inverses, n, |r, s, t| {
        let value = match mode {
            SumMode::Sum => s,
            SumMode::InvSum => t,
            SumMode::ProductForm => field.sub(field.mul(s, t), Elem::ONE),
        };
        subsets += 1;
        if value.is_zero() {
            zero += 1;
            if first_zero.is_none() {
                first_zero = Some(r.to_vec());
            }
            // the first and last subsets in lexicographic order are x and y
            if subsets == 1 || r == last_designated.as_slice() {
                designated_nonzero = false;
            }
        }
        true
    });
    Ok(ConditionReport {
        mode,
        subsets,
        zero,
        nonzero: subsets - zero,
        first_zero,
        designated_nonzero,
        mds_eligible: zero == 0,
        nmds_eligible: designated_nonzero && zero > 0,
    })
}

/// V₁⁻¹V₂ (or V₂⁻¹V₁) for V₁ = V_⊥(x; I), V₂ = V_⊥(y; I).
pub fn build_quotient(field: &Field, spec: &XYSpec, direction: Direction) -> Result<FieldMatrix> {
    let disc = spec.disc.set(spec.n());
    let v1 = gvand(field, &GVandSpec::from_discontinuities(spec.x.clone(), &disc)?);
    let v2 = gvand(field, &GVandSpec::from_discontinuities(spec.y.clone(), &disc)?);
    let inv = |v: &FieldMatrix, which: u8| v.inverse().map_err(|_| Error::SingularFactor(which));
    match direction {
        Direction::Forward => inv(&v1, 1)?.mul(&v2),
        Direction::Backward => inv(&v2, 2)?.mul(&v1),
    }
}

/// Options shared by the builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Re-check the output against the code oracle.
    pub verify: bool,
    pub direction: Direction,
    pub caps: Caps,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { verify: true, direction: Direction::Forward, caps: Caps::default() }
    }
}

fn violated(reason: &str, witness: Option<Vec<usize>>) -> Error {
    Error::ConditionViolated { reason: reason.into(), witness }
}

/// Checks the subset conditions for `target` and returns the scan report.
pub fn validate(field: &Field, spec: &XYSpec, target: Target) -> Result<ConditionReport> {
    if target == Target::Nmds && spec.disc == Disc::OneAndN {
        return Err(Error::Unsupported("no NMDS condition is known for I = {1,n}".into()));
    }
    let report = check_subset_sums(field, &spec.pool(), spec.disc.mode())?;
    match target {
        Target::Mds if !report.mds_eligible => {
            Err(violated("some n-subset of the pool has a zero condition value", report.first_zero.clone()))
        }
        Target::Nmds if !report.designated_nonzero => Err(violated(
            "the condition value of x or of y is zero, so V1 or V2 is singular",
            report.first_zero.clone(),
        )),
        Target::Nmds if !report.nmds_eligible => {
            Err(violated("no n-subset has a zero condition value; the pool is MDS-eligible", None))
        }
        _ => Ok(report),
    }
}

fn self_check(a: &FieldMatrix, target: Target, caps: &Caps) -> Result<()> {
    let ok = match target {
        Target::Mds => is_mds_matrix(a, caps)?.holds,
        Target::Nmds => is_nmds_matrix(a, caps)?.holds,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::SelfCheckFailed(format!("the constructed matrix is not {target:?}")))
    }
}

fn construct(field: &Field, spec: &XYSpec, target: Target, opts: &BuildOptions) -> Result<FieldMatrix> {
    validate(field, spec, target)?;
    let a = build_quotient(field, spec, opts.direction)?;
    if opts.verify {
        self_check(&a, target, &opts.caps)?;
    }
    Ok(a)
}

pub fn construct_mds(field: &Field, spec: &XYSpec, opts: &BuildOptions) -> Result<FieldMatrix> {
    construct(field, spec, Target::Mds, opts)
}

pub fn construct_nmds(field: &Field, spec: &XYSpec, opts: &BuildOptions) -> Result<FieldMatrix> {
    construct(field, spec, Target::Nmds, opts)
}

/// Involutory MDS or NMDS matrix V₁⁻¹V₂ with I = {n-1} and y_i = l + x_i,
/// over a field of characteristic 2 and for even n.
pub fn construct_involutory(
    field: &Field,
    x: &[Elem],
    l: Elem,
    target: Target,
    opts: &BuildOptions,
) -> Result<FieldMatrix> {
    if field.characteristic() != 2 {
        return Err(Error::NotCharTwo(field.characteristic()));
    }
    if x.len() % 2 == 1 {
        return Err(Error::OddOrder(x.len()));
    }
    if l.is_zero() {
        return Err(Error::InvalidSpec("the shift l must be nonzero".into()));
    }
    let y: Vec<Elem> = x.iter().map(|&xi| field.add(l, xi)).collect();
    let spec = XYSpec::new(field, x.to_vec(), y, Disc::LastButOne)?;
    let a = construct(field, &spec, target, &BuildOptions { direction: Direction::Forward, ..*opts })?;
    if !a.is_involutory() {
        return Err(Error::SelfCheckFailed("A·A is not the identity".into()));
    }
    let disc = [spec.n() - 1];
    let v1 = gvand(field, &GVandSpec::from_discontinuities(spec.x.clone(), &disc)?);
    let v2 = gvand(field, &GVandSpec::from_discontinuities(spec.y.clone(), &disc)?);
    if !v2.mul(&v1.inverse()?)?.is_lower_triangular() {
        return Err(Error::SelfCheckFailed("V2·V1⁻¹ is not lower triangular".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn gf16() -> Field {
        Field::binary(4, 0x13).unwrap()
    }

    fn pts(f: &Field, ks: &[i64]) -> Vec<Elem> {
        ks.iter().map(|&k| f.alpha_pow(k)).collect()
    }

    #[test]
    fn subset_walk_is_lexicographic() {
        let f = gf16();
        let vals = pts(&f, &[0, 1, 2, 3, 4, 5]);
        let mut seen = Vec::new();
        for_each_subset_sum(&f, &vals, &vals, 3, |r, s, _| {
            let direct = f.sum(&r.iter().map(|&i| vals[i]).collect::<Vec<_>>());
            assert_eq!(s, direct);
            seen.push(r.to_vec());
            true
        });
        let expected: Vec<Vec<usize>> = (0..6).combinations(3).collect();
        assert_eq!(seen, expected);
        let mut count = 0;
        for_each_subset_sum(&f, &vals, &vals, 0, |r, _, _| {
            assert!(r.is_empty());
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn designated_subsets_tracked() {
        let f = gf16();
        // 1 + a + a^3 + a^7 = 0 makes x itself a zero subset
        let pool = pts(&f, &[0, 1, 3, 7, 2, 4, 5, 6]);
        let r = check_subset_sums(&f, &pool, SumMode::Sum).unwrap();
        assert!(!r.designated_nonzero);
        assert!(!r.nmds_eligible && !r.mds_eligible);
        let swapped: Vec<Elem> = pool[4..].iter().chain(&pool[..4]).copied().collect();
        let r2 = check_subset_sums(&f, &swapped, SumMode::Sum).unwrap();
        assert!(!r2.designated_nonzero);
    }

    #[test]
    fn pool_validation() {
        let f = gf16();
        let x = pts(&f, &[0, 1]);
        assert_eq!(XYSpec::new(&f, x.clone(), pts(&f, &[2, 0]), Disc::LastButOne), Err(Error::NotDistinct(0, 3)));
        let with_zero = vec![Elem::ZERO, f.alpha_pow(5)];
        assert!(XYSpec::new(&f, x.clone(), with_zero.clone(), Disc::LastButOne).is_ok());
        assert_eq!(XYSpec::new(&f, x.clone(), with_zero.clone(), Disc::One), Err(Error::DivisionByZero));
        let mut pool = x.clone();
        pool.extend(&with_zero);
        assert_eq!(check_subset_sums(&f, &pool, SumMode::InvSum), Err(Error::DivisionByZero));
        assert!(XYSpec::new(&f, x, pts(&f, &[3]), Disc::One).is_err());
    }

    #[test]
    fn identical_points_give_identity() {
        let f = gf16();
        let x = pts(&f, &[0, 1, 2]);
        let spec = XYSpec { x: x.clone(), y: x, disc: Disc::LastButOne };
        assert!(build_quotient(&f, &spec, Direction::Forward).unwrap().is_identity());
    }

    #[test]
    fn singular_factor_reported() {
        let f = gf16();
        let spec = XYSpec::new(&f, pts(&f, &[0, 1, 3, 7]), pts(&f, &[2, 4, 5, 6]), Disc::LastButOne).unwrap();
        assert_eq!(build_quotient(&f, &spec, Direction::Forward), Err(Error::SingularFactor(1)));
        assert_eq!(build_quotient(&f, &spec.swapped(), Direction::Backward), Err(Error::SingularFactor(2)));
    }

    #[test]
    fn nmds_rejects_mds_eligible_pool() {
        let f = Field::binary(8, 0x1c3).unwrap();
        let spec = XYSpec::new(&f, pts(&f, &[0, 1, 2, 3]), pts(&f, &[4, 5, 6, 7]), Disc::LastButOne).unwrap();
        let err = construct_nmds(&f, &spec, &BuildOptions::default()).unwrap_err();
        assert!(matches!(err, Error::ConditionViolated { witness: None, .. }));
    }

    #[test]
    fn one_and_n_nmds_unsupported() {
        let f = gf16();
        let spec = XYSpec::new(&f, pts(&f, &[0, 1, 2, 3]), pts(&f, &[4, 5, 6, 7]), Disc::OneAndN).unwrap();
        assert!(matches!(construct_nmds(&f, &spec, &BuildOptions::default()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn involutory_preconditions() {
        let f = gf16();
        let opts = BuildOptions::default();
        let x3 = pts(&f, &[0, 1, 2]);
        assert_eq!(construct_involutory(&f, &x3, f.alpha_pow(3), Target::Mds, &opts), Err(Error::OddOrder(3)));
        let g = Field::new(3, 2, &[2, 1, 1]).unwrap();
        let x = pts(&g, &[0, 1]);
        assert_eq!(construct_involutory(&g, &x, g.one(), Target::Mds, &opts), Err(Error::NotCharTwo(3)));
        assert!(construct_involutory(&f, &pts(&f, &[0, 1]), Elem::ZERO, Target::Mds, &opts).is_err());
    }

    #[test]
    fn disc_parsing() {
        assert_eq!("n-1".parse::<Disc>().unwrap(), Disc::LastButOne);
        assert_eq!("{1, n}".parse::<Disc>().unwrap(), Disc::OneAndN);
        assert_eq!("1".parse::<Disc>().unwrap(), Disc::One);
        assert!("2".parse::<Disc>().is_err());
        assert_eq!("NMDS".parse::<Target>().unwrap(), Target::Nmds);
    }
}
