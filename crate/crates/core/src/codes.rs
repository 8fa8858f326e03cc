//! Linear codes over a [`Field`] and the coding-theoretic oracles used to
//! judge every construction: minimum distance, generalized Hamming weights
//! d_r, and the MDS / NMDS / AMDS classification of codes and of square
//! matrices A through the [2n, n] code generated by [I | A].
//!
//! Two facts are used throughout:
//!
//! - d_1 is the least d such that some d columns of a parity-check matrix H
//!   are linearly dependent.
//! - d_r = min { |S| : |S| - rank(H_S) >= r } over column sets S of H.
//!
//! NMDS is checked two independent ways: the three column conditions on a
//! generator matrix (rank k) and the same three conditions on a parity-check
//! matrix (rank n - k). The test suites diff the two routes against each
//! other and against d_1 = n - k, d_2 = n - k + 2.

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{FieldMatrix, DEFAULT_MINOR_CAP};

/// Limits on exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest q^k for which codewords are enumerated.
    pub codewords: u64,
    /// Largest code length n for column-subset searches.
    pub length: usize,
    /// Largest matrix order accepted by the matrix classifiers.
    pub matrix_order: usize,
    /// Largest length for which the full d_r profile is computed.
    pub profile_length: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { codewords: 1 << 24, length: 24, matrix_order: DEFAULT_MINOR_CAP, profile_length: 12 }
    }
}

pub(crate) fn one_based<S: Serializer>(cols: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(cols.iter().map(|c| c + 1))
}

pub(crate) fn one_based_opt<S: Serializer>(cols: &Option<Vec<usize>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match cols {
        Some(c) => one_based(c, s),
        None => s.serialize_none(),
    }
}

/// A linear [n, k] code given by a generator matrix of full row rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    g: FieldMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub d: usize,
    /// A codeword of weight d.
    pub codeword: Vec<Elem>,
}

/// d_r together with a column set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ghw {
    pub r: usize,
    pub d: usize,
    #[serde(serialize_with = "one_based")]
    pub columns: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "NMDS")]
    Nmds,
    #[serde(rename = "AMDS_only")]
    AmdsOnly,
    #[serde(rename = "OTHER")]
    Other,
}

/// Column evidence for one clause of a verdict. Serialized one-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    #[serde(serialize_with = "one_based")]
    pub columns: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub d1: usize,
    pub d2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dr_profile: Option<Vec<usize>>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

/// Outcome of the three NMDS column conditions on a matrix of row rank ρ:
/// (i) every ρ-1 columns independent, (ii) some ρ columns dependent,
/// (iii) every ρ+1 columns of rank ρ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub holds: bool,
    /// First ρ-1 columns that are dependent, violating (i).
    #[serde(serialize_with = "one_based_opt")]
    pub clause_i_violation: Option<Vec<usize>>,
    /// First ρ dependent columns, establishing (ii).
    #[serde(serialize_with = "one_based_opt")]
    pub clause_ii_witness: Option<Vec<usize>>,
    /// First ρ+1 columns of rank below ρ, violating (iii).
    #[serde(serialize_with = "one_based_opt")]
    pub clause_iii_violation: Option<Vec<usize>>,
}

impl ClauseReport {
    /// Witness list in the shape used by [`CodeReport`].
    pub fn witnesses(&self) -> Vec<Witness> {
        let mut out = Vec::new();
        if let Some(c) = &self.clause_i_violation {
            out.push(Witness { clause: "clause_i_violated".into(), columns: c.clone() });
        }
        if let Some(c) = &self.clause_ii_witness {
            out.push(Witness { clause: "clause_ii".into(), columns: c.clone() });
        } else {
            out.push(Witness { clause: "clause_ii_violated".into(), columns: Vec::new() });
        }
        if let Some(c) = &self.clause_iii_violation {
            out.push(Witness { clause: "clause_iii_violated".into(), columns: c.clone() });
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdsCheck {
    pub holds: bool,
    /// First n columns of [I | A] that are linearly dependent.
    #[serde(serialize_with = "one_based_opt")]
    pub dependent_columns: Option<Vec<usize>>,
}

/// Coarse verdict for a square matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatrixVerdict {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "NMDS")]
    Nmds,
    #[serde(rename = "neither")]
    Neither,
}

fn first_subset(n: usize, size: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if size > n {
        return None;
    }
    (0..n).combinations(size).find(|c| pred(c))
}

/// Rank of the given columns of `h`, where `None` stands for a parity-check
/// matrix with no rows (the code is the whole space).
fn rank_cols(h: Option<&FieldMatrix>, cols: &[usize]) -> usize {
    match h {
        Some(h) => h.column_rank(cols),
        None => 0,
    }
}

/// The three NMDS column conditions on `m`, taking ρ = number of rows (the
/// matrix is assumed to have full row rank).
pub fn nmds_clauses(m: &FieldMatrix) -> ClauseReport {
    let rho = m.rows();
    let n = m.cols();
    let clause_i_violation = if rho >= 2 { first_subset(n, rho - 1, |c| m.column_rank(c) < rho - 1) } else { None };
    let clause_ii_witness = first_subset(n, rho, |c| m.column_rank(c) < rho);
    let clause_iii_violation = first_subset(n, rho + 1, |c| m.column_rank(c) < rho);
    ClauseReport {
        holds: clause_i_violation.is_none() && clause_ii_witness.is_some() && clause_iii_violation.is_none(),
        clause_i_violation,
        clause_ii_witness,
        clause_iii_violation,
    }
}

/// Checks the rank conditions characterizing d_r = delta on a parity-check
/// matrix: every delta-1 columns have rank >= delta - r, and some delta
/// columns have rank exactly delta - r.
pub fn ghw_conditions_hold(h: &FieldMatrix, r: usize, delta: usize) -> bool {
    if delta < r || delta == 0 || delta > h.cols() {
        return false;
    }
    let n = h.cols();
    let target = delta - r;
    let all_large = (0..n).combinations(delta - 1).all(|c| c.is_empty() || h.column_rank(&c) >= target);
    let some_exact = (0..n).combinations(delta).any(|c| h.column_rank(&c) == target);
    all_large && some_exact
}

impl LinearCode {
    pub fn new(g: FieldMatrix) -> Result<Self> {
        if g.rows() > g.cols() {
            return Err(Error::DimensionMismatch(format!("k = {} exceeds n = {}", g.rows(), g.cols())));
        }
        if g.rank() != g.rows() {
            return Err(Error::DimensionMismatch("generator rows are linearly dependent".into()));
        }
        Ok(LinearCode { g })
    }

    /// The [2n, n] code generated by [I | A].
    pub fn standard_generator(a: &FieldMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        let g = FieldMatrix::identity(a.field(), a.rows()).hstack(a)?;
        Ok(LinearCode { g })
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.g
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn is_standard_form(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| (0..k).all(|j| self.g.get(i, j) == if i == j { Elem::ONE } else { Elem::ZERO }))
    }

    /// H = [-Aᵀ | I_{n-k}] for G = [I_k | A].
    pub fn parity_check(&self) -> Result<FieldMatrix> {
        if !self.is_standard_form() {
            return Err(Error::NotStandardForm);
        }
        let (k, n) = (self.k(), self.n());
        if k == n {
            return Err(Error::DimensionMismatch("an [n, n] code has no parity checks".into()));
        }
        let f = self.field();
        Ok(FieldMatrix::from_fn(f, n - k, n, |i, j| {
            if j < k {
                f.neg(self.g.get(j, k + i))
            } else if j - k == i {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        }))
    }

    /// A parity-check matrix for any generator (standard form or not);
    /// None when k = n.
    pub fn parity_check_matrix(&self) -> Option<FieldMatrix> {
        if self.is_standard_form() && self.k() < self.n() {
            return self.parity_check().ok();
        }
        self.g.null_space()
    }

    /// The dual code, generated by a parity-check matrix; None when k = n.
    pub fn dual(&self) -> Option<LinearCode> {
        self.parity_check_matrix().map(|h| LinearCode { g: h })
    }

    /// Whether `c` is a codeword (H·cᵀ = 0).
    pub fn contains(&self, c: &[Elem]) -> bool {
        let Some(h) = self.parity_check_matrix() else {
            return c.len() == self.n();
        };
        let f = self.field();
        c.len() == self.n()
            && (0..h.rows())
                .all(|i| (0..h.cols()).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(h.get(i, j), c[j]))).is_zero())
    }

    /// Every codeword, messages taken in packed order; fails beyond `cap`.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<Elem>>> {
        let q = self.field().order();
        let total = (q as u128).pow(self.k() as u32);
        if total > cap as u128 {
            return Err(Error::TooLarge(format!("{total} codewords exceed the cap {cap}")));
        }
        let (k, n) = (self.k(), self.n());
        let f = self.field();
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total as u64 {
            let mut rem = idx;
            let mut word = vec![Elem::ZERO; n];
            for i in 0..k {
                let m = Elem((rem % q) as u32);
                rem /= q;
                if m.is_zero() {
                    continue;
                }
                for (j, w) in word.iter_mut().enumerate() {
                    *w = f.add(*w, f.mul(m, self.g.get(i, j)));
                }
            }
            out.push(word);
        }
        Ok(out)
    }

    /// Minimum distance by enumerating all codewords.
    pub fn min_distance_by_enumeration(&self, cap: u64) -> Result<MinDistance> {
        let words = self.codewords(cap)?;
        let best = words
            .into_iter()
            .filter(|w| w.iter().any(|e| !e.is_zero()))
            .min_by_key(|w| w.iter().filter(|e| !e.is_zero()).count())
            .expect("k >= 1 gives a nonzero codeword");
        Ok(MinDistance { d: best.iter().filter(|e| !e.is_zero()).count(), codeword: best })
    }

    /// Minimum distance as the size of the smallest dependent column set of
    /// a parity-check matrix; the witness codeword is supported on that set.
    pub fn min_distance_by_columns(&self, caps: &Caps) -> Result<MinDistance> {
        let n = self.n();
        if n > caps.length {
            return Err(Error::TooLarge(format!("length {n} exceeds the cap {}", caps.length)));
        }
        let h = self.parity_check_matrix();
        for d in 1..=n {
            if let Some(cols) = first_subset(n, d, |c| rank_cols(h.as_ref(), c) < c.len()) {
                let codeword = self.codeword_on(h.as_ref(), &cols);
                return Ok(MinDistance { d, codeword });
            }
        }
        unreachable!("any n-k+1 columns of H are dependent")
    }

    fn codeword_on(&self, h: Option<&FieldMatrix>, cols: &[usize]) -> Vec<Elem> {
        let mut word = vec![Elem::ZERO; self.n()];
        match h {
            None => word[cols[0]] = Elem::ONE,
            Some(h) => {
                let sub = h.select_columns(cols).expect("valid column set");
                let v = sub.null_space().expect("columns are dependent");
                for (t, &c) in cols.iter().enumerate() {
                    word[c] = v.get(0, t);
                }
            }
        }
        word
    }

    /// d_1 by the column route, cross-checked by codeword enumeration when
    /// q^k is within the cap.
    pub fn min_distance(&self, caps: &Caps) -> Result<MinDistance> {
        let by_columns = self.min_distance_by_columns(caps)?;
        match self.min_distance_by_enumeration(caps.codewords) {
            Ok(e) if e.d != by_columns.d => Err(Error::SelfCheckFailed(format!(
                "minimum distance: enumeration gives {}, parity-check columns give {}",
                e.d, by_columns.d
            ))),
            Ok(_) | Err(Error::TooLarge(_)) => Ok(by_columns),
            Err(e) => Err(e),
        }
    }

    /// The r-th generalized Hamming weight, searching column sets of H by
    /// increasing size.
    pub fn ghw(&self, r: usize, caps: &Caps) -> Result<Ghw> {
        let (n, k) = (self.n(), self.k());
        if r == 0 || r > k {
            return Err(Error::RankOutOfRange { r, k });
        }
        if n > caps.length {
            return Err(Error::TooLarge(format!("length {n} exceeds the cap {}", caps.length)));
        }
        let h = self.parity_check_matrix();
        for size in r..=n {
            if let Some(columns) = first_subset(n, size, |c| c.len() - rank_cols(h.as_ref(), c) >= r) {
                return Ok(Ghw { r, d: size, columns });
            }
        }
        unreachable!("all n columns have deficit k >= r")
    }

    pub fn classify(&self, caps: &Caps) -> Result<CodeReport> {
        let (n, k) = (self.n(), self.k());
        let md = self.min_distance(caps)?;
        let d1 = md.d;
        let support: Vec<usize> = (0..n).filter(|&j| !md.codeword[j].is_zero()).collect();
        let mut witnesses = vec![Witness { clause: "d1".into(), columns: support }];
        let d2 = if k >= 2 {
            let g2 = self.ghw(2, caps)?;
            witnesses.push(Witness { clause: "d2".into(), columns: g2.columns });
            Some(g2.d)
        } else {
            None
        };
        let dr_profile = if n <= caps.profile_length {
            let mut profile = vec![d1];
            if let Some(d2) = d2 {
                profile.push(d2);
            }
            for r in 3..=k {
                profile.push(self.ghw(r, caps)?.d);
            }
            Some(profile)
        } else {
            None
        };
        let verdict = if d1 == n - k + 1 {
            Verdict::Mds
        } else if d1 + k == n && d2.is_none_or(|d2| d2 == n - k + 2) {
            Verdict::Nmds
        } else if d1 + k == n {
            Verdict::AmdsOnly
        } else {
            Verdict::Other
        };
        Ok(CodeReport { n, k, d1, d2, dr_profile, verdict, witnesses })
    }
}

fn check_order(a: &FieldMatrix, caps: &Caps) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if a.rows() > caps.matrix_order {
        return Err(Error::TooLarge(format!("order {} exceeds the cap {}", a.rows(), caps.matrix_order)));
    }
    Ok(())
}

/// A is MDS iff every n columns of [I | A] are linearly independent.
pub fn is_mds_matrix(a: &FieldMatrix, caps: &Caps) -> Result<MdsCheck> {
    check_order(a, caps)?;
    let g = LinearCode::standard_generator(a)?.g;
    let n = a.rows();
    let dependent_columns = first_subset(2 * n, n, |c| g.column_rank(c) < n);
    Ok(MdsCheck { holds: dependent_columns.is_none(), dependent_columns })
}

/// NMDS test on the generator side: the three conditions on [I | A].
pub fn is_nmds_matrix(a: &FieldMatrix, caps: &Caps) -> Result<ClauseReport> {
    check_order(a, caps)?;
    Ok(nmds_clauses(LinearCode::standard_generator(a)?.generator()))
}

/// NMDS test on the parity side: the three conditions on [-Aᵀ | I].
pub fn is_nmds_matrix_parity(a: &FieldMatrix, caps: &Caps) -> Result<ClauseReport> {
    check_order(a, caps)?;
    Ok(nmds_clauses(&LinearCode::standard_generator(a)?.parity_check()?))
}

pub fn matrix_verdict(a: &FieldMatrix, caps: &Caps) -> Result<MatrixVerdict> {
    if is_mds_matrix(a, caps)?.holds {
        Ok(MatrixVerdict::Mds)
    } else if is_nmds_matrix(a, caps)?.holds {
        Ok(MatrixVerdict::Nmds)
    } else {
        Ok(MatrixVerdict::Neither)
    }
}

/// Classification of the code of [I | A].
pub fn classify_matrix(a: &FieldMatrix, caps: &Caps) -> Result<CodeReport> {
    check_order(a, caps)?;
    LinearCode::standard_generator(a)?.classify(caps)
}

/// Whether A and Aᵀ receive the same MDS / NMDS / neither verdict. The
/// finer AMDS_only / OTHER split is not compared: the code of [I | Aᵀ] is
/// equivalent to the dual of the code of [I | A], and duality can move a code
/// between those two classes.
pub fn dual_transpose_check(a: &FieldMatrix, caps: &Caps) -> Result<bool> {
    Ok(matrix_verdict(a, caps)? == matrix_verdict(&a.transpose(), caps)?)
}
