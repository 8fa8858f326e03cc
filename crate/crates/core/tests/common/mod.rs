#![allow(dead_code)]

use itertools::Itertools;
use nearmds::{Elem, Field, FieldMatrix};

/// Stands for the zero entry in exponent tables.
pub const Z: i64 = -1;

pub fn gf4() -> Field {
    Field::binary(2, 0b111).unwrap()
}

pub fn gf16() -> Field {
    Field::binary(4, 0x13).unwrap()
}

pub fn gf256() -> Field {
    Field::binary(8, 0x1c3).unwrap()
}

pub fn gf2() -> Field {
    Field::new(2, 1, &[1, 1]).unwrap()
}

pub fn pts(f: &Field, ks: &[i64]) -> Vec<Elem> {
    ks.iter().map(|&k| if k == Z { Elem::ZERO } else { f.alpha_pow(k) }).collect()
}

/// Matrix from a table of α exponents, `Z` for zero.
pub fn from_exps<const N: usize>(f: &Field, rows: &[[i64; N]]) -> FieldMatrix {
    FieldMatrix::from_rows(f, rows.iter().map(|r| pts(f, r)).collect()).unwrap()
}

pub fn from_bits<const N: usize>(f: &Field, rows: &[[u32; N]]) -> FieldMatrix {
    let rows = rows.iter().map(|r| r.iter().map(|&b| f.element(b as u64).unwrap()).collect()).collect();
    FieldMatrix::from_rows(f, rows).unwrap()
}

/// Oracle: determinant by permutation expansion.
pub fn det_by_permutations(m: &FieldMatrix) -> Elem {
    let f = m.field();
    let n = m.rows();
    let mut acc = Elem::ZERO;
    for perm in (0..n).permutations(n) {
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let term = (0..n).fold(Elem::ONE, |t, i| f.mul(t, m.get(i, perm[i])));
        acc = if inversions % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

/// Oracle: rank of the rows of `m` via the size of their span, for tiny
/// fields and dimensions only.
pub fn span_size(m: &FieldMatrix) -> u64 {
    let f = m.field();
    let q = f.order();
    let mut words = std::collections::BTreeSet::new();
    for idx in 0..q.pow(m.rows() as u32) {
        let mut rem = idx;
        let mut w = vec![Elem::ZERO; m.cols()];
        for i in 0..m.rows() {
            let c = f.element(rem % q).unwrap();
            rem /= q;
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = f.add(*wj, f.mul(c, m.get(i, j)));
            }
        }
        words.insert(w);
    }
    words.len() as u64
}

/// Oracle: d_r as the smallest support of an r-dimensional subcode, found by
/// trying every r-subset of codewords. Tiny codes only.
pub fn ghw_by_subcodes(g: &FieldMatrix, r: usize) -> usize {
    let f = g.field();
    let q = f.order();
    let k = g.rows();
    let mut words = Vec::new();
    for idx in 1..q.pow(k as u32) {
        let mut rem = idx;
        let mut w = vec![Elem::ZERO; g.cols()];
        for i in 0..k {
            let c = f.element(rem % q).unwrap();
            rem /= q;
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = f.add(*wj, f.mul(c, g.get(i, j)));
            }
        }
        words.push(w);
    }
    let mut best = usize::MAX;
    for combo in words.iter().combinations(r) {
        let m = FieldMatrix::from_rows(f, combo.iter().map(|w| (*w).clone()).collect()).unwrap();
        if m.rank() < r {
            continue;
        }
        let support = (0..g.cols()).filter(|&j| combo.iter().any(|w| !w[j].is_zero())).count();
        best = best.min(support);
    }
    best
}

pub struct Fixture {
    pub name: &'static str,
    pub matrix: FieldMatrix,
}

/// The displayed GF(256) I = {n-1} MDS pair.
pub fn gf256_last_but_one() -> (FieldMatrix, FieldMatrix) {
    let f = gf256();
    (
        from_exps(&f, &[[7, 234, 57, 156], [37, 66, 55, 211], [205, 100, 30, 86], [227, 50, 149, 40]]),
        from_exps(&f, &[[136, 49, 235, 30], [210, 77, 201, 198], [144, 72, 52, 220], [42, 228, 23, 248]]),
    )
}

/// The displayed GF(16) I = {n-1} NMDS pair.
pub fn gf16_last_but_one() -> (FieldMatrix, FieldMatrix) {
    let f = gf16();
    (
        from_exps(&f, &[[7, 9, 9, 0], [14, 14, 3, 0], [10, 5, 5, Z], [2, 2, 8, 0]]),
        from_exps(&f, &[[Z, 7, 0, 7], [0, 14, Z, 3], [0, 5, 0, 10], [0, 8, 0, 8]]),
    )
}

pub fn gf256_one() -> (FieldMatrix, FieldMatrix) {
    let f = gf256();
    (
        from_exps(&f, &[[9, 43, 252, 70], [232, 68, 92, 168], [206, 213, 93, 230], [34, 243, 61, 152]]),
        from_exps(&f, &[[24, 137, 42, 223], [66, 14, 88, 197], [187, 35, 50, 25], [128, 33, 214, 246]]),
    )
}

pub fn gf16_one() -> (FieldMatrix, FieldMatrix) {
    let f = gf16();
    (
        from_exps(&f, &[[9, 5, 2, 13], [7, 1, 10, 9], [11, Z, 0, 5], [11, 8, 4, Z]]),
        from_exps(&f, &[[14, 11, 9, 13], [Z, 4, 8, 2], [6, 13, 13, 2], [2, 0, 4, 6]]),
    )
}

pub fn gf16_one_and_n() -> (FieldMatrix, FieldMatrix) {
    let f = gf16();
    (
        from_exps(&f, &[[10, 2, 2, 14], [12, 2, 10, 5], [1, 9, 0, 0], [7, 7, 4, 12]]),
        from_exps(&f, &[[7, 4, 12, 2], [5, 10, 9, 6], [5, 0, 12, 12], [9, 2, 7, 5]]),
    )
}

pub fn gf256_involutory_mds() -> FieldMatrix {
    from_exps(
        &gf256(),
        &[
            [113, 33, 227, 93, 16, 174],
            [63, 107, 186, 149, 175, 10],
            [105, 34, 116, 97, 198, 197],
            [40, 66, 166, 43, 213, 52],
            [136, 10, 185, 131, 5, 136],
            [211, 17, 101, 142, 53, 56],
        ],
    )
}

pub fn gf16_involutory_nmds() -> FieldMatrix {
    from_exps(&gf16(), &[[9, 7, 7, 7], [3, 14, 3, 3], [10, 10, 5, 10], [2, 2, 2, 8]])
}

pub fn gf16_odd_order() -> FieldMatrix {
    from_exps(&gf16(), &[[10, 13, 1], [3, 11, 11], [11, 1, 13]])
}

/// Companion matrix of x^4 + αx + 1 over GF(16).
pub fn gf16_companion_b() -> FieldMatrix {
    from_exps(&gf16(), &[[Z, 0, Z, Z], [Z, Z, 0, Z], [Z, Z, Z, 0], [0, 1, Z, Z]])
}

/// Every displayed matrix.
pub fn all_fixtures() -> Vec<Fixture> {
    let (a, b) = gf256_last_but_one();
    let (c, d) = gf16_last_but_one();
    let (e, g) = gf256_one();
    let (h, i) = gf16_one();
    let (j, k) = gf16_one_and_n();
    vec![
        Fixture { name: "gf256 I={3} forward", matrix: a },
        Fixture { name: "gf256 I={3} backward", matrix: b },
        Fixture { name: "gf16 I={3} forward", matrix: c },
        Fixture { name: "gf16 I={3} backward", matrix: d },
        Fixture { name: "gf256 I={1} forward", matrix: e },
        Fixture { name: "gf256 I={1} backward", matrix: g },
        Fixture { name: "gf16 I={1} forward", matrix: h },
        Fixture { name: "gf16 I={1} backward", matrix: i },
        Fixture { name: "gf16 I={1,4} forward", matrix: j },
        Fixture { name: "gf16 I={1,4} backward", matrix: k },
        Fixture { name: "gf256 involutory MDS", matrix: gf256_involutory_mds() },
        Fixture { name: "gf16 involutory NMDS", matrix: gf16_involutory_nmds() },
        Fixture { name: "gf16 odd order", matrix: gf16_odd_order() },
        Fixture { name: "gf16 companion", matrix: gf16_companion_b() },
    ]
}
