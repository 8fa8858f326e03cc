mod common;

use common::*;
use itertools::Itertools;
use nearmds::codes::{classify_matrix, ghw_conditions_hold, is_mds_matrix, matrix_verdict, Caps, LinearCode};
use nearmds::construct::{build_quotient, Direction, Disc, XYSpec};
use nearmds::recursive::{companion, gprime, scale_poly, MonicPoly, Provenance, RootFamily};
use nearmds::vandermonde::{det_gvand_formula, det_gvand_general, elementary_symmetric, gvand, sigma, GVandSpec};
use nearmds::{Elem, Field, FieldMatrix, Notation};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        gf4(),
        gf16(),
        gf256(),
        Field::new(3, 2, &[2, 1, 1]).unwrap(),
        Field::new(3, 3, &[1, 2, 0, 1]).unwrap(),
        Field::new(7, 1, &[4, 1]).unwrap(),
        Field::new(5, 2, &[2, 1, 1]).unwrap(),
    ]
}

fn odd_fields() -> Vec<Field> {
    fields().into_iter().filter(|f| f.characteristic() != 2).collect()
}

fn elem(f: &Field, raw: u64) -> Elem {
    f.element(raw % f.order()).unwrap()
}

fn matrix(f: &Field, rows: usize, cols: usize, raw: &[u64]) -> FieldMatrix {
    FieldMatrix::from_fn(f, rows, cols, |i, j| elem(f, raw[i * cols + j]))
}

fn distinct(f: &Field, raw: &[u64], nonzero: bool) -> Vec<Elem> {
    let mut out: Vec<Elem> = Vec::new();
    let q = f.order();
    for &r in raw {
        let mut v = r % q;
        loop {
            let e = f.element(v).unwrap();
            if !out.contains(&e) && !(nonzero && e.is_zero()) {
                out.push(e);
                break;
            }
            v = (v + 1) % q;
        }
    }
    out
}

fn raw(len: usize) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(any::<u64>(), len)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(fi in 0..7usize, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[fi];
        let (a, b, c) = (elem(f, a), elem(f, b), elem(f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            let k = f.log(a).unwrap() as i64;
            prop_assert_eq!(f.alpha_pow(k), a);
            prop_assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
        }
    }

    #[test]
    fn det_matches_permutation_expansion(fi in 0..7usize, n in 1..5usize, r in raw(16)) {
        let f = &fields()[fi];
        let a = matrix(f, n, n, &r);
        prop_assert_eq!(a.det().unwrap(), det_by_permutations(&a));
    }

    #[test]
    fn det_is_multiplicative(fi in 0..7usize, n in 1..5usize, r in raw(16), s in raw(16)) {
        let f = &fields()[fi];
        let (a, b) = (matrix(f, n, n, &r), matrix(f, n, n, &s));
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), f.mul(a.det().unwrap(), b.det().unwrap()));
    }

    #[test]
    fn rank_preserved_by_nonsingular_factor(fi in 0..7usize, n in 1..5usize, l in 1..7usize, r in raw(16), s in raw(28)) {
        let f = &fields()[fi];
        let a = matrix(f, n, n, &r);
        let b = matrix(f, n, l, &s);
        if let Ok(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).unwrap().is_identity());
            prop_assert_eq!(a.mul(&b).unwrap().rank(), b.rank());
        } else {
            prop_assert!(a.det().unwrap().is_zero());
        }
    }

    #[test]
    fn rank_matches_span_size(n in 1..4usize, l in 1..5usize, r in raw(12)) {
        let f = gf4();
        let a = matrix(&f, n, l, &r);
        prop_assert_eq!(span_size(&a), 4u64.pow(a.rank() as u32));
    }

    #[test]
    fn sigma_recurrence(fi in 0..7usize, n in 0..7usize, r in raw(7), y in any::<u64>()) {
        let f = &fields()[fi];
        let x: Vec<Elem> = r[..n].iter().map(|&v| elem(f, v)).collect();
        let y = elem(f, y);
        let mut xy = x.clone();
        xy.push(y);
        let before = elementary_symmetric(f, &x);
        for d in 1..=n {
            let lhs = sigma(f, d, &xy).unwrap();
            prop_assert_eq!(lhs, f.add(before[d], f.mul(y, before[d - 1])));
        }
        prop_assert_eq!(sigma(f, n + 1, &xy).unwrap(), f.product(&xy));
    }

    #[test]
    fn det_formula_in_odd_characteristic(fi in 0..3usize, n in 1..6usize, shape in 0..5usize, r in raw(6), extra in raw(3)) {
        let f = &odd_fields()[fi];
        let n = if shape == 2 || shape == 3 { n.max(2) } else { n };
        let nonzero = shape == 2 || shape == 3;
        let x = distinct(f, &r[..n], nonzero);
        let disc = match shape {
            0 => vec![],
            1 => vec![n - 1],
            2 => vec![1],
            3 => vec![1, n],
            _ => {
                let s = 1 + (extra[0] % 3) as usize;
                let top = n + s - 1;
                let mut picks: Vec<usize> = (0..top).collect();
                let mut chosen = Vec::new();
                for e in &extra[..s] {
                    chosen.push(picks.remove((e % picks.len() as u64) as usize));
                }
                chosen.sort();
                chosen
            }
        };
        let spec = GVandSpec::from_discontinuities(x, &disc).unwrap();
        let elim = gvand(f, &spec).det().unwrap();
        prop_assert_eq!(det_gvand_general(f, &spec), elim);
        if let Ok(v) = det_gvand_formula(f, &spec) {
            prop_assert_eq!(v, elim);
        }
    }

    #[test]
    fn fast_paths_with_nonzero_points(fi in 0..7usize, n in 2..6usize, r in raw(6)) {
        let f = &fields()[fi];
        let x = distinct(f, &r[..n.min(f.order() as usize - 1)], true);
        let n = x.len();
        for disc in [vec![1], vec![1, n], vec![n - 1]] {
            if disc.iter().any(|&l| l >= n + disc.len() - 1) {
                continue;
            }
            let spec = GVandSpec::from_discontinuities(x.clone(), &disc).unwrap();
            prop_assert_eq!(det_gvand_formula(f, &spec).unwrap(), gvand(f, &spec).det().unwrap());
        }
    }

    #[test]
    fn min_distance_routes_agree(fi in 0..3usize, k in 1..4usize, extra in 0..4usize, r in raw(21)) {
        let f = &[gf2(), gf4(), Field::new(3, 1, &[1, 1]).unwrap()][fi];
        let n = k + extra;
        let g = matrix(f, k, n, &r);
        prop_assume!(g.rank() == k);
        let code = LinearCode::new(g).unwrap();
        let caps = Caps::default();
        let by_enum = code.min_distance_by_enumeration(1 << 16).unwrap();
        let by_cols = code.min_distance_by_columns(&caps).unwrap();
        prop_assert_eq!(by_enum.d, by_cols.d);
        prop_assert!(code.contains(&by_cols.codeword));
        prop_assert_eq!(by_cols.codeword.iter().filter(|e| !e.is_zero()).count(), by_cols.d);
    }

    #[test]
    fn ghw_matches_subcode_oracle(fi in 0..2usize, k in 1..4usize, extra in 1..3usize, r in raw(15)) {
        let f = &[gf2(), Field::new(3, 1, &[1, 1]).unwrap()][fi];
        let n = k + extra;
        let g = matrix(f, k, n, &r);
        prop_assume!(g.rank() == k);
        let code = LinearCode::new(g.clone()).unwrap();
        let h = code.parity_check_matrix().unwrap();
        let mut prev = 0;
        for rr in 1..=k {
            let w = code.ghw(rr, &Caps::default()).unwrap();
            prop_assert_eq!(w.d, ghw_by_subcodes(&g, rr));
            prop_assert!(w.d > prev);
            prop_assert!(ghw_conditions_hold(&h, rr, w.d));
            prev = w.d;
        }
    }

    #[test]
    fn mds_equals_minor_test(fi in 0..3usize, n in 1..4usize, r in raw(9)) {
        let f = &[gf4(), gf16(), Field::new(3, 2, &[2, 1, 1]).unwrap()][fi];
        let a = matrix(f, n, n, &r);
        let caps = Caps::default();
        prop_assert_eq!(is_mds_matrix(&a, &caps).unwrap().holds, a.all_square_submatrices_nonsingular(8).unwrap().is_none());
        prop_assert_eq!(matrix_verdict(&a, &caps).unwrap(), matrix_verdict(&a.transpose(), &caps).unwrap());
    }

    #[test]
    fn companion_characteristic_polynomial(fi in 0..7usize, n in 1..5usize, r in raw(4)) {
        let f = &fields()[fi];
        let g = MonicPoly::new(f, r[..n].iter().map(|&v| elem(f, v)).collect()).unwrap();
        let c = companion(&g);
        // det(tI - C) = g(t) at every point of small fields, 40 points of large ones
        for t in f.elements().take(40) {
            let m = FieldMatrix::diagonal(f, &vec![t; n]).add(&c.neg()).unwrap();
            prop_assert_eq!(m.det().unwrap(), g.eval(t));
        }
    }

    #[test]
    fn scaling_conjugates_companion(fi in 0..7usize, n in 1..5usize, r in raw(4), c in any::<u64>()) {
        let f = &fields()[fi];
        let c = f.element(1 + c % (f.order() - 1)).unwrap();
        let g = MonicPoly::new(f, r[..n].iter().map(|&v| elem(f, v)).collect()).unwrap();
        let s = scale_poly(&g, c).unwrap();
        let e = FieldMatrix::diagonal(f, &(0..n).map(|i| f.pow(c, i as i64).unwrap()).collect::<Vec<_>>());
        let rhs = e.mul(&companion(&g)).unwrap().mul(&e.inverse().unwrap()).unwrap().scale(c);
        prop_assert_eq!(companion(&s), rhs);
        // roots move by c
        for t in f.elements().take(40) {
            if g.eval(t).is_zero() {
                prop_assert!(s.eval(f.mul(c, t)).is_zero());
            }
        }
    }

    #[test]
    fn gprime_spans_the_companion_code(k in 0..15i64, m in 4..10u64) {
        let f = gf16();
        let fam = match RootFamily::theta(&f, Provenance::ThetaIb, f.alpha_pow(k), 3) {
            Ok(fam) => fam,
            Err(_) => return Ok(()),
        };
        let g = fam.poly(&f);
        let ct = companion(&g).transpose().pow(m).unwrap();
        let gen = FieldMatrix::identity(&f, 3).hstack(&ct).unwrap();
        let gp = gprime(&f, &fam, m).unwrap();
        prop_assert_eq!(gp.rank(), 3);
        prop_assert_eq!(gen.vstack(&gp).unwrap().rank(), 3);
    }

    #[test]
    fn quotient_inverse_closure(fi in 0..3usize, n in 1..5usize, r in raw(8), disc in 0..3usize) {
        let f = &[gf16(), gf256(), Field::new(3, 3, &[1, 2, 0, 1]).unwrap()][fi];
        let disc = [Disc::LastButOne, Disc::One, Disc::OneAndN][disc];
        let n = if disc == Disc::OneAndN { n.max(2) } else { n };
        let pool = distinct(f, &r[..2 * n], disc != Disc::LastButOne);
        let spec = XYSpec::new(f, pool[..n].to_vec(), pool[n..].to_vec(), disc).unwrap();
        let (Ok(a), Ok(b)) = (build_quotient(f, &spec, Direction::Forward), build_quotient(f, &spec.swapped(), Direction::Forward)) else {
            return Ok(());
        };
        prop_assert!(a.mul(&b).unwrap().is_identity());
        prop_assert_eq!(build_quotient(f, &spec, Direction::Backward).unwrap(), b);
    }

    #[test]
    fn matrix_text_round_trip(fi in 0..7usize, n in 1..4usize, l in 1..4usize, r in raw(9)) {
        let f = &fields()[fi];
        let a = matrix(f, n, l, &r);
        for notation in [Notation::Power, Notation::Packed] {
            prop_assert_eq!(&FieldMatrix::parse(f, &a.to_text(notation)).unwrap(), &a);
            prop_assert_eq!(&FieldMatrix::from_json(f, &a.to_json(notation)).unwrap(), &a);
        }
    }
}

#[test]
fn theta_minors_are_generalized_vandermonde() {
    let f = gf16();
    let theta = f.alpha();
    let (n, m) = (4, 4u64);
    for (prov, disc) in [(Provenance::ThetaIb, vec![n - 1]), (Provenance::ThetaNewMds, vec![1, n])] {
        let fam = RootFamily::theta(&f, prov, theta, n).unwrap();
        let gp = gprime(&f, &fam, m).unwrap();
        let e: Vec<u64> = (0..n as u64).chain(m..m + n as u64).collect();
        for cols in (0..2 * n).combinations(n) {
            let x: Vec<Elem> = cols.iter().map(|&c| f.pow(theta, e[c] as i64).unwrap()).collect();
            let spec = GVandSpec::from_discontinuities(x, &disc).unwrap();
            let minor = gp.select_columns(&cols).unwrap();
            assert_eq!(minor.det().unwrap(), det_gvand_formula(&f, &spec).unwrap(), "{prov:?} {cols:?}");
        }
    }
}

#[test]
fn m_below_n_is_neither_for_n_at_least_three() {
    let f = gf16();
    let caps = Caps::default();
    for ks in [[0, 1, 2], [0, 3, 7], [2, 5, 11]] {
        let g = MonicPoly::from_roots(&f, &pts(&f, &ks)).unwrap();
        for (m, v) in nearmds::recursive::scan_exponents(&g, 0..=2, &caps).unwrap() {
            assert_eq!(v, nearmds::codes::MatrixVerdict::Neither, "m = {m}");
        }
    }
    // n = 2: C_g^0 = I_2 is NMDS
    let g = MonicPoly::from_roots(&f, &pts(&f, &[0, 1])).unwrap();
    let table = nearmds::recursive::scan_exponents(&g, 0..=0, &caps).unwrap();
    assert_eq!(table[0].1, nearmds::codes::MatrixVerdict::Nmds);
    assert_eq!(classify_matrix(&FieldMatrix::identity(&f, 2), &caps).unwrap().d2, Some(4));
}
