use super::*;
use crate::algebra::rat;
use crate::polyomino::binom;

#[test]
fn figure_monomial() {
    let p: Polyomino = "NNEEENNEENEEENEE|EENEEEENEEENENNN".parse().unwrap();
    assert_eq!(p.upper().heights(), vec![2, 2, 2, 4, 4, 5, 5, 5, 6, 6]);
    assert_eq!(p.lower().heights(), vec![0, 0, 1, 1, 1, 1, 2, 2, 2, 3]);
    let m = MinorMonomial::of_polyomino(&p);
    assert_eq!(m.to_string(), "X[1,3]*X[2,3]^2*X[2,5]^2*X[3,6]^3*X[4,7]");
    assert_eq!(m.to_string().parse::<MinorMonomial>().unwrap(), m);
    assert!(m.is_standard());
}

#[test]
fn standardness() {
    let m = |s: &str| s.parse::<MinorMonomial>().unwrap();
    assert!(!m("X[1,4]*X[2,3]").is_standard());
    assert!(m("X[1,3]*X[2,4]").is_standard());
    assert!(m("X[1,2]*X[1,3]").is_standard());
    assert_eq!(minor_basis(0, 4).unwrap(), vec![m("1")]);
    assert_eq!(minor_basis(1, 3).unwrap().len(), 3);
    for d in 0..=3 {
        for n in 2..=6 {
            let basis = minor_basis(d, n).unwrap();
            assert!(basis.iter().all(|b| b.is_standard() && b.degree() == d));
            let got: BTreeSet<_> = basis.iter().cloned().collect();
            assert_eq!(got.len(), basis.len());
            let want: BTreeSet<_> = standard_monomials(d, n).into_iter().collect();
            assert_eq!(got, want, "d={d} n={n}");
            assert_eq!(BigInt::from(basis.len()), slr_count(d as u32, n as u32 - 1, 2));
        }
    }
}

#[test]
fn expansion_and_plucker() {
    let e = expand(&"X[1,2]".parse().unwrap(), 2).unwrap();
    assert_eq!(e.terms().len(), 2);
    assert_eq!(expand(&"1".parse().unwrap(), 3).unwrap(), BivarPoly::one(3));
    assert!(expand(&"X[1,4]".parse().unwrap(), 3).is_err());
    for n in 4..=6 {
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        assert!(plucker(n, i, j, k, l).unwrap().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn basis_is_independent() {
    assert_eq!(rank_check(1, 3).unwrap(), 3);
    assert_eq!(rank_check(0, 5).unwrap(), 1);
    assert_eq!(rank_check(2, 4).unwrap(), 20);
    for d in 0..=3 {
        for n in 2..=4 {
            assert!(rank_report(d, n).unwrap().ok, "d={d} n={n}");
        }
    }
    assert!(matches!(rank_check(4, 3), Err(Error::DegreeCap { .. })));
}

#[test]
fn hilbert_series() {
    let h = hilbert(3, 4).unwrap();
    assert_eq!(&h.series_a[..2], &["1".to_string(), "3".to_string()]);
    assert!(hilbert(2, 6).unwrap().series_a.iter().all(|v| v == "1"));
    let h4 = hilbert(4, 6).unwrap();
    assert_eq!(h4.series_b[0], "1");
    assert_eq!(h4.series_b[1], "3");
}

#[test]
fn littlewood() {
    assert_eq!(littlewood_frob(0, 4).unwrap(), SymF::h(&[4]));
    for d in 0..=2u32 {
        for n in 1..=6usize {
            let f = littlewood_frob(d, n).unwrap();
            let dim = f.hall(&SymF::p(&vec![1; n]));
            let want = if n >= 2 { polyominoes(d as i64 + 1, n as i64 - 1) } else { BigInt::from((d == 0) as i32) };
            assert_eq!(dim.eval(&rat(1), &rat(1)).unwrap().to_integer(), want, "d={d} n={n}");
            if n <= 5 {
                assert!(f.is_schur_positive().unwrap(), "d={d} n={n}");
            }
        }
    }
}

#[test]
fn non_intersecting_families() {
    for k in 0..=5u32 {
        for n in 0..=5u32 {
            assert_eq!(slr_count(k, n, 1), binom((n + k) as i64, k as i64));
            if n >= 1 {
                assert_eq!(slr_count(k, n, 2), polyominoes(k as i64 + 1, n as i64));
            }
        }
        assert_eq!(slr_count(0, k, 3), BigInt::from(1));
    }
}
