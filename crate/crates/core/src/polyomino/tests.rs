use super::*;
use crate::algebra::{qbinom, QTPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashSet};

const FIG_PATH: &str = "yyxxxyyxxyxxxyxx";
const FIG_POLY: &str = "NNNEENEEE|ENEENENEN";

fn multinomial(parts: &[u32]) -> BigInt {
    let mut r = BigInt::from(1);
    let mut tot = 0i64;
    for &p in parts {
        for i in 1..=p as i64 {
            tot += 1;
            r = r * tot / i;
        }
    }
    r
}

fn q_poly(c: &[i64]) -> QTPoly {
    c.iter()
        .enumerate()
        .fold(QTPoly::zero(), |acc, (i, &v)| &acc + &QTPoly::q_pow(i as u32).scale(&crate::algebra::rat(v)))
}

fn area_series(ps: &[Polyomino]) -> QTPoly {
    ps.iter().fold(QTPoly::zero(), |acc, p| &acc + &QTPoly::q_pow(p.area() as u32))
}

#[test]
fn figure_path() {
    let p: LatticePath = FIG_PATH.parse().unwrap();
    assert_eq!(p.heights(), vec![2, 2, 2, 4, 4, 5, 5, 5, 6, 6]);
    assert_eq!(p.indents(), vec![0, 0, 3, 3, 5, 8]);
    assert_eq!(p.area(), 41);
    assert_eq!(p.to_string(), "NNEEENNEENEEENEE");
    assert_eq!(LatticePath::from_indents(&p.indents(), 10).unwrap(), p);
    assert_eq!(p.runs(Step::N), vec![2, 2, 1, 1]);
    assert_eq!("yx".parse::<LatticePath>().unwrap().area(), 1);
}

#[test]
fn paths_enumerate_and_weigh() {
    assert_eq!(LatticePath::all(2, 2).len(), 6);
    for k in 0..=6 {
        for n in 0..=6 {
            let all = LatticePath::all(k, n);
            let words: Vec<String> = all.iter().map(|p| p.to_string()).collect();
            let mut sorted = words.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(words, sorted);
            let s = all.iter().fold(QTPoly::zero(), |acc, p| &acc + &QTPoly::q_pow(p.area() as u32));
            assert_eq!(s, qbinom((n + k) as u32, k as u32));
        }
    }
}

proptest! {
    #[test]
    fn height_round_trip(mut h in proptest::collection::vec(0u32..7, 0..8), n in 6u32..9) {
        h.sort();
        let p = LatticePath::from_heights(&h, n).unwrap();
        prop_assert_eq!(p.heights(), h.clone());
        prop_assert_eq!(LatticePath::from_indents(&p.indents(), h.len() as u32).unwrap(), p);
    }
}

/// Independent filter: paths meet only at the ends, upper leaves north.
fn brute_polyominoes(k: usize, n: usize) -> BTreeSet<(LatticePath, LatticePath)> {
    let all = LatticePath::all(k, n);
    let mut out = BTreeSet::new();
    for u in &all {
        let uv: HashSet<_> = u.vertices().into_iter().collect();
        for l in &all {
            let shared = l.vertices().into_iter().filter(|v| uv.contains(v)).count();
            if shared == 2 && u.steps()[0] == Step::N {
                out.insert((u.clone(), l.clone()));
            }
        }
    }
    out
}

#[test]
fn polyomino_enumeration() {
    assert_eq!(Polyomino::all(2, 2).len(), 3);
    assert_eq!(Polyomino::all(3, 3).len(), 20);
    for n in 1..=6 {
        assert_eq!(Polyomino::all(1, n).len(), 1);
    }
    for k in 1..=5 {
        for n in 1..=5 {
            let ps = Polyomino::all(k, n);
            let got: BTreeSet<_> = ps.iter().map(|p| (p.upper().clone(), p.lower().clone())).collect();
            assert_eq!(got.len(), ps.len());
            assert_eq!(got, brute_polyominoes(k, n), "{k}x{n}");
            assert_eq!(BigInt::from(ps.len()), polyominoes(k as i64, n as i64));
        }
    }
    let want = q_poly(&[6, 6, 5, 2, 1]);
    assert_eq!(area_series(&Polyomino::all(3, 3)), want);
    assert_eq!(area_series(&Polyomino::all(2, 2)), q_poly(&[2, 1]));
    let sq: Polyomino = "NNEE|EENN".parse().unwrap();
    assert_eq!(sq.area(), 1);
    assert_eq!(sq.gamma().parts(), &[2]);
    assert!(Polyomino::all(0, 3).is_empty());
    assert!(matches!(
        Polyomino::new(LatticePath::new(vec![]), LatticePath::new(vec![])),
        Err(crate::Error::InvalidSize(_))
    ));
    assert!("NENE|ENEN".parse::<Polyomino>().is_err());
}

#[test]
fn reflection_symmetry() {
    for k in 1..=5 {
        for n in 1..=5 {
            let mut a: Vec<(Polyomino, u64)> = Polyomino::all(k, n).iter().map(|p| (p.reflect(), p.area())).collect();
            a.sort();
            let b: Vec<(Polyomino, u64)> = Polyomino::all(n, k)
                .into_iter()
                .map(|p| {
                    let ar = p.area();
                    (p, ar)
                })
                .collect();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn motzkin_and_aword() {
    let p: Polyomino = FIG_POLY.parse().unwrap();
    assert_eq!(to_motzkin(&p).to_string(), "d r d b d~ d d~ b d~");
    assert_eq!(to_aword(&p).to_string(), "0~,1,1,1~,2,2~,1~,2,1~");
    assert_eq!(to_aword(&p).adjacent_pairs(DinvDirection::Successor), 12);
    let w: MotzkinWord = "d r d b dbar d dbar b dbar".parse().unwrap();
    assert_eq!(from_motzkin(&w).unwrap(), p);
    let unit: Polyomino = "yx|xy".parse().unwrap();
    assert_eq!(to_motzkin(&unit).to_string(), "d d~");
    assert_eq!(to_aword(&unit).to_string(), "0~,1");
    assert!(from_motzkin(&"d d~ d d~".parse().unwrap()).is_err());
    let aw: AWord = "0~,1,1,1~,2,2~,1~,2,1~".parse().unwrap();
    assert_eq!(aw, to_aword(&p));
}

#[test]
fn motzkin_bijection() {
    let mut images = BTreeSet::new();
    for k in 1..8 {
        for n in 1..=8 - k {
            for p in Polyomino::all(k, n) {
                let w = to_motzkin(&p);
                assert_eq!(from_motzkin(&w).unwrap(), p);
                let m = w.letters();
                let count = |l| m.iter().filter(|&&x| x == l).count();
                assert_eq!(to_aword(&p).len(), 2 * count(Motzkin::D) + count(Motzkin::R) + count(Motzkin::B));
                images.insert(w);
            }
        }
    }
    let primitive: BTreeSet<MotzkinWord> = (1..=8).flat_map(MotzkinWord::all).filter(|w| w.is_primitive()).collect();
    assert_eq!(images, primitive);
}

#[test]
fn dinv_calibration() {
    let cals = calibrate_dinv(8);
    let chosen = cals.iter().find(|c| c.direction == DINV_DIRECTION).unwrap();
    assert!(chosen.consistent());
    for &(k, n, off) in &chosen.offsets {
        assert_eq!(off, Some((k + n - 1) as i64), "{k}x{n}");
    }
    let other = cals.iter().find(|c| c.direction != DINV_DIRECTION).unwrap();
    assert!(!other.consistent());
    assert_eq!(dinv(&"yx|xy".parse().unwrap()), 1);
}

#[test]
fn labelled_counts() {
    let all = LabelledPolyomino::all(2, 2);
    assert_eq!(all.len(), 4);
    assert_eq!(labellings(&[1, 1]).len(), 2);
    for k in 1..=6 {
        for n in 1..=6 {
            let shapes = Polyomino::all(k, n);
            let by_shapes: BigInt = shapes.iter().map(|p| multinomial(p.gamma().parts())).sum();
            assert_eq!(by_shapes, labelled(k as i64, n as i64));
            if k + n <= 9 {
                let ls = LabelledPolyomino::all(k, n);
                assert_eq!(BigInt::from(ls.len()), labelled(k as i64, n as i64));
                let uniq: HashSet<_> = ls.iter().collect();
                assert_eq!(uniq.len(), ls.len());
            }
        }
    }
    for k in 1..=6i64 {
        for n in 1..=10i64 {
            assert_eq!(labelled_series_coeff(k, n - 1), labelled(k, n));
        }
    }
    let lp: LabelledPolyomino = "NNEE|EENN|[1,2]".parse().unwrap();
    assert_eq!(lp.to_string(), "NNEE|EENN|[1,2]");
    assert!("NNEE|EENN|[2,1]".parse::<LabelledPolyomino>().is_err());
    assert!("NENE|EENN|[2,1]".parse::<LabelledPolyomino>().is_ok());
}

#[test]
fn doubly_counts() {
    assert_eq!(DoublyLabelledPolyomino::all(2, 2, true).len(), 4);
    for k in 1..=4 {
        for n in 1..=4 {
            let d = DoublyLabelledPolyomino::all(k, n, false);
            assert_eq!(BigInt::from(d.len()), doubly(k as i64, n as i64), "{k}x{n}");
            let s = DoublyLabelledPolyomino::all(k, n, true);
            assert_eq!(BigInt::from(s.len()), doubly_star(k as i64, n as i64), "{k}x{n}");
            let per_shape: BigInt = Polyomino::all(k, n)
                .iter()
                .map(|p| multinomial(p.gamma().parts()) * multinomial(p.delta().parts()))
                .sum();
            assert_eq!(per_shape, BigInt::from(d.len()));
        }
    }
}

#[test]
fn labelled_paths() {
    for k in 0..=3 {
        for n in 0..=4 {
            let all = LabelledPath::all(k, n);
            assert_eq!(all.len(), (k + 1).pow(n as u32));
        }
    }
    let lp: LabelledPath = "NENN|[2,1,3]".parse().unwrap();
    assert_eq!(lp.blocks(), vec![vec![2], vec![1, 3]]);
}

fn sorted_blocks(b: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut b = b;
    b.sort();
    b
}

#[test]
fn cyclic_lemma_trivial_width() {
    for n in 1..=4 {
        for ell in LabelledPath::all(0, n) {
            let beta = LatticePath::all(0, n - 1).pop().unwrap();
            let c = cyclic_map(&ell, &beta).unwrap();
            assert_eq!(c.members.len(), 1);
            assert_eq!(c.members[0], (ell.clone(), beta));
            assert_eq!(c.representative().unwrap().labels(), ell.labels());
        }
    }
}

#[test]
fn cyclic_lemma_exhaustive() {
    for k in 1..=4 {
        for n in 1..=4 {
            let mut reps: BTreeMap<LabelledPolyomino, usize> = BTreeMap::new();
            let mut inputs = 0usize;
            for ell in LabelledPath::all(k - 1, n) {
                for beta in LatticePath::all(k - 1, n - 1) {
                    inputs += 1;
                    let c = cyclic_map(&ell, &beta).unwrap();
                    assert_eq!(c.members.len(), k);
                    assert!(c.members.contains(&(ell.clone(), beta.clone())));
                    let rep = c.representative().unwrap().clone();
                    let part = sorted_blocks(ell.blocks());
                    for (m, _) in &c.members {
                        assert_eq!(sorted_blocks(m.blocks()), part);
                    }
                    assert_eq!(sorted_blocks(rep.blocks()), part);
                    *reps.entry(rep).or_default() += 1;
                }
            }
            assert_eq!(BigInt::from(inputs), labelled(k as i64, n as i64) * k);
            let all: BTreeSet<_> = LabelledPolyomino::all(k, n).into_iter().collect();
            assert_eq!(reps.keys().cloned().collect::<BTreeSet<_>>(), all);
            assert!(reps.values().all(|&c| c == k));
        }
    }
}
