use crate::algebra::{QTPoly, QTRat};
use crate::error::Result;
use crate::polyomino::{dinv, LatticePath, Polyomino, Step};
use crate::symfunc::{Basis, BiSymF, Partition, SymF};
use std::collections::BTreeMap;

fn weight(area: u64, graded: bool) -> QTPoly {
    if graded {
        QTPoly::q_pow(area as u32)
    } else {
        QTPoly::one()
    }
}

fn h_sum(terms: BTreeMap<Partition, QTPoly>) -> Result<SymF> {
    let coeffs = terms.into_iter().map(|(p, c)| (p, QTRat::from(c))).collect();
    SymF::from_basis(Basis::H, &coeffs)
}

fn accumulate(map: &mut BTreeMap<Partition, QTPoly>, parts: Vec<u32>, w: QTPoly) {
    let e = map.entry(Partition::from_unsorted(parts)).or_insert_with(QTPoly::zero);
    *e = &*e + &w;
}

/// `sum_p q^{area(p)} h_{columns(p)}` over lattice paths to `(k, n)`.
pub fn frob_labelled_paths_brute(k: usize, n: usize, graded: bool) -> Result<SymF> {
    let mut acc = BTreeMap::new();
    for p in LatticePath::all(k, n) {
        accumulate(&mut acc, p.runs(Step::N), weight(p.area(), graded));
    }
    h_sum(acc)
}

/// `sum_pi h_{gamma(pi)}` over `P_{k,n}`.
pub fn frob_l_brute(k: usize, n: usize) -> Result<SymF> {
    shape_sum(k, n, false)
}

/// `sum_pi q^{area(pi)} h_{gamma(pi)}` over `P_{k,n}`.
pub fn frob_l_q(k: usize, n: usize) -> Result<SymF> {
    shape_sum(k, n, true)
}

fn shape_sum(k: usize, n: usize, graded: bool) -> Result<SymF> {
    let mut acc = BTreeMap::new();
    for p in Polyomino::all(k, n) {
        accumulate(&mut acc, p.gamma().parts().to_vec(), weight(p.area(), graded));
    }
    h_sum(acc)
}

/// `sum_pi q^{area(pi)}` over `P_{k,n}`.
pub fn area_series(k: usize, n: usize) -> QTPoly {
    Polyomino::all(k, n).iter().fold(QTPoly::zero(), |acc, p| &acc + &QTPoly::q_pow(p.area() as u32))
}

/// `sum t^{dinv(pi)} h_{gamma(pi)}` over ribbons of `P_{k,n}`.
pub fn ribbon_frob(k: usize, n: usize) -> Result<SymF> {
    let mut acc = BTreeMap::new();
    for p in Polyomino::all(k, n).into_iter().filter(|p| p.is_ribbon()) {
        accumulate(&mut acc, p.gamma().parts().to_vec(), QTPoly::t_pow(dinv(&p) as u32));
    }
    h_sum(acc)
}

fn bi_sum(terms: BTreeMap<(Partition, Partition), QTPoly>) -> BiSymF {
    let mut hy: BTreeMap<Partition, SymF> = BTreeMap::new();
    let mut hz: BTreeMap<Partition, SymF> = BTreeMap::new();
    let mut out = BiSymF::zero();
    for ((a, b), c) in terms {
        let fy = hy.entry(a.clone()).or_insert_with(|| SymF::h(a.parts())).clone();
        let fz = hz.entry(b.clone()).or_insert_with(|| SymF::h(b.parts())).clone();
        out = out.add(&BiSymF::tensor(&fy, &fz).scale(&QTRat::from(c)));
    }
    out
}

/// `sum_pi q^{area} h_{delta(lower)}(y) h_{gamma(upper)}(z)`.
pub fn frob_l2_brute(k: usize, n: usize, graded: bool) -> BiSymF {
    l2_sum(k, n, graded, false)
}

/// As [`frob_l2_brute`], with the first lower label frozen.
pub fn frob_l2star_brute(k: usize, n: usize) -> BiSymF {
    l2_sum(k, n, false, true)
}

fn l2_sum(k: usize, n: usize, graded: bool, star: bool) -> BiSymF {
    let mut acc: BTreeMap<(Partition, Partition), QTPoly> = BTreeMap::new();
    for p in Polyomino::all(k, n) {
        let mut d = p.delta().parts().to_vec();
        if star {
            d[0] -= 1;
        }
        let key = (Partition::from_unsorted(d), Partition::from_unsorted(p.gamma().parts().to_vec()));
        let e = acc.entry(key).or_insert_with(QTPoly::zero);
        *e = &*e + &weight(p.area(), graded);
    }
    bi_sum(acc)
}

/// Coefficient of `s_{r^n}(y)` in the doubly labelled characteristic of
/// size `rn x n`.
pub fn s_rho_coefficient(r: u32, n: u32, graded: bool) -> Result<SymF> {
    let f = frob_l2_brute((r * n) as usize, n as usize, graded);
    let rho = vec![r; n as usize];
    Ok(f.pair_y(&SymF::s(&rho)))
}
