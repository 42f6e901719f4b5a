use super::{Params, Value};
use crate::algebra::{qbinom, qint, QTPoly, QTRat};
use crate::characters as ch;
use crate::error::{Error, Result};
use crate::macdonald::{self as mac, Mode, OpSpec};
use crate::polyomino::{self as po, LabelledPath, LabelledPolyomino, LatticePath, Polyomino};
use crate::sl2;
use crate::symfunc::{Basis, Composition, Partition, SymF};
use num_bigint::BigInt;
use std::collections::BTreeSet;

pub static BUILDERS: &[&str] = &[
    "true",
    "frobL.brute",
    "frobL.closed",
    "frobL.special",
    "frobPaths.brute",
    "frobPaths.closed",
    "frobPathsQ.brute",
    "frobPathsQ.closed",
    "pathArea.brute",
    "qbinom.nk",
    "labelledPathArea.brute",
    "qint.pow",
    "count.P.brute",
    "count.P.closed",
    "count.P.shifted",
    "count.L.brute",
    "count.L.closed",
    "labelled2.sum",
    "labelled3.coeff",
    "motzkin.roundtrip",
    "cyclic.check",
    "frobL2.brute",
    "frobL2.closed",
    "count.L2.brute",
    "count.L2.closed",
    "frobL2star.brute",
    "frobL2star.closed",
    "count.L2star.brute",
    "count.L2star.closed",
    "srho.brute",
    "srho.closed",
    "srhoQ.brute",
    "srhoQ.rhs",
    "frobLq.shifted",
    "michele.rhs",
    "prop1.lhs",
    "prop1.rhs",
    "prop2.lhs",
    "prop2.rhs",
    "deltaBar.lhs",
    "deltaBar.rhs",
    "ribbon.brute",
    "ribbon.closed",
    "bounce",
    "bounce.swapQT",
    "bounce.swapKN",
    "bounce.tOne",
    "areaSeries",
    "qangela.lhs",
    "qangela.rhs",
    "diffSchurPos",
    "remark3",
    "mac.triangular",
    "mac.oneRow",
    "mac.oneRow.closed",
    "mac.tOneMult",
    "mac.tInvQ",
    "nabla.e2",
    "nabla.e2.expected",
    "enr.sum",
    "e_n",
    "egamma.check",
    "commC.lhs",
    "commC.rhs",
    "eigenD.check",
    "sl2.rank",
    "sl2.count",
    "sl2.standard",
    "plucker",
    "littlewood.dim",
    "slr.count",
];

fn int(v: impl Into<BigInt>) -> Value {
    Value::Scalar(QTRat::from_int_big(v.into()))
}

fn poly(p: QTPoly) -> Value {
    Value::Scalar(QTRat::from(p))
}

fn one_minus(p: QTPoly) -> QTRat {
    QTRat::from(&QTPoly::one() - &p)
}

/// `f[z / (1 - q)]`.
fn over_one_minus_q(f: &SymF) -> SymF {
    f.pleth_scale(|r| one_minus(QTPoly::q_pow(r)).recip().expect("nonzero"))
}

fn c_op(a: u32, f: &SymF) -> Result<SymF> {
    mac::c_op(a, f)
}

pub fn build(name: &str, p: &Params) -> Result<Value> {
    let k = || p.get('k');
    let n = || p.get('n');
    let r = || p.get('r');
    let d = || p.get('d');
    let ku = || k().map(|v| v as usize);
    let nu = || n().map(|v| v as usize);
    Ok(match name {
        "true" => Value::Flag(true),
        "frobL.brute" => Value::Sym(ch::frob_l_brute(ku()?, nu()?)?),
        "frobL.closed" => Value::Sym(ch::frob_l(k()?, n()?)),
        "frobL.special" => Value::Sym(ch::frob_l_special(k()?, n()?)?),
        "frobPaths.brute" => Value::Sym(ch::frob_labelled_paths_brute(ku()?, nu()?, false)?),
        "frobPaths.closed" => Value::Sym(ch::frob_labelled_paths(k()?, n()?, false)),
        "frobPathsQ.brute" => Value::Sym(ch::frob_labelled_paths_brute(ku()?, nu()?, true)?),
        "frobPathsQ.closed" => Value::Sym(ch::frob_labelled_paths(k()?, n()?, true)),
        "pathArea.brute" => {
            let mut s = QTPoly::zero();
            for path in LatticePath::all(ku()?, nu()?) {
                s = &s + &QTPoly::q_pow(path.area() as u32);
            }
            poly(s)
        }
        "qbinom.nk" => poly(qbinom(n()? + k()?, k()?)),
        "labelledPathArea.brute" => {
            let mut s = QTPoly::zero();
            for path in LabelledPath::all(ku()?, nu()?) {
                s = &s + &QTPoly::q_pow(path.area() as u32);
            }
            poly(s)
        }
        "qint.pow" => poly(qint(k()? + 1).pow(n()?)),
        "count.P.brute" => int(Polyomino::all(ku()?, nu()?).len()),
        "count.P.closed" => int(po::polyominoes(k()? as i64, n()? as i64)),
        "count.P.shifted" => int(po::polyominoes(k()? as i64 + 1, n()? as i64)),
        "count.L.brute" => {
            let shapes = Polyomino::all(ku()?, nu()?);
            int(shapes.iter().map(|p| po::labellings(p.gamma().parts()).len()).sum::<usize>())
        }
        "count.L.closed" => int(po::labelled(k()? as i64, n()? as i64)),
        "labelled2.sum" => {
            let nn = n()? as i64;
            let fact = |m: i64| (1..=m).fold(BigInt::from(1), |a, i| a * i);
            let mut s = BigInt::from(0);
            for shape in Polyomino::all(ku()?, nu()?) {
                let den = shape.gamma().parts().iter().fold(BigInt::from(1), |a, &g| a * fact(g as i64));
                s += fact(nn) / den;
            }
            int(s)
        }
        "labelled3.coeff" => int(po::labelled_series_coeff(k()? as i64, n()? as i64 - 1)),
        "motzkin.roundtrip" => Value::Flag(motzkin_roundtrip(ku()?, nu()?)?),
        "cyclic.check" => Value::Flag(cyclic_check(ku()?, nu()?)?),
        "frobL2.brute" => Value::Bi(ch::frob_l2_brute(ku()?, nu()?, false)),
        "frobL2.closed" => Value::Bi(ch::frob_l2(k()?, n()?)?),
        "count.L2.brute" => int(po::DoublyLabelledPolyomino::all(ku()?, nu()?, false).len()),
        "count.L2.closed" => int(po::doubly(k()? as i64, n()? as i64)),
        "frobL2star.brute" => Value::Bi(ch::frob_l2star_brute(ku()?, nu()?)),
        "frobL2star.closed" => Value::Bi(ch::frob_l2star(k()?, n()?)),
        "count.L2star.brute" => int(po::DoublyLabelledPolyomino::all(ku()?, nu()?, true).len()),
        "count.L2star.closed" => int(po::doubly_star(k()? as i64, n()? as i64)),
        "srho.brute" => Value::Sym(ch::s_rho_coefficient(r()?, n()?, false)?),
        "srho.closed" => Value::Sym(ch::s_rho_closed(r()?, n()?)?),
        "srhoQ.brute" => Value::Sym(ch::s_rho_coefficient(r()?, n()?, true)?),
        "srhoQ.rhs" => Value::Sym(ch::s_rho_graded_rhs(r()?, n()?)?),
        "frobLq.shifted" => Value::Sym(ch::frob_l_q(ku()? + 1, nu()?)?),
        "michele.rhs" => Value::Sym(ch::michele_rhs(k()?, n()?)?),
        "prop1.lhs" => Value::Sym(ch::prop1_lhs(k()?, n()?)?),
        "prop1.rhs" => Value::Sym(ch::prop1_rhs(k()?, n()?)),
        "prop2.lhs" => Value::Sym(ch::prop2_lhs(k()?, n()?)?),
        "prop2.rhs" => Value::Sym(ch::prop2_rhs(k()?, n()?)?),
        "deltaBar.lhs" => Value::Sym(ch::delta_bar_lhs(k()?, n()?)?),
        "deltaBar.rhs" => Value::Sym(ch::delta_bar_rhs(k()?, n()?)?),
        "ribbon.brute" => Value::Sym(ch::ribbon_frob(ku()?, nu()?)?),
        "ribbon.closed" => Value::Sym(ch::ribbon_closed(k()?, n()?)),
        "bounce" => Value::Scalar(ch::bounce_pairing(k()?, n()?)?),
        "bounce.swapQT" => Value::Scalar(ch::bounce_pairing(k()?, n()?)?.swap_qt()),
        "bounce.swapKN" => Value::Scalar(ch::bounce_pairing(n()?, k()?)?),
        "bounce.tOne" => Value::Scalar(ch::bounce_pairing(k()?, n()?)?.at_t_one()?),
        "areaSeries" => poly(ch::area_series(ku()?, nu()?)),
        "qangela.lhs" => Value::Scalar(ch::qangela_lhs(k()?, n()?)?),
        "qangela.rhs" => Value::Scalar(ch::qangela_rhs(k()?, n()?)?),
        "diffSchurPos" => Value::Flag(ch::diff_schur_pos(n()?, r()?)?.is_schur_positive()?),
        "remark3" => {
            let (n, r) = (n()?, r()?);
            Value::Flag(ch::is_h_positive(&(&ch::frob_l(r * n, n) - &ch::trivariate_frob(n, r)))?)
        }
        "mac.triangular" => Value::Flag(mac_triangular(nu()?)?),
        "mac.oneRow" => Value::Sym(mac::macdonald_h(&Partition::row(n()?))?),
        "mac.oneRow.closed" => {
            let mut c = QTPoly::one();
            for i in 1..=n()? {
                c = &c * &(&QTPoly::one() - &QTPoly::q_pow(i));
            }
            Value::Sym(over_one_minus_q(&SymF::h(&[n()?])).scale(&QTRat::from(c)))
        }
        "mac.tOneMult" => {
            let mut ok = true;
            for mu in Partition::all(nu()?) {
                let lhs = mac::macdonald_h(&mu)?.at_t_one()?;
                let mut rhs = SymF::one();
                for &m in mu.parts() {
                    rhs = &rhs * &mac::macdonald_h(&Partition::row(m))?.at_t_one()?;
                }
                ok &= lhs == rhs;
            }
            Value::Flag(ok)
        }
        "mac.tInvQ" => {
            let mut ok = true;
            for mu in Partition::all(nu()?) {
                let lhs = mac::macdonald_h(&mu)?.at_t_inv_q()?;
                let mut c = QTRat::q_pow(-(mu.n() as i64));
                for h in mu.hooks() {
                    c = &c * &one_minus(QTPoly::q_pow(h));
                }
                ok &= lhs == over_one_minus_q(&SymF::basis(Basis::S, &mu)?).scale(&c);
            }
            Value::Flag(ok)
        }
        "nabla.e2" => Value::Sym(mac::nabla(&SymF::e(&[2]), 1)?),
        "nabla.e2.expected" => Value::Sym(nabla_e2_expected()),
        "enr.sum" => Value::Sym(mac::e_nr_all(n()?)?.into_iter().sum()),
        "e_n" => Value::Sym(SymF::e(&[n()?])),
        "egamma.check" => {
            let n = nu()?;
            let mut ok = true;
            for mu in Partition::all(n) {
                ok &= mac::e_mu_via_h(&mu)? == mac::e_gamma(&Composition::new(mu.parts().to_vec())?)?;
            }
            for r in 1..=n {
                let total: SymF =
                    Composition::all(n, r).iter().map(mac::e_gamma).collect::<Result<Vec<_>>>()?.into_iter().sum();
                ok &= total == mac::e_nr(n as u32, r as u32)?;
            }
            Value::Flag(ok)
        }
        "commC.lhs" | "commC.rhs" => {
            let (a, b) = (k()?, r()?);
            let seed = if d()? == 0 { SymF::one() } else { SymF::s(&[1]) };
            if name == "commC.lhs" {
                Value::Sym((&c_op(b, &c_op(a, &seed)?)? + &c_op(a - 1, &c_op(b + 1, &seed)?)?).scale(&QTRat::q()))
            } else {
                Value::Sym(&c_op(a, &c_op(b, &seed)?)? + &c_op(b + 1, &c_op(a - 1, &seed)?)?)
            }
        }
        "eigenD.check" => {
            let (k, n) = (k()?, nu()?);
            let spec = OpSpec::new(SymF::h(&[k]), Mode::TZero);
            let mut ok = true;
            for r in 1..=n {
                for g in Composition::all(n, r) {
                    let e = mac::e_gamma(&g)?;
                    ok &= mac::delta(&spec, &e)? == e.scale(&QTRat::from(mac::eigen_h_k(k, r as u32)));
                }
            }
            Value::Flag(ok)
        }
        "sl2.rank" => int(sl2::rank_check(d()? as usize, nu()?)?),
        "sl2.count" => {
            let n = n()? as i64;
            if n < 2 {
                return Err(Error::OutOfDomain("needs n >= 2".into()));
            }
            int(po::polyominoes(d()? as i64 + 1, n - 1))
        }
        "sl2.standard" => {
            let (d, n) = (d()? as usize, nu()?);
            let got: BTreeSet<_> = sl2::minor_basis(d, n)?.into_iter().collect();
            let want: BTreeSet<_> = sl2::standard_monomials(d, n).into_iter().collect();
            Value::Flag(got == want && got.iter().all(|m| m.is_standard() && m.degree() == d))
        }
        "plucker" => {
            let n = nu()?;
            let mut ok = true;
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        for l in k + 1..=n {
                            ok &= sl2::plucker(n, i, j, k, l)?.is_zero();
                        }
                    }
                }
            }
            Value::Flag(ok)
        }
        "littlewood.dim" => {
            let n = nu()?;
            let f = sl2::littlewood_frob(d()?, n)?;
            Value::Scalar(f.hall(&SymF::p(&vec![1; n])))
        }
        "slr.count" => int(sl2::slr_count(k()?, n()?, 2)),
        _ => return Err(Error::Unknown(format!("builder `{name}`"))),
    })
}

/// `s_2 + (q + t) s_11`.
pub fn nabla_e2_expected() -> SymF {
    let qt = &QTRat::q() + &QTRat::t();
    &SymF::s(&[2]) + &SymF::s(&[1, 1]).scale(&qt)
}

fn motzkin_roundtrip(k: usize, n: usize) -> Result<bool> {
    for p in Polyomino::all(k, n) {
        let w = po::to_motzkin(&p);
        if !w.is_primitive() || po::from_motzkin(&w)? != p || w.to_string().parse::<po::MotzkinWord>()? != w {
            return Ok(false);
        }
        let a = po::to_aword(&p);
        if a.len() != k + n || w.len() != k + n || a.to_string().parse::<po::AWord>()? != a {
            return Ok(false);
        }
        if p.to_string().parse::<Polyomino>()? != p {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sorted_blocks(b: Vec<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    b.into_iter().collect()
}

fn cyclic_check(k: usize, n: usize) -> Result<bool> {
    let mut reps: std::collections::BTreeMap<LabelledPolyomino, usize> = Default::default();
    for ell in LabelledPath::all(k - 1, n) {
        for beta in LatticePath::all(k - 1, n - 1) {
            let c = po::cyclic_map(&ell, &beta)?;
            let part = sorted_blocks(ell.blocks());
            if c.members.len() != k || c.members.iter().any(|(m, _)| sorted_blocks(m.blocks()) != part) {
                return Ok(false);
            }
            let rep = match c.representative() {
                Ok(rep) => rep.clone(),
                Err(_) => return Ok(false),
            };
            if sorted_blocks(rep.blocks()) != part {
                return Ok(false);
            }
            *reps.entry(rep).or_default() += 1;
        }
    }
    let all: BTreeSet<_> = LabelledPolyomino::all(k, n).into_iter().collect();
    Ok(reps.keys().cloned().collect::<BTreeSet<_>>() == all && reps.values().all(|&c| c == k))
}

fn mac_triangular(n: usize) -> Result<bool> {
    for mu in Partition::all(n) {
        let h = mac::macdonald_h(&mu)?;
        if !h.coeff_in(Basis::S, &Partition::row(n as u32))?.is_one() {
            return Ok(false);
        }
        let xq = h.pleth_alphabet(&one_minus(QTPoly::q())).to_basis(Basis::S)?;
        let xt = h.pleth_alphabet(&one_minus(QTPoly::t())).to_basis(Basis::S)?;
        if !xq.keys().all(|la| la.dominates(&mu)) || !xt.keys().all(|la| la.dominates(&mu.conjugate())) {
            return Ok(false);
        }
    }
    Ok(true)
}
