//! The refinement `e_n = sum_r E_{n,r}` and the creation operators `C_a`.

use super::cache::{check, macdonald_h_t0, specialized_cap};
use crate::algebra::{qbinom, qint, solve_linear_multi, AuxSeries, QTPoly, QTRat};
use crate::error::{Error, Result};
use crate::symfunc::{Composition, Partition, SymF};

/// `E_{n,r}`, solved from `sum_r qbinom(k+r, r) E_{n,r} = e_n[z [k+1]_q]`
/// for `k = 0..n-1`.
pub fn e_nr(n: u32, r: u32) -> Result<SymF> {
    if r == 0 || r > n {
        return Err(Error::OutOfDomain(format!("r = {r} not in 1..={n}")));
    }
    Ok(e_nr_all(n)?.swap_remove(r as usize - 1))
}

/// `[E_{n,1}, ..., E_{n,n}]`.
pub fn e_nr_all(n: u32) -> Result<Vec<SymF>> {
    if n == 0 {
        return Err(Error::OutOfDomain("n must be positive".into()));
    }
    check(n as usize, specialized_cap())?;
    let en = SymF::e(&[n]);
    let keys: Vec<Partition> = Partition::all(n as usize);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for k in 0..n {
        a.push((1..=n).map(|r| QTRat::from(qbinom(k + r, r))).collect::<Vec<_>>());
        let rhs = en.pleth_alphabet(&QTRat::from(qint(k + 1)));
        b.push(keys.iter().map(|p| rhs.coeff(p)).collect::<Vec<_>>());
    }
    let x = solve_linear_multi(&a, &b)?;
    Ok(x.into_iter()
        .map(|row| {
            let mut f = SymF::zero();
            for (p, c) in keys.iter().zip(row) {
                f.add_term(p.clone(), c);
            }
            f
        })
        .collect())
}

/// `(-q)^e` for any integer `e`.
fn minus_q_pow(e: i64) -> QTRat {
    let v = QTRat::q_pow(e);
    if e.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

/// `C_a f = (-q)^{1-a} f[z - (1 - 1/q)/u] sum_k h_k u^k |_{u^a}`.
pub fn c_op(a: u32, f: &SymF) -> Result<SymF> {
    if a == 0 {
        return Err(Error::OutOfDomain("C_a needs a >= 1".into()));
    }
    let d = f.max_degree();
    check(d + a as usize, specialized_cap())?;
    let lo = -(d as i32);
    let a_exp = a as i32;
    let mut shifted: AuxSeries<SymF> = AuxSeries::new(lo, 0);
    for (rho, c) in f.terms() {
        let mut term = AuxSeries::monomial(lo, 0, 0, SymF::scalar(c.clone()));
        for &r in rho.parts() {
            let mut factor = AuxSeries::monomial(lo, 0, 0, SymF::p(&[r]));
            // -(1 - q^{-r}) u^{-r}
            let k = &QTRat::q_pow(-(r as i64)) - &QTRat::one();
            factor.set(-(r as i32), SymF::scalar(k));
            term = term.mul_window(&factor, lo, 0);
        }
        shifted = shifted.add(&term);
    }
    let mut hs: AuxSeries<SymF> = AuxSeries::new(0, a_exp - lo);
    for k in 0..=(a as usize + d) {
        hs.set(k as i32, if k == 0 { SymF::one() } else { SymF::h(&[k as u32]) });
    }
    let prod = shifted.mul_window(&hs, a_exp, a_exp);
    Ok(prod.coeff(a_exp).scale(&minus_q_pow(1 - a as i64)))
}

/// `E_gamma = C_{gamma_1} E_{gamma_2 ...}`, with `E_() = 1`.
pub fn e_gamma(gamma: &Composition) -> Result<SymF> {
    let mut f = SymF::one();
    for &a in gamma.parts().iter().rev() {
        f = c_op(a, &f)?;
    }
    Ok(f)
}

/// `q^{-n(mu)} (-1/q)^{n-r} H_{mu'}(z; q, 0)` for `mu` with `r` parts.
pub fn e_mu_via_h(mu: &Partition) -> Result<SymF> {
    let n = mu.size() as i64;
    let r = mu.len() as i64;
    let h = macdonald_h_t0(&mu.conjugate())?;
    Ok(h.scale(&(&QTRat::q_pow(-(mu.n() as i64)) * &minus_q_pow(-(n - r)))))
}

/// `qbinom(k + r - 1, r - 1)`, the `t = 0` eigenvalue of `Delta_{h_k}` on
/// `E_gamma` with `r` parts.
pub fn eigen_h_k(k: u32, r: u32) -> QTPoly {
    qbinom(k + r - 1, r - 1)
}
