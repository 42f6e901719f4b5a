//! `<nabla e_n, h_la>` from the expansion
//! `e_n = sum_mu M B_mu Pi_mu H_mu / w_mu`, summed over the common
//! denominator of the `w_mu` so that only polynomial products and exact
//! divisions by binomials `q^i - t^j` occur.

use super::cache::{bmu, check, generic_cap, macdonald_h};
use crate::algebra::{rat, Mono, QTPoly, QTRat};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, Partition};
use std::collections::BTreeMap;

fn binomial(i: u32, j: u32) -> QTPoly {
    &QTPoly::q_pow(i) - &QTPoly::t_pow(j)
}

/// Factors `(q^i - t^j)` of `w_mu` with multiplicities, and the sign left
/// over from writing `t^l - q^{a+1}` as `-(q^{a+1} - t^l)`.
fn w_factors(mu: &Partition) -> (BTreeMap<(u32, u32), u32>, bool) {
    let mut f = BTreeMap::new();
    let mut neg = false;
    for (i, j) in mu.cells() {
        let (a, l) = (mu.arm(i, j), mu.leg(i, j));
        *f.entry((a, l + 1)).or_insert(0) += 1;
        *f.entry((a + 1, l)).or_insert(0) += 1;
        neg ^= true;
    }
    (f, neg)
}

/// `T_mu M B_mu Pi_mu`, the numerator of the `H_mu` coefficient of
/// `nabla e_n`.
fn numerator(mu: &Partition) -> QTPoly {
    let b = bmu(mu);
    let mut out = &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::t());
    out = &out * &b;
    let mut tmu = Mono::ONE;
    for (m, _) in b.terms() {
        tmu = tmu * *m;
        if *m != Mono::ONE {
            out = &out * &(&QTPoly::one() - &QTPoly::monomial(rat(1), m.q, m.t));
        }
    }
    out.mul_mono(tmu)
}

pub fn nabla_e_pairing(n: usize, la: &Partition) -> Result<QTRat> {
    if la.size() != n {
        return Err(Error::InvalidObject(format!("{la} is not a partition of {n}")));
    }
    if n == 0 {
        return Ok(QTRat::one());
    }
    check(n, generic_cap())?;
    let parts = Partition::all(n);
    let mut terms = Vec::new();
    let mut common: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for mu in &parts {
        let c = macdonald_h(mu)?.coeff_in(Basis::M, la)?;
        let c = c.as_poly().ok_or_else(|| Error::Internal(format!("H_{mu} has a non-polynomial coefficient")))?.clone();
        let (f, neg) = w_factors(mu);
        for (k, &m) in &f {
            let e = common.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        let mut num = &numerator(mu) * &c;
        if neg {
            num = -num;
        }
        terms.push((num, f));
    }
    let mut total = QTPoly::zero();
    for (mut num, f) in terms {
        for (k, &m) in &common {
            let have = f.get(k).copied().unwrap_or(0);
            for _ in have..m {
                num = &num * &binomial(k.0, k.1);
            }
        }
        total = &total + &num;
    }
    let mut den = QTPoly::one();
    for (k, &m) in &common {
        for _ in 0..m {
            let b = binomial(k.0, k.1);
            match total.div_exact(&b) {
                Some(qt) => total = qt,
                None => den = &den * &b,
            }
        }
    }
    if den.is_one() {
        Ok(QTRat::from(total))
    } else {
        QTRat::new(total, den)
    }
}
