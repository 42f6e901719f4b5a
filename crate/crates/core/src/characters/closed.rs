use crate::algebra::{qint, tint, QTRat};
use crate::error::{Error, Result};
use crate::polyomino::binom;
use crate::symfunc::{Basis, BiSymF, Partition, SymF};
use num_bigint::BigInt;
use num_rational::BigRational;

fn int(v: i64) -> QTRat {
    QTRat::from(v)
}

fn big(v: BigInt) -> QTRat {
    QTRat::from_int_big(v)
}

fn frac(a: BigInt, b: i64) -> QTRat {
    QTRat::from(BigRational::new(a, BigInt::from(b)))
}

fn hn(n: u32, a: &QTRat) -> SymF {
    SymF::h(&[n]).pleth_alphabet(a)
}

/// `h_n[(k+1) z]`, or `h_n[z [k+1]_q]` when graded.
pub fn frob_labelled_paths(k: u32, n: u32, graded: bool) -> SymF {
    if graded {
        hn(n, &QTRat::from(qint(k + 1)))
    } else {
        hn(n, &int(k as i64 + 1))
    }
}

/// `(1/k) C(n+k-2, k-1) h_n[k z]`.
pub fn frob_l(k: u32, n: u32) -> SymF {
    let (k, n) = (k as i64, n as i64);
    hn(n as u32, &int(k)).scale(&frac(binom(n + k - 2, k - 1), k))
}

/// The tabulated values for `n <= 4`, as polynomials in `k`.
pub fn frob_l_special(k: u32, n: u32) -> Result<SymF> {
    let k = k as i64;
    let b = |a: i64, c: i64| big(binom(a, c));
    let h = |p: &[u32]| SymF::h(p);
    let terms: Vec<(QTRat, SymF)> = match n {
        1 => vec![(int(1), h(&[1]))],
        2 => vec![(b(k, 2), h(&[1, 1])), (int(k), h(&[2]))],
        3 => {
            vec![(&int(2) * &b(k + 1, 4), h(&[1, 1, 1])), (&int(3) * &b(k + 1, 3), h(&[2, 1])), (b(k + 1, 2), h(&[3]))]
        }
        4 => vec![
            (&int(5) * &b(k + 2, 6), h(&[1, 1, 1, 1])),
            (&int(10) * &b(k + 2, 5), h(&[2, 1, 1])),
            (&int(4) * &b(k + 2, 4), h(&[3, 1])),
            (&int(2) * &b(k + 2, 4), h(&[2, 2])),
            (b(k + 2, 3), h(&[4])),
        ],
        _ => return Err(Error::OutOfDomain(format!("no tabulated value for n = {n}"))),
    };
    Ok(terms.iter().fold(SymF::zero(), |acc, (c, f)| &acc + &f.scale(c)))
}

/// `t^n (h_n[z [k]_t] - h_n[z [k-1]_t])`.
pub fn ribbon_closed(k: u32, n: u32) -> SymF {
    let d = &hn(n, &QTRat::from(tint(k))) - &hn(n, &QTRat::from(tint(k - 1)));
    d.scale(&QTRat::t_pow(n as i64))
}

fn bi(fy: SymF, fz: SymF, c: QTRat) -> BiSymF {
    BiSymF::tensor(&fy, &fz).scale(&c)
}

/// Three-term closed form; needs `k, n >= 2`.
pub fn frob_l2(k: u32, n: u32) -> Result<BiSymF> {
    if k < 2 || n < 2 {
        return Err(Error::OutOfDomain(format!("closed form needs k, n >= 2, got k={k}, n={n}")));
    }
    let (ki, ni) = (k as i64, n as i64);
    let a = bi(hn(k, &int(ni - 1)), hn(n, &int(ki)), frac(1.into(), ni - 1));
    let b = bi(hn(k, &int(ni)), hn(n, &int(ki - 1)), frac(1.into(), ki - 1));
    let c = bi(hn(k, &int(ni - 1)), hn(n, &int(ki - 1)), frac((ni + ki - 1).into(), (ni - 1) * (ki - 1)));
    Ok(a.add(&b).sub(&c))
}

/// `(1/k) h_n[k z] h_{k-1}[n y]`.
pub fn frob_l2star(k: u32, n: u32) -> BiSymF {
    let fy = if k == 1 { SymF::one() } else { hn(k - 1, &int(n as i64)) };
    bi(fy, hn(n, &int(k as i64)), frac(1.into(), k as i64))
}

/// `(1/(rn-1)) h_n[(rn-1) z]`.
pub fn s_rho_closed(r: u32, n: u32) -> Result<SymF> {
    let m = (r * n) as i64 - 1;
    if m < 1 {
        return Err(Error::OutOfDomain("needs rn >= 2".into()));
    }
    Ok(hn(n, &int(m)).scale(&frac(1.into(), m)))
}

/// `sum_la (rn+1)^{l(la)-2} prod_j C((r+1) j, j) p_la / z_la`.
pub fn trivariate_frob(n: u32, r: u32) -> SymF {
    let base = (r * n + 1) as i64;
    let mut out = SymF::zero();
    for la in Partition::all(n as usize) {
        let mut c = BigRational::from_integer(BigInt::from(1));
        let e = la.len() as i64 - 2;
        let pw = BigRational::from_integer(num_traits::pow(BigInt::from(base), e.unsigned_abs() as usize));
        c = if e >= 0 { c * pw } else { c / pw };
        for &j in la.parts() {
            c *= BigRational::from_integer(binom(((r + 1) * j) as i64, j as i64));
        }
        c /= BigRational::from_integer(la.z());
        out.add_term(la, QTRat::from(c));
    }
    out
}

/// Every `h`-coefficient is a polynomial with nonnegative integer coefficients.
pub fn is_h_positive(f: &SymF) -> Result<bool> {
    Ok(f.to_basis(Basis::H)?.values().all(|c| c.is_nonneg_polynomial()))
}
