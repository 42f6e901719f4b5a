use crate::algebra::{qbinom, qint, QTPoly, QTRat};
use crate::error::Result;
use crate::macdonald::{delta, nabla, nabla_e_pairing, nabla_mode, Mode, OpSpec};
use crate::symfunc::{Partition, SymF};

fn en(n: u32) -> SymF {
    SymF::e(&[n])
}

fn h_parts(parts: &[u32]) -> SymF {
    let p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
    if p.is_empty() {
        SymF::one()
    } else {
        SymF::h(&p)
    }
}

fn op(f: SymF, mode: Mode, g: &SymF) -> Result<SymF> {
    delta(&OpSpec::new(f, mode), g)
}

/// `omega Delta_{h_k}|_{t=1} e_n`, conjecturally the area-graded
/// characteristic of width `k + 1`.
pub fn michele_rhs(k: u32, n: u32) -> Result<SymF> {
    Ok(op(h_parts(&[k]), Mode::TOne, &en(n))?.omega())
}

/// `omega Delta_{h_k} e_n` at `q = 0`, from the `t = 0` mode and the
/// `q <-> t` symmetry.
pub fn prop1_lhs(k: u32, n: u32) -> Result<SymF> {
    Ok(op(h_parts(&[k]), Mode::TZero, &en(n))?.swap_qt().omega())
}

/// `t^{-k} (h_n[z [k+1]_t] - h_n[z [k]_t])`.
pub fn prop1_rhs(k: u32, n: u32) -> SymF {
    let hn = |a: QTPoly| SymF::h(&[n]).pleth_alphabet(&QTRat::from(a));
    (&hn(crate::algebra::tint(k + 1)) - &hn(crate::algebra::tint(k))).scale(&QTRat::t_pow(-(k as i64)))
}

/// `omega Delta_{h_{k-1}}|_{t=1/q} e_n`.
pub fn prop2_lhs(k: u32, n: u32) -> Result<SymF> {
    Ok(op(h_parts(&[k - 1]), Mode::TInvQ, &en(n))?.omega())
}

/// `q^{n+k-nk-1} / [k]_q h_n[z [k]_q] qbinom(n+k-2, k-1)`.
pub fn prop2_rhs(k: u32, n: u32) -> Result<SymF> {
    let (ki, ni) = (k as i64, n as i64);
    let c = (&QTRat::q_pow(ni + ki - ni * ki - 1) * &QTRat::from(qbinom(n + k - 2, k - 1)))
        .checked_div(&QTRat::from(qint(k)))?;
    Ok(SymF::h(&[n]).pleth_alphabet(&QTRat::from(qint(k))).scale(&c))
}

/// `q^{kn - C(k+1,2)} Delta_{e_k}|_{t=1/q} e_n`.
pub fn delta_bar_lhs(k: u32, n: u32) -> Result<SymF> {
    let e = (k * n) as i64 - (k * (k + 1) / 2) as i64;
    let f = if k == 0 { SymF::one() } else { SymF::e(&[k]) };
    Ok(op(f, Mode::TInvQ, &en(n))?.scale(&QTRat::q_pow(e)))
}

/// `qbinom(n, k) / [k+1]_q e_n[z [k+1]_q]`.
pub fn delta_bar_rhs(k: u32, n: u32) -> Result<SymF> {
    let c = QTRat::from(qbinom(n, k)).checked_div(&QTRat::from(qint(k + 1)))?;
    Ok(en(n).pleth_alphabet(&QTRat::from(qint(k + 1))).scale(&c))
}

/// `omega nabla~^r ((-q)^{1-n} h_n)` with `nabla~` the `t = 1` operator.
pub fn s_rho_graded_rhs(r: u32, n: u32) -> Result<SymF> {
    let q = QTRat::q_pow(1 - n as i64);
    let sign = if n.is_multiple_of(2) { -q } else { q };
    Ok(nabla_mode(&SymF::h(&[n]).scale(&sign), r, Mode::TOne)?.omega())
}

/// `<nabla e_{k+n-2}, h_{k-1} h_{n-1}>`.
pub fn bounce_pairing(k: u32, n: u32) -> Result<QTRat> {
    let la = Partition::from_unsorted(vec![k - 1, n - 1].into_iter().filter(|&x| x > 0).collect());
    nabla_e_pairing((k + n - 2) as usize, &la)
}

/// The same pairing through the generic `nabla`.
pub fn bounce_pairing_generic(k: u32, n: u32) -> Result<QTRat> {
    let m = k + n - 2;
    let g = if m == 0 { SymF::one() } else { nabla(&en(m), 1)? };
    Ok(g.hall(&h_parts(&[k - 1, n - 1])))
}

/// `q^{(k-1)(n-1)} P_{k,n}(q, 1/q)`.
pub fn qangela_lhs(k: u32, n: u32) -> Result<QTRat> {
    let v = bounce_pairing(k, n)?.at_t_inv_q()?;
    Ok(&v * &QTRat::q_pow(((k - 1) * (n - 1)) as i64))
}

/// `qbinom(n+k, n) qbinom(n+k-2, n-1) / [n+k]_q`.
pub fn qangela_rhs(k: u32, n: u32) -> Result<QTRat> {
    (&QTRat::from(qbinom(n + k, n)) * &QTRat::from(qbinom(n + k - 2, n - 1))).checked_div(&QTRat::from(qint(n + k)))
}

/// `Delta_{h_{rn-1}} e_n - q^{C(n-1,2)} nabla^r e_n`.
pub fn diff_schur_pos(n: u32, r: u32) -> Result<SymF> {
    let a = op(h_parts(&[r * n - 1]), Mode::Generic, &en(n))?;
    let b = nabla(&en(n), r)?;
    let e = ((n - 1) * n.saturating_sub(2) / 2) as i64;
    Ok(&a - &b.scale(&QTRat::q_pow(e)))
}
