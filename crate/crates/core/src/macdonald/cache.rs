//! Schur expansions of the integral-form Macdonald polynomials, obtained
//! from the two triangularity conditions plus `K_{(n),mu} = 1`.
//!
//! The system is solved over Q at sample points `(q, t)`, the coefficients
//! are interpolated within their known degree bounds, and the result is
//! certified by re-checking both triangularities symbolically.

use crate::algebra::{rat, solve_integer, Mono, QTPoly, QTRat};
use crate::error::{Error, Result};
use crate::symfunc::{tables, Basis, Partition, SymF};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

static GENERIC_CAP: AtomicUsize = AtomicUsize::new(8);
static SPECIAL_CAP: AtomicUsize = AtomicUsize::new(10);

pub fn generic_cap() -> usize {
    GENERIC_CAP.load(Ordering::Relaxed)
}

pub fn set_generic_cap(n: usize) {
    GENERIC_CAP.store(n, Ordering::Relaxed);
}

pub fn specialized_cap() -> usize {
    SPECIAL_CAP.load(Ordering::Relaxed)
}

pub fn set_specialized_cap(n: usize) {
    SPECIAL_CAP.store(n, Ordering::Relaxed);
}

pub(crate) fn check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::DegreeCap { degree: n, cap })
    } else {
        Ok(())
    }
}

/// `B_mu(q, t)`: sum of `q^i t^j` over the cells of `mu`.
pub fn bmu(mu: &Partition) -> QTPoly {
    QTPoly::from_terms(mu.cells().map(|(i, j)| (Mono::new(i, j), rat(1))))
}

/// `<s_la[X(1 - x)], s_nu>` as polynomials in `x` (stored in `q`).
pub(crate) fn pleth_matrix(n: usize) -> Vec<Vec<QTPoly>> {
    let tb = tables(n);
    let k = tb.parts.len();
    let w: Vec<QTPoly> = tb
        .parts
        .iter()
        .zip(&tb.z)
        .map(|(rho, z)| {
            let mut f = QTPoly::constant(z.recip());
            for &r in rho.parts() {
                f = &f * &(&QTPoly::one() - &QTPoly::q_pow(r));
            }
            f
        })
        .collect();
    (0..k)
        .map(|l| {
            (0..k)
                .map(|v| {
                    let mut acc = QTPoly::zero();
                    for (r, wr) in w.iter().enumerate() {
                        let c = tb.chi[l][r] * tb.chi[v][r];
                        if c != 0 {
                            acc = &acc + &wr.scale(&rat(c));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn eval_matrix(m: &[Vec<QTPoly>], x: &BigRational) -> Vec<Vec<BigInt>> {
    let one = BigRational::one();
    m.iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    let v = p.eval(x, &one);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Coefficients (constant first) of the polynomial through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut c = 2i64;
    while out.len() < count {
        if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Schur data for every `H_mu` with `|mu| = n`.
pub struct MacDegree {
    pub n: usize,
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `kostka[mu][la]` is the coefficient of `s_la` in `H_mu`.
    pub kostka: Vec<Vec<QTPoly>>,
    /// `plethq[mu][la]` is the coefficient of `s_la` in `H_mu[X(1 - q)]`.
    pub plethq: Vec<Vec<QTPoly>>,
    h: Vec<SymF>,
}

impl MacDegree {
    pub fn idx(&self, mu: &Partition) -> usize {
        self.index[mu]
    }

    pub fn h(&self, mu: &Partition) -> &SymF {
        &self.h[self.idx(mu)]
    }

    fn build(n: usize) -> Result<MacDegree> {
        let parts = Partition::all(n);
        let index: HashMap<Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let pq = pleth_matrix(n);
        let todo: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] >= parts[i].conjugate()).collect();
        let solved: Vec<(usize, Vec<QTPoly>)> =
            todo.par_iter().map(|&i| solve_one(&parts, i, &pq).map(|k| (i, k))).collect::<Result<_>>()?;
        let mut kostka = vec![Vec::new(); parts.len()];
        for (i, k) in solved {
            let j = index[&parts[i].conjugate()];
            if j != i {
                // H_{mu'}(q, t) = H_mu(t, q)
                kostka[j] = k.iter().map(|p| p.swap_qt()).collect();
            }
            kostka[i] = k;
        }
        let mut plethq = Vec::with_capacity(parts.len());
        for (i, mu) in parts.iter().enumerate() {
            let row = certify(&parts, mu, &kostka[i], &pq)
                .ok_or_else(|| Error::Internal(format!("triangularity check failed for {mu}")))?;
            plethq.push(row);
        }
        let h = kostka
            .iter()
            .map(|row| {
                let coeffs = parts.iter().cloned().zip(row.iter().map(|p| QTRat::from(p.clone()))).collect();
                SymF::from_basis(Basis::S, &coeffs)
            })
            .collect::<Result<_>>()?;
        Ok(MacDegree { n, parts, index, kostka, plethq, h })
    }
}

/// Checks both triangularities and the normalization exactly; returns the
/// Schur coordinates of `H_mu[X(1 - q)]`.
fn certify(parts: &[Partition], mu: &Partition, k: &[QTPoly], pq: &[Vec<QTPoly>]) -> Option<Vec<QTPoly>> {
    if !k.last()?.is_one() {
        return None;
    }
    let conj = mu.conjugate();
    let mut out = Vec::with_capacity(parts.len());
    for (v, nu) in parts.iter().enumerate() {
        let mut aq = QTPoly::zero();
        let mut at = QTPoly::zero();
        for (l, kl) in k.iter().enumerate() {
            if kl.is_zero() {
                continue;
            }
            aq = &aq + &(kl * &pq[l][v]);
            if !nu.dominates(&conj) {
                at = &at + &(kl * &pq[l][v].swap_qt());
            }
        }
        if (!nu.dominates(mu) && !aq.is_zero()) || !at.is_zero() {
            return None;
        }
        out.push(aq);
    }
    Some(out)
}

fn constraint_rows(parts: &[Partition], mu: &Partition, pq: &[Vec<BigInt>], pt: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = parts.len();
    let conj = mu.conjugate();
    let mut rows = Vec::new();
    for (v, nu) in parts.iter().enumerate() {
        if !nu.dominates(mu) {
            rows.push((0..k).map(|l| pq[l][v].clone()).collect());
        }
        if !nu.dominates(&conj) {
            rows.push((0..k).map(|l| pt[l][v].clone()).collect());
        }
    }
    let mut norm = vec![BigInt::zero(); k];
    norm[k - 1] = BigInt::one();
    rows.push(norm);
    rows
}

fn solve_one(parts: &[Partition], i: usize, pq: &[Vec<QTPoly>]) -> Result<Vec<QTPoly>> {
    let mu = &parts[i];
    let n = mu.size() as u32;
    let bounds = [
        (mu.conjugate().n() as usize, mu.n() as usize),
        ((n * n.saturating_sub(1) / 2) as usize, (n * n.saturating_sub(1) / 2) as usize),
    ];
    for (dq, dt) in bounds {
        let k = interpolate_system(parts, mu, pq, dq, dt)?;
        if certify(parts, mu, &k, pq).is_some() {
            return Ok(k);
        }
    }
    Err(Error::Internal(format!("interpolation did not certify for {mu}")))
}

fn interpolate_system(
    parts: &[Partition],
    mu: &Partition,
    pq: &[Vec<QTPoly>],
    dq: usize,
    dt: usize,
) -> Result<Vec<QTPoly>> {
    let k = parts.len();
    // q and t drawn from disjoint primes, t negative, so no q^a t^b = 1
    let ps = primes(2 * (dq + dt) + 40);
    let qs: Vec<BigRational> = ps.iter().step_by(2).take(dq + 1).map(|&p| rat(p)).collect();
    let mut t_pool = ps.iter().skip(1).step_by(2).map(|&p| rat(-p));
    let pq_at: Vec<Vec<Vec<BigInt>>> = qs.iter().map(|x| eval_matrix(pq, x)).collect();
    let mut ts = Vec::new();
    // per t value, per unknown: coefficients in q
    let mut by_t: Vec<Vec<Vec<BigRational>>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();
    while ts.len() < dt + 1 {
        let t0 = t_pool.next().ok_or_else(|| Error::Internal("ran out of sample points".into()))?;
        let pt = eval_matrix(pq, &t0);
        let mut vals: Vec<Vec<BigRational>> = vec![Vec::with_capacity(qs.len()); k];
        let mut ok = true;
        for pqa in &pq_at {
            let rows = constraint_rows(parts, mu, pqa, &pt);
            rhs.clear();
            rhs.resize(rows.len(), BigInt::zero());
            *rhs.last_mut().unwrap() = BigInt::one();
            match solve_integer(&rows, &rhs) {
                Ok(x) => {
                    for (l, v) in x.into_iter().enumerate() {
                        vals[l].push(v);
                    }
                }
                Err(Error::SingularSystem { .. }) => {
                    ok = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !ok {
            continue;
        }
        by_t.push(vals.iter().map(|ys| interpolate(&qs, ys)).collect());
        ts.push(t0);
    }
    let mut out = Vec::with_capacity(k);
    for l in 0..k {
        let mut poly = QTPoly::zero();
        for d in 0..=dq {
            let ys: Vec<BigRational> = by_t.iter().map(|v| v[l][d].clone()).collect();
            for (e, c) in interpolate(&ts, &ys).into_iter().enumerate() {
                poly.add_term(Mono::new(d as u32, e as u32), c);
            }
        }
        out.push(poly);
    }
    Ok(out)
}

static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MacDegree>>>> = OnceLock::new();

/// Cached Macdonald data for degree `n` (subject to the generic cap).
pub fn mac_degree(n: usize) -> Result<Arc<MacDegree>> {
    check(n, generic_cap())?;
    let lock = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = lock.read().unwrap().get(&n) {
        return Ok(d.clone());
    }
    let built = Arc::new(MacDegree::build(n)?);
    Ok(lock.write().unwrap().entry(n).or_insert(built).clone())
}

/// The integral-form Macdonald polynomial `H_mu(z; q, t)`.
pub fn macdonald_h(mu: &Partition) -> Result<SymF> {
    if mu.is_empty() {
        return Ok(SymF::one());
    }
    Ok(mac_degree(mu.size())?.h(mu).clone())
}

/// `K_{la,mu}(q, t)`, the Schur coefficient of `s_la` in `H_mu`.
pub fn qt_kostka(la: &Partition, mu: &Partition) -> Result<QTPoly> {
    if la.size() != mu.size() {
        return Err(Error::InvalidSize(format!("{la} and {mu} have different sizes")));
    }
    if mu.is_empty() {
        return Ok(QTPoly::one());
    }
    let d = mac_degree(mu.size())?;
    Ok(d.kostka[d.idx(mu)][d.idx(la)].clone())
}

/// `H_mu(z; q, 0)`, from the univariate system with `t = 0`; independent
/// of the generic cache.
pub fn macdonald_h_t0(mu: &Partition) -> Result<SymF> {
    let n = mu.size();
    if n == 0 {
        return Ok(SymF::one());
    }
    check(n, specialized_cap())?;
    let row = t0_coefficients(mu)?;
    let parts = Partition::all(n);
    let coeffs = parts.into_iter().zip(row.into_iter().map(QTRat::from)).collect();
    SymF::from_basis(Basis::S, &coeffs)
}

/// Schur coefficients of `H_mu(z; q, 0)`, indexed like `Partition::all(n)`.
pub(crate) fn t0_coefficients(mu: &Partition) -> Result<Vec<QTPoly>> {
    static T0: OnceLock<RwLock<HashMap<Partition, Arc<Vec<QTPoly>>>>> = OnceLock::new();
    let lock = T0.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = lock.read().unwrap().get(mu) {
        return Ok(v.as_ref().clone());
    }
    let v = Arc::new(solve_t0(mu)?);
    Ok(lock.write().unwrap().entry(mu.clone()).or_insert(v).as_ref().clone())
}

fn solve_t0(mu: &Partition) -> Result<Vec<QTPoly>> {
    let n = mu.size();
    let parts = Partition::all(n);
    let k = parts.len();
    let conj = mu.conjugate();
    // support: la dominating mu'
    let unknowns: Vec<usize> = (0..k).filter(|&l| parts[l].dominates(&conj)).collect();
    let pq = pleth_matrix(n);
    let dq = conj.n() as usize;
    let ps = primes(dq + 40);
    let mut xs = Vec::new();
    let mut vals: Vec<Vec<BigRational>> = vec![Vec::new(); unknowns.len()];
    for &p in &ps {
        if xs.len() == dq + 1 {
            break;
        }
        let x = rat(p);
        let m = eval_matrix(&pq, &x);
        let mut rows: Vec<Vec<BigInt>> = (0..k)
            .filter(|&v| !parts[v].dominates(mu))
            .map(|v| unknowns.iter().map(|&l| m[l][v].clone()).collect())
            .collect();
        let mut norm = vec![BigInt::zero(); unknowns.len()];
        *norm.last_mut().unwrap() = BigInt::one();
        rows.push(norm);
        let mut rhs = vec![BigInt::zero(); rows.len()];
        *rhs.last_mut().unwrap() = BigInt::one();
        match solve_integer(&rows, &rhs) {
            Ok(sol) => {
                for (slot, v) in vals.iter_mut().zip(sol) {
                    slot.push(v);
                }
                xs.push(x);
            }
            Err(Error::SingularSystem { rank, size }) => {
                return Err(Error::Internal(format!("t = 0 system for {mu} has rank {rank} < {size} at q = {p}")))
            }
            Err(e) => return Err(e),
        }
    }
    let mut out = vec![QTPoly::zero(); k];
    for (slot, &l) in unknowns.iter().enumerate() {
        out[l] = QTPoly::from_terms(
            interpolate(&xs, &vals[slot]).into_iter().enumerate().map(|(d, c)| (Mono::new(d as u32, 0), c)),
        );
    }
    // exact check of the q-triangularity
    for (v, nu) in parts.iter().enumerate() {
        if nu.dominates(mu) {
            continue;
        }
        let mut acc = QTPoly::zero();
        for &l in &unknowns {
            acc = &acc + &(&out[l] * &pq[l][v]);
        }
        if !acc.is_zero() {
            return Err(Error::Internal(format!("t = 0 expansion of {mu} failed its check")));
        }
    }
    Ok(out)
}
