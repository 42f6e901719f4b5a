use super::cache::{bmu, check, mac_degree, specialized_cap, t0_coefficients};
use crate::algebra::{QTPoly, QTRat};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, Partition, SymF};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Specialization of `t` under which an operator is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Generic,
    TOne,
    TZero,
    TInvQ,
}

impl Mode {
    pub fn specialize(self, c: &QTRat) -> Result<QTRat> {
        match self {
            Mode::Generic => Ok(c.clone()),
            Mode::TOne => c.at_t_one(),
            Mode::TZero => c.at_t_zero(),
            Mode::TInvQ => c.at_t_inv_q(),
        }
    }

    pub fn specialize_symf(self, f: &SymF) -> Result<SymF> {
        f.map_coeffs(|c| self.specialize(c))
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "generic" => Ok(Mode::Generic),
            "t=1" | "t1" => Ok(Mode::TOne),
            "t=0" | "t0" => Ok(Mode::TZero),
            "t=1/q" | "tinvq" => Ok(Mode::TInvQ),
            _ => Err(Error::Unknown(format!("operator mode `{s}`"))),
        }
    }
}

/// The operator `Delta_f` with `t` specialized per `mode`.
#[derive(Clone, Debug)]
pub struct OpSpec {
    pub f: SymF,
    pub mode: Mode,
}

impl OpSpec {
    pub fn new(f: SymF, mode: Mode) -> Self {
        OpSpec { f, mode }
    }

    /// `f[B_mu]` under the mode's specialization.
    pub fn eigenvalue(&self, mu: &Partition) -> Result<QTRat> {
        let b = QTRat::from(bmu(mu));
        let v = self.f.eval_alphabet(&b);
        self.mode.specialize(&v)
    }
}

fn one_minus_q_pow(r: u32) -> QTRat {
    QTRat::from(&QTPoly::one() - &QTPoly::q_pow(r))
}

/// Applies `Delta_f` to `g` degree by degree.
pub fn delta(spec: &OpSpec, g: &SymF) -> Result<SymF> {
    let g = spec.mode.specialize_symf(g)?;
    let mut out = SymF::zero();
    for n in g.degrees() {
        let gn = g.homogeneous(n);
        let part = if n == 0 {
            gn.scale(&spec.mode.specialize(&spec.f.constant_term())?)
        } else {
            match spec.mode {
                Mode::Generic => delta_generic(spec, &gn, n)?,
                Mode::TOne => delta_t_one(spec, &gn, n)?,
                Mode::TInvQ => delta_t_inv_q(spec, &gn, n)?,
                Mode::TZero => delta_t_zero(spec, &gn, n)?,
            }
        };
        out = &out + &part;
    }
    Ok(out)
}

/// Coordinates of a degree-`n` function in the basis `{H_mu}`.
pub fn h_expansion(g: &SymF, n: usize) -> Result<BTreeMap<Partition, QTRat>> {
    let d = mac_degree(n)?;
    // H_mu[X(1-q)] is supported on la >= mu, and lex order refines dominance
    let b = g.pleth_scale(one_minus_q_pow).to_basis(Basis::S)?;
    let k = d.parts.len();
    let mut c: Vec<QTRat> = vec![QTRat::zero(); k];
    for l in 0..k {
        let mut acc = b.get(&d.parts[l]).cloned().unwrap_or_default();
        for (m, cm) in c.iter().enumerate().take(l) {
            let a = &d.plethq[m][l];
            if !cm.is_zero() && !a.is_zero() {
                acc = &acc - &cm.mul_poly(a);
            }
        }
        c[l] = acc.checked_div(&QTRat::from(d.plethq[l][l].clone()))?;
    }
    Ok(d.parts.iter().cloned().zip(c).filter(|(_, v)| !v.is_zero()).collect())
}

fn delta_generic(spec: &OpSpec, g: &SymF, n: usize) -> Result<SymF> {
    let d = mac_degree(n)?;
    let mut out = SymF::zero();
    for (mu, c) in h_expansion(g, n)? {
        let ev = spec.eigenvalue(&mu)?;
        if !ev.is_zero() {
            out = &out + &d.h(&mu).scale(&(&c * &ev));
        }
    }
    Ok(out)
}

/// Eigenbasis `b_mu[X/(1-q)]`: coordinates of `g[X(1-q)]` in `basis`.
fn delta_by_plethysm(spec: &OpSpec, g: &SymF, basis: Basis) -> Result<SymF> {
    let coeffs = g.pleth_scale(one_minus_q_pow).to_basis(basis)?;
    let mut scaled = BTreeMap::new();
    for (mu, c) in coeffs {
        let ev = spec.eigenvalue(&mu)?;
        scaled.insert(mu, &c * &ev);
    }
    let inv = |r: u32| one_minus_q_pow(r).recip().expect("1 - q^r is nonzero");
    Ok(SymF::from_basis(basis, &scaled)?.pleth_scale(inv))
}

fn delta_t_one(spec: &OpSpec, g: &SymF, n: usize) -> Result<SymF> {
    check(n, specialized_cap())?;
    delta_by_plethysm(spec, g, Basis::H)
}

fn delta_t_inv_q(spec: &OpSpec, g: &SymF, n: usize) -> Result<SymF> {
    check(n, specialized_cap())?;
    delta_by_plethysm(spec, g, Basis::S)
}

/// Coordinates of a degree-`n` function in the basis `{H_mu(z; q, 0)}`.
/// `H_mu(q, 0)` is supported on `la >= mu'` with `s_{mu'}`-coefficient
/// `q^{n(mu')}`, so the expansion is triangular.
pub fn h_t0_expansion(g: &SymF, n: usize) -> Result<BTreeMap<Partition, QTRat>> {
    check(n, specialized_cap())?;
    let parts = Partition::all(n);
    let mut rest = g.to_basis(Basis::S)?;
    let mut out = BTreeMap::new();
    for la in &parts {
        let c = rest.remove(la).unwrap_or_default();
        if c.is_zero() {
            continue;
        }
        let mu = la.conjugate();
        let row = t0_coefficients(&mu)?;
        let lead = QTRat::from(row[parts.iter().position(|p| p == la).unwrap()].clone());
        let coef = c.checked_div(&lead)?;
        for (nu, k) in parts.iter().zip(&row) {
            if nu > la && !k.is_zero() {
                let v = &rest.remove(nu).unwrap_or_default() - &coef.mul_poly(k);
                if !v.is_zero() {
                    rest.insert(nu.clone(), v);
                }
            }
        }
        out.insert(mu, coef);
    }
    Ok(out)
}

fn delta_t_zero(spec: &OpSpec, g: &SymF, n: usize) -> Result<SymF> {
    let parts = Partition::all(n);
    let mut total: BTreeMap<Partition, QTRat> = BTreeMap::new();
    for (mu, c) in h_t0_expansion(g, n)? {
        let ev = spec.eigenvalue(&mu)?;
        let w = &c * &ev;
        if w.is_zero() {
            continue;
        }
        for (la, k) in parts.iter().zip(t0_coefficients(&mu)?) {
            if !k.is_zero() {
                let e = total.entry(la.clone()).or_default();
                *e = &*e + &w.mul_poly(&k);
            }
        }
    }
    SymF::from_basis(Basis::S, &total)
}

/// `nabla^r g`, with `nabla = Delta_{e_n}` on degree `n`.
pub fn nabla(g: &SymF, r: u32) -> Result<SymF> {
    nabla_mode(g, r, Mode::Generic)
}

pub fn nabla_mode(g: &SymF, r: u32, mode: Mode) -> Result<SymF> {
    let mut cur = mode.specialize_symf(g)?;
    for _ in 0..r {
        let mut next = SymF::zero();
        for n in cur.degrees() {
            let gn = cur.homogeneous(n);
            let part = if n == 0 { gn } else { delta(&OpSpec::new(SymF::e(&[n as u32]), mode), &gn)? };
            next = &next + &part;
        }
        cur = next;
    }
    Ok(cur)
}
