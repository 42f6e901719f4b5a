use super::partition::Partition;
use super::tables::{tables, Basis};
use crate::algebra::parse::{parse_expr, perr, ParseTarget};
use crate::algebra::poly::forward_owned;
use crate::algebra::{Coeff, QTPoly, QTRat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering};

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(12);

/// Largest degree for which basis conversions are attempted.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    let cap = degree_cap();
    if n > cap {
        Err(Error::DegreeCap { degree: n, cap })
    } else {
        Ok(())
    }
}

/// Symmetric function over Q(q, t), stored in power-sum coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymF {
    terms: BTreeMap<Partition, QTRat>,
}

impl SymF {
    pub fn zero() -> Self {
        SymF::default()
    }

    pub fn one() -> Self {
        SymF::scalar(QTRat::one())
    }

    pub fn scalar(c: QTRat) -> Self {
        let mut f = SymF::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn p(parts: &[u32]) -> Self {
        let mut f = SymF::zero();
        f.add_term(Partition::from_unsorted(parts.to_vec()), QTRat::one());
        f
    }

    pub fn add_term(&mut self, p: Partition, c: QTRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
        }
    }

    /// Basis element `b_mu`.
    pub fn basis(b: Basis, mu: &Partition) -> Result<SymF> {
        let n = mu.size();
        if b == Basis::P {
            return Ok(SymF::p(mu.parts()));
        }
        check_cap(n)?;
        let t = tables(n);
        let m = t.basis(b);
        let row = &m.to_p[t.idx(mu)];
        Ok(SymF {
            terms: t
                .parts
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(rho, c)| (rho.clone(), QTRat::from(c.clone())))
                .collect(),
        })
    }

    fn named(b: Basis, parts: &[u32]) -> SymF {
        SymF::basis(b, &Partition::from_unsorted(parts.to_vec())).expect("degree within cap")
    }

    pub fn s(parts: &[u32]) -> SymF {
        Self::named(Basis::S, parts)
    }
    pub fn h(parts: &[u32]) -> SymF {
        Self::named(Basis::H, parts)
    }
    pub fn e(parts: &[u32]) -> SymF {
        Self::named(Basis::E, parts)
    }
    pub fn m(parts: &[u32]) -> SymF {
        Self::named(Basis::M, parts)
    }
    pub fn f(parts: &[u32]) -> SymF {
        Self::named(Basis::F, parts)
    }

    pub fn from_basis(b: Basis, coeffs: &BTreeMap<Partition, QTRat>) -> Result<SymF> {
        let mut out = SymF::zero();
        for (mu, c) in coeffs {
            out = &out + &SymF::basis(b, mu)?.scale(c);
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rho: &Partition) -> QTRat {
        self.terms.get(rho).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|p| p.size()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().next_back().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn homogeneous(&self, n: usize) -> SymF {
        SymF { terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &QTRat) -> SymF {
        if c.is_zero() {
            return SymF::zero();
        }
        SymF { terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, c: &BigRational) -> SymF {
        if c.is_zero() {
            return SymF::zero();
        }
        SymF { terms: self.terms.iter().map(|(p, a)| (p.clone(), a.scale(c))).collect() }
    }

    /// Coordinates in basis `b`.
    pub fn to_basis(&self, b: Basis) -> Result<BTreeMap<Partition, QTRat>> {
        if b == Basis::P {
            return Ok(self.terms.clone());
        }
        let mut out = BTreeMap::new();
        for n in self.degrees() {
            check_cap(n)?;
            let t = tables(n);
            let m = t.basis(b);
            let mut acc: Vec<QTRat> = vec![QTRat::zero(); t.parts.len()];
            for (rho, c) in self.terms.iter().filter(|(p, _)| p.size() == n) {
                let r = t.idx(rho);
                for (mu, a) in acc.iter_mut().enumerate() {
                    let w = &m.from_p[r][mu];
                    if !w.is_zero() {
                        *a = &*a + &c.scale(w);
                    }
                }
            }
            for (mu, a) in acc.into_iter().enumerate() {
                if !a.is_zero() {
                    out.insert(t.parts[mu].clone(), a);
                }
            }
        }
        Ok(out)
    }

    pub fn coeff_in(&self, b: Basis, mu: &Partition) -> Result<QTRat> {
        Ok(self.homogeneous(mu.size()).to_basis(b)?.remove(mu).unwrap_or_default())
    }

    /// Hall inner product, `<p_la, p_mu> = z_la delta`.
    pub fn hall(&self, o: &SymF) -> QTRat {
        let mut acc = QTRat::zero();
        for (p, c) in &self.terms {
            if let Some(d) = o.terms.get(p) {
                acc = &acc + &(c * d).scale(&BigRational::from_integer(p.z()));
            }
        }
        acc
    }

    /// `p_r -> (-1)^(r-1) p_r`.
    pub fn omega(&self) -> SymF {
        SymF {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), if (p.size() - p.len()) % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Plethystic scaling `p_r -> m(r) p_r`.
    pub fn pleth_scale(&self, m: impl Fn(u32) -> QTRat) -> SymF {
        let mut cache: HashMap<u32, QTRat> = HashMap::new();
        let mut out = SymF::zero();
        for (p, c) in &self.terms {
            let mut f = c.clone();
            for &r in p.parts() {
                let v = cache.entry(r).or_insert_with(|| m(r));
                f = &f * v;
            }
            out.add_term(p.clone(), f);
        }
        out
    }

    /// `f[X * A]` for a scalar alphabet `A`: `p_r -> A(q^r, t^r) p_r`.
    pub fn pleth_alphabet(&self, a: &QTRat) -> SymF {
        self.pleth_scale(|r| a.pow_subst(r))
    }

    /// Evaluation `f[A]` at a scalar alphabet: `p_r -> A(q^r, t^r)`.
    pub fn eval_alphabet(&self, a: &QTRat) -> QTRat {
        let mut cache: HashMap<u32, QTRat> = HashMap::new();
        let mut acc = QTRat::zero();
        for (p, c) in &self.terms {
            let mut f = c.clone();
            for &r in p.parts() {
                let v = cache.entry(r).or_insert_with(|| a.pow_subst(r));
                f = &f * v;
            }
            acc = &acc + &f;
        }
        acc
    }

    /// Principal specialization at `1, q, ..., q^(k-1)`.
    pub fn principal(&self, k: u32) -> QTRat {
        self.eval_alphabet(&QTRat::from(crate::algebra::qint(k)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRat) -> Result<QTRat>) -> Result<SymF> {
        let mut out = SymF::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn swap_qt(&self) -> SymF {
        SymF { terms: self.terms.iter().map(|(p, c)| (p.clone(), c.swap_qt())).collect() }
    }

    pub fn at_t_one(&self) -> Result<SymF> {
        self.map_coeffs(|c| c.at_t_one())
    }

    pub fn at_t_zero(&self) -> Result<SymF> {
        self.map_coeffs(|c| c.at_t_zero())
    }

    pub fn at_t_inv_q(&self) -> Result<SymF> {
        self.map_coeffs(|c| c.at_t_inv_q())
    }

    pub fn constant_term(&self) -> QTRat {
        self.coeff(&Partition::empty())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|p| p.is_empty())
    }

    /// Text form in the given basis.
    pub fn to_text(&self, b: Basis) -> Result<String> {
        let coeffs = self.to_basis(b)?;
        Ok(format_terms(coeffs.iter().map(|(p, c)| (vec![format!("{}{}", b.symbol(), p)], p.size(), p, c))))
    }

    /// True when every Schur coefficient is a polynomial with nonnegative
    /// integer coefficients.
    pub fn is_schur_positive(&self) -> Result<bool> {
        Ok(self.to_basis(Basis::S)?.values().all(|c| c.is_nonneg_polynomial()))
    }
}

/// Formats `coeff*sym` terms sorted by degree, then reverse lexicographic.
pub(crate) fn format_terms<'a, I>(it: I) -> String
where
    I: Iterator<Item = (Vec<String>, usize, &'a Partition, &'a QTRat)>,
{
    let mut items: Vec<_> = it.collect();
    items.sort_by(|a, b| a.1.cmp(&b.1).then(a.2.cmp(b.2)));
    if items.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (syms, _, _, c)) in items.into_iter().enumerate() {
        let (neg, body) = coeff_text(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if let Some(b) = body {
            factors.push(b);
        }
        factors.extend(syms.into_iter().filter(|s| !s.is_empty()));
        if factors.is_empty() {
            factors.push("1".into());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Sign and body of a coefficient; `None` body for unit coefficients.
fn coeff_text(c: &QTRat) -> (bool, Option<String>) {
    if let Some(p) = c.as_poly() {
        if p.len() == 1 {
            let (m, a) = p.leading().unwrap();
            let neg = a.is_negative();
            let abs = QTPoly::monomial(a.abs(), m.q, m.t);
            return (neg, if abs.is_one() { None } else { Some(abs.to_string()) });
        }
        return (false, Some(format!("({p})")));
    }
    let s = c.to_string();
    (false, Some(if s.starts_with('(') { s } else { format!("({s})") }))
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text(Basis::S) {
            Ok(s) => write!(f, "{s}"),
            Err(_) => write!(f, "{}", self.to_text(Basis::P).unwrap()),
        }
    }
}

impl<'a> Add<&'a SymF> for &'a SymF {
    type Output = SymF;
    fn add(self, o: &SymF) -> SymF {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymF> for &'a SymF {
    type Output = SymF;
    fn sub(self, o: &SymF) -> SymF {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a SymF> for &'a SymF {
    type Output = SymF;
    fn mul(self, o: &SymF) -> SymF {
        let mut out = SymF::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &o.terms {
                let mut parts = p1.parts().to_vec();
                parts.extend_from_slice(p2.parts());
                out.add_term(Partition::from_unsorted(parts), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SymF {
    type Output = SymF;
    fn neg(self) -> SymF {
        SymF { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Neg for SymF {
    type Output = SymF;
    fn neg(self) -> SymF {
        -&self
    }
}

forward_owned!(SymF, Add add, Sub sub, Mul mul);

impl std::iter::Sum for SymF {
    fn sum<I: Iterator<Item = SymF>>(iter: I) -> SymF {
        iter.fold(SymF::zero(), |a, b| &a + &b)
    }
}

impl Coeff for SymF {
    fn zero() -> Self {
        SymF::zero()
    }
    fn is_zero(&self) -> bool {
        SymF::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl ParseTarget for SymF {
    fn from_int(n: &BigInt) -> Self {
        SymF::scalar(QTRat::from_int_big(n.clone()))
    }
    fn variable(name: &str, pos: usize) -> Result<Self> {
        Ok(SymF::scalar(QTRat::variable(name, pos)?))
    }
    fn indexed(name: &str, idx: &[u32], pos: usize) -> Result<Self> {
        let b = Basis::from_symbol(name).ok_or_else(|| perr(pos, format!("unknown basis `{name}`")))?;
        let mu = Partition::new(idx.to_vec()).map_err(|e| perr(pos, e.to_string()))?;
        SymF::basis(b, &mu).map_err(|e| perr(pos, e.to_string()))
    }
    fn add(self, o: Self) -> Self {
        &self + &o
    }
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
    fn div(self, o: Self, pos: usize) -> Result<Self> {
        match (o.terms.len(), o.terms.get(&Partition::empty())) {
            (1, Some(c)) => Ok(self.scale(&c.recip().map_err(|_| perr(pos, "division by zero"))?)),
            _ => Err(perr(pos, "division by a non-scalar symmetric function")),
        }
    }
    fn pow(self, e: i64, pos: usize) -> Result<Self> {
        if e < 0 {
            if let (1, Some(c)) = (self.terms.len(), self.terms.get(&Partition::empty())) {
                return Ok(SymF::scalar(ParseTarget::pow(c.clone(), e, pos)?));
            }
            return Err(perr(pos, "negative power of a symmetric function"));
        }
        let mut acc = SymF::one();
        for _ in 0..e {
            acc = &acc * &self;
        }
        Ok(acc)
    }
}

impl std::str::FromStr for SymF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

/// `s_{k^r}(1, q, ..., q^(m-1))` by the hook-content formula.
pub fn rect_principal(k: u32, r: u32, m: u32) -> QTRat {
    let lam = Partition::rect(k, r);
    let mut num = QTPoly::one();
    let mut den = QTPoly::one();
    let conj = lam.conjugate();
    for (i, j) in lam.cells() {
        let content = i as i64 - j as i64;
        let hook = (lam.part(j as usize) - i - 1) + (conj.part(i as usize) - j - 1) + 1;
        let e = m as i64 + content;
        if e <= 0 {
            return QTRat::zero();
        }
        num = &num * &(&QTPoly::one() - &QTPoly::q_pow(e as u32));
        den = &den * &(&QTPoly::one() - &QTPoly::q_pow(hook));
    }
    let base = num.div_exact(&den).expect("hook-content quotient is a polynomial");
    QTRat::from(base.mul_mono(crate::algebra::Mono::new(lam.n() as u32, 0)))
}
