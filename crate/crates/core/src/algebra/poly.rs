use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial `q^q t^t`. Ordered graded-lexicographically with `q > t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Mono { q, t }
    }

    pub fn degree(self) -> u32 {
        self.q + self.t
    }

    pub fn divides(self, other: Mono) -> bool {
        self.q <= other.q && self.t <= other.t
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.q).cmp(&(other.degree(), other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Mono {
    type Output = Mono;
    fn mul(self, o: Mono) -> Mono {
        Mono::new(self.q + o.q, self.t + o.t)
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse polynomial in `q, t` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: BigRational, q: u32, t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(q, t), c);
        }
        QTPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    pub fn q_pow(e: u32) -> Self {
        Self::monomial(BigRational::one(), e, 0)
    }

    pub fn t_pow(e: u32) -> Self {
        Self::monomial(BigRational::one(), 0, e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, BigRational)>>(it: I) -> Self {
        let mut p = QTPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigRational {
        self.terms.get(&Mono::new(q, t)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(Mono, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|m| m.q).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|m| m.t).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map(|m| m.degree()).unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        if self.is_zero() {
            return Mono::ONE;
        }
        let q = self.terms.keys().map(|m| m.q).min().unwrap_or(0);
        let t = self.terms.keys().map(|m| m.t).min().unwrap_or(0);
        Mono::new(q, t)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|m| m.t == 0)
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|m| m.q == 0)
    }

    pub fn scale(&self, c: &BigRational) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_mono(&self, m: Mono) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(k, a)| (*k * m, a.clone())).collect() }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mono(&self, m: Mono) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| {
                    debug_assert!(m.divides(*k));
                    (Mono::new(k.q - m.q, k.t - m.t), a.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> QTPoly {
        let mut acc = QTPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &QTPoly) -> Option<QTPoly> {
        let (lm, lc) = d.leading()?;
        if d.is_monomial() {
            if !self.terms.keys().all(|m| lm.divides(*m)) {
                return None;
            }
            let inv = lc.recip();
            return Some(self.div_mono(lm).scale(&inv));
        }
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quo = QTPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let m = Mono::new(rm.q - lm.q, rm.t - lm.t);
            let c = rc / &lc;
            for (dm, dc) in d.terms.iter() {
                rem.add_term(*dm * m, -(dc * &c));
            }
            quo.add_term(m, c);
        }
        Some(quo)
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut qp: Vec<BigRational> = vec![BigRational::one()];
        let mut tp: Vec<BigRational> = vec![BigRational::one()];
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            while qp.len() <= m.q as usize {
                let next = qp.last().unwrap() * q;
                qp.push(next);
            }
            while tp.len() <= m.t as usize {
                let next = tp.last().unwrap() * t;
                tp.push(next);
            }
            acc += c * &qp[m.q as usize] * &tp[m.t as usize];
        }
        acc
    }

    /// Substitutes a constant for `t`.
    pub fn subst_t(&self, v: &BigRational) -> QTPoly {
        let mut out = QTPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Mono::new(m.q, 0), c * num_traits::pow(v.clone(), m.t as usize));
        }
        out
    }

    /// Substitutes a constant for `q`.
    pub fn subst_q(&self, v: &BigRational) -> QTPoly {
        self.swap_qt().subst_t(v).swap_qt()
    }

    pub fn swap_qt(&self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(m, c)| (Mono::new(m.t, m.q), c.clone())).collect() }
    }

    /// `q -> q^k, t -> t^k`.
    pub fn pow_subst(&self, k: u32) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(m, c)| (Mono::new(m.q * k, m.t * k), c.clone())).collect() }
    }

    /// Maps `q^a t^b` to `q^(a + s*b)` after `t -> q^s`; `s` may be negative.
    pub(crate) fn t_to_q_power(&self, s: i64) -> BTreeMap<i64, BigRational> {
        let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.q as i64 + s * m.t as i64;
            let entry = out.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        l
    }

    /// Gcd of the (integer) numerators after clearing denominators.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c.numer());
        }
        g
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> QTPoly {
        QTPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint(n: u32) -> QTPoly {
    QTPoly::from_terms((0..n).map(|i| (Mono::new(i, 0), BigRational::one())))
}

/// `[n]_t`.
pub fn tint(n: u32) -> QTPoly {
    qint(n).swap_qt()
}

/// Gaussian binomial coefficient in `q`.
pub fn qbinom(n: u32, k: u32) -> QTPoly {
    if k > n {
        return QTPoly::zero();
    }
    // Pascal recurrence: [n,k] = [n-1,k-1] + q^k [n-1,k].
    let mut row: Vec<QTPoly> = vec![QTPoly::one()];
    for m in 1..=n {
        let mut next = vec![QTPoly::zero(); m as usize + 1];
        for j in 0..=m as usize {
            let mut v = QTPoly::zero();
            if j >= 1 {
                v = &v + &row[j - 1];
            }
            if j < row.len() {
                v = &v + &row[j].mul_mono(Mono::new(j as u32, 0));
            }
            next[j] = v;
        }
        row = next;
    }
    row[k as usize].clone()
}

/// `(a; q)_r = (1-a)(1-aq)...(1-aq^(r-1))`.
pub fn pochhammer(a: &QTPoly, r: u32) -> QTPoly {
    let mut acc = QTPoly::one();
    for i in 0..r {
        let f = &QTPoly::one() - &a.mul_mono(Mono::new(i, 0));
        acc = &acc * &f;
    }
    acc
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, o: &QTPoly) -> QTPoly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in small.terms.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, o: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (m, c) in o.terms.iter() {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, o: &QTPoly) -> QTPoly {
        if self.is_zero() || o.is_zero() {
            return QTPoly::zero();
        }
        if self.len() == 1 {
            let (m, c) = self.leading().unwrap();
            return o.mul_mono(m).scale(c);
        }
        if o.len() == 1 {
            let (m, c) = o.leading().unwrap();
            return self.mul_mono(m).scale(c);
        }
        let mut acc: std::collections::HashMap<Mono, BigRational> = std::collections::HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = acc.entry(*m1 * *m2).or_insert_with(BigRational::zero);
                *e += c1 * c2;
            }
        }
        QTPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, o: $t) -> $t { $tr::$f(&self, &o) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $f(self, o: &'a $t) -> $t { $tr::$f(&self, o) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(QTPoly, Add add, Sub sub, Mul mul);

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if *m == Mono::ONE {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", fmt_mono(*m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_mono(*m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        rat(n)
    }

    #[test]
    fn grlex_order() {
        assert!(Mono::new(0, 2) > Mono::new(1, 0));
        assert!(Mono::new(2, 0) > Mono::new(1, 1));
        assert!(Mono::new(1, 1) > Mono::new(0, 2));
    }

    #[test]
    fn qbinom_small_values() {
        assert_eq!(qbinom(4, 2).to_string(), "q^4 + q^3 + 2*q^2 + q + 1");
        assert_eq!(qbinom(3, 0), QTPoly::one());
        assert!(qbinom(2, 3).is_zero());
        // At q = 1 the Gaussian binomial is the ordinary one.
        for n in 0..8u32 {
            for k in 0..=n {
                let v = qbinom(n, k).eval(&r(1), &r(1));
                let b = num_integer::binomial(n as i64, k as i64);
                assert_eq!(v, r(b));
            }
        }
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = &QTPoly::q() + &QTPoly::t();
        let b = &(&QTPoly::q() * &QTPoly::t()) - &QTPoly::one();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn display_forms() {
        let p = QTPoly::from_terms([(Mono::new(2, 1), r(3)), (Mono::new(1, 0), r(-1)), (Mono::ONE, r(1))]);
        assert_eq!(p.to_string(), "3*q^2*t - q + 1");
        assert_eq!(QTPoly::zero().to_string(), "0");
    }

    #[test]
    fn pochhammer_matches_product() {
        let p = pochhammer(&QTPoly::q(), 2);
        // (1-q)(1-q^2)
        let expect = &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::q_pow(2));
        assert_eq!(p, expect);
    }
}
