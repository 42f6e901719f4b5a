//! Polynomial gcd in Q[q, t], via subresultants in Q[q][t].

use super::poly::{Mono, QTPoly};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense univariate polynomial over Q, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Default)]
pub(crate) struct UPoly(pub Vec<BigRational>);

impl UPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn one() -> Self {
        UPoly(vec![BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &BigRational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] -= c;
        }
        UPoly(v).trim()
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly(v).trim()
    }

    pub fn scale(&self, c: &BigRational) -> UPoly {
        UPoly(self.0.iter().map(|a| a * c).collect()).trim()
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (UPoly::default(), self.clone());
        }
        let mut q = vec![BigRational::zero(); self.deg() - dd + 1];
        let inv = d.lc().recip();
        for i in (dd..r.len()).rev() {
            let c = &r[i] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[i - dd + j] -= &c * dc;
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (UPoly(q).trim(), UPoly(r).trim())
    }

    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact univariate division");
        q
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: usize) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Polynomial in `t` with coefficients in Q[q], index = power of t.
type RPoly = Vec<UPoly>;

fn to_rpoly(p: &QTPoly) -> RPoly {
    let mut out: RPoly = vec![UPoly::default(); p.deg_t() as usize + 1];
    for (m, c) in p.terms() {
        let slot = &mut out[m.t as usize].0;
        if slot.len() <= m.q as usize {
            slot.resize(m.q as usize + 1, BigRational::zero());
        }
        slot[m.q as usize] = c.clone();
    }
    if p.is_zero() {
        out.clear();
    }
    out
}

fn from_rpoly(r: &RPoly) -> QTPoly {
    QTPoly::from_terms(
        r.iter()
            .enumerate()
            .flat_map(|(t, u)| u.0.iter().enumerate().map(move |(q, c)| (Mono::new(q as u32, t as u32), c.clone()))),
    )
}

fn to_upoly_q(p: &QTPoly) -> UPoly {
    to_rpoly(p).into_iter().next().unwrap_or_default()
}

fn rtrim(mut r: RPoly) -> RPoly {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn rdeg(r: &RPoly) -> usize {
    r.len().saturating_sub(1)
}

fn rcontent(r: &RPoly) -> UPoly {
    let mut g = UPoly::default();
    for c in r {
        g = g.gcd(c);
        if g.deg() == 0 && !g.is_zero() {
            break;
        }
    }
    g
}

fn rscale(r: &RPoly, c: &UPoly) -> RPoly {
    rtrim(r.iter().map(|a| a.mul(c)).collect())
}

fn rdiv_scalar(r: &RPoly, c: &UPoly) -> RPoly {
    rtrim(r.iter().map(|a| a.div_exact(c)).collect())
}

fn rsub(a: &RPoly, b: &RPoly) -> RPoly {
    let n = a.len().max(b.len());
    let z = UPoly::default();
    rtrim((0..n).map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z))).collect())
}

fn rshift_scale(b: &RPoly, shift: usize, c: &UPoly) -> RPoly {
    let mut out = vec![UPoly::default(); shift];
    out.extend(b.iter().map(|a| a.mul(c)));
    rtrim(out)
}

/// Pseudo-remainder of `a` by `b` in D[t].
fn prem(a: &RPoly, b: &RPoly) -> RPoly {
    let lb = b.last().unwrap().clone();
    let db = rdeg(b);
    let mut e = rdeg(a) + 1 - db;
    let mut r = a.clone();
    while !r.is_empty() && rdeg(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = rdeg(&r) - db;
        r = rsub(&rscale(&r, &lb), &rshift_scale(b, shift, &lr));
        e -= 1;
    }
    rscale(&r, &lb.pow(e))
}

fn subresultant_gcd(a: &RPoly, b: &RPoly) -> RPoly {
    let (mut a, mut b) = if rdeg(a) >= rdeg(b) { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    let ca = rcontent(&a);
    let cb = rcontent(&b);
    let d = ca.gcd(&cb);
    a = rdiv_scalar(&a, &ca);
    b = rdiv_scalar(&b, &cb);
    let mut g = UPoly::one();
    let mut h = UPoly::one();
    loop {
        let delta = rdeg(&a) - rdeg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if rdeg(&r) == 0 {
            b = vec![UPoly::one()];
            break;
        }
        a = b;
        let denom = g.mul(&h.pow(delta));
        b = rdiv_scalar(&r, &denom);
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta-1)
        h = if delta == 0 { h } else { g.pow(delta).div_exact(&h.pow(delta - 1)) };
    }
    let cb = rcontent(&b);
    rscale(&rdiv_scalar(&b, &cb), &d)
}

/// Scales so the grlex-leading coefficient is one.
pub fn normalize_lc(p: &QTPoly) -> QTPoly {
    match p.leading() {
        Some((_, c)) if !num_traits::One::is_one(c) => p.scale(&c.recip()),
        _ => p.clone(),
    }
}

/// Greatest common divisor, normalized to leading coefficient one.
pub fn gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return normalize_lc(b);
    }
    if b.is_zero() {
        return normalize_lc(a);
    }
    let ma = a.mono_content();
    let mb = b.mono_content();
    let common = Mono::new(ma.q.min(mb.q), ma.t.min(mb.t));
    let common_poly = QTPoly::monomial(BigRational::one(), common.q, common.t);
    if a.is_monomial() || b.is_monomial() {
        return common_poly;
    }
    let a = a.div_mono(ma);
    let b = b.div_mono(mb);
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return common_poly;
    }
    let g = if a.is_t_free() && b.is_t_free() {
        from_rpoly(&vec![to_upoly_q(&a).gcd(&to_upoly_q(&b))])
    } else if a.is_q_free() && b.is_q_free() {
        let g = to_upoly_q(&a.swap_qt()).gcd(&to_upoly_q(&b.swap_qt()));
        from_rpoly(&vec![g]).swap_qt()
    } else {
        from_rpoly(&subresultant_gcd(&to_rpoly(&a), &to_rpoly(&b)))
    };
    normalize_lc(&(&g * &common_poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat;

    fn q() -> QTPoly {
        QTPoly::q()
    }
    fn t() -> QTPoly {
        QTPoly::t()
    }
    fn one() -> QTPoly {
        QTPoly::one()
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f1 = &q() + &t();
        let f2 = &(&q() * &t()) - &one();
        let f3 = &(&q() * &q()) + &(&t() * &rat_poly(3));
        let a = &(&f1 * &f2) * &f3;
        let b = &(&f1 * &f3) * &(&t() - &rat_poly(2));
        let g = gcd(&a, &b);
        assert_eq!(g, normalize_lc(&(&f1 * &f3)));
    }

    fn rat_poly(n: i64) -> QTPoly {
        QTPoly::constant(rat(n))
    }

    #[test]
    fn coprime_gives_one() {
        let a = &one() - &q();
        let b = &one() - &t();
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn monomial_content() {
        let a = &q().pow(3) * &(&one() - &t());
        let b = &q().pow(2) * &t();
        assert_eq!(gcd(&a, &b), q().pow(2));
    }

    #[test]
    fn univariate_case() {
        let a = &(&one() - &q().pow(4)) * &rat_poly(6);
        let b = &one() - &q().pow(6);
        // gcd(1-q^4, 1-q^6) = 1-q^2 up to normalization
        assert_eq!(gcd(&a, &b), normalize_lc(&(&one() - &q().pow(2))));
    }
}
