use super::gcd::{gcd, normalize_lc};
use super::poly::{forward_owned, Mono, QTPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function in `q, t`, kept reduced with a denominator whose
/// grlex-leading coefficient is one. Structural equality is mathematical
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTRat {
    num: QTPoly,
    den: QTPoly,
}

impl Default for QTRat {
    fn default() -> Self {
        QTRat::zero()
    }
}

impl From<QTPoly> for QTRat {
    fn from(p: QTPoly) -> Self {
        QTRat { num: p, den: QTPoly::one() }
    }
}

impl From<i64> for QTRat {
    fn from(n: i64) -> Self {
        QTRat::from(QTPoly::from_int(n))
    }
}

impl From<BigRational> for QTRat {
    fn from(c: BigRational) -> Self {
        QTRat::from(QTPoly::constant(c))
    }
}

impl QTRat {
    pub fn zero() -> Self {
        QTRat { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> Self {
        QTRat::from(1)
    }

    pub fn q() -> Self {
        QTRat::from(QTPoly::q())
    }

    pub fn t() -> Self {
        QTRat::from(QTPoly::t())
    }

    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QTPoly, den: QTPoly) -> Self {
        if num.is_zero() {
            return QTRat::zero();
        }
        if let Some(c) = den.as_constant() {
            return QTRat { num: num.scale(&c.recip()), den: QTPoly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        Self::fix_lc(num, den)
    }

    fn fix_lc(num: QTPoly, den: QTPoly) -> Self {
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if lc.is_one() {
            QTRat { num, den }
        } else {
            let inv = lc.recip();
            QTRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &QTPoly {
        &self.num
    }

    pub fn denom(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QTPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            QTRat::from(QTPoly::q_pow(e as u32))
        } else {
            QTRat { num: QTPoly::one(), den: QTPoly::q_pow((-e) as u32) }
        }
    }

    pub fn t_pow(e: i64) -> Self {
        QTRat::q_pow(e).swap_qt()
    }

    pub fn scale(&self, c: &BigRational) -> QTRat {
        if c.is_zero() {
            return QTRat::zero();
        }
        QTRat { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &QTPoly) -> QTRat {
        if p.is_zero() || self.is_zero() {
            return QTRat::zero();
        }
        if self.den.is_one() {
            return QTRat::from(&self.num * p);
        }
        let g = gcd(p, &self.den);
        let p2 = p.div_exact(&g).unwrap();
        let d2 = self.den.div_exact(&g).unwrap();
        Self::fix_lc(&self.num * &p2, d2)
    }

    pub fn recip(&self) -> Result<QTRat> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::fix_lc(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &QTRat) -> Result<QTRat> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<QTRat> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(QTRat { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn swap_qt(&self) -> QTRat {
        Self::fix_lc(self.num.swap_qt(), self.den.swap_qt())
    }

    /// `q -> q^k, t -> t^k`.
    pub fn pow_subst(&self, k: u32) -> QTRat {
        Self::fix_lc(self.num.pow_subst(k), self.den.pow_subst(k))
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(q, t) / d)
    }

    pub fn subst_t(&self, v: &BigRational) -> Result<QTRat> {
        QTRat::new(self.num.subst_t(v), self.den.subst_t(v))
    }

    pub fn subst_q(&self, v: &BigRational) -> Result<QTRat> {
        QTRat::new(self.num.subst_q(v), self.den.subst_q(v))
    }

    pub fn at_t_one(&self) -> Result<QTRat> {
        self.subst_t(&BigRational::one())
    }

    pub fn at_t_zero(&self) -> Result<QTRat> {
        self.subst_t(&BigRational::zero())
    }

    /// Specialization `t -> 1/q`.
    pub fn at_t_inv_q(&self) -> Result<QTRat> {
        let n = self.num.t_to_q_power(-1);
        let d = self.den.t_to_q_power(-1);
        if d.is_empty() {
            return Err(Error::ZeroDenominator);
        }
        let lo = n.keys().chain(d.keys()).copied().min().unwrap_or(0).min(0);
        let lift = |m: &std::collections::BTreeMap<i64, BigRational>| {
            QTPoly::from_terms(m.iter().map(|(e, c)| (Mono::new((e - lo) as u32, 0), c.clone())))
        };
        QTRat::new(lift(&n), lift(&d))
    }

    /// Largest exponents appearing in numerator and denominator.
    pub fn degree_profile(&self) -> (u32, u32) {
        (self.num.deg_q().max(self.den.deg_q()), self.num.deg_t().max(self.den.deg_t()))
    }

    /// Numerator and denominator scaled to coprime integer coefficients
    /// with positive leading denominator coefficient.
    pub fn integral_parts(&self) -> (QTPoly, QTPoly) {
        let l = num_integer::Integer::lcm(&self.num.denominator_lcm(), &self.den.denominator_lcm());
        let lr = BigRational::from_integer(l);
        let n = self.num.scale(&lr);
        let d = self.den.scale(&lr);
        let g = num_integer::Integer::gcd(&n.integer_content(), &d.integer_content());
        if g.is_zero() || g.is_one() {
            return (n, d);
        }
        let gr = BigRational::from_integer(g).recip();
        (n.scale(&gr), d.scale(&gr))
    }

    /// True for a polynomial with nonnegative integer coefficients.
    pub fn is_nonneg_polynomial(&self) -> bool {
        self.den.is_one() && self.num.is_nonneg_integral()
    }

    pub fn from_int_big(n: BigInt) -> QTRat {
        QTRat::from(BigRational::from_integer(n))
    }
}

impl<'a> Add<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn add(self, o: &QTRat) -> QTRat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return QTRat::from(&self.num + &o.num);
        }
        if o.den.is_one() {
            // gcd(a + c b, b) = gcd(a, b) = 1
            return QTRat { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        if self.den.is_one() {
            return QTRat { num: &o.num + &(&self.num * &o.den), den: o.den.clone() };
        }
        if self.den == o.den {
            return QTRat::reduce(&self.num + &o.num, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            return QTRat::fix_lc(num, &self.den * &o.den);
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        if num.is_zero() {
            return QTRat::zero();
        }
        let g2 = gcd(&num, &g);
        let num = num.div_exact(&g2).unwrap();
        let den = &(&d1 * &d2) * &g.div_exact(&g2).unwrap();
        QTRat::fix_lc(num, den)
    }
}

impl<'a> Sub<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn sub(self, o: &QTRat) -> QTRat {
        self + &(-o)
    }
}

impl<'a> Mul<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn mul(self, o: &QTRat) -> QTRat {
        if self.is_zero() || o.is_zero() {
            return QTRat::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QTRat::from(&self.num * &o.num);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        QTRat::fix_lc(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    /// Panics on division by zero; use [`QTRat::checked_div`] otherwise.
    fn div(self, o: &QTRat) -> QTRat {
        self.checked_div(o).expect("division by zero rational function")
    }
}

impl Neg for &QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        QTRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        -&self
    }
}

forward_owned!(QTRat, Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for QTRat {
    fn sum<I: Iterator<Item = QTRat>>(iter: I) -> QTRat {
        iter.fold(QTRat::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integral_parts();
        if d.is_one() {
            return write!(f, "{n}");
        }
        write!(f, "({n})/({d})")
    }
}

/// Reduction helper exposed for tests.
pub fn reduce_pair(num: &QTPoly, den: &QTPoly) -> (QTPoly, QTPoly) {
    let g = gcd(num, den);
    (normalize_lc(&num.div_exact(&g).unwrap()), den.div_exact(&g).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_identifies_equal_fractions() {
        let q = QTRat::q();
        let one = QTRat::one();
        // 1/(1-q) - q/(1-q) == 1
        let d = &one - &q;
        let a = &one / &d;
        let b = &q / &d;
        assert_eq!(&a - &b, one);
        // (q^2-1)/(q-1) == q+1
        let num = &(&q * &q) - &one;
        assert_eq!(&num / &(&q - &one), &q + &one);
    }

    #[test]
    fn display_uses_integer_coefficients() {
        let half = QTRat::from(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "(1)/(2)");
        let x = &QTRat::one() / &(&QTRat::one() - &QTRat::q());
        assert_eq!(x.to_string(), "(-1)/(q - 1)");
        assert_eq!(QTRat::q_pow(-2).to_string(), "(1)/(q^2)");
    }

    #[test]
    fn specializations() {
        let q = QTRat::q();
        let t = QTRat::t();
        let one = QTRat::one();
        let x = &(&q + &t) / &(&one - &(&q * &t));
        assert!(x.at_t_inv_q().is_err());
        assert_eq!(x.at_t_zero().unwrap(), q.clone());
        let y = &q * &t;
        assert_eq!(y.at_t_inv_q().unwrap(), one.clone());
        let z = &t / &(&q * &q);
        assert_eq!(z.at_t_inv_q().unwrap(), QTRat::q_pow(-3));
    }

    #[test]
    fn negative_powers() {
        let q = QTRat::q();
        assert_eq!(q.pow(-3).unwrap(), QTRat::q_pow(-3));
        assert_eq!(&QTRat::q_pow(-3) * &QTRat::q_pow(5), QTRat::q_pow(2));
    }
}
