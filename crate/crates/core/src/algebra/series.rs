use super::rat::QTRat;
use std::collections::BTreeMap;

/// Minimal ring interface for series coefficients.
pub trait Coeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Coeff for QTRat {
    fn zero() -> Self {
        QTRat::zero()
    }
    fn is_zero(&self) -> bool {
        QTRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Laurent series in an auxiliary variable `u`, truncated to the window
/// `[lo, hi]` of exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxSeries<T: Coeff> {
    lo: i32,
    hi: i32,
    coeffs: BTreeMap<i32, T>,
}

impl<T: Coeff> AuxSeries<T> {
    pub fn new(lo: i32, hi: i32) -> Self {
        assert!(lo <= hi, "empty window");
        AuxSeries { lo, hi, coeffs: BTreeMap::new() }
    }

    pub fn monomial(lo: i32, hi: i32, exp: i32, c: T) -> Self {
        let mut s = Self::new(lo, hi);
        s.set(exp, c);
        s
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    pub fn set(&mut self, exp: i32, c: T) {
        if exp < self.lo || exp > self.hi || c.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    pub fn coeff(&self, exp: i32) -> T {
        self.coeffs.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &T)> {
        self.coeffs.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Self::new(self.lo.min(o.lo), self.hi.max(o.hi));
        for (e, c) in self.coeffs.iter().chain(o.coeffs.iter()) {
            let v = out.coeff(*e).add(c);
            out.set(*e, v);
        }
        out
    }

    /// Product truncated to the window `[lo, hi]`.
    pub fn mul_window(&self, o: &Self, lo: i32, hi: i32) -> Self {
        let mut out = Self::new(lo, hi);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                let e = e1 + e2;
                if e < lo || e > hi {
                    continue;
                }
                let v = out.coeff(e).add(&c1.mul(c2));
                out.set(e, v);
            }
        }
        out
    }

    /// Product on the natural window of the two factors.
    pub fn mul(&self, o: &Self) -> Self {
        self.mul_window(o, self.lo + o.lo, self.hi + o.hi)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> AuxSeries<U> {
        let mut out = AuxSeries::new(self.lo, self.hi);
        for (e, c) in &self.coeffs {
            out.set(*e, f(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_truncation() {
        // (1 + u)(1 - u + u^2 - u^3) = 1 - u^4, truncated at u^3 gives 1
        let mut a = AuxSeries::<QTRat>::new(0, 1);
        a.set(0, QTRat::one());
        a.set(1, QTRat::one());
        let mut b = AuxSeries::<QTRat>::new(0, 3);
        for i in 0..4 {
            b.set(i, QTRat::from(if i % 2 == 0 { 1 } else { -1 }));
        }
        let p = a.mul_window(&b, 0, 3);
        assert_eq!(p.coeff(0), QTRat::one());
        for i in 1..4 {
            assert!(p.coeff(i).is_zero());
        }
        assert_eq!(a.mul(&b).coeff(4), QTRat::from(-1));
    }

    #[test]
    fn laurent_exponents() {
        let a = AuxSeries::monomial(-2, 0, -2, QTRat::q());
        let b = AuxSeries::monomial(0, 3, 3, QTRat::t());
        let p = a.mul(&b);
        assert_eq!(p.coeff(1), &QTRat::q() * &QTRat::t());
    }
}
