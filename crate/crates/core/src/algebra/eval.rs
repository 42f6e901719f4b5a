//! Equality of rational functions by evaluation on a grid whose size is
//! bounded by the degrees of the cross-multiplied numerator.

use super::poly::rat;
use super::rat::QTRat;
use serde::Serialize;

/// Outcome of an evaluation-mode comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvalProof {
    pub equal: bool,
    /// Degree bounds in `q` and `t` of the polynomial shown to vanish.
    pub deg_q: u32,
    pub deg_t: u32,
}

impl EvalProof {
    pub fn trivial() -> Self {
        EvalProof { equal: true, deg_q: 0, deg_t: 0 }
    }

    pub fn combine(self, o: EvalProof) -> EvalProof {
        EvalProof { equal: self.equal && o.equal, deg_q: self.deg_q.max(o.deg_q), deg_t: self.deg_t.max(o.deg_t) }
    }
}

/// Decides `a == b` without subtracting the two symbolically. The numerator
/// `N = a.num * b.den - b.num * a.den` has degree at most `dq` in `q` and `dt`
/// in `t`; a polynomial with those bounds vanishing on a
/// `(dq + 1) x (dt + 1)` grid is zero.
pub fn eval_equal(a: &QTRat, b: &QTRat) -> EvalProof {
    let (an, ad) = (a.numer(), a.denom());
    let (bn, bd) = (b.numer(), b.denom());
    let dq = (an.deg_q() + bd.deg_q()).max(bn.deg_q() + ad.deg_q());
    let dt = (an.deg_t() + bd.deg_t()).max(bn.deg_t() + ad.deg_t());
    let mut equal = true;
    'grid: for i in 0..=dq {
        let qv = rat(i as i64 + 1);
        for j in 0..=dt {
            let tv = rat(-(j as i64) - 2);
            let lhs = an.eval(&qv, &tv) * bd.eval(&qv, &tv);
            let rhs = bn.eval(&qv, &tv) * ad.eval(&qv, &tv);
            if lhs != rhs {
                equal = false;
                break 'grid;
            }
        }
    }
    EvalProof { equal, deg_q: dq, deg_t: dt }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_symbolic_equality() {
        let q = QTRat::q();
        let t = QTRat::t();
        let one = QTRat::one();
        let a = &(&one - &(&q * &t)) / &(&one - &q);
        let b = &a + &(&t * &QTRat::q_pow(3));
        assert!(eval_equal(&a, &a.clone()).equal);
        assert!(!eval_equal(&a, &b).equal);
        let p = eval_equal(&a, &a);
        assert_eq!((p.deg_q, p.deg_t), (2, 1));
    }
}
