use super::partition::Partition;
use super::symf::{format_terms, SymF};
use super::tables::Basis;
use crate::algebra::parse::{parse_expr, perr, ParseTarget};
use crate::algebra::QTRat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Symmetric function in two alphabets `y` and `z`, in power-sum
/// coordinates `p_a(y) p_b(z)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiSymF {
    terms: BTreeMap<(Partition, Partition), QTRat>,
}

impl BiSymF {
    pub fn zero() -> Self {
        BiSymF::default()
    }

    pub fn add_term(&mut self, y: Partition, z: Partition, c: QTRat) {
        if c.is_zero() {
            return;
        }
        let key = (y, z);
        let v = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    /// `f(y) g(z)`.
    pub fn tensor(f: &SymF, g: &SymF) -> BiSymF {
        let mut out = BiSymF::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &QTRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &BiSymF) -> BiSymF {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &BiSymF) -> BiSymF {
        self.add(&o.scale(&QTRat::from(-1)))
    }

    pub fn scale(&self, c: &QTRat) -> BiSymF {
        let mut out = BiSymF::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &BiSymF) -> BiSymF {
        let mut out = BiSymF::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                let mut a = a1.parts().to_vec();
                a.extend_from_slice(a2.parts());
                let mut b = b1.parts().to_vec();
                b.extend_from_slice(b2.parts());
                out.add_term(Partition::from_unsorted(a), Partition::from_unsorted(b), c1 * c2);
            }
        }
        out
    }

    /// Exchanges the two alphabets.
    pub fn swap(&self) -> BiSymF {
        let mut out = BiSymF::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c.clone());
        }
        out
    }

    /// Groups by the `y` part: `sum_a p_a(y) F_a(z)`.
    fn by_y(&self) -> BTreeMap<Partition, SymF> {
        let mut out: BTreeMap<Partition, SymF> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
        }
        out
    }

    /// `<F, g(y)>_y`, a symmetric function of `z`.
    pub fn pair_y(&self, g: &SymF) -> SymF {
        let mut out = SymF::zero();
        for (a, fz) in self.by_y() {
            let c = g.coeff(&a);
            if !c.is_zero() {
                out = &out + &fz.scale(&(&c * &QTRat::from_int_big(a.z())));
            }
        }
        out
    }

    /// Coordinates in bases `by` (for `y`) and `bz` (for `z`).
    pub fn to_bases(&self, by: Basis, bz: Basis) -> Result<BTreeMap<(Partition, Partition), QTRat>> {
        let mut tmp: BTreeMap<Partition, SymF> = BTreeMap::new();
        for (a, fz) in self.by_y() {
            for (b, c) in fz.to_basis(bz)? {
                tmp.entry(b).or_default().add_term(a.clone(), c);
            }
        }
        let mut out = BTreeMap::new();
        for (b, fy) in tmp {
            for (a, c) in fy.to_basis(by)? {
                out.insert((a, b.clone()), c);
            }
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRat) -> Result<QTRat>) -> Result<BiSymF> {
        let mut out = BiSymF::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn to_text(&self, by: Basis, bz: Basis) -> Result<String> {
        let coeffs = self.to_bases(by, bz)?;
        let syms = |a: &Partition, b: &Partition| {
            let mut v = Vec::new();
            if !a.is_empty() {
                v.push(format!("{}Y{}", by.symbol(), a));
            }
            if !b.is_empty() {
                v.push(format!("{}Z{}", bz.symbol(), b));
            }
            v
        };
        Ok(format_terms(coeffs.iter().map(|((a, b), c)| (syms(a, b), a.size() + b.size(), a, c))))
    }

    pub fn is_schur_positive(&self) -> Result<bool> {
        Ok(self.to_bases(Basis::S, Basis::S)?.values().all(|c| c.is_nonneg_polynomial()))
    }
}

impl fmt::Display for BiSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text(Basis::S, Basis::S) {
            Ok(s) => write!(f, "{s}"),
            Err(_) => write!(f, "{}", self.to_text(Basis::P, Basis::P).unwrap()),
        }
    }
}

impl ParseTarget for BiSymF {
    fn from_int(n: &BigInt) -> Self {
        BiSymF::tensor(&SymF::from_int(n), &SymF::one())
    }
    fn variable(name: &str, pos: usize) -> Result<Self> {
        Ok(BiSymF::tensor(&SymF::variable(name, pos)?, &SymF::one()))
    }
    fn indexed(name: &str, idx: &[u32], pos: usize) -> Result<Self> {
        let (b, side) = name.split_at(name.len().saturating_sub(1));
        let f = SymF::indexed(b, idx, pos)?;
        match side {
            "Y" => Ok(BiSymF::tensor(&f, &SymF::one())),
            "Z" => Ok(BiSymF::tensor(&SymF::one(), &f)),
            _ => Err(perr(pos, format!("expected alphabet suffix Y or Z in `{name}`"))),
        }
    }
    fn add(self, o: Self) -> Self {
        BiSymF::add(&self, &o)
    }
    fn sub(self, o: Self) -> Self {
        BiSymF::sub(&self, &o)
    }
    fn mul(self, o: Self) -> Self {
        BiSymF::mul(&self, &o)
    }
    fn div(self, o: Self, pos: usize) -> Result<Self> {
        let key = (Partition::empty(), Partition::empty());
        match (o.terms.len(), o.terms.get(&key)) {
            (1, Some(c)) => Ok(self.scale(&c.recip().map_err(|_| perr(pos, "division by zero"))?)),
            _ => Err(perr(pos, "division by a non-scalar")),
        }
    }
    fn pow(self, e: i64, pos: usize) -> Result<Self> {
        if e < 0 {
            return Err(perr(pos, "negative power"));
        }
        let mut acc = BiSymF::from_int(&BigInt::from(1));
        for _ in 0..e {
            acc = BiSymF::mul(&acc, &self);
        }
        Ok(acc)
    }
}

impl std::str::FromStr for BiSymF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}
