//! Minor monomials indexed by polyominoes, as a basis of the invariant ring
//! of `SL_2` acting on `2 x n` matrices.

#[cfg(test)]
mod tests;

use crate::algebra::int_rank;
use crate::algebra::parse::perr;
use crate::error::{Error, Result};
use crate::polyomino::{polyominoes, Polyomino};
use crate::symfunc::{rect_principal, Partition, SymF};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

pub const MAX_N: usize = 6;
pub const MAX_D: usize = 3;

/// Multiset of minors `X_{ij}`, `i < j`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinorMonomial {
    pairs: Vec<(u32, u32)>,
}

impl MinorMonomial {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(p) = pairs.iter().find(|p| p.0 == 0 || p.0 >= p.1) {
            return Err(Error::InvalidObject(format!("minor index pair {p:?} needs 1 <= i < j")));
        }
        pairs.sort();
        Ok(MinorMonomial { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    /// Every two factors are comparable in the componentwise weak order.
    pub fn is_standard(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// `X_pi = prod_i X_{(b_{i+1}+1, a_i+1)}` with `a`, `b` the upper and
    /// lower height sequences.
    pub fn of_polyomino(p: &Polyomino) -> MinorMonomial {
        let a = p.upper().heights();
        let b = p.lower().heights();
        let pairs = (0..a.len() - 1).map(|i| (b[i + 1] + 1, a[i] + 1)).collect();
        MinorMonomial::new(pairs).expect("strictness gives i < j")
    }
}

impl fmt::Display for MinorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.pairs.len() {
            let p = self.pairs[i];
            let mut e = 1;
            while i + e < self.pairs.len() && self.pairs[i + e] == p {
                e += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            write!(f, "X[{},{}]", p.0, p.1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
            i += e;
        }
        Ok(())
    }
}

impl FromStr for MinorMonomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" || t.is_empty() {
            return Ok(MinorMonomial { pairs: Vec::new() });
        }
        let mut pairs = Vec::new();
        let mut pos = 0;
        for factor in t.split('*') {
            let bad = || perr(pos, format!("bad factor `{}`", factor.trim()));
            let f = factor.trim();
            let (base, exp) = match f.split_once('^') {
                Some((b, e)) => (b, e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (f, 1),
            };
            let inner = base.trim().strip_prefix("X[").and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
            let (i, j) = inner.split_once(',').ok_or_else(bad)?;
            let i: u32 = i.trim().parse().map_err(|_| bad())?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            pairs.extend(std::iter::repeat_n((i, j), exp));
            pos += factor.len() + 1;
        }
        MinorMonomial::new(pairs)
    }
}

/// One minor monomial per polyomino of `P_{d+1, n-1}`.
pub fn minor_basis(d: usize, n: usize) -> Result<Vec<MinorMonomial>> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("need n >= 2, got {n}")));
    }
    Ok(Polyomino::all(d + 1, n - 1).iter().map(MinorMonomial::of_polyomino).collect())
}

/// All standard monomials of degree `d` in the minors of a `2 x n` matrix.
pub fn standard_monomials(d: usize, n: usize) -> Vec<MinorMonomial> {
    let all: Vec<(u32, u32)> = (1..=n as u32).flat_map(|i| (i + 1..=n as u32).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(all: &[(u32, u32)], start: usize, d: usize, cur: &mut Vec<(u32, u32)>, out: &mut Vec<MinorMonomial>) {
        if cur.len() == d {
            out.push(MinorMonomial { pairs: cur.clone() });
            return;
        }
        for idx in start..all.len() {
            let p = all[idx];
            if cur.last().is_some_and(|l| l.1 > p.1) {
                continue;
            }
            cur.push(p);
            rec(all, idx, d, cur, out);
            cur.pop();
        }
    }
    rec(&all, 0, d, &mut cur, &mut out);
    out
}

/// Integer polynomial in `x_1..x_n, y_1..y_n`; exponent vectors list the
/// `x` exponents then the `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivarPoly {
    n: usize,
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl BivarPoly {
    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; 2 * n], BigInt::one());
        BivarPoly { n, terms }
    }

    /// `x_i y_j - x_j y_i`.
    pub fn minor(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::OutOfDomain(format!("minor ({i},{j}) outside 1..={n}")));
        }
        let mut p = BivarPoly { n, terms: BTreeMap::new() };
        let mut e = vec![0u16; 2 * n];
        e[i - 1] += 1;
        e[n + j - 1] += 1;
        p.add(e, BigInt::one());
        let mut e = vec![0u16; 2 * n];
        e[j - 1] += 1;
        e[n + i - 1] += 1;
        p.add(e, -BigInt::one());
        Ok(p)
    }

    fn add(&mut self, e: Vec<u16>, c: BigInt) {
        let v = self.terms.remove(&e).unwrap_or_default() + c;
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, BigInt> {
        &self.terms
    }

    pub fn mul(&self, o: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly { n: self.n, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e: Vec<u16> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add(e, ca * cb);
            }
        }
        out
    }

    pub fn linear(&self, c: &BigInt, o: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.add(e.clone(), c * v);
        }
        out
    }
}

pub fn expand(m: &MinorMonomial, n: usize) -> Result<BivarPoly> {
    let mut out = BivarPoly::one(n);
    for &(i, j) in &m.pairs {
        out = out.mul(&BivarPoly::minor(n, i as usize, j as usize)?);
    }
    Ok(out)
}

/// `X_il X_jk - X_ik X_jl + X_ij X_kl` for `i < j < k < l`.
pub fn plucker(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<BivarPoly> {
    let x = |a, b| BivarPoly::minor(n, a, b);
    let one = BigInt::one();
    let t1 = x(i, l)?.mul(&x(j, k)?);
    let t2 = x(i, k)?.mul(&x(j, l)?);
    let t3 = x(i, j)?.mul(&x(k, l)?);
    Ok(t1.linear(&-one.clone(), &t2).linear(&one, &t3))
}

fn check_caps(d: usize, n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::DegreeCap { degree: n, cap: MAX_N });
    }
    if d > MAX_D {
        return Err(Error::DegreeCap { degree: d, cap: MAX_D });
    }
    Ok(())
}

/// Exact rank of the expanded minor basis of degree `d`.
pub fn rank_check(d: usize, n: usize) -> Result<usize> {
    check_caps(d, n)?;
    let polys = minor_basis(d, n)?.iter().map(|m| expand(m, n)).collect::<Result<Vec<_>>>()?;
    let cols: BTreeSet<&Vec<u16>> = polys.iter().flat_map(|p| p.terms.keys()).collect();
    let index: BTreeMap<&Vec<u16>, usize> = cols.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let rows = polys
        .iter()
        .map(|p| {
            let mut r = vec![BigInt::zero(); index.len()];
            for (e, c) in &p.terms {
                r[index[e]] = c.clone();
            }
            r
        })
        .collect();
    Ok(int_rank(rows))
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub d: usize,
    pub n: usize,
    pub expected: usize,
    pub rank: usize,
    pub ok: bool,
}

pub fn rank_report(d: usize, n: usize) -> Result<RankReport> {
    let rank = rank_check(d, n)?;
    let expected = minor_basis(d, n)?.len();
    Ok(RankReport { d, n, expected, rank, ok: rank == expected })
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub n: usize,
    /// `|P_{d+1, n-1}|` for `d = 0..=D`.
    pub series_a: Vec<String>,
    /// Coefficients of the displayed rational closed form.
    pub series_b: Vec<String>,
    /// Degrees where the two disagree.
    pub mismatches: Vec<usize>,
}

pub fn hilbert(n: usize, max_d: usize) -> Result<HilbertReport> {
    if n < 2 || max_d > 30 {
        return Err(Error::InvalidSize(format!("need n >= 2 and D <= 30, got n={n}, D={max_d}")));
    }
    let a: Vec<BigRational> =
        (0..=max_d).map(|d| BigRational::from_integer(polyominoes(d as i64 + 1, n as i64 - 1))).collect();
    let num: Vec<BigRational> = (0..=n as i64 - 2)
        .map(|k| {
            let c = crate::polyomino::binom(n as i64 - 2, k) * crate::polyomino::binom(n as i64 - 1, k);
            BigRational::new(c, BigInt::from(k + 1))
        })
        .collect();
    let period = 2 * n - 1;
    let b: Vec<BigRational> = (0..=max_d)
        .map(|d| {
            let mut s = BigRational::zero();
            let mut j = d as i64;
            while j >= 0 {
                if let Some(c) = num.get(j as usize) {
                    s += c;
                }
                j -= period as i64;
            }
            s
        })
        .collect();
    let mismatches = (0..=max_d).filter(|&d| a[d] != b[d]).collect();
    Ok(HilbertReport {
        n,
        series_a: a.iter().map(|v| v.to_string()).collect(),
        series_b: b.iter().map(|v| v.to_string()).collect(),
        mismatches,
    })
}

/// `phi_k(mu)`: sum of the parts of `mu` dividing `k`.
fn phi(k: u32, mu: &Partition) -> i64 {
    mu.parts().iter().filter(|&&m| k.is_multiple_of(m)).map(|&m| m as i64).sum()
}

/// Character of `S_n` on the degree-`d` component: `s_{dd}` with
/// `p_k <- phi_k(mu)`, summed against `p_mu / z_mu`.
pub fn littlewood_frob(d: u32, n: usize) -> Result<SymF> {
    check_caps(0, n)?;
    let sdd = if d == 0 { SymF::one() } else { SymF::s(&[d, d]) };
    let mut out = SymF::zero();
    for mu in Partition::all(n) {
        let mut chi = crate::algebra::QTRat::zero();
        for (rho, c) in sdd.terms() {
            let v: i64 = rho.parts().iter().map(|&k| phi(k, &mu)).product();
            chi = &chi + &c.scale(&BigRational::from_integer(v.into()));
        }
        let w = chi.scale(&BigRational::new(BigInt::one(), mu.z()));
        out.add_term(mu, w);
    }
    Ok(out)
}

/// Families of `r` non-intersecting paths: `s_{k^r}(1^{n+1})`.
pub fn slr_count(k: u32, n: u32, r: u32) -> BigInt {
    let v = rect_principal(k, r, n + 1).eval(&BigRational::one(), &BigRational::one()).expect("polynomial");
    v.to_integer()
}
