use crate::algebra::parse::perr;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidObject(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `n(mu) = sum_i (i - 1) mu_i`.
    pub fn n(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (v, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(v) * BigInt::from(k);
            }
        }
        z
    }

    /// Dominance order: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(i, j)` with `i` the column and `j` the row, both from zero.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(j, &p)| (0..p).map(move |i| (i, j as u32)))
    }

    pub fn arm(&self, i: u32, j: u32) -> u32 {
        self.part(j as usize) - i - 1
    }

    pub fn leg(&self, i: u32, j: u32) -> u32 {
        self.conjugate().part(i as usize) - j - 1
    }

    pub fn hooks(&self) -> Vec<u32> {
        let c = self.conjugate();
        self.cells().map(|(i, j)| (self.part(j as usize) - i - 1) + (c.part(i as usize) - j - 1) + 1).collect()
    }

    /// All partitions of `n`, in increasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n as u32, n as u32, &mut cur, &mut out);
        out.reverse();
        out
    }

    pub fn rect(k: u32, r: u32) -> Partition {
        Partition(vec![k; r as usize])
    }

    /// `n^k`-style rectangle or single row helpers.
    pub fn row(n: u32) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: u32) -> Partition {
        Partition(vec![1; n as usize])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn parse_list(s: &str, open: char, close: char) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix(open)
        .and_then(|x| x.strip_suffix(close))
        .ok_or_else(|| perr(0, format!("expected `{open}...{close}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let base = s.find(open).unwrap_or(0) + 1;
    let mut out = Vec::new();
    let mut off = 0;
    for piece in inner.split(',') {
        let v = piece.trim().parse::<u32>().map_err(|_| perr(base + off, format!("bad entry `{}`", piece.trim())))?;
        out.push(v);
        off += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s, '[', ']')?)
    }
}

/// Sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidObject(format!("composition with zero part: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// All compositions of `n` with `r` parts, lexicographic.
    pub fn all(n: usize, r: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if left == 0 {
                if rem == 0 {
                    out.push(Composition(cur.clone()));
                }
                return;
            }
            for p in 1..=rem.saturating_sub(left - 1) {
                cur.push(p as u32);
                rec(rem - p, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(n, r, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_list(s, '(', ')')?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let four = Partition::all(4);
        assert_eq!(four.first().unwrap(), &p(&[1, 1, 1, 1]));
        assert_eq!(four.last().unwrap(), &p(&[4]));
        assert!(four.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn statistics() {
        let mu = p(&[3, 1, 1]);
        assert_eq!(mu.conjugate(), p(&[3, 1, 1]));
        assert_eq!(mu.n(), 3);
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(p(&[3, 1]).hooks(), vec![4, 2, 1, 1]);
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }

    #[test]
    fn lex_extends_dominance() {
        for n in 1..9 {
            let all = Partition::all(n);
            for (i, a) in all.iter().enumerate() {
                for b in &all[..i] {
                    assert!(!b.dominates(a) || a == b);
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!("[3, 1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!("(1,2)".parse::<Composition>().unwrap().to_string(), "(1,2)");
        assert_eq!(Composition::all(4, 2).len(), 3);
        assert_eq!(Partition::empty().to_string(), "[]");
    }
}
