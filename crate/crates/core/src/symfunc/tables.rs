//! Character tables and change-of-basis matrices, cached per degree.

use super::partition::Partition;
use crate::algebra::invert_rational;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Irreducible character of the symmetric group, by Murnaghan–Nakayama on
/// beta-sets.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    let mut memo = HashMap::new();
    mn(lambda.parts().to_vec(), rho.parts(), &mut memo)
}

fn mn(lambda: Vec<u32>, rho: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), rho.to_vec());
    if let Some(v) = memo.get(&key) {
        return *v;
    }
    let r = rho[0];
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
    let mut total = 0i64;
    for (bi, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.clone();
        nb[bi] = b - r;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let np: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| x - (l - 1 - i as u32)).filter(|&x| x > 0).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(np, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
    F,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::F => 'f',
        }
    }

    pub fn from_symbol(c: &str) -> Option<Basis> {
        Some(match c {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            "f" => Basis::F,
            _ => return None,
        })
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Matrices relating a basis to power sums: `to_p[mu][rho]` is the
/// coefficient of `p_rho` in `b_mu`, and `from_p[rho][mu]` the coefficient of
/// `b_mu` in `p_rho`.
pub struct BasisMatrices {
    pub to_p: Vec<Vec<BigRational>>,
    pub from_p: Vec<Vec<BigRational>>,
}

pub struct DegreeTables {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `chi[lambda][rho]`.
    pub chi: Vec<Vec<i64>>,
    pub z: Vec<BigRational>,
    bases: [OnceLock<Arc<BasisMatrices>>; 6],
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let parts = Partition::all(n);
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut chi = vec![vec![0i64; parts.len()]; parts.len()];
        for (i, la) in parts.iter().enumerate() {
            let mut memo = HashMap::new();
            for (j, rho) in parts.iter().enumerate() {
                chi[i][j] = mn(la.parts().to_vec(), rho.parts(), &mut memo);
            }
        }
        let z = parts.iter().map(|p| BigRational::from_integer(p.z())).collect();
        DegreeTables { n, parts, index, chi, z, bases: Default::default() }
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn basis(&self, b: Basis) -> Arc<BasisMatrices> {
        self.bases[b.slot()].get_or_init(|| Arc::new(self.compute(b))).clone()
    }

    fn identity(&self) -> Vec<Vec<BigRational>> {
        let k = self.parts.len();
        (0..k)
            .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    }

    fn compute(&self, b: Basis) -> BasisMatrices {
        let k = self.parts.len();
        match b {
            Basis::P => BasisMatrices { to_p: self.identity(), from_p: self.identity() },
            Basis::S => {
                let to_p = (0..k)
                    .map(|l| (0..k).map(|r| BigRational::from_integer(self.chi[l][r].into()) / &self.z[r]).collect())
                    .collect();
                let from_p = (0..k)
                    .map(|r| (0..k).map(|l| BigRational::from_integer(self.chi[l][r].into())).collect())
                    .collect();
                BasisMatrices { to_p, from_p }
            }
            Basis::H | Basis::E => {
                let sign = b == Basis::E;
                let to_p: Vec<Vec<BigRational>> =
                    self.parts.iter().map(|mu| self.product_expansion(mu, sign)).collect();
                let from_p = invert_rational(&to_p).expect("multiplicative basis is invertible");
                BasisMatrices { to_p, from_p }
            }
            Basis::M | Basis::F => {
                // dual bases: <m_la, h_mu> = delta, <f_la, e_mu> = delta
                let dual = self.basis(if b == Basis::M { Basis::H } else { Basis::E });
                let to_p = (0..k).map(|l| (0..k).map(|r| &dual.from_p[r][l] / &self.z[r]).collect()).collect();
                let from_p = (0..k).map(|r| (0..k).map(|l| &dual.to_p[l][r] * &self.z[r]).collect()).collect();
                BasisMatrices { to_p, from_p }
            }
        }
    }

    /// p-coordinates of `h_mu` (or `e_mu` when `signed`).
    fn product_expansion(&self, mu: &Partition, signed: bool) -> Vec<BigRational> {
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::from([(Vec::new(), BigRational::one())]);
        for &m in mu.parts() {
            let factor: Vec<(Vec<u32>, BigRational)> = Partition::all(m as usize)
                .into_iter()
                .map(|rho| {
                    let mut c = BigRational::from_integer(rho.z()).recip();
                    if signed && (m as usize - rho.len()) % 2 == 1 {
                        c = -c;
                    }
                    (rho.parts().to_vec(), c)
                })
                .collect();
            let mut next: HashMap<Vec<u32>, BigRational> = HashMap::new();
            for (a, ca) in &acc {
                for (b, cb) in &factor {
                    let mut key = a.clone();
                    key.extend_from_slice(b);
                    key.sort_unstable_by(|x, y| y.cmp(x));
                    *next.entry(key).or_insert_with(BigRational::zero) += ca * cb;
                }
            }
            acc = next;
        }
        let mut out = vec![BigRational::zero(); self.parts.len()];
        for (k, v) in acc {
            out[self.index[&Partition::from_unsorted(k)]] = v;
        }
        out
    }
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

/// Shared tables for degree `n`; computed once, then read concurrently.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n));
    lock.write().unwrap().entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_characters() {
        // S_3 character table
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(character(&p(&[3, 1, 1]), &p(&[1, 1, 1, 1, 1])), 6);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..8 {
            let t = tables(n);
            let k = t.parts.len();
            for a in 0..k {
                for b in 0..k {
                    let s: i64 = (0..k).map(|l| t.chi[l][a] * t.chi[l][b]).sum();
                    let expect = if a == b { t.parts[a].z() } else { 0.into() };
                    assert_eq!(BigRational::from_integer(s.into()), BigRational::from_integer(expect));
                }
            }
        }
    }

    #[test]
    fn matrices_are_inverse() {
        let t = tables(4);
        let k = t.parts.len();
        for b in [Basis::M, Basis::E, Basis::H, Basis::S, Basis::F] {
            let m = t.basis(b);
            for i in 0..k {
                for j in 0..k {
                    let s: BigRational = (0..k).map(|r| &m.to_p[i][r] * &m.from_p[r][j]).sum();
                    assert_eq!(s, if i == j { rat(1) } else { rat(0) }, "{b:?}");
                }
            }
        }
    }
}
