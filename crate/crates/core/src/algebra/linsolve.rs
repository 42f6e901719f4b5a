use super::gcd::gcd;
use super::poly::QTPoly;
use super::rat::QTRat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn lcm(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = gcd(a, b);
    &a.div_exact(&g).unwrap() * b
}

fn to_poly_row(coeffs: &[QTRat]) -> Vec<QTPoly> {
    let mut l = QTPoly::one();
    for c in coeffs {
        if !c.is_zero() {
            l = lcm(&l, c.denom());
        }
    }
    coeffs
        .iter()
        .map(|c| if c.is_zero() { QTPoly::zero() } else { &c.numer().clone() * &l.div_exact(c.denom()).unwrap() })
        .collect()
}

/// Solves `A x = B` column by column for every right-hand side in `b`
/// (`b[i]` holds row `i` of all right-hand sides). `A` may have more rows
/// than columns; extra equations must be consistent. Uses fraction-free
/// elimination over Q[q, t].
pub fn solve_linear_multi(a: &[Vec<QTRat>], b: &[Vec<QTRat>]) -> Result<Vec<Vec<QTRat>>> {
    let m = a.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let n = a[0].len();
    if b.len() != m || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidSize("ragged linear system".into()));
    }
    if m < n {
        return Err(Error::SingularSystem { rank: m, size: n });
    }
    let s = b[0].len();
    let mut rows: Vec<Vec<QTPoly>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| {
            let mut full = ra.clone();
            full.extend(rb.iter().cloned());
            to_poly_row(&full)
        })
        .collect();
    let width = n + s;
    let mut prev = QTPoly::one();
    for k in 0..n {
        let pivot = (k..m).filter(|&i| !rows[i][k].is_zero()).min_by_key(|&i| rows[i][k].len());
        let Some(p) = pivot else {
            return Err(Error::SingularSystem { rank: k, size: n });
        };
        rows.swap(k, p);
        let (head, tail) = rows.split_at_mut(k + 1);
        let pr = &head[k];
        for row in tail.iter_mut() {
            let f = row[k].clone();
            for j in k + 1..width {
                let v = &(&pr[k] * &row[j]) - &(&f * &pr[j]);
                row[j] = if prev.is_one() { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
            row[k] = QTPoly::zero();
        }
        prev = rows[k][k].clone();
    }
    for row in rows.iter().skip(n) {
        if row[n..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InconsistentSystem);
        }
    }
    let mut x: Vec<Vec<QTRat>> = vec![vec![QTRat::zero(); s]; n];
    for c in 0..s {
        for i in (0..n).rev() {
            let mut acc = QTRat::from(rows[i][n + c].clone());
            for j in i + 1..n {
                if !rows[i][j].is_zero() && !x[j][c].is_zero() {
                    acc = &acc - &x[j][c].mul_poly(&rows[i][j]);
                }
            }
            x[i][c] = acc.checked_div(&QTRat::from(rows[i][i].clone()))?;
        }
    }
    Ok(x)
}

/// Solves a single system `A x = b`.
pub fn solve_linear(a: &[Vec<QTRat>], b: &[QTRat]) -> Result<Vec<QTRat>> {
    let bb: Vec<Vec<QTRat>> = b.iter().map(|v| vec![v.clone()]).collect();
    Ok(solve_linear_multi(a, &bb)?.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Gaussian elimination over Q. Rectangular systems with more equations
/// than unknowns are checked for consistency.
pub fn solve_rational(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut prow = 0;
    for col in 0..n {
        let Some(p) = (prow..m).find(|&i| !a[i][col].is_zero()) else {
            return Err(Error::SingularSystem { rank: prow, size: n });
        };
        a.swap(prow, p);
        b.swap(prow, p);
        let inv = a[prow][col].recip();
        for j in col..n {
            a[prow][j] = &a[prow][j] * &inv;
        }
        b[prow] = &b[prow] * &inv;
        for i in 0..m {
            if i != prow && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..n {
                    let d = &f * &a[prow][j];
                    a[i][j] -= d;
                }
                let d = &f * &b[prow];
                b[i] -= d;
            }
        }
        prow += 1;
    }
    if b[prow..].iter().any(|v| !v.is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    b.truncate(n);
    Ok(b)
}

/// Inverse of a square rational matrix.
pub fn invert_rational(a: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Err(Error::SingularSystem { rank: col, size: n });
        };
        m.swap(col, p);
        let inv = m[col][col].recip();
        for j in 0..2 * n {
            m[col][j] = &m[col][j] * &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..2 * n {
                    if !m[col][j].is_zero() {
                        let d = &f * &m[col][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Fraction-free row echelon form over Z, skipping columns without a
/// pivot. Returns the pivot columns; `a` is left in echelon form.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].bits()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pr = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                for v in row[c + 1..].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &pr[c] / &prev;
                    }
                }
                continue;
            }
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..row.len() {
                let v = &pr[c] * &row[j] - &f * &pr[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = head[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank of an integer matrix.
pub fn int_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    bareiss_echelon(&mut a, cols).len()
}

/// Solves an integer system `A x = b` over Q; extra equations must be
/// consistent.
pub fn solve_integer(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let piv = bareiss_echelon(&mut rows, n);
    if piv.len() < n {
        return Err(Error::SingularSystem { rank: piv.len(), size: n });
    }
    if rows[n..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(rows[i][n].clone());
        for j in i + 1..n {
            if !rows[i][j].is_zero() {
                acc -= &x[j] * BigRational::from_integer(rows[i][j].clone());
            }
        }
        x[i] = acc / BigRational::from_integer(rows[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat;

    fn r(n: i64) -> QTRat {
        QTRat::from(n)
    }

    #[test]
    fn solves_symbolic_two_by_two() {
        let q = QTRat::q();
        let t = QTRat::t();
        // x + y = 1 + q, q x + t y = q + t q
        let a = vec![vec![r(1), r(1)], vec![q.clone(), t.clone()]];
        let b = vec![&r(1) + &q, &q + &(&t * &q)];
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x[0], r(1));
        assert_eq!(x[1], q);
    }

    #[test]
    fn singular_reports_rank() {
        let q = QTRat::q();
        let a = vec![vec![r(1), q.clone()], vec![r(2), &q * &r(2)]];
        let err = solve_linear(&a, &[r(1), r(2)]).unwrap_err();
        assert_eq!(err, Error::SingularSystem { rank: 1, size: 2 });
    }

    #[test]
    fn overdetermined_consistency() {
        let q = QTRat::q();
        let a = vec![vec![r(1)], vec![q.clone()]];
        assert_eq!(solve_linear(&a, &[r(1), q.clone()]).unwrap(), vec![r(1)]);
        assert_eq!(solve_linear(&a, &[r(1), r(1)]).unwrap_err(), Error::InconsistentSystem);
    }

    #[test]
    fn integer_elimination() {
        let z = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(int_rank(vec![z(&[1, 2, 3]), z(&[2, 4, 6]), z(&[0, 1, 1])]), 2);
        assert_eq!(int_rank(vec![z(&[0, 0, 1]), z(&[0, 0, 2])]), 1);
        let x = solve_integer(&[z(&[2, 1]), z(&[1, 3]), z(&[3, 4])], &z(&[1, 2, 3])).unwrap();
        assert_eq!(x, vec![rat(1) / rat(5), rat(3) / rat(5)]);
        assert_eq!(solve_integer(&[z(&[1]), z(&[1])], &z(&[1, 2])).unwrap_err(), Error::InconsistentSystem);
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let inv = invert_rational(&a).unwrap();
        assert_eq!(inv, vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(2)]]);
    }
}
