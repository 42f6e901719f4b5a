//! The cyclic-lemma bijection between `L_{k-1,n} x P_{k-1,n-1}` and
//! `k` copies of the labelled polyominoes of size `k x n`.

use super::path::{LabelledPath, LatticePath, Step};
use super::shape::{LabelledPolyomino, Polyomino};
use crate::error::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct CyclicClass {
    /// Transversal intersection points, in increasing order.
    pub points: Vec<(i64, i64)>,
    /// The cut-out pair at each point, with the appended steps removed.
    pub members: Vec<(LabelledPath, LatticePath)>,
    /// Members whose cut-out forms a labelled polyomino.
    pub polyominoes: Vec<LabelledPolyomino>,
}

impl CyclicClass {
    pub fn representative(&self) -> Result<&LabelledPolyomino> {
        match self.polyominoes.as_slice() {
            [one] => Ok(one),
            other => Err(Error::Internal(format!("class has {} polyomino members", other.len()))),
        }
    }
}

fn walk(start: (i64, i64), steps: &[Step]) -> Vec<(i64, i64)> {
    let mut p = start;
    steps
        .iter()
        .map(|s| {
            match s {
                Step::E => p.0 += 1,
                Step::N => p.1 += 1,
            }
            p
        })
        .collect()
}

fn rotate_after(steps: &[Step], j: usize) -> Vec<Step> {
    steps[j + 1..].iter().chain(&steps[..=j]).copied().collect()
}

pub fn cyclic_map(ell: &LabelledPath, beta: &LatticePath) -> Result<CyclicClass> {
    let k = ell.path().width() + 1;
    let n = ell.path().height();
    if n == 0 || beta.width() + 1 != k || beta.height() + 1 != n {
        return Err(Error::InvalidSize(format!(
            "need a labelled path of size (k-1) x n and a path of size (k-1) x (n-1), got {}x{} and {}x{}",
            k - 1,
            n,
            beta.width(),
            beta.height()
        )));
    }
    let mut alpha = ell.path().steps().to_vec();
    alpha.push(Step::E);
    let mut b = beta.steps().to_vec();
    b.push(Step::N);

    // label of each north step of alpha, by step index
    let mut label_at = vec![0u32; alpha.len()];
    let mut it = ell.labels().iter();
    for (i, s) in alpha.iter().enumerate() {
        if *s == Step::N {
            label_at[i] = *it.next().unwrap();
        }
    }

    let (ki, ni) = (k as i64, n as i64);
    let reach = 2 * (ki + ni) + 2;
    let mut east_arrivals: HashMap<(i64, i64), usize> = HashMap::new();
    for m in -reach..=reach {
        for (i, p) in walk((m * ki, m * ni), &alpha).into_iter().enumerate() {
            if alpha[i] == Step::E {
                east_arrivals.insert(p, i);
            }
        }
    }
    let mut hits = Vec::new();
    for m in -reach..=reach {
        for (j, p) in walk((1 + m * (ki - 1), m * ni), &b).into_iter().enumerate() {
            if b[j] == Step::N {
                if let Some(&i) = east_arrivals.get(&p) {
                    hits.push((p, i, j));
                }
            }
        }
    }
    hits.sort();

    let mut members = Vec::new();
    let mut polyominoes = Vec::new();
    for &(_, i, j) in &hits {
        let up = rotate_after(&alpha, i);
        let labels: Vec<u32> =
            (i + 1..alpha.len()).chain(0..=i).filter(|&t| alpha[t] == Step::N).map(|t| label_at[t]).collect();
        let low = rotate_after(&b, j);
        let ell_p = LabelledPath::new(LatticePath::new(up[..up.len() - 1].to_vec()), labels.clone())?;
        let beta_p = LatticePath::new(low[..low.len() - 1].to_vec());
        let mut lower = vec![Step::E];
        lower.extend_from_slice(&low);
        if let Ok(shape) = Polyomino::new(LatticePath::new(up), LatticePath::new(lower)) {
            polyominoes.push(LabelledPolyomino::new(shape, labels)?);
        }
        members.push((ell_p, beta_p));
    }
    Ok(CyclicClass { points: hits.iter().map(|h| h.0).collect(), members, polyominoes })
}
