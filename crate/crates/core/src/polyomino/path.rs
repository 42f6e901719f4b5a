use crate::algebra::parse::perr;
use crate::error::{Error, Result};
use crate::symfunc::partition::parse_list;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }
}

/// North-east lattice path from the origin, stored as its step word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn width(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::E).count()
    }

    pub fn height(&self) -> usize {
        self.steps.len() - self.width()
    }

    /// Height of each east step, left to right.
    pub fn heights(&self) -> Vec<u32> {
        let mut y = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    /// x-offset of each north step, bottom to top.
    pub fn indents(&self) -> Vec<u32> {
        let mut x = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => out.push(x),
            }
        }
        out
    }

    pub fn from_heights(heights: &[u32], n: u32) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] > w[1]) || heights.last().is_some_and(|&h| h > n) {
            return Err(Error::InvalidObject(format!("bad height sequence {heights:?} for height {n}")));
        }
        let mut steps = Vec::new();
        let mut y = 0;
        for &h in heights {
            steps.extend(std::iter::repeat_n(Step::N, (h - y) as usize));
            steps.push(Step::E);
            y = h;
        }
        steps.extend(std::iter::repeat_n(Step::N, (n - y) as usize));
        Ok(LatticePath { steps })
    }

    pub fn from_indents(indents: &[u32], k: u32) -> Result<Self> {
        let swapped = LatticePath::from_heights(indents, k)?;
        Ok(swapped.reflect())
    }

    /// Cells below the path: the sum of the height sequence.
    pub fn area(&self) -> u64 {
        self.heights().iter().map(|&h| h as u64).sum()
    }

    /// Lengths of the maximal runs of `step`, in order.
    pub fn runs(&self, step: Step) -> Vec<u32> {
        let mut out = Vec::new();
        let mut cur = 0;
        for &s in &self.steps {
            if s == step {
                cur += 1;
            } else if cur > 0 {
                out.push(cur);
                cur = 0;
            }
        }
        if cur > 0 {
            out.push(cur);
        }
        out
    }

    /// Mirror image across the diagonal.
    pub fn reflect(&self) -> LatticePath {
        LatticePath { steps: self.steps.iter().map(|s| s.flip()).collect() }
    }

    /// Vertices visited, starting at the origin.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut v = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            v.push((x, y));
        }
        v
    }

    /// All paths to `(k, n)` in lexicographic order of step words (`E < N`).
    pub fn all(k: usize, n: usize) -> Vec<LatticePath> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k + n);
        fn rec(k: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
            if k == 0 && n == 0 {
                out.push(LatticePath { steps: cur.clone() });
                return;
            }
            if k > 0 {
                cur.push(Step::E);
                rec(k - 1, n, cur, out);
                cur.pop();
            }
            if n > 0 {
                cur.push(Step::N);
                rec(k, n - 1, cur, out);
                cur.pop();
            }
        }
        rec(k, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::E { 'E' } else { 'N' })?;
        }
        Ok(())
    }
}

/// Parses a step word over `{E, N}` or `{x, y}`; `offset` shifts error
/// positions.
pub(crate) fn parse_steps(s: &str, offset: usize) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| match c {
            'E' | 'e' | 'x' => Ok(Step::E),
            'N' | 'n' | 'y' => Ok(Step::N),
            _ => Err(perr(offset + i, format!("unexpected step `{c}`"))),
        })
        .collect()
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(LatticePath::new(parse_steps(s, 0)?))
    }
}

/// Path whose north steps carry the labels `1..n`, increasing up each
/// vertical run.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledPath {
    path: LatticePath,
    labels: Vec<u32>,
}

impl LabelledPath {
    pub fn new(path: LatticePath, labels: Vec<u32>) -> Result<Self> {
        check_labelling(&path, Step::N, &labels)?;
        Ok(LabelledPath { path, labels })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Label sets of the vertical runs, bottom to top.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        blocks(&self.path, Step::N, &self.labels)
    }

    pub fn area(&self) -> u64 {
        self.path.area()
    }

    /// All labelled paths to `(k, n)`, path-major.
    pub fn all(k: usize, n: usize) -> Vec<LabelledPath> {
        let mut out = Vec::new();
        for p in LatticePath::all(k, n) {
            for labels in labellings(&p.runs(Step::N)) {
                out.push(LabelledPath { path: p.clone(), labels });
            }
        }
        out
    }
}

impl fmt::Display for LabelledPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.path, fmt_labels(&self.labels))
    }
}

impl FromStr for LabelledPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, l) = s.split_once('|').ok_or_else(|| perr(0, "expected `path|[labels]`"))?;
        let path = LatticePath::new(parse_steps(p, 0)?);
        let labels = parse_list(l, '[', ']').map_err(|e| shift(e, p.len() + 1))?;
        LabelledPath::new(path, labels)
    }
}

pub(crate) fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

pub(crate) fn fmt_labels(l: &[u32]) -> String {
    let inner: Vec<String> = l.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// Checks that `labels` is a permutation of `1..=m` increasing along each
/// maximal run of `step`.
pub(crate) fn check_labelling(path: &LatticePath, step: Step, labels: &[u32]) -> Result<()> {
    let m = path.steps().iter().filter(|&&s| s == step).count();
    let mut seen = vec![false; m + 1];
    if labels.len() != m
        || labels.iter().any(|&l| l == 0 || l as usize > m || std::mem::replace(&mut seen[l as usize], true))
    {
        return Err(Error::InvalidObject(format!("labels {labels:?} are not a permutation of 1..={m}")));
    }
    for b in blocks(path, step, labels) {
        if b.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidObject(format!("labels {b:?} decrease along a run")));
        }
    }
    Ok(())
}

pub(crate) fn blocks(path: &LatticePath, step: Step, labels: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut it = labels.iter();
    for r in path.runs(step) {
        out.push(it.by_ref().take(r as usize).copied().collect());
    }
    out
}

/// Labellings increasing along runs of the given lengths: one for each
/// ordered set partition with these block sizes, listed by the word of
/// block indices in lexicographic order.
pub fn labellings(runs: &[u32]) -> Vec<Vec<u32>> {
    let m: u32 = runs.iter().sum();
    let mut out = Vec::new();
    let mut counts = runs.to_vec();
    let mut word = Vec::with_capacity(m as usize);
    fn rec(counts: &mut [u32], word: &mut Vec<usize>, m: usize, runs: &[u32], out: &mut Vec<Vec<u32>>) {
        if word.len() == m {
            let mut per: Vec<Vec<u32>> = vec![Vec::new(); runs.len()];
            for (i, &b) in word.iter().enumerate() {
                per[b].push(i as u32 + 1);
            }
            out.push(per.into_iter().flatten().collect());
            return;
        }
        for b in 0..counts.len() {
            if counts[b] > 0 {
                counts[b] -= 1;
                word.push(b);
                rec(counts, word, m, runs, out);
                word.pop();
                counts[b] += 1;
            }
        }
    }
    rec(&mut counts, &mut word, m as usize, runs, &mut out);
    out
}
