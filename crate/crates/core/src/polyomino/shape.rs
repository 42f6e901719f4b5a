use super::path::{blocks, check_labelling, fmt_labels, labellings, parse_steps, shift, LatticePath, Step};
use crate::algebra::parse::perr;
use crate::error::{Error, Result};
use crate::symfunc::partition::parse_list;
use crate::symfunc::Composition;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Parallelogram polyomino: two paths from `(0,0)` to `(k,n)` meeting
/// only at their ends, `upper` strictly above `lower`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Polyomino {
    upper: LatticePath,
    lower: LatticePath,
}

impl Polyomino {
    pub fn new(upper: LatticePath, lower: LatticePath) -> Result<Self> {
        let (k, n) = (upper.width(), upper.height());
        if k == 0 || n == 0 {
            return Err(Error::InvalidSize(format!("polyomino needs positive width and height, got {k}x{n}")));
        }
        if lower.width() != k || lower.height() != n {
            return Err(Error::InvalidObject("paths end at different points".into()));
        }
        if !strict(&upper.heights(), &lower.heights(), n as u32) {
            return Err(Error::InvalidObject(format!("{upper} is not strictly above {lower}")));
        }
        Ok(Polyomino { upper, lower })
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }

    pub fn width(&self) -> usize {
        self.upper.width()
    }

    pub fn height(&self) -> usize {
        self.upper.height()
    }

    /// Cells between the paths minus `k + n - 1`; zero on ribbons.
    pub fn area(&self) -> u64 {
        self.upper.area() - self.lower.area() - (self.width() + self.height() - 1) as u64
    }

    pub fn is_ribbon(&self) -> bool {
        self.area() == 0
    }

    /// Run lengths of north steps of the upper path.
    pub fn gamma(&self) -> Composition {
        Composition::new(self.upper.runs(Step::N)).expect("runs are positive")
    }

    /// Run lengths of east steps of the lower path.
    pub fn delta(&self) -> Composition {
        Composition::new(self.lower.runs(Step::E)).expect("runs are positive")
    }

    /// Mirror image across the diagonal, a polyomino of size `n x k`.
    pub fn reflect(&self) -> Polyomino {
        Polyomino { upper: self.lower.reflect(), lower: self.upper.reflect() }
    }

    /// All polyominoes of width `k` and height `n`, ordered by upper then
    /// lower step word.
    pub fn all(k: usize, n: usize) -> Vec<Polyomino> {
        let mut out = Vec::new();
        if k == 0 || n == 0 {
            return out;
        }
        let n32 = n as u32;
        // upper heights: weakly increasing, ending at n
        for a in monotone(k, 0, n32, |i, _| if i == k - 1 { Some((n32, n32)) } else { None }) {
            // lower heights: start at 0, b[i+1] < a[i]
            for b in
                monotone(k, 0, n32, |i, _| if i == 0 { Some((0, 0)) } else { Some((0, a[i - 1].saturating_sub(1))) })
            {
                if strict(&a, &b, n32) {
                    let upper = LatticePath::from_heights(&a, n32).unwrap();
                    let lower = LatticePath::from_heights(&b, n32).unwrap();
                    out.push(Polyomino { upper, lower });
                }
            }
        }
        out.sort();
        out
    }
}

/// Height-sequence form of the strictness condition.
fn strict(a: &[u32], b: &[u32], n: u32) -> bool {
    let k = a.len();
    k > 0 && b.len() == k && b[0] == 0 && a[k - 1] == n && (0..k - 1).all(|i| a[i] > b[i + 1])
}

/// Weakly increasing sequences of length `len` with entries in `[lo, hi]`;
/// `bound(i, prefix)` may narrow the range of entry `i`.
fn monotone(len: usize, lo: u32, hi: u32, bound: impl Fn(usize, &[u32]) -> Option<(u32, u32)>) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(
        len: usize,
        lo: u32,
        hi: u32,
        bound: &dyn Fn(usize, &[u32]) -> Option<(u32, u32)>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let i = cur.len();
        if i == len {
            out.push(cur.clone());
            return;
        }
        let (mut l, mut h) = (lo, hi);
        if let Some((bl, bh)) = bound(i, cur) {
            l = l.max(bl);
            h = h.min(bh);
        }
        if let Some(&prev) = cur.last() {
            l = l.max(prev);
        }
        for v in l..=h {
            cur.push(v);
            rec(len, lo, hi, bound, cur, out);
            cur.pop();
        }
    }
    rec(len, lo, hi, &bound, &mut cur, &mut out);
    out
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.upper, self.lower)
    }
}

impl FromStr for Polyomino {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (u, l) = s.split_once('|').ok_or_else(|| perr(0, "expected `upper|lower`"))?;
        let upper = LatticePath::new(parse_steps(u, 0)?);
        let lower = LatticePath::new(parse_steps(l, u.len() + 1)?);
        Polyomino::new(upper, lower)
    }
}

/// Polyomino whose upper north steps carry `1..n`, increasing up each
/// big-step; labels are listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledPolyomino {
    shape: Polyomino,
    labels: Vec<u32>,
}

impl LabelledPolyomino {
    pub fn new(shape: Polyomino, labels: Vec<u32>) -> Result<Self> {
        check_labelling(&shape.upper, Step::N, &labels)?;
        Ok(LabelledPolyomino { shape, labels })
    }

    pub fn shape(&self) -> &Polyomino {
        &self.shape
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn blocks(&self) -> Vec<Vec<u32>> {
        blocks(&self.shape.upper, Step::N, &self.labels)
    }

    pub fn all(k: usize, n: usize) -> Vec<LabelledPolyomino> {
        let mut out = Vec::new();
        for shape in Polyomino::all(k, n) {
            for labels in labellings(shape.gamma().parts()) {
                out.push(LabelledPolyomino { shape: shape.clone(), labels });
            }
        }
        out
    }
}

impl fmt::Display for LabelledPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.shape, fmt_labels(&self.labels))
    }
}

impl FromStr for LabelledPolyomino {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cut = s.rfind('|').ok_or_else(|| perr(0, "expected `upper|lower|[labels]`"))?;
        let shape: Polyomino = s[..cut].parse()?;
        let labels = parse_list(&s[cut + 1..], '[', ']').map_err(|e| shift(e, cut + 1))?;
        LabelledPolyomino::new(shape, labels)
    }
}

/// Labelled polyomino whose lower east steps also carry `1..k`, increasing
/// along each horizontal run. In the starred variant the first east step
/// of the lower path carries `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoublyLabelledPolyomino {
    base: LabelledPolyomino,
    lower_labels: Vec<u32>,
    star: bool,
}

impl DoublyLabelledPolyomino {
    pub fn new(base: LabelledPolyomino, lower_labels: Vec<u32>, star: bool) -> Result<Self> {
        check_labelling(&base.shape.lower, Step::E, &lower_labels)?;
        if star && lower_labels.first() != Some(&1) {
            return Err(Error::InvalidObject("starred variant needs label 1 on the first lower step".into()));
        }
        Ok(DoublyLabelledPolyomino { base, lower_labels, star })
    }

    pub fn base(&self) -> &LabelledPolyomino {
        &self.base
    }

    pub fn lower_labels(&self) -> &[u32] {
        &self.lower_labels
    }

    pub fn star(&self) -> bool {
        self.star
    }

    pub fn all(k: usize, n: usize, star: bool) -> Vec<DoublyLabelledPolyomino> {
        let mut out = Vec::new();
        for base in LabelledPolyomino::all(k, n) {
            for lower_labels in labellings(base.shape.delta().parts()) {
                if star && lower_labels[0] != 1 {
                    continue;
                }
                out.push(DoublyLabelledPolyomino { base: base.clone(), lower_labels, star });
            }
        }
        out
    }
}

impl fmt::Display for DoublyLabelledPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}{}", self.base, fmt_labels(&self.lower_labels), if self.star { "*" } else { "" })
    }
}
