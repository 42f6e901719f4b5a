use super::path::{LatticePath, Step};
use super::shape::Polyomino;
use crate::algebra::parse::perr;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Motzkin {
    D,
    R,
    B,
    DBar,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MotzkinWord(pub Vec<Motzkin>);

impl MotzkinWord {
    pub fn letters(&self) -> &[Motzkin] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Balanced, and every nonempty proper prefix has more `d` than `d~`.
    pub fn is_primitive(&self) -> bool {
        let mut h: i64 = 0;
        for (i, l) in self.0.iter().enumerate() {
            match l {
                Motzkin::D => h += 1,
                Motzkin::DBar => h -= 1,
                _ => {}
            }
            if h < 0 || (h == 0 && i + 1 < self.0.len()) {
                return false;
            }
        }
        h == 0 && self.0.first() == Some(&Motzkin::D)
    }

    /// Every word of the given length over the four letters, in letter order.
    pub fn all(len: usize) -> Vec<MotzkinWord> {
        let letters = [Motzkin::D, Motzkin::R, Motzkin::B, Motzkin::DBar];
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<Motzkin>| {
                    letters.iter().map(move |&l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(MotzkinWord).collect()
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .0
            .iter()
            .map(|l| match l {
                Motzkin::D => "d",
                Motzkin::R => "r",
                Motzkin::B => "b",
                Motzkin::DBar => "d~",
            })
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if !tok.is_empty() {
                out.push(match tok {
                    "d" => Motzkin::D,
                    "r" => Motzkin::R,
                    "b" => Motzkin::B,
                    "d~" | "dbar" => Motzkin::DBar,
                    _ => return Err(perr(pos, format!("unknown Motzkin letter `{tok}`"))),
                });
            }
            pos += tok.len() + 1;
        }
        Ok(MotzkinWord(out))
    }
}

/// Reads the step pairs (upper, lower) position by position.
pub fn to_motzkin(p: &Polyomino) -> MotzkinWord {
    MotzkinWord(
        p.upper()
            .steps()
            .iter()
            .zip(p.lower().steps())
            .map(|pair| match pair {
                (Step::N, Step::E) => Motzkin::D,
                (Step::N, Step::N) => Motzkin::R,
                (Step::E, Step::E) => Motzkin::B,
                (Step::E, Step::N) => Motzkin::DBar,
            })
            .collect(),
    )
}

pub fn from_motzkin(w: &MotzkinWord) -> Result<Polyomino> {
    if !w.is_primitive() {
        return Err(Error::InvalidObject(format!("`{w}` is not a primitive balanced Motzkin word")));
    }
    let (up, low): (Vec<Step>, Vec<Step>) =
        w.0.iter()
            .map(|l| match l {
                Motzkin::D => (Step::N, Step::E),
                Motzkin::R => (Step::N, Step::N),
                Motzkin::B => (Step::E, Step::E),
                Motzkin::DBar => (Step::E, Step::N),
            })
            .unzip();
    Polyomino::new(LatticePath::new(up), LatticePath::new(low))
}

/// Letter of the ordered alphabet `0~ < 1 < 1~ < 2 < 2~ < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ALetter {
    pub value: u32,
    pub bar: bool,
}

impl ALetter {
    pub fn rank(self) -> u32 {
        if self.bar {
            2 * self.value
        } else {
            2 * self.value - 1
        }
    }
}

impl PartialOrd for ALetter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ALetter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for ALetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.bar { "~" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AWord(pub Vec<ALetter>);

impl AWord {
    pub fn letters(&self) -> &[ALetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pairs `i < j` whose letters are adjacent in the alphabet, oriented
    /// by `dir`.
    pub fn adjacent_pairs(&self, dir: DinvDirection) -> u64 {
        let r: Vec<u32> = self.0.iter().map(|l| l.rank()).collect();
        let mut c = 0;
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                let hit = match dir {
                    DinvDirection::Successor => r[j] == r[i] + 1,
                    DinvDirection::Predecessor => r[i] == r[j] + 1,
                };
                c += hit as u64;
            }
        }
        c
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for AWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if !tok.is_empty() {
                let (num, bar) = match tok.strip_suffix('~') {
                    Some(v) => (v, true),
                    None => (tok, false),
                };
                let value: u32 = num.parse().map_err(|_| perr(pos, format!("bad letter `{tok}`")))?;
                if value == 0 && !bar {
                    return Err(perr(pos, "`0` is not in the alphabet"));
                }
                out.push(ALetter { value, bar });
            }
            pos += tok.len() + 1;
        }
        Ok(AWord(out))
    }
}

pub fn to_aword(p: &Polyomino) -> AWord {
    let mut h = 0;
    let mut out = Vec::new();
    for l in to_motzkin(p).0 {
        match l {
            Motzkin::D => {
                out.push(ALetter { value: h, bar: true });
                out.push(ALetter { value: h + 1, bar: false });
                h += 1;
            }
            Motzkin::R => out.push(ALetter { value: h, bar: false }),
            Motzkin::B => out.push(ALetter { value: h, bar: true }),
            Motzkin::DBar => h -= 1,
        }
    }
    AWord(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DinvDirection {
    /// `w_j` is the successor of `w_i`.
    Successor,
    /// `w_j` is the predecessor of `w_i`.
    Predecessor,
}

/// Convention fixed by [`calibrate_dinv`] on ribbons with `k + n <= 8`.
pub const DINV_DIRECTION: DinvDirection = DinvDirection::Successor;

pub fn dinv(p: &Polyomino) -> u64 {
    to_aword(p).adjacent_pairs(DINV_DIRECTION)
}

/// Result of testing one direction against the ribbon property.
#[derive(Clone, Debug)]
pub struct Calibration {
    pub direction: DinvDirection,
    /// `(k, n, dinv - lower area)` when that difference is constant over
    /// ribbons of size `k x n`; `None` otherwise.
    pub offsets: Vec<(usize, usize, Option<i64>)>,
}

impl Calibration {
    pub fn consistent(&self) -> bool {
        self.offsets.iter().all(|o| o.2.is_some())
    }
}

pub fn calibrate_dinv(max_size: usize) -> Vec<Calibration> {
    [DinvDirection::Successor, DinvDirection::Predecessor]
        .into_iter()
        .map(|direction| {
            let mut offsets = Vec::new();
            for k in 1..max_size {
                for n in 1..=max_size - k {
                    let mut seen: Option<Option<i64>> = None;
                    for p in Polyomino::all(k, n).into_iter().filter(|p| p.is_ribbon()) {
                        let d = to_aword(&p).adjacent_pairs(direction) as i64 - p.lower().area() as i64;
                        seen = match seen {
                            None => Some(Some(d)),
                            Some(Some(prev)) if prev == d => Some(Some(d)),
                            _ => Some(None),
                        };
                    }
                    offsets.push((k, n, seen.flatten()));
                }
            }
            Calibration { direction, offsets }
        })
        .collect()
}
