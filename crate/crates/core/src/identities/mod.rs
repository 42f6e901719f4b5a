//! Identity registry: named, parameterized checks whose two sides are
//! computed by builders referenced by name.

mod builders;
mod registry;
#[cfg(test)]
mod tests;

pub use builders::{build, nabla_e2_expected, BUILDERS};
pub use registry::REGISTRY;

use crate::algebra::{eval_equal, EvalProof, QTRat};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, BiSymF, SymF};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjecture,
    Observation,
}

/// Side condition on a parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Free,
    KLeN,
    KPlusNLe(u32),
    RLessK,
    RNBetween(u32, u32),
}

/// Inclusive ranges for the parameters an entry uses.
#[derive(Clone, Copy, Debug)]
pub struct Domain {
    pub k: Option<(u32, u32)>,
    pub n: Option<(u32, u32)>,
    pub r: Option<(u32, u32)>,
    pub d: Option<(u32, u32)>,
    pub constraint: Constraint,
}

#[derive(Clone, Copy, Debug)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub status: Status,
    pub anchor: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub domain: Domain,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub r: Option<u32>,
    pub d: Option<u32>,
}

impl Params {
    pub fn get(&self, name: char) -> Result<u32> {
        let v = match name {
            'k' => self.k,
            'n' => self.n,
            'r' => self.r,
            'd' => self.d,
            _ => None,
        };
        v.ok_or_else(|| Error::OutOfDomain(format!("parameter `{name}` not set")))
    }
}

/// Clipping applied on top of an entry's own domain.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub max_k: Option<u32>,
    pub max_n: Option<u32>,
    pub max_r: Option<u32>,
    pub max_d: Option<u32>,
}

fn range(r: Option<(u32, u32)>, cap: Option<u32>) -> Vec<Option<u32>> {
    match r {
        None => vec![None],
        Some((lo, hi)) => (lo..=cap.map_or(hi, |c| c.min(hi))).map(Some).collect(),
    }
}

impl Domain {
    pub fn points(&self, lim: &Limits) -> Vec<Params> {
        let mut out = Vec::new();
        for &k in &range(self.k, lim.max_k) {
            for &n in &range(self.n, lim.max_n) {
                for &r in &range(self.r, lim.max_r) {
                    for &d in &range(self.d, lim.max_d) {
                        let p = Params { k, n, r, d };
                        if self.admits(&p) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    fn admits(&self, p: &Params) -> bool {
        let (k, n, r) = (p.k.unwrap_or(0), p.n.unwrap_or(0), p.r.unwrap_or(0));
        match self.constraint {
            Constraint::Free => true,
            Constraint::KLeN => k <= n,
            Constraint::KPlusNLe(m) => k + n <= m,
            Constraint::RLessK => r < k,
            Constraint::RNBetween(lo, hi) => (lo..=hi).contains(&(r * n)),
        }
    }
}

pub fn lookup(id: &str) -> Result<&'static IdentityEntry> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::Unknown(format!("identity `{id}`")))
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Sym(SymF),
    Bi(BiSymF),
    Scalar(QTRat),
    Flag(bool),
}

impl Value {
    pub fn canonical_text(&self) -> Result<String> {
        Ok(match self {
            Value::Sym(f) => f.to_text(Basis::S)?,
            Value::Bi(f) => f.to_text(Basis::S, Basis::S)?,
            Value::Scalar(c) => c.to_string(),
            Value::Flag(b) => b.to_string(),
        })
    }

    pub fn digest(&self) -> Result<String> {
        Ok(hex::encode(Sha256::digest(self.canonical_text()?.as_bytes())))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    #[default]
    Symbolic,
    Evaluation,
}

impl std::str::FromStr for VerifyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(VerifyMode::Symbolic),
            "evaluation" => Ok(VerifyMode::Evaluation),
            _ => Err(Error::Unknown(format!("verification mode `{s}`"))),
        }
    }
}

/// Coefficientwise evaluation proof over the union of supports.
fn eval_compare(a: &Value, b: &Value) -> Result<EvalProof> {
    let pairs: Vec<(QTRat, QTRat)> = match (a, b) {
        (Value::Sym(x), Value::Sym(y)) => {
            let keys: BTreeSet<_> = x.terms().chain(y.terms()).map(|(p, _)| p.clone()).collect();
            keys.iter().map(|p| (x.coeff(p), y.coeff(p))).collect()
        }
        (Value::Bi(x), Value::Bi(y)) => {
            let xm: BTreeMap<_, _> = x.terms().collect();
            let ym: BTreeMap<_, _> = y.terms().collect();
            let keys: BTreeSet<_> = xm.keys().chain(ym.keys()).copied().collect();
            let get = |m: &BTreeMap<_, &QTRat>, key| m.get(key).map(|c| (*c).clone()).unwrap_or_default();
            keys.into_iter().map(|key| (get(&xm, key), get(&ym, key))).collect()
        }
        (Value::Scalar(x), Value::Scalar(y)) => vec![(x.clone(), y.clone())],
        (Value::Flag(x), Value::Flag(y)) => {
            return Ok(EvalProof { equal: x == y, deg_q: 0, deg_t: 0 });
        }
        _ => return Err(Error::Internal("sides have different kinds".into())),
    };
    Ok(pairs.iter().fold(EvalProof::trivial(), |acc, (x, y)| acc.combine(eval_equal(x, y))))
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: &'static str,
    pub status: Status,
    pub params: Params,
    pub equal: bool,
    pub lhs_digest: Option<String>,
    pub rhs_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof: Option<EvalProof>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn check_point(e: &IdentityEntry, p: Params, mode: VerifyMode) -> Record {
    let mut rec = Record {
        id: e.id,
        status: e.status,
        params: p,
        equal: false,
        lhs_digest: None,
        rhs_digest: None,
        proof: None,
        error: None,
    };
    let run = |rec: &mut Record| -> Result<()> {
        let lhs = build(e.lhs, &p)?;
        let rhs = build(e.rhs, &p)?;
        rec.lhs_digest = Some(lhs.digest()?);
        rec.rhs_digest = Some(rhs.digest()?);
        match mode {
            VerifyMode::Symbolic => rec.equal = lhs == rhs,
            VerifyMode::Evaluation => {
                let proof = eval_compare(&lhs, &rhs)?;
                rec.equal = proof.equal;
                rec.proof = Some(proof);
            }
        }
        Ok(())
    };
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&mut rec))) {
        Ok(Ok(())) => {}
        Ok(Err(err)) => rec.error = Some(err.to_string()),
        Err(p) => {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            rec.equal = false;
            rec.error = Some(format!("builder panicked: {}", msg.unwrap_or_default()));
        }
    }
    rec
}

/// Runs every point of the given entries, in parallel on the current rayon
/// pool; records come back sorted by `(id, params)`.
pub fn run(entries: &[&IdentityEntry], lim: &Limits, mode: VerifyMode) -> Vec<Record> {
    let jobs: Vec<(&IdentityEntry, Params)> =
        entries.iter().flat_map(|e| e.domain.points(lim).into_iter().map(move |p| (*e, p))).collect();
    let mut out: Vec<Record> = jobs.into_par_iter().map(|(e, p)| check_point(e, p, mode)).collect();
    out.sort_by(|a, b| a.id.cmp(b.id).then(a.params.cmp(&b.params)));
    out
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub equal: usize,
    pub theorem_failures: usize,
    pub other_failures: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Summary {
        let mut s = Summary { total: records.len(), ..Default::default() };
        for r in records {
            if r.equal {
                s.equal += 1;
            } else if r.status == Status::Theorem {
                s.theorem_failures += 1;
            } else {
                s.other_failures += 1;
            }
            if r.error.is_some() {
                s.errors += 1;
            }
        }
        s
    }

    pub fn passes(&self, strict: bool) -> bool {
        self.theorem_failures == 0 && (!strict || self.other_failures == 0)
    }
}

/// JSON envelope around a run; timing lives here only.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub mode: VerifyMode,
    pub summary: Summary,
    pub time_ms: u128,
    pub records: Vec<Record>,
}
