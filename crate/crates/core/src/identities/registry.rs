use super::{Constraint, Domain, IdentityEntry, Status};
use Constraint::*;
use Status::*;

const fn r(lo: u32, hi: u32) -> Option<(u32, u32)> {
    Some((lo, hi))
}

const fn kn(k: (u32, u32), n: (u32, u32), c: Constraint) -> Domain {
    Domain { k: Some(k), n: Some(n), r: None, d: None, constraint: c }
}

const fn only_n(lo: u32, hi: u32) -> Domain {
    Domain { k: None, n: r(lo, hi), r: None, d: None, constraint: Free }
}

const fn e(
    id: &'static str,
    status: Status,
    anchor: &'static str,
    lhs: &'static str,
    rhs: &'static str,
    domain: Domain,
) -> IdentityEntry {
    IdentityEntry { id, status, anchor, lhs, rhs, domain }
}

pub static REGISTRY: &[IdentityEntry] = &[
    e("eqFrob", Theorem, "Frobenius of labelled polyominoes", "frobL.brute", "frobL.closed", kn((1, 6), (1, 6), Free)),
    e(
        "frobSpecial",
        Theorem,
        "labelled polyominoes, tabulated small heights",
        "frobL.special",
        "frobL.closed",
        kn((1, 8), (1, 4), Free),
    ),
    e(
        "chemins",
        Theorem,
        "Frobenius of labelled paths",
        "frobPaths.brute",
        "frobPaths.closed",
        kn((0, 3), (1, 4), Free),
    ),
    e(
        "frobq",
        Theorem,
        "area-graded Frobenius of labelled paths",
        "frobPathsQ.brute",
        "frobPathsQ.closed",
        kn((0, 3), (1, 4), Free),
    ),
    e(
        "pathArea",
        Theorem,
        "area enumeration of lattice paths",
        "pathArea.brute",
        "qbinom.nk",
        kn((0, 6), (0, 6), Free),
    ),
    e(
        "labelledPathArea",
        Theorem,
        "area enumeration of labelled paths",
        "labelledPathArea.brute",
        "qint.pow",
        kn((0, 6), (0, 6), Free),
    ),
    e(
        "unlabeled",
        Theorem,
        "number of parallelogram polyominoes",
        "count.P.brute",
        "count.P.closed",
        kn((1, 6), (1, 6), Free),
    ),
    e(
        "labelled",
        Theorem,
        "number of labelled polyominoes",
        "count.L.brute",
        "count.L.closed",
        kn((1, 6), (1, 6), Free),
    ),
    e("labelled2", Theorem, "shape sum of multinomials", "labelled2.sum", "count.L.closed", kn((1, 6), (1, 6), Free)),
    e(
        "labelled3",
        Theorem,
        "generating function of labelled polyominoes",
        "labelled3.coeff",
        "count.L.closed",
        kn((1, 6), (1, 10), Free),
    ),
    e("motzkin", Theorem, "Motzkin and A-word encodings", "motzkin.roundtrip", "true", kn((1, 7), (1, 7), KPlusNLe(8))),
    e(
        "cyclicLemma",
        Theorem,
        "cyclic lemma for labelled polyominoes",
        "cyclic.check",
        "true",
        kn((1, 4), (1, 4), Free),
    ),
    e(
        "doubleFrob",
        Observation,
        "Frobenius of doubly labelled polyominoes",
        "frobL2.brute",
        "frobL2.closed",
        kn((2, 4), (2, 4), Free),
    ),
    e(
        "doublyCount",
        Observation,
        "number of doubly labelled polyominoes",
        "count.L2.brute",
        "count.L2.closed",
        kn((1, 4), (1, 4), Free),
    ),
    e(
        "frob2star",
        Theorem,
        "starred doubly labelled Frobenius",
        "frobL2star.brute",
        "frobL2star.closed",
        kn((1, 4), (1, 4), Free),
    ),
    e(
        "starCount",
        Theorem,
        "parking functions of the complete bipartite graph",
        "count.L2star.brute",
        "count.L2star.closed",
        kn((1, 4), (1, 4), Free),
    ),
    e(
        "doublyDiag",
        Observation,
        "rectangular isotypic component",
        "srho.brute",
        "srho.closed",
        Domain { k: None, n: r(1, 4), r: r(1, 2), d: None, constraint: RNBetween(2, 4) },
    ),
    e(
        "doublyArea",
        Observation,
        "area-graded rectangular isotypic component",
        "srhoQ.brute",
        "srhoQ.rhs",
        Domain { k: None, n: r(1, 4), r: r(1, 2), d: None, constraint: RNBetween(2, 4) },
    ),
    e(
        "michele",
        Conjecture,
        "q-Frobenius of labelled polyominoes via Delta_{h_k} at t=1",
        "frobLq.shifted",
        "michele.rhs",
        kn((0, 3), (1, 5), Free),
    ),
    e(
        "propEq1",
        Theorem,
        "q-free component of omega Delta_{h_k} e_n",
        "prop1.lhs",
        "prop1.rhs",
        kn((1, 4), (1, 5), Free),
    ),
    e("propEq2", Theorem, "omega Delta_{h_{k-1}} e_n at t=1/q", "prop2.lhs", "prop2.rhs", kn((1, 5), (1, 6), Free)),
    e("deltaBar", Observation, "Delta_{e_k} e_n at t=1/q", "deltaBar.lhs", "deltaBar.rhs", kn((1, 6), (1, 6), KLeN)),
    e("frobRibbon", Observation, "dinv-graded ribbons", "ribbon.brute", "ribbon.closed", kn((1, 5), (1, 5), Free)),
    e(
        "angela",
        Theorem,
        "bounce pairing at t=1 counts area",
        "bounce.tOne",
        "areaSeries",
        kn((1, 8), (1, 8), KPlusNLe(9)),
    ),
    e(
        "angelaSymQT",
        Theorem,
        "bounce pairing is symmetric in q and t",
        "bounce",
        "bounce.swapQT",
        kn((1, 8), (1, 8), KPlusNLe(9)),
    ),
    e(
        "angelaSymKN",
        Theorem,
        "bounce pairing is symmetric in k and n",
        "bounce",
        "bounce.swapKN",
        kn((1, 8), (1, 8), KPlusNLe(9)),
    ),
    e("qangela", Theorem, "bounce pairing at t=1/q", "qangela.lhs", "qangela.rhs", kn((1, 8), (1, 8), KPlusNLe(9))),
    e(
        "diffSchurPos",
        Observation,
        "Delta_{h_{rn-1}} e_n minus nabla^r e_n",
        "diffSchurPos",
        "true",
        Domain { k: None, n: r(1, 4), r: r(1, 1), d: None, constraint: Free },
    ),
    e(
        "remark3",
        Observation,
        "trivariate difference is h-positive",
        "remark3",
        "true",
        Domain { k: None, n: r(1, 5), r: r(1, 2), d: None, constraint: Free },
    ),
    e("macTriangular", Theorem, "Macdonald triangularity and normalization", "mac.triangular", "true", only_n(1, 6)),
    e("hUnepart", Theorem, "one-row Macdonald polynomial", "mac.oneRow", "mac.oneRow.closed", only_n(1, 6)),
    e("tOneMult", Theorem, "Macdonald polynomials at t=1 are multiplicative", "mac.tOneMult", "true", only_n(1, 6)),
    e("hTInvQ", Theorem, "Macdonald polynomials at t=1/q", "mac.tInvQ", "true", only_n(1, 6)),
    e("nablaE2", Theorem, "nabla of e_2", "nabla.e2", "nabla.e2.expected", only_n(2, 2)),
    e("enrSum", Theorem, "refinement of e_n", "enr.sum", "e_n", only_n(1, 6)),
    e("egammaEmu", Theorem, "E_gamma against specialized Macdonald polynomials", "egamma.check", "true", only_n(1, 5)),
    e(
        "commC",
        Theorem,
        "commutation of creation operators",
        "commC.lhs",
        "commC.rhs",
        Domain { k: r(2, 4), n: None, r: r(1, 3), d: r(0, 1), constraint: RLessK },
    ),
    e("eigenfunctD", Theorem, "E_gamma are eigenfunctions at t=0", "eigenD.check", "true", kn((1, 4), (1, 5), Free)),
    e(
        "sl2Basis",
        Theorem,
        "minor monomials are independent",
        "sl2.rank",
        "sl2.count",
        Domain { k: None, n: r(2, 5), r: None, d: r(0, 3), constraint: Free },
    ),
    e(
        "sl2Standard",
        Theorem,
        "minor monomials are the standard monomials",
        "sl2.standard",
        "true",
        Domain { k: None, n: r(2, 6), r: None, d: r(0, 3), constraint: Free },
    ),
    e("plucker", Theorem, "Plucker relations", "plucker", "true", only_n(4, 6)),
    e(
        "littlewoodDim",
        Theorem,
        "Littlewood character dimension",
        "littlewood.dim",
        "sl2.count",
        Domain { k: None, n: r(2, 6), r: None, d: r(0, 2), constraint: Free },
    ),
    e("slrCount", Theorem, "non-intersecting path families", "slr.count", "count.P.shifted", kn((0, 5), (1, 5), Free)),
];
