//! General constructions and the top-level synthesis procedure.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::aut::{verify_matrix_with, AutOptions, Verdict, DEFAULT_VERTEX_CAP};
use crate::catalog::{self, GroupClass, Kind, DEFAULT_SEED};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{GeneratingSet, Group, G0};
use crate::lift::LiftSpec;
use crate::mcayley::ConnectionMatrix;

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Catalog,
    RankLe2,
    Rank3,
    Gamma3,
    Gamma4,
    Lift3,
    Lift4,
    Lift5,
    LargeMAsymmetric,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Catalog => "catalog",
            Route::RankLe2 => "rank<=2",
            Route::Rank3 => "rank3",
            Route::Gamma3 => "gamma3",
            Route::Gamma4 => "gamma4",
            Route::Lift3 => "lift3",
            Route::Lift4 => "lift4",
            Route::Lift5 => "lift5",
            Route::LargeMAsymmetric => "large-m-asymmetric",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Route> {
        [
            Route::Catalog,
            Route::RankLe2,
            Route::Rank3,
            Route::Gamma3,
            Route::Gamma4,
            Route::Lift3,
            Route::Lift4,
            Route::Lift5,
            Route::LargeMAsymmetric,
        ]
        .into_iter()
        .find(|r| r.tag() == tag)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Clause of the classification under which `(G, m)` has no m-HGR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// `m = 3`: C1, C2, C3, C4, C5, C2^2, D6.
    A,
    /// `m = 4`: C1, C2, C3.
    B,
    /// `m = 5`: C1, C2.
    C,
    /// `6 <= m <= 9`: C1.
    D,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::A => "(a)",
            Clause::B => "(b)",
            Clause::C => "(c)",
            Clause::D => "(d)",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Clause> {
        [Clause::A, Clause::B, Clause::C, Clause::D].into_iter().find(|c| c.tag() == tag)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The exception table: `(G, m)` pairs (`m >= 3`) without an m-HGR.
pub fn exception(g0: Option<G0>, m: usize) -> Option<Clause> {
    use G0::*;
    let g0 = g0?;
    match m {
        3 if matches!(g0, C1 | C2 | C3 | C4 | C5 | C2Sq | D6) => Some(Clause::A),
        4 if matches!(g0, C1 | C2 | C3) => Some(Clause::B),
        5 if matches!(g0, C1 | C2) => Some(Clause::C),
        6..=9 if g0 == C1 => Some(Clause::D),
        _ => None,
    }
}

/// All `(G, m)` pairs of the exception table.
pub fn exception_pairs() -> Vec<(G0, usize, Clause)> {
    let mut out = Vec::new();
    for m in 3..=9 {
        for g0 in G0::ALL {
            if let Some(c) = exception(Some(g0), m) {
                out.push((g0, m, c));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub enum SynthesisOutcome {
    Witness {
        matrix: ConnectionMatrix,
        route: Route,
        /// Present when verification was requested.
        verdict: Option<Verdict>,
    },
    Nonexistence {
        clause: Clause,
    },
}

impl SynthesisOutcome {
    pub fn matrix(&self) -> Option<&ConnectionMatrix> {
        match self {
            SynthesisOutcome::Witness { matrix, .. } => Some(matrix),
            SynthesisOutcome::Nonexistence { .. } => None,
        }
    }
}

/// The sets `S, L, R, T` for a generating set of size `t >= 4`.
pub fn slr_sets(group: &Group, gens: &GeneratingSet) -> Result<[ElemSet; 4]> {
    let h = &gens.elements;
    let t = h.len();
    if t < 4 {
        return Err(Error::Precondition(format!("S, L, R, T need t >= 4 generators, got {t}")));
    }
    let one = Group::IDENTITY;
    let ratio = |a: usize, b: usize| group.mul(h[a], group.inv(h[b]));
    let mut s = Vec::from([one]);
    s.extend(h.iter().copied());
    let mut l = Vec::from([one, h[0], ratio(1, 0)]);
    l.extend(h[2..].iter().copied());
    let mut r = Vec::from([one, h[0]]);
    r.extend((1..t).map(|i| ratio(i, i - 1)));
    let mut tt = Vec::from([one, h[0]]);
    tt.extend((1..t - 1).map(|i| ratio(i, i - 1)));
    Ok([
        distinct_set(group, "S", &s)?,
        distinct_set(group, "L", &l)?,
        distinct_set(group, "R", &r)?,
        distinct_set(group, "T", &tt)?,
    ])
}

/// The sets `M` (size `t`) and `N` (size `t + 1`).
pub fn mn_sets(group: &Group, gens: &GeneratingSet) -> Result<[ElemSet; 2]> {
    let h = &gens.elements;
    let t = h.len();
    if t < 4 {
        return Err(Error::Precondition(format!("M, N need t >= 4 generators, got {t}")));
    }
    let mut m = Vec::from([Group::IDENTITY]);
    m.extend(h[..t - 1].iter().copied());
    let mut n = Vec::from([
        group.product_of(&[h[0], h[1], h[2], h[3]]),
        group.product_of(&[h[0], h[2], h[3]]),
        group.product_of(&[h[1], h[2], h[3]]),
    ]);
    n.extend((2..t).map(|i| group.product_of(&[h[i], h[1], group.inv(h[0])])));
    Ok([distinct_set(group, "M", &m)?, distinct_set(group, "N", &n)?])
}

fn distinct_set(group: &Group, label: &'static str, elems: &[usize]) -> Result<ElemSet> {
    let mut set = ElemSet::new();
    for (pos, &e) in elems.iter().enumerate() {
        if !set.insert(e) {
            let first = elems.iter().position(|&f| f == e).unwrap_or(0);
            return Err(Error::Discrepancy {
                source: "general construction sets",
                detail: format!(
                    "set {label}: listed elements {} and {} coincide ({})",
                    first + 1,
                    pos + 1,
                    group.name(e)
                ),
            });
        }
    }
    Ok(set)
}

fn general_gens(group: &Group) -> Result<GeneratingSet> {
    let gens = group.minimal_generating_set()?;
    if gens.len() < 4 {
        return Err(Error::Precondition(format!("d(G) = {} < 4", gens.len())));
    }
    Ok(gens)
}

/// `T12 = S, T13 = L, T23 = R`; `(2t + 2)`-regular.
pub fn gamma3(group: &Arc<Group>) -> Result<ConnectionMatrix> {
    let [s, l, r, _] = slr_sets(group, &general_gens(group)?)?;
    ConnectionMatrix::new(group.clone(), 3, &[(0, 1, s), (0, 2, l), (1, 2, r)], &[])
}

/// As `gamma3` with `T23 = T`; a 3-part lift base with `k = 2t + 1`.
pub fn sigma3(group: &Arc<Group>) -> Result<ConnectionMatrix> {
    let [s, l, _, t] = slr_sets(group, &general_gens(group)?)?;
    ConnectionMatrix::new(group.clone(), 3, &[(0, 1, s), (0, 2, l), (1, 2, t)], &[])
}

fn four_part(group: &Arc<Group>, sigma: bool) -> Result<ConnectionMatrix> {
    let gens = general_gens(group)?;
    let [s, l, r, _] = slr_sets(group, &gens)?;
    let [m, n] = mn_sets(group, &gens)?;
    let t34 = if sigma { m } else { s };
    ConnectionMatrix::new(
        group.clone(),
        4,
        &[(0, 1, s), (0, 3, s), (2, 3, t34), (0, 2, l), (1, 2, r), (1, 3, n)],
        &[],
    )
}

/// `T12 = T14 = T34 = S, T13 = L, T23 = R, T24 = N`; `(3t + 3)`-regular.
pub fn gamma4(group: &Arc<Group>) -> Result<ConnectionMatrix> {
    four_part(group, false)
}

/// As `gamma4` with `T34 = M`; a 4-part lift base with `k = 3t + 2`.
pub fn sigma4(group: &Arc<Group>) -> Result<ConnectionMatrix> {
    four_part(group, true)
}

fn not_small(group: &Group) -> Result<()> {
    match group.identify_g0() {
        Some(g0) => Err(Error::Precondition(format!("{g0} is handled by the small-family catalog"))),
        None => Ok(()),
    }
}

fn class_route(group: &Arc<Group>, m: usize, class: GroupClass, direct: Route) -> Result<(ConnectionMatrix, Route)> {
    let entry = |m, kind| {
        catalog::lookup_class(class, m, kind).ok_or_else(|| Error::NotFound(format!("{class} entry m={m} {kind}")))
    };
    match m {
        0..=2 => Err(Error::Precondition(format!("m = {m} < 3"))),
        3 | 4 => Ok((entry(m, Kind::DirectHgr)?.matrix(group)?, direct)),
        _ if m % 2 == 1 => {
            let base = entry(3, Kind::Pgsr3)?.matrix(group)?;
            Ok((LiftSpec::new(base)?.lift(m)?, Route::Lift3))
        }
        _ => {
            let base = entry(4, Kind::Pgsr4)?.matrix(group)?;
            Ok((LiftSpec::new(base)?.lift(m)?, Route::Lift4))
        }
    }
}

/// Constructions for `d(G) <= 2` outside the small family.
pub fn rank_le2_construction(group: &Arc<Group>, m: usize) -> Result<ConnectionMatrix> {
    not_small(group)?;
    let d = group.minimal_generating_size()?;
    if d > 2 {
        return Err(Error::Precondition(format!("d(G) = {d} > 2")));
    }
    Ok(class_route(group, m, GroupClass::RankLe2, Route::RankLe2)?.0)
}

/// Constructions for `d(G) = 3` outside the small family.
pub fn rank3_construction(group: &Arc<Group>, m: usize) -> Result<ConnectionMatrix> {
    not_small(group)?;
    let d = group.minimal_generating_size()?;
    if d != 3 {
        return Err(Error::Precondition(format!("d(G) = {d} != 3")));
    }
    Ok(class_route(group, m, GroupClass::Rank3, Route::Rank3)?.0)
}

/// Lifts the first usable base among the catalog entries for `(g0, kind)`.
fn lift_small(group: &Arc<Group>, g0: G0, kind: Kind, m: usize) -> Result<ConnectionMatrix> {
    let parts = kind.base_parts().expect("PGSR kind");
    let mut last_err = None;
    for entry in catalog::lookup_all(g0, parts, kind) {
        match entry.matrix(group).and_then(LiftSpec::new) {
            Ok(spec) => return spec.lift(m),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::NotFound(format!("no {kind} base for {g0}"))))
}

fn synthesize_small(group: &Arc<Group>, g0: G0, m: usize, seed: u64) -> Result<(ConnectionMatrix, Route)> {
    use G0::*;
    if m >= 10 && matches!(g0, C1 | C2) {
        let cm = if g0 == C1 { catalog::c1_large_m(m, seed)? } else { catalog::c2_large_m(m, seed)? };
        // the template graph lives on C1/C2 built from scratch; re-home it on `group`
        return Ok((rehome(cm, group)?, Route::LargeMAsymmetric));
    }
    if let Some(entry) = catalog::lookup(g0, m, Kind::DirectHgr) {
        return Ok((entry.matrix(group)?, Route::Catalog));
    }
    let odd = m % 2 == 1;
    let (kind, route) = match (g0, odd) {
        (C3 | C2Sq, true) => (Kind::Pgsr5, Route::Lift5),
        (_, true) => (Kind::Pgsr3, Route::Lift3),
        (_, false) => (Kind::Pgsr4, Route::Lift4),
    };
    Ok((lift_small(group, g0, kind, m)?, route))
}

/// Copies a matrix over an isomorphic cyclic group of order <= 2 onto `group`.
fn rehome(cm: ConnectionMatrix, group: &Arc<Group>) -> Result<ConnectionMatrix> {
    let gens = catalog::canonical_generators(group, group.identify_g0().expect("small group"))?;
    let mut out = ConnectionMatrix::empty(group.clone(), cm.m())?;
    for i in 0..cm.m() {
        for j in i + 1..cm.m() {
            let set = cm.block(i, j).iter().map(|e| group.pow(gens[0], e as i64)).collect();
            out.set_block(i, j, set)?;
        }
    }
    Ok(out)
}

/// Decides whether `group` has an m-HGR and produces a witness when it does.
pub fn synthesize(group: &Arc<Group>, m: usize, verify: bool) -> Result<SynthesisOutcome> {
    synthesize_with_seed(group, m, verify, DEFAULT_SEED)
}

pub fn synthesize_with_seed(group: &Arc<Group>, m: usize, verify: bool, seed: u64) -> Result<SynthesisOutcome> {
    synthesize_with(group, m, &SynthesisOptions { verify, seed, ..SynthesisOptions::default() })
}

/// Knobs for [`synthesize_with`].
#[derive(Debug, Clone)]
pub struct SynthesisOptions {
    pub verify: bool,
    /// Seed for the randomized large-m routes.
    pub seed: u64,
    /// Vertex cap for the verification step.
    pub vertex_cap: usize,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        SynthesisOptions { verify: false, seed: DEFAULT_SEED, vertex_cap: DEFAULT_VERTEX_CAP }
    }
}

pub fn synthesize_with(group: &Arc<Group>, m: usize, opts: &SynthesisOptions) -> Result<SynthesisOutcome> {
    let (verify, seed) = (opts.verify, opts.seed);
    if m == 2 {
        return Err(Error::InvalidArgument(
            "m = 2 is not synthesized; use the exhaustive search for 2-part representations".into(),
        ));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m = {m} must be at least 3")));
    }
    let g0 = group.identify_g0();
    if let Some(clause) = exception(g0, m) {
        return Ok(SynthesisOutcome::Nonexistence { clause });
    }
    let (matrix, route) = match g0 {
        Some(g0) => synthesize_small(group, g0, m, seed)?,
        None => match group.minimal_generating_size()? {
            0..=2 => class_route(group, m, GroupClass::RankLe2, Route::RankLe2)?,
            3 => class_route(group, m, GroupClass::Rank3, Route::Rank3)?,
            _ => match m {
                3 => (gamma3(group)?, Route::Gamma3),
                4 => (gamma4(group)?, Route::Gamma4),
                _ if m % 2 == 1 => (LiftSpec::new(sigma3(group)?)?.lift(m)?, Route::Lift3),
                _ => (LiftSpec::new(sigma4(group)?)?.lift(m)?, Route::Lift4),
            },
        },
    };
    let verdict = if verify {
        let v = verify_matrix_with(&matrix, &AutOptions { vertex_cap: opts.vertex_cap, colors: None })?;
        if !v.is_hgr() {
            return Err(Error::Verification(format!(
                "{} witness for {} at m = {m} is not an m-HGR: {}",
                route,
                group.descriptor(),
                v.justification()
            )));
        }
        Some(v)
    } else {
        None
    };
    Ok(SynthesisOutcome::Witness { matrix, route, verdict })
}
