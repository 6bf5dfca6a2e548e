//! Certificates: self-contained JSON records of a verdict that can be
//! re-checked from scratch.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use mhgr_core::aut::{verify_matrix_with, AutOptions, Verdict};
use mhgr_core::construct::{exception, SynthesisOutcome};
use mhgr_core::search::{SearchMode, SearchReport};
use mhgr_core::{ConnectionMatrix, Group};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{entries_of, matrix_from_entries, Entry, GroupRef};
use crate::parallel::{run_search, SearchRequest};

pub const SCHEMA: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    #[serde(rename = "HGR")]
    Hgr,
    #[serde(rename = "PGSR")]
    Pgsr,
    #[serde(rename = "nonexistence-search")]
    NonexistenceSearch,
    #[serde(rename = "nonexistence-classified")]
    NonexistenceClassified,
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertKind::Hgr => "HGR",
            CertKind::Pgsr => "PGSR",
            CertKind::NonexistenceSearch => "nonexistence-search",
            CertKind::NonexistenceClassified => "nonexistence-classified",
        })
    }
}

/// An automorphism-group order: a JSON number when it fits in 64 bits,
/// a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutOrder {
    Small(u64),
    Big(String),
}

impl AutOrder {
    pub fn from_decimal(s: String) -> AutOrder {
        s.parse().map(AutOrder::Small).unwrap_or(AutOrder::Big(s))
    }

    fn decimal(&self) -> String {
        match self {
            AutOrder::Small(n) => n.to_string(),
            AutOrder::Big(s) => s.clone(),
        }
    }
}

impl fmt::Display for AutOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationEvidence {
    pub aut_order: AutOrder,
    pub group_order: usize,
    pub regular: bool,
    pub valency: Option<usize>,
    pub diagonal_empty: bool,
    pub orbits_are_parts: bool,
}

impl VerificationEvidence {
    pub fn of(v: &Verdict) -> VerificationEvidence {
        VerificationEvidence {
            aut_order: AutOrder::from_decimal(v.aut_order.to_string()),
            group_order: v.group_order,
            regular: v.regular,
            valency: v.valency,
            diagonal_empty: v.diagonal_empty,
            orbits_are_parts: v.orbits_are_parts,
        }
    }

    pub fn is_hgr(&self) -> bool {
        self.is_pgsr() && self.regular && self.orbits_are_parts
    }

    pub fn is_pgsr(&self) -> bool {
        self.diagonal_empty && self.aut_order == AutOrder::Small(self.group_order as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchEvidence {
    /// `subset-enumeration` or, for the trivial group, `regular-graph-scan`.
    pub method: String,
    pub mode: String,
    pub candidates_examined: u64,
    pub regular_candidates: u64,
    pub witnesses: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifiedEvidence {
    pub identified_as: String,
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Evidence {
    Verification(VerificationEvidence),
    Search(SearchEvidence),
    Classified(ClassifiedEvidence),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema: u32,
    pub tool_version: String,
    pub group: GroupRef,
    pub m: usize,
    pub kind: CertKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Entry>>,
    pub evidence: Evidence,
}

fn header(group: &Group, m: usize, kind: CertKind) -> Certificate {
    Certificate {
        schema: SCHEMA,
        tool_version: TOOL_VERSION.to_string(),
        group: GroupRef::of(group),
        m,
        kind,
        route: None,
        matrix: None,
        evidence: Evidence::Classified(ClassifiedEvidence { identified_as: String::new(), clause: String::new() }),
    }
}

/// Certificate of a verified matrix; fails unless it is an HGR or a PGSR.
pub fn emit_verified(cm: &ConnectionMatrix, verdict: &Verdict, route: Option<&str>) -> Result<Certificate> {
    let kind = if verdict.is_hgr() {
        CertKind::Hgr
    } else if verdict.is_pgsr() {
        CertKind::Pgsr
    } else {
        return Err(Error::Format(format!("matrix is neither an HGR nor a PGSR: {}", verdict.justification())));
    };
    let mut c = header(cm.group(), cm.m(), kind);
    c.route = route.map(str::to_string);
    c.matrix = Some(entries_of(cm));
    c.evidence = Evidence::Verification(VerificationEvidence::of(verdict));
    Ok(c)
}

/// Certificate of a synthesis outcome. Witnesses must carry a verdict.
pub fn emit(group: &Group, m: usize, outcome: &SynthesisOutcome) -> Result<Certificate> {
    match outcome {
        SynthesisOutcome::Witness { matrix, route, verdict } => {
            let v = verdict
                .as_ref()
                .ok_or_else(|| Error::Format("emit requires a verified witness; synthesize with verification".into()))?;
            emit_verified(matrix, v, Some(route.tag()))
        }
        SynthesisOutcome::Nonexistence { clause } => {
            let mut c = header(group, m, CertKind::NonexistenceClassified);
            let g0 = group.identify_g0().map(|g| g.to_string()).unwrap_or_default();
            c.evidence = Evidence::Classified(ClassifiedEvidence { identified_as: g0, clause: clause.tag().to_string() });
            Ok(c)
        }
    }
}

pub fn search_evidence(report: &SearchReport) -> SearchEvidence {
    SearchEvidence {
        method: if report.group_order == 1 { "regular-graph-scan" } else { "subset-enumeration" }.to_string(),
        mode: report.mode.tag().to_string(),
        candidates_examined: report.candidates_examined,
        regular_candidates: report.regular_candidates.min(u64::MAX as u128) as u64,
        witnesses: report.witnesses.len(),
    }
}

/// Certificate of a completed search: the first witness, or nonexistence.
/// Nonexistence certificates need a full enumeration.
pub fn emit_search(group: &Group, report: &SearchReport, opts: &AutOptions) -> Result<Certificate> {
    if let Some(w) = report.witnesses.first() {
        let v = verify_matrix_with(w, opts)?;
        return emit_verified(w, &v, Some("search"));
    }
    let mut c = header(group, report.m, CertKind::NonexistenceSearch);
    c.evidence = Evidence::Search(search_evidence(report));
    Ok(c)
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let c: Certificate = serde_json::from_str(text)?;
        if c.schema != SCHEMA {
            return Err(Error::Format(format!("unsupported certificate schema {}", c.schema)));
        }
        Ok(c)
    }

    pub fn matrix_in(&self, base: Option<&Path>) -> Result<Option<ConnectionMatrix>> {
        match &self.matrix {
            None => Ok(None),
            Some(entries) => {
                let g = Arc::new(self.group.build_in(base)?);
                Ok(Some(matrix_from_entries(g, self.m, entries)?))
            }
        }
    }
}

/// A field whose recomputed value differs from the certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub field: &'static str,
    pub claimed: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "field \"{}\": certificate has {}, recomputed {}", self.field, self.claimed, self.actual)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Reverification {
    pub mismatches: Vec<Mismatch>,
}

impl Reverification {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check<T: PartialEq + fmt::Debug>(&mut self, field: &'static str, claimed: &T, actual: &T) {
        if claimed != actual {
            self.mismatches.push(Mismatch { field, claimed: format!("{claimed:?}"), actual: format!("{actual:?}") });
        }
    }
}

/// Recomputes every evidence field from the certificate's own contents.
pub fn reverify(cert: &Certificate, opts: &AutOptions) -> Result<Reverification> {
    reverify_in(cert, opts, None)
}

pub fn reverify_in(cert: &Certificate, opts: &AutOptions, base: Option<&Path>) -> Result<Reverification> {
    let group = Arc::new(cert.group.build_in(base)?);
    let mut r = Reverification::default();
    match (&cert.kind, &cert.evidence) {
        (CertKind::Hgr | CertKind::Pgsr, Evidence::Verification(ev)) => {
            let entries = cert.matrix.as_ref().ok_or_else(|| Error::Format("witness certificate without matrix".into()))?;
            let cm = matrix_from_entries(group.clone(), cert.m, entries)?;
            let actual = VerificationEvidence::of(&verify_matrix_with(&cm, opts)?);
            r.check("aut_order", &ev.aut_order, &actual.aut_order);
            r.check("group_order", &ev.group_order, &actual.group_order);
            r.check("regular", &ev.regular, &actual.regular);
            r.check("valency", &ev.valency, &actual.valency);
            r.check("diagonal_empty", &ev.diagonal_empty, &actual.diagonal_empty);
            r.check("orbits_are_parts", &ev.orbits_are_parts, &actual.orbits_are_parts);
            let kind = if actual.is_hgr() {
                Some(CertKind::Hgr)
            } else if actual.is_pgsr() {
                Some(CertKind::Pgsr)
            } else {
                None
            };
            r.check("kind", &Some(cert.kind), &kind);
        }
        (CertKind::NonexistenceSearch, Evidence::Search(ev)) => {
            let mode = match ev.mode.as_str() {
                "exhaustive" => SearchMode::Exhaustive,
                "normalized" => SearchMode::Normalized,
                other => return Err(Error::Format(format!("unknown search mode {other:?}"))),
            };
            let req = SearchRequest { mode, first_witness: false, workers: 1, vertex_cap: opts.vertex_cap, ..SearchRequest::default() };
            let report = run_search(group.clone(), cert.m, &req)?;
            let actual = search_evidence(&report);
            r.check("method", &ev.method, &actual.method);
            r.check("candidates_examined", &ev.candidates_examined, &actual.candidates_examined);
            r.check("regular_candidates", &ev.regular_candidates, &actual.regular_candidates);
            r.check("witnesses", &ev.witnesses, &actual.witnesses);
        }
        (CertKind::NonexistenceClassified, Evidence::Classified(ev)) => {
            let g0 = group.identify_g0();
            r.check("identified_as", &ev.identified_as, &g0.map(|g| g.to_string()).unwrap_or_default());
            let clause = exception(g0, cert.m).map(|c| c.tag().to_string()).unwrap_or_default();
            r.check("clause", &ev.clause, &clause);
        }
        (kind, _) => return Err(Error::Format(format!("evidence does not match certificate kind {kind}"))),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mhgr_core::construct::synthesize;

    fn c6() -> Arc<Group> {
        Arc::new(Group::cyclic(6).unwrap())
    }

    #[test]
    fn witness_round_trip_and_tamper() {
        let g = c6();
        let out = synthesize(&g, 3, true).unwrap();
        let cert = emit(&g, 3, &out).unwrap();
        assert_eq!(cert.kind, CertKind::Hgr);
        let parsed = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(parsed, cert);
        assert!(reverify(&parsed, &AutOptions::default()).unwrap().ok());

        let tampered = cert.to_json().replace("\"aut_order\": 6", "\"aut_order\": 12");
        let bad = Certificate::from_json(&tampered).unwrap();
        let r = reverify(&bad, &AutOptions::default()).unwrap();
        assert!(!r.ok());
        assert_eq!(r.mismatches[0].field, "aut_order");
    }

    #[test]
    fn unverified_witness_is_refused() {
        let g = c6();
        let out = synthesize(&g, 3, false).unwrap();
        assert!(emit(&g, 3, &out).is_err());
    }

    #[test]
    fn classified_nonexistence() {
        let g = Arc::new(Group::dihedral(6).unwrap());
        let cert = emit(&g, 3, &synthesize(&g, 3, true).unwrap()).unwrap();
        assert_eq!(cert.kind, CertKind::NonexistenceClassified);
        match &cert.evidence {
            Evidence::Classified(ev) => assert_eq!(ev.clause, "(a)"),
            other => panic!("{other:?}"),
        }
        assert!(cert.matrix.is_none());
        assert!(reverify(&cert, &AutOptions::default()).unwrap().ok());
        let moved = Certificate { m: 4, ..cert };
        let r = reverify(&moved, &AutOptions::default()).unwrap();
        assert_eq!(r.mismatches[0].field, "clause");
    }

    #[test]
    fn key_order_is_stable() {
        let g = c6();
        let json = emit(&g, 3, &synthesize(&g, 3, true).unwrap()).unwrap().to_json();
        let keys = ["\"schema\"", "\"tool_version\"", "\"group\"", "\"m\"", "\"kind\"", "\"route\"", "\"matrix\"", "\"evidence\""];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
    }
}
