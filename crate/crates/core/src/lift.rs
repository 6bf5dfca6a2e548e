//! Lifting a 3-, 4- or 5-part PGSR to an m-HGR by chaining new parts.
//!
//! With base valencies `k + 1` (first parts) and `k` (last two parts), the
//! new parts `b+1..m` are linked by `{1}` at distance two, by a set `M` of
//! size `k - 1` between consecutive new parts of the appropriate parity, and
//! by `N` of size `k` between the last two parts. Every vertex then has
//! valency `k + 1`; only base vertices lie on triangles.

use alloc::format;
use alloc::vec::Vec;

use crate::aut::verify_matrix;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mcayley::ConnectionMatrix;

/// A checked lift base.
#[derive(Debug, Clone)]
pub struct LiftSpec {
    base: ConnectionMatrix,
    k: usize,
    m_set: ElemSet,
    n_set: ElemSet,
}

impl LiftSpec {
    /// Validates `base` against the lift preconditions and picks the
    /// lexicographically least `M` and `N`. Checked in order:
    /// part count, empty diagonal, `(a)`/`(b)` valency pattern, `2 <= k <= |G|`,
    /// `(c)` triangles through every base vertex, and the PGSR property.
    pub fn new(base: ConnectionMatrix) -> Result<LiftSpec> {
        let spec = Self::new_unverified(base)?;
        let verdict = verify_matrix(&spec.base)?;
        if !verdict.is_pgsr() {
            return Err(Error::Precondition(format!(
                "base is not a PGSR: |Aut| = {}, |G| = {}",
                verdict.aut_order, verdict.group_order
            )));
        }
        Ok(spec)
    }

    /// As [`LiftSpec::new`] without the automorphism computation.
    pub fn new_unverified(base: ConnectionMatrix) -> Result<LiftSpec> {
        let k = check_base_shape(&base)?;
        Ok(LiftSpec { k, m_set: ElemSet::full(k - 1), n_set: ElemSet::full(k), base })
    }

    pub fn base(&self) -> &ConnectionMatrix {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m_set(&self) -> &ElemSet {
        &self.m_set
    }

    pub fn n_set(&self) -> &ElemSet {
        &self.n_set
    }

    /// Number of base parts (3, 4 or 5).
    pub fn base_parts(&self) -> usize {
        self.base.m()
    }

    /// Lifts to `m` parts, dispatching on the base size.
    pub fn lift(&self, m: usize) -> Result<ConnectionMatrix> {
        let b = self.base_parts();
        let (min, odd) = match b {
            3 => (5, true),
            4 => (6, false),
            _ => (7, true),
        };
        if m < min || (m % 2 == 1) != odd {
            return Err(Error::Precondition(format!(
                "a {b}-part base lifts to {} m >= {min}, got m = {m}",
                if odd { "odd" } else { "even" }
            )));
        }
        // 1-based layout: M on (i, i+1) with i+1 of the base parity and
        // b+1 <= i <= m-3; {1} on (i, i+2) for b-1 <= i <= m-2.
        let group = self.base.group_arc().clone();
        let mut cm = ConnectionMatrix::empty(group, m)?;
        for i in 0..b {
            for j in i + 1..b {
                cm.set_block(i, j, *self.base.block(i, j))?;
            }
        }
        let m_start = b + 1;
        let parity = b % 2; // j = i+1 is odd for odd bases, even for b = 4
        for i in m_start..=m - 3 {
            if (i + 1) % 2 == parity {
                cm.set_block(i - 1, i, self.m_set)?;
            }
        }
        for i in b - 1..=m - 2 {
            cm.set_block(i - 1, i + 1, ElemSet::singleton(Group::IDENTITY))?;
        }
        cm.set_block(m - 2, m - 1, self.n_set)?;
        debug_assert!(cm.is_m_haar());
        Ok(cm)
    }
}

/// Checks everything but the PGSR property; returns `k`.
fn check_base_shape(base: &ConnectionMatrix) -> Result<usize> {
    let b = base.m();
    if !(3..=5).contains(&b) {
        return Err(Error::Precondition(format!("lift bases have 3, 4 or 5 parts, got {b}")));
    }
    if !base.diagonal_empty() {
        return Err(Error::Precondition("base has a nonempty diagonal set".into()));
    }
    let vals = base.part_valencies();
    let high = b - 2;
    let k = vals[b - 1];
    let pattern_ok = vals[..high].iter().all(|&v| v == k + 1) && vals[high..].iter().all(|&v| v == k);
    if !pattern_ok {
        return Err(Error::Precondition(format!(
            "(a)/(b) valency pattern: parts 1..{high} need k+1 and parts {}..{b} need k, got {vals:?}",
            high + 1
        )));
    }
    let n = base.group().order();
    if k < 2 || k > n {
        return Err(Error::Precondition(format!(
            "k = {k} outside 2..=|G| = {n}; fillers M and N need k-1 and k distinct elements"
        )));
    }
    let lg = base.build_graph();
    if let Some(v) = (0..lg.vertex_count()).find(|&v| !lg.graph.has_triangle_at(v)) {
        return Err(Error::Precondition(format!(
            "(c) no triangle through vertex ({}, {})",
            base.group().name(lg.element(v)),
            lg.part(v) + 1
        )));
    }
    Ok(k)
}

fn lift_checked(base: ConnectionMatrix, parts: usize, m: usize) -> Result<ConnectionMatrix> {
    if base.m() != parts {
        return Err(Error::Precondition(format!("expected a {parts}-part base, got {} parts", base.m())));
    }
    LiftSpec::new(base)?.lift(m)
}

/// Lift of a 3-part base to odd `m >= 5`.
pub fn lift3(base: ConnectionMatrix, m: usize) -> Result<ConnectionMatrix> {
    lift_checked(base, 3, m)
}

/// Lift of a 4-part base to even `m >= 6`.
pub fn lift4(base: ConnectionMatrix, m: usize) -> Result<ConnectionMatrix> {
    lift_checked(base, 4, m)
}

/// Lift of a 5-part base to odd `m >= 7`.
pub fn lift5(base: ConnectionMatrix, m: usize) -> Result<ConnectionMatrix> {
    lift_checked(base, 5, m)
}

/// Parts whose vertices lie on at least one triangle.
pub fn parts_with_triangles(cm: &ConnectionMatrix) -> Vec<usize> {
    let lg = cm.build_graph();
    (0..cm.m())
        .filter(|&i| (0..lg.group_order).any(|g| lg.graph.has_triangle_at(lg.vertex(g, i))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::verify_matrix;
    use crate::catalog::{lookup, Kind};
    use crate::group::G0;
    use alloc::sync::Arc;
    use alloc::vec;

    fn c6_sigma3() -> ConnectionMatrix {
        let g = Arc::new(Group::cyclic(6).unwrap());
        lookup(G0::C6, 3, Kind::Pgsr3).unwrap().matrix(&g).unwrap()
    }

    #[test]
    fn lift3_layout_m7() {
        let spec = LiftSpec::new(c6_sigma3()).unwrap();
        assert_eq!(spec.k(), 3);
        let cm = spec.lift(7).unwrap();
        let one = ElemSet::singleton(0);
        // 0-based: {1} on (1,3),(2,4),(3,5),(4,6); M on (3,4); N on (5,6)
        for (i, j) in [(1, 3), (2, 4), (3, 5), (4, 6)] {
            assert_eq!(*cm.block(i, j), one);
        }
        assert_eq!(*cm.block(3, 4), ElemSet::full(2));
        assert_eq!(*cm.block(5, 6), ElemSet::full(3));
        assert!(cm.block(4, 5).is_empty());
        assert_eq!(cm.part_valencies(), vec![4; 7]);
        assert_eq!(parts_with_triangles(&cm), vec![0, 1, 2]);
        assert!(verify_matrix(&cm).unwrap().is_hgr());
    }

    #[test]
    fn parity_rejected() {
        let spec = LiftSpec::new(c6_sigma3()).unwrap();
        assert!(spec.lift(4).is_err());
        assert!(spec.lift(6).is_err());
        assert!(lift4(c6_sigma3(), 6).is_err());
    }

    #[test]
    fn lift4_layout_m8() {
        let g = Arc::new(Group::cyclic(6).unwrap());
        let base = lookup(G0::C6, 4, Kind::Pgsr4).unwrap().matrix(&g).unwrap();
        let spec = LiftSpec::new(base).unwrap();
        let cm = spec.lift(8).unwrap();
        // 0-based: {1} on (2,4),(3,5),(4,6),(5,7); M on (4,5); N on (6,7)
        assert_eq!(*cm.block(4, 5), ElemSet::full(spec.k() - 1));
        assert_eq!(*cm.block(2, 4), ElemSet::singleton(0));
        assert_eq!(*cm.block(5, 7), ElemSet::singleton(0));
        assert!(cm.is_m_haar());
        assert_eq!(parts_with_triangles(&cm), vec![0, 1, 2, 3]);
    }

    #[test]
    fn k_bound_enforced() {
        let g = Arc::new(Group::cyclic(3).unwrap());
        let base = lookup(G0::C3, 4, Kind::Pgsr4).unwrap().matrix(&g).unwrap();
        let err = LiftSpec::new_unverified(base).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref s) if s.contains("k = 5")), "{err}");
    }
}
