//! Explicit base graphs for the small groups and the low-rank classes.
//!
//! Entries are symbolic: each block lists words in the named generators
//! (`x`, `y`, `z`), evaluated over generators found by a deterministic
//! relation search, so an entry applies to any table realizing the group.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aut::automorphisms;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Group, G0};
use crate::mcayley::ConnectionMatrix;

/// Default seed for the randomized asymmetric-graph generator.
pub const DEFAULT_SEED: u64 = 0x6d68_6772;

/// Attempts allowed to the asymmetric-graph generator.
pub const RETRY_BUDGET: u32 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    DirectHgr,
    Pgsr3,
    Pgsr4,
    Pgsr5,
}

impl Kind {
    /// Number of parts of a PGSR base (`None` for direct entries).
    pub fn base_parts(self) -> Option<usize> {
        match self {
            Kind::DirectHgr => None,
            Kind::Pgsr3 => Some(3),
            Kind::Pgsr4 => Some(4),
            Kind::Pgsr5 => Some(5),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::DirectHgr => "direct-HGR",
            Kind::Pgsr3 => "PGSR-3",
            Kind::Pgsr4 => "PGSR-4",
            Kind::Pgsr5 => "PGSR-5",
        })
    }
}

/// Which groups an entry applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupClass {
    Members(&'static [G0]),
    /// Groups with `d(G) <= 2` outside the small family; generators `(x, y)`.
    RankLe2,
    /// Groups with `d(G) = 3` outside the small family; generators `(x, y, z)`.
    Rank3,
}

impl GroupClass {
    pub fn contains(&self, g0: G0) -> bool {
        matches!(self, GroupClass::Members(list) if list.contains(&g0))
    }
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClass::Members(list) => {
                for (i, g) in list.iter().enumerate() {
                    if i > 0 {
                        f.write_str("/")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupClass::RankLe2 => f.write_str("rank<=2"),
            GroupClass::Rank3 => f.write_str("rank3"),
        }
    }
}

/// Where an entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// Transcribed verbatim from the published constructions.
    Published,
    /// Found by this crate's base search, replacing a published base that
    /// violates the lift bound `k <= |G|`.
    SearchDerived,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Published => "published",
            Origin::SearchDerived => "search-derived",
        })
    }
}

/// A block `T[i][j]` with 1-based part indices `i < j`.
pub type Block = (usize, usize, &'static [&'static str]);

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub class: GroupClass,
    pub m: usize,
    pub kind: Kind,
    pub blocks: &'static [Block],
    pub origin: Origin,
    pub citation: &'static str,
}

impl CatalogEntry {
    pub fn key(&self) -> String {
        format!("{}:m={}:{}", self.class, self.m, self.kind)
    }

    /// Builds the matrix from explicit generator values (`gens[0]` is `x`).
    pub fn matrix_with(&self, group: &Arc<Group>, gens: &[usize]) -> Result<ConnectionMatrix> {
        let mut upper = Vec::with_capacity(self.blocks.len());
        for &(i, j, words) in self.blocks {
            let mut set = ElemSet::new();
            for w in words {
                set.insert(eval_word(group, gens, w)?);
            }
            upper.push((i - 1, j - 1, set));
        }
        ConnectionMatrix::new(group.clone(), self.m, &upper, &[])
    }

    /// Builds the matrix over `group`, finding generators by relation search
    /// (for small-family entries) or from the rank-class generator rules.
    pub fn matrix(&self, group: &Arc<Group>) -> Result<ConnectionMatrix> {
        let gens = match self.class {
            GroupClass::Members(_) => {
                let g0 = group.identify_g0().ok_or_else(|| {
                    Error::InvalidArgument(format!("group {} is not a small-family member", group.descriptor()))
                })?;
                if !self.class.contains(g0) {
                    return Err(Error::InvalidArgument(format!("entry {} does not apply to {g0}", self.key())));
                }
                canonical_generators(group, g0)?
            }
            GroupClass::RankLe2 => {
                let (x, y) = rank_le2_pair(group)?;
                vec![x, y]
            }
            GroupClass::Rank3 => {
                let (x, y, z) = group.triple_with_order_ge3()?;
                vec![x, y, z]
            }
        };
        self.matrix_with(group, &gens)
    }
}

/// Evaluates a word such as `1`, `x^-1`, `x^3` or `xyz` (letters `x`, `y`,
/// `z`, each optionally followed by `^n`), multiplying left to right.
pub fn eval_word(group: &Group, gens: &[usize], word: &str) -> Result<usize> {
    let bad = || Error::InvalidArgument(format!("malformed word {word:?}"));
    if word == "1" {
        return Ok(Group::IDENTITY);
    }
    let bytes = word.as_bytes();
    let mut acc = Group::IDENTITY;
    let mut k = 0;
    while k < bytes.len() {
        let idx = match bytes[k] {
            b'x' => 0,
            b'y' => 1,
            b'z' => 2,
            _ => return Err(bad()),
        };
        let g = *gens.get(idx).ok_or_else(bad)?;
        k += 1;
        let mut exp: i64 = 1;
        if k < bytes.len() && bytes[k] == b'^' {
            k += 1;
            let start = k;
            if k < bytes.len() && bytes[k] == b'-' {
                k += 1;
            }
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            exp = word[start..k].parse().map_err(|_| bad())?;
        }
        acc = group.mul(acc, group.pow(g, exp));
    }
    Ok(acc)
}

/// The first generator tuple (in index order) satisfying the presentation
/// used by the small-family entries:
/// cyclic `x` of full order; `C2^2` and `C2^3` independent involutions;
/// `C3^2` commuting `x, y` of order 3; `D6`: `x^3 = y^2 = (xy)^2 = 1`;
/// `A4`: `x^3 = y^2 = (xy)^3 = 1`; `X27`: `x^3 = y^3 = 1` with
/// `z = [x, y] = x^-1 y^-1 x y`.
pub fn canonical_generators(group: &Group, g0: G0) -> Result<Vec<usize>> {
    let n = group.order();
    let ord = |g| group.element_order(g);
    let not_found = || Error::NotFound(format!("no generators matching the {g0} presentation"));
    match g0 {
        G0::C1 => Ok(vec![Group::IDENTITY]),
        G0::C2 | G0::C3 | G0::C4 | G0::C5 | G0::C6 => {
            (0..n).find(|&g| ord(g) == n).map(|g| vec![g]).ok_or_else(not_found)
        }
        G0::C2Sq | G0::C3Sq | G0::D6 | G0::A4 | G0::X27 => {
            for x in 1..n {
                for y in 1..n {
                    let xy = group.mul(x, y);
                    let ok = match g0 {
                        G0::C2Sq => ord(x) == 2 && ord(y) == 2 && x != y,
                        G0::C3Sq => ord(x) == 3 && ord(y) == 3 && xy == group.mul(y, x),
                        G0::D6 => ord(x) == 3 && ord(y) == 2 && ord(xy) == 2,
                        G0::A4 => ord(x) == 3 && ord(y) == 2 && ord(xy) == 3,
                        _ => ord(x) == 3 && ord(y) == 3,
                    };
                    if ok && group.generates(&[x, y]) {
                        if g0 == G0::X27 {
                            let z = group.product_of(&[group.inv(x), group.inv(y), x, y]);
                            return Ok(vec![x, y, z]);
                        }
                        return Ok(vec![x, y]);
                    }
                }
            }
            Err(not_found())
        }
        G0::C2Cube => {
            for x in 1..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        if group.generates(&[x, y, z]) {
                            return Ok(vec![x, y, z]);
                        }
                    }
                }
            }
            Err(not_found())
        }
    }
}

/// `(x, y)` for the rank-at-most-2 constructions: `(a, a^3)` for a cyclic
/// group generated by `a`, otherwise a generating pair with `|x| >= 4`.
pub fn rank_le2_pair(group: &Group) -> Result<(usize, usize)> {
    let n = group.order();
    if let Some(a) = (0..n).find(|&g| group.element_order(g) == n) {
        if n < 7 {
            return Err(Error::Precondition(format!("cyclic group of order {n} belongs to the small family")));
        }
        return Ok((a, group.pow(a, 3)));
    }
    group.pair_with_order_ge4()
}

macro_rules! entry {
    ($class:expr, $m:expr, $kind:expr, $origin:expr, $cite:expr, [$(($i:expr, $j:expr, [$($w:expr),*])),* $(,)?]) => {
        CatalogEntry {
            class: $class,
            m: $m,
            kind: $kind,
            origin: $origin,
            citation: $cite,
            blocks: &[$(($i, $j, &[$($w),*])),*],
        }
    };
}

use GroupClass::{Members, Rank3, RankLe2};
use Kind::{DirectHgr, Pgsr3, Pgsr4, Pgsr5};
use Origin::{Published, SearchDerived};

const C2_ONLY: &[G0] = &[G0::C2];
const C3_ONLY: &[G0] = &[G0::C3];
const C6_ONLY: &[G0] = &[G0::C6];
const C456: &[G0] = &[G0::C4, G0::C5, G0::C6];
const C2SQ: &[G0] = &[G0::C2Sq];
const C2CUBE: &[G0] = &[G0::C2Cube];
const RANK2_THREE: &[G0] = &[G0::C3Sq, G0::A4, G0::X27];
const RANK2_FOUR: &[G0] = &[G0::C3Sq, G0::D6, G0::A4, G0::X27];

const CYCLIC_SMALL: &str = "cyclic groups C1-C6";
const KLEIN: &str = "elementary abelian 2-groups of rank 2 and 3";
const RANK2_SMALL: &str = "C3^2, D6, A4 and the extraspecial group of order 27";
const RANK_LE2: &str = "groups with d(G) <= 2 outside the small family";
const RANK_3: &str = "groups with d(G) = 3 outside the small family";

/// Every entry, in a fixed order.
pub static ENTRIES: &[CatalogEntry] = &[
    entry!(Members(C2_ONLY), 6, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 6, ["1", "x"]), (3, 5, ["1", "x"]), (4, 6, ["1", "x"]),
        (1, 5, ["1"]), (2, 3, ["1"]), (2, 5, ["1"]), (3, 6, ["1"]), (4, 5, ["1"]),
        (2, 4, ["x"]), (3, 4, ["x"]),
    ]),
    entry!(Members(C2_ONLY), 7, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]),
        (1, 3, ["x"]), (1, 7, ["x"]), (2, 3, ["x"]), (4, 7, ["x"]), (5, 6, ["x"]), (5, 7, ["x"]), (6, 7, ["x"]),
        (2, 6, ["1"]), (3, 4, ["1"]), (3, 5, ["1"]), (4, 5, ["1"]), (4, 6, ["1"]),
    ]),
    entry!(Members(C2_ONLY), 8, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]),
        (1, 7, ["1"]), (1, 8, ["1"]), (3, 4, ["1"]), (3, 8, ["1"]), (4, 5, ["1"]), (4, 6, ["1"]), (5, 8, ["1"]),
        (2, 3, ["x"]), (2, 6, ["x"]), (3, 5, ["x"]), (4, 7, ["x"]), (5, 6, ["x"]), (6, 7, ["x"]), (7, 8, ["x"]),
    ]),
    entry!(Members(C2_ONLY), 9, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (8, 9, ["1", "x"]),
        (1, 7, ["1"]), (1, 9, ["1"]), (3, 4, ["1"]), (3, 8, ["1"]), (4, 5, ["1"]), (4, 6, ["1"]), (5, 9, ["1"]),
        (2, 3, ["x"]), (2, 6, ["x"]), (3, 5, ["x"]), (4, 7, ["x"]), (5, 6, ["x"]), (6, 7, ["x"]), (7, 8, ["x"]),
    ]),
    entry!(Members(C3_ONLY), 5, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x^-1"]), (4, 5, ["1", "x^-1"]), (2, 4, ["1"]),
        (2, 5, ["x"]), (3, 4, ["x"]), (3, 5, ["x"]),
    ]),
    entry!(Members(C3_ONLY), 4, Pgsr4, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (1, 4, ["1", "x"]), (2, 3, ["1", "x"]),
        (2, 4, ["x", "x^-1"]), (3, 4, ["x"]),
    ]),
    entry!(Members(C3_ONLY), 5, Pgsr5, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (2, 3, ["1", "x"]), (4, 5, ["1", "x"]),
        (1, 4, ["1"]), (1, 5, ["1"]), (2, 4, ["x^-1"]), (3, 4, ["x^-1"]), (2, 5, ["x"]), (3, 5, ["x"]),
    ]),
    entry!(Members(C6_ONLY), 3, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x^3"]), (1, 3, ["1", "x^-1"]), (2, 3, ["x", "x^-1"]),
    ]),
    entry!(Members(C456), 4, DirectHgr, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["x"]),
        (2, 4, ["x", "x^-1"]), (3, 4, ["x", "x^-1"]),
    ]),
    entry!(Members(C456), 3, Pgsr3, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["x", "x^-1"]), (2, 3, ["1"]),
    ]),
    entry!(Members(C456), 4, Pgsr4, Published, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["x"]),
        (2, 4, ["x", "x^2"]), (3, 4, ["x^-1"]),
    ]),
    entry!(Members(C2SQ), 4, DirectHgr, Published, KLEIN, [
        (1, 2, ["1", "x"]), (2, 3, ["1", "x"]), (3, 4, ["1", "x"]), (1, 3, ["x"]),
        (1, 4, ["x", "y"]), (2, 4, ["y"]),
    ]),
    entry!(Members(C2SQ), 5, DirectHgr, Published, KLEIN, [
        (1, 2, ["1", "x"]), (1, 3, ["x", "y"]), (2, 3, ["1"]), (3, 5, ["1"]), (2, 4, ["y"]),
        (4, 5, ["1", "x", "y"]),
    ]),
    entry!(Members(C2SQ), 4, Pgsr4, Published, KLEIN, [
        (1, 2, ["1", "x"]), (2, 3, ["1", "x"]), (1, 3, ["x"]), (3, 4, ["x"]),
        (1, 4, ["x", "y"]), (2, 4, ["y"]),
    ]),
    entry!(Members(C2SQ), 5, Pgsr5, Published, KLEIN, [
        (1, 2, ["1", "x", "y"]), (1, 3, ["1", "x", "y"]), (4, 5, ["1", "x", "y"]),
        (2, 3, ["x"]), (2, 4, ["x"]), (2, 5, ["xy"]), (3, 4, ["y"]), (3, 5, ["y"]),
    ]),
    entry!(Members(C2CUBE), 3, DirectHgr, Published, KLEIN, [
        (1, 2, ["1", "x", "z", "xy"]), (1, 3, ["z", "xy", "xz", "xyz"]), (2, 3, ["y", "z", "xy", "xz"]),
    ]),
    entry!(Members(C2CUBE), 4, DirectHgr, Published, KLEIN, [
        (1, 2, ["1", "x"]), (1, 3, ["x", "z"]), (1, 4, ["x"]), (2, 3, ["x"]),
        (2, 4, ["x", "y"]), (3, 4, ["x", "z"]),
    ]),
    entry!(Members(C2CUBE), 3, Pgsr3, Published, KLEIN, [
        (1, 2, ["1", "x", "y"]), (1, 3, ["1", "xz", "xyz"]), (2, 3, ["xz", "yz"]),
    ]),
    entry!(Members(C2CUBE), 4, Pgsr4, Published, KLEIN, [
        (1, 2, ["1", "x"]), (1, 3, ["x", "z"]), (1, 4, ["x"]), (2, 3, ["x"]),
        (2, 4, ["x", "y"]), (3, 4, ["y"]),
    ]),
    entry!(Members(RANK2_THREE), 3, DirectHgr, Published, RANK2_SMALL, [
        (1, 2, ["1", "x", "y"]), (1, 3, ["1", "x", "xy"]), (2, 3, ["1", "x^-1", "yx"]),
    ]),
    entry!(Members(RANK2_FOUR), 4, DirectHgr, Published, RANK2_SMALL, [
        (1, 2, ["1", "y"]), (1, 3, ["1", "x"]), (2, 4, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["1"]),
        (3, 4, ["x", "y"]),
    ]),
    entry!(Members(RANK2_FOUR), 3, Pgsr3, Published, RANK2_SMALL, [
        (1, 2, ["1", "x", "y"]), (1, 3, ["1", "x", "xy"]), (2, 3, ["1", "yx"]),
    ]),
    entry!(Members(RANK2_FOUR), 4, Pgsr4, Published, RANK2_SMALL, [
        (1, 2, ["1", "y"]), (1, 3, ["1", "x"]), (2, 4, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["1"]),
        (3, 4, ["x"]),
    ]),
    entry!(RankLe2, 3, DirectHgr, Published, RANK_LE2, [
        (1, 2, ["1", "x", "y^-1"]), (1, 3, ["1", "x", "x^-1"]), (2, 3, ["x", "x^-1", "y"]),
    ]),
    entry!(RankLe2, 4, DirectHgr, Published, RANK_LE2, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (2, 4, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["1"]),
        (3, 4, ["x", "y"]),
    ]),
    entry!(RankLe2, 3, Pgsr3, Published, RANK_LE2, [
        (1, 2, ["1", "x", "y^-1"]), (1, 3, ["1", "x", "x^-1"]), (2, 3, ["x", "x^-1"]),
    ]),
    entry!(RankLe2, 4, Pgsr4, Published, RANK_LE2, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (2, 4, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["1"]),
        (3, 4, ["y"]),
    ]),
    entry!(Rank3, 3, DirectHgr, Published, RANK_3, [
        (1, 2, ["1", "x", "x^-1"]), (1, 3, ["1", "y^-1", "z"]), (2, 3, ["1", "x^-1", "z"]),
    ]),
    entry!(Rank3, 4, DirectHgr, Published, RANK_3, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "x"]), (1, 4, ["1"]), (2, 3, ["1"]), (2, 4, ["1", "y"]),
        (3, 4, ["y", "z"]),
    ]),
    entry!(Rank3, 3, Pgsr3, Published, RANK_3, [
        (1, 2, ["1", "x", "y"]), (1, 3, ["1", "y", "z"]), (2, 3, ["1", "z"]),
    ]),
    entry!(Rank3, 4, Pgsr4, Published, RANK_3, [
        (1, 2, ["1", "x"]), (1, 3, ["1", "z"]), (1, 4, ["1"]), (2, 3, ["x^-1"]), (2, 4, ["1", "y"]),
        (3, 4, ["x"]),
    ]),
    // Replacement bases (see `Origin::SearchDerived`), k = 3.
    entry!(Members(C3_ONLY), 4, Pgsr4, SearchDerived, CYCLIC_SMALL, [
        (1, 2, ["1", "x"]), (1, 3, ["1"]), (1, 4, ["1"]), (2, 3, ["1"]), (2, 4, ["x"]), (3, 4, ["1"]),
    ]),
    entry!(Members(C3_ONLY), 5, Pgsr5, SearchDerived, CYCLIC_SMALL, [
        (1, 2, ["1"]), (1, 3, ["1"]), (1, 5, ["1", "x"]), (2, 3, ["x"]), (2, 4, ["1"]), (2, 5, ["1"]),
        (3, 4, ["1", "x^-1"]),
    ]),
    entry!(Members(C2SQ), 5, Pgsr5, SearchDerived, KLEIN, [
        (1, 2, ["1"]), (1, 3, ["1"]), (1, 5, ["1", "x"]), (2, 3, ["x"]), (2, 4, ["1"]), (2, 5, ["1"]),
        (3, 4, ["x", "y"]),
    ]),
];

/// The first published entry for `(g0, m, kind)`.
pub fn lookup(g0: G0, m: usize, kind: Kind) -> Option<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.origin == Origin::Published && e.class.contains(g0) && e.m == m && e.kind == kind)
}

/// All entries for `(g0, m, kind)`, published first.
pub fn lookup_all(g0: G0, m: usize, kind: Kind) -> Vec<&'static CatalogEntry> {
    ENTRIES.iter().filter(|e| e.class.contains(g0) && e.m == m && e.kind == kind).collect()
}

/// The rank-class entry for `m` and `kind`.
pub fn lookup_class(class: GroupClass, m: usize, kind: Kind) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.class == class && e.m == m && e.kind == kind)
}

/// A connected 4-regular graph on `m >= 10` vertices with trivial
/// automorphism group, from the configuration model with a seeded generator.
pub fn asymmetric_regular_graph(m: usize, seed: u64) -> Result<Graph> {
    if m < 10 {
        return Err(Error::Precondition(format!(
            "asymmetric 4-regular graphs exist only for m >= 10 (got {m})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..4 * m).map(|p| p / 4).collect();
    'attempt: for _ in 0..RETRY_BUDGET {
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(2 * m);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || edges.iter().any(|&(a, b)| (a, b) == (u.min(v), u.max(v))) {
                continue 'attempt;
            }
            edges.push((u.min(v), u.max(v)));
        }
        let g = Graph::from_edges(m, edges)?;
        if g.is_connected() && automorphisms(&g)?.order_is(1) {
            return Ok(g);
        }
    }
    Err(Error::RetryBudget { seed, attempts: RETRY_BUDGET })
}

/// `T[i][j] = {1}` exactly on the edges of `template`, over `group`.
pub fn template_matrix(group: Arc<Group>, template: &Graph) -> Result<ConnectionMatrix> {
    let upper: Vec<_> = template.edges().map(|(u, v)| (u, v, ElemSet::singleton(Group::IDENTITY))).collect();
    ConnectionMatrix::new(group, template.vertex_count(), &upper, &[])
}

/// An m-HGR of the trivial group for `m >= 10`.
pub fn c1_large_m(m: usize, seed: u64) -> Result<ConnectionMatrix> {
    let g = asymmetric_regular_graph(m, seed)?;
    template_matrix(Arc::new(Group::cyclic(1)?), &g)
}

/// An m-HGR of `C2` for `m >= 10`: two disjoint copies of an asymmetric
/// 4-regular graph.
pub fn c2_large_m(m: usize, seed: u64) -> Result<ConnectionMatrix> {
    let g = asymmetric_regular_graph(m, seed)?;
    template_matrix(Arc::new(Group::cyclic(2)?), &g)
}
