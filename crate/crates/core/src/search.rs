//! Exhaustive search over connection matrices with prescribed part valencies.
//!
//! Candidates are enumerated by size profile first (block sizes `s_ij` with
//! the required row sums) and then by subsets of each block in
//! lexicographic order. Each profile's first block is split into work items
//! so that the enumeration can be sharded across workers; merging item
//! results in item order reproduces the single-worker report.
//!
//! Normalized mode forces the identity into every block of a spanning
//! forest of the nonempty blocks. Relabeling `(g, i) -> (b_i g, i)` maps the
//! graph of `T` isomorphically onto the graph of `T'_ij = b_j T_ij b_i^-1`,
//! and choosing the `b_i` along the forest puts the identity into each
//! forest block, so every isomorphism class keeps a representative.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::aut::{automorphisms_with, AutOptions};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::Group;
use crate::mcayley::ConnectionMatrix;

/// Default limit on the number of candidates a search may enumerate.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Normalized,
}

impl SearchMode {
    pub fn tag(self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Normalized => "normalized",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which part valencies a candidate must have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valencies {
    /// All parts equal (m-Haar).
    Regular,
    /// Exact per-part valencies.
    Pattern(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub mode: SearchMode,
    pub first_witness: bool,
    pub budget: u128,
    pub valencies: Valencies,
    /// Require a triangle through every vertex (lift-base condition).
    pub require_triangles: bool,
    pub vertex_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::Exhaustive,
            first_witness: false,
            budget: DEFAULT_BUDGET,
            valencies: Valencies::Regular,
            require_triangles: false,
            vertex_cap: crate::aut::DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub group_order: usize,
    pub group: String,
    pub m: usize,
    pub mode: SearchMode,
    /// Candidates whose automorphism group was computed.
    pub candidates_examined: u64,
    /// Size of the filtered candidate space.
    pub regular_candidates: u128,
    pub witnesses: Vec<ConnectionMatrix>,
    /// Filled in by callers that can measure time.
    pub wall_time_ms: Option<u64>,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// One shard: a size profile with a fixed subset for its first nonempty block.
#[derive(Debug, Clone, Copy)]
pub struct WorkItem {
    pub profile: usize,
    pub first_choice: u64,
}

/// The enumeration plan for `(G, m)`.
#[derive(Debug, Clone)]
pub struct SearchPlan {
    group: Arc<Group>,
    m: usize,
    opts: SearchOptions,
    pairs: Vec<(usize, usize)>,
    profiles: Vec<Profile>,
    items: Vec<WorkItem>,
    total: u128,
}

#[derive(Debug, Clone)]
struct Profile {
    sizes: Vec<usize>,
    /// Per block: identity forced (normalized forest block).
    forced: Vec<bool>,
}

/// Result of running one work item.
#[derive(Debug, Clone, Default)]
pub struct ItemResult {
    pub index: usize,
    pub examined: u64,
    pub witnesses: Vec<ConnectionMatrix>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

impl SearchPlan {
    pub fn new(group: Arc<Group>, m: usize, opts: SearchOptions) -> Result<SearchPlan> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("search needs m >= 2, got {m}")));
        }
        if let Valencies::Pattern(p) = &opts.valencies {
            if p.len() != m {
                return Err(Error::InvalidArgument(format!("valency pattern has {} entries, m = {m}", p.len())));
            }
        }
        let n = group.order();
        if n * m > opts.vertex_cap {
            return Err(Error::Capacity {
                what: "search graph vertex count",
                limit: opts.vertex_cap as u128,
                requested: (n * m) as u128,
            });
        }
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        let mut profiles = Vec::new();
        let max_row = n * (m - 1);
        match &opts.valencies {
            Valencies::Regular => {
                for k in 0..=max_row {
                    enumerate_profiles(m, n, &pairs, &vec![k; m], &mut profiles);
                }
            }
            Valencies::Pattern(p) => enumerate_profiles(m, n, &pairs, p, &mut profiles),
        }
        let profiles: Vec<Profile> = profiles
            .into_iter()
            .map(|sizes| {
                let forced = match opts.mode {
                    SearchMode::Exhaustive => vec![false; sizes.len()],
                    SearchMode::Normalized => spanning_forest(m, &pairs, &sizes),
                };
                Profile { sizes, forced }
            })
            .collect();
        let mut total: u128 = 0;
        let mut items = Vec::new();
        for (pi, p) in profiles.iter().enumerate() {
            let counts: Vec<u128> = p
                .sizes
                .iter()
                .zip(&p.forced)
                .map(|(&s, &f)| if f { binomial(n - 1, s - 1) } else { binomial(n, s) })
                .collect();
            total += counts.iter().product::<u128>();
            if total > opts.budget {
                return Err(Error::Capacity {
                    what: "search candidates",
                    limit: opts.budget,
                    requested: full_space_size(&profiles, n),
                });
            }
            match p.sizes.iter().position(|&s| s > 0) {
                Some(b) => {
                    for c in 0..counts[b] as u64 {
                        items.push(WorkItem { profile: pi, first_choice: c });
                    }
                }
                None => items.push(WorkItem { profile: pi, first_choice: 0 }),
            }
        }
        Ok(SearchPlan { group, m, opts, pairs, profiles, items, total })
    }

    pub fn items(&self) -> &[WorkItem] {
        &self.items
    }

    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    pub fn total_candidates(&self) -> u128 {
        self.total
    }

    pub fn options(&self) -> &SearchOptions {
        &self.opts
    }

    /// Enumerates the candidates of item `index`, stopping after the first
    /// witness when `first_witness` is set.
    pub fn run_item(&self, index: usize) -> Result<ItemResult> {
        let item = self.items[index];
        let p = &self.profiles[item.profile];
        let n = self.group.order();
        let mut result = ItemResult { index, ..ItemResult::default() };
        let first_block = p.sizes.iter().position(|&s| s > 0);
        // candidate subsets per block
        let choices: Vec<Vec<ElemSet>> = p
            .sizes
            .iter()
            .zip(&p.forced)
            .enumerate()
            .map(|(b, (&s, &f))| {
                let all = subsets(n, s, f);
                if Some(b) == first_block {
                    vec![all[item.first_choice as usize]]
                } else {
                    all
                }
            })
            .collect();
        let mut cursor = vec![0usize; choices.len()];
        let aut_opts = AutOptions { vertex_cap: self.opts.vertex_cap, colors: None };
        loop {
            let upper: Vec<(usize, usize, ElemSet)> = self
                .pairs
                .iter()
                .zip(&cursor)
                .enumerate()
                .map(|(b, (&(i, j), &c))| (i, j, choices[b][c]))
                .collect();
            let cm = ConnectionMatrix::new(self.group.clone(), self.m, &upper, &[])?;
            result.examined += 1;
            if self.is_witness(&cm, &aut_opts)? {
                result.witnesses.push(cm);
                if self.opts.first_witness {
                    return Ok(result);
                }
            }
            // odometer, last block fastest
            let mut b = choices.len();
            loop {
                if b == 0 {
                    return Ok(result);
                }
                b -= 1;
                cursor[b] += 1;
                if cursor[b] < choices[b].len() {
                    break;
                }
                cursor[b] = 0;
            }
        }
    }

    fn is_witness(&self, cm: &ConnectionMatrix, opts: &AutOptions) -> Result<bool> {
        let lg = cm.build_graph();
        if self.opts.require_triangles && !(0..lg.vertex_count()).all(|v| lg.graph.has_triangle_at(v)) {
            return Ok(false);
        }
        let aut = automorphisms_with(&lg.graph, opts)?;
        Ok(aut.order_is(self.group.order()))
    }

    /// Merges item results (in any order) into a report. With
    /// `first_witness`, only items up to the first item holding a witness
    /// count, which makes the report independent of scheduling.
    pub fn merge(&self, mut results: Vec<ItemResult>) -> SearchReport {
        results.sort_by_key(|r| r.index);
        let mut report = SearchReport {
            group_order: self.group.order(),
            group: format!("{}", self.group.descriptor()),
            m: self.m,
            mode: self.opts.mode,
            candidates_examined: 0,
            regular_candidates: self.total,
            witnesses: Vec::new(),
            wall_time_ms: None,
        };
        for r in results {
            report.candidates_examined += r.examined;
            report.witnesses.extend(r.witnesses);
            if self.opts.first_witness && report.found() {
                report.witnesses.truncate(1);
                break;
            }
        }
        report
    }

    /// Runs every item sequentially.
    pub fn run(&self) -> Result<SearchReport> {
        let mut results = Vec::new();
        for i in 0..self.items.len() {
            let r = self.run_item(i)?;
            let hit = !r.witnesses.is_empty();
            results.push(r);
            if hit && self.opts.first_witness {
                break;
            }
        }
        Ok(self.merge(results))
    }
}

fn full_space_size(profiles: &[Profile], n: usize) -> u128 {
    profiles
        .iter()
        .map(|p| {
            p.sizes
                .iter()
                .zip(&p.forced)
                .map(|(&s, &f)| if f { binomial(n - 1, s - 1) } else { binomial(n, s) })
                .fold(1u128, |a, b| a.saturating_mul(b))
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// All `s`-subsets of `0..n` in lexicographic order (with `0` forced when `forced`).
fn subsets(n: usize, s: usize, forced: bool) -> Vec<ElemSet> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    let (start, need) = if forced {
        cur.push(0);
        (1, s - 1)
    } else {
        (0, s)
    };
    fn rec(n: usize, start: usize, need: usize, cur: &mut Vec<usize>, out: &mut Vec<ElemSet>) {
        if need == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        for e in start..=n - need {
            cur.push(e);
            rec(n, e + 1, need - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, start, need, &mut cur, &mut out);
    out
}

/// Block-size vectors (over `pairs`) with row sums equal to `target`.
fn enumerate_profiles(m: usize, n: usize, pairs: &[(usize, usize)], target: &[usize], out: &mut Vec<Vec<usize>>) {
    fn rec(
        b: usize,
        m: usize,
        n: usize,
        pairs: &[(usize, usize)],
        target: &[usize],
        rows: &mut [usize],
        sizes: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if b == pairs.len() {
            if rows.iter().zip(target).all(|(a, t)| a == t) {
                out.push(sizes.clone());
            }
            return;
        }
        let (i, j) = pairs[b];
        let cap = n.min(target[i] - rows[i]).min(target[j] - rows[j]);
        for s in 0..=cap {
            rows[i] += s;
            rows[j] += s;
            // row i is complete after its last pair (i, m-1)
            let complete = j == m - 1 && rows[i] != target[i];
            if !complete {
                sizes.push(s);
                rec(b + 1, m, n, pairs, target, rows, sizes, out);
                sizes.pop();
            }
            rows[i] -= s;
            rows[j] -= s;
        }
    }
    let mut rows = vec![0; m];
    rec(0, m, n, pairs, target, &mut rows, &mut Vec::new(), out);
}

/// Greedy spanning forest (in pair order) of the nonempty blocks.
fn spanning_forest(m: usize, pairs: &[(usize, usize)], sizes: &[usize]) -> Vec<bool> {
    let mut comp: Vec<usize> = (0..m).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while c[x] != x {
            c[x] = c[c[x]];
            x = c[x];
        }
        x
    }
    pairs
        .iter()
        .zip(sizes)
        .map(|(&(i, j), &s)| {
            if s == 0 {
                return false;
            }
            let (a, b) = (find(&mut comp, i), find(&mut comp, j));
            if a == b {
                false
            } else {
                comp[a] = b;
                true
            }
        })
        .collect()
}

/// Decides whether `(G, m)` has an m-HGR by enumerating every regular
/// m-Haar connection matrix (or every normalized one).
pub fn decide_existence(group: Arc<Group>, m: usize, mode: SearchMode, first_witness: bool) -> Result<SearchReport> {
    let opts = SearchOptions { mode, first_witness, ..SearchOptions::default() };
    SearchPlan::new(group, m, opts)?.run()
}

/// Searches for a lift base with `parts` parts and parameter `k`: a PGSR
/// whose first `parts - 2` parts have valency `k + 1`, the last two `k`,
/// and a triangle through every vertex.
pub fn find_lift_base(group: Arc<Group>, parts: usize, k: usize, mode: SearchMode) -> Result<Option<ConnectionMatrix>> {
    let mut pattern = vec![k + 1; parts - 2];
    pattern.extend([k, k]);
    let opts = SearchOptions {
        mode,
        first_witness: true,
        valencies: Valencies::Pattern(pattern),
        require_triangles: true,
        ..SearchOptions::default()
    };
    Ok(SearchPlan::new(group, parts, opts)?.run()?.witnesses.into_iter().next())
}

// ---------------------------------------------------------------------------
// Regular graphs on few vertices (the trivial-group case)

/// Largest vertex count accepted by [`c1_regular_asymmetric_scan`].
pub const C1_SCAN_MAX: usize = 10;

/// Isomorphism classes of regular graphs on `m` vertices, grouped by valency.
#[derive(Debug, Clone)]
pub struct RegularGraphCensus {
    pub m: usize,
    /// `(valency, graphs)` for every valency with `valency * m` even.
    pub by_valency: Vec<(usize, Vec<Graph>)>,
}

impl RegularGraphCensus {
    pub fn total(&self) -> usize {
        self.by_valency.iter().map(|(_, g)| g.len()).sum()
    }
}

/// Generates one representative of every isomorphism class of `k`-regular
/// graphs on `m` vertices.
///
/// Orderly generation: vertices are added one at a time and a graph is
/// kept only if its adjacency string, read column by column over the upper
/// triangle, is lexicographically maximal among all relabelings. Deleting
/// the last vertex of a maximal graph leaves a maximal graph, so every class
/// is reached exactly once, through its maximal form.
pub fn regular_graphs(m: usize, k: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if m == 0 || k >= m || (k * m) % 2 == 1 {
        return out;
    }
    let mut adj = vec![0u32; m];
    extend_orderly(m, k, 0, &mut adj, &mut out);
    out
}

fn extend_orderly(m: usize, k: usize, t: usize, adj: &mut [u32], out: &mut Vec<Graph>) {
    if t == m {
        let adj = &*adj;
        let edges: Vec<_> =
            (0..m).flat_map(|u| (u + 1..m).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
        out.push(Graph::from_edges(m, edges).expect("simple"));
        return;
    }
    // choose the neighbors of new vertex t among 0..t; exactly k of them at the end
    let remaining_after = m - t - 1;
    let deg = |v: usize, adj: &[u32]| adj[v].count_ones() as usize;
    let need_min = k.saturating_sub(remaining_after);
    // columns: bitmask over 0..t, iterate all and filter
    for col in 0u32..(1u32 << t) {
        let d = col.count_ones() as usize;
        if d > k || d < need_min {
            continue;
        }
        let ok = (0..t).all(|v| {
            let dv = deg(v, adj) + (col >> v & 1) as usize;
            dv <= k && k - dv <= remaining_after
        });
        if !ok {
            continue;
        }
        for v in 0..t {
            if col >> v & 1 == 1 {
                adj[v] |= 1 << t;
            }
        }
        adj[t] = col;
        if is_maximal(t + 1, adj) {
            extend_orderly(m, k, t + 1, adj, out);
        }
        for v in 0..t {
            adj[v] &= !(1 << t);
        }
        adj[t] = 0;
    }
}

/// Whether the graph on `0..n` is maximal: for every relabeling `p` (new
/// vertex `i` is old `p[i]`), the column-wise upper-triangle string is not larger.
fn is_maximal(n: usize, adj: &[u32]) -> bool {
    // Backtrack over p; compare column j once p[0..=j] is fixed.
    fn rec(n: usize, adj: &[u32], p: &mut Vec<usize>, used: u32) -> bool {
        let j = p.len();
        if j == n {
            return true;
        }
        for cand in 0..n {
            if used >> cand & 1 == 1 {
                continue;
            }
            // column j of the relabeled graph vs the original
            let mut cmp = core::cmp::Ordering::Equal;
            for i in 0..j {
                let new = adj[p[i]] >> cand & 1;
                let old = adj[i] >> j & 1;
                if new != old {
                    cmp = new.cmp(&old);
                    break;
                }
            }
            match cmp {
                core::cmp::Ordering::Greater => return false,
                core::cmp::Ordering::Less => continue,
                core::cmp::Ordering::Equal => {
                    p.push(cand);
                    let ok = rec(n, adj, p, used | 1 << cand);
                    p.pop();
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
    rec(n, adj, &mut Vec::with_capacity(n), 0)
}

/// All isomorphism classes of regular graphs on `m` vertices.
pub fn regular_graph_census(m: usize) -> RegularGraphCensus {
    let by_valency = (0..m.max(1))
        .filter(|k| (k * m).is_multiple_of(2))
        .map(|k| (k, regular_graphs(m, k)))
        .collect();
    RegularGraphCensus { m, by_valency }
}

/// m-HGRs of the trivial group are exactly the asymmetric regular graphs on
/// `m` vertices; enumerates all regular graphs isomorph-free and reports
/// the asymmetric ones as witnesses.
pub fn c1_regular_asymmetric_scan(m: usize) -> Result<SearchReport> {
    if m > C1_SCAN_MAX || m == 0 {
        return Err(Error::Capacity { what: "trivial-group scan vertex count", limit: C1_SCAN_MAX as u128, requested: m as u128 });
    }
    let census = regular_graph_census(m);
    let c1 = Arc::new(Group::cyclic(1)?);
    let mut report = SearchReport {
        group_order: 1,
        group: String::from("C1"),
        m,
        mode: SearchMode::Exhaustive,
        candidates_examined: 0,
        regular_candidates: census.total() as u128,
        witnesses: Vec::new(),
        wall_time_ms: None,
    };
    for (_, graphs) in &census.by_valency {
        for g in graphs {
            report.candidates_examined += 1;
            if crate::aut::automorphisms(g)?.order_is(1) {
                report.witnesses.push(crate::catalog::template_matrix(c1.clone(), g)?);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Descriptor;

    #[test]
    fn klein_m3_counts() {
        let g = Arc::new(Group::standard_family(&Descriptor::ElemAbelian { p: 2, k: 2 }).unwrap());
        let r = decide_existence(g, 3, SearchMode::Exhaustive, false).unwrap();
        assert_eq!(r.regular_candidates, 346);
        assert_eq!(r.candidates_examined, 346);
        assert!(!r.found());
    }

    #[test]
    fn c6_m3_has_witness_in_both_modes() {
        let g = Arc::new(Group::cyclic(6).unwrap());
        for mode in [SearchMode::Exhaustive, SearchMode::Normalized] {
            let r = decide_existence(g.clone(), 3, mode, true).unwrap();
            assert_eq!(r.witnesses.len(), 1);
            assert!(crate::aut::verify_matrix(&r.witnesses[0]).unwrap().is_hgr());
        }
    }

    #[test]
    fn subsets_lexicographic() {
        let s: Vec<Vec<usize>> = subsets(4, 2, false).iter().map(|s| s.iter().collect()).collect();
        assert_eq!(s, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(4, 2, true).len(), 3);
        assert_eq!(subsets(3, 0, false).len(), 1);
    }

    #[test]
    fn budget_exceeded() {
        let g = Arc::new(Group::cyclic(12).unwrap());
        let opts = SearchOptions { budget: 1000, ..SearchOptions::default() };
        assert!(matches!(SearchPlan::new(g, 4, opts), Err(Error::Capacity { .. })));
    }

    #[test]
    fn small_regular_graph_counts() {
        // cubic graphs on 6 and 8 vertices, disconnected ones included
        assert_eq!(regular_graphs(6, 3).len(), 2);
        assert_eq!(regular_graphs(8, 3).len(), 6);
        assert_eq!(regular_graphs(5, 2).len(), 1);
        assert_eq!(regular_graphs(6, 2).len(), 2);
        assert_eq!(regular_graphs(7, 4).len(), 2);
    }
}
