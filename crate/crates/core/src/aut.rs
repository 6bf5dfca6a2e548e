//! Exact automorphism groups of simple graphs.
//!
//! The engine follows the individualization–refinement scheme: equitable
//! partition refinement driven by neighbor counts, a first path down the
//! search tree (target cell = first smallest non-singleton cell, individualize
//! its least vertex), and for each level of that path, working upwards, a
//! decision for every vertex `w` of the target cell whether some automorphism
//! fixing the earlier base points maps the chosen vertex to `w`. The
//! generators found that way form a strong generating set for the base given
//! by the first path, so `|Aut|` is the product of the basic orbit sizes.
//!
//! Subtrees are pruned by comparing refinement traces with the first path.
//! The trace is an isomorphism invariant, so pruning never discards an
//! automorphism; every candidate leaf is checked edge by edge.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mcayley::{ConnectionMatrix, HaarViolation, LabeledGraph};

/// Default vertex cap for [`automorphisms`].
pub const DEFAULT_VERTEX_CAP: usize = 1024;

/// Vertex cap for [`brute_force_aut_order`].
pub const BRUTE_FORCE_CAP: usize = 9;

#[derive(Debug, Clone)]
pub struct AutOptions {
    pub vertex_cap: usize,
    /// Optional vertex colors; automorphisms must preserve them. Leave unset
    /// for the full automorphism group.
    pub colors: Option<Vec<u32>>,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions { vertex_cap: DEFAULT_VERTEX_CAP, colors: None }
    }
}

/// Automorphism group of a graph.
#[derive(Debug, Clone)]
pub struct AutResult {
    pub order: BigUint,
    pub generators: Vec<Vec<usize>>,
    /// Vertex orbits, each sorted, ordered by least element.
    pub orbits: Vec<Vec<usize>>,
    /// Base points of the stabilizer chain (the first path of the search).
    pub base: Vec<usize>,
    /// `basic_orbit_sizes[i]` is the orbit length of `base[i]` under the
    /// pointwise stabilizer of `base[..i]`.
    pub basic_orbit_sizes: Vec<usize>,
    orbit_index: Vec<usize>,
}

impl AutResult {
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    /// Whether the order equals `n` exactly.
    pub fn order_is(&self, n: usize) -> bool {
        self.order == BigUint::from(n)
    }

    pub fn orbit_of(&self, v: usize) -> &[usize] {
        &self.orbits[self.orbit_index[v]]
    }

    /// `|Aut_v| = |Aut| / |v^Aut|`.
    pub fn stabilizer_order(&self, v: usize) -> BigUint {
        &self.order / BigUint::from(self.orbit_of(v).len())
    }

    /// Whether the orbit partition equals `cells` (as a set partition).
    pub fn orbits_equal(&self, cells: &[Vec<usize>]) -> bool {
        let mut expected: Vec<Vec<usize>> = cells
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        expected.sort();
        expected == self.orbits
    }
}

/// Computes `Aut(graph)` exactly.
pub fn automorphisms(graph: &Graph) -> Result<AutResult> {
    automorphisms_with(graph, &AutOptions::default())
}

pub fn automorphisms_with(graph: &Graph, opts: &AutOptions) -> Result<AutResult> {
    let n = graph.vertex_count();
    if n > opts.vertex_cap {
        return Err(Error::Capacity {
            what: "automorphism vertex count",
            limit: opts.vertex_cap as u128,
            requested: n as u128,
        });
    }
    if let Some(colors) = &opts.colors {
        if colors.len() != n {
            return Err(Error::InvalidArgument("color vector length differs from vertex count".into()));
        }
    }
    if n == 0 {
        return Ok(AutResult {
            order: BigUint::one(),
            generators: Vec::new(),
            orbits: Vec::new(),
            base: Vec::new(),
            basic_orbit_sizes: Vec::new(),
            orbit_index: Vec::new(),
        });
    }
    let mut engine = Engine::new(graph);
    let root = engine.initial_partition(opts.colors.as_deref());
    Ok(engine.run(root))
}

// ---------------------------------------------------------------------------
// Ordered partitions

#[derive(Clone)]
struct Partition {
    elems: Vec<u32>,
    /// Start index of the cell containing each vertex.
    cell: Vec<u32>,
    /// `end[s]` is the exclusive end of the cell starting at `s`.
    end: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0usize;
        core::iter::from_fn(move || {
            if s >= self.elems.len() {
                return None;
            }
            let cur = s;
            s = self.end[cur] as usize;
            Some(cur)
        })
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let len = self.end[s] as usize - s;
            if len > 1 && best.is_none_or(|(_, l)| len < l) {
                best = Some((s, len));
            }
        }
        best.map(|(s, _)| s)
    }

    fn members(&self, start: usize) -> &[u32] {
        &self.elems[start..self.end[start] as usize]
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x517c_c1b7_2722_0a95)
}

struct Engine<'a> {
    g: &'a Graph,
    n: usize,
    counts: Vec<u32>,
    marked: Vec<bool>,
    in_queue: Vec<bool>,
}

/// A node on the first path.
struct PathNode {
    partition: Partition,
    trace: u64,
    cells: usize,
    /// Target cell start and individualized vertex (absent at the leaf).
    choice: Option<(usize, u32)>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Engine { g, n, counts: vec![0; n], marked: vec![false; n], in_queue: vec![false; n] }
    }

    fn initial_partition(&mut self, colors: Option<&[u32]>) -> Partition {
        let n = self.n;
        let key = |v: usize| -> (u32, usize, usize) {
            (colors.map_or(0, |c| c[v]), self.g.degree(v), self.g.triangles_at(v))
        };
        let keys: Vec<_> = (0..n).map(key).collect();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (keys[v as usize], v));
        let mut p = Partition { elems, cell: vec![0; n], end: vec![0; n], cells: 0 };
        let mut start = 0;
        while start < n {
            let mut stop = start + 1;
            while stop < n && keys[p.elems[stop] as usize] == keys[p.elems[start] as usize] {
                stop += 1;
            }
            for k in start..stop {
                p.cell[p.elems[k] as usize] = start as u32;
            }
            p.end[start] = stop as u32;
            p.cells += 1;
            start = stop;
        }
        let queue: VecDeque<u32> = p.cell_starts().map(|s| s as u32).collect();
        self.refine(&mut p, queue);
        p
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using
    /// the cells in `queue` as initial splitters. Returns the trace hash.
    fn refine(&mut self, p: &mut Partition, mut queue: VecDeque<u32>) -> u64 {
        let mut trace = 0x9e37_79b9_7f4a_7c15u64;
        for &s in &queue {
            self.in_queue[s as usize] = true;
        }
        let mut touched: Vec<u32> = Vec::new();
        let mut touched_cells: Vec<u32> = Vec::new();
        let mut splitter: Vec<u32> = Vec::new();
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            self.in_queue[s] = false;
            if p.is_discrete() {
                continue;
            }
            splitter.clear();
            splitter.extend_from_slice(p.members(s));
            for &u in &splitter {
                for &w in self.g.neighbors(u as usize) {
                    if self.counts[w as usize] == 0 {
                        touched.push(w);
                    }
                    self.counts[w as usize] += 1;
                }
            }
            for &w in &touched {
                let c = p.cell[w as usize];
                if !self.marked[c as usize] {
                    self.marked[c as usize] = true;
                    touched_cells.push(c);
                }
            }
            touched_cells.sort_unstable();
            trace = mix(trace, s as u64);
            for &c in &touched_cells {
                let c = c as usize;
                self.marked[c] = false;
                let stop = p.end[c] as usize;
                if stop - c == 1 {
                    trace = mix(trace, (c as u64) << 32 | self.counts[p.elems[c] as usize] as u64);
                    continue;
                }
                let counts = &self.counts;
                p.elems[c..stop].sort_unstable_by_key(|&v| counts[v as usize]);
                let lo = counts[p.elems[c] as usize];
                let hi = counts[p.elems[stop - 1] as usize];
                if lo == hi {
                    trace = mix(trace, (c as u64) << 32 | lo as u64);
                    continue;
                }
                // split into fragments of equal count
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut f = c;
                while f < stop {
                    let val = counts[p.elems[f] as usize];
                    let mut e = f + 1;
                    while e < stop && counts[p.elems[e] as usize] == val {
                        e += 1;
                    }
                    frags.push((f, e));
                    trace = mix(trace, (f as u64) << 40 | (e as u64) << 20 | val as u64);
                    f = e;
                }
                for &(f, e) in &frags {
                    p.end[f] = e as u32;
                    for k in f..e {
                        p.cell[p.elems[k] as usize] = f as u32;
                    }
                }
                p.cells += frags.len() - 1;
                if self.in_queue[c] {
                    for &(f, _) in &frags[1..] {
                        self.in_queue[f] = true;
                        queue.push_back(f as u32);
                    }
                } else {
                    // skip the first largest fragment
                    let skip = frags
                        .iter()
                        .enumerate()
                        .fold((0usize, 0usize), |best, (i, &(f, e))| {
                            if e - f > best.1 {
                                (i, e - f)
                            } else {
                                best
                            }
                        })
                        .0;
                    for (i, &(f, _)) in frags.iter().enumerate() {
                        if i != skip {
                            self.in_queue[f] = true;
                            queue.push_back(f as u32);
                        }
                    }
                }
            }
            touched_cells.clear();
            for &w in &touched {
                self.counts[w as usize] = 0;
            }
            touched.clear();
        }
        mix(trace, p.cells as u64)
    }

    /// Moves `v` into a singleton cell at the front of its cell and refines.
    fn individualize(&mut self, p: &mut Partition, v: u32) -> u64 {
        let c = p.cell[v as usize] as usize;
        let stop = p.end[c] as usize;
        let pos = p.elems[c..stop].iter().position(|&x| x == v).expect("v in its cell") + c;
        p.elems.swap(c, pos);
        p.end[c] = (c + 1) as u32;
        p.end[c + 1] = stop as u32;
        for k in c + 1..stop {
            p.cell[p.elems[k] as usize] = (c + 1) as u32;
        }
        p.cells += 1;
        self.refine(p, VecDeque::from([c as u32]))
    }

    fn run(&mut self, root: Partition) -> AutResult {
        let n = self.n;
        // first path
        let mut path: Vec<PathNode> = Vec::new();
        let mut current = root;
        let mut trace = 0u64;
        loop {
            let cells = current.cells;
            match current.target_cell() {
                None => {
                    path.push(PathNode { partition: current, trace, cells, choice: None });
                    break;
                }
                Some(start) => {
                    let v = *current.members(start).iter().min().expect("nonempty cell");
                    let mut next = current.clone();
                    let t = self.individualize(&mut next, v);
                    path.push(PathNode { partition: current, trace, cells, choice: Some((start, v)) });
                    current = next;
                    trace = t;
                }
            }
        }
        let leaf: Vec<u32> = path.last().expect("leaf").partition.elems.clone();

        let mut uf = UnionFind::new(n);
        let mut generators: Vec<Vec<usize>> = Vec::new();
        let depth = path.len() - 1;
        let mut basic_orbit_sizes = vec![0usize; depth];
        for level in (0..depth).rev() {
            let (start, v) = path[level].choice.expect("interior node");
            let mut cell: Vec<u32> = path[level].partition.members(start).to_vec();
            cell.sort_unstable();
            let mut failed: Vec<u32> = Vec::new();
            for &w in &cell {
                if w == v || uf.same(w as usize, v as usize) {
                    continue;
                }
                if failed.iter().any(|&f| uf.same(f as usize, w as usize)) {
                    continue;
                }
                let mut q = path[level].partition.clone();
                let t = self.individualize(&mut q, w);
                let found = if t == path[level + 1].trace && q.cells == path[level + 1].cells {
                    self.explore(&path, &leaf, q, level + 1)
                } else {
                    None
                };
                match found {
                    Some(perm) => {
                        for (x, &y) in perm.iter().enumerate() {
                            uf.union(x, y);
                        }
                        generators.push(perm);
                    }
                    None => failed.push(w),
                }
            }
            let root = uf.find(v as usize);
            basic_orbit_sizes[level] = (0..n).filter(|&x| uf.find(x) == root).count();
        }
        let order = basic_orbit_sizes.iter().fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));

        let mut orbit_index = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut root_to_orbit = vec![usize::MAX; n];
        for x in 0..n {
            let r = uf.find(x);
            if root_to_orbit[r] == usize::MAX {
                root_to_orbit[r] = orbits.len();
                orbits.push(Vec::new());
            }
            orbit_index[x] = root_to_orbit[r];
            orbits[root_to_orbit[r]].push(x);
        }
        let base = path.iter().filter_map(|p| p.choice.map(|(_, v)| v as usize)).collect();
        AutResult { order, generators, orbits, base, basic_orbit_sizes, orbit_index }
    }

    /// Searches the subtree rooted at `p` (at `depth`) for a leaf whose
    /// labeling, matched against the first leaf, is an automorphism.
    fn explore(&mut self, path: &[PathNode], leaf: &[u32], p: Partition, depth: usize) -> Option<Vec<usize>> {
        if p.is_discrete() {
            let mut perm = vec![0usize; self.n];
            for (k, &x) in leaf.iter().enumerate() {
                perm[x as usize] = p.elems[k] as usize;
            }
            return self.g.is_automorphism(&perm).then_some(perm);
        }
        let (start, _) = path[depth].choice?;
        if p.end[start] != path[depth].partition.end[start] {
            return None;
        }
        let mut cell: Vec<u32> = p.members(start).to_vec();
        cell.sort_unstable();
        for u in cell {
            let mut q = p.clone();
            let t = self.individualize(&mut q, u);
            if t != path[depth + 1].trace || q.cells != path[depth + 1].cells {
                continue;
            }
            if let Some(perm) = self.explore(path, leaf, q, depth + 1) {
                return Some(perm);
            }
        }
        None
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle

/// Counts automorphisms by enumerating all bijections (with partial adjacency
/// checks). Only for graphs with at most [`BRUTE_FORCE_CAP`] vertices.
pub fn brute_force_aut_order(graph: &Graph) -> Result<u64> {
    let n = graph.vertex_count();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Capacity {
            what: "brute-force vertex count",
            limit: BRUTE_FORCE_CAP as u128,
            requested: n as u128,
        });
    }
    fn go(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let k = image.len();
        if k == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for cand in 0..g.vertex_count() {
            if used[cand] {
                continue;
            }
            if (0..k).all(|j| g.adjacent(j, k) == g.adjacent(image[j], cand)) {
                used[cand] = true;
                image.push(cand);
                total += go(g, image, used);
                image.pop();
                used[cand] = false;
            }
        }
        total
    }
    Ok(go(graph, &mut Vec::with_capacity(n), &mut vec![false; n]))
}

// ---------------------------------------------------------------------------
// Verdicts

/// Evidence behind an HGR / PGSR decision.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub group_order: usize,
    pub m: usize,
    pub aut_order: BigUint,
    pub regular: bool,
    pub valency: Option<usize>,
    pub diagonal_empty: bool,
    pub orbits_are_parts: bool,
    pub haar_violation: Option<HaarViolation>,
}

impl Verdict {
    /// m-Haar, and `|Aut| = |G|`. Since the right translations always form a
    /// subgroup of order `|G|`, the order equality forces `Aut` to be exactly
    /// that semiregular group with the parts as orbits.
    pub fn is_hgr(&self) -> bool {
        self.haar_violation.is_none() && self.aut_order == BigUint::from(self.group_order) && self.orbits_are_parts
    }

    pub fn is_pgsr(&self) -> bool {
        self.diagonal_empty && self.aut_order == BigUint::from(self.group_order)
    }

    pub fn justification(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(
            s,
            "|Aut| = {}, |G| = {}; right translations give a semiregular subgroup of order |G| with the {} parts as orbits",
            self.aut_order, self.group_order, self.m
        );
        if let Some(v) = &self.haar_violation {
            let _ = write!(s, "; not m-Haar: {v}");
        }
        s
    }
}

/// Builds the graph of `cm`, computes its automorphism group and collects the evidence.
pub fn verify_matrix(cm: &ConnectionMatrix) -> Result<Verdict> {
    verify_matrix_with(cm, &AutOptions::default())
}

pub fn verify_matrix_with(cm: &ConnectionMatrix, opts: &AutOptions) -> Result<Verdict> {
    let lg = cm.build_graph();
    let aut = automorphisms_with(&lg.graph, opts)?;
    Ok(verdict_from(cm, &lg, &aut))
}

pub(crate) fn verdict_from(cm: &ConnectionMatrix, lg: &LabeledGraph, aut: &AutResult) -> Verdict {
    let valency = lg.graph.regular_valency();
    Verdict {
        group_order: cm.group().order(),
        m: cm.m(),
        aut_order: aut.order.clone(),
        regular: valency.is_some(),
        valency,
        diagonal_empty: cm.diagonal_empty(),
        orbits_are_parts: aut.orbits_equal(&lg.part_cells()),
        haar_violation: cm.haar_violation(),
    }
}

pub fn is_m_hgr(cm: &ConnectionMatrix) -> Result<bool> {
    // cheap rejection before the automorphism computation
    if !cm.is_m_haar() {
        return Ok(false);
    }
    Ok(verify_matrix(cm)?.is_hgr())
}

pub fn is_m_pgsr(cm: &ConnectionMatrix) -> Result<bool> {
    if !cm.diagonal_empty() {
        return Ok(false);
    }
    Ok(verify_matrix(cm)?.is_pgsr())
}

/// Whether the stabilizer of `v` in `Aut(graph)` fixes every neighbor of `v`.
pub fn stabilizer_fixes_neighborhood(graph: &Graph, v: usize) -> Result<bool> {
    let n = graph.vertex_count();
    if v >= n {
        return Err(Error::InvalidArgument(alloc::format!("vertex {v} out of range")));
    }
    let mut colors = vec![0u32; n];
    colors[v] = 1;
    let stab = automorphisms_with(graph, &AutOptions { colors: Some(colors), ..AutOptions::default() })?;
    Ok(graph
        .neighbors(v)
        .iter()
        .all(|&u| stab.generators.iter().all(|g| g[u as usize] == u as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn classical_orders() {
        assert_eq!(automorphisms(&complete(5)).unwrap().order_u64(), Some(120));
        assert_eq!(automorphisms(&cycle(6)).unwrap().order_u64(), Some(12));
        assert_eq!(automorphisms(&Graph::empty(4)).unwrap().order_u64(), Some(24));
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(automorphisms(&petersen).unwrap().order_u64(), Some(120));
    }

    #[test]
    fn huge_orders_are_exact() {
        let aut = automorphisms(&Graph::empty(30)).unwrap();
        let mut fact = BigUint::one();
        for k in 1..=30u32 {
            fact *= BigUint::from(k);
        }
        assert_eq!(aut.order, fact);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_aut_order(&Graph::empty(4)).unwrap(), 24);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_aut_order(&path).unwrap(), 2);
        assert!(brute_force_aut_order(&Graph::empty(10)).is_err());
    }

    #[test]
    fn capacity_error() {
        let opts = AutOptions { vertex_cap: 8, colors: None };
        assert!(matches!(automorphisms_with(&Graph::empty(9), &opts), Err(Error::Capacity { .. })));
    }

    #[test]
    fn orbits_and_stabilizers() {
        // star K_{1,3}
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let aut = automorphisms(&star).unwrap();
        assert_eq!(aut.order_u64(), Some(6));
        assert_eq!(aut.orbits, vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(aut.stabilizer_order(0), BigUint::from(6u32));
        assert_eq!(aut.stabilizer_order(1), BigUint::from(2u32));
        assert!(!stabilizer_fixes_neighborhood(&star, 0).unwrap());
        assert!(stabilizer_fixes_neighborhood(&star, 1).is_ok());
    }

    #[test]
    fn generators_are_automorphisms_and_generate_order() {
        let g = cycle(8).disjoint_union(&complete(3));
        let aut = automorphisms(&g).unwrap();
        assert_eq!(aut.order_u64(), Some(16 * 6));
        for p in &aut.generators {
            assert!(g.is_automorphism(p));
        }
        assert_eq!(crate::perm::group_order(g.vertex_count(), &aut.generators), aut.order);
    }

    #[test]
    fn colored_automorphisms() {
        let c = cycle(6);
        let mut colors = vec![0u32; 6];
        colors[0] = 1;
        let aut = automorphisms_with(&c, &AutOptions { colors: Some(colors), ..Default::default() }).unwrap();
        assert_eq!(aut.order_u64(), Some(2));
    }
}
