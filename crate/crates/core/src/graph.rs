//! Simple undirected graphs with sorted neighbor lists and a packed adjacency bitset.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    neighbors: Vec<Vec<u32>>,
    bits: Vec<u64>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, neighbors: vec![Vec::new(); n], bits: vec![0; n * words] }
    }

    /// Builds a graph from an edge list; duplicate edges are merged, loops rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(alloc::format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(alloc::format!("loop at vertex {u}")));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn rebuild_lists(&mut self) {
        for u in 0..self.n {
            let row = &self.bits[u * self.words..(u + 1) * self.words];
            let list = &mut self.neighbors[u];
            list.clear();
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    list.push((w * 64 + b) as u32);
                }
            }
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u].iter().map(move |&v| (u, v as usize)).filter(|&(u, v)| u < v)
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common valency if the graph is regular (`None` for non-regular graphs;
    /// the empty graph on zero vertices counts as 0-regular).
    pub fn regular_valency(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Number of edges among the neighbors of `v` (triangles through `v`).
    pub fn triangles_at(&self, v: usize) -> usize {
        let rv = self.row(v);
        let mut twice = 0usize;
        for &u in self.neighbors(v) {
            twice += self
                .row(u as usize)
                .iter()
                .zip(rv)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        twice / 2
    }

    pub fn has_triangle_at(&self, v: usize) -> bool {
        let rv = self.row(v);
        self.neighbors(v)
            .iter()
            .any(|&u| self.row(u as usize).iter().zip(rv).any(|(a, b)| a & b != 0))
    }

    /// Whether `perm` (vertex `v` maps to `perm[v]`) preserves adjacency.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        (0..self.n).all(|u| {
                self.neighbors[u].iter().all(|&v| self.adjacent(perm[u], perm[v as usize]))
            })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))),
        )
        .expect("union of simple graphs")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.neighbors[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v as usize);
                }
            }
        }
        count == self.n
    }
}
