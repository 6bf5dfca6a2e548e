//! Connection matrices and the m-Cayley graphs they define.
//!
//! Parts are indexed from 0 in this API; the vertex `(g, i)` has index
//! `i * |G| + g`, so every part occupies a contiguous block of vertices.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::Group;

/// An `m x m` array of element subsets `T[i][j]` with `1 ∉ T[i][i]` and
/// `T[j][i] = T[i][j]^{-1}`.
#[derive(Clone)]
pub struct ConnectionMatrix {
    group: Arc<Group>,
    m: usize,
    sets: Vec<ElemSet>,
}

impl PartialEq for ConnectionMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.sets == other.sets && *self.group == *other.group
    }
}

impl fmt::Debug for ConnectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (i, j) in self.upper_pairs_with_diagonal() {
            let set = self.block(i, j);
            if !set.is_empty() {
                let names: Vec<&str> = set.iter().map(|g| self.group.name(g)).collect();
                list.entry(&(i + 1, j + 1), &names);
            }
        }
        list.finish()
    }
}

/// First reason a matrix fails to define an m-Haar graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HaarViolation {
    DiagonalNonEmpty { part: usize },
    UnequalValency { part: usize, valency: usize, expected: usize },
}

impl fmt::Display for HaarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HaarViolation::DiagonalNonEmpty { part } => {
                write!(f, "diagonal set of part {} is nonempty", part + 1)
            }
            HaarViolation::UnequalValency { part, valency, expected } => write!(
                f,
                "part {} has valency {valency}, part 1 has {expected}",
                part + 1
            ),
        }
    }
}

impl ConnectionMatrix {
    /// The matrix with every entry empty.
    pub fn empty(group: Arc<Group>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidMatrix("number of parts must be positive".into()));
        }
        Ok(ConnectionMatrix { group, m, sets: alloc::vec![ElemSet::new(); m * m] })
    }

    /// Builds a matrix from its strictly upper entries `(i, j, T[i][j])` with
    /// `i < j` and optional diagonal entries; the lower triangle is filled
    /// with inverse sets and unspecified entries are empty.
    pub fn new(
        group: Arc<Group>,
        m: usize,
        upper: &[(usize, usize, ElemSet)],
        diagonal: &[(usize, ElemSet)],
    ) -> Result<Self> {
        let mut cm = Self::empty(group, m)?;
        for &(i, j, set) in upper {
            if i >= j {
                return Err(Error::InvalidMatrix(format!(
                    "upper entry ({}, {}) must have i < j",
                    i + 1,
                    j + 1
                )));
            }
            cm.set_block(i, j, set)?;
        }
        for &(i, set) in diagonal {
            cm.set_block(i, i, set)?;
        }
        Ok(cm)
    }

    /// Sets `T[i][j]` (and `T[j][i]` to its inverse).
    pub fn set_block(&mut self, i: usize, j: usize, set: ElemSet) -> Result<()> {
        let (m, n) = (self.m, self.group.order());
        if i >= m || j >= m {
            return Err(Error::InvalidMatrix(format!(
                "entry ({}, {}) out of range for m = {m}",
                i + 1,
                j + 1
            )));
        }
        if let Some(bad) = set.iter().find(|&g| g >= n) {
            return Err(Error::InvalidMatrix(format!(
                "element index {bad} out of range for group of order {n}"
            )));
        }
        let inverse = self.group.inverse_set(&set);
        if i == j {
            if set.contains(Group::IDENTITY) {
                return Err(Error::InvalidMatrix(format!(
                    "identity in diagonal entry ({}, {})",
                    i + 1,
                    i + 1
                )));
            }
            if inverse != set {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({}, {}) is not inverse-closed",
                    i + 1,
                    i + 1
                )));
            }
        }
        self.sets[i * m + j] = set;
        self.sets[j * m + i] = inverse;
        Ok(())
    }

    #[inline]
    pub fn block(&self, i: usize, j: usize) -> &ElemSet {
        &self.sets[i * self.m + j]
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<Group> {
        &self.group
    }

    /// Pairs `(i, j)` with `i <= j`, row by row.
    pub fn upper_pairs_with_diagonal(&self) -> impl Iterator<Item = (usize, usize)> {
        let m = self.m;
        (0..m).flat_map(move |i| (i..m).map(move |j| (i, j)))
    }

    /// Valency of every vertex in part `i`.
    pub fn part_valency(&self, i: usize) -> usize {
        (0..self.m).map(|j| self.block(i, j).len()).sum()
    }

    pub fn part_valencies(&self) -> Vec<usize> {
        (0..self.m).map(|i| self.part_valency(i)).collect()
    }

    pub fn diagonal_empty(&self) -> bool {
        (0..self.m).all(|i| self.block(i, i).is_empty())
    }

    /// Checks the m-Haar conditions: empty diagonal and equal part valencies.
    pub fn haar_violation(&self) -> Option<HaarViolation> {
        if let Some(part) = (0..self.m).find(|&i| !self.block(i, i).is_empty()) {
            return Some(HaarViolation::DiagonalNonEmpty { part });
        }
        let expected = self.part_valency(0);
        (1..self.m).find_map(|part| {
            let valency = self.part_valency(part);
            (valency != expected).then_some(HaarViolation::UnequalValency { part, valency, expected })
        })
    }

    pub fn is_m_haar(&self) -> bool {
        self.haar_violation().is_none()
    }

    /// Number of edges: `|G| * sum_{i<j} |T[i][j]| + |G| * sum_i |T[i][i]| / 2`.
    pub fn predicted_edge_count(&self) -> usize {
        let n = self.group.order();
        let off: usize = (0..self.m)
            .flat_map(|i| (i + 1..self.m).map(move |j| (i, j)))
            .map(|(i, j)| self.block(i, j).len())
            .sum();
        let diag: usize = (0..self.m).map(|i| self.block(i, i).len()).sum();
        n * off + n * diag / 2
    }

    /// The m-Cayley graph with edges `{g_i, (t g)_j}` for `t ∈ T[i][j]`.
    pub fn build_graph(&self) -> LabeledGraph {
        let n = self.group.order();
        let mut edges = Vec::with_capacity(self.predicted_edge_count());
        for (i, j) in self.upper_pairs_with_diagonal() {
            for t in self.block(i, j).iter() {
                for g in 0..n {
                    let u = i * n + g;
                    let v = j * n + self.group.mul(t, g);
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(n * self.m, edges).expect("connection matrix edges are simple");
        LabeledGraph { graph, group_order: n, parts: self.m }
    }
}

/// An m-Cayley graph together with its part structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub group_order: usize,
    pub parts: usize,
}

impl LabeledGraph {
    #[inline]
    pub fn vertex(&self, g: usize, part: usize) -> usize {
        part * self.group_order + g
    }

    #[inline]
    pub fn part(&self, v: usize) -> usize {
        v / self.group_order
    }

    #[inline]
    pub fn element(&self, v: usize) -> usize {
        v % self.group_order
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The vertex permutation `(x, i) -> (x g, i)`.
    pub fn right_translation(&self, group: &Group, g: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|v| self.vertex(group.mul(self.element(v), g), self.part(v)))
            .collect()
    }

    /// The part partition as a list of vertex blocks.
    pub fn part_cells(&self) -> Vec<Vec<usize>> {
        (0..self.parts)
            .map(|i| (i * self.group_order..(i + 1) * self.group_order).collect())
            .collect()
    }
}
