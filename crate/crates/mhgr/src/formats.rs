//! On-disk formats: group tables, connection matrices, edge lists and graph6.
//!
//! Part indices in matrix JSON are 1-based; element indices are table
//! indices with the identity at 0. Edge lists are 0-based.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use mhgr_core::{ConnectionMatrix, Descriptor, ElemSet, Graph, Group};
use serde::{Deserialize, Serialize};

use crate::error::{read_to_string, Error, Result};
use crate::groupspec::GroupSpec;

/// `{ "order": n, "table": [[...]], "names": [...] }`, identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupTable {
    pub fn of(group: &Group) -> GroupTable {
        GroupTable { order: group.order(), table: group.table_rows(), names: Some(group.names().to_vec()) }
    }

    pub fn build(&self) -> Result<Group> {
        if self.table.len() != self.order {
            return Err(Error::Format(format!(
                "\"order\" is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        Ok(Group::from_table(&self.table, self.names.clone())?)
    }
}

pub fn load_group_table(path: &Path) -> Result<Group> {
    let text = read_to_string(path)?;
    let table: GroupTable = serde_json::from_str(&text)?;
    table.build()
}

/// A group inside a JSON document: a family expression or an inline table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Spec(String),
    Table(GroupTable),
}

fn is_family(d: &Descriptor) -> bool {
    match d {
        Descriptor::Custom => false,
        Descriptor::Product(parts) => parts.iter().all(is_family),
        _ => true,
    }
}

impl GroupRef {
    pub fn of(group: &Group) -> GroupRef {
        if is_family(group.descriptor()) {
            GroupRef::Spec(group.descriptor().to_string())
        } else {
            GroupRef::Table(GroupTable::of(group))
        }
    }

    /// `base` resolves relative `@file` factors.
    pub fn build_in(&self, base: Option<&Path>) -> Result<Group> {
        match self {
            GroupRef::Spec(s) => GroupSpec::parse(s)?.build_in(base),
            GroupRef::Table(t) => t.build(),
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.build_in(None)
    }
}

/// One block `T[i][j]`, `i <= j` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub elems: Vec<usize>,
}

/// Nonempty blocks on and above the diagonal.
pub fn entries_of(cm: &ConnectionMatrix) -> Vec<Entry> {
    let m = cm.m();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            let set = cm.block(i, j);
            if !set.is_empty() {
                out.push(Entry { i: i + 1, j: j + 1, elems: set.iter().collect() });
            }
        }
    }
    out
}

pub fn matrix_from_entries(group: Arc<Group>, m: usize, entries: &[Entry]) -> Result<ConnectionMatrix> {
    let n = group.order();
    let mut cm = ConnectionMatrix::empty(group, m)?;
    for e in entries {
        if e.i == 0 || e.j == 0 || e.i > m || e.j > m {
            return Err(Error::Format(format!("entry ({}, {}) outside parts 1..={m}", e.i, e.j)));
        }
        if e.i > e.j {
            return Err(Error::Format(format!("entry ({}, {}) lies below the diagonal; list i <= j only", e.i, e.j)));
        }
        if let Some(&bad) = e.elems.iter().find(|&&g| g >= n) {
            return Err(Error::Format(format!("entry ({}, {}) names element {bad} of a group of order {n}", e.i, e.j)));
        }
        let set: ElemSet = e.elems.iter().copied().collect();
        if set.len() != e.elems.len() {
            return Err(Error::Format(format!("entry ({}, {}) repeats an element", e.i, e.j)));
        }
        cm.set_block(e.i - 1, e.j - 1, set)?;
    }
    Ok(cm)
}

/// `{ "group": ..., "m": m, "entries": [...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub group: GroupRef,
    pub m: usize,
    pub entries: Vec<Entry>,
}

impl MatrixJson {
    pub fn of(cm: &ConnectionMatrix) -> MatrixJson {
        MatrixJson { group: GroupRef::of(cm.group()), m: cm.m(), entries: entries_of(cm) }
    }

    pub fn build_in(&self, base: Option<&Path>) -> Result<ConnectionMatrix> {
        let group = Arc::new(self.group.build_in(base)?);
        matrix_from_entries(group, self.m, &self.entries)
    }

    pub fn build(&self) -> Result<ConnectionMatrix> {
        self.build_in(None)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix JSON serializes")
    }
}

pub fn load_matrix(path: &Path) -> Result<ConnectionMatrix> {
    let text = read_to_string(path)?;
    let doc: MatrixJson = serde_json::from_str(&text)?;
    doc.build_in(path.parent())
}

/// `p <n> <e>` followed by one `u v` line per edge.
pub fn to_edgelist(graph: &Graph) -> String {
    let mut out = format!("p {} {}\n", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses an edge list; blank lines and lines starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::Format("empty edge list".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, e) = match fields.as_slice() {
        ["p", n, e] => (
            n.parse::<usize>().map_err(|_| Error::Format(format!("line {hline}: bad vertex count {n:?}")))?,
            e.parse::<usize>().map_err(|_| Error::Format(format!("line {hline}: bad edge count {e:?}")))?,
        ),
        _ => return Err(Error::Format(format!("line {hline}: expected header \"p <vertices> <edges>\""))),
    };
    let mut edges = Vec::with_capacity(e);
    for (k, line) in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) if u < n && v < n => edges.push((u, v)),
            _ => return Err(Error::Format(format!("line {k}: expected \"u v\" with 0 <= u, v < {n}"))),
        }
    }
    if edges.len() != e {
        return Err(Error::Format(format!("header announces {e} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != e {
        return Err(Error::Format("edge list repeats an edge".into()));
    }
    Ok(g)
}

fn to_petgraph(graph: &Graph) -> petgraph::graph::UnGraph<(), ()> {
    let mut pg = petgraph::graph::UnGraph::with_capacity(graph.vertex_count(), graph.edge_count());
    for _ in 0..graph.vertex_count() {
        pg.add_node(());
    }
    for (u, v) in graph.edges() {
        pg.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    pg
}

pub fn to_graph6(graph: &Graph) -> String {
    use petgraph::graph6::ToGraph6;
    to_petgraph(graph).graph6_string()
}

/// Decodes one graph6 line (optionally prefixed by `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    if s.is_empty() {
        return Err(Error::Format("empty graph6 string".into()));
    }
    if let Some(c) = s.chars().find(|c| !(63..=126).contains(&(*c as u32))) {
        return Err(Error::Format(format!("graph6 character {c:?} outside '?'..='~'")));
    }
    let b = s.as_bytes();
    let (n, header) = if b[0] != 126 {
        ((b[0] - 63) as usize, 1)
    } else if b.len() >= 4 && b[1] != 126 {
        (b[1..4].iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize), 4)
    } else {
        return Err(Error::Format("graph6 orders above 258047 are not supported".into()));
    };
    let want = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if b.len() != header + want {
        return Err(Error::Format(format!(
            "graph6 body for {n} vertices needs {want} characters, found {}",
            b.len() - header
        )));
    }
    let (order, edges) = petgraph::graph6::from_graph6_representation::<u32>(s.to_string());
    debug_assert_eq!(order, n);
    Ok(Graph::from_edges(order, edges.into_iter().map(|(u, v)| (u as usize, v as usize)))?)
}

/// Reads an edge list or a graph6 file, by content.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = read_to_string(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l == "p" => parse_edgelist(&text),
        Some(l) => parse_graph6(l),
        None => Err(Error::Format(format!("{}: no graph found", path.display()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_m3() -> ConnectionMatrix {
        let g = Arc::new(Group::cyclic(6).unwrap());
        let set = |v: &[usize]| v.iter().copied().collect::<ElemSet>();
        ConnectionMatrix::new(g, 3, &[(0, 1, set(&[0, 3])), (0, 2, set(&[0, 5])), (1, 2, set(&[1, 5]))], &[]).unwrap()
    }

    #[test]
    fn matrix_json_round_trip() {
        let cm = c6_m3();
        let doc = MatrixJson::of(&cm);
        assert_eq!(doc.group, GroupRef::Spec("C6".into()));
        assert_eq!(doc.entries[0], Entry { i: 1, j: 2, elems: vec![0, 3] });
        let parsed: MatrixJson = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(parsed.build().unwrap(), cm);
    }

    #[test]
    fn custom_groups_are_inlined() {
        let c3 = Group::cyclic(3).unwrap();
        let custom = Group::from_table(&c3.table_rows(), None).unwrap();
        match GroupRef::of(&custom) {
            GroupRef::Table(t) => assert_eq!(t.build().unwrap().table_rows(), c3.table_rows()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matrix_errors() {
        let g = Arc::new(Group::cyclic(4).unwrap());
        let bad = |e: Entry| matrix_from_entries(g.clone(), 2, &[e]).unwrap_err().to_string();
        assert!(bad(Entry { i: 2, j: 1, elems: vec![1] }).contains("below"));
        assert!(bad(Entry { i: 1, j: 3, elems: vec![1] }).contains("outside"));
        assert!(bad(Entry { i: 1, j: 2, elems: vec![4] }).contains("element 4"));
        assert!(bad(Entry { i: 1, j: 1, elems: vec![0] }).contains("identity"));
    }

    #[test]
    fn group_table_errors_name_the_triple() {
        let doc = r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#;
        let t: GroupTable = serde_json::from_str(doc).unwrap();
        let msg = t.build().unwrap_err().to_string();
        assert!(msg.contains("axiom"), "{msg}");
    }

    #[test]
    fn edgelist_round_trip() {
        let g = c6_m3().build_graph().graph;
        let text = to_edgelist(&g);
        assert!(text.starts_with("p 18 36\n"));
        assert_eq!(parse_edgelist(&text).unwrap(), g);
        assert!(parse_edgelist("p 3 1\n0 3\n").is_err());
        assert!(parse_edgelist("p 3 2\n0 1\n").is_err());
    }

    #[test]
    fn graph6_round_trip() {
        // Petersen graph in graph6
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert_eq!(p.regular_valency(), Some(3));
        for g in [c6_m3().build_graph().graph, Graph::empty(0), Graph::empty(1), Graph::empty(70)] {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
        assert!(parse_graph6("IheA").is_err());
        assert!(parse_graph6("I he").is_err());
    }
}
