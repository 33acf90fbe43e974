//! Labelled defining graphs.
//!
//! A [`LabeledGraph`] is a simple graph without loops whose edges carry an
//! integer label `m >= 2`; the absence of an edge encodes a label of 0 (no
//! relation). Generators are referred to by compact [`Gen`] handles, indexing
//! a name table owned by the graph. Subgraphs (for parabolic subgroups and
//! for the label-2 graph) keep the same handles so words remain meaningful
//! across restriction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Handle of a generator inside one graph's name table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Gen(pub u16);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    names: Vec<String>,
    lookup: BTreeMap<String, Gen>,
    /// Active vertex set; subgraphs restrict this without renumbering.
    vertices: BTreeSet<Gen>,
    /// Keys are normalized pairs `(min, max)`.
    edges: BTreeMap<(Gen, Gen), u32>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl LabeledGraph {
    pub fn new() -> Self {
        LabeledGraph {
            names: Vec::new(),
            lookup: BTreeMap::new(),
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<Gen> {
        if !valid_name(name) {
            return Err(Error::Graph(format!("invalid generator name {name:?}")));
        }
        if self.lookup.contains_key(name) {
            return Err(Error::Graph(format!("duplicate generator {name}")));
        }
        let g = Gen(self.names.len() as u16);
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), g);
        self.vertices.insert(g);
        Ok(g)
    }

    pub fn add_edge(&mut self, a: Gen, b: Gen, label: u32) -> Result<()> {
        if a == b {
            return Err(Error::Graph("loops are not allowed".into()));
        }
        if !self.vertices.contains(&a) || !self.vertices.contains(&b) {
            return Err(Error::Graph("edge endpoint outside vertex set".into()));
        }
        if label < 2 {
            return Err(Error::Graph(format!("edge label {label} < 2")));
        }
        let key = (a.min(b), a.max(b));
        if self.edges.contains_key(&key) {
            return Err(Error::Graph(format!(
                "duplicate edge {}-{}",
                self.name(a),
                self.name(b)
            )));
        }
        self.edges.insert(key, label);
        Ok(())
    }

    pub fn gen_by_name(&self, name: &str) -> Option<Gen> {
        self.lookup.get(name).copied().filter(|g| self.vertices.contains(g))
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.0 as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Gen> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.vertices.contains(&g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = ((Gen, Gen), u32)> + '_ {
        self.edges.iter().map(|(&k, &v)| (k, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge label of `{a, b}`, or 0 when the vertices are not joined.
    pub fn label(&self, a: Gen, b: Gen) -> u32 {
        if a == b {
            return 0;
        }
        self.edges.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    pub fn commute(&self, a: Gen, b: Gen) -> bool {
        self.label(a, b) == 2
    }

    /// True iff no edge is labelled 3 (the class the solver accepts).
    pub fn no_three(&self) -> bool {
        self.edges.values().all(|&m| m != 3)
    }

    /// Subgraph keeping the same vertices but only the edges labelled 2.
    pub fn gamma2(&self) -> LabeledGraph {
        let mut g = self.clone();
        g.edges.retain(|_, &mut m| m == 2);
        g
    }

    /// Full labelled subgraph on `sub`.
    pub fn induced(&self, sub: &BTreeSet<Gen>) -> Result<LabeledGraph> {
        for g in sub {
            if !self.vertices.contains(g) {
                return Err(Error::Graph(format!("unknown generator handle {:?}", g)));
            }
        }
        let mut g = self.clone();
        g.vertices = sub.clone();
        g.edges.retain(|&(a, b), _| sub.contains(&a) && sub.contains(&b));
        Ok(g)
    }

    /// Parses the text format: `gens <name>...` and `edge <name> <name> <m>`
    /// lines, `#` comments. Labels must be >= 2; label 3 is accepted for
    /// storage but leaves `no_three` false.
    pub fn parse(text: &str) -> Result<LabeledGraph> {
        let mut g = LabeledGraph::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tok = content.split_whitespace();
            match tok.next() {
                Some("gens") => {
                    for name in tok {
                        g.add_vertex(name).map_err(|e| Error::Parse {
                            line,
                            msg: e.to_string(),
                        })?;
                    }
                }
                Some("edge") => {
                    let (a, b, m) = match (tok.next(), tok.next(), tok.next(), tok.next()) {
                        (Some(a), Some(b), Some(m), None) => (a, b, m),
                        _ => {
                            return Err(Error::Parse {
                                line,
                                msg: "expected `edge <name> <name> <label>`".into(),
                            })
                        }
                    };
                    let a = g.gen_by_name(a).ok_or_else(|| Error::Parse {
                        line,
                        msg: format!("unknown generator {a}"),
                    })?;
                    let b = g.gen_by_name(b).ok_or_else(|| Error::Parse {
                        line,
                        msg: format!("unknown generator {b}"),
                    })?;
                    let m: u32 = m.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad label {m:?}"),
                    })?;
                    g.add_edge(a, b, m).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?;
                }
                Some(other) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unknown directive {other:?}"),
                    })
                }
                None => {}
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gens");
        for v in &self.vertices {
            let _ = write!(s, " {}", self.name(*v));
        }
        s.push('\n');
        for (&(a, b), &m) in &self.edges {
            let _ = writeln!(s, "edge {} {} {}", self.name(a), self.name(b), m);
        }
        s
    }
}

impl Default for LabeledGraph {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_graph() -> LabeledGraph {
        let mut g = LabeledGraph::new();
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        let c = g.add_vertex("c").unwrap();
        g.add_edge(a, b, 2).unwrap();
        g.add_edge(b, c, 4).unwrap();
        g.add_edge(a, c, 2).unwrap();
        g
    }

    #[test]
    fn parse_round_trip() {
        let g = k3_graph();
        let g2 = LabeledGraph::parse(&g.to_text()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn gamma2_keeps_only_label_two() {
        let g = k3_graph();
        let g2 = g.gamma2();
        assert_eq!(g2.edge_count(), 2);
        assert_eq!(g2.vertex_count(), 3);
        // idempotent
        assert_eq!(g2.gamma2(), g2);
    }

    #[test]
    fn gamma2_of_no_label_two_is_edgeless() {
        let mut g = LabeledGraph::new();
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        g.add_edge(a, b, 5).unwrap();
        assert_eq!(g.gamma2().edge_count(), 0);
    }

    #[test]
    fn label_three_is_stored_but_flagged() {
        let text = "gens a b\nedge a b 3\n";
        let g = LabeledGraph::parse(text).unwrap();
        assert!(!g.no_three());
        assert!(LabeledGraph::parse("gens a b\nedge a b 1\n").is_err());
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = LabeledGraph::new();
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        assert!(g.add_edge(a, a, 2).is_err());
        g.add_edge(a, b, 2).unwrap();
        assert!(g.add_edge(b, a, 4).is_err());
        assert!(g.add_vertex("a").is_err());
    }

    #[test]
    fn induced_subgraph_keeps_handles() {
        let g = k3_graph();
        let a = g.gen_by_name("a").unwrap();
        let b = g.gen_by_name("b").unwrap();
        let sub: BTreeSet<Gen> = [a, b].into_iter().collect();
        let h = g.induced(&sub).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.label(a, b), 2);
        assert!(h.gen_by_name("c").is_none());
    }
}
