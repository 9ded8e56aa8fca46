//! Simple undirected graphs with stable vertex indexing, Cayley graph and
//! prism (cartesian product with an edge) constructors, and the perfect-code
//! predicate everything else is measured against.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::abelian::{ConnectionSetReport, Element, GroupSpec};

/// An undirected simple graph; adjacency lists are sorted and loop-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// A set of vertex indices, kept strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("connection set rejected: {0:?}")]
    InvalidConnectionSet(ConnectionSetReport),
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl Graph {
    /// Builds a graph from an edge set; loops are the caller's error.
    pub fn from_edges(
        n: usize,
        edges: &BTreeSet<(usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < v && v < n, "edge ({u},{v}) out of range or a loop");
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        if let Some(ref l) = labels {
            assert_eq!(l.len(), n);
        }
        Graph { adjacency, labels }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// `Some(k)` when every vertex has degree `k`; `None` when degrees
    /// differ or the graph has no vertices.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == k).then_some(k)
    }
}

/// Cayley graph of `g` with connection set `set`: `x ~ x + s` for `s` in the
/// set. Requires the set to be inverse-closed, identity-free and duplicate
/// free; it does not have to generate (the graph is then disconnected).
pub fn cayley(g: &GroupSpec, set: &[Element]) -> Result<Graph, GraphError> {
    let report = g.validate_connection_set(set);
    if !report.inverse_closed
        || !report.excludes_identity
        || report.distinct_count != set.len()
    {
        return Err(GraphError::InvalidConnectionSet(report));
    }
    let n = g.order() as usize;
    let mut edges = BTreeSet::new();
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let x = g.element_at(i);
        labels.push(x.to_string());
        for s in set {
            let j = g.index_of(&g.add(&x, s));
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Ok(Graph::from_edges(n, &edges, Some(labels)))
}

/// Cartesian product with a single edge: two layers of `g` plus a perfect
/// matching between them. Vertex `(v, k)` gets index `2v + k`, and labels
/// `( ..., k)` extend the base labels by the layer bit.
pub fn cartesian_k2(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = BTreeSet::new();
    for v in 0..n {
        edges.insert((2 * v, 2 * v + 1));
        for &u in g.neighbors(v) {
            if v < u {
                edges.insert((2 * v, 2 * u));
                edges.insert((2 * v + 1, 2 * u + 1));
            }
        }
    }
    let labels = (0..2 * n)
        .map(|i| {
            let (v, k) = (i / 2, i % 2);
            match g.label(v) {
                Some(base) if base.ends_with(')') => {
                    format!("{},{k})", &base[..base.len() - 1])
                }
                _ => format!("({v},{k})"),
            }
        })
        .collect();
    Graph::from_edges(2 * n, &edges, Some(labels))
}

/// True when every vertex has exactly one member of `c` in its closed
/// neighborhood. Equivalent on regular graphs to: `c` independent,
/// dominating, and `|c| * (k + 1) = n`.
pub fn is_perfect_code(g: &Graph, c: &VertexSet) -> bool {
    debug_assert!(c.iter().all(|v| v < g.vertex_count()));
    (0..g.vertex_count()).all(|v| {
        let mut hits = usize::from(c.contains(v));
        for &u in g.neighbors(v) {
            hits += usize::from(c.contains(u));
            if hits > 1 {
                return false;
            }
        }
        hits == 1
    })
}

/// True when no edge joins two members of `c`.
pub fn is_independent(g: &Graph, c: &VertexSet) -> bool {
    c.iter().all(|v| g.neighbors(v).iter().all(|&u| !c.contains(u)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
}

/// Deterministic text export; identical graphs produce identical bytes.
pub fn export(g: &Graph, format: ExportFormat) -> String {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count());
    for v in 0..g.vertex_count() {
        for &u in g.neighbors(v) {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    edges.sort_unstable();
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        ExportFormat::Dot => {
            out.push_str("graph {\n");
            if g.labels.is_some() {
                for v in 0..g.vertex_count() {
                    writeln!(out, "  {v} [label=\"{}\"];", g.label(v).unwrap()).unwrap();
                }
            }
            for (u, v) in edges {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(factors: &[u64]) -> GroupSpec {
        GroupSpec::new(factors.to_vec()).unwrap()
    }

    fn els(g: &GroupSpec, coords: &[&[i64]]) -> Vec<Element> {
        coords.iter().map(|c| g.element(c).unwrap()).collect()
    }

    fn path3() -> Graph {
        let edges = BTreeSet::from([(0, 1), (1, 2)]);
        Graph::from_edges(3, &edges, None)
    }

    #[test]
    fn cayley_quintic_on_z6() {
        let g = z(&[6]);
        let s = els(&g, &[&[1], &[5], &[2], &[4], &[3]]);
        let gr = cayley(&g, &s).unwrap();
        assert_eq!(gr.vertex_count(), 6);
        assert_eq!(gr.regular_degree(), Some(5)); // K6
        assert_eq!(gr.label(0), Some("(0)"));
        assert!(gr.has_edge(0, 3));
    }

    #[test]
    fn cayley_disconnected_is_allowed() {
        let g = z(&[6]);
        let s = els(&g, &[&[2], &[4]]);
        let gr = cayley(&g, &s).unwrap();
        assert_eq!(gr.regular_degree(), Some(2));
        assert!(!gr.has_edge(0, 1)); // two triangles
        assert!(gr.has_edge(0, 2));
    }

    #[test]
    fn cayley_rejects_identity_and_open_sets() {
        let g = z(&[6]);
        let with_id = els(&g, &[&[0], &[3]]);
        assert!(matches!(
            cayley(&g, &with_id),
            Err(GraphError::InvalidConnectionSet(r)) if !r.excludes_identity
        ));
        let open = els(&g, &[&[1], &[2], &[4]]);
        assert!(matches!(
            cayley(&g, &open),
            Err(GraphError::InvalidConnectionSet(r)) if !r.inverse_closed
        ));
        let dup = els(&g, &[&[1], &[5], &[1]]);
        assert!(cayley(&g, &dup).is_err());
    }

    #[test]
    fn prism_of_a_triangle() {
        let g = z(&[3]);
        let s = els(&g, &[&[1], &[2]]);
        let tri = cayley(&g, &s).unwrap();
        let prism = cartesian_k2(&tri);
        assert_eq!(prism.vertex_count(), 6);
        assert_eq!(prism.edge_count(), tri.edge_count() * 2 + 3);
        assert_eq!(prism.regular_degree(), Some(3));
        assert_eq!(prism.label(1), Some("(0,1)"));
        assert_eq!(prism.label(4), Some("(2,0)"));
        assert!(prism.has_edge(0, 1));
        assert!(prism.has_edge(0, 2) && prism.has_edge(1, 3));
    }

    #[test]
    fn perfect_code_on_k6_and_prism() {
        let g = z(&[6]);
        let s = els(&g, &[&[1], &[5], &[2], &[4], &[3]]);
        let k6 = cayley(&g, &s).unwrap();
        assert!(is_perfect_code(&k6, &VertexSet::new(vec![0])));
        assert!(!is_perfect_code(&k6, &VertexSet::new(vec![0, 3])));
        assert!(!is_perfect_code(&k6, &VertexSet::new(vec![])));

        let z4 = z(&[4]);
        let c4 = cayley(&z4, &els(&z4, &[&[1], &[3]])).unwrap();
        let cube = cartesian_k2(&c4);
        assert!(is_perfect_code(&cube, &VertexSet::new(vec![0, 5])));
        assert!(!is_perfect_code(&cube, &VertexSet::new(vec![0, 3])));
    }

    #[test]
    fn independence() {
        let p = path3();
        assert!(is_independent(&p, &VertexSet::new(vec![0, 2])));
        assert!(!is_independent(&p, &VertexSet::new(vec![0, 1])));
        assert!(is_independent(&p, &VertexSet::new(vec![])));
    }

    #[test]
    fn exports_are_deterministic() {
        let p = path3();
        assert_eq!(export(&p, ExportFormat::EdgeList), "0 1\n1 2\n");
        let single = Graph::from_edges(2, &BTreeSet::from([(0, 1)]), None);
        let dot = export(&single, ExportFormat::Dot);
        assert!(dot.contains("0 -- 1"));
        assert_eq!(dot, "graph {\n  0 -- 1;\n}\n");
        let empty = Graph::from_edges(1, &BTreeSet::new(), None);
        assert_eq!(export(&empty, ExportFormat::Dot), "graph {\n}\n");
        let g = z(&[3]);
        let tri = cayley(&g, &els(&g, &[&[1], &[2]])).unwrap();
        assert_eq!(export(&tri, ExportFormat::EdgeList), "0 1\n0 2\n1 2\n");
        let dot_tri = export(&tri, ExportFormat::Dot);
        assert!(dot_tri.contains("0 [label=\"(0)\"];"));
    }

    #[test]
    fn vertex_set_canonicalizes() {
        let s = VertexSet::new(vec![3, 1, 3, 0]);
        assert_eq!(s.members(), &[0, 1, 3]);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.len(), 3);
    }
}
