//! Simple graphs (used both as index graphs of Green products and as the
//! networks themselves), quivers, and the cospan-insertion construction that
//! turns an index graph into the shape of a colimit diagram.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite simple graph on vertices `0..n`: no loops, unordered edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n_vertices} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph {
            n_vertices,
            edges: set,
        })
    }

    pub fn edgeless(n_vertices: usize) -> Self {
        SimpleGraph {
            n_vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n_vertices: usize) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..n_vertices {
            for v in (u + 1)..n_vertices {
                edges.insert((u, v));
            }
        }
        SimpleGraph {
            n_vertices,
            edges,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if u >= self.n_vertices || v >= self.n_vertices {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n_vertices
            )));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n_vertices {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} out of range for {} vertices",
                self.n_vertices
            )));
        }
        Ok(self.edges.iter().filter(|(a, b)| *a == v || *b == v).count())
    }

    /// True iff every vertex has degree at most `k`.
    pub fn is_k_bounded(&self, k: usize) -> bool {
        (0..self.n_vertices).all(|v| self.degree(v).unwrap() <= k)
    }

    /// Overlay: union of edge sets on the same vertex set.
    pub fn union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        if self.n_vertices != other.n_vertices {
            return Err(Error::MismatchedContexts(format!(
                "cannot union graphs on {} and {} vertices",
                self.n_vertices, other.n_vertices
            )));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().copied());
        Ok(SimpleGraph {
            n_vertices: self.n_vertices,
            edges,
        })
    }

    /// Side-by-side placement; the right graph's vertices are shifted up.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let m = self.n_vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|(u, v)| (u + m, v + m)));
        SimpleGraph {
            n_vertices: m + other.n_vertices,
            edges,
        }
    }

    /// Relabels vertices along a permutation.
    pub fn relabel(&self, sigma: &Permutation) -> Result<SimpleGraph> {
        if sigma.len() != self.n_vertices {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points applied to a graph on {} vertices",
                sigma.len(),
                self.n_vertices
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|(u, v)| {
                let (a, b) = (sigma.apply(*u), sigma.apply(*v));
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(SimpleGraph {
            n_vertices: self.n_vertices,
            edges,
        })
    }

    /// True iff `sigma` maps edges to edges bijectively.
    pub fn is_automorphism(&self, sigma: &Permutation) -> bool {
        sigma.len() == self.n_vertices
            && self
                .edges
                .iter()
                .all(|(u, v)| self.has_edge(sigma.apply(*u), sigma.apply(*v)))
    }

    /// Length of the shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        // BFS from each vertex; a non-tree edge at depths (d1, d2) closes a
        // cycle of length d1 + d2 + 1.
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (u, v) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut best: Option<usize> = None;
        for root in 0..self.n_vertices {
            let mut dist = vec![usize::MAX; self.n_vertices];
            let mut parent = vec![usize::MAX; self.n_vertices];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// DOT rendering with an optional label per vertex.
    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n_vertices {
            match labels {
                Some(ls) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", ls[v]);
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// An object of the quiver produced by [`insert_cospan`]: either a vertex of
/// the original graph or one of its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuiverObject {
    Vertex(usize),
    Edge(usize, usize),
}

/// A directed multigraph: objects plus arrows with total source and target
/// maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub objects: Vec<QuiverObject>,
    /// Arrows as (source index, target index) into `objects`.
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, arrow: usize) -> QuiverObject {
        self.objects[self.arrows[arrow].0]
    }

    pub fn tgt(&self, arrow: usize) -> QuiverObject {
        self.objects[self.arrows[arrow].1]
    }
}

/// Replaces every edge {u, v} of a simple graph with a cospan
/// `u -> {u,v} <- v`: objects are vertices plus edges, and there is one arrow
/// (v, e) for each incidence v in e.
pub fn insert_cospan(g: &SimpleGraph) -> Quiver {
    let mut objects: Vec<QuiverObject> =
        (0..g.n_vertices()).map(QuiverObject::Vertex).collect();
    let edge_base = objects.len();
    let edge_list: Vec<(usize, usize)> = g.edges().collect();
    objects.extend(edge_list.iter().map(|(u, v)| QuiverObject::Edge(*u, *v)));
    let mut arrows = Vec::new();
    for (i, (u, v)) in edge_list.iter().enumerate() {
        arrows.push((*u, edge_base + i));
        arrows.push((*v, edge_base + i));
    }
    Quiver { objects, arrows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = SimpleGraph::new(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.n_edges(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert!(SimpleGraph::new(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 5)]).is_err());
    }

    #[test]
    fn degrees() {
        let triangle = SimpleGraph::complete(3);
        for v in 0..3 {
            assert_eq!(triangle.degree(v).unwrap(), 2);
        }
        assert!(triangle.is_k_bounded(2));
        assert!(!triangle.is_k_bounded(1));
        let g = SimpleGraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.degree(2).unwrap(), 0);
        assert!(g.degree(3).is_err());
    }

    #[test]
    fn cospan_insertion_counts() {
        // path 0-1-2 plus edge 0-2 plus pendant 0-3: 4 vertices, 4 edges
        let g = SimpleGraph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let q = insert_cospan(&g);
        assert_eq!(q.n_objects(), 8);
        assert_eq!(q.n_arrows(), 8);

        let edgeless = SimpleGraph::edgeless(5);
        let q = insert_cospan(&edgeless);
        assert_eq!(q.n_objects(), 5);
        assert_eq!(q.n_arrows(), 0);

        let triangle = SimpleGraph::complete(3);
        let q = insert_cospan(&triangle);
        assert_eq!(q.n_objects(), 6);
        assert_eq!(q.n_arrows(), 6);
        // source of each arrow is a vertex inside the target edge
        for a in 0..q.n_arrows() {
            match (q.src(a), q.tgt(a)) {
                (QuiverObject::Vertex(v), QuiverObject::Edge(x, y)) => {
                    assert!(v == x || v == y);
                }
                other => panic!("unexpected cospan arrow {other:?}"),
            }
        }
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(SimpleGraph::complete(3).girth(), Some(3));
        assert_eq!(SimpleGraph::new(4, [(0, 1), (1, 2)]).unwrap().girth(), None);
        let square = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(square.girth(), Some(4));
    }

    #[test]
    fn dot_output_is_stable() {
        let g = SimpleGraph::new(3, [(2, 0), (0, 1)]).unwrap();
        let dot = g.to_dot("g", None);
        assert!(dot.starts_with("graph g {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("0 -- 2;"));
    }
}
