//! The k-subset functor on finite sets with injections, Kneser graphs, and
//! the lax structure maps that embed a sum of Kneser graphs into the Kneser
//! graph of the sum.
//!
//! Vertices of `KG_{n,k}` are indexed by the colex position of the sorted
//! subset; the same indexing is used by Green-product contexts built over
//! these graphs, so it must never change.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A k-element subset of `{0..n-1}`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset(Vec<usize>);

impl KSubset {
    pub fn new(mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        let before = elems.len();
        elems.dedup();
        if elems.len() != before {
            return Err(Error::InvalidGraph(
                "subset has repeated elements".to_string(),
            ));
        }
        Ok(KSubset(elems))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.0.iter().all(|x| !other.0.contains(x))
    }

    /// Image under a pointwise map (must stay injective on this subset).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Result<KSubset> {
        KSubset::new(self.0.iter().map(|&x| f(x)).collect())
    }

    /// Compact label such as `12` for {0,1} shown 1-based, matching the
    /// vertex labels used in drawings. Multi-digit points are dot-separated.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&x| x + 1 < 10) {
            self.0.iter().map(|&x| (x + 1).to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|&x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All k-subsets of `{0..n-1}` in colex order. This order is prefix-stable:
/// the subsets of `{0..m-1}` occupy the first C(m,k) positions for every
/// m <= n, which is what lets a smaller Kneser graph sit inside a larger one
/// without reindexing.
pub fn k_subsets(n: usize, k: usize) -> Vec<KSubset> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![KSubset(Vec::new())];
    }
    let total = binomial(n, k);
    let mut out = Vec::with_capacity(total);
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(KSubset(current.clone()));
        if out.len() == total {
            break;
        }
        // colex successor: advance the smallest position not blocked by its
        // neighbor, resetting everything below it
        let mut i = 0;
        while i + 1 < k && current[i] + 1 == current[i + 1] {
            i += 1;
        }
        current[i] += 1;
        for (j, slot) in current.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
    out
}

/// Colex index of a sorted k-subset: the sum of C(element, position+1).
pub fn subset_index(s: &KSubset) -> usize {
    s.elements()
        .iter()
        .enumerate()
        .map(|(i, &x)| binomial(x, i + 1))
        .sum()
}

/// The Kneser graph `KG_{n,k}`: vertices are k-subsets of an n-set in colex
/// order, with an edge between disjoint subsets.
pub fn kneser_graph(n: usize, k: usize) -> SimpleGraph {
    let subsets = k_subsets(n, k);
    let mut g = SimpleGraph::edgeless(subsets.len());
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i].is_disjoint(&subsets[j]) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// An injective function between finite sets `{0..m-1} -> {0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injection {
    map: Vec<usize>,
    codomain_size: usize,
}

impl Injection {
    pub fn new(map: Vec<usize>, codomain_size: usize) -> Result<Self> {
        let mut seen = vec![false; codomain_size];
        for &i in &map {
            if i >= codomain_size || seen[i] {
                return Err(Error::InvalidInjection(format!(
                    "{map:?} is not injective into 0..{codomain_size}"
                )));
            }
            seen[i] = true;
        }
        Ok(Injection {
            map,
            codomain_size,
        })
    }

    pub fn identity(n: usize) -> Self {
        Injection {
            map: (0..n).collect(),
            codomain_size: n,
        }
    }

    /// The inclusion of `{0..m-1}` into `{0..n-1}`, shifted by `offset`.
    pub fn shifted_inclusion(m: usize, n: usize, offset: usize) -> Result<Self> {
        Injection::new((0..m).map(|i| i + offset).collect(), n)
    }

    pub fn domain_size(&self) -> usize {
        self.map.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `g` after `f`: applies `f` first.
    pub fn compose(g: &Injection, f: &Injection) -> Result<Injection> {
        if f.codomain_size != g.map.len() {
            return Err(Error::InvalidInjection(format!(
                "cannot compose: inner codomain {} != outer domain {}",
                f.codomain_size,
                g.map.len()
            )));
        }
        Injection::new(f.map.iter().map(|&i| g.map[i]).collect(), g.codomain_size)
    }

    /// All injections `{0..m-1} -> {0..n-1}`, for functoriality checks.
    pub fn all(m: usize, n: usize) -> Vec<Injection> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(partial) = stack.pop() {
            if partial.len() == m {
                out.push(Injection {
                    map: partial,
                    codomain_size: n,
                });
                continue;
            }
            for cand in 0..n {
                if !partial.contains(&cand) {
                    let mut next = partial.clone();
                    next.push(cand);
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| a.map.cmp(&b.map));
        out
    }
}

/// The action of an injection on k-subsets: `U -> f[U]`, expressed on colex
/// vertex indices. The result maps indices of `KG_{m,k}` to indices of
/// `KG_{n,k}`.
pub fn subsets_map(f: &Injection, k: usize) -> Vec<usize> {
    let domain = k_subsets(f.domain_size(), k);
    domain
        .iter()
        .map(|s| {
            let image = s.map(|x| f.apply(x)).expect("injection preserves size");
            subset_index(&image)
        })
        .collect()
}

/// A map of simple graphs: a vertex function that sends edges to edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMap {
    pub domain: SimpleGraph,
    pub codomain: SimpleGraph,
    pub vertex_map: Vec<usize>,
}

impl GraphMap {
    pub fn new(domain: SimpleGraph, codomain: SimpleGraph, vertex_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != domain.n_vertices() {
            return Err(Error::InvalidGraph(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                domain.n_vertices()
            )));
        }
        for &v in &vertex_map {
            if v >= codomain.n_vertices() {
                return Err(Error::InvalidGraph(format!(
                    "vertex map image {v} out of range"
                )));
            }
        }
        for (u, v) in domain.edges() {
            if !codomain.has_edge(vertex_map[u], vertex_map[v]) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) is not preserved"
                )));
            }
        }
        Ok(GraphMap {
            domain,
            codomain,
            vertex_map,
        })
    }

    pub fn apply(&self, v: usize) -> usize {
        self.vertex_map[v]
    }
}

/// The graph embedding `KG_{m,k} -> KG_{n,k}` induced by an injection.
pub fn kneser_embedding(f: &Injection, k: usize) -> Result<GraphMap> {
    let domain = kneser_graph(f.domain_size(), k);
    let codomain = kneser_graph(f.codomain_size(), k);
    GraphMap::new(domain, codomain, subsets_map(f, k))
}

/// The lax structure map `KG_{m,k} + KG_{n,k} -> KG_{m+n,k}`: left vertices
/// go along the inclusion, right vertices along the shifted inclusion. The
/// domain is the disjoint union with the right block's indices offset by
/// C(m,k).
pub fn kneser_laxator(m: usize, n: usize, k: usize) -> Result<GraphMap> {
    let left = kneser_graph(m, k);
    let right = kneser_graph(n, k);
    let domain = left.disjoint_union(&right);
    let codomain = kneser_graph(m + n, k);
    let left_map = subsets_map(&Injection::shifted_inclusion(m, m + n, 0)?, k);
    let right_map = subsets_map(&Injection::shifted_inclusion(n, m + n, m)?, k);
    let mut vertex_map = left_map;
    vertex_map.extend(right_map);
    GraphMap::new(domain, codomain, vertex_map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_enumeration() {
        let subs = k_subsets(4, 2);
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 3],
            vec![1, 3],
            vec![2, 3],
        ];
        assert_eq!(
            subs.iter().map(|s| s.elements().to_vec()).collect::<Vec<_>>(),
            expected
        );
        assert_eq!(k_subsets(5, 2).len(), 10);
        assert_eq!(k_subsets(3, 0).len(), 1);
        assert_eq!(k_subsets(2, 3).len(), 0);
        // index function matches enumeration position
        for (i, s) in k_subsets(7, 3).iter().enumerate() {
            assert_eq!(subset_index(s), i);
        }
    }

    #[test]
    fn kneser_small_graphs() {
        let kg42 = kneser_graph(4, 2);
        assert_eq!(kg42.n_vertices(), 6);
        assert_eq!(kg42.n_edges(), 3);
        // perfect matching 12-34, 13-24, 14-23 in colex indices
        assert!(kg42.has_edge(0, 5));
        assert!(kg42.has_edge(1, 4));
        assert!(kg42.has_edge(2, 3));

        let kg32 = kneser_graph(3, 2);
        assert_eq!(kg32.n_vertices(), 3);
        assert_eq!(kg32.n_edges(), 0);

        let petersen = kneser_graph(5, 2);
        assert_eq!(petersen.n_vertices(), 10);
        assert_eq!(petersen.n_edges(), 15);
        for v in 0..10 {
            assert_eq!(petersen.degree(v).unwrap(), 3);
        }
        assert_eq!(petersen.girth(), Some(5));
    }

    #[test]
    fn vertex_and_edge_counts() {
        for n in 0..=8 {
            for k in 0..=3usize {
                let g = kneser_graph(n, k);
                assert_eq!(g.n_vertices(), binomial(n, k));
                let expected_edges = if k == 0 {
                    0
                } else {
                    binomial(n, k) * binomial(n.saturating_sub(k), k) / 2
                };
                assert_eq!(g.n_edges(), expected_edges, "KG_{{{n},{k}}}");
            }
        }
    }

    #[test]
    fn subsets_map_examples() {
        let id = Injection::identity(4);
        assert_eq!(subsets_map(&id, 2), vec![0, 1, 2, 3, 4, 5]);
        // inclusion 2 -> 4 sends {0,1} to {0,1}
        let inc = Injection::shifted_inclusion(2, 4, 0).unwrap();
        assert_eq!(subsets_map(&inc, 2), vec![0]);
        // shifted inclusion sends {0,1} to {2,3}
        let shift = Injection::shifted_inclusion(2, 4, 2).unwrap();
        assert_eq!(subsets_map(&shift, 2), vec![5]);
    }

    #[test]
    fn functoriality_of_subsets_map() {
        for m in 0..=3 {
            for l in m..=4 {
                for n in l..=5 {
                    for f in Injection::all(m, l) {
                        for g in Injection::all(l, n) {
                            let gf = Injection::compose(&g, &f).unwrap();
                            let lhs = subsets_map(&gf, 2);
                            let via_f = subsets_map(&f, 2);
                            let via_g = subsets_map(&g, 2);
                            let rhs: Vec<usize> =
                                via_f.iter().map(|&i| via_g[i]).collect();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn embeddings_preserve_and_reflect_edges() {
        let inc = Injection::shifted_inclusion(4, 5, 0).unwrap();
        let emb = kneser_embedding(&inc, 2).unwrap();
        // edge preservation is checked by GraphMap::new; check reflection
        let dom = kneser_graph(4, 2);
        let cod = kneser_graph(5, 2);
        for u in 0..dom.n_vertices() {
            for v in 0..dom.n_vertices() {
                if u != v && cod.has_edge(emb.apply(u), emb.apply(v)) {
                    assert!(dom.has_edge(u, v));
                }
            }
        }
        // identity injection gives the identity graph map
        let id = kneser_embedding(&Injection::identity(4), 2).unwrap();
        assert_eq!(id.vertex_map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn laxator_images_are_cross_adjacent() {
        // at (2,2,2) the two single-vertex summands land on disjoint pairs
        let lax = kneser_laxator(2, 2, 2).unwrap();
        assert_eq!(lax.vertex_map, vec![0, 5]);
        assert!(lax.codomain.has_edge(0, 5));

        // cross-block adjacency for k = 2 at several sizes
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let lax = kneser_laxator(m, n, 2).unwrap();
            let left = binomial(m, 2);
            let right = binomial(n, 2);
            for i in 0..left {
                for j in 0..right {
                    assert!(
                        lax.codomain.has_edge(lax.apply(i), lax.apply(left + j)),
                        "left {i} and right {j} must be adjacent after placement"
                    );
                }
            }
        }

        // empty right summand degenerates to the identity embedding
        let lax = kneser_laxator(3, 0, 2).unwrap();
        assert_eq!(lax.vertex_map, vec![0, 1, 2]);
    }

    #[test]
    fn laxator_associativity_coherence() {
        let (a, b, c) = (2, 2, 3);
        // route 1: (a + b) + c
        let ab = kneser_laxator(a, b, 2).unwrap();
        let ab_c = kneser_laxator(a + b, c, 2).unwrap();
        // route 2: a + (b + c)
        let bc = kneser_laxator(b, c, 2).unwrap();
        let a_bc = kneser_laxator(a, b + c, 2).unwrap();
        let (ca, cb, cc) = (binomial(a, 2), binomial(b, 2), binomial(c, 2));
        for i in 0..(ca + cb + cc) {
            let via_left = if i < ca + cb {
                ab_c.apply(ab.apply(i))
            } else {
                ab_c.apply(binomial(a + b, 2) + (i - ca - cb))
            };
            let via_right = if i < ca {
                a_bc.apply(i)
            } else {
                a_bc.apply(ca + bc.apply(i - ca))
            };
            assert_eq!(via_left, via_right, "vertex {i}");
        }
    }
}
