//! Network models built from a single edge monoid: the free varietal model
//! (Green products over Kneser graphs), the ordinary weighted-graph model
//! (one monoid coordinate per edge), and plain simple graphs. All three share
//! one interface (per-size monoids, a disjoint-union structure map, and a
//! symmetric-group action), which is also what the adjunction counit needs
//! from its target.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::green::{fold_letters, GreenContext, GreenElement, Letter};
use crate::kneser::{binomial, k_subsets, kneser_graph, kneser_laxator, subsets_map, Injection};
use crate::monoid::{check_hom, MonoidHandle, MonoidHom, Value, VarietyTag, DEFAULT_LAW_BUDGET};
use crate::perm::Permutation;

/// The shared shape of a network model: a monoid of networks for every
/// vertex count, embeddings that place two networks side by side, and a
/// vertex-relabeling action.
pub trait NetworkModel {
    type Net: Clone;

    /// The monoid of networks on two vertices, identified with the edge
    /// monoid.
    fn edge_monoid(&self) -> MonoidHandle;
    fn size(&self, net: &Self::Net) -> usize;
    /// The identity network on `n` vertices.
    fn empty(&self, n: usize) -> Self::Net;
    /// The monoid operation of the constituent monoid: gluing on a shared
    /// vertex set.
    fn overlay(&self, a: &Self::Net, b: &Self::Net) -> Result<Self::Net>;
    fn eq(&self, a: &Self::Net, b: &Self::Net) -> Result<bool>;
    /// The structure map placing `a` and `b` side by side; `b`'s vertices
    /// are shifted past `a`'s.
    fn disjoint_union(&self, a: &Self::Net, b: &Self::Net) -> Result<Self::Net>;
    /// The symmetric-group action relabeling vertices.
    fn permute(&self, sigma: &Permutation, a: &Self::Net) -> Result<Self::Net>;
    /// The two-vertex network carrying `value` on its only edge.
    fn edge_network(&self, value: &Value) -> Result<Self::Net>;
}

/// A network on `n` vertices in the free varietal model: a Green-product
/// element over the Kneser graph `KG_{n,2}` whose components are the edges of
/// the complete graph on `n`.
#[derive(Debug, Clone)]
pub struct NetworkElement {
    n: usize,
    element: GreenElement,
}

impl NetworkElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn green(&self) -> &GreenElement {
        &self.element
    }

    pub fn is_empty(&self) -> bool {
        self.element.is_empty()
    }

    /// The canonical word as (u, v, value) edge letters, u < v.
    pub fn edge_letters(&self) -> Vec<(usize, usize, Value)> {
        let subsets = k_subsets(self.n, 2);
        self.element
            .word()
            .iter()
            .map(|l| {
                let s = subsets[l.component].elements();
                (s[0], s[1], l.value.clone())
            })
            .collect()
    }

    /// The simple graph of edges appearing in the word.
    pub fn support(&self) -> SimpleGraph {
        let mut g = SimpleGraph::edgeless(self.n);
        for (u, v, _) in self.edge_letters() {
            g.add_edge(u, v).unwrap();
        }
        g
    }
}

impl std::fmt::Display for NetworkElement {
    /// The network literal with 1-based labels, `1` for the empty network.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let ctx = self.element.context();
        let parts: Vec<String> = self
            .edge_letters()
            .iter()
            .map(|(u, v, value)| {
                format!(
                    "e({},{})={}",
                    u + 1,
                    v + 1,
                    ctx.component(0).format_element(value)
                )
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

type EnumerationCache = RwLock<HashMap<(usize, usize), Arc<Vec<NetworkElement>>>>;

/// The free varietal network model on an edge monoid: its networks on `n`
/// vertices are Green-product elements over `KG_{n,2}`, so only disjoint
/// edges commute (plus whatever the variety forces).
pub struct VarietalModel {
    monoid: MonoidHandle,
    variety: VarietyTag,
    contexts: RwLock<HashMap<usize, Arc<GreenContext>>>,
    enumerations: EnumerationCache,
}

impl VarietalModel {
    /// Fails if the variety does not admit the edge monoid (for example a
    /// noncommutative monoid under CMon, or the naturals under GMon).
    pub fn new(monoid: MonoidHandle, variety: VarietyTag) -> Result<Self> {
        variety.admits(&monoid, DEFAULT_LAW_BUDGET)?;
        Ok(VarietalModel {
            monoid,
            variety,
            contexts: RwLock::new(HashMap::new()),
            enumerations: RwLock::new(HashMap::new()),
        })
    }

    pub fn variety(&self) -> VarietyTag {
        self.variety
    }

    pub fn monoid(&self) -> &MonoidHandle {
        &self.monoid
    }

    /// The Green-product context of the constituent monoid on `n` vertices.
    /// Contexts are built once per `n` and shared.
    pub fn green_context(&self, n: usize) -> Arc<GreenContext> {
        if let Some(ctx) = self.contexts.read().unwrap().get(&n) {
            return Arc::clone(ctx);
        }
        let ctx = GreenContext::uniform(kneser_graph(n, 2), &self.monoid, self.variety)
            .expect("variety admission was checked at model construction");
        self.contexts
            .write()
            .unwrap()
            .entry(n)
            .or_insert(ctx)
            .clone()
    }

    /// Builds a network from edge letters `(u, v, value)` in word order.
    pub fn network(&self, n: usize, letters: &[(usize, usize, Value)]) -> Result<NetworkElement> {
        let mut word = Vec::with_capacity(letters.len());
        for (u, v, value) in letters {
            if u == v || *u >= n || *v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) is not an edge of the complete graph on {n} vertices"
                )));
            }
            let subset =
                crate::kneser::KSubset::new(vec![*u, *v]).expect("two distinct endpoints");
            word.push(Letter::new(
                crate::kneser::subset_index(&subset),
                value.clone(),
            ));
        }
        Ok(NetworkElement {
            n,
            element: self.green_context(n).normalize(word)?,
        })
    }

    /// Wraps a Green element from this model's context.
    pub fn from_green(&self, n: usize, element: GreenElement) -> Result<NetworkElement> {
        let ctx = self.green_context(n);
        if !Arc::ptr_eq(&ctx, element.context()) && ctx.as_ref() != element.context().as_ref() {
            return Err(Error::MismatchedContexts(
                "green element does not live over this model's context".to_string(),
            ));
        }
        Ok(NetworkElement { n, element })
    }

    /// All distinct networks on `n` vertices representable by words of
    /// length at most `max_word_len`. Cached per (n, length) pair.
    pub fn elements(&self, n: usize, max_word_len: usize) -> Result<Arc<Vec<NetworkElement>>> {
        let key = (n, max_word_len);
        if let Some(cached) = self.enumerations.read().unwrap().get(&key) {
            return Ok(Arc::clone(cached));
        }
        let greens = self.green_context(n).elements_up_to_length(max_word_len)?;
        let nets: Arc<Vec<NetworkElement>> = Arc::new(
            greens
                .into_iter()
                .map(|element| NetworkElement { n, element })
                .collect(),
        );
        Ok(self
            .enumerations
            .write()
            .unwrap()
            .entry(key)
            .or_insert(nets)
            .clone())
    }

    fn require_size(&self, a: &NetworkElement, b: &NetworkElement) -> Result<()> {
        if a.n == b.n {
            Ok(())
        } else {
            Err(Error::MismatchedContexts(format!(
                "networks on {} and {} vertices",
                a.n, b.n
            )))
        }
    }
}

impl NetworkModel for VarietalModel {
    type Net = NetworkElement;

    fn edge_monoid(&self) -> MonoidHandle {
        self.monoid.clone()
    }

    fn size(&self, net: &NetworkElement) -> usize {
        net.n
    }

    fn empty(&self, n: usize) -> NetworkElement {
        NetworkElement {
            n,
            element: self.green_context(n).empty(),
        }
    }

    fn overlay(&self, a: &NetworkElement, b: &NetworkElement) -> Result<NetworkElement> {
        self.require_size(a, b)?;
        Ok(NetworkElement {
            n: a.n,
            element: a.element.multiply(&b.element)?,
        })
    }

    fn eq(&self, a: &NetworkElement, b: &NetworkElement) -> Result<bool> {
        self.require_size(a, b)?;
        a.element.equal(&b.element)
    }

    fn disjoint_union(&self, a: &NetworkElement, b: &NetworkElement) -> Result<NetworkElement> {
        let (m, n) = (a.n, b.n);
        let lax = kneser_laxator(m, n, 2)?;
        let offset = binomial(m, 2);
        let mut word: Vec<Letter> = a
            .element
            .word()
            .iter()
            .map(|l| Letter::new(lax.apply(l.component), l.value.clone()))
            .collect();
        word.extend(
            b.element
                .word()
                .iter()
                .map(|l| Letter::new(lax.apply(offset + l.component), l.value.clone())),
        );
        Ok(NetworkElement {
            n: m + n,
            element: self.green_context(m + n).normalize(word)?,
        })
    }

    fn permute(&self, sigma: &Permutation, a: &NetworkElement) -> Result<NetworkElement> {
        if sigma.len() != a.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points applied to a network on {} vertices",
                sigma.len(),
                a.n
            )));
        }
        let inj = Injection::new((0..a.n).map(|i| sigma.apply(i)).collect(), a.n)?;
        let vmap = subsets_map(&inj, 2);
        let word = a
            .element
            .word()
            .iter()
            .map(|l| Letter::new(vmap[l.component], l.value.clone()))
            .collect();
        Ok(NetworkElement {
            n: a.n,
            element: self.green_context(a.n).normalize(word)?,
        })
    }

    fn edge_network(&self, value: &Value) -> Result<NetworkElement> {
        self.network(2, &[(0, 1, value.clone())])
    }
}

/// A network in the ordinary weighted-graph model: one weight per edge of
/// the complete graph, in colex edge order. Identity-weighted edges mean
/// "no edge".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryNetworkElement {
    pub n: usize,
    pub weights: Vec<Value>,
}

impl OrdinaryNetworkElement {
    /// The simple graph of non-identity weights.
    pub fn support(&self, monoid: &MonoidHandle) -> SimpleGraph {
        let subsets = k_subsets(self.n, 2);
        let mut g = SimpleGraph::edgeless(self.n);
        for (i, w) in self.weights.iter().enumerate() {
            if !monoid.is_identity(w) {
                let s = subsets[i].elements();
                g.add_edge(s[0], s[1]).unwrap();
            }
        }
        g
    }
}

/// The ordinary network model for weighted graphs: the constituent monoid on
/// `n` vertices is the product of C(n,2) copies of the edge monoid, so all
/// edges commute.
pub struct OrdinaryModel {
    monoid: MonoidHandle,
}

impl OrdinaryModel {
    pub fn new(monoid: MonoidHandle) -> Self {
        OrdinaryModel { monoid }
    }

    pub fn monoid(&self) -> &MonoidHandle {
        &self.monoid
    }

    pub fn network(&self, n: usize, letters: &[(usize, usize, Value)]) -> Result<OrdinaryNetworkElement> {
        let mut out = self.empty(n);
        for (u, v, value) in letters {
            if u == v || *u >= n || *v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) is not an edge of the complete graph on {n} vertices"
                )));
            }
            if !self.monoid.contains(value) {
                return Err(Error::ValueNotInMonoid {
                    value: format!("{value:?}"),
                    monoid: self.monoid.name(),
                });
            }
            let subset = crate::kneser::KSubset::new(vec![*u, *v]).unwrap();
            let idx = crate::kneser::subset_index(&subset);
            out.weights[idx] = self.monoid.op(&out.weights[idx], value);
        }
        Ok(out)
    }

    fn require_size(&self, a: &OrdinaryNetworkElement, b: &OrdinaryNetworkElement) -> Result<()> {
        if a.n == b.n {
            Ok(())
        } else {
            Err(Error::MismatchedContexts(format!(
                "networks on {} and {} vertices",
                a.n, b.n
            )))
        }
    }

    /// All weight tuples over a finite edge monoid.
    pub fn elements(&self, n: usize) -> Result<Vec<OrdinaryNetworkElement>> {
        let values = self.monoid.elements().ok_or_else(|| {
            Error::BudgetExceeded(format!("{} is not finite", self.monoid.name()))
        })?;
        let slots = binomial(n, 2);
        let mut out = vec![OrdinaryNetworkElement {
            n,
            weights: Vec::new(),
        }];
        for _ in 0..slots {
            let mut next = Vec::with_capacity(out.len() * values.len());
            for partial in &out {
                for v in &values {
                    let mut w = partial.weights.clone();
                    w.push(v.clone());
                    next.push(OrdinaryNetworkElement { n, weights: w });
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl NetworkModel for OrdinaryModel {
    type Net = OrdinaryNetworkElement;

    fn edge_monoid(&self) -> MonoidHandle {
        self.monoid.clone()
    }

    fn size(&self, net: &OrdinaryNetworkElement) -> usize {
        net.n
    }

    fn empty(&self, n: usize) -> OrdinaryNetworkElement {
        OrdinaryNetworkElement {
            n,
            weights: vec![self.monoid.identity(); binomial(n, 2)],
        }
    }

    fn overlay(&self, a: &OrdinaryNetworkElement, b: &OrdinaryNetworkElement) -> Result<OrdinaryNetworkElement> {
        self.require_size(a, b)?;
        Ok(OrdinaryNetworkElement {
            n: a.n,
            weights: a
                .weights
                .iter()
                .zip(b.weights.iter())
                .map(|(x, y)| self.monoid.op(x, y))
                .collect(),
        })
    }

    fn eq(&self, a: &OrdinaryNetworkElement, b: &OrdinaryNetworkElement) -> Result<bool> {
        self.require_size(a, b)?;
        Ok(a.weights
            .iter()
            .zip(b.weights.iter())
            .all(|(x, y)| self.monoid.eq(x, y)))
    }

    fn disjoint_union(&self, a: &OrdinaryNetworkElement, b: &OrdinaryNetworkElement) -> Result<OrdinaryNetworkElement> {
        let (m, n) = (a.n, b.n);
        let mut out = self.empty(m + n);
        let left = subsets_map(&Injection::shifted_inclusion(m, m + n, 0)?, 2);
        let right = subsets_map(&Injection::shifted_inclusion(n, m + n, m)?, 2);
        for (e, w) in a.weights.iter().enumerate() {
            out.weights[left[e]] = w.clone();
        }
        for (e, w) in b.weights.iter().enumerate() {
            out.weights[right[e]] = w.clone();
        }
        Ok(out)
    }

    fn permute(&self, sigma: &Permutation, a: &OrdinaryNetworkElement) -> Result<OrdinaryNetworkElement> {
        if sigma.len() != a.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points applied to a network on {} vertices",
                sigma.len(),
                a.n
            )));
        }
        let inj = Injection::new((0..a.n).map(|i| sigma.apply(i)).collect(), a.n)?;
        let vmap = subsets_map(&inj, 2);
        let mut out = self.empty(a.n);
        for (e, w) in a.weights.iter().enumerate() {
            out.weights[vmap[e]] = w.clone();
        }
        Ok(out)
    }

    fn edge_network(&self, value: &Value) -> Result<OrdinaryNetworkElement> {
        if !self.monoid.contains(value) {
            return Err(Error::ValueNotInMonoid {
                value: format!("{value:?}"),
                monoid: self.monoid.name(),
            });
        }
        Ok(OrdinaryNetworkElement {
            n: 2,
            weights: vec![value.clone()],
        })
    }
}

/// The simple-graph network model: networks are plain simple graphs and
/// overlay is union. Behaves exactly like the ordinary boolean model.
pub struct SimpleGraphModel;

impl NetworkModel for SimpleGraphModel {
    type Net = SimpleGraph;

    fn edge_monoid(&self) -> MonoidHandle {
        MonoidHandle::Bool
    }

    fn size(&self, net: &SimpleGraph) -> usize {
        net.n_vertices()
    }

    fn empty(&self, n: usize) -> SimpleGraph {
        SimpleGraph::edgeless(n)
    }

    fn overlay(&self, a: &SimpleGraph, b: &SimpleGraph) -> Result<SimpleGraph> {
        a.union(b)
    }

    fn eq(&self, a: &SimpleGraph, b: &SimpleGraph) -> Result<bool> {
        if a.n_vertices() != b.n_vertices() {
            return Err(Error::MismatchedContexts(format!(
                "graphs on {} and {} vertices",
                a.n_vertices(),
                b.n_vertices()
            )));
        }
        Ok(a == b)
    }

    fn disjoint_union(&self, a: &SimpleGraph, b: &SimpleGraph) -> Result<SimpleGraph> {
        Ok(a.disjoint_union(b))
    }

    fn permute(&self, sigma: &Permutation, a: &SimpleGraph) -> Result<SimpleGraph> {
        a.relabel(sigma)
    }

    fn edge_network(&self, value: &Value) -> Result<SimpleGraph> {
        match value {
            Value::Bool(true) => SimpleGraph::new(2, [(0, 1)]),
            Value::Bool(false) => Ok(SimpleGraph::edgeless(2)),
            _ => Err(Error::ValueNotInMonoid {
                value: format!("{value:?}"),
                monoid: "bool".to_string(),
            }),
        }
    }
}

/// Transports a CMon varietal network to its ordinary weight tuple: collect
/// the letters of each edge and combine them in the edge monoid.
pub fn cmon_to_ordinary(model: &VarietalModel, g: &NetworkElement) -> Result<OrdinaryNetworkElement> {
    if model.variety() != VarietyTag::CMon {
        return Err(Error::VarietyViolation(
            "the ordinary transport is defined for CMon models only".to_string(),
        ));
    }
    let monoid = model.monoid();
    let mut weights = vec![monoid.identity(); binomial(g.n(), 2)];
    for l in g.green().word() {
        weights[l.component] = monoid.op(&weights[l.component], &l.value);
    }
    Ok(OrdinaryNetworkElement { n: g.n(), weights })
}

/// Inverse transport: one letter per non-identity weight, in edge order.
pub fn cmon_from_ordinary(model: &VarietalModel, o: &OrdinaryNetworkElement) -> Result<NetworkElement> {
    if model.variety() != VarietyTag::CMon {
        return Err(Error::VarietyViolation(
            "the ordinary transport is defined for CMon models only".to_string(),
        ));
    }
    let word: Vec<Letter> = o
        .weights
        .iter()
        .enumerate()
        .map(|(c, w)| Letter::new(c, w.clone()))
        .collect();
    let element = model.green_context(o.n).normalize(word)?;
    Ok(NetworkElement { n: o.n, element })
}

/// Applies a monoid homomorphism letterwise, producing a network of the
/// target model. Rejects maps that fail the homomorphism laws.
pub fn induced_hom(
    f: &MonoidHom,
    source: &VarietalModel,
    target: &VarietalModel,
    g: &NetworkElement,
) -> Result<NetworkElement> {
    if f.source != *source.monoid() || f.target != *target.monoid() {
        return Err(Error::MismatchedContexts(
            "homomorphism endpoints do not match the models".to_string(),
        ));
    }
    if source.variety() != target.variety() {
        return Err(Error::MismatchedContexts(
            "models live in different varieties".to_string(),
        ));
    }
    if !check_hom(f, DEFAULT_LAW_BUDGET) {
        return Err(Error::LawlessHom(format!("{f:?}")));
    }
    let word = g
        .green()
        .word()
        .iter()
        .map(|l| Letter::new(l.component, f.apply(&l.value)))
        .collect();
    let element = target.green_context(g.n()).normalize(word)?;
    Ok(NetworkElement { n: g.n(), element })
}

/// The permutation placing an ordered edge: 0 goes to i, 1 goes to j, and
/// the remaining points follow in increasing order.
pub fn edge_placement_perm(n: usize, i: usize, j: usize) -> Result<Permutation> {
    if i >= n || j >= n || i == j {
        return Err(Error::InvalidPermutation(format!(
            "cannot place edge ({i},{j}) on {n} points"
        )));
    }
    let mut map = vec![i, j];
    map.extend((0..n).filter(|&p| p != i && p != j));
    Permutation::from_map(map)
}

/// The same placement written as a product of transpositions, (0 i) after
/// (1 j). Agrees with [`edge_placement_perm`] on the points 0 and 1; for a
/// lawful model the two give the same one-edge placement.
pub fn edge_placement_double_transposition(n: usize, i: usize, j: usize) -> Result<Permutation> {
    let t0i = Permutation::transposition(n, 0, i)?;
    let t1j = Permutation::transposition(n, 1, j)?;
    t0i.compose(&t1j)
}

/// Evaluates the adjunction counit: folds a varietal network over the edge
/// monoid of `target` into the target model, placing each letter's value on
/// the corresponding edge. Precondition (checked): placements on disjoint
/// edges commute in the target; failure signals the target is not a lawful
/// network model.
pub fn counit_eval<F: NetworkModel>(target: &F, g: &NetworkElement) -> Result<F::Net> {
    let n = g.n();
    let ctx = g.green().context();
    if ctx.graph().n_vertices() > 0 && *ctx.component(0) != target.edge_monoid() {
        return Err(Error::MismatchedContexts(format!(
            "network is weighted in {} but the target's edge monoid is {}",
            ctx.component(0).name(),
            target.edge_monoid().name()
        )));
    }
    let subsets = k_subsets(n, 2);
    let place = |component: usize, value: &Value| -> Result<F::Net> {
        let s = subsets[component].elements();
        let base = target.disjoint_union(&target.edge_network(value)?, &target.empty(n - 2))?;
        target.permute(&edge_placement_perm(n, s[0], s[1])?, &base)
    };
    // cocone condition: placements on disjoint edges must commute
    let monoid = target.edge_monoid();
    let sample = monoid.elements().unwrap_or_else(|| monoid.sample(3));
    for (c1, c2) in ctx.graph().edges() {
        for a in &sample {
            for b in &sample {
                let x = place(c1, a)?;
                let y = place(c2, b)?;
                let xy = target.overlay(&x, &y)?;
                let yx = target.overlay(&y, &x)?;
                if !target.eq(&xy, &yx)? {
                    return Err(Error::FoldIncompatible(format!(
                        "placements of disjoint edges {c1} and {c2} do not commute in the target"
                    )));
                }
            }
        }
    }
    let mut acc = target.empty(n);
    for l in g.green().word() {
        acc = target.overlay(&acc, &place(l.component, &l.value)?)?;
    }
    Ok(acc)
}

/// Folds a varietal network into an arbitrary monoid along one hom per
/// Kneser vertex, via the Green-product fold.
pub fn network_fold(
    g: &NetworkElement,
    target: &MonoidHandle,
    maps: &[MonoidHom],
) -> Result<Value> {
    crate::green::universal_fold(g.green(), target, maps)
}

/// Letterwise fold of a raw edge word; used to exercise representative
/// independence.
pub fn network_fold_letters(word: &[Letter], target: &MonoidHandle, maps: &[MonoidHom]) -> Value {
    fold_letters(word, target, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{boolean_monoid, nat_monoid, path_band_monoid};

    fn t() -> Value {
        Value::Bool(true)
    }

    fn bool_model(variety: VarietyTag) -> VarietalModel {
        VarietalModel::new(boolean_monoid(), variety).unwrap()
    }

    #[test]
    fn gamma_two_is_the_edge_monoid() {
        let model = bool_model(VarietyTag::Mon);
        assert_eq!(model.elements(2, 4).unwrap().len(), 2);
        let band = VarietalModel::new(path_band_monoid(), VarietyTag::Mon).unwrap();
        assert_eq!(band.elements(2, 4).unwrap().len(), 6);
    }

    #[test]
    fn gamma_zero_and_one_are_trivial() {
        let model = bool_model(VarietyTag::Mon);
        assert_eq!(model.elements(0, 3).unwrap().len(), 1);
        assert_eq!(model.elements(1, 3).unwrap().len(), 1);
    }

    #[test]
    fn cmon_gamma_four_has_sixty_four_elements() {
        let model = bool_model(VarietyTag::CMon);
        assert_eq!(model.elements(4, 6).unwrap().len(), 64);
    }

    #[test]
    fn overlay_identity_and_noncommutativity() {
        let model = bool_model(VarietyTag::Mon);
        let g = model.network(3, &[(0, 1, t())]).unwrap();
        let e = model.empty(3);
        assert!(model.eq(&model.overlay(&g, &e).unwrap(), &g).unwrap());
        // edges sharing vertex 0 do not commute in the free model
        let h = model.network(3, &[(0, 2, t())]).unwrap();
        let gh = model.overlay(&g, &h).unwrap();
        let hg = model.overlay(&h, &g).unwrap();
        assert!(!model.eq(&gh, &hg).unwrap());
    }

    #[test]
    fn overlay_merges_simple_graphs() {
        // {12, 34} overlaid with {12, 24} gives {12, 24, 34} (1-based labels)
        let model = bool_model(VarietyTag::CMon);
        let a = model.network(4, &[(0, 1, t()), (2, 3, t())]).unwrap();
        let b = model.network(4, &[(0, 1, t()), (1, 3, t())]).unwrap();
        let c = model
            .network(4, &[(0, 1, t()), (1, 3, t()), (2, 3, t())])
            .unwrap();
        assert!(model.eq(&model.overlay(&a, &b).unwrap(), &c).unwrap());
    }

    #[test]
    fn disjoint_union_places_blocks() {
        let model = bool_model(VarietyTag::Mon);
        let g = model.network(2, &[(0, 1, t())]).unwrap();
        let h = model.network(2, &[(0, 1, t())]).unwrap();
        let gh = model.disjoint_union(&g, &h).unwrap();
        assert_eq!(gh.n(), 4);
        assert_eq!(
            gh.edge_letters(),
            vec![(0, 1, t()), (2, 3, t())]
        );
        // unit law: 1_0 is the unit for disjoint union
        let unit = model.empty(0);
        assert!(model
            .eq(&model.disjoint_union(&g, &unit).unwrap(), &g)
            .unwrap());
        assert!(model
            .eq(&model.disjoint_union(&unit, &g).unwrap(), &g)
            .unwrap());
    }

    #[test]
    fn cross_block_letters_commute_after_disjoint_union() {
        let model = bool_model(VarietyTag::Mon);
        let a = model.network(2, &[(0, 1, t())]).unwrap();
        let empty = model.empty(2);
        let left = model.disjoint_union(&a, &empty).unwrap();
        let right = model.disjoint_union(&empty, &a).unwrap();
        let lr = model.overlay(&left, &right).unwrap();
        let rl = model.overlay(&right, &left).unwrap();
        assert!(model.eq(&lr, &rl).unwrap());
    }

    #[test]
    fn permutation_action() {
        let model = bool_model(VarietyTag::Mon);
        let g = model.network(3, &[(0, 2, t())]).unwrap();
        let swap = Permutation::from_cycles(3, "(0 1)").unwrap();
        let moved = model.permute(&swap, &g).unwrap();
        assert_eq!(moved.edge_letters(), vec![(1, 2, t())]);
        let id = Permutation::identity(3);
        assert!(model.eq(&model.permute(&id, &g).unwrap(), &g).unwrap());
        // functoriality on a sample
        let s1 = Permutation::from_cycles(3, "(0 1 2)").unwrap();
        let s2 = Permutation::from_cycles(3, "(1 2)").unwrap();
        let comp = s1.compose(&s2).unwrap();
        let lhs = model.permute(&comp, &g).unwrap();
        let rhs = model.permute(&s1, &model.permute(&s2, &g).unwrap()).unwrap();
        assert!(model.eq(&lhs, &rhs).unwrap());
    }

    #[test]
    fn block_swap_symmetry() {
        let model = bool_model(VarietyTag::Mon);
        let g = model.network(2, &[(0, 1, t())]).unwrap();
        let h = model.empty(2);
        let gh = model.disjoint_union(&g, &h).unwrap();
        let hg = model.disjoint_union(&h, &g).unwrap();
        let swapped = model
            .permute(&Permutation::block_swap(2, 2), &gh)
            .unwrap();
        assert!(model.eq(&swapped, &hg).unwrap());
    }

    #[test]
    fn ordinary_model_basics() {
        let model = OrdinaryModel::new(boolean_monoid());
        // (m1,0,...) overlaid with (0,m2,0,...) commutes
        let a = model.network(4, &[(0, 1, t())]).unwrap();
        let b = model.network(4, &[(0, 2, t())]).unwrap();
        let ab = model.overlay(&a, &b).unwrap();
        let ba = model.overlay(&b, &a).unwrap();
        assert!(model.eq(&ab, &ba).unwrap());
        // multigraph weights add coordinatewise over the naturals
        let nats = OrdinaryModel::new(nat_monoid());
        let g = nats.network(3, &[(0, 1, Value::Nat(2))]).unwrap();
        let h = nats.network(3, &[(0, 1, Value::Nat(3))]).unwrap();
        let gh = nats.overlay(&g, &h).unwrap();
        assert_eq!(gh.weights[0], Value::Nat(5));
    }

    #[test]
    fn ordinary_bool_model_is_simple_graphs() {
        let ord = OrdinaryModel::new(boolean_monoid());
        let sg = SimpleGraphModel;
        // compare through supports on all 2^3 graphs at n = 3
        for x in ord.elements(3).unwrap() {
            for y in ord.elements(3).unwrap() {
                let via_ord = ord.overlay(&x, &y).unwrap().support(&boolean_monoid());
                let via_sg = sg
                    .overlay(&x.support(&boolean_monoid()), &y.support(&boolean_monoid()))
                    .unwrap();
                assert_eq!(via_ord, via_sg);
            }
        }
    }

    #[test]
    fn cmon_transport_round_trips() {
        let model = bool_model(VarietyTag::CMon);
        let g = model.network(3, &[(0, 1, t()), (0, 2, t())]).unwrap();
        let o = cmon_to_ordinary(&model, &g).unwrap();
        assert_eq!(o.weights.iter().filter(|w| **w == t()).count(), 2);
        let back = cmon_from_ordinary(&model, &o).unwrap();
        assert!(model.eq(&back, &g).unwrap());
        // empty network maps to the all-identity tuple
        let o = cmon_to_ordinary(&model, &model.empty(3)).unwrap();
        assert!(o.weights.iter().all(|w| *w == Value::Bool(false)));
        // rejected outside CMon
        let mon = bool_model(VarietyTag::Mon);
        let g = mon.network(3, &[(0, 1, t())]).unwrap();
        assert!(cmon_to_ordinary(&mon, &g).is_err());
    }

    #[test]
    fn induced_hom_collapses_multiplicities() {
        let nats = VarietalModel::new(nat_monoid(), VarietyTag::CMon).unwrap();
        let bools = bool_model(VarietyTag::CMon);
        let f = MonoidHom::collapse_to_bool(&nat_monoid());
        let g = nats
            .network(3, &[(0, 1, Value::Nat(3)), (1, 2, Value::Nat(1))])
            .unwrap();
        let image = induced_hom(&f, &nats, &bools, &g).unwrap();
        let expected = bools.network(3, &[(0, 1, t()), (1, 2, t())]).unwrap();
        assert!(bools.eq(&image, &expected).unwrap());
        // identity hom is the identity
        let id = MonoidHom::identity(&boolean_monoid());
        let h = bools.network(3, &[(0, 1, t())]).unwrap();
        assert!(bools
            .eq(&induced_hom(&id, &bools, &bools, &h).unwrap(), &h)
            .unwrap());
        // a lawless map is rejected
        let swap = MonoidHom::new(boolean_monoid(), boolean_monoid(), |v| match v {
            Value::Bool(b) => Value::Bool(!b),
            _ => unreachable!(),
        });
        assert!(matches!(
            induced_hom(&swap, &bools, &bools, &h),
            Err(Error::LawlessHom(_))
        ));
    }

    #[test]
    fn counit_on_the_free_model_is_the_identity() {
        for variety in [VarietyTag::Mon, VarietyTag::CMon, VarietyTag::GMon] {
            let model = bool_model(variety);
            for g in model.elements(3, 3).unwrap().iter() {
                let image = counit_eval(&model, g).unwrap();
                assert!(model.eq(&image, g).unwrap());
            }
        }
    }

    #[test]
    fn counit_into_simple_graphs_takes_support() {
        let model = bool_model(VarietyTag::Mon);
        let g = model
            .network(3, &[(0, 1, t()), (0, 2, t()), (0, 1, t())])
            .unwrap();
        let image = counit_eval(&SimpleGraphModel, &g).unwrap();
        assert_eq!(image, g.support());
        // empty word maps to the identity
        let image = counit_eval(&SimpleGraphModel, &model.empty(3)).unwrap();
        assert_eq!(image, SimpleGraph::edgeless(3));
    }

    #[test]
    fn values_and_models_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::monoid::MonoidHandle>();
        assert_send_sync::<crate::monoid::MonoidHom>();
        assert_send_sync::<crate::green::GreenContext>();
        assert_send_sync::<crate::green::GreenElement>();
        assert_send_sync::<VarietalModel>();
        assert_send_sync::<NetworkElement>();
        assert_send_sync::<OrdinaryModel>();
    }

    #[test]
    fn concurrent_reads_share_the_context_cache() {
        let model = std::sync::Arc::new(bool_model(VarietyTag::Mon));
        let workers: Vec<_> = (0..4)
            .map(|i| {
                let model = std::sync::Arc::clone(&model);
                std::thread::spawn(move || {
                    let g = model.network(4, &[(i % 3, 3, t())]).unwrap();
                    model.eq(&g, &g).unwrap()
                })
            })
            .collect();
        for w in workers {
            assert!(w.join().unwrap());
        }
    }

    #[test]
    fn edge_placement_conventions_agree_on_lawful_targets() {
        let sg = SimpleGraphModel;
        for n in 2..=5 {
            for i in 0..n {
                for j in (i + 1)..n {
                    let a = edge_placement_perm(n, i, j).unwrap();
                    let b = edge_placement_double_transposition(n, i, j).unwrap();
                    assert_eq!(a.apply(0), i);
                    assert_eq!(a.apply(1), j);
                    assert_eq!(b.apply(0), i);
                    assert_eq!(b.apply(1), j);
                    let base = sg
                        .disjoint_union(
                            &sg.edge_network(&t()).unwrap(),
                            &sg.empty(n - 2),
                        )
                        .unwrap();
                    let via_a = sg.permute(&a, &base).unwrap();
                    let via_b = sg.permute(&b, &base).unwrap();
                    assert_eq!(via_a, via_b);
                }
            }
        }
    }
}
