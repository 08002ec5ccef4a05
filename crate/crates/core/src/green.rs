//! Green products of monoid families over an indexing simple graph, with
//! canonical normal forms.
//!
//! An element is a word of letters, each letter carrying a component (a
//! vertex of the index graph) and a value in that component's monoid. Two
//! adjacent letters whose components are adjacent in the index graph may be
//! swapped (a shuffle); same-component letters multiply inside their monoid.
//! Equality of elements is decided by comparing canonical forms: the
//! lexicographically least reduced word of the shuffle class, computed by a
//! combine-to-fixpoint pass followed by greedy front-selection. Varieties
//! add rules: under CMon every pair of letters commutes and words collapse
//! to one letter per component; under GMon every letter absorbs the running
//! product of its same-component predecessors and a letter recurring later
//! in the word is deleted, both instances of aba = ab.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::monoid::{MonoidHandle, MonoidHom, Value, VarietyTag, DEFAULT_LAW_BUDGET};
use crate::perm::Permutation;

/// One letter of a Green-product word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub component: usize,
    pub value: Value,
}

impl Letter {
    pub fn new(component: usize, value: Value) -> Self {
        Letter { component, value }
    }
}

/// The shared context of a Green product: index graph, one monoid per
/// vertex, and the variety the product is taken in.
#[derive(Debug, PartialEq, Eq)]
pub struct GreenContext {
    graph: SimpleGraph,
    components: Vec<MonoidHandle>,
    variety: VarietyTag,
}

impl GreenContext {
    /// Builds a context, checking that the variety admits every component.
    pub fn new(
        graph: SimpleGraph,
        components: Vec<MonoidHandle>,
        variety: VarietyTag,
    ) -> Result<Arc<Self>> {
        if components.len() != graph.n_vertices() {
            return Err(Error::MismatchedContexts(format!(
                "{} components for a graph on {} vertices",
                components.len(),
                graph.n_vertices()
            )));
        }
        for m in &components {
            variety.admits(m, DEFAULT_LAW_BUDGET)?;
        }
        Ok(Arc::new(GreenContext {
            graph,
            components,
            variety,
        }))
    }

    /// A context with the same monoid at every vertex.
    pub fn uniform(graph: SimpleGraph, monoid: &MonoidHandle, variety: VarietyTag) -> Result<Arc<Self>> {
        let components = vec![monoid.clone(); graph.n_vertices()];
        GreenContext::new(graph, components, variety)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn component(&self, v: usize) -> &MonoidHandle {
        &self.components[v]
    }

    pub fn components(&self) -> &[MonoidHandle] {
        &self.components
    }

    pub fn variety(&self) -> VarietyTag {
        self.variety
    }

    fn same_as(&self, other: &GreenContext) -> bool {
        self == other
    }

    /// The fixed letter order: component index, then the component monoid's
    /// element order.
    pub fn cmp_letters(&self, a: &Letter, b: &Letter) -> Ordering {
        a.component.cmp(&b.component).then_with(|| {
            self.components[a.component].cmp_elements(&a.value, &b.value)
        })
    }

    fn check_letters(&self, word: &[Letter]) -> Result<()> {
        for l in word {
            if l.component >= self.components.len() {
                return Err(Error::UnknownComponent {
                    index: l.component,
                    n_vertices: self.graph.n_vertices(),
                });
            }
            let m = &self.components[l.component];
            if !m.contains(&l.value) {
                return Err(Error::ValueNotInMonoid {
                    value: format!("{:?}", l.value),
                    monoid: m.name(),
                });
            }
        }
        Ok(())
    }

    /// Leftmost pair of same-component letters that shuffles can bring
    /// together: every letter strictly between must commute with them.
    fn find_combinable(&self, word: &[Letter]) -> Option<(usize, usize)> {
        for i in 0..word.len() {
            let c = word[i].component;
            // only the first later occurrence can ever be reachable: any
            // blocker stays between i and all later occurrences too
            if let Some(off) = word[i + 1..].iter().position(|l| l.component == c) {
                let j = i + 1 + off;
                if word[i + 1..j]
                    .iter()
                    .all(|l| self.graph.has_edge(l.component, c))
                {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Leftmost pair of identical letters (same component and equal value),
    /// at any distance. Used by the GMon deletion rule.
    fn find_identical_pair(&self, word: &[Letter]) -> Option<(usize, usize)> {
        for i in 0..word.len() {
            let m = &self.components[word[i].component];
            for j in (i + 1)..word.len() {
                if word[j].component == word[i].component && m.eq(&word[j].value, &word[i].value) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// In a graphic context an earlier letter may be reinserted just before
    /// a later letter of the same component (aba = ab read backwards) and
    /// combined into it, so every letter can absorb the in-order product of
    /// its same-component predecessors. Values become per-component running
    /// products; the running products are idempotent, so the pass is too.
    fn absorb_left_to_right(&self, word: &mut [Letter]) {
        let mut running: Vec<Option<Value>> = vec![None; self.components.len()];
        for l in word.iter_mut() {
            let m = &self.components[l.component];
            if let Some(prev) = &running[l.component] {
                l.value = m.op(prev, &l.value);
            }
            running[l.component] = Some(l.value.clone());
        }
    }

    /// Reduces a word to a fixpoint of the length-decreasing rules: drop
    /// identity letters, combine reachable same-component pairs, and (GMon
    /// only) absorb earlier same-component values into later letters and
    /// delete the later of two identical letters.
    fn reduce(&self, mut word: Vec<Letter>) -> Vec<Letter> {
        loop {
            word.retain(|l| !self.components[l.component].is_identity(&l.value));
            if self.variety == VarietyTag::GMon {
                self.absorb_left_to_right(&mut word);
            }
            if let Some((i, j)) = self.find_combinable(&word) {
                let m = &self.components[word[i].component];
                let merged = m.op(&word[i].value, &word[j].value);
                word.remove(j);
                if m.is_identity(&merged) {
                    word.remove(i);
                } else {
                    word[i].value = merged;
                }
                continue;
            }
            if self.variety == VarietyTag::GMon {
                if let Some((_, j)) = self.find_identical_pair(&word) {
                    word.remove(j);
                    continue;
                }
            }
            return word;
        }
    }

    /// Lexicographically least word of the shuffle class of a reduced word,
    /// by greedy front-selection: repeatedly pull the least letter whose
    /// every predecessor commutes with it.
    fn lex_least(&self, mut word: Vec<Letter>) -> Vec<Letter> {
        let mut out = Vec::with_capacity(word.len());
        while !word.is_empty() {
            let mut best = 0;
            for p in 1..word.len() {
                let movable = word[..p]
                    .iter()
                    .all(|q| self.graph.has_edge(q.component, word[p].component));
                if movable && self.cmp_letters(&word[p], &word[best]) == Ordering::Less {
                    best = p;
                }
            }
            out.push(word.remove(best));
        }
        out
    }

    /// Canonical form of an arbitrary word in this context.
    pub fn normalize(self: &Arc<Self>, word: Vec<Letter>) -> Result<GreenElement> {
        self.check_letters(&word)?;
        let canonical = match self.variety {
            VarietyTag::CMon => {
                // full commutativity: one letter per component, sorted
                let mut per_component: Vec<Option<Value>> = vec![None; self.components.len()];
                for l in word {
                    let m = &self.components[l.component];
                    per_component[l.component] = Some(match per_component[l.component].take() {
                        Some(acc) => m.op(&acc, &l.value),
                        None => l.value,
                    });
                }
                per_component
                    .into_iter()
                    .enumerate()
                    .filter_map(|(c, v)| v.map(|v| Letter::new(c, v)))
                    .filter(|l| !self.components[l.component].is_identity(&l.value))
                    .collect()
            }
            VarietyTag::Mon | VarietyTag::GMon => {
                let reduced = self.reduce(word);
                self.lex_least(reduced)
            }
        };
        Ok(GreenElement {
            ctx: Arc::clone(self),
            word: canonical,
        })
    }

    /// The identity element: the empty word.
    pub fn empty(self: &Arc<Self>) -> GreenElement {
        GreenElement {
            ctx: Arc::clone(self),
            word: Vec::new(),
        }
    }

    /// All distinct elements representable by words of length at most
    /// `max_len` over finitely enumerated components, in a deterministic
    /// order. Errors if some component has no finite enumeration.
    pub fn elements_up_to_length(self: &Arc<Self>, max_len: usize) -> Result<Vec<GreenElement>> {
        let mut generators = Vec::new();
        for (c, m) in self.components.iter().enumerate() {
            let elems = m.elements().ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "cannot enumerate: component {c} ({}) is not finite",
                    m.name()
                ))
            })?;
            for v in elems {
                if !m.is_identity(&v) {
                    generators.push(Letter::new(c, v));
                }
            }
        }
        let mut seen: std::collections::HashSet<Vec<Letter>> = std::collections::HashSet::new();
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        seen.insert(Vec::new());
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in &generators {
                    let mut extended = w.clone();
                    extended.push(g.clone());
                    let canon = self.normalize(extended)?.word;
                    if seen.insert(canon.clone()) {
                        next.push(canon);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        let mut words: Vec<Vec<Letter>> = seen.into_iter().collect();
        words.sort_by(|a, b| {
            a.len().cmp(&b.len()).then_with(|| {
                for (x, y) in a.iter().zip(b.iter()) {
                    match self.cmp_letters(x, y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
        });
        Ok(words
            .into_iter()
            .map(|word| GreenElement {
                ctx: Arc::clone(self),
                word,
            })
            .collect())
    }
}

/// An element of a Green product, held in canonical normal form.
#[derive(Debug, Clone)]
pub struct GreenElement {
    ctx: Arc<GreenContext>,
    word: Vec<Letter>,
}

impl GreenElement {
    pub fn context(&self) -> &Arc<GreenContext> {
        &self.ctx
    }

    /// The canonical word. Never contains identity letters.
    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn require_same_context(&self, other: &GreenElement) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::MismatchedContexts(
                "elements live in different Green products".to_string(),
            ))
        }
    }

    /// The product: concatenate and renormalize.
    pub fn multiply(&self, other: &GreenElement) -> Result<GreenElement> {
        self.require_same_context(other)?;
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        self.ctx.normalize(word)
    }

    /// Equality of elements: identical canonical words.
    pub fn equal(&self, other: &GreenElement) -> Result<bool> {
        self.require_same_context(other)?;
        if self.word.len() != other.word.len() {
            return Ok(false);
        }
        Ok(self
            .word
            .iter()
            .zip(other.word.iter())
            .all(|(a, b)| {
                a.component == b.component
                    && self.ctx.components[a.component].eq(&a.value, &b.value)
            }))
    }

    /// Relabels components along a graph automorphism of the index graph and
    /// renormalizes.
    pub fn apply_automorphism(&self, sigma: &Permutation) -> Result<GreenElement> {
        if !self.ctx.graph.is_automorphism(sigma) {
            return Err(Error::NotAnAutomorphism);
        }
        for v in 0..self.ctx.components.len() {
            if self.ctx.components[sigma.apply(v)] != self.ctx.components[v] {
                return Err(Error::MismatchedContexts(
                    "automorphism moves a vertex onto a different component monoid".to_string(),
                ));
            }
        }
        let word = self
            .word
            .iter()
            .map(|l| Letter::new(sigma.apply(l.component), l.value.clone()))
            .collect();
        self.ctx.normalize(word)
    }
}

impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .word
            .iter()
            .map(|l| {
                format!(
                    "v{}:{}",
                    l.component,
                    self.ctx.components[l.component].format_element(&l.value)
                )
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Folds an element into a target monoid along one homomorphism per vertex.
/// The maps must form a commuting cocone: for every edge of the index graph
/// the images of the two endpoint monoids must commute elementwise (checked
/// exhaustively on finite components, on a sample otherwise). The result is
/// then independent of the representative word.
pub fn universal_fold(
    x: &GreenElement,
    target: &MonoidHandle,
    maps: &[MonoidHom],
) -> Result<Value> {
    let ctx = x.context();
    let n = ctx.graph().n_vertices();
    if maps.len() != n {
        return Err(Error::FoldIncompatible(format!(
            "{} maps for {} vertices",
            maps.len(),
            n
        )));
    }
    for (v, h) in maps.iter().enumerate() {
        if h.source != *ctx.component(v) {
            return Err(Error::FoldIncompatible(format!(
                "map at vertex {v} has source {}, component is {}",
                h.source.name(),
                ctx.component(v).name()
            )));
        }
        if h.target != *target {
            return Err(Error::FoldIncompatible(format!(
                "map at vertex {v} lands in {}, expected {}",
                h.target.name(),
                target.name()
            )));
        }
    }
    let sample_of = |m: &MonoidHandle| m.elements().unwrap_or_else(|| m.sample(5));
    for (u, v) in ctx.graph().edges() {
        for a in sample_of(ctx.component(u)) {
            for b in sample_of(ctx.component(v)) {
                let fa = maps[u].apply(&a);
                let fb = maps[v].apply(&b);
                if !target.eq(&target.op(&fa, &fb), &target.op(&fb, &fa)) {
                    return Err(Error::FoldIncompatible(format!(
                        "images of adjacent components {u} and {v} do not commute in {}",
                        target.name()
                    )));
                }
            }
        }
    }
    Ok(fold_letters(x.word(), target, maps))
}

/// Letterwise fold without the compatibility check; the word need not be
/// canonical. Exposed so representative independence can be exercised
/// directly on raw words.
pub fn fold_letters(word: &[Letter], target: &MonoidHandle, maps: &[MonoidHom]) -> Value {
    word.iter().fold(target.identity(), |acc, l| {
        target.op(&acc, &maps[l.component].apply(&l.value))
    })
}
