//! Named invariant suites, runnable from the CLI (`check <suite>`) and from
//! the acceptance test target. Each suite either passes with a short summary
//! or fails with a minimal counterexample.
//!
//! The equality suites compare two independently computed partitions of a
//! full word universe: the partition by canonical normal form, and the
//! partition by connectivity under the brute-force oracle moves. Agreement
//! of the partitions is exactly pairwise agreement of the two equality
//! deciders over the whole universe.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::green::{GreenContext, Letter};
use crate::io;
use crate::kneser::{binomial, kneser_graph};
use crate::monoid::{
    boolean_monoid, check_monoid_laws, direct_product, inclusion_left, inclusion_right,
    nat_monoid, path_band_monoid, projection_left, projection_right, MonoidHandle, MonoidHom,
    Value, VarietyTag, DEFAULT_LAW_BUDGET,
};
use crate::network::{
    cmon_from_ordinary, cmon_to_ordinary, counit_eval, edge_placement_double_transposition,
    edge_placement_perm, induced_hom, NetworkElement, NetworkModel, OrdinaryModel,
    SimpleGraphModel, VarietalModel,
};
use crate::operad::{
    full_bounded_degree_action, operad_compose, BoundedDegreeNetwork, MetricSpace,
    OperadOperation, Point, RangeLimitedContext,
};
use crate::oracle::{plain_moves, variety_moves};
use crate::perm::Permutation;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    fn from(name: impl Into<String>, outcome: std::result::Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => CheckReport::pass(name, detail),
            Err(detail) => CheckReport::fail(name, detail),
        }
    }
}

// ---------------------------------------------------------------------------
// deterministic pseudo-randomness for the randomized trials
// ---------------------------------------------------------------------------

struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(2685821657736338717).wrapping_add(1))
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.next_u64() >> 33) as usize) % n
    }

    fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

// ---------------------------------------------------------------------------
// word universes and partition agreement
// ---------------------------------------------------------------------------

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// The full universe of words of bounded length over the non-identity
/// letters of a finite-component context, in a compact byte encoding.
struct WordUniverse {
    ctx: Arc<GreenContext>,
    generators: Vec<Letter>,
    code_of: HashMap<Letter, u8>,
    words: Vec<Vec<u8>>,
    index: HashMap<u64, u32>,
    max_len: usize,
}

fn pack(codes: &[u8]) -> u64 {
    debug_assert!(codes.len() <= 7);
    let mut key = (codes.len() as u64) << 56;
    for (i, &c) in codes.iter().enumerate() {
        key |= (c as u64) << (8 * i);
    }
    key
}

impl WordUniverse {
    fn new(ctx: Arc<GreenContext>, max_len: usize) -> Result<Self> {
        let mut generators = Vec::new();
        for (c, m) in ctx.components().iter().enumerate() {
            for v in m.elements().ok_or_else(|| {
                crate::error::Error::BudgetExceeded(format!(
                    "component {c} has no finite enumeration"
                ))
            })? {
                if !m.is_identity(&v) {
                    generators.push(Letter::new(c, v));
                }
            }
        }
        let code_of: HashMap<Letter, u8> = generators
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u8))
            .collect();
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * generators.len());
            for w in &layer {
                for code in 0..generators.len() as u8 {
                    let mut extended = w.clone();
                    extended.push(code);
                    next.push(extended);
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (pack(w), i as u32))
            .collect();
        Ok(WordUniverse {
            ctx,
            generators,
            code_of,
            words,
            index,
            max_len,
        })
    }

    fn decode(&self, codes: &[u8]) -> Vec<Letter> {
        codes
            .iter()
            .map(|&c| self.generators[c as usize].clone())
            .collect()
    }

    fn encode(&self, word: &[Letter]) -> Option<u64> {
        let mut codes = Vec::with_capacity(word.len());
        for l in word {
            codes.push(*self.code_of.get(l)?);
        }
        Some(pack(&codes))
    }

    fn literal(&self, codes: &[u8]) -> String {
        io::format_word_literal(&self.ctx, &self.decode(codes))
    }
}

/// Compares canonical-form equality with oracle connectivity over the whole
/// universe. Returns (word count, class count) or the offending word pair.
fn partition_agreement(
    ctx: &Arc<GreenContext>,
    max_len: usize,
    label: &str,
) -> std::result::Result<String, String> {
    let universe = WordUniverse::new(Arc::clone(ctx), max_len).map_err(|e| e.to_string())?;
    let n_words = universe.words.len();
    let mut uf = UnionFind::new(n_words);
    for (i, codes) in universe.words.iter().enumerate() {
        let word = universe.decode(codes);
        let mut neighbors = plain_moves(ctx, &word);
        neighbors.extend(variety_moves(ctx, &word, universe.max_len));
        for next in neighbors {
            if next.len() > universe.max_len {
                continue;
            }
            let key = universe
                .encode(&next)
                .expect("oracle moves stay inside the generator alphabet");
            let j = *universe
                .index
                .get(&key)
                .expect("oracle moves stay inside the universe");
            uf.union(i as u32, j);
        }
    }
    // canonical keys per word
    let mut canon_to_root: HashMap<u64, (u32, u32)> = HashMap::new();
    let mut root_to_canon: HashMap<u32, (u64, u32)> = HashMap::new();
    for (i, codes) in universe.words.iter().enumerate() {
        let canonical = ctx
            .normalize(universe.decode(codes))
            .map_err(|e| e.to_string())?;
        let canon_key = universe
            .encode(canonical.word())
            .expect("canonical forms use the same letters");
        let root = uf.find(i as u32);
        match canon_to_root.entry(canon_key) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert((root, i as u32));
            }
            std::collections::hash_map::Entry::Occupied(e) => {
                let (seen_root, witness) = *e.get();
                if seen_root != root {
                    return Err(format!(
                        "{label}: canonical form identifies {} and {}, the oracle separates them",
                        universe.literal(&universe.words[witness as usize]),
                        universe.literal(codes),
                    ));
                }
            }
        }
        match root_to_canon.entry(root) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert((canon_key, i as u32));
            }
            std::collections::hash_map::Entry::Occupied(e) => {
                let (seen_canon, witness) = *e.get();
                if seen_canon != canon_key {
                    return Err(format!(
                        "{label}: oracle identifies {} and {}, canonical forms differ",
                        universe.literal(&universe.words[witness as usize]),
                        universe.literal(codes),
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{label}: {n_words} words, {} classes",
        root_to_canon.len()
    ))
}

fn network_context(monoid: &MonoidHandle, variety: VarietyTag, n: usize) -> Arc<GreenContext> {
    GreenContext::uniform(kneser_graph(n, 2), monoid, variety).expect("admissible context")
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn suite_monoid_laws() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let band = path_band_monoid();
    let finite = [
        boolean_monoid(),
        band.clone(),
        direct_product(&boolean_monoid(), &boolean_monoid()),
        direct_product(&band, &boolean_monoid()),
    ];
    for m in &finite {
        out.push(CheckReport::from(
            format!("monoid-laws: {}", m.name()),
            check_monoid_laws(m, DEFAULT_LAW_BUDGET)
                .map(|_| "associativity and identity on all triples".to_string())
                .map_err(|e| e.to_string()),
        ));
    }
    for m in [nat_monoid(), crate::monoid::free_monoid("ab").unwrap()] {
        out.push(CheckReport::from(
            format!("monoid-laws: {} (sampled)", m.name()),
            check_monoid_laws(&m, DEFAULT_LAW_BUDGET)
                .map(|_| "laws hold on the sample".to_string())
                .map_err(|e| e.to_string()),
        ));
    }
    // the band is graphic on all 36 pairs and noncommutative
    out.push(CheckReport::from(
        "monoid-laws: band graphic identity",
        VarietyTag::GMon
            .admits(&band, DEFAULT_LAW_BUDGET)
            .map(|_| "aba = ab on all 36 pairs".to_string())
            .map_err(|e| e.to_string()),
    ));
    let a = band.parse_element("a").unwrap();
    let c = band.parse_element("c").unwrap();
    out.push(CheckReport::from(
        "monoid-laws: band noncommutativity witness",
        if band.eq(&band.op(&a, &c), &band.op(&c, &a)) {
            Err("ac = ca, expected a noncommutative witness".to_string())
        } else {
            Ok("ac != ca".to_string())
        },
    ));
    // pointed-category equations for the direct product
    let b = boolean_monoid();
    let i1 = inclusion_left(&b, &band);
    let i2 = inclusion_right(&b, &band);
    let p1 = projection_left(&b, &band);
    let p2 = projection_right(&b, &band);
    let mut pointed = Ok("p1 i1 = 1, p2 i2 = 1, p2 i1 = 0, p1 i2 = 0 exhaustively".to_string());
    for x in b.elements().unwrap() {
        if !b.eq(&p1.apply(&i1.apply(&x)), &x)
            || !band.eq(&p2.apply(&i1.apply(&x)), &band.identity())
        {
            pointed = Err(format!("pointed equations fail at {}", b.format_element(&x)));
        }
    }
    for y in band.elements().unwrap() {
        if !band.eq(&p2.apply(&i2.apply(&y)), &y)
            || !b.eq(&p1.apply(&i2.apply(&y)), &b.identity())
        {
            pointed = Err(format!(
                "pointed equations fail at {}",
                band.format_element(&y)
            ));
        }
    }
    out.push(CheckReport::from("monoid-laws: product maps", pointed));
    out
}

fn suite_normal_form_mon() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=4 {
        let ctx = network_context(&boolean_monoid(), VarietyTag::Mon, n);
        out.push(CheckReport::from(
            format!("normal-form-mon: bool n={n} len<=5"),
            partition_agreement(&ctx, 5, &format!("bool/mon n={n}")),
        ));
    }
    for n in 0..=4 {
        let ctx = network_context(&path_band_monoid(), VarietyTag::Mon, n);
        out.push(CheckReport::from(
            format!("normal-form-mon: band n={n} len<=4"),
            partition_agreement(&ctx, 4, &format!("band/mon n={n}")),
        ));
    }
    out
}

fn suite_normal_form_varietal() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=4 {
        let ctx = network_context(&boolean_monoid(), VarietyTag::CMon, n);
        out.push(CheckReport::from(
            format!("normal-form-varietal: bool cmon n={n} len<=5"),
            partition_agreement(&ctx, 5, &format!("bool/cmon n={n}")),
        ));
    }
    for n in 0..=4 {
        let ctx = network_context(&boolean_monoid(), VarietyTag::GMon, n);
        out.push(CheckReport::from(
            format!("normal-form-varietal: bool gmon n={n} len<=5"),
            partition_agreement(&ctx, 5, &format!("bool/gmon n={n}")),
        ));
    }
    // the band is graphic but not commutative, so CMon does not apply to it
    for n in 0..=4 {
        let ctx = network_context(&path_band_monoid(), VarietyTag::GMon, n);
        out.push(CheckReport::from(
            format!("normal-form-varietal: band gmon n={n} len<=4"),
            partition_agreement(&ctx, 4, &format!("band/gmon n={n}")),
        ));
    }
    out
}

fn suite_green_canonical() -> Vec<CheckReport> {
    let mut out = Vec::new();
    // normalize is idempotent over a whole small universe
    let ctx = network_context(&path_band_monoid(), VarietyTag::Mon, 3);
    let universe = WordUniverse::new(Arc::clone(&ctx), 3).unwrap();
    let mut idem = Ok(format!(
        "normalize twice = normalize once on {} words",
        universe.words.len()
    ));
    for codes in &universe.words {
        let once = ctx.normalize(universe.decode(codes)).unwrap();
        let twice = ctx.normalize(once.word().to_vec()).unwrap();
        if !once.equal(&twice).unwrap() {
            idem = Err(format!(
                "normalize not idempotent at {}",
                universe.literal(codes)
            ));
            break;
        }
    }
    out.push(CheckReport::from("green-canonical: idempotence", idem));

    // multiplication is associative on all enumerated small elements
    for (monoid, n, len) in [
        (boolean_monoid(), 3usize, 2usize),
        (path_band_monoid(), 2, 2),
    ] {
        let ctx = network_context(&monoid, VarietyTag::Mon, n);
        let elems = ctx.elements_up_to_length(len).unwrap();
        let mut assoc = Ok(format!("{} elements, all triples", elems.len()));
        'outer: for x in &elems {
            for y in &elems {
                for z in &elems {
                    let left = x.multiply(y).unwrap().multiply(z).unwrap();
                    let right = x.multiply(&y.multiply(z).unwrap()).unwrap();
                    if !left.equal(&right).unwrap() {
                        assoc = Err(format!("associativity fails at ({x}, {y}, {z})"));
                        break 'outer;
                    }
                }
            }
        }
        out.push(CheckReport::from(
            format!("green-canonical: associativity over {} n={n}", monoid.name()),
            assoc,
        ));
    }

    // edgeless index graph on B, B: 2L + 1 elements of length <= L
    let mut counts = Ok("edgeless B+B has 2L+1 words of length <= L, L <= 6".to_string());
    for max_len in 0..=6usize {
        let ctx = GreenContext::uniform(
            SimpleGraph::edgeless(2),
            &boolean_monoid(),
            VarietyTag::Mon,
        )
        .unwrap();
        let got = ctx.elements_up_to_length(max_len).unwrap().len();
        if got != 2 * max_len + 1 {
            counts = Err(format!("expected {} elements at L={max_len}, found {got}", 2 * max_len + 1));
            break;
        }
    }
    out.push(CheckReport::from("green-canonical: alternating counts", counts));
    out
}

fn suite_complete_graph() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (n, expected) in [(2usize, 4usize), (3, 8)] {
        let ctx = GreenContext::uniform(
            SimpleGraph::complete(n),
            &boolean_monoid(),
            VarietyTag::Mon,
        )
        .unwrap();
        let elems = ctx.elements_up_to_length(2 * n).unwrap();
        let mut outcome = if elems.len() == expected {
            Ok(format!("{} elements over the complete graph on {n}", elems.len()))
        } else {
            Err(format!("expected {expected} elements, found {}", elems.len()))
        };
        // the fold into the n-fold direct product is injective, so the Green
        // product over a complete graph really is the direct product
        if outcome.is_ok() {
            let b = boolean_monoid();
            let mut target = b.clone();
            for _ in 1..n {
                target = direct_product(&target, &b);
            }
            // build the n inclusion homs by padding with identities
            let maps: Vec<MonoidHom> = (0..n)
                .map(|v| {
                    let target = target.clone();
                    let b = b.clone();
                    MonoidHom::new(b.clone(), target.clone(), move |value| {
                        // nested pairs, left-associated
                        let mut out = b.identity();
                        for slot in 0..n {
                            let piece = if slot == v {
                                value.clone()
                            } else {
                                b.identity()
                            };
                            out = if slot == 0 {
                                piece
                            } else {
                                Value::Pair(Box::new(out), Box::new(piece))
                            };
                        }
                        out
                    })
                })
                .collect();
            let mut images = Vec::new();
            for e in &elems {
                match crate::green::universal_fold(e, &target, &maps) {
                    Ok(v) => images.push(v),
                    Err(err) => {
                        outcome = Err(format!("fold failed: {err}"));
                        break;
                    }
                }
            }
            if outcome.is_ok() {
                images.sort();
                images.dedup();
                if images.len() != expected {
                    outcome = Err(format!(
                        "fold into the direct product is not injective: {} images",
                        images.len()
                    ));
                }
            }
        }
        out.push(CheckReport::from(
            format!("complete-graph: n={n}"),
            outcome,
        ));
    }
    out
}

fn suite_free_product_counterexample() -> Vec<CheckReport> {
    let ctx = GreenContext::uniform(
        SimpleGraph::edgeless(2),
        &boolean_monoid(),
        VarietyTag::Mon,
    )
    .unwrap();
    let t = Value::Bool(true);
    let abab = ctx
        .normalize(vec![
            Letter::new(0, t.clone()),
            Letter::new(1, t.clone()),
            Letter::new(0, t.clone()),
            Letter::new(1, t.clone()),
        ])
        .unwrap();
    let ab = ctx
        .normalize(vec![Letter::new(0, t.clone()), Letter::new(1, t)])
        .unwrap();
    vec![CheckReport::from(
        "free-product-counterexample: abab != ab in B + B",
        if abab.equal(&ab).unwrap() {
            Err("abab collapsed to ab; the free product wrongly satisfies idempotency".to_string())
        } else {
            Ok("abab and ab have distinct canonical forms".to_string())
        },
    )]
}

fn suite_kneser() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let kg42 = kneser_graph(4, 2);
    out.push(CheckReport::from(
        "kneser: KG_{4,2} is a perfect matching on 6 vertices",
        if kg42.n_vertices() == 6
            && kg42.n_edges() == 3
            && kg42.has_edge(0, 5)
            && kg42.has_edge(1, 4)
            && kg42.has_edge(2, 3)
        {
            Ok("6 vertices, edges 12-34, 13-24, 14-23".to_string())
        } else {
            Err(format!(
                "got {} vertices, {} edges",
                kg42.n_vertices(),
                kg42.n_edges()
            ))
        },
    ));
    let kg32 = kneser_graph(3, 2);
    out.push(CheckReport::from(
        "kneser: KG_{3,2} is edgeless",
        if kg32.n_vertices() == 3 && kg32.n_edges() == 0 {
            Ok("3 vertices, 0 edges".to_string())
        } else {
            Err(format!(
                "got {} vertices, {} edges",
                kg32.n_vertices(),
                kg32.n_edges()
            ))
        },
    ));
    let petersen = kneser_graph(5, 2);
    let regular = (0..10).all(|v| petersen.degree(v).unwrap() == 3);
    out.push(CheckReport::from(
        "kneser: KG_{5,2} is the Petersen graph",
        if petersen.n_vertices() == 10
            && petersen.n_edges() == 15
            && regular
            && petersen.girth() == Some(5)
        {
            Ok("10 vertices, 15 edges, 3-regular, girth 5".to_string())
        } else {
            Err(format!(
                "got {} vertices, {} edges, girth {:?}",
                petersen.n_vertices(),
                petersen.n_edges(),
                petersen.girth()
            ))
        },
    ));
    // counting formula
    let mut counts = Ok("vertex and edge counts match C(n,k) and C(n,k)C(n-k,k)/2 for n<=8, k<=3".to_string());
    'outer: for n in 0..=8usize {
        for k in 0..=3usize {
            let g = kneser_graph(n, k);
            let expected_edges = if k == 0 {
                0
            } else {
                binomial(n, k) * binomial(n.saturating_sub(k), k) / 2
            };
            if g.n_vertices() != binomial(n, k) || g.n_edges() != expected_edges {
                counts = Err(format!("count mismatch at KG_{{{n},{k}}}"));
                break 'outer;
            }
        }
    }
    out.push(CheckReport::from("kneser: counts", counts));
    // functoriality of the subset map on injections between sets of size <= 5
    let mut functorial = Ok("identities and composites respected for all injections, sizes <= 5".to_string());
    'func: for m in 0..=3usize {
        for l in m..=4usize {
            for n in l..=5usize {
                for f in crate::kneser::Injection::all(m, l) {
                    for g in crate::kneser::Injection::all(l, n) {
                        let gf = crate::kneser::Injection::compose(&g, &f).unwrap();
                        let lhs = crate::kneser::subsets_map(&gf, 2);
                        let via_f = crate::kneser::subsets_map(&f, 2);
                        let via_g = crate::kneser::subsets_map(&g, 2);
                        let rhs: Vec<usize> = via_f.iter().map(|&i| via_g[i]).collect();
                        if lhs != rhs {
                            functorial = Err(format!("composite law fails at m={m}, l={l}, n={n}"));
                            break 'func;
                        }
                    }
                }
            }
        }
    }
    out.push(CheckReport::from("kneser: functoriality", functorial));
    // cross-block adjacency after the laxator
    let mut cross = Ok("all left-right image pairs adjacent for m, n <= 4".to_string());
    'cross: for m in 2..=4usize {
        for n in 2..=4usize {
            let lax = crate::kneser::kneser_laxator(m, n, 2).unwrap();
            for i in 0..binomial(m, 2) {
                for j in 0..binomial(n, 2) {
                    if !lax
                        .codomain
                        .has_edge(lax.apply(i), lax.apply(binomial(m, 2) + j))
                    {
                        cross = Err(format!("left {i} and right {j} not adjacent at ({m},{n})"));
                        break 'cross;
                    }
                }
            }
        }
    }
    out.push(CheckReport::from("kneser: cross-block adjacency", cross));
    out
}

/// The small element sets used by the exhaustive lax-structure checks:
/// everything representable by words of length <= 2 on two vertices.
fn gamma_two_elements(model: &VarietalModel) -> Vec<NetworkElement> {
    model.elements(2, 2).unwrap().as_ref().clone()
}

fn admissible_models() -> Vec<(String, VarietalModel)> {
    let mut out = Vec::new();
    for variety in [VarietyTag::Mon, VarietyTag::CMon, VarietyTag::GMon] {
        out.push((
            format!("bool/{variety}"),
            VarietalModel::new(boolean_monoid(), variety).unwrap(),
        ));
    }
    for variety in [VarietyTag::Mon, VarietyTag::GMon] {
        out.push((
            format!("band/{variety}"),
            VarietalModel::new(path_band_monoid(), variety).unwrap(),
        ));
    }
    out
}

fn suite_interchange() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (label, model) in admissible_models() {
        if model.variety() == VarietyTag::CMon {
            continue; // the criterion names Mon and GMon
        }
        let elems = gamma_two_elements(&model);
        let mut outcome = Ok(format!("{}^4 quadruples", elems.len()));
        'outer: for a in &elems {
            for b in &elems {
                for c in &elems {
                    for d in &elems {
                        let lhs = model
                            .overlay(
                                &model.disjoint_union(a, b).unwrap(),
                                &model.disjoint_union(c, d).unwrap(),
                            )
                            .unwrap();
                        let rhs = model
                            .disjoint_union(
                                &model.overlay(a, c).unwrap(),
                                &model.overlay(b, d).unwrap(),
                            )
                            .unwrap();
                        if !model.eq(&lhs, &rhs).unwrap() {
                            outcome = Err(format!(
                                "interchange fails at a={a}, b={b}, c={c}, d={d}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(CheckReport::from(
            format!("interchange: {label} m=n=2"),
            outcome,
        ));
    }
    out
}

fn suite_equivariance() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let s2 = Permutation::all(2);
    for (label, model) in admissible_models() {
        let elems = gamma_two_elements(&model);
        let mut outcome = Ok(format!(
            "{} elements, all sigma, tau in S_2",
            elems.len()
        ));
        'outer: for sigma in &s2 {
            for tau in &s2 {
                for g in &elems {
                    for h in &elems {
                        let lhs = model
                            .permute(
                                &sigma.block_sum(tau),
                                &model.disjoint_union(g, h).unwrap(),
                            )
                            .unwrap();
                        let rhs = model
                            .disjoint_union(
                                &model.permute(sigma, g).unwrap(),
                                &model.permute(tau, h).unwrap(),
                            )
                            .unwrap();
                        if !model.eq(&lhs, &rhs).unwrap() {
                            outcome = Err(format!(
                                "equivariance fails at sigma={sigma}, tau={tau}, g={g}, h={h}"
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(CheckReport::from(
            format!("equivariance: {label}"),
            outcome,
        ));
    }
    out
}

fn suite_laxator() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (label, model) in admissible_models() {
        let elems = gamma_two_elements(&model);
        // unit law
        let unit = model.empty(0);
        let mut unit_ok = Ok("g + 1_0 = g and 1_0 + g = g".to_string());
        for g in &elems {
            let right = model.disjoint_union(g, &unit).unwrap();
            let left = model.disjoint_union(&unit, g).unwrap();
            if !model.eq(&right, g).unwrap() || !model.eq(&left, g).unwrap() {
                unit_ok = Err(format!("unit law fails at {g}"));
            }
        }
        out.push(CheckReport::from(format!("laxator: {label} unit"), unit_ok));
        // associativity coherence
        let mut assoc = Ok(format!("{}^3 triples", elems.len()));
        'outer: for g in &elems {
            for h in &elems {
                for k in &elems {
                    let left = model
                        .disjoint_union(&model.disjoint_union(g, h).unwrap(), k)
                        .unwrap();
                    let right = model
                        .disjoint_union(g, &model.disjoint_union(h, k).unwrap())
                        .unwrap();
                    if !model.eq(&left, &right).unwrap() {
                        assoc = Err(format!("associativity fails at ({g}, {h}, {k})"));
                        break 'outer;
                    }
                }
            }
        }
        out.push(CheckReport::from(
            format!("laxator: {label} associativity"),
            assoc,
        ));
        // symmetry coherence with the block swap
        let swap = Permutation::block_swap(2, 2);
        let mut sym = Ok("block swap exchanges the summands".to_string());
        'sym: for g in &elems {
            for h in &elems {
                let lhs = model
                    .permute(&swap, &model.disjoint_union(g, h).unwrap())
                    .unwrap();
                let rhs = model.disjoint_union(h, g).unwrap();
                if !model.eq(&lhs, &rhs).unwrap() {
                    sym = Err(format!("symmetry fails at ({g}, {h})"));
                    break 'sym;
                }
            }
        }
        out.push(CheckReport::from(format!("laxator: {label} symmetry"), sym));
    }
    out
}

fn suite_cmon_iso() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let model = VarietalModel::new(boolean_monoid(), VarietyTag::CMon).unwrap();
    let ordinary = OrdinaryModel::new(boolean_monoid());
    let elems = model.elements(4, 6).unwrap();
    out.push(CheckReport::from(
        "cmon-iso: 64 elements at n=4",
        if elems.len() == 64 {
            Ok("|Gamma(4)| = 64 = 2^6".to_string())
        } else {
            Err(format!("expected 64 elements, found {}", elems.len()))
        },
    ));
    // bijection: round-trips both ways
    let mut bij = Ok("round-trips on all 64 elements and all 64 tuples".to_string());
    for g in elems.iter() {
        let o = cmon_to_ordinary(&model, g).unwrap();
        let back = cmon_from_ordinary(&model, &o).unwrap();
        if !model.eq(&back, g).unwrap() {
            bij = Err(format!("round trip fails at {g}"));
        }
    }
    for o in ordinary.elements(4).unwrap() {
        let g = cmon_from_ordinary(&model, &o).unwrap();
        let back = cmon_to_ordinary(&model, &g).unwrap();
        if !ordinary.eq(&back, &o).unwrap() {
            bij = Err(format!("round trip fails at {o:?}"));
        }
    }
    out.push(CheckReport::from("cmon-iso: bijection", bij));
    // monoid homomorphism
    let mut hom = Ok("iso(g U h) = iso(g) U iso(h) on all 64^2 pairs".to_string());
    'hom: for g in elems.iter() {
        for h in elems.iter() {
            let lhs = cmon_to_ordinary(&model, &model.overlay(g, h).unwrap()).unwrap();
            let rhs = ordinary
                .overlay(
                    &cmon_to_ordinary(&model, g).unwrap(),
                    &cmon_to_ordinary(&model, h).unwrap(),
                )
                .unwrap();
            if !ordinary.eq(&lhs, &rhs).unwrap() {
                hom = Err(format!("homomorphism fails at ({g}, {h})"));
                break 'hom;
            }
        }
    }
    out.push(CheckReport::from("cmon-iso: overlay homomorphism", hom));
    // commutes with the disjoint union
    let mut lax = Ok("iso commutes with disjoint union at all splits of 4".to_string());
    'lax: for m in 0..=4usize {
        let n = 4 - m;
        let left = model.elements(m, 2 * m.max(1)).unwrap();
        let right = model.elements(n, 2 * n.max(1)).unwrap();
        for g in left.iter() {
            for h in right.iter() {
                let lhs = cmon_to_ordinary(&model, &model.disjoint_union(g, h).unwrap()).unwrap();
                let rhs = ordinary
                    .disjoint_union(
                        &cmon_to_ordinary(&model, g).unwrap(),
                        &cmon_to_ordinary(&model, h).unwrap(),
                    )
                    .unwrap();
                if !ordinary.eq(&lhs, &rhs).unwrap() {
                    lax = Err(format!("disjoint union fails at split {m}+{n}"));
                    break 'lax;
                }
            }
        }
    }
    out.push(CheckReport::from("cmon-iso: disjoint union", lax));
    // commutes with all of S_4
    let mut equiv = Ok("iso commutes with all 24 permutations".to_string());
    'equiv: for sigma in Permutation::all(4) {
        for g in elems.iter() {
            let lhs = cmon_to_ordinary(&model, &model.permute(&sigma, g).unwrap()).unwrap();
            let rhs = ordinary
                .permute(&sigma, &cmon_to_ordinary(&model, g).unwrap())
                .unwrap();
            if !ordinary.eq(&lhs, &rhs).unwrap() {
                equiv = Err(format!("action fails at sigma={sigma}, g={g}"));
                break 'equiv;
            }
        }
    }
    out.push(CheckReport::from("cmon-iso: symmetric group action", equiv));
    // and the boolean ordinary model is the simple-graph model
    let sg = SimpleGraphModel;
    let mut sg_ok = Ok("ordinary boolean networks are simple graphs".to_string());
    'sg: for x in ordinary.elements(4).unwrap() {
        for y in ordinary.elements(3).unwrap() {
            let via_ord = ordinary
                .disjoint_union(&y, &x)
                .unwrap()
                .support(&boolean_monoid());
            let via_sg = sg
                .disjoint_union(&y.support(&boolean_monoid()), &x.support(&boolean_monoid()))
                .unwrap();
            if via_ord != via_sg {
                sg_ok = Err("support does not commute with disjoint union".to_string());
                break 'sg;
            }
        }
    }
    out.push(CheckReport::from("cmon-iso: simple-graph agreement", sg_ok));
    out
}

fn suite_graphic_law() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let model = VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap();
    for n in 2..=4usize {
        let elems = model.elements(n, 2).unwrap();
        let mut outcome = Ok(format!("{}^2 pairs at n={n}", elems.len()));
        'outer: for x in elems.iter() {
            for y in elems.iter() {
                let xy = model.overlay(x, y).unwrap();
                let xyx = model.overlay(&xy, x).unwrap();
                if !model.eq(&xyx, &xy).unwrap() {
                    outcome = Err(format!("graphic law fails at x={x}, y={y}"));
                    break 'outer;
                }
            }
        }
        out.push(CheckReport::from(
            format!("graphic-law: xyx = xy at n={n}"),
            outcome,
        ));
    }
    // the commitment computation: with x = ab, (xy)(bc) = xyc for all
    // single-edge choices of a, b, c, y at n = 4
    let t = Value::Bool(true);
    let edges: Vec<(usize, usize)> = SimpleGraph::complete(4).edges().collect();
    let single = |e: (usize, usize)| model.network(4, &[(e.0, e.1, t.clone())]).unwrap();
    let mut outcome = Ok(format!("{}^4 edge choices", edges.len()));
    'commit: for &ea in &edges {
        for &eb in &edges {
            for &ec in &edges {
                for &ey in &edges {
                    let (a, b, c, y) = (single(ea), single(eb), single(ec), single(ey));
                    let x = model.overlay(&a, &b).unwrap();
                    let xy = model.overlay(&x, &y).unwrap();
                    let bc = model.overlay(&b, &c).unwrap();
                    let lhs = model.overlay(&xy, &bc).unwrap();
                    let rhs = model.overlay(&xy, &c).unwrap();
                    if !model.eq(&lhs, &rhs).unwrap() {
                        outcome = Err(format!(
                            "commitment computation fails at a={ea:?}, b={eb:?}, c={ec:?}, y={ey:?}"
                        ));
                        break 'commit;
                    }
                }
            }
        }
    }
    out.push(CheckReport::from("graphic-law: commitment computation", outcome));
    out
}

fn suite_adjunction() -> Vec<CheckReport> {
    let mut out = Vec::new();
    // counit composed with the image of the (identity) unit is the identity
    // on the free model
    for (label, model) in admissible_models() {
        let max_len = if *model.monoid() == boolean_monoid() { 3 } else { 2 };
        let mut outcome = Ok(String::new());
        let mut checked = 0usize;
        'outer: for n in 0..=4usize {
            let elems = model.elements(n, max_len).unwrap();
            for g in elems.iter() {
                let unit_image = induced_hom(
                    &MonoidHom::identity(model.monoid()),
                    &model,
                    &model,
                    g,
                )
                .unwrap();
                let back = counit_eval(&model, &unit_image).unwrap();
                checked += 1;
                if !model.eq(&back, g).unwrap() {
                    outcome = Err(format!("triangle fails at n={n}, g={g}"));
                    break 'outer;
                }
            }
        }
        if let Ok(detail) = &mut outcome {
            *detail = format!("identity on {checked} elements, n <= 4");
        }
        out.push(CheckReport::from(
            format!("adjunction: counit identity on {label}"),
            outcome,
        ));
    }
    // evaluating at size two recovers the identity of the edge monoid, for
    // the simple-graph model and the ordinary model over the naturals
    let sg = SimpleGraphModel;
    let bool_model = VarietalModel::new(boolean_monoid(), VarietyTag::Mon).unwrap();
    let mut outcome = Ok("counit at n=2 is the identity on simple graphs".to_string());
    for g in bool_model.elements(2, 2).unwrap().iter() {
        let image = counit_eval(&sg, g).unwrap();
        if image != g.support() {
            outcome = Err(format!("counit at n=2 moved {g}"));
        }
    }
    out.push(CheckReport::from("adjunction: evaluation on SG(2)", outcome));

    let nat_model = VarietalModel::new(nat_monoid(), VarietyTag::Mon).unwrap();
    let ordinary_nat = OrdinaryModel::new(nat_monoid());
    let mut outcome = Ok("counit at n=2 fixes sampled weights 0..8".to_string());
    for m in 0..8u64 {
        let g = nat_model.network(2, &[(0, 1, Value::Nat(m))]).unwrap();
        let image = counit_eval(&ordinary_nat, &g).unwrap();
        let expected = ordinary_nat.network(2, &[(0, 1, Value::Nat(m))]).unwrap();
        if !ordinary_nat.eq(&image, &expected).unwrap() {
            outcome = Err(format!("counit moved the weight {m}"));
        }
    }
    out.push(CheckReport::from(
        "adjunction: evaluation on ordinary nat networks",
        outcome,
    ));

    // the ordered-edge placement agrees with the double-transposition form
    let mut outcome = Ok("both placement conventions give the same one-edge networks".to_string());
    'place: for n in 2..=5usize {
        for i in 0..n {
            for j in (i + 1)..n {
                let base = sg
                    .disjoint_union(
                        &sg.edge_network(&Value::Bool(true)).unwrap(),
                        &sg.empty(n - 2),
                    )
                    .unwrap();
                let a = sg
                    .permute(&edge_placement_perm(n, i, j).unwrap(), &base)
                    .unwrap();
                let b = sg
                    .permute(
                        &edge_placement_double_transposition(n, i, j).unwrap(),
                        &base,
                    )
                    .unwrap();
                if a != b {
                    outcome = Err(format!("conventions disagree at n={n}, edge ({i},{j})"));
                    break 'place;
                }
            }
        }
    }
    out.push(CheckReport::from("adjunction: placement conventions", outcome));
    out
}

// --- bounded degree -------------------------------------------------------

/// All simple graphs on `n` vertices with maximum degree at most k, as edge
/// bitmasks over the colex edge list (bit i is the edge with component
/// index i in the Kneser indexing).
fn bounded_graphs(n: usize, k: usize) -> (Vec<(usize, usize)>, Vec<u32>) {
    let edges: Vec<(usize, usize)> = crate::kneser::k_subsets(n, 2)
        .iter()
        .map(|s| (s.elements()[0], s.elements()[1]))
        .collect();
    let mut masks = Vec::new();
    'mask: for mask in 0u32..(1 << edges.len()) {
        let mut deg = vec![0usize; n];
        for (i, (u, v)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                deg[*u] += 1;
                deg[*v] += 1;
                if deg[*u] > k || deg[*v] > k {
                    continue 'mask;
                }
            }
        }
        masks.push(mask);
    }
    (edges, masks)
}

fn mask_to_graph(n: usize, edges: &[(usize, usize)], mask: u32) -> SimpleGraph {
    let mut g = SimpleGraph::edgeless(n);
    for (i, (u, v)) in edges.iter().enumerate() {
        if mask & (1 << i) != 0 {
            g.add_edge(*u, *v).unwrap();
        }
    }
    g
}

/// The support-level walk of the bounded-degree action: admit each edge in
/// turn when the grown support stays k-bounded.
fn mask_walk(
    steps: &[usize],
    start: u32,
    edges: &[(usize, usize)],
    n: usize,
    k: usize,
) -> u32 {
    let mut deg = vec![0usize; n];
    for (i, (u, v)) in edges.iter().enumerate() {
        if start & (1 << i) != 0 {
            deg[*u] += 1;
            deg[*v] += 1;
        }
    }
    let mut support = start;
    for &e in steps {
        if support & (1 << e) != 0 {
            continue; // re-committing a present edge is a no-op
        }
        let (u, v) = edges[e];
        if deg[u] < k && deg[v] < k {
            support |= 1 << e;
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    support
}

fn permutations_of<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn suite_bounded_degree() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let (n, k) = (4usize, 2usize);
    let model = VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap();
    let t = Value::Bool(true);
    let (edges, masks) = bounded_graphs(n, k);
    let n_edges = edges.len();

    // group all raw words of length <= 4 by canonical form
    let ctx = model.green_context(n);
    let universe = WordUniverse::new(Arc::clone(&ctx), 4).unwrap();
    let mut classes: HashMap<u64, Vec<u32>> = HashMap::new();
    for (i, codes) in universe.words.iter().enumerate() {
        let canonical = ctx.normalize(universe.decode(codes)).unwrap();
        let key = universe.encode(canonical.word()).unwrap();
        classes.entry(key).or_default().push(i as u32);
    }

    // representative independence: every representative word of g and every
    // ordering of h's edges gives the same output, which is always k-bounded
    let mut outcome = Ok(String::new());
    let mut actions = 0usize;
    'indep: for members in classes.values() {
        // reference: act with the first member on each h with sorted lift
        let reference: Vec<u32> = {
            let steps: Vec<usize> = universe.words[members[0] as usize]
                .iter()
                .map(|&c| universe.generators[c as usize].component)
                .collect();
            masks
                .iter()
                .map(|&h| mask_walk(&steps, h, &edges, n, k))
                .collect()
        };
        for &member in members.iter() {
            let word = universe.decode(&universe.words[member as usize]);
            let g_letters: Vec<(usize, usize, Value)> = word
                .iter()
                .map(|l| {
                    let s = crate::kneser::k_subsets(n, 2)[l.component].elements().to_vec();
                    (s[0], s[1], l.value.clone())
                })
                .collect();
            for (hi, &h) in masks.iter().enumerate() {
                let h_edges: Vec<(usize, usize)> = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| h & (1 << i) != 0)
                    .map(|(_, e)| *e)
                    .collect();
                for ordering in permutations_of(&h_edges) {
                    let lift_letters: Vec<(usize, usize, Value)> = ordering
                        .iter()
                        .map(|(u, v)| (*u, *v, t.clone()))
                        .collect();
                    let lift = model.network(n, &lift_letters).unwrap();
                    // walk the raw representative word
                    let mut support = mask_to_graph(n, &edges, h);
                    let mut current = lift.clone();
                    for (u, v, value) in &g_letters {
                        let mut candidate = support.clone();
                        candidate.add_edge(*u, *v).unwrap();
                        if candidate.is_k_bounded(k) {
                            let step = model.network(n, &[(*u, *v, value.clone())]).unwrap();
                            current = model.overlay(&current, &step).unwrap();
                            support = candidate;
                        }
                    }
                    actions += 1;
                    if !support.is_k_bounded(k) {
                        outcome = Err(format!("output violates the bound at h={h:#b}"));
                        break 'indep;
                    }
                    let expected = mask_to_graph(n, &edges, reference[hi]);
                    if support != expected {
                        outcome = Err(format!(
                            "representative dependence: word {} on h={h:#b} gave {:?}, expected {:?}",
                            universe.literal(&universe.words[member as usize]),
                            support,
                            expected
                        ));
                        break 'indep;
                    }
                    if current.support() != support {
                        outcome = Err("word support diverged from tracked support".to_string());
                        break 'indep;
                    }
                }
            }
        }
    }
    if let Ok(detail) = &mut outcome {
        *detail = format!(
            "{} classes, {} states, {actions} walks agree and stay bounded",
            classes.len(),
            masks.len()
        );
    }
    out.push(CheckReport::from(
        "bounded-degree: representative independence",
        outcome,
    ));

    // the action law act(g U g', h) = act(g', act(g, h)) over the distinct
    // canonical elements of the same word set
    let canon_words: Vec<Vec<usize>> = classes
        .keys()
        .map(|&key| {
            let len = (key >> 56) as usize;
            (0..len)
                .map(|i| {
                    let code = ((key >> (8 * i)) & 0xff) as u8;
                    universe.generators[code as usize].component
                })
                .collect()
        })
        .collect();
    let mut outcome = Ok(format!(
        "{} elements squared, {} states",
        canon_words.len(),
        masks.len()
    ));
    'law: for g in &canon_words {
        for g_prime in &canon_words {
            // a representative of g U g' is the concatenation
            let combined: Vec<usize> = g.iter().chain(g_prime.iter()).copied().collect();
            for &h in &masks {
                let lhs = mask_walk(&combined, h, &edges, n, k);
                let rhs = mask_walk(g_prime, mask_walk(g, h, &edges, n, k), &edges, n, k);
                if lhs != rhs {
                    outcome = Err(format!(
                        "action law fails at g={g:?}, g'={g_prime:?}, h={h:#b}"
                    ));
                    break 'law;
                }
            }
        }
    }
    out.push(CheckReport::from("bounded-degree: action law", outcome));

    // cross-validate the support walk against the word-level action
    let mut rng = Lcg::new(0x5eed);
    let mut outcome = Ok("support walk matches the word-level action on 500 random cases".to_string());
    for _ in 0..500 {
        let len = rng.below(5);
        let word: Vec<usize> = (0..len).map(|_| rng.below(n_edges)).collect();
        let letters: Vec<(usize, usize, Value)> = word
            .iter()
            .map(|&e| (edges[e].0, edges[e].1, t.clone()))
            .collect();
        let g = model.network(n, &letters).unwrap();
        let h = masks[rng.below(masks.len())];
        let state = BoundedDegreeNetwork::new(k, mask_to_graph(n, &edges, h)).unwrap();
        let via_words = crate::operad::act_bounded_degree(&model, &g, &state).unwrap();
        // the canonical word drives the official action, so walk that here
        let canon_steps: Vec<usize> = g.green().word().iter().map(|l| l.component).collect();
        let via_masks = mask_to_graph(n, &edges, mask_walk(&canon_steps, h, &edges, n, k));
        if via_words.graph != via_masks {
            outcome = Err(format!("walks disagree at word {word:?}, h={h:#b}"));
            break;
        }
    }
    out.push(CheckReport::from(
        "bounded-degree: support walk agreement",
        outcome,
    ));

    // operad-algebra compatibility: acting by a composite equals acting in
    // stages, on deterministic samples with total size <= 6
    let mut outcome = Ok("composite action = staged action on sampled operations".to_string());
    let g2 = model.elements(2, 2).unwrap();
    let g4 = model.elements(4, 2).unwrap();
    let s2 = Permutation::all(2);
    let s4: Vec<Permutation> = Permutation::all(4).into_iter().step_by(5).collect();
    let states2: Vec<BoundedDegreeNetwork> = bounded_graphs(2, k)
        .1
        .iter()
        .map(|&m| BoundedDegreeNetwork::new(k, mask_to_graph(2, &bounded_graphs(2, k).0, m)).unwrap())
        .collect();
    'compat: for outer_sigma in &s4 {
        for outer_net in g4.iter().step_by(7) {
            let outer = OperadOperation::new(
                &model,
                vec![2, 2],
                outer_sigma.clone(),
                outer_net.clone(),
            )
            .unwrap();
            for inner_sigma in &s2 {
                for inner_net in g2.iter() {
                    let inner = OperadOperation::new(
                        &model,
                        vec![2],
                        inner_sigma.clone(),
                        inner_net.clone(),
                    )
                    .unwrap();
                    let composite =
                        operad_compose(&model, &outer, &[inner.clone(), inner.clone()]).unwrap();
                    for sa in &states2 {
                        for sb in &states2 {
                            let staged_inputs = [
                                full_bounded_degree_action(&model, &inner, std::slice::from_ref(sa))
                                    .unwrap(),
                                full_bounded_degree_action(&model, &inner, std::slice::from_ref(sb))
                                    .unwrap(),
                            ];
                            let staged =
                                full_bounded_degree_action(&model, &outer, &staged_inputs).unwrap();
                            let direct = full_bounded_degree_action(
                                &model,
                                &composite,
                                &[sa.clone(), sb.clone()],
                            )
                            .unwrap();
                            if staged != direct {
                                outcome = Err(format!(
                                    "composite and staged actions differ at sigma={outer_sigma}"
                                ));
                                break 'compat;
                            }
                        }
                    }
                }
            }
        }
    }
    out.push(CheckReport::from(
        "bounded-degree: operad compatibility",
        outcome,
    ));
    out
}

fn suite_range_limited() -> Vec<CheckReport> {
    let mut out = Vec::new();
    // four collinear points at spacing one, limit one: the length-1 edge
    // lands, the length-2 edge does not
    let ctx = RangeLimitedContext::new(MetricSpace::Line, 1.0).unwrap();
    let state = ctx
        .state(
            SimpleGraph::edgeless(4),
            (0..4).map(|i| Point::Line(i as f64)).collect(),
        )
        .unwrap();
    let op = OperadOperation {
        inputs: vec![4],
        sigma: Permutation::identity(4),
        network: SimpleGraph::new(4, [(0, 1), (0, 2)]).unwrap(),
    };
    let result = ctx.act(&op, &[state]).unwrap();
    out.push(CheckReport::from(
        "range-limited: collinear boundary case",
        if result.graph.has_edge(0, 1) && !result.graph.has_edge(0, 2) && result.graph.n_edges() == 1
        {
            Ok("edge of length 1 admitted, edge of length 2 rejected".to_string())
        } else {
            Err(format!("unexpected output graph {:?}", result.graph))
        },
    ));

    // the output invariant holds across 1000 randomized trials
    let mut rng = Lcg::new(0xace);
    let mut outcome = Ok("edge-length invariant held on 1000 randomized trials".to_string());
    'trial: for trial in 0..1000 {
        let plane = trial % 2 == 0;
        let space = if plane { MetricSpace::Plane } else { MetricSpace::Line };
        let max_range = 0.5 + 2.5 * rng.unit();
        let ctx = RangeLimitedContext::new(space, max_range).unwrap();
        let k_states = 1 + rng.below(3);
        let mut states = Vec::new();
        let mut total = 0usize;
        for _ in 0..k_states {
            let size = 1 + rng.below(4);
            total += size;
            let positions: Vec<Point> = (0..size)
                .map(|_| {
                    if plane {
                        Point::Plane(10.0 * rng.unit(), 10.0 * rng.unit())
                    } else {
                        Point::Line(10.0 * rng.unit())
                    }
                })
                .collect();
            // grow a valid graph by keeping only in-range random edges
            let mut graph = SimpleGraph::edgeless(size);
            for _ in 0..size {
                let (u, v) = (rng.below(size), rng.below(size));
                if u != v
                    && ctx
                        .space
                        .distance(&positions[u], &positions[v])
                        .unwrap()
                        <= max_range
                {
                    graph.add_edge(u, v).unwrap();
                }
            }
            states.push(ctx.state(graph, positions).unwrap());
        }
        // random permutation of the output vertices
        let mut mapping: Vec<usize> = (0..total).collect();
        for i in (1..total).rev() {
            mapping.swap(i, rng.below(i + 1));
        }
        let sigma = Permutation::from_map(mapping).unwrap();
        // random attempted edges, in or out of range
        let mut attempted = SimpleGraph::edgeless(total);
        for _ in 0..total {
            let (u, v) = (rng.below(total), rng.below(total));
            if u != v {
                attempted.add_edge(u, v).unwrap();
            }
        }
        let op = OperadOperation {
            inputs: states.iter().map(|s| s.graph.n_vertices()).collect(),
            sigma,
            network: attempted,
        };
        let result = ctx.act(&op, &states).unwrap();
        if ctx.check_state(&result).is_err() {
            outcome = Err(format!("invariant violated on trial {trial}"));
            break 'trial;
        }
    }
    out.push(CheckReport::from("range-limited: randomized invariant", outcome));
    out
}

fn suite_operad_laws() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for variety in [VarietyTag::CMon, VarietyTag::GMon] {
        out.extend(operad_laws_over(variety));
    }
    out
}

fn operad_laws_over(variety: VarietyTag) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let model = VarietalModel::new(boolean_monoid(), variety).unwrap();
    // unit laws on sampled operations
    let g4 = model.elements(4, 2).unwrap();
    let mut outcome = Ok("identity operations are neutral on sampled operations".to_string());
    'unit: for sigma in Permutation::all(4).into_iter().step_by(5) {
        for net in g4.iter().step_by(7) {
            let op = OperadOperation::new(&model, vec![2, 2], sigma.clone(), net.clone()).unwrap();
            let ids = vec![
                OperadOperation::identity(&model, 2),
                OperadOperation::identity(&model, 2),
            ];
            let right = operad_compose(&model, &op, &ids).unwrap();
            let id4 = OperadOperation::identity(&model, 4);
            let left = operad_compose(&model, &id4, std::slice::from_ref(&op)).unwrap();
            for composite in [right, left] {
                if composite.sigma != op.sigma
                    || !model.eq(&composite.network, &op.network).unwrap()
                    || composite.inputs != op.inputs
                {
                    outcome = Err(format!("unit law fails at sigma={sigma}"));
                    break 'unit;
                }
            }
        }
    }
    out.push(CheckReport::from(
        format!("operad-laws: units over bool/{variety}"),
        outcome,
    ));

    // associativity of composition on deterministic composable triples with
    // total size <= 6
    let g2 = model.elements(2, 2).unwrap();
    let g1 = model.elements(1, 1).unwrap();
    let s2 = Permutation::all(2);
    let mut outcome = Ok("(a o b) o c = a o (b o c) on sampled triples".to_string());
    let mut cases = 0usize;
    'assoc: for outer_sigma in Permutation::all(4).into_iter().step_by(7) {
        for outer_net in g4.iter().step_by(9) {
            let a = OperadOperation::new(&model, vec![2, 2], outer_sigma.clone(), outer_net.clone())
                .unwrap();
            for b_sigma in &s2 {
                for b_net in g2.iter() {
                    // b1 : (1,1) -> 2, b2 : (2) -> 2
                    let b1 = OperadOperation::new(
                        &model,
                        vec![1, 1],
                        b_sigma.clone(),
                        b_net.clone(),
                    )
                    .unwrap();
                    let b2 =
                        OperadOperation::new(&model, vec![2], b_sigma.clone(), b_net.clone())
                            .unwrap();
                    // c's matching b's inputs
                    let c11 = OperadOperation::new(
                        &model,
                        vec![1],
                        Permutation::identity(1),
                        g1[0].clone(),
                    )
                    .unwrap();
                    let c21 = OperadOperation::new(
                        &model,
                        vec![2],
                        s2[1].clone(),
                        g2[1].clone(),
                    )
                    .unwrap();
                    // route 1: (a o (b1, b2)) o (c11, c11, c21)
                    let ab = operad_compose(&model, &a, &[b1.clone(), b2.clone()]).unwrap();
                    let route1 = operad_compose(
                        &model,
                        &ab,
                        &[c11.clone(), c11.clone(), c21.clone()],
                    )
                    .unwrap();
                    // route 2: a o (b1 o (c11, c11), b2 o (c21))
                    let b1c = operad_compose(&model, &b1, &[c11.clone(), c11.clone()]).unwrap();
                    let b2c = operad_compose(&model, &b2, std::slice::from_ref(&c21)).unwrap();
                    let route2 = operad_compose(&model, &a, &[b1c, b2c]).unwrap();
                    cases += 1;
                    if route1.sigma != route2.sigma
                        || route1.inputs != route2.inputs
                        || !model.eq(&route1.network, &route2.network).unwrap()
                    {
                        outcome = Err(format!("associativity fails at sigma={outer_sigma}"));
                        break 'assoc;
                    }
                }
            }
        }
    }
    if let Ok(detail) = &mut outcome {
        *detail = format!("{cases} composable triples agree");
    }
    out.push(CheckReport::from(
        format!("operad-laws: associativity over bool/{variety}"),
        outcome,
    ));
    out
}

fn suite_io_roundtrip() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (label, model) in admissible_models() {
        let mut outcome = Ok(String::new());
        let mut count = 0usize;
        'outer: for n in 0..=4usize {
            let elems = model.elements(n, 2).unwrap();
            for g in elems.iter() {
                let literal = io::format_network_literal(model.monoid(), g);
                let reparsed = model
                    .network(n, &io::parse_network_literal(model.monoid(), n, &literal).unwrap())
                    .unwrap();
                if !model.eq(&reparsed, g).unwrap() {
                    outcome = Err(format!("literal round trip fails at {literal}"));
                    break 'outer;
                }
                let json = io::network_to_json(&model, g);
                let text = serde_json::to_string(&json).unwrap();
                let parsed: io::NetworkJson = serde_json::from_str(&text).unwrap();
                let (model2, back) = io::network_from_json(&parsed).unwrap();
                if !model2.eq(&back, g).unwrap() {
                    outcome = Err(format!("json round trip fails at {text}"));
                    break 'outer;
                }
                count += 1;
            }
        }
        if let Ok(detail) = &mut outcome {
            *detail = format!("literal and json round trips on {count} elements");
        }
        out.push(CheckReport::from(format!("io-roundtrip: {label}"), outcome));
    }
    out
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

type Suite = fn() -> Vec<CheckReport>;

const SUITES: &[(&str, Suite)] = &[
    ("monoid-laws", suite_monoid_laws),
    ("normal-form-mon", suite_normal_form_mon),
    ("normal-form-varietal", suite_normal_form_varietal),
    ("green-canonical", suite_green_canonical),
    ("complete-graph", suite_complete_graph),
    ("free-product-counterexample", suite_free_product_counterexample),
    ("kneser", suite_kneser),
    ("laxator", suite_laxator),
    ("interchange", suite_interchange),
    ("equivariance", suite_equivariance),
    ("cmon-iso", suite_cmon_iso),
    ("graphic-law", suite_graphic_law),
    ("adjunction", suite_adjunction),
    ("operad-laws", suite_operad_laws),
    ("bounded-degree", suite_bounded_degree),
    ("range-limited", suite_range_limited),
    ("io-roundtrip", suite_io_roundtrip),
];

/// The acceptance criteria in order, each naming the suite that decides it.
pub const ACCEPTANCE: &[(&str, &str)] = &[
    ("1 normal-form soundness/completeness vs oracle (Mon)", "normal-form-mon"),
    ("2 varietal oracle agreement (CMon, GMon)", "normal-form-varietal"),
    ("3 complete-graph degeneration to the direct product", "complete-graph"),
    ("4 Kneser graph facts", "kneser"),
    ("5 interchange law", "interchange"),
    ("6 equivariance of the disjoint union", "equivariance"),
    ("7 CMon collapse to ordinary networks", "cmon-iso"),
    ("8 graphic law and commitment computation", "graphic-law"),
    ("9 bounded-degree algebra", "bounded-degree"),
    ("10 range-limited algebra", "range-limited"),
    ("11 adjunction triangles", "adjunction"),
    ("12 idempotent-variety counterexample", "free-product-counterexample"),
];

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = SUITES.iter().map(|(n, _)| *n).collect();
    names.push("all");
    names
}

/// Runs a named suite; `all` runs everything.
pub fn run_suite(name: &str) -> Option<Vec<CheckReport>> {
    if name == "all" {
        return Some(run_all());
    }
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, suite)| suite())
}

pub fn run_all() -> Vec<CheckReport> {
    SUITES.iter().flat_map(|(_, suite)| suite()).collect()
}
