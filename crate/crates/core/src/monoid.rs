//! Monoids as first-class values: concrete constructors (boolean, additive
//! naturals, free monoids, the six-element path band, direct products),
//! homomorphisms between them, and the variety tags used to cut Green
//! products down to a chosen equational class.
//!
//! Elements are opaque [`Value`]s owned by their [`MonoidHandle`]; equality,
//! ordering and formatting are always delegated to the handle, so table-based
//! and structural monoids behave uniformly.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Number of law-check pairs used for monoids without a finite enumeration.
pub const DEFAULT_LAW_BUDGET: usize = 1000;

/// An element of some monoid. Which monoid a value belongs to is not encoded
/// in the value itself; operations go through the owning [`MonoidHandle`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Bool(bool),
    Nat(u64),
    /// A word over a free monoid's alphabet.
    Word(String),
    /// An element of a table monoid, by table index.
    Sym(u8),
    /// An element of a direct product.
    Pair(Box<Value>, Box<Value>),
}

/// A finite monoid given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableMonoid {
    pub name: String,
    pub symbols: Vec<String>,
    pub identity: u8,
    /// `table[i][j]` is the index of the product of elements `i` and `j`.
    pub table: Vec<Vec<u8>>,
}

impl TableMonoid {
    pub fn order(&self) -> usize {
        self.symbols.len()
    }
}

/// A monoid: identity, binary operation, decidable equality, and an optional
/// finite enumeration, packaged behind one handle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonoidHandle {
    /// The boolean monoid ({T, F}, or) with identity F.
    Bool,
    /// Additive naturals.
    Nat,
    /// Words over a fixed alphabet under concatenation.
    Free { alphabet: Vec<char> },
    /// A finite monoid given by a multiplication table.
    Table(Arc<TableMonoid>),
    /// Componentwise product of two monoids.
    Product(Box<MonoidHandle>, Box<MonoidHandle>),
}

/// The boolean monoid ({T, F}, or).
pub fn boolean_monoid() -> MonoidHandle {
    MonoidHandle::Bool
}

/// Additive natural numbers. Not finitely enumerable; law checks sample.
pub fn nat_monoid() -> MonoidHandle {
    MonoidHandle::Nat
}

/// The free monoid on a nonempty alphabet: words under concatenation.
pub fn free_monoid(alphabet: &str) -> Result<MonoidHandle> {
    let mut chars: Vec<char> = alphabet.chars().collect();
    if chars.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    chars.sort_unstable();
    chars.dedup();
    Ok(MonoidHandle::Free { alphabet: chars })
}

/// The six-element graphic monoid of the path a—x—b—y—c.
///
/// The space is three vertices a, b, c joined by open edges x (between a and
/// b) and y (between b and c); the product pq is the component reached by
/// moving a small distance from a generic point of p toward a generic point
/// of q. The thirty entries not pinned by the sample computations follow
/// from that rule and are frozen here.
pub fn path_band_monoid() -> MonoidHandle {
    // indices: 0=1, 1=a, 2=b, 3=c, 4=x, 5=y
    let table = vec![
        vec![0, 1, 2, 3, 4, 5], // 1·q = q
        vec![1, 1, 4, 4, 4, 4], // a·{1,a,b,c,x,y}
        vec![2, 4, 2, 5, 4, 5], // b·{..}
        vec![3, 5, 5, 3, 5, 5], // c·{..}
        vec![4, 4, 4, 4, 4, 4], // x absorbs on the left
        vec![5, 5, 5, 5, 5, 5], // y absorbs on the left
    ];
    MonoidHandle::Table(Arc::new(TableMonoid {
        name: "band".into(),
        symbols: ["1", "a", "b", "c", "x", "y"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        identity: 0,
        table,
    }))
}

/// Componentwise direct product. Inclusions and projections are exposed by
/// [`inclusion_left`], [`inclusion_right`], [`projection_left`] and
/// [`projection_right`].
pub fn direct_product(a: &MonoidHandle, b: &MonoidHandle) -> MonoidHandle {
    MonoidHandle::Product(Box::new(a.clone()), Box::new(b.clone()))
}

impl MonoidHandle {
    pub fn identity(&self) -> Value {
        match self {
            MonoidHandle::Bool => Value::Bool(false),
            MonoidHandle::Nat => Value::Nat(0),
            MonoidHandle::Free { .. } => Value::Word(String::new()),
            MonoidHandle::Table(t) => Value::Sym(t.identity),
            MonoidHandle::Product(a, b) => {
                Value::Pair(Box::new(a.identity()), Box::new(b.identity()))
            }
        }
    }

    /// The monoid operation. Panics if either value does not belong to this
    /// monoid; callers validate foreign input with [`MonoidHandle::contains`].
    pub fn op(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (MonoidHandle::Bool, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x || *y),
            (MonoidHandle::Nat, Value::Nat(x), Value::Nat(y)) => Value::Nat(x + y),
            (MonoidHandle::Free { .. }, Value::Word(x), Value::Word(y)) => {
                Value::Word(format!("{x}{y}"))
            }
            (MonoidHandle::Table(t), Value::Sym(i), Value::Sym(j)) => {
                Value::Sym(t.table[*i as usize][*j as usize])
            }
            (MonoidHandle::Product(m, n), Value::Pair(a1, a2), Value::Pair(b1, b2)) => {
                Value::Pair(Box::new(m.op(a1, b1)), Box::new(n.op(a2, b2)))
            }
            _ => panic!(
                "value passed to monoid {} that it does not own",
                self.name()
            ),
        }
    }

    /// Decidable element equality, delegated to the handle.
    pub fn eq(&self, a: &Value, b: &Value) -> bool {
        match (self, a, b) {
            (MonoidHandle::Product(m, n), Value::Pair(a1, a2), Value::Pair(b1, b2)) => {
                (**m).eq(a1, b1) && (**n).eq(a2, b2)
            }
            _ => a == b,
        }
    }

    pub fn is_identity(&self, v: &Value) -> bool {
        self.eq(v, &self.identity())
    }

    /// Total element order: table order for finite monoids, numeric order for
    /// naturals, length-then-lexicographic for free monoids. This order fixes
    /// canonical forms, so it must stay deterministic and context-free.
    pub fn cmp_elements(&self, a: &Value, b: &Value) -> Ordering {
        match (self, a, b) {
            (MonoidHandle::Bool, Value::Bool(x), Value::Bool(y)) => x.cmp(y),
            (MonoidHandle::Nat, Value::Nat(x), Value::Nat(y)) => x.cmp(y),
            (MonoidHandle::Free { .. }, Value::Word(x), Value::Word(y)) => {
                x.len().cmp(&y.len()).then_with(|| x.cmp(y))
            }
            (MonoidHandle::Table(_), Value::Sym(i), Value::Sym(j)) => i.cmp(j),
            (MonoidHandle::Product(m, n), Value::Pair(a1, a2), Value::Pair(b1, b2)) => m
                .cmp_elements(a1, b1)
                .then_with(|| n.cmp_elements(a2, b2)),
            _ => panic!("cannot order values foreign to monoid {}", self.name()),
        }
    }

    /// Finite enumeration if this monoid has one.
    pub fn elements(&self) -> Option<Vec<Value>> {
        match self {
            MonoidHandle::Bool => Some(vec![Value::Bool(false), Value::Bool(true)]),
            MonoidHandle::Nat | MonoidHandle::Free { .. } => None,
            MonoidHandle::Table(t) => {
                Some((0..t.order() as u8).map(Value::Sym).collect())
            }
            MonoidHandle::Product(a, b) => {
                let xs = a.elements()?;
                let ys = b.elements()?;
                let mut out = Vec::with_capacity(xs.len() * ys.len());
                for x in &xs {
                    for y in &ys {
                        out.push(Value::Pair(Box::new(x.clone()), Box::new(y.clone())));
                    }
                }
                Some(out)
            }
        }
    }

    /// A deterministic element sample for law checks on non-enumerable
    /// monoids: the finite enumeration when one exists, otherwise the first
    /// `count` elements in the handle's element order.
    pub fn sample(&self, count: usize) -> Vec<Value> {
        if let Some(all) = self.elements() {
            return all;
        }
        match self {
            MonoidHandle::Nat => (0..count as u64).map(Value::Nat).collect(),
            MonoidHandle::Free { alphabet } => {
                // words in length-lex order
                let mut out = vec![Value::Word(String::new())];
                let mut layer: Vec<String> = vec![String::new()];
                while out.len() < count {
                    let mut next = Vec::new();
                    for w in &layer {
                        for c in alphabet {
                            let mut s = w.clone();
                            s.push(*c);
                            next.push(s);
                        }
                    }
                    for w in &next {
                        if out.len() >= count {
                            break;
                        }
                        out.push(Value::Word(w.clone()));
                    }
                    layer = next;
                }
                out
            }
            MonoidHandle::Product(a, b) => {
                let half = (count as f64).sqrt().ceil() as usize + 1;
                let xs = a.sample(half);
                let ys = b.sample(half);
                let mut out = Vec::new();
                'outer: for x in &xs {
                    for y in &ys {
                        if out.len() >= count {
                            break 'outer;
                        }
                        out.push(Value::Pair(Box::new(x.clone()), Box::new(y.clone())));
                    }
                }
                out
            }
            _ => unreachable!("enumerable handled above"),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (MonoidHandle::Bool, Value::Bool(_)) => true,
            (MonoidHandle::Nat, Value::Nat(_)) => true,
            (MonoidHandle::Free { alphabet }, Value::Word(w)) => {
                w.chars().all(|c| alphabet.contains(&c))
            }
            (MonoidHandle::Table(t), Value::Sym(i)) => (*i as usize) < t.order(),
            (MonoidHandle::Product(a, b), Value::Pair(x, y)) => a.contains(x) && b.contains(y),
            _ => false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonoidHandle::Bool => "bool".into(),
            MonoidHandle::Nat => "nat".into(),
            MonoidHandle::Free { alphabet } => {
                format!("free:{}", alphabet.iter().collect::<String>())
            }
            MonoidHandle::Table(t) => t.name.clone(),
            MonoidHandle::Product(a, b) => format!("({}x{})", a.name(), b.name()),
        }
    }

    /// Renders an element in the literal syntax: `T`/`F`, decimal integers,
    /// quoted words, table symbols, `(a,b)` pairs.
    pub fn format_element(&self, v: &Value) -> String {
        match (self, v) {
            (MonoidHandle::Bool, Value::Bool(b)) => if *b { "T" } else { "F" }.into(),
            (MonoidHandle::Nat, Value::Nat(n)) => n.to_string(),
            (MonoidHandle::Free { .. }, Value::Word(w)) => format!("\"{w}\""),
            (MonoidHandle::Table(t), Value::Sym(i)) => t.symbols[*i as usize].clone(),
            (MonoidHandle::Product(a, b), Value::Pair(x, y)) => {
                format!("({},{})", a.format_element(x), b.format_element(y))
            }
            _ => panic!("cannot format a value foreign to monoid {}", self.name()),
        }
    }

    /// Parses an element literal. Inverse of [`MonoidHandle::format_element`].
    pub fn parse_element(&self, s: &str) -> Result<Value> {
        let s = s.trim();
        let fail = || Error::ValueNotInMonoid {
            value: s.to_string(),
            monoid: self.name(),
        };
        match self {
            MonoidHandle::Bool => match s {
                "T" => Ok(Value::Bool(true)),
                "F" => Ok(Value::Bool(false)),
                _ => Err(fail()),
            },
            MonoidHandle::Nat => s.parse::<u64>().map(Value::Nat).map_err(|_| fail()),
            MonoidHandle::Free { .. } => {
                let inner = s
                    .strip_prefix('"')
                    .and_then(|r| r.strip_suffix('"'))
                    .ok_or_else(fail)?;
                let v = Value::Word(inner.to_string());
                if self.contains(&v) {
                    Ok(v)
                } else {
                    Err(fail())
                }
            }
            MonoidHandle::Table(t) => t
                .symbols
                .iter()
                .position(|sym| sym == s)
                .map(|i| Value::Sym(i as u8))
                .ok_or_else(fail),
            MonoidHandle::Product(a, b) => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(fail)?;
                // split on the comma at paren depth 0, ignoring quoted words
                let mut depth = 0usize;
                let mut in_quote = false;
                let mut split = None;
                for (i, c) in inner.char_indices() {
                    match c {
                        '"' => in_quote = !in_quote,
                        '(' if !in_quote => depth += 1,
                        ')' if !in_quote => depth = depth.saturating_sub(1),
                        ',' if depth == 0 && !in_quote => {
                            split = Some(i);
                            break;
                        }
                        _ => {}
                    }
                }
                let i = split.ok_or_else(fail)?;
                let x = a.parse_element(&inner[..i])?;
                let y = b.parse_element(&inner[i + 1..])?;
                Ok(Value::Pair(Box::new(x), Box::new(y)))
            }
        }
    }
}

/// Checks associativity and the identity laws: exhaustively on all |M|^3
/// triples when the monoid is finitely enumerated, on a deterministic sample
/// otherwise.
pub fn check_monoid_laws(m: &MonoidHandle, budget: usize) -> Result<()> {
    let elems = match m.elements() {
        Some(all) => all,
        None => m.sample((budget as f64).cbrt().ceil() as usize + 1),
    };
    let e = m.identity();
    for a in &elems {
        if !m.eq(&m.op(&e, a), a) || !m.eq(&m.op(a, &e), a) {
            return Err(Error::VarietyViolation(format!(
                "identity law fails at {} in {}",
                m.format_element(a),
                m.name()
            )));
        }
    }
    for a in &elems {
        for b in &elems {
            for c in &elems {
                let left = m.op(&m.op(a, b), c);
                let right = m.op(a, &m.op(b, c));
                if !m.eq(&left, &right) {
                    return Err(Error::VarietyViolation(format!(
                        "associativity fails at ({}, {}, {}) in {}",
                        m.format_element(a),
                        m.format_element(b),
                        m.format_element(c),
                        m.name()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A monoid homomorphism as data: source, target, and the underlying map.
/// Lawfulness is checked by [`check_hom`], not assumed.
#[derive(Clone)]
pub struct MonoidHom {
    pub source: MonoidHandle,
    pub target: MonoidHandle,
    map: Arc<dyn Fn(&Value) -> Value + Send + Sync>,
}

impl fmt::Debug for MonoidHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidHom({} -> {})", self.source.name(), self.target.name())
    }
}

impl MonoidHom {
    pub fn new(
        source: MonoidHandle,
        target: MonoidHandle,
        map: impl Fn(&Value) -> Value + Send + Sync + 'static,
    ) -> Self {
        MonoidHom {
            source,
            target,
            map: Arc::new(map),
        }
    }

    pub fn identity(m: &MonoidHandle) -> Self {
        MonoidHom::new(m.clone(), m.clone(), |v| v.clone())
    }

    pub fn apply(&self, v: &Value) -> Value {
        (self.map)(v)
    }

    /// The support-collapse map onto booleans: identity goes to F, everything
    /// else to T.
    pub fn collapse_to_bool(source: &MonoidHandle) -> Self {
        let src = source.clone();
        MonoidHom::new(source.clone(), MonoidHandle::Bool, move |v| {
            Value::Bool(!src.is_identity(v))
        })
    }
}

/// `a -> (a, e)` into a direct product.
pub fn inclusion_left(a: &MonoidHandle, b: &MonoidHandle) -> MonoidHom {
    let e = b.identity();
    MonoidHom::new(a.clone(), direct_product(a, b), move |v| {
        Value::Pair(Box::new(v.clone()), Box::new(e.clone()))
    })
}

/// `b -> (e, b)` into a direct product.
pub fn inclusion_right(a: &MonoidHandle, b: &MonoidHandle) -> MonoidHom {
    let e = a.identity();
    MonoidHom::new(b.clone(), direct_product(a, b), move |v| {
        Value::Pair(Box::new(e.clone()), Box::new(v.clone()))
    })
}

/// First projection out of a direct product.
pub fn projection_left(a: &MonoidHandle, b: &MonoidHandle) -> MonoidHom {
    MonoidHom::new(direct_product(a, b), a.clone(), move |v| match v {
        Value::Pair(x, _) => (**x).clone(),
        _ => panic!("projection applied to a non-pair value"),
    })
}

/// Second projection out of a direct product.
pub fn projection_right(a: &MonoidHandle, b: &MonoidHandle) -> MonoidHom {
    MonoidHom::new(direct_product(a, b), b.clone(), move |v| match v {
        Value::Pair(_, y) => (**y).clone(),
        _ => panic!("projection applied to a non-pair value"),
    })
}

/// True iff the homomorphism laws hold on all checked pairs: exhaustive when
/// the source is finite, otherwise on `budget` sampled pairs.
pub fn check_hom(h: &MonoidHom, budget: usize) -> bool {
    let elems = match h.source.elements() {
        Some(all) => all,
        None => h.source.sample((budget as f64).sqrt().ceil() as usize + 1),
    };
    let e_img = h.apply(&h.source.identity());
    if !h.target.eq(&e_img, &h.target.identity()) {
        return false;
    }
    for a in &elems {
        for b in &elems {
            let lhs = h.apply(&h.source.op(a, b));
            let rhs = h.target.op(&h.apply(a), &h.apply(b));
            if !h.target.eq(&lhs, &rhs) {
                return false;
            }
        }
    }
    true
}

/// The three supported varieties of monoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyTag {
    /// All monoids; no extra equations.
    Mon,
    /// Commutative monoids: ab = ba.
    CMon,
    /// Graphic monoids: aba = ab.
    GMon,
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VarietyTag::Mon => "mon",
            VarietyTag::CMon => "cmon",
            VarietyTag::GMon => "gmon",
        };
        f.write_str(s)
    }
}

impl VarietyTag {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mon" => Some(VarietyTag::Mon),
            "cmon" => Some(VarietyTag::CMon),
            "gmon" => Some(VarietyTag::GMon),
            _ => None,
        }
    }

    /// Checks that `m` satisfies this variety's defining equations,
    /// exhaustively when `m` is finite and on a sample otherwise.
    pub fn admits(&self, m: &MonoidHandle, budget: usize) -> Result<()> {
        let elems = match m.elements() {
            Some(all) => all,
            None => m.sample((budget as f64).sqrt().ceil() as usize + 1),
        };
        match self {
            VarietyTag::Mon => Ok(()),
            VarietyTag::CMon => {
                for a in &elems {
                    for b in &elems {
                        if !m.eq(&m.op(a, b), &m.op(b, a)) {
                            return Err(Error::VarietyViolation(format!(
                                "{} is not commutative: {}·{} != {}·{}",
                                m.name(),
                                m.format_element(a),
                                m.format_element(b),
                                m.format_element(b),
                                m.format_element(a)
                            )));
                        }
                    }
                }
                Ok(())
            }
            VarietyTag::GMon => {
                for a in &elems {
                    for b in &elems {
                        let ab = m.op(a, b);
                        let aba = m.op(&ab, a);
                        if !m.eq(&aba, &ab) {
                            return Err(Error::VarietyViolation(format!(
                                "{} is not graphic: aba != ab at a={}, b={}",
                                m.name(),
                                m.format_element(a),
                                m.format_element(b)
                            )));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}
