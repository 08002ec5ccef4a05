//! Brute-force ground truth for Green-product equality: breadth-first
//! closures of words under elementary moves, independent of the canonical
//! normal form code they are used to check.
//!
//! The moves are generated verbatim from the defining relations: a shuffle
//! swaps two adjacent letters whose components are adjacent in the index
//! graph; an adjacent same-component pair multiplies out; identity letters
//! drop. Variety closures add subword-instantiated defining equations
//! (swap any adjacent pair for CMon; delete or reinsert a repeated
//! contiguous subword for GMon).

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::green::{GreenContext, Letter};
use crate::monoid::VarietyTag;

/// Cap on the size of one closure computation.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_class_size: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_class_size: 500_000,
        }
    }
}

fn is_identity_letter(ctx: &GreenContext, l: &Letter) -> bool {
    ctx.component(l.component).is_identity(&l.value)
}

/// Neighbors of `word` under shuffles, adjacent combination, and identity
/// drops (the plain Green-product moves).
pub fn plain_moves(ctx: &GreenContext, word: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for p in 0..word.len() {
        if is_identity_letter(ctx, &word[p]) {
            let mut w = word.to_vec();
            w.remove(p);
            out.push(w);
        }
    }
    for p in 0..word.len().saturating_sub(1) {
        let (a, b) = (&word[p], &word[p + 1]);
        if ctx.graph().has_edge(a.component, b.component) {
            let mut w = word.to_vec();
            w.swap(p, p + 1);
            out.push(w);
        }
        if a.component == b.component {
            let m = ctx.component(a.component);
            let merged = m.op(&a.value, &b.value);
            let mut w = word.to_vec();
            w.remove(p + 1);
            if m.is_identity(&merged) {
                w.remove(p);
            } else {
                w[p].value = merged;
            }
            out.push(w);
        }
    }
    out
}

/// Neighbors of `word` under the variety's defining equations, instantiated
/// with contiguous subwords. Length-increasing instances are kept only up to
/// `max_len`.
pub fn variety_moves(
    ctx: &GreenContext,
    word: &[Letter],
    max_len: usize,
) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    match ctx.variety() {
        VarietyTag::Mon => {}
        VarietyTag::CMon => {
            // ab = ba for single letters generates all contiguous swaps
            for p in 0..word.len().saturating_sub(1) {
                let mut w = word.to_vec();
                w.swap(p, p + 1);
                out.push(w);
            }
        }
        VarietyTag::GMon => {
            let eq_letters = |x: &Letter, y: &Letter| {
                x.component == y.component && ctx.component(x.component).eq(&x.value, &y.value)
            };
            let n = word.len();
            // aba -> ab: find a at [i..j), b = [j..k), a again at [k..l)
            for i in 0..n {
                for j in (i + 1)..=n {
                    let a_len = j - i;
                    for k in j..=n.saturating_sub(a_len) {
                        let l = k + a_len;
                        if l > n {
                            continue;
                        }
                        if (0..a_len).all(|t| eq_letters(&word[i + t], &word[k + t])) {
                            let mut w = word.to_vec();
                            w.drain(k..l);
                            out.push(w);
                        }
                    }
                }
            }
            // ab -> aba: reinsert a copy of a after b, within the length cap
            for i in 0..n {
                for j in (i + 1)..=n {
                    let a_len = j - i;
                    if n + a_len > max_len {
                        continue;
                    }
                    for k in j..=n {
                        let mut w = word.to_vec();
                        let copy: Vec<Letter> = word[i..j].to_vec();
                        w.splice(k..k, copy);
                        out.push(w);
                    }
                }
            }
            // left absorption: the unbounded closure rewrites
            // u a w a' t into u a w (a a') t for same-component letters by
            // inserting a copy of the earlier letter and combining; the
            // insertion may not fit under the length cap, so the composite
            // is offered directly
            for i in 0..n {
                for j in (i + 1)..n {
                    if word[j].component == word[i].component {
                        let m = ctx.component(word[i].component);
                        let merged = m.op(&word[i].value, &word[j].value);
                        if !m.eq(&merged, &word[j].value) {
                            let mut w = word.to_vec();
                            w[j].value = merged;
                            out.push(w);
                        }
                    }
                }
            }
        }
    }
    out
}

fn bfs(
    start: Vec<Letter>,
    budget: OracleBudget,
    neighbors: impl Fn(&[Letter]) -> Vec<Vec<Letter>>,
) -> Result<HashSet<Vec<Letter>>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(word) = queue.pop_front() {
        for next in neighbors(&word) {
            if !seen.contains(&next) {
                if seen.len() >= budget.max_class_size {
                    return Err(Error::BudgetExceeded(format!(
                        "closure exceeded {} words",
                        budget.max_class_size
                    )));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// All words reachable from `word` by shuffles, adjacent combinations, and
/// identity drops.
pub fn shuffle_closure(
    ctx: &Arc<GreenContext>,
    word: &[Letter],
    budget: OracleBudget,
) -> Result<HashSet<Vec<Letter>>> {
    let ctx = Arc::clone(ctx);
    bfs(word.to_vec(), budget, move |w| plain_moves(&ctx, w))
}

/// All words reachable under the plain moves plus the variety's equations,
/// never growing past `max_len` letters.
pub fn congruence_closure(
    ctx: &Arc<GreenContext>,
    word: &[Letter],
    budget: OracleBudget,
    max_len: usize,
) -> Result<HashSet<Vec<Letter>>> {
    if word.len() > max_len {
        return Err(Error::BudgetExceeded(format!(
            "word of length {} exceeds the {max_len}-letter cap",
            word.len()
        )));
    }
    let ctx = Arc::clone(ctx);
    bfs(word.to_vec(), budget, move |w| {
        let mut out = plain_moves(&ctx, w);
        out.extend(variety_moves(&ctx, w, max_len));
        out.retain(|cand| cand.len() <= max_len);
        out
    })
}

/// Ground-truth equality: the two closures intersect. Sound because every
/// move is an instance of the congruence; complete at desk scale because
/// both closures contain the reachable reduced forms.
pub fn oracle_equal(
    ctx: &Arc<GreenContext>,
    left: &[Letter],
    right: &[Letter],
    budget: OracleBudget,
    max_len: usize,
) -> Result<bool> {
    let a = match ctx.variety() {
        VarietyTag::Mon => shuffle_closure(ctx, left, budget)?,
        _ => congruence_closure(ctx, left, budget, max_len)?,
    };
    if a.contains(right) {
        return Ok(true);
    }
    let b = match ctx.variety() {
        VarietyTag::Mon => shuffle_closure(ctx, right, budget)?,
        _ => congruence_closure(ctx, right, budget, max_len)?,
    };
    Ok(a.iter().any(|w| b.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::kneser::kneser_graph;
    use crate::monoid::{boolean_monoid, Value};

    fn t() -> Value {
        Value::Bool(true)
    }

    fn ctx(graph: SimpleGraph, variety: VarietyTag) -> Arc<GreenContext> {
        GreenContext::uniform(graph, &boolean_monoid(), variety).unwrap()
    }

    #[test]
    fn two_adjacent_letters_give_a_class_of_two() {
        let c = ctx(SimpleGraph::complete(2), VarietyTag::Mon);
        let class = shuffle_closure(
            &c,
            &[Letter::new(0, t()), Letter::new(1, t())],
            OracleBudget::default(),
        )
        .unwrap();
        assert_eq!(class.len(), 2);
    }

    #[test]
    fn two_non_adjacent_letters_are_rigid() {
        let c = ctx(SimpleGraph::edgeless(2), VarietyTag::Mon);
        let class = shuffle_closure(
            &c,
            &[Letter::new(0, t()), Letter::new(1, t())],
            OracleBudget::default(),
        )
        .unwrap();
        assert_eq!(class.len(), 1);
    }

    #[test]
    fn kneser_three_letter_class() {
        // components {0,1}, {2,3}, {1,3} of KG_{4,2}: only the first two
        // commute, so the class is the two orderings of the leading pair
        let c = ctx(kneser_graph(4, 2), VarietyTag::Mon);
        let word = vec![Letter::new(0, t()), Letter::new(5, t()), Letter::new(4, t())];
        let class = shuffle_closure(&c, &word, OracleBudget::default()).unwrap();
        assert_eq!(class.len(), 2);
        let swapped = vec![Letter::new(5, t()), Letter::new(0, t()), Letter::new(4, t())];
        assert!(class.contains(&swapped));
    }

    #[test]
    fn gmon_closure_contains_the_deletion() {
        let c = ctx(kneser_graph(3, 2), VarietyTag::GMon);
        let xwx = vec![Letter::new(0, t()), Letter::new(1, t()), Letter::new(0, t())];
        let class = congruence_closure(&c, &xwx, OracleBudget::default(), 5).unwrap();
        let xw = vec![Letter::new(0, t()), Letter::new(1, t())];
        assert!(class.contains(&xw));
    }

    #[test]
    fn cmon_closure_contains_both_orderings() {
        let c = ctx(SimpleGraph::edgeless(2), VarietyTag::CMon);
        let ab = vec![Letter::new(0, t()), Letter::new(1, t())];
        let class = congruence_closure(&c, &ab, OracleBudget::default(), 4).unwrap();
        let ba = vec![Letter::new(1, t()), Letter::new(0, t())];
        assert!(class.contains(&ba));
    }

    #[test]
    fn mon_congruence_closure_matches_shuffle_closure() {
        let c = ctx(kneser_graph(4, 2), VarietyTag::Mon);
        let word = vec![Letter::new(0, t()), Letter::new(5, t()), Letter::new(1, t())];
        let a = shuffle_closure(&c, &word, OracleBudget::default()).unwrap();
        let b = congruence_closure(&c, &word, OracleBudget::default(), 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_enforced(){
        let c = ctx(SimpleGraph::complete(4), VarietyTag::Mon);
        let word: Vec<Letter> = (0..4).map(|i| Letter::new(i, t())).collect();
        let tiny = OracleBudget { max_class_size: 3 };
        assert!(matches!(
            shuffle_closure(&c, &word, tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
