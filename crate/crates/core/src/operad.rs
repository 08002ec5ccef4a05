//! Operad operations over a network model and two of their algebras:
//! range-limited communication networks and bounded-degree networks.
//!
//! An operation is a permutation together with a network; it acts on a tuple
//! of algebra elements by permuting their disjoint union and overlaying the
//! network, with the algebra deciding which new edges actually land.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::monoid::{MonoidHandle, Value, VarietyTag};
use crate::network::{NetworkElement, NetworkModel, VarietalModel};
use crate::perm::Permutation;

/// A typed operad operation: input arities, a permutation of the output
/// vertices, and a network on the output vertex set.
#[derive(Debug, Clone)]
pub struct OperadOperation<N> {
    pub inputs: Vec<usize>,
    pub sigma: Permutation,
    pub network: N,
}

impl<N> OperadOperation<N> {
    pub fn new<F: NetworkModel<Net = N>>(
        model: &F,
        inputs: Vec<usize>,
        sigma: Permutation,
        network: N,
    ) -> Result<Self> {
        let total: usize = inputs.iter().sum();
        if sigma.len() != total || model.size(&network) != total {
            return Err(Error::ProfileMismatch(format!(
                "profile sums to {total} but the permutation is on {} points and the network has {} vertices",
                sigma.len(),
                model.size(&network)
            )));
        }
        Ok(OperadOperation {
            inputs,
            sigma,
            network,
        })
    }

    /// The identity operation at arity n: one input, identity permutation,
    /// empty network.
    pub fn identity<F: NetworkModel<Net = N>>(model: &F, n: usize) -> Self {
        OperadOperation {
            inputs: vec![n],
            sigma: Permutation::identity(n),
            network: model.empty(n),
        }
    }

    pub fn output_arity(&self) -> usize {
        self.sigma.len()
    }
}

/// Operadic composition: block-sum the inner permutations under the outer
/// one and overlay the outer network onto the permuted disjoint union of
/// the inner networks, inner letters first. The inner-first order is what
/// makes acting by a composite agree with acting in stages for the
/// bounded-degree walk; for models with commuting edges both orders
/// coincide. The operad axioms are verified by tests, not assumed.
pub fn operad_compose<F: NetworkModel>(
    model: &F,
    outer: &OperadOperation<F::Net>,
    inners: &[OperadOperation<F::Net>],
) -> Result<OperadOperation<F::Net>> {
    if inners.len() != outer.inputs.len() {
        return Err(Error::ProfileMismatch(format!(
            "outer operation expects {} inputs, got {}",
            outer.inputs.len(),
            inners.len()
        )));
    }
    for (slot, inner) in inners.iter().enumerate() {
        if inner.output_arity() != outer.inputs[slot] {
            return Err(Error::ProfileMismatch(format!(
                "input {slot} expects arity {}, inner operation outputs {}",
                outer.inputs[slot],
                inner.output_arity()
            )));
        }
    }
    let mut sigma = Permutation::identity(0);
    let mut union = model.empty(0);
    let mut inputs = Vec::new();
    for inner in inners {
        sigma = sigma.block_sum(&inner.sigma);
        union = model.disjoint_union(&union, &inner.network)?;
        inputs.extend(inner.inputs.iter().copied());
    }
    let network = model.overlay(&model.permute(&outer.sigma, &union)?, &outer.network)?;
    Ok(OperadOperation {
        inputs,
        sigma: outer.sigma.compose(&sigma)?,
        network,
    })
}

/// A metric space for positioning network nodes: the real line, the plane,
/// or an explicit finite distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricSpace {
    Line,
    Plane,
    Matrix(Arc<DistanceMatrix>),
}

/// A point of one of the supported spaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Line(f64),
    Plane(f64, f64),
    Index(usize),
}

/// A finite metric given by its full matrix; symmetry, zero diagonal and the
/// triangle inequality are validated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    d: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    pub fn new(d: Vec<Vec<f64>>) -> Result<Arc<Self>> {
        let n = d.len();
        for row in &d {
            if row.len() != n {
                return Err(Error::InvalidMetric("matrix is not square".to_string()));
            }
        }
        for i in 0..n {
            if d[i][i] != 0.0 {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if d[i][j] < 0.0 {
                    return Err(Error::InvalidMetric(format!("negative distance at ({i},{j})")));
                }
                if (d[i][j] - d[j][i]).abs() > 1e-12 {
                    return Err(Error::InvalidMetric(format!("asymmetric at ({i},{j})")));
                }
                for k in 0..n {
                    if d[i][j] > d[i][k] + d[k][j] + 1e-12 {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails at ({i},{j}) via {k}"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(DistanceMatrix { d }))
    }

    pub fn size(&self) -> usize {
        self.d.len()
    }
}

impl MetricSpace {
    pub fn distance(&self, a: &Point, b: &Point) -> Result<f64> {
        match (self, a, b) {
            (MetricSpace::Line, Point::Line(x), Point::Line(y)) => Ok((x - y).abs()),
            (MetricSpace::Plane, Point::Plane(x1, y1), Point::Plane(x2, y2)) => {
                Ok(((x1 - x2).powi(2) + (y1 - y2).powi(2)).sqrt())
            }
            (MetricSpace::Matrix(m), Point::Index(i), Point::Index(j)) => {
                if *i >= m.size() || *j >= m.size() {
                    return Err(Error::MetricMismatch(format!(
                        "point index out of range for a {}-point space",
                        m.size()
                    )));
                }
                Ok(m.d[*i][*j])
            }
            _ => Err(Error::MetricMismatch(
                "point does not belong to this space".to_string(),
            )),
        }
    }
}

/// The shared data of a range-limited algebra: the space and the maximal
/// edge length.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeLimitedContext {
    pub space: MetricSpace,
    pub max_range: f64,
}

/// A simple graph positioned in a metric space with every edge no longer
/// than the range limit.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeLimitedState {
    pub graph: SimpleGraph,
    pub positions: Vec<Point>,
}

impl RangeLimitedContext {
    pub fn new(space: MetricSpace, max_range: f64) -> Result<Self> {
        if max_range.is_nan() || max_range < 0.0 {
            return Err(Error::InvalidMetric(format!(
                "range limit must be nonnegative, got {max_range}"
            )));
        }
        Ok(RangeLimitedContext { space, max_range })
    }

    /// Validates the edge-length invariant on construction.
    pub fn state(&self, graph: SimpleGraph, positions: Vec<Point>) -> Result<RangeLimitedState> {
        if positions.len() != graph.n_vertices() {
            return Err(Error::MetricMismatch(format!(
                "{} positions for {} vertices",
                positions.len(),
                graph.n_vertices()
            )));
        }
        for (u, v) in graph.edges() {
            let d = self.space.distance(&positions[u], &positions[v])?;
            if d > self.max_range {
                return Err(Error::MetricMismatch(format!(
                    "edge ({u},{v}) has length {d} beyond the limit {}",
                    self.max_range
                )));
            }
        }
        Ok(RangeLimitedState { graph, positions })
    }

    pub fn check_state(&self, state: &RangeLimitedState) -> Result<()> {
        self.state(state.graph.clone(), state.positions.clone()).map(|_| ())
    }

    /// The algebra action: permute the disjoint union of the states (graphs
    /// and positions together), then try each edge of the operation's
    /// network, adding exactly those within range. Boundary distances equal
    /// to the limit are admitted.
    pub fn act(
        &self,
        op: &OperadOperation<SimpleGraph>,
        states: &[RangeLimitedState],
    ) -> Result<RangeLimitedState> {
        if op.inputs.len() != states.len() {
            return Err(Error::ProfileMismatch(format!(
                "operation expects {} states, got {}",
                op.inputs.len(),
                states.len()
            )));
        }
        for (slot, (want, state)) in op.inputs.iter().zip(states).enumerate() {
            if state.graph.n_vertices() != *want {
                return Err(Error::ProfileMismatch(format!(
                    "state {slot} has {} vertices, profile expects {want}",
                    state.graph.n_vertices()
                )));
            }
        }
        let mut union = SimpleGraph::edgeless(0);
        let mut stacked = Vec::new();
        for s in states {
            union = union.disjoint_union(&s.graph);
            stacked.extend(s.positions.iter().copied());
        }
        let mut graph = union.relabel(&op.sigma)?;
        // positions travel with their vertices
        let inv = op.sigma.inverse();
        let positions: Vec<Point> = (0..stacked.len()).map(|w| stacked[inv.apply(w)]).collect();
        for (u, v) in op.network.edges() {
            if self.space.distance(&positions[u], &positions[v])? <= self.max_range {
                graph.add_edge(u, v)?;
            }
        }
        self.state(graph, positions)
    }
}

/// A simple graph with every vertex of degree at most k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedDegreeNetwork {
    pub bound: usize,
    pub graph: SimpleGraph,
}

impl BoundedDegreeNetwork {
    pub fn new(bound: usize, graph: SimpleGraph) -> Result<Self> {
        for v in 0..graph.n_vertices() {
            let degree = graph.degree(v)?;
            if degree > bound {
                return Err(Error::DegreeBound {
                    vertex: v,
                    degree,
                    bound,
                });
            }
        }
        Ok(BoundedDegreeNetwork { bound, graph })
    }

    pub fn n(&self) -> usize {
        self.graph.n_vertices()
    }
}

fn require_bool_gmon(model: &VarietalModel) -> Result<()> {
    if *model.monoid() != MonoidHandle::Bool || model.variety() != VarietyTag::GMon {
        return Err(Error::MismatchedContexts(
            "the bounded-degree action is defined over the graphic boolean model".to_string(),
        ));
    }
    Ok(())
}

/// The bounded-degree action with an explicit lift of the state: walk the
/// canonical word of `g` letter by letter, committing an edge only when the
/// grown support stays within the bound, and return the final support.
pub fn act_bounded_degree_with_lift(
    model: &VarietalModel,
    g: &NetworkElement,
    lift: &NetworkElement,
    bound: usize,
) -> Result<BoundedDegreeNetwork> {
    require_bool_gmon(model)?;
    if g.n() != lift.n() {
        return Err(Error::MismatchedContexts(format!(
            "network on {} vertices acting on a state on {}",
            g.n(),
            lift.n()
        )));
    }
    let support = lift.support();
    // the lift must already satisfy the bound
    BoundedDegreeNetwork::new(bound, support.clone())?;
    let mut current = lift.clone();
    let mut support = support;
    for (u, v, value) in g.edge_letters() {
        let mut candidate = support.clone();
        candidate.add_edge(u, v)?;
        if candidate.is_k_bounded(bound) {
            let step = model.network(g.n(), &[(u, v, value)])?;
            current = model.overlay(&current, &step)?;
            support = candidate;
        }
    }
    debug_assert_eq!(current.support(), support);
    BoundedDegreeNetwork::new(bound, support)
}

/// The bounded-degree action on a state graph, lifting it along its sorted
/// edge list. The result does not depend on that choice (or on the
/// representative word of `g`); the test suites check this exhaustively.
pub fn act_bounded_degree(
    model: &VarietalModel,
    g: &NetworkElement,
    h: &BoundedDegreeNetwork,
) -> Result<BoundedDegreeNetwork> {
    if g.n() != h.n() {
        return Err(Error::MismatchedContexts(format!(
            "network on {} vertices acting on a state on {}",
            g.n(),
            h.n()
        )));
    }
    let letters: Vec<(usize, usize, Value)> = h
        .graph
        .edges()
        .map(|(u, v)| (u, v, Value::Bool(true)))
        .collect();
    let lift = model.network(h.n(), &letters)?;
    act_bounded_degree_with_lift(model, g, &lift, h.bound)
}

/// The full operad-algebra action on bounded-degree networks: permute the
/// disjoint union of the states, then act with the operation's network.
pub fn full_bounded_degree_action(
    model: &VarietalModel,
    op: &OperadOperation<NetworkElement>,
    states: &[BoundedDegreeNetwork],
) -> Result<BoundedDegreeNetwork> {
    require_bool_gmon(model)?;
    if op.inputs.len() != states.len() {
        return Err(Error::ProfileMismatch(format!(
            "operation expects {} states, got {}",
            op.inputs.len(),
            states.len()
        )));
    }
    let bound = states.first().map(|s| s.bound).unwrap_or(0);
    for (slot, (want, state)) in op.inputs.iter().zip(states).enumerate() {
        if state.n() != *want {
            return Err(Error::ProfileMismatch(format!(
                "state {slot} has {} vertices, profile expects {want}",
                state.n()
            )));
        }
        if state.bound != bound {
            return Err(Error::ProfileMismatch(
                "states carry different degree bounds".to_string(),
            ));
        }
    }
    let mut union = SimpleGraph::edgeless(0);
    for s in states {
        union = union.disjoint_union(&s.graph);
    }
    // placing graphs side by side and relabeling cannot change degrees
    let placed = union.relabel(&op.sigma)?;
    let state = BoundedDegreeNetwork::new(bound, placed)?;
    act_bounded_degree(model, &op.network, &state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::boolean_monoid;

    fn t() -> Value {
        Value::Bool(true)
    }

    fn gmon_model() -> VarietalModel {
        VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap()
    }

    #[test]
    fn compose_with_identities_is_neutral() {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::CMon).unwrap();
        let g = model.network(4, &[(0, 1, t()), (1, 2, t())]).unwrap();
        let outer = OperadOperation::new(
            &model,
            vec![2, 2],
            Permutation::from_cycles(4, "(1 2)").unwrap(),
            g,
        )
        .unwrap();
        let ids = vec![
            OperadOperation::identity(&model, 2),
            OperadOperation::identity(&model, 2),
        ];
        let composite = operad_compose(&model, &outer, &ids).unwrap();
        assert_eq!(composite.inputs, vec![2, 2]);
        assert_eq!(composite.sigma, outer.sigma);
        assert!(model.eq(&composite.network, &outer.network).unwrap());

        // composing under the identity is neutral too
        let id4 = OperadOperation::identity(&model, 4);
        let composite = operad_compose(&model, &id4, std::slice::from_ref(&outer)).unwrap();
        assert_eq!(composite.sigma, outer.sigma);
        assert!(model.eq(&composite.network, &outer.network).unwrap());
    }

    #[test]
    fn compose_two_single_edges_into_an_edgeless_outer() {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::CMon).unwrap();
        let inner = |_: usize| OperadOperation::new(
            &model,
            vec![2],
            Permutation::identity(2),
            model.network(2, &[(0, 1, t())]).unwrap(),
        )
        .unwrap();
        let outer = OperadOperation::new(
            &model,
            vec![2, 2],
            Permutation::identity(4),
            model.empty(4),
        )
        .unwrap();
        let composite = operad_compose(&model, &outer, &[inner(0), inner(1)]).unwrap();
        let expected = model.network(4, &[(0, 1, t()), (2, 3, t())]).unwrap();
        assert!(model.eq(&composite.network, &expected).unwrap());
        assert_eq!(composite.inputs, vec![2, 2]);
    }

    #[test]
    fn profile_mismatch_is_rejected() {
        let model = gmon_model();
        let outer = OperadOperation::new(
            &model,
            vec![2, 2],
            Permutation::identity(4),
            model.empty(4),
        )
        .unwrap();
        let wrong = OperadOperation::identity(&model, 3);
        assert!(matches!(
            operad_compose(&model, &outer, &[wrong.clone(), wrong]),
            Err(Error::ProfileMismatch(_))
        ));
    }

    #[test]
    fn line_metric_and_matrix_validation() {
        let line = MetricSpace::Line;
        assert_eq!(
            line.distance(&Point::Line(1.0), &Point::Line(4.0)).unwrap(),
            3.0
        );
        assert!(line.distance(&Point::Line(0.0), &Point::Index(0)).is_err());
        assert!(DistanceMatrix::new(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(DistanceMatrix::new(vec![vec![0.0, 5.0, 1.0], vec![5.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]).is_err());
        let ok = DistanceMatrix::new(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(
            MetricSpace::Matrix(ok)
                .distance(&Point::Index(0), &Point::Index(1))
                .unwrap(),
            1.0
        );
    }

    #[test]
    fn range_limited_boundary_is_inclusive() {
        let ctx = RangeLimitedContext::new(MetricSpace::Line, 1.0).unwrap();
        let positions: Vec<Point> = (0..4).map(|i| Point::Line(i as f64)).collect();
        let state = ctx.state(SimpleGraph::edgeless(4), positions).unwrap();
        let op = OperadOperation {
            inputs: vec![4],
            sigma: Permutation::identity(4),
            network: SimpleGraph::new(4, [(0, 1), (0, 2)]).unwrap(),
        };
        let out = ctx.act(&op, &[state]).unwrap();
        assert!(out.graph.has_edge(0, 1), "distance exactly 1 is admitted");
        assert!(!out.graph.has_edge(0, 2), "distance 2 is rejected");
        assert_eq!(out.graph.n_edges(), 1);
    }

    #[test]
    fn range_limited_disjoint_union_with_empty_network() {
        let ctx = RangeLimitedContext::new(MetricSpace::Line, 1.0).unwrap();
        let s1 = ctx
            .state(
                SimpleGraph::new(2, [(0, 1)]).unwrap(),
                vec![Point::Line(0.0), Point::Line(1.0)],
            )
            .unwrap();
        let s2 = ctx
            .state(SimpleGraph::edgeless(1), vec![Point::Line(5.0)])
            .unwrap();
        let op = OperadOperation {
            inputs: vec![2, 1],
            sigma: Permutation::identity(3),
            network: SimpleGraph::edgeless(3),
        };
        let out = ctx.act(&op, &[s1, s2]).unwrap();
        assert_eq!(out.graph.n_edges(), 1);
        assert!(out.graph.has_edge(0, 1));
        assert_eq!(out.positions[2], Point::Line(5.0));
    }

    #[test]
    fn range_limited_positions_follow_the_permutation() {
        let ctx = RangeLimitedContext::new(MetricSpace::Line, 1.0).unwrap();
        let s1 = ctx
            .state(
                SimpleGraph::new(2, [(0, 1)]).unwrap(),
                vec![Point::Line(0.0), Point::Line(1.0)],
            )
            .unwrap();
        let s2 = ctx
            .state(SimpleGraph::edgeless(1), vec![Point::Line(9.0)])
            .unwrap();
        let op = OperadOperation {
            inputs: vec![2, 1],
            sigma: Permutation::from_cycles(3, "(0 2 1)").unwrap(),
            network: SimpleGraph::edgeless(3),
        };
        let out = ctx.act(&op, &[s1, s2]).unwrap();
        // the edge stays within range because its endpoints carried their
        // positions along
        ctx.check_state(&out).unwrap();
        assert_eq!(out.graph.n_edges(), 1);
    }

    #[test]
    fn bounded_degree_walkthrough() {
        let model = gmon_model();
        // n = 3, k = 1, state {01}: both attempted edges are rejected
        let g = model.network(3, &[(0, 2, t()), (1, 2, t())]).unwrap();
        let h = BoundedDegreeNetwork::new(1, SimpleGraph::new(3, [(0, 1)]).unwrap()).unwrap();
        let out = act_bounded_degree(&model, &g, &h).unwrap();
        assert_eq!(out.graph, h.graph);
        // same network acting on the empty state: {02} lands, {12} is then rejected
        let empty = BoundedDegreeNetwork::new(1, SimpleGraph::edgeless(3)).unwrap();
        let out = act_bounded_degree(&model, &g, &empty).unwrap();
        assert_eq!(out.graph, SimpleGraph::new(3, [(0, 2)]).unwrap());
        // empty network fixes every state
        let out = act_bounded_degree(&model, &model.empty(3), &h).unwrap();
        assert_eq!(out.graph, h.graph);
    }

    #[test]
    fn bounded_degree_rejects_overfull_states() {
        let model = gmon_model();
        let g = model.empty(3);
        let triangle = SimpleGraph::complete(3);
        assert!(BoundedDegreeNetwork::new(1, triangle.clone()).is_err());
        let h = BoundedDegreeNetwork {
            bound: 1,
            graph: triangle,
        };
        assert!(act_bounded_degree(&model, &g, &h).is_err());
    }

    #[test]
    fn full_action_with_empty_network_is_disjoint_union() {
        let model = gmon_model();
        let op = OperadOperation::new(
            &model,
            vec![2, 2],
            Permutation::identity(4),
            model.empty(4),
        )
        .unwrap();
        let s = BoundedDegreeNetwork::new(1, SimpleGraph::new(2, [(0, 1)]).unwrap()).unwrap();
        let out = full_bounded_degree_action(&model, &op, &[s.clone(), s]).unwrap();
        assert_eq!(out.graph, SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap());
    }

    #[test]
    fn single_state_profile_reduces_to_plain_action() {
        let model = gmon_model();
        let g = model.network(3, &[(0, 1, t())]).unwrap();
        let op = OperadOperation::new(&model, vec![3], Permutation::identity(3), g.clone())
            .unwrap();
        let h = BoundedDegreeNetwork::new(2, SimpleGraph::new(3, [(1, 2)]).unwrap()).unwrap();
        let via_full = full_bounded_degree_action(&model, &op, std::slice::from_ref(&h)).unwrap();
        let via_plain = act_bounded_degree(&model, &g, &h).unwrap();
        assert_eq!(via_full, via_plain);
    }
}
