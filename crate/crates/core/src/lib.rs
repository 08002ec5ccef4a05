//! Network models from monoids.
//!
//! A network model is a family of monoids `F(n)` of "networks on n
//! vertices", each carrying a symmetric-group action, with embeddings
//! `F(m) x F(n) -> F(m+n)` that place two networks side by side. The ordinary
//! model weights every edge of a complete graph independently, which forces
//! all edges to commute. This crate also builds the free varietal model: its
//! constituent monoids are Green products of one monoid copy per edge,
//! indexed by the Kneser graph `KG_{n,2}` so that exactly the disjoint edges
//! commute, optionally quotiented into a variety (commutative or graphic
//! monoids). The free model remembers the order in which edges touching a
//! common vertex were added, which is what lets bounded-degree networks form
//! an algebra of the associated operad.
//!
//! Modules:
//! - [`monoid`]: monoids as values, homomorphisms, varieties.
//! - [`graph`]: simple graphs and quivers.
//! - [`kneser`]: k-subsets, Kneser graphs, and their embeddings.
//! - [`green`]: Green products with canonical normal forms.
//! - [`oracle`]: brute-force closures used as ground truth for equality.
//! - [`network`]: the varietal, ordinary, and simple-graph network models.
//! - [`operad`]: operad operations and the range-limited and bounded-degree
//!   algebras.
//! - [`io`]: literals, JSON, and DOT.
//! - [`checks`]: named invariant suites runnable from the CLI.

pub mod checks;
pub mod error;
pub mod graph;
pub mod green;
pub mod io;
pub mod kneser;
pub mod monoid;
pub mod network;
pub mod operad;
pub mod oracle;
pub mod perm;

pub use error::{Error, Result};
pub use graph::{insert_cospan, Quiver, SimpleGraph};
pub use green::{universal_fold, GreenContext, GreenElement, Letter};
pub use kneser::{k_subsets, kneser_embedding, kneser_graph, kneser_laxator, Injection, KSubset};
pub use monoid::{
    boolean_monoid, check_hom, check_monoid_laws, direct_product, free_monoid, nat_monoid,
    path_band_monoid, MonoidHandle, MonoidHom, Value, VarietyTag,
};
pub use network::{
    cmon_from_ordinary, cmon_to_ordinary, counit_eval, induced_hom, NetworkElement, NetworkModel,
    OrdinaryModel, OrdinaryNetworkElement, SimpleGraphModel, VarietalModel,
};
pub use operad::{
    act_bounded_degree, full_bounded_degree_action, operad_compose, BoundedDegreeNetwork,
    MetricSpace, OperadOperation, Point, RangeLimitedContext, RangeLimitedState,
};
pub use oracle::{congruence_closure, shuffle_closure, OracleBudget};
pub use perm::Permutation;
