//! Interval representations of graph powers that keep their endpoint
//! orders.
//!
//! Given an interval representation of `G^(k-1)`, [`extend_representation`]
//! stretches intervals to the right so that the result represents `G^k` and
//! induces the same left-endpoint and right-endpoint orders. Proper
//! representations therefore stay proper, and [`proper_to_unit`] turns them
//! into unit-length ones with the same orders. For trapezoid representations
//! (two parallel lines) the analogous statement fails; [`search_representation`]
//! checks the `P5` counterexample exhaustively.

pub mod cli;
pub mod constraints;
pub mod error;
pub mod extension;
pub mod format;
pub mod graph;
pub mod interval;
pub mod random;
pub mod trapezoid;

pub use error::{Error, Result};
pub use extension::{
    check_realizes, extend_representation, iterate_powers, Extension, ExtensionTrace, PowerStep,
    TraceEntry,
};
pub use graph::{
    bfs_distances, connected_components, graph_power, graph_power_oracle, Distance, Graph,
};
pub use interval::{
    containment_witness, endpoint_orders, intersection_graph, is_proper, normalize, proper_to_unit,
    same_orders, EndpointOrders, Interval, IntervalRepresentation, WeakOrder,
};
pub use trapezoid::{
    count_interleavings_brute_force, enumerate_interleavings, p5_representation,
    search_representation, trapezoid_intersection_graph, Event, Interleaving, SearchOutcome,
    Trapezoid, TrapezoidOrders, TrapezoidRepresentation,
};
