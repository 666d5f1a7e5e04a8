//! Chordal graph recognition through perfectly nested sequences.
//!
//! The central routine peels perfect (simplicial) vertices off a finite
//! graph. If the peeling reaches a disjoint union of cliques the graph is
//! chordal and the chain of remaining vertex sets is a checkable certificate;
//! if it stalls, a chordless cycle of length at least four is extracted
//! instead. Around that sit the usual consequences: perfect elimination
//! orderings, clique number and maximal cliques, optimal coloring of chordal
//! graphs, and dependent-arc counts of acyclic orientations.
//!
//! Only finite simple undirected graphs are supported.

pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod nested;
pub mod orientation;
pub mod perfection;
pub mod recognition;
pub mod rng;

pub use coloring::{
    check_r1, chordal_coloring, chromatic_number_exact, clique_number_chordal, clique_number_exact,
    greedy_coloring, maximal_cliques_chordal, maximal_cliques_exact, optimal_coloring_exact,
    Coloring, R1Report,
};
pub use error::{Error, Result};
pub use generators::{
    gen_complete, gen_complete_multipartite, gen_cycle, gen_path, gen_random_chordal,
    gen_random_graph, gen_star,
};
pub use graph::{vset, Graph, VertexId, VertexSet};
pub use nested::{
    build_stationary_sequence, peo_from_sequence, verify_peo, verify_perfectly_nested,
    BuildOutcome, Condition, NestedSequence, RemovalStrategy, VerificationReport, Violation,
};
pub use orientation::{
    all_orientations, orient_by_ordering, orientation_spectrum, orientation_spectrum_threads, Arc,
    Orientation, SpectrumReport,
};
pub use perfection::{is_perfect_vertex, perfect_set};
pub use recognition::{
    brute_force_chordal, find_chordless_cycle, is_chordal, is_chordal_mcs, is_chordal_with,
    verify_certificate, ChordalityCertificate, ChordlessCycle,
};
