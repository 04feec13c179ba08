//! Mobius functions of finite simplicial sets and Euler
//! characteristics of finite homotopy colimits.
//!
//! The library stores finite simplicial sets by their nondegenerate
//! generators, computes the per-vertex Mobius function by counting
//! simplices with a given initial vertex, and evaluates weighted vertex
//! sums that compute the Euler characteristic of a space glued together
//! along the set. Independent constructions — double mapping cylinders,
//! products, and nerves of total categories of poset diagrams — verify
//! the weighted sums against direct cell counts and exact rational
//! homology.

pub mod category;
pub mod cli;
pub mod dsl;
pub mod homology;
pub mod mobius;
pub mod operator;
pub mod oracle;
pub mod sset;

pub use category::{
    grothendieck, monotone_map_check, nerve, poset_as_category, DiagramOfPosets, FiniteCategory,
    Poset,
};
pub use homology::{betti_numbers, boundary_matrices, euler_via_homology, BettiProfile};
pub use mobius::{
    class_mobius, component_partition, hocolim_chi, mobius_by_peeling, mobius_by_peeling_with,
    mobius_function, walking_span, ClassPartition, MobiusTable, VertexWeights,
};
pub use operator::{DegeneracyWord, OpSymbol, SimplicialOperator};
pub use oracle::{
    oracle_grothendieck, oracle_pushout, oracle_trivial_bundle, random_connected_sset,
    random_diagram, random_poset, random_pushout_instance, random_sset, DiagramBounds,
    OracleReport, SplitMix64, SsetBounds,
};
pub use sset::{
    boundary, circle, cylinder, disjoint_union, double_mapping_cylinder,
    euler_char_combinatorial, isomorphic, product, standard_simplex, FacePointer, SimplexId,
    SimplicialMap, SimplicialSet, ValidationReport,
};
