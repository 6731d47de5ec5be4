//! Square-free monomial ideals and their hypergraphs: prime decompositions,
//! Alexander duality, minors and the packing property, symbolic powers,
//! Newton and symbolic polyhedra, and the covering/packing invariants
//! `τ, π, τ_f, π_f, α, α̂`, all in exact arithmetic.

pub mod error;
pub mod family;
pub mod hypergraph;
pub mod lp;
pub mod monomial;
pub mod packing;
pub mod polyhedra;
pub mod sets;

pub use error::{Error, Result};
pub use hypergraph::{alexander_dual, blocker, edge_ideal, hypergraph_of, Hypergraph, ZeroOneMatrix};
pub use monomial::{Monomial, MonomialIdeal, PrimeDecomposition, VariableContext};
pub use packing::Limits;
pub use sets::VertexSet;
