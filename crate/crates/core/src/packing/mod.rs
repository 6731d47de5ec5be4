//! König and packing verdicts, symbolic versus ordinary powers, exact covers,
//! rainbow colorings, the uniform/equidimensional checks and conjecture probes.

mod coloring;
mod konig;
mod minors;
mod powers;
mod probe;
mod theorems;

pub use coloring::{
    exact_cover, partite_lower_bound_check, rainbow_coloring, rainbow_coloring_with, LowerBoundReport, RainbowColoring,
};
pub use konig::{disjoint_edges, is_konig, konig_edges, packing_number, transversal_number, KonigVerdict};
pub use minors::{failing_minors, hypergraph_is_packed, is_packed, is_packed_with, MinorScan, PackingVerdict};
pub use powers::{symbolic_equals_ordinary, symbolic_equals_ordinary_with, PowerComparison};
pub use probe::{conjecture_probe, ProbeCandidate, ProbeKind, ProbeReport, ProbeSkip};
pub use theorems::{
    equidim_duality_check, forward_direction_check, packed_consequences, uniform_packing_theorem_check, Check,
    ConsequenceReport, EquidimReport, ForwardDirection, UniformPackingReport,
};

use crate::error::{Error, Result};

/// Search guards shared by the packing analyses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Variables allowed in a 3^n minor scan.
    pub max_packing_vars: usize,
    /// Vertices allowed in exhaustive family enumeration.
    pub max_family_vars: usize,
    /// Largest power compared in symbolic-versus-ordinary checks.
    pub m_max: u32,
    /// Generators allowed in any computed power.
    pub max_power_generators: usize,
    /// Variables allowed in an exact integer program.
    pub max_ip_vars: usize,
    /// Variables allowed in vertex enumeration.
    pub max_vertex_vars: usize,
    /// Bound on `n · C(a, b)` for rainbow coloring searches.
    pub max_coloring_work: u64,
    /// Search nodes allowed in one rainbow coloring search.
    pub max_coloring_nodes: u64,
    /// Largest scaling tried when looking for symbolic power witnesses.
    pub b_max: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_packing_vars: 14,
            max_family_vars: 6,
            m_max: 3,
            max_power_generators: 200_000,
            max_ip_vars: 24,
            max_vertex_vars: 12,
            max_coloring_work: 10_000_000,
            max_coloring_nodes: 5_000_000,
            b_max: 4,
        }
    }
}

impl Limits {
    pub fn small() -> Self {
        Limits {
            max_packing_vars: 10,
            max_family_vars: 5,
            m_max: 2,
            max_power_generators: 20_000,
            max_ip_vars: 16,
            max_vertex_vars: 10,
            max_coloring_work: 100_000,
            max_coloring_nodes: 200_000,
            b_max: 3,
        }
    }

    pub fn large() -> Self {
        Limits {
            max_packing_vars: 18,
            max_family_vars: 7,
            m_max: 4,
            max_power_generators: 2_000_000,
            max_ip_vars: 32,
            max_vertex_vars: 16,
            max_coloring_work: 1_000_000_000,
            max_coloring_nodes: 100_000_000,
            b_max: 6,
        }
    }

    /// `small`, `default` or `large`.
    pub fn profile(name: &str) -> Result<Self> {
        match name {
            "small" => Ok(Self::small()),
            "default" => Ok(Self::default()),
            "large" => Ok(Self::large()),
            other => Err(Error::InvalidArgument(format!(
                "unknown guard profile `{other}` (expected small, default or large)"
            ))),
        }
    }
}
