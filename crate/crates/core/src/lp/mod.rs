//! Exact rational linear and integer programming.

pub mod program;
pub mod rational;
pub mod simplex;
pub mod vertices;

pub use program::{solve_ip, solve_lp, IpOptions, Program, ProgramKind, Solution};
pub use rational::{format_rational, parse_rational, Rational};
pub use simplex::{LinearProgram, LpStatus, Relation, Sense};
pub use vertices::{is_integral, vertex_enumerate, vertex_enumerate_capped};
