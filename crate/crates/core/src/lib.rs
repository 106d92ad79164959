//! Identifying codes in graphs: verification, exact and approximate
//! minimization, VC-dimension tools, extremal families and the reductions
//! from set cover with pairwise intersections of size at most one.

pub mod bitset;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
mod hitting;
pub mod interval;
pub mod io;
pub mod lp;
pub mod reductions;
pub mod vcdim;

pub use code::{
    exact_min_discriminating_code, exact_min_id_code, exact_min_set_cover, greedy_id_code,
    verify_discriminating_code, verify_identifying_code, Code, CodeKind, Verdict,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use interval::{approx_id_code_interval, Interval, IntervalRep};
pub use lp::{solve_lp, LinearProgram, LpSolution, LpStatus, Rational};
pub use reductions::SetCover1Instance;
pub use vcdim::{sauer_lower_bound, vc_dimension, ShatterCertificate};
