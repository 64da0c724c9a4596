//! Rainbow (near-)perfect matchings in complete graphs colored by circular
//! distance, and the round-robin schedules they generate.
//!
//! `K•_n` is the complete graph on `0..n` where edge `{i, j}` has color
//! `min(|i - j|, n - |i - j|)`. An RPM picks one edge of every color with no
//! shared vertices. The crate builds RPMs in closed form ([`kirkman`],
//! [`t_matching`], [`ars`]), generates many inequivalent ones for odd `n`
//! ([`family`]), canonicalizes them under rotation and reversal
//! ([`normalize`]), enumerates them exhaustively for small `n`
//! ([`enumerate_rpms`], [`census`]) and turns them into tournament schedules
//! ([`schedule_from_rpm`]).

pub mod canon;
pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod scheduler;

pub use canon::{is_normalized, normalize, same_class};
pub use constructions::{ars, cuttable_kirkman_rotations, kirkman, t_matching};
pub use error::{Error, Result};
pub use family::{f_op, family, g_op, xi3_embed, RpmFamily};
pub use graph::{color_index, Color, Edge, Matching, RpmDefect, Vertex};
pub use oracle::{
    census, census_with, enumerate_rpms, enumerate_with, orbit, verify_property9, EnumerateOptions,
    EnumerationReport,
};
pub use scheduler::{
    schedule_from_rpm, unmatched_vertex, validate_schedule, Schedule, Variant, Violation,
};
