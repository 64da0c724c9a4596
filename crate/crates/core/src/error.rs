use thiserror::Error;

use crate::graph::RpmDefect;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{vertex},{vertex}}} is a loop")]
    Loop { vertex: usize },

    #[error("vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} is covered by more than one edge")]
    DuplicateVertex { vertex: usize },

    #[error("not a rainbow (near-)perfect matching on n = {n}: {defect}")]
    NotRpm { n: usize, defect: RpmDefect },

    #[error("matching on n = {n} is not cuttable: edge {{{u},{v}}} spans more than n/2")]
    NotCuttable { n: usize, u: usize, v: usize },

    #[error("no rainbow perfect matching exists for n = {n} (n mod 8 is 4 or 6)")]
    NoRpmExists { n: usize },

    #[error("{what} needs {expected} n, got n = {n}")]
    Parity {
        what: &'static str,
        expected: &'static str,
        n: usize,
    },

    #[error("matchings live on different graphs (n = {left} and n = {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("expected a matching on n = {expected}, got one on n = {found}")]
    WrongSubgraph { expected: usize, found: usize },

    #[error("a near-perfect matching leaves exactly one vertex uncovered, found {uncovered}")]
    NotNearPerfect { uncovered: usize },

    #[error("n = {n} is above the enumeration bound {bound}; force the run to override")]
    TooLarge { n: usize, bound: usize },
}
