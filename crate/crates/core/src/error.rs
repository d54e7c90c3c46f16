use thiserror::Error;

use crate::coeff::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not invertible in {ring}")]
    NotInvertible { value: String, ring: RingSpec },

    #[error("parameter {name} = {value} is not invertible in {ring}")]
    ParameterNotInvertible {
        name: &'static str,
        value: String,
        ring: RingSpec,
    },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("cannot parse {input:?} as an element of {ring}")]
    ParseScalar { input: String, ring: RingSpec },

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("boundary maps do not compose to zero")]
    CompositionNotZero,

    #[error("homology over {0} is not supported (use Z, Q or Z/p with p prime)")]
    UnsupportedRing(RingSpec),

    #[error("diagram sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("size {size} exceeds the configured cap {cap}")]
    SizeTooLarge { size: usize, cap: usize },

    #[error("diagram is not a member of {family}: {reason}")]
    FamilyViolation { family: String, reason: String },

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("algebra specs differ")]
    SpecMismatch,

    #[error("parameters do not match family {family}: {reason}")]
    ParamMismatch { family: String, reason: String },

    #[error("invalid ideal level {level} (allowed {min}..={max})")]
    InvalidIdealLevel { level: i64, min: i64, max: i64 },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("link state has no defects")]
    NoDefects,

    #[error("tensor dimension {dim} in degree {degree} exceeds the budget {budget}")]
    BudgetExceeded {
        degree: usize,
        dim: usize,
        budget: usize,
    },

    #[error("augmentation is not an algebra map: {0}")]
    NotAnAlgebraMap(String),

    #[error("algebra has no basis element usable as unit pivot")]
    NoUnitPivot,

    #[error("algebra is not {group}-centred: first disagreement in {which} degree {degree}")]
    NotGCentred {
        group: String,
        which: &'static str,
        degree: usize,
    },

    #[error("integer does not fit in 64 bits: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
