use thiserror::Error;

/// Errors raised by the library. Hyperplane indices are 1-based.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("hyperplane {index} has length {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("hyperplane {index} has an all-zero normal")]
    ZeroNormal { index: usize },

    #[error("hyperplanes {first} and {second} are the same hyperplane (proportional normals)")]
    RepeatedHyperplane { first: usize, second: usize },

    #[error("arrangement has {hyperplanes} hyperplanes, above the enumeration cap of {cap}")]
    CapExceeded { hyperplanes: usize, cap: usize },

    #[error("{0} is not a face of the arrangement")]
    NotAFace(String),

    #[error("{0} is not a chamber of the arrangement")]
    NotAChamber(String),

    #[error("operation needs rational normals; the arrangement is combinatorial only")]
    CombinatorialOnly,

    #[error("arrangement is not essential")]
    NotEssential,

    #[error("expected an arrangement of rank 2, found rank {0}")]
    RankNotTwo(usize),

    #[error("reflection in hyperplane {hyperplane} is not a symmetry: image of hyperplane {moved} has normal [{image}], not in the arrangement")]
    NotASymmetry {
        hyperplane: usize,
        moved: usize,
        image: String,
    },

    #[error("group not finite within cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("group does not act transitively on chambers")]
    NotTransitive,

    #[error("group action does not preserve the Salvetti cells")]
    ActionNotClosed,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("chain complex is not a complex: boundary of boundary is nonzero in degree {degree}")]
    NotAComplex { degree: usize },

    #[error("dimension function does not increase along the order ({lower} < {upper})")]
    NonMonotoneDimension { lower: usize, upper: usize },

    #[error("relation is not a poset: {0}")]
    NotAPoset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
