use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("partition {partition:?} has more than {bound} parts")]
    TooManyParts { partition: Vec<usize>, bound: usize },

    #[error("the empty partition has no first row")]
    EmptyPartition,

    #[error("parts sum to {actual}, expected {expected}")]
    SumMismatch { expected: usize, actual: usize },

    #[error("bipartite partition contains a [0,0] part")]
    ZeroPart,

    #[error("unbalanced bipartite partition: top sum {top}, bottom sum {bottom}")]
    Unbalanced { top: usize, bottom: usize },

    #[error("invalid set partition of {points} points: {reason}")]
    InvalidSetPartition { points: usize, reason: String },

    #[error("diagram sizes differ: k = {left} vs k = {right}")]
    DiagramMismatch { left: usize, right: usize },

    #[error("k = {k} exceeds the symmetrizer bound {bound}")]
    SymmetrizerBound { k: usize, bound: usize },

    #[error("{label:?} is not in {poset}")]
    NotInPoset { label: Vec<usize>, poset: String },

    #[error("b({partition:?}) = {b} exceeds k = {k}")]
    NotSpherical { partition: Vec<usize>, b: usize, k: usize },

    #[error("t = 0 is out of scope: quasi-heredity is not established there")]
    ZeroParameter,

    #[error("parameter n = {n} is outside the non-semisimple range 1..={max}")]
    SemisimpleParameter { n: i64, max: i64 },

    #[error("chain index {index} out of range 1..={len}")]
    ChainIndex { index: usize, len: usize },

    #[error("sequence {0:?} is not weakly increasing")]
    NotWeaklyIncreasing(Vec<usize>),

    #[error("symbol {symbol} outside 1..={n}")]
    SymbolOutOfRange { symbol: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
