use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("group order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("table entry ({i}, {j}) = {value} is outside 0..{order}")]
    NotClosed {
        i: usize,
        j: usize,
        value: usize,
        order: usize,
    },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),

    #[error("associativity fails at ({i}, {j}, {k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("mask {mask:#x} is not a subgroup: {reason}")]
    NotASubgroup { mask: u64, reason: String },

    #[error("subgroup index {index} out of range for lattice of {len} subgroups")]
    SubgroupOutOfRange { index: usize, len: usize },

    #[error("subgroup enumeration exceeded the cap of {0} subgroups")]
    SubgroupCapExceeded(usize),

    #[error("member set is not closed: {op} of H{x} and H{y} is H{result}, not a member")]
    SublatticeNotClosed {
        op: &'static str,
        x: usize,
        y: usize,
        result: usize,
    },

    #[error("permutation is not a bijection of 0..{0} fixing 0")]
    BadRelabeling(usize),

    #[error("no subgroup of order {order} found for prime {prime}")]
    MissingSylow { prime: u64, order: usize },

    #[error("incomplete catalog: built-in classification covers orders up to 15, requested {0}")]
    IncompleteCatalog(usize),

    #[error("unsupported quaternion exponent {0}: expected 3..=6")]
    QuaternionOutOfRange(u32),

    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
