//! Finite groups as explicit multiplication tables.
//!
//! Everything here works on element indices of one ambient [`GroupTable`];
//! a [`Subgroup`] is a closed subset of those indices sharing the table
//! through an `Arc`.

mod abelian;
mod builtin;
mod classes;
mod cosets;
mod elemset;
mod file;
mod lattice;
mod subgroup;
mod table;

pub use abelian::{abelian_decomposition, AbelianDecomp};
pub use builtin::{builtin, catalog, family_catalog, FamilyInfo, GroupSpec, Sign};
pub use classes::{conjugacy_classes, ConjClasses};
pub use cosets::double_cosets;
pub use elemset::ElemSet;
pub use file::{load_group_file, parse_group_json, GroupFile};
pub use lattice::{all_subgroups, subgroups_of_order};
pub use subgroup::{center, derived_subgroup, intersect_all, quotient, Subgroup};
pub use table::{is_power_of, prime_of_power, GroupTable};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {generator} is not a permutation: {reason}")]
    InvalidPermutation { generator: usize, reason: String },
    #[error("permutation closure exceeds {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("invalid group descriptor: {0}")]
    InvalidSpec(String),
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("subgroup lattice exceeds {cap} subgroups")]
    LatticeTooLarge { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("empty subgroup list")]
    EmptyInput,
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("{m} does not divide the group order {order}")]
    NotADivisor { m: usize, order: usize },
    #[error("group file: {0}")]
    InvalidGroupFile(String),
}
