//! Exact computation of the character-pair poset of a finite p-group.
//!
//! For a p-group `G` and `e ≥ 0` the poset consists of pairs `(H, φ)` with
//! `H ≤ G`, `|H| ≥ p^{e+1}` and `φ ∈ Irr(H)`, ordered by
//! `(K, ψ) ≤ (H, φ)` iff `K ≤ H` and `[φ_K, ψ] ≠ 0`. This crate builds groups
//! from tables or built-in families, computes every irreducible character of
//! every subgroup in exact cyclotomic arithmetic, counts the connected
//! components of the poset, produces explicit connecting chains, and checks
//! the bound `|I ∩ Z(G)| ≤ #components ≤ |Irr(I)|` where `I` is the
//! intersection of all subgroups of order `p^{e+1}`.

pub mod character;
pub mod cyclotomic;
pub mod export;
pub mod group;
pub mod poset;
pub mod verify;

mod config;
mod error;

pub use config::Limits;
pub use error::Error;
