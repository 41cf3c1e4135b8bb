//! The poset `Γ_{p,e}(G)` of pairs `(H, φ)` with `|H| ≥ p^{e+1}` and
//! `φ ∈ Irr(H)`, its comparability graph and connected components.

mod central;
mod witness;

pub use central::{abelian_component_count, central_poset_map};
pub use witness::{
    graph_path, validate_chain, witness_between, witness_theorem3, witness_theorem4, Direction,
    WitnessChain,
};

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::{CharError, CharacterAtlas};
use crate::group::{intersect_all, GroupError, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group of order {order} is not a p-group for p = {p}")]
    NotPGroup { order: usize, p: usize },
    #[error("p^(e+1) exceeds |G| = {order} for p = {p}, e = {e}")]
    InvalidExponent { p: usize, e: u32, order: usize },
    #[error("{0}")]
    NotInPoset(String),
    #[error("component {component} has no node over subgroup {subgroup}")]
    LemmaViolation { component: usize, subgroup: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no constituent found: {0}")]
    NoConstituent(String),
    #[error("choice exhausted: {0}")]
    ChoiceExhausted(String),
    #[error("restriction is not a multiple of a linear character: {0}")]
    NotMultipleOfLinear(String),
}

/// A pair `(H, φ)`: `subgroup` is a lattice id of the atlas, `character`
/// an index into its `Irr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosetNode {
    pub subgroup: usize,
    pub character: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Test every pair `K < H`.
    Full,
    /// Test only pairs with `K` maximal in `H`.
    MaximalOnly,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Strategy::Full),
            "maximal" | "maximal-only" => Ok(Strategy::MaximalOnly),
            _ => Err(format!("unknown strategy {s:?} (expected full or maximal)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    /// `a ≤ b`
    Less,
    /// `b ≤ a`
    Greater,
    Incomparable,
}

/// The node set of `Γ_{p,e}(G)`.
#[derive(Clone, Debug)]
pub struct Gamma {
    atlas: Arc<CharacterAtlas>,
    p: usize,
    e: u32,
    subgroups: Vec<usize>,
    nodes: Vec<PosetNode>,
    offsets: HashMap<usize, usize>,
}

/// `p^{e+1}`, or `None` on overflow.
pub fn threshold(p: usize, e: u32) -> Option<usize> {
    p.checked_pow(e + 1)
}

pub fn check_parameters(atlas: &CharacterAtlas, p: usize, e: u32) -> Result<usize, PosetError> {
    let g = atlas.group();
    if !g.is_p_group(p) || g.order() == 1 {
        return Err(PosetError::NotPGroup {
            order: g.order(),
            p,
        });
    }
    match threshold(p, e) {
        Some(m) if m <= g.order() => Ok(m),
        _ => Err(PosetError::InvalidExponent {
            p,
            e,
            order: g.order(),
        }),
    }
}

/// Collects `S_{p,e}(G)` and pairs each member with every element of its
/// `Irr`. Nodes are ordered by subgroup id, then character index.
pub fn build_nodes(atlas: &Arc<CharacterAtlas>, p: usize, e: u32) -> Result<Gamma, PosetError> {
    let min = check_parameters(atlas, p, e)?;
    let subgroups: Vec<usize> = (0..atlas.len())
        .filter(|&id| atlas.subgroup(id).order() >= min)
        .collect();
    let mut nodes = Vec::new();
    let mut offsets = HashMap::new();
    for &id in &subgroups {
        offsets.insert(id, nodes.len());
        nodes.extend((0..atlas.irr(id).len()).map(|character| PosetNode {
            subgroup: id,
            character,
        }));
    }
    Ok(Gamma {
        atlas: Arc::clone(atlas),
        p,
        e,
        subgroups,
        nodes,
        offsets,
    })
}

impl Gamma {
    pub fn atlas(&self) -> &Arc<CharacterAtlas> {
        &self.atlas
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `p^{e+1}`
    pub fn min_order(&self) -> usize {
        self.p.pow(self.e + 1)
    }

    /// Lattice ids of `S_{p,e}(G)`, ascending.
    pub fn subgroups(&self) -> &[usize] {
        &self.subgroups
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn contains_subgroup(&self, id: usize) -> bool {
        self.offsets.contains_key(&id)
    }

    pub fn node_index(&self, n: PosetNode) -> Option<usize> {
        let off = *self.offsets.get(&n.subgroup)?;
        (n.character < self.atlas.irr(n.subgroup).len()).then_some(off + n.character)
    }

    pub fn check_node(&self, n: PosetNode) -> Result<usize, PosetError> {
        self.node_index(n).ok_or_else(|| {
            PosetError::NotInPoset(format!("H{}:χ{} is not a node", n.subgroup, n.character))
        })
    }

    /// Compares two nodes: containment first, then `[φ_K, ψ] ≠ 0`.
    pub fn related(&self, a: PosetNode, b: PosetNode) -> Result<Relation, PosetError> {
        self.check_node(a)?;
        self.check_node(b)?;
        if a == b {
            return Ok(Relation::Equal);
        }
        let (sa, sb) = (
            self.atlas.subgroup(a.subgroup),
            self.atlas.subgroup(b.subgroup),
        );
        if sa.is_subgroup_of(sb) && self.below(a, b)? {
            return Ok(Relation::Less);
        }
        if sb.is_subgroup_of(sa) && self.below(b, a)? {
            return Ok(Relation::Greater);
        }
        Ok(Relation::Incomparable)
    }

    /// `[φ_K, ψ] ≠ 0` for `lo = (K, ψ)`, `hi = (H, φ)` with `K ≤ H`.
    fn below(&self, lo: PosetNode, hi: PosetNode) -> Result<bool, PosetError> {
        let theta = self
            .atlas
            .restriction(hi.subgroup, hi.character, lo.subgroup)?;
        let psi = &self.atlas.irr(lo.subgroup)[lo.character];
        Ok(crate::character::inner_product(&theta, psi)? != 0)
    }

    /// `I`: the intersection of all subgroups of order `p^{e+1}`.
    pub fn intersection(&self) -> Result<Subgroup, PosetError> {
        let subs: Vec<Subgroup> = self
            .atlas
            .subgroups_of_order(self.min_order())
            .into_iter()
            .map(|id| self.atlas.subgroup(id).clone())
            .collect();
        Ok(intersect_all(&subs)?)
    }
}

/// Comparable pairs of `Γ` found with a given strategy, as
/// `(lower, upper)` node indices in ascending order.
#[derive(Clone, Debug)]
pub struct PosetGraph {
    strategy: Strategy,
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

impl PosetGraph {
    pub fn build(gamma: &Gamma, strategy: Strategy) -> Result<Self, PosetError> {
        let atlas = &gamma.atlas;
        let pairs: Vec<(usize, usize)> = gamma
            .subgroups
            .iter()
            .flat_map(|&h| {
                let below = match strategy {
                    Strategy::Full => {
                        let mut v = atlas.contained_in(h);
                        v.pop();
                        v
                    }
                    Strategy::MaximalOnly => atlas.maximal_subgroups(h),
                };
                below
                    .into_iter()
                    .filter(|&k| gamma.contains_subgroup(k))
                    .map(move |k| (h, k))
            })
            .collect();
        let chunks: Vec<Vec<(usize, usize)>> = pairs
            .par_iter()
            .map(|&(h, k)| {
                let (oh, ok) = (gamma.offsets[&h], gamma.offsets[&k]);
                let mut out = Vec::new();
                for chi in 0..atlas.irr(h).len() {
                    for (psi, _) in atlas.restriction_constituents(h, chi, k)? {
                        out.push((ok + psi, oh + chi));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_, PosetError>>()?;
        let mut edges: Vec<(usize, usize)> = chunks.into_iter().flatten().collect();
        edges.sort_unstable();
        Ok(PosetGraph {
            strategy,
            node_count: gamma.nodes.len(),
            edges,
        })
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn partition(&self) -> ComponentPartition {
        let mut uf = UnionFind::<usize>::new(self.node_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut label: HashMap<usize, usize> = HashMap::new();
        let node_to_component: Vec<usize> = (0..self.node_count)
            .map(|v| {
                let next = label.len();
                *label.entry(uf.find(v)).or_insert(next)
            })
            .collect();
        ComponentPartition {
            count: label.len(),
            node_to_component,
        }
    }
}

/// Components labelled `0..count` in order of their first node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub node_to_component: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    pub fn component_of(&self, node: usize) -> usize {
        self.node_to_component[node]
    }
}

/// Builds the graph with `strategy` and returns its components.
pub fn components(gamma: &Gamma, strategy: Strategy) -> Result<ComponentPartition, PosetError> {
    Ok(PosetGraph::build(gamma, strategy)?.partition())
}

/// For each component, the first node `(H, φ)` lying in it.
pub fn component_representatives(
    gamma: &Gamma,
    partition: &ComponentPartition,
    h: usize,
) -> Result<Vec<PosetNode>, PosetError> {
    if !gamma.contains_subgroup(h) {
        return Err(PosetError::NotInPoset(format!(
            "subgroup {h} is not in S_(p,e)(G)"
        )));
    }
    let mut reps: Vec<Option<PosetNode>> = vec![None; partition.count];
    let off = gamma.offsets[&h];
    for character in 0..gamma.atlas.irr(h).len() {
        let c = partition.component_of(off + character);
        reps[c].get_or_insert(PosetNode {
            subgroup: h,
            character,
        });
    }
    reps.into_iter()
        .enumerate()
        .map(|(component, r)| {
            r.ok_or(PosetError::LemmaViolation {
                component,
                subgroup: h,
            })
        })
        .collect()
}
