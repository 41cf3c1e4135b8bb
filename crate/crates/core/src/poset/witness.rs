use std::collections::VecDeque;

use serde::Serialize;

use super::{Gamma, PosetError, PosetGraph, PosetNode, Relation};
use crate::character::{induce, inner_product};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// the next node lies above
    Up,
    /// the next node lies below
    Down,
}

/// A path through `Γ` in which consecutive nodes are comparable in the
/// stated direction. Consecutive duplicates are merged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessChain {
    pub nodes: Vec<PosetNode>,
    pub directions: Vec<Direction>,
}

impl WitnessChain {
    pub fn single(n: PosetNode) -> Self {
        WitnessChain {
            nodes: vec![n],
            directions: Vec::new(),
        }
    }

    fn from_links(nodes: Vec<PosetNode>, directions: Vec<Direction>) -> Self {
        let mut out = WitnessChain::single(nodes[0]);
        for (n, d) in nodes.into_iter().skip(1).zip(directions) {
            out.push(n, d);
        }
        out
    }

    fn push(&mut self, n: PosetNode, d: Direction) {
        if self.last() != n {
            self.nodes.push(n);
            self.directions.push(d);
        }
    }

    /// Concatenates `other`, which must start where `self` ends.
    fn append(mut self, other: WitnessChain) -> Self {
        assert_eq!(self.last(), other.first(), "chains must share an endpoint");
        for (n, d) in other.nodes.into_iter().skip(1).zip(other.directions) {
            self.push(n, d);
        }
        self
    }

    pub fn first(&self) -> PosetNode {
        self.nodes[0]
    }

    pub fn last(&self) -> PosetNode {
        *self.nodes.last().expect("chains are nonempty")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// `[α_M, β_M]` for `α ∈ Irr(h)`, `β ∈ Irr(k)` and `M ≤ h ∩ k`.
fn meet_product(gamma: &Gamma, a: PosetNode, b: PosetNode, m: usize) -> Result<i64, PosetError> {
    let atlas = gamma.atlas();
    let ra = atlas.restriction(a.subgroup, a.character, m)?;
    let rb = atlas.restriction(b.subgroup, b.character, m)?;
    Ok(inner_product(&ra, &rb)?)
}

fn describe(n: PosetNode) -> String {
    format!("H{}:χ{}", n.subgroup, n.character)
}

/// `(H, α) ≤ (G, ω) ≥ (K, β)` for the first constituent `ω` of `α^G` with
/// `[ω_K, β] ≠ 0`.
pub fn witness_theorem3(
    gamma: &Gamma,
    a: PosetNode,
    b: PosetNode,
) -> Result<WitnessChain, PosetError> {
    gamma.check_node(a)?;
    gamma.check_node(b)?;
    let atlas = gamma.atlas();
    let m = atlas.meet(a.subgroup, b.subgroup);
    if meet_product(gamma, a, b, m)? == 0 {
        return Err(PosetError::PreconditionFailed(format!(
            "{} and {} share no constituent on H{m}",
            describe(a),
            describe(b)
        )));
    }
    let g = atlas.whole_id();
    let alpha = &atlas.irr(a.subgroup)[a.character];
    let induced = induce(alpha, atlas.classes(g))?;
    for (omega, _) in atlas.constituents_of(g, &induced)? {
        let restricted = atlas.restriction(g, omega, b.subgroup)?;
        if inner_product(&restricted, &atlas.irr(b.subgroup)[b.character])? != 0 {
            let top = PosetNode {
                subgroup: g,
                character: omega,
            };
            return Ok(WitnessChain::from_links(
                vec![a, top, b],
                vec![Direction::Up, Direction::Down],
            ));
        }
    }
    Err(PosetError::NoConstituent(format!(
        "no constituent of the induced character of {} lies over {}",
        describe(a),
        describe(b)
    )))
}

/// Chain from `(L_0, α_0)` to `(L_{n+1}, α_{n+1})` following the induction
/// on `n`, given `[(α_0)_{K_{n+1}}, (α_{n+1})_{K_{n+1}}] ≠ 0` with
/// `K_{n+1} = L_0 ∩ … ∩ L_{n+1}`. Two subgroups reduce to
/// [`witness_theorem3`].
pub fn witness_theorem4(
    gamma: &Gamma,
    ls: &[usize],
    alpha0: usize,
    alpha_last: usize,
) -> Result<WitnessChain, PosetError> {
    if ls.len() < 2 {
        return Err(PosetError::PreconditionFailed(
            "need at least two subgroups".into(),
        ));
    }
    for &l in ls {
        if !gamma.contains_subgroup(l) {
            return Err(PosetError::NotInPoset(format!("H{l} is not in S_(p,e)(G)")));
        }
    }
    let a = PosetNode {
        subgroup: ls[0],
        character: alpha0,
    };
    let b = PosetNode {
        subgroup: *ls.last().expect("nonempty"),
        character: alpha_last,
    };
    gamma.check_node(a)?;
    gamma.check_node(b)?;
    let k_all = meet_all(gamma, ls);
    if meet_product(gamma, a, b, k_all)? == 0 {
        return Err(PosetError::PreconditionFailed(format!(
            "{} and {} share no constituent on K = H{k_all}",
            describe(a),
            describe(b)
        )));
    }
    theorem4_step(gamma, ls, alpha0, alpha_last)
}

fn meet_all(gamma: &Gamma, ls: &[usize]) -> usize {
    ls[1..]
        .iter()
        .fold(ls[0], |acc, &l| gamma.atlas().meet(acc, l))
}

fn theorem4_step(
    gamma: &Gamma,
    ls: &[usize],
    alpha0: usize,
    alpha_last: usize,
) -> Result<WitnessChain, PosetError> {
    let atlas = gamma.atlas();
    let n = ls.len() - 2;
    let first = PosetNode {
        subgroup: ls[0],
        character: alpha0,
    };
    let last = PosetNode {
        subgroup: ls[n + 1],
        character: alpha_last,
    };
    if n == 0 {
        return witness_theorem3(gamma, first, last);
    }
    let k_next = meet_all(gamma, ls);
    let k_n = meet_all(gamma, &ls[..=n]);

    // γ: a common constituent of both endpoints on K_{n+1}
    let over_first = atlas.restriction_constituents(ls[0], alpha0, k_next)?;
    let over_last = atlas.restriction_constituents(ls[n + 1], alpha_last, k_next)?;
    let gamma_char = over_first
        .iter()
        .map(|&(i, _)| i)
        .find(|i| over_last.iter().any(|&(j, _)| j == *i))
        .ok_or_else(|| {
            PosetError::ChoiceExhausted(format!("no common constituent on H{k_next}"))
        })?;

    // η ∈ Irr(L_n ∩ L_{n+1}) over γ and under α_{n+1}
    let m = atlas.meet(ls[n], ls[n + 1]);
    let mut eta = None;
    for (j, _) in atlas.restriction_constituents(ls[n + 1], alpha_last, m)? {
        if atlas
            .restriction_constituents(m, j, k_next)?
            .iter()
            .any(|&(i, _)| i == gamma_char)
        {
            eta = Some(j);
            break;
        }
    }
    let eta = eta.ok_or_else(|| {
        PosetError::ChoiceExhausted(format!("no η on H{m} between γ and the endpoint"))
    })?;

    // α_n: a constituent of η^{L_n} meeting α_0 on K_n
    let induced = induce(&atlas.irr(m)[eta], atlas.classes(ls[n]))?;
    let mut alpha_n = None;
    for (c, _) in atlas.constituents_of(ls[n], &induced)? {
        let cand = PosetNode {
            subgroup: ls[n],
            character: c,
        };
        if meet_product(gamma, first, cand, k_n)? != 0 {
            alpha_n = Some(c);
            break;
        }
    }
    let alpha_n = alpha_n.ok_or_else(|| {
        PosetError::ChoiceExhausted(format!("no constituent of η^L on H{} meets α_0", ls[n]))
    })?;

    let head = theorem4_step(gamma, &ls[..=n], alpha0, alpha_n)?;
    let tail = witness_theorem3(
        gamma,
        PosetNode {
            subgroup: ls[n],
            character: alpha_n,
        },
        last,
    )?;
    Ok(head.append(tail))
}

/// Chain between two nodes by the theorem route: pad `H, K` with subgroups of
/// order `p^{e+1}` until the running intersection reaches `I`, then apply
/// [`witness_theorem4`]. Equal endpoints give a one-node chain.
pub fn witness_between(
    gamma: &Gamma,
    a: PosetNode,
    b: PosetNode,
) -> Result<WitnessChain, PosetError> {
    gamma.check_node(a)?;
    gamma.check_node(b)?;
    if a == b {
        return Ok(WitnessChain::single(a));
    }
    let atlas = gamma.atlas();
    let target = atlas
        .id_of(&gamma.intersection()?)
        .expect("intersections of subgroups are subgroups");
    let mut cur = atlas.meet(a.subgroup, b.subgroup);
    let mut ls = vec![a.subgroup];
    for l in atlas.subgroups_of_order(gamma.min_order()) {
        if cur == target {
            break;
        }
        let next = atlas.meet(cur, l);
        if next != cur {
            ls.push(l);
            cur = next;
        }
    }
    ls.push(b.subgroup);
    witness_theorem4(gamma, &ls, a.character, b.character)
}

/// Shortest path between two nodes in the comparability graph, or `None`
/// when they lie in different components.
pub fn graph_path(
    gamma: &Gamma,
    graph: &PosetGraph,
    a: PosetNode,
    b: PosetNode,
) -> Result<Option<WitnessChain>, PosetError> {
    let (s, t) = (gamma.check_node(a)?, gamma.check_node(b)?);
    let n = gamma.nodes().len();
    let mut adj: Vec<Vec<(usize, Direction)>> = vec![Vec::new(); n];
    for &(lo, hi) in graph.edges() {
        adj[lo].push((hi, Direction::Up));
        adj[hi].push((lo, Direction::Down));
    }
    let mut prev: Vec<Option<(usize, Direction)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for &(w, d) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, d));
                queue.push_back(w);
            }
        }
    }
    if !seen[t] {
        return Ok(None);
    }
    let mut nodes = vec![gamma.nodes()[t]];
    let mut dirs = Vec::new();
    let mut v = t;
    while let Some((u, d)) = prev[v] {
        nodes.push(gamma.nodes()[u]);
        dirs.push(d);
        v = u;
    }
    nodes.reverse();
    dirs.reverse();
    Ok(Some(WitnessChain::from_links(nodes, dirs)))
}

/// Checks every link with [`Gamma::related`]; one flag per link.
pub fn validate_chain(gamma: &Gamma, chain: &WitnessChain) -> Result<Vec<bool>, PosetError> {
    chain
        .nodes
        .windows(2)
        .zip(&chain.directions)
        .map(|(w, d)| {
            let rel = gamma.related(w[0], w[1])?;
            Ok(matches!(
                (d, rel),
                (Direction::Up, Relation::Less) | (Direction::Down, Relation::Greater)
            ))
        })
        .collect()
}
