use std::sync::Arc;

use super::{build_nodes, components, Gamma, PosetError, PosetNode, Strategy};
use crate::character::{CharacterAtlas, ClassFunction};
use crate::group::GroupTable;
use crate::Limits;

/// The image of `(H, α)` under the map to `Γ(A)` for a central subgroup
/// `A ≤ H`: the index in `Irr(A)` of the linear `β` with `α_A = α(1)·β`.
pub fn central_poset_map(gamma: &Gamma, node: PosetNode, a: usize) -> Result<usize, PosetError> {
    gamma.check_node(node)?;
    let atlas = gamma.atlas();
    if !atlas
        .subgroup(a)
        .is_subgroup_of(atlas.subgroup(node.subgroup))
    {
        return Err(PosetError::PreconditionFailed(format!(
            "H{a} is not contained in H{}",
            node.subgroup
        )));
    }
    let theta = atlas.restriction(node.subgroup, node.character, a)?;
    let deg = theta.degree();
    let bad = || {
        PosetError::NotMultipleOfLinear(format!("H{}:χ{} on H{a}", node.subgroup, node.character))
    };
    let values = theta
        .values()
        .iter()
        .map(|v| v.exact_div_int(deg))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    let beta = ClassFunction::new(Arc::clone(atlas.classes(a)), values).map_err(|_| bad())?;
    match atlas.irr_index(a, &beta) {
        Some(i) if atlas.irr(a)[i].degree() == 1 => Ok(i),
        _ => Err(bad()),
    }
}

/// Number of components of `Γ_{p,f}(A)` for `A` abelian of order `p^{f+1}`.
pub fn abelian_component_count(a: &GroupTable, f: u32) -> Result<usize, PosetError> {
    if !a.is_abelian() {
        return Err(PosetError::Group(crate::group::GroupError::NotAbelian));
    }
    let p = a.prime().ok_or(PosetError::NotPGroup {
        order: a.order(),
        p: 0,
    })?;
    if p.checked_pow(f + 1) != Some(a.order()) {
        return Err(PosetError::InvalidExponent {
            p,
            e: f,
            order: a.order(),
        });
    }
    let limits = Limits {
        order_cap: a.order(),
        ..Limits::default()
    };
    let atlas = Arc::new(CharacterAtlas::build(Arc::new(a.clone()), &limits)?);
    let gamma = build_nodes(&atlas, p, f)?;
    Ok(components(&gamma, Strategy::MaximalOnly)?.count)
}
