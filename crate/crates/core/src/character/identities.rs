use std::sync::Arc;

use super::{conjugate_character_onto, induce, inner_product, restrict, CharError, ClassFunction};
use crate::group::{conjugacy_classes, double_cosets, ConjClasses, Subgroup};

/// Both sides of the Mackey formula inside `G`, for `α` on `H` and `β` on
/// `K`:
///
/// `[(α^G)_K, β]` and `Σ_{x ∈ [H\G/K]} [((^xα)_{^xH ∩ K})^K, β]`.
pub fn mackey_check(
    g: &Subgroup,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<(i64, i64), CharError> {
    let h = alpha.owner();
    let k = beta.owner();
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(CharError::NotASubgroup("H and K must lie in G".into()));
    }
    let g_classes = Arc::new(conjugacy_classes(g));
    let lhs = inner_product(
        &restrict(&induce(alpha, &g_classes)?, beta.classes())?,
        beta,
    )?;

    let mut rhs = 0;
    for x in double_cosets(g, h, k) {
        let xh = h.conjugate_by(x);
        let xh_classes = Arc::new(conjugacy_classes(&xh));
        let conj = conjugate_character_onto(alpha, x, &xh_classes)?;
        let meet: Arc<ConjClasses> = Arc::new(conjugacy_classes(&xh.intersect(k)));
        let term = induce(&restrict(&conj, &meet)?, beta.classes())?;
        rhs += inner_product(&term, beta)?;
    }
    Ok((lhs, rhs))
}

/// Both sides of Frobenius reciprocity for `φ` on `H` and `χ` on `G ⊇ H`:
/// `[φ^G, χ]_G` and `[φ, χ_H]_H`.
pub fn frobenius_check(phi: &ClassFunction, chi: &ClassFunction) -> Result<(i64, i64), CharError> {
    let lhs = inner_product(&induce(phi, chi.classes())?, chi)?;
    let rhs = inner_product(phi, &restrict(chi, phi.classes())?)?;
    Ok((lhs, rhs))
}
