use std::collections::HashSet;
use std::sync::Arc;

use super::{induce, inner_product, linear_characters, CharError, ClassFunction};
use crate::cyclotomic::{Conductor, CycInt};
use crate::group::{all_subgroups, conjugacy_classes, ConjClasses, Subgroup};
use crate::Limits;

/// `Irr(H)` by the monomial method, enumerating the subgroups of `H` itself.
///
/// Only valid when `H` is an M-group (every p-group is); otherwise the
/// completeness check fails with [`CharError::IncompleteIrr`].
pub fn irr(h: &Arc<ConjClasses>, cond: Conductor) -> Result<Vec<ClassFunction>, CharError> {
    let owner = h.owner();
    let lin_h = linear_characters(h, cond)?;
    if lin_h.len() == owner.order() {
        return finish(h, lin_h);
    }
    let local = Arc::new(owner.to_group_table("H"));
    let limits = Limits {
        order_cap: usize::MAX,
        ..Limits::default()
    };
    let ambient = owner.group();
    let mut lattice: Vec<Arc<ConjClasses>> = Vec::new();
    for s in all_subgroups(&local, &limits)? {
        let elems: Vec<usize> = s.elems().iter().map(|&i| owner.elems()[i]).collect();
        let sub = Subgroup::from_elems(ambient, &elems)?;
        lattice.push(Arc::new(conjugacy_classes(&sub)));
    }
    let candidates: Vec<(Arc<ConjClasses>, Vec<ClassFunction>)> = lattice
        .into_iter()
        .filter(|k| useful_source(k.owner(), owner))
        .map(|k| {
            let lin = linear_characters(&k, cond)?;
            Ok((k, lin))
        })
        .collect::<Result<_, CharError>>()?;
    irr_from_linear(h, lin_h, candidates.iter().map(|(k, l)| (k, l.as_slice())))
}

/// Whether `K` can be the source of a monomial character of `H` of degree
/// above one: `K < H` with `[H:K]² < |H|`.
pub(crate) fn useful_source(k: &Subgroup, h: &Subgroup) -> bool {
    let index = h.order() / k.order();
    index > 1 && index * index < h.order() && k.is_subgroup_of(h)
}

/// Completes the linear characters of `H` to `Irr(H)` by inducing linear
/// characters from the candidate subgroups, largest first, stopping as soon
/// as the degrees account for `|H|`.
pub(crate) fn irr_from_linear<'a, I>(
    h: &Arc<ConjClasses>,
    lin_h: Vec<ClassFunction>,
    candidates: I,
) -> Result<Vec<ClassFunction>, CharError>
where
    I: IntoIterator<Item = (&'a Arc<ConjClasses>, &'a [ClassFunction])>,
{
    let order = h.owner().order() as i64;
    let mut sum_sq: i64 = lin_h.len() as i64;
    let mut found = lin_h;
    let mut seen: HashSet<Vec<CycInt>> = found.iter().map(|c| c.values().to_vec()).collect();

    let mut candidates: Vec<_> = candidates.into_iter().collect();
    candidates.sort_by_key(|(k, _)| std::cmp::Reverse(k.owner().order()));
    'outer: for (_, lin_k) in candidates {
        for lambda in lin_k {
            if sum_sq == order {
                break 'outer;
            }
            let theta = induce(lambda, h)?;
            if seen.contains(theta.values()) || inner_product(&theta, &theta)? != 1 {
                continue;
            }
            sum_sq += theta.degree() * theta.degree();
            seen.insert(theta.values().to_vec());
            found.push(theta);
        }
    }
    finish(h, found)
}

fn finish(
    h: &Arc<ConjClasses>,
    mut found: Vec<ClassFunction>,
) -> Result<Vec<ClassFunction>, CharError> {
    let sum_sq: i64 = found.iter().map(|c| c.degree() * c.degree()).sum();
    let order = h.owner().order();
    if sum_sq != order as i64 || found.len() != h.len() {
        return Err(CharError::IncompleteIrr {
            order,
            found: found.len(),
            sum_sq,
            classes: h.len(),
        });
    }
    found.sort_by(ClassFunction::canonical_cmp);
    Ok(found)
}
