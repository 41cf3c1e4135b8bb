use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::{ElemSet, GroupError, GroupTable, Subgroup};
use crate::Limits;

/// Every subgroup of `g` exactly once, sorted by `(order, elements)`.
///
/// Built bottom-up: the cyclic subgroups first, then closures of a known
/// subgroup with one extra cyclic generator until nothing new appears.
pub fn all_subgroups(g: &Arc<GroupTable>, limits: &Limits) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > limits.order_cap {
        return Err(GroupError::OrderCapExceeded {
            order: g.order(),
            cap: limits.order_cap,
        });
    }
    let n = g.order();

    // one generator (the smallest) per cyclic subgroup
    let mut cyclic: BTreeMap<ElemSet, usize> = BTreeMap::new();
    for x in 1..n {
        cyclic.entry(g.cyclic(x)).or_insert(x);
    }
    let cyclic_gens: Vec<usize> = {
        let mut v: Vec<usize> = cyclic.values().copied().collect();
        v.sort_unstable();
        v
    };

    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut found: Vec<(ElemSet, Vec<usize>)> = Vec::new();
    let trivial = ElemSet::from_iter(n, [0]);
    seen.insert(trivial.clone());
    found.push((trivial, Vec::new()));
    for (set, &c) in &cyclic {
        if seen.insert(set.clone()) {
            found.push((set.clone(), vec![c]));
        }
    }

    let mut head = 0;
    while head < found.len() {
        for &c in &cyclic_gens {
            let (set, gens) = &found[head];
            if set.contains(c) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(c);
            let next = g.closure_from(set, &next_gens);
            if seen.insert(next.clone()) {
                if found.len() >= limits.lattice_cap {
                    return Err(GroupError::LatticeTooLarge {
                        cap: limits.lattice_cap,
                    });
                }
                found.push((next, next_gens));
            }
        }
        head += 1;
    }

    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|(set, _)| Subgroup::from_set_unchecked(g, set))
        .collect();
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elems().cmp(b.elems()))
    });
    Ok(subs)
}

pub fn subgroups_of_order(
    g: &Arc<GroupTable>,
    m: usize,
    limits: &Limits,
) -> Result<Vec<Subgroup>, GroupError> {
    if m == 0 || !g.order().is_multiple_of(m) {
        return Err(GroupError::NotADivisor {
            m,
            order: g.order(),
        });
    }
    Ok(all_subgroups(g, limits)?
        .into_iter()
        .filter(|s| s.order() == m)
        .collect())
}
