use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{ElemSet, GroupError, GroupTable};

/// A subgroup of an ambient [`GroupTable`], stored as its sorted element
/// indices together with a membership bitset.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<GroupTable>,
    elems: Vec<usize>,
    set: ElemSet,
}

impl Subgroup {
    pub fn whole(group: &Arc<GroupTable>) -> Self {
        let n = group.order();
        Self::from_set_unchecked(group, ElemSet::from_iter(n, 0..n))
    }

    pub fn trivial(group: &Arc<GroupTable>) -> Self {
        Self::from_set_unchecked(group, ElemSet::from_iter(group.order(), [0]))
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &Arc<GroupTable>, gens: &[usize]) -> Self {
        Self::from_set_unchecked(group, group.closure(gens))
    }

    /// Checks closure and builds a subgroup from an arbitrary element list.
    pub fn from_elems(group: &Arc<GroupTable>, elems: &[usize]) -> Result<Self, GroupError> {
        let n = group.order();
        if let Some(&bad) = elems.iter().find(|&&g| g >= n) {
            return Err(GroupError::NotASubgroup(format!(
                "element {bad} out of range"
            )));
        }
        let set = ElemSet::from_iter(n, elems.iter().copied());
        if !set.contains(0) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for a in set.iter() {
            if !set.contains(group.inv(a)) {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for b in set.iter() {
                if !set.contains(group.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!("{a}·{b} missing")));
                }
            }
        }
        Ok(Self::from_set_unchecked(group, set))
    }

    pub(crate) fn from_set_unchecked(group: &Arc<GroupTable>, set: ElemSet) -> Self {
        let elems = set.to_vec();
        assert_eq!(
            group.order() % elems.len(),
            0,
            "Lagrange violated: |H| = {} does not divide {}",
            elems.len(),
            group.order()
        );
        Subgroup {
            group: Arc::clone(group),
            elems,
            set,
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.set.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order() / self.order()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Self::from_set_unchecked(&self.group, self.set.intersection(&other.set))
    }

    /// `x H x⁻¹`
    pub fn conjugate_by(&self, x: usize) -> Subgroup {
        let set = ElemSet::from_iter(
            self.group.order(),
            self.elems.iter().map(|&h| self.group.conj(x, h)),
        );
        Self::from_set_unchecked(&self.group, set)
    }

    /// Normal in `over` (which must contain `self`).
    pub fn is_normal_in(&self, over: &Subgroup) -> bool {
        self.is_subgroup_of(over)
            && over.elems.iter().all(|&x| {
                self.elems
                    .iter()
                    .all(|&h| self.set.contains(self.group.conj(x, h)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.elems
            .iter()
            .all(|&a| self.elems.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Relabels the subgroup as a standalone group on `0..|H|` (in ascending
    /// order of ambient indices, so the identity stays at 0).
    pub fn to_group_table(&self, name: impl Into<String>) -> GroupTable {
        let m = self.order();
        let pos = |g: usize| self.elems.binary_search(&g).expect("closed subgroup");
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.elems {
            for &b in &self.elems {
                table.push(pos(self.group.mul(a, b)));
            }
        }
        GroupTable::from_trusted(table, m, name.into())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.elems)
    }
}

/// `Z(H)`
pub fn center(h: &Subgroup) -> Subgroup {
    let g = h.group();
    let set = ElemSet::from_iter(
        g.order(),
        h.elems()
            .iter()
            .copied()
            .filter(|&z| h.elems().iter().all(|&x| g.mul(z, x) == g.mul(x, z))),
    );
    Subgroup::from_set_unchecked(g, set)
}

/// `H′`, generated by all commutators `a⁻¹b⁻¹ab`.
pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let g = h.group();
    let mut comms = ElemSet::from_iter(g.order(), [0]);
    for &a in h.elems() {
        for &b in h.elems() {
            comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
        }
    }
    let gens = comms.to_vec();
    Subgroup::from_set_unchecked(g, g.closure(&gens))
}

pub fn intersect_all(subs: &[Subgroup]) -> Result<Subgroup, GroupError> {
    let (first, rest) = subs.split_first().ok_or(GroupError::EmptyInput)?;
    Ok(rest.iter().fold(first.clone(), |acc, s| acc.intersect(s)))
}

/// `H/N` as a coset table, with the projection from ambient element indices
/// (members of `H`) to coset indices. Coset 0 is `N`.
pub fn quotient(
    h: &Subgroup,
    n: &Subgroup,
) -> Result<(GroupTable, Vec<Option<usize>>), GroupError> {
    if !n.is_normal_in(h) {
        return Err(GroupError::NotNormal);
    }
    let g = h.group();
    let mut proj: Vec<Option<usize>> = vec![None; g.order()];
    let mut reps = Vec::new();
    for &x in h.elems() {
        if proj[x].is_some() {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &y in n.elems() {
            proj[g.mul(x, y)] = Some(c);
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(proj[g.mul(a, b)].expect("closed"));
        }
    }
    let name = format!("{}/{}", h.order(), n.order());
    Ok((GroupTable::from_trusted(table, m, name), proj))
}
