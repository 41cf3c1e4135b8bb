use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::irr::{irr_from_linear, useful_source};
use super::{inner_product, linear_characters, restrict, CharError, ClassFunction};
use crate::cyclotomic::{Conductor, CycInt};
use crate::group::{all_subgroups, conjugacy_classes, ConjClasses, ElemSet, GroupTable, Subgroup};
use crate::Limits;

/// Every subgroup of a group with its classes and `Irr`, computed once and
/// shared read-only afterwards. Subgroup ids are positions in the lattice,
/// sorted by order and then by element list, so id 0 is the trivial group and
/// the last id is the whole group.
pub struct CharacterAtlas {
    group: Arc<GroupTable>,
    cond: Conductor,
    classes: Vec<Arc<ConjClasses>>,
    index: HashMap<ElemSet, usize>,
    irr: Vec<Vec<ClassFunction>>,
    lookup: Vec<HashMap<Vec<CycInt>, usize>>,
}

impl CharacterAtlas {
    pub fn build(group: Arc<GroupTable>, limits: &Limits) -> Result<Self, CharError> {
        let cond = Conductor::new(group.exponent() as u32)?;
        let lattice = all_subgroups(&group, limits)?;
        let classes: Vec<Arc<ConjClasses>> = lattice
            .par_iter()
            .map(|s| Arc::new(conjugacy_classes(s)))
            .collect();
        let linear: Vec<Vec<ClassFunction>> = classes
            .par_iter()
            .map(|c| linear_characters(c, cond))
            .collect::<Result<_, _>>()?;
        let irr: Vec<Vec<ClassFunction>> = (0..classes.len())
            .into_par_iter()
            .map(|id| {
                let h = &classes[id];
                let lin = linear[id].clone();
                let owner = h.owner();
                let candidates = classes
                    .iter()
                    .zip(&linear)
                    .take(id)
                    .filter(|(k, _)| useful_source(k.owner(), owner))
                    .map(|(k, l)| (k, l.as_slice()));
                irr_from_linear(h, lin, candidates)
            })
            .collect::<Result<_, _>>()?;
        let lookup = irr
            .iter()
            .map(|chars| {
                chars
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.values().to_vec(), i))
                    .collect()
            })
            .collect();
        let index = lattice
            .iter()
            .enumerate()
            .map(|(i, s)| (s.set().clone(), i))
            .collect();
        Ok(CharacterAtlas {
            group,
            cond,
            classes,
            index,
            irr,
            lookup,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    /// Number of subgroups.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        self.classes[id].owner()
    }

    pub fn classes(&self, id: usize) -> &Arc<ConjClasses> {
        &self.classes[id]
    }

    pub fn irr(&self, id: usize) -> &[ClassFunction] {
        &self.irr[id]
    }

    pub fn id_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.set()).copied()
    }

    pub fn whole_id(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn subgroups_of_order(&self, m: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.subgroup(i).order() == m)
            .collect()
    }

    /// Ids of the subgroups of `id`, itself included.
    pub fn contained_in(&self, id: usize) -> Vec<usize> {
        let h = self.subgroup(id);
        (0..=id)
            .filter(|&k| self.subgroup(k).is_subgroup_of(h))
            .collect()
    }

    /// Ids of the maximal subgroups of `id`.
    pub fn maximal_subgroups(&self, id: usize) -> Vec<usize> {
        let h = self.subgroup(id);
        let below: Vec<usize> = (0..id)
            .filter(|&k| self.subgroup(k).order() < h.order() && self.subgroup(k).is_subgroup_of(h))
            .collect();
        if let Some(p) = self.group.prime() {
            // in a p-group the maximal subgroups are exactly those of index p
            return below
                .into_iter()
                .filter(|&k| self.subgroup(k).order() * p == h.order())
                .collect();
        }
        below
            .iter()
            .copied()
            .filter(|&k| {
                let sk = self.subgroup(k);
                !below.iter().any(|&l| {
                    let sl = self.subgroup(l);
                    sl.order() > sk.order() && sk.is_subgroup_of(sl)
                })
            })
            .collect()
    }

    /// Id of `a ∩ b`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let s = self.subgroup(a).intersect(self.subgroup(b));
        self.id_of(&s)
            .expect("lattice is closed under intersection")
    }

    /// Index in `Irr(id)` of an irreducible character given by its values.
    pub fn irr_index(&self, id: usize, chi: &ClassFunction) -> Option<usize> {
        debug_assert!(chi.owner() == self.subgroup(id));
        if Arc::ptr_eq(chi.classes(), &self.classes[id]) {
            self.lookup[id].get(chi.values()).copied()
        } else {
            let vals: Vec<CycInt> = self.classes[id]
                .reps()
                .iter()
                .map(|&r| chi.value_at(r).expect("same owner").clone())
                .collect();
            self.lookup[id].get(&vals).copied()
        }
    }

    /// `χ_K` with `χ` the `chi`-th irreducible of `h`, on the classes of `k`.
    pub fn restriction(&self, h: usize, chi: usize, k: usize) -> Result<ClassFunction, CharError> {
        restrict(&self.irr[h][chi], &self.classes[k])
    }

    /// Multiplicities of the irreducible constituents of `θ`, a character of
    /// the subgroup `k`, as `(index, multiplicity)` pairs in index order.
    pub fn constituents_of(
        &self,
        k: usize,
        theta: &ClassFunction,
    ) -> Result<Vec<(usize, i64)>, CharError> {
        if theta.degree() == 1 {
            if let Some(i) = self.irr_index(k, theta) {
                return Ok(vec![(i, 1)]);
            }
        }
        let mut out = Vec::new();
        let mut covered = 0;
        for (i, psi) in self.irr[k].iter().enumerate() {
            if covered == theta.degree() {
                break;
            }
            let m = inner_product(theta, psi)?;
            if m != 0 {
                covered += m * psi.degree();
                out.push((i, m));
            }
        }
        Ok(out)
    }

    /// Constituents of `(χ_h)_K` for `χ = Irr(h)[chi]`.
    pub fn restriction_constituents(
        &self,
        h: usize,
        chi: usize,
        k: usize,
    ) -> Result<Vec<(usize, i64)>, CharError> {
        let theta = self.restriction(h, chi, k)?;
        self.constituents_of(k, &theta)
    }
}

impl std::fmt::Debug for CharacterAtlas {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterAtlas")
            .field("group", &self.group.name())
            .field("subgroups", &self.classes.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, GroupSpec};

    fn atlas(spec: &str) -> CharacterAtlas {
        let g = builtin(&spec.parse::<GroupSpec>().unwrap(), &Limits::default()).unwrap();
        CharacterAtlas::build(Arc::new(g), &Limits::default()).unwrap()
    }

    #[test]
    fn layout() {
        let a = atlas("Quaternion(8)");
        assert_eq!(a.len(), 6);
        assert_eq!(a.subgroup(0).order(), 1);
        assert_eq!(a.subgroup(a.whole_id()).order(), 8);
        assert_eq!(a.subgroups_of_order(4).len(), 3);
        assert_eq!(a.maximal_subgroups(a.whole_id()), a.subgroups_of_order(4));
        assert_eq!(a.contained_in(a.whole_id()).len(), 6);
        let fours = a.subgroups_of_order(4);
        assert_eq!(a.subgroup(a.meet(fours[0], fours[1])).order(), 2);
    }

    #[test]
    fn every_subgroup_has_complete_irr() {
        for spec in [
            "Dihedral(16)",
            "Extraspecial(3,+)",
            "DirectProduct(Quaternion(8),Cyclic(2,1))",
        ] {
            let a = atlas(spec);
            for id in 0..a.len() {
                let sum: i64 = a.irr(id).iter().map(|c| c.degree() * c.degree()).sum();
                assert_eq!(sum, a.subgroup(id).order() as i64);
                assert_eq!(a.irr(id).len(), a.classes(id).len());
            }
        }
    }

    #[test]
    fn constituents_cover_degree() {
        let a = atlas("Dihedral(8)");
        let g = a.whole_id();
        for chi in 0..a.irr(g).len() {
            for k in a.contained_in(g) {
                let parts = a.restriction_constituents(g, chi, k).unwrap();
                let covered: i64 = parts.iter().map(|&(i, m)| m * a.irr(k)[i].degree()).sum();
                assert_eq!(covered, a.irr(g)[chi].degree());
            }
        }
    }
}
