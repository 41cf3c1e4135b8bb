//! Class functions on subgroups, and the operations character theory needs:
//! restriction, induction, conjugation, inner products and decomposition.
//!
//! A [`ClassFunction`] is tied to the [`ConjClasses`] of its owner. Values are
//! exact cyclotomic integers at one conductor, the exponent of the ambient
//! group, so characters of different subgroups can be compared directly.

mod atlas;
mod identities;
mod irr;

pub use atlas::CharacterAtlas;
pub use identities::{frobenius_check, mackey_check};
pub use irr::irr;

use std::cmp::Ordering;
use std::sync::Arc;

use thiserror::Error;

use crate::cyclotomic::{Conductor, CycError, CycInt};
use crate::group::{
    abelian_decomposition, conjugacy_classes, derived_subgroup, quotient, ConjClasses, GroupError,
    Subgroup,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    NotASubgroup(String),
    #[error("class functions live on different subgroups")]
    OwnerMismatch,
    #[error("element {0} is outside the ambient group")]
    NotInAmbient(usize),
    #[error("incomplete Irr for subgroup of order {order}: {found} characters with Σdeg² = {sum_sq}, {classes} classes")]
    IncompleteIrr {
        order: usize,
        found: usize,
        sum_sq: i64,
        classes: usize,
    },
    #[error("decomposition does not reproduce the class function")]
    DecompositionMismatch,
}

/// A class function on a subgroup: one value per conjugacy class.
#[derive(Clone)]
pub struct ClassFunction {
    classes: Arc<ConjClasses>,
    values: Vec<CycInt>,
    degree: i64,
}

impl ClassFunction {
    /// Wraps raw values; the value on the identity class must be a rational
    /// integer, which becomes the degree.
    pub fn new(classes: Arc<ConjClasses>, values: Vec<CycInt>) -> Result<Self, CharError> {
        assert_eq!(values.len(), classes.len(), "one value per class");
        let degree = values[0].as_integer()?;
        Ok(ClassFunction {
            classes,
            values,
            degree,
        })
    }

    pub fn trivial(classes: &Arc<ConjClasses>, cond: Conductor) -> Self {
        let values = vec![cond.one(); classes.len()];
        ClassFunction {
            classes: Arc::clone(classes),
            values,
            degree: 1,
        }
    }

    /// The regular character: `|H|` at the identity, zero elsewhere.
    pub fn regular(classes: &Arc<ConjClasses>, cond: Conductor) -> Self {
        let mut values = vec![cond.zero(); classes.len()];
        let order = classes.owner().order() as i64;
        values[0] = cond.int(order);
        ClassFunction {
            classes: Arc::clone(classes),
            values,
            degree: order,
        }
    }

    pub fn owner(&self) -> &Subgroup {
        self.classes.owner()
    }

    pub fn classes(&self) -> &Arc<ConjClasses> {
        &self.classes
    }

    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn conductor(&self) -> Conductor {
        self.values[0].conductor()
    }

    /// Value at an ambient element, `None` outside the owner.
    pub fn value_at(&self, g: usize) -> Option<&CycInt> {
        self.classes.class_of_elem(g).map(|c| &self.values[c])
    }

    /// Canonical order: degree ascending, then value vectors in descending
    /// lexicographic order of their coefficients. Only `ζ⁰` has leading
    /// coefficient 1, so the trivial character always comes first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            other
                .values
                .iter()
                .map(CycInt::coeffs)
                .cmp(self.values.iter().map(CycInt::coeffs))
        })
    }

    pub fn scaled_sum(&self, other: &ClassFunction, k: i64) -> Result<ClassFunction, CharError> {
        if self.owner() != other.owner() {
            return Err(CharError::OwnerMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(self.classes.reps())
            .map(|(v, &r)| {
                let w = other.value_at(r).expect("same owner");
                Ok(v.arith(&w.scale(k), crate::cyclotomic::ArithOp::Add)?)
            })
            .collect::<Result<Vec<_>, CharError>>()?;
        ClassFunction::new(Arc::clone(&self.classes), values)
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.owner() == other.owner()
            && self
                .classes
                .reps()
                .iter()
                .zip(&self.values)
                .all(|(&r, v)| other.value_at(r) == Some(v))
    }
}

impl std::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassFunction")
            .field("owner_order", &self.owner().order())
            .field("degree", &self.degree)
            .field("values", &self.values)
            .finish()
    }
}

/// All `|H/H′|` linear characters of the owner of `classes`, in
/// mixed-radix order of their exponent vectors on a cyclic decomposition of
/// `H/H′`.
pub fn linear_characters(
    classes: &Arc<ConjClasses>,
    cond: Conductor,
) -> Result<Vec<ClassFunction>, CharError> {
    let h = classes.owner();
    let derived = derived_subgroup(h);
    let (q, proj) = quotient(h, &derived)?;
    let dec = abelian_decomposition(&q)?;
    let n = cond.n() as usize;
    let steps: Vec<i64> = dec
        .factors
        .iter()
        .map(|&d| {
            assert_eq!(n % d, 0, "factor order {d} must divide the conductor {n}");
            (n / d) as i64
        })
        .collect();
    let rep_logs: Vec<&[usize]> = classes
        .reps()
        .iter()
        .map(|&r| dec.dlog[proj[r].expect("rep in H")].as_slice())
        .collect();

    let mut out = Vec::with_capacity(q.order());
    let mut k = vec![0usize; dec.factors.len()];
    loop {
        let values = rep_logs
            .iter()
            .map(|log| {
                let e: i64 = log
                    .iter()
                    .zip(&k)
                    .zip(&steps)
                    .map(|((&a, &ki), &s)| (a * ki) as i64 * s)
                    .sum();
                cond.zeta_pow(e)
            })
            .collect();
        out.push(ClassFunction {
            classes: Arc::clone(classes),
            values,
            degree: 1,
        });
        let mut i = 0;
        while i < k.len() {
            k[i] += 1;
            if k[i] < dec.factors[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == k.len() {
            break;
        }
    }
    Ok(out)
}

/// `χ_K` for `K` the owner of `target`, which must lie inside `χ`'s owner.
pub fn restrict(
    chi: &ClassFunction,
    target: &Arc<ConjClasses>,
) -> Result<ClassFunction, CharError> {
    if !target.owner().is_subgroup_of(chi.owner()) {
        return Err(CharError::NotASubgroup(format!(
            "restriction target of order {} is not inside the owner of order {}",
            target.owner().order(),
            chi.owner().order()
        )));
    }
    let values = target
        .reps()
        .iter()
        .map(|&r| chi.value_at(r).expect("inside owner").clone())
        .collect();
    Ok(ClassFunction {
        classes: Arc::clone(target),
        values,
        degree: chi.degree,
    })
}

/// `φ^G` for `G` the owner of `target`, which must contain `φ`'s owner.
///
/// Uses `φ^G(g) = |C_G(g)|/|H| · Σ_{y ∈ cl_G(g) ∩ H} φ(y)`.
pub fn induce(phi: &ClassFunction, target: &Arc<ConjClasses>) -> Result<ClassFunction, CharError> {
    let h = phi.owner();
    let g = target.owner();
    if !h.is_subgroup_of(g) {
        return Err(CharError::NotASubgroup(format!(
            "induction source of order {} is not inside the target of order {}",
            h.order(),
            g.order()
        )));
    }
    let cond = phi.conductor();
    let nh = phi.classes.len();
    let mut counts = vec![0i64; target.len() * nh];
    for &y in h.elems() {
        let cg = target.class_of_elem(y).expect("H inside G");
        let ch = phi.classes.class_of_elem(y).expect("y in H");
        counts[cg * nh + ch] += 1;
    }
    let mut values = Vec::with_capacity(target.len());
    for (cg, &size) in target.sizes().iter().enumerate() {
        let centralizer = (g.order() / size) as i64;
        let mut acc = cond.accumulator();
        for (ch, &k) in counts[cg * nh..(cg + 1) * nh].iter().enumerate() {
            if k != 0 {
                acc.add(&phi.values[ch], k * centralizer);
            }
        }
        values.push(acc.finish().exact_div_int(h.order() as i64)?);
    }
    ClassFunction::new(Arc::clone(target), values)
}

/// `^xφ` on `xHx⁻¹`, given the classes of `xHx⁻¹`: `(^xφ)(g) = φ(x⁻¹gx)`.
pub fn conjugate_character_onto(
    phi: &ClassFunction,
    x: usize,
    target: &Arc<ConjClasses>,
) -> Result<ClassFunction, CharError> {
    let t = phi.owner().group();
    if x >= t.order() {
        return Err(CharError::NotInAmbient(x));
    }
    if target.owner() != &phi.owner().conjugate_by(x) {
        return Err(CharError::NotASubgroup(
            "target is not the conjugate subgroup".into(),
        ));
    }
    let xi = t.inv(x);
    let values = target
        .reps()
        .iter()
        .map(|&r| {
            phi.value_at(t.conj(xi, r))
                .expect("conjugate lies in H")
                .clone()
        })
        .collect();
    Ok(ClassFunction {
        classes: Arc::clone(target),
        values,
        degree: phi.degree,
    })
}

/// `^xφ` on `xHx⁻¹`, computing the classes of the conjugate subgroup.
pub fn conjugate_character(phi: &ClassFunction, x: usize) -> Result<ClassFunction, CharError> {
    let t = phi.owner().group();
    if x >= t.order() {
        return Err(CharError::NotInAmbient(x));
    }
    let target = Arc::new(conjugacy_classes(&phi.owner().conjugate_by(x)));
    conjugate_character_onto(phi, x, &target)
}

/// `[χ, ψ] = |H|⁻¹ Σ_c |c| χ(c) ψ(c⁻¹)`, an exact integer.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<i64, CharError> {
    if chi.owner() != psi.owner() {
        return Err(CharError::OwnerMismatch);
    }
    let cc = &chi.classes;
    let same = Arc::ptr_eq(cc, &psi.classes);
    let mut acc = chi.conductor().accumulator();
    for (c, (&size, v)) in cc.sizes().iter().zip(&chi.values).enumerate() {
        let inv = cc.inverse_class()[c];
        let w = if same {
            &psi.values[inv]
        } else {
            psi.value_at(cc.reps()[inv]).expect("same owner")
        };
        acc.add_product(v, w, size as i64);
    }
    Ok(acc
        .finish()
        .exact_div_int(chi.owner().order() as i64)?
        .as_integer()?)
}

/// Multiplicities `[θ, χ_i]` against a basis, checking that
/// `Σ m_i χ_i = θ`.
pub fn decompose(theta: &ClassFunction, basis: &[ClassFunction]) -> Result<Vec<i64>, CharError> {
    let mults = basis
        .iter()
        .map(|chi| inner_product(theta, chi))
        .collect::<Result<Vec<_>, _>>()?;
    let cond = theta.conductor();
    let rebuilt: Vec<CycInt> = theta
        .classes
        .reps()
        .iter()
        .map(|&r| {
            let mut acc = cond.accumulator();
            for (chi, &m) in basis.iter().zip(&mults) {
                if m != 0 {
                    acc.add(chi.value_at(r).expect("same owner"), m);
                }
            }
            acc.finish()
        })
        .collect();
    if rebuilt != theta.values {
        return Err(CharError::DecompositionMismatch);
    }
    Ok(mults)
}

/// Indices of the basis characters with `[θ, χ_i] ≠ 0`.
pub fn constituents(
    theta: &ClassFunction,
    basis: &[ClassFunction],
) -> Result<Vec<usize>, CharError> {
    let mut out = Vec::new();
    for (i, chi) in basis.iter().enumerate() {
        if inner_product(theta, chi)? != 0 {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, center, GroupSpec, GroupTable};
    use crate::Limits;

    fn setup(spec: &str) -> (Arc<GroupTable>, Conductor) {
        let g = Arc::new(builtin(&spec.parse::<GroupSpec>().unwrap(), &Limits::default()).unwrap());
        let cond = Conductor::new(g.exponent() as u32).unwrap();
        (g, cond)
    }

    fn classes(s: &Subgroup) -> Arc<ConjClasses> {
        Arc::new(conjugacy_classes(s))
    }

    #[test]
    fn linear_characters_of_small_groups() {
        let (g, cond) = setup("Cyclic(2,2)");
        let triv = classes(&Subgroup::trivial(&g));
        assert_eq!(linear_characters(&triv, cond).unwrap().len(), 1);

        let c4 = classes(&Subgroup::whole(&g));
        let lin = linear_characters(&c4, cond).unwrap();
        assert_eq!(lin.len(), 4);
        // value at the generator (element 1) runs through all fourth roots of unity
        let mut at_gen: Vec<CycInt> = lin.iter().map(|l| l.value_at(1).unwrap().clone()).collect();
        let mut roots: Vec<CycInt> = (0..4).map(|k| cond.zeta_pow(k)).collect();
        at_gen.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        roots.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        assert_eq!(at_gen, roots);

        let (q, qc) = setup("Quaternion(8)");
        assert_eq!(
            linear_characters(&classes(&Subgroup::whole(&q)), qc)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn restriction_cases() {
        let (g, cond) = setup("Quaternion(8)");
        let whole = classes(&Subgroup::whole(&g));
        let irr_q8 = irr(&whole, cond).unwrap();
        let chi2 = irr_q8.iter().find(|c| c.degree() == 2).unwrap();
        assert_eq!(&restrict(chi2, &whole).unwrap(), chi2);
        let z = classes(&center(&Subgroup::whole(&g)));
        let r = restrict(chi2, &z).unwrap();
        assert_eq!(r.values(), &[cond.int(2), cond.int(-2)]);

        // faithful character of C4 restricted to C2 is the sign character
        let (c, cc) = setup("Cyclic(2,2)");
        let c4 = classes(&Subgroup::whole(&c));
        let c2 = classes(&Subgroup::generated(&c, &[2]));
        let faithful = linear_characters(&c4, cc)
            .unwrap()
            .into_iter()
            .find(|l| l.value_at(1) == Some(&cc.zeta_pow(1)))
            .unwrap();
        assert_eq!(
            restrict(&faithful, &c2).unwrap().values(),
            &[cc.one(), cc.int(-1)]
        );
        assert!(matches!(
            restrict(&ClassFunction::trivial(&c2, cc), &c4),
            Err(CharError::NotASubgroup(_))
        ));
    }

    #[test]
    fn induction_cases() {
        let (c, cond) = setup("Cyclic(2,2)");
        let c4 = classes(&Subgroup::whole(&c));
        assert_eq!(
            induce(&ClassFunction::trivial(&c4, cond), &c4).unwrap(),
            ClassFunction::trivial(&c4, cond)
        );
        let c2 = classes(&Subgroup::generated(&c, &[2]));
        let ind = induce(&ClassFunction::trivial(&c2, cond), &c4).unwrap();
        // classes of C4 are elements 0,1,2,3
        assert_eq!(
            ind.values(),
            &[cond.int(2), cond.int(0), cond.int(2), cond.int(0)]
        );
        // oracle: direct formula (1/|H|) Σ_x 1_H°(x g x⁻¹) in an abelian group
        for g in 0..4 {
            let direct = if g % 2 == 0 { 4 / 2 } else { 0 };
            assert_eq!(ind.value_at(g).unwrap().as_integer().unwrap(), direct);
        }

        let (q, qc) = setup("Quaternion(8)");
        let q8 = classes(&Subgroup::whole(&q));
        let i = (0..8).find(|&x| q.elem_order(x) == 4).unwrap();
        let ci = classes(&Subgroup::generated(&q, &[i]));
        let faithful = linear_characters(&ci, qc)
            .unwrap()
            .into_iter()
            .find(|l| l.value_at(i).unwrap().as_integer().is_err())
            .unwrap();
        let chi = induce(&faithful, &q8).unwrap();
        assert_eq!(chi.degree(), 2);
        assert_eq!(inner_product(&chi, &chi).unwrap(), 1);
    }

    #[test]
    fn conjugation_cases() {
        let (q, qc) = setup("Quaternion(8)");
        let i = (0..8).find(|&x| q.elem_order(x) == 4).unwrap();
        let ci = classes(&Subgroup::generated(&q, &[i]));
        let lin = linear_characters(&ci, qc).unwrap();
        for phi in &lin {
            assert_eq!(&conjugate_character(phi, 0).unwrap(), phi);
            assert_eq!(&conjugate_character(phi, i).unwrap(), phi);
        }
        // conjugating by j (an order-4 element outside ⟨i⟩) swaps the faithful pair
        let j = (0..8)
            .find(|&x| q.elem_order(x) == 4 && !ci.owner().contains(x))
            .unwrap();
        let faithful: Vec<&ClassFunction> = lin
            .iter()
            .filter(|l| l.value_at(i).unwrap().as_integer().is_err())
            .collect();
        assert_eq!(faithful.len(), 2);
        assert_eq!(&conjugate_character(faithful[0], j).unwrap(), faithful[1]);
        assert_eq!(
            conjugate_character(faithful[0], 99).unwrap_err(),
            CharError::NotInAmbient(99)
        );
    }

    #[test]
    fn inner_products() {
        let (d, dc) = setup("Dihedral(8)");
        let d8 = classes(&Subgroup::whole(&d));
        let irr_d8 = irr(&d8, dc).unwrap();
        let reg = ClassFunction::regular(&d8, dc);
        for chi in &irr_d8 {
            assert_eq!(inner_product(chi, chi).unwrap(), 1);
            assert_eq!(inner_product(&reg, chi).unwrap(), chi.degree());
        }
        let (q, qc) = setup("Quaternion(8)");
        let q8 = classes(&Subgroup::whole(&q));
        let chi2 = irr(&q8, qc)
            .unwrap()
            .into_iter()
            .find(|c| c.degree() == 2)
            .unwrap();
        let z = classes(&center(&Subgroup::whole(&q)));
        let sign = linear_characters(&z, qc)
            .unwrap()
            .into_iter()
            .find(|l| l.values()[1] == qc.int(-1))
            .unwrap();
        assert_eq!(
            inner_product(&restrict(&chi2, &z).unwrap(), &sign).unwrap(),
            2
        );
        assert_eq!(
            inner_product(&chi2, &sign).unwrap_err(),
            CharError::OwnerMismatch
        );
    }

    #[test]
    fn decompositions() {
        let (q, qc) = setup("Quaternion(8)");
        let q8 = classes(&Subgroup::whole(&q));
        let basis = irr(&q8, qc).unwrap();
        assert_eq!(decompose(&basis[2], &basis).unwrap(), vec![0, 0, 1, 0, 0]);
        let reg = ClassFunction::regular(&q8, qc);
        assert_eq!(decompose(&reg, &basis).unwrap(), vec![1, 1, 1, 1, 2]);

        let (d, dc) = setup("Dihedral(8)");
        let d8 = classes(&Subgroup::whole(&d));
        let triv = classes(&Subgroup::trivial(&d));
        let basis = irr(&d8, dc).unwrap();
        let ind = induce(&ClassFunction::trivial(&triv, dc), &d8).unwrap();
        let degrees: Vec<i64> = basis.iter().map(ClassFunction::degree).collect();
        assert_eq!(decompose(&ind, &basis).unwrap(), degrees);
        assert_eq!(
            decompose(&ind, &basis[..4]).unwrap_err(),
            CharError::DecompositionMismatch
        );
    }
}
