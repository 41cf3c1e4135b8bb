//! Checks `|I ∩ Z(G)| ≤ #components ≤ |Irr(I)|` and "connected iff `I = 1`"
//! for single groups and whole families.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::{CharError, CharacterAtlas};
use crate::group::{builtin, center, GroupError, GroupSpec, GroupTable, Subgroup};
use crate::poset::{
    abelian_component_count, build_nodes, central_poset_map, check_parameters, components,
    PosetError, Strategy,
};
use crate::Limits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("bound violated for {} e={}: {} <= {} <= {} fails", .0.group, .0.e, .0.i_cap_z_order, .0.components, .0.irr_i)]
    BoundViolation(Box<TheoremReport>),
    #[error("connectivity criterion violated for {} e={}: {} components with |I| = {}", .0.group, .0.e, .0.components, .0.i_order)]
    CriterionViolation(Box<TheoremReport>),
    #[error("central map check failed: {0}")]
    CentralMap(String),
    #[error("I is not normal in G")]
    INotNormal,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub nodes: Duration,
    pub components: Duration,
    pub cross_checks: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub p: usize,
    pub e: u32,
    pub i_order: usize,
    pub i_cap_z_order: usize,
    pub irr_i: usize,
    pub components: usize,
    pub bounds_hold: bool,
    pub connected_iff_i_trivial: bool,
    /// whether the central-map cross-checks ran (only when `I ∩ Z(G) ≠ 1`)
    pub central_checked: bool,
    #[serde(skip)]
    pub timings: Timings,
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.bounds_hold && self.connected_iff_i_trivial
    }
}

/// `I`, the intersection of all subgroups of order `p^{e+1}`.
pub fn compute_i(atlas: &CharacterAtlas, p: usize, e: u32) -> Result<Subgroup, VerifyError> {
    let m = check_parameters(atlas, p, e)?;
    let subs: Vec<Subgroup> = atlas
        .subgroups_of_order(m)
        .into_iter()
        .map(|id| atlas.subgroup(id).clone())
        .collect();
    let i = crate::group::intersect_all(&subs)?;
    if !i.is_normal_in(atlas.subgroup(atlas.whole_id())) {
        return Err(VerifyError::INotNormal);
    }
    Ok(i)
}

/// Computes every quantity of the bound for one `(G, e)` and checks it,
/// together with the central-map cross-checks when `I ∩ Z(G) ≠ 1`.
pub fn theorem_report(
    atlas: &Arc<CharacterAtlas>,
    p: usize,
    e: u32,
    strategy: Strategy,
) -> Result<TheoremReport, VerifyError> {
    let g = atlas.group();
    let t0 = Instant::now();
    let gamma = build_nodes(atlas, p, e)?;
    let i = compute_i(atlas, p, e)?;
    let z = center(atlas.subgroup(atlas.whole_id()));
    let iz = i.intersect(&z);
    let i_id = atlas.id_of(&i).expect("I is a subgroup");
    let iz_id = atlas.id_of(&iz).expect("I ∩ Z is a subgroup");
    let t1 = Instant::now();
    let partition = components(&gamma, strategy)?;
    let t2 = Instant::now();

    let count = partition.count;
    let irr_i = atlas.irr(i_id).len();
    let mut report = TheoremReport {
        group: g.name().to_string(),
        order: g.order(),
        p,
        e,
        i_order: i.order(),
        i_cap_z_order: iz.order(),
        irr_i,
        components: count,
        bounds_hold: iz.order() <= count && count <= irr_i,
        connected_iff_i_trivial: (count == 1) == (i.order() == 1),
        central_checked: false,
        timings: Timings::default(),
    };

    if iz.order() > 1 {
        // one image per component, and every β ∈ Irr(I ∩ Z) is hit
        let mut image_of: HashMap<usize, usize> = HashMap::new();
        let mut hit = BTreeSet::new();
        for (idx, &node) in gamma.nodes().iter().enumerate() {
            let beta = central_poset_map(&gamma, node, iz_id)?;
            let c = partition.component_of(idx);
            if *image_of.entry(c).or_insert(beta) != beta {
                return Err(VerifyError::CentralMap(format!(
                    "component {c} has two images"
                )));
            }
            hit.insert(beta);
        }
        if hit.len() != atlas.irr(iz_id).len() {
            return Err(VerifyError::CentralMap(format!(
                "image has {} of {} characters",
                hit.len(),
                atlas.irr(iz_id).len()
            )));
        }
        let f = iz.order().ilog(p) - 1;
        let abelian = abelian_component_count(&iz.to_group_table("I∩Z"), f)?;
        if abelian != iz.order() {
            return Err(VerifyError::CentralMap(format!(
                "abelian count {abelian} differs from |I ∩ Z| = {}",
                iz.order()
            )));
        }
        report.central_checked = true;
    }
    report.timings = Timings {
        nodes: t1 - t0,
        components: t2 - t1,
        cross_checks: t2.elapsed(),
    };

    if !report.bounds_hold {
        return Err(VerifyError::BoundViolation(Box::new(report)));
    }
    if !report.connected_iff_i_trivial {
        return Err(VerifyError::CriterionViolation(Box::new(report)));
    }
    Ok(report)
}

/// Every `e` with `p^{e+1} ≤ |G|`.
pub fn valid_exponents(order: usize, p: usize) -> Vec<u32> {
    (0..)
        .take_while(|&e| p.checked_pow(e + 1).is_some_and(|m| m <= order))
        .collect()
}

/// How a failed item should be read: bad input, a violated precondition
/// of the theory, a violated bound, or an internal inconsistency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemKind {
    Input,
    Domain,
    Violation,
    Internal,
}

impl ItemKind {
    fn of_group(e: &GroupError) -> Self {
        match e {
            GroupError::OrderCapExceeded { .. } | GroupError::LatticeTooLarge { .. } => {
                ItemKind::Domain
            }
            GroupError::UnknownFamily(_)
            | GroupError::InvalidSpec(_)
            | GroupError::InvalidGroupFile(_) => ItemKind::Input,
            _ => ItemKind::Internal,
        }
    }

    fn of_char(e: &CharError) -> Self {
        match e {
            CharError::Group(g) => Self::of_group(g),
            CharError::Cyc(crate::cyclotomic::CycError::UnsupportedConductor(_)) => {
                ItemKind::Domain
            }
            _ => ItemKind::Internal,
        }
    }

    fn of_poset(e: &PosetError) -> Self {
        match e {
            PosetError::Char(c) => Self::of_char(c),
            PosetError::Group(g) => Self::of_group(g),
            PosetError::NotPGroup { .. } | PosetError::InvalidExponent { .. } => ItemKind::Domain,
            _ => ItemKind::Internal,
        }
    }

    pub fn of(e: &VerifyError) -> Self {
        match e {
            VerifyError::Group(g) => Self::of_group(g),
            VerifyError::Char(c) => Self::of_char(c),
            VerifyError::Poset(p) => Self::of_poset(p),
            VerifyError::BoundViolation(_)
            | VerifyError::CriterionViolation(_)
            | VerifyError::CentralMap(_) => ItemKind::Violation,
            VerifyError::INotNormal => ItemKind::Internal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepItemError {
    pub group: String,
    pub order: usize,
    pub e: Option<u32>,
    pub kind: ItemKind,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub reports: Vec<TheoremReport>,
    pub errors: Vec<SweepItemError>,
}

impl SweepOutcome {
    /// Failed reports plus items that could not be evaluated.
    pub fn violations(&self) -> usize {
        self.reports.iter().filter(|r| !r.ok()).count() + self.errors.len()
    }

    fn sort(&mut self) {
        self.reports
            .sort_by(|a, b| (a.order, &a.group, a.e).cmp(&(b.order, &b.group, b.e)));
        self.errors
            .sort_by(|a, b| (a.order, &a.group, a.e).cmp(&(b.order, &b.group, b.e)));
    }
}

/// All reports for one group, over every valid `e` or just `only_e`.
pub fn verify_group(
    g: Arc<GroupTable>,
    limits: &Limits,
    strategy: Strategy,
    only_e: Option<u32>,
) -> SweepOutcome {
    let mut out = SweepOutcome::default();
    let item = |e: Option<u32>, err: VerifyError| SweepItemError {
        group: g.name().to_string(),
        order: g.order(),
        e,
        kind: ItemKind::of(&err),
        error: err.to_string(),
    };
    let Some(p) = g.prime() else {
        let err = PosetError::NotPGroup {
            order: g.order(),
            p: 0,
        };
        out.errors.push(item(only_e, err.into()));
        return out;
    };
    let exponents = match only_e {
        None => valid_exponents(g.order(), p),
        Some(e) if valid_exponents(g.order(), p).contains(&e) => vec![e],
        Some(e) => {
            let err = PosetError::InvalidExponent {
                p,
                e,
                order: g.order(),
            };
            out.errors.push(item(Some(e), err.into()));
            return out;
        }
    };
    let atlas = match CharacterAtlas::build(Arc::clone(&g), limits) {
        Ok(a) => Arc::new(a),
        Err(err) => {
            out.errors.push(item(only_e, err.into()));
            return out;
        }
    };
    for e in exponents {
        match theorem_report(&atlas, p, e, strategy) {
            Ok(r) => out.reports.push(r),
            Err(err) => {
                if let VerifyError::BoundViolation(r) | VerifyError::CriterionViolation(r) = &err {
                    out.reports.push((**r).clone());
                }
                out.errors.push(item(Some(e), err));
            }
        }
    }
    out
}

/// Reports for every `(G, e)` over the given groups; failures are collected
/// per item and the sweep continues. Output is sorted by `(|G|, name, e)`.
pub fn sweep_groups(
    groups: Vec<Arc<GroupTable>>,
    limits: &Limits,
    strategy: Strategy,
) -> SweepOutcome {
    let parts: Vec<SweepOutcome> = groups
        .into_par_iter()
        .map(|g| verify_group(g, limits, strategy, None))
        .collect();
    let mut out = SweepOutcome::default();
    for part in parts {
        out.reports.extend(part.reports);
        out.errors.extend(part.errors);
    }
    out.sort();
    out
}

/// [`sweep_groups`] over built-in family descriptors.
pub fn sweep(specs: &[GroupSpec], limits: &Limits, strategy: Strategy) -> SweepOutcome {
    let mut out = SweepOutcome::default();
    let mut groups = Vec::new();
    for spec in specs {
        match builtin(spec, limits) {
            Ok(g) => groups.push(Arc::new(g)),
            Err(err) => out.errors.push(SweepItemError {
                group: spec.short_name(),
                order: spec.order().unwrap_or(0),
                e: None,
                kind: ItemKind::of_group(&err),
                error: err.to_string(),
            }),
        }
    }
    let rest = sweep_groups(groups, limits, strategy);
    out.reports.extend(rest.reports);
    out.errors.extend(rest.errors);
    out.sort();
    out
}
