//! JSON, CSV and DOT views of tables, posets, chains and reports.

use serde::Serialize;

use crate::character::CharacterAtlas;
use crate::cyclotomic::CycInt;
use crate::poset::{ComponentPartition, Gamma, PosetGraph, Strategy, WitnessChain};
use crate::verify::TheoremReport;

#[derive(Serialize)]
pub struct ClassRow {
    pub rep: usize,
    pub size: usize,
    pub rep_order: usize,
}

#[derive(Serialize)]
pub struct CharacterRow {
    pub index: usize,
    pub degree: i64,
    pub values: Vec<CycInt>,
}

#[derive(Serialize)]
pub struct SubgroupTable {
    pub id: usize,
    pub order: usize,
    pub elements: Vec<usize>,
    pub classes: Vec<ClassRow>,
    pub characters: Vec<CharacterRow>,
}

#[derive(Serialize)]
pub struct CharacterTables {
    pub group: String,
    pub order: usize,
    pub conductor: u32,
    pub tables: Vec<SubgroupTable>,
}

/// Character tables of the given subgroups.
pub fn character_tables(atlas: &CharacterAtlas, ids: &[usize]) -> CharacterTables {
    let g = atlas.group();
    let tables = ids
        .iter()
        .map(|&id| {
            let cl = atlas.classes(id);
            SubgroupTable {
                id,
                order: atlas.subgroup(id).order(),
                elements: atlas.subgroup(id).elems().to_vec(),
                classes: cl
                    .reps()
                    .iter()
                    .zip(cl.sizes())
                    .map(|(&rep, &size)| ClassRow {
                        rep,
                        size,
                        rep_order: g.elem_order(rep),
                    })
                    .collect(),
                characters: atlas
                    .irr(id)
                    .iter()
                    .enumerate()
                    .map(|(index, c)| CharacterRow {
                        index,
                        degree: c.degree(),
                        values: c.values().to_vec(),
                    })
                    .collect(),
            }
        })
        .collect();
    CharacterTables {
        group: g.name().to_string(),
        order: g.order(),
        conductor: atlas.conductor().n(),
        tables,
    }
}

#[derive(Serialize)]
pub struct NodeRow {
    pub id: usize,
    pub subgroup: usize,
    pub character: usize,
    pub order: usize,
    pub degree: i64,
    pub component: usize,
}

#[derive(Serialize)]
pub struct PosetExport {
    pub group: String,
    pub order: usize,
    pub p: usize,
    pub e: u32,
    pub strategy: Strategy,
    pub components: usize,
    pub subgroups: Vec<usize>,
    pub nodes: Vec<NodeRow>,
    pub edges: Vec<(usize, usize)>,
}

pub fn poset_export(
    gamma: &Gamma,
    graph: &PosetGraph,
    partition: &ComponentPartition,
) -> PosetExport {
    let atlas = gamma.atlas();
    let nodes = gamma
        .nodes()
        .iter()
        .enumerate()
        .map(|(id, n)| NodeRow {
            id,
            subgroup: n.subgroup,
            character: n.character,
            order: atlas.subgroup(n.subgroup).order(),
            degree: atlas.irr(n.subgroup)[n.character].degree(),
            component: partition.component_of(id),
        })
        .collect();
    PosetExport {
        group: atlas.group().name().to_string(),
        order: atlas.group().order(),
        p: gamma.p(),
        e: gamma.e(),
        strategy: graph.strategy(),
        components: partition.count,
        subgroups: gamma.subgroups().to_vec(),
        nodes,
        edges: graph.edges().to_vec(),
    }
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

/// Hasse-style DOT graph: edges point from the smaller node to the larger,
/// nodes are filled with one colour per component.
pub fn poset_dot(gamma: &Gamma, graph: &PosetGraph, partition: &ComponentPartition) -> String {
    let atlas = gamma.atlas();
    let mut out = String::new();
    out.push_str(&format!(
        "digraph gamma {{\n  label=\"{} p={} e={} components={}\";\n  rankdir=BT;\n  node [shape=box, style=filled];\n",
        atlas.group().name(),
        gamma.p(),
        gamma.e(),
        partition.count
    ));
    for (id, n) in gamma.nodes().iter().enumerate() {
        let c = partition.component_of(id);
        out.push_str(&format!(
            "  n{id} [label=\"H{}:χ{} (|H|={}, deg={})\", fillcolor=\"{}\"];\n",
            n.subgroup,
            n.character,
            atlas.subgroup(n.subgroup).order(),
            atlas.irr(n.subgroup)[n.character].degree(),
            PALETTE[c % PALETTE.len()]
        ));
    }
    for &(lo, hi) in graph.edges() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct ChainExport<'a> {
    pub route: &'a str,
    pub chain: &'a WitnessChain,
    pub links_valid: Vec<bool>,
    pub valid: bool,
}

/// CSV summary, one row per report.
pub fn reports_csv(reports: &[TheoremReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["group", "p", "e", "|I|", "|I∩Z|", "|Irr(I)|", "count", "ok"])?;
    for r in reports {
        w.write_record([
            r.group.clone(),
            r.p.to_string(),
            r.e.to_string(),
            r.i_order.to_string(),
            r.i_cap_z_order.to_string(),
            r.irr_i.to_string(),
            r.components.to_string(),
            r.ok().to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
