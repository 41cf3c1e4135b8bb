use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use charposet::character::{CharError, CharacterAtlas};
use charposet::cyclotomic::CycError;
use charposet::export::{character_tables, poset_dot, poset_export, reports_csv, ChainExport};
use charposet::group::{
    builtin, catalog, family_catalog, load_group_file, GroupError, GroupSpec, GroupTable,
};
use charposet::poset::{
    build_nodes, graph_path, validate_chain, witness_between, PosetError, PosetGraph, PosetNode,
    Strategy,
};
use charposet::verify::{sweep, verify_group, ItemKind, SweepOutcome, VerifyError};
use charposet::Limits;

const EXIT_INPUT: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_WITNESS: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "charposet",
    version,
    about = "Character-pair posets of finite p-groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in group families
    Groups(GroupsArgs),
    /// Character tables of a group and optionally all its subgroups
    Irr(IrrArgs),
    /// Build the poset, count components, export JSON or DOT
    Poset(PosetArgs),
    /// Connecting chain between two poset nodes
    Witness(WitnessArgs),
    /// Check the component bounds for one group
    Verify(VerifyArgs),
    /// Check the component bounds across the built-in families
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Full,
    Maximal,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Full => Strategy::Full,
            StrategyArg::Maximal => Strategy::MaximalOnly,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest group order to accept (overrides CHARPOSET_CAP)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args, Debug)]
struct GroupSel {
    /// Built-in descriptor such as Quaternion(8), or @path to a JSON group file
    #[arg(long)]
    group: String,
    /// The prime; inferred from the group order when omitted
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Args, Debug)]
struct GroupsArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also list the concrete catalog for this prime
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, default_value_t = 64)]
    max_order: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct IrrArgs {
    #[command(flatten)]
    sel: GroupSel,
    /// Include every subgroup, not just the group itself
    #[arg(long)]
    subgroups: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct PosetArgs {
    #[command(flatten)]
    sel: GroupSel,
    #[arg(long)]
    e: u32,
    #[arg(long, value_enum, default_value_t = StrategyArg::Maximal)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    sel: GroupSel,
    #[arg(long)]
    e: u32,
    /// Two nodes as H:chi,K:psi (subgroup id, character index)
    #[arg(long)]
    endpoints: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    sel: GroupSel,
    /// A single exponent; every valid one when omitted
    #[arg(long)]
    e: Option<u32>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Maximal)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Primes to sweep (repeatable); defaults to 2, 3 and 5
    #[arg(long)]
    p: Vec<usize>,
    /// Largest order per prime; defaults to 64, 81 and 25 for 2, 3 and 5
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Maximal)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn group_code(e: &GroupError) -> u8 {
    match e {
        GroupError::OrderCapExceeded { .. } | GroupError::LatticeTooLarge { .. } => EXIT_DOMAIN,
        GroupError::NotAssociative { .. }
        | GroupError::NotSquare { .. }
        | GroupError::IndexOutOfRange { .. }
        | GroupError::NoIdentity
        | GroupError::NoInverse { .. }
        | GroupError::EmptyTable
        | GroupError::InvalidPermutation { .. }
        | GroupError::ClosureTooLarge { .. }
        | GroupError::UnknownFamily(_)
        | GroupError::InvalidSpec(_)
        | GroupError::InvalidGroupFile(_) => EXIT_INPUT,
        _ => EXIT_INTERNAL,
    }
}

fn char_code(e: &CharError) -> u8 {
    match e {
        CharError::Group(g) => group_code(g),
        CharError::Cyc(CycError::UnsupportedConductor(_)) => EXIT_DOMAIN,
        _ => EXIT_INTERNAL,
    }
}

fn poset_code(e: &PosetError) -> u8 {
    match e {
        PosetError::Char(c) => char_code(c),
        PosetError::Group(g) => group_code(g),
        PosetError::NotPGroup { .. } | PosetError::InvalidExponent { .. } => EXIT_DOMAIN,
        PosetError::NotInPoset(_) => EXIT_INPUT,
        PosetError::PreconditionFailed(_) => EXIT_WITNESS,
        _ => EXIT_INTERNAL,
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure {
            code: group_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<CharError> for Failure {
    fn from(e: CharError) -> Self {
        Failure {
            code: char_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<PosetError> for Failure {
    fn from(e: PosetError) -> Self {
        Failure {
            code: poset_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = match &e {
            VerifyError::Group(g) => group_code(g),
            VerifyError::Char(c) => char_code(c),
            VerifyError::Poset(p) => poset_code(p),
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CommandKind {
    Groups,
    Irr,
    Poset,
    Witness,
    Verify,
    Sweep,
}

/// The options of one invocation after parsing, checked for consistency.
#[derive(Debug)]
struct RunConfig {
    command: CommandKind,
    group: Option<String>,
    p: Option<usize>,
    e: Option<u32>,
    strategy: Strategy,
    format: Format,
    limits: Limits,
    out: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<(), Failure> {
        use CommandKind::*;
        let allowed: &[Format] = match self.command {
            Groups => &[Format::Text, Format::Json],
            Irr => &[Format::Json],
            Poset => &[Format::Json, Format::Dot],
            Witness => &[Format::Text, Format::Json],
            Verify | Sweep => &[Format::Json, Format::Csv],
        };
        if !allowed.contains(&self.format) {
            return Err(Failure::input(format!(
                "--format {:?} is not available for {:?}",
                self.format, self.command
            )));
        }
        if self.e.is_some() && !matches!(self.command, Poset | Witness | Verify) {
            return Err(Failure::input(
                "--e only applies to poset, witness and verify",
            ));
        }
        if self.group.is_some() == matches!(self.command, Groups | Sweep) {
            return Err(Failure::input(
                "--group is required exactly for irr, poset, witness and verify",
            ));
        }
        if self.limits.order_cap == 0 {
            return Err(Failure::input("--cap must be positive"));
        }
        Ok(())
    }

    fn load_group(&self) -> Result<Arc<GroupTable>, Failure> {
        let src = self.group.as_deref().expect("validated");
        let g = if let Some(path) = src.strip_prefix('@') {
            load_group_file(path.as_ref(), &self.limits)?
        } else {
            let spec: GroupSpec = src.parse()?;
            builtin(&spec, &self.limits)?
        };
        Ok(Arc::new(g))
    }

    /// The prime of a p-group, checked against `--p` when given.
    fn prime(&self, g: &GroupTable) -> Result<usize, Failure> {
        match (g.prime(), self.p) {
            (Some(q), Some(p)) if p == q => Ok(p),
            (Some(q), None) => Ok(q),
            (_, p) => Err(PosetError::NotPGroup {
                order: g.order(),
                p: p.unwrap_or(0),
            }
            .into()),
        }
    }

    fn atlas(&self) -> Result<(Arc<CharacterAtlas>, usize), Failure> {
        let g = self.load_group()?;
        let p = self.prime(&g)?;
        Ok((Arc::new(CharacterAtlas::build(g, &self.limits)?), p))
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn limits(cap: Option<usize>) -> Limits {
    let mut l = Limits::from_env();
    if let Some(c) = cap {
        l.order_cap = c;
    }
    l
}

fn config(command: &Command) -> RunConfig {
    let base = |kind, group: Option<&GroupSel>, format, common: &Common| RunConfig {
        command: kind,
        group: group.map(|s| s.group.clone()),
        p: group.and_then(|s| s.p),
        e: None,
        strategy: Strategy::MaximalOnly,
        format,
        limits: limits(common.cap),
        out: common.out.clone(),
    };
    match command {
        Command::Groups(a) => RunConfig {
            p: a.p,
            ..base(CommandKind::Groups, None, a.format, &a.common)
        },
        Command::Irr(a) => base(CommandKind::Irr, Some(&a.sel), a.format, &a.common),
        Command::Poset(a) => RunConfig {
            e: Some(a.e),
            strategy: a.strategy.into(),
            ..base(CommandKind::Poset, Some(&a.sel), a.format, &a.common)
        },
        Command::Witness(a) => RunConfig {
            e: Some(a.e),
            ..base(CommandKind::Witness, Some(&a.sel), a.format, &a.common)
        },
        Command::Verify(a) => RunConfig {
            e: a.e,
            strategy: a.strategy.into(),
            ..base(CommandKind::Verify, Some(&a.sel), a.format, &a.common)
        },
        Command::Sweep(a) => RunConfig {
            strategy: a.strategy.into(),
            ..base(CommandKind::Sweep, None, a.format, &a.common)
        },
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_groups(cfg: &RunConfig, args: &GroupsArgs) -> Result<(), Failure> {
    let families = family_catalog();
    let members: Vec<GroupSpec> = cfg
        .p
        .map(|p| catalog(p, args.max_order))
        .unwrap_or_default();
    let text = if cfg.format == Format::Json {
        let fams: Vec<serde_json::Value> = families
            .iter()
            .map(|f| {
                serde_json::json!({
                    "family": f.family, "syntax": f.syntax, "parameters": f.parameters, "example": f.example
                })
            })
            .collect();
        let mems: Vec<serde_json::Value> = members
            .iter()
            .map(|s| serde_json::json!({"spec": s.to_string(), "name": s.short_name(), "order": s.order().ok()}))
            .collect();
        json(&serde_json::json!({"families": fams, "catalog": mems}))
    } else {
        let mut t = String::new();
        for f in &families {
            let _ = writeln!(
                t,
                "{:<15} {:<28} {:<44} e.g. {}",
                f.family, f.syntax, f.parameters, f.example
            );
        }
        for s in &members {
            let _ = writeln!(
                t,
                "{:<5} {:<16} {}",
                s.order().unwrap_or(0),
                s.short_name(),
                s
            );
        }
        t
    };
    cfg.emit(&text)
}

fn cmd_irr(cfg: &RunConfig, args: &IrrArgs) -> Result<(), Failure> {
    let (atlas, _) = cfg.atlas()?;
    let ids: Vec<usize> = if args.subgroups {
        (0..atlas.len()).collect()
    } else {
        vec![atlas.whole_id()]
    };
    cfg.emit(&json(&character_tables(&atlas, &ids)))
}

fn cmd_poset(cfg: &RunConfig) -> Result<(), Failure> {
    let (atlas, p) = cfg.atlas()?;
    let gamma = build_nodes(&atlas, p, cfg.e.expect("validated"))?;
    let graph = PosetGraph::build(&gamma, cfg.strategy)?;
    let part = graph.partition();
    println!("components: {}", part.count);
    if let Some(path) = &cfg.out {
        let text = match cfg.format {
            Format::Dot => poset_dot(&gamma, &graph, &part),
            _ => json(&poset_export(&gamma, &graph, &part)),
        };
        std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn parse_node(s: &str) -> Result<PosetNode, Failure> {
    let bad = || Failure::input(format!("bad endpoint {s:?}; expected H:chi such as 3:1"));
    let (h, c) = s.trim().split_once(':').ok_or_else(bad)?;
    let h = h.trim().trim_start_matches('H');
    let c = c.trim().trim_start_matches("chi").trim_start_matches('χ');
    Ok(PosetNode {
        subgroup: h.parse().map_err(|_| bad())?,
        character: c.parse().map_err(|_| bad())?,
    })
}

fn cmd_witness(cfg: &RunConfig, args: &WitnessArgs) -> Result<(), Failure> {
    let (a, b) = args
        .endpoints
        .split_once(',')
        .ok_or_else(|| Failure::input("--endpoints needs two nodes separated by a comma"))?;
    let (a, b) = (parse_node(a)?, parse_node(b)?);
    let (atlas, p) = cfg.atlas()?;
    let gamma = build_nodes(&atlas, p, cfg.e.expect("validated"))?;
    gamma.check_node(a)?;
    gamma.check_node(b)?;
    let (route, chain) = match witness_between(&gamma, a, b) {
        Ok(chain) => ("theorem", chain),
        Err(PosetError::PreconditionFailed(msg)) => {
            // the theorem route needs a shared constituent on I; fall back to a
            // graph path when the endpoints are connected some other way
            let graph = PosetGraph::build(&gamma, cfg.strategy)?;
            match graph_path(&gamma, &graph, a, b)? {
                Some(chain) => ("graph", chain),
                None => {
                    return Err(Failure {
                        code: EXIT_WITNESS,
                        message: format!(
                            "precondition failed: {msg}; endpoints lie in different components"
                        ),
                    })
                }
            }
        }
        Err(e) => return Err(e.into()),
    };
    let links = validate_chain(&gamma, &chain)?;
    let valid = links.iter().all(|&ok| ok);
    let text = if cfg.format == Format::Json {
        json(&ChainExport {
            route,
            chain: &chain,
            links_valid: links,
            valid,
        })
    } else {
        let mut t = format!("route: {route}\nnodes: {}\n", chain.len());
        let label = |n: PosetNode| format!("H{}:χ{}", n.subgroup, n.character);
        t.push_str(&label(chain.first()));
        t.push('\n');
        for ((w, d), ok) in chain.nodes.windows(2).zip(&chain.directions).zip(&links) {
            let rel = match d {
                charposet::poset::Direction::Up => "≤",
                charposet::poset::Direction::Down => "≥",
            };
            let _ = writeln!(
                t,
                "{rel} {}  [{}]",
                label(w[1]),
                if *ok { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(t, "valid: {valid}");
        t
    };
    cfg.emit(&text)?;
    if valid {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_INTERNAL,
            message: "chain failed link verification".into(),
        })
    }
}

fn emit_outcome(cfg: &RunConfig, outcome: &SweepOutcome) -> Result<(), Failure> {
    let text = if cfg.format == Format::Csv {
        reports_csv(&outcome.reports).map_err(|e| Failure {
            code: EXIT_INTERNAL,
            message: e.to_string(),
        })?
    } else {
        json(&serde_json::json!({
            "reports": outcome.reports,
            "errors": outcome.errors,
            "violations": outcome.violations(),
        }))
    };
    cfg.emit(&text)?;
    for e in &outcome.errors {
        eprintln!("{} (e = {:?}): {}", e.group, e.e, e.error);
    }
    let worst = outcome
        .errors
        .iter()
        .map(|e| match e.kind {
            ItemKind::Input => EXIT_INPUT,
            ItemKind::Domain => EXIT_DOMAIN,
            ItemKind::Violation | ItemKind::Internal => EXIT_INTERNAL,
        })
        .chain(
            outcome
                .reports
                .iter()
                .filter(|r| !r.ok())
                .map(|_| EXIT_INTERNAL),
        )
        .max();
    match worst {
        None => Ok(()),
        Some(code) => Err(Failure {
            code,
            message: format!("{} violation(s)", outcome.violations()),
        }),
    }
}

fn cmd_verify(cfg: &RunConfig) -> Result<(), Failure> {
    let g = cfg.load_group()?;
    if cfg.p.is_some() {
        cfg.prime(&g)?;
    }
    let outcome = verify_group(g, &cfg.limits, cfg.strategy, cfg.e);
    emit_outcome(cfg, &outcome)
}

fn cmd_sweep(cfg: &RunConfig, args: &SweepArgs) -> Result<(), Failure> {
    let primes = if args.p.is_empty() {
        vec![2, 3, 5]
    } else {
        args.p.clone()
    };
    let mut specs = Vec::new();
    for p in primes {
        let max = args.max_order.unwrap_or(match p {
            2 => 64,
            3 => 81,
            5 => 25,
            _ => p * p,
        });
        let found = catalog(p, max);
        if found.is_empty() && max >= p {
            return Err(Failure::input(format!("{p} is not a prime")));
        }
        specs.extend(found);
    }
    let outcome = sweep(&specs, &cfg.limits, cfg.strategy);
    emit_outcome(cfg, &outcome)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = config(&cli.command);
    cfg.validate()?;
    match &cli.command {
        Command::Groups(a) => cmd_groups(&cfg, a),
        Command::Irr(a) => cmd_irr(&cfg, a),
        Command::Poset(_) => cmd_poset(&cfg),
        Command::Witness(a) => cmd_witness(&cfg, a),
        Command::Verify(_) => cmd_verify(&cfg),
        Command::Sweep(a) => cmd_sweep(&cfg, a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
