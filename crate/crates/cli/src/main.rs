//! Command-line front end: every computation is exposed as a subcommand
//! with deterministic markdown, CSV and JSON output.
//!
//! Exit codes: 0 on success, 1 when a reported check fails, 2 on usage
//! errors.

use brauerlab_cli::envelope;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use brauerlab::blocks::{
    alt_covering, blocks_of_sym, blocks_of_weyl_b, defect_group_order_sym, feit_bound, Family,
};
use brauerlab::brauer::{enumerate_sc_candidates, orbit_analysis};
use brauerlab::clifford::{AbelianGroup, KernelAction};
use brauerlab::group::{EnumBudget, PermGroup};
use brauerlab::modrep::{
    endo_but_not_auto_check, group_algebra_autos_cyclic, module_isomorphic, pair_equivalent,
    s6_twist, PrimeFieldMatrix,
};
use brauerlab::perm::{parse_permutation, Permutation};
use brauerlab::sylow::{centralizer_profile, sylow_alt_generators, sylow_sym_generators};
use brauerlab::weyl::{base_selfcentralizing_check, weyl_b, weyl_d, WeylVariant};

use envelope::{Format, OutputEnvelope};

#[derive(Parser)]
#[command(
    name = "brauerlab",
    about = "Sylow constructions, block combinatorics and self-centralizing subgroup tables for symmetric-group-like families",
    version
)]
struct Cli {
    /// Output format: md, csv or json.
    #[arg(long, global = true, default_value = "md")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of the fixed Sylow p-subgroup of the symmetric group on
    /// n points, or of the alternating group with --alternating.
    Sylow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        alternating: bool,
    },
    /// Centralizer structure of the alternating Sylow 2-subgroup for even n.
    CentralizerProfile {
        #[arg(long)]
        n: usize,
    },
    /// Block labels: family sym, alt or weylb.
    Blocks {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
    },
    /// The defect-order bound for one family at one vertex order.
    Bounds {
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        qorder: u128,
    },
    /// Self-centralizing candidate table for weight-w blocks of the
    /// alternating group on n points.
    BrauerEnum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        w: u32,
    },
    /// Orbit structure of a 2-subgroup given by generators.
    OrbitAnalysis {
        /// A generator in cycle notation; repeatable.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Fixed verification cases for the matrix-representation toolkit.
    ModrepCheck {
        /// s6-twist or fc3-autos.
        #[arg(long)]
        case: String,
    },
    /// The hyperoctahedral groups and their base-group checks.
    Weyl {
        /// B or D.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        n: usize,
        /// Run a named check: base-centralizer.
        #[arg(long)]
        check: Option<String>,
    },
    /// Inertia inventory of a coordinate-permutation action on an abelian
    /// kernel.
    Clifford {
        /// Invariant factors of the kernel, comma-separated, e.g. 2,2.
        #[arg(long = "H")]
        kernel: String,
        /// A generator of the acting group in cycle notation over the
        /// factor indices; repeatable.
        #[arg(long = "U-perm", required = true)]
        u_perms: Vec<String>,
        #[arg(long)]
        p: u64,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn budget_from_env() -> EnumBudget {
    match std::env::var("BRAUERLAB_BUDGET") {
        Ok(text) => match text.parse::<usize>() {
            Ok(max_subgroups) => EnumBudget { max_subgroups },
            Err(_) => EnumBudget::default(),
        },
        Err(_) => EnumBudget::default(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(format) = Format::parse(&cli.format) else {
        return usage_error(&format!("unknown format {:?}", cli.format));
    };
    let envelope = match run(&cli.command) {
        Ok(envelope) => envelope,
        Err(message) => return usage_error(&message),
    };
    let rendered = match format {
        Format::Json => envelope.to_json(),
        Format::Csv => envelope.to_csv(),
        Format::Md => match line_oriented_markdown(&envelope) {
            Some(text) => text,
            None => envelope.to_markdown(),
        },
    };
    print!("{rendered}");
    if envelope.all_checks_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// The sylow and weyl commands print generators one per line plus an order
/// line; everything else uses the generic table rendering.
fn line_oriented_markdown(envelope: &OutputEnvelope) -> Option<String> {
    if envelope.command != "sylow" && envelope.command != "weyl" {
        return None;
    }
    let mut out = String::new();
    for row in &envelope.rows {
        out.push_str(&row[0]);
        out.push('\n');
    }
    for (key, value) in &envelope.summary {
        out.push_str(&format!("{key} {value}\n"));
    }
    for check in &envelope.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{status}] {}: {}\n", check.name, check.detail));
    }
    Some(out)
}

fn run(command: &Command) -> Result<OutputEnvelope, String> {
    match command {
        Command::Sylow { n, p, alternating } => sylow_command(*n, *p, *alternating),
        Command::CentralizerProfile { n } => profile_command(*n),
        Command::Blocks { family, n, p } => blocks_command(family, *n, *p),
        Command::Bounds { family, p, qorder } => bounds_command(family, *p, *qorder),
        Command::BrauerEnum { n, w } => brauer_command(*n, *w),
        Command::OrbitAnalysis { gens, degree } => orbit_command(gens, *degree),
        Command::ModrepCheck { case } => modrep_command(case),
        Command::Weyl { ty, n, check } => weyl_command(ty, *n, check.as_deref()),
        Command::Clifford { kernel, u_perms, p } => clifford_command(kernel, u_perms, *p),
    }
}

fn sylow_command(n: usize, p: usize, alternating: bool) -> Result<OutputEnvelope, String> {
    if n == 0 || n > 64 {
        return Err("n must be in 1..=64".into());
    }
    if alternating && p != 2 {
        return Err("the alternating construction is specific to p = 2".into());
    }
    let gens = if alternating {
        sylow_alt_generators(n)
    } else {
        sylow_sym_generators(n, p)
    };
    let group = PermGroup::generate(n.max(1), &gens).map_err(|e| e.to_string())?;
    let mut envelope = OutputEnvelope::new("sylow");
    envelope
        .param("n", n)
        .param("p", p)
        .param("alternating", alternating);
    envelope.columns = vec!["generator".to_string()];
    envelope.rows = gens.iter().map(|g| vec![g.to_string()]).collect();
    envelope.summarize("order", group.order());
    Ok(envelope)
}

fn profile_command(n: usize) -> Result<OutputEnvelope, String> {
    if n < 4 || n % 2 != 0 {
        return Err("the profile needs an even n >= 4".into());
    }
    if n > 16 {
        return Err("the profile is built for n <= 16".into());
    }
    let profile = centralizer_profile(n);
    let mut envelope = OutputEnvelope::new("centralizer-profile");
    envelope.param("n", n);
    envelope.columns = vec!["group".to_string(), "order".to_string()];
    envelope.rows = vec![
        vec!["C_Sym(Q_n)".into(), profile.sym_centralizer.order().to_string()],
        vec!["C_Alt(Q_n)".into(), profile.alt_centralizer.order().to_string()],
        vec!["Z(Q_n)".into(), profile.center_sylow_alt.order().to_string()],
        vec!["Z(P_n)".into(), profile.center_sylow_sym.order().to_string()],
    ];
    envelope.summarize("case", format!("n = {} mod 4", profile.case_mod_four));
    for check in &profile.checks {
        envelope.check(&check.name, check.holds, "");
    }
    Ok(envelope)
}

fn blocks_command(family: &str, n: u32, p: u32) -> Result<OutputEnvelope, String> {
    let mut envelope = OutputEnvelope::new("blocks");
    envelope.param("family", family).param("n", n).param("p", p);
    match family.to_ascii_lowercase().as_str() {
        "sym" => {
            envelope.columns = ["core", "weight", "defect_order"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            for label in blocks_of_sym(n, p) {
                envelope.rows.push(vec![
                    label.core.to_string(),
                    label.weight.to_string(),
                    defect_group_order_sym(label.weight, p).to_string(),
                ]);
            }
        }
        "alt" => {
            if p != 2 {
                return Err("alt covering data is a p = 2 computation".into());
            }
            envelope.columns = ["core", "weight", "split", "defect_zero", "defect_order"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            for label in blocks_of_sym(n, p) {
                let covering = alt_covering(&label);
                envelope.rows.push(vec![
                    label.core.to_string(),
                    label.weight.to_string(),
                    covering.split.to_string(),
                    covering.defect_zero.to_string(),
                    covering.defect_group_order.to_string(),
                ]);
            }
        }
        "weylb" => {
            envelope.columns = ["core0", "weight0", "core1", "weight1", "defect_order"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            for label in blocks_of_weyl_b(n, p).map_err(|e| e.to_string())? {
                envelope.rows.push(vec![
                    label.core0.to_string(),
                    label.weight0.to_string(),
                    label.core1.to_string(),
                    label.weight1.to_string(),
                    label.defect_group_order().to_string(),
                ]);
            }
        }
        other => return Err(format!("unknown block family {other:?}")),
    }
    envelope.summarize("count", envelope.rows.len());
    Ok(envelope)
}

fn bounds_command(family: &str, p: u32, qorder: u128) -> Result<OutputEnvelope, String> {
    let family = Family::parse(family).ok_or_else(|| format!("unknown family {family:?}"))?;
    let report = feit_bound(family, p, qorder).map_err(|e| e.to_string())?;
    let mut envelope = OutputEnvelope::new("bounds");
    envelope
        .param("family", format!("{:?}", report.family))
        .param("p", p)
        .param("qorder", qorder);
    envelope.columns = ["family", "p", "q_order", "formula", "bound"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    envelope.rows.push(vec![
        format!("{:?}", report.family),
        report.p.to_string(),
        report.q_order.to_string(),
        report.formula_tag.to_string(),
        report.bound.to_string(),
    ]);
    Ok(envelope)
}

fn brauer_command(n: u32, w: u32) -> Result<OutputEnvelope, String> {
    if 2 * w > n {
        return Err("a weight-w block needs n >= 2w".into());
    }
    let rows = enumerate_sc_candidates(n, w, budget_from_env()).map_err(|e| e.to_string())?;
    let mut envelope = OutputEnvelope::new("brauer-enum");
    envelope.param("n", n).param("w", w);
    envelope.columns = ["generators", "type", "|Q|", "|Z(Q)|", "x", "d"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for row in &rows {
        let gens: Vec<String> = row
            .representative
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        envelope.rows.push(vec![
            gens.join(", "),
            row.iso_hint.clone(),
            row.q_order.to_string(),
            row.z_order.to_string(),
            row.x.to_string(),
            row.d.to_string(),
        ]);
    }
    envelope.summarize("count", rows.len());
    Ok(envelope)
}

fn parse_generators(gens: &[String], degree: Option<usize>) -> Result<(usize, Vec<Permutation>), String> {
    let mut max_point = 0;
    for text in gens {
        let g: Permutation = text
            .parse()
            .map_err(|e| format!("bad generator {text:?}: {e}"))?;
        max_point = max_point.max(g.degree());
    }
    let degree = degree.unwrap_or(max_point).max(max_point).max(1);
    let parsed = gens
        .iter()
        .map(|text| parse_permutation(text, degree).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree, parsed))
}

fn orbit_command(gens: &[String], degree: Option<usize>) -> Result<OutputEnvelope, String> {
    let (degree, parsed) = parse_generators(gens, degree)?;
    let group = PermGroup::generate(degree, &parsed).map_err(|e| e.to_string())?;
    let analysis = orbit_analysis(&group);
    let mut envelope = OutputEnvelope::new("orbit-analysis");
    envelope.param("degree", degree);
    envelope.param("gens", gens.join(" "));
    envelope.columns = [
        "orbit_sizes",
        "stabilizer_orders",
        "pairwise_noniso",
        "exceptional",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let sizes: Vec<String> = analysis.orbit_sizes.iter().map(|s| s.to_string()).collect();
    let stabs: Vec<String> = analysis
        .stabilizer_orders
        .iter()
        .map(|s| s.to_string())
        .collect();
    envelope.rows.push(vec![
        format!("[{}]", sizes.join(",")),
        format!("[{}]", stabs.join(",")),
        analysis.pairwise_noniso.to_string(),
        analysis.exceptional_kind.to_string(),
    ]);
    envelope.summarize("group_order", group.order());
    Ok(envelope)
}

fn modrep_command(case: &str) -> Result<OutputEnvelope, String> {
    let mut envelope = OutputEnvelope::new("modrep-check");
    envelope.param("case", case);
    match case {
        "s6-twist" => {
            let base = s6_twist::base_module();
            let twisted = s6_twist::twisted_module();
            let not_isomorphic = module_isomorphic(&base, &twisted).is_none();
            envelope.check(
                "twisted module is not isomorphic to the base module",
                not_isomorphic,
                "exhaustive intertwiner sweep",
            );
            let equivalent = pair_equivalent(&base, &twisted).map_err(|e| e.to_string())?;
            envelope.check(
                "the two modules are equivalent up to an automorphism twist",
                equivalent,
                "automorphism backtrack",
            );
        }
        "fc3-autos" => {
            let autos = group_algebra_autos_cyclic(3);
            envelope.check(
                "the algebra has exactly 6 automorphisms over F_3",
                autos.len() == 6,
                format!("found {}", autos.len()),
            );
            let id_ok = autos
                .iter()
                .any(|a| (a.a, a.b) == (1, 0) && a.matrix == PrimeFieldMatrix::identity(3, 3));
            envelope.check("the (1,0) parameter is the identity", id_ok, "");
            let inv_ok = autos
                .iter()
                .any(|a| (a.a, a.b) == (2, 2) && a.z_image == [0, 0, 1]);
            envelope.check(
                "the (-1,-1) parameter extends the group inversion",
                inv_ok,
                "z maps to z^2",
            );
            let record = endo_but_not_auto_check();
            envelope.check(
                "-z-z^2 is an order-3 unit whose extension is a singular unital endomorphism",
                record.all_hold(),
                format!("matrix rank {}", record.matrix_rank),
            );
        }
        other => return Err(format!("unknown case {other:?}; use s6-twist or fc3-autos")),
    }
    Ok(envelope)
}

fn weyl_command(ty: &str, n: usize, check: Option<&str>) -> Result<OutputEnvelope, String> {
    let variant = match ty.to_ascii_uppercase().as_str() {
        "B" => WeylVariant::B,
        "D" => WeylVariant::D,
        other => return Err(format!("unknown type {other:?}; use B or D")),
    };
    if !(2..=16).contains(&n) {
        return Err("n must be in 2..=16".into());
    }
    let group = match variant {
        WeylVariant::B => weyl_b(n),
        WeylVariant::D => weyl_d(n),
    };
    let mut envelope = OutputEnvelope::new("weyl");
    envelope.param("type", ty).param("n", n);
    envelope.columns = vec!["generator".to_string()];
    envelope.rows = group
        .generators()
        .iter()
        .map(|g| vec![g.to_string()])
        .collect();
    envelope.summarize("order", group.order());
    match check {
        None => {}
        Some("base-centralizer") => {
            let report = base_selfcentralizing_check(n, variant);
            envelope.check(
                "the base group is self-centralizing",
                report.holds,
                format!(
                    "|C| = {}, |base| = {}",
                    report.base_centralizer.order(),
                    report.base.order()
                ),
            );
        }
        Some(other) => return Err(format!("unknown check {other:?}")),
    }
    Ok(envelope)
}

fn clifford_command(kernel: &str, u_perms: &[String], p: u64) -> Result<OutputEnvelope, String> {
    let factors: Vec<u64> = kernel
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad invariant factor {tok:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if factors.iter().any(|&m| m < 2) {
        return Err("invariant factors must be >= 2".into());
    }
    if factors.iter().product::<u64>() > 4096 {
        return Err("the kernel order must stay at most 4096".into());
    }
    let h = AbelianGroup::new(factors.clone());
    let rank = h.rank();
    let gens = u_perms
        .iter()
        .map(|text| parse_permutation(text, rank).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let acting = PermGroup::generate(rank, &gens).map_err(|e| e.to_string())?;
    let action = KernelAction::permuting_coordinates(h, acting).map_err(|e| e.to_string())?;
    let rows = action.inertia_inventory(p);
    let mut envelope = OutputEnvelope::new("clifford");
    envelope
        .param("H", kernel)
        .param("U", u_perms.join(" "))
        .param("p", p);
    envelope.columns = ["character", "inertia_order", "orbit_size"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for row in &rows {
        let values: Vec<String> = row
            .representative
            .values
            .iter()
            .map(|v| v.to_string())
            .collect();
        envelope.rows.push(vec![
            format!("({})", values.join(",")),
            row.inertia.order().to_string(),
            row.orbit_size.to_string(),
        ]);
        envelope.check(
            &format!("orbit-stabilizer identity on ({})", values.join(",")),
            action.acting.order() == row.inertia.order() * row.orbit_size as u128,
            "",
        );
    }
    envelope.summarize("orbit_count", rows.len());
    Ok(envelope)
}
