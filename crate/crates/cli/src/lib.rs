//! Command implementations for the `cdlat` binary. Every command renders to a
//! `String` so output can be compared byte for byte.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use cdlat_core::{
    build_catalog_with_extras, build_group, cd_report, check_theorem_b, identify_group,
    load_cayley_file, load_extra_dir, sylow_center_profile, verify_all, Error, GroupSpec,
    GroupTable,
};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "cdlat",
    version,
    about = "Subgroup and Chermak-Delgado lattices of small finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print measures, CD(G), deficiency and the Sylow center profile of one group.
    Analyze {
        /// Built-in spec (`cyclic:12`, `dicyclic:4`, `product:cyclic:2,cyclic:4`, ...) or a Cayley table file.
        source: String,
        #[arg(long)]
        json: bool,
    },
    /// Run every check over the catalog; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        /// Inclusive range of n for Q_{2^n}, e.g. `3..6`.
        #[arg(long, default_value = "3..6", value_parser = parse_range)]
        quaternions: RangeInclusive<u32>,
        /// Directory of extra Cayley table files.
        #[arg(long)]
        extra: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Emit the Hasse diagram of L(G) in DOT format.
    Export {
        source: String,
        #[arg(long)]
        highlight_cd: bool,
    },
    /// List catalog entries with their deficiencies.
    Catalog {
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        #[arg(long, default_value = "3..6", value_parser = parse_range)]
        quaternions: RangeInclusive<u32>,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok(num(a)?..=num(b)?)
}

/// Rendered output plus whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub success: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            success: true,
        }
    }
}

const SPEC_KINDS: [&str; 7] = [
    "cyclic",
    "dihedral",
    "dicyclic",
    "a4",
    "alternating4",
    "product",
    "file",
];

/// Built-in spec when the prefix names a known kind, otherwise a file path.
pub fn resolve_source(source: &str) -> Result<GroupTable, Error> {
    let kind = source.split(':').next().unwrap_or_default();
    if SPEC_KINDS.contains(&kind) {
        build_group(&source.parse::<GroupSpec>()?)
    } else {
        load_cayley_file(Path::new(source))
    }
}

pub fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Analyze { source, json } => analyze(source, *json).map(Output::ok),
        Command::Export {
            source,
            highlight_cd,
        } => {
            let report = cd_report(&resolve_source(source)?)?;
            Ok(Output::ok(report.to_dot(*highlight_cd)))
        }
        Command::Verify {
            max_order,
            quaternions,
            extra,
            json,
        } => verify(*max_order, quaternions.clone(), extra.as_deref(), *json),
        Command::Catalog {
            max_order,
            quaternions,
        } => catalog(*max_order, quaternions.clone()).map(Output::ok),
    }
}

pub fn analyze(source: &str, json: bool) -> Result<String, Error> {
    let g = resolve_source(source)?;
    let report = cd_report(&g)?;
    if json {
        let mut s = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
        s.push('\n');
        return Ok(s);
    }
    let lat = report.lattice();
    let profile = sylow_center_profile(&g, lat)?;
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");

    let mut out = String::new();
    let _ = writeln!(out, "group: {source}");
    let _ = writeln!(out, "identified as: {}", identify_group(&g));
    let _ = writeln!(out, "|G| = {}", g.order());
    let _ = writeln!(out, "|L(G)| = {}", lat.len());
    let _ = writeln!(out, "m*(G) = {}", report.m_star());
    let _ = writeln!(out, "|CD(G)| = {}", report.cd_members().len());
    let _ = writeln!(out, "deficiency = {}", report.deficiency());
    let _ = writeln!(out, "Im(m_G) = {{{}}}", list(report.measure_image()));
    let _ = writeln!(out, "CD members:");
    for &i in report.cd_members() {
        let h = lat.subgroups()[i];
        let _ = writeln!(
            out,
            "  H{i}\tsize {}\tmeasure {}\tmask {:#x}",
            h.size(),
            report.measures()[i],
            h.mask()
        );
    }
    for (label, i) in [
        ("M(G)", report.min_member()),
        ("max member", report.max_member()),
    ] {
        let _ = writeln!(out, "{label}: H{i} (size {})", lat.subgroups()[i].size());
    }
    let entries: Vec<String> = profile
        .entries
        .iter()
        .map(|(p, n)| format!("p={p} n_p={n}"))
        .collect();
    let _ = writeln!(out, "Sylow centers: {}", entries.join(", "));
    let image = report.measure_image().len() as i64;
    let _ = writeln!(
        out,
        "|Im(m_G)| = {image} >= 1 + sum n_p = {} (margin {})",
        profile.bound,
        image - profile.bound as i64
    );
    debug_assert!(!check_theorem_b(&report, &profile, source).is_fail());
    Ok(out)
}

pub fn verify(
    max_order: usize,
    quaternions: RangeInclusive<u32>,
    extra: Option<&Path>,
    json: bool,
) -> Result<Output, Error> {
    let extras = match extra {
        Some(dir) => load_extra_dir(dir)?,
        None => Vec::new(),
    };
    let cat = build_catalog_with_extras(max_order, quaternions.clone(), extras)?;
    let summary = verify_all(&cat, quaternions)?;
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&summary).expect("summary serializes");
        s.push('\n');
        s
    } else {
        let mut s = summary.to_text();
        let _ = writeln!(
            s,
            "# records={} failures={}",
            summary.records.len(),
            summary.failures()
        );
        s
    };
    Ok(Output {
        stdout,
        success: summary.passed(),
    })
}

pub fn catalog(max_order: usize, quaternions: RangeInclusive<u32>) -> Result<String, Error> {
    let cat = build_catalog_with_extras(max_order, quaternions, Vec::new())?;
    let mut out = String::from("name\torder\tspec\tlabel\tsubgroups\tdeficiency\n");
    for e in cat.entries() {
        let r = cd_report(&e.table)?;
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            e.name,
            e.table.order(),
            e.spec,
            identify_group(&e.table),
            r.lattice().len(),
            r.deficiency()
        );
    }
    Ok(out)
}
