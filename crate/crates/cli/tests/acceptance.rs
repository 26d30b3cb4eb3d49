//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use cdlat_core::verify::EntryAnalysis;
use cdlat_core::{
    analyze_catalog, build_catalog, build_group, check_theorem_b, enumerate_subgroups,
    verify_cd_properties, verify_lemma_2_1, verify_theorem_1_1, verify_theorem_a, Catalog,
    GroupSpec, Outcome, NO_QUATERNIONS,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn names(set: &[&str]) -> BTreeSet<String> {
    set.iter().map(|s| s.to_string()).collect()
}

fn with_deficiency(analyses: &[EntryAnalysis], k: usize) -> BTreeSet<String> {
    analyses
        .iter()
        .filter(|a| a.report.deficiency() == k)
        .map(|a| a.name.clone())
        .collect()
}

fn full_catalog() -> Catalog {
    build_catalog(15, 3..=6).expect("catalog builds")
}

fn classification() -> Check {
    let start = Instant::now();
    let cat = build_catalog(15, NO_QUATERNIONS).map_err(|e| e.to_string())?;
    ensure(cat.len() == 28, || {
        format!("{} entries, expected 28", cat.len())
    })?;
    let analyses = analyze_catalog(&cat).map_err(|e| e.to_string())?;
    let k1 = with_deficiency(&analyses, 1);
    let k2 = with_deficiency(&analyses, 2);
    ensure(
        k1 == names(&["Z2", "Z3", "Z5", "Z7", "Z11", "Z13", "Q8"]),
        || format!("k=1 set {k1:?}"),
    )?;
    ensure(k2 == names(&["Z4", "Z9"]), || format!("k=2 set {k2:?}"))?;
    let fails: Vec<String> = verify_theorem_1_1(&analyses)
        .into_iter()
        .filter(|r| r.is_fail())
        .map(|r| r.line())
        .collect();
    ensure(fails.is_empty(), || fails.join("; "))?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("k=1 {k1:?}, k=2 {k2:?} in {t:?}"))
}

fn quaternion_lemma() -> Check {
    let start = Instant::now();
    let expected_star = [(3u32, 16u64), (4, 64), (5, 256), (6, 1024)];
    for (n, star) in expected_star {
        let rec = verify_lemma_2_1(n).map_err(|e| e.to_string())?;
        ensure(rec.outcome == Outcome::Pass, || rec.line())?;
        ensure(rec.numbers["m_star"] == star as i64, || rec.line())?;

        let g = build_group(&GroupSpec::quaternion(n)).map_err(|e| e.to_string())?;
        let report = cdlat_core::cd_report(&g).map_err(|e| e.to_string())?;
        let cd: BTreeSet<u64> = report
            .cd_members()
            .iter()
            .map(|&i| report.lattice().subgroups()[i].mask())
            .collect();
        let half = 1usize << (n - 1);
        let gen = |x: usize| g.generated_mask(1 << x);
        let expected: BTreeSet<u64> = if n == 3 {
            let (a, b) = (1, half);
            [
                g.full_mask(),
                gen(a),
                gen(b),
                gen(g.mul(a, b)),
                gen(g.mul(a, a)),
            ]
            .into()
        } else {
            [gen(1)].into()
        };
        ensure(report.m_star() == star, || {
            format!("m*(Q{}) = {}", 1 << n, report.m_star())
        })?;
        ensure(cd == expected, || format!("CD(Q{}) = {cd:x?}", 1 << n))?;
        ensure(n > 3 || cd.len() == 5, || "|CD(Q8)| != 5".into())?;
        ensure(report.deficiency() != 2, || {
            format!("deficiency(Q{}) = 2", 1 << n)
        })?;
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("m* = 16, 64, 256, 1024; CD sets match in {t:?}"))
}

fn cd_properties(analyses: &[EntryAnalysis]) -> Check {
    let mut checked = 0;
    for a in analyses {
        let records = verify_cd_properties(&a.report, &a.name);
        let passes = records
            .iter()
            .filter(|r| r.outcome == Outcome::Pass)
            .count();
        if let Some(r) = records.iter().find(|r| r.is_fail()) {
            return Err(r.line());
        }
        ensure(passes == 6, || {
            format!("{}: {passes} of 6 checks passed", a.name)
        })?;
        checked += passes;
    }
    Ok(format!("{checked} checks over {} groups", analyses.len()))
}

fn image_bound(analyses: &[EntryAnalysis]) -> Check {
    for a in analyses {
        let r = check_theorem_b(&a.report, &a.profile, &a.name);
        ensure(!r.is_fail(), || r.line())?;
    }
    for (name, image, bound) in [("S3", 3, 3), ("Q8", 2, 2), ("Z4", 3, 3)] {
        let a = analyses.iter().find(|a| a.name == name).unwrap();
        let got = (a.report.measure_image().len() as u64, a.profile.bound);
        ensure(got == (image, bound), || format!("{name}: {got:?}"))?;
    }
    Ok(format!(
        "{} groups; S3 3>=3, Q8 2>=2, Z4 3>=3",
        analyses.len()
    ))
}

fn unique_subgroup_criterion(analyses: &[EntryAnalysis]) -> Check {
    let records = verify_theorem_a(analyses);
    if let Some(r) = records.iter().find(|r| r.is_fail()) {
        return Err(r.line());
    }
    for q in ["Q16", "Q32", "Q64"] {
        let subject = format!("theorem-a {q}");
        ensure(records.iter().any(|r| r.subject == subject), || {
            format!("{q} not checked")
        })?;
    }
    Ok(format!("{} p-groups", records.len()))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let cat = build_catalog(12, NO_QUATERNIONS).map_err(|e| e.to_string())?;
    for e in cat.entries() {
        let lat = enumerate_subgroups(&e.table).map_err(|e| e.to_string())?;
        let got: Vec<u64> = lat.subgroups().iter().map(|s| s.mask()).collect();
        ensure(got == common::brute_force_subgroups(&e.table), || {
            format!("{} differs from the subset oracle", e.name)
        })?;
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} groups in {t:?}", cat.len()))
}

fn nontriviality(analyses: &[EntryAnalysis]) -> Check {
    for a in analyses {
        let k = a.report.deficiency();
        let order = a.report.group().order();
        ensure((order == 1) == (k == 0), || {
            format!("{} (order {order}) has deficiency {k}", a.name)
        })?;
    }
    Ok(format!("{} groups", analyses.len()))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cdlat"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited {:?}", out.status.code())
    })?;
    Ok(out.stdout)
}

fn determinism() -> Check {
    let invocations: [&[&str]; 6] = [
        &["verify", "--max-order", "15"],
        &["analyze", "dicyclic:2"],
        &["analyze", "a4", "--json"],
        &["export", "dihedral:4"],
        &["export", "dicyclic:4", "--highlight-cd"],
        &["catalog"],
    ];
    for args in invocations {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure(first == second, || {
            format!("{args:?} output differs between runs")
        })?;
    }
    Ok(format!("{} invocations byte-identical", invocations.len()))
}

fn main() {
    let cat = full_catalog();
    let analyses = analyze_catalog(&cat).expect("catalog analyzes");

    let results: Vec<(&str, Check)> = vec![
        ("AC1 classification of deficiency 1 and 2", classification()),
        ("AC2 quaternion measures and CD sets", quaternion_lemma()),
        ("AC3 CD property suite", cd_properties(&analyses)),
        ("AC4 measure image bound", image_bound(&analyses)),
        (
            "AC5 unique order-p subgroup criterion",
            unique_subgroup_criterion(&analyses),
        ),
        ("AC6 enumeration equals subset oracle", oracle_equivalence()),
        (
            "AC7 nontrivial groups have deficiency >= 1",
            nontriviality(&analyses),
        ),
        ("AC8 byte-stable CLI output", determinism()),
    ];

    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {name}: {reason}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
