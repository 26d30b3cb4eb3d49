//! Exhaustive checks of the classification results over a catalog.
//!
//! Every check is evidence over the finite catalog only; record subjects say
//! "verified over catalog", never "proved".

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::catalog::{fingerprint, Catalog, CLASSIFICATION_COUNTS, MAX_BUILTIN_ORDER};
use crate::chermak_delgado::{
    cd_report, check_theorem_b, sylow_center_profile, verify_cd_properties, CdReport,
    SylowCenterProfile,
};
use crate::construct::{build_group, GroupSpec};
use crate::error::{Error, Result};
use crate::identify::{identify_group, GroupLabel};
use crate::record::VerificationRecord;

/// Everything computed once per catalog entry.
#[derive(Clone, Debug)]
pub struct EntryAnalysis {
    pub name: String,
    pub label: GroupLabel,
    pub report: CdReport,
    pub profile: SylowCenterProfile,
}

pub fn analyze_catalog(cat: &Catalog) -> Result<Vec<EntryAnalysis>> {
    cat.entries()
        .par_iter()
        .map(|e| {
            let report = cd_report(&e.table)?;
            let profile = sylow_center_profile(&e.table, report.lattice())?;
            Ok(EntryAnalysis {
                name: e.name.clone(),
                label: identify_group(&e.table),
                report,
                profile,
            })
        })
        .collect()
}

fn names<'a>(it: impl Iterator<Item = &'a EntryAnalysis>) -> Vec<String> {
    it.map(|a| a.name.clone()).collect()
}

fn set_record(subject: String, expected: &[String], actual: &[String]) -> VerificationRecord {
    let e: BTreeSet<&String> = expected.iter().collect();
    let a: BTreeSet<&String> = actual.iter().collect();
    let mut witnesses: Vec<String> = a
        .difference(&e)
        .map(|n| format!("unexpected {n}"))
        .collect();
    witnesses.extend(e.difference(&a).map(|n| format!("missing {n}")));
    VerificationRecord::from_witnesses(subject, witnesses).with_number("count", actual.len())
}

/// Deficiency 1 exactly for `Z_p` and `Q8`, deficiency 2 exactly for `Z_{p^2}`,
/// deficiency 0 exactly for the trivial group.
pub fn verify_theorem_1_1(analyses: &[EntryAnalysis]) -> Vec<VerificationRecord> {
    let predicted = |label: &GroupLabel| -> Option<usize> {
        match *label {
            GroupLabel::Trivial => Some(0),
            GroupLabel::Cyclic { order, .. } if is_prime(order as u64) => Some(1),
            GroupLabel::GeneralizedQuaternion { order: 8, .. } => Some(1),
            GroupLabel::Cyclic { order, .. } => match prime_power(order as u64) {
                Some((_, 2)) => Some(2),
                _ => None,
            },
            _ => None,
        }
    };

    let mut out: Vec<VerificationRecord> = analyses
        .iter()
        .map(|a| {
            let k = a.report.deficiency();
            let ok = match predicted(&a.label) {
                Some(p) => k == p,
                None => k >= 3,
            };
            VerificationRecord::check(format!("theorem-1.1 {}", a.name), ok, || {
                format!("{} ({}) has deficiency {k}", a.name, a.label)
            })
            .with_number("deficiency", k)
            .with_number("subgroups", a.report.lattice().len())
            .with_number("cd_size", a.report.cd_members().len())
        })
        .collect();

    for k in [0usize, 1, 2] {
        let actual = names(analyses.iter().filter(|a| a.report.deficiency() == k));
        let expected = names(analyses.iter().filter(|a| predicted(&a.label) == Some(k)));
        out.push(set_record(
            format!(
                "theorem-1.1 k={k} set {{{}}} verified over catalog",
                actual.join(",")
            ),
            &expected,
            &actual,
        ));
    }
    out
}

/// `m*(Q_{2^n}) = 2^{2n-2}`; CD(Q8) is `{<a^2>, <a>, <b>, <ab>, Q8}`; CD(Q_{2^n}) is
/// `{<a>}` for `n >= 4`; the deficiency is never 2.
pub fn verify_lemma_2_1(n: u32) -> Result<VerificationRecord> {
    if !(3..=6).contains(&n) {
        return Err(Error::QuaternionOutOfRange(n));
    }
    let g = build_group(&GroupSpec::quaternion(n))?;
    let report = cd_report(&g)?;
    let lat = report.lattice();
    let half = 1usize << (n - 1);
    let (a, b) = (1usize, half);
    let cyclic = |x: usize| g.generated_mask(1 << x);

    let expected_star = 1u64 << (2 * n - 2);
    let expected_cd: BTreeSet<u64> = if n == 3 {
        [
            cyclic(2),
            cyclic(a),
            cyclic(b),
            cyclic(g.mul(a, b)),
            g.full_mask(),
        ]
        .into()
    } else {
        [cyclic(a)].into()
    };
    let actual_cd: BTreeSet<u64> = report
        .cd_members()
        .iter()
        .map(|&i| lat.subgroups()[i].mask())
        .collect();

    let mut witnesses = Vec::new();
    if report.m_star() != expected_star {
        witnesses.push(format!("m* = {} != {expected_star}", report.m_star()));
    }
    if actual_cd != expected_cd {
        witnesses.push(format!("CD = {actual_cd:x?}, expected {expected_cd:x?}"));
    }
    if report.deficiency() == 2 {
        witnesses.push("deficiency 2".into());
    }
    Ok(
        VerificationRecord::from_witnesses(format!("lemma-2.1 Q{}", 1 << n), witnesses)
            .with_number("m_star", report.m_star())
            .with_number("cd_size", report.cd_members().len())
            .with_number("subgroups", lat.len())
            .with_number("deficiency", report.deficiency()),
    )
}

/// For `p`-groups: a unique subgroup of order `p` iff cyclic or generalized
/// quaternion, and the number of order-`p` subgroups is `1 mod p`.
pub fn verify_theorem_a(analyses: &[EntryAnalysis]) -> Vec<VerificationRecord> {
    analyses
        .iter()
        .filter_map(|a| {
            let (p, _) = prime_power(a.report.group().order() as u64)?;
            let count = a.report.lattice().count_of_size(p as usize);
            let special = a.label.is_cyclic() || a.label.is_quaternion();
            let mut witnesses = Vec::new();
            if (count == 1) != special {
                witnesses.push(format!(
                    "{} ({}) has {count} subgroups of order {p}",
                    a.name, a.label
                ));
            }
            if count as u64 % p != 1 {
                witnesses.push(format!("{count} subgroups of order {p} is not 1 mod {p}"));
            }
            Some(
                VerificationRecord::from_witnesses(format!("theorem-a {}", a.name), witnesses)
                    .with_number("p", p)
                    .with_number("order_p_subgroups", count),
            )
        })
        .collect()
}

/// Per-order entry counts match the classification and no two entries of the
/// same order share a fingerprint.
pub fn verify_catalog(cat: &Catalog) -> Result<VerificationRecord> {
    let counts = cat.counts_by_order();
    let mut witnesses = Vec::new();
    let covered = cat.max_order().min(MAX_BUILTIN_ORDER);
    for (i, &expected) in CLASSIFICATION_COUNTS.iter().enumerate().take(covered) {
        let order = i + 1;
        let got = counts.get(&order).copied().unwrap_or(0);
        if got != expected {
            witnesses.push(format!("order {order}: {got} entries, expected {expected}"));
        }
    }
    let prints = cat
        .entries()
        .iter()
        .map(|e| fingerprint(&e.table))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..prints.len() {
        for j in i + 1..prints.len() {
            if prints[i] == prints[j] {
                witnesses.push(format!(
                    "{} and {} share a fingerprint",
                    cat.entries()[i].name,
                    cat.entries()[j].name
                ));
            }
        }
    }
    Ok(
        VerificationRecord::from_witnesses("catalog completeness", witnesses)
            .with_number("entries", cat.len()),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub records: Vec<VerificationRecord>,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.is_fail()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// One record per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.line());
            out.push('\n');
        }
        out
    }
}

/// Runs every check: catalog completeness, the classification, the quaternion
/// lemma for each `n` in `lemma_range`, the unique-subgroup criterion, the CD
/// property suite and the image-size bound.
pub fn verify_all(cat: &Catalog, lemma_range: RangeInclusive<u32>) -> Result<Summary> {
    let analyses = analyze_catalog(cat)?;
    let mut records = vec![verify_catalog(cat)?];
    records.extend(verify_theorem_1_1(&analyses));
    for n in lemma_range {
        records.push(verify_lemma_2_1(n)?);
    }
    records.extend(verify_theorem_a(&analyses));
    let per_entry: Vec<Vec<VerificationRecord>> = analyses
        .par_iter()
        .map(|a| {
            let mut v = verify_cd_properties(&a.report, &a.name);
            v.push(check_theorem_b(&a.report, &a.profile, &a.name));
            v
        })
        .collect();
    records.extend(per_entry.into_iter().flatten());
    Ok(Summary { records })
}
