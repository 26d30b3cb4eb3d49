//! Chermak-Delgado measure and lattice.
//!
//! The measure of a subgroup `H <= G` is `|H| * |C_G(H)|`. The subgroups of
//! maximal measure form CD(G), a modular, self-dual sublattice of L(G) on
//! which `H -> C_G(H)` acts as an order-reversing involution.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{factorize, log_exact};
use crate::error::{Error, Result};
use crate::group::{GroupTable, SubgroupSet};
use crate::lattice::{enumerate_subgroups, Modularity, SubgroupLattice, Sublattice};
use crate::record::VerificationRecord;

pub fn cd_measure(g: &GroupTable, h: &SubgroupSet) -> Result<u64> {
    let c = g.centralizer(h)?;
    Ok(h.size() as u64 * c.size() as u64)
}

/// Measures of every subgroup together with the extracted CD lattice.
#[derive(Clone, Debug)]
pub struct CdReport {
    lattice: SubgroupLattice,
    measures: Vec<u64>,
    centralizers: Vec<usize>,
    m_star: u64,
    cd_members: Vec<usize>,
    measure_image: Vec<u64>,
    min_member: usize,
    max_member: usize,
    cd_closed: bool,
}

pub fn cd_report(g: &GroupTable) -> Result<CdReport> {
    CdReport::from_lattice(enumerate_subgroups(g)?)
}

impl CdReport {
    pub fn from_lattice(lattice: SubgroupLattice) -> Result<Self> {
        let g = lattice.group();
        // |G| <= 64 so the product is at most 4096.
        let mut measures = Vec::with_capacity(lattice.len());
        let mut centralizers = Vec::with_capacity(lattice.len());
        for (i, h) in lattice.subgroups().iter().enumerate() {
            let c = lattice.centralizer(i)?;
            let m = (h.size() as u64)
                .checked_mul(lattice.get(c)?.size() as u64)
                .expect("measure overflow");
            measures.push(m);
            centralizers.push(c);
        }
        debug_assert!(measures
            .iter()
            .all(|&m| m <= (g.order() * g.order()) as u64));

        let m_star = *measures.iter().max().expect("L(G) is never empty");
        let cd_members: Vec<usize> = (0..measures.len())
            .filter(|&i| measures[i] == m_star)
            .collect();
        let measure_image: Vec<u64> = measures
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let mut min_member = cd_members[0];
        let mut max_member = cd_members[0];
        for &x in &cd_members[1..] {
            min_member = lattice.meet(min_member, x)?;
            max_member = lattice.join(max_member, x)?;
        }
        let cd_closed = lattice.sublattice(cd_members.iter().copied())?.is_closed();

        Ok(Self {
            lattice,
            measures,
            centralizers,
            m_star,
            cd_members,
            measure_image,
            min_member,
            max_member,
            cd_closed,
        })
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn group(&self) -> &GroupTable {
        self.lattice.group()
    }

    pub fn measures(&self) -> &[u64] {
        &self.measures
    }

    /// Lattice index of `C_G(H_i)` for each subgroup index `i`.
    pub fn centralizers(&self) -> &[usize] {
        &self.centralizers
    }

    pub fn m_star(&self) -> u64 {
        self.m_star
    }

    pub fn cd_members(&self) -> &[usize] {
        &self.cd_members
    }

    pub fn cd_sublattice(&self) -> Sublattice<'_> {
        self.lattice
            .sublattice(self.cd_members.iter().copied())
            .expect("CD members are lattice indices")
    }

    /// Whether CD(G) was found closed under meet and join.
    pub fn cd_is_sublattice(&self) -> bool {
        self.cd_closed
    }

    pub fn measure_image(&self) -> &[u64] {
        &self.measure_image
    }

    /// The Chermak-Delgado subgroup M(G).
    pub fn min_member(&self) -> usize {
        self.min_member
    }

    pub fn max_member(&self) -> usize {
        self.max_member
    }

    /// `|L(G)| - |CD(G)|`.
    pub fn deficiency(&self) -> usize {
        self.lattice.len() - self.cd_members.len()
    }

    pub fn is_cd_member(&self, i: usize) -> bool {
        self.cd_members.binary_search(&i).is_ok()
    }

    pub fn to_json(&self) -> CdReportJson {
        CdReportJson {
            order: self.group().order(),
            subgroup_count: self.lattice.len(),
            subgroups: self
                .lattice
                .subgroups()
                .iter()
                .zip(&self.measures)
                .map(|(h, &measure)| SubgroupJson {
                    size: h.size(),
                    mask: format!("{:#x}", h.mask()),
                    measure,
                })
                .collect(),
            m_star: self.m_star,
            cd_members: self.cd_members.clone(),
            measure_image: self.measure_image.clone(),
            deficiency: self.deficiency(),
        }
    }
}

/// Serialized form of a [`CdReport`]; field order is the key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CdReportJson {
    pub order: usize,
    pub subgroup_count: usize,
    pub subgroups: Vec<SubgroupJson>,
    pub m_star: u64,
    pub cd_members: Vec<usize>,
    pub measure_image: Vec<u64>,
    pub deficiency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupJson {
    pub size: usize,
    pub mask: String,
    pub measure: u64,
}

/// Checks the structural facts about CD(G), one record per fact.
///
/// The last record is always `not-checked`: the maximal and minimal members
/// being characteristic would need Aut(G).
pub fn verify_cd_properties(report: &CdReport, name: &str) -> Vec<VerificationRecord> {
    let lat = report.lattice();
    let g = report.group();
    let cent = report.centralizers();
    let meas = report.measures();
    let subject = |s: &str| format!("cd-properties {name}: {s}");
    let mut out = Vec::with_capacity(7);

    let mut bad = Vec::new();
    for h in 0..lat.len() {
        let c = cent[h];
        if meas[h] > meas[c] {
            bad.push(format!("H{h}: m={} > m(C)={}", meas[h], meas[c]));
        } else if meas[h] == meas[c] && cent[c] != h {
            bad.push(format!("H{h}: equal measures but C(C(H))=H{}", cent[c]));
        }
    }
    out.push(
        VerificationRecord::from_witnesses(subject("measure grows under centralizer"), bad)
            .with_number("subgroups", lat.len()),
    );

    let mut bad = Vec::new();
    for &h in report.cd_members() {
        if !report.is_cd_member(cent[h]) {
            bad.push(format!("H{h}: C(H)=H{} outside CD", cent[h]));
        }
        if cent[cent[h]] != h {
            bad.push(format!("H{h}: C(C(H))=H{}", cent[cent[h]]));
        }
    }
    out.push(VerificationRecord::from_witnesses(
        subject("CD closed under centralizer"),
        bad,
    ));

    out.push(centralizer_duality(
        report,
        &subject("centralizer is a duality of CD"),
    ));

    let sub = report.cd_sublattice();
    let modular = match sub.is_modular() {
        Ok(Modularity::Modular) => VerificationRecord::pass(subject("CD modular sublattice")),
        Ok(Modularity::Counterexample { x, y, z }) => VerificationRecord::from_witnesses(
            subject("CD modular sublattice"),
            vec![format!("pentagon (H{x}, H{y}, H{z})")],
        ),
        Err(e) => VerificationRecord::from_witnesses(
            subject("CD modular sublattice"),
            vec![e.to_string()],
        ),
    };
    out.push(modular.with_number("cd_size", sub.len()));

    let min = report.min_member();
    let min_set = lat.subgroups()[min];
    let mut bad = Vec::new();
    if report
        .cd_members()
        .iter()
        .any(|&x| !min_set.is_subset_of(&lat.subgroups()[x]))
    {
        bad.push(format!("H{min} is not below every CD member"));
    }
    if min_set.mask() & !g.centralizer_mask(min_set.mask()) != 0 {
        bad.push(format!("H{min} is not abelian"));
    }
    if !g.center().is_subset_of(&min_set) {
        bad.push(format!("H{min} does not contain Z(G)"));
    }
    out.push(
        VerificationRecord::from_witnesses(subject("M(G) abelian and contains Z(G)"), bad)
            .with_number("min_member_size", min_set.size()),
    );

    out.push(max_member_self_similar(
        report,
        &subject("CD(max member) = CD(G)"),
    ));

    out.push(VerificationRecord::not_checked(
        subject("max and min members characteristic"),
        "requires the automorphism group",
    ));
    out
}

fn centralizer_duality(report: &CdReport, subject: &str) -> VerificationRecord {
    let lat = report.lattice();
    let cent = report.centralizers();
    let cd = report.cd_members();
    let mut bad = Vec::new();
    let images: BTreeSet<usize> = cd.iter().map(|&h| cent[h]).collect();
    if images.len() != cd.len() || images.iter().any(|&c| !report.is_cd_member(c)) {
        bad.push("centralizer map is not a bijection of CD".to_string());
    }
    for &x in cd {
        for &y in cd {
            let forward = lat.subgroups()[x].is_subset_of(&lat.subgroups()[y]);
            let back = lat.subgroups()[cent[y]].is_subset_of(&lat.subgroups()[cent[x]]);
            if forward != back {
                bad.push(format!(
                    "H{x} <= H{y} is {forward} but C(H{y}) <= C(H{x}) is {back}"
                ));
            }
        }
    }
    VerificationRecord::from_witnesses(subject, bad)
}

fn max_member_self_similar(report: &CdReport, subject: &str) -> VerificationRecord {
    let g = report.group();
    let lat = report.lattice();
    let top = lat.subgroups()[report.max_member()];
    let inner = g.induced(&top).and_then(|(m, embedding)| {
        let r = cd_report(&m)?;
        let masks: BTreeSet<u64> = r
            .cd_members()
            .iter()
            .map(|&i| {
                r.lattice().subgroups()[i]
                    .elements()
                    .fold(0u64, |acc, x| acc | 1 << embedding[x])
            })
            .collect();
        Ok(masks)
    });
    let outer: BTreeSet<u64> = report
        .cd_members()
        .iter()
        .map(|&i| lat.subgroups()[i].mask())
        .collect();
    match inner {
        Ok(inner) if inner == outer => {
            VerificationRecord::pass(subject).with_number("max_member_size", top.size())
        }
        Ok(inner) => VerificationRecord::from_witnesses(
            subject,
            vec![format!(
                "CD(M) has {} members, CD(G) has {}",
                inner.len(),
                outer.len()
            )],
        ),
        Err(e) => VerificationRecord::from_witnesses(subject, vec![e.to_string()]),
    }
}

/// `(p, n_p)` with `|Z(P)| = p^{n_p}` for one Sylow `p`-subgroup `P` per prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowCenterProfile {
    pub entries: Vec<(u64, u32)>,
    pub bound: u64,
}

/// Picks the canonically first subgroup of full `p`-power order for each prime.
pub fn sylow_center_profile(g: &GroupTable, lat: &SubgroupLattice) -> Result<SylowCenterProfile> {
    let mut entries = Vec::new();
    for (p, e) in factorize(g.order() as u64) {
        let size = p.pow(e) as usize;
        let sylow =
            lat.subgroups()
                .iter()
                .find(|s| s.size() == size)
                .ok_or(Error::MissingSylow {
                    prime: p,
                    order: size,
                })?;
        let center = sylow.mask() & g.centralizer_mask(sylow.mask());
        let n_p = log_exact(center.count_ones() as u64, p).ok_or(Error::MissingSylow {
            prime: p,
            order: size,
        })?;
        entries.push((p, n_p));
    }
    let bound = 1 + entries.iter().map(|&(_, n)| n as u64).sum::<u64>();
    Ok(SylowCenterProfile { entries, bound })
}

/// `|Im(m_G)| >= 1 + sum n_p`.
pub fn check_theorem_b(
    report: &CdReport,
    profile: &SylowCenterProfile,
    name: &str,
) -> VerificationRecord {
    let image = report.measure_image().len() as u64;
    VerificationRecord::check(format!("theorem-b {name}"), image >= profile.bound, || {
        format!("|Im(m)|={image} < {}", profile.bound)
    })
    .with_number("image_size", image)
    .with_number("bound", profile.bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_group, GroupSpec};
    use crate::record::Outcome;

    fn report(spec: GroupSpec) -> CdReport {
        cd_report(&build_group(&spec).unwrap()).unwrap()
    }

    fn masks(r: &CdReport, idx: &[usize]) -> Vec<u64> {
        idx.iter()
            .map(|&i| r.lattice().subgroups()[i].mask())
            .collect()
    }

    #[test]
    fn measure_examples() {
        let q8 = build_group(&GroupSpec::Dicyclic(2)).unwrap();
        assert_eq!(cd_measure(&q8, &q8.trivial()).unwrap(), 8);
        assert_eq!(cd_measure(&q8, &q8.center()).unwrap(), 16);
        let z6 = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let three = z6.generated(&[2]).unwrap();
        assert_eq!(three.size(), 3);
        assert_eq!(cd_measure(&z6, &three).unwrap(), 18);
    }

    #[test]
    fn q8_report() {
        let r = report(GroupSpec::Dicyclic(2));
        assert_eq!(r.m_star(), 16);
        assert_eq!(r.measure_image(), &[8, 16]);
        // <a^2>, <a>, <b>, <ab>, Q8
        assert_eq!(
            masks(&r, r.cd_members()),
            vec![0b101, 0b1111, 0b0101_0101, 0b1010_0101, 0xff]
        );
        assert_eq!(r.deficiency(), 1);
        assert!(r.cd_is_sublattice());
        assert_eq!(r.lattice().subgroups()[r.min_member()].mask(), 0b101);
        assert_eq!(r.max_member(), r.lattice().top());
    }

    #[test]
    fn z4_report() {
        let r = report(GroupSpec::Cyclic(4));
        assert_eq!(r.measures(), &[4, 8, 16]);
        assert_eq!(r.cd_members(), &[2]);
        assert_eq!(r.deficiency(), 2);
    }

    #[test]
    fn s3_report() {
        let r = report(GroupSpec::Dihedral(3));
        assert_eq!(r.m_star(), 9);
        assert_eq!(r.measure_image(), &[4, 6, 9]);
        assert_eq!(r.cd_members().len(), 1);
        assert_eq!(r.lattice().subgroups()[r.cd_members()[0]].size(), 3);
    }

    #[test]
    fn q16_report() {
        let r = report(GroupSpec::Dicyclic(4));
        assert_eq!(r.m_star(), 64);
        assert_eq!(masks(&r, r.cd_members()), vec![0xff]);
        assert_eq!(r.deficiency(), r.lattice().len() - 1);
    }

    #[test]
    fn property_checks_pass() {
        for spec in [
            GroupSpec::Dicyclic(2),
            GroupSpec::Cyclic(7),
            GroupSpec::Dihedral(3),
            GroupSpec::Alternating4,
        ] {
            let r = report(spec.clone());
            let records = verify_cd_properties(&r, &spec.to_string());
            assert_eq!(records.len(), 7);
            for rec in &records[..6] {
                assert_eq!(rec.outcome, Outcome::Pass, "{}", rec.line());
            }
            assert_eq!(records[6].outcome, Outcome::NotChecked);
        }
    }

    #[test]
    fn q8_duality_fixes_order_four_and_swaps_ends() {
        let r = report(GroupSpec::Dicyclic(2));
        let c = r.centralizers();
        let lat = r.lattice();
        let center = lat.index_of(0b101).unwrap();
        assert_eq!(c[center], lat.top());
        assert_eq!(c[lat.top()], center);
        for (i, &ci) in c.iter().enumerate().take(5).skip(2) {
            assert_eq!(ci, i);
        }
    }

    #[test]
    fn sylow_profiles() {
        let g = build_group(&GroupSpec::Dihedral(3)).unwrap();
        let r = cd_report(&g).unwrap();
        let p = sylow_center_profile(&g, r.lattice()).unwrap();
        assert_eq!(p.entries, vec![(2, 1), (3, 1)]);
        assert_eq!(p.bound, 3);
        assert_eq!(check_theorem_b(&r, &p, "S3").numbers["image_size"], 3);

        let g = build_group(&GroupSpec::Cyclic(12)).unwrap();
        let r = cd_report(&g).unwrap();
        let p = sylow_center_profile(&g, r.lattice()).unwrap();
        assert_eq!(p.entries, vec![(2, 2), (3, 1)]);
        assert_eq!(p.bound, 4);

        let g = build_group(&GroupSpec::Cyclic(1)).unwrap();
        let r = cd_report(&g).unwrap();
        let p = sylow_center_profile(&g, r.lattice()).unwrap();
        assert!(p.entries.is_empty());
        assert!(!check_theorem_b(&r, &p, "1").is_fail());
    }

    #[test]
    fn json_keys_in_order() {
        let r = report(GroupSpec::Cyclic(4));
        let s = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"order":4,"subgroup_count":3,"subgroups":[{"size":1,"mask":"0x1","measure":4},{"size":2,"mask":"0x5","measure":8},{"size":4,"mask":"0xf","measure":16}],"m_star":16,"cd_members":[2],"measure_image":[4,8,16],"deficiency":2}"#
        );
    }
}
