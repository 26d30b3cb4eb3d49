//! Graphviz export of Hasse diagrams.

use std::fmt::Write as _;

use crate::chermak_delgado::CdReport;
use crate::lattice::SubgroupLattice;

/// One node `H<i>` labelled `H<i>:<size>` per subgroup, one edge per covering
/// pair from lower to upper. Indices in `highlight` get `style=filled`.
pub fn hasse_dot(lat: &SubgroupLattice, highlight: Option<&[usize]>) -> String {
    let mut out = String::from("digraph subgroup_lattice {\n    rankdir=BT;\n");
    for (i, h) in lat.subgroups().iter().enumerate() {
        let filled = highlight.is_some_and(|hl| hl.contains(&i));
        let style = if filled { ", style=filled" } else { "" };
        let _ = writeln!(out, "    H{i} [label=\"H{i}:{}\"{style}];", h.size());
    }
    for &(lo, hi) in lat.hasse_edges() {
        let _ = writeln!(out, "    H{lo} -> H{hi};");
    }
    out.push_str("}\n");
    out
}

impl CdReport {
    pub fn to_dot(&self, highlight_cd: bool) -> String {
        hasse_dot(self.lattice(), highlight_cd.then_some(self.cd_members()))
    }
}
