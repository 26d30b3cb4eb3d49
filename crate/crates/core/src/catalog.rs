//! Every group of order at most 15, up to isomorphism, plus a range of
//! generalized quaternion groups.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::Path;

use crate::cayley::load_cayley_file;
use crate::construct::{build_group, GroupSpec};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::enumerate_subgroups;

/// Number of isomorphism types of groups of order 1..=15.
pub const CLASSIFICATION_COUNTS: [usize; 15] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1];
pub const MAX_BUILTIN_ORDER: usize = 15;
pub const DEFAULT_QUATERNIONS: RangeInclusive<u32> = 3..=6;
#[allow(clippy::reversed_empty_ranges)]
pub const NO_QUATERNIONS: RangeInclusive<u32> = 3..=2;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub table: GroupTable,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    max_order: usize,
    entries: Vec<CatalogEntry>,
}

fn builtin_specs() -> Vec<(&'static str, GroupSpec)> {
    use GroupSpec::*;
    let p = |fs: &[usize]| DirectProduct(fs.iter().map(|&n| Cyclic(n)).collect());
    vec![
        ("Z1", Cyclic(1)),
        ("Z2", Cyclic(2)),
        ("Z3", Cyclic(3)),
        ("Z4", Cyclic(4)),
        ("Z2xZ2", p(&[2, 2])),
        ("Z5", Cyclic(5)),
        ("Z6", Cyclic(6)),
        ("S3", Dihedral(3)),
        ("Z7", Cyclic(7)),
        ("Z8", Cyclic(8)),
        ("Z4xZ2", p(&[4, 2])),
        ("Z2xZ2xZ2", p(&[2, 2, 2])),
        ("D4", Dihedral(4)),
        ("Q8", Dicyclic(2)),
        ("Z9", Cyclic(9)),
        ("Z3xZ3", p(&[3, 3])),
        ("Z10", Cyclic(10)),
        ("D5", Dihedral(5)),
        ("Z11", Cyclic(11)),
        ("Z12", Cyclic(12)),
        ("Z6xZ2", p(&[6, 2])),
        ("A4", Alternating4),
        ("D6", Dihedral(6)),
        ("Dic3", Dicyclic(3)),
        ("Z13", Cyclic(13)),
        ("Z14", Cyclic(14)),
        ("D7", Dihedral(7)),
        ("Z15", Cyclic(15)),
    ]
}

/// Builds the catalog for orders `1..=max_order` and appends `Q_{2^n}` for
/// each `n` in `quaternions` whose order exceeds `max_order`.
pub fn build_catalog(max_order: usize, quaternions: RangeInclusive<u32>) -> Result<Catalog> {
    build_catalog_with_extras(max_order, quaternions, Vec::new())
}

/// As [`build_catalog`], with externally supplied groups appended. Orders
/// above 15 are accepted only when extras are present.
pub fn build_catalog_with_extras(
    max_order: usize,
    quaternions: RangeInclusive<u32>,
    extras: Vec<CatalogEntry>,
) -> Result<Catalog> {
    if max_order > MAX_BUILTIN_ORDER && extras.is_empty() {
        return Err(Error::IncompleteCatalog(max_order));
    }
    let mut entries = Vec::new();
    for (name, spec) in builtin_specs() {
        let table = build_group(&spec)?;
        if table.order() <= max_order {
            entries.push(CatalogEntry {
                name: name.to_string(),
                spec,
                table,
            });
        }
    }
    for n in quaternions {
        if !(3..=6).contains(&n) {
            return Err(Error::QuaternionOutOfRange(n));
        }
        if 1usize << n > max_order.min(MAX_BUILTIN_ORDER) {
            let spec = GroupSpec::quaternion(n);
            entries.push(CatalogEntry {
                name: format!("Q{}", 1 << n),
                table: build_group(&spec)?,
                spec,
            });
        }
    }
    entries.extend(extras);
    Ok(Catalog { max_order, entries })
}

/// Loads every regular file in `dir` (sorted by file name) as a Cayley table.
pub fn load_extra_dir(dir: &Path) -> Result<Vec<CatalogEntry>> {
    let io = |e: std::io::Error| Error::Io {
        path: dir.display().to_string(),
        reason: e.to_string(),
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()
        .map_err(io)?;
    paths.retain(|p| p.is_file());
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let table = load_cayley_file(&path)?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok(CatalogEntry {
                name,
                spec: GroupSpec::FromFile(path),
                table,
            })
        })
        .collect()
}

/// Cheap isomorphism invariant: element-order multiset, abelian flag, `|L(G)|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub element_orders: Vec<usize>,
    pub abelian: bool,
    pub subgroup_count: usize,
}

pub fn fingerprint(g: &GroupTable) -> Result<Fingerprint> {
    Ok(Fingerprint {
        order: g.order(),
        element_orders: g.order_profile(),
        abelian: g.is_abelian(),
        subgroup_count: enumerate_subgroups(g)?.len(),
    })
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Upper bound of the built-in classification range.
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entry count per order.
    pub fn counts_by_order(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.table.order()).or_insert(0) += 1;
        }
        counts
    }
}
