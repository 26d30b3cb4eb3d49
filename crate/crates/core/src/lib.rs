//! Subgroup lattices and Chermak-Delgado lattices of small finite groups.
//!
//! Groups are Cayley tables over `0..n` (`n <= 64`) with the identity at 0.
//! [`enumerate_subgroups`] produces L(G); [`cd_report`] measures every
//! subgroup and extracts CD(G); [`verify`] runs the classification checks over
//! the catalog of all groups of order at most 15 and a family of generalized
//! quaternion groups.

pub mod arith;
pub mod catalog;
pub mod cayley;
pub mod chermak_delgado;
pub mod construct;
pub mod dot;
pub mod error;
pub mod group;
pub mod identify;
pub mod lattice;
pub mod record;
pub mod verify;

pub use catalog::{
    build_catalog, build_catalog_with_extras, load_extra_dir, Catalog, CatalogEntry, NO_QUATERNIONS,
};
pub use cayley::{load_cayley_file, load_cayley_table, write_cayley_table};
pub use chermak_delgado::{
    cd_measure, cd_report, check_theorem_b, sylow_center_profile, verify_cd_properties, CdReport,
    SylowCenterProfile,
};
pub use construct::{build_group, GroupSpec};
pub use dot::hasse_dot;
pub use error::{Error, Result};
pub use group::{GroupTable, SubgroupSet};
pub use identify::{identify_group, GroupLabel};
pub use lattice::{
    enumerate_subgroups, enumerate_subgroups_capped, Modularity, SelfDuality, SubgroupLattice,
    Sublattice,
};
pub use record::{Outcome, VerificationRecord};
pub use verify::{
    analyze_catalog, verify_all, verify_lemma_2_1, verify_theorem_1_1, verify_theorem_a, Summary,
};
