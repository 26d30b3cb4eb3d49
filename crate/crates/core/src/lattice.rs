//! The subgroup lattice L(G) and lattice predicates on its sublattices.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::{GroupTable, SubgroupSet};

pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;
pub const DEFAULT_SELF_DUAL_CAP: usize = 20;

/// Every subgroup of a group, in canonical `(size, mask)` order.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: GroupTable,
    subgroups: Vec<SubgroupSet>,
    index: HashMap<u64, usize>,
    hasse_edges: Vec<(usize, usize)>,
}

pub fn enumerate_subgroups(g: &GroupTable) -> Result<SubgroupLattice> {
    enumerate_subgroups_capped(g, DEFAULT_SUBGROUP_CAP)
}

/// Cyclic subgroups seed the search; the set is then closed under joins with
/// those seeds until nothing new appears. Every subgroup is a join of cyclic
/// subgroups, so the fixed point is all of L(G).
pub fn enumerate_subgroups_capped(g: &GroupTable, cap: usize) -> Result<SubgroupLattice> {
    let mut cyclic: Vec<u64> = (0..g.order()).map(|x| g.generated_mask(1 << x)).collect();
    cyclic.sort_unstable();
    cyclic.dedup();

    let mut known: HashSet<u64> = cyclic.iter().copied().collect();
    if known.len() > cap {
        return Err(Error::SubgroupCapExceeded(cap));
    }
    let mut pending = cyclic.clone();
    while let Some(h) = pending.pop() {
        for &c in &cyclic {
            if c & !h == 0 {
                continue;
            }
            let j = g.generated_mask(h | c);
            if known.insert(j) {
                if known.len() > cap {
                    return Err(Error::SubgroupCapExceeded(cap));
                }
                pending.push(j);
            }
        }
    }

    let mut subgroups: Vec<SubgroupSet> = known
        .into_iter()
        .map(|m| g.subgroup(m))
        .collect::<Result<_>>()?;
    subgroups.sort_unstable_by_key(|s| (s.size(), s.mask()));
    let index = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask(), i))
        .collect();
    let hasse_edges = covering_pairs(&subgroups);

    Ok(SubgroupLattice {
        group: g.clone(),
        subgroups,
        index,
        hasse_edges,
    })
}

fn covering_pairs(subgroups: &[SubgroupSet]) -> Vec<(usize, usize)> {
    let n = subgroups.len();
    let mut edges = Vec::new();
    for upper in 0..n {
        let below: Vec<usize> = (0..upper)
            .filter(|&x| {
                subgroups[x].is_subset_of(&subgroups[upper]) && subgroups[x] != subgroups[upper]
            })
            .collect();
        for &x in &below {
            let covered = below.iter().any(|&z| {
                z != x && subgroups[x].is_subset_of(&subgroups[z]) && subgroups[x] != subgroups[z]
            });
            if !covered {
                edges.push((x, upper));
            }
        }
    }
    edges.sort_unstable();
    edges
}

impl SubgroupLattice {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn get(&self, i: usize) -> Result<&SubgroupSet> {
        self.subgroups.get(i).ok_or(Error::SubgroupOutOfRange {
            index: i,
            len: self.subgroups.len(),
        })
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// `H_x <= H_y`.
    pub fn leq(&self, x: usize, y: usize) -> Result<bool> {
        Ok(self.get(x)?.is_subset_of(self.get(y)?))
    }

    pub fn meet(&self, x: usize, y: usize) -> Result<usize> {
        let m = self.get(x)?.mask() & self.get(y)?.mask();
        Ok(self.lookup(m))
    }

    pub fn join(&self, x: usize, y: usize) -> Result<usize> {
        let m = self
            .group
            .generated_mask(self.get(x)?.mask() | self.get(y)?.mask());
        Ok(self.lookup(m))
    }

    fn lookup(&self, mask: u64) -> usize {
        // Enumeration is complete, so every subgroup mask is present.
        self.index[&mask]
    }

    /// Index of the centralizer of subgroup `x`.
    pub fn centralizer(&self, x: usize) -> Result<usize> {
        let m = self.group.centralizer_mask(self.get(x)?.mask());
        Ok(self.lookup(m))
    }

    /// Number of subgroups of order `size`.
    pub fn count_of_size(&self, size: usize) -> usize {
        self.subgroups.iter().filter(|s| s.size() == size).count()
    }

    pub fn sublattice(&self, members: impl IntoIterator<Item = usize>) -> Result<Sublattice<'_>> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            self.get(m)?;
        }
        Ok(Sublattice {
            lattice: self,
            members,
        })
    }

    pub fn full(&self) -> Sublattice<'_> {
        Sublattice {
            lattice: self,
            members: (0..self.len()).collect(),
        }
    }
}

/// A subset of L(G). Meet/join closure is checked by the predicates, never assumed.
#[derive(Clone, Debug)]
pub struct Sublattice<'a> {
    lattice: &'a SubgroupLattice,
    members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modularity {
    Modular,
    /// `x <= z` but `x ∨ (y ∧ z) != (x ∨ y) ∧ z`.
    Counterexample {
        x: usize,
        y: usize,
        z: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfDuality {
    /// An order-reversing bijection, as `(member, image)` pairs.
    SelfDual(Vec<(usize, usize)>),
    NotSelfDual,
    Undecided {
        size: usize,
        cap: usize,
    },
}

impl<'a> Sublattice<'a> {
    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Fails with the first pair whose meet or join leaves the member set.
    pub fn check_closed(&self) -> Result<()> {
        let lat = self.lattice;
        for (i, &x) in self.members.iter().enumerate() {
            for &y in &self.members[i..] {
                let m = lat.meet(x, y)?;
                if !self.contains(m) {
                    return Err(Error::SublatticeNotClosed {
                        op: "meet",
                        x,
                        y,
                        result: m,
                    });
                }
                let j = lat.join(x, y)?;
                if !self.contains(j) {
                    return Err(Error::SublatticeNotClosed {
                        op: "join",
                        x,
                        y,
                        result: j,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_closed(&self) -> bool {
        self.check_closed().is_ok()
    }

    pub fn is_modular(&self) -> Result<Modularity> {
        self.check_closed()?;
        let lat = self.lattice;
        for &x in &self.members {
            for &z in &self.members {
                if !lat.leq(x, z)? {
                    continue;
                }
                for &y in &self.members {
                    let lhs = lat.join(x, lat.meet(y, z)?)?;
                    let rhs = lat.meet(lat.join(x, y)?, z)?;
                    if lhs != rhs {
                        return Ok(Modularity::Counterexample { x, y, z });
                    }
                }
            }
        }
        Ok(Modularity::Modular)
    }

    pub fn is_self_dual(&self) -> Result<SelfDuality> {
        self.is_self_dual_capped(DEFAULT_SELF_DUAL_CAP)
    }

    /// Backtracking search for an order-reversing bijection. Candidates for
    /// the image of `x` must mirror `x`'s chain heights and up/down set sizes.
    pub fn is_self_dual_capped(&self, cap: usize) -> Result<SelfDuality> {
        self.check_closed()?;
        let k = self.members.len();
        if k > cap {
            return Ok(SelfDuality::Undecided { size: k, cap });
        }
        let lat = self.lattice;
        let le: Vec<Vec<bool>> = self
            .members
            .iter()
            .map(|&x| {
                self.members
                    .iter()
                    .map(|&y| lat.leq(x, y))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;

        // Members are in canonical (size-ascending) order, a linear extension.
        let mut height = vec![0usize; k];
        for j in 0..k {
            height[j] = (0..j)
                .filter(|&i| le[i][j])
                .map(|i| height[i] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut depth = vec![0usize; k];
        for i in (0..k).rev() {
            depth[i] = (i + 1..k)
                .filter(|&j| le[i][j])
                .map(|j| depth[j] + 1)
                .max()
                .unwrap_or(0);
        }
        let down: Vec<usize> = (0..k)
            .map(|j| (0..k).filter(|&i| le[i][j]).count())
            .collect();
        let up: Vec<usize> = (0..k)
            .map(|i| (0..k).filter(|&j| le[i][j]).count())
            .collect();

        let candidates: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| {
                        height[i] == depth[j]
                            && depth[i] == height[j]
                            && down[i] == up[j]
                            && up[i] == down[j]
                    })
                    .collect()
            })
            .collect();

        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];
        if assign(0, &le, &candidates, &mut image, &mut used) {
            let pairs = (0..k)
                .map(|i| (self.members[i], self.members[image[i]]))
                .collect();
            Ok(SelfDuality::SelfDual(pairs))
        } else {
            Ok(SelfDuality::NotSelfDual)
        }
    }
}

fn assign(
    i: usize,
    le: &[Vec<bool>],
    candidates: &[Vec<usize>],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == image.len() {
        return true;
    }
    for &c in &candidates[i] {
        if used[c] {
            continue;
        }
        let consistent = (0..i).all(|a| {
            let fa = image[a];
            le[a][i] == le[c][fa] && le[i][a] == le[fa][c]
        });
        if !consistent {
            continue;
        }
        image[i] = c;
        used[c] = true;
        if assign(i + 1, le, candidates, image, used) {
            return true;
        }
        used[c] = false;
    }
    image[i] = usize::MAX;
    false
}
