//! Finite groups as validated Cayley tables.
//!
//! Elements are the indices `0..n` and the identity is always index 0.
//! Subgroups are `u64` membership masks, which caps the supported order at 64.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A finite group stored as its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<u8>,
    inverses: Vec<u8>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Validates a square table and normalizes the identity to index 0.
    ///
    /// If the identity sits at some index `e != 0`, the labels `e` and `0` are
    /// swapped and every other label is kept.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidParameter {
                name: "order",
                reason: "a group has at least one element".into(),
            });
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidParameter {
                    name: "table",
                    reason: format!("row {i} has {} entries, expected {order}", row.len()),
                });
            }
            if let Some((j, &value)) = row.iter().enumerate().find(|&(_, &v)| v >= order) {
                return Err(Error::NotClosed { i, j, value, order });
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or(Error::NoIdentity)?;
        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };

        let mut table = vec![0u8; order * order];
        for i in 0..order {
            for j in 0..order {
                table[swap(i) * order + swap(j)] = swap(rows[i][j]) as u8;
            }
        }
        // Report violations in the caller's labels.
        Self::from_normalized(order, table).map_err(|e| match e {
            Error::NoInverse(i) => Error::NoInverse(swap(i)),
            Error::NonAssociative { i, j, k } => Error::NonAssociative {
                i: swap(i),
                j: swap(j),
                k: swap(k),
            },
            other => other,
        })
    }

    /// Builds from a flat row-major table whose identity is already index 0.
    pub(crate) fn from_normalized(order: usize, table: Vec<u8>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let at = |i: usize, j: usize| table[i * order + j] as usize;

        for j in 0..order {
            if at(0, j) != j || at(j, 0) != j {
                return Err(Error::NoIdentity);
            }
        }

        let mut inverses = vec![0u8; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            let mut right = (0..order).filter(|&j| at(i, j) == 0);
            match (right.next(), right.next()) {
                (Some(j), None) if at(j, i) == 0 => *inv = j as u8,
                _ => return Err(Error::NoInverse(i)),
            }
        }

        for i in 0..order {
            for j in 0..order {
                let ij = at(i, j);
                for k in 0..order {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }

        Ok(Self {
            order,
            table,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    /// `x^k`, with `k = 0` giving the identity.
    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.check_element(x)?;
        Ok(self.element_order_unchecked(x))
    }

    pub(crate) fn element_order_unchecked(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Mask with every element set.
    pub fn full_mask(&self) -> u64 {
        if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::from_mask(self.full_mask())
    }

    pub fn trivial(&self) -> SubgroupSet {
        SubgroupSet::from_mask(1)
    }

    /// Checks that `mask` is a subgroup and wraps it.
    pub fn subgroup(&self, mask: u64) -> Result<SubgroupSet> {
        let not = |reason: &str| Error::NotASubgroup {
            mask,
            reason: reason.to_string(),
        };
        if mask & !self.full_mask() != 0 {
            return Err(not("contains indices outside the group"));
        }
        if mask & 1 == 0 {
            return Err(not("does not contain the identity"));
        }
        for x in bits(mask) {
            if mask & (1 << self.inverse(x)) == 0 {
                return Err(not(&format!("missing the inverse of {x}")));
            }
            for y in bits(mask) {
                if mask & (1 << self.mul(x, y)) == 0 {
                    return Err(not(&format!("product {x}*{y} escapes")));
                }
            }
        }
        let set = SubgroupSet::from_mask(mask);
        debug_assert_eq!(self.order % set.size(), 0);
        Ok(set)
    }

    /// Smallest subgroup containing every element of `mask`.
    pub fn generated_mask(&self, mask: u64) -> u64 {
        let gens = mask & !1;
        let mut closed = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for x in bits(frontier) {
                for g in bits(gens) {
                    next |= 1 << self.mul(x, g);
                }
            }
            frontier = next & !closed;
            closed |= next;
        }
        closed
    }

    pub fn generated(&self, elements: &[usize]) -> Result<SubgroupSet> {
        let mut mask = 0u64;
        for &x in elements {
            self.check_element(x)?;
            mask |= 1 << x;
        }
        Ok(SubgroupSet::from_mask(self.generated_mask(mask)))
    }

    /// Elements commuting with every element of `mask`.
    pub fn centralizer_mask(&self, mask: u64) -> u64 {
        let mut result = 0u64;
        for x in 0..self.order {
            if bits(mask).all(|y| self.mul(x, y) == self.mul(y, x)) {
                result |= 1 << x;
            }
        }
        result
    }

    pub fn centralizer(&self, h: &SubgroupSet) -> Result<SubgroupSet> {
        self.subgroup(h.mask())?;
        let c = self.subgroup(self.centralizer_mask(h.mask()))?;
        Ok(c)
    }

    pub fn center(&self) -> SubgroupSet {
        SubgroupSet::from_mask(self.centralizer_mask(self.full_mask()))
    }

    /// The subgroup `h` as a group in its own right, plus the embedding
    /// `local index -> index in self`. Local indices follow ascending order of
    /// the original indices, so the identity stays at 0.
    pub fn induced(&self, h: &SubgroupSet) -> Result<(GroupTable, Vec<usize>)> {
        self.subgroup(h.mask())?;
        let embedding: Vec<usize> = h.elements().collect();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i;
        }
        let n = embedding.len();
        let mut table = Vec::with_capacity(n * n);
        for &x in &embedding {
            for &y in &embedding {
                table.push(local[self.mul(x, y)] as u8);
            }
        }
        Ok((GroupTable::from_normalized(n, table)?, embedding))
    }

    /// Renames element `x` to `perm[x]`. The permutation must fix 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<GroupTable> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.first() != Some(&0) {
            return Err(Error::BadRelabeling(n));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadRelabeling(n));
            }
        }
        let mut table = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
            }
        }
        GroupTable::from_normalized(n, table)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order)
            .map(|x| self.element_order_unchecked(x))
            .collect();
        orders.sort_unstable();
        orders
    }
}

/// A subgroup, stored as a membership mask over the parent's element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubgroupSet {
    mask: u64,
    size: usize,
}

impl SubgroupSet {
    pub(crate) fn from_mask(mask: u64) -> Self {
        Self {
            mask,
            size: mask.count_ones() as usize,
        }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, x: usize) -> bool {
        x < 64 && self.mask & (1 << x) != 0
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }
}

/// Iterates the set bit positions of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
