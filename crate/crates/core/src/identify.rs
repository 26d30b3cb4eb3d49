//! Recognizing cyclic and generalized quaternion groups from their tables.

use std::fmt;

use serde::Serialize;

use crate::arith::log_exact;
use crate::group::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupLabel {
    Trivial,
    /// `generator` has order `order`.
    Cyclic {
        order: usize,
        generator: usize,
    },
    /// `a` has order `order/2`, `b^2 = a^(order/4)` and `b^-1 a b = a^-1`.
    GeneralizedQuaternion {
        order: usize,
        a: usize,
        b: usize,
    },
    Other,
}

impl GroupLabel {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupLabel::Cyclic { .. })
    }

    pub fn is_quaternion(&self) -> bool {
        matches!(self, GroupLabel::GeneralizedQuaternion { .. })
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Cyclic { order, .. } => write!(f, "Z{order}"),
            GroupLabel::GeneralizedQuaternion { order, .. } => write!(f, "Q{order}"),
            GroupLabel::Other => write!(f, "other"),
        }
    }
}

/// A nonabelian group of order `2^n` (n >= 3) with exactly one involution is
/// generalized quaternion; the certificate pair is searched afterwards.
pub fn identify_group(g: &GroupTable) -> GroupLabel {
    let n = g.order();
    if n == 1 {
        return GroupLabel::Trivial;
    }
    let orders: Vec<usize> = (0..n).map(|x| g.element_order_unchecked(x)).collect();
    if let Some(generator) = orders.iter().position(|&o| o == n) {
        return GroupLabel::Cyclic {
            order: n,
            generator,
        };
    }
    let two_power = log_exact(n as u64, 2).is_some_and(|e| e >= 3);
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if two_power && involutions == 1 && !g.is_abelian() {
        if let Some((a, b)) = quaternion_pair(g, &orders) {
            return GroupLabel::GeneralizedQuaternion { order: n, a, b };
        }
    }
    GroupLabel::Other
}

/// First `(a, b)` satisfying the generalized quaternion relations.
pub(crate) fn quaternion_pair(g: &GroupTable, orders: &[usize]) -> Option<(usize, usize)> {
    let n = g.order();
    let a = orders.iter().position(|&o| o == n / 2)?;
    let cyclic = g.generated_mask(1 << a);
    let a_inv = g.inverse(a);
    let target = g.pow(a, (n / 4) as u64);
    (0..n)
        .filter(|&b| cyclic & (1 << b) == 0)
        .find(|&b| g.mul(b, b) == target && g.mul(g.mul(g.inverse(b), a), b) == a_inv)
        .map(|b| (a, b))
}
