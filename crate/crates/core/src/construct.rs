//! Built-in group constructions and the `kind:params` spec grammar.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::cayley::load_cayley_file;
use crate::error::{Error, Result};
use crate::group::{GroupTable, MAX_ORDER};

/// Recipe for a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Z_n, element `i` is `i mod n`.
    Cyclic(usize),
    /// Dihedral group of order `2n`; element `r^i s^j` has index `i + n*j`.
    Dihedral(usize),
    /// Dicyclic group of order `4m`: `a^{2m} = 1`, `b^2 = a^m`, `b^-1 a b = a^-1`.
    /// Element `a^i b^j` has index `i + 2m*j`. `Dicyclic(2^(n-2))` is `Q_{2^n}`.
    Dicyclic(usize),
    /// Even permutations of four points.
    Alternating4,
    /// Element `(x_1, ..., x_k)` has mixed-radix index with the first factor least significant.
    DirectProduct(Vec<GroupSpec>),
    FromFile(PathBuf),
}

impl GroupSpec {
    /// `Q_{2^n}` as a dicyclic group.
    pub fn quaternion(n: u32) -> Self {
        GroupSpec::Dicyclic(1 << (n - 2))
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name, n: usize| {
            if n == 0 {
                Err(Error::InvalidParameter {
                    name,
                    reason: "must be positive".into(),
                })
            } else {
                Ok(())
            }
        };
        match self {
            GroupSpec::Cyclic(n) => positive("cyclic n", *n),
            GroupSpec::Dihedral(n) => positive("dihedral n", *n),
            GroupSpec::Dicyclic(m) if *m < 2 => Err(Error::InvalidParameter {
                name: "dicyclic m",
                reason: format!("got {m}, need m >= 2"),
            }),
            GroupSpec::DirectProduct(fs) if fs.len() < 2 => Err(Error::InvalidParameter {
                name: "product factors",
                reason: format!("got {} factor(s), need at least 2", fs.len()),
            }),
            GroupSpec::DirectProduct(fs) => fs.iter().try_for_each(GroupSpec::validate),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            GroupSpec::Alternating4 => write!(f, "a4"),
            GroupSpec::DirectProduct(fs) => {
                write!(f, "product:")?;
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            GroupSpec::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Grammar: `cyclic:N`, `dihedral:N`, `dicyclic:M`, `a4`, `file:PATH`,
    /// `product:SPEC,SPEC[,...]` (factors may not themselves be products).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let number = |name: &'static str| {
            rest.parse::<usize>().map_err(|_| Error::InvalidParameter {
                name,
                reason: format!("expected an integer, got {rest:?}"),
            })
        };
        let spec = match kind {
            "cyclic" => GroupSpec::Cyclic(number("cyclic n")?),
            "dihedral" => GroupSpec::Dihedral(number("dihedral n")?),
            "dicyclic" => GroupSpec::Dicyclic(number("dicyclic m")?),
            "a4" | "alternating4" if rest.is_empty() => GroupSpec::Alternating4,
            "file" if !rest.is_empty() => GroupSpec::FromFile(PathBuf::from(rest)),
            "product" => GroupSpec::DirectProduct(
                rest.split(',')
                    .map(|f| {
                        if f.starts_with("product") {
                            Err(Error::InvalidParameter {
                                name: "product factors",
                                reason: "nested products are not supported".into(),
                            })
                        } else {
                            f.parse()
                        }
                    })
                    .collect::<Result<_>>()?,
            ),
            _ => {
                return Err(Error::InvalidParameter {
                    name: "group spec",
                    reason: format!("unrecognized spec {s:?}"),
                })
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds and validates the Cayley table for `spec`.
pub fn build_group(spec: &GroupSpec) -> Result<GroupTable> {
    spec.validate()?;
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            tabulate(n, |i, j| (i + j) % n)
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            tabulate(2 * n, |x, y| {
                let (i, j) = (x % n, x / n);
                let (k, l) = (y % n, y / n);
                // s r^k = r^-k s
                let r = if j == 0 { i + k } else { i + n - k };
                (r % n) + n * ((j + l) % 2)
            })
        }
        GroupSpec::Dicyclic(m) => {
            let half = 2 * m;
            tabulate(4 * m, |x, y| {
                let (i, j) = (x % half, x / half);
                let (k, l) = (y % half, y / half);
                match (j, l) {
                    (0, _) => (i + k) % half + half * l,
                    // b a^k = a^-k b
                    (_, 0) => (i + half - k) % half + half,
                    // a^i b a^k b = a^(i-k) b^2 = a^(i-k+m)
                    _ => (i + half - k + m) % half,
                }
            })
        }
        GroupSpec::Alternating4 => {
            let perms = even_permutations_of_four();
            let index = |p: &[usize; 4]| perms.iter().position(|q| q == p).unwrap();
            tabulate(perms.len(), |x, y| {
                // (x*y)(t) = x(y(t))
                let (p, q) = (&perms[x], &perms[y]);
                index(&[p[q[0]], p[q[1]], p[q[2]], p[q[3]]])
            })
        }
        GroupSpec::DirectProduct(factors) => {
            let tables = factors
                .iter()
                .map(build_group)
                .collect::<Result<Vec<_>>>()?;
            let order = tables
                .iter()
                .try_fold(1usize, |acc, t| acc.checked_mul(t.order()))
                .filter(|&n| n <= MAX_ORDER)
                .ok_or(Error::OrderTooLarge(usize::MAX))?;
            tabulate(order, |mut x, mut y| {
                let mut result = 0;
                let mut radix = 1;
                for t in &tables {
                    let n = t.order();
                    result += radix * t.mul(x % n, y % n);
                    radix *= n;
                    x /= n;
                    y /= n;
                }
                result
            })
        }
        GroupSpec::FromFile(path) => load_cayley_file(path),
    }
}

fn tabulate(order: usize, product: impl Fn(usize, usize) -> usize) -> Result<GroupTable> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    let mut table = Vec::with_capacity(order * order);
    for i in 0..order {
        for j in 0..order {
            table.push(product(i, j) as u8);
        }
    }
    GroupTable::from_normalized(order, table)
}

/// The 12 even permutations of {0,1,2,3} in lexicographic order (identity first).
fn even_permutations_of_four() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if distinct && inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
