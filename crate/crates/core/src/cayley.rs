//! Plain-text Cayley table files.
//!
//! ```text
//! # comment lines start with '#'
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Line 1 is the order `n`, followed by `n` rows of `n` whitespace-separated
//! indices; entry `j` of row `i` is the index of `x_i * x_j`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{GroupTable, MAX_ORDER};

pub fn load_cayley_table(text: &str) -> Result<GroupTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        reason: "empty input".into(),
    })?;
    let order: usize = header.parse().map_err(|_| Error::Parse {
        line: line_no,
        reason: format!("expected the group order, got {header:?}"),
    })?;
    if order == 0 {
        return Err(Error::Parse {
            line: line_no,
            reason: "order must be positive".into(),
        });
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }

    let mut rows = Vec::with_capacity(order);
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("more than {order} rows"),
            });
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    reason: format!("bad entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected {order} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::Parse {
            line: text.lines().count(),
            reason: format!("expected {order} rows, found {}", rows.len()),
        });
    }
    GroupTable::from_rows(&rows)
}

pub fn load_cayley_file(path: &Path) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    load_cayley_table(&text)
}

/// Renders `g` in the file format accepted by [`load_cayley_table`].
pub fn write_cayley_table(g: &GroupTable) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_group, GroupSpec};

    #[test]
    fn trivial_table() {
        let g = load_cayley_table("1\n0").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn comments_and_crlf() {
        let text = "# Z2\r\n2\r\n# rows\r\n0 1\r\n1 0\r\n";
        let g = load_cayley_table(text).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn s3_table_matches_dihedral() {
        // S3 as permutations of {0,1,2}: id, (012), (021), (01), (02), (12)
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
        ];
        let mut text = String::from("6\n");
        for p in &perms {
            let row: Vec<String> = perms
                .iter()
                .map(|q| {
                    let c = [p[q[0]], p[q[1]], p[q[2]]];
                    perms.iter().position(|r| *r == c).unwrap().to_string()
                })
                .collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        let g = load_cayley_table(&text).unwrap();
        let d3 = build_group(&GroupSpec::Dihedral(3)).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.order_profile(), d3.order_profile());
        assert_eq!(g.center().size(), d3.center().size());
    }

    #[test]
    fn non_associative_triple_is_reported() {
        // Row 3 has two zeros, so 3 has no unique inverse.
        let text = "4\n0 1 2 3\n1 2 3 0\n2 3 1 0\n3 0 0 1\n";
        assert_eq!(load_cayley_table(text).unwrap_err(), Error::NoInverse(3));
        // Klein table with 1*2 changed from 3 to 2: 1*(1*3) = 2 but (1*1)*3 = 3.
        let text = "4\n0 1 2 3\n1 0 2 2\n2 3 0 1\n3 2 1 0\n";
        assert_eq!(
            load_cayley_table(text).unwrap_err(),
            Error::NonAssociative { i: 1, j: 1, k: 3 }
        );
    }

    #[test]
    fn relabels_identity_deterministically() {
        // Z2 with identity at index 1
        let g = load_cayley_table("2\n1 0\n0 1\n").unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(load_cayley_table(""), Err(Error::Parse { .. })));
        assert!(matches!(
            load_cayley_table("2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1\n1 x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1 1\n1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1\n1 5\n"),
            Err(Error::NotClosed { i: 1, j: 1, .. })
        ));
    }

    #[test]
    fn write_then_load() {
        let g = build_group(&GroupSpec::Alternating4).unwrap();
        assert_eq!(load_cayley_table(&write_cayley_table(&g)).unwrap(), g);
    }
}
