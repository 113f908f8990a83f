//! The support-level multiplication table of the weight spaces.
//!
//! `W_i · W_j` lies in the weight space of w_i + w_j, and the table below
//! records, cell by cell, which products are actually nonzero. Rows run
//! over i = −12..12, columns over j = 0..12; the remaining products follow
//! from commutativity and from conjugation (an automorphism of the
//! complexified algebra): `W_i·W_j` is nonzero exactly when `W_{−i}·W_{−j}`
//! is, with index negated.
//!
//! The data is kept as a literal block so each cell can be audited; `.`
//! marks a zero product. A cell value `0` always sits where w_i + w_j = 0,
//! so the weight index 0 (the 2-dimensional W₀) is unambiguous in the CSV
//! round trip.

use super::{weight, weight_index_of, F4Error};
use once_cell::sync::Lazy;

/// Rows i = −12..=12 (25 rows), columns j = 0..=12 (13 columns).
const TABLE_DATA: &str = "\
-12: -12   .   .   . -11 -10  -9  -8  -7  -6  -5  -4   0
-11: -11 -10  -9  -8   .   .   .   .  -3  -2  -1   0   4
-10: -10   .  -7  -6   .   .  -3  -2   .   .   0   1   5
 -9:  -9  -7   .  -5   .  -3   .  -1   .   0   .   2   6
 -8:  -8  -6  -5   .   .  -2  -1   .   0   .   .   3   7
 -7:  -7   .   .  -4  -3   .   .   0   .   1   2   .   8
 -6:  -6   .  -4   .  -2   .   0   .   1   .   3   .   9
 -5:  -5  -4   .   .  -1   0   .   .   2   3   .   .  10
 -4:  -4   .   .   .   0   1   2   3   .   .   .   .  11
 -3:  -3   .   .   0   .   .   .   4   .   5   6   8   .
 -2:  -2   .   0   .   .   .   4   .   5   .   7   9   .
 -1:  -1   0   .   .   .   4   .   .   6   7   .  10   .
  0:   0   1   2   3   4   5   6   7   8   9  10  11  12
  1:   1   .   .   .   5   .   8   9   .   .  11   .   .
  2:   2   .   .   .   6   8   .  10   .  11   .   .   .
  3:   3   .   .   .   7   9  10   .  11   .   .   .   .
  4:   4   5   6   7   .   .   .   .   .   .   .  12   .
  5:   5   .   8   9   .   .   .   .   .   .  12   .   .
  6:   6   8   .  10   .   .   .   .   .  12   .   .   .
  7:   7   9  10   .   .   .   .   .  12   .   .   .   .
  8:   8   .   .  11   .   .   .  12   .   .   .   .   .
  9:   9   .  11   .   .   .  12   .   .   .   .   .   .
 10:  10  11   .   .   .  12   .   .   .   .   .   .   .
 11:  11   .   .   .  12   .   .   .   .   .   .   .   .
 12:  12   .   .   .   .   .   .   .   .   .   .   .   .";

/// Stored half of the table: `STORED[i + 12][j]` for i in −12..=12, j in 0..=12.
static STORED: Lazy<[[Option<i8>; 13]; 25]> = Lazy::new(|| {
    let mut rows = [[None; 13]; 25];
    for (r, line) in TABLE_DATA.lines().enumerate() {
        let (label, cells) = line.split_once(':').expect("row label");
        let i: i32 = label.trim().parse().expect("row index");
        assert_eq!(i, r as i32 - 12, "rows in ascending order");
        let parsed: Vec<Option<i8>> = cells
            .split_whitespace()
            .map(|c| {
                if c == "." {
                    None
                } else {
                    Some(c.parse::<i8>().expect("cell index"))
                }
            })
            .collect();
        assert_eq!(parsed.len(), 13, "13 columns in row {i}");
        rows[r] = parsed.try_into().unwrap();
    }
    rows
});

/// Support-level product: the index k with `W_i·W_j ⊆ W_k` when the
/// product is nonzero, `None` otherwise. Total on −12..=12 in both
/// arguments; lookups outside the stored half use commutativity and the
/// conjugation symmetry.
pub fn table_product(i: i8, j: i8) -> Option<i8> {
    assert!((-12..=12).contains(&i) && (-12..=12).contains(&j));
    if j >= 0 {
        STORED[(i + 12) as usize][j as usize]
    } else if i >= 0 {
        table_product(j, i)
    } else {
        table_product(-i, -j).map(|k| -k)
    }
}

/// Outcome of the cell-by-cell consistency sweep.
#[derive(Clone, Debug, Default)]
pub struct TableCheck {
    pub cells_checked: usize,
    /// nonzero cells whose index disagrees with the weight sum
    pub sum_rule_violations: Vec<String>,
    /// zero cells whose weight sum is nevertheless a weight
    pub explicit_zeros: Vec<String>,
    /// pairs where commutativity or conjugation symmetry fails
    pub symmetry_violations: Vec<String>,
    /// triples breaking the trilinear-form support symmetry
    pub trilinear_violations: Vec<String>,
}

impl TableCheck {
    pub fn is_consistent(&self) -> bool {
        self.sum_rule_violations.is_empty()
            && self.explicit_zeros.is_empty()
            && self.symmetry_violations.is_empty()
            && self.trilinear_violations.is_empty()
    }
}

/// Sweep the full extended table:
///
/// * every nonzero cell satisfies w_k = w_i + w_j;
/// * every zero cell has w_i + w_j outside the weight list (the table has
///   no other zeros);
/// * the extended table is symmetric and conjugation-equivariant;
/// * the trilinear support symmetry holds: if `W_i·W_j` meets `W_{−k}`
///   nontrivially then `W_j·W_k` meets `W_{−i}` and `W_k·W_i` meets `W_{−j}`.
pub fn verify_table() -> TableCheck {
    let mut check = TableCheck::default();
    for i in -12..=12i8 {
        for j in -12..=12i8 {
            check.cells_checked += 1;
            let sum = weight(i).add(&weight(j));
            match table_product(i, j) {
                Some(k) => {
                    if weight(k) != sum {
                        check
                            .sum_rule_violations
                            .push(format!("W{i}·W{j} -> W{k} but w{i}+w{j} != w{k}"));
                    }
                }
                None => {
                    if weight_index_of(&sum).is_some() {
                        check
                            .explicit_zeros
                            .push(format!("W{i}·W{j} = 0 though w{i}+w{j} is a weight"));
                    }
                }
            }
            if table_product(i, j) != table_product(j, i) {
                check
                    .symmetry_violations
                    .push(format!("commutativity fails at ({i},{j})"));
            }
            if table_product(-i, -j) != table_product(i, j).map(|k| -k) {
                check
                    .symmetry_violations
                    .push(format!("conjugation symmetry fails at ({i},{j})"));
            }
        }
    }
    // trilinear support symmetry on nonzero indices
    for i in -12..=12i8 {
        for j in -12..=12i8 {
            if i == 0 || j == 0 {
                continue;
            }
            if let Some(m) = table_product(i, j) {
                if m == 0 {
                    continue;
                }
                let k = -m;
                if table_product(j, k) != Some(-i) || table_product(k, i) != Some(-j) {
                    check
                        .trilinear_violations
                        .push(format!("trilinear symmetry fails at ({i},{j}) -> W{m}"));
                }
            }
        }
    }
    check
}

/// CSV of the stored half (rows −12..=12 by columns 0..=12); zero products
/// are written `0`, which is unambiguous because every cell with w_i+w_j=0
/// is a nonzero W₀ cell.
pub fn table_to_csv() -> String {
    let mut out = String::new();
    out.push('W');
    for j in 0..=12 {
        out.push_str(&format!(",W{j}"));
    }
    out.push('\n');
    for i in -12..=12i8 {
        out.push_str(&format!("W{i}"));
        for j in 0..=12i8 {
            match table_product(i, j) {
                Some(k) => out.push_str(&format!(",{k}")),
                None => out.push_str(",0"),
            }
        }
        out.push('\n');
    }
    out
}

/// Parse a CSV produced by [`table_to_csv`] back into a 25×13 array.
pub fn table_from_csv(csv: &str) -> Result<[[Option<i8>; 13]; 25], F4Error> {
    let mut rows = [[None; 13]; 25];
    let mut lines = csv.lines();
    let header = lines.next().ok_or_else(|| F4Error::BadCsv("empty".into()))?;
    if !header.starts_with("W,") {
        return Err(F4Error::BadCsv("missing header".into()));
    }
    for (r, line) in lines.enumerate() {
        if r >= 25 {
            return Err(F4Error::BadCsv("too many rows".into()));
        }
        let i = r as i8 - 12;
        let mut cells = line.split(',');
        let label = cells.next().unwrap_or("");
        if label != format!("W{i}") {
            return Err(F4Error::BadCsv(format!("row label {label:?}")));
        }
        for (c, cell) in cells.enumerate() {
            if c >= 13 {
                return Err(F4Error::BadCsv(format!("too many cells in row {i}")));
            }
            let j = c as i8;
            let k: i8 = cell
                .parse()
                .map_err(|_| F4Error::BadCsv(format!("cell {cell:?}")))?;
            rows[r][c] = if k == 0 {
                // genuine W₀ exactly when the weights cancel
                if weight(i).add(&weight(j)).is_zero() {
                    Some(0)
                } else {
                    None
                }
            } else {
                Some(k)
            };
        }
    }
    Ok(rows)
}

/// The stored half as an array, for round-trip comparisons.
pub fn stored_table() -> [[Option<i8>; 13]; 25] {
    *STORED
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_cells() {
        assert_eq!(table_product(-4, 12), Some(11));
        assert_eq!(table_product(12, 12), None);
        for j in -12..=12 {
            assert_eq!(table_product(0, j), Some(j), "W0 row acts as identity");
        }
    }

    #[test]
    fn row_w12_is_zero_off_the_w0_column() {
        for j in 1..=12 {
            assert_eq!(table_product(12, j), None);
        }
        assert_eq!(table_product(12, 0), Some(12));
        assert_eq!(table_product(12, -12), Some(0));
    }

    #[test]
    fn full_consistency_sweep() {
        let check = verify_table();
        assert_eq!(check.cells_checked, 625);
        assert!(
            check.is_consistent(),
            "sum: {:?}\nzeros: {:?}\nsym: {:?}\ntri: {:?}",
            check.sum_rule_violations,
            check.explicit_zeros,
            check.symmetry_violations,
            check.trilinear_violations
        );
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let csv = table_to_csv();
        let parsed = table_from_csv(&csv).unwrap();
        assert_eq!(parsed, stored_table());
        // and re-serialization is byte-identical
        let csv2 = {
            // rebuild through the parsed array
            let mut out = String::new();
            out.push('W');
            for j in 0..=12 {
                out.push_str(&format!(",W{j}"));
            }
            out.push('\n');
            for i in -12..=12i8 {
                out.push_str(&format!("W{i}"));
                for j in 0..=12i8 {
                    match parsed[(i + 12) as usize][j as usize] {
                        Some(k) => out.push_str(&format!(",{k}")),
                        None => out.push_str(",0"),
                    }
                }
                out.push('\n');
            }
            out
        };
        assert_eq!(csv, csv2);
    }

    #[test]
    fn bad_csv_is_rejected() {
        assert!(table_from_csv("").is_err());
        assert!(table_from_csv("W,W0\nW-12,potato\n").is_err());
    }

    // gradings add along the table: rho(ξ_I) acts as a derivation of the
    // weight-space product for each canonical element
    #[test]
    fn grading_additivity_over_all_cells() {
        use crate::f4::{rep_grading, CanonicalElement};
        for idx in [vec![4u8], vec![3], vec![3, 4]] {
            let xi = CanonicalElement::new(&idx).unwrap();
            for i in -12..=12i8 {
                for j in -12..=12i8 {
                    if let Some(k) = table_product(i, j) {
                        assert_eq!(
                            rep_grading(k, &xi),
                            rep_grading(i, &xi) + rep_grading(j, &xi),
                            "additivity at ({i},{j}) -> {k} for I={idx:?}"
                        );
                    }
                }
            }
        }
    }
}
