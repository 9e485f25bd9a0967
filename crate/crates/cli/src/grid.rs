//! Rectangular integer tables with optional blank cells.

use num_bigint::BigInt;
use serde_json::{json, Value};
use seriesforge::weight::json_int;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grid {
    pub name: String,
    /// Header of the key column, e.g. `m\s`.
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<Option<BigInt>>)>,
}

/// A cell that differs from the published value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub row: String,
    pub column: String,
    pub published: Option<BigInt>,
    pub computed: Option<BigInt>,
}

fn cell_text(c: &Option<BigInt>) -> String {
    c.as_ref().map(BigInt::to_string).unwrap_or_default()
}

impl Grid {
    pub fn to_csv(&self) -> String {
        let mut out = self.corner.clone();
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (key, cells) in &self.rows {
            out.push_str(key);
            for c in cells {
                out.push(',');
                out.push_str(&cell_text(c));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let mut text: Vec<Vec<String>> = vec![std::iter::once(self.corner.clone())
            .chain(self.columns.iter().cloned())
            .collect()];
        for (key, cells) in &self.rows {
            text.push(std::iter::once(key.clone()).chain(cells.iter().map(cell_text)).collect());
        }
        let widths: Vec<usize> = (0..text[0].len())
            .map(|i| text.iter().map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &text {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (cell, &w))| {
                    if i == 0 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(key, cells)| {
                let values: Vec<Value> = cells
                    .iter()
                    .map(|c| c.as_ref().map_or(Value::Null, json_int))
                    .collect();
                json!({ "key": key, "values": values })
            })
            .collect();
        json!({
            "table": self.name,
            "corner": self.corner,
            "columns": self.columns,
            "rows": rows,
        })
    }

    fn cell(&self, row: &str, column: &str) -> Option<&Option<BigInt>> {
        let ci = self.columns.iter().position(|c| c == column)?;
        let (_, cells) = self.rows.iter().find(|(k, _)| k == row)?;
        cells.get(ci)
    }

    /// Cells present in both grids whose values differ. Returns the
    /// mismatches and the number of cells compared.
    pub fn compare(&self, published: &Grid) -> (Vec<Mismatch>, usize) {
        let mut mismatches = Vec::new();
        let mut compared = 0;
        for (key, cells) in &self.rows {
            for (column, computed) in self.columns.iter().zip(cells) {
                let Some(expected) = published.cell(key, column) else {
                    continue;
                };
                compared += 1;
                if expected != computed {
                    mismatches.push(Mismatch {
                        row: key.clone(),
                        column: column.clone(),
                        published: expected.clone(),
                        computed: computed.clone(),
                    });
                }
            }
        }
        (mismatches, compared)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid {
            name: "demo".into(),
            corner: "m\\s".into(),
            columns: vec!["1".into(), "2".into()],
            rows: vec![
                ("1".into(), vec![Some(1.into()), None]),
                ("2".into(), vec![Some(1.into()), Some(12345.into())]),
            ],
        }
    }

    #[test]
    fn renders() {
        let g = grid();
        assert_eq!(g.to_csv(), "m\\s,1,2\n1,1,\n2,1,12345\n");
        assert_eq!(g.to_plain(), "m\\s  1      2\n1    1\n2    1  12345\n");
        assert_eq!(
            g.to_json().to_string(),
            r#"{"table":"demo","corner":"m\\s","columns":["1","2"],"rows":[{"key":"1","values":[1,null]},{"key":"2","values":[1,12345]}]}"#
        );
    }

    #[test]
    fn compares_overlap_only() {
        let g = grid();
        let mut p = grid();
        p.rows[1].1[1] = Some(7.into());
        p.columns.push("3".into());
        let (bad, n) = g.compare(&p);
        assert_eq!(n, 4);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].row, "2");
        assert_eq!(bad[0].column, "2");
    }
}
