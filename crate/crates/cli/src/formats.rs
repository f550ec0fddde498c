//! Table serialization: the aligned text layout, CSV and JSON.
//!
//! CSV carries a `B,F,count` header, LF line endings and UTF-8 text. JSON is
//! a single array of `{"b", "f", "count"}` objects per invocation, with the
//! count as a decimal string so that arbitrarily large values survive
//! consumers that parse numbers as doubles. Both formats round-trip back
//! into the same [`CountTable`].

use std::collections::BTreeSet;

use pauli_necklaces::counting::{CountTable, Provenance, TableKind};
use pauli_necklaces::BigInt;

/// Aligned rows/columns mirroring the published layout: `B` down, `F`
/// across, blanks where the table has no entry. Forbidden tables print only
/// the even rows and columns; the odd ones vanish identically.
pub fn render_text(table: &CountTable) -> String {
    let keep = |v: usize| table.kind != TableKind::Forbidden || v.is_multiple_of(2);
    let bs: BTreeSet<usize> = table
        .iter()
        .map(|(b, _, _)| b)
        .filter(|&b| keep(b))
        .collect();
    let fs: BTreeSet<usize> = table
        .iter()
        .map(|(_, f, _)| f)
        .filter(|&f| keep(f))
        .collect();

    let cell = |b: usize, f: usize| -> String {
        table.get(b, f).map(|v| v.to_string()).unwrap_or_default()
    };
    let mut widths: Vec<usize> = fs.iter().map(|f| f.to_string().len()).collect();
    for (ci, &f) in fs.iter().enumerate() {
        for &b in &bs {
            widths[ci] = widths[ci].max(cell(b, f).len());
        }
    }
    let b_width = "B\\F"
        .len()
        .max(bs.iter().last().map_or(0, |b| b.to_string().len()));

    let mut out = String::new();
    out.push_str(&format!("{:>b_width$}", "B\\F"));
    for (ci, &f) in fs.iter().enumerate() {
        out.push_str(&format!("  {:>w$}", f, w = widths[ci]));
    }
    out.push('\n');
    for &b in &bs {
        out.push_str(&format!("{b:>b_width$}"));
        for (ci, &f) in fs.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", cell(b, f), w = widths[ci]));
        }
        out.push('\n');
    }
    out
}

/// `B,F,count` rows in ascending `(B, F)` order.
pub fn to_csv(table: &CountTable) -> String {
    let mut out = String::from("B,F,count\n");
    for (b, f, v) in table.iter() {
        out.push_str(&format!("{b},{f},{v}\n"));
    }
    out
}

pub fn from_csv(kind: TableKind, provenance: Provenance, text: &str) -> Result<CountTable, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some("B,F,count") => {}
        other => return Err(format!("bad csv header: {other:?}")),
    }
    let mut table = CountTable::new(kind, provenance);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(format!("bad csv row: {line:?}"));
        }
        let b = fields[0]
            .parse::<usize>()
            .map_err(|e| format!("bad B in {line:?}: {e}"))?;
        let f = fields[1]
            .parse::<usize>()
            .map_err(|e| format!("bad F in {line:?}: {e}"))?;
        let v = fields[2]
            .parse::<BigInt>()
            .map_err(|e| format!("bad count in {line:?}: {e}"))?;
        table.insert(b, f, v);
    }
    Ok(table)
}

/// A single JSON array of `{"b", "f", "count"}` objects; counts are decimal
/// strings.
pub fn to_json(table: &CountTable) -> String {
    let cells: Vec<serde_json::Value> = table
        .iter()
        .map(|(b, f, v)| serde_json::json!({ "b": b, "f": f, "count": v.to_string() }))
        .collect();
    let mut out =
        serde_json::to_string_pretty(&serde_json::Value::Array(cells)).expect("table serializes");
    out.push('\n');
    out
}

pub fn from_json(
    kind: TableKind,
    provenance: Provenance,
    text: &str,
) -> Result<CountTable, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let cells = value.as_array().ok_or("expected a JSON array of cells")?;
    let mut table = CountTable::new(kind, provenance);
    for cell in cells {
        let b = cell["b"].as_u64().ok_or("cell is missing \"b\"")? as usize;
        let f = cell["f"].as_u64().ok_or("cell is missing \"f\"")? as usize;
        let count = cell["count"]
            .as_str()
            .ok_or("cell count must be a string")?;
        let v = count
            .parse::<BigInt>()
            .map_err(|e| format!("bad count {count:?}: {e}"))?;
        table.insert(b, f, v);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_round_trip() {
        for kind in [TableKind::Allowed, TableKind::Forbidden, TableKind::Total] {
            let table = CountTable::triangle(kind, 9);
            let csv = to_csv(&table);
            assert!(csv.ends_with('\n'));
            assert_eq!(from_csv(kind, Provenance::ClosedForm, &csv).unwrap(), table);
            let json = to_json(&table);
            assert_eq!(
                from_json(kind, Provenance::ClosedForm, &json).unwrap(),
                table
            );
        }
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(from_csv(TableKind::Allowed, Provenance::ClosedForm, "nope\n1,2,3\n").is_err());
        assert!(from_csv(
            TableKind::Allowed,
            Provenance::ClosedForm,
            "B,F,count\n1,2\n"
        )
        .is_err());
        assert!(from_csv(
            TableKind::Allowed,
            Provenance::ClosedForm,
            "B,F,count\n1,2,x\n"
        )
        .is_err());
    }

    #[test]
    fn text_layout_hides_odd_forbidden_lines() {
        let table = CountTable::rectangle(TableKind::Forbidden, 4, 4);
        let text = render_text(&table);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap().split_whitespace().collect::<Vec<_>>(),
            ["B\\F", "0", "2", "4"]
        );
        assert_eq!(text.lines().count(), 4); // header + rows 0, 2, 4
    }

    #[test]
    fn text_layout_blank_cells_outside_triangle() {
        let table = CountTable::triangle(TableKind::Allowed, 2);
        let text = render_text(&table);
        // Row B=2 has entries only at F=0.
        let row2 = text.lines().last().unwrap();
        assert_eq!(row2.split_whitespace().collect::<Vec<_>>(), ["2", "1"]);
    }
}
