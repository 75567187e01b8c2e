use crate::args::Format;
use crate::report::{Report, Table};
use std::fmt::Write;

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("report serializes");
            out.push('\n');
            out
        }
        Format::Text => text(report),
        Format::Csv => csv(&report.result.tables()),
    }
}

fn text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ({})", report.command, report.format);
    for table in report.result.tables() {
        let _ = writeln!(out, "\n{}", table.title);
        let widths: Vec<usize> = (0..table.headers.len())
            .map(|c| {
                table
                    .rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([table.headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "{}", line(&table.headers));
        for row in &table.rows {
            let _ = writeln!(out, "{}", line(row));
        }
    }
    out
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// One block per table, each with its own header row; blocks are separated
/// by a blank line.
fn csv(tables: &[Table]) -> String {
    let mut blocks = Vec::new();
    for table in tables {
        let mut block = String::new();
        let _ = writeln!(
            block,
            "{}",
            table
                .headers
                .iter()
                .map(|h| csv_cell(h))
                .collect::<Vec<_>>()
                .join(",")
        );
        for row in &table.rows {
            let _ = writeln!(
                block,
                "{}",
                row.iter()
                    .map(|c| csv_cell(c))
                    .collect::<Vec<_>>()
                    .join(",")
            );
        }
        blocks.push(block);
    }
    blocks.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_only_when_needed() {
        assert_eq!(csv_cell("5096"), "5096");
        assert_eq!(csv_cell("1 2 3"), "1 2 3");
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
    }

    #[test]
    fn csv_blocks_are_separated() {
        let t = Table {
            title: "t".into(),
            headers: vec!["a".into(), "b".into()],
            rows: vec![vec!["1".into(), "2".into()]],
        };
        assert_eq!(csv(&[t.clone(), t]), "a,b\n1,2\n\na,b\n1,2\n");
    }
}
