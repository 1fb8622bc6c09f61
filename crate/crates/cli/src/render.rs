//! Text and JSON renderings of a [`ResultDocument`].

use std::fmt::Write;

use crate::compute::{JetOrderResult, ResultDocument};

pub fn json(doc: &ResultDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("result documents serialize");
    out.push('\n');
    out
}

/// `M_n` with a bar between column blocks and a rule between row blocks.
pub fn block_matrix(rows: &[Vec<String>], block: [usize; 2]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let cells = |r: &Vec<String>| {
        let mut line = String::from("[ ");
        for (j, cell) in r.iter().enumerate() {
            if j > 0 {
                line.push_str(if j % block[1] == 0 { " | " } else { "  " });
            }
            let _ = write!(line, "{cell:<w$}", w = widths[j]);
        }
        line.push_str(" ]");
        line
    };
    let mut out = String::new();
    for (i, r) in rows.iter().enumerate() {
        if i > 0 && i % block[0] == 0 {
            let rule: String = cells(r)
                .chars()
                .map(|c| match c {
                    '|' => '+',
                    '[' | ']' => c,
                    _ => '-',
                })
                .collect();
            out.push_str(&rule);
            out.push('\n');
        }
        out.push_str(&cells(r));
        out.push('\n');
    }
    out
}

fn ideal(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

fn order(out: &mut String, r: &JetOrderResult) {
    let n = r.jet_order;
    let _ = writeln!(out, "n = {n}");
    let _ = writeln!(out, "M_{n} =");
    for line in block_matrix(&r.jet_matrix, r.block_shape).lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(out, "a_{n} = {}", ideal(&r.generators));
    if !r.jet_relations.is_empty() {
        let _ = writeln!(out, "jet relations = {}", ideal(&r.jet_relations));
    }
    if let Some(main) = &r.main_component {
        let _ = writeln!(out, "main component = {}", ideal(main));
    }
    if let Some(v) = &r.verification {
        if v.equal {
            let _ = writeln!(out, "verification: a_{n} = {}", v.expected);
        } else {
            let _ = writeln!(out, "verification: FAIL");
            for line in v.failures() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(out, "time: {ms:.1} ms");
    }
}

pub fn text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "variables: {}", doc.variables.join(", "));
    if !doc.relations.is_empty() {
        let _ = writeln!(out, "relations: {}", doc.relations.join(", "));
    }
    let _ = writeln!(out, "rank: {}", doc.rank);
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for r in &doc.results {
        out.push('\n');
        order(&mut out, r);
    }
    if let Some(ok) = doc.verified {
        let _ = writeln!(out, "\n{}", if ok { "verified" } else { "verification failed" });
    }
    out
}

/// Only the verdicts, for the `verify` subcommand.
pub fn verdicts(doc: &ResultDocument) -> String {
    let mut out = String::new();
    for r in &doc.results {
        let Some(v) = &r.verification else { continue };
        if v.equal {
            let _ = writeln!(out, "PASS a_{}", r.jet_order);
        } else {
            let _ = writeln!(out, "FAIL a_{}", r.jet_order);
            for line in v.failures() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn blocks_are_separated() {
        let m = strings(&[&["x", "y", "0", "0"], &["x_1", "y_1", "x", "y"]]);
        let drawn = block_matrix(&m, [1, 2]);
        assert_eq!(drawn, "[ x    y   | 0  0 ]\n[----------+------]\n[ x_1  y_1 | x  y ]\n");
    }

    #[test]
    fn single_block_has_no_rules() {
        let m = strings(&[&["x", "y"]]);
        assert_eq!(block_matrix(&m, [1, 2]), "[ x  y ]\n");
    }
}
