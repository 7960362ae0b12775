//! Line-oriented poset files and table rendering.
//!
//! ```text
//! # comment
//! poset fig6
//! elements 0 a b c d 1
//! cover 0 a
//! cover a c
//! unary a a'
//! ```
//!
//! `elements` may be repeated; labels accumulate in order. Labels are any
//! whitespace-free token except `#`, so primes are ordinary characters.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::properties::{render_set, UnaryOp};
use crate::residuation::SetValuedTable;
use crate::set::ElementSet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    /// Either empty or one entry per element.
    pub unary: Vec<(String, String)>,
}

impl PosetDocument {
    pub fn to_poset(&self) -> Result<Poset> {
        Poset::from_covers(&self.elements, &self.covers)
    }

    /// The unary operation of the document, resolved against `p`.
    pub fn unary_op(&self, p: &Poset) -> Result<Option<UnaryOp>> {
        if self.unary.is_empty() {
            Ok(None)
        } else {
            UnaryOp::from_pairs(p, &self.unary).map(Some)
        }
    }

    /// A document for `p` listing its cover relation.
    pub fn from_poset(name: &str, p: &Poset, u: Option<&UnaryOp>) -> PosetDocument {
        let label = |i: usize| p.name(i).to_owned();
        PosetDocument {
            name: name.to_owned(),
            elements: p.names().to_vec(),
            covers: p.covers().into_iter().map(|(a, b)| (label(a), label(b))).collect(),
            unary: u
                .map(|u| (0..p.len()).map(|x| (label(x), label(u.apply(x)))).collect())
                .unwrap_or_default(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "poset {}", self.name).unwrap();
        writeln!(out, "elements {}", self.elements.join(" ")).unwrap();
        for (lo, hi) in &self.covers {
            writeln!(out, "cover {lo} {hi}").unwrap();
        }
        for (x, y) in &self.unary {
            writeln!(out, "unary {x} {y}").unwrap();
        }
        out
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_poset_file(text: &str) -> Result<PosetDocument> {
    let mut name: Option<String> = None;
    let mut doc = PosetDocument::default();
    let mut declared = HashSet::new();
    let mut unary_seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = line.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let args: Vec<&str> = tokens.collect();
        if name.is_none() && keyword != "poset" {
            return Err(syntax(line_no, "expected `poset <name>` header first"));
        }
        let known = |label: &str| {
            if declared.contains(label) {
                Ok(label.to_owned())
            } else {
                Err(Error::UnknownLabel(label.to_owned()))
            }
        };
        match keyword {
            "poset" => {
                if name.is_some() {
                    return Err(syntax(line_no, "duplicate `poset` header"));
                }
                let [n] = args[..] else {
                    return Err(syntax(line_no, "`poset` takes exactly one name"));
                };
                name = Some(n.to_owned());
            }
            "elements" => {
                if args.is_empty() {
                    return Err(syntax(line_no, "`elements` needs at least one label"));
                }
                for label in args {
                    if !declared.insert(label.to_owned()) {
                        return Err(Error::DuplicateLabel(label.to_owned()));
                    }
                    doc.elements.push(label.to_owned());
                }
            }
            "cover" => {
                let [lo, hi] = args[..] else {
                    return Err(syntax(line_no, "`cover` takes two labels"));
                };
                doc.covers.push((known(lo)?, known(hi)?));
            }
            "unary" => {
                let [x, y] = args[..] else {
                    return Err(syntax(line_no, "`unary` takes two labels"));
                };
                let x = known(x)?;
                let y = known(y)?;
                if !unary_seen.insert(x.clone()) {
                    return Err(syntax(line_no, format!("second `unary` entry for `{x}`")));
                }
                doc.unary.push((x, y));
            }
            other => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
        }
    }

    doc.name = name.ok_or_else(|| syntax(text.lines().count().max(1), "missing `poset` header"))?;
    if doc.elements.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if !doc.unary.is_empty() {
        if let Some(missing) = doc.elements.iter().find(|e| !unary_seen.contains(*e)) {
            return Err(Error::PartialUnaryMap(missing.clone()));
        }
    }
    Ok(doc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Tsv,
    Markdown,
}

impl std::str::FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tsv" => Ok(TableFormat::Tsv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            _ => Err(format!("unknown table format `{s}` (expected tsv or markdown)")),
        }
    }
}

/// Rows and columns in declaration order. Singletons print as bare labels,
/// other sets as `{x,y}`.
pub fn render_table(p: &Poset, table: &SetValuedTable, format: TableFormat) -> String {
    let n = table.size();
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![table.kind().symbol().to_owned()];
    header.extend(p.names().iter().take(n).cloned());
    rows.push(header);
    for x in 0..n {
        let mut row = vec![p.name(x).to_owned()];
        row.extend((0..n).map(|y| render_set(p, table.get(x, y))));
        rows.push(row);
    }

    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            for row in rows {
                writeln!(out, "{}", row.join("\t")).unwrap();
            }
        }
        TableFormat::Markdown => {
            for (i, row) in rows.iter().enumerate() {
                writeln!(out, "| {} |", row.join(" | ")).unwrap();
                if i == 0 {
                    writeln!(out, "|{}", "---|".repeat(row.len())).unwrap();
                }
            }
        }
    }
    out
}

/// Splits rendered or transcribed table text into rows of cells, dropping
/// blank lines and Markdown separator rows. Cell whitespace is removed.
pub fn table_cells(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.trim_matches(|c| c == '|' || c == '-').is_empty())
        .map(|l| {
            if l.starts_with('|') {
                l.trim_matches('|')
                    .split('|')
                    .map(|c| c.split_whitespace().collect())
                    .collect()
            } else {
                l.split_whitespace().map(str::to_owned).collect()
            }
        })
        .collect()
}

/// One differing cell between two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDiff {
    pub row: String,
    pub column: String,
    pub expected: String,
    pub actual: String,
}

/// Compares two tables cell by cell, both given as text in any format
/// accepted by [`table_cells`]. Braced cells are compared as sets, so
/// `{b',c'}` equals `{c',b'}`. Shape mismatches are reported as a diff on
/// the header cell.
pub fn diff_tables(expected: &str, actual: &str) -> Vec<CellDiff> {
    let (e, a) = (table_cells(expected), table_cells(actual));
    let shape = |t: &Vec<Vec<String>>| t.iter().map(Vec::len).collect::<Vec<_>>();
    if shape(&e) != shape(&a) || e.is_empty() {
        return vec![CellDiff {
            row: String::new(),
            column: String::new(),
            expected: format!("shape {:?}", shape(&e)),
            actual: format!("shape {:?}", shape(&a)),
        }];
    }
    let mut diffs = Vec::new();
    for (r, (er, ar)) in e.iter().zip(&a).enumerate() {
        for (c, (ec, ac)) in er.iter().zip(ar).enumerate() {
            if !cells_equal(ec, ac) {
                diffs.push(CellDiff {
                    row: if r == 0 { String::new() } else { er[0].clone() },
                    column: e[0][c].clone(),
                    expected: ec.clone(),
                    actual: ac.clone(),
                });
            }
        }
    }
    diffs
}

/// Whether two printed cells denote the same set.
pub fn cells_equal(a: &str, b: &str) -> bool {
    set_key(a) == set_key(b)
}

fn set_key(cell: &str) -> Vec<&str> {
    match cell.strip_prefix('{').and_then(|c| c.strip_suffix('}')) {
        Some(inner) => {
            let mut members: Vec<&str> = inner.split(',').filter(|m| !m.is_empty()).collect();
            members.sort_unstable();
            members.dedup();
            members
        }
        None => vec![cell],
    }
}

/// Parses a cell: a bare label or `{x,y,..}`. `{}` is the empty set.
pub fn parse_cell(p: &Poset, cell: &str) -> Result<ElementSet> {
    match cell.strip_prefix('{').and_then(|c| c.strip_suffix('}')) {
        Some("") => Ok(ElementSet::EMPTY),
        Some(inner) => inner.split(',').map(|l| p.index_of(l.trim())).collect(),
        None => p.index_of(cell).map(ElementSet::singleton),
    }
}

/// Reads a table printed with the poset's labels back into a
/// [`SetValuedTable`]. Rows and columns may appear in any order, but every
/// element must appear exactly once on each axis.
pub fn parse_table(
    p: &Poset,
    kind: crate::residuation::OpKind,
    text: &str,
) -> Result<SetValuedTable> {
    let rows = table_cells(text);
    let n = p.len();
    let bad = |m: &str| syntax(0, m.to_owned());
    let header = rows.first().ok_or_else(|| bad("empty table"))?;
    if header.len() != n + 1 || rows.len() != n + 1 {
        return Err(Error::TableShape {
            table: rows.len().saturating_sub(1),
            poset: n,
        });
    }
    let columns = header[1..]
        .iter()
        .map(|l| p.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    let mut grid = vec![None; n * n];
    for row in &rows[1..] {
        if row.len() != n + 1 {
            return Err(bad("ragged table row"));
        }
        let x = p.index_of(&row[0])?;
        for (cell, &y) in row[1..].iter().zip(&columns) {
            grid[x * n + y] = Some(parse_cell(p, cell)?);
        }
    }
    if grid.iter().any(Option::is_none) {
        return Err(bad("table does not cover every row and column"));
    }
    Ok(SetValuedTable::from_fn(kind, n, |x, y| {
        grid[x * n + y].expect("checked above")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residuation::OpKind;

    const FIG6: &str = "\
# relatively pseudocomplemented
poset fig6
elements 0 a b c d 1
cover 0 a
cover 0 b
cover a c
cover a d
cover b c
cover b d
cover c 1
cover d 1
";

    #[test]
    fn parses_fig6() {
        let doc = parse_poset_file(FIG6).unwrap();
        assert_eq!(doc.name, "fig6");
        assert_eq!(doc.elements.len(), 6);
        assert_eq!(doc.covers.len(), 8);
        assert!(doc.unary.is_empty());
        let p = doc.to_poset().unwrap();
        assert!(p.is_bounded());
        assert_eq!(doc.unary_op(&p).unwrap(), None);
    }

    #[test]
    fn partial_unary_map() {
        let text = "poset t\nelements a b\nunary a b\n";
        assert!(matches!(parse_poset_file(text), Err(Error::PartialUnaryMap(l)) if l == "b"));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("elements a\n", 1),
            ("poset t\nelements a\ncover a\n", 3),
            ("poset t\n\nelements a\nfrob a\n", 4),
            ("poset t\nposet u\n", 2),
            ("poset t\nelements a b\nunary a b\nunary a a\nunary b a\n", 4),
        ];
        for (text, line) in cases {
            match parse_poset_file(text) {
                Err(Error::Syntax { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_poset_file("poset t\nelements a\ncover a z\n"),
            Err(Error::UnknownLabel(l)) if l == "z"
        ));
        assert!(matches!(
            parse_poset_file("poset t\nelements a a\n"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn comments_and_primes() {
        let text = "poset t # trailing\n  elements x x'  \n# full line\nunary x x'\nunary x' x\n";
        let doc = parse_poset_file(text).unwrap();
        assert_eq!(doc.elements, vec!["x", "x'"]);
        assert_eq!(doc.unary.len(), 2);
    }

    #[test]
    fn render_parses_back() {
        let doc = parse_poset_file(FIG6).unwrap();
        assert_eq!(parse_poset_file(&doc.render()).unwrap(), doc);
    }

    #[test]
    fn table_rendering() {
        let p = Poset::from_covers::<_, &str>(&["x"], &[]).unwrap();
        let t = SetValuedTable::from_fn(OpKind::Odot, 1, |_, _| ElementSet::singleton(0));
        assert_eq!(render_table(&p, &t, TableFormat::Tsv), "⊙\tx\nx\tx\n");
        assert_eq!(
            render_table(&p, &t, TableFormat::Markdown),
            "| ⊙ | x |\n|---|---|\n| x | x |\n"
        );
        let doc = parse_poset_file(FIG6).unwrap();
        let p = doc.to_poset().unwrap();
        let t = SetValuedTable::from_fn(OpKind::Odot, 6, |x, y| {
            p.max(p.lower_cone(ElementSet::from([x, y])))
        });
        let tsv = render_table(&p, &t, TableFormat::Tsv);
        let cells = table_cells(&tsv);
        assert_eq!(cells[4][5], "{a,b}");
        assert_eq!(parse_table(&p, OpKind::Odot, &tsv).unwrap(), t);
        let md = render_table(&p, &t, TableFormat::Markdown);
        assert!(diff_tables(&tsv, &md).is_empty());
    }

    #[test]
    fn cell_parsing() {
        let p = parse_poset_file(FIG6).unwrap().to_poset().unwrap();
        assert_eq!(parse_cell(&p, "{a,b}").unwrap(), ElementSet::from([1, 2]));
        assert_eq!(parse_cell(&p, "d").unwrap(), ElementSet::singleton(4));
        assert_eq!(parse_cell(&p, "{}").unwrap(), ElementSet::EMPTY);
        assert!(parse_cell(&p, "{a,q}").is_err());
    }

    #[test]
    fn diffs_locate_cells() {
        let a = "⊙ x y\nx x 0\ny 0 y\n";
        let b = "⊙ x y\nx x 0\ny {x,y} y\n";
        let d = diff_tables(a, b);
        assert_eq!(
            d,
            vec![CellDiff {
                row: "y".into(),
                column: "x".into(),
                expected: "0".into(),
                actual: "{x,y}".into()
            }]
        );
        assert_eq!(diff_tables(a, "⊙ x\nx x\n").len(), 1);
    }

    #[test]
    fn braced_cells_compare_as_sets() {
        let a = "→ x y\nx {x,y} y\ny x y\n";
        let b = "→ x y\nx {y,x} y\ny x y\n";
        assert!(diff_tables(a, b).is_empty());
        let c = "→ x y\nx {x} y\ny x y\n";
        assert_eq!(diff_tables(a, c).len(), 1);
    }
}
