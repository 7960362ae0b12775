//! The built-in example corpus: six posets with their unary operations,
//! the construction each one illustrates, the printed `⊙`/`→` tables where
//! available, and the structural verdicts each one is known to have.

use crate::error::{Error, Result};
use crate::io::{cells_equal, diff_tables, parse_poset_file, render_table, CellDiff, PosetDocument, TableFormat};
use crate::poset::Poset;
use crate::properties::{full_report, names, PropertyReport, UnaryOp};
use crate::residuation::{
    build_tables, verify_identity_suite, verify_left_adjointness, AdjointnessVerdict, OpKind,
    SetValuedTable, Variant,
};

#[derive(Clone, Copy, Debug)]
pub struct FixtureEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub source: &'static str,
    pub variant: Variant,
    pub golden_odot: Option<&'static str>,
    pub golden_arrow: Option<&'static str>,
    /// `(verdict name, expected outcome)` against [`full_report`].
    pub expected: &'static [(&'static str, bool)],
    /// Printed cells that contradict the construction.
    pub errata: &'static [Erratum],
}

/// A printed table cell known to be wrong, with the value the construction
/// actually yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub table: OpKind,
    pub row: &'static str,
    pub column: &'static str,
    pub printed: &'static str,
    pub computed: &'static str,
}

const fn erratum(
    table: OpKind,
    row: &'static str,
    column: &'static str,
    printed: &'static str,
    computed: &'static str,
) -> Erratum {
    Erratum {
        table,
        row,
        column,
        printed,
        computed,
    }
}

use OpKind::{Arrow, Odot};

/// In the f and f' rows of the → table every Boolean-part entry is printed
/// as y' where the construction gives f' (resp. f). The printed table is
/// not residuated: f' ⊙ f = 0 <= a but f' is not below the printed f → a.
const FIG3_ERRATA: [Erratum; 20] = [
    erratum(Arrow, "f", "a", "a'", "f'"),
    erratum(Arrow, "f", "b", "b'", "f'"),
    erratum(Arrow, "f", "c", "c'", "f'"),
    erratum(Arrow, "f", "d", "d'", "f'"),
    erratum(Arrow, "f", "e", "e'", "f'"),
    erratum(Arrow, "f", "e'", "e", "f'"),
    erratum(Arrow, "f", "d'", "d", "f'"),
    erratum(Arrow, "f", "c'", "c", "f'"),
    erratum(Arrow, "f", "b'", "b", "f'"),
    erratum(Arrow, "f", "a'", "a", "f'"),
    erratum(Arrow, "f'", "a", "a'", "f"),
    erratum(Arrow, "f'", "b", "b'", "f"),
    erratum(Arrow, "f'", "c", "c'", "f"),
    erratum(Arrow, "f'", "d", "d'", "f"),
    erratum(Arrow, "f'", "e", "e'", "f"),
    erratum(Arrow, "f'", "e'", "e", "f"),
    erratum(Arrow, "f'", "d'", "d", "f"),
    erratum(Arrow, "f'", "c'", "c", "f"),
    erratum(Arrow, "f'", "b'", "b", "f"),
    erratum(Arrow, "f'", "a'", "a", "f"),
];

/// Cells with x <= y' printed as f, the value of the general formula, where
/// the piecewise construction forces 0. The printed table is not
/// residuated: a ⊙ e' = f is not below 0, yet a <= e = e' → 0.
const FIG4_ERRATA: [Erratum; 13] = [
    erratum(Odot, "a", "e'", "f", "0"),
    erratum(Odot, "a", "a'", "f", "0"),
    erratum(Odot, "b", "e'", "f", "0"),
    erratum(Odot, "b", "b'", "f", "0"),
    erratum(Odot, "c", "e", "f", "0"),
    erratum(Odot, "c", "c'", "f", "0"),
    erratum(Odot, "d", "d'", "f", "0"),
    erratum(Odot, "e", "e'", "f", "0"),
    erratum(Odot, "e'", "e", "f", "0"),
    erratum(Odot, "d'", "d", "f", "0"),
    erratum(Odot, "c'", "c", "f", "0"),
    erratum(Odot, "b'", "b", "f", "0"),
    erratum(Odot, "a'", "a", "f", "0"),
];

use names::*;

const TH1_ALL: [(&str, bool); 3] = [(TH1_ONE_PRIME, true), (TH1_LOWER, true), (TH1_UPPER, true)];

const TH3_ALL: [(&str, bool); 7] = [
    (TH3_ZERO_PRIME, true),
    (TH3_ONE_PRIME, true),
    (TH3_PRIME_NOT_ONE, true),
    (TH3_LOWER, true),
    (TH3_UPPER, true),
    (TH3_LOWER_INCLUSION, true),
    (TH3_UPPER_INCLUSION, true),
];

macro_rules! concat_slices {
    ($($s:expr),* $(,)?) => {{
        const LEN: usize = 0 $(+ $s.len())*;
        const OUT: [(&str, bool); LEN] = {
            let mut out = [("", false); LEN];
            let mut i = 0;
            $(
                let s = $s;
                let mut j = 0;
                while j < s.len() {
                    out[i] = s[j];
                    i += 1;
                    j += 1;
                }
            )*
            let _ = i;
            out
        };
        &OUT
    }};
}

pub const FIXTURES: &[FixtureEntry] = &[
    FixtureEntry {
        id: "fig1",
        description: "12-element Boolean poset",
        source: include_str!("../fixtures/fig1.poset"),
        variant: Variant::Boolean,
        golden_odot: Some(include_str!("../fixtures/fig1_odot.txt")),
        golden_arrow: Some(include_str!("../fixtures/fig1_arrow.txt")),
        expected: concat_slices!(
            [
                (BOUNDED, true),
                (INVOLUTION, true),
                (ANTITONE, true),
                (COMPLEMENTED, true),
                (DISTRIBUTIVE, true),
                (MODULAR, true),
                (STRONGLY_MODULAR_FIRST, true),
                (STRONGLY_MODULAR_SECOND, true),
            ],
            TH1_ALL,
        ),
        errata: &[],
    },
    FixtureEntry {
        id: "fig2",
        description: "complemented strongly modular poset, complementation not an involution",
        source: include_str!("../fixtures/fig2.poset"),
        variant: Variant::Th1,
        golden_odot: None,
        golden_arrow: None,
        expected: concat_slices!(
            [
                (BOUNDED, true),
                (INVOLUTION, false),
                (COMPLEMENTED, true),
                (STRONGLY_MODULAR_FIRST, true),
                (STRONGLY_MODULAR_SECOND, true),
                (DISTRIBUTIVE, false),
            ],
            TH1_ALL,
        ),
        errata: &[],
    },
    FixtureEntry {
        id: "fig3",
        description: "14-element non-modular poset meeting the Th1 premises",
        source: include_str!("../fixtures/fig3.poset"),
        variant: Variant::Th1,
        golden_odot: Some(include_str!("../fixtures/fig3_odot.txt")),
        golden_arrow: Some(include_str!("../fixtures/fig3_arrow.txt")),
        expected: concat_slices!(
            [
                (BOUNDED, true),
                (INVOLUTION, true),
                (ANTITONE, true),
                (COMPLEMENTED, true),
                (MODULAR, false),
                (DISTRIBUTIVE, false),
            ],
            TH1_ALL,
        ),
        errata: &FIG3_ERRATA,
    },
    FixtureEntry {
        id: "fig4",
        description: "14-element non-lattice meeting the piecewise premises",
        source: include_str!("../fixtures/fig4.poset"),
        variant: Variant::Piecewise,
        golden_odot: Some(include_str!("../fixtures/fig4_odot.txt")),
        golden_arrow: Some(include_str!("../fixtures/fig4_arrow.txt")),
        expected: concat_slices!(
            [
                (BOUNDED, true),
                (INVOLUTION, true),
                (ANTITONE, true),
                (COMPLEMENTED, false),
            ],
            TH3_ALL,
        ),
        errata: &FIG4_ERRATA,
    },
    FixtureEntry {
        id: "fig5",
        description: "7-element lattice with a non-involutive unary operation",
        source: include_str!("../fixtures/fig5.poset"),
        variant: Variant::Piecewise,
        golden_odot: Some(include_str!("../fixtures/fig5_odot.txt")),
        golden_arrow: Some(include_str!("../fixtures/fig5_arrow.txt")),
        expected: concat_slices!([(BOUNDED, true), (INVOLUTION, false)], TH3_ALL),
        errata: &[],
    },
    FixtureEntry {
        id: "fig6",
        description: "6-element relatively pseudocomplemented non-lattice",
        source: include_str!("../fixtures/fig6.poset"),
        variant: Variant::Rp,
        golden_odot: Some(include_str!("../fixtures/fig6_odot.txt")),
        golden_arrow: Some(include_str!("../fixtures/fig6_arrow.txt")),
        expected: &[(BOUNDED, true), (RELATIVELY_PSEUDOCOMPLEMENTED, true)],
        errata: &[],
    },
];

/// Looks up a fixture by id, accepting `fig3` as well as `fixtures/fig3`.
pub fn fixture(id: &str) -> Option<&'static FixtureEntry> {
    let id = id.strip_prefix("fixtures/").unwrap_or(id);
    let id = id.strip_suffix(".poset").unwrap_or(id);
    FIXTURES.iter().find(|f| f.id == id)
}

/// A fixture parsed and resolved.
#[derive(Clone, Debug)]
pub struct LoadedFixture {
    pub entry: &'static FixtureEntry,
    pub document: PosetDocument,
    pub poset: Poset,
    pub unary: Option<UnaryOp>,
}

impl FixtureEntry {
    pub fn load(&'static self) -> Result<LoadedFixture> {
        let document = parse_poset_file(self.source)?;
        let poset = document.to_poset()?;
        let unary = document.unary_op(&poset)?;
        Ok(LoadedFixture {
            entry: self,
            document,
            poset,
            unary,
        })
    }
}

impl LoadedFixture {
    pub fn tables(&self) -> Result<(SetValuedTable, SetValuedTable)> {
        build_tables(&self.poset, self.unary.as_ref(), self.entry.variant, true)
    }

    /// The printed tables, resolved against the poset's labels.
    pub fn golden_tables(&self) -> Result<Option<(SetValuedTable, SetValuedTable)>> {
        match (self.entry.golden_odot, self.entry.golden_arrow) {
            (Some(o), Some(a)) => Ok(Some((
                crate::io::parse_table(&self.poset, OpKind::Odot, o)?,
                crate::io::parse_table(&self.poset, OpKind::Arrow, a)?,
            ))),
            _ => Ok(None),
        }
    }
}

/// Result of regenerating one fixture.
#[derive(Clone, Debug)]
pub struct FixtureCheck {
    pub id: &'static str,
    /// `(verdict, expected, actual)`; `actual` is `None` if not computed.
    pub verdict_mismatches: Vec<(&'static str, bool, Option<bool>)>,
    pub odot_diffs: Vec<CellDiff>,
    pub arrow_diffs: Vec<CellDiff>,
    pub errata: &'static [Erratum],
    pub adjointness: AdjointnessVerdict,
    pub identities: PropertyReport,
    pub report: PropertyReport,
}

impl FixtureCheck {
    /// Whether the regenerated tables equal the printed ones cell for cell.
    pub fn matches_printed(&self) -> bool {
        self.odot_diffs.is_empty() && self.arrow_diffs.is_empty()
    }

    fn diffs(&self) -> impl Iterator<Item = (OpKind, &CellDiff)> {
        let odot = self.odot_diffs.iter().map(|d| (OpKind::Odot, d));
        odot.chain(self.arrow_diffs.iter().map(|d| (OpKind::Arrow, d)))
    }

    /// Diffs not accounted for by a listed erratum.
    pub fn unexplained_diffs(&self) -> Vec<(OpKind, &CellDiff)> {
        self.diffs()
            .filter(|(k, d)| !self.errata.iter().any(|e| explains(e, *k, d)))
            .collect()
    }

    /// Listed errata that did not show up exactly as listed.
    pub fn unconfirmed_errata(&self) -> Vec<&'static Erratum> {
        self.errata
            .iter()
            .filter(|e| !self.diffs().any(|(k, d)| explains(e, k, d)))
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.verdict_mismatches.is_empty()
            && self.unexplained_diffs().is_empty()
            && self.unconfirmed_errata().is_empty()
            && self.adjointness.holds
            && self.identities.all_pass()
    }
}

fn explains(e: &Erratum, kind: OpKind, d: &CellDiff) -> bool {
    e.table == kind
        && e.row == d.row
        && e.column == d.column
        && cells_equal(e.printed, &d.expected)
        && cells_equal(e.computed, &d.actual)
}

/// Rebuilds a fixture's tables, diffs them against the printed ones, and
/// re-checks its verdicts, adjointness and identity suite.
pub fn verify_fixture(entry: &'static FixtureEntry) -> Result<FixtureCheck> {
    verify_fixture_against(entry, entry.golden_odot, entry.golden_arrow)
}

/// As [`verify_fixture`], with the golden tables supplied by the caller.
pub fn verify_fixture_against(
    entry: &'static FixtureEntry,
    golden_odot: Option<&str>,
    golden_arrow: Option<&str>,
) -> Result<FixtureCheck> {
    let fx = entry.load()?;
    let p = &fx.poset;
    let report = full_report(p, fx.unary.as_ref());
    let verdict_mismatches = entry
        .expected
        .iter()
        .filter_map(|&(name, want)| {
            let got = report.passed(name);
            (got != Some(want)).then_some((name, want, got))
        })
        .collect();
    let (t_odot, t_arrow) = fx.tables()?;
    let diff = |golden: Option<&str>, table: &SetValuedTable| {
        golden
            .map(|g| diff_tables(g, &render_table(p, table, TableFormat::Tsv)))
            .unwrap_or_default()
    };
    let adjointness = verify_left_adjointness(p, &t_odot, &t_arrow)?;
    let identities = verify_identity_suite(p, fx.unary.as_ref(), entry.variant, &t_odot, &t_arrow)?;
    Ok(FixtureCheck {
        id: entry.id,
        verdict_mismatches,
        odot_diffs: diff(golden_odot, &t_odot),
        arrow_diffs: diff(golden_arrow, &t_arrow),
        errata: entry.errata,
        adjointness,
        identities,
        report,
    })
}

/// Resolves a fixture id to its document, or fails with `UnknownLabel`.
pub fn fixture_document(id: &str) -> Result<PosetDocument> {
    let entry = fixture(id).ok_or_else(|| Error::UnknownLabel(id.to_owned()))?;
    parse_poset_file(entry.source)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        for entry in FIXTURES {
            let fx = entry.load().unwrap();
            assert_eq!(fx.document.name, entry.id);
            assert!(fx.poset.is_bounded(), "{}", entry.id);
            assert_eq!(fx.unary.is_some(), entry.variant.needs_unary(), "{}", entry.id);
        }
    }

    #[test]
    fn lookup_accepts_paths() {
        assert_eq!(fixture("fixtures/fig3").unwrap().id, "fig3");
        assert_eq!(fixture("fig6.poset").unwrap().id, "fig6");
        assert!(fixture("fig7").is_none());
    }

    #[test]
    fn sizes_match_the_figures() {
        let sizes: Vec<usize> = FIXTURES
            .iter()
            .map(|e| e.load().unwrap().poset.len())
            .collect();
        assert_eq!(sizes, vec![12, 14, 14, 14, 7, 6]);
    }
}
