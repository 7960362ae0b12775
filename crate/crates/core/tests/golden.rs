mod common;

use poset_residuation::fixtures::{fixture, verify_fixture, verify_fixture_against, FIXTURES};
use poset_residuation::io::{parse_cell, table_cells};
use poset_residuation::residuation::laws;
use poset_residuation::{
    arrow, build_tables, odot, relative_pseudocomplement, render_table, verify_identity_suite,
    verify_left_adjointness, ElementSet, OpKind, Poset, SetValuedTable, TableFormat, UnaryOp,
    Variant,
};

fn load(id: &str) -> (Poset, Option<UnaryOp>) {
    let fx = fixture(id).unwrap().load().unwrap();
    (fx.poset, fx.unary)
}

fn cell(p: &Poset, u: Option<&UnaryOp>, v: Variant, kind: OpKind, x: &str, y: &str) -> Vec<String> {
    let (x, y) = (p.index_of(x).unwrap(), p.index_of(y).unwrap());
    let s = match kind {
        OpKind::Odot => odot(p, u, v, x, y),
        OpKind::Arrow => arrow(p, u, v, x, y),
    };
    p.labels(s.unwrap())
}

#[test]
fn every_fixture_verifies() {
    for entry in FIXTURES {
        let check = verify_fixture(entry).unwrap();
        assert!(check.ok(), "{}: {:?}", entry.id, check.unexplained_diffs());
        assert!(check.adjointness.holds, "{}", entry.id);
    }
}

#[test]
fn tables_without_errata_match_the_print_exactly() {
    for id in ["fig1", "fig5", "fig6"] {
        let check = verify_fixture(fixture(id).unwrap()).unwrap();
        assert!(check.matches_printed(), "{id}");
    }
}

#[test]
fn listed_errata_are_exactly_the_differing_cells() {
    for id in ["fig3", "fig4"] {
        let check = verify_fixture(fixture(id).unwrap()).unwrap();
        assert!(!check.matches_printed());
        assert!(check.unexplained_diffs().is_empty(), "{id}");
        assert!(check.unconfirmed_errata().is_empty(), "{id}");
        assert_eq!(
            check.odot_diffs.len() + check.arrow_diffs.len(),
            check.errata.len()
        );
    }
}

/// Each printed erratum, planted alone into the computed tables, breaks
/// adjointness.
#[test]
fn each_erratum_breaks_adjointness_on_its_own() {
    for id in ["fig3", "fig4"] {
        let entry = fixture(id).unwrap();
        let fx = entry.load().unwrap();
        let p = &fx.poset;
        for e in entry.errata {
            let (mut t_odot, mut t_arrow) = fx.tables().unwrap();
            let (x, y) = (p.index_of(e.row).unwrap(), p.index_of(e.column).unwrap());
            let printed = parse_cell(p, e.printed).unwrap();
            assert_eq!(parse_cell(p, e.computed).unwrap(), match e.table {
                OpKind::Odot => t_odot.get(x, y),
                OpKind::Arrow => t_arrow.get(x, y),
            });
            match e.table {
                OpKind::Odot => t_odot.set(x, y, printed),
                OpKind::Arrow => t_arrow.set(x, y, printed),
            }
            let v = verify_left_adjointness(p, &t_odot, &t_arrow).unwrap();
            assert!(!v.holds, "{id} {e:?}");
        }
    }
}

#[test]
fn printed_tables_with_errata_are_not_residuated() {
    let fx = fixture("fig3").unwrap().load().unwrap();
    let p = &fx.poset;
    let (o, a) = fx.golden_tables().unwrap().unwrap();
    let v = verify_left_adjointness(p, &o, &a).unwrap();
    let cx = v.counterexample.unwrap();
    let (lhs, rhs) = (
        common::set_leq(p, o.get(cx.a, cx.b), ElementSet::singleton(cx.c)),
        common::set_leq(p, ElementSet::singleton(cx.a), a.get(cx.b, cx.c)),
    );
    assert_ne!(lhs, rhs);

    // f' ⊙ f = 0 <= a, so f' must lie below f → a
    let idx = |l: &str| p.index_of(l).unwrap();
    assert_eq!(o.get(idx("f'"), idx("f")), ElementSet::singleton(idx("0")));
    assert!(!p.leq(idx("f'"), a.get(idx("f"), idx("a")).first().unwrap()));

    let fx = fixture("fig4").unwrap().load().unwrap();
    let p = &fx.poset;
    let (o, a) = fx.golden_tables().unwrap().unwrap();
    assert!(!verify_left_adjointness(p, &o, &a).unwrap().holds);
    let suite = verify_identity_suite(p, fx.unary.as_ref(), Variant::Piecewise, &o, &a).unwrap();
    assert_eq!(suite.passed(laws::ODOT_ZERO_IF), Some(false));
}

#[test]
fn named_cells() {
    let (p3, u3) = load("fig3");
    let u3 = u3.as_ref();
    assert_eq!(cell(&p3, u3, Variant::Th1, OpKind::Odot, "d'", "b'"), ["a", "c"]);
    let mut da = cell(&p3, u3, Variant::Th1, OpKind::Arrow, "d'", "a");
    da.sort();
    assert_eq!(da, ["b'", "c'"]);

    let (p1, u1) = load("fig1");
    let mut cb = cell(&p1, u1.as_ref(), Variant::Boolean, OpKind::Arrow, "c'", "b");
    cb.sort();
    assert_eq!(cb, ["a'", "d'"]);

    let (p5, u5) = load("fig5");
    assert_eq!(cell(&p5, u5.as_ref(), Variant::Piecewise, OpKind::Arrow, "b", "0"), ["c"]);

    let (p6, _) = load("fig6");
    assert_eq!(cell(&p6, None, Variant::Rp, OpKind::Odot, "c", "d"), ["a", "b"]);
    assert_eq!(cell(&p6, None, Variant::Rp, OpKind::Arrow, "c", "d"), ["d"]);
    let i = |l: &str| p6.index_of(l).unwrap();
    assert_eq!(relative_pseudocomplement(&p6, i("a"), i("b")), Some(i("b")));
    assert_eq!(relative_pseudocomplement(&p6, i("c"), i("d")), Some(i("d")));
}

#[test]
fn fig4_piecewise_zero_branch_on_a_e_prime() {
    let (p, u) = load("fig4");
    let u = u.unwrap();
    let (a, e) = (p.index_of("a").unwrap(), p.index_of("e'").unwrap());
    assert!(p.leq(a, u.apply(e)));
    assert_eq!(cell(&p, Some(&u), Variant::Piecewise, OpKind::Odot, "a", "e'"), ["0"]);
    // the general formula alone would give the printed value
    assert_eq!(cell(&p, Some(&u), Variant::Th1, OpKind::Odot, "a", "e'"), ["f"]);
}

#[test]
fn fig1_arrow_cell_by_scan() {
    let (p, u) = load("fig1");
    let u = u.unwrap();
    let (x, y) = (p.index_of("d'").unwrap(), p.index_of("a").unwrap());
    let want = common::minimal(&p, common::upper(&p, ElementSet::from([u.apply(x), y])));
    let (_, t) = build_tables(&p, Some(&u), Variant::Boolean, true).unwrap();
    assert_eq!(t.get(x, y), want);
    let mut labels = p.labels(want);
    labels.sort();
    assert_eq!(labels, ["b'", "c'"]);
    // the Th1 formula agrees on this cell
    let th1 = common::minimal(
        &p,
        common::upper(&p, common::lower(&p, ElementSet::from([x, y])).with(u.apply(x))),
    );
    assert_eq!(th1, want);
}

#[test]
fn fig1_th1_tables_equal_boolean_tables() {
    let (p, u) = load("fig1");
    let th1 = build_tables(&p, u.as_ref(), Variant::Th1, true).unwrap();
    let boolean = build_tables(&p, u.as_ref(), Variant::Boolean, true).unwrap();
    assert_eq!(th1, boolean);
}

#[test]
fn fig5_tables_are_singletons() {
    let (p, u) = load("fig5");
    assert!(p.is_lattice());
    let (o, a) = build_tables(&p, u.as_ref(), Variant::Piecewise, true).unwrap();
    assert!(o.all_singletons() && a.all_singletons());
}

#[test]
fn identity_suites_on_fixtures() {
    let cases = [
        ("fig1", Variant::Th1),
        ("fig1", Variant::Boolean),
        ("fig2", Variant::Th1),
        ("fig3", Variant::Th1),
        ("fig4", Variant::Piecewise),
        ("fig5", Variant::Piecewise),
        ("fig6", Variant::Rp),
    ];
    for (id, v) in cases {
        let (p, u) = load(id);
        let (o, a) = build_tables(&p, u.as_ref(), v, true).unwrap();
        let suite = verify_identity_suite(&p, u.as_ref(), v, &o, &a).unwrap();
        assert!(suite.all_pass(), "{id} {v}: {}", suite.failed_names());
        assert!(verify_left_adjointness(&p, &o, &a).unwrap().holds, "{id} {v}");
    }
}

#[test]
fn fig1_boolean_suite_contains_the_iff_laws() {
    let (p, u) = load("fig1");
    let (o, a) = build_tables(&p, u.as_ref(), Variant::Boolean, true).unwrap();
    let suite = verify_identity_suite(&p, u.as_ref(), Variant::Boolean, &o, &a).unwrap();
    for law in [laws::COMMUTATIVE, laws::ODOT_ZERO_IFF, laws::ARROW_ONE_IFF] {
        assert_eq!(suite.passed(law), Some(true), "{law}");
    }
}

#[test]
fn fig6_mutated_arrow_is_caught_with_a_genuine_witness() {
    let (p, _) = load("fig6");
    let (o, mut a) = build_tables(&p, None, Variant::Rp, true).unwrap();
    let (c, d, one) = (
        p.index_of("c").unwrap(),
        p.index_of("d").unwrap(),
        p.index_of("1").unwrap(),
    );
    a.set(c, d, ElementSet::singleton(one));
    let v = verify_left_adjointness(&p, &o, &a).unwrap();
    let cx = v.counterexample.unwrap();
    assert!(!v.holds);
    assert_eq!(cx.b, c);
    let lhs = common::set_leq(&p, o.get(cx.a, cx.b), ElementSet::singleton(cx.c));
    let rhs = common::set_leq(&p, ElementSet::singleton(cx.a), a.get(cx.b, cx.c));
    assert_eq!((lhs, rhs), (cx.odot_below, cx.below_arrow));
    assert_ne!(lhs, rhs);
}

/// A different value for one cell: the next element, or a singleton if
/// the cell is a set.
fn corrupt(p: &Poset, cell: &str) -> String {
    let s = parse_cell(p, cell).unwrap();
    match s.as_singleton() {
        Some(i) => p.name((i + 1) % p.len()).to_owned(),
        None => p.name(s.first().unwrap()).to_owned(),
    }
}

fn mutate(text: &str, r: usize, c: usize, value: &str) -> String {
    let mut rows = table_cells(text);
    rows[r][c] = value.to_owned();
    rows.iter().map(|row| row.join("\t") + "\n").collect()
}

#[test]
fn every_single_cell_corruption_is_detected() {
    for entry in FIXTURES {
        let (Some(go), Some(ga)) = (entry.golden_odot, entry.golden_arrow) else {
            continue;
        };
        let p = entry.load().unwrap().poset;
        for (which, text) in [(0, go), (1, ga)] {
            let rows = table_cells(text);
            for r in 1..rows.len() {
                for c in 1..rows[r].len() {
                    let bad = mutate(text, r, c, &corrupt(&p, &rows[r][c]));
                    let check = if which == 0 {
                        verify_fixture_against(entry, Some(&bad), Some(ga))
                    } else {
                        verify_fixture_against(entry, Some(go), Some(&bad))
                    }
                    .unwrap();
                    assert!(!check.ok(), "{} table {which} cell ({r},{c})", entry.id);
                }
            }
        }
    }
}

#[test]
fn rendered_tables_round_trip() {
    for entry in FIXTURES {
        let fx = entry.load().unwrap();
        let (o, a) = fx.tables().unwrap();
        for t in [&o, &a] {
            for f in [TableFormat::Tsv, TableFormat::Markdown] {
                let text = render_table(&fx.poset, t, f);
                let back: SetValuedTable =
                    poset_residuation::io::parse_table(&fx.poset, t.kind(), &text).unwrap();
                assert_eq!(&back, t, "{}", entry.id);
            }
        }
        let doc = fx.document.render();
        assert_eq!(
            poset_residuation::parse_poset_file(&doc).unwrap(),
            fx.document,
            "{}",
            entry.id
        );
    }
}
