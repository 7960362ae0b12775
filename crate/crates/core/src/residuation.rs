//! Set-valued conjunction and implication, and exhaustive verification of
//! left adjointness `x ⊙ y <= z  <=>  x <= y → z`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::properties::{
    is_boolean, is_relatively_pseudocomplemented, relative_pseudocomplement, th1_premises,
    th3_premises, PropertyReport, UnaryOp, Verdict, Witness,
};
use crate::set::ElementSet;

/// Which construction of `⊙` and `→` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `x ⊙ y = Max L(U(x,y'),y)`, `x → y = Min U(L(x,y),x')`.
    Th1,
    /// `x ⊙ y = Max L(x,y)`, `x → y = Min U(x',y)`.
    Boolean,
    /// The Th1 formulas, short-circuited to `0` when `x <= y'` and to `1`
    /// when `x <= y`.
    Piecewise,
    /// `x ⊙ y = Max L(x,y)`, `x → y = x * y`.
    Rp,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Th1, Variant::Boolean, Variant::Piecewise, Variant::Rp];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Th1 => "th1",
            Variant::Boolean => "boolean",
            Variant::Piecewise => "piecewise",
            Variant::Rp => "rp",
        }
    }

    pub fn needs_unary(self) -> bool {
        !matches!(self, Variant::Rp)
    }

    /// The premise bundle the construction is proved under.
    pub fn premises(self, p: &Poset, u: Option<&UnaryOp>) -> Result<PropertyReport> {
        match self {
            Variant::Rp => Ok(is_relatively_pseudocomplemented(p)),
            Variant::Th1 => th1_premises(p, u.ok_or(Error::MissingUnaryOp)?),
            Variant::Boolean => is_boolean(p, u.ok_or(Error::MissingUnaryOp)?),
            Variant::Piecewise => th3_premises(p, u.ok_or(Error::MissingUnaryOp)?),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| format!("unknown variant `{s}` (expected th1, boolean, piecewise or rp)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Odot,
    Arrow,
}

impl OpKind {
    pub fn symbol(self) -> &'static str {
        match self {
            OpKind::Odot => "⊙",
            OpKind::Arrow => "→",
        }
    }
}

/// A full `n × n` operation table with set-valued entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetValuedTable {
    kind: OpKind,
    n: usize,
    entries: Vec<ElementSet>,
}

impl SetValuedTable {
    pub fn from_fn(kind: OpKind, n: usize, mut f: impl FnMut(usize, usize) -> ElementSet) -> Self {
        let entries = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        SetValuedTable { kind, n, entries }
    }

    fn try_from_fn(
        kind: OpKind,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<ElementSet>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y)?);
            }
        }
        Ok(SetValuedTable { kind, n, entries })
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry for row `x`, column `y`.
    pub fn get(&self, x: usize, y: usize) -> ElementSet {
        self.entries[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: ElementSet) {
        self.entries[x * self.n + y] = value;
    }

    /// `(row, column, entry)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, ElementSet)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, &e)| (i / self.n, i % self.n, e))
    }

    pub fn all_singletons(&self) -> bool {
        self.entries.iter().all(|e| e.len() == 1)
    }
}

fn unary(u: Option<&UnaryOp>) -> Result<&UnaryOp> {
    u.ok_or(Error::MissingUnaryOp)
}

fn check_index(p: &Poset, x: usize) -> Result<()> {
    if x < p.len() {
        Ok(())
    } else {
        Err(Error::ElementOutOfRange(x))
    }
}

fn pair(x: usize, y: usize) -> ElementSet {
    ElementSet::from([x, y])
}

/// `Max L(U(x,y'),y)`
fn th1_odot(p: &Poset, u: &UnaryOp, x: usize, y: usize) -> ElementSet {
    p.max(p.lower_cone(p.upper_cone(pair(x, u.apply(y))).with(y)))
}

/// `Min U(L(x,y),x')`
fn th1_arrow(p: &Poset, u: &UnaryOp, x: usize, y: usize) -> ElementSet {
    p.min(p.upper_cone(p.lower_cone(pair(x, y)).with(u.apply(x))))
}

/// `x ⊙ y` under `variant`.
pub fn odot(
    p: &Poset,
    u: Option<&UnaryOp>,
    variant: Variant,
    x: usize,
    y: usize,
) -> Result<ElementSet> {
    check_index(p, x)?;
    check_index(p, y)?;
    match variant {
        Variant::Th1 => {
            let u = unary(u)?;
            p.bounds()?;
            Ok(th1_odot(p, u, x, y))
        }
        Variant::Boolean => {
            unary(u)?;
            p.bounds()?;
            Ok(p.max(p.lower_cone(pair(x, y))))
        }
        Variant::Piecewise => {
            let u = unary(u)?;
            let (zero, _) = p.bounds()?;
            if p.leq(x, u.apply(y)) {
                Ok(ElementSet::singleton(zero))
            } else {
                Ok(th1_odot(p, u, x, y))
            }
        }
        Variant::Rp => Ok(p.max(p.lower_cone(pair(x, y)))),
    }
}

/// `x → y` under `variant`.
pub fn arrow(
    p: &Poset,
    u: Option<&UnaryOp>,
    variant: Variant,
    x: usize,
    y: usize,
) -> Result<ElementSet> {
    check_index(p, x)?;
    check_index(p, y)?;
    match variant {
        Variant::Th1 => {
            let u = unary(u)?;
            p.bounds()?;
            Ok(th1_arrow(p, u, x, y))
        }
        Variant::Boolean => {
            let u = unary(u)?;
            p.bounds()?;
            Ok(p.min(p.upper_cone(pair(u.apply(x), y))))
        }
        Variant::Piecewise => {
            let u = unary(u)?;
            let (_, one) = p.bounds()?;
            if p.leq(x, y) {
                Ok(ElementSet::singleton(one))
            } else {
                Ok(th1_arrow(p, u, x, y))
            }
        }
        Variant::Rp => relative_pseudocomplement(p, x, y)
            .map(ElementSet::singleton)
            .ok_or_else(|| Error::NoPseudocomplement(p.name(x).to_owned(), p.name(y).to_owned())),
    }
}

/// Materializes both tables. With `enforce_premises` the variant's premise
/// bundle must pass first.
pub fn build_tables(
    p: &Poset,
    u: Option<&UnaryOp>,
    variant: Variant,
    enforce_premises: bool,
) -> Result<(SetValuedTable, SetValuedTable)> {
    if variant.needs_unary() {
        let u = unary(u)?;
        if u.len() != p.len() {
            return Err(Error::UnaryArity {
                expected: p.len(),
                got: u.len(),
            });
        }
    }
    if enforce_premises {
        let report = variant.premises(p, u)?;
        if !report.all_pass() {
            return Err(Error::PremisesViolated {
                variant: variant.as_str(),
                failed: report.failed_names(),
                report: Box::new(report),
            });
        }
    }
    let n = p.len();
    let t_odot = SetValuedTable::try_from_fn(OpKind::Odot, n, |x, y| odot(p, u, variant, x, y))?;
    let t_arrow =
        SetValuedTable::try_from_fn(OpKind::Arrow, n, |x, y| arrow(p, u, variant, x, y))?;
    Ok((t_odot, t_arrow))
}

/// A triple on which the two sides of adjointness disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjointnessCounterexample {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `a ⊙ b <= c`
    pub odot_below: bool,
    /// `a <= b → c`
    pub below_arrow: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjointnessVerdict {
    pub holds: bool,
    pub counterexample: Option<AdjointnessCounterexample>,
}

/// Both sides of adjointness for one triple.
pub fn adjointness_sides(
    p: &Poset,
    t_odot: &SetValuedTable,
    t_arrow: &SetValuedTable,
    a: usize,
    b: usize,
    c: usize,
) -> (bool, bool) {
    (
        p.set_leq(t_odot.get(a, b), ElementSet::singleton(c)),
        p.set_leq(ElementSet::singleton(a), t_arrow.get(b, c)),
    )
}

/// Checks `a ⊙ b <= c  <=>  a <= b → c` over all `n³` triples, in
/// lexicographic order, reporting the first violation.
pub fn verify_left_adjointness(
    p: &Poset,
    t_odot: &SetValuedTable,
    t_arrow: &SetValuedTable,
) -> Result<AdjointnessVerdict> {
    let n = p.len();
    for t in [t_odot, t_arrow] {
        if t.size() != n {
            return Err(Error::TableShape {
                table: t.size(),
                poset: n,
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (odot_below, below_arrow) = adjointness_sides(p, t_odot, t_arrow, a, b, c);
                if odot_below != below_arrow {
                    return Ok(AdjointnessVerdict {
                        holds: false,
                        counterexample: Some(AdjointnessCounterexample {
                            a,
                            b,
                            c,
                            odot_below,
                            below_arrow,
                        }),
                    });
                }
            }
        }
    }
    Ok(AdjointnessVerdict {
        holds: true,
        counterexample: None,
    })
}

/// Names of the verdicts produced by [`verify_identity_suite`].
pub mod laws {
    pub const UNIT_RIGHT: &str = "x⊙1=x";
    pub const UNIT_LEFT: &str = "1⊙x=x";
    pub const IDEMPOTENT: &str = "x⊙x=x";
    pub const COMMUTATIVE: &str = "x⊙y=y⊙x";
    pub const ODOT_ZERO: &str = "x⊙0=0";
    pub const ZERO_ARROW: &str = "0→x=0'";
    pub const ARROW_ZERO: &str = "x→0=x'";
    pub const ARROW_PRIME: &str = "x→x'=x'";
    pub const ONE_ARROW: &str = "1→x=x";
    pub const ODOT_ZERO_IFF: &str = "x⊙y=0 iff x<=y'";
    pub const ARROW_ONE_IFF: &str = "x→y=1 iff x<=y";
    pub const ODOT_ZERO_IF: &str = "x<=y' implies x⊙y=0";
    pub const ARROW_ONE_IF: &str = "x<=y implies x→y=1";
}

fn law1(p: &Poset, f: impl Fn(usize) -> (ElementSet, ElementSet)) -> Verdict {
    let w = (0..p.len()).find_map(|x| {
        let (got, want) = f(x);
        (got != want).then(|| witness(vec![x], got, want))
    });
    w.map_or(Verdict::Pass, Verdict::Fail)
}

fn law2(p: &Poset, f: impl Fn(usize, usize) -> Option<(ElementSet, ElementSet)>) -> Verdict {
    let n = p.len();
    let w = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find_map(|(x, y)| f(x, y).map(|(got, want)| witness(vec![x, y], got, want)));
    w.map_or(Verdict::Pass, Verdict::Fail)
}

fn witness(elements: Vec<usize>, got: ElementSet, want: ElementSet) -> Witness {
    Witness {
        elements,
        lhs: Some(got),
        rhs: Some(want),
        discrepancy: crate::properties::Discrepancy::Unequal,
        note: String::new(),
    }
}

/// Characterization `table(x,y) = {target}  <=>  cond(x,y)`.
fn iff_law(
    p: &Poset,
    table: &SetValuedTable,
    target: usize,
    cond: impl Fn(usize, usize) -> bool,
) -> Verdict {
    let target = ElementSet::singleton(target);
    law2(p, |x, y| {
        let entry = table.get(x, y);
        ((entry == target) != cond(x, y)).then_some((entry, target))
    })
}

/// `cond(x,y)` implies `table(x,y) = {target}`.
fn if_law(
    p: &Poset,
    table: &SetValuedTable,
    target: usize,
    cond: impl Fn(usize, usize) -> bool,
) -> Verdict {
    let target = ElementSet::singleton(target);
    law2(p, |x, y| {
        let entry = table.get(x, y);
        (cond(x, y) && entry != target).then_some((entry, target))
    })
}

/// Checks the identities each construction is claimed to satisfy.
pub fn verify_identity_suite(
    p: &Poset,
    u: Option<&UnaryOp>,
    variant: Variant,
    t_odot: &SetValuedTable,
    t_arrow: &SetValuedTable,
) -> Result<PropertyReport> {
    use laws::*;
    let one = p.greatest().ok_or(Error::NotBounded)?;
    let single = ElementSet::singleton;
    let mut report = PropertyReport::new();

    report.push(UNIT_RIGHT, law1(p, |x| (t_odot.get(x, one), single(x))));
    report.push(UNIT_LEFT, law1(p, |x| (t_odot.get(one, x), single(x))));

    let commutative = || {
        law2(p, |x, y| {
            let (xy, yx) = (t_odot.get(x, y), t_odot.get(y, x));
            (xy != yx).then_some((xy, yx))
        })
    };
    let idempotent = || law1(p, |x| (t_odot.get(x, x), single(x)));
    let one_arrow = || law1(p, |x| (t_arrow.get(one, x), single(x)));

    if variant == Variant::Rp {
        report.push(COMMUTATIVE, commutative());
        report.push(IDEMPOTENT, idempotent());
        report.push(ONE_ARROW, one_arrow());
        report.push(ARROW_ONE_IFF, iff_law(p, t_arrow, one, |x, y| p.leq(x, y)));
        return Ok(report);
    }

    let u = unary(u)?;
    let (zero, _) = p.bounds()?;
    let prime = |x: usize| single(u.apply(x));

    if variant == Variant::Piecewise {
        report.push(ARROW_ZERO, law1(p, |x| (t_arrow.get(x, zero), prime(x))));
        report.push(ONE_ARROW, one_arrow());
        report.push(
            ODOT_ZERO_IF,
            if_law(p, t_odot, zero, |x, y| p.leq(x, u.apply(y))),
        );
        report.push(ARROW_ONE_IF, if_law(p, t_arrow, one, |x, y| p.leq(x, y)));
        return Ok(report);
    }

    report.push(IDEMPOTENT, idempotent());
    report.push(ODOT_ZERO, law1(p, |x| (t_odot.get(x, zero), single(zero))));
    report.push(ZERO_ARROW, law1(p, |x| (t_arrow.get(zero, x), prime(zero))));
    report.push(ARROW_ZERO, law1(p, |x| (t_arrow.get(x, zero), prime(x))));
    report.push(ARROW_PRIME, law1(p, |x| (t_arrow.get(x, u.apply(x)), prime(x))));
    report.push(ONE_ARROW, one_arrow());
    if variant == Variant::Boolean {
        report.push(COMMUTATIVE, commutative());
        report.push(
            ODOT_ZERO_IFF,
            iff_law(p, t_odot, zero, |x, y| p.leq(x, u.apply(y))),
        );
        report.push(ARROW_ONE_IFF, iff_law(p, t_arrow, one, |x, y| p.leq(x, y)));
    }
    Ok(report)
}
