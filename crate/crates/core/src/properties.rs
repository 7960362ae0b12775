//! Structural predicates and the premise bundles of the residuation
//! constructions.
//!
//! Every identity is checked by brute force over all pairs or triples of the
//! carrier. A failing verdict carries the first violating tuple (in
//! lexicographic index order) together with both evaluated sides, so the
//! discrepancy can be asserted or re-evaluated directly.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Names of the verdicts produced by the checks in this module.
pub mod names {
    pub const BOUNDED: &str = "bounded";
    pub const INVOLUTION: &str = "involution";
    pub const ANTITONE: &str = "antitone";
    pub const ZERO_ONE: &str = "zero_one";
    pub const COMPLEMENTED: &str = "complemented";
    pub const DISTRIBUTIVE: &str = "distributive";
    pub const DISTRIBUTIVE_UPPER: &str = "distributive.upper_identity";
    pub const DISTRIBUTIVE_LOWER: &str = "distributive.lower_identity";
    pub const DISTRIBUTIVE_AGREE: &str = "distributive.identities_agree";
    pub const MODULAR: &str = "modular";
    pub const STRONGLY_MODULAR_FIRST: &str = "strongly_modular.first_identity";
    pub const STRONGLY_MODULAR_SECOND: &str = "strongly_modular.second_identity";
    pub const TH1_ONE_PRIME: &str = "th1.one_prime_is_zero";
    pub const TH1_LOWER: &str = "th1.lower_identity";
    pub const TH1_UPPER: &str = "th1.upper_identity";
    pub const TH3_ZERO_PRIME: &str = "th3.zero_prime_is_one";
    pub const TH3_ONE_PRIME: &str = "th3.one_prime_is_zero";
    pub const TH3_PRIME_NOT_ONE: &str = "th3.prime_not_one";
    pub const TH3_LOWER: &str = "th3.lower_identity";
    pub const TH3_UPPER: &str = "th3.upper_identity";
    pub const TH3_LOWER_INCLUSION: &str = "th3.lower_inclusion";
    pub const TH3_UPPER_INCLUSION: &str = "th3.upper_inclusion";
    pub const RELATIVELY_PSEUDOCOMPLEMENTED: &str = "relatively_pseudocomplemented";
}

/// A total map `x -> x'` on the carrier. No law is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnaryOp {
    image: Vec<usize>,
}

impl UnaryOp {
    pub fn new(p: &Poset, image: Vec<usize>) -> Result<UnaryOp> {
        if image.len() != p.len() {
            return Err(Error::UnaryArity {
                expected: p.len(),
                got: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= p.len()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(UnaryOp { image })
    }

    /// Builds the map from `(x, x')` label pairs; every element needs exactly
    /// one entry.
    pub fn from_pairs<S: AsRef<str>>(p: &Poset, pairs: &[(S, S)]) -> Result<UnaryOp> {
        let mut image = vec![None; p.len()];
        for (x, y) in pairs {
            let (x, y) = (p.index_of(x.as_ref())?, p.index_of(y.as_ref())?);
            image[x] = Some(y);
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, y)| y.ok_or_else(|| Error::PartialUnaryMap(p.name(i).to_owned())))
            .collect::<Result<Vec<_>>>()?;
        Ok(UnaryOp { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> UnaryOp {
        UnaryOp { image }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }
}

/// How the two sides of a failed check relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    /// `lhs != rhs` for an identity.
    Unequal,
    /// `lhs` is not a subset of `rhs` for an inclusion condition.
    NotIncluded,
    /// An element-level condition failed; see [`Witness::note`].
    Condition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The quantified elements, in the order the check names them
    /// (`x`, `y`, `z`, or `a`, `b`).
    pub elements: Vec<usize>,
    pub lhs: Option<ElementSet>,
    pub rhs: Option<ElementSet>,
    pub discrepancy: Discrepancy,
    pub note: String,
}

impl Witness {
    fn sets(elements: Vec<usize>, lhs: ElementSet, rhs: ElementSet, d: Discrepancy) -> Self {
        Witness {
            elements,
            lhs: Some(lhs),
            rhs: Some(rhs),
            discrepancy: d,
            note: String::new(),
        }
    }

    fn condition(elements: Vec<usize>, note: impl Into<String>) -> Self {
        Witness {
            elements,
            lhs: None,
            rhs: None,
            discrepancy: Discrepancy::Condition,
            note: note.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    fn from_witness(w: Option<Witness>) -> Verdict {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

/// Named verdicts in the order they were computed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    verdicts: Vec<(String, Verdict)>,
}

impl PropertyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.verdicts.push((name.into(), verdict));
    }

    pub fn extend(&mut self, other: PropertyReport) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    /// `Some(true)` if the named verdict passed, `None` if it was not computed.
    pub fn passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(Verdict::passed)
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.passed())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Verdict)> {
        self.verdicts.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Witness)> {
        self.iter()
            .filter_map(|(n, v)| v.witness().map(|w| (n, w)))
    }

    pub fn first_failure(&self) -> Option<(&str, &Witness)> {
        self.failures().next()
    }

    pub fn len(&self) -> usize {
        self.verdicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verdicts.is_empty()
    }

    /// Comma-separated names of the failed verdicts.
    pub fn failed_names(&self) -> String {
        self.failures()
            .map(|(n, _)| n)
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// One line per verdict.
    pub fn render(&self, p: &Poset) -> String {
        let mut out = String::new();
        for (name, verdict) in self.iter() {
            match verdict {
                Verdict::Pass => writeln!(out, "{name}: pass").unwrap(),
                Verdict::Fail(w) => {
                    write!(out, "{name}: FAIL at ({})", p.labels_of(&w.elements)).unwrap();
                    if let (Some(l), Some(r)) = (w.lhs, w.rhs) {
                        let rel = match w.discrepancy {
                            Discrepancy::NotIncluded => "is not a subset of",
                            _ => "!=",
                        };
                        write!(out, ": {} {rel} {}", render_set(p, l), render_set(p, r)).unwrap();
                    }
                    if !w.note.is_empty() {
                        write!(out, ": {}", w.note).unwrap();
                    }
                    out.push('\n');
                }
            }
        }
        out
    }

    /// JSON form, keyed by verdict name. Deterministic for a given input.
    pub fn to_json(&self, p: &Poset) -> Value {
        let mut map = serde_json::Map::new();
        for (name, verdict) in self.iter() {
            let value = match verdict {
                Verdict::Pass => json!({ "pass": true }),
                Verdict::Fail(w) => {
                    let mut witness = serde_json::Map::new();
                    witness.insert(
                        "elements".into(),
                        json!(w.elements.iter().map(|&i| p.name(i)).collect::<Vec<_>>()),
                    );
                    if let Some(l) = w.lhs {
                        witness.insert("lhs".into(), json!(p.labels(l)));
                    }
                    if let Some(r) = w.rhs {
                        witness.insert("rhs".into(), json!(p.labels(r)));
                    }
                    let kind = match w.discrepancy {
                        Discrepancy::Unequal => "unequal",
                        Discrepancy::NotIncluded => "not_included",
                        Discrepancy::Condition => "condition",
                    };
                    witness.insert("discrepancy".into(), json!(kind));
                    if !w.note.is_empty() {
                        witness.insert("note".into(), json!(w.note));
                    }
                    json!({ "pass": false, "witness": witness })
                }
            };
            map.insert(name.to_owned(), value);
        }
        Value::Object(map)
    }
}

/// `{a,b}` in declaration order, or a bare label for singletons.
pub fn render_set(p: &Poset, set: ElementSet) -> String {
    match set.as_singleton() {
        Some(i) => p.name(i).to_owned(),
        None => format!("{{{}}}", p.labels(set).join(",")),
    }
}

impl Poset {
    fn labels_of(&self, elements: &[usize]) -> String {
        elements
            .iter()
            .map(|&i| self.name(i))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn s<const N: usize>(members: [usize; N]) -> ElementSet {
    ElementSet::from(members)
}

/// First pair `(x, y)` on which the two sides differ.
fn identity2(
    n: usize,
    f: impl Fn(usize, usize) -> (ElementSet, ElementSet),
) -> Verdict {
    let w = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find_map(|(x, y)| {
            let (lhs, rhs) = f(x, y);
            (lhs != rhs).then(|| Witness::sets(vec![x, y], lhs, rhs, Discrepancy::Unequal))
        });
    Verdict::from_witness(w)
}

/// First triple `(x, y, z)` admitted by `guard` on which the two sides differ.
fn identity3(
    n: usize,
    guard: impl Fn(usize, usize, usize) -> bool,
    f: impl Fn(usize, usize, usize) -> (ElementSet, ElementSet),
) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !guard(x, y, z) {
                    continue;
                }
                let (lhs, rhs) = f(x, y, z);
                if lhs != rhs {
                    return Verdict::Fail(Witness::sets(
                        vec![x, y, z],
                        lhs,
                        rhs,
                        Discrepancy::Unequal,
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

pub fn is_involution(p: &Poset, u: &UnaryOp) -> Verdict {
    let w = (0..p.len()).find_map(|x| {
        let xpp = u.apply(u.apply(x));
        (xpp != x).then(|| {
            Witness::condition(
                vec![x],
                format!("{}'' = {} != {}", p.name(x), p.name(xpp), p.name(x)),
            )
        })
    });
    Verdict::from_witness(w)
}

pub fn is_antitone(p: &Poset, u: &UnaryOp) -> Verdict {
    let n = p.len();
    let w = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| p.leq(x, y) && !p.leq(u.apply(y), u.apply(x)))
        .map(|(x, y)| {
            Witness::condition(
                vec![x, y],
                format!(
                    "{} <= {} but {}' = {} is not below {}' = {}",
                    p.name(x),
                    p.name(y),
                    p.name(y),
                    p.name(u.apply(y)),
                    p.name(x),
                    p.name(u.apply(x))
                ),
            )
        });
    Verdict::from_witness(w)
}

/// `0' = 1` and `1' = 0`.
pub fn zero_one_laws(p: &Poset, u: &UnaryOp) -> Result<Verdict> {
    let (zero, one) = p.bounds()?;
    let w = if u.apply(zero) != one {
        Some(Witness::condition(
            vec![zero],
            format!("{}' = {}", p.name(zero), p.name(u.apply(zero))),
        ))
    } else if u.apply(one) != zero {
        Some(Witness::condition(
            vec![one],
            format!("{}' = {}", p.name(one), p.name(u.apply(one))),
        ))
    } else {
        None
    };
    Ok(Verdict::from_witness(w))
}

/// `L(x, x') = {0}` and `U(x, x') = {1}` for every `x`.
pub fn is_complemented(p: &Poset, u: &UnaryOp) -> Result<Verdict> {
    let (zero, one) = p.bounds()?;
    let w = (0..p.len()).find_map(|x| {
        let pair = s([x, u.apply(x)]);
        let lower = p.lower_cone(pair);
        let upper = p.upper_cone(pair);
        if lower != s([zero]) {
            Some(Witness::sets(vec![x], lower, s([zero]), Discrepancy::Unequal))
        } else if upper != s([one]) {
            Some(Witness::sets(vec![x], upper, s([one]), Discrepancy::Unequal))
        } else {
            None
        }
    });
    Ok(Verdict::from_witness(w))
}

/// Involution, antitonicity, the zero-one laws and complementation.
pub fn check_unary(p: &Poset, u: &UnaryOp) -> Result<PropertyReport> {
    let mut report = PropertyReport::new();
    report.push(names::INVOLUTION, is_involution(p, u));
    report.push(names::ANTITONE, is_antitone(p, u));
    report.push(names::ZERO_ONE, zero_one_laws(p, u)?);
    report.push(names::COMPLEMENTED, is_complemented(p, u)?);
    Ok(report)
}

/// `U(L(x,y),z) = UL(U(x,z),U(y,z))`.
fn distributive_upper(p: &Poset) -> Verdict {
    identity3(
        p.len(),
        |_, _, _| true,
        |x, y, z| {
            let lhs = p.upper_cone(p.lower_cone(s([x, y])).with(z));
            let rhs = p.upper_cone(p.lower_cone(p.upper_cone(s([x, z])) | p.upper_cone(s([y, z]))));
            (lhs, rhs)
        },
    )
}

/// `L(U(x,y),z) = LU(L(x,z),L(y,z))`.
fn distributive_lower(p: &Poset) -> Verdict {
    identity3(
        p.len(),
        |_, _, _| true,
        |x, y, z| {
            let lhs = p.lower_cone(p.upper_cone(s([x, y])).with(z));
            let rhs = p.lower_cone(p.upper_cone(p.lower_cone(s([x, z])) | p.lower_cone(s([y, z]))));
            (lhs, rhs)
        },
    )
}

/// Evaluates both distributivity identities. The combined verdict passes
/// iff both hold; a separate verdict records whether they agree.
pub fn is_distributive(p: &Poset) -> PropertyReport {
    let upper = distributive_upper(p);
    let lower = distributive_lower(p);
    let combined = match (&upper, &lower) {
        (Verdict::Fail(w), _) | (_, Verdict::Fail(w)) => Verdict::Fail(w.clone()),
        _ => Verdict::Pass,
    };
    let agree = if upper.passed() == lower.passed() {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::condition(
            vec![],
            format!(
                "upper identity {}, lower identity {}",
                if upper.passed() { "holds" } else { "fails" },
                if lower.passed() { "holds" } else { "fails" }
            ),
        ))
    };
    let mut report = PropertyReport::new();
    report.push(names::DISTRIBUTIVE, combined);
    report.push(names::DISTRIBUTIVE_UPPER, upper);
    report.push(names::DISTRIBUTIVE_LOWER, lower);
    report.push(names::DISTRIBUTIVE_AGREE, agree);
    report
}

/// `x <= z` implies `L(U(x,y),z) = LU(x,L(y,z))`.
pub fn is_modular(p: &Poset) -> PropertyReport {
    let verdict = identity3(
        p.len(),
        |x, _, z| p.leq(x, z),
        |x, y, z| {
            let lhs = p.lower_cone(p.upper_cone(s([x, y])).with(z));
            let rhs = p.lower_cone(p.upper_cone(p.lower_cone(s([y, z])).with(x)));
            (lhs, rhs)
        },
    );
    let mut report = PropertyReport::new();
    report.push(names::MODULAR, verdict);
    report
}

/// `L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))` and
/// `L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))`.
pub fn is_strongly_modular(p: &Poset) -> PropertyReport {
    let first = identity3(
        p.len(),
        |_, _, _| true,
        |x, y, z| {
            let uxz = p.upper_cone(s([x, z]));
            let lhs = p.lower_cone(p.upper_cone(s([x, y])) | uxz);
            let rhs = p.lower_cone(p.upper_cone(p.lower_cone(uxz.with(y)).with(x)));
            (lhs, rhs)
        },
    );
    let second = identity3(
        p.len(),
        |_, _, _| true,
        |x, y, z| {
            let lxz = p.lower_cone(s([x, z]));
            let lhs = p.lower_cone(p.upper_cone(lxz.with(y)).with(z));
            let rhs = p.lower_cone(p.upper_cone(lxz | p.lower_cone(s([y, z]))));
            (lhs, rhs)
        },
    );
    let mut report = PropertyReport::new();
    report.push(names::STRONGLY_MODULAR_FIRST, first);
    report.push(names::STRONGLY_MODULAR_SECOND, second);
    report
}

/// Distributive and complemented.
pub fn is_boolean(p: &Poset, u: &UnaryOp) -> Result<PropertyReport> {
    let complemented = is_complemented(p, u)?;
    let mut report = is_distributive(p);
    report.push(names::COMPLEMENTED, complemented);
    Ok(report)
}

fn prime_equals(p: &Poset, u: &UnaryOp, x: usize, expected: usize) -> Verdict {
    if u.apply(x) == expected {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::condition(
            vec![x],
            format!(
                "{}' = {}, expected {}",
                p.name(x),
                p.name(u.apply(x)),
                p.name(expected)
            ),
        ))
    }
}

/// `1' = 0`, `L(U(L(x,y),y'),y) = L(x,y)` and `U(L(U(x,y'),y),y') = U(x,y')`.
pub fn th1_premises(p: &Poset, u: &UnaryOp) -> Result<PropertyReport> {
    let (zero, one) = p.bounds()?;
    let mut report = PropertyReport::new();
    report.push(names::TH1_ONE_PRIME, prime_equals(p, u, one, zero));
    report.push(
        names::TH1_LOWER,
        identity2(p.len(), |x, y| {
            let lxy = p.lower_cone(s([x, y]));
            let lhs = p.lower_cone(p.upper_cone(lxy.with(u.apply(y))).with(y));
            (lhs, lxy)
        }),
    );
    report.push(
        names::TH1_UPPER,
        identity2(p.len(), |x, y| {
            let uxy = p.upper_cone(s([x, u.apply(y)]));
            let lhs = p.upper_cone(p.lower_cone(uxy.with(y)).with(u.apply(y)));
            (lhs, uxy)
        }),
    );
    Ok(report)
}

/// The seven premises of the piecewise construction.
pub fn th3_premises(p: &Poset, u: &UnaryOp) -> Result<PropertyReport> {
    let (zero, one) = p.bounds()?;
    let n = p.len();
    let mut report = PropertyReport::new();
    report.push(names::TH3_ZERO_PRIME, prime_equals(p, u, zero, one));
    report.push(names::TH3_ONE_PRIME, prime_equals(p, u, one, zero));

    let not_one = (0..n)
        .filter(|&x| x != zero)
        .find(|&x| u.apply(x) == one)
        .map(|x| Witness::condition(vec![x], format!("{}' = {}", p.name(x), p.name(one))));
    report.push(names::TH3_PRIME_NOT_ONE, Verdict::from_witness(not_one));

    report.push(
        names::TH3_LOWER,
        identity2(n, |x, y| {
            let xp = u.apply(x);
            let lxy = p.lower_cone(s([x, y]));
            let lhs = p.lower_cone(p.upper_cone(lxy.with(xp)).with(x));
            let rhs = p.lower_cone(p.upper_cone(lxy | p.lower_cone(s([xp, x]))));
            (lhs, rhs)
        }),
    );
    report.push(
        names::TH3_UPPER,
        identity2(n, |x, y| {
            let xp = u.apply(x);
            let uyxp = p.upper_cone(s([y, xp]));
            let lhs = p.lower_cone(p.upper_cone(s([xp, x])) | uyxp);
            let rhs = p.lower_cone(p.upper_cone(p.lower_cone(uyxp.with(x)).with(xp)));
            (lhs, rhs)
        }),
    );

    let lower_incl = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != zero).map(move |y| (x, y)))
        .find_map(|(x, y)| {
            let lhs = p.lower_cone(s([x, u.apply(x)]));
            let rhs = p.down_set(y);
            (!lhs.is_subset(rhs))
                .then(|| Witness::sets(vec![x, y], lhs, rhs, Discrepancy::NotIncluded))
        });
    report.push(names::TH3_LOWER_INCLUSION, Verdict::from_witness(lower_incl));

    let upper_incl = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != one).map(move |y| (x, y)))
        .find_map(|(x, y)| {
            let lhs = p.upper_cone(s([x, u.apply(x)]));
            let rhs = p.up_set(y);
            (!lhs.is_subset(rhs))
                .then(|| Witness::sets(vec![x, y], lhs, rhs, Discrepancy::NotIncluded))
        });
    report.push(names::TH3_UPPER_INCLUSION, Verdict::from_witness(upper_incl));
    Ok(report)
}

/// `{ x | L(a,x) ⊆ L(b) }`.
pub fn pseudocomplement_candidates(p: &Poset, a: usize, b: usize) -> ElementSet {
    let lb = p.down_set(b);
    (0..p.len())
        .filter(|&x| p.lower_cone(s([a, x])).is_subset(lb))
        .collect()
}

/// `a * b`: the greatest `x` with `L(a,x) ⊆ L(b)`, if that set has one.
pub fn relative_pseudocomplement(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let candidates = pseudocomplement_candidates(p, a, b);
    candidates
        .iter()
        .find(|&g| candidates.is_subset(p.down_set(g)))
}

pub fn is_relatively_pseudocomplemented(p: &Poset) -> PropertyReport {
    let n = p.len();
    let w = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| relative_pseudocomplement(p, a, b).is_none())
        .map(|(a, b)| {
            let candidates = pseudocomplement_candidates(p, a, b);
            let mut w = Witness::condition(
                vec![a, b],
                format!(
                    "candidates {} have maximal elements {}",
                    render_set(p, candidates),
                    render_set(p, p.max(candidates))
                ),
            );
            w.lhs = Some(candidates);
            w.rhs = Some(p.max(candidates));
            w
        });
    let mut report = PropertyReport::new();
    report.push(names::RELATIVELY_PSEUDOCOMPLEMENTED, Verdict::from_witness(w));
    report
}

/// Every check that applies to `p` (and `u`, when given): boundedness, the
/// unary laws, distributivity, (strong) modularity, both premise bundles and
/// relative pseudocomplementation.
pub fn full_report(p: &Poset, u: Option<&UnaryOp>) -> PropertyReport {
    let mut report = PropertyReport::new();
    let bounded = if p.is_bounded() {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::condition(
            vec![],
            match (p.least(), p.greatest()) {
                (None, None) => "no least and no greatest element",
                (None, _) => "no least element",
                _ => "no greatest element",
            },
        ))
    };
    report.push(names::BOUNDED, bounded);
    if let Some(u) = u {
        match check_unary(p, u) {
            Ok(r) => report.extend(r),
            Err(_) => {
                report.push(names::INVOLUTION, is_involution(p, u));
                report.push(names::ANTITONE, is_antitone(p, u));
            }
        }
    }
    report.extend(is_distributive(p));
    report.extend(is_modular(p));
    report.extend(is_strongly_modular(p));
    if let Some(u) = u {
        if let (Ok(th1), Ok(th3)) = (th1_premises(p, u), th3_premises(p, u)) {
            report.extend(th1);
            report.extend(th3);
        }
    }
    report.extend(is_relatively_pseudocomplemented(p));
    report
}
