//! Exhaustive enumeration of small posets and unary operations, and sweeps
//! that run the residuation constructions over every model passing a premise
//! bundle.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::properties::{
    is_complemented, is_strongly_modular, th1_premises, PropertyReport, UnaryOp,
};
use crate::residuation::{
    build_tables, verify_identity_suite, verify_left_adjointness, AdjointnessCounterexample,
    Variant,
};
use crate::set::ElementSet;

pub const MAX_ENUMERATION_SIZE: usize = 7;

/// Stored failures per sweep are capped at this many.
pub const MAX_RECORDED_FAILURES: usize = 100;

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeBoundExceeded(n))
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

struct Frame {
    /// `up[i]` for elements `0..k`, before element `k` is placed.
    up: [u64; MAX_ENUMERATION_SIZE],
    /// Admissible `(down-set, up-set)` choices for element `k`.
    choices: Vec<(u64, u64)>,
    next: usize,
}

/// Streams partial orders on `n` labelled points.
///
/// Elements are added one at a time. The new element `k` is attached below
/// an up-closed set `U` and above a down-closed set `D` of the points placed
/// so far, with `D` and `U` disjoint and every member of `D` already below
/// every member of `U`. Each labelled order arises from exactly one sequence
/// of choices. With `natural` set, `U` is always empty, which yields exactly
/// the orders for which index order is a linear extension.
struct OrderStream {
    n: usize,
    natural: bool,
    stack: Vec<Frame>,
}

impl OrderStream {
    fn new(n: usize, natural: bool) -> Self {
        let up = [0u64; MAX_ENUMERATION_SIZE];
        let first = Frame {
            choices: Self::choices(&up, 0, natural),
            up,
            next: 0,
        };
        OrderStream {
            n,
            natural,
            stack: vec![first],
        }
    }

    fn choices(up: &[u64; MAX_ENUMERATION_SIZE], k: usize, natural: bool) -> Vec<(u64, u64)> {
        let placed = (1u64 << k) - 1;
        let down_of = |j: usize| -> u64 { (0..k).filter(|&i| up[i] >> j & 1 == 1).fold(0, |a, i| a | 1 << i) };
        let down: Vec<u64> = (0..k).map(down_of).collect();
        let down_closed = |set: u64| (0..k).all(|j| set >> j & 1 == 0 || down[j] & !set == 0);
        let up_closed = |set: u64| (0..k).all(|j| set >> j & 1 == 0 || up[j] & placed & !set == 0);

        let lowers: Vec<u64> = (0..=placed).filter(|&d| down_closed(d)).collect();
        let uppers: Vec<u64> = if natural {
            vec![0]
        } else {
            (0..=placed).filter(|&u| up_closed(u)).collect()
        };
        let mut out = Vec::new();
        for &d in &lowers {
            for &u in &uppers {
                if d & u != 0 {
                    continue;
                }
                let consistent = (0..k)
                    .filter(|&i| d >> i & 1 == 1)
                    .all(|i| up[i] & u == u);
                if consistent {
                    out.push((d, u));
                }
            }
        }
        out
    }

    fn next_relation(&mut self) -> Option<[u64; MAX_ENUMERATION_SIZE]> {
        loop {
            let k = self.stack.len().checked_sub(1)?;
            let frame = &mut self.stack[k];
            if frame.next == frame.choices.len() {
                self.stack.pop();
                continue;
            }
            let (d, u) = frame.choices[frame.next];
            frame.next += 1;
            let mut up = frame.up;
            up[k] = u | 1 << k;
            for (i, row) in up.iter_mut().enumerate().take(k) {
                if d >> i & 1 == 1 {
                    *row |= u | 1 << k;
                }
            }
            if k + 1 == self.n {
                return Some(up);
            }
            let choices = Self::choices(&up, k + 1, self.natural);
            self.stack.push(Frame {
                up,
                choices,
                next: 0,
            });
        }
    }
}

fn to_poset(n: usize, up: &[u64; MAX_ENUMERATION_SIZE], names: &[String]) -> Poset {
    let rows = up[..n].iter().map(|&r| ElementSet::from_bits(r)).collect();
    Poset::from_order_unchecked(names.to_vec(), rows)
}

/// Iterator returned by [`enumerate_posets`].
pub struct PosetStream {
    n: usize,
    orders: OrderStream,
    seen: Option<HashSet<u64>>,
    names: Vec<String>,
}

impl Iterator for PosetStream {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        loop {
            let up = self.orders.next_relation()?;
            let p = to_poset(self.n, &up, &self.names);
            match &mut self.seen {
                None => return Some(p),
                Some(seen) => {
                    let (code, canonical) = canonical_form(&p);
                    if seen.insert(code) {
                        return Some(canonical);
                    }
                }
            }
        }
    }
}

/// Every partial order on `n` points, or with `up_to_iso` one canonical
/// representative per isomorphism class. Elements are labelled `p0 .. p{n-1}`.
pub fn enumerate_posets(n: usize, up_to_iso: bool) -> Result<PosetStream> {
    check_size(n)?;
    Ok(PosetStream {
        n,
        orders: OrderStream::new(n, up_to_iso),
        seen: up_to_iso.then(HashSet::new),
        names: default_names(n),
    })
}

/// Row-major bit code of the relation after relabelling by `perm`
/// (position `i` holds original element `perm[i]`). The first matrix entry is
/// the most significant bit, so integer order is lexicographic matrix order.
pub fn relation_code(p: &Poset, perm: &[usize]) -> u64 {
    let n = p.len();
    let mut code = 0u64;
    for &pi in perm {
        for &pj in perm {
            code = code << 1 | u64::from(p.leq(pi, pj));
        }
    }
    debug_assert!(n * n <= 64);
    code
}

/// Canonical form: the lexicographically least relation matrix over all
/// relabellings that list elements by ascending `(|down-set|, |up-set|)`.
///
/// Those degree counts are isomorphism invariants, so the admissible
/// relabellings of isomorphic posets produce the same set of matrices and
/// the minimum is a complete invariant. Returns the code and the relabelled
/// poset (named `p0 ..`).
pub fn canonical_form(p: &Poset) -> (u64, Poset) {
    let n = p.len();
    assert!(n * n <= 64, "canonical form needs n <= 8");
    let key = |i: usize| (p.down_set(i).len(), p.up_set(i).len());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| key(i));
    // blocks of equal invariant
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(i) => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }

    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut perm = Vec::with_capacity(n);
    search_block_perms(&blocks, 0, &mut perm, &mut |perm| {
        let code = relation_code(p, perm);
        if best.as_ref().map_or(true, |(c, _)| code < *c) {
            best = Some((code, perm.to_vec()));
        }
    });
    let (code, perm) = best.expect("at least one relabelling");
    let names = default_names(n);
    let rows = perm
        .iter()
        .map(|&pi| {
            perm.iter()
                .enumerate()
                .filter(|&(_, &pj)| p.leq(pi, pj))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    (code, Poset::from_order_unchecked(names, rows))
}

fn search_block_perms(
    blocks: &[Vec<usize>],
    depth: usize,
    perm: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let Some(block) = blocks.get(depth) else {
        visit(perm);
        return;
    };
    let mut items = block.clone();
    heap_permutations(&mut items, block.len(), &mut |arrangement| {
        let mark = perm.len();
        perm.extend_from_slice(arrangement);
        search_block_perms(blocks, depth + 1, perm, visit);
        perm.truncate(mark);
    });
}

/// Heap's algorithm.
fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// Restriction on enumerated unary operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryConstraint {
    None,
    Involution,
    /// `0' = 1` and `1' = 0`.
    ZeroOneSwap,
}

/// Iterator returned by [`enumerate_unary_ops`].
pub struct UnaryOpStream {
    n: usize,
    image: Vec<usize>,
    /// positions that vary; the rest are fixed
    free: Vec<usize>,
    involution: bool,
    done: bool,
}

impl UnaryOpStream {
    fn advance(&mut self) {
        for &pos in self.free.iter().rev() {
            self.image[pos] += 1;
            if self.image[pos] < self.n {
                return;
            }
            self.image[pos] = 0;
        }
        self.done = true;
    }
}

impl Iterator for UnaryOpStream {
    type Item = UnaryOp;

    fn next(&mut self) -> Option<UnaryOp> {
        while !self.done {
            let candidate = self.image.clone();
            self.advance();
            if !self.involution || (0..self.n).all(|x| candidate[candidate[x]] == x) {
                return Some(UnaryOp::from_image_unchecked(candidate));
            }
        }
        None
    }
}

/// All total maps on the carrier satisfying `constraint`, in lexicographic
/// order of their image vectors.
pub fn enumerate_unary_ops(p: &Poset, constraint: UnaryConstraint) -> Result<UnaryOpStream> {
    let n = p.len();
    let mut image = vec![0; n];
    let mut free: Vec<usize> = (0..n).collect();
    if constraint == UnaryConstraint::ZeroOneSwap {
        let (zero, one) = p.bounds()?;
        image[zero] = one;
        image[one] = zero;
        free.retain(|&i| i != zero && i != one);
    }
    Ok(UnaryOpStream {
        n,
        image,
        free,
        involution: constraint == UnaryConstraint::Involution,
        done: false,
    })
}

/// Premise bundle a sweep filters on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Premise {
    Th1,
    Th3,
    Boolean,
    Rp,
}

impl Premise {
    pub fn variant(self) -> Variant {
        match self {
            Premise::Th1 => Variant::Th1,
            Premise::Th3 => Variant::Piecewise,
            Premise::Boolean => Variant::Boolean,
            Premise::Rp => Variant::Rp,
        }
    }
}

impl std::str::FromStr for Premise {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "th1" => Ok(Premise::Th1),
            "th3" => Ok(Premise::Th3),
            "boolean" => Ok(Premise::Boolean),
            "rp" => Ok(Premise::Rp),
            _ => Err(format!("unknown premise `{s}` (expected th1, th3, boolean or rp)")),
        }
    }
}

#[derive(Clone, Debug)]
pub enum FailureKind {
    Adjointness(AdjointnessCounterexample),
    /// Failed identities of the construction's suite.
    Identity(PropertyReport),
    /// The construction itself errored on a premise-satisfying model.
    Construction(String),
}

#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub poset: Poset,
    pub unary: Option<UnaryOp>,
    pub kind: FailureKind,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    /// `(poset, unary op)` pairs examined; posets alone for `Rp`.
    pub models_examined: u64,
    pub models_passing_premises: u64,
    pub adjointness_failure_count: u64,
    pub identity_failure_count: u64,
    /// At most [`MAX_RECORDED_FAILURES`] entries.
    pub failures: Vec<SweepFailure>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.adjointness_failure_count == 0 && self.identity_failure_count == 0
    }

    fn record(&mut self, failure: SweepFailure) {
        match failure.kind {
            FailureKind::Adjointness(_) => self.adjointness_failure_count += 1,
            _ => self.identity_failure_count += 1,
        }
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }
}

fn examine(report: &mut SweepReport, p: &Poset, u: Option<&UnaryOp>, variant: Variant) {
    report.models_examined += 1;
    let premises = match variant.premises(p, u) {
        Ok(r) => r,
        Err(_) => return,
    };
    if !premises.all_pass() {
        return;
    }
    report.models_passing_premises += 1;
    let failure = |kind| SweepFailure {
        poset: p.clone(),
        unary: u.cloned(),
        kind,
    };
    let (t_odot, t_arrow) = match build_tables(p, u, variant, false) {
        Ok(t) => t,
        Err(e) => {
            report.record(failure(FailureKind::Construction(e.to_string())));
            return;
        }
    };
    match verify_left_adjointness(p, &t_odot, &t_arrow) {
        Ok(v) if v.holds => {}
        Ok(v) => report.record(failure(FailureKind::Adjointness(
            v.counterexample.expect("failing verdict has a counterexample"),
        ))),
        Err(e) => report.record(failure(FailureKind::Construction(e.to_string()))),
    }
    match verify_identity_suite(p, u, variant, &t_odot, &t_arrow) {
        Ok(suite) if suite.all_pass() => {}
        Ok(suite) => report.record(failure(FailureKind::Identity(suite))),
        Err(e) => report.record(failure(FailureKind::Construction(e.to_string()))),
    }
}

/// Runs the construction for `premise` on every model of size `1..=n_max`
/// that satisfies it, and records adjointness or identity failures.
///
/// Unary operations are restricted to those with `0' = 1` and `1' = 0`;
/// every premise bundle that needs one forces `1' = 0`, and the piecewise
/// and Boolean bundles force `0' = 1` as well.
pub fn sweep(premise: Premise, n_max: usize, up_to_iso: bool) -> Result<SweepReport> {
    check_size(n_max)?;
    let start = Instant::now();
    let variant = premise.variant();
    let mut report = SweepReport::default();
    for n in 1..=n_max {
        for p in enumerate_posets(n, up_to_iso)? {
            if !variant.needs_unary() {
                examine(&mut report, &p, None, variant);
                continue;
            }
            if !p.is_bounded() {
                continue;
            }
            for u in enumerate_unary_ops(&p, UnaryConstraint::ZeroOneSwap)? {
                examine(&mut report, &p, Some(&u), variant);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Outcome of [`corollary_sweep`].
#[derive(Clone, Debug, Default)]
pub struct CorollaryReport {
    pub models_examined: u64,
    /// Bounded, complemented and strongly modular models found.
    pub models_matching: u64,
    /// Matching models whose `th1_premises` report fails (capped).
    pub failures: Vec<(Poset, UnaryOp, PropertyReport)>,
    pub failure_count: u64,
}

/// Checks that every bounded complemented strongly modular model of size
/// `1..=n_max` meets the Th1 premises. All unary operations are tried.
pub fn corollary_sweep(n_max: usize, up_to_iso: bool) -> Result<CorollaryReport> {
    check_size(n_max)?;
    let mut report = CorollaryReport::default();
    for n in 1..=n_max {
        for p in enumerate_posets(n, up_to_iso)? {
            if !p.is_bounded() || !is_strongly_modular(&p).all_pass() {
                continue;
            }
            for u in enumerate_unary_ops(&p, UnaryConstraint::None)? {
                report.models_examined += 1;
                if !is_complemented(&p, &u)?.passed() {
                    continue;
                }
                report.models_matching += 1;
                let th1 = th1_premises(&p, &u)?;
                if !th1.all_pass() {
                    report.failure_count += 1;
                    if report.failures.len() < MAX_RECORDED_FAILURES {
                        report.failures.push((p.clone(), u, th1));
                    }
                }
            }
        }
    }
    Ok(report)
}
