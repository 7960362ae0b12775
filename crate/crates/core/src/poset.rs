//! Finite posets with the cone operators `L`, `U` and the extremal-element
//! operators `Max`, `Min`.
//!
//! Elements are identified by their index in declaration order. Labels are
//! kept only for presentation and parsing.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set::{ElementSet, CAPACITY};

/// Which extremal elements [`Poset::extremal`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

/// A finite partially ordered set of at most [`CAPACITY`] elements.
///
/// The order is stored twice, as the principal down-set and up-set of every
/// element, so that cones reduce to word-wide intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// `down[j]` = `{ i | i <= j }`
    down: Vec<ElementSet>,
    /// `up[i]` = `{ j | i <= j }`
    up: Vec<ElementSet>,
    least: Option<usize>,
    greatest: Option<usize>,
}

impl Poset {
    /// Builds a poset from a Hasse diagram given as `(lower, upper)` pairs.
    ///
    /// The order is the reflexive-transitive closure of the pairs. Pairs need
    /// not be true covers, but the closure must be antisymmetric.
    pub fn from_covers<S, T>(names: &[S], covers: &[(T, T)]) -> Result<Poset>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        check_carrier(&names)?;
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let lookup = |label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
        };

        let n = names.len();
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if lo == hi {
                return Err(Error::CycleDetected(names[lo].clone(), names[hi].clone()));
            }
            up[lo].insert(hi);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row |= row_k;
                }
            }
        }
        Poset::from_up_sets(names, up)
    }

    /// Builds a poset from an explicit relation, `leq(i, j)` meaning `i <= j`.
    ///
    /// All three order axioms are validated.
    pub fn from_relation<S, F>(names: &[S], leq: F) -> Result<Poset>
    where
        S: AsRef<str>,
        F: Fn(usize, usize) -> bool,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        check_carrier(&names)?;
        let n = names.len();
        let up: Vec<ElementSet> = (0..n)
            .map(|i| (0..n).filter(|&j| leq(i, j)).collect())
            .collect();
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::NotAnOrder(format!("`{}` is not below itself", names[i])));
            }
            for j in up[i] {
                if let Some(k) = (up[j] - up[i]).first() {
                    return Err(Error::NotAnOrder(format!(
                        "`{}` <= `{}` <= `{}` but not `{}` <= `{}`",
                        names[i], names[j], names[k], names[i], names[k]
                    )));
                }
            }
        }
        Poset::from_up_sets(names, up)
    }

    /// Validates antisymmetry of an already reflexive and transitive relation
    /// and derives down-sets and bounds.
    fn from_up_sets(names: Vec<String>, up: Vec<ElementSet>) -> Result<Poset> {
        let n = names.len();
        let mut down = vec![ElementSet::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in *row {
                down[j].insert(i);
            }
        }
        for i in 0..n {
            let both = up[i] & down[i];
            if let Some(j) = (both - ElementSet::singleton(i)).first() {
                return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
            }
        }
        Ok(Poset::assemble(names, down, up))
    }

    /// Assembles a poset from a relation known to be a partial order.
    pub(crate) fn from_order_unchecked(names: Vec<String>, up: Vec<ElementSet>) -> Poset {
        let n = names.len();
        let mut down = vec![ElementSet::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in *row {
                down[j].insert(i);
            }
        }
        Poset::assemble(names, down, up)
    }

    fn assemble(names: Vec<String>, down: Vec<ElementSet>, up: Vec<ElementSet>) -> Poset {
        let full = ElementSet::full(names.len());
        let least = (0..names.len()).find(|&i| up[i] == full);
        let greatest = (0..names.len()).find(|&i| down[i] == full);
        Poset {
            names,
            down,
            up,
            least,
            greatest,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Resolves a list of labels to a set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect()
    }

    /// Labels of the members of `set`, in declaration order.
    pub fn labels(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// The whole carrier.
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Principal down-set `L(i)`.
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// Principal up-set `U(i)`.
    pub fn up_set(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// The least element `0`, if any.
    pub fn least(&self) -> Option<usize> {
        self.least
    }

    /// The greatest element `1`, if any.
    pub fn greatest(&self) -> Option<usize> {
        self.greatest
    }

    pub fn is_bounded(&self) -> bool {
        self.least.is_some() && self.greatest.is_some()
    }

    /// `(0, 1)`, or [`Error::NotBounded`].
    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.least, self.greatest) {
            (Some(zero), Some(one)) => Ok((zero, one)),
            _ => Err(Error::NotBounded),
        }
    }

    /// `L(A) = { x | x <= a for all a in A }`; the whole carrier for `A = {}`.
    pub fn lower_cone(&self, set: ElementSet) -> ElementSet {
        set.iter()
            .fold(self.carrier(), |acc, a| acc & self.down[a])
    }

    /// `U(A) = { x | a <= x for all a in A }`; the whole carrier for `A = {}`.
    pub fn upper_cone(&self, set: ElementSet) -> ElementSet {
        set.iter().fold(self.carrier(), |acc, a| acc & self.up[a])
    }

    /// `Max A` or `Min A`.
    pub fn extremal(&self, set: ElementSet, side: Extremum) -> ElementSet {
        let cone = match side {
            Extremum::Max => &self.up,
            Extremum::Min => &self.down,
        };
        set.iter()
            .filter(|&a| (cone[a] & set) == ElementSet::singleton(a))
            .collect()
    }

    pub fn max(&self, set: ElementSet) -> ElementSet {
        self.extremal(set, Extremum::Max)
    }

    pub fn min(&self, set: ElementSet) -> ElementSet {
        self.extremal(set, Extremum::Min)
    }

    /// `A <= B`: every member of `A` is below every member of `B`.
    pub fn set_leq(&self, a: ElementSet, b: ElementSet) -> bool {
        a.iter().all(|x| b.is_subset(self.up[x]))
    }

    /// No two distinct members of `set` are comparable.
    pub fn is_antichain(&self, set: ElementSet) -> bool {
        set.iter()
            .all(|a| (self.up[a] & set) == ElementSet::singleton(a))
    }

    /// The cover relation (Hasse diagram edges) as `(lower, upper)` pairs,
    /// sorted by lower then upper index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let strictly_above = self.up[i] - ElementSet::singleton(i);
            for j in self.min(strictly_above) {
                out.push((i, j));
            }
        }
        out
    }

    /// Every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|x| {
            (x..self.len()).all(|y| {
                let pair = ElementSet::from([x, y]);
                self.min(self.upper_cone(pair)).len() == 1
                    && self.max(self.lower_cone(pair)).len() == 1
            })
        })
    }

    /// The same order with elements renamed.
    pub fn relabel<S: AsRef<str>>(&self, names: &[S]) -> Result<Poset> {
        if names.len() != self.len() {
            return Err(Error::ElementOutOfRange(names.len()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        check_carrier(&names)?;
        Ok(Poset {
            names,
            ..self.clone()
        })
    }
}

fn check_carrier(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if names.len() > CAPACITY {
        return Err(Error::CapacityExceeded(names.len()));
    }
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    Ok(())
}
