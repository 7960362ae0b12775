//! Brute-force oracles shared by the integration tests. Everything here is
//! computed from `Poset::leq` alone.

#![allow(dead_code)]

use poset_residuation::{ElementSet, Poset};

pub fn lower(p: &Poset, a: ElementSet) -> ElementSet {
    (0..p.len())
        .filter(|&x| a.iter().all(|y| p.leq(x, y)))
        .collect()
}

pub fn upper(p: &Poset, a: ElementSet) -> ElementSet {
    (0..p.len())
        .filter(|&x| a.iter().all(|y| p.leq(y, x)))
        .collect()
}

pub fn maximal(p: &Poset, a: ElementSet) -> ElementSet {
    a.iter()
        .filter(|&x| !a.iter().any(|y| y != x && p.leq(x, y)))
        .collect()
}

pub fn minimal(p: &Poset, a: ElementSet) -> ElementSet {
    a.iter()
        .filter(|&x| !a.iter().any(|y| y != x && p.leq(y, x)))
        .collect()
}

pub fn set_leq(p: &Poset, a: ElementSet, b: ElementSet) -> bool {
    a.iter().all(|x| b.iter().all(|y| p.leq(x, y)))
}

pub fn set(members: &[usize]) -> ElementSet {
    members.iter().copied().collect()
}

/// Every subset of the carrier.
pub fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u64..1 << n).map(move |bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Relation matrix of `p` as `n*n` booleans.
pub fn matrix(p: &Poset) -> Vec<bool> {
    let n = p.len();
    (0..n * n).map(|k| p.leq(k / n, k % n)).collect()
}

/// Minimum relation matrix over all `n!` relabellings.
pub fn brute_canonical(m: &[bool], n: usize) -> Vec<bool> {
    permutations(n)
        .into_iter()
        .map(|perm| {
            (0..n * n)
                .map(|k| m[perm[k / n] * n + perm[k % n]])
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// All partial orders on `n` labelled points, found by filtering every
/// reflexive relation matrix through the order axioms.
pub fn brute_orders(n: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << off.len() {
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            m[i * n + j] = bits >> k & 1 == 1;
        }
        let antisymmetric = off.iter().all(|&(i, j)| !(m[i * n + j] && m[j * n + i]));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(m[i * n + j] && m[j * n + k]) || m[i * n + k]))
        });
        if antisymmetric && transitive {
            out.push(m);
        }
    }
    out
}

/// Number of automorphisms of a relation matrix.
pub fn automorphisms(m: &[bool], n: usize) -> usize {
    permutations(n)
        .into_iter()
        .filter(|perm| (0..n * n).all(|k| m[perm[k / n] * n + perm[k % n]] == m[k]))
        .count()
}

/// A partial order from `edges`, one flag per pair `i < j` (at least
/// `n(n-1)/2` flags), transitively closed, then relabelled by `perm`.
pub fn random_order(n: usize, edges: &[bool], perm: &[usize]) -> Poset {
    let mut m = vec![false; n * n];
    let mut k = 0;
    for i in 0..n {
        m[i * n + i] = true;
        for j in i + 1..n {
            m[i * n + j] = edges[k];
            k += 1;
        }
    }
    for mid in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i * n + mid] && m[mid * n + j] {
                    m[i * n + j] = true;
                }
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    Poset::from_relation(&names, |a, b| m[perm[a] * n + perm[b]]).unwrap()
}
