//! Brute-force oracles and instance generators shared by the integration
//! tests. Nothing here calls into the library's checkers: the oracles work
//! on raw `Vec<Vec<usize>>` tables and on `Vec<i64>`'s built-in (lexicographic)
//! ordering.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use semilex::{FiniteSemigroup, TotalOrder};

pub type Table = Vec<Vec<usize>>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn make(prefix: &str, table: Table) -> FiniteSemigroup {
    FiniteSemigroup::from_table(labels(prefix, table.len()), table).unwrap()
}

pub fn oracle_first_assoc_violation(t: &Table) -> Option<(usize, usize, usize)> {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn oracle_commutative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a]))
}

pub fn oracle_identities(t: &Table) -> Vec<usize> {
    let n = t.len();
    (0..n)
        .filter(|&e| (0..n).all(|a| t[e][a] == a && t[a][e] == a))
        .collect()
}

pub fn oracle_zeros(t: &Table) -> Vec<usize> {
    let n = t.len();
    (0..n)
        .filter(|&z| (0..n).all(|a| t[z][a] == z && t[a][z] == z))
        .collect()
}

/// B1-B3 by direct quantifier expansion.
pub fn oracle_b_axioms(t: &Table) -> bool {
    let n = t.len();
    if oracle_first_assoc_violation(t).is_some() || !oracle_commutative(t) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            if t[a][b] != a && t[a][b] != b {
                return false;
            }
            for c in 0..n {
                if t[a][b] == a && t[b][c] == b && t[a][c] != a {
                    return false;
                }
            }
        }
    }
    true
}

/// Min table for a chain given as rank per element.
pub fn oracle_min_table(rank: &[usize]) -> Table {
    let n = rank.len();
    (0..n)
        .map(|a| (0..n).map(|b| if rank[a] <= rank[b] { a } else { b }).collect())
        .collect()
}

pub fn random_ranks(r: &mut StdRng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(r);
    v
}

pub fn random_order(r: &mut StdRng, n: usize) -> TotalOrder {
    TotalOrder::from_ranks(labels("e", n), random_ranks(r, n)).unwrap()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Hand-built associative tables of size `n`: cyclic group, left-zero,
/// right-zero, null (everything to element 0), constant-to-last, and the
/// max-chain.
pub fn hand_built(n: usize) -> Vec<(String, Table)> {
    let sq = |f: &dyn Fn(usize, usize) -> usize| -> Table {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    vec![
        (format!("Z/{n}"), sq(&|a, b| (a + b) % n)),
        (format!("left-zero {n}"), sq(&|a, _| a)),
        (format!("right-zero {n}"), sq(&|_, b| b)),
        (format!("null {n}"), sq(&|_, _| 0)),
        (format!("constant {n}"), sq(&|_, _| n - 1)),
        (format!("max-chain {n}"), sq(&|a, b| a.max(b))),
        (format!("mult mod {n}"), sq(&|a, b| (a * b) % n)),
    ]
}

/// At least `count` valid semigroups of size at most 6: min-semigroups of
/// random orders topped up with every hand-built family. Each is confirmed
/// associative by the oracle.
pub fn generated_semigroups(seed: u64, count: usize) -> Vec<(String, FiniteSemigroup)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for (name, t) in hand_built(n) {
            assert!(oracle_first_assoc_violation(&t).is_none(), "{name}");
            out.push((name, make("h", t)));
        }
    }
    let mut r = rng(seed);
    while out.len() < count {
        let n = r.gen_range(1..=6);
        let ranks = random_ranks(&mut r, n);
        out.push((
            format!("min of {ranks:?}"),
            make("m", oracle_min_table(&ranks)),
        ));
    }
    out
}

pub fn lex_less_eq(a: &[i64], b: &[i64]) -> bool {
    a <= b
}

pub fn table_of(s: &FiniteSemigroup) -> Table {
    s.rows()
}
