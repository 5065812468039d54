//! Finite total orders and their correspondence with selective semilattices.
//!
//! A total order `≤` yields the semigroup `a*b = min(a,b)` (or `max`), and a
//! commutative, associative, selective operation with the transitivity
//! condition `a*b = a ∧ b*c = b ⇒ a*c = a` yields back the order
//! `a ≤ b ⇔ a*b = a`. [`replace_elements`] substitutes an ordered block for
//! each point of an ordered base.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::semigroup::{check_associative_with, AssocViolation, FiniteSemigroup};

/// A total order on a finite labelled carrier.
///
/// `labels` is the carrier order (matching the semigroups derived from it);
/// `rank[i]` is the chain position of element `i`, 0 being least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalOrder {
    labels: Vec<String>,
    rank: Vec<usize>,
}

impl TotalOrder {
    /// Chain whose carrier order is already least-to-greatest.
    pub fn from_ranked_labels(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::from_ranks(labels, (0..n).collect())
    }

    pub fn from_ranks(labels: Vec<String>, rank: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if rank.len() != n {
            return Err(Error::BadRanks(n));
        }
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::LabelCollision(l.clone()));
            }
        }
        let mut hit = vec![false; n];
        for &r in &rank {
            if r >= n || std::mem::replace(&mut hit[r], true) {
                return Err(Error::BadRanks(n));
            }
        }
        Ok(TotalOrder { labels, rank })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; orders are nonempty.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank(&self, index: usize) -> usize {
        self.rank[index]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b]
    }

    /// Carrier indices listed least to greatest.
    pub fn chain(&self) -> Vec<usize> {
        let mut by_rank = vec![0; self.len()];
        for (i, &r) in self.rank.iter().enumerate() {
            by_rank[r] = i;
        }
        by_rank
    }

    pub fn chain_labels(&self) -> Vec<&str> {
        self.chain()
            .into_iter()
            .map(|i| self.labels[i].as_str())
            .collect()
    }

    /// Same carrier, opposite order.
    pub fn reverse(&self) -> TotalOrder {
        let top = self.len() - 1;
        TotalOrder {
            labels: self.labels.clone(),
            rank: self.rank.iter().map(|&r| top - r).collect(),
        }
    }

    /// Every pair `(a, b)` with `a ≤ b`, as labels, in carrier-index order.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for a in 0..n {
            for b in 0..n {
                if self.le(a, b) {
                    out.push((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        out
    }

    /// Renumber the carrier so that carrier order equals chain order.
    pub fn canonical(&self) -> TotalOrder {
        let labels = self
            .chain_labels()
            .into_iter()
            .map(str::to_owned)
            .collect::<Vec<_>>();
        let n = labels.len();
        TotalOrder {
            labels,
            rank: (0..n).collect(),
        }
    }
}

/// First violated order axiom, with labelled witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    /// A1: `a ≤ a` missing.
    Reflexivity(String),
    /// A2: `a ≤ b`, `b ≤ c` but not `a ≤ c`.
    Transitivity(String, String, String),
    /// A3: `a ≤ b` and `b ≤ a` with `a ≠ b`.
    Antisymmetry(String, String),
    /// A4: neither `a ≤ b` nor `b ≤ a`.
    Totality(String, String),
}

impl OrderViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            OrderViolation::Reflexivity(_) => "A1",
            OrderViolation::Transitivity(..) => "A2",
            OrderViolation::Antisymmetry(..) => "A3",
            OrderViolation::Totality(..) => "A4",
        }
    }
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::Reflexivity(a) => write!(f, "A1 (reflexivity) fails at {a}"),
            OrderViolation::Transitivity(a, b, c) => {
                write!(f, "A2 (transitivity) fails at ({a},{b},{c})")
            }
            OrderViolation::Antisymmetry(a, b) => {
                write!(f, "A3 (antisymmetry) fails at ({a},{b})")
            }
            OrderViolation::Totality(a, b) => write!(f, "A4 (totality) fails at ({a},{b})"),
        }
    }
}

/// Dense relation matrix over a labelled carrier.
struct Relation<'a> {
    elements: &'a [String],
    n: usize,
    holds: Vec<bool>,
}

impl<'a> Relation<'a> {
    fn new(elements: &'a [String], pairs: &[(String, String)]) -> Result<Self> {
        let n = elements.len();
        let mut lookup = HashMap::with_capacity(n);
        for (i, l) in elements.iter().enumerate() {
            if lookup.insert(l.as_str(), i).is_some() {
                return Err(Error::LabelCollision(l.clone()));
            }
        }
        let idx = |l: &String| {
            lookup
                .get(l.as_str())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.clone()))
        };
        let mut holds = vec![false; n * n];
        for (a, b) in pairs {
            holds[idx(a)? * n + idx(b)?] = true;
        }
        Ok(Relation { elements, n, holds })
    }

    fn get(&self, a: usize, b: usize) -> bool {
        self.holds[a * self.n + b]
    }

    fn label(&self, a: usize) -> String {
        self.elements[a].clone()
    }

    fn partial_order_violation(&self) -> Option<OrderViolation> {
        let n = self.n;
        if let Some(a) = (0..n).find(|&a| !self.get(a, a)) {
            return Some(OrderViolation::Reflexivity(self.label(a)));
        }
        for a in 0..n {
            for b in 0..n {
                if !self.get(a, b) {
                    continue;
                }
                if let Some(c) = (0..n).find(|&c| self.get(b, c) && !self.get(a, c)) {
                    return Some(OrderViolation::Transitivity(
                        self.label(a),
                        self.label(b),
                        self.label(c),
                    ));
                }
            }
        }
        for a in 0..n {
            if let Some(b) = (a + 1..n).find(|&b| self.get(a, b) && self.get(b, a)) {
                return Some(OrderViolation::Antisymmetry(self.label(a), self.label(b)));
            }
        }
        None
    }
}

/// Checks A1-A3 on an explicit relation given as `(a, b)` meaning `a ≤ b`.
pub fn check_partial_order(
    elements: &[String],
    pairs: &[(String, String)],
) -> Result<Check<OrderViolation>> {
    let rel = Relation::new(elements, pairs)?;
    Ok(Check::from_violation(rel.partial_order_violation()))
}

/// Checks A1-A4; on success returns the order with ranks obtained by
/// counting, for each element, how many elements lie at or below it.
pub fn check_total_order(
    elements: &[String],
    pairs: &[(String, String)],
) -> Result<Check<OrderViolation, TotalOrder>> {
    if elements.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let rel = Relation::new(elements, pairs)?;
    if let Some(v) = rel.partial_order_violation() {
        return Ok(Check::Fail(v));
    }
    let n = rel.n;
    for a in 0..n {
        if let Some(b) = (a + 1..n).find(|&b| !rel.get(a, b) && !rel.get(b, a)) {
            return Ok(Check::Fail(OrderViolation::Totality(
                rel.label(a),
                rel.label(b),
            )));
        }
    }
    let rank = (0..n)
        .map(|a| (0..n).filter(|&b| rel.get(b, a)).count() - 1)
        .collect();
    Ok(Check::Pass(TotalOrder::from_ranks(elements.to_vec(), rank)?))
}

/// `a*b = min(a, b)` on the carrier of `order`.
pub fn min_semigroup(order: &TotalOrder) -> FiniteSemigroup {
    select_semigroup(order, |a, b| if order.le(a, b) { a } else { b })
}

/// `a*b = max(a, b)` on the carrier of `order`.
pub fn max_semigroup(order: &TotalOrder) -> FiniteSemigroup {
    select_semigroup(order, |a, b| if order.le(a, b) { b } else { a })
}

fn select_semigroup(order: &TotalOrder, pick: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let n = order.len();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(pick(a, b) as u32);
        }
    }
    FiniteSemigroup::from_parts_unchecked(order.labels.clone(), table)
}

/// First violated selective-semilattice axiom. Indices refer to the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BViolation {
    /// B1, associativity half.
    Associativity(AssocViolation),
    /// B1, commutativity half.
    Commutativity(usize, usize),
    /// B2: `a*b ∉ {a, b}`.
    Selectivity(usize, usize),
    /// B3: `a*b = a`, `b*c = b`, but `a*c ≠ a`.
    Transitivity(usize, usize, usize),
}

impl BViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            BViolation::Associativity(_) | BViolation::Commutativity(..) => "B1",
            BViolation::Selectivity(..) => "B2",
            BViolation::Transitivity(..) => "B3",
        }
    }
}

impl fmt::Display for BViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BViolation::Associativity(v) => write!(f, "B1: {v}"),
            BViolation::Commutativity(a, b) => write!(f, "B1: commutativity fails at ({a},{b})"),
            BViolation::Selectivity(a, b) => write!(f, "B2: product of ({a},{b}) is neither factor"),
            BViolation::Transitivity(a, b, c) => write!(f, "B3 fails at ({a},{b},{c})"),
        }
    }
}

pub fn check_b_axioms(s: &FiniteSemigroup) -> Check<BViolation> {
    check_b_axioms_with(s, Exec::default())
}

/// B1 (associative and commutative), then B2, then B3; the first failure
/// in that order is reported.
pub fn check_b_axioms_with(s: &FiniteSemigroup, exec: Exec) -> Check<BViolation> {
    if let Check::Fail(v) = check_associative_with(s, exec) {
        return Check::Fail(BViolation::Associativity(v));
    }
    let n = s.len();
    let comm = exec.find_map_first(n, |a| {
        (a + 1..n)
            .find(|&b| s.product(a, b) != s.product(b, a))
            .map(|b| BViolation::Commutativity(a, b))
    });
    if let Some(v) = comm {
        return Check::Fail(v);
    }
    let sel = exec.find_map_first(n, |a| {
        (0..n)
            .find(|&b| {
                let p = s.product(a, b);
                p != a && p != b
            })
            .map(|b| BViolation::Selectivity(a, b))
    });
    if let Some(v) = sel {
        return Check::Fail(v);
    }
    Check::from_violation(exec.find_map_first(n, |a| {
        for b in (0..n).filter(|&b| s.product(a, b) == a) {
            if let Some(c) = (0..n).find(|&c| s.product(b, c) == b && s.product(a, c) != a) {
                return Some(BViolation::Transitivity(a, b, c));
            }
        }
        None
    }))
}

/// The order `a ≤ b ⇔ a*b = a` induced by a semigroup satisfying B1-B3.
///
/// Totality is re-verified on the materialized ranks before returning.
pub fn order_from_semigroup(s: &FiniteSemigroup) -> Result<TotalOrder> {
    order_from_semigroup_with(s, Exec::default())
}

pub fn order_from_semigroup_with(s: &FiniteSemigroup, exec: Exec) -> Result<TotalOrder> {
    if let Check::Fail(v) = check_b_axioms_with(s, exec) {
        return Err(Error::NotTotalOrderSemigroup(v.to_string()));
    }
    let n = s.len();
    let rank: Vec<usize> = exec.map_collect(n, |a| {
        (0..n).filter(|&b| s.product(b, a) == b).count() - 1
    });
    let order = TotalOrder::from_ranks(s.labels().to_vec(), rank)
        .map_err(|e| Error::NotTotalOrderSemigroup(e.to_string()))?;
    let disagreement = exec.find_map_first(n, |a| {
        (0..n)
            .find(|&b| (s.product(a, b) == a) != order.le(a, b))
            .map(|b| (a, b))
    });
    if let Some((a, b)) = disagreement {
        return Err(Error::NotTotalOrderSemigroup(format!(
            "derived relation disagrees with ranks at ({a},{b})"
        )));
    }
    Ok(order)
}

/// A base order together with one ordered block per base element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedFamily {
    base: TotalOrder,
    parts: Vec<TotalOrder>,
}

impl OrderedFamily {
    /// `parts[i]` replaces base element `i` (carrier index). Block carriers
    /// must be pairwise disjoint.
    pub fn new(base: TotalOrder, parts: Vec<TotalOrder>) -> Result<Self> {
        if parts.len() != base.len() {
            return Err(Error::BadFamily(format!(
                "{} parts for a base of {} elements",
                parts.len(),
                base.len()
            )));
        }
        let mut seen = HashSet::new();
        for part in &parts {
            for l in part.labels() {
                if !seen.insert(l.as_str()) {
                    return Err(Error::BadFamily(format!("label `{l}` occurs in two parts")));
                }
            }
        }
        Ok(OrderedFamily { base, parts })
    }

    pub fn base(&self) -> &TotalOrder {
        &self.base
    }

    pub fn parts(&self) -> &[TotalOrder] {
        &self.parts
    }
}

/// Lexicographic sum: blocks concatenated in base order, each block in its
/// own order. The carrier of the result is listed in chain order.
pub fn replace_elements(family: &OrderedFamily) -> TotalOrder {
    let labels = family
        .base
        .chain()
        .into_iter()
        .flat_map(|s| family.parts[s].chain_labels())
        .map(str::to_owned)
        .collect::<Vec<_>>();
    let n = labels.len();
    TotalOrder { labels, rank: (0..n).collect() }
}
