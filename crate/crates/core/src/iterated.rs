//! Finite truncations of the semigroups obtained from the trivial semigroup
//! by repeated adjunction, and the check that their products are the
//! lexicographic minimum of the index tuples.
//!
//! * `T1(k)`: `s0` followed by `k` adjoined identities `s1..sk`.
//! * `Tn(n, B)`: the box `{0..B-1}ⁿ`, adjoining each tuple as a fresh
//!   identity in increasing lex order.
//! * `V1(neg, pos)`: `T1(pos)` followed by `neg` adjoined zeros `s-1..s-neg`.
//! * `Vn(n, b)`: the box `[-b, b]ⁿ`, built by replacing every point of the
//!   `V1` chain with a copy of the `(n-1)`-level chain, then taking `min`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lex::{lex_compare, IntTuple};
use crate::order::{
    min_semigroup, order_from_semigroup_with, replace_elements, OrderedFamily, TotalOrder,
};
use crate::semigroup::{Adjoiner, CarrierLimit, FiniteSemigroup};

/// Canonical element label for an index tuple: `s3`, `s-1` for arity one,
/// `s_{0,-2,5}` otherwise.
pub fn index_label(coords: &[i64]) -> String {
    match coords {
        [i] => format!("s{i}"),
        _ => {
            let parts: Vec<String> = coords.iter().map(i64::to_string).collect();
            format!("s_{{{}}}", parts.join(","))
        }
    }
}

/// Inverse of [`index_label`]; also accepts `s_{i}` for arity one.
pub fn parse_index_label(label: &str) -> Result<Vec<i64>> {
    let bad = || Error::ParseLabel(label.to_owned());
    let rest = label.strip_prefix('s').ok_or_else(bad)?;
    let body = match rest.strip_prefix("_{") {
        Some(r) => r.strip_suffix('}').ok_or_else(bad)?,
        None => rest,
    };
    body.split(',')
        .map(|c| c.parse::<i64>().map_err(|_| bad()))
        .collect()
}

/// A semigroup whose elements are named by the points of an integer box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedSemigroup {
    underlying: FiniteSemigroup,
    bounds: Vec<(i64, i64)>,
    index: Vec<IntTuple>,
    position: HashMap<Vec<i64>, usize>,
}

impl IndexedSemigroup {
    /// Recovers each element's index tuple from its label and checks that
    /// the labels cover the box given by `bounds` (inclusive) exactly once.
    pub fn new(underlying: FiniteSemigroup, bounds: Vec<(i64, i64)>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::IndexMetadata("arity must be positive".into()));
        }
        let mut volume: u128 = 1;
        for &(lo, hi) in &bounds {
            if lo > hi {
                return Err(Error::IndexMetadata(format!("empty axis [{lo},{hi}]")));
            }
            volume = volume.saturating_mul((hi as i128 - lo as i128 + 1) as u128);
        }
        if volume != underlying.len() as u128 {
            return Err(Error::IndexMetadata(format!(
                "box holds {volume} points but the carrier has {} elements",
                underlying.len()
            )));
        }
        let signed = bounds.iter().any(|&(lo, _)| lo < 0);
        let mut index = Vec::with_capacity(underlying.len());
        let mut position = HashMap::with_capacity(underlying.len());
        for (i, label) in underlying.labels().iter().enumerate() {
            let coords = parse_index_label(label)?;
            if coords.len() != bounds.len() {
                return Err(Error::IndexMetadata(format!(
                    "label `{label}` has arity {} but bounds have arity {}",
                    coords.len(),
                    bounds.len()
                )));
            }
            if coords
                .iter()
                .zip(&bounds)
                .any(|(c, &(lo, hi))| *c < lo || *c > hi)
            {
                return Err(Error::IndexMetadata(format!("label `{label}` lies outside the box")));
            }
            if position.insert(coords.clone(), i).is_some() {
                return Err(Error::IndexMetadata(format!("index of `{label}` repeats")));
            }
            index.push(if signed {
                IntTuple::signed(coords)?
            } else {
                IntTuple::unsigned(coords)?
            });
        }
        Ok(IndexedSemigroup {
            underlying,
            bounds,
            index,
            position,
        })
    }

    pub fn underlying(&self) -> &FiniteSemigroup {
        &self.underlying
    }

    pub fn into_underlying(self) -> FiniteSemigroup {
        self.underlying
    }

    pub fn arity(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.underlying.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.underlying.is_empty()
    }

    pub fn tuple(&self, element: usize) -> &IntTuple {
        &self.index[element]
    }

    pub fn position(&self, coords: &[i64]) -> Option<usize> {
        self.position.get(coords).copied()
    }
}

fn box_volume(side: u128, arity: usize) -> u128 {
    (0..arity).fold(1u128, |v, _| v.saturating_mul(side))
}

/// All points of `[lo, hi]ⁿ` in increasing lex order (odometer on the last
/// coordinate).
pub fn box_points(arity: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let side = (hi - lo + 1) as usize;
    let total = side.pow(arity as u32);
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![lo; arity];
    for _ in 0..total {
        out.push(cur.clone());
        for k in (0..arity).rev() {
            if cur[k] < hi {
                cur[k] += 1;
                break;
            }
            cur[k] = lo;
        }
    }
    out
}

/// `s0` with identities `s1, ..., sk` adjoined one at a time.
pub fn build_t1(k: usize, limit: CarrierLimit) -> Result<IndexedSemigroup> {
    let size = limit.admit(k as u128 + 1)?;
    let mut adj = Adjoiner::new(&FiniteSemigroup::trivial("s0")?, size);
    for i in 1..=k {
        adj.push_identity(&index_label(&[i as i64]))?;
    }
    IndexedSemigroup::new(adj.finish(), vec![(0, k as i64)])
}

/// The box `{0..bound-1}ⁿ`, starting from the trivial semigroup on the zero
/// tuple and adjoining every later tuple (in lex order) as a new identity.
pub fn build_tn(arity: usize, bound: usize, limit: CarrierLimit) -> Result<IndexedSemigroup> {
    if arity == 0 || bound == 0 {
        return Err(Error::IndexMetadata("arity and bound must be positive".into()));
    }
    let size = limit.admit(box_volume(bound as u128, arity))?;
    let points = box_points(arity, 0, bound as i64 - 1);
    let mut adj = Adjoiner::new(&FiniteSemigroup::trivial(&index_label(&points[0]))?, size);
    for p in &points[1..] {
        adj.push_identity(&index_label(p))?;
    }
    IndexedSemigroup::new(adj.finish(), vec![(0, bound as i64 - 1); arity])
}

/// `T1(pos)` followed by the zeros `s-1, ..., s-neg`.
///
/// At any finite truncation the result has an identity (`s{pos}`) and a
/// zero (`s-{neg}`); only the infinite union has neither.
pub fn build_v1(neg: usize, pos: usize, limit: CarrierLimit) -> Result<IndexedSemigroup> {
    let size = limit.admit(neg as u128 + pos as u128 + 1)?;
    let mut adj = Adjoiner::new(&FiniteSemigroup::trivial("s0")?, size);
    for i in 1..=pos {
        adj.push_identity(&index_label(&[i as i64]))?;
    }
    for i in 1..=neg {
        adj.push_zero(&index_label(&[-(i as i64)]))?;
    }
    IndexedSemigroup::new(adj.finish(), vec![(-(neg as i64), pos as i64)])
}

fn v_chain(arity: usize, bound: usize, limit: CarrierLimit) -> Result<TotalOrder> {
    let v1 = build_v1(bound, bound, limit)?;
    let base = order_from_semigroup_with(v1.underlying(), Exec::default())?;
    if arity == 1 {
        return Ok(base);
    }
    let inner = v_chain(arity - 1, bound, limit)?;
    let inner_coords = inner
        .labels()
        .iter()
        .map(|l| parse_index_label(l))
        .collect::<Result<Vec<_>>>()?;
    let parts = (0..base.len())
        .map(|s| {
            let head = v1.tuple(s).coords()[0];
            let labels = inner_coords
                .iter()
                .map(|tail| {
                    let mut c = Vec::with_capacity(arity);
                    c.push(head);
                    c.extend_from_slice(tail);
                    index_label(&c)
                })
                .collect();
            TotalOrder::from_ranks(labels, inner.ranks().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(replace_elements(&OrderedFamily::new(base, parts)?))
}

/// The box `[-bound, bound]ⁿ` ordered by nested replacement of the `V1`
/// chain, as a `min` semigroup.
pub fn build_vn(arity: usize, bound: usize, limit: CarrierLimit) -> Result<IndexedSemigroup> {
    if arity == 0 {
        return Err(Error::IndexMetadata("arity must be positive".into()));
    }
    limit.admit(box_volume(2 * bound as u128 + 1, arity))?;
    if arity == 1 {
        return build_v1(bound, bound, limit);
    }
    let chain = v_chain(arity, bound, limit)?;
    let b = bound as i64;
    IndexedSemigroup::new(min_semigroup(&chain), vec![(-b, b); arity])
}

/// Lex order on `[lo, hi]ⁿ`, sorted with [`lex_compare`]. The carrier is
/// listed in chain order.
pub fn lex_box_order(arity: usize, lo: i64, hi: i64) -> Result<TotalOrder> {
    let signed = lo < 0;
    let mut tuples = box_points(arity, lo, hi)
        .into_iter()
        .map(|c| if signed { IntTuple::signed(c) } else { IntTuple::unsigned(c) })
        .collect::<Result<Vec<_>>>()?;
    tuples.sort_by(|a, b| lex_compare(a, b).expect("one box, one arity"));
    TotalOrder::from_ranked_labels(tuples.iter().map(|t| index_label(t.coords())).collect())
}

/// The semigroup `s_I * s_J = s_{lexmin(I,J)}` on `[lo, hi]ⁿ`, filled in
/// directly from the formula.
pub fn direct_lex_semigroup(
    arity: usize,
    lo: i64,
    hi: i64,
    limit: CarrierLimit,
) -> Result<IndexedSemigroup> {
    limit.admit(box_volume((hi - lo + 1) as u128, arity))?;
    let signed = lo < 0;
    let tuples = box_points(arity, lo, hi)
        .into_iter()
        .map(|c| if signed { IntTuple::signed(c) } else { IntTuple::unsigned(c) })
        .collect::<Result<Vec<_>>>()?;
    let n = tuples.len();
    let mut table = Vec::with_capacity(n * n);
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            let pick = crate::lex::lex_min(a, b)?;
            table.push(if std::ptr::eq(pick, a) { i as u32 } else { j as u32 });
        }
    }
    let labels = tuples.iter().map(|t| index_label(t.coords())).collect();
    IndexedSemigroup::new(
        FiniteSemigroup::from_parts_unchecked(labels, table),
        vec![(lo, hi); arity],
    )
}

/// First discrepancy between an indexed semigroup and the lex rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexViolation {
    /// `s_I * s_J` is not `s_{lexmin(I,J)}`.
    Product {
        left: String,
        right: String,
        expected: String,
        actual: String,
    },
    /// The order induced by the table does not rank this element at its
    /// lex position.
    Rank {
        element: String,
        expected: usize,
        actual: usize,
    },
    /// The table does not induce a total order at all.
    NotTotal(String),
}

impl fmt::Display for LexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexViolation::Product {
                left,
                right,
                expected,
                actual,
            } => write!(f, "{left} * {right} = {actual}, expected {expected}"),
            LexViolation::Rank {
                element,
                expected,
                actual,
            } => write!(f, "{element} has rank {actual} in the induced order, expected {expected}"),
            LexViolation::NotTotal(why) => write!(f, "no induced total order: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexReport {
    pub pairs_checked: usize,
    pub outcome: Check<LexViolation>,
}

impl LexReport {
    pub fn is_pass(&self) -> bool {
        self.outcome.is_pass()
    }
}

pub fn verify_lex_correspondence(s: &IndexedSemigroup) -> LexReport {
    verify_lex_correspondence_with(s, Exec::default())
}

/// Checks every ordered pair `(s_I, s_J)` against `s_{lexmin(I,J)}`, then
/// checks that the induced order ranks elements in lex order of their
/// indices.
pub fn verify_lex_correspondence_with(s: &IndexedSemigroup, exec: Exec) -> LexReport {
    let g = s.underlying();
    let n = g.len();
    let pairs_checked = n * n;
    let product = exec.find_map_first(n, |a| {
        (0..n).find_map(|b| {
            let expected = match lex_compare(s.tuple(a), s.tuple(b)).ok()? {
                Ordering::Greater => b,
                _ => a,
            };
            let actual = g.product(a, b);
            (actual != expected).then(|| LexViolation::Product {
                left: g.label(a).to_owned(),
                right: g.label(b).to_owned(),
                expected: g.label(expected).to_owned(),
                actual: g.label(actual).to_owned(),
            })
        })
    });
    if let Some(v) = product {
        return LexReport {
            pairs_checked,
            outcome: Check::Fail(v),
        };
    }
    let order = match order_from_semigroup_with(g, exec) {
        Ok(o) => o,
        Err(e) => {
            return LexReport {
                pairs_checked,
                outcome: Check::Fail(LexViolation::NotTotal(e.to_string())),
            }
        }
    };
    let mut by_lex: Vec<usize> = (0..n).collect();
    by_lex.sort_by(|&a, &b| lex_compare(s.tuple(a), s.tuple(b)).expect("uniform tuples"));
    let rank = by_lex
        .iter()
        .enumerate()
        .find(|&(r, &e)| order.rank(e) != r)
        .map(|(r, &e)| LexViolation::Rank {
            element: g.label(e).to_owned(),
            expected: r,
            actual: order.rank(e),
        });
    LexReport {
        pairs_checked,
        outcome: Check::from_violation(rank),
    }
}
