//! Finite semigroups as dense Cayley tables, and the two one-point
//! extensions: adjoining a fresh identity and adjoining a fresh zero.
//!
//! Elements are addressed by their position in the carrier; labels are
//! metadata used for I/O and for relabeling checks. Products are `u32`
//! indices into the carrier, stored row-major.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Default ceiling on carrier size. Tables are quadratic in memory.
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

/// Upper bound on the number of elements any constructor will produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarrierLimit(pub usize);

impl Default for CarrierLimit {
    fn default() -> Self {
        CarrierLimit(DEFAULT_MAX_ELEMENTS)
    }
}

impl CarrierLimit {
    pub fn admit(self, requested: u128) -> Result<usize> {
        if requested > self.0 as u128 {
            return Err(Error::SizeLimit {
                requested,
                limit: self.0,
            });
        }
        Ok(requested as usize)
    }
}

/// A member of a semigroup carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub index: usize,
    pub label: String,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// A nonempty finite carrier with a closed binary operation.
///
/// Closure is validated on construction. Associativity is not: use
/// [`check_associative`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    lookup: HashMap<String, usize>,
    table: Vec<u32>,
}

impl FiniteSemigroup {
    /// Validates labels, shape and closure against the default limit.
    pub fn from_table(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_with_limit(labels, rows, CarrierLimit::default())
    }

    pub fn from_table_with_limit(
        labels: Vec<String>,
        rows: Vec<Vec<usize>>,
        limit: CarrierLimit,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        limit.admit(n as u128)?;
        let lookup = index_labels(&labels)?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape {
                rows: rows.len(),
                widths: rows.iter().map(Vec::len).collect(),
                size: n,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::Closure {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
                table.push(value as u32);
            }
        }
        Ok(FiniteSemigroup {
            labels,
            lookup,
            table,
        })
    }

    /// Caller guarantees closure and distinct labels.
    pub(crate) fn from_parts_unchecked(labels: Vec<String>, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), labels.len() * labels.len());
        let lookup = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        FiniteSemigroup {
            labels,
            lookup,
            table,
        }
    }

    /// One element whose square is itself.
    pub fn trivial(label: &str) -> Result<Self> {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(Self::from_parts_unchecked(vec![label.to_owned()], vec![0]))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn element(&self, index: usize) -> Element {
        Element {
            index,
            label: self.labels[index].clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    pub fn row(&self, a: usize) -> &[u32] {
        let n = self.len();
        &self.table[a * n..(a + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Copy of `self` with one table entry overwritten. Used to probe how
    /// sensitive the checkers are to single-entry corruption.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        let n = self.len();
        if value >= n {
            return Err(Error::Closure {
                row: a,
                col: b,
                value,
                size: n,
            });
        }
        let mut out = self.clone();
        out.table[a * n + b] = value as u32;
        Ok(out)
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut lookup = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if lookup.insert(l.clone(), i).is_some() {
            return Err(Error::LabelCollision(l.clone()));
        }
    }
    Ok(lookup)
}

/// Growable table used by the adjunction operations and the iterated
/// builders. Rows are laid out with a fixed stride equal to the capacity so
/// that each adjunction only writes the new row and column.
pub(crate) struct Adjoiner {
    labels: Vec<String>,
    seen: HashSet<String>,
    table: Vec<u32>,
    stride: usize,
}

impl Adjoiner {
    pub(crate) fn new(base: &FiniteSemigroup, capacity: usize) -> Self {
        let n = base.len();
        let stride = capacity.max(n);
        let mut table = vec![0u32; stride * stride];
        for a in 0..n {
            table[a * stride..a * stride + n].copy_from_slice(base.row(a));
        }
        Adjoiner {
            labels: base.labels.clone(),
            seen: base.labels.iter().cloned().collect(),
            table,
            stride,
        }
    }

    fn claim(&mut self, label: &str) -> Result<usize> {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if self.seen.contains(label) {
            return Err(Error::LabelCollision(label.to_owned()));
        }
        let fresh = self.labels.len();
        if fresh >= self.stride {
            return Err(Error::SizeLimit {
                requested: fresh as u128 + 1,
                limit: self.stride,
            });
        }
        self.seen.insert(label.to_owned());
        self.labels.push(label.to_owned());
        Ok(fresh)
    }

    /// u*a = a*u = a for every old a, and u*u = u.
    pub(crate) fn push_identity(&mut self, label: &str) -> Result<()> {
        let u = self.claim(label)?;
        let s = self.stride;
        for a in 0..u {
            self.table[a * s + u] = a as u32;
            self.table[u * s + a] = a as u32;
        }
        self.table[u * s + u] = u as u32;
        Ok(())
    }

    /// v*a = a*v = v for every old a, and v*v = v.
    pub(crate) fn push_zero(&mut self, label: &str) -> Result<()> {
        let v = self.claim(label)?;
        let s = self.stride;
        for a in 0..v {
            self.table[a * s + v] = v as u32;
            self.table[v * s + a] = v as u32;
        }
        self.table[v * s + v] = v as u32;
        Ok(())
    }

    pub(crate) fn finish(self) -> FiniteSemigroup {
        let n = self.labels.len();
        let table = if n == self.stride {
            self.table
        } else {
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                t.extend_from_slice(&self.table[a * self.stride..a * self.stride + n]);
            }
            t
        };
        FiniteSemigroup::from_parts_unchecked(self.labels, table)
    }
}

/// I(S, u): `S` with a fresh element `u` acting as identity on everything.
///
/// Well defined even when `S` already has an identity; the old one stops
/// being an identity of the result.
pub fn adjoin_identity(s: &FiniteSemigroup, label: &str) -> Result<FiniteSemigroup> {
    adjoin_identity_with_limit(s, label, CarrierLimit::default())
}

pub fn adjoin_identity_with_limit(
    s: &FiniteSemigroup,
    label: &str,
    limit: CarrierLimit,
) -> Result<FiniteSemigroup> {
    let capacity = limit.admit(s.len() as u128 + 1)?;
    let mut adj = Adjoiner::new(s, capacity);
    adj.push_identity(label)?;
    Ok(adj.finish())
}

/// Z(S, v): `S` with a fresh element `v` absorbing everything.
pub fn adjoin_zero(s: &FiniteSemigroup, label: &str) -> Result<FiniteSemigroup> {
    adjoin_zero_with_limit(s, label, CarrierLimit::default())
}

pub fn adjoin_zero_with_limit(
    s: &FiniteSemigroup,
    label: &str,
    limit: CarrierLimit,
) -> Result<FiniteSemigroup> {
    let capacity = limit.admit(s.len() as u128 + 1)?;
    let mut adj = Adjoiner::new(s, capacity);
    adj.push_zero(label)?;
    Ok(adj.finish())
}

/// First triple (in lexicographic index order) on which associativity fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssocViolation {
    pub triple: (usize, usize, usize),
    /// Index of (a*b)*c.
    pub left: usize,
    /// Index of a*(b*c).
    pub right: usize,
}

impl fmt::Display for AssocViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple;
        write!(
            f,
            "associativity fails at ({a},{b},{c}): (a*b)*c = {} but a*(b*c) = {}",
            self.left, self.right
        )
    }
}

pub fn check_associative(s: &FiniteSemigroup) -> Check<AssocViolation> {
    check_associative_with(s, Exec::default())
}

pub fn check_associative_with(s: &FiniteSemigroup, exec: Exec) -> Check<AssocViolation> {
    let n = s.len();
    Check::from_violation(exec.find_map_first(n, |a| {
        for b in 0..n {
            let ab = s.product(a, b);
            for c in 0..n {
                let left = s.product(ab, c);
                let right = s.product(a, s.product(b, c));
                if left != right {
                    return Some(AssocViolation {
                        triple: (a, b, c),
                        left,
                        right,
                    });
                }
            }
        }
        None
    }))
}

/// First pair `(a, b)` with `a < b` and `a*b != b*a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutativityViolation {
    pub pair: (usize, usize),
}

impl fmt::Display for CommutativityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.pair;
        write!(f, "commutativity fails at ({a},{b})")
    }
}

pub fn check_abelian(s: &FiniteSemigroup) -> Check<CommutativityViolation> {
    check_abelian_with(s, Exec::default())
}

pub fn check_abelian_with(s: &FiniteSemigroup, exec: Exec) -> Check<CommutativityViolation> {
    let n = s.len();
    Check::from_violation(exec.find_map_first(n, |a| {
        (a + 1..n)
            .find(|&b| s.product(a, b) != s.product(b, a))
            .map(|b| CommutativityViolation { pair: (a, b) })
    }))
}

fn is_identity(s: &FiniteSemigroup, e: usize) -> bool {
    (0..s.len()).all(|a| s.product(e, a) == a && s.product(a, e) == a)
}

fn is_zero(s: &FiniteSemigroup, z: usize) -> bool {
    (0..s.len()).all(|a| s.product(z, a) == z && s.product(a, z) == z)
}

/// The identity of `s`, if any.
///
/// Every candidate is scanned. Two distinct witnesses cannot occur in a
/// well-formed table (e = e*e' = e'), so finding them is reported as an
/// error rather than picking one.
pub fn find_identity(s: &FiniteSemigroup) -> Result<Option<Element>> {
    let mut found = (0..s.len()).filter(|&e| is_identity(s, e));
    match (found.next(), found.next()) {
        (Some(a), Some(b)) => Err(Error::MultipleIdentities(
            s.label(a).to_owned(),
            s.label(b).to_owned(),
        )),
        (first, _) => Ok(first.map(|e| s.element(e))),
    }
}

/// The zero (absorbing element) of `s`, if any. Same scan semantics as
/// [`find_identity`].
pub fn find_zero(s: &FiniteSemigroup) -> Result<Option<Element>> {
    let mut found = (0..s.len()).filter(|&z| is_zero(s, z));
    match (found.next(), found.next()) {
        (Some(a), Some(b)) => Err(Error::MultipleZeros(
            s.label(a).to_owned(),
            s.label(b).to_owned(),
        )),
        (first, _) => Ok(first.map(|z| s.element(z))),
    }
}

/// True iff `map` carries every product of `s` onto the matching product
/// of `t`: map(a*b) = map(a)*map(b).
///
/// `map` must be a bijection from the labels of `s` onto the labels of `t`.
pub fn equal_under_relabeling(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &BTreeMap<String, String>,
) -> Result<bool> {
    equal_under_relabeling_with(s, t, map, Exec::default())
}

pub fn equal_under_relabeling_with(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &BTreeMap<String, String>,
    exec: Exec,
) -> Result<bool> {
    let n = s.len();
    if n != t.len() {
        return Err(Error::NotBijection(format!(
            "carriers have {} and {} elements",
            n,
            t.len()
        )));
    }
    if map.len() != n {
        return Err(Error::NotBijection(format!(
            "map has {} entries for {} elements",
            map.len(),
            n
        )));
    }
    let mut forward = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for (from, to) in map {
        let a = s
            .index_of(from)
            .ok_or_else(|| Error::UnknownLabel(from.clone()))?;
        let b = t
            .index_of(to)
            .ok_or_else(|| Error::UnknownLabel(to.clone()))?;
        if hit[b] {
            return Err(Error::NotBijection(format!("`{to}` is hit twice")));
        }
        hit[b] = true;
        forward[a] = b;
    }
    let mismatch = exec.find_map_first(n, |a| {
        (0..n)
            .find(|&b| forward[s.product(a, b)] != t.product(forward[a], forward[b]))
            .map(|b| (a, b))
    });
    Ok(mismatch.is_none())
}

/// Identity label map on a shared carrier.
pub fn same_labels(s: &FiniteSemigroup) -> BTreeMap<String, String> {
    s.labels().iter().map(|l| (l.clone(), l.clone())).collect()
}
