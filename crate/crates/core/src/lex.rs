//! Integer index tuples, their lexicographic order, and a desk-scale check
//! of the monomial-order conditions for that order on ℕ₀ⁿ.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::check::Check;
use crate::error::{Error, Result};

/// A point of ℤⁿ (`signed`) or ℕ₀ⁿ (unsigned).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntTuple {
    coords: Vec<i64>,
    signed: bool,
}

impl IntTuple {
    pub fn signed(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(IntTuple {
            coords,
            signed: true,
        })
    }

    pub fn unsigned(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroArity);
        }
        if let Some(&c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::NegativeCoordinate(c));
        }
        Ok(IntTuple {
            coords,
            signed: false,
        })
    }

    pub fn zero(arity: usize, signed: bool) -> Result<Self> {
        if signed {
            Self::signed(vec![0; arity])
        } else {
            Self::unsigned(vec![0; arity])
        }
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Reinterpret as an element of ℕ₀ⁿ.
    pub fn to_unsigned(&self) -> Result<Self> {
        Self::unsigned(self.coords.clone())
    }

    pub fn to_signed(&self) -> Self {
        IntTuple {
            coords: self.coords.clone(),
            signed: true,
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        if self.signed != other.signed {
            return Err(Error::SignednessMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses `(i1,i2,...,in)`. The result is signed; use
/// [`IntTuple::to_unsigned`] to restrict to ℕ₀ⁿ.
impl FromStr for IntTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseTuple(s.to_owned());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        IntTuple::signed(coords)
    }
}

/// Equal iff identical; otherwise decided by the first differing coordinate.
pub fn lex_compare(a: &IntTuple, b: &IntTuple) -> Result<Ordering> {
    a.compatible(b)?;
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| if x < y { Ordering::Less } else { Ordering::Greater }))
}

/// Coordinatewise sum with overflow reported as an error.
pub fn tuple_add(a: &IntTuple, b: &IntTuple) -> Result<IntTuple> {
    a.compatible(b)?;
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| x.checked_add(*y))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Overflow(a.to_string(), b.to_string()))?;
    Ok(IntTuple {
        coords,
        signed: a.signed,
    })
}

/// `a` when `a ≤ b` lexicographically, else `b`.
pub fn lex_min<'t>(a: &'t IntTuple, b: &'t IntTuple) -> Result<&'t IntTuple> {
    Ok(match lex_compare(a, b)? {
        Ordering::Greater => b,
        _ => a,
    })
}

/// First failure found by [`check_monomial_order_sample`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialViolation {
    /// `compare(a,b)` and `compare(b,a)` are not mirror images, or equality
    /// disagrees with coordinate identity.
    Totality(IntTuple, IntTuple),
    /// `a ≤ b` but `a + c > b + c`.
    Translation(IntTuple, IntTuple, IntTuple),
    /// A subset of the extra tuples whose minimum is missing or ambiguous.
    NoUniqueMinimum(Vec<IntTuple>),
    /// A sampled tuple lies strictly below the zero tuple.
    ZeroNotMinimal(IntTuple),
}

impl fmt::Display for MonomialViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialViolation::Totality(a, b) => write!(f, "totality/antisymmetry fails at {a}, {b}"),
            MonomialViolation::Translation(a, b, c) => {
                write!(f, "translation invariance fails at a={a}, b={b}, c={c}")
            }
            MonomialViolation::NoUniqueMinimum(s) => {
                let shown: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "no unique minimum in {{{}}}", shown.join(", "))
            }
            MonomialViolation::ZeroNotMinimal(t) => write!(f, "{t} lies below the zero tuple"),
        }
    }
}

/// Largest `extra` list whose subsets are enumerated exhaustively. Longer
/// lists are checked on all subsets of size at most 3 plus the full list.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 16;

/// Checks the finitely decidable consequences of "lex is a monomial order
/// on ℕ₀ⁿ" on the given samples:
///
/// 1. every sampled pair compares consistently in both directions and is
///    equal only when identical;
/// 2. `a ≤ b ⇒ a + c ≤ b + c` for every triple (and symmetrically for
///    `b ≤ a`);
/// 3. every nonempty subset of `extra` has exactly one least element;
/// 4. the zero tuple is at or below every sampled tuple.
///
/// Well-foundedness itself is not finitely decidable; these are necessary
/// conditions only.
pub fn check_monomial_order_sample(
    arity: usize,
    triples: &[(IntTuple, IntTuple, IntTuple)],
    extra: &[IntTuple],
) -> Result<Check<MonomialViolation>> {
    let all = triples
        .iter()
        .flat_map(|(a, b, c)| [a, b, c])
        .chain(extra.iter());
    for t in all.clone() {
        if t.arity() != arity {
            return Err(Error::ArityMismatch(arity, t.arity()));
        }
        if t.is_signed() {
            return Err(Error::SignedInput(t.to_string()));
        }
    }

    for (a, b, c) in triples {
        for (x, y) in [(a, b), (b, c), (a, c)] {
            let xy = lex_compare(x, y)?;
            let yx = lex_compare(y, x)?;
            if xy != yx.reverse() || (xy == Ordering::Equal) != (x.coords == y.coords) {
                return Ok(Check::Fail(MonomialViolation::Totality(x.clone(), y.clone())));
            }
        }
    }

    for (a, b, c) in triples {
        let (lo, hi) = match lex_compare(a, b)? {
            Ordering::Greater => (b, a),
            _ => (a, b),
        };
        if lex_compare(&tuple_add(lo, c)?, &tuple_add(hi, c)?)? == Ordering::Greater {
            return Ok(Check::Fail(MonomialViolation::Translation(
                lo.clone(),
                hi.clone(),
                c.clone(),
            )));
        }
    }

    for subset in subsets(extra.len()) {
        let members: Vec<&IntTuple> = subset.iter().map(|&i| &extra[i]).collect();
        if !has_unique_minimum(&members)? {
            return Ok(Check::Fail(MonomialViolation::NoUniqueMinimum(
                members.into_iter().cloned().collect(),
            )));
        }
    }

    let zero = IntTuple::zero(arity, false)?;
    for t in all {
        if lex_compare(&zero, t)? == Ordering::Greater {
            return Ok(Check::Fail(MonomialViolation::ZeroNotMinimal(t.clone())));
        }
    }
    Ok(Check::Pass(()))
}

fn has_unique_minimum(members: &[&IntTuple]) -> Result<bool> {
    let mut minima: Vec<&IntTuple> = Vec::new();
    for &m in members {
        let mut least = true;
        for &other in members {
            if lex_compare(m, other)? == Ordering::Greater {
                least = false;
                break;
            }
        }
        if least && !minima.contains(&m) {
            minima.push(m);
        }
    }
    Ok(minima.len() == 1)
}

fn subsets(n: usize) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if n <= EXHAUSTIVE_SUBSET_LIMIT {
        Box::new((1u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()))
    } else {
        let small = (0..n).flat_map(move |i| {
            std::iter::once(vec![i])
                .chain((i + 1..n).map(move |j| vec![i, j]))
                .chain((i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| vec![i, j, k])))
        });
        Box::new(small.chain(std::iter::once((0..n).collect())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> IntTuple {
        s.parse().unwrap()
    }

    fn u(s: &str) -> IntTuple {
        t(s).to_unsigned().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(lex_compare(&t("(1,2,3)"), &t("(1,2,3)")).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&t("(0,5)"), &t("(1,0)")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&t("(-3,7)"), &t("(-3,2)")).unwrap(), Ordering::Greater);
        assert_eq!(
            lex_compare(&t("(1,2)"), &t("(1,2,3)")),
            Err(Error::ArityMismatch(2, 3))
        );
        assert_eq!(
            lex_compare(&u("(1,2)"), &t("(1,2)")),
            Err(Error::SignednessMismatch)
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(tuple_add(&u("(0,0)"), &u("(4,9)")).unwrap(), u("(4,9)"));
        let s = tuple_add(&u("(1,2)"), &u("(3,4)")).unwrap();
        assert_eq!(s, u("(4,6)"));
        assert!(!s.is_signed());
        assert!(matches!(
            tuple_add(&t(&format!("({})", i64::MAX)), &t("(1)")),
            Err(Error::Overflow(..))
        ));
        assert_eq!(tuple_add(&t("(1)"), &t("(1,1)")), Err(Error::ArityMismatch(1, 2)));
    }

    #[test]
    fn min_examples() {
        let a = t("(2,2)");
        assert_eq!(lex_min(&a, &a).unwrap(), &a);
        assert_eq!(lex_min(&t("(0,9)"), &t("(1,0)")).unwrap(), &t("(0,9)"));
        for c in 0..3 {
            for i in 0..4 {
                for j in 0..4 {
                    let x = IntTuple::signed(vec![c, i]).unwrap();
                    let y = IntTuple::signed(vec![c, j]).unwrap();
                    assert_eq!(lex_min(&x, &y).unwrap().coords(), [c, i.min(j)]);
                }
            }
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(t("(1,-2,30)").coords(), [1, -2, 30]);
        assert_eq!(t("(1,-2,30)").to_string(), "(1,-2,30)");
        assert_eq!(t(" ( 4 , 5 ) ").to_string(), "(4,5)");
        for bad in ["", "()", "(1,,2)", "1,2", "(a)", "(1,2"] {
            assert!(bad.parse::<IntTuple>().is_err(), "{bad}");
        }
        assert_eq!(u("(1)").to_string(), "(1)");
        assert_eq!("(-1)".parse::<IntTuple>().unwrap().to_unsigned(), Err(Error::NegativeCoordinate(-1)));
    }

    #[test]
    fn monomial_examples() {
        let triple = (u("(0,1)"), u("(1,0)"), u("(2,2)"));
        assert!(check_monomial_order_sample(2, &[triple], &[]).unwrap().is_pass());
        let extra = [u("(0,0)"), u("(0,1)"), u("(1,0)")];
        assert!(check_monomial_order_sample(2, &[], &extra).unwrap().is_pass());
        // duplicates still have one minimum as a set
        let dup = [u("(1,1)"), u("(1,1)")];
        assert!(check_monomial_order_sample(2, &[], &dup).unwrap().is_pass());
    }

    #[test]
    fn monomial_rejects_signed_or_mismatched_input() {
        assert_eq!(
            check_monomial_order_sample(2, &[], &[t("(0,1)")]),
            Err(Error::SignedInput("(0,1)".into()))
        );
        assert_eq!(
            check_monomial_order_sample(3, &[], &[u("(0,1)")]),
            Err(Error::ArityMismatch(3, 2))
        );
    }

    #[test]
    fn large_extra_lists_use_bounded_subsets() {
        let extra: Vec<IntTuple> = (0..20)
            .map(|i| IntTuple::unsigned(vec![i % 5, 20 - i]).unwrap())
            .collect();
        assert!(check_monomial_order_sample(2, &[], &extra).unwrap().is_pass());
        assert_eq!(subsets(20).count(), 20 + 190 + 1140 + 1);
        assert_eq!(subsets(4).count(), 15);
    }

    #[test]
    fn unique_minimum_detects_ties() {
        let a = u("(1,2)");
        assert!(has_unique_minimum(&[&a, &a]).unwrap());
        let b = u("(0,3)");
        assert!(has_unique_minimum(&[&a, &b]).unwrap());
    }
}
