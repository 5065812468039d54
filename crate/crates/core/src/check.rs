use std::fmt;

/// Outcome of a law checker: pass (optionally carrying a by-product) or the
/// first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<V, P = ()> {
    Pass(P),
    Fail(V),
}

impl<V, P> Check<V, P> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass(_))
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Check::Fail(v) => Some(v),
            Check::Pass(_) => None,
        }
    }

    pub fn passed(self) -> Option<P> {
        match self {
            Check::Pass(p) => Some(p),
            Check::Fail(_) => None,
        }
    }
}

impl<V> Check<V> {
    pub(crate) fn from_violation(v: Option<V>) -> Self {
        match v {
            Some(v) => Check::Fail(v),
            None => Check::Pass(()),
        }
    }
}

impl<V: fmt::Display, P> fmt::Display for Check<V, P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Pass(_) => f.write_str("pass"),
            Check::Fail(v) => write!(f, "fail: {v}"),
        }
    }
}
