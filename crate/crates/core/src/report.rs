use std::fmt;

use serde::Serialize;

/// One failed condition, with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// No element acts as a two-sided identity.
    NoIdentity,
    /// `(a·b)·c != a·(b·c)`.
    Associativity { a: usize, b: usize, c: usize },
    /// Element has no two-sided inverse.
    Inverse { a: usize },
    /// `φ_k(a·b) != φ_k(a)·φ_k(b)`, or `φ_k` is not a bijection (then `a == b`).
    NotAutomorphism { k: usize, a: usize, b: usize },
    /// `φ_e` moves `a`.
    ActionIdentity { a: usize },
    /// `φ_{k1·k2}(a) != φ_{k1}(φ_{k2}(a))`.
    ActionComposition { k1: usize, k2: usize, a: usize },
    /// `ζ(g,h)·ζ(gh,k) != φ_g(ζ(h,k))·ζ(g,hk)`.
    CocycleIdentity { g: usize, h: usize, k: usize },
    /// `ζ(g,h)` is not central in a non-abelian `N`.
    NonCentralCocycle { g: usize, h: usize },
    /// `ζ(a,b)` is not the identity although `a` or `b` is.
    Normalization { a: usize, b: usize },
    /// A short-exact-sequence condition failed.
    Exactness { detail: String },
    /// A group action law failed.
    ActionLaw { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoIdentity => write!(f, "no identity element"),
            Violation::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            Violation::Inverse { a } => write!(f, "element {a} has no inverse"),
            Violation::NotAutomorphism { k, a, b } => {
                write!(f, "phi[{k}] is not an automorphism at ({a}, {b})")
            }
            Violation::ActionIdentity { a } => write!(f, "phi[e] moves {a}"),
            Violation::ActionComposition { k1, k2, a } => {
                write!(f, "phi[{k1}*{k2}] != phi[{k1}] o phi[{k2}] at {a}")
            }
            Violation::CocycleIdentity { g, h, k } => {
                write!(f, "cocycle identity fails at ({g}, {h}, {k})")
            }
            Violation::NonCentralCocycle { g, h } => {
                write!(f, "zeta({g}, {h}) is not central in N")
            }
            Violation::Normalization { a, b } => {
                write!(f, "zeta({a}, {b}) is not the identity")
            }
            Violation::Exactness { detail } | Violation::ActionLaw { detail } => {
                write!(f, "{detail}")
            }
        }
    }
}

/// A list of violated conditions. Empty means everything checked holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(5) {
            write!(f, "; {v}")?;
        }
        if self.violations.len() > 5 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}
