//! Names for small groups, by isomorphism against a built-in catalog.
//!
//! Catalog entries are constructed from concrete models (residues, affine
//! maps of `Z_n`, 2×2 matrices over prime fields, direct products), never
//! from the `⟨z, x | z^n, x^2 = z^p, x^-1 z x = z^q⟩` presentations they are
//! later compared against.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{build_extension, AutAction, Cocycle, ExtensionSpec};
use crate::group::FiniteGroup;
use crate::iso::{are_isomorphic, Fingerprint};

/// Largest order [`identify`] accepts.
pub const MAX_IDENTIFY_ORDER: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", content = "data", rename_all = "kebab-case")]
pub enum StructureName {
    Cyclic(usize),
    /// Dihedral group of the given order (so `Dihedral(6)` is `S3`).
    Dihedral(usize),
    /// The quaternion group of order 8.
    Quaternion,
    /// Dicyclic (binary dihedral) group of the given order, at least 12.
    /// Order `2^k` members are the generalized quaternion groups and display
    /// as `Q{order}`. The catalog names orders 12, 20 and 24 as semidirect
    /// products instead.
    Dicyclic(usize),
    /// `⟨a, x | a^8, x^2, x a x = a^3⟩`.
    Quasidihedral(usize),
    /// `⟨a, x | a^8, x^2, x a x = a^5⟩`, also known as the modular group M16.
    Semidihedral(usize),
    DirectProduct(Vec<StructureName>),
    Semidirect {
        normal: Box<StructureName>,
        acting: Box<StructureName>,
    },
    Named(String),
    Unidentified(Fingerprint),
}

impl StructureName {
    pub fn is_identified(&self) -> bool {
        !matches!(self, StructureName::Unidentified(_))
    }

    fn product(parts: &[StructureName]) -> Self {
        StructureName::DirectProduct(parts.to_vec())
    }

    fn semidirect(normal: StructureName, acting: StructureName) -> Self {
        StructureName::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
        }
    }
}

impl fmt::Display for StructureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureName::Cyclic(n) => write!(f, "Z{n}"),
            StructureName::Dihedral(6) => write!(f, "S3"),
            StructureName::Dihedral(n) => write!(f, "D{n}"),
            StructureName::Quaternion => write!(f, "Q8"),
            StructureName::Dicyclic(n) if n.is_power_of_two() => write!(f, "Q{n}"),
            StructureName::Dicyclic(n) => write!(f, "Dic{n}"),
            StructureName::Quasidihedral(n) => write!(f, "QD{n}"),
            StructureName::Semidihedral(n) => write!(f, "SD{n}"),
            StructureName::DirectProduct(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            StructureName::Semidirect { normal, acting } => write!(f, "{normal} ⋊ {acting}"),
            StructureName::Named(s) => write!(f, "{s}"),
            StructureName::Unidentified(fp) => write!(f, "unidentified ({fp})"),
        }
    }
}

/// Names `g` by the first catalog entry isomorphic to it.
pub fn identify(g: &FiniteGroup) -> Result<StructureName> {
    if g.order() > MAX_IDENTIFY_ORDER {
        return Err(Error::UnsupportedOrder(g.order()));
    }
    Ok(catalog()
        .iter()
        .filter(|(_, h)| h.order() == g.order())
        .find(|(_, h)| are_isomorphic(g, h).is_some())
        .map(|(name, _)| name.clone())
        .unwrap_or_else(|| StructureName::Unidentified(Fingerprint::of(g))))
}

/// All named groups of order at most [`MAX_IDENTIFY_ORDER`], built once.
pub fn catalog() -> &'static [(StructureName, FiniteGroup)] {
    static CATALOG: OnceLock<Vec<(StructureName, FiniteGroup)>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

fn build_catalog() -> Vec<(StructureName, FiniteGroup)> {
    use StructureName as S;
    let mut out = Vec::new();
    for m in 1..=MAX_IDENTIFY_ORDER {
        out.push((S::Cyclic(m), FiniteGroup::cyclic(m)));
        if m % 4 == 0 {
            out.push((
                S::product(&[S::Cyclic(m / 2), S::Cyclic(2)]),
                FiniteGroup::direct_product(&FiniteGroup::cyclic(m / 2), &FiniteGroup::cyclic(2)),
            ));
        }
        if m % 2 == 0 && m >= 6 {
            out.push((S::Dihedral(m), dihedral(m)));
        }
        if m == 8 {
            out.push((S::Quaternion, dicyclic(8)));
        } else if m % 4 == 0 && m >= 12 {
            let name = match m {
                12 => S::semidirect(S::Cyclic(3), S::Cyclic(4)),
                20 => S::semidirect(S::Cyclic(5), S::Cyclic(4)),
                24 => S::semidirect(S::Cyclic(3), S::Quaternion),
                _ => S::Dicyclic(m),
            };
            out.push((name, dicyclic(m)));
        }
        if m == 16 {
            out.push((S::Quasidihedral(16), affine(8, 3)));
            out.push((S::Semidihedral(16), affine(8, 5)));
        }
        if m == 24 {
            out.push((S::product(&[S::Cyclic(4), S::Dihedral(6)]), product(&FiniteGroup::cyclic(4), &dihedral(6))));
            // D8 acts trivially here.
            out.push((S::semidirect(S::Cyclic(3), S::Dihedral(8)), product(&FiniteGroup::cyclic(3), &dihedral(8))));
            out.push((S::product(&[S::Cyclic(3), S::Quaternion]), product(&FiniteGroup::cyclic(3), &dicyclic(8))));
            out.push((S::semidirect(S::Cyclic(3), S::Cyclic(8)), z3_by_z8()));
            out.push((S::Named("SL(2,3)".into()), sl2_f3()));
        }
    }
    out
}

fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    FiniteGroup::direct_product(a, b)
}

/// Maps `x ↦ a·x + b` on `Z_n` with `a` in the cyclic group generated by
/// `multiplier`. Elements are `(a, b)`, composed as functions.
pub fn affine(n: u64, multiplier: u64) -> FiniteGroup {
    let compose = |f: &(u64, u64), g: &(u64, u64)| ((f.0 * g.0) % n, (f.0 * g.1 + f.1) % n);
    let (g, _) = FiniteGroup::from_generators((1, 0), &[(1, 1 % n), (multiplier % n, 0)], compose);
    g
}

pub fn dihedral(order: usize) -> FiniteGroup {
    let n = (order / 2) as u64;
    affine(n, n - 1)
}

type Mat2 = [u64; 4];

fn mat_mul(p: u64) -> impl Fn(&Mat2, &Mat2) -> Mat2 {
    move |a, b| {
        [
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ]
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Dicyclic group of order `4m` inside `SL(2, F_p)`, generated by
/// `diag(w, w^-1)` with `w` of order `2m` and `[[0, -1], [1, 0]]`.
pub fn dicyclic(order: usize) -> FiniteGroup {
    assert!(order.is_multiple_of(4) && order >= 8, "dicyclic order must be 4m with m >= 2");
    let two_m = (order / 2) as u64;
    let p = (two_m + 1..)
        .find(|&p| is_prime(p) && (p - 1) % two_m == 0)
        .expect("Dirichlet");
    let w = (2..p)
        .find(|&w| {
            pow_mod(w, two_m, p) == 1 && (1..two_m).all(|k| pow_mod(w, k, p) != 1)
        })
        .expect("cyclic multiplicative group");
    let w_inv = pow_mod(w, p - 2, p);
    let a = [w, 0, 0, w_inv];
    let x = [0, p - 1, 1, 0];
    let (g, _) = FiniteGroup::from_generators([1, 0, 0, 1], &[a, x], mat_mul(p));
    g
}

/// `SL(2, F_3)`, generated by the two elementary transvections.
pub fn sl2_f3() -> FiniteGroup {
    let (g, _) = FiniteGroup::from_generators([1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mat_mul(3));
    g
}

/// `Z3 ⋊ Z8` where a generator of `Z8` inverts `Z3`.
fn z3_by_z8() -> FiniteGroup {
    let (z3, z8) = (FiniteGroup::cyclic(3), FiniteGroup::cyclic(8));
    let phi = AutAction::from_fn(&z3, &z8, |k, a| if k.0 % 2 == 1 { z3.inv(a) } else { a });
    let zeta = Cocycle::trivial(&z3, &z8);
    build_extension(ExtensionSpec::new(z3.clone(), z8.clone(), phi, zeta))
        .expect("inversion action with trivial cocycle")
        .group
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_have_the_right_order() {
        assert_eq!(dicyclic(8).order(), 8);
        assert_eq!(dicyclic(8).involution_count(), 1);
        assert_eq!(dicyclic(24).order(), 24);
        assert_eq!(sl2_f3().order(), 24);
        assert_eq!(sl2_f3().involution_count(), 1);
        assert_eq!(affine(8, 3).order(), 16);
        assert_eq!(dihedral(24).center().len(), 2);
    }

    #[test]
    fn catalog_entries_of_equal_order_are_pairwise_distinct() {
        let cat = catalog();
        for (i, (n1, g1)) in cat.iter().enumerate() {
            for (n2, g2) in &cat[i + 1..] {
                if g1.order() == g2.order() {
                    assert!(are_isomorphic(g1, g2).is_none(), "{n1} ~ {n2}");
                }
            }
        }
    }

    #[test]
    fn identifies_cyclic_and_symmetric() {
        assert_eq!(identify(&FiniteGroup::cyclic(5)).unwrap(), StructureName::Cyclic(5));
        assert_eq!(identify(&dihedral(6)).unwrap().to_string(), "S3");
        assert!(matches!(
            identify(&FiniteGroup::cyclic(49)),
            Err(Error::UnsupportedOrder(49))
        ));
    }

    #[test]
    fn unnamed_groups_fall_back_to_fingerprints() {
        let z2 = FiniteGroup::cyclic(2);
        let v8 = FiniteGroup::direct_product(&FiniteGroup::direct_product(&z2, &z2), &z2);
        let name = identify(&v8).unwrap();
        assert!(!name.is_identified());
        assert!(name.to_string().starts_with("unidentified (order 8"));
    }

    #[test]
    fn display_forms() {
        use StructureName as S;
        assert_eq!(S::product(&[S::Cyclic(4), S::Dihedral(6)]).to_string(), "Z4 x S3");
        assert_eq!(S::semidirect(S::Cyclic(3), S::Cyclic(8)).to_string(), "Z3 ⋊ Z8");
        assert_eq!(S::Dicyclic(16).to_string(), "Q16");
        assert_eq!(S::Dicyclic(28).to_string(), "Dic28");
    }
}
