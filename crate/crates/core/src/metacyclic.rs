//! Extensions of `Z_n` by `Z_2` given by `⟨z, x | z^n, x^2 = z^p, x^-1 z x = z^q⟩`,
//! and their enumeration up to isomorphism.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{build_extension, AutAction, Cocycle, ExtensionGroup, ExtensionSpec};
use crate::group::{ElementId, FiniteGroup};
use crate::iso::are_isomorphic;
use crate::smallgroups::{identify, StructureName};

/// Largest `n` accepted by [`enumerate_extensions`].
pub const MAX_ENUMERATION_N: u64 = 24;

/// `(n, p, q)` with `p` and `q` reduced mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MetacyclicParams {
    pub n: u64,
    pub p: u64,
    pub q: u64,
}

impl MetacyclicParams {
    /// Reduces `p` and `q` mod `n` (so `-1` means `n - 1`) and checks
    /// `q^2 = 1` and `p(q - 1) = 0` mod `n`.
    pub fn new(n: i64, p: i64, q: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
        }
        let params = MetacyclicParams {
            n: n as u64,
            p: p.rem_euclid(n) as u64,
            q: q.rem_euclid(n) as u64,
        };
        params.validate()?;
        Ok(params)
    }

    fn validate(&self) -> Result<()> {
        let MetacyclicParams { n, p, q } = *self;
        let fail = |congruence: String| Error::PresentationInconsistent { n, p, q, congruence };
        if (q * q) % n != 1 % n {
            return Err(fail(format!("q^2 = {} is not 1 mod {n}", q * q)));
        }
        let lhs = (p * ((q + n - 1) % n)) % n;
        if lhs != 0 {
            return Err(fail(format!("p(q-1) = {} is not 0 mod {n}", p * ((q + n - 1) % n))));
        }
        Ok(())
    }

    /// Every consistent `(p, q)` for this `n`, in lexicographic order.
    pub fn all(n: u64) -> Vec<MetacyclicParams> {
        (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .filter_map(|(p, q)| MetacyclicParams::new(n as i64, p as i64, q as i64).ok())
            .collect()
    }
}

impl fmt::Display for MetacyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.p, self.q)
    }
}

impl FromStr for MetacyclicParams {
    type Err = Error;

    /// Parses `"n,p,q"`; negative `p` and `q` are read mod `n`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, q] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected n,p,q, got {s:?}")));
        };
        let num = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        };
        MetacyclicParams::new(num(n)?, num(p)?, num(q)?)
    }
}

/// Builds the extension of `Z_n` by `Z_2 = {e, u}` with `φ_u(z) = z^q` and
/// `ζ(u, u) = z^p`. The element `z^i x^j` is the pair `(i, j)`.
pub fn metacyclic(params: MetacyclicParams) -> Result<ExtensionGroup> {
    params.validate()?;
    let n = params.n as usize;
    let zn = FiniteGroup::cyclic(n);
    let z2 = FiniteGroup::cyclic(2).with_labels(vec!["e".into(), "u".into()])?;
    let (p, q) = (params.p as usize, params.q as usize);
    let phi = AutAction::from_fn(&zn, &z2, |k, a| {
        if k.0 == 1 {
            ElementId(a.0 * q % n)
        } else {
            a
        }
    });
    let zeta = Cocycle::from_fn(&z2, |a, b| {
        if a.0 == 1 && b.0 == 1 {
            ElementId(p)
        } else {
            ElementId(0)
        }
    });
    build_extension(ExtensionSpec::new(zn, z2, phi, zeta))
}

/// One isomorphism class of metacyclic extensions for a fixed `n`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionClass {
    pub name: StructureName,
    /// Smallest `(p, q)` in the class.
    pub representative: MetacyclicParams,
    pub members: Vec<MetacyclicParams>,
}

impl ExtensionClass {
    pub fn contains(&self, p: u64, q: u64) -> bool {
        self.members.iter().any(|m| m.p == p && m.q == q)
    }
}

/// All extensions of `Z_n` by `Z_2`, grouped into isomorphism classes and
/// sorted by name, then by representative.
pub fn enumerate_extensions(n: u64) -> Result<Vec<ExtensionClass>> {
    if !(2..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "n must lie in 2..={MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let mut classes: Vec<(FiniteGroup, ExtensionClass)> = Vec::new();
    for params in MetacyclicParams::all(n) {
        let g = metacyclic(params)?.group;
        match classes.iter_mut().find(|(h, _)| are_isomorphic(&g, h).is_some()) {
            Some((_, class)) => class.members.push(params),
            None => {
                let name = identify(&g)?;
                classes.push((
                    g,
                    ExtensionClass {
                        name,
                        representative: params,
                        members: vec![params],
                    },
                ));
            }
        }
    }
    let mut out: Vec<ExtensionClass> = classes.into_iter().map(|(_, c)| c).collect();
    out.sort_by(|a, b| {
        (a.name.to_string(), a.representative).cmp(&(b.name.to_string(), b.representative))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: i64, p: i64, q: i64) -> MetacyclicParams {
        MetacyclicParams::new(n, p, q).unwrap()
    }

    #[test]
    fn negative_entries_wrap() {
        assert_eq!(params(12, 6, -1), MetacyclicParams { n: 12, p: 6, q: 11 });
        assert_eq!("4,2,-1".parse::<MetacyclicParams>().unwrap(), params(4, 2, 3));
    }

    #[test]
    fn inconsistent_presentation_names_the_congruence() {
        let err = MetacyclicParams::new(12, 1, 5).unwrap_err();
        match err {
            Error::PresentationInconsistent { congruence, .. } => {
                assert_eq!(congruence, "p(q-1) = 4 is not 0 mod 12")
            }
            other => panic!("unexpected {other}"),
        }
        assert!(matches!(
            MetacyclicParams::new(12, 0, 2),
            Err(Error::PresentationInconsistent { .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("4,2".parse::<MetacyclicParams>(), Err(Error::Parse(_))));
        assert!(matches!("4,a,1".parse::<MetacyclicParams>(), Err(Error::Parse(_))));
        assert!(matches!(MetacyclicParams::new(1, 0, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn quaternion_presentation() {
        let q8 = metacyclic(params(4, 2, 3)).unwrap().group;
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.involution_count(), 1);
        let x = q8.find_label("(0,u)").unwrap();
        assert_eq!(q8.element_order(x), 4);
    }

    #[test]
    fn product_matches_the_closed_form() {
        let (n, p, q) = (12usize, 6usize, 11usize);
        let g = metacyclic(params(12, 6, 11)).unwrap().group;
        for a in g.elements() {
            for b in g.elements() {
                let (i, j) = (a.0 % n, a.0 / n);
                let (i2, j2) = (b.0 % n, b.0 / n);
                let twist = if j == 1 { q * i2 } else { i2 };
                let extra = if j == 1 && j2 == 1 { p } else { 0 };
                let expected = ((j + j2) % 2) * n + (i + twist + extra) % n;
                assert_eq!(g.mul(a, b).0, expected);
            }
        }
    }

    #[test]
    fn odd_n_gives_cyclic_and_dihedral() {
        for n in [3u64, 5, 7, 9, 11] {
            let names: Vec<String> = enumerate_extensions(n)
                .unwrap()
                .iter()
                .map(|c| c.name.to_string())
                .collect();
            let dihedral = if n == 3 { "S3".to_string() } else { format!("D{}", 2 * n) };
            let mut expected = vec![dihedral, format!("Z{}", 2 * n)];
            expected.sort();
            assert_eq!(names, expected, "n = {n}");
        }
    }

    #[test]
    fn enumeration_bounds() {
        assert!(enumerate_extensions(1).is_err());
        assert!(enumerate_extensions(25).is_err());
    }
}
