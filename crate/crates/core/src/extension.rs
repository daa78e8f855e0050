//! Group extensions `1 -> N -> G -> K -> 1` built from an action
//! `φ: K -> Aut(N)` and a normalized 2-cocycle `ζ: K × K -> N`.
//!
//! Elements of the extension are pairs `(n, k)` with product
//!
//! ```text
//! (n1, k1)·(n2, k2) = (n1 · φ_k1(n2) · ζ(k1, k2), k1 · k2)
//! ```
//!
//! The pair `(n, k)` gets id `k * |N| + n`. Nothing here assumes which of
//! the two factors plays the role of roots or shapes, so extensions of a
//! shape group by a base group use the same code.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, GroupDoc};
use crate::iso;
use crate::report::{ValidationReport, Violation};

/// `φ`: for each element of `K`, the image of every element of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutAction {
    map: Vec<Vec<ElementId>>,
}

impl AutAction {
    pub fn new(map: Vec<Vec<ElementId>>) -> Self {
        AutAction { map }
    }

    pub fn trivial(n: &FiniteGroup, k: &FiniteGroup) -> Self {
        Self::from_fn(n, k, |_, a| a)
    }

    pub fn from_fn(
        n: &FiniteGroup,
        k: &FiniteGroup,
        f: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> Self {
        let map = k
            .elements()
            .map(|kk| n.elements().map(|a| f(kk, a)).collect())
            .collect();
        AutAction { map }
    }

    #[inline]
    pub fn apply(&self, k: ElementId, a: ElementId) -> ElementId {
        self.map[k.0][a.0]
    }

    pub fn rows(&self) -> &[Vec<ElementId>] {
        &self.map
    }

    pub fn is_trivial(&self) -> bool {
        self.map
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, a)| a.0 == i))
    }
}

/// `ζ(k1, k2)` for every pair of elements of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    values: Vec<Vec<ElementId>>,
}

impl Cocycle {
    pub fn new(values: Vec<Vec<ElementId>>) -> Self {
        Cocycle { values }
    }

    pub fn trivial(n: &FiniteGroup, k: &FiniteGroup) -> Self {
        Self::from_fn(k, |_, _| n.identity())
    }

    pub fn from_fn(k: &FiniteGroup, f: impl Fn(ElementId, ElementId) -> ElementId) -> Self {
        let values = k
            .elements()
            .map(|a| k.elements().map(|b| f(a, b)).collect())
            .collect();
        Cocycle { values }
    }

    #[inline]
    pub fn value(&self, a: ElementId, b: ElementId) -> ElementId {
        self.values[a.0][b.0]
    }

    pub fn set(&mut self, a: ElementId, b: ElementId, v: ElementId) {
        self.values[a.0][b.0] = v;
    }

    pub fn rows(&self) -> &[Vec<ElementId>] {
        &self.values
    }

    pub fn is_trivial(&self, n: &FiniteGroup) -> bool {
        self.values.iter().flatten().all(|&v| v == n.identity())
    }
}

/// The data `(N, K, φ, ζ)` of an extension of `N` by `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub normal: FiniteGroup,
    pub quotient: FiniteGroup,
    pub phi: AutAction,
    pub zeta: Cocycle,
}

impl ExtensionSpec {
    pub fn new(normal: FiniteGroup, quotient: FiniteGroup, phi: AutAction, zeta: Cocycle) -> Self {
        ExtensionSpec {
            normal,
            quotient,
            phi,
            zeta,
        }
    }

    /// Direct product data: trivial action and trivial cocycle.
    pub fn direct(normal: FiniteGroup, quotient: FiniteGroup) -> Self {
        let phi = AutAction::trivial(&normal, &quotient);
        let zeta = Cocycle::trivial(&normal, &quotient);
        Self::new(normal, quotient, phi, zeta)
    }

    pub fn to_doc(&self) -> SpecDoc {
        SpecDoc {
            normal: self.normal.to_doc(),
            quotient: self.quotient.to_doc(),
            phi: ids_to_raw(self.phi.rows()),
            zeta: ids_to_raw(self.zeta.rows()),
        }
    }

    /// Reads a spec document. Shapes are validated here; algebraic
    /// conditions are left to [`verify_aut_action`] and [`verify_cocycle`].
    pub fn from_doc(doc: &SpecDoc) -> Result<Self> {
        let normal = FiniteGroup::from_doc(&doc.normal)?;
        let quotient = FiniteGroup::from_doc(&doc.quotient)?;
        let check = |rows: &[Vec<usize>], what: &str, width: usize, bound: usize| -> Result<()> {
            if rows.len() != quotient.order() || rows.iter().any(|r| r.len() != width) {
                return Err(Error::SizeMismatch(format!(
                    "{what} must be {} x {width}",
                    quotient.order()
                )));
            }
            if let Some(&bad) = rows.iter().flatten().find(|&&x| x >= bound) {
                return Err(Error::ElementOutOfRange(bad, bound));
            }
            Ok(())
        };
        check(&doc.phi, "phi", normal.order(), normal.order())?;
        check(&doc.zeta, "zeta", quotient.order(), normal.order())?;
        Ok(ExtensionSpec {
            phi: AutAction::new(raw_to_ids(&doc.phi)),
            zeta: Cocycle::new(raw_to_ids(&doc.zeta)),
            normal,
            quotient,
        })
    }
}

fn ids_to_raw(rows: &[Vec<ElementId>]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.iter().map(|a| a.0).collect()).collect()
}

fn raw_to_ids(rows: &[Vec<usize>]) -> Vec<Vec<ElementId>> {
    rows.iter()
        .map(|r| r.iter().copied().map(ElementId).collect())
        .collect()
}

/// Serialized extension data: `{N, K, phi, zeta}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    #[serde(rename = "N")]
    pub normal: GroupDoc,
    #[serde(rename = "K")]
    pub quotient: GroupDoc,
    /// `phi[k][n]`: image of `n` under the automorphism attached to `k`.
    pub phi: Vec<Vec<usize>>,
    /// `zeta[k1][k2]`: an element of `N`.
    pub zeta: Vec<Vec<usize>>,
}

/// Checks that `φ` is a homomorphism `K -> Aut(N)`, listing every witness.
pub fn verify_aut_action(
    n: &FiniteGroup,
    k: &FiniteGroup,
    phi: &AutAction,
) -> Result<ValidationReport> {
    if phi.map.len() != k.order() || phi.map.iter().any(|r| r.len() != n.order()) {
        return Err(Error::SizeMismatch(format!(
            "action must be {} x {}",
            k.order(),
            n.order()
        )));
    }
    if let Some(bad) = phi.map.iter().flatten().find(|a| !n.contains(**a)) {
        return Err(Error::ElementOutOfRange(bad.0, n.order()));
    }
    let mut report = ValidationReport::new();
    for kk in k.elements() {
        let mut seen = vec![false; n.order()];
        for a in n.elements() {
            let img = phi.apply(kk, a);
            if std::mem::replace(&mut seen[img.0], true) {
                report.push(Violation::NotAutomorphism { k: kk.0, a: a.0, b: a.0 });
            }
        }
        for a in n.elements() {
            for b in n.elements() {
                if phi.apply(kk, n.mul(a, b)) != n.mul(phi.apply(kk, a), phi.apply(kk, b)) {
                    report.push(Violation::NotAutomorphism { k: kk.0, a: a.0, b: b.0 });
                }
            }
        }
    }
    let e = k.identity();
    for a in n.elements() {
        if phi.apply(e, a) != a {
            report.push(Violation::ActionIdentity { a: a.0 });
        }
    }
    for k1 in k.elements() {
        for k2 in k.elements() {
            let k12 = k.mul(k1, k2);
            for a in n.elements() {
                if phi.apply(k12, a) != phi.apply(k1, phi.apply(k2, a)) {
                    report.push(Violation::ActionComposition { k1: k1.0, k2: k2.0, a: a.0 });
                }
            }
        }
    }
    Ok(report)
}

/// Checks normalization and the 2-cocycle identity
/// `ζ(g,h)·ζ(gh,k) = φ_g(ζ(h,k))·ζ(g,hk)` over all `|K|³` triples.
///
/// Because `φ` is a genuine homomorphism into `Aut(N)`, associativity of the
/// extension also needs every value of `ζ` to be central in `N`; for abelian
/// `N` that is automatic and the identity reduces to the additive form.
pub fn verify_cocycle(spec: &ExtensionSpec) -> Result<ValidationReport> {
    let (n, k) = (&spec.normal, &spec.quotient);
    let zeta = &spec.zeta;
    if zeta.values.len() != k.order() || zeta.values.iter().any(|r| r.len() != k.order()) {
        return Err(Error::SizeMismatch(format!(
            "cocycle must be {0} x {0}",
            k.order()
        )));
    }
    if let Some(bad) = zeta.values.iter().flatten().find(|a| !n.contains(**a)) {
        return Err(Error::ElementOutOfRange(bad.0, n.order()));
    }
    let mut report = ValidationReport::new();
    let e = k.identity();
    for a in k.elements() {
        if zeta.value(e, a) != n.identity() {
            report.push(Violation::Normalization { a: e.0, b: a.0 });
        }
        if a != e && zeta.value(a, e) != n.identity() {
            report.push(Violation::Normalization { a: a.0, b: e.0 });
        }
    }
    if !n.is_abelian() {
        let center = n.center();
        for g in k.elements() {
            for h in k.elements() {
                if !center.contains(&zeta.value(g, h)) {
                    report.push(Violation::NonCentralCocycle { g: g.0, h: h.0 });
                }
            }
        }
    }
    for g in k.elements() {
        for h in k.elements() {
            let gh = k.mul(g, h);
            for kk in k.elements() {
                let lhs = n.mul(zeta.value(g, h), zeta.value(gh, kk));
                let rhs = n.mul(spec.phi.apply(g, zeta.value(h, kk)), zeta.value(g, k.mul(h, kk)));
                if lhs != rhs {
                    report.push(Violation::CocycleIdentity { g: g.0, h: h.0, k: kk.0 });
                }
            }
        }
    }
    Ok(report)
}

/// An extension group together with its pair decomposition.
#[derive(Clone, Debug)]
pub struct ExtensionGroup {
    pub group: FiniteGroup,
    pub spec: ExtensionSpec,
}

impl ExtensionGroup {
    pub fn normal_order(&self) -> usize {
        self.spec.normal.order()
    }

    /// `(n, k)` for an element of the extension.
    pub fn pair_of(&self, g: ElementId) -> (ElementId, ElementId) {
        let m = self.normal_order();
        (ElementId(g.0 % m), ElementId(g.0 / m))
    }

    pub fn element(&self, n: ElementId, k: ElementId) -> ElementId {
        ElementId(k.0 * self.normal_order() + n.0)
    }

    /// `ψ1: N -> G`, `n ↦ (n, e_K)`.
    pub fn include(&self, n: ElementId) -> ElementId {
        self.element(n, self.spec.quotient.identity())
    }

    /// `ψ2: G -> K`, `(n, k) ↦ k`.
    pub fn project(&self, g: ElementId) -> ElementId {
        self.pair_of(g).1
    }

    /// The elements `(n, e_K)`.
    pub fn normal_subgroup(&self) -> BTreeSet<ElementId> {
        self.spec.normal.elements().map(|n| self.include(n)).collect()
    }
}

/// Builds the extension from verified data. Refuses to build when the action
/// or the cocycle fails verification.
pub fn build_extension(spec: ExtensionSpec) -> Result<ExtensionGroup> {
    let action = verify_aut_action(&spec.normal, &spec.quotient, &spec.phi)?;
    if !action.is_empty() {
        return Err(Error::InvalidAction(action));
    }
    let cocycle = verify_cocycle(&spec)?;
    if !cocycle.is_empty() {
        return Err(Error::InvalidCocycle(cocycle));
    }
    Ok(assemble(spec))
}

/// The pair product on `N × K`, without verifying `φ` or `ζ`.
///
/// The result is a multiplication table that may fail the group axioms;
/// use it to inspect data that [`build_extension`] would reject.
pub fn raw_product_table(spec: &ExtensionSpec) -> Vec<Vec<usize>> {
    let (n, k) = (&spec.normal, &spec.quotient);
    let m = n.order();
    let total = m * k.order();
    (0..total)
        .map(|x| {
            let (n1, k1) = (ElementId(x % m), ElementId(x / m));
            (0..total)
                .map(|y| {
                    let (n2, k2) = (ElementId(y % m), ElementId(y / m));
                    let nn = n.mul(n.mul(n1, spec.phi.apply(k1, n2)), spec.zeta.value(k1, k2));
                    k.mul(k1, k2).0 * m + nn.0
                })
                .collect()
        })
        .collect()
}

fn assemble(spec: ExtensionSpec) -> ExtensionGroup {
    let (n, k) = (&spec.normal, &spec.quotient);
    let m = n.order();
    let total = m * k.order();
    let table = raw_product_table(&spec).into_iter().flatten().collect();
    let labels = (0..total)
        .map(|x| format!("({},{})", n.label(ElementId(x % m)), k.label(ElementId(x / m))))
        .collect();
    ExtensionGroup {
        group: FiniteGroup::from_trusted(table, total, labels),
        spec,
    }
}

/// Checks `1 -> N -> G -> K -> 1`: `ψ1` an injective homomorphism onto the
/// pairs `(n, e_K)`, `ψ2` a surjective homomorphism, and `Im ψ1 = Ker ψ2`.
pub fn check_short_exact(ext: &ExtensionGroup) -> ValidationReport {
    let (n, k, g) = (&ext.spec.normal, &ext.spec.quotient, &ext.group);
    let mut report = ValidationReport::new();
    let fail = |report: &mut ValidationReport, detail: String| {
        report.push(Violation::Exactness { detail })
    };

    let image: BTreeSet<ElementId> = n.elements().map(|a| ext.include(a)).collect();
    if image.len() != n.order() {
        fail(&mut report, "psi1 is not injective".into());
    }
    for a in n.elements() {
        for b in n.elements() {
            if ext.include(n.mul(a, b)) != g.mul(ext.include(a), ext.include(b)) {
                fail(&mut report, format!("psi1 is not a homomorphism at ({a}, {b})"));
            }
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            if ext.project(g.mul(x, y)) != k.mul(ext.project(x), ext.project(y)) {
                fail(&mut report, format!("psi2 is not a homomorphism at ({x}, {y})"));
            }
        }
    }
    let hit: BTreeSet<ElementId> = g.elements().map(|x| ext.project(x)).collect();
    if hit.len() != k.order() {
        fail(&mut report, "psi2 is not surjective".into());
    }
    let kernel: BTreeSet<ElementId> = g
        .elements()
        .filter(|&x| ext.project(x) == k.identity())
        .collect();
    if kernel != image {
        fail(&mut report, "Im psi1 != Ker psi2".into());
    }
    match g.is_normal(&image) {
        Ok(true) => {}
        _ => fail(&mut report, "Im psi1 is not a normal subgroup".into()),
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionKind {
    Direct,
    SplitSemidirect,
    NonSplit,
}

/// Direct when `φ` and `ζ` are both trivial; otherwise split exactly when a
/// homomorphic section `χ: K -> G` with `ψ2 ∘ χ = id` exists.
pub fn classify_extension(ext: &ExtensionGroup) -> ExtensionKind {
    let spec = &ext.spec;
    if spec.phi.is_trivial() && spec.zeta.is_trivial(&spec.normal) {
        return ExtensionKind::Direct;
    }
    if splitting_section(ext).is_some() {
        ExtensionKind::SplitSemidirect
    } else {
        ExtensionKind::NonSplit
    }
}

/// Exhaustive search for a homomorphic section of `ψ2`. Lifts of a
/// generating set of `K` range over their cosets; each choice is extended
/// to a homomorphism or discarded. Returns `χ(k)` for every `k`.
pub fn splitting_section(ext: &ExtensionGroup) -> Option<Vec<ElementId>> {
    let k = &ext.spec.quotient;
    let gens = iso::generating_set(k);
    let mut lifts = Vec::with_capacity(gens.len());
    search_section(ext, &gens, &mut lifts)
}

fn search_section(
    ext: &ExtensionGroup,
    gens: &[ElementId],
    lifts: &mut Vec<ElementId>,
) -> Option<Vec<ElementId>> {
    let k = &ext.spec.quotient;
    if lifts.len() == gens.len() {
        let chi = iso::extend(k, &ext.group, gens, lifts)?;
        return chi.into_iter().collect();
    }
    let target = gens[lifts.len()];
    for n in ext.spec.normal.elements() {
        lifts.push(ext.element(n, target));
        if iso::extend(k, &ext.group, &gens[..lifts.len()], lifts).is_some() {
            if let Some(chi) = search_section(ext, gens, lifts) {
                return Some(chi);
            }
        }
        lifts.pop();
    }
    None
}

/// Reads off `(φ, ζ)` from a group, a normal subgroup and a transversal.
///
/// `section[c]` must lie in coset `c` of `g.quotient(normal)` and
/// `section[0]` must be the identity. In the returned spec, element `i` of
/// `N` is the `i`-th smallest id of `normal` and `K` is that quotient.
pub fn section_cocycle(
    g: &FiniteGroup,
    normal: &BTreeSet<ElementId>,
    section: &[ElementId],
) -> Result<ExtensionSpec> {
    let quotient = g.quotient(normal)?;
    let k = quotient.group;
    let (n, embed) = g.subgroup(normal)?;
    if section.len() != k.order() {
        return Err(Error::NotATransversal(format!(
            "{} representatives for {} cosets",
            section.len(),
            k.order()
        )));
    }
    for (c, &s) in section.iter().enumerate() {
        g.check(s)?;
        if quotient.coset_of[s.0].0 != c {
            return Err(Error::NotATransversal(format!("{} is not in coset {c}", g.label(s))));
        }
    }
    if section[k.identity().0] != g.identity() {
        return Err(Error::NotATransversal(
            "the identity coset must be represented by the identity".into(),
        ));
    }
    let to_n = |x: ElementId| -> ElementId {
        ElementId(embed.binary_search(&x).expect("value lies in N"))
    };
    let phi = AutAction::from_fn(&n, &k, |kk, a| to_n(g.conjugate(section[kk.0], embed[a.0])));
    let zeta = Cocycle::from_fn(&k, |a, b| {
        let ab = k.mul(a, b);
        to_n(g.mul(g.mul(section[a.0], section[b.0]), g.inv(section[ab.0])))
    });
    let spec = ExtensionSpec::new(n, k, phi, zeta);
    let action = verify_aut_action(&spec.normal, &spec.quotient, &spec.phi)?;
    if !action.is_empty() {
        return Err(Error::InvalidAction(action));
    }
    let cocycle = verify_cocycle(&spec)?;
    if !cocycle.is_empty() {
        return Err(Error::InvalidCocycle(cocycle));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::verify_group_axioms;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    fn inversion(n: usize) -> ExtensionSpec {
        let (zn, z2) = (z(n), z(2));
        let phi = AutAction::from_fn(&zn, &z2, |k, a| if k.0 == 1 { zn.inv(a) } else { a });
        let zeta = Cocycle::trivial(&zn, &z2);
        ExtensionSpec::new(zn, z2, phi, zeta)
    }

    #[test]
    fn trivial_action_is_an_action() {
        let report = verify_aut_action(&z(5), &z(3), &AutAction::trivial(&z(5), &z(3))).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn inversion_is_an_action() {
        let spec = inversion(12);
        assert!(verify_aut_action(&spec.normal, &spec.quotient, &spec.phi)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn translation_is_not_an_automorphism() {
        let (z12, z2) = (z(12), z(2));
        let phi = AutAction::from_fn(&z12, &z2, |k, a| ElementId((a.0 + k.0) % 12));
        let report = verify_aut_action(&z12, &z2, &phi).unwrap();
        assert!(report
            .violations
            .contains(&Violation::NotAutomorphism { k: 1, a: 0, b: 0 }));
    }

    #[test]
    fn malformed_action_is_an_error() {
        let phi = AutAction::new(vec![vec![ElementId(0)]]);
        assert!(matches!(
            verify_aut_action(&z(2), &z(2), &phi),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn unnormalized_cocycle_is_reported() {
        let mut spec = ExtensionSpec::direct(z(3), z(2));
        spec.zeta.set(ElementId(0), ElementId(1), ElementId(1));
        let report = verify_cocycle(&spec).unwrap();
        assert!(report
            .violations
            .contains(&Violation::Normalization { a: 0, b: 1 }));
        assert!(matches!(build_extension(spec), Err(Error::InvalidCocycle(_))));
    }

    #[test]
    fn builds_z6_and_dihedral_24() {
        let z6 = build_extension(ExtensionSpec::direct(z(3), z(2))).unwrap();
        assert!(crate::iso::are_isomorphic(&z6.group, &z(6)).is_some());
        assert_eq!(classify_extension(&z6), ExtensionKind::Direct);

        let d24 = build_extension(inversion(12)).unwrap();
        assert!(verify_group_axioms(&d24.group.table_rows()).unwrap().is_empty());
        assert_eq!(d24.group.center().len(), 2);
        assert_eq!(classify_extension(&d24), ExtensionKind::SplitSemidirect);
        assert!(check_short_exact(&d24).is_empty());
    }

    #[test]
    fn quaternion_extension_does_not_split() {
        let mut spec = inversion(4);
        spec.zeta.set(ElementId(1), ElementId(1), ElementId(2));
        let q8 = build_extension(spec).unwrap();
        assert_eq!(q8.group.involution_count(), 1);
        assert_eq!(classify_extension(&q8), ExtensionKind::NonSplit);
        assert!(check_short_exact(&q8).is_empty());
    }

    #[test]
    fn section_of_q8_recovers_the_data() {
        let mut spec = inversion(4);
        spec.zeta.set(ElementId(1), ElementId(1), ElementId(2));
        let q8 = build_extension(spec.clone()).unwrap();
        let normal = q8.normal_subgroup();
        let section = [q8.group.identity(), q8.element(ElementId(0), ElementId(1))];
        let back = section_cocycle(&q8.group, &normal, &section).unwrap();
        assert_eq!(back.phi, spec.phi);
        assert_eq!(back.zeta, spec.zeta);
    }

    #[test]
    fn section_must_be_a_transversal() {
        let d = build_extension(inversion(3)).unwrap();
        let normal = d.normal_subgroup();
        let bad = [d.group.identity(), ElementId(1)];
        assert!(matches!(
            section_cocycle(&d.group, &normal, &bad),
            Err(Error::NotATransversal(_))
        ));
        let not_normal: BTreeSet<_> = [d.group.identity(), d.element(ElementId(0), ElementId(1))]
            .into_iter()
            .collect();
        assert!(matches!(
            section_cocycle(&d.group, &not_normal, &bad),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn doc_round_trip() {
        let spec = inversion(5);
        let back = ExtensionSpec::from_doc(&spec.to_doc()).unwrap();
        assert_eq!(back, spec);
    }
}
