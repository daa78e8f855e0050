//! Isomorphism testing between small Cayley-table groups.
//!
//! Cheap invariants are compared first. When they agree, a greedily chosen
//! generating set of the source is mapped onto order-compatible targets by
//! backtracking; each partial assignment is extended over the subgroup it
//! generates and abandoned at the first conflict.

use std::fmt;

use serde::Serialize;

use crate::group::{ElementId, FiniteGroup};

/// Isomorphism invariants used as a pre-filter and as the name of groups
/// that match nothing in the catalog.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub center_size: usize,
    /// `(element order, how many elements have it)`, ascending.
    pub spectrum: Vec<(usize, usize)>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut spectrum: Vec<(usize, usize)> = Vec::new();
        for k in g.order_spectrum() {
            match spectrum.last_mut() {
                Some((o, c)) if *o == k => *c += 1,
                _ => spectrum.push((k, 1)),
            }
        }
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            center_size: g.center().len(),
            spectrum,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {}, {}, center {}, orders",
            self.order,
            if self.abelian { "abelian" } else { "non-abelian" },
            self.center_size
        )?;
        for (o, c) in &self.spectrum {
            write!(f, " {o}^{c}")?;
        }
        Ok(())
    }
}

/// A bijective homomorphism, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub images: Vec<ElementId>,
}

impl Isomorphism {
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.images[a.0]
    }

    /// Re-checks that the map is a bijective homomorphism `from -> to`.
    pub fn is_valid(&self, from: &FiniteGroup, to: &FiniteGroup) -> bool {
        if from.order() != to.order() || self.images.len() != from.order() {
            return false;
        }
        let mut hit = vec![false; to.order()];
        for &y in &self.images {
            if !to.contains(y) || hit[y.0] {
                return false;
            }
            hit[y.0] = true;
        }
        from.elements().all(|a| {
            from.elements()
                .all(|b| self.apply(from.mul(a, b)) == to.mul(self.apply(a), self.apply(b)))
        })
    }
}

/// Greedy small generating set: repeatedly add the element that enlarges
/// the generated subgroup the most (ties go to the smaller id).
pub fn generating_set(g: &FiniteGroup) -> Vec<ElementId> {
    let mut gens = Vec::new();
    let mut covered = g.closure_mask(&gens);
    while covered.iter().any(|&c| !c) {
        let mut best: Option<(usize, ElementId)> = None;
        for a in g.elements().filter(|a| !covered[a.0]) {
            let mut trial = gens.clone();
            trial.push(a);
            let size = g.closure_mask(&trial).iter().filter(|&&c| c).count();
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, a));
            }
        }
        let (_, a) = best.expect("uncovered element exists");
        gens.push(a);
        covered = g.closure_mask(&gens);
    }
    gens
}

/// Returns an isomorphism `g1 -> g2` when one exists.
pub fn are_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<Isomorphism> {
    if g1.order() != g2.order() || Fingerprint::of(g1) != Fingerprint::of(g2) {
        return None;
    }
    let gens = generating_set(g1);
    let orders2: Vec<usize> = g2.elements().map(|a| g2.element_order(a)).collect();
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&x| {
            let o = g1.element_order(x);
            g2.elements().filter(|b| orders2[b.0] == o).collect()
        })
        .collect();

    let mut targets = Vec::with_capacity(gens.len());
    let iso = search(g1, g2, &gens, &candidates, &mut targets)?;
    debug_assert!(iso.is_valid(g1, g2));
    iso.is_valid(g1, g2).then_some(iso)
}

fn search(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    targets: &mut Vec<ElementId>,
) -> Option<Isomorphism> {
    let depth = targets.len();
    if depth == gens.len() {
        let images = extend(g1, g2, gens, targets)?;
        let images: Vec<ElementId> = images.into_iter().map(|x| x.expect("generating set covers g1")).collect();
        let iso = Isomorphism { images };
        return iso.is_valid(g1, g2).then_some(iso);
    }
    for &t in &candidates[depth] {
        targets.push(t);
        if extend(g1, g2, &gens[..=depth], targets).is_some() {
            if let Some(iso) = search(g1, g2, gens, candidates, targets) {
                return Some(iso);
            }
        }
        targets.pop();
    }
    None
}

/// Extends `gens[i] -> targets[i]` to the subgroup generated by `gens`,
/// failing if the map is not well defined or not injective there. A
/// consistent extension is a homomorphism on that subgroup.
pub(crate) fn extend(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[ElementId],
    targets: &[ElementId],
) -> Option<Vec<Option<ElementId>>> {
    let mut image: Vec<Option<ElementId>> = vec![None; g1.order()];
    let mut used = vec![false; g2.order()];
    image[g1.identity().0] = Some(g2.identity());
    used[g2.identity().0] = true;
    let mut frontier = vec![g1.identity()];
    let mut i = 0;
    while i < frontier.len() {
        let x = frontier[i];
        let fx = image[x.0].expect("frontier elements are mapped");
        for (&s, &t) in gens.iter().zip(targets) {
            let y = g1.mul(x, s);
            let fy = g2.mul(fx, t);
            match image[y.0] {
                Some(prev) if prev != fy => return None,
                Some(_) => {}
                None => {
                    if used[fy.0] {
                        return None;
                    }
                    used[fy.0] = true;
                    image[y.0] = Some(fy);
                    frontier.push(y);
                }
            }
        }
        i += 1;
    }
    Some(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_is_isomorphic_to_itself() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(6), &FiniteGroup::cyclic(2));
        let iso = are_isomorphic(&g, &g).expect("reflexive");
        assert!(iso.is_valid(&g, &g));
    }

    #[test]
    fn coprime_product_is_cyclic() {
        let z6 = FiniteGroup::cyclic(6);
        let z3z2 = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(2));
        assert!(are_isomorphic(&z6, &z3z2).is_some());
        let z2z2 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(are_isomorphic(&FiniteGroup::cyclic(4), &z2z2).is_none());
    }

    #[test]
    fn generating_sets_generate() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2));
        let gens = generating_set(&g);
        assert_eq!(gens.len(), 2);
        assert_eq!(g.subgroup_generated(&gens).len(), 8);
        assert!(generating_set(&FiniteGroup::cyclic(1)).is_empty());
    }

    #[test]
    fn fingerprint_display() {
        let fp = Fingerprint::of(&FiniteGroup::cyclic(4));
        assert_eq!(fp.to_string(), "order 4, abelian, center 4, orders 1^1 2^1 4^2");
    }
}
