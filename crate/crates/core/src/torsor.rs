//! Shaped objects `z_h`, and the left and right actions an extension group
//! gets on them once an anchor object is chosen as the identity.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::ExtensionGroup;
use crate::group::{ElementId, FiniteGroup};
use crate::report::{ValidationReport, Violation};

/// Upper bound on the size of a permutation group closure.
pub const CLOSURE_LIMIT: usize = 500_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got {s:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A root and a shape, by position in an [`ObjectSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapedObject {
    pub root: usize,
    pub shape: usize,
}

/// All pairs of root labels and shape labels. Object `(root, shape)` has
/// index `root * |shapes| + shape`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectSet {
    pub roots: Vec<String>,
    pub shapes: Vec<String>,
}

impl ObjectSet {
    pub fn new(roots: Vec<String>, shapes: Vec<String>) -> Result<Self> {
        for (what, labels) in [("root", &roots), ("shape", &shapes)] {
            if labels.is_empty() {
                return Err(Error::InvalidArgument(format!("no {what} labels")));
            }
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(Error::InvalidArgument(format!("duplicate {what} label {l:?}")));
                }
            }
        }
        Ok(ObjectSet { roots, shapes })
    }

    /// Roots `first..first + count` as decimal labels, shapes `+` and `-`.
    pub fn numbered(first: usize, count: usize) -> Self {
        ObjectSet {
            roots: (first..first + count).map(|i| i.to_string()).collect(),
            shapes: vec!["+".into(), "-".into()],
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len() * self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, o: ShapedObject) -> usize {
        o.root * self.shapes.len() + o.shape
    }

    pub fn object(&self, index: usize) -> ShapedObject {
        ShapedObject {
            root: index / self.shapes.len(),
            shape: index % self.shapes.len(),
        }
    }

    pub fn label(&self, index: usize) -> String {
        let o = self.object(index);
        format!("{}{}", self.roots[o.root], self.shapes[o.shape])
    }

    /// Parses `"<root><shape>"`, e.g. `"4+"`. A Unicode minus is read as `-`.
    pub fn parse(&self, s: &str) -> Result<usize> {
        let s = s.trim().replace('\u{2212}', "-");
        for (j, shape) in self.shapes.iter().enumerate() {
            if let Some(root) = s.strip_suffix(shape.as_str()) {
                if let Some(i) = self.roots.iter().position(|r| r == root) {
                    return Ok(self.index(ShapedObject { root: i, shape: j }));
                }
            }
        }
        Err(Error::UnknownObject(s))
    }
}

/// Which factor of the extension carries the roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    Normal,
    Quotient,
}

/// How objects sit over pairs: root `i` is the factor element `roots[i]`,
/// shape `j` is the other factor's `shapes[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectLayout {
    pub root_factor: Factor,
    pub roots: Vec<ElementId>,
    pub shapes: Vec<ElementId>,
}

impl ObjectLayout {
    /// Roots and shapes in element-id order of their factors.
    pub fn natural(ext: &ExtensionGroup, root_factor: Factor) -> Self {
        let (n, k) = (&ext.spec.normal, &ext.spec.quotient);
        let (r, s) = match root_factor {
            Factor::Normal => (n, k),
            Factor::Quotient => (k, n),
        };
        ObjectLayout {
            root_factor,
            roots: r.elements().collect(),
            shapes: s.elements().collect(),
        }
    }

    fn factor_groups<'a>(&self, ext: &'a ExtensionGroup) -> (&'a FiniteGroup, &'a FiniteGroup) {
        let (n, k) = (&ext.spec.normal, &ext.spec.quotient);
        match self.root_factor {
            Factor::Normal => (n, k),
            Factor::Quotient => (k, n),
        }
    }

    fn pair(&self, ext: &ExtensionGroup, o: ShapedObject) -> ElementId {
        let (r, s) = (self.roots[o.root], self.shapes[o.shape]);
        match self.root_factor {
            Factor::Normal => ext.element(r, s),
            Factor::Quotient => ext.element(s, r),
        }
    }
}

/// A bijection on object indices; `self.0[p]` is the image of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Checks that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || hit[x] {
                return Err(Error::InvalidArgument(format!("not a permutation: {images:?}")));
            }
            hit[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::InvalidArgument(format!("point out of range in {cycle:?}")));
                }
                if images[x].replace(y).is_some() {
                    return Err(Error::InvalidArgument(format!("point {x} appears twice")));
                }
            }
        }
        Permutation::new(images.iter().enumerate().map(|(i, y)| y.unwrap_or(i)).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.after(&p);
            k += 1;
        }
        k
    }

    /// Disjoint cycles, each starting at its least point, sorted by that
    /// point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation `"(1+ 6+ 10+)(2+ 12+ 3+)"`, omitting fixed points.
    pub fn format_cycles(&self, label: impl Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.into_iter().map(&label).collect::<Vec<_>>().join(" ")))
            .collect();
        if parts.is_empty() {
            "()".into()
        } else {
            parts.concat()
        }
    }
}

/// An extension group acting on objects through `χ(p) = λ(p0)^-1 · λ(p)`,
/// where `λ` sends an object to its pair and `p0` is the anchor.
#[derive(Clone, Debug)]
pub struct AnchoredAction {
    pub ext: ExtensionGroup,
    pub objects: ObjectSet,
    pub layout: ObjectLayout,
    pub anchor: usize,
    chi: Vec<ElementId>,
    chi_inv: Vec<usize>,
}

/// Anchors `objects` at `anchor`. The layout must list every element of
/// both factors exactly once, in the same numbers as the object labels.
pub fn anchor_bijection(
    ext: &ExtensionGroup,
    objects: ObjectSet,
    layout: ObjectLayout,
    anchor: usize,
) -> Result<AnchoredAction> {
    let (rg, sg) = layout.factor_groups(ext);
    if objects.len() != ext.group.order() {
        return Err(Error::SizeMismatch(format!(
            "{} objects for a group of order {}",
            objects.len(),
            ext.group.order()
        )));
    }
    if objects.roots.len() != rg.order() || objects.shapes.len() != sg.order() {
        return Err(Error::SizeMismatch(format!(
            "{} roots and {} shapes against factors of order {} and {}",
            objects.roots.len(),
            objects.shapes.len(),
            rg.order(),
            sg.order()
        )));
    }
    for (what, list, g) in [("root", &layout.roots, rg), ("shape", &layout.shapes, sg)] {
        let mut hit = vec![false; g.order()];
        if list.len() != g.order() {
            return Err(Error::SizeMismatch(format!("{what} layout has {} entries", list.len())));
        }
        for &x in list {
            g.check(x)?;
            if std::mem::replace(&mut hit[x.0], true) {
                return Err(Error::InvalidArgument(format!("{what} layout repeats element {x}")));
            }
        }
    }
    if anchor >= objects.len() {
        return Err(Error::UnknownObject(anchor.to_string()));
    }
    let g = &ext.group;
    let lambda: Vec<ElementId> = (0..objects.len())
        .map(|i| layout.pair(ext, objects.object(i)))
        .collect();
    let base = g.inv(lambda[anchor]);
    let chi: Vec<ElementId> = lambda.iter().map(|&l| g.mul(base, l)).collect();
    let mut chi_inv = vec![0; chi.len()];
    for (p, &x) in chi.iter().enumerate() {
        chi_inv[x.0] = p;
    }
    Ok(AnchoredAction {
        ext: ext.clone(),
        objects,
        layout,
        anchor,
        chi,
        chi_inv,
    })
}

impl AnchoredAction {
    pub fn group(&self) -> &FiniteGroup {
        &self.ext.group
    }

    pub fn degree(&self) -> usize {
        self.chi.len()
    }

    /// The same objects and layout with a different anchor.
    pub fn reanchored(&self, anchor: usize) -> Result<AnchoredAction> {
        anchor_bijection(&self.ext, self.objects.clone(), self.layout.clone(), anchor)
    }

    pub fn chi(&self, p: usize) -> ElementId {
        self.chi[p]
    }

    pub fn object_of(&self, g: ElementId) -> usize {
        self.chi_inv[g.0]
    }

    pub fn label(&self, p: usize) -> String {
        self.objects.label(p)
    }

    pub fn parse_object(&self, s: &str) -> Result<usize> {
        self.objects.parse(s)
    }

    /// Left: `χ^-1(g · χ(p))`. Right: `χ^-1(χ(p) · g)`.
    pub fn act(&self, g: ElementId, p: usize, side: Side) -> usize {
        let grp = &self.ext.group;
        let x = match side {
            Side::Left => grp.mul(g, self.chi[p]),
            Side::Right => grp.mul(self.chi[p], g),
        };
        self.chi_inv[x.0]
    }

    /// The unique `g` with `act(g, p, side) = q`.
    pub fn interval(&self, p: usize, q: usize, side: Side) -> ElementId {
        let grp = &self.ext.group;
        let (x, y) = (self.chi[p], self.chi[q]);
        match side {
            Side::Left => grp.mul(y, grp.inv(x)),
            Side::Right => grp.mul(grp.inv(x), y),
        }
    }

    /// True when two objects with the same root and different shapes are
    /// sent to different roots.
    pub fn is_contextual(&self, g: ElementId, side: Side) -> bool {
        let shapes = self.objects.shapes.len();
        (0..self.objects.roots.len()).any(|root| {
            let images: Vec<usize> = (0..shapes)
                .map(|shape| {
                    let p = self.objects.index(ShapedObject { root, shape });
                    self.objects.object(self.act(g, p, side)).root
                })
                .collect();
            images.iter().any(|&r| r != images[0])
        })
    }

    pub fn permutation(&self, g: ElementId, side: Side) -> Permutation {
        Permutation((0..self.degree()).map(|p| self.act(g, p, side)).collect())
    }

    pub fn cycles(&self, g: ElementId, side: Side) -> Vec<Vec<usize>> {
        self.permutation(g, side).cycles()
    }

    pub fn format_cycles(&self, g: ElementId, side: Side) -> String {
        self.permutation(g, side).format_cycles(|p| self.label(p))
    }

    /// Exhaustive check of the action laws on `side`, and that the
    /// coordinate carried by the quotient factor moves by a homomorphism:
    /// its new value depends only on its old value and on `g`, and composes
    /// like the action does.
    pub fn check_action_laws(&self, side: Side) -> ValidationReport {
        let grp = &self.ext.group;
        let n = self.degree();
        let mut report = ValidationReport::new();
        let mut fail = |detail: String| report.push(Violation::ActionLaw { detail });
        let perms: Vec<Permutation> = grp.elements().map(|g| self.permutation(g, side)).collect();

        if !perms[grp.identity().0].is_identity() {
            fail(format!("the identity moves objects on the {side}"));
        }
        for a in grp.elements() {
            for b in grp.elements() {
                let (pa, pb) = (&perms[a.0], &perms[b.0]);
                let composed = match side {
                    Side::Left => pa.after(pb),
                    Side::Right => pb.after(pa),
                };
                if composed != perms[grp.mul(a, b).0] {
                    fail(format!(
                        "{side} action of {}*{} is not the composite",
                        grp.label(a),
                        grp.label(b)
                    ));
                }
            }
        }

        let coord = |p: usize| {
            let o = self.objects.object(p);
            match self.layout.root_factor {
                Factor::Normal => o.shape,
                Factor::Quotient => o.root,
            }
        };
        let values = match self.layout.root_factor {
            Factor::Normal => self.objects.shapes.len(),
            Factor::Quotient => self.objects.roots.len(),
        };
        let mut induced: Vec<Vec<usize>> = Vec::with_capacity(grp.order());
        for g in grp.elements() {
            let mut tau = vec![usize::MAX; values];
            for p in 0..n {
                let (c, c2) = (coord(p), coord(perms[g.0].apply(p)));
                if tau[c] == usize::MAX {
                    tau[c] = c2;
                } else if tau[c] != c2 {
                    fail(format!(
                        "{} changes the quotient coordinate of {} depending on the other coordinate",
                        grp.label(g),
                        self.label(p)
                    ));
                }
            }
            induced.push(tau);
        }
        for a in grp.elements() {
            for b in grp.elements() {
                let (ta, tb) = (&induced[a.0], &induced[b.0]);
                let tab = &induced[grp.mul(a, b).0];
                let ok = (0..values).all(|c| {
                    let step = match side {
                        Side::Left => tb.get(c).and_then(|&x| ta.get(x)),
                        Side::Right => ta.get(c).and_then(|&x| tb.get(x)),
                    };
                    step == tab.get(c)
                });
                if !ok {
                    fail(format!(
                        "quotient coordinate change is not multiplicative at ({}, {})",
                        grp.label(a),
                        grp.label(b)
                    ));
                }
            }
        }
        for x in self.ext.normal_subgroup() {
            if induced[x.0].iter().enumerate().any(|(c, &t)| c != t) {
                fail(format!(
                    "normal element {} changes the quotient coordinate",
                    grp.label(x)
                ));
            }
        }
        report
    }
}

/// A nontrivial element of a permutation group that fixes a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerWitness {
    /// Generator indices; the product applies the last one first.
    pub word: Vec<usize>,
    pub fixes: usize,
    pub moves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub degree: usize,
    /// Order of the generated group, or a lower bound when `truncated`.
    pub order: usize,
    pub truncated: bool,
    pub transitive: bool,
    pub simply_transitive: bool,
    pub stabilizer_witness: Option<StabilizerWitness>,
}

/// Closes `generators` under composition and reports whether the generated
/// group acts simply transitively on `0..degree`. Words are shortest in
/// breadth-first order, so the first witness found is a shortest one.
pub fn verify_simply_transitive(degree: usize, generators: &[Permutation]) -> Result<TransitivityReport> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::SizeMismatch(format!(
            "permutation of degree {} on {degree} points",
            g.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut words: HashMap<Permutation, Vec<usize>> = HashMap::from([(id.clone(), Vec::new())]);
    let mut queue = VecDeque::from([id]);
    let mut witness: Option<StabilizerWitness> = None;
    let mut truncated = false;
    while let Some(x) = queue.pop_front() {
        for (i, g) in generators.iter().enumerate() {
            let y = g.after(&x);
            if words.contains_key(&y) {
                continue;
            }
            if words.len() >= CLOSURE_LIMIT {
                truncated = true;
                break;
            }
            let mut word = vec![i];
            word.extend_from_slice(&words[&x]);
            if witness.is_none() && !y.is_identity() {
                let fixes = (0..degree).find(|&p| y.apply(p) == p);
                if let Some(fixes) = fixes {
                    let moves = (0..degree).find(|&p| y.apply(p) != p).expect("not the identity");
                    witness = Some(StabilizerWitness {
                        word: word.clone(),
                        fixes,
                        moves,
                    });
                }
            }
            words.insert(y.clone(), word);
            queue.push_back(y);
        }
        if truncated {
            break;
        }
    }
    let mut reached = vec![false; degree];
    if degree > 0 {
        reached[0] = true;
        for p in words.keys() {
            reached[p.apply(0)] = true;
        }
    }
    let transitive = reached.iter().all(|&r| r);
    let order = words.len();
    Ok(TransitivityReport {
        degree,
        order,
        truncated,
        transitive,
        simply_transitive: transitive && !truncated && order == degree && witness.is_none(),
        stabilizer_witness: witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metacyclic::{metacyclic, MetacyclicParams};

    fn t_i() -> AnchoredAction {
        let ext = metacyclic(MetacyclicParams::new(12, 0, 11).unwrap()).unwrap();
        let layout = ObjectLayout::natural(&ext, Factor::Normal);
        anchor_bijection(&ext, ObjectSet::numbered(0, 12), layout, 0).unwrap()
    }

    #[test]
    fn object_labels_round_trip() {
        let objs = ObjectSet::numbered(1, 12);
        for i in 0..objs.len() {
            assert_eq!(objs.parse(&objs.label(i)).unwrap(), i);
        }
        assert_eq!(objs.parse("9\u{2212}").unwrap(), objs.parse("9-").unwrap());
        assert!(matches!(objs.parse("13+"), Err(Error::UnknownObject(_))));
    }

    #[test]
    fn anchor_is_identity() {
        let a = t_i();
        assert_eq!(a.chi(a.anchor), a.group().identity());
        let b = a.reanchored(a.parse_object("3-").unwrap()).unwrap();
        assert_eq!(b.chi(b.anchor), b.group().identity());
        assert_ne!(a.chi(5), b.chi(5));
    }

    #[test]
    fn inversion_sends_three_major_to_nine_minor() {
        let a = t_i();
        let i0 = a.group().find_label("(0,u)").unwrap();
        let p = a.parse_object("3+").unwrap();
        assert_eq!(a.label(a.act(i0, p, Side::Left)), "9-");
    }

    #[test]
    fn intervals_round_trip() {
        let a = t_i();
        for side in [Side::Left, Side::Right] {
            for p in 0..24 {
                for q in 0..24 {
                    assert_eq!(a.act(a.interval(p, q, side), p, side), q);
                }
            }
        }
    }

    #[test]
    fn t_i_is_left_noncontextual() {
        let a = t_i();
        assert!(a.group().elements().all(|g| !a.is_contextual(g, Side::Left)));
        assert!(a.group().elements().any(|g| a.is_contextual(g, Side::Right)));
        assert!(a.check_action_laws(Side::Left).is_empty());
        assert!(a.check_action_laws(Side::Right).is_empty());
    }

    #[test]
    fn cycles_are_canonical() {
        let p = Permutation::new(vec![2, 0, 1, 3]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 2, 1], vec![3]]);
        assert_eq!(p.format_cycles(|i| i.to_string()), "(0 2 1)");
        assert_eq!(p.order(), 3);
        assert_eq!(p.after(&p.inverse()), Permutation::identity(4));
        assert_eq!(Permutation::from_cycles(4, &[vec![0, 2, 1]]).unwrap(), p);
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn transitivity_reports() {
        let id = Permutation::identity(24);
        let r = verify_simply_transitive(24, &[id]).unwrap();
        assert_eq!(r.order, 1);
        assert!(!r.transitive);

        let shift = Permutation((0..6).map(|i| (i + 1) % 6).collect());
        let r = verify_simply_transitive(6, std::slice::from_ref(&shift)).unwrap();
        assert!(r.simply_transitive);

        let swap = Permutation(vec![1, 0, 2, 3, 4, 5]);
        let r = verify_simply_transitive(6, &[shift, swap]).unwrap();
        assert_eq!(r.order, 720);
        assert!(!r.simply_transitive);
        let w = r.stabilizer_witness.unwrap();
        assert_ne!(w.fixes, w.moves);
    }
}
