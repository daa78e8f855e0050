//! Finite groups as explicit Cayley tables over densely indexed elements.
//!
//! Every construction in the crate (cyclic groups, extensions, quotients,
//! matrix and permutation groups generated by closure) ends up here, so the
//! table is validated once on the way in and treated as trusted afterwards.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{ValidationReport, Violation};

/// Index of an element inside a [`FiniteGroup`], dense in `[0, order)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Checks a raw Cayley table for the group axioms.
///
/// Returns `Err(MalformedTable)` when the array is not square or holds an
/// entry outside `[0, order)`; otherwise a report listing every failed
/// identity, inverse and associativity condition.
pub fn verify_group_axioms(table: &[Vec<usize>]) -> Result<ValidationReport> {
    let n = table.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "row {i} holds entry {bad}, outside [0, {n})"
            )));
        }
    }

    let mut report = ValidationReport::new();
    let identity = find_identity(table);
    match identity {
        None => report.push(Violation::NoIdentity),
        Some(e) => {
            for (a, row) in table.iter().enumerate() {
                if !(0..n).any(|b| row[b] == e && table[b][a] == e) {
                    report.push(Violation::Inverse { a });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    report.push(Violation::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(report)
}

fn find_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from a table, rejecting anything that fails
    /// [`verify_group_axioms`]. Missing labels default to the index.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let report = verify_group_axioms(&table)?;
        if !report.is_empty() {
            return Err(Error::NotAGroup(report));
        }
        let n = table.len();
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::SizeMismatch(format!(
                    "{} labels for a group of order {n}",
                    l.len()
                )))
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(Self::from_trusted(table.into_iter().flatten().collect(), n, labels))
    }

    /// Assembles a group from a flat table already known to be a group.
    pub(crate) fn from_trusted(table: Vec<usize>, order: usize, labels: Vec<String>) -> Self {
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] == a))
            .expect("trusted table has an identity");
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == identity)
                    .expect("trusted table has inverses")
            })
            .collect();
        FiniteGroup {
            order,
            table,
            identity,
            inverse,
            labels,
        }
    }

    /// Enumerates the closure of `gens` under `mul` and returns the
    /// resulting group together with the concrete element behind each id.
    /// The identity gets id 0; the rest follow breadth-first discovery.
    pub fn from_generators<T, F>(identity: T, gens: &[T], mul: F) -> (Self, Vec<T>)
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let x = mul(&elements[i], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&mul(a, b)]);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let group = Self::from_trusted(table, n, labels);
        (group, elements)
    }

    /// The cyclic group of order `n` on residues `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs positive order");
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        Self::from_trusted(table, n, (0..n).map(|i| i.to_string()).collect())
    }

    /// Direct product; the pair `(a, b)` has id `a * |right| + b`.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Self {
        let (n, m) = (left.order, right.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                let a = left.table[(x / m) * n + y / m];
                let b = right.table[(x % m) * m + y % m];
                table.push(a * m + b);
            }
        }
        let labels = (0..n * m)
            .map(|x| format!("({},{})", left.labels[x / m], right.labels[x % m]))
            .collect();
        Self::from_trusted(table, n * m, labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::SizeMismatch(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId(self.identity)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order).map(ElementId)
    }

    pub fn contains(&self, a: ElementId) -> bool {
        a.0 < self.order
    }

    pub fn check(&self, a: ElementId) -> Result<ElementId> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange(a.0, self.order))
        }
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.0 * self.order + b.0])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inverse[a.0])
    }

    /// `a^k`, negative exponents allowed.
    pub fn pow(&self, a: ElementId, k: i64) -> ElementId {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn conjugate(&self, g: ElementId, a: ElementId) -> ElementId {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId)
    }

    /// Rows of the Cayley table as plain indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Smallest `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: ElementId) -> usize {
        let mut k = 1;
        let mut x = a;
        while x.0 != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element orders of every element, sorted ascending.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn involution_count(&self) -> usize {
        self.elements().filter(|&a| self.element_order(a) == 2).count()
    }

    /// Closure of `gens` under products; always contains the identity.
    pub fn subgroup_generated(&self, gens: &[ElementId]) -> BTreeSet<ElementId> {
        self.closure_mask(gens)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| ElementId(i))
            .collect()
    }

    pub(crate) fn closure_mask(&self, gens: &[ElementId]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = ElementId(members[i]);
            for &g in gens {
                let y = self.mul(x, g).0;
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        mask
    }

    /// Whether a subset is closed under products and contains the identity.
    /// In a finite group that is enough to be a subgroup.
    pub fn is_subgroup(&self, set: &BTreeSet<ElementId>) -> bool {
        set.contains(&self.identity())
            && set.iter().all(|a| self.contains(*a))
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &BTreeSet<ElementId>) -> Result<bool> {
        if !self.is_subgroup(set) {
            return Err(Error::NotASubgroup);
        }
        Ok(self
            .elements()
            .all(|g| set.iter().all(|&a| set.contains(&self.conjugate(g, a)))))
    }

    pub fn center(&self) -> BTreeSet<ElementId> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// The subgroup on `set` as a standalone group. Element `i` of the result
    /// is the `i`-th smallest id of `set`; the returned vector is that
    /// embedding.
    pub fn subgroup(&self, set: &BTreeSet<ElementId>) -> Result<(FiniteGroup, Vec<ElementId>)> {
        if !self.is_subgroup(set) {
            return Err(Error::NotASubgroup);
        }
        let embed: Vec<ElementId> = set.iter().copied().collect();
        let pos: HashMap<ElementId, usize> = embed.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = embed.len();
        let table = embed
            .iter()
            .flat_map(|&a| embed.iter().map(move |&b| (a, b)))
            .map(|(a, b)| pos[&self.mul(a, b)])
            .collect();
        let labels = embed.iter().map(|&a| self.label(a).to_string()).collect();
        Ok((FiniteGroup::from_trusted(table, n, labels), embed))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their smallest
    /// member, so coset 0 is the subgroup itself.
    pub fn quotient(&self, normal: &BTreeSet<ElementId>) -> Result<Quotient> {
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut leaders = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = leaders.len();
            leaders.push(ElementId(g));
            for &n in normal {
                coset_of[self.mul(ElementId(g), n).0] = c;
            }
        }
        let m = leaders.len();
        let table = leaders
            .iter()
            .flat_map(|&a| leaders.iter().map(move |&b| (a, b)))
            .map(|(a, b)| coset_of[self.mul(a, b).0])
            .collect();
        let labels = leaders
            .iter()
            .map(|&a| format!("{}N", self.label(a)))
            .collect();
        Ok(Quotient {
            group: FiniteGroup::from_trusted(table, m, labels),
            coset_of: coset_of.into_iter().map(ElementId).collect(),
            leaders,
        })
    }

    pub fn to_doc(&self) -> GroupDoc {
        GroupDoc {
            order: self.order,
            identity: self.identity,
            labels: self.labels.clone(),
            table: self.table_rows(),
        }
    }

    pub fn from_doc(doc: &GroupDoc) -> Result<Self> {
        if doc.table.len() != doc.order {
            return Err(Error::MalformedTable(format!(
                "order {} but {} rows",
                doc.order,
                doc.table.len()
            )));
        }
        let labels = if doc.labels.is_empty() {
            None
        } else {
            Some(doc.labels.clone())
        };
        let g = FiniteGroup::from_table(doc.table.clone(), labels)?;
        if g.identity != doc.identity {
            return Err(Error::MalformedTable(format!(
                "declared identity {} but the table's identity is {}",
                doc.identity, g.identity
            )));
        }
        Ok(g)
    }
}

/// `G/N` together with the projection `G -> G/N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Image of each element of `G`.
    pub coset_of: Vec<ElementId>,
    /// Smallest member of each coset.
    pub leaders: Vec<ElementId>,
}

/// Serialized form of a group: `{order, identity, labels, table}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub identity: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}
