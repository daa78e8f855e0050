//! Named actions: small extension groups with a fixed object labeling,
//! named generators, and optional reference listings to diff against.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{build_extension, section_cocycle, AutAction, Cocycle, ExtensionGroup, ExtensionSpec};
use crate::group::{ElementId, FiniteGroup};
use crate::metacyclic::{metacyclic, MetacyclicParams};
use crate::torsor::{
    anchor_bijection, verify_simply_transitive, AnchoredAction, Factor, ObjectLayout, ObjectSet,
    Permutation, ShapedObject, Side, TransitivityReport,
};

pub const PRESET_NAMES: [&str; 7] = [
    "dyads-z6",
    "dyads-s3",
    "t-i",
    "plr-right",
    "q8-dyads",
    "sl23",
    "d24-of-d12",
];

/// Reference images of named generators on one side.
#[derive(Clone, Debug)]
pub struct Golden {
    pub side: Side,
    pub images: Vec<(String, Permutation)>,
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub action: AnchoredAction,
    pub generators: Vec<(String, ElementId)>,
    pub golden: Option<Golden>,
    /// Set for presets built from `⟨z, x | z^n, x^2 = z^p, x^-1 z x = z^q⟩`.
    pub params: Option<MetacyclicParams>,
}

/// Looks up a preset by name. Besides [`PRESET_NAMES`], `metacyclic(n,p,q)`
/// gives roots `0..n-1` with shapes `+`, `-` and generators `T = (1,e)`,
/// `I = (0,u)`.
pub fn preset(name: &str) -> Result<Preset> {
    let name = name.trim();
    match name {
        "dyads-z6" => dyads(name, 1),
        "dyads-s3" => dyads(name, 2),
        "t-i" => t_i(),
        "plr-right" => plr_right(),
        "q8-dyads" => q8_dyads(),
        "sl23" => sl23(),
        "d24-of-d12" => d24_of_d12(),
        _ => {
            let inner = name
                .strip_prefix("metacyclic(")
                .and_then(|s| s.strip_suffix(')'))
                .or_else(|| name.strip_prefix("metacyclic:"))
                .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
            let params: MetacyclicParams = inner.parse()?;
            metacyclic_preset(&format!("metacyclic({params})"), params)
        }
    }
}

impl Preset {
    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn ext(&self) -> &ExtensionGroup {
        &self.action.ext
    }

    pub fn generator(&self, name: &str) -> Option<ElementId> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, g)| g)
    }

    /// Resolves an element name: `e`, a generator, a group label such as
    /// `(4,u)`, `Tk` / `Ik` on metacyclic presets, or a product of these
    /// joined by `.` or `*` with optional integer powers (`R.S^-1`, `RS^2`).
    pub fn element(&self, s: &str) -> Result<ElementId> {
        let s = s.trim();
        if let Some(g) = self.atom(s) {
            return Ok(g);
        }
        let grp = self.group();
        let mut acc = grp.identity();
        let tokens: Vec<&str> = s.split(['.', '*', ' ']).filter(|t| !t.is_empty()).collect();
        if tokens.is_empty() {
            return Err(Error::UnknownElement(s.to_string()));
        }
        for token in tokens {
            acc = grp.mul(acc, self.power_run(token).ok_or_else(|| Error::UnknownElement(s.to_string()))?);
        }
        Ok(acc)
    }

    fn atom(&self, s: &str) -> Option<ElementId> {
        let grp = self.group();
        if s == "e" || s == "1" || s == "id" {
            return Some(grp.identity());
        }
        if let Some(g) = self.generator(s) {
            return Some(g);
        }
        if let Some(g) = grp.find_label(s) {
            return Some(g);
        }
        let params = self.params?;
        let (kind, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let k: i64 = rest.parse().ok()?;
        let i = ElementId(k.rem_euclid(params.n as i64) as usize);
        match kind {
            "T" => Some(self.ext().element(i, ElementId(0))),
            "I" => Some(self.ext().element(i, ElementId(1))),
            _ => None,
        }
    }

    /// A token like `R`, `S^-1`, `RS` or `RS^2` (the power binds to the
    /// last letter).
    fn power_run(&self, token: &str) -> Option<ElementId> {
        let grp = self.group();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().ok()?),
            None => (token, 1),
        };
        if let Some(g) = self.atom(base) {
            return Some(grp.pow(g, exp));
        }
        let mut acc = grp.identity();
        let letters: Vec<char> = base.chars().collect();
        for (i, c) in letters.iter().enumerate() {
            let g = self.generator(&c.to_string())?;
            let e = if i + 1 == letters.len() { exp } else { 1 };
            acc = grp.mul(acc, grp.pow(g, e));
        }
        Some(acc)
    }

    pub fn parse_object(&self, s: &str) -> Result<usize> {
        self.action.parse_object(s)
    }

    pub fn action_doc(&self, side: Side) -> ActionDoc {
        ActionDoc {
            objects: (0..self.action.degree()).map(|p| self.action.label(p)).collect(),
            anchor: self.action.label(self.action.anchor),
            side,
            generator_cycles: self
                .generators
                .iter()
                .map(|(n, g)| (n.clone(), self.action.format_cycles(*g, side)))
                .collect(),
        }
    }
}

/// Serialized action: objects, anchor and the cycles of each generator.
#[derive(Clone, Debug, Serialize)]
pub struct ActionDoc {
    pub objects: Vec<String>,
    pub anchor: String,
    pub side: Side,
    pub generator_cycles: BTreeMap<String, String>,
}

fn numbered_objects(first: usize, count: usize) -> ObjectSet {
    ObjectSet::numbered(first, count)
}

/// A golden permutation from a rule on `(root, shape)` with shape 0 = `+`.
fn rule(objects: &ObjectSet, f: impl Fn(i64, usize) -> (i64, usize)) -> Permutation {
    let n = objects.roots.len() as i64;
    let images = (0..objects.len())
        .map(|p| {
            let o = objects.object(p);
            let (r, s) = f(o.root as i64, o.shape);
            objects.index(ShapedObject {
                root: r.rem_euclid(n) as usize,
                shape: s,
            })
        })
        .collect();
    Permutation::new(images).expect("rule is a bijection")
}

fn listing(objects: &ObjectSet, cycles: &[&str]) -> Permutation {
    let parsed: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            c.split_whitespace()
                .map(|o| objects.parse(o).expect("listing uses known objects"))
                .collect()
        })
        .collect();
    Permutation::from_cycles(objects.len(), &parsed).expect("listing is a permutation")
}

fn metacyclic_preset(name: &str, params: MetacyclicParams) -> Result<Preset> {
    let ext = metacyclic(params)?;
    let objects = numbered_objects(0, params.n as usize);
    let layout = ObjectLayout::natural(&ext, Factor::Normal);
    let t = ext.element(ElementId(1 % params.n as usize), ElementId(0));
    let i = ext.element(ElementId(0), ElementId(1));
    let action = anchor_bijection(&ext, objects, layout, 0)?;
    Ok(Preset {
        name: name.to_string(),
        action,
        generators: vec![("T".into(), t), ("I".into(), i)],
        golden: None,
        params: Some(params),
    })
}

fn flip(s: usize) -> usize {
    1 - s
}

fn dyads(name: &str, q: i64) -> Result<Preset> {
    let mut p = metacyclic_preset(name, MetacyclicParams::new(3, 0, q)?)?;
    let objs = &p.action.objects;
    let t = rule(objs, |n, s| (n + 1, s));
    let i = if q == 1 {
        rule(objs, |n, s| (n, flip(s)))
    } else {
        rule(objs, |n, s| (-n, flip(s)))
    };
    p.golden = Some(Golden {
        side: Side::Left,
        images: vec![("T".into(), t), ("I".into(), i)],
    });
    Ok(p)
}

fn t_i() -> Result<Preset> {
    let mut p = metacyclic_preset("t-i", MetacyclicParams::new(12, 0, -1)?)?;
    let objs = &p.action.objects;
    p.golden = Some(Golden {
        side: Side::Left,
        images: vec![
            ("T".into(), rule(objs, |n, s| (n + 1, s))),
            ("I".into(), rule(objs, |n, s| (-n, flip(s)))),
        ],
    });
    Ok(p)
}

fn plr_right() -> Result<Preset> {
    let mut p = metacyclic_preset("plr-right", MetacyclicParams::new(12, 0, -1)?)?;
    let ext = p.ext().clone();
    let u = ElementId(1);
    p.generators = vec![
        ("P".into(), ext.element(ElementId(0), u)),
        ("L".into(), ext.element(ElementId(4), u)),
        ("R".into(), ext.element(ElementId(9), u)),
    ];
    let objs = &p.action.objects;
    let shift = |k: i64| move |n: i64, s: usize| (if s == 0 { n + k } else { n - k }, flip(s));
    p.golden = Some(Golden {
        side: Side::Right,
        images: vec![
            ("P".into(), rule(objs, shift(0))),
            ("L".into(), rule(objs, shift(4))),
            ("R".into(), rule(objs, shift(9))),
        ],
    });
    Ok(p)
}

fn q8_dyads() -> Result<Preset> {
    let mut p = metacyclic_preset("q8-dyads", MetacyclicParams::new(4, 2, -1)?)?;
    let objs = &p.action.objects;
    p.golden = Some(Golden {
        side: Side::Left,
        images: vec![
            ("T".into(), rule(objs, |n, s| (n + 1, s))),
            ("I".into(), rule(objs, |n, s| if s == 0 { (4 - n, 1) } else { (2 - n, 0) })),
        ],
    });
    Ok(p)
}

/// `A4` as permutations of four points, generated by `r = (1 2 3)` and
/// `s = (2 3 4)`, composed right to left. Elements are listed in the order
/// of [`A4_WORDS`] and labeled by those words.
pub fn a4() -> FiniteGroup {
    let compose = |a: &[usize; 4], b: &[usize; 4]| -> [usize; 4] { [a[b[0]], a[b[1]], a[b[2]], a[b[3]]] };
    let r = [1, 2, 0, 3];
    let s = [0, 2, 3, 1];
    let eval = |w: &str| {
        w.chars().fold([0, 1, 2, 3], |acc, c| compose(&acc, if c == 'r' { &r } else { &s }))
    };
    let perms: Vec<[usize; 4]> = A4_WORDS.iter().map(|w| eval(&expand_word(w))).collect();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab = compose(a, b);
                    perms.iter().position(|x| *x == ab).expect("A4 is closed")
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(table, Some(A4_WORDS.iter().map(|w| w.to_string()).collect()))
        .expect("A4 table is a group")
}

/// Element words of `A4` in `r` and `s`, in cocycle row order.
pub const A4_WORDS: [&str; 12] = [
    "1", "s", "s2", "r", "r2", "rs", "rs2", "sr", "sr2", "r2s", "s2r", "rs2r",
];

/// `"rs2r"` to `"rssr"`.
fn expand_word(w: &str) -> String {
    let mut out = String::new();
    let mut last = None;
    for c in w.chars() {
        match c.to_digit(10) {
            Some(k) if last.is_some() => {
                for _ in 1..k {
                    out.push(last.unwrap());
                }
            }
            Some(_) => {}
            None => {
                out.push(c);
                last = Some(c);
            }
        }
    }
    out
}

/// The `A4 × A4 -> Z2` data for the binary tetrahedral group as given,
/// rows and columns in [`A4_WORDS`] order, `1` for the nontrivial element.
/// It fails the cocycle identity; see [`binary_tetrahedral_cocycle`].
pub const BINARY_TETRAHEDRAL_RAW: [&str; 12] = [
    "000000000000",
    "000001101100",
    "000011000101",
    "000000111001",
    "001000011001",
    "000111101001",
    "000010100011",
    "011001111000",
    "011000001100",
    "010111111100",
    "010101111011",
    "001100110011",
];

/// Entries `(row, column)` of [`BINARY_TETRAHEDRAL_RAW`] whose flip turns
/// it into a cocycle. No single flip does.
pub const BINARY_TETRAHEDRAL_CORRECTIONS: [(usize, usize); 2] = [(4, 10), (4, 11)];

pub fn binary_tetrahedral_cocycle_raw() -> Cocycle {
    Cocycle::new(
        BINARY_TETRAHEDRAL_RAW
            .iter()
            .map(|row| row.bytes().map(|b| ElementId((b - b'0') as usize)).collect())
            .collect(),
    )
}

/// [`BINARY_TETRAHEDRAL_RAW`] with [`BINARY_TETRAHEDRAL_CORRECTIONS`] applied.
pub fn binary_tetrahedral_cocycle() -> Cocycle {
    let mut z = binary_tetrahedral_cocycle_raw();
    for (a, b) in BINARY_TETRAHEDRAL_CORRECTIONS {
        let (a, b) = (ElementId(a), ElementId(b));
        z.set(a, b, ElementId(1 - z.value(a, b).0));
    }
    z
}

/// `Z2 = {·, ↷}`.
pub fn shape_flip_group() -> FiniteGroup {
    FiniteGroup::cyclic(2)
        .with_labels(vec!["·".into(), "↷".into()])
        .expect("two labels")
}

/// Extension data of `Z2` by `A4` with trivial action and the given cocycle.
pub fn binary_tetrahedral_spec(zeta: Cocycle) -> ExtensionSpec {
    let (n, k) = (shape_flip_group(), a4());
    let phi = AutAction::trivial(&n, &k);
    ExtensionSpec::new(n, k, phi, zeta)
}

/// Root `i + 1` sits over this `A4` word.
const SL23_ROOT_WORDS: [&str; 12] = [
    "1", "r", "s2r", "rs2r", "r2s", "s", "rs", "r2", "sr2", "s2", "rs2", "sr",
];

const SL23_S: [&str; 8] = [
    "1+ 6+ 10+", "1- 6- 10-", "7+ 8- 9-", "7- 8+ 9+", "2+ 12+ 3+", "2- 12- 3-", "4+ 11+ 5-", "4- 11- 5+",
];

const SL23_R: [&str; 8] = [
    "1+ 2+ 8+", "1- 2- 8-", "10+ 11+ 12-", "10- 11- 12+", "6+ 7+ 5+", "6- 7- 5-", "3+ 4+ 9-", "3- 4- 9+",
];

fn sl23() -> Result<Preset> {
    let ext = build_extension(binary_tetrahedral_spec(binary_tetrahedral_cocycle()))?;
    let k = &ext.spec.quotient;
    let roots = SL23_ROOT_WORDS
        .iter()
        .map(|w| k.find_label(w).expect("A4 word"))
        .collect();
    let layout = ObjectLayout {
        root_factor: Factor::Quotient,
        roots,
        shapes: vec![ElementId(0), ElementId(1)],
    };
    let objects = numbered_objects(1, 12);
    let s = ext.element(ElementId(0), k.find_label("s").expect("s"));
    let r = ext.element(ElementId(0), k.find_label("r").expect("r"));
    let action = anchor_bijection(&ext, objects, layout, 0)?;
    let objs = &action.objects;
    let golden = Golden {
        side: Side::Left,
        images: vec![("S".into(), listing(objs, &SL23_S)), ("R".into(), listing(objs, &SL23_R))],
    };
    Ok(Preset {
        name: "sl23".into(),
        generators: vec![("S".into(), s), ("R".into(), r)],
        action,
        golden: Some(golden),
        params: None,
    })
}

const D24_S: [&str; 2] = [
    "1+ 2+ 3+ 4+ 5- 6- 1- 2- 3- 4- 5+ 6+",
    "7+ 8+ 9+ 10+ 11- 12+ 7- 8- 9- 10- 11+ 12-",
];

const D24_R: [&str; 12] = [
    "1+ 7+", "2+ 12+", "3+ 11+", "4+ 10+", "5+ 9+", "6+ 8+", "1- 7-", "2- 12-", "3- 11-", "4- 10-",
    "5- 9-", "6- 8-",
];

/// The dihedral group of order 24 as the maps `x ↦ ±x + b` of `Z12`, with
/// the rotation `a: x ↦ x + 1` and the reflection `b: x ↦ -x`.
pub fn dihedral24() -> (FiniteGroup, ElementId, ElementId) {
    let compose = |f: &(u8, u8), g: &(u8, u8)| ((f.0 * g.0) % 12, (f.0 * g.1 + f.1) % 12);
    let (g, elems) = FiniteGroup::from_generators((1u8, 0u8), &[(1, 1), (11, 0)], compose);
    let id = |x: (u8, u8)| ElementId(elems.iter().position(|&e| e == x).expect("generator"));
    (g, id((1, 1)), id((11, 0)))
}

/// Shortest words in `letters` for every element of `k`, ties broken
/// lexicographically in letter order.
fn shortest_words(k: &FiniteGroup, letters: &[(char, ElementId)]) -> Vec<String> {
    let mut words: Vec<Option<String>> = vec![None; k.order()];
    words[k.identity().0] = Some(String::new());
    let mut queue = VecDeque::from([k.identity()]);
    while let Some(x) = queue.pop_front() {
        for &(c, g) in letters {
            let y = k.mul(x, g);
            if words[y.0].is_none() {
                let mut w = words[x.0].clone().expect("visited");
                w.push(c);
                words[y.0] = Some(w);
                queue.push_back(y);
            }
        }
    }
    words.into_iter().map(|w| w.expect("letters generate")).collect()
}

/// `"rsss"` to `"rs3"`, and the empty word to `"1"`.
fn compress_word(w: &str) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let chars: Vec<char> = w.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut j = i;
        while j < chars.len() && chars[j] == chars[i] {
            j += 1;
        }
        out.push(chars[i]);
        if j - i > 1 {
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

/// The dihedral group of order 24 as an extension of its center by `D12`.
/// Each element of `D12` is lifted along its shortest word in `r < s`.
pub fn d24_over_d12() -> Result<ExtensionGroup> {
    let (g, a, b) = dihedral24();
    let center = g.center();
    let quotient = g.quotient(&center)?;
    let k = &quotient.group;
    let (s, r) = (quotient.coset_of[a.0], quotient.coset_of[b.0]);
    let words = shortest_words(k, &[('r', r), ('s', s)]);
    let section: Vec<ElementId> = words
        .iter()
        .map(|w| {
            w.chars()
                .fold(g.identity(), |acc, c| g.mul(acc, if c == 'r' { b } else { a }))
        })
        .collect();
    let mut spec = section_cocycle(&g, &center, &section)?;
    spec.normal = spec.normal.with_labels(vec!["·".into(), "↷".into()])?;
    spec.quotient = spec
        .quotient
        .with_labels(words.iter().map(|w| compress_word(w)).collect())?;
    build_extension(spec)
}

fn d24_of_d12() -> Result<Preset> {
    let ext = d24_over_d12()?;
    let k = &ext.spec.quotient;
    let s = k.find_label("s").expect("s");
    let r = k.find_label("r").expect("r");
    let mut roots: Vec<ElementId> = (0..6).map(|i| k.pow(s, i)).collect();
    roots.extend((0..6).map(|i| k.mul(k.pow(s, i), r)));
    let layout = ObjectLayout {
        root_factor: Factor::Quotient,
        roots,
        shapes: vec![ElementId(0), ElementId(1)],
    };
    let action = anchor_bijection(&ext, numbered_objects(1, 12), layout, 0)?;
    let objs = &action.objects;
    let golden = Golden {
        side: Side::Left,
        images: vec![("S".into(), listing(objs, &D24_S)), ("R".into(), listing(objs, &D24_R))],
    };
    Ok(Preset {
        name: "d24-of-d12".into(),
        generators: vec![
            ("S".into(), ext.element(ElementId(0), s)),
            ("R".into(), ext.element(ElementId(0), r)),
        ],
        action,
        golden: Some(golden),
        params: None,
    })
}

/// Sends an ordered pair of distinct residues mod 3 to its dyad: the root
/// is `z1` when `z2 - z1 = 1 (mod 3)` and `z2` otherwise; the shape is `+`
/// (index 0) exactly when the root is `z1`.
pub fn dyad_from_pitch_pair(z1: i64, z2: i64) -> Result<ShapedObject> {
    let (a, b) = (z1.rem_euclid(3), z2.rem_euclid(3));
    if a == b {
        return Err(Error::DegenerateDyad(a as u32));
    }
    let root = if (b - a).rem_euclid(3) == 1 { a } else { b };
    Ok(ShapedObject {
        root: root as usize,
        shape: if root == a { 0 } else { 1 },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub generator: String,
    pub object: String,
    pub computed: String,
    pub golden: String,
}

/// A [`TransitivityReport`] with generator names and object labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivitySummary {
    pub order: usize,
    pub truncated: bool,
    pub transitive: bool,
    pub simply_transitive: bool,
    pub stabilizer_witness: Option<LabeledWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledWitness {
    pub word: String,
    pub fixes: String,
    pub moves: String,
}

impl TransitivitySummary {
    pub fn new(report: &TransitivityReport, names: &[String], label: impl Fn(usize) -> String) -> Self {
        TransitivitySummary {
            order: report.order,
            truncated: report.truncated,
            transitive: report.transitive,
            simply_transitive: report.simply_transitive,
            stabilizer_witness: report.stabilizer_witness.as_ref().map(|w| LabeledWitness {
                word: format_word(&w.word, names),
                fixes: label(w.fixes),
                moves: label(w.moves),
            }),
        }
    }
}

/// `[0, 0, 1]` with names `S, R` to `"S^2·R"`.
pub fn format_word(word: &[usize], names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = &names[word[i]];
        parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name.clone() });
        i = j;
    }
    if parts.is_empty() {
        "e".into()
    } else {
        parts.join("·")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenDiff {
    pub preset: String,
    pub side: Side,
    pub mismatches: Vec<Mismatch>,
    pub computed: TransitivitySummary,
    pub golden: TransitivitySummary,
}

impl GoldenDiff {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares each golden generator's listing with the computed action on the
/// same side, object by object, and runs the simple transitivity check on
/// both sets of permutations.
pub fn verify_against_golden(p: &Preset) -> Result<GoldenDiff> {
    let golden = p
        .golden
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("preset {} has no golden data", p.name)))?;
    let a = &p.action;
    let label = |i: usize| a.label(i);
    let mut mismatches = Vec::new();
    let mut computed_perms = Vec::new();
    let mut names = Vec::new();
    for (name, expected) in &golden.images {
        let g = p.element(name)?;
        let perm = a.permutation(g, golden.side);
        for obj in 0..a.degree() {
            if perm.apply(obj) != expected.apply(obj) {
                mismatches.push(Mismatch {
                    generator: name.clone(),
                    object: label(obj),
                    computed: label(perm.apply(obj)),
                    golden: label(expected.apply(obj)),
                });
            }
        }
        computed_perms.push(perm);
        names.push(name.clone());
    }
    let golden_perms: Vec<Permutation> = golden.images.iter().map(|(_, q)| q.clone()).collect();
    let computed = verify_simply_transitive(a.degree(), &computed_perms)?;
    let golden_report = verify_simply_transitive(a.degree(), &golden_perms)?;
    Ok(GoldenDiff {
        preset: p.name.clone(),
        side: golden.side,
        mismatches,
        computed: TransitivitySummary::new(&computed, &names, label),
        golden: TransitivitySummary::new(&golden_report, &names, label),
    })
}

/// Object indices fixed by every permutation in `perms`.
pub fn common_fixed_points(perms: &[Permutation]) -> BTreeSet<usize> {
    let degree = perms.first().map_or(0, |p| p.degree());
    (0..degree)
        .filter(|&x| perms.iter().all(|p| p.apply(x) == x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::verify_cocycle;

    #[test]
    fn word_helpers() {
        assert_eq!(expand_word("rs2r"), "rssr");
        assert_eq!(expand_word("1"), "");
        assert_eq!(compress_word("rsss"), "rs3");
        assert_eq!(compress_word(""), "1");
        let names = vec!["S".to_string(), "R".to_string()];
        assert_eq!(format_word(&[0, 0, 1], &names), "S^2·R");
        assert_eq!(format_word(&[], &names), "e");
    }

    #[test]
    fn a4_relations() {
        let g = a4();
        let (r, s) = (g.find_label("r").unwrap(), g.find_label("s").unwrap());
        assert_eq!(g.element_order(r), 3);
        assert_eq!(g.element_order(s), 3);
        assert_eq!(g.element_order(g.mul(r, s)), 2);
        let rs = g.find_label("rs").unwrap();
        assert_eq!(g.mul(s, rs), g.find_label("r2").unwrap());
        let r2s2r = g.mul(g.mul(g.pow(r, 2), g.pow(s, 2)), r);
        assert_eq!(r2s2r, g.find_label("sr2").unwrap());
    }

    #[test]
    fn raw_data_is_not_a_cocycle_but_the_corrected_one_is() {
        let raw = verify_cocycle(&binary_tetrahedral_spec(binary_tetrahedral_cocycle_raw())).unwrap();
        assert_eq!(raw.len(), 78);
        let fixed = verify_cocycle(&binary_tetrahedral_spec(binary_tetrahedral_cocycle())).unwrap();
        assert!(fixed.is_empty());
    }

    #[test]
    fn dyad_map() {
        assert_eq!(dyad_from_pitch_pair(0, 1).unwrap(), ShapedObject { root: 0, shape: 0 });
        assert_eq!(dyad_from_pitch_pair(1, 0).unwrap(), ShapedObject { root: 0, shape: 1 });
        assert!(matches!(dyad_from_pitch_pair(2, 2), Err(Error::DegenerateDyad(2))));
    }

    #[test]
    fn element_names() {
        let p = preset("t-i").unwrap();
        assert_eq!(p.element("T3").unwrap(), p.element("T^3").unwrap());
        assert_eq!(p.element("I0").unwrap(), p.element("I").unwrap());
        assert_eq!(p.element("T.I").unwrap(), p.element("(1,u)").unwrap());
        assert_eq!(p.element("TI").unwrap(), p.element("I1").unwrap());
        assert_eq!(p.element("T^-1").unwrap(), p.element("T11").unwrap());
        assert!(p.element("X").is_err());
    }

    #[test]
    fn unknown_and_parametrized_presets() {
        assert!(matches!(preset("nope"), Err(Error::UnknownPreset(_))));
        let p = preset("metacyclic(8,4,7)").unwrap();
        assert_eq!(p.group().order(), 16);
        assert!(preset("metacyclic(12,1,5)").is_err());
    }
}
