use std::collections::BTreeSet;

use groupext::error::Error;
use groupext::extension::{
    build_extension, check_short_exact, classify_extension, section_cocycle, splitting_section,
    verify_cocycle, ExtensionKind, ExtensionSpec, SpecDoc,
};
use groupext::group::{ElementId, FiniteGroup};
use groupext::iso::are_isomorphic;
use groupext::metacyclic::{enumerate_extensions, metacyclic, MetacyclicParams};
use groupext::presets::{binary_tetrahedral_cocycle_raw, binary_tetrahedral_spec, dihedral24, preset};
use groupext::smallgroups::{dicyclic, identify, sl2_f3};
use groupext::torsor::Side;

fn meta(n: i64, p: i64, q: i64) -> groupext::extension::ExtensionGroup {
    metacyclic(MetacyclicParams::new(n, p, q).unwrap()).unwrap()
}

#[test]
fn twelve_gives_eight_named_classes() {
    let names: Vec<String> = enumerate_extensions(12)
        .unwrap()
        .iter()
        .map(|c| c.name.to_string())
        .collect();
    let mut expected = vec![
        "D24", "Z12 x Z2", "Z24", "Z3 x Q8", "Z3 ⋊ D8", "Z3 ⋊ Q8", "Z3 ⋊ Z8", "Z4 x S3",
    ];
    expected.sort();
    assert_eq!(names, expected);
}

#[test]
fn eight_has_an_extra_generalized_quaternion_class() {
    let classes = enumerate_extensions(8).unwrap();
    assert_eq!(classes.len(), 6);
    let q16 = classes.iter().find(|c| c.name.to_string() == "Q16").unwrap();
    assert!(q16.contains(4, 7));
}

#[test]
fn classes_partition_the_consistent_pairs() {
    for n in 2..=12 {
        let classes = enumerate_extensions(n).unwrap();
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, MetacyclicParams::all(n).len(), "n = {n}");
        for c in &classes {
            assert_eq!(c.representative, c.members[0]);
        }
    }
}

#[test]
fn extension_kinds() {
    assert_eq!(classify_extension(&meta(4, 0, 1)), ExtensionKind::Direct);
    assert_eq!(classify_extension(&meta(4, 0, 3)), ExtensionKind::SplitSemidirect);
    assert_eq!(classify_extension(&meta(4, 2, 3)), ExtensionKind::NonSplit);
    assert_eq!(classify_extension(&meta(4, 1, 1)), ExtensionKind::NonSplit);
    let sl23 = preset("sl23").unwrap();
    assert_eq!(classify_extension(sl23.ext()), ExtensionKind::NonSplit);
    assert!(splitting_section(&meta(12, 0, 11)).is_some());
}

#[test]
fn quaternion_presentation_is_q8() {
    let q8 = meta(4, 2, 3);
    assert!(are_isomorphic(&q8.group, &dicyclic(8)).is_some());
    assert_eq!(identify(&q8.group).unwrap().to_string(), "Q8");
}

#[test]
fn binary_tetrahedral_is_not_the_metacyclic_dicyclic_group() {
    let sl23 = preset("sl23").unwrap();
    assert!(are_isomorphic(sl23.group(), &sl2_f3()).is_some());
    assert!(are_isomorphic(sl23.group(), &meta(12, 6, 11).group).is_none());
    assert_eq!(identify(sl23.group()).unwrap().to_string(), "SL(2,3)");
}

#[test]
fn raw_binary_tetrahedral_cocycle_is_refused() {
    let spec = binary_tetrahedral_spec(binary_tetrahedral_cocycle_raw());
    assert_eq!(verify_cocycle(&spec).unwrap().len(), 78);
    assert!(matches!(build_extension(spec), Err(Error::InvalidCocycle(_))));
}

#[test]
fn section_cocycle_rebuilds_an_isomorphic_group() {
    let (g, _, _) = dihedral24();
    let center = g.center();
    let quotient = g.quotient(&center).unwrap();
    let mut section = quotient.leaders.clone();
    section[0] = g.identity();
    let spec = section_cocycle(&g, &center, &section).unwrap();
    let ext = build_extension(spec).unwrap();
    assert!(check_short_exact(&ext).is_empty());
    assert!(are_isomorphic(&ext.group, &g).is_some());
    assert_eq!(classify_extension(&ext), ExtensionKind::NonSplit);
}

#[test]
fn section_must_be_a_transversal() {
    let (g, a, _) = dihedral24();
    let center = g.center();
    let k = g.quotient(&center).unwrap().group.order();
    let bad = vec![a; k];
    assert!(matches!(
        section_cocycle(&g, &center, &bad),
        Err(Error::NotATransversal(_))
    ));
    let mut s3 = BTreeSet::new();
    s3.insert(ElementId(1));
    assert!(section_cocycle(&g, &s3, &[]).is_err());
}

#[test]
fn spec_documents_round_trip_through_json() {
    let spec = meta(6, 3, 5).spec;
    let json = serde_json::to_string(&spec.to_doc()).unwrap();
    assert!(json.contains("\"N\"") && json.contains("\"K\""));
    let doc: SpecDoc = serde_json::from_str(&json).unwrap();
    let back = ExtensionSpec::from_doc(&doc).unwrap();
    assert_eq!(back, spec);
    let rebuilt = build_extension(back).unwrap();
    assert_eq!(identify(&rebuilt.group).unwrap().to_string(), "Z3 ⋊ Z4");
}

#[test]
fn malformed_spec_documents_are_rejected() {
    let mut doc = meta(3, 0, 2).spec.to_doc();
    doc.zeta.pop();
    assert!(matches!(ExtensionSpec::from_doc(&doc), Err(Error::SizeMismatch(_))));
    let mut doc = meta(3, 0, 2).spec.to_doc();
    doc.phi[1][0] = 7;
    assert!(matches!(ExtensionSpec::from_doc(&doc), Err(Error::ElementOutOfRange(7, 3))));
}

#[test]
fn direct_products_of_coprime_cyclics_are_cyclic() {
    let ext = build_extension(ExtensionSpec::direct(FiniteGroup::cyclic(3), FiniteGroup::cyclic(4))).unwrap();
    assert_eq!(identify(&ext.group).unwrap().to_string(), "Z12");
}

#[test]
fn t_i_inversion_example() {
    let p = preset("t-i").unwrap();
    let i0 = p.element("I0").unwrap();
    let three = p.parse_object("3+").unwrap();
    assert_eq!(p.action.label(p.action.act(i0, three, Side::Left)), "9-");
}

#[test]
fn plr_generators_match_on_the_right() {
    let p = preset("plr-right").unwrap();
    let c = p.parse_object("0+").unwrap();
    let act = |g: &str, o: usize| p.action.act(p.element(g).unwrap(), o, Side::Right);
    assert_eq!(p.action.label(act("P", c)), "0-");
    assert_eq!(p.action.label(act("L", c)), "4-");
    assert_eq!(p.action.label(act("R", c)), "9-");
}
