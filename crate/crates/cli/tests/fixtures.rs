//! The documents under `fixtures/` are the programmatic fixtures, serialized.
//! Regenerate with `EQUICOH_BLESS=1 cargo test -p equicoh-cli --test fixtures`.

use std::fs;
use std::path::PathBuf;

use equicoh::fixtures::{self, g1, g2, g3, x2};
use equicoh::s1;
use equicoh::{EquivariantClass, Rational};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn file_name(label: &str) -> String {
    let mut s: String = label
        .to_lowercase()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    while s.ends_with('_') {
        s.pop();
    }
    format!("{s}.json")
}

fn documents() -> Vec<(String, String)> {
    let mut docs = Vec::new();
    for (label, g) in fixtures::all_graphs() {
        docs.push((format!("graphs/{}", file_name(&label)), g.to_json()));
    }
    docs.push(("xrays/x2_g0.json".into(), x2(0).to_json()));
    docs.push(("xrays/x2_g1.json".into(), x2(1).to_json()));

    let one = Rational::from(1);

    let g = g1();
    let cat = g.catalogue();
    let member = s1::image_basis(&g, 2).unwrap().classes().remove(0);
    docs.push(("classes/g1/member_deg2.json".into(), member.to_json(Some("graphs/g1.json"))));
    let mut lonely = EquivariantClass::zero(&cat, 1);
    lonely.set("A", equicoh::ComponentClass::constant(cat["A"], 1, &one).times_monomial(&[1]));
    docs.push(("classes/g1/nonmember_deg2.json".into(), lonely.to_json(Some("graphs/g1.json"))));
    let mut jump = EquivariantClass::constant(&cat, 1, &one);
    jump.set("C", equicoh::ComponentClass::constant(cat["C"], 1, &Rational::from(2)));
    docs.push(("classes/g1/nonmember_deg0.json".into(), jump.to_json(Some("graphs/g1.json"))));

    let g = g2(0, 1.into(), 1.into());
    let constant = EquivariantClass::constant(&g.catalogue(), 1, &one);
    docs.push(("classes/g2_0/constant.json".into(), constant.to_json(Some("graphs/g2_0.json"))));
    let torus = EquivariantClass::constant(&g.catalogue(), 2, &one);
    docs.push(("classes/g2_0/constant_rank2.json".into(), torus.to_json(Some("graphs/g2_0.json"))));

    let g = g3();
    let member = s1::image_basis(&g, 2).unwrap().classes().pop().unwrap();
    docs.push(("classes/g3/member_deg2.json".into(), member.to_json(Some("graphs/g3.json"))));

    let x = x2(1);
    let cat = x.catalogue();
    docs.push((
        "classes/x2_g1/constant.json".into(),
        EquivariantClass::constant(&cat, 2, &one).to_json(Some("xrays/x2_g1.json")),
    ));
    let member = equicoh::image_basis_xray(&x, 2).unwrap().classes().remove(0);
    docs.push(("classes/x2_g1/member_deg2.json".into(), member.to_json(Some("xrays/x2_g1.json"))));
    let first = cat.keys().next().unwrap().clone();
    let mut bump = EquivariantClass::zero(&cat, 2);
    bump.set(&first, equicoh::ComponentClass::constant(cat[&first], 2, &one).times_monomial(&[1, 0]));
    docs.push(("classes/x2_g1/nonmember_deg2.json".into(), bump.to_json(Some("xrays/x2_g1.json"))));

    docs.into_iter().map(|(p, mut d)| {
        d.push('\n');
        (p, d)
    }).collect()
}

#[test]
fn fixture_files_match_programmatic_fixtures() {
    let bless = std::env::var_os("EQUICOH_BLESS").is_some();
    for (path, doc) in documents() {
        let full = root().join(&path);
        if bless {
            fs::create_dir_all(full.parent().unwrap()).unwrap();
            fs::write(&full, &doc).unwrap();
            continue;
        }
        let on_disk = fs::read_to_string(&full).unwrap_or_else(|e| panic!("{path}: {e}"));
        assert_eq!(on_disk, doc, "{path} is stale; rerun with EQUICOH_BLESS=1");
    }
}

#[test]
fn fixture_classes_have_the_expected_verdicts() {
    let docs = documents();
    let find = |p: &str| &docs.iter().find(|(q, _)| q == p).unwrap().1;
    let g = g1();
    let verdict = |path: &str| {
        let (c, _) = EquivariantClass::from_json(find(path), &g.catalogue()).unwrap();
        s1::check_membership(&g, &c).unwrap().is_member()
    };
    assert!(verdict("classes/g1/member_deg2.json"));
    assert!(!verdict("classes/g1/nonmember_deg2.json"));
    assert!(!verdict("classes/g1/nonmember_deg0.json"));

    let x = x2(1);
    let verdict = |path: &str| {
        let (c, _) = EquivariantClass::from_json(find(path), &x.catalogue()).unwrap();
        equicoh::check_membership_xray(&x, &c).unwrap().is_member()
    };
    assert!(verdict("classes/x2_g1/constant.json"));
    assert!(verdict("classes/x2_g1/member_deg2.json"));
    assert!(!verdict("classes/x2_g1/nonmember_deg2.json"));
}
