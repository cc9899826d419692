use serde_json::Value;
use tcoalg::constructions::{double, ribbon_extension};
use tcoalg::demos::{self, DEMO_NAMES};
use tcoalg::io::{self, Document};
use tcoalg::rep::{regular_module, small_characters, trivial_module};
use tcoalg::rib::rib_from_rt_module;
use tcoalg::yd::ddouble_to_yd;
use tcoalg::{tcoalg_equal, validate_rmatrix, validate_tcoalg, Error, Field};

#[test]
fn demos_round_trip_bit_exact() {
    for name in DEMO_NAMES {
        let h = demos::demo(name).unwrap();
        let text = io::tcoalg_to_string(&h);
        let back = io::parse_tcoalg(&text).unwrap();
        assert!(tcoalg_equal(&h, &back), "{name}");
        assert_eq!(io::tcoalg_to_string(&back), text, "{name}");
    }
}

#[test]
fn save_of_load_is_canonical() {
    let h = demos::demo("sweedler").unwrap();
    let canonical = io::tcoalg_to_string(&h);
    // Same document, compact and with integers instead of strings.
    let mut v: Value = serde_json::from_str(&canonical).unwrap();
    let ints: Vec<i64> = h.counit.iter().map(|s| s.to_string().parse().unwrap()).collect();
    v["counit"] = serde_json::json!(ints);
    let compact = serde_json::to_string(&v).unwrap();
    assert_ne!(compact, canonical);
    let reloaded = io::tcoalg_to_string(&io::parse_tcoalg(&compact).unwrap());
    assert_eq!(reloaded, canonical);
}

#[test]
fn wrong_comul_shape_names_the_pair() {
    let h = demos::demo("constant").unwrap();
    let mut v: Value = serde_json::from_str(&io::tcoalg_to_string(&h)).unwrap();
    v["comul"][1][0].as_array_mut().unwrap().pop();
    let err = io::parse_tcoalg(&v.to_string()).unwrap_err();
    match err {
        Error::ShapeMismatch(msg) => assert!(msg.contains("comul at (1,0)"), "{msg}"),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn ragged_rows_are_rejected() {
    let h = demos::demo("group_algebra2").unwrap();
    let mut v: Value = serde_json::from_str(&io::tcoalg_to_string(&h)).unwrap();
    v["antipode"][0][0].as_array_mut().unwrap().pop();
    assert!(matches!(io::parse_tcoalg(&v.to_string()), Err(Error::ShapeMismatch(_))));
}

#[test]
fn parse_errors_carry_line_and_path() {
    let h = demos::demo("group_algebra2").unwrap();
    let text = io::tcoalg_to_string(&h).replacen("\"counit\": [\"1\"", "\"counit\": [\"one\"", 1);
    let line = text.lines().position(|l| l.contains("\"one\"")).unwrap() + 1;
    match io::parse_tcoalg(&text).unwrap_err() {
        Error::Parse { line: l, field, msg } => {
            assert_eq!(l, line);
            assert_eq!(field, "counit[0]");
            assert!(msg.contains("one"), "{msg}");
        }
        other => panic!("unexpected {other}"),
    }
    let err = io::parse_tcoalg(&text.replacen("\"kind\": \"tcoalg\"", "\"kind\": \"tcoalg\", \"extra\": 1", 1));
    assert!(matches!(err, Err(Error::Parse { .. })));
    assert!(matches!(io::parse_tcoalg("{\"kind\": \"tcoalg\", \"field\": \"F4\"}"), Err(Error::Parse { .. })));
    assert!(matches!(io::parse_tcoalg("not json"), Err(Error::Parse { line: 1, .. })));
}

#[test]
fn prime_field_documents_keep_their_field() {
    let h = demos::demo("sweedler").unwrap().to_field(Field::Prime(5)).unwrap();
    let text = io::tcoalg_to_string(&h);
    assert!(text.contains("\"field\": \"F5\""));
    let back = io::parse_tcoalg(&text).unwrap();
    assert_eq!(back.field, Field::Prime(5));
    assert!(tcoalg_equal(&h, &back));
    assert!(validate_tcoalg(&back).is_clean());
    assert!(validate_rmatrix(&back).is_clean());
}

#[test]
fn emitted_double_reloads_clean() {
    let d = double(&demos::group_algebra(2)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let path = path.to_str().unwrap();
    io::save(path, &io::tcoalg_to_string(&d)).unwrap();
    let back = io::load_tcoalg(path).unwrap();
    assert!(validate_tcoalg(&back).is_clean());
    assert!(validate_rmatrix(&back).is_clean());
    assert!(tcoalg_equal(&d, &io::load_tcoalg("demo:double_kz2").unwrap()));
    assert!(matches!(io::load_tcoalg("demo:nope"), Err(Error::UnknownDemo(_))));
}

#[test]
fn module_documents_round_trip() {
    let h = demos::group_algebra(2);
    let d = double(&h).unwrap();
    let rt = ribbon_extension(&d).unwrap();
    let mut mods = vec![trivial_module(&d), regular_module(&d, 0)];
    mods.extend(small_characters(&d, 0));
    for m in &mods {
        let text = io::module_to_string(m);
        match io::parse_document(&text).unwrap() {
            Document::Module(back) => assert_eq!(&back, m),
            _ => panic!("wrong kind"),
        }
        let y = ddouble_to_yd(&h, m);
        match io::parse_document(&io::yd_to_string(&y)).unwrap() {
            Document::YD(back) => assert_eq!(back, y),
            _ => panic!("wrong kind"),
        }
    }
    let o = rib_from_rt_module(&rt, &regular_module(&rt, 0)).unwrap();
    match io::parse_document(&io::rib_to_string(&o)).unwrap() {
        Document::Rib(back) => assert_eq!(back, o),
        _ => panic!("wrong kind"),
    }
}

#[test]
fn module_action_must_be_square() {
    let d = double(&demos::group_algebra(2)).unwrap();
    let mut v: Value = serde_json::from_str(&io::module_to_string(&regular_module(&d, 0))).unwrap();
    v["action"][2].as_array_mut().unwrap().pop();
    let err = io::parse_document(&v.to_string()).unwrap_err();
    assert!(matches!(err, Error::ShapeMismatch(ref m) if m.contains("action[2]")), "{err}");
}
