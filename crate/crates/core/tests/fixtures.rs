use tcoalg::coalgebra::show;
use tcoalg::constructions::{double, dual_coop, mirror, ribbon_extension};
use tcoalg::demos::{self, constant_kz3_z2, group_algebra, sweedler};
use tcoalg::*;

fn dims(h: &TCoalg) -> Vec<usize> {
    h.group.elements().map(|a| h.dim(a)).collect()
}

fn full_check(h: &TCoalg) -> Report {
    let mut r = validate_tcoalg(h);
    if h.rmatrix.is_some() {
        r.extend(validate_rmatrix(h));
        r.extend(check_drinfeld_props(h));
    }
    if h.twist.is_some() {
        r.extend(validate_ribbon(h));
    }
    r
}

#[test]
fn construction_dimensions() {
    assert_eq!(dims(&dual_coop(&sweedler()).unwrap()), [4]);
    assert_eq!(dims(&dual_coop(&constant_kz3_z2()).unwrap()), [6, 6]);
    assert_eq!(dims(&double(&sweedler()).unwrap()), [16]);
    assert_eq!(dims(&double(&constant_kz3_z2()).unwrap()), [18, 18]);
    assert_eq!(dims(&double(&group_algebra(3)).unwrap()), [9]);
    assert_eq!(dims(&demos::demo("rt_double_kz2").unwrap()), [8]);
    assert_eq!(dims(&demos::demo("trivial").unwrap()), [1, 1]);
}

#[test]
fn every_demo_passes_its_verifiers() {
    for name in demos::DEMO_NAMES {
        let rep = full_check(&demos::demo(name).unwrap());
        assert!(rep.is_clean(), "{name}: {}", rep.to_text());
    }
    let dk = demos::demo("double_kz2").unwrap();
    assert!(tcoalg_equal(&dk, &double(&group_algebra(2)).unwrap()));
}

#[test]
fn constructions_are_clean() {
    for h in [group_algebra(2), sweedler(), constant_kz3_z2()] {
        assert!(validate_tcoalg(&coopposite(&h).unwrap()).is_clean());
        assert!(validate_tcoalg(&dual_coop(&h).unwrap()).is_clean());
        assert!(full_check(&mirror(&h).unwrap()).is_clean());
        let d = double(&h).unwrap();
        assert!(full_check(&mirror(&d).unwrap()).is_clean());
    }
    let rt = ribbon_extension(&double(&sweedler()).unwrap()).unwrap();
    assert!(full_check(&rt).is_clean());
}

#[test]
fn drinfeld_elements_frozen() {
    // Sweedler's algebra with its standard R: u = g.
    assert_eq!(show(&drinfeld_elements(&sweedler())[0]), "{1:1}");
    let d = double(&sweedler()).unwrap();
    assert_eq!(show(&drinfeld_elements(&d)[0]), "{1:-1 4:1 11:1 14:-1}");
    let d = double(&constant_kz3_z2()).unwrap();
    let u = drinfeld_elements(&d);
    assert_eq!(show(&u[0]), "{0:1 7:1 14:1}");
    assert_eq!(show(&u[1]), "{3:1 10:1 17:1}");
}

#[test]
fn ribbon_extension_twist_frozen() {
    let rt = demos::demo("rt_double_kz2").unwrap();
    assert_eq!(show(rt.theta(0)), "{4:1 5:1}");
    let names = &rt.basis_names.as_ref().unwrap()[0];
    assert_eq!(names[4], "g0*e^0.0*v");
    assert_eq!(names[5], "g0*e^0.1*v");
}

#[test]
fn prime_field_fixtures() {
    for p in [3, 5, 7] {
        let h = sweedler().to_field(Field::Prime(p)).unwrap();
        assert!(full_check(&h).is_clean(), "F{p}");
        assert!(validate_tcoalg(&double(&h).unwrap()).is_clean(), "F{p}");
    }
    // 1/2 has no image in F2.
    assert!(sweedler().to_field(Field::Prime(2)).is_err());
}

#[test]
fn report_text_is_canonical() {
    let mut r = Report::new();
    r.fail("b-check", &[1, 0], "w");
    r.pass("a-check", &[2]);
    r.pass("b-check", &[0, 1]);
    assert_eq!(r.to_text(), "pass a-check (2)\npass b-check (0,1)\nFAIL b-check (1,0) w\n1 of 3 checks failed\n");
}
