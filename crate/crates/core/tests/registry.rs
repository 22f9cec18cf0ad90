use qseries::forms::{decompose_in_class_basis, theta_of_form, QuadForm};
use qseries::registry::{
    find, parse_records, registry_list, verify_all, verify_identity, verify_record, RegistryError,
    Status, VerificationReport, VerifyStatus,
};
use qseries::series::{coeff, int};

fn strip_timing(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    for r in &mut reports {
        r.millis = 0;
    }
    reports
}

#[test]
fn thread_count_does_not_change_reports() {
    let records: Vec<_> = registry_list().into_iter().take(40).collect();
    let one = strip_timing(verify_all(&records, Some(int(60)), 1).unwrap());
    let four = strip_timing(verify_all(&records, Some(int(60)), 4).unwrap());
    assert_eq!(one, four);
    let names: Vec<_> = one.iter().map(|r| r.identity.clone()).collect();
    let expect: Vec<_> = records.iter().map(|r| r.name.clone()).collect();
    assert_eq!(names, expect);
}

#[test]
fn passing_is_monotone_in_the_order() {
    for name in ["ghp", "b5-2-3", "qrr", "tk1"] {
        for order in [10, 40, 120] {
            let rep = verify_identity(name, Some(int(order))).unwrap();
            assert!(rep.passed(), "{name} at {order}");
            assert_eq!(rep.order, int(order));
        }
    }
}

#[test]
fn first_mismatch_is_the_lowest_exponent() {
    let recs = parse_records(
        "d1 | 40 | E(q) | E(q) + q^11 + q^30\n\
         d2 | 40 | phi(q) | phi(q) - 2 * q^(7/2)\n\
         d3 | 10 | E(q) | E(q) + q^11\n",
    )
    .unwrap();
    let reps = verify_all(&recs, None, 2).unwrap();
    let m = reps[0].first_mismatch.as_ref().unwrap();
    assert_eq!(
        (m.exponent, m.lhs.clone(), m.rhs.clone()),
        (int(11), coeff(0), coeff(1))
    );
    let m = reps[1].first_mismatch.as_ref().unwrap();
    assert_eq!(m.exponent, qseries::series::rat(7, 2));
    assert_eq!(reps[2].status, VerifyStatus::Pass);
    assert!(recs.iter().all(|r| r.status == Status::External));
}

#[test]
fn reports_round_trip_through_json() {
    let recs =
        parse_records("a | 30 | G(q) | H(q)\nb | 30 | G(q) | G(q)\nc | 30 | G(q | 1\n").unwrap();
    let reps = verify_all(&recs, None, 1).unwrap();
    assert_eq!(
        reps.iter().map(|r| r.status).collect::<Vec<_>>(),
        vec![VerifyStatus::Fail, VerifyStatus::Pass, VerifyStatus::Error]
    );
    let text = serde_json::to_string(&reps).unwrap();
    let back: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    for (a, b) in reps.iter().zip(&back) {
        assert_eq!(a.identity, b.identity);
        assert_eq!(a.status, b.status);
        assert_eq!(a.first_mismatch, b.first_mismatch);
        assert_eq!(a.order, b.order);
    }
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = &value[0];
    for key in ["identity", "order", "status", "first_mismatch", "millis"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(first["order"], "30");
    assert_eq!(first["status"], "fail");
    assert!(value[1]["first_mismatch"].is_null());
}

#[test]
fn malformed_fail_reports_are_rejected() {
    let bad = r#"{"identity":"x","order":"5","status":"fail","first_mismatch":null,"millis":0}"#;
    assert!(serde_json::from_str::<VerificationReport>(bad).is_err());
}

#[test]
fn bad_orders_are_rejected() {
    let recs = registry_list();
    assert_eq!(
        verify_all(&recs[..1], Some(int(0)), 1),
        Err(RegistryError::BadOrder(int(0)))
    );
    assert!(verify_identity("ghp", Some(int(-3))).is_err());
}

#[test]
fn stated_identities_fail_when_perturbed() {
    let mut rec = find("he1-1-4").unwrap();
    rec.rhs = format!("{} + q^50", rec.rhs);
    let rep = verify_record(&rec, int(60));
    assert_eq!(rep.first_mismatch.unwrap().exponent, int(50));
}

#[test]
fn t5_images_decompose_over_the_class_basis() {
    type Form = (i64, i64, i64);
    let cases: [(Form, Vec<(Form, i64)>); 4] = [
        ((3, 1, 6), vec![((4, 3, 5), 1), ((2, 1, 9), 1)]),
        ((4, 3, 5), vec![((3, 1, 6), 1), ((1, 1, 18), 1)]),
        ((1, 0, 39), vec![((5, 2, 8), 2)]),
        ((2, 0, 7), vec![((3, 2, 5), 2)]),
    ];
    for ((a, b, c), expect) in cases {
        let form = QuadForm::new(a, b, c).unwrap();
        let order = int(120);
        let f = theta_of_form(form, order * 5 + int(5)).t5().unwrap();
        let parts = decompose_in_class_basis(&f, form.discriminant(), order).unwrap();
        for (q, x) in parts {
            let want = expect
                .iter()
                .find(|(e, _)| *e == (q.a, q.b, q.c))
                .map_or(0, |(_, k)| *k);
            assert_eq!(x, coeff(want), "T5{form} at {q}");
        }
    }
}
