use std::f64::consts::PI;

use super::*;
use crate::specfun::{riemann_zeta, zeta_even};

fn key(id: &str) -> CatalogKey {
    CatalogKey::new(id)
}

/// Smallest `N` with `tail_bound(N) <= target`.
fn n_star(inst: &Instance, target: f64) -> u64 {
    inst.terms_for_tail(target, 1_000_000).unwrap()
}

#[test]
fn listing_has_expected_entries() {
    let list = list_identities();
    assert!(list.len() >= 33);
    let s23 = list.iter().find(|s| s.id == "SUM_23").unwrap();
    assert_eq!(s23.paper_eq, "Eq. (23)");
    let t21 = list.iter().find(|s| s.id == "THM_21").unwrap();
    assert_eq!(t21.params, "m >= 1");
    assert!(list.iter().all(|s| !s.paper_eq.is_empty()));
    let mut ids: Vec<_> = list.iter().map(|s| s.id).collect();
    ids.dedup();
    assert_eq!(ids.len(), list.len());
}

#[test]
fn statuses_serialize_kebab() {
    let json = serde_json::to_string(&list_identities()).unwrap();
    assert!(json.contains("\"as-printed\""));
    assert!(json.contains("\"corrected\""));
    assert!(json.contains("\"representation\""));
}

#[test]
fn term_examples() {
    let t = term(&key("SUM_23"), 1).unwrap();
    assert!((t - PI * PI / 24.0).abs() <= 1e-16);
    assert_eq!(term(&key("ZETA3_EWELL_16"), 0).unwrap(), -0.25);
    assert_eq!(term(&CatalogKey::with_param("THM_21", 3), 1).unwrap(), 0.0);
}

#[test]
fn bad_keys_rejected() {
    assert!(matches!(term(&key("SUM_99"), 1), Err(Error::UnknownKey(_))));
    assert!(matches!(
        term(&key("THM_21"), 1),
        Err(Error::Parameter { .. })
    ));
    assert!(matches!(
        term(&CatalogKey::with_param("THM_21", 0), 1),
        Err(Error::Parameter { .. })
    ));
    assert!(matches!(
        term(&CatalogKey::with_param("SUM_23", 1), 1),
        Err(Error::Parameter { .. })
    ));
    assert!(matches!(term(&key("SUM_23"), 0), Err(Error::Index { .. })));
    assert!(matches!(term(&key("RZS_ONE"), 1), Err(Error::Index { .. })));
    assert!(CatalogKey::with_param("SUM_38", 0).params.is_some());
    assert!(term(&CatalogKey::with_param("SUM_38", 0), 1).is_ok());
}

#[test]
fn closed_form_examples() {
    assert_eq!(closed_form(&key("SUM_23")).unwrap(), 0.5);
    let s30 = closed_form(&key("SUM_30")).unwrap();
    assert!((s30 - (PI / (2.0 * 2f64.sqrt())).ln()).abs() <= 1e-16);
    let t21 = closed_form(&CatalogKey::with_param("THM_21", 2)).unwrap();
    assert!((t21 - (PI * PI / 8.0 - 0.5)).abs() <= 1e-15);
}

#[test]
fn corrected_entries_carry_both_variants() {
    for d in registry() {
        assert_eq!(
            d.status == Status::Corrected,
            d.has_printed_variant(),
            "{}",
            d.id
        );
    }
    let corrected = closed_form(&key("SUM_34")).unwrap();
    let printed = printed_closed_form(&key("SUM_34")).unwrap().unwrap();
    assert!((corrected - (1.0 - PI.powi(3) / 32.0)).abs() <= 1e-15);
    assert!((printed - (1.0 - PI.powi(3) / 96.0)).abs() <= 1e-15);
    assert_eq!(printed_closed_form(&key("SUM_23")).unwrap(), None);
}

#[test]
fn family_closed_forms_match_scalar_entries_bitwise() {
    let c = |id: &str| closed_form(&key(id)).unwrap();
    let t21 = |m| closed_form(&CatalogKey::with_param("THM_21", m)).unwrap();
    let t29 = |m| closed_form(&CatalogKey::with_param("THM_29", m)).unwrap();
    assert_eq!(t21(2), c("SUM_25"));
    assert_eq!(t21(3), c("SUM_24") / 3.0);
    assert_eq!(t21(1), c("SUM_23") * 2.0);
    assert_eq!(t29(1), 2.0 * c("SUM_31"));
    assert_eq!(t29(2), c("SUM_33"));
}

#[test]
fn partial_sum_examples() {
    let r = partial_sum(&key("SUM_23"), 30).unwrap();
    assert!((r.value - 0.5).abs() <= r.error_bound + f64::EPSILON);
    assert!(r.error_bound <= 2.0 * 4f64.powi(-30));
    assert_eq!(r.terms_used, 30);

    let apery = partial_sum(&key("ZETA3_APERY_14"), 20).unwrap();
    let z3 = riemann_zeta(3.0).unwrap().value;
    assert!((apery.value - 0.4 * z3).abs() <= 1e-12);

    let log2 = partial_sum(&key("RZS_LOG2"), 40).unwrap();
    assert!((log2.value - std::f64::consts::LN_2).abs() <= 1e-11);
}

#[test]
fn tail_bound_examples() {
    let b23 = tail_bound(&key("SUM_23"), 10).unwrap();
    let expect = zeta_even(1) * 0.25f64.powi(11) * 4.0 / 3.0;
    assert!((b23 - expect).abs() <= 1e-14 * expect);

    let b30 = tail_bound(&key("SUM_30"), 10).unwrap();
    let expect = zeta_even(1) * 16f64.powi(-11) * (16.0 / 15.0) / 11.0;
    assert!(b30 <= expect * (1.0 + 1e-14));
}

#[test]
fn tail_bounds_monotone_for_every_key() {
    for d in registry() {
        for k in d.keys(6) {
            let inst = Instance::new(&k).unwrap();
            let mut prev = f64::INFINITY;
            for n in inst.start_index()..inst.start_index() + 60 {
                let b = inst.tail_bound(n).unwrap();
                assert!(b <= prev, "{k} at N = {n}");
                prev = b;
            }
        }
    }
}

#[test]
fn tail_bounds_cover_extended_sums() {
    for d in registry() {
        for k in d.keys(8) {
            let inst = Instance::new(&k).unwrap();
            for n in [
                inst.start_index(),
                inst.start_index() + 3,
                inst.start_index() + 15,
            ] {
                let a = inst.partial_sum(n).unwrap();
                let b = inst.partial_sum(n + 200).unwrap();
                let slack = 4.0 * f64::EPSILON * b.value.abs();
                assert!(
                    (b.value - a.value).abs() <= a.error_bound + slack,
                    "{k} at N = {n}"
                );
            }
        }
    }
}

#[test]
fn scalar_identities_hold_at_n_star() {
    for d in registry().iter().filter(|d| !d.is_family()) {
        let inst = Instance::new(&key(d.id)).unwrap();
        let n = n_star(&inst, 1e-11);
        let s = inst.partial_sum(n).unwrap();
        let rhs = inst.closed_form().value();
        let err = (s.value - rhs).abs();
        assert!(err <= s.error_bound + 1e-13, "{}: {err:e}", d.id);
        if let Some(printed) = inst.printed_form() {
            assert!(
                (s.value - printed.value()).abs() > s.error_bound,
                "{}",
                d.id
            );
        }
    }
}

#[test]
fn families_hold_up_to_twelve() {
    for d in registry().iter().filter(|d| d.is_family()) {
        for k in d.keys(12) {
            let inst = Instance::new(&k).unwrap();
            let n = n_star(&inst, 1e-10);
            let s = inst.partial_sum(n).unwrap().value;
            let rhs = inst.closed_form().value();
            assert!((s - rhs).abs() <= 1e-9, "{k}: {s} vs {rhs}");
        }
    }
}

#[test]
fn sum_28_printed_sign_is_off_by_reciprocal() {
    for k in 1..=12 {
        let key = CatalogKey::with_param("SUM_28", k);
        let c = closed_form(&key).unwrap();
        let p = printed_closed_form(&key).unwrap().unwrap();
        let kf = k as f64;
        assert!((c - p - 1.0 / (kf * (2.0 * kf - 1.0))).abs() <= 1e-14);
    }
}

#[test]
fn zeta3_assemblies_reproduce_zeta3() {
    let z3 = riemann_zeta(3.0).unwrap().value;
    let mut count = 0;
    for d in registry()
        .iter()
        .filter(|d| d.targets.contains(&Target::Zeta3))
    {
        let inst = Instance::new(&key(d.id)).unwrap();
        let a = inst.assembly().unwrap();
        let n = n_star(&inst, 1e-12 / a.scale.abs());
        let s = inst.partial_sum(n).unwrap().value;
        assert!((a.apply(s) - z3).abs() <= 1e-10, "{}", d.id);
        count += 1;
    }
    assert_eq!(count, 9);
}

#[test]
fn key_display() {
    assert_eq!(
        CatalogKey::with_param("THM_21", 4).to_string(),
        "THM_21[m=4]"
    );
    assert_eq!(
        CatalogKey::with_param("SUM_38", 0).to_string(),
        "SUM_38[k=0]"
    );
    assert_eq!(key("SUM_9").to_string(), "SUM_9");
}
