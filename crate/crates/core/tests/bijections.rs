use derangements::bijections::{
    check_flip, check_psi, check_wpsr_phi, i_sigma, pm_partner, rlmb_recursion_maps, typeb_matchings, wpsr_phi,
};
use derangements::enumerate::{in_u, FamilySpec};

#[test]
fn wpsr_involution_up_to_seven() {
    for n in 3..=7 {
        for report in check_wpsr_phi(n) {
            assert!(report.pass(), "{:?}", report.summary());
            assert_eq!(report.pairs.len() * 2, report.domain_size);
            assert!(report.total_weight.is_zero());
        }
    }
}

#[test]
fn i_sigma_respects_bounds() {
    for n in 3..=7 {
        for j in 1..n {
            for s in (FamilySpec::Enj { n, j }).perms().unwrap() {
                let i = i_sigma(&s).unwrap() as usize;
                if j == 1 {
                    assert!(i <= n - 2, "{s}");
                } else {
                    assert!(i < j, "{s}");
                }
                assert!(!in_u(&wpsr_phi(&s).unwrap(), j));
            }
        }
    }
}

#[test]
fn reduction_is_bijective_with_shifted_law_up_to_seven() {
    for n in 3..=7 {
        let reports = check_psi(n);
        assert_eq!(reports.len(), n - 2);
        for r in reports {
            assert!(r.bijective(), "{r:?}");
            assert!(r.shifted_law_holds, "{r:?}");
            assert!(r.summed_law_holds, "{r:?}");
        }
    }
}

#[test]
fn per_element_x_j_law_breaks_first_at_five_four() {
    for n in 3..=4 {
        assert!(check_psi(n).iter().all(|r| r.law_failures.is_empty()));
    }
    let r = &check_psi(5)[2];
    assert_eq!(r.j, 4);
    let failures: Vec<String> = r.law_failures.iter().map(|s| s.to_string()).collect();
    assert_eq!(failures, ["31254", "31524"]);
}

#[test]
fn flip_carries_tilde_slices_up_to_seven() {
    for n in 2..=7 {
        for r in check_flip(n) {
            assert!(r.pass(), "{r:?}");
        }
    }
}

#[test]
fn type_b_excedance_lemmas_up_to_five() {
    for n in 1..=5 {
        let r = typeb_matchings(n);
        for s in r.summaries() {
            assert!(s.pass, "{s}");
        }
    }
}

#[test]
fn mixed_matching_covers_whole_class() {
    for n in 1..=5 {
        let mut covered = 0;
        for s in (FamilySpec::BnMixed { n }).signed_perms().unwrap() {
            let t = pm_partner(&s).expect("defined on mixed class");
            assert_ne!(s, t);
            assert_eq!(pm_partner(&t).as_ref(), Some(&s));
            assert_eq!(s.image(), t.image());
            covered += 1;
        }
        let expected = (1usize..=n).product::<usize>() * ((1usize << n) - 2);
        assert_eq!(covered, expected);
        let r = typeb_matchings(n);
        let total: usize = r.mixed.iter().map(|(_, m)| m.domain_size).sum();
        assert_eq!(total, expected);
    }
}

#[test]
fn rlm_b_maps_up_to_five() {
    for n in 2..=5 {
        let r = rlmb_recursion_maps(n);
        for s in r.summaries() {
            assert!(s.pass, "{s}");
        }
        assert_eq!(r.phi2.is_some(), n % 2 == 0);
    }
}
