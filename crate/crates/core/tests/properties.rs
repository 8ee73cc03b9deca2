mod support;

use support::CASES;

#[test]
fn ring_and_groebner_axioms() {
    support::ring_and_groebner(CASES).unwrap();
}

#[test]
fn jet_truncation_is_consistent() {
    support::truncation_consistency(CASES).unwrap();
}

#[test]
fn jets_commute_with_changes_of_variables() {
    support::change_of_variables(CASES).unwrap();
}

#[test]
fn tangency_survives_unsaturation() {
    support::unsaturated_transport(CASES).unwrap();
}

#[test]
fn resonance_matches_exhaustive_search() {
    support::resonance_vs_brute_force(CASES).unwrap();
}

#[test]
fn classification_is_coordinate_free() {
    support::classification_invariance(CASES).unwrap();
}
