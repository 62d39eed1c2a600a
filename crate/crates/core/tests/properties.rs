mod common;

fn check(result: common::SuiteResult) {
    if let Err(e) = result {
        panic!("{e}");
    }
}

#[test]
fn quad_field_axioms() {
    check(common::quad_field_axioms(1000));
}

#[test]
fn mirror_invariants() {
    check(common::mirror_invariants(300));
}

#[test]
fn move_rules_agree_with_legal_moves() {
    check(common::move_rules(500));
}

#[test]
fn oracle_distance_monotone_in_placement_distance() {
    check(common::distance_monotone(5));
}

#[test]
fn count_tables_monotone() {
    check(common::count_tables_monotone(40));
}

#[test]
fn directed_move_matches_recurrence() {
    check(common::directed_move_lengths(200));
}

#[test]
fn symmetric_constructions() {
    check(common::symmetric_constructions(12));
}

#[test]
fn projection_on_witnesses() {
    check(common::projection(5));
}

#[test]
fn growth_error_settles_early() {
    check(common::growth_error_decreasing(40));
}
