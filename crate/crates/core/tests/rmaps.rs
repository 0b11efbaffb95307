
use qborel::selftest::checks;

const INSTANCES: usize = 200;

#[test]
fn product_rules() {
    assert_eq!(checks::product_rules(INSTANCES, 11), Vec::<usize>::new());
}

#[test]
fn commutations() {
    assert_eq!(checks::commutations(INSTANCES, 12), Vec::<usize>::new());
}

#[test]
fn e_commutator_with_minus_part() {
    assert_eq!(checks::e_commutator(INSTANCES, 13), Vec::<usize>::new());
}

#[test]
fn zero_patterns_along_reduced_words_of_w0() {
    assert_eq!(checks::zero_patterns(INSTANCES, 14), Vec::<usize>::new());
}

#[test]
fn tau_conjugation() {
    assert_eq!(checks::tau_conjugation(INSTANCES, 15), Vec::<usize>::new());
}
