
use qborel::selftest::checks;

#[test]
fn associativity_on_random_triples() {
    for rank in 1..=4 {
        assert_eq!(checks::associativity(rank, 200, 20 + rank as u64), Vec::<usize>::new(), "rank {rank}");
    }
}

#[test]
fn representation_oracle_agrees_with_normal_forms() {
    let (bad, equal, unequal) = checks::oracle(100, 22);
    assert!(bad.is_empty(), "disagreements {bad:?}");
    assert!(equal >= 20 && unequal >= 20, "{equal} equal, {unequal} unequal");
}
