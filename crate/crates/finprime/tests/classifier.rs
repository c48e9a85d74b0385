mod common;

use common::{ab_ba, b_ab, eps_a_b_ab, epsilon_or_a, chain3, prime5, word};
use finprime::automaton::{alphabet_of, complement};
use finprime::classifier::{
    compressions, has_cep, interior_rejecting_state, is_cosafety, is_safety, is_simple_cosafety, linear_profile,
    uniform_max_word_letter,
};
use finprime::factories::singleton_dfa;
use finprime::oracle::oracle_cep;
use finprime::Dfa;

#[test]
fn chain3_profile() {
    let a = chain3();
    let p = linear_profile(&a).unwrap().unwrap();
    assert_eq!(p.n(), 3);
    assert_eq!(p.sigma(0, 1), vec![0, 1]);
    assert_eq!(p.sigma(0, 2), vec![2]);
    assert_eq!(p.sigma(2, 3), vec![2]);
    assert_eq!(uniform_max_word_letter(&p), None);
    assert_eq!(interior_rejecting_state(&p), None);
    let cep = has_cep(&p).unwrap();
    assert!(!cep.holds);
    assert_eq!(cep.breaching, Some(word(&a, "a1 a2 a3")));
    assert!(!oracle_cep(&p, 1000).unwrap());
}

#[test]
fn chain3_safety() {
    let a = chain3();
    assert!(is_safety(&a));
    assert!(!is_cosafety(&a));
    assert!(!is_simple_cosafety(&a));
}

#[test]
fn two_middle_states_are_not_linear() {
    assert!(linear_profile(&ab_ba()).unwrap().is_none());
}

#[test]
fn epsilon_profile() {
    let e = singleton_dfa(&[], &alphabet_of(&["a", "b"])).unwrap();
    let p = linear_profile(&e).unwrap().unwrap();
    assert_eq!(p.n(), 0);
    assert_eq!(p.sigma(0, 1), vec![0, 1]);
    assert_eq!(uniform_max_word_letter(&p), Some(0));
    assert!(has_cep(&p).is_err());
}

#[test]
fn epsilon_or_a_uses_letter_a() {
    let p = linear_profile(&epsilon_or_a()).unwrap().unwrap();
    assert_eq!(uniform_max_word_letter(&p), Some(0));
}

#[test]
fn eps_a_b_ab_has_cep() {
    let a = eps_a_b_ab();
    let p = linear_profile(&a).unwrap().unwrap();
    assert_eq!(p.sigma(0, 1), vec![0]);
    assert_eq!(p.sigma(0, 2), vec![1]);
    assert_eq!(p.sigma(1, 2), vec![1]);
    let cep = has_cep(&p).unwrap();
    assert!(cep.holds);
    assert_eq!(cep.breaching, None);
    assert!(oracle_cep(&p, 1000).unwrap());
}

#[test]
fn prime5_breaching_word() {
    let a = prime5();
    let p = linear_profile(&a).unwrap().unwrap();
    let cep = has_cep(&p).unwrap();
    assert!(!cep.holds);
    assert_eq!(cep.breaching, Some(word(&a, "a a b")));
    assert!(!oracle_cep(&p, 1000).unwrap());
}

#[test]
fn n_one_profiles_lack_cep() {
    let a = Dfa::from_rows(alphabet_of(&["a", "b"]), 0, &[vec![1, 1], vec![2, 2], vec![2, 2]], &[1]).unwrap();
    let p = linear_profile(&a).unwrap().unwrap();
    assert_eq!(p.n(), 1);
    assert!(!has_cep(&p).unwrap().holds);
    assert!(!oracle_cep(&p, 10).unwrap());
}

#[test]
fn b_ab_has_interior_rejecting_state() {
    let p = linear_profile(&b_ab()).unwrap().unwrap();
    assert_eq!(interior_rejecting_state(&p), Some(0));
    assert!(!is_safety(&b_ab()));
}

#[test]
fn safety_and_cosafety_edge_cases() {
    let all = Dfa::new(alphabet_of(&["a"]), 0, vec![0], vec![true]).unwrap();
    let none = complement(&all);
    assert!(is_safety(&all));
    assert!(is_cosafety(&none));
    assert!(!is_simple_cosafety(&none));
    assert!(is_simple_cosafety(&all));
}

#[test]
fn two_chain_cosafety_is_not_simple() {
    // Two separate chains into one accepting sink, no way back.
    let a = Dfa::from_rows(
        alphabet_of(&["a", "b"]),
        0,
        &[vec![1, 2], vec![3, 1], vec![2, 3], vec![3, 3]],
        &[3],
    )
    .unwrap();
    assert!(is_cosafety(&a));
    assert!(!is_simple_cosafety(&a));
}

#[test]
fn compressions_drop_one_infix() {
    let c = compressions(&[0, 1, 2]);
    let words: Vec<Vec<usize>> = c.iter().map(|(_, _, w)| w.clone()).collect();
    assert_eq!(words, vec![vec![1, 2], vec![2], vec![0, 2]]);
    assert!(compressions(&[0]).is_empty());
}

#[test]
fn cep_rule_matches_literal_check_on_random_profiles() {
    let mut rng = finprime::sampling::seeded(17);
    let abc = alphabet_of(&["a", "b", "c"]);
    for i in 0..300 {
        let n = 1 + i % 5;
        let p = finprime::sampling::random_profile(&mut rng, n, &abc, i % 2 == 0);
        assert_eq!(has_cep(&p).unwrap().holds, oracle_cep(&p, 100_000).unwrap(), "{:?}", p.to_dfa());
    }
}
