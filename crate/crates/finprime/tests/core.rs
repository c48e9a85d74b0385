mod common;

use common::{chain3, word};
use finprime::automaton::{
    accepts, alphabet_of, complement, distinguishing_word, enumerate_language, equivalent, index_of, is_empty,
    is_finite_language, longest_word_length, minimize, parse_dfa, product, reachable_states, run, serialize_dfa,
    to_dot,
};
use finprime::factories::{mod_counter_dfa, singleton_dfa};
use finprime::{Dfa, Error, LongestWord, ProductMode};

const THREE_STATE: &str = "dfa t
alphabet a b
states 3
initial 0
accepting 2
trans 0 a 1
trans 0 b 0
trans 1 a 2
trans 1 b 0
trans 2 a 2
trans 2 b 2
end
";

#[test]
fn parse_three_state_document() {
    let a = parse_dfa(THREE_STATE).unwrap();
    assert_eq!(a.state_count(), 3);
    assert_eq!(a.name(), "t");
    assert!(accepts(&a, &word(&a, "b a a b")).unwrap());
}

#[test]
fn missing_transition_is_reported() {
    let text = THREE_STATE.replace("trans 1 b 0\n", "");
    let err = parse_dfa(&text).unwrap_err();
    assert!(matches!(err, Error::IncompleteTransition { .. }));
    assert_eq!(err.to_string(), "incomplete transition function at state 1, letter b");
}

#[test]
fn serialization_is_literal_and_round_trips() {
    let a = parse_dfa(THREE_STATE).unwrap();
    assert_eq!(serialize_dfa(&a), THREE_STATE);
    // Same language, different numbering: different documents.
    let b = Dfa::from_rows(alphabet_of(&["a", "b"]), 0, &[vec![2, 0], vec![1, 1], vec![1, 0]], &[1]).unwrap();
    assert!(equivalent(&a, &b).unwrap());
    assert_ne!(serialize_dfa(&a), serialize_dfa(&b));
    assert_eq!(minimize(&a), minimize(&b));
}

#[test]
fn chain3_runs() {
    let a = chain3();
    assert_eq!(run(&a, &word(&a, "a3")).unwrap(), 2);
    assert_eq!(run(&a, &word(&a, "a2 a3")).unwrap(), 2);
    assert_eq!(run(&a, &word(&a, "a1 a3")).unwrap(), 2);
    assert_eq!(run(&a, &word(&a, "a1 a2 a3")).unwrap(), 3);
    assert_eq!(run(&a, &[]).unwrap(), 0);
    assert!(accepts(&a, &word(&a, "a1 a2 a3")).unwrap());
    assert!(!accepts(&a, &word(&a, "a3 a3 a3")).unwrap());
    assert!(accepts(&a, &[]).unwrap());
}

#[test]
fn chain3_language_facts() {
    let a = chain3();
    assert_eq!(index_of(&a), 5);
    assert_eq!(is_empty(&a), (false, Some(vec![])));
    assert!(is_finite_language(&a));
    assert_eq!(longest_word_length(&a), LongestWord::Finite(3));
    let words = enumerate_language(&a, 1);
    assert_eq!(words, vec![vec![], vec![0], vec![1], vec![2]]);
}

#[test]
fn chain3_dot() {
    let dot = to_dot(&chain3());
    assert_eq!(dot.matches("shape=doublecircle").count(), 4);
    assert_eq!(dot.matches("shape=circle").count(), 1);
}

#[test]
fn one_state_dot_merges_labels() {
    let a = Dfa::new(alphabet_of(&["a", "b"]), 0, vec![0, 0], vec![false]).unwrap();
    let dot = to_dot(&a);
    assert!(dot.contains("q0 -> q0 [label=\"a,b\"];"));
    assert_eq!(dot.matches("q0 -> q0").count(), 1);
}

#[test]
fn counters_and_products() {
    let six = mod_counter_dfa(6).unwrap();
    let both = product(&mod_counter_dfa(2).unwrap(), &mod_counter_dfa(3).unwrap(), ProductMode::Intersect).unwrap();
    assert!(equivalent(&six, &both).unwrap());
    assert_eq!(minimize(&six).state_count(), 6);
    assert!(!is_finite_language(&six));
    assert_eq!(longest_word_length(&six), LongestWord::Infinite);
}

#[test]
fn complement_differs_on_empty_word() {
    let a = chain3();
    assert_eq!(distinguishing_word(&a, &complement(&a)).unwrap(), Some(vec![]));
}

#[test]
fn unreachable_states() {
    let a = Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![1], vec![0], vec![0]], &[2]).unwrap();
    assert_eq!(reachable_states(&a), vec![0, 1]);
    assert_eq!(index_of(&a), 1);
    assert!(is_empty(&a).0);
    assert!(is_finite_language(&a));
    assert_eq!(longest_word_length(&a), LongestWord::None);
    assert!(enumerate_language(&a, 5).is_empty());
}

#[test]
fn singleton_enumeration() {
    let ab = alphabet_of(&["a", "b"]);
    let s = singleton_dfa(&[0, 1], &ab).unwrap();
    assert_eq!(s.state_count(), 4);
    assert_eq!(enumerate_language(&s, 2), vec![vec![0, 1]]);
    assert_eq!(longest_word_length(&singleton_dfa(&[], &ab).unwrap()), LongestWord::Finite(0));
}

#[test]
fn alphabet_mismatch_is_an_error() {
    let a = chain3();
    let b = mod_counter_dfa(2).unwrap();
    assert!(matches!(product(&a, &b, ProductMode::Union), Err(Error::AlphabetMismatch { .. })));
}

#[test]
fn finite_language_criterion_against_enumeration() {
    let mut rng = finprime::sampling::seeded(11);
    let ab = alphabet_of(&["a", "b"]);
    for _ in 0..200 {
        let a = finprime::sampling::random_dfa(&mut rng, 5, &ab, 0.3);
        let ind = index_of(&a);
        let long = enumerate_language(&a, 2 * a.state_count())
            .iter()
            .any(|w| w.len() + 2 > ind);
        assert_eq!(is_finite_language(&a), !long);
    }
}
