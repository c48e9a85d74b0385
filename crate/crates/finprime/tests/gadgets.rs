mod common;

use rand::Rng;

use common::{ab_ba, empty_over};
use finprime::automaton::{equivalent, is_empty, is_finite_language, is_minimal, product};
use finprime::classifier::{is_cosafety, is_simple_cosafety};
use finprime::factories::singleton_dfa;
use finprime::gadgets::{
    minimality_gadget, minimality_gadget_size, padding_letter, parse_digraph, prime2_factors, prime2_gadget,
    primefin_gadget, serialize_digraph, sprime_gadget, Digraph,
};
use finprime::primality::{decide_intersection_primality, decide_s_primality};
use finprime::sampling::{random_adfa, random_digraph, seeded};
use finprime::{automaton::alphabet_of, Dfa, Error, ProductMode, Status};

#[test]
fn single_edge_gadget_is_minimal() {
    let g = Digraph::new(2, vec![(0, 1)], 0, 1).unwrap();
    let d = minimality_gadget(&g);
    assert_eq!(d.state_count(), minimality_gadget_size(2));
    assert!(is_minimal(&d));
}

#[test]
fn edgeless_gadget_is_not_minimal() {
    let g = Digraph::new(2, vec![], 0, 1).unwrap();
    assert!(!is_minimal(&minimality_gadget(&g)));
}

#[test]
fn sprime_gadget_follows_reachability() {
    let yes = Digraph::new(3, vec![(0, 1), (1, 2)], 0, 2).unwrap();
    let no = Digraph::new(3, vec![(1, 2)], 0, 2).unwrap();
    let a = sprime_gadget(&yes);
    let b = sprime_gadget(&no);
    assert!(is_simple_cosafety(&a) && is_simple_cosafety(&b));
    assert!(is_cosafety(&a));
    assert!(is_minimal(&a));
    assert!(!is_minimal(&b));
    assert_eq!(decide_s_primality(&a).unwrap().status, Status::Prime);
    assert_eq!(decide_s_primality(&b).unwrap().status, Status::Composite);
}

#[test]
fn random_digraphs() {
    let mut rng = seeded(53);
    for _ in 0..100 {
        let n = rng.random_range(1..9);
        let g = random_digraph(&mut rng, n);
        let reach = g.reachable();
        assert_eq!(is_minimal(&minimality_gadget(&g)), reach, "{}", serialize_digraph(&g));
        let s = sprime_gadget(&g);
        assert!(is_simple_cosafety(&s));
        assert_eq!(is_minimal(&s), reach);
    }
}

#[test]
fn digraph_text_round_trip() {
    let text = "digraph g\nnodes 3\nedge 0 1\nedge 0 2\nedge 1 2\ns 0\nt 2\nend\n";
    let g = parse_digraph(text).unwrap();
    assert_eq!(g.name(), "g");
    assert_eq!(g.successors(0), vec![1, 2]);
    assert!(g.reachable());
    assert_eq!(parse_digraph(&serialize_digraph(&g)).unwrap(), g);
}

#[test]
fn outdegree_above_two_is_rejected() {
    let text = "digraph g\nnodes 4\nedge 0 1\nedge 0 2\nedge 0 3\ns 0\nt 3\nend\n";
    assert!(matches!(parse_digraph(text), Err(Error::Syntax { line: 5, .. })));
}

#[test]
fn primefin_of_empty_is_prime() {
    let g = primefin_gadget(&empty_over(&["a", "b"])).unwrap();
    assert!(is_finite_language(&g));
    let v = decide_intersection_primality(&g).unwrap();
    assert_eq!(v.status, Status::Prime);
}

#[test]
fn primefin_of_singleton_is_composite() {
    let ab = alphabet_of(&["a", "b"]);
    let g = primefin_gadget(&singleton_dfa(&[0], &ab).unwrap()).unwrap();
    assert!(is_finite_language(&g));
    assert_eq!(decide_intersection_primality(&g).unwrap().status, Status::Composite);
}

#[test]
fn primefin_pads_unary_alphabets() {
    let a = singleton_dfa(&[0], &alphabet_of(&["a"])).unwrap();
    assert_eq!(padding_letter(a.alphabet()), "b");
    let g = primefin_gadget(&a).unwrap();
    assert_eq!(g.alphabet(), &["a".to_string(), "b".to_string()]);
    assert!(!decide_intersection_primality(&g).unwrap().is_prime());
    assert_eq!(padding_letter(&alphabet_of(&["b"])), "a");
}

#[test]
fn primefin_prime_iff_empty_on_random_inputs() {
    let mut rng = seeded(59);
    let ab = alphabet_of(&["a", "b"]);
    for i in 0..40 {
        let a = random_adfa(&mut rng, 1 + i % 6, &ab, if i % 4 == 0 { 0.0 } else { 0.5 });
        let g = primefin_gadget(&a).unwrap();
        let prime = decide_intersection_primality(&g).unwrap().is_prime();
        assert_eq!(prime, is_empty(&a).0);
    }
    assert!(primefin_gadget(&ab_ba()).is_ok());
}

fn plus_dfa() -> Dfa {
    // Reaches the accepting sink after reading 1 then 0.
    Dfa::from_rows(alphabet_of(&["0", "1"]), 0, &[vec![0, 1], vec![2, 1], vec![2, 2]], &[2]).unwrap()
}

#[test]
fn prime2_of_nonempty_splits_into_counters() {
    let a = plus_dfa();
    let g = prime2_gadget(&a).unwrap();
    let [two, three] = prime2_factors(&a).unwrap();
    let both = product(&two, &three, ProductMode::Intersect).unwrap();
    assert!(equivalent(&both, &g).unwrap());
    assert!(two.state_count() < g.state_count() && three.state_count() < g.state_count());
}

#[test]
fn prime2_of_empty_is_empty() {
    let a = Dfa::from_rows(alphabet_of(&["0", "1"]), 0, &[vec![0, 0], vec![1, 1]], &[1]).unwrap();
    let g = prime2_gadget(&a).unwrap();
    assert!(is_empty(&g).0);
    assert!(prime2_factors(&a).is_err());
}

#[test]
fn prime2_precondition() {
    assert!(prime2_gadget(&ab_ba()).is_err());
}
