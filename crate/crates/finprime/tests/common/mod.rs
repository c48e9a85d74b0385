#![allow(dead_code)]

use finprime::automaton::alphabet_of;
use finprime::Dfa;

/// Three-letter linear safety DFA without the compression-extension property.
pub fn chain3() -> Dfa {
    Dfa::from_rows(
        alphabet_of(&["a1", "a2", "a3"]),
        0,
        &[vec![1, 1, 2], vec![4, 2, 2], vec![4, 4, 3], vec![4, 4, 4], vec![4, 4, 4]],
        &[0, 1, 2, 3],
    )
    .unwrap()
    .with_name("chain3")
}

/// Linear safety DFA over {a, b} with breaching word aab.
pub fn prime5() -> Dfa {
    Dfa::from_rows(
        alphabet_of(&["a", "b"]),
        0,
        &[vec![1, 2], vec![2, 2], vec![4, 3], vec![4, 4], vec![4, 4]],
        &[0, 1, 2, 3],
    )
    .unwrap()
}

/// {ab, ba} over {a, b}.
pub fn ab_ba() -> Dfa {
    Dfa::from_rows(
        alphabet_of(&["a", "b"]),
        0,
        &[vec![1, 2], vec![4, 3], vec![3, 4], vec![4, 4], vec![4, 4]],
        &[3],
    )
    .unwrap()
}

/// {ε, a} over {a}.
pub fn epsilon_or_a() -> Dfa {
    Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![1], vec![2], vec![2]], &[0, 1]).unwrap()
}

/// {ε, a, b, ab} over {a, b}.
pub fn eps_a_b_ab() -> Dfa {
    Dfa::from_rows(alphabet_of(&["a", "b"]), 0, &[vec![1, 2], vec![3, 2], vec![3, 3], vec![3, 3]], &[0, 1, 2])
        .unwrap()
}

/// {b, ab} over {a, b}.
pub fn b_ab() -> Dfa {
    Dfa::from_rows(alphabet_of(&["a", "b"]), 0, &[vec![1, 2], vec![3, 2], vec![3, 3], vec![3, 3]], &[2]).unwrap()
}

pub fn empty_over(symbols: &[&str]) -> Dfa {
    let k = symbols.len();
    Dfa::new(alphabet_of(symbols), 0, vec![0; k], vec![false]).unwrap()
}

pub fn word(a: &Dfa, text: &str) -> Vec<usize> {
    a.parse_word(text).unwrap()
}
