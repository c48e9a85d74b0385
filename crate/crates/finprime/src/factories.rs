//! Concrete constructions of the small DFAs used as decomposition factors.
//!
//! Profile-based factories take a [`LinearProfile`] with states
//! `q_0..q_{n+1}` and return automata whose states are a subset of those,
//! numbered in increasing profile order unless stated otherwise. Outputs are
//! never minimized.

use crate::automaton::{validate_alphabet, Dfa, Word};
use crate::classifier::LinearProfile;
use crate::error::{Error, Result};

fn check_letters(alphabet: &[String], w: &[usize]) -> Result<()> {
    validate_alphabet(alphabet)?;
    match w.iter().find(|&&c| c >= alphabet.len()) {
        Some(&c) => Err(Error::UnknownLetter {
            line: None,
            letter: format!("#{c}"),
        }),
        None => Ok(()),
    }
}

/// Builds a DFA from a successor function over `count` states.
fn build(
    alphabet: &[String],
    count: usize,
    initial: usize,
    accepting: impl Fn(usize) -> bool,
    next: impl Fn(usize, usize) -> usize,
) -> Result<Dfa> {
    let k = alphabet.len();
    let mut delta = Vec::with_capacity(count * k);
    for q in 0..count {
        for c in 0..k {
            delta.push(next(q, c));
        }
    }
    Dfa::new(
        alphabet.to_vec(),
        initial,
        delta,
        (0..count).map(accepting).collect(),
    )
}

/// DFA of `{w}`: a chain of `|w| + 1` states and a rejecting sink.
pub fn singleton_dfa(w: &[usize], alphabet: &[String]) -> Result<Dfa> {
    check_letters(alphabet, w)?;
    let m = w.len();
    build(alphabet, m + 2, 0, |q| q == m, |q, c| {
        if q < m && c == w[q] {
            q + 1
        } else {
            m + 1
        }
    })
}

/// DFA of all words of length at most `m`.
pub fn length_cap_dfa(m: usize, alphabet: &[String]) -> Result<Dfa> {
    validate_alphabet(alphabet)?;
    build(alphabet, m + 2, 0, |q| q <= m, |q, _| (q + 1).min(m + 1))
}

/// DFA of `{w}*` for nonempty `w`: a cycle of `|w|` states and a sink.
pub fn star_word_dfa(w: &[usize], alphabet: &[String]) -> Result<Dfa> {
    check_letters(alphabet, w)?;
    if w.is_empty() {
        return Err(Error::Precondition("star word must be nonempty".into()));
    }
    let m = w.len();
    build(alphabet, m + 1, 0, |q| q == 0, |q, c| {
        if q < m && c == w[q] {
            (q + 1) % m
        } else {
            m
        }
    })
}

/// DFA of the words with exactly `k` occurrences of `sigma`.
pub fn letter_count_dfa(sigma: usize, k: usize, alphabet: &[String]) -> Result<Dfa> {
    check_letters(alphabet, &[sigma])?;
    build(alphabet, k + 2, 0, |q| q == k, |q, c| {
        if c == sigma {
            (q + 1).min(k + 1)
        } else {
            q
        }
    })
}

/// DFA over `{0,1}` of the words whose number of `1`s is divisible by `k`.
pub fn mod_counter_dfa(k: usize) -> Result<Dfa> {
    if k == 0 {
        return Err(Error::Precondition("counter modulus must be positive".into()));
    }
    let alphabet = vec!["0".to_string(), "1".to_string()];
    build(&alphabet, k, 0, |q| q == 0, |q, c| if c == 1 { (q + 1) % k } else { q })
}

/// Maps profile indices of the kept states to consecutive numbers.
struct Keep {
    index: Vec<usize>,
}

impl Keep {
    fn without(total: usize, removed: &[usize]) -> Keep {
        let mut index = vec![usize::MAX; total];
        let mut next = 0;
        for (q, slot) in index.iter_mut().enumerate() {
            if !removed.contains(&q) {
                *slot = next;
                next += 1;
            }
        }
        Keep { index }
    }

    fn of(&self, q: usize) -> usize {
        debug_assert!(self.index[q] != usize::MAX);
        self.index[q]
    }

    fn kept(&self) -> Vec<usize> {
        (0..self.index.len())
            .filter(|&q| self.index[q] != usize::MAX)
            .collect()
    }
}

/// Builds a DFA whose states are the given profile indices (in order), with
/// transitions and acceptance expressed in profile indices.
fn build_on(
    p: &LinearProfile,
    kept: &Keep,
    initial: usize,
    accepting: impl Fn(usize) -> bool,
    next: impl Fn(usize, usize) -> usize,
) -> Result<Dfa> {
    let states = kept.kept();
    build(
        p.alphabet(),
        states.len(),
        kept.of(initial),
        |s| accepting(states[s]),
        |s, c| kept.of(next(states[s], c)),
    )
}

/// `q_n` removed, transitions into `q_n` redirected to `q_0`, and `q_0`
/// made accepting.
pub fn factor_loop_zero(p: &LinearProfile) -> Result<Dfa> {
    let n = p.n();
    if n == 0 {
        return Err(Error::Precondition("the loop-to-zero factor needs n >= 1".into()));
    }
    let keep = Keep::without(n + 2, &[n]);
    build_on(
        p,
        &keep,
        0,
        |q| q != n + 1 && (q == 0 || p.is_accepting(q)),
        |q, c| {
            if q == n + 1 {
                return n + 1;
            }
            let t = p.target(q, c);
            if t == n {
                0
            } else {
                t
            }
        },
    )
}

/// The sink removed: sink moves below `q_n` go to `q_n`, and `q_n` moves to
/// `q_d` on every letter.
pub fn factor_loop_d(p: &LinearProfile, d: usize) -> Result<Dfa> {
    let n = p.n();
    if d >= n {
        return Err(Error::Precondition(format!("d = {d} must be below n = {n}")));
    }
    let keep = Keep::without(n + 2, &[n + 1]);
    build_on(p, &keep, 0, |q| p.is_accepting(q), |q, c| {
        if q == n {
            d
        } else {
            let t = p.target(q, c);
            if t == n + 1 {
                n
            } else {
                t
            }
        }
    })
}

/// Validates an index chain `0 = i_0 < .. < i_m = n` with `1 <= m <= n-1`.
pub fn check_chain(n: usize, chain: &[usize]) -> Result<()> {
    let m = chain.len().saturating_sub(1);
    if chain.first() != Some(&0) || chain.last() != Some(&n) {
        return Err(Error::Precondition("chain must start at 0 and end at n".into()));
    }
    if chain.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("chain must be strictly increasing".into()));
    }
    if m < 1 || m + 1 > n {
        return Err(Error::Precondition(format!(
            "chain length m = {m} must lie in 1..=n-1"
        )));
    }
    Ok(())
}

/// All index chains `0 = i_0 < .. < i_m = n` with `1 <= m <= n-1`, ordered
/// by `m` and then lexicographically.
pub fn all_chains(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for m in 1..n {
        // Choose m-1 interior indices from 1..n-1.
        let mut pick: Vec<usize> = (1..m).collect();
        loop {
            let mut chain = vec![0];
            chain.extend(&pick);
            chain.push(n);
            out.push(chain);
            // Advance to the next combination.
            let r = pick.len();
            let mut j = r;
            while j > 0 && pick[j - 1] == n - 1 - (r - j) {
                j -= 1;
            }
            if j == 0 {
                break;
            }
            pick[j - 1] += 1;
            for t in j..r {
                pick[t] = pick[t - 1] + 1;
            }
        }
    }
    out
}

/// Chain factor for `0 = i_0 < .. < i_m = n`.
///
/// With `m < n-1` the states are `q_{i_0}, .., q_{i_m}`, the rejecting
/// `q_{n+1}` and an accepting sink `q_+`: chain states advance on
/// `Σ_{i_j,i_{j+1}}` and fall into `q_+` otherwise, and `q_n` moves to
/// `q_{n+1}`. With `m = n-1` the chain omits one index `j`; the states are
/// the profile states without `q_j`, each advancing on its chain letters
/// and staying put otherwise.
pub fn factor_chain(p: &LinearProfile, chain: &[usize]) -> Result<Dfa> {
    let n = p.n();
    check_chain(n, chain)?;
    let m = chain.len() - 1;
    if m + 1 < n {
        let plus = m + 2;
        let sink = m + 1;
        build(p.alphabet(), m + 3, 0, |s| s != sink, |s, c| {
            if s < m {
                if p.target(chain[s], c) == chain[s + 1] {
                    s + 1
                } else {
                    plus
                }
            } else if s == m {
                sink
            } else {
                s
            }
        })
    } else {
        let j = (1..n)
            .find(|x| !chain.contains(x))
            .expect("a chain with m = n-1 omits one index");
        let keep = Keep::without(n + 2, &[j]);
        build_on(p, &keep, 0, |q| q != n + 1, |q, c| {
            if q == n + 1 {
                return q;
            }
            let goal = if q + 1 == j { j + 1 } else { q + 1 };
            if p.target(q, c) == goal {
                goal
            } else {
                q
            }
        })
    }
}

/// States `q_0..q_n` with `q_n` a rejecting sink: `q_{i-1}` waits for
/// `sigma`, every other state advances on every letter.
pub fn factor_letter_position(p: &LinearProfile, sigma: usize, i: usize) -> Result<Dfa> {
    let n = p.n();
    if sigma >= p.letter_count() {
        return Err(Error::Precondition(format!("letter #{sigma} out of range")));
    }
    if i < 1 || i > n {
        return Err(Error::Precondition(format!("position {i} must lie in 1..=n")));
    }
    if p.target(i - 1, sigma) == i {
        return Err(Error::Precondition(format!(
            "letter {} moves q_{} to q_{i}",
            p.alphabet()[sigma],
            i - 1
        )));
    }
    build(p.alphabet(), n + 1, 0, |q| q != n, |q, c| {
        if q == n {
            n
        } else if q == i - 1 {
            if c == sigma {
                i
            } else {
                q
            }
        } else {
            q + 1
        }
    })
}

/// Largest `i` in `1..=n` with `sigma` not in `Σ_{i-1,i}`.
pub fn letter_position_index(p: &LinearProfile, sigma: usize) -> Option<usize> {
    (1..=p.n()).rev().find(|&i| p.target(i - 1, sigma) != i)
}

/// DFA rejecting exactly the words that contain `w` as a subsequence.
pub fn subsequence_excluder(w: &[usize], alphabet: &[String]) -> Result<Dfa> {
    check_letters(alphabet, w)?;
    let m = w.len();
    build(alphabet, m + 1, 0, |q| q != m, |q, c| {
        if q < m && c == w[q] {
            q + 1
        } else {
            q
        }
    })
}

/// Skip factor for `0 <= i <= n-2` and `2 <= l <= n-i`.
///
/// `q_{i+l-1}` is removed. Below `q_i` the base is simulated with entries
/// into `q_{i+l-1}` redirected to `q_i`. From `q_i` the letters of
/// `Σ' = ∪_{j >= i+l} Σ_{i,j}` jump to `q_{i+l}` and the others move to
/// `q_{i+1}` (a self-loop when `l = 2`). Above `q_i` every state advances on
/// every letter, except that `q_{i+l-2}` loops back to `q_i`.
pub fn factor_skip(p: &LinearProfile, i: usize, l: usize) -> Result<Dfa> {
    let n = p.n();
    if n < 2 || i > n - 2 || l < 2 || l > n - i {
        return Err(Error::Precondition(format!(
            "skip parameters (i={i}, l={l}) out of range for n={n}"
        )));
    }
    let gone = i + l - 1;
    let keep = Keep::without(n + 2, &[gone]);
    let redirect = |t: usize| if t == gone { i } else { t };
    build_on(p, &keep, 0, |q| q != n + 1, |q, c| {
        if q < i {
            redirect(p.target(q, c))
        } else if q == i {
            if p.target(i, c) >= i + l {
                i + l
            } else {
                redirect(i + 1)
            }
        } else if q == n + 1 {
            q
        } else if q == i + l - 2 {
            i
        } else {
            q + 1
        }
    })
}

/// Which extension-factor construction applies to a candidate word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionCase {
    /// Few occurrences of the last letter after position `d`.
    Single,
    /// Many occurrences, and the letter after the first `n` differs from
    /// the last letter.
    Double,
    /// Many occurrences, equal letters at positions `n+1` and `m`, and a
    /// short middle part.
    Triple,
    /// The remaining case.
    Quadruple,
}

impl ExtensionCase {
    /// Short name used in factor file names.
    pub fn tag(self) -> &'static str {
        match self {
            ExtensionCase::Single => "p1",
            ExtensionCase::Double => "p2",
            ExtensionCase::Triple => "p3",
            ExtensionCase::Quadruple => "p4",
        }
    }
}

/// Parameters of the extension-factor construction for a word
/// `w = σ_1..σ_m`, split as `σ_1..σ_d · u · σ_m^x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionParams {
    pub case: ExtensionCase,
    /// Occurrences of `σ_m` in `σ_{d+1}..σ_m`.
    pub l: usize,
    /// Length of the trailing `σ_m` run, capped at `m - d`.
    pub x: usize,
    /// 1 iff `σ_{d+1} != σ_m`.
    pub b: usize,
    /// Occurrences of `σ_m` in `u`.
    pub u_count: usize,
}

/// Computes the case and parameters for `factor_extension`.
pub fn extension_params(n: usize, d: usize, w: &[usize]) -> ExtensionParams {
    let m = w.len();
    // 1-based letter access.
    let s = |k: usize| w[k - 1];
    let last = s(m);
    let l = (d + 1..=m).filter(|&k| s(k) == last).count();
    let mut x = 0;
    while x < m - d && s(m - x) == last {
        x += 1;
    }
    let b = usize::from(s(d + 1) != last);
    let u_count = (d + 1..=m - x).filter(|&k| s(k) == last).count();
    let case = if l <= n - d {
        ExtensionCase::Single
    } else if s(n + 1) != last {
        ExtensionCase::Double
    } else if u_count + d + b < n {
        ExtensionCase::Triple
    } else {
        ExtensionCase::Quadruple
    };
    ExtensionParams {
        case,
        l,
        x,
        b,
        u_count,
    }
}

/// Extension factor: an automaton on `q_0..q_n` whose only rejecting state
/// is `q_d` and that rejects the candidate word `w` while accepting every
/// word of the profile's language.
pub fn factor_extension(p: &LinearProfile, d: usize, w: &[usize]) -> Result<(Dfa, ExtensionParams)> {
    let n = p.n();
    let m = w.len();
    let k = p.letter_count();
    if d >= n || p.is_accepting(d) {
        return Err(Error::Precondition(format!(
            "q_{d} must be a rejecting state below q_n"
        )));
    }
    if m <= n {
        return Err(Error::Precondition(format!(
            "candidate length {m} must exceed n = {n}"
        )));
    }
    if w.iter().any(|&c| c >= k) {
        return Err(Error::UnknownLetter {
            line: None,
            letter: "#".into(),
        });
    }
    if p.run_from(0, &w[..n]) != n {
        return Err(Error::Precondition(
            "the length-n prefix of the candidate must be accepted".into(),
        ));
    }
    let params = extension_params(n, d, w);
    let s = |j: usize| w[j - 1];
    let last = s(m);
    let internal = |what: &str| Error::Internal(format!("extension factor index {what} out of range"));
    // Base moves below the top with sink moves turned into self-loops.
    let follow = |q: usize, c: usize| {
        let t = p.target(q, c);
        if t == n + 1 {
            q
        } else {
            t
        }
    };
    let table: Vec<usize> = match params.case {
        ExtensionCase::Single => {
            let lp = params.l - 1;
            let same: Vec<usize> = (d + 1..m).filter(|&j| s(j) == last).collect();
            let others: Vec<usize> = (d + 1..m)
                .filter(|&j| s(j) != last)
                .take(n - d - lp)
                .collect();
            let mut idx: Vec<usize> = same.into_iter().chain(others).collect();
            idx.sort_unstable();
            if idx.len() != n - d {
                return Err(internal("set I"));
            }
            let mut t = Vec::with_capacity((n + 1) * k);
            for q in 0..=n {
                for c in 0..k {
                    t.push(if q < d {
                        follow(q, c)
                    } else if q == d {
                        d + 1
                    } else if q < n {
                        if c == s(idx[q - d]) {
                            q + 1
                        } else {
                            q
                        }
                    } else if c == last {
                        d
                    } else {
                        q
                    });
                }
            }
            t
        }
        ExtensionCase::Double => {
            let jump = (2 * n + 2).checked_sub(m).filter(|&j| j <= n).ok_or_else(|| internal("2n+2-m"))?;
            let next_letter = s(n + 1);
            let mut t = Vec::with_capacity((n + 1) * k);
            for q in 0..=n {
                for c in 0..k {
                    t.push(if q < n {
                        follow(q, c)
                    } else if c == next_letter {
                        jump
                    } else if c == last {
                        d
                    } else {
                        q
                    });
                }
            }
            t
        }
        ExtensionCase::Triple => {
            let back = (n + 1)
                .checked_sub(params.l + params.b)
                .filter(|&j| j <= n)
                .ok_or_else(|| internal("n+1-l-b"))?;
            let mut t = Vec::with_capacity((n + 1) * k);
            for q in 0..=n {
                for c in 0..k {
                    t.push(if q < d {
                        follow(q, c)
                    } else if q == d {
                        d + 1
                    } else if q < n {
                        if c == last {
                            q + 1
                        } else {
                            q
                        }
                    } else if c == last {
                        back
                    } else {
                        q
                    });
                }
            }
            t
        }
        ExtensionCase::Quadruple => {
            let x = params.x;
            let jump = (2 * n + 2 + x)
                .checked_sub(m)
                .filter(|&j| j <= n)
                .ok_or_else(|| internal("2n+2-m+x"))?;
            let back = d.checked_sub(x).ok_or_else(|| internal("d-x"))?;
            if m - x < 1 {
                return Err(internal("m-x"));
            }
            let before = s(m - x);
            let mut t = Vec::with_capacity((n + 1) * k);
            for q in 0..=n {
                for c in 0..k {
                    t.push(if q < n {
                        follow(q, c)
                    } else if c == last {
                        jump
                    } else if c == before {
                        back
                    } else {
                        q
                    });
                }
            }
            t
        }
    };
    let dfa = Dfa::new(
        p.alphabet().to_vec(),
        0,
        table,
        (0..=n).map(|q| q != d).collect(),
    )?;
    if dfa.run_from(0, w) != d {
        return Err(Error::Internal(format!(
            "extension factor ({}) does not reject its candidate",
            params.case.tag()
        )));
    }
    Ok((dfa, params))
}

/// Word rendering used in factor parameter strings.
pub fn word_tag(alphabet: &[String], w: &Word) -> String {
    if w.is_empty() {
        "eps".into()
    } else {
        w.iter().map(|&c| alphabet[c].as_str()).collect::<Vec<_>>().join(".")
    }
}
