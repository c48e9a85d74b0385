//! Structural predicates on DFAs recognizing finite languages: linearity
//! with its letter-partition profile, safety and co-safety, the uniform
//! maximal word, and the compression-extension property.

use crate::automaton::{longest_word_length, minimize, Dfa, LongestWord, Word};
use crate::error::{Error, Result};

/// Canonical form of a minimal linear acyclic DFA.
///
/// Profile states are `q_0..q_{n+1}`: `q_0` is initial, reading the letters
/// of a longest accepted word visits `q_0, q_1, .., q_n`, and `q_{n+1}` is
/// the rejecting sink. Every transition leads strictly forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProfile {
    n: usize,
    alphabet: Vec<String>,
    targets: Vec<usize>,
    accepting: Vec<bool>,
    base: Dfa,
    to_base: Vec<usize>,
}

impl LinearProfile {
    /// Length of the longest accepted word.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ordered alphabet.
    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    /// Number of letters.
    pub fn letter_count(&self) -> usize {
        self.alphabet.len()
    }

    /// Profile index of the successor of `q_i` under letter `c`.
    #[inline]
    pub fn target(&self, i: usize, c: usize) -> usize {
        self.targets[i * self.alphabet.len() + c]
    }

    /// Letters moving `q_i` to `q_j`, in alphabet order.
    pub fn sigma(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.letter_count())
            .filter(|&c| self.target(i, c) == j)
            .collect()
    }

    /// Whether `q_i` is accepting.
    pub fn is_accepting(&self, i: usize) -> bool {
        self.accepting[i]
    }

    /// Accepting profile indices.
    pub fn accepting_set(&self) -> Vec<usize> {
        (0..=self.n).filter(|&i| self.accepting[i]).collect()
    }

    /// The canonical minimal DFA the profile was derived from.
    pub fn base(&self) -> &Dfa {
        &self.base
    }

    /// State of [`LinearProfile::base`] that plays the role of `q_i`.
    pub fn base_state(&self, i: usize) -> usize {
        self.to_base[i]
    }

    /// Profile index reached from `q_i` after reading `w`.
    pub fn run_from(&self, i: usize, w: &[usize]) -> usize {
        w.iter().fold(i, |q, &c| self.target(q, c))
    }

    /// Whether the profile accepts `w`.
    pub fn accepts(&self, w: &[usize]) -> bool {
        self.accepting[self.run_from(0, w)]
    }

    /// The profile as a DFA numbered `q_0..q_{n+1}`.
    pub fn to_dfa(&self) -> Dfa {
        Dfa::new(
            self.alphabet.clone(),
            0,
            self.targets.clone(),
            self.accepting.clone(),
        )
        .expect("profile tables are well formed")
    }

    /// Builds a profile from explicit forward targets for `q_0..q_{n-1}`
    /// (one row per state, entries in `i+1..=n+1`) and an accepting flag
    /// for each of `q_0..q_n`. Row `q_n` and the sink are implied.
    pub fn from_rows(
        alphabet: Vec<String>,
        rows: &[Vec<usize>],
        accepting: &[bool],
    ) -> Result<LinearProfile> {
        let n = rows.len();
        let k = alphabet.len();
        if accepting.len() != n + 1 || !accepting[n] {
            return Err(Error::Precondition(
                "accepting flags must cover q_0..q_n with q_n accepting".into(),
            ));
        }
        let mut table = Vec::with_capacity((n + 2) * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k || row.iter().any(|&t| t <= i || t > n + 1) {
                return Err(Error::Precondition(format!(
                    "row {i} must hold {k} forward targets in {}..={}",
                    i + 1,
                    n + 1
                )));
            }
            if !row.contains(&(i + 1)) {
                return Err(Error::Precondition(format!(
                    "row {i} has no letter leading to q_{}",
                    i + 1
                )));
            }
            table.extend_from_slice(row);
        }
        table.extend(std::iter::repeat(n + 1).take(2 * k));
        let mut acc = accepting.to_vec();
        acc.push(false);
        let dfa = Dfa::new(alphabet, 0, table.clone(), acc.clone())?;
        let profile = linear_profile(&dfa)?
            .ok_or_else(|| Error::Internal("explicit profile table is not linear".into()))?;
        if profile.targets != table || profile.accepting != acc {
            return Err(Error::Internal("profile relabeling is not the identity".into()));
        }
        Ok(profile)
    }
}

/// Longest accepted word length from every state of a DFA whose useful part
/// is acyclic; `None` for states that cannot reach acceptance.
fn heights(a: &Dfa) -> Vec<Option<usize>> {
    let n = a.state_count();
    let k = a.letter_count();
    let mut memo: Vec<Option<Option<usize>>> = vec![None; n];
    for root in 0..n {
        let mut stack = vec![(root, false)];
        while let Some((q, expanded)) = stack.pop() {
            if memo[q].is_some() {
                continue;
            }
            if !expanded {
                stack.push((q, true));
                for c in 0..k {
                    let t = a.next(q, c);
                    if t != q && memo[t].is_none() {
                        stack.push((t, false));
                    }
                }
            } else {
                let mut best = if a.is_accepting(q) { Some(0) } else { None };
                for c in 0..k {
                    let t = a.next(q, c);
                    if t == q {
                        continue;
                    }
                    if let Some(Some(h)) = memo[t] {
                        best = Some(best.map_or(h + 1, |b: usize| b.max(h + 1)));
                    }
                }
                memo[q] = Some(best);
            }
        }
    }
    memo.into_iter().map(|m| m.flatten()).collect()
}

/// Linear profile of `minimize(a)`, or `None` when the minimal DFA has more
/// than `n + 2` states.
pub fn linear_profile(a: &Dfa) -> Result<Option<LinearProfile>> {
    let base = minimize(a);
    let n = match longest_word_length(&base) {
        LongestWord::Finite(n) => n,
        LongestWord::None => {
            return Err(Error::Precondition("language is empty".into()));
        }
        LongestWord::Infinite => {
            return Err(Error::Precondition("language is infinite".into()));
        }
    };
    if base.state_count() != n + 2 {
        return Ok(None);
    }
    // In a linear minimal ADFA the state q_i is the unique state whose
    // longest accepted continuation has length n - i.
    let h = heights(&base);
    let mut to_base = vec![usize::MAX; n + 2];
    for (q, hq) in h.iter().enumerate() {
        let idx = match hq {
            Some(x) if *x <= n => n - x,
            Some(_) => return Err(Error::Internal("height exceeds n".into())),
            None => n + 1,
        };
        if to_base[idx] != usize::MAX {
            return Err(Error::Internal("two states share a profile index".into()));
        }
        to_base[idx] = q;
    }
    let mut from_base = vec![0; n + 2];
    for (i, &q) in to_base.iter().enumerate() {
        from_base[q] = i;
    }
    let k = base.letter_count();
    let mut targets = Vec::with_capacity((n + 2) * k);
    for i in 0..n + 2 {
        for c in 0..k {
            let t = from_base[base.next(to_base[i], c)];
            if t <= i && !(i == n + 1 && t == n + 1) {
                return Err(Error::Internal("profile transition is not forward".into()));
            }
            targets.push(t);
        }
    }
    let accepting = (0..n + 2).map(|i| base.is_accepting(to_base[i])).collect();
    Ok(Some(LinearProfile {
        n,
        alphabet: base.alphabet().to_vec(),
        targets,
        accepting,
        base,
        to_base,
    }))
}

/// Whether every rejecting state of the minimal DFA is a sink.
pub fn is_safety(a: &Dfa) -> bool {
    let m = minimize(a);
    (0..m.state_count())
        .filter(|&q| !m.is_accepting(q))
        .all(|q| (0..m.letter_count()).all(|c| m.next(q, c) == q))
}

/// Whether every accepting state of the minimal DFA is a sink.
pub fn is_cosafety(a: &Dfa) -> bool {
    let m = minimize(a);
    (0..m.state_count())
        .filter(|&q| m.is_accepting(q))
        .all(|q| (0..m.letter_count()).all(|c| m.next(q, c) == q))
}

/// Whether the minimal DFA is co-safety with exactly one accepting state and
/// all rejecting states mutually reachable.
pub fn is_simple_cosafety(a: &Dfa) -> bool {
    if !is_cosafety(a) {
        return false;
    }
    let m = minimize(a);
    if m.accepting_states().len() != 1 {
        return false;
    }
    let rest: Vec<usize> = (0..m.state_count()).filter(|&q| !m.is_accepting(q)).collect();
    let Some(&root) = rest.first() else {
        return true;
    };
    let n = m.state_count();
    let k = m.letter_count();
    let closure = |forward: bool| {
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(q) = stack.pop() {
            for p in 0..n {
                if m.is_accepting(p) || seen[p] {
                    continue;
                }
                let linked = if forward {
                    (0..k).any(|c| m.next(q, c) == p)
                } else {
                    (0..k).any(|c| m.next(p, c) == q)
                };
                if linked {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        rest.iter().all(|&q| seen[q])
    };
    closure(true) && closure(false)
}

/// Least letter `σ` with `σⁿ` accepted, or `None`. For `n = 0` the empty
/// word is always accepted and the first letter is returned.
pub fn uniform_max_word_letter(p: &LinearProfile) -> Option<usize> {
    (0..p.letter_count()).find(|&c| {
        let mut q = 0;
        for _ in 0..p.n {
            q = p.target(q, c);
        }
        q == p.n
    })
}

/// Outcome of the compression-extension check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CepCheck {
    /// Whether the profile has the compression-extension property.
    pub holds: bool,
    /// A maximal-length accepted word none of whose compressions has only
    /// rejected extensions; present exactly when `holds` is false.
    pub breaching: Option<Word>,
}

/// Decides the compression-extension property.
///
/// For each position `x` in `2..=n` the candidate letters are those of
/// `Σ_{x-1,x}` that move every `q_i` with `i <= x-2` to some `q_j` with
/// `j < x`. The property fails exactly when every position has a candidate;
/// the breaching word then uses the least letter of `Σ_{0,1}` followed by
/// the least candidate of each position. With `n = 1` no word admits a
/// compression, so the property fails with the least accepted letter.
pub fn has_cep(p: &LinearProfile) -> Result<CepCheck> {
    let n = p.n;
    if n == 0 {
        return Err(Error::Precondition(
            "the compression-extension property needs n >= 1".into(),
        ));
    }
    let first = *p
        .sigma(0, 1)
        .first()
        .ok_or_else(|| Error::Internal("empty Sigma_{0,1}".into()))?;
    let mut word = vec![first];
    for x in 2..=n {
        let candidate = p
            .sigma(x - 1, x)
            .into_iter()
            .find(|&c| (0..=x - 2).all(|i| p.target(i, c) < x));
        match candidate {
            Some(c) => word.push(c),
            None => {
                return Ok(CepCheck {
                    holds: true,
                    breaching: None,
                })
            }
        }
    }
    Ok(CepCheck {
        holds: false,
        breaching: Some(word),
    })
}

/// All compressions `σ_1..σ_i σ_{i+l}..σ_n` of a word of length `n`, with
/// their parameters `(i, l)`, for `0 <= i <= n-2` and `2 <= l <= n-i`.
pub fn compressions(w: &[usize]) -> Vec<(usize, usize, Word)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for l in 2..=n - i {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(&w[i + l - 1..]);
            out.push((i, l, v));
        }
    }
    out
}

/// Least `d < n` with `q_d` rejecting, or `None` for safety profiles.
pub fn interior_rejecting_state(p: &LinearProfile) -> Option<usize> {
    (0..p.n).find(|&d| !p.accepting[d])
}
