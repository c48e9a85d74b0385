//! Complete deterministic finite automata over an ordered alphabet.
//!
//! Holds the [`Dfa`] value type, the language algebra (product, complement,
//! emptiness, equivalence), canonical minimization and the line-based text
//! format together with DOT export.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A word, stored as letter indices into the alphabet of the automaton it is
/// read by. The empty vector is the empty word.
pub type Word = Vec<usize>;

/// A complete DFA: every state has exactly one successor per letter.
///
/// States are `0..state_count()`. Equality and hashing ignore the display
/// name, so two automata are equal iff alphabet, initial state, transition
/// table and accepting set coincide.
#[derive(Debug, Clone)]
pub struct Dfa {
    name: String,
    alphabet: Vec<String>,
    initial: usize,
    delta: Vec<usize>,
    accepting: Vec<bool>,
}

impl PartialEq for Dfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.delta == other.delta
            && self.accepting == other.accepting
    }
}

impl Eq for Dfa {}

impl Hash for Dfa {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alphabet.hash(state);
        self.initial.hash(state);
        self.delta.hash(state);
        self.accepting.hash(state);
    }
}

/// Set operation applied by [`product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Intersect,
    Union,
    Difference,
}

impl ProductMode {
    fn combine(self, x: bool, y: bool) -> bool {
        match self {
            ProductMode::Intersect => x && y,
            ProductMode::Union => x || y,
            ProductMode::Difference => x && !y,
        }
    }
}

/// Length of the longest accepted word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongestWord {
    /// The language is empty.
    None,
    /// The language is finite and nonempty; its longest word has this length.
    Finite(usize),
    /// The language is infinite.
    Infinite,
}

/// Checks that an alphabet is nonempty, duplicate free and made of symbols
/// that survive the text format.
pub fn validate_alphabet(alphabet: &[String]) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::InvalidAlphabet("alphabet is empty".into()));
    }
    for (i, sym) in alphabet.iter().enumerate() {
        if sym.is_empty() || sym.chars().any(|c| c.is_whitespace() || c == '#') || sym == "--" {
            return Err(Error::InvalidAlphabet(format!("illegal symbol {sym:?}")));
        }
        if alphabet[..i].contains(sym) {
            return Err(Error::InvalidAlphabet(format!("duplicate symbol {sym}")));
        }
    }
    Ok(())
}

/// Builds an owned alphabet from string slices.
pub fn alphabet_of(symbols: &[&str]) -> Vec<String> {
    symbols.iter().map(|s| s.to_string()).collect()
}

impl Dfa {
    /// Creates a DFA from a row-major transition table (`delta[q * k + c]`)
    /// and an accepting flag per state.
    pub fn new(
        alphabet: Vec<String>,
        initial: usize,
        delta: Vec<usize>,
        accepting: Vec<bool>,
    ) -> Result<Dfa> {
        validate_alphabet(&alphabet)?;
        let n = accepting.len();
        let k = alphabet.len();
        if n == 0 {
            return Err(Error::Precondition("a DFA needs at least one state".into()));
        }
        if delta.len() != n * k {
            return Err(Error::Precondition(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                n * k
            )));
        }
        if initial >= n {
            return Err(Error::StateOutOfRange {
                line: None,
                state: initial,
                count: n,
            });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::StateOutOfRange {
                line: None,
                state: bad,
                count: n,
            });
        }
        Ok(Dfa {
            name: "dfa".into(),
            alphabet,
            initial,
            delta,
            accepting,
        })
    }

    /// Creates a DFA from one successor row per state and a list of
    /// accepting state ids.
    pub fn from_rows(
        alphabet: Vec<String>,
        initial: usize,
        rows: &[Vec<usize>],
        accepting: &[usize],
    ) -> Result<Dfa> {
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(rows.len() * k);
        for (q, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Precondition(format!(
                    "row {q} has {} entries, expected {k}",
                    row.len()
                )));
            }
            delta.extend_from_slice(row);
        }
        let mut acc = vec![false; rows.len()];
        for &q in accepting {
            if q >= rows.len() {
                return Err(Error::StateOutOfRange {
                    line: None,
                    state: q,
                    count: rows.len(),
                });
            }
            acc[q] = true;
        }
        Dfa::new(alphabet, initial, delta, acc)
    }

    /// Returns the same automaton under another display name. Whitespace in
    /// the name is replaced by underscores so it survives serialization.
    pub fn with_name(mut self, name: &str) -> Dfa {
        let cleaned: String = name
            .chars()
            .map(|c| if c.is_whitespace() || c == '#' { '_' } else { c })
            .collect();
        self.name = if cleaned.is_empty() { "dfa".into() } else { cleaned };
        self
    }

    /// Display name used by the text format.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Ordered alphabet.
    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    /// Number of letters.
    pub fn letter_count(&self) -> usize {
        self.alphabet.len()
    }

    /// Number of states.
    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    /// Initial state.
    pub fn initial(&self) -> usize {
        self.initial
    }

    /// Whether `q` is accepting.
    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    /// Accepting flags indexed by state.
    pub fn accepting_flags(&self) -> &[bool] {
        &self.accepting
    }

    /// Accepting states in increasing order.
    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accepting[q]).collect()
    }

    /// Successor of `q` under letter index `c`.
    #[inline]
    pub fn next(&self, q: usize, c: usize) -> usize {
        self.delta[q * self.alphabet.len() + c]
    }

    /// Row-major transition table.
    pub fn table(&self) -> &[usize] {
        &self.delta
    }

    /// Index of a symbol in the alphabet.
    pub fn letter_index(&self, symbol: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == symbol)
    }

    /// Parses a whitespace separated list of symbols; `--` (or an empty
    /// string) denotes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(&self.alphabet, text)
    }

    /// Renders a word as space separated symbols, `--` for the empty word.
    pub fn format_word(&self, w: &[usize]) -> String {
        format_word(&self.alphabet, w)
    }

    /// State reached from `q` after reading `w`, without validation.
    pub fn run_from(&self, q: usize, w: &[usize]) -> usize {
        w.iter().fold(q, |s, &c| self.next(s, c))
    }

    fn check_word(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&c| c >= self.alphabet.len()) {
            Some(&c) => Err(Error::UnknownLetter {
                line: None,
                letter: format!("#{c}"),
            }),
            None => Ok(()),
        }
    }
}

/// Parses a word over `alphabet`; `--` or blank text is the empty word.
pub fn parse_word(alphabet: &[String], text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() || text == "--" {
        return Ok(Vec::new());
    }
    text.split_whitespace()
        .map(|sym| {
            alphabet
                .iter()
                .position(|s| s == sym)
                .ok_or_else(|| Error::UnknownLetter {
                    line: None,
                    letter: sym.to_string(),
                })
        })
        .collect()
}

/// Renders a word over `alphabet`, `--` for the empty word.
pub fn format_word(alphabet: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        return "--".into();
    }
    w.iter()
        .map(|&c| alphabet[c].as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// State reached from the initial state after reading `w`.
pub fn run(a: &Dfa, w: &[usize]) -> Result<usize> {
    a.check_word(w)?;
    Ok(a.run_from(a.initial, w))
}

/// Whether `a` accepts `w`.
pub fn accepts(a: &Dfa, w: &[usize]) -> Result<bool> {
    Ok(a.accepting[run(a, w)?])
}

fn check_same_alphabet(a: &Dfa, b: &Dfa) -> Result<()> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet.join(" "),
            right: b.alphabet.join(" "),
        });
    }
    Ok(())
}

/// Dense or hashed index of visited state pairs used by pair searches.
struct PairIndex {
    width: usize,
    dense: Option<Vec<usize>>,
    sparse: HashMap<(usize, usize), usize>,
}

impl PairIndex {
    const DENSE_LIMIT: usize = 1 << 22;

    fn new(na: usize, nb: usize) -> PairIndex {
        let cells = na.saturating_mul(nb);
        PairIndex {
            width: nb,
            dense: (cells <= Self::DENSE_LIMIT).then(|| vec![usize::MAX; cells]),
            sparse: HashMap::new(),
        }
    }

    fn get(&self, p: usize, q: usize) -> Option<usize> {
        match &self.dense {
            Some(v) => {
                let id = v[p * self.width + q];
                (id != usize::MAX).then_some(id)
            }
            None => self.sparse.get(&(p, q)).copied(),
        }
    }

    fn insert(&mut self, p: usize, q: usize, id: usize) {
        match &mut self.dense {
            Some(v) => v[p * self.width + q] = id,
            None => {
                self.sparse.insert((p, q), id);
            }
        }
    }
}

/// Pair construction restricted to the part reachable from the pair of
/// initial states. States are numbered in breadth-first discovery order.
pub fn product(a: &Dfa, b: &Dfa, mode: ProductMode) -> Result<Dfa> {
    check_same_alphabet(a, b)?;
    let k = a.letter_count();
    let mut index = PairIndex::new(a.state_count(), b.state_count());
    let mut pairs = vec![(a.initial, b.initial)];
    index.insert(a.initial, b.initial, 0);
    let mut delta = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        head += 1;
        for c in 0..k {
            let (np, nq) = (a.next(p, c), b.next(q, c));
            let id = match index.get(np, nq) {
                Some(id) => id,
                None => {
                    let id = pairs.len();
                    index.insert(np, nq, id);
                    pairs.push((np, nq));
                    id
                }
            };
            delta.push(id);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| mode.combine(a.accepting[p], b.accepting[q]))
        .collect();
    Ok(Dfa {
        name: format!("{}_x_{}", a.name, b.name),
        alphabet: a.alphabet.clone(),
        initial: 0,
        delta,
        accepting,
    })
}

/// Same states and transitions with the accepting set flipped.
pub fn complement(a: &Dfa) -> Dfa {
    Dfa {
        name: a.name.clone(),
        alphabet: a.alphabet.clone(),
        initial: a.initial,
        delta: a.delta.clone(),
        accepting: a.accepting.iter().map(|&x| !x).collect(),
    }
}

/// States reachable from the initial state, in increasing order.
pub fn reachable_states(a: &Dfa) -> Vec<usize> {
    let seen = reachable_flags(a);
    (0..a.state_count()).filter(|&q| seen[q]).collect()
}

fn reachable_flags(a: &Dfa) -> Vec<bool> {
    let mut seen = vec![false; a.state_count()];
    let mut stack = vec![a.initial];
    seen[a.initial] = true;
    while let Some(q) = stack.pop() {
        for c in 0..a.letter_count() {
            let t = a.next(q, c);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// States from which some accepting state can be reached.
fn coreachable_flags(a: &Dfa) -> Vec<bool> {
    let n = a.state_count();
    let k = a.letter_count();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for q in 0..n {
        for c in 0..k {
            preds[a.next(q, c)].push(q);
        }
    }
    let mut live = a.accepting.clone();
    let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
    while let Some(q) = stack.pop() {
        for &p in &preds[q] {
            if !live[p] {
                live[p] = true;
                stack.push(p);
            }
        }
    }
    live
}

/// Coarsest partition of states compatible with acceptance and transitions,
/// computed by worklist partition refinement. Returns a block id per state.
fn refine_partition(n: usize, k: usize, delta: &[usize], accepting: &[bool]) -> Vec<usize> {
    let mut block_of = vec![0usize; n];
    let acc: Vec<usize> = (0..n).filter(|&q| accepting[q]).collect();
    let rej: Vec<usize> = (0..n).filter(|&q| !accepting[q]).collect();
    if acc.is_empty() || rej.is_empty() {
        return block_of;
    }
    // Inverse transitions in compressed rows: sources of (c, t).
    let mut start = vec![0usize; k * n + 1];
    for q in 0..n {
        for c in 0..k {
            start[c * n + delta[q * k + c] + 1] += 1;
        }
    }
    for i in 0..k * n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut sources = vec![0usize; n * k];
    for q in 0..n {
        for c in 0..k {
            let slot = c * n + delta[q * k + c];
            sources[fill[slot]] = q;
            fill[slot] += 1;
        }
    }

    let mut blocks: Vec<Vec<usize>> = vec![acc, rej];
    for &q in &blocks[1] {
        block_of[q] = 1;
    }
    let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
    let mut in_work: Vec<bool> = vec![false; 2 * k];
    let mut work: Vec<(usize, usize)> = Vec::new();
    for c in 0..k {
        work.push((smaller, c));
        in_work[smaller * k + c] = true;
    }
    let mut marked = vec![false; n];
    let mut hits: Vec<usize> = vec![0; 2];
    let mut touched: Vec<usize> = Vec::new();
    let mut xs: Vec<usize> = Vec::new();
    while let Some((b, c)) = work.pop() {
        in_work[b * k + c] = false;
        xs.clear();
        for &t in &blocks[b] {
            for &s in &sources[start[c * n + t]..start[c * n + t + 1]] {
                if !marked[s] {
                    marked[s] = true;
                    xs.push(s);
                    let y = block_of[s];
                    if hits[y] == 0 {
                        touched.push(y);
                    }
                    hits[y] += 1;
                }
            }
        }
        for &y in &touched {
            if hits[y] < blocks[y].len() {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    blocks[y].iter().partition(|&&q| marked[q]);
                let z = blocks.len();
                for &q in &inside {
                    block_of[q] = z;
                }
                blocks[y] = outside;
                blocks.push(inside);
                hits.push(0);
                in_work.extend(std::iter::repeat(false).take(k));
                for e in 0..k {
                    if in_work[y * k + e] {
                        work.push((z, e));
                        in_work[z * k + e] = true;
                    } else {
                        let pick = if blocks[z].len() <= blocks[y].len() { z } else { y };
                        work.push((pick, e));
                        in_work[pick * k + e] = true;
                    }
                }
            }
        }
        for &y in &touched {
            hits[y] = 0;
        }
        touched.clear();
        for &s in &xs {
            marked[s] = false;
        }
    }
    block_of
}

/// Canonical minimal DFA: unreachable states are dropped, equivalent states
/// merged, and the result is numbered in breadth-first discovery order from
/// the initial state, exploring letters in alphabet order. Two automata with
/// the same language minimize to equal values.
pub fn minimize(a: &Dfa) -> Dfa {
    let k = a.letter_count();
    let reach = reachable_states(a);
    let n = reach.len();
    let mut compact = vec![usize::MAX; a.state_count()];
    for (i, &q) in reach.iter().enumerate() {
        compact[q] = i;
    }
    let mut delta = Vec::with_capacity(n * k);
    for &q in &reach {
        for c in 0..k {
            delta.push(compact[a.next(q, c)]);
        }
    }
    let accepting: Vec<bool> = reach.iter().map(|&q| a.accepting[q]).collect();
    let block_of = refine_partition(n, k, &delta, &accepting);

    // Breadth-first renumbering of the blocks.
    let block_count = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut representative = vec![usize::MAX; block_count];
    for q in 0..n {
        if representative[block_of[q]] == usize::MAX {
            representative[block_of[q]] = q;
        }
    }
    let mut order = vec![usize::MAX; block_count];
    let start = block_of[compact[a.initial]];
    let mut queue = vec![start];
    order[start] = 0;
    let mut head = 0;
    while head < queue.len() {
        let b = queue[head];
        head += 1;
        let q = representative[b];
        for c in 0..k {
            let t = block_of[delta[q * k + c]];
            if order[t] == usize::MAX {
                order[t] = queue.len();
                queue.push(t);
            }
        }
    }
    let mut new_delta = Vec::with_capacity(queue.len() * k);
    let mut new_acc = Vec::with_capacity(queue.len());
    for &b in &queue {
        let q = representative[b];
        for c in 0..k {
            new_delta.push(order[block_of[delta[q * k + c]]]);
        }
        new_acc.push(accepting[q]);
    }
    Dfa {
        name: a.name.clone(),
        alphabet: a.alphabet.clone(),
        initial: 0,
        delta: new_delta,
        accepting: new_acc,
    }
}

/// Number of states of the canonical minimal DFA of `L(a)`.
pub fn index_of(a: &Dfa) -> usize {
    minimize(a).state_count()
}

/// Whether `a` restricted to its reachable states is already minimal.
pub fn is_minimal(a: &Dfa) -> bool {
    reachable_states(a).len() == a.state_count() && index_of(a) == a.state_count()
}

/// Lexicographically least among the shortest words accepted by exactly one
/// of `a` and `b`, or `None` when the languages coincide.
pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Result<Option<Word>> {
    check_same_alphabet(a, b)?;
    Ok(pair_search(a, b, |x, y| x != y))
}

/// Whether `L(a) = L(b)`.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(distinguishing_word(a, b)?.is_none())
}

/// Shortest (then lexicographically least) word in `L(a) \ L(b)`, if any.
pub fn difference_witness(a: &Dfa, b: &Dfa) -> Result<Option<Word>> {
    check_same_alphabet(a, b)?;
    Ok(pair_search(a, b, |x, y| x && !y))
}

/// Whether `L(a) ⊆ L(b)`.
pub fn is_subset(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(difference_witness(a, b)?.is_none())
}

/// Breadth-first search over the reachable pair graph, returning the first
/// word (in length-then-alphabet order) whose pair satisfies `hit`.
fn pair_search(a: &Dfa, b: &Dfa, hit: impl Fn(bool, bool) -> bool) -> Option<Word> {
    let k = a.letter_count();
    let mut index = PairIndex::new(a.state_count(), b.state_count());
    let mut pairs = vec![(a.initial, b.initial)];
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, 0)];
    index.insert(a.initial, b.initial, 0);
    let word_to = |parent: &[(usize, usize)], mut id: usize| {
        let mut w = Vec::new();
        while parent[id].0 != usize::MAX {
            w.push(parent[id].1);
            id = parent[id].0;
        }
        w.reverse();
        w
    };
    if hit(a.accepting[a.initial], b.accepting[b.initial]) {
        return Some(Vec::new());
    }
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        for c in 0..k {
            let (np, nq) = (a.next(p, c), b.next(q, c));
            if index.get(np, nq).is_none() {
                let id = pairs.len();
                index.insert(np, nq, id);
                pairs.push((np, nq));
                parent.push((head, c));
                if hit(a.accepting[np], b.accepting[nq]) {
                    return Some(word_to(&parent, id));
                }
            }
        }
        head += 1;
    }
    None
}

/// Shortest (then lexicographically least) accepted word, or `None` if the
/// language is empty.
pub fn shortest_accepted_word(a: &Dfa) -> Option<Word> {
    let k = a.letter_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; a.state_count()];
    let mut seen = vec![false; a.state_count()];
    let mut queue = VecDeque::from([a.initial]);
    seen[a.initial] = true;
    while let Some(q) = queue.pop_front() {
        if a.accepting[q] {
            let mut w = Vec::new();
            let mut cur = q;
            while let Some((p, c)) = parent[cur] {
                w.push(c);
                cur = p;
            }
            w.reverse();
            return Some(w);
        }
        for c in 0..k {
            let t = a.next(q, c);
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some((q, c));
                queue.push_back(t);
            }
        }
    }
    None
}

/// Emptiness test: `(true, None)` for the empty language, otherwise
/// `(false, Some(shortest accepted word))`.
pub fn is_empty(a: &Dfa) -> (bool, Option<Word>) {
    match shortest_accepted_word(a) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

/// States that are both reachable and co-reachable.
fn useful_flags(a: &Dfa) -> Vec<bool> {
    let r = reachable_flags(a);
    let c = coreachable_flags(a);
    r.iter().zip(&c).map(|(&x, &y)| x && y).collect()
}

/// Whether the useful part of `a` contains a cycle.
fn has_useful_cycle(a: &Dfa, useful: &[bool]) -> bool {
    // Iterative three-colour depth-first search.
    let n = a.state_count();
    let k = a.letter_count();
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if !useful[root] || colour[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root] = 1;
        while let Some(&mut (q, ref mut c)) = stack.last_mut() {
            if *c == k {
                colour[q] = 2;
                stack.pop();
                continue;
            }
            let t = a.next(q, *c);
            *c += 1;
            if !useful[t] {
                continue;
            }
            match colour[t] {
                0 => {
                    colour[t] = 1;
                    stack.push((t, 0));
                }
                1 => return true,
                _ => {}
            }
        }
    }
    false
}

/// Whether `L(a)` is finite: no cycle passes through a state that is both
/// reachable and able to reach acceptance.
pub fn is_finite_language(a: &Dfa) -> bool {
    let useful = useful_flags(a);
    !has_useful_cycle(a, &useful)
}

/// Length of the longest accepted word.
pub fn longest_word_length(a: &Dfa) -> LongestWord {
    let useful = useful_flags(a);
    if !useful[a.initial] {
        return LongestWord::None;
    }
    if has_useful_cycle(a, &useful) {
        return LongestWord::Infinite;
    }
    // Longest path to acceptance over the acyclic useful part.
    let n = a.state_count();
    let k = a.letter_count();
    let mut memo: Vec<Option<usize>> = vec![None; n];
    let mut stack = vec![(a.initial, false)];
    while let Some((q, expanded)) = stack.pop() {
        if memo[q].is_some() {
            continue;
        }
        if !expanded {
            stack.push((q, true));
            for c in 0..k {
                let t = a.next(q, c);
                if useful[t] && memo[t].is_none() {
                    stack.push((t, false));
                }
            }
        } else {
            let mut best = if a.accepting[q] { Some(0) } else { None };
            for c in 0..k {
                let t = a.next(q, c);
                if useful[t] {
                    let cand = memo[t].expect("successor solved") + 1;
                    best = Some(best.map_or(cand, |b: usize| b.max(cand)));
                }
            }
            memo[q] = best;
        }
    }
    LongestWord::Finite(memo[a.initial].expect("initial solved"))
}

/// All accepted words of length at most `max_len`, ordered by length and then
/// alphabetically.
pub fn enumerate_language(a: &Dfa, max_len: usize) -> Vec<Word> {
    let live = coreachable_flags(a);
    let mut out = Vec::new();
    if !live[a.initial] {
        return out;
    }
    let mut frontier: Vec<(Word, usize)> = vec![(Vec::new(), a.initial)];
    for len in 0..=max_len {
        for (w, q) in &frontier {
            if a.accepting[*q] {
                out.push(w.clone());
            }
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &frontier {
            for c in 0..a.letter_count() {
                let t = a.next(*q, c);
                if live[t] {
                    let mut v = w.clone();
                    v.push(c);
                    next.push((v, t));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}

/// All words of exactly `len` letters over `k` letters in alphabetical order.
pub fn all_words(k: usize, len: usize) -> Vec<Word> {
    let mut words: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * k);
        for w in &words {
            for c in 0..k {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        words = next;
    }
    words
}

/// Renders `a` in the line-based text format. Transitions are listed by
/// state and then alphabet order; numbering is taken literally.
pub fn serialize_dfa(a: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dfa {}", a.name);
    let _ = writeln!(out, "alphabet {}", a.alphabet.join(" "));
    let _ = writeln!(out, "states {}", a.state_count());
    let _ = writeln!(out, "initial {}", a.initial);
    let acc: Vec<String> = a.accepting_states().iter().map(|q| q.to_string()).collect();
    if acc.is_empty() {
        out.push_str("accepting\n");
    } else {
        let _ = writeln!(out, "accepting {}", acc.join(" "));
    }
    for q in 0..a.state_count() {
        for (c, sym) in a.alphabet.iter().enumerate() {
            let _ = writeln!(out, "trans {q} {sym} {}", a.next(q, c));
        }
    }
    out.push_str("end\n");
    out
}

fn parse_state(tok: &str, line: usize, count: Option<usize>) -> Result<usize> {
    let q: usize = tok.parse().map_err(|_| Error::Syntax {
        line,
        message: format!("expected a state id, found {tok:?}"),
    })?;
    if let Some(n) = count {
        if q >= n {
            return Err(Error::StateOutOfRange {
                line: Some(line),
                state: q,
                count: n,
            });
        }
    }
    Ok(q)
}

/// Parses the line-based DFA text format.
///
/// `#` starts a comment and blank lines are ignored. The header lines
/// `dfa`, `alphabet`, `states`, `initial` and `accepting` must each appear
/// once before the first `trans` line, and the document ends with `end`.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut name: Option<String> = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<(usize, usize)> = None;
    let mut accepting: Option<Vec<(usize, usize)>> = None;
    let mut table: Vec<Option<usize>> = Vec::new();
    let mut ended = false;
    let mut last_line = 0;
    let syntax = |line: usize, message: &str| Error::Syntax {
        line,
        message: message.to_string(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended {
            return Err(syntax(line, "content after end"));
        }
        let mut toks = content.split_whitespace();
        let keyword = toks.next().unwrap_or("");
        let args: Vec<&str> = toks.collect();
        if keyword != "dfa" && name.is_none() {
            return Err(syntax(line, "document must start with a dfa line"));
        }
        match keyword {
            "dfa" => {
                if name.is_some() {
                    return Err(syntax(line, "duplicate dfa line"));
                }
                if args.len() != 1 {
                    return Err(syntax(line, "dfa line needs exactly one name"));
                }
                name = Some(args[0].to_string());
            }
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line, "duplicate alphabet line"));
                }
                let syms: Vec<String> = args.iter().map(|s| s.to_string()).collect();
                validate_alphabet(&syms).map_err(|e| syntax(line, &e.to_string()))?;
                alphabet = Some(syms);
            }
            "states" => {
                if states.is_some() {
                    return Err(syntax(line, "duplicate states line"));
                }
                if args.len() != 1 {
                    return Err(syntax(line, "states line needs one count"));
                }
                let n: usize = args[0]
                    .parse()
                    .map_err(|_| syntax(line, "state count must be a positive integer"))?;
                if n == 0 {
                    return Err(syntax(line, "state count must be positive"));
                }
                states = Some(n);
            }
            "initial" => {
                if initial.is_some() {
                    return Err(syntax(line, "duplicate initial line"));
                }
                if args.len() != 1 {
                    return Err(syntax(line, "initial line needs one state"));
                }
                initial = Some((parse_state(args[0], line, states)?, line));
            }
            "accepting" => {
                if accepting.is_some() {
                    return Err(syntax(line, "duplicate accepting line"));
                }
                let mut ids = Vec::new();
                for tok in &args {
                    ids.push((parse_state(tok, line, states)?, line));
                }
                accepting = Some(ids);
            }
            "trans" => {
                let (Some(alpha), Some(n)) = (&alphabet, states) else {
                    return Err(syntax(line, "trans before alphabet and states"));
                };
                if initial.is_none() || accepting.is_none() {
                    return Err(syntax(line, "trans before initial and accepting"));
                }
                if args.len() != 3 {
                    return Err(syntax(line, "trans line needs: from letter to"));
                }
                if table.is_empty() {
                    table = vec![None; n * alpha.len()];
                }
                let from = parse_state(args[0], line, Some(n))?;
                let c = alpha
                    .iter()
                    .position(|s| s == args[1])
                    .ok_or_else(|| Error::UnknownLetter {
                        line: Some(line),
                        letter: args[1].to_string(),
                    })?;
                let to = parse_state(args[2], line, Some(n))?;
                let slot = &mut table[from * alpha.len() + c];
                if slot.is_some() {
                    return Err(Error::DuplicateTransition {
                        line,
                        state: from,
                        letter: args[1].to_string(),
                    });
                }
                *slot = Some(to);
            }
            "end" => {
                if !args.is_empty() {
                    return Err(syntax(line, "end takes no arguments"));
                }
                ended = true;
            }
            other => return Err(syntax(line, &format!("unknown keyword {other:?}"))),
        }
    }
    let eof = last_line + 1;
    if !ended {
        return Err(syntax(eof, "missing end line"));
    }
    let name = name.ok_or_else(|| syntax(eof, "missing dfa line"))?;
    let alphabet = alphabet.ok_or_else(|| syntax(eof, "missing alphabet line"))?;
    let n = states.ok_or_else(|| syntax(eof, "missing states line"))?;
    let (init, init_line) = initial.ok_or_else(|| syntax(eof, "missing initial line"))?;
    let acc_ids = accepting.ok_or_else(|| syntax(eof, "missing accepting line"))?;
    if init >= n {
        return Err(Error::StateOutOfRange {
            line: Some(init_line),
            state: init,
            count: n,
        });
    }
    let mut acc = vec![false; n];
    for (q, line) in acc_ids {
        if q >= n {
            return Err(Error::StateOutOfRange {
                line: Some(line),
                state: q,
                count: n,
            });
        }
        acc[q] = true;
    }
    if table.is_empty() {
        table = vec![None; n * alphabet.len()];
    }
    let k = alphabet.len();
    let mut delta = Vec::with_capacity(n * k);
    for q in 0..n {
        for c in 0..k {
            match table[q * k + c] {
                Some(t) => delta.push(t),
                None => {
                    return Err(Error::IncompleteTransition {
                        state: q,
                        letter: alphabet[c].clone(),
                    })
                }
            }
        }
    }
    Ok(Dfa::new(alphabet, init, delta, acc)?.with_name(&name))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders `a` as a DOT digraph. Accepting states are double circles, the
/// initial state receives an entry arrow, and letters sharing a source and
/// target are merged into one comma separated edge label.
pub fn to_dot(a: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(&a.name));
    out.push_str("  rankdir=LR;\n");
    out.push_str("  __start [shape=point, label=\"\"];\n");
    for q in 0..a.state_count() {
        let shape = if a.accepting[q] { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{q}\"];");
    }
    let _ = writeln!(out, "  __start -> q{};", a.initial);
    for q in 0..a.state_count() {
        let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
        for (c, sym) in a.alphabet.iter().enumerate() {
            let t = a.next(q, c);
            match targets.iter_mut().find(|(x, _)| *x == t) {
                Some((_, syms)) => syms.push(sym),
                None => targets.push((t, vec![sym])),
            }
        }
        for (t, syms) in targets {
            let _ = writeln!(
                out,
                "  q{q} -> q{t} [label=\"{}\"];",
                dot_escape(&syms.join(","))
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Vec<String> {
        alphabet_of(&["a", "b"])
    }

    #[test]
    fn parse_reports_missing_transition() {
        let text = "dfa t\nalphabet a b\nstates 2\ninitial 0\naccepting 1\n\
                    trans 0 a 1\ntrans 0 b 0\ntrans 1 a 1\nend\n";
        let err = parse_dfa(text).unwrap_err();
        assert_eq!(
            err.to_string(),
            "incomplete transition function at state 1, letter b"
        );
    }

    #[test]
    fn parse_reports_duplicate_and_range_errors_with_lines() {
        let dup = "dfa t\nalphabet a\nstates 1\ninitial 0\naccepting\ntrans 0 a 0\ntrans 0 a 0\nend\n";
        assert!(matches!(
            parse_dfa(dup),
            Err(Error::DuplicateTransition { line: 7, .. })
        ));
        let range = "dfa t\nalphabet a\nstates 1\ninitial 0\naccepting\ntrans 0 a 3\nend\n";
        assert!(matches!(
            parse_dfa(range),
            Err(Error::StateOutOfRange { line: Some(6), .. })
        ));
        let junk = "dfa t\nalphabet a\nstates 1\nbogus\n";
        assert!(matches!(parse_dfa(junk), Err(Error::Syntax { line: 4, .. })));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\ndfa t # name\n\nalphabet a\nstates 1\ninitial 0\naccepting 0\ntrans 0 a 0\nend\n";
        let a = parse_dfa(text).unwrap();
        assert_eq!(a.state_count(), 1);
        assert!(a.is_accepting(0));
    }

    #[test]
    fn minimize_merges_duplicate_accepting_sinks() {
        let a = Dfa::from_rows(ab(), 0, &[vec![1, 2], vec![1, 1], vec![2, 2]], &[1, 2]).unwrap();
        let m = minimize(&a);
        assert_eq!(m.state_count(), 2);
        assert_eq!(m.accepting_states().len(), 1);
    }

    #[test]
    fn empty_language_minimizes_to_one_rejecting_state() {
        let a = Dfa::from_rows(ab(), 0, &[vec![1, 0], vec![0, 1]], &[]).unwrap();
        let m = minimize(&a);
        assert_eq!(m.state_count(), 1);
        assert!(!m.is_accepting(0));
    }

    #[test]
    fn distinguishing_word_is_least_shortest() {
        let all = Dfa::from_rows(ab(), 0, &[vec![0, 0]], &[0]).unwrap();
        // Accepts everything except words containing "b" at position 2.
        let a = Dfa::from_rows(
            ab(),
            0,
            &[vec![1, 1], vec![2, 3], vec![2, 2], vec![3, 3]],
            &[0, 1, 2],
        )
        .unwrap();
        let w = distinguishing_word(&all, &a).unwrap().unwrap();
        assert_eq!(w, vec![0, 1]);
        assert_eq!(distinguishing_word(&a, &complement(&a)).unwrap(), Some(vec![]));
    }

    #[test]
    fn longest_word_and_enumeration() {
        // {a, ab}
        let a = Dfa::from_rows(
            ab(),
            0,
            &[vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
            &[1, 2],
        )
        .unwrap();
        assert_eq!(longest_word_length(&a), LongestWord::Finite(2));
        assert_eq!(enumerate_language(&a, 5), vec![vec![0], vec![0, 1]]);
        assert!(is_finite_language(&a));
        let star = Dfa::from_rows(ab(), 0, &[vec![0, 0]], &[0]).unwrap();
        assert_eq!(longest_word_length(&star), LongestWord::Infinite);
        assert_eq!(longest_word_length(&complement(&star)), LongestWord::None);
    }

    #[test]
    fn dot_merges_labels() {
        let a = Dfa::from_rows(ab(), 0, &[vec![0, 0]], &[]).unwrap();
        let dot = to_dot(&a);
        assert!(dot.contains("q0 -> q0 [label=\"a,b\"]"));
        assert!(dot.contains("__start -> q0"));
    }
}
