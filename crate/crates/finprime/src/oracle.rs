//! Brute-force ground truth: exhaustive enumeration of small DFAs, the
//! intersection of all smaller DFAs containing a language, a literal
//! compression-extension check, and independent certificate verification.

use std::collections::{HashMap, HashSet};

use crate::automaton::{
    accepts, all_words, difference_witness, distinguishing_word, index_of, is_subset,
    longest_word_length, minimize, product, Dfa, LongestWord, ProductMode, Word,
};
use crate::classifier::{compressions, LinearProfile};
use crate::error::{Error, Result};
use crate::primality::{Branch, Decomposition, DecompositionMode, PrimalityVerdict, Status};

/// Caps for the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest number of states of an enumerated candidate factor.
    pub max_factor_states: usize,
    /// Largest total number of enumerated DFAs.
    pub max_enumerated_dfas: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_factor_states: 4,
            max_enumerated_dfas: 2_000_000,
        }
    }
}

/// Word count per length explored before falling back to refinement.
const MAX_SEARCH_WORDS: usize = 1 << 16;

/// Rejecting candidates compared when refining a partial intersection.
const CUT_CANDIDATES: usize = 16;

/// Accumulators above this many states abort the intersection.
const ACCUMULATOR_VALVE: usize = 10_000;

/// Number of complete DFAs with `k` states over `letters` letters and a fixed
/// initial state: `k^(k·letters) · 2^k`.
pub fn dfa_count(k: usize, letters: usize) -> Option<u64> {
    let tables = (k as u64).checked_pow((k * letters) as u32)?;
    tables.checked_mul(1u64.checked_shl(k as u32)?)
}

/// Iterator over every complete DFA with `k` states, initial state 0, in
/// lexicographic order of (transition table, accepting bitmask).
pub struct DfaEnumerator {
    alphabet: Vec<String>,
    k: usize,
    table: Vec<usize>,
    mask: u64,
    done: bool,
}

impl Iterator for DfaEnumerator {
    type Item = Dfa;

    fn next(&mut self) -> Option<Dfa> {
        if self.done {
            return None;
        }
        let accepting = (0..self.k).map(|q| self.mask >> (self.k - 1 - q) & 1 == 1).collect();
        let dfa = Dfa::new(self.alphabet.clone(), 0, self.table.clone(), accepting)
            .expect("enumerated tables are well formed");
        // Advance: acceptance mask first, then the table as an odometer.
        self.mask += 1;
        if self.mask == 1 << self.k {
            self.mask = 0;
            let mut pos = self.table.len();
            loop {
                if pos == 0 {
                    self.done = true;
                    break;
                }
                pos -= 1;
                self.table[pos] += 1;
                if self.table[pos] < self.k {
                    break;
                }
                self.table[pos] = 0;
            }
        }
        Some(dfa)
    }
}

/// All complete DFAs with exactly `k` states over `alphabet`.
pub fn enumerate_dfas(k: usize, alphabet: &[String], limits: &OracleLimits) -> Result<DfaEnumerator> {
    crate::automaton::validate_alphabet(alphabet)?;
    if k == 0 || k > 63 {
        return Err(Error::Precondition(format!("state count {k} out of range")));
    }
    let count = dfa_count(k, alphabet.len()).unwrap_or(u64::MAX);
    if count > limits.max_enumerated_dfas {
        return Err(Error::ResourceLimit(format!(
            "{count} DFAs with {k} states exceed the enumeration cap {}",
            limits.max_enumerated_dfas
        )));
    }
    Ok(DfaEnumerator {
        alphabet: alphabet.to_vec(),
        k,
        table: vec![0; k * alphabet.len()],
        mask: 0,
        done: false,
    })
}

/// Every distinct minimal DFA recognizing a nonempty finite language with
/// index between 2 and `max_index`, ordered by index and then by
/// enumeration order.
///
/// Candidates are built directly in acyclic shape: non-sink states
/// `0..k-2` in topological order, each moving to a later state or to the
/// sink `k-1`, with every accepting subset.
pub fn minimal_adfas(max_index: usize, alphabet: &[String]) -> Result<Vec<Dfa>> {
    crate::automaton::validate_alphabet(alphabet)?;
    let letters = alphabet.len();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for k in 2..=max_index {
        let sink = k - 1;
        // Digit j of the odometer is the target of (state j / letters).
        let slots = (k - 1) * letters;
        let low = |slot: usize| slot / letters + 1;
        let mut table: Vec<usize> = (0..slots).map(low).collect();
        loop {
            let mut delta = table.clone();
            delta.extend(std::iter::repeat(sink).take(letters));
            for mask in 1u64..(1 << (k - 1)) {
                let accepting: Vec<bool> = (0..k).map(|q| q < sink && mask >> q & 1 == 1).collect();
                let dfa = Dfa::new(alphabet.to_vec(), 0, delta.clone(), accepting)?;
                let m = minimize(&dfa);
                if m.state_count() == k && seen.insert(m.clone()) {
                    out.push(m);
                }
            }
            let mut pos = slots;
            let mut finished = true;
            while pos > 0 {
                pos -= 1;
                table[pos] += 1;
                if table[pos] <= sink {
                    finished = false;
                    break;
                }
                table[pos] = low(pos);
            }
            if finished {
                break;
            }
        }
    }
    Ok(out)
}

/// Acceptance keys of every basis member over the words up to one length,
/// with the members ordered by how many of those words they accept.
struct Horizon {
    words: Vec<Word>,
    keys: Vec<u64>,
    order: Vec<usize>,
}

/// Reusable brute-force oracle over a fixed alphabet. Enumerates every DFA
/// up to the factor bound once and keeps one canonical minimal DFA per
/// language.
pub struct AlphaOracle {
    alphabet: Vec<String>,
    limits: OracleLimits,
    basis: Vec<Dfa>,
    horizons: HashMap<usize, Horizon>,
}

/// Largest number of short words used as a grouping key.
const MAX_KEY_WORDS: usize = 64;

impl AlphaOracle {
    /// Enumerates all DFAs with at most `limits.max_factor_states` states.
    pub fn new(alphabet: &[String], limits: OracleLimits) -> Result<AlphaOracle> {
        crate::automaton::validate_alphabet(alphabet)?;
        let letters = alphabet.len();
        let mut total = 0u64;
        for k in 1..=limits.max_factor_states {
            total = total.saturating_add(dfa_count(k, letters).unwrap_or(u64::MAX));
        }
        if total > limits.max_enumerated_dfas {
            return Err(Error::ResourceLimit(format!(
                "{total} DFAs with at most {} states exceed the enumeration cap {}",
                limits.max_factor_states, limits.max_enumerated_dfas
            )));
        }
        let mut seen = HashSet::new();
        let mut basis = Vec::new();
        for k in 1..=limits.max_factor_states {
            for dfa in enumerate_dfas(k, alphabet, &limits)? {
                let m = minimize(&dfa);
                if seen.insert(m.clone()) {
                    basis.push(m);
                }
            }
        }
        basis.sort_by_key(Dfa::state_count);
        Ok(AlphaOracle {
            alphabet: alphabet.to_vec(),
            limits,
            basis,
            horizons: HashMap::new(),
        })
    }

    /// Distinct languages of index at most the factor bound.
    pub fn basis_size(&self) -> usize {
        self.basis.len()
    }

    fn members(&self, bound: usize) -> impl Iterator<Item = &Dfa> {
        self.basis.iter().take_while(move |b| b.state_count() <= bound)
    }

    fn check(&self, a: &Dfa) -> Result<(Dfa, usize)> {
        if a.alphabet() != self.alphabet.as_slice() {
            return Err(Error::AlphabetMismatch {
                left: a.alphabet().join(" "),
                right: self.alphabet.join(" "),
            });
        }
        let m = minimize(a);
        let ind = m.state_count();
        if ind - 1 > self.limits.max_factor_states {
            return Err(Error::ResourceLimit(format!(
                "index {ind} needs factors with {} states, above the bound {}",
                ind - 1,
                self.limits.max_factor_states
            )));
        }
        Ok((m, ind))
    }

    /// Minimal DFA of the intersection of all minimal DFAs with index below
    /// `ind(a)` whose language contains `L(a)`; the all-accepting DFA when
    /// there are none.
    pub fn intersection(&mut self, a: &Dfa) -> Result<Dfa> {
        let (m, ind) = self.check(a)?;
        let bound = ind - 1;
        let letters = self.alphabet.len();
        let mut acc = Dfa::new(self.alphabet.clone(), 0, vec![0; letters], vec![true])?;
        if bound == 0 {
            return Ok(acc);
        }
        let supersets = self.supersets(&m, bound)?;
        for b in supersets {
            if contained_in(&acc, b) {
                continue;
            }
            acc = minimize(&product(&acc, b, ProductMode::Intersect)?);
            if acc == m {
                break;
            }
            if acc.state_count() > ACCUMULATOR_VALVE {
                return Err(Error::ResourceLimit(format!(
                    "accumulator exceeded {ACCUMULATOR_VALVE} states"
                )));
            }
        }
        Ok(acc)
    }

    /// Members of index at most `bound` containing `L(m)`, the most
    /// restrictive first. For a finite language the containment test
    /// compares acceptance keys over the words up to its longest length,
    /// which is exact because `L(m)` lies inside those words.
    fn supersets(&mut self, m: &Dfa, bound: usize) -> Result<Vec<&Dfa>> {
        let letters = self.alphabet.len();
        let horizon = match longest_word_length(m) {
            LongestWord::Finite(n) => Some(n),
            _ => None,
        }
        .filter(|&n| {
            (0..=n)
                .try_fold(0usize, |acc, len| letters.checked_pow(len as u32).map(|x| acc + x))
                .is_some_and(|w| w <= MAX_KEY_WORDS)
        });
        let Some(n) = horizon else {
            let mut out = Vec::new();
            for b in self.members(bound) {
                if is_subset(m, b)? {
                    out.push(b);
                }
            }
            return Ok(out);
        };
        if !self.horizons.contains_key(&n) {
            let words: Vec<Word> = (0..=n).flat_map(|len| all_words(letters, len)).collect();
            let keys: Vec<u64> = self.basis.iter().map(|b| key_of(b, &words)).collect();
            let mut order: Vec<usize> = (0..self.basis.len()).collect();
            order.sort_by_key(|&i| (keys[i].count_ones(), self.basis[i].state_count()));
            self.horizons.insert(n, Horizon { words, keys, order });
        }
        let h = &self.horizons[&n];
        let key = key_of(m, &h.words);
        Ok(h.order
            .iter()
            .filter(|&&i| self.basis[i].state_count() <= bound && h.keys[i] & key == key)
            .map(|&i| &self.basis[i])
            .collect())
    }

    /// Oracle verdict: composite iff the intersection equals `L(a)`;
    /// otherwise prime with the shortest word of the difference.
    ///
    /// Refines a partial intersection: while it still accepts a word outside
    /// `L(a)`, the shortest such word is either rejected by some candidate
    /// factor, which is then added, or accepted by all of them, in which case
    /// it is the shortest word of the full difference.
    pub fn primality(&mut self, a: &Dfa) -> Result<PrimalityVerdict> {
        let (m, ind) = self.check(a)?;
        let alphabet = self.alphabet.clone();
        let letters = alphabet.len();
        let supersets = if ind > 1 { self.supersets(&m, ind - 1)? } else { Vec::new() };
        let witness = match short_common_word(&m, &supersets, letters) {
            Some(w) => Some(w),
            None => {
                let mut acc = Dfa::new(alphabet, 0, vec![0; letters], vec![true])?;
                loop {
                    let Some(w) = difference_witness(&acc, &m)? else {
                        break None;
                    };
                    let mut best: Option<Dfa> = None;
                    let cuts = supersets
                        .iter()
                        .filter(|b| !b.is_accepting(b.run_from(b.initial(), &w)))
                        .take(CUT_CANDIDATES);
                    for b in cuts {
                        let next = minimize(&product(&acc, b, ProductMode::Intersect)?);
                        if best.as_ref().is_none_or(|d| next.state_count() < d.state_count()) {
                            best = Some(next);
                        }
                    }
                    match best {
                        Some(d) => acc = d,
                        None => break Some(w),
                    }
                    if acc.state_count() > ACCUMULATOR_VALVE {
                        return Err(Error::ResourceLimit(format!(
                            "partial intersection exceeded {ACCUMULATOR_VALVE} states"
                        )));
                    }
                }
            }
        };
        Ok(PrimalityVerdict {
            status: if witness.is_some() { Status::Prime } else { Status::Composite },
            branch: Branch::Oracle,
            witness,
            notes: String::new(),
        })
    }

    /// Whether `w` is rejected by `a` and accepted by every smaller DFA
    /// containing `L(a)`.
    pub fn verify_witness(&mut self, a: &Dfa, w: &[usize]) -> Result<bool> {
        if accepts(a, w)? {
            return Ok(false);
        }
        let (m, ind) = self.check(a)?;
        if ind == 1 {
            return Ok(true);
        }
        let supersets = self.supersets(&m, ind - 1)?;
        Ok(supersets.iter().all(|b| b.is_accepting(b.run_from(b.initial(), w))))
    }
}

/// Shortest word outside `L(m)` accepted by every DFA in `supersets`,
/// searched in length-lexicographic order over the lengths whose word count
/// stays within [`MAX_SEARCH_WORDS`]. `None` when no such word is that short.
fn short_common_word(m: &Dfa, supersets: &[&Dfa], letters: usize) -> Option<Word> {
    let mut order: Vec<usize> = (0..supersets.len()).collect();
    let mut len = 0u32;
    while letters.checked_pow(len).is_some_and(|count| count <= MAX_SEARCH_WORDS) {
        for w in all_words(letters, len as usize) {
            if m.is_accepting(m.run_from(m.initial(), &w)) {
                continue;
            }
            let rejecting = order.iter().position(|&i| {
                let b = supersets[i];
                !b.is_accepting(b.run_from(b.initial(), &w))
            });
            match rejecting {
                Some(0) => {}
                Some(p) => order[..=p].rotate_right(1),
                None => return Some(w),
            }
        }
        len += 1;
    }
    None
}

/// Whether `L(a) ⊆ L(b)`, by a search over reachable state pairs.
fn contained_in(a: &Dfa, b: &Dfa) -> bool {
    let k = a.letter_count();
    let nb = b.state_count();
    let mut seen = vec![false; a.state_count() * nb];
    let mut stack = vec![(a.initial(), b.initial())];
    seen[a.initial() * nb + b.initial()] = true;
    while let Some((p, q)) = stack.pop() {
        if a.is_accepting(p) && !b.is_accepting(q) {
            return false;
        }
        for c in 0..k {
            let (x, y) = (a.next(p, c), b.next(q, c));
            if !seen[x * nb + y] {
                seen[x * nb + y] = true;
                stack.push((x, y));
            }
        }
    }
    true
}

fn key_of(d: &Dfa, words: &[Word]) -> u64 {
    words.iter().enumerate().fold(0u64, |key, (i, w)| {
        if d.is_accepting(d.run_from(d.initial(), w)) {
            key | 1 << i
        } else {
            key
        }
    })
}

/// Minimal DFA of the intersection of all minimal DFAs with index below
/// `ind(a)` whose language contains `L(a)`.
pub fn alpha_intersection(a: &Dfa, limits: OracleLimits) -> Result<Dfa> {
    AlphaOracle::new(a.alphabet(), factor_limits(a, limits))?.intersection(a)
}

/// Oracle primality verdict.
pub fn oracle_primality(a: &Dfa, limits: OracleLimits) -> Result<PrimalityVerdict> {
    AlphaOracle::new(a.alphabet(), factor_limits(a, limits))?.primality(a)
}

/// Whether `w` is a primality witness of `a`.
pub fn verify_witness(a: &Dfa, w: &[usize], limits: OracleLimits) -> Result<bool> {
    AlphaOracle::new(a.alphabet(), factor_limits(a, limits))?.verify_witness(a, w)
}

/// Narrows the factor bound to what the index of `a` needs, so one-shot
/// calls do not enumerate larger DFAs than necessary; errors when the index
/// needs more than the configured bound.
fn factor_limits(a: &Dfa, limits: OracleLimits) -> OracleLimits {
    let need = index_of(a).saturating_sub(1);
    OracleLimits {
        max_factor_states: if need <= limits.max_factor_states {
            need.max(1)
        } else {
            // Kept above the bound so the index check reports the problem.
            limits.max_factor_states
        },
        ..limits
    }
}

/// Literal compression-extension check: every accepted word of length `n`
/// must have a compression whose run ends in `q_n` or the sink.
pub fn oracle_cep(p: &LinearProfile, max_words: usize) -> Result<bool> {
    let n = p.n();
    if n == 0 {
        return Err(Error::Precondition(
            "the compression-extension property needs n >= 1".into(),
        ));
    }
    let mut words: Vec<Word> = vec![Vec::new()];
    for i in 1..=n {
        let letters = p.sigma(i - 1, i);
        let mut next = Vec::with_capacity(words.len() * letters.len());
        for w in &words {
            for &c in &letters {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        if next.len() > max_words {
            return Err(Error::ResourceLimit(format!(
                "more than {max_words} accepted words of length {n}"
            )));
        }
        words = next;
    }
    Ok(words.iter().all(|w| {
        compressions(w)
            .iter()
            .any(|(_, _, v)| p.run_from(0, v) >= n)
    }))
}

/// Outcome of [`verify_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub diagnostic: String,
    /// Shortest word on which the combined language and `L(a)` differ.
    pub word: Option<Word>,
}

impl VerifyReport {
    fn fail(diagnostic: String, word: Option<Word>) -> VerifyReport {
        VerifyReport {
            ok: false,
            diagnostic,
            word,
        }
    }
}

/// Checks a decomposition: the bound against the index (or the size for
/// the S notion), every factor size against the bound, and exact equality
/// of the combined language with `L(a)`.
pub fn verify_decomposition(a: &Dfa, d: &Decomposition) -> VerifyReport {
    let ind = index_of(a);
    let bound_ok = match d.mode {
        DecompositionMode::Intersection => d.bound < ind,
        DecompositionMode::Union | DecompositionMode::Dnf => d.bound <= ind,
        DecompositionMode::SizeIntersection => d.bound < a.state_count(),
    };
    if !bound_ok {
        return VerifyReport::fail(
            format!("bound {} too large for index {ind}", d.bound),
            None,
        );
    }
    for f in d.factors() {
        let size = f.dfa.state_count();
        let fits = if d.mode.strict() { size < d.bound } else { size <= d.bound };
        if !fits {
            return VerifyReport::fail(
                format!("factor {} has {size} states, bound {}", f.file_name(), d.bound),
                None,
            );
        }
        if f.dfa.alphabet() != a.alphabet() {
            return VerifyReport::fail(format!("factor {} alphabet mismatch", f.file_name()), None);
        }
    }
    let single_term = matches!(
        d.mode,
        DecompositionMode::Intersection | DecompositionMode::SizeIntersection
    );
    if single_term && d.terms.len() != 1 {
        return VerifyReport::fail(format!("{} terms in an intersection", d.terms.len()), None);
    }
    if d.mode == DecompositionMode::Union && d.terms.iter().any(|t| t.len() != 1) {
        return VerifyReport::fail("union terms must hold one factor".into(), None);
    }
    let combined = match combine(a.alphabet(), d) {
        Ok(c) => c,
        Err(e) => return VerifyReport::fail(e.to_string(), None),
    };
    match distinguishing_word(&combined, a) {
        Ok(None) => VerifyReport {
            ok: true,
            diagnostic: "ok".into(),
            word: None,
        },
        Ok(Some(w)) => {
            let side = if accepts(a, &w).unwrap_or(false) {
                "missing from"
            } else {
                "extra in"
            };
            VerifyReport::fail(format!("word {side} the combined language"), Some(w))
        }
        Err(e) => VerifyReport::fail(e.to_string(), None),
    }
}

fn combine(alphabet: &[String], d: &Decomposition) -> Result<Dfa> {
    let mut union = Dfa::new(alphabet.to_vec(), 0, vec![0; alphabet.len()], vec![false])?;
    for term in &d.terms {
        let inter = crate::primality::intersect_all(alphabet, term.iter().map(|f| &f.dfa))?;
        union = minimize(&product(&union, &inter, ProductMode::Union)?);
    }
    Ok(union)
}
