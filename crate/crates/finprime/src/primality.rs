//! Primality verdicts with certificates for DFAs recognizing finite
//! languages, under intersection, union, DNF and size-based (S) notions.

use std::collections::HashSet;

use crate::automaton::{
    accepts, all_words, complement, index_of, is_finite_language, longest_word_length, minimize,
    product, Dfa, LongestWord, ProductMode, Word,
};
use crate::classifier::{
    has_cep, interior_rejecting_state, is_safety, is_simple_cosafety, linear_profile,
    uniform_max_word_letter, LinearProfile,
};
use crate::error::{Error, Result};
use crate::factories::{
    all_chains, factor_chain, factor_extension, factor_letter_position, factor_loop_d,
    factor_loop_zero, factor_skip, length_cap_dfa, letter_count_dfa, letter_position_index,
    singleton_dfa, star_word_dfa, subsequence_excluder, word_tag,
};

/// Prime or composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Prime,
    Composite,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Prime => "Prime",
            Status::Composite => "Composite",
        }
    }
}

/// The case of the characterization that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The language is empty.
    EmptyLanguage,
    /// Linear, and `σⁿ` is accepted for some letter `σ`.
    LinearSigmaN,
    /// Linear safety DFA without the compression-extension property.
    SafetyNoCep,
    /// The minimal DFA has more than `n + 2` states.
    NonLinear,
    /// Linear, no uniform maximal word, and not a safety DFA.
    NonSafety,
    /// Linear safety DFA with the compression-extension property.
    Cep,
    /// Linear (union notion).
    Linear,
    /// Linear without a uniform maximal word (DNF notion).
    NoSigmaN,
    /// More states than the index (S notion).
    NonMinimal,
    /// Minimal simple co-safety DFA (S notion).
    SimpleCosafetyMinimal,
    /// Verdict computed by brute-force enumeration.
    Oracle,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::EmptyLanguage => "empty-language",
            Branch::LinearSigmaN => "linear+sigma^n",
            Branch::SafetyNoCep => "safety+noCEP",
            Branch::NonLinear => "non-linear",
            Branch::NonSafety => "non-safety",
            Branch::Cep => "CEP",
            Branch::Linear => "linear",
            Branch::NoSigmaN => "no-sigma^n",
            Branch::NonMinimal => "non-minimal",
            Branch::SimpleCosafetyMinimal => "simple-cosafety+minimal",
            Branch::Oracle => "oracle",
        }
    }
}

/// A verdict with its reason and, for prime DFAs, a primality witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub status: Status,
    pub branch: Branch,
    pub witness: Option<Word>,
    pub notes: String,
}

impl PrimalityVerdict {
    fn new(status: Status, branch: Branch) -> PrimalityVerdict {
        PrimalityVerdict {
            status,
            branch,
            witness: None,
            notes: String::new(),
        }
    }

    pub fn is_prime(&self) -> bool {
        self.status == Status::Prime
    }
}

/// How the factors of a decomposition are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionMode {
    /// One term; the language is the intersection of its factors, each of
    /// size at most the bound, and the bound is below the index.
    Intersection,
    /// Single-factor terms; the language is their union, each factor of
    /// size strictly below the bound, and the bound is at most the index.
    Union,
    /// Union of intersections, sizes strictly below the bound, which is at
    /// most the index.
    Dnf,
    /// One term as for `Intersection`, with the bound below the number of
    /// states of the decomposed DFA instead of its index.
    SizeIntersection,
}

impl DecompositionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionMode::Intersection => "cap",
            DecompositionMode::Union => "cup",
            DecompositionMode::Dnf => "dnf",
            DecompositionMode::SizeIntersection => "s",
        }
    }

    /// Whether factor sizes must be strictly below the bound.
    pub fn strict(self) -> bool {
        matches!(self, DecompositionMode::Union | DecompositionMode::Dnf)
    }
}

/// One factor of a decomposition with its construction family and
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub family: String,
    pub params: String,
    pub dfa: Dfa,
}

impl Factor {
    fn new(family: &str, params: String, dfa: Dfa) -> Factor {
        let name = format!("{family}_{params}");
        Factor {
            family: family.to_string(),
            params,
            dfa: dfa.with_name(&name),
        }
    }

    /// Deterministic file name `factor_<family>_<params>.dfa`.
    pub fn file_name(&self) -> String {
        let safe: String = format!("{}_{}", self.family, self.params)
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || "-_.^+".contains(c) { c } else { '~' })
            .collect();
        format!("factor_{safe}.dfa")
    }
}

/// A decomposition: a union of terms, each term an intersection of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub mode: DecompositionMode,
    pub bound: usize,
    pub terms: Vec<Vec<Factor>>,
}

impl Decomposition {
    /// Total number of factors over all terms.
    pub fn factor_count(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// All factors in emission order.
    pub fn factors(&self) -> impl Iterator<Item = &Factor> {
        self.terms.iter().flatten()
    }

    /// Largest factor size.
    pub fn max_factor_size(&self) -> usize {
        self.factors().map(|f| f.dfa.state_count()).max().unwrap_or(0)
    }
}

/// Caps on decomposition output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionLimits {
    /// Maximum number of emitted factors.
    pub max_factors: usize,
    /// Maximum number of candidate words examined for extension factors.
    pub max_candidates: usize,
}

impl Default for DecompositionLimits {
    fn default() -> Self {
        DecompositionLimits {
            max_factors: 200_000,
            max_candidates: 1_000_000,
        }
    }
}

/// Longest witness that is materialized as a word.
const MAX_WITNESS_LEN: usize = 1 << 20;

fn lcm_up_to(m: usize) -> Option<usize> {
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (1..=m).try_fold(1usize, |acc, x| (acc / gcd(acc, x)).checked_mul(x))
}

fn finite_length(m: &Dfa) -> Result<Option<usize>> {
    match longest_word_length(m) {
        LongestWord::Infinite => Err(Error::Precondition("language is infinite".into())),
        LongestWord::None => Ok(None),
        LongestWord::Finite(n) => Ok(Some(n)),
    }
}

/// Witness for the linear branch with a uniform maximal word:
/// `σ^{n + lcm(1..=n+1)}`.
fn uniform_witness(p: &LinearProfile, sigma: usize) -> Result<Word> {
    let n = p.n();
    let len = lcm_up_to(n + 1)
        .and_then(|l| l.checked_add(n))
        .filter(|&len| len <= MAX_WITNESS_LEN)
        .ok_or_else(|| Error::ResourceLimit(format!("witness length for n = {n} too large")))?;
    Ok(vec![sigma; len])
}

/// Witness for the safety branch without the compression-extension
/// property: the breaching word followed by the least letter of
/// `Σ_{n-1,n}` that no `q_j` with `j < n` sends to the sink.
fn breaching_witness(p: &LinearProfile, breaching: &[usize]) -> Result<Word> {
    let n = p.n();
    let sigma = p
        .sigma(n - 1, n)
        .into_iter()
        .find(|&c| (0..n).all(|j| p.target(j, c) != n + 1))
        .ok_or_else(|| Error::Internal("no letter completes the breaching witness".into()))?;
    let mut w = breaching.to_vec();
    w.push(sigma);
    Ok(w)
}

/// Intersection primality of a DFA recognizing a finite language.
pub fn decide_intersection_primality(a: &Dfa) -> Result<PrimalityVerdict> {
    let m = minimize(a);
    if finite_length(&m)?.is_none() {
        return Ok(PrimalityVerdict::new(Status::Prime, Branch::EmptyLanguage));
    }
    let Some(p) = linear_profile(&m)? else {
        return Ok(PrimalityVerdict::new(Status::Composite, Branch::NonLinear));
    };
    if let Some(sigma) = uniform_max_word_letter(&p) {
        let mut v = PrimalityVerdict::new(Status::Prime, Branch::LinearSigmaN);
        match uniform_witness(&p, sigma) {
            Ok(w) => v.witness = Some(w),
            Err(e) => v.notes = e.to_string(),
        }
        return Ok(v);
    }
    if !is_safety(&m) {
        return Ok(PrimalityVerdict::new(Status::Composite, Branch::NonSafety));
    }
    let cep = has_cep(&p)?;
    if cep.holds {
        return Ok(PrimalityVerdict::new(Status::Composite, Branch::Cep));
    }
    let breaching = cep
        .breaching
        .ok_or_else(|| Error::Internal("missing breaching word".into()))?;
    let mut v = PrimalityVerdict::new(Status::Prime, Branch::SafetyNoCep);
    v.witness = Some(breaching_witness(&p, &breaching)?);
    Ok(v)
}

/// Primality witness of an intersection-prime DFA with a nonempty language.
pub fn intersection_witness(a: &Dfa) -> Result<Word> {
    let v = decide_intersection_primality(a)?;
    match (v.status, v.branch) {
        (Status::Prime, Branch::LinearSigmaN | Branch::SafetyNoCep) => v
            .witness
            .ok_or_else(|| Error::ResourceLimit(v.notes)),
        _ => Err(Error::Precondition(format!(
            "no witness for a {} verdict ({})",
            v.status.as_str(),
            v.branch.as_str()
        ))),
    }
}

/// Collects factors, dropping structural duplicates and enforcing the cap.
struct FactorSink {
    seen: HashSet<Dfa>,
    factors: Vec<Factor>,
    cap: usize,
}

impl FactorSink {
    fn new(cap: usize) -> FactorSink {
        FactorSink {
            seen: HashSet::new(),
            factors: Vec::new(),
            cap,
        }
    }

    fn push(&mut self, family: &str, params: String, dfa: Dfa) -> Result<()> {
        if self.seen.contains(&dfa) {
            return Ok(());
        }
        if self.factors.len() >= self.cap {
            return Err(Error::ResourceLimit(format!(
                "factor cap {} reached after {} factors",
                self.cap,
                self.factors.len()
            )));
        }
        self.seen.insert(dfa.clone());
        self.factors.push(Factor::new(family, params, dfa));
        Ok(())
    }
}

fn word_count_up_to(k: usize, n: usize) -> Option<usize> {
    (0..=n).try_fold(0usize, |acc, len| {
        k.checked_pow(len as u32).and_then(|x| acc.checked_add(x))
    })
}

/// Intersection of a list of DFAs, minimized after every step.
pub fn intersect_all<'a>(alphabet: &[String], dfas: impl IntoIterator<Item = &'a Dfa>) -> Result<Dfa> {
    let mut acc = Dfa::new(alphabet.to_vec(), 0, vec![0; alphabet.len()], vec![true])?;
    for d in dfas {
        acc = minimize(&product(&acc, d, ProductMode::Intersect)?);
    }
    Ok(acc)
}

/// Accepted words with length in `lo..=hi`, in length-then-alphabet order.
fn accepted_words_in_range(a: &Dfa, lo: usize, hi: usize, cap: usize) -> Result<Vec<Word>> {
    let m = minimize(a);
    let k = m.letter_count();
    // A state is live if it can still reach acceptance.
    let co = {
        let mut live: Vec<bool> = (0..m.state_count()).map(|q| m.is_accepting(q)).collect();
        loop {
            let mut changed = false;
            for q in 0..m.state_count() {
                if !live[q] && (0..k).any(|c| live[m.next(q, c)]) {
                    live[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break live;
            }
        }
    };
    let mut out = Vec::new();
    if !co[m.initial()] {
        return Ok(out);
    }
    let mut frontier: Vec<(Word, usize)> = vec![(Vec::new(), m.initial())];
    let mut examined = 0usize;
    for len in 0..=hi {
        if len >= lo {
            for (w, q) in &frontier {
                if m.is_accepting(*q) {
                    out.push(w.clone());
                }
            }
        }
        examined += frontier.len();
        if examined > cap {
            return Err(Error::ResourceLimit(format!(
                "candidate cap {cap} exceeded while enumerating extension candidates"
            )));
        }
        if len == hi {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &frontier {
            for c in 0..k {
                let t = m.next(*q, c);
                if co[t] {
                    let mut v = w.clone();
                    v.push(c);
                    next.push((v, t));
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Intersection decomposition of an intersection-composite DFA, with factor
/// size at most `ind - 1`.
pub fn intersection_decomposition(a: &Dfa, limits: DecompositionLimits) -> Result<Decomposition> {
    let verdict = decide_intersection_primality(a)?;
    if verdict.is_prime() {
        return Err(Error::Precondition(format!(
            "the DFA is prime ({})",
            verdict.branch.as_str()
        )));
    }
    let m = minimize(a);
    let alphabet = m.alphabet().to_vec();
    let k = alphabet.len();
    let ind = m.state_count();
    let mut sink = FactorSink::new(limits.max_factors);
    match verdict.branch {
        Branch::NonLinear => {
            let n = finite_length(&m)?.expect("nonempty");
            let total = word_count_up_to(k, n).unwrap_or(usize::MAX);
            if total > limits.max_factors.saturating_add(limits.max_candidates) {
                return Err(Error::ResourceLimit(format!(
                    "{total} words of length <= {n} exceed the caps"
                )));
            }
            sink.push("length-cap", format!("m{n}"), length_cap_dfa(n, &alphabet)?)?;
            for len in 0..=n {
                for w in all_words(k, len) {
                    if !accepts(&m, &w)? {
                        let f = complement(&singleton_dfa(&w, &alphabet)?);
                        sink.push("co-singleton", word_tag(&alphabet, &w), f)?;
                    }
                }
            }
        }
        Branch::Cep => {
            let p = linear_profile(&m)?.expect("linear");
            let n = p.n();
            sink.push("loop-zero", format!("n{n}"), factor_loop_zero(&p)?)?;
            push_chains(&mut sink, &p)?;
            for i in 0..=n - 2 {
                for l in 2..=n - i {
                    sink.push("skip", format!("i{i}-l{l}"), factor_skip(&p, i, l)?)?;
                }
            }
        }
        Branch::NonSafety => {
            let p = linear_profile(&m)?.expect("linear");
            let n = p.n();
            let d = interior_rejecting_state(&p)
                .ok_or_else(|| Error::Internal("non-safety profile without rejecting state".into()))?;
            sink.push("loop-zero", format!("n{n}"), factor_loop_zero(&p)?)?;
            sink.push("loop-d", format!("d{d}"), factor_loop_d(&p, d)?)?;
            push_chains(&mut sink, &p)?;
            for sigma in 0..k {
                let i = letter_position_index(&p, sigma)
                    .ok_or_else(|| Error::Internal("letter without a free position".into()))?;
                let f = factor_letter_position(&p, sigma, i)?;
                sink.push("letter-position", format!("{}-i{i}", alphabet[sigma]), f)?;
            }
            let count = k.checked_pow(n as u32).unwrap_or(usize::MAX);
            if count > limits.max_candidates {
                return Err(Error::ResourceLimit(format!(
                    "{count} words of length {n} exceed the candidate cap"
                )));
            }
            for v in all_words(k, n) {
                if !p.accepts(&v) {
                    let f = subsequence_excluder(&v, &alphabet)?;
                    sink.push("excluder", word_tag(&alphabet, &v), f)?;
                }
            }
            if n >= 3 {
                let survivors = intersect_all(&alphabet, sink.factors.iter().map(|f| &f.dfa))?;
                let candidates =
                    accepted_words_in_range(&survivors, n + 1, 2 * n - 2, limits.max_candidates)?;
                for w in candidates {
                    let (f, params) = factor_extension(&p, d, &w)?;
                    sink.push(
                        "extension",
                        format!("{}-{}", params.case.tag(), word_tag(&alphabet, &w)),
                        f,
                    )?;
                }
            }
        }
        other => {
            return Err(Error::Internal(format!(
                "no decomposition for branch {}",
                other.as_str()
            )))
        }
    }
    Ok(Decomposition {
        mode: DecompositionMode::Intersection,
        bound: ind - 1,
        terms: vec![sink.factors],
    })
}

fn push_chains(sink: &mut FactorSink, p: &LinearProfile) -> Result<()> {
    for chain in all_chains(p.n()) {
        let tag = chain.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("-");
        sink.push("chain", tag, factor_chain(p, &chain)?)?;
    }
    Ok(())
}

fn nonempty_finite(m: &Dfa) -> Result<usize> {
    finite_length(m)?.ok_or_else(|| Error::Precondition("language is empty".into()))
}

/// Union primality: prime iff the minimal DFA is linear.
pub fn decide_union_primality(a: &Dfa) -> Result<PrimalityVerdict> {
    let m = minimize(a);
    if finite_length(&m)?.is_none() {
        return Ok(PrimalityVerdict::new(Status::Prime, Branch::EmptyLanguage));
    }
    Ok(match linear_profile(&m)? {
        Some(_) => PrimalityVerdict::new(Status::Prime, Branch::Linear),
        None => PrimalityVerdict::new(Status::Composite, Branch::NonLinear),
    })
}

fn singleton_terms(m: &Dfa, n: usize, limits: DecompositionLimits) -> Result<Vec<Vec<Factor>>> {
    let alphabet = m.alphabet();
    let mut terms = Vec::new();
    for w in crate::automaton::enumerate_language(m, n) {
        if terms.len() >= limits.max_factors {
            return Err(Error::ResourceLimit(format!(
                "factor cap {} reached after {} factors",
                limits.max_factors,
                terms.len()
            )));
        }
        terms.push(vec![Factor::new(
            "singleton",
            word_tag(alphabet, &w),
            singleton_dfa(&w, alphabet)?,
        )]);
    }
    Ok(terms)
}

/// Union decomposition of a union-composite DFA: one singleton DFA per
/// accepted word, each strictly smaller than the index.
pub fn union_decomposition(a: &Dfa, limits: DecompositionLimits) -> Result<Decomposition> {
    let verdict = decide_union_primality(a)?;
    if verdict.is_prime() {
        return Err(Error::Precondition("the DFA is union-prime".into()));
    }
    let m = minimize(a);
    let n = nonempty_finite(&m)?;
    Ok(Decomposition {
        mode: DecompositionMode::Union,
        bound: m.state_count(),
        terms: singleton_terms(&m, n, limits)?,
    })
}

/// DNF primality: prime iff linear with a uniform maximal word.
pub fn decide_dnf_primality(a: &Dfa) -> Result<PrimalityVerdict> {
    let m = minimize(a);
    if finite_length(&m)?.is_none() {
        return Ok(PrimalityVerdict::new(Status::Prime, Branch::EmptyLanguage));
    }
    Ok(match linear_profile(&m)? {
        None => PrimalityVerdict::new(Status::Composite, Branch::NonLinear),
        Some(p) => match uniform_max_word_letter(&p) {
            Some(_) => PrimalityVerdict::new(Status::Prime, Branch::LinearSigmaN),
            None => PrimalityVerdict::new(Status::Composite, Branch::NoSigmaN),
        },
    })
}

/// DNF decomposition of a DNF-composite DFA. For linear DFAs every word
/// shorter than `n` is a singleton term and every word `w` of length `n` is
/// the term `{w}* ∩ {u : |u|_σ = |w|_σ}` with `σ` the first letter of `w`.
pub fn dnf_decomposition(a: &Dfa, limits: DecompositionLimits) -> Result<Decomposition> {
    let verdict = decide_dnf_primality(a)?;
    if verdict.is_prime() {
        return Err(Error::Precondition("the DFA is DNF-prime".into()));
    }
    let m = minimize(a);
    let n = nonempty_finite(&m)?;
    let alphabet = m.alphabet().to_vec();
    let terms = if verdict.branch == Branch::NonLinear {
        singleton_terms(&m, n, limits)?
    } else {
        let mut terms = Vec::new();
        for w in crate::automaton::enumerate_language(&m, n) {
            if terms.len() >= limits.max_factors {
                return Err(Error::ResourceLimit(format!(
                    "factor cap {} reached",
                    limits.max_factors
                )));
            }
            let tag = word_tag(&alphabet, &w);
            if w.len() < n {
                terms.push(vec![Factor::new("singleton", tag, singleton_dfa(&w, &alphabet)?)]);
            } else {
                let sigma = w[0];
                let count = w.iter().filter(|&&c| c == sigma).count();
                terms.push(vec![
                    Factor::new("star", tag.clone(), star_word_dfa(&w, &alphabet)?),
                    Factor::new(
                        "letter-count",
                        format!("{}-k{count}-{tag}", alphabet[sigma]),
                        letter_count_dfa(sigma, count, &alphabet)?,
                    ),
                ]);
            }
        }
        terms
    };
    Ok(Decomposition {
        mode: DecompositionMode::Dnf,
        bound: m.state_count(),
        terms,
    })
}

/// S-primality: compositionality measured against the number of states of
/// `a` itself. Defined here for finite languages and simple co-safety DFAs.
pub fn decide_s_primality(a: &Dfa) -> Result<PrimalityVerdict> {
    let finite = is_finite_language(a);
    if !finite && !is_simple_cosafety(a) {
        return Err(Error::Precondition(
            "S-primality is decided for finite languages and simple co-safety DFAs".into(),
        ));
    }
    if a.state_count() > index_of(a) {
        return Ok(PrimalityVerdict::new(Status::Composite, Branch::NonMinimal));
    }
    if finite {
        decide_intersection_primality(a)
    } else {
        Ok(PrimalityVerdict::new(Status::Prime, Branch::SimpleCosafetyMinimal))
    }
}

/// Decomposition certifying S-compositeness, with factor sizes at most
/// `|a| - 1`.
pub fn s_decomposition(a: &Dfa, limits: DecompositionLimits) -> Result<Decomposition> {
    let verdict = decide_s_primality(a)?;
    if verdict.is_prime() {
        return Err(Error::Precondition("the DFA is S-prime".into()));
    }
    let mut d = if verdict.branch == Branch::NonMinimal {
        Decomposition {
            mode: DecompositionMode::SizeIntersection,
            bound: a.state_count() - 1,
            terms: vec![vec![Factor::new("minimal", "m".into(), minimize(a))]],
        }
    } else {
        intersection_decomposition(a, limits)?
    };
    d.mode = DecompositionMode::SizeIntersection;
    d.bound = a.state_count() - 1;
    Ok(d)
}

/// Verdict under the given mode.
pub fn decide(a: &Dfa, mode: DecompositionMode) -> Result<PrimalityVerdict> {
    match mode {
        DecompositionMode::Intersection => decide_intersection_primality(a),
        DecompositionMode::Union => decide_union_primality(a),
        DecompositionMode::Dnf => decide_dnf_primality(a),
        DecompositionMode::SizeIntersection => decide_s_primality(a),
    }
}

/// Decomposition under the given mode.
pub fn decompose(a: &Dfa, mode: DecompositionMode, limits: DecompositionLimits) -> Result<Decomposition> {
    match mode {
        DecompositionMode::Intersection => intersection_decomposition(a, limits),
        DecompositionMode::Union => union_decomposition(a, limits),
        DecompositionMode::Dnf => dnf_decomposition(a, limits),
        DecompositionMode::SizeIntersection => s_decomposition(a, limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::alphabet_of;

    #[test]
    fn lcm_values() {
        assert_eq!(lcm_up_to(1), Some(1));
        assert_eq!(lcm_up_to(2), Some(2));
        assert_eq!(lcm_up_to(4), Some(12));
        assert_eq!(lcm_up_to(7), Some(420));
    }

    #[test]
    fn epsilon_or_a_is_prime_with_cubic_witness() {
        let a = Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![1], vec![2], vec![2]], &[0, 1]).unwrap();
        let v = decide_intersection_primality(&a).unwrap();
        assert_eq!(v.branch, Branch::LinearSigmaN);
        assert_eq!(v.witness, Some(vec![0, 0, 0]));
        assert!(decide_union_primality(&a).unwrap().is_prime());
        assert!(decide_dnf_primality(&a).unwrap().is_prime());
    }

    #[test]
    fn empty_language_is_prime() {
        let a = Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![0]], &[]).unwrap();
        let v = decide_intersection_primality(&a).unwrap();
        assert_eq!((v.status, v.branch), (Status::Prime, Branch::EmptyLanguage));
        assert_eq!(decide_union_primality(&a).unwrap().branch, Branch::EmptyLanguage);
    }

    #[test]
    fn infinite_language_is_rejected() {
        let a = Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![0]], &[0]).unwrap();
        assert!(decide_intersection_primality(&a).is_err());
    }

    #[test]
    fn file_names_are_deterministic() {
        let f = Factor::new("chain", "0-2".into(), length_cap_dfa(1, &alphabet_of(&["a"])).unwrap());
        assert_eq!(f.file_name(), "factor_chain_0-2.dfa");
    }
}
