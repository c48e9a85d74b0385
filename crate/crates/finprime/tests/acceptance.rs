//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure. Every tolerance is exact (zero failures or disagreements).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use finprime::automaton::{
    accepts, alphabet_of, all_words, equivalent, index_of, is_empty, is_minimal, longest_word_length,
    minimize, parse_dfa, product, serialize_dfa,
};
use finprime::classifier::{has_cep, is_simple_cosafety};
use finprime::factories::mod_counter_dfa;
use finprime::gadgets::{minimality_gadget, primefin_gadget, sprime_gadget};
use finprime::oracle::{minimal_adfas, oracle_cep, AlphaOracle, OracleLimits};
use finprime::primality::{
    decide, decide_intersection_primality, decompose, DecompositionLimits,
};
use finprime::sampling::{random_adfa, random_dfa, random_digraph, random_profile, seeded};
use finprime::{Dfa, DecompositionMode, LinearProfile, LongestWord, ProductMode, Status, Word};

/// Runtime ceilings per criterion.
const CRITERION_1_BUDGET: Duration = Duration::from_secs(600);
const CRITERION_6_BUDGET: Duration = Duration::from_secs(120);

/// Sample sizes per criterion.
const COMPOSITE_SAMPLES: usize = 100;
const CEP_RANDOM_PROFILES: usize = 500;
const GADGET_DIGRAPHS: usize = 200;
const PRIMEFIN_SAMPLES: usize = 50;
const ALGEBRA_SAMPLES: usize = 1000;

/// Cap on accepted length-n words enumerated by the literal CEP check.
const CEP_WORD_CAP: usize = 1_000_000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Outcome {
        Outcome { pass, detail }
    }
}

fn binary() -> Vec<String> {
    alphabet_of(&["0", "1"])
}

fn chain3() -> Dfa {
    Dfa::from_rows(
        alphabet_of(&["a1", "a2", "a3"]),
        0,
        &[vec![1, 1, 2], vec![4, 2, 2], vec![4, 4, 3], vec![4, 4, 4], vec![4, 4, 4]],
        &[0, 1, 2, 3],
    )
    .expect("fixed DFA")
}

fn prime5() -> Dfa {
    Dfa::from_rows(
        alphabet_of(&["a", "b"]),
        0,
        &[vec![1, 2], vec![2, 2], vec![4, 3], vec![4, 4], vec![4, 4]],
        &[0, 1, 2, 3],
    )
    .expect("fixed DFA")
}

fn epsilon_or_a() -> Dfa {
    Dfa::from_rows(alphabet_of(&["a"]), 0, &[vec![1], vec![2], vec![2]], &[0, 1]).expect("fixed DFA")
}

/// Criteria 1 and 4 share the exhaustive run.
fn criteria_1_and_4() -> (Outcome, Outcome) {
    let start = Instant::now();
    let family = match minimal_adfas(5, &binary()) {
        Ok(f) => f,
        Err(e) => {
            let o = Outcome::new(false, format!("enumeration failed: {e}"));
            return (o, Outcome::new(false, "no instances".into()));
        }
    };
    let mut oracle = match AlphaOracle::new(&binary(), OracleLimits::default()) {
        Ok(o) => o,
        Err(e) => {
            let o = Outcome::new(false, format!("oracle failed: {e}"));
            return (o, Outcome::new(false, "no instances".into()));
        }
    };
    let mut disagreements = Vec::new();
    let mut primes = 0usize;
    let mut witness_failures = Vec::new();
    for a in &family {
        let fast = decide_intersection_primality(a);
        let slow = oracle.primality(a);
        match (fast, slow) {
            (Ok(f), Ok(s)) => {
                if f.status != s.status {
                    disagreements.push(serialize_dfa(a));
                } else if f.status == Status::Prime {
                    primes += 1;
                    let ok = f
                        .witness
                        .as_ref()
                        .is_some_and(|w| oracle.verify_witness(a, w).unwrap_or(false));
                    if !ok {
                        witness_failures.push(serialize_dfa(a));
                    }
                }
            }
            _ => disagreements.push(serialize_dfa(a)),
        }
    }
    let elapsed = start.elapsed();
    let c1 = Outcome::new(
        disagreements.is_empty() && elapsed <= CRITERION_1_BUDGET,
        format!(
            "{} distinct minimal ADFAs with index <= 5 over {{0,1}}, {} oracle languages, {} disagreements, {:.1}s{}",
            family.len(),
            oracle.basis_size(),
            disagreements.len(),
            elapsed.as_secs_f64(),
            disagreements.first().map(|d| format!("; first:\n{d}")).unwrap_or_default()
        ),
    );

    let mut fixed = Vec::new();
    let eps_a = epsilon_or_a();
    let verdict = decide_intersection_primality(&eps_a);
    let ok = verdict.as_ref().is_ok_and(|v| v.witness == Some(vec![0, 0, 0]))
        && finprime::oracle::verify_witness(&eps_a, &[0, 0, 0], OracleLimits::default()).unwrap_or(false);
    if !ok {
        fixed.push("{eps,a} -> aaa");
    }
    let p5 = prime5();
    let verdict = decide_intersection_primality(&p5);
    let ok = verdict.as_ref().is_ok_and(|v| v.witness == Some(vec![0, 0, 1, 1]))
        && finprime::oracle::verify_witness(&p5, &[0, 0, 1, 1], OracleLimits::default()).unwrap_or(false);
    if !ok {
        fixed.push("PRIME5 -> aabb");
    }
    let c4 = Outcome::new(
        witness_failures.is_empty() && fixed.is_empty() && primes > 0,
        format!(
            "{primes} prime verdicts, {} witness failures, fixed cases failing: [{}]",
            witness_failures.len(),
            fixed.join(", ")
        ),
    );
    (c1, c4)
}

fn criterion_2() -> Outcome {
    let a = chain3();
    let limits = DecompositionLimits::default();
    let cap = decide(&a, DecompositionMode::Intersection).map(|v| v.status);
    let cup = decide(&a, DecompositionMode::Union).map(|v| v.status);
    let dnf = decide(&a, DecompositionMode::Dnf).map(|v| v.status);
    let report = decompose(&a, DecompositionMode::Dnf, limits)
        .map(|d| finprime::oracle::verify_decomposition(&a, &d));
    let pass = matches!(cap, Ok(Status::Prime))
        && matches!(cup, Ok(Status::Prime))
        && matches!(dnf, Ok(Status::Composite))
        && report.as_ref().is_ok_and(|r| r.ok);
    let detail = format!(
        "cap={} cup={} dnf={} dnf-verify={}",
        status_str(&cap),
        status_str(&cup),
        status_str(&dnf),
        match &report {
            Ok(r) => r.diagnostic.clone(),
            Err(e) => e.to_string(),
        }
    );
    Outcome::new(pass, detail)
}

fn status_str(s: &finprime::Result<Status>) -> String {
    match s {
        Ok(s) => s.as_str().to_string(),
        Err(e) => format!("error({e})"),
    }
}

fn criterion_3() -> Outcome {
    let mut rng = seeded(3);
    let limits = DecompositionLimits::default();
    let modes = [DecompositionMode::Intersection, DecompositionMode::Union, DecompositionMode::Dnf];
    let mut composites = 0usize;
    let mut decompositions = 0usize;
    let mut capped = 0usize;
    let mut failures = Vec::new();
    let mut attempts = 0usize;
    while composites < COMPOSITE_SAMPLES && attempts < 200_000 {
        attempts += 1;
        let letters = rng.random_range(2..=3);
        let alphabet = alphabet_of(&["a", "b", "c"][..letters]);
        let states = rng.random_range(3..=8);
        let p_accept = rng.random_range(0.2..0.9);
        let a = minimize(&random_adfa(&mut rng, states, &alphabet, p_accept));
        match longest_word_length(&a) {
            LongestWord::Finite(n) if n <= 6 => {}
            _ => continue,
        }
        let mut any = false;
        for mode in modes {
            let Ok(v) = decide(&a, mode) else { continue };
            if v.status != Status::Composite {
                continue;
            }
            match decompose(&a, mode, limits) {
                Ok(d) => {
                    any = true;
                    decompositions += 1;
                    let r = finprime::oracle::verify_decomposition(&a, &d);
                    if !r.ok {
                        failures.push(format!("{} on\n{}: {}", mode.as_str(), serialize_dfa(&a), r.diagnostic));
                    }
                }
                Err(finprime::Error::ResourceLimit(_)) => capped += 1,
                Err(e) => failures.push(format!("{} error {e} on\n{}", mode.as_str(), serialize_dfa(&a))),
            }
        }
        if any {
            composites += 1;
        }
    }
    Outcome::new(
        failures.is_empty() && composites >= COMPOSITE_SAMPLES,
        format!(
            "{composites} composite ADFAs, {decompositions} decompositions verified, {capped} over caps, {} failures{}",
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

/// Every minimal linear safety profile with `n` non-sink rows over `k`
/// letters.
fn safety_profiles(n: usize, alphabet: &[String]) -> Vec<LinearProfile> {
    let k = alphabet.len();
    let slots = n * k;
    let low = |slot: usize| slot / k + 1;
    let mut table: Vec<usize> = (0..slots).map(low).collect();
    let accepting = vec![true; n + 1];
    let mut out = Vec::new();
    loop {
        let rows: Vec<Vec<usize>> = table.chunks(k).map(<[usize]>::to_vec).collect();
        if let Ok(p) = LinearProfile::from_rows(alphabet.to_vec(), &rows, &accepting) {
            out.push(p);
        }
        let mut pos = slots;
        let mut finished = true;
        while pos > 0 {
            pos -= 1;
            table[pos] += 1;
            if table[pos] <= n + 1 {
                finished = false;
                break;
            }
            table[pos] = low(pos);
        }
        if finished {
            return out;
        }
    }
}

fn criterion_5() -> Outcome {
    let mut exhaustive = 0usize;
    let mut disagreements = Vec::new();
    let check = |p: &LinearProfile, disagreements: &mut Vec<String>| {
        let fast = has_cep(p).map(|c| c.holds);
        let slow = oracle_cep(p, CEP_WORD_CAP);
        match (fast, slow) {
            (Ok(f), Ok(s)) if f == s => {}
            (f, s) => disagreements.push(format!("{}: rule {f:?} literal {s:?}", serialize_dfa(&p.to_dfa()))),
        }
    };
    for n in 1..=4 {
        for p in safety_profiles(n, &binary()) {
            exhaustive += 1;
            check(&p, &mut disagreements);
        }
    }
    let mut rng = seeded(5);
    let three = alphabet_of(&["a", "b", "c"]);
    for i in 0..CEP_RANDOM_PROFILES {
        let n = rng.random_range(1..=6);
        let p = random_profile(&mut rng, n, &three, i % 2 == 0);
        check(&p, &mut disagreements);
    }
    Outcome::new(
        disagreements.is_empty(),
        format!(
            "{exhaustive} exhaustive safety profiles (n <= 4), {CEP_RANDOM_PROFILES} random (n <= 6, 3 letters), {} disagreements{}",
            disagreements.len(),
            disagreements.first().map(|d| format!("; first: {d}")).unwrap_or_default()
        ),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(6);
    let mut failures = Vec::new();
    let mut reachable = 0usize;
    for _ in 0..GADGET_DIGRAPHS {
        let n = rng.random_range(1..=8);
        let g = random_digraph(&mut rng, n);
        let reach = g.reachable();
        reachable += usize::from(reach);
        if is_minimal(&minimality_gadget(&g)) != reach {
            failures.push(format!("minimality gadget on {:?} s={} t={}", g.edges(), g.s(), g.t()));
        }
        let sp = sprime_gadget(&g);
        if !is_simple_cosafety(&sp) {
            failures.push(format!("sprime gadget not simple co-safety on {:?}", g.edges()));
        }
        if is_minimal(&sp) != reach {
            failures.push(format!("sprime gadget minimality on {:?} s={} t={}", g.edges(), g.s(), g.t()));
        }
    }
    let mut empties = 0usize;
    for i in 0..PRIMEFIN_SAMPLES {
        let states = rng.random_range(1..=6);
        let p_accept = if i % 3 == 0 { 0.0 } else { 0.4 };
        let a = random_adfa(&mut rng, states, &binary(), p_accept);
        let empty = is_empty(&a).0;
        empties += usize::from(empty);
        let prime = primefin_gadget(&a)
            .and_then(|g| decide_intersection_primality(&g))
            .map(|v| v.is_prime());
        if prime.as_ref().ok() != Some(&empty) {
            failures.push(format!("primefin on\n{}: {prime:?}", serialize_dfa(&a)));
        }
    }
    let counters = (|| {
        let six = mod_counter_dfa(6)?;
        let both = product(&mod_counter_dfa(2)?, &mod_counter_dfa(3)?, ProductMode::Intersect)?;
        equivalent(&six, &both)
    })();
    if !matches!(counters, Ok(true)) {
        failures.push(format!("mod-counter identity: {counters:?}"));
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures.is_empty() && elapsed <= CRITERION_6_BUDGET,
        format!(
            "{GADGET_DIGRAPHS} digraphs ({reachable} reachable), {PRIMEFIN_SAMPLES} primefin inputs ({empties} empty), {} failures, {:.1}s{}",
            failures.len(),
            elapsed.as_secs_f64(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

/// Same DFA with its non-initial states shuffled.
fn renumber<R: Rng>(rng: &mut R, a: &Dfa) -> Dfa {
    let n = a.state_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let k = a.letter_count();
    let mut delta = vec![0; n * k];
    let mut accepting = vec![false; n];
    for q in 0..n {
        for c in 0..k {
            delta[perm[q] * k + c] = perm[a.next(q, c)];
        }
        accepting[perm[q]] = a.is_accepting(q);
    }
    Dfa::new(a.alphabet().to_vec(), perm[a.initial()], delta, accepting).expect("permuted table")
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(7);
    let mut failures = Vec::new();
    for _ in 0..ALGEBRA_SAMPLES {
        let letters = rng.random_range(1..=3);
        let alphabet = alphabet_of(&["a", "b", "c"][..letters]);
        let (sa, sb) = (rng.random_range(1..=8), rng.random_range(1..=8));
        let a = random_dfa(&mut rng, sa, &alphabet, 0.4);
        let b = random_dfa(&mut rng, sb, &alphabet, 0.4);
        let m = minimize(&a);
        if minimize(&m) != m {
            failures.push("minimize not idempotent".to_string());
        }
        if minimize(&renumber(&mut rng, &a)) != m {
            failures.push("minimize not canonical".to_string());
        }
        if index_of(&a) != m.state_count() || m.state_count() > a.state_count() {
            failures.push("index inconsistent".to_string());
        }
        match parse_dfa(&serialize_dfa(&a)) {
            Ok(back) if back == a => {}
            other => failures.push(format!("round trip: {other:?}")),
        }
        let products = [ProductMode::Intersect, ProductMode::Union, ProductMode::Difference]
            .map(|mode| product(&a, &b, mode).map(|p| (mode, p)));
        let words: Vec<Word> = (0..=5).flat_map(|len| all_words(letters, len)).collect();
        for entry in products {
            let Ok((mode, p)) = entry else {
                failures.push("product failed".to_string());
                continue;
            };
            for w in &words {
                let x = accepts(&a, w).unwrap_or(false);
                let y = accepts(&b, w).unwrap_or(false);
                let expect = match mode {
                    ProductMode::Intersect => x && y,
                    ProductMode::Union => x || y,
                    ProductMode::Difference => x && !y,
                };
                if accepts(&p, w).ok() != Some(expect) || accepts(&m, w).ok() != Some(x) {
                    failures.push(format!("membership mismatch for {mode:?} on {w:?}"));
                    break;
                }
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "{ALGEBRA_SAMPLES} random DFA pairs, {} failures{}",
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn report(n: usize, o: &Outcome) -> bool {
    println!("criterion {n}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    o.pass
}

fn main() -> ExitCode {
    let (c1, c4) = criteria_1_and_4();
    let mut all = report(1, &c1);
    all &= report(2, &criterion_2());
    all &= report(3, &criterion_3());
    all &= report(4, &c4);
    all &= report(5, &criterion_5());
    all &= report(6, &criterion_6());
    all &= report(7, &criterion_7());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
