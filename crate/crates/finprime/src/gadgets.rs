//! Reduction gadgets: DFAs built from a digraph or from another DFA whose
//! minimality or primality encodes reachability or emptiness.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::automaton::{is_finite_language, minimize, validate_alphabet, Dfa};
use crate::error::{Error, Result};
use crate::factories::mod_counter_dfa;

/// Directed graph with outdegree at most two and designated nodes `s`, `t`.
///
/// The edges leaving a node are ordered as listed; the first one is read as
/// letter `0` and the second as letter `1` by the gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    name: String,
    nodes: usize,
    edges: Vec<(usize, usize)>,
    s: usize,
    t: usize,
}

impl Digraph {
    /// Validates node ids and the outdegree bound.
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>, s: usize, t: usize) -> Result<Digraph> {
        if nodes == 0 {
            return Err(Error::Precondition("a digraph needs at least one node".into()));
        }
        for &q in [s, t].iter().chain(edges.iter().flat_map(|(u, v)| [u, v])) {
            if q >= nodes {
                return Err(Error::StateOutOfRange {
                    line: None,
                    state: q,
                    count: nodes,
                });
            }
        }
        let mut degree = vec![0usize; nodes];
        for &(u, _) in &edges {
            degree[u] += 1;
            if degree[u] > 2 {
                return Err(Error::Precondition(format!("node {u} has outdegree above 2")));
            }
        }
        Ok(Digraph {
            name: "graph".into(),
            nodes,
            edges,
            s,
            t,
        })
    }

    /// Returns the same graph under another display name.
    pub fn with_name(mut self, name: &str) -> Digraph {
        self.name = name.split_whitespace().collect::<Vec<_>>().join("_");
        if self.name.is_empty() {
            self.name = "graph".into();
        }
        self
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Edges in listing order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Source node.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Target node.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Successors of `u` in listing order.
    pub fn successors(&self, u: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == u).map(|e| e.1).collect()
    }

    /// Whether `t` is reachable from `s` (breadth-first search).
    pub fn reachable(&self) -> bool {
        let mut seen = vec![false; self.nodes];
        let mut queue = VecDeque::from([self.s]);
        seen[self.s] = true;
        while let Some(u) = queue.pop_front() {
            if u == self.t {
                return true;
            }
            for v in self.successors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        false
    }
}

/// Parses the line-based digraph format (`digraph`, `nodes`, `edge`, `s`,
/// `t`, `end`; `#` comments and blank lines ignored).
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut name = None;
    let mut nodes = None;
    let mut edges = Vec::new();
    let mut s = None;
    let mut t = None;
    let mut ended = false;
    let mut last_line = 0;
    let syntax = |line: usize, message: String| Error::Syntax { line, message };
    let number = |tok: &str, line: usize| {
        tok.parse::<usize>()
            .map_err(|_| syntax(line, format!("expected a node id, found {tok:?}")))
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended {
            return Err(syntax(line, "content after end".into()));
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks[0] != "digraph" && name.is_none() {
            return Err(syntax(line, "document must start with a digraph line".into()));
        }
        let need_nodes = |line: usize| nodes.ok_or_else(|| syntax(line, "nodes line must come first".into()));
        let check = |q: usize, count: usize, line: usize| {
            if q >= count {
                Err(Error::StateOutOfRange {
                    line: Some(line),
                    state: q,
                    count,
                })
            } else {
                Ok(q)
            }
        };
        match (toks[0], toks.len()) {
            ("digraph", 2) if name.is_none() => name = Some(toks[1].to_string()),
            ("nodes", 2) if nodes.is_none() => {
                let n = number(toks[1], line)?;
                if n == 0 {
                    return Err(syntax(line, "node count must be positive".into()));
                }
                nodes = Some(n);
            }
            ("edge", 3) => {
                let n = need_nodes(line)?;
                let u = check(number(toks[1], line)?, n, line)?;
                let v = check(number(toks[2], line)?, n, line)?;
                if edges.iter().filter(|e: &&(usize, usize)| e.0 == u).count() == 2 {
                    return Err(syntax(line, format!("node {u} has outdegree above 2")));
                }
                edges.push((u, v));
            }
            ("s", 2) if s.is_none() => {
                let n = need_nodes(line)?;
                s = Some(check(number(toks[1], line)?, n, line)?);
            }
            ("t", 2) if t.is_none() => {
                let n = need_nodes(line)?;
                t = Some(check(number(toks[1], line)?, n, line)?);
            }
            ("end", 1) => ended = true,
            _ => return Err(syntax(line, format!("unexpected line {content:?}"))),
        }
    }
    let eof = last_line + 1;
    if !ended {
        return Err(syntax(eof, "missing end line".into()));
    }
    let name = name.ok_or_else(|| syntax(eof, "missing digraph line".into()))?;
    let nodes = nodes.ok_or_else(|| syntax(eof, "missing nodes line".into()))?;
    let s = s.ok_or_else(|| syntax(eof, "missing s line".into()))?;
    let t = t.ok_or_else(|| syntax(eof, "missing t line".into()))?;
    Ok(Digraph::new(nodes, edges, s, t)?.with_name(&name))
}

/// Renders a digraph in the line-based format.
pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}", g.name);
    let _ = writeln!(out, "nodes {}", g.nodes);
    for (u, v) in &g.edges {
        let _ = writeln!(out, "edge {u} {v}");
    }
    let _ = writeln!(out, "s {}", g.s);
    let _ = writeln!(out, "t {}", g.t);
    out.push_str("end\n");
    out
}

fn binary() -> Vec<String> {
    vec!["0".to_string(), "1".to_string()]
}

/// The one-state DFA over `{0,1}` recognizing the empty language.
fn empty_binary() -> Dfa {
    Dfa::new(binary(), 0, vec![0, 0], vec![false]).expect("fixed table")
}

/// Node successor table with `s` relabeled to 0, `t` to `n-1` and the other
/// nodes keeping their relative order; missing edges become self-loops.
fn relabeled_successors(g: &Digraph) -> Vec<[usize; 2]> {
    let n = g.nodes;
    let mut order = vec![g.s];
    order.extend((0..n).filter(|&u| u != g.s && u != g.t));
    order.push(g.t);
    let mut new_id = vec![0; n];
    for (i, &u) in order.iter().enumerate() {
        new_id[u] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &u)| {
            let succ = g.successors(u);
            let pick = |j: usize| succ.get(j).map_or(i, |&v| new_id[v]);
            [pick(0), pick(1)]
        })
        .collect()
}

/// Number of states of the minimality gadget for a graph with `n` nodes and
/// `s != t`: seven states per layer plus `q_0'`.
pub fn minimality_gadget_size(n: usize) -> usize {
    7 * n + 1
}

/// The minimality gadget over `{0,1}`: minimal iff `t` is reachable from `s`.
///
/// For `s = t` it is the one-state empty-language DFA. Otherwise the states
/// are laid out per layer `i` in the order `p_i, q_i, i, i_0', i_1', i_0,
/// i_1`, followed by `q_0'`. The initial state is `p_0` and the only
/// accepting state is node `n-1`.
pub fn minimality_gadget(g: &Digraph) -> Dfa {
    if g.s == g.t {
        return empty_binary();
    }
    let n = g.nodes;
    let succ = relabeled_successors(g);
    let p = |i: usize| 7 * i;
    let q = |i: usize| 7 * i + 1;
    let v = |i: usize| 7 * i + 2;
    let wait = |i: usize, j: usize| 7 * i + 3 + j;
    let arm = |i: usize, j: usize| 7 * i + 5 + j;
    let q0p = 7 * n;
    let total = minimality_gadget_size(n);
    let mut delta = vec![0; 2 * total];
    let mut set = |x: usize, c: usize, y: usize| delta[2 * x + c] = y;
    for i in 0..n {
        set(p(i), 0, p((i + 1).min(n - 1)));
        set(p(i), 1, v(i));
        let q_next = if i == 0 {
            q0p
        } else if i + 1 < n {
            q(i + 1)
        } else {
            q(0)
        };
        set(q(i), 0, q_next);
        set(q(i), 1, if i == 0 { v(0) } else { q(i) });
        for j in 0..2 {
            set(v(i), j, wait(i, j));
            set(wait(i, j), 0, wait(i, j));
            set(wait(i, j), 1, arm(i, j));
            set(arm(i, j), j, v(succ[i][j]));
            set(arm(i, j), 1 - j, q(i));
        }
    }
    set(q0p, 0, q(1));
    set(q0p, 1, q0p);
    let mut accepting = vec![false; total];
    accepting[v(n - 1)] = true;
    Dfa::new(binary(), p(0), delta, accepting)
        .expect("gadget table is complete")
        .with_name(&format!("minimality_{}", g.name))
}

/// The S-prime gadget over `{0,1}`: a simple co-safety DFA that is minimal
/// (hence S-prime) iff `t` is reachable from `s`.
///
/// Every state `x` of the minimality gadget except `p_0` gets an underbar
/// twin. Plain states move to the twin of their old successor, twins move to
/// their plain state on `0`, and on `1` to `p_0`, except the twin of node
/// `n-1`, which moves to the accepting sink `z_+`. For `s = t` a fixed
/// two-state simple co-safety DFA is returned.
pub fn sprime_gadget(g: &Digraph) -> Dfa {
    if g.s == g.t {
        return Dfa::new(binary(), 0, vec![0, 1, 1, 1], vec![false, true])
            .expect("fixed table")
            .with_name(&format!("sprime_{}", g.name));
    }
    let base = minimality_gadget(g);
    let count = base.state_count();
    let twin = |x: usize| {
        debug_assert!(x != 0, "p_0 has no incoming transitions");
        count + x - 1
    };
    let z = 2 * count - 1;
    let target = 7 * (g.nodes - 1) + 2;
    let mut delta = Vec::with_capacity(4 * count);
    for x in 0..count {
        for c in 0..2 {
            delta.push(twin(base.next(x, c)));
        }
    }
    for x in 1..count {
        delta.push(x);
        delta.push(if x == target { z } else { 0 });
    }
    delta.extend([z, z]);
    let mut accepting = vec![false; 2 * count];
    accepting[z] = true;
    Dfa::new(binary(), 0, delta, accepting)
        .expect("gadget table is complete")
        .with_name(&format!("sprime_{}", g.name))
}

/// Letter added to a unary alphabet by [`primefin_gadget`].
pub fn padding_letter(alphabet: &[String]) -> String {
    ["b", "a", "1", "0", "x", "y"]
        .iter()
        .find(|s| !alphabet.iter().any(|a| a == *s))
        .expect("a one-letter alphabet leaves a free candidate")
        .to_string()
}

/// The finite-language primality gadget: prime iff `L(a)` is empty.
///
/// States `p_0, p_1, p_2, p_-` are appended. Accepting states of `a` move to
/// `p_0` on every letter, `p_0 -a-> p_1 -b-> p_2` with every other move
/// into the rejecting sink `p_-`, and `p_2` is accepting. A unary alphabet
/// is padded with a second letter on which the old rejecting states move to
/// `p_-`.
pub fn primefin_gadget(a: &Dfa) -> Result<Dfa> {
    if !is_finite_language(a) {
        return Err(Error::Precondition("input language must be finite".into()));
    }
    let mut alphabet = a.alphabet().to_vec();
    match alphabet.len() {
        1 => alphabet.push(padding_letter(&alphabet)),
        2 => {}
        _ => return Err(Error::Precondition("input alphabet must have at most two letters".into())),
    }
    validate_alphabet(&alphabet)?;
    let old = a.letter_count();
    let count = a.state_count();
    let (p0, p1, p2, pm) = (count, count + 1, count + 2, count + 3);
    let mut delta = Vec::with_capacity(2 * (count + 4));
    for q in 0..count {
        for c in 0..2 {
            delta.push(if a.is_accepting(q) {
                p0
            } else if c < old {
                a.next(q, c)
            } else {
                pm
            });
        }
    }
    delta.extend([p1, pm, pm, p2, pm, pm, pm, pm]);
    let mut accepting = a.accepting_flags().to_vec();
    accepting.extend([false, false, true, false]);
    Ok(Dfa::new(alphabet, a.initial(), delta, accepting)?.with_name(&format!("primefin_{}", a.name())))
}

fn check_prime2_input(a: &Dfa) -> Result<usize> {
    if a.alphabet() != binary().as_slice() {
        return Err(Error::Precondition("alphabet must be exactly 0 1".into()));
    }
    let acc = a.accepting_states();
    if acc.len() != 1 {
        return Err(Error::Precondition("exactly one accepting state is required".into()));
    }
    let plus = acc[0];
    if a.next(plus, 0) != plus || a.next(plus, 1) != plus {
        return Err(Error::Precondition("the accepting state must be a sink".into()));
    }
    Ok(plus)
}

/// Splices the mod-`k` counter behind the accepting sink `q_+` of `a`: the
/// `0`-self-loop of `q_+` is redirected to the counter's initial state, which
/// becomes the only accepting state.
pub fn prime2_splice(a: &Dfa, k: usize) -> Result<Dfa> {
    let plus = check_prime2_input(a)?;
    let counter = mod_counter_dfa(k)?;
    let count = a.state_count();
    let mut delta = Vec::with_capacity(2 * (count + k));
    for q in 0..count {
        for c in 0..2 {
            delta.push(if q == plus && c == 0 { count } else { a.next(q, c) });
        }
    }
    for q in 0..k {
        for c in 0..2 {
            delta.push(count + counter.next(q, c));
        }
    }
    let mut accepting = vec![false; count + k];
    accepting[count] = true;
    Dfa::new(binary(), a.initial(), delta, accepting)
}

/// The two-letter primality gadget: prime iff `L(a)` is empty. Built by
/// splicing the mod-6 counter behind the accepting sink of `a`.
pub fn prime2_gadget(a: &Dfa) -> Result<Dfa> {
    Ok(prime2_splice(a, 6)?.with_name(&format!("prime2_{}", a.name())))
}

/// Candidate factors of [`prime2_gadget`]: the mod-2 and mod-3 splices of
/// the minimal DFA of `a`.
pub fn prime2_factors(a: &Dfa) -> Result<[Dfa; 2]> {
    check_prime2_input(a)?;
    let m = minimize(a);
    if check_prime2_input(&m).is_err() {
        // The minimal DFA of the empty language has no accepting state.
        return Err(Error::Precondition("input language is empty".into()));
    }
    Ok([prime2_splice(&m, 2)?, prime2_splice(&m, 3)?])
}
