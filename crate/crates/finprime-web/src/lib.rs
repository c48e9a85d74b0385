//! WebAssembly bindings for the browser demo. Each exported function takes
//! the text of a DFA document and returns plain text; errors are returned
//! as a line starting with `error=`.

use wasm_bindgen::prelude::wasm_bindgen;

use finprime::automaton::{format_word, index_of, is_finite_language, minimize, parse_dfa, serialize_dfa, to_dot};
use finprime::classifier::{has_cep, is_safety, linear_profile};
use finprime::primality::decide;
use finprime::{DecompositionMode, Dfa, Result};

const MODES: [DecompositionMode; 4] = [
    DecompositionMode::Intersection,
    DecompositionMode::Union,
    DecompositionMode::Dnf,
    DecompositionMode::SizeIntersection,
];

fn or_error(r: Result<String>) -> String {
    r.unwrap_or_else(|e| format!("error={e}\n"))
}

fn analyze_text(text: &str) -> Result<String> {
    let a = parse_dfa(text)?;
    let mut out = format!("states={}\nindex={}\n", a.state_count(), index_of(&a));
    if !is_finite_language(&a) {
        out.push_str("finite=false\n");
        return Ok(out);
    }
    out.push_str("finite=true\n");
    out.push_str(&profile_lines(&a)?);
    for mode in MODES {
        let v = decide(&a, mode)?;
        out.push_str(&format!("{}={} ({})", mode.as_str(), v.status.as_str(), v.branch.as_str()));
        if let Some(w) = &v.witness {
            out.push_str(&format!(" witness={}", format_word(a.alphabet(), w)));
        }
        out.push('\n');
    }
    Ok(out)
}

fn profile_lines(a: &Dfa) -> Result<String> {
    let Some(p) = linear_profile(a)? else {
        return Ok("linear=false\n".into());
    };
    let mut out = format!("linear=true\nlongest={}\nsafety={}\n", p.n(), is_safety(a));
    if p.n() >= 1 {
        let cep = has_cep(&p)?;
        out.push_str(&format!("cep={}\n", cep.holds));
    }
    Ok(out)
}

/// Structural facts and the verdict under every primality notion.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    or_error(analyze_text(text))
}

/// Canonical minimal DFA document.
#[wasm_bindgen]
pub fn minimize_document(text: &str) -> String {
    or_error(parse_dfa(text).map(|a| {
        let name = a.name().to_string();
        serialize_dfa(&minimize(&a).with_name(&name))
    }))
}

/// Graphviz DOT rendering.
#[wasm_bindgen]
pub fn dot_document(text: &str) -> String {
    or_error(parse_dfa(text).map(|a| to_dot(&a)))
}
