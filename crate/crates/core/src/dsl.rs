//! The line-based system language.
//!
//! ```text
//! vars X Y
//! eq X X z^-1          # X·X·z⁻¹ = 1
//! eq X t = t X^-1      # same as: eq X t X t^-1
//! neq twist(neg, Y)
//! constrain X in even
//! ```

use crate::error::{Error, Result};
use crate::system::{EqWord, Occurrence, System, Token, Twist};
use crate::zoo::GroupSpec;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Splits a word into `(column, text)` tokens; `twist(…)` groups are kept
/// whole.
fn tokenize(text: &str, offset: usize, line: usize) -> Result<Vec<(usize, String)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let mut depth = 0usize;
        while i < chars.len() && (depth > 0 || !chars[i].is_whitespace()) {
            match chars[i] {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| parse_err(line, offset + i + 1, "unbalanced `)`"))?
                }
                _ => {}
            }
            i += 1;
        }
        if depth > 0 {
            return Err(parse_err(line, offset + start + 1, "unclosed `(`"));
        }
        out.push((offset + start + 1, chars[start..i].iter().collect()));
    }
    Ok(out)
}

fn parse_word(
    spec: &GroupSpec,
    vars: &std::collections::BTreeSet<String>,
    text: &str,
    offset: usize,
    line: usize,
) -> Result<EqWord> {
    let mut tokens = Vec::new();
    for (col, tok) in tokenize(text, offset, line)? {
        let (body, inverted) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok.as_str(), false),
        };
        if body == "1" && !inverted {
            continue;
        }
        if let Some(inner) = body.strip_prefix("twist(").and_then(|r| r.strip_suffix(')')) {
            let mut parts = inner.split(',').map(str::trim);
            let (Some(tag), Some(var), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err(line, col, "expected twist(tag, variable)"));
            };
            if !vars.contains(var) {
                return Err(parse_err(line, col, format!("unknown variable `{var}`")));
            }
            let map = spec
                .automorphisms
                .get(tag)
                .ok_or_else(|| parse_err(line, col, format!("unknown twist `{tag}`")))?;
            tokens.push(Token::Var(Occurrence::twisted(
                var,
                Twist {
                    name: tag.to_string(),
                    map: map.clone(),
                },
                inverted,
            )));
        } else if vars.contains(body) {
            tokens.push(Token::Var(Occurrence {
                var: body.to_string(),
                inverted,
                twist: None,
            }));
        } else if let Some(v) = spec.labels.get(body) {
            let v = if inverted {
                spec.structure.inv(v)?
            } else {
                v.clone()
            };
            tokens.push(Token::Const(v));
        } else {
            return Err(parse_err(line, col, format!("unknown label or variable `{body}`")));
        }
    }
    Ok(EqWord(tokens))
}

/// Parses a system over the group described by `spec`.
pub fn parse_system(text: &str, spec: &GroupSpec) -> Result<System> {
    let mut system = System::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let lead = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed.trim_end(), ""));
        let rest_offset = lead + keyword.len() + 1;
        match keyword {
            "vars" => {
                for (col, name) in tokenize(rest, rest_offset, line)? {
                    if !is_identifier(&name) {
                        return Err(parse_err(line, col, format!("`{name}` is not an identifier")));
                    }
                    if spec.labels.contains_key(&name) {
                        return Err(parse_err(line, col, format!("variable `{name}` shadows a label")));
                    }
                    if !system.variables.insert(name.clone()) {
                        return Err(parse_err(line, col, format!("variable `{name}` declared twice")));
                    }
                }
            }
            "eq" | "neq" => {
                let word = match rest.split_once('=') {
                    Some((lhs, rhs)) => {
                        let u = parse_word(spec, &system.variables, lhs, rest_offset, line)?;
                        let v = parse_word(spec, &system.variables, rhs, rest_offset + lhs.len() + 1, line)?;
                        u.concat(&v.inverse(&spec.structure)?)
                    }
                    None => parse_word(spec, &system.variables, rest, rest_offset, line)?,
                };
                if keyword == "eq" {
                    system.equations.push(word);
                } else {
                    system.inequations.push(word);
                }
            }
            "constrain" => {
                let toks = tokenize(rest, rest_offset, line)?;
                let [(vcol, var), (_, kw), (ncol, name)] = toks.as_slice() else {
                    return Err(parse_err(line, rest_offset + 1, "expected `constrain X in NAME`"));
                };
                if kw != "in" {
                    return Err(parse_err(line, rest_offset + 1, "expected `constrain X in NAME`"));
                }
                if !system.variables.contains(var) {
                    return Err(parse_err(line, *vcol, format!("unknown variable `{var}`")));
                }
                let set = spec
                    .recsets
                    .get(name)
                    .ok_or_else(|| parse_err(line, *ncol, format!("unknown constraint set `{name}`")))?;
                if system.constraints.insert(var.clone(), set.clone()).is_some() {
                    return Err(parse_err(line, *vcol, format!("`{var}` constrained twice")));
                }
            }
            other => return Err(parse_err(line, lead + 1, format!("unknown directive `{other}`"))),
        }
    }
    Ok(system)
}

fn print_word(w: &EqWord, spec: &GroupSpec) -> Result<String> {
    let s = &spec.structure;
    let mut parts = Vec::new();
    for t in w.tokens() {
        parts.push(match t {
            Token::Var(o) => {
                let body = match &o.twist {
                    Some(tw) => format!("twist({}, {})", tw.name, o.var),
                    None => o.var.clone(),
                };
                if o.inverted {
                    format!("{body}^-1")
                } else {
                    body
                }
            }
            Token::Const(c) if s.is_identity(c) => "1".to_string(),
            Token::Const(c) => {
                if let Some((name, _)) = spec.labels.iter().find(|(_, v)| *v == c) {
                    name.clone()
                } else {
                    let inv = s.inv(c)?;
                    match spec.labels.iter().find(|(_, v)| **v == inv) {
                        Some((name, _)) => format!("{name}^-1"),
                        None => {
                            return Err(Error::Unsupported(format!(
                                "constant {c:?} has no label"
                            )))
                        }
                    }
                }
            }
        });
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    Ok(parts.join(" "))
}

/// Prints a system in the form accepted by [`parse_system`].
pub fn print_system(system: &System, spec: &GroupSpec) -> Result<String> {
    let mut out = String::new();
    if !system.variables.is_empty() {
        let vars: Vec<&str> = system.variables.iter().map(String::as_str).collect();
        out.push_str(&format!("vars {}\n", vars.join(" ")));
    }
    for w in &system.equations {
        out.push_str(&format!("eq {}\n", print_word(w, spec)?));
    }
    for w in &system.inequations {
        out.push_str(&format!("neq {}\n", print_word(w, spec)?));
    }
    for (var, set) in &system.constraints {
        let name = set
            .name
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("constraint on `{var}` has no name")))?;
        out.push_str(&format!("constrain {var} in {name}\n"));
    }
    Ok(out)
}
