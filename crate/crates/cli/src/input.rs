use std::path::Path;

use thiserror::Error;
use versal_core::polyring::RingSpec;
use versal_core::{Error as CoreError, Poly};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A validated input file: the ring and the ideal generators.
#[derive(Clone, Debug)]
pub struct InputSystem {
    pub ring: RingSpec,
    pub generators: Vec<Poly>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub fn load_input(path: &Path) -> Result<InputSystem, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_input(&text)
}

/// Parse one degree entry per variable: integers or parenthesized tuples.
fn parse_degrees(text: &str, line: usize, offset: usize) -> Result<Vec<Vec<i64>>, InputError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let parse_int = |s: &str, col: usize| -> Result<i64, InputError> {
        s.trim().parse::<i64>().map_err(|_| {
            syntax(
                line,
                col,
                format!("expected an integer degree, found '{}'", s.trim()),
            )
        })
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let col = offset + i + 1;
        if c == '(' {
            let close = chars[i..]
                .iter()
                .position(|&x| x == ')')
                .ok_or_else(|| syntax(line, col, "unclosed '(' in degree tuple"))?;
            let inner: String = chars[i + 1..i + close].iter().collect();
            let tuple = inner
                .split(',')
                .map(|s| parse_int(s, col))
                .collect::<Result<Vec<_>, _>>()?;
            out.push(tuple);
            i += close + 1;
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(vec![parse_int(&word, col)?]);
        }
    }
    Ok(out)
}

pub fn parse_input(text: &str) -> Result<InputSystem, InputError> {
    let mut ring_seen = false;
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut degrees: Option<(usize, Vec<Vec<i64>>)> = None;
    let mut gens_src: Vec<(usize, usize, String)> = Vec::new();
    let mut in_gens = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indented = content.starts_with(' ') || content.starts_with('\t');
        if in_gens && indented {
            let lead = content.len() - content.trim_start().len();
            gens_src.push((line, lead, content.trim().to_string()));
            continue;
        }
        in_gens = false;
        let Some((key, value)) = content.split_once(':') else {
            return Err(syntax(line, 1, "expected 'key: value'"));
        };
        let value_offset = key.len() + 1 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key.trim() {
            "ring" => {
                if value != "QQ" {
                    return Err(syntax(
                        line,
                        value_offset + 1,
                        format!("unsupported coefficient ring '{value}'; only QQ is accepted"),
                    ));
                }
                ring_seen = true;
            }
            "vars" => {
                let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(syntax(line, value_offset + 1, "no variables declared"));
                }
                vars = Some((line, names));
            }
            "degrees" => degrees = Some((line, parse_degrees(value, line, value_offset)?)),
            "generators" => {
                if !value.is_empty() {
                    return Err(syntax(
                        line,
                        value_offset + 1,
                        "generators go on the following indented lines",
                    ));
                }
                in_gens = true;
            }
            other => return Err(syntax(line, 1, format!("unknown key '{other}'"))),
        }
    }

    if !ring_seen {
        return Err(syntax(1, 1, "missing 'ring: QQ' line"));
    }
    let (vars_line, names) = vars.ok_or_else(|| syntax(1, 1, "missing 'vars:' line"))?;
    let ring = match degrees {
        None => RingSpec::new(&names).map_err(|e| syntax(vars_line, 1, e.to_string()))?,
        Some((line, degs)) => {
            let rank = degs.first().map_or(1, |d| d.len());
            if degs.iter().any(|d| d.len() != rank) {
                return Err(syntax(line, 1, "degree tuples have different lengths"));
            }
            RingSpec::with_degrees(&names, rank, degs)
                .map_err(|e| syntax(line, 1, e.to_string()))?
        }
    };

    if gens_src.is_empty() {
        return Err(syntax(1, 1, "no generators given"));
    }
    let mut generators = Vec::new();
    for (line, lead, src) in gens_src {
        let p: Poly = ring.parse(&src).map_err(|e| match e {
            CoreError::Syntax { column, message } => syntax(line, lead + column, message),
            other => syntax(line, lead + 1, other.to_string()),
        })?;
        if p.is_zero() {
            return Err(syntax(line, lead + 1, "generator is zero"));
        }
        if ring.degrees_declared() && !ring.is_homogeneous(&p) {
            return Err(syntax(
                line,
                lead + 1,
                "generator is not homogeneous for the declared degrees",
            ));
        }
        generators.push(p);
    }
    Ok(InputSystem { ring, generators })
}
