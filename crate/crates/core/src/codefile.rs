//! The `codefile v1` text format.
//!
//! ```text
//! codefile v1
//! q 2
//! n 3
//! systematic 0
//! 000
//! 111
//! ```
//!
//! Header lines are `q`, `n`, an optional `modulus c0 .. cm` for non-prime
//! q and an optional `systematic i1 .. ik`. Each following line is one
//! codeword of n digits. Blank lines and `#` comments are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::code::Code;
use crate::field::FieldSpec;

pub const MAGIC: &str = "codefile v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| f.parse::<usize>().or_else(|_| fail(line, format!("expected an integer, found {f:?}"))))
        .collect()
}

pub fn write_code(code: &Code) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "q {}", code.q());
    let _ = writeln!(out, "n {}", code.n());
    if !code.field().is_prime_field() {
        let coeffs: Vec<String> = code.field().modulus().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "modulus {}", coeffs.join(" "));
    }
    if let Some(sys) = code.systematic_coords() {
        out.push_str("systematic");
        for c in sys {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    for i in 0..code.size() {
        out.push_str(&code.word_string(i));
        out.push('\n');
    }
    out
}

pub fn parse_code(text: &str) -> Result<Code, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((line, other)) => return fail(line, format!("expected {MAGIC:?}, found {other:?}")),
        None => return fail(1, "empty file"),
    }

    let mut n: Option<usize> = None;
    let mut modulus: Option<(usize, Vec<usize>)> = None;
    let mut systematic: Option<(usize, Vec<usize>)> = None;
    let mut field: Option<FieldSpec> = None;
    let mut words: Vec<Vec<u8>> = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();

    for (line, content) in lines {
        let starts_alpha = content.chars().next().is_some_and(|c| c.is_ascii_alphabetic());
        if starts_alpha {
            if !words.is_empty() {
                return fail(line, "header line after codewords");
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let args = &fields[1..];
            match fields[0] {
                "q" | "n" => {
                    let values = parse_numbers(line, args)?;
                    if values.len() != 1 {
                        return fail(line, format!("{} takes exactly one value", fields[0]));
                    }
                    if fields[0] == "q" {
                        let order = u32::try_from(values[0]).or_else(|_| fail(line, "q too large"))?;
                        field = Some(FieldSpec::new(order).or_else(|e| fail(line, e.to_string()))?);
                    } else {
                        n = Some(values[0]);
                    }
                }
                "modulus" => modulus = Some((line, parse_numbers(line, args)?)),
                "systematic" => systematic = Some((line, parse_numbers(line, args)?)),
                other => return fail(line, format!("unknown header {other:?}")),
            }
            continue;
        }
        let (Some(f), Some(len)) = (field.as_ref(), n) else {
            return fail(line, "codeword before the q and n headers");
        };
        let mut word = Vec::with_capacity(len);
        for ch in content.chars() {
            match ch.to_digit(10) {
                Some(v) if v < f.order() => word.push(v as u8),
                Some(v) => return fail(line, format!("digit {v} out of range for q = {}", f.order())),
                None => return fail(line, format!("invalid character {ch:?}")),
            }
        }
        if word.len() != len {
            return fail(line, format!("codeword has length {}, expected {len}", word.len()));
        }
        if !seen.insert(word.clone()) {
            return fail(line, "duplicate codeword");
        }
        words.push(word);
    }

    let Some(field) = field else { return fail(1, "missing q header") };
    let Some(n) = n else { return fail(1, "missing n header") };
    if let Some((line, coeffs)) = modulus {
        let expected: Vec<usize> = field.modulus().iter().map(|&c| c as usize).collect();
        if coeffs != expected {
            return fail(line, format!("unsupported modulus {coeffs:?}, expected {expected:?}"));
        }
    }
    if words.is_empty() {
        return fail(1, "no codewords");
    }
    let code = Code::new(field, n, words).or_else(|e| fail(1, e.to_string()))?;
    match systematic {
        Some((line, coords)) => code.with_systematic(coords).or_else(|e| fail(line, e.to_string())),
        None => Ok(code),
    }
}
