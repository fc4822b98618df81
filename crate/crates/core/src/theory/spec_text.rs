//! Text form of theory specifications.

use super::{Tail, TheoryKind, TheorySpec};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Ring};

fn identifiers(text: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_alphabetic() || chars[i] == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            if !out.contains(&name) {
                out.push(name);
            }
        } else if chars[i].is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
}

fn items(list: &str) -> Vec<String> {
    let list = list.trim();
    if list.is_empty() {
        return Vec::new();
    }
    list.split(',').map(|s| s.trim().to_string()).collect()
}

fn keyed<'a>(word: &'a str, key: &str) -> Result<&'a str> {
    word.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::parse(word, format!("expected `{key}=...`")))
}

pub(super) fn parse_theory(text: &str) -> Result<TheorySpec> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let words: Vec<&str> = rest.split_whitespace().collect();
    let lists: Vec<Vec<String>> = match head {
        "const" => {
            if words.len() != 1 {
                return Err(Error::parse(rest, "`const` takes one value"));
            }
            vec![vec![words[0].to_string()]]
        }
        "poly" | "seq" => vec![items(&words.concat())],
        "rational" => {
            if words.len() != 2 {
                return Err(Error::parse(rest, "expected `beta=... gamma=...`"));
            }
            vec![items(keyed(words[0], "beta")?), items(keyed(words[1], "gamma")?)]
        }
        "ratio" => {
            if words.len() != 2 {
                return Err(Error::parse(rest, "expected `p=... q=...`"));
            }
            vec![items(keyed(words[0], "p")?), items(keyed(words[1], "q")?)]
        }
        other => return Err(Error::parse(other, "unknown theory kind")),
    };
    let mut tail = Tail::Undefined;
    let mut lists = lists;
    if head == "seq" {
        if lists[0].last().map(String::as_str) == Some("...") {
            lists[0].pop();
        }
        if lists[0].is_empty() {
            return Err(Error::parse(text, "empty sequence"));
        }
    } else {
        tail = Tail::ZeroExtended;
    }
    if lists[0]
        .iter()
        .chain(lists.get(1).into_iter().flatten())
        .any(|s| s.is_empty())
    {
        return Err(Error::parse(text, "empty list entry"));
    }
    let mut names = Vec::new();
    for l in &lists {
        for item in l {
            identifiers(item, &mut names);
        }
    }
    let ring = Ring::new(names);
    let parse_list = |l: &Vec<String>| -> Result<Vec<MultiPoly>> { l.iter().map(|s| ring.parse(s)).collect() };
    let kind = match head {
        "const" | "poly" => TheoryKind::Polynomial {
            coeffs: parse_list(&lists[0])?,
        },
        "seq" => TheoryKind::Sequence {
            alphas: parse_list(&lists[0])?,
            tail,
        },
        "rational" => TheoryKind::RationalByRoots {
            beta: parse_list(&lists[0])?,
            gamma: parse_list(&lists[1])?,
        },
        _ => TheoryKind::RationalByCoeffs {
            p: parse_list(&lists[0])?,
            q: parse_list(&lists[1])?,
        },
    };
    TheorySpec::new(&ring, kind)
}
