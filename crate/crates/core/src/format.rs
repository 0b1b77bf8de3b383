//! Text forms of words and subsets.

use crate::coxeter::Subset;
use crate::error::{Error, Result};

/// Words are digit strings for rank ≤ 9 (`"123423"`) and dot-separated
/// otherwise (`"1.10.2"`); labels are 1-based.
pub fn word_to_string(word: &[usize], rank: usize) -> String {
    let labels: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
    if rank <= 9 {
        labels.concat()
    } else {
        labels.join(".")
    }
}

/// Parses a word into 0-based indices. `"1"` style digit strings and
/// dot-separated labels are both accepted; `""` and `"."` denote the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "." || s == "1_" {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    if s.contains('.') {
        let mut pos = 0;
        for part in s.split('.') {
            let l: usize = part.parse().map_err(|_| Error::Parse { pos, msg: format!("bad label `{part}`") })?;
            check_label(l, rank, pos)?;
            out.push(l - 1);
            pos += part.len() + 1;
        }
    } else {
        for (pos, c) in s.chars().enumerate() {
            let l = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse { pos, msg: format!("unexpected `{c}`") })? as usize;
            check_label(l, rank, pos)?;
            out.push(l - 1);
        }
    }
    Ok(out)
}

fn check_label(l: usize, rank: usize, pos: usize) -> Result<()> {
    if l == 0 || l > rank {
        return Err(Error::Parse { pos, msg: format!("generator {l} out of range 1..={rank}") });
    }
    Ok(())
}

/// Parses `"[2]"`, `"[3,4]"`, `"[]"` or a bare `"3,4"`.
pub fn parse_subset(s: &str, rank: usize) -> Result<Subset> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let mut out = Subset::EMPTY;
    let mut pos = 0;
    for part in inner.split(',') {
        let p = part.trim();
        if !p.is_empty() {
            let l: usize = p.parse().map_err(|_| Error::Parse { pos, msg: format!("bad label `{p}`") })?;
            check_label(l, rank, pos)?;
            out.insert(l - 1);
        }
        pos += part.len() + 1;
    }
    Ok(out)
}
