//! DNA word lists: plain text with one word per line, or FASTA-style
//! records introduced by `>` header lines.

use crate::dna::seq::DnaString;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedWord {
    pub name: Option<String>,
    pub word: DnaString,
}

fn parse_line(line_no: usize, text: &str) -> Result<DnaString> {
    text.parse().map_err(|e| match e {
        Error::BadSymbol { symbol, offset } => {
            Error::Parse { line: line_no, msg: format!("bad base {symbol:?} at column {}", offset + 1) }
        }
        other => other,
    })
}

/// Reads either format; FASTA is detected by a leading `>` line. Blank lines
/// and `#` comments are skipped.
pub fn read_words(text: &str) -> Result<Vec<NamedWord>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let fasta = lines.first().is_some_and(|(_, l)| l.starts_with('>'));
    if !fasta {
        return lines.into_iter().map(|(no, l)| Ok(NamedWord { name: None, word: parse_line(no, l)? })).collect();
    }
    let mut out = Vec::new();
    let mut current: Option<(String, String, usize)> = None;
    for (no, l) in lines {
        if let Some(header) = l.strip_prefix('>') {
            if let Some((name, seq, start)) = current.take() {
                out.push(NamedWord { name: Some(name), word: parse_line(start, &seq)? });
            }
            current = Some((header.trim().to_string(), String::new(), no + 1));
        } else if let Some((_, seq, _)) = current.as_mut() {
            parse_line(no, l)?;
            seq.push_str(l);
        }
    }
    if let Some((name, seq, start)) = current {
        out.push(NamedWord { name: Some(name), word: parse_line(start, &seq)? });
    }
    Ok(out)
}

pub fn write_words(words: &[DnaString]) -> String {
    words.iter().map(|w| format!("{w}\n")).collect()
}

/// FASTA output with headers `>{prefix}{index}`, numbered from 1.
pub fn write_fasta(words: &[DnaString], prefix: &str) -> String {
    words.iter().enumerate().map(|(i, w)| format!(">{prefix}{}\n{w}\n", i + 1)).collect()
}
