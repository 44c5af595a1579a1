//! `dnagc dna-check`.

use dnagc::dna::{constraint_audit, decode_dna, find_tandem_repeat, is_ss_free, read_words, AuditMode};
use dnagc::Vector;
use serde::Serialize;
use serde_json::Value;

use crate::config::{document, emit_json, read_input, RunConfig};
use crate::error::{CliError, CliResult};
use crate::DnaCheckArgs;

#[derive(Serialize)]
struct Verdict {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    word: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct WordReport {
    check: String,
    total: usize,
    passed: usize,
    failed: usize,
    words: Vec<Verdict>,
}

pub fn run(mut config: RunConfig, args: DnaCheckArgs) -> CliResult<()> {
    config.input = Some(args.file.clone());
    config.output = args.out.clone();
    config.l = args.cf;
    config.d = args.audit;
    let config = config.option("ssf", args.ssf).option("code", &args.code);
    config.validate()?;
    let text = read_input(&args.file)?;
    let words = read_words(&text).map_err(|e| CliError::Data(format!("{}: {e}", args.file.display())))?;

    let report: Value = if let Some(d) = args.audit {
        let vectors: Vec<Vector> = words.iter().map(|w| decode_dna(&w.word)).collect::<dnagc::Result<_>>()?;
        let code = args.code.as_deref().map(super::load_code).transpose()?;
        let mode = if code.is_some() { AuditMode::LinearShortcut } else { AuditMode::Explicit };
        let r = constraint_audit(&vectors, d, mode, code.as_ref())?;
        eprintln!("{} words: hd_ok={} r_ok={} rc_ok={}", r.words, r.hd_ok, r.r_ok, r.rc_ok);
        serde_json::to_value(r).expect("report serializes")
    } else {
        let check = match args.cf {
            Some(l) => format!("conflict-free l={l}"),
            None => "secondary-structure-free".into(),
        };
        let mut verdicts = Vec::with_capacity(words.len());
        for w in &words {
            let (ok, detail) = match args.cf {
                Some(l) => {
                    // blocks longer than half the word cannot repeat
                    let limit = l.min(w.word.len() / 2);
                    let found = if limit == 0 { None } else { find_tandem_repeat(&w.word, limit)? };
                    match found {
                        None => (true, None),
                        Some(t) => (false, Some(format!("repeated block of length {} at offset {}", t.size, t.start))),
                    }
                }
                None => (is_ss_free(&w.word), None),
            };
            verdicts.push(Verdict { name: w.name.clone(), word: w.word.to_string(), ok, detail });
        }
        let passed = verdicts.iter().filter(|v| v.ok).count();
        eprintln!("{check}: {passed} of {} words pass", verdicts.len());
        serde_json::to_value(WordReport {
            check,
            total: verdicts.len(),
            passed,
            failed: verdicts.len() - passed,
            words: verdicts,
        })
        .expect("report serializes")
    };
    emit_json(args.out.as_deref(), &document(&config, report))
}
