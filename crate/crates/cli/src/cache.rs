//! On-disk Krawtchouk tables, keyed by length and alphabet size. The
//! directory comes from `DNAGC_KRAWTCHOUK_CACHE`; without it tables live
//! only in memory.

use std::path::PathBuf;

use dnagc::enumerators::krawtchouk::{install_table, table};
use dnagc::enumerators::KrawtchoukTable;

pub const CACHE_ENV: &str = "DNAGC_KRAWTCHOUK_CACHE";

fn path_for(n: u32, q: u32) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(PathBuf::from(dir).join(format!("krawtchouk-n{n}-q{q}.json")))
}

/// Loads the binary table for length `n` from the cache directory, or
/// computes and stores it. Cache problems are reported and otherwise ignored.
pub fn prime(n: usize) {
    let (n, q) = (n as u32, 2);
    let Some(path) = path_for(n, q) else { return };
    if let Ok(text) = std::fs::read_to_string(&path) {
        match serde_json::from_str::<KrawtchoukTable>(&text) {
            Ok(t) if t.n() == n && t.q() == q => {
                install_table(t);
                return;
            }
            _ => eprintln!("warning: ignoring unreadable Krawtchouk cache {}", path.display()),
        }
    }
    let t = table(n, q);
    let write = || -> std::io::Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(&path, serde_json::to_string(&*t).expect("table serializes"))
    };
    if let Err(e) = write() {
        eprintln!("warning: cannot write Krawtchouk cache {}: {e}", path.display());
    }
}
