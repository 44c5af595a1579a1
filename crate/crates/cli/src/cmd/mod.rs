pub mod analyze;
pub mod bench;
pub mod dna_check;
pub mod gc;
pub mod groups;
pub mod search;
pub mod tables;

use std::path::Path;

use dnagc::algebra::io::parse_code;
use dnagc::LinearCode;

use crate::config::read_input;
use crate::error::CliResult;

pub fn load_code(path: &Path) -> CliResult<LinearCode> {
    let text = read_input(path)?;
    parse_code(&text).map_err(|e| crate::error::CliError::Data(format!("{}: {e}", path.display())))
}
