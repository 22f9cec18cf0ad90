use std::path::Path;

use super::{IdentityRecord, Status};
use crate::series::Rat;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Parses identity lines of the form `name | order | lhs | rhs`. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_records(text: &str) -> Result<Vec<IdentityRecord>, FileError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| FileError::Syntax {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, order, lhs, rhs] = fields[..] else {
            return Err(err(format!(
                "expected 4 fields separated by '|', found {}",
                fields.len()
            )));
        };
        if name.is_empty() {
            return Err(err("empty identity name".into()));
        }
        let order: Rat = order
            .parse()
            .map_err(|_| err(format!("bad order '{order}'")))?;
        if order <= Rat::from_integer(0) {
            return Err(err(format!("order must be positive, got {order}")));
        }
        out.push(IdentityRecord {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            description: String::new(),
            default_order: order,
            status: Status::External,
        });
    }
    Ok(out)
}

pub fn load_records(path: &Path) -> Result<Vec<IdentityRecord>, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_records(&text)
}
