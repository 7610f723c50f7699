use std::fs;
use std::io::{self, Read};
use std::path::Path;

use qgcrypt::{text, Error, Quasigroup};

use crate::CliResult;

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())).into())
}

pub fn load_quasigroup(path: &Path) -> CliResult<Quasigroup> {
    Ok(text::parse_quasigroup(&read_file(path)?)?)
}

/// The `--in` value, or all of stdin.
pub fn message_text(inline: Option<&str>) -> CliResult<String> {
    match inline {
        Some(s) => Ok(s.to_owned()),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

pub fn message_bytes(inline: Option<&str>) -> CliResult<Vec<u8>> {
    match inline {
        Some(s) => Ok(s.as_bytes().to_vec()),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

pub fn symbols(inline: Option<&str>) -> CliResult<Vec<usize>> {
    Ok(text::parse_symbols(&message_text(inline)?)?)
}

pub fn hex_symbols(inline: Option<&str>) -> CliResult<Vec<usize>> {
    let text = message_text(inline)?;
    let bytes =
        hex::decode(text.trim()).map_err(|e| Error::Parse(format!("bad hex input: {e}")))?;
    Ok(bytes.into_iter().map(usize::from).collect())
}

pub fn require_byte_order(q_order: usize) -> CliResult {
    if q_order != 256 {
        return Err(Error::InvalidArgument(format!(
            "--bytes needs a quasigroup of order 256, got {q_order}"
        ))
        .into());
    }
    Ok(())
}

pub fn to_bytes(symbols: &[usize]) -> Vec<u8> {
    symbols.iter().map(|&s| s as u8).collect()
}

/// `"1 1; 1 2"` → rows.
pub fn parse_matrix(s: &str) -> CliResult<Vec<Vec<u64>>> {
    s.split(';')
        .filter(|row| !row.trim().is_empty())
        .map(|row| {
            Ok(text::parse_symbols(row)?
                .into_iter()
                .map(|v| v as u64)
                .collect())
        })
        .collect()
}

/// The given seed, or a fresh one reported on stderr so the run can be repeated.
pub fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random();
        eprintln!("seed: {s}");
        s
    })
}
