use std::fs;
use std::io::Write;

use qgcrypt::latinsets::{
    completion_count, deal_shares, greedy_critical_search, is_critical,
    reconstruct as reconstruct_square, smallest_critical_exhaustive, unique_completion,
    PartialLatinSquare,
};

use crate::args::{
    CsCountArgs, CsCriticalArgs, CsDealArgs, CsReconstructArgs, PartialArgs, QgArgs, SeededQgArgs,
};
use crate::input::{load_quasigroup, read_file, resolve_seed};
use crate::CliResult;

fn load_partial(path: &std::path::Path) -> CliResult<PartialLatinSquare> {
    Ok(read_file(path)?.parse()?)
}

pub fn count(a: CsCountArgs, out: &mut dyn Write) -> CliResult {
    writeln!(
        out,
        "{}",
        completion_count(&load_partial(&a.partial)?, a.limit)
    )?;
    Ok(())
}

pub fn unique(a: PartialArgs, out: &mut dyn Write) -> CliResult {
    match unique_completion(&load_partial(&a.partial)?) {
        Some(q) => write!(out, "unique: true\n{q}")?,
        None => writeln!(out, "unique: false")?,
    }
    Ok(())
}

pub fn critical(a: CsCriticalArgs, out: &mut dyn Write) -> CliResult {
    let verdict = is_critical(&load_partial(&a.partial)?, &load_quasigroup(&a.qg)?)?;
    writeln!(out, "critical: {verdict}")?;
    Ok(())
}

pub fn greedy(a: SeededQgArgs, out: &mut dyn Write) -> CliResult {
    let q = load_quasigroup(&a.qg)?;
    let seed = resolve_seed(a.seed);
    write!(out, "{}", greedy_critical_search(&q, seed)?)?;
    Ok(())
}

pub fn smallest(a: QgArgs, out: &mut dyn Write) -> CliResult {
    let p = smallest_critical_exhaustive(&load_quasigroup(&a.qg)?)?;
    writeln!(out, "# size {}", p.len())?;
    write!(out, "{p}")?;
    Ok(())
}

pub fn deal(a: CsDealArgs, out: &mut dyn Write) -> CliResult {
    let q = load_quasigroup(&a.qg)?;
    let c = load_partial(&a.critical)?;
    let seed = resolve_seed(a.seed);
    let deal = deal_shares(&q, &c, a.participants, seed)?;
    if let Some(dir) = &a.out_dir {
        fs::create_dir_all(dir)?;
    }
    for (i, share) in deal.shares.iter().enumerate() {
        match &a.out_dir {
            Some(dir) => {
                let path = dir.join(format!("share-{}.txt", i + 1));
                fs::write(&path, share.to_string())?;
                writeln!(out, "{}", path.display())?;
            }
            None => write!(out, "# share {}\n{share}", i + 1)?,
        }
    }
    Ok(())
}

pub fn reconstruct(a: CsReconstructArgs, out: &mut dyn Write) -> CliResult {
    let shares = a
        .share
        .iter()
        .map(|p| load_partial(p))
        .collect::<CliResult<Vec<_>>>()?;
    write!(out, "{}", reconstruct_square(a.order, &shares)?)?;
    Ok(())
}
