use std::io::Write;

use qgcrypt::protocols::RowLatinSquare;
use qgcrypt::qcore::{
    generate_quasigroup, hamming_distance, is_orthomorphism, shapeless_report, OperationTable, S3,
};
use qgcrypt::text;

use crate::args::{GenArgs, OrthomorphismArgs, PairArgs, ParastropheArgs, QgArgs, ValidateArgs};
use crate::input::{load_quasigroup, read_file, resolve_seed};
use crate::CliResult;

pub fn validate(a: ValidateArgs, out: &mut dyn Write) -> CliResult {
    if let Some(path) = a.qg {
        let q = load_quasigroup(&path)?;
        writeln!(out, "ok: Latin square of order {}", q.order())?;
    } else if let Some(path) = a.nary {
        let q = text::parse_nary(&read_file(&path)?)?;
        writeln!(
            out,
            "ok: {}-ary quasigroup of order {}",
            q.arity(),
            q.order()
        )?;
    } else if let Some(path) = a.rows {
        let r = RowLatinSquare::from_rows(&text::parse_grid(&read_file(&path)?)?)?;
        writeln!(out, "ok: row-Latin square of order {}", r.order())?;
    }
    Ok(())
}

pub fn gen(a: GenArgs, out: &mut dyn Write) -> CliResult {
    if a.order == 0 {
        return Err(qgcrypt::Error::EmptyOrder.into());
    }
    let seed = resolve_seed(a.seed);
    write!(out, "{}", generate_quasigroup(a.order, seed))?;
    Ok(())
}

pub fn parastrophe(a: ParastropheArgs, out: &mut dyn Write) -> CliResult {
    if let (Some(path), Some(sigma)) = (&a.qg, &a.sigma) {
        let sigma: S3 = sigma.parse()?;
        write!(out, "{}", load_quasigroup(path)?.parastrophe(sigma))?;
    } else if let (Some(path), Some(perm)) = (&a.nary, &a.perm) {
        let q = text::parse_nary(&read_file(path)?)?;
        let sigma = text::parse_permutation(perm)?;
        write!(out, "{}", text::format_nary(&q.parastrophe(&sigma)?))?;
    }
    Ok(())
}

pub fn product(a: PairArgs, out: &mut dyn Write) -> CliResult {
    let (p, q) = (load_quasigroup(&a.qg)?, load_quasigroup(&a.with)?);
    write!(out, "{}", p.direct_product(&q))?;
    Ok(())
}

pub fn dist(a: PairArgs, out: &mut dyn Write) -> CliResult {
    let (p, q) = (load_quasigroup(&a.qg)?, load_quasigroup(&a.with)?);
    writeln!(out, "{}", hamming_distance(&p, &q)?)?;
    Ok(())
}

pub fn shapeless(a: QgArgs, out: &mut dyn Write) -> CliResult {
    let r = shapeless_report(&load_quasigroup(&a.qg)?);
    let exponent = r
        .smallest_identity_exponent
        .map_or("none".to_owned(), |k| k.to_string());
    writeln!(out, "commutative: {}", r.commutative)?;
    writeln!(out, "associative: {}", r.associative)?;
    writeln!(out, "left unit: {}", r.has_left_unit)?;
    writeln!(out, "right unit: {}", r.has_right_unit)?;
    writeln!(out, "proper subquasigroup: {}", r.has_proper_subquasigroup)?;
    writeln!(out, "smallest identity exponent: {exponent}")?;
    writeln!(out, "min translation order: {}", r.min_translation_order)?;
    writeln!(out, "translations exceed 2n: {}", r.translations_meet_bound)?;
    writeln!(out, "shapeless: {}", r.is_shapeless)?;
    Ok(())
}

pub fn orthomorphism(a: OrthomorphismArgs, out: &mut dyn Write) -> CliResult {
    let group = load_quasigroup(&a.qg)?;
    let phi = text::parse_permutation(&a.perm)?;
    let check = is_orthomorphism(&group, &phi)?;
    writeln!(out, "orthomorphism: {}", check.is_orthomorphism)?;
    writeln!(out, "canonical: {}", check.canonical)?;
    Ok(())
}
