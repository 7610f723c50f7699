use std::io::Write;

use qgcrypt::cipher::{
    build_linear_orthosystem, decrypt_stream, decrypt_ternary, encrypt_stream, encrypt_ternary,
    r1_transform, OrthoCipher, OrthogonalSystem, StreamKey, TernaryKey,
};
use qgcrypt::qhash::{hash_fold, hash_multi, HashSpec};
use qgcrypt::{text, Error};

use crate::args::{HashArgs, OsysArgs, OsysMessageArgs, R1Args, StreamArgs, TernaryArgs};
use crate::input::{
    hex_symbols, load_quasigroup, message_bytes, parse_matrix, read_file, require_byte_order,
    symbols, to_bytes,
};
use crate::CliResult;

fn keyed(path: &std::path::Path, leader: Option<usize>) -> CliResult<(qgcrypt::Quasigroup, usize)> {
    let (q, file_leader) = text::parse_stream_key(&read_file(path)?)?;
    let leader = leader.or(file_leader).ok_or_else(|| {
        Error::InvalidArgument("no leader: pass --leader or add a leader line to the key".into())
    })?;
    Ok((q, leader))
}

pub fn stream(a: StreamArgs, encrypt: bool, out: &mut dyn Write) -> CliResult {
    let (q, leader) = keyed(&a.qg, a.leader)?;
    let key = StreamKey::new(q, leader)?;
    let inline = a.message.input.as_deref();
    if a.bytes {
        require_byte_order(key.quasigroup().order())?;
        if encrypt {
            let msg: Vec<usize> = message_bytes(inline)?
                .into_iter()
                .map(usize::from)
                .collect();
            writeln!(
                out,
                "{}",
                hex::encode(to_bytes(&encrypt_stream(&key, &msg)?))
            )?;
        } else {
            out.write_all(&to_bytes(&decrypt_stream(&key, &hex_symbols(inline)?)?))?;
        }
        return Ok(());
    }
    let msg = symbols(inline)?;
    let result = if encrypt {
        encrypt_stream(&key, &msg)?
    } else {
        decrypt_stream(&key, &msg)?
    };
    writeln!(out, "{}", text::format_symbols(&result))?;
    Ok(())
}

pub fn ternary(a: TernaryArgs, encrypt: bool, out: &mut dyn Write) -> CliResult {
    let beta = text::parse_nary(&read_file(&a.nary)?)?;
    let leaders: [usize; 4] = text::parse_symbols(&a.leaders)?
        .try_into()
        .map_err(|_| Error::InvalidArgument("--leaders takes exactly four symbols".into()))?;
    let key = TernaryKey::new(beta, leaders, a.variant.parse()?)?;
    let msg = symbols(a.message.input.as_deref())?;
    let result = if encrypt {
        encrypt_ternary(&key, &msg)?
    } else {
        decrypt_ternary(&key, &msg)?
    };
    writeln!(out, "{}", text::format_symbols(&result))?;
    Ok(())
}

pub fn r1(a: R1Args, out: &mut dyn Write) -> CliResult {
    let q = load_quasigroup(&a.qg)?;
    let result = r1_transform(&q, &symbols(a.message.input.as_deref())?)?;
    writeln!(out, "{}", text::format_symbols(&result))?;
    Ok(())
}

fn load_system(a: &OsysArgs) -> CliResult<OrthogonalSystem> {
    if let (Some(p), Some(matrix)) = (a.p, &a.matrix) {
        let rows = parse_matrix(matrix)?;
        return Ok(build_linear_orthosystem(rows.len(), p, &rows)?);
    }
    let ops = a
        .nary
        .iter()
        .map(|path| Ok(text::parse_nary_operation(&read_file(path)?)?))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(OrthogonalSystem::new(ops)?)
}

pub fn osys_verify(a: OsysArgs, out: &mut dyn Write) -> CliResult {
    writeln!(
        out,
        "orthogonal: {}",
        load_system(&a)?.verify_orthogonality()?
    )?;
    Ok(())
}

pub fn osys_message(a: OsysMessageArgs, encrypt: bool, out: &mut dyn Write) -> CliResult {
    let cipher = OrthoCipher::new(load_system(&a.system)?)?;
    let msg = symbols(a.message.input.as_deref())?;
    let result = if encrypt {
        cipher.encrypt_message(&msg)?
    } else {
        cipher.decrypt_message(&msg)?
    };
    writeln!(out, "{}", text::format_symbols(&result))?;
    Ok(())
}

pub fn hash(a: HashArgs, out: &mut dyn Write) -> CliResult {
    let lanes = a.lanes.as_deref().map(text::parse_symbols).transpose()?;
    // with lanes the single-fold leader is unused, so any lane leader will do
    let fallback = lanes.as_ref().and_then(|l| l.first().copied());
    let (q, leader) = keyed(&a.qg, a.leader.or(fallback))?;
    let mut spec = HashSpec::new(q, leader)?;
    if let Some(lanes) = lanes {
        spec = spec.with_digest_leaders(lanes)?;
    }
    let inline = a.message.input.as_deref();
    let msg = if a.bytes {
        require_byte_order(spec.quasigroup().order())?;
        message_bytes(inline)?
            .into_iter()
            .map(usize::from)
            .collect()
    } else {
        symbols(inline)?
    };
    let digest = if a.lanes.is_some() {
        hash_multi(&spec, &msg)?
    } else {
        vec![hash_fold(&spec, &msg)?]
    };
    if a.bytes {
        writeln!(out, "{}", hex::encode(to_bytes(&digest)))?;
    } else {
        writeln!(out, "{}", text::format_symbols(&digest))?;
    }
    Ok(())
}
