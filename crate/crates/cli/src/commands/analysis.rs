use std::io::Write;

use qgcrypt::mqq::{classify_mqq, theorem1_generate};
use qgcrypt::nlpn::{linear_complexity, nlpn_pair, pn_sequence, primitive_polynomial, Lfsr};
use qgcrypt::{text, Error};

use crate::args::{MqqGenArgs, NlpnArgs, QgArgs};
use crate::input::{load_quasigroup, resolve_seed};
use crate::CliResult;

pub fn nlpn(a: NlpnArgs, out: &mut dyn Write) -> CliResult {
    let coeffs = match &a.poly {
        Some(poly) => text::parse_symbols(poly)?
            .into_iter()
            .map(|c| c as u64)
            .collect(),
        None => primitive_polynomial(a.p, a.m).ok_or_else(|| {
            Error::InvalidArgument(format!("no built-in polynomial for p={} m={}", a.p, a.m))
        })?,
    };
    if coeffs.len() != a.m {
        return Err(Error::InvalidArgument(format!(
            "--poly has {} coefficients, --m is {}",
            coeffs.len(),
            a.m
        ))
        .into());
    }
    let seq = pn_sequence(&Lfsr::new(a.p, coeffs)?)?;
    let q = load_quasigroup(&a.qg)?;
    let (b, c) = nlpn_pair(&seq, a.shift, &q)?;
    for (name, s) in [("a", &seq), ("b", &b), ("c", &c)] {
        writeln!(out, "{name}: {}", text::format_symbols(s.symbols()))?;
    }
    for (name, s) in [("a", &seq), ("b", &b), ("c", &c)] {
        writeln!(out, "linear complexity {name}: {}", linear_complexity(s)?)?;
    }
    Ok(())
}

pub fn mqq_classify(a: QgArgs, out: &mut dyn Write) -> CliResult {
    let c = classify_mqq(&load_quasigroup(&a.qg)?)?;
    writeln!(out, "degrees: {}", text::format_symbols(&c.degrees))?;
    writeln!(out, "{}", c.verdict)?;
    Ok(())
}

pub fn mqq_gen(a: MqqGenArgs, out: &mut dyn Write) -> CliResult {
    let seed = resolve_seed(a.seed);
    let inst = theorem1_generate(a.d, seed, a.max_attempts)?;
    eprintln!("attempts: {}", inst.attempts);
    write!(out, "{}", inst.quasigroup)?;
    writeln!(out, "# {}", inst.classification.verdict)?;
    Ok(())
}
