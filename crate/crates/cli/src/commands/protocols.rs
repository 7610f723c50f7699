use std::io::Write;

use rand::rngs::StdRng;
use rand::SeedableRng;

use qgcrypt::protocols::{
    ci_key_transport, ex8_transport, make_linear_ci, rls_key_agreement, rst_key_transport,
    zkp_simulate, Challenge, RowLatinSquare, RstQuasigroup,
};
use qgcrypt::{text, Isotopy};

use crate::args::{
    CiSource, CiTransportArgs, Ex8Args, RlsAgreeArgs, RlsArgs, RlsPowerArgs, RstTransportArgs,
    ZkpArgs,
};
use crate::input::{load_quasigroup, read_file, resolve_seed};
use crate::CliResult;

fn ci_source(src: &CiSource) -> CliResult<RstQuasigroup> {
    if let (Some(n), Some(a)) = (src.modulus, src.multiplier) {
        return Ok(make_linear_ci(n, a)?);
    }
    let (Some(qg), Some(j)) = (&src.qg, &src.j) else {
        unreachable!("clap requires --modulus/--multiplier or --qg/--j");
    };
    Ok(RstQuasigroup::ci(
        load_quasigroup(qg)?,
        text::parse_permutation(j)?,
    )?)
}

pub fn ci_transport(a: CiTransportArgs, out: &mut dyn Write) -> CliResult {
    let t = ci_key_transport(&ci_source(&a.source)?, a.element, a.message)?;
    writeln!(out, "element: {}", t.element)?;
    writeln!(out, "ciphertext: {}", t.ciphertext)?;
    writeln!(out, "recovered: {}", t.recovered)?;
    Ok(())
}

pub fn rst_transport(a: RstTransportArgs, out: &mut dyn Write) -> CliResult {
    let base = ci_source(&a.source)?;
    let q = RstQuasigroup::new(base.quasigroup().clone(), base.j().clone(), a.r, a.s, a.t)?;
    let t = rst_key_transport(&q, a.k, a.u, a.message)?;
    writeln!(out, "element: {}", t.element)?;
    writeln!(out, "ciphertext: {}", t.ciphertext)?;
    writeln!(out, "combined: {}", t.combined)?;
    writeln!(out, "recovered: {}", t.recovered)?;
    Ok(())
}

pub fn ex8(a: Ex8Args, out: &mut dyn Write) -> CliResult {
    let t = ex8_transport(&ci_source(&a.source)?, a.public, a.message)?;
    writeln!(out, "ciphertext: {}", t.ciphertext)?;
    writeln!(out, "recovered: {}", t.recovered)?;
    writeln!(out, "cycle: {}", text::format_symbols(&t.cycle))?;
    writeln!(out, "short cycle: {}", t.short_cycle)?;
    Ok(())
}

fn load_rows(path: &std::path::Path) -> CliResult<RowLatinSquare> {
    Ok(RowLatinSquare::from_rows(&text::parse_grid(&read_file(
        path,
    )?)?)?)
}

fn write_rows(out: &mut dyn Write, r: &RowLatinSquare) -> CliResult {
    write!(out, "{}", text::format_grid(&r.to_grid()))?;
    Ok(())
}

pub fn rls_power(a: RlsPowerArgs, out: &mut dyn Write) -> CliResult {
    write_rows(out, &load_rows(&a.rows)?.power(a.exp))
}

pub fn rls_period(a: RlsArgs, out: &mut dyn Write) -> CliResult {
    writeln!(out, "{}", load_rows(&a.rows)?.period())?;
    Ok(())
}

pub fn rls_agree(a: RlsAgreeArgs, out: &mut dyn Write) -> CliResult {
    let k = rls_key_agreement(&load_rows(&a.rows)?, a.x, a.y)?;
    writeln!(out, "# first public")?;
    write_rows(out, &k.first_public)?;
    writeln!(out, "# second public")?;
    write_rows(out, &k.second_public)?;
    writeln!(out, "# shared key")?;
    write_rows(out, &k.first_key)?;
    writeln!(out, "agreed: {}", k.agreed())?;
    Ok(())
}

pub fn zkp(a: ZkpArgs, out: &mut dyn Write) -> CliResult {
    let l = load_quasigroup(&a.qg)?;
    let seed = resolve_seed(a.seed);
    let secret = match &a.isotopy {
        Some(path) => text::parse_isotopy(&read_file(path)?)?,
        // derived from the seed too, so `--seed` alone reproduces a run
        None => Isotopy::random(l.order(), &mut StdRng::seed_from_u64(seed)),
    };
    let l_prime = secret.apply(&l)?;
    let t = zkp_simulate(&l, &l_prime, &secret, a.rounds, seed, a.cheat)?;
    for (i, round) in t.rounds.iter().enumerate() {
        let challenge = match round.challenge {
            Challenge::A => "A",
            Challenge::B => "B",
        };
        writeln!(
            out,
            "round {}: challenge {challenge}, verified {}",
            i + 1,
            round.verified
        )?;
    }
    writeln!(out, "accepted: {}", t.accepted)?;
    Ok(())
}
