mod analysis;
mod cipher;
mod combinatorics;
mod protocols;
mod sets;

use std::io::Write;

use crate::args::Command;
use crate::CliResult;

pub fn run(command: Command, out: &mut dyn Write) -> CliResult {
    use Command::*;
    match command {
        Validate(a) => combinatorics::validate(a, out),
        Gen(a) => combinatorics::gen(a, out),
        Parastrophe(a) => combinatorics::parastrophe(a, out),
        Product(a) => combinatorics::product(a, out),
        Dist(a) => combinatorics::dist(a, out),
        Shapeless(a) => combinatorics::shapeless(a, out),
        Orthomorphism(a) => combinatorics::orthomorphism(a, out),
        Encrypt(a) => cipher::stream(a, true, out),
        Decrypt(a) => cipher::stream(a, false, out),
        Encrypt3(a) => cipher::ternary(a, true, out),
        Decrypt3(a) => cipher::ternary(a, false, out),
        R1(a) => cipher::r1(a, out),
        OsysVerify(a) => cipher::osys_verify(a, out),
        OsysEncrypt(a) => cipher::osys_message(a, true, out),
        OsysDecrypt(a) => cipher::osys_message(a, false, out),
        Hash(a) => cipher::hash(a, out),
        CiTransport(a) => protocols::ci_transport(a, out),
        RstTransport(a) => protocols::rst_transport(a, out),
        Ex8(a) => protocols::ex8(a, out),
        RlsPower(a) => protocols::rls_power(a, out),
        RlsPeriod(a) => protocols::rls_period(a, out),
        RlsAgree(a) => protocols::rls_agree(a, out),
        Zkp(a) => protocols::zkp(a, out),
        Nlpn(a) => analysis::nlpn(a, out),
        MqqClassify(a) => analysis::mqq_classify(a, out),
        MqqGen(a) => analysis::mqq_gen(a, out),
        CsCount(a) => sets::count(a, out),
        CsUnique(a) => sets::unique(a, out),
        CsCritical(a) => sets::critical(a, out),
        CsGreedy(a) => sets::greedy(a, out),
        CsSmallest(a) => sets::smallest(a, out),
        CsDeal(a) => sets::deal(a, out),
        CsReconstruct(a) => sets::reconstruct(a, out),
    }
}
