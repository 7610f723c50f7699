use super::check_symbols;
use crate::error::Result;
use crate::qcore::Quasigroup;

/// One leader-chained pass `Q_m`: `b_0 = m * a_0`, `b_i = b_{i-1} * a_i`.
pub fn q_transform(q: &Quasigroup, leader: usize, input: &[usize]) -> Result<Vec<usize>> {
    check_symbols(&[leader], q.order())?;
    check_symbols(input, q.order())?;
    Ok(q_pass(q, leader, input))
}

fn q_pass(q: &Quasigroup, leader: usize, input: &[usize]) -> Vec<usize> {
    input
        .iter()
        .scan(leader, |prev, &a| {
            *prev = q.get(*prev, a);
            Some(*prev)
        })
        .collect()
}

/// `R_1(a) = Q_{a_0}(Q_{a_1}(… Q_{a_{r-1}}(a)))`, with every leader taken from
/// the original input. Forward only: no inverse is provided.
pub fn r1_transform(q: &Quasigroup, input: &[usize]) -> Result<Vec<usize>> {
    check_symbols(input, q.order())?;
    Ok(input
        .iter()
        .rev()
        .fold(input.to_vec(), |acc, &m| q_pass(q, m, &acc)))
}
