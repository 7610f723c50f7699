//! Quasigroups of order `2^d` as vector-valued Boolean functions, ANF degree
//! classification and generation of multivariate quadratic quasigroups.

mod boolean;
mod generate;

pub use boolean::{moebius, BooleanFunction, MAX_VARS};
pub use generate::{theorem1_generate, MqqInstance};

use std::fmt;

use crate::error::{Error, Result};
use crate::qcore::Quasigroup;

/// Classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MqqVerdict {
    NotMqq,
    /// `quadratic` coordinate functions of degree 2 and `linear` of degree 1, `quadratic ≥ 1`.
    Quad {
        quadratic: usize,
        linear: usize,
    },
}

impl fmt::Display for MqqVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MqqVerdict::NotMqq => write!(f, "NotMQQ"),
            MqqVerdict::Quad { quadratic, linear } => write!(f, "Quad{quadratic}Lin{linear}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MqqClassification {
    pub d: usize,
    /// Degrees of `f_1, …, f_d`.
    pub degrees: Vec<usize>,
    pub verdict: MqqVerdict,
}

impl MqqClassification {
    pub fn is_mqq(&self) -> bool {
        matches!(self.verdict, MqqVerdict::Quad { .. })
    }
}

fn log2_order(order: usize) -> Result<usize> {
    if order == 0 || !order.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(order));
    }
    Ok(order.trailing_zeros() as usize)
}

/// The `d` coordinate functions `f_1..f_d` of `q` (order `2^d`), each on `2d`
/// variables `x_1..x_d, y_1..y_d`.
///
/// Symbols map to bits most-significant first, so `f_1` is the top bit of
/// `q(a, b)` and the truth-table index of `(a, b)` is `a·2^d + b`.
pub fn quasigroup_to_vvbf(q: &Quasigroup) -> Result<Vec<BooleanFunction>> {
    let d = log2_order(q.order())?;
    if 2 * d > MAX_VARS {
        return Err(Error::TooLarge(format!("order {}", q.order())));
    }
    let table = q.table();
    (0..d)
        .map(|i| {
            let bit = d - 1 - i;
            BooleanFunction::from_fn(2 * d, |idx| table[idx] >> bit & 1 == 1)
        })
        .collect()
}

/// Degrees of the coordinate functions and the MQQ verdict.
pub fn classify_mqq(q: &Quasigroup) -> Result<MqqClassification> {
    let fs = quasigroup_to_vvbf(q)?;
    let degrees: Vec<usize> = fs.iter().map(BooleanFunction::degree).collect();
    Ok(classify_degrees(degrees))
}

pub(crate) fn classify_degrees(degrees: Vec<usize>) -> MqqClassification {
    let d = degrees.len();
    let quadratic = degrees.iter().filter(|&&g| g == 2).count();
    let linear = degrees.iter().filter(|&&g| g == 1).count();
    let verdict = if quadratic + linear == d && quadratic >= 1 {
        MqqVerdict::Quad { quadratic, linear }
    } else {
        MqqVerdict::NotMqq
    };
    MqqClassification {
        d,
        degrees,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::generate_quasigroup;

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Quasigroup {
        Quasigroup::from_table(
            n,
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| f(x, y))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn z2_addition() {
        let fs = quasigroup_to_vvbf(&Quasigroup::cyclic(2)).unwrap();
        assert_eq!(fs.len(), 1);
        // x1 is index bit 1, y1 is index bit 0
        assert_eq!(fs[0].monomials(), vec![1, 2]);
        let c = classify_mqq(&Quasigroup::cyclic(2)).unwrap();
        assert_eq!(c.degrees, vec![1]);
        assert_eq!(c.verdict, MqqVerdict::NotMqq);
    }

    #[test]
    fn mod4_adder_carries() {
        let q = Quasigroup::cyclic(4);
        let fs = quasigroup_to_vvbf(&q).unwrap();
        // high bit: x1 ⊕ y1 ⊕ x2·y2 with index bits x1=3, x2=2, y1=1, y2=0
        assert_eq!(fs[0].monomials(), vec![0b0010, 0b0101, 0b1000]);
        assert_eq!(fs[1].monomials(), vec![0b0001, 0b0100]);
        let c = classify_mqq(&q).unwrap();
        assert_eq!(c.degrees, vec![2, 1]);
        assert_eq!(c.verdict.to_string(), "Quad1Lin1");
    }

    #[test]
    fn x_plus_y_plus_2xy_is_xor() {
        let q = from_fn(4, |x, y| (x + y + 2 * x * y) % 4);
        assert_eq!(q, from_fn(4, |x, y| x ^ y));
        let c = classify_mqq(&q).unwrap();
        assert_eq!(c.degrees, vec![1, 1]);
        assert_eq!(c.verdict, MqqVerdict::NotMqq);
    }

    #[test]
    fn table_reproduced_from_anf() {
        for seed in 0..50 {
            let q = generate_quasigroup(8, seed);
            let fs = quasigroup_to_vvbf(&q).unwrap();
            for a in 0..8 {
                for b in 0..8 {
                    let idx = a * 8 + b;
                    let z = fs
                        .iter()
                        .fold(0, |acc, f| acc << 1 | f.eval_anf(idx) as usize);
                    assert_eq!(z, q.get(a, b));
                }
            }
        }
    }

    #[test]
    fn random_order_16_runs() {
        let c = classify_mqq(&generate_quasigroup(16, 9)).unwrap();
        assert_eq!(c.d, 4);
        assert!(c.degrees.iter().all(|&g| g <= 2 * c.d));
        assert!(c.degrees.iter().any(|&g| g >= 3));
        assert_eq!(c.verdict, MqqVerdict::NotMqq);
    }

    #[test]
    fn verdict_rules() {
        assert_eq!(
            classify_degrees(vec![2, 2, 2]).verdict,
            MqqVerdict::Quad {
                quadratic: 3,
                linear: 0
            }
        );
        assert_eq!(classify_degrees(vec![1, 1]).verdict, MqqVerdict::NotMqq);
        assert_eq!(classify_degrees(vec![2, 0]).verdict, MqqVerdict::NotMqq);
        assert_eq!(classify_degrees(vec![2, 3]).verdict, MqqVerdict::NotMqq);
        assert_eq!(
            classify_mqq(&Quasigroup::cyclic(3)),
            Err(Error::NotPowerOfTwo(3))
        );
    }
}
