use super::isotopy::Isotopy;
use super::quasigroup::Quasigroup;
use crate::modmath::seeded_rng;

/// A seeded random isotope of the `Z_n` addition table.
///
/// Only quasigroups isotopic to a cyclic group can come out of this, so the
/// distribution is far from uniform over Latin squares of order `n`.
pub fn generate_quasigroup(order: usize, seed: u64) -> Quasigroup {
    let mut rng = seeded_rng(seed, 0);
    Isotopy::random(order, &mut rng)
        .apply(&Quasigroup::cyclic(order))
        .expect("sizes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::distance::hamming_distance;

    #[test]
    fn reproducible_and_valid() {
        let a = generate_quasigroup(5, 42);
        assert_eq!(a, generate_quasigroup(5, 42));
        assert!(Quasigroup::from_table(5, a.table().to_vec()).is_ok());
        assert_eq!(generate_quasigroup(1, 7).table(), &[0]);
    }

    #[test]
    fn seeds_differ_at_order_eight() {
        let differing = (0..100u64)
            .filter(|&s| {
                let a = generate_quasigroup(8, 2 * s);
                let b = generate_quasigroup(8, 2 * s + 1);
                hamming_distance(&a, &b).unwrap() > 0
            })
            .count();
        assert!(differing >= 99, "{differing}");
    }
}
