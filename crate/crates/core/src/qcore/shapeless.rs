use super::quasigroup::Quasigroup;

/// Structural diagnostics behind the "shapeless" property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapelessReport {
    pub commutative: bool,
    pub associative: bool,
    pub has_left_unit: bool,
    pub has_right_unit: bool,
    pub has_proper_subquasigroup: bool,
    /// Least `k < 2n` with `L_x^k = id` for every `x`, or `R_x^k = id` for every `x`.
    pub smallest_identity_exponent: Option<u128>,
    /// Smallest order among all left and right translations.
    pub min_translation_order: u128,
    /// Whether every translation has order at least `2n + 1` (per-translation reading).
    pub translations_meet_bound: bool,
    pub is_shapeless: bool,
}

pub fn shapeless_report(q: &Quasigroup) -> ShapelessReport {
    let n = q.order();
    let (left, right) = q.translation_orders();
    let lcm = |orders: &[u128]| {
        orders
            .iter()
            .fold(1u128, |acc, &o| num_integer::Integer::lcm(&acc, &o))
    };
    // L_x^k = id for all x iff k is a multiple of the lcm of the left orders.
    let exponent = lcm(&left).min(lcm(&right));
    let smallest_identity_exponent = (exponent < 2 * n as u128).then_some(exponent);
    let min_translation_order = left.iter().chain(&right).copied().min().unwrap_or(1);

    let commutative = q.is_commutative();
    let associative = q.is_associative();
    let has_left_unit = q.left_unit().is_some();
    let has_right_unit = q.right_unit().is_some();
    let has_proper_subquasigroup = has_proper_subquasigroup(q);
    let is_shapeless = !(commutative
        || associative
        || has_left_unit
        || has_right_unit
        || has_proper_subquasigroup)
        && smallest_identity_exponent.is_none();
    ShapelessReport {
        commutative,
        associative,
        has_left_unit,
        has_right_unit,
        has_proper_subquasigroup,
        smallest_identity_exponent,
        min_translation_order,
        translations_meet_bound: min_translation_order > 2 * n as u128,
        is_shapeless,
    }
}

/// Closure of `{start}` under the operation and both divisions.
pub fn singleton_closure(q: &Quasigroup, start: usize) -> Vec<usize> {
    let n = q.order();
    let ld = q.left_division();
    let rd = q.right_division();
    let mut inside = vec![false; n];
    inside[start] = true;
    let mut members = vec![start];
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        // Pair the new element with every member so far, including itself.
        for j in 0..=i {
            let b = members[j];
            for c in [
                q.get(a, b),
                q.get(b, a),
                ld.get(a, b),
                ld.get(b, a),
                rd.get(a, b),
                rd.get(b, a),
            ] {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

pub fn has_proper_subquasigroup(q: &Quasigroup) -> bool {
    (0..q.order()).any(|a| singleton_closure(q, a).len() < q.order())
}
