use serde::{Deserialize, Serialize};

/// Probability that `n` independent uniform elements of F_{q^m} are linearly
/// dependent over F_q: `1 - prod_{i<n} (1 - q^i / q^m)`.
pub fn lin_dep_probability(n: usize, q: u64, m: u32) -> f64 {
    if let Some((num, den)) = lin_dep_probability_exact(n, q, m) {
        return num as f64 / den as f64;
    }
    let q = q as f64;
    let independent: f64 = (0..n).map(|i| 1.0 - q.powi(i as i32 - m as i32)).product();
    1.0 - independent
}

/// The same probability as an exact fraction `(numerator, denominator)`,
/// when `q^{mn}` fits in a `u128`.
pub fn lin_dep_probability_exact(n: usize, q: u64, m: u32) -> Option<(u128, u128)> {
    let big_q = (q as u128).checked_pow(m)?;
    let denom = big_q.checked_pow(n as u32)?;
    let mut independent: u128 = 1;
    let mut qi: u128 = 1;
    for _ in 0..n {
        independent *= big_q.saturating_sub(qi);
        qi = qi.checked_mul(q as u128)?;
    }
    Some((denom - independent, denom))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Weights below `d + d/q`: bounded by the chance alpha is dependent.
    LinearDependence,
    /// Weights from `d + d/q` on: the counting bound `2^n q^{w(d-1) - md/q}`.
    Counting,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundTerm {
    pub w: usize,
    pub kind: BoundKind,
    pub value: f64,
}

/// Per-weight terms bounding the probability that the embedding of an
/// `[n, k, d]` code creates a codeword of rank weight `w < d`. Diagnostic only.
pub fn distance_bound_terms(n: usize, q: u64, m: u32, d: usize) -> Vec<BoundTerm> {
    assert!(d >= 1, "minimum distance must be positive");
    let threshold = d + d.div_ceil(q as usize);
    let qf = q as f64;
    (1..=n)
        .map(|w| {
            if w < threshold {
                BoundTerm {
                    w,
                    kind: BoundKind::LinearDependence,
                    value: lin_dep_probability(n, q, m),
                }
            } else {
                let exponent = (w * (d - 1)) as f64 - m as f64 * d as f64 / qf;
                BoundTerm {
                    w,
                    kind: BoundKind::Counting,
                    value: 2f64.powi(n as i32) * qf.powf(exponent),
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::rank::rank_weight_poly;

    #[test]
    fn single_element() {
        for (q, m) in [(2, 1), (2, 5), (3, 2), (5, 3)] {
            let p = lin_dep_probability(1, q, m);
            assert_eq!(p, 1.0 / (q as f64).powi(m as i32));
        }
    }

    #[test]
    fn known_value() {
        assert_eq!(lin_dep_probability(3, 2, 4), 0.384765625);
        assert_eq!(lin_dep_probability_exact(3, 2, 4), Some((1576, 4096)));
    }

    #[test]
    fn matches_enumeration() {
        for m in 1..=4u32 {
            let ctx = FieldCtx::new(2, m).unwrap();
            for n in 1..=3usize {
                let order = ctx.order();
                let total = order.pow(n as u32);
                let mut dependent = 0u128;
                for idx in 0..total {
                    let mut rest = idx;
                    let xs: Vec<_> = (0..n)
                        .map(|_| {
                            let e = crate::field::Elem(rest % order);
                            rest /= order;
                            e
                        })
                        .collect();
                    if rank_weight_poly(&ctx, &xs) < n {
                        dependent += 1;
                    }
                }
                assert_eq!(
                    lin_dep_probability_exact(n, 2, m),
                    Some((dependent, total as u128)),
                    "n={n} m={m}"
                );
                assert_eq!(
                    lin_dep_probability(n, 2, m),
                    dependent as f64 / total as f64
                );
            }
        }
    }

    #[test]
    fn decreasing_in_m() {
        let mut last = 1.0;
        for m in 3..40 {
            let p = lin_dep_probability(3, 2, m);
            assert!(p < last && p >= 0.0);
            last = p;
        }
        assert!(last < 1e-9);
    }

    #[test]
    fn bound_terms() {
        let terms = distance_bound_terms(4, 2, 17, 2);
        assert_eq!(terms.len(), 4);
        let t4 = terms.iter().find(|t| t.w == 4).unwrap();
        assert_eq!(t4.kind, BoundKind::Counting);
        assert_eq!(t4.value, 2f64.powi(-9));
        assert_eq!(terms[0].kind, BoundKind::LinearDependence);
        for (n, q, d) in [(4, 2, 2), (6, 3, 3), (8, 2, 4)] {
            let mut prev: Option<Vec<BoundTerm>> = None;
            for m in 2..30 {
                let cur = distance_bound_terms(n, q, m, d);
                assert!(cur.iter().all(|t| t.value >= 0.0));
                if let Some(p) = prev {
                    for (a, b) in p.iter().zip(&cur) {
                        assert!(b.value <= a.value);
                    }
                }
                prev = Some(cur);
            }
        }
    }
}
