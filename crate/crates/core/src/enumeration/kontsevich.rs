use num_bigint::BigInt;
use num_traits::{One, Zero};

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of rational plane curves of degree `d` through `3d - 1` generic
/// points, by the recursion
/// `N_d = Σ_{d1+d2=d} N_{d1} N_{d2} d1² d2 (d2·C(3d-4, 3d1-2) - d1·C(3d-4, 3d1-1))`.
pub fn kontsevich_n(d: usize) -> BigInt {
    if d == 0 {
        return BigInt::zero();
    }
    let mut n: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for dd in 2..=d as i64 {
        let mut total = BigInt::zero();
        for d1 in 1..dd {
            let d2 = dd - d1;
            let bracket = binomial(3 * dd - 4, 3 * d1 - 2) * d2 - binomial(3 * dd - 4, 3 * d1 - 1) * d1;
            total += &n[d1 as usize] * &n[d2 as usize] * (d1 * d1 * d2) * bracket;
        }
        n.push(total);
    }
    n.swap_remove(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let expected = [1u64, 1, 12, 620, 87304];
        for (d, &e) in expected.iter().enumerate() {
            assert_eq!(kontsevich_n(d + 1), BigInt::from(e), "d = {}", d + 1);
        }
        assert_eq!(kontsevich_n(6), BigInt::from(26312976u64));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(8, -1), BigInt::zero());
    }
}
