//! Small exact combinatorics used throughout the tensor layers.

/// `n!` as `u128`. Panics on overflow (n > 33).
pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Binomial coefficient `C(n, k)` as `u128` for non-negative arguments.
pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// Extended binomial coefficient: zero whenever `n < 0`, `k < 0` or `n < k`.
pub fn binomial_ext(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || n < k {
        0
    } else {
        binomial(n as u32, k as u32) as i128
    }
}

/// Double factorial with the conventions `(-1)!! = 1` and `0!! = 1`.
///
/// Defined for `j >= -1` only.
pub fn double_factorial(j: i64) -> i128 {
    assert!(j >= -1, "double factorial defined for j >= -1, got {j}");
    let mut acc: i128 = 1;
    let mut v = j;
    while v > 1 {
        acc *= v as i128;
        v -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(factorial(20), 2_432_902_008_176_640_000);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(25, 12), 5_200_300);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn extended_binomial_conventions() {
        assert_eq!(binomial_ext(-1, 0), 0);
        assert_eq!(binomial_ext(3, -1), 0);
        assert_eq!(binomial_ext(2, 3), 0);
        assert_eq!(binomial_ext(6, 2), 15);
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), 1);
        assert_eq!(double_factorial(0), 1);
        assert_eq!(double_factorial(5), 15);
        assert_eq!(double_factorial(8), 384);
    }

    #[test]
    #[should_panic]
    fn double_factorial_rejects_below_minus_one() {
        double_factorial(-3);
    }
}
