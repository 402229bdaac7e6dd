//! Fibonacci numbers with `F_1 = F_2 = 1`.

/// `F_k` for `k >= 0` (`F_0 = 0`). Panics past `F_186`, the last value that fits in `u128`.
pub fn fibonacci(k: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..k {
        let next = a.checked_add(b).expect("Fibonacci number overflows u128");
        a = b;
        b = next;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_terms() {
        let got: Vec<u128> = (0..=15).map(fibonacci).collect();
        assert_eq!(got, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610]);
    }

    #[test]
    fn odd_index_recurrence() {
        for n in 2..60 {
            assert_eq!(fibonacci(2 * n + 1) + fibonacci(2 * n - 3), 3 * fibonacci(2 * n - 1));
        }
    }
}
