/// Coefficients of `(1+t)^m / ((1-t^2)^m (1-t)^n)` through `t^max_degree`: the Poincaré
/// series of `S(g_0^*)[2] ⊗ Λ(g_0^*)[1] ⊗ S(g_1^*)[1]`, which is `H^•(gr u(g), k)`.
pub fn gr_cohomology_series(m: usize, n: usize, max_degree: usize) -> Vec<u64> {
    let len = max_degree + 1;
    let mut series = vec![0u64; len];
    series[0] = 1;
    let times = |s: &mut Vec<u64>, factor: &dyn Fn(&[u64], usize) -> u64| {
        let old = s.clone();
        for (d, c) in s.iter_mut().enumerate() {
            *c = factor(&old, d);
        }
    };
    for _ in 0..m {
        // exterior generator in degree 1
        times(&mut series, &|s, d| s[d] + if d >= 1 { s[d - 1] } else { 0 });
        // polynomial generator in degree 2
        let mut acc = series.clone();
        for d in 2..len {
            acc[d] += acc[d - 2];
        }
        series = acc;
    }
    for _ in 0..n {
        let mut acc = series.clone();
        for d in 1..len {
            acc[d] += acc[d - 1];
        }
        series = acc;
    }
    series
}

/// Total dimension of the `E_1` page in total degree `d` for a module of dimension
/// `module_dim`.
pub fn e1_page_dims(m: usize, n: usize, module_dim: usize, d: usize) -> u64 {
    gr_cohomology_series(m, n, d)[d] * module_dim as u64
}

/// `C(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_is_binomial() {
        for m in 0..4 {
            for n in 0..4 {
                if m + n == 0 {
                    continue;
                }
                let s = gr_cohomology_series(m, n, 8);
                for (d, &c) in s.iter().enumerate() {
                    let k = (m + n) as u64;
                    assert_eq!(c, binomial(d as u64 + k - 1, k - 1), "m={m} n={n} d={d}");
                }
            }
        }
        assert_eq!(gr_cohomology_series(0, 0, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn known_values() {
        assert_eq!(gr_cohomology_series(0, 2, 4), vec![1, 2, 3, 4, 5]);
        assert_eq!(gr_cohomology_series(2, 2, 2), vec![1, 4, 10]);
        assert_eq!(e1_page_dims(1, 1, 1, 2), 3);
        assert_eq!(e1_page_dims(2, 2, 5, 0), 5);
    }
}
