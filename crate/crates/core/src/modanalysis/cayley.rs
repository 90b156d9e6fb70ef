/// Number of exponent vectors `(a_0..a_m)` with `Σ a_j = d` and
/// `Σ j a_j = w`, i.e. partitions of `w` into at most `d` parts of size at
/// most `m`.
pub fn weight_count(m: u32, d: u32, w: u64) -> u128 {
    let (m, d, w) = (m as usize, d as usize, w as usize);
    // table[k][s]: ways to choose k parts (with repetition) from the values
    // seen so far with sum s.
    let mut table = vec![vec![0u128; w + 1]; d + 1];
    table[0][0] = 1;
    for j in 0..=m {
        for k in 1..=d {
            for s in j..=w {
                let add = table[k - 1][s - j];
                table[k][s] += add;
            }
        }
    }
    table[d][w]
}

/// Dimension of the sl₂-invariants in `Sym^d V(m)` by the Cayley–Sylvester
/// count `N(md/2) - N(md/2 - 1)`; zero when `md` is odd.
pub fn cayley_sylvester(m: u32, d: u32) -> u128 {
    let md = m as u64 * d as u64;
    if md % 2 == 1 {
        return 0;
    }
    let w = md / 2;
    let top = weight_count(m, d, w);
    let below = if w == 0 { 0 } else { weight_count(m, d, w - 1) };
    top - below
}
