use crate::quotients::pow_mod;
use crate::seqgen::PeriodicSequence;

/// Berlekamp-Massey over `F_q`. Returns the connection polynomial
/// `C(X) = 1 + c_1 X + ... + c_L X^L` and the linear complexity `L` of the
/// finite sequence `s`.
pub fn berlekamp_massey(s: &[u32], q: u32) -> (Vec<u32>, usize) {
    let q64 = q as u64;
    let mut c: Vec<u64> = vec![1];
    let mut b: Vec<u64> = vec![1];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_disc = 1u64;

    for n in 0..s.len() {
        let mut d = s[n] as u64 % q64;
        for i in 1..c.len().min(n + 1) {
            d = (d + c[i] * s[n - i] as u64) % q64;
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = d * pow_mod(last_disc, q64 - 2, q64) % q64;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] = (c[i + m] + q64 - coef * bi % q64) % q64;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last_disc = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.truncate(l + 1);
    (c.into_iter().map(|x| x as u32).collect(), l)
}

/// Linear complexity of the periodic sequence, from two full periods.
pub fn lc_berlekamp_massey(seq: &PeriodicSequence) -> usize {
    let doubled: Vec<u32> = seq.symbols().iter().chain(seq.symbols()).copied().collect();
    berlekamp_massey(&doubled, seq.modulus()).1
}
