//! Exact rational arithmetic for the limit model of fixed-point counts:
//! divisor and partition combinatorics, Poisson moments through Stirling
//! numbers, the centered limit correlators R(a₁,…,a_r), cross-class
//! factorization, and the exact limit central moments of the counting
//! statistic by partition expansion. Everything combinatorial is exact; the
//! only floating point is the transcendental geodesic weight H.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::analysis::{TestFunctionSpec, WindowParams};
use crate::group::Character;
use crate::spectrum::LengthSpectrum;

#[derive(Debug, Error)]
pub enum MomentsError {
    #[error("spectrum cutoff {cutoff} is too short for window width {needed}")]
    SpectrumTooShort { cutoff: f64, needed: f64 },
    #[error("nontrivial characters need class words in the spectrum")]
    WordsRequired,
}

/// Exact central-moment cap: the partition expansion is evaluated for
/// k ≤ 6.
pub const MAX_MOMENT_ORDER: usize = 6;

// ---------------------------------------------------------------------------
// partitions and multinomials

/// All partitions of k into descending positive parts.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    assert!(k >= 1);
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

/// Order of the symmetry group of a partition: permutations of equal parts.
pub fn sym_count(parts: &[usize]) -> BigUint {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts.values().map(|&m| factorial(m)).product()
}

/// Multinomial coefficient k!/(r₁!⋯r_t!) for a partition of k.
pub fn multinomial(k: usize, parts: &[usize]) -> BigUint {
    assert_eq!(parts.iter().sum::<usize>(), k);
    let mut v = factorial(k);
    for &p in parts {
        v /= factorial(p);
    }
    v
}

pub fn double_factorial_odd(k: usize) -> BigUint {
    // (k−1)!! for even k
    assert!(k % 2 == 0);
    let mut v = BigUint::one();
    let mut j = k as u64 - 1;
    while j >= 2 {
        v *= BigUint::from(j);
        j -= 2;
    }
    v
}

// ---------------------------------------------------------------------------
// divisors

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn divisor_sigma(n: u64) -> u64 {
    divisors(n).iter().sum()
}

pub fn num_divisors(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Limit covariance of fixed-point counts of powers a and b of one class:
/// G(a,b) = σ(gcd(a,b)).
pub fn g_cov(a: u64, b: u64) -> u64 {
    divisor_sigma(num_integer::gcd(a, b))
}

// ---------------------------------------------------------------------------
// Poisson moments

/// Memo tables for Stirling numbers, Poisson moments and R values. Caching
/// never changes a value, only the time to get it.
#[derive(Default)]
pub struct MomentTable {
    stirling: Vec<Vec<BigUint>>,
    raw: HashMap<(usize, u64), BigRational>,
    central: HashMap<(usize, u64), BigRational>,
    r_values: HashMap<Vec<u64>, BigRational>,
}

impl MomentTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stirling numbers of the second kind S(n,k), built row by row.
    fn stirling(&mut self, n: usize, k: usize) -> BigUint {
        while self.stirling.len() <= n {
            let m = self.stirling.len();
            let mut row = vec![BigUint::zero(); m + 1];
            if m == 0 {
                row[0] = BigUint::one();
            } else {
                for j in 1..=m {
                    let prev = &self.stirling[m - 1];
                    let carry = if j <= m - 1 {
                        BigUint::from(j as u64) * &prev[j]
                    } else {
                        BigUint::zero()
                    };
                    row[j] = carry + &prev[j - 1];
                }
            }
            self.stirling.push(row);
        }
        self.stirling[n][k].clone()
    }

    fn rational_lambda(denominator: u64) -> BigRational {
        BigRational::new(BigUint::one().into(), BigUint::from(denominator).into())
    }

    /// Raw moment E[Z^m] of Z ~ Poisson(1/d), by the Stirling expansion
    /// E[Z^m] = Σ_j S(m,j) λ^j.
    pub fn poisson_raw_moment(&mut self, m: usize, d: u64) -> BigRational {
        if let Some(v) = self.raw.get(&(m, d)) {
            return v.clone();
        }
        let lambda = Self::rational_lambda(d);
        let mut sum = BigRational::zero();
        let mut lam_pow = BigRational::one();
        for j in 0..=m {
            if j > 0 {
                lam_pow *= &lambda;
            }
            let s: BigUint = self.stirling(m, j);
            sum += BigRational::from_integer(s.into()) * &lam_pow;
        }
        self.raw.insert((m, d), sum.clone());
        sum
    }

    /// Central moment E[(Z−λ)^m] of Z ~ Poisson(1/d), by binomial shift of
    /// the raw moments.
    pub fn poisson_central_moment(&mut self, m: usize, d: u64) -> BigRational {
        if let Some(v) = self.central.get(&(m, d)) {
            return v.clone();
        }
        let lambda = Self::rational_lambda(d);
        let mut sum = BigRational::zero();
        let mut choose = BigUint::one();
        for j in 0..=m {
            if j > 0 {
                choose = choose * BigUint::from((m - j + 1) as u64) / BigUint::from(j as u64);
            }
            let raw = self.poisson_raw_moment(j, d);
            let mut term = BigRational::from_integer(choose.clone().into()) * raw;
            let mut shift = BigRational::one();
            for _ in 0..(m - j) {
                shift *= -lambda.clone();
            }
            term *= shift;
            sum += term;
        }
        self.central.insert((m, d), sum.clone());
        sum
    }

    /// R(a₁,…,a_r): the limit of the centered correlator
    /// E[∏ᵢ(F(γ^{aᵢ}) − E F(γ^{aᵢ}))] for a single class, independent of the
    /// class. Expanded over divisor tuples: the term for (d₁|a₁,…,d_r|a_r)
    /// groups equal divisors, contributes ∏ d^{m_d}·μ_{m_d}(1/d), and any
    /// group of size one kills the term (μ₁ = 0).
    pub fn r_exact(&mut self, powers: &[u64]) -> BigRational {
        assert!(powers.iter().all(|&a| a >= 1));
        let mut key: Vec<u64> = powers.to_vec();
        key.sort_unstable();
        if let Some(v) = self.r_values.get(&key) {
            return v.clone();
        }
        let divisor_lists: Vec<Vec<u64>> = key.iter().map(|&a| divisors(a)).collect();
        let mut total = BigRational::zero();
        let mut choice = vec![0usize; key.len()];
        'outer: loop {
            // multiplicity of each divisor value in this tuple
            let mut counts: HashMap<u64, usize> = HashMap::new();
            for (i, &c) in choice.iter().enumerate() {
                *counts.entry(divisor_lists[i][c]).or_insert(0) += 1;
            }
            if counts.values().all(|&m| m >= 2) {
                let mut term = BigRational::one();
                for (&d, &m) in &counts {
                    let mut d_pow = BigUint::one();
                    for _ in 0..m {
                        d_pow *= BigUint::from(d);
                    }
                    term *= BigRational::from_integer(d_pow.into());
                    term *= self.poisson_central_moment(m, d);
                }
                total += term;
            }
            // advance the odometer
            for i in 0..choice.len() {
                choice[i] += 1;
                if choice[i] < divisor_lists[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
        self.r_values.insert(key, total.clone());
        total
    }

    /// Raw single-class limit moment lim E[∏ⱼ F(γ^{aⱼ})], by the same
    /// divisor-tuple expansion without centering.
    pub fn single_class_raw_moment(&mut self, powers: &[u64]) -> BigRational {
        assert!(powers.iter().all(|&a| a >= 1));
        let divisor_lists: Vec<Vec<u64>> = powers.iter().map(|&a| divisors(a)).collect();
        let mut total = BigRational::zero();
        let mut choice = vec![0usize; powers.len()];
        'outer: loop {
            let mut counts: HashMap<u64, usize> = HashMap::new();
            for (i, &c) in choice.iter().enumerate() {
                *counts.entry(divisor_lists[i][c]).or_insert(0) += 1;
            }
            let mut term = BigRational::one();
            for (&d, &m) in &counts {
                let mut d_pow = BigUint::one();
                for _ in 0..m {
                    d_pow *= BigUint::from(d);
                }
                term *= BigRational::from_integer(d_pow.into());
                term *= self.poisson_raw_moment(m, d);
            }
            total += term;
            for i in 0..choice.len() {
                choice[i] += 1;
                if choice[i] < divisor_lists[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
        total
    }

    /// Limit of E[∏ classes ∏ⱼ F(γᵢ^{aᵢⱼ})] (raw) or of the fully centered
    /// version: distinct classes factor.
    pub fn limit_cross_moment(&mut self, classes: &[Vec<u64>], centered: bool) -> BigRational {
        let mut prod = BigRational::one();
        for powers in classes {
            let factor = if centered {
                self.r_exact(powers)
            } else {
                self.single_class_raw_moment(powers)
            };
            prod *= factor;
        }
        prod
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("moment fits in f64")
}

// ---------------------------------------------------------------------------
// the geodesic weight H and the partition sums B

/// Everything H needs beside the class data.
pub struct WeightContext<'a> {
    pub spec: &'a TestFunctionSpec,
    pub window: &'a WindowParams,
    pub chi: &'a Character,
}

impl WeightContext<'_> {
    /// Strict truncation: (γ, a) enters iff a·l_γ < L·ρ.
    pub fn power_limit(&self) -> f64 {
        self.window.big_l * self.spec.support_radius
    }

    fn re_chi_power(&self, class: &crate::spectrum::PrimitiveGeodesic, a: u32) -> Result<f64, MomentsError> {
        match class.word() {
            Some(w) => Ok(self.chi.re_power(w, a)),
            None if self.chi.is_trivial() => Ok(1.0),
            None => Err(MomentsError::WordsRequired),
        }
    }

    /// One factor of H: ℜχ(γ^a)·l·ψ̂(al/L)·cos(αal)/sinh(al/2).
    pub fn h_factor(
        &self,
        class: &crate::spectrum::PrimitiveGeodesic,
        a: u32,
    ) -> Result<f64, MomentsError> {
        let l = class.length;
        let al = a as f64 * l;
        if al >= self.power_limit() {
            return Ok(0.0);
        }
        let re_chi = self.re_chi_power(class, a)?;
        Ok(re_chi * l * self.spec.psi_hat(al / self.window.big_l) * (self.window.alpha * al).cos()
            / (0.5 * al).sinh())
    }

    /// Product form of H over a tuple of classes and powers.
    pub fn h_eval(
        &self,
        classes: &[&crate::spectrum::PrimitiveGeodesic],
        powers: &[u32],
    ) -> Result<f64, MomentsError> {
        assert_eq!(classes.len(), powers.len());
        let mut prod = 1.0;
        for (c, &a) in classes.iter().zip(powers) {
            prod *= self.h_factor(c, a)?;
            if prod == 0.0 {
                return Ok(0.0);
            }
        }
        Ok(prod)
    }
}

fn check_cutoff(s: &LengthSpectrum, ctx: &WeightContext) -> Result<(), MomentsError> {
    let needed = ctx.power_limit();
    if s.cutoff < needed - 1e-12 {
        return Err(MomentsError::SpectrumTooShort {
            cutoff: s.cutoff,
            needed,
        });
    }
    Ok(())
}

/// S_r(γ) = Σ_{a₁,…,a_r} ∏ⱼ h_factor(γ, aⱼ) · R(a₁,…,a_r), the single-class
/// block sum of B.
fn class_block_sum(
    class: &crate::spectrum::PrimitiveGeodesic,
    r: usize,
    ctx: &WeightContext,
    table: &mut MomentTable,
) -> Result<f64, MomentsError> {
    let a_max = ((ctx.power_limit() / class.length).ceil() as u32).max(1);
    let mut factors = Vec::new();
    for a in 1..=a_max {
        let f = ctx.h_factor(class, a)?;
        factors.push(f);
    }
    while factors.last() == Some(&0.0) {
        factors.pop();
    }
    if factors.is_empty() {
        return Ok(0.0);
    }
    let m = factors.len() as u32;
    let mut tuple = vec![1u32; r];
    let mut total = 0.0;
    'outer: loop {
        let mut w = 1.0;
        for &a in &tuple {
            w *= factors[(a - 1) as usize];
        }
        if w != 0.0 {
            let powers: Vec<u64> = tuple.iter().map(|&a| a as u64).collect();
            let r_val = rational_to_f64(&table.r_exact(&powers));
            total += w * r_val;
        }
        for slot in tuple.iter_mut() {
            *slot += 1;
            if *slot <= m {
                continue 'outer;
            }
            *slot = 1;
        }
        break;
    }
    Ok(total)
}

fn set_partitions(t: usize) -> Vec<Vec<Vec<usize>>> {
    // all partitions of {0,…,t−1} into blocks
    fn rec(i: usize, t: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == t {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, t, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, t, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, t, &mut Vec::new(), &mut out);
    out
}

/// B(r̲): the sum over tuples of *distinct* classes (one per part, ordered)
/// and all power tuples of H times the product of per-class R factors.
/// Evaluated through per-class block sums S_{rᵢ}(γ) and inclusion–exclusion
/// over coincidence patterns, which reproduces the brute-force tuple sum
/// exactly.
pub fn b_eval(
    parts: &[usize],
    s: &LengthSpectrum,
    ctx: &WeightContext,
    table: &mut MomentTable,
) -> Result<f64, MomentsError> {
    check_cutoff(s, ctx)?;
    // any part of size one carries R(a) = 0
    if parts.iter().any(|&r| r == 1) {
        return Ok(0.0);
    }
    let t = parts.len();
    // per-class block sums for each distinct part size
    let mut block: HashMap<usize, Vec<f64>> = HashMap::new();
    for &r in parts {
        if !block.contains_key(&r) {
            let v: Result<Vec<f64>, MomentsError> = s
                .classes
                .iter()
                .map(|c| class_block_sum(c, r, ctx, table))
                .collect();
            block.insert(r, v?);
        }
    }
    let n = s.classes.len();
    let mut total = 0.0;
    for partition in set_partitions(t) {
        // ∏_B (−1)^{|B|−1} (|B|−1)! Σ_γ ∏_{i∈B} S_{rᵢ}(γ)
        let mut weight = 1.0f64;
        let mut prod = 1.0f64;
        for b in &partition {
            let sign = if (b.len() - 1) % 2 == 0 { 1.0 } else { -1.0 };
            let fact: f64 = (1..b.len()).map(|x| x as f64).product();
            weight *= sign * fact;
            let mut sum = 0.0;
            for gi in 0..n {
                let mut term = 1.0;
                for &i in b {
                    term *= block[&parts[i]][gi];
                }
                sum += term;
            }
            prod *= sum;
        }
        total += weight * prod;
    }
    Ok(total)
}

/// Brute-force B over explicit distinct-class tuples; the oracle that the
/// factorized evaluation must reproduce (quadratic and worse in the class
/// count, so only for short spectra).
pub fn b_eval_brute(
    parts: &[usize],
    s: &LengthSpectrum,
    ctx: &WeightContext,
    table: &mut MomentTable,
) -> Result<f64, MomentsError> {
    check_cutoff(s, ctx)?;
    let t = parts.len();
    let n = s.classes.len();
    assert!(n.pow(t as u32) <= 1_000_000, "brute force is for tiny spectra");
    let mut idx = vec![0usize; t];
    let mut total = 0.0;
    'outer: loop {
        let distinct = (0..t).all(|i| (0..i).all(|j| idx[i] != idx[j]));
        if distinct {
            let mut prod = 1.0;
            for (i, &gi) in idx.iter().enumerate() {
                prod *= class_block_sum(&s.classes[gi], parts[i], ctx, table)?;
            }
            total += prod;
        }
        for slot in 0..t {
            idx[slot] += 1;
            if idx[slot] < n {
                continue 'outer;
            }
            idx[slot] = 0;
        }
        break;
    }
    Ok(total)
}

/// Exact limit central moment of the (2/L-normalized) counting statistic:
/// V^{(k)}(L) = (2^k/L^k) Σ_{r̲⊢k} multinomial(k;r̲)/#Sym(r̲) · B(r̲).
pub fn central_moment_limit(
    k: usize,
    s: &LengthSpectrum,
    ctx: &WeightContext,
    table: &mut MomentTable,
) -> Result<f64, MomentsError> {
    assert!(k >= 1 && k <= MAX_MOMENT_ORDER, "moment order capped at {MAX_MOMENT_ORDER}");
    let mut total = 0.0;
    for parts in partitions(k) {
        if parts.iter().any(|&r| r == 1) {
            continue;
        }
        let coeff = BigRational::new(
            multinomial(k, &parts).into(),
            sym_count(&parts).into(),
        );
        total += rational_to_f64(&coeff) * b_eval(&parts, s, ctx, table)?;
    }
    let scale = (2.0 / ctx.window.big_l).powi(k as i32);
    Ok(scale * total)
}

/// Central moments of a centered Gaussian: (k−1)!!·σ^k for even k, else 0.
pub fn gaussian_moment(k: usize, sigma_sq: f64) -> f64 {
    assert!(k >= 2);
    if k % 2 == 1 {
        0.0
    } else {
        let df = double_factorial_odd(k).to_f64().unwrap();
        df * sigma_sq.powf(k as f64 / 2.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        let p = partitions(4);
        let expect: Vec<Vec<usize>> = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(p, expect);
    }

    #[test]
    fn symmetry_and_multinomial_identities() {
        assert_eq!(sym_count(&[2, 2, 2]), BigUint::from(6u32));
        assert_eq!(sym_count(&[3, 2, 2, 1]), BigUint::from(2u32));
        // (1/#Sym(2^{(6)}))·multinomial(6; 2,2,2) = 15 = 5!!
        let m = multinomial(6, &[2, 2, 2]);
        let s = sym_count(&[2, 2, 2]);
        assert_eq!(m / s, BigUint::from(15u32));
        assert_eq!(double_factorial_odd(6), BigUint::from(15u32));
        // generic (k−1)!! identity
        for k in [2usize, 4, 6] {
            let parts: Vec<usize> = vec![2; k / 2];
            assert_eq!(
                multinomial(k, &parts) / sym_count(&parts),
                double_factorial_odd(k)
            );
        }
    }

    #[test]
    fn divisor_functions() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisor_sigma(6), 12);
        assert_eq!(num_divisors(6), 4);
        assert_eq!(g_cov(4, 6), 3, "σ(gcd(4,6)) = σ(2) = 3");
        for a in 1..=10 {
            assert_eq!(g_cov(a, 1), 1);
        }
    }

    #[test]
    fn poisson_moments_small_cases() {
        let mut t = MomentTable::new();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(t.poisson_central_moment(0, 2), BigRational::one());
        assert_eq!(t.poisson_central_moment(1, 2), BigRational::zero());
        assert_eq!(t.poisson_central_moment(2, 2), half);
        // μ₃ = λ
        assert_eq!(
            t.poisson_central_moment(3, 3),
            BigRational::new(1.into(), 3.into())
        );
        // μ₄ = λ + 3λ²: λ = 1 gives 4
        assert_eq!(
            t.poisson_central_moment(4, 1),
            BigRational::from_integer(4.into())
        );
        // λ = 1/2: 1/2 + 3/4 = 5/4
        assert_eq!(
            t.poisson_central_moment(4, 2),
            BigRational::new(5.into(), 4.into())
        );
    }

    #[test]
    fn poisson_fourth_moment_against_series() {
        // Σ_j e^{−1}(j−1)⁴/j! truncated at j = 40
        let mut sum = 0.0f64;
        let mut fact = 1.0f64;
        for j in 0..=40u32 {
            if j > 0 {
                fact *= j as f64;
            }
            sum += (j as f64 - 1.0).powi(4) / fact;
        }
        sum *= (-1.0f64).exp();
        let mut t = MomentTable::new();
        let exact = rational_to_f64(&t.poisson_central_moment(4, 1));
        assert!((sum - exact).abs() < 1e-12, "{sum} vs {exact}");
    }

    #[test]
    fn r_single_power_vanishes() {
        let mut t = MomentTable::new();
        for a in 1..=10u64 {
            assert!(t.r_exact(&[a]).is_zero(), "R({a}) must vanish");
        }
    }

    #[test]
    fn r_pairs_are_sigma_gcd() {
        let mut t = MomentTable::new();
        for a in 1..=24u64 {
            for b in 1..=24u64 {
                let r = t.r_exact(&[a, b]);
                let expect = BigRational::from_integer(BigUint::from(g_cov(a, b)).into());
                assert_eq!(r, expect, "R({a},{b})");
            }
        }
    }

    #[test]
    fn r_triple_ones() {
        let mut t = MomentTable::new();
        assert_eq!(t.r_exact(&[1, 1, 1]), BigRational::one());
    }

    #[test]
    fn r_symmetric_in_arguments() {
        let mut t = MomentTable::new();
        let tuples: Vec<Vec<u64>> = vec![
            vec![2, 3, 4],
            vec![1, 2, 2, 6],
            vec![4, 4, 6],
            vec![3, 5, 6, 2],
        ];
        for tuple in tuples {
            let base = t.r_exact(&tuple);
            let mut perm = tuple.clone();
            // walk a few permutations (heap-lite: reversals and rotations)
            perm.reverse();
            assert_eq!(t.r_exact(&perm), base);
            perm.rotate_left(1);
            assert_eq!(t.r_exact(&perm), base);
        }
    }

    #[test]
    fn r_bound_sanity() {
        let mut t = MomentTable::new();
        // |R(a₁..a_r)| ≤ 3^r ∏ aᵢ² over a finite range
        for r in 1..=4usize {
            let mut tuple = vec![1u64; r];
            'outer: loop {
                let rv = t.r_exact(&tuple);
                let mut bound = BigRational::from_integer(BigUint::from(3u32).pow(r as u32).into());
                for &a in &tuple {
                    bound *= BigRational::from_integer(BigUint::from(a * a).into());
                }
                assert!(rv.abs() <= bound, "R({tuple:?}) = {rv}");
                for slot in tuple.iter_mut() {
                    *slot += 1;
                    if *slot <= 8 {
                        continue 'outer;
                    }
                    *slot = 1;
                }
                break;
            }
        }
    }

    #[test]
    fn worked_cross_moment_example() {
        let mut t = MomentTable::new();
        // lim E[F(γ²)F(γ³)] = 5
        let inner = t.limit_cross_moment(&[vec![2, 3]], false);
        assert_eq!(inner, BigRational::from_integer(5.into()));
        // lim E[F(δ⁴)] = d(4) = 3
        let single = t.limit_cross_moment(&[vec![4]], false);
        assert_eq!(single, BigRational::from_integer(3.into()));
        // lim E[F(γ²)F(γ³)F(δ⁴)] = 15
        let full = t.limit_cross_moment(&[vec![2, 3], vec![4]], false);
        assert_eq!(full, BigRational::from_integer(15.into()));
    }

    #[test]
    fn raw_centered_consistency() {
        let mut t = MomentTable::new();
        // E[F(γ²)F(γ³)] − d(2)d(3) = R(2,3) = σ(1) = 1
        let raw = t.single_class_raw_moment(&[2, 3]);
        let centered = t.r_exact(&[2, 3]);
        let d2d3 = BigRational::from_integer((num_divisors(2) * num_divisors(3)).into());
        assert_eq!(raw - d2d3, centered);
        assert_eq!(t.r_exact(&[2, 3]), BigRational::one());
    }

    #[test]
    fn cache_transparency() {
        let mut warm = MomentTable::new();
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                warm.r_exact(&[a, b, 2]);
            }
        }
        let mut cold = MomentTable::new();
        assert_eq!(warm.r_exact(&[7, 9, 2]), cold.r_exact(&[7, 9, 2]));
        assert_eq!(
            warm.poisson_central_moment(6, 4),
            cold.poisson_central_moment(6, 4)
        );
    }

    #[test]
    fn gaussian_moments() {
        assert_eq!(gaussian_moment(2, 1.7), 1.7);
        assert_eq!(gaussian_moment(3, 1.7), 0.0);
        assert_eq!(gaussian_moment(6, 2.0), 15.0 * 8.0);
    }
}
