//! Permutations of [n] and homomorphisms Γ → Sₙ: uniform rejection
//! sampling, exhaustive enumeration at tiny degree, fixed-point statistics
//! of powers, and the representation-theoretic count of Hom(Γ,Sₙ).

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

use crate::group::{ConjClassKey, SurfaceGroupPresentation, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("no homomorphism accepted after {0} attempts")]
    AttemptsExhausted(u64),
    #[error("enumeration limited to degree <= {max}, got n={n}, g={g}")]
    DegreeTooLarge { n: usize, g: usize, max: usize },
}

/// Enumeration is brute force over all (n!)^{2g} generator tuples; keep it
/// honest about where that stops being a desk-scale computation.
pub const ENUMERATION_MAX_DEGREE: usize = 4;
const ENUMERATION_MAX_TUPLES: u128 = 2_000_000;

/// A permutation of {0,…,n−1} by its image table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!((i as usize) < n && !seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Permutation { images }
    }

    /// Cycle notation helper: `from_cycles(4, &[&[0,1]])` is the transposition
    /// (01) in S₄.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                images[cycle[k] as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Uniformly random permutation (Fisher–Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }

    /// Multiset of cycle lengths with multiplicities.
    pub fn cycle_type(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// #Fix(p^k) computed from the cycle type: a c-cycle contributes its c
    /// points exactly when c divides k.
    pub fn fix_count_power(&self, k: u64) -> usize {
        assert!(k >= 1);
        self.cycle_type()
            .iter()
            .filter(|(c, _)| k % (*c as u64) == 0)
            .map(|(c, m)| c * m)
            .sum()
    }
}

/// Left-to-right composition: `(p·q)(i) = q(p(i))`, so the left factor acts
/// first. This matches path-lifting monodromy and is used everywhere.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    if p.degree() != q.degree() {
        return Err(PermError::DegreeMismatch(p.degree(), q.degree()));
    }
    let images = p.images.iter().map(|&i| q.images[i as usize]).collect();
    Ok(Permutation { images })
}

fn compose_unchecked(p: &Permutation, q: &Permutation) -> Permutation {
    compose(p, q).expect("degrees checked by caller")
}

/// A point of Hom(Γ,Sₙ): images of a₁,b₁,…,a_g,b_g satisfying the surface
/// relation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomSample {
    n: usize,
    genus: usize,
    gens: Vec<Permutation>,
}

impl HomSample {
    pub fn new(n: usize, genus: usize, gens: Vec<Permutation>) -> Self {
        assert_eq!(gens.len(), 2 * genus);
        assert!(gens.iter().all(|p| p.degree() == n));
        let s = HomSample { n, genus, gens };
        debug_assert!(s.satisfies_relation());
        s
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn trivial(n: usize, genus: usize) -> Self {
        HomSample {
            n,
            genus,
            gens: vec![Permutation::identity(n); 2 * genus],
        }
    }

    pub fn satisfies_relation(&self) -> bool {
        relation_product(&self.gens, self.n).is_identity()
    }
}

fn commutator(p: &Permutation, q: &Permutation) -> Permutation {
    let pq = compose_unchecked(p, q);
    let pq_pinv = compose_unchecked(&pq, &p.inverse());
    compose_unchecked(&pq_pinv, &q.inverse())
}

fn relation_product(gens: &[Permutation], n: usize) -> Permutation {
    let mut acc = Permutation::identity(n);
    for pair in gens.chunks(2) {
        acc = compose_unchecked(&acc, &commutator(&pair[0], &pair[1]));
    }
    acc
}

/// Image of a word under the homomorphism, folding letters left to right.
pub fn evaluate_hom(sample: &HomSample, w: &Word) -> Permutation {
    let mut acc = Permutation::identity(sample.n);
    for l in w.letters() {
        let idx = l.index() - 1;
        assert!(
            idx < 2 * sample.genus,
            "word uses generator {} beyond genus {}",
            l.index(),
            sample.genus
        );
        let g = &sample.gens[idx];
        acc = if l.inverted() {
            compose_unchecked(&acc, &g.inverse())
        } else {
            compose_unchecked(&acc, g)
        };
    }
    acc
}

/// #Fix(φ(γ^k)) for the class with representative word `key`.
pub fn f_statistic(sample: &HomSample, key: &ConjClassKey, power: u64) -> usize {
    evaluate_hom(sample, key.word()).fix_count_power(power)
}

/// Rejection sampler for the uniform measure on Hom(Γ,Sₙ): draw 2g uniform
/// permutations and accept when the surface relation holds. Returns the
/// sample and the number of attempts it took.
pub fn sample_uniform_hom<R: Rng + ?Sized>(
    n: usize,
    genus: usize,
    rng: &mut R,
    max_attempts: u64,
) -> Result<(HomSample, u64), PermError> {
    assert!(n >= 1 && genus >= 2);
    for attempt in 1..=max_attempts {
        let gens: Vec<Permutation> = (0..2 * genus)
            .map(|_| Permutation::random(n, rng))
            .collect();
        if relation_product(&gens, n).is_identity() {
            return Ok((HomSample { n, genus, gens }, attempt));
        }
    }
    Err(PermError::AttemptsExhausted(max_attempts))
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..n as u32).collect();
    // Heap's algorithm.
    fn heap(k: usize, arr: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation {
                images: arr.clone(),
            });
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut images, &mut out);
    out
}

/// Every relation-satisfying generator tuple, exactly once. Brute force over
/// all (n!)^{2g} tuples, organized so the relation check is a table lookup:
/// the tuple satisfies the relation iff the trailing product of commutators
/// inverts the leading one.
pub fn enumerate_homs(n: usize, genus: usize) -> Result<Vec<HomSample>, PermError> {
    assert!(n >= 1 && genus >= 2);
    let fact: u128 = (1..=n as u128).product();
    let tuples = fact.checked_pow(2 * genus as u32);
    if n > ENUMERATION_MAX_DEGREE || !matches!(tuples, Some(t) if t <= ENUMERATION_MAX_TUPLES) {
        return Err(PermError::DegreeTooLarge {
            n,
            g: genus,
            max: ENUMERATION_MAX_DEGREE,
        });
    }
    let perms = all_permutations(n);
    // Commutators of all ordered pairs, bucketed by value.
    let mut comm: Vec<Vec<Permutation>> = Vec::with_capacity(perms.len());
    let mut buckets: HashMap<Permutation, Vec<(usize, usize)>> = HashMap::new();
    for (i, p) in perms.iter().enumerate() {
        let mut row = Vec::with_capacity(perms.len());
        for (j, q) in perms.iter().enumerate() {
            let c = commutator(p, q);
            buckets.entry(c.clone()).or_default().push((i, j));
            row.push(c);
        }
        comm.push(row);
    }

    // Partial products over pairs of handles; genus 2 is the flat case
    // (prefix = one commutator), higher genus walks an odometer over the
    // leading g−1 handles.
    let mut out = Vec::new();
    let handle_pairs: Vec<(usize, usize)> = (0..perms.len())
        .flat_map(|i| (0..perms.len()).map(move |j| (i, j)))
        .collect();
    let lead_handles = genus - 1;
    let mut odometer = vec![0usize; lead_handles];
    loop {
        let mut prefix = Permutation::identity(n);
        for &d in &odometer {
            let (i, j) = handle_pairs[d];
            prefix = compose_unchecked(&prefix, &comm[i][j]);
        }
        let need = prefix.inverse();
        if let Some(tail) = buckets.get(&need) {
            for &(i, j) in tail {
                let mut gens = Vec::with_capacity(2 * genus);
                for &d in &odometer {
                    let (x, y) = handle_pairs[d];
                    gens.push(perms[x].clone());
                    gens.push(perms[y].clone());
                }
                gens.push(perms[i].clone());
                gens.push(perms[j].clone());
                out.push(HomSample { n, genus, gens });
            }
        }
        // advance
        let mut pos = 0;
        loop {
            if pos == lead_handles {
                return Ok(out);
            }
            odometer[pos] += 1;
            if odometer[pos] < handle_pairs.len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial_big(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

/// Dimension of the irreducible Sₙ-representation labeled by `lambda`,
/// via the hook length formula n!/∏ hooks.
fn irrep_dimension(lambda: &[usize], n: usize) -> BigUint {
    let rows = lambda.len();
    let mut hooks = BigUint::one();
    for (i, &li) in lambda.iter().enumerate() {
        for j in 0..li {
            let arm = li - j - 1;
            let leg = (i + 1..rows).filter(|&r| lambda[r] > j).count();
            hooks *= BigUint::from((arm + leg + 1) as u64);
        }
    }
    let num = factorial_big(n);
    let (q, r) = num_integer::Integer::div_rem(&num, &hooks);
    assert!(r.is_zero(), "hook product must divide n!");
    q
}

/// #Hom(Γ,Sₙ) = (n!)^{2g−1} · Σ_{λ⊢n} (dim λ)^{2−2g}, exactly.
pub fn hom_count_formula(n: usize, genus: usize) -> BigUint {
    assert!(n >= 1 && genus >= 2);
    let fact = factorial_big(n);
    let scale = num_traits::pow::pow(fact.clone(), 2 * genus - 1);
    let mut sum = BigRational::zero();
    for lambda in integer_partitions(n) {
        let dim = irrep_dimension(&lambda, n);
        let dim_pow = num_traits::pow::pow(dim, 2 * genus - 2);
        sum += BigRational::new(1.into(), dim_pow.into());
    }
    let total = sum * BigRational::from_integer(scale.into());
    assert!(total.is_integer(), "Hom count must be an integer");
    total
        .to_integer()
        .to_biguint()
        .expect("count is nonnegative")
}

/// Exact E over the enumerated Hom space of #Fix(φ(word)^power), as a
/// rational number. The enumeration oracle for tiny n.
pub fn exact_mean_fix(n: usize, genus: usize, w: &Word, power: u64) -> Result<BigRational, PermError> {
    let homs = enumerate_homs(n, genus)?;
    let total: u64 = homs
        .iter()
        .map(|s| evaluate_hom(s, w).fix_count_power(power) as u64)
        .sum();
    Ok(BigRational::new(
        BigUint::from(total).into(),
        BigUint::from(homs.len() as u64).into(),
    ))
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("rational fits in f64")
}
