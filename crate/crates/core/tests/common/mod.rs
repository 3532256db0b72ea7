//! Test-only oracles. These avoid the library's elimination routines: they
//! use plain `u64` modular arithmetic, exhaustive enumeration, and
//! determinant expansions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use minspan_core::lti::{Poly, PolyMatrix};
use minspan_core::{CodeSpec, GeneratorMatrix, Matrix, PrimeField};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn bits(s: &str) -> Vec<u32> {
    s.bytes().filter(|b| !b.is_ascii_whitespace()).map(|b| u32::from(b - b'0')).collect()
}

pub fn rm844() -> GeneratorMatrix {
    let rows = ["11110000", "11001100", "10101010", "11111111"].map(bits);
    GeneratorMatrix::from_rows(CodeSpec::uniform(gf(2), 8), &rows).unwrap()
}

/// Sign of a permutation, by counting inversions.
fn perm_sign(perm: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Leibniz determinant of a square matrix of residues mod `p`.
pub fn det_mod(p: u64, m: &[Vec<u64>]) -> u64 {
    let n = m.len();
    let mut acc = 0u64;
    for perm in permutations(n) {
        let mut prod = 1u64;
        for (i, &j) in perm.iter().enumerate() {
            prod = prod * m[i][j] % p;
        }
        acc = if perm_sign(&perm) { (acc + prod) % p } else { (acc + p - prod) % p };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Rank as the size of the largest nonsingular square submatrix.
pub fn rank_by_minors(m: &Matrix) -> usize {
    let p = u64::from(m.field().modulus());
    let (r, c) = (m.nrows(), m.ncols());
    for size in (1..=r.min(c)).rev() {
        for rows in subsets(r, size) {
            for cols in subsets(c, size) {
                let sub: Vec<Vec<u64>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| u64::from(m.get(i, j))).collect()).collect();
                if det_mod(p, &sub) != 0 {
                    return size;
                }
            }
        }
    }
    0
}

/// All linear combinations of the rows, deduplicated.
pub fn brute_codewords(g: &GeneratorMatrix) -> BTreeSet<Vec<u32>> {
    let p = u64::from(g.field().modulus());
    let k = g.k();
    let cols = g.spec().total_cols();
    let total = p.pow(k as u32);
    let mut out = BTreeSet::new();
    for mut idx in 0..total {
        let mut w = vec![0u64; cols];
        for i in 0..k {
            let c = idx % p;
            idx /= p;
            for (x, &y) in w.iter_mut().zip(g.row(i)) {
                *x = (*x + c * u64::from(y)) % p;
            }
        }
        out.insert(w.into_iter().map(|x| x as u32).collect());
    }
    out
}

/// Every word of the ambient space, lexicographic.
pub fn all_words(field: PrimeField, len: usize) -> Vec<Vec<u32>> {
    let p = field.modulus();
    let total = u64::from(p).pow(len as u32);
    (0..total)
        .map(|mut idx| {
            let mut w = vec![0u32; len];
            for x in w.iter_mut().rev() {
                *x = (idx % u64::from(p)) as u32;
                idx /= u64::from(p);
            }
            w
        })
        .collect()
}

/// Symbol-time support interval of `w`.
pub fn support(spec: &CodeSpec, w: &[u32]) -> Option<(usize, usize)> {
    let nz: Vec<usize> = (0..spec.n_symbols()).filter(|&k| w[spec.block(k)].iter().any(|&x| x != 0)).collect();
    Some((*nz.first()?, *nz.last()?))
}

fn log_p(p: u64, mut c: u64) -> usize {
    let mut d = 0;
    while c > 1 {
        assert_eq!(c % p, 0, "count is not a power of p");
        c /= p;
        d += 1;
    }
    d
}

/// `dim C_J` by counting codewords supported on `[a, b]` (empty when `a > b`).
pub fn subcode_dim(spec: &CodeSpec, words: &BTreeSet<Vec<u32>>, a: usize, b: usize) -> usize {
    let p = u64::from(spec.field().modulus());
    let count = words
        .iter()
        .filter(|w| match support(spec, w) {
            None => true,
            Some((s, e)) => a <= b && a <= s && e <= b,
        })
        .count() as u64;
    log_p(p, count)
}

/// Incremental echelon basis with plain modular arithmetic.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn reduce(&self, v: &[u32]) -> Vec<u64> {
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|&x| u64::from(x)).collect();
        for (piv, r) in &self.rows {
            let f = w[*piv];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(r) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        w
    }

    fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.p;
        let w = self.reduce(v);
        let Some(piv) = w.iter().position(|&x| x != 0) else { return false };
        let inv = (1..p).find(|&i| i * w[piv] % p == 1).unwrap();
        let w: Vec<u64> = w.iter().map(|&x| x * inv % p).collect();
        self.rows.push((piv, w));
        true
    }
}

/// Span lengths of a shortest basis by the greedy construction: scan all
/// codewords in order of increasing span length and keep each one that is
/// independent of those already kept.
pub fn greedy_span_lengths(g: &GeneratorMatrix) -> Vec<usize> {
    let spec = g.spec();
    let mut words: Vec<(usize, Vec<u32>)> = brute_codewords(g)
        .into_iter()
        .filter_map(|w| support(spec, &w).map(|(s, e)| (e - s + 1, w)))
        .collect();
    words.sort();
    let mut ech = Echelon { p: u64::from(spec.field().modulus()), rows: Vec::new() };
    let mut lens = Vec::new();
    for (len, w) in words {
        if ech.insert(&w) {
            lens.push(len);
        }
    }
    lens.sort_unstable();
    lens
}

pub fn random_spec(rng: &mut ChaCha8Rng, field: PrimeField, n: usize, wide: bool) -> CodeSpec {
    if wide {
        CodeSpec::new(field, (0..n).map(|_| rng.gen_range(1..=2)).collect()).unwrap()
    } else {
        CodeSpec::uniform(field, n)
    }
}

/// Random generator matrix with `k` independent rows (`k <= total_cols`).
pub fn random_code(rng: &mut ChaCha8Rng, spec: &CodeSpec, k: usize) -> GeneratorMatrix {
    let p = spec.field().modulus();
    loop {
        let rows: Vec<Vec<u32>> =
            (0..k).map(|_| (0..spec.total_cols()).map(|_| rng.gen_range(0..p)).collect()).collect();
        let g = GeneratorMatrix::from_rows(spec.clone(), &rows).unwrap();
        if rank_by_echelon(&g) == k {
            return g;
        }
    }
}

fn rank_by_echelon(g: &GeneratorMatrix) -> usize {
    let mut ech = Echelon { p: u64::from(g.field().modulus()), rows: Vec::new() };
    g.row_iter().filter(|r| ech.insert(r)).count()
}

/// Random invertible row mixing of `g`: each row replaced by a random
/// combination, retried until the result still has full rank.
pub fn mix_rows(rng: &mut ChaCha8Rng, g: &GeneratorMatrix) -> GeneratorMatrix {
    let field = g.field();
    let p = field.modulus();
    loop {
        let rows: Vec<Vec<u32>> = (0..g.k())
            .map(|_| {
                let mut w = vec![0u32; g.spec().total_cols()];
                for r in g.row_iter() {
                    field.axpy(&mut w, rng.gen_range(0..p), r);
                }
                w
            })
            .collect();
        let h = GeneratorMatrix::from_rows(g.spec().clone(), &rows).unwrap();
        if rank_by_echelon(&h) == g.k() {
            return h;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, field: PrimeField, max_deg: usize) -> Poly {
    let p = field.modulus();
    let coeffs: Vec<i64> = (0..=max_deg).map(|_| i64::from(rng.gen_range(0..p))).collect();
    Poly::from_i64(field, &coeffs)
}

/// Random full-rank `n x k` polynomial matrix with entries of degree `<= max_deg`.
pub fn random_poly_matrix(rng: &mut ChaCha8Rng, field: PrimeField, n: usize, k: usize, max_deg: usize) -> PolyMatrix {
    loop {
        let cols: Vec<Vec<Poly>> =
            (0..k).map(|_| (0..n).map(|_| random_poly(rng, field, max_deg)).collect()).collect();
        if let Ok(m) = PolyMatrix::new(field, n, cols) {
            return m;
        }
    }
}

/// Leibniz determinant of a square polynomial matrix.
pub fn det_poly_leibniz(field: PrimeField, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut acc = Poly::zero(field);
    for perm in permutations(n) {
        let mut prod = Poly::one(field);
        for (i, &j) in perm.iter().enumerate() {
            prod = prod.mul(&m[i][j]);
        }
        acc = if perm_sign(&perm) { acc.add(&prod) } else { acc.sub(&prod) };
    }
    acc
}

/// Square submatrix of a polynomial matrix on the given rows (all columns).
pub fn poly_submatrix(g: &PolyMatrix, rows: &[usize]) -> Vec<Vec<Poly>> {
    rows.iter().map(|&i| (0..g.k_cols()).map(|j| g.entry(i, j).clone()).collect()).collect()
}

pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut s = subsets(n, k);
    s.sort();
    s
}
