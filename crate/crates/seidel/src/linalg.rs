//! Exact integer matrices, fraction-free rank, and primitive kernel vectors.
//!
//! Rank is computed by Bareiss elimination: every intermediate entry is a
//! minor of the input, so for a Seidel matrix of order n the entries never
//! exceed Hadamard's bound n^(n/2) and the division in each update step is
//! exact. A machine-word (`i128`, overflow-checked) pass handles every order
//! this crate supports in practice; on overflow the elimination restarts with
//! arbitrary-precision integers, which are exact at any order up to 64.
//!
//! The kernel extractor follows the definition of the primitive vector:
//! row-echelon form, back-substitution over the rationals, denominators
//! cleared by their LCM, entries divided by their GCD, sign fixed so the
//! first nonzero entry is positive.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Default prime for the modular rank pre-filter. Word-sized and above 10^6,
/// so the kernel entries arising from the recursive families (powers of 3, 5
/// and 7 at reachable depth) are never divisible by it.
pub const DEFAULT_FILTER_PRIME: u64 = 1_000_003;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("nullity {nullity} > 1, no canonical primitive kernel vector")]
    NullityExceedsOne { nullity: usize },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("modulus {0} is not an odd prime")]
    NotPrime(u64),
    #[error("p = 2 rejected: off-diagonal Seidel entries are all 1 mod 2")]
    PrimeTwo,
}

/// Dense square matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(n: usize, mut f: F) -> IntMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    /// Convenience constructor from machine integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// Matrix-vector product, for kernel verification.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{:>4}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The Seidel matrix S = J - I - 2A: zero diagonal, -1 for adjacent pairs,
/// +1 for non-adjacent pairs.
pub fn seidel_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            BigInt::zero()
        } else if g.adjacent(i, j) {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    })
}

/// Outcome of a Bareiss elimination run: echelon rows, their pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
}

/// Fraction-free elimination over `i128` with overflow checking.
/// Returns `None` if any entry or intermediate product overflows.
fn bareiss_rank_i128(m: &IntMatrix) -> Option<usize> {
    let n = m.dim();
    let mut a: Vec<i128> = Vec::with_capacity(n * n);
    for e in &m.entries {
        a.push(e.to_i128()?);
    }
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    for col in 0..n {
        // Pivot: largest absolute value, ties broken by smallest row index.
        let pivot = (rank..n)
            .filter(|&r| a[r * n + col] != 0)
            .max_by_key(|&r| (a[r * n + col].unsigned_abs(), std::cmp::Reverse(r)));
        let Some(p) = pivot else { continue };
        if p != rank {
            for j in 0..n {
                a.swap(rank * n + j, p * n + j);
            }
        }
        let pv = a[rank * n + col];
        for r in rank + 1..n {
            let factor = a[r * n + col];
            for j in col + 1..n {
                let t = pv
                    .checked_mul(a[r * n + j])?
                    .checked_sub(factor.checked_mul(a[rank * n + j])?)?;
                debug_assert_eq!(t % prev, 0);
                a[r * n + j] = t / prev;
            }
            a[r * n + col] = 0;
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

/// Fraction-free elimination with arbitrary-precision entries.
fn bareiss_echelon_bigint(m: &IntMatrix) -> Echelon {
    let n = m.dim();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let rank = pivot_cols.len();
        let pivot = (rank..n)
            .filter(|&r| !rows[r][col].is_zero())
            .max_by_key(|&r| (rows[r][col].abs(), std::cmp::Reverse(r)));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pv = pivot_row[col].clone();
        for row in tail.iter_mut() {
            // Zero factors still need the pv/prev rescale: every entry must
            // stay a minor of the input for later divisions to be exact.
            let factor = std::mem::replace(&mut row[col], BigInt::zero());
            for j in col + 1..n {
                let t = &pv * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&t % &prev).is_zero());
                row[j] = t / &prev;
            }
        }
        prev = pv;
        pivot_cols.push(col);
    }
    Echelon { rows, pivot_cols }
}

/// Rank over the rationals, by exact fraction-free elimination.
pub fn rank_exact(m: &IntMatrix) -> usize {
    if let Some(rank) = bareiss_rank_i128(m) {
        return rank;
    }
    bareiss_echelon_bigint(m).pivot_cols.len()
}

/// Checks that `p` is an odd prime, the only moduli the rank filter accepts.
pub fn validate_filter_prime(p: u64) -> Result<(), LinalgError> {
    if p == 2 {
        return Err(LinalgError::PrimeTwo);
    }
    if !is_prime_u64(p) {
        return Err(LinalgError::NotPrime(p));
    }
    Ok(())
}

/// Rank of `m` reduced modulo the odd prime `p`. This is a lower bound on
/// the rational rank, so a full-rank result certifies nonsingularity.
pub fn rank_lower_bound_mod_p(m: &IntMatrix, p: u64) -> Result<usize, LinalgError> {
    validate_filter_prime(p)?;
    let n = m.dim();
    let pb = BigInt::from(p);
    let mut a: Vec<u64> = m
        .entries
        .iter()
        .map(|e| e.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p_row) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if p_row != rank {
            for j in 0..n {
                a.swap(rank * n + j, p_row * n + j);
            }
        }
        let inv = pow_mod(a[rank * n + col], p - 2, p);
        for r in rank + 1..n {
            let factor = mul_mod(a[r * n + col], inv, p);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = mul_mod(factor, a[rank * n + j], p);
                a[r * n + j] = (a[r * n + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Integer vector with coprime entries and positive first nonzero entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimitiveVector {
    entries: Vec<BigInt>,
}

impl PrimitiveVector {
    /// Normalizes an arbitrary nonzero integer vector: divide by the GCD of
    /// the entries, then negate if the first nonzero entry is negative.
    pub fn normalize(mut entries: Vec<BigInt>) -> Result<PrimitiveVector, LinalgError> {
        let mut g = BigInt::zero();
        for e in &entries {
            g = g.gcd(e);
        }
        if g.is_zero() {
            return Err(LinalgError::ZeroVector);
        }
        if !g.is_one() {
            for e in entries.iter_mut() {
                *e = &*e / &g;
            }
        }
        let negative_lead = entries
            .iter()
            .find(|e| !e.is_zero())
            .map(|e| e.is_negative())
            .unwrap_or(false);
        if negative_lead {
            for e in entries.iter_mut() {
                *e = -&*e;
            }
        }
        Ok(PrimitiveVector { entries })
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Negates the entries selected by `mask` (bit i set = negate entry i)
    /// and renormalizes the sign. Models how switching acts on kernel
    /// vectors.
    pub fn negated_on(&self, mask: u64) -> PrimitiveVector {
        let entries: Vec<BigInt> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| if mask >> i & 1 == 1 { -e } else { e.clone() })
            .collect();
        PrimitiveVector::normalize(entries).expect("negation preserves nonzeroness")
    }
}

impl std::fmt::Display for PrimitiveVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// The primitive kernel vector of `m`, when the kernel is one-dimensional.
///
/// Returns `Ok(None)` for a nonsingular matrix. A nullity above one has no
/// canonical primitive vector and is reported as an error; for Seidel
/// matrices it cannot occur (rank S >= n - 1).
pub fn kernel_primitive(m: &IntMatrix) -> Result<Option<PrimitiveVector>, LinalgError> {
    let n = m.dim();
    let ech = bareiss_echelon_bigint(m);
    let rank = ech.pivot_cols.len();
    if rank == n {
        return Ok(None);
    }
    if rank < n - 1 {
        return Err(LinalgError::NullityExceedsOne { nullity: n - rank });
    }

    let free_col = (0..n)
        .find(|c| !ech.pivot_cols.contains(c))
        .expect("rank n-1 leaves one free column");
    let mut x: Vec<BigRational> = vec![BigRational::zero(); n];
    x[free_col] = BigRational::one();
    for k in (0..rank).rev() {
        let pc = ech.pivot_cols[k];
        let row = &ech.rows[k];
        let mut sum = BigRational::zero();
        for j in pc + 1..n {
            if !row[j].is_zero() {
                sum += BigRational::from(row[j].clone()) * &x[j];
            }
        }
        x[pc] = -sum / BigRational::from(row[pc].clone());
    }

    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let v = PrimitiveVector::normalize(ints)?;
    debug_assert!(m.apply(v.entries()).iter().all(Zero::is_zero));
    Ok(Some(v))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
