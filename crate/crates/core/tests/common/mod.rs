//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's determinant, Kostka or enumeration code.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signcert::{ExactMatrix, Ratio, Sign};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Ratio {
    Ratio::new(n.into(), d.into())
}

pub fn random_ratio(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> Ratio {
    q(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// Determinant by the permutation expansion (Heap's algorithm).
pub fn leibniz_det(a: &[Vec<Ratio>]) -> Ratio {
    let n = a.len();
    if n == 0 {
        return Ratio::one();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut sign = 1i64;
    let term = |perm: &[usize]| -> Ratio {
        let mut acc = Ratio::one();
        for (i, &p) in perm.iter().enumerate() {
            if a[i][p].is_zero() {
                return Ratio::zero();
            }
            acc *= &a[i][p];
        }
        acc
    };
    let mut total = term(&perm);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            let t = term(&perm);
            if sign > 0 {
                total += t;
            } else {
                total -= t;
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// columns still free. Rows are first scaled to integers.
pub fn laplace_det(a: &[Vec<Ratio>]) -> Ratio {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let n = a.len();
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &lcm;
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    // memo[mask] = det of rows (n - popcount(mask)).. over the columns in mask.
    let mut memo: std::collections::HashMap<u32, BigInt> = std::collections::HashMap::new();
    fn go(rows: &[Vec<BigInt>], mask: u32, memo: &mut std::collections::HashMap<u32, BigInt>) -> BigInt {
        if mask == 0 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let row = rows.len() - mask.count_ones() as usize;
        let mut total = BigInt::zero();
        let mut position = 0;
        for c in 0..rows.len() {
            if mask & (1 << c) == 0 {
                continue;
            }
            if !rows[row][c].is_zero() {
                let sub = go(rows, mask & !(1 << c), memo);
                let term = &rows[row][c] * sub;
                if position % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            position += 1;
        }
        memo.insert(mask, total.clone());
        total
    }
    let det = go(&rows, (1u32 << n) - 1, &mut memo);
    Ratio::new(det, scale)
}

pub fn oracle_minor(x: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Ratio {
    let block: Vec<Vec<Ratio>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| x.get(r, c).clone()).collect())
        .collect();
    laplace_det(&block)
}

/// All increasing `k`-subsets of `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn sign_of(v: &Ratio) -> Sign {
    if v.is_positive() {
        Sign::Positive
    } else if v.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

pub fn minor_signs(x: &ExactMatrix, k: usize) -> Vec<Sign> {
    let mut out = Vec::new();
    for rows in combinations(x.rows(), k) {
        for cols in combinations(x.cols(), k) {
            out.push(sign_of(&oracle_minor(x, &rows, &cols)));
        }
    }
    out
}

pub fn oracle_sign_consistent(x: &ExactMatrix, k: usize, strict: bool) -> bool {
    let signs = minor_signs(x, k);
    let has_pos = signs.contains(&Sign::Positive);
    let has_neg = signs.contains(&Sign::Negative);
    let has_zero = signs.contains(&Sign::Zero);
    if strict {
        !has_zero && !(has_pos && has_neg)
    } else {
        !(has_pos && has_neg)
    }
}

pub fn oracle_k_positive(x: &ExactMatrix, k: usize, strict: bool) -> bool {
    (1..=k).all(|j| {
        minor_signs(x, j)
            .iter()
            .all(|&s| s == Sign::Positive || (!strict && s == Sign::Zero))
    })
}

/// Semistandard fillings of shape `lambda` with content `mu`, counted cell by cell.
pub fn brute_kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut left = mu.to_vec();
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut count = 0;
        for letter in 1..=left.len() {
            if left[letter - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > letter {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= letter {
                continue;
            }
            grid[r][c] = letter;
            left[letter - 1] -= 1;
            count += go(idx + 1, cells, grid, left);
            left[letter - 1] += 1;
        }
        grid[r][c] = 0;
        count
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Partitions of `weight` into exactly `len` weakly decreasing nonnegative parts.
pub fn partitions(weight: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for part in (0..=cap.min(remaining)).rev() {
            cur.push(part);
            go(remaining - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, weight, len, &mut Vec::new(), &mut out);
    out
}

pub fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    a.iter().zip(b).all(|(x, y)| {
        sa += x;
        sb += y;
        sa >= sb
    })
}

/// Distinct rearrangements of `v`.
pub fn rearrangements(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    fn go(pool: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pool.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut last = None;
        for i in 0..pool.len() {
            if Some(pool[i]) == last {
                continue;
            }
            last = Some(pool[i]);
            let v = pool.remove(i);
            cur.push(v);
            go(pool, cur, out);
            cur.pop();
            pool.insert(i, v);
        }
    }
    go(&mut sorted, &mut Vec::new(), &mut out);
    out
}

pub fn power(x: &Ratio, e: usize) -> Ratio {
    (0..e).fold(Ratio::one(), |acc, _| acc * x)
}

/// `m_μ(x)` by summing monomials over distinct rearrangements.
pub fn monomial_symmetric(mu: &[usize], x: &[Ratio]) -> Ratio {
    rearrangements(mu)
        .into_iter()
        .map(|p| p.iter().zip(x).fold(Ratio::one(), |acc, (&e, xi)| acc * power(xi, e)))
        .sum()
}

/// `s_λ(x)` as a ratio of alternants, for distinct `x`.
pub fn schur_bialternant(lambda: &[usize], x: &[Ratio]) -> Ratio {
    let r = lambda.len();
    let alt = |exps: &dyn Fn(usize) -> usize| -> Ratio {
        let rows: Vec<Vec<Ratio>> = (0..r).map(|i| (0..r).map(|j| power(&x[j], exps(i))).collect()).collect();
        leibniz_det(&rows)
    };
    let top = alt(&|i| lambda[r - 1 - i] + i);
    let bottom = alt(&|i| i);
    top / bottom
}

/// `g_t = c^{t-1}` style geometric values as exact rationals.
pub fn geometric(base: &Ratio, t: i64) -> Ratio {
    power(base, (t - 1) as usize)
}
