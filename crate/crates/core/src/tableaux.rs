//! Young-tableau combinatorics: weight classes, Kostka numbers,
//! Littlewood–Richardson coefficients and exact evaluation of the
//! symmetric polynomials they expand.
//!
//! Tableau entries use the alphabet `1..=r` where `r` is the tuple length;
//! the letter `i` appears `mu[i-1]` times.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{distinct_permutations, monomial, sorting_sign, IntTuple, Partition, Ratio, Sign};

/// Outer and inner shape of a skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.fits_inside(&outer) {
            return Err(Error::contract(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.parts()[row] - self.inner.parts()[row]
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }
}

/// A filling of a skew shape; `rows[i]` holds the boxes of row `i`, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates row lengths and semistandardness (rows weakly increase,
    /// columns strictly increase).
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.outer.len() {
            return Err(Error::contract("tableau row count does not match shape"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::contract(format!("row {} has wrong length", i + 1)));
            }
            if row.iter().any(|&e| e == 0) {
                return Err(Error::contract("tableau entries are positive"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::contract(format!("row {} decreases", i + 1)));
            }
        }
        let tableau = Tableau { shape, rows };
        for i in 1..tableau.rows.len() {
            let start = tableau.shape.inner.parts()[i];
            let end = tableau.shape.outer.parts()[i];
            for col in start..end {
                if let Some(above) = tableau.entry(i - 1, col) {
                    if above >= tableau.entry(i, col).unwrap() {
                        return Err(Error::contract(format!("column {} does not strictly increase", col + 1)));
                    }
                }
            }
        }
        Ok(tableau)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 0-based `(row, col)` in diagram coordinates, if that box is in the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.shape.inner.parts()[row];
        let end = self.shape.outer.parts()[row];
        (start..end).contains(&col).then(|| self.rows[row][col - start])
    }

    /// Number of occurrences of each letter `1..=len`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0; self.shape.outer.len()];
        for &e in self.rows.iter().flatten() {
            if e <= counts.len() {
                counts[e - 1] += 1;
            }
        }
        counts
    }

    /// Right to left along each row, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }
}

/// All weakly decreasing nonnegative tuples with the length and weight of
/// `lambda`, in reverse-lexicographic order. Weight zero yields the zero tuple.
pub fn weight_class(lambda: &Partition) -> Vec<Partition> {
    let len = lambda.len();
    let weight = lambda.weight();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fill_weight_class(len, weight, weight, &mut current, &mut out);
    out
}

fn fill_weight_class(len: usize, remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let slots = len - current.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("weakly decreasing"));
        }
        return;
    }
    // The remaining slots can absorb at most `cap * slots`.
    let lowest = remaining.div_ceil(slots);
    for part in (lowest..=cap.min(remaining)).rev() {
        current.push(part);
        fill_weight_class(len, remaining - part, part, current, out);
        current.pop();
    }
}

fn check_same_class(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.len() != mu.len() {
        return Err(Error::contract(format!("lengths differ: {lambda} vs {mu}")));
    }
    if lambda.weight() != mu.weight() {
        return Err(Error::contract(format!("weights differ: {lambda} vs {mu}")));
    }
    Ok(())
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
///
/// Peels off the largest letter as a horizontal strip and recurses, memoized
/// on the remaining shape and the number of letters still to place.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_same_class(lambda, mu)?;
    let mut memo = HashMap::new();
    Ok(kostka_strips(lambda.parts(), mu.parts(), &mut memo))
}

fn kostka_strips(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    let letters = content.len();
    let rows_used = shape.iter().take_while(|&&p| p > 0).count();
    if rows_used > letters {
        return 0;
    }
    if letters == 0 {
        return 1;
    }
    let key = (shape.to_vec(), letters);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let strip = content[letters - 1];
    let mut total = 0;
    let mut inner = shape.to_vec();
    remove_horizontal_strip(shape, 0, strip, &mut inner, &mut |smaller| {
        total += kostka_strips(smaller, &content[..letters - 1], memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerates every `inner` with `shape / inner` a horizontal strip of `size` boxes.
fn remove_horizontal_strip(
    shape: &[usize],
    row: usize,
    size: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if size == 0 {
            visit(inner);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let most = (shape[row] - floor).min(size);
    for taken in 0..=most {
        inner[row] = shape[row] - taken;
        remove_horizontal_strip(shape, row + 1, size - taken, inner, visit);
    }
    inner[row] = shape[row];
}

/// Every prefix of `word` contains `i` at least as often as `i + 1`, for `i` in `1..max_entry`.
pub fn is_lattice_word(word: &[usize], max_entry: usize) -> bool {
    let mut counts = vec![0usize; max_entry + 2];
    for &letter in word {
        if letter < counts.len() {
            counts[letter] += 1;
        }
        if letter >= 2 && letter <= max_entry && counts[letter] > counts[letter - 1] {
            return false;
        }
    }
    true
}

/// Littlewood–Richardson coefficient `c^gamma_{lambda,mu}`: the number of
/// semistandard fillings of `gamma / lambda` with content `mu` whose reading
/// word is a lattice word. Incompatible shapes or weights give 0.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, gamma: &Partition) -> u64 {
    let len = gamma.len();
    if lambda.len() != len || mu.len() != len {
        return 0;
    }
    if !lambda.fits_inside(gamma) || lambda.weight() + mu.weight() != gamma.weight() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..len)
        .flat_map(|row| (lambda.parts()[row]..gamma.parts()[row]).rev().map(move |col| (row, col)))
        .collect();
    let mut search = LrSearch {
        inner: lambda.parts(),
        content: mu.parts(),
        cells: &cells,
        filled: gamma.parts().iter().map(|&w| vec![0; w]).collect(),
        counts: vec![0; len + 1],
    };
    search.count(0)
}

struct LrSearch<'a> {
    inner: &'a [usize],
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    filled: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, next: usize) -> u64 {
        let Some(&(row, col)) = self.cells.get(next) else {
            return 1;
        };
        // Cells are visited right to left, so the right neighbour is already placed.
        let right = self.filled[row].get(col + 1).copied().filter(|&v| v > 0);
        let above = (row > 0 && col >= self.inner[row - 1]).then(|| self.filled[row - 1][col]);
        let low = above.map_or(1, |a| a + 1);
        let high = right.unwrap_or(self.content.len());
        let mut total = 0;
        for letter in low..=high {
            if self.counts[letter] == self.content[letter - 1] {
                continue;
            }
            if letter >= 2 && self.counts[letter] + 1 > self.counts[letter - 1] {
                continue;
            }
            self.counts[letter] += 1;
            self.filled[row][col] = letter;
            total += self.count(next + 1);
            self.filled[row][col] = 0;
            self.counts[letter] -= 1;
        }
        total
    }
}

fn check_arity(len: usize, x: &[Ratio]) -> Result<()> {
    if len != x.len() {
        return Err(Error::contract(format!(
            "{} variables supplied for a tuple of length {len}",
            x.len()
        )));
    }
    Ok(())
}

/// `m_mu(x)`: sum of `x^p` over the distinct rearrangements `p` of `mu`.
pub fn monomial_symmetric_eval(mu: &Partition, x: &[Ratio]) -> Result<Ratio> {
    check_arity(mu.len(), x)?;
    Ok(distinct_permutations(&mu.to_int_tuple())
        .iter()
        .map(|p| monomial(x, p.values()))
        .fold(Ratio::zero(), |acc, term| acc + term))
}

/// Schur polynomial via its Kostka expansion, so repeated variables are fine.
pub fn schur_eval(lambda: &Partition, x: &[Ratio]) -> Result<Ratio> {
    check_arity(lambda.len(), x)?;
    let mut total = Ratio::zero();
    for mu in weight_class(lambda) {
        let k = kostka(lambda, &mu)?;
        if k > 0 {
            total += monomial_symmetric_eval(&mu, x)? * Ratio::from_integer(k.into());
        }
    }
    Ok(total)
}

/// Alternant `Σ_p sign_mu(p) x^p`, i.e. `det[x_j^{mu_i}]`; zero when `mu` repeats an entry.
pub fn alternant_eval(mu: &IntTuple, x: &[Ratio]) -> Result<Ratio> {
    check_arity(mu.len(), x)?;
    if !mu.is_nonnegative() {
        return Err(Error::contract(format!("{mu} has negative exponents")));
    }
    if !mu.has_distinct_entries() {
        return Ok(Ratio::zero());
    }
    // sign_mu(p) equals the sign of sorting p relative to sorting mu.
    let base = sorting_sign(mu.values());
    let mut total = Ratio::zero();
    for p in distinct_permutations(mu) {
        let term = monomial(x, p.values());
        match sorting_sign(p.values()).times(base) {
            Sign::Positive => total += term,
            Sign::Negative => total -= term,
            Sign::Zero => unreachable!("distinct entries"),
        }
    }
    Ok(total)
}

/// Convenience: `s_lambda(1, …, 1)` counts tableaux with entries in `1..=r`.
pub fn schur_at_ones(lambda: &Partition) -> Result<Ratio> {
    schur_eval(lambda, &vec![Ratio::one(); lambda.len()])
}
