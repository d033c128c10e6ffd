//! Exact scalars and the integer tuples shared by every other module.
//!
//! All scalars are [`Ratio`]s (arbitrary precision, always in lowest terms
//! with a positive denominator), so the sign of any computed minor is exact.
//! The tuple newtypes carry the monotonicity invariants the combinatorics
//! relies on: [`Partition`] is weakly decreasing, [`IndexTuple`] strictly
//! increasing, [`IntTuple`] unconstrained.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar. Canonical form is maintained by `num-rational`.
pub type Ratio = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Ratio {
    assert!(denom != 0, "zero denominator");
    Ratio::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Ratio {
    Ratio::from_integer(BigInt::from(value))
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-0.25"` into an exact
/// rational. Exponents, repeating-decimal notations and whitespace inside the
/// literal are rejected.
pub fn parse_ratio(text: &str) -> Result<Ratio> {
    let bad = || Error::Parse(format!("malformed rational literal {text:?}"));
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());

    let value = if let Some((p, q)) = body.split_once('/') {
        if !digits(p) || !digits(q) {
            return Err(bad());
        }
        let denom: BigInt = q.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        Ratio::new(p.parse().map_err(|_| bad())?, denom)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if !(digits(whole) || whole.is_empty()) || !digits(frac) {
            return Err(bad());
        }
        let whole: BigInt = if whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        Ratio::new(whole * &scale + frac, scale)
    } else {
        if !digits(body) {
            return Err(bad());
        }
        Ratio::from_integer(body.parse().map_err(|_| bad())?)
    };
    Ok(if negative { -value } else { value })
}

/// `"p/q"`, or a bare integer when the denominator is one.
pub fn format_ratio(value: &Ratio) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn serialize_ratio<S: Serializer>(value: &Ratio, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&format_ratio(value))
}

/// Exact sign of a scalar. Ordered `Negative < Zero < Positive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Ratio) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    /// `+1`, `0` or `-1`.
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_strict(self) -> bool {
        self != Sign::Zero
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{item}")?;
    }
    write!(f, ")")
}

/// Weakly decreasing tuple of nonnegative integers of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::contract(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn zeros(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Elementwise `self <= other` (Young diagram containment).
    pub fn fits_inside(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Subtracts the constant `c` from every part; `None` if a part would go negative.
    pub fn shifted_down(&self, c: usize) -> Option<Partition> {
        self.0
            .iter()
            .map(|&p| p.checked_sub(c))
            .collect::<Option<Vec<_>>>()
            .map(Partition)
    }

    pub fn shifted_up(&self, c: usize) -> Partition {
        Partition(self.0.iter().map(|&p| p + c).collect())
    }

    pub fn to_int_tuple(&self) -> IntTuple {
        IntTuple(self.0.iter().map(|&p| p as i64).collect())
    }

    /// Sum of two partitions of the same length (again weakly decreasing).
    pub fn plus(&self, other: &Partition) -> Result<Partition> {
        if self.len() != other.len() {
            return Err(Error::contract("partition lengths differ"));
        }
        Ok(Partition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Strictly increasing tuple of positive (1-based) indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::contract("indices are 1-based"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::contract(format!("{indices:?} is not strictly increasing")));
        }
        Ok(IndexTuple(indices))
    }

    /// `(start, start+1, …, start+len-1)`.
    pub fn run(start: usize, len: usize) -> Self {
        assert!(start >= 1, "indices are 1-based");
        IndexTuple((start..start + len).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_consecutive(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn to_int_tuple(&self) -> IntTuple {
        IntTuple(self.0.iter().map(|&i| i as i64).collect())
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Integer tuple without ordering constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IntTuple(pub Vec<i64>);

impl IntTuple {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &IntTuple) -> IntTuple {
        assert_eq!(self.len(), other.len(), "tuple lengths differ");
        IntTuple(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntTuple) -> IntTuple {
        assert_eq!(self.len(), other.len(), "tuple lengths differ");
        IntTuple(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn sorted_ascending(&self) -> IntTuple {
        let mut v = self.0.clone();
        v.sort_unstable();
        IntTuple(v)
    }

    pub fn sorted_descending(&self) -> IntTuple {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        IntTuple(v)
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn has_distinct_entries(&self) -> bool {
        let sorted = self.sorted_ascending();
        sorted.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Sorts descending and reinterprets as a partition; fails on negative entries.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_nonnegative() {
            return Err(Error::contract(format!("{self} has negative entries")));
        }
        Ok(Partition(self.sorted_descending().0.iter().map(|&v| v as usize).collect()))
    }

    /// Reinterprets as an index tuple; fails unless strictly increasing and positive.
    pub fn to_index_tuple(&self) -> Result<IndexTuple> {
        if self.0.iter().any(|&v| v < 1) {
            return Err(Error::contract(format!("{self} has nonpositive entries")));
        }
        IndexTuple::new(self.0.iter().map(|&v| v as usize).collect())
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Dominance order: every prefix sum of `lhs` is at least that of `rhs`.
pub fn dominance_geq(lhs: &Partition, rhs: &Partition) -> Result<bool> {
    if lhs.len() != rhs.len() {
        return Err(Error::contract(format!("lengths differ: {lhs} vs {rhs}")));
    }
    if lhs.weight() != rhs.weight() {
        return Err(Error::contract(format!("weights differ: {lhs} vs {rhs}")));
    }
    let mut a = 0usize;
    let mut b = 0usize;
    for (x, y) in lhs.parts().iter().zip(rhs.parts()) {
        a += x;
        b += y;
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every distinct rearrangement of `v`, in ascending lexicographic order.
pub fn distinct_permutations(v: &IntTuple) -> Vec<IntTuple> {
    let mut current = v.sorted_ascending().0;
    let mut out = vec![IntTuple(current.clone())];
    while next_permutation(&mut current) {
        out.push(IntTuple(current.clone()));
    }
    out
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parity of the rearrangement taking `base` to `perm`, by inversion count.
pub fn permutation_sign(base: &IntTuple, perm: &IntTuple) -> Result<Sign> {
    if !base.has_distinct_entries() {
        return Err(Error::contract(format!("base {base} has repeated entries")));
    }
    if base.len() != perm.len() || base.sorted_ascending() != perm.sorted_ascending() {
        return Err(Error::contract(format!("{perm} is not a rearrangement of {base}")));
    }
    Ok(parity_of(base.values(), perm.values()))
}

/// Same as [`permutation_sign`] without validation; `perm` must rearrange the distinct `base`.
pub(crate) fn parity_of(base: &[i64], perm: &[i64]) -> Sign {
    let positions: Vec<usize> = perm
        .iter()
        .map(|x| base.iter().position(|b| b == x).expect("rearrangement"))
        .collect();
    let mut inversions = 0usize;
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            if positions[i] > positions[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Sign of the permutation that sorts `values` ascending; `Zero` when entries repeat.
pub(crate) fn sorting_sign(values: &[i64]) -> Sign {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            match values[i].cmp(&values[j]) {
                std::cmp::Ordering::Equal => return Sign::Zero,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if inversions % 2 == 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// `Π x_i^{p_i}` for nonnegative exponents.
pub fn monomial(x: &[Ratio], exponents: &[i64]) -> Ratio {
    x.iter()
        .zip(exponents)
        .fold(Ratio::one(), |acc, (xi, &p)| {
            debug_assert!(p >= 0);
            acc * num_traits::pow(xi.clone(), p as usize)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tup(v: &[i64]) -> IntTuple {
        IntTuple(v.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_geq(&part(&[2, 1, 0]), &part(&[1, 1, 1])).unwrap());
        assert!(dominance_geq(&part(&[4, 1, 0]), &part(&[3, 2, 0])).unwrap());
        assert!(!dominance_geq(&part(&[3, 2, 0]), &part(&[4, 1, 0])).unwrap());
    }

    #[test]
    fn dominance_rejects_mismatch() {
        assert!(matches!(
            dominance_geq(&part(&[2, 0]), &part(&[1, 1, 0])),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            dominance_geq(&part(&[2, 0]), &part(&[1, 0])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn distinct_permutation_examples() {
        assert_eq!(distinct_permutations(&tup(&[1, 1])), vec![tup(&[1, 1])]);
        assert_eq!(distinct_permutations(&tup(&[1, 2])), vec![tup(&[1, 2]), tup(&[2, 1])]);
        assert_eq!(
            distinct_permutations(&tup(&[2, 1, 1])),
            vec![tup(&[1, 1, 2]), tup(&[1, 2, 1]), tup(&[2, 1, 1])]
        );
        assert_eq!(distinct_permutations(&tup(&[])), vec![tup(&[])]);
    }

    #[test]
    fn permutation_sign_examples() {
        let sign = |b: &[i64], p: &[i64]| permutation_sign(&tup(b), &tup(p)).unwrap();
        assert_eq!(sign(&[1, 4, 7], &[1, 4, 7]), Sign::Positive);
        assert_eq!(sign(&[2, 4, 6], &[6, 2, 4]), Sign::Positive);
        assert_eq!(sign(&[2, 4, 6], &[4, 2, 6]), Sign::Negative);
    }

    #[test]
    fn permutation_sign_contract() {
        assert!(permutation_sign(&tup(&[1, 1]), &tup(&[1, 1])).is_err());
        assert!(permutation_sign(&tup(&[1, 2]), &tup(&[1, 3])).is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_ratio("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_ratio("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_ratio("-.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_ratio("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_ratio("+7").unwrap(), int(7));
        for bad in ["", "1/0", "0.(3)", "0.333...", "1e3", "1/-2", "a", "1.2.3", "1 /2"] {
            assert!(parse_ratio(bad).is_err(), "{bad:?} accepted");
        }
        assert_eq!(format_ratio(&ratio(-3, 4)), "-3/4");
        assert_eq!(format_ratio(&ratio(4, 2)), "2");
    }

    #[test]
    fn partition_and_index_tuple_invariants() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(IndexTuple::new(vec![2, 2]).is_err());
        assert!(IndexTuple::new(vec![0, 1]).is_err());
        assert_eq!(IndexTuple::run(3, 3).indices(), &[3, 4, 5]);
    }

    #[test]
    fn sign_order() {
        assert!(Sign::Negative < Sign::Zero && Sign::Zero < Sign::Positive);
        assert_eq!(Sign::of(&ratio(-1, 3)), Sign::Negative);
        assert_eq!(Sign::Negative.times(Sign::Negative), Sign::Positive);
    }

    #[test]
    fn sorting_sign_matches_parity() {
        assert_eq!(sorting_sign(&[3, 1, 2]), Sign::Positive);
        assert_eq!(sorting_sign(&[2, 1, 3]), Sign::Negative);
        assert_eq!(sorting_sign(&[2, 2]), Sign::Zero);
    }
}
