//! Minor decompositions.
//!
//! * [`skip_minor_decomposition`]: any `k`-minor with row set `s` equals
//!   `Σ_μ K_{λ,μ} D_μ`, where `λ` is read off `s` and each `D_μ` is a sum of
//!   row-consecutive minors.
//! * [`hankel_minor_formula`]: on a Hankel matrix the row-consecutive minors
//!   collapse onto the `k`-minors `b^g_v` of the `k`-row reshaped Hankel
//!   matrix, and the collected coefficients are Littlewood–Richardson
//!   coefficients, hence nonnegative.
//!
//! The coefficients can be produced two independent ways
//! ([`CoefficientRoute`]); they must agree, which the tests check.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{distinct_permutations, parity_of, serialize_ratio, IndexTuple, IntTuple, Partition, Ratio, Sign};
use crate::limits::{Budget, Limits};
use crate::matrix::{consecutive_row_minor, row_consecutive_minor, ExactMatrix, SequenceWindow};
use crate::tableaux::{kostka, lr_coefficient, weight_class};

/// One summand `K_{λ,μ} · D_μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionTerm {
    pub weight: Partition,
    pub coefficient: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Ratio,
}

/// One summand `c^{γ(v*)}_{λ,ε} · b^g_{v*}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HankelFormulaTerm {
    pub vstar: IndexTuple,
    pub gamma: Partition,
    pub coefficient: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub minor_value: Ratio,
}

/// `λ_i = s_{k-i+1} - (k-i+1)`.
pub fn lambda_from_rows(s: &IndexTuple) -> Partition {
    let k = s.len();
    let parts = (0..k).map(|i| s.indices()[k - 1 - i] - (k - i)).collect();
    Partition::new(parts).expect("strictly increasing indices give a partition")
}

/// `ε_i = r_{k-i+1} - k + i`.
pub fn epsilon_from_cols(r: &IndexTuple) -> Partition {
    let k = r.len();
    let parts = (0..k).map(|i| r.indices()[k - 1 - i] + 1 + i - k).collect();
    Partition::new(parts).expect("strictly increasing indices give a partition")
}

/// `γ_i(v*) = v*_{k-i+1} - k + i`, same shape map as [`epsilon_from_cols`].
pub fn gamma_from_vstar(vstar: &IndexTuple) -> Partition {
    epsilon_from_cols(vstar)
}

/// Memo tables for Kostka numbers and LR coefficients shared across many
/// formula evaluations. Not synchronized; use one per thread.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    kostka: HashMap<(Partition, Partition), u64>,
    lr: HashMap<(Partition, Partition, Partition), u64>,
}

impl CoefficientCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn kostka(&mut self, lambda: &Partition, mu: &Partition) -> Result<u64> {
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.kostka.get(&key) {
            return Ok(v);
        }
        let v = kostka(lambda, mu)?;
        self.kostka.insert(key, v);
        Ok(v)
    }

    pub fn lr(&mut self, lambda: &Partition, mu: &Partition, gamma: &Partition) -> u64 {
        let key = (lambda.clone(), mu.clone(), gamma.clone());
        *self
            .lr
            .entry(key)
            .or_insert_with(|| lr_coefficient(lambda, mu, gamma))
    }
}

/// `D_μ = Σ_{p ∈ S(μ)}` of the row-consecutive minor with shifts `p` on columns `cols`.
pub fn compute_d_mu(a: &ExactMatrix, mu: &Partition, cols: &IndexTuple) -> Result<Ratio> {
    if mu.len() != cols.len() {
        return Err(Error::contract("weight and column tuple differ in length"));
    }
    let mut total = Ratio::zero();
    for p in distinct_permutations(&mu.to_int_tuple()) {
        total += row_consecutive_minor(a, &p, cols)?;
    }
    Ok(total)
}

/// Expands `|A_{(s, cols)}|` as `Σ_μ K_{λ,μ} D_μ`.
///
/// Requires `s_1 = 1`; for other row sets slice off the leading rows first.
/// Only weights with `K_{λ,μ} > 0` (those dominated by `λ`) are returned, since
/// the other `D_μ` may reach below the last row of `A`.
pub fn skip_minor_decomposition(a: &ExactMatrix, s: &IndexTuple, cols: &IndexTuple) -> Result<Vec<DecompositionTerm>> {
    if s.len() != cols.len() {
        return Err(Error::contract("row and column tuples differ in length"));
    }
    if s.first().is_some_and(|first| first != 1) {
        return Err(Error::contract("row tuple must start at 1; slice the matrix first"));
    }
    if let Some(last) = s.last() {
        if last > a.rows() {
            return Err(Error::out_of_range(last as i64, format!("row index exceeds {}", a.rows())));
        }
    }
    let lambda = lambda_from_rows(s);
    let mut terms = Vec::new();
    for mu in weight_class(&lambda) {
        let coefficient = kostka(&lambda, &mu)?;
        if coefficient == 0 {
            continue;
        }
        let value = compute_d_mu(a, &mu, cols)?;
        terms.push(DecompositionTerm {
            weight: mu,
            coefficient,
            value,
        });
    }
    Ok(terms)
}

/// `Σ coefficient · value` over decomposition terms.
pub fn recombine(terms: &[DecompositionTerm]) -> Ratio {
    terms.iter().fold(Ratio::zero(), |acc, t| {
        acc + &t.value * Ratio::from_integer(t.coefficient.into())
    })
}

/// `Σ coefficient · minor_value` over Hankel formula terms.
pub fn recombine_formula(terms: &[HankelFormulaTerm]) -> Ratio {
    terms.iter().fold(Ratio::zero(), |acc, t| {
        acc + &t.minor_value * Ratio::from_integer(t.coefficient.into())
    })
}

/// The set `V*` of sorted, repetition-free sums `(p + r)↑` over
/// `μ ∈ weight_class(λ)` and `p ∈ S(μ)`, in lexicographic order.
pub fn enumerate_v_star(lambda: &Partition, r: &IndexTuple) -> Result<Vec<IndexTuple>> {
    enumerate_v_star_capped(lambda, r, Limits::default().max_enumeration)
}

/// [`enumerate_v_star`] with an explicit cap on the number of permutations visited.
pub fn enumerate_v_star_capped(lambda: &Partition, r: &IndexTuple, cap: u64) -> Result<Vec<IndexTuple>> {
    if lambda.len() != r.len() {
        return Err(Error::contract("partition and column tuple differ in length"));
    }
    let mut budget = Budget::new(cap, "permutations while enumerating V*");
    let cols = r.to_int_tuple();
    let mut set = BTreeSet::new();
    for mu in weight_class(lambda) {
        for p in distinct_permutations(&mu.to_int_tuple()) {
            budget.charge(1)?;
            let v = p.add(&cols);
            if v.has_distinct_entries() {
                set.insert(v.sorted_ascending());
            }
        }
    }
    Ok(set
        .into_iter()
        .map(|v| v.to_index_tuple().expect("positive and distinct"))
        .collect())
}

/// `Σ_{q ∈ Q(v*)} sign_{v*}(q) · K_{λ,(q-r)↓}` with `Q(v*)` the
/// rearrangements `q` of `v*` satisfying `q - r ≥ 0`.
pub fn signed_kostka_sum(lambda: &Partition, r: &IndexTuple, vstar: &IndexTuple) -> Result<i64> {
    if !enumerate_v_star(lambda, r)?.contains(vstar) {
        return Err(Error::contract(format!("{vstar} is not in V* for λ = {lambda}, r = {r}")));
    }
    signed_kostka_sum_with(lambda, r, vstar, &mut CoefficientCache::new())
}

/// [`signed_kostka_sum`] without the membership check, using a shared cache.
pub fn signed_kostka_sum_with(
    lambda: &Partition,
    r: &IndexTuple,
    vstar: &IndexTuple,
    cache: &mut CoefficientCache,
) -> Result<i64> {
    let base = vstar.to_int_tuple();
    let cols = r.to_int_tuple();
    if base.len() != cols.len() {
        return Err(Error::contract("v* and column tuple differ in length"));
    }
    let mut total = 0i64;
    for q in distinct_permutations(&base) {
        let shift = q.sub(&cols);
        if !shift.is_nonnegative() {
            continue;
        }
        let mu = shift.to_partition()?;
        if mu.weight() != lambda.weight() {
            continue;
        }
        let k = cache.kostka(lambda, &mu)? as i64;
        total += parity_of(base.values(), q.values()).to_i64() * k;
    }
    Ok(total)
}

/// How the coefficient of each `b^g_{v*}` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRoute {
    /// `c^{γ(v*)}_{λ,ε}` by counting LR tableaux.
    LittlewoodRichardson,
    /// Signed sums of Kostka numbers over column permutations.
    SignedKostka,
}

/// `(v*, γ(v*), coefficient)` for every `v* ∈ V*`, zeros included.
pub fn formula_coefficients(
    lambda: &Partition,
    r: &IndexTuple,
    route: CoefficientRoute,
    cache: &mut CoefficientCache,
    limits: &Limits,
) -> Result<Vec<(IndexTuple, Partition, i64)>> {
    let epsilon = epsilon_from_cols(r);
    enumerate_v_star_capped(lambda, r, limits.max_enumeration)?
        .into_iter()
        .map(|vstar| {
            let gamma = gamma_from_vstar(&vstar);
            let c = match route {
                CoefficientRoute::LittlewoodRichardson => cache.lr(lambda, &epsilon, &gamma) as i64,
                CoefficientRoute::SignedKostka => signed_kostka_sum_with(lambda, r, &vstar, cache)?,
            };
            Ok((vstar, gamma, c))
        })
        .collect()
}

/// Writes the minor `|H^g(1,M,N)_{(s,r)}|` as a nonnegative integer
/// combination of reshaped minors `b^g_{v*}`.
///
/// Terms whose coefficient is zero are omitted; their `b^g_{v*}` may need
/// sequence values beyond index `s_k + r_k - 1`.
pub fn hankel_minor_formula(g: &SequenceWindow, s: &IndexTuple, r: &IndexTuple) -> Result<Vec<HankelFormulaTerm>> {
    hankel_minor_formula_with(g, s, r, &mut CoefficientCache::new(), &Limits::default())
}

pub fn hankel_minor_formula_with(
    g: &SequenceWindow,
    s: &IndexTuple,
    r: &IndexTuple,
    cache: &mut CoefficientCache,
    limits: &Limits,
) -> Result<Vec<HankelFormulaTerm>> {
    use crate::matrix::Sequence;

    if s.len() != r.len() {
        return Err(Error::contract("row and column tuples differ in length"));
    }
    if let (Some(sk), Some(rk)) = (s.last(), r.last()) {
        g.require(1, (sk + rk) as i64 - 1)?;
    }
    let lambda = lambda_from_rows(s);
    let mut terms = Vec::new();
    for (vstar, gamma, c) in formula_coefficients(&lambda, r, CoefficientRoute::LittlewoodRichardson, cache, limits)? {
        if c == 0 {
            continue;
        }
        let idx: Vec<i64> = vstar.indices().iter().map(|&i| i as i64).collect();
        terms.push(HankelFormulaTerm {
            minor_value: consecutive_row_minor(g, &idx)?,
            vstar,
            gamma,
            coefficient: c as u64,
        });
    }
    Ok(terms)
}

/// `b^g_v` for an arbitrary integer tuple, equal to `sign · b^g_{v↑}`.
pub fn reshaped_minor(g: &SequenceWindow, v: &IntTuple) -> Result<Ratio> {
    consecutive_row_minor(g, v.values())
}

/// `λ↑ + r`, the index tuple whose coefficient is always at least one.
pub fn leading_vstar(lambda: &Partition, r: &IndexTuple) -> IndexTuple {
    let ascending = lambda.to_int_tuple().sorted_ascending();
    ascending
        .add(&r.to_int_tuple())
        .to_index_tuple()
        .expect("λ↑ + r is strictly increasing")
}

/// Sign relating `b^g_v` to `b^g_{v↑}` (zero when `v` repeats an index).
pub fn column_sort_sign(v: &IntTuple) -> Sign {
    crate::exact::sorting_sign(v.values())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::matrix::{build_hankel, minor};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn idx(v: &[usize]) -> IndexTuple {
        IndexTuple::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn random_window(rng: &mut ChaCha8Rng, len: usize) -> SequenceWindow {
        SequenceWindow::from_fn(1, len, |_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_from_rows(&idx(&[1, 2, 3])), part(&[0, 0, 0]));
        assert_eq!(lambda_from_rows(&idx(&[1, 3])), part(&[1, 0]));
        assert_eq!(lambda_from_rows(&idx(&[1, 3, 7])), part(&[4, 1, 0]));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_from_cols(&idx(&[1, 2, 3])), part(&[1, 1, 1]));
        assert_eq!(epsilon_from_cols(&idx(&[1, 2, 4])), part(&[2, 1, 1]));
        assert_eq!(epsilon_from_cols(&idx(&[2, 3, 5])), part(&[3, 2, 2]));
        assert_eq!(gamma_from_vstar(&idx(&[1, 4, 7])), part(&[5, 3, 1]));
        assert_eq!(gamma_from_vstar(&idx(&[2, 4, 6])), part(&[4, 3, 2]));
    }

    #[test]
    fn d_mu_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_window(&mut rng, 6);
        let a = build_hankel(&g, 1, 4, 2).unwrap();
        let cols = idx(&[1, 2]);
        assert_eq!(
            compute_d_mu(&a, &part(&[0, 0]), &cols).unwrap(),
            minor(&a, &cols, &cols).unwrap()
        );
        let b13 = consecutive_row_minor(&g, &[1, 3]).unwrap();
        assert_eq!(consecutive_row_minor(&g, &[2, 2]).unwrap(), int(0));
        assert_eq!(compute_d_mu(&a, &part(&[1, 0]), &cols).unwrap(), b13);
        // (m, m) has a single rearrangement.
        let direct = row_consecutive_minor(&a, &IntTuple(vec![1, 1]), &cols).unwrap();
        assert_eq!(compute_d_mu(&a, &part(&[1, 1]), &cols).unwrap(), direct);
        assert!(compute_d_mu(&a, &part(&[3, 0]), &cols).is_err());
    }

    #[test]
    fn skip_decomposition_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = ExactMatrix::from_fn(7, 3, |_, _| int(rng.gen_range(-5..=5)));
        let cols = idx(&[1, 2, 3]);

        let trivial = skip_minor_decomposition(&a, &idx(&[1, 2, 3]), &cols).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].coefficient, 1);
        assert_eq!(trivial[0].value, minor(&a, &cols, &cols).unwrap());

        let s = idx(&[1, 3, 6]);
        let terms = skip_minor_decomposition(&a, &s, &cols).unwrap();
        assert_eq!(recombine(&terms), minor(&a, &s, &cols).unwrap());

        // k = 2: every coefficient is one and the sum telescopes.
        let two = idx(&[1, 2]);
        for s2 in 2..=7 {
            let s = idx(&[1, s2]);
            let terms = skip_minor_decomposition(&a, &s, &two).unwrap();
            assert!(terms.iter().all(|t| t.coefficient == 1));
            let telescoped = (0..=s2 as i64 - 2).fold(Ratio::zero(), |acc, i| {
                acc + row_consecutive_minor(&a, &IntTuple(vec![i, s2 as i64 - 2 - i]), &two).unwrap()
            });
            assert_eq!(recombine(&terms), telescoped);
            assert_eq!(telescoped, minor(&a, &s, &two).unwrap());
        }

        assert!(matches!(
            skip_minor_decomposition(&a, &idx(&[2, 3, 4]), &cols),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn v_star_examples() {
        assert_eq!(enumerate_v_star(&part(&[0, 0, 0]), &idx(&[2, 5, 6])).unwrap(), vec![idx(&[2, 5, 6])]);
        assert_eq!(enumerate_v_star(&part(&[1, 0]), &idx(&[1, 2])).unwrap(), vec![idx(&[1, 3])]);
        let v = enumerate_v_star(&part(&[4, 1, 0]), &idx(&[1, 2, 4])).unwrap();
        assert!(v.contains(&idx(&[1, 4, 7])));
        assert!(v.contains(&idx(&[2, 4, 6])));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            enumerate_v_star_capped(&part(&[4, 1, 0]), &idx(&[1, 2, 4]), 3),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn signed_kostka_examples() {
        let lambda = part(&[4, 1, 0]);
        let r = idx(&[1, 2, 4]);
        assert_eq!(signed_kostka_sum(&lambda, &r, &idx(&[1, 4, 7])).unwrap(), 1);
        assert_eq!(signed_kostka_sum(&lambda, &r, &idx(&[2, 4, 6])).unwrap(), 0);
        assert_eq!(signed_kostka_sum(&part(&[0, 0]), &idx(&[3, 5]), &idx(&[3, 5])).unwrap(), 1);
        assert!(matches!(
            signed_kostka_sum(&lambda, &r, &idx(&[1, 2, 3])),
            Err(Error::Contract(_))
        ));
        let epsilon = epsilon_from_cols(&r);
        assert_eq!(lr_coefficient(&lambda, &epsilon, &gamma_from_vstar(&idx(&[1, 4, 7]))), 1);
        assert_eq!(lr_coefficient(&lambda, &epsilon, &gamma_from_vstar(&idx(&[2, 4, 6]))), 0);
    }

    #[test]
    fn hankel_formula_trivial_case() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_window(&mut rng, 7);
        let run = idx(&[1, 2, 3]);
        let terms = hankel_minor_formula(&g, &run, &run).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient, 1);
        assert_eq!(terms[0].vstar, run);
        let a = build_hankel(&g, 1, 3, 3).unwrap();
        assert_eq!(terms[0].minor_value, minor(&a, &run, &run).unwrap());
    }

    #[test]
    fn hankel_formula_two_by_two_cancellation() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = random_window(&mut rng, 16);
        for r2 in 2..=6usize {
            for s2 in r2 + 1..=9 {
                let terms = hankel_minor_formula(&g, &idx(&[1, s2]), &idx(&[1, r2])).unwrap();
                let expected: Vec<IndexTuple> = (0..=r2 - 2).map(|i| idx(&[i + 1, s2 + r2 - 2 - i])).collect();
                let mut got: Vec<IndexTuple> = terms.iter().map(|t| t.vstar.clone()).collect();
                got.sort();
                let mut want = expected.clone();
                want.sort();
                assert_eq!(got, want, "s2={s2} r2={r2}");
                assert!(terms.iter().all(|t| t.coefficient == 1));
            }
        }
    }

    #[test]
    fn hankel_formula_reproduces_minor() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let g = random_window(&mut rng, 10);
        let (s, r) = (idx(&[1, 3, 7]), idx(&[1, 2, 4]));
        let terms = hankel_minor_formula(&g, &s, &r).unwrap();
        let a = build_hankel(&g, 1, 7, 4).unwrap();
        assert_eq!(recombine_formula(&terms), minor(&a, &s, &r).unwrap());
        let short = SequenceWindow::from_one(g.values()[..9].to_vec());
        assert!(matches!(hankel_minor_formula(&short, &s, &r), Err(Error::OutOfRange { index: 10, .. })));
    }

    #[test]
    fn both_routes_agree_and_leading_term_is_positive() {
        let mut cache = CoefficientCache::new();
        let limits = Limits::default();
        for s in crate::matrix::IndexTuples::new(7, 3).unwrap() {
            let lambda = lambda_from_rows(&s);
            for r in crate::matrix::IndexTuples::new(5, 3).unwrap() {
                let lr = formula_coefficients(&lambda, &r, CoefficientRoute::LittlewoodRichardson, &mut cache, &limits).unwrap();
                let sk = formula_coefficients(&lambda, &r, CoefficientRoute::SignedKostka, &mut cache, &limits).unwrap();
                assert_eq!(lr, sk, "s={s} r={r}");
                let lead = leading_vstar(&lambda, &r);
                let c = lr.iter().find(|(v, _, _)| *v == lead).map(|x| x.2).unwrap();
                assert!(c >= 1);
            }
        }
    }

    #[test]
    fn column_sort_sign_relates_unsorted_minors() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = random_window(&mut rng, 12);
        let v = IntTuple(vec![5, 2, 7]);
        let sorted = reshaped_minor(&g, &v.sorted_ascending()).unwrap();
        let sign = column_sort_sign(&v);
        assert_eq!(reshaped_minor(&g, &v).unwrap(), sorted * int(sign.to_i64()));
    }
}
