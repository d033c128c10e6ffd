//! Decision procedures for sign consistency and positivity of minors.
//!
//! Every procedure returns a [`CertificateReport`]. Brute force is the
//! reference; the structured certificates (reshaped Hankel/Toeplitz, circulant
//! rows, initial and consecutive minors, the Peña transform) evaluate far fewer
//! minors and say whether their answer is conclusive.
//!
//! Enumeration is sequential and lexicographic (order, then rows, then
//! columns), so the first violation found is the lexicographically first one.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{serialize_ratio, IndexTuple, Ratio, Sign};
use crate::limits::{Budget, Limits};
use crate::matrix::{
    build_circulant, build_hankel, build_toeplitz, det_exact, ExactMatrix, IndexTuples, PeriodicSequence, Sequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// The property is proved for the target.
    Holds,
    /// The property is disproved for the target.
    Fails,
    /// A sufficient condition failed; nothing is known about the target.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    ReshapedHankel,
    ReshapedToeplitz,
    CirculantRows,
    Pena,
    ConsecutiveMinors,
    InitialMinors,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::BruteForce => "brute-force",
            Method::ReshapedHankel => "reshaped-hankel",
            Method::ReshapedToeplitz => "reshaped-toeplitz",
            Method::CirculantRows => "circulant-rows",
            Method::Pena => "pena",
            Method::ConsecutiveMinors => "consecutive-minors",
            Method::InitialMinors => "initial-minors",
        };
        f.write_str(name)
    }
}

/// A minor of a named matrix, with 1-based index tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub matrix: String,
    pub rows: IndexTuple,
    pub cols: IndexTuple,
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Ratio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    /// `true` only when the property is proved.
    pub verdict: bool,
    pub outcome: Outcome,
    pub strict: bool,
    /// Order of the minors in question.
    pub order: usize,
    pub common_sign: Option<Sign>,
    pub method: Method,
    /// The violating minor or opposite-signed pair on failure, the minors
    /// of smallest and largest magnitude on success.
    pub witnesses: Vec<Witness>,
    pub minors_evaluated: u64,
    /// Set when an infinite family was only checked up to this size.
    pub truncated_at: Option<usize>,
    pub notes: Vec<String>,
}

impl CertificateReport {
    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn set_outcome(&mut self, outcome: Outcome) {
        self.outcome = outcome;
        self.verdict = outcome == Outcome::Holds;
        if outcome != Outcome::Holds {
            self.common_sign = None;
        }
    }
}

/// What a scan is looking for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// No two minors of opposite sign (strict: and none zero).
    SameSign,
    /// No negative minor (strict: and none zero).
    Nonnegative,
}

struct Tally {
    goal: Goal,
    strict: bool,
    first_positive: Option<Witness>,
    first_negative: Option<Witness>,
    smallest: Option<Witness>,
    largest: Option<Witness>,
    violation: Vec<Witness>,
    budget: Budget,
}

impl Tally {
    fn new(goal: Goal, strict: bool, limits: &Limits) -> Self {
        Tally {
            goal,
            strict,
            first_positive: None,
            first_negative: None,
            smallest: None,
            largest: None,
            violation: Vec::new(),
            budget: Budget::new(limits.max_minors, "minor evaluations"),
        }
    }

    fn violated(&self) -> bool {
        !self.violation.is_empty()
    }

    /// Records one minor; returns `true` once a violation is known.
    fn observe(&mut self, witness: Witness) -> Result<bool> {
        self.budget.charge(1)?;
        let sign = Sign::of(&witness.value);
        if self.smallest.as_ref().is_none_or(|w| witness.value.abs() < w.value.abs()) {
            self.smallest = Some(witness.clone());
        }
        if self.largest.as_ref().is_none_or(|w| witness.value.abs() > w.value.abs()) {
            self.largest = Some(witness.clone());
        }
        match (sign, self.goal) {
            (Sign::Zero, _) if self.strict => self.violation = vec![witness],
            (Sign::Zero, _) => {}
            (Sign::Negative, Goal::Nonnegative) => self.violation = vec![witness],
            (Sign::Positive, Goal::SameSign) if self.first_negative.is_some() => {
                self.violation = vec![self.first_negative.clone().unwrap(), witness]
            }
            (Sign::Negative, Goal::SameSign) if self.first_positive.is_some() => {
                self.violation = vec![self.first_positive.clone().unwrap(), witness]
            }
            (Sign::Positive, _) => {
                self.first_positive.get_or_insert(witness);
            }
            (Sign::Negative, _) => {
                self.first_negative.get_or_insert(witness);
            }
        }
        Ok(self.violated())
    }

    fn finish(self, method: Method, order: usize) -> CertificateReport {
        let minors_evaluated = self.budget.used();
        let (outcome, common_sign, witnesses) = if self.violated() {
            (Outcome::Fails, None, self.violation)
        } else {
            let sign = if self.first_positive.is_some() {
                Some(Sign::Positive)
            } else if self.first_negative.is_some() {
                Some(Sign::Negative)
            } else {
                None
            };
            let mut extremal: Vec<Witness> = self.smallest.into_iter().collect();
            if let Some(w) = self.largest {
                if extremal.first() != Some(&w) {
                    extremal.push(w);
                }
            }
            (Outcome::Holds, sign, extremal)
        };
        CertificateReport {
            verdict: outcome == Outcome::Holds,
            outcome,
            strict: self.strict,
            order,
            common_sign,
            method,
            witnesses,
            minors_evaluated,
            truncated_at: None,
            notes: Vec::new(),
        }
    }
}

fn check_order(x: &ExactMatrix, k: usize) -> Result<()> {
    if k == 0 || k > x.rows().min(x.cols()) {
        return Err(Error::contract(format!(
            "order {k} outside 1..={} for a {}x{} matrix",
            x.rows().min(x.cols()),
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

fn zero_based(t: &IndexTuple) -> Vec<usize> {
    t.indices().iter().map(|&i| i - 1).collect()
}

/// Feeds every `k`-minor of `x` to the tally; stops at the first violation.
fn scan_all(x: &ExactMatrix, k: usize, label: &str, tally: &mut Tally) -> Result<()> {
    let cols: Vec<IndexTuple> = IndexTuples::new(x.cols(), k)?.collect();
    let col_idx: Vec<Vec<usize>> = cols.iter().map(zero_based).collect();
    for rows in IndexTuples::new(x.rows(), k)? {
        let row_idx = zero_based(&rows);
        for (c, ci) in cols.iter().zip(&col_idx) {
            let value = det_exact(&x.select(&row_idx, ci))?;
            let w = Witness {
                matrix: label.to_string(),
                rows: rows.clone(),
                cols: c.clone(),
                value,
            };
            if tally.observe(w)? {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn consecutive(start: usize, len: usize) -> IndexTuple {
    IndexTuple::run(start, len)
}

fn observe_minor(x: &ExactMatrix, rows: IndexTuple, cols: IndexTuple, label: &str, tally: &mut Tally) -> Result<bool> {
    let value = det_exact(&x.select(&zero_based(&rows), &zero_based(&cols)))?;
    tally.observe(Witness {
        matrix: label.to_string(),
        rows,
        cols,
        value,
    })
}

/// Options shared by all certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CertifyOptions {
    pub limits: Limits,
    /// Decide reshaped Hankel matrices through the Peña transform when its
    /// leading block is invertible.
    pub use_pena: bool,
    /// When a reshaped certificate fails, brute-force the target itself to
    /// turn "inconclusive" into a definite answer.
    pub confirm_with_target: bool,
}

/// Runs certificates under one set of [`CertifyOptions`]. The free functions
/// of this module are shorthands for `Certifier::default()`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Certifier {
    pub options: CertifyOptions,
}

impl Certifier {
    pub fn new(options: CertifyOptions) -> Self {
        Certifier { options }
    }

    pub fn with_limits(limits: Limits) -> Self {
        Certifier::new(CertifyOptions {
            limits,
            ..CertifyOptions::default()
        })
    }

    /// Enumerates all `C(m,k)·C(n,k)` minors of order `k`.
    pub fn sign_consistency_bruteforce(&self, x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
        self.sign_consistency_labeled(x, k, strict, "X")
    }

    fn sign_consistency_labeled(&self, x: &ExactMatrix, k: usize, strict: bool, label: &str) -> Result<CertificateReport> {
        check_order(x, k)?;
        let mut tally = Tally::new(Goal::SameSign, strict, &self.options.limits);
        scan_all(x, k, label, &mut tally)?;
        Ok(tally.finish(Method::BruteForce, k))
    }

    /// All minors of orders `1..=k` nonnegative (strict: positive).
    pub fn k_positivity_bruteforce(&self, x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
        check_order(x, k)?;
        let mut tally = Tally::new(Goal::Nonnegative, strict, &self.options.limits);
        for j in 1..=k {
            scan_all(x, j, "X", &mut tally)?;
            if tally.violated() {
                break;
            }
        }
        Ok(tally.finish(Method::BruteForce, k))
    }

    /// `k`-positivity from initial minors of orders below `k` and consecutive
    /// minors of order `k`.
    ///
    /// Strict mode is exact. In non-strict mode the test is only sufficient: a
    /// zero initial minor makes the report inconclusive rather than false.
    pub fn k_positivity_consecutive(&self, x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
        check_order(x, k)?;
        let (m, n) = (x.rows(), x.cols());
        let limits = &self.options.limits;
        // Initial minors must be strictly positive in both modes.
        let mut initial = Tally::new(Goal::Nonnegative, true, limits);
        let mut first_zero_initial: Option<Witness> = None;
        'initial: for j in 1..k {
            let row_initial = (1..=n + 1 - j).map(|c| (consecutive(1, j), consecutive(c, j)));
            let col_initial = (2..=m + 1 - j).map(|r| (consecutive(r, j), consecutive(1, j)));
            for (rows, cols) in row_initial.chain(col_initial) {
                if observe_minor(x, rows, cols, "X", &mut initial)? {
                    let w = &initial.violation[0];
                    if strict || w.value.is_negative() {
                        break 'initial;
                    }
                    // A zero initial minor voids sufficiency but is no disproof.
                    first_zero_initial.get_or_insert_with(|| w.clone());
                    initial.violation.clear();
                }
            }
        }
        let mut tally = Tally::new(Goal::Nonnegative, strict, limits);
        tally.budget.charge(initial.budget.used())?;
        if initial.violated() {
            tally.violation = initial.violation;
        } else {
            'consecutive: for r in 1..=m + 1 - k {
                for c in 1..=n + 1 - k {
                    if observe_minor(x, consecutive(r, k), consecutive(c, k), "X", &mut tally)? {
                        break 'consecutive;
                    }
                }
            }
        }
        let mut report = tally.finish(Method::ConsecutiveMinors, k);
        if report.outcome == Outcome::Holds {
            if let Some(w) = first_zero_initial {
                report.set_outcome(Outcome::Inconclusive);
                report.witnesses = vec![w];
                report = report.with_note("an initial minor vanishes; the consecutive-minor test is only sufficient here");
            } else if initial.first_positive.is_some() {
                report.common_sign = Some(Sign::Positive);
            }
        }
        if !strict {
            report = report.with_note("non-strict mode: holding conditions are sufficient, not necessary");
        }
        Ok(report)
    }

    /// Strict total positivity from the row- and column-initial minors of every order.
    pub fn strict_total_positivity_initial(&self, x: &ExactMatrix) -> Result<CertificateReport> {
        let (m, n) = (x.rows(), x.cols());
        let order = m.min(n);
        let mut tally = Tally::new(Goal::Nonnegative, true, &self.options.limits);
        'outer: for j in 1..=order {
            let row_initial = (1..=n + 1 - j).map(|c| (consecutive(1, j), consecutive(c, j)));
            let col_initial = (2..=m + 1 - j).map(|r| (consecutive(r, j), consecutive(1, j)));
            for (rows, cols) in row_initial.chain(col_initial) {
                if observe_minor(x, rows, cols, "X", &mut tally)? {
                    break 'outer;
                }
            }
        }
        Ok(tally.finish(Method::InitialMinors, order))
    }

    /// Decides (strict) `n`-sign consistency of a tall `m x n` matrix through
    /// the (strict) positivity of its Peña transform.
    pub fn n_sign_consistency_via_pena(&self, x: &ExactMatrix, strict: bool) -> Result<CertificateReport> {
        self.pena_labeled(x, strict, "X")
    }

    fn pena_labeled(&self, x: &ExactMatrix, strict: bool, label: &str) -> Result<CertificateReport> {
        let c = pena_transform(x)?;
        let n = x.cols();
        let lead = det_exact(&x.select(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>()))?;
        let order = c.rows().min(c.cols());
        let inner = Certifier::new(self.options);
        let positivity = if strict {
            inner.k_positivity_consecutive(&c, order, true)?
        } else {
            inner.k_positivity_bruteforce(&c, order, false)?
        };
        let mut report = CertificateReport {
            verdict: positivity.verdict,
            outcome: positivity.outcome,
            strict,
            order: n,
            common_sign: positivity.verdict.then(|| Sign::of(&lead)),
            method: Method::Pena,
            witnesses: Vec::new(),
            minors_evaluated: positivity.minors_evaluated + 1,
            truncated_at: None,
            notes: vec![format!("transform is {}x{}; positivity checked up to order {order}", c.rows(), c.cols())],
        };
        if report.verdict {
            report.witnesses.push(Witness {
                matrix: label.to_string(),
                rows: consecutive(1, n),
                cols: consecutive(1, n),
                value: lead,
            });
        } else {
            // The transform only says "no"; take concrete witnesses from the matrix itself.
            let fallback = self.sign_consistency_labeled(x, n, strict, label)?;
            report.minors_evaluated += fallback.minors_evaluated;
            if fallback.verdict {
                return Err(Error::Precondition(
                    "Peña transform and brute force disagree; the leading block is likely ill-posed".into(),
                ));
            }
            report.witnesses = fallback.witnesses;
        }
        Ok(report)
    }

    /// Certifies `H^g(1,M,N)` through the reshaped matrix `H^g(1,k,M+N-k)`.
    ///
    /// The certificate is sufficient only. It is also necessary when `k = 1`
    /// or `k ∈ {M, N}`, because the two matrices then share their `k`-minors.
    pub fn certify_hankel_k_sign<S: Sequence + ?Sized>(
        &self,
        g: &S,
        m: usize,
        n: usize,
        k: usize,
        strict: bool,
    ) -> Result<CertificateReport> {
        if k == 0 || k > m.min(n) {
            return Err(Error::contract(format!("order {k} outside 1..={}", m.min(n))));
        }
        g.require(1, (m + n) as i64 - 1)?;
        let width = m + n - k;
        let reshaped = build_hankel(g, 1, k, width)?;
        let label = format!("H^g(1,{k},{width})");
        let mut report = match self.pena_for_reshaped(&reshaped, strict, &label)? {
            Some(report) => report,
            None => self.sign_consistency_labeled(&reshaped, k, strict, &label)?,
        };
        if report.method == Method::BruteForce {
            report.method = Method::ReshapedHankel;
        }
        let exact = k == 1 || k == m || k == n;
        if report.outcome == Outcome::Fails && !exact {
            self.resolve_with_target(&mut report, || build_hankel(g, 1, m, n), k, strict, &format!("H^g(1,{m},{n})"))?;
        }
        Ok(report)
    }

    /// Peña route for a `k`-row reshaped Hankel matrix, when enabled and applicable.
    fn pena_for_reshaped(&self, reshaped: &ExactMatrix, strict: bool, label: &str) -> Result<Option<CertificateReport>> {
        let k = reshaped.rows();
        if !self.options.use_pena || reshaped.cols() <= k {
            return Ok(None);
        }
        let tall = reshaped.transpose();
        match self.pena_labeled(&tall, strict, label) {
            Ok(mut report) => {
                for w in &mut report.witnesses {
                    std::mem::swap(&mut w.rows, &mut w.cols);
                }
                Ok(Some(report))
            }
            Err(Error::Singular(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn resolve_with_target(
        &self,
        report: &mut CertificateReport,
        target: impl FnOnce() -> Result<ExactMatrix>,
        k: usize,
        strict: bool,
        label: &str,
    ) -> Result<()> {
        if !self.options.confirm_with_target {
            report.set_outcome(Outcome::Inconclusive);
            report.notes.push("reshaped matrix fails; the certificate is only sufficient".into());
            return Ok(());
        }
        let direct = self.sign_consistency_labeled(&target()?, k, strict, label)?;
        report.minors_evaluated += direct.minors_evaluated;
        report.set_outcome(direct.outcome);
        report.common_sign = direct.common_sign;
        report.witnesses = direct.witnesses;
        report.notes.push("reshaped matrix fails; decided by brute force on the target".into());
        Ok(())
    }

    /// Checks `H^g(1,k,N)` for every `N ∈ (k : n_max)`. Since each of these is
    /// the leading column block of `H^g(1,k,n_max)`, one scan covers them all.
    /// "Fails" disproves the operator property; "Holds" is up to `n_max` only.
    pub fn certify_hankel_operator<S: Sequence + ?Sized>(
        &self,
        g: &S,
        k: usize,
        n_max: usize,
        strict: bool,
    ) -> Result<CertificateReport> {
        if k == 0 || n_max < k {
            return Err(Error::contract(format!("need 1 <= k <= N_max, got k = {k}, N_max = {n_max}")));
        }
        g.require(1, (n_max + k) as i64 - 1)?;
        let reshaped = build_hankel(g, 1, k, n_max)?;
        let mut report = self.sign_consistency_labeled(&reshaped, k, strict, &format!("H^g(1,{k},{n_max})"))?;
        report.method = Method::ReshapedHankel;
        match report.outcome {
            Outcome::Holds => report.truncated_at = Some(n_max),
            _ => {
                let first_n = report.witnesses.iter().filter_map(|w| w.cols.last()).max().unwrap_or(k);
                report.notes.push(format!("violation already present in H^g(1,{k},{first_n})"));
            }
        }
        Ok(report)
    }

    /// Certifies `T^g(t,M,N)` through the reshaped matrix `T^g(t+M-k,k,M+N-k)`.
    pub fn certify_toeplitz_k_sign<S: Sequence + ?Sized>(
        &self,
        g: &S,
        t: i64,
        m: usize,
        n: usize,
        k: usize,
        strict: bool,
    ) -> Result<CertificateReport> {
        if k == 0 || k > m.min(n) {
            return Err(Error::contract(format!("order {k} outside 1..={}", m.min(n))));
        }
        g.require(t + 1 - n as i64, t + m as i64 - 1)?;
        let start = t + (m - k) as i64;
        let width = m + n - k;
        let reshaped = build_toeplitz(g, start, k, width)?;
        let mut report = self.sign_consistency_labeled(&reshaped, k, strict, &format!("T^g({start},{k},{width})"))?;
        report.method = Method::ReshapedToeplitz;
        let exact = k == 1 || k == m;
        if report.outcome == Outcome::Fails && !exact {
            self.resolve_with_target(&mut report, || build_toeplitz(g, t, m, n), k, strict, &format!("T^g({t},{m},{n})"))?;
        }
        Ok(report)
    }

    /// Non-strict `k`-sign consistency of the circulant `C^g`, decided on its
    /// first `k` rows. Requires odd `k ≤ T` with `2k ≥ T + 1`.
    pub fn certify_circulant_k_sign(&self, g: &PeriodicSequence, k: usize, strict: bool) -> Result<CertificateReport> {
        let period = g.period();
        if strict {
            return Err(Error::Unsupported(
                "strict circulant certification: the reshaped route cannot certify strict sign consistency".into(),
            ));
        }
        if k == 0 || k > period {
            return Err(Error::Precondition(format!("k = {k} must lie in 1..={period}")));
        }
        if k % 2 == 0 {
            return Err(Error::Precondition(format!("k = {k} must be odd")));
        }
        if 2 * k < period + 1 {
            return Err(Error::Precondition(format!("2k >= T + 1 fails for k = {k}, T = {period}")));
        }
        let rows = build_circulant(g).select(&(0..k).collect::<Vec<_>>(), &(0..period).collect::<Vec<_>>());
        let mut report = self.sign_consistency_labeled(&rows, k, false, &format!("C^g((1:{k}),:)"))?;
        report.method = Method::CirculantRows;
        Ok(report)
    }

    /// (Strict) `k`-positivity of `H^g(t,M,N)` from its consecutive minors of
    /// orders `1..=k`. A consecutive `j`-minor at rows `i+1..`, columns `l+1..`
    /// is the leading minor of `H^g(t+i+l, j, j)`, so each is computed once.
    pub fn hankel_k_positivity<S: Sequence + ?Sized>(
        &self,
        g: &S,
        t: i64,
        m: usize,
        n: usize,
        k: usize,
        strict: bool,
    ) -> Result<CertificateReport> {
        if k == 0 || k > m.min(n) {
            return Err(Error::contract(format!("order {k} outside 1..={}", m.min(n))));
        }
        g.require(t, t + (m + n) as i64 - 2)?;
        let mut tally = Tally::new(Goal::Nonnegative, strict, &self.options.limits);
        let label = format!("H^g({t},{m},{n})");
        'orders: for j in 1..=k {
            let mut cache: HashMap<usize, Ratio> = HashMap::new();
            for i in 0..=m - j {
                for l in 0..=n - j {
                    let d = i + l;
                    let value = match cache.get(&d) {
                        Some(v) => v.clone(),
                        None => {
                            let v = det_exact(&build_hankel(g, t + d as i64, j, j)?)?;
                            cache.insert(d, v.clone());
                            v
                        }
                    };
                    let w = Witness {
                        matrix: label.clone(),
                        rows: consecutive(i + 1, j),
                        cols: consecutive(l + 1, j),
                        value,
                    };
                    if tally.observe(w)? {
                        break 'orders;
                    }
                }
            }
        }
        Ok(tally.finish(Method::ConsecutiveMinors, k))
    }

    /// Checks the consecutive `j`-minors of `H^g(1,j,N)` for `j ∈ (1:k)`,
    /// `N ≤ n_max`. "Fails" is conclusive; "Holds" is up to `n_max` only.
    pub fn hankel_operator_k_positivity<S: Sequence + ?Sized>(
        &self,
        g: &S,
        k: usize,
        n_max: usize,
        strict: bool,
    ) -> Result<CertificateReport> {
        if k == 0 || n_max < k {
            return Err(Error::contract(format!("need 1 <= k <= N_max, got k = {k}, N_max = {n_max}")));
        }
        g.require(1, (n_max + k) as i64 - 1)?;
        let mut tally = Tally::new(Goal::Nonnegative, strict, &self.options.limits);
        'orders: for j in 1..=k {
            let label = format!("H^g(1,{j},{n_max})");
            for l in 0..=n_max - j {
                let value = det_exact(&build_hankel(g, 1 + l as i64, j, j)?)?;
                let w = Witness {
                    matrix: label.clone(),
                    rows: consecutive(1, j),
                    cols: consecutive(l + 1, j),
                    value,
                };
                if tally.observe(w)? {
                    break 'orders;
                }
            }
        }
        let mut report = tally.finish(Method::ConsecutiveMinors, k);
        if report.verdict {
            report.truncated_at = Some(n_max);
        }
        Ok(report)
    }
}

/// `K_n` with `k_{ij} = (-1)^{j-1}` on the antidiagonal `i + j = n + 1`.
pub fn pena_k(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        if i + j + 1 == n {
            if j % 2 == 0 {
                Ratio::one()
            } else {
                -Ratio::one()
            }
        } else {
            Ratio::zero()
        }
    })
}

/// `C = X_{((n+1:m),(1:n))} · X_{((1:n),(1:n))}^{-1} · K_n` for a tall `m x n` matrix.
pub fn pena_transform(x: &ExactMatrix) -> Result<ExactMatrix> {
    let (m, n) = (x.rows(), x.cols());
    if m <= n {
        return Err(Error::contract(format!("Peña transform needs more rows than columns, got {m}x{n}")));
    }
    let cols: Vec<usize> = (0..n).collect();
    let lead = x.select(&cols, &cols);
    let bottom = x.select(&(n..m).collect::<Vec<_>>(), &cols);
    bottom.mul(&lead.inverse()?)?.mul(&pena_k(n))
}

pub fn sign_consistency_bruteforce(x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().sign_consistency_bruteforce(x, k, strict)
}

pub fn k_positivity_bruteforce(x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().k_positivity_bruteforce(x, k, strict)
}

pub fn k_positivity_consecutive(x: &ExactMatrix, k: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().k_positivity_consecutive(x, k, strict)
}

pub fn strict_total_positivity_initial(x: &ExactMatrix) -> Result<CertificateReport> {
    Certifier::default().strict_total_positivity_initial(x)
}

pub fn n_sign_consistency_via_pena(x: &ExactMatrix, strict: bool) -> Result<CertificateReport> {
    Certifier::default().n_sign_consistency_via_pena(x, strict)
}

pub fn certify_hankel_k_sign<S: Sequence + ?Sized>(g: &S, m: usize, n: usize, k: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().certify_hankel_k_sign(g, m, n, k, strict)
}

pub fn certify_hankel_operator<S: Sequence + ?Sized>(g: &S, k: usize, n_max: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().certify_hankel_operator(g, k, n_max, strict)
}

pub fn certify_toeplitz_k_sign<S: Sequence + ?Sized>(
    g: &S,
    t: i64,
    m: usize,
    n: usize,
    k: usize,
    strict: bool,
) -> Result<CertificateReport> {
    Certifier::default().certify_toeplitz_k_sign(g, t, m, n, k, strict)
}

pub fn certify_circulant_k_sign(g: &PeriodicSequence, k: usize, strict: bool) -> Result<CertificateReport> {
    Certifier::default().certify_circulant_k_sign(g, k, strict)
}

pub fn hankel_k_positivity<S: Sequence + ?Sized>(
    g: &S,
    t: i64,
    m: usize,
    n: usize,
    k: usize,
    strict: bool,
) -> Result<CertificateReport> {
    Certifier::default().hankel_k_positivity(g, t, m, n, k, strict)
}

pub fn hankel_operator_k_positivity<S: Sequence + ?Sized>(
    g: &S,
    k: usize,
    n_max: usize,
    strict: bool,
) -> Result<CertificateReport> {
    Certifier::default().hankel_operator_k_positivity(g, k, n_max, strict)
}
