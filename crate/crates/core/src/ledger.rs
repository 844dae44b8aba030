//! Interval bookkeeping for the concordance invariants τ and s.
//!
//! τ and s cannot be computed from a Seifert matrix. They enter as cited
//! axioms ([`AxiomStore`]), are added under connected sum, are widened by
//! band moves (τ by ±1, s by ±2) and are then clamped by the parity and genus
//! constraints on s (`s` even, `|s| ≤ 2g`). Two certificates sit on top:
//! [`tau_neq_s_half`] and [`summand_rank3_certificate`].
//!
//! δ is never given a value. Records carry an opaque [`DeltaTag`] and only
//! equality of tags is ever consulted.
//!
//! Every fact is conservative: an `Uncertified` or `Unknown` result makes no
//! claim in either direction.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::invariants::is_alexander_one;
use crate::seifert::{direct_sum, double_seifert, is_band_move, BandMoveClaim, SeifertError, SeifertMatrix};

/// Citation for the τ = 0, s = 2 doubles.
pub const CITE_HEDDEN_ORDING: &str = "[ho]";
/// Citation for the band-move bounds.
pub const CITE_BAND_MOVE: &str = "[ln]";
/// Citation for τ = s/2 = 1 on the untwisted doubles.
pub const CITE_UNTWISTED: &str = "[liv2]";
/// Citation for the distinctness of δ.
pub const CITE_DELTA: &str = "[mo]";
/// Citation for the trivial-polynomial sliceness rule.
pub const CITE_FREEDMAN: &str = "[fr]";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("no axiom recorded for {0:?}")]
    UnknownAxiom(String),
    #[error("record {0:?} has no Seifert matrix")]
    MissingMatrix(String),
    #[error("matrices are not related by reattaching band {0}")]
    NotABandMove(usize),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: i64, hi: i64 },
    #[error("even-only interval [{lo}, {hi}] has an odd endpoint")]
    OddEndpoint { lo: i64, hi: i64 },
    #[error("interval became empty after clamping")]
    EmptyInterval,
    #[error("s must be tracked as an even-only interval")]
    SNotEven,
    #[error("interval arithmetic overflowed")]
    Overflow,
    #[error("axiom {name:?} is invalid: {reason}")]
    InvalidAxiom { name: String, reason: String },
}

/// Closed integer interval `[lo, hi]`, optionally restricted to even values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundedValue {
    lo: i64,
    hi: i64,
    even_only: bool,
}

impl BoundedValue {
    pub fn new(lo: i64, hi: i64, even_only: bool) -> Result<Self, LedgerError> {
        if lo > hi {
            return Err(LedgerError::InvalidInterval { lo, hi });
        }
        if even_only && (lo % 2 != 0 || hi % 2 != 0) {
            return Err(LedgerError::OddEndpoint { lo, hi });
        }
        Ok(Self { lo, hi, even_only })
    }

    pub fn exact(v: i64) -> Self {
        Self { lo: v, hi: v, even_only: false }
    }

    pub fn exact_even(v: i64) -> Result<Self, LedgerError> {
        Self::new(v, v, true)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn even_only(&self) -> bool {
        self.even_only
    }

    /// The value, if the interval is a single point.
    pub fn exact_value(&self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi && (!self.even_only || v % 2 == 0)
    }

    /// True when every admissible value of `self` is admissible in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi && (!other.even_only || self.even_only)
    }

    /// The admissible values, in order.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        let step = if self.even_only { 2 } else { 1 };
        (self.lo..=self.hi).step_by(step)
    }

    /// Minkowski sum. The result is even-only when both summands are.
    pub fn checked_add(&self, other: &Self) -> Result<Self, LedgerError> {
        let lo = self.lo.checked_add(other.lo).ok_or(LedgerError::Overflow)?;
        let hi = self.hi.checked_add(other.hi).ok_or(LedgerError::Overflow)?;
        Ok(Self { lo, hi, even_only: self.even_only && other.even_only })
    }

    /// `[lo - by, hi + by]`. Parity is kept only for even `by`.
    pub fn widen(&self, by: u32) -> Result<Self, LedgerError> {
        let by = i64::from(by);
        let lo = self.lo.checked_sub(by).ok_or(LedgerError::Overflow)?;
        let hi = self.hi.checked_add(by).ok_or(LedgerError::Overflow)?;
        Ok(Self { lo, hi, even_only: self.even_only && by % 2 == 0 })
    }

    /// Intersection with the even integers.
    pub fn clamp_even(&self) -> Result<Self, LedgerError> {
        let lo = if self.lo % 2 == 0 { self.lo } else { self.lo + 1 };
        let hi = if self.hi % 2 == 0 { self.hi } else { self.hi - 1 };
        if lo > hi {
            return Err(LedgerError::EmptyInterval);
        }
        Ok(Self { lo, hi, even_only: true })
    }

    /// Intersection with `[-bound, bound]`, rounding inward to keep parity.
    pub fn clamp_abs(&self, bound: i64) -> Result<Self, LedgerError> {
        let mut lo = self.lo.max(-bound);
        let mut hi = self.hi.min(bound);
        if self.even_only {
            lo += lo.rem_euclid(2);
            hi -= hi.rem_euclid(2);
        }
        if lo > hi {
            return Err(LedgerError::EmptyInterval);
        }
        Ok(Self { lo, hi, even_only: self.even_only })
    }
}

impl fmt::Display for BoundedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)?;
        if self.even_only {
            f.write_str(" even")?;
        }
        Ok(())
    }
}

/// Opaque label standing for a δ value. Only equality is meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaTag(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub matrix: Option<SeifertMatrix>,
    tau: BoundedValue,
    s: BoundedValue,
    pub delta: Option<DeltaTag>,
    pub provenance: Vec<String>,
}

impl KnotRecord {
    /// Fails unless `s` is even-only.
    pub fn new(
        name: impl Into<String>,
        matrix: Option<SeifertMatrix>,
        tau: BoundedValue,
        s: BoundedValue,
    ) -> Result<Self, LedgerError> {
        if !s.even_only() {
            return Err(LedgerError::SNotEven);
        }
        Ok(Self { name: name.into(), matrix, tau, s, delta: None, provenance: Vec::new() })
    }

    pub fn unknot() -> Self {
        Self {
            name: "unknot".to_string(),
            matrix: Some(SeifertMatrix::empty()),
            tau: BoundedValue::exact(0),
            s: BoundedValue { lo: 0, hi: 0, even_only: true },
            delta: None,
            provenance: Vec::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_delta(mut self, tag: DeltaTag) -> Self {
        self.delta = Some(tag);
        self
    }

    pub fn tau(&self) -> &BoundedValue {
        &self.tau
    }

    pub fn s(&self) -> &BoundedValue {
        &self.s
    }
}

/// A cited fact: the exact τ and s of a twisted double.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub name: String,
    pub framing: i64,
    pub tau: i64,
    pub s: i64,
    pub delta: Option<DeltaTag>,
    pub citations: Vec<String>,
}

/// Read-only table of cited values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomStore {
    entries: Vec<Axiom>,
}

/// Canonical name of the positive `framing`-twisted double of `T_{p,q}`.
pub fn double_name(p: u32, q: u32, framing: i64) -> String {
    format!("D+(T_{{{p},{q}}},{framing})")
}

/// Folds spelling variants (`D₊`, spaces) onto the canonical form.
fn canonical_key(name: &str) -> String {
    name.replace('₊', "+").chars().filter(|c| !c.is_whitespace()).collect()
}

impl AxiomStore {
    pub fn new(entries: Vec<Axiom>) -> Result<Self, LedgerError> {
        for a in &entries {
            let invalid =
                |reason: &str| LedgerError::InvalidAxiom { name: a.name.clone(), reason: reason.to_string() };
            if a.citations.is_empty() || a.citations.iter().any(|c| c.trim().is_empty()) {
                return Err(invalid("every axiom needs a citation"));
            }
            if a.s % 2 != 0 {
                return Err(invalid("s must be even"));
            }
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The four doubles used by the worked example.
    pub fn standard() -> Self {
        let tag = |name: &str| Some(DeltaTag(format!("delta({name})")));
        let ho = |p, q, f| Axiom {
            name: double_name(p, q, f),
            framing: f,
            tau: 0,
            s: 2,
            delta: None,
            citations: vec![CITE_HEDDEN_ORDING.to_string()],
        };
        let untwisted = |p, q| {
            let name = double_name(p, q, 0);
            Axiom {
                delta: tag(&name),
                name,
                framing: 0,
                tau: 1,
                s: 2,
                citations: vec![CITE_UNTWISTED.to_string(), CITE_DELTA.to_string()],
            }
        };
        Self::new(vec![ho(2, 3, 2), ho(2, 5, 4), untwisted(2, 3), untwisted(2, 5)])
            .expect("built-in axioms are well formed")
    }

    pub fn entries(&self) -> &[Axiom] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Axiom> {
        let key = canonical_key(name);
        self.entries.iter().find(|a| canonical_key(&a.name) == key)
    }

    /// Record for a tabulated double, carrying its Seifert matrix.
    pub fn known_double(&self, name: &str) -> Result<KnotRecord, LedgerError> {
        let a = self.get(name).ok_or_else(|| LedgerError::UnknownAxiom(name.to_string()))?;
        Ok(KnotRecord {
            name: a.name.clone(),
            matrix: Some(double_seifert(a.framing)),
            tau: BoundedValue::exact(a.tau),
            s: BoundedValue::exact_even(a.s)?,
            delta: a.delta.clone(),
            provenance: a.citations.clone(),
        })
    }
}

/// Connected sum: τ and s add, matrices block-sum. δ tags are dropped since
/// opaque tags cannot be added.
pub fn connect_sum(a: &KnotRecord, b: &KnotRecord) -> Result<KnotRecord, LedgerError> {
    let matrix = match (&a.matrix, &b.matrix) {
        (Some(x), Some(y)) => Some(direct_sum(x, y)),
        _ => None,
    };
    let mut provenance = a.provenance.clone();
    provenance.extend(b.provenance.iter().cloned());
    Ok(KnotRecord {
        name: format!("{} # {}", a.name, b.name),
        matrix,
        tau: a.tau.checked_add(&b.tau)?,
        s: a.s.checked_add(&b.s)?,
        delta: None,
        provenance,
    })
}

/// Replaces the record's matrix by `after`, obtained by reattaching band
/// `band_index`, and widens the invariants accordingly: τ by ±1, s by ±2
/// followed by the parity and `|s| ≤ 2g` clamps. τ is not clamped.
pub fn band_move_update(
    r: &KnotRecord,
    after: &SeifertMatrix,
    band_index: usize,
) -> Result<KnotRecord, LedgerError> {
    let before = r.matrix.as_ref().ok_or_else(|| LedgerError::MissingMatrix(r.name.clone()))?;
    let claim = BandMoveClaim::new(before.clone(), after.clone(), band_index);
    if !is_band_move(&claim)? {
        return Err(LedgerError::NotABandMove(band_index));
    }
    let two_g = i64::try_from(after.genus()).map_err(|_| LedgerError::Overflow)? * 2;
    let tau = r.tau.widen(1)?;
    let s = r.s.widen(2)?.clamp_even()?.clamp_abs(two_g)?;
    let mut provenance = r.provenance.clone();
    provenance.push(CITE_BAND_MOVE.to_string());
    Ok(KnotRecord {
        name: format!("{} (band {band_index} reattached)", r.name),
        matrix: Some(after.clone()),
        tau,
        s,
        delta: None,
        provenance,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Certified,
    /// No claim either way.
    Uncertified,
}

impl Certificate {
    pub fn is_certified(self) -> bool {
        self == Certificate::Certified
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Certificate::Certified
        } else {
            Certificate::Uncertified
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::Certified => "certified",
            Certificate::Uncertified => "uncertified",
        })
    }
}

/// Certifies `τ ≠ s/2` when the intervals `2τ` and `s` are disjoint.
pub fn tau_neq_s_half(r: &KnotRecord) -> Certificate {
    // 2·i64 can overflow only for absurd inputs; widen to i128.
    let two_tau_lo = 2 * i128::from(r.tau.lo);
    let two_tau_hi = 2 * i128::from(r.tau.hi);
    Certificate::from_bool(two_tau_hi < i128::from(r.s.lo) || two_tau_lo > i128::from(r.s.hi))
}

/// Certifies that τ, s/2 and δ evaluated on `a`, `b`, `c` form a rank-3
/// matrix.
///
/// Requires `a` and `b` to have the same exact, nonzero τ = s/2, distinct δ
/// tags, and `c` to carry a certified `τ ≠ s/2`. The value matrix then has
/// determinant `τ_a·(δ_a − δ_b)·(s_c/2 − τ_c)`, which is nonzero.
pub fn summand_rank3_certificate(a: &KnotRecord, b: &KnotRecord, c: &KnotRecord) -> Certificate {
    let balanced = |r: &KnotRecord| match (r.tau.exact_value(), r.s.exact_value()) {
        (Some(t), Some(s)) if i128::from(s) == 2 * i128::from(t) => Some(t),
        _ => None,
    };
    let same_nonzero = matches!((balanced(a), balanced(b)), (Some(x), Some(y)) if x == y && x != 0);
    let distinct_delta = matches!((&a.delta, &b.delta), (Some(x), Some(y)) if x != y);
    Certificate::from_bool(same_nonzero && distinct_delta && tau_neq_s_half(c).is_certified())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sliceness {
    TopologicallySlice,
    /// Absence of a certificate; never means "not slice".
    Unknown,
}

impl fmt::Display for Sliceness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sliceness::TopologicallySlice => "true",
            Sliceness::Unknown => "unknown",
        })
    }
}

/// Trivial Alexander polynomial implies topologically slice.
pub fn topologically_slice(r: &KnotRecord) -> Sliceness {
    match &r.matrix {
        Some(v) if is_alexander_one(v) => Sliceness::TopologicallySlice,
        _ => Sliceness::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn bv(lo: i64, hi: i64, even: bool) -> BoundedValue {
        BoundedValue::new(lo, hi, even).unwrap()
    }

    fn k_record(store: &AxiomStore) -> KnotRecord {
        let d23 = store.known_double(&double_name(2, 3, 2)).unwrap();
        let d25 = store.known_double(&double_name(2, 5, 4)).unwrap();
        connect_sum(&connect_sum(&d23, &d23).unwrap(), &d25).unwrap()
    }

    fn j_record() -> KnotRecord {
        band_move_update(&k_record(&AxiomStore::standard()), &catalog::v2(), 1).unwrap()
    }

    fn with_intervals(tau: BoundedValue, s: BoundedValue) -> KnotRecord {
        KnotRecord::new("x", None, tau, s).unwrap()
    }

    #[test]
    fn bounded_value_invariants() {
        assert_eq!(BoundedValue::new(2, 1, false), Err(LedgerError::InvalidInterval { lo: 2, hi: 1 }));
        assert_eq!(BoundedValue::new(1, 4, true), Err(LedgerError::OddEndpoint { lo: 1, hi: 4 }));
        assert_eq!(bv(-3, 5, false).clamp_even().unwrap(), bv(-2, 4, true));
        assert_eq!(bv(1, 1, false).clamp_even(), Err(LedgerError::EmptyInterval));
        assert_eq!(bv(4, 8, true).clamp_abs(6).unwrap(), bv(4, 6, true));
        assert_eq!(bv(-8, 8, true).clamp_abs(5).unwrap(), bv(-4, 4, true));
        assert_eq!(bv(8, 10, true).clamp_abs(6), Err(LedgerError::EmptyInterval));
        assert_eq!(bv(4, 6, true).values().collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(bv(-1, 1, false).values().collect::<Vec<_>>(), vec![-1, 0, 1]);
        assert_eq!(bv(0, 0, false).widen(1).unwrap(), bv(-1, 1, false));
        assert!(!bv(0, 0, true).widen(1).unwrap().even_only());
        assert_eq!(BoundedValue::exact(i64::MAX).widen(1), Err(LedgerError::Overflow));
    }

    #[test]
    fn known_doubles() {
        let store = AxiomStore::standard();
        let r = store.known_double("D+(T_{2,3},2)").unwrap();
        assert_eq!((*r.tau(), *r.s()), (bv(0, 0, false), bv(2, 2, true)));
        assert_eq!(r.matrix, Some(double_seifert(2)));
        assert_eq!(r.provenance, vec!["[ho]".to_string()]);
        let r = store.known_double("D₊(T_{2,3}, 0)").unwrap();
        assert_eq!((*r.tau(), *r.s()), (bv(1, 1, false), bv(2, 2, true)));
        assert!(r.delta.is_some());
        let r25 = store.known_double(&double_name(2, 5, 0)).unwrap();
        assert_ne!(r.delta, r25.delta);
        assert_eq!(
            store.known_double("D+(T_{3,4},1)"),
            Err(LedgerError::UnknownAxiom("D+(T_{3,4},1)".to_string()))
        );
        assert!(matches!(
            AxiomStore::empty().known_double(&double_name(2, 3, 2)),
            Err(LedgerError::UnknownAxiom(_))
        ));
    }

    #[test]
    fn axiom_store_rejects_uncited_or_odd() {
        let mut a = AxiomStore::standard().entries()[0].clone();
        a.citations.clear();
        assert!(matches!(AxiomStore::new(vec![a.clone()]), Err(LedgerError::InvalidAxiom { .. })));
        a.citations = vec!["[ho]".to_string()];
        a.s = 3;
        assert!(matches!(AxiomStore::new(vec![a]), Err(LedgerError::InvalidAxiom { .. })));
    }

    #[test]
    fn connected_sum_of_three_doubles() {
        let k = k_record(&AxiomStore::standard());
        assert_eq!((*k.tau(), *k.s()), (bv(0, 0, false), bv(6, 6, true)));
        assert_eq!(k.matrix.as_ref().unwrap().matrix(), &catalog::v1_matrix());
        assert_eq!(k.provenance, vec!["[ho]"; 3]);
    }

    #[test]
    fn connected_sum_with_unknot_and_intervals() {
        let a = AxiomStore::standard().known_double("D+(T_{2,5},4)").unwrap();
        let u = connect_sum(&a, &KnotRecord::unknot()).unwrap();
        assert_eq!((u.tau(), u.s(), &u.matrix), (a.tau(), a.s(), &a.matrix));
        let x = with_intervals(bv(-1, 1, false), bv(-2, 2, true));
        let y = connect_sum(&x, &x).unwrap();
        assert_eq!(*y.tau(), bv(-2, 2, false));
        assert_eq!(*y.s(), bv(-4, 4, true));
        assert_eq!(y.matrix, None);
    }

    #[test]
    fn band_move_on_k_gives_j_bounds() {
        let j = j_record();
        assert_eq!(*j.tau(), bv(-1, 1, false));
        assert_eq!(*j.s(), bv(4, 6, true));
        assert_eq!(j.tau().values().collect::<Vec<_>>(), vec![-1, 0, 1]);
        assert_eq!(j.s().values().collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(j.matrix, Some(catalog::v2()));
        assert_eq!(j.provenance.last().map(String::as_str), Some("[ln]"));
    }

    #[test]
    fn band_move_widening_of_exact_zero() {
        let r =
            KnotRecord::new("z", Some(double_seifert(0)), BoundedValue::exact(0), bv(0, 0, true)).unwrap();
        let out = band_move_update(&r, &double_seifert(0), 1).unwrap();
        assert_eq!((*out.tau(), *out.s()), (bv(-1, 1, false), bv(-2, 2, true)));
    }

    #[test]
    fn band_move_errors() {
        let k = k_record(&AxiomStore::standard());
        assert_eq!(band_move_update(&k, &catalog::tampered(), 1), Err(LedgerError::NotABandMove(1)));
        let bare = with_intervals(bv(0, 0, false), bv(0, 0, true));
        assert_eq!(
            band_move_update(&bare, &catalog::v2(), 1),
            Err(LedgerError::MissingMatrix("x".to_string()))
        );
        assert!(matches!(
            band_move_update(&k, &catalog::v2(), 9),
            Err(LedgerError::Seifert(SeifertError::IndexOutOfRange { .. }))
        ));
    }

    #[test]
    fn distinctness_certificate() {
        assert_eq!(tau_neq_s_half(&j_record()), Certificate::Certified);
        let d = AxiomStore::standard().known_double("D+(T_{2,3},0)").unwrap();
        assert_eq!(tau_neq_s_half(&d), Certificate::Uncertified);
        let wide = with_intervals(bv(-3, 3, false), bv(-6, 6, true));
        assert_eq!(tau_neq_s_half(&wide), Certificate::Uncertified);
        // 2τ above s
        let above = with_intervals(bv(3, 4, false), bv(2, 4, true));
        assert_eq!(tau_neq_s_half(&above), Certificate::Certified);
    }

    #[test]
    fn summand_certificate() {
        let store = AxiomStore::standard();
        let a = store.known_double("D+(T_{2,3},0)").unwrap();
        let b = store.known_double("D+(T_{2,5},0)").unwrap();
        let j = j_record();
        assert_eq!(summand_rank3_certificate(&a, &b, &j), Certificate::Certified);

        let b_same = b.clone().with_delta(a.delta.clone().unwrap());
        assert_eq!(summand_rank3_certificate(&a, &b_same, &j), Certificate::Uncertified);

        let c = store.known_double("D+(T_{2,3},2)").unwrap();
        assert_eq!(summand_rank3_certificate(&a, &b, &c), Certificate::Certified);

        // c with 2τ = s
        assert_eq!(summand_rank3_certificate(&a, &b, &a), Certificate::Uncertified);

        // τ = s/2 = 0 on both a and b makes the first two rows dependent
        let zero = |name: &str| {
            KnotRecord::new(name, None, BoundedValue::exact(0), bv(0, 0, true))
                .unwrap()
                .with_delta(DeltaTag(name.to_string()))
        };
        assert_eq!(summand_rank3_certificate(&zero("p"), &zero("q"), &j), Certificate::Uncertified);

        // missing δ
        let mut a_no_delta = a.clone();
        a_no_delta.delta = None;
        assert_eq!(summand_rank3_certificate(&a_no_delta, &b, &j), Certificate::Uncertified);
    }

    #[test]
    fn topological_sliceness() {
        assert_eq!(topologically_slice(&j_record()), Sliceness::TopologicallySlice);
        assert_eq!(topologically_slice(&KnotRecord::unknot()), Sliceness::TopologicallySlice);
        assert_eq!(topologically_slice(&k_record(&AxiomStore::standard())), Sliceness::Unknown);
        let bare = with_intervals(bv(0, 0, false), bv(0, 0, true));
        assert_eq!(topologically_slice(&bare), Sliceness::Unknown);
    }

    #[test]
    fn s_must_be_even_only() {
        assert_eq!(KnotRecord::new("x", None, bv(0, 0, false), bv(0, 0, false)), Err(LedgerError::SNotEven));
    }
}
