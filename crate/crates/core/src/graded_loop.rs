//! Character-level bookkeeping for the loop-space functor: counting and
//! labeling the simple graded summands attached to a Drinfeld polynomial,
//! deciding isomorphism of labels, reducing graded weights into the
//! fundamental strip, and graded weight multiplicities in the aperiodic case.
//!
//! For a polynomial with periodicity m the graded module splits into m
//! simple summands, labeled by a residue `0 <= s < m`. The one-dimensional
//! simples indexed by a bare grade (integer `r`) form a separate family and
//! are deliberately not folded into [`SimpleLabel`].
//!
//! Aggregate identity: for every nonzero polynomial, the sum over the m
//! summand labels of the dimension of the graded weight space at
//! (mu, grade n) equals the mu-weight multiplicity of the tensor product of
//! the irreducibles from the coprime factorization, independently of n. Only
//! the m = 1 case is exposed as a per-summand number; the per-summand split
//! for m > 1 would need the eigenspace decomposition of the underlying
//! module, which is out of reach of character data.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters;
use crate::drinfeld::{DrinfeldPoly, DrinfeldPolyJson};
use crate::error::Error;
use crate::root_systems::{RootSystem, Weight};

/// An element of the extended weight lattice: a finite weight plus an
/// integer grade (the coefficient of the null root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedWeight {
    #[serde(rename = "weight")]
    finite_part: Weight,
    grade: i64,
}

impl GradedWeight {
    pub fn new(finite_part: Weight, grade: i64) -> Self {
        GradedWeight { finite_part, grade }
    }

    pub fn finite_part(&self) -> &Weight {
        &self.finite_part
    }

    pub fn grade(&self) -> i64 {
        self.grade
    }
}

/// Label of a simple graded summand: a nonunit Drinfeld polynomial together
/// with a residue `0 <= s < m(pi)`. Construction normalizes the residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleLabel {
    pi: DrinfeldPoly,
    s: u64,
    period: u64,
}

impl SimpleLabel {
    pub fn new(pi: DrinfeldPoly, s: i64) -> Result<Self, Error> {
        if pi.is_unit() {
            return Err(Error::SummandsOfUnit);
        }
        let period = pi.period().expect("nonunit polynomial has a period");
        Ok(SimpleLabel {
            pi,
            s: s.rem_euclid(period as i64) as u64,
            period,
        })
    }

    pub fn pi(&self) -> &DrinfeldPoly {
        &self.pi
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn period(&self) -> u64 {
        self.period
    }
}

/// Number of simple summands of the graded module attached to `pi`: its
/// periodicity. The unit is rejected, its graded module being an infinite
/// sum of one-dimensional pieces.
pub fn summand_count(pi: &DrinfeldPoly) -> Result<u64, Error> {
    if pi.is_unit() {
        return Err(Error::SummandsOfUnit);
    }
    pi.period()
}

/// All labels `(pi, 0), ..., (pi, m-1)`.
pub fn summand_labels(pi: &DrinfeldPoly) -> Result<Vec<SimpleLabel>, Error> {
    let m = summand_count(pi)?;
    Ok((0..m)
        .map(|s| SimpleLabel::new(pi.clone(), s as i64).expect("pi is not the unit"))
        .collect())
}

/// The shift carrying one polynomial onto another under the scaling action,
/// if one exists. Candidates are ratios of support points.
fn scaling_shift(a: &DrinfeldPoly, b: &DrinfeldPoly) -> Option<crate::exact_point::ExactPoint> {
    if a.simple_type() != b.simple_type() {
        return None;
    }
    if a.is_unit() || b.is_unit() {
        return (a.is_unit() && b.is_unit()).then(crate::exact_point::ExactPoint::one);
    }
    if a.lambda() != b.lambda() {
        return None;
    }
    let p = a.support_points().into_iter().next().unwrap();
    for q in b.support_points() {
        let shift = p.div(&q);
        if &a.scale(&shift) == b {
            return Some(shift);
        }
    }
    None
}

/// Isomorphism of simple graded summands: the polynomials must lie in the
/// same scaling orbit and the residues must agree modulo the period.
pub fn simple_iso(l1: &SimpleLabel, l2: &SimpleLabel) -> bool {
    scaling_shift(&l1.pi, &l2.pi).is_some() && l1.s == l2.s
}

/// Isomorphism after restriction to the ungraded loop algebra: the residues
/// play no role, only the scaling orbit of the polynomial.
pub fn lg_restriction_iso(l1: &SimpleLabel, l2: &SimpleLabel) -> bool {
    scaling_shift(&l1.pi, &l2.pi).is_some()
}

/// The representative of a graded weight in the fundamental strip
/// `0 <= grade < r_lambda(finite part)` under the affine Weyl group.
pub fn reduce_graded_weight(rs: &RootSystem, gw: &GradedWeight) -> Result<GradedWeight, Error> {
    if !gw.finite_part.is_dominant() {
        return Err(Error::NonDominant(gw.finite_part.to_string()));
    }
    let r = rs.r_lambda(&gw.finite_part)? as i64;
    Ok(GradedWeight {
        finite_part: gw.finite_part.clone(),
        grade: gw.grade.rem_euclid(r),
    })
}

/// Dimension of the graded weight space at `(mu, n delta)` of the simple
/// graded module attached to an aperiodic polynomial (m = 1): the mu-weight
/// multiplicity of the tensor product of the coprime factors, independent of
/// the grade `n`. Periodic polynomials are rejected; see the aggregate
/// identity in the module docs for what remains determined there.
pub fn graded_multiplicity(
    rs: &RootSystem,
    pi: &DrinfeldPoly,
    mu: &Weight,
    _grade: i64,
) -> Result<u64, Error> {
    assert_eq!(rs.simple_type(), pi.simple_type(), "root system mismatch");
    let m = pi.period()?;
    if m > 1 {
        return Err(Error::PeriodGreaterThanOne { m });
    }
    let factors: Vec<Weight> = pi.coprime_factors().into_iter().map(|(w, _)| w).collect();
    let product = characters::tensor_product_character(rs, &factors)?;
    Ok(product.get(mu).copied().unwrap_or(0))
}

// --- JSON wire format -------------------------------------------------------
//
// SimpleLabel: {"pi": <DrinfeldPoly>, "s": int}
// GradedWeight: {"weight": [ints], "grade": int}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimpleLabelJson {
    pub pi: DrinfeldPolyJson,
    pub s: i64,
}

impl From<&SimpleLabel> for SimpleLabelJson {
    fn from(l: &SimpleLabel) -> Self {
        SimpleLabelJson {
            pi: DrinfeldPolyJson::from(&l.pi),
            s: l.s as i64,
        }
    }
}

impl TryFrom<SimpleLabelJson> for SimpleLabel {
    type Error = Error;

    fn try_from(raw: SimpleLabelJson) -> Result<Self, Error> {
        let pi = DrinfeldPoly::try_from(raw.pi)?;
        SimpleLabel::new(pi, raw.s)
    }
}

impl Serialize for SimpleLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SimpleLabelJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SimpleLabelJson::deserialize(d)?;
        SimpleLabel::try_from(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_point::ExactPoint;
    use crate::root_systems::{build_root_system, SimpleType};

    fn rs(s: &str) -> RootSystem {
        let t: SimpleType = s.parse().unwrap();
        build_root_system(SimpleType::new(t.family(), t.rank()).unwrap())
    }

    fn pt(n: i64) -> ExactPoint {
        ExactPoint::from_integer(n).unwrap()
    }

    fn gen(r: &RootSystem, node: usize, a: i64) -> DrinfeldPoly {
        DrinfeldPoly::generator(r.simple_type(), node, pt(a)).unwrap()
    }

    #[test]
    fn summand_counts() {
        let r = rs("A1");
        let p2 = gen(&r, 0, 1).mul(&gen(&r, 0, -1)).unwrap();
        assert_eq!(summand_count(&p2).unwrap(), 2);
        assert_eq!(summand_count(&gen(&r, 0, 2)).unwrap(), 1);
        assert_eq!(
            summand_count(&DrinfeldPoly::unit(r.simple_type())),
            Err(Error::SummandsOfUnit)
        );
        // invariant under scaling
        assert_eq!(
            summand_count(&p2.scale(&pt(3))).unwrap(),
            summand_count(&p2).unwrap()
        );
        assert_eq!(summand_labels(&p2).unwrap().len(), 2);
    }

    #[test]
    fn residues_normalize_modulo_period() {
        let r = rs("A1");
        let p2 = gen(&r, 0, 1).mul(&gen(&r, 0, -1)).unwrap();
        let l0 = SimpleLabel::new(p2.clone(), 0).unwrap();
        let l2 = SimpleLabel::new(p2.clone(), 2).unwrap();
        let lm = SimpleLabel::new(p2.clone(), -2).unwrap();
        assert_eq!(l0, l2);
        assert_eq!(l0, lm);
        assert_eq!(l0.period(), 2);
    }

    #[test]
    fn simple_iso_respects_scaling_and_residue() {
        let r = rs("A1");
        let p2 = gen(&r, 0, 1).mul(&gen(&r, 0, -1)).unwrap();
        let l0 = SimpleLabel::new(p2.clone(), 0).unwrap();
        let l1 = SimpleLabel::new(p2.clone(), 1).unwrap();
        assert!(simple_iso(&l0, &l0));
        assert!(!simple_iso(&l0, &l1));
        let scaled = SimpleLabel::new(p2.scale(&pt(5)), 0).unwrap();
        assert!(simple_iso(&l0, &scaled));
        // different degree weights can never be isomorphic
        let other = SimpleLabel::new(p2.mul(&p2).unwrap(), 0).unwrap();
        assert!(!simple_iso(&l0, &other));
    }

    #[test]
    fn restriction_forgets_the_residue() {
        let r = rs("A1");
        let p2 = gen(&r, 0, 1).mul(&gen(&r, 0, -1)).unwrap();
        let l0 = SimpleLabel::new(p2.clone(), 0).unwrap();
        let l1 = SimpleLabel::new(p2.clone(), 1).unwrap();
        assert!(lg_restriction_iso(&l0, &l1));
        assert!(!simple_iso(&l0, &l1));
        let other = SimpleLabel::new(p2.mul(&p2).unwrap(), 0).unwrap();
        assert!(!lg_restriction_iso(&l0, &other));
        let scaled = SimpleLabel::new(p2.scale(&pt(7)), 1).unwrap();
        assert!(lg_restriction_iso(&l0, &scaled));
        // iso implies restriction iso on samples
        assert!(simple_iso(&l0, &SimpleLabel::new(p2.scale(&pt(2)), 0).unwrap()));
        assert!(lg_restriction_iso(&l0, &SimpleLabel::new(p2.scale(&pt(2)), 0).unwrap()));
    }

    #[test]
    fn graded_weight_reduction() {
        let a1 = rs("A1");
        for m in 1..=4i64 {
            for s in -7..=7i64 {
                let gw = GradedWeight::new(Weight::new(vec![m]), s);
                let red = reduce_graded_weight(&a1, &gw).unwrap();
                assert_eq!(red.grade(), s.rem_euclid(m));
                assert_eq!(reduce_graded_weight(&a1, &red).unwrap(), red);
            }
        }
        let a2 = rs("A2");
        let gw = GradedWeight::new(Weight::fundamental(2, 0), 7);
        assert_eq!(reduce_graded_weight(&a2, &gw).unwrap().grade(), 0);
        let zero = GradedWeight::new(Weight::zero(2), 3);
        assert_eq!(reduce_graded_weight(&a2, &zero), Err(Error::ZeroWeight));
        let neg = GradedWeight::new(Weight::new(vec![-1, 0]), 3);
        assert!(matches!(
            reduce_graded_weight(&a2, &neg),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn graded_multiplicities_in_the_aperiodic_case() {
        let a1 = rs("A1");
        let p = gen(&a1, 0, 1);
        for n in [-3, 0, 5] {
            assert_eq!(
                graded_multiplicity(&a1, &p, &Weight::new(vec![1]), n).unwrap(),
                1
            );
        }
        // highest weight line of a product
        let p2 = gen(&a1, 0, 1).mul(&gen(&a1, 0, 2)).unwrap();
        assert_eq!(
            graded_multiplicity(&a1, &p2, &p2.lambda(), 0).unwrap(),
            1
        );
        // weight 0 of the 4-dimensional square: weights 2, 0, 0, -2
        assert_eq!(
            graded_multiplicity(&a1, &p2, &Weight::zero(1), 0).unwrap(),
            2
        );
        // the periodic case is rejected
        let per = gen(&a1, 0, 1).mul(&gen(&a1, 0, -1)).unwrap();
        assert_eq!(
            graded_multiplicity(&a1, &per, &Weight::zero(1), 0),
            Err(Error::PeriodGreaterThanOne { m: 2 })
        );
    }

    #[test]
    fn label_json_round_trip() {
        let r = rs("A1");
        let p2 = gen(&r, 0, 1).mul(&gen(&r, 0, -1)).unwrap();
        let l1 = SimpleLabel::new(p2, 1).unwrap();
        let text = serde_json::to_string(&l1).unwrap();
        let back: SimpleLabel = serde_json::from_str(&text).unwrap();
        assert_eq!(l1, back);
        let gw = GradedWeight::new(Weight::new(vec![2]), -3);
        let text = serde_json::to_string(&gw).unwrap();
        assert_eq!(text, r#"{"weight":[2],"grade":-3}"#);
        let back: GradedWeight = serde_json::from_str(&text).unwrap();
        assert_eq!(gw, back);
    }
}
