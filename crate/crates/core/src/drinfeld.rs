//! The free commutative monoid of Drinfeld polynomials in the generator
//! basis: a polynomial tuple is stored as its finite multiset of
//! (node, spectral point) pairs, never as coefficient lists. Degrees,
//! periodicity, coprime factorization and the scaling action are all
//! multiset-natural; coefficients are a derived view computed in an exact
//! cyclotomic field.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[cfg(test)]
use num::rational::BigRational;
#[cfg(test)]
use num::BigInt;
use num::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::Error;
use crate::exact_point::{format_rational, parse_rational, ExactPoint};
use crate::root_systems::{gcd_u64, RootSystem, SimpleType, Weight};

/// An element of the monoid of Drinfeld polynomials: a finitely supported
/// multiplicity map over (node, spectral point) pairs. Empty support is the
/// unit. Node indices are 0-based in the API and 1-based in JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldPoly {
    simple_type: SimpleType,
    support: BTreeMap<(usize, ExactPoint), u64>,
}

impl DrinfeldPoly {
    /// The unit element (every component polynomial is 1).
    pub fn unit(simple_type: SimpleType) -> Self {
        DrinfeldPoly {
            simple_type,
            support: BTreeMap::new(),
        }
    }

    /// The generator with the linear factor at the given node and point.
    pub fn generator(
        simple_type: SimpleType,
        node: usize,
        point: ExactPoint,
    ) -> Result<Self, Error> {
        if node >= simple_type.rank() {
            return Err(Error::InvalidNode {
                node,
                rank: simple_type.rank(),
            });
        }
        let mut support = BTreeMap::new();
        support.insert((node, point), 1);
        Ok(DrinfeldPoly {
            simple_type,
            support,
        })
    }

    /// The product of generator powers prescribed by a dominant weight, all
    /// at one spectral point.
    pub fn from_weight_at_point(
        simple_type: SimpleType,
        lambda: &Weight,
        point: &ExactPoint,
    ) -> Result<Self, Error> {
        if lambda.rank() != simple_type.rank() {
            return Err(Error::WeightLength {
                expected: simple_type.rank(),
                got: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NonDominant(lambda.to_string()));
        }
        let mut support = BTreeMap::new();
        for (i, &c) in lambda.coords().iter().enumerate() {
            if c > 0 {
                support.insert((i, point.clone()), c as u64);
            }
        }
        Ok(DrinfeldPoly {
            simple_type,
            support,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    /// Support entries `((node, point), multiplicity)` in deterministic order.
    pub fn support(&self) -> impl Iterator<Item = (&(usize, ExactPoint), &u64)> {
        self.support.iter()
    }

    /// The distinct spectral points appearing at any node.
    pub fn support_points(&self) -> BTreeSet<ExactPoint> {
        self.support.keys().map(|(_, a)| a.clone()).collect()
    }

    /// Componentwise product: pointwise sum of multiplicity maps.
    pub fn mul(&self, other: &DrinfeldPoly) -> Result<DrinfeldPoly, Error> {
        if self.simple_type != other.simple_type {
            return Err(Error::MixedRootSystems);
        }
        let mut support = self.support.clone();
        for (key, &m) in &other.support {
            *support.entry(key.clone()).or_insert(0) += m;
        }
        Ok(DrinfeldPoly {
            simple_type: self.simple_type,
            support,
        })
    }

    /// The degree weight: coordinate `i` is the total multiplicity at node `i`.
    pub fn lambda(&self) -> Weight {
        let mut coords = vec![0i64; self.simple_type.rank()];
        for ((node, _), &m) in &self.support {
            coords[*node] += m as i64;
        }
        Weight::new(coords)
    }

    /// The highest weight of the graded dual: `-w0` applied to the degree
    /// weight. Only the weight is determined; the spectral data of the dual
    /// is not exposed.
    pub fn dual_lambda(&self, rs: &RootSystem) -> Weight {
        assert_eq!(rs.simple_type(), self.simple_type, "root system mismatch");
        rs.dual_weight(&self.lambda())
    }

    fn node_map(&self, node: usize) -> BTreeMap<&ExactPoint, u64> {
        self.support
            .iter()
            .filter(|((i, _), _)| *i == node)
            .map(|((_, a), &m)| (a, m))
            .collect()
    }

    fn node_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.simple_type.rank()];
        for ((node, _), &m) in &self.support {
            deg[*node] += m;
        }
        deg
    }

    /// The periodicity m: the largest r such that every component polynomial
    /// lies in C[u^r], equivalently such that every node's root multiset is
    /// invariant under rotation by a primitive r-th root of unity. Undefined
    /// for the unit.
    pub fn period(&self) -> Result<u64, Error> {
        if self.is_unit() {
            return Err(Error::PeriodOfUnit);
        }
        let g = self
            .node_degrees()
            .into_iter()
            .filter(|&d| d > 0)
            .fold(0u64, gcd_u64);
        let mut divisors: Vec<u64> = (1..=g).filter(|d| g % d == 0).collect();
        divisors.reverse();
        let node_maps: Vec<BTreeMap<&ExactPoint, u64>> = (0..self.simple_type.rank())
            .map(|i| self.node_map(i))
            .collect();
        'candidates: for r in divisors {
            let zeta = ExactPoint::root_of_unity(r);
            for map in &node_maps {
                for (a, &m) in map {
                    let rotated = a.mul(&zeta);
                    if map.get(&rotated) != Some(&m) {
                        continue 'candidates;
                    }
                }
            }
            return Ok(r);
        }
        unreachable!("r = 1 always satisfies the rotation condition");
    }

    /// The unique factorization into weight-at-a-point parts with pairwise
    /// distinct points, ordered by the spectral points.
    pub fn coprime_factors(&self) -> Vec<(Weight, ExactPoint)> {
        let rank = self.simple_type.rank();
        let mut by_point: BTreeMap<ExactPoint, Vec<i64>> = BTreeMap::new();
        for ((node, a), &m) in &self.support {
            by_point.entry(a.clone()).or_insert_with(|| vec![0; rank])[*node] += m as i64;
        }
        by_point
            .into_iter()
            .map(|(a, coords)| (Weight::new(coords), a))
            .collect()
    }

    /// The scaling action: support point `b` maps to `b/a`, multiplicities
    /// preserved.
    pub fn scale(&self, a: &ExactPoint) -> DrinfeldPoly {
        DrinfeldPoly {
            simple_type: self.simple_type,
            support: self
                .support
                .iter()
                .map(|((node, b), &m)| ((*node, b.div(a)), m))
                .collect(),
        }
    }

    /// Exact coefficients of the component polynomial at a node, in the
    /// cyclotomic field generated by the phases appearing there.
    pub fn coefficients(&self, node: usize) -> Result<PolyCoeffs, Error> {
        if node >= self.simple_type.rank() {
            return Err(Error::InvalidNode {
                node,
                rank: self.simple_type.rank(),
            });
        }
        let roots: Vec<(ExactPoint, u64)> = self
            .node_map(node)
            .into_iter()
            .map(|(a, m)| (a.clone(), m))
            .collect();
        let conductor = roots
            .iter()
            .map(|(a, _)| a.phase_denominator().to_u64().expect("phase overflow"))
            .fold(1u64, |acc, m| acc / gcd_u64(acc, m) * m);
        let mut plus = vec![CyclotomicNumber::one()];
        for (a, m) in &roots {
            let factor = vec![
                CyclotomicNumber::one(),
                CyclotomicNumber::from_point(a, conductor).neg(),
            ];
            for _ in 0..*m {
                plus = cyc_poly_mul(&plus, &factor);
            }
        }
        let deg = plus.len() - 1;
        // The leading coefficient is (-1)^deg times the product of the
        // roots, an invertible point of the subgroup; reversal plus this
        // normalization realizes the minus-series definition.
        let minus = if deg == 0 {
            vec![CyclotomicNumber::one()]
        } else {
            let mut prod = ExactPoint::one();
            for (a, m) in &roots {
                prod = prod.mul(&a.pow(*m as i64));
            }
            let mut lead_inv = CyclotomicNumber::from_point(&prod.inv(), conductor);
            if deg % 2 == 1 {
                lead_inv = lead_inv.neg();
            }
            let out: Vec<CyclotomicNumber> = (0..=deg)
                .map(|k| plus[deg - k].mul(&lead_inv))
                .collect();
            assert!(out[0].is_one(), "normalized reversal must start at 1");
            out
        };
        Ok(PolyCoeffs { node, plus, minus })
    }
}

impl fmt::Display for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (k, ((node, a), m)) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            write!(f, "w[{},{a}]", node + 1)?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

fn cyc_poly_mul(a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
    let mut out = vec![CyclotomicNumber::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// Exact coefficient lists of one component polynomial. Entry `k` of the
/// plus (minus) list carries graded degree `+k` (`-k`): these are the scalars
/// through which the degree-`+-k` generators of the commutative graded
/// algebra act on a highest-weight line, so the pair of lists is the graded
/// coefficient map attached to the polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffs {
    node: usize,
    plus: Vec<CyclotomicNumber>,
    minus: Vec<CyclotomicNumber>,
}

impl PolyCoeffs {
    pub fn node(&self) -> usize {
        self.node
    }

    /// Coefficients of the polynomial itself, constant term first.
    pub fn plus(&self) -> &[CyclotomicNumber] {
        &self.plus
    }

    /// Coefficients of the reversed polynomial normalized to constant term 1.
    pub fn minus(&self) -> &[CyclotomicNumber] {
        &self.minus
    }

    pub fn degree(&self) -> usize {
        self.plus.len() - 1
    }

    /// The graded map evaluated at signed degree `s`: the coefficient paired
    /// with grade `s`, zero beyond the polynomial degree.
    pub fn psi(&self, s: i64) -> (CyclotomicNumber, i64) {
        let k = s.unsigned_abs() as usize;
        let list = if s >= 0 { &self.plus } else { &self.minus };
        let coeff = list.get(k).cloned().unwrap_or_else(CyclotomicNumber::zero);
        (coeff, s)
    }
}

/// Coefficients from power sums by the Newton recursion: expanding
/// `exp(-sum_k p_k u^k / k)` with `p_k` the k-th power sum of the multiset
/// reproduces the signed elementary-symmetric coefficients, i.e. the direct
/// expansion of the product of linear factors.
pub fn newton_coefficients(points: &[ExactPoint]) -> Vec<CyclotomicNumber> {
    let conductor = points
        .iter()
        .map(|a| a.phase_denominator().to_u64().expect("phase overflow"))
        .fold(1u64, |acc, m| acc / gcd_u64(acc, m) * m);
    let n = points.len();
    let power_sums: Vec<CyclotomicNumber> = (1..=n as i64)
        .map(|k| {
            points.iter().fold(CyclotomicNumber::zero(), |acc, a| {
                acc.add(&CyclotomicNumber::from_point(&a.pow(k), conductor))
            })
        })
        .collect();
    let mut coeffs = vec![CyclotomicNumber::one()];
    for k in 1..=n {
        let mut acc = CyclotomicNumber::zero();
        for j in 1..=k {
            acc = acc.add(&power_sums[j - 1].mul(&coeffs[k - j]));
        }
        coeffs.push(acc.div_int(-(k as i64)));
    }
    coeffs
}

// --- JSON wire format -------------------------------------------------------
//
// {"type": "A", "rank": 2,
//  "support": [{"node": 1, "magnitude": "1", "phase": "0", "mult": 1}, ...]}
//
// Nodes are 1-based Bourbaki numbers on the wire; fractions are emitted in
// lowest terms without a "/1" suffix.

/// Serde-facing form of [`DrinfeldPoly`]; syntactic JSON errors surface from
/// serde, semantic validation happens in the `TryFrom` conversion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DrinfeldPolyJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub support: Vec<SupportEntryJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportEntryJson {
    pub node: usize,
    pub magnitude: String,
    pub phase: String,
    pub mult: u64,
}

impl From<&DrinfeldPoly> for DrinfeldPolyJson {
    fn from(pi: &DrinfeldPoly) -> Self {
        DrinfeldPolyJson {
            family: pi.simple_type.family().letter().to_string(),
            rank: pi.simple_type.rank(),
            support: pi
                .support
                .iter()
                .map(|((node, a), &m)| SupportEntryJson {
                    node: node + 1,
                    magnitude: format_rational(a.magnitude()),
                    phase: format_rational(a.phase()),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl TryFrom<DrinfeldPolyJson> for DrinfeldPoly {
    type Error = Error;

    fn try_from(raw: DrinfeldPolyJson) -> Result<Self, Error> {
        let mut chars = raw.family.chars();
        let (letter, rest) = (chars.next(), chars.next());
        let family = match (letter, rest) {
            (Some(c), None) => crate::root_systems::Family::from_letter(c)
                .map_err(|_| Error::InvalidRank { family: c, rank: raw.rank })?,
            _ => {
                return Err(Error::InvalidRank {
                    family: '?',
                    rank: raw.rank,
                })
            }
        };
        let st = SimpleType::new(family, raw.rank)?;
        let mut support: BTreeMap<(usize, ExactPoint), u64> = BTreeMap::new();
        for entry in raw.support {
            if entry.node == 0 || entry.node > st.rank() {
                return Err(Error::InvalidNode {
                    node: entry.node,
                    rank: st.rank(),
                });
            }
            if entry.mult == 0 {
                return Err(Error::InvalidMultiplicity);
            }
            let magnitude =
                parse_rational(&entry.magnitude).map_err(|_| Error::InvalidPoint)?;
            let phase = parse_rational(&entry.phase).map_err(|_| Error::InvalidPoint)?;
            let point = ExactPoint::new(magnitude, phase)?;
            *support.entry((entry.node - 1, point)).or_insert(0) += entry.mult;
        }
        Ok(DrinfeldPoly {
            simple_type: st,
            support,
        })
    }
}

impl Serialize for DrinfeldPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DrinfeldPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DrinfeldPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DrinfeldPolyJson::deserialize(d)?;
        DrinfeldPoly::try_from(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_systems::{build_root_system, Family};

    fn st(s: &str) -> SimpleType {
        let t: SimpleType = s.parse().unwrap();
        SimpleType::new(t.family(), t.rank()).unwrap()
    }

    fn pt(n: i64) -> ExactPoint {
        ExactPoint::from_integer(n).unwrap()
    }

    fn gen(t: &str, node: usize, a: i64) -> DrinfeldPoly {
        DrinfeldPoly::generator(st(t), node, pt(a)).unwrap()
    }

    fn q(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(BigRational::from(BigInt::from(n)))
    }

    #[test]
    fn generators_and_products() {
        let g = gen("A2", 0, 2);
        assert_eq!(g.support().count(), 1);
        let sq = g.mul(&g).unwrap();
        assert_eq!(sq.support().next().unwrap().1, &2);
        assert_ne!(gen("A2", 0, 2), gen("A2", 0, 3));
        assert_ne!(gen("A2", 0, 2), gen("A2", 1, 2));
        // unit law and commutativity
        let u = DrinfeldPoly::unit(st("A2"));
        assert_eq!(g.mul(&u).unwrap(), g);
        let h = gen("A2", 1, 3);
        assert_eq!(g.mul(&h).unwrap(), h.mul(&g).unwrap());
        assert_eq!(
            gen("A2", 0, 1).mul(&gen("A3", 0, 1)),
            Err(Error::MixedRootSystems)
        );
    }

    #[test]
    fn lambda_counts_degrees() {
        let u = DrinfeldPoly::unit(st("A2"));
        assert_eq!(u.lambda(), Weight::zero(2));
        let p = gen("A1", 0, 1).mul(&gen("A1", 0, -1)).unwrap();
        assert_eq!(p.lambda(), Weight::new(vec![2]));
        let p2 = gen("A2", 0, 2).mul(&gen("A2", 1, 3)).unwrap();
        assert_eq!(p2.lambda(), Weight::new(vec![1, 1]));
        // monoid homomorphism
        let a = gen("A2", 0, 5).mul(&gen("A2", 0, 5)).unwrap();
        let b = gen("A2", 1, 7);
        assert_eq!(
            a.mul(&b).unwrap().lambda(),
            a.lambda().add(&b.lambda())
        );
    }

    #[test]
    fn period_examples() {
        // 1 - u^2 has roots {1, -1}
        let p = gen("A1", 0, 1).mul(&gen("A1", 0, -1)).unwrap();
        assert_eq!(p.period().unwrap(), 2);
        assert_eq!(gen("A1", 0, 1).period().unwrap(), 1);
        assert_eq!(
            DrinfeldPoly::unit(st("A1")).period(),
            Err(Error::PeriodOfUnit)
        );
    }

    #[test]
    fn period_three_via_cube_roots() {
        let z3 = ExactPoint::root_of_unity(3);
        let a = pt(1);
        let pi = DrinfeldPoly::generator(st("A1"), 0, a.clone())
            .unwrap()
            .mul(&DrinfeldPoly::generator(st("A1"), 0, a.mul(&z3)).unwrap())
            .unwrap()
            .mul(&DrinfeldPoly::generator(st("A1"), 0, a.mul(&z3.pow(2))).unwrap())
            .unwrap();
        assert_eq!(pi.period().unwrap(), 3);
        // cyclotomic confirmation: the expansion is 1 - u^3
        let coeffs = pi.coefficients(0).unwrap();
        assert_eq!(coeffs.plus()[0], q(1));
        assert!(coeffs.plus()[1].is_zero());
        assert!(coeffs.plus()[2].is_zero());
        assert_eq!(coeffs.plus()[3], q(-1));
    }

    #[test]
    fn coprime_factorization_groups_by_point() {
        let u = DrinfeldPoly::unit(st("A2"));
        assert!(u.coprime_factors().is_empty());
        let p = gen("A2", 0, 2)
            .mul(&gen("A2", 1, 2))
            .unwrap()
            .mul(&gen("A2", 0, 3))
            .unwrap();
        let factors = p.coprime_factors();
        assert_eq!(
            factors,
            vec![
                (Weight::new(vec![1, 1]), pt(2)),
                (Weight::new(vec![1, 0]), pt(3)),
            ]
        );
        // round trip: multiplying the parts back gives pi
        let mut back = DrinfeldPoly::unit(st("A2"));
        for (lam, a) in &factors {
            back = back
                .mul(&DrinfeldPoly::from_weight_at_point(st("A2"), lam, a).unwrap())
                .unwrap();
        }
        assert_eq!(back, p);
    }

    #[test]
    fn scaling_is_a_group_action() {
        let p = gen("A1", 0, 2);
        assert_eq!(p.scale(&ExactPoint::one()), p);
        assert_eq!(p.scale(&pt(2)), gen("A1", 0, 1));
        let a = pt(3);
        let b = pt(-2);
        let pq = gen("A2", 0, 6).mul(&gen("A2", 1, 4)).unwrap();
        assert_eq!(
            pq.scale(&b).scale(&a),
            pq.scale(&a.mul(&b))
        );
        // periodicity is scale-invariant
        let per = gen("A1", 0, 1).mul(&gen("A1", 0, -1)).unwrap();
        assert_eq!(per.scale(&pt(7)).period().unwrap(), per.period().unwrap());
    }

    #[test]
    fn coefficient_examples() {
        // single root 2: plus (1, -2); minus = reversal normalized: (1, -1/2)
        let p = gen("A1", 0, 2);
        let c = p.coefficients(0).unwrap();
        assert_eq!(c.plus(), &[q(1), q(-2)]);
        assert_eq!(
            c.minus(),
            &[
                q(1),
                CyclotomicNumber::from_rational(BigRational::new(
                    BigInt::from(-1),
                    BigInt::from(2)
                ))
            ]
        );
        // empty node
        let e = p.coefficients(0).unwrap();
        assert_eq!(e.degree(), 1);
        let empty = DrinfeldPoly::unit(st("A2")).coefficients(1).unwrap();
        assert_eq!(empty.plus(), &[q(1)]);
        assert_eq!(empty.minus(), &[q(1)]);
        // roots {1, -1}: (1-u)(1+u) = 1 - u^2
        let pm = gen("A1", 0, 1).mul(&gen("A1", 0, -1)).unwrap();
        let cc = pm.coefficients(0).unwrap();
        assert_eq!(cc.plus(), &[q(1), q(0), q(-1)]);
        // psi grading: degree +-k entries
        assert_eq!(cc.psi(2), (q(-1), 2));
        assert_eq!(cc.psi(-2), (q(-1), -2));
        assert!(cc.psi(5).0.is_zero());
    }

    #[test]
    fn newton_identities_match_expansion() {
        assert_eq!(newton_coefficients(&[]), vec![q(1)]);
        assert_eq!(newton_coefficients(&[pt(3)]), vec![q(1), q(-3)]);
        // roots {1, -1}: p1 = 0, p2 = 2 -> (1, 0, -1)
        assert_eq!(
            newton_coefficients(&[pt(1), pt(-1)]),
            vec![q(1), q(0), q(-1)]
        );
    }

    #[test]
    fn minus_coefficients_are_newton_of_inverted_roots() {
        let p = gen("A1", 0, 2)
            .mul(&gen("A1", 0, 3))
            .unwrap()
            .mul(&gen("A1", 0, -5))
            .unwrap();
        let c = p.coefficients(0).unwrap();
        let inverted: Vec<ExactPoint> = [pt(2), pt(3), pt(-5)].iter().map(ExactPoint::inv).collect();
        assert_eq!(c.minus(), newton_coefficients(&inverted).as_slice());
    }

    #[test]
    fn dual_lambda_uses_the_involution() {
        let rs = build_root_system(st("A2"));
        assert_eq!(gen("A2", 0, 5).dual_lambda(&rs), Weight::fundamental(2, 1));
        let rs1 = build_root_system(st("A1"));
        let p = gen("A1", 0, 2).mul(&gen("A1", 0, 3)).unwrap();
        assert_eq!(p.dual_lambda(&rs1), p.lambda());
        assert_eq!(
            DrinfeldPoly::unit(st("A2")).dual_lambda(&rs),
            Weight::zero(2)
        );
    }

    #[test]
    fn json_round_trip_and_validation() {
        let z3 = ExactPoint::root_of_unity(3);
        let p = DrinfeldPoly::generator(st("D4"), 2, z3).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: DrinfeldPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(p, back);

        let bad_node: Result<DrinfeldPoly, _> = serde_json::from_str(
            r#"{"type":"A","rank":2,"support":[{"node":3,"magnitude":"1","phase":"0","mult":1}]}"#,
        );
        assert!(bad_node.is_err());
        let bad_mult: Result<DrinfeldPoly, _> = serde_json::from_str(
            r#"{"type":"A","rank":2,"support":[{"node":1,"magnitude":"1","phase":"0","mult":0}]}"#,
        );
        assert!(bad_mult.is_err());
        let bad_rank: Result<DrinfeldPoly, _> =
            serde_json::from_str(r#"{"type":"F","rank":3,"support":[]}"#);
        assert!(bad_rank.is_err());
    }

    #[test]
    fn from_weight_requires_dominance() {
        let lam = Weight::new(vec![1, -1]);
        assert!(matches!(
            DrinfeldPoly::from_weight_at_point(st("A2"), &lam, &pt(1)),
            Err(Error::NonDominant(_))
        ));
        let unit = DrinfeldPoly::from_weight_at_point(st("A2"), &Weight::zero(2), &pt(1)).unwrap();
        assert!(unit.is_unit());
        let _ = Family::A;
    }
}
