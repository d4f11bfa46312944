//! The block invariant: finitely supported functions from the spectral-point
//! group to Gamma = P/Q, the scaling action on them, orbit canonical forms,
//! and the resulting same-block decision for simple modules.
//!
//! Orbits are decided inside the computable point subgroup. A shift carrying
//! one finitely supported function to another, if it exists at all, is a
//! ratio of two support points and therefore already lies in the subgroup,
//! so nothing is lost for representable inputs.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::drinfeld::DrinfeldPoly;
use crate::error::Error;
use crate::exact_point::{format_rational, parse_rational, ExactPoint};
use crate::root_systems::{GammaElt, RootSystem, Weight};

/// A finitely supported function from the point subgroup to Gamma, stored
/// sparsely: only nonzero residues are kept, and addition prunes
/// cancellations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiFunction {
    factors: Vec<u64>,
    support: BTreeMap<ExactPoint, GammaElt>,
}

impl XiFunction {
    /// The zero function for a Gamma with the given invariant factors.
    pub fn zero(factors: Vec<u64>) -> Self {
        XiFunction {
            factors,
            support: BTreeMap::new(),
        }
    }

    /// Invariant factors of the ambient Gamma.
    pub fn gamma_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&ExactPoint, &GammaElt)> {
        self.support.iter()
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    fn insert_checked(&mut self, point: ExactPoint, value: GammaElt) {
        if !value.is_zero() {
            self.support.insert(point, value);
        }
    }

    /// Pointwise sum in Gamma; zero values are pruned.
    pub fn add(&self, other: &XiFunction) -> Result<XiFunction, Error> {
        if self.factors != other.factors {
            return Err(Error::MixedRootSystems);
        }
        let mut out = XiFunction::zero(self.factors.clone());
        let mut keys: Vec<&ExactPoint> = self.support.keys().collect();
        keys.extend(other.support.keys());
        keys.sort();
        keys.dedup();
        for key in keys {
            let mut residues = vec![0u64; self.factors.len()];
            for source in [self.support.get(key), other.support.get(key)] {
                if let Some(g) = source {
                    for ((r, x), &d) in residues.iter_mut().zip(g.residues()).zip(&self.factors) {
                        *r = (*r + x) % d;
                    }
                }
            }
            out.insert_checked(key.clone(), GammaElt::new(residues));
        }
        Ok(out)
    }

    /// The scaling action: the result at `z` is the old value at `a z`, so
    /// stored points map `b -> b / a`.
    pub fn scale(&self, a: &ExactPoint) -> XiFunction {
        XiFunction {
            factors: self.factors.clone(),
            support: self
                .support
                .iter()
                .map(|(b, g)| (b.div(a), g.clone()))
                .collect(),
        }
    }

    /// Total deterministic order used by canonicalization: the sorted
    /// support sequences compared lexicographically.
    fn order_key(&self) -> Vec<(&ExactPoint, &GammaElt)> {
        self.support.iter().collect()
    }

    /// Canonical representative of the scaling orbit: every support point is
    /// tried as the shift sending it to 1 and the least resulting function
    /// wins. Deterministic, and a fixed point of itself.
    pub fn canonical(&self) -> XiOrbitKey {
        if self.is_zero() {
            return XiOrbitKey {
                canonical: self.clone(),
                shift: ExactPoint::one(),
            };
        }
        let mut best: Option<(XiFunction, ExactPoint)> = None;
        for p in self.support.keys() {
            let candidate = self.scale(p);
            let better = match &best {
                None => true,
                Some((current, _)) => candidate.order_key() < current.order_key(),
            };
            if better {
                best = Some((candidate, p.clone()));
            }
        }
        let (canonical, shift) = best.unwrap();
        XiOrbitKey { canonical, shift }
    }

    /// The multiset of Gamma values, an orbit invariant.
    pub fn value_multiset(&self) -> Vec<GammaElt> {
        let mut v: Vec<GammaElt> = self.support.values().cloned().collect();
        v.sort();
        v
    }
}

impl fmt::Display for XiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, g)) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{:?}@{p}", g.residues())?;
        }
        Ok(())
    }
}

/// Canonical form of a scaling orbit together with the certificate shift
/// that produced it: `canonical = shift . original`. Two functions share a
/// key exactly when they lie in the same orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiOrbitKey {
    canonical: XiFunction,
    shift: ExactPoint,
}

impl XiOrbitKey {
    pub fn canonical(&self) -> &XiFunction {
        &self.canonical
    }

    /// The shift applied to reach the canonical form.
    pub fn shift(&self) -> &ExactPoint {
        &self.shift
    }
}

impl Serialize for XiOrbitKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // a key serializes as its canonical function
        self.canonical.serialize(s)
    }
}

/// The invariant of a Drinfeld polynomial: the value at a point is the sum
/// over nodes of multiplicity times the residue of the fundamental weight,
/// i.e. the monoid map sending each generator to the delta function at its
/// point with value the fundamental-weight residue.
pub fn chi_of_pi(rs: &RootSystem, pi: &DrinfeldPoly) -> XiFunction {
    assert_eq!(rs.simple_type(), pi.simple_type(), "root system mismatch");
    let gamma = rs.gamma();
    let factors: Vec<u64> = gamma.invariant_factors().to_vec();
    let mut by_point: BTreeMap<ExactPoint, GammaElt> = BTreeMap::new();
    for ((node, a), &m) in pi.support() {
        let bar = gamma.scale(
            &gamma.project(&Weight::fundamental(rs.rank(), *node)),
            m,
        );
        let entry = by_point
            .entry(a.clone())
            .or_insert_with(|| gamma.zero());
        *entry = gamma.add(entry, &bar);
    }
    let mut out = XiFunction::zero(factors);
    for (point, value) in by_point {
        out.insert_checked(point, value);
    }
    out
}

/// Result of the same-block decision. The parametrization of blocks by
/// orbit keys is a theorem only for simply-laced types; for the others the
/// identical computation is performed and flagged conjectural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecision {
    pub same_block: bool,
    pub conjectural: bool,
}

/// Decides whether the simple modules attached to two Drinfeld polynomials
/// lie in the same block: their invariants must lie in the same scaling
/// orbit.
pub fn same_block(
    rs: &RootSystem,
    pi1: &DrinfeldPoly,
    pi2: &DrinfeldPoly,
) -> Result<BlockDecision, Error> {
    if pi1.simple_type() != pi2.simple_type() || pi1.simple_type() != rs.simple_type() {
        return Err(Error::MixedRootSystems);
    }
    let k1 = chi_of_pi(rs, pi1).canonical();
    let k2 = chi_of_pi(rs, pi2).canonical();
    Ok(BlockDecision {
        same_block: k1.canonical() == k2.canonical(),
        conjectural: !rs.simply_laced(),
    })
}

// --- JSON wire format -------------------------------------------------------
//
// {"points": [{"magnitude": "p/q", "phase": "k/m", "gamma": [residues]}],
//  "gamma_factors": [d1, ...]}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XiFunctionJson {
    pub points: Vec<XiPointJson>,
    pub gamma_factors: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XiPointJson {
    pub magnitude: String,
    pub phase: String,
    pub gamma: Vec<u64>,
}

impl From<&XiFunction> for XiFunctionJson {
    fn from(chi: &XiFunction) -> Self {
        XiFunctionJson {
            points: chi
                .support
                .iter()
                .map(|(p, g)| XiPointJson {
                    magnitude: format_rational(p.magnitude()),
                    phase: format_rational(p.phase()),
                    gamma: g.residues().to_vec(),
                })
                .collect(),
            gamma_factors: chi.factors.clone(),
        }
    }
}

impl TryFrom<XiFunctionJson> for XiFunction {
    type Error = Error;

    fn try_from(raw: XiFunctionJson) -> Result<Self, Error> {
        if raw.gamma_factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidResidue);
        }
        let mut out = XiFunction::zero(raw.gamma_factors.clone());
        for entry in raw.points {
            if entry.gamma.len() != raw.gamma_factors.len()
                || entry
                    .gamma
                    .iter()
                    .zip(&raw.gamma_factors)
                    .any(|(&r, &d)| r >= d)
            {
                return Err(Error::InvalidResidue);
            }
            let magnitude = parse_rational(&entry.magnitude).map_err(|_| Error::InvalidPoint)?;
            let phase = parse_rational(&entry.phase).map_err(|_| Error::InvalidPoint)?;
            let point = ExactPoint::new(magnitude, phase)?;
            let value = GammaElt::new(entry.gamma);
            if out.support.contains_key(&point) {
                return Err(Error::InvalidPoint);
            }
            out.insert_checked(point, value);
        }
        Ok(out)
    }
}

impl Serialize for XiFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        XiFunctionJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for XiFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = XiFunctionJson::deserialize(d)?;
        XiFunction::try_from(raw).map_err(D::Error::custom)
    }
}
