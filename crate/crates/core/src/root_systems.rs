//! Exact construction of finite root systems and the lattice data built on
//! them: positive roots by root-string closure, highest (short) roots, the
//! dominance order, the quotient Gamma = P/Q with its minimal dominant
//! representatives, the diagram involution realizing -w0, and the reduction
//! constant r_lambda attached to the orbit lattice of the highest coroot.
//!
//! Conventions. Node numbering is Bourbaki's, exposed 0-based: API index `i`
//! is Bourbaki node `i + 1` (JSON uses the 1-based numbers). The Cartan
//! matrix is stored as `cartan[i][j] = <alpha_i, alpha_j^vee>`, so the weight
//! coordinates of the simple root `alpha_j` are row `j` of the matrix.
//! Weights are integer vectors in the fundamental-weight basis, entry `i`
//! being the pairing with the simple coroot `alpha_i^vee`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::linalg;

/// Dynkin family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self, ParseError> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Family::A),
            'B' => Ok(Family::B),
            'C' => Ok(Family::C),
            'D' => Ok(Family::D),
            'E' => Ok(Family::E),
            'F' => Ok(Family::F),
            'G' => Ok(Family::G),
            other => Err(ParseError::new(format!("unknown family letter '{other}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie type: family letter plus rank, e.g. `A2`, `D4`, `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    /// Validates that the rank is admissible for the family.
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = ParseError;

    /// Parses `"A2"`, `"e6"`, ... Rank admissibility is *not* checked here;
    /// callers go through [`SimpleType::new`] for the domain check.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut chars = s.chars();
        let family = Family::from_letter(
            chars
                .next()
                .ok_or_else(|| ParseError::new("empty type string"))?,
        )?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| ParseError::new(format!("bad rank in type string '{s}'")))?;
        Ok(SimpleType { family, rank })
    }
}

/// Integer vector in the fundamental-weight basis; entry `i` is the pairing
/// with `alpha_i^vee`. Dominance is a predicate, not an invariant: arbitrary
/// integer vectors are weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight at node `i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Rational vector in the simple-root basis. Elements of the root lattice
/// have integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector {
    coords: Vec<BigRational>,
}

impl RootVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RootVector { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RootVector {
            coords: coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, when the vector lies in the root lattice.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().try_into().ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Outcome of a dominance comparison on the weight lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominanceRelation {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Element of Gamma = P/Q in canonical residue coordinates, one residue per
/// nontrivial invariant factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElt {
    residues: Vec<u64>,
}

impl GammaElt {
    pub fn new(residues: Vec<u64>) -> Self {
        GammaElt { residues }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

/// The finite abelian group Gamma = P/Q: invariant factors from the Smith
/// normal form of the Cartan matrix, a projection onto canonical residues,
/// and the table of minimal dominant representatives.
#[derive(Debug, Clone)]
pub struct GammaGroup {
    invariant_factors: Vec<u64>,
    /// Rows of the left Smith transform belonging to nontrivial factors;
    /// applied to weight coordinates they yield residue coordinates.
    projection: Vec<Vec<i64>>,
    minimal_reps: BTreeMap<GammaElt, Weight>,
}

impl GammaGroup {
    /// Nontrivial invariant factors `d_1 | d_2 | ...`, each > 1.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Projection matrix rows (one per nontrivial invariant factor).
    pub fn projection(&self) -> &[Vec<i64>] {
        &self.projection
    }

    pub fn zero(&self) -> GammaElt {
        GammaElt {
            residues: vec![0; self.invariant_factors.len()],
        }
    }

    /// Canonical residue of a weight modulo the root lattice.
    pub fn project(&self, w: &Weight) -> GammaElt {
        let residues = self
            .projection
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, &d)| {
                let dot: i64 = row.iter().zip(w.coords()).map(|(a, b)| a * b).sum();
                dot.rem_euclid(d as i64) as u64
            })
            .collect();
        GammaElt { residues }
    }

    pub fn add(&self, a: &GammaElt, b: &GammaElt) -> GammaElt {
        GammaElt {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.invariant_factors)
                .map(|((x, y), &d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn scale(&self, a: &GammaElt, k: u64) -> GammaElt {
        GammaElt {
            residues: a
                .residues
                .iter()
                .zip(&self.invariant_factors)
                .map(|(x, &d)| (x % d).wrapping_mul(k % d) % d)
                .collect(),
        }
    }

    /// All elements, in lexicographic residue order.
    pub fn elements(&self) -> Vec<GammaElt> {
        let mut out = vec![GammaElt {
            residues: Vec::new(),
        }];
        for &d in &self.invariant_factors {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for r in 0..d {
                    let mut residues = e.residues.clone();
                    residues.push(r);
                    next.push(GammaElt { residues });
                }
            }
            out = next;
        }
        out
    }

    fn validate(&self, gamma: &GammaElt) -> Result<(), Error> {
        if gamma.residues.len() != self.invariant_factors.len()
            || gamma
                .residues
                .iter()
                .zip(&self.invariant_factors)
                .any(|(&r, &d)| r >= d)
        {
            return Err(Error::InvalidResidue);
        }
        Ok(())
    }

    /// Table of minimal dominant representatives keyed by residue.
    pub fn minimal_reps(&self) -> &BTreeMap<GammaElt, Weight> {
        &self.minimal_reps
    }
}

/// Immutable root-system data for a simple type. Construction is exact and
/// self-validating; all operations are pure, so a built value can be shared
/// freely across threads.
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<BigRational>>,
    /// |det(cartan)| * (cartan^-1)^T, integer entries; maps weight
    /// coordinates to scaled simple-root coordinates.
    weight_to_root_scaled: Vec<Vec<i64>>,
    det_abs: i64,
    /// d_i = (alpha_i, alpha_i)/2 with short roots normalized to 1.
    d: Vec<i64>,
    positive_roots: Vec<RootVector>,
    pos_roots_int: Vec<Vec<i64>>,
    /// Coordinates of alpha^vee in the simple-coroot basis, per positive root.
    coroot_coords: Vec<Vec<i64>>,
    theta_int: Vec<i64>,
    theta_short_int: Vec<i64>,
    involution: Vec<usize>,
    simply_laced: bool,
    gamma: GammaGroup,
    /// W-orbit of theta^vee in simple-coroot coordinates.
    theta_covee_orbit: Vec<Vec<i64>>,
    /// Hermite basis of the lattice spanned by the orbit.
    covee_basis: Vec<Vec<i64>>,
}

/// Builds the full root system for a simple type. Bourbaki node numbering;
/// positive roots come from root-string closure over the simple roots and the
/// count is checked against the closed-form cardinality for the type.
pub fn build_root_system(simple_type: SimpleType) -> RootSystem {
    RootSystem::build(simple_type)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        Ok(Self::build(SimpleType::new(family, rank)?))
    }

    fn build(simple_type: SimpleType) -> Self {
        let n = simple_type.rank;
        let (cartan, d) = cartan_data(simple_type);
        let cartan_inverse = linalg::rational_inverse(&cartan);
        let det_abs = linalg::determinant(&cartan).abs();
        assert!(det_abs > 0, "Cartan matrix must be invertible");
        let weight_to_root_scaled: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let scaled =
                            cartan_inverse[j][i].clone() * BigRational::from(BigInt::from(det_abs));
                        assert!(scaled.is_integer());
                        i64::try_from(scaled.to_integer()).expect("scaled inverse overflow")
                    })
                    .collect()
            })
            .collect();

        let pos_roots_int = positive_roots_by_closure(&cartan);
        assert_eq!(
            pos_roots_int.len(),
            expected_positive_count(simple_type),
            "positive root count disagrees with the closed form for {simple_type}",
        );

        let norm2 = |root: &[i64]| -> i64 {
            let mut s = 0i64;
            for (i, &ri) in root.iter().enumerate() {
                for (j, &rj) in root.iter().enumerate() {
                    s += ri * rj * d[j] * cartan[i][j];
                }
            }
            s
        };
        let norms: Vec<i64> = pos_roots_int.iter().map(|r| norm2(r)).collect();
        let min_norm = *norms.iter().min().unwrap();
        let max_norm = *norms.iter().max().unwrap();
        let simply_laced = min_norm == max_norm;

        let height = |r: &[i64]| -> i64 { r.iter().sum() };
        let theta_int = {
            let max_h = pos_roots_int.iter().map(|r| height(r)).max().unwrap();
            let mut cands = pos_roots_int.iter().filter(|r| height(r) == max_h);
            let theta = cands.next().unwrap().clone();
            assert!(cands.next().is_none(), "highest root must be unique");
            for r in &pos_roots_int {
                assert!(
                    theta.iter().zip(r).all(|(t, x)| t - x >= 0),
                    "theta must dominate every positive root"
                );
            }
            theta
        };
        let theta_short_int = if simply_laced {
            theta_int.clone()
        } else {
            let short: Vec<&Vec<i64>> = pos_roots_int
                .iter()
                .zip(&norms)
                .filter(|(_, &nn)| nn == min_norm)
                .map(|(r, _)| r)
                .collect();
            let max_h = short.iter().map(|r| height(r)).max().unwrap();
            let mut cands = short.iter().filter(|r| height(r) == max_h);
            let ts = (*cands.next().unwrap()).clone();
            assert!(cands.next().is_none(), "highest short root must be unique");
            for r in &short {
                assert!(
                    ts.iter().zip(r.iter()).all(|(t, x)| t - x >= 0),
                    "theta_short must dominate every short root"
                );
            }
            ts
        };

        let coroot_coords: Vec<Vec<i64>> = pos_roots_int
            .iter()
            .zip(&norms)
            .map(|(root, &nn)| {
                let d_alpha = nn / 2;
                root.iter()
                    .enumerate()
                    .map(|(i, &m)| {
                        let num = m * d[i];
                        assert_eq!(num % d_alpha, 0, "coroot coordinates must be integral");
                        num / d_alpha
                    })
                    .collect()
            })
            .collect();

        // -w0 acts on dominant weights as a diagram automorphism; recover the
        // node permutation by descending each fundamental weight to the
        // antidominant chamber.
        let involution: Vec<usize> = (0..n)
            .map(|i| {
                let mut v: Vec<i64> = vec![0; n];
                v[i] = 1;
                loop {
                    match (0..n).find(|&j| v[j] > 0) {
                        None => break,
                        Some(j) => {
                            let c = v[j];
                            for (k, entry) in v.iter_mut().enumerate() {
                                *entry -= c * cartan[j][k];
                            }
                        }
                    }
                }
                let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                let img = (0..n).find(|&k| {
                    neg.iter()
                        .enumerate()
                        .all(|(idx, &x)| x == i64::from(idx == k))
                });
                img.expect("-w0 must permute the fundamental weights")
            })
            .collect();
        for i in 0..n {
            assert_eq!(involution[involution[i]], i, "involution must square to identity");
        }

        // Gamma = P / Q: Q is generated by the weight coordinates of the
        // simple roots, i.e. the columns of cartan^T. Smith normal form of
        // cartan^T gives canonical residue coordinates via the left transform.
        let cartan_t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
        let smith = linalg::smith_normal_form(&cartan_t);
        let prod: i64 = smith.d.iter().product();
        assert_eq!(prod.abs(), det_abs, "invariant factors must multiply to |det|");
        let mut invariant_factors = Vec::new();
        let mut projection = Vec::new();
        for (i, &di) in smith.d.iter().enumerate() {
            assert!(di > 0);
            if di > 1 {
                invariant_factors.push(di as u64);
                projection.push(smith.left[i].clone());
            }
        }
        let mut gamma = GammaGroup {
            invariant_factors,
            projection,
            minimal_reps: BTreeMap::new(),
        };
        gamma.minimal_reps = minimal_representatives(&gamma, &cartan, &weight_to_root_scaled, det_abs, n);

        let theta_covee = coroot_coords[pos_roots_int
            .iter()
            .position(|r| *r == theta_int)
            .unwrap()]
        .clone();
        let theta_covee_orbit = coweight_orbit(&cartan, &theta_covee);
        let covee_basis = linalg::hermite_row_basis(&theta_covee_orbit);
        assert_eq!(covee_basis.len(), n, "orbit of theta^vee must span a full-rank lattice");

        RootSystem {
            simple_type,
            positive_roots: pos_roots_int
                .iter()
                .map(|r| RootVector::from_integers(r))
                .collect(),
            cartan,
            cartan_inverse,
            weight_to_root_scaled,
            det_abs,
            d,
            pos_roots_int,
            coroot_coords,
            theta_int,
            theta_short_int,
            involution,
            simply_laced,
            gamma,
            theta_covee_orbit,
            covee_basis,
        }
    }

    /// Rebuilds a system from cached data, revalidating the cheap structural
    /// facts and recomputing derived tables. Returns `None` when the data is
    /// inconsistent with the type, in which case callers fall back to a full
    /// build.
    pub(crate) fn from_cached_parts(parts: CachedParts) -> Option<RootSystem> {
        let st = parts.simple_type;
        let n = st.rank;
        let (cartan, d) = cartan_data(st);
        if parts.cartan != cartan {
            return None;
        }
        if parts.positive_roots.len() != expected_positive_count(st)
            || parts
                .positive_roots
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&c| c < 0))
        {
            return None;
        }
        if !parts.positive_roots.contains(&parts.theta)
            || !parts.positive_roots.contains(&parts.theta_short)
        {
            return None;
        }
        if parts.involution.len() != n
            || (0..n).any(|i| {
                parts.involution[i] >= n || parts.involution[parts.involution[i]] != i
            })
        {
            return None;
        }
        let cartan_inverse = linalg::rational_inverse(&cartan);
        let det_abs = linalg::determinant(&cartan).abs();
        let weight_to_root_scaled: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let scaled = cartan_inverse[j][i].clone()
                            * BigRational::from(BigInt::from(det_abs));
                        if !scaled.is_integer() {
                            return None;
                        }
                        i64::try_from(scaled.to_integer()).ok()
                    })
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        let factor_product: u64 = parts.factors.iter().product();
        if factor_product != det_abs as u64 || parts.factors.iter().any(|&f| f < 2) {
            return None;
        }
        if parts.projection.len() != parts.factors.len() {
            return None;
        }
        let gamma = GammaGroup {
            invariant_factors: parts.factors,
            projection: parts.projection,
            minimal_reps: BTreeMap::new(),
        };
        let mut reps = BTreeMap::new();
        for (residues, coords) in parts.reps {
            let elt = GammaElt { residues };
            if gamma.validate(&elt).is_err() || coords.len() != n {
                return None;
            }
            let w = Weight::new(coords);
            if !w.is_dominant() || gamma.project(&w) != elt {
                return None;
            }
            reps.insert(elt, w);
        }
        if reps.len() != gamma.order() as usize {
            return None;
        }
        let gamma = GammaGroup {
            minimal_reps: reps,
            ..gamma
        };

        let norm2 = |root: &[i64]| -> i64 {
            let mut s = 0i64;
            for (i, &ri) in root.iter().enumerate() {
                for (j, &rj) in root.iter().enumerate() {
                    s += ri * rj * d[j] * cartan[i][j];
                }
            }
            s
        };
        let norms: Vec<i64> = parts.positive_roots.iter().map(|r| norm2(r)).collect();
        let min_norm = *norms.iter().min()?;
        let simply_laced = norms.iter().all(|&nn| nn == min_norm);
        let coroot_coords: Vec<Vec<i64>> = parts
            .positive_roots
            .iter()
            .zip(&norms)
            .map(|(root, &nn)| {
                let d_alpha = nn / 2;
                root.iter()
                    .enumerate()
                    .map(|(i, &m)| {
                        let num = m * d[i];
                        (num % d_alpha == 0).then_some(num / d_alpha)
                    })
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        let theta_pos = parts.positive_roots.iter().position(|r| *r == parts.theta)?;
        let theta_covee_orbit = coweight_orbit(&cartan, &coroot_coords[theta_pos]);
        let covee_basis = linalg::hermite_row_basis(&theta_covee_orbit);
        if covee_basis.len() != n {
            return None;
        }
        Some(RootSystem {
            simple_type: st,
            positive_roots: parts
                .positive_roots
                .iter()
                .map(|r| RootVector::from_integers(r))
                .collect(),
            cartan,
            cartan_inverse,
            weight_to_root_scaled,
            det_abs,
            d,
            pos_roots_int: parts.positive_roots,
            coroot_coords,
            theta_int: parts.theta,
            theta_short_int: parts.theta_short,
            involution: parts.involution,
            simply_laced,
            gamma,
            theta_covee_orbit,
            covee_basis,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<BigRational>] {
        &self.cartan_inverse
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn gamma(&self) -> &GammaGroup {
        &self.gamma
    }

    /// Highest root, in simple-root coordinates.
    pub fn theta(&self) -> RootVector {
        RootVector::from_integers(&self.theta_int)
    }

    /// Highest short root; equals `theta` in simply-laced types.
    pub fn theta_short(&self) -> RootVector {
        RootVector::from_integers(&self.theta_short_int)
    }

    /// The node permutation realizing -w0 on dominant weights (0-based).
    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub(crate) fn d_values(&self) -> &[i64] {
        &self.d
    }

    pub(crate) fn pos_roots_int(&self) -> &[Vec<i64>] {
        &self.pos_roots_int
    }

    pub(crate) fn coroot_coords(&self) -> &[Vec<i64>] {
        &self.coroot_coords
    }

    pub(crate) fn theta_covee_orbit(&self) -> &[Vec<i64>] {
        &self.theta_covee_orbit
    }

    pub(crate) fn det_abs(&self) -> i64 {
        self.det_abs
    }

    /// Weight coordinates of a root-lattice vector (integer simple-root coords).
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        assert_eq!(root.len(), n);
        Weight::new(
            (0..n)
                .map(|k| (0..n).map(|j| self.cartan[j][k] * root[j]).sum())
                .collect(),
        )
    }

    pub fn theta_weight(&self) -> Weight {
        self.root_to_weight(&self.theta_int)
    }

    pub fn theta_short_weight(&self) -> Weight {
        self.root_to_weight(&self.theta_short_int)
    }

    /// Simple-root coordinates of a weight, as exact rationals.
    pub fn weight_to_root_coords(&self, w: &Weight) -> RootVector {
        let n = self.rank();
        assert_eq!(w.rank(), n, "weight rank mismatch");
        let det = BigRational::from(BigInt::from(self.det_abs));
        RootVector::new(
            (0..n)
                .map(|i| {
                    let s: i64 = (0..n)
                        .map(|j| self.weight_to_root_scaled[i][j] * w.coords()[j])
                        .sum();
                    BigRational::from(BigInt::from(s)) / det.clone()
                })
                .collect(),
        )
    }

    /// Scaled (by |det cartan|) integer simple-root coordinates of a weight.
    pub(crate) fn weight_to_root_scaled(&self, coords: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.weight_to_root_scaled[i][j] * coords[j]).sum())
            .collect()
    }

    /// Standard partial order on the weight lattice: greater iff the
    /// difference is a nonzero nonnegative-integer combination of simple
    /// roots, decided through the inverse Cartan matrix.
    pub fn dominance_compare(&self, a: &Weight, b: &Weight) -> DominanceRelation {
        assert_eq!(a.rank(), self.rank(), "weight rank mismatch");
        assert_eq!(b.rank(), self.rank(), "weight rank mismatch");
        let diff: Vec<i64> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x - y)
            .collect();
        let scaled = self.weight_to_root_scaled(&diff);
        if scaled.iter().any(|&s| s % self.det_abs != 0) {
            return DominanceRelation::Incomparable;
        }
        if scaled.iter().all(|&s| s == 0) {
            DominanceRelation::Equal
        } else if scaled.iter().all(|&s| s >= 0) {
            DominanceRelation::Greater
        } else if scaled.iter().all(|&s| s <= 0) {
            DominanceRelation::Less
        } else {
            DominanceRelation::Incomparable
        }
    }

    /// Residue of a weight in Gamma = P/Q.
    pub fn class_of(&self, w: &Weight) -> GammaElt {
        assert_eq!(w.rank(), self.rank(), "weight rank mismatch");
        self.gamma.project(w)
    }

    /// Minimal dominant representative of a residue; zero for the zero class.
    pub fn minimal_representative(&self, gamma: &GammaElt) -> Result<Weight, Error> {
        self.gamma.validate(gamma)?;
        Ok(self.gamma.minimal_reps[gamma].clone())
    }

    /// `-w0` applied to a weight, i.e. the highest weight of the dual of the
    /// irreducible with highest weight `w` (for dominant `w`).
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        assert_eq!(w.rank(), self.rank(), "weight rank mismatch");
        Weight::new((0..self.rank()).map(|i| w.coords()[self.involution[i]]).collect())
    }

    /// Minimum positive value of `lambda` on the lattice spanned by the Weyl
    /// orbit of `theta^vee`: the gcd of the values on a Hermite basis, since
    /// the value set of an integer functional on a lattice is an ideal.
    pub fn r_lambda(&self, lambda: &Weight) -> Result<u64, Error> {
        assert_eq!(lambda.rank(), self.rank(), "weight rank mismatch");
        if lambda.is_zero() {
            return Err(Error::ZeroWeight);
        }
        let mut g: u64 = 0;
        for b in &self.covee_basis {
            let v: i64 = b.iter().zip(lambda.coords()).map(|(x, y)| x * y).sum();
            g = gcd_u64(g, v.unsigned_abs());
        }
        assert!(g > 0, "nonzero weight cannot vanish on a full-rank lattice");
        Ok(g)
    }

    /// Pairing of a weight with a coroot given in simple-coroot coordinates.
    pub(crate) fn pair_coroot(&self, w: &[i64], covee: &[i64]) -> i64 {
        w.iter().zip(covee).map(|(a, b)| a * b).sum()
    }
}

/// Raw ingredients of a cached root system; see [`crate::cache`].
pub(crate) struct CachedParts {
    pub simple_type: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub theta_short: Vec<i64>,
    /// 0-based node permutation.
    pub involution: Vec<usize>,
    pub factors: Vec<u64>,
    pub projection: Vec<Vec<i64>>,
    pub reps: Vec<(Vec<u64>, Vec<i64>)>,
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn cartan_data(st: SimpleType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = st.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    fn link(a: &mut [Vec<i64>], i: usize, j: usize) {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    let d: Vec<i64> = match st.family {
        Family::A => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            vec![1; n]
        }
        Family::B => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::D => {
            for i in 0..n - 3 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 2);
            link(&mut a, n - 3, n - 1);
            vec![1; n]
        }
        Family::E => {
            link(&mut a, 0, 2);
            link(&mut a, 2, 3);
            link(&mut a, 1, 3);
            for i in 3..n - 1 {
                link(&mut a, i, i + 1);
            }
            vec![1; n]
        }
        Family::F => {
            for i in 0..3 {
                link(&mut a, i, i + 1);
            }
            a[1][2] = -2;
            vec![2, 2, 1, 1]
        }
        Family::G => {
            a[0][1] = -1;
            a[1][0] = -3;
            vec![1, 3]
        }
    };
    (a, d)
}

fn expected_positive_count(st: SimpleType) -> usize {
    let n = st.rank;
    match st.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Positive roots by root-string closure: starting from the simple roots,
/// `beta + alpha_i` is a root iff `p - <beta, alpha_i^vee> > 0` where `p` is
/// the number of steps the string through `beta` descends in direction `i`.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        all.insert(e.clone());
        frontier.push(e);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down.iter().all(|&c| c >= 0) && all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    out
}

/// BFS closure of a coroot (in simple-coroot coordinates) under the simple
/// reflections `s_i(h) = h - alpha_i(h) alpha_i^vee`.
fn coweight_orbit(cartan: &[Vec<i64>], start: &[i64]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = vec![start.to_vec()];
    seen.insert(start.to_vec());
    while let Some(h) = queue.pop() {
        for i in 0..n {
            let alpha_i_of_h: i64 = (0..n).map(|j| cartan[i][j] * h[j]).sum();
            let mut img = h.clone();
            img[i] -= alpha_i_of_h;
            if seen.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    seen.into_iter().collect()
}

/// Exhaustive bounded search for the minimal dominant representative of each
/// residue class. Candidates are dominant weights with coordinate sum at most
/// rank + 1; the found minimum is asserted to be comparable below every
/// candidate of its class and to be zero or fundamental, which certifies the
/// bound for the realizable types.
fn minimal_representatives(
    gamma: &GammaGroup,
    cartan: &[Vec<i64>],
    weight_to_root_scaled: &[Vec<i64>],
    det_abs: i64,
    rank: usize,
) -> BTreeMap<GammaElt, Weight> {
    let mut reps = BTreeMap::new();
    if gamma.invariant_factors.is_empty() {
        reps.insert(GammaElt { residues: Vec::new() }, Weight::zero(rank));
        return reps;
    }
    let bound = rank as i64 + 1;
    let mut by_class: BTreeMap<GammaElt, Vec<Weight>> = BTreeMap::new();
    let mut stack = vec![(Vec::<i64>::new(), 0i64)];
    while let Some((prefix, used)) = stack.pop() {
        if prefix.len() == rank {
            let w = Weight::new(prefix);
            by_class.entry(gamma.project(&w)).or_default().push(w);
            continue;
        }
        for c in 0..=(bound - used) {
            let mut next = prefix.clone();
            next.push(c);
            stack.push((next, used + c));
        }
    }
    let compare = |a: &Weight, b: &Weight| -> DominanceRelation {
        let diff: Vec<i64> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x - y)
            .collect();
        let scaled: Vec<i64> = (0..rank)
            .map(|i| (0..rank).map(|j| weight_to_root_scaled[i][j] * diff[j]).sum())
            .collect();
        if scaled.iter().any(|&s| s % det_abs != 0) {
            return DominanceRelation::Incomparable;
        }
        if scaled.iter().all(|&s| s == 0) {
            DominanceRelation::Equal
        } else if scaled.iter().all(|&s| s >= 0) {
            DominanceRelation::Greater
        } else if scaled.iter().all(|&s| s <= 0) {
            DominanceRelation::Less
        } else {
            DominanceRelation::Incomparable
        }
    };
    for elt in gamma.elements() {
        let members = by_class
            .get(&elt)
            .unwrap_or_else(|| panic!("residue class without dominant representative in bound"));
        let mut min = members[0].clone();
        for w in members {
            if compare(w, &min) == DominanceRelation::Less {
                min = w.clone();
            }
        }
        for w in members {
            assert!(
                matches!(
                    compare(w, &min),
                    DominanceRelation::Greater | DominanceRelation::Equal
                ),
                "minimal representative must be a minimum of its class"
            );
        }
        assert!(
            min.coords().iter().sum::<i64>() <= 1,
            "minimal representative expected to be zero or fundamental"
        );
        let _ = cartan;
        reps.insert(elt, min);
    }
    reps
}

/// All dominant weights of the given rank whose coordinates sum to at most
/// `max_sum`, in lexicographic order.
pub fn dominant_weights_coord_sum_at_most(rank: usize, max_sum: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<i64>::new(), 0i64)];
    while let Some((prefix, used)) = stack.pop() {
        if prefix.len() == rank {
            out.push(Weight::new(prefix));
            continue;
        }
        for c in (0..=(max_sum - used)).rev() {
            let mut next = prefix.clone();
            next.push(c);
            stack.push((next, used + c));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        let st: SimpleType = s.parse().unwrap();
        let st = SimpleType::new(st.family(), st.rank()).unwrap();
        build_root_system(st)
    }

    #[test]
    fn rejects_inadmissible_ranks() {
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::A, 1).is_ok());
    }

    #[test]
    fn a1_has_single_positive_root() {
        let r = rs("A1");
        assert_eq!(r.positive_roots().len(), 1);
        assert_eq!(r.theta().integer_coords().unwrap(), vec![1]);
    }

    #[test]
    fn a2_positive_roots_and_theta() {
        let r = rs("A2");
        let roots: Vec<Vec<i64>> = r
            .positive_roots()
            .iter()
            .map(|v| v.integer_coords().unwrap())
            .collect();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&vec![1, 0]));
        assert!(roots.contains(&vec![0, 1]));
        assert!(roots.contains(&vec![1, 1]));
        assert_eq!(r.theta().integer_coords().unwrap(), vec![1, 1]);
        assert_eq!(r.theta_weight(), Weight::new(vec![1, 1]));
    }

    #[test]
    fn g2_has_six_roots_and_distinct_theta_short() {
        let r = rs("G2");
        assert_eq!(r.positive_roots().len(), 6);
        assert!(!r.simply_laced());
        assert_ne!(r.theta(), r.theta_short());
        assert_eq!(r.theta().integer_coords().unwrap(), vec![3, 2]);
        assert_eq!(r.theta_short().integer_coords().unwrap(), vec![2, 1]);
        assert_eq!(r.theta_weight(), Weight::new(vec![0, 1]));
        assert_eq!(r.theta_short_weight(), Weight::new(vec![1, 0]));
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for (name, count) in [
            ("A5", 15),
            ("B4", 16),
            ("C3", 9),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
        ] {
            assert_eq!(rs(name).positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn dominance_examples() {
        let r = rs("A2");
        assert_eq!(
            r.dominance_compare(&r.theta_weight(), &Weight::zero(2)),
            DominanceRelation::Greater
        );
        assert_eq!(
            r.dominance_compare(&Weight::fundamental(2, 0), &Weight::fundamental(2, 1)),
            DominanceRelation::Incomparable
        );
        let w = Weight::new(vec![2, 1]);
        assert_eq!(r.dominance_compare(&w, &w), DominanceRelation::Equal);
    }

    #[test]
    fn dominance_uses_inverse_cartan_integrality() {
        // varpi_1 - varpi_2 in A2 has simple-root coordinates (1/3, -1/3).
        let r = rs("A2");
        let diff = Weight::fundamental(2, 0).sub(&Weight::fundamental(2, 1));
        let rc = r.weight_to_root_coords(&diff);
        assert!(!rc.is_integral());
    }

    #[test]
    fn gamma_groups() {
        assert_eq!(rs("A2").gamma().invariant_factors(), &[3]);
        assert_eq!(rs("E8").gamma().invariant_factors(), &[] as &[u64]);
        assert_eq!(rs("D4").gamma().invariant_factors(), &[2, 2]);
        assert_eq!(rs("D5").gamma().invariant_factors(), &[4]);
        assert_eq!(rs("E6").gamma().invariant_factors(), &[3]);
        assert_eq!(rs("E7").gamma().invariant_factors(), &[2]);
    }

    #[test]
    fn a2_minimal_reps_are_fundamental() {
        let r = rs("A2");
        let w1 = Weight::fundamental(2, 0);
        let w2 = Weight::fundamental(2, 1);
        assert_eq!(r.minimal_representative(&r.class_of(&w1)).unwrap(), w1);
        assert_eq!(r.minimal_representative(&r.class_of(&w2)).unwrap(), w2);
        assert_eq!(
            r.minimal_representative(&r.gamma().zero()).unwrap(),
            Weight::zero(2)
        );
    }

    #[test]
    fn d4_minimal_rep_of_vector_class() {
        let r = rs("D4");
        let w1 = Weight::fundamental(4, 0);
        assert_eq!(r.minimal_representative(&r.class_of(&w1)).unwrap(), w1);
        // independent check: exhaustive minimality over the coords <= 3 box
        let class = r.class_of(&w1);
        for a in 0..=3i64 {
            for b in 0..=3i64 {
                for c in 0..=3i64 {
                    for e in 0..=3i64 {
                        let w = Weight::new(vec![a, b, c, e]);
                        if w.is_zero() || r.class_of(&w) != class {
                            continue;
                        }
                        assert!(matches!(
                            r.dominance_compare(&w, &w1),
                            DominanceRelation::Greater | DominanceRelation::Equal
                        ));
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_residue_is_rejected() {
        let r = rs("A2");
        assert_eq!(
            r.minimal_representative(&GammaElt::new(vec![7])),
            Err(Error::InvalidResidue)
        );
        assert_eq!(
            r.minimal_representative(&GammaElt::new(vec![1, 1])),
            Err(Error::InvalidResidue)
        );
    }

    #[test]
    fn dual_weight_examples() {
        let a2 = rs("A2");
        assert_eq!(
            a2.dual_weight(&Weight::fundamental(2, 0)),
            Weight::fundamental(2, 1)
        );
        let a1 = rs("A1");
        assert_eq!(
            a1.dual_weight(&Weight::fundamental(1, 0)),
            Weight::fundamental(1, 0)
        );
        assert_eq!(a2.dual_weight(&Weight::zero(2)), Weight::zero(2));
    }

    #[test]
    fn involution_tables() {
        assert_eq!(rs("A3").involution(), &[2, 1, 0]);
        assert_eq!(rs("D4").involution(), &[0, 1, 2, 3]);
        assert_eq!(rs("D5").involution(), &[0, 1, 2, 4, 3]);
        assert_eq!(rs("E6").involution(), &[5, 1, 4, 3, 2, 0]);
        assert_eq!(rs("B3").involution(), &[0, 1, 2]);
    }

    #[test]
    fn dual_weight_matches_descent_oracle() {
        // oracle: -w0(lambda) computed by descending lambda to the
        // antidominant chamber with simple reflections
        for name in ["A3", "D5", "E6", "B2", "G2"] {
            let r = rs(name);
            let n = r.rank();
            for w in dominant_weights_coord_sum_at_most(n, 3) {
                let mut v = w.coords().to_vec();
                loop {
                    match (0..n).find(|&j| v[j] > 0) {
                        None => break,
                        Some(j) => {
                            let c = v[j];
                            for (k, entry) in v.iter_mut().enumerate() {
                                *entry -= c * r.cartan()[j][k];
                            }
                        }
                    }
                }
                let dual = Weight::new(v.iter().map(|x| -x).collect());
                assert_eq!(r.dual_weight(&w), dual, "{name} {w}");
            }
        }
    }

    #[test]
    fn r_lambda_examples() {
        let a1 = rs("A1");
        for m in 1..=6 {
            assert_eq!(a1.r_lambda(&Weight::new(vec![m])).unwrap(), m as u64);
        }
        let a2 = rs("A2");
        assert_eq!(a2.r_lambda(&Weight::fundamental(2, 0)).unwrap(), 1);
        assert_eq!(a2.r_lambda(&a2.theta_weight()).unwrap(), 1);
        assert_eq!(a2.r_lambda(&Weight::zero(2)), Err(Error::ZeroWeight));
    }

    #[test]
    fn r_lambda_divides_orbit_values() {
        for name in ["A2", "B2", "C3", "G2", "D4"] {
            let r = rs(name);
            for w in dominant_weights_coord_sum_at_most(r.rank(), 3) {
                if w.is_zero() {
                    continue;
                }
                let rl = r.r_lambda(&w).unwrap() as i64;
                for h in r.theta_covee_orbit() {
                    let v = r.pair_coroot(w.coords(), h);
                    assert_eq!(v % rl, 0, "{name} {w}");
                }
            }
        }
    }

    #[test]
    fn p10_lemma_small_ranks() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"] {
            let r = rs(name);
            let beta = if r.simply_laced() {
                r.theta_weight()
            } else {
                r.theta_short_weight()
            };
            for w in dominant_weights_coord_sum_at_most(r.rank(), 3) {
                if w.is_zero() {
                    continue;
                }
                let class = r.class_of(&w);
                let rep = r.minimal_representative(&class).unwrap();
                assert!(
                    matches!(
                        r.dominance_compare(&w, &rep),
                        DominanceRelation::Greater | DominanceRelation::Equal
                    ),
                    "{name}: {w} vs rep {rep}"
                );
                if class.is_zero() {
                    assert!(
                        matches!(
                            r.dominance_compare(&w, &beta),
                            DominanceRelation::Greater | DominanceRelation::Equal
                        ),
                        "{name}: {w} vs beta {beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order_on_samples() {
        let r = rs("B3");
        let ws = dominant_weights_coord_sum_at_most(3, 2);
        for a in &ws {
            for b in &ws {
                let ab = r.dominance_compare(a, b);
                let ba = r.dominance_compare(b, a);
                match ab {
                    DominanceRelation::Greater => assert_eq!(ba, DominanceRelation::Less),
                    DominanceRelation::Less => assert_eq!(ba, DominanceRelation::Greater),
                    DominanceRelation::Equal => {
                        assert_eq!(a, b);
                        assert_eq!(ba, DominanceRelation::Equal);
                    }
                    DominanceRelation::Incomparable => {
                        assert_eq!(ba, DominanceRelation::Incomparable)
                    }
                }
                for c in &ws {
                    if ab == DominanceRelation::Greater
                        && r.dominance_compare(b, c) == DominanceRelation::Greater
                    {
                        assert_eq!(r.dominance_compare(a, c), DominanceRelation::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn dual_preserves_and_reverses_as_specified() {
        let r = rs("A3");
        let ws = dominant_weights_coord_sum_at_most(3, 2);
        for a in &ws {
            assert_eq!(r.dual_weight(&r.dual_weight(a)), *a);
            for b in &ws {
                let fwd = r.dominance_compare(a, b);
                let dual = r.dominance_compare(&r.dual_weight(a), &r.dual_weight(b));
                assert_eq!(fwd, dual);
                if fwd == DominanceRelation::Greater {
                    assert_eq!(
                        r.dominance_compare(&r.dual_weight(b), &r.dual_weight(a)),
                        DominanceRelation::Less
                    );
                }
            }
        }
    }

    #[test]
    fn simple_type_parsing() {
        assert_eq!("A2".parse::<SimpleType>().unwrap().to_string(), "A2");
        assert_eq!("e7".parse::<SimpleType>().unwrap().to_string(), "E7");
        assert!("X2".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
    }
}
