//! Finite-dimensional character engine: Weyl dimension formula, weight
//! multiplicities by the Freudenthal recursion (chosen over alternating sums
//! to avoid large exact cancellations; the alternating-sum method serves as a
//! test oracle), tensor-product decomposition by highest-weight peeling, and
//! the type-A universal highest-weight module dimension.
//!
//! All pairings are computed in integer arithmetic: for a weight `w` and a
//! root-lattice vector with coordinates `c`, the invariant form gives
//! `(w, sum c_i alpha_i) = sum_i c_i d_i w_i`, an integer.

use std::collections::BTreeMap;

use num::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::drinfeld::DrinfeldPoly;
use crate::error::Error;
use crate::root_systems::{Family, RootSystem, Weight};

/// Full weight-multiplicity table of an irreducible finite-dimensional
/// module: the support is closed under the Weyl group, with equal
/// multiplicities along orbits, and the total equals the Weyl dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    highest: Weight,
    mult: BTreeMap<Weight, u64>,
}

impl CharacterTable {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.mult.iter()
    }

    pub fn support_len(&self) -> usize {
        self.mult.len()
    }

    /// Sum of all multiplicities (the dimension of the module).
    pub fn total(&self) -> BigUint {
        self.mult
            .values()
            .fold(BigUint::from(0u64), |acc, &m| acc + BigUint::from(m))
    }
}

fn require_dominant(w: &Weight) -> Result<(), Error> {
    if w.is_dominant() {
        Ok(())
    } else {
        Err(Error::NonDominant(w.to_string()))
    }
}

/// Weyl dimension formula, evaluated with exact integer pairings over the
/// positive roots.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint, Error> {
    assert_eq!(lambda.rank(), rs.rank(), "weight rank mismatch");
    require_dominant(lambda)?;
    let mut num = BigUint::from(1u64);
    let mut den = BigUint::from(1u64);
    for covee in rs.coroot_coords() {
        let top: i64 = covee
            .iter()
            .zip(lambda.coords())
            .map(|(c, l)| c * (l + 1))
            .sum();
        let bottom: i64 = covee.iter().sum();
        num *= BigUint::from(top as u64);
        den *= BigUint::from(bottom as u64);
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r == BigUint::from(0u64), "Weyl dimension must be integral");
    Ok(q)
}

/// The dominant conjugate of a weight, by descent with simple reflections.
pub fn dominant_conjugate(rs: &RootSystem, w: &Weight) -> Weight {
    let n = rs.rank();
    let mut v = w.coords().to_vec();
    loop {
        match (0..n).find(|&i| v[i] < 0) {
            None => return Weight::new(v),
            Some(i) => {
                let c = v[i];
                for (k, entry) in v.iter_mut().enumerate() {
                    *entry -= c * rs.cartan()[i][k];
                }
            }
        }
    }
}

/// The full Weyl orbit of a weight.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let n = rs.rank();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![w.coords().to_vec()];
    seen.insert(w.coords().to_vec());
    while let Some(v) = queue.pop() {
        for i in 0..n {
            if v[i] != 0 {
                let c = v[i];
                let mut img = v.clone();
                for (k, entry) in img.iter_mut().enumerate() {
                    *entry -= c * rs.cartan()[i][k];
                }
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
    }
    seen.into_iter().map(Weight::new).collect()
}

/// All dominant weights `mu <= lambda`, together with the simple-root
/// coordinates of `lambda - mu`.
fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<(Weight, Vec<i64>)> {
    let n = rs.rank();
    let det = rs.det_abs();
    let scaled = rs.weight_to_root_scaled(lambda.coords());
    let bounds: Vec<i64> = scaled.iter().map(|s| s.div_euclid(det)).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; n];
    loop {
        let coords: Vec<i64> = (0..n)
            .map(|k| lambda.coords()[k] - (0..n).map(|j| c[j] * rs.cartan()[j][k]).sum::<i64>())
            .collect();
        if coords.iter().all(|&x| x >= 0) {
            out.push((Weight::new(coords), c.clone()));
        }
        // odometer over the box prod [0, bounds_i]
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            c[pos] += 1;
            if c[pos] <= bounds[pos] {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
}

/// Weight multiplicities of the irreducible with the given highest weight,
/// by the Freudenthal recursion over dominant weights, extended to the full
/// Weyl-invariant support.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable, Error> {
    assert_eq!(lambda.rank(), rs.rank(), "weight rank mismatch");
    require_dominant(lambda)?;
    let mut dominants = dominant_weights_below(rs, lambda);
    dominants.sort_by_key(|(_, c)| (c.iter().sum::<i64>(), c.clone()));

    let d = rs.d_values().to_vec();
    // (w, sum c_i alpha_i) as an exact integer
    let pair = |w: &[i64], c: &[i64]| -> i128 {
        w.iter()
            .zip(c)
            .zip(&d)
            .map(|((&wi, &ci), &di)| wi as i128 * ci as i128 * di as i128)
            .sum()
    };

    let mut table: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    table.insert(lambda.coords().to_vec(), 1);

    let roots: Vec<(&Vec<i64>, Vec<i64>)> = rs
        .pos_roots_int()
        .iter()
        .map(|r| (r, rs.root_to_weight(r).coords().to_vec()))
        .collect();

    for (mu, c_mu) in dominants.iter().skip(1) {
        let mut numer: i128 = 0;
        for (root_c, root_w) in &roots {
            for k in 1.. {
                let rem: Vec<i64> = c_mu
                    .iter()
                    .zip(root_c.iter())
                    .map(|(&ci, &ri)| ci - k * ri)
                    .collect();
                if rem.iter().any(|&x| x < 0) {
                    break;
                }
                let nu: Vec<i64> = mu
                    .coords()
                    .iter()
                    .zip(root_w)
                    .map(|(&m, &rw)| m + k * rw)
                    .collect();
                let conj = dominant_conjugate(rs, &Weight::new(nu.clone()));
                if let Some(&m) = table.get(conj.coords()) {
                    numer += m as i128 * pair(&nu, root_c);
                }
            }
        }
        // denominator (lambda + mu + 2 rho, lambda - mu)
        let sum_vec: Vec<i64> = lambda
            .coords()
            .iter()
            .zip(mu.coords())
            .map(|(&a, &b)| a + b + 2)
            .collect();
        let denom = pair(&sum_vec, c_mu);
        assert!(denom > 0, "Freudenthal denominator must be positive");
        let twice = 2 * numer;
        assert_eq!(twice % denom, 0, "Freudenthal division must be exact");
        let m = twice / denom;
        assert!(m >= 0);
        if m > 0 {
            table.insert(mu.coords().to_vec(), m as u64);
        }
    }

    let mut full: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, m) in &table {
        for w in weyl_orbit(rs, &Weight::new(mu.clone())) {
            let prev = full.insert(w, *m);
            assert!(prev.is_none(), "orbits of distinct dominants are disjoint");
        }
    }
    Ok(CharacterTable {
        highest: lambda.clone(),
        mult: full,
    })
}

/// Pointwise product of full character tables: the weight multiset of the
/// tensor product of the irreducibles with the given highest weights.
pub fn tensor_product_character(
    rs: &RootSystem,
    factors: &[Weight],
) -> Result<BTreeMap<Weight, u64>, Error> {
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::new();
    acc.insert(Weight::zero(rs.rank()), 1);
    for lambda in factors {
        let table = freudenthal(rs, lambda)?;
        let mut next: BTreeMap<Weight, u64> = BTreeMap::new();
        for (v, m) in &acc {
            for (w, k) in table.weights() {
                *next.entry(v.add(w)).or_insert(0) += m * k;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Decomposition of a tensor product of irreducibles into irreducible
/// components, by repeatedly peeling the highest remaining weight.
pub fn tensor_decompose(
    rs: &RootSystem,
    factors: &[Weight],
) -> Result<BTreeMap<Weight, u64>, Error> {
    let product = tensor_product_character(rs, factors)?;
    let mut work: BTreeMap<Weight, i128> = product
        .into_iter()
        .map(|(w, m)| (w, m as i128))
        .collect();
    let mut components: BTreeMap<Weight, u64> = BTreeMap::new();
    while let Some(top) = work
        .iter()
        .filter(|(_, &m)| m != 0)
        .max_by_key(|(w, _)| {
            let scaled = rs.weight_to_root_scaled(w.coords());
            (scaled.iter().map(|&s| s as i128).sum::<i128>(), w.coords().to_vec())
        })
        .map(|(w, _)| w.clone())
    {
        let coeff = work[&top];
        assert!(
            top.is_dominant() && coeff > 0,
            "peeling must meet a dominant weight with positive coefficient"
        );
        let table = freudenthal(rs, &top)?;
        for (w, k) in table.weights() {
            let entry = work.entry(w.clone()).or_insert(0);
            *entry -= coeff * *k as i128;
            assert!(*entry >= 0, "peeling drove a multiplicity negative");
        }
        components.insert(top, coeff as u64);
        work.retain(|_, m| *m != 0);
    }
    Ok(components)
}

/// Multiplicity data of one target weight in a tensor product: the
/// multiplicity of the irreducible component with that highest weight, and
/// the raw dimension of the corresponding weight space of the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorMultiplicity {
    pub component: u64,
    pub weight: u64,
}

pub fn tensor_multiplicity(
    rs: &RootSystem,
    factors: &[Weight],
    mu: &Weight,
) -> Result<TensorMultiplicity, Error> {
    require_dominant(mu)?;
    let component = tensor_decompose(rs, factors)?
        .get(mu)
        .copied()
        .unwrap_or(0);
    let weight = tensor_product_character(rs, factors)?
        .get(mu)
        .copied()
        .unwrap_or(0);
    Ok(TensorMultiplicity { component, weight })
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut out = BigUint::from(1u64);
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Dimension of the universal highest-weight module attached to a type-A
/// Drinfeld polynomial: independent of the spectral points, it is the
/// product over nodes of `binom(rank+1, i)^{lambda_i}`. Other families are
/// rejected rather than guessed.
pub fn weyl_module_dim_type_a(rs: &RootSystem, pi: &DrinfeldPoly) -> Result<BigUint, Error> {
    if rs.simple_type().family() != Family::A {
        return Err(Error::NotTypeA {
            family: rs.simple_type().family().letter(),
        });
    }
    assert_eq!(rs.simple_type(), pi.simple_type(), "root system mismatch");
    let n = rs.rank() as u64;
    let lambda = pi.lambda();
    let mut out = BigUint::from(1u64);
    for (i, &c) in lambda.coords().iter().enumerate() {
        let b = binomial(n + 1, i as u64 + 1);
        out *= num::pow::pow(b, c as usize);
    }
    Ok(out)
}

// --- JSON wire format -------------------------------------------------------
//
// {"highest": [ints], "weights": [{"coords": [ints], "mult": int}, ...]}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub highest: Vec<i64>,
    pub weights: Vec<WeightMultJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightMultJson {
    pub coords: Vec<i64>,
    pub mult: u64,
}

impl From<&CharacterTable> for CharacterTableJson {
    fn from(t: &CharacterTable) -> Self {
        CharacterTableJson {
            highest: t.highest.coords().to_vec(),
            weights: t
                .mult
                .iter()
                .map(|(w, &m)| WeightMultJson {
                    coords: w.coords().to_vec(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl TryFrom<CharacterTableJson> for CharacterTable {
    type Error = Error;

    fn try_from(raw: CharacterTableJson) -> Result<Self, Error> {
        let rank = raw.highest.len();
        let mut mult = BTreeMap::new();
        for entry in raw.weights {
            if entry.coords.len() != rank {
                return Err(Error::WeightLength {
                    expected: rank,
                    got: entry.coords.len(),
                });
            }
            if entry.mult == 0 {
                return Err(Error::InvalidMultiplicity);
            }
            mult.insert(Weight::new(entry.coords), entry.mult);
        }
        Ok(CharacterTable {
            highest: Weight::new(raw.highest),
            mult,
        })
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharacterTableJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CharacterTableJson::deserialize(d)?;
        CharacterTable::try_from(raw).map_err(D::Error::custom)
    }
}
