//! Exact cyclotomic arithmetic: elements of the N-th cyclotomic field are
//! dense rational vectors in the power basis modulo the N-th cyclotomic
//! polynomial. Cyclotomic polynomials are obtained by iterated exact division
//! of `u^N - 1`; conductors stay bounded by the lcm of the phase denominators
//! of the points appearing in a computation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::rational::BigRational;
use num::{BigInt, One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_point::{format_rational, parse_rational, ExactPoint};

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Cached: the polynomials are pure data and the cache only ever stores the
/// same value for a given index.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<Vec<BigRational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let value = Arc::new(compute_cyclotomic(n));
    cache.lock().unwrap().insert(n, value.clone());
    value
}

fn compute_cyclotomic(n: u64) -> Vec<BigRational> {
    assert!(n > 0);
    // u^n - 1
    let mut f = vec![BigRational::zero(); n as usize + 1];
    f[0] = -BigRational::one();
    f[n as usize] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = poly_divrem(&f, &phi_d);
            assert!(r.iter().all(Zero::is_zero), "cyclotomic division must be exact");
            f = q;
        }
    }
    f
}

/// Euler phi, the degree of the N-th cyclotomic polynomial.
pub fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut bb = b.to_vec();
    trim(&mut bb);
    let db = bb.len() - 1;
    assert!(db > 0 || !bb[0].is_zero(), "division by zero polynomial");
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let lead = bb[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k].clone() / lead.clone();
        if c.is_zero() {
            continue;
        }
        quot[k - db] = c.clone();
        for j in 0..=db {
            let sub = c.clone() * bb[j].clone();
            rem[k - db + j] -= sub;
        }
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / crate::root_systems::gcd_u64(a, b) * b
}

/// An element of the cyclotomic field of the given conductor, stored as a
/// rational vector in the power basis `1, z, ..., z^{phi(N)-1}` modulo the
/// N-th cyclotomic polynomial. Arithmetic between different conductors
/// promotes both operands to the lcm.
#[derive(Debug, Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    coords: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![q],
        }
    }

    /// Reduces an arbitrary power-basis polynomial modulo the cyclotomic
    /// polynomial of the conductor.
    pub fn from_poly(conductor: u64, poly: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let (_, mut rem) = poly_divrem(&poly, &phi);
        let deg = phi.len() - 1;
        rem.resize(deg, BigRational::zero());
        CyclotomicNumber {
            conductor,
            coords: rem,
        }
    }

    /// Embeds `q * e^{2 pi i k/m}` as `q * z_N^{k N/m}`; the phase
    /// denominator must divide the conductor.
    pub fn from_point(p: &ExactPoint, conductor: u64) -> Self {
        let m = p
            .phase_denominator()
            .to_u64()
            .expect("phase denominator overflow");
        assert_eq!(conductor % m, 0, "conductor must absorb the phase denominator");
        let k = (p.phase() * BigRational::from(BigInt::from(conductor)))
            .to_integer()
            .to_u64()
            .expect("phase numerator overflow");
        let mut poly = vec![BigRational::zero(); k as usize + 1];
        poly[k as usize] = p.magnitude().clone();
        Self::from_poly(conductor, poly)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The same number viewed in a cyclotomic field whose conductor is a
    /// multiple of the current one.
    pub fn promote(&self, conductor: u64) -> Self {
        assert_eq!(conductor % self.conductor, 0, "conductor must be a multiple");
        if conductor == self.conductor {
            return self.clone();
        }
        let step = (conductor / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coords.len() - 1) * step + 1];
        for (k, c) in self.coords.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Self::from_poly(conductor, poly)
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        let l = lcm_u64(self.conductor, other.conductor);
        (self.promote(l), other.promote(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        Self::from_poly(a.conductor, poly_mul(&a.coords, &b.coords))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    /// Division by an integer, exact.
    pub fn div_int(&self, k: i64) -> Self {
        self.scale(&BigRational::new(BigInt::from(1), BigInt::from(k)))
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unified(other);
        a.coords == b.coords
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc({}; ", self.conductor)?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct CycJson {
    conductor: u64,
    coords: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycJson {
            conductor: self.conductor,
            coords: self.coords.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CycJson::deserialize(d)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coords = raw
            .coords
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CyclotomicNumber::from_poly(raw.conductor, coords))
    }
}
