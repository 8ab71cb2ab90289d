//! Exact arithmetic in cyclotomic fields ℚ(ζₙ).
//!
//! A value of conductor `n` is stored by its coordinates in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}`, i.e. reduced modulo the `n`-th cyclotomic
//! polynomial. Values of different conductors are combined in ℚ(ζ_lcm).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

struct Basis {
    phi: usize,
    /// Coefficients of Φₙ, lowest degree first (monic, length φ(n)+1).
    poly: Vec<i64>,
    /// `reduce[k]` holds the power-basis coordinates of ζᵏ, for `0 ≤ k < n`.
    reduce: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1] / den[dl - 1];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic_poly(n: usize, cache: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_poly(d, cache);
            p = poly_div_exact(&p, &pd);
        }
    }
    cache.insert(n, p.clone());
    p
}

fn basis(n: u32) -> Arc<Basis> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().expect("basis cache poisoned").get(&n) {
        return b.clone();
    }
    let mut polys = HashMap::new();
    let poly = cyclotomic_poly(n as usize, &mut polys);
    let phi = poly.len() - 1;
    let mut reduce = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        reduce.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..phi - 1]);
        for i in 0..phi {
            next[i] -= top * poly[i];
        }
        cur = next;
    }
    let b = Arc::new(Basis { phi, poly, reduce });
    cache.write().expect("basis cache poisoned").insert(n, b.clone());
    b
}

/// Euler's totient.
pub fn phi(n: u32) -> usize {
    basis(n).phi
}

#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<Rational64>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            n: 1,
            c: vec![Rational64::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational64::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational64::from_integer(v))
    }

    pub fn from_rational(r: Rational64) -> Self {
        Cyclotomic { n: 1, c: vec![r] }
    }

    /// `ζₙᵏ`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let b = basis(n);
        let k = k.rem_euclid(n as i64) as usize;
        Cyclotomic {
            n,
            c: b.reduce[k].iter().map(|&x| Rational64::from_integer(x)).collect(),
        }
    }

    /// `Σ coeffs[k] ζₙᵏ` for an arbitrary (unreduced) coefficient list.
    pub fn from_power_coeffs(n: u32, coeffs: &[Rational64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let b = basis(n);
        let mut c = vec![Rational64::zero(); b.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, &r) in b.reduce[k % n as usize].iter().enumerate() {
                if r != 0 {
                    c[i] += a * r;
                }
            }
        }
        Ok(Cyclotomic { n, c })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Power-basis coordinates at the stored conductor.
    pub fn coeffs(&self) -> &[Rational64] {
        &self.c
    }

    /// Re-expresses the value in ℚ(ζₘ) for a multiple `m` of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "conductor {m} is not a multiple of {}", self.n);
        if m == self.n {
            return self.clone();
        }
        let b = basis(m);
        let step = (m / self.n) as usize;
        let mut c = vec![Rational64::zero(); b.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &r) in b.reduce[i * step].iter().enumerate() {
                if r != 0 {
                    c[j] += a * r;
                }
            }
        }
        Cyclotomic { n: m, c }
    }

    /// Coordinates in ℚ(ζₘ), zero-padded to length `m`.
    pub fn coeffs_at(&self, m: u32) -> Vec<Rational64> {
        let mut c = self.lift(m).c;
        c.resize(m as usize, Rational64::zero());
        c
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational64> {
        self.is_rational().then(|| self.c[0])
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn scale(&self, r: Rational64) -> Self {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    /// The Galois image under `ζ ↦ ζᵃ` (`a` coprime to the conductor).
    pub fn galois(&self, a: i64) -> Self {
        let b = basis(self.n);
        let n = self.n as i64;
        let mut c = vec![Rational64::zero(); b.phi];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let k = (a * i as i64).rem_euclid(n) as usize;
            for (j, &r) in b.reduce[k].iter().enumerate() {
                if r != 0 {
                    c[j] += x * r;
                }
            }
        }
        Cyclotomic { n: self.n, c }
    }

    /// Complex conjugate, `ζᵏ ↦ ζ⁻ᵏ`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The same value at the least conductor whose field contains it.
    pub fn reduced(&self) -> Self {
        if self.is_rational() {
            return Cyclotomic::from_rational(self.c[0]);
        }
        let n = self.n;
        for d in 1..n {
            if n % d != 0 {
                continue;
            }
            // Fixed by every ζ ↦ ζᵃ with a ≡ 1 mod d  ⇔  lies in ℚ(ζ_d).
            let fixed = (1..n as i64)
                .filter(|a| a.gcd(&(n as i64)) == 1 && a % d as i64 == 1 % d as i64)
                .all(|a| self.galois(a) == *self);
            if fixed {
                if let Some(v) = self.descend(d) {
                    return v;
                }
            }
        }
        self.clone()
    }

    /// Solves for the coordinates in ℚ(ζ_d) ⊆ ℚ(ζₙ).
    fn descend(&self, d: u32) -> Option<Self> {
        let big = basis(self.n);
        let small = basis(d);
        let step = (self.n / d) as usize;
        // Columns: images of ζ_d^j in the conductor-n basis.
        let rows = big.phi;
        let cols = small.phi;
        let mut m: Vec<Vec<Rational64>> = (0..rows)
            .map(|i| {
                let mut row: Vec<Rational64> = (0..cols)
                    .map(|j| Rational64::from_integer(big.reduce[j * step][i]))
                    .collect();
                row.push(self.c[i]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][col].recip();
            for x in m[r].iter_mut() {
                *x *= inv;
            }
            for i in 0..rows {
                if i != r && !m[i][col].is_zero() {
                    let f = m[i][col];
                    for j in 0..=cols {
                        let t = m[r][j] * f;
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if m[r..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut c = vec![Rational64::zero(); cols];
        for (i, &col) in pivots.iter().enumerate() {
            c[col] = m[i][cols];
        }
        Some(Cyclotomic { n: d, c })
    }

    /// Lexicographic comparison of coordinates in ℚ(ζₘ), `m` a common multiple of both conductors.
    pub fn cmp_at(&self, other: &Self, m: u32) -> Ordering {
        self.lift(m).c.cmp(&other.lift(m).c)
    }

    /// Rational approximation-free check `self = r` for an integer.
    pub fn eq_int(&self, v: i64) -> bool {
        self.is_rational() && self.c[0] == Rational64::from_integer(v)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl From<Rational64> for Cyclotomic {
    fn from(v: Rational64) -> Self {
        Cyclotomic::from_rational(v)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.c.iter_mut().zip(&b.c) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.c.iter_mut().zip(&b.c) {
            *x -= y;
        }
        a
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == 1 {
            return rhs.scale(self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(rhs.c[0]);
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        let basis = basis(a.n);
        let phi = basis.phi;
        let mut prod = vec![Rational64::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut c: Vec<Rational64> = prod[..phi].to_vec();
        let n = a.n as usize;
        for (k, x) in prod.iter().enumerate().skip(phi) {
            if x.is_zero() {
                continue;
            }
            for (j, &r) in basis.reduce[k % n].iter().enumerate() {
                if r != 0 {
                    c[j] += x * r;
                }
            }
        }
        Cyclotomic { n: a.n, c }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

fn fmt_rational(r: &Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Printed at the least conductor, as a sum of terms `c*E(n)^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.reduced();
        if let Some(r) = v.to_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        let mut first = true;
        for (k, c) in v.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = match k {
                0 => String::new(),
                1 => format!("E({})", v.n),
                _ => format!("E({})^{k}", v.n),
            };
            if k == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&unit)?;
            } else {
                write!(f, "{}*{unit}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serialized as `{conductor, coeffs}` with exact `"p/q"` strings on `ζ^0 … ζ^(n-1)`.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self
            .coeffs_at(self.n)
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect();
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("conductor", &self.n)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            conductor: u32,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Cyclotomic::from_power_coeffs(raw.conductor, &coeffs).map_err(de::Error::custom)
    }
}

/// Φₙ, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    basis(n).poly.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi(15), 8);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..=24u32 {
            let s: Cyclotomic = (0..n as i64).map(|k| z(n, k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn rationals_embed() {
        let half = Cyclotomic::from_rational(Rational64::new(1, 2));
        assert_eq!(half.lift(12), half);
        assert!(half.lift(12).is_rational());
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn conductor_reduction() {
        // ζ₁₂⁴ = ζ₃.
        let v = z(12, 4).reduced();
        assert_eq!(v.conductor(), 3);
        assert_eq!(v, z(3, 1));
        // ζ₆ = -ζ₃²: printed at conductor 3.
        assert_eq!(z(6, 1).reduced().conductor(), 3);
        let s = &z(8, 1) + &z(8, 7);
        assert_eq!(s.reduced().conductor(), 8);
        assert_eq!(&s * &s, Cyclotomic::from_int(2));
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::from_int(-3).to_string(), "-3");
        assert_eq!(z(3, 1).to_string(), "E(3)");
        assert_eq!(z(3, 2).to_string(), "-1 - E(3)");
        assert_eq!(Cyclotomic::from_rational(Rational64::new(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn json_round_trip() {
        let v = &z(12, 5) + &Cyclotomic::from_rational(Rational64::new(2, 3));
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("\"2/3\""));
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    fn arb(n: u32) -> impl Strategy<Value = Cyclotomic> {
        proptest::collection::vec(-3i64..=3, n as usize).prop_map(move |v| {
            let r: Vec<Rational64> = v.into_iter().map(Rational64::from_integer).collect();
            Cyclotomic::from_power_coeffs(n, &r).unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(12), b in arb(12), c in arb(8)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(a.reduced(), a.clone());
        }

        #[test]
        fn norm_is_real(a in arb(5)) {
            let nrm = &a * &a.conj();
            prop_assert_eq!(nrm.conj(), nrm);
        }
    }
}
