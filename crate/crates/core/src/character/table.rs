//! Character tables by the Dixon–Schneider method.
//!
//! Class multiplication coefficients give one matrix per class; their common
//! eigenvectors over GF(q) are the central characters. Degrees and values
//! mod `q` follow, and each value is lifted to ℚ(ζₑ) by Fourier inversion over
//! the powers of a class representative. The lifted table is then checked
//! exactly, and the next admissible prime is tried if anything fails.

use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::Rational64;

use crate::character::ClassFunction;
use crate::classes::ClassInfo;
use crate::cyclotomic::Cyclotomic;
use crate::error::{inconsistent, Result};
use crate::group::{is_prime, PermGroup};

/// Number of admissible primes tried before giving up.
const PRIME_ATTEMPTS: usize = 24;

pub struct CharacterTable {
    group: PermGroup,
    info: Arc<ClassInfo>,
    exponent: u64,
    prime: u64,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn compute(group: &PermGroup) -> Result<Self> {
        let info = group.class_info()?.clone();
        let exponent = group.exponent()?;
        let order = group.order();
        let consts = class_matrices(&info);
        let mut q = first_prime(exponent, order);
        for _ in 0..PRIME_ATTEMPTS {
            if let Some(rows) = try_prime(&info, &consts, exponent, q) {
                let mut irreducibles = rows
                    .into_iter()
                    .map(|v| ClassFunction::new(group, v))
                    .collect::<Result<Vec<_>>>()?;
                sort_rows(&mut irreducibles, exponent as u32);
                let table = CharacterTable {
                    group: group.clone(),
                    info: info.clone(),
                    exponent,
                    prime: q,
                    irreducibles,
                };
                if table.verify().is_ok() {
                    return Ok(table);
                }
            }
            q = next_prime(exponent, q);
        }
        Err(inconsistent(format!(
            "eigenspace splitting failed for {PRIME_ATTEMPTS} primes (group of order {order})"
        )))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn class_info(&self) -> &Arc<ClassInfo> {
        &self.info
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Conductor used for every value of the table.
    pub fn conductor(&self) -> u32 {
        self.exponent as u32
    }

    /// The prime modulo which the eigenvectors were computed.
    pub fn dixon_prime(&self) -> u64 {
        self.prime
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.degree()).collect()
    }

    /// `map[c]` = class of `p`-th powers of class `c`.
    pub fn power_map(&self, p: u64) -> Arc<Vec<usize>> {
        self.info.power_map(p)
    }

    /// Exact check of the orthogonality relations and `Σ χ(1)² = |G|`.
    pub fn verify(&self) -> Result<()> {
        let k = self.info.len();
        if self.irreducibles.len() != k {
            return Err(inconsistent("table is not square"));
        }
        let order = self.info.group_order() as i64;
        let sq: i64 = self.irreducibles.iter().map(|c| c.degree() * c.degree()).sum();
        if sq != order || self.irreducibles.iter().any(|c| c.degree() <= 0) {
            return Err(inconsistent("degrees do not square-sum to the group order"));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                if !ip.eq_int((i == j) as i64) {
                    return Err(inconsistent(format!("rows {i} and {j} are not orthonormal")));
                }
            }
        }
        for x in 0..k {
            for y in x..k {
                let s: Cyclotomic = self
                    .irreducibles
                    .iter()
                    .map(|c| &c.values()[x] * &c.values()[y].conj())
                    .sum();
                let expect = if x == y {
                    self.info.centralizer_order(x) as i64
                } else {
                    0
                };
                if !s.eq_int(expect) {
                    return Err(inconsistent(format!("columns {x} and {y} are not orthogonal")));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.info.group_order())
            .field("degrees", &self.degrees())
            .finish()
    }
}

/// Row order: degree, then the trivial character, then values (larger coordinates first).
fn sort_rows(rows: &mut [ClassFunction], conductor: u32) {
    let is_trivial = |c: &ClassFunction| c.values().iter().all(|v| v.eq_int(1));
    rows.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| is_trivial(b).cmp(&is_trivial(a)))
            .then_with(|| {
                for (x, y) in a.values().iter().zip(b.values()) {
                    match y.cmp_at(x, conductor) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    });
}

/// `m[j][i][l] = #{x ∈ C_j : x⁻¹ g_l ∈ C_i}`, so that `C_j C_i = Σ_l m[j][i][l] C_l`.
fn class_matrices(info: &ClassInfo) -> Vec<Vec<Vec<u64>>> {
    let k = info.len();
    let mut out = vec![vec![vec![0u64; k]; k]; k];
    for (j, cj) in info.classes().iter().enumerate() {
        for (l, cl) in info.classes().iter().enumerate() {
            let g = &cl.representative;
            for x in &cj.elements {
                let i = info.class_of(&x.inverse().compose(g)).unwrap();
                out[j][i][l] += 1;
            }
        }
    }
    out
}

fn first_prime(e: u64, order: u64) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut q = 1 + e;
    while !(q as f64 > bound && is_prime(q)) {
        q += e;
    }
    q
}

fn next_prime(e: u64, q: u64) -> u64 {
    let mut q = q + e;
    while !is_prime(q) {
        q += e;
    }
    q
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn primitive_root(q: u64) -> u64 {
    let factors = crate::group::prime_factors(q - 1);
    (2..q)
        .find(|&g| factors.iter().all(|&p| pow_mod(g, (q - 1) / p, q) != 1))
        .unwrap_or(1)
}

/// Basis of the null space of a `rows × cols` matrix over GF(q).
fn nullspace(mut m: Vec<Vec<u64>>, cols: usize, q: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], q);
        for x in m[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + q - f * m[r][j] % q) % q;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (q - m[i][f]) % q;
            }
            v
        })
        .collect()
}

/// Splits GF(q)^k into the common eigenspaces of the class matrices, in class order.
fn split(consts: &[Vec<Vec<u64>>], k: usize, q: u64) -> Option<Vec<Vec<u64>>> {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for a in consts.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            // Columns A·b_t, for the basis vectors b_t of this space.
            let ab: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..k)
                        .map(|i| (0..k).fold(0u64, |acc, l| (acc + a[i][l] % q * b[l]) % q))
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..q {
                let m: Vec<Vec<u64>> = (0..k)
                    .map(|i| (0..d).map(|t| (ab[t][i] + q - lambda * basis[t][i] % q) % q).collect())
                    .collect();
                let kernel = nullspace(m, d, q);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|c| {
                        (0..k)
                            .map(|i| (0..d).fold(0u64, |acc, t| (acc + c[t] * basis[t][i]) % q))
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    Some(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

fn try_prime(info: &ClassInfo, consts: &[Vec<Vec<u64>>], e: u64, q: u64) -> Option<Vec<Vec<Cyclotomic>>> {
    let k = info.len();
    let order = info.group_order();
    let vectors = split(consts, k, q)?;
    let w_e = pow_mod(primitive_root(q), (q - 1) / e, q);
    let sizes = info.sizes();
    let max_degree = (order as f64).sqrt().floor() as u64;
    let power_maps: Vec<Arc<Vec<usize>>> = (0..e).map(|t| info.power_map(t)).collect();
    let mut rows = Vec::with_capacity(k);
    for v in vectors {
        if v[0] == 0 {
            return None;
        }
        let s0 = inv_mod(v[0], q);
        let omega: Vec<u64> = v.iter().map(|x| x * s0 % q).collect();
        let sum = (0..k).fold(0u64, |acc, j| {
            let t = omega[j] * omega[info.inverse_class(j)] % q * inv_mod(sizes[j] as u64 % q, q) % q;
            (acc + t) % q
        });
        if sum == 0 {
            return None;
        }
        let d2 = order % q * inv_mod(sum, q) % q;
        let d = (1..=max_degree).find(|&d| d * d % q == d2 && order % d == 0)?;
        let chi: Vec<u64> = (0..k)
            .map(|j| omega[j] * (d % q) % q * inv_mod(sizes[j] as u64 % q, q) % q)
            .collect();
        let mut values = Vec::with_capacity(k);
        for (j, cls) in info.classes().iter().enumerate() {
            let o = cls.element_order();
            let w_o = pow_mod(w_e, e / o, q);
            let o_inv = inv_mod(o % q, q);
            let mut coeffs = vec![Rational64::from_integer(0); e as usize];
            for kk in 0..o {
                let w_neg = pow_mod(w_o, (o - kk % o) % o, q);
                let mut acc = 0u64;
                let mut wp = 1u64;
                for t in 0..o {
                    let c = power_maps[t as usize][j];
                    acc = (acc + chi[c] * wp) % q;
                    wp = wp * w_neg % q;
                }
                let m = acc * o_inv % q;
                if m > d {
                    return None;
                }
                coeffs[(kk * (e / o)) as usize] = Rational64::from_integer(m as i64);
            }
            values.push(Cyclotomic::from_power_coeffs(e as u32, &coeffs).ok()?);
        }
        rows.push(values);
    }
    Some(rows)
}

/// The character table of `g` (uncached; see [`crate::cache::character_table`]).
pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    CharacterTable::compute(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn degrees(g: &PermGroup) -> Vec<i64> {
        character_table(g).unwrap().degrees()
    }

    #[test]
    fn cyclic_two() {
        let t = character_table(&PermGroup::cyclic(2)).unwrap();
        let vals: Vec<Vec<Cyclotomic>> = t.irreducibles().iter().map(|c| c.values().to_vec()).collect();
        assert_eq!(vals[0], vec![Cyclotomic::one(), Cyclotomic::one()]);
        assert_eq!(vals[1], vec![Cyclotomic::one(), Cyclotomic::from_int(-1)]);
    }

    #[test]
    fn small_degrees() {
        assert_eq!(degrees(&PermGroup::symmetric(4)), vec![1, 1, 2, 3, 3]);
        let q8 = PermGroup::new(
            8,
            vec![
                Perm::parse("(0 1 3 2)(4 5 7 6)", 8).unwrap(),
                Perm::parse("(0 4 3 7)(1 6 2 5)", 8).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(degrees(&q8), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees(&PermGroup::trivial(2)), vec![1]);
        assert_eq!(degrees(&PermGroup::cyclic(7)), vec![1; 7]);
    }

    #[test]
    fn trivial_row_first() {
        let t = character_table(&PermGroup::cyclic(6)).unwrap();
        assert!(t.irreducibles()[0].values().iter().all(|v| v.eq_int(1)));
        t.verify().unwrap();
    }

    #[test]
    fn prime_choice() {
        assert_eq!(first_prime(12, 24), 13);
        assert_eq!(first_prime(2, 2), 3);
        assert_eq!(first_prime(15, 75), 31);
    }
}
