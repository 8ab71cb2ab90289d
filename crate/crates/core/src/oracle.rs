//! An independent character table, from the centre of the group algebra.
//!
//! Class sums scaled by `1/√|C|` are orthonormal for the trace form on the
//! centre of `CG`, so multiplication by a class sum is a normal operator. A
//! generic real combination of the Hermitian and skew-Hermitian parts has the
//! primitive central idempotents as eigenvectors, and each eigenvector gives
//! one irreducible character in floating point. Exact values are then solved
//! for: the numbers `χ(g^t)` for `t` prime to the exponent `e` are the Galois
//! conjugates of `χ(g)`, which pins down its integer coordinates in `Z[ζ_e]`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::character::{table::CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{inconsistent, Result};
use crate::group::PermGroup;

/// Groups above this order are outside the oracle's intended range.
pub const ORACLE_MAX_ORDER: u64 = 60;

const ATTEMPTS: u64 = 8;
const GAP: f64 = 1e-6;
const ROUNDING: f64 = 1e-4;

fn multiplication_matrices(g: &PermGroup) -> Result<Vec<DMatrix<Complex64>>> {
    let info = g.class_info()?;
    let k = info.len();
    let sizes: Vec<f64> = info.classes().iter().map(|c| c.size as f64).collect();
    let mut out = Vec::with_capacity(k);
    for cj in info.classes() {
        let mut b = DMatrix::<Complex64>::zeros(k, k);
        for (l, cl) in info.classes().iter().enumerate() {
            let target = &cl.representative;
            for x in &cj.elements {
                let y = x.inverse().compose(target);
                let i = info.class_of(&y).expect("closed under products");
                b[(l, i)] += Complex64::new((sizes[l] / sizes[i]).sqrt(), 0.0);
            }
        }
        out.push(b);
    }
    Ok(out)
}

fn generic_hermitian(mats: &[DMatrix<Complex64>], seed: u64) -> DMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = mats[0].nrows();
    let mut h = DMatrix::<Complex64>::zeros(k, k);
    let i = Complex64::new(0.0, 1.0);
    for b in mats {
        let adj = b.adjoint();
        let c: f64 = rng.gen_range(-1.0..1.0);
        let d: f64 = rng.gen_range(-1.0..1.0);
        h += (b + &adj) * Complex64::new(c, 0.0) + (b - &adj) * (i * d);
    }
    h
}

fn separated(values: &DVector<f64>) -> bool {
    let mut v: Vec<f64> = values.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    v.windows(2).all(|w| w[1] - w[0] > GAP)
}

/// Numerical irreducible characters, one row per eigenvector.
fn numeric_rows(g: &PermGroup) -> Result<Vec<Vec<Complex64>>> {
    let info = g.class_info()?;
    let mats = multiplication_matrices(g)?;
    let order = g.order() as f64;
    for seed in 0..ATTEMPTS {
        let eig = SymmetricEigen::new(generic_hermitian(&mats, seed));
        if !separated(&eig.eigenvalues) {
            continue;
        }
        let mut rows = Vec::new();
        for col in eig.eigenvectors.column_iter() {
            let v0 = col[0];
            if v0.norm() < 1e-9 {
                return Err(inconsistent("central idempotent with no identity component"));
            }
            let ratios: Vec<Complex64> = col
                .iter()
                .zip(info.classes())
                .map(|(vj, c)| (vj / v0).conj() / (c.size as f64).sqrt())
                .collect();
            let norm: f64 = ratios
                .iter()
                .zip(info.classes())
                .map(|(r, c)| r.norm_sqr() * c.size as f64)
                .sum();
            let d = (order / norm).sqrt();
            rows.push(ratios.into_iter().map(|r| r * d).collect());
        }
        return Ok(rows);
    }
    Err(inconsistent("no separating combination of class operators found"))
}

fn exponent(g: &PermGroup) -> Result<u64> {
    Ok(g.class_info()?
        .classes()
        .iter()
        .fold(1, |acc, c| acc.lcm(&c.element_order())))
}

/// Exact value from the numbers `σ_t(z)`, `t` prime to `e`.
fn exact_value(e: u64, units: &[u64], conjugates: &[Complex64]) -> Result<Cyclotomic> {
    let phi = units.len();
    let tau = std::f64::consts::TAU;
    let w = DMatrix::from_fn(phi, phi, |r, c| {
        Complex64::from_polar(1.0, tau * (units[r] * c as u64) as f64 / e as f64)
    });
    let y = DVector::from_column_slice(conjugates);
    let a = w.lu().solve(&y).ok_or_else(|| inconsistent("singular Galois system"))?;
    let mut coeffs = Vec::with_capacity(phi);
    for z in a.iter() {
        let r = z.re.round();
        if (z.re - r).abs() > ROUNDING || z.im.abs() > ROUNDING {
            return Err(inconsistent(format!("coordinate {z} is not close to an integer")));
        }
        coeffs.push(Rational64::from_integer(r as i64));
    }
    Cyclotomic::from_power_coeffs(e as u32, &coeffs)
}

/// The irreducible characters of `g`, computed without the modular algorithm.
///
/// The result is checked exactly: the rows are orthonormal, there is one per
/// class, and their degrees square-sum to `|G|`.
pub fn oracle_table(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    g.check_capacity()?;
    let info = g.class_info()?.clone();
    let e = exponent(g)?;
    let units: Vec<u64> = (0..e).filter(|t| t.gcd(&e) == 1).collect();
    let powers: Vec<Vec<usize>> = info
        .classes()
        .iter()
        .map(|c| {
            units
                .iter()
                .map(|&t| {
                    info.class_of(&c.representative.pow(t))
                        .expect("powers stay in the group")
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for row in numeric_rows(g)? {
        let values = powers
            .iter()
            .map(|p| {
                let conj: Vec<Complex64> = p.iter().map(|&c| row[c]).collect();
                exact_value(e, &units, &conj)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(ClassFunction::new(g, values)?);
    }
    verify_rows(g, &out)?;
    Ok(out)
}

fn verify_rows(g: &PermGroup, rows: &[ClassFunction]) -> Result<()> {
    let k = g.class_info()?.len();
    if rows.len() != k {
        return Err(inconsistent("oracle row count differs from the class count"));
    }
    let mut squares = 0i64;
    for (i, a) in rows.iter().enumerate() {
        squares += a.degree() * a.degree();
        for b in &rows[i..] {
            let want = if std::ptr::eq(a, b) { 1 } else { 0 };
            if !a.inner_product(b)?.eq_int(want) {
                return Err(inconsistent("oracle rows are not orthonormal"));
            }
        }
    }
    if squares as u64 != g.order() {
        return Err(inconsistent("oracle degrees do not square-sum to |G|"));
    }
    Ok(())
}

/// The table's rows are exactly the oracle's, in some order.
pub fn matches_table(table: &CharacterTable) -> Result<bool> {
    let oracle = oracle_table(table.group())?;
    let rows = table.irreducibles();
    Ok(rows.len() == oracle.len() && oracle.iter().all(|r| rows.contains(r)))
}
