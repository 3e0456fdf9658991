//! Integer-relation detection by exact integral LLL reduction.
//!
//! The lattice spanned by rows [e_i | K*x_i] is reduced with the all-integer
//! LLL variant (scaled Gram-Schmidt data lambda_{i,j}, d_i), so no floating
//! point enters the reduction itself. Candidate short vectors are then
//! re-checked against the caller's residual and height bounds before being
//! returned, which keeps the postcondition exact regardless of scaling
//! heuristics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::real::{div_round, BigReal};

/// Exact LLL (delta = 3/4) on integer row vectors. Rows are reduced in place
/// and returned; dimension is expected to stay small (<= 16).
pub fn lll_reduce(mut basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = basis.len();
    if n <= 1 {
        return basis;
    }
    let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    };

    // d[i] = det of the i-th leading Gram block (d[0] = 1), lambda scaled GS
    let mut d: Vec<BigInt> = vec![BigInt::from(1); n + 1];
    let mut lambda = vec![vec![BigInt::zero(); n]; n];
    let mut kmax = 0usize;
    d[1] = dot(&basis[0], &basis[0]);

    let mut k = 1usize;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lambda[k][i] * &lambda[j][i]) / &d[i];
                }
                if j < k {
                    lambda[k][j] = u;
                } else {
                    d[k + 1] = u;
                    assert!(
                        !d[k + 1].is_zero(),
                        "linearly dependent rows in LLL input"
                    );
                }
            }
        }
        loop {
            reduce_row(&mut basis, &mut lambda, &d, k, k - 1);
            // Lovasz condition with delta = 3/4:
            // d[k+1] d[k-1] >= (3/4) d[k]^2 - lambda^2
            let lhs = BigInt::from(4) * &d[k + 1] * &d[k - 1];
            let rhs = BigInt::from(3) * &d[k] * &d[k] - BigInt::from(4) * &lambda[k][k - 1] * &lambda[k][k - 1];
            if lhs < rhs {
                swap_rows(&mut basis, &mut lambda, &mut d, k, kmax);
                k = k.max(2) - 1;
            } else {
                for l in (0..k.saturating_sub(1)).rev() {
                    reduce_row(&mut basis, &mut lambda, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    basis
}

fn reduce_row(
    basis: &mut [Vec<BigInt>],
    lambda: &mut [Vec<BigInt>],
    d: &[BigInt],
    k: usize,
    l: usize,
) {
    let two_lam: BigInt = lambda[k][l].clone() * 2;
    if two_lam.abs() <= d[l + 1].abs() {
        return;
    }
    let q = div_round(&lambda[k][l], &d[l + 1]);
    if q.is_zero() {
        return;
    }
    let bl = basis[l].clone();
    for (x, y) in basis[k].iter_mut().zip(&bl) {
        *x -= &q * y;
    }
    for i in 0..l {
        let v = &lambda[l][i] * &q;
        lambda[k][i] -= v;
    }
    lambda[k][l] -= &q * &d[l + 1];
}

fn swap_rows(
    basis: &mut [Vec<BigInt>],
    lambda: &mut [Vec<BigInt>],
    d: &mut [BigInt],
    k: usize,
    kmax: usize,
) {
    basis.swap(k, k - 1);
    for j in 0..k.saturating_sub(1) {
        let tmp = lambda[k][j].clone();
        lambda[k][j] = lambda[k - 1][j].clone();
        lambda[k - 1][j] = tmp;
    }
    let lam = lambda[k][k - 1].clone();
    let b: BigInt = (&d[k - 1] * &d[k + 1] + &lam * &lam) / &d[k];
    for i in (k + 1)..=kmax {
        let t = lambda[i][k].clone();
        lambda[i][k] = (&d[k + 1] * &lambda[i][k - 1] - &lam * &t) / &d[k];
        let updated = (&b * &t + &lam * &lambda[i][k]) / &d[k + 1];
        lambda[i][k - 1] = updated;
    }
    d[k] = b;
}

/// Nonzero integer vector m with |sum m_i x_i| <= tol and max |m_i| <=
/// height_bound, found by LLL on the scaled-relation lattice; `None` when
/// the reduction produces nothing within the bounds.
pub fn integer_relation(
    xs: &[BigReal],
    height_bound: &BigInt,
    tol: &BigRational,
) -> Option<Vec<BigInt>> {
    assert!(!xs.is_empty(), "need at least one value");
    assert!(tol.is_positive());
    let n = xs.len();
    let bits = xs[0].bits();

    // relation column scale: large enough that tol-sized residuals stay
    // comparable to the identity block after reduction
    let margin = BigInt::from(1) << 64u32;
    let k_scale = &margin * height_bound * BigInt::from(n as u64) * tol.denom() / tol.numer();

    let column: Vec<BigInt> = xs
        .iter()
        .map(|x| {
            let r = x.to_rational();
            div_round(&(r.numer() * &k_scale), r.denom())
        })
        .collect();

    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n + 1];
        row[i] = BigInt::from(1);
        row[n] = column[i].clone();
        rows.push(row);
    }
    let reduced = lll_reduce(rows);

    // accept the first reduced vector that satisfies the *exact* bounds
    let mut best: Option<(BigReal, Vec<BigInt>)> = None;
    for row in &reduced {
        let m = &row[..n];
        if m.iter().all(|c| c.is_zero()) {
            continue;
        }
        if m.iter().any(|c| c.abs() > *height_bound) {
            continue;
        }
        let mut resid = BigReal::zero(bits);
        for (c, x) in m.iter().zip(xs) {
            resid += &x.mul_rational(&BigRational::from(c.clone()));
        }
        let resid = resid.abs();
        if resid.to_rational() <= *tol {
            match &best {
                Some((r, _)) if *r <= resid => {}
                _ => best = Some((resid, m.to_vec())),
            }
        }
    }
    best.map(|(_, m)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants;
    use crate::numerics::PrecisionContext;

    fn bits() -> u32 {
        PrecisionContext::new(60).bits()
    }

    fn tol(exp: u32) -> BigRational {
        PrecisionContext::pow10_neg(exp)
    }

    #[test]
    fn finds_one_minus_two_halves() {
        let b = bits();
        let xs = vec![
            BigReal::from_i64(1, b),
            BigReal::from_ratio(&BigInt::from(1), &BigInt::from(2), b),
        ];
        let m = integer_relation(&xs, &BigInt::from(10), &tol(30)).unwrap();
        let normalized: Vec<i64> = if m[0].is_negative() {
            m.iter().map(|c| (-c).to_i64().unwrap()).collect()
        } else {
            m.iter().map(|c| c.to_i64().unwrap()).collect()
        };
        assert_eq!(normalized, vec![1, -2]);
    }

    #[test]
    fn finds_sqrt2_relation_vs_exhaustive_oracle() {
        let b = bits();
        let sqrt2 = BigReal::from_i64(2, b).sqrt();
        let xs = vec![
            BigReal::from_i64(1, b),
            sqrt2.clone(),
            &BigReal::from_i64(1, b) + &sqrt2,
        ];
        let m = integer_relation(&xs, &BigInt::from(10), &tol(30)).unwrap();
        // oracle: exhaustively search heights <= 10 for the minimal relation
        let mut oracle_hit = false;
        'outer: for a in -10i64..=10 {
            for c in -10i64..=10 {
                for e in -10i64..=10 {
                    if (a, c, e) == (0, 0, 0) {
                        continue;
                    }
                    let mut s = BigReal::from_i64(a, b);
                    s += &xs[1].mul_i64(c);
                    s += &xs[2].mul_i64(e);
                    if s.abs().to_rational() <= tol(30) {
                        oracle_hit = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(oracle_hit, "oracle must confirm a relation exists");
        // returned relation must be (1,1,-1) up to sign
        let v: Vec<i64> = m.iter().map(|c| c.to_i64().unwrap()).collect();
        assert!(v == vec![1, 1, -1] || v == vec![-1, -1, 1], "got {v:?}");
    }

    #[test]
    fn no_relation_for_pi_at_height_100() {
        let b = bits();
        let xs = vec![BigReal::from_i64(1, b), constants::pi(b)];
        let m = integer_relation(&xs, &BigInt::from(100), &tol(30));
        assert!(m.is_none());
        // brute-force oracle over heights <= 100: nothing vanishes at 1e-30
        let pi = constants::pi(b);
        for a in -100i64..=100 {
            for c in -100i64..=100 {
                if (a, c) == (0, 0) {
                    continue;
                }
                let s = (&BigReal::from_i64(a, b) + &pi.mul_i64(c)).abs();
                assert!(s.to_rational() > tol(30));
            }
        }
    }

    #[test]
    fn never_returns_zero_vector() {
        let b = bits();
        let xs = vec![BigReal::zero(b), BigReal::zero(b)];
        if let Some(m) = integer_relation(&xs, &BigInt::from(5), &tol(10)) {
            assert!(m.iter().any(|c| !c.is_zero()));
        }
    }
}
