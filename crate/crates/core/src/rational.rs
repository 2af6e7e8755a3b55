//! Exact rational parsing and dense linear algebra over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Q::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac.is_empty())
        {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let mag: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = Q::new(mag, den);
        return Ok(if neg { -v } else { v });
    }
    let p: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(p))
}

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (head, tail) = rows.split_at_mut(r.max(i));
                let (src, dst) = if i < r {
                    (&tail[0], &mut head[i])
                } else {
                    (&head[r], &mut tail[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Rank of the matrix whose columns are `cols`.
pub fn column_rank(cols: &[&[Q]]) -> usize {
    rank(&transpose(cols))
}

pub fn transpose(cols: &[&[Q]]) -> Vec<Vec<Q>> {
    let d = cols.first().map_or(0, |c| c.len());
    (0..d)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Basis of the null space `{x : A x = 0}` where `A` has the given rows and `ncols` columns.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Dependency among the given columns, if their null space is one-dimensional.
pub fn unique_dependency(cols: &[&[Q]]) -> Option<Vec<Q>> {
    let rows = transpose(cols);
    let mut k = kernel(&rows, cols.len());
    (k.len() == 1).then(|| k.pop().unwrap())
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q_int(x)).collect()
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), Q::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-1.25").unwrap(), Q::new((-5).into(), 4.into()));
        assert_eq!(parse_rational(" 7 ").unwrap(), q_int(7));
        assert_eq!(parse_rational(".5").unwrap(), Q::new(1.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn rank_and_kernel() {
        let a = v(&[1, -1, 0]);
        let b = v(&[0, 1, -1]);
        let c = v(&[1, 0, -1]);
        assert_eq!(column_rank(&[&a, &b, &c]), 2);
        let dep = unique_dependency(&[&a, &b, &c]).unwrap();
        // a + b - c = 0
        assert_eq!(sign(&dep[0]), sign(&dep[1]));
        assert_eq!(sign(&dep[0]), -sign(&dep[2]));
        assert!(unique_dependency(&[&a, &b]).is_none());
    }

    #[test]
    fn kernel_vectors_are_in_null_space() {
        let rows = vec![v(&[1, 2, 3, 4]), v(&[2, 4, 6, 8]), v(&[0, 1, 1, 0])];
        let k = kernel(&rows, 4);
        assert_eq!(k.len(), 2);
        for x in &k {
            for r in &rows {
                assert!(dot(r, x).is_zero());
            }
        }
    }
}
