//! Closed forms for the Catalan-type number families.
//!
//! Everything here is exact. Binomials use the multiplicative formula with a
//! division at every step, so intermediates never exceed the final value by
//! more than a factor of `k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        // acc is now binom(n, i+1) * (i+1), so this division is exact.
        acc /= i + 1;
    }
    acc
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `C_0..=C_{n_max}` from the convolution `C_n = sum C_i C_{n-1-i}`.
pub fn catalan_by_convolution(n_max: u64) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..=n_max as usize {
        let next = (0..n).map(|i| &out[i] * &out[n - 1 - i]).sum();
        out.push(next);
    }
    out
}

/// The Fuss-Catalan number `C_{n,k} = binom(n(k+1), n) / (kn + 1)`.
pub fn fuss_catalan(n: u64, k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParameter("fuss-catalan needs k >= 1".into()));
    }
    Ok(binomial(n * (k + 1), n) / (k * n + 1))
}

/// Entry `C(n, k) = (n - k + 1)/(n + 1) * binom(n + k, k)` of Catalan's triangle.
pub fn catalan_triangle(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "triangle entry C({n},{k}) needs k <= n"
        )));
    }
    Ok(binomial(n + k, k) * (n - k + 1) / (n + 1))
}

/// The weak `(a,b)`-Catalan number `(a+b-1)! / (a! b!)`, in lowest terms.
pub fn weak_cat(a: u64, b: u64) -> Result<BigRational> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidParameter("cat(0,0) is undefined".into()));
    }
    // (a+b-1)!/(a!b!) = binom(a+b, a) / (a+b)
    Ok(BigRational::new(
        BigInt::from(binomial(a + b, a)),
        BigInt::from(a + b),
    ))
}

/// The `(a,b)`-Catalan number for coprime `a`, `b`; always an integer.
pub fn strict_cat(a: u64, b: u64) -> Result<BigUint> {
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let value = weak_cat(a, b)?;
    assert!(
        value.is_integer(),
        "cat({a},{b}) = {value} for coprime inputs"
    );
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("weak_cat is non-negative"))
}

/// Row `a` of the fraction table: `cat(a, b) = C(a-1, b) / (a - b)` for `a > b`.
///
/// The pair is returned unreduced so that every entry of a diagonal shares
/// its denominator.
pub fn ab_fraction(a: u64, b: u64) -> Result<(BigUint, u64)> {
    if a <= b {
        return Err(Error::InvalidParameter(format!(
            "fraction form of cat({a},{b}) needs a > b"
        )));
    }
    Ok((catalan_triangle(a - 1, b)?, a - b))
}

/// Internal triangles of an `(n+2)`-gon, `t(n) = 2 binom(2n-3, n-4)`.
///
/// Total: `n < 4` gives 0.
pub fn internal_triangles(n: u64) -> BigUint {
    if n < 4 {
        return BigUint::zero();
    }
    binomial(2 * n - 3, n - 4) * 2u32
}

/// `t(n)` through `(n+2) C_{n-1} - 2 C_n`; defined for `n >= 2`.
pub fn internal_triangles_by_catalan(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "catalan form of t(n) needs n >= 2".into(),
        ));
    }
    Ok(catalan(n - 1) * (n + 2) - catalan(n) * 2u32)
}

/// Super Catalan number `S(m,n) = (2m)!(2n)! / (m! n! (m+n)!)`.
pub fn super_catalan(m: u64, n: u64) -> BigUint {
    // binom(2m,m) binom(2n,n) / binom(m+n,m) is the same quotient
    binomial(2 * m, m) * binomial(2 * n, n) / binomial(m + n, m)
}

/// A named integer sequence `s_0, s_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    Catalan,
    Fuss(u64),
    /// Row `n` of Catalan's triangle, `C(n,0..=n)`; finite.
    TriangleRow(u64),
    /// Column `k`, `C(k+j, k)` for `j = 0, 1, ...`.
    TriangleColumn(u64),
    /// Diagonal `i`, `C(i+k, k)`; `i = 0` is the Catalan diagonal.
    TriangleDiagonal(u64),
    /// `1, t(4), t(5), ...`: the root term followed by the internal-triangle counts.
    InternalTriangles,
    SuperCatalanRow(u64),
    Explicit(Vec<BigUint>),
}

impl SequenceSpec {
    pub fn explicit(values: Vec<BigUint>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "explicit sequences need at least one term".into(),
            ));
        }
        Ok(SequenceSpec::Explicit(values))
    }

    /// Number of terms available, or `None` for infinite families.
    pub fn len_limit(&self) -> Option<usize> {
        match self {
            SequenceSpec::TriangleRow(n) => Some(*n as usize + 1),
            SequenceSpec::Explicit(values) => Some(values.len()),
            _ => None,
        }
    }

    pub fn term(&self, i: u64) -> Result<BigUint> {
        if let Some(limit) = self.len_limit() {
            if i as usize >= limit {
                return Err(Error::NotEnoughTerms {
                    requested: i as usize + 1,
                    available: limit,
                });
            }
        }
        match self {
            SequenceSpec::Catalan => Ok(catalan(i)),
            SequenceSpec::Fuss(k) => fuss_catalan(i, *k),
            SequenceSpec::TriangleRow(n) => catalan_triangle(*n, i),
            SequenceSpec::TriangleColumn(k) => catalan_triangle(k + i, *k),
            SequenceSpec::TriangleDiagonal(d) => catalan_triangle(d + i, i),
            SequenceSpec::InternalTriangles if i == 0 => Ok(BigUint::one()),
            SequenceSpec::InternalTriangles => Ok(internal_triangles(i + 3)),
            SequenceSpec::SuperCatalanRow(m) => Ok(super_catalan(*m, i)),
            SequenceSpec::Explicit(values) => Ok(values[i as usize].clone()),
        }
    }
}

/// The first `count` terms of `spec`.
pub fn sequence_values(spec: &SequenceSpec, count: usize) -> Result<Vec<BigUint>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    if let SequenceSpec::Fuss(0) = spec {
        return Err(Error::InvalidParameter("fuss-catalan needs k >= 1".into()));
    }
    if let Some(limit) = spec.len_limit() {
        if count > limit {
            return Err(Error::NotEnoughTerms {
                requested: count,
                available: limit,
            });
        }
    }
    (0..count as u64).map(|i| spec.term(i)).collect()
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Catalan => write!(f, "catalan"),
            SequenceSpec::Fuss(k) => write!(f, "fuss:{k}"),
            SequenceSpec::TriangleRow(n) => write!(f, "triangle-row:{n}"),
            SequenceSpec::TriangleColumn(k) => write!(f, "triangle-column:{k}"),
            SequenceSpec::TriangleDiagonal(i) => write!(f, "triangle-diagonal:{i}"),
            SequenceSpec::InternalTriangles => write!(f, "internal-triangles"),
            SequenceSpec::SuperCatalanRow(m) => write!(f, "super-catalan:{m}"),
            SequenceSpec::Explicit(values) => {
                let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;

    /// Accepts a family name (`catalan`, `fuss:K`, `triangle-row:N`,
    /// `triangle-column:K`, `triangle-diagonal:I`, `internal-triangles`,
    /// `super-catalan[:M]`) or a comma separated list of integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let param = |what: &str| -> Result<u64> {
            let arg = arg.ok_or_else(|| {
                Error::InvalidParameter(format!("{name} needs a parameter, e.g. {name}:2"))
            })?;
            arg.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad {what} {arg:?} for {name}")))
        };
        match name {
            "catalan" => Ok(SequenceSpec::Catalan),
            "fuss" => {
                let k = param("k")?;
                if k == 0 {
                    return Err(Error::InvalidParameter("fuss-catalan needs k >= 1".into()));
                }
                Ok(SequenceSpec::Fuss(k))
            }
            "triangle-row" => Ok(SequenceSpec::TriangleRow(param("row")?)),
            "triangle-column" => Ok(SequenceSpec::TriangleColumn(param("column")?)),
            "triangle-diagonal" => Ok(SequenceSpec::TriangleDiagonal(param("diagonal")?)),
            "internal-triangles" => Ok(SequenceSpec::InternalTriangles),
            "super-catalan" if arg.is_none() => Ok(SequenceSpec::SuperCatalanRow(0)),
            "super-catalan" => Ok(SequenceSpec::SuperCatalanRow(param("row")?)),
            _ => {
                let values = s
                    .split(',')
                    .map(|t| t.trim().parse::<BigUint>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| {
                        Error::InvalidParameter(format!(
                            "unknown sequence {s:?}: expected a family name or a comma separated list"
                        ))
                    })?;
                SequenceSpec::explicit(values)
            }
        }
    }
}
