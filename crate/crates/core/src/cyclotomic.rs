//! Exact arithmetic in `Z[ζ_n]` for prime-power conductors `n`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` after
//! reduction modulo `Φ_n(x) = Σ_{i<p} x^{i·p^{k-1}}`. This basis is integral,
//! so the representation is canonical and division by a rational integer is
//! coefficient-wise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("conductor {0} is not 1 or a prime power")]
    UnsupportedConductor(u32),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("value is not a rational integer: {0}")]
    NotRationalInteger(String),
    #[error("value {value} is not divisible by {divisor}")]
    NotDivisible { value: String, divisor: i64 },
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
}

/// The ring `Z[ζ_n]` for `n = p^k` (or `n = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Conductor {
    n: u32,
    /// `n / p`, the spacing of the terms of `Φ_n`
    step: u32,
    /// `φ(n)`
    phi: u32,
}

impl Conductor {
    pub fn new(n: u32) -> Result<Self, CycError> {
        if n == 1 {
            return Ok(Conductor {
                n: 1,
                step: 1,
                phi: 1,
            });
        }
        let p = crate::group::prime_of_power(n as usize).ok_or(CycError::UnsupportedConductor(n))?
            as u32;
        let step = n / p;
        Ok(Conductor {
            n,
            step,
            phi: (p - 1) * step,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi as usize
    }

    /// Coefficients of `Φ_n(x)`, lowest degree first.
    pub fn cyclotomic_polynomial(&self) -> Vec<i64> {
        if self.n == 1 {
            return vec![-1, 1];
        }
        let mut c = vec![0; self.phi() + 1];
        for i in 0..=(self.phi / self.step) {
            c[(i * self.step) as usize] = 1;
        }
        c
    }

    /// Reduces a vector indexed by powers of ζ modulo `x^n - 1` into canonical
    /// coordinates. `buf` must have length `n`.
    fn reduce(&self, mut buf: Vec<i64>) -> CycInt {
        debug_assert_eq!(buf.len(), self.n as usize);
        let (phi, step) = (self.phi as usize, self.step as usize);
        if self.n > 1 {
            // x^{φ + r} = -Σ_{i < p-1} x^{i·step + r} for 0 ≤ r < step
            for j in phi..buf.len() {
                let c = std::mem::take(&mut buf[j]);
                if c != 0 {
                    let r = j - phi;
                    let mut k = r;
                    while k < phi {
                        buf[k] -= c;
                        k += step;
                    }
                }
            }
        }
        buf.truncate(phi);
        CycInt {
            cond: *self,
            coeffs: buf,
        }
    }

    pub fn zero(&self) -> CycInt {
        CycInt {
            cond: *self,
            coeffs: vec![0; self.phi()],
        }
    }

    pub fn int(&self, c: i64) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    pub fn one(&self) -> CycInt {
        self.int(1)
    }

    /// `ζ_n^k`, with `k` reduced modulo `n`.
    pub fn zeta_pow(&self, k: i64) -> CycInt {
        let n = self.n as usize;
        let mut buf = vec![0; n];
        buf[k.rem_euclid(n as i64) as usize] = 1;
        self.reduce(buf)
    }

    pub fn from_coeffs(&self, coeffs: Vec<i64>) -> Result<CycInt, CycError> {
        if coeffs.len() != self.phi() {
            return Err(CycError::BadLength {
                got: coeffs.len(),
                expected: self.phi(),
            });
        }
        Ok(CycInt {
            cond: *self,
            coeffs,
        })
    }

    pub fn accumulator(&self) -> Accumulator {
        Accumulator {
            cond: *self,
            buf: vec![0; self.n as usize],
        }
    }
}

/// `ζ_n^k` shorthand for a conductor given by its integer value.
pub fn zeta_pow(n: u32, k: i64) -> Result<CycInt, CycError> {
    Ok(Conductor::new(n)?.zeta_pow(k))
}

/// An element of `Z[ζ_n]` in canonical power-basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CycIntRepr", try_from = "CycIntRepr")]
pub struct CycInt {
    cond: Conductor,
    coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct CycIntRepr {
    n: u32,
    coeffs: Vec<i64>,
}

impl From<CycInt> for CycIntRepr {
    fn from(c: CycInt) -> Self {
        CycIntRepr {
            n: c.cond.n,
            coeffs: c.coeffs,
        }
    }
}

impl TryFrom<CycIntRepr> for CycInt {
    type Error = CycError;

    fn try_from(r: CycIntRepr) -> Result<Self, CycError> {
        Conductor::new(r.n)?.from_coeffs(r.coeffs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl CycInt {
    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_ring(&self, other: &CycInt) -> Result<(), CycError> {
        if self.cond != other.cond {
            return Err(CycError::ConductorMismatch(self.cond.n, other.cond.n));
        }
        Ok(())
    }

    pub fn arith(&self, other: &CycInt, op: ArithOp) -> Result<CycInt, CycError> {
        self.same_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.zip_with(other, |a, b| a + b),
            ArithOp::Sub => self.zip_with(other, |a, b| a - b),
            ArithOp::Mul => {
                let mut acc = self.cond.accumulator();
                acc.add_product(self, other, 1);
                acc.finish()
            }
        })
    }

    fn zip_with(&self, other: &CycInt, f: impl Fn(i64, i64) -> i64) -> CycInt {
        CycInt {
            cond: self.cond,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Image under complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conjugate(&self) -> CycInt {
        let n = self.cond.n as usize;
        let mut buf = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            buf[(n - i) % n] += c;
        }
        self.cond.reduce(buf)
    }

    pub fn as_integer(&self) -> Result<i64, CycError> {
        if self.coeffs[1..].iter().any(|&c| c != 0) {
            return Err(CycError::NotRationalInteger(self.to_string()));
        }
        Ok(self.coeffs[0])
    }

    pub fn exact_div_int(&self, m: i64) -> Result<CycInt, CycError> {
        assert!(m >= 1, "divisor must be positive");
        if self.coeffs.iter().any(|&c| c % m != 0) {
            return Err(CycError::NotDivisible {
                value: self.to_string(),
                divisor: m,
            });
        }
        Ok(CycInt {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|&c| c / m).collect(),
        })
    }

    /// Floating-point value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.cond.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, &c)| {
                let t = std::f64::consts::TAU * i as f64 / n;
                (re + c as f64 * t.cos(), im + c as f64 * t.sin())
            })
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}z"),
                _ => format!("{c}z^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; n={}]", self, self.cond.n)
    }
}

// Operator forms panic on conductor mismatch; use `arith` for a checked version.
impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.arith(rhs, ArithOp::Add).expect("conductor mismatch")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.arith(rhs, ArithOp::Sub).expect("conductor mismatch")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.arith(rhs, ArithOp::Mul).expect("conductor mismatch")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

/// Sums of products in the redundant basis `Z[x]/(x^n - 1)`, reduced once
/// at the end.
#[derive(Clone, Debug)]
pub struct Accumulator {
    cond: Conductor,
    buf: Vec<i64>,
}

impl Accumulator {
    pub fn add(&mut self, a: &CycInt, scale: i64) {
        debug_assert_eq!(a.cond, self.cond);
        for (b, &c) in self.buf.iter_mut().zip(&a.coeffs) {
            *b += c * scale;
        }
    }

    pub fn add_zeta(&mut self, k: i64, scale: i64) {
        let n = self.buf.len() as i64;
        self.buf[k.rem_euclid(n) as usize] += scale;
    }

    /// `self += scale · a · b`
    pub fn add_product(&mut self, a: &CycInt, b: &CycInt, scale: i64) {
        debug_assert_eq!(a.cond, self.cond);
        debug_assert_eq!(b.cond, self.cond);
        let n = self.buf.len();
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x * scale;
            for (j, &y) in b.coeffs.iter().enumerate() {
                let mut k = i + j;
                if k >= n {
                    k -= n;
                }
                self.buf[k] += x * y;
            }
        }
    }

    pub fn finish(self) -> CycInt {
        self.cond.reduce(self.buf)
    }
}
