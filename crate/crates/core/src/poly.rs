//! Univariate polynomials over the rationals.
//!
//! Just enough algebra for spectral questions about rational matrices:
//! characteristic polynomials, gcds, Sturm root counting, and exact rational
//! root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactla::{format_scalar, int, Matrix, Scalar};

/// Coefficients in ascending degree order with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `x - a`.
    pub fn linear_root(a: &Scalar) -> Self {
        Self::new(vec![-a.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(n).scale(c));
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &Scalar) -> Poly {
        let step = Poly::new(vec![a.clone(), Scalar::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.lead().unwrap().recip();
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut q = vec![Scalar::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let f = &r[k + dd] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, p: &Poly) -> bool {
        p.rem(self).is_zero()
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g` and `g` the monic gcd.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lead().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
        }
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.exact_div(&g).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        Poly::gcd(self, &self.derivative()).degree() == Some(0)
    }

    /// Splits off the largest power of `x`: returns `(q, k)` with `p = x^k q`.
    pub fn strip_zero_roots(&self) -> (Poly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Poly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()), k)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// For an even polynomial `p(x) = D(x^2)`, returns `D`.
    pub fn even_to_square_variable(&self) -> Option<Poly> {
        self.is_even()
            .then(|| Poly::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Standard Sturm sequence `p, p', -rem(..), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while let Some(last) = seq.last().filter(|p| !p.is_zero()) {
            let prev = &seq[seq.len() - 2];
            let r = -&prev.rem(last);
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq.retain(|p| !p.is_zero());
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    /// `None` stands for the corresponding infinity.
    pub fn count_real_roots(&self, lo: Option<&Scalar>, hi: Option<&Scalar>) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.squarefree_part().sturm_sequence();
        let at_lo = sign_changes(&seq, lo, false);
        let at_hi = sign_changes(&seq, hi, true);
        at_lo.saturating_sub(at_hi)
    }

    /// All rational roots, ascending, without multiplicity.
    ///
    /// Roots are isolated by Sturm bisection down to intervals narrower than
    /// `1/|a_n|` of the primitive integer form; each such interval holds at
    /// most one candidate `k/|a_n|`, which is then tested exactly.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let (rest, zeros) = self.strip_zero_roots();
        let mut roots = Vec::new();
        if zeros > 0 {
            roots.push(Scalar::zero());
        }
        if rest.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let p = rest.squarefree_part().primitive_integer_form();
        let lead = p.lead().unwrap().abs();
        let bound = Scalar::one()
            + p.coeffs
                .iter()
                .map(|c| c.abs() / &lead)
                .max()
                .unwrap_or_else(Scalar::zero);
        let seq = p.sturm_sequence();
        let count = |lo: &Scalar, hi: &Scalar| {
            sign_changes(&seq, Some(lo), false).saturating_sub(sign_changes(&seq, Some(hi), true))
        };
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            if count(&lo, &hi) == 0 {
                continue;
            }
            if (&hi - &lo) * &lead < Scalar::one() {
                let k = (&hi * &lead).floor();
                let cand = k / &lead;
                if cand > lo && p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
                continue;
            }
            let mid = (&lo + &hi) / int(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Same roots, integer coefficients with content 1 and positive lead.
    pub fn primitive_integer_form(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Poly::new(ints.into_iter().map(|c| Scalar::from_integer(c / &g)).collect())
    }

    /// Power sums `p_k = sum of k-th powers of the roots` for `k = 0..=m`.
    pub fn power_sums(&self, m: usize) -> Vec<Scalar> {
        let p = self.monic();
        let d = p.degree().unwrap_or(0);
        // e_k with a_{d-k} = (-1)^k e_k
        let e: Vec<Scalar> = (0..=d)
            .map(|k| {
                let a = p.coeff(d - k);
                if k % 2 == 0 {
                    a
                } else {
                    -a
                }
            })
            .collect();
        let mut ps = vec![int(d as i64)];
        for k in 1..=m {
            let mut s = Scalar::zero();
            for i in 1..k {
                if i > d {
                    break;
                }
                let term = &e[i] * &ps[k - i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            if k <= d {
                let term = &e[k] * int(k as i64);
                if k % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            ps.push(s);
        }
        ps
    }

    /// Monic polynomial of degree `d` whose roots have the given power sums
    /// `p_1..p_d` (index 0 is ignored).
    pub fn from_power_sums(d: usize, ps: &[Scalar]) -> Poly {
        let mut e = vec![Scalar::one()];
        for k in 1..=d {
            let mut s = Scalar::zero();
            for i in 1..=k {
                let term = &e[k - i] * &ps[i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            e.push(s / int(k as i64));
        }
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (k, ek) in e.iter().enumerate() {
            coeffs[d - k] = if k % 2 == 0 { ek.clone() } else { -ek.clone() };
        }
        Poly::new(coeffs)
    }

    /// Monic polynomial whose roots are `λ_j + λ_k` over all ordered pairs of
    /// roots of `self`, computed through power sums.
    pub fn pairwise_sum_poly(&self) -> Poly {
        let d = self.degree().unwrap_or(0);
        let big = d * d;
        let ps = self.power_sums(big);
        let binom = binomials(big);
        let sums: Vec<Scalar> = (0..=big)
            .map(|m| (0..=m).fold(Scalar::zero(), |acc, t| acc + &binom[m][t] * &ps[t] * &ps[m - t]))
            .collect();
        Poly::from_power_sums(big, &sums)
    }
}

fn binomials(n: usize) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![Scalar::one(); m + 1];
        for t in 1..m {
            row[t] = &prev[t - 1] + &prev[t];
        }
        rows.push(row);
    }
    rows
}

fn sign_at(p: &Poly, x: Option<&Scalar>, plus_infinity: bool) -> i8 {
    let s = match x {
        Some(x) => p.eval(x),
        None => {
            let l = p.lead().cloned().unwrap_or_else(Scalar::zero);
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !plus_infinity && odd {
                -l
            } else {
                l
            }
        }
    };
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(seq: &[Poly], x: Option<&Scalar>, plus_infinity: bool) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| sign_at(p, x, plus_infinity))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Characteristic polynomial `det(x I - m)` by Faddeev–LeVerrier.
pub fn charpoly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        coeffs[n - k] = -m.mul(&mk).trace() / int(k as i64);
    }
    Poly::new(coeffs)
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = format_scalar(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}
