//! Bivariate series in `z` and a marking variable `u`.
//!
//! A [`BivarSeries`] is a truncated series in `z` whose coefficients are
//! dense polynomials in `u` with exact rational entries. The generic engine
//! in [`crate::series`] provides the arithmetic; [`UPoly`] is the coefficient
//! ring. Only constant polynomials are units, which is exactly what the
//! closed-form computations need (they divide by series whose constant term
//! is a nonzero rational).

use std::fmt;

use crate::series::{int, CoeffRing, Rat, Series, TruncSeries};

/// Truncated series in `z` with polynomial-in-`u` coefficients.
pub type BivarSeries = TruncSeries<UPoly>;

/// Dense polynomial in `u` over exact rationals.
///
/// Normalized: no trailing zero coefficients; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| CoeffRing::is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `u`.
    pub fn u() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// Coefficient of `u^j`, zero-extended beyond the degree.
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(<Rat as CoeffRing>::zero)
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc: Rat = CoeffRing::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> Rat {
        let mut acc: Rat = CoeffRing::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// `d/du` evaluated at `u = 1`: the sum of `j * c_j`.
    pub fn derivative_at_one(&self) -> Rat {
        let mut acc: Rat = CoeffRing::zero();
        for (j, c) in self.coeffs.iter().enumerate().skip(1) {
            acc += c * int(j as i64);
        }
        acc
    }
}

impl CoeffRing for UPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(<Rat as CoeffRing>::one())
    }

    fn from_int(n: i64) -> Self {
        Self::from_coeffs(vec![int(n)])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j) + rhs.coeff(j));
        }
        Self::from_coeffs(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j) - rhs.coeff(j));
        }
        Self::from_coeffs(out)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![<Rat as CoeffRing>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if CoeffRing::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if CoeffRing::is_zero(b) {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Only nonzero constants are invertible in `Q[u]`.
    fn inv(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => Some(Self::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), <Rat as CoeffRing>::zero());
        }
        for (j, b) in rhs.coeffs.iter().enumerate() {
            self.coeffs[j] += b;
        }
        while self.coeffs.last().is_some_and(|c| CoeffRing::is_zero(c)) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*u")?,
                _ => write!(f, "{c}*u^{j}")?,
            }
        }
        Ok(())
    }
}

impl BivarSeries {
    /// Build from rows of integer `u`-coefficients, one row per `z`-degree
    /// starting at `z^0`, zero-filled up to `order`.
    pub fn from_int_rows(rows: &[&[i64]], order: usize) -> Self {
        assert!(rows.len() <= order + 1, "more rows than the order admits");
        let mut coeffs: Vec<UPoly> = rows.iter().map(|r| UPoly::from_ints(r)).collect();
        coeffs.resize(order + 1, UPoly::zero());
        Self::from_coeffs(coeffs)
    }

    /// Specialize `u = 1`.
    pub fn at_u_one(&self) -> Series {
        Series::from_coeffs(self.coeffs().iter().map(UPoly::eval_at_one).collect())
    }

    /// Specialize `u` to an arbitrary rational.
    pub fn at_u(&self, x: &Rat) -> Series {
        Series::from_coeffs(self.coeffs().iter().map(|p| p.eval(x)).collect())
    }

    /// `d/du` followed by `u = 1`, as a univariate series in `z`.
    pub fn diff_u_at_one(&self) -> Series {
        Series::from_coeffs(self.coeffs().iter().map(UPoly::derivative_at_one).collect())
    }

    /// Whether every coefficient polynomial has `u`-degree at most its
    /// `z`-degree. Holds for every counting series here, since each marked
    /// leaf is attached to at least one `z`.
    pub fn u_degree_bounded_by_z_degree(&self) -> bool {
        self.coeffs()
            .iter()
            .enumerate()
            .all(|(n, p)| p.degree().map_or(true, |d| d <= n))
    }
}

impl fmt::Display for BivarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.coeffs().iter().enumerate() {
            match n {
                0 => write!(f, "({p})")?,
                1 => write!(f, " + ({p})*z")?,
                _ => write!(f, " + ({p})*z^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn upoly_normalizes() {
        let p = UPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(UPoly::from_ints(&[0, 0]), UPoly::zero());
    }

    #[test]
    fn upoly_ring_ops() {
        let a = UPoly::from_ints(&[1, 1]); // 1 + u
        let b = UPoly::from_ints(&[1, -1]); // 1 - u
        assert_eq!(a.mul(&b), UPoly::from_ints(&[1, 0, -1]));
        assert_eq!(a.add(&b), UPoly::from_ints(&[2]));
        assert_eq!(a.sub(&a), UPoly::zero());
        assert_eq!(UPoly::from_ints(&[2]).inv(), Some(UPoly::constant(rat(1, 2))));
        assert_eq!(a.inv(), None);
    }

    #[test]
    fn upoly_evaluations() {
        let p = UPoly::from_ints(&[1, -2, 3]); // 1 - 2u + 3u^2
        assert_eq!(p.eval_at_one(), int(2));
        assert_eq!(p.derivative_at_one(), int(4)); // -2 + 6
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn bivar_specialization_matches_univariate() {
        // (1 + zu)^2 = 1 + 2zu + z^2 u^2
        let a = BivarSeries::from_int_rows(&[&[1], &[0, 1]], 2);
        let sq = a.mul(&a);
        assert_eq!(sq, BivarSeries::from_int_rows(&[&[1], &[0, 2], &[0, 0, 1]], 2));
        assert_eq!(sq.at_u_one(), Series::from_coeffs(vec![int(1), int(2), int(1)]));
        assert_eq!(sq.diff_u_at_one(), Series::from_coeffs(vec![int(0), int(2), int(2)]));
        assert!(sq.u_degree_bounded_by_z_degree());
    }

    #[test]
    fn bivar_inverse_of_unit_constant() {
        // 1/(1 - zu) = sum (zu)^k
        let a = BivarSeries::from_int_rows(&[&[1], &[0, -1]], 3);
        let inv = a.inverse();
        assert_eq!(
            inv,
            BivarSeries::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1]], 3)
        );
    }

    #[test]
    #[should_panic(expected = "not a unit")]
    fn bivar_division_by_nonconstant_leading_term() {
        let a = BivarSeries::from_int_rows(&[&[1, 1]], 2); // constant term 1 + u
        let _ = BivarSeries::one(2).div(&a);
    }
}
