//! Exact truncated formal-power-series arithmetic.
//!
//! A [`TruncSeries`] stores the coefficients `c_0 .. c_N` of a series known
//! through an explicit truncation order `N` (inclusive). All arithmetic is
//! exact; coefficients live in a commutative ring implementing [`CoeffRing`]
//! (arbitrary-precision rationals for ordinary series, dense polynomials in a
//! marking variable for bivariate series, see [`crate::bivar`]).
//!
//! Invariants:
//! - `coeffs.len() == order + 1`; the coefficient vector is never empty
//! - binary operations panic on mismatched orders; re-truncation is always
//!   explicit through [`TruncSeries::truncated`]
//! - no operation ever produces an inexact coefficient

use std::fmt;

use num::{BigInt, BigRational};

use crate::error::Error;

/// Exact rational coefficient: arbitrary-precision numerator and denominator,
/// kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Exact rational from an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Commutative ring of series coefficients.
///
/// `inv` returns `None` for non-units, so series division can reject
/// non-invertible constant terms with a clear panic.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
}

impl CoeffRing for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }

    fn one() -> Self {
        num::One::one()
    }

    fn from_int(n: i64) -> Self {
        int(n)
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if num::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl CoeffRing for BigInt {
    fn zero() -> Self {
        num::Zero::zero()
    }

    fn one() -> Self {
        num::One::one()
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    /// Only the units `±1` are invertible over the integers; anything else
    /// makes series division panic, which is the honest outcome.
    fn inv(&self) -> Option<Self> {
        if num::One::is_one(self) || num::One::is_one(&-self) {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// Univariate series in `z` with exact rational coefficients.
pub type Series = TruncSeries<Rat>;

/// Univariate series in `z` with integer coefficients. The integer-valued
/// generating functions in this crate are computed here — a plain
/// `BigInt` multiply is an order of magnitude cheaper than the same
/// multiply dressed up as a rational — and converted with
/// [`TruncSeries::to_rat`] at the boundary. Division is available exactly
/// when the divisor has constant term `±1`, which covers every divisor
/// these pipelines meet.
pub type IntSeries = TruncSeries<BigInt>;

impl IntSeries {
    /// The same series over the rationals.
    pub fn to_rat(&self) -> Series {
        Series::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// A formal power series truncated at order `N`: exactly `N + 1` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: CoeffRing> TruncSeries<C> {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The identity series `z` at the given order.
    pub fn z(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^degree`. For `degree > order` the monomial would be lost to
    /// truncation, which is rejected rather than silently dropped.
    pub fn monomial(c: C, degree: usize, order: usize) -> Self {
        assert!(
            degree <= order,
            "monomial degree {degree} exceeds truncation order {order}"
        );
        let mut s = Self::zero(order);
        s.coeffs[degree] = c;
        s
    }

    /// Build from an explicit coefficient vector; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        Self { coeffs }
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`. Panics for `n > order`.
    pub fn coeff(&self, n: usize) -> &C {
        assert!(
            n <= self.order(),
            "coefficient index {n} out of range for series of order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn check_same_order(&self, rhs: &Self, op: &str) {
        assert!(
            self.order() == rhs.order(),
            "{op}: mixed truncation orders {} and {}",
            self.order(),
            rhs.order()
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    /// Cauchy product truncated to the shared order.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs, "mul");
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j].add_assign(&a.mul(b));
            }
        }
        Self { coeffs: out }
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Reciprocal `1/self` by the standard coefficient recurrence.
    ///
    /// Panics unless the constant term is a unit of the coefficient ring
    /// (division by a non-unit).
    pub fn inverse(&self) -> Self {
        let c0 = match self.coeffs[0].inv() {
            Some(c) => c,
            None => panic!(
                "cannot divide: constant term {:?} is not a unit",
                self.coeffs[0]
            ),
        };
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                let aj = &self.coeffs[j];
                if aj.is_zero() {
                    continue;
                }
                acc.add_assign(&aj.mul(&out[k - j]));
            }
            out.push(c0.mul(&acc).neg());
        }
        Self { coeffs: out }
    }

    /// Quotient `self / rhs`; `rhs` must have a unit constant term.
    pub fn div(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs, "div");
        self.mul(&rhs.inverse())
    }

    /// Square root with constant term 1, by Newton iteration; each step
    /// doubles the number of correct coefficients.
    pub fn sqrt(&self) -> Self {
        assert!(
            self.coeffs[0] == C::one(),
            "series sqrt supports constant term 1 only, got {:?}",
            self.coeffs[0]
        );
        let target = self.order();
        let half = C::from_int(2)
            .inv()
            .expect("2 must be invertible in the coefficient ring");
        // s correct through order d => (s + a/s)/2 correct through 2d + 1
        let mut s = Self::one(0);
        let mut ord = 0usize;
        while ord < target {
            ord = (2 * ord + 1).min(target);
            s = s.padded(ord);
            let a = self.truncated(ord);
            s = s.add(&a.div(&s)).scale(&half);
        }
        s
    }

    /// Substitute `inner` into `self` (Horner evaluation).
    ///
    /// `inner` must have zero constant term so the substitution is
    /// well-defined on truncated series.
    pub fn compose(&self, inner: &Self) -> Self {
        self.check_same_order(inner, "compose");
        assert!(
            inner.coeffs[0].is_zero(),
            "composition requires an inner series with zero constant term"
        );
        let order = self.order();
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for i in (0..order).rev() {
            acc = acc.mul(inner);
            let c = acc.coeffs[0].add(&self.coeffs[i]);
            acc.coeffs[0] = c;
        }
        acc
    }

    /// Integer power by binary exponentiation.
    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiply by `z^k`, keeping the truncation order (the top `k`
    /// coefficients fall off the end).
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for i in 0..n.saturating_sub(k) {
            out[i + k] = self.coeffs[i].clone();
        }
        Self { coeffs: out }
    }

    /// Divide by `z^k` exactly. The first `k` coefficients must vanish; the
    /// quotient is known only through order `N - k`.
    pub fn div_z_pow(&self, k: usize) -> Self {
        assert!(k <= self.order(), "cannot shift below order 0");
        assert!(
            self.coeffs[..k].iter().all(C::is_zero),
            "div_z_pow({k}): series has a nonzero coefficient below z^{k}"
        );
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Explicitly drop precision down to `new_order`.
    pub fn truncated(&self, new_order: usize) -> Self {
        assert!(
            new_order <= self.order(),
            "truncated: {new_order} exceeds current order {}",
            self.order()
        );
        Self {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    /// Extend with zero coefficients up to `new_order`. Only meaningful as an
    /// iteration seed: the appended coefficients are guesses, not knowledge.
    fn padded(&self, new_order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(new_order + 1, C::zero());
        Self { coeffs }
    }
}

/// Number of leading coefficients on which `a` and `b` agree.
fn agreement<C: CoeffRing>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> usize {
    a.coeffs
        .iter()
        .zip(&b.coeffs)
        .take_while(|(x, y)| x == y)
        .count()
}

/// Solve `s = update(s)` for the unique truncated fixed point.
///
/// The map must be a coefficient contraction: applied to a series agreeing
/// with the true solution through degree `d`, it returns one agreeing through
/// degree at least `d + 1`, and it must preserve the truncation order of its
/// input (constants inside the map are built at the input's order). The
/// working order ramps from 0 to `order`, so the map is applied at most
/// `order + 1` times before a final self-consistency check.
///
/// A map that rewrites an already-settled coefficient, or whose alleged fixed
/// point fails `update(s) == s`, is reported as [`Error::NonContracting`].
pub fn solve_fixed_point<C: CoeffRing>(
    order: usize,
    update: impl Fn(&TruncSeries<C>) -> TruncSeries<C>,
) -> Result<TruncSeries<C>, Error> {
    let mut s = TruncSeries::zero(0);
    for ord in 0..=order {
        s = s.padded(ord);
        let next = update(&s);
        assert!(
            next.order() == ord,
            "fixed-point map changed the truncation order ({} -> {})",
            ord,
            next.order()
        );
        if agreement(&s, &next) < ord {
            return Err(Error::NonContracting { order: ord });
        }
        s = next;
    }
    if update(&s) != s {
        return Err(Error::NonContracting { order });
    }
    Ok(s)
}

/// Joint fixed point of a two-component system, with the same contraction
/// contract as [`solve_fixed_point`] on each component.
pub fn solve_fixed_point_pair<C: CoeffRing>(
    order: usize,
    update: impl Fn(&TruncSeries<C>, &TruncSeries<C>) -> (TruncSeries<C>, TruncSeries<C>),
) -> Result<(TruncSeries<C>, TruncSeries<C>), Error> {
    let mut a = TruncSeries::zero(0);
    let mut b = TruncSeries::zero(0);
    for ord in 0..=order {
        a = a.padded(ord);
        b = b.padded(ord);
        let (na, nb) = update(&a, &b);
        assert!(
            na.order() == ord && nb.order() == ord,
            "fixed-point map changed the truncation order"
        );
        if agreement(&a, &na) < ord || agreement(&b, &nb) < ord {
            return Err(Error::NonContracting { order: ord });
        }
        a = na;
        b = nb;
    }
    if update(&a, &b) != (a.clone(), b.clone()) {
        return Err(Error::NonContracting { order });
    }
    Ok((a, b))
}

impl fmt::Display for Series {
    /// Renders as `c0 + c1*z + ... + cN*z^N` with exact rationals `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs().iter().enumerate() {
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, " + {c}*z")?,
                _ => write!(f, " + {c}*z^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64]) -> Series {
        Series::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(rat(2, 4), rat(1, 2));
        let r = rat(1, -2);
        assert_eq!(r, rat(-1, 2));
        assert!(r.denom() > &num::BigInt::from(0));
    }

    #[test]
    fn add_cancellation_and_identity() {
        let one_plus_z = s(&[1, 1, 0]);
        let one_minus_z = s(&[1, -1, 0]);
        assert_eq!(one_plus_z.add(&one_minus_z), s(&[2, 0, 0]));
        assert_eq!(one_plus_z.add(&Series::zero(2)), one_plus_z);
        assert_eq!(s(&[0, 1, 2]).add(&s(&[0, 0, 1])), s(&[0, 1, 3]));
    }

    #[test]
    #[should_panic(expected = "mixed truncation orders")]
    fn add_rejects_mixed_orders() {
        let _ = s(&[1, 1]).add(&s(&[1, 1, 1]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = s(&[1, 1, 0]);
        let b = s(&[1, -1, 0]);
        assert_eq!(a.mul(&b), s(&[1, 0, -1]));
        let z = Series::z(2);
        assert_eq!(z.mul(&z), s(&[0, 0, 1]));
    }

    #[test]
    fn div_geometric_series() {
        let one = Series::one(6);
        let denom = one.sub(&Series::z(6));
        assert_eq!(one.div(&denom), s(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(Series::z(6).div(&denom), s(&[0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(*one.div(&denom).coeff(6), int(1));
    }

    #[test]
    fn div_mul_roundtrip() {
        let a = s(&[0, 3, 1, -2, 5]);
        let b = s(&[2, 1, 1, 0, -1]);
        assert_eq!(a.div(&b).mul(&b), a);
    }

    #[test]
    #[should_panic(expected = "not a unit")]
    fn div_by_nonunit_constant_term() {
        let _ = s(&[1, 1]).div(&s(&[0, 1]));
    }

    #[test]
    fn sqrt_of_one_and_of_a_square() {
        assert_eq!(Series::one(5).sqrt(), Series::one(5));
        let one_plus_z = s(&[1, 1, 0, 0, 0]);
        assert_eq!(one_plus_z.mul(&one_plus_z).sqrt(), one_plus_z);
    }

    #[test]
    fn sqrt_squares_back() {
        let a = s(&[1, -2, -3, 0, 0, 0, 0, 0]);
        let r = a.sqrt();
        assert_eq!(r.mul(&r), a);
        assert_eq!(*r.coeff(0), int(1));
    }

    #[test]
    #[should_panic(expected = "constant term 1")]
    fn sqrt_rejects_other_branches() {
        let _ = s(&[4, 1]).sqrt();
    }

    #[test]
    fn compose_with_zero_inner_gives_constant() {
        let outer = s(&[7, 3, -1]);
        assert_eq!(outer.compose(&Series::zero(2)), s(&[7, 0, 0]));
    }

    #[test]
    fn compose_direct_expansion() {
        // (z + z^2)^2 = z^2 + 2 z^3 + z^4
        let outer = Series::monomial(int(1), 2, 4);
        let inner = s(&[0, 1, 1, 0, 0]);
        assert_eq!(outer.compose(&inner), s(&[0, 0, 1, 2, 1]));
    }

    #[test]
    #[should_panic(expected = "zero constant term")]
    fn compose_rejects_nonzero_inner_constant() {
        let _ = s(&[1, 1]).compose(&s(&[1, 1]));
    }

    #[test]
    fn compose_identity_is_neutral() {
        let a = s(&[2, -1, 5, 0, 3]);
        let z = Series::z(4);
        assert_eq!(a.compose(&z), a);
        let inner = a.sub(&Series::constant(int(2), 4));
        assert_eq!(z.compose(&inner), inner);
    }

    #[test]
    fn fixed_point_motzkin_equation() {
        // m = 1 + z m + z^2 m^2
        let m = solve_fixed_point(5, |m| {
            let ord = m.order();
            let one = Series::one(ord);
            one.add(&m.shift_up(1)).add(&m.mul(m).shift_up(2))
        })
        .unwrap();
        assert_eq!(m, s(&[1, 1, 2, 4, 9, 21]));
    }

    #[test]
    fn fixed_point_v_equation() {
        // v = z (1 + v + v^2)
        let v = solve_fixed_point(5, |v| {
            let ord = v.order();
            Series::one(ord)
                .add(v)
                .add(&v.mul(v))
                .shift_up(1)
        })
        .unwrap();
        assert_eq!(v, s(&[0, 1, 1, 2, 4, 9]));
    }

    #[test]
    fn fixed_point_detects_non_contraction() {
        let r = solve_fixed_point(4, |sr| {
            let ord = sr.order();
            Series::one(ord).add(&Series::z(ord.max(1)).truncated(ord)).sub(sr)
        });
        assert_eq!(r, Err(Error::NonContracting { order: 1 }));
    }

    #[test]
    fn coeff_extraction_and_range_check() {
        let g = Series::one(9).div(&Series::one(9).sub(&Series::z(9)));
        assert_eq!(*g.coeff(7), int(1));
        assert_eq!(*Series::z(3).shift_up(1).coeff(2), int(1));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn coeff_out_of_range_panics() {
        let _ = s(&[1, 1]).coeff(5);
    }

    #[test]
    fn shift_down_requires_divisibility() {
        let a = s(&[0, 0, 3, 1]);
        assert_eq!(a.div_z_pow(2), s(&[3, 1]));
    }

    #[test]
    #[should_panic(expected = "nonzero coefficient")]
    fn shift_down_rejects_inexact_division() {
        let _ = s(&[0, 1, 3]).div_z_pow(2);
    }

    #[test]
    fn display_renders_exact_rationals() {
        let a = Series::from_coeffs(vec![int(1), rat(3, 2), int(-2)]);
        assert_eq!(a.to_string(), "1 + 3/2*z + -2*z^2");
    }

    #[test]
    fn integer_series_ring() {
        let geom = IntSeries::one(6).div(&IntSeries::one(6).sub(&IntSeries::z(6)));
        assert_eq!(geom.to_rat(), Series::one(6).div(&Series::one(6).sub(&Series::z(6))));
        // -1 is the other integer unit
        let a = IntSeries::from_coeffs(vec![BigInt::from(-1), BigInt::from(4), BigInt::from(7)]);
        assert_eq!(a.div(&a), IntSeries::one(2));
    }

    #[test]
    #[should_panic(expected = "not a unit")]
    fn integer_series_rejects_nonunit_division() {
        let two = IntSeries::constant(BigInt::from(2), 3);
        let _ = IntSeries::one(3).div(&two);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn series_strategy(order: usize) -> impl Strategy<Value = Series> {
            proptest::collection::vec((-20i64..=20, 1i64..=6), order + 1).prop_map(|cs| {
                Series::from_coeffs(cs.into_iter().map(|(p, q)| rat(p, q)).collect())
            })
        }

        proptest! {
            #[test]
            fn mul_commutes(a in series_strategy(8), b in series_strategy(8)) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn div_then_mul_roundtrips(a in series_strategy(8), mut b in series_strategy(8)) {
                // force a unit constant term
                if b.coeff(0).is_zero() {
                    b = b.add(&Series::one(8));
                }
                prop_assert_eq!(a.div(&b).mul(&b), a);
            }

            #[test]
            fn sqrt_roundtrips(a in series_strategy(8)) {
                let sq = Series::one(8).add(&a.shift_up(1));
                let r = sq.sqrt();
                prop_assert_eq!(r.mul(&r), sq);
            }

            #[test]
            fn compose_is_associative(a in series_strategy(6), b in series_strategy(6), c in series_strategy(6)) {
                let b = b.shift_up(1);
                let c = c.shift_up(1);
                let lhs = a.compose(&b).compose(&c);
                let rhs = a.compose(&b.compose(&c));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
