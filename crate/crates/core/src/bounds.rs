//! Exact evaluation of every explicit bound formula, over unbounded
//! integers. No floating point anywhere.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the combination bound requires q >= 3, got q = {q}")]
    RequiresQAtLeast3 { q: u64 },
}

/// Scalar parameters feeding the bound formulas. `xi` and `kappa` are
/// carried for documentation only and drive no formula. The hooks inject
/// `d` or `M` directly, since honest values are astronomically large while
/// the downstream arithmetic still needs exercising.
#[derive(Debug, Clone, Default)]
pub struct BoundParams {
    pub delta: u64,
    pub g: u32,
    pub w: u64,
    pub q: u64,
    pub rho: u64,
    pub theta: u64,
    pub xi: Option<u64>,
    pub kappa: Option<u64>,
    pub d_hook: Option<BigUint>,
    pub m_hook: Option<BigUint>,
}

/// Square-and-multiply; `BigUint::pow` takes a u32 exponent, which is too
/// small for the genus-driven exponents here.
fn powu(base: &BigUint, mut exp: u128) -> BigUint {
    let mut result = BigUint::from(1u32);
    let mut acc = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &acc;
        }
        exp >>= 1;
        if exp > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

/// (5 Delta)^(2^g - 1) * (15 Delta)^((32 Delta + 8) 2^g): the component
/// bound for 3-colorings of graphs on a surface of Euler genus g.
///
/// The exponents are computed in 128 bits, which caps g below 122; callers
/// stay far under that in practice.
pub fn ej_bound(delta: u64, g: u32) -> BigUint {
    assert!(g < 100, "genus {g} would overflow the exponent arithmetic");
    let two_g = 1u128 << g;
    let e1 = two_g - 1;
    let e2 = (32u128 * delta as u128 + 8) * two_g;
    let five_delta = BigUint::from(5u64 * delta);
    let fifteen_delta = BigUint::from(15u64 * delta);
    powu(&five_delta, e1) * powu(&fifteen_delta, e2)
}

/// 24 w Delta: the two-coloring component bound at tree-width w.
pub fn adov_bound(w: u64, delta: u64) -> BigUint {
    BigUint::from(24u64) * w * delta
}

/// max(q - 1, 2): tree-width of a q-necklace.
pub fn necklace_bound(q: u64) -> u64 {
    q.saturating_sub(1).max(2)
}

/// q(w + 1) - 1: tree-width after absorbing a width-w vortex, q >= 3.
pub fn combine_bound(q: u64, w: u64) -> Result<BigUint, BoundsError> {
    if q < 3 {
        return Err(BoundsError::RequiresQAtLeast3 { q });
    }
    Ok(BigUint::from(q) * (w + 1) - 1u32)
}

/// 48 d^4 w Delta^5: the component bound for a d-local outgrowth.
pub fn outgrowth_bound(d: &BigUint, w: u64, delta: u64) -> BigUint {
    BigUint::from(48u64) * powu(d, 4) * w * powu(&BigUint::from(delta), 5)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainConstants {
    pub d: BigUint,
    pub m: BigUint,
    pub eta: BigUint,
}

/// The main-proof constants: d from the surface bound (or the hook),
/// M = 48 d^4 (2 rho + 3) (3 Delta + 2 rho)^5 (or the hook), and
/// eta = 2000 rho theta^3 M Delta^6. eta vanishes exactly when rho does.
pub fn main_constants(p: &BoundParams) -> MainConstants {
    let d = p.d_hook.clone().unwrap_or_else(|| ej_bound(p.delta, p.g));
    let m = p.m_hook.clone().unwrap_or_else(|| {
        BigUint::from(48u64)
            * powu(&d, 4)
            * (2 * p.rho + 3)
            * powu(&BigUint::from(3 * p.delta + 2 * p.rho), 5)
    });
    let eta = BigUint::from(2000u64)
        * p.rho
        * powu(&BigUint::from(p.theta), 3)
        * &m
        * powu(&BigUint::from(p.delta), 6);
    MainConstants { d, m, eta }
}

/// |Z| (Delta k + 1): the recoloring budget.
pub fn recolor_budget(z: u64, delta: u64, k: u64) -> BigUint {
    BigUint::from(z) * (BigUint::from(delta) * k + 1u32)
}

/// Number of decimal digits; 0 has one digit.
pub fn decimal_digits(x: &BigUint) -> usize {
    x.to_string().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent evaluation by repeated multiplication.
    fn slow_power(base: u64, exp: u64) -> BigUint {
        let mut out = BigUint::from(1u32);
        for _ in 0..exp {
            out *= base;
        }
        out
    }

    #[test]
    fn ej_bound_base_case() {
        // Delta = 1, g = 0: 5^0 * 15^40.
        let expected = slow_power(15, 40);
        assert_eq!(ej_bound(1, 0), expected);
        assert_eq!(decimal_digits(&expected), 48);
    }

    #[test]
    fn ej_bound_delta_three() {
        // Delta = 3, g = 0: 15^0 * 45^104.
        assert_eq!(ej_bound(3, 0), slow_power(45, 104));
    }

    #[test]
    fn ej_bound_genus_zero_kills_first_factor() {
        // 2^0 - 1 = 0, so the (5 Delta) factor is 1 for every Delta.
        for delta in 1..6u64 {
            let expected = slow_power(15 * delta, 32 * delta + 8);
            assert_eq!(ej_bound(delta, 0), expected);
        }
    }

    #[test]
    fn ej_bound_genus_one() {
        // g = 1: (5D)^1 * (15D)^(2*(32D+8)).
        let d = 2u64;
        let expected = slow_power(5 * d, 1) * slow_power(15 * d, 2 * (32 * d + 8));
        assert_eq!(ej_bound(d, 1), expected);
    }

    #[test]
    fn ej_bound_monotone() {
        assert!(ej_bound(2, 0) > ej_bound(1, 0));
        assert!(ej_bound(1, 1) > ej_bound(1, 0));
        assert!(ej_bound(3, 2) > ej_bound(3, 1));
    }

    #[test]
    fn adov_values() {
        assert_eq!(adov_bound(3, 3), BigUint::from(216u32));
        assert_eq!(adov_bound(1, 1), BigUint::from(24u32));
        assert_eq!(adov_bound(2, 2), BigUint::from(96u32));
    }

    #[test]
    fn necklace_and_combine_values() {
        assert_eq!(necklace_bound(2), 2);
        assert_eq!(necklace_bound(5), 4);
        assert_eq!(combine_bound(3, 1).unwrap(), BigUint::from(5u32));
        assert_eq!(combine_bound(2, 1), Err(BoundsError::RequiresQAtLeast3 { q: 2 }));
    }

    #[test]
    fn outgrowth_values() {
        assert_eq!(outgrowth_bound(&BigUint::from(1u32), 1, 1), BigUint::from(48u32));
        // 48 * 2^4 * 3 * 2^5 = 48 * 16 * 3 * 32.
        assert_eq!(
            outgrowth_bound(&BigUint::from(2u32), 3, 2),
            BigUint::from(48u64 * 16 * 3 * 32)
        );
    }

    #[test]
    fn main_constants_with_hooks() {
        // d = 1, rho = 0, Delta = 1: M = 48 * 1 * 3 * 3^5 = 34992.
        let p = BoundParams {
            delta: 1,
            rho: 0,
            theta: 1,
            d_hook: Some(BigUint::from(1u32)),
            ..Default::default()
        };
        let c = main_constants(&p);
        assert_eq!(c.m, BigUint::from(34992u32));
        assert_eq!(c.eta, BigUint::from(0u32));
    }

    #[test]
    fn eta_vanishes_iff_rho_vanishes() {
        let mut p = BoundParams {
            delta: 2,
            theta: 3,
            rho: 0,
            d_hook: Some(BigUint::from(5u32)),
            ..Default::default()
        };
        assert_eq!(main_constants(&p).eta, BigUint::from(0u32));
        p.rho = 1;
        assert!(main_constants(&p).eta > BigUint::from(0u32));
    }

    #[test]
    fn eta_formula_with_hooked_m() {
        // rho = 1, theta = 1, M = 1, Delta = 1: eta = 2000.
        let p = BoundParams {
            delta: 1,
            rho: 1,
            theta: 1,
            m_hook: Some(BigUint::from(1u32)),
            ..Default::default()
        };
        assert_eq!(main_constants(&p).eta, BigUint::from(2000u32));
    }

    #[test]
    fn m_scales_as_fourth_power_of_d() {
        for d_value in [2u32, 3, 7, 10] {
            let base = BoundParams {
                delta: 2,
                rho: 1,
                theta: 1,
                d_hook: Some(BigUint::from(1u32)),
                ..Default::default()
            };
            let scaled = BoundParams { d_hook: Some(BigUint::from(d_value)), ..base.clone() };
            let ratio = main_constants(&scaled).m / main_constants(&base).m;
            assert_eq!(ratio, powu(&BigUint::from(d_value), 4));
        }
    }

    #[test]
    fn recolor_budget_values() {
        assert_eq!(recolor_budget(2, 3, 4), BigUint::from(26u32));
        assert_eq!(recolor_budget(0, 7, 9), BigUint::from(0u32));
        assert_eq!(recolor_budget(1, 1, 1), BigUint::from(2u32));
    }

    #[test]
    fn evaluation_is_reproducible() {
        assert_eq!(ej_bound(4, 2), ej_bound(4, 2));
        assert_eq!(adov_bound(9, 9), adov_bound(9, 9));
    }

    #[test]
    fn digit_count_of_zero() {
        assert_eq!(decimal_digits(&BigUint::from(0u32)), 1);
        assert_eq!(decimal_digits(&BigUint::from(9u32)), 1);
        assert_eq!(decimal_digits(&BigUint::from(10u32)), 2);
    }
}
