//! The symmetric regions `S` whose scaled lattice points generate the
//! generalized polygons: the square, the diamond, the octagons `O_δ` and the
//! `ℓ^p` balls `B_p`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::limit_curves::beta::inc_beta;
use crate::number_theory::Fraction;

/// A closed region with the eight-fold dihedral symmetry of the unit square.
///
/// `Octagon(δ)` has vertices `(±1, 0)`, `(0, ±1)` and `(±c, ±c)` with
/// `c = δ/(1+δ)`; it is convex for `δ ≥ 1`, star-shaped for `δ < 1`, and
/// `Octagon(1)` is the diamond. `Ball(p)` is `{|x|^p + |y|^p ≤ 1}`.
/// Build the parametrized variants with [`DomainSpec::octagon`] and
/// [`DomainSpec::ball`], which reject non-positive parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    Square,
    Diamond,
    Octagon(Fraction),
    Ball(Fraction),
}

/// `∬ x` and `∬ y` over the wedge `S(λ) = {(x, y) ∈ S : 0 ≤ y ≤ λx}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentPair {
    pub mx: f64,
    pub my: f64,
}

fn positive(what: &str, v: Fraction) -> Result<Fraction> {
    if v.num() == 0 {
        return Err(Error::InvalidArgument(format!("{what} must be positive")));
    }
    Ok(v)
}

/// `a·b ≤ c·d` without overflow.
fn products_le(a: u128, b: u128, c: u128, d: u128) -> bool {
    match (a.checked_mul(b), c.checked_mul(d)) {
        (Some(l), Some(r)) => l <= r,
        _ => BigUint::from(a) * b <= BigUint::from(c) * d,
    }
}

impl DomainSpec {
    pub fn octagon(delta: Fraction) -> Result<Self> {
        positive("octagon parameter delta", delta).map(DomainSpec::Octagon)
    }

    pub fn ball(p: Fraction) -> Result<Self> {
        positive("ball exponent p", p).map(DomainSpec::Ball)
    }

    /// Whether `(x/q, y/q) ∈ S`, decided exactly. Requires `q > 0`.
    pub fn contains_lattice(&self, x: i64, y: i64, q: i64) -> bool {
        assert!(q > 0, "scale must be positive");
        self.contains_folded(
            x.unsigned_abs().into(),
            y.unsigned_abs().into(),
            q.unsigned_abs().into(),
        )
    }

    /// Whether the rational point `(x, y)` lies in `S` (boundary included).
    pub fn contains(&self, x: Ratio<i64>, y: Ratio<i64>) -> bool {
        let (xn, xd) = (i128::from(*x.numer()), i128::from(*x.denom()));
        let (yn, yd) = (i128::from(*y.numer()), i128::from(*y.denom()));
        let l = xd.lcm(&yd);
        let xs = (xn * (l / xd)).unsigned_abs();
        let ys = (yn * (l / yd)).unsigned_abs();
        self.contains_folded(xs, ys, l.unsigned_abs())
    }

    /// Membership of `(x/q, y/q)` after folding into the first quadrant.
    fn contains_folded(&self, x: u128, y: u128, q: u128) -> bool {
        if x > q || y > q {
            return false;
        }
        match *self {
            DomainSpec::Square => true,
            DomainSpec::Diamond => x + y <= q,
            DomainSpec::Octagon(delta) => {
                let (m, n) = (delta.num() as u128, delta.den() as u128);
                // y ≤ δ(1 − x) and x ≤ δ(1 − y), scaled by q·n.
                let below_a = products_le(n, y, m, q - x);
                let below_b = products_le(n, x, m, q - y);
                if m >= n {
                    below_a && below_b
                } else {
                    below_a || below_b
                }
            }
            DomainSpec::Ball(p) => ball_contains(x, y, q, p),
        }
    }

    /// The wedge moments at `λ ∈ [0, 1]`, in closed form.
    pub fn moment_integrals(&self, lambda: f64) -> Result<MomentPair> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::OutOfRange {
                value: lambda.to_string(),
                range: "[0, 1]",
            });
        }
        let l = lambda;
        let pair = match *self {
            DomainSpec::Square => MomentPair {
                mx: l / 3.0,
                my: l * l / 6.0,
            },
            DomainSpec::Diamond => {
                let s = (1.0 + l) * (1.0 + l);
                MomentPair {
                    mx: l * (2.0 + l) / (6.0 * s),
                    my: l * l / (6.0 * s),
                }
            }
            DomainSpec::Octagon(delta) => {
                let d = delta.to_f64();
                let s = (d + l) * (d + l);
                MomentPair {
                    mx: d * l * (2.0 * d + l) / (6.0 * s),
                    my: d * d * (l * l) / (6.0 * s),
                }
            }
            DomainSpec::Ball(p) => {
                if l == 0.0 {
                    return Ok(MomentPair { mx: 0.0, my: 0.0 });
                }
                let p = p.to_f64();
                let lp = l.powf(p);
                let mu = lp / (1.0 + lp);
                let tail = (1.0 + lp).powf(-3.0 / p);
                MomentPair {
                    mx: inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p)? / (2.0 * p) - l * tail / 6.0,
                    my: inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p)? / p - l * l * tail / 3.0,
                }
            }
        };
        Ok(pair)
    }

    /// `c(S)` with `R_S(Q) ~ c(S)·Q³`, equal to `6(m_x(1) + m_y(1))/π²`.
    pub fn scale_factor_asymptote(&self) -> f64 {
        let m = self
            .moment_integrals(1.0)
            .expect("beta parameters are positive for a valid domain");
        6.0 * (m.mx + m.my) / (PI * PI)
    }

    /// The square's parameter in either family (δ = ∞, p = ∞).
    pub fn is_square(&self) -> bool {
        matches!(self, DomainSpec::Square)
    }
}

/// `(x/q)^p + (y/q)^p ≤ 1` for `0 ≤ x, y ≤ q`, `p = m/n`.
fn ball_contains(x: u128, y: u128, q: u128, p: Fraction) -> bool {
    if x == 0 || y == 0 {
        return true; // x, y ≤ q already checked
    }
    let pf = p.to_f64();
    let t = (x as f64 / q as f64).powf(pf) + (y as f64 / q as f64).powf(pf);
    let slack = 1e-10 * pf.max(1.0);
    if t < 1.0 - slack {
        return true;
    }
    if t > 1.0 + slack {
        return false;
    }

    let (m, n) = (p.num() as u32, p.den() as u32);
    let xm = BigUint::from(x).pow(m);
    let ym = BigUint::from(y).pow(m);
    let zm = BigUint::from(q).pow(m);
    if n == 1 {
        return xm + ym <= zm;
    }
    // (X/Z)^{1/n} + (Y/Z)^{1/n} ≤ 1; first the case of rational roots.
    let zn1 = zm.pow(n - 1);
    let (ax, ay) = (&xm * &zn1, &ym * &zn1);
    let (r1, r2) = (ax.nth_root(n), ay.nth_root(n));
    if r1.pow(n) == ax && r2.pow(n) == ay {
        return r1 + r2 <= zm;
    }
    // Otherwise equality is impossible, so bracketing by 2^k-scaled integer
    // roots eventually separates the two sides.
    let mut k = 64usize;
    loop {
        let shift = k * n as usize;
        let u = (&xm << shift).nth_root(n);
        let v = (&ym << shift).nth_root(n);
        let w = (&zm << shift).nth_root(n);
        let s = u + v;
        if &s + 2u32 <= w {
            return true;
        }
        if s > w {
            return false;
        }
        k *= 2;
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = |f: &mut fmt::Formatter<'_>, v: &Fraction| {
            if v.den() == 1 {
                write!(f, "{}", v.num())
            } else {
                write!(f, "{v}")
            }
        };
        match self {
            DomainSpec::Square => f.write_str("square"),
            DomainSpec::Diamond => f.write_str("diamond"),
            DomainSpec::Octagon(d) => {
                f.write_str("octagon:")?;
                param(f, d)
            }
            DomainSpec::Ball(p) => {
                f.write_str("ball:")?;
                param(f, p)
            }
        }
    }
}

impl FromStr for DomainSpec {
    type Err = Error;

    /// `square`, `diamond`, `octagon:<δ>`, `ball:<p>`; `inf` as the parameter
    /// gives the square.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        let (head, arg) = match lower.split_once(':') {
            Some((h, a)) => (h, Some(a.trim())),
            None => (lower.as_str(), None),
        };
        let param = |what: &'static str| -> Result<Option<Fraction>> {
            let a = arg.ok_or_else(|| Error::parse("domain", s, format!("{what} needs a parameter")))?;
            if a == "inf" || a == "infinity" {
                return Ok(None);
            }
            let v: Fraction = a.parse().map_err(|e: Error| Error::parse("domain", s, e.to_string()))?;
            positive(what, v)
                .map(Some)
                .map_err(|e| Error::parse("domain", s, e.to_string()))
        };
        match head {
            "square" if arg.is_none() => Ok(DomainSpec::Square),
            "diamond" if arg.is_none() => Ok(DomainSpec::Diamond),
            "octagon" => Ok(param("octagon")?.map_or(DomainSpec::Square, DomainSpec::Octagon)),
            "ball" => Ok(param("ball")?.map_or(DomainSpec::Square, DomainSpec::Ball)),
            _ => Err(Error::parse(
                "domain",
                s,
                "expected square, diamond, octagon:<delta> or ball:<p>",
            )),
        }
    }
}
