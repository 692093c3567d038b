//! Fundamental arcs of the limit curves `C`, `C₁`, `C_δ` and `C′_p`, their
//! implicit forms where one is known, and the incomplete beta kernel the
//! `ℓ^p` family is built from.
//!
//! Every arc is parametrized by a slope `λ ∈ [0, 1]`, starts at `(0, −1)` and
//! ends on the diagonal `y = −x`; the whole curve is the union of the eight
//! dihedral images of the arc.

pub mod beta;

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use crate::number_theory::Fraction;
use beta::{beta, reg_inc_beta, reg_inc_beta_integer};

pub use beta::BetaKernel;

/// A limit-curve family with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitCurve {
    /// `y = 3x²/4 − 1`, the limit of the square's polygons.
    C,
    /// `√(1−|x|) + √(1−|y|) = 1`, the limit for the diamond.
    C1,
    Cdelta(Fraction),
    Cp(Fraction),
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "[0, 1]",
        });
    }
    Ok(())
}

fn check_param(what: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "{what} must be positive and finite, got {v}"
        )));
    }
    Ok(())
}

pub fn curve_c(lambda: f64) -> (f64, f64) {
    (2.0 * lambda / 3.0, lambda * lambda / 3.0 - 1.0)
}

pub fn curve_c1(lambda: f64) -> (f64, f64) {
    let s = (1.0 + lambda) * (1.0 + lambda);
    (lambda * (2.0 + lambda) / s, -(2.0 * lambda + 1.0) / s)
}

pub fn curve_cdelta(delta: f64, lambda: f64) -> Result<(f64, f64)> {
    check_param("delta", delta)?;
    let (d, l) = (delta, lambda);
    let k = (d + 1.0) * (d + 1.0) / ((d + l) * (d + l) * (3.0 * d + 1.0));
    Ok((l * (2.0 * d + l) * k, d * l * l * k - 1.0))
}

/// Shared pieces of the `C′_p` formulas at `λ`: `(μ, (1+λ^p)^{−3/p}, B(1/p, 2/p))`.
fn cp_parts(p: f64, lambda: f64) -> (f64, f64, f64) {
    let lp = lambda.powf(p);
    (lp / (1.0 + lp), (1.0 + lp).powf(-3.0 / p), beta(1.0 / p, 2.0 / p))
}

pub fn curve_cp(p: f64, lambda: f64) -> Result<(f64, f64)> {
    check_param("p", p)?;
    let l = lambda;
    let (mu, tail, b) = cp_parts(p, l);
    let x = reg_inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p)? - p * l * tail / (2.0 * b);
    let y = reg_inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p)? - p * l * l * tail / b - 1.0;
    Ok((x, y))
}

/// The second displayed form of the `C′_p` ordinate,
/// `−(I_{1−μ}(1/p, 1+2/p) − pλ²(1+λ^p)^{−3/p}/(2B(1/p, 2/p)))`.
pub fn curve_cp_alternate_y(p: f64, lambda: f64) -> Result<f64> {
    check_param("p", p)?;
    let l = lambda;
    let (mu, tail, b) = cp_parts(p, l);
    Ok(-(reg_inc_beta(1.0 - mu, 1.0 / p, 1.0 + 2.0 / p)? - p * l * l * tail / (2.0 * b)))
}

/// `C′_{1/n}` through finite binomial sums: all beta parameters are integers
/// and `B(n, 2n) = (n−1)!(2n−1)!/(3n−1)!`.
pub fn curve_cp_reciprocal(n: u32, lambda: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let p = 1.0 / f64::from(n);
    let l = lambda;
    let lp = l.powf(p);
    let mu = lp / (1.0 + lp);
    let tail = (1.0 + lp).powi(-3 * n as i32);
    let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
    let b = fact(n - 1) * fact(2 * n - 1) / fact(3 * n - 1);
    let x = reg_inc_beta_integer(mu, n, 1 + 2 * n) - p * l * tail / (2.0 * b);
    let y = reg_inc_beta_integer(mu, 2 * n, 1 + n) - p * l * l * tail / b - 1.0;
    Ok((x, y))
}

/// Rotation by `π/4` followed by scaling by `3/(2√2)`; it carries `C` onto `C₁`.
pub fn rotate_scale_c((x, y): (f64, f64)) -> (f64, f64) {
    let k = 3.0 / (2.0 * SQRT_2) / SQRT_2;
    (k * (x - y), k * (x + y))
}

/// The eight dihedral images of an arc from `(0, −1)` to the diagonal,
/// arranged as one closed counterclockwise loop starting at `(0, −1)`.
pub fn dihedral_closure(arc: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut eighth: Vec<(f64, f64)> = arc.to_vec();
    // Mirror in y = −x, traversed back from the diagonal to (1, 0).
    eighth.extend(arc.iter().rev().skip(1).map(|&(x, y)| (-y, -x)));
    let mut out = Vec::with_capacity(4 * eighth.len());
    let mut quarter: Vec<(f64, f64)> = eighth;
    for _ in 0..4 {
        let skip = usize::from(!out.is_empty());
        out.extend(quarter.iter().skip(skip).copied());
        quarter = quarter.iter().map(|&(x, y)| (-y, x)).collect();
    }
    out.pop(); // the loop closes on (0, −1)
    out
}

/// Coefficients `c_{ij}` of `x^i y^j` in the degree-5 relation satisfied by `C′_{1/2}`.
const HALF_BALL_POLY: [(i32, u32, u32); 21] = [
    (-45253, 0, 0),
    (86140, 1, 0),
    (-37030, 2, 0),
    (-3220, 3, 0),
    (-765, 4, 0),
    (128, 5, 0),
    (-86140, 0, 1),
    (169060, 1, 1),
    (-80340, 2, 1),
    (-1940, 3, 1),
    (-640, 4, 1),
    (-37030, 0, 2),
    (80340, 1, 2),
    (-44590, 2, 2),
    (1280, 3, 2),
    (3220, 0, 3),
    (-1940, 1, 3),
    (-1280, 2, 3),
    (-765, 0, 4),
    (640, 1, 4),
    (-128, 0, 5),
];

/// The `C′_{1/2}` polynomial divided by the sum of its terms' magnitudes.
pub fn half_ball_scaled_residual(x: f64, y: f64) -> f64 {
    let (mut sum, mut scale) = (0.0, 0.0);
    for (c, i, j) in HALF_BALL_POLY {
        let t = f64::from(c) * x.powi(i as i32) * y.powi(j as i32);
        sum += t;
        scale += t.abs();
    }
    sum / scale
}

impl LimitCurve {
    pub fn cdelta(delta: Fraction) -> Result<Self> {
        check_param("delta", delta.to_f64())?;
        Ok(LimitCurve::Cdelta(delta))
    }

    pub fn cp(p: Fraction) -> Result<Self> {
        check_param("p", p.to_f64())?;
        Ok(LimitCurve::Cp(p))
    }

    /// The curve the polygons of `domain` converge to.
    pub fn for_domain(domain: &DomainSpec) -> Self {
        match *domain {
            DomainSpec::Square => LimitCurve::C,
            DomainSpec::Diamond => LimitCurve::C1,
            DomainSpec::Octagon(d) => LimitCurve::Cdelta(d),
            DomainSpec::Ball(p) => LimitCurve::Cp(p),
        }
    }

    /// Identifies the parametrizations that describe the same curve:
    /// `C_1 = C′_1 = C₁`.
    pub fn canonical(&self) -> Self {
        match *self {
            LimitCurve::Cdelta(d) | LimitCurve::Cp(d) if d == Fraction::ONE => LimitCurve::C1,
            other => other,
        }
    }

    /// Whether the polygons of `domain` converge to this curve.
    pub fn pairs_with(&self, domain: &DomainSpec) -> bool {
        self.canonical() == LimitCurve::for_domain(domain).canonical()
    }

    /// The point of the fundamental arc at slope `λ ∈ [0, 1]`.
    pub fn eval(&self, lambda: f64) -> Result<(f64, f64)> {
        check_lambda(lambda)?;
        match *self {
            LimitCurve::C => Ok(curve_c(lambda)),
            LimitCurve::C1 => Ok(curve_c1(lambda)),
            LimitCurve::Cdelta(d) => curve_cdelta(d.to_f64(), lambda),
            LimitCurve::Cp(p) => curve_cp(p.to_f64(), lambda),
        }
    }

    /// The residual of the implicit equation at `(x, y)`, where one is known.
    ///
    /// `C₁` uses `√(1−|x|) + √(1−|y|) − 1`, `C_δ` the parabola
    /// `4δ(1+δ)²(y+1) − (1+3δ)(δx+y+1)²` divided by `4δ(1+δ)²`, `C′_2` the
    /// unit circle and `C′_{1/2}` the scaled degree-5 relation.
    pub fn residual(&self, x: f64, y: f64) -> Option<f64> {
        match self.canonical() {
            LimitCurve::C => Some(y - (0.75 * x * x - 1.0)),
            LimitCurve::C1 => Some((1.0 - x.abs()).sqrt() + (1.0 - y.abs()).sqrt() - 1.0),
            LimitCurve::Cdelta(d) => {
                let d = d.to_f64();
                let k = 4.0 * d * (1.0 + d) * (1.0 + d);
                let t = d * x + y + 1.0;
                Some((k * (y + 1.0) - (1.0 + 3.0 * d) * t * t) / k)
            }
            LimitCurve::Cp(p) if p == Fraction::new_unchecked(2, 1) => Some(x * x + y * y - 1.0),
            LimitCurve::Cp(p) if p == Fraction::new_unchecked(1, 2) => Some(half_ball_scaled_residual(x, y)),
            LimitCurve::Cp(_) => None,
        }
    }

    /// The arc's end point on the diagonal (`λ = 1`).
    pub fn arc_end(&self) -> Result<(f64, f64)> {
        match self.canonical() {
            LimitCurve::C => Ok((2.0 / 3.0, -2.0 / 3.0)),
            LimitCurve::C1 => Ok((0.75, -0.75)),
            LimitCurve::Cdelta(d) => {
                let d = d.to_f64();
                let e = (2.0 * d + 1.0) / (3.0 * d + 1.0);
                Ok((e, -e))
            }
            LimitCurve::Cp(_) => self.eval(1.0),
        }
    }

    /// `samples ≥ 2` points `(λ, x, y)` on an even λ grid over `[0, 1]`.
    pub fn sample_arc(&self, samples: usize) -> Result<Vec<(f64, f64, f64)>> {
        if samples < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 samples, got {samples}"
            )));
        }
        let last = (samples - 1) as f64;
        (0..samples)
            .map(|i| {
                let l = i as f64 / last;
                let (x, y) = self.eval(l)?;
                Ok((l, x, y))
            })
            .collect()
    }

    /// `lambda,x,y` rows for an evenly sampled fundamental arc.
    pub fn arc_csv(&self, samples: usize) -> Result<String> {
        let mut out = String::from("lambda,x,y\n");
        for (l, x, y) in self.sample_arc(samples)? {
            out.push_str(&format!("{l},{x},{y}\n"));
        }
        Ok(out)
    }

    /// The full curve as an SVG path (arc plus its dihedral images).
    pub fn curve_svg(&self, samples: usize) -> Result<String> {
        let arc: Vec<(f64, f64)> = self.sample_arc(samples)?.into_iter().map(|(_, x, y)| (x, y)).collect();
        let pts = dihedral_closure(&arc);
        Ok(crate::export::svg_closed_path(&pts, &self.to_string()))
    }
}

impl fmt::Display for LimitCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = |f: &mut fmt::Formatter<'_>, v: &Fraction| {
            if v.den() == 1 {
                write!(f, "{}", v.num())
            } else {
                write!(f, "{v}")
            }
        };
        match self {
            LimitCurve::C => f.write_str("C"),
            LimitCurve::C1 => f.write_str("C1"),
            LimitCurve::Cdelta(d) => {
                f.write_str("Cdelta:")?;
                param(f, d)
            }
            LimitCurve::Cp(p) => {
                f.write_str("Cp:")?;
                param(f, p)
            }
        }
    }
}

impl FromStr for LimitCurve {
    type Err = Error;

    /// `C`, `C1`, `Cdelta:<δ>`, `Cp:<p>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let (head, arg) = match t.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (t.as_str(), None),
        };
        let param = || -> Result<Fraction> {
            let a = arg.ok_or_else(|| Error::parse("curve", s, "missing parameter"))?;
            a.parse().map_err(|e: Error| Error::parse("curve", s, e.to_string()))
        };
        let wrap = |r: Result<LimitCurve>| r.map_err(|e| Error::parse("curve", s, e.to_string()));
        match head {
            "c" if arg.is_none() => Ok(LimitCurve::C),
            "c1" if arg.is_none() => Ok(LimitCurve::C1),
            "cdelta" => wrap(LimitCurve::cdelta(param()?)),
            "cp" => wrap(LimitCurve::cp(param()?)),
            _ => Err(Error::parse("curve", s, "expected C, C1, Cdelta:<delta> or Cp:<p>")),
        }
    }
}
