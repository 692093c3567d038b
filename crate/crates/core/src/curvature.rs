//! Local radii of curvature of the Jarník polygons `P_Q` (square domain).
//!
//! For a slope `λ`, the vertex `v_Q(λ)` sits between the edges `(q1, a1)` and
//! `(q2, a2)` where `a1/q1 < λ < a2/q2` are the order-`Q` Farey neighbours of
//! `λ`. The radius of the circle through `v_Q(λ)` and its two adjacent
//! vertices is `r_Q(λ)`, and `r̃_Q(λ) = r_Q(λ)/R(Q)` is the same radius on the
//! scaled polygon.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::export::SvgPlot;
use crate::number_theory::{
    cf_expand, farey_neighbors, farey_neighbors_sided, farey_neighbors_stern_brocot, moebius_sieve, totient_sieve,
    FareyNeighbors, RealSpec, Side,
};

fn checked(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow("circumradius"))
}

/// `r²` of the circle through three lattice points, exactly.
///
/// With `(x1, y1) = p1 − p0` and `(x2, y2) = p2 − p1`,
/// `r² = (x1²+y1²)(x2²+y2²)((x1+x2)²+(y1+y2)²) / (4(y2x1 − y1x2)²)`.
pub fn circumradius_squared(p0: (i64, i64), p1: (i64, i64), p2: (i64, i64)) -> Result<Ratio<i128>> {
    let d = |a: i64, b: i64| checked(i128::from(a).checked_sub(i128::from(b)));
    let (x1, y1) = (d(p1.0, p0.0)?, d(p1.1, p0.1)?);
    let (x2, y2) = (d(p2.0, p1.0)?, d(p2.1, p1.1)?);
    let sq = |a: i128, b: i128| {
        checked(
            a.checked_mul(a)
                .and_then(|a2| b.checked_mul(b).and_then(|b2| a2.checked_add(b2))),
        )
    };
    let cross = checked(
        y2.checked_mul(x1)
            .and_then(|l| y1.checked_mul(x2).and_then(|r| l.checked_sub(r))),
    )?;
    if cross == 0 {
        return Err(Error::Collinear);
    }
    let num = checked(
        sq(x1, y1)?
            .checked_mul(sq(x2, y2)?)
            .and_then(|v| v.checked_mul(sq(x1 + x2, y1 + y2).ok()?)),
    )?;
    let den = checked(cross.checked_mul(cross).and_then(|c| c.checked_mul(4)))?;
    Ok(Ratio::new(num, den))
}

/// `r²` from the neighbour pair, using `a2q1 − a1q2 = 1`:
/// `¼(a1²+q1²)(a2²+q2²)((a1+a2)²+(q1+q2)²)`.
pub fn radius_squared_from_neighbors(n: &FareyNeighbors) -> Result<Ratio<i128>> {
    let (a1, q1) = (i128::from(n.left.num()), i128::from(n.left.den()));
    let (a2, q2) = (i128::from(n.right.num()), i128::from(n.right.den()));
    let num = checked(
        (a1 * a1 + q1 * q1)
            .checked_mul(a2 * a2 + q2 * q2)
            .and_then(|v| v.checked_mul((a1 + a2).pow(2) + (q1 + q2).pow(2))),
    )?;
    Ok(Ratio::new(num, 4))
}

/// `X(Q, 1)` and `Y(Q, 1)` by Möbius inversion:
/// `X = Σ_d μ(d)·d·S₂(⌊Q/d⌋)`, `Y = Σ_d μ(d)·d·(S₂ + S₁)(⌊Q/d⌋)/2`.
pub fn square_arc_end(order: i64) -> Result<(i128, i128)> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!("order must be at least 1, got {order}")));
    }
    let mu = moebius_sieve(order as usize)?;
    let (mut x, mut y) = (0i128, 0i128);
    for (d, m) in mu.iter() {
        if m == 0 {
            continue;
        }
        let n = i128::from(order) / d as i128;
        let s1 = n * (n + 1) / 2;
        let s2 = n * (n + 1) * (2 * n + 1) / 6;
        let w = i128::from(m) * d as i128;
        x += w * s2;
        y += w * (s2 + s1) / 2;
    }
    Ok((x, y))
}

/// `2R(Q) = 2X(Q, 1) + 2Y(Q, 1) − 1` for the square.
pub fn square_two_r(order: i64) -> Result<i128> {
    let (x, y) = square_arc_end(order)?;
    Ok(2 * x + 2 * y - 1)
}

/// One point of a curvature trace.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSample {
    pub order: i64,
    pub neighbors: FareyNeighbors,
    /// `r_Q(λ)²`, exact.
    pub r_squared: Ratio<i128>,
    pub r: f64,
    /// `2R(Q)`.
    pub two_r: i128,
    pub r_tilde: f64,
    pub predicted: f64,
}

impl CurvatureSample {
    pub fn q1(&self) -> i64 {
        self.neighbors.left.den()
    }

    pub fn q2(&self) -> i64 {
        self.neighbors.right.den()
    }
}

/// Neighbours of `λ` at order `Q`; a rational `λ` whose denominator is at
/// most `Q` needs a side.
pub fn neighbors_at(lambda: &RealSpec, side: Option<Side>, order: i64) -> Result<FareyNeighbors> {
    match lambda.as_fraction() {
        None => farey_neighbors(lambda, order),
        Some(f) if f.den() <= order => {
            let side = side.ok_or_else(|| Error::RationalLambda(lambda.to_string()))?;
            farey_neighbors_sided(f, side, order)
        }
        Some(_) => farey_neighbors_stern_brocot(lambda, side.unwrap_or(Side::Plus), order),
    }
}

fn sample(lambda_f: f64, order: i64, neighbors: FareyNeighbors, two_r: i128) -> Result<CurvatureSample> {
    let r_squared = radius_squared_from_neighbors(&neighbors)?;
    let r = (*r_squared.numer() as f64 / *r_squared.denom() as f64).sqrt();
    let r_tilde = 2.0 * r / two_r as f64;
    let predicted = predicted_radius(order, lambda_f, neighbors.left.den(), neighbors.right.den());
    Ok(CurvatureSample {
        order,
        neighbors,
        r_squared,
        r,
        two_r,
        r_tilde,
        predicted,
    })
}

/// `r_Q(λ)` and `r̃_Q(λ)` at a single order `Q ≥ 2`.
pub fn local_radius(order: i64, lambda: &RealSpec, side: Option<Side>) -> Result<CurvatureSample> {
    check_lambda(lambda, order)?;
    let neighbors = neighbors_at(lambda, side, order)?;
    sample(lambda.to_f64(), order, neighbors, square_two_r(order)?)
}

fn check_lambda(lambda: &RealSpec, order: i64) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!("order must be at least 2, got {order}")));
    }
    if !lambda.in_open_unit_interval() {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "(0, 1)",
        });
    }
    Ok(())
}

/// `q1·q2·(q1+q2)/Q³ · π²(1+λ²)^{3/2}/6`.
pub fn predicted_radius(order: i64, lambda: f64, q1: i64, q2: i64) -> f64 {
    let (q1, q2, q) = (q1 as f64, q2 as f64, order as f64);
    q1 * q2 * (q1 + q2) / (q * q * q) * band_unit(lambda)
}

/// `π²(1+λ²)^{3/2}/6`, the lower end of the lim sup band.
fn band_unit(lambda: f64) -> f64 {
    PI * PI * (1.0 + lambda * lambda).powf(1.5) / 6.0
}

/// `(2/3)(1+λ²)^{3/2}`, the radius of curvature of `C` at slope `λ`.
pub fn limit_curve_radius(lambda: f64) -> f64 {
    2.0 / 3.0 * (1.0 + lambda * lambda).powf(1.5)
}

/// How `R(Q)` is produced along a trace.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TraceMode {
    /// Running sums `ΔX = Qφ(Q)`, `ΔY = Qφ(Q)/2`, checked against the Möbius
    /// closed form every 64 steps.
    #[default]
    Incremental,
    /// The closed form at each `Q`, in parallel.
    Direct,
}

const CROSS_CHECK_EVERY: i64 = 64;

/// `r̃_Q(λ)` for every `Q ∈ [q_min, q_max]`.
pub fn curvature_trace(
    lambda: &RealSpec,
    side: Option<Side>,
    q_min: i64,
    q_max: i64,
    mode: TraceMode,
) -> Result<Vec<CurvatureSample>> {
    check_lambda(lambda, q_min)?;
    if q_max < q_min {
        return Err(Error::InvalidArgument(format!("empty range [{q_min}, {q_max}]")));
    }
    let lf = lambda.to_f64();
    let neighbors: Vec<FareyNeighbors> = (q_min..=q_max)
        .into_par_iter()
        .map(|q| neighbors_at(lambda, side, q))
        .collect::<Result<_>>()?;
    let two_r: Vec<i128> = match mode {
        TraceMode::Direct => (q_min..=q_max)
            .into_par_iter()
            .map(square_two_r)
            .collect::<Result<_>>()?,
        TraceMode::Incremental => incremental_two_r(q_min, q_max)?,
    };
    (q_min..=q_max)
        .zip(neighbors)
        .zip(two_r)
        .map(|((q, n), tr)| sample(lf, q, n, tr))
        .collect()
}

fn incremental_two_r(q_min: i64, q_max: i64) -> Result<Vec<i128>> {
    let phi = totient_sieve(q_max as usize);
    let (mut x, mut y) = square_arc_end(q_min)?;
    let mut out = Vec::with_capacity((q_max - q_min + 1) as usize);
    out.push(2 * x + 2 * y - 1);
    for q in q_min + 1..=q_max {
        let dx = i128::from(q) * i128::from(phi[q as usize]);
        x += dx;
        y += dx / 2;
        if (q - q_min) % CROSS_CHECK_EVERY == 0 && square_arc_end(q)? != (x, y) {
            return Err(Error::Internal(format!("running R(Q) drifted at Q = {q}")));
        }
        out.push(2 * x + 2 * y - 1);
    }
    Ok(out)
}

/// The theoretical window for `r̃_Q(λ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvatureBounds {
    pub lambda: f64,
    /// `[π²/6, π²/3]·(1+λ²)^{3/2}`, which contains every lim sup.
    pub limsup_band: (f64, f64),
    pub limit_curve_radius: f64,
}

impl CurvatureBounds {
    pub fn new(lambda: f64) -> Self {
        let u = band_unit(lambda);
        CurvatureBounds {
            lambda,
            limsup_band: (u, 2.0 * u),
            limit_curve_radius: limit_curve_radius(lambda),
        }
    }
}

/// Window statistics of a trace and, for eventually periodic expansions,
/// the exact limiting values.
#[derive(Clone, Debug, PartialEq)]
pub struct LimsupEstimate {
    pub window: (i64, i64),
    pub sup_est: f64,
    pub inf_est: f64,
    pub bounds: CurvatureBounds,
    /// `(2+g)/(1+g)²·π²(1+λ²)^{3/2}/6` with `g = lim inf k_{n−1}/k_n`.
    pub exact_limsup: Option<f64>,
    /// The minimum over one period of `(b_n + r_n)/(b_n + 1 + r_n)²·π²(1+λ²)^{3/2}/6`.
    pub exact_liminf: Option<f64>,
}

/// Sup and inf of `r̃_Q(λ)` over `Q ∈ [Q_max/4, Q_max]` for irrational `λ`.
pub fn limsup_liminf_estimate(lambda: &RealSpec, q_max: i64, mode: TraceMode) -> Result<LimsupEstimate> {
    if lambda.is_rational() {
        return Err(Error::RationalLambda(lambda.to_string()));
    }
    let lo = (q_max / 4).max(2);
    let trace = curvature_trace(lambda, None, lo, q_max, mode)?;
    let sup_est = trace.iter().map(|s| s.r_tilde).fold(f64::NEG_INFINITY, f64::max);
    let inf_est = trace.iter().map(|s| s.r_tilde).fold(f64::INFINITY, f64::min);
    let lf = lambda.to_f64();
    let (exact_limsup, exact_liminf) = match periodic_orbit(lambda)? {
        Some(orbit) => {
            let u = band_unit(lf);
            let g = orbit.iter().map(|&(_, r)| r).fold(f64::INFINITY, f64::min);
            let inf = orbit
                .iter()
                .map(|&(b, r)| (b + r) / ((b + 1.0 + r) * (b + 1.0 + r)))
                .fold(f64::INFINITY, f64::min);
            (Some((2.0 + g) / ((1.0 + g) * (1.0 + g)) * u), Some(inf * u))
        }
        None => (None, None),
    };
    Ok(LimsupEstimate {
        window: (lo, q_max),
        sup_est,
        inf_est,
        bounds: CurvatureBounds::new(lf),
        exact_limsup,
        exact_liminf,
    })
}

/// For an eventually periodic expansion, the limiting pairs `(b_n, r_n)`
/// over one period, where `r_{n+1} = 1/(b_n + r_n)` and `r_n = k_{n−1}/k_n`.
fn periodic_orbit(lambda: &RealSpec) -> Result<Option<Vec<(f64, f64)>>> {
    let Some((prefix, period)) = lambda.periodic_structure() else {
        return Ok(None);
    };
    // The map is a contraction on the orbit, so enough periods settle r_n.
    let reps = 2 + 80 / period.len().max(1);
    let cf = cf_expand(lambda, prefix.len() + reps * period.len())?;
    let mut r = 0.0f64;
    let mut pairs = Vec::with_capacity(cf.quotients().len());
    for &b in cf.quotients() {
        pairs.push((b as f64, r));
        r = 1.0 / (b as f64 + r);
    }
    Ok(Some(pairs.split_off(pairs.len() - period.len())))
}

/// `Q,q1,q2,r_squared_num,r_squared_den,r_tilde,predicted` rows.
pub fn trace_csv(trace: &[CurvatureSample]) -> String {
    let mut out = String::from("Q,q1,q2,r_squared_num,r_squared_den,r_tilde,predicted\n");
    for s in trace {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            s.order,
            s.q1(),
            s.q2(),
            s.r_squared.numer(),
            s.r_squared.denom(),
            s.r_tilde,
            s.predicted
        );
    }
    out
}

/// Step plot of `r̃_Q(λ)` against `log Q` with the lim sup band and the
/// limit-curve radius as horizontal rules.
pub fn trace_svg(trace: &[CurvatureSample], lambda: f64, label: &str) -> String {
    let b = CurvatureBounds::new(lambda);
    let (first, last) = match (trace.first(), trace.last()) {
        (Some(f), Some(l)) => (f.order as f64, l.order as f64),
        _ => (1.0, 2.0),
    };
    let top = trace.iter().map(|s| s.r_tilde).fold(b.limsup_band.1, f64::max) * 1.05;
    let mut plot = SvgPlot::new(first.ln(), last.ln().max(first.ln() + 1e-9), 0.0, top);
    let pts: Vec<(f64, f64)> = trace.iter().map(|s| ((s.order as f64).ln(), s.r_tilde)).collect();
    plot.steps(&pts, "black");
    plot.rule(b.limsup_band.0, "blue", "π²/6·(1+λ²)^{3/2}");
    plot.rule(b.limsup_band.1, "blue", "π²/3·(1+λ²)^{3/2}");
    plot.rule(b.limit_curve_radius, "red", "(2/3)(1+λ²)^{3/2}");
    plot.finish(&format!("local radius of curvature, λ = {label}"))
}
