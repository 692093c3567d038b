//! Convergence experiments tying the modules together: distances from scaled
//! polygons to their limit curves, and checks of the vertex asymptotics.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use crate::limit_curves::LimitCurve;
use crate::number_theory::RealSpec;
use crate::polygon::{build_polygon, fundamental_vertex, scale_polygon, ScaledPolygon};

/// Default number of points on the sampled fundamental arc.
pub const DEFAULT_SAMPLES: usize = 1 << 14;

/// Distance from a scaled polygon to a limit curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceReport {
    /// Largest distance from a vertex or edge midpoint to the curve (to the
    /// sampled polyline for families without an exact routine).
    pub sup_distance: f64,
    /// Upper bound for the true distance: `sup_distance` plus half the
    /// longest sampling chord.
    pub bound: f64,
}

/// Maps a point into the wedge `{x ≥ 0, y ≤ −x}` by the dihedral symmetries.
/// The wedge is bounded by two mirror lines, so for a symmetric curve the
/// nearest point to a folded point lies on the fundamental arc.
pub fn fold_to_wedge((x, y): (f64, f64)) -> (f64, f64) {
    let (x, y) = (x.abs(), -y.abs());
    if x > -y {
        (-y, -x)
    } else {
        (x, y)
    }
}

/// Exact distance from a wedge point to the arc `y = 3x²/4 − 1`, `0 ≤ x ≤ 2/3`.
///
/// Stationary points solve `(9/8)x³ + (1 − (3/2)(1+py))x − px = 0`; the cubic is
/// split at its critical points and each monotone piece bisected.
pub fn distance_to_parabola_arc(px: f64, py: f64) -> f64 {
    let end = 2.0 / 3.0;
    let c = 1.0 - 1.5 * (1.0 + py);
    let g = |x: f64| 1.125 * x * x * x + c * x - px;
    let dist = |x: f64| (x - px).hypot(0.75 * x * x - 1.0 - py);

    let mut cuts = vec![0.0];
    if c < 0.0 {
        let t = (-c / 3.375).sqrt();
        if t < end {
            cuts.push(t);
        }
    }
    cuts.push(end);
    let mut best = dist(0.0).min(dist(end));
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (glo, ghi) = (g(lo), g(hi));
        if glo == 0.0 {
            best = best.min(dist(lo));
        }
        if glo * ghi >= 0.0 {
            continue;
        }
        let rising = glo < 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if (g(mid) < 0.0) == rising {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        best = best.min(dist(lo)).min(dist(hi));
    }
    best
}

/// A sampled fundamental arc with increasing `x`.
struct ArcPolyline {
    pts: Vec<(f64, f64)>,
    max_chord: f64,
}

impl ArcPolyline {
    fn new(curve: &LimitCurve, samples: usize) -> Result<Self> {
        let pts: Vec<(f64, f64)> = curve.sample_arc(samples)?.into_iter().map(|(_, x, y)| (x, y)).collect();
        if pts.windows(2).any(|w| w[1].0 < w[0].0) {
            return Err(Error::Internal(format!("sampled arc of {curve} is not x-monotone")));
        }
        let max_chord = pts
            .windows(2)
            .map(|w| (w[1].0 - w[0].0).hypot(w[1].1 - w[0].1))
            .fold(0.0, f64::max);
        Ok(ArcPolyline { pts, max_chord })
    }

    fn segment_distance(&self, i: usize, p: (f64, f64)) -> f64 {
        let (a, b) = (self.pts[i], self.pts[i + 1]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len2 = dx * dx + dy * dy;
        let t = if len2 == 0.0 {
            0.0
        } else {
            (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
        };
        (a.0 + t * dx - p.0).hypot(a.1 + t * dy - p.1)
    }

    /// Exact distance to the polyline; segments whose x-range is farther than
    /// the best distance so far are skipped.
    fn distance(&self, p: (f64, f64)) -> f64 {
        let n = self.pts.len() - 1;
        let start = self.pts.partition_point(|q| q.0 <= p.0).clamp(1, n) - 1;
        let mut best = self.segment_distance(start, p);
        for i in (0..start).rev() {
            if p.0 - self.pts[i + 1].0 >= best {
                break;
            }
            best = best.min(self.segment_distance(i, p));
        }
        for i in start + 1..n {
            if self.pts[i].0 - p.0 >= best {
                break;
            }
            best = best.min(self.segment_distance(i, p));
        }
        best
    }
}

/// The points whose distance is measured: every vertex and edge midpoint.
fn probe_points(polygon: &ScaledPolygon) -> Vec<(f64, f64)> {
    let v = &polygon.vertices;
    let n = v.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        out.push(a);
        out.push(((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0));
    }
    out
}

/// Largest distance from the polygon's vertices and edge midpoints to the
/// whole (eight-fold) curve. `samples` is the arc sampling density.
pub fn distance_to_curve(polygon: &ScaledPolygon, curve: &LimitCurve, samples: usize) -> Result<DistanceReport> {
    if samples < 1000 {
        return Err(Error::InvalidArgument(format!(
            "need at least 1000 samples, got {samples}"
        )));
    }
    let probes = probe_points(polygon);
    if curve.canonical() == LimitCurve::C {
        let sup = probes
            .par_iter()
            .map(|&p| {
                let (x, y) = fold_to_wedge(p);
                distance_to_parabola_arc(x, y)
            })
            .reduce(|| 0.0, f64::max);
        return Ok(DistanceReport {
            sup_distance: sup,
            bound: sup + 1e-12,
        });
    }
    let arc = ArcPolyline::new(curve, samples)?;
    let sup = probes
        .par_iter()
        .map(|&p| arc.distance(fold_to_wedge(p)))
        .reduce(|| 0.0, f64::max);
    Ok(DistanceReport {
        sup_distance: sup,
        bound: sup + arc.max_chord / 2.0,
    })
}

/// One row of a convergence table.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRecord {
    pub domain: DomainSpec,
    pub order: i64,
    pub curve: LimitCurve,
    pub sup_distance: f64,
    pub bound: f64,
}

/// Distances from `P̃_Q(S)` to `curve` for each `Q`, sorted by `Q`.
/// The curve must be the limit of the domain's polygons.
pub fn convergence_table(
    domain: &DomainSpec,
    orders: &[i64],
    curve: &LimitCurve,
    samples: usize,
) -> Result<Vec<ConvergenceRecord>> {
    if !curve.pairs_with(domain) {
        return Err(Error::MismatchedPairing {
            domain: domain.to_string(),
            curve: curve.to_string(),
        });
    }
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    orders
        .iter()
        .map(|&q| {
            let sp = scale_polygon(&build_polygon(domain, q)?)?;
            let d = distance_to_curve(&sp, curve, samples)?;
            Ok(ConvergenceRecord {
                domain: *domain,
                order: q,
                curve: *curve,
                sup_distance: d.sup_distance,
                bound: d.bound,
            })
        })
        .collect()
}

/// `domain,Q,curve,sup_distance,bound` rows.
pub fn convergence_csv(records: &[ConvergenceRecord]) -> String {
    let mut out = String::from("domain,Q,curve,sup_distance,bound\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.domain, r.order, r.curve, r.sup_distance, r.bound
        );
    }
    out
}

/// Errors of the square's vertex asymptotics at one `(Q, λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaRow {
    pub order: i64,
    pub lambda: f64,
    pub x: i64,
    pub y: i64,
    /// `|X·π²/(2λQ³) − 1|`.
    pub x_error: f64,
    /// `|Y·π²/(λ²Q³) − 1|`.
    pub y_error: f64,
}

impl LemmaRow {
    /// Errors multiplied by `Q/log Q`, which the asymptotics keep bounded.
    pub fn normalized(&self) -> (f64, f64) {
        let k = self.order as f64 / (self.order as f64).ln();
        (self.x_error * k, self.y_error * k)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport {
    pub rows: Vec<LemmaRow>,
}

impl LemmaReport {
    pub fn max_normalized(&self) -> (f64, f64) {
        self.rows
            .iter()
            .map(LemmaRow::normalized)
            .fold((0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("Q,lambda,X,Y,x_error,y_error,x_normalized,y_normalized\n");
        for r in &self.rows {
            let (nx, ny) = r.normalized();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.order, r.lambda, r.x, r.y, r.x_error, r.y_error, nx, ny
            );
        }
        out
    }
}

/// Compares `(X(Q, λ), Y(Q, λ))` for the square with `(2λQ³/π², λ²Q³/π²)`.
/// `λ = 0` rows are reported with zero error when `X = Y = 0`.
pub fn lemma_check(orders: &[i64], lambdas: &[RealSpec]) -> Result<LemmaReport> {
    if orders.is_empty() {
        return Err(Error::InvalidArgument("no orders given".into()));
    }
    let mut rows = Vec::with_capacity(orders.len() * lambdas.len());
    for &q in orders {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("order must be at least 2, got {q}")));
        }
        for l in lambdas {
            let (x, y) = fundamental_vertex(&DomainSpec::Square, q, l)?;
            let lf = l.to_f64();
            let q3 = (q as f64).powi(3);
            let (x_error, y_error) = if lf == 0.0 {
                (
                    if x == 0 { 0.0 } else { f64::INFINITY },
                    if y == 0 { 0.0 } else { f64::INFINITY },
                )
            } else {
                (
                    (x as f64 * PI * PI / (2.0 * lf * q3) - 1.0).abs(),
                    (y as f64 * PI * PI / (lf * lf * q3) - 1.0).abs(),
                )
            };
            rows.push(LemmaRow {
                order: q,
                lambda: lf,
                x,
                y,
                x_error,
                y_error,
            });
        }
    }
    Ok(LemmaReport { rows })
}

/// `|X_S(Q, λ) / (Q³/ζ(2)·m_x(λ)) − 1|`: the lattice sum against the moment
/// integral of the domain.
pub fn cross_route_error(domain: &DomainSpec, order: i64, lambda: &RealSpec) -> Result<f64> {
    let (x, _) = fundamental_vertex(domain, order, lambda)?;
    let m = domain.moment_integrals(lambda.to_f64())?;
    let main = (order as f64).powi(3) * 6.0 / (PI * PI) * m.mx;
    Ok((x as f64 / main - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limit_curves::curve_c;
    use crate::number_theory::Fraction;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    /// Brute-force distance to a very dense arc sample.
    fn dense_distance(curve: &LimitCurve, p: (f64, f64)) -> f64 {
        let p = fold_to_wedge(p);
        (0..=200_000)
            .map(|i| {
                let (x, y) = curve.eval(f64::from(i) / 200_000.0).unwrap();
                (x - p.0).hypot(y - p.1)
            })
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn folding() {
        assert_eq!(fold_to_wedge((0.3, -0.9)), (0.3, -0.9));
        assert_eq!(fold_to_wedge((-0.3, 0.9)), (0.3, -0.9));
        assert_eq!(fold_to_wedge((0.9, 0.3)), (0.3, -0.9));
        assert_eq!(fold_to_wedge((-0.9, -0.3)), (0.3, -0.9));
    }

    #[test]
    fn parabola_distance_against_dense_sampling() {
        for &p in &[
            (0.1, -0.95),
            (0.5, -0.7),
            (0.0, -1.2),
            (0.6, -0.6),
            (0.05, -0.2),
            (0.3, -0.9),
            (0.0, 0.0),
        ] {
            let exact = distance_to_parabola_arc(p.0, p.1);
            let dense = dense_distance(&LimitCurve::C, p);
            assert!(
                exact <= dense + 1e-12 && dense - exact < 1e-9,
                "{p:?}: {exact} vs {dense}"
            );
        }
    }

    #[test]
    fn points_on_the_curve_have_zero_distance() {
        for k in 0..=20 {
            let (x, y) = curve_c(f64::from(k) / 20.0);
            assert!(distance_to_parabola_arc(x, y) < 1e-12);
            for c in [LimitCurve::C1, LimitCurve::Cp(frac(3, 1))] {
                let arc = ArcPolyline::new(&c, 4096).unwrap();
                let p = c.eval(f64::from(k) / 20.0).unwrap();
                assert!(arc.distance(p) <= arc.max_chord, "{c}");
            }
        }
        let sp = ScaledPolygon {
            vertices: (0..64)
                .map(|i| f64::from(i) / 64.0 * std::f64::consts::TAU)
                .map(|t| (t.cos(), t.sin()))
                .collect(),
            two_r: 1,
            order: 1,
            domain: DomainSpec::Ball(frac(2, 1)),
        };
        let d = distance_to_curve(&sp, &LimitCurve::Cp(frac(2, 1)), 4096).unwrap();
        // Midpoints of the 64-gon sit 1 − cos(π/64) inside the circle.
        let sag = 1.0 - (std::f64::consts::PI / 64.0).cos();
        assert!((d.sup_distance - sag).abs() < 1e-6);
        assert!(d.bound >= d.sup_distance);
    }

    #[test]
    fn polyline_distance_matches_brute_force() {
        let c = LimitCurve::Cdelta(frac(1, 2));
        let arc = ArcPolyline::new(&c, 2048).unwrap();
        for &p in &[(0.1, -0.95), (0.4, -0.45), (0.2, -1.1), (0.55, -0.6), (0.0, -0.5)] {
            let brute = (0..arc.pts.len() - 1)
                .map(|i| arc.segment_distance(i, p))
                .fold(f64::INFINITY, f64::min);
            assert_eq!(arc.distance(p), brute);
        }
    }

    #[test]
    fn square_regression_and_decrease() {
        let sp = scale_polygon(&build_polygon(&DomainSpec::Square, 4).unwrap()).unwrap();
        let d4 = distance_to_curve(&sp, &LimitCurve::C, DEFAULT_SAMPLES)
            .unwrap()
            .sup_distance;
        assert!(d4 > 0.0 && d4 < 0.1, "{d4}");
        let t = convergence_table(&DomainSpec::Square, &[100, 25, 400], &LimitCurve::C, DEFAULT_SAMPLES).unwrap();
        let ds: Vec<f64> = t.iter().map(|r| r.sup_distance).collect();
        assert_eq!(t.iter().map(|r| r.order).collect::<Vec<_>>(), [25, 100, 400]);
        assert!(ds[0] > ds[1] && ds[1] > ds[2], "{ds:?}");
    }

    #[test]
    fn pairing_is_enforced() {
        let e = convergence_table(&DomainSpec::Diamond, &[10], &LimitCurve::C, DEFAULT_SAMPLES);
        assert!(matches!(e, Err(Error::MismatchedPairing { .. })));
        assert!(convergence_table(&DomainSpec::Diamond, &[10], &LimitCurve::Cp(Fraction::ONE), 1000).is_ok());
        let sp = scale_polygon(&build_polygon(&DomainSpec::Square, 4).unwrap()).unwrap();
        assert!(distance_to_curve(&sp, &LimitCurve::C, 999).is_err());
    }

    #[test]
    fn octagon_one_records_equal_diamond() {
        let qs = [20, 60];
        let a = convergence_table(&DomainSpec::Diamond, &qs, &LimitCurve::C1, 4096).unwrap();
        let b = convergence_table(&DomainSpec::Octagon(Fraction::ONE), &qs, &LimitCurve::C1, 4096).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!((x.order, x.sup_distance, x.bound), (y.order, y.sup_distance, y.bound));
        }
        let csv = convergence_csv(&b);
        assert!(csv.starts_with("domain,Q,curve,sup_distance,bound\noctagon:1,20,C1,"));
    }

    #[test]
    fn rate_is_log_over_q() {
        let t = convergence_table(
            &DomainSpec::Square,
            &[50, 100, 200, 400],
            &LimitCurve::C,
            DEFAULT_SAMPLES,
        )
        .unwrap();
        let scaled: Vec<f64> = t
            .iter()
            .map(|r| r.sup_distance * r.order as f64 / (r.order as f64).ln())
            .collect();
        assert!(scaled.iter().all(|&s| s < 1.0), "{scaled:?}");
    }

    #[test]
    fn lemma_examples() {
        let one = RealSpec::rational(1, 1).unwrap();
        let r = lemma_check(&[1000], std::slice::from_ref(&one)).unwrap();
        assert!(r.rows[0].x_error < 0.01);
        let zero = RealSpec::rational(0, 1).unwrap();
        let r = lemma_check(&[50], &[zero]).unwrap();
        assert_eq!((r.rows[0].x, r.rows[0].y, r.rows[0].x_error), (0, 0, 0.0));
        let grid: Vec<RealSpec> = (1..=10).map(|k| RealSpec::rational(k, 10).unwrap()).collect();
        let r = lemma_check(&[250, 500, 1000], &grid).unwrap();
        let (mx, my) = r.max_normalized();
        assert!(mx < 8.0 && my < 8.0, "{mx} {my}");
        let at500 = r
            .rows
            .iter()
            .filter(|row| row.order == 500)
            .map(|row| row.x_error)
            .fold(0.0, f64::max);
        assert!(at500 <= 8.0 * 500f64.ln() / 500.0);
        assert!(lemma_check(&[], &grid).is_err());
        assert!(r.to_text().lines().count() == 31);
    }

    #[test]
    fn moment_route_agrees_with_lattice_sums() {
        for s in [
            DomainSpec::Diamond,
            DomainSpec::Octagon(frac(2, 1)),
            DomainSpec::Ball(frac(2, 1)),
        ] {
            for k in [1, 2, 3, 4] {
                let l = RealSpec::rational(k, 4).unwrap();
                let e = cross_route_error(&s, 400, &l).unwrap();
                assert!(e <= 10.0 * 400f64.ln() / 400.0, "{s} λ={l}: {e}");
            }
        }
    }

    #[test]
    fn every_pairing_converges() {
        for (s, c) in [
            (DomainSpec::Diamond, LimitCurve::C1),
            (DomainSpec::Octagon(frac(2, 1)), LimitCurve::Cdelta(frac(2, 1))),
            (DomainSpec::Octagon(frac(1, 2)), LimitCurve::Cdelta(frac(1, 2))),
            (DomainSpec::Ball(frac(2, 1)), LimitCurve::Cp(frac(2, 1))),
            (DomainSpec::Ball(frac(1, 2)), LimitCurve::Cp(frac(1, 2))),
        ] {
            let t = convergence_table(&s, &[30, 120], &c, 4096).unwrap();
            assert!(t[1].sup_distance < t[0].sup_distance, "{s}: {t:?}");
            assert!(t[1].bound < 0.05, "{s}: {t:?}");
        }
    }
}
