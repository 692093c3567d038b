//! Generalized Jarník polygons: the convex lattice polygon whose edges are
//! exactly the primitive vectors of `Q·S`, each used once, in angular order.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_integer::Integer;
use rayon::prelude::*;

use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use crate::export::svg_closed_path;
use crate::number_theory::RealSpec;

/// A primitive integer vector `(q, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveVector {
    pub q: i64,
    pub a: i64,
}

impl PrimitiveVector {
    pub fn new(q: i64, a: i64) -> Result<Self> {
        if q.unsigned_abs().gcd(&a.unsigned_abs()) != 1 {
            return Err(Error::InvalidArgument(format!("({q}, {a}) is not primitive")));
        }
        Ok(PrimitiveVector { q, a })
    }

    /// 0 for directions in `[0, π)`, 1 for `[π, 2π)`.
    fn half(&self) -> u8 {
        u8::from(!(self.a > 0 || (self.a == 0 && self.q > 0)))
    }

    pub fn cross(&self, other: &PrimitiveVector) -> i128 {
        i128::from(self.q) * i128::from(other.a) - i128::from(self.a) * i128::from(other.q)
    }

    /// Angular order counterclockwise from the direction `(1, 0)`.
    pub fn cmp_angle(&self, other: &PrimitiveVector) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| 0.cmp(&self.cross(other)))
    }
}

fn check_order(order: i64) -> Result<()> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!("order must be at least 1, got {order}")));
    }
    Ok(())
}

/// All primitive `(q, a)` with `(q/Q, a/Q) ∈ S`, row by row in `a` then `q`.
pub fn primitive_vectors(domain: &DomainSpec, order: i64) -> Result<Vec<PrimitiveVector>> {
    check_order(order)?;
    let rows: Vec<Vec<PrimitiveVector>> = (-order..=order)
        .into_par_iter()
        .map(|a| {
            (-order..=order)
                .filter(|&q| q.unsigned_abs().gcd(&a.unsigned_abs()) == 1)
                .filter(|&q| domain.contains_lattice(q, a, order))
                .map(|q| PrimitiveVector { q, a })
                .collect()
        })
        .collect();
    Ok(rows.concat())
}

/// Sorts counterclockwise from `(1, 0)` with an exact comparator.
///
/// Two vectors pointing the same way are reported as an internal error.
pub fn sort_ccw(vectors: &[PrimitiveVector]) -> Result<Vec<PrimitiveVector>> {
    let mut out = vectors.to_vec();
    out.sort_unstable_by(PrimitiveVector::cmp_angle);
    if let Some(w) = out.windows(2).find(|w| w[0].cmp_angle(&w[1]) == Ordering::Equal) {
        return Err(Error::Internal(format!(
            "vectors ({}, {}) and ({}, {}) share a direction",
            w[0].q, w[0].a, w[1].q, w[1].a
        )));
    }
    Ok(out)
}

/// The polygon `P_Q(S)`: `edges[i]` runs from `vertices[i−1]` to `vertices[i]`
/// (cyclically), `edges[0] = (1, 0)` and `vertices[0] = (0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<PrimitiveVector>,
    pub order: i64,
    pub domain: DomainSpec,
}

pub fn build_polygon(domain: &DomainSpec, order: i64) -> Result<LatticePolygon> {
    let edges = sort_ccw(&primitive_vectors(domain, order)?)?;
    if edges.first() != Some(&PrimitiveVector { q: 1, a: 0 }) {
        return Err(Error::Internal(format!(
            "{domain} at order {order} lacks the vector (1, 0)"
        )));
    }
    let mut vertices = Vec::with_capacity(edges.len());
    let (mut x, mut y) = (-1i64, 0i64);
    for e in &edges {
        x = x.checked_add(e.q).ok_or(Error::Overflow("polygon vertex"))?;
        y = y.checked_add(e.a).ok_or(Error::Overflow("polygon vertex"))?;
        vertices.push((x, y));
    }
    if (x, y) != (-1, 0) {
        return Err(Error::Internal("edge vectors do not close up".into()));
    }
    Ok(LatticePolygon {
        vertices,
        edges,
        order,
        domain: *domain,
    })
}

impl LatticePolygon {
    /// `X_S(Q, 1) + Y_S(Q, 1) − 1/2`, returned doubled so it stays an integer.
    pub fn two_r(&self) -> i128 {
        let (x, y) = self.fundamental_arc_end();
        2 * i128::from(x) + 2 * i128::from(y) - 1
    }

    /// The vertex reached after every edge of slope in `(0, 1]`.
    pub fn fundamental_arc_end(&self) -> (i64, i64) {
        let k = self.edges.iter().take_while(|e| e.a >= 0 && e.a <= e.q).count();
        self.vertices[k - 1]
    }

    /// Cross products of consecutive edges, cyclically.
    pub fn turns(&self) -> impl Iterator<Item = i128> + '_ {
        let n = self.edges.len();
        (0..n).map(move |i| self.edges[i].cross(&self.edges[(i + 1) % n]))
    }

    /// `x,y` rows starting at the vertex after the `(1, 0)` edge.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for (x, y) in &self.vertices {
            let _ = writeln!(out, "{x},{y}");
        }
        out
    }
}

/// `P̃_Q(S)`: the polygon translated so the `(1, 0)` edge has its midpoint at
/// `(0, −R)` and then divided by `R = R_S(Q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledPolygon {
    pub vertices: Vec<(f64, f64)>,
    /// `2R`, an odd integer.
    pub two_r: i128,
    pub order: i64,
    pub domain: DomainSpec,
}

impl ScaledPolygon {
    pub fn scale(&self) -> f64 {
        self.two_r as f64 / 2.0
    }

    pub fn max_edge_length(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                (b.0 - a.0).hypot(b.1 - a.1)
            })
            .fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for (x, y) in &self.vertices {
            let _ = writeln!(out, "{x},{y}");
        }
        out
    }

    pub fn to_svg(&self) -> String {
        svg_closed_path(&self.vertices, &format!("{} Q={}", self.domain, self.order))
    }
}

/// Integer numerators `(2x + 1, 2y − 2R)` of the scaled vertices over `2R`.
pub fn scaled_numerators(polygon: &LatticePolygon) -> Vec<(i128, i128)> {
    let two_r = polygon.two_r();
    polygon
        .vertices
        .iter()
        .map(|&(x, y)| (2 * i128::from(x) + 1, 2 * i128::from(y) - two_r))
        .collect()
}

pub fn scale_polygon(polygon: &LatticePolygon) -> Result<ScaledPolygon> {
    let two_r = polygon.two_r();
    if two_r <= 0 {
        return Err(Error::InvalidArgument(format!(
            "{} at order {} is degenerate",
            polygon.domain, polygon.order
        )));
    }
    let d = two_r as f64;
    let vertices = scaled_numerators(polygon)
        .into_iter()
        .map(|(x, y)| (x as f64 / d, y as f64 / d))
        .collect();
    Ok(ScaledPolygon {
        vertices,
        two_r,
        order: polygon.order,
        domain: polygon.domain,
    })
}

/// `(X_S(Q, λ), Y_S(Q, λ))`: the sums of the vectors of `V_Q(S)` with
/// positive coordinates and slope at most `λ ∈ [0, 1]`.
pub fn fundamental_vertex(domain: &DomainSpec, order: i64, lambda: &RealSpec) -> Result<(i64, i64)> {
    check_order(order)?;
    if !lambda.in_closed_unit_interval() {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "[0, 1]",
        });
    }
    let (x, y) = (1..=order)
        .into_par_iter()
        .map(|q| {
            let top = lambda.floor_mul(q).min(q);
            let (mut count, mut sum_a) = (0i128, 0i128);
            for a in 1..=top {
                if a.gcd(&q) == 1 && domain.contains_lattice(q, a, order) {
                    count += 1;
                    sum_a += i128::from(a);
                }
            }
            (count * i128::from(q), sum_a)
        })
        .reduce(|| (0, 0), |l, r| (l.0 + r.0, l.1 + r.1));
    let x = i64::try_from(x).map_err(|_| Error::Overflow("fundamental vertex"))?;
    let y = i64::try_from(y).map_err(|_| Error::Overflow("fundamental vertex"))?;
    Ok((x, y))
}
