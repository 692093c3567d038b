//! Quick checks of exactly known values, run by `jarnik selftest`.

use std::fmt;

use num_rational::Ratio;

use crate::curvature::{circumradius_squared, limsup_liminf_estimate, local_radius, TraceMode};
use crate::domains::DomainSpec;
use crate::error::Result;
use crate::limit_curves::{curve_c1, curve_cdelta, curve_cp, curve_cp_alternate_y};
use crate::number_theory::{cf_expand, farey_neighbors, farey_sequence, Fraction, RealSpec, Side};
use crate::polygon::{build_polygon, fundamental_vertex, primitive_vectors, scale_polygon};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SelftestItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(f, "FAIL {}: {}", self.name, self.detail)
        }
    }
}

type Check = fn() -> Result<std::result::Result<(), String>>;

fn expect<T: PartialEq + fmt::Debug>(got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn close(got: f64, want: f64, tol: f64) -> std::result::Result<(), String> {
    if (got - want).abs() <= tol {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want} within {tol}"))
    }
}

const CHECKS: &[(&str, Check)] = &[
    ("square V_4 has 48 vectors", || {
        Ok(expect(primitive_vectors(&DomainSpec::Square, 4)?.len(), 48))
    }),
    ("P_4 vertices", || {
        let p = build_polygon(&DomainSpec::Square, 4)?;
        let want = [
            (0, 0),
            (4, 1),
            (7, 2),
            (9, 3),
            (12, 5),
            (16, 8),
            (17, 9),
            (20, 13),
            (22, 16),
            (23, 18),
            (24, 21),
            (25, 25),
            (25, 26),
            (24, 30),
        ];
        Ok(expect(&p.vertices[..14], &want[..]).and(expect(p.vertices[47], (-1, 0))))
    }),
    ("vertex (9,3) at slope 1/sqrt3", || {
        Ok(expect(
            fundamental_vertex(&DomainSpec::Square, 4, &RealSpec::inv_sqrt3())?,
            (9, 3),
        ))
    }),
    ("R(4) = 25.5", || {
        Ok(expect(
            scale_polygon(&build_polygon(&DomainSpec::Square, 4)?)?.scale(),
            25.5,
        ))
    }),
    ("circumradius^2 of (7,2),(9,3),(12,5) = 1105/2", || {
        Ok(expect(
            circumradius_squared((7, 2), (9, 3), (12, 5))?,
            Ratio::new(1105, 2),
        ))
    }),
    ("circumradius^2 of (4,1),(7,2),(9,3) = 725/2", || {
        Ok(expect(
            circumradius_squared((4, 1), (7, 2), (9, 3))?,
            Ratio::new(725, 2),
        ))
    }),
    ("r_4(1/2+)^2 = 1105/2 and r_4(1/2-)^2 = 725/2", || {
        let half = RealSpec::rational(1, 2)?;
        let plus = local_radius(4, &half, Some(Side::Plus))?.r_squared;
        let minus = local_radius(4, &half, Some(Side::Minus))?.r_squared;
        Ok(expect((plus, minus), (Ratio::new(1105, 2), Ratio::new(725, 2))))
    }),
    ("Farey sequence of order 4", || {
        let got: Vec<String> = farey_sequence(4)?.iter().map(ToString::to_string).collect();
        Ok(expect(got.join(" "), "0/1 1/4 1/3 1/2 2/3 3/4 1/1".to_string()))
    }),
    ("order-15 neighbours of 1/sqrt3 are 4/7, 7/12", || {
        let n = farey_neighbors(&RealSpec::inv_sqrt3(), 15)?;
        Ok(expect((n.left, n.right), (Fraction::new(4, 7)?, Fraction::new(7, 12)?)))
    }),
    ("continued fraction of 1/sqrt3", || {
        Ok(expect(
            cf_expand(&RealSpec::inv_sqrt3(), 12)?.quotients().to_vec(),
            vec![1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1],
        ))
    }),
    ("continued fraction of e-2", || {
        Ok(expect(
            cf_expand(&RealSpec::e_minus_two(), 12)?.quotients().to_vec(),
            vec![1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1],
        ))
    }),
    ("diamond moments at 1 are (1/8, 1/24)", || {
        let m = DomainSpec::Diamond.moment_integrals(1.0)?;
        Ok(close(m.mx, 0.125, 1e-15).and(close(m.my, 1.0 / 24.0, 1e-15)))
    }),
    ("C1 ends at (3/4, -3/4)", || Ok(expect(curve_c1(1.0), (0.75, -0.75)))),
    ("C_2 ends at (5/7, -5/7)", || {
        let (x, y) = curve_cdelta(2.0, 1.0)?;
        Ok(close(x, 5.0 / 7.0, 1e-15).and(close(y, -5.0 / 7.0, 1e-15)))
    }),
    ("C'_2 is the unit circle", || {
        let (x, y) = curve_cp(2.0, 0.75)?;
        Ok(close(x, 0.6, 1e-9).and(close(y, -0.8, 1e-9)))
    }),
    ("alternate y-form at p = 1, lambda = 1/2 is -8/9", || {
        Ok(close(curve_cp_alternate_y(1.0, 0.5)?, -8.0 / 9.0, 1e-14))
    }),
    ("golden-ratio lim sup is the bottom of the band", || {
        let e = limsup_liminf_estimate(&RealSpec::inv_golden(), 200, TraceMode::Direct)?;
        Ok(close(e.exact_limsup.unwrap_or(f64::NAN), e.bounds.limsup_band.0, 1e-9))
    }),
];

/// Runs every check; never panics, errors count as failures.
pub fn selftest() -> Vec<SelftestItem> {
    CHECKS
        .iter()
        .map(|&(name, check)| {
            let (passed, detail) = match check() {
                Ok(Ok(())) => (true, String::new()),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, e.to_string()),
            };
            SelftestItem { name, passed, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_and_repeat_identically() {
        let a = selftest();
        assert!(a.iter().all(|i| i.passed), "{a:?}");
        assert_eq!(a, selftest());
    }

    #[test]
    fn failures_are_reported() {
        let bad = SelftestItem {
            name: "x",
            passed: false,
            detail: "got 1".into(),
        };
        assert_eq!(bad.to_string(), "FAIL x: got 1");
        assert!(expect(1, 2).is_err());
        assert!(close(1.0, 1.1, 1e-3).is_err());
    }
}
