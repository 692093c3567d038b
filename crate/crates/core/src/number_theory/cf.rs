use super::fraction::Fraction;
use super::real::RealSpec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CfKind {
    Rational,
    PeriodicQuadratic,
    PatternGenerated,
}

/// The first few partial quotients `b_1, b_2, …` of a number in `(0, 1)`
/// (the integer part `b_0 = 0` is implicit).
///
/// Convergents follow the recurrences
/// `h_{n+1} = b_n h_n + h_{n−1}`, `k_{n+1} = b_n k_n + k_{n−1}` seeded with
/// `h_0 = 1, h_1 = 0, k_0 = 0, k_1 = 1`, so `h_1/k_1 = 0/1` and
/// `h_{n+1}/k_{n+1}` is the value of `[0; b_1, …, b_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    kind: CfKind,
    quotients: Vec<u64>,
    terminated: bool,
}

impl ContinuedFraction {
    pub fn kind(&self) -> CfKind {
        self.kind
    }

    /// `b_1, b_2, …` as expanded.
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// `b_n` for `n ≥ 1`.
    pub fn b(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.quotients.get(i).copied())
    }

    /// True when the expansion is complete (the value is the last convergent).
    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// `(h_n, k_n)` for `n = 0, 1, …, len + 1`.
    pub fn hk(&self) -> Result<Vec<(i128, i128)>> {
        let mut out = Vec::with_capacity(self.quotients.len() + 2);
        out.push((1, 0));
        out.push((0, 1));
        for &b in &self.quotients {
            let b = i128::from(b);
            let (h1, k1) = out[out.len() - 1];
            let (h0, k0) = out[out.len() - 2];
            let h = b.checked_mul(h1).and_then(|v| v.checked_add(h0));
            let k = b.checked_mul(k1).and_then(|v| v.checked_add(k0));
            match (h, k) {
                (Some(h), Some(k)) => out.push((h, k)),
                _ => return Err(Error::Overflow("convergent recurrence")),
            }
        }
        Ok(out)
    }
}

/// Expands `x ∈ (0, 1)` to at most `n_terms` partial quotients after `b_0 = 0`.
pub fn cf_expand(x: &RealSpec, n_terms: usize) -> Result<ContinuedFraction> {
    if !x.in_open_unit_interval() {
        return Err(Error::OutOfRange {
            value: x.to_string(),
            range: "(0, 1)",
        });
    }
    let kind = match x {
        RealSpec::Rational(_) => CfKind::Rational,
        RealSpec::Surd(_) | RealSpec::Periodic { .. } => CfKind::PeriodicQuadratic,
        RealSpec::Pattern(_) => CfKind::PatternGenerated,
    };
    let mut stream = x.quotients();
    let b0 = stream.next();
    debug_assert_eq!(b0, Some(0));
    let quotients: Vec<u64> = stream.by_ref().take(n_terms).collect();
    let terminated = kind == CfKind::Rational && stream.next().is_none();
    Ok(ContinuedFraction {
        kind,
        quotients,
        terminated,
    })
}

/// `h_n/k_n` for `n = 1, …, count` (fewer if a rational expansion runs out).
pub fn convergents(cf: &ContinuedFraction, count: usize) -> Result<Vec<Fraction>> {
    cf.hk()?
        .into_iter()
        .skip(1)
        .take(count)
        .map(|(h, k)| {
            let h = i64::try_from(h).map_err(|_| Error::Overflow("convergent"))?;
            let k = i64::try_from(k).map_err(|_| Error::Overflow("convergent"))?;
            Ok(Fraction::new_unchecked(h, k))
        })
        .collect()
}

/// Ratios `k_n/k_{n+1}` for `n = 1, …` computed by `ρ_{n+1} = 1/(b_n + ρ_n)`,
/// `ρ_1 = k_0/k_1 = 0`. Returns `ρ_1, …, ρ_{len+1}`.
pub fn denominator_ratios(cf: &ContinuedFraction) -> Vec<f64> {
    let mut out = Vec::with_capacity(cf.quotients.len() + 1);
    let mut rho = 0.0f64;
    out.push(rho);
    for &b in &cf.quotients {
        rho = 1.0 / (b as f64 + rho);
        out.push(rho);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_sqrt3_convergents() {
        let cf = cf_expand(&RealSpec::inv_sqrt3(), 12).unwrap();
        assert_eq!(cf.kind(), CfKind::PeriodicQuadratic);
        assert_eq!(cf.quotients(), [1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]);
        let c = convergents(&cf, 7).unwrap();
        let expect = [(0, 1), (1, 1), (1, 2), (3, 5), (4, 7), (11, 19), (15, 26)];
        let got: Vec<_> = c.iter().map(|f| (f.num(), f.den())).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn seeds() {
        let cf = cf_expand(&RealSpec::inv_sqrt3(), 3).unwrap();
        let hk = cf.hk().unwrap();
        assert_eq!(hk[0], (1, 0));
        assert_eq!(hk[1], (0, 1));
    }

    #[test]
    fn e_minus_two_quotients() {
        let cf = cf_expand(&RealSpec::e_minus_two(), 12).unwrap();
        assert_eq!(cf.kind(), CfKind::PatternGenerated);
        assert_eq!(cf.quotients(), [1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1]);
    }

    #[test]
    fn rational_terminates_at_itself() {
        let cf = cf_expand(&RealSpec::rational(1, 2).unwrap(), 10).unwrap();
        assert_eq!(cf.quotients(), [2]);
        assert!(cf.is_terminated());
        let c = convergents(&cf, 10).unwrap();
        assert_eq!(*c.last().unwrap(), Fraction::new(1, 2).unwrap());
    }

    #[test]
    fn out_of_range_inputs() {
        for x in [
            RealSpec::rational(0, 1).unwrap(),
            RealSpec::rational(1, 1).unwrap(),
            RealSpec::rational(3, 2).unwrap(),
            "surd:(1+sqrt(2))/1".parse().unwrap(),
        ] {
            assert!(matches!(cf_expand(&x, 4), Err(Error::OutOfRange { .. })), "{x}");
        }
    }

    #[test]
    fn convergents_bracket_value_with_error_bound() {
        let x = RealSpec::e_minus_two();
        let cf = cf_expand(&x, 25).unwrap();
        let hk = cf.hk().unwrap();
        for n in 2..hk.len() - 1 {
            let (h, k) = hk[n];
            let below = x.cmp_rational(h as i64, k as i64) == std::cmp::Ordering::Greater;
            assert_eq!(below, n % 2 == 1, "n = {n}");
            assert!(hk[n + 1].1 > k);
            let bound = 1.0 / (k as f64 * hk[n + 1].1 as f64);
            if bound > 1e-12 {
                let err = (x.to_f64() - h as f64 / k as f64).abs();
                assert!(err < bound, "n = {n}");
            }
        }
    }

    #[test]
    fn ratio_limits() {
        let cf = cf_expand(&RealSpec::inv_golden(), 40).unwrap();
        let rho = denominator_ratios(&cf);
        let g = (5f64.sqrt() - 1.0) / 2.0;
        assert!((rho[40] - g).abs() < 1e-6);

        let cf = cf_expand(&RealSpec::inv_sqrt3(), 40).unwrap();
        let hk = cf.hk().unwrap();
        let min = (2..=40)
            .map(|n| hk[n].1 as f64 / hk[n + 1].1 as f64)
            .fold(f64::INFINITY, f64::min);
        assert!(min > 0.33, "min = {min}");
    }
}
