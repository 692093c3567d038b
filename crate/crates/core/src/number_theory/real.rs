//! Exact real numbers given by finite data: rationals, quadratic surds,
//! periodic continued fractions and a few named constants.
//!
//! Every variant can produce its partial quotients exactly, which is all the
//! Farey and polygon code needs: comparisons against rationals and
//! `floor(λ·q)` are decided from the quotient stream, never from a float.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::{Integer, Roots};

use super::fraction::Fraction;
use crate::error::{Error, Result};

/// `(p + √d) / q` with `d > 0` not a perfect square and `q ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: i64,
    d: i64,
    q: i64,
}

impl QuadraticSurd {
    /// Returns a [`RealSpec`], collapsing to a rational when `d` is a square.
    #[allow(clippy::new_ret_no_self)]
    pub fn new(p: i64, d: i64, q: i64) -> Result<RealSpec> {
        if q == 0 {
            return Err(Error::InvalidArgument("surd denominator is zero".into()));
        }
        if d < 0 {
            return Err(Error::InvalidArgument(format!(
                "surd radicand must be non-negative, got {d}"
            )));
        }
        let s = d.sqrt();
        if s * s == d {
            let (num, den) = if q < 0 { (-(p + s), -q) } else { (p + s, q) };
            return Fraction::new(num, den).map(RealSpec::Rational);
        }
        Ok(RealSpec::Surd(QuadraticSurd { p, d, q }))
    }

    pub fn parts(&self) -> (i64, i64, i64) {
        (self.p, self.d, self.q)
    }

    fn to_f64(self) -> f64 {
        (self.p as f64 + (self.d as f64).sqrt()) / self.q as f64
    }
}

/// Named constants given by a quotient pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternConstant {
    /// `e − 2 = [0; 1, 2, 1, 1, 4, 1, 1, 6, …]`.
    EMinusTwo,
}

impl PatternConstant {
    /// Partial quotient `b_i`, `i ≥ 0`.
    pub fn quotient(&self, i: usize) -> u64 {
        match self {
            PatternConstant::EMinusTwo => {
                if i == 0 {
                    0
                } else if i % 3 == 2 {
                    2 * (i as u64 + 1) / 3
                } else {
                    1
                }
            }
        }
    }
}

/// An exactly specified real number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RealSpec {
    Rational(Fraction),
    Surd(QuadraticSurd),
    /// `[b0; prefix…, (period…)]` with a non-empty period.
    Periodic {
        b0: u64,
        prefix: Vec<u64>,
        period: Vec<u64>,
    },
    Pattern(PatternConstant),
}

impl RealSpec {
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        Fraction::new(num, den).map(RealSpec::Rational)
    }

    /// `1/√3 = √3/3`.
    pub fn inv_sqrt3() -> Self {
        RealSpec::Surd(QuadraticSurd { p: 0, d: 3, q: 3 })
    }

    /// `(√5 − 1)/2 = [0; 1, 1, 1, …]`.
    pub fn inv_golden() -> Self {
        RealSpec::Surd(QuadraticSurd { p: -1, d: 5, q: 2 })
    }

    pub fn e_minus_two() -> Self {
        RealSpec::Pattern(PatternConstant::EMinusTwo)
    }

    /// A periodic continued fraction; an empty period yields the rational.
    pub fn periodic(b0: u64, prefix: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if prefix.iter().chain(period.iter()).any(|&b| b == 0) {
            return Err(Error::InvalidArgument(
                "partial quotients after b0 must be positive".into(),
            ));
        }
        if period.is_empty() {
            let mut terms = vec![b0];
            terms.extend(prefix);
            return rational_from_quotients(&terms).map(RealSpec::Rational);
        }
        Ok(RealSpec::Periodic { b0, prefix, period })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, RealSpec::Rational(_))
    }

    pub fn as_fraction(&self) -> Option<Fraction> {
        match self {
            RealSpec::Rational(f) => Some(*f),
            _ => None,
        }
    }

    /// Partial quotients `b_0, b_1, …`; finite exactly when the value is rational.
    pub fn quotients(&self) -> Quotients {
        let state = match self {
            RealSpec::Rational(f) => QState::Euclid {
                num: i128::from(f.num()),
                den: i128::from(f.den()),
            },
            RealSpec::Surd(s) => {
                let (mut p, mut d, mut q) = (i128::from(s.p), i128::from(s.d), i128::from(s.q));
                // The recurrence needs q | d − p²; rescale otherwise.
                if (d - p * p) % q != 0 {
                    let k = q.abs();
                    p *= k;
                    d *= k * k;
                    q *= k;
                }
                QState::Surd {
                    p,
                    d,
                    q,
                    root: d.sqrt(),
                }
            }
            RealSpec::Periodic { b0, prefix, period } => QState::Periodic {
                b0: *b0,
                prefix: prefix.clone(),
                period: period.clone(),
            },
            RealSpec::Pattern(c) => QState::Pattern(*c),
        };
        Quotients { state, index: 0 }
    }

    /// Eventual period structure `(pre-period quotients after b0, period)` when
    /// the expansion is periodic. `None` for rationals and pattern constants.
    pub fn periodic_structure(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        match self {
            RealSpec::Periodic { prefix, period, .. } => Some((prefix.clone(), period.clone())),
            RealSpec::Surd(_) => {
                let mut quotients = self.quotients();
                quotients.next();
                let mut seen: Vec<((i128, i128), u64)> = Vec::new();
                loop {
                    let key = quotients.surd_state()?;
                    if let Some(start) = seen.iter().position(|(k, _)| *k == key) {
                        let qs: Vec<u64> = seen.iter().map(|(_, b)| *b).collect();
                        return Some((qs[..start].to_vec(), qs[start..].to_vec()));
                    }
                    let b = quotients.next()?;
                    seen.push((key, b));
                }
            }
            _ => None,
        }
    }

    /// Double-precision approximation, from a convergent with denominator > 2^40.
    pub fn to_f64(&self) -> f64 {
        match self {
            RealSpec::Rational(f) => f.to_f64(),
            RealSpec::Surd(s) => s.to_f64(),
            _ => {
                let (mut h0, mut h1) = (0i128, 1i128);
                let (mut k0, mut k1) = (1i128, 0i128);
                for b in self.quotients() {
                    let b = i128::from(b);
                    (h0, h1) = (h1, b * h1 + h0);
                    (k0, k1) = (k1, b * k1 + k0);
                    if k1 > 1 << 40 {
                        break;
                    }
                }
                h1 as f64 / k1 as f64
            }
        }
    }

    /// Exact comparison of `self` with `num/den` (`den > 0`).
    pub fn cmp_rational(&self, num: i64, den: i64) -> Ordering {
        debug_assert!(den > 0);
        match self {
            RealSpec::Rational(f) => {
                (i128::from(f.num()) * i128::from(den)).cmp(&(i128::from(num) * i128::from(f.den())))
            }
            _ => cmp_irrational(self.quotients(), num, den),
        }
    }

    pub fn cmp_fraction(&self, f: &Fraction) -> Ordering {
        self.cmp_rational(f.num(), f.den())
    }

    /// `floor(self · q)` for `q > 0`, exact.
    pub fn floor_mul(&self, q: i64) -> i64 {
        debug_assert!(q > 0);
        match self {
            RealSpec::Rational(f) => {
                Integer::div_floor(&(i128::from(f.num()) * i128::from(q)), &i128::from(f.den())) as i64
            }
            _ => {
                let mut k = (self.to_f64() * q as f64).floor() as i64;
                while self.cmp_rational(k + 1, q) == Ordering::Greater {
                    k += 1;
                }
                while self.cmp_rational(k, q) == Ordering::Less {
                    k -= 1;
                }
                k
            }
        }
    }

    /// `0 < self < 1`.
    pub fn in_open_unit_interval(&self) -> bool {
        self.cmp_rational(0, 1) == Ordering::Greater && self.cmp_rational(1, 1) == Ordering::Less
    }

    /// `0 ≤ self ≤ 1`.
    pub fn in_closed_unit_interval(&self) -> bool {
        self.cmp_rational(0, 1) != Ordering::Less && self.cmp_rational(1, 1) != Ordering::Greater
    }
}

fn rational_from_quotients(terms: &[u64]) -> Result<Fraction> {
    let (mut h, mut k) = (1i128, 0i128);
    let (mut h_prev, mut k_prev) = (0i128, 1i128);
    for &b in terms {
        let b = i128::from(b);
        (h_prev, h) = (h, b * h + h_prev);
        (k_prev, k) = (k, b * k + k_prev);
        if h > i128::from(i64::MAX) || k > i128::from(i64::MAX) {
            return Err(Error::Overflow("continued fraction evaluation"));
        }
    }
    Fraction::new(h as i64, k as i64)
}

/// Compares an irrational, given by its infinite quotient stream, with `num/den`.
fn cmp_irrational(mut x: Quotients, num: i64, den: i64) -> Ordering {
    let (mut n, mut d) = (i128::from(num), i128::from(den));
    let mut i = 0usize;
    loop {
        let xi = i128::from(x.next().expect("irrational expansions are infinite"));
        if d == 0 {
            // The rational's expansion ended at index i − 1 and x agreed on all of it;
            // x's complete quotient at i − 1 is strictly larger.
            return if (i - 1).is_multiple_of(2) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        let (ri, rem) = n.div_mod_floor(&d);
        if xi != ri {
            let x_bigger = xi > ri;
            return if x_bigger == i.is_multiple_of(2) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        n = d;
        d = rem;
        i += 1;
    }
}

/// Partial quotient iterator returned by [`RealSpec::quotients`].
#[derive(Clone, Debug)]
pub struct Quotients {
    state: QState,
    index: usize,
}

#[derive(Clone, Debug)]
enum QState {
    Euclid {
        num: i128,
        den: i128,
    },
    Surd {
        p: i128,
        d: i128,
        q: i128,
        root: i128,
    },
    Periodic {
        b0: u64,
        prefix: Vec<u64>,
        period: Vec<u64>,
    },
    Pattern(PatternConstant),
}

impl Quotients {
    fn surd_state(&self) -> Option<(i128, i128)> {
        match &self.state {
            QState::Surd { p, q, .. } => Some((*p, *q)),
            _ => None,
        }
    }
}

impl Iterator for Quotients {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let i = self.index;
        let b = match &mut self.state {
            QState::Euclid { num, den } => {
                if *den == 0 {
                    return None;
                }
                let (b, r) = num.div_mod_floor(den);
                *num = *den;
                *den = r;
                u64::try_from(b).ok()?
            }
            QState::Surd { p, d, q, root } => {
                // floor((p + √d)/q): √d ∈ (root, root + 1), and no multiple of q lies
                // strictly between p + root and p + root + 1.
                let upper = if *q > 0 { *p + *root + 1 } else { *p + *root };
                let b = Integer::div_ceil(&upper, q) - 1;
                let p_next = b * *q - *p;
                let q_next = (*d - p_next * p_next) / *q;
                *p = p_next;
                *q = q_next;
                u64::try_from(b).ok()?
            }
            QState::Periodic { b0, prefix, period } => {
                if i == 0 {
                    *b0
                } else if i <= prefix.len() {
                    prefix[i - 1]
                } else {
                    period[(i - 1 - prefix.len()) % period.len()]
                }
            }
            QState::Pattern(c) => c.quotient(i),
        };
        self.index += 1;
        Some(b)
    }
}

impl fmt::Display for RealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealSpec::Rational(r) => write!(f, "rat:{r}"),
            RealSpec::Surd(s) if *s == QuadraticSurd { p: 0, d: 3, q: 3 } => {
                write!(f, "const:inv-sqrt3")
            }
            RealSpec::Surd(s) if *s == QuadraticSurd { p: -1, d: 5, q: 2 } => {
                write!(f, "const:inv-golden")
            }
            RealSpec::Surd(s) => write!(f, "surd:({}+sqrt({}))/{}", s.p, s.d, s.q),
            RealSpec::Periodic { b0, prefix, period } => {
                let join = |v: &[u64]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "cf:[{b0};")?;
                if !prefix.is_empty() {
                    write!(f, "{},", join(prefix))?;
                }
                write!(f, "({})]", join(period))
            }
            RealSpec::Pattern(PatternConstant::EMinusTwo) => write!(f, "const:e-2"),
        }
    }
}

impl FromStr for RealSpec {
    type Err = Error;

    /// Grammar: `rat:a/b`, `surd:(P+sqrt(D))/Q`, `const:e-2`, `const:inv-sqrt3`,
    /// `const:inv-golden`, `cf:[b0;b1,…,(p1,p2,…)]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::parse("real specification", s, reason);
        let (kind, body) = s.split_once(':').ok_or_else(|| bad("missing `kind:` prefix"))?;
        match kind {
            "rat" => body.parse::<Fraction>().map(RealSpec::Rational),
            "const" => match body {
                "e-2" => Ok(RealSpec::e_minus_two()),
                "inv-sqrt3" => Ok(RealSpec::inv_sqrt3()),
                "inv-golden" => Ok(RealSpec::inv_golden()),
                _ => Err(bad("unknown constant")),
            },
            "surd" => parse_surd(body).ok_or_else(|| bad("expected (P+sqrt(D))/Q"))?,
            "cf" => parse_cf(body).ok_or_else(|| bad("expected [b0;b1,...,(p1,...)]"))?,
            _ => Err(bad("unknown kind")),
        }
    }
}

fn parse_surd(body: &str) -> Option<Result<RealSpec>> {
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    let (inner, q) = body.strip_prefix('(')?.split_once(")/")?;
    let q: i64 = q.parse().ok()?;
    let at = inner.find("sqrt(")?;
    let (p_part, rest) = inner.split_at(at);
    let d: i64 = rest.strip_prefix("sqrt(")?.strip_suffix(')')?.parse().ok()?;
    let (p, negative_root) = match p_part {
        "" | "+" => (0, false),
        "-" => (0, true),
        _ => {
            let (p, sign) = p_part.split_at(p_part.len() - 1);
            let p: i64 = p.parse().ok()?;
            match sign {
                "+" => (p, false),
                "-" => (p, true),
                _ => return None,
            }
        }
    };
    // (p − √d)/q = (−p + √d)/(−q)
    Some(if negative_root {
        QuadraticSurd::new(-p, d, -q)
    } else {
        QuadraticSurd::new(p, d, q)
    })
}

fn parse_cf(body: &str) -> Option<Result<RealSpec>> {
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = body.strip_prefix('[')?.strip_suffix(']')?;
    let (b0, rest) = inner.split_once(';').unwrap_or((inner, ""));
    let b0: u64 = b0.parse().ok()?;
    let (head, period) = match rest.find('(') {
        Some(at) => {
            let period = rest[at..].strip_prefix('(')?.strip_suffix(')')?;
            (rest[..at].trim_end_matches(','), Some(period))
        }
        None => (rest, None),
    };
    let list = |s: &str| -> Option<Vec<u64>> {
        if s.is_empty() {
            Some(Vec::new())
        } else {
            s.split(',').map(|t| t.parse().ok()).collect()
        }
    };
    let prefix = list(head)?;
    let period = match period {
        Some(p) => {
            let v = list(p)?;
            if v.is_empty() {
                return None;
            }
            v
        }
        None => Vec::new(),
    };
    Some(RealSpec::periodic(b0, prefix, period))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first(spec: &RealSpec, n: usize) -> Vec<u64> {
        spec.quotients().take(n).collect()
    }

    #[test]
    fn quotient_streams() {
        assert_eq!(first(&RealSpec::inv_sqrt3(), 8), [0, 1, 1, 2, 1, 2, 1, 2]);
        assert_eq!(
            first(&RealSpec::e_minus_two(), 12),
            [0, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8]
        );
        assert_eq!(first(&RealSpec::inv_golden(), 5), [0, 1, 1, 1, 1]);
        assert_eq!(first(&RealSpec::rational(1, 2).unwrap(), 10), [0, 2]);
        assert_eq!(first(&RealSpec::rational(15, 26).unwrap(), 10), [0, 1, 1, 2, 1, 3]);
    }

    #[test]
    fn surd_without_divisibility_is_rescaled() {
        // (1 + √2)/3: 3 ∤ 2 − 1. Check against float expansion.
        let x: RealSpec = "surd:(1+sqrt(2))/3".parse().unwrap();
        assert_eq!(first(&x, 6), [0, 1, 4, 8, 4, 8]);
        assert!((x.to_f64() - (1.0 + 2f64.sqrt()) / 3.0).abs() < 1e-15);
    }

    #[test]
    fn negative_root_sign() {
        let x: RealSpec = "surd:(3-sqrt(5))/2".parse().unwrap();
        assert!((x.to_f64() - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        // (3 − √5)/2 = 1 − 1/φ = [0; 2, 1, 1, 1, …]
        assert_eq!(first(&x, 5), [0, 2, 1, 1, 1]);
    }

    #[test]
    fn square_radicand_collapses() {
        let x: RealSpec = "surd:(1+sqrt(9))/8".parse().unwrap();
        assert_eq!(x, RealSpec::rational(1, 2).unwrap());
    }

    #[test]
    fn comparisons_are_exact() {
        let x = RealSpec::inv_sqrt3();
        assert_eq!(x.cmp_rational(4, 7), Ordering::Greater);
        assert_eq!(x.cmp_rational(7, 12), Ordering::Less);
        assert_eq!(x.cmp_rational(15, 26), Ordering::Greater);
        assert_eq!(x.cmp_rational(11, 19), Ordering::Less);
        assert_eq!(x.cmp_rational(1, 2), Ordering::Greater);
        assert_eq!(x.cmp_rational(1, 1), Ordering::Less);
        assert_eq!(x.cmp_rational(0, 1), Ordering::Greater);
        let e = RealSpec::e_minus_two();
        assert_eq!(e.cmp_rational(18, 25), Ordering::Less); // 0.72
        assert_eq!(e.cmp_rational(71, 99), Ordering::Greater); // 0.7171…
    }

    #[test]
    fn floor_mul_matches_definition() {
        let x = RealSpec::inv_sqrt3();
        for q in 1..2000i64 {
            let k = x.floor_mul(q);
            assert_eq!(x.cmp_rational(k, q), Ordering::Greater);
            assert_eq!(x.cmp_rational(k + 1, q), Ordering::Less);
        }
        let h = RealSpec::rational(1, 2).unwrap();
        assert_eq!(h.floor_mul(4), 2);
        assert_eq!(h.floor_mul(5), 2);
    }

    #[test]
    fn periodic_structure_of_surds() {
        assert_eq!(RealSpec::inv_sqrt3().periodic_structure(), Some((vec![1], vec![1, 2])));
        assert_eq!(RealSpec::inv_golden().periodic_structure(), Some((vec![], vec![1])));
        assert_eq!(RealSpec::e_minus_two().periodic_structure(), None);
    }

    #[test]
    fn grammar_round_trips() {
        for s in [
            "rat:1/2",
            "const:e-2",
            "const:inv-sqrt3",
            "const:inv-golden",
            "surd:(1+sqrt(7))/3",
            "cf:[0;1,(1,2)]",
            "cf:[0;(3)]",
        ] {
            let spec: RealSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<RealSpec>().unwrap(), spec);
        }
        assert_eq!(
            "cf:[0;2,3]".parse::<RealSpec>().unwrap(),
            RealSpec::rational(3, 7).unwrap()
        );
        for bad in ["1/2", "rat:x", "const:pi", "surd:1+sqrt(2)", "cf:[0;1,()]", "cf:0;1"] {
            assert!(bad.parse::<RealSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn periodic_and_surd_agree() {
        let a: RealSpec = "cf:[0;1,(1,2)]".parse().unwrap();
        assert_eq!(first(&a, 20), first(&RealSpec::inv_sqrt3(), 20));
        assert!((a.to_f64() - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    }
}
