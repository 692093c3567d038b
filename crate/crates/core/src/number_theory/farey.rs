use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use super::fraction::Fraction;
use super::real::RealSpec;
use crate::error::{Error, Result};

/// The Farey sequence of order `Q`: reduced fractions in `[0, 1]` with
/// denominator at most `Q`, increasing.
pub fn farey_sequence(order: i64) -> Result<Vec<Fraction>> {
    check_order(order)?;
    let (mut a, mut b, mut c, mut d) = (0i64, 1i64, 1i64, order);
    let mut out = vec![Fraction::ZERO];
    while c <= order {
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
        out.push(Fraction::new_unchecked(a, b));
    }
    Ok(out)
}

fn check_order(order: i64) -> Result<()> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!(
            "Farey order must be at least 1, got {order}"
        )));
    }
    Ok(())
}

/// Two consecutive fractions of the order-`Q` Farey sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FareyNeighbors {
    pub left: Fraction,
    pub right: Fraction,
    pub order: i64,
}

impl FareyNeighbors {
    /// `a2·q1 − a1·q2`; equals 1 for genuine neighbours.
    pub fn determinant(&self) -> i128 {
        self.left.determinant(&self.right)
    }
}

impl fmt::Display for FareyNeighbors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) @ Q={}", self.left, self.right, self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `λ⁺`: the pair `(λ, successor)`.
    Plus,
    /// `λ⁻`: the pair `(predecessor, λ)`.
    Minus,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Side::Plus),
            "-" | "minus" => Ok(Side::Minus),
            _ => Err(Error::parse("side", s, "expected + or -")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

/// The order-`Q` Farey neighbours of an irrational `λ ∈ (0, 1)`, read off the
/// continued fraction.
///
/// With `k_n` the convergent denominators, there are unique `n ≥ 1` and
/// `1 ≤ j ≤ b_n` with `j·k_n + k_{n−1} ≤ Q < (j+1)·k_n + k_{n−1}`; the
/// neighbours are `h_n/k_n` and the secondary convergent
/// `(j·h_n + h_{n−1})/(j·k_n + k_{n−1})`.
pub fn farey_neighbors(lambda: &RealSpec, order: i64) -> Result<FareyNeighbors> {
    check_order(order)?;
    if lambda.is_rational() {
        return Err(Error::RationalLambda(lambda.to_string()));
    }
    if !lambda.in_open_unit_interval() {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "(0, 1)",
        });
    }
    let q = i128::from(order);
    let mut quotients = lambda.quotients();
    quotients.next(); // b_0 = 0
                      // (h_{n−1}, k_{n−1}), (h_n, k_n), starting at n = 1.
    let (mut h_prev, mut k_prev) = (1i128, 0i128);
    let (mut h, mut k) = (0i128, 1i128);
    loop {
        let b = i128::from(quotients.next().expect("irrational expansions are infinite"));
        let k_next = b * k + k_prev;
        if q < k_next + k {
            // Q lies in the block of index n: j k_n + k_{n−1} ≤ Q, j ≤ b_n.
            let j = (q - k_prev) / k;
            debug_assert!(j >= 1 && j <= b);
            let conv = Fraction::new_unchecked(h as i64, k as i64);
            let secondary = Fraction::new_unchecked((j * h + h_prev) as i64, (j * k + k_prev) as i64);
            let (left, right) = if conv < secondary {
                (conv, secondary)
            } else {
                (secondary, conv)
            };
            return Ok(FareyNeighbors { left, right, order });
        }
        (h_prev, h) = (h, b * h + h_prev);
        (k_prev, k) = (k, k_next);
    }
}

/// Same query answered by descending the Stern–Brocot tree with exact
/// comparisons only. Works for any `λ ∈ (0, 1)`; for a rational `λ` with
/// denominator `≤ Q` the `side` decides which neighbour pair is returned.
pub fn farey_neighbors_stern_brocot(lambda: &RealSpec, side: Side, order: i64) -> Result<FareyNeighbors> {
    check_order(order)?;
    if !lambda.in_closed_unit_interval() {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "[0, 1]",
        });
    }
    // "m goes left of λ": m < λ, or m = λ approached from the plus side.
    let left_of = |num: i64, den: i64| match lambda.cmp_rational(num, den) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => side == Side::Plus,
    };
    let (mut l, mut r) = ((0i64, 1i64), (1i64, 1i64));
    // Endpoints themselves: λ = 0⁻ or λ = 1⁺ has no pair inside [0, 1].
    if !left_of(0, 1) || left_of(1, 1) {
        return Err(Error::OutOfRange {
            value: format!("{lambda}{side}"),
            range: "the interior of [0, 1]",
        });
    }
    loop {
        if l.1 + r.1 > order {
            break;
        }
        // Batch steps in one direction: largest t ≥ 1 with l + t·r still left of λ
        // (or right), found by exponential then binary search.
        if left_of(l.0 + r.0, l.1 + r.1) {
            let t = extend(|t| {
                let d = l.1 + t * r.1;
                d <= order && left_of(l.0 + t * r.0, d)
            });
            l = (l.0 + t * r.0, l.1 + t * r.1);
        } else {
            let t = extend(|t| {
                let d = r.1 + t * l.1;
                d <= order && !left_of(r.0 + t * l.0, d)
            });
            r = (r.0 + t * l.0, r.1 + t * l.1);
        }
    }
    Ok(FareyNeighbors {
        left: Fraction::new_unchecked(l.0, l.1),
        right: Fraction::new_unchecked(r.0, r.1),
        order,
    })
}

/// Largest `t ≥ 1` with `pred(t)`, given `pred(1)` and `pred` monotone.
fn extend(pred: impl Fn(i64) -> bool) -> i64 {
    let mut lo = 1i64;
    let mut hi = 2i64;
    while pred(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Neighbours of a rational `λ = a/q` (with `q ≤ Q`) on the requested side.
pub fn farey_neighbors_sided(lambda: Fraction, side: Side, order: i64) -> Result<FareyNeighbors> {
    check_order(order)?;
    if lambda.den() > order {
        return Err(Error::DenominatorExceedsOrder {
            den: lambda.den(),
            order,
        });
    }
    if lambda > Fraction::ONE {
        return Err(Error::OutOfRange {
            value: lambda.to_string(),
            range: "[0, 1]",
        });
    }
    let (a, q) = (lambda.num(), lambda.den());
    match side {
        Side::Plus => {
            if lambda == Fraction::ONE {
                return Err(Error::OutOfRange {
                    value: "1+".into(),
                    range: "the interior of [0, 1]",
                });
            }
            // Successor c/d: c·q − a·d = 1, so d ≡ −a⁻¹ (mod q), d maximal ≤ Q.
            let d = largest_in_class(mod_inverse(a, q).map(|inv| (q - inv) % q), q, order);
            let c = (1 + i128::from(a) * i128::from(d)) / i128::from(q);
            Ok(FareyNeighbors {
                left: lambda,
                right: Fraction::new_unchecked(c as i64, d),
                order,
            })
        }
        Side::Minus => {
            if lambda == Fraction::ZERO {
                return Err(Error::OutOfRange {
                    value: "0-".into(),
                    range: "the interior of [0, 1]",
                });
            }
            // Predecessor b/d: a·d − b·q = 1, so d ≡ a⁻¹ (mod q).
            let d = largest_in_class(mod_inverse(a, q), q, order);
            let b = (i128::from(a) * i128::from(d) - 1) / i128::from(q);
            Ok(FareyNeighbors {
                left: Fraction::new_unchecked(b as i64, d),
                right: lambda,
                order,
            })
        }
    }
}

/// Largest `d ≤ order`, `d ≥ 1`, with `d ≡ residue (mod modulus)`; any `d` when
/// `modulus = 1`.
fn largest_in_class(residue: Option<i64>, modulus: i64, order: i64) -> i64 {
    let residue = residue.unwrap_or(0);
    let d = order - (order - residue).rem_euclid(modulus);
    if d >= 1 {
        d
    } else {
        d + modulus
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return None;
    }
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    Some(e.x.rem_euclid(m))
}
