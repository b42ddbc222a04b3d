//! Cantor pairing between the plane and the naturals, and the information
//! efficiency surface it induces.

use std::fmt;

use thiserror::Error;

use crate::nat::{add, isqrt, mul, nat, Bits, Natural};

/// A position `(x, y)` in the discrete plane; `x` is the column, `y` the row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell<N> {
    pub x: N,
    pub y: N,
}

impl<N> Cell<N> {
    pub fn new(x: N, y: N) -> Self {
        Cell { x, y }
    }
}

impl<N: fmt::Display> fmt::Display for Cell<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Triangular number `w(w+1)/2`.
pub fn triangular<N: Natural>(w: &N) -> N {
    let w1 = add(w, &N::one());
    // one of w, w+1 is even
    if w.is_even() {
        mul(&(w.clone() / nat(2)), &w1)
    } else {
        mul(w, &(w1 / nat(2)))
    }
}

/// The Cantor packing function `(x+y)(x+y+1)/2 + y`.
pub fn pair<N: Natural>(c: &Cell<N>) -> N {
    let w = add(&c.x, &c.y);
    add(&triangular(&w), &c.y)
}

/// Inverse of [`pair`]. The diagonal index `w` comes from an exact integer
/// square root of `8n + 1`, so the result is exact at any magnitude.
pub fn unpair<N: Natural>(n: &N) -> Cell<N> {
    let disc = add(&mul(n, &nat(8)), &N::one());
    let w = (isqrt(&disc) - N::one()) / nat(2);
    let t = triangular(&w);
    let y = n.clone() - t;
    let x = w - y.clone();
    Cell { x, y }
}

/// `I(n) = log2 n`, with `I(0) = I(1) = 0`.
pub fn info<N: Natural>(n: &N) -> Bits {
    n.log2()
}

/// Information efficiency of the pairing at a cell: `I(pair(c)) - I(x) - I(y)`.
pub fn delta_pi<N: Natural>(c: &Cell<N>) -> Bits {
    info(&pair(c)) - info(&c.x) - info(&c.y)
}

/// Lines and transformations whose limiting efficiency has a closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Asymptote {
    /// `delta_pi(x, x)` as `x` grows.
    Diagonal,
    /// `delta_pi(x, h x)` for a line through the origin, `h > 0`.
    OriginLine { h: f64 },
    /// `delta_pi(x, c)` along a horizontal line; diverges.
    ConstLine { c: f64 },
    /// Efficiency on the diagonal after an elastic translation by the constant `c`,
    /// derived from `pi(c x + x/c, ...)`.
    ElasticDiagonal { c: f64 },
    /// Limit of `pi(eps'_c(x, h x)) / pi(x, h x)` for the reference function. A pure ratio, not bits.
    Ratio { c: f64, h: f64 },
    /// The diagonal lift for a constant shift `c` in its expanded printed form.
    ConstShift { c: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum LimitError {
    #[error("the limit diverges to +infinity")]
    Divergent,
    #[error("parameter out of range: {0}")]
    BadParameter(&'static str),
}

/// Closed-form limit value for `kind`.
pub fn asymptote(kind: Asymptote) -> Result<f64, LimitError> {
    match kind {
        Asymptote::Diagonal => Ok(1.0),
        Asymptote::OriginLine { h } => {
            if h.is_nan() || h <= 0.0 {
                return Err(LimitError::BadParameter("h must be positive"));
            }
            Ok((0.5 * (h + 1.0) * (h + 1.0)).log2() - h.log2())
        }
        Asymptote::ConstLine { c } => {
            if c < 0.0 || c.is_nan() {
                return Err(LimitError::BadParameter("c must be non-negative"));
            }
            Err(LimitError::Divergent)
        }
        Asymptote::ElasticDiagonal { c } => {
            check_stretch(c)?;
            let s = c + 1.0 / c;
            Ok((0.5 * s * s).log2())
        }
        Asymptote::Ratio { c, h } => {
            check_stretch(c)?;
            if h.is_nan() || h <= 0.0 {
                return Err(LimitError::BadParameter("h must be positive"));
            }
            let num = (c * c + h) * (c * c + h);
            Ok(num / (c * c * (1.0 + h) * (1.0 + h)))
        }
        Asymptote::ConstShift { c } => {
            check_stretch(c)?;
            Ok(-(2.0 / c).log2() - c.log2() + (2.0 + 1.0 / (c * c) + c * c).log2())
        }
    }
}

fn check_stretch(c: f64) -> Result<(), LimitError> {
    if c >= 1.0 {
        Ok(())
    } else {
        Err(LimitError::BadParameter("c must be at least 1"))
    }
}
