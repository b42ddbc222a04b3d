//! Elastic translations of the plane: column `x` is stretched by `r(x)` while
//! rows are compressed by the same factor, and the induced maps on `N`.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use crate::cantor::{info, pair, unpair, Cell};
use crate::nat::{add, mul, nat, parse_nat, Bits, Natural};
use crate::Error;

pub type StretchFn<N> = Arc<dyn Fn(&N) -> N + Send + Sync>;

/// The stretch function `r`. Values below one are clamped to one.
#[derive(Clone)]
pub enum ElasticSpec<N> {
    Constant(N),
    /// `r(x) = c * x^k`.
    Polynomial {
        c: N,
        k: u32,
    },
    /// Caller-supplied; must be monotone non-decreasing.
    Custom(StretchFn<N>),
}

impl<N: Natural> ElasticSpec<N> {
    pub fn identity() -> Self {
        ElasticSpec::Constant(N::one())
    }

    pub fn custom(r: impl Fn(&N) -> N + Send + Sync + 'static) -> Self {
        ElasticSpec::Custom(Arc::new(r))
    }

    /// `r(x) = x`, the quadratic stretch.
    pub fn linear() -> Self {
        ElasticSpec::Polynomial { c: N::one(), k: 1 }
    }

    /// Effective stretch at `x`, panicking if it overflows the scalar type.
    pub fn stretch(&self, x: &N) -> N {
        self.checked_stretch(x)
            .expect("stretch overflows the scalar type")
    }

    fn checked_stretch(&self, x: &N) -> Option<N> {
        let r = match self {
            ElasticSpec::Constant(c) => c.clone(),
            ElasticSpec::Polynomial { c, k } => {
                num_traits::checked_pow(x.clone(), *k as usize)?.checked_mul(c)?
            }
            ElasticSpec::Custom(f) => f(x),
        };
        Some(if r.is_zero() { N::one() } else { r })
    }

    /// `u * r(u)`, or `None` on overflow.
    fn column_start(&self, u: &N) -> Option<N> {
        u.checked_mul(&self.checked_stretch(u)?)
    }
}

impl<N: Natural> fmt::Debug for ElasticSpec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElasticSpec::Constant(c) => write!(f, "Constant({c})"),
            ElasticSpec::Polynomial { c, k } => write!(f, "Polynomial {{ c: {c}, k: {k} }}"),
            ElasticSpec::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// `id`, `const:C` or `poly:C:K`.
impl<N: Natural> FromStr for ElasticSpec<N> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let positive = |p: &str| -> Result<N, Error> {
            let v: N = parse_nat(p)?;
            if v.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "stretch parameter must be at least 1 in {s:?}"
                )));
            }
            Ok(v)
        };
        match parts.as_slice() {
            ["id"] => Ok(ElasticSpec::identity()),
            ["const", c] => Ok(ElasticSpec::Constant(positive(c)?)),
            ["poly", c, k] => {
                let k: u32 = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                if k == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "exponent must be at least 1 in {s:?}"
                    )));
                }
                Ok(ElasticSpec::Polynomial { c: positive(c)?, k })
            }
            _ => Err(Error::Parse(format!(
                "unknown elastic spec {s:?}; expected id, const:C or poly:C:K"
            ))),
        }
    }
}

/// `(x r(x) + y mod r(x), y div r(x))`.
pub fn elastic_apply<N: Natural>(spec: &ElasticSpec<N>, c: &Cell<N>) -> Cell<N> {
    let r = spec.stretch(&c.x);
    let (q, m) = c.y.div_rem(&r);
    Cell::new(add(&mul(&c.x, &r), &m), q)
}

pub fn elastic_invert<N: Natural>(spec: &ElasticSpec<N>, c: &Cell<N>) -> Result<Cell<N>, Error> {
    let not_in_image = || Error::NotInImage(c.to_string());
    // largest u with u r(u) <= x'; u r(u) is strictly increasing and at least u
    let (mut lo, mut hi) = (N::zero(), c.x.clone());
    while lo < hi {
        let mid = lo.clone() + (hi.clone() - lo.clone() + N::one()) / nat(2);
        match spec.column_start(&mid) {
            Some(start) if start <= c.x => lo = mid,
            _ => hi = mid - N::one(),
        }
    }
    let u = lo;
    let r = spec.stretch(&u);
    let d = c.x.clone() - mul(&u, &r);
    if d >= r {
        return Err(not_in_image());
    }
    Ok(Cell::new(u, add(&mul(&c.y, &r), &d)))
}

pub fn chain_forward<N: Natural>(spec: &ElasticSpec<N>, n: &N) -> N {
    pair(&elastic_apply(spec, &unpair(n)))
}

pub fn chain_backward<N: Natural>(spec: &ElasticSpec<N>, n: &N) -> Result<N, Error> {
    Ok(pair(&elastic_invert(spec, &unpair(n))?))
}

/// `I(pi(e(x, y))) - I(x) - I(y)`.
pub fn elastic_delta<N: Natural>(spec: &ElasticSpec<N>, c: &Cell<N>) -> Bits {
    info(&pair(&elastic_apply(spec, c))) - info(&c.x) - info(&c.y)
}

/// Inclusive sampling window over source cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceWindow<N> {
    pub x_start: N,
    pub x_end: N,
    pub y_start: N,
    pub y_end: N,
    pub stride: N,
}

impl<N: Natural> SurfaceWindow<N> {
    pub fn square(start: N, end: N, stride: N) -> Self {
        SurfaceWindow {
            x_start: start.clone(),
            x_end: end.clone(),
            y_start: start,
            y_end: end,
            stride,
        }
    }

    pub fn single(c: &Cell<N>) -> Self {
        SurfaceWindow {
            x_start: c.x.clone(),
            x_end: c.x.clone(),
            y_start: c.y.clone(),
            y_end: c.y.clone(),
            stride: N::one(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfacePoint<N> {
    pub cell: Cell<N>,
    pub delta: Bits,
}

/// Efficiency of the elastic chain at every sampled cell, ordered by the
/// Cantor code of the source cell.
pub fn surface_grid<N: Natural>(
    spec: &ElasticSpec<N>,
    window: &SurfaceWindow<N>,
) -> Result<Vec<SurfacePoint<N>>, Error> {
    if window.stride.is_zero() || window.x_start > window.x_end || window.y_start > window.y_end {
        return Err(Error::EmptyRange);
    }
    let axis = |start: &N, end: &N| {
        let mut v = Vec::new();
        let mut t = start.clone();
        while t <= *end {
            v.push(t.clone());
            match t.checked_add(&window.stride) {
                Some(next) => t = next,
                None => break,
            }
        }
        v
    };
    let xs = axis(&window.x_start, &window.x_end);
    let ys = axis(&window.y_start, &window.y_end);
    let mut points: Vec<(N, SurfacePoint<N>)> = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let cell = Cell::new(x.clone(), y.clone());
            let delta = elastic_delta(spec, &cell);
            points.push((pair(&cell), SurfacePoint { cell, delta }));
        }
    }
    points.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(points.into_iter().map(|(_, p)| p).collect())
}

/// Writes `x,y,delta_bits` rows with six decimals and LF line endings.
pub fn write_surface_csv<N: Natural, W: Write>(
    points: &[SurfacePoint<N>],
    out: W,
) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["x", "y", "delta_bits"])?;
    for p in points {
        w.write_record([
            p.cell.x.to_string(),
            p.cell.y.to_string(),
            format!("{:.6}", p.delta),
        ])?;
    }
    w.flush()
}

/// Real-valued pairing `(x + y)(x + y + 1)/2 + y`.
fn real_pair(x: f64, y: f64) -> f64 {
    (x + y) * (x + y + 1.0) / 2.0 + y
}

/// `pi(c x, h x / c) / pi(x, h x)` for the continuous stretch by `c`.
pub fn reference_ratio(c: u64, h: f64, x: f64) -> Result<f64, Error> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be at least 1".into()));
    }
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "h must be positive, got {h}"
        )));
    }
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "x must be at least 1, got {x}"
        )));
    }
    let c = c as f64;
    Ok(real_pair(c * x, h * x / c) / real_pair(x, h * x))
}
