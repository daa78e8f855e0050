//! Time-spans `[t, t + Δ[` under the affine group `(u, δ)`, rhythms, and
//! the two-line variant with diagonal or antidiagonal shape matrices.
//!
//! All arithmetic is exact over `Rational64`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::torsor::Side;

pub type Rational = Rational64;

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

fn ser_rat<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_pair<S: Serializer>(v: &[Rational; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_matrix<S: Serializer>(m: &[[Rational; 2]; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|row| [row[0].to_string(), row[1].to_string()]))
}

fn positive(x: Rational, what: &str) -> Result<Rational> {
    if x.is_positive() {
        Ok(x)
    } else {
        Err(Error::NonPositiveDuration(format!("{what} = {x}")))
    }
}

/// `[onset, onset + duration[` with `duration > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TimeSpan {
    #[serde(serialize_with = "ser_rat")]
    pub onset: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub duration: Rational,
}

impl TimeSpan {
    pub fn new(onset: Rational, duration: Rational) -> Result<Self> {
        Ok(TimeSpan {
            onset,
            duration: positive(duration, "duration")?,
        })
    }

    pub fn end(&self) -> Rational {
        self.onset + self.duration
    }

    /// Half-open intervals overlap when each starts before the other ends.
    pub fn overlaps(&self, other: &TimeSpan) -> bool {
        self.onset < other.end() && other.onset < self.end()
    }
}

impl fmt::Display for TimeSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}[", self.onset, self.end())
    }
}

/// Pairwise disjoint time-spans, sorted by onset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Rhythm {
    spans: Vec<TimeSpan>,
}

impl Rhythm {
    pub fn new(mut spans: Vec<TimeSpan>) -> Result<Self> {
        spans.sort();
        if let Some(w) = spans.windows(2).find(|w| w[0].overlaps(&w[1])) {
            return Err(Error::Overlap(format!("{} and {}", w[0], w[1])));
        }
        Ok(Rhythm { spans })
    }

    pub fn spans(&self) -> &[TimeSpan] {
        &self.spans
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// One span per line as `onset duration`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut spans = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [t, d] = fields.as_slice() else {
                return Err(Error::Parse(format!("line {}: expected `onset duration`", i + 1)));
            };
            spans.push(TimeSpan::new(parse_rational(t)?, parse_rational(d)?)?);
        }
        Rhythm::new(spans)
    }

    pub fn format(&self) -> String {
        self.spans
            .iter()
            .map(|s| format!("{} {}\n", s.onset, s.duration))
            .collect()
    }
}

/// `(u, δ)` with `δ > 0`, multiplied as `(u1, δ1)·(u2, δ2) = (u1 + δ1 u2, δ1 δ2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineOp {
    #[serde(serialize_with = "ser_rat")]
    pub u: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub delta: Rational,
}

impl AffineOp {
    pub fn new(u: Rational, delta: Rational) -> Result<Self> {
        Ok(AffineOp {
            u,
            delta: positive(delta, "delta")?,
        })
    }

    pub fn from_ints(u: i64, delta: i64) -> Result<Self> {
        Self::new(Rational::from_integer(u), Rational::from_integer(delta))
    }

    pub fn identity() -> Self {
        AffineOp {
            u: Rational::zero(),
            delta: Rational::one(),
        }
    }

    pub fn mul(&self, other: &AffineOp) -> AffineOp {
        AffineOp {
            u: self.u + self.delta * other.u,
            delta: self.delta * other.delta,
        }
    }

    pub fn inverse(&self) -> AffineOp {
        AffineOp {
            u: -self.u / self.delta,
            delta: self.delta.recip(),
        }
    }

    pub fn pow(&self, k: i64) -> AffineOp {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(AffineOp::identity(), |acc, _| acc.mul(&base))
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineOp::identity()
    }
}

impl fmt::Display for AffineOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.delta)
    }
}

impl FromStr for AffineOp {
    type Err = Error;

    /// Parses `"u,delta"`, e.g. `"-1,3/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (u, d) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected u,delta, got {s:?}")))?;
        AffineOp::new(parse_rational(u)?, parse_rational(d)?)
    }
}

/// Left: `(u + δt, δΔ)`. Right: `(t + Δu, δΔ)`.
pub fn act_timespan(g: &AffineOp, ts: &TimeSpan, side: Side) -> TimeSpan {
    let onset = match side {
        Side::Left => g.u + g.delta * ts.onset,
        Side::Right => ts.onset + ts.duration * g.u,
    };
    TimeSpan {
        onset,
        duration: g.delta * ts.duration,
    }
}

/// The unique `g` with `act_timespan(g, a, Right) = b`.
pub fn ts_interval(a: &TimeSpan, b: &TimeSpan) -> AffineOp {
    AffineOp {
        u: (b.onset - a.onset) / a.duration,
        delta: b.duration / a.duration,
    }
}

/// Applies `g` on the left to every span. The image is always a rhythm.
pub fn transform_rhythm(g: &AffineOp, r: &Rhythm) -> Rhythm {
    let spans = r.spans.iter().map(|s| act_timespan(g, s, Side::Left)).collect();
    Rhythm::new(spans).expect("orientation-preserving maps keep spans disjoint")
}

/// Two source spans whose right images overlap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapWitness {
    pub first: TimeSpan,
    pub first_image: TimeSpan,
    pub second: TimeSpan,
    pub second_image: TimeSpan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "result")]
pub enum RightImage {
    Rhythm { rhythm: Rhythm },
    Overlap { witness: OverlapWitness },
}

/// Applies `g` on the right to every span, which may produce overlaps.
pub fn right_transform_rhythm(g: &AffineOp, r: &Rhythm) -> RightImage {
    let images: Vec<TimeSpan> = r.spans.iter().map(|s| act_timespan(g, s, Side::Right)).collect();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i].overlaps(&images[j]) {
                return RightImage::Overlap {
                    witness: OverlapWitness {
                        first: r.spans[i],
                        first_image: images[i],
                        second: r.spans[j],
                        second_image: images[j],
                    },
                };
            }
        }
    }
    RightImage::Rhythm {
        rhythm: Rhythm::new(images).expect("checked pairwise"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BsReport {
    pub p: i64,
    /// `D·T = T^p·D`.
    pub relation_holds: bool,
    /// `D·T·D^-1`.
    pub conjugate: AffineOp,
    /// `T^k` is not the identity for `1 <= k <= word_bound`.
    pub torsion_free: bool,
    /// Normal forms `D^-a T^k D^b` with `a + |k| + b <= word_bound` (and
    /// `p ∤ k` when `a, b > 0`) that were evaluated.
    pub words_checked: usize,
    /// All evaluated normal forms are distinct affine maps.
    pub distinct: bool,
}

impl BsReport {
    pub fn passed(&self) -> bool {
        self.relation_holds && self.torsion_free && self.distinct
    }
}

/// Checks that `T = (1, 1)` and `D = (0, p)` satisfy `D·T·D^-1 = T^p` and
/// that distinct normal forms of `⟨T, D | D T D^-1 = T^p⟩` up to
/// `word_bound` letters give distinct maps.
pub fn bs_relation_check(p: i64, word_bound: usize) -> Result<BsReport> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("p must be at least 2, got {p}")));
    }
    let t = AffineOp::from_ints(1, 1)?;
    let d = AffineOp::from_ints(0, p)?;
    let relation_holds = d.mul(&t) == t.pow(p).mul(&d);
    let conjugate = d.mul(&t).mul(&d.inverse());
    let bound = word_bound as i64;
    let torsion_free = (1..=bound).all(|k| !t.pow(k).is_identity());

    let mut seen = std::collections::HashSet::new();
    let mut words_checked = 0;
    let mut distinct = true;
    for a in 0..=bound {
        for b in 0..=bound - a {
            let rest = bound - a - b;
            for k in -rest..=rest {
                if a > 0 && b > 0 && k % p == 0 {
                    continue;
                }
                let g = d.pow(-a).mul(&t.pow(k)).mul(&d.pow(b));
                words_checked += 1;
                distinct &= seen.insert(g);
            }
        }
    }
    Ok(BsReport {
        p,
        relation_holds,
        conjugate,
        torsion_free,
        words_checked,
        distinct,
    })
}

/// A 2×2 matrix with positive entries on exactly the diagonal or exactly
/// the antidiagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ShapeMatrix(#[serde(serialize_with = "ser_matrix")] [[Rational; 2]; 2]);

impl ShapeMatrix {
    pub fn new(m: [[Rational; 2]; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = m;
        let diagonal = a.is_positive() && d.is_positive() && b.is_zero() && c.is_zero();
        let anti = b.is_positive() && c.is_positive() && a.is_zero() && d.is_zero();
        if diagonal || anti {
            Ok(ShapeMatrix(m))
        } else {
            Err(Error::InvalidShape(format!("[[{a}, {b}], [{c}, {d}]]")))
        }
    }

    pub fn identity() -> Self {
        let (o, z) = (Rational::one(), Rational::zero());
        ShapeMatrix([[o, z], [z, o]])
    }

    pub fn entries(&self) -> [[Rational; 2]; 2] {
        self.0
    }

    pub fn is_diagonal(&self) -> bool {
        self.0[0][1].is_zero()
    }

    pub fn mul(&self, other: &ShapeMatrix) -> Result<ShapeMatrix> {
        let (a, b) = (self.0, other.0);
        let mut out = [[Rational::zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        ShapeMatrix::new(out)
    }

    pub fn apply(&self, v: [Rational; 2]) -> [Rational; 2] {
        let m = self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn inverse(&self) -> ShapeMatrix {
        let [[a, b], [c, d]] = self.0;
        let z = Rational::zero();
        if self.is_diagonal() {
            ShapeMatrix([[a.recip(), z], [z, d.recip()]])
        } else {
            ShapeMatrix([[z, c.recip()], [b.recip(), z]])
        }
    }

    /// The nonzero entry of row `i`.
    pub fn row_value(&self, i: usize) -> Rational {
        self.0[i][0] + self.0[i][1]
    }
}

/// `(u, M)` acting on two time-lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwoLineOp {
    #[serde(serialize_with = "ser_pair")]
    pub u: [Rational; 2],
    pub m: ShapeMatrix,
}

/// Onsets of two lines and a shape matrix; line `i` spans
/// `[t_i, t_i + row_value(i)[`.
pub type TwoLineObject = TwoLineOp;

impl TwoLineOp {
    pub fn new(u: [Rational; 2], m: [[Rational; 2]; 2]) -> Result<Self> {
        Ok(TwoLineOp {
            u,
            m: ShapeMatrix::new(m)?,
        })
    }

    pub fn identity() -> Self {
        TwoLineOp {
            u: [Rational::zero(); 2],
            m: ShapeMatrix::identity(),
        }
    }

    pub fn inverse(&self) -> TwoLineOp {
        let inv = self.m.inverse();
        let v = inv.apply(self.u);
        TwoLineOp {
            u: [-v[0], -v[1]],
            m: inv,
        }
    }

    pub fn line(&self, i: usize) -> TimeSpan {
        TimeSpan {
            onset: self.u[i],
            duration: self.m.row_value(i),
        }
    }
}

impl FromStr for TwoLineOp {
    type Err = Error;

    /// Parses `"u1,u2;m11,m12,m21,m22"`.
    fn from_str(s: &str) -> Result<Self> {
        let (u, m) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected u1,u2;m11,m12,m21,m22, got {s:?}")))?;
        let nums = |t: &str| -> Result<Vec<Rational>> { t.split(',').map(parse_rational).collect() };
        let (u, m) = (nums(u)?, nums(m)?);
        let ([u1, u2], [a, b, c, d]) = (u.as_slice(), m.as_slice()) else {
            return Err(Error::Parse(format!("expected 2 offsets and 4 matrix entries in {s:?}")));
        };
        TwoLineOp::new([*u1, *u2], [[*a, *b], [*c, *d]])
    }
}

/// `(u1, M1)·(u2, M2) = (u1 + M1 u2, M1 M2)`.
pub fn twoline_mul(a: &TwoLineOp, b: &TwoLineOp) -> Result<TwoLineOp> {
    let v = a.m.apply(b.u);
    Ok(TwoLineOp {
        u: [a.u[0] + v[0], a.u[1] + v[1]],
        m: a.m.mul(&b.m)?,
    })
}

/// Right: `obj · g`. Left: `g · obj`.
pub fn act_twoline(g: &TwoLineOp, obj: &TwoLineObject, side: Side) -> Result<TwoLineObject> {
    match side {
        Side::Left => twoline_mul(g, obj),
        Side::Right => twoline_mul(obj, g),
    }
}

/// `initial` followed by `count` successive applications of `g` on `side`.
pub fn iterate_twoline(
    g: &TwoLineOp,
    initial: &TwoLineObject,
    side: Side,
    count: usize,
) -> Result<Vec<TwoLineObject>> {
    let mut out = vec![*initial];
    for _ in 0..count {
        let next = act_twoline(g, out.last().expect("non-empty"), side)?;
        out.push(next);
    }
    Ok(out)
}
