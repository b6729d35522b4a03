//! Exact points and closed arcs on the circle `R/Z`.
//!
//! Angles are fractions of the circumference in `[0, 1)`, arcs are closed
//! clockwise intervals `[start, start + length]`. All arithmetic is exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A point of the circle, stored as a reduced fraction in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(Rational);

impl Angle {
    /// Reduces `value` modulo 1.
    pub fn new(value: Rational) -> Self {
        let floor = value.floor();
        Angle(value - floor)
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Angle::new(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Angle(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Clockwise distance travelled from `self` to `other`, in `[0, 1)`.
    pub fn clockwise_to(&self, other: &Angle) -> Rational {
        let d = &other.0 - &self.0;
        if d.is_negative() {
            d + Rational::one()
        } else {
            d
        }
    }

    /// Arc-length distance, at most 1/2.
    pub fn distance(&self, other: &Angle) -> Rational {
        let d = self.clockwise_to(other);
        let back = Rational::one() - &d;
        if back < d {
            back
        } else {
            d
        }
    }

    pub fn offset(&self, delta: &Rational) -> Angle {
        Angle::new(&self.0 + delta)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({})", self)
    }
}

/// A closed arc `[start, start + length]` traversed clockwise.
///
/// Arcs of length at least 1 are the whole circle and are stored as
/// `start = 0, length = 1`. Length 0 is a single point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    start: Angle,
    length: Rational,
}

impl Arc {
    pub fn new(start: Angle, length: Rational) -> Result<Self> {
        if length.is_negative() {
            return Err(Error::Negative {
                what: "arc length",
                value: format_rational(&length),
            });
        }
        if length >= Rational::one() {
            return Ok(Arc::whole());
        }
        Ok(Arc { start, length })
    }

    /// Clockwise arc from `start` to `end`; equal endpoints give a point arc.
    pub fn from_endpoints(start: Angle, end: Angle) -> Self {
        let length = start.clockwise_to(&end);
        Arc { start, length }
    }

    pub fn whole() -> Self {
        Arc {
            start: Angle::zero(),
            length: Rational::one(),
        }
    }

    pub fn start(&self) -> &Angle {
        &self.start
    }

    pub fn length(&self) -> &Rational {
        &self.length
    }

    pub fn end(&self) -> Angle {
        self.start.offset(&self.length)
    }

    pub fn is_whole(&self) -> bool {
        self.length.is_one()
    }

    pub fn is_point(&self) -> bool {
        self.length.is_zero()
    }

    pub fn contains(&self, p: &Angle) -> bool {
        self.is_whole() || self.start.clockwise_to(p) <= self.length
    }

    pub fn intersects(&self, other: &Arc) -> bool {
        self.is_whole()
            || other.is_whole()
            || self.contains(&other.start)
            || other.contains(&self.start)
    }

    /// Point-set containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Arc) -> bool {
        if other.is_whole() {
            return true;
        }
        if self.is_whole() {
            return false;
        }
        // Both proper: self must start inside other and fit before other's end.
        let offset = other.start.clockwise_to(&self.start);
        offset + &self.length <= other.length
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole() {
            write!(f, "Arc(whole)")
        } else {
            write!(f, "Arc[{}, +{}]", self.start, format_rational(&self.length))
        }
    }
}

/// A nonempty list of arcs; the position of an arc is its vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcCollection {
    arcs: Vec<Arc>,
}

impl ArcCollection {
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyCollection);
        }
        Ok(ArcCollection { arcs })
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Result<&Arc> {
        self.arcs.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.arcs.len(),
        })
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Arc> {
        self.arcs.iter()
    }

    /// Sub-collection of the given indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<ArcCollection> {
        let arcs = indices
            .iter()
            .map(|&i| self.arc(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        ArcCollection::new(arcs)
    }

    /// Returns a point common to every arc in `subset`, if one exists.
    ///
    /// A nonempty intersection of closed arcs always contains the start point
    /// of one of them (the whole circle starts at 0), so testing starts suffices.
    pub fn common_point(&self, subset: &[usize]) -> Result<Option<Angle>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let arcs = subset
            .iter()
            .map(|&i| self.arc(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(arcs
            .iter()
            .map(|a| a.start())
            .find(|p| arcs.iter().all(|a| a.contains(p)))
            .cloned())
    }

    /// The sort key of one endpoint event, see [`EventKey`].
    pub fn event_key(&self, index: usize, kind: EndpointKind) -> Result<EventKey> {
        let arc = self.arc(index)?;
        let position = match kind {
            EndpointKind::Opening => arc.start().clone(),
            EndpointKind::Closing => arc.end(),
        };
        Ok(EventKey {
            position,
            kind,
            index,
        })
    }

    /// All `2n` endpoint events of the given arcs, sorted by [`EventKey`].
    pub fn sorted_events(&self, indices: &[usize]) -> Result<Vec<EventKey>> {
        let mut events = Vec::with_capacity(2 * indices.len());
        for &i in indices {
            events.push(self.event_key(i, EndpointKind::Opening)?);
            events.push(self.event_key(i, EndpointKind::Closing)?);
        }
        events.sort_unstable();
        Ok(events)
    }
}

impl<'a> IntoIterator for &'a ArcCollection {
    type Item = &'a Arc;
    type IntoIter = std::slice::Iter<'a, Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.arcs.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndpointKind {
    Opening,
    Closing,
}

/// Total order on endpoint events: position, then openings before closings,
/// then arc index.
///
/// Sorting by this key breaks every coincidence of endpoints. An opening and
/// a closing at the same position really do share that point, so placing the
/// opening first keeps the two arcs overlapping and the nerve is unchanged.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventKey {
    pub position: Angle,
    pub kind: EndpointKind,
    pub index: usize,
}

/// Whether `points` occur in (weakly) clockwise order around the circle,
/// i.e. `x1 ⪯ x2 ⪯ ... ⪯ xk ⪯ x1`. The strict variant also rejects equal
/// consecutive points, including the wrap-around pair.
pub fn cyclic_ordered<T: Ord>(points: &[T], strict: bool) -> Result<bool> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: points.len(),
        });
    }
    let mut descents = 0;
    for (i, p) in points.iter().enumerate() {
        let next = &points[(i + 1) % points.len()];
        match p.cmp(next) {
            Ordering::Greater => descents += 1,
            Ordering::Equal if strict => return Ok(false),
            _ => {}
        }
    }
    Ok(descents <= 1)
}

/// `n` evenly spaced arcs of length `k/n`; arc `i` is `[i/n, (i+k)/n]`.
pub fn evenly_spaced(n: usize, k: usize) -> Result<ArcCollection> {
    if n == 0 {
        return Err(Error::EmptyCollection);
    }
    if k >= n {
        return Err(Error::Precondition(format!(
            "evenly spaced arcs need 0 <= k < n, got n={n}, k={k}"
        )));
    }
    let length = Rational::new(BigInt::from(k), BigInt::from(n));
    let arcs = (0..n)
        .map(|i| Arc::new(Angle::from_ratio(i as i64, n as i64), length.clone()))
        .collect::<Result<Vec<_>>>()?;
    ArcCollection::new(arcs)
}

/// Closed metric balls `B(p, r)`: the arcs `[p - r, p + r]`.
pub fn balls(points: &[Angle], radius: &Rational) -> Result<ArcCollection> {
    if radius.is_negative() {
        return Err(Error::Negative {
            what: "radius",
            value: format_rational(radius),
        });
    }
    let diameter = radius * BigInt::from(2);
    let neg = -radius.clone();
    let arcs = points
        .iter()
        .map(|p| Arc::new(p.offset(&neg), diameter.clone()))
        .collect::<Result<Vec<_>>>()?;
    ArcCollection::new(arcs)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {input:?} at byte {position}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub position: usize,
    pub reason: &'static str,
}

/// Parses `"p/q"`, an integer, or a decimal such as `"-0.125"` exactly.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, ParseRationalError> {
    let err = |position, reason| ParseRationalError {
        input: s.to_string(),
        position,
        reason,
    };
    let (negative, body, offset) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..], 1),
        Some(b'+') => (false, &s[1..], 1),
        _ => (false, s, 0),
    };
    let digits = |part: &str, at: usize| -> std::result::Result<BigInt, ParseRationalError> {
        if part.is_empty() {
            return Err(err(at, "expected digits"));
        }
        if let Some(bad) = part.bytes().position(|b| !b.is_ascii_digit()) {
            return Err(err(at + bad, "unexpected character"));
        }
        Ok(part.parse::<BigInt>().expect("ascii digits"))
    };
    let value = if let Some(slash) = body.find('/') {
        let numer = digits(&body[..slash], offset)?;
        let denom = digits(&body[slash + 1..], offset + slash + 1)?;
        if denom.is_zero() {
            return Err(err(offset + slash + 1, "zero denominator"));
        }
        Rational::new(numer, denom)
    } else if let Some(dot) = body.find('.') {
        let int_part = &body[..dot];
        let frac_part = &body[dot + 1..];
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err(offset, "expected digits"));
        }
        let int = if int_part.is_empty() {
            BigInt::zero()
        } else {
            digits(int_part, offset)?
        };
        let frac = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            digits(frac_part, offset + dot + 1)?
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        Rational::new(int * &scale + frac, scale)
    } else {
        Rational::from_integer(digits(body, offset)?)
    };
    Ok(if negative { -value } else { value })
}

/// Formats as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
