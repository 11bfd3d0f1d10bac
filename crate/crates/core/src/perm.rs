//! Permutations of a finite domain `0..degree`, stored as image arrays.
//!
//! Products follow the function-composition convention: in `p * q` the
//! right factor acts first, so `(p * q).apply(i) == p.apply(q.apply(i))`.
//! Under this convention the commutator `y⁻¹x⁻¹yx` of `x = (1,…,l)` and
//! `y = (1,…,n)` is the 3-cycle `(n, n−1, l)`.
//!
//! Externally (cycle notation, reports) points are 1-based; internally they
//! are 0-based.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("not a bijection: point {0} appears more than once")]
    NotBijective(usize),
    #[error("image {image} out of range for degree {degree}")]
    OutOfRange { image: usize, degree: usize },
    #[error("cycle syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("degree {degree} is smaller than mentioned point {point}")]
    DegreeTooSmall { degree: usize, point: usize },
    #[error("cannot embed degree {from} into smaller degree {to}")]
    Shrink { from: usize, to: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// Parity of a product given the parities of its factors.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// A bijection on `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array (entry `i` is the image of `i`).
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &im in &images {
            if im >= degree {
                return Err(PermError::OutOfRange { image: im, degree });
            }
            if std::mem::replace(&mut seen[im], true) {
                return Err(PermError::NotBijective(im));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of `degree` points from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(PermError::DegreeTooSmall { degree, point: p + 1 });
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(PermError::RepeatedPoint(p + 1));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `(start, start+1, …, end)` on 0-based points, inside `degree`.
    pub fn cycle_range(degree: usize, start: usize, end: usize) -> Self {
        let cycle: Vec<usize> = (start..=end).collect();
        Self::from_cycles(degree, &[cycle]).expect("cycle range within degree")
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self^exp`, negative exponents allowed.
    pub fn pow(&self, exp: i64) -> Permutation {
        let mut images = self.images.clone();
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = exp.rem_euclid(len) as usize;
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + shift) % cycle.len()] as u32;
            }
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point, sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Least `k ≥ 1` with `self^k = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Points moved by `self`, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn support_size(&self) -> usize {
        (0..self.degree()).filter(|&i| self.apply(i) != i).count()
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.apply(i) != i)
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(&(&(&self.inverse() * &other.inverse()) * self) * other)
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        &(&g.inverse() * self) * g
    }

    /// Pads with fixed points up to `degree`.
    pub fn embed(&self, degree: usize) -> Result<Permutation, PermError> {
        if degree < self.degree() {
            return Err(PermError::Shrink {
                from: self.degree(),
                to: degree,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Permutation { images })
    }

    /// The permutation acting as `self` on `0..d` and as `other` on `d..2d`
    /// (shifted), where `d` is the common degree.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + shift));
        Permutation { images }
    }

    /// Restriction to the points `offset..offset + degree`, which must be
    /// invariant, re-indexed from zero.
    pub fn restrict(&self, offset: usize, degree: usize) -> Permutation {
        let images = self.images[offset..offset + degree]
            .iter()
            .map(|&i| {
                let i = i as usize;
                assert!(
                    (offset..offset + degree).contains(&i),
                    "restriction to a non-invariant range"
                );
                (i - offset) as u32
            })
            .collect();
        Permutation { images }
    }
}

impl<'a> Mul<&'a Permutation> for &'a Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &'a Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    /// 1-based disjoint cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [deg {}]", self, self.degree())
    }
}

/// Parsed cycle notation: 1-based disjoint cycles plus an optional degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleExpr {
    pub cycles: Vec<Vec<usize>>,
    pub degree: Option<usize>,
}

impl CycleExpr {
    /// Parses `cycle+ | "()"` where `cycle := "(" int ("," int)* ")"`.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let mut cycles = Vec::new();
        p.skip_ws();
        if p.at_end() {
            return Err(p.err("empty input"));
        }
        while !p.at_end() {
            p.expect(b'(')?;
            p.skip_ws();
            if p.peek() == Some(b')') {
                p.pos += 1;
                if !cycles.is_empty() {
                    return Err(p.err("empty cycle must stand alone"));
                }
                p.skip_ws();
                if !p.at_end() {
                    return Err(p.err("empty cycle must stand alone"));
                }
                return Ok(CycleExpr {
                    cycles,
                    degree: None,
                });
            }
            let mut cycle = vec![p.int()?];
            loop {
                p.skip_ws();
                match p.peek() {
                    Some(b',') => {
                        p.pos += 1;
                        cycle.push(p.int()?);
                    }
                    Some(b')') => {
                        p.pos += 1;
                        break;
                    }
                    _ => return Err(p.err("expected ',' or ')'")),
                }
            }
            cycles.push(cycle);
            p.skip_ws();
        }
        Ok(CycleExpr {
            cycles,
            degree: None,
        })
    }

    pub fn with_degree(mut self, degree: Option<usize>) -> Self {
        self.degree = degree;
        self
    }

    /// Largest point mentioned (1-based); at least 1.
    pub fn implied_degree(&self) -> usize {
        self.cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(1)
    }

    pub fn to_permutation(&self) -> Result<Permutation, PermError> {
        let implied = self.implied_degree();
        let degree = match self.degree {
            Some(0) => return Err(PermError::ZeroDegree),
            Some(d) if d < implied => {
                return Err(PermError::DegreeTooSmall {
                    degree: d,
                    point: implied,
                })
            }
            Some(d) => d,
            None => implied,
        };
        let zero_based: Vec<Vec<usize>> = self
            .cycles
            .iter()
            .map(|c| c.iter().map(|&p| p - 1).collect())
            .collect();
        Permutation::from_cycles(degree, &zero_based)
    }
}

/// Parses 1-based cycle notation into a permutation; `degree` defaults to
/// the largest point mentioned.
pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
    CycleExpr::parse(text)?.with_degree(degree).to_permutation()
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cycles(s, None)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> PermError {
        PermError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PermError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<usize, PermError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match text.parse::<usize>() {
            Ok(0) => Err(PermError::Syntax {
                pos: start,
                msg: "points are 1-based".into(),
            }),
            Ok(v) if v > u32::MAX as usize => Err(PermError::Syntax {
                pos: start,
                msg: "point too large".into(),
            }),
            Ok(v) => Ok(v),
            Err(_) => Err(PermError::Syntax {
                pos: start,
                msg: "point too large".into(),
            }),
        }
    }
}
