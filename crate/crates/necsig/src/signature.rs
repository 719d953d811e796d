//! NEC signatures and the exact arithmetic on them.
//!
//! A signature `(g; ±; [m1,...,mr]; {(n11,...),...})` records the genus of
//! the quotient surface, its orientability, the proper periods of the
//! elliptic generators, and one period cycle per boundary component. The
//! reduced area
//!
//! ```text
//! A = alpha*g + k - 2 + sum(1 - 1/m_i) + (1/2) * sum(1 - 1/n_ij)
//! ```
//!
//! with `alpha = 2` for sign `+` and `1` for sign `-`, is `1/(2*pi)` times
//! the hyperbolic area of a fundamental region. Every value here is an exact
//! rational; no floating point is used anywhere in the computation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignSymbol {
    Plus,
    Minus,
}

impl fmt::Display for SignSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignSymbol::Plus => "+",
            SignSymbol::Minus => "-",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Violation {
    #[error("sign '-' requires genus >= 1")]
    MinusSignZeroGenus,
    #[error("proper period {value} is below 2")]
    ProperPeriodTooSmall { value: u32 },
    #[error("link period {value} in cycle {cycle} is below 2")]
    LinkPeriodTooSmall { cycle: usize, value: u32 },
    #[error("reduced area {area} is not positive; the group is not cocompact hyperbolic")]
    NonHyperbolicArea { area: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid signature: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidSignature {
    pub violations: Vec<Violation>,
}

/// Raised when an area target cannot be realized by an integer genus.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("inconsistent analysis: residual genus term {residual} is not {expected}")]
pub struct GenusError {
    pub residual: String,
    pub expected: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("signature syntax error at offset {offset}: {message}")]
pub struct SigParseError {
    pub offset: usize,
    pub message: String,
}

/// An NEC signature. Period-1 entries carry no information and are dropped
/// at construction, so they are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecSignature {
    genus: u32,
    sign: SignSymbol,
    proper_periods: Vec<u32>,
    period_cycles: Vec<Vec<u32>>,
}

impl NecSignature {
    pub fn new(
        genus: u32,
        sign: SignSymbol,
        proper_periods: Vec<u32>,
        period_cycles: Vec<Vec<u32>>,
    ) -> Self {
        NecSignature {
            genus,
            sign,
            proper_periods: proper_periods.into_iter().filter(|&m| m != 1).collect(),
            period_cycles: period_cycles
                .into_iter()
                .map(|c| c.into_iter().filter(|&n| n != 1).collect())
                .collect(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn sign(&self) -> SignSymbol {
        self.sign
    }

    pub fn proper_periods(&self) -> &[u32] {
        &self.proper_periods
    }

    pub fn period_cycles(&self) -> &[Vec<u32>] {
        &self.period_cycles
    }

    /// Number of period cycles (boundary components of the quotient).
    pub fn cycle_count(&self) -> usize {
        self.period_cycles.len()
    }

    fn alpha(&self) -> u32 {
        match self.sign {
            SignSymbol::Plus => 2,
            SignSymbol::Minus => 1,
        }
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.sign == SignSymbol::Minus && self.genus == 0 {
            out.push(Violation::MinusSignZeroGenus);
        }
        for &m in &self.proper_periods {
            if m < 2 {
                out.push(Violation::ProperPeriodTooSmall { value: m });
            }
        }
        for (i, cycle) in self.period_cycles.iter().enumerate() {
            for &n in cycle {
                if n < 2 {
                    out.push(Violation::LinkPeriodTooSmall {
                        cycle: i + 1,
                        value: n,
                    });
                }
            }
        }
        // Only judge the area once the period data itself is sane.
        if out.is_empty() && !self.reduced_area().is_positive() {
            out.push(Violation::NonHyperbolicArea {
                area: self.reduced_area().to_string(),
            });
        }
        out
    }

    pub fn validate(&self) -> Result<(), InvalidSignature> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(InvalidSignature { violations })
        }
    }

    pub fn reduced_area(&self) -> Rational {
        let mut a = Rational::from(BigInt::from(
            i64::from(self.alpha()) * i64::from(self.genus) + self.period_cycles.len() as i64 - 2,
        ));
        for &m in &self.proper_periods {
            a += Rational::one() - rational(1, i64::from(m));
        }
        let half = rational(1, 2);
        for cycle in &self.period_cycles {
            for &n in cycle {
                a += &half * (Rational::one() - rational(1, i64::from(n)));
            }
        }
        a
    }

    /// True when the group contains orientation-reversing elements: sign `-`
    /// or at least one period cycle (reflection).
    pub fn is_proper_nec(&self) -> bool {
        self.sign == SignSymbol::Minus || !self.period_cycles.is_empty()
    }

    /// Signature of the orientation-preserving subgroup of index 2. Its
    /// Fuchsian area is exactly twice the reduced area. For a signature that
    /// is already Fuchsian (sign `+`, no period cycles) the group equals its
    /// orientation-preserving part and is returned unchanged.
    pub fn canonical_fuchsian(&self) -> FuchsianSignature {
        if !self.is_proper_nec() {
            return FuchsianSignature {
                genus: self.genus,
                periods: self.proper_periods.clone(),
            };
        }
        let genus = self.alpha() * self.genus + self.period_cycles.len() as u32 - 1;
        let mut periods = Vec::new();
        for &m in &self.proper_periods {
            periods.push(m);
            periods.push(m);
        }
        for cycle in &self.period_cycles {
            periods.extend_from_slice(cycle);
        }
        FuchsianSignature { genus, periods }
    }

    /// Canonical form for comparison: proper periods ascending, each cycle
    /// replaced by its least rotation-or-reflection, cycles sorted. This is
    /// a comparison key, not a claim of group isomorphism.
    pub fn normalize(&self) -> NecSignature {
        let mut proper = self.proper_periods.clone();
        proper.sort_unstable();
        let mut cycles: Vec<Vec<u32>> = self
            .period_cycles
            .iter()
            .map(|c| canonical_cycle(c))
            .collect();
        cycles.sort();
        NecSignature {
            genus: self.genus,
            sign: self.sign,
            proper_periods: proper,
            period_cycles: cycles,
        }
    }
}

/// Least representative of a cyclic sequence under rotation and reversal.
pub fn canonical_cycle(cycle: &[u32]) -> Vec<u32> {
    if cycle.len() <= 1 {
        return cycle.to_vec();
    }
    let mut best: Option<Vec<u32>> = None;
    let mut reversed: Vec<u32> = cycle.to_vec();
    reversed.reverse();
    for candidate in [cycle.to_vec(), reversed] {
        for shift in 0..candidate.len() {
            let mut rotated = candidate[shift..].to_vec();
            rotated.extend_from_slice(&candidate[..shift]);
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

impl fmt::Display for NecSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; ", self.genus, self.sign)?;
        if self.proper_periods.is_empty() {
            write!(f, "[ ]")?;
        } else {
            write!(
                f,
                "[{}]",
                self.proper_periods
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
        write!(f, "; ")?;
        if self.period_cycles.is_empty() {
            write!(f, "{{ }}")?;
        } else {
            write!(f, "{{")?;
            for (i, cycle) in self.period_cycles.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                if cycle.is_empty() {
                    write!(f, "( )")?;
                } else {
                    write!(
                        f,
                        "({})",
                        cycle
                            .iter()
                            .map(|n| n.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )?;
                }
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for NecSignature {
    type Err = SigParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_signature(s)
    }
}

/// Signature of a Fuchsian group: `(genus; m1, ..., mr)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuchsianSignature {
    pub genus: u32,
    pub periods: Vec<u32>,
}

impl FuchsianSignature {
    /// `2g - 2 + sum(1 - 1/m_i)`, exactly.
    pub fn area(&self) -> Rational {
        let mut a = Rational::from(BigInt::from(2 * i64::from(self.genus) - 2));
        for &m in &self.periods {
            a += Rational::one() - rational(1, i64::from(m));
        }
        a
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.genus)?;
        if !self.periods.is_empty() {
            write!(
                f,
                "; {}",
                self.periods
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
        write!(f, ")")
    }
}

/// Recovers the genus from an area target: solves
/// `target = alpha*g + k - 2 + sum(1 - 1/m) + (1/2) sum(1 - 1/n)` for `g`.
/// The residual must be an even nonnegative integer for sign `+` and a
/// positive integer for sign `-`; anything else means the preceding
/// analysis was inconsistent.
pub fn genus_from_area(
    target: &Rational,
    sign: SignSymbol,
    proper_periods: &[u32],
    period_cycles: &[Vec<u32>],
) -> Result<u32, GenusError> {
    let probe = NecSignature::new(
        0,
        SignSymbol::Plus,
        proper_periods.to_vec(),
        period_cycles.to_vec(),
    );
    // Area of the genus-0 plus-sign shape; alpha*g is the only missing term.
    let residual = target - probe.reduced_area();
    let err = |expected: &'static str| GenusError {
        residual: residual.to_string(),
        expected,
    };
    if !residual.is_integer() {
        return Err(err(match sign {
            SignSymbol::Plus => "an even nonnegative integer",
            SignSymbol::Minus => "a positive integer",
        }));
    }
    let value = residual.to_integer();
    match sign {
        SignSymbol::Plus => {
            if value.is_negative() || !(&value % BigInt::from(2)).is_zero() {
                return Err(err("an even nonnegative integer"));
            }
            u32::try_from(value / BigInt::from(2)).map_err(|_| err("an even nonnegative integer"))
        }
        SignSymbol::Minus => {
            if !value.is_positive() {
                return Err(err("a positive integer"));
            }
            u32::try_from(value).map_err(|_| err("a positive integer"))
        }
    }
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), SigParseError> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{}', found '{}'", b as char, c as char))),
            None => Err(self.error(format!("expected '{}', found end of input", b as char))),
        }
    }

    fn number(&mut self) -> Result<u32, SigParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number".into()));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| SigParseError {
                offset: start,
                message: "number too large".into(),
            })
    }

    fn error(&self, message: String) -> SigParseError {
        SigParseError {
            offset: self.pos,
            message,
        }
    }
}

/// Parses `(g; +|-; [m1,...]; {(n11,...),( ),...})`. Whitespace-insensitive;
/// `[ ]`, `{ }` and `( )` denote empty lists.
pub fn parse_signature(text: &str) -> Result<NecSignature, SigParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'(')?;
    let genus = cur.number()?;
    cur.expect(b';')?;
    let sign = match cur.peek() {
        Some(b'+') => {
            cur.pos += 1;
            SignSymbol::Plus
        }
        Some(b'-') => {
            cur.pos += 1;
            SignSymbol::Minus
        }
        _ => return Err(cur.error("expected sign '+' or '-'".into())),
    };
    cur.expect(b';')?;
    cur.expect(b'[')?;
    let mut proper = Vec::new();
    if cur.peek() != Some(b']') {
        loop {
            proper.push(cur.number()?);
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b']') => break,
                _ => return Err(cur.error("expected ',' or ']'".into())),
            }
        }
    }
    cur.expect(b']')?;
    cur.expect(b';')?;
    cur.expect(b'{')?;
    let mut cycles = Vec::new();
    if cur.peek() != Some(b'}') {
        loop {
            cur.expect(b'(')?;
            let mut cycle = Vec::new();
            if cur.peek() != Some(b')') {
                loop {
                    cycle.push(cur.number()?);
                    match cur.peek() {
                        Some(b',') => cur.pos += 1,
                        Some(b')') => break,
                        _ => return Err(cur.error("expected ',' or ')'".into())),
                    }
                }
            }
            cur.expect(b')')?;
            cycles.push(cycle);
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b'}') => break,
                _ => return Err(cur.error("expected ',' or '}'".into())),
            }
        }
    }
    cur.expect(b'}')?;
    cur.expect(b')')?;
    cur.skip_ws();
    if cur.pos != cur.text.len() {
        return Err(cur.error("trailing input after signature".into()));
    }
    Ok(NecSignature::new(genus, sign, proper, cycles))
}
