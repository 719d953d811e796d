//! Permutations of `{1, ..., N}` in cycle notation.
//!
//! Composition is left-to-right throughout: `p.then(q)` maps `i` to
//! `q(p(i))`. This matches the right action of a group on cosets, where
//! `K.(gh) = (K.g).h`, and it is the convention every caller in this
//! crate relies on. Points are 1-indexed in the public API.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("cycle notation error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },
    #[error("image list of length {len} is not a permutation of 1..={len}")]
    NotAPermutation { len: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// A permutation of `{1, ..., degree}`. Stored as the image vector,
/// 0-indexed internally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds from a 1-indexed image list: `images[i-1]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im == 0 || im > n {
                return Err(PermError::NotAPermutation { len: n });
            }
            if seen[im - 1] {
                return Err(PermError::NotAPermutation { len: n });
            }
            seen[im - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i - 1).collect(),
        })
    }

    /// Builds from disjoint cycles over `{1..=degree}`. Fixed points may be
    /// given as singleton cycles or omitted.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                seen[p - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-indexed point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// `self` then `other`: the composite maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// Least `t >= 1` with `self^t = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base).expect("same degree");
            }
            base = base.then(&base.clone()).expect("same degree");
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// point, sorted by that point. 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Points fixed by the permutation, ascending, 1-indexed.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &im)| i == im)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points printed, e.g. `(1,2)(3)(4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Parses cycle notation like `(1,2)(3,4)` into a permutation of the given
/// degree. Whitespace is ignored; omitted points are fixed; the empty string
/// is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        if c != '(' {
            return Err(PermError::Parse {
                offset: off,
                message: format!("expected '(', found '{c}'"),
            });
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            match chars.get(i) {
                Some(&(_, ')')) if cycle.is_empty() => {
                    i += 1;
                    break;
                }
                Some(&(off, ch)) if ch.is_ascii_digit() => {
                    let mut val = 0usize;
                    while let Some(&(_, d)) = chars.get(i) {
                        if let Some(v) = d.to_digit(10) {
                            val = val
                                .checked_mul(10)
                                .and_then(|x| x.checked_add(v as usize))
                                .ok_or(PermError::Parse {
                                    offset: off,
                                    message: "point too large".into(),
                                })?;
                            i += 1;
                        } else {
                            break;
                        }
                    }
                    cycle.push(val);
                    match chars.get(i) {
                        Some(&(_, ',')) => i += 1,
                        Some(&(_, ')')) => {
                            i += 1;
                            break;
                        }
                        Some(&(off, ch)) => {
                            return Err(PermError::Parse {
                                offset: off,
                                message: format!("expected ',' or ')', found '{ch}'"),
                            })
                        }
                        None => {
                            return Err(PermError::Parse {
                                offset: text.len(),
                                message: "unclosed cycle".into(),
                            })
                        }
                    }
                }
                Some(&(off, ch)) => {
                    return Err(PermError::Parse {
                        offset: off,
                        message: format!("expected a point, found '{ch}'"),
                    })
                }
                None => {
                    return Err(PermError::Parse {
                        offset: text.len(),
                        message: "unclosed cycle".into(),
                    })
                }
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Orbit partition of `{1..=degree}` under a list of permutations. Orbits are
/// sorted internally and listed by least element. An empty list yields all
/// singletons.
pub fn orbits(degree: usize, gens: &[Permutation]) -> Result<Vec<Vec<usize>>, PermError> {
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(p) = queue.pop() {
            for g in gens {
                for q in [g.images[p], g.inverse().images[p]] {
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                        queue.push(q);
                    }
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit.into_iter().map(|p| p + 1).collect());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // Two reflections of a degree-6 coset space; their product is the
        // rotation (1,6,2,3,4)(5).
        let c0 = p("(1,2)(3,4)", 6);
        let c1 = p("(1,3)(2,6)", 6);
        assert_eq!(c0.then(&c1).unwrap(), p("(1,6,2,3,4)(5)", 6));

        let c1 = p("(3,4)", 4);
        let c2 = p("(1,3)", 4);
        assert_eq!(c1.then(&c2).unwrap(), p("(1,3,4)(2)", 4));
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.then(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_reverses_cycles() {
        let e = p("(3,2,1)(6,5,4)", 6);
        assert_eq!(e.inverse(), p("(1,2,3)(4,5,6)", 6));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(p("(1,4)(2,3,6)(5)", 6).order(), 6);
        assert_eq!(p("(1,2)", 2).order(), 2);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn cycles_and_fixed_points() {
        let x = p("(1,4)(2,3,6)", 6);
        assert_eq!(x.cycles(), vec![vec![1, 4], vec![2, 3, 6], vec![5]]);
        assert_eq!(x.fixed_points(), vec![5]);
        assert_eq!(p("(1,2)", 4).fixed_points(), vec![3, 4]);
    }

    #[test]
    fn orbit_partitions() {
        let gens = vec![p("(1,2)", 4), p("(3,4)", 4), p("(1,3)", 4)];
        assert_eq!(orbits(4, &gens).unwrap(), vec![vec![1, 2, 3, 4]]);

        let gens = vec![p("(1,2)(3,4)", 6), p("(1,3)(2,6)", 6)];
        assert_eq!(
            orbits(6, &gens).unwrap(),
            vec![vec![1, 2, 3, 4, 6], vec![5]]
        );

        assert_eq!(orbits(3, &[]).unwrap(), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            p("(1,2)(3)(4)", 4),
            Permutation::from_cycles(4, &[vec![1, 2]]).unwrap()
        );
        assert_eq!(p("", 5), Permutation::identity(5));
        assert_eq!(
            p(" ( 1 , 2 ) ", 2),
            Permutation::from_cycles(2, &[vec![1, 2]]).unwrap()
        );
        assert_eq!(p("()", 3), Permutation::identity(3));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_cycles("(1,2", 4),
            Err(PermError::Parse { .. })
        ));
        assert_eq!(
            parse_cycles("(5)", 4),
            Err(PermError::PointOutOfRange {
                point: 5,
                degree: 4
            })
        );
        assert_eq!(
            parse_cycles("(1,2)(2,3)", 4),
            Err(PermError::RepeatedPoint { point: 2 })
        );
        assert!(matches!(
            parse_cycles("(0)", 4),
            Err(PermError::PointOutOfRange {
                point: 0,
                degree: 4
            })
        ));
        assert!(matches!(
            parse_cycles("1,2", 4),
            Err(PermError::Parse { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let x = p("(1,6,2,5,4,3)", 6);
        assert_eq!(x.to_string(), "(1,6,2,5,4,3)");
        assert_eq!(p("(1,2)", 4).to_string(), "(1,2)(3)(4)");
        assert_eq!(parse_cycles(&x.to_string(), 6).unwrap(), x);
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let x = p("(1,2,3,4,5)", 5);
        assert_eq!(x.pow(0), Permutation::identity(5));
        assert_eq!(x.pow(5), Permutation::identity(5));
        assert_eq!(x.pow(2), x.then(&x).unwrap());
    }
}
