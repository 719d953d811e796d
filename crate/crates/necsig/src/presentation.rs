//! Canonical presentations of NEC groups.
//!
//! For a signature `(g; sign; [m1..mr]; {(n11..n1s1), ..., (nk1..nksk)})` the
//! canonical presentation has
//!
//! * elliptic generators `x1..xr` with `xj^{mj} = 1`,
//! * reflections `c{i}.0 .. c{i}.{si}` for each period cycle `i`, with
//!   `c{i}.{j}^2 = 1` and `(c{i}.{j-1} c{i}.{j})^{nij} = 1`,
//! * connecting generators `e1..ek` with `e{i} c{i}.0 e{i}^-1 c{i}.{si} = 1`,
//! * surface generators `a1,b1,..,ag,bg` (sign `+`) or glides `a1..ag`
//!   (sign `-`),
//!
//! and one long relation: `x1..xr e1..ek [a1,b1]..[ag,bg] = 1` for sign `+`,
//! `x1..xr e1..ek a1^2..ag^2 = 1` for sign `-`.
//!
//! `c{i}.{si}` is always a distinct generator, even though the connecting
//! relation may force it equal to `c{i}.0` in the group. Downstream link
//! analysis relies on the two names being distinct vertices; collapsing them
//! would merge chain vertices that the theory keeps apart.

use std::fmt;

use thiserror::Error;

use crate::signature::{NecSignature, SignSymbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `x{j}`: elliptic, orientation-preserving.
    Elliptic,
    /// `c{i}.{j}`: reflection, orientation-reversing.
    Reflection,
    /// `e{i}`: connecting, orientation-preserving.
    Connecting,
    /// `a{l}` or `b{l}` with sign `+`: orientation-preserving.
    Hyperbolic,
    /// `a{l}` with sign `-`: glide reflection, orientation-reversing.
    Glide,
}

impl GeneratorKind {
    /// `-1` for orientation-reversing generators, `+1` otherwise.
    pub fn orientation_sign(self) -> i8 {
        match self {
            GeneratorKind::Reflection | GeneratorKind::Glide => -1,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

/// One letter of a word: a generator index into the presentation's list,
/// possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn plain(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn inverted(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }
}

/// Which structural relation a relator encodes. `cycle` is 1-based,
/// `pos` matches the generator numbering within the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelatorKind {
    EllipticPower { index: usize },
    ReflectionSquare { cycle: usize, pos: usize },
    DihedralPower { cycle: usize, pos: usize },
    Conjugation { cycle: usize },
    Long,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub kind: RelatorKind,
    pub word: Vec<Letter>,
    display: String,
}

impl Relator {
    pub fn display(&self) -> &str {
        &self.display
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown generator '{name}'")]
pub struct UnknownGenerator {
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    signature: NecSignature,
    generators: Vec<Generator>,
    relators: Vec<Relator>,
    // Index of x1 / c{1}.0 per cycle / e1 / a1 in `generators`.
    elliptic_base: usize,
    reflection_base: Vec<usize>,
    connecting_base: usize,
    surface_base: usize,
}

impl Presentation {
    pub fn signature(&self) -> &NecSignature {
        &self.signature
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn lookup(&self, name: &str) -> Result<usize, UnknownGenerator> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| UnknownGenerator {
                name: name.to_string(),
            })
    }

    /// `-1` if the named generator reverses orientation, `+1` otherwise.
    pub fn orientation_sign(&self, name: &str) -> Result<i8, UnknownGenerator> {
        Ok(self.generators[self.lookup(name)?].kind.orientation_sign())
    }

    /// Index of `x{j}` (1-based `j`).
    pub fn elliptic(&self, j: usize) -> usize {
        self.elliptic_base + (j - 1)
    }

    /// Index of `c{i}.{j}` (1-based cycle `i`, 0-based position `j`).
    pub fn reflection(&self, cycle: usize, pos: usize) -> usize {
        self.reflection_base[cycle - 1] + pos
    }

    /// Index of `e{i}` (1-based `i`).
    pub fn connecting(&self, i: usize) -> usize {
        self.connecting_base + (i - 1)
    }

    /// Renders a word using generator names. Inverses of reflections are
    /// rendered plain: a reflection is its own inverse.
    pub fn display_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|l| {
                let g = &self.generators[l.gen];
                if l.inverse && g.kind != GeneratorKind::Reflection {
                    format!("{}^-1", g.name)
                } else {
                    g.name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds the canonical presentation of the group with the given signature.
/// Purely combinatorial; the signature only needs well-formed period data.
pub fn canonical_presentation(sig: &NecSignature) -> Presentation {
    let r = sig.proper_periods().len();
    let k = sig.cycle_count();
    let g = sig.genus() as usize;

    let mut generators = Vec::new();
    let elliptic_base = 0;
    for j in 1..=r {
        generators.push(Generator {
            name: format!("x{j}"),
            kind: GeneratorKind::Elliptic,
        });
    }
    let mut reflection_base = Vec::with_capacity(k);
    for (i, cycle) in sig.period_cycles().iter().enumerate() {
        reflection_base.push(generators.len());
        for j in 0..=cycle.len() {
            generators.push(Generator {
                name: format!("c{}.{}", i + 1, j),
                kind: GeneratorKind::Reflection,
            });
        }
    }
    let connecting_base = generators.len();
    for i in 1..=k {
        generators.push(Generator {
            name: format!("e{i}"),
            kind: GeneratorKind::Connecting,
        });
    }
    let surface_base = generators.len();
    match sig.sign() {
        SignSymbol::Plus => {
            for l in 1..=g {
                generators.push(Generator {
                    name: format!("a{l}"),
                    kind: GeneratorKind::Hyperbolic,
                });
                generators.push(Generator {
                    name: format!("b{l}"),
                    kind: GeneratorKind::Hyperbolic,
                });
            }
        }
        SignSymbol::Minus => {
            for l in 1..=g {
                generators.push(Generator {
                    name: format!("a{l}"),
                    kind: GeneratorKind::Glide,
                });
            }
        }
    }

    let pres = PresentationBuilder {
        generators: &generators,
        elliptic_base,
        reflection_base: &reflection_base,
        connecting_base,
        surface_base,
    };

    let mut relators = Vec::new();
    for (j, &m) in sig.proper_periods().iter().enumerate() {
        let x = pres.elliptic(j + 1);
        relators.push(Relator {
            kind: RelatorKind::EllipticPower { index: j + 1 },
            word: vec![Letter::plain(x); m as usize],
            display: format!("{}^{}", generators[x].name, m),
        });
    }
    for (ci, cycle) in sig.period_cycles().iter().enumerate() {
        let i = ci + 1;
        let s = cycle.len();
        for j in 0..=s {
            let c = pres.reflection(i, j);
            relators.push(Relator {
                kind: RelatorKind::ReflectionSquare { cycle: i, pos: j },
                word: vec![Letter::plain(c); 2],
                display: format!("{}^2", generators[c].name),
            });
        }
        for (jm1, &n) in cycle.iter().enumerate() {
            let j = jm1 + 1;
            let c = pres.reflection(i, j - 1);
            let d = pres.reflection(i, j);
            let mut word = Vec::with_capacity(2 * n as usize);
            for _ in 0..n {
                word.push(Letter::plain(c));
                word.push(Letter::plain(d));
            }
            relators.push(Relator {
                kind: RelatorKind::DihedralPower { cycle: i, pos: j },
                word,
                display: format!("({} {})^{}", generators[c].name, generators[d].name, n),
            });
        }
        let e = pres.connecting(i);
        let c0 = pres.reflection(i, 0);
        let cs = pres.reflection(i, s);
        relators.push(Relator {
            kind: RelatorKind::Conjugation { cycle: i },
            word: vec![
                Letter::plain(e),
                Letter::plain(c0),
                Letter::inverted(e),
                Letter::plain(cs),
            ],
            display: format!(
                "{} {} {}^-1 {}",
                generators[e].name, generators[c0].name, generators[e].name, generators[cs].name
            ),
        });
    }

    let mut long = Vec::new();
    let mut long_display = Vec::new();
    for j in 1..=r {
        long.push(Letter::plain(pres.elliptic(j)));
        long_display.push(generators[pres.elliptic(j)].name.clone());
    }
    for i in 1..=k {
        long.push(Letter::plain(pres.connecting(i)));
        long_display.push(generators[pres.connecting(i)].name.clone());
    }
    match sig.sign() {
        SignSymbol::Plus => {
            for l in 0..g {
                let a = surface_base + 2 * l;
                let b = a + 1;
                long.extend([
                    Letter::plain(a),
                    Letter::plain(b),
                    Letter::inverted(a),
                    Letter::inverted(b),
                ]);
                long_display.push(format!(
                    "{} {} {}^-1 {}^-1",
                    generators[a].name, generators[b].name, generators[a].name, generators[b].name
                ));
            }
        }
        SignSymbol::Minus => {
            for l in 0..g {
                let a = surface_base + l;
                long.extend([Letter::plain(a), Letter::plain(a)]);
                long_display.push(format!("{}^2", generators[a].name));
            }
        }
    }
    relators.push(Relator {
        kind: RelatorKind::Long,
        display: if long_display.is_empty() {
            "1".to_string()
        } else {
            long_display.join(" ")
        },
        word: long,
    });

    Presentation {
        signature: sig.clone(),
        generators,
        relators,
        elliptic_base,
        reflection_base,
        connecting_base,
        surface_base,
    }
}

// Borrowed index arithmetic used while the Presentation is under
// construction.
struct PresentationBuilder<'a> {
    #[allow(dead_code)]
    generators: &'a [Generator],
    elliptic_base: usize,
    reflection_base: &'a [usize],
    connecting_base: usize,
    #[allow(dead_code)]
    surface_base: usize,
}

impl PresentationBuilder<'_> {
    fn elliptic(&self, j: usize) -> usize {
        self.elliptic_base + (j - 1)
    }

    fn reflection(&self, cycle: usize, pos: usize) -> usize {
        self.reflection_base[cycle - 1] + pos
    }

    fn connecting(&self, i: usize) -> usize {
        self.connecting_base + (i - 1)
    }
}
