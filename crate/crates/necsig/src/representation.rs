//! Coset actions: a permutation image for every canonical generator.
//!
//! A finite-index subgroup is presented to this crate as the action of the
//! canonical generators on the cosets of the subgroup, with the subgroup
//! itself the stabilizer of coset 1. The action is a right action, so a word
//! is applied left to right.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

use crate::permutation::{orbits, parse_cycles, PermError, Permutation};
use crate::presentation::{
    canonical_presentation, GeneratorKind, Letter, Presentation, RelatorKind,
};
use crate::signature::NecSignature;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("unknown generator '{name}'; expected generators: {}", .expected.join(", "))]
    UnknownGenerator { name: String, expected: Vec<String> },
    #[error("missing generators: {}; expected generators: {}", .missing.join(", "), .expected.join(", "))]
    MissingGenerators {
        missing: Vec<String>,
        expected: Vec<String>,
    },
    #[error("generator '{name}' given more than once")]
    DuplicateGenerator { name: String },
    #[error("generator '{name}' has degree {found}, expected {expected}")]
    WrongDegree {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generator '{name}': {source}")]
    BadPermutation {
        name: String,
        #[source]
        source: PermError,
    },
}

/// The permutation action of a group's canonical generators on the cosets
/// of a finite-index subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetAction {
    presentation: Presentation,
    degree: usize,
    images: Vec<Permutation>,
}

impl CosetAction {
    /// Builds an action from named generator images. Every canonical
    /// generator of the signature must appear exactly once, with the stated
    /// degree.
    pub fn new(
        signature: &NecSignature,
        degree: usize,
        images: &[(String, Permutation)],
    ) -> Result<Self, ActionError> {
        if degree == 0 {
            return Err(ActionError::ZeroDegree);
        }
        let presentation = canonical_presentation(signature);
        let expected: Vec<String> = presentation
            .generator_names()
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut slots: Vec<Option<Permutation>> = vec![None; expected.len()];
        for (name, perm) in images {
            let idx = presentation
                .lookup(name)
                .map_err(|_| ActionError::UnknownGenerator {
                    name: name.clone(),
                    expected: expected.clone(),
                })?;
            if slots[idx].is_some() {
                return Err(ActionError::DuplicateGenerator { name: name.clone() });
            }
            if perm.degree() != degree {
                return Err(ActionError::WrongDegree {
                    name: name.clone(),
                    expected: degree,
                    found: perm.degree(),
                });
            }
            slots[idx] = Some(perm.clone());
        }
        let missing: Vec<String> = expected
            .iter()
            .zip(&slots)
            .filter(|(_, s)| s.is_none())
            .map(|(n, _)| n.clone())
            .collect();
        if !missing.is_empty() {
            return Err(ActionError::MissingGenerators { missing, expected });
        }
        Ok(CosetAction {
            presentation,
            degree,
            images: slots.into_iter().map(|s| s.unwrap()).collect(),
        })
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycle_strings(
        signature: &NecSignature,
        degree: usize,
        images: &[(&str, &str)],
    ) -> Result<Self, ActionError> {
        let mut parsed = Vec::with_capacity(images.len());
        for (name, text) in images {
            let perm =
                parse_cycles(text, degree).map_err(|source| ActionError::BadPermutation {
                    name: name.to_string(),
                    source,
                })?;
            parsed.push((name.to_string(), perm));
        }
        CosetAction::new(signature, degree, &parsed)
    }

    /// The action in which every generator fixes the single coset: the
    /// subgroup is the whole group.
    pub fn trivial(signature: &NecSignature) -> Self {
        let presentation = canonical_presentation(signature);
        let images = vec![Permutation::identity(1); presentation.generators().len()];
        CosetAction {
            presentation,
            degree: 1,
            images,
        }
    }

    pub fn signature(&self) -> &NecSignature {
        self.presentation.signature()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Permutation {
        &self.images[gen]
    }

    pub fn image_of(&self, name: &str) -> Option<&Permutation> {
        self.presentation.lookup(name).ok().map(|i| &self.images[i])
    }

    /// Evaluates a word left to right.
    pub fn evaluate_word(&self, word: &[Letter]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for letter in word {
            let img = &self.images[letter.gen];
            let step = if letter.inverse {
                img.inverse()
            } else {
                img.clone()
            };
            acc = acc.then(&step).expect("uniform degree");
        }
        acc
    }

    /// Orbit partition of the cosets under all generator images.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(self.degree, &self.images).expect("uniform degree")
    }

    /// Checks every relator and transitivity; collects everything rather
    /// than stopping at the first failure.
    pub fn validate(&self) -> ActionReport {
        let relators = self
            .presentation
            .relators()
            .iter()
            .map(|rel| {
                let image = self.evaluate_word(&rel.word);
                let ok = image.is_identity();
                RelatorCheck {
                    kind: rel.kind,
                    display: rel.display().to_string(),
                    image,
                    ok,
                }
            })
            .collect();
        let orbits = self.orbits();
        let transitive = orbits.len() == 1;
        ActionReport {
            relators,
            orbits,
            transitive,
            degree: self.degree,
        }
    }

    /// Index of the stabilizer of `point`: the size of its orbit.
    pub fn point_stabilizer_index(&self, point: usize) -> Result<usize, ActionError> {
        if point == 0 || point > self.degree {
            return Err(ActionError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(self
            .orbits()
            .into_iter()
            .find(|o| o.contains(&point))
            .map(|o| o.len())
            .expect("orbits partition the points"))
    }

    /// Re-bases the action on the orbit of `point`, relabelling the orbit's
    /// cosets as `1..=M` in ascending order.
    pub fn restrict_to_orbit(&self, point: usize) -> Result<CosetAction, ActionError> {
        if point == 0 || point > self.degree {
            return Err(ActionError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let orbit = self
            .orbits()
            .into_iter()
            .find(|o| o.contains(&point))
            .expect("orbits partition the points");
        let index_of: BTreeMap<usize, usize> =
            orbit.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        let images = self
            .images
            .iter()
            .map(|img| {
                let restricted: Vec<usize> =
                    orbit.iter().map(|&p| index_of[&img.apply(p)]).collect();
                Permutation::from_images(restricted).expect("orbit is invariant")
            })
            .collect();
        Ok(CosetAction {
            presentation: self.presentation.clone(),
            degree: orbit.len(),
            images,
        })
    }

    pub fn orientability(&self) -> OrientabilityVerdict {
        self.orientability_impl(None)
    }

    /// Same verdict computed over a randomized spanning tree. The verdict
    /// kind never depends on the tree; only the witness wording may differ.
    pub fn orientability_seeded(&self, seed: u64) -> OrientabilityVerdict {
        self.orientability_impl(Some(seed))
    }

    fn orientability_impl(&self, seed: Option<u64>) -> OrientabilityVerdict {
        let n = self.degree;
        let gens = self.presentation.generators();
        let mut rng = seed.map(rand::rngs::StdRng::seed_from_u64);

        let had_reflection_loops = gens.iter().enumerate().any(|(g, gen)| {
            gen.kind == GeneratorKind::Reflection && !self.images[g].fixed_points().is_empty()
        });

        // Sign propagation over the coset graph with reflection loops
        // removed. parent[] lets a failed edge be expanded into an explicit
        // negative circuit based at the component root.
        let mut sign = vec![0i8; n];
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];

        let path_from_root = |parent: &[Option<(usize, Letter)>], mut v: usize| {
            let mut letters = Vec::new();
            while let Some((up, letter)) = parent[v] {
                letters.push(letter);
                v = up;
            }
            letters.reverse();
            letters
        };

        let mut roots: Vec<usize> = (0..n).collect();
        if let Some(rng) = rng.as_mut() {
            roots.shuffle(rng);
        }
        for &root in &roots {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let mut moves: Vec<Letter> = (0..gens.len())
                    .flat_map(|g| [Letter::plain(g), Letter::inverted(g)])
                    .collect();
                if let Some(rng) = rng.as_mut() {
                    moves.shuffle(rng);
                }
                for letter in moves {
                    let img = &self.images[letter.gen];
                    let w = if letter.inverse {
                        img.inverse().apply(v + 1) - 1
                    } else {
                        img.apply(v + 1) - 1
                    };
                    let edge_sign = gens[letter.gen].kind.orientation_sign();
                    if w == v {
                        if edge_sign == -1 && gens[letter.gen].kind != GeneratorKind::Reflection {
                            // A glide fixing a coset is itself a negative
                            // circuit; conjugate it back to the root.
                            let mut word = path_from_root(&parent, v);
                            let back: Vec<Letter> = word
                                .iter()
                                .rev()
                                .map(|l| Letter {
                                    gen: l.gen,
                                    inverse: !l.inverse,
                                })
                                .collect();
                            word.push(letter);
                            word.extend(back);
                            return self.negative_verdict(root + 1, word);
                        }
                        continue;
                    }
                    if sign[w] == 0 {
                        sign[w] = sign[v] * edge_sign;
                        parent[w] = Some((v, letter));
                        queue.push_back(w);
                    } else if sign[w] != sign[v] * edge_sign {
                        let mut word = path_from_root(&parent, v);
                        word.push(letter);
                        let back: Vec<Letter> = path_from_root(&parent, w)
                            .iter()
                            .rev()
                            .map(|l| Letter {
                                gen: l.gen,
                                inverse: !l.inverse,
                            })
                            .collect();
                        word.extend(back);
                        return self.negative_verdict(root + 1, word);
                    }
                }
            }
        }

        OrientabilityVerdict {
            kind: if had_reflection_loops {
                OrientabilityKind::OrientableNec
            } else {
                OrientabilityKind::Fuchsian
            },
            witness: None,
        }
    }

    fn negative_verdict(&self, base: usize, word: Vec<Letter>) -> OrientabilityVerdict {
        let display = self.presentation.display_word(&word);
        OrientabilityVerdict {
            kind: OrientabilityKind::Nonorientable,
            witness: Some(NegativeWitness {
                base,
                word,
                display,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub kind: RelatorKind,
    pub display: String,
    /// The relator's image in the symmetric group; identity iff `ok`.
    pub image: Permutation,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    pub relators: Vec<RelatorCheck>,
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
    pub degree: usize,
}

impl ActionReport {
    pub fn is_ok(&self) -> bool {
        self.transitive && self.relators.iter().all(|r| r.ok)
    }

    pub fn failed_relators(&self) -> Vec<&RelatorCheck> {
        self.relators.iter().filter(|r| !r.ok).collect()
    }

    /// True when the only failing relator is the long relation. The chain
    /// and reflection analysis does not depend on it, so a caller may choose
    /// to proceed past a long-relation misprint.
    pub fn only_long_relation_fails(&self) -> bool {
        let failed = self.failed_relators();
        !failed.is_empty() && failed.iter().all(|r| r.kind == RelatorKind::Long)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientabilityKind {
    /// No orientation-reversing element survives in the subgroup: it is a
    /// Fuchsian group.
    Fuchsian,
    /// The subgroup keeps reflections but every circuit is positive: an NEC
    /// group with orientable quotient (sign `+`).
    OrientableNec,
    /// Some circuit is negative: sign `-`.
    Nonorientable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeWitness {
    /// Coset the circuit starts and ends at.
    pub base: usize,
    pub word: Vec<Letter>,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientabilityVerdict {
    pub kind: OrientabilityKind,
    pub witness: Option<NegativeWitness>,
}
