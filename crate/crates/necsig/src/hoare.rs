//! The subgroup signature pipeline (Hoare's method).
//!
//! Given a transitive coset action of an NEC group, the signature of the
//! point stabilizer is assembled in five steps:
//!
//! 1. every fixed coset of a reflection generator induces a reflection of
//!    the subgroup;
//!
//! 2-4. for each adjacent reflection pair `(c, d)` with dihedral relation
//! `(cd)^n = 1`, every orbit of the pair either contributes an elliptic
//! period `n/m` (no fixed cosets, orbit size `2m`) or links two induced
//! reflections with link period `n/m` (exactly two fixed-coset incidences,
//! orbit size `m`), where `m` is the common length of the `(cd)`-cycles in
//! the orbit;
//!
//! 5. each fixed coset `K` of the last reflection `c{i}.{s}` closes a link
//!    of period 1 to `c{i}.0` at coset `K.e{i}`.
//!
//! The links form a multigraph on the induced reflections in which every
//! vertex has degree exactly two, so its components are cycles: the period
//! cycles of the subgroup, after periods equal to 1 are dropped. Elliptic
//! generators contribute a proper period `m/len` for each of their cycles.
//! Orientability comes from the sign-labelled coset graph, and the genus
//! from the exact area relation `area(subgroup) = N * area(group)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::representation::{ActionReport, CosetAction, OrientabilityKind, OrientabilityVerdict};
use crate::signature::{genus_from_area, NecSignature, Rational, SignSymbol};

#[derive(Debug, Error)]
pub enum PipelineError {
    /// The action failed verification: relators or transitivity. The full
    /// report is attached for rendering.
    #[error("action rejected: {summary}")]
    InvalidAction {
        summary: String,
        report: Box<ActionReport>,
    },
    /// The action passed whatever verification was requested but the
    /// analysis reached a state the theory forbids. Either the action was
    /// admitted unverified, or there is a bug.
    #[error("inconsistent analysis: {0}")]
    Inconsistent(String),
}

/// A reflection of the subgroup: the generator `c{cycle}.{pos}` fixes
/// `coset`, so its conjugate by a coset representative lies in the subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedReflection {
    pub cycle: usize,
    pub pos: usize,
    pub coset: usize,
}

impl InducedReflection {
    pub fn generator_name(&self) -> String {
        format!("c{}.{}", self.cycle, self.pos)
    }
}

impl fmt::Display for InducedReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}.{}@{}", self.cycle, self.pos, self.coset)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkSource {
    /// From the dihedral pair `(c{cycle}.{pos-1}, c{cycle}.{pos})`.
    Dihedral { cycle: usize, pos: usize },
    /// From a fixed coset of `c{cycle}.{s}` carried along `e{cycle}`.
    Closing { cycle: usize },
}

/// An edge of the link multigraph; a self-link has equal ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub end1: InducedReflection,
    pub end2: InducedReflection,
    pub period: u32,
    pub source: LinkSource,
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {} (period {})", self.end1, self.end2, self.period)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitKind {
    /// Orbit of size `2m` with no fixed cosets: elliptic period `n/m`.
    Elliptic { period: u32 },
    /// Orbit of size `m` with exactly two fixed-coset incidences.
    Link { link: Link },
}

/// Classification of one orbit of a dihedral reflection pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitAnalysis {
    pub cycle: usize,
    /// The pair is `(c{cycle}.{pos-1}, c{cycle}.{pos})`.
    pub pos: usize,
    pub n: u32,
    pub orbit: Vec<usize>,
    pub m: u32,
    pub kind: OrbitKind,
}

/// A component of the link multigraph: `periods[t]` is the period of the
/// link between `vertices[t]` and `vertices[(t+1) % len]`. A single vertex
/// carrying a self-link has one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub vertices: Vec<InducedReflection>,
    pub periods: Vec<u32>,
}

impl Chain {
    /// The period cycle this chain contributes: its link periods with
    /// entries equal to 1 removed, in canonical rotation. All-ones chains
    /// yield the empty cycle, which still counts as a boundary component.
    pub fn period_cycle(&self) -> Vec<u32> {
        let kept: Vec<u32> = self.periods.iter().copied().filter(|&p| p != 1).collect();
        crate::signature::canonical_cycle(&kept)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ~ ")?;
            }
            write!(f, "{v}")?;
        }
        if !self.vertices.is_empty() {
            write!(f, " ~ {}", self.vertices[0])?;
        }
        write!(
            f,
            "  periods ({})",
            self.periods
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaDerivation {
    pub input_area: Rational,
    pub index: usize,
    pub subgroup_area: Rational,
}

/// Everything the pipeline computed, inputs through final signature.
#[derive(Debug, Clone)]
pub struct SubgroupReport {
    pub degree: usize,
    pub induced_reflections: Vec<InducedReflection>,
    /// Proper periods contributed by `x{j}`, at index `j-1`.
    pub elliptic_by_generator: Vec<Vec<u32>>,
    pub orbit_analyses: Vec<OrbitAnalysis>,
    pub links: Vec<Link>,
    pub chains: Vec<Chain>,
    pub proper_periods: Vec<u32>,
    /// One canonical period cycle per chain, in chain order.
    pub period_cycles: Vec<Vec<u32>>,
    pub orientability: OrientabilityVerdict,
    pub area: AreaDerivation,
    pub genus: u32,
    pub signature: NecSignature,
    /// False when the action was admitted under `allow_invalid_relators`.
    pub action_verified: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PipelineOptions {
    /// Proceed when the long relation (and only it) fails verification.
    /// The reflection and connecting relators must still hold; the report
    /// is marked unverified.
    pub allow_invalid_relators: bool,
}

/// Step 1: fixed cosets of reflection generators.
pub fn induced_reflections(action: &CosetAction) -> Vec<InducedReflection> {
    let sig = action.signature().clone();
    let mut out = Vec::new();
    for (ci, cycle) in sig.period_cycles().iter().enumerate() {
        for pos in 0..=cycle.len() {
            let gen = action.presentation().reflection(ci + 1, pos);
            for coset in action.image(gen).fixed_points() {
                out.push(InducedReflection {
                    cycle: ci + 1,
                    pos,
                    coset,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Proper periods contributed by each elliptic generator separately:
/// `x{j}` of order `m` adds `m / len` for every cycle of its image, except
/// the trivial period 1. Entry `j-1` of the result belongs to `x{j}`.
pub fn elliptic_periods_by_generator(action: &CosetAction) -> Result<Vec<Vec<u32>>, PipelineError> {
    let sig = action.signature().clone();
    let mut out = Vec::new();
    for (j, &m) in sig.proper_periods().iter().enumerate() {
        let img = action.image(action.presentation().elliptic(j + 1));
        let mut periods = Vec::new();
        for cycle in img.cycles() {
            let len = cycle.len() as u32;
            if m % len != 0 {
                return Err(PipelineError::Inconsistent(format!(
                    "x{} has a cycle of length {} not dividing its order {}",
                    j + 1,
                    len,
                    m
                )));
            }
            if m / len > 1 {
                periods.push(m / len);
            }
        }
        out.push(periods);
    }
    Ok(out)
}

/// All proper periods contributed by the elliptic generators, flattened.
pub fn elliptic_periods(action: &CosetAction) -> Result<Vec<u32>, PipelineError> {
    Ok(elliptic_periods_by_generator(action)?
        .into_iter()
        .flatten()
        .collect())
}

/// Steps 2-4 for the pair `(c{cycle}.{pos-1}, c{cycle}.{pos})` with
/// `(cd)^n = 1`: classifies every orbit of the pair as elliptic or link.
pub fn analyze_dihedral_pair(
    action: &CosetAction,
    cycle: usize,
    pos: usize,
) -> Result<Vec<OrbitAnalysis>, PipelineError> {
    let n = action.signature().period_cycles()[cycle - 1][pos - 1];
    let c = action
        .image(action.presentation().reflection(cycle, pos - 1))
        .clone();
    let d = action
        .image(action.presentation().reflection(cycle, pos))
        .clone();
    let pair_name = format!("(c{}.{}, c{}.{})", cycle, pos - 1, cycle, pos);

    let cd = c.then(&d).expect("uniform degree");
    let cd_cycles = cd.cycles();
    let orbits = crate::permutation::orbits(action.degree(), &[c.clone(), d.clone()])
        .expect("uniform degree");

    let mut out = Vec::new();
    for orbit in orbits {
        let inside: Vec<&Vec<usize>> = cd_cycles
            .iter()
            .filter(|cyc| orbit.contains(&cyc[0]))
            .collect();
        for cyc in &inside {
            if !cyc.iter().all(|p| orbit.contains(p)) {
                return Err(PipelineError::Inconsistent(format!(
                    "product of pair {pair_name} does not preserve the orbit {orbit:?}"
                )));
            }
        }
        let m = inside[0].len() as u32;
        if !inside.iter().all(|cyc| cyc.len() as u32 == m) {
            return Err(PipelineError::Inconsistent(format!(
                "pair {pair_name}: (cd)-cycle lengths differ within orbit {orbit:?}"
            )));
        }
        if !n.is_multiple_of(m) {
            return Err(PipelineError::Inconsistent(format!(
                "pair {pair_name}: (cd)-cycle length {m} does not divide the dihedral exponent {n}"
            )));
        }

        let mut incidences: Vec<InducedReflection> = Vec::new();
        for (gen_pos, perm) in [(pos - 1, &c), (pos, &d)] {
            for k in perm.fixed_points() {
                if orbit.contains(&k) {
                    incidences.push(InducedReflection {
                        cycle,
                        pos: gen_pos,
                        coset: k,
                    });
                }
            }
        }

        let kind = match incidences.len() {
            0 => {
                if inside.len() != 2 || orbit.len() as u32 != 2 * m {
                    return Err(PipelineError::Inconsistent(format!(
                        "pair {pair_name}: orbit {orbit:?} has no fixed cosets but size {} != 2*{m}",
                        orbit.len()
                    )));
                }
                OrbitKind::Elliptic { period: n / m }
            }
            2 => {
                if inside.len() != 1 {
                    return Err(PipelineError::Inconsistent(format!(
                        "pair {pair_name}: orbit {orbit:?} has fixed cosets but splits into {} (cd)-cycles",
                        inside.len()
                    )));
                }
                let same_generator = incidences[0].pos == incidences[1].pos;
                if m.is_multiple_of(2) != same_generator {
                    return Err(PipelineError::Inconsistent(format!(
                        "pair {pair_name}: orbit {orbit:?} has m = {m} but its fixed cosets sit on {}",
                        if same_generator { "one generator" } else { "both generators" }
                    )));
                }
                OrbitKind::Link {
                    link: Link {
                        end1: incidences[0],
                        end2: incidences[1],
                        period: n / m,
                        source: LinkSource::Dihedral { cycle, pos },
                    },
                }
            }
            count => {
                return Err(PipelineError::Inconsistent(format!(
                    "pair {pair_name}: orbit {orbit:?} has {count} fixed-coset incidences, expected 0 or 2"
                )));
            }
        };
        out.push(OrbitAnalysis {
            cycle,
            pos,
            n,
            orbit,
            m,
            kind,
        });
    }
    Ok(out)
}

/// Step 5: each fixed coset `K` of `c{cycle}.{s}` links to `c{cycle}.0` at
/// `K.e{cycle}` with period 1. For an empty period cycle both ends name the
/// same generator, and a fixed coset of `e` produces a self-link.
pub fn closing_links(action: &CosetAction, cycle: usize) -> Result<Vec<Link>, PipelineError> {
    let s = action.signature().period_cycles()[cycle - 1].len();
    let cs = action.image(action.presentation().reflection(cycle, s));
    let c0 = action.image(action.presentation().reflection(cycle, 0));
    let e = action.image(action.presentation().connecting(cycle));

    let mut out = Vec::new();
    for k in cs.fixed_points() {
        let ke = e.apply(k);
        if c0.apply(ke) != ke {
            return Err(PipelineError::Inconsistent(format!(
                "c{cycle}.0 does not fix {ke} = {k}.e{cycle} although c{cycle}.{s} fixes {k}"
            )));
        }
        out.push(Link {
            end1: InducedReflection {
                cycle,
                pos: s,
                coset: k,
            },
            end2: InducedReflection {
                cycle,
                pos: 0,
                coset: ke,
            },
            period: 1,
            source: LinkSource::Closing { cycle },
        });
    }
    Ok(out)
}

/// Joins the links into chains. Every vertex must have degree exactly two
/// (a self-link counts twice), so the components are cycles. Chains are
/// reported starting at their least vertex, in the direction that makes the
/// vertex sequence lexicographically least, sorted by starting vertex.
pub fn assemble_chains(links: &[Link]) -> Result<Vec<Chain>, PipelineError> {
    let mut incident: BTreeMap<InducedReflection, Vec<usize>> = BTreeMap::new();
    for (idx, link) in links.iter().enumerate() {
        incident.entry(link.end1).or_default().push(idx);
        incident.entry(link.end2).or_default().push(idx);
    }
    for (v, edges) in &incident {
        if edges.len() != 2 {
            return Err(PipelineError::Inconsistent(format!(
                "induced reflection {v} lies on {} links, expected exactly 2",
                edges.len()
            )));
        }
    }

    let other_end = |idx: usize, v: InducedReflection| {
        let l = &links[idx];
        if l.end1 == v {
            l.end2
        } else {
            l.end1
        }
    };

    let mut used = vec![false; links.len()];
    let mut chains = Vec::new();
    for (&start, edges) in &incident {
        if edges.iter().all(|&i| used[i]) {
            continue;
        }
        // First step: prefer the link with the smaller far end, then the
        // smaller period, then position. Ties only occur on double edges.
        let mut first_candidates: Vec<usize> =
            edges.iter().copied().filter(|&i| !used[i]).collect();
        first_candidates.sort_by_key(|&i| (other_end(i, start), links[i].period, i));
        let mut vertices = vec![start];
        let mut periods = Vec::new();
        let mut current = start;
        let mut edge = first_candidates[0];
        loop {
            used[edge] = true;
            periods.push(links[edge].period);
            let next = other_end(edge, current);
            if next == start {
                break;
            }
            vertices.push(next);
            current = next;
            edge = incident[&next]
                .iter()
                .copied()
                .find(|&i| !used[i])
                .ok_or_else(|| {
                    PipelineError::Inconsistent(format!(
                        "chain walk stuck at {next}: no unused link"
                    ))
                })?;
        }
        chains.push(canonical_chain(Chain { vertices, periods }));
    }
    Ok(chains)
}

/// Picks the lexicographically smaller of the two traversal directions.
/// The starting vertex is already the least one.
fn canonical_chain(chain: Chain) -> Chain {
    let len = chain.vertices.len();
    if len <= 2 {
        // One or two vertices: the vertex sequence is direction-independent;
        // orient so the period list is least.
        let mut rev_periods = chain.periods.clone();
        rev_periods.reverse();
        if rev_periods < chain.periods {
            return Chain {
                vertices: chain.vertices,
                periods: rev_periods,
            };
        }
        return chain;
    }
    let mut rev_vertices = vec![chain.vertices[0]];
    rev_vertices.extend(chain.vertices[1..].iter().rev());
    let mut rev_periods = chain.periods.clone();
    rev_periods.reverse();
    if (&rev_vertices, &rev_periods) < (&chain.vertices, &chain.periods) {
        Chain {
            vertices: rev_vertices,
            periods: rev_periods,
        }
    } else {
        chain
    }
}

/// Runs the whole pipeline and returns the subgroup's signature together
/// with every intermediate artifact.
pub fn subgroup_signature(
    action: &CosetAction,
    options: PipelineOptions,
) -> Result<SubgroupReport, PipelineError> {
    let validation = action.validate();
    let action_verified = validation.is_ok();
    let mut warnings = Vec::new();
    if !action_verified {
        let tolerable = options.allow_invalid_relators
            && validation.transitive
            && validation.only_long_relation_fails();
        if !tolerable {
            let mut parts: Vec<String> = validation
                .failed_relators()
                .iter()
                .map(|r| format!("relator {} evaluates to {}", r.display, r.image))
                .collect();
            if !validation.transitive {
                parts.push(format!(
                    "action is not transitive (orbits {:?})",
                    validation.orbits
                ));
            }
            return Err(PipelineError::InvalidAction {
                summary: parts.join("; "),
                report: Box::new(validation),
            });
        }
        warnings.push(
            "unverified input: the long relation does not hold; proceeding on the remaining relators"
                .to_string(),
        );
    }

    let sig = action.signature().clone();
    let degree = action.degree();

    let induced = induced_reflections(action);
    let elliptic_by_generator = elliptic_periods_by_generator(action)?;
    let mut proper_periods: Vec<u32> = elliptic_by_generator.iter().flatten().copied().collect();

    let mut orbit_analyses = Vec::new();
    let mut links = Vec::new();
    for (ci, cyc) in sig.period_cycles().iter().enumerate() {
        for pos in 1..=cyc.len() {
            for analysis in analyze_dihedral_pair(action, ci + 1, pos)? {
                match &analysis.kind {
                    OrbitKind::Elliptic { period } => {
                        if *period > 1 {
                            proper_periods.push(*period);
                        }
                    }
                    OrbitKind::Link { link } => links.push(*link),
                }
                orbit_analyses.push(analysis);
            }
        }
    }
    for ci in 1..=sig.cycle_count() {
        links.extend(closing_links(action, ci)?);
    }

    let chains = assemble_chains(&links)?;

    // Every induced reflection must be accounted for by exactly one chain.
    let covered: Vec<InducedReflection> = {
        let mut v: Vec<_> = chains
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .collect();
        v.sort_unstable();
        v
    };
    if covered != induced {
        return Err(PipelineError::Inconsistent(format!(
            "chains cover {} induced reflections but step 1 found {}",
            covered.len(),
            induced.len()
        )));
    }

    for chain in &chains {
        if chain.vertices.len() == 1 && chain.periods[0] > 1 {
            warnings.push(format!(
                "self-link with period {} at {}: single-entry period cycle",
                chain.periods[0], chain.vertices[0]
            ));
        }
    }

    let period_cycles: Vec<Vec<u32>> = chains.iter().map(|c| c.period_cycle()).collect();

    let orientability = action.orientability();
    if orientability.kind == OrientabilityKind::Fuchsian && !links.is_empty() {
        return Err(PipelineError::Inconsistent(
            "verdict is fuchsian but induced reflections exist".to_string(),
        ));
    }
    let sign = match orientability.kind {
        OrientabilityKind::Nonorientable => SignSymbol::Minus,
        _ => SignSymbol::Plus,
    };

    proper_periods.sort_unstable();

    let input_area = sig.reduced_area();
    let subgroup_area = &input_area * Rational::from(BigInt::from(degree as i64));
    let genus = genus_from_area(&subgroup_area, sign, &proper_periods, &period_cycles)
        .map_err(|e| PipelineError::Inconsistent(e.to_string()))?;

    let signature =
        NecSignature::new(genus, sign, proper_periods.clone(), period_cycles.clone()).normalize();
    signature
        .validate()
        .map_err(|e| PipelineError::Inconsistent(format!("computed signature is invalid: {e}")))?;

    Ok(SubgroupReport {
        degree,
        induced_reflections: induced,
        elliptic_by_generator,
        orbit_analyses,
        links,
        chains,
        proper_periods,
        period_cycles,
        orientability,
        area: AreaDerivation {
            input_area,
            index: degree,
            subgroup_area,
        },
        genus,
        signature,
        action_verified,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::CosetAction;
    use crate::signature::{parse_signature, rational};

    fn sig(text: &str) -> NecSignature {
        parse_signature(text).unwrap()
    }

    fn quad_action() -> CosetAction {
        CosetAction::from_cycle_strings(
            &sig("(0;+;[];{(2,3),()})"),
            4,
            &[
                ("c1.0", "(1,2)(3)(4)"),
                ("c1.1", "(1)(2)(3,4)"),
                ("c1.2", "(1,3)(2)(4)"),
                ("c2.0", "(1)(4)(2,3)"),
                ("e1", "(1)(4)(2,3)"),
                ("e2", "(1)(4)(2,3)"),
            ],
        )
        .unwrap()
    }

    fn sextic_action() -> CosetAction {
        CosetAction::from_cycle_strings(
            &sig("(0;+;[6,6];{(5,8,12)})"),
            6,
            &[
                ("x1", "(1,6,5)(2,4)(3)"),
                ("x2", "(1,6,2,5,4,3)"),
                ("e1", "(3,2,1)(6,5,4)"),
                ("c1.0", "(1,2)(3,4)(5)(6)"),
                ("c1.1", "(1,3)(2,6)(4)(5)"),
                ("c1.2", "(1,4)(2,6)(3,5)"),
                ("c1.3", "(1,5)(2,3)(4)(6)"),
            ],
        )
        .unwrap()
    }

    fn ir(cycle: usize, pos: usize, coset: usize) -> InducedReflection {
        InducedReflection { cycle, pos, coset }
    }

    #[test]
    fn induced_reflections_of_the_quad_action() {
        assert_eq!(
            induced_reflections(&quad_action()),
            vec![
                ir(1, 0, 3),
                ir(1, 0, 4),
                ir(1, 1, 1),
                ir(1, 1, 2),
                ir(1, 2, 2),
                ir(1, 2, 4),
                ir(2, 0, 1),
                ir(2, 0, 4),
            ]
        );
    }

    #[test]
    fn induced_reflections_of_the_sextic_action() {
        assert_eq!(
            induced_reflections(&sextic_action()),
            vec![
                ir(1, 0, 5),
                ir(1, 0, 6),
                ir(1, 1, 4),
                ir(1, 1, 5),
                ir(1, 3, 4),
                ir(1, 3, 6),
            ]
        );
    }

    #[test]
    fn elliptic_periods_of_the_sextic_action() {
        // x1 = (1,6,5)(2,4)(3) of order 6: periods 2, 3, 6.
        // x2 a 6-cycle: only the trivial period 1, dropped.
        assert_eq!(elliptic_periods(&sextic_action()).unwrap(), vec![2, 3, 6]);
        assert_eq!(
            elliptic_periods_by_generator(&sextic_action()).unwrap(),
            vec![vec![2, 3, 6], vec![]]
        );
    }

    #[test]
    fn dihedral_analysis_quad_pair_one() {
        // (c1.0, c1.1), n = 2.
        let analyses = analyze_dihedral_pair(&quad_action(), 1, 1).unwrap();
        assert_eq!(analyses.len(), 2);
        assert_eq!(analyses[0].orbit, vec![1, 2]);
        assert_eq!(analyses[0].m, 2);
        match &analyses[0].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 1, 1), ir(1, 1, 2), 1)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
        assert_eq!(analyses[1].orbit, vec![3, 4]);
        match &analyses[1].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 0, 3), ir(1, 0, 4), 1)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
    }

    #[test]
    fn dihedral_analysis_quad_pair_two() {
        // (c1.1, c1.2), n = 3.
        let analyses = analyze_dihedral_pair(&quad_action(), 1, 2).unwrap();
        assert_eq!(analyses.len(), 2);
        assert_eq!(analyses[0].orbit, vec![1, 3, 4]);
        assert_eq!(analyses[0].m, 3);
        match &analyses[0].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 1, 1), ir(1, 2, 4), 1)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
        // The singleton orbit {2} is fixed by both generators.
        assert_eq!(analyses[1].orbit, vec![2]);
        assert_eq!(analyses[1].m, 1);
        match &analyses[1].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 1, 2), ir(1, 2, 2), 3)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
    }

    #[test]
    fn dihedral_analysis_sextic() {
        // (c1.0, c1.1), n = 5: a 5-point link orbit and a fixed singleton.
        let analyses = analyze_dihedral_pair(&sextic_action(), 1, 1).unwrap();
        assert_eq!(analyses.len(), 2);
        assert_eq!(analyses[0].orbit, vec![1, 2, 3, 4, 6]);
        assert_eq!(analyses[0].m, 5);
        match &analyses[0].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 0, 6), ir(1, 1, 4), 1)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
        match &analyses[1].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 0, 5), ir(1, 1, 5), 5)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }

        // (c1.1, c1.2), n = 8: one link orbit with both ends on c1.1, one
        // elliptic orbit of size 2 with m = 1.
        let analyses = analyze_dihedral_pair(&sextic_action(), 1, 2).unwrap();
        assert_eq!(analyses.len(), 2);
        assert_eq!(analyses[0].orbit, vec![1, 3, 4, 5]);
        assert_eq!(analyses[0].m, 4);
        match &analyses[0].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 1, 4), ir(1, 1, 5), 2)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
        assert_eq!(analyses[1].orbit, vec![2, 6]);
        assert_eq!(analyses[1].m, 1);
        assert_eq!(analyses[1].kind, OrbitKind::Elliptic { period: 8 });

        // (c1.2, c1.3), n = 12: the whole coset space, m = 6.
        let analyses = analyze_dihedral_pair(&sextic_action(), 1, 3).unwrap();
        assert_eq!(analyses.len(), 1);
        assert_eq!(analyses[0].m, 6);
        match &analyses[0].kind {
            OrbitKind::Link { link } => {
                assert_eq!(
                    (link.end1, link.end2, link.period),
                    (ir(1, 3, 4), ir(1, 3, 6), 2)
                );
            }
            other => panic!("expected link, got {other:?}"),
        }
    }

    #[test]
    fn dihedral_analysis_rejects_inconsistent_actions() {
        // Non-involution image: (cd)-cycle lengths differ inside one orbit.
        let s = sig("(2;+;[3,2];{(2)})");
        let a = CosetAction::from_cycle_strings(
            &s,
            3,
            &[
                ("x1", "(1,2,3)"),
                ("x2", ""),
                ("c1.0", "(1,2,3)"),
                ("c1.1", "(1,2)"),
                ("e1", ""),
                ("a1", ""),
                ("b1", ""),
                ("a2", ""),
                ("b2", ""),
            ],
        )
        .unwrap();
        let err = analyze_dihedral_pair(&a, 1, 1).unwrap_err();
        assert!(err.to_string().contains("cycle lengths differ"), "{err}");

        // Three fixed-coset incidences in one orbit: c fixes the whole
        // orbit of the 3-cycle d.
        let s3 = sig("(2;+;[3,2];{(3)})");
        let b = CosetAction::from_cycle_strings(
            &s3,
            3,
            &[
                ("x1", "(1,2,3)"),
                ("x2", ""),
                ("c1.0", ""),
                ("c1.1", "(1,2,3)"),
                ("e1", ""),
                ("a1", ""),
                ("b1", ""),
                ("a2", ""),
                ("b2", ""),
            ],
        )
        .unwrap();
        let err = analyze_dihedral_pair(&b, 1, 1).unwrap_err();
        assert!(
            err.to_string().contains("3 fixed-coset incidences"),
            "{err}"
        );

        // Uniform (cd)-cycle length that fails to divide the exponent.
        let err = analyze_dihedral_pair(&a, 1, 1).map(|_| ()).unwrap_err();
        assert!(matches!(err, PipelineError::Inconsistent(_)));
        let c = CosetAction::from_cycle_strings(
            &s,
            3,
            &[
                ("x1", "(1,2,3)"),
                ("x2", ""),
                ("c1.0", ""),
                ("c1.1", "(1,2,3)"),
                ("e1", ""),
                ("a1", ""),
                ("b1", ""),
                ("a2", ""),
                ("b2", ""),
            ],
        )
        .unwrap();
        let err = analyze_dihedral_pair(&c, 1, 1).unwrap_err();
        assert!(err.to_string().contains("does not divide"), "{err}");
    }

    #[test]
    fn closing_links_examples() {
        // c1.2 fixes 2 and 4; 2.e1 = 3 and 4.e1 = 4.
        assert_eq!(
            closing_links(&quad_action(), 1).unwrap(),
            vec![
                Link {
                    end1: ir(1, 2, 2),
                    end2: ir(1, 0, 3),
                    period: 1,
                    source: LinkSource::Closing { cycle: 1 }
                },
                Link {
                    end1: ir(1, 2, 4),
                    end2: ir(1, 0, 4),
                    period: 1,
                    source: LinkSource::Closing { cycle: 1 }
                },
            ]
        );

        // Empty cycle: c2.0 fixes 1 and 4, e2 fixes both: two self-links.
        let links = closing_links(&quad_action(), 2).unwrap();
        assert_eq!(links.len(), 2);
        assert_eq!((links[0].end1, links[0].end2), (ir(2, 0, 1), ir(2, 0, 1)));
        assert_eq!((links[1].end1, links[1].end2), (ir(2, 0, 4), ir(2, 0, 4)));

        // c1.3 fixes 4 and 6; 4.e1 = 6 and 6.e1 = 5.
        assert_eq!(
            closing_links(&sextic_action(), 1).unwrap(),
            vec![
                Link {
                    end1: ir(1, 3, 4),
                    end2: ir(1, 0, 6),
                    period: 1,
                    source: LinkSource::Closing { cycle: 1 }
                },
                Link {
                    end1: ir(1, 3, 6),
                    end2: ir(1, 0, 5),
                    period: 1,
                    source: LinkSource::Closing { cycle: 1 }
                },
            ]
        );
    }

    #[test]
    fn chain_assembly_quad() {
        let action = quad_action();
        let mut links = Vec::new();
        for pos in 1..=2 {
            for a in analyze_dihedral_pair(&action, 1, pos).unwrap() {
                if let OrbitKind::Link { link } = a.kind {
                    links.push(link);
                }
            }
        }
        for cycle in 1..=2 {
            links.extend(closing_links(&action, cycle).unwrap());
        }
        let chains = assemble_chains(&links).unwrap();
        assert_eq!(chains.len(), 3);

        // The six-vertex chain from the first period cycle.
        assert_eq!(
            chains[0].vertices,
            vec![
                ir(1, 0, 3),
                ir(1, 0, 4),
                ir(1, 2, 4),
                ir(1, 1, 1),
                ir(1, 1, 2),
                ir(1, 2, 2)
            ]
        );
        assert_eq!(chains[0].periods, vec![1, 1, 1, 1, 3, 1]);
        assert_eq!(chains[0].period_cycle(), vec![3]);

        // Two self-link chains from the empty cycle.
        assert_eq!(chains[1].vertices, vec![ir(2, 0, 1)]);
        assert_eq!(chains[1].period_cycle(), Vec::<u32>::new());
        assert_eq!(chains[2].vertices, vec![ir(2, 0, 4)]);
        assert_eq!(chains[2].period_cycle(), Vec::<u32>::new());
    }

    #[test]
    fn chain_assembly_rejects_dangling_vertices() {
        let links = vec![Link {
            end1: ir(1, 0, 1),
            end2: ir(1, 1, 1),
            period: 2,
            source: LinkSource::Dihedral { cycle: 1, pos: 1 },
        }];
        assert!(assemble_chains(&links).is_err());
    }

    #[test]
    fn chain_assembly_accepts_self_link_with_large_period() {
        // Not producible from a valid action, but the assembler handles it:
        // a one-vertex chain carrying a single-entry period cycle.
        let links = vec![Link {
            end1: ir(1, 0, 1),
            end2: ir(1, 0, 1),
            period: 5,
            source: LinkSource::Closing { cycle: 1 },
        }];
        let chains = assemble_chains(&links).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].period_cycle(), vec![5]);
    }

    #[test]
    fn quad_action_end_to_end() {
        let report = subgroup_signature(&quad_action(), PipelineOptions::default()).unwrap();
        assert_eq!(report.signature, sig("(1;-;[];{(3),(),()})").normalize());
        assert_eq!(report.genus, 1);
        assert_eq!(report.proper_periods, Vec::<u32>::new());
        assert_eq!(report.area.input_area, rational(7, 12));
        assert_eq!(report.area.subgroup_area, rational(7, 3));
        assert_eq!(report.chains.len(), 3);
        assert!(report.action_verified);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn sextic_action_end_to_end() {
        let report = subgroup_signature(&sextic_action(), PipelineOptions::default()).unwrap();
        assert_eq!(report.signature, sig("(9;-;[2,3,6,8];{(2,2,5)})"));
        assert_eq!(report.proper_periods, vec![2, 3, 6, 8]);
        assert_eq!(report.area.input_area, rational(157, 80));
        assert_eq!(report.area.subgroup_area, rational(471, 40));
        // One chain: c1.0@5 ~ c1.1@5 ~ c1.1@4 ~ c1.0@6 ~ c1.3@4 ~ c1.3@6,
        // periods 5,2,1,1,2,1.
        assert_eq!(report.chains.len(), 1);
        assert_eq!(report.chains[0].period_cycle(), vec![2, 2, 5]);
    }

    #[test]
    fn bad_long_relation_needs_the_override() {
        let bad = CosetAction::from_cycle_strings(
            &sig("(0;+;[6,6];{(5,8,12)})"),
            6,
            &[
                ("x1", "(1,4)(2,3,6)(5)"),
                ("x2", "(1,6,2,5,4,3)"),
                ("e1", "(3,2,1)(6,5,4)"),
                ("c1.0", "(1,2)(3,4)(5)(6)"),
                ("c1.1", "(1,3)(2,6)(4)(5)"),
                ("c1.2", "(1,4)(2,6)(3,5)"),
                ("c1.3", "(1,5)(2,3)(4)(6)"),
            ],
        )
        .unwrap();
        let err = subgroup_signature(&bad, PipelineOptions::default()).unwrap_err();
        assert!(matches!(err, PipelineError::InvalidAction { .. }));
        assert!(err.to_string().contains("x1 x2 e1"));

        // With the override the reflection analysis still goes through; the
        // elliptic periods differ because x1 has a different cycle type
        // split, but the same multiset {2,3,6} happens to arise here.
        let report = subgroup_signature(
            &bad,
            PipelineOptions {
                allow_invalid_relators: true,
            },
        )
        .unwrap();
        assert!(!report.action_verified);
        assert!(report.warnings.iter().any(|w| w.contains("unverified")));
        assert_eq!(report.signature, sig("(9;-;[2,3,6,8];{(2,2,5)})"));
    }

    #[test]
    fn intransitive_actions_are_rejected_even_with_override() {
        let s = sig("(0;+;[];{(2,3),()})");
        let names = ["c1.0", "c1.1", "c1.2", "c2.0", "e1", "e2"];
        let images: Vec<(&str, &str)> = names.iter().map(|&n| (n, "")).collect();
        let a = CosetAction::from_cycle_strings(&s, 2, &images).unwrap();
        let err = subgroup_signature(
            &a,
            PipelineOptions {
                allow_invalid_relators: true,
            },
        )
        .unwrap_err();
        assert!(matches!(err, PipelineError::InvalidAction { .. }));
    }

    #[test]
    fn trivial_action_reproduces_the_signature() {
        for text in [
            "(0;+;[];{(2,3),()})",
            "(0;+;[6,6];{(5,8,12)})",
            "(1;-;[];{(3),(),()})",
            "(9;-;[2,3,6,8];{(2,2,5)})",
            "(0;+;[2,3,7];{})",
            "(2;+;[2,2];{(4),(3,3)})",
        ] {
            let s = sig(text);
            let report =
                subgroup_signature(&CosetAction::trivial(&s), PipelineOptions::default()).unwrap();
            assert_eq!(report.signature, s.normalize(), "{text}");
            assert_eq!(report.area.subgroup_area, s.reduced_area());
        }
    }

    #[test]
    fn kernel_of_all_reflections_to_the_swap_is_fuchsian() {
        let tri = sig("(0;+;[];{(4,6,8)})");
        let theta1 = CosetAction::from_cycle_strings(
            &tri,
            2,
            &[
                ("c1.0", "(1,2)"),
                ("c1.1", "(1,2)"),
                ("c1.2", "(1,2)"),
                ("c1.3", "(1,2)"),
                ("e1", ""),
            ],
        )
        .unwrap();
        let report = subgroup_signature(&theta1, PipelineOptions::default()).unwrap();
        assert_eq!(report.signature, sig("(0;+;[4,6,8];{})"));
        assert_eq!(
            report.orientability.kind,
            crate::representation::OrientabilityKind::Fuchsian
        );
        assert!(report.induced_reflections.is_empty());
    }
}
