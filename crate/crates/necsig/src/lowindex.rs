//! Subgroup enumeration at small index.
//!
//! Two complementary enumerators. `index_two_subgroups` finds every
//! index-2 subgroup by listing the nontrivial sign characters: maps
//! sending each generator to ±1 under which every relator evaluates to
//! +1 (a GF(2) linear system, one equation per relator with an odd
//! letter count on some generator). `search_actions` is a brute-force
//! backtracking search over all transitive coset actions of a given
//! small degree, used as an oracle against the analytic results.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::hoare::{subgroup_signature, PipelineError, PipelineOptions, SubgroupReport};
use crate::permutation::{orbits, Permutation};
use crate::presentation::{canonical_presentation, GeneratorKind, Letter, Presentation};
use crate::representation::CosetAction;
use crate::signature::NecSignature;

/// Largest degree `search_actions` accepts. The search enumerates image
/// tuples in the symmetric group, so it is a desk-scale tool: past this
/// bound the candidate space is out of reach for an exhaustive sweep.
pub const MAX_SEARCH_DEGREE: usize = 6;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("degree {degree} exceeds the exhaustive-search bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("presentation has {count} generators; sign enumeration supports at most {max}")]
    TooManyGenerators { count: usize, max: usize },
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}

/// One index-2 subgroup: the sign character that defines it, the degree-2
/// coset action it induces, and the full pipeline report.
#[derive(Debug, Clone)]
pub struct IndexTwoSubgroup {
    /// Names of the generators mapped to -1, in presentation order.
    pub negated: Vec<String>,
    pub action: CosetAction,
    pub report: SubgroupReport,
}

/// Enumerates the index-2 subgroups of the group with this signature.
/// May be empty; the order is deterministic (sorted by the generator
/// image tuple, which matches `search_actions` at degree 2).
pub fn index_two_subgroups(sig: &NecSignature) -> Result<Vec<IndexTwoSubgroup>, SearchError> {
    let pres = canonical_presentation(sig);
    let n = pres.generators().len();
    if n > 63 {
        return Err(SearchError::TooManyGenerators { count: n, max: 63 });
    }

    // A sign assignment is a bit vector; relator r forces XOR over the
    // bits of its letters (counted with multiplicity) to vanish.
    let mut rows: Vec<u64> = Vec::new();
    for rel in pres.relators() {
        let mut mask = 0u64;
        for l in &rel.word {
            mask ^= 1u64 << l.gen;
        }
        if mask != 0 {
            rows.push(mask);
        }
    }
    let basis = kernel_basis(n, &rows);

    let id = Permutation::identity(2);
    let swap = Permutation::from_cycles(2, &[vec![1, 2]]).expect("valid 2-cycle");
    let mut out = Vec::new();
    for combo in 1u64..(1u64 << basis.len()) {
        let mut assignment = 0u64;
        for (j, b) in basis.iter().enumerate() {
            if combo >> j & 1 == 1 {
                assignment ^= b;
            }
        }
        let mut negated = Vec::new();
        let mut images = Vec::with_capacity(n);
        for (g, gen) in pres.generators().iter().enumerate() {
            let neg = assignment >> g & 1 == 1;
            if neg {
                negated.push(gen.name.clone());
            }
            images.push((
                gen.name.clone(),
                if neg { swap.clone() } else { id.clone() },
            ));
        }
        let action = CosetAction::new(sig, 2, &images).expect("canonical generator set");
        let report = subgroup_signature(&action, PipelineOptions::default())?;
        out.push(IndexTwoSubgroup {
            negated,
            action,
            report,
        });
    }
    out.sort_by(|a, b| a.action.images().cmp(b.action.images()));
    Ok(out)
}

/// Basis of the GF(2) kernel of the system given by `rows` over `n`
/// variables (bit i = variable i).
fn kernel_basis(n: usize, rows: &[u64]) -> Vec<u64> {
    let mut reduced: Vec<u64> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &p in &reduced {
            if r >> p.trailing_zeros() & 1 == 1 {
                r ^= p;
            }
        }
        if r != 0 {
            let c = r.trailing_zeros();
            for p in reduced.iter_mut() {
                if *p >> c & 1 == 1 {
                    *p ^= r;
                }
            }
            reduced.push(r);
        }
    }
    let pivot_cols: Vec<usize> = reduced
        .iter()
        .map(|r| r.trailing_zeros() as usize)
        .collect();
    let mut basis = Vec::new();
    for f in 0..n {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = 1u64 << f;
        for (&c, &row) in pivot_cols.iter().zip(&reduced) {
            // In reduced echelon form each row touches its own pivot and
            // free columns only, so the pivot bit is forced directly.
            if (row & v).count_ones() % 2 == 1 {
                v |= 1u64 << c;
            }
        }
        basis.push(v);
    }
    basis
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub actions: Vec<CosetAction>,
    /// False when the search stopped early because `limit` distinct
    /// subgroups were already found: the list is a prefix, not the whole
    /// answer.
    pub complete: bool,
}

/// Exhaustively enumerates the transitive degree-`degree` coset actions of
/// the group with this signature, i.e. its subgroups of index `degree`,
/// one action per subgroup (deduplicated up to relabeling of the points
/// 2..N with point 1 fixed, each class represented by its lexicographically
/// least member). Depth-first with images tried in lexicographic order;
/// the result order is deterministic.
pub fn search_actions(
    sig: &NecSignature,
    degree: usize,
    limit: Option<usize>,
) -> Result<SearchOutcome, SearchError> {
    if degree == 0 {
        return Err(SearchError::ZeroDegree);
    }
    if degree > MAX_SEARCH_DEGREE {
        return Err(SearchError::DegreeTooLarge {
            degree,
            max: MAX_SEARCH_DEGREE,
        });
    }
    let mut search = Search::new(sig, degree, limit);
    search.dfs(0);
    let actions = search
        .found
        .iter()
        .map(|images| {
            let named: Vec<(String, Permutation)> = search
                .pres
                .generators()
                .iter()
                .zip(images)
                .map(|(g, p)| (g.name.clone(), p.clone()))
                .collect();
            CosetAction::new(sig, degree, &named).expect("searched action is well-formed")
        })
        .collect();
    Ok(SearchOutcome {
        actions,
        complete: !search.hit_limit,
    })
}

/// One node of the assignment plan. `Assign` steps branch over a candidate
/// pool; the others are forced moves or pure checks.
#[derive(Clone, Copy)]
enum Step {
    Assign {
        gen: usize,
        pool: usize,
    },
    /// Verify `(c{cycle}.{pos-1} c{cycle}.{pos})^n = 1`.
    CheckDihedral {
        cycle: usize,
        pos: usize,
    },
    /// Force `c{cycle}.{s} = e c{cycle}.0 e^-1`; for an empty cycle this is
    /// the constraint that `e` commutes with `c{cycle}.0`.
    DetermineClosing {
        cycle: usize,
    },
    /// With no surface generators the long relation pins the last
    /// connecting generator.
    DetermineLastConnecting {
        gen: usize,
    },
    /// With neither surface nor connecting generators it pins the last
    /// elliptic generator instead.
    DetermineLastElliptic {
        gen: usize,
        order: u32,
    },
    CheckLong,
}

struct Search<'a> {
    sig: &'a NecSignature,
    pres: Presentation,
    degree: usize,
    plan: Vec<Step>,
    pools: Vec<Vec<Permutation>>,
    images: Vec<Option<Permutation>>,
    long_word: Vec<Letter>,
    relabelings: Vec<Permutation>,
    found: BTreeSet<Vec<Permutation>>,
    limit: Option<usize>,
    hit_limit: bool,
}

impl<'a> Search<'a> {
    fn new(sig: &'a NecSignature, degree: usize, limit: Option<usize>) -> Self {
        let pres = canonical_presentation(sig);
        let long_word = pres
            .relators()
            .last()
            .expect("presentation always has the long relation")
            .word
            .clone();

        let everything = all_perms(degree);
        let involutions: Vec<Permutation> = everything
            .iter()
            .filter(|p| p.order() <= 2)
            .cloned()
            .collect();

        let mut pools = vec![involutions, everything.clone()];
        let pool_of_order = |m: u32, pools: &mut Vec<Vec<Permutation>>| -> usize {
            pools.push(
                everything
                    .iter()
                    .filter(|p| u64::from(m) % p.order() == 0)
                    .cloned()
                    .collect(),
            );
            pools.len() - 1
        };

        let r = sig.proper_periods().len();
        let k = sig.cycle_count();
        let g = sig.genus();

        let mut plan = Vec::new();
        for (ci, cyc) in sig.period_cycles().iter().enumerate() {
            let i = ci + 1;
            plan.push(Step::Assign {
                gen: pres.reflection(i, 0),
                pool: 0,
            });
            for pos in 1..cyc.len() {
                plan.push(Step::Assign {
                    gen: pres.reflection(i, pos),
                    pool: 0,
                });
                plan.push(Step::CheckDihedral { cycle: i, pos });
            }
        }
        for j in 1..=r {
            let m = sig.proper_periods()[j - 1];
            if g == 0 && k == 0 && j == r {
                plan.push(Step::DetermineLastElliptic {
                    gen: pres.elliptic(j),
                    order: m,
                });
            } else {
                let pool = pool_of_order(m, &mut pools);
                plan.push(Step::Assign {
                    gen: pres.elliptic(j),
                    pool,
                });
            }
        }
        for i in 1..=k {
            if g == 0 && i == k {
                plan.push(Step::DetermineLastConnecting {
                    gen: pres.connecting(i),
                });
            } else {
                plan.push(Step::Assign {
                    gen: pres.connecting(i),
                    pool: 1,
                });
            }
            plan.push(Step::DetermineClosing { cycle: i });
        }
        if g >= 1 {
            for (gen, _) in pres.generators().iter().enumerate().filter(|(_, gn)| {
                matches!(gn.kind, GeneratorKind::Hyperbolic | GeneratorKind::Glide)
            }) {
                plan.push(Step::Assign { gen, pool: 1 });
            }
            plan.push(Step::CheckLong);
        } else if k == 0 && r == 0 {
            plan.push(Step::CheckLong);
        }

        let relabelings: Vec<Permutation> = all_perms(degree)
            .into_iter()
            .filter(|p| p.apply(1) == 1)
            .collect();
        let generator_count = pres.generators().len();
        Search {
            sig,
            pres,
            degree,
            plan,
            pools,
            images: vec![None; generator_count],
            long_word,
            relabelings,
            found: BTreeSet::new(),
            limit,
            hit_limit: limit == Some(0),
        }
    }

    fn img(&self, gen: usize) -> &Permutation {
        self.images[gen]
            .as_ref()
            .expect("generator assigned before use")
    }

    fn eval(&self, word: &[Letter]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for l in word {
            let step = if l.inverse {
                self.img(l.gen).inverse()
            } else {
                self.img(l.gen).clone()
            };
            acc = acc.then(&step).expect("uniform degree");
        }
        acc
    }

    fn dihedral_ok(&self, cycle: usize, pos: usize) -> bool {
        let n = self.sig.period_cycles()[cycle - 1][pos - 1];
        let p = self
            .img(self.pres.reflection(cycle, pos - 1))
            .then(self.img(self.pres.reflection(cycle, pos)))
            .expect("uniform degree");
        u64::from(n) % p.order() == 0
    }

    fn dfs(&mut self, idx: usize) {
        if self.hit_limit {
            return;
        }
        if idx == self.plan.len() {
            self.accept();
            return;
        }
        match self.plan[idx] {
            Step::Assign { gen, pool } => {
                for ci in 0..self.pools[pool].len() {
                    if self.hit_limit {
                        break;
                    }
                    self.images[gen] = Some(self.pools[pool][ci].clone());
                    self.dfs(idx + 1);
                }
                self.images[gen] = None;
            }
            Step::CheckDihedral { cycle, pos } => {
                if self.dihedral_ok(cycle, pos) {
                    self.dfs(idx + 1);
                }
            }
            Step::DetermineClosing { cycle } => {
                let s = self.sig.period_cycles()[cycle - 1].len();
                let e = self.img(self.pres.connecting(cycle));
                let c0 = self.img(self.pres.reflection(cycle, 0));
                let cs = e
                    .then(c0)
                    .and_then(|p| p.then(&e.inverse()))
                    .expect("uniform degree");
                if s == 0 {
                    if cs == *c0 {
                        self.dfs(idx + 1);
                    }
                } else {
                    let slot = self.pres.reflection(cycle, s);
                    self.images[slot] = Some(cs);
                    if self.dihedral_ok(cycle, s) {
                        self.dfs(idx + 1);
                    }
                    self.images[slot] = None;
                }
            }
            Step::DetermineLastConnecting { gen } => {
                let prefix = self.eval(&self.long_word[..self.long_word.len() - 1]);
                self.images[gen] = Some(prefix.inverse());
                self.dfs(idx + 1);
                self.images[gen] = None;
            }
            Step::DetermineLastElliptic { gen, order } => {
                let prefix = self.eval(&self.long_word[..self.long_word.len() - 1]);
                let forced = prefix.inverse();
                if u64::from(order) % forced.order() == 0 {
                    self.images[gen] = Some(forced);
                    self.dfs(idx + 1);
                    self.images[gen] = None;
                }
            }
            Step::CheckLong => {
                if self.eval(&self.long_word).is_identity() {
                    self.dfs(idx + 1);
                }
            }
        }
    }

    fn accept(&mut self) {
        let images: Vec<Permutation> = self
            .images
            .iter()
            .map(|o| o.clone().expect("full assignment"))
            .collect();
        match orbits(self.degree, &images) {
            Ok(o) if o.len() == 1 => {}
            _ => return,
        }
        let named: Vec<(String, Permutation)> = self
            .pres
            .generators()
            .iter()
            .zip(&images)
            .map(|(g, p)| (g.name.clone(), p.clone()))
            .collect();
        let action =
            CosetAction::new(self.sig, self.degree, &named).expect("searched action well-formed");
        if !action.validate().is_ok() {
            return;
        }
        let key = self.canonical_key(&images);
        if self.found.insert(key) {
            if let Some(l) = self.limit {
                if self.found.len() >= l {
                    self.hit_limit = true;
                }
            }
        }
    }

    /// Least conjugate of the image tuple over relabelings fixing point 1:
    /// two actions get the same key iff their point-1 stabilizers coincide.
    fn canonical_key(&self, images: &[Permutation]) -> Vec<Permutation> {
        let mut best: Option<Vec<Permutation>> = None;
        for rho in &self.relabelings {
            let rho_inv = rho.inverse();
            let cand: Vec<Permutation> = images
                .iter()
                .map(|p| {
                    rho_inv
                        .then(p)
                        .and_then(|q| q.then(rho))
                        .expect("uniform degree")
                })
                .collect();
            if best.as_ref().is_none_or(|b| &cand < b) {
                best = Some(cand);
            }
        }
        best.expect("at least the identity relabeling")
    }
}

/// All permutations of `{1..=degree}` in lexicographic order of their image
/// vectors (so the identity comes first).
fn all_perms(degree: usize) -> Vec<Permutation> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_images(cur.clone()).expect("built as a permutation"));
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        degree,
        &mut Vec::with_capacity(degree),
        &mut vec![false; degree],
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::OrientabilityKind;
    use crate::signature::{parse_signature, rational, Rational};
    use num_bigint::BigInt;

    fn sig(text: &str) -> NecSignature {
        parse_signature(text).unwrap()
    }

    fn signature_strings(subs: &[IndexTwoSubgroup]) -> Vec<String> {
        let mut v: Vec<String> = subs
            .iter()
            .map(|s| s.report.signature.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn seven_index_two_subgroups_of_the_468_reflection_triangle() {
        let subs = index_two_subgroups(&sig("(0;+;[];{(4,6,8)})")).unwrap();
        assert_eq!(subs.len(), 7);
        let mut expected: Vec<String> = [
            "(0; +; [4,6,8]; { })",
            "(0; +; [4]; {(3,4)})",
            "(0; +; [6]; {(2,4)})",
            "(0; +; [8]; {(2,3)})",
            "(0; +; [ ]; {(2,6,4,6)})",
            "(0; +; [ ]; {(2,8,3,8)})",
            "(0; +; [ ]; {(3,4,4,4)})",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(signature_strings(&subs), expected);

        // Exactly one kernel is Fuchsian: the one negating every reflection.
        let fuchsian: Vec<&IndexTwoSubgroup> = subs
            .iter()
            .filter(|s| s.report.orientability.kind == OrientabilityKind::Fuchsian)
            .collect();
        assert_eq!(fuchsian.len(), 1);
        assert_eq!(fuchsian[0].negated, vec!["c1.0", "c1.1", "c1.2", "c1.3"]);
        assert_eq!(fuchsian[0].report.signature, sig("(0;+;[4,6,8];{})"));
    }

    #[test]
    fn halved_cycle_instances() {
        let subs = index_two_subgroups(&sig("(0;+;[];{(3,4,6)})")).unwrap();
        assert_eq!(subs.len(), 3);
        let hit = subs
            .iter()
            .find(|s| s.negated == ["c1.0", "c1.1", "c1.3"])
            .unwrap();
        assert_eq!(hit.report.signature, sig("(0;+;[3];{(2,3)})"));

        let subs = index_two_subgroups(&sig("(0;+;[];{(4,3,6)})")).unwrap();
        let hit = subs.iter().find(|s| s.negated == ["c1.0", "c1.3"]).unwrap();
        assert_eq!(hit.report.signature, sig("(0;+;[];{(2,3,3,3)})"));
    }

    #[test]
    fn all_odd_triangle_has_only_the_fuchsian_kernel() {
        let subs = index_two_subgroups(&sig("(0;+;[];{(3,5,7)})")).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].report.signature, sig("(0;+;[3,5,7];{})"));
        assert_eq!(
            subs[0].report.orientability.kind,
            OrientabilityKind::Fuchsian
        );
    }

    #[test]
    fn odd_rotation_triangle_has_no_index_two_subgroups() {
        assert!(index_two_subgroups(&sig("(0;+;[3,3,5];{})"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn genus_two_surface_group_has_fifteen_index_two_subgroups() {
        let subs = index_two_subgroups(&sig("(2;+;[];{})")).unwrap();
        assert_eq!(subs.len(), 15);
        for s in &subs {
            assert_eq!(s.report.signature, sig("(3;+;[];{})"));
            assert_eq!(s.report.orientability.kind, OrientabilityKind::Fuchsian);
        }
    }

    #[test]
    fn glide_signs_decide_orientability_of_the_halves() {
        // Genus-2 nonorientable group with one elliptic period: three
        // index-2 subgroups; negating both glides gives the canonical
        // Fuchsian subgroup, negating one keeps a glide in the kernel.
        let base = sig("(2;-;[3];{})");
        let subs = index_two_subgroups(&base).unwrap();
        assert_eq!(subs.len(), 3);
        let mut orientable = 0;
        for s in &subs {
            if s.report.orientability.kind == OrientabilityKind::Fuchsian {
                orientable += 1;
                assert_eq!(s.negated, vec!["a1", "a2"]);
                assert_eq!(s.report.signature, sig("(1;+;[3,3];{})"));
                let f = base.canonical_fuchsian();
                assert_eq!(f.genus, 1);
                assert_eq!(f.periods, vec![3, 3]);
            } else {
                assert_eq!(s.report.signature, sig("(2;-;[3,3];{})"));
            }
        }
        assert_eq!(orientable, 1);
    }

    #[test]
    fn search_agrees_with_the_sign_enumeration_at_degree_two() {
        for text in [
            "(0;+;[];{(4,6,8)})",
            "(0;+;[];{(3,4,6)})",
            "(0;+;[2,3,7];{})",
            "(0;+;[];{(2,3),()})",
            "(2;-;[3];{})",
            "(1;-;[2];{()})",
            "(2;+;[];{})",
        ] {
            let s = sig(text);
            let searched = search_actions(&s, 2, None).unwrap();
            assert!(searched.complete);
            let analytic = index_two_subgroups(&s).unwrap();
            assert_eq!(searched.actions.len(), analytic.len(), "{text}");
            for (a, b) in searched.actions.iter().zip(&analytic) {
                assert_eq!(a.images(), b.action.images(), "{text}");
            }
        }
    }

    #[test]
    fn degree_one_search_finds_only_the_whole_group() {
        for text in ["(0;+;[];{(4,6,8)})", "(2;-;[3];{})", "(0;+;[2,3,7];{})"] {
            let s = sig(text);
            let out = search_actions(&s, 1, None).unwrap();
            assert!(out.complete);
            assert_eq!(out.actions.len(), 1);
            assert_eq!(out.actions[0].images(), CosetAction::trivial(&s).images());
        }
    }

    #[test]
    fn search_finds_the_degree_four_two_cycle_action() {
        let s = sig("(0;+;[];{(2,3),()})");
        let known = CosetAction::from_cycle_strings(
            &s,
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
        .unwrap();
        let out = search_actions(&s, 4, None).unwrap();
        assert!(out.complete);
        let search = Search::new(&s, 4, None);
        let key = search.canonical_key(known.images());
        let hit = out
            .actions
            .iter()
            .find(|a| a.images() == key.as_slice())
            .expect("the known action's class shows up");
        let report = subgroup_signature(hit, PipelineOptions::default()).unwrap();
        assert_eq!(report.signature, sig("(1;-;[];{(3),(),()})").normalize());
    }

    #[test]
    fn searched_actions_validate_and_multiply_areas() {
        for text in ["(0;+;[];{(4,6,8)})", "(2;-;[3];{})"] {
            let s = sig(text);
            for degree in 1..=3usize {
                let out = search_actions(&s, degree, None).unwrap();
                assert!(out.complete);
                assert!(!out.actions.is_empty(), "{text} degree {degree}");
                for action in &out.actions {
                    assert!(action.validate().is_ok());
                    let report = subgroup_signature(action, PipelineOptions::default()).unwrap();
                    assert_eq!(
                        report.signature.reduced_area(),
                        s.reduced_area() * Rational::from(BigInt::from(degree as i64)),
                        "{text} degree {degree}"
                    );
                }
            }
        }
    }

    #[test]
    fn search_keys_are_canonical_representatives() {
        let s = sig("(0;+;[];{(4,6,8)})");
        let out = search_actions(&s, 3, None).unwrap();
        let search = Search::new(&s, 3, None);
        for action in &out.actions {
            assert_eq!(search.canonical_key(action.images()), action.images());
        }
    }

    #[test]
    fn limit_truncates_and_clears_the_complete_flag() {
        let s = sig("(0;+;[];{(4,6,8)})");
        let full = search_actions(&s, 2, None).unwrap();
        assert!(full.complete);
        assert_eq!(full.actions.len(), 7);

        let cut = search_actions(&s, 2, Some(3)).unwrap();
        assert!(!cut.complete);
        assert_eq!(cut.actions.len(), 3);
        for (a, b) in cut.actions.iter().zip(&full.actions) {
            assert_eq!(a.images(), b.images());
        }
    }

    #[test]
    fn degree_bounds_are_enforced() {
        let s = sig("(0;+;[];{(4,6,8)})");
        assert!(matches!(
            search_actions(&s, 0, None),
            Err(SearchError::ZeroDegree)
        ));
        assert!(matches!(
            search_actions(&s, MAX_SEARCH_DEGREE + 1, None),
            Err(SearchError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn index_two_areas_double_the_input() {
        for text in ["(0;+;[];{(4,6,8)})", "(2;-;[3];{})", "(2;+;[];{})"] {
            let s = sig(text);
            for sub in index_two_subgroups(&s).unwrap() {
                assert_eq!(
                    sub.report.signature.reduced_area(),
                    s.reduced_area() * rational(2, 1),
                    "{text}"
                );
            }
        }
    }
}
