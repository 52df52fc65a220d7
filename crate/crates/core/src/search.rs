//! Breadth-first successive difference substitution.
//!
//! Each level replaces every frontier form `g` by its `n!` images
//! `g(B_σ X)`. Trivially positive images are dropped; a trivially negative
//! image ends the run with an exact witness point. An empty frontier proves
//! the input nonnegative on the orthant. Running out of depth or nodes is
//! reported as inconclusive, never as a proof.

use std::collections::HashSet;

use num_traits::Signed;
use rayon::prelude::*;
use thiserror::Error;

use crate::form::{Form, Point};
use crate::majorize::{self, MajorizationReport, MajorizeError};
use crate::rational::Rational;
use crate::subst::{self, build_b, Permutation, SubstError, SubstitutionTemplate};

pub const DEFAULT_MAX_DEPTH: usize = 6;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Subst(#[from] SubstError),
    #[error(transparent)]
    Majorize(#[from] MajorizeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_depth: usize,
    pub check_necessary: bool,
    pub dedup: bool,
    /// Upper bound on the number of expanded nodes.
    pub node_budget: u64,
    pub max_vars: usize,
    /// Test the input itself for trivial positivity/negativity before the
    /// first substitution. Off by default: the first round of images is
    /// always computed, so witnesses come from a substituted form.
    pub precheck_input: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_depth: DEFAULT_MAX_DEPTH,
            check_necessary: false,
            dedup: true,
            node_budget: DEFAULT_NODE_BUDGET,
            max_vars: subst::DEFAULT_MAX_VARS,
            precheck_input: false,
        }
    }
}

impl SearchOptions {
    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn with_check_necessary(mut self, on: bool) -> Self {
        self.check_necessary = on;
        self
    }

    pub fn with_dedup(mut self, on: bool) -> Self {
        self.dedup = on;
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_precheck_input(mut self, on: bool) -> Self {
        self.precheck_input = on;
        self
    }
}

/// A form reached by substituting `B_σ1 ⋯ B_σm`, kept content-normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    pub form: Form,
    pub path: Vec<Permutation>,
}

impl SearchNode {
    pub fn root(f: &Form) -> Self {
        SearchNode {
            form: f.content_normalize(),
            path: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Psd,
    NotPsd,
    Inconclusive,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Psd => "psd",
            VerdictKind::NotPsd => "not_psd",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub path: Vec<Permutation>,
    pub point: Point,
    /// `f(point)`, always negative.
    pub value: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub trivially_positive_pruned: u64,
    pub dedup_hits: u64,
    pub max_frontier_size: u64,
    pub budget_exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub depth_reached: usize,
    pub witness: Option<Witness>,
    pub necessary: Option<MajorizationReport>,
    pub stats: SearchStats,
}

/// `B_σ1 ⋯ B_σm · (1, ..., 1)`.
pub fn witness_point(path: &[Permutation], t: &SubstitutionTemplate) -> Result<Point, SubstError> {
    let mut v = Point::ones(t.n()).coords().to_vec();
    for sigma in path.iter().rev() {
        v = build_b(sigma, t)?.mul_vec(&v);
    }
    Ok(Point::new(v)?)
}

/// Forms already seen in a run, keyed by their content-normalized value.
#[derive(Debug, Default)]
pub struct SeenSet {
    forms: HashSet<Form>,
}

impl SeenSet {
    pub fn new() -> Self {
        SeenSet::default()
    }

    /// Returns false when the form was already present.
    pub fn insert(&mut self, form: &Form) -> bool {
        if self.forms.contains(form) {
            return false;
        }
        self.forms.insert(form.clone());
        true
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expansion {
    pub next: Vec<SearchNode>,
    pub pruned: u64,
    pub dedup_hits: u64,
    /// First trivially negative child in (parent, σ) order.
    pub negative: Option<SearchNode>,
}

/// Expands one level. Children are produced parent by parent with σ in
/// lexicographic order; expansion itself runs in parallel, the bookkeeping
/// afterwards is sequential in that order.
pub fn expand_frontier(
    frontier: &[SearchNode],
    t: &SubstitutionTemplate,
    seen: Option<&mut SeenSet>,
) -> Result<Expansion, SubstError> {
    expand_frontier_with_limit(frontier, t, seen, subst::DEFAULT_MAX_VARS)
}

fn expand_frontier_with_limit(
    frontier: &[SearchNode],
    t: &SubstitutionTemplate,
    mut seen: Option<&mut SeenSet>,
    max_vars: usize,
) -> Result<Expansion, SubstError> {
    let images: Vec<Vec<(Permutation, Form)>> = frontier
        .par_iter()
        .map(|node| subst::sds_set_with_limit(&node.form, t, max_vars))
        .collect::<Result<_, _>>()?;

    let mut out = Expansion::default();
    for (parent, children) in frontier.iter().zip(images) {
        for (sigma, image) in children {
            if image.is_trivially_positive() {
                out.pruned += 1;
                continue;
            }
            let form = image.content_normalize();
            if let Some(seen) = seen.as_deref_mut() {
                if !seen.insert(&form) {
                    out.dedup_hits += 1;
                    continue;
                }
            }
            let mut path = parent.path.clone();
            path.push(sigma);
            let node = SearchNode { form, path };
            if out.negative.is_none() && node.form.is_trivially_negative() {
                out.negative = Some(node.clone());
            }
            out.next.push(node);
        }
    }
    Ok(out)
}

fn not_psd(
    f: &Form,
    t: &SubstitutionTemplate,
    path: Vec<Permutation>,
    necessary: Option<MajorizationReport>,
    stats: SearchStats,
) -> Result<Verdict, SearchError> {
    let point = witness_point(&path, t)?;
    let value = f.evaluate(&point).map_err(SubstError::from)?;
    assert!(
        value.is_negative(),
        "trivially negative node must give a negative witness"
    );
    Ok(Verdict {
        kind: VerdictKind::NotPsd,
        depth_reached: path.len(),
        witness: Some(Witness { path, point, value }),
        necessary,
        stats,
    })
}

/// Runs successive difference substitution on `f` with template `t`.
pub fn ksds_run(
    f: &Form,
    t: &SubstitutionTemplate,
    opts: &SearchOptions,
) -> Result<Verdict, SearchError> {
    if f.n() != t.n() {
        return Err(SubstError::DimensionMismatch {
            expected: f.n(),
            found: t.n(),
        }
        .into());
    }
    subst::check_guard(f.n(), opts.max_vars)?;

    let necessary = if opts.check_necessary {
        Some(majorize::necessary_condition_with_limit(f, opts.max_vars)?)
    } else {
        None
    };
    let blocked = necessary.as_ref().is_some_and(|r| !r.holds);
    let mut stats = SearchStats::default();

    if opts.precheck_input && f.is_trivially_negative() {
        return not_psd(f, t, Vec::new(), necessary, stats);
    }
    if opts.precheck_input && f.is_trivially_positive() {
        return Ok(Verdict {
            kind: VerdictKind::Psd,
            depth_reached: 0,
            witness: None,
            necessary,
            stats,
        });
    }

    let root = SearchNode::root(f);
    let mut seen = opts.dedup.then(SeenSet::new);
    if let Some(seen) = seen.as_mut() {
        seen.insert(&root.form);
    }
    let mut frontier = vec![root];
    stats.max_frontier_size = 1;
    let mut depth = 0;

    while depth < opts.max_depth {
        if stats.nodes_expanded + frontier.len() as u64 > opts.node_budget {
            stats.budget_exhausted = true;
            break;
        }
        let level = expand_frontier_with_limit(&frontier, t, seen.as_mut(), opts.max_vars)?;
        stats.nodes_expanded += frontier.len() as u64;
        stats.trivially_positive_pruned += level.pruned;
        stats.dedup_hits += level.dedup_hits;
        stats.max_frontier_size = stats.max_frontier_size.max(level.next.len() as u64);
        depth += 1;

        if let Some(node) = level.negative {
            return not_psd(f, t, node.path, necessary, stats);
        }
        if level.next.is_empty() {
            // An empty frontier contradicts a violated necessary condition;
            // never turn that into a proof.
            let kind = if blocked {
                VerdictKind::Inconclusive
            } else {
                VerdictKind::Psd
            };
            return Ok(Verdict {
                kind,
                depth_reached: depth,
                witness: None,
                necessary,
                stats,
            });
        }
        frontier = level.next;
    }

    Ok(Verdict {
        kind: VerdictKind::Inconclusive,
        depth_reached: depth,
        witness: None,
        necessary,
        stats,
    })
}
