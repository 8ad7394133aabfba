//! Named, reproducible verification checks.
//!
//! Each check maps one bound or classification claim onto an exhaustive
//! bounded enumeration and produces a machine-readable report. Verdicts are
//! always relative to the bounds: a clean sweep is "verified-within-bounds",
//! never an unbounded claim. Counterexamples carry replayable placements.
//!
//! Reports are byte-deterministic: enumeration orders are fixed, violation
//! lists are capped in enumeration order, and map-valued fields are sorted.

use crate::ascent::{max_consecutive_ascents, AscentCount};
use crate::bounds::SearchBounds;
use crate::enumerate::CanonicalPlacements;
use crate::error::{Error, Result};
use crate::lattice::Placement;
use crate::mmc::critical_nodes;
use crate::moves::{classify_transition, find_true_ladders, has_ascent, MoveClass};
use crate::quotient::QuotientGraph;
use crate::rational::Rational;
use crate::speed::{analyze_full, cycle_witness, forward_only_max, GraphSpeeds};
use crate::sweep::{Prefix, Sweep};
use crate::textio::format_move_with_class;
use crate::trajectory::Trajectory;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Cap on recorded counterexamples per report; totals are always exact.
const VIOLATION_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "verified-within-bounds")]
    VerifiedWithinBounds,
    #[serde(rename = "refuted")]
    Refuted,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::VerifiedWithinBounds => f.write_str("verified-within-bounds"),
            Verdict::Refuted => f.write_str("refuted"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

/// One counterexample, replayable through trajectory validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub description: String,
    /// The offending placement, or the full offending trajectory.
    pub placements: Vec<Placement>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub bounds: SearchBounds,
    pub instances_examined: u64,
    pub violations: Vec<Violation>,
    /// Exact number of violations found (the list above is capped).
    pub violations_total: u64,
    pub verdict: Verdict,
    /// Named result values: counts, extrema, witnesses.
    pub values: BTreeMap<String, String>,
    /// Narrative findings that do not gate the verdict.
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(id: &str, bounds: &SearchBounds) -> CheckReport {
        CheckReport {
            check_id: id.to_string(),
            bounds: bounds.clone(),
            instances_examined: 0,
            violations: Vec::new(),
            violations_total: 0,
            verdict: Verdict::VerifiedWithinBounds,
            values: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn push_violation(&mut self, v: Violation) {
        self.violations_total += 1;
        if self.violations.len() < VIOLATION_CAP {
            self.violations.push(v);
        }
    }

    fn seal(mut self) -> CheckReport {
        if self.violations_total > 0 {
            self.verdict = Verdict::Refuted;
        }
        self
    }

    /// One human line: verdict, bounds, instance count.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} (within bounds: {}; {} instances, {} violations)",
            self.check_id, self.verdict, self.bounds, self.instances_examined, self.violations_total
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    Prop301,
    Prop302,
    Prop303,
    Lemma31,
    Thm32,
    Thm41,
    Thm51,
    Lemma61,
    Thm65,
    SolClassification,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Prop301,
        CheckId::Prop302,
        CheckId::Prop303,
        CheckId::Lemma31,
        CheckId::Thm32,
        CheckId::Thm41,
        CheckId::Thm51,
        CheckId::Lemma61,
        CheckId::Thm65,
        CheckId::SolClassification,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Prop301 => "prop_3_0_1",
            CheckId::Prop302 => "prop_3_0_2",
            CheckId::Prop303 => "prop_3_0_3",
            CheckId::Lemma31 => "lemma_3_1",
            CheckId::Thm32 => "thm_3_2",
            CheckId::Thm41 => "thm_4_1",
            CheckId::Thm51 => "thm_5_1",
            CheckId::Lemma61 => "lemma_6_1",
            CheckId::Thm65 => "thm_6_5",
            CheckId::SolClassification => "sol_classification",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.as_str() == s)
    }

    pub fn description(&self) -> &'static str {
        match self {
            CheckId::Prop301 => "a placement with a true ladder has even width",
            CheckId::Prop302 => "an ascent is available iff a true ladder exists",
            CheckId::Prop303 => "pushes and retreats between two ascents come in even counts",
            CheckId::Lemma31 => "speed above 2/3 iff positive weight, on translate trajectories",
            CheckId::Thm32 => "movesets without consecutive ascents have nonpositive weight",
            CheckId::Thm41 => "1, 2 or 4 pieces beat 2/3 only through a speed-of-light pattern",
            CheckId::Thm51 => "3 pieces never exceed speed 2/3",
            CheckId::Lemma61 => "5 or more pieces never chain 4 consecutive ascents",
            CheckId::Thm65 => "5 pieces never exceed speed 2/3",
            CheckId::SolClassification => "exactly atom, frog and serpent classes reach speed 1",
        }
    }

    /// The sweep bounds each check runs under by default.
    pub fn default_bounds(&self) -> SearchBounds {
        match self {
            CheckId::Prop301 | CheckId::Prop302 => SearchBounds::square(2, 5),
            CheckId::Prop303 | CheckId::Lemma31 | CheckId::Thm32 => {
                SearchBounds::square(2, 5).with_max_depth(6)
            }
            CheckId::Thm41 => SearchBounds::square(2, 5),
            CheckId::Thm51 => SearchBounds::square(2, 6),
            CheckId::Lemma61 => SearchBounds::square(2, 7),
            CheckId::Thm65 => SearchBounds::square(2, 6),
            CheckId::SolClassification => SearchBounds::square(2, 5),
        }
    }

    /// Piece counts swept by default.
    pub fn default_pieces(&self) -> Vec<usize> {
        match self {
            CheckId::Prop301 => vec![1, 2, 3, 4, 5],
            CheckId::Prop302 => vec![2, 3, 4, 5],
            CheckId::Prop303 | CheckId::Lemma31 | CheckId::Thm32 => vec![1, 2, 3, 4],
            CheckId::Thm41 => vec![1, 2, 4],
            CheckId::Thm51 => vec![3],
            CheckId::Lemma61 => vec![5, 6],
            CheckId::Thm65 => vec![5],
            CheckId::SolClassification => vec![1, 2, 3, 4],
        }
    }
}

/// Knobs shared by every check runner.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub bounds: Option<SearchBounds>,
    pub pieces: Option<Vec<usize>>,
    pub jobs: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            bounds: None,
            pieces: None,
            jobs: 1,
        }
    }
}

impl CheckConfig {
    fn bounds_for(&self, id: CheckId) -> SearchBounds {
        self.bounds.clone().unwrap_or_else(|| id.default_bounds())
    }

    fn pieces_for(&self, id: CheckId) -> Vec<usize> {
        self.pieces.clone().unwrap_or_else(|| id.default_pieces())
    }
}

/// Run one named check.
pub fn run_check(id: CheckId, cfg: &CheckConfig) -> CheckReport {
    match id {
        CheckId::Prop301 => check_prop_3_0_1(cfg),
        CheckId::Prop302 => check_prop_3_0_2(cfg),
        CheckId::Prop303 => trajectory_checks(cfg).0,
        CheckId::Thm32 => trajectory_checks(cfg).1,
        CheckId::Lemma31 => trajectory_checks(cfg).2,
        CheckId::Thm41 => check_thm_4_1(cfg),
        CheckId::Thm51 => check_thm_5_1(cfg),
        CheckId::Lemma61 => check_lemma_6_1(cfg),
        CheckId::Thm65 => check_thm_6_5(cfg),
        CheckId::SolClassification => check_sol_classification(cfg),
    }
}

// ---------------------------------------------------------------------------
// State sweeps: ladders, widths, ascents.
// ---------------------------------------------------------------------------

/// True ladder present implies even width, over all canonical placements.
pub fn check_prop_3_0_1(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Prop301);
    let sizes = bounds.bbox.sizes();
    let mut report = CheckReport::new(CheckId::Prop301.as_str(), &bounds);
    for p in cfg.pieces_for(CheckId::Prop301) {
        for x in CanonicalPlacements::new(p, &sizes) {
            if !bounds.admits_width(&x) {
                continue;
            }
            report.instances_examined += 1;
            if !find_true_ladders(&x).is_empty() && x.width() % 2 != 0 {
                report.push_violation(Violation {
                    description: format!("true ladder on odd width {}", x.width()),
                    placements: vec![x.clone()],
                });
            }
        }
    }
    report.seal()
}

/// Ascent availability (through move classification) coincides with true
/// ladder existence, over the same enumeration.
pub fn check_prop_3_0_2(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Prop302);
    let sizes = bounds.bbox.sizes();
    let mut report = CheckReport::new(CheckId::Prop302.as_str(), &bounds);
    for p in cfg.pieces_for(CheckId::Prop302) {
        if p < 2 {
            continue;
        }
        for x in CanonicalPlacements::new(p, &sizes) {
            if !bounds.admits_width(&x) {
                continue;
            }
            report.instances_examined += 1;
            let by_moves = has_ascent(&x);
            let by_ladders = !find_true_ladders(&x).is_empty();
            if by_moves != by_ladders {
                report.push_violation(Violation {
                    description: format!(
                        "ascent-by-classification {by_moves} vs true-ladder {by_ladders}"
                    ),
                    placements: vec![x.clone()],
                });
            }
        }
    }
    report.seal()
}

// ---------------------------------------------------------------------------
// Trajectory sweeps: Prop 3.0.3, Theorem 3.2, Lemma 3.1.
// ---------------------------------------------------------------------------

struct SweepShard {
    prefixes: u64,
    p303: Vec<Violation>,
    p303_total: u64,
    t32: Vec<Violation>,
    t32_total: u64,
    l31_checked: u64,
    l31: Vec<Violation>,
    l31_total: u64,
    char_mismatch: u64,
    char_notes: Vec<String>,
}

impl SweepShard {
    fn new() -> SweepShard {
        SweepShard {
            prefixes: 0,
            p303: Vec::new(),
            p303_total: 0,
            t32: Vec::new(),
            t32_total: 0,
            l31_checked: 0,
            l31: Vec::new(),
            l31_total: 0,
            char_mismatch: 0,
            char_notes: Vec::new(),
        }
    }
}

fn replay_steps(sweep: &Sweep, start: &Placement, steps: &[(u8, u8)]) -> Vec<Placement> {
    let mut cells = sweep.cells_of(start);
    let mut out = vec![start.clone()];
    for &(f, t) in steps {
        let at = cells.iter().position(|&c| c == f).unwrap();
        cells.remove(at);
        let ins = cells.partition_point(|&c| c < t);
        cells.insert(ins, t);
        out.push(sweep.placement_of(&cells));
    }
    out
}

fn classes_str(classes: &[MoveClass]) -> String {
    classes
        .iter()
        .map(|c| c.abbrev())
        .collect::<Vec<_>>()
        .join(",")
}

fn sweep_one_start(sweep: &Sweep, start: &Placement, shard: &mut SweepShard) {
    sweep.run(start, &mut |pfx: &Prefix| {
        shard.prefixes += 1;
        let depth = pfx.depth;
        let classes = pfx.classes;

        // Prop 3.0.3: when an ascent closes a gap, the pushes and retreats
        // inside it must come in an even count.
        if classes[depth - 1] == MoveClass::Ascent && depth >= 2 {
            if let Some(prev) = classes[..depth - 1]
                .iter()
                .rposition(|c| *c == MoveClass::Ascent)
            {
                let gap = classes[prev + 1..depth - 1]
                    .iter()
                    .filter(|c| {
                        matches!(
                            c,
                            MoveClass::FrontPush
                                | MoveClass::BackPush
                                | MoveClass::FrontRetreat
                                | MoveClass::BackRetreat
                        )
                    })
                    .count();
                if gap % 2 != 0 {
                    shard.p303_total += 1;
                    if shard.p303.len() < VIOLATION_CAP {
                        shard.p303.push(Violation {
                            description: format!(
                                "odd between-ascent gap count {gap} in [{}]",
                                classes_str(classes)
                            ),
                            placements: replay_steps(sweep, start, pfx.steps),
                        });
                    }
                }
            }
        }

        // Theorem 3.2: a moveset (the endpoints are translates) without
        // consecutive ascents and without ascents at both ends has
        // nonpositive weight.
        if pfx.translation.is_some()
            && !pfx.has_double_ascent
            && !(classes[0] == MoveClass::Ascent && classes[depth - 1] == MoveClass::Ascent)
            && pfx.weight2 > 0
        {
            shard.t32_total += 1;
            if shard.t32.len() < VIOLATION_CAP {
                shard.t32.push(Violation {
                    description: format!(
                        "weight {}/2 > 0 for qualifying moveset [{}]",
                        pfx.weight2,
                        classes_str(classes)
                    ),
                    placements: replay_steps(sweep, start, pfx.steps),
                });
            }
        }

        // Lemma 3.1 on translate endpoints with componentwise nonnegative
        // translation: speed above 2/3 iff positive weight.
        if let Some((dx, dy)) = pfx.translation {
            if dx >= 0 && dy >= 0 {
                shard.l31_checked += 1;
                let speed_above = 3 * (dx + dy) > 2 * depth as i64;
                let weight_above = pfx.weight2 > 0;
                if speed_above != weight_above {
                    shard.l31_total += 1;
                    if shard.l31.len() < VIOLATION_CAP {
                        shard.l31.push(Violation {
                            description: format!(
                                "speed {}/{depth} vs weight {}/2 disagree on the 2/3 line \
                                 for [{}]",
                                dx + dy,
                                pfx.weight2,
                                classes_str(classes)
                            ),
                            placements: replay_steps(sweep, start, pfx.steps),
                        });
                    }
                }
                // The border-progress displacement characterization:
                // A - RA + (FP - FR + BP - BR)/2, doubled to stay integral.
                let mut char2 = 0i64;
                for c in classes {
                    char2 += match c {
                        MoveClass::Ascent => 2,
                        MoveClass::ReverseAscent => -2,
                        MoveClass::FrontPush | MoveClass::BackPush => 1,
                        MoveClass::FrontRetreat | MoveClass::BackRetreat => -1,
                        MoveClass::DeadMove => 0,
                    };
                }
                if char2 != 2 * (dx + dy) {
                    shard.char_mismatch += 1;
                    if shard.char_notes.len() < VIOLATION_CAP {
                        shard.char_notes.push(format!(
                            "characterized displacement {char2}/2 vs centroid {} on [{}] from {:?}",
                            dx + dy,
                            classes_str(classes),
                            start
                        ));
                    }
                }
            }
        }
    });
}

/// Run the shared bounded-trajectory sweep once and derive the three
/// trajectory-level reports: Prop 3.0.3, Theorem 3.2, Lemma 3.1.
pub fn trajectory_checks(cfg: &CheckConfig) -> (CheckReport, CheckReport, CheckReport) {
    let bounds = cfg.bounds_for(CheckId::Prop303);
    let sizes = bounds.bbox.sizes();
    assert_eq!(sizes.len(), 2, "trajectory sweeps are two-dimensional");
    let max_len = bounds.max_depth.unwrap_or(6);
    let sweep = Sweep::new(sizes[0], sizes[1], max_len);

    let mut starts: Vec<Placement> = Vec::new();
    for p in cfg.pieces_for(CheckId::Prop303) {
        for x in CanonicalPlacements::new(p, &sizes) {
            if bounds.admits_width(&x) {
                starts.push(x);
            }
        }
    }

    let jobs = cfg.jobs.max(1).min(starts.len().max(1));
    let shards: Vec<SweepShard> = if jobs <= 1 {
        let mut shard = SweepShard::new();
        for s in &starts {
            sweep_one_start(&sweep, s, &mut shard);
        }
        vec![shard]
    } else {
        // Contiguous chunks keep the merged order identical to a single
        // worker's enumeration order.
        let chunk = starts.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let sweep = &sweep;
            let handles: Vec<_> = starts
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        let mut shard = SweepShard::new();
                        for s in part {
                            sweep_one_start(sweep, s, &mut shard);
                        }
                        shard
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut p303 = CheckReport::new(CheckId::Prop303.as_str(), &bounds);
    let mut t32 = CheckReport::new(CheckId::Thm32.as_str(), &bounds);
    let mut l31 = CheckReport::new(CheckId::Lemma31.as_str(), &bounds);
    let mut char_mismatch = 0u64;
    let mut char_notes: Vec<String> = Vec::new();
    let mut l31_checked = 0u64;
    for shard in shards {
        for r in [&mut p303, &mut t32, &mut l31] {
            r.instances_examined += shard.prefixes;
        }
        // Shards cap their recorded lists but count totals exactly.
        let recorded = shard.p303.len() as u64;
        for v in shard.p303 {
            p303.push_violation(v);
        }
        p303.violations_total += shard.p303_total - recorded;
        let recorded = shard.t32.len() as u64;
        for v in shard.t32 {
            t32.push_violation(v);
        }
        t32.violations_total += shard.t32_total - recorded;
        let recorded = shard.l31.len() as u64;
        for v in shard.l31 {
            l31.push_violation(v);
        }
        l31.violations_total += shard.l31_total - recorded;
        char_mismatch += shard.char_mismatch;
        for n in shard.char_notes {
            if char_notes.len() < VIOLATION_CAP {
                char_notes.push(n);
            }
        }
        l31_checked += shard.l31_checked;
    }

    l31.values
        .insert("translate_trajectories".into(), l31_checked.to_string());
    l31.values.insert(
        "displacement_characterization_mismatches".into(),
        char_mismatch.to_string(),
    );
    if char_mismatch > 0 {
        l31.notes.push(format!(
            "the border-progress displacement characterization disagreed with centroid \
             displacement {char_mismatch} times; this is reported, not gated"
        ));
        l31.notes.extend(char_notes);
    }
    (p303.seal(), t32.seal(), l31.seal())
}

// ---------------------------------------------------------------------------
// Speed checks on the quotient graph.
// ---------------------------------------------------------------------------

fn two_thirds() -> Rational {
    Rational::new(2, 3)
}

/// Format a placement compactly for report values.
fn placement_str(x: &Placement) -> String {
    format!("{x:?}")
}

/// Extract, for one component representative, the best cycle over sign
/// vectors as (value, witness trajectory, classes).
fn component_witness(
    speeds: &GraphSpeeds,
    component_nodes: &[usize],
) -> Option<(Rational, Vec<Placement>, Vec<MoveClass>, Vec<String>)> {
    let rep = component_nodes[0];
    let mut best: Option<(usize, Rational)> = None;
    for (i, (_, how)) in speeds.per_sigma.iter().enumerate() {
        if let Some(eta) = how.eta[rep] {
            if best.map_or(true, |(_, b)| eta > b) {
                best = Some((i, eta));
            }
        }
    }
    let (sigma_idx, mean) = best?;
    let how = &speeds.per_sigma[sigma_idx].1;
    // Walk the converged policy from the representative to its cycle; the
    // cycle's mean equals the component maximum.
    let g = &speeds.graph;
    let mut seen = vec![false; g.node_count()];
    let mut u = rep;
    while !seen[u] {
        seen[u] = true;
        u = g.dst[how.policy[u].expect("alive in a cyclic component") as usize] as usize;
    }
    let cycle_start = u;
    let mut nodes = vec![cycle_start as u32];
    let mut edges = vec![how.policy[cycle_start].unwrap()];
    let mut v = g.dst[how.policy[cycle_start].unwrap() as usize] as usize;
    while v != cycle_start {
        nodes.push(v as u32);
        edges.push(how.policy[v].unwrap());
        v = g.dst[how.policy[v].unwrap() as usize] as usize;
    }
    let cyc = crate::mmc::MeanCycle { mean, nodes, edges };
    let (start, moves) = cycle_witness(g, &cyc);
    let mut placements = vec![start.clone()];
    for m in &moves {
        placements.push(
            crate::moves::apply_move(placements.last().unwrap(), m, None)
                .expect("witness replays"),
        );
    }
    let classes: Vec<MoveClass> = (0..moves.len())
        .map(|i| classify_transition(&placements[i], &placements[i + 1]))
        .collect();
    let texts: Vec<String> = moves
        .iter()
        .zip(&classes)
        .map(|(m, c)| format_move_with_class(m, *c))
        .collect();
    let value = mean * Rational::new(1, g.p as i128);
    Some((value, placements, classes, texts))
}

/// Whether a witness cycle contains a speed-of-light pattern step for the
/// given piece count: any shift loop for the atom, any jump for the frog,
/// or two cyclically consecutive ascents for the serpent.
fn witness_tainted(p: usize, placements: &[Placement], classes: &[MoveClass]) -> bool {
    match p {
        1 => !classes.is_empty(),
        2 => (0..classes.len()).any(|i| {
            crate::moves::moved_piece(&placements[i], &placements[i + 1])
                .map(|(a, b)| {
                    let d: i64 = a
                        .coords
                        .iter()
                        .zip(&b.coords)
                        .map(|(x, y)| (x - y).abs())
                        .sum();
                    d >= 2
                })
                .unwrap_or(false)
        }),
        4 => {
            let m = classes.len();
            m >= 2
                && (0..m).any(|i| {
                    classes[i] == MoveClass::Ascent && classes[(i + 1) % m] == MoveClass::Ascent
                })
        }
        _ => false,
    }
}

/// Theorem 4.1 operationalized: for 1, 2 and 4 pieces, every component whose
/// bounded speed exceeds 2/3 must expose a speed-of-light pattern step in its
/// witness cycle.
pub fn check_thm_4_1(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Thm41);
    let mut report = CheckReport::new(CheckId::Thm41.as_str(), &bounds);
    report.notes.push(
        "the speed-of-light taint predicate (atom shift, frog jump, serpent double ascent) \
         is an operational reading of the informal non-speed-of-light trajectory notion"
            .to_string(),
    );
    for p in cfg.pieces_for(CheckId::Thm41) {
        let speeds = analyze_full(p, &bounds);
        let comps = speeds.graph.components();
        let ncomp = comps.iter().map(|&c| c + 1).max().unwrap_or(0) as usize;
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for (u, &c) in comps.iter().enumerate() {
            members[c as usize].push(u);
        }
        report.instances_examined += speeds.graph.node_count() as u64;
        let mut fast = 0u64;
        for comp in &members {
            let Some((value, placements, classes, _texts)) = component_witness(&speeds, comp)
            else {
                continue;
            };
            if value > two_thirds() {
                fast += 1;
                if !witness_tainted(p, &placements, &classes) {
                    report.push_violation(Violation {
                        description: format!(
                            "p={p}: component of {} reaches speed {} without a speed-of-light \
                             pattern step",
                            placement_str(&speeds.graph.nodes[comp[0]]),
                            value
                        ),
                        placements,
                    });
                }
            }
        }
        report
            .values
            .insert(format!("p{p}_components_above_two_thirds"), fast.to_string());
        report.values.insert(
            format!("p{p}_max_speed"),
            speeds.max_speed().to_string(),
        );
    }
    report.seal()
}

/// Theorem 5.1: three pieces admit no two consecutive ascents, and their
/// bounded configuration speed tops out at exactly 2/3.
pub fn check_thm_5_1(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Thm51);
    let mut report = CheckReport::new(CheckId::Thm51.as_str(), &bounds);
    let p = 3;

    let sweep = max_consecutive_ascents(p, &bounds, 4);
    report.instances_examined += sweep.starts_examined;
    match sweep.result {
        AscentCount::Exact(k) if k <= 1 => {
            report
                .values
                .insert("max_consecutive_ascents".into(), k.to_string());
        }
        other => {
            let k = match other {
                AscentCount::Exact(k) => k.to_string(),
                AscentCount::AtLeast(k) => format!(">= {k}"),
            };
            report.values.insert("max_consecutive_ascents".into(), k);
            let place = sweep.best_start.clone().unwrap();
            report.push_violation(Violation {
                description: "three pieces performed two consecutive ascents".to_string(),
                placements: vec![place],
            });
        }
    }

    let speeds = analyze_full(p, &bounds);
    report.instances_examined += speeds.graph.node_count() as u64;
    let max = speeds.max_speed();
    report.values.insert("max_speed".into(), max.to_string());
    record_forward_only(&mut report, &speeds, max);
    if max != two_thirds() {
        let desc = if max > two_thirds() {
            format!("a 3-piece configuration reached bounded speed {max} > 2/3")
        } else {
            format!("no 3-piece configuration attained 2/3 (best {max})")
        };
        let placements = best_witness_placements(&speeds);
        report.push_violation(Violation {
            description: desc,
            placements,
        });
    } else {
        let snake = Placement::from_xy(&[(0, 0), (1, 1), (2, 2)]);
        let idx = node_index_of(&speeds.graph, &snake).expect("snake fits the box");
        report.values.insert(
            "snake_speed".into(),
            speeds.node_speed(idx).to_string(),
        );
    }
    report.seal()
}

/// Lemma 6.1: for five and six pieces no placement chains four consecutive
/// ascents; the attained maximum is recorded.
pub fn check_lemma_6_1(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Lemma61);
    let mut report = CheckReport::new(CheckId::Lemma61.as_str(), &bounds);
    for p in cfg.pieces_for(CheckId::Lemma61) {
        let sweep = max_consecutive_ascents(p, &bounds, 10);
        report.instances_examined += sweep.starts_examined;
        let attained = match sweep.result {
            AscentCount::Exact(k) => {
                report
                    .values
                    .insert(format!("p{p}_max_consecutive_ascents"), k.to_string());
                k
            }
            AscentCount::AtLeast(k) => {
                report
                    .values
                    .insert(format!("p{p}_max_consecutive_ascents"), format!(">= {k}"));
                k
            }
        };
        if attained >= 4 {
            report.push_violation(Violation {
                description: format!("p={p}: {attained} consecutive ascents found"),
                placements: sweep.best_start.clone().into_iter().collect(),
            });
        }
        if let Some(best) = sweep.best_start {
            report
                .values
                .insert(format!("p{p}_best_start"), placement_str(&best));
        }
    }
    report.seal()
}

/// Theorem 6.5 at desk scale: the bounded configuration speed of five pieces
/// is at most 2/3 everywhere and exactly 2/3 somewhere (the snake).
pub fn check_thm_6_5(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::Thm65);
    let mut report = CheckReport::new(CheckId::Thm65.as_str(), &bounds);
    let p = 5;
    let speeds = analyze_full(p, &bounds);
    report.instances_examined += speeds.graph.node_count() as u64;
    let max = speeds.max_speed();
    report.values.insert("max_speed".into(), max.to_string());
    record_forward_only(&mut report, &speeds, max);

    if max != two_thirds() {
        report.push_violation(Violation {
            description: format!("bounded 5-piece maximum speed is {max}, not 2/3"),
            placements: best_witness_placements(&speeds),
        });
    } else {
        let snake = Placement::from_xy(&[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)]);
        if let Some(idx) = node_index_of(&speeds.graph, &snake) {
            report
                .values
                .insert("snake_speed".into(), speeds.node_speed(idx).to_string());
        }
        if let Some((sigma_idx, mean)) = speeds.global_best() {
            let (sigma, how) = &speeds.per_sigma[sigma_idx];
            let cyc = how.best.as_ref().unwrap();
            let (start, moves) = cycle_witness(&speeds.graph, cyc);
            let mut placements = vec![start.clone()];
            for m in &moves {
                placements
                    .push(crate::moves::apply_move(placements.last().unwrap(), m, None).unwrap());
            }
            let texts: Vec<String> = (0..moves.len())
                .map(|i| {
                    format_move_with_class(
                        &moves[i],
                        classify_transition(&placements[i], &placements[i + 1]),
                    )
                })
                .collect();
            report
                .values
                .insert("witness_start".into(), placement_str(&start));
            report.values.insert("witness_moves".into(), texts.join("; "));
            report.values.insert(
                "witness_sigma".into(),
                format!("({},{})", sigma[0], sigma[1]),
            );
            report
                .values
                .insert("witness_mean".into(), mean.to_string());
        }
    }
    report.seal()
}

fn record_forward_only(report: &mut CheckReport, speeds: &GraphSpeeds, full_max: Rational) {
    let restricted = forward_only_max(&speeds.graph).unwrap_or(Rational::ZERO);
    report
        .values
        .insert("forward_only_max_speed".into(), restricted.to_string());
    if restricted != full_max {
        report.notes.push(format!(
            "restricting jumps to forward-only hop chains changes the bounded maximum \
             from {full_max} to {restricted}"
        ));
    } else {
        report.notes.push(
            "restricting jumps to forward-only hop chains does not change the bounded maximum"
                .to_string(),
        );
    }
}

fn best_witness_placements(speeds: &GraphSpeeds) -> Vec<Placement> {
    match speeds.global_best() {
        Some((idx, _)) => {
            let how = &speeds.per_sigma[idx].1;
            let cyc = how.best.as_ref().unwrap();
            let (start, moves) = cycle_witness(&speeds.graph, cyc);
            let mut placements = vec![start];
            for m in &moves {
                placements
                    .push(crate::moves::apply_move(placements.last().unwrap(), m, None).unwrap());
            }
            placements
        }
        None => Vec::new(),
    }
}

fn node_index_of(graph: &QuotientGraph, canonical: &Placement) -> Option<usize> {
    graph.nodes.iter().position(|x| x == canonical)
}

/// The canonical forms of the three speed-of-light families within the
/// signed-move engine: the atom, both frogs, and all four serpents.
pub fn expected_speed_of_light_classes() -> Vec<(usize, Placement)> {
    vec![
        (1, Placement::from_xy(&[(0, 0)])),
        (2, Placement::from_xy(&[(0, 0), (1, 0)])),
        (2, Placement::from_xy(&[(0, 0), (0, 1)])),
        (4, Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)])),
        (4, Placement::from_xy(&[(0, 0), (0, 1), (1, 1), (1, 2)])),
        (4, Placement::from_xy(&[(0, 1), (1, 0), (1, 1), (2, 0)])),
        (4, Placement::from_xy(&[(0, 1), (0, 2), (1, 0), (1, 1)])),
    ]
}

/// The speed-of-light classification: among all configurations of up to four
/// pieces, exactly the atom, the frogs and the serpents lie on a bounded
/// speed-1 cycle.
pub fn check_sol_classification(cfg: &CheckConfig) -> CheckReport {
    let bounds = cfg.bounds_for(CheckId::SolClassification);
    let mut report = CheckReport::new(CheckId::SolClassification.as_str(), &bounds);
    let mut found: Vec<(usize, Placement)> = Vec::new();
    for p in cfg.pieces_for(CheckId::SolClassification) {
        let speeds = analyze_full(p, &bounds);
        report.instances_examined += speeds.graph.node_count() as u64;
        let light = Rational::from_int(p as i128);
        for (_, how) in &speeds.per_sigma {
            let Some(mean) = how.max_mean() else { continue };
            if mean > light {
                report.push_violation(Violation {
                    description: format!(
                        "p={p}: bounded speed {} exceeds 1",
                        mean * Rational::new(1, p as i128)
                    ),
                    placements: best_witness_placements(&speeds),
                });
            }
        }
        // Nodes on speed-1 cycles, unioned over sign vectors.
        let mut on_light = vec![false; speeds.graph.node_count()];
        for (sigma, how) in &speeds.per_sigma {
            if how.max_mean() != Some(light) {
                continue;
            }
            let weighted = speeds.graph.weighted(sigma);
            let crit = critical_nodes(&weighted, how, light);
            for (u, c) in crit.iter().enumerate() {
                if *c {
                    on_light[u] = true;
                }
            }
        }
        for (u, lit) in on_light.iter().enumerate() {
            if *lit {
                found.push((p, speeds.graph.nodes[u].clone()));
            }
        }
    }
    found.sort();
    let mut expected = expected_speed_of_light_classes();
    expected.sort();
    report
        .values
        .insert("speed_one_classes".into(), found.len().to_string());
    for (p, x) in &found {
        if !expected.contains(&(*p, x.clone())) {
            report.push_violation(Violation {
                description: format!("unexpected speed-1 class with {p} pieces"),
                placements: vec![x.clone()],
            });
        }
    }
    for (p, x) in &expected {
        if !found.contains(&(*p, x.clone())) {
            report.push_violation(Violation {
                description: format!(
                    "expected speed-1 class with {p} pieces was not found: {}",
                    placement_str(x)
                ),
                placements: vec![x.clone()],
            });
        }
    }
    report.seal()
}

/// Validate that every violation's placement list replays as a legal
/// trajectory (single placements are vacuously fine).
pub fn violations_replay(report: &CheckReport) -> Result<()> {
    for v in &report.violations {
        if v.placements.len() >= 2 {
            Trajectory::validate(v.placements.clone(), None).map_err(|e| match e {
                Error::InvalidTrajectory { step, reason } => Error::InvalidTrajectory {
                    step,
                    reason: format!("{}: {reason}", report.check_id),
                },
                other => other,
            })?;
        }
    }
    Ok(())
}

/// Atom/frog/serpent/snake seed placements by well-known name.
pub fn named_seed(name: &str) -> Option<Placement> {
    match name {
        "atom" => Some(Placement::from_xy(&[(0, 0)])),
        "frog" => Some(Placement::from_xy(&[(0, 0), (1, 0)])),
        "serpent" => Some(Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)])),
        "snake3" => Some(Placement::from_xy(&[(0, 0), (1, 1), (2, 2)])),
        "snake4" => Some(Placement::from_xy(&[(0, 0), (1, 1), (2, 2), (3, 3)])),
        "snake5" => Some(Placement::from_xy(&[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)])),
        "square" => Some(Placement::from_xy(&[(0, 0), (1, 0), (0, 1), (1, 1)])),
        _ => None,
    }
}
