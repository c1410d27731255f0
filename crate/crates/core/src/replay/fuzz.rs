//! Seeded random drag sequences with an invariant audit after every event.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64(seed)`. From it:
//! `unit()` is `(next_u64 >> 11) · 2⁻⁵³` and `below(n)` is `next_u64 mod n`.
//! Each gesture draws, in this order:
//!
//! 1. a target: when `below(4) ≠ 0`, element `below(len)` in z-order
//!    (bottom first), node `below(cover len)` of it, and the node's
//!    interior point jittered by `2·unit() − 1` on each axis; otherwise
//!    `(800·unit(), 600·unit())`;
//! 2. the button: right when `below(5) = 0`, else left;
//! 3. `1 + below(8)` moves, each by `(80·unit() − 40, 80·unit() − 40)`;
//!
//! followed by a release. Every pointer event counts as one step.

use std::fmt::Write as _;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use super::catalog;
use super::run::RunError;
use super::trace::TraceLine;
use crate::geometry::Point;
use crate::mover::PointerButton;
use crate::scene::Scene;

/// Allowed change of pairwise distances between rigid points during a rotation.
pub const RIGIDITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub scene: String,
    pub seed: u64,
    pub steps: usize,
    pub events: usize,
    pub catches: usize,
    pub repaints: usize,
    /// Rotation moves whose rigidity was checked.
    pub rigid_checks: usize,
    /// First invariant violation, if any; fuzzing stops there.
    pub violation: Option<String>,
    /// The generated events, replayable with [`super::run_trace`].
    pub trace: Vec<TraceLine>,
    pub layout: String,
}

impl FuzzReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "fuzz scene {} seed {} steps {}", self.scene, self.seed, self.steps);
        let _ = writeln!(
            out,
            "events {} catches {} repaints {} rigidity-checks {}",
            self.events, self.catches, self.repaints, self.rigid_checks
        );
        match &self.violation {
            None => out.push_str("violations 0\n"),
            Some(v) => {
                let _ = writeln!(out, "violations 1\n{v}");
            }
        }
        out.push_str("final layout\n");
        out.push_str(&self.layout);
        out
    }
}

struct Gen(ChaCha8Rng);

impl Gen {
    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }
}

pub fn fuzz(scene: &str, steps: usize, seed: u64) -> Result<FuzzReport, RunError> {
    let mut s = catalog::build(scene).ok_or_else(|| RunError::UnknownScene(scene.to_owned()))?;
    Ok(fuzz_scene(&mut s, steps, seed))
}

fn pairwise(points: &[Point<f64>]) -> Vec<f64> {
    let mut out = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            out.push(a.distance(*b));
        }
    }
    out
}

struct Driver<'a> {
    scene: &'a mut Scene,
    report: FuzzReport,
    /// Pairwise distances of the rigid points of the element being rotated.
    rigid: Option<Vec<f64>>,
}

impl Driver<'_> {
    fn rigid_points(&self) -> Vec<Point<f64>> {
        self.scene
            .mover()
            .caught_id()
            .and_then(|id| self.scene.mover().get(id))
            .map(|e| e.rigid_points())
            .unwrap_or_default()
    }

    /// Applies one event and audits. Returns false once a violation is found.
    fn step(&mut self, line: TraceLine) -> bool {
        self.report.events += 1;
        match &line {
            TraceLine::Down { x, y, button } => {
                if self.scene.pointer_down(Point::new(*x, *y), *button) {
                    self.report.catches += 1;
                    self.rigid = (*button == PointerButton::Right).then(|| pairwise(&self.rigid_points()));
                }
            }
            TraceLine::Move { x, y } => {
                if self.scene.pointer_move(Point::new(*x, *y)) {
                    self.report.repaints += 1;
                }
            }
            TraceLine::Up => {
                self.scene.pointer_up();
                self.rigid = None;
            }
            TraceLine::Assert { .. } => unreachable!("the fuzzer emits no assertions"),
        }
        let event = self.report.events;
        self.report.trace.push(line.clone());
        if let Err(e) = self.scene.audit() {
            self.report.violation = Some(format!("event {event} `{line}`: {e}"));
            return false;
        }
        if let (Some(before), TraceLine::Move { .. }) = (&self.rigid, &line) {
            if !before.is_empty() {
                self.report.rigid_checks += 1;
                let after = pairwise(&self.rigid_points());
                let worst = before.iter().zip(&after).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                if worst > RIGIDITY_TOLERANCE {
                    self.report.violation =
                        Some(format!("event {event} `{line}`: rotation changed a vertex distance by {worst}"));
                    return false;
                }
            }
        }
        true
    }
}

/// Runs `steps` generated pointer events on `scene`.
pub fn fuzz_scene(scene: &mut Scene, steps: usize, seed: u64) -> FuzzReport {
    let mut gen = Gen(ChaCha8Rng::seed_from_u64(seed));
    let report = FuzzReport {
        scene: scene.id().to_owned(),
        seed,
        steps,
        events: 0,
        catches: 0,
        repaints: 0,
        rigid_checks: 0,
        violation: None,
        trace: Vec::new(),
        layout: String::new(),
    };
    let mut d = Driver { scene, report, rigid: None };
    'gestures: while d.report.events < steps {
        let ids = d.scene.mover().ids();
        let mut p = if gen.below(4) != 0 && !ids.is_empty() {
            let id = ids[gen.below(ids.len())];
            let cover = d.scene.mover().get(id).expect("listed id").define_cover();
            let node = gen.below(cover.len().max(1));
            let base = cover.node(node).map(|n| n.shape.interior_point()).unwrap_or_default();
            base + Point::new(2.0 * gen.unit() - 1.0, 2.0 * gen.unit() - 1.0)
        } else {
            Point::new(800.0 * gen.unit(), 600.0 * gen.unit())
        };
        let button = if gen.below(5) == 0 { PointerButton::Right } else { PointerButton::Left };
        let moves = 1 + gen.below(8);
        if !d.step(TraceLine::Down { x: p.x, y: p.y, button }) {
            break;
        }
        for _ in 0..moves {
            if d.report.events >= steps {
                break 'gestures;
            }
            p += Point::new(80.0 * gen.unit() - 40.0, 80.0 * gen.unit() - 40.0);
            if !d.step(TraceLine::Move { x: p.x, y: p.y }) {
                break 'gestures;
            }
        }
        if !d.step(TraceLine::Up) {
            break;
        }
    }
    if d.report.ok() && d.scene.mover().caught_id().is_some() {
        d.step(TraceLine::Up);
    }
    d.report.layout = d.scene.save_text();
    d.report
}
