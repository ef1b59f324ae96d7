use std::time::{Duration, Instant};

use crate::dgraph::{build_dgraph, DahlhausGraph};
use crate::family::{build_sl_lists, lf_order, LfOrder, SetFamily, SlLists};
use crate::graph::ComponentLabeling;
use crate::maxcomp::{build_am, compute_bounds, compute_max, compute_pf, Bounds, MaxAssignment, PfOrder};
use crate::subgraph::{build_subgraph, spanning_forest, OverlapSubgraph, SpanningForest};

/// Wall time of each pipeline stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub lf: Duration,
    pub sl: Duration,
    pub pf: Duration,
    pub bounds: Duration,
    pub am: Duration,
    pub max: Duration,
    pub dgraph: Duration,
    pub classes: Duration,
    pub subgraph: Duration,
    pub forest: Duration,
}

impl StageTimings {
    pub const NAMES: [&'static str; 10] =
        ["lf", "sl", "pf", "bounds", "am", "max", "dgraph", "classes", "subgraph", "forest"];

    pub fn as_array(&self) -> [Duration; 10] {
        [
            self.lf,
            self.sl,
            self.pf,
            self.bounds,
            self.am,
            self.max,
            self.dgraph,
            self.classes,
            self.subgraph,
            self.forest,
        ]
    }

    pub fn total(&self) -> Duration {
        self.as_array().iter().sum()
    }
}

/// Everything the pipeline computes for one family.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub lf: LfOrder,
    pub sl: SlLists,
    pub pf: PfOrder,
    pub bounds: Bounds,
    pub max: MaxAssignment,
    pub dgraph: DahlhausGraph,
    pub classes: ComponentLabeling,
    pub subgraph: OverlapSubgraph,
    pub forest: SpanningForest,
    pub am_pops: usize,
    pub timings: StageTimings,
}

fn timed<T>(slot: &mut Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    *slot = start.elapsed();
    out
}

impl Analysis {
    pub fn run(f: &SetFamily) -> Self {
        let mut t = StageTimings::default();
        let lf = timed(&mut t.lf, || lf_order(f));
        let sl = timed(&mut t.sl, || build_sl_lists(f, &lf));
        let pf = timed(&mut t.pf, || compute_pf(f, &lf));
        let bounds = timed(&mut t.bounds, || compute_bounds(f, &pf));
        let mut am = timed(&mut t.am, || build_am(f, &lf, &bounds));
        let max = timed(&mut t.max, || compute_max(f, &lf, &pf, &mut am));
        let dgraph = timed(&mut t.dgraph, || build_dgraph(f, &sl, &max));
        let classes = timed(&mut t.classes, || dgraph.components());
        let subgraph = timed(&mut t.subgraph, || build_subgraph(f, &sl, &max, &bounds, &pf));
        let forest = timed(&mut t.forest, || spanning_forest(&subgraph));
        Analysis {
            lf,
            sl,
            pf,
            bounds,
            max,
            dgraph,
            classes,
            subgraph,
            forest,
            am_pops: am.pops(),
            timings: t,
        }
    }
}

/// Overlap classes of `f`.
pub fn overlap_classes(f: &SetFamily) -> ComponentLabeling {
    let lf = lf_order(f);
    let sl = build_sl_lists(f, &lf);
    let pf = compute_pf(f, &lf);
    let bounds = compute_bounds(f, &pf);
    let mut am = build_am(f, &lf, &bounds);
    let max = compute_max(f, &lf, &pf, &mut am);
    build_dgraph(f, &sl, &max).components()
}
