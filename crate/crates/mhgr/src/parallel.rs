//! Multi-threaded driver for the existence search.
//!
//! Work items are handed out in index order from a shared counter. With
//! `first_witness`, a worker that finds a witness lowers a shared bound and
//! no item above it is started; every item below the bound still runs, so
//! the merged report equals the single-threaded one.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use mhgr_core::search::{
    c1_regular_asymmetric_scan, ItemResult, SearchMode, SearchOptions, SearchPlan, SearchReport, DEFAULT_BUDGET,
};
use mhgr_core::Group;

use crate::error::Result;

#[derive(Debug, Clone)]
pub struct SearchRequest {
    pub mode: SearchMode,
    pub first_witness: bool,
    pub workers: usize,
    pub budget: u128,
    pub vertex_cap: usize,
}

impl Default for SearchRequest {
    fn default() -> Self {
        SearchRequest {
            mode: SearchMode::Exhaustive,
            first_witness: false,
            workers: 1,
            budget: DEFAULT_BUDGET,
            vertex_cap: mhgr_core::aut::DEFAULT_VERTEX_CAP,
        }
    }
}

/// Runs `plan` on `workers` threads.
pub fn run_plan(plan: &SearchPlan, workers: usize) -> Result<SearchReport> {
    let workers = workers.max(1).min(plan.item_count().max(1));
    if workers == 1 {
        return Ok(plan.run()?);
    }
    let first_witness = plan.options().first_witness;
    let next = AtomicUsize::new(0);
    let bound = AtomicUsize::new(usize::MAX);
    let results: Mutex<Vec<ItemResult>> = Mutex::new(Vec::new());
    let failure: Mutex<Option<mhgr_core::Error>> = Mutex::new(None);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= plan.item_count() || i > bound.load(Ordering::SeqCst) {
                    break;
                }
                if failure.lock().unwrap().is_some() {
                    break;
                }
                match plan.run_item(i) {
                    Ok(r) => {
                        if first_witness && !r.witnesses.is_empty() {
                            bound.fetch_min(i, Ordering::SeqCst);
                        }
                        results.lock().unwrap().push(r);
                    }
                    Err(e) => {
                        failure.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e.into());
    }
    Ok(plan.merge(results.into_inner().unwrap()))
}

/// Decides existence for `(group, m)`, routing the trivial group to the
/// regular-graph scan. Fills in the wall time.
pub fn run_search(group: Arc<Group>, m: usize, req: &SearchRequest) -> Result<SearchReport> {
    let start = Instant::now();
    let mut report = if group.order() == 1 {
        c1_regular_asymmetric_scan(m)?
    } else {
        let opts = SearchOptions {
            mode: req.mode,
            first_witness: req.first_witness,
            budget: req.budget,
            vertex_cap: req.vertex_cap,
            ..SearchOptions::default()
        };
        let plan = SearchPlan::new(group, m, opts)?;
        run_plan(&plan, req.workers)?
    };
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workers_agree_with_serial() {
        for (n, m, fw) in [(4usize, 3usize, false), (6, 3, true), (2, 4, false)] {
            let g = Arc::new(Group::cyclic(n).unwrap());
            let req = |workers| SearchRequest { first_witness: fw, workers, ..SearchRequest::default() };
            let one = run_search(g.clone(), m, &req(1)).unwrap();
            let four = run_search(g.clone(), m, &req(4)).unwrap();
            assert_eq!(one.candidates_examined, four.candidates_examined, "C{n} m={m}");
            assert_eq!(one.regular_candidates, four.regular_candidates);
            assert_eq!(one.witnesses, four.witnesses);
        }
    }

    #[test]
    fn trivial_group_uses_the_scan() {
        let g = Arc::new(Group::cyclic(1).unwrap());
        let r = run_search(g, 6, &SearchRequest::default()).unwrap();
        assert_eq!(r.regular_candidates, 8);
        assert!(!r.found());
    }
}
