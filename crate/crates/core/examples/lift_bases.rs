//! Searches for lift bases of C3 (4 and 5 parts) and C2^2 (5 parts) with
//! `k <= |G|`, printing the first hit for each `k`.

use std::sync::Arc;
use std::time::Instant;

use mhgr_core::search::{find_lift_base, SearchMode};
use mhgr_core::G0;

fn main() {
    for (g0, parts) in [(G0::C3, 4), (G0::C3, 5), (G0::C2Sq, 5)] {
        let g = Arc::new(g0.build());
        for k in 2..=g.order() {
            let t = Instant::now();
            match find_lift_base(g.clone(), parts, k, SearchMode::Normalized) {
                Ok(Some(cm)) => println!("{g0} parts={parts} k={k}: {cm:?} ({:?})", t.elapsed()),
                Ok(None) => println!("{g0} parts={parts} k={k}: none ({:?})", t.elapsed()),
                Err(e) => println!("{g0} parts={parts} k={k}: {e}"),
            }
        }
    }
}
