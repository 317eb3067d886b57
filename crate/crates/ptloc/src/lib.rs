//! File formats, the command-line front end and the exhaustive check driver
//! for `ptloc-core`.

pub mod cli;
pub mod driver;
pub mod format;
pub mod sample;

use std::time::Instant;

use ptloc_core::reconstruct::Clock;

/// Monotonic clock measured from its creation.
#[derive(Clone, Copy, Debug)]
pub struct StdClock(Instant);

impl StdClock {
    pub fn new() -> Self {
        StdClock(Instant::now())
    }
}

impl Default for StdClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for StdClock {
    fn now_nanos(&self) -> u64 {
        self.0.elapsed().as_nanos() as u64
    }
}
