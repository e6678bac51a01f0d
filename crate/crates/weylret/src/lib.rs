//! JSON formats, experiment suites and the command-line front end for
//! [`weylret_core`].

pub mod cli;
pub mod io;
pub mod suites;

pub use weylret_core as core;

/// Caps the global thread pool at `WEYLRET_THREADS` when it is set.
pub fn init_threads() {
    if let Some(n) = std::env::var("WEYLRET_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // A pool that is already built keeps its size.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}
