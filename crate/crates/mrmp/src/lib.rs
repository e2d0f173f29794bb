//! File formats, generators, benchmarks and the `mrmp` command line on top
//! of [`mrmp_core`].

pub mod bench;
pub mod cli;
pub mod dimacs;
pub mod format;
pub mod gen;

pub use mrmp_core as core;

/// Installs the logger; the level comes from `MRMP_LOG` (error, info or
/// debug) and defaults to `error`.
pub fn init_logging() {
    let env = env_logger::Env::new().filter_or("MRMP_LOG", "error");
    let _ = env_logger::Builder::from_env(env)
        .format_timestamp(None)
        .try_init();
}
