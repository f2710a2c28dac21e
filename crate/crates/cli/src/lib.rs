pub mod job;
mod run;
pub mod text;

pub use job::{CliError, Command, Format, Job};
pub use run::{run, Report};
