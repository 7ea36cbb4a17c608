//! File formats, caching and the `qtoric` command-line front end.

pub mod cache;
pub mod charnums;
pub mod cli;
pub mod input;

pub use cache::TopClassCache;
pub use cli::{run, Outcome};
pub use input::{parse_input, read_input, to_json, InputFile, ParseError};
