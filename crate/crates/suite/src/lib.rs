//! Acceptance suite for the workspace. The checks live in
//! `tests/acceptance.rs`; run them with `cargo test -p mpg4-suite`.
