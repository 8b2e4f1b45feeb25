//! Runs every acceptance check, skipping the q = 16 rank unless asked:
//! `cargo run --release --example verify_all -- --full`.

use fqhc::verify::{run_all, VerifyOptions};

fn main() {
    let full = std::env::args().any(|a| a == "--full");
    let opts = VerifyOptions {
        full_rank_q16: full,
        ..VerifyOptions::default()
    };
    let reports = run_all(&opts);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
