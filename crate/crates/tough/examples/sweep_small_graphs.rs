//! Running a verification sweep programmatically and reading its report.
//!
//! Sweeps enumerate every labeled graph (or tree) up to a size bound,
//! check one statement on each admissible instance, and report any
//! falsifying graph by its graph6 string. Run with
//! `cargo run --example sweep_small_graphs`.

use tough::harness::{run_sweep, SweepKind};

fn main() {
    for kind in [SweepKind::Main, SweepKind::TauMu, SweepKind::Construction] {
        let n = match kind {
            SweepKind::Construction => 7,
            _ => 5,
        };
        let report = run_sweep(kind, n, 2).unwrap();
        println!(
            "sweep {:<12} n ≤ {}: {} mismatches in {} ms",
            report.sweep,
            report.n,
            report.mismatches.len(),
            report.elapsed_ms
        );
        for (key, value) in &report.counts {
            println!("    {key}: {value}");
        }
    }

    // The full JSON report is what `tough sweep --out` writes.
    let report = run_sweep(SweepKind::Witness, 4, 1).unwrap();
    println!(
        "\nJSON report for the witness sweep at n ≤ 4:\n{}",
        report.to_json()
    );

    // And the CSV of minimally tough graphs found along the way.
    let mut csv = Vec::new();
    report.write_csv(&mut csv).unwrap();
    println!("CSV rows:\n{}", String::from_utf8(csv).unwrap());
}
