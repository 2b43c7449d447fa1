//! Runs every registered experiment with a small instance count and prints
//! a pass tally; the `experiment` subcommand prints the full reports.

use defekt::experiment::{self, ExperimentConfig};

fn main() -> defekt::Result<()> {
    let config = ExperimentConfig {
        seed: 42,
        count: Some(25),
        ..ExperimentConfig::default()
    };
    for name in experiment::EXPERIMENTS {
        let rows = experiment::run(name, &config)?;
        let (passed, total) = experiment::tally(&rows);
        println!("{name:>18}: {passed}/{total}");
    }
    let rows = experiment::run("earth-moon-table", &config)?;
    print!("\n{}", experiment::to_json_lines(&rows[..2]));
    Ok(())
}
