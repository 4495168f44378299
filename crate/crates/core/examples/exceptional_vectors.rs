//! Enumerates exceptional h-vectors under the node cap and filters them.

use nodal_core::casework::{enumerate_exceptional, filter_pipeline, kloosterman_bounds, R2Mode, RuleConfig};

fn main() -> nodal_core::Result<()> {
    for d in 6..=9 {
        let b = kloosterman_bounds(d)?;
        let found = enumerate_exceptional(d)?;
        println!("d = {d}: lower {} sum {} cap {}  exceptional {}", b.lower, b.sum, b.cap, found.len());
    }

    let r = filter_pipeline(6, RuleConfig::default())?;
    for v in &r.vectors {
        println!("{}: {}", v.h, v.verdict.as_str());
        for line in &v.rule_trace {
            println!("    {line}");
        }
    }
    println!("{}", r.conclusion);

    let one_step = filter_pipeline(7, RuleConfig { r2: R2Mode::Steps(1) })?;
    for v in &one_step.vectors {
        println!("d = 7, one propagation step: {} {}", v.h, v.verdict.as_str());
    }
    Ok(())
}
