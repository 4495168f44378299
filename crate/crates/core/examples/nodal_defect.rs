//! Nodes of a sextic threefold, its defect and the Gorenstein ideal of a hyperplane section.

use nodal_core::nodal::{
    defect, general_hyperplane, gorenstein_section, points_hilbert, sextic_nodes, verify_node, NodeConfig, SEXTIC_25,
};
use nodal_core::poly::Poly;

fn main() -> nodal_core::Result<()> {
    let f = Poly::parse(SEXTIC_25, 5)?;
    let pts = sextic_nodes();
    let nodes = pts.iter().filter(|p| verify_node(&f, p).map(|c| c.is_node).unwrap_or(false)).count();
    println!("F = {f}");
    println!("{nodes} of {} points are nodes", pts.len());

    let h: Vec<usize> = (0..=8).map(|k| points_hilbert(&pts, k)).collect();
    println!("h of the nodes: {h:?}");

    let report = defect(&NodeConfig::new(f, pts.clone())?)?;
    println!("h_J({}) = {}, defect {}: {}", 2 * report.d - 5, report.h_j, report.defect, report.verdict);

    let l = general_hyperplane(&pts, 5, 1);
    let g = gorenstein_section(&pts, 6, &l, 1)?;
    println!("section by {l}");
    println!("  h_Jbar = {}", g.h_jbar);
    println!("  h_I    = {}  verified {}", g.h, g.verified());
    Ok(())
}
