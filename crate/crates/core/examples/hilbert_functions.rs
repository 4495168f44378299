//! Hilbert functions of graded ideals, hyperplane sections, base loci and the d_k degrees.

use nodal_core::ideals::{base_locus_dim, dk_profile, hilbert_function, hyperplane_section, GradedIdeal};
use nodal_core::poly::Poly;

fn main() -> nodal_core::Result<()> {
    let twisted = GradedIdeal::parse(4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;
    println!("twisted cubic: h = {}", hilbert_function(&twisted, 6)?);
    println!("  dim Bs|I_2| = {}", base_locus_dim(&twisted, 2)?);

    let l = Poly::parse("x0 + 2*x1 - x2 + 3*x3", 4)?;
    let s = hyperplane_section(&twisted, &l, 6)?;
    let values: Vec<u64> = s.checks.iter().map(|c| c.section_value).collect();
    println!("  section by {l}: h = {values:?}  first differences hold: {}", s.identity_holds());

    let ci = GradedIdeal::parse(4, &["x0", "x1^2", "x2^4", "x3^5"])?;
    let h = hilbert_function(&ci, 9)?;
    println!("complete intersection (1,2,4,5): h = {h}");
    let dk = dk_profile(&ci, 8)?;
    println!("  d_k = {:?}, sum {}, check {}", dk.d_values, dk.sum, dk.lemma_check);

    let plane_cubic = GradedIdeal::parse(4, &["x3", "x0^3 + x1^3 + x2^3"])?;
    println!("plane cubic curve: h = {}", hilbert_function(&plane_cubic, 6)?);
    println!("  dim Bs|I_1| = {}, dim Bs|I_3| = {}", base_locus_dim(&plane_cubic, 1)?, base_locus_dim(&plane_cubic, 3)?);
    Ok(())
}
