//! Probe for the refinement question: take a CS ideal in the column grading,
//! refine the grading by splitting a column by rows, homogenize with respect
//! to the finer grading and test whether the gin of the result is squarefree.
//!
//! Only reports what it finds; `I*` is not computed because `zstar_linear`
//! handles linear ideals only.
//!
//!     cargo run --release --example refinement_question

use mdlab::closure::{homogenize_ideal, HomogenizationContext};
use mdlab::groebner::{gin, IdealPresentation};
use mdlab::poly::{minors, variable_matrix};
use mdlab::{Grading, TermOrder, Variable};

/// Column grading on `rows x cols`, except that rows listed in `split` of
/// column 1 get the new degree `e_{cols+1}`.
fn refined_grading(rows: u16, cols: u16, split: &[u16]) -> Grading {
    let n = cols as usize + 1;
    let mut g = Grading::new(n);
    for i in 1..=rows {
        for j in 1..=cols {
            let mut e = vec![0; n];
            let k = if j == 1 && split.contains(&i) { cols as usize } else { j as usize - 1 };
            e[k] = 1;
            g = g.with_variable(Variable::x(i, j), e);
        }
    }
    g
}

fn main() -> mdlab::Result<()> {
    let cases: [(u16, u16, usize, &[u16]); 4] =
        [(2, 3, 2, &[2]), (3, 3, 2, &[3]), (3, 3, 2, &[2, 3]), (2, 4, 2, &[1])];
    for (rows, cols, t, split) in cases {
        let grading = refined_grading(rows, cols, split);
        let ctx = HomogenizationContext::new(grading.clone())?;
        let ideal = IdealPresentation::ungraded(minors(&variable_matrix(rows, cols), t), grading)?;
        let hom = homogenize_ideal(&ideal, &ctx)?;
        let g = gin(&hom, &TermOrder::lex(), 2, 1)?;
        println!(
            "I_{t} of {rows}x{cols}, column 1 rows {split:?} split off: I^hom has {} generators, gin squarefree = {}",
            hom.generators.len(),
            g.is_squarefree()
        );
    }
    Ok(())
}
