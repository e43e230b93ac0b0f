use mdlab::closure::*;
use mdlab::groebner::{buchberger, gin, same_ideal, IdealPresentation};
use mdlab::poly::{minors, variable_matrix, Polynomial, Variable};
use mdlab::TermOrder;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn maximal_minors_4x3(ctx: &HomogenizationContext) -> IdealPresentation {
    IdealPresentation::new(minors(&variable_matrix(4, 3), 3), ctx.base().clone()).unwrap()
}

/// One linear form per row, supported on that row, with random nonzero
/// coefficients.
fn random_row_forms(ctx: &HomogenizationContext, rows: u16, seed: u64) -> IdealPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = (1..=rows)
        .map(|i| {
            (1..=ctx.n() as u16)
                .map(|j| {
                    let mut c: i64 = rng.gen_range(-9..=9);
                    if c == 0 {
                        c = 1;
                    }
                    &Polynomial::var(Variable::x(i, j)) * &Polynomial::constant(BigRational::from_integer(c.into()))
                })
                .sum()
        })
        .collect();
    IdealPresentation::ungraded(gens, ctx.base().clone()).unwrap()
}

#[test]
fn all_four_row_sums_give_the_maximal_minors() {
    let ctx = HomogenizationContext::grid(4, 3);
    let i3 = maximal_minors_4x3(&ctx);
    let j = row_sum_ideal(&[1, 2, 3, 4], &ctx).unwrap();
    assert!(buchberger(&j, &TermOrder::lex()).unwrap().contains_all(&i3.generators).unwrap());
    let star = zstar_linear(&j, &ctx).unwrap();
    assert_eq!(star.generators.len(), 4);
    assert!(buchberger(&star, &TermOrder::lex()).unwrap().contains_all(&i3.generators).unwrap());
    assert!(verify_equality_hf(&i3, &star, DEFAULT_DEGREE_CAP).unwrap());
    assert!(same_ideal(&i3, &star).unwrap());
}

#[test]
fn three_row_sums_give_a_single_minor() {
    let ctx = HomogenizationContext::grid(4, 3);
    let i3 = maximal_minors_4x3(&ctx);
    let j = row_sum_ideal(&[1, 2, 3], &ctx).unwrap();
    let star = zstar_linear(&j, &ctx).unwrap();
    let top = IdealPresentation::new(minors(&variable_matrix(3, 3), 3), ctx.base().clone()).unwrap();
    assert!(same_ideal(&star, &top).unwrap());
    assert!(!buchberger(&star, &TermOrder::lex()).unwrap().contains_all(&i3.generators).unwrap());
    assert!(!verify_equality_hf(&i3, &star, DEFAULT_DEGREE_CAP).unwrap());
}

#[test]
fn row_sum_closures_are_cartwright_sturmfels() {
    for (grid, rows) in [((3, 3), vec![1, 2, 3]), ((4, 3), vec![1, 2, 3]), ((4, 3), vec![1, 2, 3, 4])] {
        let ctx = HomogenizationContext::grid(grid.0, grid.1);
        let j = row_sum_ideal(&rows, &ctx).unwrap();
        let star = zstar_linear(&j, &ctx).unwrap();
        for g in &star.generators {
            assert!(ctx.base().multidegree(g).unwrap().unwrap().iter().all(|&d| d <= 1));
        }
        assert!(gin(&star, &TermOrder::lex(), 2, 11).unwrap().is_squarefree());
        let hom = homogenize_ideal(&j, &ctx).unwrap();
        let g = gin(&hom, &TermOrder::lex(), 2, 11).unwrap();
        assert!(g.is_squarefree(), "gin(J^hom) for rows {rows:?} on {grid:?}");
        let initial = buchberger(&hom, &TermOrder::lex()).unwrap().initial_ideal().clone();
        assert!(hf_agree(&g, &initial, ctx.extended(), 4).unwrap());
    }
}

#[test]
fn random_linear_closures_up_to_four_by_four() {
    for (rows, cols, forms) in [(2, 2, 2), (3, 3, 3), (3, 4, 3), (4, 4, 3), (4, 4, 4)] {
        let ctx = HomogenizationContext::grid(rows, cols);
        let j = random_row_forms(&ctx, forms, rows as u64 * 10 + cols as u64);
        let star = zstar_linear(&j, &ctx).unwrap();
        assert!(buchberger(&j, &TermOrder::lex()).unwrap().contains_all(&star.generators).unwrap());
        assert!(gin(&star, &TermOrder::lex(), 2, 5).unwrap().is_squarefree());
        let hom = homogenize_ideal(&j, &ctx).unwrap();
        for f in &j.generators {
            let fh = homogenize_poly(f, &ctx).unwrap();
            assert!(buchberger(&hom, &TermOrder::degrevlex()).unwrap().contains(&fh).unwrap());
        }
        assert!(gin(&hom, &TermOrder::lex(), 2, 5).unwrap().is_squarefree(), "{rows}x{cols}, {forms} forms");
    }
}

#[test]
fn dehomogenization_on_random_polynomials() {
    let ctx = HomogenizationContext::grid(3, 3);
    for seed in 0..200 {
        let f = random_polynomial(&ctx, 5, 4, seed);
        let h = homogenize_poly(&f, &ctx).unwrap();
        assert!(ctx.extended().is_homogeneous(&h));
        assert_eq!(dehomogenize(&h), f);
    }
}
