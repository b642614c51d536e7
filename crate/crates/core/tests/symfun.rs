use proptest::prelude::*;

use yfock::partitions::{Cell, Partition};
use yfock::ratfield::{parse_ratfun, RatFun};
use yfock::symfun::{
    char_table, jack_gl_n, jack_norm_formula, jack_norm_gs, jack_table, jack_table_with_order, lemma_ratio, lemma_ratio_sides, power_to_schur, schur_to_power, uglov_form,
    LemmaWhich, SymBasis, SymFun,
};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn r(s: &str) -> RatFun {
    parse_ratfun(s).unwrap()
}

fn power(s: &str) -> SymFun {
    SymFun::basis_element(SymBasis::Power, p(s))
}

fn schur(s: &str) -> SymFun {
    SymFun::basis_element(SymBasis::Schur, p(s))
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Closed norm product evaluated straight from arm and leg lengths.
fn norm_by_hand(lam: &Partition, n: usize) -> RatFun {
    let mut acc = RatFun::one();
    for s in lam.cells() {
        if lam.hook(s) % n == 0 {
            let (a, l) = (lam.arm(s) as i64, lam.leg(s) as i64);
            acc = acc * RatFun::linear(l, -(a + 1)).checked_div(&RatFun::linear(l + 1, -a)).unwrap();
        }
    }
    acc
}

#[test]
fn character_examples() {
    assert_eq!(schur_to_power(&p("1")), power("1"));
    let half = RatFun::from_ratio(1, 2).unwrap();
    let s2 = SymFun::from_terms(SymBasis::Power, 2, [(p("1,1"), half.clone()), (p("2"), half.clone())]).unwrap();
    assert_eq!(schur_to_power(&p("2")), s2);
    let s11 = SymFun::from_terms(SymBasis::Power, 2, [(p("1,1"), half.clone()), (p("2"), -half)]).unwrap();
    assert_eq!(schur_to_power(&p("1,1")), s11);
}

#[test]
fn characters_match_hook_length_and_orthogonality() {
    for d in 1..=8 {
        let t = char_table(d);
        let shapes = Partition::all_of_size(d);
        let ones = Partition::new(vec![1; d]).unwrap();
        for lam in &shapes {
            // Dimension of the irreducible from the hook length formula.
            let hooks: i64 = lam.cells().map(|s| lam.hook(s) as i64).product();
            assert_eq!(t.chi(lam, &ones), factorial(d) / hooks, "{lam}");
            assert!(t.chi(lam, &p(&d.to_string())).abs() <= 1);
        }
        // Column orthogonality: sum_lambda chi(rho) chi(sigma) = delta z_rho.
        for rho in &shapes {
            for sigma in &shapes {
                let s: i64 = shapes.iter().map(|lam| t.chi(lam, rho) * t.chi(lam, sigma)).sum();
                let z: i64 = if rho == sigma { i64::try_from(rho.z_factor()).unwrap() } else { 0 };
                assert_eq!(s, z, "{rho} {sigma}");
            }
        }
    }
}

#[test]
fn schur_power_round_trip() {
    for d in 0..=7 {
        for lam in Partition::all_of_size(d) {
            assert_eq!(schur_to_power(&lam).to_schur(), schur(&lam.to_string()), "{lam}");
            assert_eq!(power_to_schur(&lam).to_power(), power(&lam.to_string()), "{lam}");
        }
    }
}

#[test]
fn form_examples() {
    assert_eq!(uglov_form(&power("2"), &power("2"), 2).unwrap(), r("-2*e2/e1"));
    assert_eq!(uglov_form(&power("1,1"), &power("1,1"), 2).unwrap(), RatFun::from_int(2));
    assert!(uglov_form(&power("2"), &power("1,1"), 2).unwrap().is_zero());
    assert!(uglov_form(&power("2"), &power("1"), 2).unwrap().is_zero());
    assert!(uglov_form(&power("1"), &power("1"), 0).is_err());
}

#[test]
fn jack_examples() {
    for n in 1..=4 {
        assert_eq!(jack_gl_n(&p("1"), n).unwrap(), schur("1"));
    }
    assert_eq!(jack_gl_n(&p("2"), 1).unwrap().coeff(&p("1,1")), r("(e1 + e2)/(e1 - e2)"));
    assert_eq!(jack_gl_n(&p("2"), 2).unwrap().coeff(&p("1,1")), r("-(e1 + e2)/(e1 - e2)"));
    assert_eq!(
        jack_gl_n(&p("2"), 2).unwrap().to_json(),
        r#"{"basis":"schur","degree":2,"terms":[{"partition":"2","coeff":"1"},{"partition":"1,1","coeff":"-(e1 + e2)/(e1 - e2)"}]}"#
    );
}

#[test]
fn degree_two_by_hand() {
    // s_2 = (p_11 + p_2)/2, s_11 = (p_11 - p_2)/2; with w_k the weight of p_k,
    // <s_2, s_11> = (2 w_1^2 - 2 w_2)/4 and <s_11, s_11> = (2 w_1^2 + 2 w_2)/4.
    let q = r("-e2/e1");
    for n in 1..=3 {
        let w = |k: usize| if k % n == 0 { q.clone() } else { RatFun::one() };
        let w11 = w(1) * w(1);
        let cross = &w11 - &(w(2));
        let diag = &w11 + &(w(2));
        let c = -(cross.checked_div(&diag).unwrap());
        assert_eq!(jack_gl_n(&p("2"), n).unwrap().coeff(&p("1,1")), c, "N={n}");
    }
}

#[test]
fn norm_examples() {
    assert!(jack_norm_formula(&p("1"), 2).unwrap().is_one());
    assert_eq!(jack_norm_formula(&p("2"), 2).unwrap(), r("-2*e2/(e1 - e2)"));
    assert_eq!(jack_norm_formula(&p("1,1"), 2).unwrap(), r("(e1 - e2)/(2*e1)"));
    assert!(jack_norm_formula(&p("1"), 0).is_err());
}

#[test]
fn norms_agree_up_to_degree_six() {
    for n in 1..=3 {
        for lam in Partition::all_up_to(6) {
            let f = jack_norm_formula(&lam, n).unwrap();
            assert_eq!(f, norm_by_hand(&lam, n), "{lam} N={n}");
            assert_eq!(jack_norm_gs(&lam, n).unwrap(), f, "{lam} N={n}");
            let pl = jack_gl_n(&lam, n).unwrap();
            assert_eq!(uglov_form(&pl, &pl, n).unwrap(), f, "{lam} N={n}");
        }
    }
}

#[test]
fn orthogonal_and_dominance_triangular() {
    for n in 1..=3 {
        for d in 0..=6 {
            let shapes = Partition::all_of_size(d);
            let js: Vec<SymFun> = shapes.iter().map(|l| jack_gl_n(l, n).unwrap()).collect();
            for (a, la) in shapes.iter().enumerate() {
                assert!(js[a].coeff(la).is_one());
                for mu in js[a].terms().keys() {
                    assert!(mu.dominance_le(la), "s_{mu} in P_{la}, N={n}");
                }
                for b in a + 1..shapes.len() {
                    assert!(uglov_form(&js[a], &js[b], n).unwrap().is_zero(), "{la} {} N={n}", shapes[b]);
                }
            }
        }
    }
}

#[test]
fn independent_of_linear_extension() {
    // Smallest first by decreasing sum_i (i-1) lambda_i, which also extends dominance.
    let nfun = |l: &Partition| l.parts().iter().enumerate().map(|(i, &x)| i * x).sum::<usize>();
    for n in 1..=3 {
        for d in [4, 5, 6] {
            let mut order = Partition::all_of_size(d);
            order.sort_by(|a, b| nfun(b).cmp(&nfun(a)).then_with(|| a.lex_cmp(b).reverse()));
            let alt = jack_table_with_order(n, d, &order).unwrap();
            let base = jack_table(n, d).unwrap();
            for lam in &base.shapes {
                assert_eq!(alt.jack(lam), base.jack(lam), "{lam} N={n}");
                assert_eq!(alt.norm(lam), base.norm(lam));
            }
        }
    }
}

#[test]
fn schur_at_hbar_zero() {
    for n in 1..=3 {
        for lam in Partition::all_up_to(6) {
            for (mu, c) in jack_gl_n(&lam, n).unwrap().terms() {
                let c0 = c.substitute_hbar_zero().unwrap();
                assert_eq!(c0, if *mu == lam { RatFun::one() } else { RatFun::zero() }, "{lam} {mu} N={n}");
            }
        }
    }
}

#[test]
fn small_degree_collapse() {
    for n in 2..=5 {
        for lam in Partition::all_up_to(n - 1) {
            assert_eq!(jack_gl_n(&lam, n).unwrap(), schur(&lam.to_string()), "{lam} N={n}");
        }
    }
}

#[test]
fn lemma_examples() {
    assert_eq!(lemma_ratio(&p("2"), 1, Cell::new(0, 1), 2, LemmaWhich::Norm).unwrap(), r("-2*e2/(e1 - e2)"));
    assert_eq!(lemma_ratio(&p("1"), 0, Cell::new(0, 0), 1, LemmaWhich::Norm).unwrap(), r("-e2/e1"));
    // (2,1) for N = 2: removing (1,0) leaves no 1-cells to its right in either set.
    let l = p("2,1");
    let s = lemma_ratio_sides(&l, 1, Cell::new(1, 0), 2, LemmaWhich::Upper).unwrap();
    assert_eq!(s.hooks, s.cells);
    assert!(lemma_ratio(&l, 0, Cell::new(1, 0), 2, LemmaWhich::Upper).is_err());
    assert!(lemma_ratio(&l, 1, Cell::new(0, 0), 2, LemmaWhich::Upper).is_err());
}

#[test]
fn lemma_sides_agree_up_to_degree_six() {
    for n in 1..=3 {
        for lam in Partition::all_up_to(6) {
            for cell in lam.removable_cells() {
                let i = cell.residue(n);
                for w in [LemmaWhich::Upper, LemmaWhich::Lower, LemmaWhich::Norm] {
                    let s = lemma_ratio_sides(&lam, i, cell, n, w).unwrap();
                    assert_eq!(s.hooks, s.cells, "{lam} {cell:?} N={n} {w:?}");
                }
                let mu = lam.remove_cell(cell).unwrap();
                let norm = lemma_ratio(&lam, i, cell, n, LemmaWhich::Norm).unwrap();
                assert_eq!(norm, norm_by_hand(&lam, n).checked_div(&norm_by_hand(&mu, n)).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_bilinear_and_symmetric(
        a in prop::collection::vec(-3i64..=3, 5),
        b in prop::collection::vec(-3i64..=3, 5),
        c in prop::collection::vec(-3i64..=3, 5),
        n in 1usize..4,
    ) {
        let shapes = Partition::all_of_size(4);
        let mk = |v: &[i64]| SymFun::from_terms(SymBasis::Schur, 4, shapes.iter().cloned().zip(v.iter().map(|&k| RatFun::from_int(k)))).unwrap();
        let (f, g, h) = (mk(&a), mk(&b), mk(&c));
        let sum: Vec<i64> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
        let gh = mk(&sum);
        prop_assert_eq!(uglov_form(&f, &g, n).unwrap(), uglov_form(&g, &f, n).unwrap());
        prop_assert_eq!(uglov_form(&f, &gh, n).unwrap(), uglov_form(&f, &g, n).unwrap() + uglov_form(&f, &h, n).unwrap());
    }
}
