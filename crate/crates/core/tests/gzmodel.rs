use std::collections::BTreeSet;

use yfock::fockrep::{act, Basis, Family, FockVec, Kind, Op};
use yfock::gzmodel::{
    cell_product, factors_as_ratfun, g_factors, gz_constants, gz_to_partition, lemma_factor_closed, lemma_factor_direct, nt_a_eigenvalue, nt_gamma_beta, nt_matrix_elements,
    partition_to_gz, signed_roots, twist_factor, uglov_a_eigenvalue_ratio, FactorSide, GzScheme, MSeq,
};
use yfock::partitions::{Cell, Partition};
use yfock::ratfield::{parse_ratfun, RatFun};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn r(s: &str) -> RatFun {
    parse_ratfun(s).unwrap()
}

fn half(k: i64) -> RatFun {
    RatFun::from_ratio(k, 2).unwrap()
}

fn hbar_prime() -> RatFun {
    -RatFun::hbar()
}

#[test]
fn scheme_examples() {
    let (m, g) = partition_to_gz(&Partition::empty(), 2).unwrap();
    assert_eq!(m.blocks(), &[(1, 2)]);
    assert_eq!(g.thresholds(), &[vec![1, 2]]);
    let (m, g) = partition_to_gz(&p("1"), 2).unwrap();
    assert_eq!(m.blocks(), &[(0, 1), (1, 1)]);
    assert_eq!(g.thresholds(), &[vec![1], vec![1]]);
    assert!(partition_to_gz(&p("1"), 1).is_err());
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(MSeq::new(2, vec![]).is_err());
    assert!(MSeq::new(2, vec![(1, 1)]).is_err());
    assert!(MSeq::new(2, vec![(1, 1), (1, 1)]).is_err());
    assert!(MSeq::new(2, vec![(0, 3), (1, 1)]).is_err());
    let m = MSeq::new(2, vec![(1, 2)]).unwrap();
    assert!(GzScheme::new(&m, vec![vec![2, 1]]).is_err());
    assert!(GzScheme::new(&m, vec![vec![1]]).is_err());
    assert!(GzScheme::new(&m, vec![vec![1, 3]]).is_err());
}

#[test]
fn round_trip_and_corner_correspondence() {
    for n in 2..=4 {
        for lam in Partition::all_up_to(7) {
            let (m, g) = partition_to_gz(&lam, n).unwrap();
            assert_eq!(gz_to_partition(&m, &g, n).unwrap(), lam, "N={n}");
            for i in 1..n {
                let rem: BTreeSet<Cell> = lam.removable_of_residue(i, n).into_iter().collect();
                let mut seen = BTreeSet::new();
                for (s, q) in g.raisable(i) {
                    let x = m.prefix(s) - q;
                    let cell = Cell::new(x, lam.row(x) - 1);
                    // Raising the entry removes the matching cell.
                    let up = g.flipped(s, i, q).unwrap();
                    assert_eq!(gz_to_partition(&m, &up, n).unwrap(), lam.remove_cell(cell).unwrap(), "{lam} i={i} N={n}");
                    seen.insert(cell);
                }
                assert_eq!(seen, rem, "{lam} i={i} N={n}");
                for (s, q) in g.lowerable(i) {
                    let x = m.prefix(s) - q;
                    let cell = Cell::new(x, lam.row(x));
                    assert!(lam.addable_of_residue(i, n).contains(&cell), "{lam} i={i} N={n}");
                    let down = g.flipped(s, i, q).unwrap();
                    assert_eq!(gz_to_partition(&m, &down, n).unwrap(), lam.add_cell(cell).unwrap());
                }
            }
        }
    }
}

#[test]
fn block_constant_example() {
    let m = MSeq::new(2, vec![(1, 2)]).unwrap();
    let (_, g) = partition_to_gz(&Partition::empty(), 2).unwrap();
    let (a, _) = gz_constants(&m, &g, 1, 1, 1).unwrap();
    assert_eq!(a, r("2*e2") + hbar_prime() * half(1));
    assert!(gz_constants(&m, &g, 2, 1, 1).is_err());
    assert!(gz_constants(&m, &g, 1, 1, 2).is_err());
}

#[test]
fn block_constants_match_sequence_positions() {
    // -hbar'(p-1) + a_s = t m_a + hbar'(a - 3/2) at a = p_1 + ... + p_s - p + 1.
    for n in 2..=4 {
        let t = RatFun::linear(0, n as i64);
        for lam in Partition::all_up_to(6) {
            let (m, g) = partition_to_gz(&lam, n).unwrap();
            for s in 1..=m.len() {
                for q in 1..=m.size(s) {
                    let a = m.prefix(s) - q + 1;
                    let (a_s, nu) = gz_constants(&m, &g, s, n.max(q), q).unwrap();
                    let lhs = -hbar_prime().scale_int(q as i64 - 1) + &a_s;
                    let rhs = t.scale_int(m.m_at(a)) + hbar_prime() * half(2 * a as i64 - 3);
                    assert_eq!(lhs, rhs, "{lam} s={s} p={q} N={n}");
                    let entry = g.entry(s, n.max(q), q) as i64;
                    assert_eq!(nu, hbar_prime().scale_int(q as i64 - 1 - entry) - a_s);
                }
            }
        }
    }
}

#[test]
fn sequence_weight_at_corners() {
    // t m_a = e2 (x - y + i) on removable i-cells (1 <= i < N) and addable ones (1 <= i <= N).
    for n in 2..=4 {
        let t = RatFun::linear(0, n as i64);
        for lam in Partition::all_up_to(6) {
            let (m, _) = partition_to_gz(&lam, n).unwrap();
            let (_, ms) = lam.jm_decomposition(n, m.total().max(lam.len() + 1));
            for i in 1..=n {
                let mut cells = lam.addable_of_residue(i % n, n);
                if i < n {
                    cells.extend(lam.removable_of_residue(i, n));
                }
                for c in cells {
                    let expect = RatFun::linear(0, c.x as i64 - c.y as i64 + i as i64);
                    assert_eq!(t.scale_int(ms[c.x]), expect, "{lam} {c:?} i={i} N={n}");
                }
            }
        }
    }
}

#[test]
fn lemma_factors_direct_equals_closed() {
    for n in 2..=4 {
        for lam in Partition::all_up_to(6) {
            let (m, g) = partition_to_gz(&lam, n).unwrap();
            for i in 1..n {
                for (s, q) in g.raisable(i) {
                    let up = g.flipped(s, i, q).unwrap();
                    for t in 1..=m.len() {
                        let d = lemma_factor_direct(&m, &g, FactorSide::Raise, s, q, t, i).unwrap();
                        assert_eq!(d, lemma_factor_closed(&m, &g, FactorSide::Raise, s, q, t, i).unwrap(), "{lam} i={i} N={n}");
                        let d = lemma_factor_direct(&m, &up, FactorSide::Lower, s, q, t, i).unwrap();
                        assert_eq!(d, lemma_factor_closed(&m, &up, FactorSide::Lower, s, q, t, i).unwrap(), "{lam} i={i} N={n}");
                    }
                    // Own-block values.
                    let k = q as i64 - i as i64 - 1;
                    let own_up = lemma_factor_direct(&m, &g, FactorSide::Raise, s, q, s, i).unwrap();
                    assert_eq!(own_up, (hbar_prime() * hbar_prime()).scale_int(k));
                    let own_down = lemma_factor_direct(&m, &up, FactorSide::Lower, s, q, s, i).unwrap();
                    assert_eq!(own_down, RatFun::from_ratio(-1, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn gamma_beta_index_checks() {
    let (m, g) = partition_to_gz(&p("2,1"), 3).unwrap();
    assert!(nt_gamma_beta(&m, &g, 0, 1, 1).is_err());
    assert!(nt_gamma_beta(&m, &g, 3, 1, 1).is_err());
    assert!(nt_gamma_beta(&m, &g, 1, 2, 1).is_err());
    assert!(nt_gamma_beta(&m, &g, 1, 1, 1).is_ok());
}

#[test]
fn matrix_element_products() {
    for n in [2, 3] {
        for lam in Partition::all_up_to(6) {
            for i in 1..n {
                let els = nt_matrix_elements(&lam, i, n).unwrap();
                assert_eq!(els.len(), lam.removable_of_residue(i, n).len());
                for e in &els {
                    assert_eq!(lam.remove_cell(e.cell).unwrap(), e.mu);
                    let (x, y) = (e.cell.x as i64, e.cell.y as i64);
                    let ef = &e.e_tilde * &e.f_tilde;
                    assert_eq!(ef, cell_product(&lam, e.cell, i, n).unwrap(), "{lam} i={i} N={n}");
                    let pole = RatFun::linear(0, x - y + i as i64) - RatFun::hbar() * half(2 * x + 1);
                    assert_eq!(e.pole, pole);
                    let w = RatFun::linear(2 * x + i as i64, 2 * y - i as i64) * half(1);
                    assert_eq!(e.weight, w);
                    for rr in 0..=2 {
                        let up = act(&Op::new(Family::YangianSl, Kind::Raise, i, rr), &FockVec::basis_vector(Basis::Jack, lam.clone()), n).unwrap();
                        let down = act(&Op::new(Family::YangianSl, Kind::Lower, i, rr), &FockVec::basis_vector(Basis::Jack, e.mu.clone()), n).unwrap();
                        assert_eq!(up.coeff(&e.mu) * down.coeff(&lam), e.e_at(rr) * e.f_at(rr), "{lam} i={i} r={rr} N={n}");
                    }
                }
            }
        }
    }
    assert!(nt_matrix_elements(&p("1"), 1, 2).unwrap().is_empty());
    assert!(nt_matrix_elements(&p("1"), 2, 2).is_err());
}

#[test]
fn a_eigenvalue_examples() {
    // j = (1,1) for (1) at N = 2: both factors carry the shift.
    let f = uglov_a_eigenvalue_ratio(&p("1"), 1, 2).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.iter().all(|(a, b)| a != b));
    // The empty partition at i = N: every index satisfies j_a <= N.
    for n in 2..=4 {
        let f = uglov_a_eigenvalue_ratio(&Partition::empty(), n, n).unwrap();
        assert!(f.iter().all(|(a, b)| a != b));
    }
    // i = 1 on the empty partition for N = 2: j = (2,1) shifts only the second index.
    let f = uglov_a_eigenvalue_ratio(&Partition::empty(), 1, 2).unwrap();
    assert_eq!(f.iter().map(|(a, b)| a != b).collect::<Vec<_>>(), vec![false, true]);
}

#[test]
fn a_eigenvalues_agree_and_separate() {
    for n in [2, 3] {
        for d in 0..=6 {
            let mut seen = BTreeSet::new();
            for lam in Partition::all_of_size(d) {
                let mut key = Vec::new();
                for i in 1..=n {
                    let a = nt_a_eigenvalue(&lam, i, n).unwrap();
                    let b = uglov_a_eigenvalue_ratio(&lam, i, n).unwrap();
                    assert_eq!(signed_roots(&a), signed_roots(&b), "{lam} i={i} N={n}");
                    let v = factors_as_ratfun(&a).unwrap();
                    assert_eq!(v, factors_as_ratfun(&b).unwrap());
                    key.push(v.to_string());
                }
                assert!(seen.insert(key), "eigenvalue collision at {lam}, N={n}");
            }
        }
    }
}

#[test]
fn twist_examples() {
    assert_eq!(twist_factor(0, 3, 4).coeffs(), &[RatFun::one(), RatFun::zero(), RatFun::zero(), RatFun::zero(), RatFun::zero()]);
    // f(u;1) = (u - b - hbar)/(u - b) with b = N e1, so the u^-k coefficient is hbar b^(k-1).
    let s = twist_factor(1, 3, 3);
    let b = r("3*e1");
    assert_eq!(s.coeffs(), &[RatFun::one(), RatFun::hbar(), RatFun::hbar() * &b, RatFun::hbar() * b.pow(2)]);
}

#[test]
fn twist_cancels_between_neighbours() {
    for n in 2..=4 {
        for rr in 0..=3 {
            for i in 1..n {
                let lo = -(RatFun::hbar() * half(i as i64 - 1));
                let hi = -(RatFun::hbar() * half(i as i64 + 1));
                let mut f = g_factors(i - 1, rr, n, &lo);
                f.extend(g_factors(i + 1, rr, n, &hi));
                for (a, b) in g_factors(i, rr, n, &lo).into_iter().chain(g_factors(i, rr, n, &hi)) {
                    f.push((b, a));
                }
                assert!(signed_roots(&f).is_empty(), "i={i} r={rr} N={n}");
            }
        }
    }
}
