//! Top-degree evaluation recomputed from scratch over the rationals: faces
//! are re-derived from facets, every degree-m exponent vector is enumerated,
//! and the evaluation is the unique (up to scale) vector killed by all linear
//! relations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qtoric_core::quasitoric::*;
use qtoric_core::Composition;

fn is_face(facets: &[Vec<usize>], support: &[usize]) -> bool {
    facets.iter().any(|f| support.iter().all(|v| f.contains(v)))
}

fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in exponent_vectors(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn support(e: &[u32]) -> Vec<usize> {
    (0..e.len()).filter(|&i| e[i] > 0).collect()
}

/// Nonzero values of the fundamental class on degree-m face monomials.
fn brute_force_top(d: &QuasitoricData) -> Vec<(Vec<u32>, BigInt)> {
    let n = d.vertices.len();
    let m = d.m as u32;
    let admissible = |k| -> Vec<Vec<u32>> {
        exponent_vectors(n, k).into_iter().filter(|e| is_face(&d.facets, &support(e))).collect()
    };
    let top = admissible(m);
    let col = |e: &Vec<u32>| top.iter().position(|t| t == e);

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for mu in admissible(m - 1) {
        for j in 0..d.m {
            let mut row = vec![BigRational::zero(); top.len()];
            for v in 0..n {
                let mut e = mu.clone();
                e[v] += 1;
                if let Some(c) = col(&e) {
                    row[c] += BigRational::from_integer(d.lambda[v][j].into());
                }
            }
            rows.push(row);
        }
    }

    // reduced row echelon form over Q
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..top.len() {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row: Vec<(usize, BigRational)> =
            rows[r].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (k, x) in &pivot_row {
                    row[*k] -= &f * x;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..top.len()).filter(|c| !pivots.contains(c)).collect();
    assert_eq!(free.len(), 1, "top degree is not one-dimensional");
    let f = free[0];
    let mut e = vec![BigRational::zero(); top.len()];
    e[f] = BigRational::one();
    for (i, &p) in pivots.iter().enumerate() {
        e[p] = -rows[i][f].clone();
    }

    let base = &d.facets[d.resolved_base_facet().unwrap()];
    let mut be = vec![0u32; n];
    for &v in base {
        be[v] = 1;
    }
    let scale = e[col(&be).unwrap()].clone();
    top.into_iter()
        .zip(e)
        .map(|(mono, x)| {
            let x = x / &scale;
            assert!(x.is_integer(), "non-integral value {x}");
            (mono, x.to_integer())
        })
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

fn brute_force_char_number(d: &QuasitoricData, alpha: &[u32]) -> BigInt {
    let top = brute_force_top(d);
    let n = d.vertices.len();
    let mut total = BigInt::zero();
    let mut idx: Vec<usize> = (0..alpha.len()).collect();
    if alpha.len() > n {
        return total;
    }
    loop {
        let mut e = vec![0u32; n];
        for (&v, &a) in idx.iter().zip(alpha) {
            e[v] = a;
        }
        if let Some((_, x)) = top.iter().find(|(t, _)| *t == e) {
            total += x;
        }
        // next strictly increasing tuple
        let l = idx.len();
        let Some(i) = (0..l).rev().find(|&i| idx[i] < n - l + i) else { break };
        idx[i] += 1;
        for k in i + 1..l {
            idx[k] = idx[k - 1] + 1;
        }
    }
    total
}

fn assert_matches_oracle(d: &QuasitoricData) {
    let q = Quasitoric::new(d.clone()).unwrap();
    let top = TopClass::new(&q).unwrap();
    let expected = brute_force_top(d);
    let got: Vec<(Vec<u32>, BigInt)> = top.values().iter().map(|(k, v)| (k.exponents().to_vec(), v.clone())).collect();
    let mut expected_sorted = expected.clone();
    expected_sorted.sort();
    let mut got_sorted = got;
    got_sorted.sort();
    assert_eq!(got_sorted, expected_sorted, "{}", d.name);
}

#[test]
fn projective_spaces_match_oracle() {
    for n in 1..=5 {
        let d = preset_cpn(n).unwrap();
        assert_matches_oracle(&d);
        let q = Quasitoric::new(d.clone()).unwrap();
        for alpha in qtoric_core::compositions_of(n as u32) {
            let fast = char_number(&q, &alpha).unwrap();
            assert_eq!(fast, brute_force_char_number(&d, alpha.parts()), "CP^{n} {alpha}");
        }
    }
}

#[test]
fn hirzebruch_surfaces_match_oracle() {
    for a in -4..=4 {
        assert_matches_oracle(&preset_hirzebruch(a));
    }
}

#[test]
fn products_match_oracle() {
    let c1 = preset_cpn(1).unwrap();
    let c2 = preset_cpn(2).unwrap();
    let h = preset_hirzebruch(3);
    assert_matches_oracle(&product(&c1, &c1).unwrap());
    assert_matches_oracle(&product(&c1, &c2).unwrap());
    assert_matches_oracle(&product(&product(&c1, &c1).unwrap(), &c1).unwrap());
    assert_matches_oracle(&product(&h, &c1).unwrap());
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabelled_projective_space_keeps_its_numbers(perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let d = preset_cpn(3).unwrap().permute_vertices(&perm).unwrap();
        let f = char_function(&Quasitoric::new(d).unwrap()).unwrap();
        for (alpha, v) in &f.values {
            prop_assert_eq!(v, &binomial(4, alpha.len() as u64));
        }
    }

    #[test]
    fn hirzebruch_ranks_follow_h_vector(a in -6i64..=6) {
        let d = preset_hirzebruch(a);
        let (_, h) = f_h_vector(&d);
        let q = Quasitoric::new(d).unwrap();
        let ranks: Vec<BigInt> = (0..=2).map(|k| BigInt::from(graded_piece(&q, k).unwrap().cokernel_rank)).collect();
        prop_assert_eq!(&ranks, &h);
        let top = graded_piece(&q, 2).unwrap();
        prop_assert!(top.verify());
        let f = char_function(&q).unwrap();
        prop_assert_eq!(f.get(&"1,1".parse::<Composition>().unwrap()), Some(&BigInt::from(4)));
    }
}
