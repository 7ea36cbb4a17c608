use alloc::format;
use alloc::vec::Vec;

use super::data::QuasitoricData;
use crate::error::{argument, Error};

/// `CP^n` over the `n`-simplex: vertices `f0..fn`, every `n`-subset a facet,
/// `lambda_0 = -(e_1 + .. + e_n)` and `lambda_i = e_i`.
pub fn preset_cpn(n: usize) -> Result<QuasitoricData, Error> {
    if n < 1 {
        return Err(argument("CP^n needs n >= 1"));
    }
    let vertices = (0..=n).map(|i| format!("f{i}")).collect();
    let facets = (0..=n).rev().map(|skip| (0..=n).filter(|&v| v != skip).collect()).collect();
    let lambda = (0..=n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == 0 {
                        -1
                    } else if j + 1 == i {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Ok(QuasitoricData { name: format!("CP^{n}"), m: n, vertices, facets, lambda, base_facet: None })
}

/// Hirzebruch surface over the square: vertices `f1..f4` in cyclic order with
/// `lambda = (1,0), (0,1), (-1,a), (0,-1)`.
pub fn preset_hirzebruch(a: i64) -> QuasitoricData {
    let facets: Vec<Vec<usize>> =
        alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2], alloc::vec![2, 3], alloc::vec![0, 3],];
    QuasitoricData {
        name: format!("Hirzebruch({a})"),
        m: 2,
        vertices: (1..=4).map(|i| format!("f{i}")).collect(),
        facets,
        lambda: alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1], alloc::vec![-1, a], alloc::vec![0, -1],],
        base_facet: None,
    }
}
