//! Brute-force oracles, kept independent of the library's recurrences.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use riordan_chi::fps::int;
use riordan_chi::subdivision::{
    matrix_b, sd_fvector, stirling1, stirling2, StirlingKind, StirlingTable,
};
use riordan_chi::{Complex, RiordanPair};

/// Counts set partitions of `{0..n}` into exactly `k` blocks by enumerating
/// restricted growth strings.
fn count_partitions(n: usize, k: usize) -> u64 {
    fn go(pos: usize, n: usize, k: usize, used: usize) -> u64 {
        if pos == n {
            return u64::from(used == k);
        }
        (0..=used.min(k.saturating_sub(1)))
            .map(|b| go(pos + 1, n, k, if b == used { used + 1 } else { used }))
            .sum()
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    go(0, n, k, 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if !seen[start] {
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = p[j];
            }
        }
    }
    cycles
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn second_kind_matches_partition_count() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(
                stirling2(n, k),
                BigInt::from(count_partitions(n, k)),
                "{{{n},{k}}}"
            );
        }
    }
    assert_eq!(count_partitions(3, 2), 3);
}

#[test]
fn first_kind_matches_cycle_count() {
    let table = StirlingTable::new(StirlingKind::First, 7);
    for n in 0..=7 {
        let perms = permutations(n);
        for k in 0..=n {
            let count = perms.iter().filter(|p| cycle_count(p) == k).count();
            assert_eq!(table.get(n, k), BigInt::from(count), "[{n},{k}]");
            assert_eq!(stirling1(n, k), BigInt::from(count));
        }
    }
}

#[test]
fn riordan_entries_match_binomials() {
    let n = 20;
    let pascal = RiordanPair::pascal(n).to_matrix(n - 1).unwrap();
    let f = RiordanPair::f_matrix(n).to_matrix(n - 1).unwrap();
    for i in 0..n {
        for k in 0..n {
            assert_eq!(pascal.get(i, k), &int(binomial(i as u64, k as u64) as i64));
            assert_eq!(
                f.get(i, k),
                &int(binomial(i as u64 + 1, k as u64 + 1) as i64)
            );
        }
    }
}

#[test]
fn f_rows_are_simplex_fvectors() {
    let f = RiordanPair::f_matrix(8);
    for n in 0..8 {
        let fv = Complex::simplex(n).unwrap().f_vector();
        for (k, &count) in fv.iter().enumerate() {
            assert_eq!(f.entry(n, k).unwrap(), int(count as i64));
        }
    }
}

/// Subdivides by listing chains of faces directly, without the library's
/// subdivision routine, and returns the f-vector.
fn chain_fvector(c: &Complex) -> Vec<usize> {
    let faces: Vec<BTreeSet<u32>> = c
        .faces()
        .map(|f| f.vertices().iter().copied().collect())
        .collect();
    let mut counts = vec![0usize; c.dimension() + 1];
    fn extend(chain_top: usize, len: usize, faces: &[BTreeSet<u32>], counts: &mut [usize]) {
        counts[len - 1] += 1;
        for (j, g) in faces.iter().enumerate() {
            if g.len() > faces[chain_top].len() && faces[chain_top].is_subset(g) {
                extend(j, len + 1, faces, counts);
            }
        }
    }
    for i in 0..faces.len() {
        extend(i, 1, &faces, &mut counts);
    }
    counts
}

#[test]
fn subdivision_matches_chain_enumeration() {
    let complexes = [
        Complex::simplex(1).unwrap(),
        Complex::simplex(2).unwrap(),
        Complex::simplex(3).unwrap(),
        Complex::simplex_boundary(2).unwrap(),
        Complex::simplex_boundary(3).unwrap(),
        Complex::from_vertex_lists(&[vec![0, 1, 2], vec![2, 3], vec![3, 4, 5, 6]]).unwrap(),
    ];
    for c in &complexes {
        let sd = c.barycentric_subdivide().unwrap();
        assert_eq!(sd.f_vector(), chain_fvector(c));
        let predicted: Vec<usize> = sd_fvector(&c.f_vector())
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(predicted, chain_fvector(c));
    }
    assert_eq!(chain_fvector(&Complex::simplex(2).unwrap()), vec![7, 12, 6]);
}

#[test]
fn b_row_one_against_all_ones() {
    // (B 1/(1-x))_1 = b_10 + b_11 = 1 + 2.
    let b = matrix_b(3);
    assert_eq!(b.get(1, 0) + b.get(1, 1), int(3));
}
