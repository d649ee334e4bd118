use derangements::numbers::{d_sub2, dbar, derangement_numbers, number_checks, rlm_table};
use num_bigint::BigInt;

const TABLE: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[3, 5, 1],
    &[11, 21, 11, 1],
    &[53, 113, 79, 19, 1],
    &[309, 715, 589, 211, 29, 1],
    &[2119, 5235, 4835, 2141, 461, 41, 1],
];

/// Heap's algorithm, kept apart from the library's generator.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn naive_rlm_counts(n: usize) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    for p in all_perms(n) {
        if p.iter().enumerate().any(|(i, &v)| v == i + 1) {
            continue;
        }
        let k = (0..n).filter(|&i| p[i + 1..].iter().all(|&w| w > p[i])).count();
        counts[k] += 1;
    }
    counts
}

fn inclusion_exclusion(n: usize) -> BigInt {
    // d_n = Σ_k (-1)^k n!/k!
    let mut total = BigInt::from(0);
    let mut falling = BigInt::from(1);
    for k in (0..=n).rev() {
        let term = falling.clone();
        total += if k % 2 == 0 { term } else { -term };
        falling *= BigInt::from(k.max(1));
    }
    total
}

#[test]
fn table_matches_published_rows() {
    let t = rlm_table(8).unwrap();
    let mut nonzero = 0;
    for (i, row) in TABLE.iter().enumerate() {
        let n = i + 2;
        let got: Vec<BigInt> = t.row(n).to_vec();
        let want: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want, "row {n}");
        nonzero += got.iter().filter(|v| **v != BigInt::from(0)).count();
    }
    assert_eq!(nonzero, 28);
    assert_eq!(t.get(8, 1), BigInt::from(2119));
    assert_eq!(t.get(8, 4), BigInt::from(2141));
}

#[test]
fn table_matches_naive_counting() {
    let t = rlm_table(7).unwrap();
    for n in 0..=7 {
        let naive = naive_rlm_counts(n);
        for (k, v) in naive.iter().enumerate() {
            assert_eq!(t.get(n, k), BigInt::from(*v), "n={n} k={k}");
        }
    }
}

#[test]
fn derangement_numbers_match_inclusion_exclusion() {
    let d = derangement_numbers(12);
    for (n, v) in d.iter().enumerate() {
        assert_eq!(*v, inclusion_exclusion(n), "n={n}");
    }
    assert_eq!(d[8], BigInt::from(2119 + 5235 + 4835 + 2141 + 461 + 41 + 1));
}

#[test]
fn closed_forms_on_published_values() {
    assert_eq!(dbar(4), BigInt::from(3));
    assert_eq!(dbar(6), BigInt::from(53));
    assert_eq!(d_sub2(5), BigInt::from(11));
    assert_eq!(d_sub2(8), BigInt::from(41));
}

#[test]
fn every_relation_to_eight() {
    let checks = number_checks(8);
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    for name in [
        "EGF of d_{n+2,1}",
        "OGF of d_{n,n-2}",
        "d_{n+2,n} = d_{n+1,n-1} + 2n",
        "dbar_n = (n-2) dbar_{n-1} + (n-3) dbar_{n-2}",
    ] {
        assert!(checks.iter().any(|c| c.name == name), "{name} missing");
    }
}

#[test]
fn golden_csv_shape() {
    let csv = rlm_table(8).unwrap().to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,1,2,3,4,5,6,7");
    assert_eq!(lines[1], "2,1,,,,,,");
    assert_eq!(lines[7], "8,2119,5235,4835,2141,461,41,1");
}
