use taupoly::checks::golden::{corrected_table, errata, printed_table, shifted_palindromic};
use taupoly::dpoly::reproduce_table;

fn check(k: usize) {
    let got = reproduce_table(k).unwrap();
    let want = corrected_table(k);
    assert_eq!(got.len(), want.len());
    for ((n, row), (m, expected)) in got.iter().zip(&want) {
        assert_eq!(n, m);
        assert_eq!(row, expected, "table {k} row {n}");
    }
}

#[test]
fn preprojective_a() {
    check(1);
}

#[test]
fn preprojective_d() {
    check(2);
}

#[test]
fn preprojective_e() {
    check(3);
}

#[test]
fn path_a() {
    check(4);
}

#[test]
fn path_d() {
    check(5);
}

#[test]
fn path_e() {
    check(6);
}

#[test]
fn every_erratum_is_forced_by_palindromicity() {
    for e in errata() {
        let printed = printed_table(e.table);
        let row = &printed.iter().find(|(n, _)| *n == e.n).unwrap().1;
        assert!(!shifted_palindromic(row), "{e:?}: printed row is already consistent");
        let mut fixed = row.clone();
        fixed[e.j] = e.corrected.clone();
        assert!(shifted_palindromic(&fixed), "{e:?}");
    }
}

#[test]
fn unlisted_printed_rows_are_palindromic() {
    for k in 1..=6 {
        for (n, row) in printed_table(k) {
            let listed = errata().iter().any(|e| e.table == k && e.n == n);
            assert_eq!(shifted_palindromic(&row), !listed, "table {k} row {n}");
        }
    }
}
