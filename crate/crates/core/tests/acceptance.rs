use std::collections::BTreeSet;
use std::io::Write;

use qhodge_core::scalars::GaussRat;
use qhodge_core::verify::{self, Status, CRITERIA};

const CALCULI: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];

/// Sample points s = q^{1/2} for criterion 11. All arithmetic is exact,
/// so the tolerance is zero everywhere.
fn points() -> Vec<GaussRat> {
    vec![GaussRat::ratio(1, 2), GaussRat::ratio(2, 3), GaussRat::ratio(3, 5)]
}

/// Sub-checks whose printed value disagrees with the computed one:
/// (criterion, calculus, name, sign).
const KNOWN_FAILURES: &[(u8, u8, &str, Option<i8>)] = &[
    (5, 6, "g(theta+, theta+)", Some(1)),
    (6, 3, "Hoq3 S(wz)", Some(1)),
    (6, 6, "Hoq6 S(w-^w+)", Some(1)),
    (7, 1, "eqmp", None),
    (7, 2, "eqmp", None),
    (7, 3, "eqmp", None),
    (7, 4, "eqmp", None),
    (7, 5, "eqmp", None),
    (7, 6, "eqmp", None),
    (7, 7, "eqmp", None),
    (8, 6, "sdd6", Some(1)),
    (8, 7, "wosym G_S", None),
    (10, 1, "lasq2", Some(1)),
    (10, 1, "lasq2", Some(-1)),
    (10, 2, "lasq2", Some(1)),
    (10, 2, "lasq2", Some(-1)),
    (10, 4, "lasq2", Some(1)),
    (10, 4, "lasq2", Some(-1)),
    (10, 5, "lasq2", Some(1)),
    (10, 5, "lasq2", Some(-1)),
];

#[test]
fn acceptance() {
    let all: Vec<u8> = (1..=11).collect();
    let checks = verify::run(&CALCULI, &all, &points());

    // written to stderr directly so the report survives output capture
    let mut report = String::new();
    for (n, name) in CRITERIA {
        let cs: Vec<_> = checks.iter().filter(|c| c.criterion == n).collect();
        let count = |s: Status| cs.iter().filter(|c| c.status == s).count();
        let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
        let verdict = if fail == 0 && pass > 0 { "PASS" } else { "FAIL" };
        report += &format!("criterion {n:>2} {name:<17} {verdict}  ({pass} passed, {fail} failed, {skip} skipped)\n");
        for c in cs.iter().filter(|c| c.status == Status::Fail) {
            report += &format!("    calc {} {} {}: {}\n", c.calculus, c.name, verify::sign_name(c.sign), c.witness);
        }
    }
    std::io::stderr().write_all(report.as_bytes()).unwrap();

    let failing: BTreeSet<(u8, u8, String, Option<i8>)> = checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| (c.criterion, c.calculus, c.name.clone(), c.sign))
        .collect();
    let known: BTreeSet<(u8, u8, String, Option<i8>)> =
        KNOWN_FAILURES.iter().map(|&(n, id, name, s)| (n, id, name.to_string(), s)).collect();
    let unexpected: Vec<_> = failing.difference(&known).collect();
    let fixed: Vec<_> = known.difference(&failing).collect();
    assert!(unexpected.is_empty(), "new failures: {unexpected:?}");
    assert!(fixed.is_empty(), "listed failures now pass: {fixed:?}");

    for id in CALCULI {
        for n in 1..=11u8 {
            assert!(checks.iter().any(|c| c.calculus == id && c.criterion == n), "criterion {n} produced nothing for calc {id}");
        }
    }
}
