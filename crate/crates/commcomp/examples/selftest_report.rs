//! Run the seeded property suite in-process and print the report. The report
//! is byte-stable for a fixed seed; rerunning reproduces it exactly.

use commcomp::selftest::property_suite;

fn main() {
    let report = property_suite(1, 100, 5);
    print!("{}", report.text());
    assert!(report.all_passed);
    assert_eq!(report.text(), property_suite(1, 100, 5).text());
    println!("report is deterministic for seed 1");
}
