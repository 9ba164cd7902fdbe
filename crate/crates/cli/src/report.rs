//! Summary tables and JSONL streams of check reports.

use std::fmt::Write as _;
use std::time::Duration;

use curvereg::verify::{CheckReport, Verdict};

/// One JSON object per report, in the given order.
pub fn jsonl(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&serde_json::to_string(r).expect("reports always serialize"));
        s.push('\n');
    }
    s
}

/// Whether any report failed.
pub fn any_failed(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

/// Per-check tallies in first-appearance order, the failures, and a final
/// wall-time line. Everything except the last line depends only on the
/// reports.
pub fn summary_table(title: &str, reports: &[CheckReport], wall: Duration, threads: usize) -> String {
    let mut rows: Vec<(&str, [usize; 3])> = Vec::new();
    for r in reports {
        let idx = match rows.iter().position(|(c, _)| *c == r.check) {
            Some(i) => i,
            None => {
                rows.push((&r.check, [0; 3]));
                rows.len() - 1
            }
        };
        let k = match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inapplicable => 2,
        };
        rows[idx].1[k] += 1;
    }
    let width = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(0).max("check".len());
    let mut s = String::new();
    let _ = writeln!(s, "{title}");
    let _ = writeln!(s, "{:<width$}  {:>5}  {:>5}  {:>12}", "check", "pass", "fail", "inapplicable");
    let mut total = [0; 3];
    for (c, n) in &rows {
        let _ = writeln!(s, "{:<width$}  {:>5}  {:>5}  {:>12}", c, n[0], n[1], n[2]);
        for k in 0..3 {
            total[k] += n[k];
        }
    }
    let _ = writeln!(s, "{:<width$}  {:>5}  {:>5}  {:>12}", "total", total[0], total[1], total[2]);
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    if failed.is_empty() {
        let _ = writeln!(s, "failures: none");
    } else {
        let _ = writeln!(s, "failures:");
        for r in failed {
            let _ = writeln!(s, "  {} [{}]", r.check, r.instance);
            for a in r.failed_assertions() {
                let _ = writeln!(s, "    {}: {} {} {}", a.name, a.lhs, a.rel.symbol(), a.rhs);
            }
            for n in &r.notes {
                let _ = writeln!(s, "    note: {n}");
            }
        }
    }
    let _ = writeln!(s, "wall time {:.2}s on {threads} threads", wall.as_secs_f64());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvereg::verify::{Assertion, Relation};

    fn report(check: &str, lhs: i64) -> CheckReport {
        let mut r = CheckReport {
            check: check.into(),
            instance: "demo".into(),
            seed: None,
            inputs: Default::default(),
            quantities: Default::default(),
            assertions: vec![Assertion { name: "reg <= xi".into(), lhs, rel: Relation::Le, rhs: 3 }],
            applicable: true,
            notes: vec![],
            verdict: Verdict::Pass,
        };
        r.verdict = r.derive_verdict();
        r
    }

    #[test]
    fn table_counts_and_lists_failures() {
        let rs = [report("b", 1), report("a", 5), report("b", 2)];
        let t = summary_table("demo", &rs, Duration::ZERO, 1);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[2], "b          2      0             0");
        assert_eq!(lines[3], "a          0      1             0");
        assert!(t.contains("reg <= xi: 5 <= 3"));
        assert!(any_failed(&rs));
    }

    #[test]
    fn jsonl_round_trips() {
        let rs = [report("a", 1), report("b", 4)];
        let back: Vec<CheckReport> = jsonl(&rs).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(back, rs);
    }
}
