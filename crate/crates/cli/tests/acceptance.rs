//! Acceptance suite. Each test checks one criterion at its pinned tolerance
//! and prints a single PASS/FAIL line; run with `--nocapture` to see them.
//!
//! Exact equality everywhere. Time budgets are measured on the best of a few
//! runs so that scheduler noise does not decide the outcome.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use dyck::enumerate::{catalan, enumerate};
use dyck::grid::{cantor_pair, cantor_unpair, peaks_modified, valleys_modified, ModifiedPoint};
use dyck::reconstruct::{
    validate_peak_set, valleys_from_peaks, word_from_peaks, word_from_valleys, Violation,
};
use dyck::{concat_fragments, DyckWord, LatticePoint, ParseError, Step};
use dyck_cli::format::format_modified_set;
use num_bigint::BigUint;

const FIG: &str = "uduuudduuddd";

fn report(id: u32, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS  criterion {id}: {title} ({detail})"),
        Err(why) => {
            println!("FAIL  criterion {id}: {title}: {why}");
            panic!("criterion {id} failed: {why}");
        }
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Fastest of `runs` timings of `f`, plus its last result.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (Duration, T) {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..runs {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed());
        last = Some(value);
    }
    (best, last.unwrap())
}

fn within(elapsed: Duration, budget: Duration) -> Result<String, String> {
    check(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })?;
    Ok(format!("{elapsed:?} < {budget:?}"))
}

fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
    v.iter().copied().map(LatticePoint::from).collect()
}

fn mpts(v: &[(u64, u64)]) -> Vec<ModifiedPoint> {
    v.iter()
        .map(|&(a, b)| ModifiedPoint::new(a, b).unwrap())
        .collect()
}

fn all_words(max_n: usize) -> impl Iterator<Item = DyckWord> {
    (0..=max_n).flat_map(|n| enumerate(n).unwrap())
}

#[test]
fn criterion_1_figure_one_fixture() {
    let outcome = (|| {
        let (elapsed, (fragments, peaks, valleys, mpeaks, mvalleys)) = best_of(5, || {
            let w = DyckWord::parse(FIG).unwrap();
            let fragments: Vec<String> = w.factorize().iter().map(|f| f.to_string()).collect();
            (
                fragments,
                w.peaks(),
                w.valleys(true),
                peaks_modified(&w),
                valleys_modified(&w, true),
            )
        });
        check(fragments == ["ud", "uuudd", "uuddd"], || {
            format!("fragments {fragments:?}")
        })?;
        check(peaks == pts(&[(1, 1), (5, 3), (9, 3)]), || {
            format!("peaks {peaks:?}")
        })?;
        check(valleys == pts(&[(2, 0), (7, 1), (12, 0)]), || {
            format!("valleys {valleys:?}")
        })?;
        check(mpeaks == mpts(&[(0, 1), (1, 3), (3, 3)]), || {
            format!("modified peaks {mpeaks:?}")
        })?;
        check(mvalleys == mpts(&[(1, 0), (3, 1), (6, 0)]), || {
            format!("modified valleys {mvalleys:?}")
        })?;
        within(elapsed, Duration::from_millis(1))
    })();
    report(1, "six-path golden fixture", outcome);
}

#[test]
fn criterion_2_reconstruction_exhaustive() {
    let outcome = (|| {
        let start = Instant::now();
        let mut count = 0u64;
        for w in all_words(10) {
            let peaks = w.peaks();
            let valleys = w.valleys(true);
            let from_peaks = word_from_peaks(&peaks).map_err(|e| format!("{w}: {e}"))?;
            check(from_peaks == w, || {
                format!("word_from_peaks({w}) = {from_peaks}")
            })?;
            let from_valleys = word_from_valleys(&valleys).map_err(|e| format!("{w}: {e}"))?;
            check(from_valleys == w, || {
                format!("word_from_valleys({w}) = {from_valleys}")
            })?;
            let derived = valleys_from_peaks(&peaks).map_err(|e| format!("{w}: {e}"))?;
            check(derived.points() == valleys, || {
                format!("valleys_from_peaks mismatch on {w}")
            })?;
            count += 1;
        }
        let elapsed = start.elapsed();
        check(count == 23_714, || {
            format!("visited {count} words, expected 23714")
        })?;
        Ok(format!(
            "{count} words; {}",
            within(elapsed, Duration::from_secs(5))?
        ))
    })();
    report(
        2,
        "reconstruction from peaks and from valleys, n <= 10",
        outcome,
    );
}

#[test]
fn criterion_3_catalan_counts() {
    // A000108, n = 0..=12
    const OEIS: [u64; 13] = [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
    ];
    let outcome = (|| {
        for (n, &expected) in OEIS.iter().enumerate() {
            let mut seen = HashSet::new();
            for w in enumerate(n).unwrap() {
                let text = w.to_string();
                check(DyckWord::parse(&text).is_ok(), || {
                    format!("{text} fails to parse")
                })?;
                check(seen.insert(w), || format!("duplicate {text}"))?;
            }
            let counted = seen.len() as u64;
            let formula = catalan(n as u32);
            check(counted == expected, || {
                format!("n = {n}: enumerated {counted}, OEIS {expected}")
            })?;
            check(formula == BigUint::from(expected), || {
                format!("n = {n}: binomial formula {formula}, OEIS {expected}")
            })?;
        }
        Ok("n = 0..=12, enumeration = binomial = A000108".to_string())
    })();
    report(3, "Catalan counts", outcome);
}

#[test]
fn criterion_4_factorization_identity() {
    let outcome = (|| {
        let mut fragments = 0usize;
        for w in all_words(10) {
            let frags = w.factorize();
            check(frags.len() == w.peaks().len(), || {
                format!("{w}: fragment count")
            })?;
            let back = concat_fragments(&frags).map_err(|e| format!("{w}: {e}"))?;
            check(back == w, || format!("{w}: concat gives {back}"))?;
            for f in &frags {
                let steps: Vec<Step> = f.steps().collect();
                let peaks = steps
                    .windows(2)
                    .filter(|p| p[0] == Step::Up && p[1] == Step::Down)
                    .count();
                check(peaks == 1, || {
                    format!("{w}: fragment {f} has {peaks} peaks")
                })?;
            }
            fragments += frags.len();
        }
        Ok(format!("{fragments} fragments checked"))
    })();
    report(4, "factorization identity, n <= 10", outcome);
}

#[test]
fn criterion_5_validation_program_parity() {
    let outcome = (|| {
        let w = DyckWord::parse(FIG).unwrap();
        let text = format_modified_set(&peaks_modified(&w));
        check(text == "0,1;1,3;3,3", || format!("printed {text:?}"))?;
        let du = DyckWord::parse("du");
        check(
            du == Err(ParseError::PrefixUnderflow { position: 0 }),
            || format!("du: {du:?}"),
        )?;
        let uud = DyckWord::parse("uud");
        check(
            uud == Err(ParseError::Unbalanced { final_level: 1 }),
            || format!("uud: {uud:?}"),
        )?;
        let uxd = DyckWord::parse("uxd");
        check(
            uxd == Err(ParseError::InvalidSymbol {
                position: 1,
                symbol: 'x',
            }),
            || format!("uxd: {uxd:?}"),
        )?;
        Ok(format!("{text}; du/uud/uxd rejected"))
    })();
    report(5, "modified-peak printout and word checking", outcome);
}

#[test]
fn criterion_6_cantor_pairing() {
    let outcome = (|| {
        let (elapsed, result) = best_of(3, || -> Result<usize, String> {
            let mut cases = 0;
            for a in 0..=200u64 {
                for b in 0..=200u64 {
                    let z = cantor_pair(a, b).map_err(|e| e.to_string())?;
                    check(cantor_unpair(z) == (a, b), || {
                        format!("({a}, {b}) -> {z} -> {:?}", cantor_unpair(z))
                    })?;
                    cases += 1;
                }
            }
            let mut image: Vec<u64> = (0..200u64)
                .flat_map(|a| (0..200 - a).map(move |b| cantor_pair(a, b).unwrap()))
                .collect();
            image.sort_unstable();
            check(
                image.iter().enumerate().all(|(i, &z)| z == i as u64),
                || "image of a + b < 200 is not 0..len".to_string(),
            )?;
            Ok(cases)
        });
        let cases = result?;
        check(cases == 40_401, || format!("{cases} cases"))?;
        Ok(format!(
            "{cases} round trips; {}",
            within(elapsed, Duration::from_secs(1))?
        ))
    })();
    report(6, "Cantor pairing round trip and contiguity", outcome);
}

#[test]
fn criterion_7_corrected_valley_inequality() {
    let outcome = (|| {
        let r = validate_peak_set(&pts(&[(1, 1), (9, 1)]));
        check(!r.is_valid(), || "accepted {(1,1),(9,1)}".to_string())?;
        let cited = r
            .violations()
            .iter()
            .any(|v| matches!(v, Violation::ValleyBelowAxis { a: 2, b: 8, .. }));
        check(cited, || format!("report does not cite a >= b: {r}"))?;
        let text = r.to_string();
        check(text.contains("a = 2 < b = 8"), || text.clone())?;
        // the six-path peaks satisfy a >= b with a > b at (5,3),(9,3)
        check(
            validate_peak_set(&pts(&[(1, 1), (5, 3), (9, 3)])).is_valid(),
            || "rejected the six-path peaks".to_string(),
        )?;
        Ok("rejected with a = 2 < b = 8".to_string())
    })();
    report(7, "valley-below-axis guard", outcome);
}
