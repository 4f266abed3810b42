//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use llt_ribbon::combinatorics::{compositions, enumerate_partitions, hook_length_count, Composition, Partition};
use llt_ribbon::error::Result;
use llt_ribbon::graphs::{AreaSequence, TwoHeaded};
use llt_ribbon::polyq::QPoly;
use llt_ribbon::symfunc::{
    llt_bruteforce, monomial_to_schur, ribbon_bruteforce, ribbon_by_tableaux, Basis, OracleConfig, SymFunc,
};
use llt_ribbon::theorems::verify::{run, Claim, LltOracle};
use llt_ribbon::theorems::{
    check_progression_lemma, check_union_lemma, corollary_schur_expansion, formula_two_headed, Report,
};
use llt_ribbon::theorems::verify::{progression_grid, union_grid};

const MAX_VERTICES: usize = 7;

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(reports: &[Report]) -> Outcome {
    let failed: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
    Outcome {
        ok: failed.is_empty() && !reports.is_empty(),
        detail: match failed.first() {
            None => format!("{} instances", reports.len()),
            Some(r) => format!("{} of {} failed, first: {}", failed.len(), reports.len(), r.to_json()),
        },
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn criterion_1() -> Result<Outcome> {
    let a = AreaSequence::new(vec![2, 1, 2, 1])?;
    let oracle = monomial_to_schur(&llt_bruteforce(&a, &OracleConfig::new(MAX_VERTICES))?)?;
    let t = TwoHeaded::recognize(&a).expect("(2,1,2,1) is two-headed");
    let formula = formula_two_headed(&t);
    let corollary = corollary_schur_expansion(&t);
    let expected = QPoly::from_coeffs([(2, 3), (3, 2)]);
    let lambda = p(&[3, 2]);
    let got = [oracle.coeff(&lambda), formula.coeff(&lambda), corollary.coeff(&lambda)];
    Ok(Outcome {
        ok: got.iter().all(|c| *c == expected) && oracle == formula && formula == corollary,
        detail: format!("s[3,2] coefficient {} / {} / {}", got[0], got[1], got[2]),
    })
}

fn criterion_2() -> Result<Outcome> {
    let alpha = Composition::new(vec![2, 2])?;
    let mut expected = SymFunc::zero(4, Basis::Schur);
    expected.add_term(p(&[3, 1]), &QPoly::one());
    expected.add_term(p(&[2, 2]), &QPoly::one());
    let by_tableaux = ribbon_by_tableaux(&alpha);
    let by_colorings = monomial_to_schur(&ribbon_bruteforce(&alpha, &OracleConfig::new(MAX_VERTICES))?)?;
    Ok(Outcome {
        ok: by_tableaux == expected && by_colorings == expected,
        detail: format!("tableaux: {by_tableaux}; colorings: {by_colorings}"),
    })
}

/// Returns the theorem reports too, for the positivity check.
fn criterion_4(oracle: &LltOracle) -> Result<(Outcome, Vec<Report>)> {
    let theorem = run(Claim::TwoHeaded, MAX_VERTICES, oracle)?;
    let corollary = run(Claim::Corollary, MAX_VERTICES, oracle)?;
    let (a, b) = (summarize(&theorem), summarize(&corollary));
    let outcome = Outcome {
        ok: a.ok && b.ok,
        detail: format!("oracle = formula: {}; formula = corollary: {}", a.detail, b.detail),
    };
    Ok((outcome, theorem))
}

fn criterion_6(oracle: &LltOracle) -> Result<Outcome> {
    let paths = run(Claim::PathLemma, MAX_VERTICES, oracle)?;
    let unions = union_grid(5, 2)
        .into_iter()
        .map(|(v, w)| check_union_lemma(&v, &w))
        .collect::<Result<Vec<_>>>()?;
    let progressions = progression_grid(5, 2)
        .into_iter()
        .map(|[v, v1, v2, i]| check_progression_lemma(&v, &v1, &v2, i[0]))
        .collect::<Result<Vec<_>>>()?;
    let parts = [summarize(&paths), summarize(&unions), summarize(&progressions)];
    Ok(Outcome {
        ok: parts.iter().all(|o| o.ok),
        detail: format!("path {}; union {}; progression {}", parts[0].detail, parts[1].detail, parts[2].detail),
    })
}

fn criterion_7(oracle: &LltOracle) -> Result<Outcome> {
    let ribbons = run(Claim::RibbonProduct, MAX_VERTICES, oracle)?;
    let transposes = run(Claim::TransposeInvariance, 6, oracle)?;
    let reversals = ribbons.iter().filter(|r| r.claim == "ribbon-reversal").count();
    let expected_reversals: usize = (1..=MAX_VERTICES).map(|n| compositions(n).len()).sum();
    let a = summarize(&ribbons);
    let b = summarize(&transposes);
    Ok(Outcome {
        ok: a.ok && b.ok && reversals == expected_reversals,
        detail: format!("ribbons {} ({reversals} reversals); transpose {}", a.detail, b.detail),
    })
}

/// Every graph expanded by the oracle during the suite.
fn criterion_8(oracle: &LltOracle) -> Result<Outcome> {
    let mut failures = Vec::new();
    let cached = oracle.cached();
    for (a, f) in &cached {
        let n = a.vertex_count();
        let at_one = f.eval_at_one();
        for shape in enumerate_partitions(n) {
            let got = at_one.get(&shape).cloned().unwrap_or_default();
            if got != hook_length_count(&shape) {
                failures.push(format!("{a} at {shape}"));
            }
        }
    }
    Ok(Outcome {
        ok: failures.is_empty() && !cached.is_empty(),
        detail: match failures.first() {
            None => format!("{} graphs", cached.len()),
            Some(f) => format!("{} failures, first {f}", failures.len()),
        },
    })
}

fn criterion_9(reports: &[Report]) -> Outcome {
    let bad = reports.iter().filter(|r| !(r.lhs.is_positive() && r.rhs.is_positive())).count();
    Outcome {
        ok: bad == 0 && !reports.is_empty(),
        detail: format!("{} expansions checked, {bad} with a negative coefficient", 2 * reports.len()),
    }
}

fn main() -> ExitCode {
    let oracle = LltOracle::new(OracleConfig::new(MAX_VERTICES));
    let mut positivity: Vec<Report> = Vec::new();
    let mut all_ok = true;

    let mut record = |id: u32, limit: Option<Duration>, f: &mut dyn FnMut() -> Result<Outcome>| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let limit_text = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        let verdict = if ok && in_time { "PASS" } else { "FAIL" };
        println!("criterion {id}: {verdict} in {:.2}s{limit_text}: {detail}", elapsed.as_secs_f64());
        all_ok &= ok && in_time;
    };

    record(1, Some(Duration::from_secs(5)), &mut criterion_1);
    record(2, None, &mut criterion_2);
    record(3, Some(Duration::from_secs(600)), &mut || {
        let reports = run(Claim::MeltingLollipop, MAX_VERTICES, &oracle)?;
        let outcome = summarize(&reports);
        positivity.extend(reports);
        Ok(outcome)
    });
    record(4, Some(Duration::from_secs(1800)), &mut || {
        let (outcome, reports) = criterion_4(&oracle)?;
        positivity.extend(reports);
        Ok(outcome)
    });
    record(5, None, &mut || Ok(summarize(&run(Claim::LeeRecurrence, MAX_VERTICES, &oracle)?)));
    record(6, None, &mut || criterion_6(&oracle));
    record(7, None, &mut || criterion_7(&oracle));
    record(8, None, &mut || criterion_8(&oracle));
    let positivity = std::mem::take(&mut positivity);
    record(9, None, &mut || Ok(criterion_9(&positivity)));

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
