//! Exhaustive verification over parameter grids.
//!
//! Instances are checked in parallel; reports come back in grid order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;
use serde_json::json;

use super::{
    check_lee_recurrence, check_progression_lemma, check_union_lemma, corollary_schur_expansion,
    formula_melting_lollipop, formula_path, formula_two_headed, RecurrenceTriple, Report,
};
use crate::combinatorics::{compositions, enumerate_partitions, hook_length_count, Composition};
use crate::error::{Error, Result};
use crate::graphs::{all_area_sequences, AreaSequence, Lollipop, TwoHeaded};
use crate::polyq::QPoly;
use crate::symfunc::{
    llt_bruteforce, monomial_to_schur, mul, ribbon_bruteforce, ribbon_by_tableaux, Basis, OracleConfig,
    SymFunc,
};

/// Brute-force LLT Schur expansions, memoised by area sequence.
pub struct LltOracle {
    config: OracleConfig,
    cache: Mutex<HashMap<AreaSequence, SymFunc>>,
}

impl LltOracle {
    pub fn new(config: OracleConfig) -> Self {
        Self {
            config,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// Every expansion computed so far.
    pub fn cached(&self) -> Vec<(AreaSequence, SymFunc)> {
        let cache = self.cache.lock().expect("oracle cache poisoned");
        cache.iter().map(|(a, f)| (a.clone(), f.clone())).collect()
    }

    pub fn schur(&self, a: &AreaSequence) -> Result<SymFunc> {
        if let Some(f) = self.cache.lock().expect("oracle cache poisoned").get(a) {
            return Ok(f.clone());
        }
        let f = monomial_to_schur(&llt_bruteforce(a, &self.config)?)?;
        self.cache
            .lock()
            .expect("oracle cache poisoned")
            .insert(a.clone(), f.clone());
        Ok(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    PathLemma,
    UnionLemma,
    ProgressionLemma,
    LeeRecurrence,
    MeltingLollipop,
    TwoHeaded,
    Corollary,
    RibbonProduct,
    TransposeInvariance,
    Q1Specialization,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::PathLemma,
        Claim::UnionLemma,
        Claim::ProgressionLemma,
        Claim::LeeRecurrence,
        Claim::MeltingLollipop,
        Claim::TwoHeaded,
        Claim::Corollary,
        Claim::RibbonProduct,
        Claim::TransposeInvariance,
        Claim::Q1Specialization,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::PathLemma => "path-lemma",
            Claim::UnionLemma => "union-lemma",
            Claim::ProgressionLemma => "progression-lemma",
            Claim::LeeRecurrence => "lee-recurrence",
            Claim::MeltingLollipop => "melting-lollipop",
            Claim::TwoHeaded => "two-headed",
            Claim::Corollary => "corollary",
            Claim::RibbonProduct => "ribbon-product",
            Claim::TransposeInvariance => "transpose-invariance",
            Claim::Q1Specialization => "q1-specialization",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.id() == id).ok_or_else(|| {
            let ids: Vec<_> = Self::ALL.iter().map(|c| c.id()).collect();
            Error::Parse(format!("unknown claim {id:?}; valid ids: {}", ids.join(", ")))
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Runs `claim` over its grid for graphs of at most `max_vertices` vertices.
///
/// Lemma grids are sized so that every symmetric function involved has
/// degree at most `max_vertices`: the union lemma takes `|v| + |w| + 2 ≤ N`
/// and the progression lemma lists of length at most `N - 2`. Weight entries
/// range over `0..=2`.
pub fn run(claim: Claim, max_vertices: usize, oracle: &LltOracle) -> Result<Vec<Report>> {
    let n = max_vertices;
    match claim {
        Claim::PathLemma => par(1..=n, |k| verify_path(k, oracle)),
        Claim::UnionLemma => par(union_grid(n.saturating_sub(2), 2), |(v, w)| check_union_lemma(&v, &w)),
        Claim::ProgressionLemma => par(progression_grid(n.saturating_sub(2), 2), |[v, v1, v2, i]| {
            check_progression_lemma(&v, &v1, &v2, i[0])
        }),
        Claim::LeeRecurrence => par(lee_grid(n), |t| verify_family_triple(&t, oracle)),
        Claim::MeltingLollipop => par(lollipop_grid(n), |l| verify_melting_lollipop(&l, oracle)),
        Claim::TwoHeaded => par(two_headed_grid(n), |t| verify_two_headed(&t, oracle)),
        Claim::Corollary => par(two_headed_grid(n), |t| Ok(verify_corollary(&t))),
        Claim::RibbonProduct => verify_ribbon_products(n, oracle.config()),
        Claim::TransposeInvariance => par(area_grid(n), |a| verify_transpose(&a, oracle)),
        Claim::Q1Specialization => par(area_grid(n), |a| verify_q1(&a, oracle)),
    }
}

fn par<T: Send, I: IntoIterator<Item = T>>(
    items: I,
    check: impl Fn(T) -> Result<Report> + Sync + Send,
) -> Result<Vec<Report>> {
    let items: Vec<T> = items.into_iter().collect();
    items.into_par_iter().map(check).collect()
}

pub fn lollipop_grid(max_vertices: usize) -> Vec<Lollipop> {
    (1..=max_vertices).flat_map(Lollipop::all_with_vertices).collect()
}

pub fn two_headed_grid(max_vertices: usize) -> Vec<TwoHeaded> {
    (1..=max_vertices).flat_map(TwoHeaded::all_with_vertices).collect()
}

pub fn area_grid(max_vertices: usize) -> Vec<AreaSequence> {
    (1..=max_vertices).flat_map(all_area_sequences).collect()
}

/// All lists of length `len` with entries in `0..=max_entry`.
fn lists(len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|l| {
                (0..=max_entry).map(move |x| {
                    let mut l = l.clone();
                    l.push(x);
                    l
                })
            })
            .collect()
    })
}

/// Pairs `(v, w)` with `|v| + |w| ≤ max_total_len`.
pub fn union_grid(max_total_len: usize, max_entry: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for total in 0..=max_total_len {
        for lv in 0..=total {
            for v in lists(lv, max_entry) {
                for w in lists(total - lv, max_entry) {
                    out.push((v.clone(), w));
                }
            }
        }
    }
    out
}

/// `[v, v', v'', [i]]` for every base list `v''` of length `1..=max_len` and
/// every position `i`.
pub fn progression_grid(max_len: usize, max_entry: usize) -> Vec<[Vec<usize>; 4]> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for base in lists(len, max_entry) {
            for i in 1..=len {
                let mut v1 = base.clone();
                v1[i - 1] += 1;
                let mut v = v1.clone();
                v[i - 1] += 1;
                out.push([v, v1, base.clone(), vec![i]]);
            }
        }
    }
    out
}

/// A Lee triple from one of the two families, with the ribbon weights the
/// corresponding formula uses.
#[derive(Clone, Debug)]
pub struct FamilyTriple {
    pub family: &'static str,
    pub params: serde_json::Value,
    pub triple: RecurrenceTriple,
    pub weights: [Vec<usize>; 3],
}

/// Triples `(L^{(k)}, L^{(k+1)}, L^{(k+2)})` at position `n + 1` and their
/// two-headed analogues at `m1 + n + 1`, for `k ≤ m - 3`.
pub fn lee_grid(max_vertices: usize) -> Vec<FamilyTriple> {
    let mut out = Vec::new();
    for l in lollipop_grid(max_vertices) {
        if l.m >= 3 && l.k + 3 <= l.m {
            let seqs = [0, 1, 2].map(|d| Lollipop::new(l.m, l.n, l.k + d).expect("k + 2 ≤ m - 1").area().values().to_vec());
            out.push(FamilyTriple {
                family: "melting-lollipop",
                params: json!({"m": l.m, "n": l.n, "k": l.k}),
                triple: RecurrenceTriple::new(seqs[0].clone(), seqs[1].clone(), seqs[2].clone(), l.n + 1)
                    .expect("lollipop triples satisfy the hypotheses"),
                weights: seqs,
            });
        }
    }
    for t in two_headed_grid(max_vertices) {
        if t.m2 >= 3 && t.k2 + 3 <= t.m2 {
            let members = [0, 1, 2].map(|d| TwoHeaded::new(t.m1, t.k1, t.n, t.m2, t.k2 + d).expect("k2 + 2 ≤ m2 - 1"));
            let seqs = members.map(|m| m.area().values().to_vec());
            let i = (t.m1 as i64 + t.n + 1) as usize;
            out.push(FamilyTriple {
                family: "two-headed",
                params: json!({"m1": t.m1, "k1": t.k1, "n": t.n, "m2": t.m2, "k2": t.k2}),
                triple: RecurrenceTriple::new(seqs[0].clone(), seqs[1].clone(), seqs[2].clone(), i)
                    .expect("two-headed triples satisfy the hypotheses"),
                weights: members.map(|m| m.modified_sequence()),
            });
        }
    }
    out
}

fn verify_family_triple(t: &FamilyTriple, oracle: &LltOracle) -> Result<Report> {
    let mut report = check_lee_recurrence(&t.triple, oracle)?;
    let [w, w1, w2] = &t.weights;
    let lemma = check_progression_lemma(w, w1, w2, t.triple.position())?;
    if let serde_json::Value::Object(p) = &mut report.params {
        p.insert("family".into(), t.family.into());
        p.insert("family_params".into(), t.params.clone());
    }
    Ok(report.require("weight_lemma_holds", lemma.holds))
}

fn verify_path(n: usize, oracle: &LltOracle) -> Result<Report> {
    let a = AreaSequence::path(n)?;
    Ok(Report::new("path-lemma", json!({"n": n}), oracle.schur(&a)?, formula_path(n)?))
}

pub fn verify_melting_lollipop(l: &Lollipop, oracle: &LltOracle) -> Result<Report> {
    let a = l.area();
    let rhs = formula_melting_lollipop(l.m, l.n, l.k)?;
    let positive = rhs.is_positive();
    let params = json!({"m": l.m, "n": l.n, "k": l.k, "area": a.values()});
    Ok(Report::new("thm-melting-lollipop", params, oracle.schur(&a)?, rhs).require("positive", positive))
}

pub fn verify_two_headed(t: &TwoHeaded, oracle: &LltOracle) -> Result<Report> {
    let a = t.area();
    let rhs = formula_two_headed(t);
    let positive = rhs.is_positive();
    let params = json!({
        "m1": t.m1, "k1": t.k1, "n": t.n, "m2": t.m2, "k2": t.k2,
        "area": a.values(), "b": t.modified_sequence(),
    });
    Ok(Report::new("thm-two-headed", params, oracle.schur(&a)?, rhs).require("positive", positive))
}

pub fn verify_corollary(t: &TwoHeaded) -> Report {
    let params = json!({"m1": t.m1, "k1": t.k1, "n": t.n, "m2": t.m2, "k2": t.k2});
    Report::new("corollary", params, formula_two_headed(t), corollary_schur_expansion(t))
}

pub fn verify_transpose(a: &AreaSequence, oracle: &LltOracle) -> Result<Report> {
    let t = a.transpose();
    let params = json!({"area": a.values(), "transpose": t.values()});
    Ok(Report::new("transpose-invariance", params, oracle.schur(a)?, oracle.schur(&t)?))
}

/// At `q = 1` the LLT polynomial is `(x_1 + x_2 + ⋯)^n = Σ_λ f^λ s_λ`.
pub fn verify_q1(a: &AreaSequence, oracle: &LltOracle) -> Result<Report> {
    let n = a.vertex_count();
    let mut lhs = SymFunc::zero(n, Basis::Schur);
    for (shape, c) in oracle.schur(a)?.eval_at_one() {
        lhs.add_term(shape, &QPoly::term(c, 0));
    }
    let mut rhs = SymFunc::zero(n, Basis::Schur);
    for shape in enumerate_partitions(n) {
        let f = hook_length_count(&shape);
        rhs.add_term(shape, &QPoly::term(f, 0));
    }
    Ok(Report::new("q1-specialization", json!({"area": a.values()}), lhs, rhs))
}

/// `r_α r_β = r_{α·β} + r_{α⊙β}` with every ribbon computed by brute force
/// and the product taken in the monomial basis, followed by `r_α = r_{α^r}`
/// for every `α`.
pub fn verify_ribbon_products(max_size: usize, config: &OracleConfig) -> Result<Vec<Report>> {
    let all: Vec<Composition> = (1..=max_size).flat_map(compositions).collect();
    let table: HashMap<Composition, SymFunc> = all
        .par_iter()
        .map(|c| ribbon_bruteforce(c, config).map(|f| (c.clone(), f)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(&Composition, &Composition)> = all
        .iter()
        .flat_map(|a| all.iter().filter(move |b| a.size() + b.size() <= max_size).map(move |b| (a, b)))
        .collect();
    let mut reports: Vec<Report> = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let lhs = monomial_to_schur(&mul(&table[a], &table[b])?)?;
            let rhs = monomial_to_schur(&(&table[&a.concat(b)] + &table[&a.near_concat(b)]))?;
            let params = json!({"alpha": a.parts(), "beta": b.parts()});
            Ok(Report::new("ribbon-product", params, lhs, rhs))
        })
        .collect::<Result<_>>()?;
    for a in &all {
        let r = a.reverse();
        let params = json!({"alpha": a.parts(), "reversed": r.parts()});
        let rhs = ribbon_by_tableaux(&r);
        let by_tableaux = ribbon_by_tableaux(a) == rhs;
        reports.push(
            Report::new("ribbon-reversal", params, monomial_to_schur(&table[a])?, rhs)
                .require("tableaux_agree", by_tableaux),
        );
    }
    Ok(reports)
}
