//! Case analysis of the exceptional h-vectors: lower bounds, enumeration and
//! the filtering pipeline (unimodality, Stanley, base-locus degree argument).

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{ci_hilbert_series, is_symmetric, is_unimodal, stanley_admissible, StanleyVerdict};
use crate::ideals::{base_locus_dim, GradedIdeal};
use crate::macaulay::{lower_shadow, HVector};
use crate::poly::graded_dim;

/// Variables of the hyperplane-section ring the h-vectors live in.
pub const SECTION_VARS: usize = 4;

fn check_degree(d: usize) -> Result<()> {
    if d < 6 {
        return Err(Error::arg(format!("degree d = {d} is below 6")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowStep {
    pub value: u64,
    pub base: usize,
    pub shadow: u64,
    pub strict: bool,
    /// `shadow + 1` when strict, else `shadow`.
    pub effective: u64,
}

impl fmt::Display for ShadowStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})_*{} = {}", self.value, self.base, self.shadow)?;
        if self.strict {
            write!(f, " (strict: h >= {})", self.effective)?;
        }
        Ok(())
    }
}

fn shadow_step(value: u64, base: usize) -> Result<ShadowStep> {
    let s = lower_shadow(&BigUint::from(value), base)?;
    let shadow = s.value.to_u64().expect("small shadow");
    Ok(ShadowStep {
        value,
        base,
        shadow,
        strict: s.strict,
        effective: shadow + u64::from(s.strict),
    })
}

/// Per-degree minima of `h_I(0..=2d-4)` and the node cap `2(d-2)(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsProfile {
    pub d: usize,
    pub lower: HVector,
    pub sum: u64,
    pub cap: u64,
    /// `cap - sum = 14 - 2d`; negative once `d >= 8`.
    pub slack: i64,
    pub chain: Vec<ShadowStep>,
}

pub fn kloosterman_bounds(d: usize) -> Result<BoundsProfile> {
    check_degree(d)?;
    let n = 2 * d - 4;
    let half = |k: usize| -> u64 {
        match k {
            0 => 1,
            1 => 3,
            k if k <= d - 4 => 2 * k as u64 + 2,
            _ => 2 * d as u64 - 6,
        }
    };
    let lower: Vec<u64> = (0..=n).map(|k| half(k.min(n - k))).collect();
    let sum: u64 = lower.iter().sum();
    let cap = 2 * (d as u64 - 2) * (d as u64 - 1);
    let chain = vec![shadow_step(2 * d as u64 - 7, d - 4)?, shadow_step(2 * d as u64 - 6, d)?];
    Ok(BoundsProfile {
        d,
        lower: HVector::new(lower),
        sum,
        cap,
        slack: cap as i64 - sum as i64,
        chain,
    })
}

/// Symmetric `h` of length `2d-3`, `h_0 = 1`, `h >= lower`, `sum h <= cap`, lexicographically sorted.
pub fn enumerate_exceptional(d: usize) -> Result<Vec<HVector>> {
    let b = kloosterman_bounds(d)?;
    if b.slack < 0 {
        return Ok(Vec::new());
    }
    let n = 2 * d - 4;
    let mid = d - 2;
    let mut out = Vec::new();
    let mut extra = vec![0u64; mid + 1];
    distribute(&mut extra, 1, b.slack as u64, mid, &mut |ex| {
        let v: Vec<u64> = (0..=n)
            .map(|k| b.lower.get(k) + ex[k.min(n - k)])
            .collect();
        out.push(HVector::new(v));
    });
    out.sort();
    Ok(out)
}

/// Spreads up to `budget` over positions `pos..=mid`; pairs off the middle cost 2 per unit.
fn distribute(extra: &mut Vec<u64>, pos: usize, budget: u64, mid: usize, emit: &mut impl FnMut(&[u64])) {
    if pos > mid {
        emit(extra);
        return;
    }
    let cost = if pos == mid { 1 } else { 2 };
    let mut add = 0;
    while add * cost <= budget {
        extra[pos] = add;
        distribute(extra, pos + 1, budget - add * cost, mid, emit);
        add += 1;
    }
    extra[pos] = 0;
}

/// Lower bound on the number of nodes carried by `h`.
pub fn node_count_bound(h: &HVector) -> u64 {
    h.sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum R2Mode {
    /// Apply propagation until nothing changes.
    Saturate,
    /// Apply propagation at most this many times.
    Steps(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleConfig {
    pub r2: R2Mode,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig { r2: R2Mode::Saturate }
    }
}

/// Known range for `dim Bs|I_t|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimFact {
    pub t: usize,
    pub dim_ideal: u64,
    pub dmin: i64,
    pub dmax: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DkInterval {
    pub k: i64,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseState {
    pub h: HVector,
    pub d: usize,
    pub dim_facts: Vec<DimFact>,
    pub dk_intervals: Vec<DkInterval>,
    pub contradiction: bool,
    pub trace: Vec<String>,
}

impl CaseState {
    pub fn fact(&self, t: usize) -> &DimFact {
        &self.dim_facts[t - 1]
    }

    pub fn interval(&self, k: i64) -> &DkInterval {
        self.dk_intervals.iter().find(|i| i.k == k).expect("k in -1..=2")
    }
}

fn dim_name(v: i64) -> String {
    if v < 0 {
        "empty".to_string()
    } else {
        v.to_string()
    }
}

/// Derives base-locus facts for a candidate h-vector of socle degree `2d-4`.
pub fn derive_facts(h: &HVector, d: usize, config: RuleConfig) -> Result<CaseState> {
    check_degree(d)?;
    let n = 2 * d - 4;
    if !is_symmetric(h) || h.trimmed().len() != n + 1 {
        return Err(Error::pre(format!(
            "{h} is not symmetric with socle degree {n}"
        )));
    }
    let top = n + 1;
    let mut facts = Vec::with_capacity(top);
    for t in 1..=top {
        let total = graded_dim(SECTION_VARS, t);
        let ht = h.get(t);
        if ht > total {
            return Err(Error::pre(format!("h_{t} = {ht} exceeds dim S_{t} = {total}")));
        }
        facts.push(DimFact {
            t,
            dim_ideal: total - ht,
            dmin: -1,
            dmax: 3,
        });
    }
    let mut trace = Vec::new();
    let idx = |t: usize| t - 1;

    for f in facts.iter_mut() {
        if f.dim_ideal == 0 {
            f.dmin = 3;
            trace.push(format!("R0: dim I_{} = 0, so Bs|I_{}| is all of P^3", f.t, f.t));
        }
    }
    facts[idx(top)].dmax = -1;
    trace.push(format!("h_{top} = 0: I_{top} = S_{top}, Bs|I_{top}| empty"));
    facts[idx(d - 1)].dmax = -1;
    trace.push(format!("R1 (axiom, Jacobian base locus): Bs|I_{}| empty", d - 1));
    for f in facts.iter_mut() {
        if f.dim_ideal >= 1 && f.dmax > 2 {
            f.dmax = 2;
            trace.push(format!("R3: dim I_{} = {} >= 1, so dim Bs|I_{}| <= 2", f.t, f.dim_ideal, f.t));
        }
    }
    if facts[0].dim_ideal == 1 {
        for f in facts.iter_mut() {
            let below = graded_dim(SECTION_VARS, f.t - 1);
            if f.dim_ideal > below && f.dmax > 1 {
                f.dmax = 1;
                trace.push(format!(
                    "R4: dim I_{} = {} > dim S_{} = {}, so dim Bs|I_{}| <= 1",
                    f.t, f.dim_ideal, f.t - 1, below, f.t
                ));
            } else if f.dim_ideal == below {
                f.dmin = f.dmin.max(2);
                f.dmax = f.dmax.min(2);
                trace.push(format!(
                    "R4: dim I_{} = {} = dim S_{}, so Bs|I_{}| is the hyperplane f = 0",
                    f.t, f.dim_ideal, f.t - 1, f.t
                ));
            }
        }
    }

    let mut r2_budget = match config.r2 {
        R2Mode::Saturate => usize::MAX,
        R2Mode::Steps(s) => s,
    };
    loop {
        let mut changed = false;
        for i in 1..facts.len() {
            if facts[i].dmax > facts[i - 1].dmax {
                facts[i].dmax = facts[i - 1].dmax;
                changed = true;
            }
        }
        for i in (0..facts.len() - 1).rev() {
            if facts[i].dmin < facts[i + 1].dmin {
                facts[i].dmin = facts[i + 1].dmin;
                changed = true;
            }
        }
        if r2_budget > 0 {
            for k in (3..=top).rev() {
                let flat = h.get(k) == h.get(k - 1) && h.get(k - 1) == h.get(k - 2);
                if flat && facts[idx(k)].dmax == -1 && facts[idx(k - 1)].dmax != -1 {
                    facts[idx(k - 1)].dmax = -1;
                    trace.push(format!(
                        "R2: h_{k} = h_{} = h_{} = {} and Bs|I_{k}| empty, so Bs|I_{}| empty",
                        k - 1,
                        k - 2,
                        h.get(k),
                        k - 1
                    ));
                    r2_budget -= 1;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    trace.push("R5: dim Bs|I_t| is nonincreasing in t".to_string());
    let contradiction = facts.iter().any(|f| f.dmin > f.dmax && f.dmin >= 0);
    if contradiction {
        trace.push("facts are contradictory: no ideal has this h-vector".to_string());
    }
    for f in &facts {
        trace.push(format!(
            "t = {}: dim I_t = {}, dim Bs|I_t| in [{}, {}]",
            f.t,
            f.dim_ideal,
            dim_name(f.dmin.min(f.dmax)),
            dim_name(f.dmax)
        ));
    }
    let dk_intervals: Vec<DkInterval> = (-1..=2)
        .rev()
        .map(|k| {
            let lo = facts.iter().find(|f| f.dmin.min(f.dmax) <= k).map_or(top, |f| f.t);
            let hi = facts.iter().find(|f| f.dmax <= k).map_or(top, |f| f.t);
            DkInterval { k, lo, hi }
        })
        .collect();
    for iv in &dk_intervals {
        trace.push(format!("d_{} in [{}, {}]", iv.k, iv.lo, iv.hi));
    }
    Ok(CaseState {
        h: h.clone(),
        d,
        dim_facts: facts,
        dk_intervals,
        contradiction,
        trace,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    RejectedUnimodal,
    RejectedStanley,
    RejectedDegreeArgument,
    Survives,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::RejectedUnimodal => "rejected (not unimodal)",
            Verdict::RejectedStanley => "rejected (Stanley criterion)",
            Verdict::RejectedDegreeArgument => "rejected (degree argument)",
            Verdict::Survives => "survives",
        }
    }

    pub fn is_rejection(self) -> bool {
        self != Verdict::Survives
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleOutcome {
    /// `(d_2, d_1, d_0, d_-1)`.
    pub tuple: [usize; 4],
    pub sum: usize,
    pub killed_by: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeArgument {
    pub verdict: Verdict,
    pub threshold: usize,
    pub max_sum: usize,
    pub viable: Vec<TupleOutcome>,
    pub survivors: Vec<[usize; 4]>,
    pub trace: Vec<String>,
}

/// Tuples `d_2 <= d_1 <= d_0 <= d_-1` inside the derived intervals, filtered by the
/// `d_k` inequality and the complete-intersection equality rule.
pub fn degree_argument(state: &CaseState) -> Result<DegreeArgument> {
    let d = state.d;
    let n = 2 * d - 4;
    let threshold = n + SECTION_VARS;
    let mut trace = Vec::new();
    if state.contradiction {
        trace.push("contradictory base-locus facts".to_string());
        return Ok(DegreeArgument {
            verdict: Verdict::RejectedDegreeArgument,
            threshold,
            max_sum: 0,
            viable: Vec::new(),
            survivors: Vec::new(),
            trace,
        });
    }
    let iv: Vec<(usize, usize)> = [2, 1, 0, -1]
        .iter()
        .map(|&k| {
            let i = state.interval(k);
            (i.lo, i.hi)
        })
        .collect();
    let mut viable = Vec::new();
    let mut max_sum = 0;
    for a in iv[0].0..=iv[0].1 {
        for b in iv[1].0.max(a)..=iv[1].1 {
            for c in iv[2].0.max(b)..=iv[2].1 {
                for e in iv[3].0.max(c)..=iv[3].1 {
                    let sum = a + b + c + e;
                    max_sum = max_sum.max(sum);
                    if sum < threshold {
                        continue;
                    }
                    let tuple = [a, b, c, e];
                    let mut killed_by = None;
                    if sum == threshold {
                        let ci = ci_hilbert_series(&tuple)?;
                        if ci.trimmed() != state.h.trimmed() {
                            let k = (0..=n.max(ci.len()))
                                .find(|&k| ci.get(k) != state.h.get(k))
                                .expect("series differ somewhere");
                            killed_by = Some(format!(
                                "CI equality: socle degree {n} forces I = I_CI, but h_CI({k}) = {} != h({k}) = {}",
                                ci.get(k),
                                state.h.get(k)
                            ));
                        }
                    }
                    viable.push(TupleOutcome {
                        tuple,
                        sum,
                        killed_by,
                    });
                }
            }
        }
    }
    trace.push(format!(
        "d_k lemma: a CI inside I needs d_2 + d_1 + d_0 + d_-1 >= N + 4 = {threshold}; largest sum allowed by the intervals is {max_sum}"
    ));
    for v in &viable {
        let t = v.tuple;
        match &v.killed_by {
            Some(reason) => trace.push(format!("tuple ({},{},{},{}): {reason}", t[0], t[1], t[2], t[3])),
            None => trace.push(format!("tuple ({},{},{},{}) survives", t[0], t[1], t[2], t[3])),
        }
    }
    let survivors: Vec<[usize; 4]> = viable.iter().filter(|v| v.killed_by.is_none()).map(|v| v.tuple).collect();
    let verdict = if survivors.is_empty() {
        Verdict::RejectedDegreeArgument
    } else {
        Verdict::Survives
    };
    Ok(DegreeArgument {
        verdict,
        threshold,
        max_sum,
        viable,
        survivors,
        trace,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorReport {
    pub h: HVector,
    pub sum: u64,
    pub verdict: Verdict,
    pub rule_trace: Vec<String>,
    pub citations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub d: usize,
    pub bounds: HVector,
    pub cap: u64,
    pub vectors: Vec<VectorReport>,
    pub survivors: usize,
    pub conclusion: String,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

const CITE_AXIOM: &str =
    "assumption of this branch: Bs|I_(d-1)| is empty, since I contains the Jacobian ideal restricted to the hyperplane";
const CITE_UNIMODAL: &str = "Gorenstein h-vectors with h_1 = 3 are unimodal";
const CITE_STANLEY: &str =
    "Stanley: for h_1 <= 3 a Gorenstein h-vector is symmetric with O-sequence first differences up to floor(e/2)";
const CITE_DK: &str = "d_k lemma: a complete intersection of multidegree (d_2,d_1,d_0,d_-1) inside I has sum d_k >= N + n + 1";
const CITE_CI: &str =
    "CI equality: a complete intersection inside a Gorenstein ideal with the same socle degree equals it";

pub fn filter_vector(h: &HVector, d: usize, config: RuleConfig) -> Result<VectorReport> {
    let sum = h.sum();
    if !is_unimodal(h) {
        return Ok(VectorReport {
            h: h.clone(),
            sum,
            verdict: Verdict::RejectedUnimodal,
            rule_trace: vec![format!("{h} is not unimodal")],
            citations: vec![CITE_UNIMODAL.to_string()],
        });
    }
    let stanley = stanley_admissible(h);
    if stanley == StanleyVerdict::NotAdmissible {
        return Ok(VectorReport {
            h: h.clone(),
            sum,
            verdict: Verdict::RejectedStanley,
            rule_trace: vec![format!("{h} fails the Stanley criterion")],
            citations: vec![CITE_STANLEY.to_string()],
        });
    }
    let mut rule_trace = vec![format!("unimodal; Stanley criterion {}", stanley.as_str())];
    let state = derive_facts(h, d, config)?;
    rule_trace.extend(state.trace.iter().cloned());
    let arg = degree_argument(&state)?;
    rule_trace.extend(arg.trace.iter().cloned());
    Ok(VectorReport {
        h: h.clone(),
        sum,
        verdict: arg.verdict,
        rule_trace,
        citations: vec![
            CITE_AXIOM.to_string(),
            CITE_DK.to_string(),
            CITE_CI.to_string(),
        ],
    })
}

/// Runs enumeration and filtering for one degree.
pub fn filter_pipeline(d: usize, config: RuleConfig) -> Result<FilterReport> {
    let bounds = kloosterman_bounds(d)?;
    let vectors = enumerate_exceptional(d)?
        .iter()
        .map(|h| filter_vector(h, d, config))
        .collect::<Result<Vec<_>>>()?;
    let survivors = vectors.iter().filter(|v| !v.verdict.is_rejection()).count();
    let conclusion = if vectors.is_empty() {
        format!(
            "no exceptional h-vectors: sum of lower bounds exceeds the cap by {}, so sum h > 2(d-2)(d-1) holds outright",
            -bounds.slack
        )
    } else if survivors == 0 {
        "all exceptional h-vectors rejected: node-count bound sum h > 2(d-2)(d-1) stands on this branch".to_string()
    } else {
        format!("{survivors} h-vector(s) survive; the bound is not established on this branch")
    };
    Ok(FilterReport {
        d,
        bounds: bounds.lower,
        cap: bounds.cap,
        vectors,
        survivors,
        conclusion,
        citations: vec![
            "cited, not mechanized: if h_I(d-4) <= 2d-7 then Sing(X) contains a complete intersection of multidegree (1,1,d-1,d-1) or (1,2,d-2,d-1)".to_string(),
            "cited, not mechanized: the geometric conclusion on that branch (X contains a plane or a quadric surface)".to_string(),
        ],
        notes: vec![
            "the degree argument uses the threshold sum d_k >= 2d from the d_k lemma; a socle-degree comparison with 2d is weaker and is not used".to_string(),
        ],
    })
}

/// A rule of the fact calculus checked on a concrete ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    R2,
    R3,
    R4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleCheck {
    pub rule: Rule,
    pub t: usize,
    pub hypothesis: bool,
    /// Degree whose base locus the rule speaks about.
    pub target_degree: usize,
    pub predicted_min: i64,
    pub predicted_max: i64,
    pub actual: Option<i64>,
    pub sound: bool,
}

/// Evaluates a rule's hypothesis on `ideal` at degree `t` and compares its conclusion
/// with the computed base-locus dimension.
pub fn check_rule(rule: Rule, ideal: &GradedIdeal, t: usize) -> Result<RuleCheck> {
    let n = ideal.n_vars();
    let proj = n as i64 - 1;
    let dim_i = |k: usize| ideal.dim_piece(k);
    let (hypothesis, target_degree, lo, hi) = match rule {
        Rule::R2 => {
            if t < 2 {
                return Err(Error::arg("R2 needs t >= 2"));
            }
            let flat = ideal.hilbert_value(t)? == ideal.hilbert_value(t - 1)?
                && ideal.hilbert_value(t - 1)? == ideal.hilbert_value(t - 2)?;
            let hyp = flat && base_locus_dim(ideal, t)? == -1;
            (hyp, t - 1, -1, -1)
        }
        Rule::R3 => (dim_i(t)? >= 1, t, -1, proj - 1),
        Rule::R4 => {
            if t < 1 {
                return Err(Error::arg("R4 needs t >= 1"));
            }
            let single = dim_i(1)? == 1;
            let below = graded_dim(n, t - 1);
            let here = dim_i(t)?;
            if single && here > below {
                (true, t, -1, proj - 2)
            } else if single && here == below {
                (true, t, proj - 1, proj - 1)
            } else {
                (false, t, -1, proj)
            }
        }
    };
    let actual = if hypothesis {
        Some(base_locus_dim(ideal, target_degree)?)
    } else {
        None
    };
    let sound = actual.map_or(true, |a| lo <= a && a <= hi);
    Ok(RuleCheck {
        rule,
        t,
        hypothesis,
        target_degree,
        predicted_min: lo,
        predicted_max: hi,
        actual,
        sound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(v: &[u64]) -> HVector {
        HVector::new(v.to_vec())
    }

    #[test]
    fn bounds_examples() {
        let b = kloosterman_bounds(6).unwrap();
        assert_eq!(b.lower.values(), &[1, 3, 6, 6, 6, 6, 6, 3, 1]);
        assert_eq!(b.sum, 38);
        let b = kloosterman_bounds(7).unwrap();
        assert_eq!(b.lower.values(), &[1, 3, 6, 8, 8, 8, 8, 8, 6, 3, 1]);
        assert_eq!(b.sum, 60);
        let b = kloosterman_bounds(8).unwrap();
        assert_eq!(b.sum, 86);
        assert_eq!(b.cap + 2, 86);
        assert!(kloosterman_bounds(5).is_err());
    }

    #[test]
    fn shadow_chain() {
        for d in 7..=12 {
            let b = kloosterman_bounds(d).unwrap();
            assert_eq!(b.chain[0].shadow, 2 * d as u64 - 9);
            assert_eq!(b.chain[1].shadow, 2 * d as u64 - 7);
        }
        let b = kloosterman_bounds(6).unwrap();
        assert_eq!(b.chain[0].effective, 3);
        assert_eq!(b.chain[1].shadow, 5);
    }

    #[test]
    fn enumeration_counts() {
        let six = enumerate_exceptional(6).unwrap();
        assert_eq!(six.len(), 6);
        assert_eq!(six[0], hv(&[1, 3, 6, 6, 6, 6, 6, 3, 1]));
        assert_eq!(six[5], hv(&[1, 4, 6, 6, 6, 6, 6, 4, 1]));
        assert_eq!(enumerate_exceptional(7).unwrap(), vec![hv(&[1, 3, 6, 8, 8, 8, 8, 8, 6, 3, 1])]);
        for d in 8..=12 {
            assert!(enumerate_exceptional(d).unwrap().is_empty());
        }
    }

    #[test]
    fn facts_for_seven() {
        let h = hv(&[1, 3, 6, 8, 8, 8, 8, 8, 6, 3, 1]);
        let s = derive_facts(&h, 7, RuleConfig::default()).unwrap();
        assert_eq!(s.fact(5).dmax, -1);
        assert_eq!(s.fact(4).dmax, -1);
        assert_eq!((s.fact(2).dmin, s.fact(2).dmax), (2, 2));
        assert_eq!(s.interval(2), &DkInterval { k: 2, lo: 1, hi: 1 });
        assert_eq!(s.interval(1), &DkInterval { k: 1, lo: 3, hi: 3 });
        let a = degree_argument(&s).unwrap();
        assert_eq!(a.verdict, Verdict::RejectedDegreeArgument);
        assert!(a.viable.is_empty());

        let single = derive_facts(&h, 7, RuleConfig { r2: R2Mode::Steps(1) }).unwrap();
        assert_eq!(single.fact(5).dmax, -1);
        assert_eq!(single.interval(-1).hi, 5);
        let a = degree_argument(&single).unwrap();
        assert_eq!(a.verdict, Verdict::RejectedDegreeArgument);
        assert_eq!(a.viable.len(), 1);
        assert_eq!(a.viable[0].tuple, [1, 3, 5, 5]);
        assert!(a.viable[0].killed_by.as_ref().unwrap().contains("h_CI(3) = 9"));
    }

    #[test]
    fn facts_for_six() {
        let s = derive_facts(&hv(&[1, 3, 6, 6, 6, 6, 6, 3, 1]), 6, RuleConfig::default()).unwrap();
        assert_eq!(s.fact(3).dmax, -1);
        let a = degree_argument(&s).unwrap();
        assert_eq!(a.max_sum, 10);
        assert_eq!(a.verdict, Verdict::RejectedDegreeArgument);
        let s = derive_facts(&hv(&[1, 4, 6, 6, 6, 6, 6, 4, 1]), 6, RuleConfig::default()).unwrap();
        assert_eq!(s.interval(2).hi, 2);
        let a = degree_argument(&s).unwrap();
        assert_eq!(a.max_sum, 11);
        assert_eq!(a.verdict, Verdict::RejectedDegreeArgument);
    }

    #[test]
    fn complete_intersection_survives() {
        for d in 6..=9 {
            let h = ci_hilbert_series(&[1, 2, d - 2, d - 1]).unwrap();
            let s = derive_facts(&h, d, RuleConfig::default()).unwrap();
            let a = degree_argument(&s).unwrap();
            assert_eq!(a.verdict, Verdict::Survives);
            assert!(a.survivors.contains(&[1, 2, d - 2, d - 1]));
        }
    }

    #[test]
    fn pipeline_six_and_seven() {
        let r = filter_pipeline(6, RuleConfig::default()).unwrap();
        let verdicts: Vec<Verdict> = r.vectors.iter().map(|v| v.verdict).collect();
        use Verdict::*;
        assert_eq!(
            verdicts,
            vec![
                RejectedDegreeArgument,
                RejectedStanley,
                RejectedStanley,
                RejectedUnimodal,
                RejectedUnimodal,
                RejectedDegreeArgument
            ]
        );
        assert_eq!(r.survivors, 0);
        let r = filter_pipeline(7, RuleConfig::default()).unwrap();
        assert_eq!(r.vectors.len(), 1);
        assert_eq!(r.survivors, 0);
        assert!(filter_pipeline(8, RuleConfig::default()).unwrap().vectors.is_empty());
    }

    #[test]
    fn node_bounds() {
        assert_eq!(node_count_bound(&hv(&[1, 3, 5, 7, 8, 7, 5, 3, 1])), 40);
        assert_eq!(node_count_bound(&hv(&[1, 2, 3, 4, 5, 4, 3, 2, 1])), 25);
        assert_eq!(node_count_bound(&hv(&[1])), 1);
    }

    #[test]
    fn rules_on_small_ideals() {
        let i = GradedIdeal::parse(4, &["x0 + x1", "x2^2 - x3^2"]).unwrap();
        let c = check_rule(Rule::R4, &i, 2).unwrap();
        assert!(c.hypothesis && c.sound);
        assert_eq!(c.actual, Some(1));
        let c = check_rule(Rule::R4, &GradedIdeal::parse(4, &["x0 - 2*x3"]).unwrap(), 3).unwrap();
        assert_eq!((c.predicted_min, c.predicted_max, c.actual), (2, 2, Some(2)));
        let c = check_rule(Rule::R3, &GradedIdeal::parse(4, &["x1*x2*x3 + x0^3"]).unwrap(), 3).unwrap();
        assert_eq!(c.actual, Some(2));
        let m = GradedIdeal::parse(4, &["x0^2", "x1^2", "x2^2", "x3^2", "x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3"]).unwrap();
        let c = check_rule(Rule::R2, &m, 4).unwrap();
        assert!(c.hypothesis && c.sound);
    }
}
