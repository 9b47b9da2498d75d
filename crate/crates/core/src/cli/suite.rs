//! The built-in verification suite: worked examples with known answers and
//! theorem checkers run over a seeded corpus of monomial ideals.
//!
//! Checks are numbered into groups 2 through 6: support and dimension,
//! Ext bounds and associated primes, gamma and Hann, shifted Ext and
//! periodic resolutions, generator counts.

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use super::report::{to_value, Check, Evidence, Report, TaskOutcome};
use super::Settings;
use crate::complexes::{free_resolution, FreeModule};
use crate::error::{Error, Result};
use crate::ext::{ext_dual, ext_shift_check, iterated_ext, subquotient, PresentedModule};
use crate::groebner::{Ideal, SubmoduleOfFree};
use crate::invariants::{
    ass_oracle, corpus, dim_formula_check, eass_experiment, ext_dimension_bound_check, gamma,
    generator_count_check, grade_by_ext, grade_by_koszul, homological_support_check,
    module_dimension, top_ext_generator_check, ExtProfile, HilbertSeries, Periodicity,
};
use crate::poly::RingSpec;

pub const GROUPS: [(u8, &str); 5] = [
    (2, "support and dimension"),
    (3, "Ext bounds and associated primes"),
    (4, "gamma and Hann"),
    (5, "shifted Ext and periodic resolutions"),
    (6, "generator counts"),
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub only: Option<u8>,
    pub seed: u64,
    pub corpus_size: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            only: None,
            seed: corpus::DEFAULT_SEED,
            corpus_size: corpus::DEFAULT_SIZE,
        }
    }
}

struct Ctx<'a> {
    settings: &'a Settings,
    options: SuiteOptions,
    ring: OnceLock<RingSpec>,
    ideals: OnceLock<Vec<Ideal>>,
}

impl Ctx<'_> {
    fn ring(&self) -> Result<&RingSpec> {
        if self.ring.get().is_none() {
            let _ = self.ring.set(self.settings.ring("QQ[x,y,z]")?);
        }
        Ok(self.ring.get().expect("set above"))
    }

    fn parse(&self, text: &str) -> Result<Ideal> {
        Ideal::parse(self.ring()?, text)
    }

    fn corpus(&self) -> Result<&[Ideal]> {
        if self.ideals.get().is_none() {
            let ideals =
                corpus::monomial_ideals(self.ring()?, self.options.seed, self.options.corpus_size)?;
            let _ = self.ideals.set(ideals);
        }
        Ok(self.ideals.get().expect("set above"))
    }

    /// `f(k, member_k)` over the corpus, in corpus order.
    fn map_corpus<T: Send>(&self, f: impl Fn(usize, &Ideal) -> Result<T> + Sync) -> Result<Vec<T>> {
        let ideals = self.corpus()?;
        if self.settings.parallel {
            ideals
                .par_iter()
                .enumerate()
                .map(|(k, i)| f(k, i))
                .collect()
        } else {
            ideals.iter().enumerate().map(|(k, i)| f(k, i)).collect()
        }
    }
}

fn strings(i: &Ideal) -> Result<Vec<String>> {
    Ok(i.canonical_generators()?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

fn ideal_check(quantity: &str, computed: &Ideal, expected: &Ideal, text: &str) -> Result<Check> {
    Ok(Check::new(
        quantity,
        strings(computed)?,
        text,
        computed.equals(expected)?,
    ))
}

/// Corpus members for which a property failed, as a single check.
fn corpus_check(quantity: &str, total: usize, failures: Vec<String>) -> Check {
    let pass = failures.is_empty();
    Check::new(
        quantity,
        json!({"members": total, "failures": failures}),
        json!({"failures": []}),
        pass,
    )
}

type CheckFn = fn(&Ctx) -> Result<TaskOutcome>;

const CHECKS: &[(u8, CheckFn)] = &[
    (2, ext_of_two_plane_union),
    (2, support_identity),
    (2, dimension_formula),
    (2, dimension_formula_negative_control),
    (3, minimal_primes_of_ext),
    (3, resolution_over_non_cm_ring),
    (3, iterated_ext_paths),
    (3, ext_dimension_bound),
    (3, ass_oracle_containment),
    (4, gamma_and_hann_example),
    (4, gamma_versus_annihilator),
    (5, shifted_ext_invariants),
    (5, fermat_periodic_resolution),
    (5, radical_membership_probe),
    (6, top_ext_generators),
    (6, height_two_perfect_ideals),
];

pub fn run_suite(settings: &Settings, options: SuiteOptions) -> Result<Report> {
    if let Some(g) = options.only {
        if !GROUPS.iter().any(|(id, _)| *id == g) {
            return Err(Error::Usage(format!(
                "no check group {g}; groups are 2 to 6"
            )));
        }
    }
    let ctx = Ctx {
        settings,
        options,
        ring: OnceLock::new(),
        ideals: OnceLock::new(),
    };
    let mut tasks = Vec::new();
    for (group, f) in CHECKS
        .iter()
        .filter(|(g, _)| options.only.is_none_or(|o| o == *g))
    {
        let start = Instant::now();
        let mut out = f(&ctx)?;
        out.op = format!("group {group}");
        if settings.timings {
            out.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        tasks.push(out);
    }
    let name = format!(
        "verification suite (seed {}, corpus size {}{})",
        options.seed,
        options.corpus_size,
        options
            .only
            .map(|g| format!(", group {g}"))
            .unwrap_or_default()
    );
    Ok(Report::new(
        name,
        "QQ[x,y,z] unless stated".into(),
        settings.defaults(),
        tasks,
    ))
}

fn ext_of_two_plane_union(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.ring()?;
    let i = ctx.parse("(xy, xz)")?;
    let m = PresentedModule::cyclic(&i)?;
    let profile = ExtProfile::new(&m, 2)?;
    let mut checks = vec![Check::new(
        "Ext^0 zero",
        profile.is_zero(0)?,
        true,
        profile.is_zero(0)?,
    )];
    let b1 = profile.annihilator(1)?;
    checks.push(ideal_check("Ann Ext^1", &b1, &ctx.parse("(x)")?, "(x)")?);
    let (k, v) = kernel_generator_quotient(r)?;
    let yz_mod = subquotient(&k, &v)?;
    let h1 = HilbertSeries::of_module(profile.ext(1).expect("window 2").module())?;
    let h_ref = HilbertSeries::of_module(&yz_mod)?;
    checks.push(Check::new(
        "H(Ext^1) vs H(R(y,z)/R(xy,xz)) up to shift",
        h1.to_string(),
        h_ref.to_string(),
        h1.shift_normalized() == h_ref.shift_normalized(),
    ));
    let e2 = profile.ext(2).expect("window 2").module();
    let yz = ctx.parse("(y, z)")?;
    let e2_ok = e2.mu()? == 1 && e2.annihilator()?.equals(&yz)?;
    checks.push(Check::new(
        "Ext^2 = R/(y,z) up to shift",
        e2_ok,
        true,
        e2_ok,
    ));
    checks.push(Check::new(
        "grade",
        profile.grade(),
        1,
        profile.grade() == 1.into(),
    ));
    let ann = m.annihilator()?;
    let strict = ann.radical_contained_in(&b1)? && !b1.radical_contained_in(&ann)?;
    checks.push(Check::new(
        "Supp Ext^1 = V(x) strictly inside Supp M",
        strict,
        true,
        strict,
    ));
    Ok(TaskOutcome::new(
        "",
        "Ext of R/(xy,xz)".into(),
        Evidence::Exact,
        checks,
        json!({"betti": profile.resolution().betti()}),
    ))
}

/// `R·(y,z) / R·(xy,xz)` inside `R^2`: the kernel of `(-z, y)` modulo the
/// image of `(xy, xz)^t`.
pub fn kernel_generator_quotient(r: &RingSpec) -> Result<(SubmoduleOfFree, SubmoduleOfFree)> {
    let f = FreeModule::standard(r, 2);
    let vec = |a: &str, b: &str| -> Result<Vec<crate::poly::Polynomial>> {
        Ok(vec![
            crate::poly::Polynomial::parse(r.base(), a)?,
            crate::poly::Polynomial::parse(r.base(), b)?,
        ])
    };
    Ok((
        SubmoduleOfFree::new(&f, vec![vec("y", "z")?])?,
        SubmoduleOfFree::new(&f, vec![vec("x*y", "x*z")?])?,
    ))
}

fn support_identity(ctx: &Ctx) -> Result<TaskOutcome> {
    let ideals = ctx.corpus()?;
    let r = ctx.ring()?;
    let failures: Vec<Option<String>> = ctx.map_corpus(|k, i| {
        let m = PresentedModule::cyclic(i)?;
        let partner = &ideals[(k + 1) % ideals.len()];
        let n = PresentedModule::cyclic(partner)?;
        let over_r = homological_support_check(&m, &PresentedModule::ring_module(r), None)?;
        let over_n = homological_support_check(&m, &n, None)?;
        Ok((!(over_r.equal && over_n.equal))
            .then(|| format!("R/({})", strings(i).unwrap_or_default().join(", "))))
    })?;
    let failures: Vec<String> = failures.into_iter().flatten().collect();
    let check = corpus_check(
        "Supp(M ⊗ N) = ∪ Supp Ext^i(M, N) for N = R and N = next member",
        ideals.len(),
        failures,
    );
    Ok(TaskOutcome::new(
        "",
        "support identity on the corpus".into(),
        Evidence::Exact,
        vec![check],
        json!(null),
    ))
}

fn dimension_formula(ctx: &Ctx) -> Result<TaskOutcome> {
    let reports = ctx.map_corpus(|_, i| {
        Ok((
            strings(i)?,
            dim_formula_check(&PresentedModule::cyclic(i)?)?,
        ))
    })?;
    let applicable = reports.iter().filter(|(_, r)| r.hypotheses_hold).count();
    let failures = reports
        .iter()
        .filter(|(_, r)| r.hypotheses_hold && r.conclusion_holds != Some(true))
        .map(|(g, _)| format!("R/({})", g.join(", ")))
        .collect();
    let checks = vec![
        corpus_check(
            "dim Ext^g(M, R) = dim M whenever the hypotheses hold",
            reports.len(),
            failures,
        ),
        Check::new(
            "members meeting the hypotheses",
            applicable,
            "> 0",
            applicable > 0,
        ),
    ];
    Ok(TaskOutcome::new(
        "",
        "dimension formula on the corpus".into(),
        Evidence::Exact,
        checks,
        json!(null),
    ))
}

fn dimension_formula_negative_control(ctx: &Ctx) -> Result<TaskOutcome> {
    let m = PresentedModule::cyclic(&ctx.parse("(xy, xz)")?)?;
    let rep = dim_formula_check(&m)?;
    let checks = vec![
        Check::new(
            "conclusion holds",
            rep.conclusion_holds,
            true,
            rep.conclusion_holds == Some(true),
        ),
        Check::new(
            "support equal",
            rep.support_equal,
            false,
            rep.support_equal == Some(false),
        ),
        Check::holds(
            "support differs despite the dimension formula",
            rep.support_differs_despite_formula,
        ),
    ];
    Ok(TaskOutcome::new(
        "",
        "dimension formula negative control".into(),
        Evidence::Exact,
        checks,
        to_value(&rep),
    ))
}

fn minimal_primes_of_ext(ctx: &Ctx) -> Result<TaskOutcome> {
    let m = PresentedModule::cyclic(&ctx.parse("(xy, xz)")?)?;
    let profile = ExtProfile::standard(&m)?;
    let mut union: Vec<String> = Vec::new();
    for i in profile.nonvanishing() {
        for p in profile.annihilator(i)?.minimal_primes()? {
            let s = p.to_string();
            if !union.contains(&s) {
                union.push(s);
            }
        }
    }
    union.sort();
    let expected = vec!["(x)".to_string(), "(y, z)".to_string()];
    let pass = union == expected;
    let checks = vec![Check::new("∪ Min Ann Ext^i(M, R)", &union, &expected, pass)];
    Ok(TaskOutcome::new(
        "",
        "minimal primes of Ext annihilators of R/(xy,xz)".into(),
        Evidence::Exact,
        checks,
        json!(null),
    ))
}

fn resolution_over_non_cm_ring(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.settings.ring("QQ[X,Y,Z]/(X^2, XY, XZ)")?;
    let x = Ideal::parse(&r, "(x)")?;
    let m = PresentedModule::cyclic(&x)?;
    let res = free_resolution(&m, 3, true)?;
    let betti = res.betti();
    let mut checks = vec![Check::new(
        "ranks",
        &betti,
        [1, 1, 3, 6],
        betti.starts_with(&[1, 1, 3, 6]),
    )];
    let d3 = res.differential(3);
    let target = d3.target().clone();
    let parse = |rows: &[[&str; 3]]| -> Result<Vec<Vec<crate::poly::Polynomial>>> {
        rows.iter()
            .map(|c| {
                c.iter()
                    .map(|e| crate::poly::Polynomial::parse(r.base(), e))
                    .collect()
            })
            .collect()
    };
    let displayed = parse(&[
        ["x", "0", "0"],
        ["0", "x", "0"],
        ["0", "0", "x"],
        ["-y", "x", "0"],
        ["-z", "0", "x"],
        ["0", "-z", "y"],
    ])?;
    let same = SubmoduleOfFree::new(&target, d3.columns().to_vec())?
        .equals(&SubmoduleOfFree::new(&target, displayed)?)?;
    checks.push(Check::new(
        "kernel of (x y z) equals the displayed relations",
        same,
        true,
        same,
    ));
    let e2 = ext_dual(&m, 2)?;
    let b2 = e2.annihilator()?;
    checks.push(ideal_check(
        "Ann Ext^2",
        &b2,
        &Ideal::parse(&r, "(x)")?,
        "(x)",
    )?);
    let dim = module_dimension(e2.module())?;
    checks.push(Check::new("dim Ext^2", dim, 2, dim == 2));
    Ok(TaskOutcome::new(
        "",
        "R/xR over QQ[X,Y,Z]/(X^2,XY,XZ)".into(),
        Evidence::Exact,
        checks,
        to_value(res.report()),
    ))
}

fn iterated_ext_paths(ctx: &Ctx) -> Result<TaskOutcome> {
    let m = PresentedModule::cyclic(&ctx.parse("(xy, xz)")?)?;
    let e = iterated_ext(&m, &[2, 2])?;
    let yz = ctx.parse("(y, z)")?;
    let mut checks = vec![ideal_check(
        "Ann M_(2,2)",
        &e.annihilator()?,
        &yz,
        "(y, z)",
    )?];
    let h = HilbertSeries::of_module(e.module())?;
    let line = HilbertSeries::of_module(&PresentedModule::cyclic(&yz)?)?;
    checks.push(Check::new(
        "H(M_(2,2)) = 1/(1-t) up to shift",
        h.to_string(),
        line.to_string(),
        h.shift_normalized() == line.shift_normalized(),
    ));
    for i in [0, 1, 3] {
        let z = iterated_ext(&m, &[i, 2])?.is_zero()?;
        checks.push(Check::new(format!("M_({i},2) zero"), z, true, z));
    }
    let z = iterated_ext(&m, &[2, 1, 2])?.is_zero()?;
    checks.push(Check::new("M_(2,1,2) zero", z, true, z));
    Ok(TaskOutcome::new(
        "",
        "iterated Ext of R/(xy,xz)".into(),
        Evidence::InvariantLevel,
        checks,
        json!(null),
    ))
}

fn ext_dimension_bound(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.ring()?;
    let failures: Vec<Option<String>> = ctx.map_corpus(|_, i| {
        let rep = ext_dimension_bound_check(
            &PresentedModule::cyclic(i)?,
            &PresentedModule::ring_module(r),
        )?;
        Ok((!rep.holds).then(|| format!("R/({})", strings(i).unwrap_or_default().join(", "))))
    })?;
    let total = failures.len();
    let check = corpus_check(
        "dim Ext^i(M, R) <= d - i",
        total,
        failures.into_iter().flatten().collect(),
    );
    Ok(TaskOutcome::new(
        "",
        "Ext dimension bound on the corpus".into(),
        Evidence::Exact,
        vec![check],
        json!(null),
    ))
}

fn ass_oracle_containment(ctx: &Ctx) -> Result<TaskOutcome> {
    let reports =
        ctx.map_corpus(|_, i| Ok((strings(i)?, ass_oracle(&PresentedModule::cyclic(i)?)?)))?;
    let name = |g: &[String]| format!("R/({})", g.join(", "));
    let not_contained = reports
        .iter()
        .filter(|(_, r)| r.contained != Some(true))
        .map(|(g, _)| name(g))
        .collect();
    let cm_unequal = reports
        .iter()
        .filter(|(_, r)| r.cohen_macaulay && r.equal != Some(true))
        .map(|(g, _)| name(g))
        .collect();
    let cm = reports.iter().filter(|(_, r)| r.cohen_macaulay).count();
    let checks = vec![
        corpus_check(
            "Ass M ⊆ ∪ Min Ann Ext^i(M, R)",
            reports.len(),
            not_contained,
        ),
        corpus_check("equality on Cohen-Macaulay members", cm, cm_unequal),
    ];
    Ok(TaskOutcome::new(
        "",
        "associated prime oracle on the corpus".into(),
        Evidence::Exact,
        checks,
        json!({"cohen_macaulay_members": cm}),
    ))
}

fn gamma_and_hann_example(ctx: &Ctx) -> Result<TaskOutcome> {
    let i = ctx.parse("(xy, xz)")?;
    let m = PresentedModule::cyclic(&i)?;
    let profile = ExtProfile::standard(&m)?;
    let g = profile.gamma()?;
    let h = profile.hann()?;
    let ann = m.annihilator()?;
    let mut checks = vec![
        Check::new(
            "gamma rad-equals (xy, xz)",
            strings(&g)?,
            "(xy, xz)",
            g.radical_equals(&i)?,
        ),
        ideal_check("Ann M", &ann, &i, "(xy, xz)")?,
        ideal_check("Hann M", &h, &i, "(xy, xz)")?,
    ];
    let im = PresentedModule::ideal_module(&i)?;
    let gi = gamma(&im, None)?;
    let ai = im.annihilator()?;
    let differs = !gi.radical_equals(&ai)?;
    checks.push(Check::new(
        "gamma of the ideal (xy,xz) differs from its annihilator up to radical",
        json!({"gamma": strings(&gi)?, "ann": strings(&ai)?}),
        "different radicals",
        differs,
    ));
    Ok(TaskOutcome::new(
        "",
        "gamma and Hann of R/(xy,xz)".into(),
        Evidence::Exact,
        checks,
        json!(null),
    ))
}

fn gamma_versus_annihilator(ctx: &Ctx) -> Result<TaskOutcome> {
    let results = ctx.map_corpus(|_, i| {
        let m = PresentedModule::cyclic(i)?;
        let profile = ExtProfile::standard(&m)?;
        if profile.grade() == 0.into() {
            return Ok(None);
        }
        Ok(Some((
            strings(i)?,
            profile.gamma()?.radical_equals(&m.annihilator()?)?,
        )))
    })?;
    let tested: Vec<_> = results.into_iter().flatten().collect();
    let failures = tested
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(g, _)| format!("R/({})", g.join(", ")))
        .collect();
    let check = corpus_check(
        "gamma(M) rad-equals Ann M for positive grade",
        tested.len(),
        failures,
    );
    Ok(TaskOutcome::new(
        "",
        "gamma versus annihilator on the corpus".into(),
        Evidence::Exact,
        vec![check],
        json!(null),
    ))
}

fn shifted_ext_invariants(ctx: &Ctx) -> Result<TaskOutcome> {
    let failures: Vec<Vec<String>> = ctx.map_corpus(|_, i| {
        let mut bad = Vec::new();
        for k in 1..=3 {
            if !ext_shift_check(i, k)?.all_match {
                bad.push(format!("({}) at i = {k}", strings(i)?.join(", ")));
            }
        }
        Ok(bad)
    })?;
    let total = failures.len();
    let check = corpus_check(
        "Ext^i(I, R) and Ext^(i+1)(R/I, R) share Hilbert series, annihilator and mu for i = 1..3",
        total,
        failures.into_iter().flatten().collect(),
    );
    Ok(TaskOutcome::new(
        "",
        "shifted Ext on the corpus".into(),
        Evidence::InvariantLevel,
        vec![check],
        json!(null),
    ))
}

fn fermat_periodic_resolution(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.settings.ring("F5[X,Y,Z]/(X+Y+Z)^5")?;
    let xi = Ideal::parse(&r, "((x+y+z)^2)")?;
    let rep = eass_experiment(&xi, 8, None)?;
    let expected = Periodicity::Periodic {
        start: 1,
        period: 2,
    };
    let checks = vec![
        Check::new(
            "periodicity",
            &rep.periodicity,
            &expected,
            rep.periodicity == expected,
        ),
        Check::holds(
            "verdict declares periodicity",
            rep.verdict.contains("periodic from step 1"),
        ),
    ];
    Ok(TaskOutcome::new(
        "",
        "periodic resolution over F5[X,Y,Z]/(X+Y+Z)^5".into(),
        Evidence::Exact,
        checks,
        to_value(&rep),
    ))
}

fn radical_membership_probe(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.settings.ring("QQ[X,Y,Z]/(X^2, XYZ)")?;
    let i = Ideal::parse(&r, "(x)")?;
    let probe = Ideal::parse(&r, "(x, yz)")?;
    let rep = eass_experiment(&i, 6, Some(&probe))?;
    let got: Vec<Option<bool>> = (2..=6).map(|k| rep.steps[k].probe_in_radical).collect();
    let pass = got.iter().all(|g| *g == Some(true));
    let checks = vec![Check::new(
        "(x, yz) ⊆ rad Ann Ext^i(I, R) for i = 2..6",
        &got,
        [true; 5],
        pass,
    )];
    Ok(TaskOutcome::new(
        "",
        "probe radical membership over QQ[X,Y,Z]/(X^2,XYZ)".into(),
        Evidence::Exact,
        checks,
        to_value(&rep),
    ))
}

fn top_ext_generators(ctx: &Ctx) -> Result<TaskOutcome> {
    let reports = ctx.map_corpus(|_, i| {
        Ok((
            strings(i)?,
            top_ext_generator_check(&PresentedModule::cyclic(i)?)?,
        ))
    })?;
    let tested = reports.iter().filter(|(_, r)| r.is_some()).count();
    let failures = reports
        .iter()
        .filter(|(_, r)| r.as_ref().is_some_and(|r| !r.holds))
        .map(|(g, _)| format!("R/({})", g.join(", ")))
        .collect();
    let check = corpus_check("mu(Ext^p(M, R)) = beta_p(M) for p = pd M", tested, failures);
    Ok(TaskOutcome::new(
        "",
        "top Ext generators on the corpus".into(),
        Evidence::Exact,
        vec![check],
        json!(null),
    ))
}

fn height_two_perfect_ideals(ctx: &Ctx) -> Result<TaskOutcome> {
    let r = ctx.ring()?;
    let count = (ctx.options.corpus_size / 5).max(20);
    let ideals = corpus::perfect_height_two(r, ctx.options.seed, count)?;
    let reports: Vec<_> = if ctx.settings.parallel {
        ideals
            .par_iter()
            .map(generator_count_check)
            .collect::<Result<_>>()?
    } else {
        ideals
            .iter()
            .map(generator_count_check)
            .collect::<Result<_>>()?
    };
    let failures = reports
        .iter()
        .filter(|r| !r.all_hold())
        .map(|r| format!("({})", r.ideal.join(", ")))
        .collect();
    let grades_agree = ideals
        .iter()
        .map(|i| {
            Ok(grade_by_ext(&PresentedModule::cyclic(i)?)?
                == grade_by_koszul(i, &PresentedModule::ring_module(r))?)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let checks = vec![
        Check::new(
            "instances",
            ideals.len(),
            format!(">= {count}"),
            ideals.len() >= count,
        ),
        corpus_check(
            "mu(Ext^2) = mu(I) - 1, top Ext = beta_2, shape (1, mu, mu-1)",
            ideals.len(),
            failures,
        ),
        Check::holds("grade by Ext equals grade by Koszul homology", grades_agree),
    ];
    Ok(TaskOutcome::new(
        "",
        "height-two perfect monomial ideals".into(),
        Evidence::Exact,
        checks,
        json!(null),
    ))
}
