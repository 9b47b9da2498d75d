//! Scenario files: a ring, named objects and a list of tasks with optional
//! expectations. TOML or JSON, chosen by extension (anything that is not
//! `.json` is read as TOML).
//!
//! The whole file is parsed and every object, reference and expected value
//! is validated before the first computation starts.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::json;

use super::report::{to_value, Check, Evidence, Report, TaskOutcome};
use super::Settings;
use crate::complexes::{free_resolution, FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::ext::ext_shift_check;
use crate::ext::{ext_from_resolution, iterated_ext, subquotient, ExtResult, PresentedModule};
use crate::groebner::{Ideal, SubmoduleOfFree};
use crate::invariants::{
    ass_oracle, dim_formula_check, eass_experiment, ext_dimension_bound_check,
    generator_count_check, homological_support_check, invariant_report, module_dimension,
    ExtProfile, ExtendedInt, HilbertSeries, Periodicity,
};
use crate::poly::{parse_generators, Polynomial, RingSpec};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default = "default_ring")]
    pub ring: String,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub tasks: Vec<TaskSpec>,
}

fn default_ring() -> String {
    "QQ[x,y,z]".to_string()
}

/// Exactly one of the fields must be set.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    /// `R/I` for the listed generators of `I`.
    pub quotient: Option<String>,
    /// The ideal `I` itself, as a module.
    pub ideal: Option<String>,
    /// A subquotient `K/V` of a free module.
    pub subquotient: Option<SubquotientSpec>,
    /// Cokernel of a row-major matrix.
    pub matrix: Option<Vec<Vec<String>>>,
    pub target_twists: Option<Vec<i64>>,
    pub source_twists: Option<Vec<i64>>,
    pub free: Option<usize>,
    pub zero: Option<bool>,
}

/// `K/V` for submodules `V ⊆ K` of a free module, each given by an ideal
/// (inside `R`) or by a list of vectors (inside `R^n`).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubquotientSpec {
    pub numerator: Generators,
    pub denominator: Generators,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Generators {
    Ideal(String),
    Vectors(Vec<Vec<String>>),
}

impl Generators {
    fn rank(&self) -> Option<usize> {
        match self {
            Generators::Ideal(_) => Some(1),
            Generators::Vectors(v) => v.first().map(|c| c.len()),
        }
    }

    fn submodule(&self, f: &FreeModule) -> Result<SubmoduleOfFree> {
        let ring = f.ring();
        let gens = match self {
            Generators::Ideal(text) => Ideal::parse(ring, text)?
                .generators()
                .iter()
                .map(|g| vec![g.clone()])
                .collect(),
            Generators::Vectors(vs) => {
                if vs.iter().any(|v| v.len() != f.rank()) {
                    return Err(Error::Parse(
                        "subquotient vectors have different lengths".into(),
                    ));
                }
                vs.iter()
                    .map(|v| v.iter().map(|e| parse_poly(ring, e)).collect())
                    .collect::<Result<_>>()?
            }
        };
        SubmoduleOfFree::new(f, gens)
    }
}

/// A scenario object: a module and, for `quotient` and `ideal` objects, the
/// ideal it was built from.
#[derive(Clone, Debug)]
pub struct Object {
    pub module: PresentedModule,
    pub ideal: Option<Ideal>,
}

/// Integers that may also be `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ExpectedInt {
    Finite(i64),
    Text(InfText),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InfText {
    Inf,
}

impl From<ExpectedInt> for ExtendedInt {
    fn from(e: ExpectedInt) -> ExtendedInt {
        match e {
            ExpectedInt::Finite(n) => ExtendedInt::Finite(n),
            ExpectedInt::Text(_) => ExtendedInt::Infinite,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtExpect {
    pub zero: Option<bool>,
    pub annihilator: Option<String>,
    /// The module is `R/J`: cyclic with annihilator `J`.
    pub cyclic_quotient: Option<String>,
    /// Same Hilbert series as the named object, up to a degree shift.
    pub hilbert_like: Option<String>,
    /// Exact Hilbert series in display form.
    pub hilbert: Option<String>,
    pub mu: Option<usize>,
    pub dim: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageExpect {
    pub step: usize,
    /// Columns of a matrix whose image must equal the image of the
    /// differential `d_step`.
    pub columns: Vec<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveExpect {
    pub betti: Option<Vec<usize>>,
    pub betti_prefix: Option<Vec<usize>>,
    pub pd: Option<i64>,
    pub finite: Option<bool>,
    pub image: Option<ImageExpect>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsExpect {
    pub d: Option<i64>,
    pub g: Option<ExpectedInt>,
    pub t: Option<ExpectedInt>,
    pub r: Option<i64>,
    pub pd: Option<i64>,
    pub mu: Option<usize>,
    pub betti: Option<Vec<usize>>,
    pub ann: Option<String>,
    /// Compared up to radical.
    pub gamma: Option<String>,
    pub hann: Option<String>,
    pub cohen_macaulay: Option<bool>,
    pub perfect: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimesExpect {
    pub primes: Option<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportExpect {
    pub equal: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssExpect {
    pub contained: Option<bool>,
    pub equal: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimFormulaExpect {
    pub hypotheses_hold: Option<bool>,
    pub conclusion_holds: Option<bool>,
    pub support_equal: Option<bool>,
    pub support_differs_despite_formula: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoldsExpect {
    pub holds: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorCountExpect {
    pub all_hold: Option<bool>,
    pub mu_ext2: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftExpect {
    pub all_match: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EassExpect {
    pub periodic_start: Option<usize>,
    pub period: Option<usize>,
    /// Indices at which the probe must lie in `rad Ann Ext^i`.
    pub probe_in_radical_at: Option<Vec<usize>>,
}

fn ring_name() -> String {
    "R".to_string()
}

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum TaskSpec {
    /// `Ext^index(module, over)`.
    Ext {
        module: String,
        #[serde(default = "ring_name")]
        over: String,
        index: usize,
        label: Option<String>,
        #[serde(default)]
        expect: ExtExpect,
    },
    /// `Ext^{i_1}(… Ext^{i_p}(module, R) …, R)`.
    IteratedExt {
        module: String,
        path: Vec<usize>,
        label: Option<String>,
        #[serde(default)]
        expect: ExtExpect,
    },
    Resolve {
        module: String,
        up_to: Option<usize>,
        label: Option<String>,
        #[serde(default)]
        expect: ResolveExpect,
    },
    Invariants {
        module: String,
        label: Option<String>,
        #[serde(default)]
        expect: InvariantsExpect,
    },
    /// Union of the minimal primes of `Ann Ext^i(module, R)` over the window.
    ExtMinimalPrimes {
        module: String,
        window: Option<usize>,
        label: Option<String>,
        #[serde(default)]
        expect: PrimesExpect,
    },
    SupportCheck {
        module: String,
        #[serde(default = "ring_name")]
        over: String,
        window: Option<usize>,
        label: Option<String>,
        #[serde(default)]
        expect: SupportExpect,
    },
    AssOracle {
        module: String,
        label: Option<String>,
        #[serde(default)]
        expect: AssExpect,
    },
    DimFormula {
        module: String,
        label: Option<String>,
        #[serde(default)]
        expect: DimFormulaExpect,
    },
    ExtBound {
        module: String,
        #[serde(default = "ring_name")]
        over: String,
        label: Option<String>,
        #[serde(default)]
        expect: HoldsExpect,
    },
    GeneratorCount {
        ideal: String,
        label: Option<String>,
        #[serde(default)]
        expect: GeneratorCountExpect,
    },
    ShiftCheck {
        ideal: String,
        index: usize,
        label: Option<String>,
        #[serde(default)]
        expect: ShiftExpect,
    },
    Eass {
        ideal: String,
        window: usize,
        probe: Option<String>,
        label: Option<String>,
        #[serde(default)]
        expect: EassExpect,
    },
}

impl TaskSpec {
    pub fn op(&self) -> &'static str {
        match self {
            TaskSpec::Ext { .. } => "ext",
            TaskSpec::IteratedExt { .. } => "iterated_ext",
            TaskSpec::Resolve { .. } => "resolve",
            TaskSpec::Invariants { .. } => "invariants",
            TaskSpec::ExtMinimalPrimes { .. } => "ext_minimal_primes",
            TaskSpec::SupportCheck { .. } => "support_check",
            TaskSpec::AssOracle { .. } => "ass_oracle",
            TaskSpec::DimFormula { .. } => "dim_formula",
            TaskSpec::ExtBound { .. } => "ext_bound",
            TaskSpec::GeneratorCount { .. } => "generator_count",
            TaskSpec::ShiftCheck { .. } => "shift_check",
            TaskSpec::Eass { .. } => "eass",
        }
    }

    fn label(&self) -> String {
        let (given, default) = match self {
            TaskSpec::Ext {
                label,
                module,
                over,
                index,
                ..
            } => (label, format!("Ext^{index}({module}, {over})")),
            TaskSpec::IteratedExt {
                label,
                module,
                path,
                ..
            } => {
                let p: Vec<String> = path.iter().map(|i| i.to_string()).collect();
                (label, format!("{module}_({})", p.join(",")))
            }
            TaskSpec::Resolve { label, module, .. } => (label, format!("resolution of {module}")),
            TaskSpec::Invariants { label, module, .. } => {
                (label, format!("invariants of {module}"))
            }
            TaskSpec::ExtMinimalPrimes { label, module, .. } => {
                (label, format!("Min Ann Ext({module}, R)"))
            }
            TaskSpec::SupportCheck {
                label,
                module,
                over,
                ..
            } => (label, format!("support of {module} against {over}")),
            TaskSpec::AssOracle { label, module, .. } => {
                (label, format!("Ass oracle for {module}"))
            }
            TaskSpec::DimFormula { label, module, .. } => {
                (label, format!("dimension formula for {module}"))
            }
            TaskSpec::ExtBound {
                label,
                module,
                over,
                ..
            } => (label, format!("dim Ext({module}, {over}) bound")),
            TaskSpec::GeneratorCount { label, ideal, .. } => {
                (label, format!("generator counts for {ideal}"))
            }
            TaskSpec::ShiftCheck {
                label,
                ideal,
                index,
                ..
            } => (
                label,
                format!(
                    "Ext^{index}(I, R) vs Ext^{}(R/I, R) for I = {ideal}",
                    index + 1
                ),
            ),
            TaskSpec::Eass { label, ideal, .. } => (label, format!("eAss experiment for {ideal}")),
        };
        given.clone().unwrap_or(default)
    }
}

/// A scenario with its ring and objects built and every reference checked.
#[derive(Debug)]
pub struct Plan {
    pub name: String,
    pub ring: RingSpec,
    pub objects: BTreeMap<String, Object>,
    pub tasks: Vec<TaskSpec>,
}

pub fn load(path: &Path, settings: &Settings) -> Result<Plan> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    parse(&text, json, settings)
}

pub fn parse(text: &str, json: bool, settings: &Settings) -> Result<Plan> {
    let scenario: Scenario = if json {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
    };
    plan(scenario, settings)
}

fn parse_err(context: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{context}: {m}")),
        other => Error::Parse(format!("{context}: {other}")),
    }
}

pub fn plan(scenario: Scenario, settings: &Settings) -> Result<Plan> {
    let ring = settings
        .ring(&scenario.ring)
        .map_err(|e| parse_err("ring", e))?;
    let mut objects = BTreeMap::new();
    for (name, spec) in &scenario.objects {
        if name == "R" || name == "0" {
            return Err(Error::Parse(format!("object name {name} is reserved")));
        }
        let obj = build_object(&ring, spec).map_err(|e| parse_err(&format!("object {name}"), e))?;
        objects.insert(name.clone(), obj);
    }
    let plan = Plan {
        name: scenario.name,
        ring,
        objects,
        tasks: scenario.tasks,
    };
    for (i, t) in plan.tasks.iter().enumerate() {
        validate(&plan, t).map_err(|e| parse_err(&format!("task {i} ({})", t.op()), e))?;
    }
    Ok(plan)
}

pub fn build_object(ring: &RingSpec, spec: &ObjectSpec) -> Result<Object> {
    let set = [
        spec.quotient.is_some(),
        spec.ideal.is_some(),
        spec.subquotient.is_some(),
        spec.matrix.is_some(),
        spec.free.is_some(),
        spec.zero.is_some(),
    ];
    if set.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::Parse(
            "give exactly one of quotient, ideal, subquotient, matrix, free, zero".into(),
        ));
    }
    if spec.matrix.is_none() && (spec.source_twists.is_some() || spec.target_twists.is_some()) {
        return Err(Error::Parse("twists only apply to matrix objects".into()));
    }
    if let Some(text) = &spec.quotient {
        let i = Ideal::parse(ring, text)?;
        return Ok(Object {
            module: PresentedModule::cyclic(&i)?,
            ideal: Some(i),
        });
    }
    if let Some(text) = &spec.ideal {
        let i = Ideal::parse(ring, text)?;
        return Ok(Object {
            module: PresentedModule::ideal_module(&i)?,
            ideal: Some(i),
        });
    }
    if let Some(sq) = &spec.subquotient {
        let rank = sq.numerator.rank().or(sq.denominator.rank()).unwrap_or(1);
        let f = FreeModule::standard(ring, rank);
        let module = subquotient(&sq.numerator.submodule(&f)?, &sq.denominator.submodule(&f)?)?;
        return Ok(Object {
            module,
            ideal: None,
        });
    }
    if let Some(rows) = &spec.matrix {
        return Ok(Object {
            module: matrix_module(
                ring,
                rows,
                spec.target_twists.clone(),
                spec.source_twists.clone(),
            )?,
            ideal: None,
        });
    }
    if let Some(n) = spec.free {
        return Ok(Object {
            module: PresentedModule::free(&FreeModule::standard(ring, n)),
            ideal: None,
        });
    }
    if spec.zero == Some(true) {
        return Ok(Object {
            module: PresentedModule::zero(ring),
            ideal: None,
        });
    }
    Err(Error::Parse("zero = false describes no object".into()))
}

fn parse_poly(ring: &RingSpec, text: &str) -> Result<Polynomial> {
    Polynomial::parse(ring.base(), text)
}

/// Cokernel of a matrix given by rows. Without `source_twists` the column
/// degrees are inferred from the entries.
pub fn matrix_module(
    ring: &RingSpec,
    rows: &[Vec<String>],
    target_twists: Option<Vec<i64>>,
    source_twists: Option<Vec<i64>>,
) -> Result<PresentedModule> {
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    let tt = target_twists.unwrap_or_else(|| vec![0; rows.len()]);
    if tt.len() != rows.len() {
        return Err(Error::Parse(
            "target_twists length differs from the number of rows".into(),
        ));
    }
    let target = FreeModule::new(ring, tt);
    let entries: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_poly(ring, e)).collect())
        .collect::<Result<_>>()?;
    let map = match source_twists {
        Some(st) => ModuleMap::from_rows(FreeModule::new(ring, st), target, entries)?,
        None => {
            let columns = (0..ncols)
                .map(|j| entries.iter().map(|r| r[j].clone()).collect())
                .collect();
            ModuleMap::from_generators(&target, columns)?
        }
    };
    Ok(PresentedModule::cokernel(map))
}

/// Resolve a module reference: an object name, `R` or `0`.
pub fn module_ref(plan: &Plan, name: &str) -> Result<PresentedModule> {
    match name {
        "R" => Ok(PresentedModule::ring_module(&plan.ring)),
        "0" => Ok(PresentedModule::zero(&plan.ring)),
        _ => plan
            .objects
            .get(name)
            .map(|o| o.module.clone())
            .ok_or_else(|| Error::Parse(format!("unknown object {name}"))),
    }
}

fn ideal_ref(plan: &Plan, name: &str) -> Result<Ideal> {
    match plan.objects.get(name) {
        Some(Object { ideal: Some(i), .. }) => Ok(i.clone()),
        Some(_) => Err(Error::Parse(format!(
            "object {name} is not built from an ideal"
        ))),
        None => Err(Error::Parse(format!("unknown object {name}"))),
    }
}

fn check_ideal_text(plan: &Plan, text: &Option<String>) -> Result<()> {
    if let Some(t) = text {
        Ideal::parse(&plan.ring, t)?;
    }
    Ok(())
}

fn validate_ext_expect(plan: &Plan, e: &ExtExpect) -> Result<()> {
    check_ideal_text(plan, &e.annihilator)?;
    check_ideal_text(plan, &e.cyclic_quotient)?;
    if let Some(o) = &e.hilbert_like {
        module_ref(plan, o)?;
    }
    Ok(())
}

fn validate(plan: &Plan, task: &TaskSpec) -> Result<()> {
    match task {
        TaskSpec::Ext {
            module,
            over,
            expect,
            ..
        } => {
            module_ref(plan, module)?;
            module_ref(plan, over)?;
            validate_ext_expect(plan, expect)
        }
        TaskSpec::IteratedExt { module, expect, .. } => {
            module_ref(plan, module)?;
            validate_ext_expect(plan, expect)
        }
        TaskSpec::Resolve { module, expect, .. } => {
            module_ref(plan, module)?;
            if let Some(img) = &expect.image {
                for c in &img.columns {
                    for e in c {
                        parse_poly(&plan.ring, e)?;
                    }
                }
            }
            Ok(())
        }
        TaskSpec::Invariants { module, expect, .. } => {
            module_ref(plan, module)?;
            check_ideal_text(plan, &expect.ann)?;
            check_ideal_text(plan, &expect.gamma)?;
            check_ideal_text(plan, &expect.hann)
        }
        TaskSpec::ExtMinimalPrimes { module, expect, .. } => {
            module_ref(plan, module)?;
            for p in expect.primes.iter().flatten() {
                Ideal::parse(&plan.ring, p)?;
            }
            Ok(())
        }
        TaskSpec::SupportCheck { module, over, .. } | TaskSpec::ExtBound { module, over, .. } => {
            module_ref(plan, module)?;
            module_ref(plan, over).map(|_| ())
        }
        TaskSpec::AssOracle { module, .. } | TaskSpec::DimFormula { module, .. } => {
            module_ref(plan, module).map(|_| ())
        }
        TaskSpec::GeneratorCount { ideal, .. } | TaskSpec::ShiftCheck { ideal, .. } => {
            ideal_ref(plan, ideal).map(|_| ())
        }
        TaskSpec::Eass {
            ideal,
            window,
            probe,
            ..
        } => {
            ideal_ref(plan, ideal)?;
            if *window < 4 {
                return Err(Error::Parse(format!(
                    "eass window must be at least 4, got {window}"
                )));
            }
            check_ideal_text(plan, probe)
        }
    }
}

fn ideal_strings(i: &Ideal) -> Result<Vec<String>> {
    Ok(i.canonical_generators()?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

fn ideal_check(plan: &Plan, quantity: &str, computed: &Ideal, expected: &str) -> Result<Check> {
    let e = Ideal::parse(&plan.ring, expected)?;
    Ok(Check::new(
        quantity,
        ideal_strings(computed)?,
        expected,
        computed.equals(&e)?,
    ))
}

fn opt_check<T: PartialEq + serde::Serialize>(
    checks: &mut Vec<Check>,
    quantity: &str,
    computed: T,
    expected: Option<T>,
) {
    if let Some(e) = expected {
        let pass = computed == e;
        checks.push(Check::new(quantity, computed, e, pass));
    }
}

fn ext_checks(plan: &Plan, e: &ExtResult, expect: &ExtExpect) -> Result<(Vec<Check>, Evidence)> {
    let mut checks = Vec::new();
    let mut evidence = Evidence::Exact;
    let m = e.module();
    opt_check(&mut checks, "zero", e.is_zero()?, expect.zero);
    if let Some(a) = &expect.annihilator {
        checks.push(ideal_check(plan, "annihilator", &e.annihilator()?, a)?);
    }
    if let Some(q) = &expect.cyclic_quotient {
        let ann = e.annihilator()?;
        let mu = m.mu()?;
        let j = Ideal::parse(&plan.ring, q)?;
        checks.push(Check::new(
            "isomorphic to R/J up to shift",
            json!({"mu": mu, "annihilator": ideal_strings(&ann)?}),
            json!({"mu": 1, "annihilator": q}),
            mu == 1 && ann.equals(&j)?,
        ));
    }
    if let Some(h) = &expect.hilbert {
        let computed = HilbertSeries::of_module(m)?.to_string();
        let pass = &computed == h;
        checks.push(Check::new("hilbert series", computed, h, pass));
    }
    if let Some(o) = &expect.hilbert_like {
        let mine = HilbertSeries::of_module(m)?;
        let theirs = HilbertSeries::of_module(&module_ref(plan, o)?)?;
        checks.push(Check::new(
            format!("hilbert series up to shift vs {o}"),
            mine.to_string(),
            theirs.to_string(),
            mine.shift_normalized() == theirs.shift_normalized(),
        ));
        evidence = Evidence::InvariantLevel;
    }
    opt_check(&mut checks, "mu", m.mu()?, expect.mu);
    if let Some(d) = expect.dim {
        checks.push(Check::new(
            "dim",
            module_dimension(m)?,
            d,
            module_dimension(m)? == d,
        ));
    }
    Ok((checks, evidence))
}

fn window_warning(e: &ExtResult) -> Vec<String> {
    match e.window_valid_up_to() {
        Some(w) if w < e.index() => vec![format!(
            "resolution window ends at {w}, below index {}",
            e.index()
        )],
        _ => Vec::new(),
    }
}

/// Run one task. Errors are hard failures; mismatches are recorded in the
/// outcome.
pub fn run_task(plan: &Plan, task: &TaskSpec) -> Result<TaskOutcome> {
    let label = task.label();
    let op = task.op();
    match task {
        TaskSpec::Ext {
            module,
            over,
            index,
            expect,
            ..
        } => {
            let m = module_ref(plan, module)?;
            let n = module_ref(plan, over)?;
            let res = free_resolution(&m, index + 1, true)?;
            let e = ext_from_resolution(&res, &n, *index)?;
            let (checks, evidence) = ext_checks(plan, &e, expect)?;
            let warnings = window_warning(&e);
            Ok(
                TaskOutcome::new(op, label, evidence, checks, to_value(e.report()?))
                    .with_warnings(warnings),
            )
        }
        TaskSpec::IteratedExt {
            module,
            path,
            expect,
            ..
        } => {
            let e = iterated_ext(&module_ref(plan, module)?, path)?;
            let (checks, evidence) = ext_checks(plan, &e, expect)?;
            Ok(TaskOutcome::new(
                op,
                label,
                evidence,
                checks,
                to_value(e.report()?),
            ))
        }
        TaskSpec::Resolve {
            module,
            up_to,
            expect,
            ..
        } => {
            let m = module_ref(plan, module)?;
            let top = match up_to {
                Some(k) => *k,
                None => plan.ring.nvars() + 1,
            };
            let res = free_resolution(&m, top, true)?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "betti", res.betti(), expect.betti.clone());
            if let Some(prefix) = &expect.betti_prefix {
                let b = res.betti();
                let pass = b.len() >= prefix.len() && b[..prefix.len()] == prefix[..];
                checks.push(Check::new(
                    "betti prefix",
                    &b[..prefix.len().min(b.len())],
                    prefix,
                    pass,
                ));
            }
            opt_check(&mut checks, "pd", res.pd(), expect.pd.map(Some));
            opt_check(&mut checks, "finite", res.is_finite(), expect.finite);
            if let Some(img) = &expect.image {
                checks.push(image_check(plan, &res, img)?);
            }
            let warnings = match res.truncated_at() {
                Some(k) => vec![format!(
                    "resolution truncated at step {k}; ranks beyond it were not computed"
                )],
                None => Vec::new(),
            };
            Ok(
                TaskOutcome::new(op, label, Evidence::Exact, checks, to_value(res.report()))
                    .with_warnings(warnings),
            )
        }
        TaskSpec::Invariants { module, expect, .. } => {
            let m = module_ref(plan, module)?;
            let rep = invariant_report(&m, module)?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "d", rep.d, expect.d);
            opt_check(&mut checks, "g", rep.g, expect.g.map(Into::into));
            opt_check(&mut checks, "t", rep.t, expect.t.map(Into::into));
            opt_check(&mut checks, "r", rep.r, expect.r);
            opt_check(&mut checks, "pd", rep.pd, expect.pd.map(Some));
            opt_check(&mut checks, "mu", rep.mu, expect.mu);
            opt_check(
                &mut checks,
                "betti",
                rep.betti.clone(),
                expect.betti.clone(),
            );
            opt_check(
                &mut checks,
                "cohen_macaulay",
                rep.flags.cohen_macaulay,
                expect.cohen_macaulay.map(Some),
            );
            opt_check(
                &mut checks,
                "perfect",
                rep.flags.perfect,
                expect.perfect.map(Some),
            );
            let as_ideal =
                |gens: &[String]| Ideal::parse(&plan.ring, &format!("({})", gens.join(", ")));
            if let Some(a) = &expect.ann {
                checks.push(ideal_check(plan, "ann", &as_ideal(&rep.ann)?, a)?);
            }
            if let Some(h) = &expect.hann {
                checks.push(ideal_check(plan, "hann", &as_ideal(&rep.hann)?, h)?);
            }
            if let Some(g) = &expect.gamma {
                let computed = as_ideal(&rep.gamma)?;
                let pass = computed.radical_equals(&Ideal::parse(&plan.ring, g)?)?;
                checks.push(Check::new("gamma (up to radical)", &rep.gamma, g, pass));
            }
            let mut warnings = Vec::new();
            if !rep.window.complete {
                warnings.push(format!(
                    "resolution did not end within the window 0..={}; sup of nonvanishing Ext is unknown",
                    rep.window.up_to
                ));
            }
            Ok(
                TaskOutcome::new(op, label, Evidence::Exact, checks, to_value(&rep))
                    .with_warnings(warnings),
            )
        }
        TaskSpec::ExtMinimalPrimes {
            module,
            window,
            expect,
            ..
        } => {
            let m = module_ref(plan, module)?;
            let profile = match window {
                Some(w) => ExtProfile::new(&m, *w)?,
                None => ExtProfile::standard(&m)?,
            };
            let mut union: Vec<Ideal> = Vec::new();
            let mut per_index = Vec::new();
            for i in profile.nonvanishing() {
                let ann = profile.annihilator(i)?;
                let primes = ann.minimal_primes()?;
                let mut names = Vec::new();
                for p in primes {
                    let pi = p.to_ideal(&plan.ring)?;
                    names.push(p.to_string());
                    if !union.iter().any(|q| q.equals(&pi).unwrap_or(false)) {
                        union.push(pi);
                    }
                }
                per_index.push(json!({"index": i, "minimal_primes": names}));
            }
            let union_text = union
                .iter()
                .map(|p| Ok(format!("({})", ideal_strings(p)?.join(", "))))
                .collect::<Result<Vec<_>>>()?;
            let mut checks = Vec::new();
            if let Some(expected) = &expect.primes {
                let parsed = expected
                    .iter()
                    .map(|p| Ideal::parse(&plan.ring, p))
                    .collect::<Result<Vec<_>>>()?;
                let covered = |a: &[Ideal], b: &[Ideal]| -> Result<bool> {
                    for x in a {
                        let mut found = false;
                        for y in b {
                            if x.equals(y)? {
                                found = true;
                                break;
                            }
                        }
                        if !found {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                };
                let pass = covered(&union, &parsed)? && covered(&parsed, &union)?;
                checks.push(Check::new(
                    "union of minimal primes",
                    &union_text,
                    expected,
                    pass,
                ));
            }
            let computed = json!({"window": profile.top(), "complete": profile.is_complete(), "per_index": per_index, "union": union_text});
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                computed,
            ))
        }
        TaskSpec::SupportCheck {
            module,
            over,
            window,
            expect,
            ..
        } => {
            let rep = homological_support_check(
                &module_ref(plan, module)?,
                &module_ref(plan, over)?,
                *window,
            )?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "supports equal", rep.equal, expect.equal);
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::AssOracle { module, expect, .. } => {
            let rep = ass_oracle(&module_ref(plan, module)?)?;
            let mut checks = Vec::new();
            opt_check(
                &mut checks,
                "contained",
                rep.contained,
                expect.contained.map(Some),
            );
            opt_check(&mut checks, "equal", rep.equal, expect.equal.map(Some));
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::DimFormula { module, expect, .. } => {
            let rep = dim_formula_check(&module_ref(plan, module)?)?;
            let mut checks = Vec::new();
            opt_check(
                &mut checks,
                "hypotheses_hold",
                rep.hypotheses_hold,
                expect.hypotheses_hold,
            );
            opt_check(
                &mut checks,
                "conclusion_holds",
                rep.conclusion_holds,
                expect.conclusion_holds.map(Some),
            );
            opt_check(
                &mut checks,
                "support_equal",
                rep.support_equal,
                expect.support_equal.map(Some),
            );
            opt_check(
                &mut checks,
                "support_differs_despite_formula",
                rep.support_differs_despite_formula,
                expect.support_differs_despite_formula,
            );
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::ExtBound {
            module,
            over,
            expect,
            ..
        } => {
            let rep =
                ext_dimension_bound_check(&module_ref(plan, module)?, &module_ref(plan, over)?)?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "holds", rep.holds, expect.holds);
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::GeneratorCount { ideal, expect, .. } => {
            let rep = generator_count_check(&ideal_ref(plan, ideal)?)?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "all_hold", rep.all_hold(), expect.all_hold);
            opt_check(
                &mut checks,
                "mu_ext2",
                rep.mu_ext2,
                expect.mu_ext2.map(Some),
            );
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::ShiftCheck {
            ideal,
            index,
            expect,
            ..
        } => {
            let rep = ext_shift_check(&ideal_ref(plan, ideal)?, *index)?;
            let mut checks = Vec::new();
            opt_check(&mut checks, "all_match", rep.all_match, expect.all_match);
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::InvariantLevel,
                checks,
                to_value(&rep),
            ))
        }
        TaskSpec::Eass {
            ideal,
            window,
            probe,
            expect,
            ..
        } => {
            let probe = probe
                .as_deref()
                .map(|p| Ideal::parse(&plan.ring, p))
                .transpose()?;
            let rep = eass_experiment(&ideal_ref(plan, ideal)?, *window, probe.as_ref())?;
            let mut checks = Vec::new();
            let (start, period) = match rep.periodicity {
                Periodicity::Periodic { start, period } => (Some(start), Some(period)),
                _ => (None, None),
            };
            opt_check(
                &mut checks,
                "periodic_start",
                start,
                expect.periodic_start.map(Some),
            );
            opt_check(&mut checks, "period", period, expect.period.map(Some));
            if let Some(indices) = &expect.probe_in_radical_at {
                let got: Vec<Option<bool>> = indices
                    .iter()
                    .map(|&i| rep.steps.get(i).and_then(|s| s.probe_in_radical))
                    .collect();
                let pass = got.iter().all(|g| *g == Some(true));
                checks.push(Check::new(
                    "probe in rad Ann Ext^i",
                    got,
                    vec![true; indices.len()],
                    pass,
                ));
            }
            Ok(TaskOutcome::new(
                op,
                label,
                Evidence::Exact,
                checks,
                to_value(&rep),
            ))
        }
    }
}

fn image_check(
    plan: &Plan,
    res: &crate::complexes::Resolution,
    img: &ImageExpect,
) -> Result<Check> {
    if !res.covers(img.step) {
        return Err(Error::Truncated {
            available: res.length(),
            required: img.step,
        });
    }
    let d = res.differential(img.step);
    let target = d.target().clone();
    let expected = img
        .columns
        .iter()
        .map(|c| {
            c.iter()
                .map(|e| parse_poly(&plan.ring, e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if expected.iter().any(|c| c.len() != target.rank()) {
        return Ok(Check::new(
            format!("image of d_{}", img.step),
            crate::complexes::MatrixReport::from(&d),
            &img.columns,
            false,
        ));
    }
    let mine = SubmoduleOfFree::new(&target, d.columns().to_vec())?;
    let theirs = SubmoduleOfFree::new(&target, expected)?;
    Ok(Check::new(
        format!("image of d_{}", img.step),
        crate::complexes::MatrixReport::from(&d),
        &img.columns,
        mine.equals(&theirs)?,
    ))
}

/// Run every task of a validated plan, in declaration order.
pub fn run_plan(plan: &Plan, settings: &Settings) -> Result<Report> {
    let one = |t: &TaskSpec| -> Result<TaskOutcome> {
        let start = Instant::now();
        let mut out = run_task(plan, t)?;
        if settings.timings {
            out.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        Ok(out)
    };
    let tasks = if settings.parallel {
        plan.tasks.par_iter().map(one).collect::<Result<Vec<_>>>()?
    } else {
        plan.tasks.iter().map(one).collect::<Result<Vec<_>>>()?
    };
    Ok(Report::new(
        plan.name.clone(),
        plan.ring.to_string(),
        settings.defaults(),
        tasks,
    ))
}

/// Generators of a module reference given on the command line: `0`, `R`,
/// the empty string, or an ideal `I` meaning `R/I`.
pub fn inline_module(ring: &RingSpec, text: &str, as_ideal: bool) -> Result<PresentedModule> {
    let t = text.trim();
    match t {
        "0" => Ok(PresentedModule::zero(ring)),
        "" | "R" => Ok(PresentedModule::ring_module(ring)),
        _ => {
            let gens = parse_generators(ring.base(), t)?;
            let i = Ideal::new(ring, gens)?;
            if as_ideal {
                PresentedModule::ideal_module(&i)
            } else {
                PresentedModule::cyclic(&i)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> Settings {
        Settings::default()
    }

    #[test]
    fn unknown_task_is_rejected_at_parse_time() {
        let text = "name = \"x\"\n[[tasks]]\nop = \"frobnicate\"\nmodule = \"R\"\n";
        assert!(matches!(
            parse(text, false, &settings()),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn unknown_object_is_rejected_at_parse_time() {
        let text = "name = \"x\"\n[[tasks]]\nop = \"ext\"\nmodule = \"M\"\nindex = 1\n";
        assert!(matches!(
            parse(text, false, &settings()),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn unknown_field_is_rejected() {
        let text = "name = \"x\"\n[[tasks]]\nop = \"ext\"\nmodule = \"R\"\nindex = 1\ncolour = 3\n";
        assert!(matches!(
            parse(text, false, &settings()),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn bad_expected_ideal_is_a_parse_error() {
        let text = "name = \"x\"\n[objects.M]\nquotient = \"xy\"\n[[tasks]]\nop = \"ext\"\nmodule = \"M\"\nindex = 1\nexpect.annihilator = \"(x+\"\n";
        assert!(matches!(
            parse(text, false, &settings()),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn json_and_toml_agree() {
        let toml_text = "name = \"s\"\n[objects.M]\nquotient = \"(xy, xz)\"\n[[tasks]]\nop = \"ext\"\nmodule = \"M\"\nindex = 1\nexpect = { annihilator = \"(x)\" }\n";
        let json_text = r#"{"name":"s","objects":{"M":{"quotient":"(xy, xz)"}},"tasks":[{"op":"ext","module":"M","index":1,"expect":{"annihilator":"(x)"}}]}"#;
        let a = run_plan(&parse(toml_text, false, &settings()).unwrap(), &settings()).unwrap();
        let b = run_plan(&parse(json_text, true, &settings()).unwrap(), &settings()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.ok() && a.passed == 1);
    }

    #[test]
    fn matrix_object_infers_column_degrees() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let m = matrix_module(&r, &[vec!["x".into(), "y".into()]], None, None).unwrap();
        assert_eq!(m.presentation().source().twists(), &[1, 1]);
        let i = Ideal::parse(&r, "(x, y)").unwrap();
        assert!(m.annihilator().unwrap().equals(&i).unwrap());
    }
}
