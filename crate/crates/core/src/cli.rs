//! Command implementations behind the `bck` binary. Each command returns its
//! rendered output and an exit code instead of printing, so they can be
//! driven from tests.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::FiniteCbckAlgebra;
use crate::dot::{hasse_dot, tree_dot};
use crate::duality::{
    compact_open_lattice, is_lattice_iso, lattice_from_poset, poset_anti_iso, poset_iso,
    FiniteDistLattice, FinitePoset,
};
use crate::error::{
    ConstructionError, IdealError, OrderError, SpectrumError, TreeError,
};
use crate::format::{ParseError, Spec};
use crate::ideals::IdealGuard;
use crate::spectra::{spectrum, tree_spectrum, FiniteSpace};
use crate::tree::{tree_ideal_lattice, tree_prime_ideals, RootedTree};
use crate::verify::{run_all, run_suite, SUITES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExitCode {
    Ok = 0,
    MathFailure = 1,
    Parse = 2,
    Guard = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub format: Format,
    pub seed: u64,
    /// Largest algebra (elements) or tree (vertices) handled exhaustively.
    pub guard: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: Format::Json,
            seed: 0,
            guard: IdealGuard::default().max_elements,
        }
    }
}

impl Options {
    fn ideal_guard(&self) -> IdealGuard {
        IdealGuard::with_max_elements(self.guard)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub code: ExitCode,
}

impl Output {
    fn json(value: Value, code: ExitCode) -> Self {
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        Output { text, code }
    }

    fn dot(text: String, code: ExitCode) -> Self {
        Output { text, code }
    }

    fn error(code: ExitCode, kind: &str, message: String) -> Self {
        Self::json(json!({"error": kind, "message": message}), code)
    }
}

/// Errors from any layer, classified by exit code.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Guard(String),
    Math(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Axioms(_) => Failure::Math(e.to_string()),
            ParseError::Construction(ConstructionError::TooLarge(..))
            | ParseError::Order(OrderError::Guard(_))
            | ParseError::Tree(TreeError::Guard(_)) => Failure::Guard(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Guard(_) => Failure::Guard(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl From<SpectrumError> for Failure {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::Guard(_)
            | SpectrumError::Ideal(IdealError::Guard(_))
            | SpectrumError::Tree(TreeError::Guard(_)) => Failure::Guard(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::Guard(_) => Failure::Guard(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl From<OrderError> for Failure {
    fn from(e: OrderError) -> Self {
        match e {
            OrderError::Guard(_) => Failure::Guard(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

fn finish(result: Result<Output, Failure>) -> Output {
    match result {
        Ok(out) => out,
        Err(Failure::Parse(m)) => Output::error(ExitCode::Parse, "parse", m),
        Err(Failure::Guard(m)) => Output::error(ExitCode::Guard, "guard", m),
        Err(Failure::Math(m)) => Output::error(ExitCode::MathFailure, "math", m),
    }
}

fn parse(input: &str) -> Result<Spec, Failure> {
    Ok(Spec::parse(input)?)
}

fn tree_guard(t: &RootedTree, opts: &Options) -> Result<(), Failure> {
    if t.len() > opts.guard {
        return Err(Failure::Guard(format!(
            "tree has {} vertices, above the guard of {}",
            t.len(),
            opts.guard
        )));
    }
    Ok(())
}

fn algebra_guard(a: &FiniteCbckAlgebra, opts: &Options) -> Result<(), Failure> {
    if a.size() > opts.guard {
        return Err(Failure::Guard(format!(
            "algebra has {} elements, above the guard of {}",
            a.size(),
            opts.guard
        )));
    }
    Ok(())
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn matrix(p: &FinitePoset) -> Value {
    json!(p.to_matrix())
}

/// `bck check`: axioms, then structural flags for valid algebras.
pub fn cmd_check(input: &str, opts: &Options) -> Output {
    finish((|| {
        let spec = parse(input)?;
        let cand = spec.candidate_table()?;
        if !cand.report.passed() {
            return Ok(Output::json(
                json!({"axioms": {"passed": false, "failures": cand.report.failures}}),
                ExitCode::MathFailure,
            ));
        }
        let a = spec.to_algebra()?;
        algebra_guard(&a, opts)?;
        let g = opts.ideal_guard();
        if opts.format == Format::Dot {
            let order = FinitePoset::from_fn(a.size(), |x, y| a.leq(x, y))?;
            return Ok(Output::dot(
                hasse_dot("order", &order, &labels(a.size()), &[]),
                ExitCode::Ok,
            ));
        }
        let inv = a.involutory_report(&g)?;
        Ok(Output::json(
            json!({
                "size": a.size(),
                "axioms": {"passed": true, "failures": []},
                "involutory": inv.involutory,
                "simple": a.is_simple(&g)?,
                "bounded": a.top().is_some(),
                "top": a.top(),
                "directed": a.is_directed(),
                "chain": a.is_chain(),
                "dcc": a.satisfies_dcc(),
            }),
            ExitCode::Ok,
        ))
    })())
}

/// `bck ideals`: the ideal lattice with primes and maximal ideals marked.
pub fn cmd_ideals(input: &str, opts: &Options) -> Output {
    finish((|| {
        let spec = parse(input)?;
        if let Spec::Tree { .. } = spec {
            let t = spec.to_tree()?;
            tree_guard(&t, opts)?;
            return tree_ideals(&t, opts);
        }
        let a = spec.to_algebra()?;
        algebra_guard(&a, opts)?;
        let l = a.all_ideals(&opts.ideal_guard())?;
        if opts.format == Format::Dot {
            let names: Vec<String> = l
                .ideals()
                .iter()
                .map(|i| format!("{:?}", i.members()))
                .collect();
            let marked: Vec<bool> = (0..l.len()).map(|i| l.is_prime(i)).collect();
            let p = l.to_lattice().poset();
            return Ok(Output::dot(hasse_dot("ideals", &p, &names, &marked), ExitCode::Ok));
        }
        let ideals: Vec<Value> = (0..l.len())
            .map(|i| {
                json!({
                    "members": l.get(i).members(),
                    "prime": l.is_prime(i),
                    "maximal": l.is_maximal(i),
                })
            })
            .collect();
        Ok(Output::json(
            json!({
                "count": l.len(),
                "primes": l.primes().count(),
                "ideals": ideals,
                "lattice": matrix(&l.to_lattice().poset()),
            }),
            ExitCode::Ok,
        ))
    })())
}

fn tree_ideals(t: &RootedTree, opts: &Options) -> Result<Output, Failure> {
    let l = tree_ideal_lattice(t)?;
    if opts.format == Format::Dot {
        let names: Vec<String> = l.ideals().iter().map(|r| r.name(t)).collect();
        let marked: Vec<bool> = l.ideals().iter().map(|r| r.is_prime()).collect();
        return Ok(Output::dot(
            hasse_dot("ideals", &l.lattice().poset(), &names, &marked),
            ExitCode::Ok,
        ));
    }
    let ideals: Vec<Value> = l
        .ideals()
        .iter()
        .map(|r| json!({"ideal": r, "name": r.name(t), "prime": r.is_prime()}))
        .collect();
    Ok(Output::json(
        json!({
            "count": l.len(),
            "primes": l.primes().len(),
            "ideals": ideals,
            "lattice": matrix(&l.lattice().poset()),
        }),
        ExitCode::Ok,
    ))
}

fn space_checks(space: &FiniteSpace, order: &FinitePoset) -> Result<Value, Failure> {
    Ok(json!({
        "t0": space.check_t0(),
        "quasi_sober": space.check_quasi_sober(),
        "multiplicative_basis": space.check_multiplicative_basis(),
        "compact": space.check_compact(),
        "spectral": space.check_spectral(),
        "priestley": space.check_priestley(order)?,
        "noetherian": space.check_noetherian(),
        "hausdorff": space.check_hausdorff(),
    }))
}

/// `bck spectrum`: points, opens, topological checks and the
/// specialization order.
pub fn cmd_spectrum(input: &str, opts: &Options) -> Output {
    finish((|| {
        let spec = parse(input)?;
        let (space, order) = if let Spec::Tree { .. } = spec {
            let t = spec.to_tree()?;
            tree_guard(&t, opts)?;
            let s = tree_spectrum(&t)?;
            (s.space().clone(), s.inclusion_order())
        } else {
            let a = spec.to_algebra()?;
            algebra_guard(&a, opts)?;
            let s = spectrum(&a, &opts.ideal_guard())?;
            (s.space().clone(), s.inclusion_order())
        };
        let special = space.specialization_order()?;
        if opts.format == Format::Dot {
            let closed: Vec<bool> = {
                let cp = space.closed_points();
                (0..space.len()).map(|p| cp.contains(&p)).collect()
            };
            return Ok(Output::dot(
                hasse_dot("specialization", &special, space.labels(), &closed),
                ExitCode::Ok,
            ));
        }
        let checks = space_checks(&space, &order)?;
        Ok(Output::json(
            json!({
                "space": space.to_report(),
                "checks": checks,
                "specialization": matrix(&special),
                "closed_points": space.closed_points(),
            }),
            ExitCode::Ok,
        ))
    })())
}

/// `bck tree`: structure of `A^T` read off the tree.
pub fn cmd_tree(input: &str, opts: &Options) -> Output {
    finish((|| {
        let t = parse(input)?.to_tree()?;
        tree_guard(&t, opts)?;
        if opts.format == Format::Dot {
            return Ok(Output::dot(tree_dot(&t), ExitCode::Ok));
        }
        let l = tree_ideal_lattice(&t)?;
        let (primes, prime_ideals) = tree_prime_ideals(&t);
        let anti = poset_anti_iso(&primes, &t.ancestor_poset())?.is_some();
        let distributive = l.lattice().check_distributive().is_ok();
        let kx = compact_open_lattice(tree_spectrum(&t)?.space());
        let birkhoff = lattice_from_poset(&t.ancestor_poset().dual())?;
        let culminates = is_lattice_iso(&kx, &birkhoff)?;
        let ok = anti && distributive && culminates;
        Ok(Output::json(
            json!({
                "vertices": t.len(),
                "parents": t.parents(),
                "leaves": t.leaves(),
                "ideals": l.len(),
                "primes": prime_ideals,
                "checks": {
                    "primes_anti_isomorphic_to_tree": anti,
                    "ideal_lattice_distributive": distributive,
                    "kx_is_down_sets_of_dual": culminates,
                },
            }),
            if ok { ExitCode::Ok } else { ExitCode::MathFailure },
        ))
    })())
}

fn lattice_report(l: &FiniteDistLattice, opts: &Options, name: &str) -> Result<Output, Failure> {
    let mi = l.meet_irreducible_elements();
    if opts.format == Format::Dot {
        let marked: Vec<bool> = (0..l.len()).map(|i| mi.contains(&i)).collect();
        return Ok(Output::dot(
            hasse_dot(name, &l.poset(), &labels(l.len()), &marked),
            ExitCode::Ok,
        ));
    }
    let mi_poset = l.meet_irreducibles();
    let round = lattice_from_poset(&mi_poset)?;
    let round_trip = is_lattice_iso(&round, l)?;
    Ok(Output::json(
        json!({
            "lattice": matrix(&l.poset()),
            "meet_irreducible_elements": mi,
            "meet_irreducibles": matrix(&mi_poset),
            "tree_dual": mi_poset.is_rooted_tree_dual(),
            "round_trip": round_trip,
        }),
        if round_trip { ExitCode::Ok } else { ExitCode::MathFailure },
    ))
}

/// `bck duality`: Birkhoff round trips, and `KX ≅ id` for algebras and trees.
pub fn cmd_duality(input: &str, opts: &Options) -> Output {
    finish((|| {
        let spec = parse(input)?;
        match &spec {
            Spec::Poset { .. } => {
                let p = spec.to_poset()?;
                let l = lattice_from_poset(&p)?;
                if opts.format == Format::Dot {
                    return lattice_report(&l, opts, "down_sets");
                }
                let round_trip = poset_iso(&l.meet_irreducibles(), &p)?.is_some();
                Ok(Output::json(
                    json!({
                        "lattice": matrix(&l.poset()),
                        "meet_irreducibles": matrix(&l.meet_irreducibles()),
                        "round_trip": round_trip,
                    }),
                    if round_trip { ExitCode::Ok } else { ExitCode::MathFailure },
                ))
            }
            Spec::Tree { .. } => {
                let t = spec.to_tree()?;
                tree_guard(&t, opts)?;
                let kx = compact_open_lattice(tree_spectrum(&t)?.space());
                if opts.format == Format::Dot {
                    return lattice_report(&kx, opts, "kx");
                }
                let id = tree_ideal_lattice(&t)?;
                let birkhoff = lattice_from_poset(&t.ancestor_poset().dual())?;
                let kx_id = is_lattice_iso(&kx, id.lattice())?;
                let kx_birkhoff = is_lattice_iso(&kx, &birkhoff)?;
                Ok(Output::json(
                    json!({
                        "kx": matrix(&kx.poset()),
                        "kx_is_id": kx_id,
                        "kx_is_down_sets_of_dual": kx_birkhoff,
                    }),
                    if kx_id && kx_birkhoff { ExitCode::Ok } else { ExitCode::MathFailure },
                ))
            }
            s if s.is_algebra() => {
                let a = spec.to_algebra()?;
                algebra_guard(&a, opts)?;
                let s = spectrum(&a, &opts.ideal_guard())?;
                let kx = compact_open_lattice(s.space());
                if opts.format == Format::Dot {
                    return lattice_report(&kx, opts, "kx");
                }
                let kx_id = is_lattice_iso(&kx, &s.lattice().to_lattice())?;
                Ok(Output::json(
                    json!({"kx": matrix(&kx.poset()), "kx_is_id": kx_id}),
                    if kx_id { ExitCode::Ok } else { ExitCode::MathFailure },
                ))
            }
            _ => lattice_report(&spec.to_lattice()?, opts, "lattice"),
        }
    })())
}

/// `bck verify [suite]`: runs one suite, or all of them for `"all"`.
pub fn cmd_verify(suite: &str, opts: &Options) -> Output {
    let reports = if suite == "all" {
        run_all(opts.seed)
    } else {
        match run_suite(suite, opts.seed) {
            Ok(r) => vec![r],
            Err(e) => return Output::error(ExitCode::Parse, "unknown_suite", e.to_string()),
        }
    };
    let passed = reports.iter().all(|r| r.passed());
    Output::json(
        json!({"passed": passed, "suites": reports, "known_suites": SUITES}),
        if passed { ExitCode::Ok } else { ExitCode::MathFailure },
    )
}
